//! Truncated q-series with coefficients in Z[ζ]/(ζ^M - 1).
//!
//! Folding every ζ-exponent modulo M is exact for the questions asked
//! here: the residue-class sums F(r, ℓ) of a Laurent polynomial are
//! precisely its image in Z[ζ]/(ζ^ℓ - 1), so Φ_ℓ-divisibility verdicts
//! survive the reduction unchanged, and for M = ℓ² the verdict against
//! Φ_{ℓ²} is decided by exact remainder on the folded representative.
//! This keeps the Theorem-scale crank verifications (truncation ~150)
//! cheap without giving up exactness.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::QcrankError;
use crate::laurent::{cyclotomic_prime_or_square, LaurentPoly};

/// Coefficient in Z[ζ]/(ζ^M - 1): dense vector of length M.
pub type FoldedPoly = Vec<BigInt>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycloSeries {
    pub modulus: usize,
    trunc: usize,
    coeffs: Vec<FoldedPoly>,
}

fn fold_zero(m: usize) -> FoldedPoly {
    vec![BigInt::zero(); m]
}

fn fold_is_zero(p: &FoldedPoly) -> bool {
    p.iter().all(|c| c.is_zero())
}

fn fold_mul(a: &FoldedPoly, b: &FoldedPoly, m: usize) -> FoldedPoly {
    let mut out = fold_zero(m);
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if y.is_zero() {
                continue;
            }
            let k = (i + j) % m;
            out[k] += x * y;
        }
    }
    out
}

impl CycloSeries {
    pub fn zero(modulus: usize, trunc: usize) -> Self {
        CycloSeries {
            modulus,
            trunc,
            coeffs: vec![fold_zero(modulus); trunc + 1],
        }
    }

    pub fn one(modulus: usize, trunc: usize) -> Self {
        let mut s = CycloSeries::zero(modulus, trunc);
        s.coeffs[0][0] = BigInt::one();
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, n: usize) -> &FoldedPoly {
        &self.coeffs[n]
    }

    /// Fold an exact Laurent-coefficient series into the quotient ring.
    pub fn from_qseries(s: &crate::qseries::QSeries, modulus: usize) -> Self {
        CycloSeries {
            modulus,
            trunc: s.trunc(),
            coeffs: (0..=s.trunc())
                .map(|n| s.coeff(n).reduce_exponents_mod(modulus as u64))
                .collect(),
        }
    }

    pub fn mul(&self, rhs: &CycloSeries) -> CycloSeries {
        assert_eq!(self.modulus, rhs.modulus);
        let m = self.modulus;
        let t = self.trunc.min(rhs.trunc);
        let mut coeffs = vec![fold_zero(m); t + 1];
        for i in 0..=t {
            if fold_is_zero(&self.coeffs[i]) {
                continue;
            }
            for j in 0..=(t - i) {
                if fold_is_zero(&rhs.coeffs[j]) {
                    continue;
                }
                let prod = fold_mul(&self.coeffs[i], &rhs.coeffs[j], m);
                for (k, v) in prod.into_iter().enumerate() {
                    coeffs[i + j][k] += v;
                }
            }
        }
        CycloSeries { modulus: m, trunc: t, coeffs }
    }

    /// Π (1 - ζ^{zeta_exp} q^{step·n}) in the quotient ring.
    pub fn pochhammer(zeta_exp: i64, q_step: usize, modulus: usize, trunc: usize) -> CycloSeries {
        let m = modulus;
        let e = zeta_exp.rem_euclid(m as i64) as usize;
        let mut coeffs = vec![fold_zero(m); trunc + 1];
        coeffs[0][0] = BigInt::one();
        let mut n = q_step;
        while n <= trunc {
            for i in (0..=trunc.saturating_sub(n)).rev() {
                if fold_is_zero(&coeffs[i]) {
                    continue;
                }
                let shifted: Vec<BigInt> = (0..m)
                    .map(|k| coeffs[i][(k + m - e) % m].clone())
                    .collect();
                for (k, v) in shifted.into_iter().enumerate() {
                    coeffs[i + n][k] -= v;
                }
            }
            n += q_step;
        }
        CycloSeries { modulus: m, trunc, coeffs }
    }

    pub fn pochhammer_pair(a: i64, q_step: usize, modulus: usize, trunc: usize) -> CycloSeries {
        CycloSeries::pochhammer(a, q_step, modulus, trunc)
            .mul(&CycloSeries::pochhammer(-a, q_step, modulus, trunc))
    }

    pub fn inverse(&self) -> Result<CycloSeries, QcrankError> {
        let m = self.modulus;
        let c0 = &self.coeffs[0];
        let unit = c0[0].is_one() && c0[1..].iter().all(|c| c.is_zero());
        if !unit {
            return Err(QcrankError::NonUnitConstantTerm);
        }
        let t = self.trunc;
        let mut inv = vec![fold_zero(m); t + 1];
        inv[0][0] = BigInt::one();
        for n in 1..=t {
            let mut acc = fold_zero(m);
            for j in 1..=n {
                if fold_is_zero(&self.coeffs[j]) || fold_is_zero(&inv[n - j]) {
                    continue;
                }
                let prod = fold_mul(&self.coeffs[j], &inv[n - j], m);
                for (k, v) in prod.into_iter().enumerate() {
                    acc[k] += v;
                }
            }
            for (k, v) in acc.into_iter().enumerate() {
                inv[n][k] = -v;
            }
        }
        Ok(CycloSeries { modulus: m, trunc: t, coeffs: inv })
    }

    /// Is the folded coefficient at q^n divisible by Φ_ℓ (modulus = ℓ)?
    /// All residue entries must agree.
    pub fn coeff_divisible_by_phi_ell(&self, n: usize) -> bool {
        self.coeffs[n].windows(2).all(|w| w[0] == w[1])
    }

    /// Is the folded coefficient at q^n divisible by Φ_{ℓ²}
    /// (modulus = ℓ²)? Decided by exact remainder of the degree-< M
    /// representative against Φ_{ℓ²}, which divides ζ^M - 1.
    pub fn coeff_divisible_by_phi_ell_squared(&self, n: usize) -> Result<bool, QcrankError> {
        // Validates that the modulus is ℓ² up front.
        cyclotomic_prime_or_square(self.modulus as u64)?;
        let mut rep = LaurentPoly::zero();
        for (e, c) in self.coeffs[n].iter().enumerate() {
            rep.add_term(e as i64, c.clone());
        }
        rep.divisible_by_cyclotomic_power(self.modulus as u64)
    }
}

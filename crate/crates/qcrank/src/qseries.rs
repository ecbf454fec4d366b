//! Truncated power series in q with [`LaurentPoly`] coefficients.
//!
//! A `QSeries` is exact through `q^trunc`. The optional `prefactor_24`
//! records an attached q^{n/24} exponent shift as metadata; it never mixes
//! into coefficient indices. Multiplication adds prefactors, addition
//! requires equal ones, and mixing truncations takes the minimum.

use num_bigint::BigInt;

use crate::error::QcrankError;
use crate::laurent::LaurentPoly;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QSeries {
    trunc: usize,
    coeffs: Vec<LaurentPoly>,
    pub prefactor_24: i64,
}

impl QSeries {
    pub fn new(trunc: usize, coeffs: Vec<LaurentPoly>, prefactor_24: i64) -> Self {
        assert_eq!(coeffs.len(), trunc + 1, "coeffs must have trunc+1 entries");
        QSeries { trunc, coeffs, prefactor_24 }
    }

    pub fn zero(trunc: usize) -> Self {
        QSeries {
            trunc,
            coeffs: vec![LaurentPoly::zero(); trunc + 1],
            prefactor_24: 0,
        }
    }

    pub fn one(trunc: usize) -> Self {
        let mut s = QSeries::zero(trunc);
        s.coeffs[0] = LaurentPoly::one();
        s
    }

    pub fn from_constant(c: LaurentPoly, trunc: usize) -> Self {
        let mut s = QSeries::zero(trunc);
        s.coeffs[0] = c;
        s
    }

    pub fn trunc(&self) -> usize {
        self.trunc
    }

    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, c: LaurentPoly) {
        self.coeffs[n] = c;
    }

    pub fn add_to_coeff(&mut self, n: usize, c: &LaurentPoly) {
        self.coeffs[n] = &self.coeffs[n] + c;
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn truncate(&self, trunc: usize) -> Self {
        let t = trunc.min(self.trunc);
        QSeries {
            trunc: t,
            coeffs: self.coeffs[..=t].to_vec(),
            prefactor_24: self.prefactor_24,
        }
    }

    pub fn add(&self, rhs: &QSeries) -> Result<QSeries, QcrankError> {
        if self.prefactor_24 != rhs.prefactor_24 {
            return Err(QcrankError::PrefactorMismatch(
                self.prefactor_24,
                rhs.prefactor_24,
            ));
        }
        let t = self.trunc.min(rhs.trunc);
        let coeffs = (0..=t)
            .map(|n| &self.coeffs[n] + &rhs.coeffs[n])
            .collect();
        Ok(QSeries { trunc: t, coeffs, prefactor_24: self.prefactor_24 })
    }

    pub fn sub(&self, rhs: &QSeries) -> Result<QSeries, QcrankError> {
        if self.prefactor_24 != rhs.prefactor_24 {
            return Err(QcrankError::PrefactorMismatch(
                self.prefactor_24,
                rhs.prefactor_24,
            ));
        }
        let t = self.trunc.min(rhs.trunc);
        let coeffs = (0..=t)
            .map(|n| &self.coeffs[n] - &rhs.coeffs[n])
            .collect();
        Ok(QSeries { trunc: t, coeffs, prefactor_24: self.prefactor_24 })
    }

    pub fn mul(&self, rhs: &QSeries) -> QSeries {
        let t = self.trunc.min(rhs.trunc);
        let mut coeffs = vec![LaurentPoly::zero(); t + 1];
        for i in 0..=t {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(t - i) {
                if rhs.coeffs[j].is_zero() {
                    continue;
                }
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        QSeries {
            trunc: t,
            coeffs,
            prefactor_24: self.prefactor_24 + rhs.prefactor_24,
        }
    }

    /// Multiply every coefficient by a fixed Laurent polynomial.
    pub fn scale_poly(&self, p: &LaurentPoly) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c * p).collect(),
            prefactor_24: self.prefactor_24,
        }
    }

    /// Multiplicative inverse through truncation. Requires unit constant
    /// term; a non-unit signals an unstripped prefactor upstream.
    pub fn inverse(&self) -> Result<QSeries, QcrankError> {
        if !self.coeffs[0].is_one() {
            return Err(QcrankError::NonUnitConstantTerm);
        }
        let t = self.trunc;
        let mut inv = vec![LaurentPoly::zero(); t + 1];
        inv[0] = LaurentPoly::one();
        for n in 1..=t {
            // c_n = -Σ_{j=1}^{n} f_j · c_{n-j}
            let mut acc = LaurentPoly::zero();
            for j in 1..=n {
                if self.coeffs[j].is_zero() || inv[n - j].is_zero() {
                    continue;
                }
                acc = &acc + &(&self.coeffs[j] * &inv[n - j]);
            }
            inv[n] = -&acc;
        }
        Ok(QSeries { trunc: t, coeffs: inv, prefactor_24: -self.prefactor_24 })
    }

    /// Π_{n ≥ 1, step·n ≤ trunc} (1 - ζ^{zeta_exp} q^{step·n}), exact
    /// through q^trunc.
    pub fn pochhammer(zeta_exp: i64, q_step: usize, trunc: usize) -> QSeries {
        assert!(q_step >= 1);
        let mut coeffs = vec![LaurentPoly::zero(); trunc + 1];
        coeffs[0] = LaurentPoly::one();
        let mut n = q_step;
        while n <= trunc {
            // in place multiply by (1 - ζ^e q^n), high to low
            for m in (0..=trunc.saturating_sub(n)).rev() {
                if coeffs[m].is_zero() {
                    continue;
                }
                let sub = coeffs[m].shift(zeta_exp);
                coeffs[m + n] = &coeffs[m + n] - &sub;
            }
            n += q_step;
        }
        QSeries { trunc, coeffs, prefactor_24: 0 }
    }

    /// Π (1 - ζ^{a} q^{step·n})(1 - ζ^{-a} q^{step·n}); the (ζ^{±a} q)_∞
    /// factor family of the crank products.
    pub fn pochhammer_pair(a: i64, q_step: usize, trunc: usize) -> QSeries {
        QSeries::pochhammer(a, q_step, trunc).mul(&QSeries::pochhammer(-a, q_step, trunc))
    }

    /// Substitute ζ → 1 in every coefficient.
    pub fn specialize_zeta_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(|c| c.eval_at_one()).collect()
    }

    /// Embed into the doubled-exponent (w = ζ^{1/2}) representation.
    pub fn double_zeta_exponents(&self) -> QSeries {
        QSeries {
            trunc: self.trunc,
            coeffs: self.coeffs.iter().map(|c| c.double_exponents()).collect(),
            prefactor_24: self.prefactor_24,
        }
    }

    /// First q-index at which the two series differ, if any, comparing
    /// through the shared truncation. Prefactors must match for equality.
    pub fn first_mismatch(&self, rhs: &QSeries) -> Option<usize> {
        if self.prefactor_24 != rhs.prefactor_24 {
            return Some(0);
        }
        let t = self.trunc.min(rhs.trunc);
        (0..=t).find(|&n| self.coeffs[n] != rhs.coeffs[n])
    }
}

/// Σ_m a_m q^m from integer pairs (m, a_m), convenience for tests and
/// classical sum sides.
pub fn qseries_from_int_terms(
    terms: impl IntoIterator<Item = (usize, i64)>,
    trunc: usize,
) -> QSeries {
    let mut s = QSeries::zero(trunc);
    for (m, a) in terms {
        if m <= trunc {
            s.add_to_coeff(m, &LaurentPoly::constant(BigInt::from(a)));
        }
    }
    s
}

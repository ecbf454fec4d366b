//! Sparse Laurent polynomials in ζ with arbitrary-precision integer
//! coefficients.
//!
//! These are the coefficient objects of every truncated q-series in this
//! crate. The cyclotomic machinery lives here too:
//! [`LaurentPoly::residue_sums`] (class sums of coefficients mod ℓ),
//! [`LaurentPoly::divisible_by_cyclotomic`] (the equidistribution
//! criterion) and [`LaurentPoly::divisible_by_cyclotomic_power`] (exact
//! remainder against Φ_ℓ or Φ_{ℓ²}).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::QcrankError;

/// Laurent polynomial in ζ: a sparse map from integer exponent to nonzero
/// integer coefficient.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(0, c);
        }
        LaurentPoly { terms }
    }

    /// The monomial c·ζ^e.
    pub fn monomial(e: i64, c: impl Into<BigInt>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut p = LaurentPoly::zero();
        for (e, c) in it {
            p.add_term(e, BigInt::from(c));
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&i64, &BigInt)> {
        self.terms.iter()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    pub fn add_term(&mut self, e: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// The ζ ↔ ζ^{-1} involution.
    pub fn negate_exponents(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    /// Multiply by ζ^s.
    pub fn shift(&self, s: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (e + s, c.clone())).collect(),
        }
    }

    /// Double every exponent. Embeds ζ-polynomials into the w = ζ^{1/2}
    /// representation used by the theta-block identity checks.
    pub fn double_exponents(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (2 * e, c.clone())).collect(),
        }
    }

    /// Halve every exponent; every exponent must be even.
    pub fn halve_exponents(&self) -> Self {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    assert!(e % 2 == 0, "halve_exponents on odd exponent {e}");
                    (e / 2, c.clone())
                })
                .collect(),
        }
    }

    /// Invariant under ζ → ζ^{-1}?
    pub fn is_palindromic(&self) -> bool {
        self.terms
            .iter()
            .all(|(e, c)| self.terms.get(&(-e)).map(|d| d == c).unwrap_or(false))
    }

    /// Value at ζ = 1, i.e. the plain coefficient sum.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(e, k)| (*e, k * c)).collect(),
        }
    }

    /// Reduce exponents modulo m, folding coefficients; result supported
    /// on [0, m).
    pub fn reduce_exponents_mod(&self, m: u64) -> Vec<BigInt> {
        let m_i = m as i64;
        let mut out = vec![BigInt::zero(); m as usize];
        for (e, c) in &self.terms {
            let r = e.rem_euclid(m_i) as usize;
            out[r] += c;
        }
        out
    }

    /// Sum of coefficients over each residue class of the exponent mod ℓ.
    pub fn residue_sums(&self, ell: u64) -> Result<Vec<BigInt>, QcrankError> {
        if !is_prime(ell) {
            return Err(QcrankError::NotPrime(ell));
        }
        Ok(self.reduce_exponents_mod(ell))
    }

    /// The equidistribution criterion: Φ_ℓ(ζ) divides `self` iff all
    /// residue-class coefficient sums agree.
    pub fn divisible_by_cyclotomic(&self, ell: u64) -> Result<bool, QcrankError> {
        let sums = self.residue_sums(ell)?;
        Ok(sums.windows(2).all(|w| w[0] == w[1]))
    }

    /// Exact divisibility by Φ_m for m = ℓ or ℓ², decided by polynomial
    /// remainder after clearing negative exponents.
    pub fn divisible_by_cyclotomic_power(&self, m: u64) -> Result<bool, QcrankError> {
        let phi = cyclotomic_prime_or_square(m)?;
        if self.is_zero() {
            return Ok(true);
        }
        // Clear negative exponents: ζ^s·f with Φ_m ∤ ζ, so divisibility
        // is unaffected.
        let shift = -self.min_exp().unwrap_or(0).min(0);
        let cleared = self.shift(shift);
        Ok(poly_rem_is_zero(&cleared, &phi))
    }

    /// Coefficient vector on [min_exp, max_exp], dense. Empty for zero.
    fn dense(&self) -> (i64, Vec<BigInt>) {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => {
                let mut v = vec![BigInt::zero(); (hi - lo + 1) as usize];
                for (e, c) in &self.terms {
                    v[(e - lo) as usize] = c.clone();
                }
                (lo, v)
            }
            _ => (0, Vec::new()),
        }
    }

    pub fn max_abs_coeff(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Φ_m(ζ) for m prime (1 + ζ + … + ζ^{ℓ-1}) or m = ℓ² (1 + ζ^ℓ + … +
/// ζ^{ℓ(ℓ-1)}).
pub fn cyclotomic_prime_or_square(m: u64) -> Result<LaurentPoly, QcrankError> {
    if is_prime(m) {
        return Ok(LaurentPoly {
            terms: (0..m as i64).map(|e| (e, BigInt::one())).collect(),
        });
    }
    let r = (m as f64).sqrt().round() as u64;
    if r * r == m && is_prime(r) {
        return Ok(LaurentPoly {
            terms: (0..r as i64)
                .map(|j| (j * r as i64, BigInt::one()))
                .collect(),
        });
    }
    Err(QcrankError::UnsupportedCyclotomicIndex(m))
}

/// Remainder of `f` (non-negative exponents) divided by monic `g` is zero?
fn poly_rem_is_zero(f: &LaurentPoly, g: &LaurentPoly) -> bool {
    let (f_lo, mut fv) = f.dense();
    debug_assert!(f_lo >= 0);
    let (_, gv) = g.dense();
    let gd = gv.len() - 1;
    debug_assert!(gv[gd].is_one());
    // Leading zeros below f_lo are fine; dense vector starts at f_lo, and
    // since g has nonzero constant term the low offset never divides out.
    if f_lo > 0 {
        let mut padded = vec![BigInt::zero(); f_lo as usize];
        padded.extend(fv);
        fv = padded;
    }
    if fv.len() <= gd {
        return fv.iter().all(|c| c.is_zero());
    }
    for i in (gd..fv.len()).rev() {
        if fv[i].is_zero() {
            continue;
        }
        let q = fv[i].clone();
        for (j, gc) in gv.iter().enumerate() {
            let idx = i - gd + j;
            let delta = gc * &q;
            fv[idx] -= delta;
        }
        debug_assert!(fv[i].is_zero());
    }
    fv[..gd].iter().all(|c| c.is_zero())
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        // Dense convolution; ζ-support is an interval with few gaps in
        // practice, and BTreeMap insertion per product term is slower.
        let (alo, av) = self.dense();
        let (blo, bv) = rhs.dense();
        let mut out = vec![BigInt::zero(); av.len() + bv.len() - 1];
        for (i, a) in av.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in bv.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] += a * b;
            }
        }
        let lo = alo + blo;
        let mut terms = BTreeMap::new();
        for (i, c) in out.into_iter().enumerate() {
            if !c.is_zero() {
                terms.insert(lo + i as i64, c);
            }
        }
        LaurentPoly { terms }
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if first {
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = if first { c.clone() } else { c.abs() };
            match e {
                0 => write!(f, "{a}")?,
                1 if a.is_one() => write!(f, "z")?,
                1 => write!(f, "{a}*z")?,
                _ if a.is_one() => write!(f, "z^{e}")?,
                _ => write!(f, "{a}*z^{e}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_product() {
        // (1 - ζ)(1 - ζ^{-1}) = 2 - ζ - ζ^{-1}
        let f = LaurentPoly::from_terms([(0, 1), (1, -1)]);
        let g = LaurentPoly::from_terms([(0, 1), (-1, -1)]);
        let expect = LaurentPoly::from_terms([(0, 2), (1, -1), (-1, -1)]);
        assert_eq!(&f * &g, expect);
    }

    #[test]
    fn additive_inverse() {
        let f = LaurentPoly::from_terms([(-3, 5), (0, 2), (7, -4)]);
        assert!((&f + &-&f).is_zero());
    }

    #[test]
    fn exponent_flip() {
        let f = LaurentPoly::from_terms([(2, 3), (-1, 1)]);
        let expect = LaurentPoly::from_terms([(-2, 3), (1, 1)]);
        assert_eq!(f.negate_exponents(), expect);
    }

    #[test]
    fn residue_sums_examples() {
        let f = LaurentPoly::from_terms([(0, 2), (1, 3), (6, 1)]);
        let sums = f.residue_sums(5).unwrap();
        let expect: Vec<BigInt> = [2, 4, 0, 0, 0].iter().map(|&x| BigInt::from(x)).collect();
        assert_eq!(sums, expect);

        let phi5 = LaurentPoly::from_terms([(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert!(phi5
            .residue_sums(5)
            .unwrap()
            .iter()
            .all(|s| *s == BigInt::one()));
    }

    #[test]
    fn residue_sums_rejects_composite() {
        let f = LaurentPoly::one();
        assert!(f.residue_sums(6).is_err());
    }

    #[test]
    fn cyclotomic_divisibility() {
        let phi5 = LaurentPoly::from_terms([(0, 1), (1, 1), (2, 1), (3, 1), (4, 1)]);
        assert!(phi5.divisible_by_cyclotomic(5).unwrap());
        let f = LaurentPoly::from_terms([(0, 1), (1, 1)]);
        assert!(!f.divisible_by_cyclotomic(5).unwrap());
        // ζ^{-1}·Φ_3
        let g = LaurentPoly::from_terms([(-1, 1), (0, 1), (1, 1)]);
        assert!(g.divisible_by_cyclotomic(3).unwrap());
    }

    #[test]
    fn cyclotomic_square_divisibility() {
        let phi25 = cyclotomic_prime_or_square(25).unwrap();
        assert!(phi25.divisible_by_cyclotomic_power(25).unwrap());
        let phi5 = cyclotomic_prime_or_square(5).unwrap();
        assert!(!phi5.divisible_by_cyclotomic_power(25).unwrap());
        assert!(phi5.divisible_by_cyclotomic_power(5).unwrap());
        assert!(cyclotomic_prime_or_square(10).is_err());
    }

    #[test]
    fn remainder_route_matches_residue_route() {
        // Spot-check the two implementations on fixed values; the
        // randomized agreement suite lives in the integration tests.
        for f in [
            LaurentPoly::from_terms([(-2, 7), (0, 7), (3, 7), (5, 7), (11, 7), (14, 7)]),
            LaurentPoly::from_terms([(0, 1), (1, 2), (2, 1)]),
            LaurentPoly::zero(),
        ] {
            for ell in [3u64, 5, 7] {
                assert_eq!(
                    f.divisible_by_cyclotomic(ell).unwrap(),
                    f.divisible_by_cyclotomic_power(ell).unwrap(),
                    "mismatch for {f} at {ell}"
                );
            }
        }
    }
}

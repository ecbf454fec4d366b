//! The building-block series η, θ and θ* in stripped form.
//!
//! A stripped form is a classical product with its fractional q-power
//! pulled out into `prefactor_24` and any half-integer ζ prefactor
//! (ζ^{a/2} ± ζ^{-a/2}) recorded symbolically. Sum sides are exposed as
//! independent verification targets; the half-integer sum exponents are
//! handled by working in w = ζ^{1/2} with doubled exponents, and only
//! inside the verification helpers.

use crate::laurent::LaurentPoly;
use crate::qseries::QSeries;

/// Symbolic ζ prefactor of a stripped classical form.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZetaPrefactor {
    None,
    /// ζ^{a/2} - ζ^{-a/2}
    HalfDifference(i64),
    /// ζ^{a/2} + ζ^{-a/2}
    HalfSum(i64),
}

impl ZetaPrefactor {
    /// The prefactor as a Laurent polynomial in w = ζ^{1/2}.
    pub fn as_w_poly(&self) -> LaurentPoly {
        match *self {
            ZetaPrefactor::None => LaurentPoly::one(),
            ZetaPrefactor::HalfDifference(a) => LaurentPoly::from_terms([(a, 1), (-a, -1)]),
            ZetaPrefactor::HalfSum(a) => LaurentPoly::from_terms([(a, 1), (-a, 1)]),
        }
    }
}

#[derive(Clone, Debug)]
pub struct StrippedForm {
    pub series: QSeries,
    pub prefactor_24: i64,
    pub zeta_prefactor: ZetaPrefactor,
}

impl StrippedForm {
    /// The full object in w = ζ^{1/2} land: prefactor polynomial times the
    /// series with doubled ζ-exponents. The q^{prefactor_24/24} shift stays
    /// metadata on the result.
    pub fn total_w(&self) -> QSeries {
        let mut s = self
            .series
            .double_zeta_exponents()
            .scale_poly(&self.zeta_prefactor.as_w_poly());
        s.prefactor_24 = self.prefactor_24;
        s
    }
}

/// Kronecker symbol (d|n) for the two characters used here.
/// d = 12: +1 for n ≡ ±1 (mod 12), -1 for n ≡ ±5 (mod 12), else 0.
/// d = -4: +1 for n ≡ 1 (mod 4), -1 for n ≡ 3 (mod 4), else 0.
pub fn kronecker_symbol(d: i64, n: i64) -> i64 {
    match d {
        12 => match n.rem_euclid(12) {
            1 | 11 => 1,
            5 | 7 => -1,
            _ => 0,
        },
        -4 => match n.rem_euclid(4) {
            1 => 1,
            3 => -1,
            _ => 0,
        },
        _ => panic!("kronecker_symbol supports d = 12 and d = -4 only"),
    }
}

/// η stripped: series Π(1-q^n), prefactor q^{1/24}. Construction computes
/// both the product and the Kronecker-symbol sum and asserts they agree.
pub fn eta_stripped(trunc: usize) -> StrippedForm {
    let product = QSeries::pochhammer(0, 1, trunc);
    let sum = eta_sum_side(trunc);
    assert!(
        product.first_mismatch(&sum).is_none(),
        "eta product and pentagonal sum disagree"
    );
    StrippedForm {
        series: product,
        prefactor_24: 1,
        zeta_prefactor: ZetaPrefactor::None,
    }
}

/// Σ_{n ≥ 1} (12|n) q^{(n²-1)/24} through q^trunc.
pub fn eta_sum_side(trunc: usize) -> QSeries {
    let mut s = QSeries::zero(trunc);
    let mut n: i64 = 1;
    loop {
        let e = (n * n - 1) / 24;
        if e > trunc as i64 {
            break;
        }
        let chi = kronecker_symbol(12, n);
        if chi != 0 {
            s.add_to_coeff(e as usize, &LaurentPoly::constant(chi.into()));
        }
        n += 1;
    }
    s
}

/// θ(az) stripped: Π(1-q^n)(1-ζ^a q^n)(1-ζ^{-a} q^n), prefactor q^{1/8}
/// and ζ^{a/2} - ζ^{-a/2}.
pub fn theta_stripped(a: i64, trunc: usize) -> StrippedForm {
    assert!(a >= 1);
    let series = QSeries::pochhammer(0, 1, trunc).mul(&QSeries::pochhammer_pair(a, 1, trunc));
    StrippedForm {
        series: series.truncate(trunc),
        prefactor_24: 3,
        zeta_prefactor: ZetaPrefactor::HalfDifference(a),
    }
}

/// Sum side of θ(az) in w-land: Σ_n (-4|n) w^{an} q^{(n²-1)/8}.
pub fn theta_sum_side_w(a: i64, trunc: usize) -> QSeries {
    let mut s = QSeries::zero(trunc);
    s.prefactor_24 = 3;
    for sign in [1i64, -1] {
        let mut n: i64 = sign;
        loop {
            let e = (n * n - 1) / 8;
            if e > trunc as i64 {
                break;
            }
            let chi = kronecker_symbol(-4, n);
            if chi != 0 {
                s.add_to_coeff(e as usize, &LaurentPoly::monomial(a * n, chi));
            }
            n += sign;
        }
    }
    s
}

/// θ*(az) stripped: Π(1-q^n)(1+ζ^a q^n)(1+ζ^{-a} q^n)
/// (1-ζ^{2a} q^{2n-1})(1-ζ^{-2a} q^{2n-1}), prefactor q^{1/24} and
/// ζ^{a/2} + ζ^{-a/2}. The odd-step factors are generated directly.
pub fn theta_star_stripped(a: i64, trunc: usize) -> StrippedForm {
    assert!(a >= 1);
    let mut series = QSeries::pochhammer(0, 1, trunc);
    // (1 + ζ^{±a} q^n) = pochhammer with negated coefficient sign:
    // Π(1+ζ^a q^n) = Π(1-(-ζ^a)q^n) has no clean monomial form, so build
    // it as the pochhammer of -ζ^a via a dedicated loop.
    series = series.mul(&plus_pochhammer(a, trunc));
    series = series.mul(&plus_pochhammer(-a, trunc));
    series = series.mul(&odd_step_pochhammer(2 * a, trunc));
    series = series.mul(&odd_step_pochhammer(-2 * a, trunc));
    StrippedForm {
        series,
        prefactor_24: 1,
        zeta_prefactor: ZetaPrefactor::HalfSum(a),
    }
}

/// Π_{n≥1} (1 + ζ^e q^n).
pub(crate) fn plus_pochhammer(e: i64, trunc: usize) -> QSeries {
    let mut coeffs = vec![LaurentPoly::zero(); trunc + 1];
    coeffs[0] = LaurentPoly::one();
    let mut s = QSeries::new(trunc, coeffs, 0);
    for n in 1..=trunc {
        let mut next = s.clone();
        for m in (0..=trunc - n).rev() {
            if s.coeff(m).is_zero() {
                continue;
            }
            let add = s.coeff(m).shift(e);
            next.add_to_coeff(m + n, &add);
        }
        s = next;
    }
    s
}

/// Π_{n≥1} (1 - ζ^e q^{2n-1}).
pub(crate) fn odd_step_pochhammer(e: i64, trunc: usize) -> QSeries {
    let mut coeffs = vec![LaurentPoly::zero(); trunc + 1];
    coeffs[0] = LaurentPoly::one();
    let mut s = QSeries::new(trunc, coeffs, 0);
    let mut n = 1usize;
    while n <= trunc {
        let mut next = s.clone();
        for m in (0..=trunc - n).rev() {
            if s.coeff(m).is_zero() {
                continue;
            }
            let sub = -&s.coeff(m).shift(e);
            next.add_to_coeff(m + n, &sub);
        }
        s = next;
        n += 2;
    }
    s
}

/// Sum side of θ*(az) in w-land: Σ_n (12|n) w^{an} q^{(n²-1)/24}.
pub fn theta_star_sum_side_w(a: i64, trunc: usize) -> QSeries {
    let mut s = QSeries::zero(trunc);
    s.prefactor_24 = 1;
    for sign in [1i64, -1] {
        let mut n: i64 = sign;
        loop {
            let e = (n * n - 1) / 24;
            if e > trunc as i64 {
                break;
            }
            let chi = kronecker_symbol(12, n);
            if chi != 0 {
                s.add_to_coeff(e as usize, &LaurentPoly::monomial(a * n, chi));
            }
            n += sign;
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    #[test]
    fn kronecker_values() {
        assert_eq!(kronecker_symbol(12, 1), 1);
        assert_eq!(kronecker_symbol(12, 5), -1);
        assert_eq!(kronecker_symbol(12, 6), 0);
        assert_eq!(kronecker_symbol(-4, 3), -1);
        assert_eq!(kronecker_symbol(-4, 1), 1);
        assert_eq!(kronecker_symbol(-4, 2), 0);
        // (12|n) is even in n
        for n in 1..40 {
            assert_eq!(kronecker_symbol(12, n), kronecker_symbol(12, -n));
        }
    }

    #[test]
    fn eta_expansion() {
        // 1 - q - q² + q⁵ + q⁷ through q⁷
        let eta = eta_stripped(7);
        let got = eta.series.specialize_zeta_one();
        let expect: Vec<BigInt> = [1, -1, -1, 0, 0, 1, 0, 1]
            .iter()
            .map(|&x| BigInt::from(x))
            .collect();
        assert_eq!(got, expect);
        assert_eq!(eta.prefactor_24, 1);
    }

    #[test]
    fn theta_q1_coefficient() {
        // [q¹] θ stripped at a=1 is -(1 + ζ + ζ^{-1})
        let th = theta_stripped(1, 2);
        let expect = LaurentPoly::from_terms([(0, -1), (1, -1), (-1, -1)]);
        assert_eq!(th.series.coeff(1), &expect);
        // a=2 is the same with ζ → ζ²
        let th2 = theta_stripped(2, 2);
        let expect2 = LaurentPoly::from_terms([(0, -1), (2, -1), (-2, -1)]);
        assert_eq!(th2.series.coeff(1), &expect2);
    }

    #[test]
    fn jacobi_triple_product() {
        for a in [1i64, 2, 3] {
            let th = theta_stripped(a, 12);
            assert!(
                th.total_w().first_mismatch(&theta_sum_side_w(a, 12)).is_none(),
                "triple product failed at a={a}"
            );
        }
    }

    #[test]
    fn theta_star_q1_coefficient() {
        // -1 + ζ + ζ^{-1} - ζ² - ζ^{-2}
        let ts = theta_star_stripped(1, 1);
        assert_eq!(ts.series.coeff(0), &LaurentPoly::one());
        let expect =
            LaurentPoly::from_terms([(0, -1), (1, 1), (-1, 1), (2, -1), (-2, -1)]);
        assert_eq!(ts.series.coeff(1), &expect);
    }

    #[test]
    fn theta_star_sum_side() {
        for a in [1i64, 2, 3] {
            let ts = theta_star_stripped(a, 12);
            assert!(
                ts.total_w()
                    .first_mismatch(&theta_star_sum_side_w(a, 12))
                    .is_none(),
                "theta* sum side failed at a={a}"
            );
        }
    }

    #[test]
    fn theta_star_is_eta_theta_quotient() {
        // θ*(az) = η·θ(2az)/θ(az) as stripped series through q^15:
        // series(θ*) = series(η)·series(θ_2a)·inverse(series(θ_a))
        // with the prefactors 1 = 1 + 3 - 3 and
        // (w^{2a}-w^{-2a})/(w^a-w^{-a}) = w^a + w^{-a} checked implicitly
        // in w-land.
        // Cleared of denominators: θ*·θ_a = η·θ_2a.
        for a in [1i64, 2, 3] {
            let trunc = 15;
            let tha = theta_stripped(a, trunc).total_w();
            let lhs = theta_star_stripped(a, trunc).total_w().mul(&tha);
            let eta = eta_stripped(trunc).total_w();
            let rhs = eta.mul(&theta_stripped(2 * a, trunc).total_w());
            assert!(lhs.first_mismatch(&rhs).is_none(), "quotient failed at a={a}");
        }
    }

    #[test]
    fn theta_at_zeta_one_is_eta_cubed() {
        let th = theta_stripped(1, 10);
        let got = th.series.specialize_zeta_one();
        let eta = QSeries::pochhammer(0, 1, 10);
        let cubed = eta.mul(&eta).mul(&eta).specialize_zeta_one();
        assert_eq!(got, cubed);
    }
}

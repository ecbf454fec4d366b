//! Crank statistics and crank generating functions for colored partitions.
//!
//! - `crank_statistic` is the Andrews–Garvan crank of a single partition:
//!   the largest part when there are no 1s, otherwise the number of parts
//!   larger than the number of 1s, minus the number of 1s.
//! - `crank_counts_bruteforce` tallies the crank over all partitions of n,
//!   with the conventional three-entry table at n = 1.
//! - `crank_series` is the two-variable generating function
//!   Σ M(m,n) ζ^{am} q^n = (q)_∞ / (ζ^{±a} q)_∞ as an exact truncated
//!   series; the statistic is normative only where the series says it is
//!   (series-first semantics: the n = 1 convention lives in the series and
//!   the table, not in per-partition tallies).
//! - `CrankSpec` + `colored_crank_series` give the k-colored cranks
//!   (q)_∞^{δ_odd(k)} / Π_i (ζ^{±a_i} q)_∞ with the first-definition ladder
//!   (k, k-2, …), the second-definition ladder (k+2, k-2, …), or custom
//!   strictly decreasing weights.
//! - `ckj_series` extends this to partitions where j of the colors use only
//!   even parts: the u-weight factors run over q-step-2 Pochhammer pairs.

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::error::QcrankError;
use crate::laurent::LaurentPoly;
use crate::qseries::QSeries;

/// δ_odd(k) = (1 - (-1)^k)/2, the indicator that k is odd.
pub fn delta_odd(k: u32) -> u32 {
    k % 2
}

/// Number of weights attached to a k-colored crank: (k + δ_odd(k))/2.
pub fn weight_count(k: u32) -> usize {
    ((k + delta_odd(k)) / 2) as usize
}

/// Andrews–Garvan crank of a non-empty partition (parts in any order).
///
/// With ω = number of 1s and μ = number of parts larger than ω, the crank
/// is the largest part if ω = 0 and μ - ω otherwise.
pub fn crank_statistic(lambda: &[u64]) -> Result<i64, QcrankError> {
    if lambda.is_empty() {
        return Err(QcrankError::EmptyPartition);
    }
    let omega = lambda.iter().filter(|&&p| p == 1).count() as u64;
    if omega == 0 {
        Ok(*lambda.iter().max().unwrap() as i64)
    } else {
        let mu = lambda.iter().filter(|&&p| p > omega).count() as i64;
        Ok(mu - omega as i64)
    }
}

/// Visit every partition of n (parts non-increasing) exactly once.
pub fn for_each_partition(n: u64, f: &mut impl FnMut(&[u64])) {
    fn rec(remaining: u64, max_part: u64, parts: &mut Vec<u64>, f: &mut impl FnMut(&[u64])) {
        if remaining == 0 {
            f(parts);
            return;
        }
        let top = remaining.min(max_part);
        for p in (1..=top).rev() {
            parts.push(p);
            rec(remaining - p, p, parts, f);
            parts.pop();
        }
    }
    let mut parts = Vec::new();
    rec(n, n, &mut parts, f);
}

/// Number of partitions of n by direct enumeration (test-scale oracle).
pub fn partition_count(n: u64) -> u64 {
    if n == 0 {
        return 1;
    }
    let mut count = 0u64;
    for_each_partition(n, &mut |_| count += 1);
    count
}

/// Crank value counts M(m, n) for a fixed n.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankTable {
    pub n: i64,
    pub counts: BTreeMap<i64, u64>,
}

impl CrankTable {
    pub fn count(&self, m: i64) -> u64 {
        self.counts.get(&m).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Σ_m M(m, n) ζ^m as a Laurent polynomial.
    pub fn as_poly(&self) -> LaurentPoly {
        let mut p = LaurentPoly::zero();
        for (&m, &c) in &self.counts {
            p.add_term(m, BigInt::from(c));
        }
        p
    }

    /// Totals of M(m, n) over crank residue classes mod ell.
    pub fn residue_sums(&self, ell: u64) -> Vec<u64> {
        let mut sums = vec![0u64; ell as usize];
        for (&m, &c) in &self.counts {
            sums[m.rem_euclid(ell as i64) as usize] += c;
        }
        sums
    }
}

/// Tally the crank over all partitions of n. For n = 1 the table is the
/// conventional M(-1,1) = M(0,1) = M(1,1) = 1; for 2 ≤ n ≤ 40 it is the
/// literal enumeration.
pub fn crank_counts_bruteforce(n: i64) -> Result<CrankTable, QcrankError> {
    if n == 1 {
        let counts = BTreeMap::from([(-1, 1), (0, 1), (1, 1)]);
        return Ok(CrankTable { n, counts });
    }
    if !(2..=40).contains(&n) {
        return Err(QcrankError::BruteForceRange(n));
    }
    let mut counts = BTreeMap::new();
    for_each_partition(n as u64, &mut |parts| {
        let c = crank_statistic(parts).expect("partitions of n ≥ 2 are non-empty");
        *counts.entry(c).or_insert(0u64) += 1;
    });
    Ok(CrankTable { n, counts })
}

/// The crank generating function with ζ → ζ^a, in the stripped product form
/// (q)_∞ / (ζ^{±a} q)_∞, exact through q^trunc.
pub fn crank_series(a: u32, trunc: usize) -> QSeries {
    let numerator = QSeries::pochhammer(0, 1, trunc);
    let denominator = QSeries::pochhammer_pair(a as i64, 1, trunc);
    numerator.mul(&denominator.inverse().expect("Pochhammer products are unit series"))
}

/// Which ladder produced the weights of a `CrankSpec`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CrankVariant {
    /// (k, k-2, …, 2-δ_odd(k))
    FirstDef,
    /// (k+2, k-2, k-4, …, 2-δ_odd(k))
    SecondDef,
    Custom,
}

/// A k-colored crank: k colors and strictly decreasing positive weights
/// a_1 > a_2 > … > a_{(k+δ_odd(k))/2}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrankSpec {
    pub k: u32,
    pub weights: Vec<u32>,
    pub variant: CrankVariant,
}

impl CrankSpec {
    /// Custom weights, canonicalized to strictly decreasing order.
    pub fn new(k: u32, mut weights: Vec<u32>) -> Result<Self, QcrankError> {
        let expected = weight_count(k);
        if weights.len() != expected {
            return Err(QcrankError::WeightCount { k, expected, got: weights.len() });
        }
        weights.sort_unstable_by(|x, y| y.cmp(x));
        let distinct_positive =
            weights.iter().all(|&w| w > 0) && weights.windows(2).all(|w| w[0] > w[1]);
        if !distinct_positive {
            return Err(QcrankError::BadWeights(weights));
        }
        Ok(CrankSpec { k, weights, variant: CrankVariant::Custom })
    }

    /// The ladder (k, k-2, …, 2-δ_odd(k)).
    pub fn first_def(k: u32) -> Self {
        let weights = (0..weight_count(k)).map(|i| k - 2 * i as u32).collect();
        CrankSpec { k, weights, variant: CrankVariant::FirstDef }
    }

    /// The ladder (k+2, k-2, k-4, …, 2-δ_odd(k)).
    pub fn second_def(k: u32) -> Self {
        let weights = (0..weight_count(k))
            .map(|i| if i == 0 { k + 2 } else { k - 2 * i as u32 })
            .collect();
        CrankSpec { k, weights, variant: CrankVariant::SecondDef }
    }
}

/// True iff some prime factor of n is ≡ 2 (mod 3).
fn has_prime_factor_2_mod_3(mut n: u32) -> bool {
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            if p % 3 == 2 {
                return true;
            }
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    n > 1 && n % 3 == 2
}

/// The paper-default weight ladder: second definition when k + 14 has a
/// prime factor ≡ 2 (mod 3), first definition otherwise.
pub fn default_weights(k: u32) -> CrankSpec {
    if has_prime_factor_2_mod_3(k + 14) {
        CrankSpec::second_def(k)
    } else {
        CrankSpec::first_def(k)
    }
}

/// The stripped k-colored crank series
/// (q)_∞^{δ_odd(k)} / Π_i (ζ^{±a_i} q)_∞, exact through q^trunc.
pub fn colored_crank_series(spec: &CrankSpec, trunc: usize) -> QSeries {
    let mut denominator = QSeries::one(trunc);
    for &a in &spec.weights {
        denominator = denominator.mul(&QSeries::pochhammer_pair(a as i64, 1, trunc));
    }
    let inv = denominator.inverse().expect("Pochhammer products are unit series");
    if delta_odd(spec.k) == 1 {
        QSeries::pochhammer(0, 1, trunc).mul(&inv)
    } else {
        inv
    }
}

/// Weighted crank Σ_i a_i · crank(λ^{(i)}) over the first
/// (k + δ_odd(k))/2 colors of a k-colored partition. Empty colors
/// contribute 0; a size-1 color contributes via its literal crank (the
/// n = 1 convention is a property of the series, not of single tuples).
pub fn colored_crank_statistic(
    colored: &[Vec<u64>],
    spec: &CrankSpec,
) -> Result<i64, QcrankError> {
    if colored.len() != spec.k as usize {
        return Err(QcrankError::ColorCount { k: spec.k, got: colored.len() });
    }
    let mut total = 0i64;
    for (lambda, &a) in colored.iter().zip(&spec.weights) {
        if !lambda.is_empty() {
            total += a as i64 * crank_statistic(lambda)?;
        }
    }
    Ok(total)
}

/// Default weights for the (k, j)-colored crank of `ckj_series`: z-weights
/// (k, k-2, …, 2-δ_odd(k)) and u-weights (2j+k, 2j+k-2, …, j+k+2-δ_odd(j)).
pub fn default_ckj_weights(k: u32, j: u32) -> (Vec<u32>, Vec<u32>) {
    let z = CrankSpec::first_def(k).weights;
    let u = (0..weight_count(j)).map(|i| 2 * j + k - 2 * i as u32).collect();
    (z, u)
}

/// The stripped crank series for k + j colored partitions where j colors
/// take only even parts:
/// (q)_∞^{δ_odd(k)} (q²; q²)_∞^{δ_odd(j)}
///   / (Π_i (ζ^{±a_i} q)_∞ · Π_m (ζ^{±u_m} q²; q²)_∞).
pub fn ckj_series(
    k: u32,
    j: u32,
    z_weights: &[u32],
    u_weights: &[u32],
    trunc: usize,
) -> Result<QSeries, QcrankError> {
    if z_weights.len() != weight_count(k) {
        return Err(QcrankError::WeightCount {
            k,
            expected: weight_count(k),
            got: z_weights.len(),
        });
    }
    if u_weights.len() != weight_count(j) {
        return Err(QcrankError::WeightCount {
            k: j,
            expected: weight_count(j),
            got: u_weights.len(),
        });
    }
    let mut denominator = QSeries::one(trunc);
    for &a in z_weights {
        denominator = denominator.mul(&QSeries::pochhammer_pair(a as i64, 1, trunc));
    }
    for &u in u_weights {
        denominator = denominator.mul(&QSeries::pochhammer_pair(u as i64, 2, trunc));
    }
    let mut series = denominator.inverse().expect("Pochhammer products are unit series");
    if delta_odd(k) == 1 {
        series = series.mul(&QSeries::pochhammer(0, 1, trunc));
    }
    if delta_odd(j) == 1 {
        series = series.mul(&QSeries::pochhammer(0, 2, trunc));
    }
    Ok(series)
}

//! Congruence bookkeeping and verification for colored partitions.
//!
//! - `delta_k_ell` solves 24δ ≡ k (mod ℓ), the residue that an
//!   ℓ-congruence for p_k must live on.
//! - `theorem_c_progressions` enumerates the known congruence families for
//!   a color count k — the theta-block families k + h = ℓt with
//!   h ∈ {4, 6, 8, 10, 14, 26} under their side conditions, plus the
//!   trivial families k ≡ 0, ℓ-1, ℓ-3 (mod ℓ) — each classified as
//!   generic, singular, or trivial.
//! - `verify_pk_congruence` / `scan_pkj_congruences` are mod-ℓ coefficient
//!   scans over 1/(q)_∞^k and 1/((q)_∞^k (q²;q²)_∞^j), cheap enough to run
//!   to n ~ 400; the scan diffs against the bundled tables.
//! - `verify_crank_divisibility` checks Φ_ℓ (or Φ_{ℓ²}) divisibility of
//!   targeted crank series coefficients, with an exact Laurent path and a
//!   folded Z[ζ]/(ζ^M - 1) fast path that agree by construction.

use crate::cranks::{self, CrankSpec};
use crate::cyclo::CycloSeries;
use crate::error::QcrankError;
use crate::laurent::is_prime;
use crate::qseries::QSeries;
use crate::tables;

/// The unique δ ∈ [0, ℓ) with 24δ ≡ k (mod ℓ), for primes ℓ ≥ 5.
pub fn delta_k_ell(k: u32, ell: u64) -> Result<u64, QcrankError> {
    if ell == 2 || ell == 3 {
        return Err(QcrankError::SmallPrime);
    }
    if !is_prime(ell) {
        return Err(QcrankError::NotPrime(ell));
    }
    // 24^{ℓ-2} ≡ 24^{-1} (mod ℓ) by Fermat.
    let inv24 = mod_pow(24 % ell, ell - 2, ell);
    Ok((k as u64 % ell) * inv24 % ell)
}

fn mod_pow(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        exp >>= 1;
    }
    acc
}

/// Which family a congruence progression belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    /// k + h = ℓt with h ∈ {4, 6, 8, 10, 14, 26}.
    ThetaBlock(u8),
    /// k ≡ 0 (mod ℓ): the Freshman's-Dream family.
    TrivialZero,
    /// k ≡ ℓ-1 (mod ℓ): the pentagonal-number-theorem family.
    TrivialEllMinus1,
    /// k ≡ ℓ-3 (mod ℓ): the Jacobi-triple-product family.
    TrivialEllMinus3,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Classification {
    Generic,
    Singular,
    TrivialFamily,
}

/// One known congruence p_k(ℓn + δ) ≡ 0 (mod ℓ).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CongruenceProgression {
    pub k: u32,
    pub ell: u64,
    pub family: Family,
    /// t in k + h = ℓt for theta-block families; 0 for trivial families.
    pub t: u32,
    pub delta: u64,
    pub classification: Classification,
}

impl CongruenceProgression {
    /// The theta-block h, if this is a theta-block progression.
    pub fn h(&self) -> Option<u8> {
        match self.family {
            Family::ThetaBlock(h) => Some(h),
            _ => None,
        }
    }
}

/// The singular-progression dichotomy: singular iff
/// (i) some odd prime p ≡ 2 (mod 3) divides k+14, ℓ ≡ 2 (mod 3), and
///     ℓ | k+8; or
/// (ii) ℓ ≡ 11 (mod 12) and ℓ | k+26.
pub fn is_singular(k: u32, ell: u64) -> bool {
    let cond_i = has_odd_prime_factor_2_mod_3(k as u64 + 14)
        && ell % 3 == 2
        && (k as u64 + 8) % ell == 0;
    let cond_ii = ell % 12 == 11 && (k as u64 + 26) % ell == 0;
    cond_i || cond_ii
}

fn has_odd_prime_factor_2_mod_3(mut n: u64) -> bool {
    while n % 2 == 0 {
        n /= 2;
    }
    let mut p = 3;
    while p * p <= n {
        if n % p == 0 {
            if p % 3 == 2 {
                return true;
            }
            while n % p == 0 {
                n /= p;
            }
        }
        p += 2;
    }
    n > 1 && n % 3 == 2
}

/// Whether the Theorem-c side condition holds for the family h at prime ℓ:
/// h ∈ {4,8,14} needs ℓ ≡ 2 (mod 3); h ∈ {6,10} needs ℓ ≡ 3 (mod 4);
/// h = 26 needs ℓ ≡ 11 (mod 12).
pub fn family_side_condition(h: u8, ell: u64) -> bool {
    match h {
        4 | 8 | 14 => ell % 3 == 2,
        6 | 10 => ell % 4 == 3,
        26 => ell % 12 == 11,
        _ => false,
    }
}

/// Enumerate all known congruence progressions for p_k with prime modulus
/// ℓ ≤ ell_max: the trivial families and the Theorem-c theta-block
/// families, each classified. Ordered by (ℓ, family).
pub fn theorem_c_progressions(k: u32, ell_max: u64) -> Vec<CongruenceProgression> {
    let mut out = Vec::new();
    for ell in (5..=ell_max).filter(|&e| is_prime(e)) {
        let delta = delta_k_ell(k, ell).expect("ell ≥ 5 is prime");
        let kr = k as u64 % ell;
        let trivial = [
            (0, Family::TrivialZero),
            (ell - 1, Family::TrivialEllMinus1),
            (ell - 3, Family::TrivialEllMinus3),
        ];
        for (r, family) in trivial {
            if kr == r {
                out.push(CongruenceProgression {
                    k,
                    ell,
                    family,
                    t: 0,
                    delta,
                    classification: Classification::TrivialFamily,
                });
            }
        }
        for h in [4u8, 6, 8, 10, 14, 26] {
            let kh = k as u64 + h as u64;
            if kh % ell == 0 && family_side_condition(h, ell) {
                let classification = if is_singular(k, ell) {
                    Classification::Singular
                } else {
                    Classification::Generic
                };
                out.push(CongruenceProgression {
                    k,
                    ell,
                    family: Family::ThetaBlock(h),
                    t: (kh / ell) as u32,
                    delta,
                    classification,
                });
            }
        }
    }
    out
}

/// (q)_∞ mod ℓ through q^{len-1}, by the pentagonal number theorem.
fn euler_mod(ell: u64, len: usize) -> Vec<u64> {
    let mut f = vec![0u64; len];
    f[0] = 1;
    let mut j = 1i64;
    loop {
        let mut hit = false;
        for e in [j * (3 * j - 1) / 2, j * (3 * j + 1) / 2] {
            if (e as usize) < len {
                hit = true;
                let sign = if j % 2 == 0 { 1 } else { ell - 1 };
                f[e as usize] = (f[e as usize] + sign) % ell;
            }
        }
        if !hit {
            break;
        }
        j += 1;
    }
    f
}

fn conv_mod(a: &[u64], b: &[u64], ell: u64, len: usize) -> Vec<u64> {
    let mut out = vec![0u64; len];
    for (i, &x) in a.iter().enumerate().take(len) {
        if x == 0 {
            continue;
        }
        for (m, &y) in b.iter().enumerate().take(len - i) {
            if y != 0 {
                out[i + m] = (out[i + m] + x * y) % ell;
            }
        }
    }
    out
}

fn inverse_mod(f: &[u64], ell: u64) -> Vec<u64> {
    assert_eq!(f[0] % ell, 1, "unit constant term required");
    let len = f.len();
    let mut inv = vec![0u64; len];
    inv[0] = 1;
    for n in 1..len {
        let mut acc = 0u64;
        for j in 1..=n {
            acc = (acc + f[j] * inv[n - j]) % ell;
        }
        inv[n] = (ell - acc % ell) % ell;
    }
    inv
}

/// Coefficients of 1/((q)_∞^k (q²;q²)_∞^j) reduced mod ℓ, through
/// q^{len-1}. Word-size arithmetic, suitable for n ~ thousands.
pub fn pkj_series_mod(k: u32, j: u32, ell: u64, len: usize) -> Vec<u64> {
    let euler = euler_mod(ell, len);
    let mut euler2 = vec![0u64; len];
    for (n, &c) in euler.iter().enumerate() {
        if 2 * n < len {
            euler2[2 * n] = c;
        }
    }
    let mut denom = vec![0u64; len];
    denom[0] = 1;
    for _ in 0..k {
        denom = conv_mod(&denom, &euler, ell, len);
    }
    for _ in 0..j {
        denom = conv_mod(&denom, &euler2, ell, len);
    }
    inverse_mod(&denom, ell)
}

/// Coefficients of 1/(q)_∞^k mod ℓ through q^{len-1}.
pub fn pk_series_mod(k: u32, ell: u64, len: usize) -> Vec<u64> {
    pkj_series_mod(k, 0, ell, len)
}

/// First n ≤ n_max with p_k(ℓn + δ) not ≡ 0 (mod ℓ), with the offending
/// coefficient, or None if the progression survives the scan.
pub fn pk_congruence_counterexample(
    k: u32,
    ell: u64,
    delta: u64,
    n_max: usize,
) -> Option<(usize, u64)> {
    let len = ell as usize * n_max + delta as usize + 1;
    let series = pk_series_mod(k, ell, len);
    (0..=n_max)
        .map(|n| (n, series[ell as usize * n + delta as usize]))
        .find(|&(_, c)| c != 0)
}

/// True iff p_k(ℓn + δ) ≡ 0 (mod ℓ) for all n ≤ n_max.
pub fn verify_pk_congruence(k: u32, ell: u64, delta: u64, n_max: usize) -> bool {
    pk_congruence_counterexample(k, ell, delta, n_max).is_none()
}

/// Per-progression Φ-divisibility results for a crank series.
#[derive(Clone, Debug)]
pub struct DivisibilityReport {
    pub ell: u64,
    pub delta: u64,
    /// 1 for Φ_ℓ, 2 for Φ_{ℓ²}.
    pub power: u8,
    pub n_max: usize,
    /// (n, divisible) for each tested coefficient [q^{ℓn + δ}].
    pub results: Vec<(usize, bool)>,
    pub pass: bool,
}

/// Check Φ_ℓ (power 1) or Φ_{ℓ²} (power 2) divisibility of
/// [q^{ℓn + δ}] series for 0 ≤ n ≤ n_max, on the exact Laurent
/// coefficients.
pub fn verify_crank_divisibility(
    series: &QSeries,
    ell: u64,
    delta: u64,
    power: u8,
    n_max: usize,
) -> Result<DivisibilityReport, QcrankError> {
    let need = ell as usize * n_max + delta as usize;
    if series.trunc() < need {
        return Err(QcrankError::InsufficientTruncation { have: series.trunc(), need });
    }
    let mut results = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let c = series.coeff(ell as usize * n + delta as usize);
        let ok = match power {
            1 => c.divisible_by_cyclotomic(ell)?,
            2 => c.divisible_by_cyclotomic_power(ell * ell)?,
            _ => return Err(QcrankError::UnsupportedCyclotomicIndex(power as u64)),
        };
        results.push((n, ok));
    }
    let pass = results.iter().all(|&(_, ok)| ok);
    Ok(DivisibilityReport { ell, delta, power, n_max, results, pass })
}

/// The colored crank series of `spec` folded into Z[ζ]/(ζ^M - 1).
pub fn colored_crank_cyclo(spec: &CrankSpec, modulus: usize, trunc: usize) -> CycloSeries {
    let mut denom = CycloSeries::one(modulus, trunc);
    for &a in &spec.weights {
        denom = denom.mul(&CycloSeries::pochhammer_pair(a as i64, 1, modulus, trunc));
    }
    let mut s = denom.inverse().expect("Pochhammer products are unit series");
    if spec.k % 2 == 1 {
        s = CycloSeries::pochhammer(0, 1, modulus, trunc).mul(&s);
    }
    s
}

/// Fast-path divisibility check for a colored crank: builds the series
/// directly in Z[ζ]/(ζ^M - 1) with M = ℓ (power 1) or ℓ² (power 2), which
/// is exact for the Φ-divisibility question and much cheaper at large
/// truncation than the full Laurent pipeline.
pub fn verify_colored_crank_divisibility(
    spec: &CrankSpec,
    ell: u64,
    delta: u64,
    power: u8,
    n_max: usize,
) -> Result<DivisibilityReport, QcrankError> {
    if !is_prime(ell) {
        return Err(QcrankError::NotPrime(ell));
    }
    let modulus = match power {
        1 => ell as usize,
        2 => (ell * ell) as usize,
        _ => return Err(QcrankError::UnsupportedCyclotomicIndex(power as u64)),
    };
    let trunc = ell as usize * n_max + delta as usize;
    let series = colored_crank_cyclo(spec, modulus, trunc);
    let mut results = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max {
        let e = ell as usize * n + delta as usize;
        let ok = match power {
            1 => series.coeff_divisible_by_phi_ell(e),
            _ => series.coeff_divisible_by_phi_ell_squared(e)?,
        };
        results.push((n, ok));
    }
    let pass = results.iter().all(|&(_, ok)| ok);
    Ok(DivisibilityReport { ell, delta, power, n_max, results, pass })
}

/// One cell of a p_{k,j} congruence scan.
#[derive(Clone, Debug)]
pub struct PkjScanCell {
    pub k: u64,
    pub j: u64,
    /// δ values with no counterexample up to n_max (empirical only).
    pub deltas: Vec<u64>,
    /// For each rejected δ: (δ, witness n, nonzero coefficient mod ℓ).
    pub counterexamples: Vec<(u64, usize, u64)>,
}

#[derive(Clone, Debug)]
pub struct PkjScan {
    pub ell: u64,
    pub n_max: usize,
    /// Cells in row-major (k, j) order over [0, ℓ)².
    pub cells: Vec<PkjScanCell>,
}

impl PkjScan {
    /// The δ sets as a `[k][j]` table, same shape as the bundled tables.
    pub fn delta_table(&self) -> Vec<Vec<Vec<u64>>> {
        let ell = self.ell as usize;
        let mut table = vec![vec![Vec::new(); ell]; ell];
        for cell in &self.cells {
            table[cell.k as usize][cell.j as usize] = cell.deltas.clone();
        }
        table
    }

    /// Cells where the scan disagrees with the bundled transcription:
    /// (k, j, scanned δ set, bundled δ set). The degenerate cell (0, 0)
    /// is skipped: the bundled table records no congruence for it, while
    /// the (ℓ, ℓ) lift the scan must use has the full trivial-family set
    /// (its denominator is supported on powers of q^ℓ mod ℓ), so the two
    /// readings answer different questions there.
    pub fn diff_against_bundled(&self) -> Option<Vec<(u64, u64, Vec<u64>, Vec<u64>)>> {
        let bundled = tables::bundled_pkj_table(self.ell)?;
        let scanned = self.delta_table();
        let mut diffs = Vec::new();
        for k in 0..self.ell as usize {
            for j in 0..self.ell as usize {
                if (k, j) == (0, 0) {
                    continue;
                }
                if scanned[k][j] != bundled[k][j] {
                    diffs.push((
                        k as u64,
                        j as u64,
                        scanned[k][j].clone(),
                        bundled[k][j].clone(),
                    ));
                }
            }
        }
        Some(diffs)
    }
}

/// Scan every residue cell (k mod ℓ, j mod ℓ) for congruences
/// p_{k,j}(ℓn + δ) ≡ 0 (mod ℓ) holding for all n ≤ n_max. Cells are
/// tested at the smallest non-negative representatives, except (0, 0)
/// which lifts to (ℓ, ℓ) so the generating function is non-trivial.
pub fn scan_pkj_congruences(ell: u64, n_max: usize) -> PkjScan {
    let len = ell as usize * n_max + ell as usize;
    let mut cells = Vec::with_capacity((ell * ell) as usize);
    for k in 0..ell {
        for j in 0..ell {
            let (kr, jr) = if (k, j) == (0, 0) { (ell, ell) } else { (k, j) };
            let series = pkj_series_mod(kr as u32, jr as u32, ell, len);
            let mut deltas = Vec::new();
            let mut counterexamples = Vec::new();
            for delta in 0..ell {
                let hit = (0..=n_max)
                    .map(|n| (n, series[ell as usize * n + delta as usize]))
                    .find(|&(_, c)| c != 0);
                match hit {
                    None => deltas.push(delta),
                    Some((n, c)) => counterexamples.push((delta, n, c)),
                }
            }
            cells.push(PkjScanCell { k, j, deltas, counterexamples });
        }
    }
    PkjScan { ell, n_max, cells }
}

/// Φ_ℓ divisibility of the default-weight (k, j) crank series at the
/// exponents ≡ δ (mod ℓ) for each δ in delta_set. Rejects the cases the
/// default family is known not to explain: j ≡ -2 (mod 7) and
/// (k, j) ≡ (5, 3) (mod 7).
pub fn verify_ckj_divisibility(
    k: u32,
    j: u32,
    ell: u64,
    delta_set: &[u64],
    n_max: usize,
) -> Result<Vec<DivisibilityReport>, QcrankError> {
    if j % 7 == 5 {
        return Err(QcrankError::ExcludedCase(format!(
            "j = {j} ≡ -2 (mod 7): the default weight family does not explain this case"
        )));
    }
    if (k % 7, j % 7) == (5, 3) {
        return Err(QcrankError::ExcludedCase(format!(
            "(k, j) = ({k}, {j}) ≡ (5, 3) (mod 7): the default weight family does not explain this case"
        )));
    }
    let max_delta = delta_set.iter().copied().max().unwrap_or(0);
    let trunc = ell as usize * n_max + max_delta as usize;
    let (z, u) = cranks::default_ckj_weights(k, j);
    let series = cranks::ckj_series(k, j, &z, &u, trunc)?;
    delta_set
        .iter()
        .map(|&delta| verify_crank_divisibility(&series, ell, delta, 1, n_max))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn delta_examples() {
        assert_eq!(delta_k_ell(1, 5).unwrap(), 4);
        assert_eq!(delta_k_ell(3, 11).unwrap(), 7);
        assert_eq!(delta_k_ell(3, 17).unwrap(), 15);
        assert!(matches!(delta_k_ell(1, 3), Err(QcrankError::SmallPrime)));
        assert!(matches!(delta_k_ell(1, 9), Err(QcrankError::NotPrime(9))));
        for k in 1..20 {
            for ell in [5u64, 7, 11, 13, 17, 19, 23] {
                let d = delta_k_ell(k, ell).unwrap();
                assert_eq!((24 * d) % ell, k as u64 % ell);
            }
        }
    }

    #[test]
    fn progression_enumeration_k9() {
        let progs = theorem_c_progressions(9, 25);
        let find = |ell, family| {
            progs
                .iter()
                .find(|p| p.ell == ell && p.family == family)
                .unwrap_or_else(|| panic!("missing ({ell}, {family:?})"))
        };
        assert_eq!(
            find(5, Family::TrivialEllMinus1).classification,
            Classification::TrivialFamily
        );
        assert_eq!(find(17, Family::ThetaBlock(8)).t, 1);
        find(19, Family::ThetaBlock(10));
        find(23, Family::ThetaBlock(14));
    }

    #[test]
    fn singular_classification() {
        // k=3: 3+14 = 17 ≡ 2 (mod 3) prime, ℓ=11 ≡ 2 (mod 3), 11 | 3+8.
        let progs3 = theorem_c_progressions(3, 20);
        let p11 = progs3
            .iter()
            .find(|p| p.ell == 11 && p.h() == Some(8))
            .unwrap();
        assert_eq!(p11.classification, Classification::Singular);
        // k=5, ℓ=11, h=6: both singular conditions fail.
        let progs5 = theorem_c_progressions(5, 20);
        let p = progs5
            .iter()
            .find(|p| p.ell == 11 && p.h() == Some(6))
            .unwrap();
        assert_eq!(p.classification, Classification::Generic);
        assert!(!is_singular(5, 11));
        // Every h=26 progression is singular by condition (ii).
        let progs = theorem_c_progressions(7, 40);
        let p33 = progs.iter().find(|p| p.h() == Some(26));
        if let Some(p) = p33 {
            assert_eq!(p.classification, Classification::Singular);
        }
    }

    #[test]
    fn pk_scan_examples() {
        assert!(verify_pk_congruence(1, 5, 4, 20));
        // p_{7t+6}(7n+δ) ≡ 0 (mod 7) for δ ∈ {3,4,6}.
        for d in [3, 4, 6] {
            assert!(verify_pk_congruence(6, 7, d, 20));
        }
        assert!(!verify_pk_congruence(6, 7, 5, 20));
        let delta = delta_k_ell(1, 13).unwrap();
        let cex = pk_congruence_counterexample(1, 13, delta, 50);
        assert!(cex.is_some(), "no ℓ=13 Ramanujan congruence for p(n)");
    }

    #[test]
    fn pk_series_matches_enumeration() {
        for k in 1..=3u32 {
            let series = pk_series_mod(k, 5, 9);
            for n in 0..=8u64 {
                let mut brute = 0u64;
                // k-colored count via convolution of enumerated p(n).
                let p: Vec<u64> = (0..=n).map(crate::cranks::partition_count).collect();
                if k == 1 {
                    brute = p[n as usize];
                } else {
                    for split in compositions(n, k as usize) {
                        brute += split.iter().map(|&m| p[m as usize]).product::<u64>();
                    }
                }
                assert_eq!(series[n as usize], brute % 5, "k={k}, n={n}");
            }
        }
    }

    fn compositions(n: u64, parts: usize) -> Vec<Vec<u64>> {
        if parts == 1 {
            return vec![vec![n]];
        }
        let mut out = Vec::new();
        for first in 0..=n {
            for mut rest in compositions(n - first, parts - 1) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn crank_divisibility_exact_paths() {
        // C(z;τ) with ℓ=7: exponents 7n-2 ≡ 5 (mod 7).
        let s = cranks::crank_series(1, 47);
        let rep = verify_crank_divisibility(&s, 7, 5, 1, 6).unwrap();
        assert!(rep.pass);
        // §5.1-scale: (3,2)-weighted 3-colored crank mod 11.
        let spec = CrankSpec::new(3, vec![3, 2]).unwrap();
        let s3 = cranks::colored_crank_series(&spec, 51);
        let rep3 = verify_crank_divisibility(&s3, 11, 7, 1, 4).unwrap();
        assert!(rep3.pass);
        assert!(matches!(
            verify_crank_divisibility(&s3, 11, 7, 1, 40),
            Err(QcrankError::InsufficientTruncation { .. })
        ));
    }

    #[test]
    fn cyclo_fast_path_agrees_with_exact() {
        let spec = CrankSpec::new(3, vec![3, 2]).unwrap();
        let fast = verify_colored_crank_divisibility(&spec, 11, 7, 1, 3).unwrap();
        let exact = verify_crank_divisibility(
            &cranks::colored_crank_series(&spec, 40),
            11,
            7,
            1,
            3,
        )
        .unwrap();
        assert_eq!(fast.results, exact.results);
        assert!(fast.pass);
        // Off-progression control: some δ must fail.
        let off = verify_colored_crank_divisibility(&spec, 11, 3, 1, 3).unwrap();
        assert!(!off.pass);
    }

    #[test]
    fn phi25_strengthening_small() {
        // Φ_{25} | [q^{5n+δ}] C(9z,7z,6z,4z,z;τ) for δ ∈ {3,4}.
        let spec = CrankSpec::new(9, vec![9, 7, 6, 4, 1]).unwrap();
        for delta in [3u64, 4] {
            let rep = verify_colored_crank_divisibility(&spec, 5, delta, 2, 2).unwrap();
            assert!(rep.pass, "Φ_25 fails at δ={delta}");
        }
    }

    #[test]
    fn divisibility_implies_zeta_one_vanishing() {
        let spec = CrankSpec::new(3, vec![3, 2]).unwrap();
        let s = cranks::colored_crank_series(&spec, 40);
        let rep = verify_crank_divisibility(&s, 11, 7, 1, 3).unwrap();
        assert!(rep.pass);
        for n in 0..=3usize {
            let v = s.coeff(11 * n + 7).eval_at_one();
            assert!((v % 11i32).is_zero(), "ζ=1 value not ≡ 0 (mod 11) at n={n}");
        }
    }

    #[test]
    fn pkj_scan_matches_bundled_tables_at_reduced_bound() {
        for ell in [5u64, 7] {
            let scan = scan_pkj_congruences(ell, 80);
            let diffs = scan.diff_against_bundled().unwrap();
            assert!(diffs.is_empty(), "ℓ={ell} discrepancies: {diffs:?}");
        }
    }

    #[test]
    fn pkj_scan_counterexamples_are_witnesses() {
        let scan = scan_pkj_congruences(5, 40);
        for cell in &scan.cells {
            assert_eq!(cell.deltas.len() + cell.counterexamples.len(), 5);
            for &(_, _, c) in &cell.counterexamples {
                assert!(c != 0 && c < 5);
            }
        }
    }

    #[test]
    fn ckj_divisibility_and_exclusions() {
        // Table 2 cell (2,2): δ = 4.
        let reps = verify_ckj_divisibility(2, 2, 5, &[4], 3).unwrap();
        assert!(reps.iter().all(|r| r.pass));
        assert!(matches!(
            verify_ckj_divisibility(1, 5, 7, &[2], 2),
            Err(QcrankError::ExcludedCase(_))
        ));
        assert!(matches!(
            verify_ckj_divisibility(5, 3, 7, &[6], 2),
            Err(QcrankError::ExcludedCase(_))
        ));
    }
}

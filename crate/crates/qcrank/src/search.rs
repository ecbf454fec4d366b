//! Complete-residue-system combinatorics behind the crank weight searches.
//!
//! A weight tuple (a_1 > … > a_w) explains a congruence at ℓ when the
//! multiset {0^{2-δ_odd(k)}} ∪ {±block forms} ∪ {±a_i} (mod ℓ) can be
//! arranged into t complete residue systems, t = (k+h)/ℓ: each complete
//! system contributes one (1 - q^{ℓn}) factor mod Φ_ℓ(ζ), so the crank
//! denominator becomes supported on powers of q^ℓ. This module computes
//! residue profiles, searches block specializations (a, b) that fill the
//! missing classes, runs the multi-prime simultaneous weight search, and —
//! when the search is empty — emits a replayable impossibility
//! certificate walking the same case analysis.

use std::collections::BTreeSet;

use crate::congruences::{CongruenceProgression, Family};
use crate::cranks;
use crate::error::QcrankError;

/// Multiplicities of residue classes mod ℓ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueMultiset {
    pub ell: u64,
    pub counts: Vec<u32>,
}

impl ResidueMultiset {
    pub fn new(ell: u64) -> Self {
        ResidueMultiset { ell, counts: vec![0; ell as usize] }
    }

    pub fn add(&mut self, class: i64, mult: u32) {
        let c = class.rem_euclid(self.ell as i64) as usize;
        self.counts[c] += mult;
    }

    /// Add the pair ±v.
    pub fn add_pair(&mut self, v: i64) {
        self.add(v, 1);
        self.add(-v, 1);
    }

    /// True iff every class occurs exactly t times.
    pub fn is_complete_systems(&self, t: u32) -> bool {
        self.counts.iter().all(|&c| c == t)
    }

    /// t - count per class, or None if some class already exceeds t.
    pub fn deficit_to(&self, t: u32) -> Option<ResidueMultiset> {
        let mut d = ResidueMultiset::new(self.ell);
        for (i, &c) in self.counts.iter().enumerate() {
            if c > t {
                return None;
            }
            d.counts[i] = t - c;
        }
        Some(d)
    }

    pub fn total(&self) -> u32 {
        self.counts.iter().sum()
    }
}

/// Multiset {0^extra_zeros} ∪ {±a_i mod ℓ}.
pub fn residue_profile(weights: &[u32], ell: u64, extra_zeros: u32) -> ResidueMultiset {
    let mut m = ResidueMultiset::new(ell);
    m.counts[0] += extra_zeros;
    for &a in weights {
        m.add_pair(a as i64);
    }
    m
}

/// The linear forms in (a, b) that the theta block for h contributes as
/// Pochhammer pair exponents, after stripping eta factors: coefficient
/// pairs (c_a, c_b) with form = c_a·a + c_b·b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FillShape {
    pub h: u8,
    pub forms: Vec<(i64, i64)>,
}

impl FillShape {
    /// True if the shape uses the second variable b.
    pub fn uses_b(&self) -> bool {
        self.forms.iter().any(|&(_, cb)| cb != 0)
    }

    pub fn eval(&self, a: i64, b: i64) -> Vec<i64> {
        self.forms.iter().map(|&(ca, cb)| ca * a + cb * b).collect()
    }
}

/// The fill shape for the block family h ∈ {4, 6, 8, 10, 14}.
pub fn fill_shape(h: u8) -> Result<FillShape, QcrankError> {
    let forms: Vec<(i64, i64)> = match h {
        4 => vec![(1, 0)],
        6 => vec![(1, 0), (0, 1)],
        8 => vec![(1, 0), (0, 1), (1, 1)],
        10 => vec![(1, 0), (0, 1), (1, 1), (1, 2)],
        14 => vec![(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)],
        _ => return Err(QcrankError::UnsupportedH(h)),
    };
    Ok(FillShape { h, forms })
}

/// All (a, b) ∈ [1, ℓ-1]² (b = 0 for single-variable shapes) whose ±form
/// evaluations land exactly on the missing classes with the required
/// multiplicities. Sorted lexicographically.
pub fn fill_search(missing: &ResidueMultiset, shape: &FillShape) -> Vec<(u64, u64)> {
    let ell = missing.ell;
    let mut out = Vec::new();
    let b_range = if shape.uses_b() { 1..ell } else { 0..1 };
    for a in 1..ell {
        for b in b_range.clone() {
            let mut m = ResidueMultiset::new(ell);
            for v in shape.eval(a as i64, b as i64) {
                m.add_pair(v);
            }
            if m == *missing {
                out.push((a, b));
            }
        }
    }
    out
}

/// Whether `weights` handles a trivial-family congruence at ℓ. Four
/// alternative routes, each turning the crank denominator into complete
/// residue systems mod Φ_ℓ:
/// - strict: the profile minus the numerator's δ_odd(k) zeros is already
///   t' complete systems (the Freshman's-Dream route for k ≡ 0);
/// - pentagonal: adding one η factor (a single 0) completes it
///   (k ≡ ℓ-1);
/// - triple-product: adding one θ(uz) factor ({0, ±u}) completes it for
///   some u (k ≡ ℓ-3);
/// - bundling: adding (q)(ζ^{±u}q)^m for some u and m ∈ {1, 2} leaves
///   every class count ≡ a common value r ≥ 1 (mod ℓ) and ≥ r, so the
///   surplus bundles into (1-q^{ℓn}) factors ℓ at a time.
pub fn trivial_family_admissible(weights: &[u32], k: u32, ell: u64) -> bool {
    let d = residue_profile(weights, ell, 0);
    let dodd = (k % 2) as u32;
    let equal_counts = |m: &ResidueMultiset| m.counts.iter().all(|&c| c == m.counts[0]);

    // strict
    if d.counts[0] >= dodd {
        let mut m = d.clone();
        m.counts[0] -= dodd;
        if equal_counts(&m) && m.counts[0] >= 1 {
            return true;
        }
    }
    // pentagonal
    {
        let mut m = d.clone();
        m.counts[0] += 1;
        if m.counts[0] >= dodd {
            m.counts[0] -= dodd;
            if equal_counts(&m) && m.counts[0] >= 1 {
                return true;
            }
        }
    }
    // triple-product
    for u in 1..=(ell - 1) / 2 {
        let mut m = d.clone();
        m.counts[0] += 1;
        m.add_pair(u as i64);
        if m.counts[0] >= dodd {
            m.counts[0] -= dodd;
            if equal_counts(&m) && m.counts[0] >= 1 {
                return true;
            }
        }
    }
    // bundling
    for u in 1..=(ell - 1) / 2 {
        for mult in 1..=2u32 {
            let mut m = d.clone();
            m.counts[0] += 1;
            m.add(u as i64, mult);
            m.add(-(u as i64), mult);
            let r = m.counts.iter().map(|&c| c % ell as u32).min().unwrap();
            let uniform = m
                .counts
                .iter()
                .all(|&c| c % ell as u32 == r && c >= r);
            if uniform && r >= 1 {
                return true;
            }
        }
    }
    false
}

/// Whether `weights` admits some block specialization explaining a
/// theta-family progression: the profile with the block's 2-δ_odd(k)
/// zeros must sit inside t complete systems and the deficit must be
/// exactly fillable by the shape.
pub fn theta_family_admissible(
    weights: &[u32],
    k: u32,
    ell: u64,
    h: u8,
) -> Result<bool, QcrankError> {
    let shape = fill_shape(h)?;
    let t = ((k as u64 + h as u64) / ell) as u32;
    let profile = residue_profile(weights, ell, 2 - k % 2);
    let missing = match profile.deficit_to(t) {
        Some(m) => m,
        None => return Ok(false),
    };
    Ok(!fill_search(&missing, &shape).is_empty())
}

/// Whether `weights` explains one progression.
pub fn progression_admissible(
    weights: &[u32],
    k: u32,
    prog: &CongruenceProgression,
) -> Result<bool, QcrankError> {
    match prog.family {
        Family::ThetaBlock(h) if matches!(h, 4 | 6 | 8 | 10 | 14) => {
            theta_family_admissible(weights, k, prog.ell, h)
        }
        Family::ThetaBlock(h) => Err(QcrankError::UnsupportedProgression(h)),
        _ => Ok(trivial_family_admissible(weights, k, prog.ell)),
    }
}

/// First-weight policy for the search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum A1Policy {
    /// a1 = k (first-definition regime).
    FixedK,
    /// a1 = k + 2 (second-definition regime).
    FixedKPlus2,
    /// a1 pinned to an explicit value.
    Fixed(u32),
    /// a1 free in [1, bound].
    FreeUpTo(u32),
}

fn a1_candidates(k: u32, policy: A1Policy) -> Vec<u32> {
    match policy {
        A1Policy::FixedK => vec![k],
        A1Policy::FixedKPlus2 => vec![k + 2],
        A1Policy::Fixed(v) => vec![v],
        A1Policy::FreeUpTo(bound) => (1..=bound).collect(),
    }
}

/// The paper-default policy for k: a1 = k+2 when k+14 has a prime factor
/// ≡ 2 (mod 3) (the second-definition regime), a1 = k otherwise.
pub fn default_policy(k: u32) -> A1Policy {
    match cranks::default_weights(k).variant {
        crate::cranks::CrankVariant::SecondDef => A1Policy::FixedKPlus2,
        _ => A1Policy::FixedK,
    }
}

fn binomial(n: u64, r: u64) -> u64 {
    let r = r.min(n - r.min(n));
    let mut acc = 1u64;
    for i in 0..r {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

const DIRECT_ENUM_LIMIT: u64 = 200_000;

/// All strictly decreasing weight tuples under the policy that explain
/// every progression simultaneously. Uses direct tuple enumeration when
/// the space is small, otherwise an anchored residue search at the
/// largest theta prime.
pub fn crank_weight_search(
    k: u32,
    progressions: &[CongruenceProgression],
    policy: A1Policy,
) -> Result<Vec<Vec<u32>>, QcrankError> {
    for p in progressions {
        if let Family::ThetaBlock(h) = p.family {
            if !matches!(h, 4 | 6 | 8 | 10 | 14) {
                return Err(QcrankError::UnsupportedProgression(h));
            }
        }
    }
    let w = cranks::weight_count(k);
    let mut solutions = BTreeSet::new();
    for a1 in a1_candidates(k, policy) {
        if (a1 as usize) < w {
            continue;
        }
        if binomial(a1 as u64 - 1, w as u64 - 1) <= DIRECT_ENUM_LIMIT {
            direct_enumeration(k, a1, progressions, &mut solutions)?;
        } else {
            let (sols, _) = anchored_search(k, a1, progressions)?;
            solutions.extend(sols);
        }
    }
    Ok(solutions.into_iter().collect())
}

fn direct_enumeration(
    k: u32,
    a1: u32,
    progressions: &[CongruenceProgression],
    solutions: &mut BTreeSet<Vec<u32>>,
) -> Result<(), QcrankError> {
    let w = cranks::weight_count(k);
    let mut tuple = vec![a1];
    rec(k, a1, progressions, &mut tuple, w, solutions)?;
    return Ok(());

    fn rec(
        k: u32,
        a1: u32,
        progressions: &[CongruenceProgression],
        tuple: &mut Vec<u32>,
        w: usize,
        solutions: &mut BTreeSet<Vec<u32>>,
    ) -> Result<(), QcrankError> {
        if tuple.len() == w {
            let mut pass = true;
            for p in progressions {
                if !progression_admissible(tuple, k, p)? {
                    pass = false;
                    break;
                }
            }
            if pass {
                solutions.insert(tuple.clone());
            }
            return Ok(());
        }
        let last = *tuple.last().unwrap();
        let slots_left = (w - tuple.len()) as u32;
        for next in (slots_left..last).rev() {
            tuple.push(next);
            rec(k, a1, progressions, tuple, w, solutions)?;
            tuple.pop();
        }
        let _ = a1;
        Ok(())
    }
}

/// Anchored residue search: at the largest theta prime ℓ* with t = 1 and
/// ℓ* > a1, the weight integers in [1, a1] are their own residues, so
/// each block fill at ℓ* pins the weight set up to a choice of
/// representative per missing ± pair. Returns the solutions plus a
/// line-oriented trace of the full case analysis.
pub fn anchored_search(
    k: u32,
    a1: u32,
    progressions: &[CongruenceProgression],
) -> Result<(Vec<Vec<u32>>, Vec<String>), QcrankError> {
    let w = cranks::weight_count(k);
    let anchor = progressions
        .iter()
        .filter(|p| matches!(p.family, Family::ThetaBlock(_)))
        .filter(|p| p.ell > a1 as u64 && (k as u64 + p.h().unwrap() as u64) == p.ell)
        .max_by_key(|p| p.ell)
        .ok_or_else(|| {
            QcrankError::ExcludedCase(format!(
                "no anchor prime > a1 = {a1} with t = 1 among the progressions"
            ))
        })?;
    let ell = anchor.ell;
    let h = anchor.h().unwrap();
    let shape = fill_shape(h)?;
    let mut trace = Vec::new();
    trace.push(format!("anchor {ell} {h}"));

    // The fill must supply exactly the classes not covered by the block's
    // zero and the weights; since the weights are unknown, enumerate fills
    // against every deficit shape: equivalently, enumerate all (a, b)
    // whose forms are 2·|forms| distinct nonzero classes avoiding ±a1,
    // then read the weight classes off the complement.
    let mut rest = checked_pairs(ell, a1, &shape);
    rest.sort();
    let mut solutions = BTreeSet::new();
    let mut seen_form_sets = BTreeSet::new();
    for (a, b) in rest {
        let forms = shape.eval(a as i64, b as i64);
        let mut form_pairs: Vec<u64> = forms
            .iter()
            .map(|&v| {
                let c = v.rem_euclid(ell as i64) as u64;
                c.min(ell - c)
            })
            .collect();
        form_pairs.sort_unstable();
        if !seen_form_sets.insert(form_pairs.clone()) {
            continue;
        }
        let forms_str = form_pairs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",");
        // Complement ± pairs = weight classes; one must be a1's.
        let mut weight_pairs: Vec<u64> = (1..=(ell - 1) / 2)
            .filter(|c| !form_pairs.contains(c))
            .collect();
        let a1_class = (a1 as u64).min(ell - a1 as u64);
        if !weight_pairs.contains(&a1_class) {
            trace.push(format!("fill {a} {b} forms {forms_str} rejected a1-class-covered"));
            continue;
        }
        weight_pairs.retain(|&c| c != a1_class);
        debug_assert_eq!(weight_pairs.len(), w - 1);
        trace.push(format!("fill {a} {b} forms {forms_str}"));
        // Candidates per pair: integer representatives in [1, a1-1].
        let candidates: Vec<Vec<u32>> = weight_pairs
            .iter()
            .map(|&c| {
                [c, ell - c]
                    .iter()
                    .filter(|&&v| v >= 1 && v < a1 as u64)
                    .map(|&v| v as u32)
                    .collect()
            })
            .collect();
        if let Some(i) = candidates.iter().position(|c| c.is_empty()) {
            trace.push(format!(
                "  reject pair {} no-representative-below {a1}",
                weight_pairs[i]
            ));
            continue;
        }
        // DFS over representative choices.
        let mut choice = vec![0usize; candidates.len()];
        loop {
            let mut weights: Vec<u32> = vec![a1];
            weights.extend(choice.iter().zip(&candidates).map(|(&i, c)| c[i]));
            weights.sort_unstable_by(|x, y| y.cmp(x));
            let mut verdict = String::from("pass");
            for p in progressions {
                if p.ell == ell {
                    continue;
                }
                if !progression_admissible(&weights, k, p)? {
                    verdict = format!("fail {}", p.ell);
                    break;
                }
            }
            let wstr = weights
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",");
            trace.push(format!("  case {wstr} {verdict}"));
            if verdict == "pass" {
                solutions.insert(weights);
            }
            // next choice vector
            let mut carry = true;
            for (ci, cand) in choice.iter_mut().zip(&candidates) {
                if !carry {
                    break;
                }
                *ci += 1;
                if *ci < cand.len() {
                    carry = false;
                } else {
                    *ci = 0;
                }
            }
            if carry {
                break;
            }
        }
    }
    let verdict = if solutions.is_empty() { "empty" } else { "non-empty" };
    trace.push(format!("verdict {verdict}"));
    Ok((solutions.into_iter().collect(), trace))
}

/// All (a, b) whose form evaluations at ℓ are 2·|forms| distinct nonzero
/// classes avoiding ±a1 — the necessary condition for a t = 1 fill
/// leaving room for the weights.
fn checked_pairs(ell: u64, a1: u32, shape: &FillShape) -> Vec<(u64, u64)> {
    let a1_class = (a1 as u64 % ell).min(ell - a1 as u64 % ell);
    let b_range = if shape.uses_b() { 1..ell } else { 0..1 };
    let mut out = Vec::new();
    for a in 1..ell {
        for b in b_range.clone() {
            let mut pairs = BTreeSet::new();
            let mut ok = true;
            for v in shape.eval(a as i64, b as i64) {
                let c = v.rem_euclid(ell as i64) as u64;
                let p = c.min(ell - c);
                if p == 0 || p == a1_class || !pairs.insert(p) {
                    ok = false;
                    break;
                }
            }
            if ok {
                out.push((a, b));
            }
        }
    }
    out
}

/// A replayable impossibility certificate: the anchored case analysis as
/// a line-oriented text document.
pub fn impossibility_certificate(
    k: u32,
    a1: u32,
    progressions: &[CongruenceProgression],
) -> Result<String, QcrankError> {
    let (solutions, trace) = anchored_search(k, a1, progressions)?;
    if !solutions.is_empty() {
        return Err(QcrankError::SearchNonEmpty(solutions.len()));
    }
    let mut lines = vec![
        "impossibility-certificate v1".to_string(),
        format!("k {k}"),
        format!("a1 {a1}"),
    ];
    for p in progressions {
        let fam = match p.family {
            Family::ThetaBlock(h) => format!("theta {h}"),
            Family::TrivialZero => "trivial0".to_string(),
            Family::TrivialEllMinus1 => "trivial-1".to_string(),
            Family::TrivialEllMinus3 => "trivial-3".to_string(),
        };
        lines.push(format!("progression {} {fam}", p.ell));
    }
    lines.extend(trace);
    lines.push("end".to_string());
    Ok(lines.join("\n"))
}

/// Independent replay of a certificate: re-derives the full case analysis
/// from the header lines and demands that every fill, case, and verdict
/// in the document matches the recomputation, and that the verdict is
/// `empty`.
pub fn replay_certificate(text: &str) -> Result<(), QcrankError> {
    let bad = |m: &str| QcrankError::BadCertificate(m.to_string());
    let mut lines = text.lines();
    if lines.next() != Some("impossibility-certificate v1") {
        return Err(bad("missing header"));
    }
    let mut k: Option<u32> = None;
    let mut a1: Option<u32> = None;
    let mut progressions = Vec::new();
    let mut body = Vec::new();
    for line in lines {
        let mut it = line.split_whitespace();
        match it.next() {
            Some("k") => k = it.next().and_then(|v| v.parse().ok()),
            Some("a1") => a1 = it.next().and_then(|v| v.parse().ok()),
            Some("progression") => {
                let ell: u64 = it
                    .next()
                    .and_then(|v| v.parse().ok())
                    .ok_or_else(|| bad("bad progression line"))?;
                let family = match (it.next(), it.next()) {
                    (Some("theta"), Some(h)) => Family::ThetaBlock(
                        h.parse().map_err(|_| bad("bad theta h"))?,
                    ),
                    (Some("trivial0"), _) => Family::TrivialZero,
                    (Some("trivial-1"), _) => Family::TrivialEllMinus1,
                    (Some("trivial-3"), _) => Family::TrivialEllMinus3,
                    _ => return Err(bad("unknown family")),
                };
                progressions.push((ell, family));
            }
            Some("end") => break,
            Some(_) => body.push(line.to_string()),
            None => {}
        }
    }
    let k = k.ok_or_else(|| bad("missing k"))?;
    let a1 = a1.ok_or_else(|| bad("missing a1"))?;
    if progressions.is_empty() {
        return Err(bad("no progressions"));
    }
    let progs: Vec<CongruenceProgression> = progressions
        .iter()
        .map(|&(ell, family)| {
            let delta = crate::congruences::delta_k_ell(k, ell)?;
            let t = match family {
                Family::ThetaBlock(h) => ((k as u64 + h as u64) / ell) as u32,
                _ => 0,
            };
            Ok(CongruenceProgression {
                k,
                ell,
                family,
                t,
                delta,
                classification: crate::congruences::Classification::Generic,
            })
        })
        .collect::<Result<_, QcrankError>>()?;
    let (solutions, trace) = anchored_search(k, a1, &progs)?;
    if !solutions.is_empty() {
        return Err(bad("recomputed search is non-empty"));
    }
    if trace != body {
        let n = trace
            .iter()
            .zip(&body)
            .position(|(a, b)| a != b)
            .unwrap_or(trace.len().min(body.len()));
        return Err(bad(&format!(
            "trace mismatch at line {n}: recomputed {:?}, certificate {:?}",
            trace.get(n),
            body.get(n)
        )));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::congruences::theorem_c_progressions;

    fn prog(k: u32, ell: u64, family: Family) -> CongruenceProgression {
        theorem_c_progressions(k, ell)
            .into_iter()
            .find(|p| p.ell == ell && p.family == family)
            .unwrap_or_else(|| panic!("no progression ({ell}, {family:?}) for k={k}"))
    }

    #[test]
    fn residue_profile_examples() {
        let m = residue_profile(&[5, 3, 1], 11, 0);
        for c in [1, 3, 5, 6, 8, 10] {
            assert_eq!(m.counts[c], 1);
        }
        assert_eq!(m.total(), 6);
        let m2 = residue_profile(&[3, 2], 11, 1);
        assert_eq!(m2.counts[0], 1);
        assert_eq!(m2.counts[2] + m2.counts[9], 2);
        assert_eq!(m2.counts[3] + m2.counts[8], 2);
    }

    #[test]
    fn fill_search_paper_examples() {
        // h=10 / B2: (a,b,a+b,a+2b) = (4,2,6,8) fills ±{2,4,6,8}.
        let mut missing = ResidueMultiset::new(23);
        for v in [2i64, 4, 6, 8] {
            missing.add_pair(v);
        }
        let fills = fill_search(&missing, &fill_shape(10).unwrap());
        assert!(fills.contains(&(4, 2)), "fills: {fills:?}");
        // h=14 / G2: (2,4,6,8,10,14).
        let mut missing14 = ResidueMultiset::new(29);
        for v in [2i64, 4, 6, 8, 10, 14] {
            missing14.add_pair(v);
        }
        let fills14 = fill_search(&missing14, &fill_shape(14).unwrap());
        assert!(fills14.contains(&(2, 4)), "fills: {fills14:?}");
        // h=8 / A2 cannot fill ±{2,4,8} at ℓ=23.
        let mut missing8 = ResidueMultiset::new(23);
        for v in [2i64, 4, 8] {
            missing8.add_pair(v);
        }
        assert!(fill_search(&missing8, &fill_shape(8).unwrap()).is_empty());
    }

    #[test]
    fn fill_search_unit_rescaling() {
        // If (a,b) fills M then (ua, ub) fills uM, u coprime to ℓ.
        let ell = 13u64;
        let shape = fill_shape(8).unwrap();
        let mut missing = ResidueMultiset::new(ell);
        for v in [1i64, 3, 4] {
            missing.add_pair(v);
        }
        let fills = fill_search(&missing, &shape);
        assert!(!fills.is_empty());
        let u = 5i64;
        let mut scaled = ResidueMultiset::new(ell);
        for v in [1i64, 3, 4] {
            scaled.add_pair(v * u);
        }
        let scaled_fills = fill_search(&scaled, &shape);
        for &(a, b) in &fills {
            let ua = (a as i64 * u).rem_euclid(ell as i64) as u64;
            let ub = (b as i64 * u).rem_euclid(ell as i64) as u64;
            assert!(scaled_fills.contains(&(ua, ub)));
        }
    }

    #[test]
    fn search_k3_exactly_32() {
        let progs = [prog(3, 11, Family::ThetaBlock(8)), prog(3, 17, Family::ThetaBlock(14))];
        let sols = crank_weight_search(3, &progs, A1Policy::FixedK).unwrap();
        assert_eq!(sols, vec![vec![3, 2]]);
    }

    #[test]
    fn search_k5_four_tuples() {
        let progs = [prog(5, 5, Family::TrivialZero), prog(5, 11, Family::ThetaBlock(6))];
        let sols = crank_weight_search(5, &progs, A1Policy::FixedK).unwrap();
        let expected: Vec<Vec<u32>> =
            vec![vec![5, 2, 1], vec![5, 3, 1], vec![5, 4, 2], vec![5, 4, 3]];
        assert_eq!(sols, expected);
    }

    #[test]
    fn search_k9_unique() {
        let progs = [
            prog(9, 5, Family::TrivialEllMinus1),
            prog(9, 17, Family::ThetaBlock(8)),
            prog(9, 19, Family::ThetaBlock(10)),
            prog(9, 23, Family::ThetaBlock(14)),
        ];
        let sols = crank_weight_search(9, &progs, A1Policy::FixedK).unwrap();
        assert_eq!(sols, vec![vec![9, 7, 6, 4, 1]]);
    }

    #[test]
    fn search_k3_completeness_against_exhaustive() {
        // Exhaustive a2 scan at the fixed a1 = 3 policy.
        let progs = [prog(3, 11, Family::ThetaBlock(8)), prog(3, 17, Family::ThetaBlock(14))];
        let mut direct = Vec::new();
        for a2 in 1..3u32 {
            let weights = vec![3, a2];
            if progs
                .iter()
                .all(|p| progression_admissible(&weights, 3, p).unwrap())
            {
                direct.push(weights);
            }
        }
        assert_eq!(direct, crank_weight_search(3, &progs, A1Policy::FixedK).unwrap());
    }

    fn k33_progressions() -> Vec<CongruenceProgression> {
        vec![
            prog(33, 11, Family::TrivialZero),
            prog(33, 17, Family::TrivialEllMinus1),
            prog(33, 41, Family::ThetaBlock(8)),
            prog(33, 43, Family::ThetaBlock(10)),
            prog(33, 47, Family::ThetaBlock(14)),
        ]
    }

    #[test]
    fn search_k33_empty_with_replayable_certificate() {
        let progs = k33_progressions();
        let sols = crank_weight_search(33, &progs, A1Policy::FixedKPlus2).unwrap();
        assert!(sols.is_empty(), "unexpected solutions: {sols:?}");
        let cert = impossibility_certificate(33, 35, &progs).unwrap();
        assert!(cert.starts_with("impossibility-certificate v1"));
        assert!(cert.ends_with("end"));
        replay_certificate(&cert).unwrap();
    }

    #[test]
    fn certificate_rejects_tampering() {
        let progs = k33_progressions();
        let cert = impossibility_certificate(33, 35, &progs).unwrap();
        // Flip a fail verdict.
        let tampered = cert.replacen("fail", "pass", 1);
        assert!(matches!(
            replay_certificate(&tampered),
            Err(QcrankError::BadCertificate(_))
        ));
        // Certificate demand for a satisfiable search is rejected.
        let progs3 =
            [prog(3, 11, Family::ThetaBlock(8)), prog(3, 17, Family::ThetaBlock(14))];
        assert!(matches!(
            impossibility_certificate(3, 3, &progs3),
            Err(QcrankError::SearchNonEmpty(1))
        ));
    }

    #[test]
    fn trivial_family_routes() {
        // k=5, ℓ=5 strict: (5,4,3) passes, (5,4,1) fails.
        assert!(trivial_family_admissible(&[5, 4, 3], 5, 5));
        assert!(!trivial_family_admissible(&[5, 4, 1], 5, 5));
        assert!(!trivial_family_admissible(&[5, 3, 2], 5, 5));
        // k=9, ℓ=5 bundling route for (9,7,6,4,1).
        assert!(trivial_family_admissible(&[9, 7, 6, 4, 1], 9, 5));
    }

    #[test]
    fn unsupported_h_rejected() {
        let p = CongruenceProgression {
            k: 7,
            ell: 11,
            family: Family::ThetaBlock(26),
            t: 3,
            delta: 4,
            classification: crate::congruences::Classification::Singular,
        };
        assert!(matches!(
            crank_weight_search(7, &[p], A1Policy::FixedK),
            Err(QcrankError::UnsupportedProgression(26))
        ));
    }
}

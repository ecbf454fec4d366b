use thiserror::Error;

#[derive(Debug, Error)]
pub enum QcrankError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("cyclotomic index {0} is not a prime or the square of a prime")]
    UnsupportedCyclotomicIndex(u64),
    #[error("prefactor mismatch on addition: {0}/24 vs {1}/24")]
    PrefactorMismatch(i64, i64),
    #[error("series has non-unit constant term; cannot invert")]
    NonUnitConstantTerm,
    #[error("theta factor with zero ζ-exponent at (a,b)=({a},{b}): form {form}")]
    ZeroExponentFactor { a: i64, b: i64, form: String },
    #[error("unsupported h value {0} for this operation")]
    UnsupportedH(u8),
    #[error("side condition violated: h={h} requires ell ≡ {need} (mod {modulus}), got ell={ell}")]
    SideCondition { h: u8, ell: u64, need: u64, modulus: u64 },
    #[error("lattice enumeration exceeded the point budget ({0} points)")]
    PointBudget(u64),
    #[error("truncation {have} is insufficient; need at least {need}")]
    InsufficientTruncation { have: usize, need: usize },
    #[error("empty partition has no crank; the n=1 convention lives in the table layer")]
    EmptyPartition,
    #[error("n={0} is outside the supported brute-force range 1..=40")]
    BruteForceRange(i64),
    #[error("expected {expected} weights for k={k}, got {got}")]
    WeightCount { k: u32, expected: usize, got: usize },
    #[error("expected {k} color partitions, got {got}")]
    ColorCount { k: u32, got: usize },
    #[error("weights must be distinct positive integers, got {0:?}")]
    BadWeights(Vec<u32>),
    #[error("delta_k_ell undefined for ell in {{2, 3}}")]
    SmallPrime,
    #[error("progression with unsupported h={0} in search")]
    UnsupportedProgression(u8),
    #[error("excluded case: {0}")]
    ExcludedCase(String),
    #[error("impossibility certificate requested but the search found {0} tuple(s)")]
    SearchNonEmpty(usize),
    #[error("invalid certificate: {0}")]
    BadCertificate(String),
    #[error("cache error: {0}")]
    Cache(String),
    #[error("invalid series dump: {0}")]
    BadDump(String),
}

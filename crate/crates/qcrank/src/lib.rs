//! Exact truncated q-series arithmetic over Laurent polynomials in a
//! formal root of unity ζ, with:
//!
//! - classical building blocks η, θ, θ* in stripped (integer-series) form,
//! - theta-block product/sum identities attached to root systems,
//! - colored-partition crank generating functions and statistics,
//! - cyclotomic-divisibility congruence verification, and
//! - residue-cover searches over crank weight tuples.

pub mod blocks;
pub mod cache;
pub mod classical;
pub mod cranks;
pub mod congruences;
pub mod cyclo;
pub mod error;
pub mod laurent;
pub mod qseries;
pub mod roots;
pub mod search;
pub mod tables;

pub use error::QcrankError;
pub use laurent::LaurentPoly;
pub use qseries::QSeries;

/// The user guide (rendered by mdbook from `book/`), embedded as module
/// docs so its code blocks run as doc-tests and cannot drift from the
/// library.
pub mod guide {
    #![doc = include_str!("../../../book/src/intro.md")]

    #[doc = include_str!("../../../book/src/series.md")]
    pub mod series {}
    #[doc = include_str!("../../../book/src/cranks.md")]
    pub mod cranks {}
    #[doc = include_str!("../../../book/src/congruences.md")]
    pub mod congruences {}
    #[doc = include_str!("../../../book/src/blocks.md")]
    pub mod blocks {}
    #[doc = include_str!("../../../book/src/search.md")]
    pub mod search {}
    #[doc = include_str!("../../../book/src/cli.md")]
    pub mod cli {}
}

//! On-disk cache for truncated q-series.
//!
//! Series are stored in a versioned line-oriented text format:
//! a header `qcrank-series v1 trunc T prefactor24 P`, then one line per
//! q-exponent n holding alternating ζ-exponent / coefficient decimal
//! pairs of the coefficient polynomial. The cache directory is taken from
//! the `QCRANK_CACHE_DIR` environment variable; when it is unset every
//! lookup recomputes.

use std::fs;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::QcrankError;
use crate::laurent::LaurentPoly;
use crate::qseries::QSeries;

pub const CACHE_ENV_VAR: &str = "QCRANK_CACHE_DIR";

/// Serialize a series into the versioned text format.
pub fn dump_qseries(s: &QSeries) -> String {
    let mut out = format!(
        "qcrank-series v1 trunc {} prefactor24 {}\n",
        s.trunc(),
        s.prefactor_24
    );
    for n in 0..=s.trunc() {
        let mut line = n.to_string();
        for (e, c) in s.coeff(n).iter() {
            line.push_str(&format!(" {e} {c}"));
        }
        line.push('\n');
        out.push_str(&line);
    }
    out
}

/// Parse the versioned text format back into a series.
pub fn load_qseries(text: &str) -> Result<QSeries, QcrankError> {
    let bad = |m: String| QcrankError::BadDump(m);
    let mut lines = text.lines();
    let header = lines.next().ok_or_else(|| bad("empty dump".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let (trunc, prefactor) = match fields.as_slice() {
        ["qcrank-series", "v1", "trunc", t, "prefactor24", p] => (
            t.parse::<usize>().map_err(|e| bad(format!("bad trunc: {e}")))?,
            p.parse::<i64>().map_err(|e| bad(format!("bad prefactor: {e}")))?,
        ),
        _ => return Err(bad(format!("unrecognized header: {header}"))),
    };
    let mut coeffs = vec![LaurentPoly::zero(); trunc + 1];
    for (row, line) in lines.enumerate() {
        let mut it = line.split_whitespace();
        let n: usize = it
            .next()
            .ok_or_else(|| bad(format!("blank line {row}")))?
            .parse()
            .map_err(|e| bad(format!("bad exponent on line {row}: {e}")))?;
        if n > trunc || n != row {
            return Err(bad(format!("line {row} carries exponent {n}")));
        }
        let mut poly = LaurentPoly::zero();
        loop {
            let Some(e) = it.next() else { break };
            let c = it
                .next()
                .ok_or_else(|| bad(format!("dangling ζ-exponent on line {row}")))?;
            let e: i64 = e.parse().map_err(|e| bad(format!("bad ζ-exponent: {e}")))?;
            let c = BigInt::from_str(c).map_err(|e| bad(format!("bad coefficient: {e}")))?;
            poly.add_term(e, c);
        }
        coeffs[n] = poly;
    }
    Ok(QSeries::new(trunc, coeffs, prefactor))
}

/// The cache directory, if configured.
pub fn cache_dir() -> Option<PathBuf> {
    std::env::var_os(CACHE_ENV_VAR).map(PathBuf::from)
}

/// Fetch the series under `key` (a filesystem-safe stem that must encode
/// every parameter including the truncation), or build and store it. With
/// no cache directory configured this is a plain call to `build`.
pub fn cached_qseries(
    key: &str,
    build: impl FnOnce() -> Result<QSeries, QcrankError>,
) -> Result<QSeries, QcrankError> {
    let Some(dir) = cache_dir() else {
        return build();
    };
    let path = dir.join(format!("{key}.qcs"));
    if path.is_file() {
        let text = fs::read_to_string(&path)
            .map_err(|e| QcrankError::Cache(format!("read {}: {e}", path.display())))?;
        return load_qseries(&text);
    }
    let series = build()?;
    fs::create_dir_all(&dir)
        .map_err(|e| QcrankError::Cache(format!("create {}: {e}", dir.display())))?;
    fs::write(&path, dump_qseries(&series))
        .map_err(|e| QcrankError::Cache(format!("write {}: {e}", path.display())))?;
    Ok(series)
}

//! Per-tree survey records, their CSV/JSON forms, and the small-tree golden
//! table.
//!
//! Records describe the canonical representative of each isomorphism class
//! ([`CanonicalCode::to_tree`]); witness labelings are indexed by that
//! representative's vertex ids.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::extremal::{canonical_witness, max_balanced_labeling, oracle_result, ExtremalClassification, Method};
use crate::labeling::{is_balanced, Labeling};
use crate::serde_str::serde_via_str;
use crate::tree::{enumerate_trees, CanonicalCode, Tree};

/// The checked-in golden table for all trees on at most six vertices.
pub const SMALL_TREES_GOLDEN: &str = include_str!("../golden/small_trees.csv");

/// Largest `n` covered by the golden table.
pub const GOLDEN_MAX_N: usize = 6;

/// Degrees in non-increasing order, written space-separated.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSequence(pub Vec<usize>);

serde_via_str!(DegreeSequence);

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

impl FromStr for DegreeSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.split_whitespace()
            .map(|t| t.parse().map_err(|_| Error::Parse { line: 1, msg: format!("bad degree {t:?}") }))
            .collect::<Result<_>>()
            .map(DegreeSequence)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurveyRecord {
    pub code: CanonicalCode,
    pub n: usize,
    pub degree_sequence: DegreeSequence,
    pub diameter: usize,
    pub method: Method,
    pub witness: Labeling,
    pub is_max: bool,
    pub is_min: bool,
}

/// Runs `f` on a dedicated pool of `jobs` workers (0 means rayon's default).
pub fn run_with_jobs<T: Send>(jobs: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start {jobs} workers: {e}")))?;
    Ok(pool.install(f))
}

fn diameter_of(t: &Tree, method: Method) -> Result<(usize, Labeling)> {
    match method {
        Method::Search => {
            let r = max_balanced_labeling(t)?;
            Ok((r.value, r.witness_labeling))
        }
        Method::Bfs => {
            let r = oracle_result(t)?;
            Ok((r.value, r.witness_labeling))
        }
        Method::SearchBfs => {
            let r = max_balanced_labeling(t)?;
            let b = oracle_result(t)?;
            if r.value != b.value {
                return Err(Error::MethodDisagreement {
                    what: format!("diameter of {}", CanonicalCode::of(t)),
                    left: r.value,
                    right: b.value,
                });
            }
            Ok((r.value, r.witness_labeling))
        }
        Method::Formula => Err(Error::InvalidParameter("surveys cannot use the formula method".into())),
    }
}

/// One record per isomorphism class of trees on `n` vertices, sorted by code.
pub fn survey(n: usize, method: Method) -> Result<Vec<SurveyRecord>> {
    let trees = enumerate_trees(n)?;
    let rows = trees
        .par_iter()
        .map(|t| Ok((CanonicalCode::of(t), t.degree_sequence(), diameter_of(t, method)?)))
        .collect::<Result<Vec<_>>>()?;
    let class = ExtremalClassification::from_diameters(
        n,
        rows.iter().map(|(c, _, (d, _))| (c.clone(), *d)).collect(),
    );
    let mut records: Vec<SurveyRecord> = rows
        .into_iter()
        .map(|(code, degrees, (diameter, witness))| SurveyRecord {
            is_max: diameter == class.max_value,
            is_min: diameter == class.min_value,
            code,
            n,
            degree_sequence: DegreeSequence(degrees),
            diameter,
            method,
            witness,
        })
        .collect();
    records.sort_by(|a, b| a.code.cmp(&b.code));
    Ok(records)
}

/// Rebuilds the classification from survey records of a single `n`.
pub fn classification(records: &[SurveyRecord]) -> Option<ExtremalClassification> {
    let n = records.first()?.n;
    Some(ExtremalClassification::from_diameters(
        n,
        records.iter().map(|r| (r.code.clone(), r.diameter)).collect(),
    ))
}

fn csv_error(e: csv::Error) -> Error {
    let line = e.position().map_or(0, |p| p.line() as usize);
    Error::Parse { line, msg: e.to_string() }
}

/// CSV with header `code,n,degree_sequence,diameter,method,witness,is_max,is_min`.
pub fn to_csv<T: Serialize>(rows: &[T]) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r).map_err(csv_error)?;
    }
    let bytes = w.into_inner().map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

pub fn from_csv<T: for<'de> Deserialize<'de>>(text: &str) -> Result<Vec<T>> {
    csv::Reader::from_reader(text.as_bytes())
        .deserialize()
        .map(|r| r.map_err(csv_error))
        .collect()
}

pub fn to_json(records: &[SurveyRecord]) -> Result<String> {
    serde_json::to_string_pretty(records).map_err(|e| Error::Parse { line: 0, msg: e.to_string() })
}

pub fn from_json(text: &str) -> Result<Vec<SurveyRecord>> {
    serde_json::from_str(text).map_err(|e| Error::Parse { line: e.line(), msg: e.to_string() })
}

/// A row of the small-tree golden table. The witness is the
/// lexicographically smallest maximum-norm balanced labeling with positive
/// median, which makes the table independent of the method used.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenRow {
    pub code: CanonicalCode,
    pub n: usize,
    pub degree_sequence: DegreeSequence,
    pub diameter: usize,
    pub witness: Labeling,
    pub is_max: bool,
    pub is_min: bool,
}

/// Recomputes the golden table with `Method::Search` or `Method::Bfs`.
pub fn golden_rows(method: Method) -> Result<Vec<GoldenRow>> {
    let mut rows = Vec::new();
    for n in 1..=GOLDEN_MAX_N {
        let trees = enumerate_trees(n)?;
        let per_tree = trees
            .par_iter()
            .map(|t| {
                let (diameter, witness) = canonical_witness(t, method)?;
                debug_assert!(is_balanced(&witness) && witness.norm() as usize == diameter);
                Ok((t, diameter, witness))
            })
            .collect::<Result<Vec<_>>>()?;
        let max = per_tree.iter().map(|r| r.1).max().unwrap();
        let min = per_tree.iter().map(|r| r.1).min().unwrap();
        rows.extend(per_tree.into_iter().map(|(t, diameter, witness)| GoldenRow {
            code: CanonicalCode::of(t),
            n,
            degree_sequence: DegreeSequence(t.degree_sequence()),
            diameter,
            witness,
            is_max: diameter == max,
            is_min: diameter == min,
        }));
    }
    Ok(rows)
}

pub fn golden_csv(method: Method) -> Result<String> {
    to_csv(&golden_rows(method)?)
}

/// Line-by-line differences, one line per mismatch.
pub fn golden_diff(expected: &str, actual: &str) -> Vec<String> {
    let exp: Vec<&str> = expected.lines().collect();
    let act: Vec<&str> = actual.lines().collect();
    (0..exp.len().max(act.len()))
        .filter_map(|i| match (exp.get(i), act.get(i)) {
            (Some(e), Some(a)) if e == a => None,
            (e, a) => Some(format!(
                "line {}: expected {:?}, got {:?}",
                i + 1,
                e.copied().unwrap_or("<missing>"),
                a.copied().unwrap_or("<missing>")
            )),
        })
        .collect()
}

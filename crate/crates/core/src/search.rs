//! Deterministic search over boxes of parameters.
//!
//! Ranges are walked through the residue class `1 mod 4` only. The valid
//! triples of each side are found first, their Dedekind sums are computed
//! once per distinct triple, and then every `(a, b)` pair is evaluated with
//! exact rational arithmetic. Work is spread over a rayon pool but results
//! are always merged in lexicographic order, so the output does not depend
//! on the number of workers.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::dedekind::{self, DedekindError};
use crate::invariants::{
    self, classify_mu, eells_kuiper_from_sums, m_invariant, n_invariant, InvariantError,
    ManifoldParams, ParamTriple,
};
use crate::rational::Rational;

/// At most this many per-entry error messages are kept in [`SearchStats`].
const ERROR_EXAMPLES: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("range {name} is empty ({lo} > {hi})")]
    EmptyRange { name: &'static str, lo: i64, hi: i64 },
    #[error("result limit must be at least 1")]
    ZeroLimit,
    #[error("malformed range `{0}`, expected `lo..hi` or a single integer")]
    MalformedRange(String),
    #[error("could not start worker pool: {0}")]
    Pool(String),
}

/// Inclusive integer interval; only its members `≡ 1 (mod 4)` are visited.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ParamRange {
    pub lo: i64,
    pub hi: i64,
}

impl ParamRange {
    pub fn new(lo: i64, hi: i64) -> Self {
        ParamRange { lo, hi }
    }

    pub fn single(v: i64) -> Self {
        ParamRange { lo: v, hi: v }
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    /// Members congruent to 1 mod 4, ascending.
    pub fn values(&self) -> impl Iterator<Item = i64> + Clone {
        let first = self.lo + (1 - self.lo).rem_euclid(4);
        let hi = self.hi;
        (0..)
            .map(move |i| first + 4 * i)
            .take_while(move |&v| v <= hi)
    }
}

impl FromStr for ParamRange {
    type Err = SearchError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || SearchError::MalformedRange(s.to_string());
        match s.split_once("..") {
            Some((lo, hi)) => {
                let lo = lo.trim().parse().map_err(|_| bad())?;
                let hi = hi.trim().parse().map_err(|_| bad())?;
                Ok(ParamRange::new(lo, hi))
            }
            None => s.trim().parse().map(ParamRange::single).map_err(|_| bad()),
        }
    }
}

impl fmt::Display for ParamRange {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchFilter {
    /// Keep only homotopy spheres, `|n| = 1`.
    pub require_sphere: bool,
    /// Keep only `n ≠ 0`.
    pub require_nonzero_n: bool,
    /// Keep only homotopy spheres whose oriented class lies in this set.
    pub target_classes: Option<BTreeSet<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchSpec {
    /// `[a1, a2, a3]`
    pub a: [ParamRange; 3],
    /// `[b1, b2, b3]`
    pub b: [ParamRange; 3],
    pub filter: SearchFilter,
    /// Maximum number of entries returned.
    pub limit: usize,
}

impl SearchSpec {
    pub fn new(a: [ParamRange; 3], b: [ParamRange; 3]) -> Self {
        SearchSpec {
            a,
            b,
            filter: SearchFilter::default(),
            limit: usize::MAX,
        }
    }

    pub fn check(&self) -> Result<(), SearchError> {
        const NAMES: [&str; 6] = ["a1", "a2", "a3", "b1", "b2", "b3"];
        for (name, r) in NAMES.iter().zip(self.a.iter().chain(&self.b)) {
            if r.is_empty() {
                return Err(SearchError::EmptyRange {
                    name,
                    lo: r.lo,
                    hi: r.hi,
                });
            }
        }
        if self.limit == 0 {
            return Err(SearchError::ZeroLimit);
        }
        Ok(())
    }
}

/// `(lattice size, valid triples)` for one side of the box.
fn side_triples(ranges: &[ParamRange; 3]) -> (u64, Vec<ParamTriple>) {
    let mut lattice = 0;
    let mut valid = Vec::new();
    for c1 in ranges[0].values() {
        for c2 in ranges[1].values() {
            for c3 in ranges[2].values() {
                lattice += 1;
                if let Ok(t) = ParamTriple::new(c1, c2, c3) {
                    valid.push(t);
                }
            }
        }
    }
    (lattice, valid)
}

/// Valid parameter pairs of the box in lexicographic order of
/// `(a1, a2, a3, b1, b2, b3)`.
pub fn enumerate_valid(spec: &SearchSpec) -> impl Iterator<Item = ManifoldParams> {
    let (_, a) = side_triples(&spec.a);
    let (_, b) = side_triples(&spec.b);
    a.into_iter().flat_map(move |a| {
        b.clone()
            .into_iter()
            .map(move |b| ManifoldParams { a, b })
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchEntry {
    pub params: ManifoldParams,
    pub n: i128,
    pub m: Rational,
    /// Present when `n ≠ 0`.
    pub mu: Option<Rational>,
    /// Present when `|n| = 1`.
    pub oriented_class: Option<u8>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    /// Pairs on the `1 mod 4` lattice of the box.
    pub scanned: u64,
    /// Pairs passing validation.
    pub valid: u64,
    pub zero_n: u64,
    pub spheres: u64,
    /// Entries passing the filters, before the limit is applied.
    pub matched: u64,
    pub truncated: bool,
    pub errors: u64,
    /// Errors that indicate an internal inconsistency.
    pub internal_errors: u64,
    pub error_examples: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchResult {
    pub entries: Vec<SearchEntry>,
    /// Oriented class → lexicographically first matching homotopy sphere.
    pub class_coverage: BTreeMap<u8, ManifoldParams>,
    /// Target classes with no witness in the box.
    pub missing_targets: Vec<u8>,
    pub stats: SearchStats,
}

enum Outcome {
    Entry(SearchEntry),
    Failed(ManifoldParams, InvariantError),
}

fn evaluate(
    params: ManifoldParams,
    sums: &HashMap<ParamTriple, Result<Rational, DedekindError>>,
) -> Outcome {
    let run = || -> Result<SearchEntry, InvariantError> {
        let n = n_invariant(&params)?;
        let m = m_invariant(&params);
        if n == 0 {
            return Ok(SearchEntry {
                params,
                n,
                m,
                mu: None,
                oriented_class: None,
            });
        }
        let d_a = sums[&params.a].clone()?;
        let d_b = sums[&params.b].clone()?;
        let mu = eells_kuiper_from_sums(&params, &d_a, &d_b)?;
        let oriented_class = classify_mu(n, &mu)?.oriented_class;
        Ok(SearchEntry {
            params,
            n,
            m,
            mu: Some(mu),
            oriented_class,
        })
    };
    match run() {
        Ok(e) => Outcome::Entry(e),
        Err(err) => Outcome::Failed(params, err),
    }
}

fn keep(filter: &SearchFilter, e: &SearchEntry) -> bool {
    if filter.require_nonzero_n && e.n == 0 {
        return false;
    }
    if filter.require_sphere && e.n.abs() != 1 {
        return false;
    }
    match (&filter.target_classes, e.oriented_class) {
        (Some(targets), Some(c)) => targets.contains(&c),
        (Some(_), None) => false,
        (None, _) => true,
    }
}

/// Runs the search on a pool of `jobs` workers (`None`: rayon's default).
pub fn run_search(spec: &SearchSpec, jobs: Option<usize>) -> Result<SearchResult, SearchError> {
    spec.check()?;
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(j) = jobs {
        builder = builder.num_threads(j.max(1));
    }
    let pool = builder
        .build()
        .map_err(|e| SearchError::Pool(e.to_string()))?;
    Ok(pool.install(|| search_in_pool(spec)))
}

fn search_in_pool(spec: &SearchSpec) -> SearchResult {
    let (a_lattice, a_valid) = side_triples(&spec.a);
    let (b_lattice, b_valid) = side_triples(&spec.b);

    let distinct: Vec<ParamTriple> = a_valid
        .iter()
        .chain(&b_valid)
        .copied()
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let sums: HashMap<_, _> = distinct
        .par_iter()
        .map(|t| (*t, dedekind::triple_dedekind_sum(t)))
        .collect();

    let rows: Vec<Vec<Outcome>> = a_valid
        .par_iter()
        .map(|&a| {
            b_valid
                .iter()
                .map(|&b| evaluate(ManifoldParams { a, b }, &sums))
                .collect()
        })
        .collect();

    let mut stats = SearchStats {
        scanned: a_lattice * b_lattice,
        valid: (a_valid.len() * b_valid.len()) as u64,
        ..Default::default()
    };
    let mut entries = Vec::new();
    let mut class_coverage = BTreeMap::new();
    for outcome in rows.into_iter().flatten() {
        match outcome {
            Outcome::Entry(e) => {
                if e.n == 0 {
                    stats.zero_n += 1;
                }
                if e.n.abs() == 1 {
                    stats.spheres += 1;
                }
                if !keep(&spec.filter, &e) {
                    continue;
                }
                stats.matched += 1;
                if let Some(c) = e.oriented_class {
                    class_coverage.entry(c).or_insert(e.params);
                }
                if entries.len() < spec.limit {
                    entries.push(e);
                } else {
                    stats.truncated = true;
                }
            }
            Outcome::Failed(params, err) => {
                stats.errors += 1;
                if err.is_internal() {
                    stats.internal_errors += 1;
                }
                if stats.error_examples.len() < ERROR_EXAMPLES {
                    stats.error_examples.push(format!("{params}: {err}"));
                }
            }
        }
    }
    let missing_targets = spec
        .filter
        .target_classes
        .iter()
        .flatten()
        .filter(|c| !class_coverage.contains_key(c))
        .copied()
        .collect();
    SearchResult {
        entries,
        class_coverage,
        missing_targets,
        stats,
    }
}

/// `a = (−3, 12k − 3, 12l + 1)`, `b = (1, 4r + 1, 4s + 1)`.
///
/// For this family `D(a) = −(4l + 1)/28` and `D(b) = 0`.
pub fn corollary_family(k: i64, l: i64, r: i64, s: i64) -> Result<ManifoldParams, InvariantError> {
    invariants::validate([-3, 12 * k - 3, 12 * l + 1], [1, 4 * r + 1, 4 * s + 1])
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryRow {
    pub r: i64,
    pub mu: Rational,
    pub oriented_class: u8,
}

/// `28μ mod 28` along `a = (−3, −3, 1)`, `b = (1, 4r + 1, 4r + 1)`, where
/// every member is a homotopy sphere.
pub fn corollary_table(r_values: &[i64]) -> Result<Vec<CorollaryRow>, InvariantError> {
    r_values
        .iter()
        .map(|&r| {
            let p = corollary_family(0, 0, r, r)?;
            let n = n_invariant(&p)?;
            assert_eq!(n.abs(), 1, "corollary subfamily must consist of homotopy spheres");
            let mu = invariants::eells_kuiper(&p)?;
            let class = classify_mu(n, &mu)?
                .oriented_class
                .expect("homotopy spheres are classified");
            Ok(CorollaryRow {
                r,
                mu,
                oriented_class: class,
            })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryTable {
    pub rows: Vec<CorollaryRow>,
    /// Oriented class → first `r` attaining it.
    pub class_coverage: BTreeMap<u8, i64>,
    pub missing_targets: Vec<u8>,
}

impl CorollaryTable {
    pub fn build(
        r_values: &[i64],
        targets: Option<&BTreeSet<u8>>,
    ) -> Result<Self, InvariantError> {
        let rows = corollary_table(r_values)?;
        let mut class_coverage = BTreeMap::new();
        for row in &rows {
            class_coverage.entry(row.oriented_class).or_insert(row.r);
        }
        let missing_targets = targets
            .into_iter()
            .flatten()
            .filter(|c| !class_coverage.contains_key(c))
            .copied()
            .collect();
        Ok(CorollaryTable {
            rows,
            class_coverage,
            missing_targets,
        })
    }
}

//! The 3-coloring diameter as the largest norm of a balanced labeling,
//! closed forms for the extremal families, explicit high-norm labelings,
//! and the classification of extremal trees.

mod search;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::coloring::{antipodal_pairs, oracle_diameter, Coloring};
use crate::error::{Error, Result};
use crate::labeling::{balance, balanced_shifts, lift, realize, HalfInt, Labeling};
use crate::serde_str::serde_via_str;
use crate::tree::{self, enumerate_trees, leaf_profile, CanonicalCode, Tree};

use search::LabelSearch;

/// Largest tree handed to the labeling search.
pub const SEARCH_LIMIT: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Method {
    /// Branch and bound over balanced labelings.
    Search,
    /// Breadth-first search over the coloring graph.
    Bfs,
    /// Closed form for a known family.
    Formula,
    /// Search, confirmed equal by BFS.
    SearchBfs,
}

serde_via_str!(Method);

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Search => "search",
            Method::Bfs => "bfs",
            Method::Formula => "formula",
            Method::SearchBfs => "search+bfs",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Method> {
        Ok(match s {
            "search" => Method::Search,
            "bfs" => Method::Bfs,
            "formula" => Method::Formula,
            "search+bfs" => Method::SearchBfs,
            _ => return Err(Error::Parse { line: 1, msg: format!("unknown method {s:?}") }),
        })
    }
}

/// A diameter value with the evidence behind it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiameterResult {
    pub value: usize,
    pub method: Method,
    pub witness_labeling: Labeling,
    pub witness_pair: Option<(Coloring, Coloring)>,
}

fn choose2(k: i64) -> i64 {
    if k < 2 {
        0
    } else {
        k * (k - 1) / 2
    }
}

/// `C(ceil(n/2) - 1, 2) + C(floor(n/2) + 2, 2)`, the sum of `|x|` over
/// `I_n = [2 - ceil(n/2), floor(n/2) + 1]`. This is the diameter of the path
/// for every `n` except 3 (where the path is a star with diameter 4).
pub fn path_diameter_formula(n: usize) -> usize {
    let n = n as i64;
    (choose2((n + 1) / 2 - 1) + choose2(n / 2 + 2)) as usize
}

/// `floor(3n/2)`.
pub fn min_diameter_formula(n: usize) -> usize {
    3 * n / 2
}

/// Labels `I_n` in order along `tree::path(n)`.
pub fn sequential_path_labeling(n: usize) -> Labeling {
    let lo = 2 - (n as i64 + 1) / 2;
    Labeling::new((0..n as i64).map(|i| lo + i).collect())
}

/// `ceil(n/2)` ones on the lowest vertex ids, twos elsewhere. Balanced for
/// every tree, norm `floor(3n/2)`.
pub fn two_level_labeling(t: &Tree) -> Labeling {
    let ones = t.n().div_ceil(2);
    Labeling::new((0..t.n()).map(|v| if v < ones { 1 } else { 2 }).collect())
}

fn half_up(n: usize) -> i64 {
    n.div_ceil(2) as i64
}

/// Balanced labeling of norm `floor(3n/2) + 1` around a leaf `v` whose
/// distance-2 sphere has at most `ceil(n/2) - 4` vertices: `-1` on `v`, `0`
/// on its neighbor, `1` on the distance-2 sphere topped up with the
/// lowest-numbered further vertices to `ceil(n/2) - 4` ones, `2` elsewhere.
pub fn small_n2_labeling(t: &Tree, v: usize) -> Result<Labeling> {
    let p = leaf_profile(t, v)?;
    let ones = half_up(t.n()) - 4;
    if p.n2 as i64 > ones {
        return Err(Error::HypothesisFailed(format!(
            "|N2({v})| = {} exceeds ceil(n/2) - 4 = {ones}",
            p.n2
        )));
    }
    let u = p.anchor();
    let mut h = vec![2i64; t.n()];
    h[v] = -1;
    h[u] = 0;
    let sphere = p.sphere(2);
    let extra = (p.n2 as i64..ones).count();
    let fill = (0..t.n()).filter(|&w| p.dist[w] >= 3).take(extra);
    for w in sphere.into_iter().chain(fill) {
        h[w] = 1;
    }
    let h = Labeling::new(h);
    h.check(t)?;
    Ok(h)
}

/// Balanced labeling of norm `floor(3n/2) + 1` around a leaf `v` with
/// `|N2(v)| = ceil(n/2) - 4 + k` and `|N>=4(v)| >= k`: `-1` on `v`, `0` on
/// its neighbor, `1` on the distance-2 sphere, `3` on `k` far vertices
/// (lowest ids first, among those with every neighbor labeled 2 or 3), `2`
/// elsewhere.
pub fn large_n2_labeling(t: &Tree, v: usize, k: usize) -> Result<Labeling> {
    let p = leaf_profile(t, v)?;
    if k == 0 {
        return Err(Error::HypothesisFailed("k must be at least 1".into()));
    }
    let want = half_up(t.n()) - 4 + k as i64;
    if p.n2 as i64 != want {
        return Err(Error::HypothesisFailed(format!(
            "|N2({v})| = {} but ceil(n/2) - 4 + k = {want}",
            p.n2
        )));
    }
    if p.n_ge4 < k {
        return Err(Error::HypothesisFailed(format!("|N>=4({v})| = {} < k = {k}", p.n_ge4)));
    }
    let u = p.anchor();
    let mut h = vec![2i64; t.n()];
    h[v] = -1;
    h[u] = 0;
    for w in p.sphere(2) {
        h[w] = 1;
    }
    let mut chosen = 0;
    for w in p.beyond(4) {
        if chosen == k {
            break;
        }
        if t.neighbors(w).iter().all(|&x| h[x] >= 2) {
            h[w] = 3;
            chosen += 1;
        }
    }
    if chosen < k {
        return Err(Error::NoValidAssignment { k });
    }
    let h = Labeling::new(h);
    h.check(t)?;
    Ok(h)
}

/// A leaf witnessing that `t` is not a minimizer, through one of the two
/// constructions above.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Certificate {
    SmallSphere { leaf: usize },
    LargeSphere { leaf: usize, k: usize },
}

impl Certificate {
    pub fn labeling(&self, t: &Tree) -> Result<Labeling> {
        match *self {
            Certificate::SmallSphere { leaf } => small_n2_labeling(t, leaf),
            Certificate::LargeSphere { leaf, k } => large_n2_labeling(t, leaf, k),
        }
    }
}

/// Every (leaf, construction) pair whose hypotheses hold on `t`.
pub fn certificates(t: &Tree) -> Vec<Certificate> {
    let half = half_up(t.n());
    let mut out = Vec::new();
    for leaf in t.leaves() {
        let p = leaf_profile(t, leaf).unwrap();
        let n2 = p.n2 as i64;
        if n2 <= half - 4 {
            out.push(Certificate::SmallSphere { leaf });
        } else {
            let k = n2 + 4 - half;
            if p.n_ge4 as i64 >= k {
                out.push(Certificate::LargeSphere { leaf, k: k as usize });
            }
        }
    }
    out
}

fn check_search_limit(t: &Tree) -> Result<()> {
    if t.n() > SEARCH_LIMIT {
        return Err(Error::LimitExceeded { what: "labeling search", n: t.n(), limit: SEARCH_LIMIT });
    }
    Ok(())
}

/// Exact diameter of `C3(T)` as the largest norm of a balanced labeling.
/// The witness has nonnegative median; the witness pair realizes it.
pub fn max_balanced_labeling(t: &Tree) -> Result<DiameterResult> {
    check_search_limit(t)?;
    let (value, witness) = LabelSearch::maximum(t);
    let pair = realize(t, &witness)?;
    Ok(DiameterResult {
        value: value as usize,
        method: Method::Search,
        witness_labeling: witness,
        witness_pair: Some(pair),
    })
}

/// Every balanced labeling of maximum norm, sorted, with that norm.
pub fn all_maximizers(t: &Tree) -> Result<(usize, Vec<Labeling>)> {
    check_search_limit(t)?;
    let (value, _) = LabelSearch::maximum(t);
    Ok((value as usize, LabelSearch::all_with_norm(t, value)))
}

/// Medians of all maximum-norm balanced labelings.
pub fn maximizer_median_check(t: &Tree) -> Result<BTreeSet<HalfInt>> {
    Ok(all_maximizers(t)?.1.iter().map(Labeling::median).collect())
}

/// The medians a maximizer may have: `±1`, `±3/2`, `±2`.
pub fn allowed_maximizer_median(m: HalfInt) -> bool {
    matches!(m.twice().abs(), 2..=4)
}

/// Diameter by BFS over `C3(T)`, with the balanced lift of the attaining
/// pair as witness labeling.
pub fn oracle_result(t: &Tree) -> Result<DiameterResult> {
    let (value, (f, g)) = oracle_diameter(t)?;
    let witness = balance(&lift(t, &f, &g)?);
    Ok(DiameterResult { value, method: Method::Bfs, witness_labeling: witness, witness_pair: Some((f, g)) })
}

/// Closed-form diameter for stars, double stars with arms differing by at
/// most four, and paths; `None` for other trees.
pub fn formula_diameter(t: &Tree) -> Option<usize> {
    let n = t.n();
    if is_star(t) || is_nearly_symmetric_double_star(t) {
        Some(min_diameter_formula(n))
    } else if t.degree_sequence().first() == Some(&2) {
        Some(path_diameter_formula(n))
    } else {
        None
    }
}

/// Formula value with its known extremal labeling as witness.
pub fn formula_result(t: &Tree) -> Option<DiameterResult> {
    let value = formula_diameter(t)?;
    let witness = if value == min_diameter_formula(t.n()) {
        two_level_labeling(t)
    } else {
        // Lay I_n along the path starting from one end.
        let end = t.leaves().next()?;
        let (order, _) = t.bfs_order(end);
        let seq = sequential_path_labeling(t.n());
        let mut h = vec![0; t.n()];
        for (i, v) in order.into_iter().enumerate() {
            h[v] = seq[i];
        }
        Labeling::new(h)
    };
    let pair = realize(t, &witness).ok();
    Some(DiameterResult { value, method: Method::Formula, witness_labeling: witness, witness_pair: pair })
}

pub fn is_star(t: &Tree) -> bool {
    t.n() <= 2 || (0..t.n()).any(|v| t.degree(v) == t.n() - 1)
}

/// Arm sizes `(a, b)` with `a >= b >= 1` if `t` is a double star.
pub fn double_star_arms(t: &Tree) -> Option<(usize, usize)> {
    let inner: Vec<usize> = (0..t.n()).filter(|&v| t.degree(v) > 1).collect();
    match inner[..] {
        [x, y] if t.neighbors(x).contains(&y) => {
            let (a, b) = (t.degree(x) - 1, t.degree(y) - 1);
            Some((a.max(b), a.min(b)))
        }
        _ => None,
    }
}

pub fn is_nearly_symmetric_double_star(t: &Tree) -> bool {
    double_star_arms(t).is_some_and(|(a, b)| a - b <= 4)
}

/// The canonical witness of a tree's diameter: the lexicographically
/// smallest maximum-norm balanced labeling with positive median.
///
/// `Method::Search` reads it off the labeling search; `Method::Bfs` derives
/// it independently from every antipodal pair of colorings, collecting all
/// least-norm members of each pair's lift class.
pub fn canonical_witness(t: &Tree, method: Method) -> Result<(usize, Labeling)> {
    let (value, candidates) = match method {
        Method::Bfs => {
            let (value, pairs) = antipodal_pairs(t)?;
            let mut set = BTreeSet::new();
            for (f, g) in pairs {
                set.extend(balanced_shifts(&lift(t, &f, &g)?));
            }
            (value, set.into_iter().collect::<Vec<_>>())
        }
        _ => all_maximizers(t)?,
    };
    let witness = candidates
        .into_iter()
        .filter(|h| h.median().twice() > 0)
        .min()
        .ok_or_else(|| Error::HypothesisFailed("no maximizer with positive median".into()))?;
    Ok((value, witness))
}

/// Extremal trees among all trees on `n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalClassification {
    pub n: usize,
    pub diameters: Vec<(CanonicalCode, usize)>,
    pub max_trees: BTreeSet<CanonicalCode>,
    pub min_trees: BTreeSet<CanonicalCode>,
    pub max_value: usize,
    pub min_value: usize,
}

impl ExtremalClassification {
    pub fn from_diameters(n: usize, diameters: Vec<(CanonicalCode, usize)>) -> ExtremalClassification {
        let max_value = diameters.iter().map(|d| d.1).max().unwrap();
        let min_value = diameters.iter().map(|d| d.1).min().unwrap();
        let pick = |v: usize| diameters.iter().filter(|d| d.1 == v).map(|d| d.0.clone()).collect();
        ExtremalClassification {
            n,
            max_trees: pick(max_value),
            min_trees: pick(min_value),
            max_value,
            min_value,
            diameters,
        }
    }

    /// Differences from the predicted extremal sets and values (empty when
    /// they agree). Only meaningful for `n >= 7`.
    pub fn extremal_mismatches(&self) -> Vec<String> {
        let (max_set, min_set) = predicted_extremal_sets(self.n);
        let mut out = Vec::new();
        let expect = |out: &mut Vec<String>, what: &str, got: String, want: String| {
            if got != want {
                out.push(format!("{what}: got {got}, expected {want}"));
            }
        };
        expect(&mut out, "max value", self.max_value.to_string(), path_diameter_formula(self.n).to_string());
        expect(&mut out, "min value", self.min_value.to_string(), min_diameter_formula(self.n).to_string());
        expect(&mut out, "max trees", format!("{:?}", self.max_trees), format!("{max_set:?}"));
        expect(&mut out, "min trees", format!("{:?}", self.min_trees), format!("{min_set:?}"));
        out
    }
}

/// `({path}, {star} ∪ {S(a,b) : a + b + 2 = n, |a - b| <= 4})`.
pub fn predicted_extremal_sets(n: usize) -> (BTreeSet<CanonicalCode>, BTreeSet<CanonicalCode>) {
    let max = BTreeSet::from([CanonicalCode::of(&tree::path(n).unwrap())]);
    let mut min = BTreeSet::from([CanonicalCode::of(&tree::star(n).unwrap())]);
    for b in 1..n {
        let Some(a) = n.checked_sub(b + 2) else { break };
        if a >= b && a - b <= 4 {
            min.insert(CanonicalCode::of(&tree::double_star(a, b).unwrap()));
        }
    }
    (max, min)
}

/// Diameters of every tree on `n` vertices by labeling search, in parallel,
/// with the extremal sets.
pub fn classify_extremal(n: usize) -> Result<ExtremalClassification> {
    if n > SEARCH_LIMIT {
        return Err(Error::LimitExceeded { what: "labeling search", n, limit: SEARCH_LIMIT });
    }
    let trees = enumerate_trees(n)?;
    let diameters = trees
        .par_iter()
        .map(|t| Ok((CanonicalCode::of(t), max_balanced_labeling(t)?.value)))
        .collect::<Result<Vec<_>>>()?;
    Ok(ExtremalClassification::from_diameters(n, diameters))
}

//! Integer labelings of trees and the L1 geometry of their shift lattice.
//!
//! A labeling assigns integers to vertices so that adjacent labels differ by
//! at most one. For proper colorings `f`, `g` the labelings congruent to
//! `g - f` mod 3 form a single class `{h + 3m}`; the distance from `f` to `g`
//! in `C3(T)` is the smallest L1 norm in that class. A labeling is balanced
//! when it attains that minimum.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Deref;
use std::str::FromStr;

use crate::coloring::Coloring;
use crate::error::{Error, Result};
use crate::serde_str::serde_via_str;
use crate::tree::Tree;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Labeling(Vec<i64>);

serde_via_str!(Labeling);

impl Labeling {
    pub fn new(labels: Vec<i64>) -> Labeling {
        Labeling(labels)
    }

    pub fn into_inner(self) -> Vec<i64> {
        self.0
    }

    /// `||h||_1`.
    pub fn norm(&self) -> i64 {
        phi(self, 0)
    }

    /// `h + x`, pointwise.
    pub fn shifted(&self, x: i64) -> Labeling {
        Labeling(self.0.iter().map(|&l| l + x).collect())
    }

    pub fn negated(&self) -> Labeling {
        Labeling(self.0.iter().map(|&l| -l).collect())
    }

    pub fn median(&self) -> HalfInt {
        median_of(self.0.clone())
    }

    /// Checks size and the edge condition against `t`.
    pub fn check(&self, t: &Tree) -> Result<()> {
        if self.len() != t.n() {
            return Err(Error::SizeMismatch { expected: t.n(), got: self.len() });
        }
        match t.edges().iter().find(|&&(u, v)| (self.0[u] - self.0[v]).abs() > 1) {
            Some(&(u, v)) => Err(Error::InvalidLabeling(u, v)),
            None => Ok(()),
        }
    }
}

impl Deref for Labeling {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl From<Vec<i64>> for Labeling {
    fn from(v: Vec<i64>) -> Self {
        Labeling(v)
    }
}

/// Space-separated integers, vertex 0 first.
impl fmt::Display for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Labeling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Labeling({self})")
    }
}

impl FromStr for Labeling {
    type Err = Error;

    fn from_str(s: &str) -> Result<Labeling> {
        s.split_whitespace()
            .map(|tok| {
                tok.parse::<i64>()
                    .map_err(|_| Error::Parse { line: 1, msg: format!("bad label {tok:?}") })
            })
            .collect::<Result<Vec<_>>>()
            .map(Labeling)
    }
}

/// An element of `(1/2)Z`, stored as twice its value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HalfInt(i64);

impl HalfInt {
    pub const fn from_twice(twice: i64) -> HalfInt {
        HalfInt(twice)
    }

    pub const fn from_int(v: i64) -> HalfInt {
        HalfInt(2 * v)
    }

    pub const fn twice(self) -> i64 {
        self.0
    }

    pub fn abs(self) -> HalfInt {
        HalfInt(self.0.abs())
    }

    pub fn is_integer(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_integer() {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

impl fmt::Debug for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn median_of(mut labels: Vec<i64>) -> HalfInt {
    assert!(!labels.is_empty(), "median of an empty labeling");
    labels.sort_unstable();
    let n = labels.len();
    if n % 2 == 1 {
        HalfInt::from_int(labels[n / 2])
    } else {
        HalfInt(labels[n / 2 - 1] + labels[n / 2])
    }
}

/// True iff `h` has one label per vertex and adjacent labels differ by at most one.
pub fn is_labeling(t: &Tree, h: &Labeling) -> Result<bool> {
    match h.check(t) {
        Ok(()) => Ok(true),
        Err(Error::InvalidLabeling(..)) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The labeling in the class of `(f, g)` whose value at vertex 0 is the
/// residue of `g(0) - f(0)` in `{-1, 0, 1}`. Every other member of the class
/// is this one shifted by a multiple of three.
pub fn lift(t: &Tree, f: &Coloring, g: &Coloring) -> Result<Labeling> {
    f.check_proper(t)?;
    g.check_proper(t)?;
    let residue = |v: usize| (g.get(v) as i64 - f.get(v) as i64).rem_euclid(3);
    let mut h = vec![0i64; t.n()];
    let (order, parent) = t.bfs_order(0);
    h[0] = match residue(0) {
        2 => -1,
        r => r,
    };
    for &v in &order[1..] {
        let p = h[parent[v]];
        h[v] = (p - 1..=p + 1).find(|x| x.rem_euclid(3) == residue(v)).unwrap();
    }
    Ok(Labeling(h))
}

/// A pair of proper colorings `(f, g)` with `g - f = h` mod 3, built one leaf
/// at a time: each new vertex has two admissible colors under `f` and two
/// under `g`, and the four differences cover every residue.
pub fn realize(t: &Tree, h: &Labeling) -> Result<(Coloring, Coloring)> {
    h.check(t)?;
    let n = t.n();
    let (mut f, mut g) = (vec![0u8; n], vec![0u8; n]);
    let (order, parent) = t.bfs_order(0);
    g[0] = h[0].rem_euclid(3) as u8;
    for &v in &order[1..] {
        let p = parent[v];
        let want = h[v].rem_euclid(3);
        let (fv, gv) = [1u8, 2]
            .into_iter()
            .flat_map(|a| [1u8, 2].map(|b| ((f[p] + a) % 3, (g[p] + b) % 3)))
            .find(|&(fv, gv)| (gv as i64 - fv as i64).rem_euclid(3) == want)
            .unwrap();
        f[v] = fv;
        g[v] = gv;
    }
    Ok((Coloring::new(f)?, Coloring::new(g)?))
}

/// `Phi(x) = sum_v |h(v) + x|`.
pub fn phi(h: &[i64], x: i64) -> i64 {
    h.iter().map(|&l| (l + x).abs()).sum()
}

/// Label histogram of a labeling with the order statistics used to reason
/// about `Phi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiProfile {
    histogram: BTreeMap<i64, usize>,
    n: usize,
    median: HalfInt,
}

impl PhiProfile {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn median(&self) -> HalfInt {
        self.median
    }

    pub fn histogram(&self) -> &BTreeMap<i64, usize> {
        &self.histogram
    }

    /// `a_i`, the number of vertices labeled `i`.
    pub fn count(&self, i: i64) -> usize {
        self.histogram.get(&i).copied().unwrap_or(0)
    }

    /// `A_{>=t}`.
    pub fn count_ge(&self, t: i64) -> usize {
        self.histogram.range(t..).map(|(_, &c)| c).sum()
    }

    /// `A_{<=t}`.
    pub fn count_le(&self, t: i64) -> usize {
        self.histogram.range(..=t).map(|(_, &c)| c).sum()
    }

    /// `Delta_k = Phi(k+1) - Phi(k) = 2 A_{>=-k} - n`.
    pub fn slope(&self, k: i64) -> i64 {
        2 * self.count_ge(-k) as i64 - self.n as i64
    }

    /// Smallest and largest label.
    pub fn range(&self) -> Option<(i64, i64)> {
        Some((*self.histogram.keys().next()?, *self.histogram.keys().next_back()?))
    }

    /// Integers `x` minimizing `Phi`: those with `-x` in `[M - 1/2, M + 1/2]`.
    pub fn minimizers(&self) -> Vec<i64> {
        let m2 = self.median.twice();
        // -x in [(m2 - 1)/2, (m2 + 1)/2]  <=>  x in [-(m2 + 1)/2, -(m2 - 1)/2]
        let lo = (-(m2 + 1)).div_euclid(2) + i64::from((-(m2 + 1)).rem_euclid(2) != 0);
        let hi = (-(m2 - 1)).div_euclid(2);
        (lo..=hi).collect()
    }
}

pub fn slopes(h: &Labeling) -> PhiProfile {
    let mut histogram = BTreeMap::new();
    for &l in h.iter() {
        *histogram.entry(l).or_insert(0) += 1;
    }
    PhiProfile { histogram, n: h.len(), median: h.median() }
}

/// `||h||_1 <= min(||h - 3||_1, ||h + 3||_1)`. By convexity of `Phi` this
/// is the same as `||h||_1 <= ||h + 3m||_1` for every integer `m`.
pub fn is_balanced(h: &[i64]) -> bool {
    let here = phi(h, 0);
    here <= phi(h, -3) && here <= phi(h, 3)
}

/// The shift `h + 3m` of least L1 norm.
///
/// When two shifts tie, the one with nonnegative median is returned; should
/// both medians have the same sign, the one closer to zero wins.
pub fn balance(h: &Labeling) -> Labeling {
    if h.is_empty() {
        return h.clone();
    }
    let reach = (h.iter().map(|l| l.abs()).max().unwrap() + 3) / 3 + 1;
    let best = (-reach..=reach)
        .map(|m| (phi(h, 3 * m), m))
        .min_by_key(|&(norm, _)| norm)
        .unwrap()
        .0;
    (-reach..=reach)
        .filter(|&m| phi(h, 3 * m) == best)
        .map(|m| h.shifted(3 * m))
        .min_by_key(|c| {
            let med = c.median();
            (med.twice() < 0, med.abs())
        })
        .unwrap()
}

/// Every shift of `h` attaining the least L1 norm (one or two labelings).
pub fn balanced_shifts(h: &Labeling) -> Vec<Labeling> {
    let reach = (h.iter().map(|l| l.abs()).max().unwrap_or(0) + 3) / 3 + 1;
    let best = (-reach..=reach).map(|m| phi(h, 3 * m)).min().unwrap();
    (-reach..=reach)
        .filter(|&m| phi(h, 3 * m) == best)
        .map(|m| h.shifted(3 * m))
        .collect()
}

/// Distance from `f` to `g` in `C3(T)`: the L1 norm of the balanced lift.
pub fn labeling_distance(t: &Tree, f: &Coloring, g: &Coloring) -> Result<usize> {
    Ok(balance(&lift(t, f, g)?).norm() as usize)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{path, star};

    fn lab(v: &[i64]) -> Labeling {
        Labeling(v.to_vec())
    }

    fn col(s: &str) -> Coloring {
        s.parse().unwrap()
    }

    #[test]
    fn edge_condition() {
        assert!(is_labeling(&path(4).unwrap(), &lab(&[1, 1, 2, 2])).unwrap());
        assert!(!is_labeling(&path(2).unwrap(), &lab(&[0, 2])).unwrap());
        assert!(is_labeling(&star(5).unwrap(), &lab(&[0; 5])).unwrap());
        assert!(matches!(
            is_labeling(&path(3).unwrap(), &lab(&[0, 0])),
            Err(Error::SizeMismatch { expected: 3, got: 2 })
        ));
    }

    #[test]
    fn lifts() {
        let p2 = path(2).unwrap();
        assert_eq!(lift(&p2, &col("01"), &col("01")).unwrap(), lab(&[0, 0]));
        assert_eq!(lift(&p2, &col("01"), &col("10")).unwrap(), lab(&[1, 2]));
        let p3 = path(3).unwrap();
        let h = lift(&p3, &col("010"), &col("101")).unwrap();
        assert_eq!(h, lab(&[1, 2, 1]));
        assert_eq!(h.norm(), 4);
        assert_eq!(h.shifted(-3).norm(), 5);
        assert!(matches!(lift(&p3, &col("011"), &col("101")), Err(Error::ImproperColoring(1, 2))));
    }

    #[test]
    fn realizes() {
        let p3 = path(3).unwrap();
        let (f, g) = realize(&p3, &lab(&[0, 0, 0])).unwrap();
        assert_eq!(f, g);
        let p2 = path(2).unwrap();
        let (f, g) = realize(&p2, &lab(&[1, 2])).unwrap();
        assert_eq!(lift(&p2, &f, &g).unwrap(), lab(&[1, 2]));
        assert!(realize(&p2, &lab(&[0, 2])).is_err());
    }

    #[test]
    fn phi_values() {
        let h = lab(&[1, 1, 2, 2]);
        assert_eq!(phi(&h, 0), 6);
        assert_eq!(phi(&h, -3), 6);
        assert_eq!(phi(&h, 1), 10);
    }

    #[test]
    fn profile() {
        let p = slopes(&lab(&[1, 1, 2, 2]));
        assert_eq!(p.slope(0), 4);
        assert_eq!(p.slope(0), phi(&[1, 1, 2, 2], 1) - phi(&[1, 1, 2, 2], 0));
        assert_eq!(slopes(&lab(&[-1, 0, 1, 2, 3, 4])).median(), HalfInt::from_twice(3));
        let single = slopes(&lab(&[0]));
        assert_eq!(single.slope(0), 1);
        assert_eq!(single.slope(-1), -1);
        assert_eq!(single.count_le(0), 1);
        assert_eq!(single.minimizers(), vec![0]);
        assert_eq!(slopes(&lab(&[1, 2])).minimizers(), vec![-2, -1]);
    }

    #[test]
    fn half_int_display() {
        assert_eq!(HalfInt::from_twice(3).to_string(), "3/2");
        assert_eq!(HalfInt::from_twice(-4).to_string(), "-2");
    }

    #[test]
    fn balanced_examples() {
        assert!(is_balanced(&[1, 1, 2, 2]));
        assert!(!is_balanced(&[4, 4, 5, 5]));
        assert!(is_balanced(&[-1, 0, 1, 2, 3, 4]));
        assert_eq!(phi(&[-1, 0, 1, 2, 3, 4], -3), 11);
        assert_eq!(phi(&[-1, 0, 1, 2, 3, 4], 0), 11);
        assert_eq!(phi(&[-1, 0, 1, 2, 3, 4], 3), 27);
    }

    #[test]
    fn balancing() {
        assert_eq!(balance(&lab(&[4, 4, 5, 5])), lab(&[1, 1, 2, 2]));
        assert_eq!(balance(&lab(&[-1, 0, 1, 2, 3, 4])), lab(&[-1, 0, 1, 2, 3, 4]));
        // Tie between (-2,-2,-1,-1) and (1,1,2,2); the nonnegative median wins.
        assert_eq!(balance(&lab(&[-2, -2, -1, -1])), lab(&[1, 1, 2, 2]));
        assert_eq!(balanced_shifts(&lab(&[-2, -2, -1, -1])).len(), 2);
    }

    #[test]
    fn distances() {
        let p2 = path(2).unwrap();
        assert_eq!(labeling_distance(&p2, &col("01"), &col("01")).unwrap(), 0);
        assert_eq!(labeling_distance(&p2, &col("01"), &col("10")).unwrap(), 3);
    }
}

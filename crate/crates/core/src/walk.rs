//! Explicit reconfiguration walks realizing a labeling.
//!
//! Given a start coloring `f` and a labeling `h`, [`build_walk`] produces a
//! walk of length `||h||_1` ending at `f + h` (mod 3) in which every vertex
//! `w` is toggled `|h(w)|` times, always in direction `sign(h(w))`. Leaves
//! are stripped (highest id first) down to a single vertex and then put back
//! one at a time, splicing each leaf's toggles into the walk of the smaller
//! tree around the toggles of its neighbor.

use std::fmt;
use std::str::FromStr;

use crate::coloring::{toggle, Coloring};
use crate::error::{Error, Result};
use crate::labeling::Labeling;
use crate::tree::Tree;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Dir {
    Up,
    Down,
}

impl Dir {
    pub fn eps(self) -> i8 {
        match self {
            Dir::Up => 1,
            Dir::Down => -1,
        }
    }

    fn of_sign(s: i64) -> Dir {
        if s > 0 {
            Dir::Up
        } else {
            Dir::Down
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub vertex: usize,
    pub dir: Dir,
}

/// A start coloring and the toggles applied to it, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk {
    pub start: Coloring,
    pub steps: Vec<Step>,
}

impl Walk {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }
}

/// Start coloring on the first line, then one `v +1` / `v -1` line per step.
impl fmt::Display for Walk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.start)?;
        for s in &self.steps {
            writeln!(f, "{} {:+}", s.vertex, s.dir.eps())?;
        }
        Ok(())
    }
}

impl FromStr for Walk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Walk> {
        let mut lines = s.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
        let (_, first) = lines.next().ok_or(Error::Parse { line: 1, msg: "empty walk".into() })?;
        let start: Coloring = first.parse()?;
        let steps = lines
            .map(|(i, l)| {
                let bad = || Error::Parse { line: i + 1, msg: format!("expected \"v +1\" or \"v -1\", found {l:?}") };
                let mut it = l.split_whitespace();
                let vertex = it.next().and_then(|v| v.parse().ok()).ok_or_else(bad)?;
                let dir = match it.next() {
                    Some("+1") => Dir::Up,
                    Some("-1") => Dir::Down,
                    _ => return Err(bad()),
                };
                if it.next().is_some() {
                    return Err(bad());
                }
                Ok(Step { vertex, dir })
            })
            .collect::<Result<_>>()?;
        Ok(Walk { start, steps })
    }
}

/// Outcome of replaying a walk.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkReport {
    /// Start coloring is proper and every step stays proper.
    pub valid: bool,
    pub start_proper: bool,
    /// Index of the first step that is out of range or produces an improper coloring.
    pub invalid_at: Option<usize>,
    /// Coloring after the last valid step.
    pub end: Coloring,
    pub length: usize,
    /// Number of toggles of each vertex.
    pub toggle_counts: Vec<usize>,
    /// Net signed toggles of each vertex.
    pub net: Vec<i64>,
    /// Every vertex is toggled in one direction only.
    pub monotone: bool,
    /// Some vertex is toggled in both directions.
    pub opposite_edges: bool,
}

pub fn validate_walk(t: &Tree, w: &Walk) -> WalkReport {
    let n = t.n();
    let start_proper = w.start.is_proper(t);
    let mut current = w.start.clone();
    let mut invalid_at = None;
    let mut counts = vec![0usize; n];
    let mut net = vec![0i64; n];
    let mut seen_up = vec![false; n];
    let mut seen_down = vec![false; n];
    if start_proper {
        for (i, s) in w.steps.iter().enumerate() {
            let next = (s.vertex < n).then(|| toggle(t, &current, s.vertex, s.dir.eps())).flatten();
            let Some(next) = next else {
                invalid_at = Some(i);
                break;
            };
            current = next;
            counts[s.vertex] += 1;
            net[s.vertex] += s.dir.eps() as i64;
            match s.dir {
                Dir::Up => seen_up[s.vertex] = true,
                Dir::Down => seen_down[s.vertex] = true,
            }
        }
    }
    let opposite_edges = (0..n).any(|v| seen_up[v] && seen_down[v]);
    WalkReport {
        valid: start_proper && invalid_at.is_none(),
        start_proper,
        invalid_at,
        end: current,
        length: w.steps.len(),
        toggle_counts: counts,
        net,
        monotone: !opposite_edges,
        opposite_edges,
    }
}

/// Builds a monotone walk of length `||h||_1` from `f` to `f + h` (mod 3).
///
/// Fails with [`Error::IncompatibleLabeling`] if `h` breaks the edge
/// condition or if `f + h` is not a proper coloring.
pub fn build_walk(t: &Tree, f: &Coloring, h: &Labeling) -> Result<Walk> {
    f.check_proper(t)?;
    h.check(t).map_err(|e| match e {
        Error::InvalidLabeling(u, v) => Error::IncompatibleLabeling(format!("edge {u}-{v} has label gap > 1")),
        other => other,
    })?;
    let target: Vec<u8> = (0..t.n()).map(|v| ((f.get(v) as i64 + h[v]).rem_euclid(3)) as u8).collect();
    if let Some(&(u, v)) = t.edges().iter().find(|&&(u, v)| target[u] == target[v]) {
        return Err(Error::IncompatibleLabeling(format!(
            "f + h is not proper on edge {u}-{v}"
        )));
    }

    // Strip the highest-numbered leaf until one vertex is left.
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive = vec![true; n];
    let mut stripped = Vec::with_capacity(n.saturating_sub(1));
    for _ in 1..n {
        let v = (0..n).rev().find(|&v| alive[v] && degree[v] == 1).unwrap();
        let u = *t.neighbors(v).iter().find(|&&w| alive[w]).unwrap();
        alive[v] = false;
        degree[u] -= 1;
        stripped.push((v, u));
    }
    let base = (0..n).find(|&v| alive[v]).unwrap();

    let mut steps = vec![Step { vertex: base, dir: Dir::of_sign(h[base]) }; h[base].unsigned_abs() as usize];
    for &(v, u) in stripped.iter().rev() {
        steps = splice_leaf(f, h, &steps, v, u);
    }
    Ok(Walk { start: f.clone(), steps })
}

/// Inserts the toggles of leaf `v` (neighbor `u`) into `inner`, a walk on
/// the tree without `v`.
fn splice_leaf(f: &Coloring, h: &Labeling, inner: &[Step], v: usize, u: usize) -> Vec<Step> {
    let (hv, hu) = (h[v], h[u]);
    let solo_v = Step { vertex: v, dir: Dir::of_sign(hv) };
    if hv == 0 {
        return inner.to_vec();
    }
    if hu == 0 {
        let mut out = inner.to_vec();
        out.push(solo_v);
        return out;
    }

    // Same sign s. A paired toggle moves both u and v by s, ordered so the
    // coloring stays proper: v first when c(v) - c(u) = s, u first otherwise.
    let s = hu.signum();
    let mut cu = f.get(u) as i64;
    let mut cv = f.get(v) as i64;
    let mut out = Vec::with_capacity(inner.len() + hv.unsigned_abs() as usize);
    if hv.abs() == hu.abs() + 1 {
        out.push(solo_v);
        cv += s;
    }
    let mut pairs_left = hv.abs().min(hu.abs());
    for &step in inner {
        if step.vertex != u {
            out.push(step);
            continue;
        }
        if pairs_left == 0 {
            // Final solo toggle of u when |h(v)| = |h(u)| - 1.
            out.push(step);
            cu += s;
            continue;
        }
        pairs_left -= 1;
        let delta = (cv - cu).rem_euclid(3);
        if delta == s.rem_euclid(3) {
            out.push(solo_v);
            out.push(step);
        } else {
            out.push(step);
            out.push(solo_v);
        }
        cu += s;
        cv += s;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::labeling::{balance, lift};
    use crate::tree::{path, star};

    fn col(s: &str) -> Coloring {
        s.parse().unwrap()
    }

    #[test]
    fn zero_labeling_gives_empty_walk() {
        let t = star(4).unwrap();
        let w = build_walk(&t, &col("0111"), &Labeling::new(vec![0; 4])).unwrap();
        assert!(w.is_empty());
    }

    #[test]
    fn single_edge_walk() {
        let t = path(2).unwrap();
        let w = build_walk(&t, &col("01"), &Labeling::new(vec![1, 2])).unwrap();
        assert_eq!(w.len(), 3);
        let r = validate_walk(&t, &w);
        assert!(r.valid && r.monotone && !r.opposite_edges);
        assert_eq!(r.end, col("10"));
        assert_eq!(r.toggle_counts, vec![1, 2]);
        // Vertex 1 is the stripped leaf: |h(1)| = |h(0)| + 1, so it goes first.
        assert_eq!(w.steps[0], Step { vertex: 1, dir: Dir::Up });
    }

    #[test]
    fn geodesic_on_p7() {
        let t = path(7).unwrap();
        let (d, (f, g)) = crate::coloring::oracle_diameter(&t).unwrap();
        let h = balance(&lift(&t, &f, &g).unwrap());
        let w = build_walk(&t, &f, &h).unwrap();
        let r = validate_walk(&t, &w);
        assert!(r.valid);
        assert_eq!((w.len(), r.end), (d, g));
    }

    #[test]
    fn rejects_bad_inputs() {
        let t = path(2).unwrap();
        assert!(matches!(
            build_walk(&t, &col("01"), &Labeling::new(vec![0, 2])),
            Err(Error::IncompatibleLabeling(_))
        ));
        // (0,1) + (1,0) = (1,1) is improper.
        assert!(matches!(
            build_walk(&t, &col("01"), &Labeling::new(vec![1, 0])),
            Err(Error::IncompatibleLabeling(_))
        ));
        assert!(matches!(
            build_walk(&t, &col("00"), &Labeling::new(vec![0, 0])),
            Err(Error::ImproperColoring(0, 1))
        ));
    }

    #[test]
    fn report_flags() {
        let t = path(2).unwrap();
        let back_and_forth: Walk = "01\n0 -1\n0 +1\n".parse().unwrap();
        let r = validate_walk(&t, &back_and_forth);
        assert!(r.valid && r.opposite_edges && !r.monotone);
        assert_eq!(r.end, col("01"));

        let clash: Walk = "01\n0 +1\n".parse().unwrap();
        let r = validate_walk(&t, &clash);
        assert!(!r.valid);
        assert_eq!(r.invalid_at, Some(0));

        let r = validate_walk(&t, &"00\n".parse().unwrap());
        assert!(!r.valid && !r.start_proper);
    }

    #[test]
    fn text_round_trip() {
        let w = Walk {
            start: col("012"),
            steps: vec![Step { vertex: 2, dir: Dir::Up }, Step { vertex: 0, dir: Dir::Down }],
        };
        assert_eq!(w.to_string(), "012\n2 +1\n0 -1\n");
        assert_eq!(w.to_string().parse::<Walk>().unwrap(), w);
        assert!("012\n2 +2\n".parse::<Walk>().is_err());
    }
}

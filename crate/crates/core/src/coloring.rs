//! Proper 3-colorings and breadth-first search over the coloring graph
//! `C3(T)`.
//!
//! A proper coloring of a tree is fixed by the root color and, for every
//! other vertex, whether it sits one or two steps above its parent's color
//! mod 3. That gives a dense id in `0..3 * 2^(n-1)`:
//! `root_color << (n - 1) | bits`, one bit per non-root vertex in
//! breadth-first order. Toggling a vertex flips its own bit and the bits of
//! its children, so neighbors in `C3(T)` are generated with an xor.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::serde_str::serde_via_str;
use crate::tree::Tree;

/// Largest tree the oracle will handle: `3 * 2^19` colorings.
pub const ORACLE_LIMIT: usize = 20;

/// A 3-coloring with colors in `Z/3Z`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coloring(Vec<u8>);

serde_via_str!(Coloring);

impl Coloring {
    pub fn new(colors: Vec<u8>) -> Result<Coloring> {
        if let Some(&c) = colors.iter().find(|&&c| c > 2) {
            return Err(Error::InvalidParameter(format!("color {c} is not in {{0,1,2}}")));
        }
        Ok(Coloring(colors))
    }

    pub fn colors(&self) -> &[u8] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> u8 {
        self.0[v]
    }

    /// Checks size and properness against `t`.
    pub fn check_proper(&self, t: &Tree) -> Result<()> {
        if self.len() != t.n() {
            return Err(Error::SizeMismatch { expected: t.n(), got: self.len() });
        }
        match t.edges().iter().find(|&&(u, v)| self.0[u] == self.0[v]) {
            Some(&(u, v)) => Err(Error::ImproperColoring(u, v)),
            None => Ok(()),
        }
    }

    pub fn is_proper(&self, t: &Tree) -> bool {
        self.check_proper(t).is_ok()
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|c| write!(f, "{c}"))
    }
}

impl fmt::Debug for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Coloring({self})")
    }
}

impl FromStr for Coloring {
    type Err = Error;

    fn from_str(s: &str) -> Result<Coloring> {
        s.trim()
            .chars()
            .map(|ch| match ch {
                '0'..='2' => Ok(ch as u8 - b'0'),
                _ => Err(Error::Parse { line: 1, msg: format!("bad color {ch:?} in {s:?}") }),
            })
            .collect::<Result<Vec<u8>>>()
            .map(Coloring)
    }
}

/// Recolors `v` by `eps` (mod 3) if the result is still proper.
pub fn toggle(t: &Tree, c: &Coloring, v: usize, eps: i8) -> Option<Coloring> {
    let new = (c.0[v] as i8 + eps).rem_euclid(3) as u8;
    if new == c.0[v] || t.neighbors(v).iter().any(|&w| c.0[w] == new) {
        return None;
    }
    let mut out = c.clone();
    out.0[v] = new;
    Some(out)
}

/// Dense indexing of the proper colorings of one tree, plus on-the-fly
/// neighbor generation in `C3(T)`.
#[derive(Debug, Clone)]
pub struct ColoringGraph<'t> {
    tree: &'t Tree,
    order: Vec<usize>,
    parent: Vec<usize>,
    /// Bit position of each non-root vertex.
    bit: Vec<u32>,
    /// Bits flipped by toggling each vertex.
    mask: Vec<u64>,
}

impl<'t> ColoringGraph<'t> {
    pub fn new(tree: &'t Tree) -> Result<ColoringGraph<'t>> {
        let n = tree.n();
        if n > ORACLE_LIMIT {
            return Err(Error::OracleTooLarge { n, limit: ORACLE_LIMIT });
        }
        let (order, parent) = tree.bfs_order(0);
        let mut bit = vec![u32::MAX; n];
        for (i, &v) in order.iter().enumerate().skip(1) {
            bit[v] = (i - 1) as u32;
        }
        let mask = (0..n)
            .map(|v| {
                let own = if v == 0 { 0 } else { 1u64 << bit[v] };
                tree.neighbors(v)
                    .iter()
                    .filter(|&&w| parent[w] == v)
                    .fold(own, |m, &w| m | 1u64 << bit[w])
            })
            .collect();
        Ok(ColoringGraph { tree, order, parent, bit, mask })
    }

    pub fn tree(&self) -> &Tree {
        self.tree
    }

    /// Number of proper colorings, `3 * 2^(n-1)`.
    pub fn size(&self) -> usize {
        3usize << (self.tree.n() - 1)
    }

    fn shift(&self) -> u32 {
        (self.tree.n() - 1) as u32
    }

    pub fn id_of(&self, c: &Coloring) -> Result<u64> {
        c.check_proper(self.tree)?;
        let mut id = (c.0[0] as u64) << self.shift();
        for &v in &self.order[1..] {
            let step = (c.0[v] + 3 - c.0[self.parent[v]]) % 3;
            id |= ((step - 1) as u64) << self.bit[v];
        }
        Ok(id)
    }

    fn decode_into(&self, id: u64, colors: &mut [u8]) {
        colors[0] = (id >> self.shift()) as u8;
        for &v in &self.order[1..] {
            let step = 1 + ((id >> self.bit[v]) & 1) as u8;
            colors[v] = (colors[self.parent[v]] + step) % 3;
        }
    }

    pub fn coloring(&self, id: u64) -> Coloring {
        let mut colors = vec![0; self.tree.n()];
        self.decode_into(id, &mut colors);
        Coloring(colors)
    }

    /// Calls `visit` with the id of every neighbor of `id` in `C3(T)`.
    /// `colors` is scratch space of length `n`.
    fn for_each_neighbor(&self, id: u64, colors: &mut [u8], mut visit: impl FnMut(u64)) {
        self.decode_into(id, colors);
        let shift = self.shift();
        let low = (1u64 << shift) - 1;
        for v in 0..self.tree.n() {
            let nbrs = self.tree.neighbors(v);
            let Some(&first) = nbrs.first() else {
                // A lone vertex can take either other color.
                for c in [(colors[0] + 1) % 3, (colors[0] + 2) % 3] {
                    visit((c as u64) << shift);
                }
                continue;
            };
            let shared = colors[first];
            if nbrs.iter().any(|&w| colors[w] != shared) {
                continue;
            }
            let flipped = (id & low) ^ self.mask[v];
            let root = if v == 0 { 3 - shared - colors[0] } else { colors[0] };
            visit((root as u64) << shift | flipped);
        }
    }

    /// Distances from `src` to every coloring, indexed by id.
    pub fn bfs(&self, src: u64) -> Vec<u32> {
        let mut dist = vec![u32::MAX; self.size()];
        let mut colors = vec![0; self.tree.n()];
        let mut queue = VecDeque::with_capacity(self.size());
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(id) = queue.pop_front() {
            let d = dist[id as usize] + 1;
            self.for_each_neighbor(id, &mut colors, |w| {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d;
                    queue.push_back(w);
                }
            });
        }
        dist
    }

    /// Shortest-path length between two colorings, stopping once `dst` is reached.
    pub fn distance(&self, src: u64, dst: u64) -> u32 {
        if src == dst {
            return 0;
        }
        let mut dist = vec![u32::MAX; self.size()];
        let mut colors = vec![0; self.tree.n()];
        let mut queue = VecDeque::new();
        dist[src as usize] = 0;
        queue.push_back(src);
        while let Some(id) = queue.pop_front() {
            let d = dist[id as usize] + 1;
            let mut hit = false;
            self.for_each_neighbor(id, &mut colors, |w| {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = d;
                    hit |= w == dst;
                    queue.push_back(w);
                }
            });
            if hit {
                return d;
            }
        }
        unreachable!("C3 of a tree is connected")
    }

    /// Neighbor colorings of `c` in `C3(T)`.
    pub fn neighbors(&self, c: &Coloring) -> Result<Vec<Coloring>> {
        let id = self.id_of(c)?;
        let mut colors = vec![0; self.tree.n()];
        let mut out = Vec::new();
        self.for_each_neighbor(id, &mut colors, |w| out.push(w));
        Ok(out.into_iter().map(|w| self.coloring(w)).collect())
    }
}

/// All proper 3-colorings of `t`, in id order.
pub fn enumerate_colorings(t: &Tree) -> Result<Vec<Coloring>> {
    let g = ColoringGraph::new(t)?;
    Ok((0..g.size() as u64).map(|id| g.coloring(id)).collect())
}

/// Exact distance in `C3(T)` by breadth-first search.
pub fn bfs_distance(t: &Tree, f: &Coloring, g: &Coloring) -> Result<usize> {
    let graph = ColoringGraph::new(t)?;
    let (a, b) = (graph.id_of(f)?, graph.id_of(g)?);
    Ok(graph.distance(a, b) as usize)
}

/// Diameter of `C3(T)` with an attaining pair, by a full BFS from every
/// coloring. Ties go to the smallest source id, then the smallest target id.
pub fn oracle_diameter(t: &Tree) -> Result<(usize, (Coloring, Coloring))> {
    let graph = ColoringGraph::new(t)?;
    let best = (0..graph.size() as u64)
        .into_par_iter()
        .map(|src| {
            let dist = graph.bfs(src);
            let (far, &d) = dist
                .iter()
                .enumerate()
                .max_by_key(|&(i, &d)| (d, std::cmp::Reverse(i)))
                .unwrap();
            (d, std::cmp::Reverse(src), std::cmp::Reverse(far as u64))
        })
        .max()
        .unwrap();
    let (d, std::cmp::Reverse(src), std::cmp::Reverse(dst)) = best;
    Ok((d as usize, (graph.coloring(src), graph.coloring(dst))))
}

/// Every ordered pair of colorings at distance equal to the diameter.
pub fn antipodal_pairs(t: &Tree) -> Result<(usize, Vec<(Coloring, Coloring)>)> {
    let graph = ColoringGraph::new(t)?;
    let per_source: Vec<(u32, Vec<(u64, u64)>)> = (0..graph.size() as u64)
        .into_par_iter()
        .map(|src| {
            let dist = graph.bfs(src);
            let d = *dist.iter().max().unwrap();
            let far = (0..dist.len()).filter(|&i| dist[i] == d).map(|i| (src, i as u64)).collect();
            (d, far)
        })
        .collect();
    let diam = per_source.iter().map(|(d, _)| *d).max().unwrap();
    let pairs = per_source
        .into_iter()
        .filter(|(d, _)| *d == diam)
        .flat_map(|(_, v)| v)
        .map(|(a, b)| (graph.coloring(a), graph.coloring(b)))
        .collect();
    Ok((diam as usize, pairs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::{path, star};

    fn col(s: &str) -> Coloring {
        s.parse().unwrap()
    }

    #[test]
    fn coloring_counts() {
        assert_eq!(enumerate_colorings(&path(2).unwrap()).unwrap().len(), 6);
        assert_eq!(enumerate_colorings(&path(1).unwrap()).unwrap().len(), 3);
        assert_eq!(enumerate_colorings(&star(6).unwrap()).unwrap().len(), 96);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let t = crate::tree::double_star(2, 1).unwrap();
        let mut brute = Vec::new();
        for code in 0..3usize.pow(5) {
            let colors: Vec<u8> = (0..5).map(|i| (code / 3usize.pow(i) % 3) as u8).collect();
            let c = Coloring(colors);
            if c.is_proper(&t) {
                brute.push(c);
            }
        }
        let mut ours = enumerate_colorings(&t).unwrap();
        ours.sort();
        brute.sort();
        assert_eq!(ours, brute);
    }

    #[test]
    fn toggles() {
        let p2 = path(2).unwrap();
        assert_eq!(toggle(&p2, &col("01"), 0, 1), None);
        assert_eq!(toggle(&p2, &col("01"), 0, -1), Some(col("21")));
        let s4 = star(4).unwrap();
        assert_eq!(toggle(&s4, &col("0111"), 0, 1), None);
        assert_eq!(toggle(&s4, &col("0111"), 0, -1), Some(col("2111")));
    }

    #[test]
    fn neighbors_agree_with_toggle() {
        let t = crate::tree::double_star(2, 2).unwrap();
        let g = ColoringGraph::new(&t).unwrap();
        for c in enumerate_colorings(&t).unwrap() {
            let mut via_toggle: Vec<Coloring> = (0..t.n())
                .flat_map(|v| [1, -1].map(|e| toggle(&t, &c, v, e)))
                .flatten()
                .collect();
            let mut via_graph = g.neighbors(&c).unwrap();
            via_toggle.sort();
            via_graph.sort();
            assert_eq!(via_toggle, via_graph);
        }
    }

    #[test]
    fn small_distances() {
        let p2 = path(2).unwrap();
        assert_eq!(bfs_distance(&p2, &col("01"), &col("01")).unwrap(), 0);
        assert_eq!(bfs_distance(&p2, &col("01"), &col("10")).unwrap(), 3);
        let p3 = path(3).unwrap();
        assert_eq!(bfs_distance(&p3, &col("010"), &col("101")).unwrap(), 4);
        assert!(bfs_distance(&p3, &col("011"), &col("101")).is_err());
    }

    #[test]
    fn single_vertex_graph() {
        let t = path(1).unwrap();
        assert_eq!(oracle_diameter(&t).unwrap().0, 1);
    }

    #[test]
    fn oracle_diameters() {
        assert_eq!(oracle_diameter(&path(6).unwrap()).unwrap().0, 11);
        assert_eq!(oracle_diameter(&star(6).unwrap()).unwrap().0, 9);
        let (d, (f, g)) = oracle_diameter(&path(7).unwrap()).unwrap();
        assert_eq!(d, 13);
        assert_eq!(bfs_distance(&path(7).unwrap(), &f, &g).unwrap(), 13);
    }

    #[test]
    fn too_large() {
        assert!(matches!(
            ColoringGraph::new(&path(ORACLE_LIMIT + 1).unwrap()),
            Err(Error::OracleTooLarge { .. })
        ));
    }
}

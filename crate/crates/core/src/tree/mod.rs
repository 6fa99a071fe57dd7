//! Trees on vertices `0..n`, the edge-list text format, named families, and
//! distance profiles around leaves.

mod canon;
mod prufer;

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

pub use canon::{enumerate_trees, CanonicalCode, ENUMERATION_LIMIT};
pub use prufer::prufer_decode;

/// An immutable tree on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Builds a tree from an edge list, checking that it has exactly `n - 1`
    /// distinct edges and is connected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Tree> {
        if n == 0 {
            return Err(Error::InvalidParameter("a tree needs at least one vertex".into()));
        }
        if edges.len() != n - 1 {
            return Err(Error::NotATree(format!(
                "{} edges for {} vertices (expected {})",
                edges.len(),
                n,
                n - 1
            )));
        }
        let mut adj = vec![Vec::new(); n];
        let mut norm = Vec::with_capacity(edges.len());
        for (i, &(u, v)) in edges.iter().enumerate() {
            if u >= n || v >= n {
                return Err(Error::BadVertexId { line: i + 2, id: u.max(v), n });
            }
            if u == v {
                return Err(Error::NotATree(format!("self-loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
            norm.push((u.min(v), u.max(v)));
        }
        for (v, nbrs) in adj.iter_mut().enumerate() {
            nbrs.sort_unstable();
            if nbrs.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::NotATree(format!("duplicate edge at vertex {v}")));
            }
        }
        let tree = Tree { edges: norm, adj };
        let reached = tree.bfs_distances(0).iter().filter(|d| d.is_some()).count();
        if reached != n {
            // n - 1 edges and disconnected means some component holds a cycle.
            return Err(Error::NotATree("graph is disconnected (and so contains a cycle)".into()));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn is_leaf(&self, v: usize) -> bool {
        self.adj[v].len() == 1
    }

    pub fn leaves(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.n()).filter(move |&v| self.is_leaf(v))
    }

    /// Degrees sorted in non-increasing order.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(Vec::len).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    /// Hop distances from `src`; `None` marks unreachable vertices (only
    /// possible while validating a candidate edge set).
    fn bfs_distances(&self, src: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        let mut queue = VecDeque::from([src]);
        dist[src] = Some(0);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Hop distances from `src` to every vertex.
    pub fn distances_from(&self, src: usize) -> Vec<usize> {
        self.bfs_distances(src).into_iter().map(|d| d.unwrap()).collect()
    }

    /// Vertices in breadth-first order from `root`, with each vertex's parent
    /// (`usize::MAX` for the root).
    pub fn bfs_order(&self, root: usize) -> (Vec<usize>, Vec<usize>) {
        let mut order = Vec::with_capacity(self.n());
        let mut parent = vec![usize::MAX; self.n()];
        let mut seen = vec![false; self.n()];
        seen[root] = true;
        order.push(root);
        let mut head = 0;
        while head < order.len() {
            let u = order[head];
            head += 1;
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = u;
                    order.push(w);
                }
            }
        }
        (order, parent)
    }

    /// Applies a vertex relabeling: old vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Tree> {
        if perm.len() != self.n() {
            return Err(Error::SizeMismatch { expected: self.n(), got: perm.len() });
        }
        let edges: Vec<_> = self.edges.iter().map(|&(u, v)| (perm[u], perm[v])).collect();
        Tree::from_edges(self.n(), &edges)
    }

    pub fn to_edge_list(&self) -> String {
        self.to_string()
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n(), self.edges)
    }
}

/// Edge-list document: `n` on the first line, then one `u v` line per edge.
impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n())?;
        for (u, v) in &self.edges {
            writeln!(f, "{u} {v}")?;
        }
        Ok(())
    }
}

impl FromStr for Tree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tree> {
        parse_tree(s)
    }
}

/// Parses the edge-list format. Blank lines and `#` comments are ignored.
pub fn parse_tree(text: &str) -> Result<Tree> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty());

    let (first, header) = lines
        .next()
        .ok_or(Error::Parse { line: 1, msg: "empty document".into() })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: first,
        msg: format!("expected vertex count, found {header:?}"),
    })?;
    if n == 0 {
        return Err(Error::Parse { line: first, msg: "vertex count must be positive".into() });
    }

    let mut edges = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 2 {
            return Err(Error::Parse { line, msg: format!("expected \"u v\", found {text:?}") });
        }
        let mut ends = [0usize; 2];
        for (slot, field) in ends.iter_mut().zip(&fields) {
            *slot = field.parse().map_err(|_| Error::Parse {
                line,
                msg: format!("bad vertex id {field:?}"),
            })?;
            if *slot >= n {
                return Err(Error::BadVertexId { line, id: *slot, n });
            }
        }
        edges.push((ends[0], ends[1]));
    }
    Tree::from_edges(n, &edges)
}

/// The path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::InvalidParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
    Tree::from_edges(n, &edges)
}

/// The star `K_{1,n-1}` centered at vertex 0.
pub fn star(n: usize) -> Result<Tree> {
    if n == 0 {
        return Err(Error::InvalidParameter("star needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|v| (0, v)).collect();
    Tree::from_edges(n, &edges)
}

/// The double star `S(a, b)`: adjacent centers 0 and 1 carrying `a` and `b`
/// leaves respectively, `a + b + 2` vertices in total.
pub fn double_star(a: usize, b: usize) -> Result<Tree> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter(format!("double star needs a, b >= 1 (got {a}, {b})")));
    }
    let mut edges = vec![(0, 1)];
    edges.extend((2..a + 2).map(|v| (0, v)));
    edges.extend((a + 2..a + b + 2).map(|v| (1, v)));
    Tree::from_edges(a + b + 2, &edges)
}

/// Distances from a leaf, summarized by the sizes of its distance-2 sphere
/// and of everything at distance four or more.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeafProfile {
    pub leaf: usize,
    pub n2: usize,
    pub n_ge4: usize,
    pub dist: Vec<usize>,
}

impl LeafProfile {
    /// The unique neighbor of the leaf.
    pub fn anchor(&self) -> usize {
        self.dist.iter().position(|&d| d == 1).unwrap()
    }

    /// Vertices at exactly distance `d`, ascending.
    pub fn sphere(&self, d: usize) -> Vec<usize> {
        (0..self.dist.len()).filter(|&u| self.dist[u] == d).collect()
    }

    /// Vertices at distance at least `d`, ascending.
    pub fn beyond(&self, d: usize) -> Vec<usize> {
        (0..self.dist.len()).filter(|&u| self.dist[u] >= d).collect()
    }
}

pub fn leaf_profile(t: &Tree, v: usize) -> Result<LeafProfile> {
    if v >= t.n() {
        return Err(Error::BadVertexId { line: 0, id: v, n: t.n() });
    }
    if !t.is_leaf(v) {
        return Err(Error::NotALeaf(v));
    }
    let dist = t.distances_from(v);
    Ok(LeafProfile {
        leaf: v,
        n2: dist.iter().filter(|&&d| d == 2).count(),
        n_ge4: dist.iter().filter(|&&d| d >= 4).count(),
        dist,
    })
}

/// Maximum hop distance between two vertices (double sweep).
pub fn tree_diameter(t: &Tree) -> usize {
    let d0 = t.distances_from(0);
    let far = (0..t.n()).max_by_key(|&v| (d0[v], std::cmp::Reverse(v))).unwrap();
    t.distances_from(far).into_iter().max().unwrap()
}

/// The one or two central vertices (those minimizing eccentricity).
pub fn centers(t: &Tree) -> Vec<usize> {
    let n = t.n();
    if n <= 2 {
        return (0..n).collect();
    }
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut layer: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    let mut remaining = n;
    while remaining > 2 {
        remaining -= layer.len();
        let mut next = Vec::new();
        for &leaf in &layer {
            degree[leaf] = 0;
            for &w in t.neighbors(leaf) {
                if degree[w] > 1 {
                    degree[w] -= 1;
                    if degree[w] == 1 {
                        next.push(w);
                    }
                }
            }
        }
        layer = next;
    }
    layer.sort_unstable();
    layer
}

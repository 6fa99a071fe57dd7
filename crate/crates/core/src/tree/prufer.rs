use crate::error::{Error, Result};

use super::Tree;

/// Decodes a Prüfer sequence of length `n - 2` over `0..n` into the labeled
/// tree it represents.
pub fn prufer_decode(seq: &[usize], n: usize) -> Result<Tree> {
    if n < 2 || seq.len() != n - 2 {
        return Err(Error::InvalidParameter(format!(
            "Prüfer sequence of length {} does not describe a tree on {n} vertices",
            seq.len()
        )));
    }
    let mut degree = vec![1usize; n];
    for &s in seq {
        if s >= n {
            return Err(Error::BadVertexId { line: 0, id: s, n });
        }
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // Linear-time decoding: `ptr` scans for the smallest leaf, `leaf` may
    // jump back below it when a sequence element becomes a leaf.
    let mut ptr = (0..n).find(|&v| degree[v] == 1).unwrap();
    let mut leaf = ptr;
    for &s in seq {
        edges.push((leaf, s));
        degree[s] -= 1;
        if degree[s] == 1 && s < ptr {
            leaf = s;
        } else {
            ptr += 1;
            while degree[ptr] != 1 {
                ptr += 1;
            }
            leaf = ptr;
        }
    }
    edges.push((leaf, n - 1));
    Tree::from_edges(n, &edges)
}

//! Isomorphism-invariant codes for free trees and isomorphism-free
//! enumeration.
//!
//! A free tree is encoded by rooting it at its center (or at each of its two
//! centers, keeping the smaller result) and writing the AHU parenthesis word
//! of the rooted tree: `1`, the sorted words of the children, `0`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::{centers, Tree};
use crate::error::{Error, Result};
use crate::serde_str::serde_via_str;

/// Largest `n` accepted by [`enumerate_trees`].
pub const ENUMERATION_LIMIT: usize = 16;

/// Canonical form of a free tree: the vertex count as a big-endian `u16`
/// followed by the packed parenthesis word (most significant bit first).
/// Byte order sorts trees by size first.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalCode(Vec<u8>);

serde_via_str!(CanonicalCode);

impl CanonicalCode {
    pub fn of(t: &Tree) -> CanonicalCode {
        let n = t.n();
        assert!(n <= u16::MAX as usize, "canonical codes cover trees up to 65535 vertices");
        let word = centers(t)
            .into_iter()
            .map(|c| rooted_word(t, c))
            .min()
            .unwrap();
        let mut bytes = (n as u16).to_be_bytes().to_vec();
        bytes.extend(word.chunks(8).map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (i, &bit)| acc | (bit << (7 - i)))
        }));
        CanonicalCode(bytes)
    }

    pub fn n(&self) -> usize {
        u16::from_be_bytes([self.0[0], self.0[1]]) as usize
    }

    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// The parenthesis word, one `0`/`1` byte per symbol.
    fn word(&self) -> Vec<u8> {
        let len = 2 * self.n();
        self.0[2..]
            .iter()
            .flat_map(|&b| (0..8).map(move |i| (b >> (7 - i)) & 1))
            .take(len)
            .collect()
    }

    /// Rebuilds a representative tree. The root of the encoding becomes
    /// vertex 0 and the remaining vertices are numbered in preorder, so every
    /// non-root vertex has a smaller-numbered neighbor.
    pub fn to_tree(&self) -> Tree {
        let word = self.word();
        let mut edges = Vec::with_capacity(self.n().saturating_sub(1));
        let mut stack: Vec<usize> = Vec::new();
        let mut next = 0;
        for bit in word {
            if bit == 1 {
                if let Some(&p) = stack.last() {
                    edges.push((p, next));
                }
                stack.push(next);
                next += 1;
            } else {
                stack.pop();
            }
        }
        Tree::from_edges(self.n(), &edges).expect("canonical word encodes a tree")
    }
}

impl fmt::Display for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&hex::encode(&self.0))
    }
}

impl fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalCode({self})")
    }
}

impl FromStr for CanonicalCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<CanonicalCode> {
        let bad = |msg: &str| Error::Parse { line: 1, msg: format!("canonical code {s:?}: {msg}") };
        let bytes = hex::decode(s).map_err(|e| bad(&e.to_string()))?;
        if bytes.len() < 2 {
            return Err(bad("too short"));
        }
        let code = CanonicalCode(bytes);
        let n = code.n();
        if n == 0 || code.0.len() != 2 + (2 * n).div_ceil(8) {
            return Err(bad("length does not match vertex count"));
        }
        // The word must be a single balanced block.
        let mut depth = 0i64;
        for (i, bit) in code.word().into_iter().enumerate() {
            depth += if bit == 1 { 1 } else { -1 };
            if depth < 0 || (depth == 0 && i + 1 != 2 * n) {
                return Err(bad("not a tree word"));
            }
        }
        if depth != 0 {
            return Err(bad("not a tree word"));
        }
        Ok(code)
    }
}

fn rooted_word(t: &Tree, root: usize) -> Vec<u8> {
    fn go(t: &Tree, v: usize, parent: usize) -> Vec<u8> {
        let mut kids: Vec<Vec<u8>> = t
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| go(t, w, v))
            .collect();
        kids.sort_unstable();
        let mut out = Vec::with_capacity(2 + kids.iter().map(Vec::len).sum::<usize>());
        out.push(1);
        kids.into_iter().for_each(|k| out.extend(k));
        out.push(0);
        out
    }
    go(t, root, usize::MAX)
}

/// One representative per isomorphism class of trees on `n` vertices,
/// sorted by canonical code.
///
/// Rooted trees are generated as canonical level sequences (each successor
/// obtained by copying the subtree pattern above the last non-root-child
/// position), then collapsed to free trees by canonical code.
pub fn enumerate_trees(n: usize) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::InvalidParameter("enumerate_trees needs n >= 1".into()));
    }
    if n > ENUMERATION_LIMIT {
        return Err(Error::LimitExceeded { what: "tree enumeration", n, limit: ENUMERATION_LIMIT });
    }
    let mut seen: BTreeMap<CanonicalCode, ()> = BTreeMap::new();
    let mut levels: Vec<usize> = (0..n).collect();
    loop {
        seen.insert(CanonicalCode::of(&from_levels(&levels)), ());
        let Some(p) = levels.iter().rposition(|&l| l > 1) else { break };
        let q = (0..p).rev().find(|&i| levels[i] == levels[p] - 1).unwrap();
        for i in p..n {
            levels[i] = levels[i - (p - q)];
        }
    }
    Ok(seen.into_keys().map(|c| c.to_tree()).collect())
}

fn from_levels(levels: &[usize]) -> Tree {
    let mut last_at = vec![0usize; levels.len()];
    let mut edges = Vec::with_capacity(levels.len().saturating_sub(1));
    for (i, &l) in levels.iter().enumerate() {
        if l > 0 {
            edges.push((last_at[l - 1], i));
        }
        last_at[l] = i;
    }
    Tree::from_edges(levels.len(), &edges).expect("level sequence encodes a tree")
}

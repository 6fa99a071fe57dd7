#![allow(dead_code)]

use rand::Rng;
use tricolor::tree::prufer_decode;
use tricolor::{Coloring, Tree};

/// Uniform labeled tree on `n` vertices.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Tree {
    if n <= 2 {
        return tricolor::tree::path(n).unwrap();
    }
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    prufer_decode(&seq, n).unwrap()
}

/// Uniform proper 3-coloring.
pub fn random_coloring<R: Rng>(rng: &mut R, t: &Tree) -> Coloring {
    let (order, parent) = t.bfs_order(0);
    let mut c = vec![0u8; t.n()];
    c[0] = rng.gen_range(0..3);
    for &v in &order[1..] {
        c[v] = (c[parent[v]] + rng.gen_range(1..3)) % 3;
    }
    Coloring::new(c).unwrap()
}

/// Every labeled tree on `n` vertices, one per Prüfer sequence.
pub fn all_labeled_trees(n: usize) -> Vec<Tree> {
    if n <= 2 {
        return vec![tricolor::tree::path(n).unwrap()];
    }
    let len = n - 2;
    let total = n.pow(len as u32);
    (0..total)
        .map(|mut k| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let d = k % n;
                    k /= n;
                    d
                })
                .collect();
            prufer_decode(&seq, n).unwrap()
        })
        .collect()
}

/// Backtracking isomorphism test.
pub fn isomorphic(a: &Tree, b: &Tree) -> bool {
    fn extend(a: &Tree, b: &Tree, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
        let i = map.len();
        if i == a.n() {
            return true;
        }
        for j in 0..b.n() {
            if used[j] || a.degree(i) != b.degree(j) {
                continue;
            }
            let consistent = (0..i).all(|k| a.neighbors(i).contains(&k) == b.neighbors(j).contains(&map[k]));
            if consistent {
                map.push(j);
                used[j] = true;
                if extend(a, b, map, used) {
                    return true;
                }
                used[j] = false;
                map.pop();
            }
        }
        false
    }
    a.n() == b.n() && a.degree_sequence() == b.degree_sequence() && extend(a, b, &mut vec![], &mut vec![false; b.n()])
}

/// All labelings of `t` with every label in `[lo, hi]`.
pub fn all_labelings(t: &Tree, lo: i64, hi: i64) -> Vec<Vec<i64>> {
    let (order, parent) = t.bfs_order(0);
    let mut out = Vec::new();
    let mut h = vec![0i64; t.n()];
    fn go(i: usize, order: &[usize], parent: &[usize], lo: i64, hi: i64, h: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == order.len() {
            out.push(h.clone());
            return;
        }
        let v = order[i];
        let range = if i == 0 { lo..=hi } else { (h[parent[v]] - 1).max(lo)..=(h[parent[v]] + 1).min(hi) };
        for x in range {
            h[v] = x;
            go(i + 1, order, parent, lo, hi, h, out);
        }
    }
    go(0, &order, &parent, lo, hi, &mut h, &mut out);
    out
}

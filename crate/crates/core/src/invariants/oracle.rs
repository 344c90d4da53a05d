//! Brute-force reference implementations of every invariant, written
//! independently of the engines in the parent module. All of them scan
//! complete subset or coloring spaces, so they are exponential in the
//! vertex count and intended for cross-checks on small trees.

use std::collections::BTreeMap;

use crate::algebra::{partitions_of, Partition, SparsePoly};
use crate::tree::Tree;

use super::{MonCsf, PsumCsf};

const MAX_SCAN_N: usize = 24;

fn assert_scannable(tree: &Tree) {
    assert!(
        tree.n() <= MAX_SCAN_N,
        "subset-scan oracle limited to {MAX_SCAN_N} vertices; tree has {}",
        tree.n()
    );
}

/// Number of edges with both endpoints in `mask`.
fn edges_inside(tree: &Tree, mask: u32) -> u32 {
    tree.edges()
        .iter()
        .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
        .count() as u32
}

/// Number of edges with exactly one endpoint in `mask`.
fn edges_crossing(tree: &Tree, mask: u32) -> u32 {
    tree.edges()
        .iter()
        .filter(|&&(u, v)| (mask & (1 << u) != 0) != (mask & (1 << v) != 0))
        .count() as u32
}

/// Is the subgraph induced by `mask` connected (and nonempty)?
fn is_connected(tree: &Tree, mask: u32) -> bool {
    if mask == 0 {
        return false;
    }
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut stack = vec![start];
    while let Some(v) = stack.pop() {
        for &w in tree.neighbors(v) {
            let bit = 1u32 << w;
            if mask & bit != 0 && seen & bit == 0 {
                seen |= bit;
                stack.push(w);
            }
        }
    }
    seen == mask
}

/// Edges inside `mask` having an endpoint of induced degree 1.
fn leaf_edges_inside(tree: &Tree, mask: u32) -> u32 {
    let ideg = |v: usize| {
        tree.neighbors(v)
            .iter()
            .filter(|&&w| mask & (1 << w) != 0)
            .count()
    };
    tree.edges()
        .iter()
        .filter(|&&(u, v)| mask & (1 << u) != 0 && mask & (1 << v) != 0)
        .filter(|&&(u, v)| ideg(u) == 1 || ideg(v) == 1)
        .count() as u32
}

/// Power-sum expansion by scanning all `2^(n-1)` edge subsets and sorting
/// their forest component sizes.
pub fn powersum_by_edge_subsets(tree: &Tree) -> PsumCsf {
    assert_scannable(tree);
    let n = tree.n();
    let edges = tree.edges();
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for subset in 0u32..1 << edges.len() {
        // component sizes of the spanning forest using exactly this subset
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, v: usize) -> usize {
            if parent[v] != v {
                let r = find(parent, parent[v]);
                parent[v] = r;
            }
            parent[v]
        }
        for (i, &(u, v)) in edges.iter().enumerate() {
            if subset & (1 << i) != 0 {
                let (ru, rv) = (find(&mut parent, u), find(&mut parent, v));
                parent[ru] = rv;
            }
        }
        let mut sizes = vec![0u32; n];
        for v in 0..n {
            sizes[find(&mut parent, v)] += 1;
        }
        let lambda = Partition::new(sizes.into_iter().filter(|&s| s > 0).collect());
        let sign = if (n - lambda.len()) % 2 == 0 { 1 } else { -1 };
        *counts.entry(lambda).or_insert(0) += sign;
    }
    PsumCsf::from_coeffs(counts)
}

/// Monomial expansion by scanning proper colorings directly: the
/// coefficient of `m_lambda` is the number of proper colorings whose color
/// class sizes are exactly `lambda_1, ..., lambda_l` in that order.
pub fn monomial_by_colorings(tree: &Tree) -> MonCsf {
    let n = tree.n();
    assert!(n <= 8, "coloring oracle limited to 8 vertices");
    let mut coeffs: BTreeMap<Partition, i64> = BTreeMap::new();
    for lambda in partitions_of(n as u32) {
        let l = lambda.len();
        let mut count = 0i64;
        let mut coloring = vec![0usize; n];
        loop {
            let proper = tree
                .edges()
                .iter()
                .all(|&(u, v)| coloring[u] != coloring[v]);
            if proper {
                let mut class_sizes = vec![0u32; l];
                for &c in &coloring {
                    class_sizes[c] += 1;
                }
                if class_sizes == lambda.parts() {
                    count += 1;
                }
            }
            // odometer over colorings in l colors
            let mut i = 0;
            while i < n {
                coloring[i] += 1;
                if coloring[i] < l {
                    break;
                }
                coloring[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        if count != 0 {
            coeffs.insert(lambda, count);
        }
    }
    MonCsf::from_coeffs(coeffs)
}

/// Subtree census polynomial by scanning all vertex subsets for
/// connectivity.
pub fn soup_by_subsets(tree: &Tree) -> SparsePoly {
    assert_scannable(tree);
    let mut poly = SparsePoly::zero(&["x", "y", "z"]);
    for mask in 1u32..1 << tree.n() {
        if is_connected(tree, mask) {
            let e = edges_inside(tree, mask) as u16;
            let d = edges_crossing(tree, mask) as u16;
            let l = leaf_edges_inside(tree, mask) as u16;
            poly.add_term(&[e, d, l], 1);
        }
    }
    poly
}

/// Half degree polynomial by subset scan.
pub fn half_degree_by_subsets(tree: &Tree) -> SparsePoly {
    assert_scannable(tree);
    let mut poly = SparsePoly::zero(&["y", "z"]);
    for mask in 1u32..1 << tree.n() {
        if is_connected(tree, mask) {
            let e = edges_inside(tree, mask) as u16;
            let d = edges_crossing(tree, mask) as u16;
            poly.add_term(&[d, e], 1);
        }
    }
    poly
}

/// Subtree polynomial by subset scan.
pub fn subtree_poly_by_subsets(tree: &Tree) -> SparsePoly {
    assert_scannable(tree);
    let mut poly = SparsePoly::zero(&["q", "r"]);
    for mask in 1u32..1 << tree.n() {
        if is_connected(tree, mask) {
            let e = edges_inside(tree, mask) as u16;
            let l = leaf_edges_inside(tree, mask) as u16;
            poly.add_term(&[e, l], 1);
        }
    }
    poly
}

/// Degree polynomial by scanning all vertex subsets, connected or not.
pub fn degree_poly_by_subsets(tree: &Tree) -> SparsePoly {
    assert_scannable(tree);
    let mut poly = SparsePoly::zero(&["x", "y", "z"]);
    for mask in 0u32..1 << tree.n() {
        let a = mask.count_ones() as u16;
        let d = edges_crossing(tree, mask) as u16;
        let e = edges_inside(tree, mask) as u16;
        poly.add_term(&[a, d, e], 1);
    }
    poly
}

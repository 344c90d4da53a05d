use crate::algebra::Composition;

use super::{Tree, TreeError};

/// Builds the caterpillar `Cat(a_1,…,a_k)`: a spine path of `k` vertices
/// labeled `0..k`, where spine vertex `i` carries `a_i - 1` pendant leaves;
/// leaves are labeled `k..n` in spine order. Valid signatures have first
/// and last part at least 2 (so the spine is exactly the set of internal
/// vertices); a single part `(a)`, `a >= 2`, yields the star on `a` vertices.
pub fn cat(alpha: &Composition) -> Result<Tree, TreeError> {
    let parts = alpha.parts();
    let k = parts.len();
    let valid = if k == 1 { parts[0] >= 2 } else { parts[0] >= 2 && parts[k - 1] >= 2 };
    if !valid {
        return Err(TreeError::InvalidSignature(format!("{alpha:?}")));
    }
    let n = alpha.sum() as usize;
    let mut edges = Vec::with_capacity(n - 1);
    for i in 1..k {
        edges.push((i - 1, i));
    }
    let mut next = k;
    for (i, &a) in parts.iter().enumerate() {
        for _ in 0..a - 1 {
            edges.push((i, next));
            next += 1;
        }
    }
    Tree::from_edges(n, &edges)
}

/// Inverse of [`cat`] up to reversal: recovers the signature of a
/// caterpillar, normalized to the lexicographically smaller of the two
/// reading directions. Errors with [`TreeError::NotACaterpillar`] if
/// deleting all leaves does not leave a path (the one-edge tree counts as
/// `Cat(2)`; the one-vertex tree does not qualify).
pub fn signature(tree: &Tree) -> Result<Composition, TreeError> {
    let n = tree.n();
    if n == 1 {
        return Err(TreeError::NotACaterpillar);
    }
    if n == 2 {
        return Ok(Composition::new(vec![2]));
    }
    let spine: Vec<usize> = (0..n).filter(|&v| !tree.is_leaf(v)).collect();
    let spine_deg = |v: usize| tree.neighbors(v).iter().filter(|&&w| !tree.is_leaf(w)).count();
    if spine.iter().any(|&v| spine_deg(v) > 2) {
        return Err(TreeError::NotACaterpillar);
    }
    // the spine of a tree is connected, so degree <= 2 makes it a path;
    // walk it from one end
    let start = *spine.iter().find(|&&v| spine_deg(v) <= 1).expect("path has an end");
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = tree
            .neighbors(cur)
            .iter()
            .copied()
            .find(|&w| !tree.is_leaf(w) && w != prev);
        match next {
            Some(w) => {
                order.push(w);
                prev = cur;
                cur = w;
            }
            None => break,
        }
    }
    if order.len() != spine.len() {
        return Err(TreeError::NotACaterpillar);
    }
    let sig: Vec<u32> = order
        .iter()
        .map(|&v| 1 + tree.neighbors(v).iter().filter(|&&w| tree.is_leaf(w)).count() as u32)
        .collect();
    let mut rev = sig.clone();
    rev.reverse();
    Ok(Composition::new(sig.min(rev)))
}

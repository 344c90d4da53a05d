//! Edge recurrence for the leaf-trimmed half degree polynomial.
//!
//! Splitting a tree at a non-leaf edge `e = vw` leaves two components;
//! completing each with a pendant copy of `e` gives trees `T1'` and
//! `T2'`. Writing `u` for [`uhdp`], the recurrence is
//!
//! ```text
//! (y + z) * u(T) = y * (u(T1') + u(T2')) + z * u(T near-contracted at e)
//! ```
//!
//! Two trees whose right-hand sides coincide therefore share a half
//! degree polynomial, which is how the equal-invariant families in
//! `compositions` are produced.

use crate::algebra::SparsePoly;
use crate::invariants::uhdp;
use crate::tree::{Tree, TreeError};

/// The three trees on the right-hand side of the recurrence at `vw`.
#[derive(Debug, Clone)]
pub struct EdgeExpansion {
    /// Component of `v` with `w` kept as a pendant vertex.
    pub first: Tree,
    /// Component of `w` with `v` kept as a pendant vertex.
    pub second: Tree,
    /// The near-contraction of the whole tree at `vw`.
    pub contracted: Tree,
}

/// Splits `tree` at the non-leaf edge `vw` into the pendant-completed
/// halves plus the near-contraction.
pub fn edge_expansion(tree: &Tree, v: usize, w: usize) -> Result<EdgeExpansion, TreeError> {
    let contracted = tree.near_contract(v, w)?;
    let side = |from: usize, banned: usize| {
        let mut seen = vec![false; tree.n()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(u) = stack.pop() {
            for &x in tree.neighbors(u) {
                if x != banned && !seen[x] {
                    seen[x] = true;
                    stack.push(x);
                }
            }
        }
        let mut verts: Vec<usize> = (0..tree.n()).filter(|&x| seen[x]).collect();
        verts.push(banned);
        tree.induced_subtree(&verts).0
    };
    Ok(EdgeExpansion {
        first: side(v, w),
        second: side(w, v),
        contracted,
    })
}

/// Right-hand side of the recurrence at `vw`, cleared of denominators:
/// `y * (u(T1') + u(T2')) + z * u(T near-contracted)`.
pub fn edge_expansion_poly(tree: &Tree, v: usize, w: usize) -> Result<SparsePoly, TreeError> {
    let parts = edge_expansion(tree, v, w)?;
    let halves = uhdp(&parts.first).add(&uhdp(&parts.second));
    let mut rhs = halves.mul_monomial(&[1, 0], 1);
    rhs = rhs.add(&uhdp(&parts.contracted).mul_monomial(&[0, 1], 1));
    Ok(rhs)
}

/// Checks the recurrence at one edge.
pub fn edge_recurrence_holds(tree: &Tree, v: usize, w: usize) -> Result<bool, TreeError> {
    let rhs = edge_expansion_poly(tree, v, w)?;
    let mut y_plus_z = SparsePoly::zero(&["y", "z"]);
    y_plus_z.add_term(&[1, 0], 1);
    y_plus_z.add_term(&[0, 1], 1);
    Ok(uhdp(tree).mul(&y_plus_z) == rhs)
}

/// The edges of `tree` whose endpoints both have degree at least two.
pub fn non_leaf_edges(tree: &Tree) -> Vec<(usize, usize)> {
    tree.edges()
        .iter()
        .copied()
        .filter(|&(v, w)| !tree.is_leaf(v) && !tree.is_leaf(w))
        .collect()
}

/// Checks the recurrence at every non-leaf edge, returning the first
/// offending edge if any.
pub fn verify_edge_recurrence(tree: &Tree) -> Result<(), (usize, usize)> {
    for (v, w) in non_leaf_edges(tree) {
        let ok = edge_recurrence_holds(tree, v, w).expect("non-leaf edge");
        if !ok {
            return Err((v, w));
        }
    }
    Ok(())
}

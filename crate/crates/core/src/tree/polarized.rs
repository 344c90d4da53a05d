use crate::algebra::Composition;

use super::{Tree, TreeError};

/// A tree with two marked vertices, a left end and a right end (possibly
/// equal). The ends drive two products:
///
/// * [`concat`](Self::concat) joins two trees by an edge from the left
///   tree's right end to the right tree's left end;
/// * [`near_concat`](Self::near_concat) additionally slides every other
///   edge at the joint over to the left side, leaving the old joint vertex
///   as a pendant.
///
/// Compositions map into this algebra: a part `a` becomes the `a`-fold
/// near-concatenation power of a base tree, and parts are chained by plain
/// concatenation. Over the one-vertex base this realizes every caterpillar
/// (after capping the ends with pendant edges).
#[derive(Clone, PartialEq, Eq)]
pub struct PolarizedTree {
    tree: Tree,
    left: usize,
    right: usize,
}

impl PolarizedTree {
    /// The one-vertex tree, both ends on that vertex.
    pub fn single_vertex() -> Self {
        PolarizedTree { tree: Tree::from_edges(1, &[]).unwrap(), left: 0, right: 0 }
    }

    pub fn from_parts(tree: Tree, left: usize, right: usize) -> Result<Self, TreeError> {
        if left >= tree.n() {
            return Err(TreeError::BadLabel(left.to_string()));
        }
        if right >= tree.n() {
            return Err(TreeError::BadLabel(right.to_string()));
        }
        Ok(PolarizedTree { tree, left, right })
    }

    pub fn n(&self) -> usize {
        self.tree.n()
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    /// Joins `self` and `other` (labels of `other` shifted up by `self.n()`)
    /// with an edge from `self`'s right end to `other`'s left end. Ends of
    /// the result: `self`'s left, `other`'s right.
    pub fn concat(&self, other: &Self) -> Self {
        let na = self.tree.n();
        let mut edges = self.tree.edges().to_vec();
        edges.extend(other.tree.edges().iter().map(|&(u, v)| (u + na, v + na)));
        edges.push((self.right, other.left + na));
        let tree = Tree::from_edges(na + other.tree.n(), &edges).expect("join of two trees");
        PolarizedTree { tree, left: self.left, right: other.right + na }
    }

    /// Like [`concat`](Self::concat), then moves every edge at the joint
    /// vertex on the `other` side across the joining edge, so that vertex
    /// ends up as a pendant hanging from `self`'s right end. The vertex
    /// count is `self.n() + other.n()`, same as for `concat`; only the
    /// shape near the joint differs. If `other`'s two ends coincide, the
    /// right end of the result is the joint vertex on the `self` side.
    pub fn near_concat(&self, other: &Self) -> Self {
        let na = self.tree.n();
        let joined = self.concat(other);
        let v = self.right;
        let w = other.left + na;
        let tree = joined.tree.near_contract_raw(v, w);
        let right = if other.right == other.left { v } else { other.right + na };
        PolarizedTree { tree, left: self.left, right }
    }

    /// `k`-fold [`near_concat`](Self::near_concat) power, `k >= 1`.
    pub fn near_concat_power(&self, k: u32) -> Self {
        assert!(k >= 1, "power must be positive");
        let mut out = self.clone();
        for _ in 1..k {
            out = out.near_concat(self);
        }
        out
    }

    /// Lifts a composition over a base tree: part `a_i` becomes
    /// `base.near_concat_power(a_i)` and the parts are chained left to
    /// right with [`concat`](Self::concat). Over the one-vertex base,
    /// `(a_1,...,a_k)` yields the caterpillar with `a_i - 1` pendants on
    /// spine vertex `i` and the ends on the first and last spine vertices.
    pub fn compose(alpha: &Composition, base: &Self) -> Self {
        let mut parts = alpha.parts().iter();
        let first = *parts.next().expect("compositions are nonempty");
        let mut out = base.near_concat_power(first);
        for &a in parts {
            out = out.concat(&base.near_concat_power(a));
        }
        out
    }

    /// Forgets the polarization by attaching a fresh pendant vertex to each
    /// end (two pendants on the same vertex if the ends coincide).
    pub fn cap(&self) -> Tree {
        let n = self.tree.n();
        let mut edges = self.tree.edges().to_vec();
        edges.push((self.left, n));
        edges.push((self.right, n + 1));
        Tree::from_edges(n + 2, &edges).expect("capped tree")
    }
}

impl std::fmt::Debug for PolarizedTree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "PolarizedTree(n={}, left={}, right={}, edges={:?})", self.tree.n(), self.left, self.right, self.tree.edges())
    }
}

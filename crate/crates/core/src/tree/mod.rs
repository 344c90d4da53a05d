//! Labeled trees: parsing, validation, canonical codes, generation, and
//! the structural operations (near-contraction, caterpillars, polarized
//! concatenation) that the invariant machinery is built on.

mod canon;
mod caterpillar;
mod generate;
mod polarized;

pub use canon::{centroids, rooted_code, CanonicalCode};
pub use caterpillar::{cat, signature};
pub use generate::{count_free_trees, generate_free_trees, pruefer_tree, rooted_tree_counts};
pub use polarized::PolarizedTree;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TreeError {
    #[error("bad vertex label {0:?} (labels are integers 0..n-1)")]
    BadLabel(String),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("{n} vertices with {m} edges contain a cycle")]
    Cycle { n: usize, m: usize },
    #[error("graph is disconnected ({n} vertices, {m} edges)")]
    Disconnected { n: usize, m: usize },
    #[error("edge {0}-{1} is not in the tree")]
    EdgeNotPresent(usize, usize),
    #[error("edge {0}-{1} is a leaf edge; near-contraction needs both endpoints internal")]
    LeafEdge(usize, usize),
    #[error("invalid caterpillar signature {0:?}: first and last parts must be at least 2")]
    InvalidSignature(String),
    #[error("tree is not a caterpillar")]
    NotACaterpillar,
    #[error("empty input")]
    EmptyInput,
}

/// A tree on vertices `0..n`. Edges are stored normalized (`u < v`, sorted)
/// and an adjacency list is kept alongside.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tree {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Tree {
    /// Validates and builds a tree; see [`TreeError`] for the distinct
    /// failure modes.
    pub fn from_edges(n: usize, raw_edges: &[(usize, usize)]) -> Result<Tree, TreeError> {
        if n == 0 {
            return Err(TreeError::EmptyInput);
        }
        let mut edges: Vec<(usize, usize)> = Vec::with_capacity(raw_edges.len());
        for &(a, b) in raw_edges {
            if a >= n {
                return Err(TreeError::BadLabel(a.to_string()));
            }
            if b >= n {
                return Err(TreeError::BadLabel(b.to_string()));
            }
            if a == b {
                return Err(TreeError::SelfLoop(a));
            }
            edges.push((a.min(b), a.max(b)));
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(TreeError::DuplicateEdge(w[0].0, w[0].1));
        }
        let m = edges.len();
        if m > n - 1 {
            return Err(TreeError::Cycle { n, m });
        }
        if m < n - 1 {
            return Err(TreeError::Disconnected { n, m });
        }
        let mut adj = vec![Vec::new(); n];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let tree = Tree { n, edges, adj };
        if !tree.is_connected() {
            return Err(TreeError::Disconnected { n, m });
        }
        Ok(tree)
    }

    fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == self.n
    }

    /// Parses the text format: one `u v` edge per line; blank lines and
    /// `#` comments ignored; an optional leading `n=K` line fixes the
    /// vertex count (required for the one-vertex tree).
    pub fn parse(text: &str) -> Result<Tree, TreeError> {
        let mut n_decl: Option<usize> = None;
        let mut edges = Vec::new();
        let mut max_label = None::<usize>;
        for line in text.lines() {
            let line = line.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("n=") {
                if n_decl.is_some() || !edges.is_empty() {
                    return Err(TreeError::BadLabel(line.to_string()));
                }
                n_decl =
                    Some(rest.trim().parse().map_err(|_| TreeError::BadLabel(line.to_string()))?);
                continue;
            }
            let mut it = line.split_whitespace();
            let (a, b) = match (it.next(), it.next(), it.next()) {
                (Some(a), Some(b), None) => (a, b),
                _ => return Err(TreeError::BadLabel(line.to_string())),
            };
            let a: usize = a.parse().map_err(|_| TreeError::BadLabel(a.to_string()))?;
            let b: usize = b.parse().map_err(|_| TreeError::BadLabel(b.to_string()))?;
            max_label = Some(max_label.unwrap_or(0).max(a).max(b));
            edges.push((a, b));
        }
        let n = match n_decl {
            Some(n) => n,
            None => match max_label {
                Some(m) => m + 1,
                None => return Err(TreeError::EmptyInput),
            },
        };
        Tree::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
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
        self.degree(v) == 1
    }

    /// Number of leaves. By convention the one-vertex tree has none and
    /// the one-edge tree has two.
    pub fn leaf_count(&self) -> usize {
        if self.n == 1 {
            0
        } else {
            (0..self.n).filter(|&v| self.is_leaf(v)).count()
        }
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a < self.n && self.adj[a].binary_search(&b).is_ok()
    }

    /// Serializes back to the text format accepted by [`Tree::parse`].
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n={}\n", self.n);
        for &(a, b) in &self.edges {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }

    /// Applies a relabeling: vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Tree {
        assert_eq!(perm.len(), self.n);
        let edges: Vec<(usize, usize)> = self.edges.iter().map(|&(a, b)| (perm[a], perm[b])).collect();
        Tree::from_edges(self.n, &edges).expect("relabeling preserved tree structure")
    }

    /// The subtree induced by `vertices` (which must induce a connected
    /// subgraph). Returns the relabeled tree together with the map from
    /// new labels back to the original ones.
    pub fn induced_subtree(&self, vertices: &[usize]) -> (Tree, Vec<usize>) {
        let mut sorted: Vec<usize> = vertices.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let index = |v: usize| sorted.binary_search(&v).ok();
        let mut edges = Vec::new();
        for &(a, b) in &self.edges {
            if let (Some(ia), Some(ib)) = (index(a), index(b)) {
                edges.push((ia, ib));
            }
        }
        let tree = Tree::from_edges(sorted.len(), &edges)
            .expect("vertex set does not induce a subtree");
        (tree, sorted)
    }

    /// Near-contraction of the internal edge `e = (v, w)`: every other edge
    /// at `w` is re-attached to `v`, turning `w` into a pendant neighbor of
    /// `v`. Equivalently: contract `e` into `v`, then hang a fresh leaf
    /// (reusing the label `w`) on `v`. The vertex set is unchanged.
    pub fn near_contract(&self, v: usize, w: usize) -> Result<Tree, TreeError> {
        if v >= self.n || w >= self.n || !self.has_edge(v, w) {
            return Err(TreeError::EdgeNotPresent(v, w));
        }
        if self.degree(v) < 2 || self.degree(w) < 2 {
            return Err(TreeError::LeafEdge(v, w));
        }
        Ok(self.near_contract_raw(v, w))
    }

    /// Near-contraction without the internal-edge requirement; on a leaf
    /// edge it is the identity. Used by polarized concatenation, where the
    /// degenerate cases are meaningful.
    pub(crate) fn near_contract_raw(&self, v: usize, w: usize) -> Tree {
        assert!(self.has_edge(v, w));
        let edges: Vec<(usize, usize)> = self
            .edges
            .iter()
            .map(|&(a, b)| {
                if (a, b) == (v.min(w), v.max(w)) {
                    (a, b)
                } else if a == w {
                    (v, b)
                } else if b == w {
                    (a, v)
                } else {
                    (a, b)
                }
            })
            .collect();
        Tree::from_edges(self.n, &edges).expect("near-contraction of a tree is a tree")
    }
}

impl std::fmt::Debug for Tree {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Tree(n={}, edges={:?})", self.n, self.edges)
    }
}

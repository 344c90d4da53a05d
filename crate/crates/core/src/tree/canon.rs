use serde::{Deserialize, Serialize};

use super::Tree;

/// Isomorphism-invariant code: the balanced-parenthesis string of the tree
/// rooted at its centroid (lexicographically smaller of the two codes when
/// the centroid is an edge). Two trees are isomorphic iff their codes are
/// byte-equal.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalCode(Vec<u8>);

impl CanonicalCode {
    pub fn bytes(&self) -> &[u8] {
        &self.0
    }

    pub fn hex(&self) -> String {
        self.0.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalCode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", String::from_utf8_lossy(&self.0))
    }
}

/// The one or two centroid vertices (minimizers of the largest component
/// left by deleting the vertex). Two centroids are always adjacent.
pub fn centroids(tree: &Tree) -> Vec<usize> {
    let n = tree.n();
    if n == 1 {
        return vec![0];
    }
    let mut size = vec![0usize; n];
    let mut weight = vec![0usize; n]; // size of largest child subtree
    // iterative post-order from root 0
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut stack = vec![0usize];
    let mut seen = vec![false; n];
    seen[0] = true;
    while let Some(v) = stack.pop() {
        order.push(v);
        for &w in tree.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                stack.push(w);
            }
        }
    }
    for &v in order.iter().rev() {
        size[v] += 1;
        if parent[v] != usize::MAX {
            size[parent[v]] += size[v];
            weight[parent[v]] = weight[parent[v]].max(size[v]);
        }
    }
    let mut best = n;
    let mut out = Vec::new();
    for v in 0..n {
        let above = n - size[v];
        let w = weight[v].max(above);
        if w < best {
            best = w;
            out.clear();
            out.push(v);
        } else if w == best {
            out.push(v);
        }
    }
    out
}

/// Balanced-parenthesis code of `tree` rooted at `root`: a leaf is `()`,
/// an internal vertex wraps the sorted concatenation of its children's
/// codes. Equal codes characterize rooted isomorphism.
pub fn rooted_code(tree: &Tree, root: usize) -> Vec<u8> {
    fn rec(tree: &Tree, v: usize, parent: usize) -> Vec<u8> {
        let mut child_codes: Vec<Vec<u8>> = tree
            .neighbors(v)
            .iter()
            .filter(|&&w| w != parent)
            .map(|&w| rec(tree, w, v))
            .collect();
        child_codes.sort_unstable();
        let mut out = Vec::with_capacity(2 + child_codes.iter().map(Vec::len).sum::<usize>());
        out.push(b'(');
        for c in child_codes {
            out.extend_from_slice(&c);
        }
        out.push(b')');
        out
    }
    rec(tree, root, usize::MAX)
}

impl Tree {
    pub fn canonical_code(&self) -> CanonicalCode {
        let cs = centroids(self);
        let code = cs.iter().map(|&c| rooted_code(self, c)).min().unwrap();
        CanonicalCode(code)
    }
}

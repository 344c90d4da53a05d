//! Streaming generation of free (unlabeled) trees.
//!
//! Rooted trees are enumerated by their canonical level sequences with the
//! Beyer-Hedetniemi successor rule; a rooted tree is emitted as a free tree
//! exactly when its root is the centroid (for bicentroidal trees, when the
//! root's code is the smaller of the two rootings). Memory use is O(n); no
//! table of seen trees is kept.

use super::canon::rooted_code;
use super::{centroids, Tree};

/// Iterator over canonical level sequences of rooted trees on `n` vertices
/// (root at level 0), in the Beyer-Hedetniemi order: the path first, the
/// star last.
struct LevelSequences {
    next: Option<Vec<usize>>,
}

impl LevelSequences {
    fn new(n: usize) -> Self {
        assert!(n >= 1);
        LevelSequences { next: Some((0..n).collect()) }
    }
}

impl Iterator for LevelSequences {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        // successor: find the rightmost entry >= 2, lower it by copying the
        // segment that starts at its nearest left neighbor one level up
        let p = current.iter().rposition(|&l| l >= 2);
        self.next = p.map(|p| {
            let q = (0..p).rposition(|i| current[i] == current[p] - 1).unwrap();
            let mut succ = current.clone();
            for i in p..succ.len() {
                succ[i] = succ[i - (p - q)];
            }
            succ
        });
        Some(current)
    }
}

fn tree_from_levels(levels: &[usize]) -> Tree {
    let n = levels.len();
    let mut last_at_level = vec![usize::MAX; n + 1];
    last_at_level[0] = 0;
    let mut edges = Vec::with_capacity(n.saturating_sub(1));
    for (v, &l) in levels.iter().enumerate().skip(1) {
        edges.push((last_at_level[l - 1], v));
        last_at_level[l] = v;
    }
    Tree::from_edges(n, &edges).expect("level sequence encodes a tree")
}

/// Streams every free tree on `n` vertices exactly once (up to
/// isomorphism), as labeled [`Tree`]s rooted the way the generator
/// produced them.
pub fn generate_free_trees(n: usize) -> impl Iterator<Item = Tree> {
    LevelSequences::new(n).filter_map(move |levels| {
        let tree = tree_from_levels(&levels);
        let cs = centroids(&tree);
        match cs.as_slice() {
            [c] => (*c == 0).then_some(tree),
            [a, b] => {
                let (root, other) = if *a == 0 {
                    (0, *b)
                } else if *b == 0 {
                    (0, *a)
                } else {
                    return None;
                };
                (rooted_code(&tree, root) <= rooted_code(&tree, other)).then_some(tree)
            }
            _ => unreachable!("a tree has one or two centroids"),
        }
    })
}

/// Rooted tree counts `t(1..=max_n)` from the classical convolution
/// recurrence (returned vector is 1-indexed: `counts[k] = t(k)`).
pub fn rooted_tree_counts(max_n: usize) -> Vec<u64> {
    let mut t = vec![0u64; max_n + 1];
    if max_n >= 1 {
        t[1] = 1;
    }
    for n in 2..=max_n {
        let mut acc: u128 = 0;
        for k in 1..n {
            let mut weighted: u128 = 0;
            for d in 1..=k {
                if k % d == 0 {
                    weighted += d as u128 * t[d] as u128;
                }
            }
            acc += weighted * t[n - k] as u128;
        }
        t[n] = u64::try_from(acc / (n as u128 - 1)).expect("tree count exceeds u64");
    }
    t
}

/// Number of free trees on `n` vertices, by Otter's formula
/// `F = T - (T^2 - T(x^2))/2` applied to the rooted counts. This is an
/// independent check on [`generate_free_trees`]: analytic counting versus
/// explicit enumeration.
pub fn count_free_trees(n: usize) -> u64 {
    if n == 0 {
        return 0;
    }
    let t = rooted_tree_counts(n);
    let mut conv: u128 = 0;
    for i in 1..n {
        conv += t[i] as u128 * t[n - i] as u128;
    }
    let diag = if n % 2 == 0 { t[n / 2] as u128 } else { 0 };
    u64::try_from(t[n] as u128 - (conv - diag) / 2).expect("count exceeds u64")
}

/// Decodes a Pruefer sequence (length `n-2`) into a labeled tree. Used as
/// an enumeration oracle in tests: iterating over all `n^(n-2)` sequences
/// hits every labeled tree exactly once.
pub fn pruefer_tree(n: usize, seq: &[usize]) -> Tree {
    assert!(n >= 1);
    if n == 1 {
        return Tree::from_edges(1, &[]).unwrap();
    }
    assert_eq!(seq.len(), n - 2, "Pruefer sequence for n={n} must have length n-2");
    let mut degree = vec![1usize; n];
    for &s in seq {
        degree[s] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    // smallest-leaf elimination via a cursor + pointer, O(n log n) not needed
    let mut ptr = 0;
    while degree[ptr] != 1 {
        ptr += 1;
    }
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
    Tree::from_edges(n, &edges).expect("Pruefer decoding yields a tree")
}

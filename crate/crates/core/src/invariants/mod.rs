//! Tree invariants: the chromatic symmetric function in the power-sum and
//! monomial bases, the subset degree polynomial, and three subtree census
//! polynomials.
//!
//! Every function here is exact over machine integers and panics on
//! overflow rather than wrapping. The engines use dynamic programming or
//! connected-set enumeration; independently coded brute-force versions of
//! each live in [`oracle`] and are compared against the engines in tests.

pub mod closed;
pub mod oracle;
pub mod recurrence;

pub use recurrence::{
    edge_expansion, edge_expansion_poly, edge_recurrence_holds, non_leaf_edges,
    verify_edge_recurrence, EdgeExpansion,
};

use std::collections::{BTreeMap, HashMap};

use serde_json::json;
use thiserror::Error;

use crate::algebra::{factorial, Partition, SparsePoly};
use crate::tree::Tree;

/// Largest vertex count accepted by [`csf_monomial`], which enumerates
/// stable set partitions and grows like the Bell numbers.
pub const MONOMIAL_MAX_N: usize = 12;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum InvariantError {
    #[error("tree on {n} vertices exceeds the supported maximum {max} for this computation")]
    TooLarge { n: usize, max: usize },
}

/// Chromatic symmetric function in the power-sum basis: the map
/// `lambda -> c_lambda` where `X_T = sum_lambda c_lambda p_lambda`.
///
/// Equivalently `c_lambda = (-1)^(n - len(lambda))` times the number of
/// edge subsets whose forest has component sizes `lambda`.
#[derive(Clone, PartialEq, Eq)]
pub struct PsumCsf {
    coeffs: BTreeMap<Partition, i64>,
}

/// Chromatic symmetric function in the monomial basis: the map
/// `lambda -> a_lambda` where `X_T = sum_lambda a_lambda m_lambda`.
///
/// `a_lambda` counts partitions of the vertex set into stable (edge-free)
/// blocks of sizes `lambda`, weighted by the product of factorials of the
/// part multiplicities.
#[derive(Clone, PartialEq, Eq)]
pub struct MonCsf {
    coeffs: BTreeMap<Partition, i64>,
}

macro_rules! csf_common {
    ($ty:ident) => {
        impl $ty {
            pub(crate) fn from_coeffs(coeffs: BTreeMap<Partition, i64>) -> Self {
                let mut coeffs = coeffs;
                coeffs.retain(|_, c| *c != 0);
                $ty { coeffs }
            }

            pub fn coefficient(&self, lambda: &Partition) -> i64 {
                self.coeffs.get(lambda).copied().unwrap_or(0)
            }

            pub fn coefficients(&self) -> &BTreeMap<Partition, i64> {
                &self.coeffs
            }

            pub fn iter(&self) -> impl Iterator<Item = (&Partition, i64)> {
                self.coeffs.iter().map(|(l, &c)| (l, c))
            }

            /// Sum of absolute values of all coefficients.
            pub fn abs_sum(&self) -> i64 {
                self.coeffs.values().map(|c| c.abs()).sum()
            }

            /// Canonical text form, partitions in increasing lexicographic
            /// order of their part lists: `1*(1,1,1,1) - 3*(2,1,1) + ...`.
            pub fn to_text(&self) -> String {
                if self.coeffs.is_empty() {
                    return "0".into();
                }
                let mut out = String::new();
                for (lambda, &c) in &self.coeffs {
                    if out.is_empty() {
                        if c < 0 {
                            out.push_str("-");
                        }
                    } else {
                        out.push_str(if c < 0 { " - " } else { " + " });
                    }
                    out.push_str(&format!("{}*{lambda}", c.abs()));
                }
                out
            }

            pub fn to_json(&self) -> serde_json::Value {
                let terms: Vec<serde_json::Value> = self
                    .coeffs
                    .iter()
                    .map(|(l, c)| json!({"partition": l.parts(), "coeff": c}))
                    .collect();
                json!({ "terms": terms })
            }
        }

        impl std::fmt::Debug for $ty {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}", self.to_text())
            }
        }

        impl std::fmt::Display for $ty {
            fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
                write!(f, "{}", self.to_text())
            }
        }
    };
}

csf_common!(PsumCsf);
csf_common!(MonCsf);

/// Power-sum expansion of the chromatic symmetric function, by a
/// bottom-up forest count: the state at a vertex maps (multiset of
/// finished component sizes, size of the open component) to the number of
/// edge subsets realizing it.
pub fn csf_powersum(tree: &Tree) -> PsumCsf {
    let n = tree.n();
    let root = forest_state(tree, 0, usize::MAX);
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    for ((done, cur), cnt) in root {
        *counts.entry(done.push_part(cur)).or_insert(0) += cnt;
    }
    let signed = counts
        .into_iter()
        .map(|(lambda, cnt)| {
            let sign = if (n - lambda.len()) % 2 == 0 { 1 } else { -1 };
            (lambda, sign * cnt)
        })
        .collect();
    PsumCsf::from_coeffs(signed)
}

fn forest_state(tree: &Tree, v: usize, parent: usize) -> HashMap<(Partition, u32), i64> {
    let mut state = HashMap::new();
    state.insert((Partition::empty(), 1u32), 1i64);
    for &c in tree.neighbors(v) {
        if c == parent {
            continue;
        }
        let child = forest_state(tree, c, v);
        let mut merged: HashMap<(Partition, u32), i64> = HashMap::new();
        for ((dv, cv), av) in &state {
            for ((dc, cc), ac) in &child {
                let cnt = av.checked_mul(*ac).expect("forest count overflow");
                let both = dv.union(dc);
                // cut the connecting edge: the child's open component closes
                *merged.entry((both.push_part(*cc), *cv)).or_insert(0) += cnt;
                // keep it: the open components join
                *merged.entry((both, cv + cc)).or_insert(0) += cnt;
            }
        }
        state = merged;
    }
    state
}

/// Monomial expansion of the chromatic symmetric function, by enumerating
/// partitions of the vertex set into stable blocks. Exponential in `n`;
/// refuses trees larger than [`MONOMIAL_MAX_N`].
pub fn csf_monomial(tree: &Tree) -> Result<MonCsf, InvariantError> {
    let n = tree.n();
    if n > MONOMIAL_MAX_N {
        return Err(InvariantError::TooLarge { n, max: MONOMIAL_MAX_N });
    }
    let mut counts: BTreeMap<Partition, i64> = BTreeMap::new();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    stable_partitions(tree, 0, &mut blocks, &mut counts);
    let weighted = counts
        .into_iter()
        .map(|(lambda, cnt)| {
            let mut w = cnt;
            let mut seen = 0;
            for &p in lambda.parts() {
                if p != seen {
                    w = w.checked_mul(factorial(lambda.multiplicity(p))).expect("coefficient overflow");
                    seen = p;
                }
            }
            (lambda, w)
        })
        .collect();
    Ok(MonCsf::from_coeffs(weighted))
}

fn stable_partitions(
    tree: &Tree,
    v: usize,
    blocks: &mut Vec<Vec<usize>>,
    counts: &mut BTreeMap<Partition, i64>,
) {
    if v == tree.n() {
        let lambda = Partition::new(blocks.iter().map(|b| b.len() as u32).collect());
        *counts.entry(lambda).or_insert(0) += 1;
        return;
    }
    for i in 0..blocks.len() {
        if blocks[i].iter().all(|&u| !tree.has_edge(u, v)) {
            blocks[i].push(v);
            stable_partitions(tree, v + 1, blocks, counts);
            blocks[i].pop();
        }
    }
    blocks.push(vec![v]);
    stable_partitions(tree, v + 1, blocks, counts);
    blocks.pop();
}

/// Census of all induced subtrees (nonempty connected vertex subsets),
/// keyed by (internal edges, boundary edges, leaf edges of the subtree).
/// Boundary edges have exactly one endpoint in the subset; leaf edges are
/// edges of the induced subtree with an endpoint of induced degree 1.
/// Requires `n <= 64` (bitmask enumeration).
pub(crate) fn subtree_census(tree: &Tree) -> BTreeMap<(u16, u16, u16), i64> {
    let n = tree.n();
    assert!(n <= 64, "subtree census uses 64-bit masks; tree has {n} vertices");
    let adj: Vec<u64> = (0..n)
        .map(|v| tree.neighbors(v).iter().fold(0u64, |m, &w| m | (1 << w)))
        .collect();
    let mut census = BTreeMap::new();
    for r in 0..n {
        // connected sets whose minimum vertex is r
        let banned = (1u64 << r) - 1;
        grow_connected(tree, &adj, 1u64 << r, banned, &mut census);
    }
    census
}

fn grow_connected(
    tree: &Tree,
    adj: &[u64],
    in_mask: u64,
    excluded: u64,
    census: &mut BTreeMap<(u16, u16, u16), i64>,
) {
    record_subtree(tree, adj, in_mask, census);
    let mut hood = 0u64;
    let mut rest = in_mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        hood |= adj[v];
    }
    let mut boundary = hood & !in_mask & !excluded;
    let mut ex = excluded;
    while boundary != 0 {
        let v = boundary.trailing_zeros();
        boundary &= boundary - 1;
        grow_connected(tree, adj, in_mask | (1 << v), ex, census);
        ex |= 1 << v;
    }
}

fn record_subtree(tree: &Tree, adj: &[u64], in_mask: u64, census: &mut BTreeMap<(u16, u16, u16), i64>) {
    let size = in_mask.count_ones();
    let e = size - 1;
    let mut degsum = 0u32;
    let mut induced_leaves = 0u32;
    let mut rest = in_mask;
    while rest != 0 {
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        degsum += tree.degree(v) as u32;
        if (adj[v] & in_mask).count_ones() == 1 {
            induced_leaves += 1;
        }
    }
    let d = degsum - 2 * e;
    let l = match size {
        1 => 0,
        2 => 1,
        _ => induced_leaves,
    };
    *census.entry((e as u16, d as u16, l as u16)).or_insert(0) += 1;
}

/// Three-variable subtree census polynomial
/// `sum over subtrees of x^edges * y^boundary * z^(leaf edges)`.
pub fn soup_poly(tree: &Tree) -> SparsePoly {
    let mut poly = SparsePoly::zero(&["x", "y", "z"]);
    for (&(e, d, l), &cnt) in &subtree_census(tree) {
        poly.add_term(&[e, d, l], cnt);
    }
    poly
}

/// Half degree polynomial `sum over subtrees of y^boundary * z^edges`
/// (the degree polynomial restricted to connected subsets, with the size
/// variable dropped).
pub fn half_degree_poly(tree: &Tree) -> SparsePoly {
    let mut poly = SparsePoly::zero(&["y", "z"]);
    for (&(e, d, _), &cnt) in &subtree_census(tree) {
        poly.add_term(&[d, e], cnt);
    }
    poly
}

/// Subtree polynomial `sum over subtrees of q^edges * r^(leaf edges)`.
pub fn subtree_poly(tree: &Tree) -> SparsePoly {
    let mut poly = SparsePoly::zero(&["q", "r"]);
    for (&(e, _, l), &cnt) in &subtree_census(tree) {
        poly.add_term(&[e, l], cnt);
    }
    poly
}

/// [`half_degree_poly`] with the leaf-vertex singleton terms removed:
/// `hdp - (number of leaves) * y`. This is the form the edge recurrence
/// and the composition calculus work with.
pub fn uhdp(tree: &Tree) -> SparsePoly {
    let mut poly = half_degree_poly(tree);
    poly.add_term(&[1, 0], -(tree.leaf_count() as i64));
    poly
}

/// Degree polynomial over all vertex subsets (connected or not):
/// `sum over A subsets of V of x^|A| * y^boundary(A) * z^(edges inside A)`.
pub fn degree_poly(tree: &Tree) -> SparsePoly {
    let vars = ["x", "y", "z"];
    let y = SparsePoly::var(&vars, 1);
    let z = SparsePoly::var(&vars, 2);
    let (fin, fout) = degree_states(tree, 0, usize::MAX, &vars, &y, &z);
    fin.add(&fout)
}

fn degree_states(
    tree: &Tree,
    v: usize,
    parent: usize,
    vars: &[&str],
    y: &SparsePoly,
    z: &SparsePoly,
) -> (SparsePoly, SparsePoly) {
    // generating functions over subsets of v's rooted subtree, split by
    // whether v itself is in the subset; the edge to the parent is not
    // yet accounted for
    let mut fin = SparsePoly::var(vars, 0);
    let mut fout = SparsePoly::constant(vars, 1);
    for &c in tree.neighbors(v) {
        if c == parent {
            continue;
        }
        let (cin, cout) = degree_states(tree, c, v, vars, y, z);
        fin = fin.mul(&cin.mul(z).add(&cout.mul(y)));
        fout = fout.mul(&cin.mul(y).add(&cout));
    }
    (fin, fout)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree::generate_free_trees;

    fn path(n: usize) -> Tree {
        Tree::from_edges(n, &(1..n).map(|i| (i - 1, i)).collect::<Vec<_>>()).unwrap()
    }

    fn star(n: usize) -> Tree {
        Tree::from_edges(n, &(1..n).map(|i| (0, i)).collect::<Vec<_>>()).unwrap()
    }

    fn pt(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn powersum_of_small_trees_matches_hand_counts() {
        let p4 = csf_powersum(&path(4));
        assert_eq!(p4.coefficient(&pt(&[1, 1, 1, 1])), 1);
        assert_eq!(p4.coefficient(&pt(&[2, 1, 1])), -3);
        assert_eq!(p4.coefficient(&pt(&[2, 2])), 1);
        assert_eq!(p4.coefficient(&pt(&[3, 1])), 2);
        assert_eq!(p4.coefficient(&pt(&[4])), -1);
        assert_eq!(p4.coefficients().len(), 5);

        let s4 = csf_powersum(&star(4));
        assert_eq!(s4.coefficient(&pt(&[1, 1, 1, 1])), 1);
        assert_eq!(s4.coefficient(&pt(&[2, 1, 1])), -3);
        assert_eq!(s4.coefficient(&pt(&[2, 2])), 0);
        assert_eq!(s4.coefficient(&pt(&[3, 1])), 3);
        assert_eq!(s4.coefficient(&pt(&[4])), -1);

        assert_eq!(csf_powersum(&path(1)).coefficient(&pt(&[1])), 1);
        assert_eq!(
            p4.to_text(),
            "1*(1,1,1,1) - 3*(2,1,1) + 1*(2,2) + 2*(3,1) - 1*(4)"
        );
    }

    #[test]
    fn powersum_coefficients_count_all_edge_subsets() {
        for n in 1..=8 {
            for tree in generate_free_trees(n) {
                let csf = csf_powersum(&tree);
                assert_eq!(csf.abs_sum(), 1i64 << (n - 1), "n={n}");
                assert_eq!(csf.coefficient(&Partition::new(vec![1; n])), 1);
                if n >= 3 {
                    let hook = pt(&[(n - 1) as u32, 1]);
                    assert_eq!(csf.coefficient(&hook).abs(), tree.leaf_count() as i64, "n={n}");
                }
            }
        }
    }

    #[test]
    fn monomial_of_small_trees_matches_hand_counts() {
        let m = csf_monomial(&path(4)).unwrap();
        assert_eq!(m.coefficient(&pt(&[1, 1, 1, 1])), 24);
        assert_eq!(m.coefficient(&pt(&[2, 1, 1])), 6);
        assert_eq!(m.coefficient(&pt(&[2, 2])), 2);
        assert_eq!(m.coefficient(&pt(&[3, 1])), 0);

        let s = csf_monomial(&star(4)).unwrap();
        assert_eq!(s.coefficient(&pt(&[1, 1, 1, 1])), 24);
        assert_eq!(s.coefficient(&pt(&[2, 1, 1])), 6);
        assert_eq!(s.coefficient(&pt(&[3, 1])), 1);
        assert_eq!(s.coefficient(&pt(&[2, 2])), 0);
    }

    #[test]
    fn monomial_rejects_large_trees() {
        assert!(matches!(
            csf_monomial(&path(13)),
            Err(InvariantError::TooLarge { n: 13, max: 12 })
        ));
        assert!(csf_monomial(&path(12)).is_ok());
    }

    #[test]
    fn census_polys_of_small_trees_match_hand_counts() {
        assert_eq!(
            subtree_poly(&path(4)).to_text(),
            "4 + 3*q*r + 2*q^2*r^2 + 1*q^3*r^2"
        );
        let hdp4 = half_degree_poly(&path(4));
        let mut want = SparsePoly::zero(&["y", "z"]);
        for (exps, c) in [([1u16, 0u16], 2i64), ([2, 0], 2), ([1, 1], 2), ([2, 1], 1), ([1, 2], 2), ([0, 3], 1)] {
            want.add_term(&exps, c);
        }
        assert_eq!(hdp4, want);
        assert_eq!(
            soup_poly(&path(4)).to_text(),
            "2*y + 2*y^2 + 2*x*y*z + 1*x*y^2*z + 2*x^2*y*z^2 + 1*x^3*z^2"
        );
        let hdps = half_degree_poly(&star(4));
        let mut want = SparsePoly::zero(&["y", "z"]);
        for (exps, c) in [([1u16, 0u16], 3i64), ([3, 0], 1), ([2, 1], 3), ([1, 2], 3), ([0, 3], 1)] {
            want.add_term(&exps, c);
        }
        assert_eq!(hdps, want);
    }

    #[test]
    fn uhdp_of_four_star_is_y_plus_z_cubed() {
        let yz = ["y", "z"];
        let cube = SparsePoly::var(&yz, 0).add(&SparsePoly::var(&yz, 1)).pow(3);
        assert_eq!(uhdp(&star(4)), cube);
    }

    #[test]
    fn uhdp_of_tiny_trees() {
        assert_eq!(uhdp(&path(1)), SparsePoly::constant(&["y", "z"], 1));
        assert_eq!(uhdp(&path(2)), SparsePoly::var(&["y", "z"], 1));
    }

    #[test]
    fn degree_poly_of_tiny_trees() {
        let xyz = ["x", "y", "z"];
        let mut k1 = SparsePoly::constant(&xyz, 1);
        k1.add_term(&[1, 0, 0], 1);
        assert_eq!(degree_poly(&path(1)), k1);
        let mut p2 = SparsePoly::constant(&xyz, 1);
        p2.add_term(&[1, 1, 0], 2);
        p2.add_term(&[2, 0, 1], 1);
        assert_eq!(degree_poly(&path(2)), p2);
    }

    #[test]
    fn census_polys_are_specializations_of_soup() {
        for n in 1..=7 {
            for tree in generate_free_trees(n) {
                let soup = soup_poly(&tree);
                let z = SparsePoly::var(&["x", "y", "z"], 2);
                let one = SparsePoly::constant(&["x", "y", "z"], 1);
                // clear the leaf-edge slot before renaming x to z, the two
                // would otherwise pile up in the same variable
                let hdp_from_soup = soup
                    .substitute(2, &one)
                    .substitute(0, &z)
                    .project(&[1, 2])
                    .unwrap();
                assert_eq!(hdp_from_soup, half_degree_poly(&tree));
                let stp_from_soup = soup
                    .substitute(1, &one)
                    .project(&[0, 2])
                    .unwrap()
                    .remap_vars(vec!["q".into(), "r".into()], &[0, 1]);
                assert_eq!(stp_from_soup, subtree_poly(&tree));
            }
        }
    }

    #[test]
    fn connected_coefficients_of_degree_poly_match_half_degree_poly() {
        // a connected subset with c edges has c+1 vertices, so
        // hdp[y^b z^c] = gdp[x^(c+1) y^b z^c]
        for n in 1..=7 {
            for tree in generate_free_trees(n) {
                let gdp = degree_poly(&tree);
                let hdp = half_degree_poly(&tree);
                for b in 0..=n as u16 {
                    for c in 0..n as u16 {
                        assert_eq!(
                            hdp.coefficient(&[b, c]),
                            gdp.coefficient(&[c + 1, b, c]),
                            "n={n} b={b} c={c}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn engines_match_subset_scan_oracles() {
        for n in 1..=7 {
            for tree in generate_free_trees(n) {
                assert_eq!(soup_poly(&tree), oracle::soup_by_subsets(&tree));
                assert_eq!(half_degree_poly(&tree), oracle::half_degree_by_subsets(&tree));
                assert_eq!(subtree_poly(&tree), oracle::subtree_poly_by_subsets(&tree));
                assert_eq!(degree_poly(&tree), oracle::degree_poly_by_subsets(&tree));
                assert_eq!(csf_powersum(&tree), oracle::powersum_by_edge_subsets(&tree));
            }
        }
    }

    #[test]
    fn monomial_engine_matches_coloring_oracle() {
        for n in 1..=6 {
            for tree in generate_free_trees(n) {
                assert_eq!(csf_monomial(&tree).unwrap(), oracle::monomial_by_colorings(&tree));
            }
        }
    }

    #[test]
    fn powersum_and_monomial_expansions_agree() {
        // expand sum c_lambda p_lambda and sum a_lambda m_lambda in n
        // variables and compare as explicit polynomials
        for n in 1..=8 {
            for tree in generate_free_trees(n) {
                let from_p = expand_powersum(&csf_powersum(&tree), n);
                let from_m = expand_monomial(&csf_monomial(&tree).unwrap(), n);
                assert_eq!(from_p, from_m, "n={n}");
            }
        }
    }

    fn var_names(n: usize) -> Vec<String> {
        (1..=n).map(|i| format!("x{i}")).collect()
    }

    fn expand_powersum(csf: &PsumCsf, n: usize) -> SparsePoly {
        let names = var_names(n);
        let mut total = SparsePoly::zero_owned(names.clone());
        for (lambda, c) in csf.iter() {
            let mut prod = SparsePoly::constant_owned(names.clone(), 1);
            for &part in lambda.parts() {
                let mut pk = SparsePoly::zero_owned(names.clone());
                for i in 0..n {
                    let mut exps = vec![0u16; n];
                    exps[i] = part as u16;
                    pk.add_term(&exps, 1);
                }
                prod = prod.mul(&pk);
            }
            total = total.add(&prod.scale(c));
        }
        total
    }

    fn expand_monomial(csf: &MonCsf, n: usize) -> SparsePoly {
        let names = var_names(n);
        let mut total = SparsePoly::zero_owned(names.clone());
        for (lambda, c) in csf.iter() {
            let mut exps: Vec<u16> = lambda.parts().iter().map(|&p| p as u16).collect();
            exps.resize(n, 0);
            exps.sort_unstable();
            exps.reverse();
            let mut mono = SparsePoly::zero_owned(names.clone());
            distinct_permutations(&mut exps, 0, &mut |perm| mono.add_term(perm, 1));
            total = total.add(&mono.scale(c));
        }
        total
    }

    fn distinct_permutations(exps: &mut Vec<u16>, at: usize, emit: &mut impl FnMut(&[u16])) {
        if at == exps.len() {
            emit(exps);
            return;
        }
        let mut tried = Vec::new();
        for i in at..exps.len() {
            if tried.contains(&exps[i]) {
                continue;
            }
            tried.push(exps[i]);
            exps.swap(at, i);
            distinct_permutations(exps, at + 1, emit);
            exps.swap(at, i);
        }
    }
}

//! The binomial bridge between the half degree polynomial and the subtree
//! polynomial.
//!
//! Pairing a subtree `S` with a set `K` of `k` of its boundary edges and
//! passing to `U = S + K` (every edge of `K` becomes a leaf edge of `U`)
//! gives, for each pair `(a, k)`, the equation
//!
//! `sum_b C(b,k) h(a,b) = sum_j C(j,k) s(a+k,j)`
//!
//! over the coefficient vectors of the two polynomials. The `a = 0` rows
//! relate the vector `H1 = [h(0,b)]` to the star counts `S1 = [s(k,k)]`;
//! the rows with `a, k >= 1` relate `H2` to `S2` through square matrices
//! `M` (block unitriangular) and `N` (block determinants 2, 3, ..., n-1).
//!
//! One wrinkle: for `(a,k) = (0,1)` the pairing is two-to-one, because a
//! single edge can be split around either endpoint, so that row of the
//! `H1` system carries a factor 1/2. The matrix `P` built here includes
//! that factor, making `P * H1 = S1` hold exactly; consequently `P` is
//! triangular with diagonal `(1, 1/2, 1, ..., 1)` rather than
//! unitriangular.

use serde_json::json;
use thiserror::Error;

use crate::algebra::{binom, AlgebraError, Fraction, RationalMatrix, SparsePoly};
use crate::invariants::{half_degree_poly, subtree_poly};
use crate::tree::Tree;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TransformError {
    #[error("term {0} is outside the legal support for an {1}-vertex tree")]
    BadSupport(String, usize),
    #[error("forced coefficient of {what} must be {want}, found {found}")]
    BadForced { what: String, want: i64, found: i64 },
    #[error("system solution is not an integer vector")]
    NonInteger,
    #[error("system solution has negative entries")]
    Negative,
    #[error("diagonal subtree counts disagree between the solved systems")]
    Inconsistent,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// Coefficient vectors of one tree's half degree and subtree polynomials,
/// split into the singleton/star parts (`h1`, `s1`) and the square-system
/// parts (`h2`, `s2`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeVectors {
    pub n: usize,
    /// `h(0, b)` for `b = 0..n`: vertices of each degree.
    pub h1: Vec<i64>,
    /// `h(a, b)` for `a, b >= 1`, `a + b <= n-1`, sorted by (a, b).
    pub h2: Vec<i64>,
    /// `s(k, k)` for `k = 0..n`: star subtrees with k edges.
    pub s1: Vec<i64>,
    /// `s(i, j)` for `2 <= j <= i <= n-1`, sorted by (i, j).
    pub s2: Vec<i64>,
}

/// The matrices of the bridge for a fixed `n`, together with the index
/// maps that define their rows and columns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeMatrices {
    pub n: usize,
    /// `n x n`; `p[i][j] = C(j, i)`, row 1 halved. `p * h1 = s1`.
    pub p: RationalMatrix,
    /// Left side of the square system, rows in `row_index` order:
    /// `m * h2 = n_mat * s2`.
    pub m: RationalMatrix,
    /// Right side of the square system, same row order as `m`.
    pub n_mat: RationalMatrix,
    /// `n_mat` with rows sorted by `(a+k, a)`, making it block diagonal
    /// with one block per subtree edge count `i = a+k`.
    pub n_blocked: RationalMatrix,
    /// `n_blocked` row `r` is `n_mat` row `row_permutation[r]`.
    pub row_permutation: Vec<usize>,
    /// `(a, k)` pair of each `m`/`n_mat` row, sorted by (a, k).
    pub row_index: Vec<(u32, u32)>,
    /// `(a, b)` exponent pair of each `h2` entry.
    pub h2_index: Vec<(u32, u32)>,
    /// `(i, j)` exponent pair of each `s2` entry.
    pub s2_index: Vec<(u32, u32)>,
}

fn h2_positions(n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 1..n.saturating_sub(1) {
        for b in 1..n - a {
            out.push((a as u32, b as u32));
        }
    }
    out
}

fn s2_positions(n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 2..n {
        for j in 2..=i {
            out.push((i as u32, j as u32));
        }
    }
    out
}

fn row_pairs(n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for a in 1..n.saturating_sub(1) {
        for k in 1..n - a {
            out.push((a as u32, k as u32));
        }
    }
    out
}

/// Builds the bridge matrices for trees on `n` vertices.
pub fn build_matrices(n: usize) -> BridgeMatrices {
    assert!(n >= 1);
    let mut p = RationalMatrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            p[(i, j)] = Fraction::from_int(binom(j as i64, i as i64));
            if i == 1 {
                p[(i, j)] = p[(i, j)] * Fraction::new(1, 2);
            }
        }
    }

    let row_index = row_pairs(n);
    let h2_index = h2_positions(n);
    let s2_index = s2_positions(n);
    let size = row_index.len();
    debug_assert_eq!(size, h2_index.len());
    debug_assert_eq!(size, s2_index.len());

    let h2_pos = |a: u32, b: u32| h2_index.iter().position(|&x| x == (a, b)).unwrap();
    let s2_pos = |i: u32, j: u32| s2_index.iter().position(|&x| x == (i, j)).unwrap();

    let mut m = RationalMatrix::zeros(size, size);
    let mut n_mat = RationalMatrix::zeros(size, size);
    for (r, &(a, k)) in row_index.iter().enumerate() {
        for b in 1..(n as u32) - a {
            m[(r, h2_pos(a, b))] = Fraction::from_int(binom(b as i64, k as i64));
        }
        let i = a + k;
        for j in 2..=i {
            n_mat[(r, s2_pos(i, j))] = Fraction::from_int(binom(j as i64, k as i64));
        }
    }

    let mut row_permutation: Vec<usize> = (0..size).collect();
    row_permutation.sort_by_key(|&r| (row_index[r].0 + row_index[r].1, row_index[r].0));
    let mut n_blocked = RationalMatrix::zeros(size, size);
    for (r2, &r) in row_permutation.iter().enumerate() {
        for c in 0..size {
            n_blocked[(r2, c)] = n_mat[(r, c)];
        }
    }

    BridgeMatrices { n, p, m, n_mat, n_blocked, row_permutation, row_index, h2_index, s2_index }
}

impl BridgeMatrices {
    /// The diagonal block of `n_blocked` for subtree edge count `i`
    /// (rows with `a + k = i`, columns with first index `i`).
    pub fn n_block(&self, i: usize) -> RationalMatrix {
        let rows: Vec<usize> = (0..self.row_index.len())
            .filter(|&r2| {
                let (a, k) = self.row_index[self.row_permutation[r2]];
                (a + k) as usize == i
            })
            .collect();
        let cols: Vec<usize> = self
            .s2_index
            .iter()
            .enumerate()
            .filter(|&(_, &(ii, _))| ii as usize == i)
            .map(|(c, _)| c)
            .collect();
        let mut block = RationalMatrix::zeros(rows.len(), cols.len());
        for (bi, &r) in rows.iter().enumerate() {
            for (bj, &c) in cols.iter().enumerate() {
                block[(bi, bj)] = self.n_blocked[(r, c)];
            }
        }
        block
    }
}

fn fracs(v: &[i64]) -> Vec<Fraction> {
    v.iter().map(|&x| Fraction::from_int(x)).collect()
}

fn ints(v: &[Fraction]) -> Result<Vec<i64>, TransformError> {
    v.iter().map(|f| f.as_integer().ok_or(TransformError::NonInteger)).collect()
}

fn nonneg(v: &[i64]) -> Result<(), TransformError> {
    if v.iter().any(|&x| x < 0) {
        Err(TransformError::Negative)
    } else {
        Ok(())
    }
}

fn h_vectors(hdp: &SparsePoly, n: usize) -> Result<(Vec<i64>, Vec<i64>), TransformError> {
    assert_eq!(hdp.vars().len(), 2, "half degree polynomial has two variables");
    let h2_index = h2_positions(n);
    let mut h1 = vec![0i64; n];
    let mut h2 = vec![0i64; h2_index.len()];
    for (exps, c) in hdp.iter() {
        let (b, a) = (exps[0] as usize, exps[1] as usize);
        if a == 0 {
            if b >= n {
                return Err(TransformError::BadSupport(format!("y^{b}"), n));
            }
            h1[b] = c;
        } else if n >= 2 && a == n - 1 && b == 0 {
            // forced full-tree term, value checked below
        } else if b >= 1 && a + b <= n - 1 {
            let pos = h2_index.iter().position(|&x| x == (a as u32, b as u32)).unwrap();
            h2[pos] = c;
        } else {
            return Err(TransformError::BadSupport(format!("y^{b}*z^{a}"), n));
        }
    }
    if n >= 2 {
        let forced = hdp.coefficient(&[0, (n - 1) as u16]);
        if forced != 1 {
            return Err(TransformError::BadForced {
                what: format!("z^{}", n - 1),
                want: 1,
                found: forced,
            });
        }
    }
    Ok((h1, h2))
}

fn s_vectors(stp: &SparsePoly, n: usize) -> Result<(Vec<i64>, Vec<i64>), TransformError> {
    assert_eq!(stp.vars().len(), 2, "subtree polynomial has two variables");
    let s2_index = s2_positions(n);
    let mut s2 = vec![0i64; s2_index.len()];
    for (exps, c) in stp.iter() {
        let (i, j) = (exps[0] as usize, exps[1] as usize);
        if (i, j) == (0, 0) || (n >= 2 && (i, j) == (1, 1)) {
            // forced counts, values checked below
        } else if 2 <= j && j <= i && i <= n - 1 {
            let pos = s2_index.iter().position(|&x| x == (i as u32, j as u32)).unwrap();
            s2[pos] = c;
        } else {
            return Err(TransformError::BadSupport(format!("q^{i}*r^{j}"), n));
        }
    }
    let constant = stp.coefficient(&[0, 0]);
    if constant != n as i64 {
        return Err(TransformError::BadForced { what: "1".into(), want: n as i64, found: constant });
    }
    if n >= 2 {
        let edges = stp.coefficient(&[1, 1]);
        if edges != (n - 1) as i64 {
            return Err(TransformError::BadForced {
                what: "q*r".into(),
                want: (n - 1) as i64,
                found: edges,
            });
        }
    }
    let mut s1 = vec![0i64; n];
    for k in 0..n {
        s1[k] = stp.coefficient(&[k as u16, k as u16]);
    }
    Ok((s1, s2))
}

/// Reads both coefficient vectors off directly computed polynomials.
pub fn extract_vectors(
    hdp: &SparsePoly,
    stp: &SparsePoly,
    n: usize,
) -> Result<BridgeVectors, TransformError> {
    let (h1, h2) = h_vectors(hdp, n)?;
    let (s1, s2) = s_vectors(stp, n)?;
    Ok(BridgeVectors { n, h1, h2, s1, s2 })
}

/// Converts a half degree polynomial to the subtree polynomial of the
/// same tree by `s1 = p * h1` and solving `n_mat * s2 = m * h2`.
/// Integrality and nonnegativity of the solution are enforced, as is
/// agreement of the star counts computed by both routes.
pub fn subtree_poly_from_half_degree(
    hdp: &SparsePoly,
    n: usize,
) -> Result<SparsePoly, TransformError> {
    let (h1, h2) = h_vectors(hdp, n)?;
    let mats = build_matrices(n);
    let s1 = ints(&mats.p.mul_vec(&fracs(&h1)))?;
    let rhs = mats.m.mul_vec(&fracs(&h2));
    let s2 = ints(&mats.n_mat.solve(&rhs)?)?;
    nonneg(&s1)?;
    nonneg(&s2)?;
    for (pos, &(i, j)) in mats.s2_index.iter().enumerate() {
        if i == j && s2[pos] != s1[i as usize] {
            return Err(TransformError::Inconsistent);
        }
    }
    let mut poly = SparsePoly::zero(&["q", "r"]);
    poly.add_term(&[0, 0], s1[0]);
    if n >= 2 {
        poly.add_term(&[1, 1], s1[1]);
    }
    for (pos, &(i, j)) in mats.s2_index.iter().enumerate() {
        poly.add_term(&[i as u16, j as u16], s2[pos]);
    }
    Ok(poly)
}

/// Converts a subtree polynomial to the half degree polynomial of the
/// same tree by solving `p * h1 = s1` and `m * h2 = n_mat * s2`.
pub fn half_degree_from_subtree_poly(
    stp: &SparsePoly,
    n: usize,
) -> Result<SparsePoly, TransformError> {
    let (s1, s2) = s_vectors(stp, n)?;
    let mats = build_matrices(n);
    let h1 = ints(&mats.p.solve(&fracs(&s1))?)?;
    let rhs = mats.n_mat.mul_vec(&fracs(&s2));
    let h2 = ints(&mats.m.solve(&rhs)?)?;
    nonneg(&h1)?;
    nonneg(&h2)?;
    let mut poly = SparsePoly::zero(&["y", "z"]);
    for (b, &c) in h1.iter().enumerate() {
        poly.add_term(&[b as u16, 0], c);
    }
    if n >= 2 {
        poly.add_term(&[0, (n - 1) as u16], 1);
    }
    for (pos, &(a, b)) in mats.h2_index.iter().enumerate() {
        poly.add_term(&[b as u16, a as u16], h2[pos]);
    }
    Ok(poly)
}

/// Outcome of checking the bridge identities and both conversion
/// directions on one tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BridgeReport {
    pub n: usize,
    /// `p * h1 == s1`.
    pub star_identity: bool,
    /// `m * h2 == n_mat * s2`.
    pub block_identity: bool,
    /// converting the half degree polynomial reproduces the subtree
    /// polynomial computed directly
    pub stp_roundtrip: bool,
    /// and vice versa
    pub hdp_roundtrip: bool,
}

impl BridgeReport {
    pub fn passed(&self) -> bool {
        self.star_identity && self.block_identity && self.stp_roundtrip && self.hdp_roundtrip
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "star_identity": self.star_identity,
            "block_identity": self.block_identity,
            "stp_roundtrip": self.stp_roundtrip,
            "hdp_roundtrip": self.hdp_roundtrip,
            "passed": self.passed(),
        })
    }
}

/// Checks `p * h1 = s1`, `m * h2 = n_mat * s2`, and both conversion
/// round-trips on one tree's directly computed polynomials.
pub fn verify_bridge(tree: &Tree) -> BridgeReport {
    let n = tree.n();
    let hdp = half_degree_poly(tree);
    let stp = subtree_poly(tree);
    let v = extract_vectors(&hdp, &stp, n).expect("directly computed polynomials have legal support");
    let mats = build_matrices(n);
    let star_identity = mats.p.mul_vec(&fracs(&v.h1)) == fracs(&v.s1);
    let block_identity = mats.m.mul_vec(&fracs(&v.h2)) == mats.n_mat.mul_vec(&fracs(&v.s2));
    let stp_roundtrip =
        subtree_poly_from_half_degree(&hdp, n).map(|p| p == stp).unwrap_or(false);
    let hdp_roundtrip =
        half_degree_from_subtree_poly(&stp, n).map(|p| p == hdp).unwrap_or(false);
    BridgeReport { n, star_identity, block_identity, stp_roundtrip, hdp_roundtrip }
}

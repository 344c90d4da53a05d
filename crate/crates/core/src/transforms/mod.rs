//! Linear maps between invariants: the coefficient-level map from the
//! power-sum chromatic coefficients to the degree polynomial, the degree
//! sequence read off the same coefficients, and the binomial bridge
//! between the half degree polynomial and the subtree polynomial.

mod bridge;

pub use bridge::{
    build_matrices, extract_vectors, half_degree_from_subtree_poly, subtree_poly_from_half_degree,
    verify_bridge, BridgeMatrices, BridgeReport, BridgeVectors, TransformError,
};

use crate::algebra::{binom, multiset_binomial, partitions_of, Partition, SparsePoly};
use crate::invariants::PsumCsf;

/// The universal coefficient taking power-sum chromatic coefficients to
/// degree polynomial coefficients:
///
/// `omega(lambda, a, b, c) = (-1)^(n-b-1) * sum over mu of a of
/// C(a - len(mu), c) * prod_i C(m_i(lambda), m_i(mu)) *
/// C(n - len(lambda) + len(mu) - a, n - b - c - 1)`
///
/// where `n = |lambda|` and binomials with out-of-range arguments vanish.
pub fn omega(lambda: &Partition, a: u32, b: u32, c: u32) -> i64 {
    let n = lambda.sum() as i64;
    let (a, b, c) = (a as i64, b as i64, c as i64);
    let mut sum = 0i64;
    for mu in partitions_of(a as u32) {
        let first = binom(a - mu.len() as i64, c);
        if first == 0 {
            continue;
        }
        let mid = multiset_binomial(lambda, &mu);
        if mid == 0 {
            continue;
        }
        let last = binom(n - lambda.len() as i64 + mu.len() as i64 - a, n - b - c - 1);
        sum = sum
            .checked_add(
                first.checked_mul(mid).and_then(|x| x.checked_mul(last)).expect("omega overflow"),
            )
            .expect("omega overflow");
    }
    if (n - b - 1).rem_euclid(2) == 0 {
        sum
    } else {
        -sum
    }
}

/// Rebuilds the degree polynomial from power-sum chromatic coefficients:
/// the coefficient of `x^a y^b z^c` is `sum over lambda of
/// c_lambda * omega(lambda, a, b, c)`.
pub fn degree_poly_from_powersum(csf: &PsumCsf) -> SparsePoly {
    let n = csf
        .iter()
        .next()
        .map(|(lambda, _)| lambda.sum() as usize)
        .expect("coefficients of a nonempty tree");
    let mut poly = SparsePoly::zero(&["x", "y", "z"]);
    for a in 0..=n {
        for b in 0..n {
            for c in 0..n {
                let mut coeff = 0i64;
                for (lambda, cl) in csf.iter() {
                    coeff += cl
                        .checked_mul(omega(lambda, a as u32, b as u32, c as u32))
                        .expect("coefficient overflow");
                }
                poly.add_term(&[a as u16, b as u16, c as u16], coeff);
            }
        }
    }
    poly
}

/// Number of vertices of each degree `b = 0..n`, read off the power-sum
/// chromatic coefficients: the count for degree `b` is `sum over lambda of
/// c_lambda * (-1)^(n-b-1) * m_1(lambda) * C(n - len(lambda), n - b - 1)`.
pub fn degree_counts_from_powersum(csf: &PsumCsf) -> Vec<i64> {
    let n = csf
        .iter()
        .next()
        .map(|(lambda, _)| lambda.sum() as i64)
        .expect("coefficients of a nonempty tree");
    (0..n)
        .map(|b| {
            let mut count = 0i64;
            for (lambda, cl) in csf.iter() {
                let term = cl
                    * lambda.multiplicity(1) as i64
                    * binom(n - lambda.len() as i64, n - b - 1);
                count += if (n - b - 1).rem_euclid(2) == 0 { term } else { -term };
            }
            count
        })
        .collect()
}

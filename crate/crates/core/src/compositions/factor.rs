//! Irreducible factorization of compositions under `∘`, and the
//! switching classes built on it.
//!
//! A factorization `α = α₁∘α₂∘…∘α_k` is *nontrivial* when (i) no factor
//! is `(1)`, (ii) no two consecutive factors both have length 1, and
//! (iii) no two consecutive factors both have all parts equal to 1.
//! Conditions (ii) and (iii) quotient out the two degenerate relations
//! `(a)∘(b) = (ab)` and `1^a∘1^b = 1^{ab}`; with them, every composition
//! factors uniquely into irreducibles. The factorization is found by
//! brute-force search over binary splits `α = γ∘β` (the right factor is
//! pinned down by the first parts of `α`), recursing on both sides and
//! asserting that exactly one full chain survives.

use std::collections::{BTreeSet, HashMap};

use crate::algebra::Composition;
use crate::compositions::ops::{compose, reverse};

/// The unique irreducible factorization of a composition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Composition>,
}

impl Factorization {
    /// Recomposes the factors; always equal to the factored input.
    pub fn recompose(&self) -> Composition {
        compose_chain(&self.factors)
    }
}

fn compose_chain(factors: &[Composition]) -> Composition {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = compose(&acc, f);
    }
    acc
}

fn all_ones(c: &Composition) -> bool {
    c.parts().iter().all(|&p| p == 1)
}

fn adjacent_ok(left: &Composition, right: &Composition) -> bool {
    !(left.len() == 1 && right.len() == 1) && !(all_ones(left) && all_ones(right))
}

/// `β^{⊙(g+1)}` parts from `β^{⊙g}` parts, in place.
fn extend_power(block: &mut Vec<u32>, beta: &[u32]) {
    *block.last_mut().unwrap() += beta[0];
    block.extend_from_slice(&beta[1..]);
}

/// All γ with `parts = γ∘β`, as part lists.
fn parse_as_powers(parts: &[u32], beta: &[u32]) -> Vec<Vec<u32>> {
    fn recurse(parts: &[u32], beta: &[u32], pos: usize, out: &mut Vec<Vec<u32>>, prefix: &mut Vec<u32>) {
        if pos == parts.len() {
            out.push(prefix.clone());
            return;
        }
        let mut block = beta.to_vec();
        let mut g = 1u32;
        loop {
            if pos + block.len() > parts.len() {
                break;
            }
            if parts[pos..pos + block.len()] == block[..] {
                prefix.push(g);
                recurse(parts, beta, pos + block.len(), out, prefix);
                prefix.pop();
            }
            extend_power(&mut block, beta);
            g += 1;
        }
    }
    let mut out = Vec::new();
    recurse(parts, beta, 0, &mut out, &mut Vec::new());
    out
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n % d == 0).collect()
}

/// All equalities `α = γ∘β` with `γ ≠ (1)` and `β ≠ (1)`.
fn binary_splits(alpha: &Composition) -> Vec<(Composition, Composition)> {
    let parts = alpha.parts();
    let len = parts.len();
    let mut out = BTreeSet::new();

    // single-part right factor: each part of alpha must be divisible
    if len >= 2 {
        let g = parts.iter().copied().fold(0, gcd);
        for b in divisors(g) {
            if b >= 2 {
                let gamma = Composition::new(parts.iter().map(|&p| p / b).collect());
                out.insert((gamma, Composition::new(vec![b])));
            }
        }
    }

    // multi-part right factor of length q: its first q-1 parts must be
    // the first q-1 parts of alpha, and the last part is either alpha's
    // q-th part (first block a plain copy) or that minus the first part
    // (first block a proper power, whose q-th entry is b_q + b_1)
    for q in 2..=len {
        let mut candidates: Vec<Vec<u32>> = Vec::new();
        if q < len {
            candidates.push(parts[..q].to_vec());
        }
        if parts[q - 1] > parts[0] {
            let mut c = parts[..q].to_vec();
            c[q - 1] -= parts[0];
            candidates.push(c);
        }
        for beta_parts in candidates {
            let beta = Composition::new(beta_parts);
            for gamma_parts in parse_as_powers(parts, beta.parts()) {
                let gamma = Composition::new(gamma_parts);
                if gamma.parts() != [1] {
                    out.insert((gamma, beta.clone()));
                }
            }
        }
    }
    out.into_iter().collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

/// All chains of irreducible factors that compose to `alpha` and satisfy
/// the adjacency conditions. `{[alpha]}` exactly when `alpha` is
/// irreducible.
fn irreducible_chains(
    alpha: &Composition,
    memo: &mut HashMap<Composition, BTreeSet<Vec<Composition>>>,
) -> BTreeSet<Vec<Composition>> {
    if let Some(hit) = memo.get(alpha) {
        return hit.clone();
    }
    let mut found: BTreeSet<Vec<Composition>> = BTreeSet::new();
    for (gamma, beta) in binary_splits(alpha) {
        let left = irreducible_chains(&gamma, memo);
        let right = irreducible_chains(&beta, memo);
        for l in &left {
            for r in &right {
                if adjacent_ok(l.last().unwrap(), r.first().unwrap()) {
                    let mut chain = l.clone();
                    chain.extend(r.iter().cloned());
                    found.insert(chain);
                }
            }
        }
    }
    if found.is_empty() {
        found.insert(vec![alpha.clone()]);
    }
    memo.insert(alpha.clone(), found.clone());
    found
}

/// The unique irreducible factorization. The search collects every
/// maximal chain and panics if more than one survives, which would
/// contradict the uniqueness theorem the switching construction rests
/// on.
pub fn irreducible_factorization(alpha: &Composition) -> Factorization {
    let mut memo = HashMap::new();
    let chains = irreducible_chains(alpha, &mut memo);
    assert_eq!(
        chains.len(),
        1,
        "irreducible factorization of {alpha} is not unique: {chains:?}"
    );
    let factors = chains.into_iter().next().unwrap();
    debug_assert_eq!(compose_chain(&factors), *alpha);
    Factorization { factors }
}

/// All compositions obtained by independently reversing factors of the
/// irreducible factorization, deduplicated and sorted. Every member has
/// the same coarsening-sum invariant as `alpha`, hence the associated
/// capped caterpillars share half degree and subtree polynomials.
pub fn switching_class(alpha: &Composition) -> Vec<Composition> {
    let factors = irreducible_factorization(alpha).factors;
    let k = factors.len();
    let mut out = BTreeSet::new();
    for mask in 0u64..(1u64 << k) {
        let chosen: Vec<Composition> = factors
            .iter()
            .enumerate()
            .map(|(i, f)| if mask >> i & 1 == 1 { reverse(f) } else { f.clone() })
            .collect();
        out.insert(compose_chain(&chosen));
    }
    out.into_iter().collect()
}

/// The switching class with mirror images identified: one representative
/// (the lexicographically smaller of `β`, `β*`) per reversal pair. This
/// is the count that matches numbers of caterpillars, since a signature
/// and its reversal describe the same tree.
pub fn switching_class_up_to_reversal(alpha: &Composition) -> Vec<Composition> {
    let mut out = BTreeSet::new();
    for beta in switching_class(alpha) {
        let rev = reverse(&beta);
        out.insert(if rev < beta { rev } else { beta });
    }
    out.into_iter().collect()
}

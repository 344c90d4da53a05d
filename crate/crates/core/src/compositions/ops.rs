//! The three products on compositions.
//!
//! `concat` juxtaposes part lists. `near_concat` additionally merges the
//! two parts at the joint. `compose` is the substitution product
//! `α ∘ β = β^{⊙a₁} · β^{⊙a₂} ⋯ β^{⊙a_k}`, which has `(1)` as a two-sided
//! identity and distributes over both `·` and `⊙` on the left.

use crate::algebra::Composition;

/// `α*`: the parts in reverse order.
pub fn reverse(alpha: &Composition) -> Composition {
    let mut parts = alpha.parts().to_vec();
    parts.reverse();
    Composition::new(parts)
}

/// Concatenation `α·β`.
pub fn concat(alpha: &Composition, beta: &Composition) -> Composition {
    let mut parts = alpha.parts().to_vec();
    parts.extend_from_slice(beta.parts());
    Composition::new(parts)
}

/// Near-concatenation `α⊙β`: concatenate and merge the adjacent parts,
/// so `(a₁,…,a_k)⊙(b₁,…,b_m) = (a₁,…,a_{k−1}, a_k+b₁, b₂,…,b_m)`.
pub fn near_concat(alpha: &Composition, beta: &Composition) -> Composition {
    let mut parts = alpha.parts().to_vec();
    *parts.last_mut().unwrap() += beta.parts()[0];
    parts.extend_from_slice(&beta.parts()[1..]);
    Composition::new(parts)
}

/// `α^{⊙k}` for `k ≥ 1`.
pub fn near_concat_power(alpha: &Composition, k: u32) -> Composition {
    assert!(k >= 1, "near-concatenation power needs k >= 1");
    let mut acc = alpha.clone();
    for _ in 1..k {
        acc = near_concat(&acc, alpha);
    }
    acc
}

/// `α∘β = β^{⊙a₁} · β^{⊙a₂} ⋯ β^{⊙a_k}`.
pub fn compose(alpha: &Composition, beta: &Composition) -> Composition {
    let mut acc: Option<Composition> = None;
    for &a in alpha.parts() {
        let block = near_concat_power(beta, a);
        acc = Some(match acc {
            None => block,
            Some(prev) => concat(&prev, &block),
        });
    }
    acc.unwrap()
}

/// `1⊙α⊙1`: the signature of the caterpillar obtained by attaching a
/// pendant vertex to each end of the spine described by `α`.
pub fn padded(alpha: &Composition) -> Composition {
    let one = Composition::new(vec![1]);
    near_concat(&near_concat(&one, alpha), &one)
}

pub fn is_palindrome(alpha: &Composition) -> bool {
    *alpha == reverse(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn c(parts: &[u32]) -> Composition {
        Composition::new(parts.to_vec())
    }

    fn random_composition(rng: &mut ChaCha8Rng, max_len: usize, max_part: u32) -> Composition {
        let len = rng.gen_range(1..=max_len);
        Composition::new((0..len).map(|_| rng.gen_range(1..=max_part)).collect())
    }

    #[test]
    fn products_match_worked_examples() {
        assert_eq!(near_concat(&c(&[1, 2]), &c(&[1, 2])), c(&[1, 3, 2]));
        assert_eq!(compose(&c(&[1, 2]), &c(&[1, 2])), c(&[1, 2, 1, 3, 2]));
        assert_eq!(compose(&c(&[2, 1]), &c(&[1, 2])), c(&[1, 3, 2, 1, 2]));
        assert_eq!(near_concat_power(&c(&[1]), 4), c(&[4]));
        assert_eq!(padded(&c(&[3])), c(&[5]));
        assert_eq!(padded(&c(&[1, 2, 1])), c(&[2, 2, 2]));
    }

    #[test]
    fn unit_composition_is_a_two_sided_identity() {
        let one = c(&[1]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let alpha = random_composition(&mut rng, 6, 5);
            assert_eq!(compose(&one, &alpha), alpha);
            assert_eq!(compose(&alpha, &one), alpha);
        }
    }

    #[test]
    fn compose_distributes_and_commutes_with_reversal() {
        let mut rng = ChaCha8Rng::seed_from_u64(12);
        for _ in 0..500 {
            let alpha = random_composition(&mut rng, 4, 3);
            let beta = random_composition(&mut rng, 4, 3);
            let gamma = random_composition(&mut rng, 4, 3);
            assert_eq!(
                compose(&concat(&alpha, &gamma), &beta),
                concat(&compose(&alpha, &beta), &compose(&gamma, &beta))
            );
            assert_eq!(
                compose(&near_concat(&alpha, &gamma), &beta),
                near_concat(&compose(&alpha, &beta), &compose(&gamma, &beta))
            );
            assert_eq!(
                reverse(&compose(&alpha, &beta)),
                compose(&reverse(&alpha), &reverse(&beta))
            );
            assert_eq!(
                compose(&compose(&alpha, &beta), &gamma),
                compose(&alpha, &compose(&beta, &gamma))
            );
        }
    }

    #[test]
    fn sizes_multiply_under_compose() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..200 {
            let alpha = random_composition(&mut rng, 5, 4);
            let beta = random_composition(&mut rng, 5, 4);
            let c = compose(&alpha, &beta);
            assert_eq!(c.sum(), alpha.sum() * beta.sum());
            assert_eq!(
                c.len() as u32,
                alpha.sum() * (beta.len() as u32 - 1) + alpha.len() as u32
            );
        }
    }
}

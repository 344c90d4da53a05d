//! Constructions that turn composition identities into families of
//! non-isomorphic trees sharing the half degree polynomial.

use crate::algebra::Composition;
use crate::compositions::factor::switching_class;
use crate::compositions::CompositionError;
use crate::tree::{cat, PolarizedTree, Tree};

/// Builds the Eisenstat–Gordon caterpillar pair for a gap-free 0/1
/// polynomial `p` (coefficient list, constant term first) and positive
/// weights `a`, `b`: expand `(a+bx)·p(x)` and `(b+ax)·p(x)`, add 1 to
/// the first and last coefficients, and read the results as caterpillar
/// signatures. The two trees always share their subtree polynomial.
pub fn eisenstat_gordon(p: &[u32], a: u32, b: u32) -> Result<(Tree, Tree), CompositionError> {
    if a == 0 || b == 0 {
        return Err(CompositionError::BadWeight(a.min(b)));
    }
    if p.is_empty() || p.iter().any(|&c| c > 1) || p[0] != 1 || *p.last().unwrap() != 1 {
        return Err(CompositionError::NotGapFree(format!("{p:?}")));
    }
    if p.windows(2).any(|w| w == [0, 0]) {
        return Err(CompositionError::NotGapFree(format!("{p:?}")));
    }
    let conv = |lo: u32, hi: u32| -> Vec<u32> {
        let mut c = vec![0u32; p.len() + 1];
        for (i, &coeff) in p.iter().enumerate() {
            c[i] += lo * coeff;
            c[i + 1] += hi * coeff;
        }
        *c.first_mut().unwrap() += 1;
        *c.last_mut().unwrap() += 1;
        c
    };
    let first = cat(&Composition::new(conv(a, b))).expect("gap-free signatures are valid");
    let second = cat(&Composition::new(conv(b, a))).expect("gap-free signatures are valid");
    Ok((first, second))
}

/// `{ cap(β ∘ base) : β in the switching class of α }`, deduplicated up
/// to isomorphism and sorted by canonical code. Every member has
/// `|α|·|base| + 2` vertices and all members share the half degree
/// polynomial; `max_vertices` guards against accidentally huge families.
pub fn theorem7_family(
    alpha: &Composition,
    base: &PolarizedTree,
    max_vertices: usize,
) -> Result<Vec<Tree>, CompositionError> {
    let member_size = alpha.sum() as usize * base.n() + 2;
    if member_size > max_vertices {
        return Err(CompositionError::TooManyVertices { n: member_size, max: max_vertices });
    }
    let mut members: Vec<Tree> = switching_class(alpha)
        .iter()
        .map(|beta| PolarizedTree::compose(beta, base).cap())
        .collect();
    members.sort_by_key(|t| t.canonical_code());
    members.dedup_by_key(|t| t.canonical_code());
    Ok(members)
}

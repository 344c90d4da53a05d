//! Closed-form degree and half degree polynomials for caterpillars,
//! computed directly from the signature without building the tree.

use crate::algebra::{Composition, SparsePoly};
use crate::tree::TreeError;

fn validate(alpha: &Composition) -> Result<(), TreeError> {
    let parts = alpha.parts();
    let k = parts.len();
    let ok = if k == 1 { parts[0] >= 2 } else { parts[0] >= 2 && parts[k - 1] >= 2 };
    if ok {
        Ok(())
    } else {
        Err(TreeError::InvalidSignature(format!("{alpha:?}")))
    }
}

/// Degree polynomial of the caterpillar with signature `alpha`, by the
/// spine-subset expansion: each subset `U` of spine vertices contributes
/// `x^|U| y^d(U) z^e(U) (xz+y)^(excess in U) (xy+1)^(excess off U)`,
/// where d and e are the boundary and internal edge counts of `U` along
/// the spine path and the excess of spine vertex `u` is `a_u - 1`, its
/// number of pendant leaves.
pub fn degree_poly_cat(alpha: &Composition) -> Result<SparsePoly, TreeError> {
    validate(alpha)?;
    let parts = alpha.parts();
    let k = parts.len();
    let vars = ["x", "y", "z"];
    let total_excess: u32 = parts.iter().map(|&a| a - 1).sum();
    let mut xz_plus_y = SparsePoly::zero(&vars);
    xz_plus_y.add_term(&[1, 0, 1], 1);
    xz_plus_y.add_term(&[0, 1, 0], 1);
    let mut xy_plus_1 = SparsePoly::zero(&vars);
    xy_plus_1.add_term(&[1, 1, 0], 1);
    xy_plus_1.add_term(&[0, 0, 0], 1);
    let in_pows = power_table(&xz_plus_y, total_excess);
    let out_pows = power_table(&xy_plus_1, total_excess);

    let mut total = SparsePoly::zero(&vars);
    for u_set in 0u32..1 << k {
        let mut in_excess = 0u32;
        let mut spine_boundary = 0u16;
        let mut spine_inside = 0u16;
        for i in 0..k {
            if u_set & (1 << i) != 0 {
                in_excess += parts[i] - 1;
            }
            if i + 1 < k {
                let a = u_set & (1 << i) != 0;
                let b = u_set & (1 << (i + 1)) != 0;
                match (a, b) {
                    (true, true) => spine_inside += 1,
                    (true, false) | (false, true) => spine_boundary += 1,
                    (false, false) => {}
                }
            }
        }
        let term = in_pows[in_excess as usize]
            .mul(&out_pows[(total_excess - in_excess) as usize])
            .mul_monomial(&[u_set.count_ones() as u16, spine_boundary, spine_inside], 1);
        total = total.add(&term);
    }
    Ok(total)
}

/// Half degree polynomial of the caterpillar with signature `alpha`:
/// leaf singletons give `(n - k) y`, and every spine interval `[i, j]`
/// contributes `y^[i > 1] y^[j < k] z^(j - i) (z + y)^(excess of [i, j])`.
pub fn half_degree_poly_cat(alpha: &Composition) -> Result<SparsePoly, TreeError> {
    validate(alpha)?;
    let parts = alpha.parts();
    let k = parts.len();
    let n = alpha.sum();
    let vars = ["y", "z"];
    let y_plus_z = SparsePoly::var(&vars, 0).add(&SparsePoly::var(&vars, 1));
    let total_excess: u32 = parts.iter().map(|&a| a - 1).sum();
    let pows = power_table(&y_plus_z, total_excess);

    let mut total = SparsePoly::zero(&vars);
    total.add_term(&[1, 0], (n - k as u32) as i64);
    let mut prefix = vec![0u32; k + 1];
    for i in 0..k {
        prefix[i + 1] = prefix[i] + (parts[i] - 1);
    }
    for i in 1..=k {
        for j in i..=k {
            let excess = prefix[j] - prefix[i - 1];
            let yexp = u16::from(i > 1) + u16::from(j < k);
            total = total.add(&pows[excess as usize].mul_monomial(&[yexp, (j - i) as u16], 1));
        }
    }
    Ok(total)
}

fn power_table(base: &SparsePoly, up_to: u32) -> Vec<SparsePoly> {
    let mut pows = Vec::with_capacity(up_to as usize + 1);
    pows.push(SparsePoly::constant_owned(base.vars().to_vec(), 1));
    for i in 1..=up_to as usize {
        pows.push(pows[i - 1].mul(base));
    }
    pows
}

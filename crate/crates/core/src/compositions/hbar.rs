//! The coarsening-sum invariant H̄ of a composition and its identities.
//!
//! For a composition `α` of length `ℓ`,
//!
//! `H̄(α) = Σ_{γ ≥ α} y^{ℓ(γ)−1} z^{ℓ−ℓ(γ)} (x_{γ₁} + … + x_{γ_{ℓ(γ)}}) / (y+z)^{ℓ−1}`
//!
//! where `γ` ranges over coarsenings of `α`. We store the numerator (the
//! "cleared" form) plus the denominator exponent; all identities are
//! checked by cross-multiplying cleared forms, so no rational function
//! type is needed.
//!
//! The point of H̄ is that substituting `x_i → (y+z)^{i+1}` turns it into
//! the leaf-adjusted half degree polynomial of the caterpillar with
//! signature `1⊙α⊙1`, so identities proved for H̄ produce families of
//! distinct trees sharing the half degree (and hence subtree) polynomial.

use crate::algebra::{coarsenings, Composition, SparsePoly};
use crate::compositions::ops::{compose, concat, near_concat, near_concat_power};
use crate::compositions::CompositionError;

/// Coarsening enumeration is exponential in the length; this cap keeps
/// a single call under a few million terms.
pub const HBAR_MAX_LEN: usize = 20;

/// `H̄(α)` as `cleared / (y+z)^{denom_exp}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HbarPoly {
    /// Polynomial in `y, z, x1..xN`; `N` is fixed per call (parts of
    /// coarsenings never exceed the sum of the input).
    pub cleared: SparsePoly,
    pub denom_exp: u32,
}

impl HbarPoly {
    /// Equality of the represented rational values:
    /// `a/(y+z)^p = b/(y+z)^q` iff `a·(y+z)^q = b·(y+z)^p`.
    /// The `x` variable ranges are padded to a common universe first.
    pub fn value_eq(&self, other: &HbarPoly) -> bool {
        let na = self.cleared.vars().len() - 2;
        let nb = other.cleared.vars().len() - 2;
        let n = na.max(nb);
        let a = pad_universe(&self.cleared, n);
        let b = pad_universe(&other.cleared, n);
        let yz = yz_poly(n);
        a.mul(&yz.pow(other.denom_exp)) == b.mul(&yz.pow(self.denom_exp))
    }
}

/// `["y", "z", "x1", ..., "xN"]`; the slot of `x_m` is `m + 1`.
fn universe(max_part: usize) -> Vec<String> {
    let mut vars = vec!["y".to_string(), "z".to_string()];
    for m in 1..=max_part {
        vars.push(format!("x{m}"));
    }
    vars
}

fn yz_poly(max_part: usize) -> SparsePoly {
    let vars = universe(max_part);
    let mut p = SparsePoly::zero_owned(vars.clone());
    let mut e = vec![0u16; vars.len()];
    e[0] = 1;
    p.add_term(&e, 1);
    e[0] = 0;
    e[1] = 1;
    p.add_term(&e, 1);
    p
}

fn pad_universe(poly: &SparsePoly, max_part: usize) -> SparsePoly {
    let old = poly.vars().len();
    let new_vars = universe(max_part);
    assert!(new_vars.len() >= old);
    let slot_map: Vec<usize> = (0..old).collect();
    poly.remap_vars(new_vars, &slot_map)
}

fn check_len(alpha: &Composition) -> Result<(), CompositionError> {
    if alpha.len() > HBAR_MAX_LEN {
        Err(CompositionError::TooLong { len: alpha.len(), max: HBAR_MAX_LEN })
    } else {
        Ok(())
    }
}

/// The cleared form over a caller-chosen variable universe, so that
/// polynomials built from different compositions can be combined.
pub(crate) fn hbar_in(alpha: &Composition, max_part: usize) -> HbarPoly {
    assert!(alpha.sum() as usize <= max_part);
    let vars = universe(max_part);
    let len = alpha.len() as u16;
    let mut cleared = SparsePoly::zero_owned(vars.clone());
    for gamma in coarsenings(alpha) {
        let lg = gamma.len() as u16;
        for &part in gamma.parts() {
            let mut e = vec![0u16; vars.len()];
            e[0] = lg - 1;
            e[1] = len - lg;
            e[1 + part as usize] = 1;
            cleared.add_term(&e, 1);
        }
    }
    HbarPoly { cleared, denom_exp: alpha.len() as u32 - 1 }
}

/// `H̄(α)` with the variable universe `x1..x_{|α|}`.
pub fn hbar(alpha: &Composition) -> Result<HbarPoly, CompositionError> {
    check_len(alpha)?;
    Ok(hbar_in(alpha, alpha.sum() as usize))
}

/// Substitutes `x_i → (y+z)^{i+1}` and divides by `(y+z)^{ℓ(α)−1}`,
/// producing the leaf-adjusted half degree polynomial of the caterpillar
/// with signature `1⊙α⊙1` (a two-variable polynomial in `y, z`).
pub fn hbar_specialize(alpha: &Composition) -> Result<SparsePoly, CompositionError> {
    let hb = hbar(alpha)?;
    let max_part = hb.cleared.vars().len() - 2;
    let yz = yz_poly(max_part);
    let mut poly = hb.cleared;
    for m in 1..=max_part {
        poly = poly.substitute(1 + m, &yz.pow(m as u32 + 1));
    }
    let two_var = poly.project(&[0, 1]).expect("all x variables were substituted away");
    let den = {
        let mut d = SparsePoly::zero(&["y", "z"]);
        d.add_term(&[1, 0], 1);
        d.add_term(&[0, 1], 1);
        d.pow(hb.denom_exp)
    };
    Ok(two_var.div_exact(&den).expect("cleared form is divisible by (y+z)^(len-1)"))
}

/// Checks the concatenation recurrence in cleared form:
///
/// `(y+z)·C(α·β) = y·[C(α)(y+z)^{ℓ(β)} + C(β)(y+z)^{ℓ(α)}] + z(y+z)·C(α⊙β)`
///
/// which is `(y+z)H̄(α·β) = y(H̄(α)+H̄(β)) + zH̄(α⊙β)` after dividing by
/// `(y+z)^{ℓ(α)+ℓ(β)−1}`.
pub fn hbar_recurrence_check(
    alpha: &Composition,
    beta: &Composition,
) -> Result<bool, CompositionError> {
    let cat = concat(alpha, beta);
    check_len(&cat)?;
    let max_part = cat.sum() as usize;
    let c_cat = hbar_in(&cat, max_part).cleared;
    let c_a = hbar_in(alpha, max_part).cleared;
    let c_b = hbar_in(beta, max_part).cleared;
    let c_odot = hbar_in(&near_concat(alpha, beta), max_part).cleared;
    let yz = yz_poly(max_part);
    let vars = universe(max_part);
    let y = SparsePoly::var(&vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(), 0);
    let z = SparsePoly::var(&vars.iter().map(|s| s.as_str()).collect::<Vec<_>>(), 1);
    let lhs = yz.mul(&c_cat);
    let rhs = y
        .mul(&c_a.mul(&yz.pow(beta.len() as u32)).add(&c_b.mul(&yz.pow(alpha.len() as u32))))
        .add(&z.mul(&yz).mul(&c_odot));
    Ok(lhs == rhs)
}

/// Checks the binomial collapse of the coarsening weights:
/// `Σ_{γ ≥ α} y^{ℓ(γ)−1} z^{ℓ(α)−ℓ(γ)} = (y+z)^{ℓ(α)−1}`.
pub fn coarsening_sum_is_binomial(alpha: &Composition) -> bool {
    let mut sum = SparsePoly::zero(&["y", "z"]);
    let len = alpha.len() as u16;
    for gamma in coarsenings(alpha) {
        let lg = gamma.len() as u16;
        sum.add_term(&[lg - 1, len - lg], 1);
    }
    let mut yz = SparsePoly::zero(&["y", "z"]);
    yz.add_term(&[1, 0], 1);
    yz.add_term(&[0, 1], 1);
    sum == yz.pow(alpha.len() as u32 - 1)
}

/// Checks the substitution rule in cleared form: replacing each monomial
/// `c·y^p z^q x_i` of `C(α)` by `c·y^p z^q · C(β^{⊙i}) · (y+z)^{(|α|−i)(ℓ(β)−1)}`
/// reproduces `C(α∘β)`.
pub fn composition_rule_check(
    alpha: &Composition,
    beta: &Composition,
) -> Result<bool, CompositionError> {
    let composed = compose(alpha, beta);
    check_len(&composed)?;
    let max_part = composed.sum() as usize;
    let lhs = hbar_in(&composed, max_part).cleared;
    let base = hbar(alpha)?.cleared;
    let yz = yz_poly(max_part);
    let width = universe(max_part).len();
    let mut rhs = SparsePoly::zero_owned(universe(max_part));
    for (exps, c) in base.iter() {
        let i = exps[2..]
            .iter()
            .position(|&e| e == 1)
            .map(|s| s + 1)
            .expect("cleared form is linear in the x variables");
        let spread = (alpha.sum() - i as u32) * (beta.len() as u32 - 1);
        let block = hbar_in(&near_concat_power(beta, i as u32), max_part).cleared;
        let mut mono = vec![0u16; width];
        mono[0] = exps[0];
        mono[1] = exps[1];
        rhs = rhs.add(&block.mul(&yz.pow(spread)).mul_monomial(&mono, c));
    }
    Ok(lhs == rhs)
}

/// The part-multiset generating function `L(α) = Σ_{γ ≥ α} Π_i x_{γᵢ}`
/// over variables `x1..x_{|α|}`.
pub fn lpoly(alpha: &Composition) -> Result<SparsePoly, CompositionError> {
    check_len(alpha)?;
    let n = alpha.sum() as usize;
    let vars: Vec<String> = (1..=n).map(|m| format!("x{m}")).collect();
    let mut out = SparsePoly::zero_owned(vars.clone());
    for gamma in coarsenings(alpha) {
        let mut e = vec![0u16; vars.len()];
        for &part in gamma.parts() {
            e[part as usize - 1] += 1;
        }
        out.add_term(&e, 1);
    }
    Ok(out)
}

/// Rebuilds `H̄` from the part-multiset generating function. Each
/// monomial of `L` fixes the multiset of parts of one or more
/// coarsenings `γ`, which is all `H̄` depends on: the total degree is
/// `ℓ(γ)`, the length of the original composition is the maximum total
/// degree (attained by the finest coarsening, `α` itself).
pub fn hbar_from_lpoly(l: &SparsePoly) -> HbarPoly {
    let len = l
        .iter()
        .map(|(exps, _)| exps.iter().map(|&e| e as u32).sum::<u32>())
        .max()
        .expect("L-polynomial of a composition is nonzero");
    let max_part = l.vars().len();
    let vars = universe(max_part);
    let mut cleared = SparsePoly::zero_owned(vars.clone());
    for (exps, c) in l.iter() {
        let lg: u32 = exps.iter().map(|&e| e as u32).sum();
        for (idx, &mult) in exps.iter().enumerate() {
            if mult == 0 {
                continue;
            }
            let mut e = vec![0u16; vars.len()];
            e[0] = (lg - 1) as u16;
            e[1] = (len - lg) as u16;
            e[1 + (idx + 1)] = 1;
            cleared.add_term(&e, c * mult as i64);
        }
    }
    HbarPoly { cleared, denom_exp: len - 1 }
}

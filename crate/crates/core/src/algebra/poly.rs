//! Sparse multivariate polynomials with exact 64-bit coefficients.
//!
//! A [`SparsePoly`] has a fixed, named variable list; terms are stored in a
//! `BTreeMap` keyed by exponent vectors, so iteration (and therefore text
//! and JSON serialization) is lexicographic and canonical: two polynomials
//! are equal iff their serialized forms are byte-identical.
//!
//! Coefficient arithmetic is checked. Overflowing 64 bits is a hard error
//! (panic), never a silent wrap.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::AlgebraError;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u16>, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow (i64) in polynomial addition")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow (i64) in polynomial multiplication")
}

impl SparsePoly {
    pub fn zero(vars: &[&str]) -> Self {
        SparsePoly { vars: vars.iter().map(|s| s.to_string()).collect(), terms: BTreeMap::new() }
    }

    pub fn zero_owned(vars: Vec<String>) -> Self {
        SparsePoly { vars, terms: BTreeMap::new() }
    }

    pub fn constant(vars: &[&str], c: i64) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(&vec![0; p.vars.len()], c);
        p
    }

    /// Single variable `slot` with exponent 1.
    pub fn var(vars: &[&str], slot: usize) -> Self {
        Self::monomial(vars, &unit_exps(vars.len(), slot), 1)
    }

    pub fn monomial(vars: &[&str], exps: &[u16], coeff: i64) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(exps, coeff);
        p
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Iterates `(exponent vector, coefficient)` in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (&[u16], i64)> {
        self.terms.iter().map(|(e, &c)| (e.as_slice(), c))
    }

    pub fn coefficient(&self, exps: &[u16]) -> i64 {
        assert_eq!(exps.len(), self.vars.len(), "exponent arity mismatch");
        self.terms.get(exps).copied().unwrap_or(0)
    }

    /// Adds `coeff * x^exps` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exps: &[u16], coeff: i64) {
        assert_eq!(exps.len(), self.vars.len(), "exponent arity mismatch");
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exps.to_vec()).or_insert(0);
        *entry = checked_add(*entry, coeff);
        if *entry == 0 {
            self.terms.remove(exps);
        }
    }

    fn assert_same_vars(&self, other: &SparsePoly) {
        assert_eq!(self.vars, other.vars, "polynomial variable sets differ");
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(other);
        let mut out = self.clone();
        for (e, c) in other.iter() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SparsePoly {
        let mut out = SparsePoly::zero_owned(self.vars.clone());
        for (e, c) in self.iter() {
            out.add_term(e, c.checked_neg().expect("coefficient overflow negating i64::MIN"));
        }
        out
    }

    pub fn scale(&self, k: i64) -> SparsePoly {
        let mut out = SparsePoly::zero_owned(self.vars.clone());
        for (e, c) in self.iter() {
            out.add_term(e, checked_mul(c, k));
        }
        out
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(other);
        let mut out = SparsePoly::zero_owned(self.vars.clone());
        let mut exps = vec![0u16; self.vars.len()];
        for (ea, ca) in self.iter() {
            for (eb, cb) in other.iter() {
                for i in 0..exps.len() {
                    exps[i] = ea[i].checked_add(eb[i]).expect("exponent overflow (u16)");
                }
                out.add_term(&exps, checked_mul(ca, cb));
            }
        }
        out
    }

    /// Multiplies by a single monomial without building a second polynomial.
    pub fn mul_monomial(&self, exps: &[u16], coeff: i64) -> SparsePoly {
        assert_eq!(exps.len(), self.vars.len());
        let mut out = SparsePoly::zero_owned(self.vars.clone());
        let mut e = vec![0u16; exps.len()];
        for (ea, ca) in self.iter() {
            for i in 0..e.len() {
                e[i] = ea[i].checked_add(exps[i]).expect("exponent overflow (u16)");
            }
            out.add_term(&e, checked_mul(ca, coeff));
        }
        out
    }

    pub fn pow(&self, k: u32) -> SparsePoly {
        let mut out = SparsePoly::constant_owned(self.vars.clone(), 1);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn constant_owned(vars: Vec<String>, c: i64) -> SparsePoly {
        let n = vars.len();
        let mut p = SparsePoly::zero_owned(vars);
        p.add_term(&vec![0; n], c);
        p
    }

    /// Exact evaluation at an integer point.
    pub fn eval_i64(&self, point: &[i64]) -> i64 {
        assert_eq!(point.len(), self.vars.len());
        let mut acc: i64 = 0;
        for (e, c) in self.iter() {
            let mut term = c;
            for (i, &exp) in e.iter().enumerate() {
                for _ in 0..exp {
                    term = checked_mul(term, point[i]);
                }
            }
            acc = checked_add(acc, term);
        }
        acc
    }

    /// Substitutes `replacement` (over the same variable set) for the
    /// variable in `slot`.
    pub fn substitute(&self, slot: usize, replacement: &SparsePoly) -> SparsePoly {
        self.assert_same_vars(replacement);
        assert!(slot < self.vars.len());
        let max_exp = self.iter().map(|(e, _)| e[slot]).max().unwrap_or(0);
        // powers[k] = replacement^k
        let mut powers = Vec::with_capacity(max_exp as usize + 1);
        powers.push(SparsePoly::constant_owned(self.vars.clone(), 1));
        for k in 1..=max_exp as usize {
            powers.push(powers[k - 1].mul(replacement));
        }
        let mut out = SparsePoly::zero_owned(self.vars.clone());
        for (e, c) in self.iter() {
            let mut base = e.to_vec();
            let k = base[slot];
            base[slot] = 0;
            out = out.add(&powers[k as usize].mul_monomial(&base, c));
        }
        out
    }

    /// Keeps only the listed slots, in the given order. Errors if a dropped
    /// slot carries a nonzero exponent anywhere.
    pub fn project(&self, keep: &[usize]) -> Result<SparsePoly, AlgebraError> {
        let vars = keep.iter().map(|&i| self.vars[i].clone()).collect();
        let mut out = SparsePoly::zero_owned(vars);
        let kept: std::collections::BTreeSet<usize> = keep.iter().copied().collect();
        for (e, c) in self.iter() {
            for (i, &exp) in e.iter().enumerate() {
                if exp != 0 && !kept.contains(&i) {
                    return Err(AlgebraError::ResidualVariable(self.vars[i].clone()));
                }
            }
            let proj: Vec<u16> = keep.iter().map(|&i| e[i]).collect();
            out.add_term(&proj, c);
        }
        Ok(out)
    }

    /// Re-expresses the polynomial over a wider variable list; `slot_map[i]`
    /// is the new slot of old variable `i`.
    pub fn remap_vars(&self, new_vars: Vec<String>, slot_map: &[usize]) -> SparsePoly {
        assert_eq!(slot_map.len(), self.vars.len());
        let mut out = SparsePoly::zero_owned(new_vars);
        let arity = out.vars.len();
        for (e, c) in self.iter() {
            let mut exps = vec![0u16; arity];
            for (i, &exp) in e.iter().enumerate() {
                exps[slot_map[i]] = exp;
            }
            out.add_term(&exps, c);
        }
        out
    }

    /// Exact division: returns `q` with `self = q * divisor`, or
    /// `NotDivisible` if no such polynomial exists.
    pub fn div_exact(&self, divisor: &SparsePoly) -> Result<SparsePoly, AlgebraError> {
        self.assert_same_vars(divisor);
        let (dlead, dcoeff) = match divisor.terms.iter().next_back() {
            Some((e, &c)) => (e.clone(), c),
            None => panic!("division by the zero polynomial"),
        };
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero_owned(self.vars.clone());
        while let Some((rlead, &rcoeff)) = rem.terms.iter().next_back() {
            let mut qexp = vec![0u16; rlead.len()];
            for i in 0..rlead.len() {
                if rlead[i] < dlead[i] {
                    return Err(AlgebraError::NotDivisible);
                }
                qexp[i] = rlead[i] - dlead[i];
            }
            if rcoeff % dcoeff != 0 {
                return Err(AlgebraError::NotDivisible);
            }
            let qc = rcoeff / dcoeff;
            quot.add_term(&qexp, qc);
            rem = rem.sub(&divisor.mul_monomial(&qexp, qc));
        }
        Ok(quot)
    }

    /// Canonical text form: terms in lexicographic exponent order, explicit
    /// coefficients, `*` separators, `^` powers. Example: `4 + 3*q*r + 1*q^3*r^2`.
    pub fn to_text(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (idx, (e, c)) in self.iter().enumerate() {
            if idx == 0 {
                if c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if c < 0 { " - " } else { " + " });
            }
            out.push_str(&format_term(&self.vars, e, c.unsigned_abs()));
        }
        out
    }

    /// JSON value: `{"vars": [...], "terms": [{"coeff": c, "exponents": [...]}, ...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term<'a> {
            coeff: i64,
            exponents: &'a [u16],
        }
        let terms: Vec<serde_json::Value> = self
            .iter()
            .map(|(e, c)| serde_json::to_value(Term { coeff: c, exponents: e }).unwrap())
            .collect();
        serde_json::json!({ "vars": self.vars, "terms": terms })
    }
}

fn unit_exps(arity: usize, slot: usize) -> Vec<u16> {
    let mut e = vec![0u16; arity];
    e[slot] = 1;
    e
}

fn format_term(vars: &[String], exps: &[u16], abs_coeff: u64) -> String {
    let mut pieces: Vec<String> = Vec::new();
    if abs_coeff != 1 || exps.iter().all(|&e| e == 0) {
        pieces.push(abs_coeff.to_string());
    } else {
        pieces.push("1".to_string());
    }
    for (i, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => pieces.push(vars[i].clone()),
            _ => pieces.push(format!("{}^{}", vars[i], e)),
        }
    }
    if pieces.len() > 1 || exps.iter().any(|&e| e != 0) {
        pieces.join("*")
    } else {
        pieces[0].clone()
    }
}

impl fmt::Debug for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

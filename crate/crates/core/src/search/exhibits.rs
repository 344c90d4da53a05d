//! Shipped tree pairs exhibiting the known coincidences between the
//! invariants at sizes the default classification sweep does not reach.
//!
//! The edge lists live under `data/` and are pinned by checksum so a
//! stray edit cannot silently change what the suite believes it is
//! checking; `validate_exhibits` re-derives every documented property
//! from scratch each time it runs.

use sha2::{Digest, Sha256};

use crate::invariants::{degree_poly, half_degree_poly, soup_poly, subtree_poly};
use crate::tree::Tree;

/// A pair of non-isomorphic trees with equal half degree polynomials.
#[derive(Debug, Clone)]
pub struct ExhibitPair {
    pub name: &'static str,
    pub description: &'static str,
    pub first: Tree,
    pub second: Tree,
}

struct RawExhibit {
    name: &'static str,
    description: &'static str,
    first: (&'static str, &'static str),
    second: (&'static str, &'static str),
    n: usize,
}

const RAW: [RawExhibit; 3] = [
    RawExhibit {
        name: "pair11",
        description: "the smallest non-isomorphic pair with equal half degree \
                      (and subtree) polynomials: the caterpillars with signatures \
                      (2,2,1,3,3) and (2,3,2,1,3); their soup polynomials differ \
                      in the coefficient of x^3*y*z^2",
        first: (
            include_str!("../../data/pair11_a.edges"),
            "f46853cebfe946abf9bf2b13728b9e26cf3dba9aa4931f4c923e7dbbb656731d",
        ),
        second: (
            include_str!("../../data/pair11_b.edges"),
            "7724662f84d93531b10d422f8b464430725ff734d29d158e3f3001a0222c4cd3",
        ),
        n: 11,
    },
    RawExhibit {
        name: "pair18",
        description: "the smallest pair with equal half degree polynomials that \
                      is not produced by the composition-of-polarized-trees \
                      construction",
        first: (
            include_str!("../../data/pair18_a.edges"),
            "af8fb94a88822c267768b3214fe60de2806e9cb3b6e850c050ad416d64be5ae4",
        ),
        second: (
            include_str!("../../data/pair18_b.edges"),
            "e29c59696a264a59354da2b1ce1446cffb6f5ef3814665317411c9d3240c544f",
        ),
        n: 18,
    },
    RawExhibit {
        name: "pair19",
        description: "19-vertex trees with equal half degree polynomials but \
                      different generalized degree polynomials: the first tree \
                      has a 5-vertex independent set incident to 15 edges \
                      (coefficient of x^5*y^15 is 1) and the second does not",
        first: (
            include_str!("../../data/pair19_a.edges"),
            "d66cd1e22b5ffce2f985e1a251656e278254d4ac0709a2819d4731edcde1fde0",
        ),
        second: (
            include_str!("../../data/pair19_b.edges"),
            "d7c7dc70628d8a3a4ba1607c021634fa2b926498e0fe83b7da207096367250c5",
        ),
        n: 19,
    },
];

fn checked_parse(raw: (&str, &str), n: usize, name: &str) -> Tree {
    let (text, want) = raw;
    let got = hex(&Sha256::digest(text.as_bytes()));
    assert_eq!(got, want, "checksum mismatch for exhibit {name}");
    let tree = Tree::parse(text).unwrap_or_else(|e| panic!("exhibit {name} is not a tree: {e}"));
    assert_eq!(tree.n(), n, "exhibit {name} has the wrong vertex count");
    tree
}

fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

/// The shipped pairs, checksum-verified and parsed.
pub fn builtin_exhibits() -> Vec<ExhibitPair> {
    RAW.iter()
        .map(|r| ExhibitPair {
            name: r.name,
            description: r.description,
            first: checked_parse(r.first, r.n, r.name),
            second: checked_parse(r.second, r.n, r.name),
        })
        .collect()
}

/// Recomputes every property the exhibits are shipped to demonstrate.
/// Returns the first violation as a message naming the offending pair.
pub fn validate_exhibits() -> Result<(), String> {
    for pair in builtin_exhibits() {
        let fail = |what: &str| Err(format!("exhibit {}: {what}", pair.name));
        if pair.first.canonical_code() == pair.second.canonical_code() {
            return fail("trees are isomorphic");
        }
        if half_degree_poly(&pair.first) != half_degree_poly(&pair.second) {
            return fail("half degree polynomials differ");
        }
        match pair.name {
            "pair11" => {
                if subtree_poly(&pair.first) != subtree_poly(&pair.second) {
                    return fail("subtree polynomials differ");
                }
                let a = soup_poly(&pair.first);
                let b = soup_poly(&pair.second);
                if a == b {
                    return fail("soup polynomials are equal");
                }
                if a.coefficient(&[3, 1, 2]) != 1 || b.coefficient(&[3, 1, 2]) != 0 {
                    return fail("soup coefficient of x^3*y*z^2 is not 1 vs 0");
                }
            }
            "pair18" => {}
            "pair19" => {
                let a = degree_poly(&pair.first);
                let b = degree_poly(&pair.second);
                if a == b {
                    return fail("generalized degree polynomials are equal");
                }
                if a.coefficient(&[5, 15, 0]) != 1 || b.coefficient(&[5, 15, 0]) != 0 {
                    return fail("coefficient of x^5*y^15 is not 1 vs 0");
                }
            }
            other => return Err(format!("unknown exhibit {other}")),
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Composition;
    use crate::tree::cat;

    #[test]
    fn all_exhibit_properties_hold() {
        assert_eq!(validate_exhibits(), Ok(()));
    }

    #[test]
    fn smallest_pair_is_the_expected_caterpillar_pair() {
        let pair = &builtin_exhibits()[0];
        let a = cat(&Composition::new(vec![2, 2, 1, 3, 3])).unwrap();
        let b = cat(&Composition::new(vec![2, 3, 2, 1, 3])).unwrap();
        assert_eq!(pair.first.canonical_code(), a.canonical_code());
        assert_eq!(pair.second.canonical_code(), b.canonical_code());
    }

    #[test]
    fn exhibit_sizes_are_correct() {
        let all = builtin_exhibits();
        assert_eq!(all.len(), 3);
        assert_eq!(all[0].first.n(), 11);
        assert_eq!(all[1].first.n(), 18);
        assert_eq!(all[2].first.n(), 19);
    }
}

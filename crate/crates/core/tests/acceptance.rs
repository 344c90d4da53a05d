//! Acceptance gate: the nine behaviors this workspace promises, one test
//! each, printing a single pass line with measured wall time. Budgets
//! are asserted only where a hard target exists.

use std::collections::{BTreeSet, HashMap};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use treeinv_core::compositions::{
    coarsening_sum_is_binomial, eisenstat_gordon, hbar_recurrence_check, hbar_specialize,
    irreducible_factorization, padded,
};
use treeinv_core::invariants::oracle;
use treeinv_core::invariants::{
    csf_monomial, csf_powersum, degree_poly, edge_expansion_poly, half_degree_poly, soup_poly,
    subtree_poly, uhdp, verify_edge_recurrence,
};
use treeinv_core::search::{
    builtin_exhibits, classify, fingerprint, InvariantTag,
};
use treeinv_core::transforms::{
    build_matrices, degree_counts_from_powersum, degree_poly_from_powersum, extract_vectors,
    verify_bridge,
};
use treeinv_core::tree::{cat, generate_free_trees, pruefer_tree};
use treeinv_core::{Composition, Fraction, Partition, SparsePoly, Tree};

fn pass(name: &str, start: Instant, budget: Option<Duration>) {
    let elapsed = start.elapsed();
    if let Some(budget) = budget {
        assert!(
            elapsed < budget,
            "{name} exceeded its {budget:?} budget: {elapsed:?}"
        );
    }
    println!("PASS {name} ({} ms)", elapsed.as_millis());
}

fn path(n: usize) -> Tree {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Tree::from_edges(n, &edges).unwrap()
}

fn star(n: usize) -> Tree {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (0, v)).collect();
    Tree::from_edges(n, &edges).unwrap()
}

fn pt(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec())
}

fn catp(parts: &[u32]) -> Tree {
    cat(&Composition::new(parts.to_vec())).unwrap()
}

fn poly(vars: &[&str], terms: &[(&[u16], i64)]) -> SparsePoly {
    let mut p = SparsePoly::zero(vars);
    for &(exps, c) in terms {
        p.add_term(exps, c);
    }
    p
}

fn code_of(tree: &Tree) -> String {
    String::from_utf8_lossy(tree.canonical_code().bytes()).into_owned()
}

fn compositions_of(total: u32) -> Vec<Vec<u32>> {
    if total == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=total {
        for mut rest in compositions_of(total - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

#[test]
fn criterion_1_worked_examples() {
    let start = Instant::now();
    let p4 = path(4);
    let s4 = star(4);

    let csf_p4 = csf_powersum(&p4);
    assert_eq!(
        csf_p4.to_text(),
        "1*(1,1,1,1) - 3*(2,1,1) + 1*(2,2) + 2*(3,1) - 1*(4)"
    );
    let csf_s4 = csf_powersum(&s4);
    for (lambda, want) in [
        (pt(&[1, 1, 1, 1]), 1),
        (pt(&[2, 1, 1]), -3),
        (pt(&[2, 2]), 0),
        (pt(&[3, 1]), 3),
        (pt(&[4]), -1),
    ] {
        assert_eq!(csf_s4.coefficient(&lambda), want);
    }

    let mon_p4 = csf_monomial(&p4).unwrap();
    assert_eq!(mon_p4.coefficient(&pt(&[1, 1, 1, 1])), 24);
    assert_eq!(mon_p4.coefficient(&pt(&[2, 1, 1])), 6);
    assert_eq!(mon_p4.coefficient(&pt(&[2, 2])), 2);
    assert_eq!(mon_p4.coefficient(&pt(&[3, 1])), 0);
    let mon_s4 = csf_monomial(&s4).unwrap();
    assert_eq!(mon_s4.coefficient(&pt(&[1, 1, 1, 1])), 24);
    assert_eq!(mon_s4.coefficient(&pt(&[2, 1, 1])), 6);
    assert_eq!(mon_s4.coefficient(&pt(&[3, 1])), 1);
    assert_eq!(mon_s4.coefficient(&pt(&[2, 2])), 0);

    let xyz = ["x", "y", "z"];
    let gdp_p4 = poly(
        &xyz,
        &[
            (&[0, 0, 0], 1),
            (&[1, 1, 0], 2),
            (&[1, 2, 0], 2),
            (&[2, 1, 1], 2),
            (&[2, 2, 1], 1),
            (&[2, 3, 0], 2),
            (&[2, 2, 0], 1),
            (&[3, 1, 2], 2),
            (&[3, 2, 1], 2),
            (&[4, 0, 3], 1),
        ],
    );
    assert_eq!(degree_poly(&p4), gdp_p4);
    let gdp_s4 = poly(
        &xyz,
        &[
            (&[0, 0, 0], 1),
            (&[1, 3, 0], 1),
            (&[1, 1, 0], 3),
            (&[2, 2, 1], 3),
            (&[2, 2, 0], 3),
            (&[3, 1, 2], 3),
            (&[3, 3, 0], 1),
            (&[4, 0, 3], 1),
        ],
    );
    assert_eq!(degree_poly(&s4), gdp_s4);

    let yz = ["y", "z"];
    let hdp_p4 = poly(
        &yz,
        &[
            (&[1, 0], 2),
            (&[2, 0], 2),
            (&[1, 1], 2),
            (&[2, 1], 1),
            (&[1, 2], 2),
            (&[0, 3], 1),
        ],
    );
    assert_eq!(half_degree_poly(&p4), hdp_p4);
    let hdp_s4 = poly(
        &yz,
        &[
            (&[3, 0], 1),
            (&[1, 0], 3),
            (&[2, 1], 3),
            (&[1, 2], 3),
            (&[0, 3], 1),
        ],
    );
    assert_eq!(half_degree_poly(&s4), hdp_s4);

    assert_eq!(
        subtree_poly(&p4).to_text(),
        "4 + 3*q*r + 2*q^2*r^2 + 1*q^3*r^2"
    );
    let stp_s4 = subtree_poly(&s4);
    for (exps, want) in [([0u16, 0u16], 4i64), ([1, 1], 3), ([2, 2], 3), ([3, 3], 1)] {
        assert_eq!(stp_s4.coefficient(&exps), want);
    }

    assert_eq!(
        soup_poly(&p4).to_text(),
        "2*y + 2*y^2 + 2*x*y*z + 1*x*y^2*z + 2*x^2*y*z^2 + 1*x^3*z^2"
    );
    let soup_s4 = soup_poly(&s4);
    for (exps, want) in [
        ([0u16, 3u16, 0u16], 1i64),
        ([0, 1, 0], 3),
        ([1, 2, 1], 3),
        ([2, 1, 2], 3),
        ([3, 0, 3], 1),
    ] {
        assert_eq!(soup_s4.coefficient(&exps), want);
    }

    pass(
        "criterion 1: worked path/star examples",
        start,
        Some(Duration::from_secs(1)),
    );
}

#[test]
fn criterion_2_engines_match_oracles() {
    let start = Instant::now();
    for n in 1..=12 {
        for tree in generate_free_trees(n) {
            assert_eq!(
                csf_powersum(&tree),
                oracle::powersum_by_edge_subsets(&tree),
                "csf, n = {n}"
            );
            assert_eq!(
                degree_poly(&tree),
                oracle::degree_poly_by_subsets(&tree),
                "gdp, n = {n}"
            );
            assert_eq!(
                half_degree_poly(&tree),
                oracle::half_degree_by_subsets(&tree),
                "hdp, n = {n}"
            );
            assert_eq!(
                subtree_poly(&tree),
                oracle::subtree_poly_by_subsets(&tree),
                "stp, n = {n}"
            );
            assert_eq!(
                soup_poly(&tree),
                oracle::soup_by_subsets(&tree),
                "soup, n = {n}"
            );
        }
    }
    pass(
        "criterion 2: engines equal subset oracles, n <= 12",
        start,
        Some(Duration::from_secs(600)),
    );
}

#[test]
fn criterion_3_degree_poly_from_csf() {
    let start = Instant::now();
    for n in 1..=9 {
        for tree in generate_free_trees(n) {
            assert_eq!(
                degree_poly_from_powersum(&csf_powersum(&tree)),
                degree_poly(&tree),
                "n = {n}"
            );
        }
    }
    for n in 1..=10 {
        for tree in generate_free_trees(n) {
            let counts = degree_counts_from_powersum(&csf_powersum(&tree));
            let mut want = vec![0i64; n];
            for v in 0..n {
                want[tree.degree(v)] += 1;
            }
            assert_eq!(counts, want, "degree counts, n = {n}");
        }
    }
    pass(
        "criterion 3: degree polynomial rebuilt from the csf",
        start,
        Some(Duration::from_secs(300)),
    );
}

#[test]
fn criterion_4_subtree_bridge() {
    let start = Instant::now();
    for n in 1..=10 {
        for tree in generate_free_trees(n) {
            let report = verify_bridge(&tree);
            assert!(report.passed(), "bridge failed at n = {n}");
        }
    }

    // corrected worked vectors for the four-vertex system
    let p4 = path(4);
    let v_p4 = extract_vectors(&half_degree_poly(&p4), &subtree_poly(&p4), 4).unwrap();
    assert_eq!(v_p4.h2, vec![2, 1, 2]);
    let s4 = star(4);
    let v_s4 = extract_vectors(&half_degree_poly(&s4), &subtree_poly(&s4), 4).unwrap();
    assert_eq!(v_s4.s2, vec![3, 0, 1]);

    let mats = build_matrices(13);
    for i in 2..=12u32 {
        let det = mats.n_block(i as usize).det().abs();
        assert_eq!(det, Fraction::from_int(i as i64), "block {i}");
    }
    pass("criterion 4: half-degree/subtree linear bridge", start, None);
}

#[test]
fn criterion_5_edge_recurrence() {
    let start = Instant::now();
    for n in 3..=10 {
        for tree in generate_free_trees(n) {
            assert_eq!(verify_edge_recurrence(&tree), Ok(()), "n = {n}");
        }
    }

    // the pictured double expansion: both 11-vertex caterpillars yield
    // identical right-hand sides
    let a = catp(&[2, 2, 1, 3, 3]);
    let b = catp(&[2, 3, 2, 1, 3]);
    let rhs_a = edge_expansion_poly(&a, 1, 2).unwrap();
    let rhs_b = edge_expansion_poly(&b, 2, 3).unwrap();
    assert_eq!(rhs_a, rhs_b);
    assert_eq!(uhdp(&a), uhdp(&b));
    pass("criterion 5: edge recurrence at every non-leaf edge", start, None);
}

#[test]
fn criterion_6_composition_pipeline() {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(0x6_1);

    // binomial collapse of the coarsening weights
    for len in 1..=12usize {
        assert!(coarsening_sum_is_binomial(&Composition::new(vec![1; len])));
        for _ in 0..20 {
            let parts: Vec<u32> = (0..len).map(|_| rng.gen_range(1..=4)).collect();
            assert!(coarsening_sum_is_binomial(&Composition::new(parts)));
        }
    }

    // concatenation recurrence on 500 random pairs
    for _ in 0..500 {
        let la = rng.gen_range(1..=7usize);
        let lb = rng.gen_range(1..=(14 - la).min(7));
        let alpha = Composition::new((0..la).map(|_| rng.gen_range(1..=3)).collect());
        let beta = Composition::new((0..lb).map(|_| rng.gen_range(1..=3)).collect());
        assert!(
            hbar_recurrence_check(&alpha, &beta).unwrap(),
            "alpha = {alpha}, beta = {beta}"
        );
    }

    // specialization equals the capped caterpillar's trimmed polynomial
    for total in 1..=10u32 {
        for parts in compositions_of(total) {
            let alpha = Composition::new(parts);
            let specialized = hbar_specialize(&alpha).unwrap();
            let capped = catp(padded(&alpha).parts());
            assert_eq!(specialized, uhdp(&capped), "alpha = {alpha}");
        }
    }

    // worked factorizations and the equal-polynomial caterpillar pair
    let f1 = irreducible_factorization(&Composition::new(vec![1, 2, 1, 3, 2]));
    assert_eq!(
        f1.factors,
        vec![Composition::new(vec![1, 2]), Composition::new(vec![1, 2])]
    );
    let f2 = irreducible_factorization(&Composition::new(vec![1, 3, 2, 1, 2]));
    assert_eq!(
        f2.factors,
        vec![Composition::new(vec![2, 1]), Composition::new(vec![1, 2])]
    );
    assert_eq!(
        half_degree_poly(&catp(&[2, 2, 1, 3, 3])),
        half_degree_poly(&catp(&[2, 3, 2, 1, 3]))
    );

    // the gap-free-polynomial construction reproduces that pair
    let (first, second) = eisenstat_gordon(&[1, 1, 0, 1], 1, 2).unwrap();
    let got: BTreeSet<String> = [code_of(&first), code_of(&second)].into();
    let want: BTreeSet<String> =
        [code_of(&catp(&[2, 2, 1, 3, 3])), code_of(&catp(&[2, 3, 2, 1, 3]))].into();
    assert_eq!(got, want);
    pass("criterion 6: composition calculus pipeline", start, None);
}

#[test]
fn criterion_7_classification_table() {
    let start = Instant::now();
    let pair = &builtin_exhibits()[0];
    let pair_codes: BTreeSet<String> = [code_of(&pair.first), code_of(&pair.second)].into();

    for tag in [InvariantTag::Hdp, InvariantTag::Gdp] {
        for n in 1..=10 {
            let report = classify(n, tag, 1).unwrap();
            assert!(report.classes.is_empty(), "{tag} collision at n = {n}");
        }
        for (n, want_pairs) in [(11, 1), (12, 1), (13, 1), (14, 5)] {
            let report = classify(n, tag, 1).unwrap();
            assert_eq!(
                report.classes.len(),
                want_pairs,
                "{tag} class count at n = {n}"
            );
            assert!(
                report.classes.iter().all(|c| c.size == 2),
                "{tag} class of size > 2 at n = {n}"
            );
            if n == 11 {
                let got: BTreeSet<String> = report.classes[0]
                    .members
                    .iter()
                    .map(|m| m.code.clone())
                    .collect();
                assert_eq!(got, pair_codes, "{tag} pair at n = 11");
            }
        }
    }

    // in place of the full large-scale sweep: the shipped 19-vertex pair
    // has equal half polynomials but is split by the full polynomial
    let big = &builtin_exhibits()[2];
    assert_eq!(half_degree_poly(&big.first), half_degree_poly(&big.second));
    let g1 = degree_poly(&big.first);
    let g2 = degree_poly(&big.second);
    assert_ne!(g1, g2);
    assert_eq!(g1.coefficient(&[5, 15, 0]), 1);
    assert_eq!(g2.coefficient(&[5, 15, 0]), 0);
    pass(
        "criterion 7: classification table through n = 14",
        start,
        Some(Duration::from_secs(900)),
    );
}

#[test]
fn criterion_8_soup_separates() {
    let start = Instant::now();
    let pair = &builtin_exhibits()[0];
    let a = soup_poly(&pair.first);
    let b = soup_poly(&pair.second);
    assert_eq!(a.coefficient(&[3, 1, 2]), 1);
    assert_eq!(b.coefficient(&[3, 1, 2]), 0);
    assert_eq!(subtree_poly(&pair.first), subtree_poly(&pair.second));

    for n in 1..=12 {
        let report = classify(n, InvariantTag::Soup, 1).unwrap();
        assert!(report.classes.is_empty(), "soup collision at n = {n}");
    }

    let mid = &builtin_exhibits()[1];
    assert_eq!(half_degree_poly(&mid.first), half_degree_poly(&mid.second));
    assert_ne!(code_of(&mid.first), code_of(&mid.second));
    pass("criterion 8: three-variable census completeness", start, None);
}

#[test]
fn criterion_9_property_suites() {
    let start = Instant::now();

    // identical reports under different worker counts
    let baseline = classify(10, InvariantTag::Hdp, 1).unwrap().canonical_json();
    for jobs in [2, 4] {
        let other = classify(10, InvariantTag::Hdp, jobs).unwrap().canonical_json();
        assert_eq!(other, baseline, "jobs = {jobs}");
    }

    // digest partition equals full-payload partition for every tag
    for n in 1..=12 {
        for tag in InvariantTag::ALL {
            let mut by_digest: HashMap<[u8; 16], usize> = HashMap::new();
            let mut by_payload: HashMap<String, usize> = HashMap::new();
            let mut digest_ids = Vec::new();
            let mut payload_ids = Vec::new();
            for tree in generate_free_trees(n) {
                let fp = fingerprint(&tree, tag);
                let next = by_digest.len();
                digest_ids.push(*by_digest.entry(fp.digest).or_insert(next));
                let next = by_payload.len();
                payload_ids.push(*by_payload.entry(fp.payload.unwrap()).or_insert(next));
            }
            assert_eq!(digest_ids, payload_ids, "n = {n}, tag = {tag}");
        }
    }

    // generator counts against the Pruefer-sequence oracle
    let expected = [1usize, 1, 1, 2, 3, 6, 11, 23];
    for n in 1..=8usize {
        let mut oracle_codes = BTreeSet::new();
        if n <= 2 {
            oracle_codes.insert(pruefer_tree(n, &[]).canonical_code());
        } else {
            let total = (n as u64).pow(n as u32 - 2);
            for code in 0..total {
                let mut seq = Vec::with_capacity(n - 2);
                let mut c = code;
                for _ in 0..n - 2 {
                    seq.push((c % n as u64) as usize);
                    c /= n as u64;
                }
                oracle_codes.insert(pruefer_tree(n, &seq).canonical_code());
            }
        }
        assert_eq!(oracle_codes.len(), expected[n - 1], "oracle count, n = {n}");
        assert_eq!(
            generate_free_trees(n).count(),
            expected[n - 1],
            "generator count, n = {n}"
        );
    }
    pass("criterion 9: determinism, digests, and counting oracles", start, None);
}

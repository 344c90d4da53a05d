//! Exhaustive classification of free trees by invariant value.
//!
//! `classify` sweeps every free tree on `n` vertices, fingerprints each
//! one under a chosen invariant, and reports the classes of size two or
//! more together with a class-size histogram. The sweep is parallel but
//! its output is canonical: rows are sorted after collection, so the
//! report is byte-identical regardless of thread count.

mod exhibits;

pub use exhibits::{builtin_exhibits, validate_exhibits, ExhibitPair};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs;
use std::path::Path;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::invariants::{csf_powersum, degree_poly, half_degree_poly, soup_poly, subtree_poly};
use crate::tree::{count_free_trees, generate_free_trees, Tree};

/// Largest `n` the plain `classify` entry point will sweep. Beyond this
/// the single-machine cost grows steeply; callers that really want a
/// bigger sweep must say so through `classify_with_cap`.
pub const DEFAULT_CLASSIFY_CAP: usize = 16;

/// Which invariant a sweep distinguishes trees by.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum InvariantTag {
    /// Chromatic symmetric function (its full power-sum expansion).
    Csf,
    /// Generalized degree polynomial.
    Gdp,
    /// Half generalized degree polynomial.
    Hdp,
    /// Subtree polynomial.
    Stp,
    /// Souped-up subtree polynomial.
    Soup,
    /// Joint refinement by half and full generalized degree polynomials.
    HdpGdp,
}

impl InvariantTag {
    pub const ALL: [InvariantTag; 6] = [
        InvariantTag::Csf,
        InvariantTag::Gdp,
        InvariantTag::Hdp,
        InvariantTag::Stp,
        InvariantTag::Soup,
        InvariantTag::HdpGdp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InvariantTag::Csf => "csf",
            InvariantTag::Gdp => "gdp",
            InvariantTag::Hdp => "hdp",
            InvariantTag::Stp => "stp",
            InvariantTag::Soup => "soup",
            InvariantTag::HdpGdp => "hdp+gdp",
        }
    }
}

impl fmt::Display for InvariantTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InvariantTag {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        InvariantTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                format!(
                    "unknown invariant {s:?}; expected one of csf, gdp, hdp, stp, soup, hdp+gdp"
                )
            })
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("classification at n = {n} exceeds the configured cap of {cap} vertices")]
    CapExceeded { n: usize, cap: usize },
}

/// Canonical text form of an invariant, the string that classification
/// compares. Two trees land in the same class exactly when these agree.
pub fn invariant_text(tree: &Tree, tag: InvariantTag) -> String {
    match tag {
        InvariantTag::Csf => csf_powersum(tree).to_text(),
        InvariantTag::Gdp => degree_poly(tree).to_text(),
        InvariantTag::Hdp => half_degree_poly(tree).to_text(),
        InvariantTag::Stp => subtree_poly(tree).to_text(),
        InvariantTag::Soup => soup_poly(tree).to_text(),
        InvariantTag::HdpGdp => format!(
            "{}|{}",
            half_degree_poly(tree).to_text(),
            degree_poly(tree).to_text()
        ),
    }
}

/// A tree's invariant value, carried as a short digest plus (optionally)
/// the full text it was derived from.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub tag: InvariantTag,
    pub digest: [u8; 16],
    pub payload: Option<String>,
}

impl Fingerprint {
    pub fn digest_hex(&self) -> String {
        self.digest.iter().map(|b| format!("{b:02x}")).collect()
    }
}

fn digest16(payload: &str) -> [u8; 16] {
    let hash = Sha256::digest(payload.as_bytes());
    let mut out = [0u8; 16];
    out.copy_from_slice(&hash[..16]);
    out
}

/// Fingerprint with the full invariant text attached.
pub fn fingerprint(tree: &Tree, tag: InvariantTag) -> Fingerprint {
    let payload = invariant_text(tree, tag);
    let digest = digest16(&payload);
    Fingerprint {
        tag,
        digest,
        payload: Some(payload),
    }
}

/// Fingerprint reduced to the digest alone, for memory-tight sweeps.
pub fn digest_fingerprint(tree: &Tree, tag: InvariantTag) -> Fingerprint {
    let mut fp = fingerprint(tree, tag);
    fp.payload = None;
    fp
}

/// One tree inside a class: its canonical parenthesis code and an edge
/// list suitable for reconstruction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassMember {
    pub code: String,
    pub edges: Vec<(usize, usize)>,
}

/// A set of two or more trees sharing an invariant value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TreeClass {
    pub size: usize,
    pub members: Vec<ClassMember>,
}

/// Outcome of one classification sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    pub n: usize,
    pub invariant: InvariantTag,
    pub num_trees: usize,
    /// class size -> number of classes of that size (singletons included).
    pub histogram: BTreeMap<usize, usize>,
    /// Only the classes of size two or more, sorted by their first
    /// member's canonical code; members are sorted the same way.
    pub classes: Vec<TreeClass>,
    pub elapsed_ms: u64,
}

impl ClassReport {
    pub fn num_classes(&self) -> usize {
        self.histogram.values().sum()
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "n": self.n,
            "invariant": self.invariant.name(),
            "num_trees": self.num_trees,
            "classes": self.classes.iter().map(|c| json!({
                "size": c.size,
                "members": c.members.iter().map(|m| json!({
                    "code": m.code,
                    "edges": m.edges,
                })).collect::<Vec<_>>(),
            })).collect::<Vec<_>>(),
            "elapsed_ms": self.elapsed_ms,
        })
    }

    /// JSON text with the timing field removed, so equal sweeps compare
    /// byte-for-byte.
    pub fn canonical_json(&self) -> String {
        let mut value = self.to_json();
        value
            .as_object_mut()
            .expect("report serializes to an object")
            .remove("elapsed_ms");
        serde_json::to_string_pretty(&value).expect("report is valid JSON")
    }
}

/// Classifies all free trees on `n` vertices under the default cap.
/// `jobs` is the worker thread count; 0 means one per available core.
pub fn classify(n: usize, tag: InvariantTag, jobs: usize) -> Result<ClassReport, SearchError> {
    classify_with_cap(n, tag, jobs, DEFAULT_CLASSIFY_CAP)
}

/// Classification with an explicit vertex cap for oversized sweeps.
pub fn classify_with_cap(
    n: usize,
    tag: InvariantTag,
    jobs: usize,
    cap: usize,
) -> Result<ClassReport, SearchError> {
    if n > cap {
        return Err(SearchError::CapExceeded { n, cap });
    }
    let start = Instant::now();
    let trees: Vec<Tree> = generate_free_trees(n).collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("failed to build worker pool");
    let mut rows: Vec<(String, String, Vec<(usize, usize)>)> = pool.install(|| {
        trees
            .par_iter()
            .map(|t| {
                let payload = invariant_text(t, tag);
                let code = String::from_utf8_lossy(t.canonical_code().bytes()).into_owned();
                (payload, code, t.edges().to_vec())
            })
            .collect()
    });
    rows.sort();

    let num_trees = rows.len();
    let mut histogram = BTreeMap::new();
    let mut classes = Vec::new();
    let mut i = 0;
    while i < num_trees {
        let mut j = i + 1;
        while j < num_trees && rows[j].0 == rows[i].0 {
            j += 1;
        }
        let size = j - i;
        *histogram.entry(size).or_insert(0) += 1;
        if size >= 2 {
            let members = rows[i..j]
                .iter()
                .map(|(_, code, edges)| ClassMember {
                    code: code.clone(),
                    edges: edges.clone(),
                })
                .collect();
            classes.push(TreeClass { size, members });
        }
        i = j;
    }
    classes.sort_by(|a, b| a.members[0].code.cmp(&b.members[0].code));

    Ok(ClassReport {
        n,
        invariant: tag,
        num_trees,
        histogram,
        classes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    })
}

#[derive(Serialize, Deserialize)]
struct CacheFile {
    n: usize,
    invariant: String,
    num_trees: usize,
    classes: Vec<TreeClass>,
    elapsed_ms: u64,
}

fn cache_path(dir: &Path, n: usize, tag: InvariantTag) -> std::path::PathBuf {
    let slug = tag.name().replace('+', "-");
    dir.join(format!("classify-v1-{slug}-n{n}.json"))
}

fn load_cache(path: &Path, n: usize, tag: InvariantTag) -> Option<ClassReport> {
    let text = fs::read_to_string(path).ok()?;
    let file: CacheFile = serde_json::from_str(&text).ok()?;
    if file.n != n || file.invariant != tag.name() {
        return None;
    }
    // A stale or hand-edited file must not poison a sweep: the tree count
    // is re-derived from the counting recurrence before the hit is trusted.
    if file.num_trees as u64 != count_free_trees(n) {
        return None;
    }
    let mut covered = 0;
    let mut histogram = BTreeMap::new();
    for class in &file.classes {
        if class.size < 2 || class.size != class.members.len() {
            return None;
        }
        covered += class.size;
        *histogram.entry(class.size).or_insert(0usize) += 1;
    }
    if covered > file.num_trees {
        return None;
    }
    let singletons = file.num_trees - covered;
    if singletons > 0 {
        *histogram.entry(1).or_insert(0) += singletons;
    }
    Some(ClassReport {
        n,
        invariant: tag,
        num_trees: file.num_trees,
        histogram,
        classes: file.classes,
        elapsed_ms: file.elapsed_ms,
    })
}

fn store_cache(path: &Path, report: &ClassReport) {
    // Best effort: a cache write failure should never fail the sweep.
    let Some(dir) = path.parent() else { return };
    if fs::create_dir_all(dir).is_err() {
        return;
    }
    let text = match serde_json::to_string_pretty(&report.to_json()) {
        Ok(t) => t,
        Err(_) => return,
    };
    let tmp = path.with_extension("tmp");
    if fs::write(&tmp, text).is_err() {
        return;
    }
    let _ = fs::rename(&tmp, path);
}

/// Classification backed by a directory of previous results. A valid
/// cached report for the same `(invariant, n)` is returned as-is;
/// otherwise the sweep runs and its report is stored for next time.
pub fn classify_cached(
    n: usize,
    tag: InvariantTag,
    jobs: usize,
    cap: usize,
    cache_dir: &Path,
) -> Result<ClassReport, SearchError> {
    let path = cache_path(cache_dir, n, tag);
    if let Some(hit) = load_cache(&path, n, tag) {
        return Ok(hit);
    }
    let report = classify_with_cap(n, tag, jobs, cap)?;
    store_cache(&path, &report);
    Ok(report)
}

/// The polynomial invariants compared pairwise by `compare_invariants`.
pub const COMPARED_TAGS: [InvariantTag; 4] = [
    InvariantTag::Gdp,
    InvariantTag::Hdp,
    InvariantTag::Stp,
    InvariantTag::Soup,
];

/// Whether equality under `finer` forces equality under `coarser`,
/// checked over every free tree on one vertex count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refinement {
    pub finer: InvariantTag,
    pub coarser: InvariantTag,
    pub holds: bool,
    /// Canonical codes of two trees equal under `finer` but split by
    /// `coarser`, when `holds` is false.
    pub counterexample: Option<(String, String)>,
}

/// Tests every ordered pair of polynomial invariants for refinement over
/// the free trees on `n` vertices.
pub fn compare_invariants(n: usize) -> Vec<Refinement> {
    let trees: Vec<Tree> = generate_free_trees(n).collect();
    let codes: Vec<String> = trees
        .iter()
        .map(|t| String::from_utf8_lossy(t.canonical_code().bytes()).into_owned())
        .collect();
    let class_ids: Vec<Vec<usize>> = COMPARED_TAGS
        .iter()
        .map(|&tag| {
            let mut ids: HashMap<String, usize> = HashMap::new();
            trees
                .iter()
                .map(|t| {
                    let payload = invariant_text(t, tag);
                    let next = ids.len();
                    *ids.entry(payload).or_insert(next)
                })
                .collect()
        })
        .collect();

    let mut out = Vec::new();
    for (fi, &finer) in COMPARED_TAGS.iter().enumerate() {
        for (ci, &coarser) in COMPARED_TAGS.iter().enumerate() {
            if fi == ci {
                continue;
            }
            let mut first_seen: HashMap<usize, (usize, usize)> = HashMap::new();
            let mut holds = true;
            let mut counterexample = None;
            for (idx, (&f, &c)) in class_ids[fi].iter().zip(&class_ids[ci]).enumerate() {
                match first_seen.get(&f) {
                    None => {
                        first_seen.insert(f, (idx, c));
                    }
                    Some(&(first_idx, c0)) if c0 != c => {
                        holds = false;
                        counterexample = Some((codes[first_idx].clone(), codes[idx].clone()));
                        break;
                    }
                    Some(_) => {}
                }
            }
            out.push(Refinement {
                finer,
                coarser,
                holds,
                counterexample,
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tag_names_round_trip() {
        for tag in InvariantTag::ALL {
            assert_eq!(tag.name().parse::<InvariantTag>(), Ok(tag));
            assert_eq!(tag.to_string(), tag.name());
        }
        assert!("degree".parse::<InvariantTag>().is_err());
    }

    #[test]
    fn small_sweeps_are_all_singletons() {
        for n in 1..=9 {
            let report = classify(n, InvariantTag::Hdp, 1).unwrap();
            assert_eq!(report.num_trees as u64, count_free_trees(n), "n = {n}");
            assert!(report.classes.is_empty(), "unexpected collision at n = {n}");
            assert_eq!(report.histogram, BTreeMap::from([(1, report.num_trees)]));
        }
    }

    #[test]
    fn eleven_vertex_sweep_finds_the_known_pair() {
        let report = classify(11, InvariantTag::Hdp, 1).unwrap();
        assert_eq!(report.num_trees, 235);
        assert_eq!(report.classes.len(), 1);
        let class = &report.classes[0];
        assert_eq!(class.size, 2);
        assert_eq!(report.histogram, BTreeMap::from([(1, 233), (2, 1)]));

        let pair = &builtin_exhibits()[0];
        let mut want = vec![
            String::from_utf8_lossy(pair.first.canonical_code().bytes()).into_owned(),
            String::from_utf8_lossy(pair.second.canonical_code().bytes()).into_owned(),
        ];
        want.sort();
        let got: Vec<String> = class.members.iter().map(|m| m.code.clone()).collect();
        assert_eq!(got, want);

        for member in &class.members {
            let rebuilt = Tree::from_edges(11, &member.edges).unwrap();
            let code = String::from_utf8_lossy(rebuilt.canonical_code().bytes()).into_owned();
            assert_eq!(code, member.code);
        }
    }

    #[test]
    fn reports_are_identical_across_thread_counts() {
        let baseline = classify(10, InvariantTag::Stp, 1).unwrap().canonical_json();
        for jobs in [0, 2, 4] {
            let other = classify(10, InvariantTag::Stp, jobs).unwrap().canonical_json();
            assert_eq!(other, baseline, "jobs = {jobs}");
        }
    }

    #[test]
    fn digest_partition_agrees_with_full_payloads() {
        for n in 1..=9 {
            for tag in [InvariantTag::Hdp, InvariantTag::Stp] {
                let mut by_digest: HashMap<[u8; 16], usize> = HashMap::new();
                let mut by_payload: HashMap<String, usize> = HashMap::new();
                let mut digest_ids = Vec::new();
                let mut payload_ids = Vec::new();
                for tree in generate_free_trees(n) {
                    let fp = fingerprint(&tree, tag);
                    let slim = digest_fingerprint(&tree, tag);
                    assert_eq!(slim.digest, fp.digest);
                    assert_eq!(slim.payload, None);
                    let next = by_digest.len();
                    digest_ids.push(*by_digest.entry(fp.digest).or_insert(next));
                    let next = by_payload.len();
                    payload_ids.push(*by_payload.entry(fp.payload.unwrap()).or_insert(next));
                }
                assert_eq!(digest_ids, payload_ids, "n = {n}, tag = {tag}");
            }
        }
    }

    #[test]
    fn cache_round_trip_and_corruption_recovery() {
        let dir = std::env::temp_dir().join(format!("treeinv-cache-test-{}", std::process::id()));
        let _ = fs::remove_dir_all(&dir);

        let fresh = classify_cached(8, InvariantTag::Stp, 1, 16, &dir).unwrap();
        let path = cache_path(&dir, 8, InvariantTag::Stp);
        assert!(path.exists(), "cache file not written");

        let hit = classify_cached(8, InvariantTag::Stp, 1, 16, &dir).unwrap();
        assert_eq!(hit.canonical_json(), fresh.canonical_json());

        fs::write(&path, "{\"n\": 8, \"invariant\": \"stp\"").unwrap();
        let recovered = classify_cached(8, InvariantTag::Stp, 1, 16, &dir).unwrap();
        assert_eq!(recovered.canonical_json(), fresh.canonical_json());

        // A file whose tree count disagrees with the counting recurrence
        // must be ignored, not trusted.
        let mut doctored = fresh.to_json();
        doctored["num_trees"] = json!(999);
        fs::write(&path, serde_json::to_string(&doctored).unwrap()).unwrap();
        let recomputed = classify_cached(8, InvariantTag::Stp, 1, 16, &dir).unwrap();
        assert_eq!(recomputed.canonical_json(), fresh.canonical_json());

        let _ = fs::remove_dir_all(&dir);
    }

    #[test]
    fn refinement_report_isolates_the_soup_split() {
        let report = compare_invariants(11);
        assert_eq!(report.len(), 12);
        let get = |finer, coarser| {
            report
                .iter()
                .find(|r| r.finer == finer && r.coarser == coarser)
                .unwrap()
        };
        use InvariantTag::*;

        // The half and full degree polynomials and the subtree polynomial
        // partition eleven-vertex trees identically; the soup polynomial
        // splits their one non-singleton class.
        for (a, b) in [(Gdp, Hdp), (Hdp, Gdp), (Stp, Hdp), (Hdp, Stp)] {
            assert!(get(a, b).holds, "{a} should refine {b} at n = 11");
        }
        assert!(get(Soup, Hdp).holds);
        let broken = get(Hdp, Soup);
        assert!(!broken.holds);
        let (a, b) = broken.counterexample.clone().unwrap();
        let pair = &builtin_exhibits()[0];
        let mut want = vec![
            String::from_utf8_lossy(pair.first.canonical_code().bytes()).into_owned(),
            String::from_utf8_lossy(pair.second.canonical_code().bytes()).into_owned(),
        ];
        want.sort();
        let mut got = vec![a, b];
        got.sort();
        assert_eq!(got, want);
    }

    #[test]
    fn oversized_requests_are_refused() {
        assert_eq!(
            classify(17, InvariantTag::Hdp, 1),
            Err(SearchError::CapExceeded { n: 17, cap: 16 })
        );
        assert!(classify_with_cap(4, InvariantTag::Gdp, 1, 3).is_err());
    }
}

//! `treeinv`: exact tree-invariant computations from the command line.
//!
//! Exit codes: 0 on success (or a verification suite passing), 1 when a
//! verification suite finds a counterexample (which is printed), 2 on
//! usage errors. Diagnostics go to stderr; results go to stdout.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use treeinv_core::compositions::{
    eisenstat_gordon, irreducible_factorization, switching_class, theorem7_family,
};
use treeinv_core::invariants::{
    csf_powersum, degree_poly, half_degree_poly, soup_poly, subtree_poly, verify_edge_recurrence,
};
use treeinv_core::invariants::closed::{degree_poly_cat, half_degree_poly_cat};
use treeinv_core::search::{
    classify_cached, classify_with_cap, validate_exhibits, DEFAULT_CLASSIFY_CAP,
};
use treeinv_core::transforms::{degree_poly_from_powersum, verify_bridge};
use treeinv_core::tree::{cat, generate_free_trees, signature, PolarizedTree, Tree};
use treeinv_core::{Composition, InvariantTag};

#[derive(Parser)]
#[command(
    name = "treeinv",
    version,
    about = "Exact invariants of trees: chromatic symmetric function, degree \
             polynomials, subtree polynomials, and the equal-invariant family \
             constructions built on them"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute invariants of one tree given as an edge-list file.
    Invariants(InvariantsArgs),
    /// Partition all free trees on n vertices by invariant value.
    Classify(ClassifyArgs),
    /// Run a verification suite; exits 1 with a counterexample on failure.
    Verify(VerifyArgs),
    /// Emit a family of trees sharing a half degree polynomial.
    Family(FamilyArgs),
    /// Factor a composition into irreducibles and list its switches.
    Factor(FactorArgs),
    /// Build the caterpillar pair attached to a gap-free 0/1 polynomial.
    Eg(EgArgs),
    /// Emit every free tree on n vertices as an edge list.
    Gen(GenArgs),
}

#[derive(Args)]
struct InvariantsArgs {
    /// Edge-list file: one "u v" pair per line, optional "n=K" first line,
    /// "#" comments allowed.
    #[arg(long)]
    tree: PathBuf,
    /// Chromatic symmetric function (power-sum coefficients).
    #[arg(long)]
    csf: bool,
    /// Generalized degree polynomial (all vertex subsets).
    #[arg(long)]
    gdp: bool,
    /// Half generalized degree polynomial (connected subsets).
    #[arg(long)]
    hdp: bool,
    /// Subtree polynomial.
    #[arg(long)]
    stp: bool,
    /// Souped-up three-variable subtree polynomial.
    #[arg(long)]
    soup: bool,
    /// All of the above (the default when no flag is given).
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args)]
struct ClassifyArgs {
    /// Number of vertices to sweep.
    #[arg(long)]
    n: usize,
    /// One of: csf, gdp, hdp, stp, soup, hdp+gdp.
    #[arg(long)]
    invariant: String,
    /// Worker threads; 0 means one per core.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Also write the JSON report into this directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Raise the vertex cap beyond the default for oversized sweeps.
    #[arg(long, default_value_t = DEFAULT_CLASSIFY_CAP)]
    cap: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// Rebuild the generalized degree polynomial from the chromatic
    /// symmetric function on every small tree.
    Crew,
    /// Check the linear system tying the half degree polynomial to the
    /// subtree polynomial, both directions, on every small tree.
    Bridge,
    /// Check the edge recurrence for the leaf-trimmed half degree
    /// polynomial at every non-leaf edge of every small tree.
    Recurrence,
    /// Compare the caterpillar closed forms against the generic engines.
    Closedform,
    /// Re-derive the documented properties of the shipped tree pairs.
    Exhibits,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_enum)]
    suite: Suite,
    /// Largest vertex count to sweep (suite-specific default).
    #[arg(long)]
    max_n: Option<usize>,
}

#[derive(Args)]
struct FamilyArgs {
    /// Comma-separated parts, e.g. "1,2,1,3,2".
    #[arg(long)]
    composition: String,
    /// Base tree file; the family is built over a single vertex if absent.
    #[arg(long)]
    base: Option<PathBuf>,
    /// Left port of the base tree (required with --base).
    #[arg(long)]
    left: Option<usize>,
    /// Right port of the base tree (required with --base).
    #[arg(long)]
    right: Option<usize>,
    /// Refuse families whose members exceed this many vertices.
    #[arg(long, default_value_t = 22)]
    max_vertices: usize,
}

#[derive(Args)]
struct FactorArgs {
    /// Comma-separated parts, e.g. "1,2,1,3,2".
    #[arg(long)]
    composition: String,
}

#[derive(Args)]
struct EgArgs {
    /// Comma-separated 0/1 coefficient list, constant term first,
    /// e.g. "1,1,0,1" for 1 + x + x^3.
    #[arg(long)]
    poly: String,
    #[arg(long)]
    a: u32,
    #[arg(long)]
    b: u32,
}

#[derive(Args)]
struct GenArgs {
    #[arg(long)]
    n: usize,
}

enum CliError {
    /// Bad input from the user: exit 2.
    Usage(String),
    /// A verification suite found a counterexample: exit 1.
    Verification(String),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<(), CliError> {
    match command {
        Command::Invariants(args) => run_invariants(args),
        Command::Classify(args) => run_classify(args),
        Command::Verify(args) => run_verify(args),
        Command::Family(args) => run_family(args),
        Command::Factor(args) => run_factor(args),
        Command::Eg(args) => run_eg(args),
        Command::Gen(args) => run_gen(args),
    }
}

fn load_tree(path: &PathBuf) -> Result<Tree, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    Tree::parse(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn parse_composition(text: &str) -> Result<Composition, CliError> {
    Composition::parse(text).map_err(CliError::Usage)
}

fn run_invariants(args: InvariantsArgs) -> Result<(), CliError> {
    let tree = load_tree(&args.tree)?;
    let any_flag = args.csf || args.gdp || args.hdp || args.stp || args.soup;
    let all = args.all || !any_flag;
    let mut selected: Vec<&str> = Vec::new();
    for (on, name) in [
        (args.csf, "csf"),
        (args.gdp, "gdp"),
        (args.hdp, "hdp"),
        (args.stp, "stp"),
        (args.soup, "soup"),
    ] {
        if all || on {
            selected.push(name);
        }
    }

    match args.format {
        Format::Text => {
            let bare = selected.len() == 1;
            for name in selected {
                let text = invariant_to_text(&tree, name);
                if bare {
                    println!("{text}");
                } else {
                    println!("{name}: {text}");
                }
            }
        }
        Format::Json => {
            let mut map = serde_json::Map::new();
            map.insert("n".into(), json!(tree.n()));
            for name in selected {
                map.insert(name.into(), invariant_to_json(&tree, name));
            }
            println!(
                "{}",
                serde_json::to_string_pretty(&serde_json::Value::Object(map)).unwrap()
            );
        }
    }
    Ok(())
}

fn invariant_to_text(tree: &Tree, name: &str) -> String {
    match name {
        "csf" => csf_powersum(tree).to_text(),
        "gdp" => degree_poly(tree).to_text(),
        "hdp" => half_degree_poly(tree).to_text(),
        "stp" => subtree_poly(tree).to_text(),
        "soup" => soup_poly(tree).to_text(),
        _ => unreachable!("selection list is fixed"),
    }
}

fn invariant_to_json(tree: &Tree, name: &str) -> serde_json::Value {
    match name {
        "csf" => csf_powersum(tree).to_json(),
        "gdp" => degree_poly(tree).to_json(),
        "hdp" => half_degree_poly(tree).to_json(),
        "stp" => subtree_poly(tree).to_json(),
        "soup" => soup_poly(tree).to_json(),
        _ => unreachable!("selection list is fixed"),
    }
}

fn run_classify(args: ClassifyArgs) -> Result<(), CliError> {
    let tag = InvariantTag::from_str(&args.invariant).map_err(CliError::Usage)?;
    if args.n > DEFAULT_CLASSIFY_CAP && args.n <= args.cap {
        eprintln!(
            "warning: sweeping n = {} above the default cap {DEFAULT_CLASSIFY_CAP}; \
             this may take a long time",
            args.n
        );
    }
    let report = match std::env::var_os("TREEINV_CACHE_DIR") {
        Some(dir) => classify_cached(args.n, tag, args.jobs, args.cap, dir.as_ref()),
        None => classify_with_cap(args.n, tag, args.jobs, args.cap),
    }
    .map_err(|e| CliError::Usage(e.to_string()))?;

    let text = serde_json::to_string_pretty(&report.to_json()).unwrap();
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)
            .map_err(|e| CliError::Usage(format!("cannot create {}: {e}", dir.display())))?;
        let slug = tag.name().replace('+', "-");
        let path = dir.join(format!("classify-{slug}-n{}.json", args.n));
        fs::write(&path, &text)
            .map_err(|e| CliError::Usage(format!("cannot write {}: {e}", path.display())))?;
        eprintln!("wrote {}", path.display());
    }
    println!("{text}");
    eprintln!(
        "n = {}, invariant = {tag}: {} trees, {} non-singleton classes, {} ms",
        report.n,
        report.num_trees,
        report.classes.len(),
        report.elapsed_ms
    );
    Ok(())
}

struct SuiteOutcome {
    checked: usize,
    failures: Vec<serde_json::Value>,
}

fn run_verify(args: VerifyArgs) -> Result<(), CliError> {
    let (name, default_max) = match args.suite {
        Suite::Crew => ("crew", 9),
        Suite::Bridge => ("bridge", 10),
        Suite::Recurrence => ("recurrence", 10),
        Suite::Closedform => ("closedform", 12),
        Suite::Exhibits => ("exhibits", 0),
    };
    let max_n = args.max_n.unwrap_or(default_max);
    let outcome = match args.suite {
        Suite::Crew => verify_crew(max_n),
        Suite::Bridge => verify_bridge_suite(max_n),
        Suite::Recurrence => verify_recurrence_suite(max_n),
        Suite::Closedform => verify_closedform(max_n),
        Suite::Exhibits => verify_exhibits_suite(),
    };
    let report = json!({
        "suite": name,
        "max_n": max_n,
        "checked": outcome.checked,
        "failures": outcome.failures,
    });
    println!("{}", serde_json::to_string_pretty(&report).unwrap());
    if outcome.failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(format!(
            "suite {name}: {} of {} checks failed",
            outcome.failures.len(),
            outcome.checked
        )))
    }
}

fn verify_crew(max_n: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_n {
        for tree in generate_free_trees(n) {
            out.checked += 1;
            let direct = degree_poly(&tree);
            let rebuilt = degree_poly_from_powersum(&csf_powersum(&tree));
            if direct != rebuilt {
                out.failures.push(json!({
                    "tree": tree.to_edge_list(),
                    "direct": direct.to_text(),
                    "from_csf": rebuilt.to_text(),
                }));
            }
        }
    }
    out
}

fn verify_bridge_suite(max_n: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_n {
        for tree in generate_free_trees(n) {
            out.checked += 1;
            let report = verify_bridge(&tree);
            if !report.passed() {
                out.failures.push(json!({
                    "tree": tree.to_edge_list(),
                    "report": report.to_json(),
                }));
            }
        }
    }
    out
}

fn verify_recurrence_suite(max_n: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        checked: 0,
        failures: Vec::new(),
    };
    for n in 1..=max_n {
        for tree in generate_free_trees(n) {
            out.checked += 1;
            if let Err((v, w)) = verify_edge_recurrence(&tree) {
                out.failures.push(json!({
                    "tree": tree.to_edge_list(),
                    "edge": [v, w],
                }));
            }
        }
    }
    out
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

fn verify_closedform(max_n: usize) -> SuiteOutcome {
    let mut out = SuiteOutcome {
        checked: 0,
        failures: Vec::new(),
    };
    for total in 1..=max_n as u32 {
        for parts in compositions_of(total) {
            let alpha = Composition::new(parts);
            // skip compositions that are not caterpillar signatures
            let Ok(tree) = cat(&alpha) else { continue };
            out.checked += 1;
            let gdp_closed = degree_poly_cat(&alpha);
            let hdp_closed = half_degree_poly_cat(&alpha);
            let ok = gdp_closed.as_ref().ok() == Some(&degree_poly(&tree))
                && hdp_closed.as_ref().ok() == Some(&half_degree_poly(&tree));
            if !ok {
                out.failures.push(json!({
                    "signature": alpha.to_string(),
                    "gdp_closed": gdp_closed.map(|p| p.to_text()).unwrap_or_else(|e| e.to_string()),
                    "gdp_engine": degree_poly(&tree).to_text(),
                    "hdp_closed": hdp_closed.map(|p| p.to_text()).unwrap_or_else(|e| e.to_string()),
                    "hdp_engine": half_degree_poly(&tree).to_text(),
                }));
            }
        }
    }
    out
}

fn verify_exhibits_suite() -> SuiteOutcome {
    match validate_exhibits() {
        Ok(()) => SuiteOutcome {
            checked: 3,
            failures: Vec::new(),
        },
        Err(msg) => SuiteOutcome {
            checked: 3,
            failures: vec![json!({ "exhibit": msg })],
        },
    }
}

fn run_family(args: FamilyArgs) -> Result<(), CliError> {
    let alpha = parse_composition(&args.composition)?;
    let base = match (&args.base, args.left, args.right) {
        (None, None, None) => PolarizedTree::single_vertex(),
        (Some(path), Some(left), Some(right)) => {
            let tree = load_tree(path)?;
            PolarizedTree::from_parts(tree, left, right).map_err(|e| {
                CliError::Usage(format!("bad polarized base: {e}"))
            })?
        }
        _ => return usage("--base, --left and --right must be given together"),
    };
    let members = theorem7_family(&alpha, &base, args.max_vertices)
        .map_err(|e| CliError::Usage(e.to_string()))?;

    let reference = half_degree_poly(&members[0]);
    for (i, member) in members.iter().enumerate() {
        if let Ok(sig) = signature(member) {
            println!("# member {}: caterpillar signature {sig}", i + 1);
        } else {
            println!("# member {}", i + 1);
        }
        print!("{}", member.to_edge_list());
        println!();
        if half_degree_poly(member) != reference {
            return Err(CliError::Verification(format!(
                "family member {} does not share the half degree polynomial",
                i + 1
            )));
        }
    }
    eprintln!(
        "{} members on {} vertices, shared hdp: {}",
        members.len(),
        members[0].n(),
        reference.to_text()
    );
    Ok(())
}

fn run_factor(args: FactorArgs) -> Result<(), CliError> {
    let alpha = parse_composition(&args.composition)?;
    let factorization = irreducible_factorization(&alpha);
    let chain = factorization
        .factors
        .iter()
        .map(|f| f.to_string())
        .collect::<Vec<_>>()
        .join(" o ");
    println!("{alpha} = {chain}");
    println!("switching class:");
    for member in switching_class(&alpha) {
        println!("{member}");
    }
    Ok(())
}

fn run_eg(args: EgArgs) -> Result<(), CliError> {
    let coeffs: Vec<u32> = args
        .poly
        .split(',')
        .map(|part| {
            part.trim()
                .parse::<u32>()
                .map_err(|_| CliError::Usage(format!("bad coefficient {part:?}")))
        })
        .collect::<Result<_, _>>()?;
    let (first, second) =
        eisenstat_gordon(&coeffs, args.a, args.b).map_err(|e| CliError::Usage(e.to_string()))?;
    for (label, tree) in [("first", &first), ("second", &second)] {
        let sig = signature(tree).expect("construction yields caterpillars");
        println!("# {label}: caterpillar signature {sig}");
        print!("{}", tree.to_edge_list());
        println!();
    }
    let same = half_degree_poly(&first) == half_degree_poly(&second);
    eprintln!(
        "equal hdp: {same}; isomorphic: {}",
        first.canonical_code() == second.canonical_code()
    );
    Ok(())
}

fn run_gen(args: GenArgs) -> Result<(), CliError> {
    for tree in generate_free_trees(args.n) {
        print!("{}", tree.to_edge_list());
        println!();
    }
    Ok(())
}

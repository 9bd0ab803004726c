//! `ydeal` — JSON command line over the diagram order, closure operators,
//! chain translations, symmetric group algebra ideals, and the verification
//! suites.
//!
//! Every result and every error is a single JSON value on standard output.
//! Exit codes: 0 = query answered / check passed; 1 = a checking verb found a
//! counterexample (`closure is-closed`, `chain antichain`, `algebra ideal-eq`,
//! `algebra branching`, failing `verify` suites); 2 = invalid input, reported
//! as `{"error": {...}}`.

use std::fmt::Display;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use ydeal_core::{
    bad_sequence_from_chain, branching_check, central_idempotent, chain_from_bad_sequence,
    character, closure, dimension, find_good_pair, hat_set, ideal_generated, max_bad_length,
    member_closure, norm, suite_names, AlgebraElement, AlgebraError, ChainMode, ClosureError,
    CorrespondenceError, Diagram, DiagramSet, OrdinalCnf, OrdinalError, SuiteReport, UpSet,
    VerifyError, VerifyParams, WpoError, DEFAULT_SEED,
};

const DEFAULT_DEGREE_CEILING: u32 = 6;

#[derive(Parser)]
#[command(
    name = "ydeal",
    version,
    about = "Young diagram closure operators, chain translations, and group algebra ideals",
    disable_help_subcommand = true
)]
struct Cli {
    /// Largest symmetric group degree the algebra verbs accept.
    #[arg(
        long,
        global = true,
        env = "YDEAL_DEGREE_CEILING",
        default_value_t = DEFAULT_DEGREE_CEILING
    )]
    degree_ceiling: u32,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Diagram order, lattice, and shortening operations.
    #[command(subcommand)]
    Diagram(DiagramCmd),
    /// Upward closed sets and the closure operator.
    #[command(subcommand)]
    Closure(ClosureCmd),
    /// Ordinals below w^w in Cantor normal form.
    #[command(subcommand)]
    Ordinal(OrdinalCmd),
    /// Bad sequences, ascending chains, and the translations between them.
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Rational symmetric group algebra: idempotents, characters, ideals.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Run the property verification suites and print their reports.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum DiagramCmd {
    /// Conjugate (transpose rows and columns) a diagram.
    Conjugate { diagram: String },
    /// Containment: is the first diagram contained in the second?
    Leq { left: String, right: String },
    /// Rowwise maximum of two diagrams.
    Union { left: String, right: String },
    /// Replace the first row by the second row (or 1 if absent).
    ShortenRow { diagram: String },
    /// Replace the first column by the second column (or 1 if absent).
    ShortenCol { diagram: String },
    /// The diagram as a downward closed set of (row, column) boxes.
    Downset { diagram: String },
}

#[derive(Subcommand)]
enum ClosureCmd {
    /// The hat set: rowwise/columnwise shortenings unioned over all pairs.
    Hat { generators: String },
    /// The norm: bounds the sizes at which closing a set can add members.
    Norm { generators: String },
    /// The bar set: members of the hat set's upward closure up to the norm.
    Bar { generators: String },
    /// Minimal generators of the closure of the given set.
    Cl { generators: String },
    /// Does the closure of the set contain the diagram?
    Member { generators: String, diagram: String },
    /// Is the upward closure of the set closed? Reports a witness if not.
    IsClosed { generators: String },
    /// Minimal generating antichain of the upward closure of the set.
    MinGen { generators: String },
}

#[derive(Subcommand)]
enum OrdinalCmd {
    /// Compare two ordinals given as weakly decreasing exponent lists.
    Cmp { left: String, right: String },
    /// The diagram whose rows are the exponents plus one.
    ToDiagram { ordinal: String },
}

#[derive(Subcommand)]
enum ChainCmd {
    /// Least good pair (i, j), i < j with element i contained in element j.
    GoodPair { sequence: String },
    /// Translate a bad sequence into a strictly ascending chain of sets.
    FromBad {
        sequence: String,
        /// Chain construction: plain upward closures or closure-operator sets.
        #[arg(long, value_enum, default_value_t = ModeArg::Upward)]
        mode: ModeArg,
    },
    /// Recover a bad sequence from a strictly ascending chain of sets.
    ExtractBad { chain: String },
    /// Longest bad sequence over diagrams of size at most k, with a witness.
    MaxBad { k: u32 },
    /// Check a family of upward closed sets for a comparable pair.
    Antichain { family: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Upward,
    Closure,
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Central idempotent attached to a diagram shape.
    Idempotent { shape: String },
    /// Dimension of the irreducible representation of a shape.
    Dimension { shape: String },
    /// Character value of a shape at a conjugacy class (a cycle type).
    Character { shape: String, class: String },
    /// Two-sided ideal generated by a list of algebra elements.
    Ideal { generators: String },
    /// Do two generator lists generate the same two-sided ideal?
    IdealEq { left: String, right: String },
    /// Does the shape's idempotent generate the same ideal as its size-n dominators?
    Branching { shape: String, n: u32 },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run: all, diagrams, closure, wpo, algebra, or correspondence.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Diagram size bound for the combinatorial suites.
    #[arg(long, default_value_t = 6)]
    max_size: u32,
    /// Symmetric group degree bound for the algebraic suites.
    #[arg(long, default_value_t = 4)]
    max_n: u32,
    /// Number of randomized cases per sampled check.
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    /// Seed for every randomized check.
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Unlock degree 6 where a suite documents the option.
    #[arg(long = "opt-in-n6")]
    opt_in_n6: bool,
    /// Print per-suite counts only instead of full reports.
    #[arg(long)]
    summary: bool,
    /// Include wall-clock durations (reports stop being byte-identical).
    #[arg(long)]
    timings: bool,
}

/// A JSON error object; printing it always exits with code 2.
struct Failure(Value);

impl Failure {
    fn new(kind: &str, message: impl Display) -> Failure {
        Failure(json!({ "kind": kind, "message": message.to_string() }))
    }
}

/// A JSON result plus whether a checking verb found a counterexample.
struct Outcome {
    value: Value,
    failed: bool,
}

fn pass(value: Value) -> Outcome {
    Outcome { value, failed: false }
}

fn fail(value: Value) -> Outcome {
    Outcome { value, failed: true }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => return clap_exit(e),
    };
    match run(cli) {
        Ok(outcome) => {
            println!("{}", outcome.value);
            if outcome.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(Failure(body)) => {
            println!("{}", json!({ "error": body }));
            ExitCode::from(2)
        }
    }
}

/// Help and version requests print as text and succeed; every other parse
/// problem is a usage error reported as JSON with exit code 2.
fn clap_exit(e: clap::Error) -> ExitCode {
    use clap::error::ErrorKind;
    if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
        print!("{e}");
        return ExitCode::SUCCESS;
    }
    let message = e.render().to_string();
    println!(
        "{}",
        json!({ "error": { "kind": "UsageError", "message": message } })
    );
    ExitCode::from(2)
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    match cli.command {
        Command::Diagram(cmd) => run_diagram(cmd),
        Command::Closure(cmd) => run_closure(cmd),
        Command::Ordinal(cmd) => run_ordinal(cmd),
        Command::Chain(cmd) => run_chain(cmd),
        Command::Algebra(cmd) => run_algebra(cmd, cli.degree_ceiling),
        Command::Verify(args) => run_verify(args),
    }
}

fn run_diagram(cmd: DiagramCmd) -> Result<Outcome, Failure> {
    match cmd {
        DiagramCmd::Conjugate { diagram } => {
            let d: Diagram = parse_json("a diagram", &diagram)?;
            Ok(pass(val(&d.conjugate())))
        }
        DiagramCmd::Leq { left, right } => {
            let a: Diagram = parse_json("the left diagram", &left)?;
            let b: Diagram = parse_json("the right diagram", &right)?;
            Ok(pass(json!({ "leq": a.leq(&b) })))
        }
        DiagramCmd::Union { left, right } => {
            let a: Diagram = parse_json("the left diagram", &left)?;
            let b: Diagram = parse_json("the right diagram", &right)?;
            Ok(pass(val(&a.union(&b))))
        }
        DiagramCmd::ShortenRow { diagram } => {
            let d: Diagram = parse_json("a diagram", &diagram)?;
            Ok(pass(val(&d.shorten_row())))
        }
        DiagramCmd::ShortenCol { diagram } => {
            let d: Diagram = parse_json("a diagram", &diagram)?;
            Ok(pass(val(&d.shorten_col())))
        }
        DiagramCmd::Downset { diagram } => {
            let d: Diagram = parse_json("a diagram", &diagram)?;
            Ok(pass(val(&d.to_downset())))
        }
    }
}

fn run_closure(cmd: ClosureCmd) -> Result<Outcome, Failure> {
    match cmd {
        ClosureCmd::Hat { generators } => {
            let s = parse_generators(&generators)?;
            Ok(pass(val(&hat_set(&s))))
        }
        ClosureCmd::Norm { generators } => {
            let s = parse_generators(&generators)?;
            Ok(pass(json!({ "norm": norm(&s) })))
        }
        ClosureCmd::Bar { generators } => {
            let s = parse_generators(&generators)?;
            let bar = ydeal_core::bar_set(&s).map_err(closure_error)?;
            Ok(pass(val(&bar)))
        }
        ClosureCmd::Cl { generators } => {
            let s = parse_generators(&generators)?;
            let cl = closure(&s).map_err(closure_error)?;
            Ok(pass(val(&cl)))
        }
        ClosureCmd::Member { generators, diagram } => {
            let s = parse_generators(&generators)?;
            let d: Diagram = parse_json("a diagram", &diagram)?;
            let member = member_closure(&d, &s).map_err(closure_error)?;
            Ok(pass(json!({ "member": member })))
        }
        ClosureCmd::IsClosed { generators } => {
            let s = parse_generators(&generators)?;
            let u = UpSet::generated_by(s).map_err(closure_error)?;
            Ok(match u.non_closed_witness() {
                None => pass(json!({ "closed": true })),
                Some(w) => fail(json!({ "closed": false, "witness": val(&w) })),
            })
        }
        ClosureCmd::MinGen { generators } => {
            let s = parse_generators(&generators)?;
            let u = UpSet::generated_by(s).map_err(closure_error)?;
            Ok(pass(val(&u.generators())))
        }
    }
}

fn run_ordinal(cmd: OrdinalCmd) -> Result<Outcome, Failure> {
    match cmd {
        OrdinalCmd::Cmp { left, right } => {
            let a: OrdinalCnf = parse_json("the left ordinal", &left)?;
            let b: OrdinalCnf = parse_json("the right ordinal", &right)?;
            let ordering = match a.cmp(&b) {
                std::cmp::Ordering::Less => "less",
                std::cmp::Ordering::Equal => "equal",
                std::cmp::Ordering::Greater => "greater",
            };
            Ok(pass(json!({ "ordering": ordering })))
        }
        OrdinalCmd::ToDiagram { ordinal } => {
            let o: OrdinalCnf = parse_json("an ordinal", &ordinal)?;
            let d = o.to_diagram().map_err(ordinal_error)?;
            Ok(pass(val(&d)))
        }
    }
}

fn run_chain(cmd: ChainCmd) -> Result<Outcome, Failure> {
    match cmd {
        ChainCmd::GoodPair { sequence } => {
            let seq: Vec<Diagram> = parse_json("a diagram sequence", &sequence)?;
            Ok(pass(json!({ "good_pair": find_good_pair(&seq) })))
        }
        ChainCmd::FromBad { sequence, mode } => {
            let seq: Vec<Diagram> = parse_json("a diagram sequence", &sequence)?;
            let mode = match mode {
                ModeArg::Upward => ChainMode::Upward,
                ModeArg::Closure => ChainMode::Closure,
            };
            let chain = chain_from_bad_sequence(&seq, mode).map_err(wpo_error)?;
            Ok(pass(val(&chain)))
        }
        ChainCmd::ExtractBad { chain } => {
            let chain: Vec<UpSet> = parse_json("a chain of generator sets", &chain)?;
            let seq = bad_sequence_from_chain(&chain).map_err(wpo_error)?;
            Ok(pass(val(&seq)))
        }
        ChainCmd::MaxBad { k } => {
            let (length, witness) = max_bad_length(k);
            Ok(pass(json!({ "length": length, "witness": val(&witness) })))
        }
        ChainCmd::Antichain { family } => {
            let family: Vec<UpSet> = parse_json("a family of generator sets", &family)?;
            Ok(match ydeal_core::antichain_check(&family) {
                None => pass(json!({ "antichain": true })),
                Some((i, j)) => fail(json!({ "antichain": false, "comparable": [i, j] })),
            })
        }
    }
}

fn run_algebra(cmd: AlgebraCmd, ceiling: u32) -> Result<Outcome, Failure> {
    match cmd {
        AlgebraCmd::Idempotent { shape } => {
            let shape: Diagram = parse_json("a shape", &shape)?;
            degree_guard("shape size", shape.size(), ceiling)?;
            Ok(pass(val(&central_idempotent(&shape))))
        }
        AlgebraCmd::Dimension { shape } => {
            let shape: Diagram = parse_json("a shape", &shape)?;
            degree_guard("shape size", shape.size(), ceiling)?;
            Ok(pass(json!({ "dimension": dimension(&shape) })))
        }
        AlgebraCmd::Character { shape, class } => {
            let shape: Diagram = parse_json("a shape", &shape)?;
            let class: Diagram = parse_json("a class", &class)?;
            degree_guard("shape size", shape.size(), ceiling)?;
            let value = character(&shape, &class).map_err(algebra_error)?;
            Ok(pass(json!({ "value": value })))
        }
        AlgebraCmd::Ideal { generators } => {
            let gens = parse_elements("the generator list", &generators)?;
            degree_guard("generator degree", element_degree(&gens), ceiling)?;
            let basis = ideal_generated(&gens).map_err(algebra_error)?;
            Ok(pass(json!({
                "degree": basis.degree(),
                "rank": basis.rank(),
                "basis": val(&basis.basis_elements()),
            })))
        }
        AlgebraCmd::IdealEq { left, right } => {
            let a = parse_elements("the left generator list", &left)?;
            let b = parse_elements("the right generator list", &right)?;
            degree_guard("generator degree", element_degree(&a), ceiling)?;
            degree_guard("generator degree", element_degree(&b), ceiling)?;
            let ia = ideal_generated(&a).map_err(algebra_error)?;
            let ib = ideal_generated(&b).map_err(algebra_error)?;
            let equal = ia.equals(&ib);
            let body = json!({ "equal": equal });
            Ok(if equal { pass(body) } else { fail(body) })
        }
        AlgebraCmd::Branching { shape, n } => {
            let shape: Diagram = parse_json("a shape", &shape)?;
            degree_guard("n", n, ceiling)?;
            let holds = branching_check(&shape, n).map_err(correspondence_error)?;
            let body = json!({ "holds": holds });
            Ok(if holds { pass(body) } else { fail(body) })
        }
    }
}

fn run_verify(args: VerifyArgs) -> Result<Outcome, Failure> {
    let params = VerifyParams {
        max_size: args.max_size,
        max_n: args.max_n,
        trials: args.trials,
        seed: args.seed,
        allow_degree_six: args.opt_in_n6,
    };
    let names: Vec<&str> = if args.suite == "all" {
        suite_names().to_vec()
    } else {
        vec![args.suite.as_str()]
    };
    let mut reports = Vec::new();
    for name in &names {
        let started = Instant::now();
        let mut report = ydeal_core::run_suite(name, &params).map_err(verify_error)?;
        if args.timings {
            report.duration_ms = Some(started.elapsed().as_millis() as u64);
        }
        reports.push(report);
    }
    let all_passed = reports.iter().all(|r| r.passed);
    let rendered: Vec<Value> = if args.summary {
        reports.iter().map(summarize).collect()
    } else {
        reports.iter().map(val).collect()
    };
    let body = if names.len() == 1 {
        rendered.into_iter().next().expect("one suite ran")
    } else {
        Value::Array(rendered)
    };
    Ok(if all_passed { pass(body) } else { fail(body) })
}

fn summarize(report: &SuiteReport) -> Value {
    json!({
        "suite": report.suite,
        "passed": report.passed,
        "checks": report.checks.len(),
        "cases": report.cases,
    })
}

fn val<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("core types serialize to JSON")
}

fn parse_json<T: DeserializeOwned>(what: &str, text: &str) -> Result<T, Failure> {
    serde_json::from_str(text)
        .map_err(|e| Failure::new("InvalidInput", format!("cannot read {what}: {e}")))
}

#[derive(Deserialize)]
struct GeneratorsArg {
    generators: Vec<Diagram>,
}

fn parse_generators(text: &str) -> Result<DiagramSet, Failure> {
    let wire: GeneratorsArg = parse_json("a generator set", text)?;
    if wire.generators.is_empty() {
        return Err(closure_error(ClosureError::EmptyGeneratorSet));
    }
    Ok(wire.generators.into_iter().collect())
}

fn parse_elements(what: &str, text: &str) -> Result<Vec<AlgebraElement>, Failure> {
    let elements: Vec<AlgebraElement> = parse_json(what, text)?;
    if elements.is_empty() {
        return Err(algebra_error(AlgebraError::NoGenerators));
    }
    Ok(elements)
}

fn element_degree(elements: &[AlgebraElement]) -> u32 {
    elements.iter().map(AlgebraElement::degree).max().unwrap_or(0)
}

fn degree_guard(parameter: &str, value: u32, ceiling: u32) -> Result<(), Failure> {
    if value > ceiling {
        return Err(Failure(json!({
            "kind": "CeilingExceeded",
            "parameter": parameter,
            "value": value,
            "ceiling": ceiling,
            "message": format!(
                "{parameter} = {value} exceeds the degree ceiling {ceiling}; \
                 raise it with --degree-ceiling or YDEAL_DEGREE_CEILING"
            ),
        })));
    }
    Ok(())
}

fn closure_error(e: ClosureError) -> Failure {
    let kind = match &e {
        ClosureError::EmptyGeneratorSet => "EmptyGeneratorSet",
        ClosureError::MemberAlready(_) => "MemberAlready",
    };
    Failure::new(kind, e)
}

fn ordinal_error(e: OrdinalError) -> Failure {
    let kind = match &e {
        OrdinalError::NotDecreasingExponents { .. } => "NotDecreasingExponents",
        OrdinalError::NegativeExponent(_) => "NegativeExponent",
        OrdinalError::ZeroOrdinal => "ZeroOrdinal",
        OrdinalError::NotDescending(_) => "NotDescending",
    };
    Failure::new(kind, e)
}

fn wpo_error(e: WpoError) -> Failure {
    let kind = match e {
        WpoError::Closure(inner) => return closure_error(inner),
        WpoError::SideConditionViolated { .. } => "SideConditionViolated",
        WpoError::NotBad { .. } => "NotBad",
        WpoError::NotAscending(_) => "NotAscending",
    };
    Failure::new(kind, e)
}

fn algebra_error(e: AlgebraError) -> Failure {
    let kind = match &e {
        AlgebraError::DegreeMismatch(..) => "DegreeMismatch",
        AlgebraError::SizeMismatch { .. } => "SizeMismatch",
        AlgebraError::DegreeShrink { .. } => "DegreeShrink",
        AlgebraError::NoGenerators => "NoGenerators",
        AlgebraError::NotAnIdeal(_) => "NotAnIdeal",
        AlgebraError::EmptyTermList => "EmptyTermList",
        AlgebraError::BadCoefficient(_) => "BadCoefficient",
    };
    Failure::new(kind, e)
}

fn correspondence_error(e: CorrespondenceError) -> Failure {
    let kind = match e {
        CorrespondenceError::Algebra(inner) => return algebra_error(inner),
        CorrespondenceError::Closure(inner) => return closure_error(inner),
        CorrespondenceError::WrongTopSize { .. } => "WrongTopSize",
        CorrespondenceError::SizeExceedsLevel { .. } => "SizeExceedsLevel",
        CorrespondenceError::LevelTooSmall { .. } => "LevelTooSmall",
    };
    Failure::new(kind, e)
}

fn verify_error(e: VerifyError) -> Failure {
    match &e {
        VerifyError::UnknownSuite(_) => Failure::new("UnknownSuite", e),
        VerifyError::CeilingExceeded { suite, parameter, value, ceiling, .. } => {
            Failure(json!({
                "kind": "CeilingExceeded",
                "suite": suite,
                "parameter": parameter,
                "value": value,
                "ceiling": ceiling,
                "message": e.to_string(),
            }))
        }
    }
}

//! Command-line front end: branching multiplicities, generalized
//! exponents, separation, LR enumeration, flag sequences, and the
//! self-verification matrix. All output is JSON on stdout; identical
//! invocations produce byte-identical output.
//!
//! Exit codes: 0 success, 1 invalid input, 2 internal invariant violation.

use clap::{Parser, Subcommand, ValueEnum};
use lrspin::branching::{self, BranchingQuery, Group, Method};
use lrspin::flags::{
    flag_sequences_companion, flag_sequences_row, is_barred_d_row, is_flagged_d_companion,
    is_flagged_d_skew, FlagContext,
};
use lrspin::genexp;
use lrspin::lr::{enumerate_lr, LrKind};
use lrspin::partition::Partition;
use lrspin::separation::{separate, SeparationResult};
use lrspin::spinor::{SpinorElement, SpinorElementJson};
use lrspin::tableau::Tableau;
use serde::Serialize;
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "lrspin",
    about = "Exact branching multiplicities from GL_n to O_n/Sp_n and generalized exponents of so_n",
    long_about = "Partitions are passed as comma-separated part lists, e.g. --lambda 5,4,4,3,2,2; \
                  an empty string denotes the empty partition. Tableaux are read from JSON files \
                  shaped like {\"outer\":[7,6],\"inner\":[2],\"rows\":[[1,1,2,3,3],[1,2]]} with rows \
                  listed top to bottom and skew cells omitted. Spinor elements are JSON objects \
                  {\"n\":8,\"mu\":[4,3,3,2],\"components\":[{\"kind\":\"T\",\"a\":2,\"left\":[...],\"right\":[...]},...]} \
                  listed left to right; kinds are T, TBAR0, SP+ and SP-."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Branching multiplicity with per-delta contributions
    Branch {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        lambda: Partition,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value = "O")]
        group: GroupArg,
        #[arg(long, value_enum, default_value = "all")]
        method: MethodArg,
    },
    /// Generalized exponent polynomial K_{mu,0}(t)
    Genexp {
        #[arg(long = "type", value_enum)]
        kind: TypeArg,
        #[arg(long)]
        rank: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        /// Also check the truncated graded identity to this degree
        #[arg(long)]
        check_identity: Option<usize>,
    },
    /// Separate a highest weight spinor element into body and tail
    Separate {
        /// JSON file with the spinor element
        #[arg(long)]
        input: std::path::PathBuf,
        /// Include the per-step sliding trace
        #[arg(long)]
        trace: bool,
        /// Padding height override for the negative case (even)
        #[arg(long)]
        pad: Option<usize>,
    },
    /// Enumerate Littlewood-Richardson witnesses
    Lr {
        #[command(subcommand)]
        sub: LrCommand,
    },
    /// Flag sequences and membership verdict for one tableau
    Flags {
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = parse_partition)]
        mu: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        delta: Partition,
        #[arg(long)]
        tableau: std::path::PathBuf,
        #[arg(long, value_enum)]
        side: SideArg,
    },
    /// Run the self-verification matrix
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: SuiteArg,
        /// Soft time budget in seconds
        #[arg(long, default_value_t = 60)]
        budget: u64,
    },
}

#[derive(Subcommand)]
enum LrCommand {
    Enumerate {
        #[arg(long, value_parser = parse_partition)]
        outer: Partition,
        #[arg(long, value_parser = parse_partition, default_value = "")]
        inner: Partition,
        #[arg(long, value_parser = parse_partition)]
        content: Partition,
        #[arg(long, value_enum, default_value = "lattice")]
        kind: KindArg,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GroupArg {
    #[value(name = "O", alias = "o")]
    O,
    #[value(name = "Sp", alias = "sp")]
    Sp,
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "C", alias = "c")]
    C,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    Barred,
    Flagged,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum TypeArg {
    #[value(name = "B", alias = "b")]
    B,
    #[value(name = "D", alias = "d")]
    D,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Lattice,
    Anti,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Companion,
    Row,
    Skew,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    All,
    Branching,
    Genexp,
    Separation,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let trimmed = s.trim();
    if trimmed.is_empty() {
        return Ok(Partition::empty());
    }
    let parts: Vec<usize> = trimmed
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|e| e.to_string()))
        .collect::<Result<_, _>>()?;
    if !parts.windows(2).all(|w| w[0] >= w[1]) {
        return Err("parts must be weakly decreasing".into());
    }
    Ok(Partition::new(parts))
}

/// Distinguishes bad input (exit 1) from broken internal invariants
/// (exit 2, a bug worth reporting).
enum Failure {
    Input(String),
    Invariant(String),
}

fn main() {
    let cli = Cli::parse();
    // a panic is a broken internal invariant: report it as such
    match std::panic::catch_unwind(std::panic::AssertUnwindSafe(|| run(cli))) {
        Ok(Ok(())) => {}
        Ok(Err(Failure::Input(msg))) => {
            eprintln!("error: {msg}");
            std::process::exit(1);
        }
        Ok(Err(Failure::Invariant(msg))) => {
            eprintln!("internal invariant violated: {msg}");
            std::process::exit(2);
        }
        Err(_) => {
            eprintln!("internal invariant violated: unexpected panic");
            std::process::exit(2);
        }
    }
}

fn emit<T: Serialize>(value: &T) {
    println!("{}", serde_json::to_string(value).expect("serializable output"));
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Branch {
            n,
            lambda,
            mu,
            group,
            method,
        } => branch(n, lambda, mu, group, method),
        Command::Genexp {
            kind,
            rank,
            mu,
            check_identity,
        } => run_genexp(kind, rank, mu, check_identity),
        Command::Separate { input, trace, pad } => run_separate(&input, trace, pad),
        Command::Lr { sub } => run_lr(sub),
        Command::Flags {
            n,
            mu,
            delta,
            tableau,
            side,
        } => run_flags(n, mu, delta, &tableau, side),
        Command::Verify { suite, budget } => run_verify(suite, budget),
    }
}

fn branch(
    n: usize,
    lambda: Partition,
    mu: Partition,
    group: GroupArg,
    method: MethodArg,
) -> Result<(), Failure> {
    let group_enum = match group {
        GroupArg::O => Group::O,
        GroupArg::Sp => Group::Sp,
        GroupArg::B => Group::B,
        GroupArg::C => Group::C,
    };
    let q = BranchingQuery::new(n, lambda, mu, group_enum).map_err(Failure::Input)?;
    match group_enum {
        Group::O => {
            let methods: Vec<(&str, Method)> = match method {
                MethodArg::Direct => vec![("direct", Method::Direct)],
                MethodArg::Barred => vec![("barred", Method::Barred)],
                MethodArg::Flagged => vec![("flagged", Method::Flagged)],
                MethodArg::All => vec![
                    ("direct", Method::Direct),
                    ("barred", Method::Barred),
                    ("flagged", Method::Flagged),
                ],
            };
            let mut out = serde_json::Map::new();
            let mut totals = Vec::new();
            for (name, m) in methods {
                let (total, contributions) = branching::multiplicity_with_contributions(&q, m)
                    .map_err(Failure::Input)?;
                totals.push(total);
                let per_delta: Vec<_> = contributions
                    .iter()
                    .map(|(d, c)| json!({"delta": d, "count": c}))
                    .collect();
                out.insert(
                    name.to_string(),
                    json!({"total": total, "contributions": per_delta}),
                );
            }
            if totals.windows(2).any(|w| w[0] != w[1]) {
                return Err(Failure::Invariant(format!(
                    "methods disagree: {totals:?}"
                )));
            }
            out.insert("total".into(), json!(totals[0]));
            emit(&serde_json::Value::Object(out));
        }
        Group::Sp | Group::B | Group::C => {
            let total = branching::bc_multiplicity(&q, group_enum).map_err(Failure::Input)?;
            emit(&json!({"total": total}));
        }
    }
    Ok(())
}

fn run_genexp(
    kind: TypeArg,
    rank: usize,
    mu: Partition,
    check_identity: Option<usize>,
) -> Result<(), Failure> {
    let poly = match kind {
        TypeArg::B => genexp::k_so_odd(&mu, rank).map_err(Failure::Input)?,
        TypeArg::D => genexp::k_so_even(&mu, rank).map_err(Failure::Invariant)?,
    };
    let mut out = serde_json::to_value(&poly).expect("polynomial serializes");
    if matches!(kind, TypeArg::D) {
        // the indexing multiset before the division by 1 + t^m
        let raw = genexp::exponent_multiset(&mu, 2 * rank).map_err(Failure::Input)?;
        out["indexing"] = serde_json::to_value(&raw).expect("polynomial serializes");
    }
    if let Some(degree) = check_identity {
        let n = match kind {
            TypeArg::B => 2 * rank + 1,
            TypeArg::D => 2 * rank,
        };
        let ok = genexp::graded_identity_check(&mu, n, degree).map_err(Failure::Input)?;
        if !ok {
            return Err(Failure::Invariant(format!(
                "graded identity fails at degree {degree}"
            )));
        }
        out["identity_checked_to_degree"] = json!(degree);
    }
    emit(&out);
    Ok(())
}

#[derive(Serialize)]
struct SeparateOutput<'a> {
    delta: &'a Partition,
    tail: &'a Tableau,
    lambda: &'a Partition,
    columns: &'a [lrspin::separation::SplitColumn],
    #[serde(skip_serializing_if = "Option::is_none")]
    steps: Option<&'a [lrspin::separation::TraceStep]>,
}

fn run_separate(
    input: &std::path::Path,
    trace: bool,
    pad: Option<usize>,
) -> Result<(), Failure> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", input.display())))?;
    let parsed: SpinorElementJson =
        serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
    let element = SpinorElement::from_json(&parsed).map_err(Failure::Input)?;
    if !element.is_valid() {
        return Err(Failure::Input("element is not admissible".into()));
    }
    if !element.is_l_highest() {
        return Err(Failure::Input(
            "element is not a highest weight element".into(),
        ));
    }
    let result: SeparationResult = separate(&element, pad).map_err(Failure::Invariant)?;
    emit(&SeparateOutput {
        delta: &result.delta,
        tail: &result.tail,
        lambda: &result.lambda,
        columns: &result.columns,
        steps: trace.then_some(result.steps.as_slice()),
    });
    Ok(())
}

fn run_lr(sub: LrCommand) -> Result<(), Failure> {
    let LrCommand::Enumerate {
        outer,
        inner,
        content,
        kind,
    } = sub;
    let kind = match kind {
        KindArg::Lattice => LrKind::Lattice,
        KindArg::Anti => LrKind::AntiLattice,
    };
    if !outer.contains(&inner) {
        return Err(Failure::Input(format!(
            "inner {inner} does not fit in outer {outer}"
        )));
    }
    let witnesses = enumerate_lr(&outer, &inner, &content, kind);
    let out: Vec<_> = witnesses
        .iter()
        .map(|w| json!({"filling": w.filling, "companion": w.companion}))
        .collect();
    emit(&json!({"count": out.len(), "witnesses": out}));
    Ok(())
}

fn read_tableau(path: &std::path::Path) -> Result<Tableau, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
    let raw: Tableau = serde_json::from_str(&text).map_err(|e| Failure::Input(e.to_string()))?;
    // re-validate: serde fills the fields without checking semistandardness
    Tableau::new(raw.shape(), raw.rows().to_vec()).map_err(Failure::Input)
}

fn run_flags(
    n: usize,
    mu: Partition,
    delta: Partition,
    tableau: &std::path::Path,
    side: SideArg,
) -> Result<(), Failure> {
    let t = read_tableau(tableau)?;
    let ctx = FlagContext::new(n, mu.clone(), delta.clone()).map_err(Failure::Input)?;
    // reject shape mismatches up front so the predicates cannot panic
    let shape_ok = match side {
        SideArg::Companion => {
            t.shape() == lrspin::tableau::SkewShape::rotated(&mu)
                && t.content().len() <= n
        }
        SideArg::Row => t.is_straight() && *t.outer() == mu.conjugate(),
        SideArg::Skew => {
            t.outer().contains(&delta)
                && *t.inner() == delta
                && t.cell_count() == mu.size()
        }
    };
    if !shape_ok {
        return Err(Failure::Input(format!(
            "tableau shape does not match mu = {mu}, delta = {delta} for this side"
        )));
    }
    match side {
        SideArg::Companion => {
            let seqs = flag_sequences_companion(&t, &ctx);
            let verdict = is_flagged_d_companion(&t, &ctx);
            emit(&json!({"m": seqs.m, "n": seqs.nseq, "flagged": verdict}));
        }
        SideArg::Row => match flag_sequences_row(&t, &ctx) {
            Some(seqs) => {
                let verdict = is_barred_d_row(&t, &ctx);
                emit(&json!({"m": seqs.m, "n": seqs.nseq, "barred": verdict}));
            }
            None => emit(&json!({"m": null, "n": null, "barred": false})),
        },
        SideArg::Skew => {
            let verdict = is_flagged_d_skew(&t, &ctx);
            emit(&json!({"flagged": verdict}));
        }
    }
    Ok(())
}

fn run_verify(suite: SuiteArg, budget: u64) -> Result<(), Failure> {
    let started = std::time::Instant::now();
    let out_of_time = |started: &std::time::Instant| started.elapsed().as_secs() >= budget;
    let mut all_ok = true;
    let mut report = Vec::new();

    let run_branching = matches!(suite, SuiteArg::All | SuiteArg::Branching);
    let run_genexp = matches!(suite, SuiteArg::All | SuiteArg::Genexp);
    let run_separation = matches!(suite, SuiteArg::All | SuiteArg::Separation);

    if run_branching {
        let mut checked = 0usize;
        let mut ok = true;
        'outer: for n in 2..=6usize {
            for lambda in lrspin::partition::enumerate_partitions(8, n) {
                if out_of_time(&started) {
                    break 'outer;
                }
                let mut dim_total = 0u64;
                for mu in lrspin::partition::enumerate_partitions(lambda.size(), n) {
                    let muc = mu.conjugate();
                    if muc.part(0) + muc.part(1) > n {
                        continue;
                    }
                    let q = BranchingQuery::new(n, lambda.clone(), mu.clone(), Group::O).unwrap();
                    let d = branching::multiplicity(&q, Method::Direct).unwrap();
                    let b = branching::multiplicity(&q, Method::Barred).unwrap();
                    let f = branching::multiplicity(&q, Method::Flagged).unwrap();
                    checked += 1;
                    if d != b || b != f {
                        ok = false;
                    }
                    if (lambda.size() - mu.size()) % 2 == 0 {
                        dim_total += f as u64 * lrspin::oracle::orthogonal_dimension(&mu, n);
                    }
                }
                // the decomposition is complete: dimensions add up
                if dim_total != lrspin::oracle::gl_dimension(&lambda, n) {
                    ok = false;
                }
            }
        }
        all_ok &= ok;
        report.push(json!({"suite": "branching", "instances": checked, "pass": ok}));
    }

    if run_genexp {
        let mut checked = 0usize;
        let mut ok = true;
        'outer: for m in 1..=3usize {
            for mu in lrspin::partition::enumerate_partitions(5, m) {
                if out_of_time(&started) {
                    break 'outer;
                }
                let odd = genexp::k_so_odd(&mu, m).unwrap();
                let even = genexp::k_so_even(&mu, m);
                checked += 1;
                if even.is_err()
                    || odd.eval(1)
                        != lrspin::oracle::zero_weight_dim(lrspin::oracle::RootSystem::B, m, &mu)
                            as i64
                    || even.as_ref().unwrap().eval(1)
                        != lrspin::oracle::zero_weight_dim(lrspin::oracle::RootSystem::D, m, &mu)
                            as i64
                {
                    ok = false;
                }
            }
        }
        all_ok &= ok;
        report.push(json!({"suite": "genexp", "instances": checked, "pass": ok}));
    }

    if run_separation {
        let mut checked = 0usize;
        let mut ok = true;
        'outer: for n in 2..=5usize {
            for mu in lrspin::partition::enumerate_partitions(5, n) {
                let muc = mu.conjugate();
                if muc.part(0) + muc.part(1) > n {
                    continue;
                }
                for lambda in lrspin::partition::enumerate_partitions(7, n) {
                    if out_of_time(&started) {
                        break 'outer;
                    }
                    let negative = 2 * muc.part(0) > n;
                    for e in lrspin::spinor::enumerate_lrd(&mu, &lambda, n) {
                        checked += 1;
                        match separate(&e, None) {
                            Ok(sep) => {
                                let back = lrspin::separation::general_inverse(
                                    &sep.delta, &sep.tail, &mu, n,
                                );
                                if back.as_ref() != Ok(&e) {
                                    ok = false;
                                }
                                if negative {
                                    // output independent of the padding height
                                    let h = lrspin::separation::default_pad_height(&e);
                                    match separate(&e, Some(h + 2)) {
                                        Ok(again) => ok &= again.columns == sep.columns,
                                        Err(_) => ok = false,
                                    }
                                }
                            }
                            Err(_) => ok = false,
                        }
                    }
                }
            }
        }
        all_ok &= ok;
        report.push(json!({"suite": "separation", "instances": checked, "pass": ok}));
    }

    emit(&json!({"pass": all_ok, "report": report}));
    if !all_ok {
        return Err(Failure::Invariant("verification matrix failed".into()));
    }
    Ok(())
}

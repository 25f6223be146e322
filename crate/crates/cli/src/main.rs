//! `ybe`: classification, enumeration and verification of involutive
//! set-theoretic solutions of the Yang–Baxter equation.
//!
//! Exit codes: 0 ok, 1 a verification check failed, 2 bad parameters or
//! input, 3 resource bound exceeded, 4 conjecture counterexample found,
//! 5 internal consistency failure.

mod group_spec;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use ybe_core::construct::{classify_group, ClassifyOptions, GroupFamily};
use ybe_core::enumerate::{all_solutions, braces_of_order, braces_on_group, conjecture_check};
use ybe_core::format;
use ybe_core::groups::identify_group;
use ybe_core::report::{verify_theorems, SweepConfig};
use ybe_core::{Bounds, Error};

#[derive(Parser, Debug)]
#[command(
    name = "ybe",
    version,
    about = "Braces and involutive Yang-Baxter solutions of small order"
)]
struct Cli {
    /// Largest group order whose subgroups are enumerated.
    #[arg(long, global = true, default_value_t = 400)]
    bound_subgroups: usize,
    /// Largest |A|·|Aut(A)| for holomorph searches.
    #[arg(long, global = true, default_value_t = 5000)]
    bound_holomorph: usize,
    /// Worker threads. Output does not depend on this.
    #[arg(long, global = true, default_value_t = 1)]
    threads: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Indecomposable solutions whose permutation group lies in a family.
    Classify {
        /// One of cyclic-pq, semidirect-pq, pq, cyclic-p2q, noncyclic-p2q,
        /// semidirect-p2q, dihedral-2p2, dihedral-4p.
        #[arg(long)]
        group: String,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: Option<u64>,
    },
    /// Checks the classification statements over a parameter sweep.
    VerifyTheorems(SweepArgs),
    /// Exhaustive censuses of braces or solutions.
    Enumerate(EnumerateArgs),
    /// Looks for solutions of size n with permutation group D_2n.
    Conjecture {
        #[arg(required = true)]
        n: Vec<usize>,
    },
    /// Reads and validates a solution, brace or census file.
    Check { file: PathBuf },
}

/// Each list replaces the default for its family when given.
#[derive(Args, Debug)]
struct SweepArgs {
    #[arg(long, value_name = "P,Q", value_parser = pair)]
    pq: Vec<(u64, u64)>,
    #[arg(long, value_name = "P,Q", value_parser = pair)]
    cyclic_p2q: Vec<(u64, u64)>,
    #[arg(long, value_name = "Q")]
    noncyclic_4q: Vec<u64>,
    #[arg(long, value_name = "P,Q", value_parser = pair)]
    noncyclic_p2q: Vec<(u64, u64)>,
    #[arg(long, value_name = "P")]
    dihedral_2p2: Vec<u64>,
    #[arg(long, value_name = "P")]
    dihedral_4p: Vec<u64>,
    #[arg(long, value_name = "P,Q", value_parser = pair)]
    semidirect_p2q: Vec<(u64, u64)>,
    #[arg(long, value_name = "N")]
    dihedral_n: Vec<usize>,
}

fn pair(s: &str) -> Result<(u64, u64), String> {
    let (a, b) = s.split_once(',').ok_or_else(|| format!("expected P,Q, got `{s}`"))?;
    let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| format!("`{t}` is not a number"));
    Ok((parse(a)?, parse(b)?))
}

impl SweepArgs {
    fn config(self) -> SweepConfig {
        fn or<T>(given: Vec<T>, default: Vec<T>) -> Vec<T> {
            if given.is_empty() {
                default
            } else {
                given
            }
        }
        let d = SweepConfig::default();
        SweepConfig {
            pq: or(self.pq, d.pq),
            cyclic_p2q: or(self.cyclic_p2q, d.cyclic_p2q),
            noncyclic_4q: or(self.noncyclic_4q, d.noncyclic_4q),
            noncyclic_p2q: or(self.noncyclic_p2q, d.noncyclic_p2q),
            dihedral_2p2: or(self.dihedral_2p2, d.dihedral_2p2),
            dihedral_4p: or(self.dihedral_4p, d.dihedral_4p),
            semidirect_p2q: or(self.semidirect_p2q, d.semidirect_p2q),
            dihedral_sizes: or(self.dihedral_n, d.dihedral_sizes),
            consistency_order: d.consistency_order,
        }
    }
}

#[derive(Args, Debug)]
#[command(group(clap::ArgGroup::new("mode").required(true).args(["braces", "solutions"])))]
struct EnumerateArgs {
    #[arg(long)]
    braces: bool,
    #[arg(long)]
    solutions: bool,
    /// Multiplicative group for --braces: Z12, D12, Z3xZ2xZ2, Z7:Z3.
    #[arg(long, conflicts_with = "solutions")]
    group: Option<String>,
    /// Order for --braces without --group.
    #[arg(long, conflicts_with_all = ["solutions", "group"])]
    order: Option<usize>,
    /// Size for --solutions.
    #[arg(long, conflicts_with = "braces")]
    n: Option<usize>,
    #[arg(long, requires = "solutions")]
    indecomposable: bool,
    /// Census file; without it the census goes to standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    msg: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Domain(_) | Error::Usage(_) | Error::Validation(_) | Error::Unsupported(_) | Error::Parse { .. } => {
                2
            }
            Error::Resource { .. } => 3,
            Error::Construction(_) | Error::Inconsistent(_) => 5,
        };
        Failure {
            code,
            msg: e.to_string(),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure {
        code: 2,
        msg: msg.into(),
    }
}

/// Standard output text and exit code of a completed command.
struct Outcome {
    stdout: String,
    code: u8,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome { stdout, code: 0 }
    }
}

fn classify(group: &str, p: u64, q: Option<u64>, bounds: &Bounds) -> Result<Outcome, Failure> {
    let family = GroupFamily::parse(group).ok_or_else(|| {
        let names: Vec<&str> = GroupFamily::ALL.iter().map(|f| f.name()).collect();
        usage(format!(
            "unknown group family `{group}`; expected one of {}",
            names.join(", ")
        ))
    })?;
    if family.takes_q() && q.is_none() {
        return Err(usage(format!("group family {group} needs --q")));
    }
    let census = classify_group(family, p, q, bounds, ClassifyOptions::default())?;
    let mut out = String::new();
    match census.q {
        Some(q) => writeln!(out, "group {family} p={p} q={q}"),
        None => writeln!(out, "group {family} p={p}"),
    }
    .expect("writing to a string");
    for row in &census.rows {
        writeln!(
            out,
            "brace {}: generating orbits {}, pairs {}, classes {}, sizes {}",
            row.brace_id,
            row.generating_orbits,
            row.pairs,
            row.classes(),
            join(&row.sizes())
        )
        .expect("writing to a string");
    }
    writeln!(out, "total: {}", census.total()).expect("writing to a string");
    writeln!(out, "sizes: {}", join(&census.sizes())).expect("writing to a string");
    Ok(Outcome::ok(out))
}

fn join(v: &[usize]) -> String {
    if v.is_empty() {
        return "-".into();
    }
    v.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn enumerate(args: EnumerateArgs, bounds: &Bounds) -> Result<Outcome, Failure> {
    let mut summary = String::new();
    let census = if args.braces {
        let census = match (&args.group, args.order) {
            (Some(spec), _) => braces_on_group(&group_spec::parse_group(spec).map_err(usage)?, bounds)?,
            (None, Some(n)) => braces_of_order(n, bounds)?,
            (None, None) => return Err(usage("--braces needs --group or --order")),
        };
        match &census.target {
            Some(d) => writeln!(
                summary,
                "braces of order {} with multiplicative group {d}: {}",
                census.order,
                census.braces.len()
            ),
            None => writeln!(summary, "braces of order {}: {}", census.order, census.braces.len()),
        }
        .expect("writing to a string");
        for (i, b) in census.braces.iter().enumerate() {
            let mult = identify_group(&b.mult_group()?);
            writeln!(summary, "  {i}: additive {}, multiplicative {mult}", b.additive()).expect("writing to a string");
        }
        format::write_brace_census(&census)
    } else {
        let n = args.n.ok_or_else(|| usage("--solutions needs --n"))?;
        let census = all_solutions(n, args.indecomposable)?;
        if args.indecomposable {
            writeln!(summary, "indecomposable solutions of size {n}: {}", census.count())
        } else {
            writeln!(
                summary,
                "solutions of size {n}: {} ({} indecomposable)",
                census.count(),
                census.indecomposable_count()
            )
        }
        .expect("writing to a string");
        for (i, s) in census.solutions.iter().enumerate() {
            if s.is_indecomposable() {
                let g = s.permutation_group().to_table();
                writeln!(
                    summary,
                    "  {i}: indecomposable, permutation group {}",
                    identify_group(&g)
                )
                .expect("writing to a string");
            }
        }
        format::write_solution_census(&census)
    };
    match args.out {
        Some(path) => {
            std::fs::write(&path, census).map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            writeln!(summary, "census written to {}", path.display()).expect("writing to a string");
            Ok(Outcome::ok(summary))
        }
        None => {
            eprint!("{summary}");
            Ok(Outcome::ok(census))
        }
    }
}

fn conjecture(ns: &[usize], bounds: &Bounds) -> Result<Outcome, Failure> {
    let mut out = String::new();
    let mut counterexample = None;
    for &n in ns {
        let r = conjecture_check(n, bounds)?;
        if let Some(reason) = &r.skipped {
            writeln!(out, "n={n}: skipped(bound): {reason}").expect("writing to a string");
            continue;
        }
        let sizes: Vec<usize> = r.sizes.iter().flatten().copied().collect();
        writeln!(
            out,
            "n={n}: braces {}, solutions {}, sizes {}, dichotomy {}, {}",
            r.braces,
            r.solutions(),
            join(&sizes),
            if r.dichotomy_holds() { "holds" } else { "fails" },
            if r.counterexample.is_some() {
                "counterexample found"
            } else {
                "no solution of size n"
            }
        )
        .expect("writing to a string");
        if counterexample.is_none() {
            counterexample = r.counterexample;
        }
    }
    match counterexample {
        Some(s) => {
            out.push_str(&format::write_solution(&s));
            Ok(Outcome { stdout: out, code: 4 })
        }
        None => Ok(Outcome::ok(out)),
    }
}

fn check(path: &PathBuf, bounds: &Bounds) -> Result<Outcome, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let header = text.lines().next().unwrap_or_default();
    let summary = match header {
        "ybe1 solution" => {
            let s = format::parse_solution(&text)?;
            format!(
                "solution of size {}, {}",
                s.n(),
                if s.is_indecomposable() {
                    "indecomposable"
                } else {
                    "decomposable"
                }
            )
        }
        "ybe1 brace" => {
            let b = format::parse_brace(&text, bounds)?;
            format!("brace {} of order {}", b.id(), b.order())
        }
        "ybe1 solution-census" => {
            let c = format::parse_solution_census(&text)?;
            format!("solution census of size {}: {} entries", c.n, c.count())
        }
        "ybe1 brace-census" => {
            let c = format::parse_brace_census(&text, bounds)?;
            format!("brace census of order {}: {} entries", c.order, c.braces.len())
        }
        other => {
            return Err(Failure::from(Error::Parse {
                line: 1,
                msg: format!("unknown header `{other}`"),
            }))
        }
    };
    Ok(Outcome::ok(summary + "\n"))
}

fn run(cli: Cli) -> Result<Outcome, Failure> {
    if cli.threads == 0 {
        return Err(usage("--threads must be at least 1"));
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build_global()
        .map_err(|e| Failure {
            code: 5,
            msg: format!("cannot start the thread pool: {e}"),
        })?;
    let bounds = Bounds {
        subgroups: cli.bound_subgroups,
        holomorph: cli.bound_holomorph,
        ..Bounds::default()
    };
    match cli.command {
        Command::Classify { group, p, q } => classify(&group, p, q, &bounds),
        Command::VerifyTheorems(args) => {
            let report = verify_theorems(&args.config(), &bounds);
            let code = if report.all_passed() { 0 } else { 1 };
            Ok(Outcome {
                stdout: report.render(),
                code,
            })
        }
        Command::Enumerate(args) => enumerate(args, &bounds),
        Command::Conjecture { n } => conjecture(&n, &bounds),
        Command::Check { file } => check(&file, &bounds),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            ExitCode::from(outcome.code)
        }
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

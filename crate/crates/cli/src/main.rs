use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use ringlab_core::derivations::{d_semiprime_oracle, thm21_criterion};
use ringlab_core::funcfield::{translates_invertible, Translates};
use ringlab_core::predicates::{self, x_prime, x_semiprime};
use ringlab_core::subset_expr::{eval_subset, evaluate_subset, SetEnv, SubsetExpr};
use ringlab_core::{build_ring, AnyRing, ElemSet, InfRing, Ring, RingSpec};
use ringlab_harness::{enumerate_additive_subgroups, Catalog, Report, Suite, SubgroupFilter};

#[derive(Parser)]
#[command(name = "ringlab", version, about = "X-semiprime and X-prime deciders over small rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring properties
    Ring {
        #[command(subcommand)]
        command: RingCommand,
    },
    /// Evaluate a subset expression
    Set {
        spec: String,
        #[arg(long)]
        expr: String,
        /// Print every member, one per line
        #[arg(long, conflicts_with = "size")]
        list: bool,
        /// Print only the number of members
        #[arg(long)]
        size: bool,
    },
    /// Decide X-semiprimeness or X-primeness
    Check {
        predicate: Predicate,
        spec: String,
        /// Subset expression for X
        #[arg(long)]
        x: String,
        /// Print the canonical witness of a failure
        #[arg(long)]
        witness: bool,
    },
    /// Semiprimeness with respect to the inner derivation ad_b
    Derivation {
        spec: String,
        /// Element expression for b
        #[arg(long)]
        b: String,
        /// Only the annihilator criterion for d(R)
        #[arg(long, conflicts_with_all = ["oracle", "on"])]
        criterion: bool,
        /// Only the exhaustive decision
        #[arg(long)]
        oracle: bool,
        /// Decide d(X)-semiprimeness for this subset instead of R
        #[arg(long)]
        on: Option<String>,
    },
    /// Run registered checks
    Verify {
        /// A check id, or `all`
        target: String,
        /// Ring specs, one per line or as a JSON array
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Write the JSON report here
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        parallel: bool,
    },
    /// Enumerate additive subgroups or Lie ideals
    Lattice {
        spec: String,
        #[arg(long, default_value = "lie")]
        filter: SubgroupFilter,
        /// Decide X-semiprime and X-prime for each member, bound as `L` in X
        #[arg(long)]
        classify_x: Option<String>,
    },
}

#[derive(Subcommand)]
enum RingCommand {
    Info { spec: String },
}

#[derive(Clone, Copy, ValueEnum)]
enum Predicate {
    Xsemiprime,
    Xprime,
}

fn parse_ring(spec: &str) -> Result<AnyRing> {
    let parsed: RingSpec = spec.parse().with_context(|| format!("ring spec `{spec}`"))?;
    Ok(build_ring(&parsed)?)
}

fn finite(spec: &str) -> Result<Ring> {
    match parse_ring(spec)? {
        AnyRing::Finite(r) => Ok(r),
        AnyRing::Infinite(_) => bail!("{spec} is not enumerable"),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn ring_info(spec: &str) -> Result<bool> {
    let ring = parse_ring(spec)?;
    println!("ring                   {}", ring.spec());
    println!("cardinality            {}", ring.cardinality());
    println!("characteristic         {}", ring.characteristic());
    let AnyRing::Finite(r) = &ring else {
        println!("enumerable             no");
        return Ok(true);
    };
    let c = predicates::classify_ring(r)?;
    println!("primeness              {}", c.primeness.label());
    for (name, v) in [
        ("commutative", c.commutative),
        ("reduced", c.reduced),
        ("domain", c.domain),
        ("regular", c.regular),
        ("exceptional", c.exceptional),
        ("nontrivial idempotent", c.has_nontrivial_idempotent),
    ] {
        println!("{name:<23}{}", yes_no(v));
    }
    for x in ["Id", "U", "N", "Z", "E", "[E,R]", "[R,R]"] {
        println!("{:<23}{}", format!("|{x}|"), evaluate_subset(r, x)?.len());
    }
    Ok(true)
}

fn set(spec: &str, expr: &str, list: bool, size: bool) -> Result<bool> {
    let r = finite(spec)?;
    let s = evaluate_subset(&r, expr)?;
    if size {
        println!("{}", s.len());
    } else if list {
        for &x in s.members() {
            println!("{}", r.render(x));
        }
    } else {
        println!("{} ({} elements)", s.render(&r), s.len());
    }
    Ok(true)
}

fn check(predicate: Predicate, spec: &str, x: &str, witness: bool) -> Result<bool> {
    let r = finite(spec)?;
    let set = evaluate_subset(&r, x)?;
    let (name, v) = match predicate {
        Predicate::Xsemiprime => ("semiprime", x_semiprime(&r, &set)?),
        Predicate::Xprime => ("prime", x_prime(&r, &set)?),
    };
    println!("{} is {}{x}-{name}", r.spec(), if v.holds { "" } else { "not " });
    if witness {
        if let Some(w) = v.witness_text(&r) {
            println!("witness {w}");
        }
    }
    Ok(v.holds)
}

/// For 2x2 matrices over F_2(t): ad_b gives a d(R)-semiprime ring iff
/// every translate b + β is invertible.
fn infinite_criterion(r: &InfRing, b: &str) -> Result<bool> {
    let v = r.evaluate(b)?;
    let m = r.as_matrix(&v)?;
    Ok(match translates_invertible(&m)? {
        Translates::Yes => true,
        Translates::No => false,
        Translates::Undecided => bail!("no decision procedure for b with nonzero trace"),
    })
}

fn derivation(spec: &str, b: &str, criterion: bool, oracle: bool, on: Option<&str>) -> Result<bool> {
    let r = match parse_ring(spec)? {
        AnyRing::Infinite(r) => {
            if oracle || on.is_some() {
                bail!("{spec} is not enumerable; only --criterion is available");
            }
            let c = infinite_criterion(&r, b)?;
            println!("criterion  d(R)-semiprime: {}", yes_no(c));
            return Ok(c);
        }
        AnyRing::Finite(r) => r,
    };
    let elem = r.evaluate(b)?;
    let target = match on {
        Some(x) => evaluate_subset(&r, x)?,
        None => ElemSet::full(&r),
    };
    let label = on.unwrap_or("R");
    let crit = if oracle || on.is_some() {
        None
    } else {
        Some(thm21_criterion(&r, elem)?)
    };
    let exact = if criterion {
        None
    } else {
        Some(d_semiprime_oracle(&r, elem, &target)?)
    };
    if let Some(c) = crit {
        println!("criterion  d({label})-semiprime: {}", yes_no(c));
    }
    if let Some(v) = &exact {
        println!("oracle     d({label})-semiprime: {}", yes_no(v.holds));
        if let Some(w) = v.witness_text(&r) {
            println!("witness    {w}");
        }
    }
    match (crit, exact) {
        (Some(c), Some(v)) if c != v.holds => {
            eprintln!("criterion and oracle disagree");
            Ok(false)
        }
        (_, Some(v)) => Ok(v.holds),
        (Some(c), None) => Ok(c),
        (None, None) => unreachable!("criterion conflicts with --oracle and --on"),
    }
}

fn verify(target: &str, catalog: Option<&PathBuf>, json: Option<&PathBuf>, parallel: bool) -> Result<bool> {
    let catalog = match catalog {
        Some(path) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Catalog::parse(&text)?
        }
        None => Catalog::default(),
    };
    let suite = Suite::new(catalog)?;
    let report = if target == "all" {
        suite.run_all(parallel)
    } else {
        Report::new(suite.catalog().spec_strings(), suite.run_check(target)?)
    };
    print!("{}", report.to_table());
    if let Some(path) = json {
        std::fs::write(path, report.to_json()).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.passed())
}

fn lattice(spec: &str, filter: SubgroupFilter, classify_x: Option<&str>) -> Result<bool> {
    let r = finite(spec)?;
    let groups = enumerate_additive_subgroups(&r, filter)?;
    let x = classify_x.map(SubsetExpr::parse).transpose()?;
    for l in &groups {
        let mut line = format!("{:>5}  {}", l.len(), l.render(&r));
        if let Some(x) = &x {
            let env = SetEnv::from([("L".to_string(), l.clone())]);
            let set = eval_subset(&r, x, &env)?;
            let s = x_semiprime(&r, &set)?.holds;
            let p = x_prime(&r, &set)?.holds;
            line.push_str(&format!("  semiprime={} prime={}", yes_no(s), yes_no(p)));
        }
        println!("{line}");
    }
    println!("{} {}", groups.len(), filter);
    Ok(true)
}

fn run(cli: Cli) -> Result<bool> {
    match cli.command {
        Command::Ring {
            command: RingCommand::Info { spec },
        } => ring_info(&spec),
        Command::Set { spec, expr, list, size } => set(&spec, &expr, list, size),
        Command::Check {
            predicate,
            spec,
            x,
            witness,
        } => check(predicate, &spec, &x, witness),
        Command::Derivation {
            spec,
            b,
            criterion,
            oracle,
            on,
        } => derivation(&spec, &b, criterion, oracle, on.as_deref()),
        Command::Verify {
            target,
            catalog,
            json,
            parallel,
        } => verify(&target, catalog.as_ref(), json.as_ref(), parallel),
        Command::Lattice {
            spec,
            filter,
            classify_x,
        } => lattice(&spec, filter, classify_x.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

//! Command-line interface for solving equations and decomposing their
//! solution sets over linearly ordered semilattices.
//!
//! Exit codes: 0 success, 1 verification failure, 2 parse error,
//! 3 enumeration cap exceeded, 4 unsupported regime (n > l).

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use losemilat::chain::{decompose, ChainComponent};
use losemilat::counting::{self, decimal_string, irr_formula, KIndex};
use losemilat::engine::{
    coordinate_semilattice, enumerate_closed_sets, is_irreducible, is_irreducible_by_cover,
    solutions, solutions_of_system, brute_decompose,
};
use losemilat::parse::parse_constraint;
use losemilat::{AlgebraicSet, Caps, Equation, Error, Kind, SemilatticeContext};
use num::BigInt;
use serde::Serialize;

#[derive(Parser)]
#[command(name = "losemilat", version, about = "Equations over linearly ordered semilattices")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Suppress point listings; print counts and summaries only.
    #[arg(long, global = true)]
    quiet: bool,

    /// Enumeration cap on l^n (default 10^7; LOSEMILAT_MAX_POINTS also
    /// overrides the default).
    #[arg(long, global = true)]
    max_points: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Ambient {
    /// Semilattice order l.
    #[arg(long)]
    l: u32,

    /// Ambient variable count (default: max variable index in the input).
    #[arg(long)]
    n: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// List or count the solutions of a system of constraints.
    Solve {
        #[command(flatten)]
        ambient: Ambient,
        /// Constraints like "x1x2 = x1x3" or "x1 <= x2".
        #[arg(required = true)]
        constraints: Vec<String>,
    },
    /// Irreducible decomposition of a single equation's solution set.
    Decompose {
        #[command(flatten)]
        ambient: Ambient,
        equation: String,
    },
    /// Coordinate semilattice of the solution set of a constraint system.
    Gamma {
        #[command(flatten)]
        ambient: Ambient,
        #[arg(required = true)]
        constraints: Vec<String>,
    },
    /// Decompose every equation of Eq(n): the full table.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
    },
    /// Equation counts and the average number of irreducible components.
    Stats {
        #[arg(long)]
        n: u32,
    },
    /// Run the verification suite (lemmas, oracle agreement, identities).
    Verify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        l: u32,
    },
    /// List all equations of Eq(n).
    Enumerate {
        #[arg(long)]
        n: u32,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut caps = Caps::from_env();
    if let Some(cap) = cli.max_points {
        caps.max_points = cap;
    }
    match run(&cli, &caps) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse { .. } => 2,
        Error::InstanceTooLarge { .. } | Error::GuardViolation(_) => 3,
        Error::UnsupportedRegime { .. } => 4,
        _ => 1,
    }
}

fn run(cli: &Cli, caps: &Caps) -> Result<ExitCode, Error> {
    match &cli.command {
        Command::Solve { ambient, constraints } => {
            cmd_solve(ambient, constraints, cli, caps)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Decompose { ambient, equation } => {
            cmd_decompose(ambient, equation, cli, caps)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Gamma { ambient, constraints } => {
            cmd_gamma(ambient, constraints, cli, caps)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Table { n, l } => {
            cmd_table(*n, *l, cli, caps)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { n } => {
            cmd_stats(*n, cli)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { n, l } => {
            let all_pass = cmd_verify(*n, *l, cli, caps)?;
            Ok(if all_pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::Enumerate { n } => {
            cmd_enumerate(*n, cli)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_system(texts: &[String]) -> Result<Vec<Equation>, Error> {
    texts.iter().map(|t| parse_constraint(t)).collect()
}

fn ambient_context(ambient: &Ambient, eqs: &[Equation]) -> Result<SemilatticeContext, Error> {
    let max_var = eqs.iter().map(|e| e.max_var()).max().unwrap_or(1);
    let n = ambient.n.unwrap_or(max_var);
    if n < max_var {
        return Err(Error::UniverseMismatch(format!(
            "--n {n} is smaller than the largest variable index {max_var}"
        )));
    }
    SemilatticeContext::new(ambient.l, n)
}

fn cmd_solve(ambient: &Ambient, texts: &[String], cli: &Cli, caps: &Caps) -> Result<(), Error> {
    let eqs = parse_system(texts)?;
    let ctx = ambient_context(ambient, &eqs)?;
    let set = solutions_of_system(&eqs, ctx, caps)?;
    if cli.json {
        println!("{}", serde_json::to_string(&set).expect("serializable"));
    } else {
        println!("{} solutions over L_{}^{}", set.len(), ctx.order(), ctx.arity());
        if !cli.quiet {
            for p in set.points() {
                println!("{p}");
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct DecomposeReport {
    equation: String,
    components: Vec<ComponentReport>,
    count: usize,
    formula: String,
}

#[derive(Serialize)]
struct ComponentReport {
    #[serde(flatten)]
    component: ChainComponent,
    chain: String,
    witness: Vec<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    point_count: Option<usize>,
}

fn component_reports(
    comps: &[ChainComponent],
    ctx: SemilatticeContext,
    caps: &Caps,
    with_counts: bool,
) -> Result<Vec<ComponentReport>, Error> {
    comps
        .iter()
        .map(|comp| {
            let point_count = if with_counts {
                Some(comp.point_set(ctx, caps)?.len())
            } else {
                None
            };
            Ok(ComponentReport {
                chain: comp.chain_notation(),
                witness: comp.witness_point(&ctx)?.coords().to_vec(),
                point_count,
                component: comp.clone(),
            })
        })
        .collect()
}

fn cmd_decompose(ambient: &Ambient, text: &str, cli: &Cli, caps: &Caps) -> Result<(), Error> {
    let eq = parse_constraint(text)?;
    let ctx = ambient_context(ambient, std::slice::from_ref(&eq))?;
    let comps = decompose(&eq, &ctx)?;
    let (k1, k2, n) = eq.classify();
    let formula = irr_formula(&KIndex::new(k1, k2, n)?);
    if BigInt::from(comps.len()) != formula {
        return Err(Error::InternalInconsistency(format!(
            "decomposition yields {} components but the formula gives {formula}",
            comps.len()
        )));
    }
    let with_counts = !cli.quiet && ctx.point_count() <= caps.max_points as u128;
    let reports = component_reports(&comps, ctx, caps, with_counts)?;
    if cli.json {
        let report = DecomposeReport {
            equation: eq.to_string(),
            count: comps.len(),
            formula: formula.to_string(),
            components: reports,
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!("{eq}  over L_{}^{}", ctx.order(), ctx.arity());
        for (i, r) in reports.iter().enumerate() {
            let sigma: Vec<String> = r.component.sigma().as_slice().iter().map(|v| v.to_string()).collect();
            let witness: Vec<String> = r.witness.iter().map(|c| format!("a{c}")).collect();
            let count = r
                .point_count
                .map(|c| format!(", {c} points"))
                .unwrap_or_default();
            println!(
                "  component {}: kind {}, sigma ({}), {}  witness ({}){}",
                i + 1,
                r.component.kind().as_u8(),
                sigma.join(","),
                r.chain,
                witness.join(","),
                count
            );
        }
        println!("components: {} (formula: {formula})", comps.len());
    }
    Ok(())
}

#[derive(Serialize)]
struct GammaReport {
    classes: Vec<Vec<String>>,
    /// Pairs `[i, j]` with class i strictly below class j.
    order: Vec<[usize; 2]>,
    chain: bool,
}

fn cmd_gamma(ambient: &Ambient, texts: &[String], cli: &Cli, caps: &Caps) -> Result<(), Error> {
    let eqs = parse_system(texts)?;
    let ctx = ambient_context(ambient, &eqs)?;
    let set = solutions_of_system(&eqs, ctx, caps)?;
    let gamma = coordinate_semilattice(&set)?;
    let classes: Vec<Vec<String>> = gamma
        .classes()
        .iter()
        .map(|c| c.iter().map(|t| t.to_string()).collect())
        .collect();
    let mut order = Vec::new();
    for i in 0..gamma.class_count() {
        for j in 0..gamma.class_count() {
            if i != j && gamma.leq(i, j) {
                order.push([i, j]);
            }
        }
    }
    if cli.json {
        let report = GammaReport {
            classes,
            order,
            chain: gamma.is_chain(),
        };
        println!("{}", serde_json::to_string(&report).expect("serializable"));
    } else {
        println!(
            "Gamma of a {}-point set over L_{}^{}: {} classes{}",
            set.len(),
            ctx.order(),
            ctx.arity(),
            gamma.class_count(),
            if gamma.is_chain() { " (chain)" } else { "" }
        );
        for (i, members) in classes.iter().enumerate() {
            println!("  [{}] {{{}}}", i, members.join(", "));
        }
        for [i, j] in &order {
            println!("  [{i}] < [{j}]");
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct TableRow {
    equation: String,
    components: Vec<String>,
    count: usize,
}

fn cmd_table(n: u32, l: u32, cli: &Cli, _caps: &Caps) -> Result<(), Error> {
    if n > 4 {
        return Err(Error::GuardViolation(format!(
            "table: n={n} exceeds materialization cap of 4"
        )));
    }
    let ctx = SemilatticeContext::new(l, n)?;
    if n > l {
        return Err(Error::UnsupportedRegime { n, l });
    }
    let mut rows = Vec::new();
    let mut total = 0usize;
    for eq in counting::enumerate_eq(n)? {
        let comps = decompose(&eq, &ctx)?;
        total += comps.len();
        rows.push(TableRow {
            equation: eq.to_string(),
            components: comps.iter().map(|c| c.chain_notation()).collect(),
            count: comps.len(),
        });
    }
    if cli.json {
        println!("{}", serde_json::to_string(&rows).expect("serializable"));
    } else {
        let width = rows.iter().map(|r| r.equation.len()).max().unwrap_or(0);
        for r in &rows {
            println!(
                "{:width$} | {} | {}",
                r.equation,
                r.components.join(" U "),
                r.count,
            );
        }
        println!("{} equations, {} components in total", rows.len(), total);
    }
    Ok(())
}

fn cmd_stats(n: u32, cli: &Cli) -> Result<(), Error> {
    let stats = counting::stats(n)?;
    if cli.json {
        println!("{}", serde_json::to_string(&stats).expect("serializable"));
    } else {
        let avg = counting::avg_irr(n)?;
        let ratio = counting::asymptotic_ratio(n)?;
        println!("Eq({n}): {} equations", stats.total_equations);
        println!(
            "avg_irr({n}) = {}/{} = {}",
            stats.avg_irr.num,
            stats.avg_irr.den,
            trim_decimal(&decimal_string(&avg, 12))
        );
        println!(
            "avg_irr({n})/n! = {} (limit 4/9 = {})",
            trim_decimal(&decimal_string(&ratio, 12)),
            trim_decimal(&decimal_string(
                &num::BigRational::new(BigInt::from(4), BigInt::from(9)),
                12
            ))
        );
    }
    Ok(())
}

fn trim_decimal(s: &str) -> String {
    if !s.contains('.') || s.contains('e') {
        return s.to_string();
    }
    let trimmed = s.trim_end_matches('0').trim_end_matches('.');
    trimmed.to_string()
}

fn cmd_enumerate(n: u32, cli: &Cli) -> Result<(), Error> {
    let eqs = counting::enumerate_eq(n)?;
    if cli.json {
        let list: Vec<String> = eqs.iter().map(|e| e.to_string()).collect();
        println!("{}", serde_json::to_string(&list).expect("serializable"));
    } else {
        for eq in &eqs {
            println!("{eq}");
        }
    }
    Ok(())
}

struct Verifier {
    quiet: bool,
    failures: usize,
}

impl Verifier {
    fn check(&mut self, name: &str, outcome: Result<Result<(), String>, Error>) -> Result<(), Error> {
        match outcome {
            Ok(Ok(())) => {
                if !self.quiet {
                    println!("ok   {name}");
                }
            }
            Ok(Err(counterexample)) => {
                println!("FAIL {name}: {counterexample}");
                self.failures += 1;
            }
            Err(e) => return Err(e),
        }
        Ok(())
    }

    fn skip(&self, name: &str, reason: &str) {
        if !self.quiet {
            println!("skip {name} ({reason})");
        }
    }
}

fn cmd_verify(n: u32, l: u32, cli: &Cli, caps: &Caps) -> Result<bool, Error> {
    let ctx = SemilatticeContext::new(l, n)?;
    if n > l {
        return Err(Error::UnsupportedRegime { n, l });
    }
    let mut v = Verifier {
        quiet: cli.quiet,
        failures: 0,
    };
    let eqs = counting::enumerate_eq(n)?;

    let enumerable = ctx.point_count() <= caps.max_points as u128 && n <= 6;

    if enumerable {
        // union of components reproduces the solution set
        v.check("union-of-components", Ok((|| {
            for eq in &eqs {
                let y = solutions(eq, ctx, caps).map_err(|e| e.to_string())?;
                let mut union = AlgebraicSet::empty(ctx);
                for comp in decompose(eq, &ctx).map_err(|e| e.to_string())? {
                    union = union.union(&comp.point_set(ctx, caps).map_err(|e| e.to_string())?);
                }
                if union != y {
                    return Err(format!("equation {eq}"));
                }
            }
            Ok(())
        })()))?;

        // components are pairwise incomparable, witnesses separate them
        v.check("witness-separation", Ok((|| {
            for eq in &eqs {
                let comps = decompose(eq, &ctx).map_err(|e| e.to_string())?;
                let sets: Vec<AlgebraicSet> = comps
                    .iter()
                    .map(|c| c.point_set(ctx, caps).unwrap())
                    .collect();
                for (i, comp) in comps.iter().enumerate() {
                    let w = comp.witness_point(&ctx).map_err(|e| e.to_string())?;
                    for (j, set) in sets.iter().enumerate() {
                        if set.contains(&w) != (i == j) {
                            return Err(format!("equation {eq}, witness {w}"));
                        }
                        if i != j && sets[i].is_subset(set) {
                            return Err(format!("equation {eq}: component containment"));
                        }
                    }
                }
            }
            Ok(())
        })()))?;

        // every component is irreducible with a chain coordinate semilattice
        v.check("component-irreducibility", Ok((|| {
            for eq in &eqs {
                for comp in decompose(eq, &ctx).map_err(|e| e.to_string())? {
                    let set = comp.point_set(ctx, caps).map_err(|e| e.to_string())?;
                    if !is_irreducible(&set).map_err(|e| e.to_string())? {
                        return Err(format!("equation {eq}, sigma {:?}", comp.sigma().as_slice()));
                    }
                    let gamma = coordinate_semilattice(&set).map_err(|e| e.to_string())?;
                    let expected = match comp.kind() {
                        Kind::First => n as usize,
                        Kind::Second => n as usize - 1,
                    };
                    if !gamma.is_chain() || gamma.class_count() != expected {
                        return Err(format!("equation {eq}: Gamma not a {expected}-chain"));
                    }
                }
            }
            Ok(())
        })()))?;
    } else {
        v.skip("union-of-components", "instance too large to enumerate");
        v.skip("witness-separation", "instance too large to enumerate");
        v.skip("component-irreducibility", "instance too large to enumerate");
    }

    if n <= 3 && l <= 4 {
        v.check("brute-force-decomposition-oracle", Ok((|| {
            use std::collections::BTreeSet;
            for eq in &eqs {
                let y = solutions(eq, ctx, caps).map_err(|e| e.to_string())?;
                let by_theorem: BTreeSet<AlgebraicSet> = decompose(eq, &ctx)
                    .map_err(|e| e.to_string())?
                    .iter()
                    .map(|c| c.point_set(ctx, caps).unwrap())
                    .collect();
                let by_oracle: BTreeSet<AlgebraicSet> = brute_decompose(&y, caps)
                    .map_err(|e| e.to_string())?
                    .into_iter()
                    .collect();
                if by_theorem != by_oracle {
                    return Err(format!("equation {eq}"));
                }
            }
            Ok(())
        })()))?;

        v.check("irreducibility-cross-oracle", Ok((|| {
            for set in enumerate_closed_sets(ctx, caps).map_err(|e| e.to_string())? {
                if set.is_empty() || set.len() > 12 {
                    continue;
                }
                let by_gamma = is_irreducible(&set).map_err(|e| e.to_string())?;
                let by_cover = is_irreducible_by_cover(&set, caps).map_err(|e| e.to_string())?;
                if by_gamma != by_cover {
                    return Err(format!("closed set of {} points", set.len()));
                }
            }
            Ok(())
        })()))?;
    } else {
        v.skip("brute-force-decomposition-oracle", "guard: needs n <= 3, l <= 4");
        v.skip("irreducibility-cross-oracle", "guard: needs n <= 3, l <= 4");
    }

    v.check("component-count-formula", Ok((|| {
        for eq in &eqs {
            let (k1, k2, nn) = eq.classify();
            let formula = irr_formula(&KIndex::new(k1, k2, nn).map_err(|e| e.to_string())?);
            let counted = decompose(eq, &ctx).map_err(|e| e.to_string())?.len();
            if formula != BigInt::from(counted) {
                return Err(format!("equation {eq}: formula {formula}, counted {counted}"));
            }
        }
        Ok(())
    })()))?;

    v.check("equation-total", Ok((|| {
        let total = counting::eq_total(n).map_err(|e| e.to_string())?;
        if BigInt::from(eqs.len()) != total {
            return Err(format!("enumerated {} equations, formula gives {total}", eqs.len()));
        }
        Ok(())
    })()))?;

    if n >= 2 {
        v.check("average-identity", Ok((|| {
            let closed = counting::avg_irr(n).map_err(|e| e.to_string())?;
            let summed = counting::avg_irr_by_sum(n).map_err(|e| e.to_string())?;
            if closed != summed {
                return Err(format!("{closed} != {summed}"));
            }
            Ok(())
        })()))?;
    }

    if v.failures == 0 {
        if !cli.quiet {
            println!("all checks passed (n={n}, l={l})");
        }
        Ok(true)
    } else {
        println!("{} check(s) failed", v.failures);
        Ok(false)
    }
}

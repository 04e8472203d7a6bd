//! Command-line front end for `toric-core`.
//!
//! Exit codes: 0 success, 1 mathematical rejection or a failed
//! certification (the witness is printed), 2 parse or usage error.

pub mod file;

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use toric_core::oracle::{certify, enumerate_kernel_binomials};
use toric_core::sum::sum_family_with;
use toric_core::{
    Binomial, DegreeBound, IdealFamilyGraph, Parametrization, SumOptions, VerdictStatus,
};

pub use file::{parse_ideal_file, print_ideal_file, IdealBlock, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_REJECTED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "toric", version, about = "Toric ideals from integer parametrizations")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Dimension (matrix rank) of every ideal.
    Dim { file: PathBuf },
    /// Homogeneity certificate of every ideal.
    Homog { file: PathBuf },
    /// Kernel binomials up to a degree bound.
    Kernel {
        file: PathBuf,
        /// Only this ideal.
        #[arg(long)]
        ideal: Option<String>,
        /// Defaults to the largest generator degree plus two.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: Option<u32>,
    },
    /// Maximal-rank parametrization with one variable pinned to a single
    /// parameter.
    Normalize {
        file: PathBuf,
        /// May be omitted when the file holds one ideal.
        #[arg(long)]
        ideal: Option<String>,
        #[arg(long)]
        pin: String,
    },
    /// Family graph: ideals sharing exactly one variable are joined.
    Graph { file: PathBuf },
    /// Sum of all ideals in the file.
    Sum {
        file: PathBuf,
        /// Check the result against the `gen` lines by brute force.
        #[arg(long)]
        certify: bool,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_degree: Option<u32>,
        /// Extra degree allowed while rewriting with unbalanced generators.
        #[arg(long, default_value_t = DegreeBound::DEFAULT_SLACK)]
        slack: u32,
    },
}

/// Result of one invocation.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_from_args<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli.command),
        Err(e) => {
            let text = e.render().to_string();
            if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            }
        }
    }
}

fn load(path: &PathBuf) -> Result<Vec<IdealBlock>, Outcome> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    parse_ideal_file(&text).map_err(|e| Outcome::fail(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn run(command: Command) -> Outcome {
    let result = match command {
        Command::Dim { file } => load(&file).map(|b| dim(&b)),
        Command::Homog { file } => load(&file).map(|b| homog(&b)),
        Command::Kernel {
            file,
            ideal,
            max_degree,
        } => load(&file).and_then(|b| kernel(&b, ideal.as_deref(), max_degree)),
        Command::Normalize { file, ideal, pin } => {
            load(&file).and_then(|b| normalize(&b, ideal.as_deref(), &pin))
        }
        Command::Graph { file } => load(&file).map(|b| graph(&b)),
        Command::Sum {
            file,
            certify,
            max_degree,
            slack,
        } => load(&file).and_then(|b| sum(&b, certify, max_degree, slack)),
    };
    result.unwrap_or_else(|o| o)
}

fn ok(stdout: String) -> Outcome {
    Outcome {
        code: EXIT_OK,
        stdout,
        stderr: String::new(),
    }
}

fn dim(blocks: &[IdealBlock]) -> Outcome {
    let mut out = String::new();
    for b in blocks {
        writeln!(out, "{}: dim(rank)={}", b.name, b.parametrization.dimension()).unwrap();
    }
    ok(out)
}

fn homog(blocks: &[IdealBlock]) -> Outcome {
    let mut out = String::new();
    let mut code = EXIT_OK;
    for b in blocks {
        match b.parametrization.homogeneity_certificate() {
            Some(cert) => {
                let omega: Vec<String> = cert.omega.iter().map(ToString::to_string).collect();
                writeln!(out, "{}: omega=({})", b.name, omega.join(", ")).unwrap();
            }
            None => {
                writeln!(out, "{}: not homogeneous", b.name).unwrap();
                code = EXIT_REJECTED;
            }
        }
    }
    Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    }
}

fn select<'a>(blocks: &'a [IdealBlock], name: Option<&str>) -> Result<Vec<&'a IdealBlock>, Outcome> {
    match name {
        None => Ok(blocks.iter().collect()),
        Some(n) => blocks
            .iter()
            .find(|b| b.name == n)
            .map(|b| vec![b])
            .ok_or_else(|| Outcome::fail(EXIT_USAGE, format!("no ideal named `{n}`"))),
    }
}

fn bound_for(max_degree: Option<u32>, slack: u32, gens: &[Binomial]) -> DegreeBound {
    let default = DegreeBound::for_generators(gens);
    let d = max_degree.unwrap_or(default.max_degree());
    DegreeBound::new(d, slack).expect("clap enforces max_degree >= 1")
}

fn kernel(blocks: &[IdealBlock], ideal: Option<&str>, max_degree: Option<u32>) -> Result<Outcome, Outcome> {
    let mut out = String::new();
    for b in select(blocks, ideal)? {
        let bound = bound_for(max_degree, DegreeBound::DEFAULT_SLACK, &b.generators);
        let p = &b.parametrization;
        let found = enumerate_kernel_binomials(p, &bound);
        writeln!(out, "{}: {} binomials up to degree {}", b.name, found.len(), bound.max_degree()).unwrap();
        for k in &found {
            writeln!(out, "  {}", k.render(p.vars())).unwrap();
        }
    }
    Ok(ok(out))
}

fn normalize(blocks: &[IdealBlock], ideal: Option<&str>, pin: &str) -> Result<Outcome, Outcome> {
    let block = match (ideal, blocks) {
        (None, [only]) => only,
        (None, _) => {
            return Err(Outcome::fail(
                EXIT_USAGE,
                "--ideal is required when the file does not hold exactly one ideal",
            ))
        }
        (Some(_), _) => select(blocks, ideal)?[0],
    };
    let p = &block.parametrization;
    let Some(i) = p.vars().index_of(pin) else {
        return Err(Outcome::fail(
            EXIT_USAGE,
            format!("ideal {} has no variable `{pin}`", block.name),
        ));
    };
    let pinned = p
        .normalize_pin(i)
        .map_err(|e| Outcome::fail(EXIT_REJECTED, format!("ideal {}: {e}", block.name)))?;
    let r = &pinned.parametrization;
    let mut out = String::new();
    writeln!(out, "ideal {} pinned at {pin}", block.name).unwrap();
    writeln!(out, "q={}", pinned.exponent).unwrap();
    writeln!(out, "pinned parameter: {}", r.params().name(pinned.pinned_param)).unwrap();
    writeln!(out, "vars {}", r.vars().names().join(" ")).unwrap();
    writeln!(out, "params {}", r.params().names().join(" ")).unwrap();
    writeln!(out, "{}", r.matrix()).unwrap();
    Ok(ok(out))
}

fn family_vars(blocks: &[IdealBlock]) -> Vec<(String, toric_core::VariableSet)> {
    blocks
        .iter()
        .map(|b| (b.name.clone(), b.parametrization.vars().clone()))
        .collect()
}

fn graph(blocks: &[IdealBlock]) -> Outcome {
    let g = match IdealFamilyGraph::build(&family_vars(blocks)) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(EXIT_REJECTED, e),
    };
    let mut out = String::new();
    writeln!(out, "k={} r={}", g.vertex_count(), g.component_count()).unwrap();
    for e in g.edges() {
        writeln!(out, "edge {} {} via {}", g.name(e.a), g.name(e.b), e.variable).unwrap();
    }
    let mut code = EXIT_OK;
    for (n, c) in g.components().iter().enumerate() {
        let (kind, members) = match &c.cycle {
            Some(cycle) => {
                code = EXIT_REJECTED;
                ("cycle", cycle)
            }
            None => ("tree", &c.vertices),
        };
        let names: Vec<&str> = members.iter().map(|&v| g.name(v)).collect();
        writeln!(out, "component {}: {kind} {{{}}}", n + 1, names.join(",")).unwrap();
    }
    Outcome {
        code,
        stdout: out,
        stderr: String::new(),
    }
}

fn sum(
    blocks: &[IdealBlock],
    with_certify: bool,
    max_degree: Option<u32>,
    slack: u32,
) -> Result<Outcome, Outcome> {
    if blocks.is_empty() {
        return Err(Outcome::fail(EXIT_USAGE, "the file holds no ideal"));
    }
    let all_gens: Vec<(Binomial, &Parametrization)> = blocks
        .iter()
        .flat_map(|b| b.generators.iter().map(move |g| (g.clone(), &b.parametrization)))
        .collect();
    let plain: Vec<Binomial> = all_gens.iter().map(|(g, _)| g.clone()).collect();
    let bound = bound_for(max_degree, slack, &plain);
    let options = SumOptions {
        witness_bound: Some(bound),
    };
    let members: Vec<(String, Parametrization)> = blocks
        .iter()
        .map(|b| (b.name.clone(), b.parametrization.clone()))
        .collect();
    let family = sum_family_with(&members, &options).map_err(|e| Outcome::fail(EXIT_REJECTED, e))?;
    let result = &family.result;
    let report = &family.report;

    let mut out = String::new();
    let mut stderr = String::new();
    let mut code = EXIT_OK;
    writeln!(out, "vars {}", result.vars().names().join(" ")).unwrap();
    writeln!(out, "params {}", result.params().names().join(" ")).unwrap();
    writeln!(out, "{}", result.matrix()).unwrap();
    writeln!(out, "k={} r={}", report.ideal_count, report.component_count).unwrap();
    writeln!(out, "dim(rank)={}", report.rank_dimension).unwrap();
    writeln!(out, "predicted(thm)={}", report.iterated_prediction).unwrap();
    writeln!(out, "predicted(printed)={}", report.printed_formula).unwrap();
    writeln!(
        out,
        "formula-mismatch: {}",
        if report.formula_mismatch() { "yes" } else { "no" }
    )
    .unwrap();
    for w in &report.warnings {
        writeln!(stderr, "warning: {w}").unwrap();
    }

    if with_certify {
        let gens = all_gens
            .iter()
            .map(|(g, p)| g.extended(p.vars(), result.vars()))
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| Outcome::fail(EXIT_REJECTED, e))?;
        let verdict = certify(result, &gens, &bound);
        let scope = if verdict.exact { "" } else { ", up to search bound" };
        match &verdict.status {
            VerdictStatus::EqualUpToDegree => {
                writeln!(out, "verdict: equal-up-to-degree (d={}{scope})", verdict.degree_checked).unwrap();
            }
            VerdictStatus::MissingInSum(b) => {
                code = EXIT_REJECTED;
                writeln!(
                    out,
                    "verdict: missing-in-sum {} (d={}{scope})",
                    b.render(result.vars()),
                    verdict.degree_checked
                )
                .unwrap();
            }
            VerdictStatus::MissingInKernel(b) => {
                code = EXIT_REJECTED;
                writeln!(
                    out,
                    "verdict: missing-in-kernel {} (d={}{scope})",
                    b.render(result.vars()),
                    verdict.degree_checked
                )
                .unwrap();
            }
        }
    }
    Ok(Outcome {
        code,
        stdout: out,
        stderr,
    })
}

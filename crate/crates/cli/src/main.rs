use std::collections::BTreeMap;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use mzv_core::chenfrac::{self, suite::ChenConfig, FracVector};
use mzv_core::hcore::{DhatRule, ReductionOrder};
use mzv_core::hopf::{self, check::check_hopf_with, CoproductEngine};
use mzv_core::mzvnum::{self, NumericConfig, SumMode};
use mzv_core::parserio::{
    self, format_latex, format_text, format_zeta_relation, parse_frac_vector, parse_hvector,
    JsonForm, LatexBasis, TextBasis,
};
use mzv_core::report::Report;
use mzv_core::stuffle::{self, eds_generators};
use mzv_core::{Error, LinComb, Rational};

#[derive(Parser)]
#[command(name = "mzv", version, about = "Shuffle and stuffle algebras of multiple zeta values")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, env = "MZV_FORMAT", default_value = "text")]
    format: Format,
    /// Worker threads for the verification suites.
    #[arg(long, global = true, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    jobs: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Nested,
    Fractions,
}

#[derive(Args)]
struct NumericArgs {
    /// Truncation N of the nested sums.
    #[arg(long, default_value_t = 2000, value_parser = clap::value_parser!(u64).range(10..))]
    terms: u64,
    /// Acceptance threshold for |ζ_N(generator)|.
    #[arg(long, default_value_t = 5e-3)]
    tol: f64,
    #[arg(long, value_enum, default_value = "nested")]
    mode: Mode,
}

impl NumericArgs {
    fn config(&self) -> Result<NumericConfig, Error> {
        let mode = match self.mode {
            Mode::Nested => SumMode::Nested,
            Mode::Fractions => SumMode::Fractions,
        };
        NumericConfig::new(self.terms, self.tol, mode)
    }
}

#[derive(Subcommand)]
enum Command {
    /// Shuffle product a ⧢ b of two compositions or combinations.
    Shuffle { a: String, b: String },
    /// Stuffle product a ∗ b.
    Stuffle { a: String, b: String },
    /// The recursive coproduct Δ(a).
    Coproduct { a: String },
    /// The antipode S(a).
    Antipode { a: String },
    /// Exhaustive check of the Hopf algebra axioms and the Chen-fraction suite.
    Verify {
        #[arg(long, default_value_t = 5, value_parser = clap::value_parser!(u32).range(1..))]
        max_weight: u32,
        /// Seed for the random evaluation points of the product oracle.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run the suite against a coproduct built from a deliberately
        /// sign-flipped derivation.
        #[arg(long, hide = true)]
        inject_sign_flip: bool,
    },
    /// Extended double shuffle generators up to a weight.
    Relations {
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..=7))]
        max_weight: u32,
        /// Also evaluate each generator with truncated sums.
        #[arg(long)]
        check_numeric: bool,
        #[command(flatten)]
        numeric: NumericArgs,
    },
    /// Operations on Chen fractions.
    Chen {
        #[command(subcommand)]
        op: ChenOp,
    },
    /// Truncated numeric value of a combination of admissible compositions.
    EvalZeta {
        a: String,
        #[command(flatten)]
        numeric: NumericArgs,
    },
}

#[derive(Subcommand)]
enum ChenOp {
    /// Locality product f·g of fractions on disjoint variables.
    Product { f: String, g: String },
    /// ∂_m f = −∂f/∂x_m.
    Partial { m: u32, f: String },
    /// The locality coproduct Δ^ch(f).
    Coproduct { f: String },
    /// Exact value of f at a point given as VAR=VALUE pairs, e.g. 1=2 2=1/3.
    Eval {
        f: String,
        #[arg(required = true)]
        point: Vec<String>,
    },
}

/// Outcome of a command: printed output plus whether any check failed.
struct Output {
    text: String,
    failed: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, failed: false }
    }
}

fn render<B: Ord + Clone + TextBasis + LatexBasis>(v: &LinComb<B>, format: Format) -> String
where
    LinComb<B>: JsonForm,
{
    match format {
        Format::Text => format_text(v),
        Format::Latex => format_latex(v),
        Format::Json => v.to_json().to_string(),
    }
}

fn render_report(report: &Report, format: Format) -> String {
    if format == Format::Json {
        return serde_json::to_string(report).expect("report serializes");
    }
    let mut lines: Vec<String> = report
        .outcomes
        .iter()
        .map(|o| {
            let status = if o.passed() { "pass" } else { "FAIL" };
            let mut line = format!("{status} {} weight={} cases={}", o.check, o.weight, o.cases);
            if let Some(c) = &o.counterexample {
                line.push_str(&format!(" counterexample: {c}"));
            }
            line
        })
        .collect();
    let failed = report.outcomes.iter().filter(|o| !o.passed()).count();
    lines.push(format!("{} checks, {failed} failed", report.outcomes.len()));
    lines.join("\n")
}

fn parse_point(args: &[String]) -> Result<BTreeMap<u32, Rational>, Error> {
    let mut out = BTreeMap::new();
    for a in args {
        let bad = || Error::Parse { offset: 0, expected: format!("VAR=VALUE with a rational value, got {a:?}") };
        let (var, value) = a.split_once('=').ok_or_else(bad)?;
        let var: u32 = var.trim().parse().map_err(|_| bad())?;
        let value: Rational = value.trim().parse().map_err(|_| bad())?;
        out.insert(var, value);
    }
    Ok(out)
}

fn run(cli: &Cli) -> Result<Output, Error> {
    let format = cli.format;
    let out = match &cli.command {
        Command::Shuffle { a, b } => {
            Output::ok(render(&hopf::hshuffle(&parse_hvector(a)?, &parse_hvector(b)?), format))
        }
        Command::Stuffle { a, b } => {
            Output::ok(render(&stuffle::stuffle(&parse_hvector(a)?, &parse_hvector(b)?), format))
        }
        Command::Coproduct { a } => Output::ok(render(&hopf::coproduct_vec(&parse_hvector(a)?), format)),
        Command::Antipode { a } => Output::ok(render(&hopf::antipode(&parse_hvector(a)?), format)),
        Command::Verify { max_weight, seed, inject_sign_flip } => {
            let rule = if *inject_sign_flip { DhatRule::FlippedBoundarySign } else { DhatRule::Standard };
            let engine = CoproductEngine::new(rule, ReductionOrder::Rightmost);
            let mut report = check_hopf_with(&engine, *max_weight);
            let chen = ChenConfig {
                coalgebra_weight: (*max_weight).min(6),
                coalgebra_depth: 3,
                factor_weight: (*max_weight).min(4),
                derivation_weight: (*max_weight).min(5),
                points_per_pair: 20,
                seed: *seed,
            };
            report.extend(chenfrac::suite::check_chen(&chen));
            Output { text: render_report(&report, format), failed: !report.passed() }
        }
        Command::Relations { max_weight, check_numeric, numeric } => {
            let gens = eds_generators(*max_weight)?;
            let numeric_report = if *check_numeric {
                Some(mzvnum::check_relations_numeric(*max_weight, &numeric.config()?)?)
            } else {
                None
            };
            let failed = numeric_report.as_ref().is_some_and(|r| !r.passed());
            let text = match format {
                Format::Json => {
                    let list: Vec<Value> = gens
                        .iter()
                        .map(|g| {
                            json!({
                                "kind": g.kind.as_str(),
                                "sources": [g.sources.0.to_json(), g.sources.1.to_json()],
                                "value": g.value.to_json(),
                            })
                        })
                        .collect();
                    match &numeric_report {
                        None => Value::Array(list).to_string(),
                        Some(r) => json!({ "generators": list, "numeric": r }).to_string(),
                    }
                }
                Format::Text | Format::Latex => {
                    let mut lines: Vec<String> = gens
                        .iter()
                        .map(|g| {
                            if format == Format::Latex {
                                format_zeta_relation(&g.value)
                            } else {
                                parserio::format_hvector(&g.value)
                            }
                        })
                        .collect();
                    if let Some(r) = &numeric_report {
                        for e in &r.entries {
                            let status = if e.status == mzv_core::report::Status::Pass { "pass" } else { "FAIL" };
                            lines.push(format!("{status} {:+.3e} {}", e.value, e.generator));
                        }
                        lines.push(format!("max |value| = {:.3e} (tolerance {:.1e})", r.max_abs, numeric.tol));
                    }
                    lines.join("\n")
                }
            };
            Output { text, failed }
        }
        Command::Chen { op } => match op {
            ChenOp::Product { f, g } => {
                Output::ok(render(&chenfrac::mul_local(&parse_frac_vector(f)?, &parse_frac_vector(g)?)?, format))
            }
            ChenOp::Partial { m, f } => Output::ok(render(&chenfrac::partial_vec(*m, &parse_frac_vector(f)?), format)),
            ChenOp::Coproduct { f } => {
                Output::ok(render(&chenfrac::chen_coproduct_vec(&parse_frac_vector(f)?), format))
            }
            ChenOp::Eval { f, point } => {
                let v: FracVector = parse_frac_vector(f)?;
                let value = chenfrac::eval_vec(&v, &parse_point(point)?)?;
                let text = match format {
                    Format::Json => json!({ "value": format!("{}/{}", value.numer(), value.denom()) }).to_string(),
                    Format::Latex if !value.is_integer() => format!("\\frac{{{}}}{{{}}}", value.numer(), value.denom()),
                    _ => value.to_string(),
                };
                Output::ok(text)
            }
        },
        Command::EvalZeta { a, numeric } => {
            let value = mzvnum::zeta_star_numeric(&parse_hvector(a)?, &numeric.config()?)?;
            let text = match format {
                Format::Json => json!({ "value": value, "terms": numeric.terms }).to_string(),
                _ => format!("{value:.12}"),
            };
            Output::ok(text)
        }
    };
    Ok(out)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(cli.jobs as usize).build_global() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    match run(&cli) {
        Ok(out) => {
            println!("{}", out.text);
            if out.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

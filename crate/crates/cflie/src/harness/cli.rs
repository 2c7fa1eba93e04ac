//! CLI driver. Exit codes: 0 on success, 1 when an executed check fails,
//! 2 on usage, parse, or validation errors.

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::cfla::{
    check_decomposition_theorem, check_level_theorem, image_values, level_cut, upper_level,
    LevelSpec, Mode, Strength,
};
use crate::cfuzzy::{
    self, is_homogeneous, parse_rational, rational_string, ComplexFuzzySet,
};
use crate::check::CheckResult;
use crate::error::Error;
use crate::harness::gen::GenConfig;
use crate::harness::probe::find_hypothesis_counterexample;
use crate::harness::scenario::{
    algebra_to_def, fuzzy_set_to_def, load_scenario, Scenario, ScenarioFile,
};
use crate::harness::suite::{run_suite_filtered, SuiteVerdict};
use crate::lie_core::LieAlgebra;

#[derive(Parser, Debug)]
#[command(name = "cflie", version, about = "Complex fuzzy Lie subalgebras and ideals over finite prime fields")]
pub struct Cli {
    /// Scenario file with named algebras, fuzzy sets, and homs
    #[arg(long, global = true)]
    pub scenario: Option<PathBuf>,
    /// Emit machine-readable JSON instead of prose
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub cmd: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CheckOp {
    Subalgebra,
    Ideal,
    Homogeneous,
    Levels,
    Decomposition,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Load and validate the scenario file, reporting the first problem
    Validate,
    /// Run one predicate or theorem check against a named fuzzy set
    Check {
        #[arg(long, value_enum)]
        op: CheckOp,
        /// Fuzzy set name from the scenario
        #[arg(long)]
        set: String,
        /// Transport the set through this hom's preimage first (the set
        /// must live on the hom's target; the check runs on its source)
        #[arg(long)]
        hom: Option<String>,
    },
    /// Fuzzy sum of two sets over one algebra, written as a scenario file
    Sum {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Intersection (componentwise meet) of two sets, written as a scenario file
    Intersect {
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Transport a fuzzy set through a homomorphism
    Hom {
        #[command(subcommand)]
        dir: HomDir,
    },
    /// List upper level sets, or one (alpha, beta) cut
    Levels {
        #[arg(long)]
        set: String,
        /// Amplitude threshold as "num/den"
        #[arg(long)]
        alpha: Option<String>,
        /// Phase threshold as a multiple of pi, "num/den"
        #[arg(long)]
        beta_over_pi: Option<String>,
        #[arg(long)]
        strict_r: bool,
        #[arg(long)]
        strict_w: bool,
    },
    /// Run the seeded theorem-verification suite
    Verify {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: u32,
        /// Restrict to one theorem id
        #[arg(long)]
        theorem: Option<String>,
    },
    /// Search for a counterexample with one hypothesis dropped
    Probe {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        drop: String,
        #[arg(long, default_value_t = 10_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum HomDir {
    /// Image: the set lives on the source, the output on the target
    Image {
        #[arg(long)]
        hom: String,
        #[arg(long)]
        set: String,
        #[arg(long)]
        out: PathBuf,
    },
    /// Preimage: the set lives on the target, the output on the source
    Preimage {
        #[arg(long)]
        hom: String,
        #[arg(long)]
        set: String,
        #[arg(long)]
        out: PathBuf,
    },
}

const EXIT_OK: i32 = 0;
const EXIT_CHECK_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

fn need_scenario(path: &Option<PathBuf>) -> Result<Scenario, Error> {
    let path = path.as_ref().ok_or_else(|| Error::BadConfig("this subcommand needs --scenario FILE".into()))?;
    load_scenario(path)
}

fn print_result(result: &CheckResult, json: bool) -> i32 {
    if json {
        println!("{}", serde_json::to_string_pretty(result).expect("serializes"));
    } else {
        println!("{result}");
    }
    if result.is_ok() {
        EXIT_OK
    } else {
        EXIT_CHECK_FAILED
    }
}

fn write_set_scenario(
    out: &PathBuf,
    algebra: &LieAlgebra,
    name: &str,
    set: &ComplexFuzzySet,
) -> Result<(), Error> {
    let file = ScenarioFile {
        algebras: vec![algebra_to_def(algebra)],
        fuzzy_sets: vec![fuzzy_set_to_def(name, algebra.name(), set)],
        ..Default::default()
    };
    let text = serde_json::to_string_pretty(&file)?;
    std::fs::write(out, text + "\n")?;
    Ok(())
}

fn run_check(
    scenario: &Scenario,
    op: CheckOp,
    set_name: &str,
    hom_name: Option<&str>,
) -> Result<CheckResult, Error> {
    let (mut algebra, mut set) = {
        let (a, s) = scenario.fuzzy_set(set_name)?;
        (a.clone(), s.clone())
    };
    if let Some(h) = hom_name {
        let phi = scenario.hom(h)?;
        set = crate::homs::preimage_cfs(phi, &set)?;
        algebra = phi.source().clone();
    }
    match op {
        CheckOp::Subalgebra => crate::cfla::is_complex_fuzzy_subalgebra(&algebra, &set),
        CheckOp::Ideal => crate::cfla::is_complex_fuzzy_ideal(&algebra, &set),
        CheckOp::Homogeneous => Ok(is_homogeneous(&set)),
        CheckOp::Decomposition => check_decomposition_theorem(&algebra, &set),
        CheckOp::Levels => {
            for mode in [Mode::Subalgebra, Mode::Ideal] {
                for strength in [Strength::Upper, Strength::Strong] {
                    let r = check_level_theorem(&algebra, &set, mode, strength)?;
                    if !r.is_ok() {
                        return Ok(r);
                    }
                }
            }
            Ok(CheckResult::ok())
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32, Error> {
    match &cli.cmd {
        Command::Validate => {
            let scenario = need_scenario(&cli.scenario)?;
            if cli.json {
                println!(
                    "{}",
                    serde_json::json!({
                        "algebras": scenario.algebras.len(),
                        "fuzzy_sets": scenario.fuzzy_sets.len(),
                        "homs": scenario.homs.len(),
                        "checks": scenario.checks.len(),
                    })
                );
            } else {
                println!(
                    "valid: {} algebra(s), {} fuzzy set(s), {} hom(s), {} check(s)",
                    scenario.algebras.len(),
                    scenario.fuzzy_sets.len(),
                    scenario.homs.len(),
                    scenario.checks.len()
                );
            }
            Ok(EXIT_OK)
        }
        Command::Check { op, set, hom } => {
            let scenario = need_scenario(&cli.scenario)?;
            let result = run_check(&scenario, *op, set, hom.as_deref())?;
            Ok(print_result(&result, cli.json))
        }
        Command::Sum { a, b, out } => {
            let scenario = need_scenario(&cli.scenario)?;
            let (algebra, set_a) = scenario.fuzzy_set(a)?;
            let (algebra_b, set_b) = scenario.fuzzy_set(b)?;
            if algebra.name() != algebra_b.name() {
                return Err(Error::CarrierMismatch);
            }
            let sum = crate::cfla::fuzzy_sum(algebra, set_a, set_b)?;
            write_set_scenario(out, algebra, "sum", &sum)?;
            if !cli.json {
                println!("wrote {}", out.display());
            }
            Ok(EXIT_OK)
        }
        Command::Intersect { a, b, out } => {
            let scenario = need_scenario(&cli.scenario)?;
            let (algebra, set_a) = scenario.fuzzy_set(a)?;
            let (algebra_b, set_b) = scenario.fuzzy_set(b)?;
            if algebra.name() != algebra_b.name() {
                return Err(Error::CarrierMismatch);
            }
            let meet = cfuzzy::intersect(set_a, set_b)?;
            write_set_scenario(out, algebra, "intersection", &meet)?;
            if !cli.json {
                println!("wrote {}", out.display());
            }
            Ok(EXIT_OK)
        }
        Command::Hom { dir } => {
            let scenario = need_scenario(&cli.scenario)?;
            let (hom, set, out, image) = match dir {
                HomDir::Image { hom, set, out } => (hom, set, out, true),
                HomDir::Preimage { hom, set, out } => (hom, set, out, false),
            };
            let phi = scenario.hom(hom)?;
            let (_, s) = scenario.fuzzy_set(set)?;
            let (result_algebra, transported, name) = if image {
                (phi.target().clone(), crate::homs::image_cfs(phi, s)?, "image")
            } else {
                (phi.source().clone(), crate::homs::preimage_cfs(phi, s)?, "preimage")
            };
            write_set_scenario(out, &result_algebra, name, &transported)?;
            if !cli.json {
                println!("wrote {}", out.display());
            }
            Ok(EXIT_OK)
        }
        Command::Levels {
            set,
            alpha,
            beta_over_pi,
            strict_r,
            strict_w,
        } => {
            let scenario = need_scenario(&cli.scenario)?;
            let (_, s) = scenario.fuzzy_set(set)?;
            if alpha.is_some() || beta_over_pi.is_some() {
                let (Some(alpha), Some(beta)) = (alpha, beta_over_pi) else {
                    return Err(Error::BadConfig(
                        "--alpha and --beta-over-pi must be given together".into(),
                    ));
                };
                let spec = LevelSpec::new(
                    parse_rational(alpha)?,
                    parse_rational(beta)?,
                    *strict_r,
                    *strict_w,
                )?;
                let cut = level_cut(s, &spec);
                if cli.json {
                    println!("{}", serde_json::to_string_pretty(&cut)?);
                } else {
                    println!("cut with {} member(s):", cut.len());
                    for x in cut.members() {
                        println!("  {x}");
                    }
                }
            } else {
                // list the upper level set of every image value; this is the
                // operation that needs a homogeneous set to be well defined
                let values = image_values(s)?;
                if cli.json {
                    let entries: Vec<_> = values
                        .iter()
                        .map(|t| {
                            serde_json::json!({
                                "r": rational_string(t.r()),
                                "w_over_pi": rational_string(t.w_over_pi()),
                                "level": upper_level(s, *t),
                            })
                        })
                        .collect();
                    println!("{}", serde_json::to_string_pretty(&entries)?);
                } else {
                    for t in values {
                        let level = upper_level(s, t);
                        println!("t = {t}: {} member(s)", level.len());
                    }
                }
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            seed,
            trials,
            theorem,
        } => {
            let cfg = GenConfig::with_seed_and_trials(*seed, *trials);
            let report = run_suite_filtered(&cfg, theorem.as_deref())?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                for (id, r) in &report.theorems {
                    println!("{id}: {}/{} passed", r.passes, r.trials);
                }
                println!("verdict: {}", report.verdict);
            }
            Ok(if report.verdict == SuiteVerdict::Fail {
                EXIT_CHECK_FAILED
            } else {
                EXIT_OK
            })
        }
        Command::Probe {
            theorem,
            drop,
            budget,
            seed,
        } => {
            let report = find_hypothesis_counterexample(theorem, drop, *budget, *seed)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else if let Some(cx) = &report.found {
                println!(
                    "counterexample after {} attempt(s): {}",
                    report.attempts, cx.result
                );
            } else {
                println!("NOT_FOUND within budget {}", report.budget);
            }
            Ok(EXIT_OK)
        }
    }
}

/// Entry point shared by the binary and the integration tests.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version on stdout with success; real usage
            // errors land on stderr with exit 2
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            EXIT_USAGE
        }
    }
}

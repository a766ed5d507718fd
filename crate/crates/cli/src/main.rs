//! Command line front end: validation, cohomology, filtration steps,
//! circuit syzygies, and brute-force cross-checks for wheel complexes.
//!
//! Exit codes: 0 when the computation succeeds and the input is valid, 1
//! when the input is well-formed but invalid (broken relations, divisors
//! that are not Cartier, or a failed cross-check), 2 when the input cannot
//! be read at all.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::de::DeserializeOwned;
use serde::Serialize;

use toric_wheels::{
    beta_generators, class_group, cohomology_report, filtration_ideal, first_discrepancy,
    minimal_circuits, oracle_ideal, oracle_syzygies, spoke_corpus, spoke_corpus_m,
    syzygy_generators, transposition_order, validate_wheel, ExponentVector, Fan,
    FineDegreeWindow, ModuleElement, MonomialInput, Wheel,
};

#[derive(Parser)]
#[command(
    name = "toric-wheels",
    about = "Exact cohomology of wheel-shaped complexes of invertible sheaves on toric varieties",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format for reports.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check the rhombus relations of a wheel and, with a fan, that every
    /// twist is by a line bundle.
    Validate {
        /// Wheel description (JSON).
        #[arg(long)]
        wheel: PathBuf,
        /// Fan description (JSON); enables the Cartier checks.
        #[arg(long)]
        fan: Option<PathBuf>,
    },
    /// Cohomology of the wheel complex in all four degrees.
    Cohomology {
        #[arg(long)]
        wheel: PathBuf,
        #[arg(long)]
        fan: PathBuf,
    },
    /// Colon ideals of the filtration, step by step.
    Filtration {
        /// Spoke list (JSON with "dim" and "spokes").
        #[arg(long)]
        spokes: PathBuf,
        /// Single step to compute; all steps when omitted.
        #[arg(long)]
        k: Option<usize>,
    },
    /// Minimal circuits of the step graph and their syzygies.
    Syzygy {
        #[arg(long)]
        spokes: PathBuf,
        #[arg(long)]
        k: usize,
    },
    /// Cross-check the closed formulas against degree-by-degree brute force.
    OracleCheck {
        /// Spoke list to check.
        #[arg(long)]
        spokes: Option<PathBuf>,
        /// Additionally check this many seeded random spoke lists.
        #[arg(long)]
        random: Option<usize>,
        /// Spoke count for the random lists; mixed 3 to 6 when omitted.
        #[arg(long)]
        m: Option<usize>,
        /// Seed for the random spoke lists.
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Window margin added to the componentwise lcm bound, per variable.
        #[arg(long, default_value_t = 1)]
        window: u32,
    },
}

/// Outcome of a successful run; decides the exit code.
enum Outcome {
    Valid,
    Invalid,
}

enum CliError {
    /// Unreadable or unparseable input: exit code 2.
    Malformed(String),
    /// A computation rejected well-formed input: exit code 1.
    Domain(toric_wheels::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Malformed(msg) => write!(f, "{msg}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

impl From<toric_wheels::Error> for CliError {
    fn from(e: toric_wheels::Error) -> Self {
        CliError::Domain(e)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(Outcome::Valid) => ExitCode::SUCCESS,
        Ok(Outcome::Invalid) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                CliError::Malformed(_) => ExitCode::from(2),
                CliError::Domain(_) => ExitCode::from(1),
            }
        }
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CliError::Malformed(format!("{}: {e}", path.display())))
}

#[derive(serde::Deserialize)]
struct SpokesFile {
    dim: usize,
    spokes: Vec<MonomialInput>,
}

fn load_spokes(path: &Path) -> Result<Vec<ExponentVector>, CliError> {
    let file: SpokesFile = read_json(path)?;
    if file.spokes.is_empty() {
        return Err(CliError::Malformed(format!(
            "{}: spoke list is empty",
            path.display()
        )));
    }
    file.spokes
        .into_iter()
        .enumerate()
        .map(|(i, mono)| {
            mono.resolve(file.dim).map_err(|e| {
                CliError::Malformed(format!("{}: spoke {}: {e}", path.display(), i + 1))
            })
        })
        .collect()
}

fn print_json<T: Serialize>(value: &T) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(value)
        .map_err(|e| CliError::Malformed(format!("serializing output: {e}")))?;
    println!("{text}");
    Ok(())
}

fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Validate { wheel, fan } => {
            let wheel: Wheel = read_json(wheel)?;
            let fan: Option<Fan> = fan.as_ref().map(|p| read_json(p)).transpose()?;
            let report = validate_wheel(&wheel, fan.as_ref())?;
            if cli.format == Format::Json {
                print_json(&report)?;
            } else {
                println!("spokes: {}, variables: {}", report.m, wheel.dim());
                if report.relation_failures.is_empty() {
                    println!("relations: all hold");
                } else {
                    for (family, j) in &report.relation_failures {
                        println!("relation {family} fails at position {j}");
                    }
                }
                match report.all_cartier {
                    None => println!("line bundles: not checked (no fan)"),
                    Some(true) => println!("line bundles: every twist is Cartier"),
                    Some(false) => {
                        println!("not Cartier: {}", report.cartier_failures.join(", "))
                    }
                }
                println!(
                    "complex: {}",
                    if report.is_complex { "yes" } else { "no" }
                );
            }
            let valid = report.is_complex && report.all_cartier != Some(false);
            Ok(if valid { Outcome::Valid } else { Outcome::Invalid })
        }

        Command::Cohomology { wheel, fan } => {
            let wheel: Wheel = read_json(wheel)?;
            let fan: Fan = read_json(fan)?;
            let report = cohomology_report(&wheel, &fan)?;
            if cli.format == Format::Json {
                print_json(&report)?;
            } else {
                let cl = class_group(&fan)?;
                print!("{}", report.render(&cl));
            }
            Ok(Outcome::Valid)
        }

        Command::Filtration { spokes, k } => {
            let f = load_spokes(spokes)?;
            let m = f.len();
            let order = transposition_order(m)?;
            let n = order.len();
            let ks: Vec<usize> = match k {
                Some(k) => vec![*k],
                None => (1..=n).collect(),
            };
            #[derive(Serialize)]
            struct Step {
                k: usize,
                tau: (usize, usize),
                generators: Vec<String>,
                generator_exponents: Vec<ExponentVector>,
                is_zero: bool,
                is_unit: bool,
            }
            let mut steps = Vec::with_capacity(ks.len());
            for k in ks {
                let ideal = filtration_ideal(&f, k)?;
                steps.push(Step {
                    k,
                    tau: order[k - 1],
                    generators: ideal.generator_strings(),
                    generator_exponents: ideal.generators().to_vec(),
                    is_zero: ideal.is_zero(),
                    is_unit: ideal.is_unit(),
                });
            }
            if cli.format == Format::Json {
                print_json(&steps)?;
            } else {
                for s in &steps {
                    let body = if s.is_zero {
                        "zero ideal".to_string()
                    } else if s.is_unit {
                        "unit ideal (step vanishes)".to_string()
                    } else {
                        format!("<{}>", s.generators.join(", "))
                    };
                    println!("k={:<3} tau=({},{})  {body}", s.k, s.tau.0, s.tau.1);
                }
            }
            Ok(Outcome::Valid)
        }

        Command::Syzygy { spokes, k } => {
            let f = load_spokes(spokes)?;
            let circuits = minimal_circuits(f.len(), *k)?;
            let sigmas = syzygy_generators(&f, *k)?;
            #[derive(Serialize)]
            struct Generator {
                circuit: Vec<usize>,
                syzygy: String,
            }
            let gens: Vec<Generator> = circuits
                .iter()
                .zip(&sigmas)
                .map(|(c, s)| Generator {
                    circuit: c.vertices().to_vec(),
                    syzygy: s.to_string(),
                })
                .collect();
            if cli.format == Format::Json {
                print_json(&gens)?;
            } else {
                println!("k={k}: {} circuit generator(s)", gens.len());
                for g in &gens {
                    println!(
                        "  ({}): {}",
                        g.circuit
                            .iter()
                            .map(usize::to_string)
                            .collect::<Vec<_>>()
                            .join(", "),
                        g.syzygy
                    );
                }
            }
            Ok(Outcome::Valid)
        }

        Command::OracleCheck {
            spokes,
            random,
            m,
            seed,
            window,
        } => {
            let mut lists: Vec<Vec<ExponentVector>> = Vec::new();
            if let Some(path) = spokes {
                lists.push(load_spokes(path)?);
            }
            if let Some(count) = random {
                match m {
                    Some(m) => lists.extend(spoke_corpus_m(*seed, *count, *m)?),
                    None => lists.extend(spoke_corpus(*seed, *count)),
                }
            }
            if lists.is_empty() {
                return Err(CliError::Malformed(
                    "nothing to check: pass --spokes and/or --random".to_string(),
                ));
            }

            #[derive(Serialize)]
            struct StepCheck {
                k: usize,
                syzygies_agree: bool,
                ideal_agrees: bool,
                generators: usize,
                /// Fine degree witnessing a disagreement, when there is one.
                #[serde(skip_serializing_if = "Option::is_none")]
                counterexample_degree: Option<Vec<u32>>,
            }
            #[derive(Serialize)]
            struct InstanceCheck {
                instance: usize,
                m: usize,
                variables: usize,
                steps: Vec<StepCheck>,
            }

            let mut all_agree = true;
            let mut results = Vec::with_capacity(lists.len());
            for (index, f) in lists.iter().enumerate() {
                let m = f.len();
                let n = m * (m - 1) / 2;
                let degree_window = FineDegreeWindow::covering(f, *window)?;
                let degrees = toric_wheels::edge_degrees(f)?;
                let betas = beta_generators(f)?;
                let beta_elems: Vec<ModuleElement> = betas
                    .iter()
                    .map(|b| ModuleElement::from_syzygy(b, f))
                    .collect::<Result<_, _>>()?;
                let mut steps = Vec::with_capacity(n);
                for k in 1..=n {
                    let brute = oracle_syzygies(f, k, &degree_window)?;
                    let sigmas: Vec<ModuleElement> = syzygy_generators(f, k)?
                        .iter()
                        .map(|s| ModuleElement::from_syzygy(s, &degrees))
                        .collect::<Result<_, _>>()?;
                    let syzygy_witness = first_discrepancy(&brute, &sigmas);
                    let syzygies_agree = syzygy_witness.is_none();
                    let brute_ideal =
                        oracle_ideal(&beta_elems[..k - 1], &beta_elems[k - 1], &degree_window)?;
                    let closed_ideal = filtration_ideal(f, k)?;
                    let ideal_agrees = brute_ideal.equals(&closed_ideal);
                    let ideal_witness = if ideal_agrees {
                        None
                    } else {
                        brute_ideal
                            .generators()
                            .iter()
                            .find(|g| !closed_ideal.contains(g))
                            .or_else(|| {
                                closed_ideal
                                    .generators()
                                    .iter()
                                    .find(|g| !brute_ideal.contains(g))
                            })
                            .cloned()
                    };
                    all_agree &= syzygies_agree && ideal_agrees;
                    steps.push(StepCheck {
                        k,
                        syzygies_agree,
                        ideal_agrees,
                        generators: brute.len(),
                        counterexample_degree: syzygy_witness
                            .map(|w| w.delta.exponents().to_vec())
                            .or_else(|| ideal_witness.map(|g| g.exponents().to_vec())),
                    });
                }
                results.push(InstanceCheck {
                    instance: index,
                    m,
                    variables: f[0].dim(),
                    steps,
                });
            }
            if cli.format == Format::Json {
                print_json(&results)?;
            } else {
                for r in &results {
                    let good = r
                        .steps
                        .iter()
                        .filter(|s| s.syzygies_agree && s.ideal_agrees)
                        .count();
                    println!(
                        "instance {} (m={}, {} variables): {}/{} steps agree",
                        r.instance,
                        r.m,
                        r.variables,
                        good,
                        r.steps.len()
                    );
                    for s in r.steps.iter().filter(|s| !s.syzygies_agree || !s.ideal_agrees) {
                        let witness = s
                            .counterexample_degree
                            .as_ref()
                            .map(|d| format!(", counterexample multidegree {d:?}"))
                            .unwrap_or_default();
                        println!(
                            "  k={}: syzygies {}, colon ideal {}{witness}",
                            s.k,
                            if s.syzygies_agree { "agree" } else { "DIFFER" },
                            if s.ideal_agrees { "agrees" } else { "DIFFERS" }
                        );
                    }
                }
                println!(
                    "oracle check: {}",
                    if all_agree {
                        "all instances agree"
                    } else {
                        "MISMATCH FOUND"
                    }
                );
            }
            Ok(if all_agree {
                Outcome::Valid
            } else {
                Outcome::Invalid
            })
        }
    }
}

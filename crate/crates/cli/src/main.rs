//! `grcodes`: build, check and measure group-ring codes from the command line.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use grcodes::codes::{four_cycle_report, quantum_params, DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SEED};
use grcodes::constructions::catalog;
use grcodes::{io, CodeError, CodeFamilySpec, CodeReport, ConstructionError, DistanceOptions, FamilyInstance, FieldMatrix, LinearCode};

const EXIT_CONTRACT: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_CAP: u8 = 3;

#[derive(Parser)]
#[command(name = "grcodes", version, about = "Self-dual and dual-containing codes from group rings")]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List every family with its parameters and claim status.
    Catalog,
    /// Construct an instance and print its generator and check matrices.
    Build { spec: String },
    /// Check nilpotency, symmetry, ranks and duality; exits 1 on failure.
    Verify { spec: String },
    /// Exact minimum distance, or an upper bound when a search budget is given.
    Distance {
        spec: String,
        /// Largest enumeration, in bits, attempted exactly.
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        exhaustive_cap: u32,
        /// Codewords examined by randomized search once the cap is exceeded.
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Stabilizer code parameters `[[n,k,d]]`.
    Quantum {
        spec: String,
        #[arg(long, default_value_t = DEFAULT_EXHAUSTIVE_CAP)]
        exhaustive_cap: u32,
    },
    /// Write a matrix as text, json or alist.
    Export {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[arg(long, value_enum, default_value_t = Which::Check)]
        what: Which,
        /// Destination file; stdout when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// 4-cycles of the check matrix and their row spacing.
    Cycles {
        spec: String,
        /// Use the full square matrix of the check element.
        #[arg(long)]
        full: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
    Alist,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Generator,
    Check,
}

/// A failure paired with the exit code it maps to.
struct Failure {
    code: u8,
    msg: String,
}

impl Failure {
    fn new(code: u8, msg: impl ToString) -> Self {
        Failure { code, msg: msg.to_string() }
    }
}

impl From<ConstructionError> for Failure {
    fn from(e: ConstructionError) -> Self {
        let code = match e {
            ConstructionError::ContractViolation(_) | ConstructionError::WitnessAboveClaim { .. } => EXIT_CONTRACT,
            _ => EXIT_USAGE,
        };
        Failure::new(code, e)
    }
}

impl From<CodeError> for Failure {
    fn from(e: CodeError) -> Self {
        let code = match e {
            CodeError::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_CONTRACT,
        };
        Failure::new(code, e)
    }
}

impl From<io::IoError> for Failure {
    fn from(e: io::IoError) -> Self {
        Failure::new(EXIT_CONTRACT, e)
    }
}

fn load(spec: &str) -> Result<(FamilyInstance, LinearCode), Failure> {
    let spec: CodeFamilySpec = spec.parse()?;
    let inst = FamilyInstance::build(&spec)?;
    let code = LinearCode::from_instance(&inst)?;
    Ok((inst, code))
}

fn check_matrix(code: &LinearCode) -> Result<&FieldMatrix, Failure> {
    code.check().ok_or_else(|| Failure::new(EXIT_CONTRACT, "instance has no check matrix"))
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Catalog => {
            let entries = catalog();
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&entries).expect("plain data"));
                return Ok(());
            }
            for e in entries {
                println!("{} ({}, e.g. {})", e.family, e.field, e.example);
                println!("  generator  {}", e.generator);
                println!("  params     ({}, {}, {})", e.length, e.dimension, e.distance);
                println!("  duality    {:?} under the {} inner product", e.duality, e.inner_product);
                println!("  distance   {}", e.status);
            }
        }
        Command::Build { spec } => {
            let (inst, code) = load(&spec)?;
            println!("{}  {}  [{}, {}]", inst.spec(), inst.group(), code.length(), code.dimension());
            println!("u = {}", inst.generator());
            println!("check element = {}", inst.check());
            println!("generator matrix:");
            print!("{}", code.generator().to_text());
            println!("check matrix:");
            print!("{}", check_matrix(&code)?.to_text());
        }
        Command::Verify { spec } => {
            let (inst, code) = load(&spec)?;
            let report = CodeReport::new(&inst, &code)?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                let verdict = |ok: bool| if ok { "ok" } else { "FAILED" };
                println!("{}  [{}, {}]", report.spec, report.length, report.dimension);
                println!("nilpotency  {:?} (expected {})", report.nilpotency, report.expected_nilpotency);
                println!("symmetry    {} ({})", report.symmetry, verdict(report.symmetric));
                println!("rank        {} (expected {})", report.rank, report.expected_rank);
                println!("check rank  {}", report.check_rank);
                println!("annihilates {}", verdict(report.annihilates));
                println!("duality     {} under {} ({})", report.duality, report.inner_product, verdict(report.duality_passed));
                for line in inst.contract().failures(inst.length()) {
                    println!("  {line}");
                }
                for note in &report.notes {
                    println!("note: {note}");
                }
            }
            if !report.passed() {
                return Err(Failure::new(EXIT_CONTRACT, format!("{spec}: verification failed")));
            }
        }
        Command::Distance { spec, exhaustive_cap, budget, seed } => {
            let (inst, code) = load(&spec)?;
            let mut report = CodeReport::new(&inst, &code)?;
            report.find_witness(&inst);
            report.measure_distance(&code, &DistanceOptions { exhaustive_cap, budget, seed })?;
            if cli.json {
                println!("{}", report.to_json());
            } else {
                let method = report.distance_method.as_deref().unwrap_or("none");
                match report.distance {
                    Some(d) => println!("distance {d} (exact, {method})"),
                    None => println!(
                        "distance <= {} (search budget {}, seed {:#x})",
                        report.distance_upper.unwrap_or(code.length()),
                        budget.unwrap_or(0),
                        seed
                    ),
                }
                if let Some(w) = report.witness_weight {
                    println!("witness weight {w}");
                }
                if let Some(d) = report.claimed_distance {
                    println!("claimed {d} ({})", report.claim_status);
                }
                for note in &report.notes {
                    println!("note: {note}");
                }
            }
        }
        Command::Quantum { spec, exhaustive_cap } => {
            let (inst, code) = load(&spec)?;
            let mut report = CodeReport::new(&inst, &code)?;
            let opts = DistanceOptions { exhaustive_cap, ..Default::default() };
            let bounded = match report.measure_distance(&code, &opts) {
                Ok(()) => false,
                Err(CodeError::CapExceeded { .. }) => {
                    report.find_witness(&inst);
                    true
                }
                Err(e) => return Err(e.into()),
            };
            let q = quantum_params(&code, inst.inner_product(), report.distance.or(report.distance_upper))?;
            report.quantum = Some(q.to_string());
            if cli.json {
                println!("{}", report.to_json());
            } else {
                println!("{q}");
                if bounded {
                    eprintln!("distance is an upper bound from the witness codeword");
                }
            }
        }
        Command::Export { spec, format, what, out } => {
            let (_, code) = load(&spec)?;
            let m = match what {
                Which::Generator => code.generator(),
                Which::Check => check_matrix(&code)?,
            };
            let text = match format {
                Format::Text => io::to_text(m),
                Format::Json => io::to_json(m) + "\n",
                Format::Alist => io::to_alist(m)?,
            };
            match out {
                Some(path) => fs::write(&path, text)
                    .map_err(|e| Failure::new(EXIT_CONTRACT, format!("{}: {e}", path.display())))?,
                None => print!("{text}"),
            }
        }
        Command::Cycles { spec, full } => {
            let (inst, code) = load(&spec)?;
            let h = if full { inst.check().to_matrix() } else { check_matrix(&code)?.clone() };
            let r = four_cycle_report(&h, inst.spec().n as usize);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&r).expect("plain data"));
            } else {
                let gap = |g: Option<usize>| g.map_or("-".to_string(), |g| g.to_string());
                println!("{} x {} check matrix, row weight <= {}, column weight <= {}", r.rows, r.cols, r.max_row_weight, r.max_col_weight);
                println!("4-cycles     {}", r.cycles);
                println!("min row gap  {}", gap(r.min_row_gap));
                println!("min col gap  {}", gap(r.min_col_gap));
                println!("separated    {} (stretch {})", r.separated, r.stretch);
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("grcodes: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

#[cfg(test)]
mod tests {
    use clap::CommandFactory;

    use super::*;

    #[test]
    fn arguments_are_consistent() {
        Cli::command().debug_assert();
        let cli = Cli::try_parse_from(["grcodes", "--json", "distance", "class1:m=2", "--budget", "10"]).unwrap();
        assert!(cli.json);
        assert!(matches!(cli.command, Command::Distance { budget: Some(10), seed: DEFAULT_SEED, .. }));
    }

    #[test]
    fn errors_map_to_exit_codes() {
        assert_eq!(load("nosuch:m=1").err().unwrap().code, EXIT_USAGE);
        assert_eq!(Failure::from(CodeError::CapExceeded { bits: 30, cap: 28 }).code, EXIT_CAP);
        assert_eq!(Failure::from(ConstructionError::ContractViolation("x".into())).code, EXIT_CONTRACT);
    }
}

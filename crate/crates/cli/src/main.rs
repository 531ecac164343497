use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use gcdchain::io::{chain_to_json, parse_chain, parse_problem, problem_to_json, Problem};
use gcdchain::samples;
use gcdchain::verify::campaign::{
    fitted_exponent, render_scaling, run_instance, scaling_series, timing_report, CampaignConfig, Summary,
};
use gcdchain::verify::verify_chain;
use gcdchain::{gcd_chain_traced, Error, Field, Trace};

const EXIT_PARSE: u8 = 2;
const EXIT_PRECONDITION: u8 = 3;
const EXIT_VERIFY: u8 = 4;
const EXIT_INTERNAL: u8 = 5;

#[derive(Parser)]
#[command(name = "gcdchain", version, about = "Gcd chains of monic polynomials over k[x]/<p^e>")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the gcd chain of a problem file and print it as JSON.
    Compute {
        input: PathBuf,
        /// Write the chain here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Print the iteration log to stderr.
        #[arg(long)]
        trace: bool,
    },
    /// Print the iteration log of the computation.
    Trace { input: PathBuf },
    /// Check a chain file against its problem file.
    Verify { input: PathBuf, chain: PathBuf },
    /// Run planted instances through compute and verify.
    Selftest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 500)]
        count: usize,
        #[arg(long, default_value_t = 6)]
        max_deg_y: usize,
        #[arg(long, default_value_t = 4)]
        max_e: usize,
        #[arg(long, default_value_t = 2)]
        max_deg_p: usize,
        /// Base field: a prime `q` or `rationals`. Repeat to mix fields.
        #[arg(long, value_parser = parse_field)]
        field: Vec<Field>,
        /// Skip the timing and scaling report on stderr.
        #[arg(long)]
        no_timing: bool,
    },
    /// Print a worked problem file (`x3` or `x7`).
    Sample { name: String },
}

fn parse_field(s: &str) -> Result<Field, String> {
    match s {
        "rationals" | "QQ" => Ok(Field::Rational),
        _ => {
            let q: u64 = s.parse().map_err(|_| format!("expected a prime or `rationals`, got {s:?}"))?;
            Field::prime(q).map_err(|e| e.to_string())
        }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::Parse(_) | Error::InvalidField(_) => EXIT_PARSE,
        Error::NotMonic(_)
        | Error::Precondition(_)
        | Error::ModulusMismatch(..)
        | Error::FieldMismatch
        | Error::ZeroGcd
        | Error::NotInvertible(_) => EXIT_PRECONDITION,
        Error::InvariantBreach(_) | Error::DivisionByZero | Error::NotDivisible => EXIT_INTERNAL,
    }
}

fn fail(err: Error) -> ExitCode {
    eprintln!("error: {err}");
    ExitCode::from(exit_code(&err))
}

fn read(path: &Path) -> Result<String, Error> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn load_problem(path: &Path) -> Result<Problem, Error> {
    parse_problem(&read(path)?)
}

fn compute(input: &Path, output: Option<&Path>, trace: bool) -> Result<(), Error> {
    let problem = load_problem(input)?;
    let mut log = if trace { Trace::enabled() } else { Trace::disabled() };
    let chain = gcd_chain_traced(&problem.a, &problem.b, &mut log)?;
    if trace {
        eprint!("{}", log.render());
    }
    let text = chain_to_json(&problem.modulus, &chain)?;
    match output {
        Some(path) => fs::write(path, text + "\n")
            .map_err(|e| Error::Precondition(format!("cannot write {}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn trace(input: &Path) -> Result<(), Error> {
    let problem = load_problem(input)?;
    let mut log = Trace::enabled();
    let chain = gcd_chain_traced(&problem.a, &problem.b, &mut log)?;
    print!("{}", log.render());
    println!("{} block(s)", chain.len());
    for (i, block) in chain.blocks()?.iter().enumerate() {
        println!("  block {i}: g = {} modulo {}", block.g, block.modulus.poly());
    }
    Ok(())
}

fn verify(input: &Path, chain_path: &Path) -> Result<bool, Error> {
    let problem = load_problem(input)?;
    let (modulus, chain) = parse_chain(&read(chain_path)?)?;
    if modulus != problem.modulus {
        println!("FAIL modulus: chain is for {}, problem is for {}", modulus.poly(), problem.modulus.poly());
        return Ok(false);
    }
    let report = verify_chain(&chain, &problem.a, &problem.b);
    print!("{report}");
    Ok(report.all_ok())
}

fn selftest(config: CampaignConfig, count: usize, timing: bool) -> bool {
    let start = Instant::now();
    let results: Vec<_> = (0..count).into_par_iter().map(|n| run_instance(&config, n)).collect();
    let wall = start.elapsed();
    let summary = Summary::from_results(&results);
    let fields: Vec<String> = config.fields.iter().map(Field::to_string).collect();
    println!(
        "selftest seed={} count={count} max_deg_y={} max_e={} max_deg_p={} fields={}",
        config.seed,
        config.max_deg_y,
        config.max_e,
        config.max_deg_p,
        fields.join(",")
    );
    print!("{summary}");
    if timing {
        eprintln!("wall clock {:.3}s", wall.as_secs_f64());
        eprint!("{}", timing_report(&results));
        let points = scaling_series(config.seed, Field::Prime(7), 6, 5);
        eprint!("{}", render_scaling(&points));
        if let Some(k) = fitted_exponent(&points) {
            eprintln!("fitted exponent in e*deg_p: {k:.2}");
        }
    }
    summary.all_passed()
}

fn sample(name: &str) -> Result<(), Error> {
    let problem = match name {
        "x3" => {
            let t = samples::x3_modulus();
            Problem { a: samples::x3_system_a(&t), b: samples::x3_system_b(&t), modulus: t }
        }
        "x7" => {
            let t = samples::x7_modulus();
            Problem { a: samples::x7_system_a(&t), b: samples::x7_system_b(&t), modulus: t }
        }
        _ => return Err(Error::Parse(format!("unknown sample {name:?}; try x3 or x7"))),
    };
    println!("{}", problem_to_json(&problem));
    Ok(())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Compute { input, output, trace } => compute(&input, output.as_deref(), trace),
        Command::Trace { input } => trace(&input),
        Command::Verify { input, chain } => match verify(&input, &chain) {
            Ok(true) => Ok(()),
            Ok(false) => return ExitCode::from(EXIT_VERIFY),
            Err(e) => Err(e),
        },
        Command::Selftest { seed, count, max_deg_y, max_e, max_deg_p, field, no_timing } => {
            let mut config = CampaignConfig { seed, max_deg_y, max_e, max_deg_p, ..Default::default() };
            if !field.is_empty() {
                config.fields = field;
            }
            return if selftest(config, count, !no_timing) { ExitCode::SUCCESS } else { ExitCode::from(EXIT_VERIFY) };
        }
        Command::Sample { name } => sample(&name),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail(e),
    }
}

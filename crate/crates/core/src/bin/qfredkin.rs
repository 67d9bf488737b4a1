//! `qfredkin`: synthesize, simulate and verify qudit-assisted Fredkin
//! circuits, run the optical models and print CNOT-count tables.

use std::fmt;
use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qudit_fredkin::cost;
use qudit_fredkin::dsl;
use qudit_fredkin::photonic::{self, expected_failure_state, polarization_register, random_state};
use qudit_fredkin::qudit::{apply, PureState};
use qudit_fredkin::report::sig;
use qudit_fredkin::synthesis::{
    build_fredkin_n, fredkin_oracle, verify_circuit, Circuit, VerifyConfig,
};

/// Deviation at or below which `verify` and `photonic` report success.
const PASS_THRESHOLD: f64 = 1e-9;
/// Amplitudes at or below this are not printed by `sim`.
const PRINT_CUTOFF: f64 = 1e-12;

#[derive(Parser)]
#[command(
    name = "qfredkin",
    version,
    about = "Qudit-assisted Fredkin gate toolkit"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write the n-control Fredkin circuit document.
    Synth {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=24))]
        controls: u32,
        /// Output file; standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare a circuit document against an ideal Fredkin gate.
    Verify {
        file: PathBuf,
        /// `fredkin:<n>`; defaults to one control per wire beyond the two targets.
        #[arg(long)]
        oracle: Option<OracleSpec>,
        /// Largest register dimension to simulate.
        #[arg(long, default_value_t = VerifyConfig::default().max_dim)]
        max_dim: usize,
    },
    /// Run a circuit document on one basis input.
    Sim {
        file: PathBuf,
        /// Comma-separated level of each wire, e.g. `1,1,0`.
        #[arg(long)]
        input: String,
    },
    /// Print CNOT counts for n-qubit gates.
    Cost {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        max_n: u32,
        #[arg(long, value_enum, default_value_t = CostFormat::Tsv)]
        format: CostFormat,
        /// Restrict to these formulas, in the order given.
        #[arg(long = "formula")]
        formulas: Vec<String>,
    },
    /// Run an optical Fredkin model on seeded random inputs.
    Photonic {
        #[arg(long)]
        variant: String,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CostFormat {
    Tsv,
    Human,
}

#[derive(Clone, Copy)]
struct OracleSpec {
    controls: usize,
}

impl std::str::FromStr for OracleSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let n = s
            .strip_prefix("fredkin:")
            .ok_or_else(|| format!("unknown oracle {s:?}, expected fredkin:<n>"))?;
        let controls = n
            .parse()
            .ok()
            .filter(|&n: &usize| n >= 1)
            .ok_or_else(|| format!("bad control count {n:?}"))?;
        Ok(Self { controls })
    }
}

impl fmt::Display for OracleSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fredkin:{}", self.controls)
    }
}

/// Failure modes, each with its own exit status.
enum Failure {
    Usage(String),
    Check,
}

impl<E: fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn read_circuit(path: &Path) -> Result<Circuit, Failure> {
    let text =
        fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    dsl::parse(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn synth(controls: u32, out: Option<&Path>) -> Result<String, Failure> {
    let text = dsl::serialize(&build_fredkin_n(controls as usize)?);
    match out {
        Some(path) => {
            fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            Ok(String::new())
        }
        None => Ok(text),
    }
}

fn verify(file: &Path, oracle: Option<OracleSpec>, max_dim: usize) -> Result<String, Failure> {
    let circuit = read_circuit(file)?;
    let oracle = match oracle {
        Some(o) => o,
        None => OracleSpec {
            controls: circuit
                .register()
                .len()
                .checked_sub(2)
                .filter(|&n| n >= 1)
                .ok_or_else(|| Failure::Usage("circuit has fewer than three wires".into()))?,
        },
    };
    let report = verify_circuit(
        &circuit,
        &fredkin_oracle(oracle.controls)?,
        VerifyConfig { max_dim },
    )?;
    let pass = report.max_deviation <= PASS_THRESHOLD;
    let mut out = String::new();
    out += &format!("oracle\t{oracle}\n");
    out += &format!("max_deviation\t{}\n", sig(report.max_deviation));
    out += &format!("max_leakage\t{}\n", sig(report.max_leakage));
    out += &format!("controlled\t{}\n", report.counts.controlled);
    out += &format!("single\t{}\n", report.counts.single);
    out += &format!("nearest_neighbor\t{}\n", report.nearest_neighbor);
    out += &format!("result\t{}\n", if pass { "pass" } else { "fail" });
    if pass {
        Ok(out)
    } else {
        print!("{out}");
        eprintln!(
            "max deviation {} exceeds {}",
            sig(report.max_deviation),
            sig(PASS_THRESHOLD)
        );
        Err(Failure::Check)
    }
}

fn parse_digits(s: &str) -> Result<Vec<usize>, Failure> {
    s.split(',')
        .map(|d| {
            d.trim()
                .parse()
                .map_err(|_| Failure::Usage(format!("bad digit {d:?} in --input")))
        })
        .collect()
}

fn sim(file: &Path, input: &str) -> Result<String, Failure> {
    let circuit = read_circuit(file)?;
    let digits = parse_digits(input)?;
    let state = PureState::basis(circuit.register().clone(), &digits)?;
    let out = circuit.run(&state)?;
    let mut text = String::new();
    for (d, a) in out.terms(PRINT_CUTOFF) {
        let d: Vec<String> = d.iter().map(usize::to_string).collect();
        text += &format!("{} {} {}\n", d.join(","), sig(a.re), sig(a.im));
    }
    Ok(text)
}

fn cost_table(max_n: u32, format: CostFormat, selected: &[String]) -> Result<String, Failure> {
    let mut registry = cost::formulas();
    if !selected.is_empty() {
        registry.select(selected)?;
    }
    Ok(match format {
        CostFormat::Tsv => cost::render_tsv(&registry, max_n),
        CostFormat::Human => cost::render_human(&registry, max_n),
    })
}

fn photonic_run(variant: &str, trials: usize, seed: u64) -> Result<String, Failure> {
    let variants = photonic::variants();
    let gate = variants.get(variant)?;
    let heralded = gate.detector_levels().is_some();
    let oracle = fredkin_oracle(1)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let mut out = format!("variant\t{variant}\nseed\t{seed}\ntrials\t{trials}\n");
    out += "trial\tsuccess_probability\tkept_fidelity\tfailure_deviation\n";
    let (mut p_min, mut p_max) = (f64::INFINITY, f64::NEG_INFINITY);
    let mut fid_min = f64::INFINITY;
    let mut fail_max: f64 = 0.0;
    for t in 0..trials {
        let input = random_state(polarization_register(), &mut rng);
        let outcome = gate.run(&input)?;
        let ideal = apply(&oracle, &input)?;
        let fid = match &outcome.kept_state {
            Some(k) => k.fidelity(&ideal)?,
            None => 0.0,
        };
        let fail = if heralded {
            let dev = match &outcome.failure_state {
                Some(f) => f.max_deviation(&expected_failure_state(&input)?)?,
                None => f64::INFINITY,
            };
            fail_max = fail_max.max(dev);
            sig(dev)
        } else {
            "-".to_string()
        };
        p_min = p_min.min(outcome.success_probability);
        p_max = p_max.max(outcome.success_probability);
        fid_min = fid_min.min(fid);
        out += &format!(
            "{t}\t{}\t{}\t{fail}\n",
            sig(outcome.success_probability),
            sig(fid)
        );
    }

    let expected_p = if heralded { 0.5 } else { 1.0 };
    let pass = trials == 0
        || ((p_min - expected_p).abs() <= PASS_THRESHOLD
            && (p_max - expected_p).abs() <= PASS_THRESHOLD
            && (1.0 - fid_min).abs() <= PASS_THRESHOLD
            && fail_max <= PASS_THRESHOLD);
    if trials > 0 {
        out += &format!("success_probability_min\t{}\n", sig(p_min));
        out += &format!("success_probability_max\t{}\n", sig(p_max));
        out += &format!("kept_fidelity_min\t{}\n", sig(fid_min));
        if heralded {
            out += &format!("failure_deviation_max\t{}\n", sig(fail_max));
        }
    }
    out += &format!("result\t{}\n", if pass { "pass" } else { "fail" });
    if pass {
        Ok(out)
    } else {
        print!("{out}");
        eprintln!("photonic {variant} gate departs from the ideal Fredkin gate");
        Err(Failure::Check)
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Synth { controls, out } => synth(controls, out.as_deref()),
        Command::Verify {
            file,
            oracle,
            max_dim,
        } => verify(&file, oracle, max_dim),
        Command::Sim { file, input } => sim(&file, &input),
        Command::Cost {
            max_n,
            format,
            formulas,
        } => cost_table(max_n, format, &formulas),
        Command::Photonic {
            variant,
            trials,
            seed,
        } => photonic_run(&variant, trials, seed),
    };
    match result {
        Ok(text) => {
            let mut stdout = io::stdout().lock();
            if stdout
                .write_all(text.as_bytes())
                .and_then(|_| stdout.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Check) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("qfredkin: {msg}");
            ExitCode::from(2)
        }
    }
}

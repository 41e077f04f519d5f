//! Command-line front end.
//!
//! Exit codes: 0 on success, 1 on recorded-value verification mismatch,
//! 2 on parse or precondition errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use apolar::report::{
    self, cmd_betti, cmd_hessian, cmd_hilbert, cmd_lefschetz, cmd_milnor, cmd_report,
    experiment_hessian_membership, render_text, InputSpec, QuotientKind, Report,
};

#[derive(Parser)]
#[command(
    name = "apolar",
    version,
    about = "Exact apolarity, Milnor-algebra, Hessian/Lefschetz and Betti-table analyses of projective hypersurfaces"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Clone)]
struct InputArgs {
    /// Named fixture; see `apolar fixtures`. Also accepts fermat:<n>:<d>.
    #[arg(long, conflicts_with = "poly")]
    example: Option<String>,
    /// Polynomial expression in x0..x{nvars-1} (requires --nvars).
    #[arg(long, requires = "nvars")]
    poly: Option<String>,
    /// Number of variables for --poly.
    #[arg(long)]
    nvars: Option<usize>,
}

impl InputArgs {
    fn spec(&self) -> InputSpec {
        InputSpec {
            example: self.example.clone(),
            poly: self.poly.clone(),
            nvars: self.nvars,
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, Default)]
enum QuotientArg {
    #[default]
    Apolar,
    Jacobian,
}

impl From<QuotientArg> for QuotientKind {
    fn from(q: QuotientArg) -> Self {
        match q {
            QuotientArg::Apolar => QuotientKind::Apolar,
            QuotientArg::Jacobian => QuotientKind::Jacobian,
        }
    }
}

#[derive(Args, Clone)]
struct OutputArgs {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the report to a file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Seed for randomized verdicts (falls back to APOLAR_SEED, then 0).
    #[arg(long)]
    seed: Option<u64>,
}

impl OutputArgs {
    fn seed(&self) -> u64 {
        self.seed
            .or_else(|| {
                std::env::var("APOLAR_SEED")
                    .ok()
                    .and_then(|v| v.parse().ok())
            })
            .unwrap_or(0)
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Hilbert vector and monomial bases of the apolar algebra A(f).
    Hilbert {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Milnor-algebra profile: dimensions, Artinian certificate, Tjurina tail.
    Milnor {
        #[command(flatten)]
        input: InputArgs,
        /// Derivative order k (1 <= k < degree).
        #[arg(long, default_value_t = 1)]
        order: usize,
        /// Highest internal degree to compute.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Mixed Hessian of order (k, l): matrix, determinant, generic rank.
    Hessian {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        k: usize,
        /// Second order; defaults to k.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Strong/weak Lefschetz diagnostics for A(f) or for the Jacobian quotient.
    Lefschetz {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = QuotientArg::Apolar)]
        quotient: QuotientArg,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Graded Betti table via Koszul homology.
    Betti {
        #[command(flatten)]
        input: InputArgs,
        /// Highest internal degree of the table.
        #[arg(long)]
        cap: Option<usize>,
        #[arg(long, value_enum, default_value_t = QuotientArg::Apolar)]
        quotient: QuotientArg,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run every analysis; with --verify-paper, compare against recorded values.
    Report {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, default_value_t = 3)]
        trials: u32,
        /// Check the embedded expectations for the fixture and exit nonzero
        /// on any mismatch.
        #[arg(long)]
        verify_paper: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded experiments over sampled forms.
    Experiment {
        /// Which experiment to run.
        #[arg(value_enum)]
        which: ExperimentKind,
        #[arg(long, default_value_t = 20)]
        samples: usize,
        #[arg(long, default_value_t = 3)]
        nvars: usize,
        #[arg(long, default_value_t = 4)]
        degree: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// List the fixture catalog.
    Fixtures,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ExperimentKind {
    /// Does the Hessian determinant fall into the Jacobian ideal for
    /// sampled singular forms?
    HessianMembership,
}

fn emit(text: String, out: &Option<PathBuf>) -> std::io::Result<()> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
            Ok(())
        }
    }
}

fn emit_report(report: &Report, output: &OutputArgs) -> std::io::Result<()> {
    let text = match output.format {
        Format::Json => report.to_json(),
        Format::Text => render_text(report),
    };
    emit(text, &output.out)
}

fn run() -> Result<ExitCode, apolar::Error> {
    let cli = Cli::parse();
    match cli.cmd {
        Cmd::Hilbert { input, output } => {
            let r = cmd_hilbert(&input.spec(), output.seed())?;
            emit_report(&r, &output).map_err(io_err)?;
        }
        Cmd::Milnor {
            input,
            order,
            cap,
            output,
        } => {
            let r = cmd_milnor(&input.spec(), order, cap, output.seed())?;
            emit_report(&r, &output).map_err(io_err)?;
        }
        Cmd::Hessian {
            input,
            k,
            l,
            trials,
            output,
        } => {
            let l = l.unwrap_or(k);
            let r = cmd_hessian(&input.spec(), k, l, trials, output.seed())?;
            emit_report(&r, &output).map_err(io_err)?;
        }
        Cmd::Lefschetz {
            input,
            quotient,
            trials,
            output,
        } => {
            let r = cmd_lefschetz(&input.spec(), quotient.into(), trials, output.seed())?;
            emit_report(&r, &output).map_err(io_err)?;
        }
        Cmd::Betti {
            input,
            cap,
            quotient,
            output,
        } => {
            let r = cmd_betti(&input.spec(), cap, quotient.into(), output.seed())?;
            emit_report(&r, &output).map_err(io_err)?;
        }
        Cmd::Report {
            input,
            trials,
            verify_paper,
            output,
        } => {
            let spec = input.spec();
            let r = cmd_report(&spec, trials, output.seed())?;
            emit_report(&r, &output).map_err(io_err)?;
            if verify_paper {
                let Some(label) = spec.example.as_deref() else {
                    return Err(apolar::Error::InvalidArgument(
                        "--verify-paper needs --example <fixture>".into(),
                    ));
                };
                match report::verify_against_goldens(&r, label) {
                    None => {
                        return Err(apolar::Error::InvalidArgument(format!(
                            "no recorded values for fixture `{label}`"
                        )))
                    }
                    Some(bad) if bad.is_empty() => {
                        eprintln!("verify {label}: all recorded values reproduced");
                    }
                    Some(bad) => {
                        for b in &bad {
                            eprintln!("verify {label}: MISMATCH {b}");
                        }
                        return Ok(ExitCode::from(1));
                    }
                }
            }
        }
        Cmd::Experiment {
            which,
            samples,
            nvars,
            degree,
            output,
        } => match which {
            ExperimentKind::HessianMembership => {
                let e = experiment_hessian_membership(nvars, degree, samples, output.seed())?;
                let text = match output.format {
                    Format::Json => e.to_json(),
                    Format::Text => {
                        let mut t = format!(
                            "experiment {}: nvars={}, degree={}, samples={}, seed={}\n",
                            e.experiment, e.nvars, e.degree, e.samples, e.seed
                        );
                        for r in &e.results {
                            t.push_str(&format!(
                                "  in_jacobian={} zero_hessian={} {}\n",
                                r.hessian_in_jacobian, r.zero_hessian, r.poly
                            ));
                        }
                        t.push_str(&format!(
                            "all samples in the Jacobian ideal: {}\n",
                            e.all_in_jacobian
                        ));
                        t
                    }
                };
                emit(text, &output.out).map_err(io_err)?;
            }
        },
        Cmd::Fixtures => {
            let mut t = String::new();
            t.push_str(
                "fermat:<n>:<d>  parametric Fermat form x0^d + ... + xn^d (n+1 variables)\n",
            );
            for fx in apolar::fixtures::FIXTURES {
                t.push_str(&format!(
                    "{:<12} nvars={} degree={}  {}\n    {}\n",
                    fx.name, fx.nvars, fx.degree, fx.expr, fx.note
                ));
            }
            print!("{t}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn io_err(e: std::io::Error) -> apolar::Error {
    apolar::Error::InvalidArgument(format!("i/o error: {e}"))
}

fn main() -> ExitCode {
    match run() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

//! `g2c`: analyze G2 structures on homogeneous 7-frames and the almost
//! contact metric structures they induce.
//!
//! Exit codes: 0 success, 1 validation or usage error, 2 audit failure
//! (an internal-consistency violation, never a property of the input).

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};

use g2c_core::analysis::{self, Backend, FuzzError, XiChoice};
use g2c_core::manifold::{self, ManifoldSpec, SpecError};

#[derive(Parser)]
#[command(
    name = "g2c",
    version,
    about = "Exact analysis of G2 cross products and induced almost contact metric structures on homogeneous 7-frames"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackendArg {
    Exact,
    Float,
}

impl From<BackendArg> for Backend {
    fn from(b: BackendArg) -> Backend {
        match b {
            BackendArg::Exact => Backend::Exact,
            BackendArg::Float => Backend::Float,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Run the validation gates on a spec (file path or builtin name).
    Validate { spec: String },
    /// Print the connection, cross product and exterior derivative tables.
    Tables {
        spec: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
    },
    /// Full analysis for one unit field.
    Analyze {
        spec: String,
        /// Unit field as 7 rationals, e.g. --xi 3/5 4/5 0 0 0 0 0
        #[arg(long, num_args = 7, value_name = "RATIONAL", conflicts_with = "u")]
        xi: Option<Vec<String>>,
        /// Stereographic parameter as 6 rationals.
        #[arg(long, num_args = 6, value_name = "RATIONAL")]
        u: Option<Vec<String>>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long, value_enum)]
        backend: Option<BackendArg>,
    },
    /// Run seeded randomized audits over exact rational unit fields.
    Fuzz {
        spec: String,
        #[arg(long)]
        trials: u64,
        #[arg(long, default_value = "1")]
        seed: u64,
    },
    /// List built-in example specs, or print one as JSON.
    Examples { name: Option<String> },
}

fn load_spec(arg: &str) -> Result<ManifoldSpec, SpecError> {
    if std::path::Path::new(arg).exists() {
        return ManifoldSpec::from_path(arg);
    }
    if let Some(spec) = manifold::builtin(arg) {
        return Ok(spec);
    }
    ManifoldSpec::from_path(arg)
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return code;
        }
    };

    match cli.command {
        Command::Validate { spec } => match load_spec(&spec).and_then(|s| analysis::validate(&s)) {
            Ok((structure, cross, xi_note)) => {
                println!("structure constants:");
                print!("{structure}");
                println!("cross product axioms:");
                print!("{cross}");
                if let Some(note) = xi_note {
                    println!("{note}");
                }
                if let Some(fail) = structure.first_failure() {
                    println!(
                        "warning: {} fails ({}); analysis treats the bracket table as a frame snapshot",
                        fail.name,
                        fail.witness.as_deref().unwrap_or("no witness")
                    );
                }
                println!("ok");
                0
            }
            Err(e) => {
                eprintln!("error: {e}");
                1
            }
        },
        Command::Tables {
            spec,
            format,
            backend,
        } => {
            let result =
                load_spec(&spec).and_then(|s| analysis::tables(&s, backend.map(Backend::from)));
            match result {
                Ok(report) => {
                    match format {
                        Format::Text => print!("{}", report.render_text()),
                        Format::Json => println!("{}", report.to_json()),
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Command::Analyze {
            spec,
            xi,
            u,
            format,
            backend,
        } => {
            let choice = match (xi, u) {
                (Some(coords), None) => Some(XiChoice::Coords(coords)),
                (None, Some(params)) => Some(XiChoice::Stereographic(params)),
                (None, None) => None,
                (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
            };
            let result = load_spec(&spec)
                .and_then(|s| analysis::analyze(&s, choice.as_ref(), backend.map(Backend::from)));
            match result {
                Ok(report) => {
                    match format {
                        Format::Text => print!("{}", report.render_text()),
                        Format::Json => println!("{}", report.to_json()),
                    }
                    if report.audit_passed {
                        0
                    } else {
                        eprintln!("error: theorem audit failed; this is an internal inconsistency");
                        2
                    }
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Command::Fuzz { spec, trials, seed } => {
            if trials == 0 {
                eprintln!("error: --trials must be at least 1");
                return 1;
            }
            match load_spec(&spec).and_then(|s| {
                analysis::fuzz(&s, trials, seed).map_err(|e| match e {
                    FuzzError::Spec(s) => s,
                    FuzzError::Audit(f) => {
                        eprintln!("error: {f}");
                        std::process::exit(2);
                    }
                })
            }) {
                Ok(summary) => {
                    println!(
                        "{}: {} trials (seed {}), all audits passed",
                        summary.spec, summary.trials, summary.seed
                    );
                    println!(
                        "trivial instances: {}, almost-K-contact instances: {}",
                        summary.trivial_count, summary.almost_k_contact_count
                    );
                    println!("audit entries (applicable/passed):");
                    for e in &summary.entries {
                        println!("  {:<48} {:>5}/{:<5}", e.name, e.applicable, e.passed);
                    }
                    0
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    1
                }
            }
        }
        Command::Examples { name } => match name {
            None => {
                println!("built-in specs:");
                for spec in manifold::builtin_examples() {
                    println!(
                        "  {:<12} {} brackets, {} form terms",
                        spec.name,
                        spec.brackets.len(),
                        spec.phi.len()
                    );
                }
                println!("print one with `g2c examples <name>`");
                0
            }
            Some(name) => match manifold::builtin(&name) {
                Some(spec) => {
                    println!("{}", spec.to_json());
                    0
                }
                None => {
                    eprintln!("error: no builtin named {name:?}");
                    1
                }
            },
        },
    }
}

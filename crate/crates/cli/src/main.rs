use std::process::ExitCode;

use clap::{Parser, Subcommand};
use so5_cli::facts::{parse_manifest, run_suite, BUILTIN_MANIFEST};
use so5_cli::{commands, exit_code, Output, Settings};

#[derive(Parser)]
#[command(name = "so5", version, about = "Finite groups of orthogonal transformations of R^5: construction, character tables, F2 cohomology and classification checks")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Largest group order for algorithms that materialize all elements.
    #[arg(long, global = true)]
    max_order: Option<u64>,
    /// Coset budget for Todd-Coxeter enumeration.
    #[arg(long, global = true, default_value_t = so5_core::construct::DEFAULT_TC_BUDGET)]
    tc_budget: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a group from an expression and print its generators.
    Construct {
        #[arg(long)]
        expr: String,
    },
    /// Order, classes, solvability and normal structure.
    Info {
        #[arg(long)]
        expr: String,
    },
    /// Exact character table with Frobenius-Schur indicators.
    Chartab {
        #[arg(long)]
        expr: String,
    },
    /// Decide whether the group embeds in O(n), SO(n) or an orientation-preserving block group.
    Embed {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        dim: usize,
        /// O, SO, or a split such as O3xO2 or O4xO1.
        #[arg(long, default_value = "O")]
        variant: String,
    },
    /// Which cases of the classification the group belongs to, with witnesses.
    Classify {
        #[arg(long)]
        expr: String,
    },
    /// Dimension of H^1 or H^2 with coefficients in an F2-module.
    Cohom {
        #[arg(long, alias = "expr", default_value = "alt(5)")]
        group: String,
        /// deleted_perm, natural_sl24 or trivial.
        #[arg(long)]
        module: String,
        #[arg(long, value_parser = clap::value_parser!(u8).range(1..=2))]
        degree: u8,
        /// Presentation file: generator line, then one relator per line.
        #[arg(long)]
        presentation: Option<std::path::PathBuf>,
    },
    /// Exact rational orthogonal model of a named group.
    Model {
        #[arg(long, alias = "expr")]
        name: String,
    },
    /// Run the fact suite.
    VerifyPaper {
        /// Glob over fact ids.
        #[arg(long)]
        filter: Option<String>,
        /// Alternative manifest file.
        #[arg(long)]
        manifest: Option<std::path::PathBuf>,
        #[arg(long, default_value_t = std::thread::available_parallelism().map_or(1, |n| n.get()))]
        jobs: usize,
    },
}

fn read(path: &std::path::Path) -> so5_core::Result<String> {
    std::fs::read_to_string(path)
        .map_err(|e| so5_core::Error::arg(format!("{}: {e}", path.display())))
}

fn dispatch(cli: &Cli) -> so5_core::Result<Output> {
    let s = Settings {
        max_order: cli.max_order,
        tc_budget: cli.tc_budget,
    };
    match &cli.command {
        Command::Construct { expr } => commands::construct(&s, expr),
        Command::Info { expr } => commands::info(&s, expr),
        Command::Chartab { expr } => commands::chartab(&s, expr),
        Command::Embed { expr, dim, variant } => commands::embed(&s, expr, *dim, variant),
        Command::Classify { expr } => commands::classify(&s, expr),
        Command::Cohom {
            group,
            module,
            degree,
            presentation,
        } => {
            let text = presentation.as_deref().map(read).transpose()?;
            commands::cohom(&s, group, module, *degree, text.as_deref())
        }
        Command::Model { name } => {
            if !commands::model_names().contains(&name.as_str()) {
                return Err(so5_core::Error::arg(format!(
                    "unknown model {name:?}; known: {}",
                    commands::model_names().join(", ")
                )));
            }
            commands::model(name)
        }
        Command::VerifyPaper {
            filter,
            manifest,
            jobs,
        } => {
            let text = match manifest {
                Some(p) => read(p)?,
                None => BUILTIN_MANIFEST.to_string(),
            };
            let facts = parse_manifest(&text)?;
            let report = run_suite(&facts, filter.as_deref(), *jobs, &s)?;
            Ok(Output {
                text: report.to_text(),
                json: report.to_json(),
                exit: report.exit_code(),
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(&cli) {
        Ok(out) => {
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&out.json).expect("serializable"));
            } else {
                print!("{}", out.text);
            }
            ExitCode::from(out.exit as u8)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e) as u8)
        }
    }
}

//! `hksym`: exact generating series, published tables and verification
//! suites for curve counting on holomorphic symplectic 4-folds.

mod checks;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use enumerative_series::{fujiki_hilb, fujiki_kummer, n_series, NSeries};
use hilb2_forms::{expand_form, table1, table2, BBSquare, FormName};
use quasi_jacobi::{generator_series, GeneratorSymbol};
use series_core::eta_power;
use series_core::rat::parse_rat;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Md,
    Text,
}

/// Flags shared by every subcommand.
#[derive(Debug, Clone, Args)]
pub struct RunConfig {
    /// q-order of all series expansions.
    #[arg(long, env = "HKSYM_TRUNC", default_value_t = 75)]
    pub trunc: i64,
    /// Number of worker threads for sweeps.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Output path; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Parser)]
#[command(
    name = "hksym",
    version,
    about = "Exact series, tables and identity checks for holomorphic symplectic 4-folds"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a named series.
    Series {
        /// One of F, G, A, B, I, Aprime, Bprime, Itilde, N0, N1, N2, Nprime,
        /// Ndprime, E2, E4, E6, Delta, Theta2, Wp.
        name: String,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Print one of the published tables.
    Table {
        /// One of gv1, gv2, fujiki-hilb, fujiki-kummer.
        which: String,
        /// Largest class square for gv1/gv2 (a rational like 24 or 79/2).
        #[arg(long)]
        max: Option<String>,
        /// Largest number of points for the Fujiki tables.
        #[arg(long = "max-n")]
        max_n: Option<i64>,
        #[command(flatten)]
        config: RunConfig,
    },
    /// Run a verification suite and report each identity.
    Check {
        /// One of all, ramanujan, anomaly, beta-welldef, integrality-g1,
        /// integrality-g2, k3xk3, tp2, ercf, fano.
        suite: String,
        #[command(flatten)]
        config: RunConfig,
    },
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let config = match &cli.command {
        Command::Series { config, .. }
        | Command::Table { config, .. }
        | Command::Check { config, .. } => config.clone(),
    };
    if config.trunc < 2 {
        return usage_error("--trunc must be at least 2");
    }
    if config.jobs < 1 {
        return usage_error("--jobs must be at least 1");
    }
    match cli.command {
        Command::Series { name, config } => cmd_series(&name, &config),
        Command::Table {
            which,
            max,
            max_n,
            config,
        } => cmd_table(&which, max.as_deref(), max_n, &config),
        Command::Check { suite, config } => checks::cmd_check(&suite, &config),
    }
}

fn cmd_series(name: &str, config: &RunConfig) -> ExitCode {
    let trunc = config.trunc;
    if let Some(form) = FormName::parse(name) {
        return output::emit_qy_series(&expand_form(form, trunc), config);
    }
    if let Some(n) = NSeries::parse(name) {
        // The q-series starts at q^{-1}; the table covers squares below trunc.
        return output::emit_l_table(&n_series(n, trunc - 2), "l", n.name(), config);
    }
    let series = match name {
        "E2" => Some(generator_series(GeneratorSymbol::E2, trunc)),
        "E4" => Some(generator_series(GeneratorSymbol::E4, trunc)),
        "E6" => Some(generator_series(GeneratorSymbol::E6, trunc)),
        "Theta2" => Some(generator_series(GeneratorSymbol::TH2, trunc)),
        "Wp" => Some(generator_series(GeneratorSymbol::WP, trunc)),
        "Delta" => Some(eta_power(24, trunc - 1).shift(1)),
        _ => None,
    };
    match series {
        Some(s) => output::emit_qy_series(&s, config),
        None => usage_error(&format!("unknown series name: {name}")),
    }
}

fn cmd_table(which: &str, max: Option<&str>, max_n: Option<i64>, config: &RunConfig) -> ExitCode {
    match which {
        "gv1" | "gv2" => {
            let default = if which == "gv1" { "24" } else { "79/2" };
            let max = max.unwrap_or(default);
            let Some(max) = parse_rat(max) else {
                return usage_error(&format!("--max must be a rational number, got {max}"));
            };
            // Feasibility: the largest square must fit under the truncation,
            // including its cross-check representative.
            if let Some(top) = BBSquare::effective_range(&max).last() {
                let needed = top.secondary_rep().1 + 1;
                if config.trunc < needed {
                    return usage_error(&format!(
                        "truncation too small for --max {max}: need q-order {needed}, have {}",
                        config.trunc
                    ));
                }
            }
            let result = if which == "gv1" {
                table1(&max).map(|rows| output::emit_table1(&rows, config))
            } else {
                table2(&max).map(|rows| output::emit_table2(&rows, config))
            };
            match result {
                Ok(code) => code,
                Err(e) => usage_error(&e.to_string()),
            }
        }
        "fujiki-hilb" | "fujiki-kummer" => {
            let max_n = max_n.unwrap_or(6);
            if max_n < 0 {
                return usage_error("--max-n must be non-negative");
            }
            if config.trunc < max_n + 2 {
                return usage_error(&format!(
                    "truncation too small for --max-n {max_n}: need q-order {}, have {}",
                    max_n + 2,
                    config.trunc
                ));
            }
            let entry = |n: i64, j: i64| {
                if which == "fujiki-hilb" {
                    fujiki_hilb(n - j, n).get(n).unwrap().clone()
                } else {
                    fujiki_kummer(n - j, n).get(n).unwrap().clone()
                }
            };
            let rows: Vec<Vec<series_core::Rat>> = (0..=max_n)
                .map(|n| (0..=n).map(|j| entry(n, j)).collect())
                .collect();
            output::emit_fujiki(&rows, config)
        }
        _ => usage_error(&format!("unknown table: {which}")),
    }
}

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use tlt_cli::config::parse_label;
use tlt_cli::{cmd_degeneracy, cmd_scales, cmd_selection, cmd_sweep, cmd_table};
use tlt_cli::{CliError, CliResult, OutputFormat, Parity, RunConfig, SweepVariable};
use tlt_core::{ConfigLabel, PotentialMode};

/// Energy scales and Pauli-basis couplings of a Majorana / longitudinal-transmon circuit.
#[derive(Parser, Debug)]
#[command(name = "tlt", version, about)]
struct Cli {
    /// Flat JSON config; missing keys take the reference-circuit defaults.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Fock cutoff (maximum occupation) of both bosonic modes.
    #[arg(long, global = true)]
    cutoff: Option<usize>,
    /// Transmon potential: quartic_ejq, quartic_ejstar or full_cosine.
    #[arg(long, global = true)]
    mode: Option<PotentialMode>,
    #[arg(long, global = true, value_enum)]
    parity: Option<Parity>,
    #[arg(long, global = true, value_enum)]
    format: Option<OutputFormat>,
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Derived energy scales with the reconciliation notes.
    Scales,
    /// Coupling table 1 (configuration A), 2 (B) or 3 (C-F).
    Table {
        #[arg(long)]
        table: Option<u8>,
    },
    /// Couplings of every configuration in both parity sectors.
    Selection,
    /// Majorana charging splitting over an n_g^(a) grid.
    Degeneracy {
        #[arg(long, value_parser = parse_label)]
        label: Option<ConfigLabel>,
        /// start:end:step
        #[arg(long)]
        range: Option<String>,
    },
    /// A coupling table over a parameter grid.
    Sweep {
        #[arg(long, value_enum)]
        variable: Option<SweepVariable>,
        /// start:end:step
        #[arg(long)]
        range: Option<String>,
        #[arg(long)]
        table: Option<u8>,
    },
}

fn run(cli: Cli) -> CliResult<()> {
    let mut cfg = match &cli.config {
        Some(path) => RunConfig::from_path(path)?,
        None => RunConfig::default(),
    };
    if let Some(c) = cli.cutoff {
        cfg.fock_cutoff = c;
    }
    if let Some(m) = cli.mode {
        cfg.potential_mode = m;
    }
    if let Some(p) = cli.parity {
        cfg.parity = Some(p);
    }
    if let Some(f) = cli.format {
        cfg.output_format = f;
    }
    let text = match cli.command {
        Command::Scales => cmd_scales(&cfg)?,
        Command::Table { table } => cmd_table(&cfg, table.unwrap_or(cfg.table))?,
        Command::Selection => cmd_selection(&cfg)?,
        Command::Degeneracy { label, range } => {
            if let Some(l) = label {
                cfg.label = l;
            }
            if range.is_some() {
                cfg.range = range;
            }
            cmd_degeneracy(&cfg)?
        }
        Command::Sweep { variable, range, table } => {
            if variable.is_some() {
                cfg.sweep_variable = variable;
            }
            if range.is_some() {
                cfg.range = range;
            }
            if let Some(t) = table {
                cfg.table = t;
            }
            cmd_sweep(&cfg)?
        }
    };
    match &cli.out {
        Some(path) => std::fs::write(path, text).map_err(|source| CliError::Io { path: path.clone(), source }),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|source| CliError::Io { path: PathBuf::from("<stdout>"), source })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

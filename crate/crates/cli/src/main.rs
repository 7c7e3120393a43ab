use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};

use sbtg_cli::{
    parse_instance_with_cap, run_check, run_enumerate, run_witness, Check, CliError, Mode, Options,
    Report, Target,
};
use sbtg_core::sets::DEFAULT_SE_CAP;

#[derive(Parser)]
#[command(
    name = "sbtg",
    version,
    about = "Checks finite soft bitopological groups"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run one check on an instance file.
    Check {
        file: PathBuf,
        #[arg(value_enum, default_value = "sbtg")]
        check: Check,
        #[command(flatten)]
        flags: Flags,
    },
    /// Search for a counterexample.
    Witness {
        file: PathBuf,
        #[arg(value_enum)]
        target: Target,
        #[command(flatten)]
        flags: Flags,
    },
    /// List the soft elements in canonical order.
    EnumerateSe {
        file: PathBuf,
        #[command(flatten)]
        flags: Flags,
    },
}

#[derive(Args, Clone)]
struct Flags {
    /// Topology names, `A,B` or `A`; defaults to the first two declared.
    #[arg(long)]
    topologies: Option<String>,
    /// Separation level.
    #[arg(long, value_parser = clap::value_parser!(u8).range(0..=2))]
    level: Option<u8>,
    /// Disjointness used for pairwise T2.
    #[arg(long, value_enum, default_value = "sectionwise")]
    mode: Mode,
    /// Map name for `hom`.
    #[arg(long)]
    map: Option<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Cap on the number of soft elements.
    #[arg(long)]
    cap_se: Option<usize>,
    /// Leave out the elapsed time, so output is byte-identical across runs.
    #[arg(long)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

impl Flags {
    fn options(&self) -> Options {
        Options {
            topologies: self.topologies.clone(),
            level: self.level,
            mode: self.mode,
            map: self.map.clone(),
            cap_se: self.cap_se,
        }
    }

    fn echo(&self) -> String {
        let mut s = String::new();
        if let Some(t) = &self.topologies {
            s += &format!(" --topologies {t}");
        }
        if let Some(l) = self.level {
            s += &format!(" --level {l}");
        }
        if self.mode != Mode::Sectionwise {
            s += " --mode soft-element";
        }
        if let Some(m) = &self.map {
            s += &format!(" --map {m}");
        }
        if let Some(c) = self.cap_se {
            s += &format!(" --cap-se {c}");
        }
        s
    }
}

fn value_name<T: ValueEnum>(v: T) -> String {
    v.to_possible_value()
        .expect("no skipped variants")
        .get_name()
        .to_string()
}

fn run(cli: &Cli) -> Result<(Report, Format), CliError> {
    let start = Instant::now();
    let (file, flags) = match &cli.command {
        Command::Check { file, flags, .. }
        | Command::Witness { file, flags, .. }
        | Command::EnumerateSe { file, flags } => (file, flags),
    };
    let opts = flags.options();
    let inst = parse_instance_with_cap(file, flags.cap_se.unwrap_or(DEFAULT_SE_CAP))?;
    let (mut report, echo) = match &cli.command {
        Command::Check { check, .. } => (
            run_check(&inst, *check, &opts)?,
            format!("check {} {}", file.display(), value_name(*check)),
        ),
        Command::Witness { target, .. } => (
            run_witness(&inst, *target, &opts)?,
            format!("witness {} {}", file.display(), value_name(*target)),
        ),
        Command::EnumerateSe { .. } => (
            run_enumerate(&inst, &opts)?,
            format!("enumerate-se {}", file.display()),
        ),
    };
    report.command = echo + &flags.echo();
    if !flags.no_timing {
        report.elapsed = Some(start.elapsed());
    }
    Ok((report, flags.format))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok((report, format)) => {
            let text = match format {
                Format::Text => report.to_text(),
                Format::Json => {
                    serde_json::to_string_pretty(&report.to_json()).expect("plain data") + "\n"
                }
            };
            let mut out = std::io::stdout().lock();
            if out
                .write_all(text.as_bytes())
                .and_then(|_| out.flush())
                .is_err()
            {
                return ExitCode::from(2);
            }
            ExitCode::from(report.outcome.code())
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

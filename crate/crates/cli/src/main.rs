use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilquandle::welded::Mode;
use nilquandle::DEFAULT_ORDER_CAP;
use nilquandle_cli::commands::{self, Constructed, FreeNilpRequest};
use nilquandle_cli::formats;
use nilquandle_cli::report::{Format, Report};
use nilquandle_cli::{CliError, CliResult};

#[derive(Parser)]
#[command(name = "nilquandle", version, about = "Nilpotency invariants and constructions for finite racks and quandles")]
struct Cli {
    /// Largest group or quandle size built before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_ORDER_CAP)]
    cap: usize,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// How `gamma` chooses braids and colourings.
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::Exhaustive)]
    mode: ModeArg,
    /// Work budget for `gamma` (tuple evaluations).
    #[arg(long, global = true, default_value_t = 100_000)]
    budget: u64,
    /// Seed for sampling.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Lift the default bounds on free nilpotent computations.
    #[arg(long, global = true)]
    allow_large: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Exhaustive,
    Sample,
}

#[derive(Subcommand)]
enum Command {
    /// Axioms, orbits, Inn(Q), nilpotency and reductivity classes.
    Analyze { file: PathBuf },
    /// Build a quandle table.
    Construct {
        #[command(subcommand)]
        kind: ConstructKind,
        /// Write the table here instead of standard output.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Enveloping group of a quandle, or of 2-nilpotent lattice data.
    Envelope {
        file: PathBuf,
        /// Read lattice data instead of a quandle table.
        #[arg(long)]
        lattice: bool,
        /// Write the presentation of the enveloping group here.
        #[arg(long)]
        presentation_out: Option<PathBuf>,
    },
    /// Act on a colouring by a welded braid word such as "K12 t1^-1".
    Braid {
        file: PathBuf,
        word: String,
        /// Colours of the strands, e.g. "1 0".
        tuple: String,
    },
    /// Whether Γ_c of the pure welded braid group acts trivially on colourings.
    Gamma {
        file: PathBuf,
        #[arg(long)]
        c: usize,
        #[arg(long, default_value_t = 3)]
        strands: usize,
    },
    /// A derivation of the free Lie ring with nonzero trace.
    Trace {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
    },
    /// Magnus expansion of a word and of the quandle element w x_gen w^-1.
    Freenilp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        word: String,
        /// 1-based generator index.
        #[arg(long)]
        gen: usize,
        /// Second element to compare with and act on.
        #[arg(long, requires = "other_gen")]
        other: Option<String>,
        #[arg(long, requires = "other")]
        other_gen: Option<usize>,
        /// Also compare the free 2-nilpotent quandle on two generators with Q_{0,0}.
        #[arg(long)]
        q00: Option<usize>,
    },
}

#[derive(Subcommand)]
enum ConstructKind {
    /// Two orbits of sizes M and N, each shifting the other.
    Qmn { m: u64, n: u64 },
    /// From 2-nilpotent lattice data.
    TwoNilp { file: PathBuf },
    /// Cosets of subgroups of a finite group.
    Coset {
        file: PathBuf,
        /// Allow z_i outside H_i, giving a rack.
        #[arg(long)]
        rack: bool,
    },
}

fn name(p: &Path) -> String {
    p.display().to_string()
}

fn write_file(path: &Path, contents: &str) -> CliResult<()> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn run(cli: Cli) -> CliResult<String> {
    let cap = cli.cap;
    let report: Report = match cli.command {
        Command::Analyze { file } => commands::analyze(&name(&file), &formats::load_rack(&file)?, cap)?,
        Command::Construct { kind, output } => {
            let c: Constructed = match kind {
                ConstructKind::Qmn { m, n } => commands::construct_qmn(m, n, cap)?,
                ConstructKind::TwoNilp { file } => {
                    let d = formats::parse_two_nilpotent(&name(&file), &formats::read(&file)?)?;
                    commands::construct_two_nilpotent(&name(&file), &d, cap)?
                }
                ConstructKind::Coset { file, rack } => {
                    let d = formats::parse_group_data(&name(&file), &formats::read(&file)?)?;
                    commands::construct_coset(&name(&file), &d, rack)?
                }
            };
            let table = formats::write_table(&c.rack, &c.comments);
            match output {
                Some(path) => {
                    write_file(&path, &table)?;
                    let mut r = c.report;
                    r.note(format!("table written to {}", path.display()));
                    r
                }
                None => return Ok(table),
            }
        }
        Command::Envelope {
            file,
            lattice,
            presentation_out,
        } => {
            if lattice {
                if presentation_out.is_some() {
                    return Err(CliError::Usage("--presentation-out needs a quandle table".into()));
                }
                let d = formats::parse_two_nilpotent(&name(&file), &formats::read(&file)?)?;
                commands::envelope_data(&name(&file), &d, cap)?
            } else {
                let q = formats::load_rack(&file)?;
                let (mut r, p) = commands::envelope_quandle(&name(&file), &q, cap)?;
                if let (Some(path), Some(p)) = (presentation_out, p) {
                    write_file(&path, &formats::write_presentation(&p))?;
                    r.note(format!("presentation written to {}", path.display()));
                }
                r
            }
        }
        Command::Braid { file, word, tuple } => {
            let q = formats::load_rack(&file)?;
            commands::braid(&name(&file), &q, &word, &formats::parse_tuple(&tuple)?)?
        }
        Command::Gamma { file, c, strands } => {
            let q = formats::load_rack(&file)?;
            let mode = match cli.mode {
                ModeArg::Exhaustive => Mode::Exhaustive,
                ModeArg::Sample => Mode::Sample,
            };
            commands::gamma(&name(&file), &q, strands, c, mode, cli.budget, cli.seed)?
        }
        Command::Trace { n, c } => commands::trace(n, c)?,
        Command::Freenilp {
            n,
            c,
            word,
            gen,
            other,
            other_gen,
            q00,
        } => commands::freenilp(&FreeNilpRequest {
            n,
            c,
            word: &word,
            gen,
            other: other.as_deref().zip(other_gen),
            q00_depth: q00,
            allow_large: cli.allow_large,
        })?,
    };
    Ok(report.render(cli.format))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

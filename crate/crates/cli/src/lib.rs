//! `friendship` command-line tool.
//!
//! Exit codes: 0 on success or when every checked property holds, 1 when a
//! property fails (including a NotFriendship verdict, a non-SBIBD input to
//! `build`, or a Hall violation), 2 on usage, I/O and parse errors.

use std::fs;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use friendship_core::construct::{check_hall_condition, digraph_from_sbibd, fancy_wheel};
use friendship_core::design::{projective_plane, Design};
use friendship_core::search::SearchConfig;
use friendship_core::verify::{classify, consequence_reports, is_friendship, Classification};
use friendship_core::{enumerate_friendship_digraphs, Digraph, Error};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(name = "friendship", version, about = "Build, verify and classify friendship digraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output path; `-` is standard output
    #[arg(long, global = true, default_value = "-")]
    out: String,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,

    /// Suppress standard output; the exit code still reports the outcome
    #[arg(long, global = true)]
    quiet: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Emit {
    Design,
    Digraph,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Fancy wheel with hub 0 and the given directed cycle lengths
    Wheel {
        #[arg(long, value_delimiter = ',', required = true)]
        cycles: Vec<usize>,
    },
    /// Projective plane of prime-power order q, as a design or a digraph
    Plane {
        #[arg(long)]
        q: u32,
        #[arg(long, value_enum, default_value_t = Emit::Design)]
        emit: Emit,
        /// Shuffle SDR candidate order (digraph output only)
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Regular friendship digraph from a (k²−k+1, k, 1) design file
    Build {
        #[arg(long)]
        design: String,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Friendship check, plus the six consequence checks with --all-props
    Verify {
        #[arg(long)]
        digraph: String,
        #[arg(long)]
        all_props: bool,
    },
    /// Fancy wheel, regular, or not a friendship digraph
    Classify {
        #[arg(long)]
        digraph: String,
    },
    /// Enumerate all friendship digraphs of order n as JSON lines
    Search {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        modulo_iso: bool,
        #[arg(long)]
        max_results: Option<usize>,
        /// Allow n above 7; cost grows steeply
        #[arg(long)]
        allow_large: bool,
    },
    /// Hall's condition for the block complements of a design
    Hall {
        #[arg(long)]
        design: String,
        #[arg(long)]
        exhaustive: bool,
    },
}

/// Failure that ends the run with a one-line diagnostic.
struct Fatal {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> Fatal {
    Fatal {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

impl From<Error> for Fatal {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::NotSbibd(_) | Error::HallViolation { .. } => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Fatal {
            code,
            message: e.to_string(),
        }
    }
}

struct Io<'a> {
    stdin: &'a mut dyn Read,
}

impl Io<'_> {
    fn read(&mut self, path: &str) -> Result<String, Fatal> {
        if path == "-" {
            let mut text = String::new();
            self.stdin
                .read_to_string(&mut text)
                .map_err(|e| usage(format!("cannot read standard input: {e}")))?;
            Ok(text)
        } else {
            fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))
        }
    }

    fn digraph(&mut self, path: &str) -> Result<Digraph, Fatal> {
        Digraph::from_json(&self.read(path)?).map_err(|e| usage(format!("{path}: {e}")))
    }

    fn design(&mut self, path: &str) -> Result<Design, Fatal> {
        Design::from_json(&self.read(path)?).map_err(|e| usage(format!("{path}: {e}")))
    }
}

fn render_digraph(d: &Digraph, format: Format) -> String {
    match format {
        Format::Json => d.to_json() + "\n",
        Format::Dot => d.to_dot(),
    }
}

fn json_only(format: Format, what: &str) -> Result<(), Fatal> {
    match format {
        Format::Json => Ok(()),
        Format::Dot => Err(usage(format!("--format dot is only available for digraphs, not {what}"))),
    }
}

fn execute(cli: &Cli, io: &mut Io) -> Result<(String, i32), Fatal> {
    let format = cli.format;
    match &cli.command {
        Command::Wheel { cycles } => Ok((render_digraph(&fancy_wheel(cycles)?, format), EXIT_OK)),
        Command::Plane { q, emit, seed } => {
            let plane = projective_plane(*q)?;
            match emit {
                Emit::Design => {
                    json_only(format, "designs")?;
                    Ok((plane.to_json() + "\n", EXIT_OK))
                }
                Emit::Digraph => {
                    let d = digraph_from_sbibd(&plane, *seed)?;
                    Ok((render_digraph(&d, format), EXIT_OK))
                }
            }
        }
        Command::Build { design, seed } => {
            let design = io.design(design)?;
            let d = digraph_from_sbibd(&design, *seed)?;
            Ok((render_digraph(&d, format), EXIT_OK))
        }
        Command::Verify { digraph, all_props } => {
            json_only(format, "reports")?;
            let d = io.digraph(digraph)?;
            let mut reports = vec![is_friendship(&d)];
            if *all_props {
                reports.extend(consequence_reports(&d));
            }
            let code = if reports.iter().all(|r| r.holds) {
                EXIT_OK
            } else {
                EXIT_FAILED
            };
            let text = reports.iter().map(|r| r.to_json() + "\n").collect();
            Ok((text, code))
        }
        Command::Classify { digraph } => {
            json_only(format, "verdicts")?;
            let d = io.digraph(digraph)?;
            let verdict = classify(&d).map_err(|e| usage(format!("internal error: {e}")))?;
            let code = match verdict {
                Classification::NotFriendship { .. } => EXIT_FAILED,
                _ => EXIT_OK,
            };
            let mut value = serde_json::to_value(&verdict).expect("verdict serializes");
            value["n"] = d.order().into();
            Ok((value.to_string() + "\n", code))
        }
        Command::Search {
            n,
            modulo_iso,
            max_results,
            allow_large,
        } => {
            json_only(format, "search results")?;
            let config = SearchConfig {
                n: *n,
                max_results: *max_results,
                modulo_iso: *modulo_iso,
                allow_large: *allow_large,
            };
            let results = enumerate_friendship_digraphs(&config)?;
            let (mut wheels, mut regular, mut other) = (0, 0, 0);
            let mut text = String::new();
            for d in &results {
                match classify(d).map_err(|e| usage(format!("internal error: {e}")))? {
                    Classification::FancyWheel { .. } => wheels += 1,
                    Classification::Regular { .. } => regular += 1,
                    Classification::NotFriendship { .. } => other += 1,
                }
                text.push_str(&d.to_json());
                text.push('\n');
            }
            let summary = serde_json::json!({
                "summary": {
                    "n": n,
                    "modulo_iso": modulo_iso,
                    "total": results.len(),
                    "fancy_wheel": wheels,
                    "regular": regular,
                    "not_friendship": other,
                }
            });
            text.push_str(&summary.to_string());
            text.push('\n');
            Ok((text, EXIT_OK))
        }
        Command::Hall { design, exhaustive } => {
            json_only(format, "reports")?;
            let design = io.design(design)?;
            let report = check_hall_condition(&design, *exhaustive)?;
            let code = if report.holds { EXIT_OK } else { EXIT_FAILED };
            let text = serde_json::to_string(&report).expect("report serializes") + "\n";
            Ok((text, code))
        }
    }
}

/// Parses `args` (program name first), runs the subcommand, and returns the
/// exit code. Primary output goes to `stdout` or `--out`; diagnostics to
/// `stderr`.
pub fn run<I, S>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return EXIT_OK;
            }
            let rendered = e.to_string();
            let line = rendered.lines().next().unwrap_or("invalid arguments");
            let _ = writeln!(stderr, "{line}");
            return EXIT_USAGE;
        }
    };
    let mut io = Io { stdin };
    match execute(&cli, &mut io) {
        Ok((text, code)) => {
            if cli.out != "-" {
                if let Err(e) = fs::write(&cli.out, &text) {
                    let _ = writeln!(stderr, "error: cannot write {}: {e}", cli.out);
                    return EXIT_USAGE;
                }
            } else if !cli.quiet {
                let _ = stdout.write_all(text.as_bytes());
            }
            code
        }
        Err(fatal) => {
            let _ = writeln!(stderr, "error: {}", fatal.message);
            fatal.code
        }
    }
}

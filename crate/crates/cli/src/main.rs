use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use chainweights::criterion::criterion_check;
use chainweights::oracle::{verify_extension_theorem, Budgets};
use chainweights::weightfile::parse_weight_file;
use chainweights::weights::{hamming, homogeneous, Weight};
use chainweights::{IdealExponent, ProductRing};
use clap::{Args, Parser, Subcommand, ValueEnum};

mod render;

/// Exact reports on invariant weights over finite products of chain rings.
///
/// Rings are written as components joined by `*`: `Z<p^d>` for the integers
/// modulo a prime power and `F<p>x<d>` for F_p[x]/(x^d), e.g. `Z2*Z4` or
/// `Z9*F2x2`.
///
/// Exit status: 0 when the report passes, 1 when the criterion fails or the
/// oracle finds a non-extendable isometry, 2 on usage or input errors.
#[derive(Parser, Debug)]
#[command(name = "chainweights", version)]
struct Cli {
    /// Write the report to this file instead of standard output.
    #[arg(short, long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Size, units, principal ideals with orbit sizes, socle and orthogonals.
    Ring {
        #[arg(long)]
        ring: String,
        #[arg(long, value_enum, default_value_t = InfoFormat::Text)]
        format: InfoFormat,
    },
    /// Möbius function of the ideal lattice as CSV: μ(0, x) and every μ(x, y).
    Mobius {
        #[arg(long)]
        ring: String,
    },
    /// Tabulate a weight on every ring element.
    Weight {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        source: WeightSource,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
    },
    /// The η change-of-basis matrix, or the function η_x for one ideal.
    Eta {
        #[arg(long)]
        ring: String,
        /// Exponent vector of a nonzero ideal, e.g. `1,0`.
        #[arg(long, value_name = "EXPONENTS")]
        x: Option<String>,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Csv)]
        format: MatrixFormat,
    },
    /// Evaluate the extension criterion for a weight.
    Criterion {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        source: WeightSource,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Search all codes in R^n for isometries without a monomial extension.
    Oracle {
        #[arg(long)]
        ring: String,
        #[command(flatten)]
        source: WeightSource,
        /// Code length.
        #[arg(long, default_value_t = 1)]
        n: usize,
        /// Examine at most this many codes; the rest are reported as skipped.
        #[arg(long, value_name = "COUNT")]
        max_codes: Option<usize>,
        /// Per-code cap on candidate generator assignments.
        #[arg(long, value_name = "COUNT", default_value_t = Budgets::default().max_maps)]
        max_maps: usize,
        /// Largest ambient module |R|^n accepted.
        #[arg(long, value_name = "COUNT", default_value_t = Budgets::default().max_ambient)]
        max_ambient: usize,
        #[arg(long, value_enum, default_value_t = InfoFormat::Text)]
        format: InfoFormat,
    },
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
struct WeightSource {
    /// JSON weight file: {"ring": "...", "values": {"<exponents>": "<rational>", ...}}.
    #[arg(long, value_name = "FILE")]
    weight: Option<PathBuf>,
    /// The Hamming weight.
    #[arg(long)]
    hamming: bool,
    /// The normalised homogeneous weight.
    #[arg(long)]
    homogeneous: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum InfoFormat {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum MatrixFormat {
    Json,
    Csv,
}

/// What a successful run found.
enum Verdict {
    Pass,
    Findings,
}

fn load_weight(ring: &ProductRing, source: &WeightSource) -> Result<Weight, String> {
    if source.hamming {
        return Ok(hamming(ring));
    }
    if source.homogeneous {
        return Ok(homogeneous(ring));
    }
    let path = source
        .weight
        .as_ref()
        .expect("clap enforces one weight source");
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    let (file_ring, w) =
        parse_weight_file(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    if &file_ring != ring {
        return Err(format!(
            "{}: weight is defined on {file_ring}, not {ring}",
            path.display()
        ));
    }
    Ok(w)
}

fn parse_ring(spec: &str) -> Result<ProductRing, String> {
    spec.parse().map_err(|e: chainweights::Error| e.to_string())
}

fn run(command: &Command) -> Result<(String, Verdict), String> {
    match command {
        Command::Ring { ring, format } => {
            let r = parse_ring(ring)?;
            let out = match format {
                InfoFormat::Json => render::json(&render::RingInfo::new(&r)),
                InfoFormat::Text => render::ring_text(&r),
            };
            Ok((out, Verdict::Pass))
        }
        Command::Mobius { ring } => Ok((render::mobius_csv(&parse_ring(ring)?), Verdict::Pass)),
        Command::Weight {
            ring,
            source,
            format,
        } => {
            let r = parse_ring(ring)?;
            let w = load_weight(&r, source)?;
            let out = match format {
                Format::Json => format!("{}\n", chainweights::weightfile::weight_file_json(&w)),
                Format::Csv => render::fn_csv(&w.to_fn()),
                Format::Text => render::fn_text(&w.to_fn()),
            };
            Ok((out, Verdict::Pass))
        }
        Command::Eta { ring, x, format } => {
            let r = parse_ring(ring)?;
            let out = match x {
                None => match format {
                    MatrixFormat::Csv => render::basis_csv(&r),
                    MatrixFormat::Json => render::json(&render::BasisReport::new(&r)),
                },
                Some(x) => {
                    let x: IdealExponent =
                        x.parse().map_err(|e: chainweights::Error| e.to_string())?;
                    let eta = chainweights::conv::eta(&r, &x).map_err(|e| e.to_string())?;
                    match format {
                        MatrixFormat::Csv => render::fn_csv(&eta),
                        MatrixFormat::Json => render::json(&render::FnReport::new(&eta)),
                    }
                }
            };
            Ok((out, Verdict::Pass))
        }
        Command::Criterion {
            ring,
            source,
            format,
        } => {
            let r = parse_ring(ring)?;
            let report = criterion_check(&load_weight(&r, source)?);
            let verdict = if report.pass {
                Verdict::Pass
            } else {
                Verdict::Findings
            };
            let out = match format {
                Format::Json => render::json(&report),
                Format::Csv => render::criterion_csv(&report),
                Format::Text => render::criterion_text(&report),
            };
            Ok((out, verdict))
        }
        Command::Oracle {
            ring,
            source,
            n,
            max_codes,
            max_maps,
            max_ambient,
            format,
        } => {
            let r = parse_ring(ring)?;
            let w = load_weight(&r, source)?;
            let budgets = Budgets {
                max_ambient: *max_ambient,
                max_codes: *max_codes,
                max_maps: *max_maps,
            };
            let report =
                verify_extension_theorem(&r, &w, *n, &budgets).map_err(|e| e.to_string())?;
            let verdict = if report.witnesses.is_empty() {
                Verdict::Pass
            } else {
                Verdict::Findings
            };
            let out = match format {
                InfoFormat::Json => render::json(&report),
                InfoFormat::Text => render::oracle_text(&report),
            };
            Ok((out, verdict))
        }
    }
}

fn emit(path: Option<&PathBuf>, out: &str) -> io::Result<()> {
    match path {
        Some(p) => fs::write(p, out),
        None => io::stdout().lock().write_all(out.as_bytes()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, verdict) = match run(&cli.command) {
        Ok(r) => r,
        Err(msg) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let Err(e) = emit(cli.output.as_ref(), &out) {
        eprintln!("error: cannot write report: {e}");
        return ExitCode::from(2);
    }
    match verdict {
        Verdict::Pass => ExitCode::SUCCESS,
        Verdict::Findings => ExitCode::from(1),
    }
}

//! `lahkit`: compute generalized Lah/Stirling triangle values, emit whole
//! triangles in machine formats, run polynomial basis conversions, and verify
//! the library against its brute-force oracle and identity suites.
//!
//! Exit codes: 0 on success, 1 when a verification suite fails, 2 on usage
//! errors.

mod format;
mod verify;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use lahkit::numbers::{self, Level, TriangleKind};
use lahkit::poly::{self, FactorialKind, Polynomial};

const DEFAULT_MAX_ORACLE_N: usize = 12;

#[derive(Parser)]
#[command(
    name = "lahkit",
    version,
    about = "Exact generalized Lah and Stirling number triangles",
    arg_required_else_help = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindArg {
    /// Lah numbers with higher level.
    Hlah,
    /// Lah numbers of order s.
    Olah,
    /// Stirling numbers of the first kind with higher level.
    Stirling1,
    /// Stirling numbers of the second kind with higher level.
    Stirling2,
    /// (s, r)-Lah numbers; requires --r.
    Lrlah,
}

impl KindArg {
    fn name(self) -> &'static str {
        match self {
            KindArg::Hlah => "hlah",
            KindArg::Olah => "olah",
            KindArg::Stirling1 => "stirling1",
            KindArg::Stirling2 => "stirling2",
            KindArg::Lrlah => "lrlah",
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Tsv,
    Json,
    Bfile,
    Pretty,
}

#[derive(Clone, Copy, ValueEnum)]
enum PolyFormatArg {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RowKindArg {
    Hlah,
    Olah,
    Lrlah,
}

#[derive(Clone, Copy, ValueEnum)]
enum StepKindArg {
    Hlah,
    Olah,
    Lrlah,
    /// The shifted row polynomial x^n L_n with its one-sum recurrence.
    Q,
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Oracle,
    Identities,
    Inequalities,
    ClosedForms,
    All,
}

#[derive(Subcommand)]
enum Command {
    /// Print a single triangle entry as a decimal string.
    Value {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Level s >= 1.
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Elements 1..=r forced into distinct lists (lrlah only).
        #[arg(long)]
        r: Option<usize>,
    },
    /// Print triangle rows n = 0..=nmax.
    Table {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        nmax: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Tsv)]
        format: FormatArg,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Print the triangle read by rows as OEIS b-file lines.
    Bfile {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        nmax: usize,
        /// Index of the first emitted line.
        #[arg(long, default_value_t = 0)]
        offset: usize,
        #[arg(long)]
        r: Option<usize>,
    },
    /// Row polynomials, factorial expansions and basis conversions.
    Poly {
        #[command(subcommand)]
        op: PolyCommand,
    },
    /// Run an invariant suite; prints one PASS/FAIL line per check.
    Verify {
        #[arg(long, value_enum)]
        suite: SuiteArg,
        /// Largest row index checked (per-suite default if omitted).
        #[arg(long)]
        nmax: Option<usize>,
        /// Largest level checked (per-suite default if omitted).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        smax: Option<u32>,
    },
}

#[derive(Subcommand)]
enum PolyCommand {
    /// Expand a rising or falling factorial into the standard basis.
    Expand {
        #[arg(long)]
        rising: bool,
        #[arg(long)]
        falling: bool,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long, value_enum, default_value_t = PolyFormatArg::Text)]
        format: PolyFormatArg,
    },
    /// Convert a polynomial between bases (standard, rising:<s>, falling:<s>).
    Convert {
        #[arg(long)]
        from: String,
        #[arg(long)]
        to: String,
        /// Convert the degree-n basis element of the source basis.
        #[arg(long)]
        n: Option<usize>,
        /// Convert an explicit coefficient list, e.g. `0,1,5,1`.
        #[arg(long)]
        coeffs: Option<String>,
        #[arg(long, value_enum, default_value_t = PolyFormatArg::Text)]
        format: PolyFormatArg,
    },
    /// Print a row polynomial.
    Row {
        #[arg(long, value_enum)]
        kind: RowKindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, value_enum, default_value_t = PolyFormatArg::Text)]
        format: PolyFormatArg,
    },
    /// Apply one recurrence step to a row polynomial; prints before/after.
    Step {
        #[arg(long, value_enum)]
        kind: StepKindArg,
        #[arg(long)]
        n: usize,
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
        s: u32,
        #[arg(long)]
        r: Option<usize>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            eprintln!("run `lahkit --help` for usage");
            ExitCode::from(2)
        }
    }
}

fn resolve_kind(kind: KindArg, r: Option<usize>) -> Result<TriangleKind, String> {
    match kind {
        KindArg::Lrlah => {
            let r = r.ok_or("--kind lrlah requires --r")?;
            Ok(TriangleKind::LrLah { r })
        }
        _ if r.is_some() => Err("--r is only valid with --kind lrlah".into()),
        KindArg::Hlah => Ok(TriangleKind::LahHl),
        KindArg::Olah => Ok(TriangleKind::LahOrderS),
        KindArg::Stirling1 => Ok(TriangleKind::StirlingFirstHl),
        KindArg::Stirling2 => Ok(TriangleKind::StirlingSecondHl),
    }
}

fn level(s: u32) -> Result<Level, String> {
    Level::new(s).map_err(|e| e.to_string())
}

fn oracle_cap() -> Result<usize, String> {
    match std::env::var("LAHKIT_MAX_N") {
        Ok(text) => text
            .parse()
            .map_err(|_| format!("LAHKIT_MAX_N must be a nonnegative integer, got `{text}`")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_ORACLE_N),
        Err(e) => Err(format!("LAHKIT_MAX_N: {e}")),
    }
}

fn print_poly(p: &Polynomial, format: PolyFormatArg) {
    match format {
        PolyFormatArg::Text => println!("{}", format::poly_text(p)),
        PolyFormatArg::Json => println!("{}", format::poly_json(p)),
    }
}

fn execute(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Value { kind, s, n, k, r } => {
            let kind = resolve_kind(kind, r)?;
            println!("{}", numbers::triangle_entry(kind, n, k, level(s)?));
            Ok(ExitCode::SUCCESS)
        }
        Command::Table {
            kind,
            s,
            nmax,
            format,
            r,
        } => {
            let triangle_kind = resolve_kind(kind, r)?;
            let table = numbers::triangle(triangle_kind, level(s)?, nmax);
            match format {
                FormatArg::Tsv => print!("{}", format::table_tsv(&table)),
                FormatArg::Json => println!("{}", format::table_json(&table, kind.name(), r)),
                FormatArg::Bfile => print!("{}", format::table_bfile(&table, 0)),
                FormatArg::Pretty => print!("{}", format::table_pretty(&table)),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Bfile {
            kind,
            s,
            nmax,
            offset,
            r,
        } => {
            let kind = resolve_kind(kind, r)?;
            let table = numbers::triangle(kind, level(s)?, nmax);
            print!("{}", format::table_bfile(&table, offset));
            Ok(ExitCode::SUCCESS)
        }
        Command::Poly { op } => {
            execute_poly(op)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, nmax, smax } => {
            if matches!(suite, SuiteArg::Oracle | SuiteArg::All) {
                let cap = oracle_cap()?;
                let requested = nmax.unwrap_or(6);
                if requested > cap {
                    return Err(format!(
                        "--nmax {requested} exceeds the enumeration cap {cap} for the oracle suite \
                         (LAHKIT_MAX_N overrides the default of {DEFAULT_MAX_ORACLE_N})"
                    ));
                }
            }
            let suite = match suite {
                SuiteArg::Oracle => verify::Suite::Oracle,
                SuiteArg::Identities => verify::Suite::Identities,
                SuiteArg::Inequalities => verify::Suite::Inequalities,
                SuiteArg::ClosedForms => verify::Suite::ClosedForms,
                SuiteArg::All => verify::Suite::All,
            };
            let checks = verify::run_suite(suite, nmax, smax);
            let mut failed = false;
            for (name, outcome) in &checks {
                match outcome {
                    Ok(()) => println!("PASS {name}"),
                    Err(counterexample) => {
                        failed = true;
                        println!("FAIL {name}: {counterexample}");
                    }
                }
            }
            Ok(if failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            })
        }
    }
}

fn execute_poly(op: PolyCommand) -> Result<(), String> {
    match op {
        PolyCommand::Expand {
            rising,
            falling,
            n,
            s,
            format,
        } => {
            let kind = match (rising, falling) {
                (true, false) => FactorialKind::Rising,
                (false, true) => FactorialKind::Falling,
                _ => return Err("pass exactly one of --rising / --falling".into()),
            };
            let p = poly::factorial_poly(kind, n, level(s)?);
            print_poly(&p, format);
            Ok(())
        }
        PolyCommand::Convert {
            from,
            to,
            n,
            coeffs,
            format: fmt,
        } => {
            let from = format::parse_basis(&from)?;
            let to = format::parse_basis(&to)?;
            let source = match (n, coeffs) {
                (Some(n), None) => Polynomial::basis_element(from, n),
                (None, Some(text)) => Polynomial::new(from, format::parse_coeffs(&text)?),
                _ => return Err("pass exactly one of --n / --coeffs".into()),
            };
            let converted = poly::convert(&source, to).map_err(|e| e.to_string())?;
            print_poly(&converted, fmt);
            Ok(())
        }
        PolyCommand::Row { kind, n, s, r, format } => {
            let s = level(s)?;
            let p = match kind {
                RowKindArg::Hlah => {
                    reject_r(r)?;
                    poly::row_poly_hl(n, s)
                }
                RowKindArg::Olah => {
                    reject_r(r)?;
                    poly::lah_order_poly(n, s)
                }
                RowKindArg::Lrlah => {
                    let r = r.ok_or("--kind lrlah requires --r")?;
                    poly::lr_row_poly(n, s, r)
                }
            };
            print_poly(&p, format);
            Ok(())
        }
        PolyCommand::Step { kind, n, s, r } => {
            let s = level(s)?;
            let (before, after) = match kind {
                StepKindArg::Hlah => {
                    reject_r(r)?;
                    let before = poly::row_poly_hl(n, s);
                    let after = poly::row_poly_hl_step(&before, n, s).map_err(|e| e.to_string())?;
                    (before, after)
                }
                StepKindArg::Olah => {
                    reject_r(r)?;
                    let before = poly::lah_order_poly(n, s);
                    let after = poly::lah_order_poly_step(&before, n, s);
                    (before, after)
                }
                StepKindArg::Lrlah => {
                    let r = r.ok_or("--kind lrlah requires --r")?;
                    let before = poly::lr_row_poly(n, s, r);
                    let after = poly::lr_row_poly_step(&before, n, s);
                    (before, after)
                }
                StepKindArg::Q => {
                    reject_r(r)?;
                    let before = poly::q_poly(n, s);
                    let after = poly::q_step(&before, n, s);
                    (before, after)
                }
            };
            println!("before: {}", format::poly_text(&before));
            println!("after: {}", format::poly_text(&after));
            Ok(())
        }
    }
}

fn reject_r(r: Option<usize>) -> Result<(), String> {
    if r.is_some() {
        Err("--r is only valid with --kind lrlah".into())
    } else {
        Ok(())
    }
}

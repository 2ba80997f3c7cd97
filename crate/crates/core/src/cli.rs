//! Command-line front end.
//!
//! Exit codes: 0 success or compatible, 1 check failed / unsolvable,
//! 2 parse or usage error, 3 validation error, 4 dimension mismatch,
//! 5 unsupported range.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use crate::catalog::{self, load, read_document};
use crate::diamond::{check_symmetries, columns, stringy_e};
use crate::error::{Error, Result};
use crate::format::{parse_column_list, Document, OrbifoldFile};
use crate::inertia::{extract_h0q, is_gorenstein};
use crate::invariants::{
    check_partners_with, extract_hn0, extract_hn10, mckay_compare, reconstruct_gorenstein, PartnerOptions, Verdict,
};
use crate::render::{self, to_json_string, Format};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_PARSE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "orbikit",
    version,
    about = "Exact orbifold Hodge diamonds and derived-equivalence constraints"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct FormatArg {
    /// Output format: text, json, csv or tex.
    #[arg(long, default_value = "text")]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the orbifold Hodge diamond of an input file or catalog entry.
    Diamond {
        input: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Check Serre duality, Hodge symmetry and the Gorenstein property.
    Check {
        input: String,
        #[arg(long)]
        serre: bool,
        #[arg(long)]
        hodge: bool,
        #[arg(long)]
        gorenstein: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Compare two inputs against the derived-invariance constraints.
    Partners {
        a: String,
        b: String,
        /// In dimension <= 3 with integer grades, also require full equality.
        #[arg(long = "strict-dim3")]
        strict_dim3: bool,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Solve for a Gorenstein diamond (dim <= 3) from its column sums.
    Reconstruct {
        #[arg(long)]
        dim: u32,
        /// Comma-separated "i:v" pairs; nonnegative indices are mirrored.
        #[arg(long, allow_hyphen_values = true)]
        columns: String,
        #[arg(long)]
        h01: Option<u64>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List catalog entries.
    Catalog {
        #[command(flatten)]
        format: FormatArg,
    },
    /// Column sums plus the entries they determine.
    Columns {
        input: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Stringy E-polynomial of inertia data.
    Stringy {
        input: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Compare a Gorenstein orbifold with a crepant-resolution diamond.
    Mckay {
        orbifold: String,
        resolution: String,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Print the canonical raw JSON form of an input.
    Export { input: String },
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_PARSE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
            } else {
                let _ = out.write_all(text.as_bytes());
            }
            return code;
        }
    };
    match execute(&cli.command, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error[{}]: {e}", e.kind());
            e.exit_code()
        }
    }
}

fn emit(out: &mut dyn Write, text: &str) -> Result<()> {
    out.write_all(text.as_bytes()).map_err(|e| Error::Io(e.to_string()))
}

fn pass(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<i32> {
    match command {
        Command::Diamond { input, format } => {
            let loaded = load(input)?;
            let d = loaded.diamond()?;
            emit(out, &render::diamond(loaded.name(), &d, format.format))?;
            Ok(EXIT_OK)
        }
        Command::Check {
            input,
            serre,
            hodge,
            gorenstein,
            format,
        } => {
            let loaded = load(input)?;
            let d = loaded.diamond()?;
            let all = !(*serre || *hodge || *gorenstein);
            let sym = check_symmetries(&d);
            let gor = match loaded.presentation() {
                Some(p) => is_gorenstein(p),
                None => d.is_integral(),
            };
            let mut results = Vec::new();
            if all || *serre {
                results.push(("serre", sym.serre));
            }
            if all || *hodge {
                results.push(("hodge", sym.hodge));
            }
            if all || *gorenstein {
                results.push(("gorenstein", gor));
            }
            let ok = results.iter().all(|(_, r)| *r);
            if format.format == Format::Json {
                let checks: serde_json::Map<String, serde_json::Value> =
                    results.iter().map(|(k, v)| (k.to_string(), json!(pass(*v)))).collect();
                emit(
                    out,
                    &to_json_string(&json!({"name": loaded.name(), "checks": checks, "ok": ok})),
                )?;
            } else {
                let mut text = String::new();
                for (k, v) in &results {
                    text.push_str(&format!("{k}: {}\n", pass(*v)));
                }
                emit(out, &text)?;
            }
            Ok(if ok { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Partners {
            a,
            b,
            strict_dim3,
            format,
        } => {
            let (la, lb) = (load(a)?, load(b)?);
            let (da, db) = (la.diamond()?, lb.diamond()?);
            let report = check_partners_with(
                &da,
                &db,
                PartnerOptions {
                    strict_dim3: *strict_dim3,
                },
            )?;
            emit(
                out,
                &render::partner_report(la.name(), lb.name(), &report, format.format),
            )?;
            Ok(if report.verdict == Verdict::CompatibleSoFar {
                EXIT_OK
            } else {
                EXIT_FAILED
            })
        }
        Command::Reconstruct {
            dim,
            columns: spec,
            h01,
            format,
        } => {
            if *dim > 3 {
                return Err(Error::UnsupportedDimension(*dim));
            }
            let cols = parse_column_list(*dim, spec)?;
            let d = reconstruct_gorenstein(&cols, *h01, *dim)?;
            emit(out, &render::diamond("reconstructed", &d, format.format))?;
            Ok(EXIT_OK)
        }
        Command::Catalog { format } => {
            let entries = catalog::all_entries()?;
            if format.format == Format::Json {
                let list: Vec<_> = entries
                    .iter()
                    .map(|e| json!({"name": e.name, "description": e.description}))
                    .collect();
                emit(out, &to_json_string(&json!(list)))?;
            } else {
                let width = entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
                let mut text = String::new();
                for e in &entries {
                    text.push_str(&format!("{:<width$}  {}\n", e.name, e.description));
                }
                emit(out, &text)?;
            }
            Ok(EXIT_OK)
        }
        Command::Columns { input, format } => {
            let loaded = load(input)?;
            let d = loaded.diamond()?;
            let c = columns(&d);
            let hn0 = extract_hn0(&c);
            let hn10 = extract_hn10(&c);
            let h0q: Option<Vec<u64>> = loaded
                .presentation()
                .map(|p| (0..=p.dim()).map(|q| extract_h0q(p, q)).collect());
            if format.format == Format::Json {
                let v = json!({
                    "name": loaded.name(),
                    "dim": d.dim(),
                    "columns": render::columns_json(&c),
                    "hn0": hn0,
                    "hn10": hn10.as_ref().ok(),
                    "h0q": h0q,
                });
                emit(out, &to_json_string(&v))?;
            } else {
                let mut text = format!(
                    "{} (dim {})\ncolumns: {}\nhn0: {hn0}\n",
                    loaded.name(),
                    d.dim(),
                    render::columns_text(&c)
                );
                match &hn10 {
                    Ok(v) => text.push_str(&format!("hn10: {v}\n")),
                    Err(e) => text.push_str(&format!("hn10: {e}\n")),
                }
                if let Some(h) = &h0q {
                    let parts: Vec<String> = h.iter().map(u64::to_string).collect();
                    text.push_str(&format!("h0q: {}\n", parts.join(" ")));
                }
                emit(out, &text)?;
            }
            hn10.map(|_| EXIT_OK)
        }
        Command::Stringy { input, format } => {
            let loaded = load(input)?;
            let p = loaded
                .presentation()
                .ok_or_else(|| Error::Parse(format!("{input} is a bare diamond; stringy needs inertia data")))?;
            emit(out, &render::stringy(p.name(), &stringy_e(p), format.format))?;
            Ok(EXIT_OK)
        }
        Command::Mckay {
            orbifold,
            resolution,
            format,
        } => {
            let (lo, lr) = (load(orbifold)?, load(resolution)?);
            let report = mckay_compare(&lo.diamond()?, &lr.diamond()?)?;
            emit(out, &render::mckay_report(lo.name(), lr.name(), &report, format.format))?;
            Ok(if report.equal { EXIT_OK } else { EXIT_FAILED })
        }
        Command::Export { input } => {
            let doc = read_document(input)?;
            let value = match &doc {
                Document::Orbifold(_) | Document::Generator(_) => {
                    let loaded = crate::format::Loaded::from_document(&doc)?;
                    let p = loaded.presentation().expect("inertia document");
                    serde_json::to_value(OrbifoldFile::from_presentation(p))
                }
                Document::Diamond(f) => serde_json::to_value(f),
                Document::Reconstruction(f) => serde_json::to_value(f),
            }
            .map_err(|e| Error::Parse(e.to_string()))?;
            emit(out, &to_json_string(&value))?;
            Ok(EXIT_OK)
        }
    }
}

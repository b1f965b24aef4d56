//! Command-line front end. Exit codes: 0 success, 1 domain error, 2
//! internal invariant violation, 64 usage error.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::beta::{index_set, stratum_codim, z_dimension, WeightSystem};
use crate::ek::hp_ss_report;
use crate::error::Error;
use crate::hn::{enumerate_hn_types, enumerate_reductive_classes};
use crate::poly::LaurentPoly;
use crate::rank2::{hodge_deligne_stable_rank2, hp_moduli_stable_rank2, moduli_dimension};
use crate::verify::{all_passed, run_suite, Scope};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_INTERNAL: i32 = 2;
pub const EXIT_USAGE: i32 = 64;

/// Series order when neither `--order` nor the environment sets one.
pub const DEFAULT_ORDER: i64 = 12;
pub const ORDER_ENV: &str = "HP_MODULI_ORDER_DEFAULT";

#[derive(Parser, Debug)]
#[command(name = "hodge-moduli", version, about = "Exact Hodge-Poincare series of moduli of bundles on curves")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Compute a series or polynomial.
    #[command(subcommand)]
    Compute(Compute),
    /// List strata indices.
    #[command(subcommand)]
    Enumerate(Enumerate),
    /// Kirwan index sets of weight systems.
    #[command(subcommand)]
    Beta(Beta),
    /// Run the bundled acceptance checks.
    Verify {
        /// Restrict genus-indexed checks to this genus; all ranges when omitted.
        #[arg(long)]
        genus: Option<i64>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Clone, Copy)]
#[group(multiple = false)]
struct Format {
    #[arg(long)]
    json: bool,
    #[arg(long)]
    text: bool,
}

#[derive(Subcommand, Debug)]
enum Compute {
    /// Equivariant series of the semistable locus.
    Ss {
        #[arg(long)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        /// Total-degree truncation; defaults to $HP_MODULI_ORDER_DEFAULT or 12.
        #[arg(long)]
        order: Option<i64>,
        #[command(flatten)]
        format: Format,
    },
    /// Stable rank-2 moduli polynomial, even degree.
    Stable2 {
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        deg: i64,
        /// Print the Hodge-Deligne polynomial instead.
        #[arg(long)]
        deligne: bool,
        #[command(flatten)]
        format: Format,
        /// Compare against a stored polynomial; exit 2 on mismatch.
        #[arg(long)]
        golden: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Enumerate {
    /// Harder-Narasimhan types up to a codimension.
    HnTypes {
        #[arg(long)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
        #[arg(long, allow_hyphen_values = true)]
        genus: i64,
        #[arg(long, allow_hyphen_values = true)]
        max_codim: i64,
    },
    /// Reductive stabilizer classes, largest first.
    ReductiveClasses {
        #[arg(long)]
        rank: i64,
        #[arg(long, allow_hyphen_values = true)]
        deg: i64,
    },
}

#[derive(Subcommand, Debug)]
enum Beta {
    /// Nonzero positive-chamber index set of a weight system.
    IndexSet {
        /// JSON weight system: {"dim", "weights":[{"v","mult"}], "roots", "chamber"}.
        #[arg(long)]
        system: PathBuf,
    },
}

enum Failure {
    Domain(String),
    Internal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        if e.is_internal() {
            Failure::Internal(e.to_string())
        } else {
            Failure::Domain(e.to_string())
        }
    }
}

type Outcome = std::result::Result<String, Failure>;

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values serialize")
}

fn default_order() -> std::result::Result<i64, Failure> {
    match std::env::var(ORDER_ENV) {
        Ok(s) => s
            .trim()
            .parse()
            .map_err(|_| Failure::Domain(format!("{ORDER_ENV} is not an integer: {s:?}"))),
        Err(_) => Ok(DEFAULT_ORDER),
    }
}

fn compute_ss(rank: i64, deg: i64, genus: i64, order: Option<i64>, format: Format) -> Outcome {
    let order = match order {
        Some(k) => k,
        None => default_order()?,
    };
    let r = hp_ss_report(rank, deg, genus, order)?;
    let violations: Vec<Value> =
        r.violations.iter().map(|(e, c)| json!({"p": e.p, "q": e.q, "c": c.to_string()})).collect();
    let out = if format.json {
        pretty(&json!({
            "rank": r.rank,
            "degree": r.degree,
            "genus": r.genus,
            "series": r.series,
            "metadata": {
                "p": r.p,
                "memo_hits": r.stats.memo_hits,
                "memo_misses": r.stats.memo_misses,
                "types_used": r.stats.types_used,
                "violations": violations,
            },
        }))
    } else {
        format!(
            "{}\n# rank {} degree {} genus {} order {}\n# p = {}\n# memo hits {}, misses {}, types used {}\n# violations: {}",
            r.series,
            r.rank,
            r.degree,
            r.genus,
            order,
            r.p,
            r.stats.memo_hits,
            r.stats.memo_misses,
            r.stats.types_used,
            if violations.is_empty() { "none".to_string() } else { Value::Array(violations.clone()).to_string() }
        )
    };
    if !violations.is_empty() {
        return Err(Failure::Internal(format!("{out}\ncoefficients that are not non-negative integers")));
    }
    Ok(out)
}

fn read_golden(path: &PathBuf) -> std::result::Result<LaurentPoly, Failure> {
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))?;
    let poly = match value {
        Value::Object(mut m) => m.remove("poly").unwrap_or(Value::Null),
        other => other,
    };
    serde_json::from_value(poly).map_err(|e| Failure::Domain(format!("{}: not a polynomial: {e}", path.display())))
}

fn compute_stable2(genus: i64, deg: i64, deligne: bool, format: Format, golden: Option<&PathBuf>) -> Outcome {
    if deg.rem_euclid(2) != 0 {
        return Err(Error::OddDegree(deg).into());
    }
    let poly = if deligne { hodge_deligne_stable_rank2(genus)? } else { hp_moduli_stable_rank2(genus)? };
    if let Some(path) = golden {
        let want = read_golden(path)?;
        if want != poly {
            return Err(Failure::Internal(format!(
                "golden mismatch against {}: residual {}",
                path.display(),
                &poly - &want
            )));
        }
    }
    Ok(if format.json {
        pretty(&json!({
            "genus": genus,
            "degree": deg,
            "kind": if deligne { "hodge-deligne" } else { "hodge-poincare" },
            "dim": moduli_dimension(2, genus),
            "poly": poly,
        }))
    } else {
        poly.to_string()
    })
}

fn enumerate_hn(rank: i64, deg: i64, genus: i64, max_codim: i64) -> Outcome {
    let types = enumerate_hn_types(rank, deg, genus, max_codim)?;
    let list: Vec<Value> = types.iter().map(|(t, c)| json!({"quotients": t.quotients, "codim": c})).collect();
    let mut meta = json!({"rank": rank, "degree": deg, "genus": genus, "max_codim": max_codim});
    if genus == 1 {
        meta["genus_flag"] = json!("g = 1: outside the range g >= 2 assumed by the theory");
    }
    Ok(pretty(&json!({"metadata": meta, "types": list})))
}

fn enumerate_classes(rank: i64, deg: i64) -> Outcome {
    let list: Vec<Value> = enumerate_reductive_classes(rank, deg)?
        .into_iter()
        .map(|e| json!({"class": e.class.to_string(), "pairs": e.class.pairs, "dim": e.dim, "boundary": e.boundary}))
        .collect();
    Ok(pretty(&Value::Array(list)))
}

fn beta_index_set(system: &PathBuf) -> Outcome {
    let text = std::fs::read_to_string(system).map_err(|e| Failure::Domain(format!("{}: {e}", system.display())))?;
    let ws: WeightSystem =
        serde_json::from_str(&text).map_err(|e| Failure::Domain(format!("{}: {e}", system.display())))?;
    let list: Vec<Value> = index_set(&ws)?
        .iter()
        .map(|b| {
            json!({
                "beta": b.beta,
                "support": b.support,
                "codim": stratum_codim(&ws, b),
                "z_dim": z_dimension(&ws, b),
            })
        })
        .collect();
    Ok(pretty(&Value::Array(list)))
}

fn verify(genus: Option<i64>, as_json: bool) -> Outcome {
    let scope = match genus {
        Some(g) if g < 1 => return Err(Error::GenusOutOfRange { genus: g, min: 1 }.into()),
        Some(g) => Scope::genus(g),
        None => Scope::full(),
    };
    let results = run_suite(&scope);
    let out = if as_json {
        pretty(&serde_json::to_value(&results).expect("results serialize"))
    } else {
        results.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n")
    };
    if all_passed(&results) {
        Ok(out)
    } else {
        Err(Failure::Internal(out))
    }
}

fn dispatch(cli: Cli) -> Outcome {
    match cli.command {
        Command::Compute(Compute::Ss { rank, deg, genus, order, format }) => compute_ss(rank, deg, genus, order, format),
        Command::Compute(Compute::Stable2 { genus, deg, deligne, format, golden }) => {
            compute_stable2(genus, deg, deligne, format, golden.as_ref())
        }
        Command::Enumerate(Enumerate::HnTypes { rank, deg, genus, max_codim }) => {
            enumerate_hn(rank, deg, genus, max_codim)
        }
        Command::Enumerate(Enumerate::ReductiveClasses { rank, deg }) => enumerate_classes(rank, deg),
        Command::Beta(Beta::IndexSet { system }) => beta_index_set(&system),
        Command::Verify { genus, json } => verify(genus, json),
    }
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{text}");
                    0
                }
                _ => {
                    let _ = write!(err, "{text}");
                    EXIT_USAGE
                }
            };
        }
    };
    match dispatch(cli) {
        Ok(s) => {
            let _ = writeln!(out, "{s}");
            0
        }
        Err(Failure::Domain(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_DOMAIN
        }
        Err(Failure::Internal(msg)) => {
            let _ = writeln!(err, "internal error: {msg}");
            EXIT_INTERNAL
        }
    }
}

pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(std::iter::once("hodge-moduli").chain(args.iter().copied()), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn odd_degree_is_domain_error() {
        let (code, _, err) = call(&["compute", "stable2", "--genus", "2", "--deg", "3"]);
        assert_eq!(code, EXIT_DOMAIN);
        assert!(err.contains("degree must be even"));
    }

    #[test]
    fn unknown_flag_is_usage_error() {
        assert_eq!(call(&["compute", "stable2", "--genus", "2", "--bogus"]).0, EXIT_USAGE);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn stable2_json_constant_term() {
        let (code, out, _) = call(&["compute", "stable2", "--genus", "2", "--json"]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["poly"][0], json!({"p": 0, "q": 0, "c": "1"}));
    }

    #[test]
    fn genus_zero_rejected() {
        assert_eq!(call(&["compute", "ss", "--rank", "2", "--deg", "0", "--genus", "0"]).0, EXIT_DOMAIN);
        assert_eq!(call(&["enumerate", "hn-types", "--rank", "2", "--deg", "0", "--genus", "0", "--max-codim", "4"]).0, EXIT_DOMAIN);
    }

    #[test]
    fn genus_one_flagged() {
        let (code, out, _) = call(&["enumerate", "hn-types", "--rank", "2", "--deg", "0", "--genus", "1", "--max-codim", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("genus_flag"));
    }
}

//! The `dsym` command line.
//!
//! Every verb reads one symmetric function (except `dims`, `tableaux` and
//! `verify`), given as `--schur 2,1`, `--power 3`, or `--input` holding an
//! expression such as `3/2*S[2,1] + P[3]`, a path to a file, or `-` for
//! standard input. Input text that starts with `{` is read as JSON.
//!
//! Exit status: 0 on success, 1 when a verification fails, 2 on any usage
//! error (bad flags, malformed input, resource cap exceeded).

use std::io::{Read, Write};
use std::path::Path;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::doubling::{dim_doubly, dmap, in_ideal, is_doubly_symmetric, project};
use crate::error::Error;
use crate::partitions::{Partition, SkewShape};
use crate::symring::{set_degree_cap, Basis, SymFunc, DEFAULT_DEGREE_CAP};
use crate::tableaux::enumerate_hook_ssyt;
use crate::verify::{
    render_table, run_suite, suite_passed, IdentityId, Overrides, PowerConstant,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

/// Environment variable that overrides the default degree cap.
pub const MAX_DEGREE_ENV: &str = "DSYM_MAX_DEGREE";

#[derive(Parser, Debug)]
#[command(name = "dsym", version, about = "Exact symmetric-function calculator")]
struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,

    /// Largest degree any conversion or product may reach.
    #[arg(long, global = true, value_name = "D")]
    max_degree: Option<usize>,

    /// Reserved; every check is exhaustive so nothing is sampled.
    #[arg(long, global = true, value_name = "N")]
    seed: Option<u64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
struct Input {
    /// A single Schur function, e.g. `2,1`.
    #[arg(long, value_name = "PARTITION")]
    schur: Option<String>,

    /// A single power sum, e.g. `3,1`.
    #[arg(long, value_name = "PARTITION")]
    power: Option<String>,

    /// An expression, a file, or `-` for standard input.
    #[arg(long, value_name = "EXPR|FILE|-")]
    input: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate in the variables x1..xN.
    Eval {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "N")]
        vars: u32,
    },
    /// Evaluate as a hook Schur function in x1..xk and y1..yl.
    HsEval {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_name = "N")]
        k: u32,
        #[arg(long, value_name = "N")]
        l: u32,
    },
    /// Rewrite in the other basis, or the one named by --to.
    Convert {
        #[command(flatten)]
        input: Input,
        #[arg(long, value_parser = parse_basis, value_name = "schur|power")]
        to: Option<Basis>,
    },
    /// Apply the doubling map.
    Dmap {
        #[command(flatten)]
        input: Input,
    },
    /// Split into the doubly symmetric part and the ideal part.
    Project {
        #[command(flatten)]
        input: Input,
    },
    /// Test whether the input is doubly symmetric.
    IsDoubly {
        #[command(flatten)]
        input: Input,
    },
    /// Test whether the input lies in the ideal spanned by S_λ - S_λ'.
    InIdeal {
        #[command(flatten)]
        input: Input,
    },
    /// Dimensions of the doubly symmetric functions of degree 1..=max.
    Dims {
        #[arg(long, value_name = "N")]
        max: usize,
    },
    /// List the (k,l)-semistandard tableaux of a (skew) shape.
    Tableaux {
        #[arg(long, value_name = "PARTITION")]
        shape: String,
        #[arg(long, value_name = "PARTITION", default_value = "")]
        inner: String,
        #[arg(long, value_name = "N")]
        k: u32,
        #[arg(long, value_name = "N", default_value_t = 0)]
        l: u32,
    },
    /// Run the identity catalog.
    Verify {
        /// Comma-separated identity names, or `all`.
        #[arg(long, default_value = "all", value_name = "LIST|all")]
        suite: String,
        #[arg(long, value_name = "N")]
        bound_degree: Option<usize>,
        #[arg(long, value_name = "N")]
        bound_k: Option<u32>,
        #[arg(long, value_name = "N")]
        bound_l: Option<u32>,
        #[arg(long, value_name = "N")]
        trunc: Option<u32>,
        /// Force the power-sum constant: `4` or `2^n`.
        #[arg(long, value_name = "C")]
        constant: Option<String>,
    },
}

fn parse_basis(s: &str) -> Result<Basis, String> {
    match s.to_ascii_lowercase().as_str() {
        "schur" | "s" => Ok(Basis::Schur),
        "power" | "p" => Ok(Basis::Power),
        _ => Err(format!("unknown basis `{s}`")),
    }
}

/// A failure that ends the command.
#[derive(Debug)]
enum Failure {
    Usage(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = std::result::Result<(), Failure>;

/// Runs `dsym` on the process's standard streams.
pub fn run<I, S>(argv: I) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Runs `dsym` with explicit streams. `argv[0]` is the program name.
pub fn run_with<I, S>(argv: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv: Vec<String> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return EXIT_OK;
            }
            let text = e.render().to_string();
            let line = text.lines().next().unwrap_or("error: invalid arguments");
            let _ = writeln!(err, "{line}");
            return EXIT_USAGE;
        }
    };
    let outcome = configure_cap(&cli).and_then(|()| dispatch(&cli, stdin, out));
    match outcome {
        Ok(()) => EXIT_OK,
        Err(Failure::Verification) => EXIT_FAILED,
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

/// The flag wins over the environment, which wins over the default.
fn configure_cap(cli: &Cli) -> Outcome {
    let cap = match cli.max_degree {
        Some(d) => d,
        None => match std::env::var(MAX_DEGREE_ENV) {
            Ok(v) => v.trim().parse().map_err(|_| {
                Failure::Usage(format!("invalid {MAX_DEGREE_ENV} value `{v}`"))
            })?,
            Err(_) => DEFAULT_DEGREE_CAP,
        },
    };
    set_degree_cap(cap);
    Ok(())
}

fn dispatch(cli: &Cli, stdin: &mut dyn Read, out: &mut dyn Write) -> Outcome {
    let json = cli.json;
    match &cli.command {
        Command::Eval { input, vars } => {
            let f = read_input(input, stdin)?;
            emit(out, json, &f.evaluate(*vars)?)
        }
        Command::HsEval { input, k, l } => {
            let f = read_input(input, stdin)?;
            emit(out, json, &f.wau_evaluate(*k, *l)?)
        }
        Command::Convert { input, to } => {
            let f = read_input(input, stdin)?;
            let target = to.unwrap_or(match f.basis() {
                Basis::Schur => Basis::Power,
                Basis::Power => Basis::Schur,
            });
            emit(out, json, &f.to_basis(target)?)
        }
        Command::Dmap { input } => {
            let f = read_input(input, stdin)?;
            emit(out, json, &dmap(&f)?)
        }
        Command::Project { input } => {
            let f = read_input(input, stdin)?;
            let d = project(&f)?;
            if json {
                emit_json(out, &d)
            } else {
                emit_line(out, &format!("doubly: {}\nideal: {}", d.d_part, d.i_part))
            }
        }
        Command::IsDoubly { input } => {
            let f = read_input(input, stdin)?;
            emit(out, json, &is_doubly_symmetric(&f)?)
        }
        Command::InIdeal { input } => {
            let f = read_input(input, stdin)?;
            emit(out, json, &in_ideal(&f)?)
        }
        Command::Dims { max } => {
            let dims: Vec<u64> = (1..=*max).map(dim_doubly).collect();
            if json {
                emit_json(out, &dims)
            } else {
                let text: Vec<String> = dims.iter().map(u64::to_string).collect();
                emit_line(out, &text.join(" "))
            }
        }
        Command::Tableaux { shape, inner, k, l } => {
            let outer: Partition = shape.parse()?;
            let inner: Partition = inner.parse()?;
            let shape = SkewShape::new(outer, inner)?;
            let list = enumerate_hook_ssyt(&shape, *k, *l);
            if json {
                emit_json(out, &list)
            } else {
                let text: Vec<String> = list.iter().map(ToString::to_string).collect();
                for line in text {
                    emit_line(out, &line)?;
                }
                Ok(())
            }
        }
        Command::Verify {
            suite,
            bound_degree,
            bound_k,
            bound_l,
            trunc,
            constant,
        } => {
            let ids = parse_suite(suite)?;
            let constant = constant
                .as_deref()
                .map(str::parse::<PowerConstant>)
                .transpose()?;
            let overrides = Overrides {
                max_degree: *bound_degree,
                k_max: *bound_k,
                l_max: *bound_l,
                trunc: *trunc,
                constant,
            };
            let reports = run_suite(&ids, &overrides);
            if json {
                for r in &reports {
                    let line = serde_json::to_string(r).expect("reports serialize");
                    emit_line(out, &line)?;
                }
            } else {
                write_all(out, &render_table(&reports))?;
            }
            if suite_passed(&reports) {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn parse_suite(list: &str) -> std::result::Result<Vec<IdentityId>, Failure> {
    if list.trim().eq_ignore_ascii_case("all") {
        return Ok(IdentityId::ALL.to_vec());
    }
    let mut ids = Vec::new();
    for tok in list.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let id: IdentityId = tok.parse()?;
        if !ids.contains(&id) {
            ids.push(id);
        }
    }
    if ids.is_empty() {
        return Err(Failure::Usage(format!("empty suite `{list}`")));
    }
    // reports always come out in catalog order
    ids.sort_by_key(|id| IdentityId::ALL.iter().position(|a| a == id));
    Ok(ids)
}

fn read_input(input: &Input, stdin: &mut dyn Read) -> std::result::Result<SymFunc, Failure> {
    if let Some(s) = &input.schur {
        return Ok(SymFunc::schur(s.parse()?));
    }
    if let Some(s) = &input.power {
        return Ok(SymFunc::power(s.parse()?));
    }
    let arg = input.input.as_deref().unwrap_or_default();
    let text = if arg == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Failure::Usage(format!("cannot read standard input: {e}")))?;
        buf
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg)
            .map_err(|e| Failure::Usage(format!("cannot read `{arg}`: {e}")))?
    } else {
        arg.to_string()
    };
    Ok(parse_symfunc(&text)?)
}

/// JSON when the text starts with `{`, the expression grammar otherwise.
pub fn parse_symfunc(text: &str) -> crate::error::Result<SymFunc> {
    let text = text.trim();
    if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| Error::Parse {
            token: text.chars().take(40).collect(),
            reason: format!("invalid JSON: {e}"),
        })
    } else {
        text.parse()
    }
}

fn emit<T: Serialize + std::fmt::Display>(out: &mut dyn Write, json: bool, value: &T) -> Outcome {
    if json {
        emit_json(out, value)
    } else {
        emit_line(out, &value.to_string())
    }
}

fn emit_json<T: Serialize + ?Sized>(out: &mut dyn Write, value: &T) -> Outcome {
    let line = serde_json::to_string(value).expect("values serialize");
    emit_line(out, &line)
}

fn emit_line(out: &mut dyn Write, line: &str) -> Outcome {
    write_all(out, &format!("{line}\n"))
}

fn write_all(out: &mut dyn Write, text: &str) -> Outcome {
    out.write_all(text.as_bytes())
        .map_err(|e| Failure::Usage(format!("cannot write output: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        call_with_stdin(args, "")
    }

    fn call_with_stdin(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut argv = vec!["dsym"];
        argv.extend_from_slice(args);
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run_with(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn documented_examples() {
        assert_eq!(call(&["eval", "--schur", "1", "--vars", "3"]).1, "x1 + x2 + x3\n");
        assert_eq!(call(&["dmap", "--power", "2"]).1, "0\n");
        assert_eq!(call(&["dims", "--max", "10"]).1, "1 1 2 2 3 4 5 6 8 10\n");
    }

    #[test]
    fn usage_errors_name_the_token() {
        let (code, out, err) = call(&["eval", "--schur", "2,x", "--vars", "2"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(out.is_empty());
        assert!(err.contains("`x`"), "{err}");
        assert_eq!(err.lines().count(), 1);

        let (code, _, err) = call(&["eval", "--bogus"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("--bogus"), "{err}");
        assert_eq!(err.lines().count(), 1);

        let (code, _, err) = call(&["dmap", "--input", "2*Q[1]"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("Q"), "{err}");

        let (code, _, err) = call(&["verify", "--suite", "EQ1,NOPE"]);
        assert_eq!(code, EXIT_USAGE);
        assert!(err.contains("NOPE"), "{err}");

        let (code, _, _) = call(&["dmap"]);
        assert_eq!(code, EXIT_USAGE);
        let (code, _, _) = call(&["dmap", "--schur", "1", "--power", "1"]);
        assert_eq!(code, EXIT_USAGE);
    }

    #[test]
    fn convert_and_project() {
        assert_eq!(
            call(&["convert", "--power", "3"]).1,
            "S[3] - S[2,1] + S[1,1,1]\n"
        );
        assert_eq!(
            call(&["convert", "--input", "S[1,1]", "--to", "schur"]).1,
            "S[1,1]\n"
        );
        let (code, out, _) = call(&["project", "--input", "P[2] + P[1,1]"]);
        assert_eq!(code, 0);
        assert_eq!(out, "doubly: P[1,1]\nideal: P[2]\n");
        assert_eq!(call(&["is-doubly", "--schur", "2,1"]).1, "true\n");
        assert_eq!(call(&["is-doubly", "--schur", "2"]).1, "false\n");
        assert_eq!(call(&["in-ideal", "--input", "S[2] - S[1,1]"]).1, "true\n");
    }

    #[test]
    fn json_outputs_are_valid_inputs() {
        let (_, out, _) = call(&["--json", "convert", "--input", "3/2*S[2,1] + P[3]"]);
        let f = parse_symfunc(&out).unwrap();
        let g = parse_symfunc("3/2*S[2,1] + P[3]").unwrap();
        assert_eq!(f, g.to_power().unwrap());
        let (code, again, _) = call_with_stdin(&["--json", "convert", "--input", "-", "--to", "power"], &out);
        assert_eq!(code, 0);
        assert_eq!(again, out);

        let (_, dm, _) = call(&["dmap", "--json", "--schur", "2,1"]);
        let (_, dm2, _) = call_with_stdin(&["convert", "--json", "--to", "schur", "--input", "-"], &dm);
        assert_eq!(parse_symfunc(&dm2).unwrap(), parse_symfunc(&dm).unwrap());

        let (_, poly, _) = call(&["--json", "hs-eval", "--schur", "2", "--k", "1", "--l", "1"]);
        let back: crate::polyring::MultiPoly = serde_json::from_str(&poly).unwrap();
        assert_eq!(back.to_string(), "x1^2 + x1*y1");

        let (_, d, _) = call(&["--json", "project", "--schur", "2"]);
        let back: crate::doubling::Decomposition = serde_json::from_str(&d).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap() + "\n", d);
    }

    #[test]
    fn tableaux_listing() {
        let (code, out, _) = call(&["tableaux", "--shape", "2", "--k", "1", "--l", "1"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        let (_, json, _) = call(&["tableaux", "--json", "--shape", "2,1", "--inner", "1", "--k", "2"]);
        let list: Vec<crate::tableaux::HookTableau> = serde_json::from_str(&json).unwrap();
        assert_eq!(list.len(), 4);
    }

    #[test]
    fn verify_subset_and_exit_codes() {
        let (code, out, _) = call(&["verify", "--suite", "DIMS,EIGEN"]);
        assert_eq!(code, 0);
        let rows: Vec<&str> = out.lines().collect();
        assert_eq!(rows.len(), 3);
        assert!(rows[1].starts_with("EIGEN"), "{out}");
        assert!(rows[2].starts_with("DIMS"), "{out}");

        // forcing the printed constant makes the suite fail as an erratum only
        let (code, _, _) = call(&["verify", "--suite", "DS_POWER", "--constant", "4"]);
        assert_eq!(code, 0);

        let (code, out, _) = call(&["--json", "verify", "--suite", "DS_POWER", "--bound-degree", "3"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 2);
        for line in out.lines() {
            let r: crate::verify::IdentityReport = serde_json::from_str(line).unwrap();
            assert_eq!(r.identity_id, IdentityId::DsPower);
        }
    }
}

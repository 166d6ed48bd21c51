//! Command-line frontend: `expand`, `paths`, `verify` and `weyl`.
//!
//! Exit codes are 0 on success, 1 when an identity fails or a computation
//! errors, 2 on bad usage. Output is deterministic; JSON documents and JSON
//! lines are written compactly with a trailing newline.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::error::Error;
use crate::paths::{final_direction, generate_paths, restrict_le, PathRecord};
use crate::pieri::{
    expand, verify_braid, verify_characters, verify_commutation, verify_crystal,
    verify_defining_relation, verify_dimensions, verify_expansions, verify_idempotence,
    verify_strings, verify_theorem, GridConfig, VerificationReport,
};
use crate::rootdata::{CartanType, RootSystem, Weight, WeylElement, WeylGroup};

#[derive(Debug, Parser)]
#[command(
    name = "pieri",
    version,
    about = "Pieri-Chevalley expansions via Littelmann paths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand y^λ [O_w] in the Schubert basis.
    Expand(ExpandArgs),
    /// List the paths of shape λ, optionally only those below w.
    Paths(PathsArgs),
    /// Run verification suites over a grid.
    Verify(VerifyArgs),
    /// List the Weyl group with lengths, words and the Bruhat order.
    Weyl(CommonArgs),
}

#[derive(Debug, Args)]
pub struct CommonArgs {
    /// Root system, e.g. A2, B3, G2.
    #[arg(long = "type", value_name = "TYPE")]
    pub root_type: String,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Write to this file instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExpandArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    /// Dominant weight in fundamental-weight coordinates, e.g. 1,0.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Weyl group element as a word: s1s2, 1,2, or 1 for the identity.
    #[arg(long)]
    pub w: String,
}

#[derive(Debug, Args)]
pub struct PathsArgs {
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
    /// Keep only paths with ι(π) ≤ w and report v(π, w).
    #[arg(long = "le-w")]
    pub le_w: Option<String>,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub suite: Suite,
    #[command(flatten)]
    pub common: CommonArgs,
    #[arg(long, default_value_t = 2)]
    pub lambda_box: i64,
    #[arg(long, default_value_t = 2)]
    pub mu_box: i64,
    /// Worker threads for grid evaluation.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Theorem,
    Commutation,
    Braid,
    Idempotence,
    Defining,
    /// braid, idempotence, commutation and defining
    Ops,
    Strings,
    Dimensions,
    Characters,
    Crystal,
    Expansions,
    All,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Compute(e.to_string())
    }
}

/// Parses `args` (including the program name) and runs the command.
/// Returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    let common = match &cli.command {
        Command::Expand(a) => &a.common,
        Command::Paths(a) => &a.common,
        Command::Verify(a) => &a.common,
        Command::Weyl(a) => a,
    };
    let result = parse_group(&common.root_type).and_then(|group| match &cli.command {
        Command::Expand(a) => cmd_expand(&group, a),
        Command::Paths(a) => cmd_paths(&group, a),
        Command::Verify(a) => cmd_verify(&group, a),
        Command::Weyl(a) => cmd_weyl(&group, a),
    });
    match result {
        Ok((text, ok)) => match emit(common, &text) {
            Ok(()) => i32::from(!ok),
            Err(msg) => {
                eprintln!("error: {msg}");
                1
            }
        },
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            2
        }
        Err(Failure::Compute(msg)) => {
            eprintln!("error: {msg}");
            1
        }
    }
}

fn emit(common: &CommonArgs, text: &str) -> Result<(), String> {
    match &common.output {
        Some(path) => std::fs::write(path, text).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn usage(e: Error) -> Failure {
    Failure::Usage(e.to_string())
}

fn parse_group(name: &str) -> Result<WeylGroup, Failure> {
    let ct: CartanType = name.parse().map_err(usage)?;
    Ok(WeylGroup::new(RootSystem::new(ct).map_err(usage)?))
}

/// Comma-separated integers, one per fundamental weight.
pub fn parse_weight(s: &str, rank: usize) -> Result<Weight, Error> {
    let coords = s
        .split(',')
        .map(|c| c.trim().parse::<i64>())
        .collect::<Result<Vec<_>, _>>()
        .map_err(|_| Error::Parse(format!("bad weight {s:?}")))?;
    if coords.len() != rank {
        return Err(Error::RankMismatch {
            expected: rank,
            found: coords.len(),
        });
    }
    Ok(Weight::new(&coords))
}

/// Generator words: `1`, `e`, `id` or the empty string for the identity;
/// `s1s2` style; or a comma list such as `1,2` (a single generator needs
/// the `s` form or a trailing comma, since `1` is the identity).
pub fn parse_word(s: &str) -> Result<Vec<usize>, Error> {
    let t = s.trim();
    if matches!(t, "" | "1" | "e" | "id") {
        return Ok(Vec::new());
    }
    let bad = || {
        Error::Parse(format!(
            "bad word {s:?}; use s1s2, 1,2 or 1 for the identity"
        ))
    };
    if t.starts_with('s') {
        return t
            .split('s')
            .skip(1)
            .map(|d| d.parse::<usize>().map_err(|_| bad()))
            .collect();
    }
    if !t.contains(',') {
        return Err(bad());
    }
    t.split(',')
        .filter(|d| !d.trim().is_empty())
        .map(|d| d.trim().parse::<usize>().map_err(|_| bad()))
        .collect()
}

fn parse_element<'g>(group: &'g WeylGroup, s: &str) -> Result<&'g WeylElement, Failure> {
    let word = parse_word(s).map_err(usage)?;
    group.from_word(&word).map_err(usage)
}

fn parse_dominant(group: &WeylGroup, s: &str) -> Result<Weight, Failure> {
    let lam = parse_weight(s, group.rank()).map_err(usage)?;
    if !lam.is_dominant() {
        return Err(usage(Error::NotDominant(lam.to_string())));
    }
    Ok(lam)
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("serializable");
    s.push('\n');
    s
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}

fn cmd_expand(group: &WeylGroup, a: &ExpandArgs) -> Result<(String, bool), Failure> {
    let lam = parse_dominant(group, &a.lambda)?;
    let w = parse_element(group, &a.w)?;
    let ex = expand(group, &lam, w)?;
    let text = match a.common.format {
        Format::Json => json_line(&ex.to_record()),
        Format::Tsv => {
            let mut out = String::from("v\tmu\tc\n");
            for (v, c) in ex.terms() {
                for (mu, k) in c.terms() {
                    let _ = writeln!(out, "{v}\t{}\t{k}", join(mu.coords(), ","));
                }
            }
            out
        }
    };
    Ok((text, true))
}

#[derive(Serialize)]
struct PathListing {
    #[serde(flatten)]
    path: PathRecord,
    iota: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    v: Option<Vec<usize>>,
}

fn cmd_paths(group: &WeylGroup, a: &PathsArgs) -> Result<(String, bool), Failure> {
    let lam = parse_dominant(group, &a.lambda)?;
    let w = a
        .le_w
        .as_deref()
        .map(|s| parse_element(group, s))
        .transpose()?;
    let mut ps = generate_paths(group, &lam)?;
    if let Some(w) = w {
        ps = restrict_le(group, &ps, w)?;
    }
    let mut out = String::new();
    if a.common.format == Format::Tsv {
        out.push_str(if w.is_some() {
            "dirs\tbreaks\tendpoint\tiota\tv\n"
        } else {
            "dirs\tbreaks\tendpoint\tiota\n"
        });
    }
    for p in &ps {
        let iota = p.initial_direction(group).min_rep().clone();
        let v = w.map(|w| final_direction(group, p, w)).transpose()?;
        match a.common.format {
            Format::Json => out.push_str(&json_line(&PathListing {
                path: p.to_record(),
                iota: iota.word().to_vec(),
                v: v.as_ref().map(|v| v.word().to_vec()),
            })),
            Format::Tsv => {
                let rec = p.to_record();
                let dirs: Vec<String> = rec.dirs.iter().map(|d| join(d, ",")).collect();
                let _ = write!(
                    out,
                    "{}\t{}\t{}\t{iota}",
                    dirs.join(";"),
                    rec.breaks.join(";"),
                    join(&rec.endpoint, ",")
                );
                if let Some(v) = v {
                    let _ = write!(out, "\t{v}");
                }
                out.push('\n');
            }
        }
    }
    Ok((out, true))
}

fn cmd_verify(group: &WeylGroup, a: &VerifyArgs) -> Result<(String, bool), Failure> {
    if a.lambda_box < 0 || a.mu_box < 0 || a.jobs == 0 {
        return Err(Failure::Usage(
            "boxes must be nonnegative and --jobs positive".into(),
        ));
    }
    let cfg = GridConfig {
        lambda_box: a.lambda_box,
        mu_box: a.mu_box,
        jobs: a.jobs,
    };
    type SuiteFn = fn(&WeylGroup, &GridConfig) -> crate::error::Result<VerificationReport>;
    let ops: [SuiteFn; 4] = [
        verify_braid,
        verify_idempotence,
        verify_commutation,
        verify_defining_relation,
    ];
    let suites: Vec<SuiteFn> = match a.suite {
        Suite::Theorem => vec![verify_theorem],
        Suite::Commutation => vec![verify_commutation],
        Suite::Braid => vec![verify_braid],
        Suite::Idempotence => vec![verify_idempotence],
        Suite::Defining => vec![verify_defining_relation],
        Suite::Ops => ops.to_vec(),
        Suite::Strings => vec![verify_strings],
        Suite::Dimensions => vec![verify_dimensions],
        Suite::Characters => vec![verify_characters],
        Suite::Crystal => vec![verify_crystal],
        Suite::Expansions => vec![verify_expansions],
        Suite::All => {
            let mut v: Vec<SuiteFn> = vec![verify_theorem];
            v.extend(ops);
            v.extend([
                verify_strings as SuiteFn,
                verify_dimensions,
                verify_characters,
                verify_crystal,
                verify_expansions,
            ]);
            v
        }
    };
    let mut out = String::new();
    if a.common.format == Format::Tsv {
        out.push_str("identity\troot_system\tpassed\tchecked\n");
    }
    let mut all_ok = true;
    for suite in suites {
        let report = suite(group, &cfg)?;
        if let Some(ce) = &report.counterexample {
            eprintln!(
                "{} counterexample: {}",
                report.summary(),
                json_line(ce).trim_end()
            );
        }
        all_ok &= report.passed;
        match a.common.format {
            Format::Json => out.push_str(&json_line(&report)),
            Format::Tsv => {
                let _ = writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    report.identity, report.root_system, report.passed, report.checked
                );
            }
        }
    }
    Ok((out, all_ok))
}

#[derive(Serialize)]
struct WeylListing {
    root_system: String,
    order: usize,
    elements: Vec<WeylRow>,
    bruhat: Vec<Vec<u8>>,
}

#[derive(Serialize)]
struct WeylRow {
    word: Vec<usize>,
    length: usize,
}

fn cmd_weyl(group: &WeylGroup, a: &CommonArgs) -> Result<(String, bool), Failure> {
    let elems = group.elements();
    let bruhat: Vec<Vec<u8>> = elems
        .iter()
        .map(|u| {
            elems
                .iter()
                .map(|v| u8::from(group.bruhat_leq(u, v)))
                .collect()
        })
        .collect();
    let text = match a.format {
        Format::Json => json_line(&WeylListing {
            root_system: group.root_system().name(),
            order: group.order(),
            elements: elems
                .iter()
                .map(|w| WeylRow {
                    word: w.word().to_vec(),
                    length: w.length(),
                })
                .collect(),
            bruhat,
        }),
        Format::Tsv => {
            let mut out = String::from("word\tlength");
            for w in elems {
                let _ = write!(out, "\t{w}");
            }
            out.push('\n');
            for (w, row) in elems.iter().zip(&bruhat) {
                let _ = writeln!(out, "{w}\t{}\t{}", w.length(), join(row, "\t"));
            }
            out
        }
    };
    Ok((text, true))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn words() {
        assert_eq!(parse_word("1").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_word("s1s2").unwrap(), vec![1, 2]);
        assert_eq!(parse_word("s1").unwrap(), vec![1]);
        assert_eq!(parse_word("1,2").unwrap(), vec![1, 2]);
        assert_eq!(parse_word("2,").unwrap(), vec![2]);
        assert_eq!(parse_word(" 2 , 1 ").unwrap(), vec![2, 1]);
        assert!(parse_word("2").is_err());
        assert!(parse_word("s1x").is_err());
        assert!(parse_word("ss1").is_err());
    }

    #[test]
    fn weights() {
        assert_eq!(parse_weight("1,0", 2).unwrap(), Weight::new(&[1, 0]));
        assert_eq!(parse_weight("-1, 2", 2).unwrap(), Weight::new(&[-1, 2]));
        assert!(parse_weight("1", 2).is_err());
        assert!(parse_weight("a,b", 2).is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(run(["pieri", "weyl", "--type", "A1"]), 0);
        assert_eq!(run(["pieri", "weyl", "--type", "Q9"]), 2);
        assert_eq!(run(["pieri", "frobnicate"]), 2);
        assert_eq!(
            run(["pieri", "expand", "--type", "A2", "--lambda", "1", "--w", "1"]),
            2
        );
        assert_eq!(
            run(["pieri", "expand", "--type", "A2", "--lambda", "-1,0", "--w", "1"]),
            2
        );
        assert_eq!(
            run(["pieri", "expand", "--type", "A2", "--lambda", "1,0", "--w", "s3"]),
            2
        );
    }
}

//! Command-line front end.
//!
//! Each command takes file contents and returns an [`Output`], so the whole
//! interface can be driven without a process. Exit codes are 0 on success,
//! 1 on a semantic failure and 2 on a parse or usage error.

use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crate::classify::{classify_medial_index2, ClassifyError};
use crate::constructions::{ConstructionError, Family};
use crate::enumerate::{census, CensusFilter, SOFT_ORDER_CAP};
use crate::iso::are_isomorphic;
use crate::report::{self, to_json_string, with_field};
use crate::representation::{theta, Probability};
use crate::semigroup::{FiniteSemigroup, SemigroupError};
use crate::text::{self, ParseError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    fn fail(code: i32, message: impl std::fmt::Display) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {}\n", message),
            code,
        }
    }

    fn with_stderr(mut self, message: impl std::fmt::Display) -> Self {
        self.stderr.push_str(&format!("{}\n", message));
        self
    }

    fn with_code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

fn parse_failure(e: &ParseError) -> Output {
    match e {
        ParseError::Syntax { .. } => Output::fail(EXIT_USAGE, format!("parse error: {}", e)),
        _ => Output::fail(EXIT_FAILURE, e),
    }
}

/// Loads a table, turning a failed associativity scan into a report.
fn load_table(src: &str, json: bool) -> Result<FiniteSemigroup, Output> {
    let raw = text::parse_table(src).map_err(|e| parse_failure(&e))?;
    let order = raw.names.len();
    match raw.into_semigroup() {
        Ok(s) => Ok(s),
        Err(e @ SemigroupError::NotAssociative(..)) => {
            let SemigroupError::NotAssociative(x, y, z) = &e else {
                unreachable!()
            };
            let stdout = if json {
                to_json_string(&report::non_associative_json(order, [x, y, z]))
            } else {
                format!(
                    "order: {}\nassociative: false\nwitness: ({}, {}, {})\n",
                    order, x, y, z
                )
            };
            Err(Output {
                stdout,
                stderr: format!("error: {}\n", e),
                code: EXIT_FAILURE,
            })
        }
        Err(e) => Err(Output::fail(EXIT_FAILURE, e)),
    }
}

pub fn analyze(src: &str, json: bool) -> Output {
    let s = match load_table(src, json) {
        Ok(s) => s,
        Err(out) => return out,
    };
    if json {
        Output::ok(to_json_string(&report::analysis_json(&s)))
    } else {
        Output::ok(report::analysis_text(&s))
    }
}

fn construction_error_kind(e: &ConstructionError) -> &'static str {
    match e {
        ConstructionError::EquationFailed(_) => "EquationFailed",
        ConstructionError::DegenerateParams => "DegenerateParams",
        ConstructionError::MapShape { .. } => "MapShape",
        ConstructionError::OverlappingNames(_) => "OverlappingNames",
        ConstructionError::PostconditionFailed(_) => "PostconditionFailed",
        ConstructionError::Semigroup(_) => "Semigroup",
    }
}

/// Builds the semigroup described by a parameter file and prints it as a
/// table file, preceded by the report as `#` comments.
pub fn construct(src: &str, json: bool) -> Output {
    let params = match text::parse_params(src) {
        Ok(p) => p,
        Err(e) => return parse_failure(&e),
    };
    let family = params.family();
    let s = match params.build() {
        Ok(s) => s,
        Err(e) => {
            let kind = construction_error_kind(&e);
            let mut out = Output::fail(EXIT_FAILURE, format!("{}: {}", kind, e));
            if json {
                out.stdout = to_json_string(&json!({
                    "family": family.number(),
                    "valid": false,
                    "error": { "kind": kind, "message": e.to_string() },
                }));
            }
            return out;
        }
    };
    if json {
        let table: Vec<Vec<&str>> = (0..s.order())
            .map(|x| s.row(x).iter().map(|&p| s.name(p)).collect())
            .collect();
        let doc = with_field(
            report::analysis_json(&s),
            "construction",
            json!({
                "family": family.number(),
                "valid": true,
                "elements": s.names(),
                "table": table,
            }),
        );
        return Output::ok(to_json_string(&doc));
    }
    let mut stdout = format!("# {}: parameters valid\n", family);
    for line in report::analysis_text(&s).lines() {
        stdout.push_str("# ");
        stdout.push_str(line);
        stdout.push('\n');
    }
    stdout.push_str(&text::format_table(&s));
    Output::ok(stdout)
}

/// Classifies a medial index-2 semigroup. With `expect`, anything other than
/// a verified member of that family exits 1.
pub fn classify(src: &str, json: bool, expect: Option<Family>) -> Output {
    let s = match load_table(src, json) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let index = theta(&s).index();
    let (doc, text, outcome) = match classify_medial_index2(&s) {
        Ok(r) => {
            let outcome = if !r.verified {
                Err(format!(
                    "rebuilt table differs from the input ({})",
                    r.family
                ))
            } else {
                match expect {
                    Some(f) if f != r.family => Err(format!(
                        "expected family {}, found {}",
                        f.number(),
                        r.family.number()
                    )),
                    _ => Ok(()),
                }
            };
            let doc = with_field(
                report::analysis_json(&s),
                "classification",
                report::classification_json(&r),
            );
            (doc, report::classification_text(&r), outcome)
        }
        Err(ClassifyError::Rejected(rej)) => {
            let outcome = match expect {
                Some(f) => Err(format!("expected family {}, but {}", f.number(), rej)),
                None => Ok(()),
            };
            let doc = with_field(
                report::analysis_json(&s),
                "rejection",
                report::rejection_json(&rej, index),
            );
            (doc, format!("rejected: {}\n", rej), outcome)
        }
        Err(e @ ClassifyError::Inconsistent(_)) => return Output::fail(EXIT_FAILURE, e),
    };
    let stdout = if json {
        to_json_string(&doc)
    } else {
        format!("{}{}", report::analysis_text(&s), text)
    };
    match outcome {
        Ok(()) => Output::ok(stdout),
        Err(message) => Output::ok(stdout)
            .with_stderr(format!("error: {}", message))
            .with_code(EXIT_FAILURE),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct EnumerateOptions {
    pub order: usize,
    pub filter: CensusFilter,
    pub dump: bool,
    pub json: bool,
}

pub fn enumerate(options: &EnumerateOptions) -> Output {
    let n = options.order;
    if n == 0 {
        return Output::fail(EXIT_USAGE, "order must be at least 1");
    }
    let mut warning = String::new();
    if n > SOFT_ORDER_CAP {
        warning = format!(
            "warning: order {} is above {} and may take a long time\n",
            n, SOFT_ORDER_CAP
        );
    }
    let result = census(n, &options.filter);
    let stdout = if options.json {
        let mut doc = json!({
            "order": n,
            "scanned": result.scanned,
            "count": result.hits.len(),
        });
        if options.dump {
            let tables: Vec<Value> = result.hits.iter().map(report::analysis_json).collect();
            let rows: Vec<Vec<Vec<&str>>> = result
                .hits
                .iter()
                .map(|s| {
                    (0..n)
                        .map(|x| s.row(x).iter().map(|&p| s.name(p)).collect())
                        .collect()
                })
                .collect();
            doc = with_field(doc, "reports", Value::from(tables));
            doc = with_field(doc, "tables", json!(rows));
        }
        to_json_string(&doc)
    } else {
        let mut out = format!("{}\n", result.hits.len());
        if options.dump {
            for (i, s) in result.hits.iter().enumerate() {
                out.push_str(&format!("\n# hit {}\n", i + 1));
                out.push_str(&text::format_table(s));
            }
        }
        out
    };
    Output {
        stdout,
        stderr: warning,
        code: EXIT_OK,
    }
}

/// Prints a bijection `x -> y` per element, or `not isomorphic`. Both
/// answers exit 0.
pub fn check_iso(src1: &str, src2: &str, json: bool) -> Output {
    let load = |src| load_table(src, json);
    let s = match load(src1) {
        Ok(s) => s,
        Err(out) => return out,
    };
    let t = match load(src2) {
        Ok(t) => t,
        Err(out) => return out,
    };
    let map = are_isomorphic(&s, &t);
    let stdout = if json {
        let bijection = map.as_ref().map(|m| {
            let pairs: serde_json::Map<String, Value> = (0..s.order())
                .map(|x| (s.name(x).to_string(), Value::from(t.name(m.apply(x)))))
                .collect();
            Value::Object(pairs)
        });
        to_json_string(&json!({ "isomorphic": map.is_some(), "bijection": bijection }))
    } else {
        match &map {
            Some(m) => {
                let mut out = String::from("isomorphic\n");
                for x in 0..s.order() {
                    out.push_str(&format!("{} -> {}\n", s.name(x), t.name(m.apply(x))));
                }
                out
            }
            None => "not isomorphic\n".to_string(),
        }
    };
    Output::ok(stdout)
}

/// Parses `family=K` with `K` in 1..=4.
pub fn parse_expect(arg: &str) -> Result<Family, String> {
    arg.strip_prefix("family=")
        .and_then(|k| k.parse::<u8>().ok())
        .and_then(Family::from_number)
        .ok_or_else(|| format!("expected `family=K` with K in 1..4, got `{}`", arg))
}

pub fn parse_probability(arg: &str) -> Result<Probability, String> {
    let p = Probability::from_str(arg.trim())
        .map_err(|_| format!("expected a fraction p/q, got `{}`", arg))?;
    if p > Probability::from_integer(1) {
        return Err(format!("probability {} exceeds 1", arg));
    }
    Ok(p)
}

#[derive(Debug, Parser)]
#[command(
    name = "semitheta",
    version,
    about = "Right regular representation kernels of finite semigroups"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct JsonFlag {
    /// Emit a JSON document instead of text
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Identities, kernel classes, index and probability of a table
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Build a semigroup from a construction parameter file
    Construct {
        file: PathBuf,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Recover the construction behind a medial index-2 table
    Classify {
        file: PathBuf,
        /// Exit 1 unless the table is a verified member of this family
        #[arg(long, value_name = "family=K", value_parser = parse_expect)]
        expect: Option<Family>,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Count semigroups of one order up to isomorphism
    Enumerate {
        #[arg(long)]
        order: usize,
        /// Keep only medial semigroups
        #[arg(long)]
        medial: bool,
        /// Keep only kernels with this many classes
        #[arg(long)]
        index: Option<usize>,
        /// Keep only this coincidence probability
        #[arg(long, value_name = "p/q", value_parser = parse_probability)]
        probability: Option<Probability>,
        /// Keep only semigroups whose kernel has one class
        #[arg(long)]
        theta_universal: bool,
        /// Keep only right commutative semigroups
        #[arg(long)]
        right_commutative: bool,
        /// Print every matching table
        #[arg(long)]
        dump: bool,
        #[command(flatten)]
        json: JsonFlag,
    },
    /// Find an isomorphism between two tables
    CheckIso {
        file1: PathBuf,
        file2: PathBuf,
        #[command(flatten)]
        json: JsonFlag,
    },
}

fn read(path: &PathBuf) -> Result<String, Output> {
    std::fs::read_to_string(path)
        .map_err(|e| Output::fail(EXIT_USAGE, format!("cannot read {}: {}", path.display(), e)))
}

pub fn execute(command: Command) -> Output {
    let result = (|| {
        Ok(match command {
            Command::Analyze { file, json } => analyze(&read(&file)?, json.json),
            Command::Construct { file, json } => construct(&read(&file)?, json.json),
            Command::Classify { file, expect, json } => classify(&read(&file)?, json.json, expect),
            Command::Enumerate {
                order,
                medial,
                index,
                probability,
                theta_universal,
                right_commutative,
                dump,
                json,
            } => {
                let filter = CensusFilter {
                    medial: medial.then_some(true),
                    index,
                    probability,
                    right_commutative: right_commutative.then_some(true),
                    theta_universal: theta_universal.then_some(true),
                };
                enumerate(&EnumerateOptions {
                    order,
                    filter,
                    dump,
                    json: json.json,
                })
            }
            Command::CheckIso { file1, file2, json } => {
                check_iso(&read(&file1)?, &read(&file2)?, json.json)
            }
        })
    })();
    result.unwrap_or_else(|out: Output| out)
}

/// Parses arguments (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => execute(cli.command),
        Err(e) => {
            let rendered = e.render().to_string();
            if e.use_stderr() {
                Output {
                    stdout: String::new(),
                    stderr: rendered,
                    code: EXIT_USAGE,
                }
            } else {
                Output::ok(rendered)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::examples;
    use crate::fixtures;

    #[test]
    fn analyze_trivial_and_non_associative() {
        let out = analyze("z\nz\n", true);
        assert_eq!(out.code, 0);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["theta"]["index"], 1);
        assert_eq!(doc["theta"]["probability"], "1/1");

        let out = analyze("a b\nb a\na a\n", true);
        assert_eq!(out.code, EXIT_FAILURE);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["associative"], false);
        assert_eq!(doc["witness"].as_array().unwrap().len(), 3);

        assert_eq!(analyze("a b\na\n", false).code, EXIT_USAGE);
    }

    #[test]
    fn construct_degenerate_zero_params() {
        let src = "construction: 2\nA:\nset: a\nB:\nb 0\n0 0\n0 0\nalpha:\na -> 0\nbeta:\na -> 0\ngamma:\nb -> 0\n0 -> 0\n";
        let out = construct(src, false);
        assert_eq!(out.code, EXIT_FAILURE);
        assert!(out.stderr.contains("DegenerateParams"), "{}", out.stderr);
    }

    #[test]
    fn construct_prints_parsable_table() {
        let src = text::format_params(&examples::semilattice());
        let out = construct(&src, false);
        assert_eq!(out.code, 0);
        assert_eq!(
            text::read_semigroup(&out.stdout).unwrap(),
            fixtures::semilattice_extension()
        );
    }

    #[test]
    fn classify_expectations() {
        let src = text::format_table(&fixtures::right_zero_extension());
        assert_eq!(classify(&src, false, Some(Family::RightZero)).code, 0);
        assert_eq!(
            classify(&src, false, Some(Family::Group)).code,
            EXIT_FAILURE
        );

        let lz = text::format_table(&fixtures::left_zero(3));
        let out = classify(&lz, true, None);
        assert_eq!(out.code, 0);
        let doc: Value = serde_json::from_str(&out.stdout).unwrap();
        assert_eq!(doc["rejection"]["reason"], "IndexNot2");
        assert_eq!(doc["rejection"]["index"], 1);
        assert_eq!(classify(&lz, true, Some(Family::Zero)).code, EXIT_FAILURE);
    }

    #[test]
    fn argument_parsing() {
        assert_eq!(parse_expect("family=3"), Ok(Family::Group));
        assert!(parse_expect("family=0").is_err());
        assert!(parse_expect("3").is_err());
        assert_eq!(parse_probability("1/2").unwrap(), Probability::new(1, 2));
        assert_eq!(parse_probability("2/4").unwrap(), Probability::new(1, 2));
        assert!(parse_probability("3/2").is_err());
        assert!(parse_probability("0.5").is_err());

        let out = run(["semitheta", "enumerate", "--order", "2"]);
        assert_eq!((out.code, out.stdout.as_str()), (0, "5\n"));
        assert_eq!(run(["semitheta", "enumerate"]).code, EXIT_USAGE);
        assert_eq!(
            run(["semitheta", "classify", "x", "--expect", "family=9"]).code,
            EXIT_USAGE
        );
        assert_eq!(
            run(["semitheta", "analyze", "/nonexistent/table"]).code,
            EXIT_USAGE
        );
    }

    #[test]
    fn check_iso_answers() {
        let lz = text::format_table(&fixtures::left_zero(2));
        let rz = text::format_table(&fixtures::right_zero(2));
        assert_eq!(check_iso(&lz, &rz, false).stdout, "not isomorphic\n");
        let out = check_iso(&lz, &lz, false);
        assert_eq!(out.stdout, "isomorphic\n0 -> 0\n1 -> 1\n");
    }
}

//! Command-line queries. [`run`] never panics on bad input and never exits
//! the process; it returns the exit code together with both output streams.
//!
//! Exit codes: 0 for true, Proven or Completed; 1 for false; 2 for Unknown
//! or Exhausted; 3 for any error.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;

use clap::{Parser, ValueEnum};

use crate::automata::Word;
use crate::engine::{
    attackers_of_word, characteristic, finitary_syntactic, grounded, is_acceptable, is_admissible, is_complete,
    is_conflict_free, is_stable, no_credulous_admissible, stable_empty_semidecide, FinitaryStatus, GroundedStatus,
    SemiDecisionResult, SemiStatus, WordAttackers, DEFAULT_ATTACKER_CAP,
};
use crate::error::{Error, Result};
use crate::format::{import_apx, load_combination, load_spec, render_afs};
use crate::semantics::ArgSet;
use crate::spec::AfSpec;

pub const PREVIEW_WORDS: usize = 20;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Parse and validate a specification
    Validate,
    /// Arguments attacking some member of --set
    Attackers,
    /// Arguments attacked by some member of --set
    Attacked,
    CheckConflictFree,
    CheckAdmissible,
    CheckStable,
    CheckComplete,
    /// Whether --set defends --arg
    Acceptable,
    /// Characteristic function applied to --set
    Characteristic,
    Grounded,
    SemidecideStableEmpty,
    /// Whether no admissible set contains every word of --args
    SemidecideCredNone,
    Finitary,
    /// List members of --set (or of the argument language)
    Enum,
    /// Convert an APX file to a specification
    ImportApx,
    /// Combine the components listed in a manifest
    Combine,
    /// Serialize --set (or the argument language) as an automaton
    Export,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Dot,
    /// One rendered word per line, truncated after the first 20 with `…`
    /// unless listing with `enum`
    Words,
}

/// A single query against a specification file.
#[derive(Debug, Clone, Parser)]
#[command(name = "afspec", version, about = "Queries on regular infinite argumentation frameworks")]
pub struct QueryRequest {
    #[arg(value_enum)]
    pub command: Command,

    /// Specification (.afs or .apx), APX file, or combination manifest
    pub path: PathBuf,

    /// Argument set as a regex over the spec alphabet
    #[arg(long = "set", value_name = "REGEX")]
    pub set_regex: Option<String>,

    #[arg(long = "arg", value_name = "WORD")]
    pub arg_word: Option<String>,

    /// Comma-separated argument words
    #[arg(long = "args", value_name = "WORDS", value_delimiter = ',')]
    pub args: Option<Vec<String>>,

    #[arg(long, value_name = "N", default_value_t = 64)]
    pub max_iter: usize,

    #[arg(long, value_name = "K", default_value_t = 256)]
    pub budget: usize,

    #[arg(long, value_name = "L")]
    pub max_len: Option<usize>,

    #[arg(long, value_name = "N")]
    pub max_count: Option<usize>,

    #[arg(long, value_enum)]
    pub format: Option<OutputFormat>,

    /// Write the primary output here instead of standard output
    #[arg(long, value_name = "PATH")]
    pub out: Option<PathBuf>,
}

impl QueryRequest {
    pub fn new(command: Command, path: impl Into<PathBuf>) -> Self {
        QueryRequest {
            command,
            path: path.into(),
            set_regex: None,
            arg_word: None,
            args: None,
            max_iter: 64,
            budget: 256,
            max_len: None,
            max_count: None,
            format: None,
            out: None,
        }
    }

    pub fn with_set(mut self, regex: &str) -> Self {
        self.set_regex = Some(regex.to_string());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run(q: &QueryRequest) -> Outcome {
    let mut out = Outcome {
        code: 0,
        stdout: String::new(),
        stderr: String::new(),
    };
    let result = check_options(q).and_then(|()| dispatch(q, &mut out));
    match result {
        Ok(code) => {
            out.code = code;
            if let Some(path) = &q.out {
                if let Err(source) = fs::write(path, &out.stdout) {
                    let e = Error::Io {
                        path: path.display().to_string(),
                        source,
                    };
                    return fail(out, &e);
                }
                out.stdout.clear();
            }
            out
        }
        Err(e) => fail(out, &e),
    }
}

fn fail(mut out: Outcome, e: &Error) -> Outcome {
    out.code = 3;
    out.stdout.clear();
    let _ = writeln!(out.stderr, "error: {e}");
    out
}

fn check_options(q: &QueryRequest) -> Result<()> {
    use Command::*;
    let c = q.command;
    let needs_set = matches!(
        c,
        Attackers | Attacked | CheckConflictFree | CheckAdmissible | CheckStable | CheckComplete | Acceptable | Characteristic
    );
    let allows_set = needs_set || matches!(c, Enum | Export);
    let name = c.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default();
    let usage = |msg: &str| Err(Error::Usage(format!("{name}: {msg}")));
    if needs_set && q.set_regex.is_none() {
        return usage("--set is required");
    }
    if !allows_set && q.set_regex.is_some() {
        return usage("--set is not accepted");
    }
    if (c == Acceptable) != q.arg_word.is_some() {
        return usage(if c == Acceptable { "--arg is required" } else { "--arg is not accepted" });
    }
    if (c == SemidecideCredNone) != q.args.is_some() {
        return usage(if c == SemidecideCredNone { "--args is required" } else { "--args is not accepted" });
    }
    if q.max_len.is_some() && !matches!(c, Enum | Finitary) {
        return usage("--max-len is not accepted");
    }
    if q.max_count.is_some() && c != Enum {
        return usage("--max-count is not accepted");
    }
    let set_output = matches!(c, Attackers | Attacked | Characteristic | Grounded | Export | Enum);
    if q.format.is_some() && !set_output {
        return usage("--format is not accepted");
    }
    Ok(())
}

fn set_of(spec: &AfSpec, q: &QueryRequest) -> Result<ArgSet> {
    match &q.set_regex {
        Some(r) => spec.set_from_regex(r),
        None => Ok(spec.arguments()),
    }
}

fn exit_bool(out: &mut Outcome, b: bool) -> i32 {
    out.stdout.push_str(if b { "true\n" } else { "false\n" });
    i32::from(!b)
}

fn preview(spec: &AfSpec, s: &ArgSet) -> String {
    let mut words: Vec<String> = s.words().take(PREVIEW_WORDS + 1).map(|w| spec.render_word(&w)).collect();
    if words.len() > PREVIEW_WORDS {
        words.truncate(PREVIEW_WORDS);
        words.push("…".into());
    }
    if words.is_empty() {
        "∅".into()
    } else {
        words.join(", ")
    }
}

/// Writes a set in the requested format, with a word preview on stderr.
fn emit_set(out: &mut Outcome, spec: &AfSpec, s: &ArgSet, format: OutputFormat) {
    match format {
        OutputFormat::Json => {
            out.stdout.push_str(&s.to_json());
            out.stdout.push('\n');
        }
        OutputFormat::Dot => out.stdout.push_str(&s.to_dot()),
        OutputFormat::Words => {
            let mut words = s.words();
            for w in words.by_ref().take(PREVIEW_WORDS) {
                let _ = writeln!(out.stdout, "{}", spec.render_word(&w));
            }
            if words.next().is_some() {
                out.stdout.push_str("…\n");
            }
            return;
        }
    }
    let _ = writeln!(out.stderr, "words: {}", preview(spec, s));
}

fn emit_semi(out: &mut Outcome, r: &SemiDecisionResult) -> i32 {
    let status = match r.status {
        SemiStatus::Proven => "proven",
        SemiStatus::Unknown => "unknown",
    };
    let json = serde_json::json!({
        "status": status,
        "witness_k": r.witness_k,
        "clauses": r.clauses,
        "variables": r.variables,
    });
    let _ = writeln!(out.stdout, "{json}");
    match r.status {
        SemiStatus::Proven => 0,
        SemiStatus::Unknown => 2,
    }
}

fn finitary_name(f: FinitaryStatus) -> &'static str {
    match f {
        FinitaryStatus::Guaranteed => "guaranteed",
        FinitaryStatus::Unknown => "unknown",
    }
}

fn dispatch(q: &QueryRequest, out: &mut Outcome) -> Result<i32> {
    use Command::*;
    match q.command {
        ImportApx => {
            let spec = import_apx(&q.path)?;
            report_warnings(out, &spec);
            out.stdout.push_str(&render_afs(&spec));
            return Ok(0);
        }
        Combine => {
            let spec = load_combination(&q.path)?;
            report_warnings(out, &spec);
            out.stdout.push_str(&render_afs(&spec));
            return Ok(0);
        }
        Validate => {
            return match load_spec(&q.path) {
                Ok(spec) => {
                    report_warnings(out, &spec);
                    out.stdout.push_str("valid\n");
                    Ok(0)
                }
                Err(Error::InvalidSpec(issues)) => {
                    for i in issues {
                        let _ = writeln!(out.stdout, "invalid: {i}");
                    }
                    Ok(1)
                }
                Err(e) => Err(e),
            };
        }
        _ => {}
    }

    let spec = load_spec(&q.path)?;
    let format = q.format.unwrap_or(OutputFormat::Json);
    let code = match q.command {
        Attackers | Attacked | Characteristic => {
            let s = set_of(&spec, q)?;
            let r = match q.command {
                Attackers => spec.attackers(&s)?,
                Attacked => spec.attacked(&s)?,
                _ => characteristic(&spec, &s)?,
            };
            emit_set(out, &spec, &r, format);
            0
        }
        CheckConflictFree => exit_bool(out, is_conflict_free(&spec, &set_of(&spec, q)?)?),
        CheckAdmissible => exit_bool(out, is_admissible(&spec, &set_of(&spec, q)?)?),
        CheckStable => exit_bool(out, is_stable(&spec, &set_of(&spec, q)?)?),
        CheckComplete => exit_bool(out, is_complete(&spec, &set_of(&spec, q)?)?),
        Acceptable => {
            let x = spec.parse_word(q.arg_word.as_deref().unwrap_or_default())?;
            exit_bool(out, is_acceptable(&spec, &x, &set_of(&spec, q)?)?)
        }
        Grounded => {
            let g = grounded(&spec, q.max_iter)?;
            let status = match g.status {
                GroundedStatus::Completed => "completed",
                GroundedStatus::Exhausted => "exhausted",
            };
            let _ = writeln!(
                out.stderr,
                "status: {status}, iterations: {}, finitary: {}",
                g.iterations,
                finitary_name(g.finitary)
            );
            emit_set(out, &spec, &g.extension, format);
            match g.status {
                GroundedStatus::Completed => 0,
                GroundedStatus::Exhausted => 2,
            }
        }
        SemidecideStableEmpty => emit_semi(out, &stable_empty_semidecide(&spec, q.budget)?),
        SemidecideCredNone => {
            let r = q
                .args
                .iter()
                .flatten()
                .map(|w| spec.parse_word(w.trim()))
                .collect::<Result<Vec<Word>>>()?;
            emit_semi(out, &no_credulous_admissible(&spec, &r, q.budget)?)
        }
        Finitary => finitary(out, &spec, q.max_len)?,
        Enum => {
            let s = set_of(&spec, q)?;
            let count = q.max_count.unwrap_or(if q.max_len.is_some() { usize::MAX } else { PREVIEW_WORDS });
            let words = s.enumerate_words(count, q.max_len.unwrap_or(usize::MAX));
            match q.format.unwrap_or(OutputFormat::Words) {
                OutputFormat::Words => {
                    for w in &words {
                        let _ = writeln!(out.stdout, "{}", spec.render_word(w));
                    }
                }
                OutputFormat::Json => {
                    let rendered: Vec<String> = words.iter().map(|w| spec.render_word(w)).collect();
                    let _ = writeln!(out.stdout, "{}", serde_json::Value::from(rendered));
                }
                OutputFormat::Dot => return Err(Error::Usage("enum: --format dot is not accepted".into())),
            }
            0
        }
        Export => {
            emit_set(out, &spec, &set_of(&spec, q)?, format);
            0
        }
        Validate | ImportApx | Combine => unreachable!("handled above"),
    };
    Ok(code)
}

fn report_warnings(out: &mut Outcome, spec: &AfSpec) {
    for w in spec.warnings() {
        let _ = writeln!(out.stderr, "warning: {w}");
    }
}

/// Syntactic status, plus per-word evidence for arguments up to `max_len`.
fn finitary(out: &mut Outcome, spec: &AfSpec, max_len: Option<usize>) -> Result<i32> {
    let status = finitary_syntactic(spec);
    let _ = writeln!(out.stdout, "syntactic: {}", finitary_name(status));
    if let Some(len) = max_len {
        let mut checked = 0usize;
        for w in spec.arguments().words().take_while(|w| w.len() <= len) {
            match attackers_of_word(spec, &w, DEFAULT_ATTACKER_CAP)? {
                WordAttackers::Finite(_) => checked += 1,
                WordAttackers::NonFinitaryAt(w) => {
                    let _ = writeln!(out.stdout, "infinitely many attackers: {}", spec.render_word(&w));
                    return Ok(1);
                }
                WordAttackers::CapExceeded { word, cap } => {
                    return Err(Error::CapExceeded {
                        word: spec.render_word(&word),
                        cap,
                    })
                }
            }
        }
        let _ = writeln!(out.stdout, "finite attackers: {checked} arguments up to length {len}");
    }
    Ok(match status {
        FinitaryStatus::Guaranteed => 0,
        FinitaryStatus::Unknown => 2,
    })
}

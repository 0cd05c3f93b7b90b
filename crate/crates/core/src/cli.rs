//! Command line front end. [`run`] is pure: it takes the arguments and the
//! standard input and returns the exit code with both output streams.

use std::io::Read;

use clap::{Args, Parser, Subcommand};

use crate::calculus::check;
use crate::congruence::{equiv, equiv_oracle};
use crate::error::{Error, Result};
use crate::focused::{check_focused, emb, focus, FocusedDerivation};
use crate::formula::{parse_sequent, Sequent};
use crate::json::{derivation_from_node, focused_from_node, Document};
use crate::profiles::LogicProfile;
use crate::search::{
    canonicalize_exchange, count_classes, count_classes_oracle, derive, enumerate_focused, enumerate_unfocused,
    SearchBudget,
};

#[derive(Debug, Parser)]
#[command(name = "skewprove", version, about = "Proof search and coherence for skew multiplicative-additive logic")]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Opts {
    /// base, units, exchange, implication, or a `+`-joined combination
    #[arg(long, global = true)]
    profile: Option<String>,
    /// Reject sequents with more connectives
    #[arg(long, global = true, default_value_t = 8)]
    max_connectives: usize,
    /// Bound on search steps
    #[arg(long, global = true)]
    node_cap: Option<usize>,
    /// Compact JSON, one document per line
    #[arg(long, global = true, conflicts_with = "pretty")]
    json: bool,
    /// Indented JSON
    #[arg(long, global = true)]
    pretty: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Search for a focused derivation of a sequent
    Prove {
        #[arg(allow_hyphen_values = true)]
        sequent: String,
    },
    /// Print the focused normal form of a derivation file (`-` for stdin)
    Normalize { file: String },
    /// Decide whether two derivation files are equal up to the congruence
    Equiv { left: String, right: String },
    /// List all focused derivations, one per congruence class
    Enumerate {
        #[arg(allow_hyphen_values = true)]
        sequent: String,
        /// List unfocused derivations instead
        #[arg(long)]
        unfocused: bool,
    },
    /// Count congruence classes of derivations
    Count {
        #[arg(allow_hyphen_values = true)]
        sequent: String,
        /// Quotient unfocused derivations by the generating equations instead
        #[arg(long)]
        oracle: bool,
    },
    /// Validate a derivation file
    Check { file: String },
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn negative(stdout: &str) -> Self {
        Outcome {
            code: 1,
            stdout: format!("{stdout}\n"),
            stderr: String::new(),
        }
    }

    fn error(msg: String) -> Self {
        Outcome {
            code: 2,
            stdout: String::new(),
            stderr: msg,
        }
    }
}

/// Runs one invocation. `args` starts with the program name.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome::error(text),
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(o) => o,
        Err(e) => Outcome::error(format!("error: {e}\n")),
    }
}

struct Ctx<'a> {
    opts: &'a Opts,
    budget: SearchBudget,
}

impl Ctx<'_> {
    fn profile(&self, from_doc: Option<&str>) -> Result<LogicProfile> {
        match (&self.opts.profile, from_doc) {
            (Some(p), _) => p.parse(),
            (None, Some(p)) => p.parse(),
            (None, None) => Ok(LogicProfile::BASE),
        }
    }

    fn render(&self, doc: &Document, default_pretty: bool) -> String {
        let pretty = self.opts.pretty || (default_pretty && !self.opts.json);
        let mut s = if pretty { doc.to_pretty() } else { doc.to_compact() };
        s.push('\n');
        s
    }
}

enum Loaded {
    Unfocused(crate::calculus::Derivation),
    Focused(FocusedDerivation),
}

fn read_doc(path: &str, stdin: &mut dyn Read) -> Result<Document> {
    let text = if path == "-" {
        let mut buf = String::new();
        stdin
            .read_to_string(&mut buf)
            .map_err(|e| Error::Json(format!("reading stdin: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path).map_err(|e| Error::Json(format!("reading {path}: {e}")))?
    };
    Document::parse(&text)
}

/// Parses and checks a derivation file.
fn load(ctx: &Ctx, path: &str, stdin: &mut dyn Read) -> Result<(Sequent, LogicProfile, Loaded)> {
    let doc = read_doc(path, stdin)?;
    let profile = ctx.profile(doc.profile.as_deref())?;
    let s = parse_sequent(&doc.sequent, profile)?;
    let loaded = match (&doc.derivation, &doc.focused) {
        (Some(n), None) => {
            let d = derivation_from_node(n)?;
            check(&d, &s, profile)?;
            Loaded::Unfocused(d)
        }
        (None, Some(n)) => {
            let d = focused_from_node(n)?;
            check_focused(&d, &s, profile)?;
            Loaded::Focused(d)
        }
        _ => {
            return Err(Error::Json(
                "a derivation file holds exactly one of \"derivation\" and \"focused\"".into(),
            ))
        }
    };
    Ok((s, profile, loaded))
}

fn unfocused(s: &Sequent, profile: LogicProfile, l: Loaded) -> crate::calculus::Derivation {
    match l {
        Loaded::Unfocused(d) => d,
        Loaded::Focused(f) => emb(&f, s, profile),
    }
}

/// Under exchange, the focused derivation in the class of `d`, falling back
/// to the least permutation when none of them is oracle-equivalent.
fn normal_form(
    s: &Sequent,
    profile: LogicProfile,
    d: &crate::calculus::Derivation,
    budget: &SearchBudget,
) -> Result<FocusedDerivation> {
    if !profile.exchange() {
        return focus(d, s, profile);
    }
    let unbounded = SearchBudget {
        max_connectives: usize::MAX,
        ..*budget
    };
    for f in enumerate_focused(s, profile, &unbounded)? {
        if equiv_oracle(&emb(&f, s, profile), d, s, profile)? {
            return Ok(f);
        }
    }
    canonicalize_exchange(s, d, profile)
}

fn execute(cli: &Cli, stdin: &mut dyn Read) -> Result<Outcome> {
    let mut budget = SearchBudget {
        max_connectives: cli.opts.max_connectives,
        ..SearchBudget::default()
    };
    if let Some(n) = cli.opts.node_cap {
        budget.node_cap = n;
    }
    let ctx = Ctx {
        opts: &cli.opts,
        budget,
    };
    match &cli.command {
        Command::Prove { sequent } => {
            let profile = ctx.profile(None)?;
            let s = parse_sequent(sequent, profile)?;
            match derive(&s, profile, &ctx.budget)? {
                Some(d) => Ok(Outcome::ok(ctx.render(&Document::focused(&s, profile, &d), true))),
                None => Ok(Outcome::negative("NOT DERIVABLE")),
            }
        }
        Command::Normalize { file } => {
            let (s, profile, l) = load(&ctx, file, stdin)?;
            let d = unfocused(&s, profile, l);
            let f = normal_form(&s, profile, &d, &ctx.budget)?;
            Ok(Outcome::ok(ctx.render(&Document::focused(&s, profile, &f), true)))
        }
        Command::Equiv { left, right } => {
            let (s1, p1, l1) = load(&ctx, left, stdin)?;
            let (s2, p2, l2) = load(&ctx, right, stdin)?;
            if s1 != s2 || p1 != p2 {
                return Err(Error::Json(format!(
                    "files prove different sequents: {s1} ({p1}) and {s2} ({p2})"
                )));
            }
            let (f, g) = (unfocused(&s1, p1, l1), unfocused(&s1, p1, l2));
            let same = if p1.exchange() {
                equiv_oracle(&f, &g, &s1, p1)?
            } else {
                equiv(&f, &g, &s1, p1)?
            };
            Ok(if same {
                Outcome::ok("EQUIVALENT\n".into())
            } else {
                Outcome::negative("DISTINCT")
            })
        }
        Command::Enumerate { sequent, unfocused } => {
            let profile = ctx.profile(None)?;
            let s = parse_sequent(sequent, profile)?;
            let mut out = String::new();
            if *unfocused {
                for d in enumerate_unfocused(&s, profile, &ctx.budget)? {
                    out.push_str(&ctx.render(&Document::unfocused(&s, profile, &d), false));
                }
            } else {
                for d in enumerate_focused(&s, profile, &ctx.budget)? {
                    out.push_str(&ctx.render(&Document::focused(&s, profile, &d), false));
                }
            }
            Ok(Outcome::ok(out))
        }
        Command::Count { sequent, oracle } => {
            let profile = ctx.profile(None)?;
            let s = parse_sequent(sequent, profile)?;
            let n = if *oracle {
                count_classes_oracle(&s, profile, &ctx.budget)?
            } else {
                count_classes(&s, profile, &ctx.budget)?
            };
            Ok(Outcome::ok(format!("{n}\n")))
        }
        Command::Check { file } => {
            let (s, profile, l) = load(&ctx, file, stdin)?;
            let kind = match l {
                Loaded::Unfocused(_) => "derivation",
                Loaded::Focused(_) => "focused derivation",
            };
            Ok(Outcome::ok(format!("OK: {kind} of {s} ({profile})\n")))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn go(args: &[&str]) -> Outcome {
        let mut argv = vec!["skewprove"];
        argv.extend_from_slice(args);
        run(argv, &mut std::io::empty())
    }

    #[test]
    fn prove_and_refute() {
        let o = go(&["prove", "X /\\ Y | . |- (X /\\ Y) \\/ Z"]);
        assert_eq!(o.code, 0, "{}", o.stderr);
        assert!(o.stdout.contains("\"C1\""));
        let o = go(&["prove", "X /\\ Y | Y \\/ X |- (X * Y) \\/ (Y * X)"]);
        assert_eq!((o.code, o.stdout.as_str()), (1, "NOT DERIVABLE\n"));
    }

    #[test]
    fn count_and_errors() {
        assert_eq!(go(&["count", "I | . |- I"]).stdout, "1\n");
        assert_eq!(go(&["count", "--oracle", "X /\\ Y | . |- X \\/ Y"]).stdout, "2\n");
        assert_eq!(go(&["prove", "X | . |-"]).code, 2);
        assert_eq!(go(&["prove", "--profile", "linear", "X | . |- X"]).code, 2);
        assert_eq!(go(&["prove", "- | . |- Top"]).code, 2);
        assert_eq!(go(&["--profile", "units", "prove", "- | . |- Top"]).code, 0);
        assert_eq!(go(&["frobnicate"]).code, 2);
    }

    #[test]
    fn normalize_from_stdin_is_idempotent() {
        let input = r#"{"sequent": "- | X, Y |- X * Y",
            "derivation": {"rule": "otimesR", "args": {"split": 1}, "premises": [
                {"rule": "pass", "premises": [{"rule": "ax"}]},
                {"rule": "pass", "premises": [{"rule": "ax"}]}]}}"#;
        let o = run(["skewprove", "normalize", "-"], &mut input.as_bytes());
        assert_eq!(o.code, 0, "{}", o.stderr);
        let again = run(["skewprove", "normalize", "-"], &mut o.stdout.as_bytes());
        assert_eq!(again.stdout, o.stdout);
        let checked = run(["skewprove", "check", "-"], &mut o.stdout.as_bytes());
        assert_eq!(checked.code, 0, "{}", checked.stderr);
    }

    #[test]
    fn normalize_under_exchange_keeps_the_class() {
        let swap = r#"{"sequent": "- | X, X |- X * X", "profile": "exchange",
            "derivation": {"rule": "ex", "args": {"pos": 0}, "premises": [
                {"rule": "otimesR", "args": {"split": 1}, "premises": [
                    {"rule": "pass", "premises": [{"rule": "ax"}]},
                    {"rule": "pass", "premises": [{"rule": "ax"}]}]}]}}"#;
        let plain = r#"{"sequent": "- | X, X |- X * X", "profile": "exchange",
            "derivation": {"rule": "otimesR", "args": {"split": 1}, "premises": [
                {"rule": "pass", "premises": [{"rule": "ax"}]},
                {"rule": "pass", "premises": [{"rule": "ax"}]}]}}"#;
        let a = run(["skewprove", "normalize", "-"], &mut swap.as_bytes());
        let b = run(["skewprove", "normalize", "-"], &mut plain.as_bytes());
        assert_eq!((a.code, b.code), (0, 0), "{} {}", a.stderr, b.stderr);
        assert_ne!(a.stdout, b.stdout);
    }
}

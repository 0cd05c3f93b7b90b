//! Acceptance suite. Prints one PASS or FAIL line per criterion, with a
//! breakdown per profile, and exits nonzero on any failure that is not in
//! the table of known defects below. Corpus bounds and tolerances are
//! fixed in this file.

use std::collections::{BTreeMap, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use skew_core::calculus::{check, scut, Derivation as D};
use skew_core::cli;
use skew_core::congruence::{applicable, normalize_rw, rewrite_once, EquivClasses};
use skew_core::corpus::sequents;
use skew_core::focused::{check_focused, emb, focus};
use skew_core::search::{count_classes, derive, enumerate_focused, SearchBudget};
use skew_core::{parse_sequent, Formula, LogicProfile, Sequent};

const ATOMS: [&str; 2] = ["X", "Y"];
/// Every base sequent up to this many connectives is checked.
const FULL_CONNECTIVES: usize = 3;
/// Base sequents with one more connective are checked when their index
/// in generation order is a multiple of this stride.
const SAMPLE_STRIDE: usize = 40;
const MAX_CONTEXT: usize = 2;
/// Bounds for the extension profiles, whose formula sets grow faster.
const RICH_CONNECTIVES: usize = 3;
const RICH_CONTEXT: usize = 1;
/// Steps allowed per rewrite normalization.
const RW_STEP_CAP: usize = 10_000;
/// Failures tolerated per criterion and profile outside the known defects.
const TOLERANCE: usize = 0;
/// Failure messages printed per kind.
const SHOWN: usize = 2;

/// Checks expected to fail: criterion, profiles, kind, and a sequent of
/// the first listed profile that witnesses the defect. A witness that
/// stops failing is reported but is not an error.
const KNOWN: [(usize, &[&str], &str, &str); 5] = [
    (
        1,
        &["units", "units+implication"],
        "equivalent derivations focus apart",
        "X /\\ X | . |- X \\/ Top",
    ),
    (
        2,
        &["units", "units+implication"],
        "count mismatch",
        "X /\\ X | . |- X \\/ Top",
    ),
    (2, &["exchange"], "count mismatch", "- | X, Y |- X * Y /\\ Y * X"),
    (
        5,
        &["base", "units", "implication", "units+implication"],
        "fixpoints differ",
        "X /\\ X | . |- X \\/ X /\\ X",
    ),
    (
        5,
        &["units", "units+implication"],
        "focus changes",
        "X /\\ X | . |- X \\/ Top",
    ),
];

fn known(criterion: usize, profile: &str, kind: &str) -> bool {
    KNOWN
        .iter()
        .any(|(c, ps, k, _)| *c == criterion && *k == kind && ps.contains(&profile))
}

/// Failures of one criterion, grouped by profile and kind.
#[derive(Default)]
struct Report {
    checked: BTreeMap<String, usize>,
    failed: BTreeMap<(String, String), Vec<String>>,
    unexpected: usize,
}

impl Report {
    fn expect(&mut self, criterion: usize, p: LogicProfile, ok: bool, kind: &str, what: impl FnOnce() -> String) {
        *self.checked.entry(p.to_string()).or_default() += 1;
        if ok {
            return;
        }
        if !known(criterion, &p.to_string(), kind) {
            self.unexpected += 1;
        }
        let v = self.failed.entry((p.to_string(), kind.to_string())).or_default();
        if v.len() < SHOWN {
            v.push(what());
        }
        v.push(String::new());
    }

    fn line(&self, n: usize, name: &str) -> bool {
        let total: usize = self.failed.values().map(|v| v.iter().filter(|s| s.is_empty()).count()).sum();
        let pass = total.saturating_sub(TOLERANCE) == 0;
        let cells: Vec<String> = self
            .checked
            .iter()
            .map(|(p, c)| {
                let f: usize = self
                    .failed
                    .iter()
                    .filter(|((q, _), _)| q == p)
                    .map(|(_, v)| v.iter().filter(|s| s.is_empty()).count())
                    .sum();
                format!("{p} {f}/{c}")
            })
            .collect();
        println!(
            "{} criterion {n}: {name} [failures/checks: {}]",
            if pass { "PASS" } else { "FAIL" },
            cells.join(", ")
        );
        for ((p, kind), v) in &self.failed {
            let count = v.iter().filter(|s| s.is_empty()).count();
            let tag = if known(n, p, kind) {
                "known"
            } else {
                "UNEXPECTED"
            };
            println!("    {tag} [{p}] {kind}: {count}");
            for s in v.iter().filter(|s| !s.is_empty()) {
                println!("        {s}");
            }
        }
        self.unexpected.saturating_sub(TOLERANCE) == 0
    }
}

fn budget() -> SearchBudget {
    SearchBudget::default()
}

fn corpus(profile: LogicProfile) -> Vec<Sequent> {
    if profile == LogicProfile::BASE {
        let mut v = sequents(&ATOMS, FULL_CONNECTIVES, MAX_CONTEXT, profile);
        let more = sequents(&ATOMS, FULL_CONNECTIVES + 1, MAX_CONTEXT, profile);
        v.extend(
            more.into_iter()
                .filter(|s| s.size() == FULL_CONNECTIVES + 1)
                .step_by(SAMPLE_STRIDE),
        );
        v
    } else if profile.exchange() {
        // exchange needs two context formulas to do anything
        sequents(&ATOMS, RICH_CONNECTIVES, MAX_CONTEXT, profile)
    } else {
        sequents(&ATOMS, RICH_CONNECTIVES, RICH_CONTEXT, profile)
    }
}

/// A derivable sequent with its unfocused derivations grouped by the oracle.
struct Entry {
    s: Sequent,
    classes: EquivClasses,
}

fn family(profile: LogicProfile) -> Vec<Entry> {
    corpus(profile)
        .into_iter()
        .filter(|s| derive(s, profile, &budget()).unwrap().is_some())
        .map(|s| Entry {
            classes: EquivClasses::build(&s, profile, &budget()).unwrap(),
            s,
        })
        .collect()
}

const FOCUSING_PROFILES: [LogicProfile; 4] = [
    LogicProfile::BASE,
    LogicProfile::UNITS,
    LogicProfile::IMPLICATION,
    LogicProfile::UNITS_IMPLICATION,
];

type Families = [(LogicProfile, Vec<Entry>)];

fn bijection(fams: &Families) -> Report {
    let mut r = Report::default();
    for (p, fam) in fams {
        let p = *p;
        for Entry { s, classes } in fam {
            for d in enumerate_focused(s, p, &budget()).unwrap() {
                let ok = check_focused(&d, s, p).is_ok() && focus(&emb(&d, s, p), s, p).as_ref() == Ok(&d);
                r.expect(1, p, ok, "focus(emb d) differs from d", || format!("{s}: {d}"));
            }
            let mut class_focus = HashMap::new();
            for f in classes.members() {
                let nf = match focus(f, s, p) {
                    Ok(nf) => nf,
                    Err(e) => {
                        r.expect(1, p, false, "focus fails", || format!("{s}: {f}: {e}"));
                        continue;
                    }
                };
                let back = emb(&nf, s, p);
                let ok = check(&back, s, p).is_ok() && classes.class_of(&back) == classes.class_of(f);
                r.expect(1, p, ok, "emb(focus f) not equivalent to f", || format!("{s}: {f}"));
                let k = classes.class_of(f).expect("member");
                match class_focus.get(&k) {
                    None => {
                        class_focus.insert(k, nf);
                    }
                    Some(g) => {
                        let ok = *g == nf;
                        r.expect(1, p, ok, "equivalent derivations focus apart", || format!("{s}: {f}"))
                    }
                }
            }
        }
    }
    r
}

fn canonicity(fams: &Families, exchange: &[Entry]) -> Report {
    let mut r = Report::default();
    for (p, fam) in fams.iter().chain(std::iter::once(&(LogicProfile::EXCHANGE, Vec::new()))) {
        let fam = if p.exchange() { exchange } else { fam };
        for Entry { s, classes } in fam {
            let n = count_classes(s, *p, &budget()).unwrap();
            r.expect(2, *p, n == classes.count(), "count mismatch", || {
                format!("{s}: {n} focused, {} classes", classes.count())
            });
        }
    }
    let b = LogicProfile::BASE;
    for (text, want) in [
        ("- | X, Y |- X * Y", 1),
        ("X /\\ Y | . |- X \\/ Y", 2),
        ("I | . |- I", 1),
    ] {
        let s = parse_sequent(text, b).unwrap();
        let focused = count_classes(&s, b, &budget()).unwrap();
        let oracle = EquivClasses::build(&s, b, &budget()).unwrap().count();
        r.expect(2, b, focused == want && oracle == want, "spot value", || {
            format!("{text}: focused {focused}, oracle {oracle}, want {want}")
        });
    }
    r
}

fn run_cli(args: &[&str]) -> cli::Outcome {
    let mut argv = vec!["skewprove"];
    argv.extend_from_slice(args);
    cli::run(argv, &mut std::io::empty())
}

fn goldens() -> Report {
    let mut r = Report::default();
    let cases = [
        (
            "and_or.json",
            LogicProfile::BASE,
            vec!["prove", "X /\\ Y | . |- (X /\\ Y) \\/ Z"],
            vec!["\"tags\": [\n                  \"C1\",\n                  \"C2\"\n                ]"],
        ),
        (
            "limp_tensor.json",
            LogicProfile::IMPLICATION,
            vec!["--profile", "implication", "prove", "I -o I | I, Y |- (I /\\ I) * Y"],
            vec![
                "\"split\": 1",
                "\"rule\": \"andR\",\n                \"phase\": \"RI\",\n                \"tags\": [\n                  {\n                    \"ctx\": []\n                  },\n                  {\n                    \"ctx\": [\n                      \"I\"\n                    ]\n                  }\n                ]",
            ],
        ),
    ];
    for (file, p, args, needles) in cases {
        let path = format!("{}/tests/golden/{file}", env!("CARGO_MANIFEST_DIR"));
        let golden = std::fs::read_to_string(&path).unwrap_or_default();
        let o = run_cli(&args);
        r.expect(3, p, o.code == 0 && o.stdout == golden, "output differs from golden", || {
            format!("{file} (exit {}): {}", o.code, o.stdout)
        });
        for n in needles {
            r.expect(3, p, golden.contains(n), "golden lacks expected fragment", || format!("{file}: {n:?}"));
        }
        let checked = cli::run(["skewprove", "check", "-"], &mut golden.as_bytes());
        r.expect(3, p, checked.code == 0, "golden fails check", || format!("{file}: {}", checked.stderr));
        let again = cli::run(["skewprove", "normalize", "-"], &mut golden.as_bytes());
        r.expect(3, p, again.stdout == golden, "normalize moves golden", || file.to_string());
    }
    r
}

fn exit_codes() -> Report {
    let mut r = Report::default();
    let b = LogicProfile::BASE;
    let cases = [
        ("X /\\ Y | Y \\/ X |- (X * Y) \\/ (Y * X)", 1),
        ("X * (Y * Z) | . |- (X * Y) * Z", 1),
        ("A | . |- I * A", 1),
        ("(X * Y) * Z | . |- X * (Y * Z)", 0),
        ("I * X | . |- X", 0),
        ("X | . |- X * I", 0),
    ];
    for (text, want) in cases {
        let o = run_cli(&["prove", text]);
        r.expect(4, b, o.code == want, "wrong exit code", || format!("prove {text}: {}, want {want}", o.code));
        let status = std::process::Command::new(env!("CARGO_BIN_EXE_skewprove"))
            .args(["prove", text])
            .output()
            .map(|o| o.status.code());
        r.expect(4, b, matches!(status, Ok(Some(c)) if c == want), "wrong binary exit code", || {
            format!("prove {text}: {status:?}, want {want}")
        });
    }
    r
}

fn rewriting(fams: &Families) -> Report {
    let mut r = Report::default();
    for (p, fam) in fams {
        let p = *p;
        for Entry { s, classes } in fam {
            for f in classes.members() {
                let Ok(nf) = normalize_rw(f, s, RW_STEP_CAP, p) else {
                    r.expect(5, p, false, "no fixpoint", || format!("{s}: {f}"));
                    continue;
                };
                let ff = focus(f, s, p).ok();
                for red in applicable(f, s, p).unwrap() {
                    let g = rewrite_once(f, s, &red.path, red.equation, red.direction, p).unwrap();
                    match normalize_rw(&g, s, RW_STEP_CAP, p) {
                        Err(_) => r.expect(5, p, false, "no fixpoint", || format!("{s}: {g}")),
                        Ok(ng) => r.expect(5, p, ng == nf, "fixpoints differ", || {
                            format!("{s}: {f} and {g} normalize to {nf} and {ng}")
                        }),
                    }
                    r.expect(5, p, focus(&g, s, p).ok() == ff, "focus changes", || {
                        format!("{s}: {:?} {:?} at {} from {f}", red.equation, red.direction, red.path)
                    });
                }
            }
        }
    }
    r
}

fn cut_laws(fams: &Families) -> Report {
    let mut r = Report::default();
    for (p, fam) in fams {
        let p = *p;
        let same = |a: &D, b: &D, s: &Sequent| focus(a, s, p).ok() == focus(b, s, p).ok();
        // small derivations by stoup formula, for composable triples
        let mut by_stoup: HashMap<&Formula, Vec<(&Sequent, &D)>> = HashMap::new();
        for Entry { s, classes } in fam {
            if let Some(a) = &s.stoup {
                if s.size() <= 2 && s.context.len() <= 1 {
                    by_stoup.entry(a).or_default().extend(classes.members().iter().map(|d| (s, d)));
                }
            }
        }
        for Entry { s, classes } in fam {
            for f in classes.members() {
                let ax = Sequent::new(Some(s.succedent.clone()), vec![], s.succedent.clone());
                let (d, ds) = scut(f, s, &D::Ax, &ax, p).unwrap();
                r.expect(6, p, ds == *s && same(&d, f, s), "scut(f, ax) differs from f", || format!("{s}: {f}"));
                if let Some(a) = &s.stoup {
                    let ax = Sequent::new(Some(a.clone()), vec![], a.clone());
                    let (d, ds) = scut(&D::Ax, &ax, f, s, p).unwrap();
                    r.expect(6, p, ds == *s && same(&d, f, s), "scut(ax, f) differs from f", || format!("{s}: {f}"));
                }
            }
        }
        for Entry { s, classes } in fam {
            if s.size() > 2 || s.context.len() > 1 {
                continue;
            }
            for f in classes.members() {
                for (gs, g) in by_stoup.get(&s.succedent).into_iter().flatten() {
                    for (hs, h) in by_stoup.get(&gs.succedent).into_iter().flatten() {
                        let (fg, fgs) = scut(f, s, g, gs, p).unwrap();
                        let (left, ls) = scut(&fg, &fgs, h, hs, p).unwrap();
                        let (gh, ghs) = scut(g, gs, h, hs, p).unwrap();
                        let (right, rs) = scut(f, s, &gh, &ghs, p).unwrap();
                        r.expect(6, p, ls == rs && same(&left, &right, &ls), "scut not associative", || {
                            format!("{f} ; {g} ; {h}")
                        });
                    }
                }
            }
        }
    }
    r
}

fn units_and_conservativity(base: &[Entry]) -> Report {
    let mut r = Report::default();
    for Entry { s, .. } in base {
        for p in LogicProfile::ALL {
            let ok = matches!(derive(s, p, &budget()), Ok(Some(_)));
            r.expect(7, p, ok, "base sequent not derivable", || s.to_string());
        }
    }
    let p = LogicProfile::UNITS;
    for s in sequents(&ATOMS, RICH_CONNECTIVES, MAX_CONTEXT, p) {
        if s.succedent == Formula::Top || s.stoup == Some(Formula::Zero) {
            let n = count_classes(&s, p, &budget()).unwrap();
            let o = EquivClasses::build(&s, p, &budget()).unwrap().count();
            r.expect(7, p, n == 1 && o == 1, "unit sequent has several classes", || {
                format!("{s}: {n} focused, {o} oracle classes")
            });
        }
    }
    r
}

/// Confirms that each known defect is still witnessed by its sequent.
fn witnesses() {
    for (c, ps, kind, text) in KNOWN {
        let profile: LogicProfile = ps[0].parse().unwrap();
        let s = parse_sequent(text, profile).unwrap();
        let classes = EquivClasses::build(&s, profile, &budget()).unwrap();
        let still = match c {
            1 | 2 => count_classes(&s, profile, &budget()).unwrap() != classes.count(),
            _ => classes.members().iter().any(|f| {
                let nf = normalize_rw(f, &s, RW_STEP_CAP, profile).unwrap();
                applicable(f, &s, profile).unwrap().iter().any(|red| {
                    let g = rewrite_once(f, &s, &red.path, red.equation, red.direction, profile).unwrap();
                    if kind == "focus changes" {
                        focus(&g, &s, profile).ok() != focus(f, &s, profile).ok()
                    } else {
                        normalize_rw(&g, &s, RW_STEP_CAP, profile).unwrap() != nf
                    }
                })
            }),
        };
        println!(
            "    known defect, criterion {c} [{}] {kind}: witness {text} {}",
            ps[0],
            if still { "still fails" } else { "NO LONGER FAILS" }
        );
    }
}

fn main() -> ExitCode {
    let t = Instant::now();
    let fams: Vec<(LogicProfile, Vec<Entry>)> = FOCUSING_PROFILES.iter().map(|&p| (p, family(p))).collect();
    for (p, f) in &fams {
        let n: usize = f.iter().map(|e| e.classes.members().len()).sum();
        println!("corpus [{p}]: {} derivable sequents, {n} derivations", f.len());
    }
    let results = [
        bijection(&fams).line(1, "focus and emb are inverse up to the congruence"),
        canonicity(&fams, &family(LogicProfile::EXCHANGE)).line(2, "focused derivations count congruence classes"),
        goldens().line(3, "golden derivations, byte-exact"),
        exit_codes().line(4, "prove exit codes"),
        rewriting(&fams).line(5, "rewriting terminates with agreeing fixpoints, focus invariant"),
        cut_laws(&fams).line(6, "cut laws up to focus"),
        units_and_conservativity(&fams[0].1).line(7, "conservativity and unit laws"),
    ];
    witnesses();
    println!("acceptance finished in {:.1?}", t.elapsed());
    if results.iter().all(|&ok| ok) {
        ExitCode::SUCCESS
    } else {
        println!("unexpected failures present");
        ExitCode::FAILURE
    }
}

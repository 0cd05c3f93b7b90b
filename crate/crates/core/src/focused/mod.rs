//! The focused calculus with tag annotations: derivations in normal form.
//!
//! A focused derivation is a tree of [`FRule`] nodes. The phase of a node
//! is a function of its rule. Each node optionally carries the tag list of
//! its conclusion; `None` marks an untagged sequent.

mod focus;

use std::fmt;

pub use focus::{focus, invert_ri};

use crate::calculus::Derivation as D;
use crate::error::{Error, Path, Result};
use crate::formula::{is_irreducible_stoup, is_negative, Formula, Sequent, Stoup};
use crate::profiles::LogicProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Phase {
    C,
    RI,
    LI,
    F,
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Phase::C => "C",
            Phase::RI => "RI",
            Phase::LI => "LI",
            Phase::F => "F",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tag {
    P,
    C1,
    C2,
    R,
    T,
    /// Left context given to the first premise of ⊸L.
    Ctx(Vec<Formula>),
    Bullet,
}

impl fmt::Display for Tag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tag::P => f.write_str("P"),
            Tag::C1 => f.write_str("C1"),
            Tag::C2 => f.write_str("C2"),
            Tag::R => f.write_str("R"),
            Tag::T => f.write_str("T"),
            Tag::Bullet => f.write_str("bullet"),
            Tag::Ctx(g) => {
                let items: Vec<String> = g.iter().map(|a| a.to_string()).collect();
                write!(f, "[{}]", items.join(", "))
            }
        }
    }
}

pub type TagList = Vec<Tag>;

pub fn valid_tags(l: &[Tag], profile: LogicProfile) -> bool {
    if l.is_empty() {
        return false;
    }
    if l.contains(&Tag::R) || (l.contains(&Tag::C1) && l.contains(&Tag::C2)) {
        return true;
    }
    if profile.units() && l.contains(&Tag::T) {
        return true;
    }
    if profile.implication() {
        if l.contains(&Tag::Bullet) {
            return true;
        }
        let mut ctxs = l.iter().filter(|t| matches!(t, Tag::Ctx(_)));
        if let Some(first) = ctxs.next() {
            if ctxs.any(|t| t != first) {
                return true;
            }
        }
    }
    false
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FRule {
    /// Inserts the last pending formula at `pos` in the placed part.
    Ex { pos: usize },
    RI2C,
    AndR,
    LimpR,
    TopR,
    LI2RI,
    IL,
    TensorL,
    OrL,
    BotL,
    F2LI,
    Pass,
    Ax,
    IR,
    AndL1,
    AndL2,
    TensorR { split: usize },
    OrR1,
    OrR2,
    LimpL { split: usize },
}

impl FRule {
    pub fn phase(self) -> Phase {
        use FRule::*;
        match self {
            Ex { .. } | RI2C => Phase::C,
            AndR | LimpR | TopR | LI2RI => Phase::RI,
            IL | TensorL | OrL | BotL | F2LI => Phase::LI,
            Pass | Ax | IR | AndL1 | AndL2 | TensorR { .. } | OrR1 | OrR2 | LimpL { .. } => {
                Phase::F
            }
        }
    }

    pub fn label(self) -> &'static str {
        use FRule::*;
        match self {
            Ex { .. } => "ex",
            RI2C => "RI2C",
            AndR => "andR",
            LimpR => "limpR",
            TopR => "topR",
            LI2RI => "LI2RI",
            IL => "IL",
            TensorL => "otimesL",
            OrL => "orL",
            BotL => "botL",
            F2LI => "F2LI",
            Pass => "pass",
            Ax => "ax",
            IR => "IR",
            AndL1 => "andL1",
            AndL2 => "andL2",
            TensorR { .. } => "otimesR",
            OrR1 => "orR1",
            OrR2 => "orR2",
            LimpL { .. } => "limpL",
        }
    }

    pub fn arity(self) -> usize {
        use FRule::*;
        match self {
            TopR | BotL | Ax | IR => 0,
            AndR | OrL | TensorR { .. } | LimpL { .. } => 2,
            _ => 1,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FocusedDerivation {
    pub rule: FRule,
    pub tags: Option<TagList>,
    pub premises: Vec<FocusedDerivation>,
}

type FD = FocusedDerivation;

impl FocusedDerivation {
    pub fn new(rule: FRule, tags: Option<TagList>, premises: Vec<FD>) -> FD {
        FD {
            rule,
            tags,
            premises,
        }
    }

    pub fn leaf(rule: FRule) -> FD {
        FD::new(rule, None, vec![])
    }

    pub fn unary(rule: FRule, p: FD) -> FD {
        FD::new(rule, None, vec![p])
    }

    /// ∧R whose annotation is the concatenation of its premises'.
    pub fn and_r(l: FD, r: FD) -> FD {
        let tags = match (&l.tags, &r.tags) {
            (Some(a), Some(b)) => Some(a.iter().chain(b).cloned().collect()),
            _ => None,
        };
        FD::new(FRule::AndR, tags, vec![l, r])
    }

    pub fn limp_r(p: FD) -> FD {
        FD::new(FRule::LimpR, p.tags.clone(), vec![p])
    }

    /// `LI2RI (F2LI f)` carrying the annotation of `f`.
    pub fn lift_f(f: FD) -> FD {
        let t = f.tags.clone();
        FD::new(FRule::LI2RI, t.clone(), vec![FD::new(FRule::F2LI, t, vec![f])])
    }

    pub fn phase(&self) -> Phase {
        self.rule.phase()
    }

    pub fn size(&self) -> usize {
        1 + self.premises.iter().map(FD::size).sum::<usize>()
    }

    /// Sets the annotation of the tagged region ending in F node `self`.
    pub(crate) fn with_tag(&self, t: Tag) -> FD {
        FD::new(self.rule, Some(vec![t]), self.premises.clone())
    }
}

impl fmt::Display for FocusedDerivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.rule.label())?;
        match self.rule {
            FRule::Ex { pos } => write!(f, "[{pos}]")?,
            FRule::TensorR { split } | FRule::LimpL { split } => write!(f, "[{split}]")?,
            _ => {}
        }
        if let Some(l) = &self.tags {
            let items: Vec<String> = l.iter().map(Tag::to_string).collect();
            write!(f, "{{{}}}", items.join(","))?;
        }
        if !self.premises.is_empty() {
            write!(f, "(")?;
            for (i, p) in self.premises.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{p}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// A focused judgment. `marks` counts the trailing context formulas
/// carrying •; `pending` counts the leading formulas still to be placed
/// in phase C.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Judgment {
    pub stoup: Stoup,
    pub ctx: Vec<Formula>,
    pub marks: usize,
    pub pending: usize,
    pub succ: Formula,
}

impl Judgment {
    pub fn plain(stoup: Stoup, ctx: Vec<Formula>, succ: Formula) -> Self {
        Judgment {
            stoup,
            ctx,
            marks: 0,
            pending: 0,
            succ,
        }
    }

    pub fn root(s: &Sequent, profile: LogicProfile) -> Self {
        let mut j = Judgment::plain(s.stoup.clone(), s.context.clone(), s.succedent.clone());
        if profile.exchange() {
            j.pending = j.ctx.len();
        }
        j
    }

    pub fn unmarked(&self) -> usize {
        self.ctx.len() - self.marks
    }
}

impl fmt::Display for Judgment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.stoup {
            None => write!(f, "- | ")?,
            Some(a) => write!(f, "{a} | ")?,
        }
        let u = self.unmarked();
        let items: Vec<String> = self
            .ctx
            .iter()
            .enumerate()
            .map(|(i, a)| if i >= u { format!("{a}*") } else { a.to_string() })
            .collect();
        if items.is_empty() {
            write!(f, ".")?;
        } else {
            write!(f, "{}", items.join(", "))?;
        }
        write!(f, " |- {}", self.succ)
    }
}

/// The RI spine over `a` built from its tagged or untagged leaves.
pub(crate) fn spine_of(a: &Formula, leaves: Vec<FD>, profile: LogicProfile) -> FD {
    focus::spine(a, &mut leaves.into_iter(), profile)
}

/// Phase with which a focused derivation of `s` starts.
pub fn root_phase(profile: LogicProfile) -> Phase {
    if profile.exchange() {
        Phase::C
    } else {
        Phase::RI
    }
}

pub fn check_focused(d: &FD, s: &Sequent, profile: LogicProfile) -> Result<()> {
    s.validate(profile)?;
    let j = Judgment::root(s, profile);
    Checker { profile }.check(d, &j, root_phase(profile), false, &Path::root())
}

struct Checker {
    profile: LogicProfile,
}

impl Checker {
    fn check(&self, d: &FD, j: &Judgment, phase: Phase, tagged: bool, path: &Path) -> Result<()> {
        let fail = |msg: String| Err(Error::check(path, format!("{}: {msg} in {j}", d.rule.label())));
        if d.phase() != phase {
            return fail(format!("expected phase {phase}, found {}", d.phase()));
        }
        if d.tags.is_some() != tagged {
            return fail(if tagged {
                "missing tag annotation".into()
            } else {
                "unexpected tag annotation".into()
            });
        }
        if d.premises.len() != d.rule.arity() {
            return fail(format!("expected {} premises", d.rule.arity()));
        }
        if !tagged && j.marks > 0 {
            return fail("marked formulas in an untagged sequent".into());
        }
        if phase != Phase::C && j.pending > 0 {
            return fail("pending formulas outside phase C".into());
        }
        if matches!(phase, Phase::LI | Phase::F) && is_negative(&j.succ, self.profile) {
            return fail("negative succedent".into());
        }
        let p = self.profile;
        let tag1 = || -> Option<&Tag> { d.tags.as_ref().and_then(|l| (l.len() == 1).then(|| &l[0])) };
        let single = |t: &Tag| !tagged || tag1() == Some(t);
        let sub = |i: usize| &d.premises[i];
        use FRule::*;
        match d.rule {
            Ex { pos } => {
                if !p.exchange() {
                    return fail("exchange is not enabled".into());
                }
                if j.pending == 0 || pos > j.ctx.len() - j.pending {
                    return fail(format!("no pending formula to place at {pos}"));
                }
                let k = j.pending - 1;
                let mut ctx = j.ctx[..k].to_vec();
                let placed = &j.ctx[j.pending..];
                ctx.extend(placed[..pos].iter().cloned());
                ctx.push(j.ctx[k].clone());
                ctx.extend(placed[pos..].iter().cloned());
                let next = Judgment {
                    ctx,
                    pending: k,
                    ..j.clone()
                };
                self.check(sub(0), &next, Phase::C, false, &path.child(0))
            }
            RI2C => {
                if j.pending != 0 {
                    return fail("formulas still pending".into());
                }
                self.check(sub(0), j, Phase::RI, false, &path.child(0))
            }
            AndR => match &j.succ {
                Formula::With(a, b) => {
                    let (l, r) = (sub(0), sub(1));
                    if tagged {
                        let cat: Option<TagList> = match (&l.tags, &r.tags) {
                            (Some(x), Some(y)) => Some(x.iter().chain(y).cloned().collect()),
                            _ => None,
                        };
                        if cat != d.tags {
                            return fail("annotation is not the concatenation of the premises'".into());
                        }
                    }
                    let mut ja = j.clone();
                    ja.succ = (**a).clone();
                    let mut jb = j.clone();
                    jb.succ = (**b).clone();
                    self.check(l, &ja, Phase::RI, tagged, &path.child(0))?;
                    self.check(r, &jb, Phase::RI, tagged, &path.child(1))
                }
                _ => fail("succedent is not a conjunction".into()),
            },
            LimpR => match &j.succ {
                Formula::Limp(a, b) if p.implication() => {
                    if sub(0).tags != d.tags {
                        return fail("annotation differs from the premise's".into());
                    }
                    let mut n = j.clone();
                    n.ctx.push((**a).clone());
                    if tagged {
                        n.marks += 1;
                    }
                    n.succ = (**b).clone();
                    self.check(sub(0), &n, Phase::RI, tagged, &path.child(0))
                }
                _ => fail("succedent is not an implication".into()),
            },
            TopR => {
                if !(p.units() && j.succ == Formula::Top) {
                    return fail("succedent is not ⊤".into());
                }
                if !single(&Tag::T) {
                    return fail("annotation must be [T]".into());
                }
                Ok(())
            }
            LI2RI => {
                if is_negative(&j.succ, p) {
                    return fail("negative succedent".into());
                }
                if tagged && tag1().is_none() {
                    return fail("annotation must be a single tag".into());
                }
                if sub(0).tags != d.tags {
                    return fail("annotation differs from the premise's".into());
                }
                self.check(sub(0), j, Phase::LI, tagged, &path.child(0))
            }
            IL | TensorL | OrL | BotL if tagged => fail("left invertible rules are untagged".into()),
            IL => match &j.stoup {
                Some(Formula::Unit) => {
                    let n = Judgment::plain(None, j.ctx.clone(), j.succ.clone());
                    self.check(sub(0), &n, Phase::LI, false, &path.child(0))
                }
                _ => fail("stoup is not I".into()),
            },
            TensorL => match &j.stoup {
                Some(Formula::Tensor(a, b)) => {
                    let mut ctx = vec![(**b).clone()];
                    ctx.extend(j.ctx.iter().cloned());
                    let mut n = Judgment::plain(Some((**a).clone()), ctx, j.succ.clone());
                    let ph = if p.exchange() {
                        n.pending = 1;
                        Phase::C
                    } else {
                        Phase::LI
                    };
                    self.check(sub(0), &n, ph, false, &path.child(0))
                }
                _ => fail("stoup is not a tensor".into()),
            },
            OrL => match &j.stoup {
                Some(Formula::Plus(a, b)) => {
                    let na = Judgment::plain(Some((**a).clone()), j.ctx.clone(), j.succ.clone());
                    let nb = Judgment::plain(Some((**b).clone()), j.ctx.clone(), j.succ.clone());
                    self.check(sub(0), &na, Phase::LI, false, &path.child(0))?;
                    self.check(sub(1), &nb, Phase::LI, false, &path.child(1))
                }
                _ => fail("stoup is not a disjunction".into()),
            },
            BotL => {
                if !(p.units() && j.stoup == Some(Formula::Zero)) {
                    return fail("stoup is not ⊥".into());
                }
                Ok(())
            }
            F2LI => {
                if !is_irreducible_stoup(&j.stoup, p) {
                    return fail("reducible stoup".into());
                }
                if sub(0).tags != d.tags {
                    return fail("annotation differs from the premise's".into());
                }
                self.check(sub(0), j, Phase::F, tagged, &path.child(0))
            }
            Pass => {
                if j.stoup.is_some() || j.ctx.is_empty() {
                    return fail("needs an empty stoup and a nonempty context".into());
                }
                let marked = j.marks == j.ctx.len();
                let want = if marked { Tag::Bullet } else { Tag::P };
                if !single(&want) {
                    return fail(format!("annotation must be [{want}]"));
                }
                let n = Judgment::plain(Some(j.ctx[0].clone()), j.ctx[1..].to_vec(), j.succ.clone());
                self.check(sub(0), &n, Phase::LI, false, &path.child(0))
            }
            Ax => {
                let ok = j.ctx.is_empty()
                    && matches!(&j.stoup, Some(a @ Formula::Atom(_)) if *a == j.succ);
                if !ok {
                    return fail("not an atomic axiom".into());
                }
                if !single(&Tag::R) {
                    return fail("annotation must be [R]".into());
                }
                Ok(())
            }
            IR => {
                if j.stoup.is_some() || !j.ctx.is_empty() || j.succ != Formula::Unit {
                    return fail("not - | . |- I".into());
                }
                if !single(&Tag::R) {
                    return fail("annotation must be [R]".into());
                }
                Ok(())
            }
            AndL1 | AndL2 => match &j.stoup {
                Some(Formula::With(a, b)) => {
                    let (c, want) = if d.rule == AndL1 { (a, Tag::C1) } else { (b, Tag::C2) };
                    if !single(&want) {
                        return fail(format!("annotation must be [{want}]"));
                    }
                    let n = Judgment::plain(Some((**c).clone()), j.ctx.clone(), j.succ.clone());
                    self.check(sub(0), &n, Phase::LI, false, &path.child(0))
                }
                _ => fail("stoup is not a conjunction".into()),
            },
            OrR1 | OrR2 => match &j.succ {
                Formula::Plus(a, b) => {
                    if !single(&Tag::R) {
                        return fail("annotation must be [R]".into());
                    }
                    let c = if d.rule == OrR1 { a } else { b };
                    let n = Judgment::plain(j.stoup.clone(), j.ctx.clone(), (**c).clone());
                    self.tagged_premise(sub(0), &n, &path.child(0))
                }
                _ => fail("succedent is not a disjunction".into()),
            },
            TensorR { split } => match &j.succ {
                Formula::Tensor(a, b) => {
                    if split > j.ctx.len() {
                        return fail(format!("split {split} exceeds the context"));
                    }
                    if !single(&Tag::R) {
                        return fail("annotation must be [R]".into());
                    }
                    let l = Judgment::plain(j.stoup.clone(), j.ctx[..split].to_vec(), (**a).clone());
                    let r = Judgment::plain(None, j.ctx[split..].to_vec(), (**b).clone());
                    self.tagged_premise(sub(0), &l, &path.child(0))?;
                    self.check(sub(1), &r, Phase::RI, false, &path.child(1))
                }
                _ => fail("succedent is not a tensor".into()),
            },
            LimpL { split } => match &j.stoup {
                Some(Formula::Limp(a, b)) if p.implication() => {
                    if split > j.ctx.len() {
                        return fail(format!("split {split} exceeds the context"));
                    }
                    let want = if split <= j.unmarked() {
                        Tag::Ctx(j.ctx[..split].to_vec())
                    } else {
                        Tag::Bullet
                    };
                    if !single(&want) {
                        return fail(format!("annotation must be [{want}]"));
                    }
                    let l = Judgment::plain(None, j.ctx[..split].to_vec(), (**a).clone());
                    let r = Judgment::plain(Some((**b).clone()), j.ctx[split..].to_vec(), j.succ.clone());
                    self.check(sub(0), &l, Phase::RI, false, &path.child(0))?;
                    self.check(sub(1), &r, Phase::LI, false, &path.child(1))
                }
                _ => fail("stoup is not an implication".into()),
            },
        }
    }

    fn tagged_premise(&self, d: &FD, j: &Judgment, path: &Path) -> Result<()> {
        match &d.tags {
            Some(l) if valid_tags(l, self.profile) => self.check(d, j, Phase::RI, true, path),
            Some(l) => {
                let items: Vec<String> = l.iter().map(Tag::to_string).collect();
                Err(Error::check(path, format!("invalid tag list [{}]", items.join(","))))
            }
            None => Err(Error::check(path, "premise of a right rule must be tagged")),
        }
    }
}

/// Erases phases and annotations.
pub fn emb(d: &FD, s: &Sequent, profile: LogicProfile) -> D {
    let pending = if profile.exchange() { s.context.len() } else { 0 };
    emb_at(d, pending)
}

fn emb_at(d: &FD, pending: usize) -> D {
    let p = |i: usize, pending: usize| emb_at(&d.premises[i], pending);
    use FRule::*;
    match d.rule {
        Ex { pos } => {
            // the placed formula travels left over `pos` neighbours
            let k = pending - 1;
            let mut out = p(0, k);
            for q in (k..k + pos).rev() {
                out = D::ex(q, out);
            }
            out
        }
        RI2C | LI2RI | F2LI => p(0, 0),
        AndR => D::and_r(p(0, 0), p(1, 0)),
        LimpR => D::limp_r(p(0, 0)),
        TopR => D::TopR,
        IL => D::il(p(0, 0)),
        TensorL => D::tensor_l(p(0, 1)),
        OrL => D::or_l(p(0, 0), p(1, 0)),
        BotL => D::BotL,
        Pass => D::pass(p(0, 0)),
        Ax => D::Ax,
        IR => D::IR,
        AndL1 => D::and_l1(p(0, 0)),
        AndL2 => D::and_l2(p(0, 0)),
        TensorR { split } => D::tensor_r(split, p(0, 0), p(1, 0)),
        OrR1 => D::or_r1(p(0, 0)),
        OrR2 => D::or_r2(p(0, 0)),
        LimpL { split } => D::limp_l(split, p(0, 0), p(1, 0)),
    }
}

//! Derivations of the unfocused sequent calculus.
//!
//! Nodes store only the rule and its numeric parameters; the sequents at
//! every node are recomputed from the conclusion by [`premise_sequents`].

mod cut;

use std::fmt;

pub use cut::{and_l_ctx, ccut, scut};

use crate::error::{Error, Path, Result};
use crate::formula::{Formula, Sequent};
use crate::profiles::LogicProfile;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Derivation {
    Ax,
    Pass(Box<Derivation>),
    IL(Box<Derivation>),
    IR,
    TensorL(Box<Derivation>),
    /// `split` is the length of the context part given to the left premise.
    TensorR {
        split: usize,
        left: Box<Derivation>,
        right: Box<Derivation>,
    },
    AndL1(Box<Derivation>),
    AndL2(Box<Derivation>),
    AndR(Box<Derivation>, Box<Derivation>),
    OrL(Box<Derivation>, Box<Derivation>),
    OrR1(Box<Derivation>),
    OrR2(Box<Derivation>),
    TopR,
    BotL,
    /// Swaps the context formulas at `pos` and `pos + 1`.
    Ex { pos: usize, premise: Box<Derivation> },
    LimpL {
        split: usize,
        left: Box<Derivation>,
        right: Box<Derivation>,
    },
    LimpR(Box<Derivation>),
}

use Derivation as D;

impl Derivation {
    pub fn pass(d: D) -> D {
        D::Pass(Box::new(d))
    }
    pub fn il(d: D) -> D {
        D::IL(Box::new(d))
    }
    pub fn tensor_l(d: D) -> D {
        D::TensorL(Box::new(d))
    }
    pub fn tensor_r(split: usize, l: D, r: D) -> D {
        D::TensorR {
            split,
            left: Box::new(l),
            right: Box::new(r),
        }
    }
    pub fn and_l1(d: D) -> D {
        D::AndL1(Box::new(d))
    }
    pub fn and_l2(d: D) -> D {
        D::AndL2(Box::new(d))
    }
    pub fn and_r(l: D, r: D) -> D {
        D::AndR(Box::new(l), Box::new(r))
    }
    pub fn or_l(l: D, r: D) -> D {
        D::OrL(Box::new(l), Box::new(r))
    }
    pub fn or_r1(d: D) -> D {
        D::OrR1(Box::new(d))
    }
    pub fn or_r2(d: D) -> D {
        D::OrR2(Box::new(d))
    }
    pub fn ex(pos: usize, d: D) -> D {
        D::Ex {
            pos,
            premise: Box::new(d),
        }
    }
    pub fn limp_l(split: usize, l: D, r: D) -> D {
        D::LimpL {
            split,
            left: Box::new(l),
            right: Box::new(r),
        }
    }
    pub fn limp_r(d: D) -> D {
        D::LimpR(Box::new(d))
    }

    /// Rule label as used in the JSON format.
    pub fn label(&self) -> &'static str {
        match self {
            D::Ax => "ax",
            D::Pass(_) => "pass",
            D::IL(_) => "IL",
            D::IR => "IR",
            D::TensorL(_) => "otimesL",
            D::TensorR { .. } => "otimesR",
            D::AndL1(_) => "andL1",
            D::AndL2(_) => "andL2",
            D::AndR(..) => "andR",
            D::OrL(..) => "orL",
            D::OrR1(_) => "orR1",
            D::OrR2(_) => "orR2",
            D::TopR => "topR",
            D::BotL => "botL",
            D::Ex { .. } => "ex",
            D::LimpL { .. } => "limpL",
            D::LimpR(_) => "limpR",
        }
    }

    pub fn premises(&self) -> Vec<&Derivation> {
        match self {
            D::Ax | D::IR | D::TopR | D::BotL => vec![],
            D::Pass(p)
            | D::IL(p)
            | D::TensorL(p)
            | D::AndL1(p)
            | D::AndL2(p)
            | D::OrR1(p)
            | D::OrR2(p)
            | D::LimpR(p)
            | D::Ex { premise: p, .. } => vec![p],
            D::TensorR { left, right, .. } | D::LimpL { left, right, .. } => vec![left, right],
            D::AndR(l, r) | D::OrL(l, r) => vec![l, r],
        }
    }

    /// Same rule and parameters over new premises.
    pub fn with_premises(&self, mut ps: Vec<Derivation>) -> Derivation {
        debug_assert_eq!(ps.len(), self.premises().len());
        let mut next = || Box::new(ps.remove(0));
        match self {
            D::Ax => D::Ax,
            D::IR => D::IR,
            D::TopR => D::TopR,
            D::BotL => D::BotL,
            D::Pass(_) => D::Pass(next()),
            D::IL(_) => D::IL(next()),
            D::TensorL(_) => D::TensorL(next()),
            D::AndL1(_) => D::AndL1(next()),
            D::AndL2(_) => D::AndL2(next()),
            D::OrR1(_) => D::OrR1(next()),
            D::OrR2(_) => D::OrR2(next()),
            D::LimpR(_) => D::LimpR(next()),
            D::Ex { pos, .. } => D::Ex {
                pos: *pos,
                premise: next(),
            },
            D::TensorR { split, .. } => {
                let l = next();
                D::TensorR {
                    split: *split,
                    left: l,
                    right: next(),
                }
            }
            D::LimpL { split, .. } => {
                let l = next();
                D::LimpL {
                    split: *split,
                    left: l,
                    right: next(),
                }
            }
            D::AndR(..) => {
                let l = next();
                D::AndR(l, next())
            }
            D::OrL(..) => {
                let l = next();
                D::OrL(l, next())
            }
        }
    }

    /// Number of rule applications.
    pub fn size(&self) -> usize {
        1 + self.premises().iter().map(|p| p.size()).sum::<usize>()
    }

    pub fn subderivation(&self, path: &[usize]) -> Option<&Derivation> {
        match path.split_first() {
            None => Some(self),
            Some((i, rest)) => self.premises().get(*i)?.subderivation(rest),
        }
    }

    /// Replaces the subderivation at `path`.
    pub fn replace_at(&self, path: &[usize], new: Derivation) -> Option<Derivation> {
        match path.split_first() {
            None => Some(new),
            Some((i, rest)) => {
                let ps = self.premises();
                let target = ps.get(*i)?;
                let replaced = target.replace_at(rest, new)?;
                let mut owned: Vec<Derivation> = ps.into_iter().cloned().collect();
                owned[*i] = replaced;
                Some(self.with_premises(owned))
            }
        }
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())?;
        match self {
            D::TensorR { split, .. } | D::LimpL { split, .. } => write!(f, "[{split}]")?,
            D::Ex { pos, .. } => write!(f, "[{pos}]")?,
            _ => {}
        }
        let ps = self.premises();
        if !ps.is_empty() {
            write!(f, "(")?;
            for (i, p) in ps.iter().enumerate() {
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

fn mismatch(path: &Path, rule: &str, s: &Sequent) -> Error {
    Error::check(path, format!("{rule} does not apply to {s}"))
}

/// Premise sequents of the last rule of `d`, given its conclusion `s`.
pub fn premise_sequents(
    d: &Derivation,
    s: &Sequent,
    profile: LogicProfile,
    path: &Path,
) -> Result<Vec<Sequent>> {
    let bad = || mismatch(path, d.label(), s);
    let ctx = &s.context;
    let c = &s.succedent;
    let seq = Sequent::new;
    Ok(match d {
        D::Ax => match &s.stoup {
            Some(a) if ctx.is_empty() && a == c => vec![],
            _ => return Err(bad()),
        },
        D::Pass(_) => match (&s.stoup, ctx.split_first()) {
            (None, Some((a, rest))) => vec![seq(Some(a.clone()), rest.to_vec(), c.clone())],
            _ => return Err(bad()),
        },
        D::IL(_) => match &s.stoup {
            Some(Formula::Unit) => vec![seq(None, ctx.clone(), c.clone())],
            _ => return Err(bad()),
        },
        D::IR => match (&s.stoup, c) {
            (None, Formula::Unit) if ctx.is_empty() => vec![],
            _ => return Err(bad()),
        },
        D::TensorL(_) => match &s.stoup {
            Some(Formula::Tensor(a, b)) => {
                let mut g = vec![(**b).clone()];
                g.extend(ctx.iter().cloned());
                vec![seq(Some((**a).clone()), g, c.clone())]
            }
            _ => return Err(bad()),
        },
        D::TensorR { split, .. } => match c {
            Formula::Tensor(a, b) if *split <= ctx.len() => vec![
                seq(s.stoup.clone(), ctx[..*split].to_vec(), (**a).clone()),
                seq(None, ctx[*split..].to_vec(), (**b).clone()),
            ],
            Formula::Tensor(..) => {
                return Err(Error::check(
                    path,
                    format!("split {split} exceeds context length {}", ctx.len()),
                ))
            }
            _ => return Err(bad()),
        },
        D::AndL1(_) | D::AndL2(_) => match &s.stoup {
            Some(Formula::With(a, b)) => {
                let pick = if matches!(d, D::AndL1(_)) { a } else { b };
                vec![seq(Some((**pick).clone()), ctx.clone(), c.clone())]
            }
            _ => return Err(bad()),
        },
        D::AndR(..) => match c {
            Formula::With(a, b) => vec![
                seq(s.stoup.clone(), ctx.clone(), (**a).clone()),
                seq(s.stoup.clone(), ctx.clone(), (**b).clone()),
            ],
            _ => return Err(bad()),
        },
        D::OrL(..) => match &s.stoup {
            Some(Formula::Plus(a, b)) => vec![
                seq(Some((**a).clone()), ctx.clone(), c.clone()),
                seq(Some((**b).clone()), ctx.clone(), c.clone()),
            ],
            _ => return Err(bad()),
        },
        D::OrR1(_) | D::OrR2(_) => match c {
            Formula::Plus(a, b) => {
                let pick = if matches!(d, D::OrR1(_)) { a } else { b };
                vec![seq(s.stoup.clone(), ctx.clone(), (**pick).clone())]
            }
            _ => return Err(bad()),
        },
        D::TopR => match c {
            Formula::Top if profile.units() => vec![],
            _ => return Err(bad()),
        },
        D::BotL => match &s.stoup {
            Some(Formula::Zero) if profile.units() => vec![],
            _ => return Err(bad()),
        },
        D::Ex { pos, .. } => {
            if !profile.exchange() {
                return Err(Error::check(path, "ex requires exchange profile"));
            }
            if pos + 1 >= ctx.len() {
                return Err(Error::check(
                    path,
                    format!("ex position {pos} out of range for {s}"),
                ));
            }
            let mut g = ctx.clone();
            g.swap(*pos, pos + 1);
            vec![seq(s.stoup.clone(), g, c.clone())]
        }
        D::LimpL { split, .. } => match &s.stoup {
            Some(Formula::Limp(a, b)) if profile.implication() && *split <= ctx.len() => vec![
                seq(None, ctx[..*split].to_vec(), (**a).clone()),
                seq(Some((**b).clone()), ctx[*split..].to_vec(), c.clone()),
            ],
            _ => return Err(bad()),
        },
        D::LimpR(_) => match c {
            Formula::Limp(a, b) if profile.implication() => {
                let mut g = ctx.clone();
                g.push((**a).clone());
                vec![seq(s.stoup.clone(), g, (**b).clone())]
            }
            _ => return Err(bad()),
        },
    })
}

/// Checks that `d` derives `s` under `profile`.
pub fn check(d: &Derivation, s: &Sequent, profile: LogicProfile) -> Result<()> {
    s.validate(profile)?;
    check_at(d, s, profile, &Path::root())
}

fn check_at(d: &Derivation, s: &Sequent, profile: LogicProfile, path: &Path) -> Result<()> {
    let seqs = premise_sequents(d, s, profile, path)?;
    for (i, (p, ps)) in d.premises().into_iter().zip(&seqs).enumerate() {
        check_at(p, ps, profile, &path.child(i))?;
    }
    Ok(())
}

/// The identity derivation on `a`, fully η-expanded.
pub fn eta_expand(a: &Formula) -> Derivation {
    match a {
        Formula::Atom(_) => D::Ax,
        Formula::Unit => D::il(D::IR),
        Formula::Tensor(l, r) => D::tensor_l(D::tensor_r(0, eta_expand(l), D::pass(eta_expand(r)))),
        Formula::With(l, r) => D::and_r(D::and_l1(eta_expand(l)), D::and_l2(eta_expand(r))),
        Formula::Plus(l, r) => D::or_l(D::or_r1(eta_expand(l)), D::or_r2(eta_expand(r))),
        Formula::Top => D::TopR,
        Formula::Zero => D::BotL,
        Formula::Limp(l, r) => D::limp_r(D::limp_l(1, D::pass(eta_expand(l)), eta_expand(r))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formula::parse_sequent;

    fn seq(t: &str) -> Sequent {
        parse_sequent(t, LogicProfile::IMPLICATION).unwrap()
    }

    #[test]
    fn axiom_checks_at_any_formula() {
        let b = LogicProfile::BASE;
        assert!(check(&D::Ax, &seq("X | . |- X"), b).is_ok());
        assert!(check(&D::Ax, &seq("X /\\ Y | . |- X /\\ Y"), b).is_ok());
        assert!(check(&D::Ax, &seq("X | . |- Y"), b).is_err());
    }

    #[test]
    fn stoup_never_moves_right() {
        let b = LogicProfile::BASE;
        // the right premise has an empty stoup even when the left context is empty
        let err = check(&D::tensor_r(0, D::IR, D::Ax), &seq("Y | . |- I * Y"), b).unwrap_err();
        assert!(matches!(err, Error::Check { .. }), "{err}");
        let s = seq("X | Y |- X * Y");
        assert!(check(&D::tensor_r(0, D::Ax, D::Ax), &s, b).is_err());
        check(&D::tensor_r(0, D::Ax, D::pass(D::Ax)), &s, b).unwrap();
    }

    #[test]
    fn tensor_right_split_and_path() {
        let b = LogicProfile::BASE;
        let s = seq("- | X, Y |- X * Y");
        let d = D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax));
        check(&d, &s, b).unwrap();
        let wrong = D::tensor_r(1, D::pass(D::Ax), D::pass(D::IR));
        match check(&wrong, &s, b) {
            Err(Error::Check { path, .. }) => assert_eq!(path, Path(vec![1, 0])),
            other => panic!("{other:?}"),
        }
        assert!(check(&D::tensor_r(3, D::Ax, D::Ax), &s, b).is_err());
    }

    #[test]
    fn eta_expansions_check() {
        for t in [
            "X * (Y \\/ I) | . |- X * (Y \\/ I)",
            "(X /\\ Y) -o X | . |- (X /\\ Y) -o X",
        ] {
            let s = seq(t);
            check(&eta_expand(&s.succedent), &s, LogicProfile::IMPLICATION).unwrap();
        }
    }

    #[test]
    fn profile_rules_are_gated() {
        let s = seq("- | Y, X |- X * Y");
        let d = D::ex(0, D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax)));
        check(&d, &s, LogicProfile::EXCHANGE).unwrap();
        assert!(check(&d, &s, LogicProfile::BASE).is_err());
        assert!(check(&D::ex(1, D::Ax), &s, LogicProfile::EXCHANGE).is_err());
    }
}

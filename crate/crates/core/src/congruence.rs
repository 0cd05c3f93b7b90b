//! Generating equations of the congruence on derivations, as a rewrite
//! system and as an equivalence oracle.
//!
//! Every equation is stated `lhs ≛ rhs`; [`Direction::LeftToRight`]
//! rewrites an instance of `lhs` into `rhs` and is the normalizing
//! orientation. η-equations then expand axioms at composite formulas.

use std::collections::HashMap;

use crate::calculus::{check, premise_sequents, Derivation as D};
use crate::error::{Error, Path, Result};
use crate::formula::{Formula, Sequent};
use crate::profiles::LogicProfile;
use crate::search::{enumerate_unfocused, SearchBudget};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EquationId {
    EtaUnit,
    EtaTensor,
    EtaWith,
    EtaPlus,
    TensorRPass,
    TensorRUnitL,
    TensorRTensorL,
    TensorRAndL,
    TensorROrL,
    PassAndR,
    UnitLAndR,
    TensorLAndR,
    AndLAndR,
    OrLAndR,
    OrRPass,
    OrRUnitL,
    OrRTensorL,
    OrRAndL,
    OrROrL,
    // additive units
    TopUnique,
    BotUnique,
    // exchange
    ExInvolution,
    ExYangBaxter,
    ExAndL,
    ExAndR,
    ExOrL,
    ExOrR,
    ExDisjoint,
    ExPass,
    ExUnitL,
    ExTensorL,
    ExTensorRLeft,
    ExTensorRRight,
    // implication
    EtaLimp,
    TensorRLimpL,
    PassLimpR,
    UnitLLimpR,
    TensorLLimpR,
    LimpLLimpR,
    AndLLimpR,
    OrLLimpR,
    OrRLimpL,
    /// Not among the listed implication equations; supplied so that ⊸L
    /// commutes with ∧R like every other left rule.
    LimpLAndR,
}

use EquationId as E;

const BASE_EQS: [EquationId; 19] = [
    E::EtaUnit,
    E::EtaTensor,
    E::EtaWith,
    E::EtaPlus,
    E::TensorRPass,
    E::TensorRUnitL,
    E::TensorRTensorL,
    E::TensorRAndL,
    E::TensorROrL,
    E::PassAndR,
    E::UnitLAndR,
    E::TensorLAndR,
    E::AndLAndR,
    E::OrLAndR,
    E::OrRPass,
    E::OrRUnitL,
    E::OrRTensorL,
    E::OrRAndL,
    E::OrROrL,
];

const EXCHANGE_EQS: [EquationId; 12] = [
    E::ExInvolution,
    E::ExYangBaxter,
    E::ExAndL,
    E::ExAndR,
    E::ExOrL,
    E::ExOrR,
    E::ExDisjoint,
    E::ExPass,
    E::ExUnitL,
    E::ExTensorL,
    E::ExTensorRLeft,
    E::ExTensorRRight,
];

const IMPLICATION_EQS: [EquationId; 10] = [
    E::EtaLimp,
    E::TensorRLimpL,
    E::PassLimpR,
    E::UnitLLimpR,
    E::TensorLLimpR,
    E::LimpLLimpR,
    E::AndLLimpR,
    E::OrLLimpR,
    E::OrRLimpL,
    E::LimpLAndR,
];

impl EquationId {
    pub fn active(profile: LogicProfile) -> Vec<EquationId> {
        let mut v = BASE_EQS.to_vec();
        if profile.units() {
            v.extend([E::TopUnique, E::BotUnique]);
        }
        if profile.exchange() {
            v.extend(EXCHANGE_EQS);
        }
        if profile.implication() {
            v.extend(IMPLICATION_EQS);
        }
        v
    }

    pub fn is_eta(self) -> bool {
        matches!(
            self,
            E::EtaUnit | E::EtaTensor | E::EtaWith | E::EtaPlus | E::EtaLimp
        )
    }

    /// Exchange conversions with pass, IL, ⊗L and ⊗R. These are not
    /// listed with the other exchange equations and follow the shape
    /// used for the skew symmetric monoidal calculus without additives.
    pub fn is_imported(self) -> bool {
        matches!(
            self,
            E::ExPass | E::ExUnitL | E::ExTensorL | E::ExTensorRLeft | E::ExTensorRRight
        )
    }

    /// Whether the right-to-left direction can be computed from the
    /// redex alone. The unit equations relate every derivation of a
    /// sequent to a single one and are only stated left to right.
    pub fn reversible(self) -> bool {
        !matches!(self, E::TopUnique | E::BotUnique)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    LeftToRight,
    RightToLeft,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex {
    pub path: Path,
    pub equation: EquationId,
    pub direction: Direction,
}

fn bx(d: &D) -> D {
    d.clone()
}

/// Left-to-right step at the root of `d`, if `d` matches `lhs`.
fn step_lr(eq: EquationId, d: &D, s: &Sequent, profile: LogicProfile) -> Option<D> {
    use D::*;
    let ax = || Ax;
    match (eq, d) {
        (E::EtaUnit, Ax) if s.succedent == Formula::Unit => Some(D::il(IR)),
        (E::EtaTensor, Ax) if matches!(s.succedent, Formula::Tensor(..)) => {
            Some(D::tensor_l(D::tensor_r(0, ax(), D::pass(ax()))))
        }
        (E::EtaWith, Ax) if matches!(s.succedent, Formula::With(..)) => {
            Some(D::and_r(D::and_l1(ax()), D::and_l2(ax())))
        }
        (E::EtaPlus, Ax) if matches!(s.succedent, Formula::Plus(..)) => {
            Some(D::or_l(D::or_r1(ax()), D::or_r2(ax())))
        }
        (E::EtaLimp, Ax) if matches!(s.succedent, Formula::Limp(..)) => {
            Some(D::limp_r(D::limp_l(1, D::pass(ax()), ax())))
        }

        (E::TensorRPass, TensorR { split, left, right }) => match &**left {
            Pass(f) if *split >= 1 => Some(D::pass(D::tensor_r(split - 1, bx(f), bx(right)))),
            _ => None,
        },
        (E::TensorRUnitL, TensorR { split, left, right }) => match &**left {
            IL(f) => Some(D::il(D::tensor_r(*split, bx(f), bx(right)))),
            _ => None,
        },
        (E::TensorRTensorL, TensorR { split, left, right }) => match &**left {
            TensorL(f) => Some(D::tensor_l(D::tensor_r(split + 1, bx(f), bx(right)))),
            _ => None,
        },
        (E::TensorRAndL, TensorR { split, left, right }) => match &**left {
            AndL1(f) => Some(D::and_l1(D::tensor_r(*split, bx(f), bx(right)))),
            AndL2(f) => Some(D::and_l2(D::tensor_r(*split, bx(f), bx(right)))),
            _ => None,
        },
        (E::TensorROrL, TensorR { split, left, right }) => match &**left {
            OrL(f1, f2) => Some(D::or_l(
                D::tensor_r(*split, bx(f1), bx(right)),
                D::tensor_r(*split, bx(f2), bx(right)),
            )),
            _ => None,
        },
        (E::PassAndR, Pass(p)) => match &**p {
            AndR(f, g) => Some(D::and_r(D::pass(bx(f)), D::pass(bx(g)))),
            _ => None,
        },
        (E::UnitLAndR, IL(p)) => match &**p {
            AndR(f, g) => Some(D::and_r(D::il(bx(f)), D::il(bx(g)))),
            _ => None,
        },
        (E::TensorLAndR, TensorL(p)) => match &**p {
            AndR(f, g) => Some(D::and_r(D::tensor_l(bx(f)), D::tensor_l(bx(g)))),
            _ => None,
        },
        (E::AndLAndR, AndL1(p)) => match &**p {
            AndR(f, g) => Some(D::and_r(D::and_l1(bx(f)), D::and_l1(bx(g)))),
            _ => None,
        },
        (E::AndLAndR, AndL2(p)) => match &**p {
            AndR(f, g) => Some(D::and_r(D::and_l2(bx(f)), D::and_l2(bx(g)))),
            _ => None,
        },
        (E::OrLAndR, OrL(a, b)) => match (&**a, &**b) {
            (AndR(f1, g1), AndR(f2, g2)) => Some(D::and_r(
                D::or_l(bx(f1), bx(f2)),
                D::or_l(bx(g1), bx(g2)),
            )),
            _ => None,
        },
        (E::OrRPass | E::OrRUnitL | E::OrRTensorL | E::OrRAndL | E::OrROrL, OrR1(p) | OrR2(p)) => {
            let wrap = |x: D| if matches!(d, OrR1(_)) { D::or_r1(x) } else { D::or_r2(x) };
            match (eq, &**p) {
                (E::OrRPass, Pass(f)) => Some(D::pass(wrap(bx(f)))),
                (E::OrRUnitL, IL(f)) => Some(D::il(wrap(bx(f)))),
                (E::OrRTensorL, TensorL(f)) => Some(D::tensor_l(wrap(bx(f)))),
                (E::OrRAndL, AndL1(f)) => Some(D::and_l1(wrap(bx(f)))),
                (E::OrRAndL, AndL2(f)) => Some(D::and_l2(wrap(bx(f)))),
                (E::OrROrL, OrL(f, g)) => Some(D::or_l(wrap(bx(f)), wrap(bx(g)))),
                _ => None,
            }
        }

        (E::TopUnique, _) if profile.units() && s.succedent == Formula::Top && *d != TopR => {
            Some(TopR)
        }
        (E::BotUnique, _)
            if profile.units() && s.stoup == Some(Formula::Zero) && s.succedent != Formula::Top && *d != BotL =>
        {
            Some(BotL)
        }

        (E::ExInvolution, Ex { pos, premise }) => match &**premise {
            Ex { pos: q, premise: f } if q == pos => Some(bx(f)),
            _ => None,
        },
        (E::ExYangBaxter, Ex { pos: a, premise }) => match &**premise {
            Ex { pos: b, premise: p2 } if *b + 1 == *a => match &**p2 {
                Ex { pos: c, premise: f } if c == a => {
                    Some(D::ex(*b, D::ex(*a, D::ex(*b, bx(f)))))
                }
                _ => None,
            },
            _ => None,
        },
        (E::ExAndL, AndL1(p)) => match &**p {
            Ex { pos, premise } => Some(D::ex(*pos, D::and_l1(bx(premise)))),
            _ => None,
        },
        (E::ExAndL, AndL2(p)) => match &**p {
            Ex { pos, premise } => Some(D::ex(*pos, D::and_l2(bx(premise)))),
            _ => None,
        },
        (E::ExAndR, AndR(a, b)) => match (&**a, &**b) {
            (Ex { pos: p, premise: f }, Ex { pos: q, premise: g }) if p == q => {
                Some(D::ex(*p, D::and_r(bx(f), bx(g))))
            }
            _ => None,
        },
        (E::ExOrL, OrL(a, b)) => match (&**a, &**b) {
            (Ex { pos: p, premise: f }, Ex { pos: q, premise: g }) if p == q => {
                Some(D::ex(*p, D::or_l(bx(f), bx(g))))
            }
            _ => None,
        },
        (E::ExOrR, OrR1(p)) => match &**p {
            Ex { pos, premise } => Some(D::ex(*pos, D::or_r1(bx(premise)))),
            _ => None,
        },
        (E::ExOrR, OrR2(p)) => match &**p {
            Ex { pos, premise } => Some(D::ex(*pos, D::or_r2(bx(premise)))),
            _ => None,
        },
        (E::ExDisjoint, Ex { pos: p, premise }) => match &**premise {
            Ex { pos: q, premise: f } if *q >= p + 2 => Some(D::ex(*q, D::ex(*p, bx(f)))),
            _ => None,
        },
        (E::ExPass, Pass(p)) => match &**p {
            Ex { pos, premise } => Some(D::ex(pos + 1, D::pass(bx(premise)))),
            _ => None,
        },
        (E::ExUnitL, IL(p)) => match &**p {
            Ex { pos, premise } => Some(D::ex(*pos, D::il(bx(premise)))),
            _ => None,
        },
        (E::ExTensorL, TensorL(p)) => match &**p {
            Ex { pos, premise } if *pos >= 1 => Some(D::ex(pos - 1, D::tensor_l(bx(premise)))),
            _ => None,
        },
        (E::ExTensorRLeft, TensorR { split, left, right }) => match &**left {
            Ex { pos, premise } => Some(D::ex(*pos, D::tensor_r(*split, bx(premise), bx(right)))),
            _ => None,
        },
        (E::ExTensorRRight, TensorR { split, left, right }) => match &**right {
            Ex { pos, premise } => Some(D::ex(split + pos, D::tensor_r(*split, bx(left), bx(premise)))),
            _ => None,
        },

        (E::TensorRLimpL, TensorR { split, left, right }) => match &**left {
            LimpL { split: j, left: f, right: g } => Some(D::limp_l(
                *j,
                bx(f),
                D::tensor_r(split - j, bx(g), bx(right)),
            )),
            _ => None,
        },
        (E::PassLimpR, Pass(p)) => match &**p {
            LimpR(f) => Some(D::limp_r(D::pass(bx(f)))),
            _ => None,
        },
        (E::UnitLLimpR, IL(p)) => match &**p {
            LimpR(f) => Some(D::limp_r(D::il(bx(f)))),
            _ => None,
        },
        (E::TensorLLimpR, TensorL(p)) => match &**p {
            LimpR(f) => Some(D::limp_r(D::tensor_l(bx(f)))),
            _ => None,
        },
        (E::LimpLLimpR, LimpL { split, left, right }) => match &**right {
            LimpR(g) => Some(D::limp_r(D::limp_l(*split, bx(left), bx(g)))),
            _ => None,
        },
        (E::AndLLimpR, AndL1(p)) => match &**p {
            LimpR(f) => Some(D::limp_r(D::and_l1(bx(f)))),
            _ => None,
        },
        (E::AndLLimpR, AndL2(p)) => match &**p {
            LimpR(f) => Some(D::limp_r(D::and_l2(bx(f)))),
            _ => None,
        },
        (E::OrLLimpR, OrL(a, b)) => match (&**a, &**b) {
            (LimpR(f), LimpR(g)) => Some(D::limp_r(D::or_l(bx(f), bx(g)))),
            _ => None,
        },
        (E::LimpLAndR, LimpL { split, left, right }) => match &**right {
            AndR(g, h) => Some(D::and_r(
                D::limp_l(*split, bx(left), bx(g)),
                D::limp_l(*split, bx(left), bx(h)),
            )),
            _ => None,
        },
        (E::OrRLimpL, OrR1(p) | OrR2(p)) => match &**p {
            LimpL { split, left, right } => {
                let inner = if matches!(d, OrR1(_)) {
                    D::or_r1(bx(right))
                } else {
                    D::or_r2(bx(right))
                };
                Some(D::limp_l(*split, bx(left), inner))
            }
            _ => None,
        },
        _ => None,
    }
}

/// Right-to-left step at the root of `d`, if `d` matches `rhs`.
fn step_rl(eq: EquationId, d: &D, s: &Sequent, profile: LogicProfile) -> Option<D> {
    use D::*;
    let ax_shaped = s.context.is_empty() && s.stoup.as_ref() == Some(&s.succedent);
    match (eq, d) {
        _ if eq.is_eta() => {
            let expanded = step_lr(eq, &Ax, s, profile)?;
            (ax_shaped && expanded == *d).then_some(Ax)
        }
        (E::TensorRPass, Pass(p)) => match &**p {
            TensorR { split, left, right } => {
                Some(D::tensor_r(split + 1, D::pass(bx(left)), bx(right)))
            }
            _ => None,
        },
        (E::TensorRUnitL, IL(p)) => match &**p {
            TensorR { split, left, right } => Some(D::tensor_r(*split, D::il(bx(left)), bx(right))),
            _ => None,
        },
        (E::TensorRTensorL, TensorL(p)) => match &**p {
            TensorR { split, left, right } if *split >= 1 => {
                Some(D::tensor_r(split - 1, D::tensor_l(bx(left)), bx(right)))
            }
            _ => None,
        },
        (E::TensorRAndL, AndL1(p)) => match &**p {
            TensorR { split, left, right } => Some(D::tensor_r(*split, D::and_l1(bx(left)), bx(right))),
            _ => None,
        },
        (E::TensorRAndL, AndL2(p)) => match &**p {
            TensorR { split, left, right } => Some(D::tensor_r(*split, D::and_l2(bx(left)), bx(right))),
            _ => None,
        },
        (E::TensorROrL, OrL(a, b)) => match (&**a, &**b) {
            (
                TensorR { split: k1, left: f1, right: g1 },
                TensorR { split: k2, left: f2, right: g2 },
            ) if k1 == k2 && g1 == g2 => Some(D::tensor_r(*k1, D::or_l(bx(f1), bx(f2)), bx(g1))),
            _ => None,
        },
        (E::PassAndR | E::UnitLAndR | E::TensorLAndR | E::AndLAndR, AndR(a, b)) => {
            match (eq, &**a, &**b) {
                (E::PassAndR, Pass(f), Pass(g)) => Some(D::pass(D::and_r(bx(f), bx(g)))),
                (E::UnitLAndR, IL(f), IL(g)) => Some(D::il(D::and_r(bx(f), bx(g)))),
                (E::TensorLAndR, TensorL(f), TensorL(g)) => {
                    Some(D::tensor_l(D::and_r(bx(f), bx(g))))
                }
                (E::AndLAndR, AndL1(f), AndL1(g)) => Some(D::and_l1(D::and_r(bx(f), bx(g)))),
                (E::AndLAndR, AndL2(f), AndL2(g)) => Some(D::and_l2(D::and_r(bx(f), bx(g)))),
                _ => None,
            }
        }
        (E::OrLAndR, AndR(a, b)) => match (&**a, &**b) {
            (OrL(f1, f2), OrL(g1, g2)) => Some(D::or_l(
                D::and_r(bx(f1), bx(g1)),
                D::and_r(bx(f2), bx(g2)),
            )),
            _ => None,
        },
        (E::OrRPass, Pass(p)) => or_r_inner(p).map(|(w, f)| w(D::pass(f))),
        (E::OrRUnitL, IL(p)) => or_r_inner(p).map(|(w, f)| w(D::il(f))),
        (E::OrRTensorL, TensorL(p)) => or_r_inner(p).map(|(w, f)| w(D::tensor_l(f))),
        (E::OrRAndL, AndL1(p)) => or_r_inner(p).map(|(w, f)| w(D::and_l1(f))),
        (E::OrRAndL, AndL2(p)) => or_r_inner(p).map(|(w, f)| w(D::and_l2(f))),
        (E::OrROrL, OrL(a, b)) => match (&**a, &**b) {
            (OrR1(f), OrR1(g)) => Some(D::or_r1(D::or_l(bx(f), bx(g)))),
            (OrR2(f), OrR2(g)) => Some(D::or_r2(D::or_l(bx(f), bx(g)))),
            _ => None,
        },

        (E::ExInvolution, _) if profile.exchange() => {
            // f ↦ ex(ex f) at every valid position
            None
        }
        (E::ExYangBaxter, Ex { pos: b, premise }) => match &**premise {
            Ex { pos: a, premise: p2 } if *b + 1 == *a => match &**p2 {
                Ex { pos: c, premise: f } if c == b => Some(D::ex(*a, D::ex(*b, D::ex(*a, bx(f))))),
                _ => None,
            },
            _ => None,
        },
        (E::ExAndL, Ex { pos, premise }) => match &**premise {
            AndL1(f) => Some(D::and_l1(D::ex(*pos, bx(f)))),
            AndL2(f) => Some(D::and_l2(D::ex(*pos, bx(f)))),
            _ => None,
        },
        (E::ExAndR, Ex { pos, premise }) => match &**premise {
            AndR(f, g) => Some(D::and_r(D::ex(*pos, bx(f)), D::ex(*pos, bx(g)))),
            _ => None,
        },
        (E::ExOrL, Ex { pos, premise }) => match &**premise {
            OrL(f, g) => Some(D::or_l(D::ex(*pos, bx(f)), D::ex(*pos, bx(g)))),
            _ => None,
        },
        (E::ExOrR, Ex { pos, premise }) => match &**premise {
            OrR1(f) => Some(D::or_r1(D::ex(*pos, bx(f)))),
            OrR2(f) => Some(D::or_r2(D::ex(*pos, bx(f)))),
            _ => None,
        },
        (E::ExDisjoint, Ex { pos: q, premise }) => match &**premise {
            Ex { pos: p, premise: f } if *q >= p + 2 => Some(D::ex(*p, D::ex(*q, bx(f)))),
            _ => None,
        },
        (E::ExPass, Ex { pos, premise }) => match &**premise {
            Pass(f) if *pos >= 1 => Some(D::pass(D::ex(pos - 1, bx(f)))),
            _ => None,
        },
        (E::ExUnitL, Ex { pos, premise }) => match &**premise {
            IL(f) => Some(D::il(D::ex(*pos, bx(f)))),
            _ => None,
        },
        (E::ExTensorL, Ex { pos, premise }) => match &**premise {
            TensorL(f) => Some(D::tensor_l(D::ex(pos + 1, bx(f)))),
            _ => None,
        },
        (E::ExTensorRLeft, Ex { pos, premise }) => match &**premise {
            TensorR { split, left, right } if pos + 1 < *split => {
                Some(D::tensor_r(*split, D::ex(*pos, bx(left)), bx(right)))
            }
            _ => None,
        },
        (E::ExTensorRRight, Ex { pos, premise }) => match &**premise {
            TensorR { split, left, right } if *pos >= *split => {
                Some(D::tensor_r(*split, bx(left), D::ex(pos - split, bx(right))))
            }
            _ => None,
        },

        (E::TensorRLimpL, LimpL { split: j, left: f, right }) => match &**right {
            TensorR { split: k, left: g, right: h } => Some(D::tensor_r(
                j + k,
                D::limp_l(*j, bx(f), bx(g)),
                bx(h),
            )),
            _ => None,
        },
        (
            E::PassLimpR | E::UnitLLimpR | E::TensorLLimpR | E::LimpLLimpR | E::AndLLimpR | E::OrLLimpR,
            LimpR(p),
        ) => {
            let r = |x: &D| D::limp_r(bx(x));
            match (eq, &**p) {
                (E::PassLimpR, Pass(f)) => Some(D::pass(r(f))),
                (E::UnitLLimpR, IL(f)) => Some(D::il(r(f))),
                (E::TensorLLimpR, TensorL(f)) => Some(D::tensor_l(r(f))),
                (E::LimpLLimpR, LimpL { split, left, right }) => {
                    Some(D::limp_l(*split, bx(left), r(right)))
                }
                (E::AndLLimpR, AndL1(f)) => Some(D::and_l1(r(f))),
                (E::AndLLimpR, AndL2(f)) => Some(D::and_l2(r(f))),
                (E::OrLLimpR, OrL(f, g)) => Some(D::or_l(r(f), r(g))),
                _ => None,
            }
        }
        (E::LimpLAndR, AndR(a, b)) => match (&**a, &**b) {
            (LimpL { split: j, left: f, right: g }, LimpL { split: k, left: f2, right: h }) if j == k && f == f2 => {
                Some(D::limp_l(*j, bx(f), D::and_r(bx(g), bx(h))))
            }
            _ => None,
        },
        (E::OrRLimpL, LimpL { split, left, right }) => match &**right {
            OrR1(g) => Some(D::or_r1(D::limp_l(*split, bx(left), bx(g)))),
            OrR2(g) => Some(D::or_r2(D::limp_l(*split, bx(left), bx(g)))),
            _ => None,
        },
        _ => None,
    }
}

type Wrap = fn(D) -> D;

fn or_r_inner(p: &D) -> Option<(Wrap, D)> {
    match p {
        D::OrR1(f) => Some((D::or_r1 as Wrap, bx(f))),
        D::OrR2(f) => Some((D::or_r2 as Wrap, bx(f))),
        _ => None,
    }
}

/// One step at the root; `None` when the redex is absent.
pub fn step_at_root(
    d: &D,
    s: &Sequent,
    eq: EquationId,
    dir: Direction,
    profile: LogicProfile,
) -> Option<D> {
    match dir {
        Direction::LeftToRight => step_lr(eq, d, s, profile),
        Direction::RightToLeft if eq == E::ExInvolution => {
            // expansion by a double swap; only meaningful with two context formulas
            (profile.exchange() && s.context.len() >= 2).then(|| D::ex(0, D::ex(0, d.clone())))
        }
        // a matching right-hand side may still lack a well-formed left-hand side
        Direction::RightToLeft => step_rl(eq, d, s, profile).filter(|n| check(n, s, profile).is_ok()),
    }
}

/// Every node with its conclusion, in post-order (premises left to right
/// before the node itself).
pub fn nodes_postorder(d: &D, s: &Sequent, profile: LogicProfile) -> Result<Vec<(Path, D, Sequent)>> {
    let mut out = Vec::new();
    collect(d, s, profile, &Path::root(), &mut out)?;
    Ok(out)
}

fn collect(
    d: &D,
    s: &Sequent,
    profile: LogicProfile,
    path: &Path,
    out: &mut Vec<(Path, D, Sequent)>,
) -> Result<()> {
    let ps = premise_sequents(d, s, profile, path)?;
    for (i, (p, q)) in d.premises().into_iter().zip(&ps).enumerate() {
        collect(p, q, profile, &path.child(i), out)?;
    }
    out.push((path.clone(), d.clone(), s.clone()));
    Ok(())
}

/// All redexes of `d`, in both directions, at every subderivation.
pub fn applicable(d: &D, s: &Sequent, profile: LogicProfile) -> Result<Vec<Redex>> {
    let eqs = EquationId::active(profile);
    let mut out = Vec::new();
    for (path, node, seq) in nodes_postorder(d, s, profile)? {
        for &eq in &eqs {
            for dir in [Direction::LeftToRight, Direction::RightToLeft] {
                if dir == Direction::RightToLeft && eq == E::ExInvolution {
                    continue;
                }
                if step_at_root(&node, &seq, eq, dir, profile).is_some() {
                    out.push(Redex {
                        path: path.clone(),
                        equation: eq,
                        direction: dir,
                    });
                }
            }
        }
    }
    Ok(out)
}

pub fn rewrite_once(
    d: &D,
    s: &Sequent,
    path: &Path,
    eq: EquationId,
    dir: Direction,
    profile: LogicProfile,
) -> Result<D> {
    let nodes = nodes_postorder(d, s, profile)?;
    let (_, node, seq) = nodes
        .iter()
        .find(|(p, _, _)| p == path)
        .ok_or_else(|| Error::Rewrite(format!("no subderivation at {path}")))?;
    let new = step_at_root(node, seq, eq, dir, profile)
        .ok_or_else(|| Error::Rewrite(format!("no {eq:?} redex ({dir:?}) at {path}")))?;
    d.replace_at(&path.0, new)
        .ok_or_else(|| Error::Rewrite(format!("no subderivation at {path}")))
}

/// Every derivation reachable by one left-to-right step.
pub fn lr_neighbors(d: &D, s: &Sequent, profile: LogicProfile) -> Result<Vec<D>> {
    let eqs = EquationId::active(profile);
    let mut out = Vec::new();
    for (path, node, seq) in nodes_postorder(d, s, profile)? {
        for &eq in &eqs {
            if let Some(new) = step_lr(eq, &node, &seq, profile) {
                out.push(d.replace_at(&path.0, new).expect("path from traversal"));
            }
        }
    }
    Ok(out)
}

/// Rewrites to normal form, always contracting the leftmost-innermost
/// redex.
pub fn normalize_rw(d: &D, s: &Sequent, step_cap: usize, profile: LogicProfile) -> Result<D> {
    let eqs = EquationId::active(profile);
    let mut cur = d.clone();
    for _ in 0..=step_cap {
        let mut next = None;
        'search: for (path, node, seq) in nodes_postorder(&cur, s, profile)? {
            for &eq in &eqs {
                if let Some(new) = step_lr(eq, &node, &seq, profile) {
                    next = Some(cur.replace_at(&path.0, new).expect("path from traversal"));
                    break 'search;
                }
            }
        }
        match next {
            None => return Ok(cur),
            Some(n) => cur = n,
        }
    }
    Err(Error::Budget(format!("no normal form within {step_cap} steps")))
}

/// Connected components of the undirected one-step graph over all
/// derivations of one sequent.
#[derive(Clone, Debug)]
pub struct EquivClasses {
    index: HashMap<D, usize>,
    class: Vec<usize>,
    members: Vec<D>,
    enumerated: usize,
}

impl EquivClasses {
    /// Under exchange the enumeration bounds `ex` chains, so derivations
    /// reached by a step but not enumerated are added to the graph and
    /// explored in turn, up to the node cap of `budget`.
    pub fn build(s: &Sequent, profile: LogicProfile, budget: &SearchBudget) -> Result<Self> {
        let members = enumerate_unfocused(s, profile, budget)?;
        let enumerated = members.len();
        let mut index: HashMap<D, usize> = members
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        let mut nodes = members;
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        let mut i = 0;
        while i < nodes.len() {
            for n in lr_neighbors(&nodes[i], s, profile)? {
                // each undirected edge is a left-to-right step from one end
                let j = match index.get(&n) {
                    Some(&j) => j,
                    None if profile.exchange() => {
                        if nodes.len() >= budget.node_cap {
                            return Err(Error::Budget(format!("closure of {s} exceeds {} nodes", budget.node_cap)));
                        }
                        index.insert(n.clone(), nodes.len());
                        parent.push(nodes.len());
                        nodes.push(n);
                        nodes.len() - 1
                    }
                    None => {
                        return Err(Error::Rewrite(format!(
                            "rewrite left the enumerated derivations of {s}: {n}"
                        )))
                    }
                };
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
            i += 1;
        }
        let class = (0..nodes.len()).map(|i| find(&mut parent, i)).collect();
        Ok(EquivClasses {
            index,
            class,
            members: nodes,
            enumerated,
        })
    }

    /// The enumerated derivations.
    pub fn members(&self) -> &[D] {
        &self.members[..self.enumerated]
    }

    pub fn class_of(&self, d: &D) -> Option<usize> {
        self.index.get(d).map(|&i| self.class[i])
    }

    pub fn count(&self) -> usize {
        let mut roots: Vec<usize> = self.class[..self.enumerated].to_vec();
        roots.sort_unstable();
        roots.dedup();
        roots.len()
    }

    /// Classes as lists of members, ordered by first member.
    pub fn classes(&self) -> Vec<Vec<D>> {
        let mut by_root: Vec<(usize, Vec<D>)> = Vec::new();
        for (i, d) in self.members().iter().enumerate() {
            let r = self.class[i];
            match by_root.iter_mut().find(|(k, _)| *k == r) {
                Some((_, v)) => v.push(d.clone()),
                None => by_root.push((r, vec![d.clone()])),
            }
        }
        by_root.into_iter().map(|(_, v)| v).collect()
    }
}

/// Default connective bound for [`equiv_oracle`].
pub const ORACLE_MAX_CONNECTIVES: usize = 6;

/// Decides `f ≛ g` by closure over the generating equations, without
/// going through focusing.
pub fn equiv_oracle(f: &D, g: &D, s: &Sequent, profile: LogicProfile) -> Result<bool> {
    equiv_oracle_with(f, g, s, profile, ORACLE_MAX_CONNECTIVES)
}

pub fn equiv_oracle_with(
    f: &D,
    g: &D,
    s: &Sequent,
    profile: LogicProfile,
    max_connectives: usize,
) -> Result<bool> {
    crate::calculus::check(f, s, profile)?;
    crate::calculus::check(g, s, profile)?;
    if f == g {
        return Ok(true);
    }
    if s.size() > max_connectives {
        return Err(Error::Budget(format!(
            "{s} has {} connectives, oracle bound is {max_connectives}",
            s.size()
        )));
    }
    let budget = SearchBudget {
        max_connectives,
        ..SearchBudget::default()
    };
    let classes = EquivClasses::build(s, profile, &budget)?;
    match (classes.class_of(f), classes.class_of(g)) {
        (Some(a), Some(b)) => Ok(a == b),
        _ => Err(Error::Budget(
            "derivation outside the enumerated search space".into(),
        )),
    }
}

/// Decides `f ≛ g` by comparing focused normal forms.
pub fn equiv(f: &D, g: &D, s: &Sequent, profile: LogicProfile) -> Result<bool> {
    Ok(crate::focused::focus(f, s, profile)? == crate::focused::focus(g, s, profile)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check;
    use crate::formula::parse_sequent;

    fn seq(t: &str) -> Sequent {
        parse_sequent(t, LogicProfile::UNITS_IMPLICATION)
            .or_else(|_| parse_sequent(t, LogicProfile::UNITS_EXCHANGE))
            .unwrap()
    }

    const B: LogicProfile = LogicProfile::BASE;

    #[test]
    fn pass_tensor_redex_at_root() {
        let s = seq("- | X, Y |- X * Y");
        let d = D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax));
        let rs = applicable(&d, &s, B).unwrap();
        assert!(rs.contains(&Redex {
            path: Path::root(),
            equation: E::TensorRPass,
            direction: Direction::LeftToRight
        }));
        let out = rewrite_once(&d, &s, &Path::root(), E::TensorRPass, Direction::LeftToRight, B).unwrap();
        assert_eq!(out, D::pass(D::tensor_r(0, D::Ax, D::pass(D::Ax))));
        check(&out, &s, B).unwrap();
        assert_eq!(normalize_rw(&d, &s, 100, B).unwrap(), out);
        assert_eq!(normalize_rw(&out, &s, 100, B).unwrap(), out);
    }

    #[test]
    fn atom_axiom_has_no_redex() {
        assert!(applicable(&D::Ax, &seq("X | . |- X"), B).unwrap().is_empty());
    }

    #[test]
    fn unit_axiom_expands() {
        let s = seq("I | . |- I");
        let rs = applicable(&D::Ax, &s, B).unwrap();
        assert_eq!(
            rs,
            vec![Redex {
                path: Path::root(),
                equation: E::EtaUnit,
                direction: Direction::LeftToRight
            }]
        );
        let back = rewrite_once(&D::il(D::IR), &s, &Path::root(), E::EtaUnit, Direction::RightToLeft, B).unwrap();
        assert_eq!(back, D::Ax);
    }

    #[test]
    fn pass_and_right_both_directions() {
        let s = seq("- | X /\\ Y |- X /\\ Y");
        let lhs = D::pass(D::and_r(D::and_l1(D::Ax), D::and_l2(D::Ax)));
        let rhs = D::and_r(D::pass(D::and_l1(D::Ax)), D::pass(D::and_l2(D::Ax)));
        check(&lhs, &s, B).unwrap();
        let r = Path::root();
        assert_eq!(rewrite_once(&lhs, &s, &r, E::PassAndR, Direction::LeftToRight, B).unwrap(), rhs);
        assert_eq!(rewrite_once(&rhs, &s, &r, E::PassAndR, Direction::RightToLeft, B).unwrap(), lhs);
        assert!(rewrite_once(&lhs, &s, &r, E::PassAndR, Direction::RightToLeft, B).is_err());
    }

    #[test]
    fn exchange_involution() {
        let p = LogicProfile::EXCHANGE;
        let s = seq("- | Y, X |- X * Y");
        let f = D::ex(0, D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax)));
        let d = D::ex(0, D::ex(0, f.clone()));
        check(&d, &s, p).unwrap();
        let out = rewrite_once(&d, &s, &Path::root(), E::ExInvolution, Direction::LeftToRight, p).unwrap();
        assert_eq!(out, f);
    }

    #[test]
    fn oracle_examples() {
        let s = seq("- | X, Y |- X * Y");
        let f = D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax));
        let g = D::pass(D::tensor_r(0, D::Ax, D::pass(D::Ax)));
        assert!(equiv_oracle(&f, &g, &s, B).unwrap());
        assert!(equiv_oracle(&f, &f, &s, B).unwrap());
        let s = seq("X /\\ Y | . |- X \\/ Y");
        let f = D::and_l1(D::or_r1(D::Ax));
        let g = D::and_l2(D::or_r2(D::Ax));
        assert!(!equiv_oracle(&f, &g, &s, B).unwrap());
        assert!(equiv_oracle(&f, &D::or_r1(D::and_l1(D::Ax)), &s, B).unwrap());
    }

    #[test]
    fn unit_equations_collapse() {
        let p = LogicProfile::UNITS;
        let s = seq("Bot | X |- Top");
        let d = D::TopR;
        assert!(equiv_oracle(&d, &D::BotL, &s, p).unwrap());
        let s = seq("X /\\ Top | . |- Top");
        assert_eq!(normalize_rw(&D::and_l2(D::Ax), &s, 10, p).unwrap(), D::TopR);
    }
}

//! From unfocused derivations to focused normal forms.
//!
//! Every unfocused rule is sent to an admissible rule of the right
//! invertible phase. Left rules act on every leaf of the ∧R/⊸R spine;
//! right non-invertible rules invert their premise and then either tag
//! the leaves or push a shared left rule below themselves.

use super::{valid_tags, FRule, FocusedDerivation as FD, Tag};
use crate::calculus::{check, eta_expand, premise_sequents, Derivation as D};
use crate::error::{Error, Path, Result};
use crate::formula::{impconj, is_irreducible_stoup, Formula, Sequent, Stoup};
use crate::profiles::LogicProfile;

/// The focused normal form of `f`, an untagged derivation in phase RI.
pub fn focus(f: &D, s: &Sequent, profile: LogicProfile) -> Result<FD> {
    if profile.exchange() {
        return Err(Error::Unsupported(
            "focusing of derivations with exchange".into(),
        ));
    }
    check(f, s, profile)?;
    Focuser { profile }.go(f, s)
}

/// Leaves of the ∧R/⊸R spine of an RI derivation: LI derivations, or ⊤R.
pub fn invert_ri(d: &FD) -> Vec<FD> {
    let mut out = Vec::new();
    collect_leaves(d, &mut out);
    out
}

fn collect_leaves(d: &FD, out: &mut Vec<FD>) {
    match d.rule {
        FRule::AndR | FRule::LimpR => d.premises.iter().for_each(|p| collect_leaves(p, out)),
        FRule::LI2RI => out.push(d.premises[0].clone()),
        _ => out.push(d.clone()),
    }
}

/// Applies `f` to every LI leaf of an untagged RI derivation.
fn map_leaves(d: &FD, f: &mut impl FnMut(FD) -> FD) -> FD {
    match d.rule {
        FRule::AndR => FD::and_r(map_leaves(&d.premises[0], f), map_leaves(&d.premises[1], f)),
        FRule::LimpR => FD::limp_r(map_leaves(&d.premises[0], f)),
        FRule::LI2RI => FD::unary(FRule::LI2RI, f(d.premises[0].clone())),
        _ => d.clone(),
    }
}

fn zip_leaves(a: &FD, b: &FD, f: &impl Fn(FD, FD) -> FD) -> FD {
    match a.rule {
        FRule::AndR => FD::and_r(
            zip_leaves(&a.premises[0], &b.premises[0], f),
            zip_leaves(&a.premises[1], &b.premises[1], f),
        ),
        FRule::LimpR => FD::limp_r(zip_leaves(&a.premises[0], &b.premises[0], f)),
        FRule::LI2RI => FD::unary(FRule::LI2RI, f(a.premises[0].clone(), b.premises[0].clone())),
        _ => a.clone(),
    }
}

/// Rebuilds the RI spine over `a` from its leaves; LI leaves are lifted
/// with their own annotation.
pub(crate) fn spine(a: &Formula, leaves: &mut impl Iterator<Item = FD>, profile: LogicProfile) -> FD {
    match a {
        Formula::With(l, r) => {
            let x = spine(l, leaves, profile);
            FD::and_r(x, spine(r, leaves, profile))
        }
        Formula::Limp(_, r) if profile.implication() => FD::limp_r(spine(r, leaves, profile)),
        _ => {
            let leaf = leaves.next().expect("one leaf per component");
            if leaf.rule == FRule::TopR {
                leaf
            } else {
                FD::new(FRule::LI2RI, leaf.tags.clone(), vec![leaf])
            }
        }
    }
}

fn f2li(f: FD) -> FD {
    FD::unary(FRule::F2LI, f)
}

/// Right non-invertible rule being made admissible in phase LI.
#[derive(Clone)]
enum RightRule {
    OrR1,
    OrR2,
    /// Second premise of ⊗R, already focused.
    TensorR(FD),
}

struct Focuser {
    profile: LogicProfile,
}

impl Focuser {
    fn go(&self, f: &D, s: &Sequent) -> Result<FD> {
        let ps = premise_sequents(f, s, self.profile, &Path::root())?;
        let sub = |i: usize| self.go(f.premises()[i], &ps[i]);
        Ok(match f {
            D::Ax => match &s.succedent {
                Formula::Atom(_) => FD::lift_f(FD::leaf(FRule::Ax)),
                a => return self.go(&eta_expand(a), s),
            },
            D::IR => FD::lift_f(FD::leaf(FRule::IR)),
            D::TopR => FD::leaf(FRule::TopR),
            D::BotL => {
                let leaves = impconj(&s.succedent).into_iter().map(|(_, p)| {
                    if p == Formula::Top && self.profile.units() {
                        FD::leaf(FRule::TopR)
                    } else {
                        FD::leaf(FRule::BotL)
                    }
                });
                spine(&s.succedent, &mut leaves.collect::<Vec<_>>().into_iter(), self.profile)
            }
            D::Pass(_) => map_leaves(&sub(0)?, &mut |x| f2li(FD::unary(FRule::Pass, x))),
            D::IL(_) => map_leaves(&sub(0)?, &mut |x| FD::unary(FRule::IL, x)),
            D::TensorL(_) => map_leaves(&sub(0)?, &mut |x| FD::unary(FRule::TensorL, x)),
            D::AndL1(_) => map_leaves(&sub(0)?, &mut |x| f2li(FD::unary(FRule::AndL1, x))),
            D::AndL2(_) => map_leaves(&sub(0)?, &mut |x| f2li(FD::unary(FRule::AndL2, x))),
            D::OrL(..) => zip_leaves(&sub(0)?, &sub(1)?, &|x, y| {
                FD::new(FRule::OrL, None, vec![x, y])
            }),
            D::AndR(..) => FD::and_r(sub(0)?, sub(1)?),
            D::LimpR(_) => FD::limp_r(sub(0)?),
            D::LimpL { split, .. } => {
                let h = sub(0)?;
                let k = *split;
                map_leaves(&sub(1)?, &mut |x| {
                    f2li(FD::new(FRule::LimpL { split: k }, None, vec![h.clone(), x]))
                })
            }
            D::OrR1(_) | D::OrR2(_) => {
                let rule = if matches!(f, D::OrR1(_)) {
                    RightRule::OrR1
                } else {
                    RightRule::OrR2
                };
                let leaves = invert_ri(&sub(0)?);
                let li = self.gen(&rule, &s.stoup, &s.context, &ps[0].succedent, leaves)?;
                FD::unary(FRule::LI2RI, li)
            }
            D::TensorR { .. } => {
                let right = sub(1)?;
                let leaves = invert_ri(&sub(0)?);
                let li = self.gen(
                    &RightRule::TensorR(right),
                    &ps[0].stoup,
                    &ps[0].context,
                    &ps[0].succedent,
                    leaves,
                )?;
                FD::unary(FRule::LI2RI, li)
            }
            D::Ex { .. } => {
                return Err(Error::Unsupported(
                    "focusing of derivations with exchange".into(),
                ))
            }
        })
    }

    /// Builds `stoup | ctx ⊢_LI Q` where `Q` is the conclusion of `rule`
    /// whose (first) premise has succedent `a` with RI leaves `leaves`.
    fn gen(&self, rule: &RightRule, stoup: &Stoup, ctx: &[Formula], a: &Formula, leaves: Vec<FD>) -> Result<FD> {
        let p = self.profile;
        // strip the same left invertible rule from every LI leaf
        let strip = |leaves: Vec<FD>, want: FRule| -> Result<Vec<FD>> {
            leaves
                .into_iter()
                .map(|l| match l.rule {
                    FRule::TopR => Ok(l),
                    r if r == want => Ok(l.premises.into_iter().next().expect("unary")),
                    r => Err(Error::Focus(format!("leaf starts with {} instead of {}", r.label(), want.label()))),
                })
                .collect()
        };
        match stoup {
            Some(Formula::Unit) => {
                let xs = strip(leaves, FRule::IL)?;
                Ok(FD::unary(FRule::IL, self.gen(rule, &None, ctx, a, xs)?))
            }
            Some(Formula::Tensor(l, r)) => {
                let xs = strip(leaves, FRule::TensorL)?;
                let mut c = vec![(**r).clone()];
                c.extend(ctx.iter().cloned());
                Ok(FD::unary(FRule::TensorL, self.gen(rule, &Some((**l).clone()), &c, a, xs)?))
            }
            Some(Formula::Plus(l, r)) => {
                let (mut xs, mut ys) = (Vec::new(), Vec::new());
                for leaf in leaves {
                    match leaf.rule {
                        FRule::TopR => {
                            xs.push(leaf.clone());
                            ys.push(leaf);
                        }
                        FRule::OrL => {
                            let mut it = leaf.premises.into_iter();
                            xs.push(it.next().expect("binary"));
                            ys.push(it.next().expect("binary"));
                        }
                        other => {
                            return Err(Error::Focus(format!("leaf starts with {} instead of orL", other.label())))
                        }
                    }
                }
                Ok(FD::new(
                    FRule::OrL,
                    None,
                    vec![
                        self.gen(rule, &Some((**l).clone()), ctx, a, xs)?,
                        self.gen(rule, &Some((**r).clone()), ctx, a, ys)?,
                    ],
                ))
            }
            Some(Formula::Zero) if p.units() => Ok(FD::leaf(FRule::BotL)),
            _ => {
                debug_assert!(is_irreducible_stoup(stoup, p));
                self.gen_irreducible(rule, stoup, ctx, a, leaves)
            }
        }
    }

    fn gen_irreducible(
        &self,
        rule: &RightRule,
        stoup: &Stoup,
        ctx: &[Formula],
        a: &Formula,
        leaves: Vec<FD>,
    ) -> Result<FD> {
        let comps = impconj(a);
        debug_assert_eq!(comps.len(), leaves.len());
        let mut tags = Vec::with_capacity(leaves.len());
        for (leaf, (delta, _)) in leaves.iter().zip(&comps) {
            tags.push(match leaf.rule {
                FRule::TopR => Tag::T,
                FRule::F2LI => head_tag(&leaf.premises[0], ctx, delta.len()),
                other => {
                    return Err(Error::Focus(format!(
                        "leaf starts with {} under an irreducible stoup",
                        other.label()
                    )))
                }
            });
        }
        if valid_tags(&tags, self.profile) {
            let tagged: Vec<FD> = leaves
                .into_iter()
                .zip(tags)
                .map(|(leaf, t)| match leaf.rule {
                    FRule::TopR => FD::new(FRule::TopR, Some(vec![Tag::T]), vec![]),
                    _ => FD::new(FRule::F2LI, Some(vec![t.clone()]), vec![leaf.premises[0].with_tag(t)]),
                })
                .collect();
            let top = spine(a, &mut tagged.into_iter(), self.profile);
            let f = match rule {
                RightRule::OrR1 => FD::unary(FRule::OrR1, top),
                RightRule::OrR2 => FD::unary(FRule::OrR2, top),
                RightRule::TensorR(right) => FD::new(
                    FRule::TensorR { split: ctx.len() },
                    None,
                    vec![top, right.clone()],
                ),
            };
            return Ok(f2li(f));
        }
        // every leaf starts with the same left non-invertible rule
        let heads: Vec<&FD> = leaves.iter().map(|l| &l.premises[0]).collect();
        let first = heads[0].rule;
        if heads.iter().any(|h| h.rule != first) {
            return Err(Error::Focus("leaves disagree on the focused rule".into()));
        }
        let tails = |i: usize| -> Vec<FD> { heads.iter().map(|h| h.premises[i].clone()).collect() };
        let f = match (first, stoup) {
            (FRule::Pass, None) if !ctx.is_empty() => FD::unary(
                FRule::Pass,
                self.gen(rule, &Some(ctx[0].clone()), &ctx[1..], a, tails(0))?,
            ),
            (FRule::AndL1, Some(Formula::With(l, _))) => {
                FD::unary(FRule::AndL1, self.gen(rule, &Some((**l).clone()), ctx, a, tails(0))?)
            }
            (FRule::AndL2, Some(Formula::With(_, r))) => {
                FD::unary(FRule::AndL2, self.gen(rule, &Some((**r).clone()), ctx, a, tails(0))?)
            }
            (FRule::LimpL { split }, Some(Formula::Limp(_, b))) if split <= ctx.len() => {
                let lefts = tails(0);
                if lefts.iter().any(|h| *h != lefts[0]) {
                    return Err(Error::Focus(format!(
                        "⊸L with split {split} has different left premises in different branches; \
                         no focused derivation tags this"
                    )));
                }
                FD::new(
                    FRule::LimpL { split },
                    None,
                    vec![
                        lefts[0].clone(),
                        self.gen(rule, &Some((**b).clone()), &ctx[split..], a, tails(1))?,
                    ],
                )
            }
            (r, _) => {
                return Err(Error::Focus(format!(
                    "cannot permute {} below a right rule",
                    r.label()
                )))
            }
        };
        Ok(f2li(f))
    }
}

/// Tag of an F derivation whose conclusion context is `ctx` followed by
/// `marked` formulas introduced by ⊸R.
fn head_tag(f: &FD, ctx: &[Formula], marked: usize) -> Tag {
    match f.rule {
        FRule::Pass if ctx.is_empty() && marked > 0 => Tag::Bullet,
        FRule::Pass => Tag::P,
        FRule::AndL1 => Tag::C1,
        FRule::AndL2 => Tag::C2,
        FRule::LimpL { split } if split <= ctx.len() => Tag::Ctx(ctx[..split].to_vec()),
        FRule::LimpL { .. } => Tag::Bullet,
        _ => Tag::R,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::focused::{check_focused, emb};
    use crate::formula::parse_sequent;

    fn run(t: &str, p: LogicProfile, d: &D) -> FD {
        let s = parse_sequent(t, p).unwrap();
        let f = focus(d, &s, p).unwrap();
        check_focused(&f, &s, p).unwrap_or_else(|e| panic!("{e}\n{f}"));
        f
    }

    #[test]
    fn permuted_tensor_proofs_agree() {
        let b = LogicProfile::BASE;
        let a = run("- | X, Y |- X * Y", b, &D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax)));
        let c = run("- | X, Y |- X * Y", b, &D::pass(D::tensor_r(0, D::Ax, D::pass(D::Ax))));
        assert_eq!(a, c);
        assert_eq!(a.premises[0].premises[0].rule, FRule::Pass);
    }

    #[test]
    fn right_rule_first_gets_tags() {
        let b = LogicProfile::BASE;
        let d = D::or_r1(D::and_r(D::and_l1(D::Ax), D::and_l2(D::Ax)));
        let f = run("X /\\ Y | . |- (X /\\ Y) \\/ Z", b, &d);
        let spine = &f.premises[0].premises[0].premises[0];
        assert_eq!(spine.tags, Some(vec![Tag::C1, Tag::C2]));
        let s = parse_sequent("X /\\ Y | . |- (X /\\ Y) \\/ Z", b).unwrap();
        assert_eq!(emb(&f, &s, b), d);
        // η-expanding the axiom gives the same normal form
        assert_eq!(run("X /\\ Y | . |- (X /\\ Y) \\/ Z", b, &D::or_r1(D::Ax)), f);
    }

    #[test]
    fn units_collapse() {
        let u = LogicProfile::UNITS;
        let a = run("Bot | X |- Top", u, &D::TopR);
        let c = run("Bot | X |- Top", u, &D::BotL);
        assert_eq!(a, c);
        let d = run("- | X |- Top \\/ X", u, &D::or_r1(D::TopR));
        assert_eq!(d.premises[0].premises[0].premises[0].tags, Some(vec![Tag::T]));
    }

    #[test]
    fn split_contexts_tag_implication_left() {
        let i = LogicProfile::IMPLICATION;
        let il = |d| D::il(d);
        let left = D::limp_l(0, D::IR, il(D::pass(il(D::IR))));
        let right = D::limp_l(1, D::pass(il(D::IR)), il(D::IR));
        let d = D::tensor_r(1, D::and_r(left, right), D::pass(D::Ax));
        let f = run("I -o I | I, Y |- (I /\\ I) * Y", i, &d);
        let tensor = &f.premises[0].premises[0];
        assert_eq!(tensor.rule, FRule::TensorR { split: 1 });
        let one = vec![Formula::Unit];
        assert_eq!(tensor.premises[0].tags, Some(vec![Tag::Ctx(vec![]), Tag::Ctx(one)]));
    }
}

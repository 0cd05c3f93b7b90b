//! Admissible cut rules and left ∧-rules acting inside the context.
//!
//! Both cuts recurse first on the left derivation while it ends in a
//! left or structural rule, then reduce principal cuts, then commute
//! through the right derivation.

use super::{check, premise_sequents, Derivation as D};
use crate::error::{Error, Path, Result};
use crate::formula::{Formula, Sequent};
use crate::profiles::LogicProfile;

/// Cuts `f : S | Γ ⊢ A` against the stoup of `g : A | Δ ⊢ C`, giving a
/// derivation of `S | Γ, Δ ⊢ C`.
pub fn scut(
    f: &D,
    fs: &Sequent,
    g: &D,
    gs: &Sequent,
    profile: LogicProfile,
) -> Result<(D, Sequent)> {
    if gs.stoup.as_ref() != Some(&fs.succedent) {
        return Err(Error::Cut(format!(
            "cut formula mismatch: {} against stoup of {gs}",
            fs.succedent
        )));
    }
    check(f, fs, profile)?;
    check(g, gs, profile)?;
    let mut ctx = fs.context.clone();
    ctx.extend(gs.context.iter().cloned());
    let conclusion = Sequent::new(fs.stoup.clone(), ctx, gs.succedent.clone());
    let d = Cutter { profile }.scut(f, fs, g, gs)?;
    Ok((d, conclusion))
}

/// Cuts `f : − | Γ ⊢ A` into the context formula at `pos` of
/// `g : S | Δ₀, A, Δ₁ ⊢ C`, giving a derivation of `S | Δ₀, Γ, Δ₁ ⊢ C`.
pub fn ccut(
    f: &D,
    fs: &Sequent,
    g: &D,
    gs: &Sequent,
    pos: usize,
    profile: LogicProfile,
) -> Result<(D, Sequent)> {
    if fs.stoup.is_some() {
        return Err(Error::Cut(format!(
            "context cut needs an empty stoup, got {fs}"
        )));
    }
    match gs.context.get(pos) {
        None => {
            return Err(Error::Cut(format!(
                "position {pos} out of range for {gs}"
            )))
        }
        Some(a) if *a != fs.succedent => {
            return Err(Error::Cut(format!(
                "cut formula mismatch: {} against {a} at {pos}",
                fs.succedent
            )))
        }
        Some(_) => {}
    }
    check(f, fs, profile)?;
    check(g, gs, profile)?;
    let mut ctx = gs.context[..pos].to_vec();
    ctx.extend(fs.context.iter().cloned());
    ctx.extend(gs.context[pos + 1..].iter().cloned());
    let conclusion = Sequent::new(gs.stoup.clone(), ctx, gs.succedent.clone());
    let d = Cutter { profile }.ccut(f, fs, g, gs, pos)?;
    Ok((d, conclusion))
}

/// From `d : S | Γ, Aᵢ, Δ ⊢ C` with `Aᵢ` at `pos`, builds a derivation of
/// `S | Γ, A₁ ∧ A₂, Δ ⊢ C` where the other conjunct is `partner`.
pub fn and_l_ctx(
    which: u8,
    d: &D,
    ds: &Sequent,
    pos: usize,
    partner: &Formula,
    profile: LogicProfile,
) -> Result<(D, Sequent)> {
    let ai = ds
        .context
        .get(pos)
        .ok_or_else(|| Error::Cut(format!("position {pos} out of range for {ds}")))?
        .clone();
    let (conj, proj) = match which {
        1 => (Formula::with(ai.clone(), partner.clone()), D::and_l1(D::Ax)),
        2 => (Formula::with(partner.clone(), ai.clone()), D::and_l2(D::Ax)),
        _ => return Err(Error::Cut(format!("no conjunct {which}"))),
    };
    let f = D::pass(proj);
    let fs = Sequent::new(None, vec![conj], ai);
    ccut(&f, &fs, d, ds, pos, profile)
}

struct Cutter {
    profile: LogicProfile,
}

impl Cutter {
    fn prem(&self, d: &D, s: &Sequent) -> Result<Vec<Sequent>> {
        premise_sequents(d, s, self.profile, &Path::root())
    }

    fn scut(&self, f: &D, fs: &Sequent, g: &D, gs: &Sequent) -> Result<D> {
        match f {
            D::Ax => Ok(g.clone()),
            D::BotL => Ok(D::BotL),
            D::Pass(_)
            | D::IL(_)
            | D::TensorL(_)
            | D::AndL1(_)
            | D::AndL2(_)
            | D::Ex { .. } => {
                let ps = self.prem(f, fs)?;
                let inner = self.scut(f.premises()[0], &ps[0], g, gs)?;
                Ok(f.with_premises(vec![inner]))
            }
            D::OrL(f1, f2) => {
                let ps = self.prem(f, fs)?;
                Ok(D::or_l(
                    self.scut(f1, &ps[0], g, gs)?,
                    self.scut(f2, &ps[1], g, gs)?,
                ))
            }
            D::LimpL { split, left, right } => {
                let ps = self.prem(f, fs)?;
                Ok(D::limp_l(
                    *split,
                    (**left).clone(),
                    self.scut(right, &ps[1], g, gs)?,
                ))
            }
            D::IR | D::TensorR { .. } | D::AndR(..) | D::OrR1(_) | D::OrR2(_) | D::TopR | D::LimpR(_) => {
                self.scut_right(f, fs, g, gs)
            }
        }
    }

    /// `f` ends in a right rule introducing the cut formula.
    fn scut_right(&self, f: &D, fs: &Sequent, g: &D, gs: &Sequent) -> Result<D> {
        let n = fs.context.len();
        let gps = self.prem(g, gs)?;
        match (f, g) {
            (_, D::Ax) => Ok(f.clone()),
            (D::IR, D::IL(g1)) => Ok((**g1).clone()),
            (D::TensorR { left, right, .. }, D::TensorL(g1)) => {
                let fps = self.prem(f, fs)?;
                let h = self.ccut(right, &fps[1], g1, &gps[0], 0)?;
                let mut hctx = fps[1].context.clone();
                hctx.extend(gs.context.iter().cloned());
                let hs = Sequent::new(gps[0].stoup.clone(), hctx, gs.succedent.clone());
                self.scut(left, &fps[0], &h, &hs)
            }
            (D::AndR(f1, _), D::AndL1(g1)) | (D::AndR(_, f1), D::AndL2(g1)) => {
                let fps = self.prem(f, fs)?;
                let idx = usize::from(matches!(g, D::AndL2(_)));
                self.scut(f1, &fps[idx], g1, &gps[0])
            }
            (D::OrR1(f1), D::OrL(g1, _)) => {
                let fps = self.prem(f, fs)?;
                self.scut(f1, &fps[0], g1, &gps[0])
            }
            (D::OrR2(f1), D::OrL(_, g2)) => {
                let fps = self.prem(f, fs)?;
                self.scut(f1, &fps[0], g2, &gps[1])
            }
            (D::LimpR(f1), D::LimpL { left, right, .. }) => {
                let fps = self.prem(f, fs)?;
                let h = self.ccut(left, &gps[0], f1, &fps[0], n)?;
                let mut hctx = fs.context.clone();
                hctx.extend(gps[0].context.iter().cloned());
                let hs = Sequent::new(fs.stoup.clone(), hctx, fps[0].succedent.clone());
                self.scut(&h, &hs, right, &gps[1])
            }
            (_, D::TensorR { split, left, right }) => Ok(D::tensor_r(
                n + split,
                self.scut(f, fs, left, &gps[0])?,
                (**right).clone(),
            )),
            (_, D::Ex { pos, premise }) => Ok(D::ex(n + pos, self.scut(f, fs, premise, &gps[0])?)),
            (_, D::TopR) => Ok(D::TopR),
            (_, D::AndR(..) | D::OrR1(_) | D::OrR2(_) | D::LimpR(_)) => {
                let inner = g
                    .premises()
                    .into_iter()
                    .zip(&gps)
                    .map(|(p, ps)| self.scut(f, fs, p, ps))
                    .collect::<Result<Vec<_>>>()?;
                Ok(g.with_premises(inner))
            }
            _ => Err(Error::Cut(format!(
                "no cut reduction for {} against {}",
                f.label(),
                g.label()
            ))),
        }
    }

    fn ccut(&self, f: &D, fs: &Sequent, g: &D, gs: &Sequent, pos: usize) -> Result<D> {
        let n = fs.context.len();
        let gps = self.prem(g, gs)?;
        match g {
            D::TopR => Ok(D::TopR),
            D::BotL => Ok(D::BotL),
            D::Ax | D::IR => Err(Error::Cut(format!("{} has an empty context", g.label()))),
            D::Pass(g1) if pos == 0 => self.scut(f, fs, g1, &gps[0]),
            D::Pass(g1) => Ok(D::pass(self.ccut(f, fs, g1, &gps[0], pos - 1)?)),
            D::TensorL(g1) => Ok(D::tensor_l(self.ccut(f, fs, g1, &gps[0], pos + 1)?)),
            D::IL(_) | D::AndL1(_) | D::AndL2(_) | D::OrL(..) | D::AndR(..) | D::OrR1(_) | D::OrR2(_) | D::LimpR(_) => {
                let inner = g
                    .premises()
                    .into_iter()
                    .zip(&gps)
                    .map(|(p, ps)| self.ccut(f, fs, p, ps, pos))
                    .collect::<Result<Vec<_>>>()?;
                Ok(g.with_premises(inner))
            }
            D::TensorR { split, left, right } | D::LimpL { split, left, right } => {
                let (l, r, k) = if pos < *split {
                    (self.ccut(f, fs, left, &gps[0], pos)?, (**right).clone(), split + n - 1)
                } else {
                    ((**left).clone(), self.ccut(f, fs, right, &gps[1], pos - split)?, *split)
                };
                Ok(match g {
                    D::TensorR { .. } => D::tensor_r(k, l, r),
                    _ => D::limp_l(k, l, r),
                })
            }
            D::Ex { pos: p, premise } => {
                let p = *p;
                if pos < p {
                    Ok(D::ex(p + n - 1, self.ccut(f, fs, premise, &gps[0], pos)?))
                } else if pos > p + 1 {
                    Ok(D::ex(p, self.ccut(f, fs, premise, &gps[0], pos)?))
                } else if pos == p {
                    // move the displaced formula from p back over the n cut-in formulas
                    let mut d = self.ccut(f, fs, premise, &gps[0], p + 1)?;
                    for q in p..p + n {
                        d = D::ex(q, d);
                    }
                    Ok(d)
                } else {
                    let mut d = self.ccut(f, fs, premise, &gps[0], p)?;
                    for q in (p..p + n).rev() {
                        d = D::ex(q, d);
                    }
                    Ok(d)
                }
            }
        }
    }
}

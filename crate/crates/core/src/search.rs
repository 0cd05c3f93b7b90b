//! Root-first proof search in the focused calculus, and exhaustive
//! enumeration of unfocused derivations.

use std::collections::HashMap;

use crate::calculus::{premise_sequents, Derivation as D};
use crate::congruence::EquivClasses;
use crate::error::{Error, Path, Result};
use crate::focused::{root_phase, valid_tags, FRule, FocusedDerivation as FD, Judgment, Phase, Tag};
use crate::formula::{impconj, is_irreducible_stoup, Formula, Sequent};
use crate::profiles::LogicProfile;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Sequents with more connectives are rejected up front.
    pub max_connectives: usize,
    /// Bound on search steps.
    pub node_cap: usize,
    /// Bound on the number of derivations returned by an enumeration.
    pub result_cap: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_connectives: 8,
            node_cap: 2_000_000,
            result_cap: 100_000,
        }
    }
}

impl SearchBudget {
    fn admit(&self, s: &Sequent) -> Result<()> {
        if s.size() > self.max_connectives {
            return Err(Error::Budget(format!(
                "{s} has {} connectives, the bound is {}",
                s.size(),
                self.max_connectives
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    First,
    All,
}

type Memo = HashMap<(Phase, Judgment), Vec<FD>>;

struct Searcher {
    profile: LogicProfile,
    mode: Mode,
    budget: SearchBudget,
    steps: usize,
    memo: Memo,
}

impl Searcher {
    fn new(profile: LogicProfile, mode: Mode, budget: SearchBudget) -> Self {
        Searcher {
            profile,
            mode,
            budget,
            steps: 0,
            memo: HashMap::new(),
        }
    }

    fn tick(&mut self) -> Result<()> {
        self.steps += 1;
        if self.steps > self.budget.node_cap {
            return Err(Error::Budget(format!("more than {} search steps", self.budget.node_cap)));
        }
        Ok(())
    }

    fn cut_down(&self, mut v: Vec<FD>) -> Result<Vec<FD>> {
        if self.mode == Mode::First {
            v.truncate(1);
        } else if v.len() > self.budget.result_cap {
            return Err(Error::Budget(format!(
                "more than {} derivations",
                self.budget.result_cap
            )));
        }
        Ok(v)
    }

    /// Untagged search in `phase`.
    fn untagged(&mut self, phase: Phase, j: &Judgment) -> Result<Vec<FD>> {
        let key = (phase, j.clone());
        if let Some(v) = self.memo.get(&key) {
            return Ok(v.clone());
        }
        self.tick()?;
        let v = match phase {
            Phase::C => self.c(j)?,
            Phase::RI => self.ri(j)?,
            Phase::LI => self.li(j)?,
            Phase::F => self.f(j, false)?,
        };
        let v = self.cut_down(v)?;
        self.memo.insert(key, v.clone());
        Ok(v)
    }

    fn c(&mut self, j: &Judgment) -> Result<Vec<FD>> {
        if j.pending == 0 {
            let inner = self.untagged(Phase::RI, j)?;
            return Ok(inner.into_iter().map(|d| FD::unary(FRule::RI2C, d)).collect());
        }
        let k = j.pending - 1;
        let placed = &j.ctx[j.pending..];
        let mut out = Vec::new();
        for pos in 0..=placed.len() {
            let mut ctx = j.ctx[..k].to_vec();
            ctx.extend(placed[..pos].iter().cloned());
            ctx.push(j.ctx[k].clone());
            ctx.extend(placed[pos..].iter().cloned());
            let next = Judgment {
                ctx,
                pending: k,
                ..j.clone()
            };
            for d in self.untagged(Phase::C, &next)? {
                out.push(FD::unary(FRule::Ex { pos }, d));
            }
            if self.mode == Mode::First && !out.is_empty() {
                break;
            }
        }
        Ok(out)
    }

    fn with_succ(j: &Judgment, succ: &Formula) -> Judgment {
        Judgment {
            succ: succ.clone(),
            ..j.clone()
        }
    }

    fn ri(&mut self, j: &Judgment) -> Result<Vec<FD>> {
        match &j.succ {
            Formula::With(a, b) => {
                let ls = self.untagged(Phase::RI, &Self::with_succ(j, a))?;
                if ls.is_empty() {
                    return Ok(vec![]);
                }
                let rs = self.untagged(Phase::RI, &Self::with_succ(j, b))?;
                let mut out = Vec::new();
                for l in &ls {
                    for r in &rs {
                        out.push(FD::and_r(l.clone(), r.clone()));
                    }
                }
                Ok(out)
            }
            Formula::Limp(a, b) if self.profile.implication() => {
                let mut n = Self::with_succ(j, b);
                n.ctx.push((**a).clone());
                Ok(self.untagged(Phase::RI, &n)?.into_iter().map(FD::limp_r).collect())
            }
            Formula::Top if self.profile.units() => Ok(vec![FD::leaf(FRule::TopR)]),
            _ => Ok(self
                .untagged(Phase::LI, j)?
                .into_iter()
                .map(|d| FD::unary(FRule::LI2RI, d))
                .collect()),
        }
    }

    fn li(&mut self, j: &Judgment) -> Result<Vec<FD>> {
        let with_stoup = |a: &Formula, ctx: Vec<Formula>| Judgment::plain(Some(a.clone()), ctx, j.succ.clone());
        match &j.stoup {
            Some(Formula::Unit) => {
                let n = Judgment::plain(None, j.ctx.clone(), j.succ.clone());
                Ok(self.untagged(Phase::LI, &n)?.into_iter().map(|d| FD::unary(FRule::IL, d)).collect())
            }
            Some(Formula::Tensor(a, b)) => {
                let mut ctx = vec![(**b).clone()];
                ctx.extend(j.ctx.iter().cloned());
                let mut n = with_stoup(a, ctx);
                let phase = if self.profile.exchange() {
                    n.pending = 1;
                    Phase::C
                } else {
                    Phase::LI
                };
                Ok(self.untagged(phase, &n)?.into_iter().map(|d| FD::unary(FRule::TensorL, d)).collect())
            }
            Some(Formula::Plus(a, b)) => {
                let ls = self.untagged(Phase::LI, &with_stoup(a, j.ctx.clone()))?;
                if ls.is_empty() {
                    return Ok(vec![]);
                }
                let rs = self.untagged(Phase::LI, &with_stoup(b, j.ctx.clone()))?;
                let mut out = Vec::new();
                for l in &ls {
                    for r in &rs {
                        out.push(FD::new(FRule::OrL, None, vec![l.clone(), r.clone()]));
                    }
                }
                Ok(out)
            }
            Some(Formula::Zero) if self.profile.units() => Ok(vec![FD::leaf(FRule::BotL)]),
            _ => {
                debug_assert!(is_irreducible_stoup(&j.stoup, self.profile));
                Ok(self
                    .untagged(Phase::F, j)?
                    .into_iter()
                    .map(|d| FD::unary(FRule::F2LI, d))
                    .collect())
            }
        }
    }

    /// Phase F in rule order. With `tagged`, every result carries its tag.
    fn f(&mut self, j: &Judgment, tagged: bool) -> Result<Vec<FD>> {
        let mut out: Vec<FD> = Vec::new();
        let first = self.mode == Mode::First && !tagged;
        let tag = |t: Tag| tagged.then(|| vec![t]);
        macro_rules! done {
            () => {
                if first && !out.is_empty() {
                    return Ok(out);
                }
            };
        }
        let succ = j.succ.clone();
        // pass
        if j.stoup.is_none() && !j.ctx.is_empty() {
            let t = if j.marks == j.ctx.len() { Tag::Bullet } else { Tag::P };
            let n = Judgment::plain(Some(j.ctx[0].clone()), j.ctx[1..].to_vec(), succ.clone());
            for d in self.untagged(Phase::LI, &n)? {
                out.push(FD::new(FRule::Pass, tag(t.clone()), vec![d]));
            }
            done!();
        }
        if let Some(Formula::With(a, b)) = &j.stoup {
            for (rule, c, t) in [(FRule::AndL1, a, Tag::C1), (FRule::AndL2, b, Tag::C2)] {
                let n = Judgment::plain(Some((**c).clone()), j.ctx.clone(), succ.clone());
                for d in self.untagged(Phase::LI, &n)? {
                    out.push(FD::new(rule, tag(t.clone()), vec![d]));
                }
                done!();
            }
        }
        if j.ctx.is_empty() {
            match (&j.stoup, &succ) {
                (Some(x @ Formula::Atom(_)), y) if x == y => out.push(FD::new(FRule::Ax, tag(Tag::R), vec![])),
                (None, Formula::Unit) => out.push(FD::new(FRule::IR, tag(Tag::R), vec![])),
                _ => {}
            }
            done!();
        }
        if let Formula::Plus(a, b) = &succ {
            for (rule, c) in [(FRule::OrR1, a), (FRule::OrR2, b)] {
                let n = Judgment::plain(j.stoup.clone(), j.ctx.clone(), (**c).clone());
                for d in self.tagged_ri(&n)? {
                    out.push(FD::new(rule, tag(Tag::R), vec![d]));
                }
                done!();
            }
        }
        if let Formula::Tensor(a, b) = &succ {
            for k in 0..=j.ctx.len() {
                let l = Judgment::plain(j.stoup.clone(), j.ctx[..k].to_vec(), (**a).clone());
                let ls = self.tagged_ri(&l)?;
                if ls.is_empty() {
                    continue;
                }
                let r = Judgment::plain(None, j.ctx[k..].to_vec(), (**b).clone());
                let rs = self.untagged(Phase::RI, &r)?;
                for x in &ls {
                    for y in &rs {
                        out.push(FD::new(FRule::TensorR { split: k }, tag(Tag::R), vec![x.clone(), y.clone()]));
                    }
                }
                done!();
            }
        }
        if let Some(Formula::Limp(a, b)) = &j.stoup {
            if self.profile.implication() {
                for k in 0..=j.ctx.len() {
                    let t = if k <= j.unmarked() {
                        Tag::Ctx(j.ctx[..k].to_vec())
                    } else {
                        Tag::Bullet
                    };
                    let l = Judgment::plain(None, j.ctx[..k].to_vec(), (**a).clone());
                    let ls = self.untagged(Phase::RI, &l)?;
                    if ls.is_empty() {
                        continue;
                    }
                    let r = Judgment::plain(Some((**b).clone()), j.ctx[k..].to_vec(), succ.clone());
                    let rs = self.untagged(Phase::LI, &r)?;
                    for x in &ls {
                        for y in &rs {
                            out.push(FD::new(
                                FRule::LimpL { split: k },
                                tag(t.clone()),
                                vec![x.clone(), y.clone()],
                            ));
                        }
                    }
                    done!();
                }
            }
        }
        Ok(out)
    }

    /// Tagged RI derivations of `j` with a valid tag list.
    fn tagged_ri(&mut self, j: &Judgment) -> Result<Vec<FD>> {
        self.tick()?;
        let comps = impconj(&j.succ);
        let mut per_leaf: Vec<Vec<FD>> = Vec::with_capacity(comps.len());
        for (delta, p) in &comps {
            let mut ctx = j.ctx.clone();
            ctx.extend(delta.iter().cloned());
            let leaf = Judgment {
                stoup: j.stoup.clone(),
                ctx,
                marks: delta.len(),
                pending: 0,
                succ: p.clone(),
            };
            let mut cands = if *p == Formula::Top && self.profile.units() {
                vec![FD::new(FRule::TopR, Some(vec![Tag::T]), vec![])]
            } else {
                self.f(&leaf, true)?
                    .into_iter()
                    .map(|d| FD::new(FRule::F2LI, d.tags.clone(), vec![d]))
                    .collect()
            };
            if self.mode == Mode::First {
                // one representative per head tag is enough to find a valid list
                let mut seen: Vec<Tag> = Vec::new();
                cands.retain(|d| {
                    let t = d.tags.as_ref().expect("tagged")[0].clone();
                    if seen.contains(&t) {
                        false
                    } else {
                        seen.push(t);
                        true
                    }
                });
            }
            if cands.is_empty() {
                return Ok(vec![]);
            }
            per_leaf.push(cands);
        }
        let mut out = Vec::new();
        let mut idx = vec![0usize; per_leaf.len()];
        loop {
            self.tick()?;
            let l: Vec<Tag> = idx
                .iter()
                .zip(&per_leaf)
                .map(|(&i, c)| c[i].tags.as_ref().expect("tagged")[0].clone())
                .collect();
            if valid_tags(&l, self.profile) {
                let leaves: Vec<FD> = idx.iter().zip(&per_leaf).map(|(&i, c)| c[i].clone()).collect();
                out.push(crate::focused::spine_of(&j.succ, leaves, self.profile));
                if self.mode == Mode::First {
                    return Ok(out);
                }
                if out.len() > self.budget.result_cap {
                    return Err(Error::Budget(format!("more than {} derivations", self.budget.result_cap)));
                }
            }
            // odometer, last leaf fastest
            let mut k = per_leaf.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                idx[k] += 1;
                if idx[k] < per_leaf[k].len() {
                    break;
                }
                idx[k] = 0;
            }
        }
    }
}

fn run_focused(s: &Sequent, profile: LogicProfile, mode: Mode, budget: &SearchBudget) -> Result<Vec<FD>> {
    s.validate(profile)?;
    budget.admit(s)?;
    let mut se = Searcher::new(profile, mode, *budget);
    let j = Judgment::root(s, profile);
    se.untagged(root_phase(profile), &j)
}

/// The first focused derivation in search order, if any.
pub fn derive(s: &Sequent, profile: LogicProfile, budget: &SearchBudget) -> Result<Option<FD>> {
    Ok(run_focused(s, profile, Mode::First, budget)?.into_iter().next())
}

/// All focused derivations: one per congruence class.
pub fn enumerate_focused(s: &Sequent, profile: LogicProfile, budget: &SearchBudget) -> Result<Vec<FD>> {
    run_focused(s, profile, Mode::All, budget)
}

pub fn count_classes(s: &Sequent, profile: LogicProfile, budget: &SearchBudget) -> Result<usize> {
    Ok(enumerate_focused(s, profile, budget)?.len())
}

/// Number of classes of unfocused derivations under the generating
/// equations, computed without focusing.
pub fn count_classes_oracle(s: &Sequent, profile: LogicProfile, budget: &SearchBudget) -> Result<usize> {
    Ok(EquivClasses::build(s, profile, budget)?.count())
}

/// A focused derivation of `s` whose context permutation is the least one
/// that extends to a proof. `d` only witnesses derivability.
pub fn canonicalize_exchange(s: &Sequent, d: &D, profile: LogicProfile) -> Result<FD> {
    if !profile.exchange() {
        return Err(Error::Profile("canonicalization needs the exchange profile".into()));
    }
    crate::calculus::check(d, s, profile)?;
    let budget = SearchBudget {
        max_connectives: usize::MAX,
        ..SearchBudget::default()
    };
    derive(s, profile, &budget)?.ok_or_else(|| Error::Focus(format!("no focused derivation of {s}")))
}

/// Every derivation of `s` in the unfocused calculus. Axioms are allowed
/// at every formula. Under exchange, chains of `ex` never repeat a
/// position twice in a row and have at most n(n-1)/2 links for a context
/// of length n.
pub fn enumerate_unfocused(s: &Sequent, profile: LogicProfile, budget: &SearchBudget) -> Result<Vec<D>> {
    s.validate(profile)?;
    budget.admit(s)?;
    let mut u = Unfocused {
        profile,
        budget: *budget,
        steps: 0,
        memo: HashMap::new(),
    };
    let v = u.all(s)?;
    if v.len() > budget.result_cap {
        return Err(Error::Budget(format!("more than {} derivations", budget.result_cap)));
    }
    Ok(v)
}

struct Unfocused {
    profile: LogicProfile,
    budget: SearchBudget,
    steps: usize,
    memo: HashMap<Sequent, Vec<D>>,
}

impl Unfocused {
    fn skeletons(&self, s: &Sequent) -> Vec<D> {
        let n = s.context.len();
        let h = || D::Ax;
        let mut v = vec![
            D::Ax,
            D::pass(h()),
            D::il(h()),
            D::IR,
            D::tensor_l(h()),
        ];
        v.extend((0..=n).map(|k| D::tensor_r(k, h(), h())));
        v.extend([
            D::and_l1(h()),
            D::and_l2(h()),
            D::and_r(h(), h()),
            D::or_l(h(), h()),
            D::or_r1(h()),
            D::or_r2(h()),
            D::TopR,
            D::BotL,
        ]);
        v.extend((0..=n).map(|k| D::limp_l(k, h(), h())));
        v.push(D::limp_r(h()));
        v
    }

    fn all(&mut self, s: &Sequent) -> Result<Vec<D>> {
        if let Some(v) = self.memo.get(s) {
            return Ok(v.clone());
        }
        let mut out = self.without_ex(s)?;
        if self.profile.exchange() && s.context.len() >= 2 {
            let n = s.context.len();
            let max_len = n * (n - 1) / 2;
            // chains listed root first
            let mut chains: Vec<(Vec<usize>, Sequent)> = Vec::new();
            let mut frontier: Vec<(Vec<usize>, Sequent)> = vec![(vec![], s.clone())];
            for _ in 0..max_len {
                let mut next = Vec::new();
                for (chain, seq) in &frontier {
                    for p in 0..n - 1 {
                        if chain.last() == Some(&p) {
                            continue;
                        }
                        let mut ctx = seq.context.clone();
                        ctx.swap(p, p + 1);
                        let mut c = chain.clone();
                        c.push(p);
                        next.push((c, Sequent::new(seq.stoup.clone(), ctx, seq.succedent.clone())));
                    }
                }
                chains.extend(next.iter().cloned());
                frontier = next;
            }
            for (chain, seq) in chains {
                for d in self.without_ex(&seq)? {
                    let mut e = d;
                    for &p in chain.iter().rev() {
                        e = D::ex(p, e);
                    }
                    out.push(e);
                }
                self.guard(out.len())?;
            }
        }
        self.memo.insert(s.clone(), out.clone());
        Ok(out)
    }

    fn guard(&self, n: usize) -> Result<()> {
        if n > self.budget.result_cap {
            return Err(Error::Budget(format!("more than {} derivations", self.budget.result_cap)));
        }
        Ok(())
    }

    fn without_ex(&mut self, s: &Sequent) -> Result<Vec<D>> {
        self.steps += 1;
        if self.steps > self.budget.node_cap {
            return Err(Error::Budget(format!("more than {} search steps", self.budget.node_cap)));
        }
        let mut out = Vec::new();
        for sk in self.skeletons(s) {
            let Ok(ps) = premise_sequents(&sk, s, self.profile, &Path::root()) else {
                continue;
            };
            let mut combos: Vec<Vec<D>> = vec![vec![]];
            for p in &ps {
                let subs = self.all(p)?;
                let mut next = Vec::with_capacity(combos.len() * subs.len());
                for c in &combos {
                    for d in &subs {
                        let mut c2 = c.clone();
                        c2.push(d.clone());
                        next.push(c2);
                    }
                }
                combos = next;
                self.guard(combos.len())?;
                if combos.is_empty() {
                    break;
                }
            }
            for c in combos {
                out.push(sk.with_premises(c));
            }
            self.guard(out.len())?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::calculus::check;
    use crate::focused::{check_focused, emb};
    use crate::formula::parse_sequent;

    const B: LogicProfile = LogicProfile::BASE;

    fn seq(t: &str, p: LogicProfile) -> Sequent {
        parse_sequent(t, p).unwrap()
    }

    #[test]
    fn unfocused_enumeration_examples() {
        let b = SearchBudget::default();
        assert_eq!(enumerate_unfocused(&seq("X | . |- X", B), B, &b).unwrap(), vec![D::Ax]);
        assert_eq!(
            enumerate_unfocused(&seq("I | . |- I", B), B, &b).unwrap(),
            vec![D::Ax, D::il(D::IR)]
        );
        assert!(enumerate_unfocused(&seq("- | . |- X", B), B, &b).unwrap().is_empty());
    }

    #[test]
    fn focused_counts() {
        let b = SearchBudget::default();
        for (t, n) in [("- | X, Y |- X * Y", 1), ("X /\\ Y | . |- X \\/ Y", 2), ("I | . |- I", 1)] {
            let s = seq(t, B);
            let all = enumerate_focused(&s, B, &b).unwrap();
            assert_eq!(all.len(), n, "{t}");
            for d in &all {
                check_focused(d, &s, B).unwrap();
                check(&emb(d, &s, B), &s, B).unwrap();
            }
        }
    }

    #[test]
    fn skew_direction() {
        let b = SearchBudget::default();
        assert!(derive(&seq("I * X | . |- X", B), B, &b).unwrap().is_some());
        assert!(derive(&seq("X | . |- X * I", B), B, &b).unwrap().is_some());
        assert!(derive(&seq("X | . |- I * X", B), B, &b).unwrap().is_none());
        assert!(derive(&seq("X * (Y * X) | . |- (X * Y) * X", B), B, &b).unwrap().is_none());
    }

    #[test]
    fn budget_is_enforced() {
        let b = SearchBudget {
            max_connectives: 2,
            ..SearchBudget::default()
        };
        assert!(matches!(derive(&seq("X * Y | . |- X * (Y * I)", B), B, &b), Err(Error::Budget(_))));
    }

    #[test]
    fn exchange_prefers_identity() {
        let p = LogicProfile::EXCHANGE;
        let b = SearchBudget::default();
        let s = seq("- | X, Y |- X * Y", p);
        let d = derive(&s, p, &b).unwrap().unwrap();
        check_focused(&d, &s, p).unwrap();
        assert_eq!(d.rule, FRule::Ex { pos: 0 });
        assert_eq!(d.premises[0].rule, FRule::Ex { pos: 0 });
        let s = seq("- | Y, X |- X * Y", p);
        let d = derive(&s, p, &b).unwrap().unwrap();
        check_focused(&d, &s, p).unwrap();
        let e = emb(&d, &s, p);
        check(&e, &s, p).unwrap();
        assert!(matches!(e, D::Ex { .. }));
        let c = canonicalize_exchange(&s, &e, p).unwrap();
        assert_eq!(c, d);
    }
}

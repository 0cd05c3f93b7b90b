//! Exhaustive families of small formulas and sequents, for tests and
//! experiments.

use crate::formula::{Formula, Sequent};
use crate::profiles::LogicProfile;

/// All formulas over `atoms` with exactly `n` connectives, for each
/// `n <= max`. Nullary connectives count as one.
pub fn formulas_by_size(atoms: &[&str], max: usize, profile: LogicProfile) -> Vec<Vec<Formula>> {
    let mut by: Vec<Vec<Formula>> = vec![atoms.iter().map(|a| Formula::atom(a)).collect()];
    for n in 1..=max {
        let mut v = Vec::new();
        if n == 1 {
            v.push(Formula::Unit);
            if profile.units() {
                v.extend([Formula::Top, Formula::Zero]);
            }
        }
        for i in 0..n {
            let j = n - 1 - i;
            for a in &by[i] {
                for b in &by[j] {
                    v.push(Formula::tensor(a.clone(), b.clone()));
                    v.push(Formula::with(a.clone(), b.clone()));
                    v.push(Formula::plus(a.clone(), b.clone()));
                    if profile.implication() {
                        v.push(Formula::limp(a.clone(), b.clone()));
                    }
                }
            }
        }
        by.push(v);
    }
    by
}

/// All sequents with at most `max` connectives in total and at most
/// `max_context` context formulas.
pub fn sequents(atoms: &[&str], max: usize, max_context: usize, profile: LogicProfile) -> Vec<Sequent> {
    let by = formulas_by_size(atoms, max, profile);
    let upto = |n: usize| -> Vec<(usize, &Formula)> {
        (0..=n).flat_map(|k| by[k].iter().map(move |f| (k, f))).collect()
    };
    // contexts as (size, list)
    let mut contexts: Vec<(usize, Vec<Formula>)> = vec![(0, vec![])];
    let mut last = contexts.clone();
    for _ in 0..max_context {
        let mut next = Vec::new();
        for (n, c) in &last {
            for (k, f) in upto(max - n) {
                let mut c2 = c.clone();
                c2.push(f.clone());
                next.push((n + k, c2));
            }
        }
        contexts.extend(next.iter().cloned());
        last = next;
    }
    let mut out = Vec::new();
    for (cn, ctx) in &contexts {
        let stoups = std::iter::once((0, None)).chain(upto(max - cn).into_iter().map(|(k, f)| (k, Some(f.clone()))));
        for (sn, stoup) in stoups {
            for (_, succ) in upto(max - cn - sn) {
                out.push(Sequent::new(stoup.clone(), ctx.clone(), succ.clone()));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let by = formulas_by_size(&["X", "Y"], 2, LogicProfile::BASE);
        assert_eq!(by[0].len(), 2);
        assert_eq!(by[1].len(), 1 + 3 * 4);
        assert!(by.iter().enumerate().all(|(n, v)| v.iter().all(|f| f.size() == n)));
        let s = sequents(&["X"], 1, 1, LogicProfile::BASE);
        assert!(s.iter().all(|s| s.size() <= 1 && s.context.len() <= 1));
        // stoup, context and succedent each range over {X, I} or absence
        assert!(s.contains(&Sequent::new(None, vec![Formula::Unit], Formula::atom("X"))));
    }
}

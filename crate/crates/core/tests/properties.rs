//! Randomized properties of parsing, search, focusing and cut.

use proptest::prelude::*;
use skew_core::calculus::{check, scut, Derivation as D};
use skew_core::formula::conj;
use skew_core::focused::{check_focused, emb, focus};
use skew_core::json::{derivation_from_node, derivation_to_node, focused_from_node, focused_to_node};
use skew_core::search::{derive, enumerate_focused, SearchBudget};
use skew_core::{parse_formula, parse_sequent, Formula, LogicProfile, Sequent};

fn formula(depth: u32, profile: LogicProfile) -> BoxedStrategy<Formula> {
    let mut leaves = vec![Just(Formula::atom("X")), Just(Formula::atom("Y")), Just(Formula::Unit)];
    if profile.units() {
        leaves.extend([Just(Formula::Top), Just(Formula::Zero)]);
    }
    let leaf = proptest::strategy::Union::new(leaves).boxed();
    leaf.prop_recursive(depth, 16, 2, move |inner| {
        let mut ops = vec![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::tensor(a, b)).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::with(a, b)).boxed(),
            (inner.clone(), inner.clone()).prop_map(|(a, b)| Formula::plus(a, b)).boxed(),
        ];
        if profile.implication() {
            ops.push((inner.clone(), inner).prop_map(|(a, b)| Formula::limp(a, b)).boxed());
        }
        proptest::strategy::Union::new(ops)
    })
    .boxed()
}

fn sequent(profile: LogicProfile) -> impl Strategy<Value = Sequent> {
    (
        proptest::option::of(formula(2, profile)),
        proptest::collection::vec(formula(1, profile), 0..3),
        formula(2, profile),
    )
        .prop_map(|(s, g, c)| Sequent::new(s, g, c))
}

fn profile() -> impl Strategy<Value = LogicProfile> {
    prop_oneof![
        Just(LogicProfile::BASE),
        Just(LogicProfile::UNITS),
        Just(LogicProfile::IMPLICATION),
        Just(LogicProfile::UNITS_IMPLICATION),
    ]
}

fn budget() -> SearchBudget {
    SearchBudget {
        max_connectives: 7,
        ..SearchBudget::default()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn printing_round_trips(a in formula(4, LogicProfile::UNITS_IMPLICATION)) {
        let text = a.to_string();
        prop_assert_eq!(parse_formula(&text, LogicProfile::UNITS_IMPLICATION).unwrap(), a);
    }

    #[test]
    fn sequent_printing_round_trips(s in sequent(LogicProfile::UNITS_IMPLICATION)) {
        let text = s.to_string();
        prop_assert_eq!(parse_sequent(&text, LogicProfile::UNITS_IMPLICATION).unwrap(), s);
    }

    #[test]
    fn conj_preserves_size(a in formula(4, LogicProfile::BASE)) {
        let parts = conj(&a);
        let total: usize = parts.iter().map(Formula::size).sum();
        prop_assert_eq!(total + parts.len() - 1, a.size());
        prop_assert!(parts.iter().all(|p| !matches!(p, Formula::With(..))));
    }

    #[test]
    fn search_results_check_and_focus_back((p, s) in profile().prop_flat_map(|p| (Just(p), sequent(p)))) {
        prop_assume!(s.size() <= 7);
        let all = enumerate_focused(&s, p, &budget()).unwrap();
        prop_assert_eq!(all.is_empty(), derive(&s, p, &budget()).unwrap().is_none());
        for d in all.iter().take(20) {
            check_focused(d, &s, p).unwrap();
            let e = emb(d, &s, p);
            check(&e, &s, p).unwrap();
            prop_assert_eq!(&focus(&e, &s, p).unwrap(), d);
            // JSON round trips both forms
            prop_assert_eq!(&focused_from_node(&focused_to_node(d)).unwrap(), d);
            prop_assert_eq!(derivation_from_node(&derivation_to_node(&e)).unwrap(), e);
        }
    }

    #[test]
    fn cut_with_axiom_is_identity(s in sequent(LogicProfile::BASE)) {
        prop_assume!(s.size() <= 6);
        let p = LogicProfile::BASE;
        if let Some(d) = derive(&s, p, &budget()).unwrap() {
            let f = emb(&d, &s, p);
            let ax = Sequent::new(Some(s.succedent.clone()), vec![], s.succedent.clone());
            let (g, gs) = scut(&f, &s, &D::Ax, &ax, p).unwrap();
            prop_assert_eq!(&gs, &s);
            prop_assert_eq!(focus(&g, &s, p).unwrap(), d);
        }
    }
}

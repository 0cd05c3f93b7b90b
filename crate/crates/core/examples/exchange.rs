//! Skew exchange: context formulas may be permuted, the stoup may not.
use skew_core::calculus::Derivation as D;
use skew_core::search::{canonicalize_exchange, count_classes, derive, SearchBudget};
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::EXCHANGE;
    let b = SearchBudget::default();
    let s = parse_sequent("- | Y, X |- X * Y", p).unwrap();
    println!("{s}: {}", derive(&s, p, &b).unwrap().expect("derivable with exchange"));
    let t = parse_sequent("- | X, X |- X * X", p).unwrap();
    println!("{t}: {} classes (identity and swap)", count_classes(&t, p, &b).unwrap());
    let d = D::ex(0, D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax)));
    println!("canonical form of {d}: {}", canonicalize_exchange(&s, &d, p).unwrap());
    let stuck = parse_sequent("Y | X |- X * Y", p).unwrap();
    println!("{stuck}: derivable {}", derive(&stuck, p, &b).unwrap().is_some());
}

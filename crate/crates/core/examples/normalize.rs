//! Focusing as normalization: permuted derivations share a normal form,
//! and rewriting by the oriented equations agrees with it up to focus.
use skew_core::calculus::Derivation as D;
use skew_core::congruence::normalize_rw;
use skew_core::focused::focus;
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::BASE;
    let s = parse_sequent("- | X, Y |- X * Y", p).unwrap();
    let a = D::tensor_r(1, D::pass(D::Ax), D::pass(D::Ax));
    let b = D::pass(D::tensor_r(0, D::Ax, D::pass(D::Ax)));
    let (fa, fb) = (focus(&a, &s, p).unwrap(), focus(&b, &s, p).unwrap());
    println!("{a}\n  focus: {fa}\n{b}\n  focus: {fb}\nsame normal form: {}", fa == fb);
    let r = normalize_rw(&a, &s, 10_000, p).unwrap();
    println!("rewrite normal form of the first: {r}");
}

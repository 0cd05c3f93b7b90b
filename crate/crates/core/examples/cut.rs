//! Admissible cuts: composing derivations and checking the category laws
//! up to focusing.
use skew_core::calculus::{ccut, scut, Derivation as D};
use skew_core::focused::{emb, focus};
use skew_core::search::{derive, SearchBudget};
use skew_core::{parse_sequent, LogicProfile, Sequent};

fn proof(text: &str, p: LogicProfile) -> (D, Sequent) {
    let s = parse_sequent(text, p).unwrap();
    let d = derive(&s, p, &SearchBudget::default()).unwrap().expect("derivable");
    (emb(&d, &s, p), s)
}

fn main() {
    let p = LogicProfile::BASE;
    // associator followed by its skew partner
    let (f, fs) = proof("(X * Y) * Z | . |- X * (Y * Z)", p);
    let (g, gs) = proof("X * (Y * Z) | . |- X * (Y * Z)", p);
    let (h, hs) = scut(&f, &fs, &g, &gs, p).unwrap();
    println!("scut: {hs}\n  {h}\n  focus: {}", focus(&h, &hs, p).unwrap());
    // cutting into the context
    let (a, as_) = proof("- | X, Y |- X * Y", p);
    let (b, bs) = proof("Z | X * Y |- Z * (X * Y)", p);
    let (c, cs) = ccut(&a, &as_, &b, &bs, 0, p).unwrap();
    println!("ccut: {cs}\n  {c}");
    let ax = Sequent::new(Some(fs.succedent.clone()), vec![], fs.succedent.clone());
    let (id, _) = scut(&f, &fs, &D::Ax, &ax, p).unwrap();
    println!("scut(f, ax) = f up to focus: {}", focus(&id, &fs, p).unwrap() == focus(&f, &fs, p).unwrap());
}

//! Deciding equality of derivations, by focusing and by the oracle.
use skew_core::calculus::Derivation as D;
use skew_core::congruence::{equiv, equiv_oracle};
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::BASE;
    let s = parse_sequent("X /\\ Y | . |- X \\/ Y", p).unwrap();
    let left = D::and_l1(D::or_r1(D::Ax));
    let left_permuted = D::or_r1(D::and_l1(D::Ax));
    let right = D::and_l2(D::or_r2(D::Ax));
    for (f, g) in [(&left, &left_permuted), (&left, &right)] {
        println!(
            "{f} vs {g}: focus says {}, oracle says {}",
            equiv(f, g, &s, p).unwrap(),
            equiv_oracle(f, g, &s, p).unwrap()
        );
    }
}

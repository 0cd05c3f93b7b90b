//! Additive units: every derivation into Top, and every derivation out of
//! Bot, is equal to the unit rule.
use skew_core::search::{count_classes, derive, SearchBudget};
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::UNITS;
    let b = SearchBudget::default();
    for text in ["X * Y | Y |- Top", "Bot | X, Y |- X \\/ Y", "X | Y |- Top /\\ (X * Y)"] {
        let s = parse_sequent(text, p).unwrap();
        let d = derive(&s, p, &b).unwrap().expect("derivable");
        println!("{s}: {} classes, first {d}", count_classes(&s, p, &b).unwrap());
    }
}

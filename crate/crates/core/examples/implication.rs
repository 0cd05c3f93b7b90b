//! Linear implication: tags that record context splits of ⊸L.
use skew_core::json::Document;
use skew_core::search::{count_classes, derive, SearchBudget};
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::IMPLICATION;
    let b = SearchBudget::default();
    let s = parse_sequent("I -o I | I, Y |- (I /\\ I) * Y", p).unwrap();
    let d = derive(&s, p, &b).unwrap().expect("derivable");
    println!("{}", Document::focused(&s, p, &d).to_compact());
    // the hypothesis of ⊸L must come from the stoup
    for text in ["X -o Y | X |- Y", "- | X -o Y, X |- Y", "- | X, X -o Y |- Y", "X | . |- (X -o Y) -o Y"] {
        let s = parse_sequent(text, p).unwrap();
        println!("{s}: {} classes", count_classes(&s, p, &b).unwrap());
    }
}

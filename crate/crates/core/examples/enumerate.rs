//! Enumerating focused derivations, one per congruence class, and
//! counting classes both ways.
use skew_core::search::{count_classes, count_classes_oracle, enumerate_focused, enumerate_unfocused, SearchBudget};
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::BASE;
    let b = SearchBudget::default();
    for text in ["- | X, Y |- X * Y", "X /\\ Y | . |- X \\/ Y", "I | . |- I", "X \\/ Y | . |- (X \\/ Y) /\\ (X \\/ Y)"] {
        let s = parse_sequent(text, p).unwrap();
        println!(
            "{s}: {} unfocused derivations, {} classes by focusing, {} by the oracle",
            enumerate_unfocused(&s, p, &b).unwrap().len(),
            count_classes(&s, p, &b).unwrap(),
            count_classes_oracle(&s, p, &b).unwrap()
        );
        for d in enumerate_focused(&s, p, &b).unwrap() {
            println!("  {d}");
        }
    }
}

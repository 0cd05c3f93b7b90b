//! Proof search: finds a focused derivation and prints it with its
//! embedding into the unfocused calculus.
use skew_core::focused::emb;
use skew_core::search::{derive, SearchBudget};
use skew_core::{parse_sequent, LogicProfile};

fn main() {
    let p = LogicProfile::BASE;
    for text in ["(X * Y) * Z | . |- X * (Y * Z)", "X * (Y * Z) | . |- (X * Y) * Z", "X /\\ Y | . |- (X /\\ Y) \\/ Z"] {
        let s = parse_sequent(text, p).unwrap();
        match derive(&s, p, &SearchBudget::default()).unwrap() {
            Some(d) => {
                println!("{s}\n  focused:   {d}\n  unfocused: {}", emb(&d, &s, p));
            }
            None => println!("{s}\n  not derivable"),
        }
    }
}

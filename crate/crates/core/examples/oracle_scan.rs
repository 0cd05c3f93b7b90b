//! Compares focused counts with the brute-force oracle over a corpus.
//!
//! Usage: `oracle_scan [connectives] [context length] [profile]`.
use std::time::Instant;

use skew_core::congruence::EquivClasses;
use skew_core::corpus::sequents;
use skew_core::search::{count_classes, derive, SearchBudget};
use skew_core::LogicProfile;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let max = args.first().map_or(2, |a| a.parse().expect("connectives"));
    let ctx = args.get(1).map_or(2, |a| a.parse().expect("context length"));
    let p: LogicProfile = args.get(2).map_or(Ok(LogicProfile::BASE), |a| a.parse()).expect("profile");
    let budget = SearchBudget::default();
    let t = Instant::now();
    let (mut derivable, mut bad) = (0, 0);
    for s in sequents(&["X", "Y"], max, ctx, p) {
        if derive(&s, p, &budget).unwrap().is_none() {
            continue;
        }
        derivable += 1;
        let focused = count_classes(&s, p, &budget).unwrap();
        let oracle = EquivClasses::build(&s, p, &budget).unwrap().count();
        if focused != oracle {
            bad += 1;
            if bad <= 10 {
                println!("{s}: {focused} focused, {oracle} classes");
            }
        }
    }
    println!("[{p}] {derivable} derivable sequents, {bad} mismatches, {:.1?}", t.elapsed());
}

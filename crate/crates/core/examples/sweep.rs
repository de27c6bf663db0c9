//! Runs every checker over the built-in fleet, printing any report that is
//! not settled and a tally per statement and verdict.

use std::collections::BTreeMap;

use raddeg_core::degrees::{fixture_reports, Theorem, Verdict};
use raddeg_core::fleet::fleet;
use raddeg_core::radical::{RadicalTable, DEFAULT_CAP};

fn main() {
    let mut counts: BTreeMap<(String, Verdict), usize> = BTreeMap::new();
    for fx in fleet().unwrap() {
        let t = RadicalTable::build(&fx.catalogue, DEFAULT_CAP).unwrap();
        for r in fixture_reports(&t, &fx.name, &Theorem::ALL).unwrap() {
            *counts.entry((r.theorem.clone(), r.status)).or_default() += 1;
            if matches!(r.status, Verdict::Violation | Verdict::Inconclusive) {
                println!("{r}");
            }
        }
    }
    for ((th, v), n) in counts {
        println!("{th:>18} {v:>20} {n}");
    }
}

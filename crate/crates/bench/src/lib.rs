//! Inputs shared by the criterion benches.

use raddeg_core::fleet::{species_fixture, truncated_fixture, type_a_fixture, Fixture};
use raddeg_core::Field;

/// Small, medium and larger fixtures, one per shape of algebra.
pub fn fixtures() -> Vec<Fixture> {
    let f2 = Field::gf(2).expect("prime");
    vec![
        truncated_fixture(&f2, 4).expect("k[x]/(x^4)"),
        truncated_fixture(&Field::rationals(), 6).expect("Q[x]/(x^6)"),
        type_a_fixture(&f2, &[true, false, true, false]).expect("A5"),
        species_fixture().expect("species"),
    ]
}

//! Duality `D = Hom_k(-, k)` into modules over the opposite algebra swaps the
//! two radical indices and the two degrees.

use raddeg_core::degrees::{degree, PlacedMorphism, Side};
use raddeg_core::fleet::{orientations, species_fixture, truncated_fixture, type_a_fixture, Fixture};
use raddeg_core::{Catalogue, Field, Module, Morphism, RadicalTable, DEFAULT_CAP};

fn dual_catalogue(c: &Catalogue) -> Catalogue {
    let op = c.algebra().opposite();
    let members: Vec<Module> = c.members().iter().map(Module::dual).collect();
    let labels = c.labels().iter().map(|l| format!("D{l}")).collect();
    Catalogue::validated(&op, members, labels).unwrap()
}

fn fixtures() -> Vec<Fixture> {
    let f2 = Field::gf(2).unwrap();
    let mut out = vec![
        truncated_fixture(&f2, 4).unwrap(),
        truncated_fixture(&Field::rationals(), 3).unwrap(),
        species_fixture().unwrap(),
    ];
    out.extend(orientations(4).iter().map(|o| type_a_fixture(&f2, o).unwrap()));
    out
}

#[test]
fn opposite_of_opposite_is_the_algebra() {
    for fx in fixtures() {
        let a = fx.catalogue.algebra();
        assert!(a.opposite().opposite() == *a, "{}", fx.name);
    }
}

#[test]
fn radical_powers_transpose_under_duality() {
    for fx in fixtures() {
        let t = RadicalTable::build(&fx.catalogue, DEFAULT_CAP).unwrap();
        let d = RadicalTable::build(&dual_catalogue(&fx.catalogue), DEFAULT_CAP).unwrap();
        assert_eq!(t.nilpotency(), d.nilpotency(), "{}", fx.name);
        for m in 0..=t.nilpotency() {
            for i in 0..t.len() {
                for j in 0..t.len() {
                    assert_eq!(t.power_dim(m, i, j), d.power_dim(m, j, i), "{} rad^{m}({i},{j})", fx.name);
                }
            }
        }
    }
}

#[test]
fn duality_swaps_left_and_right_degrees() {
    for fx in fixtures() {
        let t = RadicalTable::build(&fx.catalogue, DEFAULT_CAP).unwrap();
        let dc = dual_catalogue(&fx.catalogue);
        let d = RadicalTable::build(&dc, DEFAULT_CAP).unwrap();
        for i in 0..t.len() {
            for j in 0..t.len() {
                for g in &t.irr(i, j).basis {
                    let dg = Morphism::new(dc.member(j), dc.member(i), g.matrix.transpose()).unwrap();
                    let p = PlacedMorphism::new(&t, g).unwrap();
                    let dp = PlacedMorphism::new(&d, &dg).unwrap();
                    for (side, dual_side) in [(Side::Left, Side::Right), (Side::Right, Side::Left)] {
                        assert_eq!(
                            degree(&t, &p, side).unwrap().value,
                            degree(&d, &dp, dual_side).unwrap().value,
                            "{} {} {:?}",
                            fx.name,
                            p.describe(&t),
                            side
                        );
                    }
                }
            }
        }
    }
}

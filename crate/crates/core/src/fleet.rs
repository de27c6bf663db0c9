//! Built-in algebras and catalogues used as fixtures.

use crate::algebra::{Algebra, Arrow, QuiverPresentation};
use crate::catalogue::Catalogue;
use crate::error::Result;
use crate::field::{Field, Scalar};

/// `k[x]/(x^n)` as the path algebra of a loop.
pub fn truncated_polynomial(field: &Field, n: usize) -> Result<Algebra> {
    let pres = QuiverPresentation {
        vertices: vec!["1".into()],
        arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
        relations: vec![vec![(field.one(), vec![0; n])]],
        nilpotency_cap: n,
    };
    Algebra::from_path_algebra(field, &pres)
}

/// Type `A_n` quiver on vertices `1..n`; `forward[i]` orients the `i`-th edge
/// as `i+1 -> i+2`, otherwise `i+2 -> i+1`. Arrows are named `a, b, c, ...`.
pub fn linear_quiver(n: usize, forward: &[bool]) -> QuiverPresentation {
    assert_eq!(forward.len() + 1, n.max(1));
    QuiverPresentation {
        vertices: (1..=n).map(|i| i.to_string()).collect(),
        arrows: forward
            .iter()
            .enumerate()
            .map(|(i, &fw)| {
                let name = ((b'a' + i as u8) as char).to_string();
                let (source, target) = if fw { (i, i + 1) } else { (i + 1, i) };
                Arrow { name, source, target }
            })
            .collect(),
        relations: Vec::new(),
        nilpotency_cap: n.max(2),
    }
}

pub fn type_a(field: &Field, forward: &[bool]) -> Result<Algebra> {
    Algebra::from_path_algebra(field, &linear_quiver(forward.len() + 1, forward))
}

/// `">"` for a forward edge and `"<"` for a backward one.
pub fn orientation_word(forward: &[bool]) -> String {
    forward.iter().map(|&f| if f { '>' } else { '<' }).collect()
}

/// All `2^(n-1)` orientations of `A_n`.
pub fn orientations(n: usize) -> Vec<Vec<bool>> {
    let k = n.saturating_sub(1);
    (0..1u32 << k)
        .map(|mask| (0..k).map(|i| mask & (1 << (k - 1 - i)) == 0).collect())
        .collect()
}

/// The upper triangular algebra `[[GF(4), GF(4)], [0, GF(2)]]` over GF(2),
/// basis `(1, w)` in the two GF(4) slots and `1` in the corner, with the
/// diagonal matrix units as idempotents.
pub fn species() -> Result<Algebra> {
    let f2 = Field::gf(2)?;
    let f4 = Field::gf_pow(2, 2)?;
    let w = f4.generator();
    // Element as (x11, x12, x22) with x22 in the prime field.
    let basis: Vec<(Scalar, Scalar, Scalar)> = vec![
        (f4.one(), f4.zero(), f4.zero()),
        (w.clone(), f4.zero(), f4.zero()),
        (f4.zero(), f4.one(), f4.zero()),
        (f4.zero(), w.clone(), f4.zero()),
        (f4.zero(), f4.zero(), f4.one()),
    ];
    let coords = |x: &(Scalar, Scalar, Scalar)| -> Vec<Scalar> {
        let mut out = Vec::with_capacity(5);
        for slot in [&x.0, &x.1] {
            let c = f4.coeffs(slot);
            out.push(f2.from_i64(c[0] as i64));
            out.push(f2.from_i64(c.get(1).copied().unwrap_or(0) as i64));
        }
        out.push(f2.from_i64(f4.coeffs(&x.2)[0] as i64));
        out
    };
    let mult = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|c| {
                    let p = (
                        f4.mul(&a.0, &c.0),
                        f4.add(&f4.mul(&a.0, &c.1), &f4.mul(&a.1, &c.2)),
                        f4.mul(&a.2, &c.2),
                    );
                    coords(&p)
                })
                .collect()
        })
        .collect();
    let one = |i: usize| (0..5).map(|k| if k == i { f2.one() } else { f2.zero() }).collect::<Vec<_>>();
    let unit: Vec<Scalar> = (0..5).map(|k| if k == 0 || k == 4 { f2.one() } else { f2.zero() }).collect();
    let labels = ["e1", "w11", "u12", "w12", "e2"].iter().map(|s| s.to_string()).collect();
    Algebra::from_structure_constants_with(&f2, mult, unit, labels, Some(vec![one(0), one(4)]))
}

/// The four indecomposables over [`species`]: `S2`, `P1`, `P1/S2`, `S1`.
pub fn species_catalogue(a: &Algebra) -> Result<Catalogue> {
    let basic = a.basic_modules()?;
    let p1 = basic.projectives[0].clone();
    let s2 = basic.projectives[1].clone();
    let s1 = basic.simples[0].clone();
    let u12 = a.basis_vector(2);
    let line = basic.projective_bases[0]
        .coordinates(&u12)
        .expect("u12 lies in e1 A");
    let sub = p1.generated_subspace(vec![line]);
    let (q, _) = p1.quotient(&sub)?;
    Catalogue::validated(
        a,
        vec![s2, p1, q, s1],
        ["S2", "P1", "P1/S2", "S1"].iter().map(|s| s.to_string()).collect(),
    )
}

/// A named algebra with a complete catalogue.
#[derive(Clone, Debug)]
pub struct Fixture {
    pub name: String,
    pub catalogue: Catalogue,
}

pub fn truncated_fixture(field: &Field, n: usize) -> Result<Fixture> {
    let a = truncated_polynomial(field, n)?;
    Ok(Fixture {
        name: format!("k[x]/(x^{n}) over {field}"),
        catalogue: Catalogue::nakayama(&a)?,
    })
}

pub fn type_a_fixture(field: &Field, forward: &[bool]) -> Result<Fixture> {
    let a = type_a(field, forward)?;
    Ok(Fixture {
        name: format!("A{}[{}] over {field}", forward.len() + 1, orientation_word(forward)),
        catalogue: Catalogue::type_a(&a)?,
    })
}

pub fn species_fixture() -> Result<Fixture> {
    let a = species()?;
    Ok(Fixture {
        name: "species GF(4)/GF(2)".into(),
        catalogue: species_catalogue(&a)?,
    })
}

/// The full test fleet: `k[x]/(x^n)` for `2 <= n <= 6` over GF(2), GF(3)
/// and the rationals; `A_n` for `2 <= n <= 5` in every orientation over
/// GF(2); the species algebra.
pub fn fleet() -> Result<Vec<Fixture>> {
    let mut out = Vec::new();
    for field in [Field::gf(2)?, Field::gf(3)?, Field::rationals()] {
        for n in 2..=6 {
            out.push(truncated_fixture(&field, n)?);
        }
    }
    let f2 = Field::gf(2)?;
    for n in 2..=5 {
        for o in orientations(n) {
            out.push(type_a_fixture(&f2, &o)?);
        }
    }
    out.push(species_fixture()?);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ar::completeness_check;
    use crate::module::Module;

    #[test]
    fn species_shape() {
        let a = species().unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.radical().dim(), 2);
        let c = species_catalogue(&a).unwrap();
        let dims: Vec<usize> = c.members().iter().map(Module::dim).collect();
        assert_eq!(dims, vec![1, 4, 3, 2]);
        let kappa: Vec<usize> = c.members().iter().map(Module::residue_dim).collect();
        assert_eq!(kappa, vec![1, 2, 1, 2]);
        assert!(completeness_check(&c).unwrap().is_complete());
    }

    #[test]
    fn orientation_enumeration() {
        assert_eq!(orientations(1), vec![Vec::<bool>::new()]);
        assert_eq!(orientations(3).len(), 4);
        assert_eq!(orientation_word(&orientations(3)[0]), ">>");
    }
}

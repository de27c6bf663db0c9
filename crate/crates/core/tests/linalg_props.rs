use proptest::prelude::*;
use raddeg_core::{ExactMatrix, Field, SubspaceBasis};

fn field(k: u8) -> Field {
    match k {
        0 => Field::gf(2).unwrap(),
        1 => Field::gf(5).unwrap(),
        2 => Field::gf_pow(2, 2).unwrap(),
        _ => Field::rationals(),
    }
}

fn matrix(f: &Field, rows: usize, cols: usize, entries: &[i64]) -> ExactMatrix {
    let data = entries.iter().take(rows * cols).map(|&x| f.from_i64(x)).collect();
    ExactMatrix::from_data(f, rows, cols, data).unwrap()
}

fn shaped() -> impl Strategy<Value = (u8, usize, usize, Vec<i64>)> {
    (0u8..4, 1usize..6, 1usize..6).prop_flat_map(|(k, r, c)| (Just(k), Just(r), Just(c), prop::collection::vec(-3i64..4, r * c)))
}

proptest! {
    #[test]
    fn rank_nullity((k, r, c, e) in shaped()) {
        let f = field(k);
        let a = matrix(&f, r, c, &e);
        let ker = a.kernel_basis();
        prop_assert_eq!(a.rank() + ker.dim(), r);
        for v in ker.vectors() {
            prop_assert!(a.vec_mul(&v).iter().all(|x| f.is_zero(x)));
        }
        prop_assert_eq!(a.rank(), a.transpose().rank());
    }

    #[test]
    fn inverse_round_trip((k, n, _c, e) in shaped()) {
        let f = field(k);
        let a = matrix(&f, n, n, &e.iter().cycle().take(n * n).copied().collect::<Vec<_>>());
        match a.inverse() {
            Some(b) => {
                prop_assert!(a.mul(&b).is_identity());
                prop_assert!(b.mul(&a).is_identity());
            }
            None => prop_assert!(a.rank() < n),
        }
    }

    #[test]
    fn solve_finds_preimages((k, r, c, e) in shaped(), x in prop::collection::vec(-3i64..4, 6)) {
        let f = field(k);
        let a = matrix(&f, r, c, &e);
        let x: Vec<_> = x.iter().take(r).map(|&v| f.from_i64(v)).collect();
        let b = a.vec_mul(&x);
        let y = a.solve(&b).unwrap().expect("b lies in the row space");
        prop_assert_eq!(a.vec_mul(&y), b);
    }

    #[test]
    fn subspace_dimension_formula((k, _r, c, e) in shaped(), g in prop::collection::vec(-3i64..4, 25)) {
        let f = field(k);
        let rows = |src: &[i64]| -> Vec<Vec<_>> { src.chunks(c).filter(|ch| ch.len() == c).map(|ch| ch.iter().map(|&x| f.from_i64(x)).collect()).collect() };
        let u = SubspaceBasis::from_vectors(&f, c, rows(&e));
        let w = SubspaceBasis::from_vectors(&f, c, rows(&g));
        let sum = u.sum(&w).unwrap();
        let meet = u.intersect(&w).unwrap();
        prop_assert_eq!(sum.dim() + meet.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains_subspace(&u) && u.contains_subspace(&meet) && w.contains_subspace(&meet));
        for v in u.vectors() {
            let coords = u.coordinates(&v).unwrap();
            prop_assert_eq!(u.from_coordinates(&coords), v);
        }
    }

    #[test]
    fn multiplication_is_associative((k, n, _c, e) in shaped()) {
        let f = field(k);
        let take = |off: usize| -> Vec<i64> { e.iter().cycle().skip(off).take(n * n).copied().collect() };
        let (a, b, c) = (matrix(&f, n, n, &take(0)), matrix(&f, n, n, &take(1)), matrix(&f, n, n, &take(2)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
    }
}

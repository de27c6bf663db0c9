use super::*;
use crate::catalogue::Catalogue;
use crate::fleet::{species_fixture, truncated_fixture, type_a_fixture};
use crate::radical::DEFAULT_CAP;

fn truncated(n: usize) -> RadicalTable {
    let f = Field::gf(2).unwrap();
    let c = truncated_fixture(&f, n).unwrap().catalogue;
    RadicalTable::build(&c, DEFAULT_CAP).unwrap()
}

fn table(c: &Catalogue) -> RadicalTable {
    RadicalTable::build(c, DEFAULT_CAP).unwrap()
}

fn irr(t: &RadicalTable, i: usize, j: usize) -> PlacedMorphism {
    let g = &t.irr(i, j).basis[0];
    PlacedMorphism::between(t, t.member_endpoint(i), t.member_endpoint(j), g.matrix.clone()).unwrap()
}

fn assert_verified(r: &TheoremReport) {
    assert_eq!(r.status, Verdict::Verified, "{r}");
}

// members of k[x]/(x^n): M1, ..., Mn at indices 0..n

#[test]
fn dual_number_degrees() {
    let t = truncated(2);
    let pi = irr(&t, 1, 0);
    let d = degree(&t, &pi, Side::Left).unwrap();
    assert_eq!(d.value, Level::Finite(1));
    let w = d.witness.unwrap();
    assert_eq!(w.label, "M1");
    assert_eq!(w.level, 1);
    let iota = irr(&t, 0, 1);
    assert_eq!(degree(&t, &iota, Side::Left).unwrap().value, Level::InfiniteAtBound);
    assert_eq!(degree(&t, &iota, Side::Right).unwrap().value, Level::Finite(1));
    assert_eq!(degree(&t, &pi, Side::Right).unwrap().value, Level::InfiniteAtBound);
}

#[test]
fn truncated_cubic_epi() {
    let t = truncated(3);
    let f = irr(&t, 2, 1);
    assert_eq!(degree(&t, &f, Side::Left).unwrap().value, Level::Finite(2));
    let g = depth_graded_kernel_decomposition(&t, &f).unwrap();
    assert_eq!(g.summands.len(), 1);
    assert_eq!(g.summands[0].label, "M1");
    assert_eq!(g.depth(), Level::Finite(2));
    let p = find_kernel_path(&t, &f).unwrap();
    assert_eq!(p.labels, vec!["M1", "M2", "M3"]);
}

#[test]
fn zero_map_kernel_has_depth_zero() {
    let t = truncated(3);
    let c = t.catalogue();
    let m = c.member(1);
    let zero = Module::zero(c.algebra());
    let f = Morphism::zero(m, &zero);
    let p = PlacedMorphism::new(&t, &f).unwrap();
    let g = depth_graded_kernel_decomposition(&t, &p).unwrap();
    assert_eq!(g.depth(), Level::Finite(0));
}

#[test]
fn zero_morphism_has_no_degree() {
    let t = truncated(2);
    let f = PlacedMorphism::from_coords(&t, 1, 0, &[t.field().zero()]);
    assert!(matches!(degree(&t, &f, Side::Left), Err(Error::ZeroMorphism)));
}

#[test]
fn theorem_b_examples() {
    let t = truncated(2);
    let r = theorem_b_report(&t, &irr(&t, 1, 0)).unwrap();
    assert_verified(&r);
    let r = theorem_b_report(&t, &irr(&t, 0, 1)).unwrap();
    assert_eq!(r.status, Verdict::HypothesisNotMet);
    let t = truncated(3);
    assert_verified(&theorem_b_report(&t, &irr(&t, 2, 1)).unwrap());
}

#[test]
fn graded_sequences() {
    let t = truncated(2);
    assert_verified(&graded_kernel_sequence_report(&t, &irr(&t, 1, 0), Some(1..2)).unwrap());
    let r = graded_kernel_sequence_report(&t, &irr(&t, 0, 1), None).unwrap();
    assert_eq!(r.status, Verdict::HypothesisNotMet);
    assert_eq!(r.conclusions.last().unwrap().holds, Some(true));
    let t = truncated(3);
    assert_verified(&graded_kernel_sequence_report(&t, &irr(&t, 2, 1), Some(2..5)).unwrap());
}

#[test]
fn corollaries_on_truncated_cubic() {
    let t = truncated(3);
    for (i, j) in [(0, 1), (1, 0), (1, 2), (2, 1)] {
        let f = irr(&t, i, j);
        assert_verified(&degree_kernel_equivalence_check(&t, &f).unwrap());
        assert_verified(&mono_epi_degree_check(&t, &f).unwrap());
    }
}

#[test]
fn shift_and_kernel_iso() {
    let t = truncated(3);
    let seqs = ar_sequences(&t).unwrap();
    assert_verified(&degree_shift_check(&t, 1, seqs[1].as_ref()).unwrap());
    let f1 = irr(&t, 2, 1);
    // add a depth-two map M3 -> M2
    let deep = t.power(2, 2, 1);
    let mut coords = f1.components[0][0].clone();
    let field = t.field();
    for (c, d) in coords.iter_mut().zip(deep.vector(0)) {
        *c = field.add(c, d);
    }
    let f2 = PlacedMorphism::from_coords(&t, 2, 1, &coords);
    assert_verified(&kernel_iso_check(&t, &f1, &f2).unwrap());
}

#[test]
fn path_reports_over_dual_numbers() {
    let t = truncated(2);
    let iota = PathStep::new(0, 1, t.member_coords(0, 1, &t.irr(0, 1).basis[0].matrix).unwrap());
    let pi = PathStep::new(1, 0, t.member_coords(1, 0, &t.irr(1, 0).basis[0].matrix).unwrap());
    let r = path_composition_report(&t, &[iota.clone(), pi.clone()]).unwrap();
    assert_verified(&r);
    assert_eq!(r.conclusion("composite depth").unwrap().data["holds"], true);
    let r = path_composition_report(&t, &[pi, iota]).unwrap();
    assert_verified(&r);
    assert_eq!(r.conclusion("composite depth").unwrap().data["holds"], false);
    assert_eq!(r.conclusion("(i) <=> (ii)").unwrap().data["ii"], false);
}

#[test]
fn species_path_counterexample() {
    let c = species_fixture().unwrap().catalogue;
    let t = table(&c);
    // S2 -> P1 -> P1/S2, with f' chosen so that f'g is nonzero
    let g = PathStep::new(1, 2, t.member_coords(1, 2, &t.irr(1, 2).basis[0].matrix).unwrap());
    let gm = g.matrix(&t);
    let f = t.irr(0, 1)
        .basis
        .iter()
        .find(|b| !b.matrix.mul(&gm).is_zero())
        .map(|b| PathStep::new(0, 1, t.member_coords(0, 1, &b.matrix).unwrap()))
        .unwrap();
    let r = path_composition_report(&t, &[f, g]).unwrap();
    assert_ne!(r.status, Verdict::Violation, "{r}");
    let depth = &r.conclusion("composite depth").unwrap().data;
    assert_eq!(depth["composite_depth"], 2);
    assert_eq!(depth["holds"], false);
    let iii = &r.conclusion("(iii) => (i) when irr spaces are one-dimensional").unwrap().data;
    assert_eq!(iii["iii"], true);
    assert_eq!(iii["applies"], false);
    assert!(!r.conclusion("remark: zero path with one-dimensional irr spaces").unwrap().data["parallel_zero_path"].is_null());
}

#[test]
fn species_freeness_and_residues() {
    let c = species_fixture().unwrap().catalogue;
    let t = table(&c);
    assert!(freely_irreducible_check(&t, &irr(&t, 0, 1)).unwrap());
    // (f, f v) into P1 + P1 with v a non-scalar residue of P1
    let f = &t.irr(0, 1).basis[0].matrix;
    let v = t.hom(1, 1).basis().into_iter().find(|m| m.matrix != c.member(1).identity().matrix).unwrap();
    let uf = f.mul(&v.matrix);
    let tgt = sum_endpoint(&t, &[1, 1]).unwrap();
    let p = PlacedMorphism::between(&t, t.member_endpoint(0), tgt, f.hstack(&uf)).unwrap();
    assert!(p.is_irreducible());
    assert!(!freely_irreducible_check(&t, &p).unwrap());
    let seqs = ar_sequences(&t).unwrap();
    for (y, s) in seqs.iter().enumerate() {
        let r = degree_shift_check(&t, y, s.as_ref()).unwrap();
        assert_ne!(r.status, Verdict::Violation, "{r}");
    }
    let g = irr(&t, 0, 1);
    let r = kernel_iso_check(&t, &g, &g).unwrap();
    assert_eq!(r.status, Verdict::HypothesisNotMet);
}

#[test]
fn finite_type_on_small_fixtures() {
    let f2 = Field::gf(2).unwrap();
    for c in [truncated_fixture(&f2, 3).unwrap().catalogue, type_a_fixture(&f2, &[true]).unwrap().catalogue] {
        let t = table(&c);
        let seqs = ar_sequences(&t).unwrap();
        let fam = irreducible_family(&t, &seqs).unwrap();
        let r = finite_type_report(&t, &fam).unwrap();
        assert_verified(&r);
    }
}

#[test]
fn kernel_comparison_at_a_sink() {
    let f2 = Field::gf(2).unwrap();
    let c = type_a_fixture(&f2, &[true, false]).unwrap().catalogue;
    let t = table(&c);
    let seqs = ar_sequences(&t).unwrap();
    let fam = irreducible_family(&t, &seqs).unwrap();
    let q = fam
        .iter()
        .find(|m| matches!(m.kind, FamilyKind::InjectiveQuotient { full: true, .. }) && m.placed.target.parts.len() == 2)
        .expect("decomposable socle quotient");
    let (a, b) = split_target(&t, &q.placed).unwrap().unwrap();
    assert_verified(&kernel_comparison_check(&t, &a, &b).unwrap());
    let zero = Morphism::zero(&a.source, &Module::zero(c.algebra()));
    assert!(matches!(kernel_comparison_check(&t, &a, &zero), Err(Error::Precondition(_))));
}

#[test]
fn theorem_names_round_trip() {
    for th in Theorem::ALL {
        assert_eq!(th.name().parse::<Theorem>().unwrap(), th);
    }
    assert!("Z".parse::<Theorem>().is_err());
}

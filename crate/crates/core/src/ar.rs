//! Auslander-Reiten translate, almost split sequences and the AR quiver.
//!
//! `tau = D Tr`, where `Tr M` is the cokernel of `Hom(P0, A) -> Hom(P1, A)`
//! for a minimal projective presentation `P1 -> P0 -> M`. Almost split
//! sequences are built from a socle class of `Ext^1(M, tau M)` and then
//! certified against the catalogue by factorization tests.

use rayon::prelude::*;

use crate::catalogue::Catalogue;
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::{ExactMatrix, QuotientSpace, Solver, SubspaceBasis};
use crate::module::{HomSpace, Module, Morphism};
use crate::radical::RadicalTable;

/// A projective cover `P -> M` with the indices of the indecomposable
/// projectives making up `P`, in order.
#[derive(Clone, Debug)]
pub struct ProjectiveCover {
    pub cover: Module,
    pub parts: Vec<usize>,
    pub map: Morphism,
}

/// `P1 -> P0 -> M -> 0` with `Omega = ker(P0 -> M)`.
#[derive(Clone, Debug)]
pub struct Presentation {
    pub p0: ProjectiveCover,
    pub omega: Morphism,
    pub p1: ProjectiveCover,
    /// `P1 -> P0`.
    pub map: Morphism,
}

/// Projective cover built from greedily chosen top generators `v` in `M e_i`.
pub fn projective_cover(m: &Module) -> Result<ProjectiveCover> {
    let a = m.algebra();
    let f = m.field();
    let basic = a.basic_modules()?;
    let idems = a.primitive_idempotents()?;
    let mut w = m.radical_subspace();
    let mut gens: Vec<(usize, Vec<Scalar>)> = Vec::new();
    for (i, e) in idems.iter().enumerate() {
        for v in m.act_by(e).row_space().vectors() {
            if !w.contains(&v) {
                w = w.sum(&m.generated_subspace(vec![v.clone()]))?;
                gens.push((i, v));
            }
        }
    }
    debug_assert!(w.is_full());
    let parts: Vec<usize> = gens.iter().map(|(i, _)| *i).collect();
    let pieces: Vec<Module> = parts.iter().map(|&i| basic.projectives[i].clone()).collect();
    let (cover, _, _) = Module::direct_sum(a, &pieces)?;
    let mut rows = Vec::with_capacity(cover.dim());
    for (i, v) in &gens {
        for b in basic.projective_bases[*i].vectors() {
            rows.push(m.act_by(&b).vec_mul(v));
        }
    }
    let map = Morphism::new_unchecked(&cover, m, ExactMatrix::from_rows(f, m.dim(), rows)?);
    Ok(ProjectiveCover { cover, parts, map })
}

pub fn minimal_presentation(m: &Module) -> Result<Presentation> {
    let p0 = projective_cover(m)?;
    let (_, omega) = p0.map.kernel();
    let p1 = projective_cover(&omega.source)?;
    let map = p1.map.then(&omega);
    Ok(Presentation { p0, omega, p1, map })
}

/// `Hom_A(P, A_A)` as a right module over the opposite algebra,
/// `phi . a = (x -> a phi(x))`.
fn dual_hom_module(p: &Module) -> Result<(HomSpace, Module)> {
    let a = p.algebra();
    let reg = Module::regular(a);
    let h = HomSpace::new(p, &reg)?;
    let op = a.opposite();
    let f = a.field();
    let mut action = Vec::with_capacity(a.dim());
    for k in 0..a.dim() {
        let l = a.left_mult_matrix(&a.basis_vector(k));
        let rows = (0..h.dim())
            .map(|r| h.coordinates(&h.basis_matrix(r).mul(&l)).expect("left multiplication is A-linear"))
            .collect();
        action.push(ExactMatrix::from_rows(f, h.dim(), rows)?);
    }
    let module = Module::new_unchecked(&op, h.dim(), action);
    Ok((h, module))
}

/// `Tr M` over the opposite algebra.
pub fn transpose(m: &Module) -> Result<Module> {
    let pres = minimal_presentation(m)?;
    let (h0, d0) = dual_hom_module(&pres.p0.cover)?;
    let (h1, d1) = dual_hom_module(&pres.p1.cover)?;
    let rows = (0..h0.dim())
        .map(|r| {
            h1.coordinates(&pres.map.matrix.mul(&h0.basis_matrix(r)))
                .expect("precomposition gives a morphism")
        })
        .collect();
    let alpha = Morphism::new_unchecked(&d0, &d1, ExactMatrix::from_rows(m.field(), h1.dim(), rows)?);
    Ok(alpha.cokernel().0)
}

/// `tau M = D Tr M`.
pub fn tau(m: &Module) -> Result<Module> {
    if m.is_projective()? {
        return Err(Error::IsProjective);
    }
    transpose(m)?.dual().rehome(m.algebra())
}

/// `tau^{-1} M = Tr D M`.
pub fn tau_inverse(m: &Module) -> Result<Module> {
    if m.is_injective()? {
        return Err(Error::IsInjective);
    }
    transpose(&m.dual())?.rehome(m.algebra())
}

/// Induced map out of a cokernel: the `g` with `q g = f`, where `q` is onto
/// and `f` vanishes on `ker q`.
pub fn descend(q: &Morphism, f: &Morphism) -> Result<Morphism> {
    let solver = Solver::new(&q.matrix);
    let field = q.field();
    let n = q.target.dim();
    let mut rows = Vec::with_capacity(n);
    for e in 0..n {
        let mut unit = vec![field.zero(); n];
        unit[e] = field.one();
        let s = solver
            .solve(&unit)
            .ok_or_else(|| Error::Precondition("map is not onto".into()))?;
        rows.push(f.matrix.vec_mul(&s));
    }
    let g = Morphism::new_unchecked(&q.target, &f.target, ExactMatrix::from_rows(field, f.target.dim(), rows)?);
    if q.matrix.mul(&g.matrix) != f.matrix {
        return Err(Error::Precondition("map does not vanish on the kernel".into()));
    }
    Ok(g)
}

/// Same as [`descend`] on the other side: the `g` with `g i = f` for a mono `i`
/// whose image contains the image of `f`.
pub fn lift_through_mono(i: &Morphism, f: &Morphism) -> Result<Morphism> {
    let solver = Solver::new(&i.matrix);
    let rows = f
        .matrix
        .row_iter()
        .map(|r| solver.solve(r).ok_or(Error::NotAMorphism))
        .collect::<Result<Vec<_>>>()?;
    Ok(Morphism::new_unchecked(
        &f.source,
        &i.source,
        ExactMatrix::from_rows(f.field(), i.source.dim(), rows)?,
    ))
}

/// `Ext^1(M, N)` as `Hom(Omega, N)` modulo maps factoring through `P0`.
#[derive(Clone, Debug)]
pub struct ExtSpace {
    pub presentation: Presentation,
    pub target: Module,
    pub hom: HomSpace,
    pub quotient: QuotientSpace,
}

impl ExtSpace {
    pub fn new(m: &Module, n: &Module) -> Result<ExtSpace> {
        let presentation = minimal_presentation(m)?;
        let omega = presentation.omega.source.clone();
        let hom = HomSpace::new(&omega, n)?;
        let through = HomSpace::new(&presentation.p0.cover, n)?;
        let vecs = (0..through.dim())
            .map(|r| {
                hom.coordinates(&presentation.omega.matrix.mul(&through.basis_matrix(r)))
                    .expect("restriction is a morphism")
            })
            .collect();
        let sub = SubspaceBasis::from_vectors(m.field(), hom.dim(), vecs);
        let full = SubspaceBasis::full(m.field(), hom.dim());
        let quotient = QuotientSpace::new(&full, &sub);
        Ok(ExtSpace {
            presentation,
            target: n.clone(),
            hom,
            quotient,
        })
    }

    pub fn dim(&self) -> usize {
        self.quotient.dim()
    }

    /// Classes killed by `J(End N)` acting by post-composition, in Ext
    /// coordinates.
    pub fn socle(&self) -> SubspaceBasis {
        let f = self.target.field();
        let d = self.dim();
        let jn = self.target.end_radical();
        let nd = self.target.dim();
        let rads: Vec<ExactMatrix> = jn
            .vectors()
            .into_iter()
            .map(|v| ExactMatrix::reshape(f, nd, nd, v))
            .collect();
        let mut m = ExactMatrix::zeros(f, d, 0);
        for r in &rads {
            let rows = self
                .quotient
                .representatives()
                .iter()
                .map(|rep| {
                    let psi = self.hom.combination(rep).mul(r);
                    self.quotient
                        .coords(&self.hom.coordinates(&psi).expect("composite is a morphism"))
                        .expect("full space")
                })
                .collect();
            m = m.hstack(&ExactMatrix::from_rows(f, d, rows).expect("sizes"));
        }
        if rads.is_empty() {
            SubspaceBasis::full(f, d)
        } else {
            m.kernel_basis()
        }
    }

    /// The extension `0 -> N -> E -> M -> 0` of a class given in Ext
    /// coordinates, as a pushout along `Omega -> P0`.
    pub fn extension(&self, class: &[Scalar]) -> Result<(Module, Morphism, Morphism)> {
        let p = &self.presentation;
        let n = &self.target;
        let a = n.algebra();
        let psi = self.hom.combination(&self.quotient.representative(class));
        let (sum, inj, _) = Module::direct_sum(a, &[n.clone(), p.p0.cover.clone()])?;
        let minus = n.field().from_i64(-1);
        let gluing = psi.hstack(&p.omega.matrix.scale(&minus));
        let glue = Morphism::new_unchecked(&p.omega.source, &sum, gluing);
        let (e, q) = glue.cokernel();
        let inject = inj[0].then(&q);
        let to_m = Morphism::new_unchecked(
            &sum,
            &p.p0.map.target,
            ExactMatrix::zeros(n.field(), n.dim(), p.p0.map.target.dim()).vstack(&p.p0.map.matrix),
        );
        let project = descend(&q, &to_m)?;
        Ok((e, inject, project))
    }
}

#[derive(Clone, Debug)]
pub struct AlmostSplitSequence {
    pub left: Module,
    pub middle: Module,
    pub right: Module,
    pub inject: Morphism,
    pub project: Morphism,
    /// Catalogue members of the middle term with multiplicities, in
    /// catalogue order.
    pub middle_members: Vec<(usize, usize)>,
}

/// Members of `Hom(Z, target)` that must factor through a right almost split
/// map: everything for `Z` not isomorphic to the target, the radical of the
/// endomorphism ring otherwise.
fn right_test_maps(z: &Module, target: &Module, same: bool) -> Result<Vec<ExactMatrix>> {
    if same {
        let f = target.field();
        let d = target.dim();
        Ok(target
            .end_radical()
            .vectors()
            .into_iter()
            .map(|v| ExactMatrix::reshape(f, d, d, v))
            .collect())
    } else {
        let h = HomSpace::new(z, target)?;
        Ok((0..h.dim()).map(|k| h.basis_matrix(k)).collect())
    }
}

/// Span of `{ h g : h in Hom(Z, E) }` as flattened matrices.
fn precomposition_span(z: &Module, g: &Morphism) -> Result<SubspaceBasis> {
    let h = HomSpace::new(z, &g.source)?;
    let vecs = (0..h.dim()).map(|k| h.basis_matrix(k).mul(&g.matrix).flatten()).collect();
    Ok(SubspaceBasis::from_vectors(z.field(), z.dim() * g.target.dim(), vecs))
}

/// Span of `{ j h : h in Hom(E, Z) }` as flattened matrices.
fn postcomposition_span(j: &Morphism, z: &Module) -> Result<SubspaceBasis> {
    let h = HomSpace::new(&j.target, z)?;
    let vecs = (0..h.dim()).map(|k| j.matrix.mul(&h.basis_matrix(k)).flatten()).collect();
    Ok(SubspaceBasis::from_vectors(z.field(), j.source.dim() * z.dim(), vecs))
}

/// `g: E -> M` with `M` indecomposable is right almost split: not a
/// retraction, and every non-retraction from a catalogue member factors
/// through it.
pub fn is_right_almost_split(c: &Catalogue, g: &Morphism) -> Result<bool> {
    let m = &g.target;
    if m.is_zero() {
        return Ok(false);
    }
    let id = ExactMatrix::identity(m.field(), m.dim());
    if precomposition_span(m, g)?.contains(id.data()) {
        return Ok(false);
    }
    let own = c.find(m)?.map(|(i, _)| i);
    let ok: Result<Vec<bool>> = (0..c.len())
        .into_par_iter()
        .map(|i| {
            let same = own == Some(i);
            let z = if same { m } else { c.member(i) };
            let span = precomposition_span(z, g)?;
            Ok(right_test_maps(z, m, same)?.iter().all(|t| span.contains(t.data())))
        })
        .collect();
    let mut ok = ok?.into_iter().all(|b| b);
    if ok && own.is_none() {
        ok = right_test_maps(m, m, true)?
            .iter()
            .all(|t| precomposition_span(m, g).map(|s| s.contains(t.data())).unwrap_or(false));
    }
    Ok(ok)
}

/// Dual of [`is_right_almost_split`] for `j: N -> E`.
pub fn is_left_almost_split(c: &Catalogue, j: &Morphism) -> Result<bool> {
    let n = &j.source;
    if n.is_zero() {
        return Ok(false);
    }
    let id = ExactMatrix::identity(n.field(), n.dim());
    if postcomposition_span(j, n)?.contains(id.data()) {
        return Ok(false);
    }
    let own = c.find(n)?.map(|(i, _)| i);
    let left_tests = |z: &Module, same: bool| -> Result<Vec<ExactMatrix>> {
        if same {
            right_test_maps(n, n, true)
        } else {
            let h = HomSpace::new(n, z)?;
            Ok((0..h.dim()).map(|k| h.basis_matrix(k)).collect())
        }
    };
    let ok: Result<Vec<bool>> = (0..c.len())
        .into_par_iter()
        .map(|i| {
            let same = own == Some(i);
            let z = if same { n } else { c.member(i) };
            let span = postcomposition_span(j, z)?;
            Ok(left_tests(z, same)?.iter().all(|t| span.contains(t.data())))
        })
        .collect();
    let mut ok = ok?.into_iter().all(|b| b);
    if ok && own.is_none() {
        let span = postcomposition_span(j, n)?;
        ok = left_tests(n, true)?.iter().all(|t| span.contains(t.data()));
    }
    Ok(ok)
}

/// Catalogue members of a module with multiplicities, in catalogue order.
pub fn member_multiplicities(c: &Catalogue, m: &Module) -> Result<Vec<(usize, usize)>> {
    let mut counts = vec![0usize; c.len()];
    for s in m.decompose()? {
        let (i, _) = c.find(&s.module)?.ok_or(Error::NotInCatalogue(s.module.dim()))?;
        counts[i] += 1;
    }
    Ok(counts.into_iter().enumerate().filter(|&(_, k)| k > 0).collect())
}

/// The almost split sequence ending at a non-projective indecomposable `m`.
pub fn almost_split_sequence(c: &Catalogue, m: &Module) -> Result<AlmostSplitSequence> {
    let m = m.rehome(c.algebra())?;
    let left = tau(&m)?;
    let ext = ExtSpace::new(&m, &left)?;
    if ext.dim() == 0 {
        return Err(Error::CertificationFailed("Ext^1(M, tau M) is zero".into()));
    }
    let socle = ext.socle();
    let mut candidates = socle.vectors();
    // Fall back to the other basis classes if no socle class certifies.
    for k in 0..ext.dim() {
        let mut v = vec![m.field().zero(); ext.dim()];
        v[k] = m.field().one();
        if !candidates.contains(&v) {
            candidates.push(v);
        }
    }
    for class in candidates {
        let (middle, inject, project) = ext.extension(&class)?;
        if is_right_almost_split(c, &project)? && is_left_almost_split(c, &inject)? {
            let middle_members = member_multiplicities(c, &middle)?;
            return Ok(AlmostSplitSequence {
                left,
                middle,
                right: m,
                inject,
                project,
                middle_members,
            });
        }
    }
    Err(Error::CertificationFailed(format!(
        "none of {} classes gave an almost split sequence",
        ext.dim()
    )))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArArrow {
    pub source: usize,
    pub target: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Clone, Debug)]
pub struct ArQuiver {
    pub labels: Vec<String>,
    pub dim_vectors: Vec<Vec<usize>>,
    pub arrows: Vec<ArArrow>,
    /// `tau[i] = Some(j)` when member `i` is not projective and `tau` of it is
    /// member `j`.
    pub tau: Vec<Option<usize>>,
    pub tau_inverse: Vec<Option<usize>>,
}

pub fn ar_quiver(t: &RadicalTable) -> Result<ArQuiver> {
    let c = t.catalogue();
    let r = c.len();
    let mut arrows = Vec::new();
    for i in 0..r {
        for j in 0..r {
            let irr = t.irr(i, j);
            if irr.dim > 0 {
                arrows.push(ArArrow { source: i, target: j, a: irr.a, b: irr.b });
            }
        }
    }
    let translate = |i: usize, inverse: bool| -> Result<Option<usize>> {
        let m = c.member(i);
        let image = if inverse {
            if m.is_injective()? {
                return Ok(None);
            }
            tau_inverse(m)?
        } else {
            if m.is_projective()? {
                return Ok(None);
            }
            tau(m)?
        };
        let (j, _) = c.find(&image)?.ok_or(Error::NotInCatalogue(image.dim()))?;
        Ok(Some(j))
    };
    let tau: Vec<Option<usize>> = (0..r).into_par_iter().map(|i| translate(i, false)).collect::<Result<_>>()?;
    let tau_inverse: Vec<Option<usize>> = (0..r).into_par_iter().map(|i| translate(i, true)).collect::<Result<_>>()?;
    let dim_vectors = c.members().iter().map(Module::dim_vector).collect::<Result<_>>()?;
    Ok(ArQuiver {
        labels: c.labels().to_vec(),
        dim_vectors,
        arrows,
        tau,
        tau_inverse,
    })
}

/// Modules produced while checking a catalogue that match no member.
#[derive(Clone, Debug)]
pub struct MissingModule {
    pub reason: String,
    pub module: Module,
}

#[derive(Clone, Debug)]
pub struct CompletenessReport {
    pub missing: Vec<MissingModule>,
}

impl CompletenessReport {
    pub fn is_complete(&self) -> bool {
        self.missing.is_empty()
    }
}

/// Checks that the catalogue contains the projectives, injectives and
/// simples, is closed under `tau` and `tau^{-1}`, and contains the summands
/// of the middle terms of almost split sequences ending at its members.
pub fn completeness_check(c: &Catalogue) -> Result<CompletenessReport> {
    let a = c.algebra();
    let basic = a.basic_modules()?;
    let mut missing = Vec::new();
    let note = |reason: String, m: Module, missing: &mut Vec<MissingModule>| -> Result<()> {
        if c.find(&m)?.is_none() && !missing.iter().any(|x: &MissingModule| x.module.is_isomorphic(&m).unwrap_or(false)) {
            missing.push(MissingModule { reason, module: m });
        }
        Ok(())
    };
    for (i, p) in basic.projectives.iter().enumerate() {
        note(format!("projective P{}", i + 1), p.clone(), &mut missing)?;
    }
    for (i, p) in basic.injectives.iter().enumerate() {
        note(format!("injective I{}", i + 1), p.clone(), &mut missing)?;
    }
    for (i, p) in basic.simples.iter().enumerate() {
        note(format!("simple S{}", i + 1), p.clone(), &mut missing)?;
    }
    for (i, m) in c.members().iter().enumerate() {
        let label = c.label(i);
        if !m.is_projective()? {
            let t = tau(m)?;
            note(format!("tau({label})"), t.clone(), &mut missing)?;
            let ext = ExtSpace::new(m, &t)?;
            let soc = ext.socle();
            if let Some(class) = soc.vectors().first() {
                let (e, _, _) = ext.extension(class)?;
                for s in e.decompose()? {
                    note(format!("summand of the middle term ending at {label}"), s.module, &mut missing)?;
                }
            }
        }
        if !m.is_injective()? {
            note(format!("tau^-1({label})"), tau_inverse(m)?, &mut missing)?;
        }
    }
    Ok(CompletenessReport { missing })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, Arrow, QuiverPresentation};
    use crate::field::Field;

    fn truncated(field: &Field, n: usize) -> Algebra {
        let pres = QuiverPresentation {
            vertices: vec!["1".into()],
            arrows: vec![Arrow { name: "x".into(), source: 0, target: 0 }],
            relations: vec![vec![(field.one(), vec![0; n])]],
            nilpotency_cap: n,
        };
        Algebra::from_path_algebra(field, &pres).unwrap()
    }

    fn a2(field: &Field) -> Algebra {
        let pres = QuiverPresentation {
            vertices: vec!["1".into(), "2".into()],
            arrows: vec![Arrow { name: "a".into(), source: 0, target: 1 }],
            relations: vec![],
            nilpotency_cap: 2,
        };
        Algebra::from_path_algebra(field, &pres).unwrap()
    }

    #[test]
    fn presentations() {
        let f = Field::gf(2).unwrap();
        let c = Catalogue::nakayama(&truncated(&f, 3)).unwrap();
        let p = minimal_presentation(c.member(0)).unwrap();
        assert_eq!(p.p0.cover.dim(), 3);
        assert_eq!(p.p1.cover.dim(), 3);
        assert!(p.p0.map.is_epi());
        let proj = minimal_presentation(c.member(2)).unwrap();
        assert_eq!(proj.p0.cover.dim(), 3);
        assert_eq!(proj.p1.cover.dim(), 0);
    }

    #[test]
    fn translates_on_a2() {
        let f = Field::gf(3).unwrap();
        let a = a2(&f);
        let b = a.basic_modules().unwrap();
        let (s1, s2) = (&b.simples[0], &b.simples[1]);
        assert!(tau(s1).unwrap().is_isomorphic(s2).unwrap());
        assert!(tau_inverse(s2).unwrap().is_isomorphic(s1).unwrap());
        assert!(matches!(tau(s2), Err(Error::IsProjective)));
        assert!(matches!(tau_inverse(s1), Err(Error::IsInjective)));
    }

    #[test]
    fn almost_split_on_truncated_cubic() {
        let f = Field::gf(2).unwrap();
        let c = Catalogue::nakayama(&truncated(&f, 3)).unwrap();
        for i in 0..2 {
            assert!(tau(c.member(i)).unwrap().is_isomorphic(c.member(i)).unwrap());
        }
        let s = almost_split_sequence(&c, c.member(0)).unwrap();
        assert_eq!(s.middle_members, vec![(1, 1)]);
        let s = almost_split_sequence(&c, c.member(1)).unwrap();
        assert_eq!(s.middle_members, vec![(0, 1), (2, 1)]);
        assert!(s.inject.then(&s.project).is_zero());
        assert!(s.inject.is_mono() && s.project.is_epi());
        let id = c.member(1).identity();
        assert!(!is_right_almost_split(&c, &id).unwrap());
    }

    #[test]
    fn completeness() {
        let f = Field::gf(2).unwrap();
        let a = truncated(&f, 3);
        let c = Catalogue::nakayama(&a).unwrap();
        assert!(completeness_check(&c).unwrap().is_complete());
        let partial = Catalogue::new(
            &a,
            vec![c.member(0).clone(), c.member(2).clone()],
            vec!["M1".into(), "M3".into()],
        )
        .unwrap();
        let r = completeness_check(&partial).unwrap();
        assert!(!r.is_complete());
        assert!(r.missing.iter().all(|m| m.module.dim() == 2));
    }

    #[test]
    fn quiver_of_a2() {
        let f = Field::gf(3).unwrap();
        let c = Catalogue::type_a(&a2(&f)).unwrap();
        let t = RadicalTable::build(&c, 30).unwrap();
        let q = ar_quiver(&t).unwrap();
        assert_eq!(q.arrows.len(), 2);
        assert!(q.arrows.iter().all(|a| a.a == 1 && a.b == 1));
        assert_eq!(q.tau.iter().filter(|x| x.is_some()).count(), 1);
    }
}

//! Left and right degrees of morphisms, graded kernels, and checkers for the
//! theorems relating them.
//!
//! A morphism `f: X -> Y` of depth `d` has left degree `n` when `n` is the
//! least level at which precomposition `g -> g f` from
//! `rad^n / rad^{n+1}(Z, X)` to `rad^{n+d} / rad^{n+d+1}(Z, Y)` fails to be
//! injective for some catalogue member `Z`. The right degree uses
//! postcomposition `h -> f h` with `Z` on the target side.

mod family;
mod paths;
mod report;
mod sweep;
mod verify;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{ExactMatrix, SubspaceBasis};
use crate::module::{Module, Morphism};
use crate::radical::{Endpoint, Level, Part, RadicalTable};

pub use family::{ar_sequences, irreducible_family, FamilyKind, IrreducibleMorphism};
pub use paths::{
    find_kernel_path, find_nonzero_path, find_zero_path, path_composition_report, KernelPath, PathStep,
    Search,
};
pub use report::{Check, TheoremReport, Verdict};
pub use sweep::{fixture_reports, irr_paths, Theorem, MAX_PATH_LENGTH};
pub use verify::{
    degree_kernel_equivalence_check, degree_shift_check, finite_type_report, graded_kernel_sequence_report,
    kernel_comparison_check, kernel_iso_check, mono_epi_degree_check, split_target, theorem_b_report,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Side::Left => "left",
            Side::Right => "right",
        })
    }
}

/// A morphism whose endpoints are decomposed into catalogue members, with
/// its components in Hom coordinates and its depth.
#[derive(Clone, Debug)]
pub struct PlacedMorphism {
    pub morphism: Morphism,
    pub source: Endpoint,
    pub target: Endpoint,
    /// `components[a][b]`: the component from source part `a` to target part `b`.
    pub components: Vec<Vec<Vec<Scalar>>>,
    pub depth: Level,
}

impl PlacedMorphism {
    pub fn new(t: &RadicalTable, f: &Morphism) -> Result<PlacedMorphism> {
        let source = t.endpoint(&f.source)?;
        let target = t.endpoint(&f.target)?;
        PlacedMorphism::between(t, source, target, f.matrix.clone())
    }

    pub fn between(t: &RadicalTable, source: Endpoint, target: Endpoint, matrix: ExactMatrix) -> Result<PlacedMorphism> {
        if matrix.rows() != source.module.dim() || matrix.cols() != target.module.dim() {
            return Err(Error::DimensionMismatch("morphism matrix does not fit its endpoints".into()));
        }
        let components = t.components(&source, &target, &matrix)?;
        let depth = t.depth_between(&source, &target, &matrix)?;
        let morphism = Morphism::new_unchecked(&source.module, &target.module, matrix);
        Ok(PlacedMorphism { morphism, source, target, components, depth })
    }

    /// A morphism between two members given by Hom coordinates.
    pub fn from_coords(t: &RadicalTable, i: usize, j: usize, coords: &[Scalar]) -> PlacedMorphism {
        let matrix = t.hom(i, j).combination(coords);
        PlacedMorphism::between(t, t.member_endpoint(i), t.member_endpoint(j), matrix)
            .expect("members are their own endpoints")
    }

    pub fn describe(&self, t: &RadicalTable) -> String {
        format!("{} -> {}", endpoint_label(t, &self.source), endpoint_label(t, &self.target))
    }

    pub fn is_irreducible(&self) -> bool {
        self.depth == Level::Finite(1)
    }

    pub fn has_indecomposable_endpoint(&self) -> bool {
        self.source.is_indecomposable() || self.target.is_indecomposable()
    }
}

pub fn endpoint_label(t: &RadicalTable, e: &Endpoint) -> String {
    if e.parts.is_empty() {
        return "0".into();
    }
    e.parts
        .iter()
        .map(|p| t.catalogue().label(p.member).to_string())
        .collect::<Vec<_>>()
        .join("+")
}

/// The direct sum of the given members, decomposed in the given order.
pub fn sum_endpoint(t: &RadicalTable, members: &[usize]) -> Result<Endpoint> {
    let c = t.catalogue();
    let mods: Vec<Module> = members.iter().map(|&i| c.member(i).clone()).collect();
    let (module, inj, proj) = Module::direct_sum(c.algebra(), &mods)?;
    let parts = members
        .iter()
        .zip(inj.into_iter().zip(proj))
        .map(|(&member, (i, p))| Part { member, incl: i.matrix, proj: p.matrix })
        .collect();
    Ok(Endpoint { module, parts })
}

/// The matrix of the graded map induced by `f` at level `m` against the
/// member `z`, in the canonical quotient bases.
#[derive(Clone, Debug)]
pub struct GradedMap {
    pub side: Side,
    pub member: usize,
    pub level: usize,
    /// Source basis: one Hom coordinate vector per part of the varying endpoint.
    pub source_basis: Vec<Vec<Vec<Scalar>>>,
    pub target_dim: usize,
    pub matrix: ExactMatrix,
}

impl GradedMap {
    pub fn source_dim(&self) -> usize {
        self.source_basis.len()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.source_dim()
    }

    /// Left kernel, in coordinates of `source_basis`.
    pub fn kernel(&self) -> SubspaceBasis {
        self.matrix.kernel_basis()
    }

    /// Combination of the source basis with the given coefficients.
    pub fn source_element(&self, field: &Field, c: &[Scalar]) -> Vec<Vec<Scalar>> {
        let mut out: Vec<Vec<Scalar>> = self.source_basis[0].iter().map(|v| vec![field.zero(); v.len()]).collect();
        for (k, b) in c.iter().zip(&self.source_basis) {
            for (o, v) in out.iter_mut().zip(b) {
                field.axpy(o, k, v);
            }
        }
        out
    }
}

fn graded_coords(t: &RadicalTable, n: usize, i: usize, j: usize, v: &[Scalar]) -> Result<Vec<Scalar>> {
    match t.graded(n, i, j) {
        None => Ok(Vec::new()),
        Some(q) => q
            .coords(v)
            .ok_or_else(|| Error::InvariantViolation(format!("composite escapes rad^{n}"))),
    }
}

fn zero_parts(t: &RadicalTable, dims: impl Iterator<Item = usize>) -> Vec<Vec<Scalar>> {
    dims.map(|d| vec![t.field().zero(); d]).collect()
}

/// `(-) f` (left side) or `f (-)` (right side) from level `m` to level `m + d`.
pub fn graded_map(t: &RadicalTable, f: &PlacedMorphism, side: Side, z: usize, m: usize) -> Result<GradedMap> {
    let d = f.depth.finite().ok_or(Error::ZeroMorphism)?;
    let field = t.field();
    let mut source_basis = Vec::new();
    let mut rows = Vec::new();
    let target_dim;
    match side {
        Side::Left => {
            let xs = f.source.members();
            let ys = f.target.members();
            target_dim = ys.iter().map(|&y| t.graded_dim(m + d, z, y)).sum();
            for (a, &x) in xs.iter().enumerate() {
                let Some(q) = t.graded(m, z, x) else { continue };
                for rep in q.representatives() {
                    let mut elem = zero_parts(t, xs.iter().map(|&x2| t.hom(z, x2).dim()));
                    elem[a] = rep.clone();
                    let mut row = Vec::with_capacity(target_dim);
                    for (b, &y) in ys.iter().enumerate() {
                        let v = t.compose_coords(z, x, y, rep, &f.components[a][b]);
                        row.extend(graded_coords(t, m + d, z, y, &v)?);
                    }
                    source_basis.push(elem);
                    rows.push(row);
                }
            }
        }
        Side::Right => {
            let xs = f.source.members();
            let ys = f.target.members();
            target_dim = xs.iter().map(|&x| t.graded_dim(m + d, x, z)).sum();
            for (b, &y) in ys.iter().enumerate() {
                let Some(q) = t.graded(m, y, z) else { continue };
                for rep in q.representatives() {
                    let mut elem = zero_parts(t, ys.iter().map(|&y2| t.hom(y2, z).dim()));
                    elem[b] = rep.clone();
                    let mut row = Vec::with_capacity(target_dim);
                    for (a, &x) in xs.iter().enumerate() {
                        let v = t.compose_coords(x, y, z, &f.components[a][b], rep);
                        row.extend(graded_coords(t, m + d, x, z, &v)?);
                    }
                    source_basis.push(elem);
                    rows.push(row);
                }
            }
        }
    }
    let matrix = ExactMatrix::from_rows(field, target_dim, rows)?;
    Ok(GradedMap { side, member: z, level: m, source_basis, target_dim, matrix })
}

/// A morphism certifying a finite degree.
#[derive(Clone, Debug, Serialize)]
pub struct Witness {
    pub member: usize,
    pub label: String,
    pub level: usize,
    /// Depth of the composite with `f`; at least `level + d + 1`.
    pub composite_depth: Level,
    pub matrix: Vec<Vec<String>>,
    #[serde(skip)]
    pub morphism: Morphism,
    /// Components of the witness along the parts of the shared endpoint.
    #[serde(skip)]
    pub components: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct DegreeReport {
    pub morphism: String,
    pub side: Side,
    pub depth: usize,
    /// Nilpotency bound `N` used for the scan.
    pub bound: usize,
    pub value: Level,
    pub witness: Option<Witness>,
}

pub fn format_matrix(m: &ExactMatrix) -> Vec<Vec<String>> {
    let f = m.field();
    m.row_iter().map(|r| r.iter().map(|x| f.format(x)).collect()).collect()
}

/// Degree on the given side. Levels are scanned from `0` up to `N - 1`, then
/// members in catalogue order, then graded basis order.
pub fn degree(t: &RadicalTable, f: &PlacedMorphism, side: Side) -> Result<DegreeReport> {
    let d = f.depth.finite().ok_or(Error::ZeroMorphism)?;
    let field = t.field();
    let bound = t.nilpotency();
    let mut report = DegreeReport {
        morphism: f.describe(t),
        side,
        depth: d,
        bound,
        value: Level::InfiniteAtBound,
        witness: None,
    };
    for m in 0..bound {
        for z in 0..t.len() {
            let g = graded_map(t, f, side, z, m)?;
            if g.source_dim() == 0 || g.is_injective() {
                continue;
            }
            let kernel = g.kernel();
            let comps = g.source_element(field, kernel.vector(0));
            let zend = t.member_endpoint(z);
            let (matrix, own, other) = match side {
                Side::Left => {
                    let mut mat = ExactMatrix::zeros(field, zend.module.dim(), f.source.module.dim());
                    for (c, p) in comps.iter().zip(&f.source.parts) {
                        mat = mat.add(&t.hom(z, p.member).combination(c).mul(&p.incl));
                    }
                    (mat, &f.source, &f.target)
                }
                Side::Right => {
                    let mut mat = ExactMatrix::zeros(field, f.target.module.dim(), zend.module.dim());
                    for (c, p) in comps.iter().zip(&f.target.parts) {
                        mat = mat.add(&p.proj.mul(&t.hom(p.member, z).combination(c)));
                    }
                    (mat, &f.target, &f.source)
                }
            };
            let (own_depth, composite_depth, morphism) = match side {
                Side::Left => (
                    t.depth_between(&zend, own, &matrix)?,
                    t.depth_between(&zend, other, &matrix.mul(&f.morphism.matrix))?,
                    Morphism::new_unchecked(&zend.module, &own.module, matrix),
                ),
                Side::Right => (
                    t.depth_between(own, &zend, &matrix)?,
                    t.depth_between(other, &zend, &f.morphism.matrix.mul(&matrix))?,
                    Morphism::new_unchecked(&own.module, &zend.module, matrix),
                ),
            };
            let deep_enough = match composite_depth {
                Level::InfiniteAtBound => true,
                Level::Finite(k) => k > m + d,
            };
            if own_depth != Level::Finite(m) || !deep_enough {
                return Err(Error::InvariantViolation(format!(
                    "{side} degree witness at level {m} has depth {own_depth} and composite depth {composite_depth}"
                )));
            }
            report.value = Level::Finite(m);
            report.witness = Some(Witness {
                member: z,
                label: t.catalogue().label(z).to_string(),
                level: m,
                composite_depth,
                matrix: format_matrix(&morphism.matrix),
                morphism,
                components: comps,
            });
            return Ok(report);
        }
    }
    Ok(report)
}

pub fn left_degree(t: &RadicalTable, f: &Morphism) -> Result<DegreeReport> {
    degree(t, &PlacedMorphism::new(t, f)?, Side::Left)
}

pub fn right_degree(t: &RadicalTable, f: &Morphism) -> Result<DegreeReport> {
    degree(t, &PlacedMorphism::new(t, f)?, Side::Right)
}

/// An indecomposable summand of a kernel, identified with a member, and the
/// depth of its inclusion into the domain.
#[derive(Clone, Debug, Serialize)]
pub struct KernelSummand {
    pub member: usize,
    pub label: String,
    pub depth: Level,
    /// Inclusion `member -> X` as a matrix.
    #[serde(skip)]
    pub inclusion: ExactMatrix,
    /// Components of the inclusion along the parts of `X`.
    #[serde(skip)]
    pub components: Vec<Vec<Scalar>>,
}

#[derive(Clone, Debug)]
pub struct KernelGrading {
    pub kernel: Module,
    pub inclusion: Morphism,
    pub summands: Vec<KernelSummand>,
}

impl KernelGrading {
    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Summand indices grouped by the depth of their inclusion.
    pub fn by_depth(&self) -> BTreeMap<Level, Vec<usize>> {
        let mut out: BTreeMap<Level, Vec<usize>> = BTreeMap::new();
        for (k, s) in self.summands.iter().enumerate() {
            out.entry(s.depth).or_default().push(k);
        }
        out
    }

    /// Depth of the whole inclusion: the least summand depth.
    pub fn depth(&self) -> Level {
        self.summands.iter().map(|s| s.depth).min().unwrap_or(Level::InfiniteAtBound)
    }

    /// Summands as `(member, components, depth)`, the shape used by the
    /// exact-sequence checks.
    pub fn graded_parts(&self) -> Vec<(usize, &[Vec<Scalar>], usize)> {
        self.summands
            .iter()
            .filter_map(|s| s.depth.finite().map(|m| (s.member, s.components.as_slice(), m)))
            .collect()
    }
}

/// Decomposes `Ker f` into members and records the depth of each summand's
/// inclusion. A nonzero mono has finite depth, so no summand lands in
/// `rad^infinity` at this scale.
pub fn depth_graded_kernel_decomposition(t: &RadicalTable, f: &PlacedMorphism) -> Result<KernelGrading> {
    let (kernel, inclusion) = f.morphism.kernel();
    let mut summands = Vec::new();
    if kernel.dim() > 0 {
        let ep = t.endpoint(&kernel)?;
        for part in &ep.parts {
            let incl = part.incl.mul(&inclusion.matrix);
            let src = t.member_endpoint(part.member);
            let comps = t.components(&src, &f.source, &incl)?.remove(0);
            let depth = t.depth_between(&src, &f.source, &incl)?;
            summands.push(KernelSummand {
                member: part.member,
                label: t.catalogue().label(part.member).to_string(),
                depth,
                inclusion: incl,
                components: comps,
            });
        }
    }
    Ok(KernelGrading { kernel, inclusion, summands })
}

/// Is the irreducible `f` freely irreducible? With an indecomposable domain
/// `X` the residues of the components into each isomorphism class `Y_i` must
/// be free over `kappa_X (x) kappa_{Y_i}^op`; dually for an indecomposable
/// codomain.
pub fn freely_irreducible_check(t: &RadicalTable, f: &PlacedMorphism) -> Result<bool> {
    if !f.is_irreducible() {
        return Err(Error::NotIrreducible(f.describe(t)));
    }
    let field = t.field();
    let kappa = |i: usize| -> Vec<Vec<Scalar>> {
        t.graded(0, i, i).map(|q| q.representatives().to_vec()).unwrap_or_default()
    };
    let mut groups: BTreeMap<usize, Vec<(usize, usize)>> = BTreeMap::new();
    let (fixed, forward) = if f.source.is_indecomposable() {
        for (b, p) in f.target.parts.iter().enumerate() {
            groups.entry(p.member).or_default().push((0, b));
        }
        (f.source.parts[0].member, true)
    } else if f.target.is_indecomposable() {
        for (a, p) in f.source.parts.iter().enumerate() {
            groups.entry(p.member).or_default().push((a, 0));
        }
        (f.target.parts[0].member, false)
    } else {
        return Err(Error::Precondition("freely irreducible needs an indecomposable endpoint".into()));
    };
    for (&other, comps) in &groups {
        let (x, y) = if forward { (fixed, other) } else { (other, fixed) };
        let (kx, ky) = (kappa(x), kappa(y));
        let mut vecs = Vec::new();
        for &(a, b) in comps {
            let c = &f.components[a][b];
            for u in &kx {
                for v in &ky {
                    let w = t.compose_coords(x, y, y, c, v);
                    let w = t.compose_coords(x, x, y, u, &w);
                    vecs.push(graded_coords(t, 1, x, y, &w)?);
                }
            }
        }
        let expected = vecs.len();
        let span = SubspaceBasis::from_vectors(field, t.graded_dim(1, x, y), vecs);
        if span.dim() != expected {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Data of one exactness check
/// `0 -> (+)_r rad^{l-m_r}/rad^{l-m_r+1}(Z, K_r) -> rad^l/rad^{l+1}(Z, X) -> rad^{l+d}/rad^{l+d+1}(Z, Y)`.
#[derive(Clone, Debug, Serialize)]
pub struct SequenceCheck {
    pub member: String,
    pub level: usize,
    pub kernel_dim: usize,
    pub middle_dim: usize,
    pub target_dim: usize,
    pub first_rank: usize,
    pub second_rank: usize,
    pub injective: bool,
    pub exact: bool,
}

/// `kernel` lists `(member, components into the parts of X, shift)`.
pub fn sequence_check(
    t: &RadicalTable,
    f: &PlacedMorphism,
    kernel: &[(usize, &[Vec<Scalar>], usize)],
    z: usize,
    l: usize,
) -> Result<SequenceCheck> {
    let field = t.field();
    let xs = f.source.members();
    let middle_dim: usize = xs.iter().map(|&x| t.graded_dim(l, z, x)).sum();
    let mut rows = Vec::new();
    for &(k, comps, shift) in kernel {
        if shift > l {
            continue;
        }
        let Some(q) = t.graded(l - shift, z, k) else { continue };
        for h in q.representatives() {
            let mut row = Vec::with_capacity(middle_dim);
            for (a, &x) in xs.iter().enumerate() {
                let v = t.compose_coords(z, k, x, h, &comps[a]);
                row.extend(graded_coords(t, l, z, x, &v)?);
            }
            rows.push(row);
        }
    }
    let first = ExactMatrix::from_rows(field, middle_dim, rows)?;
    let second = graded_map(t, f, Side::Left, z, l)?;
    let first_rank = first.rank();
    let second_rank = second.rank();
    let injective = first_rank == first.rows();
    let composite_zero = first.rows() == 0 || first.mul(&second.matrix).is_zero();
    let exact = injective && composite_zero && first_rank == middle_dim - second_rank;
    Ok(SequenceCheck {
        member: t.catalogue().label(z).to_string(),
        level: l,
        kernel_dim: first.rows(),
        middle_dim,
        target_dim: second.target_dim,
        first_rank,
        second_rank,
        injective,
        exact,
    })
}

/// Looks for `h` in `rad^low(Z, K) \ rad^{low+1}(Z, K)` with
/// `p - h i` in `rad^high(Z, X)`, where `K` and `X` are given by member
/// lists, `i` by its components and `p` by its components along `X`.
pub fn factor_through_kernel(
    t: &RadicalTable,
    z: usize,
    kernel: &[(usize, &[Vec<Scalar>])],
    xs: &[usize],
    p: &[Vec<Scalar>],
    low: usize,
    high: usize,
) -> Result<Option<Vec<Vec<Scalar>>>> {
    let field = t.field();
    let hdims: Vec<usize> = kernel.iter().map(|&(k, _)| t.hom(z, k).dim()).collect();
    let xdims: Vec<usize> = xs.iter().map(|&x| t.hom(z, x).dim()).collect();
    let hlen: usize = hdims.iter().sum();
    let xlen: usize = xdims.iter().sum();
    let embed = |block: usize, dims: &[usize], v: &[Scalar]| -> Vec<Scalar> {
        let off: usize = dims[..block].iter().sum();
        let total: usize = dims.iter().sum();
        let mut out = vec![field.zero(); total];
        out[off..off + v.len()].clone_from_slice(v);
        out
    };
    let split = |dims: &[usize], v: &[Scalar]| -> Vec<Vec<Scalar>> {
        let mut off = 0;
        dims.iter()
            .map(|&d| {
                let s = v[off..off + d].to_vec();
                off += d;
                s
            })
            .collect()
    };
    let mut w = Vec::new();
    let mut upper = Vec::new();
    for (r, &(k, _)) in kernel.iter().enumerate() {
        for v in t.power(low, z, k).vectors() {
            w.push(embed(r, &hdims, &v));
        }
        for v in t.power(low + 1, z, k).vectors() {
            upper.push(embed(r, &hdims, &v));
        }
    }
    if w.is_empty() {
        return Ok(None);
    }
    let upper = SubspaceBasis::from_vectors(field, hlen, upper);
    let mut rvecs = Vec::new();
    for (a, &x) in xs.iter().enumerate() {
        for v in t.power(high, z, x).vectors() {
            rvecs.push(embed(a, &xdims, &v));
        }
    }
    let r = SubspaceBasis::from_vectors(field, xlen, rvecs);
    let apply = |h: &[Scalar]| -> Vec<Scalar> {
        let hs = split(&hdims, h);
        let mut out = Vec::with_capacity(xlen);
        for (a, &x) in xs.iter().enumerate() {
            let mut acc = vec![field.zero(); xdims[a]];
            for (r, &(k, comps)) in kernel.iter().enumerate() {
                let v = t.compose_coords(z, k, x, &hs[r], &comps[a]);
                field.axpy(&mut acc, &field.one(), &v);
            }
            out.extend(acc);
        }
        out
    };
    let rows: Vec<Vec<Scalar>> = w.iter().map(|h| r.reduce(&apply(h))).collect();
    let m = ExactMatrix::from_rows(field, xlen, rows)?;
    let target: Vec<Scalar> = r.reduce(&p.concat());
    let Some(c0) = m.solve(&target)? else { return Ok(None) };
    let combine = |c: &[Scalar]| -> Vec<Scalar> {
        let mut out = vec![field.zero(); hlen];
        for (k, v) in c.iter().zip(&w) {
            field.axpy(&mut out, k, v);
        }
        out
    };
    let h0 = combine(&c0);
    if !upper.contains(&h0) {
        return Ok(Some(split(&hdims, &h0)));
    }
    for v in m.kernel_basis().vectors() {
        let hv = combine(&v);
        if !upper.contains(&hv) {
            let mut h = h0.clone();
            field.axpy(&mut h, &field.one(), &hv);
            return Ok(Some(split(&hdims, &h)));
        }
    }
    Ok(None)
}

/// All vectors of `k^dim` over a finite field when there are at most `limit`.
pub(crate) fn all_vectors(field: &Field, dim: usize, limit: u64) -> Option<Vec<Vec<Scalar>>> {
    let q = field.order()?;
    let total = q.checked_pow(dim as u32)?;
    if total > limit {
        return None;
    }
    let elems: Vec<Scalar> = field.elements()?.collect();
    let mut out = vec![Vec::new()];
    for _ in 0..dim {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    Some(out)
}

#[cfg(test)]
mod tests;

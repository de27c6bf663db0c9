//! Right modules, morphisms and Hom spaces.
//!
//! A module over `A` is a vector space `k^n` with one matrix `rho(b_i)` per
//! basis element of `A`, acting on row vectors: `x . b_i = x * rho(b_i)`.
//! A morphism `X -> Y` is a `dim X x dim Y` matrix `F` with
//! `rho_X(a) F = F rho_Y(a)`.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{Algebra, AlgebraParts};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{ExactMatrix, QuotientSpace, SubspaceBasis};

pub(crate) struct ModuleData {
    algebra: Algebra,
    dim: usize,
    action: Vec<ExactMatrix>,
    end: OnceLock<(HomSpace, Algebra)>,
}

/// Shared handle to a right module. Equality compares algebra and action
/// matrices.
#[derive(Clone)]
pub struct Module(Arc<ModuleData>);

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.dim == other.0.dim
                && self.0.algebra == other.0.algebra
                && self.0.action == other.0.action)
    }
}
impl Eq for Module {}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Module(dim {} over {:?})", self.0.dim, self.0.algebra)
    }
}

/// A summand of a decomposition with its split maps:
/// `inclusion * projection = id` on the summand.
#[derive(Clone, Debug)]
pub struct Summand {
    pub module: Module,
    pub inclusion: Morphism,
    pub projection: Morphism,
}

impl Module {
    /// Validated module: checks the unit and the multiplication law on every
    /// pair of basis elements.
    pub fn new(algebra: &Algebra, action: Vec<ExactMatrix>) -> Result<Module> {
        let n = algebra.dim();
        if action.len() != n {
            return Err(Error::DimensionMismatch(format!(
                "{} action matrices for an algebra of dimension {n}",
                action.len()
            )));
        }
        let dim = action.first().map_or(0, |m| m.rows());
        if action.iter().any(|m| m.rows() != dim || m.cols() != dim) {
            return Err(Error::DimensionMismatch(format!(
                "action matrices must all be {dim}x{dim}"
            )));
        }
        let m = Module::new_unchecked(algebra, dim, action);
        m.check_laws()?;
        Ok(m)
    }

    pub fn new_unchecked(algebra: &Algebra, dim: usize, action: Vec<ExactMatrix>) -> Module {
        Module(Arc::new(ModuleData {
            algebra: algebra.clone(),
            dim,
            action,
            end: OnceLock::new(),
        }))
    }

    fn check_laws(&self) -> Result<()> {
        let a = self.algebra();
        if !self.act_by(a.unit()).is_identity() {
            return Err(Error::ModuleLaw("the unit does not act as the identity".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.action(i).mul(self.action(j));
                let rhs = self.act_by(a.mult(i, j));
                if lhs != rhs {
                    return Err(Error::ModuleLaw(format!(
                        "rho({}) rho({}) differs from rho({} {})",
                        a.labels()[i],
                        a.labels()[j],
                        a.labels()[i],
                        a.labels()[j]
                    )));
                }
            }
        }
        Ok(())
    }

    /// Module over a path algebra from a quiver representation: one space of
    /// dimension `vertex_dims[v]` per vertex and one matrix per arrow, of size
    /// `dim(source) x dim(target)`.
    pub fn from_representation(
        algebra: &Algebra,
        vertex_dims: &[usize],
        arrow_maps: &[ExactMatrix],
    ) -> Result<Module> {
        let paths = algebra
            .paths()
            .ok_or_else(|| Error::Precondition("algebra has no quiver presentation".into()))?;
        let pres = &paths.presentation;
        let f = algebra.field();
        if vertex_dims.len() != pres.vertices.len() || arrow_maps.len() != pres.arrows.len() {
            return Err(Error::DimensionMismatch(
                "one dimension per vertex and one matrix per arrow".into(),
            ));
        }
        for (k, (arrow, m)) in pres.arrows.iter().zip(arrow_maps).enumerate() {
            if m.rows() != vertex_dims[arrow.source] || m.cols() != vertex_dims[arrow.target] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {} ({}) needs a {}x{} matrix",
                    k + 1,
                    arrow.name,
                    vertex_dims[arrow.source],
                    vertex_dims[arrow.target]
                )));
            }
        }
        let mut offsets = Vec::with_capacity(vertex_dims.len());
        let mut n = 0;
        for &d in vertex_dims {
            offsets.push(n);
            n += d;
        }
        let action = paths
            .basis
            .iter()
            .map(|p| {
                let mut block = ExactMatrix::identity(f, vertex_dims[p.source]);
                for &a in &p.arrows {
                    block = block.mul(&arrow_maps[a]);
                }
                let mut m = ExactMatrix::zeros(f, n, n);
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        m.set(offsets[p.source] + r, offsets[p.target] + c, block.get(r, c).clone());
                    }
                }
                m
            })
            .collect();
        Module::new(algebra, action)
    }

    /// `A_A` with `rho(b_i)` the right multiplication by `b_i`.
    pub fn regular(algebra: &Algebra) -> Module {
        let action = (0..algebra.dim())
            .map(|i| algebra.right_mult_matrix(&algebra.basis_vector(i)))
            .collect();
        Module::new_unchecked(algebra, algebra.dim(), action)
    }

    pub fn zero(algebra: &Algebra) -> Module {
        let f = algebra.field();
        Module::new_unchecked(
            algebra,
            0,
            (0..algebra.dim()).map(|_| ExactMatrix::zeros(f, 0, 0)).collect(),
        )
    }

    pub fn algebra(&self) -> &Algebra {
        &self.0.algebra
    }

    pub fn field(&self) -> &Field {
        self.0.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.0.dim
    }

    pub fn is_zero(&self) -> bool {
        self.0.dim == 0
    }

    pub fn action(&self, i: usize) -> &ExactMatrix {
        &self.0.action[i]
    }

    pub fn actions(&self) -> &[ExactMatrix] {
        &self.0.action
    }

    /// Matrix of the action of an arbitrary algebra element.
    pub fn act_by(&self, x: &[Scalar]) -> ExactMatrix {
        let f = self.field();
        let mut m = ExactMatrix::zeros(f, self.dim(), self.dim());
        for (c, rho) in x.iter().zip(&self.0.action) {
            if !f.is_zero(c) {
                m.add_scaled(c, rho);
            }
        }
        m
    }

    /// The same action viewed over an equal algebra handle.
    pub fn rehome(&self, algebra: &Algebra) -> Result<Module> {
        if algebra != self.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        Ok(Module::new_unchecked(algebra, self.dim(), self.0.action.clone()))
    }

    /// `D M = Hom_k(M, k)` as a right module over the opposite algebra.
    pub fn dual(&self) -> Module {
        let op = self.algebra().opposite();
        Module::new_unchecked(
            &op,
            self.dim(),
            self.0.action.iter().map(|m| m.transpose()).collect(),
        )
    }

    /// Restriction to an invariant subspace, with its inclusion.
    pub fn submodule(&self, sub: &SubspaceBasis) -> Result<(Module, Morphism)> {
        if sub.ambient_dim() != self.dim() {
            return Err(Error::DimensionMismatch("subspace ambient dimension".into()));
        }
        let vecs = sub.vectors();
        let mut action = Vec::with_capacity(self.0.action.len());
        for rho in &self.0.action {
            let mut rows = Vec::with_capacity(vecs.len());
            for v in &vecs {
                let image = rho.vec_mul(v);
                rows.push(sub.coordinates(&image).ok_or_else(|| {
                    Error::ModuleLaw("subspace is not invariant under the action".into())
                })?);
            }
            action.push(ExactMatrix::from_rows(self.field(), vecs.len(), rows)?);
        }
        let m = Module::new_unchecked(self.algebra(), vecs.len(), action);
        let incl = Morphism::new_unchecked(&m, self, sub.matrix().clone());
        Ok((m, incl))
    }

    /// `M / U` for an invariant subspace `U`, with the projection.
    pub fn quotient(&self, sub: &SubspaceBasis) -> Result<(Module, Morphism)> {
        let full = SubspaceBasis::full(self.field(), self.dim());
        let q = QuotientSpace::new(&full, sub);
        let d = q.dim();
        let mut action = Vec::with_capacity(self.0.action.len());
        for rho in &self.0.action {
            let mut rows = Vec::with_capacity(d);
            for r in q.representatives() {
                rows.push(q.coords(&rho.vec_mul(r)).expect("full space"));
            }
            action.push(ExactMatrix::from_rows(self.field(), d, rows)?);
        }
        for v in sub.vectors() {
            for rho in &self.0.action {
                if !sub.contains(&rho.vec_mul(&v)) {
                    return Err(Error::ModuleLaw("subspace is not invariant under the action".into()));
                }
            }
        }
        let m = Module::new_unchecked(self.algebra(), d, action);
        let rows = (0..self.dim())
            .map(|i| {
                let mut e = vec![self.field().zero(); self.dim()];
                e[i] = self.field().one();
                q.coords(&e).expect("full space")
            })
            .collect();
        let proj = Morphism::new_unchecked(self, &m, ExactMatrix::from_rows(self.field(), d, rows)?);
        Ok((m, proj))
    }

    /// Smallest submodule containing the given vectors.
    pub fn generated_subspace(&self, vectors: Vec<Vec<Scalar>>) -> SubspaceBasis {
        let gens = self.algebra().generators().to_vec();
        let mut span = SubspaceBasis::from_vectors(self.field(), self.dim(), vectors);
        loop {
            let before = span.dim();
            let mut vecs = span.vectors();
            for v in span.vectors() {
                for &g in &gens {
                    vecs.push(self.action(g).vec_mul(&v));
                }
            }
            span = SubspaceBasis::from_vectors(self.field(), self.dim(), vecs);
            if span.dim() == before {
                return span;
            }
        }
    }

    /// `M J`, the radical of the module.
    pub fn radical_subspace(&self) -> SubspaceBasis {
        let a = self.algebra();
        let mut vecs = Vec::new();
        for j in a.radical().vectors() {
            let m = self.act_by(&j);
            vecs.extend(m.row_iter().map(|r| r.to_vec()));
        }
        SubspaceBasis::from_vectors(self.field(), self.dim(), vecs)
    }

    /// `{x : x J = 0}`, the socle.
    pub fn socle_subspace(&self) -> SubspaceBasis {
        let a = self.algebra();
        let f = self.field();
        let mut stacked = ExactMatrix::zeros(f, self.dim(), 0);
        for j in a.radical().vectors() {
            stacked = stacked.hstack(&self.act_by(&j));
        }
        stacked.kernel_basis()
    }

    pub fn top(&self) -> (Module, Morphism) {
        self.quotient(&self.radical_subspace()).expect("MJ is a submodule")
    }

    pub fn socle(&self) -> (Module, Morphism) {
        self.submodule(&self.socle_subspace()).expect("socle is a submodule")
    }

    /// `dim M e_i` for each primitive idempotent `e_i`.
    pub fn dim_vector(&self) -> Result<Vec<usize>> {
        Ok(self
            .algebra()
            .primitive_idempotents()?
            .iter()
            .map(|e| self.act_by(e).rank())
            .collect())
    }

    pub fn identity(&self) -> Morphism {
        Morphism::new_unchecked(self, self, ExactMatrix::identity(self.field(), self.dim()))
    }

    /// Direct sum with its injections and projections.
    pub fn direct_sum(algebra: &Algebra, modules: &[Module]) -> Result<(Module, Vec<Morphism>, Vec<Morphism>)> {
        if modules.iter().any(|m| m.algebra() != algebra) {
            return Err(Error::AlgebraMismatch);
        }
        let f = algebra.field();
        let n: usize = modules.iter().map(Module::dim).sum();
        let action = (0..algebra.dim())
            .map(|i| {
                let blocks: Vec<&ExactMatrix> = modules.iter().map(|m| m.action(i)).collect();
                ExactMatrix::block_diag(f, &blocks)
            })
            .collect();
        let sum = Module::new_unchecked(algebra, n, action);
        let mut inj = Vec::new();
        let mut proj = Vec::new();
        let mut off = 0;
        for m in modules {
            let mut i = ExactMatrix::zeros(f, m.dim(), n);
            let mut p = ExactMatrix::zeros(f, n, m.dim());
            for k in 0..m.dim() {
                i.set(k, off + k, f.one());
                p.set(off + k, k, f.one());
            }
            inj.push(Morphism::new_unchecked(m, &sum, i));
            proj.push(Morphism::new_unchecked(&sum, m, p));
            off += m.dim();
        }
        Ok((sum, inj, proj))
    }

    /// `End(M)` with its Hom basis. The product of basis elements `f_i f_j`
    /// applies `f_i` first (matrix product `F_i F_j`), and the basis matrices
    /// serve as its faithful representation.
    pub fn endomorphisms(&self) -> &(HomSpace, Algebra) {
        self.0.end.get_or_init(|| {
            let h = HomSpace::new(self, self).expect("same algebra");
            let alg = h.composition_algebra();
            (h, alg)
        })
    }

    pub fn end_algebra(&self) -> &Algebra {
        &self.endomorphisms().1
    }

    /// `J(End M)` as a subspace of matrix space (flattened `dim x dim`).
    pub fn end_radical(&self) -> SubspaceBasis {
        let (h, e) = self.endomorphisms();
        let vecs = e.radical().vectors().iter().map(|c| h.combination(c).flatten()).collect();
        SubspaceBasis::from_vectors(self.field(), self.dim() * self.dim(), vecs)
    }

    /// Dimension over the base field of `End(M) / J(End M)`; for an
    /// indecomposable module this is `dim kappa_M`.
    pub fn residue_dim(&self) -> usize {
        self.end_algebra().residue_dim()
    }

    pub fn is_indecomposable(&self) -> Result<bool> {
        if self.is_zero() {
            return Ok(false);
        }
        self.end_algebra().is_local()
    }

    /// Splits along primitive idempotents of `End(M)`.
    pub fn decompose(&self) -> Result<Vec<Summand>> {
        if self.is_zero() {
            return Ok(Vec::new());
        }
        let (h, e) = self.endomorphisms();
        let f = self.field();
        let mut out = Vec::new();
        for idem in e.primitive_idempotents()? {
            let p = h.combination(idem);
            let image = p.row_space();
            let (m, incl) = self.submodule(&image)?;
            let rows = p
                .row_iter()
                .map(|r| image.coordinates(r).expect("row of the idempotent lies in its image"))
                .collect();
            let proj = Morphism::new_unchecked(self, &m, ExactMatrix::from_rows(f, m.dim(), rows)?);
            out.push(Summand { module: m, inclusion: incl, projection: proj });
        }
        Ok(out)
    }

    pub fn is_isomorphic(&self, other: &Module) -> Result<bool> {
        Ok(self.isomorphism_to(other)?.is_some())
    }

    /// An isomorphism `self -> other`, if one exists.
    pub fn isomorphism_to(&self, other: &Module) -> Result<Option<Morphism>> {
        if self.algebra() != other.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if self.dim() != other.dim() {
            return Ok(None);
        }
        if self.is_zero() {
            return Ok(Some(Morphism::new_unchecked(self, other, ExactMatrix::zeros(self.field(), 0, 0))));
        }
        if self.is_indecomposable()? {
            // Non-isomorphisms between indecomposables form a proper subspace
            // when an isomorphism exists, so some basis element avoids it.
            let h = HomSpace::new(self, other)?;
            return Ok(h.basis().into_iter().find(|m| m.is_iso()));
        }
        let xs = self.decompose()?;
        let ys = other.decompose()?;
        if xs.len() != ys.len() {
            return Ok(None);
        }
        let mut used = vec![false; ys.len()];
        let mut matrix = ExactMatrix::zeros(self.field(), self.dim(), other.dim());
        for x in &xs {
            let mut found = false;
            for (k, y) in ys.iter().enumerate() {
                if used[k] || x.module.dim() != y.module.dim() {
                    continue;
                }
                if let Some(iso) = x.module.isomorphism_to(&y.module)? {
                    used[k] = true;
                    let piece = x.projection.matrix.mul(&iso.matrix).mul(&y.inclusion.matrix);
                    matrix = matrix.add(&piece);
                    found = true;
                    break;
                }
            }
            if !found {
                return Ok(None);
            }
        }
        Ok(Some(Morphism::new_unchecked(self, other, matrix)))
    }

    pub fn is_simple(&self) -> bool {
        !self.is_zero() && self.radical_subspace().is_zero() && {
            // Semisimple with one summand.
            self.is_indecomposable().unwrap_or(false)
        }
    }

    /// Projective iff its projective cover has the same dimension.
    pub fn is_projective(&self) -> Result<bool> {
        let basic = self.algebra().basic_modules()?;
        let mut cover = 0;
        for (s, p) in basic.simples.iter().zip(&basic.projectives) {
            let h = HomSpace::new(self, s)?.dim();
            cover += h / s.residue_dim() * p.dim();
        }
        Ok(cover == self.dim())
    }

    /// Injective iff its injective envelope has the same dimension.
    pub fn is_injective(&self) -> Result<bool> {
        let basic = self.algebra().basic_modules()?;
        let mut envelope = 0;
        for (s, i) in basic.simples.iter().zip(&basic.injectives) {
            let h = HomSpace::new(s, self)?.dim();
            envelope += h / s.residue_dim() * i.dim();
        }
        Ok(envelope == self.dim())
    }
}

/// A module morphism, stored as its matrix in the row-vector convention.
#[derive(Clone)]
pub struct Morphism {
    pub source: Module,
    pub target: Module,
    pub matrix: ExactMatrix,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({} -> {}: {:?})", self.source.dim(), self.target.dim(), self.matrix)
    }
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix && self.source == other.source && self.target == other.target
    }
}
impl Eq for Morphism {}

impl Morphism {
    /// Validated morphism: checks sizes and the intertwining relation on
    /// algebra generators.
    pub fn new(source: &Module, target: &Module, matrix: ExactMatrix) -> Result<Morphism> {
        if source.algebra() != target.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        if matrix.rows() != source.dim() || matrix.cols() != target.dim() {
            return Err(Error::DimensionMismatch(format!(
                "morphism matrix must be {}x{}",
                source.dim(),
                target.dim()
            )));
        }
        for &g in source.algebra().generators() {
            if source.action(g).mul(&matrix) != matrix.mul(target.action(g)) {
                return Err(Error::NotAMorphism);
            }
        }
        Ok(Morphism::new_unchecked(source, target, matrix))
    }

    pub fn new_unchecked(source: &Module, target: &Module, matrix: ExactMatrix) -> Morphism {
        Morphism {
            source: source.clone(),
            target: target.clone(),
            matrix,
        }
    }

    pub fn zero(source: &Module, target: &Module) -> Morphism {
        Morphism::new_unchecked(source, target, ExactMatrix::zeros(source.field(), source.dim(), target.dim()))
    }

    pub fn field(&self) -> &Field {
        self.source.field()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    /// `g` then `f`.
    pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
        if g.target != f.source {
            return Err(Error::EndpointMismatch(
                "target of the first map is not the source of the second".into(),
            ));
        }
        Ok(Morphism::new_unchecked(&g.source, &f.target, g.matrix.mul(&f.matrix)))
    }

    /// `self` then `f`.
    pub fn then(&self, f: &Morphism) -> Morphism {
        Morphism::compose(self, f).expect("composable morphisms")
    }

    pub fn add(&self, other: &Morphism) -> Morphism {
        Morphism::new_unchecked(&self.source, &self.target, self.matrix.add(&other.matrix))
    }

    pub fn sub(&self, other: &Morphism) -> Morphism {
        Morphism::new_unchecked(&self.source, &self.target, self.matrix.sub(&other.matrix))
    }

    pub fn scale(&self, c: &Scalar) -> Morphism {
        Morphism::new_unchecked(&self.source, &self.target, self.matrix.scale(c))
    }

    pub fn is_mono(&self) -> bool {
        self.rank() == self.source.dim()
    }

    pub fn is_epi(&self) -> bool {
        self.rank() == self.target.dim()
    }

    pub fn is_iso(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_mono()
    }

    pub fn kernel(&self) -> (Module, Morphism) {
        self.source
            .submodule(&self.matrix.kernel_basis())
            .expect("kernels are submodules")
    }

    pub fn cokernel(&self) -> (Module, Morphism) {
        self.target
            .quotient(&self.matrix.row_space())
            .expect("images are submodules")
    }

    /// Image with the factorization `source -> image -> target`.
    pub fn image(&self) -> (Module, Morphism, Morphism) {
        let sub = self.matrix.row_space();
        let (m, incl) = self.target.submodule(&sub).expect("images are submodules");
        let rows = self
            .matrix
            .row_iter()
            .map(|r| sub.coordinates(r).expect("row lies in the image"))
            .collect();
        let onto = Morphism::new_unchecked(
            &self.source,
            &m,
            ExactMatrix::from_rows(self.field(), m.dim(), rows).expect("sizes"),
        );
        (m, onto, incl)
    }

    /// Componentwise direct sum `X1 + X2 -> Y1 + Y2`.
    pub fn direct_sum(maps: &[Morphism], source: &Module, target: &Module) -> Morphism {
        let blocks: Vec<&ExactMatrix> = maps.iter().map(|m| &m.matrix).collect();
        Morphism::new_unchecked(source, target, ExactMatrix::block_diag(source.field(), &blocks))
    }
}

/// `Hom_A(X, Y)` as a subspace of flattened `dim X x dim Y` matrices. The
/// basis is the echelon basis of that subspace, so coordinates are read off
/// at the pivot entries.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub source: Module,
    pub target: Module,
    space: SubspaceBasis,
}

impl HomSpace {
    pub fn new(x: &Module, y: &Module) -> Result<HomSpace> {
        if x.algebra() != y.algebra() {
            return Err(Error::AlgebraMismatch);
        }
        let f = x.field();
        let (m, n) = (x.dim(), y.dim());
        let gens = x.algebra().generators();
        // Unknown F[k][l] has index k*n + l; equation (g, i, j) is entry (i, j)
        // of rho_X(g) F - F rho_Y(g).
        let eqs = gens.len() * m * n;
        let mut c = ExactMatrix::zeros(f, m * n, eqs);
        for (gi, &g) in gens.iter().enumerate() {
            let rx = x.action(g);
            let ry = y.action(g);
            for i in 0..m {
                for j in 0..n {
                    let col = (gi * m + i) * n + j;
                    for k in 0..m {
                        let v = rx.get(i, k);
                        if !f.is_zero(v) {
                            let row = k * n + j;
                            let cur = c.get(row, col).clone();
                            c.set(row, col, f.add(&cur, v));
                        }
                    }
                    for l in 0..n {
                        let v = ry.get(l, j);
                        if !f.is_zero(v) {
                            let row = i * n + l;
                            let cur = c.get(row, col).clone();
                            c.set(row, col, f.sub(&cur, v));
                        }
                    }
                }
            }
        }
        let space = if eqs == 0 {
            SubspaceBasis::full(f, m * n)
        } else {
            c.kernel_basis()
        };
        Ok(HomSpace {
            source: x.clone(),
            target: y.clone(),
            space,
        })
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &SubspaceBasis {
        &self.space
    }

    pub fn basis_matrix(&self, i: usize) -> ExactMatrix {
        ExactMatrix::reshape(
            self.source.field(),
            self.source.dim(),
            self.target.dim(),
            self.space.vector(i).to_vec(),
        )
    }

    pub fn basis(&self) -> Vec<Morphism> {
        (0..self.dim())
            .map(|i| Morphism::new_unchecked(&self.source, &self.target, self.basis_matrix(i)))
            .collect()
    }

    /// `sum_i c_i F_i` as a matrix.
    pub fn combination(&self, c: &[Scalar]) -> ExactMatrix {
        ExactMatrix::reshape(
            self.source.field(),
            self.source.dim(),
            self.target.dim(),
            self.space.from_coordinates(c),
        )
    }

    pub fn morphism(&self, c: &[Scalar]) -> Morphism {
        Morphism::new_unchecked(&self.source, &self.target, self.combination(c))
    }

    /// Coordinates of a matrix in the Hom basis, `None` if it is not a
    /// morphism.
    pub fn coordinates(&self, m: &ExactMatrix) -> Option<Vec<Scalar>> {
        self.space.coordinates(m.data())
    }

    pub fn contains(&self, m: &ExactMatrix) -> bool {
        self.space.contains(m.data())
    }

    /// For `X = Y`: the algebra on this basis with `f_i f_j = F_i F_j`.
    fn composition_algebra(&self) -> Algebra {
        let f = self.source.field();
        let d = self.dim();
        let mats: Vec<ExactMatrix> = (0..d).map(|i| self.basis_matrix(i)).collect();
        let mut mult = Vec::with_capacity(d * d);
        for a in &mats {
            for b in &mats {
                mult.push(self.coordinates(&a.mul(b)).expect("End is closed under composition"));
            }
        }
        let unit = self
            .coordinates(&ExactMatrix::identity(f, self.source.dim()))
            .expect("identity is an endomorphism");
        Algebra::assemble(AlgebraParts {
            field: f.clone(),
            dim: d,
            mult,
            unit,
            labels: (1..=d).map(|i| format!("f{i}")).collect(),
            paths: None,
            rep: Some(mats),
            idempotents: None,
            opposite_of: None,
        })
    }
}

/// Indecomposable projectives, simples and injectives of an algebra, one of
/// each per primitive idempotent and in the same order.
#[derive(Clone, Debug)]
pub struct BasicModules {
    pub projectives: Vec<Module>,
    pub simples: Vec<Module>,
    pub injectives: Vec<Module>,
    /// Basis of `e_i A` inside `A`, matching the basis of `projectives[i]`.
    pub projective_bases: Vec<SubspaceBasis>,
}

/// Cached action data for [`BasicModules`]. Modules hold their algebra, so
/// only matrices are stored on the algebra to avoid a reference cycle.
pub(crate) struct AlgebraModules {
    projectives: Vec<(usize, Vec<ExactMatrix>)>,
    simples: Vec<(usize, Vec<ExactMatrix>)>,
    injectives: Vec<(usize, Vec<ExactMatrix>)>,
    projective_bases: Vec<SubspaceBasis>,
}

impl Algebra {
    pub fn basic_modules(&self) -> Result<BasicModules> {
        if self.0.modules.get().is_none() {
            let computed = compute_basic_modules(self)?;
            let _ = self.0.modules.set(computed);
        }
        let data = self.0.modules.get().expect("just set");
        let build = |v: &[(usize, Vec<ExactMatrix>)]| {
            v.iter()
                .map(|(d, act)| Module::new_unchecked(self, *d, act.clone()))
                .collect()
        };
        Ok(BasicModules {
            projectives: build(&data.projectives),
            simples: build(&data.simples),
            injectives: build(&data.injectives),
            projective_bases: data.projective_bases.clone(),
        })
    }

    pub fn projectives(&self) -> Result<Vec<Module>> {
        Ok(self.basic_modules()?.projectives)
    }

    pub fn simples(&self) -> Result<Vec<Module>> {
        Ok(self.basic_modules()?.simples)
    }

    pub fn injectives(&self) -> Result<Vec<Module>> {
        Ok(self.basic_modules()?.injectives)
    }
}

fn projective_parts(a: &Algebra) -> Result<Vec<(Module, SubspaceBasis)>> {
    let reg = Module::regular(a);
    let mut out = Vec::new();
    for e in a.primitive_idempotents()? {
        let vecs = (0..a.dim()).map(|i| a.product(e, &a.basis_vector(i))).collect();
        let basis = SubspaceBasis::from_vectors(a.field(), a.dim(), vecs);
        let (p, _) = reg.submodule(&basis)?;
        out.push((p, basis));
    }
    Ok(out)
}

fn compute_basic_modules(a: &Algebra) -> Result<AlgebraModules> {
    let parts = projective_parts(a)?;
    let mut simples = Vec::new();
    for (p, _) in &parts {
        let (s, _) = p.top();
        simples.push((s.dim(), s.actions().to_vec()));
    }
    let op = a.opposite();
    let mut injectives = Vec::new();
    for (p, _) in projective_parts(&op)? {
        let d = p.dual();
        injectives.push((d.dim(), d.actions().to_vec()));
    }
    Ok(AlgebraModules {
        projectives: parts.iter().map(|(p, _)| (p.dim(), p.actions().to_vec())).collect(),
        projective_bases: parts.into_iter().map(|(_, b)| b).collect(),
        simples,
        injectives,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Arrow, QuiverPresentation};

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

    /// `M_k` over `k[x]/(x^n)`: x acts as a nilpotent Jordan block.
    fn jordan(a: &Algebra, k: usize) -> Module {
        let f = a.field();
        let mut x = ExactMatrix::zeros(f, k, k);
        for i in 0..k.saturating_sub(1) {
            x.set(i, i + 1, f.one());
        }
        Module::from_representation(a, &[k], &[x]).unwrap()
    }

    #[test]
    fn module_law_is_checked() {
        let f = Field::gf(2).unwrap();
        let a = truncated(&f, 2);
        // x acting invertibly breaks x^2 = 0.
        let bad = Module::from_representation(&a, &[1], &[ExactMatrix::identity(&f, 1)]);
        assert!(matches!(bad, Err(Error::ModuleLaw(_))));
    }

    #[test]
    fn hom_dimensions() {
        let f = Field::gf(3).unwrap();
        let a = a2(&f);
        let b = a.basic_modules().unwrap();
        assert_eq!(b.projectives.iter().map(Module::dim).collect::<Vec<_>>(), vec![2, 1]);
        assert_eq!(b.injectives.iter().map(Module::dim).collect::<Vec<_>>(), vec![1, 2]);
        let (s1, s2) = (&b.simples[0], &b.simples[1]);
        assert_eq!(HomSpace::new(s1, s2).unwrap().dim(), 0);
        assert_eq!(HomSpace::new(&b.projectives[0], s1).unwrap().dim(), 1);

        let g = Field::rationals();
        let k3 = truncated(&g, 3);
        let m3 = jordan(&k3, 3);
        assert_eq!(HomSpace::new(&m3, &m3).unwrap().dim(), 3);
    }

    #[test]
    fn kernels_and_composition() {
        let f = Field::gf(2).unwrap();
        let a = truncated(&f, 2);
        let reg = Module::regular(&a);
        let s = jordan(&a, 1);
        let hs = HomSpace::new(&reg, &s).unwrap();
        let pi = hs.basis()[0].clone();
        let iota = HomSpace::new(&s, &reg).unwrap().basis()[0].clone();
        assert!(Morphism::compose(&iota, &pi).unwrap().is_zero());
        let x = Morphism::compose(&pi, &iota).unwrap();
        assert_eq!(x.rank(), 1);
        assert!(iota.is_mono() && !iota.is_epi());
        let (k, incl) = pi.kernel();
        assert_eq!(k.dim(), 1);
        assert!(incl.then(&pi).is_zero());
        assert!(k.is_isomorphic(&s).unwrap());
    }

    #[test]
    fn decomposition_of_sum() {
        let f = Field::gf(3).unwrap();
        let a = a2(&f);
        let b = a.basic_modules().unwrap();
        let (sum, _, _) = Module::direct_sum(&a, &[b.projectives[0].clone(), b.simples[1].clone()]).unwrap();
        assert!(!sum.is_indecomposable().unwrap());
        let parts = sum.decompose().unwrap();
        assert_eq!(parts.len(), 2);
        let mut dims: Vec<usize> = parts.iter().map(|s| s.module.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
        for s in &parts {
            assert!(s.inclusion.then(&s.projection).matrix.is_identity());
            assert!(s.module.is_indecomposable().unwrap());
        }
        let (again, inj, _) =
            Module::direct_sum(&a, &parts.iter().map(|s| s.module.clone()).collect::<Vec<_>>()).unwrap();
        assert!(again.is_isomorphic(&sum).unwrap());
        assert_eq!(inj.len(), 2);
    }

    #[test]
    fn projective_injective_simple_flags() {
        let f = Field::gf(2).unwrap();
        let a = truncated(&f, 2);
        let s = jordan(&a, 1);
        assert!(s.is_simple());
        assert!(!s.is_projective().unwrap());
        assert!(!s.is_injective().unwrap());
        let reg = Module::regular(&a);
        assert!(reg.is_projective().unwrap() && reg.is_injective().unwrap());

        let g = Field::gf(3).unwrap();
        let a2 = a2(&g);
        let b = a2.basic_modules().unwrap();
        assert!(b.projectives[0].is_injective().unwrap());
        assert!(b.projectives[0].is_isomorphic(&b.injectives[1]).unwrap());
    }

    #[test]
    fn dual_round_trip() {
        let f = Field::gf(3).unwrap();
        let a = a2(&f);
        let p1 = a.projectives().unwrap()[0].clone();
        let dd = p1.dual().dual();
        assert_eq!(dd.algebra(), &a);
        assert!(dd.is_isomorphic(&p1).unwrap());
    }

    #[test]
    fn residue_dims() {
        let f = Field::gf(2).unwrap();
        let a = truncated(&f, 3);
        for k in 1..=3 {
            let m = jordan(&a, k);
            assert!(m.is_indecomposable().unwrap());
            assert_eq!(m.residue_dim(), 1);
        }
    }
}

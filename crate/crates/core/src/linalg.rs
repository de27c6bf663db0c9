//! Dense exact matrices and subspace calculus.
//!
//! Vectors are rows and matrices act on the right: `x -> x * A`. Kernels are
//! left kernels `{v : v * A = 0}` and `solve` finds `x` with `x * A = b`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Field, Scalar};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ExactMatrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{} over {} [", self.rows, self.cols, self.field)?;
        for r in 0..self.rows {
            if r > 0 {
                write!(f, "; ")?;
            }
            let row: Vec<String> = self.row(r).iter().map(|x| self.field.format(x)).collect();
            write!(f, "{}", row.join(" "))?;
        }
        write!(f, "]")
    }
}

/// Reduced row echelon form together with rank and pivot columns.
#[derive(Clone, Debug)]
pub struct Rref {
    pub matrix: ExactMatrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl ExactMatrix {
    pub fn zeros(field: &Field, rows: usize, cols: usize) -> Self {
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: &Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    pub fn from_data(field: &Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data,
        })
    }

    /// Builds a matrix from rows; `cols` is needed when there are no rows.
    pub fn from_rows(field: &Field, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for (i, r) in rows.into_iter().enumerate() {
            if r.len() != cols {
                return Err(Error::DimensionMismatch(format!(
                    "row {i} has {} entries, expected {cols}",
                    r.len()
                )));
            }
            data.extend(r);
        }
        Self::from_data(field, n, cols, data)
    }

    pub fn from_i64(field: &Field, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .flat_map(|r| {
                assert_eq!(r.len(), cols, "ragged rows");
                r.iter().map(|&x| field.from_i64(x))
            })
            .collect();
        ExactMatrix {
            field: field.clone(),
            rows: rows.len(),
            cols,
            data,
        }
    }

    pub fn row_vector(field: &Field, v: Vec<Scalar>) -> Self {
        let n = v.len();
        ExactMatrix {
            field: field.clone(),
            rows: 1,
            cols: n,
            data: v,
        }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Scalar] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    pub fn into_data(self) -> Vec<Scalar> {
        self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| self.field.is_zero(x))
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let x = self.get(i, j);
                    if i == j {
                        self.field.is_one(x)
                    } else {
                        self.field.is_zero(x)
                    }
                })
            })
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        ExactMatrix {
            field: self.field.clone(),
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(
            self.cols, other.rows,
            "matrix product of {}x{} and {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let f = &self.field;
        let mut out = ExactMatrix::zeros(f, self.rows, other.cols);
        for i in 0..self.rows {
            let out_row = &mut out.data[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = &self.data[i * self.cols + k];
                if f.is_zero(a) {
                    continue;
                }
                f.axpy(out_row, a, other.row(k));
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length mismatch");
        let mut out = vec![self.field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            self.field.axpy(&mut out, a, self.row(k));
        }
        out
    }

    pub fn add(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = &self.field;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| f.add(a, b))
            .collect();
        ExactMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, other: &ExactMatrix) -> ExactMatrix {
        self.add(&other.scale(&self.field.from_i64(-1)))
    }

    pub fn scale(&self, a: &Scalar) -> ExactMatrix {
        let f = &self.field;
        ExactMatrix {
            field: f.clone(),
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| f.mul(a, x)).collect(),
        }
    }

    /// `self += a * other`.
    pub fn add_scaled(&mut self, a: &Scalar, other: &ExactMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        let f = self.field.clone();
        f.axpy(&mut self.data, a, &other.data);
    }

    /// Linear combination `sum coeffs[i] * mats[i]`; needs the shape for empty input.
    pub fn combination(
        field: &Field,
        rows: usize,
        cols: usize,
        coeffs: &[Scalar],
        mats: &[ExactMatrix],
    ) -> ExactMatrix {
        let mut out = ExactMatrix::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            out.add_scaled(c, m);
        }
        out
    }

    pub fn vstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.cols, other.cols, "vstack column mismatch");
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn hstack(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.rows, other.rows, "hstack row mismatch");
        let cols = self.cols + other.cols;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend(self.row(r).iter().cloned());
            data.extend(other.row(r).iter().cloned());
        }
        ExactMatrix {
            field: self.field.clone(),
            rows: self.rows,
            cols,
            data,
        }
    }

    /// Block diagonal matrix.
    pub fn block_diag(field: &Field, blocks: &[&ExactMatrix]) -> ExactMatrix {
        let rows: usize = blocks.iter().map(|b| b.rows).sum();
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut out = ExactMatrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for r in 0..b.rows {
                for c in 0..b.cols {
                    out.set(r0 + r, c0 + c, b.get(r, c).clone());
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        out
    }

    pub fn submatrix(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for r in rows.clone() {
            data.extend(self.row(r)[cols.clone()].iter().cloned());
        }
        ExactMatrix {
            field: self.field.clone(),
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    pub fn select_rows(&self, idx: &[usize]) -> Self {
        let mut data = Vec::with_capacity(idx.len() * self.cols);
        for &r in idx {
            data.extend(self.row(r).iter().cloned());
        }
        ExactMatrix {
            field: self.field.clone(),
            rows: idx.len(),
            cols: self.cols,
            data,
        }
    }

    pub fn rref(&self) -> Rref {
        let (matrix, pivots) = self.rref_in_place(None);
        Rref {
            rank: pivots.len(),
            matrix,
            pivots,
        }
    }

    /// Gauss-Jordan elimination. When `track` is given, the same row
    /// operations are applied to it.
    fn rref_in_place(&self, mut track: Option<&mut ExactMatrix>) -> (ExactMatrix, Vec<usize>) {
        let f = self.field.clone();
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(piv) = (r..m.rows).find(|&i| !f.is_zero(m.get(i, c))) else {
                continue;
            };
            if piv != r {
                m.swap_rows(piv, r);
                if let Some(t) = track.as_deref_mut() {
                    t.swap_rows(piv, r);
                }
            }
            let inv = f.inv(m.get(r, c));
            if !f.is_one(&inv) {
                for x in m.row_mut(r) {
                    *x = f.mul(&inv, x);
                }
                if let Some(t) = track.as_deref_mut() {
                    for x in t.row_mut(r) {
                        *x = f.mul(&inv, x);
                    }
                }
            }
            let pivot_row = m.row(r).to_vec();
            let track_row = track.as_deref().map(|t| t.row(r).to_vec());
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.get(i, c).clone();
                if f.is_zero(&factor) {
                    continue;
                }
                let neg = f.neg(&factor);
                f.axpy(m.row_mut(i), &neg, &pivot_row);
                if let (Some(t), Some(tr)) = (track.as_deref_mut(), track_row.as_ref()) {
                    f.axpy(t.row_mut(i), &neg, tr);
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Basis of the left kernel `{v : v * self = 0}`.
    pub fn kernel_basis(&self) -> SubspaceBasis {
        // v * A = 0  <=>  A^T v^T = 0: right nullspace of the transpose.
        let t = self.transpose();
        let rr = t.rref();
        let n = self.rows;
        let f = &self.field;
        let mut vectors = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut ps = vec![None; n];
            for (i, &p) in rr.pivots.iter().enumerate() {
                ps[p] = Some(i);
            }
            ps
        };
        for free in 0..n {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![f.zero(); n];
            v[free] = f.one();
            for (i, &p) in rr.pivots.iter().enumerate() {
                v[p] = f.neg(rr.matrix.get(i, free));
            }
            vectors.push(v);
        }
        SubspaceBasis::from_vectors(f, n, vectors)
    }

    /// Some `x` with `x * self = b`, free variables set to zero; `None` if inconsistent.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.cols {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for a matrix with {} columns",
                b.len(),
                self.cols
            )));
        }
        Ok(Solver::new(self).solve(b))
    }

    pub fn inverse(&self) -> Option<ExactMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut track = ExactMatrix::identity(&self.field, n);
        let (_, pivots) = self.rref_in_place(Some(&mut track));
        (pivots.len() == n).then_some(track)
    }

    pub fn row_space(&self) -> SubspaceBasis {
        SubspaceBasis::from_matrix(self)
    }

    /// Flattens the matrix row-major into a single vector.
    pub fn flatten(&self) -> Vec<Scalar> {
        self.data.clone()
    }

    pub fn reshape(field: &Field, rows: usize, cols: usize, v: Vec<Scalar>) -> ExactMatrix {
        assert_eq!(v.len(), rows * cols);
        ExactMatrix {
            field: field.clone(),
            rows,
            cols,
            data: v,
        }
    }

    pub fn trace(&self) -> Scalar {
        let f = &self.field;
        let mut acc = f.zero();
        for i in 0..self.rows.min(self.cols) {
            acc = f.add(&acc, self.get(i, i));
        }
        acc
    }

    pub fn pow(&self, mut e: u64) -> ExactMatrix {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = ExactMatrix::identity(&self.field, self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

/// Repeated solving of `x * A = b` for a fixed `A`.
#[derive(Clone, Debug)]
pub struct Solver {
    field: Field,
    rows: usize,
    /// Transformation `T` with `T * A^T = R` in reduced echelon form.
    transform: ExactMatrix,
    pivots: Vec<usize>,
}

impl Solver {
    pub fn new(a: &ExactMatrix) -> Self {
        let at = a.transpose();
        let mut track = ExactMatrix::identity(a.field(), at.rows());
        let (_, pivots) = at.rref_in_place(Some(&mut track));
        Solver {
            field: a.field().clone(),
            rows: a.rows(),
            transform: track,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        let f = &self.field;
        // y = T b^T
        let y: Vec<Scalar> = (0..self.transform.rows())
            .map(|i| {
                let mut acc = f.zero();
                for (t, bj) in self.transform.row(i).iter().zip(b) {
                    if !f.is_zero(t) && !f.is_zero(bj) {
                        acc = f.add(&acc, &f.mul(t, bj));
                    }
                }
                acc
            })
            .collect();
        if y[self.pivots.len()..].iter().any(|v| !f.is_zero(v)) {
            return None;
        }
        let mut x = vec![f.zero(); self.rows];
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = y[i].clone();
        }
        Some(x)
    }
}

/// Canonical basis of a subspace: rows in reduced echelon form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SubspaceBasis {
    field: Field,
    ambient_dim: usize,
    basis: ExactMatrix,
    pivots: Vec<usize>,
}

impl fmt::Debug for SubspaceBasis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Subspace(dim {} of {}: {:?})",
            self.dim(),
            self.ambient_dim,
            self.basis
        )
    }
}

impl SubspaceBasis {
    pub fn zero(field: &Field, ambient_dim: usize) -> Self {
        SubspaceBasis {
            field: field.clone(),
            ambient_dim,
            basis: ExactMatrix::zeros(field, 0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: &Field, ambient_dim: usize) -> Self {
        SubspaceBasis {
            field: field.clone(),
            ambient_dim,
            basis: ExactMatrix::identity(field, ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    pub fn from_matrix(m: &ExactMatrix) -> Self {
        let rr = m.rref();
        let basis = rr.matrix.submatrix(0..rr.rank, 0..m.cols());
        SubspaceBasis {
            field: m.field().clone(),
            ambient_dim: m.cols(),
            basis,
            pivots: rr.pivots,
        }
    }

    pub fn from_vectors(field: &Field, ambient_dim: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let m = ExactMatrix::from_rows(field, ambient_dim, vectors).expect("vector length");
        Self::from_matrix(&m)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    pub fn matrix(&self) -> &ExactMatrix {
        &self.basis
    }

    pub fn vectors(&self) -> Vec<Vec<Scalar>> {
        self.basis.row_iter().map(|r| r.to_vec()).collect()
    }

    pub fn vector(&self, i: usize) -> &[Scalar] {
        self.basis.row(i)
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_ambient(&self, other: &SubspaceBasis) -> Result<()> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch(format!(
                "ambient dimensions {} and {}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    pub fn sum(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_ambient(other)?;
        Ok(Self::from_matrix(&self.basis.vstack(&other.basis)))
    }

    /// Intersection via the left kernel of the stacked bases: `a U = -b V`.
    pub fn intersect(&self, other: &SubspaceBasis) -> Result<SubspaceBasis> {
        self.check_ambient(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(&self.field, self.ambient_dim));
        }
        let stacked = self.basis.vstack(&other.basis);
        let ker = stacked.kernel_basis();
        let d = self.dim();
        let vectors = ker
            .basis
            .row_iter()
            .map(|k| self.basis.vec_mul(&k[..d]))
            .collect();
        Ok(Self::from_vectors(&self.field, self.ambient_dim, vectors))
    }

    /// Reduces `v` against the echelon basis; the remainder is zero iff `v` lies in the span.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = &self.field;
        let mut r = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            if !f.is_zero(&r[p]) {
                let c = f.neg(&r[p]);
                f.axpy(&mut r, &c, self.basis.row(i));
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        assert_eq!(v.len(), self.ambient_dim, "vector length mismatch");
        self.reduce(v).iter().all(|x| self.field.is_zero(x))
    }

    pub fn contains_subspace(&self, other: &SubspaceBasis) -> bool {
        other.basis.row_iter().all(|v| self.contains(v))
    }

    /// Coordinates of `v` with respect to the echelon basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn from_coordinates(&self, c: &[Scalar]) -> Vec<Scalar> {
        self.basis.vec_mul(c)
    }

    /// Vectors of `self`'s echelon basis, taken in order, that extend `sub`
    /// to a basis of `sub + self`.
    pub fn extension_of(&self, sub: &SubspaceBasis) -> Vec<Vec<Scalar>> {
        let mut acc = sub.clone();
        let mut out = Vec::new();
        for v in self.basis.row_iter() {
            if !acc.contains(v) {
                out.push(v.to_vec());
                acc = acc
                    .sum(&SubspaceBasis::from_vectors(
                        &self.field,
                        self.ambient_dim,
                        vec![v.to_vec()],
                    ))
                    .expect("same ambient");
            }
        }
        out
    }

    /// Standard basis vectors completing `self` to the whole space, in index order.
    pub fn complement(&self) -> Vec<Vec<Scalar>> {
        let f = &self.field;
        let mut is_pivot = vec![false; self.ambient_dim];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient_dim)
            .filter(|&i| !is_pivot[i])
            .map(|i| {
                let mut v = vec![f.zero(); self.ambient_dim];
                v[i] = f.one();
                v
            })
            .collect()
    }

    /// Image of the subspace under `x -> x * m`.
    pub fn image(&self, m: &ExactMatrix) -> SubspaceBasis {
        SubspaceBasis::from_matrix(&self.basis.mul(m))
    }
}

/// Coordinates in a quotient `sup / sub`, with representatives chosen by
/// extending the echelon basis of `sub` with vectors from `sup`'s echelon basis.
#[derive(Clone, Debug)]
pub struct QuotientSpace {
    sub: SubspaceBasis,
    reps: Vec<Vec<Scalar>>,
    /// Solver for `x * [reps; sub] = v`.
    solver: Solver,
    ambient_dim: usize,
    field: Field,
}

impl QuotientSpace {
    pub fn new(sup: &SubspaceBasis, sub: &SubspaceBasis) -> Self {
        let reps = sup.extension_of(sub);
        let field = sup.field().clone();
        let n = sup.ambient_dim();
        let mut stacked = ExactMatrix::from_rows(&field, n, reps.clone()).expect("rep length");
        stacked = stacked.vstack(sub.matrix());
        QuotientSpace {
            sub: sub.clone(),
            solver: Solver::new(&stacked),
            reps,
            ambient_dim: n,
            field,
        }
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn representatives(&self) -> &[Vec<Scalar>] {
        &self.reps
    }

    pub fn sub(&self) -> &SubspaceBasis {
        &self.sub
    }

    /// Quotient coordinates of `v`, or `None` if `v` is outside `sup`.
    pub fn coords(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let x = self.solver.solve(v)?;
        Some(x[..self.reps.len()].to_vec())
    }

    pub fn representative(&self, coords: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![self.field.zero(); self.ambient_dim];
        for (c, r) in coords.iter().zip(&self.reps) {
            self.field.axpy(&mut out, c, r);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> Field {
        Field::gf(p).unwrap()
    }

    #[test]
    fn rref_examples() {
        let f = gf(2);
        let id = ExactMatrix::identity(&f, 3);
        let r = id.rref();
        assert_eq!(r.matrix, id);
        assert_eq!(r.rank, 3);
        assert_eq!(r.pivots, vec![0, 1, 2]);

        let q = Field::rationals();
        let m = ExactMatrix::from_i64(&q, &[&[1, 2], &[2, 4]]);
        let r = m.rref();
        assert_eq!(r.matrix, ExactMatrix::from_i64(&q, &[&[1, 2], &[0, 0]]));
        assert_eq!(r.rank, 1);

        let f3 = gf(3);
        let m = ExactMatrix::from_i64(&f3, &[&[1, 1], &[1, 2]]);
        assert_eq!(m.rref().matrix, ExactMatrix::identity(&f3, 2));
        assert_eq!(m.rank(), 2);

        let empty = ExactMatrix::zeros(&f, 0, 3);
        assert_eq!(empty.rref().rank, 0);
    }

    #[test]
    fn kernel_examples() {
        let f = gf(2);
        assert_eq!(ExactMatrix::zeros(&f, 2, 2).kernel_basis().dim(), 2);
        let q = Field::rationals();
        assert_eq!(ExactMatrix::identity(&q, 3).kernel_basis().dim(), 0);
        let m = ExactMatrix::from_i64(&f, &[&[1, 1], &[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(k.vector(0), &[f.one(), f.one()]);
    }

    #[test]
    fn solve_examples() {
        let q = Field::rationals();
        let id = ExactMatrix::identity(&q, 2);
        let b = vec![q.from_i64(3), q.from_i64(-1)];
        assert_eq!(id.solve(&b).unwrap(), Some(b.clone()));

        let f = gf(2);
        let a = ExactMatrix::from_i64(&f, &[&[1], &[1]]);
        assert_eq!(a.solve(&[f.one()]).unwrap(), Some(vec![f.one(), f.zero()]));

        let z = ExactMatrix::zeros(&f, 2, 1);
        assert_eq!(z.solve(&[f.one()]).unwrap(), None);
        assert!(z.solve(&[f.one(), f.one()]).is_err());
    }

    #[test]
    fn subspace_examples() {
        let f = gf(2);
        let u = SubspaceBasis::from_vectors(&f, 2, vec![vec![f.one(), f.zero()]]);
        let v = SubspaceBasis::from_vectors(&f, 2, vec![vec![f.zero(), f.one()]]);
        assert_eq!(u.sum(&u).unwrap(), u);
        assert_eq!(u.intersect(&u).unwrap(), u);
        assert_eq!(u.sum(&v).unwrap().dim(), 2);
        assert_eq!(u.intersect(&v).unwrap().dim(), 0);

        let a = SubspaceBasis::from_vectors(&f, 3, vec![vec![f.one(), f.zero(), f.one()]]);
        let b = SubspaceBasis::from_vectors(&f, 3, vec![vec![f.zero(), f.one(), f.one()]]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.intersect(&b).unwrap().dim(), 0);
        let other = SubspaceBasis::zero(&f, 2);
        assert!(a.sum(&other).is_err());
    }

    #[test]
    fn quotient_coordinates() {
        let q = Field::rationals();
        let sup = SubspaceBasis::full(&q, 3);
        let sub = SubspaceBasis::from_vectors(
            &q,
            3,
            vec![vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)]],
        );
        let qs = QuotientSpace::new(&sup, &sub);
        assert_eq!(qs.dim(), 2);
        let v = vec![q.from_i64(1), q.from_i64(1), q.from_i64(0)];
        assert!(qs.coords(&v).unwrap().iter().all(|x| q.is_zero(x)));
    }

    #[test]
    fn inverse_roundtrip() {
        let f = gf(5);
        let m = ExactMatrix::from_i64(&f, &[&[1, 2], &[3, 4]]);
        let inv = m.inverse().unwrap();
        assert!(m.mul(&inv).is_identity());
        assert!(ExactMatrix::from_i64(&f, &[&[1, 2], &[2, 4]]).inverse().is_none());
    }
}

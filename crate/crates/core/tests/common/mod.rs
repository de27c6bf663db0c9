//! Oracles that recompute radical data from scratch, sharing nothing with
//! the library beyond Hom spaces and subspace arithmetic.

#![allow(dead_code)]

use raddeg_core::{ExactMatrix, Field, FieldKind, HomSpace, Level, Module, RadicalTable, Scalar, SubspaceBasis};

/// Every vector of `field^k`, finite fields only.
pub fn all_vectors(field: &Field, k: usize) -> Vec<Vec<Scalar>> {
    let elems: Vec<Scalar> = field.elements().expect("finite field").collect();
    let mut out = vec![Vec::new()];
    for _ in 0..k {
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
    out
}

fn hom_vectors(h: &HomSpace) -> Vec<Vec<Scalar>> {
    (0..h.dim()).map(|k| h.basis_matrix(k).flatten()).collect()
}

/// `rad End(M)` for an indecomposable `M`: by enumerating nilpotent
/// endomorphisms over a finite field, by the trace form in characteristic 0.
pub fn end_radical(m: &Module, end: &HomSpace) -> SubspaceBasis {
    let f = m.field();
    let d = m.dim();
    let amb = d * d;
    if f.kind() == FieldKind::Rationals {
        let b: Vec<ExactMatrix> = (0..end.dim()).map(|k| end.basis_matrix(k)).collect();
        let rows = b.iter().map(|x| b.iter().map(|y| x.mul(y).trace()).collect()).collect();
        let form = ExactMatrix::from_rows(f, b.len(), rows).unwrap();
        let vecs = form.kernel_basis().vectors().iter().map(|c| end.combination(c).flatten()).collect();
        SubspaceBasis::from_vectors(f, amb, vecs)
    } else {
        let vecs = all_vectors(f, end.dim())
            .iter()
            .map(|c| end.combination(c))
            .filter(|x| x.pow(d as u64).is_zero())
            .map(|x| x.flatten())
            .collect();
        SubspaceBasis::from_vectors(f, amb, vecs)
    }
}

pub struct Oracle {
    pub field: Field,
    pub dims: Vec<usize>,
    pub rad: Vec<Vec<SubspaceBasis>>,
    pub rad2: Vec<Vec<SubspaceBasis>>,
    pub irr: Vec<Vec<Vec<Vec<Scalar>>>>,
    /// `powers[m][i][j]`: span of composites of irr paths of length `>= m`,
    /// with `powers[0]` the whole Hom space.
    pub powers: Vec<Vec<Vec<SubspaceBasis>>>,
}

impl Oracle {
    pub fn new(t: &RadicalTable) -> Oracle {
        let c = t.catalogue();
        let field = t.field().clone();
        let r = c.len();
        let dims: Vec<usize> = c.members().iter().map(Module::dim).collect();
        let mul = |i: usize, z: usize, j: usize, a: &[Scalar], b: &[Scalar]| -> Vec<Scalar> {
            let a = ExactMatrix::reshape(&field, dims[i], dims[z], a.to_vec());
            let b = ExactMatrix::reshape(&field, dims[z], dims[j], b.to_vec());
            a.mul(&b).flatten()
        };
        let rad: Vec<Vec<SubspaceBasis>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let h = t.hom(i, j);
                        if i == j {
                            end_radical(c.member(i), h)
                        } else {
                            SubspaceBasis::from_vectors(&field, dims[i] * dims[j], hom_vectors(h))
                        }
                    })
                    .collect()
            })
            .collect();
        let rad2: Vec<Vec<SubspaceBasis>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        let mut vecs = Vec::new();
                        for (z, row) in rad.iter().enumerate() {
                            for a in rad[i][z].vectors() {
                                for b in row[j].vectors() {
                                    vecs.push(mul(i, z, j, &a, &b));
                                }
                            }
                        }
                        SubspaceBasis::from_vectors(&field, dims[i] * dims[j], vecs)
                    })
                    .collect()
            })
            .collect();
        let irr: Vec<Vec<Vec<Vec<Scalar>>>> =
            (0..r).map(|i| (0..r).map(|j| rad[i][j].extension_of(&rad2[i][j])).collect()).collect();

        // paths[k][i][j]: span of composites of exactly k irr-basis elements
        let mut paths: Vec<Vec<Vec<SubspaceBasis>>> = vec![(0..r)
            .map(|i| (0..r).map(|j| SubspaceBasis::from_vectors(&field, dims[i] * dims[j], irr[i][j].clone())).collect())
            .collect()];
        loop {
            let last = paths.last().unwrap();
            if last.iter().flatten().all(SubspaceBasis::is_zero) {
                break;
            }
            let next = (0..r)
                .map(|i| {
                    (0..r)
                        .map(|j| {
                            let mut vecs = Vec::new();
                            for z in 0..r {
                                for p in last[i][z].vectors() {
                                    for g in &irr[z][j] {
                                        vecs.push(mul(i, z, j, &p, g));
                                    }
                                }
                            }
                            SubspaceBasis::from_vectors(&field, dims[i] * dims[j], vecs)
                        })
                        .collect()
                })
                .collect();
            paths.push(next);
        }
        // powers[m] = composites of length >= m; the last path level is zero
        let zero: Vec<Vec<SubspaceBasis>> =
            (0..r).map(|i| (0..r).map(|j| SubspaceBasis::zero(&field, dims[i] * dims[j])).collect()).collect();
        let mut powers = vec![zero; paths.len() + 1];
        for m in (1..=paths.len()).rev() {
            let deeper = if m < paths.len() { powers[m + 1].clone() } else { powers[m].clone() };
            powers[m] = (0..r)
                .map(|i| (0..r).map(|j| deeper[i][j].sum(&paths[m - 1][i][j]).unwrap()).collect())
                .collect();
        }
        powers[0] = (0..r)
            .map(|i| (0..r).map(|j| SubspaceBasis::from_vectors(&field, dims[i] * dims[j], hom_vectors(t.hom(i, j)))).collect())
            .collect();
        Oracle { field, dims, rad, rad2, irr, powers }
    }

    pub fn power_dim(&self, m: usize, i: usize, j: usize) -> usize {
        self.powers.get(m).map_or(0, |p| p[i][j].dim())
    }

    /// Number of levels with a nonzero power, the oracle's nilpotency bound.
    pub fn bound(&self) -> usize {
        self.powers.len() - 1
    }

    /// Radical depth of a flattened matrix in `Hom(i, j)`.
    pub fn depth(&self, i: usize, j: usize, v: &[Scalar]) -> Level {
        if v.iter().all(|x| self.field.is_zero(x)) {
            return Level::InfiniteAtBound;
        }
        let mut m = 0;
        while m + 1 < self.powers.len() && self.powers[m + 1][i][j].contains(v) {
            m += 1;
        }
        Level::Finite(m)
    }

    fn compose(&self, i: usize, z: usize, j: usize, a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
        let a = ExactMatrix::reshape(&self.field, self.dims[i], self.dims[z], a.to_vec());
        let b = ExactMatrix::reshape(&self.field, self.dims[z], self.dims[j], b.to_vec());
        a.mul(&b).flatten()
    }

    fn deep_enough(&self, i: usize, j: usize, v: &[Scalar], m: usize) -> bool {
        match self.depth(i, j, v) {
            Level::InfiniteAtBound => true,
            Level::Finite(d) => d >= m,
        }
    }

    /// Least `m` with some `h: Z -> X` of depth exactly `m` and `h f` in
    /// `rad^{m+2}`, by enumeration of every `h` (finite fields only).
    pub fn left_degree(&self, t: &RadicalTable, i: usize, j: usize, f: &[Scalar]) -> Level {
        for m in 0..self.bound() {
            for z in 0..self.dims.len() {
                let h = t.hom(z, i);
                for c in all_vectors(&self.field, h.dim()) {
                    let hv = h.combination(&c).flatten();
                    if self.depth(z, i, &hv) == Level::Finite(m) && self.deep_enough(z, j, &self.compose(z, i, j, &hv, f), m + 2) {
                        return Level::Finite(m);
                    }
                }
            }
        }
        Level::InfiniteAtBound
    }

    /// Dual of [`Oracle::left_degree`]: `h: Y -> Z` with `f h` in `rad^{m+2}`.
    pub fn right_degree(&self, t: &RadicalTable, i: usize, j: usize, f: &[Scalar]) -> Level {
        for m in 0..self.bound() {
            for z in 0..self.dims.len() {
                let h = t.hom(j, z);
                for c in all_vectors(&self.field, h.dim()) {
                    let hv = h.combination(&c).flatten();
                    if self.depth(j, z, &hv) == Level::Finite(m) && self.deep_enough(i, z, &self.compose(i, j, z, f, &hv), m + 2) {
                        return Level::Finite(m);
                    }
                }
            }
        }
        Level::InfiniteAtBound
    }
}

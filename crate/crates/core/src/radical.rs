//! Powers of the radical of the module category over a catalogue.
//!
//! `rad(X, Y)` is all of `Hom(X, Y)` for distinct members and `J(End X)` on
//! the diagonal; higher powers follow `rad^{n+1}(X, Y) = sum_Z rad^n(X, Z) rad(Z, Y)`.
//! Subspaces are kept in coordinates of the Hom bases.

use std::fmt;

use rayon::prelude::*;

use crate::catalogue::Catalogue;
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::linalg::{ExactMatrix, QuotientSpace, SubspaceBasis};
use crate::module::{HomSpace, Module, Morphism};

pub const DEFAULT_CAP: usize = 30;

/// A radical level: finite, or beyond every level below the nilpotency bound
/// (the zero morphism, or no witness up to the bound).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Level {
    Finite(usize),
    InfiniteAtBound,
}

impl Level {
    pub fn finite(self) -> Option<usize> {
        match self {
            Level::Finite(n) => Some(n),
            Level::InfiniteAtBound => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Level::Finite(_))
    }
}

impl serde::Serialize for Level {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Level::Finite(n) => s.serialize_u64(*n as u64),
            Level::InfiniteAtBound => s.serialize_str("infinite-at-bound"),
        }
    }
}

impl fmt::Display for Level {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Level::Finite(n) => write!(f, "{n}"),
            Level::InfiniteAtBound => write!(f, "infinite-at-bound"),
        }
    }
}

/// One summand of a module decomposed into catalogue members:
/// `incl: member -> module`, `proj: module -> member`.
#[derive(Clone, Debug)]
pub struct Part {
    pub member: usize,
    pub incl: ExactMatrix,
    pub proj: ExactMatrix,
}

/// A module together with a decomposition into catalogue members.
#[derive(Clone, Debug)]
pub struct Endpoint {
    pub module: Module,
    pub parts: Vec<Part>,
}

impl Endpoint {
    pub fn is_indecomposable(&self) -> bool {
        self.parts.len() == 1
    }

    pub fn members(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.member).collect()
    }
}

/// `rad / rad^2` between two members with its valuation.
#[derive(Clone, Debug)]
pub struct IrrSpace {
    pub source: usize,
    pub target: usize,
    /// Representatives in `rad(X, Y)` of a basis of `rad / rad^2`.
    pub basis: Vec<Morphism>,
    pub dim: usize,
    /// `dim irr / dim kappa_X`.
    pub a: usize,
    /// `dim irr / dim kappa_Y`.
    pub b: usize,
}

pub struct RadicalTable {
    catalogue: Catalogue,
    homs: Vec<Vec<HomSpace>>,
    /// `comp[i][z][j][p]`: matrix of `q -> p q` from `Hom(z, j)` to `Hom(i, j)`
    /// coordinates, for the `p`-th basis element of `Hom(i, z)`.
    comp: Vec<Vec<Vec<Vec<ExactMatrix>>>>,
    /// `powers[n][i][j]` for `0 <= n <= nilpotency`.
    powers: Vec<Vec<Vec<SubspaceBasis>>>,
    graded: Vec<Vec<Vec<QuotientSpace>>>,
    nilpotency: usize,
    residue: Vec<usize>,
}

impl fmt::Debug for RadicalTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RadicalTable({} members, nilpotency {})",
            self.catalogue.len(),
            self.nilpotency
        )
    }
}

impl RadicalTable {
    pub fn build(catalogue: &Catalogue, cap: usize) -> Result<RadicalTable> {
        let r = catalogue.len();
        let members = catalogue.members();
        let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
        let flat: Vec<HomSpace> = pairs
            .par_iter()
            .map(|&(i, j)| HomSpace::new(&members[i], &members[j]))
            .collect::<Result<_>>()?;
        let mut homs: Vec<Vec<HomSpace>> = Vec::with_capacity(r);
        let mut it = flat.into_iter();
        for _ in 0..r {
            homs.push(it.by_ref().take(r).collect());
        }
        let residue: Vec<usize> = members.par_iter().map(Module::residue_dim).collect();

        let triples: Vec<(usize, usize, usize)> = (0..r)
            .flat_map(|i| (0..r).flat_map(move |z| (0..r).map(move |j| (i, z, j))))
            .collect();
        let comp_flat: Vec<Vec<ExactMatrix>> = triples
            .par_iter()
            .map(|&(i, z, j)| composition_maps(&homs[i][z], &homs[z][j], &homs[i][j]))
            .collect();
        let mut comp = vec![vec![Vec::with_capacity(r); r]; r];
        for (&(i, z, _), m) in triples.iter().zip(comp_flat) {
            comp[i][z].push(m);
        }

        let field = catalogue.algebra().field().clone();
        let level0: Vec<Vec<SubspaceBasis>> = (0..r)
            .map(|i| (0..r).map(|j| SubspaceBasis::full(&field, homs[i][j].dim())).collect())
            .collect();
        let level1: Vec<Vec<SubspaceBasis>> = (0..r)
            .map(|i| {
                (0..r)
                    .map(|j| {
                        if i == j {
                            end_radical_coords(&homs[i][i], &members[i])
                        } else {
                            SubspaceBasis::full(&field, homs[i][j].dim())
                        }
                    })
                    .collect()
            })
            .collect();
        let mut powers = vec![level0, level1];
        loop {
            let n = powers.len() - 1;
            if powers[n].iter().flatten().all(SubspaceBasis::is_zero) {
                break;
            }
            if n >= cap {
                return Err(Error::RepInfiniteSuspected(cap));
            }
            let next = next_level(&field, &homs, &comp, &powers[n], &powers[1]);
            powers.push(next);
        }
        let nilpotency = powers.len() - 1;
        let graded = (0..nilpotency)
            .map(|n| {
                (0..r)
                    .map(|i| {
                        (0..r)
                            .map(|j| QuotientSpace::new(&powers[n][i][j], &powers[n + 1][i][j]))
                            .collect()
                    })
                    .collect()
            })
            .collect();
        Ok(RadicalTable {
            catalogue: catalogue.clone(),
            homs,
            comp,
            powers,
            graded,
            nilpotency,
            residue,
        })
    }

    pub fn catalogue(&self) -> &Catalogue {
        &self.catalogue
    }

    pub fn field(&self) -> &Field {
        self.catalogue.algebra().field()
    }

    pub fn len(&self) -> usize {
        self.catalogue.len()
    }

    pub fn is_empty(&self) -> bool {
        self.catalogue.is_empty()
    }

    /// Least `N` with `rad^N = 0` on all pairs.
    pub fn nilpotency(&self) -> usize {
        self.nilpotency
    }

    pub fn hom(&self, i: usize, j: usize) -> &HomSpace {
        &self.homs[i][j]
    }

    /// `dim kappa` of member `i`.
    pub fn residue_dim(&self, i: usize) -> usize {
        self.residue[i]
    }

    /// `rad^n(i, j)` in Hom coordinates; zero from the nilpotency bound on.
    pub fn power(&self, n: usize, i: usize, j: usize) -> SubspaceBasis {
        if n <= self.nilpotency {
            self.powers[n][i][j].clone()
        } else {
            SubspaceBasis::zero(self.field(), self.homs[i][j].dim())
        }
    }

    pub fn power_ref(&self, n: usize, i: usize, j: usize) -> Option<&SubspaceBasis> {
        self.powers.get(n).map(|l| &l[i][j])
    }

    pub fn power_dim(&self, n: usize, i: usize, j: usize) -> usize {
        self.power_ref(n, i, j).map_or(0, SubspaceBasis::dim)
    }

    /// `rad^n / rad^{n+1}` between members, `None` once `n >= N`.
    pub fn graded(&self, n: usize, i: usize, j: usize) -> Option<&QuotientSpace> {
        self.graded.get(n).map(|l| &l[i][j])
    }

    pub fn graded_dim(&self, n: usize, i: usize, j: usize) -> usize {
        self.graded(n, i, j).map_or(0, QuotientSpace::dim)
    }

    /// Coordinates of `p q` in `Hom(i, j)` for `p` in `Hom(i, z)` and `q` in
    /// `Hom(z, j)`, all in Hom coordinates.
    pub fn compose_coords(&self, i: usize, z: usize, j: usize, p: &[Scalar], q: &[Scalar]) -> Vec<Scalar> {
        let f = self.field();
        let mut out = vec![f.zero(); self.homs[i][j].dim()];
        for (k, c) in p.iter().enumerate() {
            if f.is_zero(c) {
                continue;
            }
            let v = self.comp[i][z][j][k].vec_mul(q);
            f.axpy(&mut out, c, &v);
        }
        out
    }

    /// Depth of a morphism between members given by Hom coordinates.
    pub fn depth_coords(&self, i: usize, j: usize, c: &[Scalar]) -> Level {
        if c.iter().all(|x| self.field().is_zero(x)) {
            return Level::InfiniteAtBound;
        }
        let mut n = 0;
        while n < self.nilpotency && self.powers[n + 1][i][j].contains(c) {
            n += 1;
        }
        Level::Finite(n)
    }

    pub fn member_coords(&self, i: usize, j: usize, m: &ExactMatrix) -> Result<Vec<Scalar>> {
        self.homs[i][j].coordinates(m).ok_or(Error::NotAMorphism)
    }

    /// Decomposes a module into catalogue members.
    pub fn endpoint(&self, m: &Module) -> Result<Endpoint> {
        let f = self.field();
        let m = m.rehome(self.catalogue.algebra())?;
        if let Some(i) = self.catalogue.members().iter().position(|x| *x == m) {
            let id = ExactMatrix::identity(f, m.dim());
            return Ok(Endpoint {
                module: m,
                parts: vec![Part { member: i, incl: id.clone(), proj: id }],
            });
        }
        let mut parts = Vec::new();
        for s in m.decompose()? {
            let (i, iso) = self
                .catalogue
                .find(&s.module)?
                .ok_or(Error::NotInCatalogue(s.module.dim()))?;
            let inv = iso.matrix.inverse().expect("isomorphisms are invertible");
            parts.push(Part {
                member: i,
                incl: iso.matrix.mul(&s.inclusion.matrix),
                proj: s.projection.matrix.mul(&inv),
            });
        }
        Ok(Endpoint { module: m, parts })
    }

    pub fn member_endpoint(&self, i: usize) -> Endpoint {
        let m = self.catalogue.member(i).clone();
        let id = ExactMatrix::identity(self.field(), m.dim());
        Endpoint {
            module: m,
            parts: vec![Part { member: i, incl: id.clone(), proj: id }],
        }
    }

    /// Components `incl_a F proj_b` in Hom coordinates, indexed `[a][b]`.
    pub fn components(&self, x: &Endpoint, y: &Endpoint, f: &ExactMatrix) -> Result<Vec<Vec<Vec<Scalar>>>> {
        x.parts
            .iter()
            .map(|pa| {
                let left = pa.incl.mul(f);
                y.parts
                    .iter()
                    .map(|pb| self.member_coords(pa.member, pb.member, &left.mul(&pb.proj)))
                    .collect()
            })
            .collect()
    }

    /// Depth of a morphism between sums of members, componentwise.
    pub fn depth_between(&self, x: &Endpoint, y: &Endpoint, f: &ExactMatrix) -> Result<Level> {
        let comps = self.components(x, y, f)?;
        let mut best = Level::InfiniteAtBound;
        for (pa, row) in x.parts.iter().zip(&comps) {
            for (pb, c) in y.parts.iter().zip(row) {
                best = best.min(self.depth_coords(pa.member, pb.member, c));
            }
        }
        Ok(best)
    }

    pub fn depth(&self, f: &Morphism) -> Result<Level> {
        let x = self.endpoint(&f.source)?;
        let y = self.endpoint(&f.target)?;
        self.depth_between(&x, &y, &f.matrix)
    }

    /// Is the morphism in `rad^n`, checked componentwise?
    pub fn in_power(&self, n: usize, x: &Endpoint, y: &Endpoint, f: &ExactMatrix) -> Result<bool> {
        Ok(match self.depth_between(x, y, f)? {
            Level::InfiniteAtBound => true,
            Level::Finite(d) => d >= n,
        })
    }

    pub fn irr(&self, i: usize, j: usize) -> IrrSpace {
        let hom = &self.homs[i][j];
        let (basis, dim) = match self.graded(1, i, j) {
            Some(q) => (q.representatives().iter().map(|r| hom.morphism(r)).collect(), q.dim()),
            None => (Vec::new(), 0),
        };
        IrrSpace {
            source: i,
            target: j,
            basis,
            dim,
            a: dim / self.residue[i],
            b: dim / self.residue[j],
        }
    }

    /// `sum_Z rad(i, Z) rad^n(Z, j)`, which equals `rad^{n+1}(i, j)`.
    pub fn right_recursion(&self, n: usize, i: usize, j: usize) -> SubspaceBasis {
        let f = self.field();
        let mut vecs = Vec::new();
        for z in 0..self.len() {
            let a = &self.powers[1.min(self.nilpotency)][i][z];
            let b = self.power(n, z, j);
            for p in a.vectors() {
                for q in b.vectors() {
                    vecs.push(self.compose_coords(i, z, j, &p, &q));
                }
            }
        }
        SubspaceBasis::from_vectors(f, self.homs[i][j].dim(), vecs)
    }
}

fn composition_maps(p: &HomSpace, q: &HomSpace, target: &HomSpace) -> Vec<ExactMatrix> {
    let f = p.source.field();
    let qs: Vec<ExactMatrix> = (0..q.dim()).map(|k| q.basis_matrix(k)).collect();
    (0..p.dim())
        .map(|a| {
            let pm = p.basis_matrix(a);
            let rows = qs
                .iter()
                .map(|qm| target.coordinates(&pm.mul(qm)).expect("composite is a morphism"))
                .collect();
            ExactMatrix::from_rows(f, target.dim(), rows).expect("sizes")
        })
        .collect()
}

fn end_radical_coords(h: &HomSpace, m: &Module) -> SubspaceBasis {
    let j = m.end_radical();
    let vecs = j
        .vectors()
        .iter()
        .map(|v| h.space().coordinates(v).expect("radical elements are endomorphisms"))
        .collect();
    SubspaceBasis::from_vectors(m.field(), h.dim(), vecs)
}

fn next_level(
    field: &Field,
    homs: &[Vec<HomSpace>],
    comp: &[Vec<Vec<Vec<ExactMatrix>>>],
    cur: &[Vec<SubspaceBasis>],
    rad: &[Vec<SubspaceBasis>],
) -> Vec<Vec<SubspaceBasis>> {
    let r = homs.len();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (0..r).map(move |j| (i, j))).collect();
    let flat: Vec<SubspaceBasis> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let mut vecs = Vec::new();
            for z in 0..r {
                if cur[i][z].is_zero() || rad[z][j].is_zero() {
                    continue;
                }
                for u in cur[i][z].vectors() {
                    // Matrix of v -> u v from Hom(z, j) to Hom(i, j).
                    let mut m = ExactMatrix::zeros(field, homs[z][j].dim(), homs[i][j].dim());
                    for (p, c) in u.iter().enumerate() {
                        if !field.is_zero(c) {
                            m.add_scaled(c, &comp[i][z][j][p]);
                        }
                    }
                    let prod = rad[z][j].matrix().mul(&m);
                    vecs.extend(prod.row_iter().map(|row| row.to_vec()));
                }
            }
            SubspaceBasis::from_vectors(field, homs[i][j].dim(), vecs)
        })
        .collect();
    let mut out = Vec::with_capacity(r);
    let mut it = flat.into_iter();
    for _ in 0..r {
        out.push(it.by_ref().take(r).collect());
    }
    out
}

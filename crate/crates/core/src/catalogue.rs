//! Finite lists of pairwise non-isomorphic indecomposables.

use crate::algebra::{Algebra, QuiverPresentation};
use crate::error::{Error, Result};
use crate::linalg::ExactMatrix;
use crate::module::{Module, Morphism};

#[derive(Clone, Debug)]
pub struct Catalogue {
    algebra: Algebra,
    members: Vec<Module>,
    labels: Vec<String>,
}

/// Outcome of [`Catalogue::validate`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    /// Members that are zero or decomposable.
    pub decomposable: Vec<usize>,
    /// Pairs `(i, j)`, `i < j`, of isomorphic members.
    pub isomorphic_pairs: Vec<(usize, usize)>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.decomposable.is_empty() && self.isomorphic_pairs.is_empty()
    }
}

impl Catalogue {
    /// Catalogue without validation; see [`Catalogue::validated`].
    pub fn new(algebra: &Algebra, members: Vec<Module>, labels: Vec<String>) -> Result<Catalogue> {
        if members.len() != labels.len() {
            return Err(Error::DimensionMismatch("one label per member".into()));
        }
        let members = members
            .iter()
            .map(|m| m.rehome(algebra))
            .collect::<Result<Vec<_>>>()?;
        Ok(Catalogue {
            algebra: algebra.clone(),
            members,
            labels,
        })
    }

    /// Checks both invariants and fails with the first offending witness.
    pub fn validated(algebra: &Algebra, members: Vec<Module>, labels: Vec<String>) -> Result<Catalogue> {
        let c = Catalogue::new(algebra, members, labels)?;
        let r = c.validate()?;
        if let Some(&i) = r.decomposable.first() {
            return Err(Error::InvariantViolation(format!(
                "member {} is not indecomposable",
                c.labels[i]
            )));
        }
        if let Some(&(i, j)) = r.isomorphic_pairs.first() {
            return Err(Error::InvariantViolation(format!(
                "members {} and {} are isomorphic",
                c.labels[i], c.labels[j]
            )));
        }
        Ok(c)
    }

    pub fn validate(&self) -> Result<ValidationReport> {
        let mut report = ValidationReport::default();
        for (i, m) in self.members.iter().enumerate() {
            if !m.is_indecomposable()? {
                report.decomposable.push(i);
            }
        }
        for i in 0..self.members.len() {
            for j in i + 1..self.members.len() {
                if report.decomposable.contains(&i) || report.decomposable.contains(&j) {
                    continue;
                }
                if self.members[i].is_isomorphic(&self.members[j])? {
                    report.isomorphic_pairs.push((i, j));
                }
            }
        }
        Ok(report)
    }

    pub fn algebra(&self) -> &Algebra {
        &self.algebra
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Module] {
        &self.members
    }

    pub fn member(&self, i: usize) -> &Module {
        &self.members[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// The member isomorphic to an indecomposable `m`, with an isomorphism
    /// from the member to `m`.
    pub fn find(&self, m: &Module) -> Result<Option<(usize, Morphism)>> {
        let m = m.rehome(&self.algebra)?;
        for (i, x) in self.members.iter().enumerate() {
            if x.dim() != m.dim() {
                continue;
            }
            if let Some(iso) = x.isomorphism_to(&m)? {
                return Ok(Some((i, iso)));
            }
        }
        Ok(None)
    }

    /// Catalogue extended by one module (used for completeness witnesses).
    pub fn with_member(&self, m: Module, label: String) -> Result<Catalogue> {
        let mut members = self.members.clone();
        let mut labels = self.labels.clone();
        members.push(m.rehome(&self.algebra)?);
        labels.push(label);
        Ok(Catalogue {
            algebra: self.algebra.clone(),
            members,
            labels,
        })
    }

    /// Uniserial modules of a Nakayama path algebra with monomial relations:
    /// for each vertex `v` and each length `L` up to the Loewy length of
    /// `P_v`, the module with top at `v` following the unique outgoing path.
    pub fn nakayama(algebra: &Algebra) -> Result<Catalogue> {
        let paths = algebra
            .paths()
            .ok_or_else(|| Error::NotNakayama("algebra has no quiver presentation".into()))?;
        let pres = &paths.presentation;
        let nv = pres.vertices.len();
        let mut out_arrow = vec![None; nv];
        let mut in_count = vec![0usize; nv];
        for (k, a) in pres.arrows.iter().enumerate() {
            if out_arrow[a.source].replace(k).is_some() {
                return Err(Error::NotNakayama(format!(
                    "vertex {} has two outgoing arrows",
                    pres.vertices[a.source]
                )));
            }
            in_count[a.target] += 1;
            if in_count[a.target] > 1 {
                return Err(Error::NotNakayama(format!(
                    "vertex {} has two incoming arrows",
                    pres.vertices[a.target]
                )));
            }
        }
        if pres.relations.iter().any(|r| r.len() != 1) {
            return Err(Error::NotNakayama("relations must be single paths".into()));
        }
        let f = algebra.field();
        let mut members = Vec::new();
        let mut labels = Vec::new();
        for v in 0..nv {
            let loewy = paths.basis.iter().filter(|p| p.source == v).count();
            for len in 1..=loewy {
                // Walk from v; position t sits at vertex walk[t].
                let mut walk = vec![v];
                let mut arrows = Vec::new();
                for _ in 1..len {
                    let a = out_arrow[*walk.last().expect("nonempty")].expect("path continues");
                    arrows.push(a);
                    walk.push(pres.arrows[a].target);
                }
                let mut dims = vec![0usize; nv];
                let mut local = Vec::with_capacity(len);
                for &u in &walk {
                    local.push(dims[u]);
                    dims[u] += 1;
                }
                let mut maps: Vec<ExactMatrix> = pres
                    .arrows
                    .iter()
                    .map(|a| ExactMatrix::zeros(f, dims[a.source], dims[a.target]))
                    .collect();
                for (t, &a) in arrows.iter().enumerate() {
                    maps[a].set(local[t], local[t + 1], f.one());
                }
                members.push(Module::from_representation(algebra, &dims, &maps)?);
                labels.push(if nv == 1 {
                    format!("M{len}")
                } else {
                    format!("M{}_{len}", pres.vertices[v])
                });
            }
        }
        Catalogue::new(algebra, members, labels)
    }

    /// Interval representations of a hereditary algebra of type `A_n`.
    pub fn type_a(algebra: &Algebra) -> Result<Catalogue> {
        let pres = algebra
            .presentation()
            .ok_or_else(|| Error::NotTypeA("algebra has no quiver presentation".into()))?;
        let order = linear_order(pres)?;
        let n = order.len();
        let f = algebra.field();
        let mut position = vec![0; n];
        for (k, &v) in order.iter().enumerate() {
            position[v] = k;
        }
        let mut members = Vec::new();
        let mut labels = Vec::new();
        for i in 0..n {
            for j in i..n {
                let inside = |v: usize| (i..=j).contains(&position[v]);
                let dims: Vec<usize> = (0..n).map(|v| usize::from(inside(v))).collect();
                let maps: Vec<ExactMatrix> = pres
                    .arrows
                    .iter()
                    .map(|a| {
                        if inside(a.source) && inside(a.target) {
                            ExactMatrix::identity(f, 1)
                        } else {
                            ExactMatrix::zeros(f, dims[a.source], dims[a.target])
                        }
                    })
                    .collect();
                members.push(Module::from_representation(algebra, &dims, &maps)?);
                let (a, b) = (&pres.vertices[order[i]], &pres.vertices[order[j]]);
                labels.push(if i == j { format!("[{a}]") } else { format!("[{a}-{b}]") });
            }
        }
        Catalogue::new(algebra, members, labels)
    }
}

/// Vertices along the underlying path of a type `A` quiver without relations.
fn linear_order(pres: &QuiverPresentation) -> Result<Vec<usize>> {
    let n = pres.vertices.len();
    if n == 0 {
        return Err(Error::NotTypeA("no vertices".into()));
    }
    if !pres.relations.is_empty() {
        return Err(Error::NotTypeA("relations are not allowed".into()));
    }
    if pres.arrows.len() != n - 1 {
        return Err(Error::NotTypeA(format!(
            "{} arrows on {n} vertices",
            pres.arrows.len()
        )));
    }
    let mut adj = vec![Vec::new(); n];
    for a in &pres.arrows {
        if a.source == a.target {
            return Err(Error::NotTypeA("loops are not allowed".into()));
        }
        adj[a.source].push(a.target);
        adj[a.target].push(a.source);
    }
    if adj.iter().any(|x| x.len() > 2) {
        return Err(Error::NotTypeA("a vertex has degree above 2".into()));
    }
    let start = (0..n).find(|&v| adj[v].len() <= 1).ok_or_else(|| Error::NotTypeA("cycle".into()))?;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    while let Some(&next) = adj[cur].iter().find(|&&w| w != prev) {
        if order.contains(&next) {
            return Err(Error::NotTypeA("cycle".into()));
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    if order.len() != n {
        return Err(Error::NotTypeA("underlying graph is not connected".into()));
    }
    // Deterministic direction: start from the smaller endpoint.
    if order.last() < order.first() {
        order.reverse();
    }
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Arrow;
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

    fn a3(field: &Field, middle_sink: bool) -> Algebra {
        let arrows = if middle_sink {
            vec![
                Arrow { name: "a".into(), source: 0, target: 1 },
                Arrow { name: "b".into(), source: 2, target: 1 },
            ]
        } else {
            vec![
                Arrow { name: "a".into(), source: 0, target: 1 },
                Arrow { name: "b".into(), source: 1, target: 2 },
            ]
        };
        let pres = QuiverPresentation {
            vertices: vec!["1".into(), "2".into(), "3".into()],
            arrows,
            relations: vec![],
            nilpotency_cap: 3,
        };
        Algebra::from_path_algebra(field, &pres).unwrap()
    }

    #[test]
    fn nakayama_truncated_polynomials() {
        let f = Field::gf(2).unwrap();
        let c = Catalogue::nakayama(&truncated(&f, 3)).unwrap();
        assert_eq!(c.labels(), &["M1", "M2", "M3"]);
        assert!(c.validate().unwrap().is_valid());
        let c = Catalogue::nakayama(&a3(&f, false)).unwrap();
        assert_eq!(c.len(), 6);
        assert!(c.validate().unwrap().is_valid());
        assert!(matches!(Catalogue::nakayama(&a3(&f, true)), Err(Error::NotNakayama(_))));
    }

    #[test]
    fn type_a_counts() {
        let f = Field::gf(3).unwrap();
        for sink in [false, true] {
            let c = Catalogue::type_a(&a3(&f, sink)).unwrap();
            assert_eq!(c.len(), 6);
            assert!(c.validate().unwrap().is_valid());
        }
        assert!(matches!(Catalogue::type_a(&truncated(&f, 2)), Err(Error::NotTypeA(_))));
    }

    #[test]
    fn validation_finds_duplicates_and_sums() {
        let f = Field::gf(2).unwrap();
        let a = truncated(&f, 3);
        let c = Catalogue::nakayama(&a).unwrap();
        let m2 = c.member(1).clone();
        let dup = Catalogue::validated(&a, vec![m2.clone(), m2.clone()], vec!["A".into(), "B".into()]);
        assert!(matches!(dup, Err(Error::InvariantViolation(msg)) if msg.contains("A and B")));
        let m1 = c.member(0).clone();
        let (sum, _, _) = Module::direct_sum(&a, &[m1.clone(), m1]).unwrap();
        let r = Catalogue::new(&a, vec![sum], vec!["S".into()]).unwrap().validate().unwrap();
        assert_eq!(r.decomposable, vec![0]);
    }
}

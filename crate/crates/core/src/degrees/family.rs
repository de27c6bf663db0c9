//! A finite family of irreducible morphisms with an indecomposable endpoint:
//! irr-space basis elements between members, and the restrictions of the
//! minimal almost split maps (including `rad P -> P` and `I -> I/soc I`) to
//! sub-sums of their decomposable endpoint.

use rayon::prelude::*;

use super::{sum_endpoint, PlacedMorphism};
use crate::ar::{almost_split_sequence, AlmostSplitSequence};
use crate::error::Result;
use crate::linalg::ExactMatrix;
use crate::radical::{Endpoint, RadicalTable};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    IrrBasis,
    /// Restriction of the right almost split map ending at the member.
    RightAlmostSplit(usize),
    /// Projection of the left almost split map starting at `tau` of the member.
    LeftAlmostSplit(usize),
    /// `rad P -> P` or a restriction of it.
    ProjectiveRadical { member: usize, full: bool },
    /// `I -> I/soc I` or a projection of it.
    InjectiveQuotient { member: usize, full: bool },
}

#[derive(Clone, Debug)]
pub struct IrreducibleMorphism {
    pub name: String,
    pub kind: FamilyKind,
    pub placed: PlacedMorphism,
}

/// Almost split sequences ending at each member; `None` for projectives.
pub fn ar_sequences(t: &RadicalTable) -> Result<Vec<Option<AlmostSplitSequence>>> {
    let c = t.catalogue();
    (0..c.len())
        .into_par_iter()
        .map(|i| {
            let m = c.member(i);
            if m.is_projective()? {
                Ok(None)
            } else {
                almost_split_sequence(c, m).map(Some)
            }
        })
        .collect()
}

/// Nonempty subsets of `0..k` as sorted index lists, singletons first.
fn subsets(k: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = (1u32..1 << k)
        .map(|mask| (0..k).filter(|&i| mask & (1 << i) != 0).collect())
        .collect();
    out.sort_by_key(|s: &Vec<usize>| (s.len(), s.clone()));
    out
}

pub(super) fn restrict_source(t: &RadicalTable, src: &Endpoint, map: &ExactMatrix, tgt: &Endpoint, pick: &[usize]) -> Result<PlacedMorphism> {
    let members: Vec<usize> = pick.iter().map(|&p| src.parts[p].member).collect();
    let sub = sum_endpoint(t, &members)?;
    let mut m = src.parts[pick[0]].incl.mul(map);
    for &p in &pick[1..] {
        m = m.vstack(&src.parts[p].incl.mul(map));
    }
    PlacedMorphism::between(t, sub, tgt.clone(), m)
}

pub(super) fn restrict_target(t: &RadicalTable, src: &Endpoint, map: &ExactMatrix, tgt: &Endpoint, pick: &[usize]) -> Result<PlacedMorphism> {
    let members: Vec<usize> = pick.iter().map(|&p| tgt.parts[p].member).collect();
    let sub = sum_endpoint(t, &members)?;
    let mut m = map.mul(&tgt.parts[pick[0]].proj);
    for &p in &pick[1..] {
        m = m.hstack(&map.mul(&tgt.parts[p].proj));
    }
    PlacedMorphism::between(t, src.clone(), sub, m)
}

/// Exact duplicates among the irr-basis and almost split maps are dropped;
/// radical inclusions and socle quotients are always kept.
pub fn irreducible_family(t: &RadicalTable, sequences: &[Option<AlmostSplitSequence>]) -> Result<Vec<IrreducibleMorphism>> {
    let c = t.catalogue();
    let mut out = Vec::new();
    for i in 0..t.len() {
        for j in 0..t.len() {
            for (k, g) in t.irr(i, j).basis.iter().enumerate() {
                let placed = PlacedMorphism::between(t, t.member_endpoint(i), t.member_endpoint(j), g.matrix.clone())?;
                out.push(IrreducibleMorphism {
                    name: format!("irr({}, {})#{k}", c.label(i), c.label(j)),
                    kind: FamilyKind::IrrBasis,
                    placed,
                });
            }
        }
    }
    for (y, seq) in sequences.iter().enumerate() {
        let Some(seq) = seq else { continue };
        let mid = t.endpoint(&seq.middle)?;
        let right = t.member_endpoint(y);
        let left = t.endpoint(&seq.left)?;
        for pick in subsets(mid.parts.len()) {
            let placed = restrict_source(t, &mid, &seq.project.matrix, &right, &pick)?;
            out.push(IrreducibleMorphism {
                name: format!("right almost split {}", placed.describe(t)),
                kind: FamilyKind::RightAlmostSplit(y),
                placed,
            });
            let placed = restrict_target(t, &left, &seq.inject.matrix, &mid, &pick)?;
            out.push(IrreducibleMorphism {
                name: format!("left almost split {}", placed.describe(t)),
                kind: FamilyKind::LeftAlmostSplit(y),
                placed,
            });
        }
    }
    for p in 0..t.len() {
        let m = c.member(p);
        if m.is_projective()? {
            let (rad, incl) = m.submodule(&m.radical_subspace())?;
            if rad.dim() > 0 {
                let src = t.endpoint(&rad)?;
                let tgt = t.member_endpoint(p);
                let k = src.parts.len();
                for pick in subsets(k) {
                    let placed = restrict_source(t, &src, &incl.matrix, &tgt, &pick)?;
                    out.push(IrreducibleMorphism {
                        name: format!("radical inclusion {}", placed.describe(t)),
                        kind: FamilyKind::ProjectiveRadical { member: p, full: pick.len() == k },
                        placed,
                    });
                }
            }
        }
        if m.is_injective()? {
            let (top, proj) = m.quotient(&m.socle_subspace())?;
            if top.dim() > 0 {
                let src = t.member_endpoint(p);
                let tgt = t.endpoint(&top)?;
                let k = tgt.parts.len();
                for pick in subsets(k) {
                    let placed = restrict_target(t, &src, &proj.matrix, &tgt, &pick)?;
                    out.push(IrreducibleMorphism {
                        name: format!("socle quotient {}", placed.describe(t)),
                        kind: FamilyKind::InjectiveQuotient { member: p, full: pick.len() == k },
                        placed,
                    });
                }
            }
        }
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|m| {
        let structural = matches!(m.kind, FamilyKind::ProjectiveRadical { .. } | FamilyKind::InjectiveQuotient { .. });
        structural || seen.insert((m.placed.source.members(), m.placed.target.members(), m.placed.morphism.matrix.clone()))
    });
    Ok(out)
}

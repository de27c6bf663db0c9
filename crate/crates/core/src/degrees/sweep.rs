//! Runs the verifiers over every eligible morphism of a fixture.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::family::{ar_sequences, irreducible_family, IrreducibleMorphism};
use super::paths::{path_composition_report, PathStep};
use super::verify::*;
use super::{PlacedMorphism, TheoremReport};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::radical::RadicalTable;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Theorem {
    A,
    B,
    C,
    DegreeKernel,
    MonoEpi,
    Shift,
    KernelIso,
    FiniteType,
    KernelComparison,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::A,
        Theorem::B,
        Theorem::C,
        Theorem::DegreeKernel,
        Theorem::MonoEpi,
        Theorem::Shift,
        Theorem::KernelIso,
        Theorem::FiniteType,
        Theorem::KernelComparison,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::A => "A",
            Theorem::B => "B",
            Theorem::C => "C",
            Theorem::DegreeKernel => "degree-kernel",
            Theorem::MonoEpi => "mono-epi",
            Theorem::Shift => "shift",
            Theorem::KernelIso => "kernel-iso",
            Theorem::FiniteType => "finite-type",
            Theorem::KernelComparison => "kernel-comparison",
        }
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Theorem> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown theorem '{s}'")))
    }
}

/// Longest path of irr-basis steps fed to the path composition checker.
pub const MAX_PATH_LENGTH: usize = 3;

/// Composable paths of irr-space basis elements of length `2..=max_len`.
pub fn irr_paths(t: &RadicalTable, max_len: usize) -> Vec<Vec<PathStep>> {
    let steps: Vec<PathStep> = (0..t.len())
        .flat_map(|i| (0..t.len()).map(move |j| (i, j)))
        .flat_map(|(i, j)| {
            t.irr(i, j)
                .basis
                .iter()
                .map(|g| PathStep::new(i, j, t.member_coords(i, j, &g.matrix).expect("irr lies in Hom")))
                .collect::<Vec<_>>()
        })
        .collect();
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<PathStep>> = steps.iter().map(|s| vec![s.clone()]).collect();
    for _ in 2..=max_len {
        let mut next = Vec::new();
        for p in &frontier {
            let end = p.last().expect("nonempty").target;
            for s in steps.iter().filter(|s| s.source == end) {
                let mut q = p.clone();
                q.push(s.clone());
                next.push(q);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Parallel pairs for the kernel isomorphism check: each irr-basis map
/// against its perturbation by a deeper map and against the other basis
/// elements of the same irr space.
fn parallel_pairs(t: &RadicalTable) -> Vec<(PlacedMorphism, PlacedMorphism)> {
    let field = t.field();
    let mut out = Vec::new();
    for i in 0..t.len() {
        for j in 0..t.len() {
            let irr = t.irr(i, j);
            let coords: Vec<Vec<Scalar>> =
                irr.basis.iter().map(|g| t.member_coords(i, j, &g.matrix).expect("irr lies in Hom")).collect();
            for (k, c) in coords.iter().enumerate() {
                let f1 = PlacedMorphism::from_coords(t, i, j, c);
                if let Some(deep) = t.power_ref(2, i, j).filter(|p| p.dim() > 0) {
                    let c2: Vec<Scalar> = c.iter().zip(deep.vector(0)).map(|(a, b)| field.add(a, b)).collect();
                    out.push((f1.clone(), PlacedMorphism::from_coords(t, i, j, &c2)));
                }
                for c2 in &coords[k + 1..] {
                    out.push((f1.clone(), PlacedMorphism::from_coords(t, i, j, c2)));
                }
            }
        }
    }
    out
}

fn is_split_candidate(m: &IrreducibleMorphism) -> bool {
    m.placed.source.is_indecomposable() && m.placed.target.parts.len() >= 2 && m.placed.morphism.is_epi()
}

/// All reports for the requested statements on one fixture, in a fixed
/// order: statement, then family order.
pub fn fixture_reports(t: &RadicalTable, fixture: &str, theorems: &[Theorem]) -> Result<Vec<TheoremReport>> {
    let seqs = ar_sequences(t)?;
    let family = irreducible_family(t, &seqs)?;
    let mut out = Vec::new();
    for &th in theorems {
        match th {
            Theorem::A => {
                for m in &family {
                    out.push(graded_kernel_sequence_report(t, &m.placed, None)?);
                }
            }
            Theorem::B => {
                for m in &family {
                    out.push(theorem_b_report(t, &m.placed)?);
                }
            }
            Theorem::C => {
                for p in irr_paths(t, MAX_PATH_LENGTH) {
                    out.push(path_composition_report(t, &p)?);
                }
            }
            Theorem::DegreeKernel => {
                for m in &family {
                    out.push(degree_kernel_equivalence_check(t, &m.placed)?);
                }
            }
            Theorem::MonoEpi => {
                for m in &family {
                    out.push(mono_epi_degree_check(t, &m.placed)?);
                }
            }
            Theorem::Shift => {
                for (y, s) in seqs.iter().enumerate() {
                    out.push(degree_shift_check(t, y, s.as_ref())?);
                }
            }
            Theorem::KernelIso => {
                for (f1, f2) in parallel_pairs(t) {
                    out.push(kernel_iso_check(t, &f1, &f2)?);
                }
            }
            Theorem::FiniteType => out.push(finite_type_report(t, &family)?),
            Theorem::KernelComparison => {
                for m in family.iter().filter(|m| is_split_candidate(m)) {
                    if let Some((a, b)) = split_target(t, &m.placed)? {
                        out.push(kernel_comparison_check(t, &a, &b)?);
                    }
                }
            }
        }
    }
    Ok(out.into_iter().map(|r| r.for_fixture(fixture)).collect())
}

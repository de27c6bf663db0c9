//! Paths of irreducible morphisms between members: searches for paths with
//! zero or nonzero composite, kernel paths, and the composition criteria.

use serde::Serialize;
use serde_json::json;

use super::{
    all_vectors, degree, depth_graded_kernel_decomposition, factor_through_kernel, freely_irreducible_check,
    Check, PlacedMorphism, Side, TheoremReport,
};
use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::linalg::ExactMatrix;
use crate::radical::{Level, RadicalTable};

/// Enumeration cap for exhaustive searches over irreducible morphisms.
const ELEMENT_LIMIT: u64 = 4096;
/// Cap on the number of partial paths visited by one search.
const NODE_BUDGET: usize = 500_000;

/// One morphism between members, in Hom coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PathStep {
    pub source: usize,
    pub target: usize,
    #[serde(skip)]
    pub coords: Vec<Scalar>,
}

impl PathStep {
    pub fn new(source: usize, target: usize, coords: Vec<Scalar>) -> PathStep {
        PathStep { source, target, coords }
    }

    pub fn matrix(&self, t: &RadicalTable) -> ExactMatrix {
        t.hom(self.source, self.target).combination(&self.coords)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search covered every candidate and found nothing.
    Exhausted,
    /// The candidate set was not exhaustive or the budget ran out.
    Incomplete,
}

impl<T> Search<T> {
    pub fn found(&self) -> Option<&T> {
        match self {
            Search::Found(x) => Some(x),
            _ => None,
        }
    }

    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }
}

fn identity_coords(t: &RadicalTable, i: usize) -> Vec<Scalar> {
    let m = t.catalogue().member(i);
    t.hom(i, i)
        .coordinates(&ExactMatrix::identity(t.field(), m.dim()))
        .expect("identity is an endomorphism")
}

fn is_zero(t: &RadicalTable, v: &[Scalar]) -> bool {
    v.iter().all(|x| t.field().is_zero(x))
}

/// Irreducible morphisms `x -> y` spanning `rad(x, y)`: the irr
/// representatives and the first one shifted by a basis of `rad^2`.
fn spanning_irreducibles(t: &RadicalTable, x: usize, y: usize) -> Vec<Vec<Scalar>> {
    let Some(q) = t.graded(1, x, y) else { return Vec::new() };
    let reps = q.representatives().to_vec();
    let Some(first) = reps.first().cloned() else { return Vec::new() };
    let mut out = reps;
    for r in t.power(2, x, y).vectors() {
        let mut v = first.clone();
        t.field().axpy(&mut v, &t.field().one(), &r);
        out.push(v);
    }
    out
}

/// Every element of `rad(x, y) \ rad^2(x, y)` when the field is finite and
/// `rad(x, y)` is small enough.
fn all_irreducibles(t: &RadicalTable, x: usize, y: usize) -> Option<Vec<Vec<Scalar>>> {
    let rad = t.power(1, x, y);
    let rad2 = t.power(2, x, y);
    let coeffs = all_vectors(t.field(), rad.dim(), ELEMENT_LIMIT)?;
    Some(
        coeffs
            .iter()
            .map(|c| rad.from_coordinates(c))
            .filter(|v| !rad2.contains(v))
            .collect(),
    )
}

fn irr_adjacent(t: &RadicalTable, x: usize, y: usize) -> bool {
    t.graded_dim(1, x, y) > 0
}

/// A path of length `len` from `from` to `to` whose composite is nonzero.
/// Composition is multilinear and the candidates span each radical space,
/// so an exhausted search proves that no such path exists.
pub fn find_nonzero_path(t: &RadicalTable, from: usize, to: usize, len: usize) -> Search<Vec<PathStep>> {
    if len == 0 {
        return if from == to { Search::Found(Vec::new()) } else { Search::Exhausted };
    }
    let r = t.len();
    // reach[s][v]: `to` is reachable from `v` in exactly `s` arrows.
    let mut reach = vec![vec![false; r]; len + 1];
    reach[0][to] = true;
    for s in 1..=len {
        for v in 0..r {
            reach[s][v] = (0..r).any(|w| reach[s - 1][w] && irr_adjacent(t, v, w));
        }
    }
    if !reach[len][from] {
        return Search::Exhausted;
    }
    let mut budget = NODE_BUDGET;
    let mut path = Vec::new();
    let ident = identity_coords(t, from);
    match nonzero_dfs(t, from, from, &ident, len, &reach, &mut path, &mut budget) {
        Some(true) => Search::Found(path),
        Some(false) => Search::Exhausted,
        None => Search::Incomplete,
    }
}

#[allow(clippy::too_many_arguments)]
fn nonzero_dfs(
    t: &RadicalTable,
    from: usize,
    cur: usize,
    acc: &[Scalar],
    left: usize,
    reach: &[Vec<bool>],
    path: &mut Vec<PathStep>,
    budget: &mut usize,
) -> Option<bool> {
    if left == 0 {
        return Some(true);
    }
    for next in 0..t.len() {
        if !irr_adjacent(t, cur, next) || !reach[left - 1][next] {
            continue;
        }
        for cand in spanning_irreducibles(t, cur, next) {
            if *budget == 0 {
                return None;
            }
            *budget -= 1;
            let comp = t.compose_coords(from, cur, next, acc, &cand);
            if is_zero(t, &comp) {
                continue;
            }
            path.push(PathStep::new(cur, next, cand));
            if nonzero_dfs(t, from, next, &comp, left - 1, reach, path, budget)? {
                return Some(true);
            }
            path.pop();
        }
    }
    Some(false)
}

/// A path of irreducible morphisms through the given members with zero
/// composite. All steps but the last are enumerated (exhaustively when the
/// radical spaces are small over a finite field); the last is solved for.
pub fn find_zero_path(t: &RadicalTable, vertices: &[usize]) -> Search<Vec<PathStep>> {
    let n = vertices.len().saturating_sub(1);
    if n < 2 || vertices.windows(2).any(|w| !irr_adjacent(t, w[0], w[1])) {
        return Search::Exhausted;
    }
    let mut exhaustive = true;
    let candidates: Vec<Vec<Vec<Scalar>>> = vertices
        .windows(2)
        .take(n - 1)
        .map(|w| {
            all_irreducibles(t, w[0], w[1]).unwrap_or_else(|| {
                exhaustive = false;
                spanning_irreducibles(t, w[0], w[1])
            })
        })
        .collect();
    let x0 = vertices[0];
    let mut budget = NODE_BUDGET;
    let mut path = Vec::new();
    match zero_dfs(t, vertices, &candidates, &identity_coords(t, x0), &mut path, &mut budget) {
        Some(true) => Search::Found(path),
        Some(false) if exhaustive => Search::Exhausted,
        _ => Search::Incomplete,
    }
}

fn zero_dfs(
    t: &RadicalTable,
    vertices: &[usize],
    candidates: &[Vec<Vec<Scalar>>],
    acc: &[Scalar],
    path: &mut Vec<PathStep>,
    budget: &mut usize,
) -> Option<bool> {
    let x0 = vertices[0];
    let s = path.len();
    let n = vertices.len() - 1;
    let (cur, next) = (vertices[s], vertices[s + 1]);
    if s + 1 == n {
        return Some(match last_step_killing(t, x0, cur, next, acc) {
            Some(v) => {
                path.push(PathStep::new(cur, next, v));
                true
            }
            None => false,
        });
    }
    for cand in &candidates[s] {
        if *budget == 0 {
            return None;
        }
        *budget -= 1;
        let comp = t.compose_coords(x0, cur, next, acc, cand);
        path.push(PathStep::new(cur, next, cand.clone()));
        if is_zero(t, &comp) {
            // Any irreducible continuation keeps the composite zero.
            for w in vertices[s + 1..].windows(2) {
                let rep = spanning_irreducibles(t, w[0], w[1]).swap_remove(0);
                path.push(PathStep::new(w[0], w[1], rep));
            }
            return Some(true);
        }
        if zero_dfs(t, vertices, candidates, &comp, path, budget)? {
            return Some(true);
        }
        path.pop();
    }
    Some(false)
}

/// Some `v` in `rad(cur, next) \ rad^2` with `acc v = 0`.
fn last_step_killing(t: &RadicalTable, x0: usize, cur: usize, next: usize, acc: &[Scalar]) -> Option<Vec<Scalar>> {
    let rad = t.power(1, cur, next);
    let rad2 = t.power(2, cur, next);
    let rows: Vec<Vec<Scalar>> = rad
        .vectors()
        .iter()
        .map(|b| t.compose_coords(x0, cur, next, acc, b))
        .collect();
    let m = ExactMatrix::from_rows(t.field(), t.hom(x0, next).dim(), rows).expect("sizes");
    m.kernel_basis()
        .vectors()
        .iter()
        .map(|c| rad.from_coordinates(c))
        .find(|v| !rad2.contains(v))
}

/// A path of irreducible morphisms from the kernel of `f` to its domain whose
/// composite, after an automorphism of the domain absorbed into the last
/// step, is a kernel morphism of `f`.
#[derive(Clone, Debug, Serialize)]
pub struct KernelPath {
    pub members: Vec<usize>,
    pub labels: Vec<String>,
    #[serde(skip)]
    pub steps: Vec<PathStep>,
    #[serde(skip)]
    pub automorphism: ExactMatrix,
    /// Composite `K -> X` in member coordinates.
    #[serde(skip)]
    pub composite: ExactMatrix,
}

pub fn find_kernel_path(t: &RadicalTable, f: &PlacedMorphism) -> Result<KernelPath> {
    if !f.source.is_indecomposable() {
        return Err(Error::Precondition("kernel paths need an indecomposable domain".into()));
    }
    let grading = depth_graded_kernel_decomposition(t, f)?;
    if grading.summands.len() != 1 {
        return Err(Error::Precondition(format!(
            "kernel of {} has {} indecomposable summands",
            f.describe(t),
            grading.summands.len()
        )));
    }
    let k = grading.summands[0].member;
    let n = grading.depth().finite().ok_or(Error::ZeroMorphism)?;
    let x = f.source.parts[0].member;
    let fx = f.source.parts[0].incl.mul(&f.morphism.matrix);
    let kernel_dim = grading.kernel.dim();
    let mut budget = NODE_BUDGET;
    let mut path = Vec::new();
    let mut found = None;
    let ident = identity_coords(t, k);
    kernel_dfs(t, k, x, n, &ident, &fx, kernel_dim, &mut path, &mut budget, &mut found);
    let (steps, alpha, composite) = found.ok_or_else(|| {
        Error::SearchExhausted(format!("no kernel path of length {n} for {}", f.describe(t)))
    })?;
    let mut members = vec![k];
    members.extend(steps.iter().map(|s: &PathStep| s.target));
    let labels = members.iter().map(|&m| t.catalogue().label(m).to_string()).collect();
    Ok(KernelPath { members, labels, steps, automorphism: alpha, composite })
}

type KernelHit = (Vec<PathStep>, ExactMatrix, ExactMatrix);

#[allow(clippy::too_many_arguments)]
fn kernel_dfs(
    t: &RadicalTable,
    k: usize,
    x: usize,
    n: usize,
    acc: &[Scalar],
    fx: &ExactMatrix,
    kernel_dim: usize,
    path: &mut Vec<PathStep>,
    budget: &mut usize,
    found: &mut Option<KernelHit>,
) {
    let s = path.len();
    let cur = path.last().map_or(k, |p| p.target);
    if s == n {
        if cur != x {
            return;
        }
        if let Some((alpha, composite)) = kernel_automorphism(t, k, x, acc, fx, kernel_dim) {
            let mut steps = path.clone();
            if let Some(last) = steps.last_mut() {
                let m = last.matrix(t).mul(&alpha);
                last.coords = t.hom(last.source, last.target).coordinates(&m).expect("morphism");
            }
            *found = Some((steps, alpha, composite));
        }
        return;
    }
    for next in 0..t.len() {
        if !irr_adjacent(t, cur, next) {
            continue;
        }
        let cands = all_irreducibles(t, cur, next)
            .filter(|c| c.len() <= 64)
            .unwrap_or_else(|| spanning_irreducibles(t, cur, next));
        for cand in cands {
            if found.is_some() || *budget == 0 {
                return;
            }
            *budget -= 1;
            let comp = t.compose_coords(k, cur, next, acc, &cand);
            // The prefix must have depth exactly its length.
            if t.depth_coords(k, next, &comp) != Level::Finite(s + 1) {
                continue;
            }
            path.push(PathStep::new(cur, next, cand));
            kernel_dfs(t, k, x, n, &comp, fx, kernel_dim, path, budget, found);
            path.pop();
        }
    }
}

/// An automorphism `a` of `x` with `u a` a kernel morphism of `fx`.
fn kernel_automorphism(
    t: &RadicalTable,
    k: usize,
    x: usize,
    u: &[Scalar],
    fx: &ExactMatrix,
    kernel_dim: usize,
) -> Option<(ExactMatrix, ExactMatrix)> {
    let field = t.field();
    let end = t.hom(x, x);
    let um = t.hom(k, x).combination(u);
    let rows: Vec<Vec<Scalar>> = (0..end.dim())
        .map(|j| um.mul(&end.basis_matrix(j)).mul(fx).flatten())
        .collect();
    let m = ExactMatrix::from_rows(field, um.rows() * fx.cols(), rows).ok()?;
    let jac = t.power(1, x, x);
    for c in m.kernel_basis().vectors() {
        if jac.contains(&c) {
            continue;
        }
        let alpha = end.combination(&c);
        let composite = um.mul(&alpha);
        if composite.rank() == composite.rows() && composite.rows() == kernel_dim {
            return Some((alpha, composite));
        }
    }
    None
}

fn path_label(t: &RadicalTable, steps: &[PathStep]) -> String {
    let c = t.catalogue();
    let mut s = c.label(steps[0].source).to_string();
    for p in steps {
        s.push_str(" -> ");
        s.push_str(c.label(p.target));
    }
    s
}

fn at_least(level: Level, n: usize) -> bool {
    match level {
        Level::InfiniteAtBound => true,
        Level::Finite(k) => k >= n,
    }
}

/// Composition criteria for a path `f_1, ..., f_n` of irreducible morphisms
/// between members: (i) `f_1 ... f_n` in `rad^{n+1}`; (ii) a kernel
/// factorization `f_1 ... f_{t-1} - h i` in `rad^t`; (iii) a nonzero path into
/// the kernel and a zero path of length `t`. Also evaluates the two remark
/// criteria on nonzero and zero compositions.
pub fn path_composition_report(t: &RadicalTable, steps: &[PathStep]) -> Result<TheoremReport> {
    let c = t.catalogue();
    let subject = if steps.is_empty() { "empty path".into() } else { path_label(t, steps) };
    let mut report = TheoremReport::new("C", subject);
    let composable = !steps.is_empty() && steps.windows(2).all(|w| w[0].target == w[1].source);
    let irreducible = steps.iter().all(|s| t.depth_coords(s.source, s.target, &s.coords) == Level::Finite(1));
    let ok = report.hypothesis(Check::new("composable path", composable, json!({ "length": steps.len() })))
        & report.hypothesis(Check::new("every step irreducible between members", irreducible, json!(null)));
    if !ok {
        return Ok(report.finish());
    }
    let n = steps.len();
    let xs: Vec<usize> = std::iter::once(steps[0].source).chain(steps.iter().map(|s| s.target)).collect();
    let x0 = xs[0];
    let placed: Vec<PlacedMorphism> = steps
        .iter()
        .map(|s| PlacedMorphism::from_coords(t, s.source, s.target, &s.coords))
        .collect();
    let degrees: Vec<Level> = placed
        .iter()
        .map(|p| degree(t, p, Side::Left).map(|r| r.value))
        .collect::<Result<_>>()?;
    let irr_dims: Vec<usize> = steps.iter().map(|s| t.graded_dim(1, s.source, s.target)).collect();
    let mut prefix = vec![identity_coords(t, x0)];
    for s in steps {
        let next = t.compose_coords(x0, s.source, s.target, prefix.last().expect("nonempty"), &s.coords);
        prefix.push(next);
    }
    let composite_depth = t.depth_coords(x0, xs[n], &prefix[n]);
    let clause_i = at_least(composite_depth, n + 1);

    let eligible: Vec<(usize, usize)> = (1..=n)
        .filter_map(|s| degrees[s - 1].finite().filter(|&d| d < s).map(|d| (s, d)))
        .collect();
    let mut freely = true;
    let mut witness_ii = None;
    let mut clause_iii = None;
    let mut iii_open = false;
    for &(s, d) in &eligible {
        let f = &placed[s - 1];
        freely &= freely_irreducible_check(t, f)?;
        let grading = depth_graded_kernel_decomposition(t, f)?;
        if witness_ii.is_none() {
            let parts: Vec<(usize, &[Vec<Scalar>])> =
                grading.summands.iter().map(|k| (k.member, k.components.as_slice())).collect();
            let h = factor_through_kernel(t, x0, &parts, &[xs[s - 1]], &[prefix[s - 1].clone()], s - 1 - d, s)?;
            if h.is_some() {
                witness_ii = Some(json!({ "t": s, "left_degree": d, "kernel": grading.summands.iter().map(|k| k.label.clone()).collect::<Vec<_>>() }));
            }
        }
        if clause_iii.is_none() && grading.summands.len() == 1 {
            let k = grading.summands[0].member;
            let nonzero = find_nonzero_path(t, x0, k, s - 1 - d);
            let zero = find_zero_path(t, &xs[..=s]);
            match (&nonzero, &zero) {
                (Search::Found(p), Search::Found(z)) => {
                    clause_iii = Some((s, json!({
                        "t": s,
                        "nonzero_path_into_kernel": if p.is_empty() { c.label(x0).to_string() } else { path_label(t, p) },
                        "zero_path": path_label(t, z),
                    })));
                }
                (Search::Incomplete, _) | (_, Search::Incomplete) => iii_open = true,
                _ => {}
            }
        }
    }
    let clause_ii = witness_ii.is_some();
    let iii_holds = clause_iii.is_some();

    report.conclude(Check::new(
        "composite depth",
        true,
        json!({ "holds": clause_i, "composite_depth": composite_depth, "n": n }),
    ));
    report.conclude(
        Check::new(
            "(i) <=> (ii)",
            clause_i == clause_ii,
            json!({ "i": clause_i, "ii": clause_ii, "witness": witness_ii, "left_degrees": degrees }),
        )
        .binding(freely),
    );
    let ii_implies_iii = if !clause_ii || iii_holds {
        Check::new("(ii) => (iii)", true, json!({ "iii": clause_iii.as_ref().map(|x| x.1.clone()) })).binding(freely)
    } else if iii_open {
        Check::unsettled("(ii) => (iii)", json!({ "reason": "path search not exhaustive" }))
    } else {
        Check::new("(ii) => (iii)", false, json!({ "iii": null })).binding(freely)
    };
    report.conclude(ii_implies_iii);
    let one_dim_t = clause_iii
        .as_ref()
        .map(|(s, _)| *s)
        .filter(|&s| irr_dims[..s].iter().all(|&k| k == 1));
    report.conclude(Check::new(
        "(iii) => (i) when irr spaces are one-dimensional",
        one_dim_t.is_none() || clause_i,
        json!({ "applies": one_dim_t.is_some(), "irr_dims": irr_dims, "iii": iii_holds }),
    ));

    // Remark (1): all paths to X_t nonzero and d(f_s) >= s beyond t.
    let mut remark1 = Vec::new();
    let mut remark1_ok = true;
    for s in 1..=n {
        let tail_ok = (s + 1..=n).all(|u| at_least(degrees[u - 1], u));
        if !tail_ok || find_zero_path(t, &xs[..=s]) != Search::Exhausted {
            continue;
        }
        let depth_s = t.depth_coords(x0, xs[s], &prefix[s]);
        let ok = depth_s == Level::Finite(s) && !clause_i;
        remark1_ok &= ok;
        remark1.push(json!({ "t": s, "prefix_depth": depth_s }));
    }
    report.conclude(Check::new(
        "remark: nonzero paths give a lower bound",
        remark1_ok,
        json!({ "applies_at": remark1 }),
    ));
    let zero_full = find_zero_path(t, &xs);
    let remark2_applies = zero_full.is_found() && irr_dims.iter().all(|&k| k == 1);
    report.conclude(Check::new(
        "remark: zero path with one-dimensional irr spaces",
        !remark2_applies || clause_i,
        json!({
            "applies": remark2_applies,
            "parallel_zero_path": zero_full.found().map(|p| path_label(t, p)),
        }),
    ));
    if !freely {
        report.note("some f_t is not freely irreducible; (ii) uses f_t itself");
    }
    Ok(report.finish())
}

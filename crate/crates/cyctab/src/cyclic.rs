//! The cyclic descent map: `φ = Rot_NW⁻¹ ∘ pro ∘ Rot_SE` and
//! `cDes(T) = Des(T) ∪ {n iff 1 ∈ Des(φT)}`, plus exhaustive verification of
//! the cyclic-descent-map axioms, fiber statistics, orbit analysis, and the
//! path-location lemmas behind the equivariance proof.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;
use thiserror::Error;

use crate::dynamics::{
    demote, demote_with_path, promote, promote_with_path, pseudo_promotion_path, Path, StepDir,
};
use crate::rotation::{rotate, rotate_inverse};
use crate::shape::{Cell, CornerKind, Side, SkewShape};
use crate::tableau::{enumerate_syt, DescentSet, Tableau};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CyclicError {
    #[error("shape {0} is a connected ribbon, which admits no cyclic descent map")]
    ConnectedRibbonShape(String),
}

fn reject_ribbon(shape: &SkewShape) -> Result<(), CyclicError> {
    if shape.is_connected_ribbon() {
        Err(CyclicError::ConnectedRibbonShape(shape.to_string()))
    } else {
        Ok(())
    }
}

/// `φ = Rot_NW⁻¹ ∘ pro ∘ Rot_SE`.
pub fn phi(t: &Tableau) -> Result<Tableau, CyclicError> {
    reject_ribbon(t.shape())?;
    Ok(phi_unchecked(t))
}

pub(crate) fn phi_unchecked(t: &Tableau) -> Tableau {
    rotate_inverse(&promote(&rotate(t, Side::Se)), Side::Nw)
}

/// `φ⁻¹ = Rot_SE⁻¹ ∘ dem ∘ Rot_NW`.
pub fn phi_inverse(t: &Tableau) -> Result<Tableau, CyclicError> {
    reject_ribbon(t.shape())?;
    Ok(phi_inverse_unchecked(t))
}

pub(crate) fn phi_inverse_unchecked(t: &Tableau) -> Tableau {
    rotate_inverse(&demote(&rotate(t, Side::Nw)), Side::Se)
}

/// `cDes(T) = Des(T) ∪ {n iff 1 ∈ Des(φT)}`.
pub fn cdes(t: &Tableau) -> Result<DescentSet, CyclicError> {
    reject_ribbon(t.shape())?;
    Ok(cdes_unchecked(t))
}

fn cdes_unchecked(t: &Tableau) -> DescentSet {
    let mut d = t.descent_set();
    if phi_unchecked(t).has_descent(1) {
        d.insert(t.n());
    }
    d
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axiom {
    Extension,
    Equivariance,
    NonEscher,
}

#[derive(Debug, Clone)]
pub struct Counterexample {
    pub axiom: Axiom,
    pub tableau: Tableau,
}

/// Result of checking the cyclic-descent-map axioms over all tableaux of one
/// shape.
#[derive(Debug, Clone)]
pub struct CdmReport {
    pub shape: Arc<SkewShape>,
    /// Connected ribbons are rejected up front; no axiom is run.
    pub rejected_connected_ribbon: bool,
    pub tableau_count: usize,
    pub extension_ok: bool,
    pub equivariance_ok: bool,
    pub non_escher_ok: bool,
    /// First counterexample per failed axiom, in enumeration order.
    pub counterexamples: Vec<Counterexample>,
    /// |cDes⁻¹(J)| for every value J that occurs.
    pub fiber_multiset: BTreeMap<DescentSet, usize>,
    /// |cDes⁻¹(J)| = |cDes⁻¹(J+1 mod n)| for every J.
    pub fibers_rotation_invariant: bool,
}

impl CdmReport {
    pub fn all_axioms_ok(&self) -> bool {
        !self.rejected_connected_ribbon
            && self.extension_ok
            && self.equivariance_ok
            && self.non_escher_ok
            && self.fibers_rotation_invariant
    }
}

#[derive(Default)]
struct AxiomFold {
    extension_bad: Option<usize>,
    equivariance_bad: Option<usize>,
    non_escher_bad: Option<usize>,
    fibers: BTreeMap<DescentSet, usize>,
}

impl AxiomFold {
    fn merge(mut self, other: AxiomFold) -> AxiomFold {
        self.extension_bad = min_opt(self.extension_bad, other.extension_bad);
        self.equivariance_bad = min_opt(self.equivariance_bad, other.equivariance_bad);
        self.non_escher_bad = min_opt(self.non_escher_bad, other.non_escher_bad);
        for (k, v) in other.fibers {
            *self.fibers.entry(k).or_insert(0) += v;
        }
        self
    }
}

fn min_opt(a: Option<usize>, b: Option<usize>) -> Option<usize> {
    match (a, b) {
        (Some(x), Some(y)) => Some(x.min(y)),
        (x, y) => x.or(y),
    }
}

/// Exhaustively checks extension, equivariance, and non-Escher over
/// `SYT(shape)`, and computes the cDes fiber multiset.
pub fn verify_cdm(shape: &Arc<SkewShape>) -> CdmReport {
    if shape.is_connected_ribbon() {
        return CdmReport {
            shape: Arc::clone(shape),
            rejected_connected_ribbon: true,
            tableau_count: 0,
            extension_ok: false,
            equivariance_ok: false,
            non_escher_ok: false,
            counterexamples: Vec::new(),
            fiber_multiset: BTreeMap::new(),
            fibers_rotation_invariant: false,
        };
    }
    let n = shape.num_cells();
    let all = enumerate_syt(shape);
    let fold = all
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let c = cdes_unchecked(t);
            let mut f = AxiomFold::default();
            if c.restrict(n - 1) != t.descent_set() {
                f.extension_bad = Some(i);
            }
            if cdes_unchecked(&phi_unchecked(t)) != c.shift_mod(1, n) {
                f.equivariance_bad = Some(i);
            }
            if c.is_empty() || c.len() == n {
                f.non_escher_bad = Some(i);
            }
            f.fibers.insert(c, 1);
            f
        })
        .reduce(AxiomFold::default, AxiomFold::merge);

    let mut counterexamples = Vec::new();
    for (axiom, bad) in [
        (Axiom::Extension, fold.extension_bad),
        (Axiom::Equivariance, fold.equivariance_bad),
        (Axiom::NonEscher, fold.non_escher_bad),
    ] {
        if let Some(i) = bad {
            counterexamples.push(Counterexample {
                axiom,
                tableau: all[i].clone(),
            });
        }
    }
    let fibers_rotation_invariant = fold.fibers.iter().all(|(j, &count)| {
        fold.fibers.get(&j.shift_mod(1, n)).copied().unwrap_or(0) == count
    });
    CdmReport {
        shape: Arc::clone(shape),
        rejected_connected_ribbon: false,
        tableau_count: all.len(),
        extension_ok: fold.extension_bad.is_none(),
        equivariance_ok: fold.equivariance_bad.is_none(),
        non_escher_ok: fold.non_escher_bad.is_none(),
        counterexamples,
        fiber_multiset: fold.fibers,
        fibers_rotation_invariant,
    }
}

/// One φ-orbit: its size, the period of its cyclic descent trajectory, and a
/// digest of the traversal for golden tests.
#[derive(Debug, Clone)]
pub struct OrbitSummary {
    pub representative: Tableau,
    pub size: usize,
    /// Period of the cyclic descent trajectory: least p ≥ 1 with
    /// cDes(φ^{i+p} T) = cDes(φ^i T) for all i. Divides the orbit size.
    pub cdes_period: usize,
    pub trajectory_digest: u64,
}

const FNV_OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
const FNV_PRIME: u64 = 0x0000_0100_0000_01b3;

fn fnv1a(digest: &mut u64, bytes: impl IntoIterator<Item = u64>) {
    for b in bytes {
        *digest ^= b;
        *digest = digest.wrapping_mul(FNV_PRIME);
    }
}

/// Iterates φ from `t` until the orbit closes.
pub fn orbit(t: &Tableau) -> Result<OrbitSummary, CyclicError> {
    reject_ribbon(t.shape())?;
    let mut digest = FNV_OFFSET;
    let mut trajectory: Vec<DescentSet> = Vec::new();
    let mut cur = t.clone();
    loop {
        fnv1a(
            &mut digest,
            cur.row_reading_word().iter().map(|&e| e as u64),
        );
        trajectory.push(cdes_unchecked(&cur));
        cur = phi_unchecked(&cur);
        if cur == *t {
            break;
        }
    }
    let size = trajectory.len();
    let cdes_period = trajectory_period(&trajectory);
    Ok(OrbitSummary {
        representative: t.clone(),
        size,
        cdes_period,
        trajectory_digest: digest,
    })
}

/// Least p with `trajectory[(i+p) mod m] = trajectory[i]` for all i. Valid
/// shifts of a cyclic sequence form a subgroup of ℤ/m, so only divisors of m
/// need checking.
fn trajectory_period(trajectory: &[DescentSet]) -> usize {
    let m = trajectory.len();
    let mut divisors = divisors_of(m);
    divisors.sort_unstable();
    for &p in &divisors {
        if (0..m).all(|i| trajectory[(i + p) % m] == trajectory[i]) {
            return p;
        }
    }
    unreachable!("the orbit size is always a valid period");
}

fn divisors_of(x: usize) -> Vec<usize> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= x {
        if x.is_multiple_of(d) {
            out.push(d);
            if d != x / d {
                out.push(x / d);
            }
        }
        d += 1;
    }
    out
}

/// Partitions `SYT(shape)` into φ-orbits, each summarized from its
/// enumeration-minimal representative.
pub fn orbit_census(shape: &Arc<SkewShape>) -> Result<Vec<OrbitSummary>, CyclicError> {
    reject_ribbon(shape)?;
    let all = enumerate_syt(shape);
    let index: std::collections::HashMap<&[usize], usize> = all
        .iter()
        .enumerate()
        .map(|(i, t)| (t.row_reading_word(), i))
        .collect();
    let mut seen = vec![false; all.len()];
    let mut out = Vec::new();
    for (i, t) in all.iter().enumerate() {
        if seen[i] {
            continue;
        }
        let mut cur = t.clone();
        loop {
            seen[index[cur.row_reading_word()]] = true;
            cur = phi_unchecked(&cur);
            if cur == *t {
                break;
            }
        }
        out.push(orbit(t).expect("shape already validated"));
    }
    Ok(out)
}

/// Which path-location statement a violation falls under.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathLemma {
    /// Sources of P_φ(T) and P_φ(φT), keyed on the first step of P_φ(T).
    ProSourceLocation,
    /// Destination of P_φ(T) against the pseudo-path destination in
    /// pro(Rot_SE T), keyed on that path's last step.
    ProDestLocation,
    /// Sources of P_{φ⁻¹}(T) and P_{φ⁻¹}(φ⁻¹T), keyed on the first step.
    DemSourceLocation,
    /// Pseudo-promotion paths agree between T and Rot_SE(T).
    RotSeSamePseudoPath,
    /// Pseudo-promotion paths agree between T and Rot_NW(T) up to the first
    /// northwest interior corner, then each runs straight.
    RotNwAlmostSamePseudoPath,
    /// n−1 ∈ Des(T) ⟺ 1 ∈ Des(φ²T).
    DoublePromotion,
}

#[derive(Debug, Clone)]
pub struct PathLemmaViolation {
    pub lemma: PathLemma,
    pub tableau: Tableau,
}

#[derive(Debug, Clone)]
pub struct PathLemmaReport {
    pub shape: Arc<SkewShape>,
    pub tableau_count: usize,
    /// Tableaux meeting the hypothesis of each location lemma.
    pub source_cases: usize,
    pub dest_cases: usize,
    pub demotion_cases: usize,
    pub pseudo_paths_checked: usize,
    pub violations: Vec<PathLemmaViolation>,
}

/// P_φ(T): the promotion path of Rot_SE(T).
pub fn phi_promotion_path(t: &Tableau) -> Path {
    promote_with_path(&rotate(t, Side::Se)).1
}

/// P_{φ⁻¹}(T): the demotion path of Rot_NW(T).
pub fn phi_inverse_demotion_path(t: &Tableau) -> Path {
    demote_with_path(&rotate(t, Side::Nw)).1
}

#[derive(Default)]
struct PathFold {
    source_cases: usize,
    dest_cases: usize,
    demotion_cases: usize,
    pseudo_paths_checked: usize,
    violations: Vec<(usize, PathLemma)>,
}

impl PathFold {
    fn merge(mut self, other: PathFold) -> PathFold {
        self.source_cases += other.source_cases;
        self.dest_cases += other.dest_cases;
        self.demotion_cases += other.demotion_cases;
        self.pseudo_paths_checked += other.pseudo_paths_checked;
        self.violations.extend(other.violations);
        self
    }
}

/// Exhaustively checks the path-location statements over `SYT(shape)`.
pub fn path_lemma_suite(shape: &Arc<SkewShape>) -> Result<PathLemmaReport, CyclicError> {
    reject_ribbon(shape)?;
    let n = shape.num_cells();
    let all = enumerate_syt(shape);
    let fold = all
        .par_iter()
        .enumerate()
        .map(|(i, t)| {
            let mut f = PathFold::default();
            check_one(t, n, i, &mut f);
            f
        })
        .reduce(PathFold::default, PathFold::merge);

    let mut violations: Vec<(usize, PathLemma)> = fold.violations;
    violations.sort_by_key(|&(i, _)| i);
    Ok(PathLemmaReport {
        shape: Arc::clone(shape),
        tableau_count: all.len(),
        source_cases: fold.source_cases,
        dest_cases: fold.dest_cases,
        demotion_cases: fold.demotion_cases,
        pseudo_paths_checked: fold.pseudo_paths_checked,
        violations: violations
            .into_iter()
            .map(|(i, lemma)| PathLemmaViolation {
                lemma,
                tableau: all[i].clone(),
            })
            .collect(),
    })
}

fn check_one(t: &Tableau, n: usize, idx: usize, f: &mut PathFold) {
    let shape = t.shape();
    let phi_t = phi_unchecked(t);

    // Sources of consecutive φ-promotion paths.
    if n >= 2
        && shape.component_of(t.position_of(n - 1)) == shape.component_of(t.position_of(n))
        && t.has_descent(n - 1)
    {
        f.source_cases += 1;
        let p1 = phi_promotion_path(t);
        let p2 = phi_promotion_path(&phi_t);
        let (x1, x2) = (p1.source(), p2.source());
        let ok = match p1.first_step() {
            Some(StepDir::North) => x2.nonstrictly_southwest_of(x1),
            Some(StepDir::West) => x2.strictly_southwest_of(x1),
            _ => false,
        };
        if !ok {
            f.violations.push((idx, PathLemma::ProSourceLocation));
        }
    }

    // Sources of consecutive φ⁻¹-demotion paths.
    if n >= 2
        && shape.component_of(t.position_of(1)) == shape.component_of(t.position_of(2))
        && !t.has_descent(1)
    {
        f.demotion_cases += 1;
        let p1 = phi_inverse_demotion_path(t);
        let p2 = phi_inverse_demotion_path(&phi_inverse_unchecked(t));
        let (x1, x2) = (p1.source(), p2.source());
        let ok = match p1.first_step() {
            Some(StepDir::South) => x2.strictly_southwest_of(x1),
            Some(StepDir::East) => x2.nonstrictly_southwest_of(x1),
            _ => false,
        };
        if !ok {
            f.violations.push((idx, PathLemma::DemSourceLocation));
        }
    }

    // Destinations: D₁ against D₂′ in T′ = pro(Rot_SE T).
    let phi2_t = phi_unchecked(&phi_t);
    if n >= 2
        && shape.component_of(phi2_t.position_of(1)) == shape.component_of(phi2_t.position_of(2))
        && !phi2_t.has_descent(1)
    {
        f.dest_cases += 1;
        let d1 = phi_promotion_path(t).destination();
        let s2 = phi_promotion_path(&phi_t).source();
        let t_prime = promote(&rotate(t, Side::Se));
        let p2_prime = pseudo_promotion_path(&t_prime, s2)
            .expect("rotation endpoints are exterior corners");
        let d2_prime = p2_prime.destination();
        let ok = match p2_prime.last_step() {
            Some(StepDir::North) => d1.strictly_southwest_of(d2_prime),
            Some(StepDir::West) => d1.nonstrictly_southwest_of(d2_prime),
            _ => false,
        };
        if !ok {
            f.violations.push((idx, PathLemma::ProDestLocation));
        }
    }

    // Pseudo-promotion path stability under the two rotations.
    let rot_se = rotate(t, Side::Se);
    let rot_nw = rotate(t, Side::Nw);
    let nw_boundary = shape.boundary(Side::Nw);
    for z in shape.boundary(Side::Se).exterior_corners() {
        f.pseudo_paths_checked += 1;
        let base = pseudo_promotion_path(t, z).expect("z is an exterior corner");
        let in_se = pseudo_promotion_path(&rot_se, z).expect("same shape");
        if base != in_se {
            f.violations.push((idx, PathLemma::RotSeSamePseudoPath));
        }
        let in_nw = pseudo_promotion_path(&rot_nw, z).expect("same shape");
        let corner = base
            .cells()
            .iter()
            .position(|&c| nw_boundary.kind(c) == Some(CornerKind::Interior));
        let almost_ok = match corner {
            None => base == in_nw,
            Some(u) => {
                base.cells().len() > u
                    && in_nw.cells().len() > u
                    && base.cells()[..=u] == in_nw.cells()[..=u]
                    && runs_straight(&base.cells()[u..])
                    && runs_straight(&in_nw.cells()[u..])
            }
        };
        if !almost_ok {
            f.violations.push((idx, PathLemma::RotNwAlmostSamePseudoPath));
        }
    }

    // n−1 ∈ Des(T) ⟺ 1 ∈ Des(φ²T).
    if n >= 2 && (t.has_descent(n - 1) != phi2_t.has_descent(1)) {
        f.violations.push((idx, PathLemma::DoublePromotion));
    }
}

/// All steps of the given cell run point the same way.
fn runs_straight(cells: &[Cell]) -> bool {
    cells.len() < 3
        || cells
            .windows(2)
            .map(|w| crate::dynamics::step_dir(w[0], w[1]))
            .collect::<Vec<_>>()
            .windows(2)
            .all(|d| d[0] == d[1])
}

//! The southeast and northwest rotation operators on standard Young
//! tableaux, together with their candidate-set analysis and explicit
//! inverses.
//!
//! `Rot_SE` finds the maximal top segment `{n−k+1, …, n}` of entries that is
//! southeast min-unimodal, then cyclically shifts those entries one step
//! along the boundary between `pos(n)` and the rotation endpoint. `Rot_NW`
//! is the mirror image acting on the bottom segment `{1, …, ℓ}`. Both are
//! implemented first-class; the reverse-conjugation identities between them
//! are used as cross-checks in tests, not as the implementation.

use std::sync::Arc;

use thiserror::Error;

use crate::shape::{Cell, CornerKind, Side, SkewShape};
use crate::tableau::Tableau;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RotationError {
    #[error("cell {0} is not an exterior corner of the requested boundary")]
    NotExteriorCorner(Cell),
}

/// The candidate analysis behind one rotation operator.
#[derive(Debug, Clone)]
pub struct RotationAnalysis {
    pub side: Side,
    /// Rc: the rotated entries, ascending. For SE this is `{n−k+1, …, n}`,
    /// for NW `{1, …, ℓ}`.
    pub candidate_set: Vec<usize>,
    /// Rp: the cells holding `candidate_set`, in boundary SW→NE order.
    pub candidate_cells: Vec<Cell>,
    /// Y: position of min Rc (SE) resp. max Rc (NW).
    pub extremal_cell: Cell,
    /// X: the rotation endpoint.
    pub endpoint: Cell,
    /// The connected run of Rp containing Y (a hook, column, or row).
    pub central: Vec<Cell>,
    /// Runs of Rp strictly southwest of the central one.
    pub southwest: Vec<Cell>,
    /// Runs of Rp strictly northeast of the central one.
    pub northeast: Vec<Cell>,
}

fn anchor_entry(n: usize, side: Side) -> usize {
    match side {
        Side::Se => n,
        Side::Nw => 1,
    }
}

fn is_min_unimodal(v: &[usize]) -> bool {
    let mut i = 0;
    while i + 1 < v.len() && v[i] > v[i + 1] {
        i += 1;
    }
    while i + 1 < v.len() && v[i] < v[i + 1] {
        i += 1;
    }
    i + 1 == v.len() || v.is_empty()
}

fn is_max_unimodal(v: &[usize]) -> bool {
    let mut i = 0;
    while i + 1 < v.len() && v[i] < v[i + 1] {
        i += 1;
    }
    while i + 1 < v.len() && v[i] > v[i + 1] {
        i += 1;
    }
    i + 1 == v.len() || v.is_empty()
}

/// True iff all of `entries` lie in one connected component, on the given
/// side's boundary, and read min-unimodally (SE) resp. max-unimodally (NW)
/// in the boundary's SW→NE order.
pub fn is_unimodal(t: &Tableau, entries: &[usize], side: Side) -> bool {
    if entries.is_empty() {
        return true;
    }
    let b = t.shape().boundary(side);
    let mut comp = None;
    let mut indexed = Vec::with_capacity(entries.len());
    for &e in entries {
        let c = t.position_of(e);
        let Some((ci, pi)) = b.position(c) else {
            return false;
        };
        if *comp.get_or_insert(ci) != ci {
            return false;
        }
        indexed.push((pi, e));
    }
    indexed.sort_unstable();
    let seq: Vec<usize> = indexed.into_iter().map(|(_, e)| e).collect();
    match side {
        Side::Se => is_min_unimodal(&seq),
        Side::Nw => is_max_unimodal(&seq),
    }
}

fn candidate_entries(n: usize, k: usize, side: Side) -> Vec<usize> {
    match side {
        Side::Se => (n - k + 1..=n).collect(),
        Side::Nw => (1..=k).collect(),
    }
}

/// Computes Rc, Rp, Y, the rotation endpoint X, and the hook decomposition
/// of Rp for one side.
pub fn analyze(t: &Tableau, side: Side) -> RotationAnalysis {
    let n = t.n();
    let b = t.shape().boundary(side);
    let mut k = 1;
    debug_assert!(is_unimodal(t, &candidate_entries(n, 1, side), side));
    while k < n && is_unimodal(t, &candidate_entries(n, k + 1, side), side) {
        k += 1;
    }
    let candidate_set = candidate_entries(n, k, side);
    let mut candidate_cells: Vec<Cell> = candidate_set.iter().map(|&e| t.position_of(e)).collect();
    candidate_cells.sort_by_key(|&c| b.position(c).unwrap());

    let extremal = match side {
        Side::Se => n - k + 1,
        Side::Nw => k,
    };
    let y = t.position_of(extremal);
    let anchor = t.position_of(anchor_entry(n, side));
    let endpoint = rotation_endpoint(t.shape(), side, y, anchor);

    // Decomposition into maximal boundary-adjacent runs.
    let mut runs: Vec<Vec<Cell>> = Vec::new();
    for &c in &candidate_cells {
        match runs.last_mut() {
            Some(run) if adjacent(*run.last().unwrap(), c) => run.push(c),
            _ => runs.push(vec![c]),
        }
    }
    let central_idx = runs.iter().position(|r| r.contains(&y)).unwrap();
    let southwest = runs[..central_idx].concat();
    let northeast = runs[central_idx + 1..].concat();
    let central = runs[central_idx].clone();

    RotationAnalysis {
        side,
        candidate_set,
        candidate_cells,
        extremal_cell: y,
        endpoint,
        central,
        southwest,
        northeast,
    }
}

fn adjacent(a: Cell, b: Cell) -> bool {
    a.row.abs_diff(b.row) + a.col.abs_diff(b.col) == 1
}

/// The exterior corner due east/south (SE) resp. due west/north (NW) of `y`;
/// an interior-corner tie is resolved toward the side's anchor cell.
fn rotation_endpoint(shape: &SkewShape, side: Side, y: Cell, anchor: Cell) -> Cell {
    let b = shape.boundary(side);
    let (yc, yi) = b.position(y).expect("Y lies on the boundary");
    let comp = b.component(yc);
    let candidates: Vec<(usize, Cell)> = comp
        .iter()
        .enumerate()
        .filter(|&(_, &(c, kind))| {
            kind == CornerKind::Exterior
                && match side {
                    Side::Se => {
                        (c.col == y.col && c.row >= y.row) || (c.row == y.row && c.col >= y.col)
                    }
                    Side::Nw => {
                        (c.col == y.col && c.row <= y.row) || (c.row == y.row && c.col <= y.col)
                    }
                }
        })
        .map(|(i, &(c, _))| (i, c))
        .collect();
    match candidates.len() {
        1 => candidates[0].1,
        2 => {
            let (_, ai) = b.position(anchor).expect("anchor lies on the boundary");
            let lo = yi.min(ai);
            let hi = yi.max(ai);
            let within: Vec<Cell> = candidates
                .iter()
                .filter(|&&(i, _)| lo <= i && i <= hi)
                .map(|&(_, c)| c)
                .collect();
            debug_assert_eq!(within.len(), 1, "tie-break must isolate one corner");
            within[0]
        }
        k => unreachable!("{k} endpoint candidates at {y} on {}", shape),
    }
}

/// `Rot_SE` (side = SE) or `Rot_NW` (side = NW).
pub fn rotate(t: &Tableau, side: Side) -> Tableau {
    let analysis = analyze(t, side);
    rotate_with_analysis(t, &analysis)
}

pub fn rotate_with_analysis(t: &Tableau, analysis: &RotationAnalysis) -> Tableau {
    let b = t.shape().boundary(analysis.side);
    let anchor = t.position_of(anchor_entry(t.n(), analysis.side));
    let ai = b.position(anchor).unwrap().1;
    let xi = b.position(analysis.endpoint).unwrap().1;
    let (lo, hi) = (ai.min(xi), ai.max(xi));
    // Cells of Rp between pos(anchor) and X inclusive, ordered anchor → X.
    let mut chain: Vec<Cell> = analysis
        .candidate_cells
        .iter()
        .copied()
        .filter(|&c| {
            let (_, pi) = b.position(c).unwrap();
            lo <= pi && pi <= hi
        })
        .collect();
    if xi < ai {
        chain.reverse();
    }
    debug_assert_eq!(chain.first(), Some(&anchor));
    debug_assert_eq!(chain.last(), Some(&analysis.endpoint));

    let shape = Arc::clone(t.shape());
    let mut entry = t.entries_by_cell().to_vec();
    let moved = entry[shape.cell_index(anchor)];
    for w in 0..chain.len() - 1 {
        entry[shape.cell_index(chain[w])] = t.entry_at(chain[w + 1]);
    }
    entry[shape.cell_index(*chain.last().unwrap())] = moved;
    Tableau::from_parts_unchecked(shape, entry)
}

/// Northern and western balance points of a southeast exterior corner: the
/// farthest southeast-boundary cells due north resp. due west of `z`.
pub fn balance_points(shape: &SkewShape, z: Cell) -> Result<(Cell, Cell), RotationError> {
    if !shape.boundary(Side::Se).is_exterior_corner(z) {
        return Err(RotationError::NotExteriorCorner(z));
    }
    Ok(balance_points_on(shape, z, Side::Se))
}

/// SE: (northern, western). NW: (southern, eastern).
fn balance_points_on(shape: &SkewShape, z: Cell, side: Side) -> (Cell, Cell) {
    let b = shape.boundary(side);
    let (zc, _) = b.position(z).expect("z lies on the boundary");
    let cells: Vec<Cell> = b.component(zc).iter().map(|&(c, _)| c).collect();
    let along_col = cells.iter().copied().filter(|c| c.col == z.col);
    let along_row = cells.iter().copied().filter(|c| c.row == z.row);
    match side {
        Side::Se => (
            along_col.min_by_key(|c| c.row).unwrap(),
            along_row.min_by_key(|c| c.col).unwrap(),
        ),
        Side::Nw => (
            along_col.max_by_key(|c| c.row).unwrap(),
            along_row.max_by_key(|c| c.col).unwrap(),
        ),
    }
}

/// Balance of a unimodal set with respect to a boundary cell `w`: entries on
/// either side of `w` read increasing (SE) resp. decreasing (NW) in the
/// direction away from `w`.
fn is_balanced(t: &Tableau, cells: &[(usize, Cell)], w: Cell, side: Side) -> bool {
    let b = t.shape().boundary(side);
    let wi = b.position(w).unwrap().1;
    let increasing_away = |part: &mut dyn Iterator<Item = usize>| -> bool {
        let entries: Vec<usize> = part.collect();
        match side {
            Side::Se => entries.windows(2).all(|p| p[0] < p[1]),
            Side::Nw => entries.windows(2).all(|p| p[0] > p[1]),
        }
    };
    let ne_ok = increasing_away(
        &mut cells
            .iter()
            .filter(|&&(pi, _)| pi >= wi)
            .map(|&(_, c)| t.entry_at(c)),
    );
    let sw_ok = increasing_away(
        &mut cells
            .iter()
            .rev()
            .filter(|&&(pi, _)| pi <= wi)
            .map(|&(_, c)| t.entry_at(c)),
    );
    ne_ok && sw_ok
}

/// Recovers the candidate set of the pre-image: the maximal `S` below the
/// anchor that stays unimodal with the anchor's component and is balanced at
/// the anchor's balance points.
fn recovered_candidate_count(r: &Tableau, side: Side) -> usize {
    let n = r.n();
    let shape = r.shape();
    let b = shape.boundary(side);
    let anchor = r.position_of(anchor_entry(n, side));
    let (ac, _) = b.position(anchor).expect("anchor lies on the boundary");
    let (bp1, bp2) = balance_points_on(shape, anchor, side);
    let (nb1, nb2) = match side {
        Side::Se => (shape.north_of(anchor), shape.west_of(anchor)),
        Side::Nw => (shape.south_of(anchor), shape.east_of(anchor)),
    };

    let mut k = 1;
    while k < n {
        let s: Vec<usize> = match side {
            Side::Se => (n - k..=n - 1).collect(),
            Side::Nw => (2..=k + 1).collect(),
        };
        if !is_unimodal(r, &s, side) {
            break;
        }
        let mut cells: Vec<(usize, Cell)> = Vec::with_capacity(s.len());
        let mut same_comp = true;
        for &e in &s {
            let c = r.position_of(e);
            let (ci, pi) = b.position(c).unwrap();
            if ci != ac {
                same_comp = false;
                break;
            }
            cells.push((pi, c));
        }
        if !same_comp {
            break;
        }
        cells.sort_unstable();
        let has1 = nb1.is_some_and(|c| cells.iter().any(|&(_, d)| d == c));
        let has2 = nb2.is_some_and(|c| cells.iter().any(|&(_, d)| d == c));
        let ok = match (has1, has2) {
            (true, true) => false,
            (true, false) => is_balanced(r, &cells, bp1, side),
            (false, true) => is_balanced(r, &cells, bp2, side),
            (false, false) => {
                is_balanced(r, &cells, bp1, side) && is_balanced(r, &cells, bp2, side)
            }
        };
        if !ok {
            break;
        }
        k += 1;
    }
    k
}

/// The inverse of `rotate`: recovers the rotated segment from the image and
/// moves the anchor entry back across it.
pub fn rotate_inverse(r: &Tableau, side: Side) -> Tableau {
    let n = r.n();
    let shape = r.shape();
    let b = shape.boundary(side);
    let k = recovered_candidate_count(r, side);
    let rc = candidate_entries(n, k, side);
    let mut rp: Vec<Cell> = rc.iter().map(|&e| r.position_of(e)).collect();
    rp.sort_by_key(|&c| b.position(c).unwrap());

    let anchor = r.position_of(anchor_entry(n, side));
    let p = rp.iter().position(|&c| c == anchor).unwrap();
    let extremal = r.position_of(match side {
        Side::Se => n - k + 1,
        Side::Nw => k,
    });
    let e = rp.iter().position(|&c| c == extremal).unwrap();
    if e == p {
        return r.clone();
    }

    // Runs of Rp on its own cell set decide the direction: the anchor moves
    // toward the extremal cell when they lie in different runs, away from it
    // otherwise.
    let mut run_id = vec![0usize; rp.len()];
    for i in 1..rp.len() {
        run_id[i] = run_id[i - 1] + usize::from(!adjacent(rp[i - 1], rp[i]));
    }
    let toward = run_id[p] != run_id[e];
    let extremal_is_sw = e < p;
    let move_sw = if toward { extremal_is_sw } else { !extremal_is_sw };

    let shape = Arc::clone(shape);
    let mut entry = r.entries_by_cell().to_vec();
    let moved = entry[shape.cell_index(anchor)];
    if move_sw {
        for i in (0..p).rev() {
            entry[shape.cell_index(rp[i + 1])] = r.entry_at(rp[i]);
        }
        entry[shape.cell_index(rp[0])] = moved;
    } else {
        for i in p + 1..rp.len() {
            entry[shape.cell_index(rp[i - 1])] = r.entry_at(rp[i]);
        }
        entry[shape.cell_index(*rp.last().unwrap())] = moved;
    }
    Tableau::from_parts_unchecked(shape, entry)
}

/// Report on Lemma-level non-interference of the two rotations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonInterferenceReport {
    /// Rc_SE ∩ Rc_NW = ∅.
    pub disjoint: bool,
    pub overlap: Vec<usize>,
    /// Rc_SE(T) = Rc_SE(Rot_NW T) and Rc_NW(T) = Rc_NW(Rot_SE T).
    pub stable: bool,
}

pub fn non_interference(t: &Tableau) -> NonInterferenceReport {
    let se = analyze(t, Side::Se).candidate_set;
    let nw = analyze(t, Side::Nw).candidate_set;
    let overlap: Vec<usize> = se.iter().copied().filter(|e| nw.contains(e)).collect();
    let stable = analyze(&rotate(t, Side::Nw), Side::Se).candidate_set == se
        && analyze(&rotate(t, Side::Se), Side::Nw).candidate_set == nw;
    NonInterferenceReport {
        disjoint: overlap.is_empty(),
        overlap,
        stable,
    }
}

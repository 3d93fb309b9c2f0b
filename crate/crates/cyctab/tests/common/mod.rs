//! Helpers shared by the integration suites: the jeu-de-taquin promotion
//! oracle and the rotation-region decomposition checker.

use std::sync::Arc;

use cyctab::rotation::analyze;
use cyctab::shape::{Cell, Side};
use cyctab::tableau::Tableau;

/// Jeu-de-taquin formulation of promotion, used as an independent oracle:
/// delete n, slide the hole to a northwest corner, increment, fill with 1.
/// Each slide sequence must preserve the descent set of the remaining
/// entries.
pub fn promote_jdt(tab: &Tableau) -> Tableau {
    let shape = Arc::clone(tab.shape());
    let n = tab.n();
    let mut grid: Vec<Option<usize>> = tab.row_reading_word().iter().map(|&e| Some(e)).collect();
    let mut hole = tab.position_of(n);
    grid[shape.cell_index(hole)] = None;

    let partial_descents = |grid: &[Option<usize>]| -> Vec<usize> {
        let mut row_of = vec![0usize; n];
        for (i, e) in grid.iter().enumerate() {
            if let Some(e) = e {
                row_of[e - 1] = shape.cells()[i].row;
            }
        }
        (1..n - 1).filter(|&i| row_of[i] > row_of[i - 1]).collect()
    };
    let before = partial_descents(&grid);

    loop {
        let north = shape.north_of(hole);
        let west = shape.west_of(hole);
        let slid = match (north, west) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => {
                if grid[shape.cell_index(a)] > grid[shape.cell_index(b)] {
                    a
                } else {
                    b
                }
            }
        };
        grid[shape.cell_index(hole)] = grid[shape.cell_index(slid)].take();
        hole = slid;
    }
    assert_eq!(partial_descents(&grid), before, "jdt slides changed descents");

    let entry: Vec<usize> = grid
        .into_iter()
        .map(|e| match e {
            Some(e) => e + 1,
            None => 1,
        })
        .collect();
    Tableau::from_entries(shape, entry).expect("jdt promotion produces a standard tableau")
}

/// Validates the candidate-region decomposition: the central run is a hook
/// anchored at Y with the endpoint at one of its two ends, flanking runs are
/// single columns/rows, and the forbidden L-pattern is absent.
pub fn check_decomposition(tab: &Tableau, side: Side) {
    let a = analyze(tab, side);
    let y = a.extremal_cell;
    let in_rp = |c: Cell| a.candidate_cells.contains(&c);
    let shape = tab.shape();

    for &c in &a.central {
        let on_arms = match side {
            Side::Se => (c.col == y.col && c.row >= y.row) || (c.row == y.row && c.col >= y.col),
            Side::Nw => (c.col == y.col && c.row <= y.row) || (c.row == y.row && c.col <= y.col),
        };
        assert!(on_arms, "{tab:?} {side:?}: central cell {c} off the hook at {y}");
    }
    assert!(a.central.contains(&a.endpoint));
    let col_arm_end = match side {
        Side::Se => a.central.iter().filter(|c| c.col == y.col).max_by_key(|c| c.row),
        Side::Nw => a.central.iter().filter(|c| c.col == y.col).min_by_key(|c| c.row),
    };
    let row_arm_end = match side {
        Side::Se => a.central.iter().filter(|c| c.row == y.row).max_by_key(|c| c.col),
        Side::Nw => a.central.iter().filter(|c| c.row == y.row).min_by_key(|c| c.col),
    };
    assert!(
        Some(&a.endpoint) == col_arm_end || Some(&a.endpoint) == row_arm_end,
        "{tab:?} {side:?}: endpoint {} not at an arm end",
        a.endpoint
    );

    // Flanking runs: single columns on the side the anchor starts from,
    // single rows on the other (mirrored for NW).
    let (cols_side, rows_side) = match side {
        Side::Se => (&a.southwest, &a.northeast),
        Side::Nw => (&a.northeast, &a.southwest),
    };
    for run in split_runs(cols_side) {
        assert!(
            run.iter().all(|c| c.col == run[0].col),
            "{tab:?} {side:?}: run {run:?} not a column"
        );
    }
    for run in split_runs(rows_side) {
        assert!(
            run.iter().all(|c| c.row == run[0].row),
            "{tab:?} {side:?}: run {run:?} not a row"
        );
    }

    // No cell of Rp may have both inward neighbors inside Rp.
    for &c in &a.candidate_cells {
        let (u, v) = match side {
            Side::Se => (shape.north_of(c), shape.west_of(c)),
            Side::Nw => (shape.south_of(c), shape.east_of(c)),
        };
        let both = u.is_some_and(&in_rp) && v.is_some_and(&in_rp);
        assert!(!both, "{tab:?} {side:?}: L-pattern at {c}");
    }
}

pub fn split_runs(cells: &[Cell]) -> Vec<Vec<Cell>> {
    let mut runs: Vec<Vec<Cell>> = Vec::new();
    for &c in cells {
        match runs.last_mut() {
            Some(run)
                if {
                    let p = *run.last().unwrap();
                    p.row.abs_diff(c.row) + p.col.abs_diff(c.col) == 1
                } =>
            {
                run.push(c)
            }
            _ => runs.push(vec![c]),
        }
    }
    runs
}

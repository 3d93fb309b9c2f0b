//! Promotion and demotion, and the path notions they induce: promotion
//! paths, demotion paths, and pseudo-promotion paths.

use std::sync::Arc;

use thiserror::Error;

use crate::shape::{Cell, Side};
use crate::tableau::Tableau;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DynamicsError {
    #[error("cell {0} is not a southeast exterior corner")]
    NotExteriorCorner(Cell),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathKind {
    Promotion,
    Demotion,
    Pseudo,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StepDir {
    North,
    South,
    East,
    West,
}

pub(crate) fn step_dir(from: Cell, to: Cell) -> StepDir {
    match (to.row as isize - from.row as isize, to.col as isize - from.col as isize) {
        (-1, 0) => StepDir::North,
        (1, 0) => StepDir::South,
        (0, 1) => StepDir::East,
        (0, -1) => StepDir::West,
        _ => panic!("cells {from} and {to} are not adjacent"),
    }
}

/// An ordered walk through edge-adjacent cells. Promotion and pseudo paths
/// step only north/west; demotion paths step only south/east.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    pub kind: PathKind,
    cells: Vec<Cell>,
}

impl Path {
    fn new(kind: PathKind, cells: Vec<Cell>) -> Self {
        debug_assert!(!cells.is_empty());
        debug_assert!(cells.windows(2).all(|w| {
            let d = step_dir(w[0], w[1]);
            match kind {
                PathKind::Promotion | PathKind::Pseudo => {
                    matches!(d, StepDir::North | StepDir::West)
                }
                PathKind::Demotion => matches!(d, StepDir::South | StepDir::East),
            }
        }));
        Path { kind, cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    /// Number of cells; a path has at least one.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn source(&self) -> Cell {
        self.cells[0]
    }

    pub fn destination(&self) -> Cell {
        *self.cells.last().unwrap()
    }

    pub fn first_step(&self) -> Option<StepDir> {
        (self.cells.len() > 1).then(|| step_dir(self.cells[0], self.cells[1]))
    }

    pub fn last_step(&self) -> Option<StepDir> {
        let k = self.cells.len();
        (k > 1).then(|| step_dir(self.cells[k - 2], self.cells[k - 1]))
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.contains(&c)
    }
}

/// Promotion: add 1 mod n to every entry, then swap the 1 (at the old
/// position of n) with the larger of its northern and western neighbors
/// until it reaches a northwest exterior corner.
pub fn promote(t: &Tableau) -> Tableau {
    promote_with_path(t).0
}

pub fn promote_with_path(t: &Tableau) -> (Tableau, Path) {
    let n = t.n();
    let shape = Arc::clone(t.shape());
    let mut entry: Vec<usize> = t
        .entries_by_cell()
        .iter()
        .map(|&e| if e == n { 1 } else { e + 1 })
        .collect();
    let mut cur = t.position_of(n);
    let mut cells = vec![cur];
    loop {
        let north = shape.north_of(cur);
        let west = shape.west_of(cur);
        let next = match (north, west) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => {
                if entry[shape.cell_index(a)] > entry[shape.cell_index(b)] {
                    a
                } else {
                    b
                }
            }
        };
        entry.swap(shape.cell_index(cur), shape.cell_index(next));
        cur = next;
        cells.push(cur);
    }
    (
        Tableau::from_parts_unchecked(shape, entry),
        Path::new(PathKind::Promotion, cells),
    )
}

/// Demotion, the inverse of promotion: subtract 1 mod n, then swap the n
/// (at the old position of 1) with the smaller of its southern and eastern
/// neighbors until it reaches a southeast exterior corner.
pub fn demote(t: &Tableau) -> Tableau {
    demote_with_path(t).0
}

pub fn demote_with_path(t: &Tableau) -> (Tableau, Path) {
    let n = t.n();
    let shape = Arc::clone(t.shape());
    let mut entry: Vec<usize> = t
        .entries_by_cell()
        .iter()
        .map(|&e| if e == 1 { n } else { e - 1 })
        .collect();
    let mut cur = t.position_of(1);
    let mut cells = vec![cur];
    loop {
        let south = shape.south_of(cur);
        let east = shape.east_of(cur);
        let next = match (south, east) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => {
                if entry[shape.cell_index(a)] < entry[shape.cell_index(b)] {
                    a
                } else {
                    b
                }
            }
        };
        entry.swap(shape.cell_index(cur), shape.cell_index(next));
        cur = next;
        cells.push(cur);
    }
    (
        Tableau::from_parts_unchecked(shape, entry),
        Path::new(PathKind::Demotion, cells),
    )
}

/// The cells traversed by the migrating entry when `t` is promoted, from
/// `pos(n)` to a northwest exterior corner.
pub fn promotion_path(t: &Tableau) -> Path {
    promote_with_path(t).1
}

/// The cells traversed by the migrating entry when `t` is demoted.
pub fn demotion_path(t: &Tableau) -> Path {
    demote_with_path(t).1
}

/// Walks from the southeast exterior corner `z` to the larger of the current
/// cell's northern and western neighbors until a northwest exterior corner is
/// reached. When `z = pos(n)` this is exactly the promotion path.
pub fn pseudo_promotion_path(t: &Tableau, z: Cell) -> Result<Path, DynamicsError> {
    let shape = t.shape();
    if !shape.boundary(Side::Se).is_exterior_corner(z) {
        return Err(DynamicsError::NotExteriorCorner(z));
    }
    let mut cur = z;
    let mut cells = vec![cur];
    loop {
        let north = shape.north_of(cur);
        let west = shape.west_of(cur);
        let next = match (north, west) {
            (None, None) => break,
            (Some(a), None) => a,
            (None, Some(b)) => b,
            (Some(a), Some(b)) => {
                if t.entry_at(a) > t.entry_at(b) {
                    a
                } else {
                    b
                }
            }
        };
        cur = next;
        cells.push(cur);
    }
    Ok(Path::new(PathKind::Pseudo, cells))
}

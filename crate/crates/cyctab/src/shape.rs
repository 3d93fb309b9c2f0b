//! Skew shapes and their geometry: cells, neighbors, connected components,
//! southeast/northwest boundaries with corner classification, ribbon
//! detection, and canonical enumeration.
//!
//! Coordinates are 1-based `(row, col)` with row 1 northernmost and column 1
//! westernmost, matching the matrix convention for Young diagrams.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("malformed shape: {0}")]
    MalformedShape(String),
    #[error("not a partition: {0}")]
    NotAPartition(String),
    #[error("mu is not contained in lambda: row {row} has mu = {mu} > lambda = {lambda}")]
    MuNotContained { row: usize, mu: usize, lambda: usize },
    #[error("row {row} is empty; the canonical form of this shape is \"{hint}\"")]
    EmptyRow { row: usize, hint: String },
    #[error("column {col} is empty; the canonical form of this shape is \"{hint}\"")]
    ShiftedColumns { col: usize, hint: String },
}

/// A partition: a weakly decreasing list of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self, ShapeError> {
        if parts.contains(&0) {
            return Err(ShapeError::NotAPartition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(ShapeError::NotAPartition(format!(
                "parts must be weakly decreasing, got {parts:?}"
            )));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.parts.iter().sum()
    }

    /// The i-th part (0-based), zero beyond the last part.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Componentwise containment, with the shorter partition padded by zeros.
    pub fn contains(&self, other: &Partition) -> bool {
        (0..other.len()).all(|i| self.part(i) >= other.part(i))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

/// A cell of a Young diagram, 1-based, row increasing southward and column
/// increasing eastward.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }

    pub fn north(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell::new(self.row - 1, self.col))
    }

    pub fn west(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell::new(self.row, self.col - 1))
    }

    pub fn south(self) -> Cell {
        Cell::new(self.row + 1, self.col)
    }

    pub fn east(self) -> Cell {
        Cell::new(self.row, self.col + 1)
    }

    /// Nonstrictly south and west of `other`.
    pub fn nonstrictly_southwest_of(self, other: Cell) -> bool {
        self.row >= other.row && self.col <= other.col
    }

    /// Strictly south and west of `other`.
    pub fn strictly_southwest_of(self, other: Cell) -> bool {
        self.row > other.row && self.col < other.col
    }

    /// Strictly north and east of `other`.
    pub fn strictly_northeast_of(self, other: Cell) -> bool {
        self.row < other.row && self.col > other.col
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// The two boundaries a rotation operator can act on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Se,
    Nw,
}

impl Side {
    /// The diagonal neighbor whose absence puts a cell on this boundary.
    fn diagonal(self, c: Cell) -> Option<Cell> {
        match self {
            Side::Se => Some(Cell::new(c.row + 1, c.col + 1)),
            Side::Nw => (c.row > 1 && c.col > 1).then(|| Cell::new(c.row - 1, c.col - 1)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CornerKind {
    Exterior,
    Interior,
    Plain,
}

/// One side's boundary: per shape component, the boundary cells in their
/// natural southwest-to-northeast order, each classified as an exterior
/// corner, an interior corner, or a plain boundary cell.
#[derive(Debug, Clone)]
pub struct BoundaryProfile {
    pub side: Side,
    components: Vec<Vec<(Cell, CornerKind)>>,
    index: HashMap<Cell, (usize, usize)>,
}

impl BoundaryProfile {
    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Boundary cells of one shape component, SW→NE.
    pub fn component(&self, comp: usize) -> &[(Cell, CornerKind)] {
        &self.components[comp]
    }

    /// All boundary cells with classification, SW→NE globally (components are
    /// themselves ordered SW→NE).
    pub fn cells(&self) -> impl Iterator<Item = (Cell, CornerKind)> + '_ {
        self.components.iter().flatten().copied()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.index.contains_key(&c)
    }

    /// `(component, position along that component's boundary)`.
    pub fn position(&self, c: Cell) -> Option<(usize, usize)> {
        self.index.get(&c).copied()
    }

    pub fn kind(&self, c: Cell) -> Option<CornerKind> {
        self.position(c).map(|(comp, i)| self.components[comp][i].1)
    }

    pub fn is_exterior_corner(&self, c: Cell) -> bool {
        self.kind(c) == Some(CornerKind::Exterior)
    }

    pub fn exterior_corners(&self) -> Vec<Cell> {
        self.cells()
            .filter(|&(_, k)| k == CornerKind::Exterior)
            .map(|(c, _)| c)
            .collect()
    }
}

/// A skew shape λ/μ in canonical position: every row nonempty and every
/// column nonempty, so translated copies of the same diagram are identified.
#[derive(Debug)]
pub struct SkewShape {
    lambda: Partition,
    mu: Partition,
    mu_padded: Vec<usize>,
    n: usize,
    cells: Vec<Cell>,
    row_offset: Vec<usize>,
    comp_id: Vec<usize>,
    components: Vec<Vec<Cell>>,
    boundary_se: BoundaryProfile,
    boundary_nw: BoundaryProfile,
}

impl PartialEq for SkewShape {
    fn eq(&self, other: &Self) -> bool {
        self.lambda == other.lambda && self.mu == other.mu
    }
}

impl Eq for SkewShape {}

impl std::hash::Hash for SkewShape {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.lambda.hash(state);
        self.mu.hash(state);
    }
}

impl SkewShape {
    pub fn new(lambda: Partition, mu: Partition) -> Result<Self, ShapeError> {
        if lambda.is_empty() {
            return Err(ShapeError::MalformedShape("shape has no cells".into()));
        }
        let rows = lambda.len();
        for i in 0..mu.len().max(rows) {
            if mu.part(i) > lambda.part(i) {
                return Err(ShapeError::MuNotContained {
                    row: i + 1,
                    mu: mu.part(i),
                    lambda: lambda.part(i),
                });
            }
        }
        let mu_padded: Vec<usize> = (0..rows).map(|i| mu.part(i)).collect();
        // Canonical form: every row nonempty, every column nonempty.
        let all_cells = || {
            (0..rows).flat_map(|i| {
                (mu.part(i) + 1..=lambda.part(i)).map(move |c| Cell::new(i + 1, c))
            })
        };
        for i in 0..rows {
            if lambda.part(i) == mu.part(i) {
                return Err(ShapeError::EmptyRow {
                    row: i + 1,
                    hint: canonical_hint(all_cells()),
                });
            }
        }
        for col in 1..=lambda.part(0) {
            let covered = (0..rows).any(|i| mu_padded[i] < col && col <= lambda.part(i));
            if !covered {
                return Err(ShapeError::ShiftedColumns {
                    col,
                    hint: canonical_hint(all_cells()),
                });
            }
        }

        let cells: Vec<Cell> = all_cells().collect();
        let n = cells.len();
        let mut row_offset = Vec::with_capacity(rows);
        let mut off = 0;
        for (i, &m) in mu_padded.iter().enumerate() {
            row_offset.push(off);
            off += lambda.part(i) - m;
        }

        let mut shape = SkewShape {
            lambda,
            mu,
            mu_padded,
            n,
            cells,
            row_offset,
            comp_id: Vec::new(),
            components: Vec::new(),
            boundary_se: BoundaryProfile {
                side: Side::Se,
                components: Vec::new(),
                index: HashMap::new(),
            },
            boundary_nw: BoundaryProfile {
                side: Side::Nw,
                components: Vec::new(),
                index: HashMap::new(),
            },
        };
        shape.compute_components();
        shape.boundary_se = shape.compute_boundary(Side::Se);
        shape.boundary_nw = shape.compute_boundary(Side::Nw);
        Ok(shape)
    }

    /// Builds the canonical shape occupying exactly the given cells.
    ///
    /// Empty rows and columns are squeezed out, so this identifies translated
    /// and diagonally slid copies of the same diagram.
    pub fn from_cells(cells: impl IntoIterator<Item = Cell>) -> Result<Self, ShapeError> {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        if cells.is_empty() {
            return Err(ShapeError::MalformedShape("shape has no cells".into()));
        }
        cells.sort_unstable();
        cells.dedup();
        let mut rows: Vec<usize> = cells.iter().map(|c| c.row).collect();
        rows.sort_unstable();
        rows.dedup();
        let mut cols: Vec<usize> = cells.iter().map(|c| c.col).collect();
        cols.sort_unstable();
        cols.dedup();
        let row_of = |r: usize| rows.binary_search(&r).unwrap() + 1;
        let col_of = |c: usize| cols.binary_search(&c).unwrap() + 1;

        let mut lambda = vec![0usize; rows.len()];
        let mut mu = vec![usize::MAX; rows.len()];
        let mut count = vec![0usize; rows.len()];
        for c in &cells {
            let r = row_of(c.row) - 1;
            let k = col_of(c.col);
            lambda[r] = lambda[r].max(k);
            mu[r] = mu[r].min(k - 1);
            count[r] += 1;
        }
        for r in 0..rows.len() {
            if lambda[r] - mu[r] != count[r] {
                return Err(ShapeError::MalformedShape(
                    "rows must be contiguous runs of cells".into(),
                ));
            }
        }
        while mu.last() == Some(&0) {
            mu.pop();
        }
        SkewShape::new(Partition::new(lambda)?, Partition::new(mu)?)
    }

    pub fn lambda(&self) -> &Partition {
        &self.lambda
    }

    pub fn mu(&self) -> &Partition {
        &self.mu
    }

    /// μ_i for each row of λ, padded with zeros.
    pub fn mu_padded(&self) -> &[usize] {
        &self.mu_padded
    }

    pub fn num_cells(&self) -> usize {
        self.n
    }

    pub fn num_rows(&self) -> usize {
        self.lambda.len()
    }

    pub fn num_cols(&self) -> usize {
        self.lambda.part(0)
    }

    /// All cells in (row, col) order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn contains(&self, c: Cell) -> bool {
        c.row >= 1
            && c.row <= self.num_rows()
            && self.mu_padded[c.row - 1] < c.col
            && c.col <= self.lambda.part(c.row - 1)
    }

    /// Dense index of a cell, in (row, col) order.
    pub fn cell_index(&self, c: Cell) -> usize {
        debug_assert!(self.contains(c));
        self.row_offset[c.row - 1] + (c.col - self.mu_padded[c.row - 1] - 1)
    }

    pub fn north_of(&self, c: Cell) -> Option<Cell> {
        c.north().filter(|&d| self.contains(d))
    }

    pub fn west_of(&self, c: Cell) -> Option<Cell> {
        c.west().filter(|&d| self.contains(d))
    }

    pub fn south_of(&self, c: Cell) -> Option<Cell> {
        Some(c.south()).filter(|&d| self.contains(d))
    }

    pub fn east_of(&self, c: Cell) -> Option<Cell> {
        Some(c.east()).filter(|&d| self.contains(d))
    }

    pub fn num_components(&self) -> usize {
        self.components.len()
    }

    /// Connected components under edge adjacency, ordered SW→NE.
    pub fn components(&self) -> &[Vec<Cell>] {
        &self.components
    }

    pub fn component_of(&self, c: Cell) -> usize {
        self.comp_id[self.cell_index(c)]
    }

    pub fn boundary(&self, side: Side) -> &BoundaryProfile {
        match side {
            Side::Se => &self.boundary_se,
            Side::Nw => &self.boundary_nw,
        }
    }

    /// True iff the shape contains the full 2×2 square at `c`.
    fn has_square_at(&self, c: Cell) -> bool {
        self.contains(c)
            && self.contains(c.south())
            && self.contains(c.east())
            && self.contains(c.south().east())
    }

    pub fn has_2x2_square(&self) -> bool {
        self.cells.iter().any(|&c| self.has_square_at(c))
    }

    /// A connected skew shape with no 2×2 square. Exactly the shapes that
    /// admit no cyclic descent map.
    pub fn is_connected_ribbon(&self) -> bool {
        self.num_components() == 1 && !self.has_2x2_square()
    }

    pub fn max_row_len(&self) -> usize {
        (0..self.num_rows())
            .map(|i| self.lambda.part(i) - self.mu_padded[i])
            .max()
            .unwrap_or(0)
    }

    pub fn max_col_len(&self) -> usize {
        (1..=self.num_cols())
            .map(|col| {
                (0..self.num_rows())
                    .filter(|&i| self.mu_padded[i] < col && col <= self.lambda.part(i))
                    .count()
            })
            .max()
            .unwrap_or(0)
    }

    /// Reflection over the NW–SE diagonal: rows become columns.
    pub fn transpose(&self) -> SkewShape {
        SkewShape::from_cells(self.cells.iter().map(|c| Cell::new(c.col, c.row)))
            .expect("transpose of a canonical shape is canonical")
    }

    /// Rotation by 180°.
    pub fn reverse(&self) -> SkewShape {
        let rows = self.num_rows();
        let cols = self.num_cols();
        SkewShape::from_cells(
            self.cells
                .iter()
                .map(|c| Cell::new(rows + 1 - c.row, cols + 1 - c.col)),
        )
        .expect("reverse of a canonical shape is canonical")
    }

    fn compute_components(&mut self) {
        let n = self.n;
        let mut comp_id = vec![usize::MAX; n];
        let mut comps: Vec<Vec<Cell>> = Vec::new();
        for start in 0..n {
            if comp_id[start] != usize::MAX {
                continue;
            }
            let id = comps.len();
            let mut stack = vec![self.cells[start]];
            comp_id[start] = id;
            let mut members = Vec::new();
            while let Some(c) = stack.pop() {
                members.push(c);
                for nb in [
                    self.north_of(c),
                    self.west_of(c),
                    self.south_of(c),
                    self.east_of(c),
                ]
                .into_iter()
                .flatten()
                {
                    let i = self.cell_index(nb);
                    if comp_id[i] == usize::MAX {
                        comp_id[i] = id;
                        stack.push(nb);
                    }
                }
            }
            members.sort_unstable();
            comps.push(members);
        }
        // SW→NE: distinct components of a skew shape are strictly ordered, so
        // sorting by westernmost column suffices.
        let mut order: Vec<usize> = (0..comps.len()).collect();
        order.sort_by_key(|&i| comps[i].iter().map(|c| c.col).min().unwrap());
        let remap: HashMap<usize, usize> = order
            .iter()
            .enumerate()
            .map(|(new, &old)| (old, new))
            .collect();
        self.components = order.iter().map(|&i| std::mem::take(&mut comps[i])).collect();
        self.comp_id = comp_id.into_iter().map(|id| remap[&id]).collect();
    }

    fn compute_boundary(&self, side: Side) -> BoundaryProfile {
        let mut components: Vec<Vec<(Cell, CornerKind)>> = Vec::new();
        for comp in &self.components {
            let mut cells: Vec<Cell> = comp
                .iter()
                .copied()
                .filter(|&c| match side.diagonal(c) {
                    Some(d) => !self.contains(d),
                    None => true,
                })
                .collect();
            // SW→NE ribbon order.
            cells.sort_by(|a, b| a.col.cmp(&b.col).then(b.row.cmp(&a.row)));
            let classified = cells
                .into_iter()
                .map(|c| {
                    let (a, b) = match side {
                        Side::Se => (self.south_of(c), self.east_of(c)),
                        Side::Nw => (self.north_of(c), self.west_of(c)),
                    };
                    let kind = match (a, b) {
                        (Some(_), Some(_)) => CornerKind::Interior,
                        (None, None) => CornerKind::Exterior,
                        _ => CornerKind::Plain,
                    };
                    (c, kind)
                })
                .collect();
            components.push(classified);
        }
        let mut index = HashMap::new();
        for (ci, comp) in components.iter().enumerate() {
            for (pi, &(c, _)) in comp.iter().enumerate() {
                index.insert(c, (ci, pi));
            }
        }
        BoundaryProfile {
            side,
            components,
            index,
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.lambda, self.mu)
    }
}

impl FromStr for SkewShape {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        if s.chars().any(|c| !(c.is_ascii_digit() || c == ',' || c == '/')) {
            return Err(ShapeError::MalformedShape(format!(
                "invalid character in {s:?}; expected LAMBDA\"/\"MU with comma-separated positive integers"
            )));
        }
        let (lam, mu) = s
            .split_once('/')
            .ok_or_else(|| ShapeError::MalformedShape(format!("missing \"/\" in {s:?}")))?;
        if lam.contains('/') || mu.contains('/') {
            return Err(ShapeError::MalformedShape(format!("more than one \"/\" in {s:?}")));
        }
        let parse_parts = |text: &str| -> Result<Vec<usize>, ShapeError> {
            if text.is_empty() {
                return Ok(Vec::new());
            }
            text.split(',')
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| ShapeError::MalformedShape(format!("bad integer {p:?} in {s:?}")))
                })
                .collect()
        };
        let lambda = Partition::new(parse_parts(lam)?)?;
        let mu = Partition::new(parse_parts(mu)?)?;
        SkewShape::new(lambda, mu)
    }
}

/// Canonical form of an arbitrary cell set, for error hints.
fn canonical_hint(cells: impl IntoIterator<Item = Cell>) -> String {
    match SkewShape::from_cells(cells) {
        Ok(s) => s.to_string(),
        Err(_) => "<none>".into(),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ShapeFilter {
    All,
    /// Drop connected ribbons (the shapes with no cyclic descent map).
    NonRibbon,
}

/// All canonical skew shapes with exactly `n` cells, in lexicographic
/// (λ, μ) order.
pub fn enumerate_shapes(n: usize, filter: ShapeFilter) -> Vec<Arc<SkewShape>> {
    assert!(n >= 1, "n must be positive");
    let mut rows: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    fn rec(
        n_left: usize,
        rows: &mut Vec<(usize, usize)>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
        max_b: usize,
        max_a: usize,
    ) {
        if n_left == 0 {
            if rows.last().map(|&(a, _)| a) == Some(0) {
                let lambda: Vec<usize> = rows.iter().map(|&(_, b)| b).collect();
                let mu: Vec<usize> = rows
                    .iter()
                    .map(|&(a, _)| a)
                    .take_while(|&a| a > 0)
                    .collect();
                out.push((lambda, mu));
            }
            return;
        }
        for b in (1..=max_b).rev() {
            // No empty column between this row and the previous one.
            if let Some(&(pa, _)) = rows.last() {
                if pa > b {
                    continue;
                }
            }
            for a in (0..=max_a.min(b - 1)).rev() {
                if b - a > n_left {
                    continue;
                }
                rows.push((a, b));
                rec(n_left - (b - a), rows, out, b, a);
                rows.pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(n, &mut rows, &mut raw, n, n);
    raw.sort();
    for (lambda, mu) in raw {
        let shape = SkewShape::new(
            Partition::new(lambda).expect("enumeration emits valid lambda"),
            Partition::new(mu).expect("enumeration emits valid mu"),
        )
        .expect("enumeration emits canonical shapes");
        if filter == ShapeFilter::NonRibbon && shape.is_connected_ribbon() {
            continue;
        }
        out.push(Arc::new(shape));
    }
    out
}

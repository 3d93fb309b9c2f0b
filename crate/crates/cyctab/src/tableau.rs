//! Standard Young tableaux on skew shapes: validation, enumeration, descent
//! sets, the transpose/reverse symmetries, and text I/O.

use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::shape::{Cell, ShapeError, SkewShape};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TableauError {
    #[error("malformed tableau: {0}")]
    Malformed(String),
    #[error("not standard: entries {first_entry} at {first} and {second_entry} at {second}")]
    NotStandard {
        first: Cell,
        first_entry: usize,
        second: Cell,
        second_entry: usize,
    },
    #[error("shape mismatch: tableau has shape {found}, expected {expected}")]
    ShapeMismatch { expected: String, found: String },
    #[error(transparent)]
    Shape(#[from] ShapeError),
}

/// A set of (possibly cyclic) descents, with elements in `[1..n]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct DescentSet {
    elems: Vec<usize>,
}

impl DescentSet {
    pub fn new(elems: impl IntoIterator<Item = usize>) -> Self {
        let mut elems: Vec<usize> = elems.into_iter().collect();
        elems.sort_unstable();
        elems.dedup();
        DescentSet { elems }
    }

    pub fn empty() -> Self {
        DescentSet::default()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.elems.binary_search(&i).is_ok()
    }

    pub fn insert(&mut self, i: usize) {
        if let Err(pos) = self.elems.binary_search(&i) {
            self.elems.insert(pos, i);
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.elems.iter().copied()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.elems
    }

    /// Adds `d` to every element modulo `n`, with representatives in `[1..n]`.
    pub fn shift_mod(&self, d: usize, n: usize) -> DescentSet {
        DescentSet::new(self.elems.iter().map(|&e| (e - 1 + d) % n + 1))
    }

    /// Restriction to `[1..k]`.
    pub fn restrict(&self, k: usize) -> DescentSet {
        DescentSet {
            elems: self.elems.iter().copied().filter(|&e| e <= k).collect(),
        }
    }
}

impl fmt::Display for DescentSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, e) in self.elems.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symmetry {
    Transpose,
    Reverse,
    ReverseTranspose,
}

/// A standard Young tableau: a bijective filling of a skew shape by `1..n`,
/// increasing along rows (west→east) and columns (north→south).
#[derive(Clone)]
pub struct Tableau {
    shape: Arc<SkewShape>,
    /// Entry at each cell, indexed by the shape's dense cell index.
    entry: Vec<usize>,
    /// Cell index of each entry, indexed by entry − 1.
    pos: Vec<usize>,
}

impl PartialEq for Tableau {
    fn eq(&self, other: &Self) -> bool {
        (Arc::ptr_eq(&self.shape, &other.shape) || self.shape == other.shape)
            && self.entry == other.entry
    }
}

impl Eq for Tableau {}

impl std::hash::Hash for Tableau {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.shape.hash(state);
        self.entry.hash(state);
    }
}

impl Tableau {
    /// Validates and builds a tableau from entries listed in the shape's
    /// (row, col) cell order.
    pub fn from_entries(shape: Arc<SkewShape>, entry: Vec<usize>) -> Result<Self, TableauError> {
        let n = shape.num_cells();
        if entry.len() != n {
            return Err(TableauError::Malformed(format!(
                "expected {n} entries, got {}",
                entry.len()
            )));
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &e) in entry.iter().enumerate() {
            if e < 1 || e > n {
                return Err(TableauError::Malformed(format!(
                    "entry {e} out of range 1..={n}"
                )));
            }
            if pos[e - 1] != usize::MAX {
                return Err(TableauError::Malformed(format!("duplicate entry {e}")));
            }
            pos[e - 1] = i;
        }
        let t = Tableau { shape, entry, pos };
        t.check_standard()?;
        Ok(t)
    }

    /// Internal constructor for operations that preserve standardness.
    pub(crate) fn from_parts_unchecked(shape: Arc<SkewShape>, entry: Vec<usize>) -> Self {
        let mut pos = vec![usize::MAX; entry.len()];
        for (i, &e) in entry.iter().enumerate() {
            pos[e - 1] = i;
        }
        let t = Tableau { shape, entry, pos };
        debug_assert!(t.check_standard().is_ok(), "operation broke standardness");
        t
    }

    fn check_standard(&self) -> Result<(), TableauError> {
        let s = &self.shape;
        for &c in s.cells() {
            let e = self.entry_at(c);
            if let Some(d) = s.east_of(c) {
                if self.entry_at(d) < e {
                    return Err(TableauError::NotStandard {
                        first: c,
                        first_entry: e,
                        second: d,
                        second_entry: self.entry_at(d),
                    });
                }
            }
            if let Some(d) = s.south_of(c) {
                if self.entry_at(d) < e {
                    return Err(TableauError::NotStandard {
                        first: c,
                        first_entry: e,
                        second: d,
                        second_entry: self.entry_at(d),
                    });
                }
            }
        }
        Ok(())
    }

    pub fn shape(&self) -> &Arc<SkewShape> {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.entry.len()
    }

    pub fn entry_at(&self, c: Cell) -> usize {
        self.entry[self.shape.cell_index(c)]
    }

    pub fn get(&self, c: Cell) -> Option<usize> {
        self.shape
            .contains(c)
            .then(|| self.entry[self.shape.cell_index(c)])
    }

    /// Position of entry `e`.
    pub fn position_of(&self, e: usize) -> Cell {
        self.shape.cells()[self.pos[e - 1]]
    }

    pub(crate) fn entries_by_cell(&self) -> &[usize] {
        &self.entry
    }

    /// `i` is a descent iff `i + 1` lies strictly south of `i`.
    pub fn has_descent(&self, i: usize) -> bool {
        debug_assert!((1..self.n()).contains(&i));
        self.position_of(i + 1).row > self.position_of(i).row
    }

    pub fn descent_set(&self) -> DescentSet {
        DescentSet {
            elems: (1..self.n()).filter(|&i| self.has_descent(i)).collect(),
        }
    }

    pub fn symmetry(&self, kind: Symmetry) -> Tableau {
        match kind {
            Symmetry::Transpose => self.transpose(),
            Symmetry::Reverse => self.reverse(),
            Symmetry::ReverseTranspose => self.reverse().transpose(),
        }
    }

    pub fn transpose(&self) -> Tableau {
        let shape = Arc::new(self.shape.transpose());
        let mut entry = vec![0; self.n()];
        for &c in self.shape.cells() {
            entry[shape.cell_index(Cell::new(c.col, c.row))] = self.entry_at(c);
        }
        Tableau::from_parts_unchecked(shape, entry)
    }

    pub fn reverse(&self) -> Tableau {
        let n = self.n();
        let rows = self.shape.num_rows();
        let cols = self.shape.num_cols();
        let shape = Arc::new(self.shape.reverse());
        let mut entry = vec![0; n];
        for &c in self.shape.cells() {
            let d = Cell::new(rows + 1 - c.row, cols + 1 - c.col);
            entry[shape.cell_index(d)] = n + 1 - self.entry_at(c);
        }
        Tableau::from_parts_unchecked(shape, entry)
    }

    /// Entries read row by row, north to south, west to east.
    pub fn row_reading_word(&self) -> &[usize] {
        &self.entry
    }

    /// Entries of one connected component, ascending.
    pub fn component_entries(&self, comp: usize) -> Vec<usize> {
        let mut v: Vec<usize> = self.shape.components()[comp]
            .iter()
            .map(|&c| self.entry_at(c))
            .collect();
        v.sort_unstable();
        v
    }

    /// Parses the row grammar: rows separated by `/`, entries within a row
    /// comma-separated, `.` marking an absent (μ) cell as a row prefix.
    pub fn parse(text: &str, shape: Option<&Arc<SkewShape>>) -> Result<Tableau, TableauError> {
        let mut lambda = Vec::new();
        let mut mu = Vec::new();
        let mut filling: Vec<(usize, Vec<usize>)> = Vec::new();
        for (r, row) in text.split('/').enumerate() {
            if row.is_empty() {
                return Err(TableauError::Malformed(format!("row {} is empty", r + 1)));
            }
            let fields: Vec<&str> = row.split(',').collect();
            let dots = fields.iter().take_while(|f| **f == ".").count();
            let mut entries = Vec::with_capacity(fields.len() - dots);
            for f in &fields[dots..] {
                if *f == "." {
                    return Err(TableauError::Malformed(format!(
                        "absent cells must form a row prefix (row {})",
                        r + 1
                    )));
                }
                let e: usize = f.parse().map_err(|_| {
                    TableauError::Malformed(format!("bad entry {f:?} in row {}", r + 1))
                })?;
                entries.push(e);
            }
            lambda.push(fields.len());
            mu.push(dots);
            filling.push((dots, entries));
        }
        while mu.last() == Some(&0) {
            mu.pop();
        }
        let parsed_shape = SkewShape::new(
            crate::shape::Partition::new(lambda)?,
            crate::shape::Partition::new(mu)?,
        )?;
        let shape = match shape {
            Some(s) => {
                if **s != parsed_shape {
                    return Err(TableauError::ShapeMismatch {
                        expected: s.to_string(),
                        found: parsed_shape.to_string(),
                    });
                }
                Arc::clone(s)
            }
            None => Arc::new(parsed_shape),
        };
        let mut entry = Vec::with_capacity(shape.num_cells());
        for (_, entries) in &filling {
            entry.extend_from_slice(entries);
        }
        Tableau::from_entries(shape, entry)
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = &self.shape;
        for r in 1..=s.num_rows() {
            if r > 1 {
                write!(f, "/")?;
            }
            let mut first = true;
            for c in 1..=s.lambda().part(r - 1) {
                if !first {
                    write!(f, ",")?;
                }
                if c <= s.mu_padded()[r - 1] {
                    write!(f, ".")?;
                } else {
                    write!(f, "{}", self.entry_at(Cell::new(r, c)))?;
                }
                first = false;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tableau({} on {})", self, self.shape)
    }
}

/// All standard Young tableaux of a shape, each exactly once, ordered
/// lexicographically by row-reading word.
///
/// Entries are placed from n down to 1; entry m may occupy any cell that is
/// currently SE-maximal (no still-unfilled southern or eastern neighbor) in
/// the shrinking shape.
pub fn enumerate_syt(shape: &Arc<SkewShape>) -> Vec<Tableau> {
    let n = shape.num_cells();
    let mut remaining = vec![true; n];
    let mut entry = vec![0usize; n];
    let mut out = Vec::new();

    fn rec(
        shape: &Arc<SkewShape>,
        m: usize,
        remaining: &mut Vec<bool>,
        entry: &mut Vec<usize>,
        out: &mut Vec<Tableau>,
    ) {
        if m == 0 {
            out.push(Tableau::from_parts_unchecked(
                Arc::clone(shape),
                entry.clone(),
            ));
            return;
        }
        for i in 0..shape.num_cells() {
            if !remaining[i] {
                continue;
            }
            let c = shape.cells()[i];
            let blocked = [shape.south_of(c), shape.east_of(c)]
                .into_iter()
                .flatten()
                .any(|d| remaining[shape.cell_index(d)]);
            if blocked {
                continue;
            }
            remaining[i] = false;
            entry[i] = m;
            rec(shape, m - 1, remaining, entry, out);
            remaining[i] = true;
        }
    }

    rec(shape, n, &mut remaining, &mut entry, &mut out);
    out.sort_by(|a, b| a.entry.cmp(&b.entry));
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shape::{enumerate_shapes, ShapeFilter};

    pub(crate) fn t(text: &str) -> Tableau {
        Tableau::parse(text, None).unwrap()
    }

    #[test]
    fn parse_and_display() {
        let tab = t(".,2,4/.,3,5/1,6");
        assert_eq!(tab.shape().to_string(), "3,3,2/1,1");
        assert_eq!(tab.to_string(), ".,2,4/.,3,5/1,6");
        assert_eq!(tab.entry_at(Cell::new(3, 1)), 1);
        assert_eq!(tab.position_of(6), Cell::new(3, 2));
    }

    #[test]
    fn parse_with_shape_check() {
        let shape = Arc::new("2,2/".parse::<SkewShape>().unwrap());
        assert!(Tableau::parse("1,2/3,4", Some(&shape)).is_ok());
        let err = Tableau::parse("1,2,3/4,5,6", Some(&shape)).unwrap_err();
        assert!(matches!(err, TableauError::ShapeMismatch { .. }));
    }

    #[test]
    fn parse_rejects_row_decrease() {
        let err = Tableau::parse("2,1", None).unwrap_err();
        match err {
            TableauError::NotStandard { first, second, .. } => {
                assert_eq!((first, second), (Cell::new(1, 1), Cell::new(1, 2)));
            }
            other => panic!("expected NotStandard, got {other:?}"),
        }
    }

    #[test]
    fn parse_rejects_bad_permutation() {
        assert!(matches!(
            Tableau::parse("1,1", None),
            Err(TableauError::Malformed(_))
        ));
        assert!(matches!(
            Tableau::parse("1,3", None),
            Err(TableauError::Malformed(_))
        ));
        assert!(matches!(
            Tableau::parse("1,.,2", None),
            Err(TableauError::Malformed(_))
        ));
    }

    #[test]
    fn descent_sets_from_the_examples() {
        assert_eq!(
            t(".,.,3,5/1,4,7/2,6").descent_set(),
            DescentSet::new([1, 3, 5])
        );
        assert_eq!(
            t(".,.,2,6,8/.,.,3/1,4/5,9/7").descent_set(),
            DescentSet::new([2, 3, 4, 6, 8])
        );
        assert_eq!(t("1,2,3").descent_set(), DescentSet::empty());
    }

    #[test]
    fn symmetry_examples() {
        let tab = t(".,.,2,6,8/.,.,3/1,4/5,9/7");
        let tt = tab.transpose();
        assert_eq!(tt.to_string(), ".,.,1,5,7/.,.,4,9/2,3/6/8");
        assert_eq!(tt.descent_set(), DescentSet::new([1, 5, 7]));
        let tr = tab.reverse();
        assert_eq!(tr.descent_set(), DescentSet::new([1, 3, 5, 6, 7]));
        assert_eq!(tr.to_string(), ".,.,.,.,3/.,.,.,1,5/.,.,.,6,9/.,.,7/2,4,8");
        assert_eq!(tab.transpose().transpose(), tab);
        assert_eq!(tab.reverse().reverse(), tab);
    }

    #[test]
    fn symmetry_descent_relations_exhaustive() {
        for n in 1..=6 {
            for shape in enumerate_shapes(n, ShapeFilter::All) {
                for tab in enumerate_syt(&shape) {
                    let des = tab.descent_set();
                    let tt = tab.transpose();
                    let tr = tab.reverse();
                    for i in 1..n {
                        assert_eq!(tt.has_descent(i), !des.contains(i));
                        assert_eq!(tr.has_descent(i), des.contains(n - i));
                    }
                }
            }
        }
    }

    #[test]
    fn enumerate_counts() {
        let shape = Arc::new("3,3,2/1,1".parse::<SkewShape>().unwrap());
        assert_eq!(enumerate_syt(&shape).len(), 21);
        let shape = Arc::new("2,2/".parse::<SkewShape>().unwrap());
        assert_eq!(enumerate_syt(&shape).len(), 2);
        let shape = Arc::new("1/".parse::<SkewShape>().unwrap());
        assert_eq!(enumerate_syt(&shape).len(), 1);
    }

    #[test]
    fn enumerate_is_sorted_and_distinct() {
        let shape = Arc::new("3,2/".parse::<SkewShape>().unwrap());
        let all = enumerate_syt(&shape);
        for w in all.windows(2) {
            assert!(w[0].row_reading_word() < w[1].row_reading_word());
        }
    }

    #[test]
    fn enumeration_count_invariant_under_symmetry() {
        for n in 1..=6 {
            for shape in enumerate_shapes(n, ShapeFilter::All) {
                let count = enumerate_syt(&shape).len();
                let t_count = enumerate_syt(&Arc::new(shape.transpose())).len();
                let r_count = enumerate_syt(&Arc::new(shape.reverse())).len();
                assert_eq!(count, t_count, "{shape}");
                assert_eq!(count, r_count, "{shape}");
            }
        }
    }

    #[test]
    fn descent_size_bounds_exhaustive() {
        // min |Des| = c − 1 and max |Des| = (n − 1) − (r − 1) over SYT(shape),
        // where c and r are the longest column and row.
        for n in 1..=7 {
            for shape in enumerate_shapes(n, ShapeFilter::All) {
                let sizes: Vec<usize> = enumerate_syt(&shape)
                    .iter()
                    .map(|t| t.descent_set().len())
                    .collect();
                let c = shape.max_col_len();
                let r = shape.max_row_len();
                assert_eq!(*sizes.iter().min().unwrap(), c - 1, "{shape}");
                assert_eq!(*sizes.iter().max().unwrap(), n - r, "{shape}");
            }
        }
    }
}

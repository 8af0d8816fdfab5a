//! Skew shapes `λ/μ` and their box sets.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{parse_partition, Partition};

/// A box `(row, col)` of a diagram, both 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        debug_assert!(row >= 1 && col >= 1);
        Cell { row, col }
    }
}

/// A skew shape `outer/inner` with `inner ⊆ outer`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !inner.is_subpartition_of(&outer) {
            return Err(Error::NotSubpartition {
                inner: inner.to_string(),
                outer: outer.to_string(),
            });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    /// Number of rows of the outer partition (including empty skew rows).
    pub fn num_rows(&self) -> usize {
        self.outer.len()
    }

    pub fn num_cols(&self) -> usize {
        self.outer.part(0)
    }

    /// Columns occupied in row `row` (1-based), as an inclusive range.
    pub fn row_cols(&self, row: usize) -> std::ops::RangeInclusive<usize> {
        (self.inner.part(row - 1) + 1)..=self.outer.part(row - 1)
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.outer.part(row - 1) - self.inner.part(row - 1)
    }

    /// Rows occupied in column `col` (1-based); always contiguous.
    pub fn col_rows(&self, col: usize) -> std::ops::RangeInclusive<usize> {
        let top = (0..self.outer.len())
            .find(|&i| self.inner.part(i) < col && col <= self.outer.part(i))
            .map_or(1, |i| i + 1);
        let count = (0..self.outer.len())
            .filter(|&i| self.inner.part(i) < col && col <= self.outer.part(i))
            .count();
        top..=(top + count - 1)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.row <= self.outer.len()
            && self.inner.part(cell.row - 1) < cell.col
            && cell.col <= self.outer.part(cell.row - 1)
    }

    /// Boxes in row-major order.
    pub fn boxes(&self) -> Vec<Cell> {
        (1..=self.num_rows())
            .flat_map(|r| self.row_cols(r).map(move |c| Cell::new(r, c)))
            .collect()
    }

    /// Height: number of non-empty rows minus one.
    pub fn height(&self) -> Result<usize> {
        let rows = (1..=self.num_rows()).filter(|&r| self.row_len(r) > 0).count();
        rows.checked_sub(1).ok_or(Error::EmptyShape)
    }

    /// Edge-connectivity of the box set. The empty shape counts as connected.
    pub fn is_connected(&self) -> bool {
        let boxes = self.boxes();
        let Some(&first) = boxes.first() else {
            return true;
        };
        let mut seen = BTreeSet::from([first]);
        let mut stack = vec![first];
        while let Some(c) = stack.pop() {
            let mut nbrs = vec![Cell::new(c.row + 1, c.col), Cell::new(c.row, c.col + 1)];
            if c.row > 1 {
                nbrs.push(Cell::new(c.row - 1, c.col));
            }
            if c.col > 1 {
                nbrs.push(Cell::new(c.row, c.col - 1));
            }
            for nb in nbrs {
                if self.contains(nb) && seen.insert(nb) {
                    stack.push(nb);
                }
            }
        }
        seen.len() == boxes.len()
    }

    /// True if four boxes of the shape form a 2×2 square.
    pub fn contains_square(&self) -> bool {
        self.boxes().into_iter().any(|c| {
            self.contains(Cell::new(c.row, c.col + 1))
                && self.contains(Cell::new(c.row + 1, c.col))
                && self.contains(Cell::new(c.row + 1, c.col + 1))
        })
    }

    /// Connected and free of 2×2 squares. The empty shape is not a border strip.
    pub fn is_border_strip(&self) -> bool {
        !self.is_empty() && self.is_connected() && !self.contains_square()
    }

    /// At most one box in each column.
    pub fn is_horizontal_strip(&self) -> bool {
        (0..self.outer.len()).all(|i| self.outer.part(i + 1) <= self.inner.part(i))
    }

    /// At most one box in each row.
    pub fn is_vertical_strip(&self) -> bool {
        (1..=self.num_rows()).all(|r| self.row_len(r) <= 1)
    }

    pub fn conjugate(&self) -> SkewShape {
        SkewShape {
            outer: self.outer.conjugate(),
            inner: self.inner.conjugate(),
        }
    }

    /// Removes empty rows and empty columns. The result has `μ_1 < λ_1` and
    /// `μ_{ℓ(λ)} = 0` unless it is empty.
    pub fn normalize(&self) -> SkewShape {
        self.drop_empty_rows().conjugate().drop_empty_rows().conjugate()
    }

    pub fn is_normalized(&self) -> bool {
        *self == self.normalize()
    }

    fn drop_empty_rows(&self) -> SkewShape {
        let (mut outer, mut inner) = (Vec::new(), Vec::new());
        for i in 0..self.outer.len() {
            if self.outer.part(i) > self.inner.part(i) {
                outer.push(self.outer.part(i));
                inner.push(self.inner.part(i));
            }
        }
        SkewShape {
            outer: Partition::new(outer).expect("rows stay weakly decreasing"),
            inner: Partition::new(inner).expect("rows stay weakly decreasing"),
        }
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}

impl FromStr for SkewShape {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (outer_txt, inner_txt, inner_off) = match s.find('/') {
            Some(i) => (&s[..i], &s[i + 1..], i + 1),
            None => (s, "", s.len()),
        };
        let outer = parse_partition(s, 0, outer_txt)?;
        let inner = parse_partition(s, inner_off, inner_txt)?;
        SkewShape::new(outer, inner)
    }
}

/// All `μ ⊆ λ` with `λ/μ` a border strip of size `n`, paired with the
/// strip's height, in lexicographically decreasing order of `μ`.
///
/// Strips are found through the beta-set of `λ`: removing a strip of size
/// `n` moves one bead from position `b` to the free position `b - n`, and
/// the height is the number of beads strictly between.
pub fn border_strips(la: &Partition, n: usize) -> Vec<(Partition, usize)> {
    if n == 0 {
        return Vec::new();
    }
    let len = la.len();
    let beta: Vec<usize> = (0..len).map(|i| la.part(i) + len - 1 - i).collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < n || beta.contains(&(b - n)) {
            continue;
        }
        let target = b - n;
        let height = beta.iter().filter(|&&x| target < x && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|x, y| y.cmp(x));
        let parts = moved.iter().enumerate().map(|(k, &x)| x - (len - 1 - k)).collect();
        out.push((Partition::new(parts).expect("beta-set decodes to a partition"), height));
    }
    out.sort_by(|a, b| b.0.cmp(&a.0));
    out
}

/// Every normalized skew shape of size `n` (no empty rows or columns), each
/// exactly once. Includes disconnected shapes and straight shapes.
pub fn normalized_skew_shapes(n: usize) -> Vec<SkewShape> {
    // Rows are intervals (a, b] listed top to bottom with a and b weakly
    // decreasing, a < b, and b_{r+1} >= a_r so no column is left empty.
    fn rec(rows: &mut Vec<(usize, usize)>, left: usize, out: &mut Vec<SkewShape>) {
        let &(pa, pb) = rows.last().expect("non-empty");
        if left == 0 {
            if pa == 0 {
                let outer = Partition::new(rows.iter().map(|r| r.1).collect()).unwrap();
                let inner = Partition::new(rows.iter().map(|r| r.0).collect()).unwrap();
                out.push(SkewShape { outer, inner });
            }
            return;
        }
        for b in (pa.max(1)..=pb).rev() {
            for a in (0..=pa.min(b - 1)).rev() {
                if b - a <= left {
                    rows.push((a, b));
                    rec(rows, left - (b - a), out);
                    rows.pop();
                }
            }
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        out.push(SkewShape::straight(Partition::empty()));
        return out;
    }
    // The first row's offset is at most n - 1, since lower rows must cover it.
    for a in (0..n).rev() {
        for len in (1..=n).rev() {
            let mut rows = vec![(a, a + len)];
            rec(&mut rows, n - len, &mut out);
        }
    }
    out
}

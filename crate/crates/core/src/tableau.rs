//! Skew tableaux: fillings of a skew shape by `1..=n`.
//!
//! Text form: rows top to bottom separated by `/`, entries separated by `,`,
//! and boxes of the inner partition written `.`; for example
//! `.,.,5/.,.,7/6,8`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::fault;
use crate::partition::{dominates_unchecked, Composition, Partition};
use crate::perm::Permutation;
use crate::shape::{Cell, SkewShape};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SkewTableau {
    shape: SkewShape,
    // rows[i] holds the entries of row i+1, left to right.
    rows: Vec<Vec<usize>>,
}

/// A tableau with a sign, as produced by column straightening.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedTableau {
    pub tableau: SkewTableau,
    pub sign: i32,
}

impl SkewTableau {
    /// Builds a tableau from its rows; checks row lengths and that the
    /// entries are exactly `1..=n`.
    pub fn new(shape: SkewShape, rows: Vec<Vec<usize>>) -> Result<Self> {
        let mut rows = rows;
        // Trailing rows that are empty in the shape may be omitted.
        while rows.len() < shape.num_rows() && shape.row_len(rows.len() + 1) == 0 {
            rows.push(Vec::new());
        }
        if rows.len() != shape.num_rows() {
            return Err(Error::InvalidTableau(format!(
                "expected {} rows, found {}",
                shape.num_rows(),
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != shape.row_len(i + 1) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {} entries, shape {shape} needs {}",
                    i + 1,
                    row.len(),
                    shape.row_len(i + 1)
                )));
            }
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for &x in rows.iter().flatten() {
            if x == 0 || x > n || seen[x] {
                return Err(Error::InvalidTableau(format!(
                    "entries must be 1..={n} each exactly once"
                )));
            }
            seen[x] = true;
        }
        Ok(SkewTableau { shape, rows })
    }

    pub(crate) fn from_rows_unchecked(shape: SkewShape, rows: Vec<Vec<usize>>) -> Self {
        SkewTableau { shape, rows }
    }

    /// Fills `shape` by reading entries off `f` box by box.
    pub fn from_fn(shape: SkewShape, mut f: impl FnMut(Cell) -> usize) -> Result<Self> {
        let rows = (1..=shape.num_rows())
            .map(|r| shape.row_cols(r).map(|c| f(Cell::new(r, c))).collect())
            .collect();
        SkewTableau::new(shape, rows)
    }

    /// Parses the text form, inferring the shape from the `.` placeholders.
    pub fn parse(text: &str) -> Result<Self> {
        let parsed = parse_rows(text)?;
        let outer: Vec<usize> = parsed.iter().map(|(dots, row)| dots + row.len()).collect();
        let inner: Vec<usize> = parsed.iter().map(|(dots, _)| *dots).collect();
        let outer = Partition::new(outer).map_err(|_| Error::parse(text, 0, "row ends must weakly decrease"))?;
        let inner = Partition::new(inner).map_err(|_| Error::parse(text, 0, "row starts must weakly decrease"))?;
        let shape = SkewShape::new(outer, inner).map_err(|e| Error::parse(text, 0, e.to_string()))?;
        SkewTableau::new(shape, parsed.into_iter().map(|(_, row)| row).collect())
    }

    /// Parses the text form against a known shape. Placeholders may be
    /// omitted; if present they must match the inner shape.
    pub fn parse_in(shape: SkewShape, text: &str) -> Result<Self> {
        let parsed = parse_rows(text)?;
        for (i, (dots, _)) in parsed.iter().enumerate() {
            if *dots != 0 && *dots != shape.inner().part(i) {
                return Err(Error::InvalidTableau(format!(
                    "row {} has {dots} placeholders, shape {shape} needs {}",
                    i + 1,
                    shape.inner().part(i)
                )));
            }
        }
        SkewTableau::new(shape, parsed.into_iter().map(|(_, row)| row).collect())
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, cell: Cell) -> usize {
        let offset = self.shape.inner().part(cell.row - 1);
        self.rows[cell.row - 1][cell.col - offset - 1]
    }

    fn entry_mut(&mut self, cell: Cell) -> &mut usize {
        let offset = self.shape.inner().part(cell.row - 1);
        &mut self.rows[cell.row - 1][cell.col - offset - 1]
    }

    /// Box of each entry: `positions()[x - 1]` holds `x`.
    pub fn positions(&self) -> Vec<Cell> {
        let mut pos = vec![Cell::new(1, 1); self.size()];
        for (i, row) in self.rows.iter().enumerate() {
            let offset = self.shape.inner().part(i);
            for (k, &x) in row.iter().enumerate() {
                pos[x - 1] = Cell::new(i + 1, offset + k + 1);
            }
        }
        pos
    }

    /// Entries of column `col`, top to bottom.
    pub fn column(&self, col: usize) -> Vec<usize> {
        self.shape
            .col_rows(col)
            .filter(|&r| self.shape.contains(Cell::new(r, col)))
            .map(|r| self.entry(Cell::new(r, col)))
            .collect()
    }

    pub fn is_row_standard(&self) -> bool {
        self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    pub fn is_column_standard(&self) -> bool {
        self.shape.boxes().into_iter().all(|c| {
            let below = Cell::new(c.row + 1, c.col);
            !self.shape.contains(below) || self.entry(c) < self.entry(below)
        })
    }

    pub fn is_standard(&self) -> bool {
        self.is_row_standard() && self.is_column_standard()
    }

    /// `t σ`: every entry `x` replaced by `x σ`.
    pub fn apply(&self, sigma: &Permutation) -> Result<SkewTableau> {
        if sigma.degree() != self.size() {
            return Err(Error::DegreeMismatch {
                perm: sigma.degree(),
                expected: self.size(),
            });
        }
        Ok(self.map_entries(|x| sigma.image(x)))
    }

    pub(crate) fn map_entries(&self, f: impl Fn(usize) -> usize) -> SkewTableau {
        SkewTableau {
            shape: self.shape.clone(),
            rows: self.rows.iter().map(|r| r.iter().map(|&x| f(x)).collect()).collect(),
        }
    }

    /// Sorts every column increasingly. The sign is that of the column
    /// permutation carrying `self` to the result, so `e(result) = sign * e(self)`.
    pub fn column_straighten(&self) -> SignedTableau {
        let mut out = self.clone();
        let mut sign = 1;
        for col in 1..=self.shape.num_cols() {
            let cells: Vec<Cell> = self
                .shape
                .col_rows(col)
                .map(|r| Cell::new(r, col))
                .filter(|&c| self.shape.contains(c))
                .collect();
            let mut entries: Vec<usize> = cells.iter().map(|&c| self.entry(c)).collect();
            let inversions = (0..entries.len())
                .flat_map(|i| (i + 1..entries.len()).map(move |j| (i, j)))
                .filter(|&(i, j)| entries[i] > entries[j])
                .count();
            if inversions % 2 == 1 {
                sign = -sign;
            }
            entries.sort_unstable();
            for (c, x) in cells.into_iter().zip(entries) {
                *out.entry_mut(c) = x;
            }
        }
        if fault::column_sign_flipped() {
            sign = -sign;
        }
        SignedTableau { tableau: out, sign }
    }

    /// Sorts every row increasingly.
    pub fn row_straighten(&self) -> SkewTableau {
        let mut out = self.clone();
        for row in &mut out.rows {
            row.sort_unstable();
        }
        out
    }

    /// Column-wise counts of entries `<= m`, over columns `1..=λ_1`.
    pub fn m_shape(&self, m: usize) -> Composition {
        let mut counts = vec![0; self.shape.num_cols()];
        for (cell, x) in self.cells() {
            if x <= m {
                counts[cell.col - 1] += 1;
            }
        }
        Composition::new(counts)
    }

    /// Row-wise counts of entries `<= y`, over rows `1..=ℓ(λ)`.
    pub fn sh_leq(&self, y: usize) -> Composition {
        Composition::new(
            self.rows
                .iter()
                .map(|r| r.iter().filter(|&&x| x <= y).count())
                .collect(),
        )
    }

    /// Dominance order on row-standard tableaux of one shape:
    /// `self ⊵ other` iff `sh_≤y(self) ⊵ sh_≤y(other)` for all `y`.
    pub fn dominates(&self, other: &SkewTableau) -> Result<bool> {
        self.same_shape(other)?;
        Ok((1..=self.size()).all(|y| dominates_unchecked(self.sh_leq(y).parts(), other.sh_leq(y).parts())))
    }

    /// Total order on column-standard tableaux of one shape: `self > other`
    /// iff the greatest entry in different columns lies further right in `self`.
    pub fn column_order_greater(&self, other: &SkewTableau) -> Result<bool> {
        self.same_shape(other)?;
        let (a, b) = (self.positions(), other.positions());
        Ok(a.iter()
            .zip(&b)
            .rev()
            .find(|(p, q)| p.col != q.col)
            .is_some_and(|(p, q)| p.col > q.col))
    }

    /// `x ↦ x⁺`, the relabelling by the cycle `(1, 2, ..., n)`.
    pub fn plus_shift(&self) -> SkewTableau {
        let n = self.size();
        self.map_entries(|x| if x == n { 1 } else { x + 1 })
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = (Cell, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, row)| {
            let offset = self.shape.inner().part(i);
            row.iter()
                .enumerate()
                .map(move |(k, &x)| (Cell::new(i + 1, offset + k + 1), x))
        })
    }

    fn same_shape(&self, other: &SkewTableau) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch(self.shape.to_string(), other.shape.to_string()));
        }
        Ok(())
    }
}

impl fmt::Display for SkewTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("/")?;
            }
            let dots = self.shape.inner().part(i);
            let items = std::iter::repeat_n(".".to_string(), dots).chain(row.iter().map(|x| x.to_string()));
            for (k, item) in items.enumerate() {
                if k > 0 {
                    f.write_str(",")?;
                }
                f.write_str(&item)?;
            }
        }
        Ok(())
    }
}

impl FromStr for SkewTableau {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        SkewTableau::parse(s)
    }
}

/// Rows of the text form as `(placeholder count, entries)`.
fn parse_rows(text: &str) -> Result<Vec<(usize, Vec<usize>)>> {
    let mut out = Vec::new();
    let mut pos = 0;
    for row_txt in text.split('/') {
        let mut dots = 0;
        let mut row = Vec::new();
        let mut p = pos;
        for tok in row_txt.split(',') {
            let lead = tok.len() - tok.trim_start().len();
            let t = tok.trim();
            if t == "." {
                if !row.is_empty() {
                    return Err(Error::parse(text, p + lead, "`.` after an entry"));
                }
                dots += 1;
            } else {
                let v: usize = t
                    .parse()
                    .map_err(|_| Error::parse(text, p + lead, "expected an entry or `.`"))?;
                row.push(v);
            }
            p += tok.len() + 1;
        }
        out.push((dots, row));
        pos += row_txt.len() + 1;
    }
    Ok(out)
}

/// The canonical standard tableau of a border strip: columnar boxes (those
/// with a box directly below) get `1..=z` from the top row down, the
/// remaining boxes get `z+1..=n` from left to right.
///
/// The shape is normalized first, so the result lives on `s.normalize()`.
pub fn canonical_strip_tableau(s: &SkewShape) -> Result<SkewTableau> {
    if !s.is_border_strip() {
        return Err(Error::NotBorderStrip(s.to_string()));
    }
    let shape = s.normalize();
    let boxes = shape.boxes();
    let (mut columnar, mut rest): (Vec<Cell>, Vec<Cell>) =
        boxes.iter().partition(|c| shape.contains(Cell::new(c.row + 1, c.col)));
    columnar.sort_by_key(|c| (c.row, c.col));
    rest.sort_by_key(|c| (c.col, c.row));
    let mut label = std::collections::HashMap::new();
    for (k, c) in columnar.into_iter().chain(rest).enumerate() {
        label.insert(c, k + 1);
    }
    SkewTableau::from_fn(shape, |c| label[&c])
}

/// Standard tableaux of `shape`, each once, ordered lexicographically by the
/// sequence of boxes holding `1, 2, ..., n` (boxes compared row-major).
pub fn standard_tableaux(shape: &SkewShape) -> Vec<SkewTableau> {
    let n = shape.size();
    let boxes = shape.boxes();
    let mut filled: Vec<Vec<usize>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    let mut out = Vec::new();

    fn rec(
        shape: &SkewShape,
        boxes: &[Cell],
        filled: &mut Vec<Vec<usize>>,
        k: usize,
        n: usize,
        out: &mut Vec<SkewTableau>,
    ) {
        if k > n {
            out.push(SkewTableau::from_rows_unchecked(shape.clone(), filled.clone()));
            return;
        }
        let get = |filled: &Vec<Vec<usize>>, c: Cell| filled[c.row - 1][c.col - shape.inner().part(c.row - 1) - 1];
        for &c in boxes {
            if get(filled, c) != 0 {
                continue;
            }
            let left = Cell {
                row: c.row,
                col: c.col - 1,
            };
            let up = Cell {
                row: c.row.wrapping_sub(1),
                col: c.col,
            };
            let ready = |nb: Cell| nb.row == 0 || nb.col == 0 || !shape.contains(nb) || get(filled, nb) != 0;
            if ready(left) && ready(up) {
                let off = shape.inner().part(c.row - 1);
                filled[c.row - 1][c.col - off - 1] = k;
                rec(shape, boxes, filled, k + 1, n, out);
                filled[c.row - 1][c.col - off - 1] = 0;
            }
        }
    }

    rec(shape, &boxes, &mut filled, 1, n, &mut out);
    out
}

/// Number of standard tableaux of `shape`.
pub fn count_standard(shape: &SkewShape) -> usize {
    standard_tableaux(shape).len()
}

/// Every filling whose entries increase along each group of boxes; groups
/// partition the shape's boxes and are listed in increasing order within.
fn increasing_fillings(shape: &SkewShape, groups: &[Vec<Cell>]) -> Vec<SkewTableau> {
    let n = shape.size();
    let mut next = vec![0usize; groups.len()];
    let mut current: Vec<Vec<usize>> = (1..=shape.num_rows()).map(|r| vec![0; shape.row_len(r)]).collect();
    let mut out = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        shape: &SkewShape,
        groups: &[Vec<Cell>],
        next: &mut [usize],
        current: &mut Vec<Vec<usize>>,
        k: usize,
        n: usize,
        out: &mut Vec<SkewTableau>,
    ) {
        if k > n {
            out.push(SkewTableau::from_rows_unchecked(shape.clone(), current.clone()));
            return;
        }
        for g in 0..groups.len() {
            if next[g] < groups[g].len() {
                let c = groups[g][next[g]];
                let off = shape.inner().part(c.row - 1);
                current[c.row - 1][c.col - off - 1] = k;
                next[g] += 1;
                rec(shape, groups, next, current, k + 1, n, out);
                next[g] -= 1;
            }
        }
    }

    rec(shape, groups, &mut next, &mut current, 1, n, &mut out);
    out
}

/// All column-standard fillings of `shape`.
pub fn column_standard_tableaux(shape: &SkewShape) -> Vec<SkewTableau> {
    let groups: Vec<Vec<Cell>> = (1..=shape.num_cols())
        .map(|col| {
            shape
                .col_rows(col)
                .map(|r| Cell::new(r, col))
                .filter(|&c| shape.contains(c))
                .collect()
        })
        .filter(|g: &Vec<Cell>| !g.is_empty())
        .collect();
    increasing_fillings(shape, &groups)
}

/// All row-standard fillings of `shape`.
pub fn row_standard_tableaux(shape: &SkewShape) -> Vec<SkewTableau> {
    let groups: Vec<Vec<Cell>> = (1..=shape.num_rows())
        .map(|r| shape.row_cols(r).map(|c| Cell::new(r, c)).collect())
        .filter(|g: &Vec<Cell>| !g.is_empty())
        .collect();
    increasing_fillings(shape, &groups)
}

//! The permutation module on tabloids, polytabloids, Garnir relations, and
//! the straightening engine that expresses any polytabloid in the standard
//! basis of a skew Specht module.
//!
//! Straightening works on column-standard tableaux. If `t` is not standard,
//! take the row-major first box `(i, j)` with `(i,j)t > (i,j+1)t`, let `X` be
//! the entries of column `j` weakly below it and `Y` the entries of column
//! `j+1` weakly above `(i, j+1)`, and rewrite
//!
//! ```text
//! e(t) = - Σ_{σ ∈ C_{X,Y}} sgn(σ) e(tσ)
//! ```
//!
//! Each `tσ`, once its columns are sorted, is strictly larger than `t` in the
//! column order, so the recursion terminates.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::num::NonZeroUsize;
use std::sync::Arc;

use lru::LruCache;
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::shape::{Cell, SkewShape};
use crate::tableau::{standard_tableaux, SkewTableau};

/// Row assignment of each entry: `word[x - 1]` is the (1-based) row of `x`.
type RowWord = Vec<u8>;

/// Equivalence class of tableaux under row permutations.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tabloid {
    shape: SkewShape,
    word: RowWord,
}

impl Tabloid {
    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    /// Row sets, one per row of the shape.
    pub fn rows(&self) -> Vec<BTreeSet<usize>> {
        let mut rows = vec![BTreeSet::new(); self.shape.num_rows()];
        for (x, &r) in self.word.iter().enumerate() {
            rows[r as usize - 1].insert(x + 1);
        }
        rows
    }

    /// `{t}σ = {tσ}`.
    pub fn act(&self, sigma: &Permutation) -> Result<Tabloid> {
        if sigma.degree() != self.word.len() {
            return Err(Error::DegreeMismatch {
                perm: sigma.degree(),
                expected: self.word.len(),
            });
        }
        Ok(Tabloid {
            shape: self.shape.clone(),
            word: act_word(&self.word, sigma),
        })
    }
}

fn act_word(word: &[u8], sigma: &Permutation) -> RowWord {
    let mut out = vec![0; word.len()];
    for (x, &r) in word.iter().enumerate() {
        out[sigma.image0(x)] = r;
    }
    out
}

fn row_word(t: &SkewTableau) -> RowWord {
    let mut word = vec![0u8; t.size()];
    for (i, row) in t.rows().iter().enumerate() {
        let r = u8::try_from(i + 1).expect("at most 255 rows");
        for &x in row {
            word[x - 1] = r;
        }
    }
    word
}

pub fn tabloid_of(t: &SkewTableau) -> Tabloid {
    Tabloid {
        shape: t.shape().clone(),
        word: row_word(t),
    }
}

impl fmt::Display for Tabloid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, row) in self.rows().iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            let items: Vec<String> = row.iter().map(usize::to_string).collect();
            f.write_str(&items.join(","))?;
        }
        f.write_str("}")
    }
}

/// An element of the permutation module on tabloids, with integer
/// coefficients. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TabloidVector {
    shape: SkewShape,
    terms: BTreeMap<RowWord, BigInt>,
}

impl TabloidVector {
    pub fn zero(shape: SkewShape) -> Self {
        TabloidVector {
            shape,
            terms: BTreeMap::new(),
        }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, tabloid: &Tabloid) -> BigInt {
        self.terms.get(&tabloid.word).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Tabloid, &BigInt)> + '_ {
        self.terms.iter().map(|(w, c)| {
            (
                Tabloid {
                    shape: self.shape.clone(),
                    word: w.clone(),
                },
                c,
            )
        })
    }

    fn add_word(&mut self, word: RowWord, coeff: &BigInt) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += coeff;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += coeff * other`.
    pub fn add_scaled(&mut self, other: &TabloidVector, coeff: &BigInt) {
        for (w, c) in &other.terms {
            self.add_word(w.clone(), &(c * coeff));
        }
    }

    /// The permutation action on every tabloid.
    pub fn act(&self, sigma: &Permutation) -> Result<TabloidVector> {
        if sigma.degree() != self.shape.size() {
            return Err(Error::DegreeMismatch {
                perm: sigma.degree(),
                expected: self.shape.size(),
            });
        }
        Ok(TabloidVector {
            shape: self.shape.clone(),
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (act_word(w, sigma), c.clone()))
                .collect(),
        })
    }
}

/// Arrangements of `0..len` with their signs.
fn signed_arrangements(len: usize) -> Vec<(Vec<usize>, i32)> {
    let mut out = Vec::new();
    fn rec(cur: &mut Vec<usize>, k: usize, sign: i32, out: &mut Vec<(Vec<usize>, i32)>) {
        if k == cur.len() {
            out.push((cur.clone(), sign));
            return;
        }
        for i in k..cur.len() {
            cur.swap(k, i);
            rec(cur, k + 1, if i == k { sign } else { -sign }, out);
            cur.swap(k, i);
        }
    }
    rec(&mut (0..len).collect(), 0, 1, &mut out);
    out
}

/// `e(t) = Σ_{σ ∈ C(t)} sgn(σ) {tσ}`, computed by permuting the entries of
/// every column in all ways.
pub fn polytabloid(t: &SkewTableau) -> TabloidVector {
    let shape = t.shape().clone();
    let columns: Vec<(Vec<usize>, Vec<u8>)> = (1..=shape.num_cols())
        .map(|col| {
            let rows: Vec<usize> = shape
                .col_rows(col)
                .filter(|&r| shape.contains(Cell::new(r, col)))
                .collect();
            let entries: Vec<usize> = rows.iter().map(|&r| t.entry(Cell::new(r, col))).collect();
            (entries, rows.iter().map(|&r| r as u8).collect())
        })
        .filter(|(e, _)| !e.is_empty())
        .collect();
    let arrangements: Vec<Vec<(Vec<usize>, i32)>> = columns.iter().map(|(e, _)| signed_arrangements(e.len())).collect();

    let mut out = TabloidVector::zero(shape);
    let mut word = vec![0u8; t.size()];
    fn rec(
        columns: &[(Vec<usize>, Vec<u8>)],
        arrangements: &[Vec<(Vec<usize>, i32)>],
        c: usize,
        sign: i32,
        word: &mut RowWord,
        out: &mut TabloidVector,
    ) {
        if c == columns.len() {
            out.add_word(word.clone(), &BigInt::from(sign));
            return;
        }
        let (entries, rows) = &columns[c];
        for (arr, s) in &arrangements[c] {
            for (k, &src) in arr.iter().enumerate() {
                word[entries[src] - 1] = rows[k];
            }
            rec(columns, arrangements, c + 1, sign * s, word, out);
        }
    }
    rec(&columns, &arrangements, 0, 1, &mut word, &mut out);
    out
}

/// Coordinates in the standard polytabloid basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpechtVector {
    shape: SkewShape,
    terms: HashMap<SkewTableau, BigInt>,
}

impl SpechtVector {
    pub fn zero(shape: SkewShape) -> Self {
        SpechtVector {
            shape,
            terms: HashMap::new(),
        }
    }

    /// The basis vector `e(t)` of a standard tableau.
    pub fn basis(t: SkewTableau) -> Result<Self> {
        if !t.is_standard() {
            return Err(Error::InvalidTableau(format!("{t} is not standard")));
        }
        let shape = t.shape().clone();
        Ok(SpechtVector {
            shape,
            terms: HashMap::from([(t, BigInt::one())]),
        })
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn coefficient(&self, t: &SkewTableau) -> BigInt {
        self.terms.get(t).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero terms in the enumeration order of [`standard_tableaux`].
    pub fn terms(&self) -> Vec<(&SkewTableau, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by_cached_key(|(t, _)| t.positions());
        v
    }

    fn add_term(&mut self, t: &SkewTableau, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(t.clone()).or_default();
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(t);
        }
    }

    pub fn add_scaled(&mut self, other: &SpechtVector, coeff: &BigInt) {
        for (t, c) in &other.terms {
            self.add_term(t, c * coeff);
        }
    }

    /// `v σ`, re-expressed in the standard basis.
    pub fn act(&self, sigma: &Permutation, engine: &mut Straightener) -> Result<SpechtVector> {
        if sigma.degree() != self.shape.size() {
            return Err(Error::DegreeMismatch {
                perm: sigma.degree(),
                expected: self.shape.size(),
            });
        }
        let mut out = SpechtVector::zero(self.shape.clone());
        for (t, c) in &self.terms {
            out.add_scaled(&engine.straighten(&t.apply(sigma)?), c);
        }
        Ok(out)
    }
}

/// Expands a standard-basis vector into tabloid coordinates.
pub fn expand(v: &SpechtVector) -> TabloidVector {
    let mut out = TabloidVector::zero(v.shape.clone());
    for (t, c) in v.terms() {
        out.add_scaled(&polytabloid(t), c);
    }
    out
}

/// The sets `X`, `Y` of a Garnir relation and the signed coset
/// representatives `C_{X,Y}` (the identity excluded).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GarnirData {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub swaps: Vec<(Permutation, i32)>,
}

fn subsets(items: &[usize], k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (i, &first) in items.iter().enumerate() {
        for mut rest in subsets(&items[i + 1..], k - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Pairs `(x_1,y_1)...(x_k,y_k)` over all `k >= 1`, with `x`s and `y`s increasing.
fn garnir_swaps(x: &[usize], y: &[usize]) -> Vec<(Vec<(usize, usize)>, i32)> {
    let mut out = Vec::new();
    for k in 1..=x.len().min(y.len()) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        for xs in subsets(x, k) {
            for ys in subsets(y, k) {
                out.push((xs.iter().copied().zip(ys.iter().copied()).collect(), sign));
            }
        }
    }
    out
}

fn garnir_sets(t: &SkewTableau, cell: Cell) -> Result<(Vec<usize>, Vec<usize>)> {
    let shape = t.shape();
    let right = Cell::new(cell.row, cell.col + 1);
    if !shape.contains(cell) || !shape.contains(right) {
        return Err(Error::InvalidBox {
            row: cell.row,
            col: cell.col,
            msg: format!(
                "boxes ({},{}) and ({},{}) must both lie in {shape}",
                cell.row, cell.col, right.row, right.col
            ),
        });
    }
    let mut x: Vec<usize> = shape
        .col_rows(cell.col)
        .filter(|&r| r >= cell.row)
        .map(|r| t.entry(Cell::new(r, cell.col)))
        .collect();
    let mut y: Vec<usize> = shape
        .col_rows(right.col)
        .filter(|&r| r <= cell.row)
        .map(|r| t.entry(Cell::new(r, right.col)))
        .collect();
    x.sort_unstable();
    y.sort_unstable();
    Ok((x, y))
}

pub fn garnir_data(t: &SkewTableau, cell: Cell) -> Result<GarnirData> {
    let (x, y) = garnir_sets(t, cell)?;
    let n = t.size();
    let swaps = garnir_swaps(&x, &y)
        .into_iter()
        .map(|(pairs, sign)| {
            let mut images: Vec<usize> = (1..=n).collect();
            for (a, b) in pairs {
                images.swap(a - 1, b - 1);
            }
            (
                Permutation::from_images(&images).expect("disjoint transpositions"),
                sign,
            )
        })
        .collect();
    Ok(GarnirData { x, y, swaps })
}

/// `e(t) G_{X,Y}` in tabloid coordinates; zero for every valid box.
pub fn garnir_relation(t: &SkewTableau, cell: Cell) -> Result<TabloidVector> {
    let data = garnir_data(t, cell)?;
    let mut out = polytabloid(t);
    for (sigma, sign) in &data.swaps {
        out.add_scaled(&polytabloid(&t.apply(sigma)?), &BigInt::from(*sign));
    }
    Ok(out)
}

fn swap_entries(t: &SkewTableau, pairs: &[(usize, usize)]) -> SkewTableau {
    t.map_entries(|v| {
        for &(a, b) in pairs {
            if v == a {
                return b;
            }
            if v == b {
                return a;
            }
        }
        v
    })
}

type Expansion = Arc<[(SkewTableau, BigInt)]>;

/// Straightening with a least-recently-used memo of column-standard
/// tableaux. Not shared between threads; give each worker its own.
pub struct Straightener {
    cache: LruCache<SkewTableau, Expansion>,
}

impl Default for Straightener {
    fn default() -> Self {
        Self::new()
    }
}

impl Straightener {
    pub const DEFAULT_CAPACITY: usize = 1 << 16;

    pub fn new() -> Self {
        Self::with_capacity(Self::DEFAULT_CAPACITY)
    }

    pub fn with_capacity(capacity: usize) -> Self {
        Straightener {
            cache: LruCache::new(NonZeroUsize::new(capacity.max(1)).unwrap()),
        }
    }

    /// Coefficients `c_s` with `e(t) = Σ c_s e(s)` over standard `s`.
    pub fn straighten(&mut self, t: &SkewTableau) -> SpechtVector {
        let signed = t.column_straighten();
        let expansion = self.straighten_column_standard(&signed.tableau);
        let sign = BigInt::from(signed.sign);
        let mut out = SpechtVector::zero(t.shape().clone());
        for (s, c) in expansion.iter() {
            out.add_term(s, c * &sign);
        }
        out
    }

    fn straighten_column_standard(&mut self, t: &SkewTableau) -> Expansion {
        if let Some(hit) = self.cache.get(t) {
            return hit.clone();
        }
        let result: Expansion = match row_descent(t) {
            None => Arc::from(vec![(t.clone(), BigInt::one())]),
            Some(cell) => {
                let (x, y) = garnir_sets(t, cell).expect("descent box has a right neighbour");
                let mut acc: HashMap<SkewTableau, BigInt> = HashMap::new();
                for (pairs, sign) in garnir_swaps(&x, &y) {
                    let moved = swap_entries(t, &pairs).column_straighten();
                    // e(t) = -Σ sgn(σ) e(tσ) and e(tσ) = ε e(sorted)
                    let factor = BigInt::from(-sign * moved.sign);
                    for (s, c) in self.straighten_column_standard(&moved.tableau).iter() {
                        *acc.entry(s.clone()).or_default() += c * &factor;
                    }
                }
                acc.into_iter().filter(|(_, c)| !c.is_zero()).collect::<Vec<_>>().into()
            }
        };
        self.cache.put(t.clone(), result.clone());
        result
    }
}

/// Row-major first box `(i, j)` with `(i,j)t > (i,j+1)t`.
fn row_descent(t: &SkewTableau) -> Option<Cell> {
    let inner = t.shape().inner();
    t.rows().iter().enumerate().find_map(|(i, row)| {
        row.windows(2)
            .position(|w| w[0] > w[1])
            .map(|k| Cell::new(i + 1, inner.part(i) + k + 1))
    })
}

/// Straightens with a fresh engine.
pub fn straighten(t: &SkewTableau) -> SpechtVector {
    Straightener::new().straighten(t)
}

/// Number of standard tableaux, the rank of the skew Specht module.
pub fn dimension(shape: &SkewShape) -> usize {
    standard_tableaux(shape).len()
}

/// Matrix of a permutation in the standard basis. Row `t` holds the
/// coefficients of `e(t)σ`, so `M(στ) = M(σ) M(τ)` for "σ then τ".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepresentingMatrix {
    pub basis: Vec<SkewTableau>,
    pub entries: Vec<Vec<BigInt>>,
}

impl RepresentingMatrix {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn trace(&self) -> BigInt {
        (0..self.dim()).map(|i| &self.entries[i][i]).sum()
    }

    pub fn diagonal(&self) -> Vec<BigInt> {
        (0..self.dim()).map(|i| self.entries[i][i].clone()).collect()
    }

    pub fn mul(&self, other: &RepresentingMatrix) -> RepresentingMatrix {
        let d = self.dim();
        let entries = (0..d)
            .map(|i| {
                (0..d)
                    .map(|j| (0..d).map(|k| &self.entries[i][k] * &other.entries[k][j]).sum())
                    .collect()
            })
            .collect();
        RepresentingMatrix {
            basis: self.basis.clone(),
            entries,
        }
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(i, row)| {
            row.iter()
                .enumerate()
                .all(|(j, v)| if i == j { v.is_one() } else { v.is_zero() })
        })
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.entries.iter().flatten().map(|v| v.abs()).max().unwrap_or_default()
    }
}

/// The matrix of `sigma` acting on the skew Specht module of `shape`.
/// Rows are computed in parallel, one straightening engine per worker.
pub fn representing_matrix(shape: &SkewShape, sigma: &Permutation) -> Result<RepresentingMatrix> {
    if sigma.degree() != shape.size() {
        return Err(Error::DegreeMismatch {
            perm: sigma.degree(),
            expected: shape.size(),
        });
    }
    let basis = standard_tableaux(shape);
    let index: HashMap<&SkewTableau, usize> = basis.iter().enumerate().map(|(i, t)| (t, i)).collect();
    let entries = basis
        .par_iter()
        .map_init(Straightener::new, |engine, t| {
            let image = engine.straighten(&t.apply(sigma).expect("degree checked"));
            let mut row = vec![BigInt::zero(); basis.len()];
            for (s, c) in image.terms {
                row[index[&s]] = c;
            }
            row
        })
        .collect();
    Ok(RepresentingMatrix { basis, entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> SkewTableau {
        s.parse().unwrap()
    }

    fn shape(s: &str) -> SkewShape {
        s.parse().unwrap()
    }

    #[test]
    fn tabloid_equality_ignores_row_order() {
        assert_eq!(tabloid_of(&t("1,2/3")), tabloid_of(&t("2,1/3")));
        assert_ne!(tabloid_of(&t("1,3/2")), tabloid_of(&t("1,2/3")));
        let x = t(".,1,2/3,4");
        let s = Permutation::from_cycles_with_degree("(1,3,2)", 4).unwrap();
        assert_eq!(tabloid_of(&x.apply(&s).unwrap()), tabloid_of(&x).act(&s).unwrap());
    }

    #[test]
    fn single_column_tabloids_are_distinct() {
        let col = t("1/2/3/4");
        let mut seen = BTreeSet::new();
        for (arr, _) in signed_arrangements(4) {
            let p = Permutation::from_images(&arr.iter().map(|a| a + 1).collect::<Vec<_>>()).unwrap();
            seen.insert(tabloid_of(&col.apply(&p).unwrap()));
        }
        assert_eq!(seen.len(), 24);
    }

    #[test]
    fn polytabloid_small_cases() {
        let row = polytabloid(&t("2,1,3"));
        assert_eq!(row.len(), 1);
        assert_eq!(row.coefficient(&tabloid_of(&t("1,2,3"))), BigInt::one());

        let col = polytabloid(&t("1/2"));
        assert_eq!(col.len(), 2);
        assert_eq!(col.coefficient(&tabloid_of(&t("1/2"))), BigInt::one());
        assert_eq!(col.coefficient(&tabloid_of(&t("2/1"))), -BigInt::one());

        let x = t("1,3,5/2,4/6");
        assert_eq!(polytabloid(&x).len(), 6 * 2);
    }

    #[test]
    fn polytabloid_column_group_sign() {
        let x = t("1,3,5/2,4/6");
        let tau = Permutation::from_cycles_with_degree("(1,6)(3,4)", 6).unwrap();
        let lhs = polytabloid(&x).act(&tau).unwrap();
        let mut rhs = TabloidVector::zero(x.shape().clone());
        rhs.add_scaled(&polytabloid(&x), &BigInt::from(tau.sign()));
        assert_eq!(lhs, rhs);
        // e(t)σ = e(tσ)
        let s = Permutation::from_cycles_with_degree("(2,5,6)", 6).unwrap();
        assert_eq!(polytabloid(&x).act(&s).unwrap(), polytabloid(&x.apply(&s).unwrap()));
    }

    #[test]
    fn garnir_data_of_example() {
        let ut = t("1,2,5/4,3,7/6,8");
        let d = garnir_data(&ut, Cell::new(2, 1)).unwrap();
        assert_eq!(d.x, vec![4, 6]);
        assert_eq!(d.y, vec![2, 3]);
        assert_eq!(d.swaps.len(), 5);
        assert_eq!(d.swaps.iter().filter(|(_, s)| *s == 1).count(), 1);
        assert!(garnir_relation(&ut, Cell::new(2, 1)).unwrap().is_zero());
        assert!(garnir_data(&ut, Cell::new(3, 2)).is_err());
    }

    #[test]
    fn single_swap_garnir() {
        let x = t(".,1,2/3,4");
        let d = garnir_data(&x, Cell::new(1, 2)).unwrap();
        assert_eq!((d.x.as_slice(), d.y.as_slice()), (&[1, 4][..], &[2][..]));
        assert_eq!(d.swaps.len(), 2);
        assert!(d.swaps.iter().all(|(_, s)| *s == -1));
        assert!(garnir_relation(&x, Cell::new(1, 2)).unwrap().is_zero());
    }

    #[test]
    fn straighten_standard_is_identity() {
        let x = t("1,3,5/2,4/6");
        let v = straighten(&x);
        assert_eq!(v.len(), 1);
        assert_eq!(v.coefficient(&x), BigInt::one());
    }

    #[test]
    fn straighten_garnir_example() {
        let v = straighten(&t("1,2,5/4,3,7/6,8"));
        let got: Vec<(String, i64)> = v
            .terms()
            .into_iter()
            .map(|(s, c)| (s.to_string(), i64::try_from(c).unwrap()))
            .collect();
        let mut expected = vec![
            ("1,3,5/2,4,7/6,8".to_string(), -1),
            ("1,2,5/3,4,7/6,8".to_string(), 1),
            ("1,3,5/2,6,7/4,8".to_string(), 1),
            ("1,2,5/3,6,7/4,8".to_string(), -1),
            ("1,4,5/2,6,7/3,8".to_string(), -1),
        ];
        expected.sort_by_key(|(s, _)| t(s).positions());
        assert_eq!(got, expected);
        assert_eq!(expand(&v), polytabloid(&t("1,2,5/4,3,7/6,8")));
    }

    #[test]
    fn expand_basics() {
        let x = t("1,3/2");
        assert!(expand(&SpechtVector::zero(x.shape().clone())).is_zero());
        assert_eq!(expand(&SpechtVector::basis(x.clone()).unwrap()), polytabloid(&x));
        assert!(SpechtVector::basis(t("2,1/3")).is_err());
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&shape("6")), 1);
        assert_eq!(dimension(&shape("2,2")), 2);
        assert_eq!(dimension(&shape("2,1,1/1")), 3);
    }

    #[test]
    fn identity_matrix() {
        let m = representing_matrix(&shape("3,2/1"), &Permutation::identity(4)).unwrap();
        assert!(m.is_identity());
        assert!(representing_matrix(&shape("3,2/1"), &Permutation::identity(5)).is_err());
    }

    #[test]
    fn act_module_laws() {
        let mut engine = Straightener::new();
        let s = shape("3,2");
        let a = Permutation::from_cycles_with_degree("(1,4)(2,5,3)", 5).unwrap();
        let b = Permutation::from_cycles_with_degree("(1,2,3,4,5)", 5).unwrap();
        for basis in standard_tableaux(&s) {
            let v = SpechtVector::basis(basis).unwrap();
            assert_eq!(v.act(&Permutation::identity(5), &mut engine).unwrap(), v);
            let lhs = v.act(&a, &mut engine).unwrap().act(&b, &mut engine).unwrap();
            let rhs = v.act(&a.then(&b).unwrap(), &mut engine).unwrap();
            assert_eq!(lhs, rhs);
            assert_eq!(expand(&v.act(&a, &mut engine).unwrap()), expand(&v).act(&a).unwrap());
        }
    }

    #[test]
    fn tiny_cache_gives_same_answers() {
        let x = t("4,3,1/6,5,2/8,7");
        let mut small = Straightener::with_capacity(2);
        assert_eq!(small.straighten(&x), straighten(&x));
    }
}

//! Brute-force oracles that share no code path with the straightening
//! engine: linear algebra over Q in tabloid coordinates, hook lengths, and
//! direct enumeration of fillings.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use specht_core::tableau::column_standard_tableaux;
use specht_core::{
    dimension, normalized_skew_shapes, partitions_of, polytabloid, representing_matrix, standard_tableaux, Partition,
    Permutation, SkewShape, SkewTableau, TabloidVector,
};

/// Dense rows over Q with one column per tabloid seen so far.
struct Coords {
    index: BTreeMap<String, usize>,
}

impl Coords {
    fn new() -> Self {
        Coords { index: BTreeMap::new() }
    }

    fn vector(&mut self, v: &TabloidVector) -> BTreeMap<usize, BigRational> {
        v.terms()
            .map(|(tab, c)| {
                let next = self.index.len();
                let k = *self.index.entry(tab.to_string()).or_insert(next);
                (k, BigRational::from_integer(c.clone()))
            })
            .collect()
    }
}

fn dense(rows: &[BTreeMap<usize, BigRational>], width: usize) -> Vec<Vec<BigRational>> {
    rows.iter()
        .map(|r| {
            (0..width)
                .map(|k| r.get(&k).cloned().unwrap_or_else(BigRational::zero))
                .collect()
        })
        .collect()
}

fn rank(mut m: Vec<Vec<BigRational>>) -> usize {
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let pivot = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = &row[c] / &pivot[c];
                for (x, y) in row.iter_mut().zip(&pivot).skip(c) {
                    *x -= &f * y;
                }
            }
        }
        r += 1;
    }
    r
}

/// Coordinates of `target` in the basis `basis` (rows), by Gauss-Jordan on
/// the augmented transpose. Panics if `target` is outside the span.
fn solve(basis: &[Vec<BigRational>], target: &[BigRational]) -> Vec<BigRational> {
    let d = basis.len();
    let w = target.len();
    let mut a: Vec<Vec<BigRational>> = (0..w)
        .map(|k| basis.iter().map(|b| b[k].clone()).chain([target[k].clone()]).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..d {
        let p = (r..w).find(|&i| !a[i][c].is_zero()).expect("basis is independent");
        a.swap(r, p);
        let inv = BigRational::one() / &a[r][c];
        let pivot: Vec<BigRational> = a[r].iter().map(|x| x * &inv).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r {
                row.clone_from(&pivot);
            } else if !row[c].is_zero() {
                let f = row[c].clone();
                for (x, y) in row.iter_mut().zip(&pivot) {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(r);
        r += 1;
    }
    assert!(a[r..].iter().all(|row| row[d].is_zero()), "target outside the span");
    pivots.iter().map(|&i| a[i][d].clone()).collect()
}

#[test]
fn standard_polytabloids_are_independent_and_span() {
    for n in 1..=6 {
        for s in normalized_skew_shapes(n) {
            let basis = standard_tableaux(&s);
            let mut coords = Coords::new();
            let mut rows: Vec<_> = basis.iter().map(|t| coords.vector(&polytabloid(t))).collect();
            let k = basis.len();
            // every column-standard polytabloid lies in the standard span
            rows.extend(
                column_standard_tableaux(&s)
                    .iter()
                    .map(|t| coords.vector(&polytabloid(t))),
            );
            let width = coords.index.len();
            assert_eq!(rank(dense(&rows[..k], width)), k, "{s}");
            assert_eq!(rank(dense(&rows, width)), k, "{s}");
        }
    }
}

#[test]
fn matrices_match_linear_algebra() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 1..=5 {
        for s in normalized_skew_shapes(n) {
            let basis = standard_tableaux(&s);
            let mut images: Vec<usize> = (1..=n).collect();
            images.shuffle(&mut rng);
            let sigma = Permutation::from_images(&images).unwrap();
            let m = representing_matrix(&s, &sigma).unwrap();

            let mut coords = Coords::new();
            let base_rows: Vec<_> = basis.iter().map(|t| coords.vector(&polytabloid(t))).collect();
            let moved: Vec<_> = basis
                .iter()
                .map(|t| coords.vector(&polytabloid(&t.apply(&sigma).unwrap())))
                .collect();
            let width = coords.index.len();
            let b = dense(&base_rows, width);
            for (i, target) in dense(&moved, width).iter().enumerate() {
                let expected: Vec<BigRational> = m.entries[i].iter().cloned().map(BigRational::from_integer).collect();
                assert_eq!(solve(&b, target), expected, "{s} row {i} under {sigma}");
            }
        }
    }
}

#[test]
fn matrices_compose() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for s in normalized_skew_shapes(5).into_iter().step_by(3) {
        let mut a: Vec<usize> = (1..=5).collect();
        let mut b = a.clone();
        a.shuffle(&mut rng);
        b.shuffle(&mut rng);
        let (a, b) = (
            Permutation::from_images(&a).unwrap(),
            Permutation::from_images(&b).unwrap(),
        );
        let ab = a.then(&b).unwrap();
        let lhs = representing_matrix(&s, &ab).unwrap();
        let rhs = representing_matrix(&s, &a)
            .unwrap()
            .mul(&representing_matrix(&s, &b).unwrap());
        assert_eq!(lhs, rhs, "{s}");
        assert!(representing_matrix(&s, &Permutation::identity(5))
            .unwrap()
            .is_identity());
    }
}

fn hook_length_dimension(la: &Partition) -> BigInt {
    let conj = la.conjugate();
    let n = la.size();
    let mut num = BigInt::one();
    for k in 1..=n {
        num *= k;
    }
    let mut den = BigInt::one();
    for (i, &row) in la.parts().iter().enumerate() {
        for j in 0..row {
            den *= row - j + conj.part(j) - i - 1;
        }
    }
    num / den
}

#[test]
fn dimensions_match_hook_lengths() {
    for n in 0..=9 {
        for la in partitions_of(n) {
            let d = dimension(&SkewShape::straight(la.clone()));
            assert_eq!(BigInt::from(d), hook_length_dimension(&la), "{la}");
        }
    }
}

/// All bijective fillings, filtered for standardness.
fn brute_standard_count(s: &SkewShape) -> usize {
    fn perms(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
        if k == items.len() {
            out.push(items.clone());
            return;
        }
        for i in k..items.len() {
            items.swap(k, i);
            perms(items, k + 1, out);
            items.swap(k, i);
        }
    }
    let mut all = Vec::new();
    perms(&mut (1..=s.size()).collect(), 0, &mut all);
    all.into_iter()
        .filter(|fill| {
            let mut it = fill.iter().copied();
            SkewTableau::from_fn(s.clone(), |_| it.next().unwrap())
                .unwrap()
                .is_standard()
        })
        .count()
}

#[test]
fn skew_dimensions_by_enumeration() {
    assert_eq!(dimension(&"2,1,1/1".parse().unwrap()), 3);
    for n in 1..=6 {
        for s in normalized_skew_shapes(n) {
            assert_eq!(dimension(&s), brute_standard_count(&s), "{s}");
        }
    }
}

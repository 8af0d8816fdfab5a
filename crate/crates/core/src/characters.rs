//! Characters of symmetric groups, two ways: border-strip recursion and
//! traces of representing matrices on (skew) Specht modules.

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::perm::Permutation;
use crate::shape::{border_strips, SkewShape};
use crate::specht::{representing_matrix, Straightener};
use crate::tableau::standard_tableaux;

pub(crate) fn sign_of_height(h: usize) -> BigInt {
    if h.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

/// Border-strip evaluator with a memo keyed by `(λ, remaining cycle type)`.
/// The memo is shared behind a lock, so one evaluator can serve parallel
/// table rows.
#[derive(Default)]
pub struct MnEvaluator {
    memo: Mutex<HashMap<(Partition, Partition), BigInt>>,
}

impl MnEvaluator {
    pub fn new() -> Self {
        Self::default()
    }

    /// `χ^λ` at a permutation of the given cycle type.
    pub fn value(&self, la: &Partition, cycle_type: &Partition) -> Result<BigInt> {
        if la.size() != cycle_type.size() {
            return Err(Error::SizeMismatch {
                left: la.size(),
                right: cycle_type.size(),
            });
        }
        Ok(self.eval(la, cycle_type))
    }

    // Peels the largest cycle first.
    fn eval(&self, la: &Partition, rest: &Partition) -> BigInt {
        if rest.is_empty() {
            return BigInt::one();
        }
        let key = (la.clone(), rest.clone());
        if let Some(v) = self.memo.lock().unwrap().get(&key) {
            return v.clone();
        }
        let tail = Partition::new(rest.parts()[1..].to_vec()).expect("suffix of a partition");
        let value = border_strips(la, rest.part(0))
            .into_iter()
            .map(|(mu, h)| sign_of_height(h) * self.eval(&mu, &tail))
            .sum::<BigInt>();
        self.memo.lock().unwrap().insert(key, value.clone());
        value
    }

    pub fn memo_len(&self) -> usize {
        self.memo.lock().unwrap().len()
    }
}

/// `χ^λ(σ)` for `σ` of the given cycle type.
pub fn mn_char(la: &Partition, cycle_type: &Partition) -> Result<BigInt> {
    MnEvaluator::new().value(la, cycle_type)
}

/// Border-strip recursion peeling cycles in the given order (no memo).
pub fn mn_char_peeling(la: &Partition, order: &[usize]) -> Result<BigInt> {
    let total: usize = order.iter().sum();
    if la.size() != total {
        return Err(Error::SizeMismatch {
            left: la.size(),
            right: total,
        });
    }
    fn rec(la: &Partition, order: &[usize]) -> BigInt {
        match order.split_first() {
            None => BigInt::one(),
            Some((&k, rest)) => border_strips(la, k)
                .into_iter()
                .map(|(mu, h)| sign_of_height(h) * rec(&mu, rest))
                .sum(),
        }
    }
    Ok(rec(la, order))
}

/// Value of a skew character at a full cycle: `(-1)^ht` on border strips,
/// zero otherwise.
pub fn skew_char_ncycle(s: &SkewShape) -> Result<BigInt> {
    if s.is_empty() {
        return Err(Error::EmptyShape);
    }
    if s.is_border_strip() {
        Ok(sign_of_height(s.height()?))
    } else {
        Ok(BigInt::zero())
    }
}

/// Trace of the matrix of `sigma` in the standard basis of the skew Specht
/// module (after removing empty rows and columns).
pub fn skew_char_trace(s: &SkewShape, sigma: &Permutation) -> Result<BigInt> {
    if sigma.degree() != s.size() {
        return Err(Error::DegreeMismatch {
            perm: sigma.degree(),
            expected: s.size(),
        });
    }
    Ok(representing_matrix(&s.normalize(), sigma)?.trace())
}

/// Trace computed with a caller-supplied engine, without building the matrix.
pub(crate) fn trace_with(engine: &mut Straightener, s: &SkewShape, sigma: &Permutation) -> BigInt {
    let shape = s.normalize();
    standard_tableaux(&shape)
        .iter()
        .map(|t| {
            engine
                .straighten(&t.apply(sigma).expect("degree checked"))
                .coefficient(t)
        })
        .sum()
}

/// A function on the cycle types of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassFunction {
    n: usize,
    values: BTreeMap<Partition, BigInt>,
}

impl ClassFunction {
    pub fn from_fn(n: usize, mut f: impl FnMut(&Partition) -> BigInt) -> Self {
        ClassFunction {
            n,
            values: partitions_of(n)
                .map(|c| {
                    let v = f(&c);
                    (c, v)
                })
                .collect(),
        }
    }

    pub fn trivial(n: usize) -> Self {
        Self::from_fn(n, |_| BigInt::one())
    }

    /// The sign character, `(-1)^{n - ℓ(c)}`.
    pub fn sign(n: usize) -> Self {
        Self::from_fn(n, |c| sign_of_height(n - c.len()))
    }

    /// The irreducible character `χ^λ`, by border strips.
    pub fn irreducible(la: &Partition) -> Self {
        let eval = MnEvaluator::new();
        Self::from_fn(la.size(), |c| eval.eval(la, c))
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn value(&self, cycle_type: &Partition) -> Option<&BigInt> {
        self.values.get(cycle_type)
    }

    pub fn values(&self) -> &BTreeMap<Partition, BigInt> {
        &self.values
    }

    /// Pointwise product, e.g. `χ × sgn`.
    pub fn product(&self, other: &ClassFunction) -> Result<ClassFunction> {
        self.same_degree(other)?;
        Ok(ClassFunction {
            n: self.n,
            values: self
                .values
                .iter()
                .map(|(c, v)| (c.clone(), v * &other.values[c]))
                .collect(),
        })
    }

    fn same_degree(&self, other: &ClassFunction) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }
}

/// `⟨f, g⟩ = Σ_c f(c) g(c) / z_c`, exact.
pub fn inner_product(f: &ClassFunction, g: &ClassFunction) -> Result<BigRational> {
    f.same_degree(g)?;
    Ok(f.values
        .iter()
        .map(|(c, v)| {
            let z = BigInt::from_biguint(Sign::Plus, c.centralizer_order());
            BigRational::new(v * &g.values[c], z)
        })
        .sum())
}

/// The skew character `χ^{λ/μ}`, one trace per cycle type at the canonical
/// class representative.
pub fn skew_char(s: &SkewShape) -> ClassFunction {
    let n = s.size();
    let classes: Vec<Partition> = partitions_of(n).collect();
    let values: Vec<BigInt> = classes
        .par_iter()
        .map_init(Straightener::new, |engine, c| {
            trace_with(engine, s, &Permutation::class_representative(c))
        })
        .collect();
    ClassFunction {
        n,
        values: classes.into_iter().zip(values).collect(),
    }
}

/// Character table of `S_n`: rows labelled by partitions in
/// reverse-lexicographic order, columns by cycle types from `1^n` up to `(n)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacterTable {
    pub n: usize,
    pub labels: Vec<Partition>,
    pub classes: Vec<Partition>,
    pub values: Vec<Vec<BigInt>>,
}

/// Which engine fills the table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    BorderStrips,
    Trace,
}

pub fn char_table(n: usize) -> CharacterTable {
    char_table_with(n, Method::BorderStrips)
}

pub fn char_table_with(n: usize, method: Method) -> CharacterTable {
    let labels: Vec<Partition> = partitions_of(n).collect();
    let mut classes = labels.clone();
    classes.reverse();
    let values = match method {
        Method::BorderStrips => {
            let eval = MnEvaluator::new();
            labels
                .par_iter()
                .map(|la| classes.iter().map(|c| eval.eval(la, c)).collect())
                .collect()
        }
        Method::Trace => labels
            .par_iter()
            .map_init(Straightener::new, |engine, la| {
                let s = SkewShape::straight(la.clone());
                classes
                    .iter()
                    .map(|c| trace_with(engine, &s, &Permutation::class_representative(c)))
                    .collect()
            })
            .collect(),
    };
    CharacterTable {
        n,
        labels,
        classes,
        values,
    }
}

impl CharacterTable {
    pub fn value(&self, la: &Partition, cycle_type: &Partition) -> Option<&BigInt> {
        let i = self.labels.iter().position(|l| l == la)?;
        let j = self.classes.iter().position(|c| c == cycle_type)?;
        Some(&self.values[i][j])
    }

    pub fn row(&self, la: &Partition) -> Option<ClassFunction> {
        let i = self.labels.iter().position(|l| l == la)?;
        Some(ClassFunction {
            n: self.n,
            values: self
                .classes
                .iter()
                .cloned()
                .zip(self.values[i].iter().cloned())
                .collect(),
        })
    }

    fn centralizers(&self) -> Vec<BigInt> {
        self.classes
            .iter()
            .map(|c| BigInt::from_biguint(Sign::Plus, c.centralizer_order()))
            .collect()
    }

    /// `Σ_c χ^λ(c) χ^κ(c) / z_c = δ_{λκ}` for all pairs, exactly. Checked
    /// as `Σ_c (n!/z_c) χ^λ(c) χ^κ(c) = δ_{λκ} n!` to stay in integers.
    pub fn rows_orthonormal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let order: BigInt = (1..=self.n).map(BigInt::from).product();
        let weights: Vec<BigInt> = self.centralizers().iter().map(|z| &order / z).collect();
        let k = self.labels.len();
        (0..k).into_par_iter().all(|a| {
            let weighted: Vec<BigInt> = self.values[a].iter().zip(&weights).map(|(v, w)| v * w).collect();
            (a..k).all(|b| {
                let s: BigInt = weighted.iter().zip(&self.values[b]).map(|(x, y)| x * y).sum();
                s == if a == b { order.clone() } else { BigInt::zero() }
            })
        })
    }

    /// `Σ_λ χ^λ(c) χ^λ(d) = δ_{cd} z_c`.
    pub fn columns_orthogonal(&self) -> bool {
        if !self.is_square() {
            return false;
        }
        let z = self.centralizers();
        let m = self.classes.len();
        (0..m).into_par_iter().all(|c| {
            (0..m).all(|d| {
                let s: BigInt = self.values.iter().map(|row| &row[c] * &row[d]).sum();
                s == if c == d { z[c].clone() } else { BigInt::zero() }
            })
        })
    }

    /// Square, with positive degrees in the identity column.
    pub fn is_square(&self) -> bool {
        self.labels.len() == self.classes.len()
            && self.values.len() == self.labels.len()
            && self.values.iter().all(|r| r.len() == self.classes.len())
            && self
                .classes
                .first()
                .is_some_and(|c| c.parts().iter().all(|&p| p == 1) || self.n == 0)
            && self.values.iter().all(|r| r.first().is_some_and(|v| v.is_positive()))
    }
}

/// One failed instance of the restriction identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionMismatch {
    pub alpha: Partition,
    pub beta: Partition,
    pub restricted: BigInt,
    pub summed: BigInt,
}

/// Compares `χ^λ(αβ)` against `Σ_μ χ^μ(α) χ^{λ/μ}(β)` over all cycle types
/// `α ⊢ m`, `β ⊢ n`, and returns every disagreement.
pub fn restriction_mismatches(la: &Partition, m: usize, n: usize) -> Result<Vec<RestrictionMismatch>> {
    if la.size() != m + n {
        return Err(Error::SizeMismatch {
            left: la.size(),
            right: m + n,
        });
    }
    let eval = MnEvaluator::new();
    let pieces: Vec<(Partition, ClassFunction)> = la
        .subpartitions_of_size(m)
        .into_iter()
        .map(|mu| {
            let skew = skew_char(&SkewShape::new(la.clone(), mu.clone()).expect("subpartition"));
            (mu, skew)
        })
        .collect();
    let mut out = Vec::new();
    for alpha in partitions_of(m) {
        for beta in partitions_of(n) {
            let restricted = eval.eval(la, &alpha.join(&beta));
            let summed: BigInt = pieces
                .iter()
                .map(|(mu, skew)| eval.eval(mu, &alpha) * &skew.values[&beta])
                .sum();
            if restricted != summed {
                out.push(RestrictionMismatch {
                    alpha: alpha.clone(),
                    beta: beta.clone(),
                    restricted,
                    summed,
                });
            }
        }
    }
    Ok(out)
}

/// The restriction of `χ^λ` to `S_m × S_n` decomposes as `Σ_μ χ^μ × χ^{λ/μ}`.
pub fn restriction_check(la: &Partition, m: usize, n: usize) -> Result<bool> {
    Ok(restriction_mismatches(la, m, n)?.is_empty())
}

fn multiplicity(la: &Partition, mu: &Partition, against: impl Fn(usize) -> ClassFunction) -> Result<u64> {
    let shape = SkewShape::new(la.clone(), mu.clone())?;
    let skew = skew_char(&shape);
    let ip = inner_product(&skew, &against(shape.size()))?;
    if !ip.is_integer() || ip.is_negative() {
        return Err(Error::NonIntegral(ip.to_string()));
    }
    ip.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NonIntegral(ip.to_string()))
}

/// `⟨χ^{λ/μ}, sgn⟩`.
pub fn pieri_multiplicity(la: &Partition, mu: &Partition) -> Result<u64> {
    multiplicity(la, mu, ClassFunction::sign)
}

/// `⟨χ^{λ/μ}, 1⟩`.
pub fn young_multiplicity(la: &Partition, mu: &Partition) -> Result<u64> {
    multiplicity(la, mu, ClassFunction::trivial)
}

//! Integer partitions and compositions.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. Trailing zeros are
/// never stored, so `Partition::default()` is the partition of 0.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping trailing zero parts.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(format!("{parts:?}")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary parts into a partition (zeros dropped).
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based); zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().take_while(|&&p| p >= j).count())
                .collect(),
        )
    }

    /// `self ⊆ other` in the containment order on Young diagrams.
    pub fn is_subpartition_of(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `(n - l, 1^l)`.
    pub fn hook(n: usize, leg: usize) -> Partition {
        assert!(leg < n, "hook leg must be smaller than n");
        let mut parts = vec![n - leg];
        parts.extend(std::iter::repeat_n(1, leg));
        Partition(parts)
    }

    pub fn is_hook(&self) -> bool {
        self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// Multiplicity of each part value, as `(value, count)` in decreasing value.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Order of the centralizer of a permutation with this cycle type:
    /// the product of `i^m_i * m_i!` over part values `i`.
    pub fn centralizer_order(&self) -> BigUint {
        let mut z = BigUint::one();
        for (value, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= BigUint::from(value) * BigUint::from(k);
            }
        }
        z
    }

    /// Union of two cycle types, sorted.
    pub fn join(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_unsorted(parts)
    }

    /// All subpartitions of `self` of the given size, in lexicographically
    /// decreasing order.
    pub fn subpartitions_of_size(&self, size: usize) -> Vec<Partition> {
        fn rec(outer: &[usize], row: usize, cap: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if left == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            if row >= outer.len() {
                return;
            }
            let max = cap.min(outer[row]).min(left);
            for v in (1..=max).rev() {
                cur.push(v);
                rec(outer, row + 1, v, left - v, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if size <= self.size() {
            rec(&self.0, 0, usize::MAX, size, &mut Vec::new(), &mut out);
        }
        out
    }

    /// Every subpartition of `self`, all sizes.
    pub fn subpartitions(&self) -> Vec<Partition> {
        (0..=self.size()).flat_map(|k| self.subpartitions_of_size(k)).collect()
    }

    pub fn as_composition(&self) -> Composition {
        Composition(self.0.clone())
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("-");
        }
        write_joined(f, &self.0)
    }
}

pub(crate) fn write_joined(f: &mut fmt::Formatter<'_>, parts: &[usize]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

/// Comma-separated naturals starting at byte `offset` of `full`, each with
/// its position; errors are reported relative to `full`.
fn parse_positioned(full: &str, offset: usize, text: &str) -> Result<Vec<(usize, usize)>> {
    let trimmed = text.trim();
    if trimmed.is_empty() || trimmed == "-" {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut pos = offset;
    for piece in text.split(',') {
        let lead = piece.len() - piece.trim_start().len();
        let tok = piece.trim();
        match tok.parse::<usize>() {
            Ok(v) => out.push((pos + lead, v)),
            Err(_) => return Err(Error::parse(full, pos + lead, "expected a natural number")),
        }
        pos += piece.len() + 1;
    }
    Ok(out)
}

/// Parses a partition embedded at byte `offset` of `full`.
pub(crate) fn parse_partition(full: &str, offset: usize, text: &str) -> Result<Partition> {
    let parts = parse_positioned(full, offset, text)?;
    if let Some(&(pos, _)) = parts.iter().find(|(_, v)| *v == 0) {
        return Err(Error::parse(full, pos, "partition parts must be positive"));
    }
    if let Some(w) = parts.windows(2).find(|w| w[0].1 < w[1].1) {
        return Err(Error::parse(full, w[1].0, "parts must be weakly decreasing"));
    }
    Partition::new(parts.into_iter().map(|(_, v)| v).collect())
}

impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_partition(s, 0, s)
    }
}

/// A finite sequence of non-negative integers.
///
/// `len()` is the index of the last nonzero part, so trailing zeros do not
/// affect comparisons.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Composition(pub Vec<usize>);

impl Composition {
    pub fn new(parts: Vec<usize>) -> Self {
        Composition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Dominance order: `self ⊵ other`.
    pub fn dominates(&self, other: &Composition) -> Result<bool> {
        if self.size() != other.size() {
            return Err(Error::SizeMismatch {
                left: self.size(),
                right: other.size(),
            });
        }
        Ok(dominates_unchecked(&self.0, &other.0))
    }
}

pub(crate) fn dominates_unchecked(d: &[usize], g: &[usize]) -> bool {
    let len = |c: &[usize]| c.iter().rposition(|&p| p != 0).map_or(0, |i| i + 1);
    let ld = len(d);
    if ld > len(g) {
        return false;
    }
    let (mut sd, mut sg) = (0usize, 0usize);
    for k in 0..ld {
        sd += d.get(k).copied().unwrap_or(0);
        sg += g.get(k).copied().unwrap_or(0);
        if sd < sg {
            return false;
        }
    }
    true
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        write_joined(f, &self.0)?;
        write!(f, ")")
    }
}

/// Partitions of `n` in reverse-lexicographic order: `(n)` first, `(1^n)` last.
pub fn partitions_of(n: usize) -> PartitionIter {
    PartitionIter {
        next: Some(if n == 0 { Vec::new() } else { vec![n] }),
    }
}

#[derive(Debug, Clone)]
pub struct PartitionIter {
    next: Option<Vec<usize>>,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        // Successor: decrement the last part exceeding 1 and refill greedily.
        if let Some(k) = cur.iter().rposition(|&p| p > 1) {
            let mut succ = cur[..k].to_vec();
            let v = cur[k] - 1;
            let mut rest: usize = cur[k..].iter().sum();
            while rest > 0 {
                let take = v.min(rest);
                succ.push(take);
                rest -= take;
            }
            self.next = Some(succ);
        }
        Some(Partition(cur))
    }
}

//! Permutations of `{1, ..., n}` acting on the right.
//!
//! `a.then(&b)` is the permutation "apply `a`, then `b`", matching the right
//! action `x(ab) = (xa)b` used for tableaux.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based images: images[i] = (i+1)σ - 1.
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// From 1-based images `[1σ, 2σ, ..., nσ]`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::with_capacity(n);
        for &x in images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::InvalidTableau(format!(
                    "{images:?} is not a permutation of 1..{n}"
                )));
            }
            seen[x - 1] = true;
            out.push(x - 1);
        }
        Ok(Permutation { images: out })
    }

    /// The `n`-cycle `(1, 2, ..., n)`.
    pub fn long_cycle(n: usize) -> Self {
        Permutation {
            images: (0..n).map(|i| (i + 1) % n.max(1)).collect(),
        }
    }

    /// Transposition `(a, b)` in degree `n` (1-based).
    pub fn transposition(n: usize, a: usize, b: usize) -> Self {
        let mut p = Self::identity(n);
        p.images.swap(a - 1, b - 1);
        p
    }

    /// Cycles on consecutive blocks of integers, one per part, in the
    /// partition's (decreasing) order: `(5,5,2) -> (1..5)(6..10)(11,12)`.
    pub fn class_representative(cycle_type: &Partition) -> Self {
        let n = cycle_type.size();
        let mut images = Vec::with_capacity(n);
        let mut start = 0;
        for &len in cycle_type.parts() {
            for k in 0..len {
                images.push(start + (k + 1) % len);
            }
            start += len;
        }
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of `x` (1-based).
    pub fn image(&self, x: usize) -> usize {
        self.images[x - 1] + 1
    }

    pub(crate) fn image0(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Apply `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                perm: other.degree(),
                expected: self.degree(),
            });
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Permutation { images: inv }
    }

    /// Same permutation viewed in degree `n >= degree()`, fixing the new points.
    pub fn extended(&self, n: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.degree()..n.max(self.degree()));
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles (1-based), fixed points included, each starting at its
    /// least element, ordered by that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x + 1);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i32 {
        let cycles = self.cycles().len();
        if (self.degree() - cycles).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Parses cycle notation such as `(1,2)(3,4,5)`. The degree is the largest
    /// entry mentioned; `()` is the identity of degree 0.
    pub fn from_cycles(text: &str) -> Result<Permutation> {
        Self::from_cycles_with_degree(text, 0)
    }

    /// As [`Permutation::from_cycles`], padded to at least degree `n`.
    pub fn from_cycles_with_degree(text: &str, n: usize) -> Result<Permutation> {
        let cycles = parse_cycles(text)?;
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let degree = max.max(n);
        let mut images: Vec<usize> = (0..degree).collect();
        for cycle in &cycles {
            for (k, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Permutation { images })
    }
}

fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    let mut cycles = Vec::new();
    let mut used = std::collections::HashSet::new();
    let skip_ws = |pos: &mut usize| {
        while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
            *pos += 1;
        }
    };
    skip_ws(&mut pos);
    if pos == bytes.len() {
        return Err(Error::parse(text, 0, "empty permutation; write `()` for the identity"));
    }
    while pos < bytes.len() {
        if bytes[pos] != b'(' {
            return Err(Error::parse(text, pos, "expected `(`"));
        }
        pos += 1;
        let mut cycle = Vec::new();
        loop {
            skip_ws(&mut pos);
            if pos >= bytes.len() {
                return Err(Error::parse(text, pos, "unclosed cycle"));
            }
            if bytes[pos] == b')' && cycle.is_empty() {
                pos += 1;
                break;
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let value: usize = text[start..pos]
                .parse()
                .map_err(|_| Error::parse(text, start, "expected a positive integer"))?;
            if value == 0 {
                return Err(Error::parse(text, start, "entries are 1-based"));
            }
            if !used.insert(value) {
                return Err(Error::parse(text, start, "entry repeated"));
            }
            cycle.push(value);
            skip_ws(&mut pos);
            match bytes.get(pos) {
                Some(b',') => pos += 1,
                Some(b')') => {
                    pos += 1;
                    break;
                }
                _ => return Err(Error::parse(text, pos, "expected `,` or `)`")),
            }
        }
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        skip_ws(&mut pos);
    }
    Ok(cycles)
}

impl FromStr for Permutation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Permutation::from_cycles(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            crate::partition::write_joined(f, &c)?;
            f.write_str(")")?;
        }
        Ok(())
    }
}

//! 321-avoiding permutations and their correspondence with Dyck words.
//!
//! The correspondence reads a permutation left to right. A left-to-right
//! maximum `m_j` (previous maximum `m_{j-1}`, with `m_0 = 0`) writes
//! `N^(m_j - m_{j-1}) E`; any other position writes a single `E`. Under it
//! left-to-right maxima become the rise set, blocks become returns and the
//! last descent of the inverse becomes `ldr`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::enumerate::enumerate_dyck;
use crate::word::{DyckWord, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("cannot parse {0:?} as a permutation entry")]
    BadEntry(String),
    #[error("values are not a rearrangement of 1..{0}")]
    NotAPermutation(usize),
    #[error("permutation contains the pattern 321")]
    ContainsPattern321,
}

/// One-line notation, values `1..=n`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn new(values: Vec<usize>) -> Result<Self, PermError> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation(values))
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n).collect())
    }

    pub fn values(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// No `i < j < k` with `p(i) > p(j) > p(k)`.
    ///
    /// Linear scan: a permutation avoids 321 iff the entries that are not
    /// left-to-right maxima form an increasing sequence.
    pub fn is_321_avoiding(&self) -> bool {
        let mut max = 0;
        let mut last_small = 0;
        for &v in &self.0 {
            if v > max {
                max = v;
            } else {
                if v < last_small {
                    return false;
                }
                last_small = v;
            }
        }
        true
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.0 {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    /// Space- or comma-separated values, e.g. `"2 3 1"` or `"2,3,1"`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let values = s
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| PermError::BadEntry(t.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Permutation::new(values)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermStats {
    /// Positions (1-based) of left-to-right maxima.
    pub lrmax: Vec<usize>,
    pub blocks: usize,
    pub ldes: usize,
    pub ldes_inverse: usize,
}

pub fn lrmax(p: &Permutation) -> Vec<usize> {
    let mut max = 0;
    let mut out = Vec::new();
    for (i, &v) in p.values().iter().enumerate() {
        if v > max {
            max = v;
            out.push(i + 1);
        }
    }
    out
}

/// Number of `i` with `{p(1), ..., p(i)} = {1, ..., i}`.
pub fn blocks(p: &Permutation) -> usize {
    let mut max = 0;
    p.values()
        .iter()
        .enumerate()
        .filter(|&(i, &v)| {
            max = max.max(v);
            max == i + 1
        })
        .count()
}

/// Largest `i` with `p(i) > p(i + 1)`, or 0.
pub fn ldes(p: &Permutation) -> usize {
    p.values()
        .windows(2)
        .rposition(|w| w[0] > w[1])
        .map_or(0, |i| i + 1)
}

pub fn perm_stats(p: &Permutation) -> PermStats {
    PermStats {
        lrmax: lrmax(p),
        blocks: blocks(p),
        ldes: ldes(p),
        ldes_inverse: ldes(&p.inverse()),
    }
}

pub fn to_dyck(p: &Permutation) -> Result<DyckWord, PermError> {
    if !p.is_321_avoiding() {
        return Err(PermError::ContainsPattern321);
    }
    let mut steps = Vec::with_capacity(2 * p.len());
    let mut max = 0;
    for &v in p.values() {
        if v > max {
            steps.extend(std::iter::repeat_n(Step::North, v - max));
            max = v;
        }
        steps.push(Step::East);
    }
    Ok(DyckWord::from_steps_unchecked(steps))
}

pub fn from_dyck(word: &DyckWord) -> Permutation {
    let n = word.semilength();
    let mut values = vec![0; n];
    let mut used = vec![false; n + 1];
    let (mut x, mut y) = (0, 0);
    let mut steps = word.steps().iter().peekable();
    while let Some(&s) = steps.next() {
        match s {
            Step::North => {
                y += 1;
                if steps.peek() == Some(&&Step::East) {
                    values[x] = y;
                    used[y] = true;
                }
            }
            Step::East => x += 1,
        }
    }
    let mut free = (1..=n).filter(|&v| !used[v]);
    for v in values.iter_mut().filter(|v| **v == 0) {
        *v = free
            .next()
            .expect("one free value per non-maximum position");
    }
    Permutation(values)
}

/// All 321-avoiding permutations of size `n`, in the order of
/// [`enumerate_dyck`].
pub fn enumerate_avoiders(n: usize) -> impl Iterator<Item = Permutation> {
    enumerate_dyck(n).map(|w| from_dyck(&w))
}

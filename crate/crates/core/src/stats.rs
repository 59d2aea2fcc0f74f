//! Per-path statistics.

use crate::word::{DyckWord, Step};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StatProfile {
    pub semilength: usize,
    /// East steps ending on the diagonal.
    pub returns: usize,
    /// y-coordinate of the point between the last two consecutive north
    /// steps, or 0.
    pub ldr: usize,
    /// x-coordinate of the point between the first two consecutive east
    /// steps, or `semilength` when there is no double fall.
    pub fdf: usize,
    /// Sorted set of `x + 1` over the x-coordinates of north steps.
    pub rises: Vec<usize>,
    /// Lengths of the maximal north runs in path order.
    pub rise_composition: Vec<usize>,
}

impl StatProfile {
    pub fn of(word: &DyckWord) -> StatProfile {
        compute_stats(word)
    }
}

pub fn compute_stats(word: &DyckWord) -> StatProfile {
    let steps = word.steps();
    let n = word.semilength();
    StatProfile {
        semilength: n,
        returns: returns(steps),
        ldr: ldr(steps),
        fdf: fdf(steps),
        rises: rises(steps),
        rise_composition: north_runs(steps),
    }
}

pub fn returns(steps: &[Step]) -> usize {
    let mut height = 0i64;
    let mut count = 0;
    for &s in steps {
        match s {
            Step::North => height += 1,
            Step::East => {
                height -= 1;
                if height == 0 {
                    count += 1;
                }
            }
        }
    }
    count
}

pub fn ldr(steps: &[Step]) -> usize {
    let Some(i) = steps
        .windows(2)
        .rposition(|w| w[0] == Step::North && w[1] == Step::North)
    else {
        return 0;
    };
    steps[..=i].iter().filter(|&&s| s == Step::North).count()
}

pub fn fdf(steps: &[Step]) -> usize {
    match steps
        .windows(2)
        .position(|w| w[0] == Step::East && w[1] == Step::East)
    {
        Some(i) => steps[..=i].iter().filter(|&&s| s == Step::East).count(),
        None => steps.len() / 2,
    }
}

pub fn rises(steps: &[Step]) -> Vec<usize> {
    let mut x = 0;
    let mut out: Vec<usize> = Vec::new();
    for &s in steps {
        match s {
            Step::North => {
                if out.last() != Some(&(x + 1)) {
                    out.push(x + 1);
                }
            }
            Step::East => x += 1,
        }
    }
    out
}

pub fn north_runs(steps: &[Step]) -> Vec<usize> {
    let mut runs = Vec::new();
    let mut current = 0;
    for &s in steps {
        match s {
            Step::North => current += 1,
            Step::East if current > 0 => {
                runs.push(current);
                current = 0;
            }
            Step::East => {}
        }
    }
    if current > 0 {
        runs.push(current);
    }
    runs
}

/// Composition of `n` given by consecutive differences of `rises ∪ {n + 1}`.
pub fn rise_set_composition(rises: &[usize], n: usize) -> Vec<usize> {
    rises
        .iter()
        .zip(rises.iter().skip(1).chain(std::iter::once(&(n + 1))))
        .map(|(a, b)| b - a)
        .collect()
}

/// Inverse of [`rise_set_composition`].
pub fn rises_from_composition(parts: &[usize]) -> Vec<usize> {
    parts
        .iter()
        .scan(1, |next, &p| {
            let here = *next;
            *next += p;
            Some(here)
        })
        .collect()
}

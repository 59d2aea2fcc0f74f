//! Prime factorizations of Dyck words and of non-negative excursions.

use thiserror::Error;

use crate::word::{DyckWord, Step};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FactorError {
    #[error("step {position} goes below the starting level")]
    NegativeExcursion { position: usize },
}

/// Splits a Dyck word at each return to the diagonal.
pub fn prime_components(word: &DyckWord) -> Vec<DyckWord> {
    let steps = word.steps();
    let mut out = Vec::new();
    let mut start = 0;
    let mut height = 0i64;
    for (i, &s) in steps.iter().enumerate() {
        height += if s == Step::North { 1 } else { -1 };
        if height == 0 {
            out.push(DyckWord::from_steps_unchecked(steps[start..=i].to_vec()));
            start = i + 1;
        }
    }
    out
}

/// A prime factor together with the unmatched north steps that follow it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factor {
    pub prime: DyckWord,
    pub trailing_run: usize,
}

/// `N^leading_run` then, for each item, `prime N^trailing_run`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MarkedFactorization {
    pub leading_run: usize,
    pub items: Vec<Factor>,
}

impl MarkedFactorization {
    /// Factors a word that never falls below its starting level.
    ///
    /// North steps that are never closed by a later east step form the runs;
    /// everything else is grouped into prime factors.
    pub fn of(steps: &[Step]) -> Result<MarkedFactorization, FactorError> {
        let mut heights = Vec::with_capacity(steps.len() + 1);
        heights.push(0i64);
        for (i, &s) in steps.iter().enumerate() {
            let h = heights[i] + if s == Step::North { 1 } else { -1 };
            if h < 0 {
                return Err(FactorError::NegativeExcursion { position: i + 1 });
            }
            heights.push(h);
        }
        // suffix_min[i] = min(heights[i..])
        let mut suffix_min = heights.clone();
        for i in (0..steps.len()).rev() {
            suffix_min[i] = suffix_min[i].min(suffix_min[i + 1]);
        }

        let mut out = MarkedFactorization::default();
        let mut i = 0;
        while i < steps.len() {
            let unmatched = steps[i] == Step::North && suffix_min[i + 1] > heights[i];
            if unmatched {
                match out.items.last_mut() {
                    Some(f) => f.trailing_run += 1,
                    None => out.leading_run += 1,
                }
                i += 1;
                continue;
            }
            let base = heights[i];
            let start = i;
            i += 1;
            while heights[i] != base {
                i += 1;
            }
            out.items.push(Factor {
                prime: DyckWord::from_steps_unchecked(steps[start..i].to_vec()),
                trailing_run: 0,
            });
        }
        Ok(out)
    }

    pub fn reassemble(&self) -> Vec<Step> {
        let mut out = vec![Step::North; self.leading_run];
        for f in &self.items {
            out.extend_from_slice(f.prime.steps());
            out.extend(std::iter::repeat_n(Step::North, f.trailing_run));
        }
        out
    }

    pub fn primes(&self) -> impl Iterator<Item = &DyckWord> {
        self.items.iter().map(|f| &f.prime)
    }
}

pub fn marked_factorization(steps: &[Step]) -> Result<MarkedFactorization, FactorError> {
    MarkedFactorization::of(steps)
}

//! Lexicographic generation of all Dyck words of a given semilength.

use crate::word::{DyckWord, Step};

/// Iterator over the Dyck words of semilength `n`, lexicographic with
/// `N < E`. The first word is `N^n E^n`, the last `(NE)^n`.
#[derive(Clone, Debug)]
pub struct DyckWords {
    n: usize,
    current: Option<Vec<Step>>,
}

impl DyckWords {
    pub fn new(n: usize) -> Self {
        let mut first = vec![Step::North; n];
        first.extend(std::iter::repeat_n(Step::East, n));
        DyckWords {
            n,
            current: Some(first),
        }
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    /// Moves `steps` to its lexicographic successor; false when exhausted.
    fn advance(steps: &mut [Step], n: usize) -> bool {
        // Prefix counts for each position, so we can scan from the right.
        let mut north_before = Vec::with_capacity(steps.len());
        let mut north = 0;
        for &s in steps.iter() {
            north_before.push(north);
            if s == Step::North {
                north += 1;
            }
        }
        for i in (0..steps.len()).rev() {
            if steps[i] != Step::North {
                continue;
            }
            let north_prefix = north_before[i];
            let east_prefix = i - north_prefix;
            // Turning this north into an east needs height >= 1 before it.
            if north_prefix > east_prefix {
                steps[i] = Step::East;
                let mut rest_north = n - north_prefix;
                for s in steps[i + 1..].iter_mut() {
                    if rest_north > 0 {
                        *s = Step::North;
                        rest_north -= 1;
                    } else {
                        *s = Step::East;
                    }
                }
                return true;
            }
        }
        false
    }
}

impl Iterator for DyckWords {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        let mut steps = self.current.take()?;
        let out = DyckWord::from_steps_unchecked(steps.clone());
        if DyckWords::advance(&mut steps, self.n) {
            self.current = Some(steps);
        }
        Some(out)
    }
}

pub fn enumerate_dyck(n: usize) -> DyckWords {
    DyckWords::new(n)
}

/// Catalan numbers by the convolution recurrence.
pub fn catalan(n: usize) -> u64 {
    let mut c = vec![1u64; n + 1];
    for m in 1..=n {
        c[m] = (0..m).map(|i| c[i] * c[m - 1 - i]).sum();
    }
    c[n]
}

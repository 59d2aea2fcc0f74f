//! The one-step map `phi`, its inverse, and the iterated involution.
//!
//! `phi` is defined on nonempty words whose final east run has length at
//! least two and whose last double rise is not maximal (`ldr < n - 1`). It
//! keeps the rise set, adds one return and raises `ldr` by one.
//! `phi_inverse` is defined on words whose final east run has length at
//! least two and which have at least two returns.
//!
//! [`big_phi`] strips trailing `NE` primes, walks `phi` or `phi_inverse`
//! until the pair `(returns, n - ldr)` is swapped, then puts the `NE`
//! primes back. It is an involution on every semilength.

use std::fmt;
use std::iter::repeat_n;

use thiserror::Error;

use crate::factor::{prime_components, MarkedFactorization};
use crate::stats;
use crate::word::{steps_to_string, DyckWord, Step};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PhiCase {
    Case1,
    Case2,
    Case3,
}

impl PhiCase {
    pub fn number(self) -> u8 {
        match self {
            PhiCase::Case1 => 1,
            PhiCase::Case2 => 2,
            PhiCase::Case3 => 3,
        }
    }
}

impl fmt::Display for PhiCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.number())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Error)]
pub enum PhiError {
    #[error("EmptyWord: the empty path has no decomposition")]
    EmptyWord,
    #[error("EndsWithSingleEast: the final east run has length 1")]
    EndsWithSingleEast,
    #[error("MaximalLdr: the last double rise is at height n-1")]
    MaximalLdr,
    #[error("FewerThanTwoReturns: the path returns to the diagonal only once")]
    FewerThanTwoReturns,
}

impl PhiError {
    pub fn reason(self) -> &'static str {
        match self {
            PhiError::EmptyWord => "EmptyWord",
            PhiError::EndsWithSingleEast => "EndsWithSingleEast",
            PhiError::MaximalLdr => "MaximalLdr",
            PhiError::FewerThanTwoReturns => "FewerThanTwoReturns",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InvolutionError {
    #[error("intermediate word {word} left the domain: {source}")]
    InternalDomainViolation {
        word: DyckWord,
        #[source]
        source: PhiError,
    },
}

/// `prefix ++ core ++ tail` where `core ++ tail` is the last prime of the
/// word and `tail` is its longest single-rise suffix that follows an east
/// step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ForwardDecomposition {
    pub prefix: Vec<DyckWord>,
    pub core: Vec<Step>,
    pub tail: Vec<Step>,
}

/// `prefix ++ core ++ E^east_run ++ N^north_run ++ tail`, where everything
/// after `prefix` is the last two primes of the word and `tail` is the
/// longest single-rise suffix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BackwardDecomposition {
    pub prefix: Vec<DyckWord>,
    pub core: Vec<Step>,
    pub east_run: usize,
    pub north_run: usize,
    pub tail: Vec<Step>,
}

fn last_double_rise(steps: &[Step]) -> Option<usize> {
    steps
        .windows(2)
        .rposition(|w| w[0] == Step::North && w[1] == Step::North)
}

fn north(k: usize) -> impl Iterator<Item = Step> {
    repeat_n(Step::North, k)
}

fn east(k: usize) -> impl Iterator<Item = Step> {
    repeat_n(Step::East, k)
}

/// Shortens the last maximal north run of `steps` to a single step and
/// returns how many steps were removed.
fn shorten_last_rise(steps: &mut Vec<Step>) -> usize {
    let Some(last) = steps.iter().rposition(|&s| s == Step::North) else {
        return 0;
    };
    let start = steps[..last]
        .iter()
        .rposition(|&s| s != Step::North)
        .map_or(0, |i| i + 1);
    steps.drain(start..last);
    last - start
}

fn check_common(word: &DyckWord) -> Result<(), PhiError> {
    if word.is_empty() {
        return Err(PhiError::EmptyWord);
    }
    if word.final_east_run() == 1 {
        return Err(PhiError::EndsWithSingleEast);
    }
    Ok(())
}

pub fn in_phi_domain(word: &DyckWord) -> bool {
    check_common(word).is_ok() && stats::ldr(word.steps()) + 1 < word.semilength()
}

pub fn in_phi_inverse_domain(word: &DyckWord) -> bool {
    check_common(word).is_ok() && stats::returns(word.steps()) >= 2
}

pub fn forward_decompose(word: &DyckWord) -> Result<ForwardDecomposition, PhiError> {
    check_common(word)?;
    if stats::ldr(word.steps()) + 1 >= word.semilength() {
        return Err(PhiError::MaximalLdr);
    }
    let mut prefix = prime_components(word);
    let last = prefix.pop().expect("nonempty word has a prime");
    let steps = last.steps();
    // The last prime is not NE, so it has a double rise; ldr < n - 1 puts a
    // north step somewhere after it.
    let dr = last_double_rise(steps).expect("last prime has a double rise");
    let split = (dr + 2..steps.len())
        .find(|&j| steps[j] == Step::North)
        .expect("north step after the last double rise");
    Ok(ForwardDecomposition {
        prefix,
        core: steps[..split].to_vec(),
        tail: steps[split..].to_vec(),
    })
}

pub fn classify_case(decomposition: &ForwardDecomposition) -> PhiCase {
    let factors = MarkedFactorization::of(&decomposition.core)
        .expect("forward core never drops below its start");
    classify_factors(&factors)
}

fn classify_factors(factors: &MarkedFactorization) -> PhiCase {
    let single_rise = |w: &DyckWord| w.steps() == [Step::North, Step::East];
    match factors.items.as_slice() {
        [first, ..] if first.trailing_run > 0 => PhiCase::Case1,
        // One prime after the leading run: only moving the leading run is
        // invertible. For NE both formulas coincide.
        [only] if !single_rise(&only.prime) => PhiCase::Case1,
        items if items.iter().all(|f| f.trailing_run == 0) => PhiCase::Case2,
        _ => PhiCase::Case3,
    }
}

pub fn phi(word: &DyckWord) -> Result<(DyckWord, PhiCase), PhiError> {
    let ForwardDecomposition { prefix, core, tail } = forward_decompose(word)?;
    let factors = MarkedFactorization::of(&core).expect("forward core never drops below its start");
    let case = classify_factors(&factors);
    let lead = factors.leading_run;

    let mut out: Vec<Step> = prefix
        .iter()
        .flat_map(|p| p.steps().iter().copied())
        .collect();
    match case {
        PhiCase::Case1 => {
            out.extend_from_slice(&core[lead..]);
        }
        PhiCase::Case2 => {
            let mut rest = core[lead..].to_vec();
            let moved = shorten_last_rise(&mut rest);
            out.extend(north(moved));
            out.extend(rest);
        }
        PhiCase::Case3 => {
            let first = factors.items[0].prime.steps();
            let mut rest = core[lead + first.len()..].to_vec();
            let moved = shorten_last_rise(&mut rest);
            out.extend_from_slice(first);
            out.extend(north(moved));
            out.extend(rest);
        }
    }
    out.extend(north(lead));
    out.extend(tail);
    Ok((DyckWord::from_steps_unchecked(out), case))
}

pub fn backward_decompose(word: &DyckWord) -> Result<BackwardDecomposition, PhiError> {
    check_common(word)?;
    let mut prefix = prime_components(word);
    if prefix.len() < 2 {
        return Err(PhiError::FewerThanTwoReturns);
    }
    let second = prefix.pop().unwrap();
    let first = prefix.pop().unwrap();
    let suffix: Vec<Step> = first
        .steps()
        .iter()
        .chain(second.steps())
        .copied()
        .collect();

    let dr = last_double_rise(&suffix).expect("last prime has a double rise");
    let tail_start = dr + 1;
    let north_start = suffix[..tail_start]
        .iter()
        .rposition(|&s| s != Step::North)
        .map_or(0, |i| i + 1);
    let east_start = suffix[..north_start]
        .iter()
        .rposition(|&s| s != Step::East)
        .map_or(0, |i| i + 1);
    Ok(BackwardDecomposition {
        prefix,
        core: suffix[..east_start].to_vec(),
        east_run: north_start - east_start,
        north_run: tail_start - north_start,
        tail: suffix[tail_start..].to_vec(),
    })
}

pub fn phi_inverse(word: &DyckWord) -> Result<(DyckWord, PhiCase), PhiError> {
    let BackwardDecomposition {
        prefix,
        core,
        east_run,
        north_run,
        tail,
    } = backward_decompose(word)?;

    let mut out: Vec<Step> = prefix
        .iter()
        .flat_map(|p| p.steps().iter().copied())
        .collect();
    out.extend(north(north_run));

    let ends_with_double_rise = core.len() >= 2 && core[core.len() - 2..] == [Step::North; 2];
    let case = if ends_with_double_rise {
        out.extend_from_slice(&core);
        PhiCase::Case1
    } else {
        let factors =
            MarkedFactorization::of(&core).expect("backward core never drops below its start");
        let push_items = |out: &mut Vec<Step>, items: &[crate::factor::Factor]| {
            for f in items {
                out.extend_from_slice(f.prime.steps());
                out.extend(north(f.trailing_run));
            }
        };
        if stats::returns(&core) == 0 {
            push_items(&mut out, &factors.items);
            out.extend(north(factors.leading_run));
            PhiCase::Case2
        } else {
            // A core that returns starts with a prime.
            debug_assert_eq!(factors.leading_run, 0);
            let first = &factors.items[0];
            out.extend_from_slice(first.prime.steps());
            push_items(&mut out, &factors.items[1..]);
            out.extend(north(first.trailing_run));
            PhiCase::Case3
        }
    };
    out.extend(east(east_run));
    out.extend(tail);
    Ok((DyckWord::from_steps_unchecked(out), case))
}

/// Removes the trailing `NE` primes. The remaining word is empty or has a
/// final east run of length at least two.
pub fn strip_trailing_ne(word: &DyckWord) -> (DyckWord, usize) {
    let steps = word.steps();
    let mut end = steps.len();
    let mut count = 0;
    while end >= 2 && steps[end - 2] == Step::North && steps[end - 1] == Step::East {
        end -= 2;
        count += 1;
    }
    (DyckWord::from_steps_unchecked(steps[..end].to_vec()), count)
}

fn append_ne(word: DyckWord, count: usize) -> DyckWord {
    let mut steps = word.into_steps();
    for _ in 0..count {
        steps.push(Step::North);
        steps.push(Step::East);
    }
    DyckWord::from_steps_unchecked(steps)
}

/// What produced an entry of [`big_phi_trace`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TraceStep {
    /// The input, when nothing is stripped.
    Start,
    /// The input with this many trailing `NE` primes removed.
    Strip(usize),
    Phi(PhiCase),
    PhiInverse(PhiCase),
    /// This many `NE` primes put back.
    Append(usize),
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TraceStep::Start => write!(f, "start"),
            TraceStep::Strip(t) => write!(f, "strip {t}"),
            TraceStep::Phi(c) => write!(f, "phi case {c}"),
            TraceStep::PhiInverse(c) => write!(f, "phi-inv case {c}"),
            TraceStep::Append(t) => write!(f, "append {t}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEntry {
    pub word: DyckWord,
    pub step: TraceStep,
}

/// Number of forward (positive) or backward (negative) steps needed on a
/// stripped core.
fn steps_needed(core: &DyckWord) -> i64 {
    if core.is_empty() {
        return 0;
    }
    let r = stats::returns(core.steps()) as i64;
    let s = (core.semilength() - stats::ldr(core.steps())) as i64;
    s - r
}

fn walk(
    mut word: DyckWord,
    delta: i64,
    mut on_step: impl FnMut(&DyckWord, TraceStep),
) -> Result<DyckWord, InvolutionError> {
    let forward = delta > 0;
    for _ in 0..delta.unsigned_abs() {
        let stepped = if forward {
            phi(&word)
        } else {
            phi_inverse(&word)
        };
        let (next, case) = stepped.map_err(|source| InvolutionError::InternalDomainViolation {
            word: word.clone(),
            source,
        })?;
        word = next;
        on_step(
            &word,
            if forward {
                TraceStep::Phi(case)
            } else {
                TraceStep::PhiInverse(case)
            },
        );
    }
    Ok(word)
}

pub fn big_phi(word: &DyckWord) -> Result<DyckWord, InvolutionError> {
    let (core, stripped) = strip_trailing_ne(word);
    let delta = steps_needed(&core);
    if delta == 0 {
        return Ok(word.clone());
    }
    let image = walk(core, delta, |_, _| {})?;
    Ok(append_ne(image, stripped))
}

/// Every intermediate word of [`big_phi`]; the last entry is the image.
pub fn big_phi_trace(word: &DyckWord) -> Result<Vec<TraceEntry>, InvolutionError> {
    let (core, stripped) = strip_trailing_ne(word);
    let delta = steps_needed(&core);
    if delta == 0 {
        return Ok(vec![TraceEntry {
            word: word.clone(),
            step: TraceStep::Start,
        }]);
    }
    let mut trace = vec![TraceEntry {
        word: core.clone(),
        step: if stripped > 0 {
            TraceStep::Strip(stripped)
        } else {
            TraceStep::Start
        },
    }];
    let image = walk(core, delta, |w, step| {
        trace.push(TraceEntry {
            word: w.clone(),
            step,
        })
    })?;
    if stripped > 0 {
        trace.push(TraceEntry {
            word: append_ne(image, stripped),
            step: TraceStep::Append(stripped),
        });
    }
    Ok(trace)
}

impl fmt::Display for ForwardDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let prefix: String = self.prefix.iter().map(|w| w.to_string()).collect();
        write!(
            f,
            "P={} Q={} R={}",
            prefix,
            steps_to_string(&self.core),
            steps_to_string(&self.tail)
        )
    }
}

//! Dyck words: validated balanced sequences of north and east steps.
//!
//! A word is read as a lattice path from `(0, 0)` to `(n, n)`. A north step
//! is `(0, 1)`, an east step is `(1, 0)`, and no prefix may contain more east
//! than north steps.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// A single lattice step.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// `(0, 1)`, a rise.
    North,
    /// `(1, 0)`, a fall.
    East,
}

impl Step {
    pub fn flip(self) -> Step {
        match self {
            Step::North => Step::East,
            Step::East => Step::North,
        }
    }
}

/// Text encodings accepted for words.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Alphabet {
    /// `N` / `E`; the canonical encoding.
    #[default]
    NE,
    /// `U` / `D`.
    UD,
    /// `1` / `0`, with `1` for north.
    Bits,
}

impl Alphabet {
    pub const ALL: [Alphabet; 3] = [Alphabet::NE, Alphabet::UD, Alphabet::Bits];

    fn symbols(self) -> (char, char) {
        match self {
            Alphabet::NE => ('N', 'E'),
            Alphabet::UD => ('U', 'D'),
            Alphabet::Bits => ('1', '0'),
        }
    }

    pub fn encode(self, step: Step) -> char {
        let (north, east) = self.symbols();
        match step {
            Step::North => north,
            Step::East => east,
        }
    }

    pub fn decode(self, c: char) -> Option<Step> {
        let (north, east) = self.symbols();
        if c == north {
            Some(Step::North)
        } else if c == east {
            Some(Step::East)
        } else {
            None
        }
    }

    /// Picks the unique alphabet whose symbols cover every character of
    /// `text`. Returns `None` when no alphabet fits or the text is empty.
    pub fn detect(text: &str) -> Option<Alphabet> {
        if text.is_empty() {
            return None;
        }
        Alphabet::ALL
            .into_iter()
            .find(|a| text.chars().all(|c| a.decode(c).is_some()))
    }
}

impl FromStr for Alphabet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ne" => Ok(Alphabet::NE),
            "ud" => Ok(Alphabet::UD),
            "bits" | "01" => Ok(Alphabet::Bits),
            other => Err(format!(
                "unknown alphabet `{other}` (expected ne, ud or bits)"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("illegal character {ch:?} at position {position}")]
    IllegalCharacter { ch: char, position: usize },
    #[error("unbalanced word: {north} north steps, {east} east steps")]
    UnbalancedWord { north: usize, east: usize },
    #[error("word goes below the diagonal after step {position}")]
    BelowDiagonal { position: usize },
}

/// A Dyck word of some semilength `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DyckWord {
    steps: Vec<Step>,
}

impl DyckWord {
    pub fn empty() -> Self {
        DyckWord { steps: Vec::new() }
    }

    /// Validates a step sequence.
    pub fn from_steps(steps: Vec<Step>) -> Result<Self, WordError> {
        let mut height = 0i64;
        let mut north = 0;
        for (i, &s) in steps.iter().enumerate() {
            match s {
                Step::North => {
                    height += 1;
                    north += 1;
                }
                Step::East => height -= 1,
            }
            if height < 0 {
                return Err(WordError::BelowDiagonal { position: i + 1 });
            }
        }
        if height != 0 {
            return Err(WordError::UnbalancedWord {
                north,
                east: steps.len() - north,
            });
        }
        Ok(DyckWord { steps })
    }

    /// Wraps steps the caller has already checked.
    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(
            is_dyck(&steps),
            "not a Dyck word: {}",
            steps_to_string(&steps)
        );
        DyckWord { steps }
    }

    pub fn parse(text: &str, alphabet: Alphabet) -> Result<Self, WordError> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(position, ch)| {
                alphabet
                    .decode(ch)
                    .ok_or(WordError::IllegalCharacter { ch, position })
            })
            .collect::<Result<Vec<_>, _>>()?;
        DyckWord::from_steps(steps)
    }

    pub fn format(&self, alphabet: Alphabet) -> String {
        self.steps.iter().map(|&s| alphabet.encode(s)).collect()
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<Step> {
        self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Reads the word backwards with north and east exchanged, reflecting the
    /// path across the line `x + y = n`.
    pub fn reverse_complement(&self) -> DyckWord {
        DyckWord {
            steps: self.steps.iter().rev().map(|s| s.flip()).collect(),
        }
    }

    /// Length of the final run of east steps.
    pub fn final_east_run(&self) -> usize {
        self.steps
            .iter()
            .rev()
            .take_while(|&&s| s == Step::East)
            .count()
    }

    pub fn concat(parts: &[DyckWord]) -> DyckWord {
        DyckWord {
            steps: parts.iter().flat_map(|w| w.steps.iter().copied()).collect(),
        }
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Alphabet::NE))
    }
}

impl FromStr for DyckWord {
    type Err = WordError;

    /// Parses in the NE alphabet.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        DyckWord::parse(s, Alphabet::NE)
    }
}

pub fn is_dyck(steps: &[Step]) -> bool {
    let mut height = 0i64;
    for &s in steps {
        height += if s == Step::North { 1 } else { -1 };
        if height < 0 {
            return false;
        }
    }
    height == 0
}

pub fn steps_to_string(steps: &[Step]) -> String {
    steps.iter().map(|&s| Alphabet::NE.encode(s)).collect()
}

/// Parses NE text into raw steps without any balance check.
pub fn steps_from_str(text: &str) -> Result<Vec<Step>, WordError> {
    text.chars()
        .enumerate()
        .map(|(position, ch)| {
            Alphabet::NE
                .decode(ch)
                .ok_or(WordError::IllegalCharacter { ch, position })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_alphabets() {
        let ne = DyckWord::parse("NNENEE", Alphabet::NE).unwrap();
        assert_eq!(ne.semilength(), 3);
        assert_eq!(DyckWord::parse("UUDUDD", Alphabet::UD).unwrap(), ne);
        assert_eq!(DyckWord::parse("110100", Alphabet::Bits).unwrap(), ne);
    }

    #[test]
    fn empty_word_is_valid() {
        let w = DyckWord::parse("", Alphabet::NE).unwrap();
        assert!(w.is_empty());
        assert_eq!(w.semilength(), 0);
        assert_eq!(w.format(Alphabet::NE), "");
    }

    #[test]
    fn rejects_bad_words() {
        assert_eq!(
            DyckWord::parse("NEEN", Alphabet::NE),
            Err(WordError::BelowDiagonal { position: 3 })
        );
        assert_eq!(
            DyckWord::parse("NNE", Alphabet::NE),
            Err(WordError::UnbalancedWord { north: 2, east: 1 })
        );
        assert_eq!(
            DyckWord::parse("NXE", Alphabet::NE),
            Err(WordError::IllegalCharacter {
                ch: 'X',
                position: 1
            })
        );
        // U/D are not NE symbols
        assert!(matches!(
            DyckWord::parse("UD", Alphabet::NE),
            Err(WordError::IllegalCharacter { .. })
        ));
    }

    #[test]
    fn figure_one_word_round_trips() {
        let text = "NNNNNENENEENNENENNEENEENEEEE";
        let w: DyckWord = text.parse().unwrap();
        assert_eq!(w.semilength(), 14);
        assert_eq!(w.format(Alphabet::NE), text);
        assert_eq!(w.to_string(), text);
        assert_eq!("NENENE".parse::<DyckWord>().unwrap().to_string(), "NENENE");
    }

    #[test]
    fn reverse_complement_examples() {
        let rc = |s: &str| {
            s.parse::<DyckWord>()
                .unwrap()
                .reverse_complement()
                .to_string()
        };
        assert_eq!(rc("NNENEENE"), "NENNENEE");
        assert_eq!(rc("NNNEEE"), "NNNEEE");
        assert_eq!(rc("NENENE"), "NENENE");
        assert_eq!(rc(""), "");
    }

    #[test]
    fn detect_alphabet() {
        assert_eq!(Alphabet::detect("NNEE"), Some(Alphabet::NE));
        assert_eq!(Alphabet::detect("UD"), Some(Alphabet::UD));
        assert_eq!(Alphabet::detect("1100"), Some(Alphabet::Bits));
        assert_eq!(Alphabet::detect("NU"), None);
        assert_eq!(Alphabet::detect(""), None);
    }

    #[test]
    fn final_east_run() {
        assert_eq!("NNEE".parse::<DyckWord>().unwrap().final_east_run(), 2);
        assert_eq!("NNEENE".parse::<DyckWord>().unwrap().final_east_run(), 1);
        assert_eq!(DyckWord::empty().final_east_run(), 0);
    }
}

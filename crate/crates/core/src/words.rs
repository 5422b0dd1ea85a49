//! Letters and words over the generating set {a, a^-1, t, t^-1}.
//!
//! Words are written in a compact text grammar: the tokens `a`, `A`, `t`, `T`
//! stand for a, a^-1, t, t^-1, and any token may carry an exponent, so
//! `a^-2` expands to `AA` and `t^3` to `ttt`. Whitespace is ignored.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// One of the four generators of BS(1,2).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// a
    A,
    /// a^-1
    AInv,
    /// t
    T,
    /// t^-1
    TInv,
}

impl Letter {
    /// All four generators, in the fixed enumeration order a, a^-1, t, t^-1.
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::T, Letter::TInv];

    pub fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::T => Letter::TInv,
            Letter::TInv => Letter::T,
        }
    }

    /// Single-character form used by the text grammar and by machine alphabets.
    pub fn to_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::AInv => 'A',
            Letter::T => 't',
            Letter::TInv => 'T',
        }
    }

    pub fn from_char(c: char) -> Option<Letter> {
        match c {
            'a' => Some(Letter::A),
            'A' => Some(Letter::AInv),
            't' => Some(Letter::T),
            'T' => Some(Letter::TInv),
            _ => None,
        }
    }

    /// Contribution to the t-exponent: +1 for t, -1 for t^-1, 0 otherwise.
    pub fn t_step(self) -> i64 {
        match self {
            Letter::T => 1,
            Letter::TInv => -1,
            _ => 0,
        }
    }

    /// Contribution to an a-exponent: +1 for a, -1 for a^-1, 0 otherwise.
    pub fn a_step(self) -> i64 {
        match self {
            Letter::A => 1,
            Letter::AInv => -1,
            _ => 0,
        }
    }

    pub fn is_t(self) -> bool {
        matches!(self, Letter::T | Letter::TInv)
    }
}

/// A word in the free monoid over the four generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, PartialOrd, Ord)]
pub struct Word(Vec<Letter>);

/// Exponents larger than this are rejected by the parser and the power
/// constructors; it keeps a stray `a^999999999999` from exhausting memory.
pub const MAX_EXPONENT: i64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordParseError {
    #[error("unexpected character {0:?} at byte {1}")]
    UnexpectedChar(char, usize),
    #[error("expected integer exponent after '^' at byte {0}")]
    MissingExponent(usize),
    #[error("exponent out of range at byte {0} (|e| <= {MAX_EXPONENT})")]
    ExponentOutOfRange(usize),
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn empty() -> Word {
        Word(Vec::new())
    }

    /// a^n (n may be negative or zero).
    pub fn a_pow(n: i64) -> Word {
        Word::letter_pow(Letter::A, n)
    }

    /// t^n (n may be negative or zero).
    pub fn t_pow(n: i64) -> Word {
        Word::letter_pow(Letter::T, n)
    }

    fn letter_pow(base: Letter, n: i64) -> Word {
        assert!(n.unsigned_abs() <= MAX_EXPONENT as u64, "exponent too large");
        let l = if n >= 0 { base } else { base.inverse() };
        Word(vec![l; n.unsigned_abs() as usize])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn push(&mut self, l: Letter) {
        self.0.push(l);
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Formal inverse: reverse the word and invert every letter.
    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    /// Cancels adjacent inverse pairs until none remain.
    pub fn free_reduce(&self) -> Word {
        let mut stack: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if stack.last() == Some(&l.inverse()) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word(stack)
    }

    pub fn is_freely_reduced(&self) -> bool {
        self.0.windows(2).all(|w| w[1] != w[0].inverse())
    }

    /// (#t) - (#t^-1); an invariant of the group element represented.
    pub fn t_exponent(&self) -> i64 {
        self.0.iter().map(|l| l.t_step()).sum()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Letter> {
        self.0.iter()
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            // A visible marker keeps empty output unambiguous in shell pipelines.
            return write!(f, "1");
        }
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == l {
                j += 1;
            }
            let run = (j - i) as i64;
            let (sym, sign) = match l {
                Letter::A => ('a', 1),
                Letter::AInv => ('a', -1),
                Letter::T => ('t', 1),
                Letter::TInv => ('t', -1),
            };
            let e = sign * run;
            if e == 1 {
                write!(f, "{sym}")?;
            } else {
                write!(f, "{sym}^{e}")?;
            }
            i = j;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = WordParseError;

    fn from_str(text: &str) -> Result<Word, WordParseError> {
        let mut letters = Vec::new();
        let bytes: Vec<(usize, char)> = text.char_indices().collect();
        let mut i = 0;
        while i < bytes.len() {
            let (pos, c) = bytes[i];
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            // "1" is accepted as the empty word marker (matches Display).
            if c == '1' {
                i += 1;
                continue;
            }
            let base = Letter::from_char(c).ok_or(WordParseError::UnexpectedChar(c, pos))?;
            i += 1;
            let mut exp: i64 = match base {
                Letter::AInv | Letter::TInv => -1,
                _ => 1,
            };
            let mut explicit = false;
            if i < bytes.len() && bytes[i].1 == '^' {
                let caret_pos = bytes[i].0;
                i += 1;
                let mut sign = 1i64;
                if i < bytes.len() && (bytes[i].1 == '-' || bytes[i].1 == '+') {
                    if bytes[i].1 == '-' {
                        sign = -1;
                    }
                    i += 1;
                }
                let mut digits = String::new();
                while i < bytes.len() && bytes[i].1.is_ascii_digit() {
                    digits.push(bytes[i].1);
                    i += 1;
                }
                if digits.is_empty() {
                    return Err(WordParseError::MissingExponent(caret_pos));
                }
                let mag: i64 = digits
                    .parse()
                    .map_err(|_| WordParseError::ExponentOutOfRange(caret_pos))?;
                if mag > MAX_EXPONENT {
                    return Err(WordParseError::ExponentOutOfRange(caret_pos));
                }
                // `A^2` means (a^-1)^2 and `A^-1` means a.
                exp *= sign * mag;
                explicit = true;
            }
            let _ = explicit;
            let plain = match base {
                Letter::AInv => Letter::A,
                Letter::TInv => Letter::T,
                other => other,
            };
            let l = if exp >= 0 { plain } else { plain.inverse() };
            for _ in 0..exp.unsigned_abs() {
                letters.push(l);
            }
        }
        Ok(Word(letters))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn parse_expands_exponents() {
        assert_eq!(
            w("tat^-1").letters(),
            &[Letter::T, Letter::A, Letter::TInv]
        );
        assert_eq!(w(""), Word::empty());
        assert_eq!(
            w("a^2 t^-2").letters(),
            &[Letter::A, Letter::A, Letter::TInv, Letter::TInv]
        );
        assert_eq!(w("a^0"), Word::empty());
        assert_eq!(w("A^2"), w("a^-2"));
        assert_eq!(w("T"), w("t^-1"));
    }

    #[test]
    fn parse_rejects_junk() {
        assert!("b".parse::<Word>().is_err());
        assert!("a^".parse::<Word>().is_err());
        assert!("a^x".parse::<Word>().is_err());
        assert!("a^99999999999".parse::<Word>().is_err());
    }

    #[test]
    fn display_round_trips() {
        for s in ["tat^-1", "a^2t^-2", "t^3", "a^-1", "", "ta^2t^-1a"] {
            let word = w(s);
            let shown = word.to_string();
            assert_eq!(w(&shown), word, "round-trip through {shown:?}");
        }
        assert_eq!(w("ta^2t^-1").to_string(), "ta^2t^-1");
        assert_eq!(Word::empty().to_string(), "1");
    }

    #[test]
    fn free_reduce_examples() {
        assert_eq!(w("tt^-1a").free_reduce(), w("a"));
        assert_eq!(w("aA").free_reduce(), Word::empty());
        assert_eq!(w("ta t^-1 t a^-1").free_reduce(), w("t"));
    }

    #[test]
    fn t_exponent_examples() {
        assert_eq!(w("tat^-1").t_exponent(), 0);
        assert_eq!(w("t^-3a").t_exponent(), -3);
    }

    #[test]
    fn inverse_involution() {
        let word = w("ta^2t^-1a");
        assert_eq!(word.inverse().inverse(), word);
        for l in Letter::ALL {
            assert_eq!(l.inverse().inverse(), l);
        }
    }
}

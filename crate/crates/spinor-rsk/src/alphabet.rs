//! Z2-graded, totally ordered alphabets and their letters.
//!
//! A graded alphabet is a finite set of [`Letter`]s with an explicit total
//! order and a degree (0 or 1) attached to each letter.  The order is a
//! property of the alphabet, not of the letters themselves: the same letters
//! can be ordered differently in different alphabets (for instance `2` comes
//! before `-1` in the symplectic alphabet `1 < 2 < -2 < -1` but after it in
//! the interleaved alphabet `1 < -1 < 2 < -2`), so [`Letter`] deliberately
//! does not implement `Ord`.  All comparisons go through
//! [`GradedAlphabet::cmp`].
//!
//! Degrees control semistandardness: degree-0 letters may repeat in a row but
//! not in a column, degree-1 letters may repeat in a column but not in a row.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// A letter of a graded alphabet.
///
/// `Num(k)` is the plain letter `k`, `Bar(k)` its barred companion (written
/// `-k`), and `Prime(k)` the primed letter `k'`.  The numeric payload is
/// always positive.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Letter {
    /// The unbarred letter `k`.
    Num(i32),
    /// The barred letter, written `-k` in text form.
    Bar(i32),
    /// The primed letter `k'`.
    Prime(i32),
}

impl Letter {
    /// The numeric payload of the letter.
    pub fn value(self) -> i32 {
        match self {
            Letter::Num(k) | Letter::Bar(k) | Letter::Prime(k) => k,
        }
    }

    /// True for `Bar(_)`.
    pub fn is_barred(self) -> bool {
        matches!(self, Letter::Bar(_))
    }

    /// The barred companion of an unbarred letter and vice versa.
    /// Panics on primed letters, which have no companion.
    pub fn companion(self) -> Letter {
        match self {
            Letter::Num(k) => Letter::Bar(k),
            Letter::Bar(k) => Letter::Num(k),
            Letter::Prime(_) => panic!("primed letters have no barred companion"),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::Num(k) => write!(f, "{k}"),
            Letter::Bar(k) => write!(f, "-{k}"),
            Letter::Prime(k) => write!(f, "{k}'"),
        }
    }
}

/// Errors from parsing letters or alphabet descriptions.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    /// The text is not a recognizable letter.
    #[error("invalid letter {0:?}")]
    BadLetter(String),
    /// The text is not a recognizable alphabet description.
    #[error("invalid alphabet {0:?}")]
    BadAlphabet(String),
}

impl FromStr for Letter {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::BadLetter(s.to_string());
        if let Some(body) = s.strip_suffix('\'') {
            let k: i32 = body.parse().map_err(|_| bad())?;
            if k <= 0 {
                return Err(bad());
            }
            return Ok(Letter::Prime(k));
        }
        let k: i32 = s.parse().map_err(|_| bad())?;
        match k.cmp(&0) {
            Ordering::Greater => Ok(Letter::Num(k)),
            Ordering::Less => Ok(Letter::Bar(-k)),
            Ordering::Equal => Err(bad()),
        }
    }
}

impl Serialize for Letter {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Letter {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// The degree of a letter in a graded alphabet.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Degree {
    /// Degree 0: strict down columns, weak along rows.
    Zero,
    /// Degree 1: strict along rows, weak down columns.
    One,
}

/// A finite totally ordered alphabet with a Z2-grading.
#[derive(Clone, Debug)]
pub struct GradedAlphabet {
    letters: Vec<Letter>,
    degrees: Vec<Degree>,
    positions: HashMap<Letter, usize>,
    name: String,
}

impl GradedAlphabet {
    /// Builds an alphabet from letters listed in increasing order with their
    /// degrees.  Panics on duplicate letters.
    pub fn custom(pairs: Vec<(Letter, Degree)>, name: &str) -> Self {
        let mut positions = HashMap::new();
        let mut letters = Vec::with_capacity(pairs.len());
        let mut degrees = Vec::with_capacity(pairs.len());
        for (i, (letter, degree)) in pairs.into_iter().enumerate() {
            let clash = positions.insert(letter, i);
            assert!(clash.is_none(), "duplicate letter {letter} in alphabet");
            letters.push(letter);
            degrees.push(degree);
        }
        GradedAlphabet { letters, degrees, positions, name: name.to_string() }
    }

    /// `1 < 2 < ... < n`, all of degree 0.
    pub fn standard(n: i32) -> Self {
        let pairs = (1..=n).map(|k| (Letter::Num(k), Degree::Zero)).collect();
        Self::custom(pairs, &format!("std:{n}"))
    }

    /// `-n < ... < -2 < -1`, all of degree 0.
    pub fn barred(n: i32) -> Self {
        let pairs = (1..=n).rev().map(|k| (Letter::Bar(k), Degree::Zero)).collect();
        Self::custom(pairs, &format!("bar:{n}"))
    }

    /// The symplectic alphabet `1 < ... < n < -n < ... < -1`, all of degree 0.
    pub fn symplectic(n: i32) -> Self {
        let pairs = (1..=n)
            .map(|k| (Letter::Num(k), Degree::Zero))
            .chain((1..=n).rev().map(|k| (Letter::Bar(k), Degree::Zero)))
            .collect();
        Self::custom(pairs, &format!("sym:{n}"))
    }

    /// `1' < 2' < ... < n'`, all of degree 1.
    pub fn primed(n: i32) -> Self {
        let pairs = (1..=n).map(|k| (Letter::Prime(k), Degree::One)).collect();
        Self::custom(pairs, &format!("prime:{n}"))
    }

    /// `1 < ... < m < 1' < ... < n'` with plain letters of degree 0 and primed
    /// letters of degree 1.
    pub fn mixed(m: i32, n: i32) -> Self {
        let pairs = (1..=m)
            .map(|k| (Letter::Num(k), Degree::Zero))
            .chain((1..=n).map(|k| (Letter::Prime(k), Degree::One)))
            .collect();
        Self::custom(pairs, &format!("mixed:{m},{n}"))
    }

    /// The interleaved alphabet `1 < -1 < 2 < -2 < ... < l < -l`, all of
    /// degree 0.
    pub fn interleaved(l: i32) -> Self {
        let pairs = (1..=l)
            .flat_map(|k| [(Letter::Num(k), Degree::Zero), (Letter::Bar(k), Degree::Zero)])
            .collect();
        Self::custom(pairs, &format!("king:{l}"))
    }

    /// The symplectic alphabet of rank `n` extended by a formal least letter
    /// `a` and greatest letter `-a`: `a < 1 < ... < -1 < -a`.  The formal
    /// letters are encoded as `Num(n+1)` / `Bar(n+1)` placed at the ends.
    pub fn symplectic_extended(n: i32) -> Self {
        let mut pairs = vec![(Letter::Num(n + 1), Degree::Zero)];
        pairs.extend((1..=n).map(|k| (Letter::Num(k), Degree::Zero)));
        pairs.extend((1..=n).rev().map(|k| (Letter::Bar(k), Degree::Zero)));
        pairs.push((Letter::Bar(n + 1), Degree::Zero));
        Self::custom(pairs, &format!("symext:{n}"))
    }

    /// A short descriptive name (`sym:3`, `mixed:1,1`, ...).
    pub fn name(&self) -> &str {
        &self.name
    }

    /// Number of letters.
    pub fn len(&self) -> usize {
        self.letters.len()
    }

    /// True if the alphabet has no letters.
    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// The letters in increasing order.
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The position of a letter in the order, if present.
    pub fn position(&self, x: Letter) -> Option<usize> {
        self.positions.get(&x).copied()
    }

    /// True if the alphabet contains `x`.
    pub fn contains(&self, x: Letter) -> bool {
        self.positions.contains_key(&x)
    }

    /// The degree of `x`.  Panics if `x` is not in the alphabet.
    pub fn degree(&self, x: Letter) -> Degree {
        let pos = self
            .position(x)
            .unwrap_or_else(|| panic!("letter {x} not in alphabet {}", self.name));
        self.degrees[pos]
    }

    /// Compares two letters in the alphabet order.  Panics if either letter
    /// is not in the alphabet.
    pub fn cmp(&self, x: Letter, y: Letter) -> Ordering {
        let px = self
            .position(x)
            .unwrap_or_else(|| panic!("letter {x} not in alphabet {}", self.name));
        let py = self
            .position(y)
            .unwrap_or_else(|| panic!("letter {y} not in alphabet {}", self.name));
        px.cmp(&py)
    }

    /// `x < y` in the alphabet order.
    pub fn lt(&self, x: Letter, y: Letter) -> bool {
        self.cmp(x, y) == Ordering::Less
    }

    /// `x <= y` in the alphabet order.
    pub fn le(&self, x: Letter, y: Letter) -> bool {
        self.cmp(x, y) != Ordering::Greater
    }

    /// Whether `u` (left) next to `v` (right) is allowed within a row:
    /// `u < v`, or `u = v` of degree 0.
    pub fn row_pair_ok(&self, u: Letter, v: Letter) -> bool {
        match self.cmp(u, v) {
            Ordering::Less => true,
            Ordering::Equal => self.degree(u) == Degree::Zero,
            Ordering::Greater => false,
        }
    }

    /// Whether `u` (above) next to `v` (below) is allowed within a column:
    /// `u < v`, or `u = v` of degree 1.
    pub fn col_pair_ok(&self, u: Letter, v: Letter) -> bool {
        match self.cmp(u, v) {
            Ordering::Less => true,
            Ordering::Equal => self.degree(u) == Degree::One,
            Ordering::Greater => false,
        }
    }

    /// Sorts letters into weakly increasing alphabet order.
    pub fn sort(&self, letters: &mut [Letter]) {
        letters.sort_by(|&a, &b| self.cmp(a, b));
    }
}

impl fmt::Display for GradedAlphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {{", self.name)?;
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " < ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "}}")
    }
}

impl FromStr for GradedAlphabet {
    type Err = ParseError;

    /// Parses descriptions of the form `std:N`, `bar:N`, `sym:N`, `prime:N`,
    /// `mixed:M,N`, `king:L`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let bad = || ParseError::BadAlphabet(s.to_string());
        let (kind, arg) = s.split_once(':').ok_or_else(bad)?;
        let parse_pos = |t: &str| -> Result<i32, ParseError> {
            let v: i32 = t.trim().parse().map_err(|_| bad())?;
            if v <= 0 {
                return Err(bad());
            }
            Ok(v)
        };
        match kind.trim() {
            "std" => Ok(GradedAlphabet::standard(parse_pos(arg)?)),
            "bar" => Ok(GradedAlphabet::barred(parse_pos(arg)?)),
            "sym" => Ok(GradedAlphabet::symplectic(parse_pos(arg)?)),
            "prime" => Ok(GradedAlphabet::primed(parse_pos(arg)?)),
            "king" => Ok(GradedAlphabet::interleaved(parse_pos(arg)?)),
            "mixed" => {
                let (m, n) = arg.split_once(',').ok_or_else(bad)?;
                Ok(GradedAlphabet::mixed(parse_pos(m)?, parse_pos(n)?))
            }
            _ => Err(bad()),
        }
    }
}

/// Parses a whitespace- or comma-separated list of letters.
pub fn parse_letters(s: &str) -> Result<Vec<Letter>, ParseError> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(Letter::from_str)
        .collect()
}

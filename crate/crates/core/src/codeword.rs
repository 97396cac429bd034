use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A relay time-slot schedule.
///
/// `true` (printed `1`) marks a slot used by the source-relay link, `false`
/// (printed `0`) a slot used by the relay-destination link.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Codeword(Vec<bool>);

impl Codeword {
    pub fn from_bits(bits: Vec<bool>) -> Self {
        Codeword(bits)
    }

    /// Unpacks the low `len` bits of `packed`, most significant first.
    pub fn from_packed(packed: u64, len: usize) -> Self {
        Codeword((0..len).map(|p| packed >> (len - 1 - p) & 1 == 1).collect())
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_valid(&self) -> bool {
        validate(&self.0)
    }

    /// Packs into a `u64`, first slot most significant. `None` above 64 slots.
    pub fn to_packed(&self) -> Option<u64> {
        if self.0.len() > 64 {
            return None;
        }
        Some(self.0.iter().fold(0u64, |acc, &b| acc << 1 | b as u64))
    }

    pub fn concat<'a>(parts: impl IntoIterator<Item = &'a Codeword>) -> Codeword {
        Codeword(
            parts
                .into_iter()
                .flat_map(|w| w.0.iter().copied())
                .collect(),
        )
    }
}

/// Checks both conditions of an available schedule: equal counts of ones and
/// zeros, and no prefix with more zeros than ones.
pub fn validate(bits: &[bool]) -> bool {
    if !bits.len().is_multiple_of(2) {
        return false;
    }
    let mut surplus = 0i64;
    for &b in bits {
        surplus += if b { 1 } else { -1 };
        if surplus < 0 {
            return false;
        }
    }
    surplus == 0
}

/// Canonical order: shorter words first, then lexicographic with `1`
/// ranked before `0`, so `11..00..` is the minimum of its length.
impl Ord for Codeword {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Codeword {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.trim()
            .chars()
            .map(|c| match c {
                '1' => Ok(true),
                '0' => Ok(false),
                other => Err(Error::ParseWord(other)),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(Codeword)
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

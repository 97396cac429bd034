//! Ranking and unranking of available words without a stored codebook.
//!
//! `completions(p, h)` is the number of ways to finish a word of length `2n`
//! from position `p` with `h` more ones than zeros so far. The canonical
//! index of a word adds, at every `0` it contains, the number of words that
//! instead place a `1` there.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::codeword::Codeword;
use crate::error::{Error, Result};

static ZERO: BigUint = BigUint::ZERO;

#[derive(Debug, Clone)]
pub struct PathCountTable {
    n: usize,
    // counts[p][h], h in 0..=n
    counts: Vec<Vec<BigUint>>,
}

impl PathCountTable {
    pub fn new(n: usize) -> Self {
        let len = 2 * n;
        let mut counts = vec![vec![BigUint::zero(); n + 1]; len + 1];
        counts[len][0] = BigUint::one();
        for p in (0..len).rev() {
            let remaining = len - p;
            for h in 0..=n.min(remaining) {
                let mut c = BigUint::zero();
                if h < n {
                    c += &counts[p + 1][h + 1];
                }
                if h > 0 {
                    c += &counts[p + 1][h - 1];
                }
                counts[p][h] = c;
            }
        }
        PathCountTable { n, counts }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word_len(&self) -> usize {
        2 * self.n
    }

    pub fn completions(&self, p: usize, h: usize) -> &BigUint {
        self.counts
            .get(p)
            .and_then(|row| row.get(h))
            .unwrap_or(&ZERO)
    }

    /// Number of words, `S(n)`.
    pub fn total(&self) -> &BigUint {
        self.completions(0, 0)
    }

    pub fn rank(&self, word: &Codeword) -> Result<BigUint> {
        rank(word, self)
    }

    pub fn unrank(&self, index: &BigUint) -> Result<Codeword> {
        unrank(index, self)
    }
}

/// Canonical index of `word` among all available words of its length.
pub fn rank(word: &Codeword, pct: &PathCountTable) -> Result<BigUint> {
    if word.len() != pct.word_len() {
        return Err(Error::LengthMismatch {
            expected: pct.word_len(),
            found: word.len(),
        });
    }
    if !word.is_valid() {
        return Err(Error::InvalidWord(word.to_string()));
    }
    let mut index = BigUint::zero();
    let mut h = 0usize;
    for (p, &b) in word.bits().iter().enumerate() {
        if b {
            h += 1;
        } else {
            index += pct.completions(p + 1, h + 1);
            h -= 1;
        }
    }
    Ok(index)
}

/// The word at canonical position `index`.
pub fn unrank(index: &BigUint, pct: &PathCountTable) -> Result<Codeword> {
    if index >= pct.total() {
        return Err(Error::IndexOutOfRange {
            index: index.to_string(),
            capacity: pct.total().to_string(),
        });
    }
    let len = pct.word_len();
    let mut rest = index.clone();
    let mut bits = Vec::with_capacity(len);
    let mut h = 0usize;
    for p in 0..len {
        let with_one = pct.completions(p + 1, h + 1);
        if rest < *with_one {
            bits.push(true);
            h += 1;
        } else {
            rest -= with_one;
            bits.push(false);
            h -= 1;
        }
    }
    Ok(Codeword::from_bits(bits))
}

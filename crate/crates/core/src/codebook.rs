//! Materialized optimal codebooks.
//!
//! The book for half-length `n` is assembled from shorter sub-books. A word
//! counted by `F(n, k)` is laid out as
//!
//! ```text
//! 1^k | box of k free symbols with i ones | tail
//! ```
//!
//! where the tail is a word of `CBF(n - k + i, 2i)` with its `2i` leading
//! ones stripped. The full book is `CBF(n, 1)`: words `10w` with `w` from
//! the book of half-length `n - 1`, followed by `CBF(n, 2)`.

use std::collections::HashMap;
use std::collections::HashSet;

use crate::codeword::Codeword;
use crate::error::{Error, Result};

/// Default cap on the half-length of a materialized book (`S(16) ~ 3.5e7`).
pub const DEFAULT_MAX_N: usize = 16;

/// Upper bound for any override of the materialization cap.
pub const HARD_MAX_N: usize = 24;

/// All available words of one length, sorted in canonical order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codebook {
    n: usize,
    // first slot in the most significant of the low 2n bits; canonical order
    // is descending numeric order
    words: Vec<u64>,
}

impl Codebook {
    /// Builds the book for half-length `n` under [`DEFAULT_MAX_N`].
    pub fn build(n: usize) -> Result<Self> {
        Self::build_with_cap(n, DEFAULT_MAX_N)
    }

    pub fn build_with_cap(n: usize, max_n: usize) -> Result<Self> {
        let limit = max_n.min(HARD_MAX_N);
        if n > limit {
            return Err(Error::TooLarge {
                what: "codebook materialization",
                n,
                limit,
            });
        }
        let mut words = SubBooks::new(n).take_full();
        words.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Codebook { n, words })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn word_len(&self) -> usize {
        2 * self.n
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn word(&self, index: usize) -> Option<Codeword> {
        self.words
            .get(index)
            .map(|&w| Codeword::from_packed(w, 2 * self.n))
    }

    pub fn iter(&self) -> impl Iterator<Item = Codeword> + '_ {
        self.words
            .iter()
            .map(move |&w| Codeword::from_packed(w, 2 * self.n))
    }

    /// Canonical index of `word`, by binary search.
    pub fn position(&self, word: &Codeword) -> Option<usize> {
        if word.len() != 2 * self.n {
            return None;
        }
        let packed = word.to_packed()?;
        self.words.binary_search_by(|w| packed.cmp(w)).ok()
    }

    pub fn packed_words(&self) -> &[u64] {
        &self.words
    }

    pub fn is_uniquely_decodable(&self) -> bool {
        self.words.windows(2).all(|w| w[0] > w[1])
    }
}

/// Builds the optimal book for half-length `n` (see [`Codebook::build`]).
pub fn build_codebook(n: usize) -> Result<Codebook> {
    Codebook::build(n)
}

/// A fixed-length code is uniquely decodable iff its words are pairwise
/// distinct; words of unequal length make it variable-length and are rejected.
pub fn check_unique_decodability<'a>(words: impl IntoIterator<Item = &'a Codeword>) -> bool {
    let mut seen = HashSet::new();
    let mut len = None;
    for w in words {
        if *len.get_or_insert(w.len()) != w.len() || !seen.insert(w) {
            return false;
        }
    }
    true
}

/// Memo of sub-books `CBF(m, k)` keyed by `(m, k)`, for even `k` and `k = 1`.
struct SubBooks {
    n: usize,
    books: HashMap<(usize, usize), Vec<u64>>,
    // boxes[k][i]: all k-bit patterns with i ones
    boxes: Vec<Vec<Vec<u64>>>,
}

impl SubBooks {
    fn new(n: usize) -> Self {
        let boxes = (0..=n)
            .map(|k| {
                let mut by_ones = vec![Vec::new(); k + 1];
                for pattern in 0u64..1 << k {
                    by_ones[pattern.count_ones() as usize].push(pattern);
                }
                by_ones
            })
            .collect();
        let mut books = HashMap::new();
        books.insert((0, 1), vec![0u64]);
        let mut sb = SubBooks { n, books, boxes };
        for m in 1..=n {
            sb.fill_row(m);
        }
        sb
    }

    fn take_full(mut self) -> Vec<u64> {
        self.books.remove(&(self.n, 1)).unwrap_or_default()
    }

    // CBF(m, 0) is the whole book CBF(m, 1); the empty word stands in for m = 0.
    fn get(&self, m: usize, k: usize) -> &[u64] {
        let k = k.max(1);
        if k > m && m > 0 {
            return &[];
        }
        self.books.get(&(m, k)).map(Vec::as_slice).unwrap_or(&[])
    }

    fn fill_row(&mut self, m: usize) {
        let top_even = m - m % 2;
        for k in (2..=top_even).rev().step_by(2) {
            let book = self.compose(m, k);
            self.books.insert((m, k), book);
        }
        let book = self.compose(m, 1);
        self.books.insert((m, 1), book);
    }

    fn compose(&self, m: usize, k: usize) -> Vec<u64> {
        let len = 2 * m;
        let tail_len = len - 2 * k;
        let tail_mask = if tail_len == 0 {
            0
        } else {
            u64::MAX >> (64 - tail_len)
        };
        let head = ((1u64 << k) - 1) << (len - k);
        let mut out = Vec::new();
        for i in 0..=k {
            let sub = self.get(m - k + i, 2 * i);
            if sub.is_empty() {
                continue;
            }
            for &bx in &self.boxes[k][i] {
                let prefix = head | bx << tail_len;
                out.extend(sub.iter().map(|&w| prefix | (w & tail_mask)));
            }
        }
        out
    }
}

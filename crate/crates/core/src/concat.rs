//! Long codes built by concatenating short optimal component codes.
//!
//! A target length `2n` is split as `2n = m * L + r` with `0 <= r < L`. A
//! codeword is `m` blocks from the length-`L` book followed by one block from
//! the length-`r` book (absent when `r = 0`). Indices map to blocks by mixed
//! radix with the first block most significant, and each digit is unranked
//! inside its component, so neither component book has to be stored.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Pow, Zero};

use crate::ballot::{catalan_closed_form, log2_big};
use crate::codeword::Codeword;
use crate::error::{Error, Result};
use crate::rank::PathCountTable;

#[derive(Debug, Clone)]
pub struct ConcatScheme {
    target_len: usize,
    block_len: usize,
    m: usize,
    r: usize,
    block: PathCountTable,
    tail: Option<PathCountTable>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcatMetrics {
    pub rate_per_pulse: f64,
    pub rho_r: f64,
    pub rho_m: f64,
    pub stored_words: BigUint,
    pub stored_bits: BigUint,
    pub optimal_words: BigUint,
}

fn check_even(len: usize) -> Result<()> {
    if len < 2 || !len.is_multiple_of(2) {
        return Err(Error::OddLength(len));
    }
    Ok(())
}

impl ConcatScheme {
    /// Splits `target_len` into blocks of `block_len` symbols plus a tail.
    pub fn plan(target_len: usize, block_len: usize) -> Result<Self> {
        check_even(target_len)?;
        check_even(block_len)?;
        let (m, r) = target_len.div_rem(&block_len);
        Ok(ConcatScheme {
            target_len,
            block_len,
            m,
            r,
            block: PathCountTable::new(block_len / 2),
            tail: (r > 0).then(|| PathCountTable::new(r / 2)),
        })
    }

    pub fn target_len(&self) -> usize {
        self.target_len
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn r(&self) -> usize {
        self.r
    }

    fn block_radix(&self) -> &BigUint {
        self.block.total()
    }

    fn tail_radix(&self) -> BigUint {
        self.tail
            .as_ref()
            .map_or_else(BigUint::one, |t| t.total().clone())
    }

    /// Number of distinct concatenated words, `S(L/2)^m * S(r/2)`.
    pub fn capacity(&self) -> BigUint {
        Pow::pow(self.block_radix(), self.m) * self.tail_radix()
    }

    pub fn encode(&self, index: &BigUint) -> Result<Codeword> {
        let capacity = self.capacity();
        if *index >= capacity {
            return Err(Error::IndexOutOfRange {
                index: index.to_string(),
                capacity: capacity.to_string(),
            });
        }
        let (mut rest, tail_digit) = index.div_rem(&self.tail_radix());
        let mut digits = vec![BigUint::zero(); self.m];
        for d in digits.iter_mut().rev() {
            let (q, rem) = rest.div_rem(self.block_radix());
            *d = rem;
            rest = q;
        }
        let mut blocks = digits
            .iter()
            .map(|d| self.block.unrank(d))
            .collect::<Result<Vec<_>>>()?;
        if let Some(tail) = &self.tail {
            blocks.push(tail.unrank(&tail_digit)?);
        }
        Ok(Codeword::concat(&blocks))
    }

    pub fn decode(&self, word: &Codeword) -> Result<BigUint> {
        if word.len() != self.target_len {
            return Err(Error::LengthMismatch {
                expected: self.target_len,
                found: word.len(),
            });
        }
        let bits = word.bits();
        let mut index = BigUint::zero();
        for (i, chunk) in bits[..self.m * self.block_len]
            .chunks(self.block_len)
            .enumerate()
        {
            let digit = self
                .block
                .rank(&Codeword::from_bits(chunk.to_vec()))
                .map_err(|_| Error::InvalidBlock { block: i + 1 })?;
            index = index * self.block_radix() + digit;
        }
        if let Some(tail) = &self.tail {
            let chunk = &bits[self.m * self.block_len..];
            let digit = tail
                .rank(&Codeword::from_bits(chunk.to_vec()))
                .map_err(|_| Error::InvalidBlock { block: self.m + 1 })?;
            index = index * tail.total() + digit;
        }
        Ok(index)
    }

    pub fn metrics(&self) -> ConcatMetrics {
        let n = self.target_len / 2;
        let block_words = catalan_closed_form(self.block_len / 2);
        let tail_words = catalan_closed_form(self.r / 2);

        let bits = self.m as f64 * log2_big(&block_words) + log2_big(&tail_words);
        let rate_per_pulse = bits / self.target_len as f64;

        let optimal_words = catalan_closed_form(n);
        let optimal_rate = log2_big(&optimal_words) / self.target_len as f64;
        let rho_r = if optimal_rate > 0.0 {
            1.0 - rate_per_pulse / optimal_rate
        } else {
            0.0
        };

        // only components that actually appear in the word are stored
        let mut stored_words = BigUint::zero();
        let mut stored_bits = BigUint::zero();
        if self.m > 0 {
            stored_bits += &block_words * self.block_len;
            stored_words += block_words;
        }
        if self.r > 0 {
            stored_bits += &tail_words * self.r;
            stored_words += tail_words;
        }
        let rho_m = (log2_big(&stored_words) - log2_big(&optimal_words)).exp2();

        ConcatMetrics {
            rate_per_pulse,
            rho_r,
            rho_m,
            stored_words,
            stored_bits,
            optimal_words,
        }
    }
}

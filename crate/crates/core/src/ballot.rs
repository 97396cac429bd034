//! Exact counts of available schedule words.
//!
//! A schedule word of length `2n` is *available* when it holds `n` ones and
//! `n` zeros and no prefix contains more zeros than ones. `S(n)` counts them;
//! `F(n, k)` counts the ones that open with `k` ones. Both are computed with
//! the decomposition
//!
//! ```text
//! F(n, k) = sum_{i=0..=k} C(k, i) * F(n - k + i, 2i)
//! ```
//!
//! which only refers to shorter words or to the same length with a longer
//! run of leading ones, so rows can be filled bottom-up over `n` and
//! downwards over `k`.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Largest half-length accepted by [`brute_force_count`] (4^13 candidates).
pub const BRUTE_FORCE_MAX_N: usize = 13;

static ZERO: BigUint = BigUint::ZERO;

/// Memoized `F(n, k)` table over exact integers.
///
/// Built by a single writer through [`BallotTable::extend_to`] (or the
/// counting methods that extend on demand); once built it can be shared
/// read-only.
#[derive(Debug, Clone)]
pub struct BallotTable {
    // rows[n][k] = F(n, k) for k in 0..=n
    rows: Vec<Vec<BigUint>>,
    // Pascal's triangle, binom[k][i] = C(k, i)
    binom: Vec<Vec<BigUint>>,
}

impl Default for BallotTable {
    fn default() -> Self {
        Self::new()
    }
}

impl BallotTable {
    /// A table holding only the empty word, `F(0, 0) = 1`.
    pub fn new() -> Self {
        BallotTable {
            rows: vec![vec![BigUint::one()]],
            binom: vec![vec![BigUint::one()]],
        }
    }

    pub fn with_max_n(max_n: usize) -> Self {
        let mut table = Self::new();
        table.extend_to(max_n);
        table
    }

    /// Highest half-length currently memoized.
    pub fn max_n(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn extend_to(&mut self, max_n: usize) {
        while self.binom.len() <= max_n {
            let prev = self.binom.last().expect("binomial rows are never empty");
            let mut row = Vec::with_capacity(prev.len() + 1);
            row.push(BigUint::one());
            for w in prev.windows(2) {
                row.push(&w[0] + &w[1]);
            }
            row.push(BigUint::one());
            self.binom.push(row);
        }
        while self.rows.len() <= max_n {
            let n = self.rows.len();
            let row = self.compute_row(n);
            self.rows.push(row);
        }
    }

    fn compute_row(&self, n: usize) -> Vec<BigUint> {
        let mut row = vec![BigUint::zero(); n + 1];
        for k in (1..=n).rev() {
            let mut total = BigUint::zero();
            for i in 0..=k {
                let m = n - k + i;
                let j = 2 * i;
                let tail = if m == n {
                    // Same length, longer run of leading ones: already filled.
                    if j <= n {
                        row[j].clone()
                    } else {
                        continue;
                    }
                } else {
                    match self.stored(m, j) {
                        Some(v) if !v.is_zero() => v.clone(),
                        _ => continue,
                    }
                };
                total += &self.binom[k][i] * tail;
            }
            row[k] = total;
        }
        row[0] = row[1].clone();
        row
    }

    /// `F(m, j)` for an already memoized row, with `F(m, j) = 0` for `j > m`.
    fn stored(&self, m: usize, j: usize) -> Option<&BigUint> {
        let row = self.rows.get(m)?;
        Some(row.get(j).unwrap_or(&ZERO))
    }

    /// Read-only lookup of `F(n, k)`; `None` when row `n` has not been built.
    pub fn get(&self, n: usize, k: usize) -> Option<&BigUint> {
        self.stored(n, k)
    }

    /// Read-only lookup of `S(n)`; `None` when row `n` has not been built.
    pub fn get_s(&self, n: usize) -> Option<&BigUint> {
        self.stored(n, 0)
    }

    /// Exact `F(n, k)`, extending the memo as needed.
    pub fn f_count(&mut self, n: usize, k: usize) -> BigUint {
        if k > n {
            return BigUint::zero();
        }
        self.extend_to(n);
        self.rows[n][k].clone()
    }

    /// Exact `S(n)`, the number of available words of length `2n`.
    pub fn s_count(&mut self, n: usize) -> BigUint {
        self.f_count(n, 0)
    }

    pub fn rate_figures(&mut self, n: usize) -> RateFigure {
        self.extend_to(n);
        RateFigure::from_count(n, &self.rows[n][0])
    }
}

/// `F(n, k)` on a fresh table.
pub fn f_count(n: usize, k: usize) -> BigUint {
    BallotTable::new().f_count(n, k)
}

/// `S(n)` on a fresh table.
pub fn s_count(n: usize) -> BigUint {
    BallotTable::new().s_count(n)
}

/// `C(2n, n) / (n + 1)`; the division is always exact.
pub fn catalan_closed_form(n: usize) -> BigUint {
    let central = binomial(2 * n as u64, n as u64);
    let (q, r) = central.div_rem(&BigUint::from(n as u64 + 1));
    debug_assert!(r.is_zero());
    q
}

/// Multiplicative binomial coefficient; every partial product is exact.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Counts available words of length `2n` by testing all `4^n` binary words.
pub fn brute_force_count(n: usize) -> Result<BigUint> {
    if n > BRUTE_FORCE_MAX_N {
        return Err(Error::TooLarge {
            what: "brute-force count",
            n,
            limit: BRUTE_FORCE_MAX_N,
        });
    }
    let len = 2 * n as u32;
    let count = (0u64..1 << len)
        .filter(|&w| w.count_ones() == n as u32 && prefix_dominant(w, len))
        .count();
    Ok(BigUint::from(count))
}

// Bits read most-significant first.
fn prefix_dominant(word: u64, len: u32) -> bool {
    let mut surplus = 0i32;
    for pos in (0..len).rev() {
        surplus += if word >> pos & 1 == 1 { 1 } else { -1 };
        if surplus < 0 {
            return false;
        }
    }
    true
}

/// `log2(x)` for an exact integer, from its bit length and top 64 bits.
///
/// Returns `-inf` for zero.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits == 0 {
        return f64::NEG_INFINITY;
    }
    if bits <= 64 {
        return (x.to_u64().expect("fits in 64 bits") as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).to_u64().expect("top 64 bits");
    (top as f64).log2() + shift as f64
}

/// Time-domain coding rate derived from `S(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RateFigure {
    pub n: usize,
    /// `log2 S(n)`
    pub bits_total: f64,
    /// `log2 S(n) / 2n`
    pub bits_per_pulse: f64,
    /// `log2 S(n) / n`, the per-slot-pair weight.
    pub weight_a: f64,
}

impl RateFigure {
    pub fn from_count(n: usize, s_n: &BigUint) -> Self {
        let bits_total = log2_big(s_n);
        let (bits_per_pulse, weight_a) = if n == 0 {
            (0.0, 0.0)
        } else {
            (bits_total / (2 * n) as f64, bits_total / n as f64)
        };
        RateFigure {
            n,
            bits_total,
            bits_per_pulse,
            weight_a,
        }
    }
}

/// Per-pulse rate `log2 S(n) / 2n` straight from the closed form.
pub fn optimal_rate_per_pulse(n: usize) -> f64 {
    RateFigure::from_count(n, &catalan_closed_form(n)).bits_per_pulse
}

//! Slot-by-slot replay of a schedule through a half-duplex two-hop relay.
//!
//! With `n` slots per link in a period `T`, the source-relay slots last
//! `dt1 = C2 T / ((C1 + C2) n)` and the relay-destination slots
//! `dt2 = C1 T / ((C1 + C2) n)`, so every slot moves the same `C1 dt1 = C2 dt2`
//! bits. The relay may only transmit bits it has received and not yet
//! forwarded.

use crate::codeword::Codeword;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Link {
    SourceRelay,
    RelayDestination,
}

impl Link {
    pub fn label(self) -> &'static str {
        match self {
            Link::SourceRelay => "S-R",
            Link::RelayDestination => "R-D",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SlotRecord {
    pub slot: usize,
    pub link: Link,
    pub duration: f64,
    pub bits: f64,
    /// Relay buffer after the slot.
    pub buffer: f64,
    /// Bits delivered to the destination so far.
    pub delivered: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FlowTrace {
    pub slots: Vec<SlotRecord>,
    pub period: f64,
    pub n: usize,
    pub dt1: f64,
    pub dt2: f64,
    pub delivered: f64,
}

impl FlowTrace {
    /// Average delivered rate over the period.
    pub fn rate(&self) -> f64 {
        self.delivered / self.period
    }
}

pub fn simulate_flow(word: &Codeword, c1: f64, c2: f64, period: f64) -> Result<FlowTrace> {
    for (name, v) in [("C1", c1), ("C2", c2), ("T", period)] {
        if !(v.is_finite() && v > 0.0) {
            return Err(Error::Domain(format!(
                "{name} must be positive and finite, got {v}"
            )));
        }
    }
    let ones = word.bits().iter().filter(|&&b| b).count();
    let zeros = word.len() - ones;
    if ones != zeros || ones == 0 {
        return Err(Error::Unbalanced { ones, zeros });
    }
    let n = ones;
    let dt1 = c2 * period / ((c1 + c2) * n as f64);
    let dt2 = c1 * period / ((c1 + c2) * n as f64);
    let (q1, q2) = (c1 * dt1, c2 * dt2);

    // buffer tracked in whole slot quanta so the emptiness test is exact
    let mut held = 0usize;
    let mut sent = 0usize;
    let mut slots = Vec::with_capacity(word.len());
    for (slot, &b) in word.bits().iter().enumerate() {
        let (link, duration, bits) = if b {
            held += 1;
            (Link::SourceRelay, dt1, q1)
        } else {
            if held == 0 {
                return Err(Error::FlowViolation { slot });
            }
            held -= 1;
            sent += 1;
            (Link::RelayDestination, dt2, q2)
        };
        slots.push(SlotRecord {
            slot,
            link,
            duration,
            bits,
            buffer: held as f64 * q1,
            delivered: sent as f64 * q2,
        });
    }
    Ok(FlowTrace {
        slots,
        period,
        n,
        dt1,
        dt2,
        delivered: n as f64 * q2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codebook::build_codebook;
    use crate::codeword::validate;

    fn w(s: &str) -> Codeword {
        s.parse().unwrap()
    }

    #[test]
    fn equal_capacities_deliver_half() {
        let t = simulate_flow(&w("1010"), 5.0, 5.0, 8.0).unwrap();
        assert!((t.delivered - 5.0 * 8.0 / 2.0).abs() < 1e-12);
        assert!((t.rate() - 2.5).abs() < 1e-12);
    }

    #[test]
    fn unequal_capacities() {
        let t = simulate_flow(&w("10"), 2.0, 1.0, 3.0).unwrap();
        assert!((t.dt1 - 1.0).abs() < 1e-12);
        assert!((t.dt2 - 2.0).abs() < 1e-12);
        assert!((t.delivered - 2.0).abs() < 1e-12);
        assert_eq!(t.slots[0].link, Link::SourceRelay);
        assert_eq!(t.slots[1].buffer, 0.0);
    }

    #[test]
    fn invalid_words_fail() {
        assert_eq!(
            simulate_flow(&w("1001"), 1.0, 1.0, 1.0),
            Err(Error::FlowViolation { slot: 2 })
        );
        assert!(matches!(
            simulate_flow(&w("110"), 1.0, 1.0, 1.0),
            Err(Error::Unbalanced { ones: 2, zeros: 1 })
        ));
        assert!(matches!(
            simulate_flow(&w("10"), 0.0, 1.0, 1.0),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn flow_rule_coincides_with_prefix_rule() {
        let n = 5;
        let len = 2 * n;
        for packed in 0u64..1 << len {
            let word = Codeword::from_packed(packed, len);
            if packed.count_ones() as usize != n {
                continue;
            }
            let flows = simulate_flow(&word, 3.0, 1.5, 2.0).is_ok();
            assert_eq!(flows, validate(word.bits()), "{word}");
        }
    }

    #[test]
    fn every_slot_moves_equal_bits() {
        for word in build_codebook(6).unwrap().iter() {
            let t = simulate_flow(&word, 7.3, 2.1, 1.7).unwrap();
            let (a, b) = (7.3 * t.dt1, 2.1 * t.dt2);
            assert!((a - b).abs() <= 1e-12 * a.max(b));
            assert!(t.slots.iter().all(|s| s.buffer >= 0.0));
            let expect = 7.3 * 2.1 * 1.7 / (7.3 + 2.1);
            assert!((t.delivered - expect).abs() < 1e-12 * expect);
        }
    }
}

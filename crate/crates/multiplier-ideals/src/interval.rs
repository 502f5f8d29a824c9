//! Query intervals for jumping numbers.

use std::fmt;

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// A nonempty interval `0 <= lo < hi` with independently open or closed
/// endpoints. The conventional query interval for jumping numbers is the
/// half-open `(0, T]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
    lo_open: bool,
    hi_open: bool,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational, lo_open: bool, hi_open: bool) -> Result<Self> {
        if lo.is_negative() {
            return Err(Error::InvalidInterval(format!(
                "lower endpoint must be nonnegative, got {}",
                lo
            )));
        }
        if lo >= hi {
            return Err(Error::InvalidInterval(format!(
                "interval is empty: lo = {}, hi = {}",
                lo, hi
            )));
        }
        Ok(Interval {
            lo,
            hi,
            lo_open,
            hi_open,
        })
    }

    /// The default `(0, hi]`.
    pub fn open_closed(lo: Rational, hi: Rational) -> Result<Self> {
        Interval::new(lo, hi, true, false)
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn lo_open(&self) -> bool {
        self.lo_open
    }

    pub fn hi_open(&self) -> bool {
        self.hi_open
    }

    pub fn contains(&self, value: &Rational) -> bool {
        let above = if self.lo_open {
            value > &self.lo
        } else {
            value >= &self.lo
        };
        let below = if self.hi_open {
            value < &self.hi
        } else {
            value <= &self.hi
        };
        above && below
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_open { '(' } else { '[' },
            self.lo,
            self.hi,
            if self.hi_open { ')' } else { ']' },
        )
    }
}

//! Multiplier ideals of generic determinantal ideals.
//!
//! For the ideal `I_r(X)` of `r x r` minors of an `m x n` matrix of
//! independent variables, a theorem of Johnson expresses every multiplier
//! ideal as a formal intersection of symbolic powers:
//!
//! ```text
//! J(I_r(X)^c) = intersection over i = 1..r of  I_i(X)^( floor(c(r+1-i)) + 1 - (n-i+1)(m-i+1) )
//! ```
//!
//! with factors of nonpositive exponent omitted (they are the unit ideal).
//! Results stay formal: deciding equality between different presentations
//! of the same ideal would need general ideal arithmetic, which is out of
//! scope here. The containment chain `I_r <= ... <= I_1` is used only to
//! annotate redundant factors, never to rewrite them.
//!
//! Symbolic powers themselves expand as sums over partitions,
//! `I_i(X)^((a)) = sum over partitions k_1+...+k_s = a of
//! prod_j I_(i-1+k_j)(X)`, which [`DeterminantalShape::symbolic_power_expansion`]
//! makes explicit.

use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::ideal::ExponentVector;
use crate::interval::Interval;
use crate::rational::{floor_int, rational, Rational};

/// The shape data of a generic determinantal ideal: an `m x n` matrix of
/// independent variables and the size `r` of the minors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DeterminantalShape {
    rows: usize,
    cols: usize,
    minor_size: usize,
}

/// One factor `I_i(X)^(exponent)` of a formal intersection of symbolic
/// powers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicFactor {
    pub minor_size: usize,
    pub exponent: BigInt,
}

/// A formal intersection of symbolic powers of determinantal ideals,
/// sorted by minor size. An empty factor list is the unit ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicIntersection {
    factors: Vec<SymbolicFactor>,
}

impl SymbolicIntersection {
    pub fn factors(&self) -> &[SymbolicFactor] {
        &self.factors
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// Factors made redundant by the containment chain `I_k <= I_j` for
    /// `k >= j`: a factor `I_j^(a)` is redundant whenever some factor
    /// `I_k^(b)` with `k > j` and `b >= a` is present, since then
    /// `I_k^((b)) <= I_j^((a))`.
    pub fn redundant_factors(&self) -> Vec<&SymbolicFactor> {
        self.factors
            .iter()
            .filter(|f| self.is_redundant(f))
            .collect()
    }

    /// Factors that survive the containment annotation. This is an
    /// annotation only; the stored intersection is never rewritten.
    pub fn essential_factors(&self) -> Vec<&SymbolicFactor> {
        self.factors
            .iter()
            .filter(|f| !self.is_redundant(f))
            .collect()
    }

    fn is_redundant(&self, f: &SymbolicFactor) -> bool {
        self.factors
            .iter()
            .any(|g| g.minor_size > f.minor_size && g.exponent >= f.exponent)
    }

    /// Human-readable note about containment-redundant factors, if any.
    pub fn containment_annotation(&self) -> Option<String> {
        let redundant = self.redundant_factors();
        if redundant.is_empty() {
            return None;
        }
        let essential = self.essential_factors();
        let mut note = format!(
            "containment makes {} redundant",
            redundant.iter().map(|f| factor_string(f)).join(", ")
        );
        note.push_str(&format!(
            "; the intersection equals {}",
            essential
                .iter()
                .map(|f| factor_string(f))
                .join(" \u{2229} ")
        ));
        Some(note)
    }
}

fn factor_string(f: &SymbolicFactor) -> String {
    format!("I_{}^({})", f.minor_size, f.exponent)
}

impl fmt::Display for SymbolicIntersection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "(1)");
        }
        write!(
            f,
            "{}",
            self.factors.iter().map(factor_string).join(" \u{2229} ")
        )
    }
}

/// A jumping-number candidate: a value at which some factor exponent
/// increments. It is a true jumping number whenever an incrementing factor
/// is not redundant in the intersection, which this module reports but does
/// not decide.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingCandidate {
    pub value: Rational,
    /// Minor sizes `i` whose exponent increments at this value.
    pub increments: Vec<usize>,
}

/// The formal expansion of one symbolic power `I_i(X)^((a))` as a sum over
/// partitions of `a`. Each term is the multiset of minor sizes
/// `{ i-1+k_1, ..., i-1+k_s }` for a partition `k` of `a`, listed with parts
/// decreasing; terms that would involve minors larger than `min(m, n)`
/// vanish and are dropped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormalExpansion {
    pub minor_size: usize,
    pub power: u32,
    pub terms: Vec<Vec<usize>>,
}

impl fmt::Display for FormalExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let rendered = self
            .terms
            .iter()
            .map(|term| term.iter().map(|s| format!("I_{}", s)).join("*"))
            .join(" + ");
        write!(f, "{}", rendered)
    }
}

/// The signed expansion of one `r x r` minor: its row and column index sets
/// (1-based) and the `r!` signed monomials of the determinant, over the
/// `m*n` variables `x_i_j` in row-major order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinorTermList {
    pub row_indices: Vec<usize>,
    pub col_indices: Vec<usize>,
    pub terms: Vec<(i8, ExponentVector)>,
}

impl MinorTermList {
    /// Renders the determinant as e.g. `x_1_1*x_2_2 - x_1_2*x_2_1`.
    pub fn render(&self, variables: &[String]) -> String {
        let mut out = String::new();
        for (k, (sign, monomial)) in self.terms.iter().enumerate() {
            if k == 0 {
                if *sign < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *sign < 0 { " - " } else { " + " });
            }
            out.push_str(&crate::ideal::monomial_string(variables, monomial));
        }
        out
    }
}

impl DeterminantalShape {
    /// Validates `m, n >= 1` and `1 <= r <= min(m, n)`.
    pub fn new(rows: usize, cols: usize, minor_size: usize) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::InvalidShape(format!(
                "matrix must be nonempty, got {} x {}",
                rows, cols
            )));
        }
        if minor_size == 0 || minor_size > rows.min(cols) {
            return Err(Error::InvalidShape(format!(
                "minor size must satisfy 1 <= r <= min(m, n) = {}, got {}",
                rows.min(cols),
                minor_size
            )));
        }
        Ok(DeterminantalShape {
            rows,
            cols,
            minor_size,
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn minor_size(&self) -> usize {
        self.minor_size
    }

    /// Row-major variable names `x_1_1, x_1_2, ..., x_m_n`.
    pub fn variable_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.rows * self.cols);
        for i in 1..=self.rows {
            for j in 1..=self.cols {
                names.push(format!("x_{}_{}", i, j));
            }
        }
        names
    }

    /// The symbolic-power exponents `a_1, ..., a_r` at exponent `c`:
    /// `a_i = floor(c(r+1-i)) + 1 - (n-i+1)(m-i+1)`, by exact rational
    /// floor. Entries may be nonpositive (the factor is trivial there).
    pub fn exponents(&self, c: &Rational) -> Result<Vec<BigInt>> {
        if c.is_negative() {
            return Err(Error::NegativeExponent(c.to_string()));
        }
        let (m, n, r) = (self.rows, self.cols, self.minor_size);
        let mut out = Vec::with_capacity(r);
        for i in 1..=r {
            let scaled = c * rational((r + 1 - i) as i64, 1);
            let codim_term = BigInt::from(((n - i + 1) * (m - i + 1)) as i64);
            out.push(floor_int(&scaled) + BigInt::one() - codim_term);
        }
        Ok(out)
    }

    /// The multiplier ideal `J(I_r(X)^c)` as a formal intersection of
    /// symbolic powers; factors with nonpositive exponent are omitted. The
    /// result is the unit ideal exactly when `c` is below the log canonical
    /// threshold.
    pub fn multiplier_ideal(&self, c: &Rational) -> Result<SymbolicIntersection> {
        let factors = self
            .exponents(c)?
            .into_iter()
            .enumerate()
            .filter(|(_, a)| a.is_positive())
            .map(|(idx, a)| SymbolicFactor {
                minor_size: idx + 1,
                exponent: a,
            })
            .collect();
        Ok(SymbolicIntersection { factors })
    }

    /// The log canonical threshold `min over i of (n-i+1)(m-i+1)/(r+1-i)`,
    /// the least `c` at which some factor exponent reaches 1.
    pub fn lct(&self) -> Rational {
        let (m, n, r) = (self.rows, self.cols, self.minor_size);
        (1..=r)
            .map(|i| rational(((n - i + 1) * (m - i + 1)) as i64, (r + 1 - i) as i64))
            .min()
            .expect("minor size is at least 1")
    }

    /// Jumping-number candidates in the interval: the values
    /// `c = s / (r+1-i)` with integer `s >= (n-i+1)(m-i+1)` where the
    /// exponent of factor `i` increments, sorted and deduplicated with the
    /// set of incrementing minor sizes at each value.
    pub fn jumping_candidates(&self, interval: &Interval) -> Vec<JumpingCandidate> {
        let (m, n, r) = (self.rows, self.cols, self.minor_size);
        let mut by_value: std::collections::BTreeMap<Rational, Vec<usize>> =
            std::collections::BTreeMap::new();
        for i in 1..=r {
            let step = (r + 1 - i) as i64;
            let s_min = BigInt::from(((n - i + 1) * (m - i + 1)) as i64);
            let s_max = floor_int(&(interval.hi() * rational(step, 1)));
            let mut s = s_min;
            while s <= s_max {
                let value = Rational::new(s.clone(), BigInt::from(step));
                if interval.contains(&value) {
                    by_value.entry(value).or_default().push(i);
                }
                s += BigInt::one();
            }
        }
        by_value
            .into_iter()
            .map(|(value, mut increments)| {
                increments.sort_unstable();
                increments.dedup();
                JumpingCandidate { value, increments }
            })
            .collect()
    }

    /// Expands `I_i(X)^((a))` over partitions of `a`. Requires
    /// `1 <= i <= min(m, n)` and `a >= 1`.
    pub fn symbolic_power_expansion(
        &self,
        minor_size: usize,
        power: i64,
    ) -> Result<FormalExpansion> {
        if minor_size == 0 || minor_size > self.rows.min(self.cols) {
            return Err(Error::InvalidShape(format!(
                "symbolic power base must satisfy 1 <= i <= min(m, n) = {}, got {}",
                self.rows.min(self.cols),
                minor_size
            )));
        }
        if power < 1 {
            return Err(Error::NonpositivePower(power));
        }
        let cutoff = self.rows.min(self.cols);
        let terms = partitions(power as usize)
            .into_iter()
            .map(|parts| {
                parts
                    .into_iter()
                    .map(|k| minor_size - 1 + k)
                    .collect::<Vec<usize>>()
            })
            .filter(|term| term.iter().all(|&size| size <= cutoff))
            .collect();
        Ok(FormalExpansion {
            minor_size,
            power: power as u32,
            terms,
        })
    }

    /// All `r x r` minors of the generic matrix, as explicit signed term
    /// lists; there are `C(m, r) * C(n, r)` of them, each with `r!` terms.
    pub fn minor_generators(&self) -> Vec<MinorTermList> {
        let (m, n, r) = (self.rows, self.cols, self.minor_size);
        let dim = m * n;
        let mut out = Vec::new();
        for row_set in (1..=m).combinations(r) {
            for col_set in (1..=n).combinations(r) {
                let mut terms = Vec::new();
                for perm in (0..r).permutations(r) {
                    let sign = if permutation_parity(&perm) { -1 } else { 1 };
                    let mut entries = vec![0u32; dim];
                    for (k, &p) in perm.iter().enumerate() {
                        let i = row_set[k];
                        let j = col_set[p];
                        entries[(i - 1) * n + (j - 1)] += 1;
                    }
                    terms.push((sign, ExponentVector::new(entries)));
                }
                out.push(MinorTermList {
                    row_indices: row_set.clone(),
                    col_indices: col_set,
                    terms,
                });
            }
        }
        out
    }
}

/// Partitions of `a` with parts in decreasing order, listed largest-first:
/// `{a}, {a-1, 1}, ..., {1, ..., 1}`.
fn partitions(a: usize) -> Vec<Vec<usize>> {
    fn rec(remaining: usize, max_part: usize) -> Vec<Vec<usize>> {
        if remaining == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=max_part.min(remaining)).rev() {
            for rest in rec(remaining - first, first) {
                let mut p = Vec::with_capacity(1 + rest.len());
                p.push(first);
                p.extend(rest);
                out.push(p);
            }
        }
        out
    }
    rec(a, a)
}

/// True for odd permutations (inversion count parity).
fn permutation_parity(perm: &[usize]) -> bool {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in (i + 1)..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    inversions % 2 == 1
}

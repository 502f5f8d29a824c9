//! Exponent vectors and monomial ideals.
//!
//! A monomial `x^v` is identified with its exponent vector `v` in
//! `Z^n_{>=0}`, and a monomial ideal with the antichain of its minimal
//! generators under the componentwise (divisibility) order. All ideals are
//! kept in a canonical form — minimal generators sorted in graded
//! lexicographic order — so that equality is structural and printed output
//! is deterministic.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a monomial: a fixed-length list of nonnegative
/// integers. `(1,2,0)` in variables `x,y,z` is the monomial `x*y^2`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    /// The zero vector (the monomial `1`).
    pub fn zeros(dim: usize) -> Self {
        ExponentVector(vec![0; dim])
    }

    /// The all-ones vector (the monomial `x_1*...*x_n`).
    pub fn ones(dim: usize) -> Self {
        ExponentVector(vec![1; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> u32 {
        self.0[i]
    }

    /// Total degree.
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    /// Componentwise divisibility order: `self` divides `other` iff
    /// `self <= other` in every coordinate.
    pub fn divides(&self, other: &Self) -> bool {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// Componentwise sum (monomial product).
    pub fn plus(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self + (1,...,1)`.
    pub fn plus_ones(&self) -> Self {
        ExponentVector(self.0.iter().map(|&e| e + 1).collect())
    }

    /// Componentwise `max(self - other, 0)`.
    pub fn saturating_sub(&self, other: &Self) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.saturating_sub(*b))
                .collect(),
        )
    }
}

/// Graded lexicographic order: first by total degree, then lexicographically
/// on the entries. This is the canonical order for generator lists.
impl Ord for ExponentVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for ExponentVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Reduces a generating set to the antichain of its componentwise-minimal
/// elements. The result generates the same upward-closed set of exponent
/// vectors, sorted in the canonical graded lexicographic order.
pub fn minimalize(gens: Vec<ExponentVector>) -> Result<Vec<ExponentVector>> {
    if let Some(first) = gens.first() {
        let dim = first.dim();
        if gens.iter().any(|g| g.dim() != dim) {
            return Err(Error::MixedDimensions);
        }
    }
    let mut sorted = gens;
    sorted.sort();
    sorted.dedup();
    let mut minimal: Vec<ExponentVector> = Vec::new();
    for g in sorted {
        // Earlier vectors have lower degree, so only they can divide g.
        if !minimal.iter().any(|m| m.divides(&g)) {
            minimal.push(g);
        }
    }
    Ok(minimal)
}

/// A monomial ideal: named variables plus the antichain of minimal
/// generators, stored sorted in graded lexicographic order.
///
/// The unit ideal is generated by the zero vector; the zero ideal has no
/// generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialIdeal {
    variables: Vec<String>,
    generators: Vec<ExponentVector>,
}

impl MonomialIdeal {
    /// Builds an ideal from any generating set; the set is minimalized and
    /// sorted into canonical form.
    pub fn new<S: Into<String>>(variables: Vec<S>, gens: Vec<ExponentVector>) -> Result<Self> {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        if variables.is_empty() {
            return Err(Error::Parse("variable list must be nonempty".into()));
        }
        for (i, name) in variables.iter().enumerate() {
            if variables[..i].contains(name) {
                return Err(Error::Parse(format!("duplicate variable name `{}`", name)));
            }
        }
        for g in &gens {
            if g.dim() != variables.len() {
                return Err(Error::DimensionMismatch {
                    expected: variables.len(),
                    found: g.dim(),
                });
            }
        }
        let generators = minimalize(gens)?;
        Ok(MonomialIdeal {
            variables,
            generators,
        })
    }

    /// Parses each generator with [`parse_monomial`] over the given
    /// variables. `gens` may be empty (the zero ideal).
    pub fn parse(variables: &[&str], gens: &[&str]) -> Result<Self> {
        let names: Vec<String> = variables.iter().map(|s| s.to_string()).collect();
        let vectors = gens
            .iter()
            .map(|g| parse_monomial(g, &names))
            .collect::<Result<Vec<_>>>()?;
        Self::new(names, vectors)
    }

    /// The unit ideal `(1)`.
    pub fn unit<S: Into<String>>(variables: Vec<S>) -> Result<Self> {
        let dim = variables.len();
        Self::new(variables, vec![ExponentVector::zeros(dim)])
    }

    /// The zero ideal `(0)`.
    pub fn zero<S: Into<String>>(variables: Vec<S>) -> Result<Self> {
        Self::new(variables, Vec::new())
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    /// Minimal generators in canonical (graded lexicographic) order.
    pub fn generators(&self) -> &[ExponentVector] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.generators.len() == 1 && self.generators[0].is_zero()
    }

    /// True iff `x^v` lies in the ideal, i.e. some generator divides `v`.
    pub fn contains_monomial(&self, v: &ExponentVector) -> Result<bool> {
        self.check_dim(v)?;
        Ok(self.generators.iter().any(|g| g.divides(v)))
    }

    /// True iff every generator of `other` lies in `self`.
    pub fn contains_ideal(&self, other: &Self) -> Result<bool> {
        for g in &other.generators {
            if !self.contains_monomial(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The ideal quotient `(self : x^m)`, computed componentwise: it is
    /// minimally generated by `max(v - m, 0)` over the generators `v`.
    pub fn quotient_by_monomial(&self, m: &ExponentVector) -> Result<Self> {
        self.check_dim(m)?;
        let shifted = self
            .generators
            .iter()
            .map(|g| g.saturating_sub(m))
            .collect();
        MonomialIdeal::new(self.variables.clone(), shifted)
    }

    /// The product ideal, minimally generated by pairwise sums of
    /// generators.
    pub fn product(&self, other: &Self) -> Result<Self> {
        if self.variables != other.variables {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: other.num_vars(),
            });
        }
        let mut sums = Vec::with_capacity(self.generators.len() * other.generators.len());
        for a in &self.generators {
            for b in &other.generators {
                sums.push(a.plus(b));
            }
        }
        MonomialIdeal::new(self.variables.clone(), sums)
    }

    /// `self^k` by repeated products; `self^0` is the unit ideal.
    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut result = MonomialIdeal::unit(self.variables.clone())?;
        for _ in 0..k {
            result = result.product(self)?;
        }
        Ok(result)
    }

    /// Formats one exponent vector as a monomial in this ideal's variables.
    pub fn monomial_string(&self, v: &ExponentVector) -> String {
        monomial_string(&self.variables, v)
    }

    /// Generators as monomial strings, in canonical order.
    pub fn generator_strings(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| self.monomial_string(g))
            .collect()
    }

    fn check_dim(&self, v: &ExponentVector) -> Result<()> {
        if v.dim() != self.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: v.dim(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let gens = self.generator_strings();
        write!(f, "{}", gens.join(", "))
    }
}

/// Formats `v` as a `*`-joined power product over `variables`; the zero
/// vector prints as `1`.
pub fn monomial_string(variables: &[String], v: &ExponentVector) -> String {
    if v.is_zero() {
        return "1".to_string();
    }
    let mut parts = Vec::new();
    for (name, &e) in variables.iter().zip(v.entries()) {
        match e {
            0 => {}
            1 => parts.push(name.clone()),
            _ => parts.push(format!("{}^{}", name, e)),
        }
    }
    parts.join("*")
}

/// Parses a power product such as `z*w^2` (or the literal `1`) into an
/// exponent vector over `variables`. Repeated variables accumulate their
/// exponents, so `x^2*x` parses as `x^3`.
pub fn parse_monomial(text: &str, variables: &[String]) -> Result<ExponentVector> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(Error::Parse("empty monomial".into()));
    }
    if trimmed == "1" {
        return Ok(ExponentVector::zeros(variables.len()));
    }
    let mut entries = vec![0u32; variables.len()];
    for factor in trimmed.split('*') {
        let factor = factor.trim();
        if factor.is_empty() {
            return Err(Error::Parse(format!(
                "empty factor in monomial `{}`",
                trimmed
            )));
        }
        let (name, exponent) = match factor.split_once('^') {
            None => (factor, 1u32),
            Some((name, exp_text)) => {
                let exp_text = exp_text.trim();
                let exponent: i64 = exp_text.parse().map_err(|_| {
                    Error::Parse(format!(
                        "`{}` is not a valid exponent in `{}`",
                        exp_text, factor
                    ))
                })?;
                if exponent < 1 {
                    return Err(Error::Parse(format!(
                        "exponent must be at least 1, got `{}` in `{}`",
                        exponent, factor
                    )));
                }
                let exponent = u32::try_from(exponent)
                    .map_err(|_| Error::Parse(format!("exponent `{}` is too large", exp_text)))?;
                (name.trim(), exponent)
            }
        };
        let index = variables
            .iter()
            .position(|v| v == name)
            .ok_or_else(|| Error::Parse(format!("unknown variable `{}`", name)))?;
        entries[index] += exponent;
    }
    Ok(ExponentVector::new(entries))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vars(names: &[&str]) -> Vec<String> {
        names.iter().map(|s| s.to_string()).collect()
    }

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    #[test]
    fn parse_basic() {
        let v = vars(&["x", "y", "z"]);
        assert_eq!(parse_monomial("x*y^2", &v).unwrap(), ev(&[1, 2, 0]));
        assert_eq!(parse_monomial("1", &v).unwrap(), ev(&[0, 0, 0]));
    }

    #[test]
    fn parse_accumulates_repeats() {
        let v = vars(&["x", "y"]);
        assert_eq!(parse_monomial("x^2*x", &v).unwrap(), ev(&[3, 0]));
    }

    #[test]
    fn parse_errors_name_the_token() {
        let v = vars(&["x", "y"]);
        let err = parse_monomial("x*q", &v).unwrap_err();
        assert!(err.to_string().contains("`q`"));
        let err = parse_monomial("x^0", &v).unwrap_err();
        assert!(err.to_string().contains("`0`"));
        let err = parse_monomial("x^-2", &v).unwrap_err();
        assert!(err.to_string().contains("-2"));
        assert!(parse_monomial("x**y", &v).is_err());
        assert!(parse_monomial("x^", &v).is_err());
        assert!(parse_monomial("", &v).is_err());
    }

    #[test]
    fn minimalize_drops_dominated() {
        let out = minimalize(vec![ev(&[2, 0]), ev(&[3, 0]), ev(&[0, 1])]).unwrap();
        assert_eq!(out, vec![ev(&[0, 1]), ev(&[2, 0])]);
    }

    #[test]
    fn minimalize_empty_and_antichain() {
        assert_eq!(minimalize(vec![]).unwrap(), vec![]);
        let antichain = vec![ev(&[1, 1]), ev(&[2, 0]), ev(&[0, 2])];
        let out = minimalize(antichain.clone()).unwrap();
        assert_eq!(out.len(), 3);
        for g in &antichain {
            assert!(out.contains(g));
        }
    }

    #[test]
    fn minimalize_rejects_mixed_dims() {
        assert!(minimalize(vec![ev(&[1]), ev(&[1, 2])]).is_err());
    }

    #[test]
    fn quotient_examples() {
        // (x^2*y, y^3) : x*y = (x, y^2)
        let i = MonomialIdeal::parse(&["x", "y"], &["x^2*y", "y^3"]).unwrap();
        let q = i.quotient_by_monomial(&ev(&[1, 1])).unwrap();
        assert_eq!(q, MonomialIdeal::parse(&["x", "y"], &["x", "y^2"]).unwrap());

        // I : 1 = I
        assert_eq!(i.quotient_by_monomial(&ev(&[0, 0])).unwrap(), i);

        // (x) : x = (1)
        let principal = MonomialIdeal::parse(&["x", "y"], &["x"]).unwrap();
        let q = principal.quotient_by_monomial(&ev(&[1, 0])).unwrap();
        assert!(q.is_unit());
    }

    #[test]
    fn quotient_matches_membership_shift() {
        // contains(Q, v) == contains(I, v + m) on a box.
        let i = MonomialIdeal::parse(&["x", "y"], &["x^3*y", "x*y^2", "y^4"]).unwrap();
        let m = ev(&[2, 1]);
        let q = i.quotient_by_monomial(&m).unwrap();
        for a in 0..6 {
            for b in 0..6 {
                let v = ev(&[a, b]);
                assert_eq!(
                    q.contains_monomial(&v).unwrap(),
                    i.contains_monomial(&v.plus(&m)).unwrap()
                );
            }
        }
    }

    #[test]
    fn product_examples() {
        let m = MonomialIdeal::parse(&["x", "y"], &["x", "y"]).unwrap();
        let sq = m.product(&m).unwrap();
        assert_eq!(
            sq,
            MonomialIdeal::parse(&["x", "y"], &["x^2", "x*y", "y^2"]).unwrap()
        );

        let unit = MonomialIdeal::unit(vec!["x", "y"]).unwrap();
        assert_eq!(m.product(&unit).unwrap(), m);

        let zero = MonomialIdeal::zero(vec!["x", "y"]).unwrap();
        assert!(m.product(&zero).unwrap().is_zero());
    }

    #[test]
    fn membership_examples() {
        let i = MonomialIdeal::parse(&["x", "y"], &["x^2", "y^3"]).unwrap();
        assert!(i.contains_monomial(&ev(&[3, 0])).unwrap());
        assert!(!i.contains_monomial(&ev(&[1, 2])).unwrap());
        let unit = MonomialIdeal::unit(vec!["x", "y"]).unwrap();
        assert!(unit.contains_monomial(&ev(&[0, 0])).unwrap());
        assert!(unit.contains_monomial(&ev(&[5, 7])).unwrap());
    }

    #[test]
    fn unit_normalizes_through_minimalize() {
        let i = MonomialIdeal::parse(&["x", "y"], &["x^2", "1", "y"]).unwrap();
        assert!(i.is_unit());
        assert_eq!(i.generators().len(), 1);
    }

    #[test]
    fn canonical_order_is_graded_lex() {
        let i = MonomialIdeal::parse(&["x", "y", "z", "w"], &["x*z", "y", "z^2", "z*w"]).unwrap();
        assert_eq!(i.generator_strings(), vec!["y", "z*w", "z^2", "x*z"]);
        assert_eq!(i.to_string(), "y, z*w, z^2, x*z");
    }

    #[test]
    fn display_unit_and_zero() {
        assert_eq!(MonomialIdeal::unit(vec!["x"]).unwrap().to_string(), "1");
        assert_eq!(MonomialIdeal::zero(vec!["x"]).unwrap().to_string(), "0");
    }

    #[test]
    fn rejects_duplicate_variables() {
        assert!(MonomialIdeal::parse(&["x", "x"], &["x"]).is_err());
    }

    #[test]
    fn dimension_mismatches_are_errors() {
        let i = MonomialIdeal::parse(&["x", "y"], &["x^2", "y^3"]).unwrap();
        assert!(matches!(
            i.contains_monomial(&ev(&[1])),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(i.quotient_by_monomial(&ev(&[1, 0, 0])).is_err());

        let other_vars = MonomialIdeal::parse(&["x", "z"], &["x"]).unwrap();
        assert!(i.product(&other_vars).is_err());
    }
}

//! Multiplier ideals, thresholds, and jumping numbers of monomial ideals.
//!
//! Everything here rests on Howald's description of multiplier ideals of
//! monomial ideals: `x^v` lies in `J(I^c)` exactly when `v + (1,...,1)` is
//! interior to `c * Newt(I)` relative to the nonnegative orthant. The
//! generator-based route computes the minimal lattice points of the scaled
//! interior system and divides out `x^(1,...,1)` as an ideal quotient; the
//! membership route tests the inequalities directly and serves as an
//! independent oracle for the first.
//!
//! # Conventions
//!
//! - The threshold of a monomial `x^v` is `min { c : x^v not in J(I^c) }`,
//!   the minimum of `normal . (v + 1) / offset` over facets with nonzero
//!   offset; the facets attaining it are reported as witnesses.
//! - The log canonical threshold is the threshold of `1 = x^0`, and equals
//!   the first jumping number.
//! - A jumping number is a `c` with `J(I^c) != J(I^(c - eps))` for all
//!   `eps > 0`. Candidates are the facet values `normal . w / offset` with
//!   `w >= (1,...,1)`; each is confirmed by comparing full multiplier ideals
//!   against a midpoint below it, since a value suggested by one facet can
//!   fail to jump when another facet dominates.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::ideal::{ExponentVector, MonomialIdeal};
use crate::interval::Interval;
use crate::newton::{Facet, NewtonPolyhedron};
use crate::rational::{floor_int, rational_int, Rational};

/// A finite monomial threshold: the value together with every facet of the
/// Newton polyhedron imposing the nonmembership at that value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdResult {
    pub value: Rational,
    pub witnesses: Vec<Facet>,
}

/// Threshold of a monomial against an ideal. The threshold is infinite
/// exactly when the ideal is the unit ideal (its Newton polyhedron is the
/// whole orthant, so no facet can impose nonmembership).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Threshold {
    Finite(ThresholdResult),
    Infinite,
}

/// Jumping numbers in a query interval, paired with the multiplier ideals
/// at those values. The ideals are strictly decreasing under inclusion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JumpingReport {
    pub numbers: Vec<Rational>,
    pub ideals: Vec<MonomialIdeal>,
}

/// The multiplier ideal `J(I^c)` of a nonzero monomial ideal.
///
/// Computed as the quotient `( x^v : qAv >= b' ) : x^(1,...,1)` over the
/// scaled interior system of the Newton polyhedron.
pub fn multiplier_ideal(ideal: &MonomialIdeal, c: &Rational) -> Result<MonomialIdeal> {
    let poly = polyhedron_of(ideal)?;
    multiplier_ideal_from(&poly, ideal, c)
}

/// Membership test `x^v in J(I^c)` by the direct inequality route:
/// `v + (1,...,1)` must satisfy every row of the scaled system.
pub fn in_multiplier_ideal(
    ideal: &MonomialIdeal,
    v: &ExponentVector,
    c: &Rational,
) -> Result<bool> {
    let poly = polyhedron_of(ideal)?;
    let system = poly.scale(c)?;
    system.satisfies(&v.plus_ones())
}

/// The threshold `min { c : x^v not in J(I^c) }` with its witness facets.
pub fn threshold_of_monomial(ideal: &MonomialIdeal, v: &ExponentVector) -> Result<Threshold> {
    let poly = polyhedron_of(ideal)?;
    if v.dim() != ideal.num_vars() {
        return Err(Error::DimensionMismatch {
            expected: ideal.num_vars(),
            found: v.dim(),
        });
    }
    let shifted = v.plus_ones();
    let mut best: Option<Rational> = None;
    let mut witnesses: Vec<Facet> = Vec::new();
    for facet in poly.interior_facets() {
        let value = Rational::new(facet.eval(&shifted), facet.offset().clone());
        match &best {
            Some(current) if &value > current => {}
            Some(current) if &value == current => witnesses.push(facet.clone()),
            _ => {
                best = Some(value);
                witnesses = vec![facet.clone()];
            }
        }
    }
    Ok(match best {
        Some(value) => Threshold::Finite(ThresholdResult { value, witnesses }),
        None => Threshold::Infinite,
    })
}

/// The log canonical threshold: the threshold of `1 = x^0`, equivalently the
/// smallest positive jumping number. Errors on the unit ideal, whose
/// threshold is infinite.
pub fn lct(ideal: &MonomialIdeal) -> Result<Rational> {
    match threshold_of_monomial(ideal, &ExponentVector::zeros(ideal.num_vars()))? {
        Threshold::Finite(result) => Ok(result.value),
        Threshold::Infinite => Err(Error::UnitIdeal),
    }
}

/// All jumping numbers of `ideal` in `interval`, with their multiplier
/// ideals.
///
/// Candidates are generated from every facet with nonzero offset and
/// confirmed by an ideal comparison at a midpoint below the candidate, so
/// values that do not actually jump are discarded.
pub fn jumping_numbers(ideal: &MonomialIdeal, interval: &Interval) -> Result<JumpingReport> {
    let poly = polyhedron_of(ideal)?;
    if poly.interior_facets().next().is_none() {
        return Err(Error::UnitIdeal);
    }

    // Candidate values up to hi from all facets, kept below lo as well so
    // that midpoints are always anchored at the previous candidate.
    let mut candidates: BTreeSet<Rational> = BTreeSet::new();
    for facet in poly.interior_facets() {
        facet_candidate_values(facet, interval.hi(), &mut candidates);
    }

    let mut numbers = Vec::new();
    let mut ideals = Vec::new();
    let mut prev = Rational::zero();
    let two = rational_int(2);
    for value in candidates {
        if interval.contains(&value) {
            let mid = (&prev + &value) / &two;
            let at_value = multiplier_ideal_from(&poly, ideal, &value)?;
            let just_below = multiplier_ideal_from(&poly, ideal, &mid)?;
            if at_value != just_below {
                numbers.push(value.clone());
                ideals.push(at_value);
            }
        }
        prev = value;
    }
    Ok(JumpingReport { numbers, ideals })
}

/// Computes `J(I^c)` for large `c` through the periodicity
/// `J(I^c) = I * J(I^(c-1))`, stepping down from `c` until the exponent
/// falls below `base`. Requires `c >= base >= n` (the number of variables),
/// which keeps every step inside the range where the periodicity holds.
pub fn skoda_extend(ideal: &MonomialIdeal, c: &Rational, base: &Rational) -> Result<MonomialIdeal> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let n = rational_int(ideal.num_vars() as i64);
    if base < &n {
        return Err(Error::SkodaRange {
            requirement: "base >= number of variables",
            found: format!("base = {}, n = {}", base, ideal.num_vars()),
        });
    }
    if c < base {
        return Err(Error::SkodaRange {
            requirement: "c >= base",
            found: format!("c = {}, base = {}", c, base),
        });
    }
    let steps_int = (c - base).ceil().to_integer();
    let steps = steps_int
        .to_u32()
        .expect("Skoda step count exceeds supported scale");
    let inner = multiplier_ideal(ideal, &(c - rational_int(steps_int)))?;
    ideal.pow(steps)?.product(&inner)
}

fn polyhedron_of(ideal: &MonomialIdeal) -> Result<NewtonPolyhedron> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    NewtonPolyhedron::from_generators(ideal.generators())
}

fn multiplier_ideal_from(
    poly: &NewtonPolyhedron,
    ideal: &MonomialIdeal,
    c: &Rational,
) -> Result<MonomialIdeal> {
    let system = poly.scale(c)?;
    let interior = MonomialIdeal::new(ideal.variables().to_vec(), system.minimal_generators())?;
    interior.quotient_by_monomial(&ExponentVector::ones(ideal.num_vars()))
}

/// Inserts every value `normal . w / offset` with `w >= (1,...,1)` integer
/// and value at most `hi`.
///
/// Coordinates with zero normal entry do not affect the value and are fixed
/// at one, leaving the achievable numerators `m + s` where `m` is the sum of
/// the positive normal entries and `s` ranges over nonnegative integer
/// combinations of those entries (a coin-change reachability set).
fn facet_candidate_values(facet: &Facet, hi: &Rational, out: &mut BTreeSet<Rational>) {
    let offset = facet.offset().clone();
    debug_assert!(offset.is_positive());
    let cap = floor_int(&(hi * Rational::from_integer(offset.clone())));
    let positive: Vec<usize> = facet
        .normal()
        .iter()
        .map(|a| {
            a.to_usize()
                .expect("facet normal entry exceeds supported scale")
        })
        .filter(|&a| a > 0)
        .collect();
    let min_total: usize = positive.iter().sum();
    let cap = match cap.to_usize() {
        Some(cap) if cap >= min_total => cap,
        _ => return,
    };

    let slack = cap - min_total;
    let mut reachable = vec![false; slack + 1];
    reachable[0] = true;
    for &coin in &positive {
        for t in coin..=slack {
            if reachable[t - coin] {
                reachable[t] = true;
            }
        }
    }
    for (t, ok) in reachable.iter().enumerate() {
        if *ok {
            out.insert(Rational::new(BigInt::from(min_total + t), offset.clone()));
        }
    }
}

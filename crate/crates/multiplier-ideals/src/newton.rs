//! Newton polyhedra of monomial ideals and their scaled interior systems.
//!
//! For a monomial ideal `I` the Newton polyhedron `Newt(I)` is the convex
//! hull of the generator exponents plus the nonnegative orthant. It is
//! described by an irredundant system `A v >= b` with primitive nonnegative
//! integer rows ([`Facet`]s). For a rational `c = p/q >= 0`, the lattice
//! points interior to `c * Newt(I)` (relative to the orthant) are exactly
//! the solutions of the modified system `q A v >= b'` where `b'_i = p b_i + 1`
//! when `b_i != 0` and `b'_i = 0` otherwise ([`ScaledSystem`]); the strict
//! inequality on scaled facets is absorbed by the `+1` because everything is
//! integral.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hull;
use crate::ideal::{minimalize, ExponentVector};
use crate::rational::Rational;

/// One irredundant inequality `normal . v >= offset` of a Newton polyhedron.
/// The normal is a primitive vector with nonnegative entries; coordinate
/// facets have `offset = 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facet {
    normal: Vec<BigInt>,
    offset: BigInt,
}

impl Facet {
    pub fn new(normal: Vec<BigInt>, offset: BigInt) -> Self {
        debug_assert!(normal.iter().any(|a| !a.is_zero()));
        debug_assert!(normal.iter().all(|a| !a.is_negative()));
        debug_assert!(!offset.is_negative());
        Facet { normal, offset }
    }

    pub fn normal(&self) -> &[BigInt] {
        &self.normal
    }

    pub fn offset(&self) -> &BigInt {
        &self.offset
    }

    pub fn dim(&self) -> usize {
        self.normal.len()
    }

    /// `normal . v`.
    pub fn eval(&self, v: &ExponentVector) -> BigInt {
        self.normal
            .iter()
            .zip(v.entries())
            .map(|(a, &e)| a * e)
            .sum()
    }

    /// True when this is a coordinate halfspace `v_j >= 0`.
    pub fn is_coordinate(&self) -> bool {
        self.offset.is_zero()
    }

    /// Renders e.g. `2x + 2y + w >= 2` over the given variable names.
    pub fn render(&self, variables: &[String]) -> String {
        let mut terms = Vec::new();
        for (name, a) in variables.iter().zip(&self.normal) {
            if a.is_zero() {
                continue;
            }
            if a == &BigInt::from(1) {
                terms.push(name.clone());
            } else {
                terms.push(format!("{}{}", a, name));
            }
        }
        format!("{} >= {}", terms.join(" + "), self.offset)
    }
}

impl fmt::Display for Facet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.normal.iter().map(|a| a.to_string()).collect();
        write!(f, "({}) >= {}", entries.join(", "), self.offset)
    }
}

/// Irredundant facet description of `conv(gens) + R^n_{>=0}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonPolyhedron {
    dimension: usize,
    facets: Vec<Facet>,
    source_generators: Vec<ExponentVector>,
}

impl NewtonPolyhedron {
    /// Computes the irredundant facet system of the Newton polyhedron of the
    /// ideal generated by `gens`.
    ///
    /// Errors on an empty generator set (the zero ideal has no Newton
    /// polyhedron) and on mixed dimensions.
    pub fn from_generators(gens: &[ExponentVector]) -> Result<Self> {
        let first = gens.first().ok_or(Error::ZeroIdeal)?;
        let dimension = first.dim();
        if dimension == 0 {
            return Err(Error::MixedDimensions);
        }
        // Duplicates and non-minimal generators do not change the hull.
        let minimal = minimalize(gens.to_vec())?;
        let mut source_generators = gens.to_vec();
        source_generators.sort();
        source_generators.dedup();

        let facets = hull::facet_system(dimension, &minimal)
            .into_iter()
            .map(|(normal, offset)| Facet::new(normal, offset))
            .collect();
        Ok(NewtonPolyhedron {
            dimension,
            facets,
            source_generators,
        })
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// Facets in canonical order (lexicographic by normal, then offset).
    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Facets with nonzero offset; these are the ones that carry threshold
    /// and jumping-number information.
    pub fn interior_facets(&self) -> impl Iterator<Item = &Facet> {
        self.facets.iter().filter(|f| !f.is_coordinate())
    }

    pub fn source_generators(&self) -> &[ExponentVector] {
        &self.source_generators
    }

    /// The scaled integer system whose solutions are the lattice points of
    /// `Int(c * Newt)` relative to the orthant. Errors on negative `c`.
    pub fn scale(&self, c: &Rational) -> Result<ScaledSystem> {
        if c.is_negative() {
            return Err(Error::NegativeExponent(c.to_string()));
        }
        let p = c.numer();
        let q = c.denom();
        let mut rows = Vec::with_capacity(self.facets.len());
        let mut offsets = Vec::with_capacity(self.facets.len());
        for facet in &self.facets {
            rows.push(facet.normal.iter().map(|a| a * q).collect::<Vec<_>>());
            let b = &facet.offset;
            offsets.push(if b.is_zero() {
                BigInt::zero()
            } else {
                p * b + 1
            });
        }
        let mirror = SystemMirror::build(&rows, &offsets);
        Ok(ScaledSystem {
            dimension: self.dimension,
            rows,
            offsets,
            mirror,
        })
    }
}

/// The integer system `q A v >= b'` cutting out the interior lattice points
/// of `c * Newt(I)`. Rows are aligned with the facets of the polyhedron it
/// was scaled from.
///
/// When every row entry and offset fits in an `i64`, a machine-integer
/// mirror of the system is kept alongside and used for membership tests and
/// enumeration; the products and partial sums then fit in `i128` with room
/// to spare, so the fast path is still exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaledSystem {
    dimension: usize,
    rows: Vec<Vec<BigInt>>,
    offsets: Vec<BigInt>,
    mirror: Option<SystemMirror>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct SystemMirror {
    rows: Vec<Vec<i128>>,
    offsets: Vec<i128>,
}

impl SystemMirror {
    fn build(rows: &[Vec<BigInt>], offsets: &[BigInt]) -> Option<Self> {
        let narrow = |value: &BigInt| value.to_i64().map(i128::from);
        let rows = rows
            .iter()
            .map(|row| row.iter().map(narrow).collect::<Option<Vec<_>>>())
            .collect::<Option<Vec<_>>>()?;
        let offsets = offsets.iter().map(narrow).collect::<Option<Vec<_>>>()?;
        Some(SystemMirror { rows, offsets })
    }

    fn satisfies(&self, v: &ExponentVector) -> bool {
        self.rows.iter().zip(&self.offsets).all(|(row, b)| {
            let dot: i128 = row
                .iter()
                .zip(v.entries())
                .map(|(a, &e)| a * i128::from(e))
                .sum();
            dot >= *b
        })
    }
}

impl ScaledSystem {
    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn rows(&self) -> &[Vec<BigInt>] {
        &self.rows
    }

    pub fn offsets(&self) -> &[BigInt] {
        &self.offsets
    }

    /// True iff `row . v >= b'` for every row.
    pub fn satisfies(&self, v: &ExponentVector) -> Result<bool> {
        if v.dim() != self.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: v.dim(),
            });
        }
        if let Some(mirror) = &self.mirror {
            return Ok(mirror.satisfies(v));
        }
        Ok(self
            .rows
            .iter()
            .zip(&self.offsets)
            .all(|(row, b)| dot(row, v) >= *b))
    }

    /// The componentwise-minimal nonnegative integer solutions. Their upward
    /// closure is the full solution set, which is upward closed because all
    /// row entries are nonnegative.
    ///
    /// A minimal solution `w` with `w_j > 0` must break some row `i` when
    /// `w_j` is decremented, which forces
    /// `w_j <= ceil(b'_i / row_i[j])`; enumerating the box given by these
    /// per-coordinate bounds (pruned: once a partial vector with trailing
    /// zeros satisfies every row, all of its extensions are dominated) and
    /// minimalizing is complete.
    pub fn minimal_generators(&self) -> Vec<ExponentVector> {
        let n = self.dimension;
        let mut bounds = vec![0u32; n];
        for j in 0..n {
            let mut best = BigInt::zero();
            for (row, b) in self.rows.iter().zip(&self.offsets) {
                if row[j].is_positive() && b.is_positive() {
                    let bound = b.div_ceil(&row[j]);
                    if bound > best {
                        best = bound;
                    }
                }
            }
            bounds[j] = best
                .to_u32()
                .expect("enumeration bound exceeds supported scale");
        }

        let mut current = vec![0u32; n];
        let mut found: Vec<ExponentVector> = Vec::new();
        if let Some(mirror) = &self.mirror {
            let mut partial = vec![0i128; mirror.rows.len()];
            enumerate_i128(
                mirror,
                self.dimension,
                0,
                &bounds,
                &mut current,
                &mut partial,
                &mut found,
            );
        } else {
            let mut partial: Vec<BigInt> = vec![BigInt::zero(); self.rows.len()];
            self.enumerate(0, &bounds, &mut current, &mut partial, &mut found);
        }
        minimalize(found).expect("solutions share one dimension")
    }

    fn enumerate(
        &self,
        j: usize,
        bounds: &[u32],
        current: &mut Vec<u32>,
        partial: &mut Vec<BigInt>,
        found: &mut Vec<ExponentVector>,
    ) {
        if partial.iter().zip(&self.offsets).all(|(p, b)| p >= b) {
            // Entries at positions >= j are zero here; any extension is
            // dominated by this solution.
            found.push(ExponentVector::new(current.clone()));
            return;
        }
        if j == self.dimension {
            return;
        }
        if j + 1 == self.dimension {
            // Only the last coordinate is free, so the minimal completion is
            // forced: the largest per-row deficit, rounded up.
            let mut needed = BigInt::zero();
            for (p, (row, b)) in partial.iter().zip(self.rows.iter().zip(&self.offsets)) {
                let deficit = b - p;
                if deficit.is_positive() {
                    if row[j].is_zero() {
                        return;
                    }
                    let steps = deficit.div_ceil(&row[j]);
                    if steps > needed {
                        needed = steps;
                    }
                }
            }
            current[j] = needed.to_u32().expect("bounded by the enumeration bound");
            found.push(ExponentVector::new(current.clone()));
            current[j] = 0;
            return;
        }
        self.enumerate(j + 1, bounds, current, partial, found);
        for w in 1..=bounds[j] {
            current[j] = w;
            for (p, row) in partial.iter_mut().zip(&self.rows) {
                *p += &row[j];
            }
            self.enumerate(j + 1, bounds, current, partial, found);
        }
        // Undo this coordinate before returning to the caller.
        let w = current[j];
        if w > 0 {
            for (p, row) in partial.iter_mut().zip(&self.rows) {
                *p -= &row[j] * w;
            }
            current[j] = 0;
        }
    }
}

fn dot(row: &[BigInt], v: &ExponentVector) -> BigInt {
    row.iter().zip(v.entries()).map(|(a, &e)| a * e).sum()
}

#[allow(clippy::too_many_arguments)]
fn enumerate_i128(
    mirror: &SystemMirror,
    dimension: usize,
    j: usize,
    bounds: &[u32],
    current: &mut Vec<u32>,
    partial: &mut Vec<i128>,
    found: &mut Vec<ExponentVector>,
) {
    if partial.iter().zip(&mirror.offsets).all(|(p, b)| p >= b) {
        found.push(ExponentVector::new(current.clone()));
        return;
    }
    if j == dimension {
        return;
    }
    if j + 1 == dimension {
        let mut needed: i128 = 0;
        for (p, (row, b)) in partial.iter().zip(mirror.rows.iter().zip(&mirror.offsets)) {
            let deficit = b - p;
            if deficit > 0 {
                if row[j] == 0 {
                    return;
                }
                needed = needed.max((deficit + row[j] - 1) / row[j]);
            }
        }
        current[j] = u32::try_from(needed).expect("bounded by the enumeration bound");
        found.push(ExponentVector::new(current.clone()));
        current[j] = 0;
        return;
    }
    enumerate_i128(mirror, dimension, j + 1, bounds, current, partial, found);
    for w in 1..=bounds[j] {
        current[j] = w;
        for (p, row) in partial.iter_mut().zip(&mirror.rows) {
            *p += row[j];
        }
        enumerate_i128(mirror, dimension, j + 1, bounds, current, partial, found);
    }
    let w = current[j];
    if w > 0 {
        for (p, row) in partial.iter_mut().zip(&mirror.rows) {
            *p -= row[j] * i128::from(w);
        }
        current[j] = 0;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rational, rational_int};

    fn ev(entries: &[u32]) -> ExponentVector {
        ExponentVector::new(entries.to_vec())
    }

    fn big(entries: &[i64]) -> Vec<BigInt> {
        entries.iter().map(|&a| BigInt::from(a)).collect()
    }

    fn newt(gens: &[&[u32]]) -> NewtonPolyhedron {
        let gens: Vec<ExponentVector> = gens.iter().map(|g| ev(g)).collect();
        NewtonPolyhedron::from_generators(&gens).unwrap()
    }

    #[test]
    fn cusp_facets() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        assert_eq!(
            p.facets(),
            &[
                Facet::new(big(&[0, 1]), BigInt::from(0)),
                Facet::new(big(&[1, 0]), BigInt::from(0)),
                Facet::new(big(&[3, 2]), BigInt::from(6)),
            ]
        );
    }

    #[test]
    fn zero_ideal_rejected() {
        assert!(matches!(
            NewtonPolyhedron::from_generators(&[]),
            Err(Error::ZeroIdeal)
        ));
    }

    #[test]
    fn power_of_maximal_ideal_is_one_simplex_facet() {
        // All generators of (x,y,z,w)^5 lie on the hyperplane sum = 5, a
        // maximally degenerate hull input.
        let mut gens = Vec::new();
        for a in 0..=5u32 {
            for b in 0..=(5 - a) {
                for c in 0..=(5 - a - b) {
                    gens.push(ev(&[a, b, c, 5 - a - b - c]));
                }
            }
        }
        let p = NewtonPolyhedron::from_generators(&gens).unwrap();
        assert_eq!(
            p.facets(),
            &[
                Facet::new(big(&[0, 0, 0, 1]), BigInt::from(0)),
                Facet::new(big(&[0, 0, 1, 0]), BigInt::from(0)),
                Facet::new(big(&[0, 1, 0, 0]), BigInt::from(0)),
                Facet::new(big(&[1, 0, 0, 0]), BigInt::from(0)),
                Facet::new(big(&[1, 1, 1, 1]), BigInt::from(5)),
            ]
        );
    }

    #[test]
    fn four_variable_ideal_facets() {
        // (x*y, x*z, y*z, y*w, z*w^2) in four variables.
        let p = newt(&[
            &[1, 1, 0, 0],
            &[1, 0, 1, 0],
            &[0, 1, 1, 0],
            &[0, 1, 0, 1],
            &[0, 0, 1, 2],
        ]);
        let f1 = Facet::new(big(&[2, 2, 1, 1]), BigInt::from(3));
        let f2 = Facet::new(big(&[2, 2, 0, 1]), BigInt::from(2));
        assert!(p.facets().contains(&f1));
        assert!(p.facets().contains(&f2));
    }

    #[test]
    fn scale_by_one_adds_one_to_offsets() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let s = p.scale(&rational_int(1)).unwrap();
        assert_eq!(s.rows(), &[big(&[0, 1]), big(&[1, 0]), big(&[3, 2])]);
        assert_eq!(s.offsets(), &big(&[0, 0, 7]));
    }

    #[test]
    fn scale_by_seven_thirds() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let s = p.scale(&rational(7, 3)).unwrap();
        assert_eq!(s.rows(), &[big(&[0, 3]), big(&[3, 0]), big(&[9, 6])]);
        assert_eq!(s.offsets(), &big(&[0, 0, 43]));
    }

    #[test]
    fn scale_by_zero_keeps_interiority_only() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let s = p.scale(&rational_int(0)).unwrap();
        assert_eq!(s.offsets(), &big(&[0, 0, 1]));
        assert!(p.scale(&rational(-1, 2)).is_err());
    }

    #[test]
    fn minimal_generators_cusp() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let s = p.scale(&rational_int(1)).unwrap();
        assert_eq!(
            s.minimal_generators(),
            vec![ev(&[1, 2]), ev(&[2, 1]), ev(&[3, 0]), ev(&[0, 4])]
        );
    }

    #[test]
    fn minimal_generators_maximal_ideal() {
        let p = newt(&[&[1, 0], &[0, 1]]);
        let s = p.scale(&rational_int(1)).unwrap();
        assert_eq!(
            s.minimal_generators(),
            vec![ev(&[0, 2]), ev(&[1, 1]), ev(&[2, 0])]
        );
    }

    #[test]
    fn minimal_generators_at_zero() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let s = p.scale(&rational_int(0)).unwrap();
        assert_eq!(s.minimal_generators(), vec![ev(&[0, 1]), ev(&[1, 0])]);
    }

    #[test]
    fn satisfies_is_the_row_test() {
        let p = newt(&[&[2, 0], &[0, 3]]);
        let s = p.scale(&rational_int(1)).unwrap();
        assert!(s.satisfies(&ev(&[1, 2])).unwrap());
        assert!(!s.satisfies(&ev(&[1, 1])).unwrap());
        let s0 = p.scale(&rational_int(0)).unwrap();
        assert!(s0.satisfies(&ev(&[1, 0])).unwrap());
        assert!(s.satisfies(&ev(&[1])).is_err());
    }

    #[test]
    fn facet_render() {
        let f = Facet::new(big(&[2, 2, 0, 1]), BigInt::from(2));
        let vars: Vec<String> = ["x", "y", "z", "w"].iter().map(|s| s.to_string()).collect();
        assert_eq!(f.render(&vars), "2x + 2y + w >= 2");
    }
}

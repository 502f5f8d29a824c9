//! Shared test utilities: seeded random ideals and independent brute-force
//! oracles. Everything here stays deliberately separate from the library's
//! computation paths so it can serve as a cross-check.

#![allow(dead_code)]

use multiplier_ideals::{ExponentVector, Facet, MonomialIdeal, Rational};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub fn rat(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

pub fn rint(k: i64) -> Rational {
    Rational::from_integer(BigInt::from(k))
}

pub fn ev(entries: &[u32]) -> ExponentVector {
    ExponentVector::new(entries.to_vec())
}

const NAMES: [&str; 4] = ["x", "y", "z", "w"];

/// A random nonzero, non-unit monomial ideal in `n` variables with small
/// exponents; generators are minimalized by the constructor.
pub fn random_ideal(rng: &mut ChaCha8Rng, n: usize, max_exp: u32) -> MonomialIdeal {
    assert!((2..=4).contains(&n));
    loop {
        let gen_count = rng.gen_range(1..=6);
        let gens: Vec<ExponentVector> = (0..gen_count)
            .map(|_| ExponentVector::new((0..n).map(|_| rng.gen_range(0..=max_exp)).collect()))
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            continue;
        }
        let ideal = MonomialIdeal::new(NAMES[..n].to_vec(), gens).unwrap();
        if !ideal.is_unit() {
            return ideal;
        }
    }
}

/// Componentwise max of the generators of all given ideals, plus a margin:
/// a bounding box for membership comparisons.
pub fn bounding_box(ideals: &[&MonomialIdeal], margin: u32) -> Vec<u32> {
    let n = ideals[0].num_vars();
    let mut bounds = vec![0u32; n];
    for ideal in ideals {
        for g in ideal.generators() {
            for (b, &e) in bounds.iter_mut().zip(g.entries()) {
                *b = (*b).max(e);
            }
        }
    }
    for b in &mut bounds {
        *b += margin;
    }
    bounds
}

/// All lattice points in the box `[0, bounds[0]] x ... x [0, bounds[n-1]]`.
pub fn box_points(bounds: &[u32]) -> Vec<ExponentVector> {
    let mut out = Vec::new();
    let mut current = vec![0u32; bounds.len()];
    loop {
        out.push(ExponentVector::new(current.clone()));
        let mut j = 0;
        loop {
            if j == bounds.len() {
                return out;
            }
            if current[j] < bounds[j] {
                current[j] += 1;
                break;
            }
            current[j] = 0;
            j += 1;
        }
    }
}

/// Evaluates a facet at a rational point.
pub fn facet_eval_q(facet: &Facet, point: &[Rational]) -> Rational {
    facet
        .normal()
        .iter()
        .zip(point)
        .map(|(a, x)| Rational::from_integer(a.clone()) * x)
        .sum()
}

pub fn q_point(v: &ExponentVector) -> Vec<Rational> {
    v.entries()
        .iter()
        .map(|&e| Rational::from_integer(BigInt::from(e)))
        .collect()
}

/// Exact membership test `point in conv(gens) + R^n_{>=0}` by
/// Fourier-Motzkin elimination on the convex-combination linear program:
/// feasibility of `lambda >= 0`, `sum lambda = 1`,
/// `sum lambda_i gens_i <= point`. Wholly independent of the facet engine.
pub fn hull_member(gens: &[ExponentVector], point: &[Rational]) -> bool {
    let m = gens.len();
    let n = point.len();
    assert!(m > 0);
    // Substitute lambda_m = 1 - mu_1 - ... - mu_(m-1); constraints are
    // row . mu <= rhs over mu in Q^(m-1).
    let vars = m - 1;
    let last = gens[m - 1].entries();
    let mut constraints: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for i in 0..vars {
        let mut row = vec![Rational::zero(); vars];
        row[i] = -Rational::one();
        constraints.push((row, Rational::zero()));
    }
    constraints.push((vec![Rational::one(); vars], Rational::one()));
    for j in 0..n {
        let row: Vec<Rational> = (0..vars)
            .map(|i| rint(i64::from(gens[i].entries()[j]) - i64::from(last[j])))
            .collect();
        let rhs = &point[j] - rint(i64::from(last[j]));
        constraints.push((row, rhs));
    }

    for var in (0..vars).rev() {
        let mut kept: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let mut upper: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let mut lower: Vec<(Vec<Rational>, Rational)> = Vec::new();
        for (row, rhs) in constraints {
            if row[var].is_zero() {
                kept.push((row, rhs));
            } else if row[var].is_positive() {
                upper.push((row, rhs));
            } else {
                lower.push((row, rhs));
            }
        }
        for (u_row, u_rhs) in &upper {
            for (l_row, l_rhs) in &lower {
                let a_u = u_row[var].clone();
                let a_l = l_row[var].clone();
                // (-a_l) * upper + a_u * lower has zero coefficient at var.
                let row: Vec<Rational> = u_row
                    .iter()
                    .zip(l_row)
                    .map(|(u, l)| -&a_l * u + &a_u * l)
                    .collect();
                let rhs = -&a_l * u_rhs + &a_u * l_rhs;
                kept.push((row, rhs));
            }
        }
        // Resolve variable-free rows now and dedupe the rest (FM can grow
        // quadratically per round).
        let mut next: Vec<(Vec<Rational>, Rational)> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for (row, rhs) in kept {
            if row.iter().all(Rational::is_zero) {
                if rhs.is_negative() {
                    return false;
                }
                continue;
            }
            let scale = row.iter().map(|c| c.abs()).max().expect("row is nonempty");
            let normalized_row: Vec<Rational> = row.iter().map(|c| c / &scale).collect();
            let normalized_rhs = &rhs / &scale;
            if seen.insert((normalized_row.clone(), normalized_rhs.clone())) {
                next.push((normalized_row, normalized_rhs));
            }
        }
        constraints = next;
    }
    constraints.iter().all(|(_, rhs)| !rhs.is_negative())
}

/// Test-side minimalization by pairwise divisibility, independent of the
/// library's implementation.
pub fn brute_minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<ExponentVector> = Vec::new();
    for g in &gens {
        if !gens.iter().any(|h| h != g && h.divides(g)) {
            out.push(g.clone());
        }
    }
    out
}

//! Facet enumeration for Newton polyhedra, in exact integer arithmetic.
//!
//! The polyhedron `conv(gens) + R^n_{>=0}` is homogenized to the cone
//! generated by `{(v, 1) : v in gens}` and `{(e_j, 0) : j = 1..n}` in
//! `R^{n+1}`. Its facets are the extreme rays of the dual cone, which are
//! computed by the incremental double description method: start from the
//! simplicial cone cut out by the coordinate rows plus one generator row,
//! then insert the remaining generator rows one at a time, splitting the
//! current rays and combining adjacent positive/negative pairs.
//!
//! The resulting rays `(a, a0)` with `a != 0` are exactly the irredundant
//! inequalities `a . v >= -a0` of the Newton polyhedron; the ray `(0, 1)`
//! is the hyperplane at infinity and is discarded by the caller.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::ideal::ExponentVector;

/// Bitmask over constraint indices; tracks which constraints are tight at a
/// ray.
#[derive(Clone, Debug, PartialEq, Eq)]
struct TightSet {
    blocks: Vec<u64>,
}

impl TightSet {
    fn new(capacity: usize) -> Self {
        TightSet {
            blocks: vec![0; capacity.div_ceil(64)],
        }
    }

    fn insert(&mut self, i: usize) {
        self.blocks[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &Self) -> Self {
        TightSet {
            blocks: self
                .blocks
                .iter()
                .zip(&other.blocks)
                .map(|(a, b)| a & b)
                .collect(),
        }
    }

    fn is_subset_of(&self, other: &Self) -> bool {
        self.blocks
            .iter()
            .zip(&other.blocks)
            .all(|(a, b)| a & !b == 0)
    }
}

#[derive(Clone, Debug)]
struct Ray {
    vector: Vec<BigInt>,
    tight: TightSet,
}

fn dot(row: &[BigInt], vector: &[BigInt]) -> BigInt {
    row.iter().zip(vector).map(|(a, b)| a * b).sum()
}

/// Divides the vector by the gcd of its entries.
fn make_primitive(vector: &mut [BigInt]) {
    let mut g = BigInt::zero();
    for entry in vector.iter() {
        g = g.gcd(entry);
    }
    if g > BigInt::one() {
        for entry in vector.iter_mut() {
            *entry = &*entry / &g;
        }
    }
}

fn recompute_tight(vector: &[BigInt], constraints: &[Vec<BigInt>], processed: usize) -> TightSet {
    let mut tight = TightSet::new(constraints.len());
    for (i, row) in constraints.iter().enumerate().take(processed) {
        if dot(row, vector).is_zero() {
            tight.insert(i);
        }
    }
    tight
}

/// Facets of `conv(gens) + R^n_{>=0}` as `(normal, offset)` pairs meaning
/// `normal . v >= offset`, each normal primitive with nonnegative entries.
///
/// `gens` must be nonempty with every vector of dimension `n`.
pub(crate) fn facet_system(n: usize, gens: &[ExponentVector]) -> Vec<(Vec<BigInt>, BigInt)> {
    assert!(
        !gens.is_empty(),
        "facet_system requires a nonempty generator set"
    );
    let dim = n + 1;

    // Constraint rows of the dual cone: coordinate rows first, then one row
    // (v, 1) per generator.
    let mut constraints: Vec<Vec<BigInt>> = Vec::with_capacity(n + gens.len());
    for j in 0..n {
        let mut row = vec![BigInt::zero(); dim];
        row[j] = BigInt::one();
        constraints.push(row);
    }
    for v in gens {
        let mut row: Vec<BigInt> = v.entries().iter().map(|&e| BigInt::from(e)).collect();
        row.push(BigInt::one());
        constraints.push(row);
    }
    let total = constraints.len();

    // Initial simplicial cone: coordinate rows plus the first generator row
    // (always linearly independent, with determinant 1). Its extreme rays
    // have the closed form below.
    let v0 = gens[0].entries();
    let mut rays: Vec<Ray> = Vec::with_capacity(dim);
    for j in 0..n {
        let mut vector = vec![BigInt::zero(); dim];
        vector[j] = BigInt::one();
        vector[n] = -BigInt::from(v0[j]);
        let mut tight = TightSet::new(total);
        for i in 0..n {
            if i != j {
                tight.insert(i);
            }
        }
        tight.insert(n); // the v0 row
        rays.push(Ray { vector, tight });
    }
    {
        let mut vector = vec![BigInt::zero(); dim];
        vector[n] = BigInt::one();
        let mut tight = TightSet::new(total);
        for i in 0..n {
            tight.insert(i);
        }
        rays.push(Ray { vector, tight });
    }

    // Insert the remaining generator rows.
    for k in (n + 1)..total {
        let row = constraints[k].clone();
        let signs: Vec<BigInt> = rays.iter().map(|r| dot(&row, &r.vector)).collect();

        if signs.iter().all(|s| !s.is_negative()) {
            for (ray, s) in rays.iter_mut().zip(&signs) {
                if s.is_zero() {
                    ray.tight.insert(k);
                }
            }
            continue;
        }

        let positive: Vec<usize> = (0..rays.len())
            .filter(|&i| signs[i].is_positive())
            .collect();
        let negative: Vec<usize> = (0..rays.len())
            .filter(|&i| signs[i].is_negative())
            .collect();

        let mut next: Vec<Ray> = Vec::new();
        for (i, ray) in rays.iter().enumerate() {
            if signs[i].is_positive() {
                next.push(ray.clone());
            } else if signs[i].is_zero() {
                let mut kept = ray.clone();
                kept.tight.insert(k);
                next.push(kept);
            }
        }

        for &p in &positive {
            for &m in &negative {
                if !adjacent(&rays, p, m) {
                    continue;
                }
                // s_p * ray_m - s_m * ray_p lies on the new hyperplane and in
                // the cone (both coefficients are positive).
                let mut vector: Vec<BigInt> = rays[p]
                    .vector
                    .iter()
                    .zip(&rays[m].vector)
                    .map(|(vp, vm)| &signs[p] * vm - &signs[m] * vp)
                    .collect();
                make_primitive(&mut vector);
                let tight = recompute_tight(&vector, &constraints, k + 1);
                next.push(Ray { vector, tight });
            }
        }

        next.sort_by(|a, b| a.vector.cmp(&b.vector));
        next.dedup_by(|a, b| a.vector == b.vector);
        rays = next;
    }

    let mut facets: Vec<(Vec<BigInt>, BigInt)> = Vec::new();
    for ray in rays {
        let normal = ray.vector[..n].to_vec();
        if normal.iter().all(Zero::is_zero) {
            // Hyperplane at infinity.
            debug_assert!(ray.vector[n].is_positive());
            continue;
        }
        let offset = -ray.vector[n].clone();
        debug_assert!(normal.iter().all(|a| !a.is_negative()));
        debug_assert!(!offset.is_negative());
        facets.push((normal, offset));
    }
    facets.sort();
    facets
}

/// Combinatorial adjacency: rays `p` and `m` span an edge iff no other ray
/// is tight at every constraint where both are tight.
fn adjacent(rays: &[Ray], p: usize, m: usize) -> bool {
    let common = rays[p].tight.intersection(&rays[m].tight);
    !rays
        .iter()
        .enumerate()
        .any(|(i, r)| i != p && i != m && common.is_subset_of(&r.tight))
}

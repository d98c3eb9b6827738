//! Recognising unimodular-affine images of `t·P₀`.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::family::p0;
use crate::geometry::{rat, rational_sqrt, Point, Polygon, Rational, UnimodularAffineMap};

/// `apply_map(scale(P₀, t), map)` equals the queried polygon.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceWitness {
    pub t: Rational,
    pub map: UnimodularAffineMap,
}

impl EquivalenceWitness {
    pub fn reconstruct(&self) -> Polygon {
        p0().scale(&self.t).expect("witness scale is positive").apply_map(&self.map)
    }

    pub fn holds_for(&self, p: &Polygon) -> bool {
        self.t.is_positive() && self.reconstruct() == *p
    }
}

/// Vertex correspondences: the three rotations, then the three reflections.
const CORRESPONDENCES: [[usize; 3]; 6] = [[0, 1, 2], [1, 2, 0], [2, 0, 1], [0, 2, 1], [2, 1, 0], [1, 0, 2]];

fn scale_factor(p: &Polygon) -> Option<Rational> {
    if !p.is_triangle() {
        return None;
    }
    // area(t·P₀) = (3/2)·t²
    rational_sqrt(&(p.area() * rat(2, 3)))
}

/// Solves `M·(s1 - s0) = q1 - q0`, `M·(s2 - s0) = q2 - q0` and keeps `M` if it
/// lies in GL₂(ℤ).
fn solve_correspondence(src: &[Point], dst: &[&Point]) -> Option<UnimodularAffineMap> {
    let s1 = src[1].sub(&src[0]);
    let s2 = src[2].sub(&src[0]);
    let d1 = dst[1].sub(dst[0]);
    let d2 = dst[2].sub(dst[0]);
    // M = D · S⁻¹ with S = [s1 s2], D = [d1 d2]
    let det = &s1.x * &s2.y - &s2.x * &s1.y;
    let inv = [[&s2.y / &det, -&s2.x / &det], [-&s1.y / &det, &s1.x / &det]];
    let entry = |r0: &Rational, r1: &Rational, col: usize| r0 * &inv[0][col] + r1 * &inv[1][col];
    let m = [[entry(&d1.x, &d2.x, 0), entry(&d1.x, &d2.x, 1)], [entry(&d1.y, &d2.y, 0), entry(&d1.y, &d2.y, 1)]];
    let mut ints = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            if !m[i][j].is_integer() {
                return None;
            }
            ints[i][j] = m[i][j].to_integer().to_i64()?;
        }
    }
    let linear = UnimodularAffineMap::new(ints, Point::from_ints(0, 0)).ok()?;
    let image = linear.apply_linear(&src[0]);
    UnimodularAffineMap::new(ints, dst[0].sub(&image)).ok()
}

fn witnesses(p: &Polygon, first_only: bool) -> Vec<EquivalenceWitness> {
    let Some(t) = scale_factor(p) else {
        return Vec::new();
    };
    let src = p0().scale(&t).expect("area is positive, so t > 0");
    let q = p.vertices();
    let mut out = Vec::new();
    for perm in CORRESPONDENCES {
        let dst = [&q[perm[0]], &q[perm[1]], &q[perm[2]]];
        if let Some(map) = solve_correspondence(src.vertices(), &dst) {
            let w = EquivalenceWitness { t: t.clone(), map };
            debug_assert!(w.holds_for(p));
            out.push(w);
            if first_only {
                break;
            }
        }
    }
    out
}

/// A witness that `p` is a unimodular-affine image of `t·P₀`, if one exists.
pub fn equiv_scaled_p0(p: &Polygon) -> Option<EquivalenceWitness> {
    witnesses(p, true).into_iter().next()
}

/// Every correspondence that yields a witness, in trial order.
pub fn all_scaled_p0_witnesses(p: &Polygon) -> Vec<EquivalenceWitness> {
    witnesses(p, false)
}

/// Deterministic pseudo-random element of GL₂(ℤ) ⋉ ℚ² with matrix entries
/// bounded by `size` in absolute value.
pub fn random_unimodular(seed: u64, size: u64) -> UnimodularAffineMap {
    let size = size.max(1) as i64;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut m = [[1i64, 0], [0, 1]];
    let steps = rng.random_range(1..=8);
    for _ in 0..steps {
        let c = rng.random_range(-size..=size);
        let next = match rng.random_range(0..4) {
            0 => [[m[0][0] + c * m[1][0], m[0][1] + c * m[1][1]], m[1]],
            1 => [m[0], [m[1][0] + c * m[0][0], m[1][1] + c * m[0][1]]],
            2 => [m[1], m[0]],
            _ => [[-m[0][0], -m[0][1]], m[1]],
        };
        if next.iter().flatten().all(|e| e.abs() <= size) {
            m = next;
        }
    }
    let mut coord = || {
        let den = rng.random_range(1..=6);
        let num = rng.random_range(-4 * size * den..=4 * size * den);
        Rational::new(BigInt::from(num), BigInt::from(den))
    };
    let t = Point::new(coord(), coord());
    UnimodularAffineMap::new(m, t).expect("shears and swaps keep |det| = 1")
}

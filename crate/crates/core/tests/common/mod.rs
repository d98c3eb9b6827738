#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Signed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use toric_bounds::bounds::random_lattice_polygon;
use toric_bounds::geometry::{int, rat};
use toric_bounds::{family, random_unimodular, Point, Polygon, Rational};

pub fn poly(pts: &[(i64, i64)]) -> Polygon {
    Polygon::from_integer_points(pts).unwrap()
}

pub fn square() -> Polygon {
    poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
}

/// Hand-picked polygons plus seeded random lattice polygons; every third random
/// polygon is replaced by a skewed unimodular image so minimizers sit far out.
pub fn corpus(random: usize, seed: u64) -> Vec<Polygon> {
    let mut out = vec![
        family::p0(),
        family::q0(),
        family::qk_polygon(3).unwrap(),
        square(),
        poly(&[(0, 0), (17, 5), (18, 5), (1, 0)]),
        poly(&[(0, 0), (3, 0), (0, 1)]),
        poly(&[(1, 0), (0, 1), (-1, -2)]),
        poly(&[(7, 7), (7, 9), (1, 5)]),
        Polygon::from_points(&[
            Point::new(rat(1, 3), rat(-2, 7)),
            Point::new(rat(9, 2), int(1)),
            Point::new(int(-3), rat(11, 5)),
            Point::new(rat(-1, 2), rat(-5, 3)),
        ])
        .unwrap(),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    out.extend((0..random).map(|i| {
        let p = random_lattice_polygon(&mut rng, 4 + (i as u64 % 9), 3 + i % 6);
        if i % 3 == 2 {
            p.apply_map(&random_unimodular(seed ^ (i as u64) << 20, 4))
        } else {
            p
        }
    }));
    out
}

/// Lattice length of a rational vector: `d = len · primitive`.
pub fn lattice_length(d: &Point) -> Rational {
    let l = d.x.denom().lcm(d.y.denom());
    let a: BigInt = d.x.numer() * (&l / d.x.denom());
    let b: BigInt = d.y.numer() * (&l / d.y.denom());
    Rational::new(a.gcd(&b), l)
}

/// Independent test of `P ∼ t·P₀`: a triangle whose three edges have the same
/// lattice length `ℓ` and whose normalized area `2A/ℓ²` equals 3. Every such
/// triangle is a unimodular image of `ℓ·P₀` (send one edge to `(ℓ,0)`; the third
/// vertex is then forced up to shear).
pub fn is_scaled_p0_oracle(p: &Polygon) -> Option<Rational> {
    if p.len() != 3 {
        return None;
    }
    let v = p.vertices();
    let lens: Vec<Rational> = (0..3).map(|i| lattice_length(&v[(i + 1) % 3].sub(&v[i]))).collect();
    if lens[0] != lens[1] || lens[1] != lens[2] {
        return None;
    }
    let l = lens[0].clone();
    (p.area() * int(2) == int(3) * &l * &l).then_some(l)
}

/// Shoelace computed from scratch on an integer vertex list (not the library path).
pub fn shoelace(pts: &[(i64, i64)]) -> Rational {
    let n = pts.len();
    let twice: i64 = (0..n)
        .map(|i| {
            let (x1, y1) = pts[i];
            let (x2, y2) = pts[(i + 1) % n];
            x1 * y2 - x2 * y1
        })
        .sum();
    Rational::new(BigInt::from(twice.abs()), BigInt::from(2))
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}

//! Certified lattice width.
//!
//! `width(P) = min |v(P)|` over primitive integer covectors `v`. The minimum is
//! over an infinite set; it becomes a finite scan through an exclusion bound.
//! For linearly independent vertex differences `e, f` of `P`,
//! `‖v‖∞ ≤ κ · max(|v(e)|, |v(f)|) ≤ κ · |v(P)|` where `κ` is the largest
//! absolute row sum of `[e f]⁻ᵀ`. Any `v` with `‖v‖∞ > ceil(κ · upper)` therefore
//! has `|v(P)| > upper`, and the scan can stop there.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::{DualVector, Point, Polygon, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WidthCertificate {
    pub width: Rational,
    /// Primitive, sign-normalized, lexicographically smallest among minimizers.
    pub direction: DualVector,
    /// Every primitive `v` with `‖v‖∞ ≤ search_bound` was evaluated; every
    /// primitive `v` beyond it is longer than `width`.
    pub search_bound: u64,
    pub evaluated_count: u64,
}

/// `κ` for the pair `(e, f)`, or `None` when they are parallel.
pub fn exclusion_constant(e: &Point, f: &Point) -> Option<Rational> {
    let det = &e.x * &f.y - &e.y * &f.x;
    if det.is_zero() {
        return None;
    }
    // [e f]⁻ᵀ = (1/det) [[f.y, -e.y], [-f.x, e.x]]
    let row1 = f.y.abs() + e.y.abs();
    let row2 = f.x.abs() + e.x.abs();
    Some(row1.max(row2) / det.abs())
}

fn bound_from(kappa: &Rational, upper: &Rational) -> u64 {
    let b = (kappa * upper).ceil().to_integer();
    b.to_u64().unwrap_or(u64::MAX).max(1)
}

/// Exclusion bound for an explicit pair of independent vertex differences.
pub fn search_bound_with(upper: &Rational, e: &Point, f: &Point) -> Option<u64> {
    exclusion_constant(e, f).map(|k| bound_from(&k, upper))
}

/// Smallest `κ` over pairs of independent edge vectors of `p`.
pub fn best_exclusion_constant(p: &Polygon) -> Rational {
    let edges: Vec<Point> = p.edges().map(|(a, b)| b.sub(a)).collect();
    let mut best: Option<Rational> = None;
    for i in 0..edges.len() {
        for j in i + 1..edges.len() {
            if let Some(k) = exclusion_constant(&edges[i], &edges[j]) {
                if best.as_ref().map_or(true, |b| k < *b) {
                    best = Some(k);
                }
            }
        }
    }
    best.expect("a polygon has two independent edges")
}

/// Returns `B` such that every primitive `v` with `‖v‖∞ > B` has
/// `length_along(p, v) > upper`.
pub fn search_bound(p: &Polygon, upper: &Rational) -> u64 {
    bound_from(&best_exclusion_constant(p), upper)
}

/// Sign-normalized primitive vectors with `max(|a|, |b|) = r`, `r ≥ 1`.
fn shell(r: i64) -> impl Iterator<Item = (i64, i64)> {
    let right = (-r..=r).map(move |b| (r, b));
    let top_bottom = (1..r).flat_map(move |a| [(a, -r), (a, r)]);
    let axis = (r == 1).then_some((0, 1));
    axis.into_iter().chain(top_bottom).chain(right).filter(|&(a, b)| a.gcd(&b) == 1)
}

struct Scan<L> {
    best: L,
    dir: (i64, i64),
    bound: u64,
    count: u64,
}

fn scan<L: Ord + Clone>(length: impl Fn(i64, i64) -> L, bound_for: impl Fn(&L) -> u64) -> Scan<L> {
    let mut best: Option<(L, i64, i64)> = None;
    let mut bound = u64::MAX;
    let mut count = 0u64;
    let mut r: i64 = 1;
    while (r as u64) <= bound {
        for (a, b) in shell(r) {
            let len = length(a, b);
            count += 1;
            let better = match &best {
                None => true,
                Some((bl, ba, bb)) => (&len, a, b) < (bl, *ba, *bb),
            };
            if better {
                bound = bound_for(&len);
                best = Some((len, a, b));
            }
        }
        r += 1;
    }
    let (best, a, b) = best.expect("shell 1 is nonempty");
    Scan { best, dir: (a, b), bound, count }
}

/// Coordinates multiplied by the common denominator.
struct IntegerForm {
    denom: BigInt,
    coords: Vec<(BigInt, BigInt)>,
}

impl IntegerForm {
    fn new(p: &Polygon) -> Self {
        let denom = p.vertices().iter().fold(BigInt::from(1), |acc, v| acc.lcm(v.x.denom()).lcm(v.y.denom()));
        let scale = |q: &Rational| q.numer() * (&denom / q.denom());
        let coords = p.vertices().iter().map(|v| (scale(&v.x), scale(&v.y))).collect();
        IntegerForm { denom, coords }
    }

    fn small(&self) -> Option<Vec<(i128, i128)>> {
        const LIMIT: i64 = 1 << 62;
        self.coords
            .iter()
            .map(|(x, y)| {
                let x = x.to_i64().filter(|x| x.abs() < LIMIT)?;
                let y = y.to_i64().filter(|y| y.abs() < LIMIT)?;
                Some((x as i128, y as i128))
            })
            .collect()
    }
}

/// Certified lattice width of `p`.
pub fn lattice_width(p: &Polygon) -> WidthCertificate {
    let kappa = best_exclusion_constant(p);
    let form = IntegerForm::new(p);
    let denom = Rational::from_integer(form.denom.clone());
    let to_rational = |n: BigInt| Rational::from_integer(n) / &denom;

    let (width, dir, bound, count) = match form.small() {
        // directions stay below 2^31 in any feasible scan, so a·x + b·y fits in i128
        Some(coords) => {
            let s = scan(
                |a, b| {
                    let (a, b) = (a as i128, b as i128);
                    let mut lo = i128::MAX;
                    let mut hi = i128::MIN;
                    for &(x, y) in &coords {
                        let val = a * x + b * y;
                        lo = lo.min(val);
                        hi = hi.max(val);
                    }
                    hi - lo
                },
                |len| bound_from(&kappa, &to_rational(BigInt::from(*len))),
            );
            (to_rational(BigInt::from(s.best)), s.dir, s.bound, s.count)
        }
        None => {
            let coords = &form.coords;
            let s = scan(
                |a, b| {
                    let (a, b) = (BigInt::from(a), BigInt::from(b));
                    let vals = coords.iter().map(|(x, y)| &a * x + &b * y);
                    let (lo, hi) = vals.fold((None::<BigInt>, None::<BigInt>), |(lo, hi), v| {
                        (Some(lo.map_or(v.clone(), |l| l.min(v.clone()))), Some(hi.map_or(v.clone(), |h| h.max(v))))
                    });
                    hi.unwrap() - lo.unwrap()
                },
                |len| bound_from(&kappa, &to_rational(len.clone())),
            );
            (to_rational(s.best), s.dir, s.bound, s.count)
        }
    };

    WidthCertificate { width, direction: DualVector::new(dir.0, dir.1), search_bound: bound, evaluated_count: count }
}

/// Exhaustive minimum of `length_along` over every primitive sign-normalized
/// `v` with `‖v‖∞ ≤ box_size`. No pruning; exact rational evaluation.
pub fn width_oracle(p: &Polygon, box_size: u64) -> Result<Rational> {
    let required = lattice_width(p).search_bound;
    if box_size < required {
        return Err(Error::BoxTooSmall { requested: box_size, required });
    }
    let n = box_size as i64;
    let mut best: Option<Rational> = None;
    for a in 0..=n {
        for b in -n..=n {
            let v = DualVector::new(a, b);
            if !v.is_sign_normalized() || !v.is_primitive() {
                continue;
            }
            let len = p.length_along(&v);
            if best.as_ref().map_or(true, |m| len < *m) {
                best = Some(len);
            }
        }
    }
    Ok(best.expect("box contains (1, 0)"))
}

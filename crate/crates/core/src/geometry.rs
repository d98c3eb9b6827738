//! Exact planar geometry over the rationals.
//!
//! Every polygon is kept in a canonical form: strictly convex, counter-clockwise,
//! starting at the lexicographically smallest vertex. Two polygons are equal as
//! point sets iff their vertex lists are equal.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// `n / d` as an exact rational. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses a decimal integer or a `p/q` fraction without any float round-trip.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| format!("invalid rational numerator in {s:?}"))?;
    let den: BigInt = den.parse().map_err(|_| format!("invalid rational denominator in {s:?}"))?;
    if den.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(num, den))
}

/// Exact square root, if `q` is the square of a rational.
pub fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    // Stored in lowest terms, so q is a square iff numerator and denominator are.
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

/// Renders `q` as a decimal with `digits` significant digits, followed by `~`
/// to mark it as an approximation.
pub fn decimal_approx(q: &Rational, digits: usize) -> String {
    if q.is_zero() {
        return format!("0.{}~", "0".repeat(digits.saturating_sub(1)));
    }
    let sign = if q.is_negative() { "-" } else { "" };
    let q = q.abs();
    let ten = BigInt::from(10);
    // Decimal exponent e with 10^e <= q < 10^(e+1).
    let mut exp: i64 = q.to_integer().to_string().len() as i64 - 1;
    if q < Rational::one() {
        exp = -1;
        let mut probe = &q * &ten;
        while probe < Rational::one() {
            probe *= &ten;
            exp -= 1;
        }
    }
    let shift = digits as i64 - 1 - exp;
    let scaled = if shift >= 0 {
        &q * Rational::from_integer(ten.pow(shift as u32))
    } else {
        &q / Rational::from_integer(ten.pow((-shift) as u32))
    };
    let mut mantissa = scaled.round().to_integer();
    let mut shift = shift;
    if mantissa.to_string().len() > digits {
        // rounding carried into a new digit
        mantissa /= &ten;
        shift -= 1;
    }
    let m = mantissa.to_string();
    let body = if shift <= 0 {
        format!("{m}{}", "0".repeat((-shift) as usize))
    } else if (shift as usize) < m.len() {
        let (a, b) = m.split_at(m.len() - shift as usize);
        format!("{a}.{b}")
    } else {
        format!("0.{}{m}", "0".repeat(shift as usize - m.len()))
    };
    format!("{sign}{body}~")
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Point {
    pub x: Rational,
    pub y: Rational,
}

impl Point {
    pub fn new(x: Rational, y: Rational) -> Self {
        Point { x, y }
    }

    pub fn from_ints(x: i64, y: i64) -> Self {
        Point::new(int(x), int(y))
    }

    pub fn add(&self, other: &Point) -> Point {
        Point::new(&self.x + &other.x, &self.y + &other.y)
    }

    pub fn sub(&self, other: &Point) -> Point {
        Point::new(&self.x - &other.x, &self.y - &other.y)
    }

    pub fn scale(&self, t: &Rational) -> Point {
        Point::new(&self.x * t, &self.y * t)
    }

    pub fn is_lattice(&self) -> bool {
        self.x.is_integer() && self.y.is_integer()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

/// `(b - a) × (c - a)`; positive when `a, b, c` turn counter-clockwise.
pub fn cross(a: &Point, b: &Point, c: &Point) -> Rational {
    (&b.x - &a.x) * (&c.y - &a.y) - (&b.y - &a.y) * (&c.x - &a.x)
}

/// A nonzero integer covector `(a, b)`, acting on points by `a·x + b·y`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DualVector {
    pub a: BigInt,
    pub b: BigInt,
}

impl DualVector {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>) -> Self {
        DualVector { a: a.into(), b: b.into() }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_primitive(&self) -> bool {
        self.a.gcd(&self.b).is_one()
    }

    /// `a > 0`, or `a = 0` and `b > 0`.
    pub fn is_sign_normalized(&self) -> bool {
        self.a.is_positive() || (self.a.is_zero() && self.b.is_positive())
    }

    pub fn sign_normalized(&self) -> DualVector {
        if self.is_sign_normalized() {
            self.clone()
        } else {
            -self
        }
    }

    pub fn eval(&self, p: &Point) -> Rational {
        &p.x * Rational::from_integer(self.a.clone()) + &p.y * Rational::from_integer(self.b.clone())
    }

    /// Primitive integer vector pointing along the rational direction `(dx, dy)`.
    pub fn primitive_along(dx: &Rational, dy: &Rational) -> Option<DualVector> {
        if dx.is_zero() && dy.is_zero() {
            return None;
        }
        let l = dx.denom().lcm(dy.denom());
        let a = dx.numer() * (&l / dx.denom());
        let b = dy.numer() * (&l / dy.denom());
        let g = a.gcd(&b);
        Some(DualVector::new(a / &g, b / &g))
    }

    /// `det [self other]` with the vectors as columns.
    pub fn det(&self, other: &DualVector) -> BigInt {
        &self.a * &other.b - &self.b * &other.a
    }
}

impl std::ops::Neg for &DualVector {
    type Output = DualVector;
    fn neg(self) -> DualVector {
        DualVector::new(-&self.a, -&self.b)
    }
}

impl fmt::Display for DualVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.a, self.b)
    }
}

/// `x ↦ M x + t` with `M ∈ GL₂(ℤ)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnimodularAffineMap {
    m: [[i64; 2]; 2],
    t: Point,
}

impl UnimodularAffineMap {
    pub fn new(m: [[i64; 2]; 2], t: Point) -> Result<Self> {
        let det = m[0][0] as i128 * m[1][1] as i128 - m[0][1] as i128 * m[1][0] as i128;
        if det.abs() != 1 {
            return Err(Error::InvalidParameter(format!("matrix {m:?} has determinant {det}, expected ±1")));
        }
        Ok(UnimodularAffineMap { m, t })
    }

    pub fn identity() -> Self {
        UnimodularAffineMap { m: [[1, 0], [0, 1]], t: Point::from_ints(0, 0) }
    }

    pub fn matrix(&self) -> [[i64; 2]; 2] {
        self.m
    }

    pub fn translation(&self) -> &Point {
        &self.t
    }

    pub fn det(&self) -> i64 {
        let [[a, b], [c, d]] = self.m;
        (a as i128 * d as i128 - b as i128 * c as i128) as i64
    }

    pub fn apply_linear(&self, p: &Point) -> Point {
        let [[a, b], [c, d]] = self.m;
        Point::new(&p.x * int(a) + &p.y * int(b), &p.x * int(c) + &p.y * int(d))
    }

    pub fn apply(&self, p: &Point) -> Point {
        self.apply_linear(p).add(&self.t)
    }

    /// The covector `w` with `w(self(x)) = v(x) + const`, i.e. `M⁻ᵀ v`.
    pub fn dual_transform(&self, v: &DualVector) -> DualVector {
        let [[m11, m12], [m21, m22]] = self.m;
        let det = BigInt::from(self.det());
        let a = &det * (BigInt::from(m22) * &v.a - BigInt::from(m21) * &v.b);
        let b = &det * (BigInt::from(m11) * &v.b - BigInt::from(m12) * &v.a);
        DualVector::new(a, b)
    }

    pub fn inverse(&self) -> UnimodularAffineMap {
        let [[a, b], [c, d]] = self.m;
        let det = self.det();
        let m = [[det * d, -det * b], [-det * c, det * a]];
        let lin = UnimodularAffineMap { m, t: Point::from_ints(0, 0) };
        let t = lin.apply_linear(&self.t);
        UnimodularAffineMap { m, t: Point::new(-t.x, -t.y) }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &UnimodularAffineMap) -> Result<UnimodularAffineMap> {
        let mul = |i: usize, j: usize| -> Option<i64> {
            self.m[i][0].checked_mul(other.m[0][j])?.checked_add(self.m[i][1].checked_mul(other.m[1][j])?)
        };
        let overflow = || Error::InvalidParameter("matrix entry overflow".into());
        let m = [
            [mul(0, 0).ok_or_else(overflow)?, mul(0, 1).ok_or_else(overflow)?],
            [mul(1, 0).ok_or_else(overflow)?, mul(1, 1).ok_or_else(overflow)?],
        ];
        let t = self.apply(&other.t);
        Ok(UnimodularAffineMap { m, t })
    }
}

/// Convex polygon with nonempty interior, in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polygon {
    vertices: Vec<Point>,
}

/// Convex hull of `points` in canonical form.
pub fn canonicalize(points: &[Point]) -> Result<Polygon> {
    if points.is_empty() {
        return Err(Error::DegenerateInput("no points".into()));
    }
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return Err(Error::DegenerateInput(format!("{} distinct point(s) span no area", pts.len())));
    }

    // Andrew's monotone chain; `<= 0` drops collinear points.
    let mut hull: Vec<Point> = Vec::with_capacity(pts.len() + 1);
    for p in pts.iter() {
        while hull.len() >= 2 && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= Rational::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    let lower_len = hull.len() + 1;
    for p in pts.iter().rev().skip(1) {
        while hull.len() >= lower_len && cross(&hull[hull.len() - 2], &hull[hull.len() - 1], p) <= Rational::zero() {
            hull.pop();
        }
        hull.push(p.clone());
    }
    hull.pop();

    if hull.len() < 3 {
        return Err(Error::DegenerateInput("points are collinear".into()));
    }
    Ok(Polygon { vertices: hull })
}

impl Polygon {
    pub fn from_points(points: &[Point]) -> Result<Polygon> {
        canonicalize(points)
    }

    pub fn from_integer_points(points: &[(i64, i64)]) -> Result<Polygon> {
        let pts: Vec<Point> = points.iter().map(|&(x, y)| Point::from_ints(x, y)).collect();
        canonicalize(&pts)
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn is_triangle(&self) -> bool {
        self.vertices.len() == 3
    }

    pub fn is_lattice(&self) -> bool {
        self.vertices.iter().all(Point::is_lattice)
    }

    /// Edges as `(start, end)` pairs in counter-clockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (&Point, &Point)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (&self.vertices[i], &self.vertices[(i + 1) % n]))
    }

    /// Shoelace area.
    pub fn area(&self) -> Rational {
        let twice: Rational = self.edges().map(|(p, q)| &p.x * &q.y - &q.x * &p.y).sum();
        twice / int(2)
    }

    pub fn minkowski_sum(&self, other: &Polygon) -> Polygon {
        let sums: Vec<Point> =
            self.vertices.iter().flat_map(|p| other.vertices.iter().map(move |q| p.add(q))).collect();
        canonicalize(&sums).expect("sum of two convex bodies has interior")
    }

    pub fn scale(&self, t: &Rational) -> Result<Polygon> {
        if !t.is_positive() {
            return Err(Error::NonpositiveScale(Box::new(t.clone())));
        }
        // positive scaling keeps orientation and the lexicographic order
        Ok(Polygon { vertices: self.vertices.iter().map(|p| p.scale(t)).collect() })
    }

    pub fn translate(&self, u: &Point) -> Polygon {
        Polygon { vertices: self.vertices.iter().map(|p| p.add(u)).collect() }
    }

    pub fn apply_map(&self, g: &UnimodularAffineMap) -> Polygon {
        let pts: Vec<Point> = self.vertices.iter().map(|p| g.apply(p)).collect();
        canonicalize(&pts).expect("unimodular image keeps area")
    }

    /// `max` of `v` over the polygon.
    pub fn support(&self, v: &DualVector) -> Rational {
        self.vertices.iter().map(|p| v.eval(p)).max().expect("polygon has vertices")
    }

    /// Length of the image interval `v(P)`.
    pub fn length_along(&self, v: &DualVector) -> Rational {
        let (lo, hi) =
            self.vertices.iter().map(|p| v.eval(p)).fold((None::<Rational>, None::<Rational>), |(lo, hi), x| {
                let lo = match lo {
                    Some(l) if l <= x => Some(l),
                    _ => Some(x.clone()),
                };
                let hi = match hi {
                    Some(h) if h >= x => Some(h),
                    _ => Some(x),
                };
                (lo, hi)
            });
        hi.unwrap() - lo.unwrap()
    }

    pub fn contains_point(&self, p: &Point) -> bool {
        self.edges().all(|(a, b)| cross(a, b, p) >= Rational::zero())
    }

    /// True iff `other ⊆ self`.
    pub fn contains(&self, other: &Polygon) -> bool {
        other.vertices.iter().all(|p| self.contains_point(p))
    }
}

impl fmt::Display for Polygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("conv{")?;
        for (i, p) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::from_integer_points(pts).unwrap()
    }

    fn p0() -> Polygon {
        poly(&[(1, 0), (0, 1), (-1, -1)])
    }

    fn square() -> Polygon {
        poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn q0() -> Polygon {
        poly(&[(2, 0), (2, 1), (1, 2), (0, 2), (-1, 1), (-2, -1), (-2, -2), (-1, -2), (1, -1)])
    }

    #[test]
    fn canonicalize_drops_interior_point() {
        let pts = vec![
            Point::from_ints(0, 0),
            Point::from_ints(1, 0),
            Point::from_ints(0, 1),
            Point::new(rat(1, 4), rat(1, 4)),
        ];
        let p = canonicalize(&pts).unwrap();
        assert_eq!(p.vertices(), &[Point::from_ints(0, 0), Point::from_ints(1, 0), Point::from_ints(0, 1)]);
    }

    #[test]
    fn canonicalize_p0_starts_at_lex_min() {
        assert_eq!(p0().vertices(), &[Point::from_ints(-1, -1), Point::from_ints(1, 0), Point::from_ints(0, 1)]);
    }

    #[test]
    fn canonicalize_rejects_degenerate() {
        assert!(matches!(Polygon::from_integer_points(&[(0, 0), (1, 1), (2, 2)]), Err(Error::DegenerateInput(_))));
        assert!(matches!(Polygon::from_integer_points(&[(3, 3), (3, 3)]), Err(Error::DegenerateInput(_))));
        assert!(matches!(canonicalize(&[]), Err(Error::DegenerateInput(_))));
    }

    #[test]
    fn canonicalize_removes_collinear_boundary_points() {
        let p = poly(&[(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (0, 2), (0, 1)]);
        assert_eq!(p.len(), 4);
    }

    #[test]
    fn areas() {
        assert_eq!(p0().area(), rat(3, 2));
        assert_eq!(square().area(), int(1));
        assert_eq!(q0().area(), rat(21, 2));
    }

    #[test]
    fn minkowski_p0_q0_is_q1() {
        let q1 = p0().minkowski_sum(&q0());
        let expected = poly(&[(3, 0), (3, 1), (1, 3), (0, 3), (-1, 2), (-3, -2), (-3, -3), (-2, -3), (2, -1)]);
        assert_eq!(q1, expected);
        assert_eq!(q1.len(), 9);
    }

    #[test]
    fn minkowski_with_self_is_double() {
        assert_eq!(p0().minkowski_sum(&p0()), p0().scale(&int(2)).unwrap());
    }

    #[test]
    fn scale_translate_map() {
        let two_p0 = p0().scale(&int(2)).unwrap();
        assert_eq!(two_p0, poly(&[(2, 0), (0, 2), (-2, -2)]));
        assert!(matches!(p0().scale(&int(0)), Err(Error::NonpositiveScale(_))));
        assert!(matches!(p0().scale(&int(-1)), Err(Error::NonpositiveScale(_))));
        assert_eq!(p0().apply_map(&UnimodularAffineMap::identity()), p0());
        let g = UnimodularAffineMap::new([[1, 1], [0, 1]], Point::from_ints(5, 7)).unwrap();
        assert_eq!(two_p0.apply_map(&g), poly(&[(7, 7), (7, 9), (1, 5)]));
        assert_eq!(square().translate(&Point::new(rat(1, 2), int(0))).vertices()[0], Point::new(rat(1, 2), int(0)));
    }

    #[test]
    fn supports_and_lengths() {
        assert_eq!(p0().support(&DualVector::new(1, 0)), int(1));
        assert_eq!(p0().support(&DualVector::new(-1, -1)), int(2));
        assert_eq!(square().support(&DualVector::new(1, 1)), int(2));
        assert_eq!(p0().length_along(&DualVector::new(1, 0)), int(2));
        assert_eq!(p0().length_along(&DualVector::new(1, 1)), int(3));
        assert_eq!(q0().length_along(&DualVector::new(1, 0)), int(4));
    }

    #[test]
    fn containment() {
        let two_p0 = p0().scale(&int(2)).unwrap();
        assert!(q0().contains(&two_p0));
        assert!(!p0().contains(&q0()));
        assert!(p0().contains(&p0()));
        assert!(!p0().contains_point(&Point::from_ints(2, 0)));
    }

    #[test]
    fn unimodular_map_rejects_bad_det() {
        assert!(UnimodularAffineMap::new([[2, 0], [0, 1]], Point::from_ints(0, 0)).is_err());
    }

    #[test]
    fn map_inverse_and_dual() {
        let g = UnimodularAffineMap::new([[2, 1], [1, 1]], Point::new(rat(1, 3), int(-2))).unwrap();
        let p = Point::new(rat(5, 7), int(3));
        assert_eq!(g.inverse().apply(&g.apply(&p)), p);
        let v = DualVector::new(3, -2);
        let w = g.dual_transform(&v);
        let q = Point::from_ints(4, 1);
        // w(g x) - v(x) is independent of x
        let d1 = w.eval(&g.apply(&p)) - v.eval(&p);
        let d2 = w.eval(&g.apply(&q)) - v.eval(&q);
        assert_eq!(d1, d2);
    }

    #[test]
    fn parse_rationals() {
        assert_eq!(parse_rational("1/3").unwrap(), rat(1, 3));
        assert_eq!(parse_rational("-4/6").unwrap(), rat(-2, 3));
        assert_eq!(parse_rational("17").unwrap(), int(17));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("0.5").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn rational_square_roots() {
        assert_eq!(rational_sqrt(&rat(9, 4)), Some(rat(3, 2)));
        assert_eq!(rational_sqrt(&rat(4, 3)), None);
        assert_eq!(rational_sqrt(&int(0)), Some(int(0)));
        assert_eq!(rational_sqrt(&int(-1)), None);
    }

    #[test]
    fn decimal_approximations() {
        assert_eq!(decimal_approx(&rat(7, 8), 12), "0.875000000000~");
        assert_eq!(decimal_approx(&rat(1, 3), 4), "0.3333~");
        assert_eq!(decimal_approx(&rat(2, 3), 3), "0.667~");
        assert_eq!(decimal_approx(&int(12), 4), "12.00~");
        assert_eq!(decimal_approx(&rat(-3, 400), 2), "-0.0075~");
        assert_eq!(decimal_approx(&rat(9999, 1000), 3), "10.0~");
        assert_eq!(decimal_approx(&int(123456), 3), "123000~");
    }

    #[test]
    fn primitive_directions() {
        let v = DualVector::primitive_along(&rat(-2, 3), &rat(4, 3)).unwrap();
        assert_eq!(v, DualVector::new(-1, 2));
        assert!(DualVector::primitive_along(&int(0), &int(0)).is_none());
    }
}

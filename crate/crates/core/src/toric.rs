//! Polygon-to-toric-surface dictionary.
//!
//! A polygon `P = {u : ⟨v_i, u⟩ ≥ -a_i}` gives a toric surface `X_P` with ample
//! divisor `L_P = Σ a_i D_i`. On surfaces every intersection number of nef toric
//! divisors is a mixed area, so the module works with areas only:
//! `(L_P²) = 2·area(P)` and `(L_P · L_Q) = area(P+Q) - area(P) - area(Q)`.

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::error::{Error, Result};
use crate::family::{p0, q0};
use crate::geometry::{int, DualVector, Point, Polygon, Rational};

/// Primitive inward edge normal with its support number.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FanRay {
    pub normal: DualVector,
    pub support: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFan {
    /// One ray per edge, in counter-clockwise edge order starting with the
    /// edge leaving the first vertex.
    pub rays: Vec<FanRay>,
}

pub fn normal_fan(p: &Polygon) -> NormalFan {
    let rays = p
        .edges()
        .map(|(a, b)| {
            let d = b.sub(a);
            // rotating a CCW edge by +90° points inward
            let normal = DualVector::primitive_along(&-d.y, &d.x).expect("edges are nondegenerate");
            let support = -p.vertices().iter().map(|v| normal.eval(v)).min().expect("polygon has vertices");
            FanRay { normal, support }
        })
        .collect();
    NormalFan { rays }
}

/// Cone data at one vertex: primitive directions towards both neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexCone {
    pub vertex: Point,
    pub to_next: DualVector,
    pub to_prev: DualVector,
    pub det: BigInt,
}

impl VertexCone {
    pub fn is_smooth(&self) -> bool {
        self.det.abs().is_one()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DelzantReport {
    pub is_delzant: bool,
    pub vertices: Vec<VertexCone>,
}

impl DelzantReport {
    pub fn failing(&self) -> impl Iterator<Item = &VertexCone> {
        self.vertices.iter().filter(|c| !c.is_smooth())
    }
}

/// Smoothness: at every vertex the primitive edge directions form a basis of ℤ².
pub fn delzant_check(p: &Polygon) -> DelzantReport {
    let vs = p.vertices();
    let n = vs.len();
    let primitive = |from: &Point, to: &Point| {
        let d = to.sub(from);
        DualVector::primitive_along(&d.x, &d.y).expect("distinct vertices")
    };
    let vertices: Vec<VertexCone> = (0..n)
        .map(|i| {
            let v = &vs[i];
            let to_next = primitive(v, &vs[(i + 1) % n]);
            let to_prev = primitive(v, &vs[(i + n - 1) % n]);
            let det = to_next.det(&to_prev);
            VertexCone { vertex: v.clone(), to_next, to_prev, det }
        })
        .collect();
    let is_delzant = vertices.iter().all(VertexCone::is_smooth);
    DelzantReport { is_delzant, vertices }
}

/// Self-intersection `(L_P²) = 2·area(P)`.
pub fn degree(p: &Polygon) -> Rational {
    p.area() * int(2)
}

/// Intersection number `(L_P · L_Q)` on a common refinement of the fans.
pub fn mixed_degree(p: &Polygon, q: &Polygon) -> Rational {
    p.minkowski_sum(q).area() - p.area() - q.area()
}

/// Degree of `L_P` on a fiber of the toric fibration along `v`.
pub fn projection_degree(p: &Polygon, v: &DualVector) -> Result<Rational> {
    if !v.is_primitive() {
        return Err(Error::NonPrimitiveDirection(v.a.to_string(), v.b.to_string()));
    }
    Ok(p.length_along(v))
}

/// Multiplicity at `1` of the hyperplane section `x + y + z = 3w` of the cubic
/// surface `xyz = w³`, taken as given.
pub const CUBIC_CURVE_MULTIPLICITY: i64 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeshadriChain {
    pub k: u64,
    /// `(C̃₀ · L_{Q_k}) / mult(C̃₀)`.
    pub curve_value: Rational,
    /// Lower bound `2(k+2)` for every other curve through the identity.
    pub other_curve_bound: Rational,
    pub exact: Rational,
}

/// The Seshadri constant of `L_{Q_k}` at the identity, assembled from mixed
/// degrees and checked step by step.
pub fn qk_seshadri_chain(k: u64) -> Result<SeshadriChain> {
    if k == 0 {
        return Err(Error::InvalidParameter("the Q_k chain needs k ≥ 1".into()));
    }
    let broken = |reason: String| Error::ChainBroken { k, reason };
    let p0 = p0();
    let q0 = q0();

    let p0_sq = mixed_degree(&p0, &p0);
    let p0_q0 = mixed_degree(&p0, &q0);
    if p0_sq != degree(&p0) {
        return Err(broken(format!("mixed(P0, P0) = {p0_sq} differs from degree(P0)")));
    }
    let two_p0 = p0.scale(&int(2))?;
    if !q0.contains(&two_p0) {
        return Err(broken("Q0 does not contain 2·P0".into()));
    }

    let kq = int(k as i64);
    let curve_value = (&kq * &p0_sq + &p0_q0) / int(CUBIC_CURVE_MULTIPLICITY);
    let other_curve_bound = int(CUBIC_CURVE_MULTIPLICITY) * (&kq + int(2));
    if other_curve_bound < curve_value {
        return Err(broken(format!("other-curve bound {other_curve_bound} is below the curve value {curve_value}")));
    }
    let exact = curve_value.clone().min(other_curve_bound.clone());
    if exact != curve_value {
        return Err(broken(format!("minimum {exact} is not the curve value {curve_value}")));
    }
    Ok(SeshadriChain { k, curve_value, other_curve_bound, exact })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::rat;

    fn poly(pts: &[(i64, i64)]) -> Polygon {
        Polygon::from_integer_points(pts).unwrap()
    }

    fn square() -> Polygon {
        poly(&[(0, 0), (1, 0), (1, 1), (0, 1)])
    }

    fn ray(a: i64, b: i64, s: Rational) -> FanRay {
        FanRay { normal: DualVector::new(a, b), support: s }
    }

    #[test]
    fn p0_fan() {
        let fan = normal_fan(&p0());
        assert_eq!(fan.rays, vec![ray(-1, 2, int(1)), ray(-1, -1, int(1)), ray(2, -1, int(1))]);
    }

    #[test]
    fn square_fan() {
        let fan = normal_fan(&square());
        assert_eq!(fan.rays, vec![ray(0, 1, int(0)), ray(-1, 0, int(1)), ray(0, -1, int(1)), ray(1, 0, int(0))]);
    }

    #[test]
    fn fan_scales_with_polygon() {
        let t = rat(5, 3);
        let fan = normal_fan(&p0());
        let scaled = normal_fan(&p0().scale(&t).unwrap());
        for (r, s) in fan.rays.iter().zip(&scaled.rays) {
            assert_eq!(r.normal, s.normal);
            assert_eq!(&r.support * &t, s.support);
        }
    }

    #[test]
    fn fan_rays_are_tight_on_their_edges() {
        let p = q0();
        let fan = normal_fan(&p);
        for ((a, b), r) in p.edges().zip(&fan.rays) {
            assert_eq!(r.normal.eval(a), -r.support.clone());
            assert_eq!(r.normal.eval(b), -r.support.clone());
            assert!(p.vertices().iter().all(|v| r.normal.eval(v) >= -r.support.clone()));
        }
    }

    #[test]
    fn p0_is_not_delzant() {
        let report = delzant_check(&p0());
        assert!(!report.is_delzant);
        let at = report.vertices.iter().find(|c| c.vertex == Point::from_ints(1, 0)).unwrap();
        assert_eq!(at.to_next, DualVector::new(-1, 1));
        assert_eq!(at.to_prev, DualVector::new(-2, -1));
        assert_eq!(at.det.abs(), BigInt::from(3));
        assert_eq!(report.failing().count(), 3);
    }

    #[test]
    fn square_and_q0_are_delzant() {
        assert!(delzant_check(&square()).is_delzant);
        // brute force: every consecutive edge pair of Q₀ spans a unit parallelogram
        let q = q0();
        let vs = q.vertices();
        let n = vs.len();
        let brute = (0..n).all(|i| {
            let e = vs[(i + 1) % n].sub(&vs[i]);
            let f = vs[(i + n - 1) % n].sub(&vs[i]);
            (&e.x * &f.y - &e.y * &f.x).abs() == int(1)
        });
        assert!(brute);
        assert_eq!(delzant_check(&q).is_delzant, brute);
    }

    #[test]
    fn degrees() {
        assert_eq!(degree(&p0()), int(3));
        assert_eq!(degree(&q0()), int(21));
        assert_eq!(degree(&square()), int(2));
        assert_eq!(mixed_degree(&p0(), &p0()), int(3));
        assert_eq!(mixed_degree(&p0(), &q0()), int(9));
    }

    #[test]
    fn projection_degrees() {
        assert_eq!(projection_degree(&p0(), &DualVector::new(0, 1)).unwrap(), int(2));
        let q4 = crate::family::qk_polygon(4).unwrap();
        assert_eq!(projection_degree(&q4, &DualVector::new(1, 0)).unwrap(), int(12));
        assert_eq!(projection_degree(&square(), &DualVector::new(1, 1)).unwrap(), int(2));
        assert!(matches!(projection_degree(&square(), &DualVector::new(2, 2)), Err(Error::NonPrimitiveDirection(..))));
        assert!(projection_degree(&square(), &DualVector::new(0, 0)).is_err());
    }

    #[test]
    fn seshadri_chain_values() {
        let c4 = qk_seshadri_chain(4).unwrap();
        assert_eq!((c4.curve_value, c4.other_curve_bound, c4.exact), (rat(21, 2), int(12), rat(21, 2)));
        let c1 = qk_seshadri_chain(1).unwrap();
        assert_eq!((c1.curve_value, c1.other_curve_bound, c1.exact), (int(6), int(6), int(6)));
        let c10 = qk_seshadri_chain(10).unwrap();
        assert_eq!((c10.curve_value, c10.other_curve_bound, c10.exact), (rat(39, 2), int(24), rat(39, 2)));
        assert!(qk_seshadri_chain(0).is_err());
    }
}

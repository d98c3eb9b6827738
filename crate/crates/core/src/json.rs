//! JSON surfaces. Every rational is written as a `"p/q"` (or integer) string.

use std::fmt;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::de::{self, Deserializer, Visitor};
use serde::Deserialize;
use serde_json::{json, Value};

use crate::bounds::{BoundsReport, GapScan, QkInstance, RatioTable};
use crate::equivalence::EquivalenceWitness;
use crate::error::{Error, Result};
use crate::geometry::{canonicalize, parse_rational, DualVector, Point, Polygon, Rational};
use crate::toric::{DelzantReport, NormalFan, SeshadriChain, VertexCone};
use crate::width::WidthCertificate;

struct Coord(Rational);

impl<'de> Deserialize<'de> for Coord {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        struct CoordVisitor;

        impl Visitor<'_> for CoordVisitor {
            type Value = Coord;

            fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str("an integer or a \"p/q\" string")
            }

            fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Coord, E> {
                Ok(Coord(Rational::from_integer(BigInt::from(v))))
            }

            fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Coord, E> {
                Ok(Coord(Rational::from_integer(BigInt::from(v))))
            }

            fn visit_f64<E: de::Error>(self, v: f64) -> std::result::Result<Coord, E> {
                Err(E::custom(format!("floating-point coordinate {v} is not exact; write it as a \"p/q\" string")))
            }

            fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Coord, E> {
                parse_rational(v).map(Coord).map_err(E::custom)
            }
        }

        d.deserialize_any(CoordVisitor)
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct PolygonDoc {
    vertices: Vec<[Coord; 2]>,
}

/// Parses polygon JSON and canonicalizes it.
pub fn polygon_from_json(text: &str) -> Result<Polygon> {
    let doc: PolygonDoc = serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let points: Vec<Point> = doc.vertices.into_iter().map(|[x, y]| Point::new(x.0, y.0)).collect();
    canonicalize(&points)
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

fn integer(n: &BigInt) -> Value {
    match n.to_i64() {
        Some(v) => json!(v),
        None => Value::String(n.to_string()),
    }
}

pub fn dual_vector(v: &DualVector) -> Value {
    json!([integer(&v.a), integer(&v.b)])
}

pub fn point(p: &Point) -> Value {
    json!([rational(&p.x), rational(&p.y)])
}

pub fn polygon(p: &Polygon) -> Value {
    json!({ "vertices": p.vertices().iter().map(point).collect::<Vec<_>>() })
}

pub fn certificate(c: &WidthCertificate) -> Value {
    json!({
        "width": rational(&c.width),
        "direction": dual_vector(&c.direction),
        "search_bound": c.search_bound,
        "evaluated_count": c.evaluated_count,
    })
}

pub fn witness(w: &EquivalenceWitness) -> Value {
    json!({
        "t": rational(&w.t),
        "matrix": w.map.matrix(),
        "translation": point(w.map.translation()),
    })
}

pub fn fan(f: &NormalFan) -> Value {
    let rays: Vec<Value> =
        f.rays.iter().map(|r| json!({ "normal": dual_vector(&r.normal), "support": rational(&r.support) })).collect();
    json!({ "rays": rays })
}

fn vertex_cone(c: &VertexCone) -> Value {
    json!({
        "vertex": point(&c.vertex),
        "to_next": dual_vector(&c.to_next),
        "to_prev": dual_vector(&c.to_prev),
        "det": c.det.to_string(),
    })
}

pub fn delzant(d: &DelzantReport) -> Value {
    json!({
        "delzant": d.is_delzant,
        "failing": d.failing().map(vertex_cone).collect::<Vec<_>>(),
    })
}

pub fn seshadri_chain(c: &SeshadriChain) -> Value {
    json!({
        "k": c.k,
        "curve_value": rational(&c.curve_value),
        "other_curve_bound": rational(&c.other_curve_bound),
        "exact": rational(&c.exact),
    })
}

fn opt_rational(q: Option<&Rational>) -> Value {
    q.map_or(Value::Null, rational)
}

pub fn report(r: &BoundsReport) -> Value {
    json!({
        "width": rational(&r.width),
        "direction": dual_vector(&r.direction),
        "area": rational(&r.area),
        "seshadri_lower": rational(&r.seshadri_lower),
        "seshadri_upper": rational(&r.seshadri_upper),
        "seshadri_exact": r.seshadri_exact.as_ref().map_or(Value::Null, |e| json!({
            "value": rational(&e.value),
            "provenance": e.provenance.as_str(),
        })),
        "equality_case": r.equality_case.as_ref().map_or(Value::Null, witness),
        "delzant": r.delzant,
        "gromov_lower": opt_rational(r.gromov.as_ref().map(|g| &g.lower)),
        "gromov_lower_strict": r.gromov.is_some(),
        "gromov_upper": opt_rational(r.gromov.as_ref().map(|g| &g.upper)),
        "gromov_exact": opt_rational(r.gromov.as_ref().and_then(|g| g.exact.as_ref())),
        "volume_gap_holds": r.volume_gap_holds,
    })
}

pub fn qk_instance(q: &QkInstance) -> Value {
    json!({
        "k": q.k,
        "polygon": polygon(&q.polygon),
        "width": rational(&q.width),
        "gromov_exact": opt_rational(q.gromov_exact.as_ref()),
        "ratio": opt_rational(q.ratio.as_ref()),
    })
}

pub fn ratio_table(t: &RatioTable, eps: Option<(&Rational, Option<u64>)>) -> Value {
    let rows: Vec<Value> = t
        .rows
        .iter()
        .map(|r| {
            json!({
                "k": r.k,
                "gromov": rational(&r.gromov),
                "width": rational(&r.width),
                "ratio": rational(&r.ratio),
            })
        })
        .collect();
    let mut v = json!({ "rows": rows });
    if let Some((eps, k)) = eps {
        v["eps"] = rational(eps);
        v["first_k_within_eps"] = k.map_or(Value::Null, |k| json!(k));
    }
    v
}

pub fn gap_scan(s: &GapScan) -> Value {
    let exceptions: Vec<Value> =
        s.exceptions().map(|e| json!({ "index": e.index, "polygon": polygon(&e.polygon) })).collect();
    json!({
        "seed": s.params.seed,
        "count": s.params.count,
        "box": s.params.box_size,
        "points": s.params.points,
        "equivalent": s.equivalent_count(),
        "strict": s.samples.iter().filter(|x| x.gap.strict_inequality).count(),
        "exceptions": exceptions,
    })
}

//! The reference polygons: the cubic-surface triangle `P₀`, the nonagon `Q₀`,
//! and the family `Q_k = k·P₀ + Q₀`.

use crate::error::{Error, Result};
use crate::geometry::{int, Polygon};

/// `conv{(1,0), (0,1), (-1,-1)}`.
pub fn p0() -> Polygon {
    Polygon::from_integer_points(&[(1, 0), (0, 1), (-1, -1)]).expect("P0 is a triangle")
}

pub fn q0() -> Polygon {
    qk_closed_form(0)
}

/// Vertex list of `Q_k` written out directly (valid for every `k ≥ 0`).
pub fn qk_closed_form(k: u64) -> Polygon {
    let k = k as i64;
    Polygon::from_integer_points(&[
        (k + 2, 0),
        (k + 2, 1),
        (1, k + 2),
        (0, k + 2),
        (-1, k + 1),
        (-k - 2, -k - 1),
        (-k - 2, -k - 2),
        (-k - 1, -k - 2),
        (k + 1, -1),
    ])
    .expect("Q_k is a nonagon")
}

/// `k·P₀ + Q₀` by Minkowski sum, checked against [`qk_closed_form`].
pub fn qk_polygon(k: u64) -> Result<Polygon> {
    let computed = if k == 0 { q0() } else { p0().scale(&int(k as i64))?.minkowski_sum(&q0()) };
    let expected = qk_closed_form(k);
    if computed != expected {
        return Err(Error::VertexMismatch { k, computed: computed.to_string(), expected: expected.to_string() });
    }
    Ok(computed)
}

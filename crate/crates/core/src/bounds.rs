//! Certified Seshadri-constant and Gromov-width reports.
//!
//! For a convex body `Δ` with lattice width `w`, the Seshadri constant at the
//! identity satisfies `¾·w ≤ ε(Δ;1) ≤ w`, with equality on the left exactly for
//! unimodular images of `t·P₀`. For Delzant polygons the Gromov width satisfies
//! `¾·w < w_G ≤ w`. Exact values are only ever reported in the two certified
//! cases: the equality case and the family `Q_k`.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::equivalence::{equiv_scaled_p0, EquivalenceWitness};
use crate::error::{Error, Result};
use crate::family::{qk_closed_form, qk_polygon};
use crate::geometry::{int, rat, DualVector, Point, Polygon, Rational};
use crate::toric::{delzant_check, qk_seshadri_chain};
use crate::width::lattice_width;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QkInstance {
    pub k: u64,
    pub polygon: Polygon,
    pub width: Rational,
    /// `(3k+9)/2`; absent for `k = 0`.
    pub gromov_exact: Option<Rational>,
    /// `gromov_exact / width`; absent for `k = 0`.
    pub ratio: Option<Rational>,
}

/// `(3k+9)/2`.
pub fn qk_gromov_width(k: u64) -> Rational {
    rat(3 * k as i64 + 9, 2)
}

/// `Q_k` with its computed width. For `k ≥ 1` the width must come out as
/// `2k+4`; `k = 0` reports whatever the scan finds.
pub fn qk(k: u64) -> Result<QkInstance> {
    let polygon = qk_polygon(k)?;
    let width = lattice_width(&polygon).width;
    if k == 0 {
        return Ok(QkInstance { k, polygon, width, gromov_exact: None, ratio: None });
    }
    let expected = int(2 * k as i64 + 4);
    if width != expected {
        return Err(Error::WidthMismatch { k, computed: Box::new(width), expected: Box::new(expected) });
    }
    let gromov = qk_gromov_width(k);
    let ratio = &gromov / &width;
    Ok(QkInstance { k, polygon, width, gromov_exact: Some(gromov), ratio: Some(ratio) })
}

/// `k` with `p == Q_k`, if any (`k ≥ 1`).
pub fn match_qk(p: &Polygon) -> Option<u64> {
    let right = p.support(&DualVector::new(1, 0)) - int(2);
    if !right.is_integer() {
        return None;
    }
    let k = right.to_integer().to_u64().filter(|&k| k >= 1)?;
    (qk_closed_form(k) == *p).then_some(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Provenance {
    EqualityCase,
    QkFamily,
}

impl Provenance {
    pub fn as_str(self) -> &'static str {
        match self {
            Provenance::EqualityCase => "equality_case",
            Provenance::QkFamily => "qk_family",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactValue {
    pub value: Rational,
    pub provenance: Provenance,
}

/// Gromov-width interval `(lower, upper]`; only defined for Delzant polygons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GromovBounds {
    /// Strict: `lower < w_G`.
    pub lower: Rational,
    pub upper: Rational,
    pub exact: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub width: Rational,
    pub direction: DualVector,
    pub area: Rational,
    pub seshadri_lower: Rational,
    pub seshadri_upper: Rational,
    pub seshadri_exact: Option<ExactValue>,
    pub equality_case: Option<EquivalenceWitness>,
    pub delzant: bool,
    pub gromov: Option<GromovBounds>,
    pub volume_gap_holds: bool,
}

impl BoundsReport {
    /// The parts of the report that depend only on the equivalence class.
    pub fn intervals(&self) -> (Rational, Rational, Option<(Rational, Rational)>) {
        (
            self.seshadri_lower.clone(),
            self.seshadri_upper.clone(),
            self.gromov.as_ref().map(|g| (g.lower.clone(), g.upper.clone())),
        )
    }
}

pub fn bounds_report(p: &Polygon) -> BoundsReport {
    let cert = lattice_width(p);
    let w = cert.width;
    let area = p.area();
    let lower = rat(3, 4) * &w;
    let upper = w.clone();
    let equality_case = equiv_scaled_p0(p);
    let qk_index = match_qk(p);

    let seshadri_exact = if equality_case.is_some() {
        Some(ExactValue { value: lower.clone(), provenance: Provenance::EqualityCase })
    } else {
        qk_index
            .and_then(|k| qk_seshadri_chain(k).ok())
            .map(|chain| ExactValue { value: chain.exact, provenance: Provenance::QkFamily })
    };

    let delzant = delzant_check(p).is_delzant;
    let gromov = delzant.then(|| GromovBounds {
        lower: lower.clone(),
        upper: upper.clone(),
        exact: qk_index.map(qk_gromov_width),
    });

    let gap = gap_relation(&w, &area, equality_case.is_some());
    BoundsReport {
        width: w,
        direction: cert.direction,
        area,
        seshadri_lower: lower,
        seshadri_upper: upper,
        seshadri_exact,
        equality_case,
        delzant,
        gromov,
        volume_gap_holds: gap.holds(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VolumeGap {
    pub equivalent: bool,
    /// `3·w² < 8·area`.
    pub strict_inequality: bool,
    /// `3·w² = 8·area`.
    pub equality: bool,
}

impl VolumeGap {
    /// Equivalent polygons sit on the boundary; all others strictly inside.
    pub fn holds(&self) -> bool {
        if self.equivalent {
            self.equality
        } else {
            self.strict_inequality
        }
    }
}

fn gap_relation(width: &Rational, area: &Rational, equivalent: bool) -> VolumeGap {
    let lhs = int(3) * width * width;
    let rhs = int(8) * area;
    VolumeGap { equivalent, strict_inequality: lhs < rhs, equality: lhs == rhs }
}

/// Compares `w` against `√(8/3 · area)` in squared form.
pub fn volume_gap_check(p: &Polygon) -> VolumeGap {
    let w = lattice_width(p).width;
    gap_relation(&w, &p.area(), equiv_scaled_p0(p).is_some())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioRow {
    pub k: u64,
    pub gromov: Rational,
    pub width: Rational,
    pub ratio: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatioTable {
    pub rows: Vec<RatioRow>,
}

impl RatioTable {
    /// Smallest tabulated `k` with `ratio < 3/4 + eps`.
    pub fn first_within(&self, eps: &Rational) -> Option<u64> {
        let target = rat(3, 4) + eps;
        self.rows.iter().find(|r| r.ratio < target).map(|r| r.k)
    }
}

/// Gromov width `(3k+9)/2` over lattice width `2k+4` along `Q_1, …, Q_{k_max}`.
pub fn ratio_table(k_max: u64) -> Result<RatioTable> {
    if k_max == 0 {
        return Err(Error::InvalidParameter("k_max must be at least 1".into()));
    }
    let rows = (1..=k_max)
        .map(|k| {
            let gromov = qk_gromov_width(k);
            let width = int(2 * k as i64 + 4);
            let ratio = &gromov / &width;
            RatioRow { k, gromov, width, ratio }
        })
        .collect();
    Ok(RatioTable { rows })
}

/// Convex hull of `points` lattice points drawn uniformly from
/// `[0, box_size]²`, redrawn until the hull has interior.
pub fn random_lattice_polygon(rng: &mut impl Rng, box_size: u64, points: usize) -> Polygon {
    let n = box_size.max(1) as i64;
    let points = points.max(3);
    loop {
        let pts: Vec<Point> =
            (0..points).map(|_| Point::from_ints(rng.random_range(0..=n), rng.random_range(0..=n))).collect();
        if let Ok(p) = Polygon::from_points(&pts) {
            return p;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapScanParams {
    pub seed: u64,
    pub count: usize,
    pub box_size: u64,
    pub points: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapSample {
    pub index: usize,
    pub polygon: Polygon,
    pub width: Rational,
    pub area: Rational,
    pub gap: VolumeGap,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapScan {
    pub params: GapScanParams,
    pub samples: Vec<GapSample>,
}

impl GapScan {
    pub fn equivalent_count(&self) -> usize {
        self.samples.iter().filter(|s| s.gap.equivalent).count()
    }

    pub fn exceptions(&self) -> impl Iterator<Item = &GapSample> {
        self.samples.iter().filter(|s| !s.gap.holds())
    }
}

/// Seeded scan of the volume-gap relation over random lattice polygons.
pub fn gap_scan(params: GapScanParams) -> GapScan {
    let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
    let samples = (0..params.count)
        .map(|index| {
            let polygon = random_lattice_polygon(&mut rng, params.box_size, params.points);
            let width = lattice_width(&polygon).width;
            let area = polygon.area();
            let gap = gap_relation(&width, &area, equiv_scaled_p0(&polygon).is_some());
            GapSample { index, polygon, width, area, gap }
        })
        .collect();
    GapScan { params, samples }
}

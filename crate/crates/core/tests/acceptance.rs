//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
//! if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use common::{corpus, is_scaled_p0_oracle};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use toric_bounds::bounds::{bounds_report, gap_scan, qk_gromov_width, ratio_table, volume_gap_check, GapScanParams};
use toric_bounds::family::{p0, q0, qk_polygon};
use toric_bounds::geometry::{canonicalize, int, rat};
use toric_bounds::toric::{delzant_check, mixed_degree, qk_seshadri_chain};
use toric_bounds::{equiv_scaled_p0, lattice_width, random_unimodular, width_oracle, Point, Rational};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn widths() -> Outcome {
    let start = Instant::now();
    let w = lattice_width(&p0()).width;
    ensure(w == int(2), || format!("width(P0) = {w}"))?;
    for k in 1..=50u64 {
        let q = qk_polygon(k).map_err(|e| e.to_string())?;
        let w = lattice_width(&q).width;
        ensure(w == int(2 * k as i64 + 4), || format!("width(Q_{k}) = {w}"))?;
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || format!("took {elapsed:?}"))?;
    Ok(format!("P0 and Q_1..Q_50 in {:.2?}", elapsed))
}

fn mixed_degrees() -> Outcome {
    let a = mixed_degree(&p0(), &p0());
    let b = mixed_degree(&p0(), &q0());
    ensure(a == int(3) && b == int(9), || format!("got {a} and {b}"))?;
    Ok("(P0,P0) = 3, (P0,Q0) = 9".into())
}

fn seshadri_chain() -> Outcome {
    ensure(q0().contains(&p0().scale(&int(2)).unwrap()), || "Q0 does not contain 2P0".into())?;
    for k in 1..=50u64 {
        let c = qk_seshadri_chain(k).map_err(|e| e.to_string())?;
        let expected = rat(3 * k as i64 + 9, 2);
        ensure(c.exact == expected, || format!("k={k}: exact {}", c.exact))?;
        ensure(c.other_curve_bound == int(2 * (k as i64 + 2)), || format!("k={k}: bound {}", c.other_curve_bound))?;
        ensure(c.other_curve_bound >= expected, || format!("k={k}: inequality fails"))?;
    }
    let c4 = qk_seshadri_chain(4).unwrap().exact;
    ensure(c4 == rat(21, 2), || format!("k=4 gives {c4}"))?;
    Ok("exact (3k+9)/2 for k=1..50, 21/2 at k=4, Q0 ⊇ 2P0".into())
}

fn ratio_identity() -> Outcome {
    let table = ratio_table(1000).map_err(|e| e.to_string())?;
    let three_quarters = rat(3, 4);
    let mut stated_failures = Vec::new();
    let mut true_failures = 0;
    for r in &table.rows {
        let k = r.k as i64;
        let expected_ratio = rat(3 * k + 9, 4 * k + 8);
        ensure(r.ratio == expected_ratio, || format!("k={k}: ratio {}", r.ratio))?;
        let diff = &r.ratio - &three_quarters;
        if diff != rat(3, 16 * (k + 2)) {
            stated_failures.push(k);
        }
        if diff != rat(3, 4 * (k + 2)) {
            true_failures += 1;
        }
    }
    let decreasing = table.rows.windows(2).all(|w| w[1].ratio < w[0].ratio);
    let eps = rat(1, 1000);
    let first = table.first_within(&eps);
    let side = format!(
        "decreasing={decreasing}, first k within 1/1000: {}, difference 3/(4(k+2)) holds for {}/1000",
        first.map_or("none".into(), |k| k.to_string()),
        1000 - true_failures
    );
    ensure(decreasing && first.is_some(), || side.clone())?;
    if stated_failures.is_empty() {
        Ok(format!("difference 3/(16(k+2)) for k=1..1000; {side}"))
    } else {
        Err(format!(
            "difference 3/(16(k+2)) fails for {}/1000 k (first k={}, actual 3/(4(k+2))); {side}",
            stated_failures.len(),
            stated_failures[0]
        ))
    }
}

fn random_t(rng: &mut ChaCha8Rng) -> Rational {
    let den: i64 = rng.random_range(1..=12);
    rat(rng.random_range(1..=10 * den), den)
}

fn equality_round_trip() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for i in 0..500u64 {
        let t = random_t(&mut rng);
        let g = random_unimodular(rng.random(), 6);
        let target = p0().scale(&t).unwrap().apply_map(&g);
        let w = equiv_scaled_p0(&target).ok_or_else(|| format!("case {i}: no witness for t={t}"))?;
        ensure(w.t == t, || format!("case {i}: recovered {} for {t}", w.t))?;
        ensure(w.holds_for(&target), || format!("case {i}: witness equation fails"))?;
    }

    let (mut negatives, mut skipped) = (0, 0);
    while negatives < 500 {
        let t = random_t(&mut rng);
        let g = random_unimodular(rng.random(), 6);
        let target = p0().scale(&t).unwrap().apply_map(&g);
        let mut pts = target.vertices().to_vec();
        let which = rng.random_range(0..3);
        let shift = Point::new(
            rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
            rat(rng.random_range(-6..=6), rng.random_range(1..=4)),
        );
        pts[which] = pts[which].add(&shift);
        let bent = match canonicalize(&pts) {
            Ok(b) if is_scaled_p0_oracle(&b).is_none() => b,
            _ => {
                skipped += 1;
                continue;
            }
        };
        ensure(equiv_scaled_p0(&bent).is_none(), || {
            format!("perturbed case {negatives}: spurious witness for {bent}")
        })?;
        negatives += 1;
    }
    Ok(format!("500 recovered exactly, 500 perturbed rejected ({skipped} degenerate or still equivalent redrawn)"))
}

fn volume_gap() -> Outcome {
    let scan = gap_scan(GapScanParams { seed: 2024, count: 10_000, box_size: 8, points: 6 });
    let exceptions = scan.exceptions().count();
    ensure(exceptions == 0, || format!("{exceptions} exceptions"))?;
    for s in &scan.samples {
        let lhs = int(3) * &s.width * &s.width;
        let rhs = int(8) * &s.area;
        let ok = if s.gap.equivalent { lhs == rhs } else { lhs < rhs };
        ensure(ok, || format!("sample {}: 3w² = {lhs}, 8·area = {rhs}", s.index))?;
    }
    // random hulls rarely hit the equality case, so exercise it directly too
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    for _ in 0..200 {
        let t = random_t(&mut rng);
        let image = p0().scale(&t).unwrap().apply_map(&random_unimodular(rng.random(), 5));
        let gap = volume_gap_check(&image);
        ensure(gap.equivalent && gap.equality && gap.holds(), || format!("equality case {image}"))?;
    }
    Ok(format!("10000 polygons, {} equivalent, 0 exceptions; 200 scaled images at equality", scan.equivalent_count()))
}

fn oracle_agreement() -> Outcome {
    let polys = corpus(191, 7);
    ensure(polys.len() == 200, || format!("corpus has {}", polys.len()))?;
    for (i, p) in polys.iter().enumerate() {
        let cert = lattice_width(p);
        // a generous fixed box keeps the oracle independent of the certified bound
        let oracle = width_oracle(p, (2 * cert.search_bound).max(16)).map_err(|e| e.to_string())?;
        ensure(oracle == cert.width, || format!("polygon {i}: certified {} vs oracle {oracle}", cert.width))?;
    }
    Ok("200 polygons".into())
}

fn invariance() -> Outcome {
    let polys = corpus(191, 7);
    let mut seed = 0u64;
    for (i, p) in polys.iter().enumerate() {
        let base = bounds_report(p);
        let base_delzant = delzant_check(p).is_delzant;
        for _ in 0..1000 {
            seed += 1;
            let image = p.apply_map(&random_unimodular(seed, 5));
            let r = bounds_report(&image);
            ensure(r.width == base.width, || format!("polygon {i}, map {seed}: width"))?;
            ensure(r.area == base.area, || format!("polygon {i}, map {seed}: area"))?;
            ensure(delzant_check(&image).is_delzant == base_delzant, || format!("polygon {i}, map {seed}: delzant"))?;
            ensure(r.intervals() == base.intervals(), || format!("polygon {i}, map {seed}: intervals"))?;
        }
    }
    Ok(format!("{} polygons x 1000 maps", polys.len()))
}

fn p0_not_delzant() -> Outcome {
    let d = delzant_check(&p0());
    let dets: Vec<String> = d.failing().map(|c| c.det.to_string()).collect();
    ensure(!d.is_delzant, || "P0 reported Delzant".into())?;
    ensure(d.failing().all(|c| c.det == 3.into() || c.det == (-3).into()), || format!("dets {dets:?}"))?;
    Ok(format!("not Delzant, failing dets {dets:?}"))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 lattice widths", widths),
        ("2 mixed degrees", mixed_degrees),
        ("3 seshadri chain", seshadri_chain),
        ("4 ratio table", ratio_identity),
        ("5 equality round trip", equality_round_trip),
        ("6 volume gap", volume_gap),
        ("7 oracle agreement", oracle_agreement),
        ("8 invariance", invariance),
        ("9 P0 not Delzant", p0_not_delzant),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let t = start.elapsed();
        match outcome {
            Ok(msg) => println!("PASS  criterion {name}: {msg} [{t:.2?}]"),
            Err(msg) => {
                failed += 1;
                println!("FAIL  criterion {name}: {msg} [{t:.2?}]");
            }
        }
    }
    println!("NOTE  criterion 10: the lower bound itself is a proof; its arithmetic consequences are covered by 3-6");
    let w = qk_gromov_width(4);
    println!("info  Q_4 Gromov width {w}, Q0 Delzant: {}", delzant_check(&q0()).is_delzant);
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}

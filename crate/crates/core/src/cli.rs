//! Command-line front end.
//!
//! Exit codes: 0 success, 1 bad input (parse, degenerate polygon, I/O, usage),
//! 2 failure of an internal verification.

use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bounds::{self, GapScanParams};
use crate::equivalence::equiv_scaled_p0;
use crate::error::{Error, Result};
use crate::geometry::{decimal_approx, parse_rational, Polygon, Rational};
use crate::json;
use crate::svg::render_svg;
use crate::toric::{degree, delzant_check, mixed_degree, normal_fan, qk_seshadri_chain};
use crate::width::{lattice_width, WidthCertificate};

pub const FORMAT_ENV: &str = "TORIC_BOUNDS_FORMAT";
const APPROX_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
    Svg,
}

#[derive(Debug, Parser)]
#[command(name = "toric-bounds", version, about = "Exact lattice width and toric Seshadri/Gromov-width bounds")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, env = FORMAT_ENV, default_value = "json")]
    pub format: Format,

    /// Write output to this file instead of standard output.
    #[arg(long, short, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Certified lattice width.
    Width { polygon: PathBuf },
    /// Area and self-intersection degree.
    Area { polygon: PathBuf },
    /// Normal fan with support numbers.
    Fan { polygon: PathBuf },
    /// Delzant (smoothness) check with failing vertices.
    Delzant { polygon: PathBuf },
    /// Mixed degree of two polygons.
    Mixed { first: PathBuf, second: PathBuf },
    /// Witness that the polygon is a unimodular image of t·P0.
    #[command(name = "equiv-p0")]
    EquivP0 { polygon: PathBuf },
    /// Seshadri and Gromov-width bounds.
    Bounds { polygon: PathBuf },
    /// The polygon Q_k = k·P0 + Q0.
    Qk {
        #[arg(long)]
        k: u64,
        /// Recompute everything and cross-check against the Seshadri chain.
        #[arg(long)]
        verify: bool,
    },
    /// Gromov width over lattice width along the Q_k family.
    #[command(name = "ratio-table")]
    RatioTable {
        #[arg(long)]
        kmax: u64,
        /// Also report the first k with ratio < 3/4 + eps (exact "p/q").
        #[arg(long)]
        eps: Option<String>,
        /// Add decimal approximations (TSV only; marked with a trailing ~).
        #[arg(long)]
        approx: bool,
    },
    /// Volume-gap scan over random lattice polygons.
    #[command(name = "gap-scan")]
    GapScan {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10_000)]
        count: usize,
        #[arg(long = "box", default_value_t = 8)]
        box_size: u64,
        #[arg(long, default_value_t = 6)]
        points: usize,
    },
}

pub fn parse_polygon_file(path: &Path) -> Result<Polygon> {
    let text = std::fs::read_to_string(path)?;
    json::polygon_from_json(&text)
}

enum Output {
    Text(String),
    Svg(Polygon, Option<WidthCertificate>),
}

fn tsv(rows: &[Vec<String>]) -> String {
    rows.iter().map(|r| r.join("\t") + "\n").collect()
}

fn kv_tsv(pairs: &[(&str, String)]) -> String {
    pairs.iter().map(|(k, v)| format!("{k}\t{v}\n")).collect()
}

fn opt(q: Option<&Rational>) -> String {
    q.map_or_else(|| "-".to_string(), Rational::to_string)
}

fn single_polygon(cmd: &Command) -> bool {
    !matches!(cmd, Command::Mixed { .. } | Command::RatioTable { .. } | Command::GapScan { .. })
}

fn execute(cmd: &Command, format: Format) -> Result<Output> {
    let text = |v: Value, t: String| {
        Ok(Output::Text(match format {
            Format::Tsv => t,
            _ => v.to_string() + "\n",
        }))
    };
    let wants_svg = format == Format::Svg;

    match cmd {
        Command::Width { polygon } => {
            let p = parse_polygon_file(polygon)?;
            let c = lattice_width(&p);
            if wants_svg {
                return Ok(Output::Svg(p, Some(c)));
            }
            let t = tsv(&[
                vec![
                    "width".into(),
                    "direction_a".into(),
                    "direction_b".into(),
                    "search_bound".into(),
                    "evaluated_count".into(),
                ],
                vec![
                    c.width.to_string(),
                    c.direction.a.to_string(),
                    c.direction.b.to_string(),
                    c.search_bound.to_string(),
                    c.evaluated_count.to_string(),
                ],
            ]);
            text(json::certificate(&c), t)
        }
        Command::Area { polygon } => {
            let p = parse_polygon_file(polygon)?;
            if wants_svg {
                return Ok(Output::Svg(p, None));
            }
            let (a, d) = (p.area(), degree(&p));
            let v = json!({ "area": json::rational(&a), "degree": json::rational(&d) });
            text(v, kv_tsv(&[("area", a.to_string()), ("degree", d.to_string())]))
        }
        Command::Fan { polygon } => {
            let p = parse_polygon_file(polygon)?;
            if wants_svg {
                return Ok(Output::Svg(p, None));
            }
            let f = normal_fan(&p);
            let mut rows = vec![vec!["normal_a".to_string(), "normal_b".into(), "support".into()]];
            rows.extend(
                f.rays.iter().map(|r| vec![r.normal.a.to_string(), r.normal.b.to_string(), r.support.to_string()]),
            );
            text(json::fan(&f), tsv(&rows))
        }
        Command::Delzant { polygon } => {
            let p = parse_polygon_file(polygon)?;
            if wants_svg {
                return Ok(Output::Svg(p, None));
            }
            let d = delzant_check(&p);
            let mut rows = vec![vec!["vertex_x".to_string(), "vertex_y".into(), "det".into(), "smooth".into()]];
            rows.extend(d.vertices.iter().map(|c| {
                vec![c.vertex.x.to_string(), c.vertex.y.to_string(), c.det.to_string(), c.is_smooth().to_string()]
            }));
            text(json::delzant(&d), tsv(&rows))
        }
        Command::Mixed { first, second } => {
            let p = parse_polygon_file(first)?;
            let q = parse_polygon_file(second)?;
            let m = mixed_degree(&p, &q);
            text(json!({ "mixed_degree": json::rational(&m) }), kv_tsv(&[("mixed_degree", m.to_string())]))
        }
        Command::EquivP0 { polygon } => {
            let p = parse_polygon_file(polygon)?;
            if wants_svg {
                return Ok(Output::Svg(p, None));
            }
            let w = equiv_scaled_p0(&p);
            let t = match &w {
                None => kv_tsv(&[("equivalent", "false".into())]),
                Some(w) => {
                    let m = w.map.matrix();
                    kv_tsv(&[
                        ("equivalent", "true".into()),
                        ("t", w.t.to_string()),
                        ("matrix", format!("{} {} {} {}", m[0][0], m[0][1], m[1][0], m[1][1])),
                        ("translation", format!("{} {}", w.map.translation().x, w.map.translation().y)),
                    ])
                }
            };
            text(w.as_ref().map_or(Value::Null, json::witness), t)
        }
        Command::Bounds { polygon } => {
            let p = parse_polygon_file(polygon)?;
            if wants_svg {
                let c = lattice_width(&p);
                return Ok(Output::Svg(p, Some(c)));
            }
            let r = bounds::bounds_report(&p);
            let g = r.gromov.as_ref();
            let t = kv_tsv(&[
                ("width", r.width.to_string()),
                ("area", r.area.to_string()),
                ("seshadri_lower", r.seshadri_lower.to_string()),
                ("seshadri_upper", r.seshadri_upper.to_string()),
                ("seshadri_exact", opt(r.seshadri_exact.as_ref().map(|e| &e.value))),
                ("equality_case", r.equality_case.is_some().to_string()),
                ("delzant", r.delzant.to_string()),
                ("gromov_lower_strict", opt(g.map(|g| &g.lower))),
                ("gromov_upper", opt(g.map(|g| &g.upper))),
                ("gromov_exact", opt(g.and_then(|g| g.exact.as_ref()))),
                ("volume_gap_holds", r.volume_gap_holds.to_string()),
            ]);
            text(json::report(&r), t)
        }
        Command::Qk { k, verify } => {
            let inst = bounds::qk(*k)?;
            let chain = if *verify && *k >= 1 {
                let chain = qk_seshadri_chain(*k)?;
                if inst.gromov_exact.as_ref() != Some(&chain.exact) {
                    return Err(Error::ChainBroken {
                        k: *k,
                        reason: format!(
                            "Gromov value {} differs from chain value {}",
                            opt(inst.gromov_exact.as_ref()),
                            chain.exact
                        ),
                    });
                }
                Some(chain)
            } else {
                None
            };
            if wants_svg {
                let c = lattice_width(&inst.polygon);
                return Ok(Output::Svg(inst.polygon, Some(c)));
            }
            let mut v = json::qk_instance(&inst);
            if let Some(c) = &chain {
                v["seshadri_chain"] = json::seshadri_chain(c);
                v["verified"] = json!(true);
            }
            let mut pairs = vec![
                ("k", k.to_string()),
                ("width", inst.width.to_string()),
                ("gromov_exact", opt(inst.gromov_exact.as_ref())),
                ("ratio", opt(inst.ratio.as_ref())),
            ];
            if let Some(c) = &chain {
                pairs.push(("seshadri_exact", c.exact.to_string()));
            }
            text(v, kv_tsv(&pairs))
        }
        Command::RatioTable { kmax, eps, approx } => {
            let table = bounds::ratio_table(*kmax)?;
            let eps = eps
                .as_deref()
                .map(|s| parse_rational(s).map_err(|message| Error::Parse { line: 1, column: 1, message }))
                .transpose()?;
            let first = eps.as_ref().map(|e| table.first_within(e));
            let mut header = vec!["k".to_string(), "gromov".into(), "width".into(), "ratio".into()];
            if *approx {
                header.push("ratio_approx".into());
            }
            let mut rows = vec![header];
            rows.extend(table.rows.iter().map(|r| {
                let mut row = vec![r.k.to_string(), r.gromov.to_string(), r.width.to_string(), r.ratio.to_string()];
                if *approx {
                    row.push(decimal_approx(&r.ratio, APPROX_DIGITS));
                }
                row
            }));
            let mut t = tsv(&rows);
            if let (Some(e), Some(k)) = (&eps, &first) {
                t.push_str(&format!(
                    "# first k with ratio < 3/4 + {e}: {}\n",
                    k.map_or("none".into(), |k| k.to_string())
                ));
            }
            let v = json::ratio_table(&table, eps.as_ref().zip(first));
            text(v, t)
        }
        Command::GapScan { seed, count, box_size, points } => {
            let scan =
                bounds::gap_scan(GapScanParams { seed: *seed, count: *count, box_size: *box_size, points: *points });
            let mut rows = vec![vec![
                "index".to_string(),
                "vertices".into(),
                "width".into(),
                "area".into(),
                "equivalent".into(),
                "strict".into(),
                "holds".into(),
            ]];
            rows.extend(scan.samples.iter().map(|s| {
                vec![
                    s.index.to_string(),
                    s.polygon.len().to_string(),
                    s.width.to_string(),
                    s.area.to_string(),
                    s.gap.equivalent.to_string(),
                    s.gap.strict_inequality.to_string(),
                    s.gap.holds().to_string(),
                ]
            }));
            let violations = scan.exceptions().count();
            if violations > 0 {
                return Err(Error::GapViolation(violations));
            }
            text(json::gap_scan(&scan), tsv(&rows))
        }
    }
}

fn exit_code(e: &Error) -> i32 {
    if e.is_verification_failure() {
        2
    } else {
        1
    }
}

/// Runs one invocation; returns the process exit code.
pub fn run<I, S>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let rendered = e.render().to_string();
            let _ =
                if code == 0 { stdout.write_all(rendered.as_bytes()) } else { stderr.write_all(rendered.as_bytes()) };
            return code;
        }
    };

    if cli.format == Format::Svg && !single_polygon(&cli.command) {
        let _ = writeln!(stderr, "error: svg output is only available for single-polygon commands");
        return 1;
    }

    let result = execute(&cli.command, cli.format).and_then(|out| {
        let body = match out {
            Output::Text(s) => s,
            Output::Svg(p, c) => render_svg(&p, c.as_ref()),
        };
        match &cli.output {
            Some(path) => std::fs::write(path, body).map_err(Error::from),
            None => stdout.write_all(body.as_bytes()).map_err(Error::from),
        }
    });

    match result {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            exit_code(&e)
        }
    }
}

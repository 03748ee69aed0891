use crate::format::{csv_text, emit, g12, opt};
use crate::{parse_family, to_radians, Failure, Format, KnotArgs, RootsArgs, SweepArgs, VolumeArgs};
use conevol::geometry::{classify, geometric_branch, ConeManifoldSpec, GeometryError, SelectedRoots};
use conevol::riley::{build_cone_equation, cone_a, solve_cone_equation};
use conevol::volume::{compute_volume, VolumeError, VolumeOptions, VolumeResult};
use conevol::KnotFamily;
use serde::Serialize;
use serde_json::json;
use std::f64::consts::PI;

pub const SWEEP_HEADER: [&str; 7] = ["alpha", "regime", "volume", "error_estimate", "l_alpha", "alpha_K", "status"];
const CROSS_CHECK_TOL: f64 = 1e-6;

fn spec(family: KnotFamily, n: i64, alpha: f64) -> Result<ConeManifoldSpec, Failure> {
    ConeManifoldSpec::new(family, n, alpha).map_err(|e| Failure::General(e.to_string()))
}

fn classify_failure(e: VolumeError) -> Failure {
    match e {
        VolumeError::Geometry(g @ (GeometryError::OutOfRange { .. } | GeometryError::Euclidean { .. })) => {
            Failure::Range(g.to_string())
        }
        other => Failure::General(other.to_string()),
    }
}

fn metadata(command: &str, config: serde_json::Value) -> serde_json::Value {
    json!({ "tool": "conevol", "version": env!("CARGO_PKG_VERSION"), "command": command, "config": config })
}

pub fn volume(args: &VolumeArgs) -> Result<(), Failure> {
    let family = parse_family(&args.knot.family)?;
    let alpha = to_radians(args.alpha, args.degrees);
    let spec = spec(family, args.knot.n, alpha)?;
    let opts = VolumeOptions { tol_quad: args.tol_quad, cross_check: args.cross_check, ..Default::default() };
    let r = compute_volume(&spec, &opts).map_err(classify_failure)?;
    let text = match args.knot.format {
        Format::Csv => csv_text(
            &["family", "n", "alpha", "regime", "volume", "error_estimate", "schlafli_volume", "alpha_K"],
            &[vec![
                family.token().into(),
                args.knot.n.to_string(),
                g12(alpha),
                r.regime.token().into(),
                g12(r.volume),
                g12(r.error_estimate),
                opt(r.schlafli_volume),
                g12(r.alpha_k),
            ]],
        )?,
        Format::Json => {
            let meta = metadata(
                "volume",
                json!({ "family": family.token(), "n": args.knot.n, "alpha": alpha, "degrees": args.degrees,
                        "tol_quad": args.tol_quad, "cross_check": args.cross_check }),
            );
            let record = json!({
                "family": family.token(), "n": args.knot.n, "alpha": alpha, "regime": r.regime.token(),
                "volume": r.volume, "error_estimate": r.error_estimate, "schlafli_volume": r.schlafli_volume,
                "alpha_K": r.alpha_k, "l_alpha": r.l_alpha, "method": format!("{:?}", r.method).to_lowercase(),
            });
            format!("{}\n", serde_json::to_string_pretty(&json!({ "metadata": meta, "record": record })).expect("json"))
        }
    };
    emit(args.knot.out.as_deref(), &text)?;
    Ok(())
}

#[derive(Serialize, Clone, Debug)]
pub struct SweepRow {
    pub alpha: f64,
    pub regime: String,
    pub volume: Option<f64>,
    pub error_estimate: Option<f64>,
    pub l_alpha: Option<f64>,
    #[serde(rename = "alpha_K")]
    pub alpha_k: Option<f64>,
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub schlafli_volume: Option<f64>,
}

fn sweep_row(family: KnotFamily, n: i64, alpha: f64, opts: &VolumeOptions) -> SweepRow {
    let alpha_k = geometric_branch(family, n).ok().map(|b| b.alpha_k);
    let result: Result<VolumeResult, VolumeError> =
        ConeManifoldSpec::new(family, n, alpha).map_err(VolumeError::from).and_then(|s| compute_volume(&s, opts));
    match result {
        Ok(r) => {
            let status = match r.schlafli_volume {
                Some(s) if !((r.volume - s).abs() <= CROSS_CHECK_TOL) => {
                    format!("cross-check mismatch {}", g12((r.volume - s).abs()))
                }
                _ => "ok".into(),
            };
            SweepRow {
                alpha,
                regime: r.regime.token().into(),
                volume: Some(r.volume),
                error_estimate: Some(r.error_estimate),
                l_alpha: Some(r.l_alpha),
                alpha_k,
                status,
                schlafli_volume: r.schlafli_volume,
            }
        }
        Err(e) => {
            let (regime, status) = match &e {
                VolumeError::Geometry(GeometryError::Euclidean { .. }) => ("euclidean", "euclidean".to_string()),
                VolumeError::Geometry(GeometryError::OutOfRange { .. }) => ("out-of-range", "out-of-range".to_string()),
                other => ("", format!("error: {other}")),
            };
            SweepRow {
                alpha,
                regime: regime.into(),
                volume: None,
                error_estimate: None,
                l_alpha: None,
                alpha_k,
                status,
                schlafli_volume: None,
            }
        }
    }
}

pub fn grid(start: f64, stop: f64, count: usize) -> Result<Vec<f64>, Failure> {
    if count == 0 {
        return Err(Failure::General("count must be at least 1".into()));
    }
    if !(start > 0.0 && start <= stop && stop < 2.0 * PI) {
        return Err(Failure::General(format!("need 0 < alpha-start <= alpha-stop < 2π, got {start}..{stop}")));
    }
    if count == 1 {
        return Ok(vec![start]);
    }
    let step = (stop - start) / (count - 1) as f64;
    Ok((0..count).map(|i| if i + 1 == count { stop } else { start + step * i as f64 }).collect())
}

pub fn sweep(args: &SweepArgs) -> Result<(), Failure> {
    use rayon::prelude::*;
    let family = parse_family(&args.knot.family)?;
    if args.knot.n == 0 {
        return Err(Failure::General("n must be nonzero".into()));
    }
    let start = to_radians(args.alpha_start, args.degrees);
    let stop = to_radians(args.alpha_stop, args.degrees);
    let alphas = grid(start, stop, args.count)?;
    let opts = VolumeOptions { tol_quad: args.tol_quad, cross_check: args.cross_check, ..Default::default() };
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(j) = args.jobs {
        pool = pool.num_threads(j.max(1));
    }
    let pool = pool.build().map_err(|e| Failure::General(e.to_string()))?;
    let n = args.knot.n;
    // Build the branch once before fanning out.
    let _ = geometric_branch(family, n);
    let rows: Vec<SweepRow> = pool.install(|| alphas.par_iter().map(|&a| sweep_row(family, n, a, &opts)).collect());
    let text = match args.knot.format {
        Format::Csv => {
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        g12(r.alpha),
                        r.regime.clone(),
                        opt(r.volume),
                        opt(r.error_estimate),
                        opt(r.l_alpha),
                        opt(r.alpha_k),
                        r.status.clone(),
                    ]
                })
                .collect();
            csv_text(&SWEEP_HEADER, &records)?
        }
        Format::Json => {
            let meta = metadata(
                "sweep",
                json!({ "family": family.token(), "n": n, "alpha_start": start, "alpha_stop": stop,
                        "count": args.count, "degrees": args.degrees, "tol_quad": args.tol_quad,
                        "cross_check": args.cross_check }),
            );
            format!("{}\n", serde_json::to_string_pretty(&json!({ "metadata": meta, "rows": rows })).expect("json"))
        }
    };
    emit(args.knot.out.as_deref(), &text)?;
    Ok(())
}

pub fn critical_angle(args: &KnotArgs) -> Result<(), Failure> {
    let family = parse_family(&args.family)?;
    if args.n == 0 {
        return Err(Failure::General("n must be nonzero".into()));
    }
    let br = geometric_branch(family, args.n).map_err(|e| Failure::General(e.to_string()))?;
    let text = match args.format {
        Format::Csv => format!("alpha_K,collision_root\n{:.10},{}\n", br.alpha_k, g12(br.collision_root)),
        Format::Json => format!(
            "{}\n",
            serde_json::to_string_pretty(&json!({
                "family": family.token(), "n": args.n,
                "alpha_K": format!("{:.10}", br.alpha_k).parse::<f64>().expect("decimal"),
                "collision_root": br.collision_root,
            }))
            .expect("json")
        ),
    };
    emit(args.out.as_deref(), &text)?;
    Ok(())
}

pub fn roots(args: &RootsArgs) -> Result<(), Failure> {
    let family = parse_family(&args.knot.family)?;
    let alpha = to_radians(args.alpha, args.degrees);
    let spec = spec(family, args.knot.n, alpha)?;
    let eq = build_cone_equation(family, spec.n, cone_a(alpha));
    let mut roots = solve_cone_equation(&eq).map_err(|e| Failure::General(e.to_string()))?;
    roots.sort_by(|a, b| a.y.re.total_cmp(&b.y.re).then(a.y.im.total_cmp(&b.y.im)));
    let selected: Vec<conevol::Complex64> = match classify(&spec).map(|r| r.roots) {
        Ok(SelectedRoots::Hyperbolic { y0 }) => vec![y0],
        Ok(SelectedRoots::Spherical { plus, minus }) => vec![plus, minus],
        _ => vec![],
    };
    let is_selected = |y: conevol::Complex64| selected.iter().any(|s| (s - y).norm() < 1e-6);
    #[derive(Serialize)]
    struct RootRow {
        re: f64,
        im: f64,
        f_re: Option<f64>,
        f_im: Option<f64>,
        residual: f64,
        spurious: bool,
        selected: bool,
    }
    let rows: Vec<RootRow> = roots
        .iter()
        .map(|r| RootRow {
            re: r.y.re,
            im: r.y.im,
            f_re: r.f.map(|f| f.re),
            f_im: r.f.map(|f| f.im),
            residual: r.residual,
            spurious: r.spurious || !(r.residual <= args.tol_root),
            selected: is_selected(r.y),
        })
        .collect();
    let text = match args.knot.format {
        Format::Csv => {
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    vec![
                        g12(r.re),
                        g12(r.im),
                        opt(r.f_re),
                        opt(r.f_im),
                        g12(r.residual),
                        r.spurious.to_string(),
                        r.selected.to_string(),
                    ]
                })
                .collect();
            csv_text(&["re", "im", "f_re", "f_im", "residual", "spurious", "selected"], &records)?
        }
        Format::Json => {
            let meta = metadata(
                "roots",
                json!({ "family": family.token(), "n": spec.n, "alpha": alpha, "degrees": args.degrees,
                        "tol_root": args.tol_root }),
            );
            format!("{}\n", serde_json::to_string_pretty(&json!({ "metadata": meta, "roots": rows })).expect("json"))
        }
    };
    emit(args.knot.out.as_deref(), &text)?;
    Ok(())
}

//! Command implementations behind the CLI: certification runs, parameter
//! sweeps with threshold bisection, and fatness reports.

use std::time::Instant;

use crate::certify::{
    certify_strongly_positive, kernel_basis, max_principal_angle, strong_fatness, CertKind,
};
use crate::config::Config;
use crate::construct::{fatness_ops, normal_homogeneous, wallach, Coset};
use crate::curvature::min_sec_estimate_with;
use crate::error::{Error, Result};
use crate::exterior::{bianchi, form_to_op, FourForm, SymOp};
use crate::liealg::{build_split, invariant_four_forms, HomogeneousSplit, Space, SubspaceSelector};
use crate::reference;
use crate::report::{CertificateSummary, Report, SweepStep, ThresholdBracket};

/// A space resolved from CLI arguments: either a built-in or a custom
/// split loaded from JSON.
pub struct ResolvedSpace {
    pub name: String,
    pub space: Option<Space>,
    pub split: HomogeneousSplit,
}

pub fn resolve_space(
    name: &str,
    n: Option<usize>,
    k: Option<i64>,
    l: Option<i64>,
    split_json: Option<&std::path::Path>,
) -> Result<ResolvedSpace> {
    if let Some(path) = split_json {
        let j: crate::io::SplitJson = crate::io::read_json(path)?;
        let split = crate::io::split_from_json(&j)?;
        return Ok(ResolvedSpace {
            name: format!("custom({})", path.display()),
            space: None,
            split,
        });
    }
    let space = match name {
        "sphere" => Space::Sphere(n.ok_or_else(|| miss("sphere", "--n"))?),
        "cpn" => Space::Cpn(n.ok_or_else(|| miss("cpn", "--n"))?),
        "hpn" => Space::Hpn(n.ok_or_else(|| miss("hpn", "--n"))?),
        "w6" => Space::W6,
        "w12" => Space::W12,
        "w7" => Space::W7 {
            k: k.ok_or_else(|| miss("w7", "--k"))?,
            l: l.ok_or_else(|| miss("w7", "--l"))?,
        },
        "b7" => Space::B7,
        "b13" => Space::B13,
        "berger7" => Space::BergerSphere(1),
        other => return Err(Error::InvalidSpace(other.to_string())),
    };
    Ok(ResolvedSpace {
        name: space.name(),
        space: Some(space),
        split: build_split(space)?,
    })
}

fn miss(space: &str, flag: &str) -> Error {
    Error::InvalidParameter(format!("space '{space}' requires {flag}"))
}

/// The operator a certification run targets, at sweep/cli parameter value
/// `param`, together with the kernel dimension of its semidefinite
/// companion.
fn space_operator(resolved: &ResolvedSpace, param: f64, cfg: &Config) -> Result<(SymOp, usize)> {
    let split = &resolved.split;
    let tol = cfg.zero_tol;
    match resolved.space {
        Some(Space::Sphere(_)) | Some(Space::B7) => {
            let (r, alpha) = normal_homogeneous(split, Coset::GModH)?;
            let rhat = r.add(&form_to_op(&bianchi(&alpha)?).scale(3.0))?;
            Ok((r, kernel_basis(&rhat, tol).ncols()))
        }
        Some(Space::Cpn(_)) | Some(Space::Hpn(_)) => {
            let (r, alpha) = normal_homogeneous(split, Coset::GModK)?;
            let rhat = r.add(&form_to_op(&bianchi(&alpha)?).scale(3.0))?;
            Ok((r, kernel_basis(&rhat, tol).ncols()))
        }
        Some(Space::BergerSphere(_)) => {
            let t = reference::berger_lambda_to_t(split, param)?;
            let w = wallach(split, t)?;
            Ok((w.op().clone(), kernel_basis(w.rhat(), tol).ncols()))
        }
        // fibration spaces and custom splits carry the g_t family; a
        // split without fiber directions gets its normal homogeneous
        // operator instead
        _ if split.dim_p() > 0 => {
            let w = wallach(split, param)?;
            Ok((w.op().clone(), kernel_basis(w.rhat(), tol).ncols()))
        }
        _ => {
            let (r, alpha) = normal_homogeneous(split, Coset::GModH)?;
            let rhat = r.add(&form_to_op(&bianchi(&alpha)?).scale(3.0))?;
            Ok((r, kernel_basis(&rhat, tol).ncols()))
        }
    }
}

/// The 4-form search basis for a space: H-invariant forms over the coset
/// tangent space (or the full Λ⁴ when configured).
fn search_basis(resolved: &ResolvedSpace, cfg: &Config) -> Result<Vec<FourForm>> {
    let split = &resolved.split;
    let over_base = matches!(resolved.space, Some(Space::Cpn(_)) | Some(Space::Hpn(_)));
    let n = if over_base {
        split.dim_m()
    } else {
        split.tangent_dim()
    };
    if cfg.full_lambda4 {
        let b4 = crate::exterior::Basis4::new(n);
        return (0..b4.len())
            .map(|t| {
                let mut coords = nalgebra::DVector::zeros(b4.len());
                coords[t] = 1.0;
                FourForm::new(b4.clone(), coords)
            })
            .collect();
    }
    let selector = if over_base {
        SubspaceSelector::MOnly
    } else {
        SubspaceSelector::Tangent
    };
    invariant_four_forms(split, selector)
}

/// Build, certify and report one space at one parameter value.
pub fn cmd_certify(resolved: &ResolvedSpace, param: f64, cfg: &Config) -> Result<Report> {
    let start = Instant::now();
    let (op, kernel_dim) = space_operator(resolved, param, cfg)?;
    let search = search_basis(resolved, cfg)?;
    let cert = certify_strongly_positive(&op, &search, None, cfg)?;
    let mut report = Report::new(resolved.name.clone(), cfg.clone());
    report.t_or_lambda = Some(param);
    report.kernel_dims = vec![kernel_dim];
    report.certificate = Some(CertificateSummary::from_certificate(&cert, true));
    if cfg.timings {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tri {
    Yes,
    No,
    Unknown,
}

/// Sweep a parameter range: per-step certification, plain operator
/// positivity, and the sectional-curvature estimate; every predicate
/// transition between consecutive steps is refined by bisection.
pub fn cmd_sweep(
    resolved: &ResolvedSpace,
    lo: f64,
    hi: f64,
    steps: usize,
    cfg: &Config,
) -> Result<Report> {
    if lo >= hi || steps < 2 {
        return Err(Error::InvalidParameter(
            "sweep needs lo < hi and at least 2 steps".into(),
        ));
    }
    let start = Instant::now();
    let search = search_basis(resolved, cfg)?;
    let certify_at = |param: f64| -> Result<Tri> {
        let (op, _) = space_operator(resolved, param, cfg)?;
        let cert = certify_strongly_positive(&op, &search, None, cfg)?;
        Ok(match cert.kind {
            CertKind::PrimalPositive => Tri::Yes,
            CertKind::DualInfeasible => Tri::No,
            _ => Tri::Unknown,
        })
    };
    let lambda_min_at =
        |param: f64| -> Result<f64> { Ok(space_operator(resolved, param, cfg)?.0.lambda_min()) };
    let min_sec_at = |param: f64| -> Result<f64> {
        let (op, _) = space_operator(resolved, param, cfg)?;
        Ok(min_sec_estimate_with(
            &op,
            cfg.minsec_restarts,
            cfg.seed,
            cfg.minsec_iters,
            cfg.minsec_value_tol,
        )?
        .value)
    };
    let mut report = Report::new(resolved.name.clone(), cfg.clone());
    let grid: Vec<f64> = (0..steps)
        .map(|i| lo + (hi - lo) * i as f64 / (steps - 1) as f64)
        .collect();
    let mut strong: Vec<Tri> = Vec::new();
    let mut rpos: Vec<bool> = Vec::new();
    let mut secpos: Vec<bool> = Vec::new();
    for &param in &grid {
        let kind = certify_at(param)?;
        let lam = lambda_min_at(param)?;
        let ms = min_sec_at(param)?;
        strong.push(kind);
        rpos.push(lam > 0.0);
        secpos.push(ms > 0.0);
        report.sweep.push(SweepStep {
            param,
            certificate_kind: match kind {
                Tri::Yes => CertKind::PrimalPositive,
                Tri::No => CertKind::DualInfeasible,
                Tri::Unknown => CertKind::Inconclusive,
            },
            operator_lambda_min: lam,
            min_sec_estimate: ms,
        });
    }
    // refine each sign change by bisection
    for i in 1..grid.len() {
        if strong[i - 1] != strong[i] && strong[i - 1] != Tri::Unknown && strong[i] != Tri::Unknown
        {
            let b = bisect_tri(
                grid[i - 1],
                grid[i],
                strong[i - 1] == Tri::Yes,
                cfg,
                &certify_at,
            )?;
            report.thresholds.push(named(b, "strongly_positive"));
        }
        if rpos[i - 1] != rpos[i] {
            let f = |p: f64| Ok(lambda_min_at(p)? > 0.0);
            let b = bisect_bool(grid[i - 1], grid[i], cfg, &f)?;
            report.thresholds.push(named(b, "operator_positive"));
        }
        if secpos[i - 1] != secpos[i] {
            let f = |p: f64| Ok(min_sec_at(p)? > 0.0);
            let b = bisect_bool(grid[i - 1], grid[i], cfg, &f)?;
            report.thresholds.push(named(b, "sec_positive"));
        }
    }
    if cfg.timings {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

fn named((lo, hi, held_lo): (f64, f64, bool), predicate: &str) -> ThresholdBracket {
    ThresholdBracket {
        predicate: predicate.to_string(),
        lo,
        hi,
        held_at_lo: held_lo,
    }
}

fn bisect_bool(
    mut lo: f64,
    mut hi: f64,
    cfg: &Config,
    f: &dyn Fn(f64) -> Result<bool>,
) -> Result<(f64, f64, bool)> {
    let at_lo = f(lo)?;
    while hi - lo > cfg.bisect_tol {
        let mid = 0.5 * (lo + hi);
        if f(mid)? == at_lo {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok((lo, hi, at_lo))
}

fn bisect_tri(
    mut lo: f64,
    mut hi: f64,
    yes_at_lo: bool,
    cfg: &Config,
    f: &dyn Fn(f64) -> Result<Tri>,
) -> Result<(f64, f64, bool)> {
    while hi - lo > cfg.bisect_tol {
        let mid = 0.5 * (lo + hi);
        match f(mid)? {
            // an indecisive midpoint leaves the bracket honest but wide
            Tri::Unknown => break,
            Tri::Yes => {
                if yes_at_lo {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            Tri::No => {
                if yes_at_lo {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
        }
    }
    Ok((lo, hi, yes_at_lo))
}

/// Fatness report: kernel dimension of F, the strong-fatness certificate,
/// and the comparison against the published kernel span for built-ins.
pub fn cmd_fatness(resolved: &ResolvedSpace, cfg: &Config) -> Result<Report> {
    let start = Instant::now();
    let split = &resolved.split;
    let fat = fatness_ops(split)?;
    let kernel = kernel_basis(&fat.f, cfg.zero_tol);
    let cert = strong_fatness(split, cfg)?;
    let mut report = Report::new(resolved.name.clone(), cfg.clone());
    report.kernel_dims = vec![kernel.ncols()];
    report.certificate = Some(CertificateSummary::from_certificate(&cert, true));
    if let Some(space) = resolved.space {
        if let Some(combos) = reference::known_kernel(space) {
            let reference_span = reference::span_of_combos(fat.f.basis(), &combos);
            report.kernel_reference_max_angle = max_principal_angle(&kernel, &reference_span);
        }
    }
    if fat.l_map.amax() < 1e-12 {
        eprintln!("note: the bracket [m, p] vanishes identically; the bundle is not fat");
    }
    if cfg.timings {
        report.wall_time_ms = Some(start.elapsed().as_millis());
    }
    Ok(report)
}

/// Process exit code for a report: 0 feasible, 2 inconclusive,
/// 3 infeasible.
pub fn exit_code(report: &Report) -> i32 {
    match report.certificate.as_ref().map(|c| c.kind) {
        Some(CertKind::PrimalPositive) | Some(CertKind::PrimalNonnegative) | None => 0,
        Some(CertKind::Inconclusive) => 2,
        Some(CertKind::DualInfeasible) => 3,
    }
}

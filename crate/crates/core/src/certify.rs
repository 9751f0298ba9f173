//! Semidefinite feasibility certification over a subspace of 4-form
//! modifications.
//!
//! The primal question: does some ω in the span of the search basis make
//! `R + op(ω)` positive-definite with margin δ (or positive-semidefinite)?
//! The solver alternates Dykstra-corrected projections between the affine
//! set `{R + span}` and the spectral set `{X ⪰ δI}`. A feasible point is
//! re-verified by a fresh eigendecomposition. When the sets are separated,
//! the displacement between them yields a dual candidate S — a unit-trace
//! positive-semidefinite operator orthogonal to the search span whose
//! validity is checked independently; `tr(RS) ≤ ε` then bounds
//! `λ_min(R + ω) ≤ ε` for every ω in the span, and when `𝔟(S) = 0` for
//! every ω in Λ⁴V.

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::exterior::{bianchi, form_to_op_on, Basis2, FourForm, SymOp};
use crate::liealg::{invariant_four_forms, HomogeneousSplit, SubspaceSelector};

/// Outcome kind of a certification run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CertKind {
    PrimalPositive,
    PrimalNonnegative,
    DualInfeasible,
    Inconclusive,
}

/// Solver diagnostics retained with a certificate.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct Residuals {
    /// Final distance between the two projection iterates.
    pub gap: f64,
    /// Independently recomputed λ_min of the certified modification.
    pub primal_lambda_min: Option<f64>,
    /// λ_min of the dual operator (should be ≥ −psd tolerance).
    pub dual_psd_min: Option<f64>,
    /// Norm of the Bianchi component of the dual operator.
    pub dual_bianchi_norm: Option<f64>,
    /// Trace of the dual operator (normalized to 1).
    pub dual_trace: Option<f64>,
}

/// Result of a certification: a primal modification, a dual separator, or
/// an honest `Inconclusive` after the iteration budget.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub kind: CertKind,
    /// Coordinates of ω over the search basis (primal kinds).
    pub omega_coords: Option<DVector<f64>>,
    /// The modification as a 4-form (primal kinds).
    pub omega: Option<FourForm>,
    /// Verified λ_min(R + op(ω)) (primal kinds).
    pub lambda_min: Option<f64>,
    /// Dual operator over the pair basis of R (dual kind).
    pub dual: Option<DMatrix<f64>>,
    /// `tr(R·S)` (dual kind).
    pub pairing: Option<f64>,
    pub iterations: usize,
    pub residuals: Residuals,
    /// The definiteness margin the run certified against.
    pub delta: f64,
}

impl Certificate {
    fn inconclusive(iterations: usize, gap: f64, delta: f64) -> Self {
        Self {
            kind: CertKind::Inconclusive,
            omega_coords: None,
            omega: None,
            lambda_min: None,
            dual: None,
            pairing: None,
            iterations,
            residuals: Residuals {
                gap,
                ..Residuals::default()
            },
            delta,
        }
    }
}

/// Orthonormal eigenbasis of the near-null space: eigenvectors with
/// `|λ| ≤ tol · max|λ|`.
pub fn kernel_basis(a: &SymOp, tol: f64) -> DMatrix<f64> {
    kernel_of_matrix(a.matrix(), tol)
}

/// [`kernel_basis`] for a plain symmetric block.
pub fn kernel_of_block(m: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    kernel_of_matrix(m, tol)
}

pub(crate) fn kernel_of_matrix(m: &DMatrix<f64>, tol: f64) -> DMatrix<f64> {
    let eig = m.clone().symmetric_eigen();
    let scale = eig.eigenvalues.amax().max(1e-300);
    let keep: Vec<usize> = (0..eig.eigenvalues.len())
        .filter(|&i| eig.eigenvalues[i].abs() <= tol * scale)
        .collect();
    let mut out = DMatrix::zeros(m.nrows(), keep.len());
    for (c, &i) in keep.iter().enumerate() {
        out.set_column(c, &eig.eigenvectors.column(i));
    }
    out
}

/// Largest principal angle (radians) between the column spans of two
/// orthonormal bases; `None` when the dimensions differ.
pub fn max_principal_angle(k1: &DMatrix<f64>, k2: &DMatrix<f64>) -> Option<f64> {
    if k1.ncols() != k2.ncols() || k1.nrows() != k2.nrows() {
        return None;
    }
    if k1.ncols() == 0 {
        return Some(0.0);
    }
    let prod = k1.transpose() * k2;
    let svd = prod.svd(false, false);
    let smin = svd
        .singular_values
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min)
        .clamp(-1.0, 1.0);
    Some(smin.acos())
}

/// First-order perturbation constant: given A positive-semidefinite and B
/// positive-definite on ker A, find ε > 0 with `A + εB` positive-definite.
/// Starts at `ε₀ = λ⁺min(A)/(2‖B‖)` and halves until the smallest
/// eigenvalue is positive; `verified` reports the independent eigenvalue
/// recomputation.
pub fn first_order_epsilon(a: &SymOp, b: &SymOp, kernel_tol: f64) -> Result<(f64, bool)> {
    if a.basis() != b.basis() {
        return Err(Error::DimensionMismatch(
            "operators over different pair bases".into(),
        ));
    }
    let eig = a.matrix().clone().symmetric_eigen();
    let scale = eig.eigenvalues.amax().max(1e-300);
    let lam_min = eig.eigenvalues.min();
    if lam_min < -kernel_tol * scale {
        return Err(Error::HypothesisFailed(format!(
            "first operator is not positive-semidefinite (λ_min = {lam_min:.3e})"
        )));
    }
    let kernel = kernel_of_matrix(a.matrix(), kernel_tol);
    let b_norm = b.matrix().norm();
    let lam_plus = eig
        .eigenvalues
        .iter()
        .copied()
        .filter(|&l| l > kernel_tol * scale)
        .fold(f64::INFINITY, f64::min);
    let lam_plus = if lam_plus.is_finite() {
        lam_plus
    } else {
        scale
    };
    if kernel.ncols() > 0 {
        let restricted = kernel.transpose() * b.matrix() * &kernel;
        let min_on_kernel = restricted.symmetric_eigenvalues().min();
        if min_on_kernel <= 0.0 {
            return Err(Error::HypothesisFailed(format!(
                "second operator is not positive-definite on the kernel \
                 (λ_min = {min_on_kernel:.3e})"
            )));
        }
    }
    let mut eps = if b_norm > 0.0 {
        lam_plus / (2.0 * b_norm)
    } else {
        return Ok((lam_plus / 2.0, a.lambda_min() > 0.0));
    };
    for _ in 0..200 {
        let lam = (a.matrix() + b.matrix() * eps)
            .symmetric_eigenvalues()
            .min();
        if lam > 0.0 {
            return Ok((eps, true));
        }
        eps *= 0.5;
    }
    Ok((eps, false))
}

struct Orthonormalized {
    /// Frobenius-orthonormal span directions.
    dirs: Vec<DMatrix<f64>>,
    /// Original search operators (for coordinate recovery).
    raw: Vec<DMatrix<f64>>,
}

fn orthonormalize(raw: Vec<DMatrix<f64>>) -> Result<Orthonormalized> {
    let mut dirs: Vec<DMatrix<f64>> = Vec::new();
    for phi in &raw {
        let mut v = phi.clone();
        for d in &dirs {
            let c = v.dot(d);
            v -= d * c;
        }
        let norm = v.norm();
        if norm > 1e-10 * phi.norm().max(1.0) {
            dirs.push(v / norm);
        }
    }
    if dirs.len() != raw.len() {
        return Err(Error::RankDeficientBasis {
            rank: dirs.len(),
            count: raw.len(),
        });
    }
    Ok(Orthonormalized { dirs, raw })
}

struct DualCheck {
    s: DMatrix<f64>,
    pairing: f64,
    psd_min: f64,
    bianchi_norm: f64,
    trace: f64,
}

/// Validate a dual candidate; `None` when it fails any bound.
fn validate_dual(
    r: &SymOp,
    span: &Orthonormalized,
    v: &DMatrix<f64>,
    eps_dual: f64,
    strict_negative: bool,
) -> Option<DualCheck> {
    let sym = (v + v.transpose()) * 0.5;
    let tr = -sym.trace();
    if tr <= 1e-14 {
        return None;
    }
    let s = sym * (-1.0 / tr);
    let psd_min = s.clone().symmetric_eigenvalues().min();
    if psd_min < -1e-9 {
        return None;
    }
    // orthogonality to the search span
    for d in &span.dirs {
        if s.dot(d).abs() > 1e-7 {
            return None;
        }
    }
    // Bianchi component of S embedded over the full pair basis
    let full = embed_full(r.basis(), &s);
    let b_norm = match bianchi(&full) {
        Ok(b) => b.norm(),
        Err(_) => return None,
    };
    if b_norm > 1e-7 {
        return None;
    }
    let pairing = r.matrix().dot(&s);
    let ok = if strict_negative {
        pairing < 0.0
    } else {
        pairing <= eps_dual
    };
    if !ok {
        return None;
    }
    Some(DualCheck {
        s,
        pairing,
        psd_min,
        bianchi_norm: b_norm,
        trace: 1.0,
    })
}

/// Embed a sub-basis operator into the full pair basis (zero elsewhere).
fn embed_full(basis: &Basis2, m: &DMatrix<f64>) -> SymOp {
    if basis.is_full() {
        return SymOp::new(basis.clone(), m.clone()).expect("validated upstream");
    }
    let full = Basis2::full(basis.n());
    let rows: Vec<usize> = basis
        .pairs()
        .iter()
        .map(|&(i, j)| full.position(i, j).expect("subset of full"))
        .collect();
    let mut out = DMatrix::zeros(full.len(), full.len());
    for (a, &ra) in rows.iter().enumerate() {
        for (b, &rb) in rows.iter().enumerate() {
            out[(ra, rb)] = m[(a, b)];
        }
    }
    SymOp::new(full, out).expect("embedding preserves symmetry")
}

fn clip_spectrum(x: &DMatrix<f64>, floor: f64) -> DMatrix<f64> {
    let eig = ((x + x.transpose()) * 0.5).symmetric_eigen();
    let mut vals = eig.eigenvalues.clone();
    for v in vals.iter_mut() {
        if *v < floor {
            *v = floor;
        }
    }
    let mut scaled = eig.eigenvectors.clone();
    for (c, &v) in vals.iter().enumerate() {
        scaled.column_mut(c).scale_mut(v);
    }
    &scaled * eig.eigenvectors.transpose()
}

/// Shared engine for the positive (`delta > 0`, slack `psd_floor = delta`)
/// and nonnegative (`delta = 0`) certifications.
fn run_engine(
    r: &SymOp,
    search: &[FourForm],
    delta: f64,
    accept_floor: f64,
    strict_dual: bool,
    cfg: &Config,
) -> Result<Certificate> {
    let basis = r.basis().clone();
    let raw: Vec<DMatrix<f64>> = search
        .iter()
        .map(|omega| Ok(form_to_op_on(&basis, omega)?.into_matrix()))
        .collect::<Result<_>>()?;
    let span = orthonormalize(raw)?;
    let a0 = r.matrix().clone();
    let project_affine = |x: &DMatrix<f64>| {
        let d = x - &a0;
        let mut out = a0.clone();
        for dir in &span.dirs {
            out += dir * d.dot(dir);
        }
        out
    };
    // the solver targets a slightly larger margin so the independent
    // re-verification at delta has room
    let solve_floor = if delta > 0.0 { delta * 1.05 } else { 0.0 };
    let mut x = a0.clone();
    let mut p = DMatrix::zeros(x.nrows(), x.ncols());
    let mut q = DMatrix::zeros(x.nrows(), x.ncols());
    let mut gap = f64::INFINITY;
    let mut last_dual_try = 0usize;
    for it in 0..cfg.max_iters {
        let y = clip_spectrum(&(&x + &p), solve_floor);
        p = &x + &p - &y;
        let xn = project_affine(&(&y + &q));
        q = &y + &q - &xn;
        gap = (&xn - &y).amax();
        x = xn;
        // the affine iterate is R + span-modification; accept as soon as
        // its spectrum clears the floor
        let lam = x.clone().symmetric_eigenvalues().min();
        if lam >= accept_floor {
            return finish_primal(r, &span, &x, delta, it + 1, gap);
        }
        // try extracting a dual separator once the iterates settle
        let settled = it > 200 && it - last_dual_try >= 100;
        if settled || it + 1 == cfg.max_iters {
            last_dual_try = it;
            let v = &x - &y;
            if let Some(check) = validate_dual(r, &span, &v, cfg.eps_dual, strict_dual) {
                return Ok(Certificate {
                    kind: CertKind::DualInfeasible,
                    omega_coords: None,
                    omega: None,
                    lambda_min: None,
                    dual: Some(check.s),
                    pairing: Some(check.pairing),
                    iterations: it + 1,
                    residuals: Residuals {
                        gap,
                        dual_psd_min: Some(check.psd_min),
                        dual_bianchi_norm: Some(check.bianchi_norm),
                        dual_trace: Some(check.trace),
                        ..Residuals::default()
                    },
                    delta,
                });
            }
        }
    }
    Ok(Certificate::inconclusive(cfg.max_iters, gap, delta))
}

fn finish_primal(
    r: &SymOp,
    span: &Orthonormalized,
    x: &DMatrix<f64>,
    delta: f64,
    iterations: usize,
    gap: f64,
) -> Result<Certificate> {
    // recover coordinates over the original (possibly non-orthonormal) basis
    let k = span.raw.len();
    let d = x - r.matrix();
    let mut gram = DMatrix::zeros(k, k);
    let mut rhs = DVector::zeros(k);
    for i in 0..k {
        rhs[i] = d.dot(&span.raw[i]);
        for j in 0..k {
            gram[(i, j)] = span.raw[i].dot(&span.raw[j]);
        }
    }
    let coords = gram
        .lu()
        .solve(&rhs)
        .ok_or(Error::RankDeficientBasis { rank: 0, count: k })?;
    Ok(Certificate {
        kind: if delta > 0.0 {
            CertKind::PrimalPositive
        } else {
            CertKind::PrimalNonnegative
        },
        omega_coords: Some(coords),
        omega: None, // assembled by the public wrappers
        lambda_min: None,
        dual: None,
        pairing: None,
        iterations,
        residuals: Residuals {
            gap,
            ..Residuals::default()
        },
        delta,
    })
}

fn assemble_omega(search: &[FourForm], coords: &DVector<f64>) -> Result<FourForm> {
    let mut omega = search[0].scale(coords[0]);
    for (i, phi) in search.iter().enumerate().skip(1) {
        omega = omega.add(&phi.scale(coords[i]))?;
    }
    Ok(omega)
}

/// Soundness gate: rebuild `R + op(ω)` from scratch and eigendecompose.
fn verify_primal(
    r: &SymOp,
    search: &[FourForm],
    cert: &mut Certificate,
    floor: f64,
) -> Result<bool> {
    let coords = cert.omega_coords.as_ref().expect("primal certificate");
    let omega = assemble_omega(search, coords)?;
    let modified = r.add(&form_to_op_on(r.basis(), &omega)?)?;
    let lam = modified.lambda_min();
    cert.lambda_min = Some(lam);
    cert.residuals.primal_lambda_min = Some(lam);
    cert.omega = Some(omega);
    Ok(lam >= floor)
}

/// Certify `λ_min(R + op(ω)) ≥ δ` for some ω in the span of
/// `search`. `delta = None` uses `cfg.delta_rel · ‖R‖`.
///
/// A `DualInfeasible` outcome carries a verified separator proving no ω in
/// the span reaches margin δ (and, since the dual satisfies the Bianchi
/// bound, no ω in all of Λ⁴V does beyond tolerance).
pub fn certify_strongly_positive(
    r: &SymOp,
    search: &[FourForm],
    delta: Option<f64>,
    cfg: &Config,
) -> Result<Certificate> {
    if search.is_empty() {
        return certify_without_search(r, delta, cfg);
    }
    let delta = delta.unwrap_or(cfg.delta_rel * problem_scale(r, search));
    if delta <= 0.0 {
        return Err(Error::InvalidParameter("delta must be positive".into()));
    }
    let mut cert = run_engine(r, search, delta, delta, false, cfg)?;
    if matches!(cert.kind, CertKind::PrimalPositive) && !verify_primal(r, search, &mut cert, delta)?
    {
        return Ok(Certificate::inconclusive(
            cert.iterations,
            cert.residuals.gap,
            delta,
        ));
    }
    Ok(cert)
}

/// Certify `R + op(ω) ⪰ −ε_psd` for some ω in the span, or produce a dual
/// separator with strictly negative pairing, proving not even
/// positive-semidefiniteness is reachable.
pub fn certify_strongly_nonnegative(
    r: &SymOp,
    search: &[FourForm],
    cfg: &Config,
) -> Result<Certificate> {
    let scale = problem_scale(r, search);
    let eps = cfg.psd_eps * scale;
    if search.is_empty() {
        let lam = r.lambda_min();
        let mut cert = Certificate::inconclusive(0, 0.0, 0.0);
        if lam >= -eps {
            cert.kind = CertKind::PrimalNonnegative;
            cert.lambda_min = Some(lam);
            cert.omega_coords = Some(DVector::zeros(0));
            cert.omega = Some(FourForm::zero(r.n()));
        }
        return Ok(cert);
    }
    let mut cert = run_engine(r, search, 0.0, -eps, true, cfg)?;
    if matches!(cert.kind, CertKind::PrimalNonnegative)
        && !verify_primal(r, search, &mut cert, -eps * 1.5)?
    {
        return Ok(Certificate::inconclusive(
            cert.iterations,
            cert.residuals.gap,
            0.0,
        ));
    }
    Ok(cert)
}

/// The scale relative tolerances refer to: the operator together with the
/// modification directions, so a vanishing operator (e.g. a fatness map
/// with zero brackets) still poses a well-scaled problem.
fn problem_scale(r: &SymOp, search: &[FourForm]) -> f64 {
    let forms = search.iter().map(FourForm::norm).fold(0.0f64, f64::max);
    r.norm_bound().max(forms).max(1e-300)
}

/// Degenerate search space: only ω = 0 is available.
fn certify_without_search(r: &SymOp, delta: Option<f64>, cfg: &Config) -> Result<Certificate> {
    let scale = r.norm_bound().max(1e-300);
    let delta = delta.unwrap_or(cfg.delta_rel * scale);
    let lam = r.lambda_min();
    let mut cert = Certificate::inconclusive(0, 0.0, delta);
    if lam >= delta {
        cert.kind = CertKind::PrimalPositive;
        cert.lambda_min = Some(lam);
        cert.omega_coords = Some(DVector::zeros(0));
        cert.omega = Some(FourForm::zero(r.n()));
        cert.residuals.primal_lambda_min = Some(lam);
    }
    Ok(cert)
}

/// Strong fatness of a homogeneous fibration: certify `F + op(τ) ≻ 0` on
/// m⊗p with τ ranging over the H-invariant part of Λ²m⊗Λ²p.
pub fn strong_fatness(split: &HomogeneousSplit, cfg: &Config) -> Result<Certificate> {
    let fat = crate::construct::fatness_ops(split)?;
    let search = invariant_four_forms(split, SubspaceSelector::MixedPairs)?;
    certify_strongly_positive(&fat.f, &search, None, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exterior::form_to_op;
    use approx::assert_abs_diff_eq;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;

    fn full_lambda4_basis(n: usize) -> Vec<FourForm> {
        let b4 = crate::exterior::Basis4::new(n);
        (0..b4.len())
            .map(|t| {
                let mut coords = DVector::zeros(b4.len());
                coords[t] = 1.0;
                FourForm::new(b4.clone(), coords).unwrap()
            })
            .collect()
    }

    #[test]
    fn identity_certifies_with_small_omega() {
        let cfg = Config::default();
        let r = SymOp::identity(5);
        let cert = certify_strongly_positive(&r, &full_lambda4_basis(5), None, &cfg).unwrap();
        assert_eq!(cert.kind, CertKind::PrimalPositive);
        assert!(cert.omega.as_ref().unwrap().norm() < 1e-6);
        assert!(cert.lambda_min.unwrap() >= cert.delta);
    }

    #[test]
    fn negative_identity_yields_dual() {
        let cfg = Config::default();
        let r = SymOp::identity(5).scale(-1.0);
        let cert = certify_strongly_nonnegative(&r, &full_lambda4_basis(5), &cfg).unwrap();
        assert_eq!(cert.kind, CertKind::DualInfeasible);
        let s = cert.dual.as_ref().unwrap();
        assert!(cert.pairing.unwrap() < 0.0);
        assert_abs_diff_eq!(s.trace(), 1.0, epsilon = 1e-9);
        assert!(cert.residuals.dual_bianchi_norm.unwrap() <= 1e-7);
    }

    #[test]
    fn planted_feasible_problem_recovers_certificate() {
        // R = PD - op(omega*): modifying by omega* restores definiteness
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let n = 5;
        let cfg = Config::default();
        let basis = full_lambda4_basis(n);
        let m = SymOp::identity(n).matrix().clone();
        let omega_star = {
            let b4 = crate::exterior::Basis4::new(n);
            let coords = DVector::from_fn(b4.len(), |_, _| rng.random::<f64>() - 0.5);
            FourForm::new(b4, coords).unwrap()
        };
        let r = SymOp::new(Basis2::full(n), m - form_to_op(&omega_star).matrix()).unwrap();
        let cert = certify_strongly_positive(&r, &basis, None, &cfg).unwrap();
        assert_eq!(cert.kind, CertKind::PrimalPositive);
        let lam = cert.lambda_min.unwrap();
        assert!(lam >= cert.delta, "verified margin {lam}");
    }

    #[test]
    fn rank_deficient_basis_rejected() {
        let cfg = Config::default();
        let r = SymOp::identity(5);
        let b4 = crate::exterior::Basis4::new(5);
        let mut coords = DVector::zeros(b4.len());
        coords[0] = 1.0;
        let omega = FourForm::new(b4.clone(), coords.clone()).unwrap();
        let dup = FourForm::new(b4, coords * 2.0).unwrap();
        match certify_strongly_positive(&r, &[omega, dup], None, &cfg) {
            Err(Error::RankDeficientBasis { .. }) => {}
            other => panic!("expected rank deficiency, got {other:?}"),
        }
    }

    #[test]
    fn first_order_epsilon_cases() {
        // A with a kernel, B the identity on it
        let mut m = DMatrix::zeros(6, 6);
        for i in 0..4 {
            m[(i, i)] = 1.0 + i as f64;
        }
        let a = SymOp::new(Basis2::full(4), m).unwrap();
        let b = SymOp::identity(4);
        let (eps, verified) = first_order_epsilon(&a, &b, 1e-9).unwrap();
        assert!(verified && eps > 0.0);
        // hypothesis failure: B negative on the kernel
        let bneg = SymOp::identity(4).scale(-1.0);
        assert!(matches!(
            first_order_epsilon(&a, &bneg, 1e-9),
            Err(Error::HypothesisFailed(_))
        ));
        // positive-definite A with B = 0 returns the half-spectral-gap
        let apd = SymOp::identity(4).scale(2.0);
        let (eps0, ok) = first_order_epsilon(&apd, &SymOp::zero(4), 1e-9).unwrap();
        assert!(ok && eps0 > 0.0);
    }

    #[test]
    fn kernel_basis_of_identity_is_empty() {
        let k = kernel_basis(&SymOp::identity(5), 1e-9);
        assert_eq!(k.ncols(), 0);
    }

    #[test]
    fn principal_angles_detect_span_equality() {
        let mut k1 = DMatrix::zeros(4, 2);
        k1[(0, 0)] = 1.0;
        k1[(1, 1)] = 1.0;
        // same span, rotated basis
        let c = std::f64::consts::FRAC_1_SQRT_2;
        let mut k2 = DMatrix::zeros(4, 2);
        k2[(0, 0)] = c;
        k2[(1, 0)] = c;
        k2[(0, 1)] = c;
        k2[(1, 1)] = -c;
        assert!(max_principal_angle(&k1, &k2).unwrap() < 1e-12);
        let mut k3 = k1.clone();
        k3[(1, 1)] = 0.0;
        k3[(2, 1)] = 1.0;
        assert!(max_principal_angle(&k1, &k3).unwrap() > 1.0);
    }
}

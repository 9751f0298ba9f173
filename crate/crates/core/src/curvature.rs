//! Sectional-curvature semantics of a symmetric operator on Λ²V.

use nalgebra::{DMatrix, DVector};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exterior::{wedge2, Basis2, SymOp};

/// An oriented 2-plane given by an orthonormal pair.
#[derive(Debug, Clone)]
pub struct Plane {
    x: DVector<f64>,
    y: DVector<f64>,
}

impl Plane {
    pub const ORTHO_TOL: f64 = 1e-9;

    pub fn new(x: DVector<f64>, y: DVector<f64>) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::DimensionMismatch(
                "plane vectors of different lengths".into(),
            ));
        }
        let checks = [
            ((x.norm() - 1.0).abs(), "|x| = 1"),
            ((y.norm() - 1.0).abs(), "|y| = 1"),
            (x.dot(&y).abs(), "<x,y> = 0"),
        ];
        for (err, what) in checks {
            if err > Self::ORTHO_TOL {
                return Err(Error::NotOrthonormal(format!(
                    "{what} violated by {err:.3e}"
                )));
            }
        }
        Ok(Self { x, y })
    }

    /// Orthonormalize an arbitrary (independent) pair.
    pub fn from_span(x: &DVector<f64>, y: &DVector<f64>) -> Result<Self> {
        let nx = x.norm();
        if nx < 1e-14 {
            return Err(Error::NotOrthonormal("zero first vector".into()));
        }
        let u = x / nx;
        let w = y - &u * u.dot(y);
        let nw = w.norm();
        if nw < 1e-14 {
            return Err(Error::NotOrthonormal("vectors are parallel".into()));
        }
        Ok(Self { x: u, y: w / nw })
    }

    pub fn x(&self) -> &DVector<f64> {
        &self.x
    }

    pub fn y(&self) -> &DVector<f64> {
        &self.y
    }
}

/// `⟨R(x∧y), x∧y⟩` for the plane's orthonormal span.
pub fn sec(r: &SymOp, plane: &Plane) -> Result<f64> {
    let basis = r.basis();
    let s = wedge2(basis, plane.x(), plane.y())?;
    Ok((r.matrix() * &s).dot(&s))
}

/// Outcome of the heuristic sectional-curvature minimization.
#[derive(Debug, Clone)]
pub struct MinSec {
    pub value: f64,
    pub plane: Plane,
}

/// Projected gradient descent for `min sec` over orthonormal 2-frames.
///
/// This is an upper bound on the true minimum: it reports the best local
/// minimum over `restarts` random starts, deterministic for a fixed seed.
/// Certified positivity must come from the certification module; this
/// oracle exists for threshold scans where the certificate does not apply.
pub fn min_sec_estimate(r: &SymOp, restarts: usize, seed: u64) -> Result<MinSec> {
    if restarts == 0 {
        return Err(Error::InvalidParameter("restarts must be >= 1".into()));
    }
    min_sec_estimate_with(r, restarts, seed, 200, 1e-10)
}

pub fn min_sec_estimate_with(
    r: &SymOp,
    restarts: usize,
    seed: u64,
    max_iters: usize,
    value_tol: f64,
) -> Result<MinSec> {
    let n = r.n();
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            n,
            what: "sectional curvature",
        });
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: Option<MinSec> = None;
    for _ in 0..restarts {
        let mut frame = DMatrix::from_fn(n, 2, |_, _| rng.random::<f64>() * 2.0 - 1.0);
        frame = qr_frame(&frame).unwrap_or_else(|| {
            let mut f = DMatrix::zeros(n, 2);
            f[(0, 0)] = 1.0;
            f[(1, 1)] = 1.0;
            f
        });
        let (value, frame) = descend(r, frame, max_iters, value_tol);
        let plane = Plane::new(frame.column(0).into(), frame.column(1).into())?;
        match &best {
            Some(b) if b.value <= value => {}
            _ => best = Some(MinSec { value, plane }),
        }
    }
    Ok(best.expect("restarts >= 1"))
}

/// QR retraction onto orthonormal 2-frames; `None` when degenerate.
fn qr_frame(a: &DMatrix<f64>) -> Option<DMatrix<f64>> {
    let qr = a.clone().qr();
    let rr = qr.r();
    if rr[(0, 0)].abs() < 1e-12 || rr[(1, 1)].abs() < 1e-12 {
        return None;
    }
    let mut q = qr.q();
    for j in 0..2 {
        if rr[(j, j)] < 0.0 {
            for i in 0..q.nrows() {
                q[(i, j)] = -q[(i, j)];
            }
        }
    }
    Some(q)
}

fn sec_of_frame(r: &SymOp, frame: &DMatrix<f64>) -> f64 {
    let basis = r.basis();
    let s = wedge2(basis, &frame.column(0).into(), &frame.column(1).into())
        .expect("frame matches operator dimension");
    (r.matrix() * &s).dot(&s)
}

fn descend(
    r: &SymOp,
    mut frame: DMatrix<f64>,
    max_iters: usize,
    value_tol: f64,
) -> (f64, DMatrix<f64>) {
    let basis = r.basis();
    let n = r.n();
    let mut value = sec_of_frame(r, &frame);
    for _ in 0..max_iters {
        let x: DVector<f64> = frame.column(0).into();
        let y: DVector<f64> = frame.column(1).into();
        let s = wedge2(basis, &x, &y).expect("dims fixed");
        let rs = r.matrix() * &s;
        // antisymmetric matrix of R(x∧y)
        let mut a = DMatrix::zeros(n, n);
        for (k, &(i, j)) in basis.pairs().iter().enumerate() {
            a[(i, j)] = rs[k];
            a[(j, i)] = -rs[k];
        }
        let gx = &a * &y * 2.0;
        let gy = &a * &x * -2.0;
        let mut grad = DMatrix::zeros(n, 2);
        grad.set_column(0, &gx);
        grad.set_column(1, &gy);
        // tangent projection for the Stiefel frame: G - F sym(F^T G)
        let ftg = frame.transpose() * &grad;
        let sym = (&ftg + ftg.transpose()) * 0.5;
        let tangent = &grad - &frame * sym;
        let gnorm = tangent.norm();
        if gnorm < 1e-14 {
            break;
        }
        let mut step = 1.0 / gnorm.max(1.0);
        let mut improved = false;
        for _ in 0..40 {
            let trial = &frame - &tangent * step;
            if let Some(q) = qr_frame(&trial) {
                let v = sec_of_frame(r, &q);
                if v < value - 1e-16 {
                    let delta = value - v;
                    frame = q;
                    value = v;
                    improved = true;
                    if delta < value_tol * (1.0 + value.abs()) {
                        return (value, frame);
                    }
                    break;
                }
            }
            step *= 0.5;
        }
        if !improved {
            break;
        }
    }
    (value, frame)
}

/// Gauss–Bonnet integrand of an algebraic curvature operator in dimension
/// 4 or 6: the permutation double sum
/// `Σ_{σ,τ} sgn(σ)sgn(τ) Π_i ⟨R(e_{σ(2i-1)}∧e_{σ(2i)}), e_{τ(2i-1)}∧e_{τ(2i)}⟩`
/// with n/2 factors, evaluated by brute force over S_n × S_n.
///
/// No dimensional constant is applied; callers use the sign only.
pub fn gauss_bonnet(r: &SymOp) -> Result<f64> {
    let n = r.n();
    if n != 4 && n != 6 {
        return Err(Error::UnsupportedDimension {
            n,
            what: "Gauss-Bonnet integrand",
        });
    }
    let basis = r.basis();
    let mat = r.matrix();
    let perms = signed_permutations(n);
    let m = n / 2;
    // precompute signed pair lookup: entry(a,b) with a!=b
    let pair_idx = |a: usize, b: usize| -> (usize, f64) {
        if a < b {
            (basis.position(a, b).unwrap(), 1.0)
        } else {
            (basis.position(b, a).unwrap(), -1.0)
        }
    };
    let mut total = 0.0;
    for (sigma, ssign) in &perms {
        // factor rows for sigma
        let rows: Vec<(usize, f64)> = (0..m)
            .map(|i| pair_idx(sigma[2 * i], sigma[2 * i + 1]))
            .collect();
        let mut inner = 0.0;
        for (tau, tsign) in &perms {
            let mut prod = *tsign;
            for (i, &(row, rsig)) in rows.iter().enumerate() {
                let (col, csig) = pair_idx(tau[2 * i], tau[2 * i + 1]);
                prod *= rsig * csig * mat[(row, col)];
                if prod == 0.0 {
                    break;
                }
            }
            inner += prod;
        }
        total += ssign * inner;
    }
    Ok(total)
}

fn signed_permutations(n: usize) -> Vec<(Vec<usize>, f64)> {
    // Heap's algorithm; each swap flips the sign.
    let mut out = Vec::new();
    let mut arr: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    let mut sign = 1.0;
    out.push((arr.clone(), sign));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                arr.swap(0, i);
            } else {
                arr.swap(c[i], i);
            }
            sign = -sign;
            out.push((arr.clone(), sign));
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Compress `R` to Λ²W for a subspace with orthonormal basis columns `w`.
pub fn restrict(r: &SymOp, w: &DMatrix<f64>) -> Result<SymOp> {
    let n = r.n();
    let k = w.ncols();
    if w.nrows() != n {
        return Err(Error::DimensionMismatch(format!(
            "subspace basis has {} rows, operator dimension {n}",
            w.nrows()
        )));
    }
    if !(2..=n).contains(&k) {
        return Err(Error::InvalidParameter(format!(
            "subspace dimension {k} outside 2..={n}"
        )));
    }
    let gram = w.transpose() * w;
    let ortho_err = (&gram - DMatrix::identity(k, k)).norm();
    if ortho_err > 1e-9 {
        return Err(Error::NotOrthonormal(format!(
            "subspace columns: Gram deviation {ortho_err:.3e}"
        )));
    }
    let sub = Basis2::full(k);
    let big = r.basis();
    // lift matrix: Λ²(ℝᵏ) -> Λ²(ℝⁿ) in coordinates
    let mut lift = DMatrix::zeros(big.len(), sub.len());
    for (col, &(a, b)) in sub.pairs().iter().enumerate() {
        let wa: DVector<f64> = w.column(a).into();
        let wb: DVector<f64> = w.column(b).into();
        lift.set_column(col, &wedge2(big, &wa, &wb)?);
    }
    let mat = lift.transpose() * r.matrix() * &lift;
    SymOp::new(sub, (&mat + mat.transpose()) * 0.5)
}

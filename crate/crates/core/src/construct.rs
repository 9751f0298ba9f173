//! Curvature-operator constructions: normal homogeneous metrics, the
//! submersion composition R = R̄ + 3α − 3𝔟(α)-as-operator, Cheeger
//! deformations, the fiber-rescaled family g_t = t·Q|p + Q|m, and the
//! fatness operators of a homogeneous fibration.

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::exterior::{bianchi, form_to_op, form_to_op_on, Basis2, FourForm, SymOp};
use crate::liealg::HomogeneousSplit;

/// Which coset of the chain H ⊂ K ⊂ G a construction refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coset {
    /// G/H, tangent space m ⊕ p.
    GModH,
    /// G/K, tangent space m.
    GModK,
    /// K/H, tangent space p.
    KModH,
}

/// Curvature operator and vertizontal-bracket operator of a normal
/// homogeneous metric:
/// `⟨R(X∧Y),Z∧W⟩ = ¼Q([X,Y],[Z,W]) + ¾Q([X,Y]ᵥ,[Z,W]ᵥ) − 3𝔟(α)(X,Y,Z,W)`
/// with `⟨α(X∧Y),Z∧W⟩ = ¼Q([X,Y]ᵥ,[Z,W]ᵥ)`, the subscript v denoting the
/// isotropy component. `R + 3·op(𝔟(α))` is positive-semidefinite.
pub fn normal_homogeneous(split: &HomogeneousSplit, coset: Coset) -> Result<(SymOp, SymOp)> {
    let (tangent, vertical): (Vec<usize>, Vec<usize>) = match coset {
        Coset::GModH => (split.tangent_idx(), split.h_idx().to_vec()),
        Coset::GModK => (
            split.m_idx().to_vec(),
            split.h_idx().iter().chain(split.p_idx()).copied().collect(),
        ),
        Coset::KModH => (split.p_idx().to_vec(), split.h_idx().to_vec()),
    };
    if tangent.len() < 2 {
        return Err(Error::UnsupportedDimension {
            n: tangent.len(),
            what: "coset tangent space",
        });
    }
    let basis = Basis2::full(tangent.len());
    let alg = split.algebra();
    let d = alg.dim();
    // columns: [e_a, e_b] in full coordinates, per tangent pair
    let mut full = DMatrix::zeros(d, basis.len());
    for (col, &(a, b)) in basis.pairs().iter().enumerate() {
        full.set_column(col, alg.bracket(tangent[a], tangent[b]));
    }
    let mut vert = DMatrix::zeros(vertical.len(), basis.len());
    for (r, &v) in vertical.iter().enumerate() {
        vert.set_row(r, &full.row(v));
    }
    let alpha_mat = vert.transpose() * &vert * 0.25;
    let r0 = full.transpose() * &full * 0.25 + &alpha_mat * 3.0;
    let alpha = SymOp::new(basis.clone(), alpha_mat)?;
    let correction = form_to_op(&bianchi(&alpha)?);
    let r = SymOp::new(basis, r0 - correction.matrix() * 3.0)?;
    Ok((r, alpha))
}

/// The A-tensor of a Riemannian submersion, as a linear map from 2-vectors
/// of the horizontal space to the vertical space (both in orthonormal
/// coordinates of the total-space metric).
#[derive(Debug, Clone)]
pub struct ATensor {
    basis: Basis2,
    /// vertical-dim × pair-count matrix.
    map: DMatrix<f64>,
}

impl ATensor {
    pub fn new(basis: Basis2, map: DMatrix<f64>) -> Result<Self> {
        if map.ncols() != basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "A-tensor has {} columns, horizontal pair basis has {}",
                map.ncols(),
                basis.len()
            )));
        }
        if map.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("A-tensor entries"));
        }
        Ok(Self { basis, map })
    }

    pub fn zero(n: usize) -> Self {
        let basis = Basis2::full(n);
        let map = DMatrix::zeros(0, basis.len());
        Self { basis, map }
    }

    pub fn basis(&self) -> &Basis2 {
        &self.basis
    }

    pub fn map(&self) -> &DMatrix<f64> {
        &self.map
    }

    /// `α = A*A` as an operator on the horizontal 2-vectors.
    pub fn alpha(&self) -> SymOp {
        let m = self.map.transpose() * &self.map;
        SymOp::new(self.basis.clone(), m).expect("gram matrix is symmetric")
    }

    /// `‖A(x∧y)‖` for 2-vector coordinates `s`.
    pub fn norm_on(&self, s: &DVector<f64>) -> f64 {
        (&self.map * s).norm()
    }
}

/// Base curvature operator of a Riemannian submersion:
/// `R = R̄|hor + 3α − 3·op(𝔟(α))` with `α = A*A`. `r_total` must already
/// be expressed over the horizontal pair basis (lifts applied by the
/// caller).
pub fn oneill(r_total: &SymOp, a: &ATensor) -> Result<SymOp> {
    if r_total.basis() != a.basis() {
        return Err(Error::DimensionMismatch(
            "total-space operator and A-tensor use different horizontal bases".into(),
        ));
    }
    let alpha = a.alpha();
    let correction = form_to_op(&bianchi(&alpha)?);
    SymOp::new(
        r_total.basis().clone(),
        r_total.matrix() + alpha.matrix() * 3.0 - correction.matrix() * 3.0,
    )
}

/// A-tensor of the sphere fibration K/H → G/H → G/K for a split whose
/// total space G/H is a round sphere: `A(X∧Y) = ½[X,Y]_p`, expressed over
/// round-unit vertical directions (a Q-unit fiber vector has round length
/// `sqrt(fiber_round_scale)`).
pub fn sphere_fibration_atensor(split: &HomogeneousSplit) -> Result<ATensor> {
    let mu2 = split.fiber_round_scale().ok_or_else(|| {
        Error::InvalidParameter("split does not describe a round-sphere total space".into())
    })?;
    let nm = split.dim_m();
    let basis = Basis2::full(nm);
    let alg = split.algebra();
    let mut map = DMatrix::zeros(split.dim_p(), basis.len());
    for (col, &(a, b)) in basis.pairs().iter().enumerate() {
        let br = alg.bracket(split.m_idx()[a], split.m_idx()[b]);
        for (r, &pj) in split.p_idx().iter().enumerate() {
            map[(r, col)] = 0.5 * mu2.sqrt() * br[pj];
        }
    }
    ATensor::new(basis, map)
}

/// Curvature operator of the fiber-rescaled homogeneous metric
/// `g_t = t·Q|p + Q|m`, over a g_t-orthonormal frame (p-directions scaled
/// by 1/sqrt(t), so positive-definiteness reads off the matrix).
#[derive(Debug, Clone)]
pub struct WallachOperator {
    t: f64,
    nm: usize,
    op: SymOp,
    rhat: SymOp,
    alpha1: SymOp,
    alpha2: SymOp,
    b_alpha1: FourForm,
    b_alpha2: FourForm,
}

impl WallachOperator {
    pub fn t(&self) -> f64 {
        self.t
    }

    /// The curvature operator R_t.
    pub fn op(&self) -> &SymOp {
        &self.op
    }

    /// `R̂ = R_t + 3·op(𝔟(α₁)) + 3·op(𝔟(α₂))`, positive-semidefinite for
    /// 0 < t < 1.
    pub fn rhat(&self) -> &SymOp {
        &self.rhat
    }

    pub fn alpha1(&self) -> &SymOp {
        &self.alpha1
    }

    pub fn alpha2(&self) -> &SymOp {
        &self.alpha2
    }

    pub fn b_alpha1(&self) -> &FourForm {
        &self.b_alpha1
    }

    pub fn b_alpha2(&self) -> &FourForm {
        &self.b_alpha2
    }

    /// Positions of the Λ²m, Λ²p and m⊗p pairs inside the full pair basis.
    pub fn block_indices(&self) -> (Vec<usize>, Vec<usize>, Vec<usize>) {
        let basis = self.op.basis();
        let (mut mm, mut pp, mut mp) = (Vec::new(), Vec::new(), Vec::new());
        for (k, &(a, b)) in basis.pairs().iter().enumerate() {
            match (a < self.nm, b < self.nm) {
                (true, true) => mm.push(k),
                (false, false) => pp.push(k),
                _ => mp.push(k),
            }
        }
        (mm, pp, mp)
    }

    /// Extract a block of `R̂` by pair-index lists.
    pub fn rhat_block(&self, rows: &[usize], cols: &[usize]) -> DMatrix<f64> {
        let m = self.rhat.matrix();
        DMatrix::from_fn(rows.len(), cols.len(), |i, j| m[(rows[i], cols[j])])
    }
}

/// Build the fiber-rescaled operator for any t > 0.
///
/// The defining formula arises for 0 < t < 1 from composing a subgroup
/// Cheeger deformation with the quotient submersion; both sides are
/// polynomial in t for a fixed frame, so evaluation extends to all t > 0.
pub fn wallach(split: &HomogeneousSplit, t: f64) -> Result<WallachOperator> {
    if t <= 0.0 || !t.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "fiber scale t must be positive, got {t}"
        )));
    }
    if split.dim_p() == 0 || split.dim_m() == 0 {
        return Err(Error::InvalidParameter(
            "fiber-rescaled family needs nontrivial m and p".into(),
        ));
    }
    wallach_core(
        split,
        split.m_idx(),
        split.p_idx(),
        split.h_idx(),
        t,
        split.dim_m(),
    )
}

/// Cheeger deformation of the bi-invariant metric of G by the subgroup K
/// (the k = h ⊕ p part of the split), at deformation time `s > 0`; the
/// result is the curvature operator of (G, Q_t) with t = 1/(1+s), over a
/// Q_t-orthonormal frame of the full algebra (ordering: m, then p, then h).
///
/// As s → 0 the operator converges to the bi-invariant
/// `¼Q([X,Y],[Z,W])`.
pub fn cheeger(split: &HomogeneousSplit, s: f64) -> Result<SymOp> {
    if s <= 0.0 || !s.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "deformation time must be positive, got {s}"
        )));
    }
    let t = 1.0 / (1.0 + s);
    let k_idx: Vec<usize> = split.p_idx().iter().chain(split.h_idx()).copied().collect();
    let w = wallach_core(split, split.m_idx(), &k_idx, &[], t, split.dim_m())?;
    Ok(w.op)
}

fn wallach_core(
    split: &HomogeneousSplit,
    m_idx: &[usize],
    p_idx: &[usize],
    h_idx: &[usize],
    t: f64,
    nm: usize,
) -> Result<WallachOperator> {
    let alg = split.algebra();
    let d = alg.dim();
    let n = nm + p_idx.len();
    let basis = Basis2::full(n);
    let local: Vec<usize> = m_idx.iter().chain(p_idx).copied().collect();
    // frame scales: 1 on m, 1/sqrt(t) on p
    let scale = |a: usize| if a < nm { 1.0 } else { 1.0 / t.sqrt() };
    let pairs = basis.pairs();
    let np_pairs = pairs.len();
    // the four quadrilinear terms, each a Gram form of a bracket map
    let mut l1 = DMatrix::zeros(d, np_pairs); // [X_m + tX_p, Y_m + tY_p]
    let mut l2 = DMatrix::zeros(d, np_pairs); // [X_p, Y_p]
    let mut l3 = DMatrix::zeros(d, np_pairs); // [X_m, Y_m] + t [X_p, Y_p]
    let mut l4 = DMatrix::zeros(h_idx.len(), np_pairs); // [X, Y]_h
    for (col, &(a, b)) in pairs.iter().enumerate() {
        let br = alg.bracket(local[a], local[b]);
        let sa = scale(a);
        let sb = scale(b);
        // weight of the bracket under the substitution X -> X_m + c X_p
        let w1 = sa * sb * (if a < nm { 1.0 } else { t }) * (if b < nm { 1.0 } else { t });
        l1.set_column(col, &(br * w1));
        if a >= nm && b >= nm {
            let wp = sa * sb;
            l2.set_column(col, &(br * wp));
            l3.set_column(col, &(br * (wp * t)));
        } else if a < nm && b < nm {
            l3.set_column(col, br);
        }
        let wh = sa * sb;
        for (r, &hi) in h_idx.iter().enumerate() {
            l4[(r, col)] = br[hi] * wh;
        }
    }
    let gram = |m: &DMatrix<f64>| m.transpose() * m;
    let alpha1_mat = gram(&l3) * ((1.0 - t) / 4.0);
    let alpha2_mat = gram(&l4) * (t / 4.0);
    let rhat_mat = gram(&l1) * 0.25
        + gram(&l2) * (t * (1.0 - t).powi(3) / 4.0)
        + &alpha1_mat * 3.0
        + &alpha2_mat * 3.0;
    let alpha1 = SymOp::new(basis.clone(), alpha1_mat)?;
    let alpha2 = SymOp::new(basis.clone(), alpha2_mat)?;
    let b_alpha1 = bianchi(&alpha1)?;
    let b_alpha2 = bianchi(&alpha2)?;
    let rhat = SymOp::new(basis.clone(), rhat_mat)?;
    let op = SymOp::new(
        basis,
        rhat.matrix() - form_to_op(&b_alpha1).matrix() * 3.0 - form_to_op(&b_alpha2).matrix() * 3.0,
    )?;
    Ok(WallachOperator {
        t,
        nm,
        op,
        rhat,
        alpha1,
        alpha2,
        b_alpha1,
        b_alpha2,
    })
}

/// The fatness maps of a homogeneous fibration: `L(X∧Y) = [X,Y]` on
/// m⊗p ⊂ Λ²(m⊕p), with values in m, and `F = L*L`.
#[derive(Debug, Clone)]
pub struct FatnessOps {
    /// dim(m) × (dim(m)·dim(p)) matrix of L over the mixed pair basis.
    pub l_map: DMatrix<f64>,
    /// `F = L*L`, a symmetric operator over the mixed pair sub-basis of
    /// Λ²(m⊕p); its kernel equals ker L.
    pub f: SymOp,
}

pub fn fatness_ops(split: &HomogeneousSplit) -> Result<FatnessOps> {
    let nm = split.dim_m();
    let np = split.dim_p();
    if nm == 0 || np == 0 {
        return Err(Error::InvalidParameter(
            "fatness needs nontrivial m and p".into(),
        ));
    }
    let n = nm + np;
    let mixed: Vec<(usize, usize)> = (0..nm).flat_map(|i| (nm..n).map(move |j| (i, j))).collect();
    let basis = Basis2::from_pairs(n, mixed)?;
    let alg = split.algebra();
    let mut l_map = DMatrix::zeros(nm, basis.len());
    for (col, &(a, b)) in basis.pairs().iter().enumerate() {
        let br = alg.bracket(split.m_idx()[a], split.p_idx()[b - nm]);
        for (r, &mi) in split.m_idx().iter().enumerate() {
            l_map[(r, col)] = br[mi];
        }
    }
    let f = SymOp::new(basis, l_map.transpose() * &l_map)?;
    Ok(FatnessOps { l_map, f })
}

/// Restriction of a 4-form's operator to the mixed m⊗p pair block, for
/// pairing fatness operators with Λ²m⊗Λ²p modifications.
pub fn form_on_mixed_block(split: &HomogeneousSplit, omega: &FourForm) -> Result<SymOp> {
    let nm = split.dim_m();
    let n = split.tangent_dim();
    let mixed: Vec<(usize, usize)> = (0..nm).flat_map(|i| (nm..n).map(move |j| (i, j))).collect();
    let basis = Basis2::from_pairs(n, mixed)?;
    form_to_op_on(&basis, omega)
}

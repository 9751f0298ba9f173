//! Matrix Lie algebras with bi-invariant metrics, homogeneous splittings
//! H ⊂ K ⊂ G, bracket tables, and invariant-form subspaces.
//!
//! All bases are Q-orthonormal for `Q(X,Y) = -q_normalization * tr(XY)` on
//! the stored (realified) matrices, so the bracket tensor alone determines
//! every downstream computation.

mod matrices;
pub mod spaces;

pub use spaces::{build_split, Space};

use nalgebra::{DMatrix, DVector};

use crate::error::{Error, Result};
use crate::exterior::{Basis2, Basis4, FourForm};

pub(crate) use matrices::{quat_to_complex, CxMat, Quat};

/// Tolerance for structural checks (Jacobi, reductivity, orthonormality).
pub const STRUCTURE_TOL: f64 = 1e-9;

/// A real matrix Lie algebra with a Q-orthonormal basis and its bracket
/// tensor. Complex and quaternionic algebras are realified at construction.
#[derive(Debug, Clone)]
pub struct LieAlgebraData {
    dim: usize,
    /// Basis as real matrices; empty for splits loaded from a bare bracket
    /// tensor.
    basis_matrices: Vec<DMatrix<f64>>,
    /// `bracket[i][j]` holds the coordinates of `[e_i, e_j]`.
    bracket: Vec<Vec<DVector<f64>>>,
    q_normalization: f64,
}

impl LieAlgebraData {
    /// Build from basis matrices; brackets are expanded in the basis and the
    /// expansion must be exact (closure), orthonormal, and satisfy Jacobi.
    pub fn from_matrices(basis: Vec<DMatrix<f64>>, q_normalization: f64) -> Result<Self> {
        let dim = basis.len();
        if dim == 0 {
            return Err(Error::InvalidParameter("empty basis".into()));
        }
        let q = |x: &DMatrix<f64>, y: &DMatrix<f64>| -q_normalization * (x * y).trace();
        // orthonormality
        for i in 0..dim {
            for j in i..dim {
                let g = q(&basis[i], &basis[j]);
                let want = if i == j { 1.0 } else { 0.0 };
                if (g - want).abs() > STRUCTURE_TOL {
                    return Err(Error::NotOrthonormal(format!(
                        "Q of basis elements {i}, {j} (0-based) is {g:.6}, expected {want}"
                    )));
                }
            }
        }
        let mut bracket = vec![vec![DVector::zeros(dim); dim]; dim];
        for i in 0..dim {
            for j in (i + 1)..dim {
                let lie = &basis[i] * &basis[j] - &basis[j] * &basis[i];
                let coords = DVector::from_fn(dim, |k, _| q(&lie, &basis[k]));
                // closure: the expansion must reproduce the bracket
                let mut recon = DMatrix::zeros(lie.nrows(), lie.ncols());
                for k in 0..dim {
                    recon += &basis[k] * coords[k];
                }
                let resid = (&lie - recon).norm();
                if resid > STRUCTURE_TOL * (1.0 + lie.norm()) {
                    return Err(Error::NotReductive(format!(
                        "[e{i}, e{j}] leaves the basis span (residual {resid:.3e})"
                    )));
                }
                bracket[i][j] = coords.clone();
                bracket[j][i] = -coords;
            }
        }
        let data = Self {
            dim,
            basis_matrices: basis,
            bracket,
            q_normalization,
        };
        data.check_jacobi()?;
        Ok(data)
    }

    /// Build from a bare bracket tensor (no matrices), validating
    /// antisymmetry and the Jacobi identity.
    pub fn from_bracket(bracket: Vec<Vec<DVector<f64>>>, q_normalization: f64) -> Result<Self> {
        let dim = bracket.len();
        for (i, row) in bracket.iter().enumerate() {
            if row.len() != dim {
                return Err(Error::DimensionMismatch(format!(
                    "bracket row {i} has {} entries, expected {dim}",
                    row.len()
                )));
            }
            for (j, v) in row.iter().enumerate() {
                if v.len() != dim {
                    return Err(Error::DimensionMismatch(format!(
                        "bracket[{i}][{j}] has {} coordinates, expected {dim}",
                        v.len()
                    )));
                }
            }
        }
        for (i, row) in bracket.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                let resid = (entry + &bracket[j][i]).norm();
                if resid > STRUCTURE_TOL {
                    return Err(Error::BracketNotAntisymmetric {
                        i,
                        j,
                        residual: resid,
                    });
                }
            }
        }
        let data = Self {
            dim,
            basis_matrices: Vec::new(),
            bracket,
            q_normalization,
        };
        data.check_jacobi()?;
        Ok(data)
    }

    fn check_jacobi(&self) -> Result<()> {
        let d = self.dim;
        let ad = |v: &DVector<f64>, k: usize| -> DVector<f64> {
            let mut out = DVector::zeros(d);
            for a in 0..d {
                if v[a] != 0.0 {
                    out += &self.bracket[a][k] * v[a];
                }
            }
            out
        };
        for i in 0..d {
            for j in (i + 1)..d {
                for k in (j + 1)..d {
                    let r = ad(&self.bracket[i][j], k)
                        + ad(&self.bracket[j][k], i)
                        + ad(&self.bracket[k][i], j);
                    let resid = r.amax();
                    if resid > STRUCTURE_TOL {
                        return Err(Error::JacobiViolation {
                            i,
                            j,
                            k,
                            residual: resid,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn q_normalization(&self) -> f64 {
        self.q_normalization
    }

    pub fn basis_matrices(&self) -> &[DMatrix<f64>] {
        &self.basis_matrices
    }

    /// Coordinates of `[e_i, e_j]`.
    pub fn bracket(&self, i: usize, j: usize) -> &DVector<f64> {
        &self.bracket[i][j]
    }

    /// Bracket of two coordinate vectors.
    pub fn bracket_vec(&self, x: &DVector<f64>, y: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(self.dim);
        for i in 0..self.dim {
            if x[i] == 0.0 {
                continue;
            }
            for j in 0..self.dim {
                if y[j] != 0.0 {
                    out += &self.bracket[i][j] * (x[i] * y[j]);
                }
            }
        }
        out
    }

    pub fn bracket_tensor(&self) -> &Vec<Vec<DVector<f64>>> {
        &self.bracket
    }
}

/// Classical families available to [`build_algebra`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// so(n): real antisymmetric matrices, `Q = -(1/2) tr(XY)`.
    So,
    /// su(n), realified: `Q = -(1/2) Re tr(XY)` on the complex model.
    Su,
    /// sp(n), realified via the 2n-dimensional complex model:
    /// `Q = -(1/2) Re tr_H(XY)`.
    Sp,
}

/// Q-orthonormal standard basis of so(n), su(n) or sp(n) with verified
/// closure and Jacobi identity.
pub fn build_algebra(family: Family, n: usize) -> Result<LieAlgebraData> {
    if n < 2 {
        return Err(Error::UnsupportedDimension {
            n,
            what: "matrix algebra",
        });
    }
    match family {
        Family::So => {
            let mut basis = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut m = DMatrix::zeros(n, n);
                    m[(i, j)] = 1.0;
                    m[(j, i)] = -1.0;
                    basis.push(m);
                }
            }
            LieAlgebraData::from_matrices(basis, 0.5)
        }
        Family::Su => {
            let mut cxs: Vec<CxMat> = Vec::new();
            use matrices::num_complex_free::Cx;
            for i in 0..n {
                for j in (i + 1)..n {
                    let mut m = CxMat::zeros(n);
                    m.set(i, j, Cx::ONE);
                    m.set(j, i, -Cx::ONE);
                    cxs.push(m);
                    let mut m = CxMat::zeros(n);
                    m.set(i, j, Cx::I);
                    m.set(j, i, Cx::I);
                    cxs.push(m);
                }
            }
            // traceless diagonals, Gram-Schmidt against each other
            let mut diags: Vec<CxMat> = Vec::new();
            for k in 0..(n - 1) {
                let mut m = CxMat::zeros(n);
                m.set(k, k, Cx::I);
                m.set(k + 1, k + 1, -Cx::I);
                diags.push(m);
            }
            let mut reals: Vec<DMatrix<f64>> = cxs.iter().map(CxMat::realify).collect();
            let mut dr: Vec<DMatrix<f64>> = diags.iter().map(CxMat::realify).collect();
            gram_schmidt(&mut dr, 0.25);
            reals.append(&mut dr);
            LieAlgebraData::from_matrices(reals, 0.25)
        }
        Family::Sp => {
            let mut entries: Vec<Vec<(usize, usize, Quat)>> = Vec::new();
            for i in 0..n {
                for j in (i + 1)..n {
                    for u in [Quat::ONE, Quat::I, Quat::J, Quat::K] {
                        entries.push(vec![(i, j, u), (j, i, u.conj().neg())]);
                    }
                }
            }
            for d in 0..n {
                for u in [Quat::I, Quat::J, Quat::K] {
                    entries.push(vec![(d, d, u)]);
                }
            }
            let reals: Vec<DMatrix<f64>> = entries
                .iter()
                .map(|e| {
                    let mut m = quat_to_complex(n, e).realify();
                    // diagonal imaginary units have half the norm of the
                    // off-diagonal generators
                    if e.len() == 1 {
                        m *= std::f64::consts::SQRT_2;
                    }
                    m
                })
                .collect();
            LieAlgebraData::from_matrices(reals, 0.125)
        }
    }
}

fn gram_schmidt(vecs: &mut [DMatrix<f64>], q_norm: f64) {
    let q = |x: &DMatrix<f64>, y: &DMatrix<f64>| -q_norm * (x * y).trace();
    for i in 0..vecs.len() {
        for j in 0..i {
            let c = q(&vecs[i], &vecs[j]);
            let prev = vecs[j].clone();
            vecs[i] -= prev * c;
        }
        let norm = q(&vecs[i], &vecs[i]).sqrt();
        vecs[i] /= norm;
    }
}

/// Lie-algebra data for a chain H ⊂ K ⊂ G with Q-orthogonal reductive
/// splittings g = k ⊕ m, k = h ⊕ p. The three index sets partition the
/// basis; built-in splits order the basis as (m, p, h).
#[derive(Debug, Clone)]
pub struct HomogeneousSplit {
    algebra: LieAlgebraData,
    m_idx: Vec<usize>,
    p_idx: Vec<usize>,
    h_idx: Vec<usize>,
    labels: Vec<String>,
    /// For splits whose total space G/H is a round sphere: the squared
    /// round length of a Q-unit fiber (p) direction. Relates the
    /// fiber-rescaled family g_t to round-reference scalings.
    fiber_round_scale: Option<f64>,
}

impl HomogeneousSplit {
    pub fn new(
        algebra: LieAlgebraData,
        m_idx: Vec<usize>,
        p_idx: Vec<usize>,
        h_idx: Vec<usize>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let split = Self {
            algebra,
            m_idx,
            p_idx,
            h_idx,
            labels,
            fiber_round_scale: None,
        };
        split.validate()?;
        Ok(split)
    }

    pub(crate) fn with_fiber_round_scale(mut self, scale: f64) -> Self {
        self.fiber_round_scale = Some(scale);
        self
    }

    fn validate(&self) -> Result<()> {
        let d = self.algebra.dim();
        let mut seen = vec![false; d];
        for &i in self.m_idx.iter().chain(&self.p_idx).chain(&self.h_idx) {
            if i >= d || seen[i] {
                return Err(Error::InvalidParameter(format!(
                    "index {i} out of range or repeated in split"
                )));
            }
            seen[i] = true;
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidParameter(
                "split index sets must partition the basis".into(),
            ));
        }
        if self.labels.len() != d {
            return Err(Error::InvalidParameter(format!(
                "{} labels for dimension {d}",
                self.labels.len()
            )));
        }
        // reductivity: [h,h] ⊂ h, [h,p] ⊂ p, [k,m] ⊂ m
        let outside = |v: &DVector<f64>, allowed: &[usize]| -> f64 {
            let mut worst: f64 = 0.0;
            for i in 0..v.len() {
                if !allowed.contains(&i) {
                    worst = worst.max(v[i].abs());
                }
            }
            worst
        };
        for &a in &self.h_idx {
            for &b in &self.h_idx {
                let r = outside(self.algebra.bracket(a, b), &self.h_idx);
                if r > STRUCTURE_TOL {
                    return Err(Error::NotReductive(format!("[h,h] leaves h by {r:.3e}")));
                }
            }
            for &b in &self.p_idx {
                let r = outside(self.algebra.bracket(a, b), &self.p_idx);
                if r > STRUCTURE_TOL {
                    return Err(Error::NotReductive(format!("[h,p] leaves p by {r:.3e}")));
                }
            }
        }
        let k_idx: Vec<usize> = self.h_idx.iter().chain(&self.p_idx).copied().collect();
        for &a in &k_idx {
            for &b in &self.m_idx {
                let r = outside(self.algebra.bracket(a, b), &self.m_idx);
                if r > STRUCTURE_TOL {
                    return Err(Error::NotReductive(format!("[k,m] leaves m by {r:.3e}")));
                }
            }
        }
        Ok(())
    }

    pub fn algebra(&self) -> &LieAlgebraData {
        &self.algebra
    }

    pub fn m_idx(&self) -> &[usize] {
        &self.m_idx
    }

    pub fn p_idx(&self) -> &[usize] {
        &self.p_idx
    }

    pub fn h_idx(&self) -> &[usize] {
        &self.h_idx
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn dim_m(&self) -> usize {
        self.m_idx.len()
    }

    pub fn dim_p(&self) -> usize {
        self.p_idx.len()
    }

    pub fn dim_h(&self) -> usize {
        self.h_idx.len()
    }

    /// Dimension of the coset tangent space m ⊕ p.
    pub fn tangent_dim(&self) -> usize {
        self.dim_m() + self.dim_p()
    }

    /// Tangent basis indices: m first, then p.
    pub fn tangent_idx(&self) -> Vec<usize> {
        self.m_idx.iter().chain(&self.p_idx).copied().collect()
    }

    pub fn fiber_round_scale(&self) -> Option<f64> {
        self.fiber_round_scale
    }
}

/// Table of bracket coordinate vectors `[e_row, e_col]` (full-algebra
/// coordinates).
pub fn bracket_table(
    split: &HomogeneousSplit,
    rows: &[usize],
    cols: &[usize],
) -> Result<Vec<Vec<DVector<f64>>>> {
    let d = split.algebra().dim();
    for &i in rows.iter().chain(cols) {
        if i >= d {
            return Err(Error::InvalidParameter(format!(
                "bracket table index {i} out of range"
            )));
        }
    }
    Ok(rows
        .iter()
        .map(|&i| {
            cols.iter()
                .map(|&j| split.algebra().bracket(i, j).clone())
                .collect()
        })
        .collect())
}

/// Which subspace the invariant forms live over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubspaceSelector {
    /// The coset tangent space m ⊕ p (default).
    Tangent,
    /// m only.
    MOnly,
    /// p only.
    POnly,
    /// Degree 4 only: forms in Λ²m ⊗ Λ²p inside Λ⁴(m ⊕ p).
    MixedPairs,
}

/// Orthonormal basis of the H-invariant subspace of Λ^degree over the
/// selected subspace: the common kernel of the derivation extension of
/// `ad_ξ` for ξ spanning h. Infinitesimal invariance equals group
/// invariance for connected H, which covers every built-in space.
///
/// Columns are coordinates over the lexicographic Λ²- or Λ⁴-basis of the
/// subspace (local indices: m first, then p).
pub fn invariant_forms(
    split: &HomogeneousSplit,
    degree: u8,
    on: SubspaceSelector,
) -> Result<DMatrix<f64>> {
    let local: Vec<usize> = match on {
        SubspaceSelector::MOnly => split.m_idx().to_vec(),
        SubspaceSelector::POnly => split.p_idx().to_vec(),
        SubspaceSelector::Tangent | SubspaceSelector::MixedPairs => split.tangent_idx(),
    };
    let nl = local.len();
    let nm = split.dim_m();
    // ad_ξ restricted to the selected subspace, in local coordinates
    let ad_local = |xi: usize| -> DMatrix<f64> {
        DMatrix::from_fn(nl, nl, |a, b| {
            split.algebra().bracket(xi, local[b])[local[a]]
        })
    };
    let action: Vec<DMatrix<f64>> = match degree {
        2 => {
            if on == SubspaceSelector::MixedPairs {
                return Err(Error::InvalidParameter(
                    "mixed-pair selector applies to degree 4".into(),
                ));
            }
            let basis = Basis2::full(nl);
            split
                .h_idx()
                .iter()
                .map(|&xi| derivation2(&basis, &ad_local(xi)))
                .collect()
        }
        4 => split
            .h_idx()
            .iter()
            .map(|&xi| derivation4(&Basis4::new(nl), &ad_local(xi)))
            .collect(),
        _ => {
            return Err(Error::InvalidParameter(format!(
                "invariant forms of degree {degree} not supported"
            )))
        }
    };
    // optional restriction to the mixed-quad block (2 indices in m, 2 in p)
    let mut kernel: DMatrix<f64> = match (degree, on) {
        (4, SubspaceSelector::MixedPairs) => {
            let b4 = Basis4::new(nl);
            let keep: Vec<usize> = b4
                .quads()
                .iter()
                .enumerate()
                .filter(|(_, q)| q.iter().filter(|&&x| x < nm).count() == 2)
                .map(|(t, _)| t)
                .collect();
            let mut sel = DMatrix::zeros(b4.len(), keep.len());
            for (c, &t) in keep.iter().enumerate() {
                sel[(t, c)] = 1.0;
            }
            sel
        }
        _ => {
            let len = action.first().map_or_else(
                || match degree {
                    2 => Basis2::full(nl).len(),
                    _ => Basis4::new(nl).len(),
                },
                |m| m.ncols(),
            );
            DMatrix::identity(len, len)
        }
    };
    for act in &action {
        if kernel.ncols() == 0 {
            break;
        }
        let restricted = act * &kernel;
        // tolerance anchored to the full action's scale, so a subspace the
        // action annihilates survives intact
        let floor = act.norm().max(1.0);
        kernel *= null_space(&restricted, 1e-7, floor);
    }
    // orthonormalize (svd null spaces already are, but compositions may drift)
    if kernel.ncols() > 0 {
        let qr = kernel.clone().qr();
        let r = qr.r();
        let keep: Vec<usize> = (0..r.nrows().min(r.ncols()))
            .filter(|&i| r[(i, i)].abs() > 1e-12)
            .collect();
        let q = qr.q();
        let mut out = DMatrix::zeros(q.nrows(), keep.len());
        for (c, &i) in keep.iter().enumerate() {
            out.set_column(c, &q.column(i));
        }
        kernel = out;
    }
    Ok(kernel)
}

/// Invariant 4-forms over m ⊕ p as [`FourForm`] values.
pub fn invariant_four_forms(
    split: &HomogeneousSplit,
    on: SubspaceSelector,
) -> Result<Vec<FourForm>> {
    let cols = invariant_forms(split, 4, on)?;
    let nl = match on {
        SubspaceSelector::MOnly => split.dim_m(),
        SubspaceSelector::POnly => split.dim_p(),
        _ => split.tangent_dim(),
    };
    let basis = Basis4::new(nl);
    (0..cols.ncols())
        .map(|c| FourForm::new(basis.clone(), cols.column(c).into()))
        .collect()
}

/// Derivation action of a linear map on Λ² coordinates:
/// `x∧y ↦ Cx∧y + x∧Cy`.
pub fn derivation2_matrix(basis: &Basis2, c: &DMatrix<f64>) -> DMatrix<f64> {
    derivation2(basis, c)
}

/// Derivation action of a linear map on Λ⁴ coordinates.
pub fn derivation4_matrix(basis: &Basis4, c: &DMatrix<f64>) -> DMatrix<f64> {
    derivation4(basis, c)
}

pub(crate) fn derivation2(basis: &Basis2, c: &DMatrix<f64>) -> DMatrix<f64> {
    let len = basis.len();
    let mut out = DMatrix::zeros(len, len);
    for (col, &(i, j)) in basis.pairs().iter().enumerate() {
        for a in 0..basis.n() {
            let ci = c[(a, i)];
            if ci != 0.0 && a != j {
                let (row, sign) = pair_pos(basis, a, j);
                out[(row, col)] += sign * ci;
            }
            let cj = c[(a, j)];
            if cj != 0.0 && a != i {
                let (row, sign) = pair_pos(basis, i, a);
                out[(row, col)] += sign * cj;
            }
        }
    }
    out
}

fn pair_pos(basis: &Basis2, a: usize, b: usize) -> (usize, f64) {
    if a < b {
        (basis.position(a, b).expect("pair in basis"), 1.0)
    } else {
        (basis.position(b, a).expect("pair in basis"), -1.0)
    }
}

/// Derivation action of a linear map on Λ⁴ coordinates.
pub(crate) fn derivation4(basis: &Basis4, c: &DMatrix<f64>) -> DMatrix<f64> {
    let len = basis.len();
    let n = basis.n();
    let mut out = DMatrix::zeros(len, len);
    for (col, quad) in basis.quads().iter().enumerate() {
        for pos in 0..4 {
            let i = quad[pos];
            for a in 0..n {
                let ca = c[(a, i)];
                if ca == 0.0 {
                    continue;
                }
                let mut new = *quad;
                new[pos] = a;
                let (sign, sorted) = crate::exterior::sort_sign(new);
                if sign == 0 {
                    continue;
                }
                let row = basis.position(sorted).expect("quad in basis");
                out[(row, col)] += f64::from(sign) * ca;
            }
        }
    }
    out
}

/// Orthonormal basis of the (numerical) null space of `m`, via the
/// spectrum of the normal matrix `mᵀm`. Singular values are compared
/// against `tol · max(σ_max, scale_floor)`; the floor keeps the threshold
/// meaningful when `m` restricted to the current subspace vanishes
/// entirely.
pub(crate) fn null_space(m: &DMatrix<f64>, tol: f64, scale_floor: f64) -> DMatrix<f64> {
    let cols = m.ncols();
    if m.nrows() == 0 || cols == 0 {
        return DMatrix::identity(cols, cols);
    }
    let normal = m.transpose() * m;
    let eig = normal.symmetric_eigen();
    let smax = eig.eigenvalues.amax().max(0.0).sqrt();
    let thr = (tol * smax.max(scale_floor)).powi(2);
    let keep: Vec<usize> = (0..cols).filter(|&i| eig.eigenvalues[i] <= thr).collect();
    let mut out = DMatrix::zeros(cols, keep.len());
    for (c, &i) in keep.iter().enumerate() {
        out.set_column(c, &eig.eigenvectors.column(i));
    }
    out
}

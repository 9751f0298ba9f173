//! Exterior-algebra kernel for 2-vectors and 4-forms.
//!
//! `Basis2` and `Basis4` fix lexicographic coordinate bases for Λ²V and Λ⁴V.
//! A 4-form embeds into the self-adjoint operators on Λ²V via
//! `⟨ω(x∧y), z∧w⟩ = ω(x,y,z,w)`, and the projection of a symmetric operator
//! back onto that image is computed by [`bianchi`]. The embedding scales
//! trace inner products by [`EMBED_TRACE_FACTOR`]:
//! `tr(op(ω)·op(η)) = 6·⟨ω,η⟩` in lexicographic coordinates, for every
//! dimension.

use nalgebra::{DMatrix, DVector};
use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// `tr(form_to_op(ω)·form_to_op(η)) / ⟨ω,η⟩` in lexicographic coordinates.
pub const EMBED_TRACE_FACTOR: f64 = 6.0;

/// Ordered basis of Λ²V given by index pairs `(i,j)`, `i<j`.
///
/// The full basis lists all pairs lexicographically; sub-bases (an ordered
/// subset of pairs, e.g. the mixed block of a splitting V = U ⊕ W) share the
/// same machinery.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis2 {
    n: usize,
    pairs: Arc<Vec<(usize, usize)>>,
    index: Arc<HashMap<(usize, usize), usize>>,
}

impl Basis2 {
    /// All pairs `(i,j)`, `0 <= i < j < n`, lexicographic.
    pub fn full(n: usize) -> Self {
        let mut pairs = Vec::with_capacity(n * (n.saturating_sub(1)) / 2);
        for i in 0..n {
            for j in (i + 1)..n {
                pairs.push((i, j));
            }
        }
        Self::from_pairs(n, pairs).expect("full basis is valid")
    }

    /// A sub-basis from an explicit ordered pair list.
    pub fn from_pairs(n: usize, pairs: Vec<(usize, usize)>) -> Result<Self> {
        let mut index = HashMap::with_capacity(pairs.len());
        for (k, &(i, j)) in pairs.iter().enumerate() {
            if i >= j || j >= n {
                return Err(Error::DimensionMismatch(format!(
                    "pair ({i},{j}) invalid for dimension {n}"
                )));
            }
            if index.insert((i, j), k).is_some() {
                return Err(Error::DimensionMismatch(format!(
                    "duplicate pair ({i},{j})"
                )));
            }
        }
        Ok(Self {
            n,
            pairs: Arc::new(pairs),
            index: Arc::new(index),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn pair(&self, k: usize) -> (usize, usize) {
        self.pairs[k]
    }

    /// Position of the (sorted) pair, if present in this basis.
    pub fn position(&self, i: usize, j: usize) -> Option<usize> {
        let key = if i < j { (i, j) } else { (j, i) };
        self.index.get(&key).copied()
    }

    /// True when this is the full lexicographic basis of Λ²(ℝⁿ).
    pub fn is_full(&self) -> bool {
        self.pairs.len() == self.n * (self.n - 1) / 2
    }
}

/// Ordered basis of Λ⁴V: all quadruples `i<j<k<l`, lexicographic.
#[derive(Debug, Clone, PartialEq)]
pub struct Basis4 {
    n: usize,
    quads: Arc<Vec<[usize; 4]>>,
    index: Arc<HashMap<[usize; 4], usize>>,
}

impl Basis4 {
    pub fn new(n: usize) -> Self {
        let mut quads = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for l in (k + 1)..n {
                        quads.push([i, j, k, l]);
                    }
                }
            }
        }
        let index = quads.iter().enumerate().map(|(t, q)| (*q, t)).collect();
        Self {
            n,
            quads: Arc::new(quads),
            index: Arc::new(index),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.quads.len()
    }

    pub fn is_empty(&self) -> bool {
        self.quads.is_empty()
    }

    pub fn quads(&self) -> &[[usize; 4]] {
        &self.quads
    }

    pub fn position(&self, quad: [usize; 4]) -> Option<usize> {
        self.index.get(&quad).copied()
    }
}

/// Sign of the permutation sorting `idx`, or 0 when an index repeats.
pub fn sort_sign<const K: usize>(mut idx: [usize; K]) -> (i32, [usize; K]) {
    let mut sign = 1i32;
    for i in 0..K {
        for j in 0..K - 1 - i {
            if idx[j] > idx[j + 1] {
                idx.swap(j, j + 1);
                sign = -sign;
            }
        }
    }
    for w in idx.windows(2) {
        if w[0] == w[1] {
            return (0, idx);
        }
    }
    (sign, idx)
}

/// A 4-form over `Basis4`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourForm {
    basis: Basis4,
    coords: DVector<f64>,
}

impl FourForm {
    pub fn new(basis: Basis4, coords: DVector<f64>) -> Result<Self> {
        if coords.len() != basis.len() {
            return Err(Error::DimensionMismatch(format!(
                "4-form has {} coordinates, basis expects {}",
                coords.len(),
                basis.len()
            )));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::NonFinite("4-form coordinates"));
        }
        Ok(Self { basis, coords })
    }

    pub fn zero(n: usize) -> Self {
        let basis = Basis4::new(n);
        let coords = DVector::zeros(basis.len());
        Self { basis, coords }
    }

    /// Build from `(quad, coefficient)` terms; quads may be unsorted and are
    /// folded in with the permutation sign.
    pub fn from_terms(n: usize, terms: &[([usize; 4], f64)]) -> Result<Self> {
        let basis = Basis4::new(n);
        let mut coords = DVector::zeros(basis.len());
        for &(quad, c) in terms {
            let (sign, sorted) = sort_sign(quad);
            if sign == 0 {
                continue;
            }
            let t = basis.position(sorted).ok_or_else(|| {
                Error::DimensionMismatch(format!("quad {sorted:?} out of range for n={n}"))
            })?;
            coords[t] += f64::from(sign) * c;
        }
        Self::new(basis, coords)
    }

    pub fn basis(&self) -> &Basis4 {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.basis.n
    }

    pub fn coords(&self) -> &DVector<f64> {
        &self.coords
    }

    /// ω(e_i, e_j, e_k, e_l) for arbitrary index order.
    pub fn eval(&self, idx: [usize; 4]) -> f64 {
        let (sign, sorted) = sort_sign(idx);
        if sign == 0 {
            return 0.0;
        }
        match self.basis.position(sorted) {
            Some(t) => f64::from(sign) * self.coords[t],
            None => 0.0,
        }
    }

    pub fn norm(&self) -> f64 {
        self.coords.norm()
    }

    pub fn scale(&self, s: f64) -> Self {
        Self {
            basis: self.basis.clone(),
            coords: &self.coords * s,
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.n() != other.n() {
            return Err(Error::DimensionMismatch(
                "adding 4-forms of different dimension".into(),
            ));
        }
        Ok(Self {
            basis: self.basis.clone(),
            coords: &self.coords + &other.coords,
        })
    }

    /// Pull back along the inclusion of a subspace spanned by the orthonormal
    /// columns of `w`: the result is a 4-form on the subspace coordinates.
    pub fn pullback(&self, w: &DMatrix<f64>) -> Result<FourForm> {
        let n = self.n();
        if w.nrows() != n {
            return Err(Error::DimensionMismatch(format!(
                "subspace columns have {} rows, expected {n}",
                w.nrows()
            )));
        }
        let k = w.ncols();
        let sub = Basis4::new(k);
        let mut coords = DVector::zeros(sub.len());
        for (t, q) in sub.quads().iter().enumerate() {
            // contract ω over the four chosen columns
            let cols: Vec<_> = q.iter().map(|&a| w.column(a)).collect();
            let mut acc = 0.0;
            for (s, quad) in self.basis.quads().iter().enumerate() {
                let c = self.coords[s];
                if c == 0.0 {
                    continue;
                }
                // sum over permutations of the quad against the four columns:
                // det of the 4x4 minor picked by `quad` rows
                let mut minor = [[0.0f64; 4]; 4];
                for (r, &row) in quad.iter().enumerate() {
                    for (cidx, col) in cols.iter().enumerate() {
                        minor[r][cidx] = col[row];
                    }
                }
                acc += c * det4(&minor);
            }
            coords[t] = acc;
        }
        FourForm::new(sub, coords)
    }
}

fn det4(m: &[[f64; 4]; 4]) -> f64 {
    let mut det = 0.0;
    for c0 in 0..4 {
        let mut minor = [[0.0f64; 3]; 3];
        for r in 1..4 {
            let mut cc = 0;
            for (c, &val) in m[r].iter().enumerate() {
                if c == c0 {
                    continue;
                }
                minor[r - 1][cc] = val;
                cc += 1;
            }
        }
        let d3 = minor[0][0] * (minor[1][1] * minor[2][2] - minor[1][2] * minor[2][1])
            - minor[0][1] * (minor[1][0] * minor[2][2] - minor[1][2] * minor[2][0])
            + minor[0][2] * (minor[1][0] * minor[2][1] - minor[1][1] * minor[2][0]);
        let sign = if c0 % 2 == 0 { 1.0 } else { -1.0 };
        det += sign * m[0][c0] * d3;
    }
    det
}

/// A self-adjoint operator on Λ²V stored densely over a [`Basis2`].
#[derive(Debug, Clone, PartialEq)]
pub struct SymOp {
    basis: Basis2,
    mat: DMatrix<f64>,
}

impl SymOp {
    /// Relative symmetry tolerance enforced at construction.
    pub const SYMMETRY_TOL: f64 = 1e-12;

    pub fn new(basis: Basis2, mat: DMatrix<f64>) -> Result<Self> {
        let m = basis.len();
        if mat.nrows() != m || mat.ncols() != m {
            return Err(Error::DimensionMismatch(format!(
                "operator is {}x{}, basis has {m} elements",
                mat.nrows(),
                mat.ncols()
            )));
        }
        if mat.iter().any(|x| !x.is_finite()) {
            return Err(Error::NonFinite("operator entries"));
        }
        let scale = mat.iter().fold(0.0f64, |a, &x| a.max(x.abs()));
        let asym = (&mat - mat.transpose())
            .iter()
            .fold(0.0f64, |a, &x| a.max(x.abs()));
        if asym > Self::SYMMETRY_TOL * scale.max(1e-300) {
            return Err(Error::NotSymmetric {
                asym,
                tol: Self::SYMMETRY_TOL * scale,
            });
        }
        // store the symmetrized matrix so downstream eigensolves are exact
        let mat = (&mat + mat.transpose()) * 0.5;
        Ok(Self { basis, mat })
    }

    pub fn identity(n: usize) -> Self {
        let basis = Basis2::full(n);
        let m = basis.len();
        Self {
            basis,
            mat: DMatrix::identity(m, m),
        }
    }

    pub fn zero(n: usize) -> Self {
        let basis = Basis2::full(n);
        let m = basis.len();
        Self {
            basis,
            mat: DMatrix::zeros(m, m),
        }
    }

    pub fn basis(&self) -> &Basis2 {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.basis.n()
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.mat
    }

    pub fn into_matrix(self) -> DMatrix<f64> {
        self.mat
    }

    /// Largest absolute eigenvalue bound via the max row sum (cheap norm).
    pub fn norm_bound(&self) -> f64 {
        (0..self.mat.nrows())
            .map(|i| self.mat.row(i).iter().map(|x| x.abs()).sum::<f64>())
            .fold(0.0f64, f64::max)
    }

    pub fn add(&self, other: &SymOp) -> Result<SymOp> {
        if self.basis != other.basis {
            return Err(Error::DimensionMismatch(
                "adding operators over different bases".into(),
            ));
        }
        Ok(SymOp {
            basis: self.basis.clone(),
            mat: &self.mat + &other.mat,
        })
    }

    pub fn scale(&self, s: f64) -> SymOp {
        SymOp {
            basis: self.basis.clone(),
            mat: &self.mat * s,
        }
    }

    pub fn eigenvalues(&self) -> DVector<f64> {
        self.mat.clone().symmetric_eigenvalues()
    }

    pub fn lambda_min(&self) -> f64 {
        self.eigenvalues()
            .iter()
            .copied()
            .fold(f64::INFINITY, f64::min)
    }
}

/// Coefficient vector of `x ∧ y` over the given basis.
pub fn wedge2(basis: &Basis2, x: &DVector<f64>, y: &DVector<f64>) -> Result<DVector<f64>> {
    let n = basis.n();
    if x.len() != n || y.len() != n {
        return Err(Error::DimensionMismatch(format!(
            "vectors of length {}, {} in dimension {n}",
            x.len(),
            y.len()
        )));
    }
    let mut out = DVector::zeros(basis.len());
    for (k, &(i, j)) in basis.pairs().iter().enumerate() {
        out[k] = x[i] * y[j] - x[j] * y[i];
    }
    Ok(out)
}

/// View a 4-form as a self-adjoint operator on Λ²V over the given pair basis.
///
/// Entry `[(i,j),(k,l)]` is `ω(e_i,e_j,e_k,e_l)`; repeated indices give 0 and
/// unsorted quadruples pick up the permutation sign.
pub fn form_to_op_on(basis: &Basis2, omega: &FourForm) -> Result<SymOp> {
    if basis.n() != omega.n() {
        return Err(Error::DimensionMismatch(format!(
            "4-form in dimension {}, basis in dimension {}",
            omega.n(),
            basis.n()
        )));
    }
    let m = basis.len();
    let mut mat = DMatrix::zeros(m, m);
    for (a, &(i, j)) in basis.pairs().iter().enumerate() {
        for (b, &(k, l)) in basis.pairs().iter().enumerate().skip(a) {
            let v = omega.eval([i, j, k, l]);
            mat[(a, b)] = v;
            mat[(b, a)] = v;
        }
    }
    SymOp::new(basis.clone(), mat)
}

/// [`form_to_op_on`] over the full lexicographic basis.
pub fn form_to_op(omega: &FourForm) -> SymOp {
    let basis = Basis2::full(omega.n());
    form_to_op_on(&basis, omega).expect("full basis always matches")
}

/// The component of a symmetric operator along the 4-form image:
/// `𝔟(R)(x,y,z,w) = (⟨R(x∧y),z∧w⟩ + ⟨R(y∧z),x∧w⟩ + ⟨R(z∧x),y∧w⟩)/3`.
///
/// `form_to_op(bianchi(R))` is the orthogonal projection of `R` onto the
/// image of [`form_to_op`]; operators in the kernel satisfy the first Bianchi
/// identity.
pub fn bianchi(r: &SymOp) -> Result<FourForm> {
    let basis = r.basis();
    if !basis.is_full() {
        return Err(Error::DimensionMismatch(
            "bianchi requires an operator over the full pair basis".into(),
        ));
    }
    let n = basis.n();
    let q4 = Basis4::new(n);
    let mut coords = DVector::zeros(q4.len());
    let mat = r.matrix();
    let at = |a: usize, b: usize, c: usize, d: usize| {
        // ⟨R(e_a∧e_b), e_c∧e_d⟩ for sorted input pairs
        mat[(
            basis.position(a, b).expect("pair in range"),
            basis.position(c, d).expect("pair in range"),
        )]
    };
    for (t, &[i, j, k, l]) in q4.quads().iter().enumerate() {
        coords[t] = (at(i, j, k, l) + at(j, k, i, l) - at(i, k, j, l)) / 3.0;
    }
    FourForm::new(q4, coords)
}

/// Remove the 4-form component: the result satisfies the first Bianchi
/// identity and is trace-orthogonal to every `form_to_op(ω)`.
pub fn bianchi_project(r: &SymOp) -> Result<SymOp> {
    let b = bianchi(r)?;
    let correction = form_to_op(&b);
    Ok(SymOp {
        basis: r.basis().clone(),
        mat: r.matrix() - correction.matrix(),
    })
}

/// Exterior product of two 2-forms (coordinates over the same full basis),
/// with the shuffle-sign convention matching [`form_to_op`]:
/// `(a∧b)(i,j,k,l) = a_ij b_kl − a_ik b_jl + a_il b_jk + a_kl b_ij − a_jl b_ik + a_jk b_il`.
pub fn wedge_forms(basis: &Basis2, a: &DVector<f64>, b: &DVector<f64>) -> Result<FourForm> {
    if !basis.is_full() {
        return Err(Error::DimensionMismatch(
            "wedge_forms requires the full pair basis".into(),
        ));
    }
    if a.len() != basis.len() || b.len() != basis.len() {
        return Err(Error::DimensionMismatch(format!(
            "2-forms of length {}, {}; basis has {}",
            a.len(),
            b.len(),
            basis.len()
        )));
    }
    let n = basis.n();
    let q4 = Basis4::new(n);
    let g = |v: &DVector<f64>, i: usize, j: usize| v[basis.position(i, j).expect("in range")];
    let mut coords = DVector::zeros(q4.len());
    for (t, &[i, j, k, l]) in q4.quads().iter().enumerate() {
        coords[t] = g(a, i, j) * g(b, k, l) - g(a, i, k) * g(b, j, l)
            + g(a, i, l) * g(b, j, k)
            + g(a, k, l) * g(b, i, j)
            - g(a, j, l) * g(b, i, k)
            + g(a, j, k) * g(b, i, l);
    }
    FourForm::new(q4, coords)
}

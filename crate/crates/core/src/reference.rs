//! Published reference data for the built-in spaces: kernel bases of the
//! fatness and modified curvature operators, the certificate forms that
//! restrict to the identity on those kernels, and the Berger-sphere
//! threshold cubics. Indices are 1-based basis labels in the split order
//! (m first, then p, then h).

use nalgebra::{DMatrix, DVector};

use crate::error::Result;
use crate::exterior::{Basis2, FourForm};
use crate::liealg::{HomogeneousSplit, Space};

/// A formal combination of wedge pairs `(coefficient, i, j)` with 1-based
/// labels.
pub type PairCombo = Vec<(f64, usize, usize)>;

/// Coordinates of a pair combination over an arbitrary pair basis.
pub fn pair_combo_coords(basis: &Basis2, combo: &[(f64, usize, usize)]) -> DVector<f64> {
    let mut v = DVector::zeros(basis.len());
    for &(c, i, j) in combo {
        let (a, b, sign) = if i < j { (i, j, 1.0) } else { (j, i, -1.0) };
        let pos = basis
            .position(a - 1, b - 1)
            .expect("reference pair inside basis");
        v[pos] += sign * c;
    }
    v
}

/// Orthonormalized span of pair combinations over a basis.
pub fn span_of_combos(basis: &Basis2, combos: &[PairCombo]) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(basis.len(), combos.len());
    for (c, combo) in combos.iter().enumerate() {
        m.set_column(c, &pair_combo_coords(basis, combo));
    }
    let qr = m.qr();
    qr.q()
}

/// Known kernel span of the fatness operator F (mixed pair basis), or of
/// the modified curvature operator for the space without a fibration.
pub fn known_kernel(space: Space) -> Option<Vec<PairCombo>> {
    match space {
        Space::W6 => Some(vec![
            vec![(1.0, 3, 5), (1.0, 4, 6)],
            vec![(-1.0, 3, 6), (1.0, 4, 5)],
            vec![(-1.0, 1, 5), (1.0, 2, 6)],
            vec![(1.0, 1, 6), (1.0, 2, 5)],
        ]),
        Space::W7 { k, l } => {
            let r = k as f64 / l as f64;
            let s = 1.0 + r + r * r;
            let a = (s / 3.0).sqrt();
            let b = r * (3.0 / s).sqrt();
            Some(vec![
                vec![(-a, 2, 5), (1.0, 4, 7)],
                vec![(-a, 1, 5), (1.0, 4, 6)],
                vec![(b, 1, 6), (1.0, 4, 5)],
                vec![(-a, 1, 5), (1.0, 3, 7)],
                vec![(a, 2, 5), (1.0, 3, 6)],
                vec![(b, 1, 7), (1.0, 3, 5)],
                vec![(-1.0, 1, 6), (1.0, 2, 7)],
                vec![(1.0, 1, 7), (1.0, 2, 6)],
            ])
        }
        Space::W12 => Some(vec![
            vec![(1.0, 5, 9), (1.0, 8, 12)],
            vec![(-1.0, 5, 10), (1.0, 8, 11)],
            vec![(1.0, 5, 11), (1.0, 8, 10)],
            vec![(-1.0, 5, 12), (1.0, 8, 9)],
            vec![(1.0, 5, 10), (1.0, 7, 12)],
            vec![(1.0, 5, 9), (1.0, 7, 11)],
            vec![(-1.0, 5, 12), (1.0, 7, 10)],
            vec![(-1.0, 5, 11), (1.0, 7, 9)],
            vec![(-1.0, 5, 11), (1.0, 6, 12)],
            vec![(1.0, 5, 12), (1.0, 6, 11)],
            vec![(1.0, 5, 9), (1.0, 6, 10)],
            vec![(-1.0, 5, 10), (1.0, 6, 9)],
            vec![(-1.0, 1, 9), (1.0, 4, 12)],
            vec![(-1.0, 1, 10), (1.0, 4, 11)],
            vec![(1.0, 1, 11), (1.0, 4, 10)],
            vec![(1.0, 1, 12), (1.0, 4, 9)],
            vec![(1.0, 1, 10), (1.0, 3, 12)],
            vec![(-1.0, 1, 9), (1.0, 3, 11)],
            vec![(-1.0, 1, 12), (1.0, 3, 10)],
            vec![(1.0, 1, 11), (1.0, 3, 9)],
            vec![(-1.0, 1, 11), (1.0, 2, 12)],
            vec![(1.0, 1, 12), (1.0, 2, 11)],
            vec![(-1.0, 1, 9), (1.0, 2, 10)],
            vec![(1.0, 1, 10), (1.0, 2, 9)],
        ]),
        Space::B13 => Some(vec![
            vec![(-1.0, 2, 9), (1.0, 8, 13)],
            vec![(-1.0, 1, 9), (1.0, 8, 12)],
            vec![(-1.0, 4, 9), (1.0, 8, 11)],
            vec![(1.0, 3, 9), (1.0, 8, 10)],
            vec![(1.0, 1, 12), (1.0, 8, 9)],
            vec![(-1.0, 1, 9), (1.0, 7, 13)],
            vec![(1.0, 2, 9), (1.0, 7, 12)],
            vec![(-1.0, 3, 9), (1.0, 7, 11)],
            vec![(-1.0, 4, 9), (1.0, 7, 10)],
            vec![(1.0, 1, 13), (1.0, 7, 9)],
            vec![(1.0, 4, 9), (1.0, 6, 13)],
            vec![(-1.0, 3, 9), (1.0, 6, 12)],
            vec![(-1.0, 2, 9), (1.0, 6, 11)],
            vec![(-1.0, 1, 9), (1.0, 6, 10)],
            vec![(1.0, 1, 10), (1.0, 6, 9)],
            vec![(1.0, 3, 9), (1.0, 5, 13)],
            vec![(1.0, 4, 9), (1.0, 5, 12)],
            vec![(-1.0, 1, 9), (1.0, 5, 11)],
            vec![(1.0, 2, 9), (1.0, 5, 10)],
            vec![(1.0, 1, 11), (1.0, 5, 9)],
            vec![(1.0, 1, 10), (1.0, 4, 13)],
            vec![(1.0, 1, 11), (1.0, 4, 12)],
            vec![(-1.0, 1, 12), (1.0, 4, 11)],
            vec![(-1.0, 1, 13), (1.0, 4, 10)],
            vec![(1.0, 1, 11), (1.0, 3, 13)],
            vec![(-1.0, 1, 10), (1.0, 3, 12)],
            vec![(-1.0, 1, 13), (1.0, 3, 11)],
            vec![(1.0, 1, 12), (1.0, 3, 10)],
            vec![(-1.0, 1, 12), (1.0, 2, 13)],
            vec![(1.0, 1, 13), (1.0, 2, 12)],
            vec![(-1.0, 1, 10), (1.0, 2, 11)],
            vec![(1.0, 1, 11), (1.0, 2, 10)],
        ]),
        // Kernel of the modified curvature operator on Λ²m. Published with
        // the m-basis labeled e4..e10; shifted here to the bracket-table
        // convention m = e1..e7.
        Space::B7 => {
            let c1 = 3.0 * (3.0f64 / 5.0).sqrt();
            let c2 = (5.0f64 / 3.0).sqrt() / 3.0;
            let c3 = 2.0 * (5.0f64 / 3.0).sqrt() / 3.0;
            Some(vec![
                vec![(1.0, 1, 2), (1.0, 3, 6)],
                vec![(1.0, 1, 3), (c1, 1, 6), (c1, 2, 3), (-1.0, 2, 6)],
                vec![(1.0, 1, 2), (-1.0, 4, 5)],
                vec![(1.0, 1, 3), (c1, 1, 6), (c1, 2, 3), (1.0, 5, 7)],
                vec![(1.0, 1, 5), (-1.0, 2, 4)],
                vec![(1.0, 1, 7), (c2, 2, 7), (c2, 3, 4), (1.0, 3, 5)],
                vec![(1.0, 1, 5), (-1.0, 3, 7)],
                vec![(1.0, 1, 7), (c3, 2, 7), (c3, 3, 4), (1.0, 4, 6)],
                vec![(1.0, 2, 7), (-1.0, 5, 6)],
                vec![(1.0, 1, 6), (2.0, 2, 3), (1.0, 4, 7)],
                vec![(1.25, 1, 4), (0.25, 2, 5), (1.0, 6, 7)],
            ])
        }
        _ => None,
    }
}

/// A formal 4-form: sum of `(coefficient, [i,j,k,l])` with 1-based labels.
pub type FormTerms = Vec<(f64, [usize; 4])>;

fn to_form(n: usize, terms: &FormTerms) -> Result<FourForm> {
    let shifted: Vec<([usize; 4], f64)> = terms
        .iter()
        .map(|&(c, q)| ([q[0] - 1, q[1] - 1, q[2] - 1, q[3] - 1], c))
        .collect();
    FourForm::from_terms(n, &shifted)
}

/// The published certificate form for a space: a 4-form restricting to the
/// identity on the corresponding kernel (for W7 see
/// [`w7_certificate_form`], which carries free parameters a, b).
pub fn known_certificate_form(space: Space) -> Option<Result<FourForm>> {
    match space {
        Space::W6 => Some(to_form(6, &vec![(1.0, [1, 2, 5, 6]), (-1.0, [3, 4, 5, 6])])),
        Space::W12 => Some(to_form(
            12,
            &vec![
                (1.0, [5, 6, 11, 12]),
                (-1.0, [5, 6, 9, 10]),
                (1.0, [7, 8, 11, 12]),
                (-1.0, [7, 8, 9, 10]),
                (1.0, [6, 8, 9, 11]),
                (1.0, [6, 8, 10, 12]),
                (-1.0, [5, 7, 9, 11]),
                (-1.0, [5, 7, 10, 12]),
                (1.0, [5, 8, 10, 11]),
                (-1.0, [5, 8, 9, 12]),
                (1.0, [6, 7, 10, 11]),
                (-1.0, [6, 7, 9, 12]),
                (1.0, [1, 2, 9, 10]),
                (1.0, [1, 2, 11, 12]),
                (1.0, [3, 4, 9, 10]),
                (1.0, [3, 4, 11, 12]),
                (1.0, [1, 3, 9, 11]),
                (-1.0, [1, 3, 10, 12]),
                (-1.0, [2, 4, 9, 11]),
                (1.0, [2, 4, 10, 12]),
                (1.0, [1, 4, 9, 12]),
                (1.0, [1, 4, 10, 11]),
                (1.0, [2, 3, 9, 12]),
                (1.0, [2, 3, 10, 11]),
            ],
        )),
        Space::B13 => Some(to_form(
            13,
            &vec![
                (-1.0, [3, 4, 10, 11]),
                (-1.0, [3, 4, 12, 13]),
                (1.0, [1, 2, 10, 11]),
                (1.0, [1, 2, 12, 13]),
                (1.0, [1, 3, 10, 12]),
                (-1.0, [1, 3, 11, 13]),
                (1.0, [2, 4, 10, 12]),
                (-1.0, [2, 4, 11, 13]),
                (-1.0, [1, 4, 10, 13]),
                (-1.0, [1, 4, 11, 12]),
                (1.0, [2, 3, 10, 13]),
                (1.0, [2, 3, 11, 12]),
                (-1.0, [5, 6, 10, 11]),
                (1.0, [5, 6, 12, 13]),
                (1.0, [7, 8, 10, 11]),
                (-1.0, [7, 8, 12, 13]),
                (1.0, [5, 7, 10, 12]),
                (1.0, [5, 7, 11, 13]),
                (1.0, [6, 8, 10, 12]),
                (1.0, [6, 8, 11, 13]),
                (-1.0, [5, 8, 10, 13]),
                (1.0, [5, 8, 11, 12]),
                (1.0, [6, 7, 10, 13]),
                (-1.0, [6, 7, 11, 12]),
                (1.0, [1, 6, 9, 10]),
                (-1.0, [2, 5, 9, 10]),
                (-1.0, [3, 8, 9, 10]),
                (1.0, [4, 7, 9, 10]),
                (1.0, [1, 5, 9, 11]),
                (1.0, [2, 6, 9, 11]),
                (1.0, [3, 7, 9, 11]),
                (1.0, [4, 8, 9, 11]),
                (1.0, [1, 8, 9, 12]),
                (-1.0, [2, 7, 9, 12]),
                (1.0, [3, 6, 9, 12]),
                (-1.0, [4, 5, 9, 12]),
                (1.0, [1, 7, 9, 13]),
                (1.0, [2, 8, 9, 13]),
                (-1.0, [3, 5, 9, 13]),
                (-1.0, [4, 6, 9, 13]),
            ],
        )),
        Space::B7 => Some(to_form(
            7,
            &vec![
                (1.0, [1, 2, 3, 6]),
                (-1.0, [1, 2, 4, 5]),
                (1.0, [1, 4, 6, 7]),
                (-1.0, [2, 5, 6, 7]),
                (1.0, [1, 3, 5, 7]),
                (1.0, [2, 3, 4, 7]),
                (1.0, [3, 4, 5, 6]),
            ],
        )),
        Space::W7 { .. } => Some(w7_certificate_form(1.0, -1.0)),
        _ => None,
    }
}

/// The two-parameter certificate family for the one-parameter flag family:
/// `τ_{a,b} = (a e1∧e2 + b e3∧e4)⊗(e6∧e7) + √3(e1∧e3+e2∧e4)⊗(e5∧e7)
///  + √3(e1∧e4−e2∧e3)⊗(e5∧e6)`.
///
/// Its restriction to the fatness kernel is positive-definite exactly when
/// `a > 0`, `a − (r/(4√s))a² > 0` and `b + (1/(4√s))b² < 0`.
pub fn w7_certificate_form(a: f64, b: f64) -> Result<FourForm> {
    let s3 = 3f64.sqrt();
    to_form(
        7,
        &vec![
            (a, [1, 2, 6, 7]),
            (b, [3, 4, 6, 7]),
            (s3, [1, 3, 5, 7]),
            (s3, [2, 4, 5, 7]),
            (s3, [1, 4, 5, 6]),
            (-s3, [2, 3, 5, 6]),
        ],
    )
}

/// The W7 kernel-restriction positivity predicate in (a, b) at ratio
/// r = k/l.
pub fn w7_inequalities(r: f64, a: f64, b: f64) -> bool {
    let s = 1.0 + r + r * r;
    let root = 4.0 * s.sqrt();
    a > 0.0 && a - (r / root) * a * a > 0.0 && b + (1.0 / root) * b * b < 0.0
}

/// Berger-sphere threshold cubics in the fiber scale λ of the round
/// metric: the curvature operator is positive-definite on (1/2, λ₁) with
/// `p₁(λ) = 8λ³ − 16λ² + 11λ − 4`, and a positive-definite modification
/// exists exactly on (0, λ₂) with `p₂(λ) = 25λ³ − 60λ² + 48λ − 16`.
pub const BERGER_P1: [f64; 4] = [-4.0, 11.0, -16.0, 8.0];
pub const BERGER_P2: [f64; 4] = [-16.0, 48.0, -60.0, 25.0];

/// Root of a cubic on a bracketing interval by bisection (independent of
/// any solver path).
pub fn cubic_root(coeffs: &[f64; 4], mut lo: f64, mut hi: f64) -> f64 {
    let eval = |x: f64| coeffs[0] + x * (coeffs[1] + x * (coeffs[2] + x * coeffs[3]));
    assert!(eval(lo) * eval(hi) < 0.0, "root not bracketed");
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if eval(lo) * eval(mid) <= 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Map a Berger fiber scale λ (relative to the round metric) to the
/// parameter t of the g_t family on the same split.
pub fn berger_lambda_to_t(split: &HomogeneousSplit, lambda: f64) -> Result<f64> {
    let mu2 = split.fiber_round_scale().ok_or_else(|| {
        crate::error::Error::InvalidParameter(
            "split has no round-sphere fiber normalization".into(),
        )
    })?;
    Ok(mu2 * lambda)
}

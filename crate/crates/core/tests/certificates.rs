//! Certificate-level properties: the published modification forms feed the
//! first-order perturbation lemma, invariant-form outputs are genuinely
//! invariant, and the dimension-4 semidefinite modification is unique at
//! the flat boundary.

use nalgebra::{DMatrix, DVector};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use strongcurv::certify::{certify_strongly_nonnegative, first_order_epsilon, CertKind};
use strongcurv::config::Config;
use strongcurv::construct::{cheeger, fatness_ops, form_on_mixed_block};
use strongcurv::curvature::min_sec_estimate;
use strongcurv::exterior::{bianchi_project, form_to_op, Basis2, Basis4, FourForm, SymOp};
use strongcurv::liealg::{
    build_split, invariant_forms, invariant_four_forms, HomogeneousSplit, LieAlgebraData, Space,
    SubspaceSelector,
};
use strongcurv::reference::known_certificate_form;

#[test]
fn published_forms_feed_the_perturbation_lemma() {
    // F plus a small multiple of the published form is positive-definite
    for space in [Space::W6, Space::W12, Space::B13] {
        let split = build_split(space).unwrap();
        let fat = fatness_ops(&split).unwrap();
        let tau = known_certificate_form(space).unwrap().unwrap();
        let tau_op = form_on_mixed_block(&split, &tau).unwrap();
        let (eps, verified) = first_order_epsilon(&fat.f, &tau_op, 1e-9).unwrap();
        assert!(verified, "{space:?}");
        let lam = (fat.f.matrix() + tau_op.matrix() * eps)
            .symmetric_eigenvalues()
            .min();
        assert!(lam > 0.0, "{space:?}: eps {eps} gives λ_min {lam}");
    }
}

#[test]
fn invariant_forms_are_closed_under_the_isotropy_action() {
    for space in [
        Space::W6,
        Space::W7 { k: 1, l: 2 },
        Space::W12,
        Space::B7,
        Space::B13,
        Space::BergerSphere(1),
    ] {
        let split = build_split(space).unwrap();
        for degree in [2u8, 4] {
            let inv = invariant_forms(&split, degree, SubspaceSelector::Tangent).unwrap();
            if inv.ncols() == 0 {
                continue;
            }
            // orthonormal columns
            let gram = inv.transpose() * &inv;
            assert!(
                (&gram - DMatrix::identity(inv.ncols(), inv.ncols())).amax() < 1e-9,
                "{space:?} degree {degree}: basis not orthonormal"
            );
            assert!(
                action_residual(&split, degree, &inv) < 1e-9,
                "{space:?} degree {degree}: output not invariant"
            );
        }
    }
}

/// Largest residual of the derivation action of h on the given form basis.
fn action_residual(split: &HomogeneousSplit, degree: u8, basis: &DMatrix<f64>) -> f64 {
    let local = split.tangent_idx();
    let nl = local.len();
    let mut worst: f64 = 0.0;
    for &xi in split.h_idx() {
        let c = DMatrix::from_fn(nl, nl, |a, b| {
            split.algebra().bracket(xi, local[b])[local[a]]
        });
        let act = match degree {
            2 => strongcurv::liealg::derivation2_matrix(&Basis2::full(nl), &c),
            _ => strongcurv::liealg::derivation4_matrix(&Basis4::new(nl), &c),
        };
        worst = worst.max((act * basis).amax());
    }
    worst
}

#[test]
fn cheeger_by_the_full_group_is_a_homothety() {
    // deforming (G, Q) by G itself rescales the bi-invariant operator by
    // 1/t = 1 + s in the deformed orthonormal frame
    let algebra = strongcurv::liealg::build_algebra(strongcurv::liealg::Family::Su, 2).unwrap();
    let labels = (1..=3).map(|i| format!("e{i}")).collect();
    let split = HomogeneousSplit::new(algebra, vec![], vec![0, 1, 2], vec![], labels).unwrap();
    let alg = split.algebra();
    let basis = Basis2::full(3);
    let mut cols = DMatrix::zeros(3, 3);
    for (c, &(a, b)) in basis.pairs().iter().enumerate() {
        cols.set_column(c, alg.bracket(a, b));
    }
    let bi = cols.transpose() * &cols * 0.25;
    for s in [0.5, 2.0] {
        let r = cheeger(&split, s).unwrap();
        let expect = &bi * (1.0 + s);
        assert!(
            (r.matrix() - expect).amax() < 1e-9,
            "s = {s}: not a homothety"
        );
    }
}

#[test]
fn gauss_bonnet_dimension_six_smoke() {
    let chi = strongcurv::curvature::gauss_bonnet(&SymOp::identity(6)).unwrap();
    assert!(chi > 0.0);
    // cubic homogeneity in dimension six
    let chi2 = strongcurv::curvature::gauss_bonnet(&SymOp::identity(6).scale(2.0)).unwrap();
    assert!((chi2 - 8.0 * chi).abs() < 1e-6 * chi.abs());
}

#[test]
fn boundary_nonnegative_certification_at_the_normal_metric() {
    // at t = 1 the normal homogeneous space is strongly nonnegative (the
    // Bianchi correction itself is a certificate) but not strongly
    // positive
    let cfg = Config::default();
    let split = build_split(Space::B13).unwrap();
    let search = invariant_four_forms(&split, SubspaceSelector::Tangent).unwrap();
    let w = strongcurv::construct::wallach(&split, 1.0).unwrap();
    let cert = certify_strongly_nonnegative(w.op(), &search, &cfg).unwrap();
    assert_eq!(cert.kind, CertKind::PrimalNonnegative);
    let omega = cert.omega.as_ref().unwrap();
    let lam = w.op().add(&form_to_op(omega)).unwrap().lambda_min();
    assert!(lam >= -1e-7, "λ_min {lam}");
}

#[test]
fn berger_beyond_sec_boundary_is_not_strongly_nonnegative() {
    // at the fiber scale where sec first touches zero, even semidefinite
    // modifications fail: the dual separator pairs strictly negatively
    let cfg = Config::default();
    let split = build_split(Space::BergerSphere(1)).unwrap();
    let search = invariant_four_forms(&split, SubspaceSelector::Tangent).unwrap();
    let t = strongcurv::reference::berger_lambda_to_t(&split, 4.0 / 3.0).unwrap();
    let w = strongcurv::construct::wallach(&split, t).unwrap();
    let cert = certify_strongly_nonnegative(w.op(), &search, &cfg).unwrap();
    assert_eq!(cert.kind, CertKind::DualInfeasible);
    assert!(cert.pairing.unwrap() < -1e-3);
    // yet the sectional curvature itself is still nonnegative here
    let ms = min_sec_estimate(w.op(), 50, 5).unwrap().value;
    assert!(ms > -1e-3);
}

#[test]
fn dimension_four_semidefinite_modification_is_unique_at_flat_planes() {
    // start from operators with positive sectional bound, shift so the
    // minimum sectional curvature is exactly zero, and check that the
    // feasible multiple of the volume form degenerates to a point
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    let basis = Basis2::full(4);
    let b4 = Basis4::new(4);
    let vol = {
        let mut c = DVector::zeros(1);
        c[0] = 1.0;
        FourForm::new(b4, c).unwrap()
    };
    let vol_op = form_to_op(&vol);
    let mut tested = 0usize;
    while tested < 10 {
        let raw = DMatrix::from_fn(6, 6, |_, _| rng.random::<f64>() - 0.5);
        let candidate = SymOp::new(
            basis.clone(),
            DMatrix::identity(6, 6) + (&raw + raw.transpose()) * 0.25,
        )
        .unwrap();
        let r0 = bianchi_project(&candidate).unwrap();
        let est = min_sec_estimate(&r0, 16, 1000 + tested as u64).unwrap();
        if est.value < 0.05 {
            continue;
        }
        tested += 1;
        // sec_R = sec_{R0} - min: nonnegative with a flat plane
        let r = SymOp::new(
            basis.clone(),
            r0.matrix() - DMatrix::identity(6, 6) * est.value,
        )
        .unwrap();
        // the feasible set {c : R + c vol >= 0} collapses to one point
        let lam = |c: f64| {
            (r.matrix() + vol_op.matrix() * c)
                .symmetric_eigenvalues()
                .min()
        };
        let mut lo = -10.0f64;
        let mut hi = 10.0f64;
        // ternary search on the concave function c -> λ_min
        for _ in 0..200 {
            let m1 = lo + (hi - lo) / 3.0;
            let m2 = hi - (hi - lo) / 3.0;
            if lam(m1) < lam(m2) {
                lo = m1;
            } else {
                hi = m2;
            }
        }
        let c_star = 0.5 * (lo + hi);
        let peak = lam(c_star);
        assert!(
            peak.abs() <= 1e-6,
            "best semidefinite margin should vanish, got {peak:.3e}"
        );
        // away from the optimum the modification fails by a definite amount
        assert!(lam(c_star + 0.05) < -1e-6);
        assert!(lam(c_star - 0.05) < -1e-6);
    }
}

#[test]
fn b7_certificate_form_is_invariant() {
    // the invariant 4-form subspace of the exceptional space is a line,
    // and the published certificate spans it
    let split = build_split(Space::B7).unwrap();
    let inv = invariant_forms(&split, 4, SubspaceSelector::Tangent).unwrap();
    assert_eq!(inv.ncols(), 1);
    let omega = known_certificate_form(Space::B7).unwrap().unwrap();
    let v = omega.coords();
    let proj = &inv * (inv.transpose() * v);
    assert!((v - proj).norm() < 1e-9 * v.norm());
}

#[test]
fn product_split_has_no_fatness() {
    // two commuting su(2) blocks: [m, p] = 0, so the bundle is not fat and
    // no mixed 4-form can rescue it (their quadratic forms vanish on the
    // decomposable mixed pairs)
    let su2 = strongcurv::liealg::build_algebra(strongcurv::liealg::Family::Su, 2).unwrap();
    let d = 6usize;
    let mut bracket = vec![vec![DVector::zeros(d); d]; d];
    for i in 0..3 {
        for j in 0..3 {
            let small = su2.bracket(i, j);
            let mut a = DVector::zeros(d);
            let mut b = DVector::zeros(d);
            for k in 0..3 {
                a[k] = small[k];
                b[k + 3] = small[k];
            }
            bracket[i][j] = a;
            bracket[i + 3][j + 3] = b;
        }
    }
    let algebra = LieAlgebraData::from_bracket(bracket, 0.5).unwrap();
    let labels = (1..=d).map(|i| format!("e{i}")).collect();
    let split =
        HomogeneousSplit::new(algebra, vec![0, 1, 2], vec![3, 4, 5], vec![], labels).unwrap();
    let fat = fatness_ops(&split).unwrap();
    assert!(fat.l_map.amax() < 1e-12, "brackets [m, p] must vanish");
    let cert = strongcurv::certify::strong_fatness(&split, &Config::default()).unwrap();
    assert_eq!(cert.kind, CertKind::DualInfeasible);
}

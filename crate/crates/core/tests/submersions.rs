//! Submersion composition, Hopf constructions, Cheeger limits and
//! totally geodesic restriction, checked across modules.

use nalgebra::{DMatrix, DVector};
use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use strongcurv::certify::{certify_strongly_positive, kernel_basis};
use strongcurv::config::Config;
use strongcurv::construct::{
    fatness_ops, normal_homogeneous, oneill, sphere_fibration_atensor, wallach, Coset,
};
use strongcurv::curvature::{min_sec_estimate, restrict, sec, Plane};
use strongcurv::exterior::{bianchi, form_to_op, wedge2, wedge_forms, SymOp};
use strongcurv::liealg::{build_split, invariant_four_forms, Space, SubspaceSelector};

fn unit(n: usize, i: usize) -> DVector<f64> {
    let mut v = DVector::zeros(n);
    v[i] = 1.0;
    v
}

#[test]
fn hopf_composition_reproduces_complex_projective_plane() {
    let split = build_split(Space::Cpn(2)).unwrap();
    let a = sphere_fibration_atensor(&split).unwrap();
    let total = SymOp::identity(4); // round total space over horizontal pairs
    let from_hopf = oneill(&total, &a).unwrap();
    let (direct, _) = normal_homogeneous(&split, Coset::GModK).unwrap();
    assert!(
        (from_hopf.matrix() - direct.matrix()).amax() < 1e-9,
        "two constructions of the same operator disagree"
    );
    // the vertizontal operator is rank one on the Kahler 2-form, and its
    // Bianchi part satisfies 3*b(alpha) = (1/2) w ^ w
    let alpha = a.alpha();
    let w: DVector<f64> = a.map().row(0).transpose();
    let b3 = bianchi(&alpha).unwrap().scale(3.0);
    let ww = wedge_forms(alpha.basis(), &w, &w).unwrap().scale(0.5);
    assert!((b3.coords() - ww.coords()).amax() < 1e-12);
    // modified operator is positive-definite
    let modified = direct.add(&form_to_op(&b3)).unwrap();
    assert!(modified.lambda_min() > 0.5);
}

#[test]
fn hopf_composition_reproduces_quaternionic_projective_line() {
    let split = build_split(Space::Hpn(1)).unwrap();
    let a = sphere_fibration_atensor(&split).unwrap();
    let from_hopf = oneill(&SymOp::identity(4), &a).unwrap();
    let (direct, _) = normal_homogeneous(&split, Coset::GModK).unwrap();
    assert!((from_hopf.matrix() - direct.matrix()).amax() < 1e-9);
    // the quaternionic line is a round 4-sphere of curvature 4
    assert!((direct.matrix() - DMatrix::identity(6, 6) * 4.0).amax() < 1e-9);
}

#[test]
fn quaternionic_projective_plane_is_quarter_pinched() {
    let split = build_split(Space::Hpn(2)).unwrap();
    let (direct, _) = normal_homogeneous(&split, Coset::GModK).unwrap();
    let lo = min_sec_estimate(&direct, 30, 11).unwrap().value;
    let hi = -min_sec_estimate(&direct.scale(-1.0), 30, 12).unwrap().value;
    assert!((lo - 1.0).abs() < 1e-6, "min sec {lo}");
    assert!((hi - 4.0).abs() < 1e-6, "max sec {hi}");
}

#[test]
fn complex_projective_plane_sec_values() {
    let split = build_split(Space::Cpn(2)).unwrap();
    let (r, _) = normal_homogeneous(&split, Coset::GModK).unwrap();
    // holomorphic plane (z1, i z1) and totally real plane (z1, z2)
    let holo = Plane::new(unit(4, 0), unit(4, 1)).unwrap();
    let real = Plane::new(unit(4, 0), unit(4, 2)).unwrap();
    assert!((sec(&r, &holo).unwrap() - 4.0).abs() < 1e-12);
    assert!((sec(&r, &real).unwrap() - 1.0).abs() < 1e-12);
}

#[test]
fn submersion_sec_identity_on_random_planes() {
    // sec(base) = sec(total, lift) + 3 |A(x ^ y)|^2, with the round total
    // space contributing sec == 1 on every plane
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for space in [Space::Cpn(2), Space::Hpn(1)] {
        let split = build_split(space).unwrap();
        let a = sphere_fibration_atensor(&split).unwrap();
        let base = oneill(&SymOp::identity(split.dim_m()), &a).unwrap();
        for _ in 0..100 {
            let x = DVector::from_fn(split.dim_m(), |_, _| rng.random::<f64>() - 0.5);
            let y = DVector::from_fn(split.dim_m(), |_, _| rng.random::<f64>() - 0.5);
            let plane = Plane::from_span(&x, &y).unwrap();
            let s = wedge2(base.basis(), plane.x(), plane.y()).unwrap();
            let expected = 1.0 + 3.0 * a.norm_on(&s).powi(2);
            let got = sec(&base, &plane).unwrap();
            assert!(
                (got - expected).abs() <= 1e-8,
                "{space:?}: sec {got} vs lifted {expected}"
            );
        }
    }
}

#[test]
fn submersion_preserves_certificates_without_solver() {
    // a certificate on the round total space (omega = 0) pushes down to
    // i* omega + 3 b(alpha) on the base
    for space in [Space::Cpn(2), Space::Hpn(1)] {
        let split = build_split(space).unwrap();
        let a = sphere_fibration_atensor(&split).unwrap();
        let (base, _) = normal_homogeneous(&split, Coset::GModK).unwrap();
        let omega = bianchi(&a.alpha()).unwrap().scale(3.0);
        let modified = base.add(&form_to_op(&omega)).unwrap();
        assert!(
            modified.lambda_min() > 1e-6,
            "{space:?}: pushed-down certificate fails"
        );
    }
}

#[test]
fn berger_sphere_restricts_to_smaller_berger_sphere() {
    // the 7-sphere family sits totally geodesically inside the 11-sphere
    // family at the same fiber scale
    let big = build_split(Space::BergerSphere(2)).unwrap();
    let small = build_split(Space::BergerSphere(1)).unwrap();
    for t in [0.6, 1.0, 2.0, 2.5] {
        let rb = wallach(&big, t).unwrap();
        let rs = wallach(&small, t).unwrap();
        // subspace: first quaternionic column of m (4 dims) plus p (3 dims)
        let mut w = DMatrix::zeros(11, 7);
        for (c, row) in [0usize, 1, 2, 3, 8, 9, 10].iter().enumerate() {
            w[(*row, c)] = 1.0;
        }
        let compressed = restrict(rb.op(), &w).unwrap();
        assert!(
            (compressed.matrix() - rs.op().matrix()).amax() < 1e-9,
            "restriction differs at t = {t}"
        );
    }
}

#[test]
fn berger_min_sec_thresholds() {
    let split = build_split(Space::BergerSphere(1)).unwrap();
    // fiber scale lambda of the round metric maps to t = 2 lambda
    let at = |lambda: f64| {
        let t = strongcurv::reference::berger_lambda_to_t(&split, lambda).unwrap();
        wallach(&split, t).unwrap()
    };
    let boundary = at(4.0 / 3.0);
    let ms = min_sec_estimate(boundary.op(), 50, 3).unwrap().value;
    assert!(ms.abs() <= 1e-3, "sec boundary at 4/3, got {ms}");
    let beyond = at(1.5);
    let ms = min_sec_estimate(beyond.op(), 50, 3).unwrap().value;
    assert!(ms < -1e-3, "sec must fail beyond 4/3, got {ms}");
    // round point of the family: the operator is the identity
    let round = at(1.0);
    assert!((round.op().matrix() - DMatrix::identity(21, 21)).amax() < 1e-9);
}

#[test]
fn cheeger_deformed_berger_metrics_certify() {
    // fiber scales below round arise from Cheeger deformations and keep a
    // positive-definite modification
    let split = build_split(Space::BergerSphere(1)).unwrap();
    let cfg = Config::default();
    let search = invariant_four_forms(&split, SubspaceSelector::Tangent).unwrap();
    for lambda in [0.3, 0.7, 0.99] {
        let t = strongcurv::reference::berger_lambda_to_t(&split, lambda).unwrap();
        let w = wallach(&split, t).unwrap();
        let cert = certify_strongly_positive(w.op(), &search, None, &cfg).unwrap();
        assert_eq!(
            cert.kind,
            strongcurv::certify::CertKind::PrimalPositive,
            "lambda = {lambda}"
        );
    }
}

#[test]
fn totally_geodesic_restriction_carries_certificates() {
    // restricting both the operator and its certificate form preserves the
    // margin
    let split = build_split(Space::B7).unwrap();
    let cfg = Config::default();
    let (r, alpha) = normal_homogeneous(&split, Coset::GModH).unwrap();
    let rhat = r
        .add(&form_to_op(&bianchi(&alpha).unwrap()).scale(3.0))
        .unwrap();
    let search = invariant_four_forms(&split, SubspaceSelector::Tangent).unwrap();
    let cert = certify_strongly_positive(&rhat, &search, None, &cfg).unwrap();
    assert_eq!(cert.kind, strongcurv::certify::CertKind::PrimalPositive);
    let omega = cert.omega.unwrap();
    let delta = cert.delta;
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for dim in [4usize, 5] {
        let raw = DMatrix::from_fn(7, dim, |_, _| rng.random::<f64>() - 0.5);
        let w = raw.qr().q();
        let sub = restrict(&rhat, &w).unwrap();
        let pulled = omega.pullback(&w).unwrap();
        let modified = sub.add(&form_to_op(&pulled)).unwrap();
        assert!(
            modified.lambda_min() >= delta - 1e-10,
            "restricted certificate loses definiteness"
        );
    }
}

#[test]
fn wallach_rhat_kernel_splits_along_the_blocks() {
    // the semidefinite part is block diagonal, so its kernel is the sum of
    // the diagonal-block kernels; the mixed block contributes exactly the
    // fatness kernel
    let split = build_split(Space::W6).unwrap();
    let w = wallach(&split, 0.5).unwrap();
    let kernel = kernel_basis(w.rhat(), 1e-9);
    let fat = fatness_ops(&split).unwrap();
    let fat_kernel = kernel_basis(&fat.f, 1e-9);
    let (mm, pp, mp) = w.block_indices();
    let k11 = strongcurv::certify::kernel_of_block(&w.rhat_block(&mm, &mm), 1e-9);
    let k22 = strongcurv::certify::kernel_of_block(&w.rhat_block(&pp, &pp), 1e-9);
    let k33 = strongcurv::certify::kernel_of_block(&w.rhat_block(&mp, &mp), 1e-9);
    assert_eq!(k33.ncols(), fat_kernel.ncols());
    assert_eq!(kernel.ncols(), k11.ncols() + k22.ncols() + k33.ncols());
}

//! Cross-module checks through the public API only.

use hyp3f1::arith::rational::{int, rat};
use hyp3f1::arith::{BigComplex, BigFloat, GaussianRational};
use hyp3f1::asym::{exterior_approx, interior_approx};
use hyp3f1::geometry::{classify, phi, trace_curve, Point, RegimeTag};
use hyp3f1::hyper::{compute_s, f3f1_exact, f3f1_float, Argument, PolyParams, DEFAULT_PRECISION_CEILING};
use hyp3f1::quad::{cheb_integral, QuadratureConfig};
use hyp3f1::Error;

fn rel_err(a: &BigComplex, b: &BigComplex) -> f64 {
    (a - b).abs().to_f64() / b.abs().to_f64()
}

#[test]
fn exact_and_float_paths_agree_across_the_plane() {
    for (re, im) in [(rat(3, 1), rat(0, 1)), (rat(1, 1), rat(1, 3)), (rat(-1, 2), rat(2, 1)), (int(0), rat(3, 4))] {
        let z = GaussianRational::new(re, im);
        let params = PolyParams::new(80, 2).unwrap();
        let exact = BigComplex::from_gaussian(&f3f1_exact(&params, &z), 128);
        let float = f3f1_float(&params.series_spec(Argument::Exact(z.clone())), 128, DEFAULT_PRECISION_CEILING).unwrap();
        assert!(rel_err(&float.value, &exact) < 1e-30, "at {z}");
    }
}

#[test]
fn approximant_follows_the_classifier() {
    let params = PolyParams::new(300, 1).unwrap();
    let outside = Point::Exact(GaussianRational::new(int(2), int(2)));
    assert_eq!(classify(&outside, 1e-12, 128).unwrap().tag, RegimeTag::Exterior);
    let exact = BigComplex::from_gaussian(&f3f1_exact(&params, &GaussianRational::new(int(2), int(2))), 128);
    let approx = exterior_approx(&params, &outside, 128).unwrap();
    assert!(rel_err(&approx.value, &exact) < 1e-2);
    assert!(matches!(interior_approx(&params, &outside, 128), Err(Error::RegimeMismatch { .. })));
}

#[test]
fn traced_curve_has_unit_phi() {
    let tr = trace_curve(16, 1e-12, 128).unwrap();
    for z in tr.points.iter().filter(|z| z.re.to_f64() > 0.0) {
        let m = phi(&Point::Float(z.clone()), 128).unwrap().abs().to_f64();
        assert!((m - 1.0).abs() < 1e-11);
    }
}

#[test]
fn fourier_identity_through_public_api() {
    let y = rat(2, 3);
    let n = 12;
    let s = compute_s(n, &y, 192).unwrap();
    let i = cheb_integral(n, &y, &QuadratureConfig::with_precision(192)).unwrap().value;
    // S = -(i n / y) I_n
    let k = BigFloat::from_rational(&rat(n as i64, 1), 192) / BigFloat::from_rational(&y, 192);
    let rhs = BigComplex::new(&i.im * &k, -(&i.re * &k));
    assert!((&s - &rhs).abs().to_f64() < 1e-25);
}

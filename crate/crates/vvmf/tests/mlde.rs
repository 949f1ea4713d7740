use num_complex::Complex64;
use std::f64::consts::PI;
use vvmf::classical::ClassicalCatalog;
use vvmf::linalg;
use vvmf::mlde::classify::{classify_trace, dimension_from_trace, hilbert_series, three_trace};
use vvmf::mlde::coeffs::{coeffs_for, rank2_mlde, shifted_exponents};
use vvmf::mlde::poly::{multiset_distance, polynomial_roots};
use vvmf::mlde::system::{left_eigenvector, system_residual};
use vvmf::mlde::{
    build_cyclic_operator, build_noncyclic_operator, build_noncyclic_system, classify, cyclic_coeffs, dimension,
    frobenius_solve_system, hypergeom_2f1, hypergeometric_operator, modular_derivative_scalar, noncyclic_coeffs, Case,
    ThetaPoly,
};
use vvmf::rep::{ExponentData, Group, Rank4Rep};
use vvmf::residual::coeffwise_rel;
use vvmf::{Error, Nome, PuiseuxSeries};

type C = Complex64;

fn r(x: f64) -> C {
    C::new(x, 0.0)
}

fn cs(v: &[f64]) -> Vec<C> {
    v.iter().map(|&x| r(x)).collect()
}

fn near(a: C, b: f64) -> bool {
    (a - r(b)).norm() < 1e-14
}

/// `σ_k` by summing over all `k`-subsets.
fn sigma(f: &[C], k: usize) -> C {
    let n = f.len();
    (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n).filter(|i| m & (1 << i) != 0).map(|i| f[i]).product::<C>())
        .sum()
}

#[test]
fn cyclic_coefficient_examples() {
    let co = cyclic_coeffs(&cs(&[0.0, 1.0 / 6.0, 1.0 / 3.0, 0.5])).unwrap();
    assert!(near(co.a, 0.0) && near(co.b, 0.0) && near(co.c, 0.0));
    let co = cyclic_coeffs(&cs(&[0.0, 1.0 / 12.0, 1.0 / 3.0, 7.0 / 12.0])).unwrap();
    assert!(near(co.a, -5.0 / 144.0), "{}", co.a);
    assert!(near(co.b, 5.0 / 864.0), "{}", co.b);
    assert!(near(co.c, 0.0));
    assert!(matches!(cyclic_coeffs(&cs(&[0.0, 0.1, 0.2, 0.3])), Err(Error::ExponentSumMismatch { .. })));
}

#[test]
fn noncyclic_coefficient_examples() {
    let co = noncyclic_coeffs(&cs(&[0.0, 1.0 / 12.0, 0.25, 1.0 / 3.0])).unwrap();
    assert!(near(co.a, 1.0 / 288.0), "{}", co.a);
    assert!(near(co.b, 1.0 / 288.0), "{}", co.b);
    assert!(near(co.c, -1.0 / 5184.0), "{}", co.c);
    let co = noncyclic_coeffs(&cs(&[0.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0])).unwrap();
    assert!(near(co.a, 0.0) && near(co.b, 0.0) && near(co.c, 0.0));
    assert!(matches!(noncyclic_coeffs(&cs(&[0.0, 0.25, 0.25, 0.25])), Err(Error::ExponentSumMismatch { .. })));
}

#[test]
fn coefficients_match_symmetric_polynomial_oracle() {
    let f = vec![C::new(0.1, 0.05), C::new(0.3, -0.02), C::new(0.45, 0.0), C::new(0.15, -0.03)];
    let co = cyclic_coeffs(&f).unwrap();
    let a = sigma(&f, 2) - 11.0 / 36.0;
    assert!((co.a - a).norm() < 1e-15);
    assert!((co.b - (-sigma(&f, 3) + a / 6.0 + 1.0 / 36.0)).norm() < 1e-15);
    assert!((co.c - sigma(&f, 4)).norm() < 1e-15);
}

#[test]
fn characteristic_polynomials_recover_exponents() {
    let f = cs(&[0.0, 1.0 / 12.0, 1.0 / 3.0, 7.0 / 12.0]);
    let co = cyclic_coeffs(&f).unwrap();
    assert!(multiset_distance(&co.characteristic_polynomial().roots(), &f) < 1e-7);
    let g = cs(&[0.02, 1.0 / 12.0, 0.23, 1.0 / 3.0]);
    let co = noncyclic_coeffs(&g).unwrap();
    assert!(multiset_distance(&co.characteristic_polynomial().roots(), &g) < 1e-7);
}

#[test]
fn cyclic_operator_structure() {
    let f = cs(&[0.0, 1.0 / 12.0, 1.0 / 3.0, 7.0 / 12.0]);
    let co = cyclic_coeffs(&f).unwrap();
    let op = build_cyclic_operator(&co);
    assert_eq!(op.order(), 4);
    assert_eq!(op.x_degree(), 2);
    assert_eq!(op.nome, Nome::K);
    let expected = ThetaPoly::from_roots(&f).scale(&r(36.0));
    for m in 0..=4 {
        assert!((op.polys[0].coeff(m) - expected.coeff(m)).norm() < 1e-13, "theta^{m}");
    }
    let zero = cyclic_coeffs(&cs(&[0.0, 1.0 / 6.0, 1.0 / 3.0, 0.5])).unwrap();
    assert!((build_cyclic_operator(&zero).polys[0].coeff(1) - r(-1.0)).norm() < 1e-13);
}

#[test]
fn noncyclic_operator_structure() {
    let f = cs(&[0.0, 1.0 / 12.0, 0.25, 1.0 / 3.0]);
    let co = noncyclic_coeffs(&f).unwrap();
    let op = build_noncyclic_operator(&co);
    assert_eq!(op.order(), 4);
    assert_eq!(op.x_degree(), 2);
    assert!(multiset_distance(&op.indicial_roots(), &f) < 1e-7);
    let p0 = &op.polys[0];
    assert!((p0.coeff(3) / p0.coeff(4) - r(-2.0 / 3.0)).norm() < 1e-15);
    assert!((p0.coeff(0) / p0.coeff(4) + (co.a + 18.0 * co.c) / 18.0).norm() < 1e-15);
}

#[test]
fn noncyclic_system_structure() {
    let f = cs(&[0.0, 1.0 / 12.0, 0.25, 1.0 / 3.0]);
    let co = noncyclic_coeffs(&f).unwrap();
    let sys = build_noncyclic_system(&co).unwrap();
    assert!(near(sys.b0[1][1], 1.0 / 6.0));
    assert!(near(sys.b0[3][3], 1.0 / 3.0));
    let eig = polynomial_roots(&linalg::char_poly(&sys.b0));
    assert!(multiset_distance(&eig, &f) < 1e-7);
    let degenerate = noncyclic_coeffs(&cs(&[0.0, 1.0 / 6.0, 1.0 / 6.0, 1.0 / 3.0])).unwrap();
    assert!(matches!(build_noncyclic_system(&degenerate), Err(Error::DegenerateC)));
}

#[test]
fn system_frobenius_solutions() {
    let f = cs(&[0.0, 1.0 / 12.0, 0.25, 1.0 / 3.0]);
    let co = noncyclic_coeffs(&f).unwrap();
    let sys = build_noncyclic_system(&co).unwrap();
    for e in &f {
        let v0 = left_eigenvector(&sys.b0, e).unwrap();
        let x = frobenius_solve_system(&sys.b0, &sys.b1, e, &v0, 50, Nome::K).unwrap();
        assert_eq!(x.len(), 4);
        let res = system_residual(&sys.b0, &sys.b1, &x).unwrap();
        assert!(res < 1e-9, "exponent {e}: {res}");
    }
    assert!(matches!(left_eigenvector(&sys.b0, &r(0.2)), Err(Error::NotAnExponent(_))));
    let v0 = left_eigenvector(&sys.b0, &f[1]).unwrap();
    assert!(matches!(
        frobenius_solve_system(&sys.b0, &sys.b1, &f[2], &v0, 5, Nome::K),
        Err(Error::NotLeftEigenvector)
    ));
}

#[test]
fn constant_system_solutions() {
    let b0 = vec![vec![r(0.0), r(0.0)], vec![r(1.0), r(0.6)]];
    let b1 = linalg::zeros::<C>(2, 2);
    let v0 = left_eigenvector(&b0, &r(0.0)).unwrap();
    let x = frobenius_solve_system(&b0, &b1, &r(0.0), &v0, 8, Nome::K).unwrap();
    for (j, comp) in x.iter().enumerate() {
        assert!((comp.coeffs()[0] - v0[j]).norm() < 1e-15);
        assert!(comp.coeffs()[1..].iter().all(|c| c.norm() < 1e-15));
    }

    // For r ≠ 0 the factor (1 - x) on the left gives x^r (1 - x)^{-r} v0.
    let b0 = vec![vec![r(0.25), r(0.0)], vec![r(1.0), r(0.6)]];
    let rr = r(0.25);
    let v0 = left_eigenvector(&b0, &rr).unwrap();
    let x = frobenius_solve_system(&b0, &b1, &rr, &v0, 8, Nome::K).unwrap();
    let mut binom = r(1.0);
    for n in 0..=8 {
        for (j, comp) in x.iter().enumerate() {
            assert!((comp.coeffs()[n] - binom * v0[j]).norm() < 1e-14, "n = {n}");
        }
        binom *= (rr + n as f64) / (n as f64 + 1.0);
    }
}

#[test]
fn hypergeometric_series() {
    let geo = hypergeom_2f1(&r(1.0), &r(1.0), &r(1.0), 12).unwrap();
    assert!(geo.coeffs().iter().all(|&c| near(c, 1.0)));
    let (a, b, c) = (C::new(1.0 / 12.0, 0.0), C::new(5.0 / 12.0, 0.0), C::new(0.7, 0.0));
    let series = hypergeom_2f1(&a, &b, &c, 40).unwrap();
    let mut t = r(1.0);
    for n in 0..=40 {
        assert!((series.coeffs()[n] - t).norm() < 1e-14 * t.norm().max(1.0), "n = {n}");
        let nn = n as f64;
        t *= (a + nn) * (b + nn) / ((c + nn) * (1.0 + nn));
    }
    let frob = hypergeometric_operator(&a, &b, &c).frobenius_solve(&r(0.0), 40).unwrap();
    assert!(coeffwise_rel(&frob, &series).unwrap() < 1e-12);
    assert!(matches!(hypergeom_2f1(&r(0.5), &r(0.5), &r(-2.0), 5), Err(Error::PoleInC { n: 2 })));
}

#[test]
fn frobenius_on_cyclic_operator() {
    let co = cyclic_coeffs(&cs(&[0.0, 1.0 / 6.0, 1.0 / 3.0, 0.5])).unwrap();
    let op = build_cyclic_operator(&co);
    let y = op.frobenius_solve(&r(0.0), 50).unwrap();
    assert!(near(y.coeffs()[0], 1.0));
    assert!(op.residual(&y).unwrap() < 1e-9);
    assert!(matches!(op.frobenius_solve(&r(0.1), 10), Err(Error::NotAnExponent(_))));
}

#[test]
fn frobenius_detects_resonance() {
    let op = hypergeometric_operator(&r(0.5), &r(0.5), &r(-1.0));
    assert!(matches!(op.frobenius_solve(&r(0.0), 5), Err(Error::Resonance { shift: 2 })));
}

#[test]
fn modular_derivative_identities() {
    let cat = ClassicalCatalog::<C>::new(20).unwrap();
    let d12 = modular_derivative_scalar(cat.delta(), 12, &cat).unwrap();
    assert!(d12.max_abs() < 1e-9);
    let one = PuiseuxSeries::<C>::one(Nome::Q, 20);
    assert!(modular_derivative_scalar(&one, 0, &cat).unwrap().max_abs() == 0.0);

    let e4 = cat.e4(Nome::Q).unwrap();
    let e6 = cat.e6(Nome::Q).unwrap();
    let lhs = modular_derivative_scalar(&e4.mul(e6).unwrap(), 10, &cat).unwrap();
    let rhs = modular_derivative_scalar(e4, 4, &cat)
        .unwrap()
        .mul(e6)
        .unwrap()
        .add(&e4.mul(&modular_derivative_scalar(e6, 6, &cat).unwrap()).unwrap())
        .unwrap();
    assert!(coeffwise_rel(&lhs, &rhs).unwrap() < 1e-12);
}

#[test]
fn rank2_mlde_has_e4_as_solution() {
    let cat = ClassicalCatalog::<C>::new(20).unwrap();
    let op = rank2_mlde(&r(-1.0 / 6.0), 4, &cat, 20).unwrap();
    let res = op.residual(cat.e4(Nome::Q).unwrap()).unwrap();
    assert!(res < 1e-12, "{res}");
}

fn rank4_for(exps: &[f64], e: u8) -> Rank4Rep {
    let eig = [0, 1, 2, 3].map(|j| C::from_polar(1.0, 2.0 * PI * exps[j]));
    Rank4Rep::from_eigenvalues(eig, e).unwrap()
}

#[test]
fn classify_splits_on_trace_parity() {
    let exps = [0.1, 0.2, 0.3, 0.4];
    let rep = rank4_for(&exps, 0);
    let l = ExponentData::<C>::from_f64(&exps, Group::Gamma);
    let shifted = ExponentData::<C>::from_f64(&[exps[0] + 1.0, exps[1], exps[2], exps[3]], Group::Gamma);
    let a = classify(&rep, &l).unwrap();
    let b = classify(&rep, &shifted).unwrap();
    assert_ne!(a.case, b.case);
    assert_eq!(three_trace(&l).unwrap(), 3);
    assert_eq!(a.case, Case::Cyclic);
    assert_eq!(a.k1, 0);
    assert_eq!(a.weights, [0, 2, 4, 6]);
    assert_eq!(b.case, Case::Noncyclic);
    assert_eq!(b.k1, 4);
    assert_eq!(b.weights, [4, 6, 6, 8]);
}

#[test]
fn classify_errors() {
    let l = ExponentData::<C>::from_f64(&[0.1, 0.2, 0.3, 0.05], Group::Gamma);
    assert!(matches!(three_trace(&l), Err(Error::NonIntegralThreeTrace(_))));
    assert!(matches!(classify_trace(4, 0, 1), Err(Error::TraceDCongruenceViolation { .. })));
}

#[test]
fn dimension_at_minimal_weight_is_one() {
    for three_trace in -6..12i64 {
        let d = three_trace.rem_euclid(6) as u8;
        assert_eq!(dimension_from_trace(three_trace - 3, three_trace, d), 1, "3Tr = {three_trace}");
        assert_eq!(dimension_from_trace(three_trace - 2, three_trace, d), 0);
        assert_eq!(dimension_from_trace(three_trace - 5, three_trace, d), 0);
    }
}

#[test]
fn dimensions_match_hilbert_series() {
    for three_trace in -4..10i64 {
        for e in 0..2u8 {
            let d = (0..6u8).find(|&d| (d as i64 - three_trace).rem_euclid(3) == 0 && d % 2 != e).unwrap();
            let report = classify_trace(three_trace, d, e).unwrap();
            let lo = report.k1;
            let hs = hilbert_series(&report.weights, lo, lo + 24);
            for (i, k) in (lo..=lo + 24).enumerate() {
                assert_eq!(dimension_from_trace(k, three_trace, d), hs[i], "3Tr={three_trace} e={e} k={k}");
            }
        }
    }
}

#[test]
fn dimension_via_representation() {
    let exps = [0.1, 0.2, 0.3, 0.4];
    let rep = rank4_for(&exps, 0);
    let l = ExponentData::<C>::from_f64(&exps, Group::Gamma);
    assert_eq!(dimension(0, &rep, &l).unwrap(), 1);
    assert_eq!(dimension(12, &rep, &l).unwrap(), hilbert_series(&[0, 2, 4, 6], 12, 12)[0]);
    assert_eq!(dimension(-2, &rep, &l).unwrap(), 0);
}

#[test]
fn shifted_exponents_land_on_the_required_sums() {
    let l = ExponentData::<C>::from_f64(&[0.3, 0.8, 1.1, 0.8], Group::Gamma);
    let sum = |v: Vec<C>| v.iter().sum::<C>();
    assert!(near(sum(shifted_exponents(&l, Case::Cyclic)), 1.0));
    assert!(near(sum(shifted_exponents(&l, Case::Noncyclic)), 2.0 / 3.0));
    coeffs_for(&l, Case::Cyclic).unwrap();
    coeffs_for(&l, Case::Noncyclic).unwrap();
}

#[test]
fn coefficient_json_shape() {
    let co = noncyclic_coeffs(&cs(&[0.0, 1.0 / 12.0, 0.25, 1.0 / 3.0])).unwrap();
    let v = serde_json::to_value(co.to_json()).unwrap();
    assert_eq!(v["case"], "noncyclic");
    assert_eq!(v["f"].as_array().unwrap().len(), 4);
}

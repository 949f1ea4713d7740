use num_complex::Complex64;
use proptest::prelude::*;
use vvmf::classical::k_hauptmodul;
use vvmf::mlde::poly::multiset_distance;
use vvmf::mlde::{build_cyclic_operator, cyclic_coeffs, noncyclic_coeffs};
use vvmf::rep::{sym3_exponents, sym3_rep, tensor_exponents, tensor_rep, ExponentData, Group, Rank2Rep};
use vvmf::residual::coeffwise_rel;
use vvmf::{Nome, PuiseuxSeries};

type C = Complex64;

fn coeffs(n: usize) -> impl Strategy<Value = Vec<C>> {
    prop::collection::vec((-2.0..2.0f64, -2.0..2.0f64).prop_map(|(a, b)| C::new(a, b)), n)
}

fn unit_series(n: usize) -> impl Strategy<Value = PuiseuxSeries<C>> {
    (coeffs(n), -1.0..1.0f64).prop_map(|(mut c, lam)| {
        c[0] = C::new(1.0, 0.0);
        PuiseuxSeries::from_c64(Nome::Q, C::new(lam, 0.0), &c)
    })
}

fn k_series(n: usize) -> impl Strategy<Value = PuiseuxSeries<C>> {
    coeffs(n).prop_map(|c| PuiseuxSeries::from_c64(Nome::K, C::new(0.0, 0.0), &c))
}

fn frac_apart(a: f64, b: f64, gap: f64) -> bool {
    let d = a - b;
    (d - d.round()).abs() > gap
}

/// Four exponents with the given sum, pairwise away from integral gaps.
fn exponent_quad(sum: f64) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(-0.5..0.5f64, 3)
        .prop_map(move |mut v| {
            v.push(sum - v.iter().sum::<f64>());
            v
        })
        .prop_filter("separated exponents", |v| {
            (0..4).all(|i| (i + 1..4).all(|j| frac_apart(v[i], v[j], 0.05)))
        })
}

/// `(r1, r2)` with `6(r1 + r2)` integral and `r1 - r2` away from the
/// reducible differences.
fn rank2_pair() -> impl Strategy<Value = (f64, f64)> {
    (1..=5i64, 0.0..1.0f64)
        .prop_filter("irreducible pair", |&(_, d)| {
            frac_apart(3.0 * d, 0.0, 0.02) && frac_apart(d, 1.0 / 6.0, 0.02) && frac_apart(d, -1.0 / 6.0, 0.02)
        })
        .prop_map(|(s, d)| {
            let t = s as f64 / 6.0;
            ((t + d) / 2.0, (t - d) / 2.0)
        })
}

fn t_spectrum(r: &[f64]) -> Vec<C> {
    r.iter().map(|x| C::from_polar(1.0, 2.0 * std::f64::consts::PI * x)).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn theta_obeys_leibniz(a in unit_series(8), b in unit_series(8)) {
        let lhs = a.mul(&b).unwrap().theta();
        let rhs = a.theta().mul(&b).unwrap().add(&a.mul(&b.theta()).unwrap()).unwrap();
        prop_assert!(coeffwise_rel(&lhs, &rhs).unwrap() < 1e-12);
    }

    #[test]
    fn invert_round_trip(a in unit_series(10)) {
        let p = a.invert().unwrap().mul(&a).unwrap();
        prop_assert!(p.lead().norm() < 1e-14);
        prop_assert!((p.coeffs()[0] - 1.0).norm() < 1e-12);
        for c in &p.coeffs()[1..] {
            prop_assert!(c.norm() < 1e-8 * (1.0 + a.max_abs()).powi(10));
        }
    }

    #[test]
    fn binomial_powers_cancel(a in unit_series(8), r in -3.0..3.0f64, s in -1.0..1.0f64) {
        let e = C::new(r, s);
        let monic = PuiseuxSeries::from_c64(Nome::Q, C::new(0.0, 0.0), a.coeffs());
        let p = monic.pow_binomial(&e).unwrap().mul(&monic.pow_binomial(&-e).unwrap()).unwrap();
        let one = PuiseuxSeries::from_c64(Nome::Q, C::new(0.0, 0.0), &{
            let mut v = vec![C::new(0.0, 0.0); 8];
            v[0] = C::new(1.0, 0.0);
            v
        });
        let diff = p.sub(&one).unwrap();
        prop_assert!(diff.max_abs() < 1e-6 * monic.max_abs().powi(8), "{}", diff.max_abs());
    }

    #[test]
    fn compose_is_a_ring_map(a in k_series(8), b in k_series(8)) {
        let k = k_hauptmodul::<C>(8).unwrap();
        let sum = a.add(&b).unwrap().compose_frobenius(&k).unwrap();
        let sum2 = a.compose_frobenius(&k).unwrap().add(&b.compose_frobenius(&k).unwrap()).unwrap();
        prop_assert!(coeffwise_rel(&sum, &sum2).unwrap() < 1e-9);
        let prod = a.mul(&b).unwrap().compose_frobenius(&k).unwrap();
        let prod2 = a.compose_frobenius(&k).unwrap().mul(&b.compose_frobenius(&k).unwrap()).unwrap();
        prop_assert!(coeffwise_rel(&prod, &prod2).unwrap() < 1e-9);
    }

    #[test]
    fn slash_t_inverse_twice(c in coeffs(6), lam in -2.0..2.0f64) {
        let x = PuiseuxSeries::<C>::from_c64(Nome::Q2, C::new(lam, 0.0), &c);
        let twice = x.slash_t_inverse().unwrap().slash_t_inverse().unwrap();
        let phase = C::new(0.0, -2.0 * std::f64::consts::PI * lam).exp();
        for n in 0..6 {
            let want: C = c[n] * phase;
            prop_assert!((twice.coeffs()[n] - want).norm() < 1e-12);
        }
    }

    #[test]
    fn cyclic_indicial_round_trip(f in exponent_quad(1.0)) {
        let fc: Vec<C> = f.iter().map(|&x| C::new(x, 0.0)).collect();
        let co = cyclic_coeffs(&fc).unwrap();
        prop_assert!(multiset_distance(&co.characteristic_polynomial().roots(), &fc) < 1e-6);
        prop_assert!(multiset_distance(&build_cyclic_operator(&co).indicial_roots(), &fc) < 1e-6);
    }

    #[test]
    fn noncyclic_indicial_round_trip(f in exponent_quad(2.0 / 3.0)) {
        let fc: Vec<C> = f.iter().map(|&x| C::new(x, 0.0)).collect();
        let co = noncyclic_coeffs(&fc).unwrap();
        prop_assert!(multiset_distance(&co.characteristic_polynomial().roots(), &fc) < 1e-6);
    }

    #[test]
    fn frobenius_solutions_annihilated(f in exponent_quad(1.0)) {
        let fc: Vec<C> = f.iter().map(|&x| C::new(x, 0.0)).collect();
        let op = build_cyclic_operator(&cyclic_coeffs(&fc).unwrap());
        for r in &fc {
            let s = op.frobenius_solve(r, 20).unwrap();
            prop_assert!(op.residual(&s).unwrap() < 1e-9);
        }
    }

    #[test]
    fn tensor_exponent_trace(p in rank2_pair(), q in rank2_pair()) {
        let l1 = ExponentData::<C>::from_f64(&[p.0, p.1], Group::Gamma);
        let l2 = ExponentData::<C>::from_f64(&[q.0, q.1], Group::Gamma);
        let t = tensor_exponents(&l1, &l2).unwrap();
        prop_assert!((t.trace() - 2.0 * (l1.trace() + l2.trace())).norm() < 1e-12);
        let s = sym3_exponents(&l1).unwrap();
        prop_assert!((s.trace() - 6.0 * l1.trace()).norm() < 1e-12);
    }

    #[test]
    fn functor_spectra(p in rank2_pair(), q in rank2_pair()) {
        let a = Rank2Rep::from_exponents(C::new(p.0, 0.0), C::new(p.1, 0.0));
        let b = Rank2Rep::from_exponents(C::new(q.0, 0.0), C::new(q.1, 0.0));
        prop_assume!(a.is_ok() && b.is_ok());
        let (a, b) = (a.unwrap(), b.unwrap());
        let t = tensor_rep(&a, &b).unwrap();
        let want = t_spectrum(&[p.0 + q.0, p.0 + q.1, p.1 + q.0, p.1 + q.1]);
        prop_assert!(multiset_distance(&t.t_eigenvalues(), &want) < 1e-9);
        let s = sym3_rep(&a).unwrap();
        let want = t_spectrum(&[3.0 * p.0, 2.0 * p.0 + p.1, p.0 + 2.0 * p.1, 3.0 * p.1]);
        prop_assert!(multiset_distance(&s.t_eigenvalues(), &want) < 1e-9);
    }
}

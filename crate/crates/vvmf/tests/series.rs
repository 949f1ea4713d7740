use num_complex::Complex64;
use vvmf::classical::k_hauptmodul;
use vvmf::series::SeriesJson;
use vvmf::{Big, Error, Nome, PuiseuxSeries, Scalar};

type C = Complex64;

fn s(nome: Nome, lead: f64, coeffs: &[f64]) -> PuiseuxSeries<C> {
    PuiseuxSeries::from_f64(nome, lead, coeffs)
}

fn close(a: C, b: C, tol: f64) -> bool {
    (a - b).norm() <= tol * (1.0 + b.norm())
}

fn assert_coeffs(x: &PuiseuxSeries<C>, expected: &[f64]) {
    assert_eq!(x.order() + 1, expected.len(), "order mismatch");
    for (n, (&a, &e)) in x.coeffs().iter().zip(expected).enumerate() {
        assert!(close(a, C::new(e, 0.0), 1e-12), "coefficient {n}: {a} vs {e}");
    }
}

#[test]
fn add_aligns_to_smaller_exponent() {
    let a = s(Nome::Q, 1.0 / 3.0, &[1.0, 0.0]);
    let b = s(Nome::Q, 4.0 / 3.0, &[5.0]);
    let sum = a.add(&b).unwrap();
    assert!(close(*sum.lead(), C::new(1.0 / 3.0, 0.0), 1e-15));
    assert_coeffs(&sum, &[1.0, 5.0]);
    let sum_rev = b.add(&a).unwrap();
    assert_coeffs(&sum_rev, &[1.0, 5.0]);
}

#[test]
fn add_rejects_fractional_gap() {
    let a = s(Nome::Q, 0.0, &[1.0]);
    let b = s(Nome::Q, 1.0 / 6.0, &[1.0]);
    assert!(matches!(a.add(&b), Err(Error::NonIntegralExponentGap { .. })));
}

#[test]
fn add_rejects_mixed_nomes() {
    let a = s(Nome::Q, 0.0, &[1.0]);
    let b = s(Nome::Q2, 0.0, &[1.0]);
    assert!(matches!(a.add(&b), Err(Error::NomeMismatch { .. })));
}

#[test]
fn mul_truncates_to_shorter_operand() {
    let x = s(Nome::Q, 0.0, &[0.0, 1.0]);
    let sq = x.mul(&x).unwrap();
    assert_coeffs(&sq, &[0.0, 0.0]);
    let x2 = s(Nome::Q, 0.0, &[0.0, 1.0, 0.0]);
    assert_coeffs(&x2.mul(&x2).unwrap(), &[0.0, 0.0, 1.0]);
    let y = s(Nome::Q, 0.25, &[1.0, 2.0]);
    let z = s(Nome::Q, 0.5, &[3.0, 0.0, 7.0]);
    let p = y.mul(&z).unwrap();
    assert!(close(*p.lead(), C::new(0.75, 0.0), 1e-15));
    assert_coeffs(&p, &[3.0, 6.0]);
}

#[test]
fn theta_multiplies_by_exponent() {
    let x = s(Nome::Q, 0.5, &[2.0, 4.0]);
    assert_coeffs(&x.theta(), &[1.0, 6.0]);
}

#[test]
fn invert_geometric_and_shifted() {
    let x = s(Nome::Q, 0.0, &[1.0, -1.0, 0.0, 0.0, 0.0, 0.0]);
    assert_coeffs(&x.invert().unwrap(), &[1.0; 6]);
    let y = s(Nome::Q, 2.0, &[2.0]);
    let inv = y.invert().unwrap();
    assert!(close(*inv.lead(), C::new(-2.0, 0.0), 1e-15));
    assert_coeffs(&inv, &[0.5]);
    assert!(matches!(s(Nome::Q, 0.0, &[0.0, 1.0]).invert(), Err(Error::NonUnitLeadingCoefficient)));
}

#[test]
fn pow_binomial_matches_generalized_binomials() {
    let one_plus_q = s(Nome::Q, 0.0, &[1.0, 1.0, 0.0]);
    assert_coeffs(&one_plus_q.pow_binomial(&C::new(0.5, 0.0)).unwrap(), &[1.0, 0.5, -0.125]);
    assert_coeffs(&one_plus_q.pow_binomial(&C::new(2.0, 0.0)).unwrap(), &[1.0, 2.0, 1.0]);

    let r = -2.0 / 7.0;
    let long = s(Nome::Q, 0.0, &[1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0]);
    let mut binom = vec![1.0];
    for k in 1..8 {
        let prev: f64 = binom[k - 1];
        binom.push(prev * (r - (k as f64 - 1.0)) / k as f64);
    }
    assert_coeffs(&long.pow_binomial(&C::new(r, 0.0)).unwrap(), &binom);

    let scaled = s(Nome::Q, 0.0, &[2.0, 1.0]);
    assert!(matches!(scaled.pow_binomial(&C::new(0.5, 0.0)), Err(Error::NonMonicLeadingCoefficient { .. })));
}

#[test]
fn pow_binomial_scales_leading_exponent() {
    let x = s(Nome::Q, 0.5, &[1.0, 3.0]);
    let y = x.pow_binomial(&C::new(3.0, 0.0)).unwrap();
    assert!(close(*y.lead(), C::new(1.5, 0.0), 1e-15));
}

#[test]
fn compose_square_root_of_k() {
    let k = k_hauptmodul::<C>(6).unwrap();
    let sqrt_k = PuiseuxSeries::<C>::from_f64(Nome::K, 0.5, &[1.0, 0.0, 0.0, 0.0, 0.0, 0.0]).compose_frobenius(&k).unwrap();
    let direct = k.pow_binomial(&C::new(0.5, 0.0));
    assert!(direct.is_err(), "K has leading coefficient 1728");
    let c = 1728f64.sqrt();
    assert!(close(*sqrt_k.lead(), C::new(0.5, 0.0), 1e-15));
    assert!(close(sqrt_k.coeffs()[0], C::new(c, 0.0), 1e-14));
    assert!(close(sqrt_k.coeffs()[1], C::new(-372.0 * c, 0.0), 1e-13));
    let sq = sqrt_k.mul(&sqrt_k).unwrap();
    for n in 0..=sq.order() {
        assert!(close(sq.coeffs()[n], k.coeffs()[n], 1e-11), "K^(1/2) squared at n={n}");
    }
}

#[test]
fn compose_rejects_q_series() {
    let k = k_hauptmodul::<C>(4).unwrap();
    let x = s(Nome::Q, 0.0, &[1.0, 1.0]);
    assert!(matches!(x.compose_frobenius(&k), Err(Error::WrongNome { .. })));
}

#[test]
fn slash_t_inverse_phases() {
    let x = s(Nome::Q2, 0.0, &[1.0, 1.0]);
    assert_coeffs(&x.slash_t_inverse().unwrap(), &[1.0, -1.0]);
    let half = s(Nome::Q2, 0.5, &[1.0]);
    let y = half.slash_t_inverse().unwrap();
    assert!(close(y.coeffs()[0], C::new(0.0, -1.0), 1e-15));

    let lam = 0.3;
    let z = s(Nome::Q2, lam, &[1.0, 2.0, -3.0]);
    let twice = z.slash_t_inverse().unwrap().slash_t_inverse().unwrap();
    let phase = C::new(0.0, -2.0 * std::f64::consts::PI * lam).exp();
    for n in 0..3 {
        assert!(close(twice.coeffs()[n], z.coeffs()[n] * phase, 1e-14));
    }
    assert!(matches!(s(Nome::Q, 0.0, &[1.0]).slash_t_inverse(), Err(Error::WrongNome { .. })));
}

#[test]
fn q2_even_and_odd_parts() {
    let x = s(Nome::Q, 0.25, &[1.0, 2.0, 3.0]);
    let y = x.to_q2().unwrap();
    assert!(close(*y.lead(), C::new(0.5, 0.0), 1e-15));
    assert_coeffs(&y, &[1.0, 0.0, 2.0, 0.0, 3.0]);
    assert_coeffs(&y.even_part_in_q().unwrap(), &[1.0, 2.0, 3.0]);
    assert_coeffs(&y.odd_part_in_q().unwrap(), &[0.0, 0.0]);
}

#[test]
fn json_round_trip() {
    let x = PuiseuxSeries::<C>::from_c64(Nome::Q2, C::new(1.0 / 3.0, 0.0), &[C::new(1.0, -2.0), C::new(0.5, 0.25)]);
    let text = serde_json::to_string(&x.to_json()).unwrap();
    let back: SeriesJson = serde_json::from_str(&text).unwrap();
    let y = PuiseuxSeries::<C>::from_json(&back);
    assert_eq!(x.to_json(), y.to_json());
}

#[test]
fn extended_precision_agrees_with_double() {
    vvmf::scalar::with_precision(256, || {
        let x = PuiseuxSeries::<Big>::from_f64(Nome::Q, 0.0, &[1.0, -1.0, 0.5, 0.25]);
        let inv = x.invert().unwrap().mul(&x).unwrap();
        assert!((inv.coeffs()[0].to_c64() - C::new(1.0, 0.0)).norm() < 1e-30);
        for c in &inv.coeffs()[1..] {
            assert!(c.abs() < 1e-60);
        }
    });
}

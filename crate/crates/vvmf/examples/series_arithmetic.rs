//! Truncated Puiseux series: alignment, products, inverses and powers.

use num_complex::Complex64;
use vvmf::{Nome, PuiseuxSeries};

fn show(label: &str, s: &PuiseuxSeries<Complex64>) {
    let terms: Vec<String> = s.coeffs().iter().map(|c| format!("{:.4}", c.re)).collect();
    println!("{label:<18} q^{:.4} ({})", s.lead().re, terms.join(", "));
}

fn main() -> vvmf::Result<()> {
    let a = PuiseuxSeries::<Complex64>::from_f64(Nome::Q, 1.0 / 3.0, &[1.0, -2.0, 0.5, 0.0, 1.0]);
    let b = PuiseuxSeries::<Complex64>::from_f64(Nome::Q, 4.0 / 3.0, &[3.0, 1.0, 0.0, 2.0]);
    show("a", &a);
    show("b", &b);
    show("a + b", &a.add(&b)?);
    show("a * b", &a.mul(&b)?);
    show("theta a", &a.theta());

    let one_minus_q = PuiseuxSeries::<Complex64>::from_f64(Nome::Q, 0.0, &[1.0, -1.0, 0.0, 0.0, 0.0, 0.0]);
    show("1/(1-q)", &one_minus_q.invert()?);
    show("(1-q)^(1/2)", &one_minus_q.pow_binomial(&Complex64::new(0.5, 0.0))?);

    let q2 = a.to_q2()?;
    show("a in q^(1/2)", &q2);
    show("even part", &q2.even_part_in_q()?);
    Ok(())
}

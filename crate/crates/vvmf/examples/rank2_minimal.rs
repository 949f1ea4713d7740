//! Minimal-weight forms for rank-two representations. The modular route runs
//! in double precision; the hypergeometric route composes with `K`, whose
//! coefficients grow quickly, so it runs in extended precision.

use num_complex::Complex64;
use vvmf::classical::ClassicalCatalog;
use vvmf::constructions::{rank2_minimal, Route};
use vvmf::rep::{ExponentData, Group, Rank2Rep};
use vvmf::scalar::{bits_for_order, with_precision};
use vvmf::{Big, Scalar};

fn main() -> vvmf::Result<()> {
    let order = 20;
    let cat = ClassicalCatalog::<Complex64>::new(order)?;
    for (six_trace, diff) in [(1, 0.05), (2, 0.23), (3, 0.37), (5, 0.61)] {
        let t = six_trace as f64 / 6.0;
        let (r1, r2) = ((t + diff) / 2.0, (t - diff) / 2.0);
        let rep = Rank2Rep::from_exponents(Complex64::new(r1, 0.0), Complex64::new(r2, 0.0))?;
        let l = ExponentData::<Complex64>::from_f64(&[r1, r2], Group::Gamma);
        let modular = rank2_minimal(&rep, &l, order, &cat, Route::Modular)?;
        let gap = with_precision(bits_for_order(order), || -> vvmf::Result<f64> {
            let big = ClassicalCatalog::<Big>::new(order)?;
            let l = ExponentData::<Big>::from_f64(&[r1, r2], Group::Gamma);
            let compose = rank2_minimal(&rep, &l, order, &big, Route::Compose)?;
            let mut worst: f64 = 0.0;
            for (a, b) in compose.components.components.iter().zip(&modular.components.components) {
                for (x, y) in a.coeffs().iter().zip(b.coeffs()) {
                    worst = worst.max((x.to_c64() - y).norm() / (1.0 + y.norm()));
                }
            }
            Ok(worst)
        })?;
        println!("exponents ({r1:.4}, {r2:.4}): weight {}, routes differ by {gap:.1e}", modular.k1);
        for (i, comp) in modular.components.components.iter().enumerate() {
            let head: Vec<String> = comp.coeffs()[..5].iter().map(|z| format!("{:+.4e}", z.re)).collect();
            println!("    component {i}: q^{:.4} [{}]", comp.lead().re, head.join(", "));
        }
    }
    Ok(())
}

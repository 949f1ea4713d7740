//! A free basis for the symmetric cube of a rank-two representation,
//! computed in extended precision.

use vvmf::classical::ClassicalCatalog;
use vvmf::constructions::{sym3_pipeline, Route};
use vvmf::rep::{ExponentData, Group, Rank2Rep};
use vvmf::scalar::{bits_for_order, with_precision};
use vvmf::{Big, Scalar};

fn main() -> vvmf::Result<()> {
    let order = 40;
    let (r1, r2) = (0.3, 1.0 / 3.0 - 0.3);
    let rep = Rank2Rep::from_exponents(num_complex::Complex64::new(r1, 0.0), num_complex::Complex64::new(r2, 0.0))?;
    with_precision(bits_for_order(order), || {
        let cat = ClassicalCatalog::<Big>::new(order)?;
        let l = ExponentData::<Big>::from_f64(&[r1, r2], Group::Gamma);
        let res = sym3_pipeline(&rep, &l, order, &cat, Route::Compose, 1e-30)?;
        println!("case {:?}, weights {:?}", res.basis.case.case, res.basis.weights());
        let f = &res.basis.forms[0];
        for (i, comp) in f.components.iter().enumerate() {
            println!("F[{i}] = q^{:.4} ({:+.12e} + {:+.12e} q + ...)", comp.lead().to_c64().re, comp.coeffs()[0].to_c64().re, comp.coeffs()[1].to_c64().re);
        }
        for r in &res.basis.residuals {
            println!("{:<52} {:.2e}", r.name, r.value);
        }
        Ok(())
    })
}

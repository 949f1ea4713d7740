//! A free basis for the tensor product of two rank-two representations.

use num_complex::Complex64;
use vvmf::classical::ClassicalCatalog;
use vvmf::constructions::{tensor_pipeline, Route};
use vvmf::rep::{ExponentData, Group, Rank2Rep};

fn pair(six_trace: i64, diff: f64) -> vvmf::Result<(Rank2Rep, ExponentData<Complex64>)> {
    let t = six_trace as f64 / 6.0;
    let (r1, r2) = ((t + diff) / 2.0, (t - diff) / 2.0);
    let rep = Rank2Rep::from_exponents(Complex64::new(r1, 0.0), Complex64::new(r2, 0.0))?;
    Ok((rep, ExponentData::from_f64(&[r1, r2], Group::Gamma)))
}

fn main() -> vvmf::Result<()> {
    let order = 30;
    let cat = ClassicalCatalog::<Complex64>::new(order)?;
    let (alpha, l1) = pair(2, 0.23)?;
    let (beta, l2) = pair(3, 0.13)?;
    let res = tensor_pipeline(&alpha, &beta, &l1, &l2, order, &cat, Route::Modular, 1e-9)?;
    println!("case {:?}, weights {:?}", res.basis.case.case, res.basis.weights());
    println!("a = {:.6}, b = {:.6}, c = {:.6}", res.coefficients.a.re, res.coefficients.b.re, res.coefficients.c.re);
    for r in &res.basis.residuals {
        println!("{:<52} {:.2e}  {}", r.name, r.value, if r.passed() { "ok" } else { "FAIL" });
    }
    Ok(())
}

//! Induction from the index-two subgroup: the minimal pair `(A, B)`, the two
//! induced rank-four forms and their bases.

use num_complex::Complex64;
use std::f64::consts::TAU;
use vvmf::classical::ClassicalCatalog;
use vvmf::constructions::{induction_pipeline, InductionJob, Route};
use vvmf::rep::{ExponentData, GRank2Rep, Group};

fn main() -> vvmf::Result<()> {
    let order = 30;
    let r = 0.23;
    let e = [1.0 / 3.0 + r, 1.0 / 3.0 - r];
    let rep = GRank2Rep::from_t_squared_spectrum(0, [0, 1, 2], e.map(|x| Complex64::from_polar(1.0, TAU * x)))?;
    let job = InductionJob { rep, exponents: ExponentData::<Complex64>::from_f64(&e, Group::G), u: None };
    let cat = ClassicalCatalog::<Complex64>::new(order)?;
    let res = induction_pipeline(&job, order, &cat, Route::Modular, 1e-9)?;
    let p = &res.pair.params;
    println!("k1 = {}, r = {:.4}, u = {:.6e}", p.k1, p.r.re, p.u);
    for rr in &res.pair.residuals {
        println!("{:<28} {:.2e}", rr.name, rr.value);
    }
    for (label, basis) in ["Ind A", "Ind B"].iter().zip(&res.bases) {
        println!("{label}: {:?} weights {:?}, all residuals pass: {}", basis.case.case, basis.weights(), basis.all_passed());
    }
    Ok(())
}

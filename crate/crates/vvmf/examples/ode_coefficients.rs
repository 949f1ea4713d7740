//! The coefficients `a, b, c` of the fourth-order equation for both cases,
//! and the operators in `θ = K d/dK` they produce.

use num_complex::Complex64;
use vvmf::mlde::poly::multiset_distance;
use vvmf::mlde::{build_cyclic_operator, build_noncyclic_operator, cyclic_coeffs, noncyclic_coeffs};

fn main() -> vvmf::Result<()> {
    let c = |v: &[f64]| v.iter().map(|&x| Complex64::new(x, 0.0)).collect::<Vec<_>>();

    let f = c(&[0.0, 1.0 / 12.0, 1.0 / 3.0, 7.0 / 12.0]);
    let co = cyclic_coeffs(&f)?;
    println!("cyclic    f = {:?}", f.iter().map(|z| z.re).collect::<Vec<_>>());
    println!("          a = {:.6}, b = {:.6}, c = {:.6}", co.a.re, co.b.re, co.c.re);
    let op = build_cyclic_operator(&co);
    println!("          indicial roots recovered to {:.1e}", multiset_distance(&op.indicial_roots(), &f));

    let g = c(&[0.02, 1.0 / 12.0, 0.23, 1.0 / 3.0]);
    let co = noncyclic_coeffs(&g)?;
    println!("noncyclic f = {:?}", g.iter().map(|z| z.re).collect::<Vec<_>>());
    println!("          a = {:.6}, b = {:.6}, c = {:.6}", co.a.re, co.b.re, co.c.re);
    let op = build_noncyclic_operator(&co);
    println!("          operator order {}, indicial roots recovered to {:.1e}", op.order(), multiset_distance(&op.indicial_roots(), &g));
    Ok(())
}

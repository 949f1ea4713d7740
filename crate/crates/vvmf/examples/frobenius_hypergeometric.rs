//! The Gauss series `2F1(a, b; c; x)` from its closed recurrence and as the
//! Frobenius solution of the hypergeometric operator at exponent zero.

use num_complex::Complex64;
use vvmf::mlde::{hypergeom_2f1, hypergeometric_operator};
use vvmf::residual::coeffwise_rel;

fn main() -> vvmf::Result<()> {
    let r = |x: f64| Complex64::new(x, 0.0);
    let (a, b, c) = (r(1.0 / 12.0), r(5.0 / 12.0), r(2.0 / 3.0));
    let order = 30;
    let direct = hypergeom_2f1(&a, &b, &c, order)?;
    let op = hypergeometric_operator(&a, &b, &c);
    let frob = op.frobenius_solve(&r(0.0), order)?;
    for n in 0..6 {
        println!("x^{n}: {:.10}", direct.coeffs()[n].re);
    }
    println!("agreement with the Frobenius solution: {:.2e}", coeffwise_rel(&direct, &frob)?);
    println!("operator residual: {:.2e}", op.residual(&direct)?);

    let other = op.frobenius_solve(&(r(1.0) - c), order)?;
    println!("second exponent 1 - c = {:.4}: residual {:.2e}", 1.0 - c.re, op.residual(&other)?);
    Ok(())
}

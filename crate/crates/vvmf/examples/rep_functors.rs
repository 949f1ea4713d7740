//! Rank-two representations and the rank-four ones built from them.

use num_complex::Complex64;
use vvmf::rep::{sym3_rep, tensor_is_irreducible, tensor_rep, Rank2Rep};

fn phases(z: &[Complex64]) -> Vec<String> {
    z.iter().map(|w| format!("{:.4}", w.arg() / std::f64::consts::TAU)).collect()
}

fn main() -> vvmf::Result<()> {
    let c = |x: f64| Complex64::new(x, 0.0);
    let alpha = Rank2Rep::from_exponents(c(0.3), c(1.0 / 3.0 - 0.3))?;
    let beta = Rank2Rep::from_exponents(c(0.4), c(0.5 - 0.4))?;
    println!("alpha: T phases {:?}, irreducible {}", phases(&alpha.t_eigenvalues()), alpha.is_irreducible());
    println!("beta:  T phases {:?}, irreducible {}", phases(&beta.t_eigenvalues()), beta.is_irreducible());

    let t = tensor_rep(&alpha, &beta)?;
    println!("alpha ⊗ beta: T phases {:?}, irreducible {}", phases(&t.t_eigenvalues()), tensor_is_irreducible(&alpha, &beta));
    let s = sym3_rep(&alpha)?;
    println!("Sym³ alpha:   T phases {:?}", phases(&s.t_eigenvalues()));
    println!("normal-form defects of Sym³ alpha: {:?}", s.normal_form_defects());
    Ok(())
}

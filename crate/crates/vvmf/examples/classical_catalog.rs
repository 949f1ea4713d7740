//! Prints the first coefficients of the level-one catalog and checks the
//! classical identities in extended precision.

use num_complex::Complex64;
use vvmf::classical::{classical_identities, ClassicalCatalog};
use vvmf::scalar::{bits_for_order, with_precision};
use vvmf::Big;

fn main() -> vvmf::Result<()> {
    let cat = ClassicalCatalog::<Complex64>::new(6)?;
    for name in ["E2", "E4", "E6", "Delta", "j", "K", "eta^2", "theta3_4"] {
        let s = cat.by_name(name)?;
        let coeffs: Vec<String> = s.coeffs().iter().map(|c| format!("{}", c.re.round())).collect();
        println!("{name:<9} q^{:<8.4} [{}]", s.lead().re, coeffs.join(", "));
    }

    let order = 60;
    let residuals = with_precision(bits_for_order(order), || {
        let cat = ClassicalCatalog::<Big>::new(order)?;
        classical_identities(&cat, 1e-40)
    })?;
    println!();
    for r in residuals {
        println!("{:<40} {:.2e}  {}", r.name, r.value, if r.passed() { "ok" } else { "FAIL" });
    }
    Ok(())
}

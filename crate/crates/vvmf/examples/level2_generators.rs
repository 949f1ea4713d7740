//! The level-two generators `f`, `g` and the hauptmodul `Z`, with the
//! identities tying them together.

use num_complex::Complex64;
use vvmf::classical::{fg_generators, level2_identities, z_hauptmodul, ClassicalCatalog};
use vvmf::scalar::{bits_for_order, with_precision};
use vvmf::Big;

fn main() -> vvmf::Result<()> {
    let (f, g) = fg_generators::<Complex64>(6)?;
    let z = z_hauptmodul::<Complex64>(6)?;
    for (name, s) in [("f", &f), ("g", &g), ("Z", &z)] {
        println!("{name}: leading exponent {:.4}", s.lead().re);
        for (n, c) in s.coeffs().iter().enumerate() {
            println!("  {n:>2}  {:+.6e} {:+.6e}i", c.re, c.im);
        }
    }

    // Z has a pole at the elliptic point, so its products with f and g lose
    // digits quickly in double precision.
    let order = 50;
    let residuals = with_precision(bits_for_order(order), || level2_identities(&ClassicalCatalog::<Big>::new(order)?, 1e-30))?;
    for r in residuals {
        println!("{:<36} {:.2e}", r.name, r.value);
    }
    Ok(())
}

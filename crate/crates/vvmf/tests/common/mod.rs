#![allow(dead_code)]

use num_complex::Complex64;
use std::f64::consts::PI;
use vvmf::constructions::InductionJob;
use vvmf::rep::{ExponentData, GRank2Rep, Group, Rank2Rep};
use vvmf::Scalar;

/// `(6 Tr(L), r1 - r2)` for a grid of T-regular rank-two exponent pairs with
/// `3(r1 - r2)` non-integral and `r1 - r2 ≠ ±1/6`.
const RANK2_GRID: [(i64, f64); 13] = [
    (1, 0.05),
    (1, 0.11),
    (2, 0.07),
    (2, 0.23),
    (2, 0.31),
    (3, 0.13),
    (3, 0.37),
    (3, 0.45),
    (4, 0.21),
    (4, 0.52),
    (5, 0.09),
    (5, 0.61),
    (5, 0.77),
];

pub fn rank2_grid() -> Vec<(f64, f64)> {
    RANK2_GRID
        .iter()
        .map(|&(s, d)| {
            let t = s as f64 / 6.0;
            ((t + d) / 2.0, (t - d) / 2.0)
        })
        .collect()
}

pub fn rank2(r: (f64, f64)) -> Rank2Rep {
    Rank2Rep::from_exponents(Complex64::new(r.0, 0.0), Complex64::new(r.1, 0.0)).expect("grid pair is a valid representation")
}

pub fn exps<S: Scalar>(r: (f64, f64)) -> ExponentData<S> {
    ExponentData::from_f64(&[r.0, r.1], Group::Gamma)
}

/// Local exponent differences `r` used for the induction runs; the
/// exponents for `T²` are `1/3 ± r`.
pub const INDUCTION_R: [f64; 6] = [0.1, 0.17, 0.23, 0.31, 0.37, 0.44];

/// Representation of the index-two subgroup restricting from `SL2(Z)`,
/// `ζ = (1, ζ, ζ²)`, with `ρ(T²)` spectrum `e^{2πi(1/3 ± r)}`.
pub fn induction_job<S: Scalar>(r: f64, with_u: bool) -> InductionJob<S> {
    let e = [1.0 / 3.0 + r, 1.0 / 3.0 - r];
    let lambda = e.map(|x| Complex64::from_polar(1.0, 2.0 * PI * x));
    let rep = GRank2Rep::from_t_squared_spectrum(0, [0, 1, 2], lambda).expect("valid spectrum");
    let u = with_u.then(|| vvmf::constructions::induction::u_from_local_exponent(&S::from_f64(r)));
    InductionJob { rep, exponents: ExponentData::from_f64(&e, Group::G), u }
}

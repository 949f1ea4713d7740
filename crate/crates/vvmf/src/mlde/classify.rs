//! Minimal weights, the cyclic/noncyclic split and dimensions of the
//! graded pieces for rank four.

use crate::error::{Error, Result};
use crate::rep::{ExponentData, Rank4Rep};
use crate::scalar::{near_integer, Scalar};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Case {
    Cyclic,
    Noncyclic,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseReport {
    pub case: Case,
    pub k1: i64,
    pub weights: [i64; 4],
    pub three_trace: i64,
    pub d: u8,
    pub e: u8,
}

/// `3 Tr(L)` as an integer.
pub fn three_trace<S: Scalar>(l: &ExponentData<S>) -> Result<i64> {
    let t = l.trace().to_c64() * 3.0;
    near_integer(t, 1e-9).ok_or_else(|| Error::NonIntegralThreeTrace(format!("{t}")))
}

/// Case split from `3 Tr(L)`, `d` and `e`.
pub fn classify_trace(three_trace: i64, d: u8, e: u8) -> Result<CaseReport> {
    if (three_trace - d as i64).rem_euclid(3) != 0 {
        return Err(Error::TraceDCongruenceViolation { three_trace, d });
    }
    let (case, k1, weights) = if (three_trace - e as i64).rem_euclid(2) == 1 {
        let k1 = three_trace - 3;
        (Case::Cyclic, k1, [k1, k1 + 2, k1 + 4, k1 + 6])
    } else {
        let k1 = three_trace - 2;
        (Case::Noncyclic, k1, [k1, k1 + 2, k1 + 2, k1 + 4])
    };
    Ok(CaseReport { case, k1, weights, three_trace, d, e })
}

pub fn classify<S: Scalar>(rep: &Rank4Rep, l: &ExponentData<S>) -> Result<CaseReport> {
    classify_trace(three_trace(l)?, rep.d, rep.e)
}

/// `a + bζ` in `Z[ζ]`, `ζ = e^{2πi/3}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Eisenstein(i64, i64);

impl Eisenstein {
    fn mul(self, o: Eisenstein) -> Eisenstein {
        let (a, b, c, d) = (self.0, self.1, o.0, o.1);
        Eisenstein(a * c - b * d, a * d + b * c - b * d)
    }

    fn pow(self, n: u32) -> Eisenstein {
        (0..n).fold(Eisenstein(1, 0), |acc, _| acc.mul(self))
    }
}

/// `dim M_k(ρ, L)` from the Euler characteristic, evaluated exactly in
/// `Z[ζ]`.
pub fn dimension_from_trace(k: i64, three_trace: i64, d: u8) -> u64 {
    if (d as i64 - k).rem_euclid(2) == 0 || k < three_trace - 3 {
        return 0;
    }
    let m = k - d as i64;
    let xi = Eisenstein(1, 1);
    let zeta = Eisenstein(0, 1);
    let xi_m = xi.pow(m.rem_euclid(6) as u32).mul(Eisenstein(2, 1));
    let zeta_m = zeta.pow(m.rem_euclid(3) as u32).mul(Eisenstein(1, -1));
    let nine_chi = Eisenstein(3 * (5 + k - three_trace) - xi_m.0 + zeta_m.0, -xi_m.1 + zeta_m.1);
    assert!(
        nine_chi.1 == 0 && nine_chi.0.rem_euclid(9) == 0 && nine_chi.0 >= 0,
        "Euler characteristic is not a non-negative integer: 9 chi = {nine_chi:?}"
    );
    (nine_chi.0 / 9) as u64
}

pub fn dimension<S: Scalar>(k: i64, rep: &Rank4Rep, l: &ExponentData<S>) -> Result<u64> {
    let report = classify(rep, l)?;
    Ok(dimension_from_trace(k, report.three_trace, rep.d))
}

/// Coefficients of `Σ_j T^{k_j} / ((1 - T^4)(1 - T^6))` for `T^k`, `k` in
/// `lo..=hi`.
pub fn hilbert_series(weights: &[i64], lo: i64, hi: i64) -> Vec<u64> {
    (lo..=hi)
        .map(|k| {
            weights
                .iter()
                .map(|&kj| {
                    let rest = k - kj;
                    if rest < 0 {
                        return 0;
                    }
                    (0..=rest / 6).filter(|b| (rest - 6 * b) % 4 == 0).count() as u64
                })
                .sum()
        })
        .collect()
}

//! Case, minimal weight and dimensions of the graded pieces for a few
//! values of `3 Tr(L)`.

use vvmf::mlde::classify::{classify_trace, dimension_from_trace};

fn main() -> vvmf::Result<()> {
    for (three_trace, e) in [(3i64, 0u8), (4, 1), (5, 0), (9, 1), (10, 0)] {
        let d = (0..6u8).find(|&d| (d as i64 - three_trace).rem_euclid(3) == 0 && d % 2 != e).unwrap();
        let report = classify_trace(three_trace, d, e)?;
        let dims: Vec<u64> = (report.k1..report.k1 + 14).map(|k| dimension_from_trace(k, three_trace, d)).collect();
        println!(
            "3Tr = {three_trace:>2}, d = {d}, e = {e}: {:?}, k1 = {:>2}, weights {:?}",
            report.case, report.k1, report.weights
        );
        println!("    dim M_k for k = k1, k1 + 1, ...: {dims:?}");
    }
    Ok(())
}

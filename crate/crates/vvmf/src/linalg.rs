//! Small dense matrices over a [`Scalar`] field, stored row-major as
//! `Vec<Vec<S>>`.

use crate::scalar::Scalar;

pub type Mat<S> = Vec<Vec<S>>;

pub fn zeros<S: Scalar>(rows: usize, cols: usize) -> Mat<S> {
    vec![vec![S::zero(); cols]; rows]
}

pub fn identity<S: Scalar>(n: usize) -> Mat<S> {
    let mut m = zeros(n, n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = S::one();
    }
    m
}

pub fn diag<S: Scalar>(d: &[S]) -> Mat<S> {
    let mut m = zeros(d.len(), d.len());
    for (i, v) in d.iter().enumerate() {
        m[i][i] = v.clone();
    }
    m
}

pub fn matmul<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    let mut out = zeros(n, m);
    for i in 0..n {
        for j in 0..m {
            let mut acc = S::zero();
            for l in 0..k {
                acc += a[i][l].clone() * &b[l][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn add<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    a.iter().zip(b).map(|(r, s)| r.iter().zip(s).map(|(x, y)| x.clone() + y).collect()).collect()
}

pub fn scale<S: Scalar>(a: &Mat<S>, c: &S) -> Mat<S> {
    a.iter().map(|r| r.iter().map(|x| x.clone() * c).collect()).collect()
}

pub fn transpose<S: Scalar>(a: &Mat<S>) -> Mat<S> {
    (0..a[0].len()).map(|j| a.iter().map(|r| r[j].clone()).collect()).collect()
}

pub fn trace<S: Scalar>(a: &Mat<S>) -> S {
    let mut t = S::zero();
    for (i, row) in a.iter().enumerate() {
        t += &row[i];
    }
    t
}

/// Row vector times matrix.
pub fn vecmat<S: Scalar>(v: &[S], a: &Mat<S>) -> Vec<S> {
    (0..a[0].len())
        .map(|j| {
            let mut acc = S::zero();
            for (i, vi) in v.iter().enumerate() {
                acc += vi.clone() * &a[i][j];
            }
            acc
        })
        .collect()
}

pub fn max_abs<S: Scalar>(a: &Mat<S>) -> f64 {
    a.iter().flatten().map(S::abs).fold(0.0, f64::max)
}

/// Kronecker product.
pub fn kron<S: Scalar>(a: &Mat<S>, b: &Mat<S>) -> Mat<S> {
    let (n, m) = (a.len(), b.len());
    let mut out = zeros(n * m, n * m);
    for i in 0..n {
        for j in 0..n {
            for k in 0..m {
                for l in 0..m {
                    out[i * m + k][j * m + l] = a[i][j].clone() * &b[k][l];
                }
            }
        }
    }
    out
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting. Returns
/// `None` when a pivot falls below `tol` times the largest entry.
pub fn solve<S: Scalar>(a: &Mat<S>, b: &[S], tol: f64) -> Option<Vec<S>> {
    let n = a.len();
    let scale = max_abs(a).max(f64::MIN_POSITIVE);
    let mut m: Mat<S> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain(std::iter::once(x.clone())).collect()).collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() <= tol * scale {
            return None;
        }
        m.swap(col, piv);
        for row in col + 1..n {
            let factor = m[row][col].clone() / &m[col][col];
            for k in col..=n {
                let t = factor.clone() * &m[col][k];
                m[row][k] -= t;
            }
        }
    }
    let mut x = vec![S::zero(); n];
    for row in (0..n).rev() {
        let mut acc = m[row][n].clone();
        for k in row + 1..n {
            acc -= m[row][k].clone() * &x[k];
        }
        x[row] = acc / &m[row][row];
    }
    Some(x)
}

pub fn inverse<S: Scalar>(a: &Mat<S>, tol: f64) -> Option<Mat<S>> {
    let n = a.len();
    let cols: Option<Vec<Vec<S>>> = (0..n)
        .map(|j| {
            let e: Vec<S> = (0..n).map(|i| if i == j { S::one() } else { S::zero() }).collect();
            solve(a, &e, tol)
        })
        .collect();
    cols.map(|c| transpose(&c))
}

/// A nonzero `v` with `v a = 0` (left null vector), normalized so that its
/// largest-modulus entry equals 1. Uses full pivoting and treats pivots below
/// `tol` times the largest entry as zero.
pub fn left_null_vector<S: Scalar>(a: &Mat<S>, tol: f64) -> Option<Vec<S>> {
    // v a = 0  <=>  a^T v^T = 0
    let mut m = transpose(a);
    let n = m.len();
    let scale = max_abs(&m).max(f64::MIN_POSITIVE);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut rank = 0;
    for step in 0..n {
        let mut best = (step, step, -1.0);
        for (i, row) in m.iter().enumerate().skip(step) {
            for (j, v) in row.iter().enumerate().skip(step) {
                let x = v.abs();
                if x > best.2 {
                    best = (i, j, x);
                }
            }
        }
        if best.2 <= tol * scale {
            break;
        }
        m.swap(step, best.0);
        for row in m.iter_mut() {
            row.swap(step, best.1);
        }
        perm.swap(step, best.1);
        for row in 0..n {
            if row != step {
                let factor = m[row][step].clone() / &m[step][step];
                for k in step..n {
                    let t = factor.clone() * &m[step][k];
                    m[row][k] -= t;
                }
            }
        }
        rank += 1;
    }
    if rank == n {
        return None;
    }
    // Free variable: the first non-pivot column set to 1.
    let mut y = vec![S::zero(); n];
    y[rank] = S::one();
    for row in 0..rank {
        y[row] = -(m[row][rank].clone() / &m[row][row]);
    }
    let mut v = vec![S::zero(); n];
    for (k, &p) in perm.iter().enumerate() {
        v[p] = y[k].clone();
    }
    let big = v.iter().max_by(|x, y| x.abs().total_cmp(&y.abs()))?.clone();
    Some(v.into_iter().map(|x| x / &big).collect())
}

/// Characteristic polynomial `det(t I - a)` as ascending coefficients
/// (Faddeev-LeVerrier).
pub fn char_poly<S: Scalar>(a: &Mat<S>) -> Vec<S> {
    let n = a.len();
    let mut coeffs = vec![S::zero(); n + 1];
    coeffs[n] = S::one();
    let mut m = zeros::<S>(n, n);
    for k in 1..=n {
        // M_k = A M_{k-1} + c_{n-k+1} I
        let mut next = matmul(a, &m);
        for (i, row) in next.iter_mut().enumerate() {
            row[i] += &coeffs[n - k + 1];
        }
        m = next;
        let am = matmul(a, &m);
        coeffs[n - k] = -(trace(&am) / S::from_i64(k as i64));
    }
    coeffs
}

/// Matrix exponential by scaling and squaring of a Taylor series.
pub fn expm<S: Scalar>(a: &Mat<S>) -> Mat<S> {
    let n = a.len();
    let norm = max_abs(a) * n as f64;
    let squarings = if norm > 0.5 { (norm / 0.5).log2().ceil() as u32 } else { 0 };
    let scaled = scale(a, &(S::one() / S::from_i64(1i64 << squarings)));
    let mut term = identity::<S>(n);
    let mut sum = identity::<S>(n);
    for k in 1..400 {
        term = scale(&matmul(&term, &scaled), &(S::one() / S::from_i64(k)));
        sum = add(&sum, &term);
        if max_abs(&term) < 1e-300 {
            break;
        }
    }
    for _ in 0..squarings {
        sum = matmul(&sum, &sum);
    }
    sum
}

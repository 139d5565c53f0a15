//! Small numerical kernels shared by the solver modules: dense complex
//! linear solves, Gauss-Legendre panels, and tridiagonal eigenpairs.

use num_complex::Complex64;

use crate::{Error, Result};

/// Solve `A x = b` in place for a small dense complex system by Gaussian
/// elimination with partial pivoting. `a` is row-major `n x n`; on return
/// `b` holds the solution. Fails on a pivot below absolute 1e-300.
pub fn solve_complex_dense(a: &mut [Complex64], b: &mut [Complex64], n: usize) -> Result<()> {
    debug_assert_eq!(a.len(), n * n);
    debug_assert_eq!(b.len(), n);
    for col in 0..n {
        let mut piv = col;
        let mut best = a[col * n + col].norm_sqr();
        for row in col + 1..n {
            let v = a[row * n + col].norm_sqr();
            if v > best {
                best = v;
                piv = row;
            }
        }
        if best < f64::MIN_POSITIVE {
            return Err(Error::SingularSystem { i: col, j: col });
        }
        if piv != col {
            for k in col..n {
                a.swap(piv * n + k, col * n + k);
            }
            b.swap(piv, col);
        }
        let inv = Complex64::new(1.0, 0.0) / a[col * n + col];
        for row in col + 1..n {
            let f = a[row * n + col] * inv;
            if f.norm_sqr() == 0.0 {
                continue;
            }
            for k in col + 1..n {
                let t = a[col * n + k];
                a[row * n + k] -= f * t;
            }
            a[row * n + col] = Complex64::new(0.0, 0.0);
            let t = b[col];
            b[row] -= f * t;
        }
    }
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in row + 1..n {
            acc -= a[row * n + k] * b[k];
        }
        b[row] = acc / a[row * n + row];
    }
    Ok(())
}

/// Nodes and weights of the `n`-point Gauss-Legendre rule on [-1, 1],
/// computed by Newton iteration on the Legendre recurrence.
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut x = vec![0.0; n];
    let mut w = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        let mut z = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0;
            let mut p1 = 0.0;
            for j in 0..n {
                let p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j as f64 + 1.0) * z * p1 - j as f64 * p2) / (j as f64 + 1.0);
            }
            pp = n as f64 * (z * p0 - p1) / (z * z - 1.0);
            let dz = p0 / pp;
            z -= dz;
            if dz.abs() < 1e-15 {
                break;
            }
        }
        x[i] = -z;
        x[n - 1 - i] = z;
        let wi = 2.0 / ((1.0 - z * z) * pp * pp);
        w[i] = wi;
        w[n - 1 - i] = wi;
    }
    (x, w)
}

/// Ground eigenpair of the real symmetric tridiagonal matrix with diagonal
/// `diag` and off-diagonal `off` (`off.len() == diag.len() - 1`), by Sturm
/// bisection for the lowest eigenvalue and shifted inverse iteration for
/// the eigenvector. The returned vector has unit Euclidean norm.
pub fn tridiag_ground_state(diag: &[f64], off: &[f64]) -> (f64, Vec<f64>) {
    let n = diag.len();
    assert_eq!(off.len(), n - 1);

    // Gershgorin bounds.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..n {
        let r = (if i > 0 { off[i - 1].abs() } else { 0.0 })
            + (if i + 1 < n { off[i].abs() } else { 0.0 });
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }

    // Count of eigenvalues strictly below x via the LDL^T inertia.
    let count_below = |x: f64| -> usize {
        let mut cnt = 0usize;
        let mut d = diag[0] - x;
        if d < 0.0 {
            cnt += 1;
        }
        for i in 1..n {
            if d == 0.0 {
                d = 1e-300;
            }
            d = diag[i] - x - off[i - 1] * off[i - 1] / d;
            if d < 0.0 {
                cnt += 1;
            }
        }
        cnt
    };

    let scale = hi - lo;
    let (mut a, mut b) = (lo, hi);
    while b - a > 1e-14 * scale.max(1.0) {
        let mid = 0.5 * (a + b);
        if count_below(mid) >= 1 {
            b = mid;
        } else {
            a = mid;
        }
    }
    let lambda = 0.5 * (a + b);

    // Inverse iteration with the Thomas algorithm on (T - sigma I).
    let sigma = lambda - 1e-10 * scale.max(1.0);
    let mut v = vec![1.0 / (n as f64).sqrt(); n];
    let mut cw = vec![0.0; n];
    let mut dw = vec![0.0; n];
    for _ in 0..4 {
        // Solve (T - sigma) u = v.
        let mut beta = diag[0] - sigma;
        if beta.abs() < 1e-300 {
            beta = 1e-300;
        }
        cw[0] = off.first().copied().unwrap_or(0.0) / beta;
        dw[0] = v[0] / beta;
        for i in 1..n {
            let mut den = diag[i] - sigma - off[i - 1] * cw[i - 1];
            if den.abs() < 1e-300 {
                den = 1e-300;
            }
            if i + 1 < n {
                cw[i] = off[i] / den;
            }
            dw[i] = (v[i] - off[i - 1] * dw[i - 1]) / den;
        }
        v[n - 1] = dw[n - 1];
        for i in (0..n - 1).rev() {
            v[i] = dw[i] - cw[i] * v[i + 1];
        }
        let nrm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        for x in v.iter_mut() {
            *x /= nrm;
        }
    }
    // Fix overall sign so the component of largest magnitude is positive.
    let mut imax = 0;
    for i in 0..n {
        if v[i].abs() > v[imax].abs() {
            imax = i;
        }
    }
    if v[imax] < 0.0 {
        for x in v.iter_mut() {
            *x = -*x;
        }
    }
    (lambda, v)
}

/// Cumulative trapezoid of complex samples `f` over coordinates `x`,
/// starting at zero.
pub fn cumtrapz(x: &[f64], f: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(f.len());
    let mut acc = Complex64::new(0.0, 0.0);
    out.push(acc);
    for i in 1..f.len() {
        acc += 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
        out.push(acc);
    }
    out
}

/// Uniformly spaced grid with `n` points from `a` to `b` inclusive.
pub fn linspace(a: f64, b: f64, n: usize) -> Vec<f64> {
    assert!(n >= 2);
    let h = (b - a) / (n - 1) as f64;
    (0..n).map(|i| a + h * i as f64).collect()
}

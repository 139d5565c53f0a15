//! Special functions used by the analytics: the Faddeeva function w(z),
//! the error function for real and complex arguments, erfi, and the
//! principal branch of the Lambert W function.

use num_complex::Complex64;
use once_cell::sync::Lazy;
use std::f64::consts::{FRAC_1_SQRT_2, PI};

const I: Complex64 = Complex64::new(0.0, 1.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// Order of the Weideman rational approximation.
const WEIDEMAN_N: usize = 40;

/// Weideman expansion coefficients, highest degree first, plus the scale L.
static WEIDEMAN: Lazy<(Vec<f64>, f64)> = Lazy::new(|| {
    let n = WEIDEMAN_N;
    let m = 2 * n;
    let m2 = 2 * m;
    let l = (n as f64 * FRAC_1_SQRT_2).sqrt();
    // Sample f(t) = (L^2 + t^2) exp(-t^2) at t = L tan(theta/2),
    // theta_k = k pi / m for k = -m+1 .. m-1, with a leading zero slot.
    let mut f = vec![0.0; m2];
    for (idx, k) in (-(m as i64) + 1..m as i64).enumerate() {
        let theta = k as f64 * PI / m as f64;
        let t = l * (theta / 2.0).tan();
        f[idx + 1] = (l * l + t * t) * (-t * t).exp();
    }
    // fftshift then a_j = Re(DFT(f))_j / m2
    let mut fs = vec![0.0; m2];
    for (i, fi) in fs.iter_mut().enumerate() {
        *fi = f[(i + m) % m2];
    }
    let mut a = vec![0.0; n];
    for (j, aj) in a.iter_mut().enumerate() {
        let jj = j + 1; // MATLAB a(2:N+1)
        let mut acc = 0.0;
        for (p, fp) in fs.iter().enumerate() {
            acc += fp * (2.0 * PI * jj as f64 * p as f64 / m2 as f64).cos();
        }
        *aj = acc / m2 as f64;
    }
    a.reverse(); // highest degree first for Horner evaluation
    (a, l)
});

fn faddeeva_upper(z: Complex64) -> Complex64 {
    let (a, l) = (&WEIDEMAN.0, WEIDEMAN.1);
    let lmiz = l - I * z;
    let zz = (l + I * z) / lmiz;
    let mut p = Complex64::new(0.0, 0.0);
    for &c in a.iter() {
        p = p * zz + c;
    }
    2.0 * p / (lmiz * lmiz) + (1.0 / PI.sqrt()) / lmiz
}

/// Faddeeva function w(z) = exp(-z^2) erfc(-iz).
///
/// Accurate to ~1e-13 relative in the upper half-plane; the lower half uses
/// the reflection w(z) = 2 exp(-z^2) - w(-z), which overflows for large
/// negative imaginary parts (|Im z| beyond ~26).
pub fn faddeeva(z: Complex64) -> Complex64 {
    if z.im >= 0.0 {
        faddeeva_upper(z)
    } else {
        2.0 * (-z * z).exp() - faddeeva_upper(-z)
    }
}

/// Scaled complementary error function erfcx(x) = exp(x^2) erfc(x), real x.
pub fn erfcx(x: f64) -> f64 {
    if x >= 0.0 {
        faddeeva_upper(Complex64::new(0.0, x)).re
    } else {
        2.0 * (x * x).exp() - erfcx(-x)
    }
}

/// Error function of a real argument.
pub fn erf(x: f64) -> f64 {
    if x < 0.0 {
        return -erf(-x);
    }
    if x < 1e-4 {
        return 2.0 / PI.sqrt() * x * (1.0 - x * x / 3.0);
    }
    if x > 9.0 {
        return 1.0;
    }
    1.0 - (-x * x).exp() * erfcx(x)
}

fn erf_series(z: Complex64) -> Complex64 {
    // Maclaurin series; adequate for |z| <= 2.5 in f64.
    let z2 = z * z;
    let mut term = z;
    let mut sum = z;
    for n in 1..64 {
        term = term * (-z2) / n as f64;
        let add = term / (2 * n + 1) as f64;
        sum += add;
        if add.norm_sqr() < 1e-34 * sum.norm_sqr() {
            break;
        }
    }
    2.0 / PI.sqrt() * sum
}

/// Error function of a complex argument.
pub fn erf_complex(z: Complex64) -> Complex64 {
    if z.re < 0.0 {
        return -erf_complex(-z);
    }
    if z.norm_sqr() <= 6.25 {
        erf_series(z)
    } else {
        // erf(z) = 1 - exp(-z^2) w(iz); iz is in the upper half-plane
        // for Re z >= 0.
        ONE - (-z * z).exp() * faddeeva(I * z)
    }
}

/// Imaginary error function erfi(z) = -i erf(iz).
pub fn erfi(z: Complex64) -> Complex64 {
    -I * erf_complex(I * z)
}

/// Principal branch W0 of the Lambert W function, for y >= -1/e.
pub fn lambert_w0(y: f64) -> f64 {
    let e = std::f64::consts::E;
    assert!(y >= -1.0 / e, "lambert_w0 requires y >= -1/e, got {y}");
    if y == 0.0 {
        return 0.0;
    }
    let mut w = if y > e {
        let l = y.ln();
        l - l.ln()
    } else if y > 0.0 {
        y / (1.0 + y)
    } else {
        // near the branch point
        let p = (2.0 * (e * y + 1.0)).sqrt();
        -1.0 + p - p * p / 3.0
    };
    for _ in 0..40 {
        let ew = w.exp();
        let f = w * ew - y;
        let denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        let dw = f / denom;
        w -= dw;
        if dw.abs() < 1e-15 * (1.0 + w.abs()) {
            break;
        }
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() <= tol * (1.0 + b.norm())
    }

    #[test]
    fn faddeeva_reference_values() {
        // w(0) = 1
        assert!(close(faddeeva(Complex64::new(0.0, 0.0)), ONE, 1e-13));
        // w(i) = e erfc(1)
        let w_i = faddeeva(Complex64::new(0.0, 1.0));
        let expect = std::f64::consts::E * (1.0 - erf(1.0));
        assert!((w_i.re - expect).abs() < 1e-13, "{w_i}");
        assert!(w_i.im.abs() < 1e-13);
        // real axis: Re w(x) = exp(-x^2)
        for &x in &[0.3, 1.0, 2.5, 5.0] {
            let w = faddeeva(Complex64::new(x, 0.0));
            assert!((w.re - (-x * x).exp()).abs() < 1e-12);
        }
    }

    #[test]
    fn faddeeva_lower_half_reflection() {
        let z = Complex64::new(1.3, -0.7);
        let w = faddeeva(z);
        let expect = 2.0 * (-z * z).exp() - faddeeva(-z);
        assert!(close(w, expect, 1e-13));
    }

    #[test]
    fn erf_real_reference_values() {
        // Abramowitz & Stegun 7.1 table values
        assert!((erf(0.5) - 0.5204998778).abs() < 1e-9);
        assert!((erf(1.0) - 0.8427007929).abs() < 1e-9);
        assert!((erf(2.0) - 0.9953222650).abs() < 1e-9);
        assert!((erf(-1.0) + 0.8427007929).abs() < 1e-9);
        assert!((erf(12.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn erf_complex_matches_series_across_switchover() {
        // continuity across the series/Faddeeva switch at |z| = 2.5
        for arg in [0.0, 0.4, PI / 4.0, 1.2] {
            for r in [2.4, 2.6] {
                let z = Complex64::from_polar(r, arg);
                let a = erf_series(z);
                let b = ONE - (-z * z).exp() * faddeeva(I * z);
                assert!(close(a, b, 1e-9), "z={z} a={a} b={b}");
            }
        }
    }

    #[test]
    fn erfi_reference_value() {
        // erfi(1) = 1.6504257587975428... (2/sqrt(pi) * int_0^1 e^{t^2} dt)
        let v = erfi(Complex64::new(1.0, 0.0));
        assert!((v.re - 1.6504257587975429).abs() < 1e-12, "{v}");
        assert!(v.im.abs() < 1e-13);
    }

    #[test]
    fn erfi_odd_and_conjugate_symmetric() {
        let z = Complex64::new(0.8, 0.9);
        assert!(close(erfi(-z), -erfi(z), 1e-13));
        let a = erfi(z.conj());
        let b = erfi(z).conj();
        assert!(close(a, b, 1e-12));
    }

    #[test]
    fn lambert_w0_reference_values() {
        assert!((lambert_w0(0.0)).abs() < 1e-15);
        // W(1) = 0.5671432904097838...
        assert!((lambert_w0(1.0) - 0.5671432904097838).abs() < 1e-12);
        // W(e) = 1
        assert!((lambert_w0(std::f64::consts::E) - 1.0).abs() < 1e-12);
        // defining relation at assorted points
        for &y in &[-0.3, -0.05, 0.2, 2.0, 10.0, 1e6] {
            let w = lambert_w0(y);
            assert!((w * w.exp() - y).abs() < 1e-10 * (1.0 + y.abs()));
        }
    }

    #[test]
    fn lambert_w0_branch_point() {
        let e = std::f64::consts::E;
        let w = lambert_w0(-1.0 / e + 1e-12);
        assert!((w + 1.0).abs() < 1e-4, "{w}");
    }
}

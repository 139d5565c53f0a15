//! Complex scalar fields on rectangular grids, with axis metadata, plus the
//! observable-curve container shared by the conditional and three-photon
//! modules.

use num_complex::Complex64;

/// A complex scalar field sampled on a rectangular grid. `x` indexes the
/// first (row) axis, `y` the second (column) axis; storage is row-major.
#[derive(Debug, Clone)]
pub struct ComplexField2D {
    pub x: Vec<f64>,
    pub y: Vec<f64>,
    pub data: Vec<Complex64>,
}

impl ComplexField2D {
    pub fn zeros(x: Vec<f64>, y: Vec<f64>) -> Self {
        let data = vec![Complex64::new(0.0, 0.0); x.len() * y.len()];
        Self { x, y, data }
    }

    pub fn from_fn(x: Vec<f64>, y: Vec<f64>, mut f: impl FnMut(f64, f64) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(x.len() * y.len());
        for &xi in &x {
            for &yj in &y {
                data.push(f(xi, yj));
            }
        }
        Self { x, y, data }
    }

    #[inline]
    pub fn nx(&self) -> usize {
        self.x.len()
    }

    #[inline]
    pub fn ny(&self) -> usize {
        self.y.len()
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.ny() + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: Complex64) {
        let ny = self.ny();
        self.data[i * ny + j] = v;
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    pub fn min_abs(&self) -> f64 {
        self.data.iter().map(|c| c.norm()).fold(f64::INFINITY, f64::min)
    }

    /// Row `i` as a slice (fixed x, varying y).
    pub fn row(&self, i: usize) -> &[Complex64] {
        let ny = self.ny();
        &self.data[i * ny..(i + 1) * ny]
    }

    /// Column `j` copied out (fixed y, varying x).
    pub fn col(&self, j: usize) -> Vec<Complex64> {
        (0..self.nx()).map(|i| self.get(i, j)).collect()
    }

    /// Restrict to the index window `[i0, i1) x [j0, j1)`.
    pub fn window(&self, i0: usize, i1: usize, j0: usize, j1: usize) -> ComplexField2D {
        let x = self.x[i0..i1].to_vec();
        let y = self.y[j0..j1].to_vec();
        let mut data = Vec::with_capacity(x.len() * y.len());
        for i in i0..i1 {
            data.extend_from_slice(&self.data[i * self.ny() + j0..i * self.ny() + j1]);
        }
        ComplexField2D { x, y, data }
    }

    /// Wrapped phase of every sample, in (-pi, pi].
    pub fn phase(&self) -> Vec<f64> {
        self.data.iter().map(|c| crate::topology::wrap_phase(c.arg())).collect()
    }

    /// |psi|^2 of every sample.
    pub fn abs2(&self) -> Vec<f64> {
        self.data.iter().map(|c| c.norm_sqr()).collect()
    }
}

/// Conditional two-photon observables on a time grid: g2(tau) and
/// phi2(tau), the latter both wrapped to (-pi, pi] and unwrapped from the
/// large-tau end where the phase decays to zero.
#[derive(Debug, Clone)]
pub struct ObservableCurve {
    pub tau: Vec<f64>,
    pub g2: Vec<f64>,
    pub phi2_wrapped: Vec<f64>,
    pub phi2_unwrapped: Vec<f64>,
}

impl ObservableCurve {
    /// Linear interpolation of g2 at |t|; returns 1 beyond the curve end
    /// (uncorrelated photons).
    pub fn g2_at(&self, t: f64) -> f64 {
        interp_abs(&self.tau, &self.g2, t, 1.0)
    }

    /// Linear interpolation of the unwrapped phase at |t|; 0 beyond the end.
    pub fn phi2_at(&self, t: f64) -> f64 {
        interp_abs(&self.tau, &self.phi2_unwrapped, t, 0.0)
    }
}

fn interp_abs(xs: &[f64], ys: &[f64], t: f64, beyond: f64) -> f64 {
    let t = t.abs();
    let last = *xs.last().expect("empty curve");
    if t >= last {
        return beyond;
    }
    // uniform or monotone grid: binary search
    let idx = xs.partition_point(|&x| x <= t);
    if idx == 0 {
        return ys[0];
    }
    let (x0, x1) = (xs[idx - 1], xs[idx]);
    let w = if x1 > x0 { (t - x0) / (x1 - x0) } else { 0.0 };
    ys[idx - 1] * (1.0 - w) + ys[idx] * w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn indexing_and_window() {
        let f = ComplexField2D::from_fn(
            vec![0.0, 1.0, 2.0],
            vec![10.0, 11.0],
            |x, y| Complex64::new(x, y),
        );
        assert_eq!(f.get(2, 1), Complex64::new(2.0, 11.0));
        let w = f.window(1, 3, 0, 1);
        assert_eq!(w.nx(), 2);
        assert_eq!(w.ny(), 1);
        assert_eq!(w.get(0, 0), Complex64::new(1.0, 10.0));
    }

    #[test]
    fn observable_interp_extends_to_uncorrelated() {
        let c = ObservableCurve {
            tau: vec![0.0, 1.0, 2.0],
            g2: vec![2.0, 1.5, 1.1],
            phi2_wrapped: vec![-1.0, -0.5, -0.1],
            phi2_unwrapped: vec![-1.0, -0.5, -0.1],
        };
        assert!((c.g2_at(0.5) - 1.75).abs() < 1e-14);
        assert!((c.g2_at(-0.5) - 1.75).abs() < 1e-14); // even in t
        assert_eq!(c.g2_at(5.0), 1.0);
        assert_eq!(c.phi2_at(5.0), 0.0);
    }
}

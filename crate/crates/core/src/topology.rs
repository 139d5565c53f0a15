//! Phase-singularity detection and characterization for complex 2-D fields:
//! plaquette winding numbers, vortex sets with sub-grid core refinement,
//! quality-guided 2-D phase unwrapping, and the smoothed phase-gradient
//! magnitude map.

use num_complex::Complex64;
use std::collections::BinaryHeap;
use std::f64::consts::{PI, TAU};

use crate::field::ComplexField2D;

/// Corner magnitude below which a plaquette winding is indeterminate.
pub const INDETERMINATE_ABS: f64 = 1e-14;

/// Wrap a phase difference to (-pi, pi], with ties at -pi resolved to +pi.
#[inline]
pub fn wrap_phase(d: f64) -> f64 {
    let mut w = d % TAU;
    if w > PI {
        w -= TAU;
    } else if w <= -PI {
        w += TAU;
    }
    w
}

/// Per-plaquette winding numbers of a complex field.
#[derive(Debug, Clone)]
pub struct WindingMap {
    /// (nx-1) x (ny-1) winding charges, row-major.
    pub charges: Vec<i32>,
    /// Plaquettes with a corner magnitude below [`INDETERMINATE_ABS`];
    /// their charge entry is 0 and should not be trusted.
    pub indeterminate: Vec<(usize, usize)>,
    pub nx: usize,
    pub ny: usize,
}

impl WindingMap {
    #[inline]
    pub fn charge(&self, i: usize, j: usize) -> i32 {
        self.charges[i * (self.ny - 1) + j]
    }

    pub fn total_charge(&self) -> i32 {
        self.charges.iter().sum()
    }

    pub fn nonzero(&self) -> Vec<(usize, usize, i32)> {
        let mut out = Vec::new();
        for i in 0..self.nx - 1 {
            for j in 0..self.ny - 1 {
                let q = self.charge(i, j);
                if q != 0 {
                    out.push((i, j, q));
                }
            }
        }
        out
    }
}

/// Winding number of every grid plaquette: the wrapped phase circulation
/// around the four corners divided by 2 pi. Values land in {-1, 0, +1} for
/// simple zeros.
pub fn winding_map(field: &ComplexField2D) -> WindingMap {
    let (nx, ny) = (field.nx(), field.ny());
    let mut charges = vec![0i32; (nx - 1) * (ny - 1)];
    let mut indeterminate = Vec::new();
    let ph: Vec<f64> = field.data.iter().map(|c| c.arg()).collect();
    for i in 0..nx - 1 {
        for j in 0..ny - 1 {
            let c00 = field.get(i, j);
            let c10 = field.get(i + 1, j);
            let c11 = field.get(i + 1, j + 1);
            let c01 = field.get(i, j + 1);
            if c00.norm() < INDETERMINATE_ABS
                || c10.norm() < INDETERMINATE_ABS
                || c11.norm() < INDETERMINATE_ABS
                || c01.norm() < INDETERMINATE_ABS
            {
                indeterminate.push((i, j));
                continue;
            }
            let p00 = ph[i * ny + j];
            let p10 = ph[(i + 1) * ny + j];
            let p11 = ph[(i + 1) * ny + j + 1];
            let p01 = ph[i * ny + j + 1];
            let s = wrap_phase(p10 - p00)
                + wrap_phase(p11 - p10)
                + wrap_phase(p01 - p11)
                + wrap_phase(p00 - p01);
            charges[i * (ny - 1) + j] = (s / TAU).round() as i32;
        }
    }
    WindingMap { charges, indeterminate, nx, ny }
}

/// A detected phase singularity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vortex {
    /// Plaquette indices (lower-left corner).
    pub i: usize,
    pub j: usize,
    /// Refined core position in physical coordinates.
    pub x: f64,
    pub y: f64,
    /// Winding charge.
    pub charge: i32,
    /// Interpolated |psi| at the refined core (ideally ~0).
    pub core_abs: f64,
}

/// Detected singularities of one field.
#[derive(Debug, Clone, Default)]
pub struct VortexSet {
    pub vortices: Vec<Vortex>,
}

impl VortexSet {
    pub fn len(&self) -> usize {
        self.vortices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vortices.is_empty()
    }

    pub fn total_charge(&self) -> i32 {
        self.vortices.iter().map(|v| v.charge).sum()
    }
}

/// Locate phase singularities: nonzero winding plaquettes, with the core
/// refined inside each plaquette by a bilinear zero crossing of Re and Im.
pub fn find_vortices(field: &ComplexField2D) -> VortexSet {
    let wm = winding_map(field);
    let mut vortices = Vec::new();
    for (i, j, q) in wm.nonzero() {
        let c00 = field.get(i, j);
        let c10 = field.get(i + 1, j);
        let c01 = field.get(i, j + 1);
        let c11 = field.get(i + 1, j + 1);
        // bilinear model c(u,v) = a + b u + c v + d u v on [0,1]^2
        let a = c00;
        let b = c10 - c00;
        let c = c01 - c00;
        let d = c11 - c10 - c01 + c00;
        let (mut u, mut v) = (0.5, 0.5);
        for _ in 0..30 {
            let f = a + b * u + c * v + d * (u * v);
            let fu = b + d * v;
            let fv = c + d * u;
            // 2x2 real Newton on (Re, Im)
            let j00 = fu.re;
            let j01 = fv.re;
            let j10 = fu.im;
            let j11 = fv.im;
            let det = j00 * j11 - j01 * j10;
            if det.abs() < 1e-300 {
                break;
            }
            let du = (f.re * j11 - f.im * j01) / det;
            let dv = (f.im * j00 - f.re * j10) / det;
            u -= du;
            v -= dv;
            if du.abs() + dv.abs() < 1e-12 {
                break;
            }
        }
        u = u.clamp(0.0, 1.0);
        v = v.clamp(0.0, 1.0);
        let core = a + b * u + c * v + d * (u * v);
        let x = field.x[i] + u * (field.x[i + 1] - field.x[i]);
        let y = field.y[j] + v * (field.y[j + 1] - field.y[j]);
        vortices.push(Vortex { i, j, x, y, charge: q, core_abs: core.norm() });
    }
    VortexSet { vortices }
}

/// Quality-guided 2-D phase unwrapping. Unwrapping starts from the anchor
/// sample and grows the unwrapped region in order of decreasing |psi|, so
/// the implied branch cuts fall along the lowest-|psi| ridges. The anchor
/// value is the wrapped phase there; pass an anchor in a far-field region
/// where the phase tends to zero.
pub fn unwrap_phase_2d(field: &ComplexField2D, anchor: (usize, usize)) -> Vec<f64> {
    let (nx, ny) = (field.nx(), field.ny());
    let n = nx * ny;
    let wrapped: Vec<f64> = field.data.iter().map(|c| wrap_phase(c.arg())).collect();
    let quality: Vec<f64> = field.data.iter().map(|c| c.norm()).collect();
    let mut out = vec![0.0; n];
    let mut done = vec![false; n];

    #[derive(PartialEq)]
    struct Item(f64, usize);
    impl Eq for Item {}
    impl PartialOrd for Item {
        fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
            Some(self.cmp(other))
        }
    }
    impl Ord for Item {
        fn cmp(&self, other: &Self) -> std::cmp::Ordering {
            // max-heap on quality, deterministic tie-break on index
            self.0
                .partial_cmp(&other.0)
                .unwrap_or(std::cmp::Ordering::Equal)
                .then_with(|| other.1.cmp(&self.1))
        }
    }

    let a = anchor.0 * ny + anchor.1;
    out[a] = wrapped[a];
    done[a] = true;
    let mut heap = BinaryHeap::new();
    let push_neighbors = |idx: usize, heap: &mut BinaryHeap<Item>, done: &[bool]| {
        let (i, j) = (idx / ny, idx % ny);
        let mut cand = Vec::with_capacity(4);
        if i > 0 {
            cand.push(idx - ny);
        }
        if i + 1 < nx {
            cand.push(idx + ny);
        }
        if j > 0 {
            cand.push(idx - 1);
        }
        if j + 1 < ny {
            cand.push(idx + 1);
        }
        for c in cand {
            if !done[c] {
                heap.push(Item(quality[c], c));
            }
        }
    };
    push_neighbors(a, &mut heap, &done);

    while let Some(Item(_, idx)) = heap.pop() {
        if done[idx] {
            continue;
        }
        // unwrap against the best already-done neighbor
        let (i, j) = (idx / ny, idx % ny);
        let mut best: Option<usize> = None;
        let mut best_q = -1.0;
        let consider = |c: usize, q: f64, best: &mut Option<usize>, best_q: &mut f64| {
            if done[c] && q > *best_q {
                *best = Some(c);
                *best_q = q;
            }
        };
        if i > 0 {
            consider(idx - ny, quality[idx - ny], &mut best, &mut best_q);
        }
        if i + 1 < nx {
            consider(idx + ny, quality[idx + ny], &mut best, &mut best_q);
        }
        if j > 0 {
            consider(idx - 1, quality[idx - 1], &mut best, &mut best_q);
        }
        if j + 1 < ny {
            consider(idx + 1, quality[idx + 1], &mut best, &mut best_q);
        }
        let r = best.expect("heap invariant: a done neighbor exists");
        out[idx] = out[r] + wrap_phase(wrapped[idx] - wrapped[r]);
        done[idx] = true;
        push_neighbors(idx, &mut heap, &done);
    }
    out
}

/// Magnitude of the phase gradient computed from P = exp(i phi):
/// P is smoothed by a moving nearest-neighbor average over a
/// `window x window` block before |grad P| is taken with central
/// differences. Units: rad per grid-axis unit.
pub fn grad_phase_magnitude(field: &ComplexField2D, window: usize) -> Vec<f64> {
    assert!(window % 2 == 1, "smoothing window must be odd");
    let (nx, ny) = (field.nx(), field.ny());
    let p: Vec<Complex64> = field
        .data
        .iter()
        .map(|c| {
            if c.norm() > 0.0 {
                c / c.norm()
            } else {
                Complex64::new(1.0, 0.0)
            }
        })
        .collect();
    let half = window / 2;
    let mut sm = vec![Complex64::new(0.0, 0.0); nx * ny];
    for i in 0..nx {
        for j in 0..ny {
            let mut acc = Complex64::new(0.0, 0.0);
            let mut cnt = 0.0;
            for di in i.saturating_sub(half)..=(i + half).min(nx - 1) {
                for dj in j.saturating_sub(half)..=(j + half).min(ny - 1) {
                    acc += p[di * ny + dj];
                    cnt += 1.0;
                }
            }
            sm[i * ny + j] = acc / cnt;
        }
    }
    let mut out = vec![0.0; nx * ny];
    for i in 0..nx {
        for j in 0..ny {
            let ip = (i + 1).min(nx - 1);
            let im = i.saturating_sub(1);
            let jp = (j + 1).min(ny - 1);
            let jm = j.saturating_sub(1);
            let dx = field.x[ip] - field.x[im];
            let dy = field.y[jp] - field.y[jm];
            let gx = if dx > 0.0 {
                (sm[ip * ny + j] - sm[im * ny + j]) / dx
            } else {
                Complex64::new(0.0, 0.0)
            };
            let gy = if dy > 0.0 {
                (sm[i * ny + jp] - sm[i * ny + jm]) / dy
            } else {
                Complex64::new(0.0, 0.0)
            };
            out[i * ny + j] = (gx.norm_sqr() + gy.norm_sqr()).sqrt();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::linspace;

    fn canonical(charge: i32, x0: f64, y0: f64) -> ComplexField2D {
        ComplexField2D::from_fn(linspace(-1.0, 1.0, 41), linspace(-1.0, 1.0, 41), |x, y| {
            let v = Complex64::new(x - x0, y - y0);
            if charge > 0 {
                v
            } else {
                v.conj()
            }
        })
    }

    #[test]
    fn canonical_vortex_has_unit_winding() {
        let f = canonical(1, 0.013, -0.017);
        let wm = winding_map(&f);
        let nz = wm.nonzero();
        assert_eq!(nz.len(), 1);
        assert_eq!(nz[0].2, 1);
        let vs = find_vortices(&f);
        assert_eq!(vs.len(), 1);
        let v = vs.vortices[0];
        assert!((v.x - 0.013).abs() < 1e-9, "x={}", v.x);
        assert!((v.y + 0.017).abs() < 1e-9);
        assert!(v.core_abs < 1e-9);
    }

    #[test]
    fn conjugate_field_flips_charge() {
        let f = canonical(-1, 0.0, 0.0);
        let vs = find_vortices(&f);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs.vortices[0].charge, -1);
    }

    #[test]
    fn constant_field_has_no_winding() {
        let f = ComplexField2D::from_fn(linspace(0.0, 1.0, 20), linspace(0.0, 1.0, 20), |_, _| {
            Complex64::new(0.3, -0.2)
        });
        assert_eq!(winding_map(&f).nonzero().len(), 0);
    }

    #[test]
    fn double_vortex_pair_charges() {
        // f = ((x+a) + iy) ((x-a) - iy): +1 at (-a, 0), -1 at (+a, 0)
        let a = 0.4;
        let f = ComplexField2D::from_fn(linspace(-1.0, 1.0, 81), linspace(-1.0, 1.0, 81), |x, y| {
            Complex64::new(x + a, y) * Complex64::new(x - a, -y)
        });
        let vs = find_vortices(&f);
        assert_eq!(vs.len(), 2);
        assert_eq!(vs.total_charge(), 0);
        let mut got: Vec<(f64, i32)> = vs.vortices.iter().map(|v| (v.x, v.charge)).collect();
        got.sort_by(|l, r| l.0.partial_cmp(&r.0).unwrap());
        assert!((got[0].0 + a).abs() < 1e-6);
        assert_eq!(got[0].1, 1);
        assert!((got[1].0 - a).abs() < 1e-6);
        assert_eq!(got[1].1, -1);
    }

    #[test]
    fn indeterminate_plaquettes_are_flagged() {
        let mut f = ComplexField2D::from_fn(
            linspace(0.0, 1.0, 10),
            linspace(0.0, 1.0, 10),
            |_, _| Complex64::new(1.0, 0.0),
        );
        f.set(4, 4, Complex64::new(0.0, 0.0));
        let wm = winding_map(&f);
        assert_eq!(wm.indeterminate.len(), 4); // four plaquettes share the corner
        assert_eq!(wm.total_charge(), 0);
    }

    #[test]
    fn winding_gauge_invariance() {
        // multiplying by a smooth nonvanishing function leaves charges alone
        let f = canonical(1, 0.1, 0.2);
        let g = ComplexField2D {
            x: f.x.clone(),
            y: f.y.clone(),
            data: f
                .x
                .iter()
                .flat_map(|&x| {
                    f.y.iter()
                        .map(move |&y| Complex64::new(0.0, 0.7 * x - 0.4 * y + 0.3 * x * y).exp()
                            * (1.5 + 0.4 * (2.0 * x).sin()))
                })
                .collect::<Vec<_>>()
                .iter()
                .zip(&f.data)
                .map(|(m, v)| m * v)
                .collect(),
        };
        let a = winding_map(&f);
        let b = winding_map(&g);
        assert_eq!(a.charges, b.charges);
    }

    #[test]
    fn stokes_consistency_on_smooth_plus_vortex_field() {
        // total winding equals the boundary circulation / 2 pi,
        // on a field with two same-sign vortices plus a smooth factor
        let f = ComplexField2D::from_fn(linspace(-1.0, 1.0, 61), linspace(-1.0, 1.0, 61), |x, y| {
            let v1 = Complex64::new(x - 0.3, y + 0.1);
            let v2 = Complex64::new(x + 0.4, y - 0.2);
            let smooth = Complex64::new(0.0, 0.5 * x + 0.9 * y).exp() * 2.0;
            v1 * v2 * smooth
        });
        let wm = winding_map(&f);
        // boundary circulation along the positively oriented rectangle
        let (nx, ny) = (f.nx(), f.ny());
        let mut path = Vec::new();
        for i in 0..nx {
            path.push(f.get(i, 0));
        }
        for j in 1..ny {
            path.push(f.get(nx - 1, j));
        }
        for i in (0..nx - 1).rev() {
            path.push(f.get(i, ny - 1));
        }
        for j in (0..ny - 1).rev() {
            path.push(f.get(0, j));
        }
        let mut circ = 0.0;
        for k in 1..path.len() {
            circ += wrap_phase(path[k].arg() - path[k - 1].arg());
        }
        let total = wm.total_charge();
        assert_eq!(total, (circ / TAU).round() as i32);
        assert_eq!(total, 2);
    }

    #[test]
    fn unwrap_inverts_wrapping_for_smooth_fields() {
        let x = linspace(-1.0, 1.0, 50);
        let y = linspace(-1.0, 1.0, 50);
        let truth = |x: f64, y: f64| 3.0 * x + 2.0 * y * y - 4.0;
        let f = ComplexField2D::from_fn(x.clone(), y.clone(), |xi, yj| {
            Complex64::from_polar(1.0, truth(xi, yj))
        });
        let un = unwrap_phase_2d(&f, (0, 0));
        let offset = un[0] - truth(x[0], y[0]);
        for (i, &xi) in x.iter().enumerate() {
            for (j, &yj) in y.iter().enumerate() {
                let got = un[i * y.len() + j] - offset;
                assert!(
                    (got - truth(xi, yj)).abs() < 1e-9,
                    "at ({xi},{yj}): {got} vs {}",
                    truth(xi, yj)
                );
            }
        }
    }

    #[test]
    fn grad_phase_magnitude_peaks_on_vortex_core() {
        let f = canonical(1, 0.0, 0.0);
        let g = grad_phase_magnitude(&f, 3);
        let ny = f.ny();
        // core is at the grid center
        let center = g[(f.nx() / 2) * ny + ny / 2 - 1];
        let edge = g[ny + 1];
        assert!(center > 5.0 * edge, "center {center} edge {edge}");
    }

    #[test]
    fn vortex_positions_stable_under_refinement() {
        let build = |n: usize| {
            ComplexField2D::from_fn(linspace(-1.0, 1.0, n), linspace(-1.0, 1.0, n), |x, y| {
                Complex64::new(x - 0.213, y + 0.117)
                    * Complex64::new(0.0, 0.4 * x + 0.7 * y).exp()
            })
        };
        let coarse = find_vortices(&build(41));
        let fine = find_vortices(&build(81));
        assert_eq!(coarse.len(), 1);
        assert_eq!(fine.len(), 1);
        let h = 2.0 / 40.0;
        let d = ((coarse.vortices[0].x - fine.vortices[0].x).powi(2)
            + (coarse.vortices[0].y - fine.vortices[0].y).powi(2))
        .sqrt();
        assert!(d < h, "moved {d} vs h {h}");
    }
}

//! Deterministic bounded maximization: uniform grid, then golden-section
//! search inside the cells adjacent to the best grid point.

const INV_PHI: f64 = 0.618_033_988_749_894_9;

/// Golden-section search stops once the bracket is narrower than this.
pub const DEFAULT_X_TOL: f64 = 1e-11;

const MAX_GOLDEN_STEPS: usize = 200;

/// A maximizer and its value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Argmax {
    pub x: f64,
    pub value: f64,
}

/// Golden-section maximization of `f` on `[lo, hi]`, assuming unimodality.
/// Both endpoints are probed as well, so optima on the boundary are exact.
pub fn golden_section_max(f: impl Fn(f64) -> f64, lo: f64, hi: f64, x_tol: f64) -> Argmax {
    let mut best = Argmax {
        x: lo,
        value: f(lo),
    };
    let consider = |x: f64, value: f64, best: &mut Argmax| {
        if value > best.value {
            *best = Argmax { x, value };
        }
    };
    let f_hi = f(hi);
    consider(hi, f_hi, &mut best);

    let (mut a, mut b) = (lo, hi);
    let mut x1 = b - INV_PHI * (b - a);
    let mut x2 = a + INV_PHI * (b - a);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..MAX_GOLDEN_STEPS {
        if b - a <= x_tol {
            break;
        }
        if f1 >= f2 {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - INV_PHI * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + INV_PHI * (b - a);
            f2 = f(x2);
        }
    }
    consider(x1, f1, &mut best);
    consider(x2, f2, &mut best);
    best
}

/// `points` evenly spaced samples of `[0, 1]`, endpoints included.
pub fn unit_grid(points: usize) -> impl Iterator<Item = f64> + Clone {
    let last = points.max(2) - 1;
    (0..=last).map(move |i| i as f64 / last as f64)
}

/// Maximizes `f` over `[0, 1]`: grid of `points` samples, then golden-section
/// refinement across the two cells around the best sample. Ties keep the
/// smallest argument.
pub fn maximize_unit(f: impl Fn(f64) -> f64, points: usize, x_tol: f64) -> Argmax {
    let points = points.max(2);
    let step = 1.0 / (points - 1) as f64;
    let mut best = Argmax {
        x: 0.0,
        value: f64::NEG_INFINITY,
    };
    for x in unit_grid(points) {
        let value = f(x);
        if value > best.value {
            best = Argmax { x, value };
        }
    }
    let lo = (best.x - step).max(0.0);
    let hi = (best.x + step).min(1.0);
    let refined = golden_section_max(&f, lo, hi, x_tol);
    if refined.value > best.value {
        refined
    } else {
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_smooth_peak() {
        let got = golden_section_max(|x| -(x - 0.3141).powi(2), 0.0, 1.0, 1e-12);
        assert!((got.x - 0.3141).abs() < 1e-6);
    }

    #[test]
    fn finds_kink() {
        let got = maximize_unit(|x| (3.0 * x).min(2.0 - 2.0 * x), 101, 1e-12);
        assert!((got.x - 0.4).abs() < 1e-9);
        assert!((got.value - 1.2).abs() < 1e-9);
    }

    #[test]
    fn boundary_optimum_is_exact() {
        assert_eq!(maximize_unit(|x| x, 1001, 1e-12).x, 1.0);
        assert_eq!(maximize_unit(|x| -x, 1001, 1e-12).x, 0.0);
    }

    #[test]
    fn flat_function_keeps_smallest_argument() {
        let got = maximize_unit(|_| 0.0, 11, 1e-12);
        assert_eq!(got, Argmax { x: 0.0, value: 0.0 });
    }

    #[test]
    fn grid_endpoints() {
        let g: Vec<f64> = unit_grid(5).collect();
        assert_eq!(g, vec![0.0, 0.25, 0.5, 0.75, 1.0]);
    }
}

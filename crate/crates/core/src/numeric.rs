//! Floating-point root screening. Results only select candidates; every
//! verdict is re-derived exactly.

use num_complex::Complex64;

/// All complex roots of the polynomial with ascending `coeffs`, by the
/// Aberth-Ehrlich iteration. Leading zeros are dropped.
pub fn complex_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let mut c: Vec<f64> = coeffs.to_vec();
    while c.last().is_some_and(|x| *x == 0.0) {
        c.pop();
    }
    let deg = c.len().saturating_sub(1);
    if deg == 0 {
        return Vec::new();
    }
    let lc = c[deg];
    let monic: Vec<f64> = c.iter().map(|x| x / lc).collect();
    if deg == 1 {
        return vec![Complex64::new(-monic[0], 0.0)];
    }
    let bound = 1.0 + monic[..deg].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let radius = bound.min(
        // Fujiwara-style tighter radius keeps starting points near the roots.
        2.0 * (0..deg)
            .map(|k| (monic[k].abs()).powf(1.0 / (deg - k) as f64))
            .fold(0.0f64, f64::max),
    );
    let radius = if radius > 0.0 { radius } else { 1.0 };
    let mut z: Vec<Complex64> = (0..deg)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (deg as f64) + 0.4;
            Complex64::from_polar(radius, theta)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut p = Complex64::new(monic[deg], 0.0);
        let mut dp = Complex64::new(0.0, 0.0);
        for k in (0..deg).rev() {
            dp = dp * x + p;
            p = p * x + monic[k];
        }
        (p, dp)
    };
    for _ in 0..500 {
        let mut max_step: f64 = 0.0;
        for i in 0..deg {
            let (p, dp) = eval(z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::new(0.0, 0.0);
            for j in 0..deg {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() > 0.0 {
                        s += 1.0 / diff;
                    }
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / (1.0 + z[i].norm()));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Scale-free measure of how far a polynomial is from having non-real
/// roots: negative when some root has a relatively large imaginary part,
/// otherwise the smallest relative gap between consecutive real parts.
pub fn realness_score(coeffs: &[f64], tol: f64) -> f64 {
    let roots = complex_roots(coeffs);
    if roots.is_empty() {
        return f64::INFINITY;
    }
    let scale = roots.iter().fold(1e-300f64, |m, z| m.max(z.norm()));
    let max_im = roots.iter().fold(0.0f64, |m, z| m.max(z.im.abs())) / scale;
    if max_im > tol {
        return -max_im;
    }
    let mut re: Vec<f64> = roots.iter().map(|z| z.re).collect();
    re.sort_by(|a, b| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal));
    re.windows(2)
        .map(|w| (w[1] - w[0]) / scale)
        .fold(f64::INFINITY, f64::min)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_real_and_complex_roots() {
        // (t - 1)(t + 2)(t^2 + 1)
        let r = complex_roots(&[-2.0, 1.0, -1.0, 1.0, 1.0]);
        let expect = [(-2.0, 0.0), (0.0, -1.0), (0.0, 1.0), (1.0, 0.0)];
        assert_eq!(r.len(), 4);
        for want in expect {
            let w = Complex64::new(want.0, want.1);
            assert!(r.iter().any(|z| (z - w).norm() < 1e-9), "{want:?} not in {r:?}");
        }
    }

    #[test]
    fn score_signals() {
        assert!(realness_score(&[1.0, 0.0, 1.0], 1e-7) < 0.0);
        assert!(realness_score(&[-1.0, 0.0, 1.0], 1e-7) > 0.5);
        // Triple root: tiny spurious imaginary parts stay under tolerance.
        assert!(realness_score(&[-1.0, 3.0, -3.0, 1.0], 1e-4) >= 0.0);
    }
}

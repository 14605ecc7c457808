use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith::IntPoly;
use crate::error::{Error, Result};

const MAX_ITER: usize = 500;

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

/// All complex roots by Aberth's simultaneous iteration, sorted by real then
/// imaginary part.
///
/// Starting points sit on a slightly rotated circle whose radius matches the
/// geometric mean of the root moduli. Fails with `NonConvergence` after 500
/// sweeps, or when the final residuals are not small.
pub fn numeric_roots(p: &IntPoly, tol: f64) -> Result<Vec<Complex64>> {
    let n = p.degree();
    if n == 0 {
        return Err(Error::ConstantPolynomial);
    }
    let c: Vec<f64> = p.coeffs().iter().map(|a| a.to_f64().expect("finite coefficient")).collect();
    let lead = c[n];
    let c: Vec<f64> = c.iter().map(|a| a / lead).collect();
    let radius = if c[0] == 0.0 { 1.0 } else { c[0].abs().powf(1.0 / n as f64) };
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = std::f64::consts::TAU * k as f64 / n as f64 + 0.4;
            Complex64::from_polar(radius * (1.0 + 0.01 * k as f64), theta)
        })
        .collect();
    let mut converged = false;
    for _ in 0..MAX_ITER {
        let mut max_step: f64 = 0.0;
        for k in 0..n {
            let (pv, dv) = horner(&c, z[k]);
            if pv.norm() == 0.0 {
                continue;
            }
            let ratio = pv / dv;
            let repulsion: Complex64 = (0..n).filter(|&j| j != k).map(|j| (z[k] - z[j]).inv()).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[k] -= step;
                max_step = max_step.max(step.norm());
            }
        }
        if max_step < tol {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(Error::NonConvergence(MAX_ITER));
    }
    // residual certificate relative to the coefficient scale at |z|
    for &r in &z {
        let (pv, _) = horner(&c, r);
        let scale: f64 = c.iter().enumerate().map(|(k, a)| a.abs() * r.norm().powi(k as i32)).sum();
        if pv.norm() > 1e-6 * scale.max(1.0) {
            return Err(Error::NonConvergence(MAX_ITER));
        }
    }
    // round the real part first so conjugate pairs sort by imaginary part
    let key = |v: &Complex64| (v.re * 1e6).round() + 0.0; // folds -0 into +0
    z.sort_by(|a, b| key(a).total_cmp(&key(b)).then(a.im.total_cmp(&b.im)));
    Ok(z)
}

/// Roots whose imaginary part is below `tol` in absolute value.
pub fn real_count(roots: &[Complex64], tol: f64) -> usize {
    roots.iter().filter(|z| z.im.abs() < tol).count()
}

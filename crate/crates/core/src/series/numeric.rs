//! Floating-point root approximation, used only for reporting root moduli.

use num_complex::Complex64;

use super::poly::Poly;

/// All complex roots of `p` by Aberth-Ehrlich iteration.
pub fn complex_roots(p: &Poly) -> Vec<Complex64> {
    let c = p.to_f64_coeffs();
    let n = match p.degree() {
        Some(n) if n > 0 => n,
        _ => return Vec::new(),
    };
    let lead = c[n];
    let coeffs: Vec<f64> = c.iter().map(|x| x / lead).collect();
    let radius = 1.0 + coeffs[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64 + 0.25) / n as f64;
            Complex64::from_polar(0.5 * radius.clamp(0.5, 2.0) + 0.1 * k as f64 / n as f64, theta)
        })
        .collect();
    let eval = |x: Complex64| -> (Complex64, Complex64) {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for a in coeffs.iter().rev() {
            d = d * x + v;
            v = v * x + a;
        }
        (v, d)
    };
    for _ in 0..500 {
        let mut max_step = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let sum: Complex64 = (0..n).filter(|&j| j != i).map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j])).sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * sum);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            break;
        }
    }
    z
}

/// Refines an approximate root with a few Newton steps.
pub fn polish(p: &Poly, mut x: Complex64) -> Complex64 {
    let c = p.to_f64_coeffs();
    for _ in 0..5 {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for a in c.iter().rev() {
            d = d * x + v;
            v = v * x + a;
        }
        if d.norm() == 0.0 {
            break;
        }
        let step = v / d;
        if !step.is_finite() {
            break;
        }
        x -= step;
    }
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roots_of_cyclotomic_and_quadratic() {
        let roots = complex_roots(&Poly::from_i64s(&[1, 0, 0, 0, 1]));
        assert_eq!(roots.len(), 4);
        for r in roots {
            assert!((r.norm() - 1.0).abs() < 1e-12);
        }
        let mut roots: Vec<f64> = complex_roots(&Poly::from_i64s(&[2, -3, 1])).iter().map(|z| z.re).collect();
        roots.sort_by(|a, b| a.partial_cmp(b).unwrap());
        assert!((roots[0] - 1.0).abs() < 1e-12 && (roots[1] - 2.0).abs() < 1e-12);
    }
}

//! Composite Gauss–Legendre quadrature in f64.
//!
//! Used as the independent route for integral-mean identities; smooth
//! integrands over moderate intervals reach ~1e-14 relative accuracy with
//! a handful of 32-node panels.

/// Nodes and weights of the n-point Gauss–Legendre rule on [-1, 1].
pub fn gauss_legendre(n: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(n >= 2);
    let mut nodes = vec![0.0; n];
    let mut weights = vec![0.0; n];
    let m = n.div_ceil(2);
    for i in 0..m {
        // Tricomi initial guess, then Newton on P_n.
        let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
        let mut dp = 0.0;
        for _ in 0..100 {
            let (p, d) = legendre_and_derivative(n, x);
            dp = d;
            let dx = p / d;
            x -= dx;
            if dx.abs() < 1e-16 {
                break;
            }
        }
        let w = 2.0 / ((1.0 - x * x) * dp * dp);
        nodes[i] = -x;
        nodes[n - 1 - i] = x;
        weights[i] = w;
        weights[n - 1 - i] = w;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
        let (_, d) = legendre_and_derivative(n, 0.0);
        weights[n / 2] = 2.0 / (d * d);
    }
    (nodes, weights)
}

fn legendre_and_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// ∫_a^b f(u) du with `panels` equal 32-node Gauss–Legendre panels.
pub fn integrate<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, panels: usize) -> f64 {
    let (nodes, weights) = gauss_legendre(32);
    let panels = panels.max(1);
    let step = (b - a) / panels as f64;
    let mut total = 0.0;
    for p in 0..panels {
        let lo = a + step * p as f64;
        let mid = lo + 0.5 * step;
        let half = 0.5 * step;
        let mut acc = 0.0;
        for (x, w) in nodes.iter().zip(&weights) {
            acc += w * f(mid + half * x);
        }
        total += acc * half;
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_is_exact() {
        // 32-node rule integrates degree-63 polynomials exactly.
        let v = integrate(|x| x * x * x - 2.0 * x + 1.0, -1.0, 3.0, 1);
        // ∫ = x⁴/4 - x² + x: (81/4 - 9 + 3) - (1/4 - 1 - 1) = 16
        assert!((v - 16.0).abs() < 1e-13);
    }

    #[test]
    fn log_integral() {
        // ∫_1^e ln u du = 1
        let v = integrate(f64::ln, 1.0, std::f64::consts::E, 2);
        assert!((v - 1.0).abs() < 1e-14);
    }

    #[test]
    fn digamma_integral_telescopes_to_lgamma() {
        let v = integrate(|u| crate::special::digamma(u), 1.0, 2.0, 4);
        // ∫_1^2 ψ = lnΓ(2) - lnΓ(1) = 0
        assert!(v.abs() < 1e-14, "got {v:e}");
    }
}

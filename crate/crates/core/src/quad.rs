//! Quadrature rules at arbitrary precision.
//!
//! Composite Gauss-Legendre is the workhorse; tanh-sinh (double exponential)
//! is kept as an independent oracle for Mellin-type integrals with endpoint
//! behavior. Node tables are cached per (order, precision).

use crate::precision::{Cplx, Real};
use once_cell::sync::Lazy;
use std::collections::HashMap;
use std::sync::Mutex;

/// Nodes and weights on the reference interval [-1, 1].
#[derive(Clone)]
pub struct GlRule {
    pub nodes: Vec<Real>,
    pub weights: Vec<Real>,
}

static GL_CACHE: Lazy<Mutex<HashMap<(usize, u32), GlRule>>> =
    Lazy::new(|| Mutex::new(HashMap::new()));

/// Legendre P_n(x) and its derivative by the three-term recurrence.
fn legendre_pn_dpn(n: usize, x: &Real) -> (Real, Real) {
    let p = x.prec();
    let mut p0 = Real::one(p);
    let mut p1 = x.clone();
    for k in 1..n {
        // (k+1) P_{k+1} = (2k+1) x P_k - k P_{k-1}
        let a = x.mul(&p1).mul_f64((2 * k + 1) as f64);
        let b = p0.mul_f64(k as f64);
        let p2 = a.sub(&b).div_f64((k + 1) as f64);
        p0 = p1;
        p1 = p2;
    }
    // P_n'(x) = n (x P_n - P_{n-1}) / (x^2 - 1)
    let num = x.mul(&p1).sub(&p0).mul_f64(n as f64);
    let den = x.square().sub_f64(1.0);
    (p1, num.div(&den))
}

/// Gauss-Legendre rule of the given order at the given precision.
pub fn gl_rule(n: usize, prec: u32) -> GlRule {
    if let Some(r) = GL_CACHE.lock().unwrap().get(&(n, prec)) {
        return r.clone();
    }
    let work = prec + 16;
    let pi = Real::pi(work);
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    let half = n / 2;
    for i in 0..half {
        // Chebyshev-style initial guess, then Newton.
        let guess = pi
            .mul_f64(i as f64 + 0.75)
            .div_f64(n as f64 + 0.5)
            .cos();
        let mut x = guess;
        for _ in 0..(2 + (work as f64).log2() as usize) {
            let (pn, dpn) = legendre_pn_dpn(n, &x);
            x = x.sub(&pn.div(&dpn));
        }
        let (_, dpn) = legendre_pn_dpn(n, &x);
        let w = Real::from_int(work, 2)
            .div(&x.square().sub_f64(1.0).neg().mul(&dpn.square()));
        nodes.push(x.with_prec(prec));
        weights.push(w.with_prec(prec));
    }
    // Mirror to the full set; include x = 0 for odd n.
    let mut full_nodes = Vec::with_capacity(n);
    let mut full_weights = Vec::with_capacity(n);
    for i in 0..half {
        full_nodes.push(nodes[i].neg());
        full_weights.push(weights[i].clone());
    }
    if n % 2 == 1 {
        let x = Real::zero(prec);
        let (_, dpn) = legendre_pn_dpn(n, &x.with_prec(work));
        let w = Real::from_int(work, 2).div(&dpn.square());
        full_nodes.push(x);
        full_weights.push(w.with_prec(prec));
    }
    for i in (0..half).rev() {
        full_nodes.push(nodes[i].clone());
        full_weights.push(weights[i].clone());
    }
    let rule = GlRule {
        nodes: full_nodes,
        weights: full_weights,
    };
    GL_CACHE
        .lock()
        .unwrap()
        .insert((n, prec), rule.clone());
    rule
}

/// f64 Gauss-Legendre rule (nodes, weights) on [-1, 1].
pub fn gl_rule_f64(n: usize) -> (Vec<f64>, Vec<f64>) {
    let r = gl_rule(n, MIN_GL_F64_PREC);
    (
        r.nodes.iter().map(|x| x.to_f64()).collect(),
        r.weights.iter().map(|x| x.to_f64()).collect(),
    )
}
const MIN_GL_F64_PREC: u32 = 64;

/// Integrate a complex-valued function over [a, b] with composite GL panels.
pub fn integrate_cplx<F>(f: F, a: &Real, b: &Real, panels: usize, order: usize, prec: u32) -> Cplx
where
    F: Fn(&Real) -> Cplx,
{
    let rule = gl_rule(order, prec);
    let width = b.sub(a).div_f64(panels as f64);
    let mut acc = Cplx::zero(prec);
    for k in 0..panels {
        let lo = a.add(&width.mul_f64(k as f64));
        let mid = lo.add(&width.mul_f64(0.5));
        let half = width.mul_f64(0.5);
        for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
            let t = mid.add(&half.mul(x));
            acc = acc.add(&f(&t).scale(&w.mul(&half)));
        }
    }
    acc
}

/// Integrate a real-valued function over [a, b] with composite GL panels.
pub fn integrate_real<F>(f: F, a: &Real, b: &Real, panels: usize, order: usize, prec: u32) -> Real
where
    F: Fn(&Real) -> Real,
{
    let rule = gl_rule(order, prec);
    let width = b.sub(a).div_f64(panels as f64);
    let mut acc = Real::zero(prec);
    for k in 0..panels {
        let lo = a.add(&width.mul_f64(k as f64));
        let mid = lo.add(&width.mul_f64(0.5));
        let half = width.mul_f64(0.5);
        for (x, w) in rule.nodes.iter().zip(rule.weights.iter()) {
            let t = mid.add(&half.mul(x));
            acc = acc.add(&f(&t).mul(w).mul(&half));
        }
    }
    acc
}

/// Tanh-sinh (double exponential) quadrature over [a, b].
///
/// Independent of the GL path; used as the oracle rule. `level` controls the
/// step h = 2^-level; the node count grows with both level and precision.
pub fn tanh_sinh_cplx<F>(f: F, a: &Real, b: &Real, level: u32, prec: u32) -> Cplx
where
    F: Fn(&Real) -> Cplx,
{
    let half = b.sub(a).mul_f64(0.5);
    let mid = a.add(b).mul_f64(0.5);
    let pi_half = Real::pi(prec).mul_f64(0.5);
    let h = Real::one(prec).div_f64((1u64 << level) as f64);
    // stop once the weight factor underflows the target precision
    let cut = -((prec as f64) * 0.75 + 24.0);
    let mut acc = Cplx::zero(prec);
    let mut j: i64 = 0;
    loop {
        let t = h.mul_i64(j);
        let (sh, ch) = (t.sinh(), t.cosh());
        let arg = pi_half.mul(&sh);
        let (sa, ca) = (arg.sinh(), arg.cosh());
        // x = tanh(pi/2 sinh t), w = (pi/2) cosh t / cosh^2(pi/2 sinh t)
        let x = sa.div(&ca);
        let w = pi_half.mul(&ch).div(&ca.square());
        if w.log2_abs() < cut {
            break;
        }
        let eval = |xx: &Real, ww: &Real, acc: &mut Cplx| {
            let p = mid.add(&half.mul(xx));
            *acc = acc.add(&f(&p).scale(&ww.mul(&half)));
        };
        if j == 0 {
            eval(&x, &w, &mut acc);
        } else {
            eval(&x, &w, &mut acc);
            eval(&x.neg(), &w, &mut acc);
        }
        j += 1;
        if j > (1 << (level + 6)) {
            break;
        }
    }
    acc.scale(&h)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gl_integrates_polynomial_exactly() {
        let p = 128;
        let a = Real::new(p, -1.0);
        let b = Real::new(p, 2.0);
        // integral of x^3 over [-1,2] = (16-1)/4
        let v = integrate_real(|x| x.powi(3), &a, &b, 1, 8, p);
        assert!((v.to_f64() - 3.75).abs() < 1e-30);
    }

    #[test]
    fn gl_high_precision_exp() {
        let p = 256;
        let a = Real::zero(p);
        let b = Real::one(p);
        let v = integrate_real(|x| x.exp(), &a, &b, 4, 32, p);
        let expect = Real::one(p).exp().sub_f64(1.0);
        let err = v.sub(&expect).abs().log2_abs();
        assert!(err < -200.0, "log2 err = {err}");
    }

    #[test]
    fn tanh_sinh_matches_gl() {
        let p = 192;
        let a = Real::zero(p);
        let b = Real::new(p, 3.0);
        let g = |x: &Real| Cplx::from_real(x.square().add_f64(1.0).recip());
        let v1 = integrate_cplx(g, &a, &b, 6, 24, p);
        let v2 = tanh_sinh_cplx(g, &a, &b, 6, p);
        let err = v1.sub(&v2).abs().log2_abs();
        assert!(err < -120.0, "log2 err = {err}");
    }
}

//! Gauss--Hermite quadrature and integration against Gaussian measures on
//! R^n and C^n.
//!
//! All integrals in the crate are driven from here: the weighted rules for
//! ∫ f(x) e^{-b x²} dx, the Fock-measure rule dλ(z) = π^{-n} e^{-|z|²} dz,
//! and composite Gauss--Legendre panel rules for integrands with jump
//! discontinuities or integrable singularities on the real line.

use crate::error::{FockError, Result};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// Gauss--Hermite rule for the weight e^{-t²} on the real line.
///
/// `nodes` are the roots of the Hermite polynomial H_order, strictly
/// increasing and symmetric about 0. `weights` sum to √π. `total_weights`
/// stores w_i·e^{t_i²}, computed in scaled arithmetic so it stays finite at
/// large order where the raw weights underflow; it is what tensor
/// integration against explicit Gaussian factors uses.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadratureRule {
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// w_i e^{t_i²}; the Christoffel numbers of the orthonormal Hermite
    /// functions.
    pub total_weights: Vec<f64>,
    /// Variable substitution factor recorded by scaled constructors
    /// (gauss_hermite sets 1).
    pub scale: f64,
}

pub const MAX_GAUSS_HERMITE_ORDER: usize = 4096;

/// Orthonormal-Hermite value/derivative at `t`, in scaled form
/// (true value = v·e^{log_scale}).
///
/// p_0 = π^{-1/4}, p_{k+1} = (t p_k - √(k/2) p_{k-1})/√((k+1)/2); these are
/// orthonormal for the weight e^{-t²}. Values are renormalized on the fly so
/// the recurrence never overflows outside the oscillatory region.
fn hermite_poly_scaled(order: usize, t: f64) -> (f64, f64, f64) {
    let mut log_scale = 0.0f64;
    let mut p_prev = 0.0f64;
    let mut p = PI.powf(-0.25);
    let mut dp_prev = 0.0f64;
    let mut dp = 0.0f64;
    for k in 0..order {
        let a = (0.5 * (k as f64 + 1.0)).sqrt();
        let b = (0.5 * k as f64).sqrt();
        let p_next = (t * p - b * p_prev) / a;
        let dp_next = (p + t * dp - b * dp_prev) / a;
        p_prev = p;
        p = p_next;
        dp_prev = dp;
        dp = dp_next;
        let m = p.abs().max(p_prev.abs()).max(dp.abs()).max(dp_prev.abs());
        if m > 1e130 {
            let f = 1e-130;
            p *= f;
            p_prev *= f;
            dp *= f;
            dp_prev *= f;
            log_scale += 130.0 * std::f64::consts::LN_10;
        }
    }
    (p, dp, log_scale)
}

/// Christoffel sum Σ_{k<order} φ_k(t)² with φ_k = p_k(t) e^{-t²/2},
/// accumulated in a floating log frame so extreme nodes do not underflow.
/// Returns (acc, log_frame): the sum is acc·e^{log_frame}.
fn christoffel_sum_scaled(order: usize, t: f64) -> (f64, f64) {
    let mut log_scale = -0.5 * t * t;
    let mut v_prev = 0.0f64;
    let mut v = PI.powf(-0.25);
    let mut acc = v * v;
    let mut acc_log = 2.0 * log_scale;
    for k in 0..order.saturating_sub(1) {
        let a = (0.5 * (k as f64 + 1.0)).sqrt();
        let b = (0.5 * k as f64).sqrt();
        let v_next = (t * v - b * v_prev) / a;
        v_prev = v;
        v = v_next;
        let m = v.abs().max(v_prev.abs());
        if m > 1e130 || (m > 0.0 && m < 1e-130) {
            let shift = m.ln();
            v *= (-shift).exp();
            v_prev *= (-shift).exp();
            log_scale += shift;
        }
        let term_log = 2.0 * log_scale;
        if term_log > acc_log {
            acc = acc * (acc_log - term_log).exp() + v * v;
            acc_log = term_log;
        } else {
            acc += v * v * (term_log - acc_log).exp();
        }
    }
    (acc, acc_log)
}

/// Eigenvalues of a symmetric tridiagonal matrix by the implicit QL method
/// (EISPACK tql1 lineage); diagonal `d`, off-diagonal `e[i]` couples i, i+1.
fn symmetric_tridiagonal_eigenvalues(mut d: Vec<f64>, mut e: Vec<f64>) -> Result<Vec<f64>> {
    let n = d.len();
    e.push(0.0);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            if iter > 50 {
                return Err(FockError::NonConvergence(format!(
                    "tridiagonal QL stalled at index {l} after 50 shifts"
                )));
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c) = (1.0f64, 1.0f64);
            let mut p = 0.0f64;
            let mut underflow = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    underflow = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if underflow {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).unwrap());
    Ok(d)
}

/// Build the Gauss--Hermite rule of the given order for the weight e^{-t²}.
///
/// Nodes come from the Golub--Welsch Jacobi matrix (off-diagonal √(k/2)),
/// refined by Newton on the orthonormal recurrence and symmetrized exactly;
/// weights are Christoffel numbers 1/Σ φ_k², which keeps the extreme nodes
/// of large rules finite.
pub fn gauss_hermite(order: usize) -> Result<QuadratureRule> {
    if order < 1 || order > MAX_GAUSS_HERMITE_ORDER {
        return Err(FockError::Parameter(format!(
            "gauss_hermite order must be in 1..={MAX_GAUSS_HERMITE_ORDER}, got {order}"
        )));
    }
    let d = vec![0.0; order];
    let e: Vec<f64> = (1..order).map(|k| (0.5 * k as f64).sqrt()).collect();
    let mut nodes = symmetric_tridiagonal_eigenvalues(d, e)?;

    // Newton refinement; the step |p/p'| < 1e-15·(1+|t|) criterion realizes
    // the |H_order(node)| < 1e-14·scale construction tolerance.
    let half = order / 2 + order % 2;
    for node in nodes.iter_mut().take(half) {
        let mut t = *node;
        for _ in 0..32 {
            let (p, dp, _) = hermite_poly_scaled(order, t);
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            t -= step;
            if step.abs() < 1e-15 * (1.0 + t.abs()) {
                break;
            }
        }
        *node = t;
    }
    // Mirror the refined half so node_k = -node_{order-1-k} holds exactly.
    for k in 0..order / 2 {
        nodes[order - 1 - k] = -nodes[k];
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    nodes.sort_by(|a, b| a.partial_cmp(b).unwrap());

    let mut weights = Vec::with_capacity(order);
    let mut total_weights = Vec::with_capacity(order);
    for &t in &nodes {
        let (acc, acc_log) = christoffel_sum_scaled(order, t);
        let ln_sum = acc.ln() + acc_log;
        total_weights.push((-ln_sum).exp());
        weights.push((-ln_sum - t * t).exp());
    }

    Ok(QuadratureRule {
        order,
        nodes,
        weights,
        total_weights,
        scale: 1.0,
    })
}

impl QuadratureRule {
    /// Check the construction invariants; used by tests and `verify`.
    pub fn validate(&self) -> Result<()> {
        let n = self.order;
        if self.nodes.len() != n || self.weights.len() != n {
            return Err(FockError::Numeric("rule arrays disagree with order".into()));
        }
        for k in 1..n {
            if self.nodes[k] <= self.nodes[k - 1] {
                return Err(FockError::Numeric("nodes not strictly increasing".into()));
            }
        }
        for k in 0..n {
            if (self.nodes[k] + self.nodes[n - 1 - k]).abs() > 1e-13 {
                return Err(FockError::Numeric("nodes not symmetric".into()));
            }
        }
        let sum: f64 = self.weights.iter().sum();
        if (sum - self.scale * PI.sqrt()).abs() > 1e-12 {
            return Err(FockError::Numeric(format!(
                "weight sum {sum} differs from scale·√π"
            )));
        }
        Ok(())
    }

    /// Rule for the weight e^{-(t/s)²}: nodes and weights both scale by `s`.
    pub fn scaled(&self, s: f64) -> Result<QuadratureRule> {
        if !(s > 0.0) {
            return Err(FockError::Parameter("scale must be positive".into()));
        }
        Ok(QuadratureRule {
            order: self.order,
            nodes: self.nodes.iter().map(|t| t * s).collect(),
            weights: self.weights.iter().map(|w| w * s).collect(),
            total_weights: self.total_weights.iter().map(|w| w * s).collect(),
            scale: self.scale * s,
        })
    }
}

/// ∫_{R^n} f(x) e^{-b x²} dx by the tensor-product substitution x = t/√b.
///
/// Summation runs in lexicographic node order, so repeated calls are
/// bit-identical.
pub fn integrate_weighted_rn<F>(
    mut f: F,
    rule: &QuadratureRule,
    n: usize,
    gauss_exponent: f64,
) -> Result<C64>
where
    F: FnMut(&[f64]) -> C64,
{
    if !(gauss_exponent > 0.0) {
        return Err(FockError::Parameter("gauss exponent must be positive".into()));
    }
    if n == 0 {
        return Err(FockError::Parameter("dimension must be at least 1".into()));
    }
    let sqrt_b = gauss_exponent.sqrt();
    let m = rule.order;
    let mut idx = vec![0usize; n];
    let mut x = vec![0.0f64; n];
    let mut sum = C64::new(0.0, 0.0);
    loop {
        let mut w = 1.0f64;
        for j in 0..n {
            x[j] = rule.nodes[idx[j]] / sqrt_b;
            w *= rule.weights[idx[j]];
        }
        let v = f(&x);
        if !v.re.is_finite() || !v.im.is_finite() {
            return Err(FockError::Evaluation {
                node: x.clone(),
                reason: "integrand returned a non-finite value".into(),
            });
        }
        sum += w * v;
        // lexicographic odometer
        let mut j = n;
        loop {
            if j == 0 {
                return Ok(sum / gauss_exponent.powf(n as f64 / 2.0));
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < m {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// ∫_{C^n} F dλ with dλ(z) = π^{-n} e^{-|z|²} dz, as a 2n-real-dimensional
/// tensor rule; the π^{-n} normalization is folded into the weights.
pub fn integrate_fock_measure<F>(mut f: F, rule: &QuadratureRule, n: usize) -> Result<C64>
where
    F: FnMut(&[C64]) -> C64,
{
    if n == 0 {
        return Err(FockError::Parameter("dimension must be at least 1".into()));
    }
    let m = rule.order;
    let dims = 2 * n;
    let mut idx = vec![0usize; dims];
    let mut z = vec![C64::new(0.0, 0.0); n];
    let mut sum = C64::new(0.0, 0.0);
    let norm = PI.powi(n as i32);
    loop {
        let mut w = 1.0f64;
        for j in 0..n {
            let re = rule.nodes[idx[2 * j]];
            let im = rule.nodes[idx[2 * j + 1]];
            z[j] = C64::new(re, im);
            w *= rule.weights[idx[2 * j]] * rule.weights[idx[2 * j + 1]];
        }
        let v = f(&z);
        if !v.re.is_finite() || !v.im.is_finite() {
            let node: Vec<f64> = z.iter().flat_map(|c| [c.re, c.im]).collect();
            return Err(FockError::Evaluation {
                node,
                reason: "integrand returned a non-finite value".into(),
            });
        }
        sum += w * v;
        let mut j = dims;
        loop {
            if j == 0 {
                return Ok(sum / norm);
            }
            j -= 1;
            idx[j] += 1;
            if idx[j] < m {
                break;
            }
            idx[j] = 0;
        }
    }
}

/// Gauss--Legendre nodes/weights on [-1, 1] by Newton on the Legendre
/// recurrence.
pub fn gauss_legendre(order: usize) -> (Vec<f64>, Vec<f64>) {
    assert!(order >= 1 && order <= 256);
    let mut nodes = vec![0.0f64; order];
    let mut weights = vec![0.0f64; order];
    let m = (order + 1) / 2;
    for i in 0..m {
        let mut z = (PI * (i as f64 + 0.75) / (order as f64 + 0.5)).cos();
        let mut pp = 0.0;
        for _ in 0..100 {
            let mut p0 = 1.0f64;
            let mut p1 = z;
            for k in 2..=order {
                let kf = k as f64;
                let p2 = ((2.0 * kf - 1.0) * z * p1 - (kf - 1.0) * p0) / kf;
                p0 = p1;
                p1 = p2;
            }
            pp = order as f64 * (z * p1 - p0) / (z * z - 1.0);
            let step = p1 / pp;
            z -= step;
            if step.abs() < 1e-15 {
                break;
            }
        }
        nodes[i] = -z;
        nodes[order - 1 - i] = z;
        let w = 2.0 / ((1.0 - z * z) * pp * pp);
        weights[i] = w;
        weights[order - 1 - i] = w;
    }
    if order % 2 == 1 {
        nodes[order / 2] = 0.0;
    }
    (nodes, weights)
}

/// A composite plain-measure rule: Σ w_i u(x_i) ≈ ∫ u(x) dx for integrands
/// that are smooth between the declared split points and decay on the ends.
#[derive(Debug, Clone)]
pub struct PanelRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

/// Build a composite Gauss--Legendre rule on [lo, hi].
///
/// The interval is split at every `breaks` coordinate; around each `graded`
/// coordinate the panels refine geometrically (ratio 2, `grading_depth`
/// levels) so bounded point singularities and integrable |x|^{-a} factors
/// are resolved. `max_width` caps the panel size against integrand
/// oscillation.
pub fn panel_rule(
    lo: f64,
    hi: f64,
    breaks: &[f64],
    graded: &[f64],
    max_width: f64,
    gl_order: usize,
    grading_depth: u32,
) -> Result<PanelRule> {
    if !(hi > lo) {
        return Err(FockError::Parameter("panel_rule needs hi > lo".into()));
    }
    let mut edges: Vec<f64> = vec![lo, hi];
    for &b in breaks.iter().chain(graded.iter()) {
        if b > lo && b < hi {
            edges.push(b);
        }
    }
    edges.sort_by(|a, b| a.partial_cmp(b).unwrap());
    edges.dedup();

    // Geometric refinement toward graded endpoints of each subinterval.
    let mut refined: Vec<f64> = Vec::new();
    for w in edges.windows(2) {
        let (a, b) = (w[0], w[1]);
        refined.push(a);
        let len = b - a;
        if graded.iter().any(|&g| (g - a).abs() <= 1e-300 || g == a) {
            for j in (1..=grading_depth).rev() {
                let x = a + len * 0.5f64.powi(j as i32);
                refined.push(x);
            }
        }
        if graded.iter().any(|&g| (g - b).abs() <= 1e-300 || g == b) {
            for j in 1..=grading_depth {
                let x = b - len * 0.5f64.powi(j as i32);
                refined.push(x);
            }
        }
    }
    refined.push(hi);
    refined.sort_by(|a, b| a.partial_cmp(b).unwrap());
    refined.dedup();

    let (xi, wi) = gauss_legendre(gl_order);
    let mut nodes = Vec::new();
    let mut weights = Vec::new();
    for w in refined.windows(2) {
        let (a, b) = (w[0], w[1]);
        let pieces = ((b - a) / max_width).ceil().max(1.0) as usize;
        let h = (b - a) / pieces as f64;
        for p in 0..pieces {
            let pa = a + p as f64 * h;
            let mid = pa + 0.5 * h;
            let half = 0.5 * h;
            for k in 0..gl_order {
                nodes.push(mid + half * xi[k]);
                weights.push(half * wi[k]);
            }
        }
    }
    Ok(PanelRule { nodes, weights })
}

/// Classical turning point of the degree-`d` Hermite function ψ_d plus a
/// decay margin; integrands built from ψ's of single degree ≤ d are
/// negligible outside ±this.
pub fn hermite_support_radius(max_single_degree: usize) -> f64 {
    (max_single_degree as f64 + 0.5).sqrt() + 8.0
}

/// Panel width that keeps ≥ 4 Gauss points per wavelength of a product of
/// two degree-≤ d Hermite functions plus an extra linear phase frequency.
pub fn oscillation_panel_width(max_single_degree: usize, extra_freq: f64, gl_order: usize) -> f64 {
    let herm_freq = 2.0 * std::f64::consts::SQRT_2 * (2.0 * max_single_degree as f64 + 1.0).sqrt();
    let omega = herm_freq + extra_freq.abs();
    let wavelength = 2.0 * PI / omega;
    (gl_order as f64 / 4.0) * wavelength
}

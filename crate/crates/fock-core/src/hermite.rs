//! Hermite basis functions of L²(R^n), the monomial basis of F²(C^n),
//! truncated coefficient vectors, the reproducing kernel, and the Weyl
//! operator.
//!
//! ψ_α(x) = Π_j (2/π)^{1/4} (2^{α_j} α_j!)^{-1/2} H_{α_j}(√2 x_j) e^{-x_j²}
//! is the orthonormal family carried to the normalized monomials
//! e_α(z) = z^α/√(α!) by the Bargmann transform.

use crate::error::{FockError, Result};
use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

/// Multi-index α = (α₁, …, α_n), α_j ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn degree(&self) -> usize {
        self.0.iter().sum()
    }
}

/// Ordered multi-indices |α| ≤ N in n variables, graded lexicographic.
///
/// Size is C(N+n, n); `index_of` inverts `indices` exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncationBasis {
    pub n: usize,
    pub max_degree: usize,
    pub indices: Vec<MultiIndex>,
}

fn enumerate_degree(n: usize, degree: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
    if n == 1 {
        prefix.push(degree);
        out.push(MultiIndex(prefix.clone()));
        prefix.pop();
        return;
    }
    for first in 0..=degree {
        prefix.push(first);
        enumerate_degree(n - 1, degree - first, prefix, out);
        prefix.pop();
    }
}

impl TruncationBasis {
    pub fn new(n: usize, max_degree: usize) -> Result<Self> {
        if n == 0 {
            return Err(FockError::Parameter("dimension must be at least 1".into()));
        }
        let mut indices = Vec::new();
        for degree in 0..=max_degree {
            let mut block = Vec::new();
            enumerate_degree(n, degree, &mut Vec::new(), &mut block);
            block.sort_by(|a, b| a.0.cmp(&b.0));
            indices.extend(block);
        }
        Ok(TruncationBasis {
            n,
            max_degree,
            indices,
        })
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    /// Position of α in the graded-lex order.
    pub fn index_of(&self, alpha: &MultiIndex) -> Option<usize> {
        let deg = alpha.degree();
        if deg > self.max_degree || alpha.0.len() != self.n {
            return None;
        }
        self.indices
            .binary_search_by(|probe| probe.degree().cmp(&deg).then(probe.0.cmp(&alpha.0)))
            .ok()
    }

    pub fn same_shape(&self, other: &TruncationBasis) -> bool {
        self.n == other.n && self.max_degree == other.max_degree
    }

    /// Indices of the sub-basis |α| ≤ deg (a leading block in this order).
    pub fn leading_block_len(&self, deg: usize) -> usize {
        self.indices.iter().take_while(|a| a.degree() <= deg).count()
    }
}

/// Coefficients over the monomial basis e_α of F²(C^n).
#[derive(Debug, Clone, PartialEq)]
pub struct FockVector {
    pub basis: TruncationBasis,
    pub coeffs: Vec<C64>,
}

/// Coefficients over the ψ_α basis of L²(R^n).
#[derive(Debug, Clone, PartialEq)]
pub struct HermiteVector {
    pub basis: TruncationBasis,
    pub coeffs: Vec<C64>,
}

impl FockVector {
    pub fn zero(basis: TruncationBasis) -> Self {
        let coeffs = vec![C64::new(0.0, 0.0); basis.len()];
        FockVector { basis, coeffs }
    }

    pub fn unit(basis: TruncationBasis, index: usize) -> Self {
        let mut v = Self::zero(basis);
        v.coeffs[index] = C64::new(1.0, 0.0);
        v
    }

    /// ‖F‖ from Parseval in the orthonormal basis.
    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

impl HermiteVector {
    pub fn zero(basis: TruncationBasis) -> Self {
        let coeffs = vec![C64::new(0.0, 0.0); basis.len()];
        HermiteVector { basis, coeffs }
    }

    pub fn unit(basis: TruncationBasis, index: usize) -> Self {
        let mut v = Self::zero(basis);
        v.coeffs[index] = C64::new(1.0, 0.0);
        v
    }

    pub fn norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }
}

/// 1-d values ψ_0(x), …, ψ_k(x) by the stable normalized recurrence
/// ψ_{k+1} = √2 x √(2/(k+1)) ψ_k − √(k/(k+1)) ψ_{k−1}.
pub fn psi_eval_1d_all(max_degree: usize, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(max_degree + 1);
    let u = std::f64::consts::SQRT_2 * x;
    let psi0 = (2.0 / PI).powf(0.25) * (-x * x).exp();
    out.push(psi0);
    if max_degree == 0 {
        return out;
    }
    out.push(u * std::f64::consts::SQRT_2 * psi0);
    for k in 1..max_degree {
        let kf = k as f64;
        let next = u * (2.0 / (kf + 1.0)).sqrt() * out[k] - (kf / (kf + 1.0)).sqrt() * out[k - 1];
        out.push(next);
    }
    out
}

/// ψ_α(x) for x ∈ R^n.
pub fn psi_eval(alpha: &MultiIndex, x: &[f64]) -> f64 {
    assert_eq!(alpha.0.len(), x.len());
    alpha
        .0
        .iter()
        .zip(x)
        .map(|(&k, &xj)| *psi_eval_1d_all(k, xj).last().unwrap())
        .product()
}

/// Σ c_α ψ_α(x) for a HermiteVector.
pub fn hermite_eval(f: &HermiteVector, x: &[f64]) -> Result<C64> {
    if x.len() != f.basis.n {
        return Err(FockError::BasisMismatch(format!(
            "point dimension {} vs basis dimension {}",
            x.len(),
            f.basis.n
        )));
    }
    let tables: Vec<Vec<f64>> = x
        .iter()
        .map(|&xj| psi_eval_1d_all(f.basis.max_degree, xj))
        .collect();
    let mut sum = C64::new(0.0, 0.0);
    for (alpha, c) in f.basis.indices.iter().zip(&f.coeffs) {
        let mut p = 1.0;
        for (j, &k) in alpha.0.iter().enumerate() {
            p *= tables[j][k];
        }
        sum += c * p;
    }
    Ok(sum)
}

/// Squared-norm guard: beyond this the comparison scale e^{|z|²/2}
/// overflows f64.
pub const FOCK_EVAL_MAX_ABS2: f64 = 700.0;

/// Per-axis table m[k] = z^k/√(k!), built by the overflow-free recurrence
/// m[k+1] = m[k]·z/√(k+1).
fn monomial_table(z: C64, max_degree: usize) -> Vec<C64> {
    let mut out = Vec::with_capacity(max_degree + 1);
    out.push(C64::new(1.0, 0.0));
    for k in 0..max_degree {
        let last = out[k];
        out.push(last * z / ((k + 1) as f64).sqrt());
    }
    out
}

/// F(z) = Σ c_α z^α/√(α!).
pub fn fock_eval(f: &FockVector, z: &[C64]) -> Result<C64> {
    if z.len() != f.basis.n {
        return Err(FockError::BasisMismatch(format!(
            "point dimension {} vs basis dimension {}",
            z.len(),
            f.basis.n
        )));
    }
    let abs2: f64 = z.iter().map(|c| c.norm_sqr()).sum();
    if abs2 > FOCK_EVAL_MAX_ABS2 {
        return Err(FockError::Numeric(format!(
            "|z|² = {abs2} exceeds the {FOCK_EVAL_MAX_ABS2} overflow guard"
        )));
    }
    let tables: Vec<Vec<C64>> = z
        .iter()
        .map(|&zj| monomial_table(zj, f.basis.max_degree))
        .collect();
    let mut sum = C64::new(0.0, 0.0);
    for (alpha, c) in f.basis.indices.iter().zip(&f.coeffs) {
        let mut p = C64::new(1.0, 0.0);
        for (j, &k) in alpha.0.iter().enumerate() {
            p *= tables[j][k];
        }
        sum += c * p;
    }
    Ok(sum)
}

/// K(z, w̄) = e^{z·w̄}; ‖K(z,·)‖² = e^{|z|²}.
pub fn reproducing_kernel(z: &[C64], w: &[C64]) -> C64 {
    assert_eq!(z.len(), w.len());
    let dot: C64 = z.iter().zip(w).map(|(a, b)| a * b.conj()).sum();
    dot.exp()
}

/// W_a F(z) = F(z−a) e^{z·a − a²/2}, evaluated pointwise.
pub fn weyl_apply(f: &FockVector, a: &[f64], z: &[C64]) -> Result<C64> {
    if a.len() != f.basis.n || z.len() != f.basis.n {
        return Err(FockError::BasisMismatch(
            "translation/point dimension must match the basis".into(),
        ));
    }
    let shifted: Vec<C64> = z.iter().zip(a).map(|(&zj, &aj)| zj - aj).collect();
    let za: C64 = z.iter().zip(a).map(|(&zj, &aj)| zj * aj).sum();
    let a2: f64 = a.iter().map(|aj| aj * aj).sum();
    let factor = (za - 0.5 * a2).exp();
    Ok(fock_eval(f, &shifted)? * factor)
}

/// Exact truncated coefficients of W_a F: recombine F(z−a) binomially,
/// multiply by the e^{z·a} series (each truncated coefficient depends on
/// finitely many terms), scale by e^{-a²/2}. One axis at a time.
pub fn weyl_coeffs(f: &FockVector, a: &[f64]) -> Result<FockVector> {
    if a.len() != f.basis.n {
        return Err(FockError::BasisMismatch(
            "translation dimension must match the basis".into(),
        ));
    }
    let basis = f.basis.clone();
    let nmax = basis.max_degree;
    // Work on raw Taylor coefficients t_α = c_α/√(α!).
    let sqrt_fact: Vec<f64> = {
        let mut v = vec![1.0f64];
        for k in 1..=nmax {
            let last = *v.last().unwrap();
            v.push(last * (k as f64).sqrt());
        }
        v
    };
    let mut taylor: Vec<C64> = f
        .coeffs
        .iter()
        .zip(&basis.indices)
        .map(|(c, alpha)| {
            let mut d = *c;
            for &k in &alpha.0 {
                d /= sqrt_fact[k];
            }
            d
        })
        .collect();

    for axis in 0..basis.n {
        let aj = a[axis];
        // binomial shift: z^m → Σ_k C(m,k)(−a)^{m−k} z^k
        let mut binom = vec![vec![0.0f64; nmax + 1]; nmax + 1];
        for m in 0..=nmax {
            binom[m][0] = 1.0;
            for k in 1..=m {
                binom[m][k] = binom[m - 1][k - 1] + if k <= m - 1 { binom[m - 1][k] } else { 0.0 };
            }
        }
        let mut exp_series = vec![1.0f64];
        for k in 1..=nmax {
            let last = *exp_series.last().unwrap();
            exp_series.push(last * aj / k as f64);
        }
        let mut next = vec![C64::new(0.0, 0.0); taylor.len()];
        for (i, alpha) in basis.indices.iter().enumerate() {
            let t = taylor[i];
            if t == C64::new(0.0, 0.0) {
                continue;
            }
            let m = alpha.0[axis];
            // shifted powers of this axis
            for k in 0..=m {
                let shift_c = binom[m][k] * (-aj).powi((m - k) as i32);
                // multiply by exp(z_axis·a_j) series up to the truncation
                let mut target = alpha.clone();
                for extra in 0..=(nmax.saturating_sub(alpha.degree() - m + k)) {
                    target.0[axis] = k + extra;
                    if let Some(pos) = basis.index_of(&target) {
                        next[pos] += t * shift_c * exp_series[extra];
                    }
                }
            }
        }
        taylor = next;
    }

    let a2: f64 = a.iter().map(|x| x * x).sum();
    let scale = (-0.5 * a2).exp();
    let coeffs: Vec<C64> = taylor
        .iter()
        .zip(&basis.indices)
        .map(|(t, alpha)| {
            let mut c = t * scale;
            for &k in &alpha.0 {
                c *= sqrt_fact[k];
            }
            c
        })
        .collect();
    Ok(FockVector { basis, coeffs })
}

/// JSON form of a FockVector: {n, N, coeffs: [[re, im], …]} in basis order.
#[derive(Debug, Serialize, Deserialize)]
pub struct FockVectorJson {
    pub n: usize,
    #[serde(rename = "N")]
    pub max_degree: usize,
    pub coeffs: Vec<[f64; 2]>,
}

impl FockVector {
    pub fn to_json(&self) -> FockVectorJson {
        FockVectorJson {
            n: self.basis.n,
            max_degree: self.basis.max_degree,
            coeffs: self.coeffs.iter().map(|c| [c.re, c.im]).collect(),
        }
    }

    pub fn from_json(j: &FockVectorJson) -> Result<Self> {
        let basis = TruncationBasis::new(j.n, j.max_degree)?;
        if j.coeffs.len() != basis.len() {
            return Err(FockError::Parameter(format!(
                "coefficient count {} does not match basis size {}",
                j.coeffs.len(),
                basis.len()
            )));
        }
        Ok(FockVector {
            basis,
            coeffs: j.coeffs.iter().map(|[re, im]| C64::new(*re, *im)).collect(),
        })
    }
}

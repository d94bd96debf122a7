//! The Bargmann transform B, its inverse, and the Fourier-transform
//! diagonalization B F B⁻¹ F(z) = F(−iz).
//!
//! In the shared bases the production maps are exact on coefficients:
//! B carries ψ_α to e_α, and the Fourier transform multiplies the α-th
//! coefficient by (−i)^{|α|}. The pointwise integral transforms exist for
//! cross-validation only.

use crate::error::{FockError, Result};
use crate::hermite::{fock_eval, hermite_eval, psi_eval_1d_all, FockVector, HermiteVector};
use crate::quad::{integrate_fock_measure, integrate_weighted_rn, QuadratureRule};
use num_complex::Complex64 as C64;
use std::f64::consts::PI;

/// i^k with exact values.
pub fn i_pow(k: usize) -> C64 {
    match k % 4 {
        0 => C64::new(1.0, 0.0),
        1 => C64::new(0.0, 1.0),
        2 => C64::new(-1.0, 0.0),
        _ => C64::new(0.0, -1.0),
    }
}

/// (−i)^k with exact values.
pub fn neg_i_pow(k: usize) -> C64 {
    i_pow(k).conj()
}

/// Bf(z) = (2/π)^{n/4} ∫ f(x) e^{2x·z − x² − z²/2} dx for a pointwise rule f.
///
/// The weight e^{−x²} goes to the quadrature; the rest is sampled at the
/// real nodes.
pub fn bargmann_point_fn<F>(f: F, n: usize, z: &[C64], rule: &QuadratureRule) -> Result<C64>
where
    F: Fn(&[f64]) -> C64,
{
    if z.len() != n {
        return Err(FockError::BasisMismatch("point dimension mismatch".into()));
    }
    let z2: C64 = z.iter().map(|c| c * c).sum();
    let integral = integrate_weighted_rn(
        |x| {
            let xz: C64 = x.iter().zip(z).map(|(&xj, &zj)| zj * xj).sum();
            f(x) * (2.0 * xz).exp()
        },
        rule,
        n,
        1.0,
    )?;
    Ok((2.0 / PI).powf(n as f64 / 4.0) * (-0.5 * z2).exp() * integral)
}

/// Bf(z) for a HermiteVector.
pub fn bargmann_point(f: &HermiteVector, z: &[C64], rule: &QuadratureRule) -> Result<C64> {
    let n = f.basis.n;
    bargmann_point_fn(|x| hermite_eval(f, x).unwrap_or(C64::new(f64::NAN, 0.0)), n, z, rule)
}

/// Basis form of B: the identity on coefficient arrays, since Bψ_α = e_α.
pub fn bargmann_basis(f: &HermiteVector) -> FockVector {
    FockVector {
        basis: f.basis.clone(),
        coeffs: f.coeffs.clone(),
    }
}

/// Basis form of B⁻¹.
pub fn inverse_bargmann_basis(f: &FockVector) -> HermiteVector {
    HermiteVector {
        basis: f.basis.clone(),
        coeffs: f.coeffs.clone(),
    }
}

/// B⁻¹F(x) = (2/π)^{n/4} ∫ F(z) e^{2x·z̄ − x² − z̄²/2} dλ(z), by quadrature
/// over C^n.
pub fn inverse_bargmann_point(f: &FockVector, x: &[f64], rule: &QuadratureRule) -> Result<C64> {
    let n = f.basis.n;
    if x.len() != n {
        return Err(FockError::BasisMismatch("point dimension mismatch".into()));
    }
    let x2: f64 = x.iter().map(|v| v * v).sum();
    let integral = integrate_fock_measure(
        |z| {
            let fz = match fock_eval(f, z) {
                Ok(v) => v,
                Err(_) => return C64::new(f64::NAN, 0.0),
            };
            let zbar: Vec<C64> = z.iter().map(|c| c.conj()).collect();
            let xzbar: C64 = x.iter().zip(&zbar).map(|(&xj, &zj)| zj * xj).sum();
            let zbar2: C64 = zbar.iter().map(|c| c * c).sum();
            fz * (2.0 * xzbar - 0.5 * zbar2).exp()
        },
        rule,
        n,
    )?;
    Ok((2.0 / PI).powf(n as f64 / 4.0) * (-x2).exp() * integral)
}

/// Coefficient form of the Fourier transform F f(x) = π^{-n/2} ∫ e^{-2ix·y} f(y) dy:
/// diagonal with eigenvalue (−i)^{|α|} on ψ_α.
pub fn fourier_diagonal(f: &HermiteVector) -> HermiteVector {
    let coeffs = f
        .basis
        .indices
        .iter()
        .zip(&f.coeffs)
        .map(|(alpha, c)| neg_i_pow(alpha.degree()) * c)
        .collect();
    HermiteVector {
        basis: f.basis.clone(),
        coeffs,
    }
}

/// Coefficient form of F⁻¹: eigenvalue (+i)^{|α|}.
pub fn inverse_fourier_diagonal(f: &HermiteVector) -> HermiteVector {
    let coeffs = f
        .basis
        .indices
        .iter()
        .zip(&f.coeffs)
        .map(|(alpha, c)| i_pow(alpha.degree()) * c)
        .collect();
    HermiteVector {
        basis: f.basis.clone(),
        coeffs,
    }
}

/// Pointwise Fourier transform of a 1-d HermiteVector by quadrature;
/// cross-validation oracle for the diagonal form.
pub fn fourier_point(f: &HermiteVector, x: f64, rule: &QuadratureRule) -> Result<C64> {
    if f.basis.n != 1 {
        return Err(FockError::CostGuard(
            "pointwise Fourier oracle is implemented for n = 1".into(),
        ));
    }
    // ψ_k(y) e^{y²} is a polynomial; integrate poly × e^{-2ixy} against e^{-y²}.
    let nd = f.basis.max_degree;
    let integral = integrate_weighted_rn(
        |y| {
            let table = psi_eval_1d_all(nd, y[0]);
            let poly: C64 = f
                .basis
                .indices
                .iter()
                .zip(&f.coeffs)
                .map(|(alpha, c)| c * table[alpha.0[0]])
                .sum();
            let phase = C64::new(0.0, -2.0 * x * y[0]).exp();
            poly * (y[0] * y[0]).exp() * phase
        },
        rule,
        1,
        1.0,
    )?;
    Ok(integral / PI.sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hermite::{MultiIndex, TruncationBasis};
    use crate::quad::gauss_hermite;
    use rand::{Rng, SeedableRng};

    #[test]
    fn ground_state_maps_to_constant() {
        // Bψ₀ = e₀ ≡ 1 at arbitrary z
        let basis = TruncationBasis::new(1, 4).unwrap();
        let psi0 = HermiteVector::unit(basis, 0);
        let rule = gauss_hermite(200).unwrap();
        for z in [C64::new(0.0, 0.0), C64::new(1.2, -0.4), C64::new(-0.3, 0.9)] {
            let v = bargmann_point(&psi0, &[z], &rule).unwrap();
            assert!((v - C64::new(1.0, 0.0)).norm() < 1e-12, "{v}");
        }
    }

    #[test]
    fn first_mode_maps_to_coordinate() {
        // Bψ₁ = e₁, so at z = 1 the value is 1
        let basis = TruncationBasis::new(1, 4).unwrap();
        let psi1 = HermiteVector::unit(basis, 1);
        let rule = gauss_hermite(200).unwrap();
        let v = bargmann_point(&psi1, &[C64::new(1.0, 0.0)], &rule).unwrap();
        assert!((v - C64::new(1.0, 0.0)).norm() < 1e-12);
    }

    #[test]
    fn linearity_on_random_inputs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        let basis = TruncationBasis::new(1, 6).unwrap();
        let rule = gauss_hermite(120).unwrap();
        let mut f = HermiteVector::zero(basis.clone());
        let mut g = HermiteVector::zero(basis.clone());
        for c in f.coeffs.iter_mut().chain(g.coeffs.iter_mut()) {
            *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let (a, b) = (C64::new(0.3, -0.7), C64::new(-1.1, 0.2));
        let mut h = HermiteVector::zero(basis);
        for k in 0..h.coeffs.len() {
            h.coeffs[k] = a * f.coeffs[k] + b * g.coeffs[k];
        }
        let z = [C64::new(0.5, 0.25)];
        let vh = bargmann_point(&h, &z, &rule).unwrap();
        let vf = bargmann_point(&f, &z, &rule).unwrap();
        let vg = bargmann_point(&g, &z, &rule).unwrap();
        assert!((vh - (a * vf + b * vg)).norm() < 1e-11);
    }

    #[test]
    fn basis_map_is_isometric_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(29);
        let basis = TruncationBasis::new(1, 12).unwrap();
        let mut f = HermiteVector::zero(basis);
        for c in f.coeffs.iter_mut() {
            *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let g = bargmann_basis(&f);
        assert_eq!(g.coeffs, f.coeffs);
        assert_eq!(g.norm(), f.norm());
        let back = inverse_bargmann_basis(&g);
        assert_eq!(back.coeffs, f.coeffs);
    }

    #[test]
    fn basis_and_point_forms_agree() {
        // fock_eval(bargmann_basis(f), z) = bargmann_point(f, z) to 1e−8
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let basis = TruncationBasis::new(1, 12).unwrap();
        let rule = gauss_hermite(200).unwrap();
        let mut f = HermiteVector::zero(basis);
        for c in f.coeffs.iter_mut() {
            *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let g = bargmann_basis(&f);
        for _ in 0..5 {
            let z = [C64::new(rng.gen_range(-1.5..1.5), rng.gen_range(-1.5..1.5))];
            let via_basis = fock_eval(&g, &z).unwrap();
            let via_point = bargmann_point(&f, &z, &rule).unwrap();
            assert!(
                (via_basis - via_point).norm() < 1e-8,
                "{via_basis} vs {via_point}"
            );
        }
    }

    #[test]
    fn inverse_point_reproduces_ground_state() {
        // B⁻¹ e₀ = ψ₀; at x = 0 the value is (2/π)^{1/4}
        let basis = TruncationBasis::new(1, 4).unwrap();
        let one = FockVector::unit(basis, 0);
        let rule = gauss_hermite(60).unwrap();
        let v = inverse_bargmann_point(&one, &[0.0], &rule).unwrap();
        assert!((v.re - 0.8932438417380023).abs() < 1e-10, "{v}");
        assert!(v.im.abs() < 1e-12);
        // x = 0 for e₁: ψ₁ is odd
        let e1 = FockVector::unit(TruncationBasis::new(1, 4).unwrap(), 1);
        let v = inverse_bargmann_point(&e1, &[0.0], &rule).unwrap();
        assert!(v.norm() < 1e-12);
    }

    #[test]
    fn inverse_point_matches_hermite_eval() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let basis = TruncationBasis::new(1, 8).unwrap();
        let rule = gauss_hermite(60).unwrap();
        let mut f = FockVector::zero(basis.clone());
        for c in f.coeffs.iter_mut() {
            *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let h = inverse_bargmann_basis(&f);
        for x in [-1.3, -0.2, 0.8] {
            let via_quad = inverse_bargmann_point(&f, &[x], &rule).unwrap();
            let direct = hermite_eval(&h, &[x]).unwrap();
            assert!((via_quad - direct).norm() < 1e-8);
        }
    }

    #[test]
    fn fourier_eigenvalues_by_quadrature() {
        // F ψ_k = (−i)^k ψ_k for k ≤ 8, against the pointwise oracle
        let basis = TruncationBasis::new(1, 8).unwrap();
        let rule = gauss_hermite(200).unwrap();
        for k in 0..=8usize {
            let f = HermiteVector::unit(basis.clone(), k);
            for x in [0.3, 1.1] {
                let lhs = fourier_point(&f, x, &rule).unwrap();
                let psi = crate::hermite::psi_eval(&MultiIndex(vec![k]), &[x]);
                let rhs = neg_i_pow(k) * psi;
                assert!((lhs - rhs).norm() < 1e-8, "k={k} x={x}: {lhs} vs {rhs}");
            }
        }
    }

    #[test]
    fn fourier_fourth_power_is_identity() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(47);
        let basis = TruncationBasis::new(1, 10).unwrap();
        let mut f = HermiteVector::zero(basis);
        for c in f.coeffs.iter_mut() {
            *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let mut g = f.clone();
        for _ in 0..4 {
            g = fourier_diagonal(&g);
        }
        for (a, b) in g.coeffs.iter().zip(&f.coeffs) {
            assert_eq!(a, b);
        }
        // and F⁻¹F = Id
        let h = inverse_fourier_diagonal(&fourier_diagonal(&f));
        for (a, b) in h.coeffs.iter().zip(&f.coeffs) {
            assert!((a - b).norm() < 1e-15);
        }
    }

    #[test]
    fn rotation_lemma_in_coefficients() {
        // applying F then B equals rotating the Fock argument z → −iz
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(53);
        let basis = TruncationBasis::new(1, 10).unwrap();
        let mut f = HermiteVector::zero(basis);
        for c in f.coeffs.iter_mut() {
            *c = C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        }
        let rotated = bargmann_basis(&fourier_diagonal(&f));
        let original = bargmann_basis(&f);
        for _ in 0..20 {
            let z = C64::new(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));
            let minus_iz = C64::new(0.0, -1.0) * z;
            let lhs = fock_eval(&rotated, &[z]).unwrap();
            let rhs = fock_eval(&original, &[minus_iz]).unwrap();
            assert!((lhs - rhs).norm() < 1e-10);
        }
    }
}

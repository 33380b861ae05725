//! Group inner products `c_ℓ`, their Fourier pairing with difference counts,
//! and the coset-level `w` spectrum.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::{cluster_magnitudes, Cluster};
use crate::frame::{CyclicFrameSpec, RootsOfUnity};
use crate::numtheory::{
    self, coset_table, difference_counts, difference_counts_of, find_generator, subgroup_of_order, Subgroup,
};
use crate::report::VerificationReport;
use crate::{Error, Result};

/// `c_ℓ = (1/m) Σ_k ω^{ℓk}` for every `ℓ`, with `α_ℓ = |c_ℓ|²` and the
/// magnitude clusters of `ℓ ≠ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct InnerProductSpectrum {
    pub c: Vec<Complex64>,
    pub alpha: Vec<f64>,
    pub clusters: Vec<Cluster>,
}

impl InnerProductSpectrum {
    /// Largest off-peak magnitude, which is the frame's coherence.
    pub fn coherence(&self) -> f64 {
        self.c[1..].iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }
}

fn exponent_sum(roots: &RootsOfUnity, exponents: &[u64], l: u64) -> Complex64 {
    let n = roots.n();
    let s: Complex64 = exponents.iter().map(|&k| roots.get(numtheory::mul_mod(l, k, n))).sum();
    s / exponents.len() as f64
}

/// Evaluates `c_ℓ` straight from the exponent sums.
pub fn group_spectrum(spec: &CyclicFrameSpec) -> InnerProductSpectrum {
    let roots = RootsOfUnity::new(spec.n());
    let c: Vec<Complex64> = (0..spec.n()).map(|l| exponent_sum(&roots, spec.exponents(), l)).collect();
    let alpha = c.iter().map(|z| z.norm_sqr()).collect();
    let clusters = cluster_magnitudes(c[1..].iter().map(|z| z.norm()));
    InnerProductSpectrum { c, alpha, clusters }
}

/// Spectrum of the order-`m` subgroup frame for prime `n`.
pub fn prime_group_spectrum(n: u64, m: u64) -> Result<InnerProductSpectrum> {
    let sub = subgroup_of_order(&find_generator(n)?, m)?;
    Ok(group_spectrum(&CyclicFrameSpec::new(n, sub.elements().to_vec())?))
}

/// `α_ℓ = (1/m²) Σ_t a_t ω^{ℓt}`.
pub fn alpha_from_counts(counts: &[u64], m: u64) -> Vec<f64> {
    let n = counts.len() as u64;
    let roots = RootsOfUnity::new(n);
    let scale = 1.0 / (m * m) as f64;
    (0..n)
        .map(|l| {
            let s: Complex64 = counts
                .iter()
                .enumerate()
                .filter(|(_, &a)| a != 0)
                .map(|(t, &a)| roots.get(numtheory::mul_mod(l, t as u64, n)) * a as f64)
                .sum();
            s.re * scale
        })
        .collect()
}

/// `a_t = (m²/n) Σ_ℓ α_ℓ ω^{−tℓ}`.
pub fn counts_from_alpha(alpha: &[f64], m: u64) -> Vec<f64> {
    let n = alpha.len() as u64;
    let roots = RootsOfUnity::new(n);
    let scale = (m * m) as f64 / n as f64;
    (0..n)
        .map(|t| {
            let s: Complex64 = alpha
                .iter()
                .enumerate()
                .map(|(l, &a)| roots.get(n - numtheory::mul_mod(t, l as u64, n)) * a)
                .sum();
            s.re * scale
        })
        .collect()
}

/// Both directions of the pairing between `α` and the difference counts `a`.
#[derive(Debug, Clone, PartialEq)]
pub struct FourierPairing {
    /// Exact counts from pair enumeration.
    pub counts: Vec<u64>,
    /// `α` computed directly from the exponent sums.
    pub alpha: Vec<f64>,
    /// `α` reconstructed from `counts`.
    pub alpha_from_a: Vec<f64>,
    /// Counts reconstructed from `alpha_from_a`.
    pub a_from_alpha: Vec<f64>,
}

impl FourierPairing {
    /// Largest deviation of the reconstructed counts from the exact integers.
    pub fn count_error(&self) -> f64 {
        self.counts
            .iter()
            .zip(&self.a_from_alpha)
            .map(|(&a, &b)| (a as f64 - b).abs())
            .fold(0.0, f64::max)
    }

    /// Largest deviation between the direct and reconstructed `α`.
    pub fn alpha_error(&self) -> f64 {
        self.alpha
            .iter()
            .zip(&self.alpha_from_a)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Reconstructed counts rounded to the nearest integer.
    pub fn rounded_counts(&self) -> Vec<i64> {
        self.a_from_alpha.iter().map(|a| a.round() as i64).collect()
    }
}

/// Runs `a → α → a` for any exponent set, subgroup or not.
pub fn fourier_pairing(spec: &CyclicFrameSpec) -> FourierPairing {
    let m = spec.m() as u64;
    let counts = difference_counts_of(spec.n(), spec.exponents()).counts().to_vec();
    let alpha = group_spectrum(spec).alpha;
    let alpha_from_a = alpha_from_counts(&counts, m);
    let a_from_alpha = counts_from_alpha(&alpha_from_a, m);
    FourierPairing { counts, alpha, alpha_from_a, a_from_alpha }
}

/// `[c_1, c_x, …, c_{x^{r−1}}]`, one value per coset of `K`.
pub fn coset_inner_products(sub: &Subgroup) -> Vec<Complex64> {
    let n = sub.n();
    let roots = RootsOfUnity::new(n);
    let ctx = sub.context();
    (0..sub.index()).map(|d| exponent_sum(&roots, sub.elements(), ctx.power(d))).collect()
}

/// `w = F·[c_1, c_x, …, c_{x^{r−1}}]` with `F_ij = γ^{ij}`, `γ = e^{2πi/r}`.
#[derive(Debug, Clone, PartialEq)]
pub struct WSpectrum {
    pub n: u64,
    pub m: u64,
    pub coset_values: Vec<Complex64>,
    pub w: Vec<Complex64>,
    /// `β = √((1/m)(r + 1/m))`.
    pub beta: f64,
}

impl WSpectrum {
    pub fn r(&self) -> usize {
        self.w.len()
    }
}

/// Length-`r` DFT of the coset inner products.
pub fn w_spectrum(n: u64, m: u64) -> Result<WSpectrum> {
    let sub = subgroup_of_order(&find_generator(n)?, m)?;
    Ok(w_spectrum_of(&sub))
}

pub fn w_spectrum_of(sub: &Subgroup) -> WSpectrum {
    let coset_values = coset_inner_products(sub);
    let r = coset_values.len();
    let w = (0..r)
        .map(|i| {
            coset_values
                .iter()
                .enumerate()
                .map(|(j, &c)| {
                    let (s, co) = (TAU * ((i * j) % r) as f64 / r as f64).sin_cos();
                    Complex64::new(co, s) * c
                })
                .sum()
        })
        .collect();
    let m = sub.order();
    WSpectrum { n: sub.n(), m, coset_values, w, beta: super::bounds::beta(m, r as u64) }
}

/// Checks `w_1 = −1/m`, `|w_i| = β` otherwise, and the conjugation symmetry
/// that matches the parity of `m`.
pub fn verify_w_spectrum(sub: &Subgroup, tol: f64) -> VerificationReport {
    let ws = w_spectrum_of(sub);
    let (n, m, r) = (ws.n, ws.m, ws.r());
    let tag = format!("(n={n} m={m} r={r})");
    let mut report = VerificationReport::new();

    let w1 = ws.w[0];
    let target = -1.0 / m as f64;
    report.record(
        format!("w_1 = -1/m {tag}"),
        (w1 - Complex64::new(target, 0.0)).norm() <= tol,
        format!("w_1={w1:.12} expected {target:.12}"),
    );

    let worst = ws.w[1..].iter().map(|z| (z.norm() - ws.beta).abs()).fold(0.0, f64::max);
    report.record(format!("|w_i| = beta for i > 1 {tag}"), worst <= tol, format!("max deviation {worst:.3e}, beta={:.12}", ws.beta));

    let conj_dev = |sign: &dyn Fn(usize) -> f64| {
        (0..r)
            .map(|i| (ws.w[i].conj() - ws.w[(r - i) % r] * sign(i)).norm())
            .fold(0.0, f64::max)
    };
    if sub.contains_minus_one() {
        let imag = ws.coset_values.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
        report.record(format!("coset inner products are real {tag}"), imag <= tol, format!("max |Im c| {imag:.3e}"));
        let dev = conj_dev(&|_| 1.0);
        report.record(format!("w*_i = w_(r-i+2) {tag}"), dev <= tol, format!("max deviation {dev:.3e}"));
    } else if n % 2 == 1 && m % 2 == 1 {
        let half = r / 2;
        let pair = (0..r)
            .map(|d| (ws.coset_values[d] - ws.coset_values[(d + half) % r].conj()).norm())
            .fold(0.0, f64::max);
        report.record(format!("c_(x^d) = conj c_(x^(d+r/2)) {tag}"), pair <= tol, format!("max deviation {pair:.3e}"));
        let dev = conj_dev(&|i| if i % 2 == 0 { 1.0 } else { -1.0 });
        report.record(format!("w*_i = (-1)^(i-1) w_(r-i+2) {tag}"), dev <= tol, format!("max deviation {dev:.3e}"));
    }
    report
}

/// Residual of the index-3 relation `cc* = (1/m)[I − diag(c) + P(I + A)C]`.
///
/// `c = [c_1, c_x, c_{x²}]`, `C_ij = c_{x^{(i−j) mod 3}}`, `P` swaps the last two
/// coordinates, and `A_ij = a_{x^{(j−i) mod 3}}` built from exact difference counts.
pub fn verify_r3_matrix_identity(n: u64) -> Result<f64> {
    if n < 4 || (n - 1) % 3 != 0 {
        return Err(Error::precondition("verify_r3_matrix_identity", "(n-1)/m = 3"));
    }
    let m = (n - 1) / 3;
    let sub = subgroup_of_order(&find_generator(n)?, m)?;
    let c = coset_inner_products(&sub);
    let counts = difference_counts(&sub);
    let table = coset_table(&sub);
    let a: Vec<f64> = (0..3).map(|d| counts.get(table.representative(d)) as f64).collect();

    let zero = Complex64::new(0.0, 0.0);
    let one = Complex64::new(1.0, 0.0);
    let mut big_c = [[zero; 3]; 3];
    let mut i_plus_a = [[zero; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            big_c[i][j] = c[(i + 3 - j) % 3];
            i_plus_a[i][j] = Complex64::new(a[(j + 3 - i) % 3], 0.0) + if i == j { one } else { zero };
        }
    }
    let perm = [0usize, 2, 1];
    let mut residual = 0.0f64;
    for i in 0..3 {
        for j in 0..3 {
            // (P(I+A)C)_ij = ((I+A)C)_{perm(i), j}
            let pac: Complex64 = (0..3).map(|k| i_plus_a[perm[i]][k] * big_c[k][j]).sum();
            let mut rhs = pac;
            if i == j {
                rhs += one - c[i];
            }
            rhs /= m as f64;
            residual = residual.max((c[i] * c[j].conj() - rhs).norm());
        }
    }
    Ok(residual)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn squares_13() -> CyclicFrameSpec {
        CyclicFrameSpec::new(13, vec![1, 3, 4, 9, 10, 12]).unwrap()
    }

    #[test]
    fn seven_three_single_cluster() {
        let s = prime_group_spectrum(7, 3).unwrap();
        assert_eq!(s.clusters.len(), 1);
        assert_eq!(s.clusters[0].multiplicity, 6);
        assert_abs_diff_eq!(s.clusters[0].magnitude, 8f64.sqrt() / 6.0, epsilon = 1e-12);
        assert_eq!(s.c[0], Complex64::new(1.0, 0.0));
        assert_abs_diff_eq!(s.alpha[0], 1.0, epsilon = 1e-15);
        let total: Complex64 = s.c.iter().sum();
        assert!(total.norm() <= 1e-12);
    }

    #[test]
    fn full_group_has_flat_spectrum() {
        let s = prime_group_spectrum(13, 12).unwrap();
        assert_eq!(s.clusters.len(), 1);
        assert_abs_diff_eq!(s.clusters[0].magnitude, 1.0 / 12.0, epsilon = 1e-12);
    }

    #[test]
    fn four_ninety_nine_has_three_values() {
        let s = prime_group_spectrum(499, 166).unwrap();
        assert_eq!(s.clusters.len(), 3);
        assert!(s.clusters.iter().all(|c| c.multiplicity == 166));
        assert!((s.coherence() - 0.0888).abs() <= 5e-4);
    }

    #[test]
    fn pairing_examples() {
        let p = fourier_pairing(&CyclicFrameSpec::new(7, vec![1, 2, 4]).unwrap());
        assert_eq!(p.rounded_counts(), vec![3, 1, 1, 1, 1, 1, 1]);
        assert!(p.count_error() <= 1e-9);

        let p = fourier_pairing(&squares_13());
        assert_eq!(p.rounded_counts()[1], 2);
        assert_eq!(p.rounded_counts()[2], 3);
        assert_eq!(p.rounded_counts()[0], 6);
        assert_abs_diff_eq!(p.alpha_from_a[0], 1.0, epsilon = 1e-12);
        assert!(p.alpha_error() <= 1e-12);
    }

    #[test]
    fn pairing_on_non_subgroup_set() {
        let p = fourier_pairing(&CyclicFrameSpec::new(20, vec![0, 3, 7, 8, 15]).unwrap());
        assert!(p.count_error() <= 1e-9);
        assert!(p.alpha_error() <= 1e-12);
    }

    #[test]
    fn w_spectrum_examples() {
        let ws = w_spectrum(13, 4).unwrap();
        assert_abs_diff_eq!(ws.w[0].re, -0.25, epsilon = 1e-12);
        assert_abs_diff_eq!(ws.w[1].norm(), 0.8125f64.sqrt(), epsilon = 1e-12);
        assert_abs_diff_eq!(ws.w[2].norm(), 0.8125f64.sqrt(), epsilon = 1e-12);

        let ws = w_spectrum(7, 3).unwrap();
        assert_abs_diff_eq!(ws.w[0].re, -1.0 / 3.0, epsilon = 1e-12);
        assert_abs_diff_eq!(ws.w[1].norm(), (7.0f64 / 9.0).sqrt(), epsilon = 1e-12);

        let sub = subgroup_of_order(&find_generator(13).unwrap(), 3).unwrap();
        let report = verify_w_spectrum(&sub, 1e-9);
        assert!(report.all_passed(), "{report}");
        assert!(report.checks.iter().any(|c| c.name.starts_with("w*_i = (-1)^(i-1)")));
    }

    #[test]
    fn r3_identity() {
        assert!(verify_r3_matrix_identity(13).unwrap() <= 1e-9);
        assert!(verify_r3_matrix_identity(499).unwrap() <= 1e-9);
        assert!(verify_r3_matrix_identity(11).is_err());
        // n = 7 has index 3 through m = 2.
        assert!(verify_r3_matrix_identity(7).unwrap() <= 1e-9);
    }
}

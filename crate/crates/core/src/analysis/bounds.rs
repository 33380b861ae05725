//! Closed-form coherence bounds for subgroup frames.

use crate::{Error, Result};

/// `√((n' − m')/(m'(n' − 1)))`, the least coherence of `n'` unit vectors in `C^{m'}`.
pub fn welch_bound(n: u64, m: u64) -> Result<f64> {
    if m < 1 || n <= m {
        return Err(Error::precondition("welch_bound", format!("n' > m' >= 1 (got n'={n}, m'={m})")));
    }
    Ok(((n - m) as f64 / (m as f64 * (n - 1) as f64)).sqrt())
}

/// Coherence ceiling for a unit-norm tight frame with at most `r` distinct
/// off-diagonal magnitudes: `√r` times the Welch bound.
pub fn sqrt_r_bound(n: u64, m: u64, r: u64) -> Result<f64> {
    if r < 1 {
        return Err(Error::precondition("sqrt_r_bound", "r >= 1"));
    }
    Ok((r as f64).sqrt() * welch_bound(n, m)?)
}

/// `β = √((1/m)(r + 1/m))`.
pub fn beta(m: u64, r: u64) -> f64 {
    let inv = 1.0 / m as f64;
    (inv * (r as f64 + inv)).sqrt()
}

/// Which index-2 case applies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum R2Branch {
    /// `4 | n − 1`: two magnitudes `(−1 ± √(1+2m))/(2m)`.
    TwoValued,
    /// `n ≡ 3 mod 4`: equiangular, coherence equals the Welch bound.
    Equiangular,
}

/// Exact coherence of the index-2 subgroup frame.
pub fn exact_coherence_index2(n: u64, m: u64) -> Result<(f64, R2Branch)> {
    if n < 3 || 2 * m != n - 1 {
        return Err(Error::precondition("exact_coherence_index2", "(n-1)/m = 2"));
    }
    let (nf, mf) = (n as f64, m as f64);
    if (n - 1) % 4 == 0 {
        let v = ((nf - mf - 0.5) / (mf * (nf - 1.0))).sqrt() + 1.0 / (2.0 * mf);
        Ok((v, R2Branch::TwoValued))
    } else {
        Ok((welch_bound(n, m)?, R2Branch::Equiangular))
    }
}

/// Index-3 bounds: a proven upper bound and a lower bound that holds only
/// asymptotically in `m`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Index3Bounds {
    pub upper: f64,
    pub asymptotic_lower: f64,
}

pub fn index3_bounds(m: u64) -> Result<Index3Bounds> {
    if m < 1 {
        return Err(Error::TooSmall { name: "m", min: 1, got: 0 });
    }
    let inv = 1.0 / m as f64;
    Ok(Index3Bounds {
        upper: (2.0 * (inv * (3.0 + inv)).sqrt() + inv) / 3.0,
        asymptotic_lower: inv.sqrt(),
    })
}

/// General-index upper bound `(1/r)((r − 1)β + 1/m)`.
pub fn coset_upper_bound(m: u64, r: u64) -> Result<f64> {
    if m < 1 || r < 1 {
        return Err(Error::precondition("coset_upper_bound", "m, r >= 1"));
    }
    let rf = r as f64;
    Ok(((rf - 1.0) * beta(m, r) + 1.0 / m as f64) / rf)
}

/// Sharper bound for odd `m` (which forces `r` even when `n` is an odd prime):
/// `(1/r)√((1/m + (r/2 − 1)β)² + (r/2)²β²)`.
pub fn odd_subgroup_upper_bound(m: u64, r: u64) -> Result<f64> {
    if m % 2 == 0 {
        return Err(Error::precondition("odd_subgroup_upper_bound", format!("m odd (got {m})")));
    }
    if r == 0 || r % 2 == 1 {
        return Err(Error::precondition(
            "odd_subgroup_upper_bound",
            format!("r even (m={m}, r={r} cannot come from an odd prime n)"),
        ));
    }
    let b = beta(m, r);
    let half = r as f64 / 2.0;
    let x = 1.0 / m as f64 + (half - 1.0) * b;
    Ok((x * x + half * half * b * b).sqrt() / r as f64)
}

/// Every bound that applies to the order-`m` subgroup frame of `Z/n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundSet {
    pub n: u64,
    pub m: u64,
    pub r: u64,
    pub welch: f64,
    pub sqrt_r: f64,
    pub index2_exact: Option<(f64, R2Branch)>,
    pub index3: Option<Index3Bounds>,
    pub general_upper: f64,
    pub odd_m_upper: Option<f64>,
    pub beta: f64,
}

impl BoundSet {
    /// Requires `m | n − 1`.
    pub fn for_prime_group(n: u64, m: u64) -> Result<Self> {
        if m < 1 || n < 3 || (n - 1) % m != 0 {
            return Err(Error::NotDivisor { n, m });
        }
        let r = (n - 1) / m;
        Ok(Self {
            n,
            m,
            r,
            welch: welch_bound(n, m)?,
            sqrt_r: sqrt_r_bound(n, m, r)?,
            index2_exact: if r == 2 { Some(exact_coherence_index2(n, m)?) } else { None },
            index3: if r == 3 { Some(index3_bounds(m)?) } else { None },
            general_upper: coset_upper_bound(m, r)?,
            odd_m_upper: if m % 2 == 1 && r % 2 == 0 { Some(odd_subgroup_upper_bound(m, r)?) } else { None },
            beta: beta(m, r),
        })
    }

    /// Smallest closed-form value that caps the coherence, with its name.
    ///
    /// The index-2 value is exact and wins ties; for `r = 2, 4 | n − 1` it
    /// coincides with the coset bound.
    pub fn best(&self) -> (&'static str, f64) {
        let candidates = [
            ("index2-exact", self.index2_exact.map(|(v, _)| v)),
            ("odd-m", self.odd_m_upper),
            ("coset", Some(self.general_upper)),
            ("sqrt-r", Some(self.sqrt_r)),
        ];
        let mut best = ("sqrt-r", self.sqrt_r);
        for (name, value) in candidates.into_iter().rev() {
            if let Some(v) = value {
                if v <= best.1 + 1e-15 {
                    best = (name, v);
                }
            }
        }
        best
    }

    pub fn best_upper(&self) -> f64 {
        self.best().1
    }

    pub fn best_upper_name(&self) -> &'static str {
        self.best().0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn welch_values() {
        assert_abs_diff_eq!(welch_bound(251, 125).unwrap(), 0.0635, epsilon = 5e-5);
        assert_abs_diff_eq!(welch_bound(521, 130).unwrap(), 0.0761, epsilon = 5e-5);
        assert_abs_diff_eq!(welch_bound(3, 2).unwrap(), 0.5, epsilon = 1e-15);
        assert!(welch_bound(5, 5).is_err());
    }

    #[test]
    fn sqrt_r_values() {
        assert_eq!(sqrt_r_bound(20, 5, 1).unwrap(), welch_bound(20, 5).unwrap());
        assert_abs_diff_eq!(sqrt_r_bound(499, 166, 3).unwrap(), 0.1100, epsilon = 1e-3);
        assert!(sqrt_r_bound(503, 251, 2).unwrap() >= 0.0447);
    }

    #[test]
    fn index2_branches() {
        let (v, b) = exact_coherence_index2(13, 6).unwrap();
        assert_eq!(b, R2Branch::TwoValued);
        assert_abs_diff_eq!(v, 0.383796, epsilon = 1e-6);
        let (v, b) = exact_coherence_index2(7, 3).unwrap();
        assert_eq!(b, R2Branch::Equiangular);
        assert_abs_diff_eq!(v, (4.0f64 / 18.0).sqrt(), epsilon = 1e-12);
        assert_eq!(exact_coherence_index2(251, 125).unwrap().1, R2Branch::Equiangular);
        assert!(exact_coherence_index2(13, 4).is_err());
    }

    #[test]
    fn index3_values() {
        let b = index3_bounds(166).unwrap();
        assert_abs_diff_eq!(b.upper, 0.09172, epsilon = 1e-5);
        assert_abs_diff_eq!(b.asymptotic_lower, 0.07761, epsilon = 1e-5);
        assert_abs_diff_eq!(index3_bounds(4).unwrap().upper, 0.684259, epsilon = 1e-6);
        let big = index3_bounds(1_000_000_000).unwrap();
        assert_abs_diff_eq!(big.upper / big.asymptotic_lower, (4.0f64 / 3.0).sqrt(), epsilon = 1e-4);
    }

    #[test]
    fn general_and_odd_values() {
        assert_abs_diff_eq!(coset_upper_bound(130, 4).unwrap(), 0.13361, epsilon = 1e-5);
        assert_abs_diff_eq!(coset_upper_bound(37, 1).unwrap(), 1.0 / 37.0, epsilon = 1e-15);
        assert_abs_diff_eq!(coset_upper_bound(166, 3).unwrap(), index3_bounds(166).unwrap().upper, epsilon = 1e-15);
        assert_abs_diff_eq!(odd_subgroup_upper_bound(175, 4).unwrap(), 0.08522, epsilon = 1e-5);
        let m = 9u64;
        let b = beta(m, 2);
        assert_abs_diff_eq!(
            odd_subgroup_upper_bound(m, 2).unwrap(),
            0.5 * ((1.0 / 81.0) + b * b).sqrt(),
            epsilon = 1e-15
        );
        assert!(odd_subgroup_upper_bound(333, 3).is_err());
        assert!(odd_subgroup_upper_bound(4, 2).is_err());
    }

    #[test]
    fn odd_bound_never_exceeds_general() {
        for m in (1..400).step_by(2) {
            for r in (2..40).step_by(2) {
                assert!(odd_subgroup_upper_bound(m, r).unwrap() <= coset_upper_bound(m, r).unwrap() + 1e-15);
            }
        }
    }

    #[test]
    fn bound_set() {
        let b = BoundSet::for_prime_group(701, 175).unwrap();
        assert_eq!(b.r, 4);
        assert!(b.odd_m_upper.is_some());
        assert_eq!(b.best_upper_name(), "odd-m");
        let b = BoundSet::for_prime_group(13, 6).unwrap();
        assert_eq!(b.best_upper_name(), "index2-exact");
        assert!(BoundSet::for_prime_group(13, 5).is_err());
    }
}

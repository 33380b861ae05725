//! Comparisons between dihedral frames and the cyclic frames they extend.

use num_complex::Complex64;

use super::{distinct_magnitude_count, orbit_coherence, orbit_spectrum};
use crate::frame::{build_cyclic_frame, build_dihedral_frame, CyclicFrameSpec, DihedralFrameSpec, FrameMatrix};
use crate::report::VerificationReport;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Dominance {
    pub mu_cyclic: f64,
    pub mu_dihedral: f64,
    pub dominated: bool,
}

/// Compares coherences of a cyclic frame and a dihedral frame over the same `(n, K)`.
pub fn dihedral_dominance(cyc: &FrameMatrix, dih: &FrameMatrix) -> Result<Dominance> {
    let (cm, dm) = (cyc.metadata(), dih.metadata());
    if !matches!(cm.get("family"), Some("cyclic" | "prime-cyclic")) || dm.get("family") != Some("dihedral") {
        return Err(Error::Mismatch("expected a cyclic frame and a dihedral frame".into()));
    }
    for key in ["n", "exponents"] {
        if cm.get(key).is_none() || cm.get(key) != dm.get(key) {
            return Err(Error::Mismatch(format!(
                "{key} differs: {:?} vs {:?}",
                cm.get(key),
                dm.get(key)
            )));
        }
    }
    let mu_cyclic = orbit_coherence(cyc)?;
    let mu_dihedral = orbit_coherence(dih)?;
    Ok(Dominance { mu_cyclic, mu_dihedral, dominated: mu_dihedral <= mu_cyclic + 1e-9 })
}

/// `D(n − 1)/m`, the most distinct inner-product values a dihedral subgroup frame can have.
pub fn dihedral_distinct_count_bound(order: u64, n: u64, m: u64) -> Result<u64> {
    if m == 0 || n < 2 || (n - 1) % m != 0 {
        return Err(Error::NotDivisor { n, m });
    }
    Ok(order * (n - 1) / m)
}

/// Checks one `(n, K, twist)` instance: tightness, dominance, the distinct
/// value count and, for `D = 2`, the real/imaginary split of `c_ℓ`.
pub fn verify_dihedral_instance(spec: &DihedralFrameSpec, subgroup: bool) -> Result<VerificationReport> {
    let n = spec.n();
    let m = spec.m() as u64;
    let big_d = spec.order();
    let tag = format!("(n={n} m={m} twist={} D={big_d})", spec.twist());
    let dih = build_dihedral_frame(spec);
    let cyc = build_cyclic_frame(&CyclicFrameSpec::new(n, spec.exponents().to_vec())?);
    let mut report = VerificationReport::new();

    let t = super::tightness(&dih);
    let lambda = n as f64 / m as f64;
    report.record(
        format!("dihedral frame tight with lambda = n/m {tag}"),
        t.is_tight && (t.lambda - lambda).abs() <= 1e-9,
        format!("lambda={:.12} residual={:.3e}", t.lambda, t.residual),
    );

    let dom = dihedral_dominance(&cyc, &dih)?;
    report.record(
        format!("mu_dihedral <= mu_cyclic {tag}"),
        dom.dominated,
        format!("mu_dih={:.9} mu_cyc={:.9}", dom.mu_dihedral, dom.mu_cyclic),
    );

    if subgroup {
        let bound = dihedral_distinct_count_bound(big_d, n, m)?;
        let count = distinct_magnitude_count(&dih)? as u64;
        report.record(format!("distinct magnitudes <= D(n-1)/m {tag}"), count <= bound, format!("{count} <= {bound}"));
    }

    if big_d == 2 {
        let dev = d2_inner_product_deviation(&cyc, &dih)?;
        report.record(format!("D=2 inner products are Re c and -Im c {tag}"), dev <= 1e-9, format!("max deviation {dev:.3e}"));
    }
    Ok(report)
}

/// For `D = 2`, column `(ℓ, 0)` pairs with column 0 to `Re c_ℓ` and column `(ℓ, 1)` to `−Im c_ℓ`.
pub fn d2_inner_product_deviation(cyc: &FrameMatrix, dih: &FrameMatrix) -> Result<f64> {
    if dih.metadata().get_u64("D") != Some(2) {
        return Err(Error::precondition("d2_inner_product_deviation", "D = 2"));
    }
    let c = orbit_spectrum(cyc)?;
    let d = orbit_spectrum(dih)?;
    if d.len() != 2 * c.len() {
        return Err(Error::Mismatch("dihedral frame must have twice the cyclic column count".into()));
    }
    Ok(c
        .iter()
        .enumerate()
        .map(|(l, cl)| {
            let a = (d[2 * l] - Complex64::new(cl.re, 0.0)).norm();
            let b = (d[2 * l + 1] - Complex64::new(-cl.im, 0.0)).norm();
            a.max(b)
        })
        .fold(0.0, f64::max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::build_prime_group_frame;
    use approx::assert_abs_diff_eq;

    #[test]
    fn seven_three_d2() {
        let spec = DihedralFrameSpec::new(7, 6, vec![1, 2, 4]).unwrap();
        let dih = build_dihedral_frame(&spec);
        let cyc = build_cyclic_frame(&CyclicFrameSpec::new(7, vec![1, 2, 4]).unwrap());
        let dom = dihedral_dominance(&cyc, &dih).unwrap();
        assert_abs_diff_eq!(dom.mu_dihedral, 7f64.sqrt() / 6.0, epsilon = 1e-12);
        assert_abs_diff_eq!(dom.mu_cyclic, 8f64.sqrt() / 6.0, epsilon = 1e-12);
        assert!(dom.dominated);
        assert_abs_diff_eq!(super::super::coherence(&dih).unwrap(), 7f64.sqrt() / 6.0, epsilon = 1e-12);
        assert!(distinct_magnitude_count(&dih).unwrap() <= 4);
        let t = super::super::tightness(&dih);
        assert!(t.is_tight);
        assert_abs_diff_eq!(t.lambda, 7.0 / 3.0, epsilon = 1e-12);
        let report = verify_dihedral_instance(&spec, true).unwrap();
        assert!(report.all_passed(), "{report}");
    }

    #[test]
    fn trivial_twist_matches() {
        let spec = DihedralFrameSpec::new(13, 1, vec![1, 5, 8, 12]).unwrap();
        let dih = build_dihedral_frame(&spec);
        let cyc = build_cyclic_frame(&CyclicFrameSpec::new(13, vec![1, 5, 8, 12]).unwrap());
        let dom = dihedral_dominance(&cyc, &dih).unwrap();
        assert_abs_diff_eq!(dom.mu_dihedral, dom.mu_cyclic, epsilon = 1e-12);
    }

    #[test]
    fn thirteen_cubes_reflection() {
        let spec = DihedralFrameSpec::new(13, 12, vec![1, 5, 8, 12]).unwrap();
        assert!(verify_dihedral_instance(&spec, true).unwrap().all_passed());
    }

    #[test]
    fn mismatched_inputs() {
        let cyc = build_prime_group_frame(13, 4).unwrap();
        let dih = build_dihedral_frame(&DihedralFrameSpec::new(13, 12, vec![1, 3, 9]).unwrap());
        assert!(dihedral_dominance(&cyc, &dih).is_err());
        assert!(dihedral_dominance(&dih, &cyc).is_err());
    }

    #[test]
    fn count_bound() {
        assert_eq!(dihedral_distinct_count_bound(2, 499, 166).unwrap(), 6);
        assert_eq!(dihedral_distinct_count_bound(2, 7, 3).unwrap(), 4);
        assert_eq!(dihedral_distinct_count_bound(1, 13, 4).unwrap(), 3);
        assert!(dihedral_distinct_count_bound(2, 13, 5).is_err());
    }
}

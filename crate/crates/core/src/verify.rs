//! Exhaustive sweeps over every prime `n` up to a limit and every divisor `m` of `n − 1`.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;

use crate::analysis::bounds::BoundSet;
use crate::analysis::dihedral::verify_dihedral_instance;
use crate::analysis::spectrum::{
    fourier_pairing, group_spectrum, verify_r3_matrix_identity, verify_w_spectrum,
};
use crate::analysis::verify_gram_multiplicity;
use crate::frame::{build_prime_group_frame, zadoff_chu, CyclicFrameSpec, DihedralFrameSpec};
use crate::numtheory::{
    self, coset_table, divisors, find_generator, multiplicative_order, primes_up_to, subgroup_of_order,
    verify_translation_identities,
};
use crate::report::VerificationReport;
use crate::{Error, Result};

/// Largest `n` for which the spectra suite also checks the full Gram matrix.
pub const GRAM_CHECK_MAX_N: u64 = 100;
/// Largest twist order exercised by the dihedral suite.
pub const DIHEDRAL_MAX_ORDER: u64 = 8;
/// Largest dihedral frame dimension `Dm` exercised by the dihedral suite.
pub const DIHEDRAL_MAX_DIM: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Numtheory,
    Spectra,
    Bounds,
    Dihedral,
    Pairing,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::Numtheory, Suite::Spectra, Suite::Bounds, Suite::Dihedral, Suite::Pairing];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Numtheory => "numtheory",
            Suite::Spectra => "spectra",
            Suite::Bounds => "bounds",
            Suite::Dihedral => "dihedral",
            Suite::Pairing => "pairing",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::Invalid(format!("unknown suite {s:?}")))
    }
}

/// `(n, m)` for every odd prime `n ≤ max_n` and every divisor `m` of `n − 1`.
pub fn prime_divisor_pairs(max_n: u64) -> Vec<(u64, u64)> {
    primes_up_to(max_n)
        .into_iter()
        .filter(|&n| n >= 3)
        .flat_map(|n| divisors(n - 1).into_iter().map(move |m| (n, m)))
        .collect()
}

pub fn run_suite(suite: Suite, max_n: u64) -> Result<VerificationReport> {
    match suite {
        Suite::Numtheory => numtheory_suite(max_n),
        Suite::Spectra => spectra_suite(max_n),
        Suite::Bounds => bounds_suite(max_n),
        Suite::Dihedral => dihedral_suite(max_n),
        Suite::Pairing => pairing_suite(max_n),
    }
}

fn numtheory_suite(max_n: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for (n, m) in prime_divisor_pairs(max_n) {
        let sub = subgroup_of_order(&find_generator(n)?, m)?;
        let tag = format!("(n={n} m={m})");
        let els = sub.elements();
        let closed = els.contains(&1)
            && els.iter().all(|&a| els.iter().all(|&b| sub.contains(numtheory::mul_mod(a, b, n))));
        report.record(format!("subgroup closed under multiplication {tag}"), closed && els.len() as u64 == m, "");
        let r = sub.index();
        let mut powers: Vec<u64> = (1..n).map(|a| numtheory::pow_mod(a, r, n)).collect();
        powers.sort_unstable();
        powers.dedup();
        report.record(format!("subgroup equals the r-th powers {tag}"), powers == els, "");
        let table = coset_table(&sub);
        let covered: usize = table.cosets().iter().map(Vec::len).sum();
        let total = (1..n).all(|t| table.coset_index(t).is_some());
        report.record(format!("cosets partition the units {tag}"), covered as u64 == n - 1 && total, "");
        report.extend(verify_translation_identities(&sub));
    }
    Ok(report)
}

fn spectra_suite(max_n: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for (n, m) in prime_divisor_pairs(max_n) {
        let sub = subgroup_of_order(&find_generator(n)?, m)?;
        let r = sub.index();
        let tag = format!("(n={n} m={m} r={r})");
        let spec = group_spectrum(&CyclicFrameSpec::new(n, sub.elements().to_vec())?);
        let clusters = &spec.clusters;
        let mult_ok = clusters.iter().all(|c| c.multiplicity > 0 && c.multiplicity as u64 % m == 0);
        report.record(
            format!("at most r clusters, multiplicities multiples of m {tag}"),
            clusters.len() as u64 <= r && mult_ok,
            format!(
                "{} clusters: {}",
                clusters.len(),
                clusters.iter().map(|c| format!("{:.6}x{}", c.magnitude, c.multiplicity)).collect::<Vec<_>>().join(" ")
            ),
        );
        let total: Complex64 = spec.c.iter().sum();
        report.record(format!("inner products sum to zero {tag}"), total.norm() <= 1e-9, format!("|sum|={:.3e}", total.norm()));
        if r == 3 {
            let imag = spec.c.iter().map(|z| z.im.abs()).fold(0.0, f64::max);
            report.record(format!("index-3 inner products are real {tag}"), imag <= 1e-9, format!("max |Im c|={imag:.3e}"));
            let residual = verify_r3_matrix_identity(n)?;
            report.record(format!("index-3 matrix identity {tag}"), residual <= 1e-9, format!("residual {residual:.3e}"));
        }
        report.extend(verify_w_spectrum(&sub, 1e-9));
        if n <= GRAM_CHECK_MAX_N {
            report.extend(verify_gram_multiplicity(&build_prime_group_frame(n, m)?, 1e-9)?);
        }
    }
    Ok(report)
}

fn bounds_suite(max_n: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    const SLACK: f64 = 1e-9;
    for (n, m) in prime_divisor_pairs(max_n) {
        let sub = subgroup_of_order(&find_generator(n)?, m)?;
        let mu = group_spectrum(&CyclicFrameSpec::new(n, sub.elements().to_vec())?).coherence();
        let b = BoundSet::for_prime_group(n, m)?;
        let tag = format!("(n={n} m={m} r={})", b.r);
        report.record(format!("coherence >= Welch {tag}"), mu >= b.welch - SLACK, format!("mu={mu:.12} welch={:.12}", b.welch));
        let mut chain = vec![("coherence", mu)];
        if let Some(v) = b.odd_m_upper {
            chain.push(("odd-m bound", v));
        }
        chain.push(("coset bound", b.general_upper));
        chain.push(("sqrt-r bound", b.sqrt_r));
        let ok = chain.windows(2).all(|w| w[0].1 <= w[1].1 + SLACK);
        report.record(
            format!("bound chain {tag}"),
            ok,
            chain.iter().map(|(k, v)| format!("{k}={v:.9}")).collect::<Vec<_>>().join(" <= "),
        );
        if let Some(i3) = b.index3 {
            report.record(format!("coherence <= index-3 upper {tag}"), mu <= i3.upper + SLACK, format!("mu={mu:.9} upper={:.9}", i3.upper));
        }
        if let Some((exact, branch)) = b.index2_exact {
            report.record(
                format!("index-2 exact coherence ({branch:?}) {tag}"),
                (mu - exact).abs() <= SLACK,
                format!("mu={mu:.12} formula={exact:.12}"),
            );
        }
    }
    Ok(report)
}

/// Smallest twist in `2..n` of each order `D ≤ DIHEDRAL_MAX_ORDER` dividing `n − 1`.
pub fn twists_by_order(n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for d in divisors(n - 1).into_iter().filter(|&d| d <= DIHEDRAL_MAX_ORDER) {
        if d == 1 {
            out.push((1, 1));
            continue;
        }
        if let Some(t) = (2..n).find(|&t| multiplicative_order(t, n) == Some(d)) {
            out.push((t, d));
        }
    }
    out
}

fn dihedral_suite(max_n: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    for len in 1..=64 {
        let w = zadoff_chu(len)?;
        let worst = (1..len).map(|b| w.autocorrelation(b).norm()).fold(0.0, f64::max);
        let unit = w.values().iter().all(|z| (z.norm() - 1.0).abs() <= 1e-12);
        report.record(format!("Zadoff-Chu CAZAC (D={len})"), worst <= 1e-9 && unit, format!("max autocorrelation {worst:.3e}"));
    }
    for n in primes_up_to(max_n).into_iter().filter(|&n| n >= 3) {
        let ctx = find_generator(n)?;
        for (twist, order) in twists_by_order(n) {
            for m in divisors(n - 1).into_iter().filter(|&m| order * m <= DIHEDRAL_MAX_DIM) {
                let sub = subgroup_of_order(&ctx, m)?;
                let spec = DihedralFrameSpec::with_order(n, twist, order, sub.elements().to_vec())?;
                report.extend(verify_dihedral_instance(&spec, true)?);
            }
        }
    }
    Ok(report)
}

fn pairing_suite(max_n: u64) -> Result<VerificationReport> {
    let mut report = VerificationReport::new();
    let check = |report: &mut VerificationReport, spec: &CyclicFrameSpec, label: &str| {
        let p = fourier_pairing(spec);
        let err = p.count_error();
        let a_ok = p.counts[0] == spec.m() as u64 && (p.alpha[0] - 1.0).abs() <= 1e-9;
        report.record(
            format!("a -> alpha -> a round trip ({label} n={} m={})", spec.n(), spec.m()),
            err <= 1e-6 && p.alpha_error() <= 1e-9 && a_ok,
            format!("count error {err:.3e}, alpha error {:.3e}", p.alpha_error()),
        );
    };
    for (n, m) in prime_divisor_pairs(max_n) {
        let sub = subgroup_of_order(&find_generator(n)?, m)?;
        check(&mut report, &CyclicFrameSpec::new(n, sub.elements().to_vec())?, "subgroup");
    }
    // Arbitrary exponent sets over every modulus, prime or not.
    let mut rng = ChaCha20Rng::seed_from_u64(max_n);
    for n in 3..=max_n {
        let m = rng.random_range(2..n) as usize;
        let ks = rand::seq::index::sample(&mut rng, n as usize, m).into_iter().map(|k| k as u64).collect();
        check(&mut report, &CyclicFrameSpec::new(n, ks)?, "random");
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("bogus".parse::<Suite>().is_err());
    }

    #[test]
    fn pairs_enumeration() {
        let pairs = prime_divisor_pairs(13);
        assert!(pairs.contains(&(13, 4)));
        assert!(pairs.contains(&(3, 1)));
        assert!(!pairs.iter().any(|&(n, _)| n == 2));
    }

    #[test]
    fn twists() {
        let t = twists_by_order(13);
        assert!(t.contains(&(12, 2)));
        assert!(t.contains(&(1, 1)));
        for (twist, d) in t {
            assert_eq!(multiplicative_order(twist, 13), Some(d));
        }
    }

    #[test]
    fn small_suites_pass() {
        for suite in Suite::ALL {
            let report = run_suite(suite, 60).unwrap();
            assert!(report.all_passed(), "{suite}: {}", report.failures().map(|c| c.to_string()).collect::<Vec<_>>().join("\n"));
            assert!(!report.checks.is_empty());
        }
    }
}

//! Coherence, tightness and inner-product structure of frames.

pub mod bounds;
pub mod dihedral;
pub mod spectrum;

pub use bounds::{BoundSet, R2Branch};
pub use dihedral::{dihedral_distinct_count_bound, dihedral_dominance, Dominance};
pub use spectrum::{group_spectrum, w_spectrum, InnerProductSpectrum, WSpectrum};

use num_complex::Complex64;

use crate::frame::FrameMatrix;
use crate::report::VerificationReport;
use crate::{Error, Result};

/// Absolute gap separating two magnitude clusters.
pub const CLUSTER_GAP: f64 = 1e-7;

/// Residual below which `MM*` counts as a multiple of the identity.
pub const TIGHT_TOL: f64 = 1e-9;

fn require_normalized(frame: &FrameMatrix, op: &'static str) -> Result<()> {
    if frame.is_normalized() {
        Ok(())
    } else {
        Err(Error::precondition(op, "columns must be unit-norm"))
    }
}

fn require_pairs(frame: &FrameMatrix, op: &'static str) -> Result<()> {
    if frame.cols() < 2 {
        Err(Error::precondition(op, "at least two columns"))
    } else {
        Ok(())
    }
}

/// Columns split into separate real and imaginary planes for fast inner products.
struct SplitColumns {
    rows: usize,
    re: Vec<f64>,
    im: Vec<f64>,
}

impl SplitColumns {
    fn new(frame: &FrameMatrix) -> Self {
        Self {
            rows: frame.rows(),
            re: frame.data().iter().map(|z| z.re).collect(),
            im: frame.data().iter().map(|z| z.im).collect(),
        }
    }

    /// `⟨f_i, f_j⟩ = f_i^* f_j`.
    #[inline]
    fn inner(&self, i: usize, j: usize) -> Complex64 {
        let r = self.rows;
        let (ar, ai) = (&self.re[i * r..(i + 1) * r], &self.im[i * r..(i + 1) * r]);
        let (br, bi) = (&self.re[j * r..(j + 1) * r], &self.im[j * r..(j + 1) * r]);
        // Four independent lanes so the compiler can keep the sums in vector registers.
        let mut sr = [0.0f64; 4];
        let mut si = [0.0f64; 4];
        let chunks = r / 4;
        for c in 0..chunks {
            for l in 0..4 {
                let k = c * 4 + l;
                sr[l] += ar[k] * br[k] + ai[k] * bi[k];
                si[l] += ar[k] * bi[k] - ai[k] * br[k];
            }
        }
        let mut re = (sr[0] + sr[1]) + (sr[2] + sr[3]);
        let mut im = (si[0] + si[1]) + (si[2] + si[3]);
        for k in chunks * 4..r {
            re += ar[k] * br[k] + ai[k] * bi[k];
            im += ar[k] * bi[k] - ai[k] * br[k];
        }
        Complex64::new(re, im)
    }
}

/// Dense Hermitian Gram matrix, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct Gram {
    size: usize,
    data: Vec<Complex64>,
}

impl Gram {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.size..(i + 1) * self.size]
    }
}

/// `G[i][j] = ⟨f_i, f_j⟩`, conjugate-linear in the first slot.
pub fn gram(frame: &FrameMatrix) -> Result<Gram> {
    require_normalized(frame, "gram")?;
    let cols = SplitColumns::new(frame);
    let n = frame.cols();
    let mut data = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        data[i * n + i] = cols.inner(i, i);
        for j in i + 1..n {
            let z = cols.inner(i, j);
            data[i * n + j] = z;
            data[j * n + i] = z.conj();
        }
    }
    Ok(Gram { size: n, data })
}

/// Smallest and largest off-diagonal `|⟨f_i, f_j⟩|` over all pairs.
fn off_diagonal_range(frame: &FrameMatrix) -> (f64, f64) {
    let cols = SplitColumns::new(frame);
    let n = frame.cols();
    let row = |i: usize| {
        (i + 1..n).fold((f64::INFINITY, 0.0f64), |(lo, hi), j| {
            let a = cols.inner(i, j).norm();
            (lo.min(a), hi.max(a))
        })
    };
    let merge = |a: (f64, f64), b: (f64, f64)| (a.0.min(b.0), a.1.max(b.1));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        (0..n).into_par_iter().map(row).reduce(|| (f64::INFINITY, 0.0), merge)
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..n).map(row).fold((f64::INFINITY, 0.0), merge)
    }
}

/// `max_{i≠j} |⟨f_i, f_j⟩|` over every column pair.
pub fn coherence(frame: &FrameMatrix) -> Result<f64> {
    require_normalized(frame, "coherence")?;
    require_pairs(frame, "coherence")?;
    Ok(off_diagonal_range(frame).1)
}

/// `⟨f_0, f_j⟩` for every column `j`.
///
/// For a group frame whose column 0 is the identity orbit point this row
/// contains every value in the Gram matrix.
pub fn orbit_spectrum(frame: &FrameMatrix) -> Result<Vec<Complex64>> {
    require_normalized(frame, "orbit_spectrum")?;
    let cols = SplitColumns::new(frame);
    Ok((0..frame.cols()).map(|j| cols.inner(0, j)).collect())
}

/// Coherence of a group frame from its first Gram row, `O(n'm')`.
pub fn orbit_coherence(frame: &FrameMatrix) -> Result<f64> {
    require_pairs(frame, "orbit_coherence")?;
    let row = orbit_spectrum(frame)?;
    Ok(row[1..].iter().map(|z| z.norm()).fold(0.0, f64::max))
}

/// Outcome of the tightness test.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tightness {
    pub is_tight: bool,
    /// `trace(MM*) / m'`.
    pub lambda: f64,
    /// Largest entry of `|MM* − λI|`.
    pub residual: f64,
}

/// Checks `MM* = λI`.
pub fn tightness(frame: &FrameMatrix) -> Tightness {
    let m = frame.rows();
    // Frame operator S = Σ_j f_j f_j^*, upper triangle only.
    let mut s = vec![Complex64::new(0.0, 0.0); m * m];
    for col in frame.columns() {
        for a in 0..m {
            let fa = col[a];
            let row = &mut s[a * m..(a + 1) * m];
            for b in a..m {
                row[b] += fa * col[b].conj();
            }
        }
    }
    let lambda = (0..m).map(|a| s[a * m + a].re).sum::<f64>() / m as f64;
    let mut residual = 0.0f64;
    for a in 0..m {
        for b in a..m {
            let target = if a == b { lambda } else { 0.0 };
            residual = residual.max((s[a * m + b] - target).norm());
        }
    }
    Tightness { is_tight: residual <= TIGHT_TOL, lambda, residual }
}

/// True when all off-diagonal Gram magnitudes agree within `tol`.
pub fn is_equiangular(frame: &FrameMatrix, tol: f64) -> Result<bool> {
    require_normalized(frame, "is_equiangular")?;
    require_pairs(frame, "is_equiangular")?;
    let (lo, hi) = off_diagonal_range(frame);
    Ok(hi - lo <= tol)
}

/// `Σ_{i,j} |⟨f_i, f_j⟩|²`, computed as `‖MM*‖_F²` in `O(m'²n')`.
pub fn frame_potential(frame: &FrameMatrix) -> f64 {
    let m = frame.rows();
    let mut s = vec![Complex64::new(0.0, 0.0); m * m];
    for col in frame.columns() {
        for a in 0..m {
            for b in 0..m {
                s[a * m + b] += col[a] * col[b].conj();
            }
        }
    }
    s.iter().map(|z| z.norm_sqr()).sum()
}

/// A run of nearly equal magnitudes.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Cluster {
    /// Mean of the members.
    pub magnitude: f64,
    pub multiplicity: usize,
}

/// Sorts the values and splits wherever consecutive entries differ by more
/// than [`CLUSTER_GAP`].
pub fn cluster_magnitudes(values: impl IntoIterator<Item = f64>) -> Vec<Cluster> {
    let mut v: Vec<f64> = values.into_iter().collect();
    v.sort_by(f64::total_cmp);
    let mut out: Vec<Cluster> = Vec::new();
    let mut start = 0;
    for i in 1..=v.len() {
        if i == v.len() || v[i] - v[i - 1] > CLUSTER_GAP {
            let members = &v[start..i];
            if !members.is_empty() {
                out.push(Cluster {
                    magnitude: members.iter().sum::<f64>() / members.len() as f64,
                    multiplicity: members.len(),
                });
            }
            start = i;
        }
    }
    out
}

/// Number of distinct off-peak magnitudes of a group frame, read from its first Gram row.
pub fn distinct_magnitude_count(frame: &FrameMatrix) -> Result<usize> {
    let row = orbit_spectrum(frame)?;
    Ok(cluster_magnitudes(row[1..].iter().map(|z| z.norm())).len())
}

/// Checks the orbit structure of a group frame's Gram matrix.
///
/// Every entry must equal some value `⟨f_0, f_g⟩` of the first row, and a value
/// taken by `k` group elements must appear exactly `k·n'` times overall.
pub fn verify_gram_multiplicity(frame: &FrameMatrix, tol: f64) -> Result<VerificationReport> {
    let g = gram(frame)?;
    let n = g.size();
    let mut distinct: Vec<(Complex64, usize)> = Vec::new();
    for &z in g.row(0) {
        match distinct.iter_mut().find(|(v, _)| (*v - z).norm() <= tol) {
            Some(slot) => slot.1 += 1,
            None => distinct.push((z, 1)),
        }
    }
    let mut seen = vec![0usize; distinct.len()];
    let mut unmatched = 0usize;
    for &z in &g.data {
        match distinct.iter().position(|(v, _)| (*v - z).norm() <= tol) {
            Some(k) => seen[k] += 1,
            None => unmatched += 1,
        }
    }
    let label = frame_label(frame);
    let mut report = VerificationReport::new();
    report.record(
        format!("Gram entries drawn from the first row {label}"),
        unmatched == 0,
        format!("{unmatched} unmatched of {}", n * n),
    );
    let bad: Vec<String> = distinct
        .iter()
        .zip(&seen)
        .filter(|((_, k), s)| **s != k * n)
        .map(|((v, k), s)| format!("{v:.6} expected {} got {s}", k * n))
        .collect();
    report.record(
        format!("each group element's value occurs n' times {label}"),
        bad.is_empty(),
        if bad.is_empty() { format!("{} distinct values", distinct.len()) } else { bad.join("; ") },
    );
    Ok(report)
}

pub(crate) fn frame_label(frame: &FrameMatrix) -> String {
    let meta = frame.metadata();
    let mut parts = Vec::new();
    for key in ["family", "n", "m", "twist", "D"] {
        if let Some(v) = meta.get(key) {
            parts.push(format!("{key}={v}"));
        }
    }
    format!("({})", parts.join(" "))
}

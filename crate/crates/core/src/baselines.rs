//! Seeded random frames used as comparison points.
//!
//! Both generators use ChaCha20 seeded from a `u64`, so a given seed yields
//! the same matrix on every platform.

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::frame::{build_cyclic_frame, CyclicFrameSpec, FrameMatrix, Metadata};
use crate::{Error, Result};

/// Name written into frame metadata under `prng`.
pub const PRNG_NAME: &str = "chacha20/rand_chacha-0.9";

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineKind {
    Gaussian,
    RandomFourier,
}

impl BaselineKind {
    pub fn name(self) -> &'static str {
        match self {
            Self::Gaussian => "gaussian",
            Self::RandomFourier => "random-fourier",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BaselineSpec {
    pub kind: BaselineKind,
    /// Columns `n'`.
    pub n: usize,
    /// Rows `m'`.
    pub m: usize,
    pub seed: u64,
}

impl BaselineSpec {
    pub fn new(kind: BaselineKind, n: usize, m: usize, seed: u64) -> Result<Self> {
        if m < 1 || n <= m {
            return Err(Error::precondition("baseline", format!("n' > m' >= 1 (got n'={n}, m'={m})")));
        }
        Ok(Self { kind, n, m, seed })
    }

    pub fn build(&self) -> Result<FrameMatrix> {
        match self.kind {
            BaselineKind::Gaussian => gaussian_frame(self),
            BaselineKind::RandomFourier => random_fourier_frame(self),
        }
    }
}

fn require(spec: &BaselineSpec, kind: BaselineKind) -> Result<()> {
    if spec.kind != kind {
        return Err(Error::precondition("baseline", format!("kind = {}", kind.name())));
    }
    BaselineSpec::new(spec.kind, spec.n, spec.m, spec.seed).map(|_| ())
}

/// I.i.d. entries `(g1 + i·g2)/√2` drawn column by column, then column-normalized.
pub fn gaussian_frame(spec: &BaselineSpec) -> Result<FrameMatrix> {
    require(spec, BaselineKind::Gaussian)?;
    let mut rng = ChaCha20Rng::seed_from_u64(spec.seed);
    let scale = std::f64::consts::FRAC_1_SQRT_2;
    let data: Vec<Complex64> = (0..spec.n * spec.m)
        .map(|_| {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            Complex64::new(re * scale, im * scale)
        })
        .collect();
    let meta = Metadata::new()
        .with("family", "gaussian")
        .with("n", spec.n)
        .with("m", spec.m)
        .with("seed", spec.seed)
        .with("prng", PRNG_NAME);
    FrameMatrix::from_columns(spec.m, spec.n, data, meta)?.normalize_columns()
}

/// `m` distinct exponents drawn uniformly from `0..n`, sorted. Zero may be drawn.
pub fn random_fourier_exponents(n: usize, m: usize, seed: u64) -> Vec<u64> {
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut ks: Vec<u64> = rand::seq::index::sample(&mut rng, n, m).into_iter().map(|k| k as u64).collect();
    ks.sort_unstable();
    ks
}

/// `m` random rows of the `n × n` DFT matrix.
pub fn random_fourier_frame(spec: &BaselineSpec) -> Result<FrameMatrix> {
    require(spec, BaselineKind::RandomFourier)?;
    let mut ks = random_fourier_exponents(spec.n, spec.m, spec.seed);
    // {0} alone would give identical columns; with m >= 2 another exponent is present.
    if ks == [0] {
        ks = vec![1];
    }
    let mut frame = build_cyclic_frame(&CyclicFrameSpec::new(spec.n as u64, ks)?);
    let meta = frame.metadata_mut();
    meta.set("family", "random-fourier");
    meta.set("seed", spec.seed);
    meta.set("prng", PRNG_NAME);
    Ok(frame)
}

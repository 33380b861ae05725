//! Frame matrices and the group-orbit constructions that produce them.
//!
//! Every builder returns unit-norm columns. Column order is fixed so that
//! frame files are reproducible: cyclic frames by power `ℓ = 0..n`, abelian
//! frames lexicographically in `(a_1, …, a_L)`, dihedral frames with the
//! `σ` exponent outer and the `τ` exponent inner.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

use crate::numtheory::{self, find_generator, multiplicative_order, subgroup_of_order};
use crate::{Error, Result};

/// Column norms within this distance of 1 count as unit-norm.
pub const UNIT_NORM_TOL: f64 = 1e-12;

/// Ordered `key=value` metadata carried alongside a frame.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Metadata(Vec<(String, String)>);

impl Metadata {
    pub fn new() -> Self {
        Self::default()
    }

    /// Replaces an existing key in place, otherwise appends.
    pub fn set(&mut self, key: impl Into<String>, value: impl ToString) {
        let key = key.into();
        let value = value.to_string();
        match self.0.iter_mut().find(|(k, _)| *k == key) {
            Some(slot) => slot.1 = value,
            None => self.0.push((key, value)),
        }
    }

    pub fn with(mut self, key: impl Into<String>, value: impl ToString) -> Self {
        self.set(key, value);
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.0.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn get_u64(&self, key: &str) -> Option<u64> {
        self.get(key).and_then(|v| v.parse().ok())
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &str)> {
        self.0.iter().map(|(k, v)| (k.as_str(), v.as_str()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Dense complex matrix whose columns are frame vectors.
///
/// Entries are stored column-major, so `column(j)` is a contiguous slice.
#[derive(Debug, Clone, PartialEq)]
pub struct FrameMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex64>,
    normalized: bool,
    meta: Metadata,
}

impl FrameMatrix {
    /// Wraps column-major `data`; rejects empty shapes and non-finite entries.
    pub fn from_columns(rows: usize, cols: usize, data: Vec<Complex64>, meta: Metadata) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid(format!("frame shape {rows}x{cols} is empty")));
        }
        if data.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "{} entries supplied for a {rows}x{cols} frame",
                data.len()
            )));
        }
        if let Some(pos) = data.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
            return Err(Error::Invalid(format!(
                "entry ({}, {}) is not finite",
                pos % rows,
                pos / rows
            )));
        }
        let normalized = data
            .chunks_exact(rows)
            .all(|col| (col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt() - 1.0).abs() <= UNIT_NORM_TOL);
        Ok(Self { rows, cols, data, normalized, meta })
    }

    /// Builds from a row-major nested list, mostly for tests and small inputs.
    pub fn from_rows(rows: &[Vec<Complex64>], meta: Metadata) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Invalid("ragged rows".into()));
        }
        let mut data = Vec::with_capacity(r * c);
        for j in 0..c {
            data.extend(rows.iter().map(|row| row[j]));
        }
        Self::from_columns(r, c, data, meta)
    }

    /// Scales each column to unit norm; zero columns are rejected.
    pub fn normalize_columns(mut self) -> Result<Self> {
        for (j, col) in self.data.chunks_exact_mut(self.rows).enumerate() {
            let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm == 0.0 {
                return Err(Error::Invalid(format!("column {j} is zero")));
            }
            col.iter_mut().for_each(|z| *z /= norm);
        }
        self.normalized = true;
        Ok(self)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[col * self.rows + row]
    }

    pub fn column(&self, j: usize) -> &[Complex64] {
        &self.data[j * self.rows..(j + 1) * self.rows]
    }

    pub fn columns(&self) -> impl Iterator<Item = &[Complex64]> {
        self.data.chunks_exact(self.rows)
    }

    /// Column-major entries.
    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    pub fn metadata(&self) -> &Metadata {
        &self.meta
    }

    pub fn metadata_mut(&mut self) -> &mut Metadata {
        &mut self.meta
    }

    pub fn family(&self) -> Option<&str> {
        self.meta.get("family")
    }
}

/// Table of `ω^e = exp(2πi e / n)` for `e = 0..n`, one `sin_cos` per entry.
#[derive(Debug, Clone)]
pub struct RootsOfUnity {
    n: u64,
    table: Vec<Complex64>,
}

impl RootsOfUnity {
    pub fn new(n: u64) -> Self {
        let table = (0..n)
            .map(|e| {
                let (s, c) = (TAU * e as f64 / n as f64).sin_cos();
                Complex64::new(c, s)
            })
            .collect();
        Self { n, table }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    /// `ω^e` for any integer exponent, reduced mod `n` first.
    #[inline]
    pub fn pow(&self, e: i128) -> Complex64 {
        self.table[e.rem_euclid(self.n as i128) as usize]
    }

    #[inline]
    pub fn get(&self, e: u64) -> Complex64 {
        self.table[(e % self.n) as usize]
    }
}

fn join(values: &[u64]) -> String {
    values.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

fn reduced_distinct(exponents: &[u64], modulus: u64) -> Result<Vec<u64>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::with_capacity(exponents.len());
    for &k in exponents {
        let k = k % modulus;
        if !seen.insert(k) {
            return Err(Error::DuplicateExponent { value: k, modulus });
        }
        out.push(k);
    }
    Ok(out)
}

/// Exponents `K = {k_1..k_m}` of the diagonal generator `diag(ω^{k_i})`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicFrameSpec {
    n: u64,
    exponents: Vec<u64>,
}

impl CyclicFrameSpec {
    /// Exponents are reduced mod `n` and must be distinct. `K = {0}` is rejected
    /// because every column would coincide.
    pub fn new(n: u64, exponents: Vec<u64>) -> Result<Self> {
        if n < 2 {
            return Err(Error::TooSmall { name: "n", min: 2, got: n });
        }
        if exponents.is_empty() {
            return Err(Error::Invalid("exponent list is empty".into()));
        }
        let exponents = reduced_distinct(&exponents, n)?;
        if exponents.iter().all(|&k| k == 0) {
            return Err(Error::Invalid("K = {0} gives identical columns".into()));
        }
        Ok(Self { n, exponents })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn m(&self) -> usize {
        self.exponents.len()
    }
}

/// `m × n` frame with entry `(i, ℓ) = ω^{k_i ℓ} / √m`.
pub fn build_cyclic_frame(spec: &CyclicFrameSpec) -> FrameMatrix {
    let meta = Metadata::new()
        .with("family", "cyclic")
        .with("n", spec.n)
        .with("m", spec.m())
        .with("exponents", join(&spec.exponents));
    cyclic_matrix(spec, meta)
}

fn cyclic_matrix(spec: &CyclicFrameSpec, meta: Metadata) -> FrameMatrix {
    let n = spec.n;
    let m = spec.m();
    let roots = RootsOfUnity::new(n);
    let scale = 1.0 / (m as f64).sqrt();
    let mut data = Vec::with_capacity(m * n as usize);
    for l in 0..n {
        for &k in &spec.exponents {
            data.push(roots.get(numtheory::mul_mod(k, l, n)) * scale);
        }
    }
    FrameMatrix::from_columns(m, n as usize, data, meta).expect("cyclic entries are finite")
}

/// Cyclic frame whose exponents are the order-`m` subgroup of `(Z/nZ)^×`.
pub fn build_prime_group_frame(n: u64, m: u64) -> Result<FrameMatrix> {
    let ctx = find_generator(n)?;
    let sub = subgroup_of_order(&ctx, m)?;
    let spec = CyclicFrameSpec::new(n, sub.elements().to_vec())?;
    let meta = Metadata::new()
        .with("family", "prime-cyclic")
        .with("n", n)
        .with("m", m)
        .with("generator", ctx.generator())
        .with("exponents", join(sub.elements()));
    Ok(cyclic_matrix(&spec, meta))
}

/// Direct product `Z/n_1 × … × Z/n_L` with per-factor exponent lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianFrameSpec {
    orders: Vec<u64>,
    exponents: Vec<Vec<u64>>,
}

impl AbelianFrameSpec {
    /// `exponents[j]` lists `k_{1j}..k_{mj}` for factor `j`; within each factor
    /// they must be distinct modulo `n_j`.
    pub fn new(orders: Vec<u64>, exponents: Vec<Vec<u64>>) -> Result<Self> {
        if orders.is_empty() || orders.len() != exponents.len() {
            return Err(Error::Invalid(format!(
                "{} factor orders but {} exponent lists",
                orders.len(),
                exponents.len()
            )));
        }
        let m = exponents[0].len();
        if m == 0 || exponents.iter().any(|e| e.len() != m) {
            return Err(Error::Invalid("every factor needs the same nonzero number of exponents".into()));
        }
        let mut reduced = Vec::with_capacity(orders.len());
        for (&nj, ej) in orders.iter().zip(&exponents) {
            if nj < 1 {
                return Err(Error::TooSmall { name: "factor order", min: 1, got: nj });
            }
            reduced.push(reduced_distinct(ej, nj)?);
        }
        Ok(Self { orders, exponents: reduced })
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn exponents(&self) -> &[Vec<u64>] {
        &self.exponents
    }

    pub fn m(&self) -> usize {
        self.exponents[0].len()
    }

    /// `N = Π n_j`.
    pub fn group_order(&self) -> usize {
        self.orders.iter().product::<u64>() as usize
    }
}

/// Columns `U_1^{a_1} ⋯ U_L^{a_L} v` for every tuple `(a_1..a_L)`, the last
/// factor varying fastest.
pub fn build_abelian_frame(spec: &AbelianFrameSpec) -> FrameMatrix {
    let m = spec.m();
    let big_n = spec.group_order();
    let roots: Vec<RootsOfUnity> = spec.orders.iter().map(|&nj| RootsOfUnity::new(nj)).collect();
    let scale = 1.0 / (m as f64).sqrt();
    let mut data = Vec::with_capacity(m * big_n);
    let mut tuple = vec![0u64; spec.orders.len()];
    for _ in 0..big_n {
        for i in 0..m {
            // Sum the angles as a rational multiple of 2π so each entry is one sin_cos.
            let turns: f64 = spec
                .orders
                .iter()
                .enumerate()
                .map(|(j, &nj)| (spec.exponents[j][i] * tuple[j] % nj) as f64 / nj as f64)
                .sum();
            let z = if spec.orders.len() == 1 {
                roots[0].get(spec.exponents[0][i] * tuple[0])
            } else {
                let (s, c) = (TAU * turns.fract()).sin_cos();
                Complex64::new(c, s)
            };
            data.push(z * scale);
        }
        for j in (0..tuple.len()).rev() {
            tuple[j] += 1;
            if tuple[j] < spec.orders[j] {
                break;
            }
            tuple[j] = 0;
        }
    }
    let lists: Vec<String> = spec.exponents.iter().map(|e| join(e)).collect();
    let meta = Metadata::new()
        .with("family", "abelian")
        .with("orders", join(&spec.orders))
        .with("m", m)
        .with("exponents", lists.join(";"));
    FrameMatrix::from_columns(m, big_n, data, meta).expect("abelian entries are finite")
}

/// Constant-amplitude zero-autocorrelation sequence of length `D`.
#[derive(Debug, Clone, PartialEq)]
pub struct ZcSequence {
    values: Vec<Complex64>,
    /// Phase numerators: `w_d = exp(iπ q_d / D)` with `q_d` reduced mod `2D`.
    phases: Vec<u64>,
}

impl ZcSequence {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Periodic autocorrelation `Σ_d conj(w_d) w_{d+b}`.
    pub fn autocorrelation(&self, shift: usize) -> Complex64 {
        let d = self.values.len();
        (0..d).map(|i| self.values[i].conj() * self.values[(i + shift) % d]).sum()
    }
}

/// `w_d = e^{iπd²/D}` for even `D`, `e^{iπd(d+1)/D}` for odd `D`, `d = 0..D`.
pub fn zadoff_chu(len: usize) -> Result<ZcSequence> {
    if len == 0 {
        return Err(Error::TooSmall { name: "D", min: 1, got: 0 });
    }
    let big_d = len as u64;
    let phases: Vec<u64> = (0..big_d)
        .map(|d| {
            let q = if big_d % 2 == 0 { d * d } else { d * (d + 1) };
            q % (2 * big_d)
        })
        .collect();
    let values = phases
        .iter()
        .map(|&q| {
            let (s, c) = (PI * q as f64 / big_d as f64).sin_cos();
            Complex64::new(c, s)
        })
        .collect();
    Ok(ZcSequence { values, phases })
}

/// Generalized dihedral group `⟨σ, τ | σ^n, τ^D, τστ⁻¹ = σ^t⟩` with exponents `K`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DihedralFrameSpec {
    n: u64,
    twist: u64,
    order: u64,
    exponents: Vec<u64>,
}

impl DihedralFrameSpec {
    /// Derives `D` as the multiplicative order of `twist` mod the prime `n`.
    pub fn new(n: u64, twist: u64, exponents: Vec<u64>) -> Result<Self> {
        if !numtheory::is_prime(n)? {
            return Err(Error::NotPrime(n));
        }
        let twist_red = twist % n;
        let order = multiplicative_order(twist_red, n).ok_or(Error::TwistNotCoprime { n, twist })?;
        let cyclic = CyclicFrameSpec::new(n, exponents)?;
        Ok(Self { n, twist: twist_red, order, exponents: cyclic.exponents })
    }

    /// Like [`DihedralFrameSpec::new`] but also checks a caller-supplied `D`.
    pub fn with_order(n: u64, twist: u64, order: u64, exponents: Vec<u64>) -> Result<Self> {
        let spec = Self::new(n, twist, exponents)?;
        if spec.order != order {
            return Err(Error::OrderMismatch { n, twist, claimed: order, actual: spec.order });
        }
        Ok(spec)
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn twist(&self) -> u64 {
        self.twist
    }

    /// `D`.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn m(&self) -> usize {
        self.exponents.len()
    }
}

/// `Dm × Dn` frame with columns `[σ]^a [τ]^b v`, `a` outer and `b` inner.
///
/// Row `j·D + d` holds `ω^{a k_j t^d} · w_{(d+b) mod D} / √(Dm)`, where `t` is the
/// twist and `w` the Zadoff-Chu sequence of length `D`.
pub fn build_dihedral_frame(spec: &DihedralFrameSpec) -> FrameMatrix {
    let n = spec.n;
    let big_d = spec.order;
    let m = spec.m();
    let zc = zadoff_chu(big_d as usize).expect("D >= 1");
    // t^d mod n for d = 0..D
    let twist_powers: Vec<u64> = (0..big_d).map(|d| numtheory::pow_mod(spec.twist, d, n)).collect();
    let rows = big_d as usize * m;
    let cols = (big_d * n) as usize;
    let scale = 1.0 / (rows as f64).sqrt();
    let two_d = 2 * big_d;
    let mut data = Vec::with_capacity(rows * cols);
    for a in 0..n {
        for b in 0..big_d {
            for &k in &spec.exponents {
                let ak = numtheory::mul_mod(a, k, n);
                for (d, &tp) in twist_powers.iter().enumerate() {
                    let e = numtheory::mul_mod(ak, tp, n);
                    let q = zc.phases[(d + b as usize) % big_d as usize];
                    // Combined phase 2π e/n + π q/D = 2π (e·2D + q·n) / (2Dn), reduced exactly.
                    let num = (e as u128 * two_d as u128 + q as u128 * n as u128) % (two_d as u128 * n as u128);
                    let (s, c) = (TAU * num as f64 / (two_d * n) as f64).sin_cos();
                    data.push(Complex64::new(c, s) * scale);
                }
            }
        }
    }
    let meta = Metadata::new()
        .with("family", "dihedral")
        .with("n", n)
        .with("m", m)
        .with("twist", spec.twist)
        .with("D", big_d)
        .with("exponents", join(&spec.exponents));
    FrameMatrix::from_columns(rows, cols, data, meta).expect("dihedral entries are finite")
}

/// Dihedral frame over the order-`m` subgroup of `(Z/nZ)^×`.
pub fn build_prime_dihedral_frame(n: u64, m: u64, twist: u64) -> Result<FrameMatrix> {
    let ctx = find_generator(n)?;
    let sub = subgroup_of_order(&ctx, m)?;
    let spec = DihedralFrameSpec::new(n, twist, sub.elements().to_vec())?;
    let mut frame = build_dihedral_frame(&spec);
    frame.metadata_mut().set("generator", ctx.generator());
    Ok(frame)
}

/// Parses a comma-separated exponent list as written into frame metadata.
pub fn parse_exponent_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::Invalid(format!("bad exponent {t:?}"))))
        .collect()
}

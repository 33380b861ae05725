//! WebAssembly bindings for the browser demo in `www/`.
//!
//! Each exported function returns a JSON string. The logic lives in plain
//! Rust functions so it can be tested natively.

use groupframe::analysis::bounds::{coset_upper_bound, index3_bounds, odd_subgroup_upper_bound, welch_bound, BoundSet};
use groupframe::analysis::dihedral::{dihedral_distinct_count_bound, dihedral_dominance};
use groupframe::analysis::spectrum::group_spectrum;
use groupframe::analysis::{cluster_magnitudes, orbit_spectrum, Cluster};
use groupframe::baselines::random_fourier_exponents;
use groupframe::frame::{build_cyclic_frame, build_dihedral_frame, CyclicFrameSpec, DihedralFrameSpec};
use groupframe::numtheory::{find_generator, subgroup_of_order};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps a single call under roughly a second in the browser.
const MAX_WORK: u64 = 20_000_000;
const MAX_DIHEDRAL_ROWS: u64 = 256;

fn clusters_json(clusters: &[Cluster]) -> Value {
    clusters.iter().map(|c| json!({ "magnitude": c.magnitude, "multiplicity": c.multiplicity })).collect()
}

/// Magnitudes `|c_ℓ|` of the subgroup frame and of a random-Fourier frame of the same size.
pub fn spectrum_json(n: u64, m: u64, seed: u64) -> Result<String, String> {
    if n.saturating_mul(m) > MAX_WORK {
        return Err(format!("n*m = {} is too large for the demo", n.saturating_mul(m)));
    }
    let ctx = find_generator(n).map_err(|e| e.to_string())?;
    let sub = subgroup_of_order(&ctx, m).map_err(|e| e.to_string())?;
    let group = group_spectrum(&CyclicFrameSpec::new(n, sub.elements().to_vec()).map_err(|e| e.to_string())?);
    let random_ks = random_fourier_exponents(n as usize, m as usize, seed);
    let random = group_spectrum(&CyclicFrameSpec::new(n, random_ks).map_err(|e| e.to_string())?);
    let bounds = BoundSet::for_prime_group(n, m).map_err(|e| e.to_string())?;
    let (bound_name, bound) = bounds.best();
    let mags = |s: &groupframe::analysis::InnerProductSpectrum| s.c.iter().map(|z| z.norm()).collect::<Vec<f64>>();
    Ok(json!({
        "n": n,
        "m": m,
        "r": bounds.r,
        "generator": ctx.generator(),
        "welch": bounds.welch,
        "bound": bound,
        "bound_name": bound_name,
        "group": {
            "coherence": group.coherence(),
            "magnitudes": mags(&group),
            "clusters": clusters_json(&group.clusters),
        },
        "random": {
            "seed": seed,
            "coherence": random.coherence(),
            "magnitudes": mags(&random),
        },
    })
    .to_string())
}

/// Bound curves against `m` for a fixed index `r`.
pub fn bound_curves_json(r: u64, m_min: u64, m_max: u64) -> Result<String, String> {
    if r < 1 || m_min < 1 || m_max < m_min || m_max - m_min > 100_000 {
        return Err("need r >= 1 and 1 <= m_min <= m_max, with at most 100000 points".into());
    }
    let ms: Vec<u64> = (m_min..=m_max).collect();
    let welch: Vec<f64> = ms.iter().map(|&m| welch_bound(r * m + 1, m).unwrap_or(f64::NAN)).collect();
    let sqrt_r: Vec<f64> = welch.iter().map(|w| w * (r as f64).sqrt()).collect();
    let coset: Vec<f64> = ms.iter().map(|&m| coset_upper_bound(m, r).unwrap_or(f64::NAN)).collect();
    let odd: Vec<Option<f64>> = ms.iter().map(|&m| odd_subgroup_upper_bound(m, r).ok()).collect();
    let lower: Vec<Option<f64>> = ms.iter().map(|&m| if r == 3 { index3_bounds(m).ok().map(|b| b.asymptotic_lower) } else { None }).collect();
    Ok(json!({
        "r": r,
        "m": ms,
        "welch": welch,
        "sqrt_r": sqrt_r,
        "coset": coset,
        "odd_m": odd,
        "r3_lower_asymptotic": lower,
    })
    .to_string())
}

/// Coherence of the cyclic subgroup frame next to its dihedral extension.
pub fn dihedral_json(n: u64, m: u64, twist: u64) -> Result<String, String> {
    let sub = subgroup_of_order(&find_generator(n).map_err(|e| e.to_string())?, m).map_err(|e| e.to_string())?;
    let spec = DihedralFrameSpec::new(n, twist, sub.elements().to_vec()).map_err(|e| e.to_string())?;
    let rows = spec.order() * m;
    if rows > MAX_DIHEDRAL_ROWS || rows.saturating_mul(spec.order() * n) > MAX_WORK {
        return Err(format!("D*m = {rows} is too large for the demo"));
    }
    let cyc = build_cyclic_frame(&CyclicFrameSpec::new(n, sub.elements().to_vec()).map_err(|e| e.to_string())?);
    let dih = build_dihedral_frame(&spec);
    let dom = dihedral_dominance(&cyc, &dih).map_err(|e| e.to_string())?;
    let row = |f| -> Result<Vec<f64>, String> {
        Ok(orbit_spectrum(f).map_err(|e: groupframe::Error| e.to_string())?.iter().map(|z| z.norm()).collect())
    };
    let (cm, dm) = (row(&cyc)?, row(&dih)?);
    let cc = cluster_magnitudes(cm[1..].iter().copied());
    let dc = cluster_magnitudes(dm[1..].iter().copied());
    Ok(json!({
        "n": n,
        "m": m,
        "twist": spec.twist(),
        "D": spec.order(),
        "mu_cyclic": dom.mu_cyclic,
        "mu_dihedral": dom.mu_dihedral,
        "dominated": dom.dominated,
        "count_bound": dihedral_distinct_count_bound(spec.order(), n, m).map_err(|e| e.to_string())?,
        "cyclic": { "magnitudes": cm, "clusters": clusters_json(&cc) },
        "dihedral": { "magnitudes": dm, "clusters": clusters_json(&dc) },
    })
    .to_string())
}

fn to_js(r: Result<String, String>) -> Result<String, JsValue> {
    r.map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn spectrum(n: u32, m: u32, seed: u32) -> Result<String, JsValue> {
    to_js(spectrum_json(n.into(), m.into(), seed.into()))
}

#[wasm_bindgen]
pub fn bound_curves(r: u32, m_min: u32, m_max: u32) -> Result<String, JsValue> {
    to_js(bound_curves_json(r.into(), m_min.into(), m_max.into()))
}

#[wasm_bindgen]
pub fn dihedral(n: u32, m: u32, twist: u32) -> Result<String, JsValue> {
    to_js(dihedral_json(n.into(), m.into(), twist.into()))
}

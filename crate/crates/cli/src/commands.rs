use std::fs;
use std::path::Path;

use groupframe::analysis::bounds::{coset_upper_bound, index3_bounds, odd_subgroup_upper_bound, welch_bound, BoundSet};
use groupframe::analysis::{cluster_magnitudes, coherence, distinct_magnitude_count, gram, is_equiangular, tightness};
use groupframe::frame_file::{format_frame, parse_frame};
use groupframe::table1::{measure_group, measure_row, reference_row, REFERENCE_ROWS, REFERENCE_TOL};
use groupframe::verify::{run_suite, Suite};
use groupframe::FrameMatrix;

use crate::family::FrameArgs;
use crate::Failure;

/// Distance from the Welch bound that counts as meeting it.
const WELCH_TOL: f64 = 5e-4;

/// Families whose column 0 is `v` and whose other columns are its group orbit.
const ORBIT_FAMILIES: [&str; 5] = ["prime-cyclic", "cyclic", "random-fourier", "dihedral", "abelian"];

fn provenance(frame: &FrameMatrix) -> String {
    let mut parts = vec![format!("{}x{}", frame.rows(), frame.cols())];
    parts.extend(
        frame
            .metadata()
            .iter()
            .filter(|(k, _)| *k != "exponents")
            .map(|(k, v)| format!("{k}={v}")),
    );
    parts.join(" ")
}

pub fn build(args: &FrameArgs, out: Option<&Path>) -> Result<(), Failure> {
    let frame = args.build()?;
    let text = format_frame(&frame);
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| Failure::Input(format!("cannot write {}: {e}", path.display())))?;
            println!("wrote {} ({})", path.display(), provenance(&frame));
        }
        None => {
            print!("{text}");
            eprintln!("{}", provenance(&frame));
        }
    }
    Ok(())
}

/// One analyzed frame.
struct ReportRow {
    family: String,
    n: usize,
    m: usize,
    normalized: bool,
    coherence: f64,
    welch: Option<f64>,
    sqrt_r_bound: Option<f64>,
    thm_bound: Option<(&'static str, f64)>,
    distinct_values: usize,
    tight: bool,
    lambda: f64,
    equiangular: bool,
}

fn analyze_frame(frame: FrameMatrix) -> Result<ReportRow, Failure> {
    if frame.cols() < 2 {
        return Err(Failure::Input("analysis needs at least two columns".into()));
    }
    let normalized = frame.is_normalized();
    let frame = if normalized { frame } else { frame.normalize_columns()? };
    let family = frame.family().unwrap_or("unknown").to_string();
    let (n, m) = (frame.cols(), frame.rows());
    let mu = coherence(&frame)?;
    let distinct_values = if ORBIT_FAMILIES.contains(&family.as_str()) {
        distinct_magnitude_count(&frame)?
    } else {
        let g = gram(&frame)?;
        cluster_magnitudes((0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).map(|(i, j)| g.get(i, j).norm())).len()
    };
    let welch = welch_bound(n as u64, m as u64).ok();
    let sqrt_r_bound = welch.map(|w| w * (distinct_values as f64).sqrt());
    let thm_bound = if family == "prime-cyclic" {
        let meta = frame.metadata();
        match (meta.get_u64("n"), meta.get_u64("m")) {
            (Some(gn), Some(gm)) => BoundSet::for_prime_group(gn, gm).ok().map(|b| b.best()),
            _ => None,
        }
    } else {
        None
    };
    let t = tightness(&frame);
    Ok(ReportRow {
        family,
        n,
        m,
        normalized,
        coherence: mu,
        welch,
        sqrt_r_bound,
        thm_bound,
        distinct_values,
        tight: t.is_tight,
        lambda: t.lambda,
        equiangular: is_equiangular(&frame, 1e-9)?,
    })
}

fn opt(v: Option<f64>) -> String {
    v.map_or_else(|| "n/a".to_string(), |x| format!("{x:.6}"))
}

pub fn analyze(file: Option<&Path>, args: &FrameArgs) -> Result<(), Failure> {
    let frame = match file {
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("cannot read {}: {e}", path.display())))?;
            parse_frame(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?
        }
        None => args.build()?,
    };
    let row = analyze_frame(frame)?;
    let achieves = row.welch.is_some_and(|w| (row.coherence - w).abs() <= WELCH_TOL);
    let thm = row.thm_bound.map(|(name, v)| format!("{v:.6} ({name})")).unwrap_or_else(|| "n/a".into());
    let table = [
        ("family", row.family.clone()),
        ("columns n'", row.n.to_string()),
        ("rows m'", row.m.to_string()),
        ("coherence", format!("{:.6}", row.coherence)),
        ("welch bound", opt(row.welch)),
        ("sqrt(r) bound", opt(row.sqrt_r_bound)),
        ("closed-form bound", thm),
        ("distinct magnitudes", row.distinct_values.to_string()),
        ("tight", format!("{} (lambda {:.6})", row.tight, row.lambda)),
        ("equiangular", row.equiangular.to_string()),
        ("meets welch", achieves.to_string()),
    ];
    for (k, v) in table {
        println!("{k:<20} {v}");
    }
    if !row.normalized {
        println!("{:<20} columns rescaled to unit norm before analysis", "note");
    }
    println!();
    println!(
        "family={} n={} m={} coherence={} welch={} sqrt_r_bound={} thm_bound={} thm_bound_name={} distinct_values={} tight={} lambda={} equiangular={} welch_achieved={} normalized={}",
        row.family,
        row.n,
        row.m,
        row.coherence,
        row.welch.map_or("nan".into(), |w| w.to_string()),
        row.sqrt_r_bound.map_or("nan".into(), |w| w.to_string()),
        row.thm_bound.map_or("nan".into(), |(_, v)| v.to_string()),
        row.thm_bound.map_or("none", |(name, _)| name),
        row.distinct_values,
        row.tight,
        row.lambda,
        row.equiangular,
        achieves,
        row.normalized,
    );
    Ok(())
}

fn parse_rows(rows: &[String]) -> Result<Vec<(u64, u64)>, Failure> {
    if rows.is_empty() {
        return Ok(REFERENCE_ROWS.iter().map(|r| (r.n, r.m)).collect());
    }
    rows.iter()
        .map(|s| {
            let (n, m) = s.split_once(':').ok_or_else(|| Failure::Input(format!("row {s:?} is not n:m")))?;
            let parse = |t: &str| t.trim().parse::<u64>().map_err(|_| Failure::Input(format!("row {s:?} is not n:m")));
            Ok((parse(n)?, parse(m)?))
        })
        .collect()
}

pub fn table1(seed: u64, draws: u64, rows: &[String], kv: bool) -> Result<(), Failure> {
    let rows = parse_rows(rows)?;
    let mut mismatches = 0;
    if !kv {
        println!(
            "{:>12} {:>6} {:>9} {:>9} {:>9} {:>9} {:>9} {:>9}  status",
            "(n, m)", "seed", "gaussian", "rand-fft", "group", "welch", "ref grp", "ref welch"
        );
    }
    for (n, m) in rows {
        let (group, welch) = measure_group(n, m)?;
        let reference = reference_row(n, m);
        let status = match reference {
            Some(r) if (group - r.group).abs() <= REFERENCE_TOL && (welch - r.welch).abs() <= REFERENCE_TOL => "ok",
            Some(_) => {
                mismatches += 1;
                "MISMATCH"
            }
            None => "-",
        };
        for s in seed..seed + draws.max(1) {
            let row = measure_row(n, m, s)?;
            let (ref_g, ref_w) = reference.map_or(("-".to_string(), "-".to_string()), |r| {
                (format!("{:.4}", r.group), format!("{:.4}", r.welch))
            });
            if kv {
                println!(
                    "n={n} m={m} seed={s} gaussian={} random_fourier={} group={group} welch={welch} ref_group={ref_g} ref_welch={ref_w} status={status}",
                    row.gaussian, row.random_fourier
                );
            } else {
                println!(
                    "{:>12} {s:>6} {:>9.4} {:>9.4} {group:>9.4} {welch:>9.4} {ref_g:>9} {ref_w:>9}  {status}",
                    format!("({n}, {m})"),
                    row.gaussian,
                    row.random_fourier
                );
            }
        }
    }
    if mismatches > 0 {
        eprintln!("{mismatches} row(s) differ from the reference values by more than {REFERENCE_TOL}");
        return Err(Failure::Verification);
    }
    Ok(())
}

pub fn bounds(r: u64, m_min: u64, m_max: u64, step: u64, kv: bool) -> Result<(), Failure> {
    if r < 1 || m_min < 1 || m_max < m_min || step < 1 {
        return Err(Failure::Input("need r >= 1, 1 <= m-min <= m-max, step >= 1".into()));
    }
    if !kv {
        println!(
            "{:>6} {:>8} {:>10} {:>10} {:>10} {:>10} {:>10} {:>10}",
            "m", "n=rm+1", "welch", "sqrt-r", "coset", "odd-m", "r3 upper", "r3 lower"
        );
    }
    let mut m = m_min;
    while m <= m_max {
        let n = r * m + 1;
        let welch = welch_bound(n, m)?;
        let sqrt_r = welch * (r as f64).sqrt();
        let coset = coset_upper_bound(m, r)?;
        let odd = if m % 2 == 1 && r % 2 == 0 { Some(odd_subgroup_upper_bound(m, r)?) } else { None };
        let r3 = if r == 3 { Some(index3_bounds(m)?) } else { None };
        if kv {
            println!(
                "r={r} m={m} n={n} welch={welch} sqrt_r={sqrt_r} coset={coset} odd_m={} r3_upper={} r3_lower_asymptotic={}",
                odd.map_or("nan".into(), |v| v.to_string()),
                r3.map_or("nan".into(), |b| b.upper.to_string()),
                r3.map_or("nan".into(), |b| b.asymptotic_lower.to_string()),
            );
        } else {
            println!(
                "{m:>6} {n:>8} {welch:>10.6} {sqrt_r:>10.6} {coset:>10.6} {:>10} {:>10} {:>10}",
                opt(odd),
                opt(r3.map(|b| b.upper)),
                opt(r3.map(|b| b.asymptotic_lower)),
            );
        }
        m += step;
    }
    Ok(())
}

pub fn verify(suite: &str, max_n: u64, verbose: bool) -> Result<(), Failure> {
    let suites: Vec<Suite> = if suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![suite.parse::<Suite>()?]
    };
    let mut failed = 0;
    for s in suites {
        let report = run_suite(s, max_n)?;
        let bad = report.checks.len() - report.passed_count();
        println!("suite {s} (max n {max_n}): {} checks, {bad} failed", report.checks.len());
        for check in &report.checks {
            if verbose || !check.passed {
                println!("  {check}");
            }
        }
        failed += bad;
    }
    if failed > 0 {
        Err(Failure::Verification)
    } else {
        Ok(())
    }
}

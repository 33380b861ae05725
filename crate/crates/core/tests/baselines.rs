use groupframe::analysis::{coherence, orbit_coherence};
use groupframe::baselines::{BaselineKind, BaselineSpec};

fn fraction_within(kind: BaselineKind, n: usize, m: usize, lo: f64, hi: f64) -> (f64, f64, f64) {
    let mut inside = 0;
    let (mut min, mut max) = (f64::INFINITY, 0.0f64);
    for seed in 0..50 {
        let f = BaselineSpec::new(kind, n, m, seed).unwrap().build().unwrap();
        let mu = match kind {
            BaselineKind::Gaussian => coherence(&f).unwrap(),
            BaselineKind::RandomFourier => orbit_coherence(&f).unwrap(),
        };
        inside += usize::from((lo..=hi).contains(&mu));
        min = min.min(mu);
        max = max.max(mu);
    }
    (inside as f64 / 50.0, min, max)
}

#[test]
fn gaussian_251_125_interval() {
    let (frac, min, max) = fraction_within(BaselineKind::Gaussian, 251, 125, 0.22, 0.32);
    assert!(frac >= 0.95, "{frac} in range, min {min} max {max}");
}

#[test]
fn random_fourier_499_166_interval() {
    let (frac, min, max) = fraction_within(BaselineKind::RandomFourier, 499, 166, 0.12, 0.25);
    assert!(frac >= 0.95, "{frac} in range, min {min} max {max}");
}

#[test]
fn same_seed_same_matrix() {
    for kind in [BaselineKind::Gaussian, BaselineKind::RandomFourier] {
        let spec = BaselineSpec::new(kind, 40, 9, 1234).unwrap();
        assert_eq!(spec.build().unwrap(), spec.build().unwrap());
    }
}

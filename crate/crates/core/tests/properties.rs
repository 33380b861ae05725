use groupframe::analysis::spectrum::{fourier_pairing, group_spectrum};
use groupframe::analysis::{coherence, frame_potential, orbit_coherence, tightness};
use groupframe::analysis::bounds::welch_bound;
use groupframe::frame::{
    build_abelian_frame, build_cyclic_frame, build_dihedral_frame, AbelianFrameSpec, CyclicFrameSpec, DihedralFrameSpec,
    FrameMatrix, Metadata,
};
use groupframe::frame_file::{format_frame, parse_frame};
use groupframe::numtheory::{find_generator, is_prime, mul_mod, subgroup_of_order};
use groupframe::Complex64;
use proptest::prelude::*;

fn small_prime() -> impl Strategy<Value = u64> {
    (3u64..400).prop_filter("prime", |&n| is_prime(n).unwrap())
}

fn distinct_exponents(n: u64) -> impl Strategy<Value = Vec<u64>> {
    proptest::sample::subsequence((0..n).collect::<Vec<_>>(), 2..=(n as usize).min(40))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn subgroups_are_closed(n in small_prime(), pick in any::<prop::sample::Index>()) {
        let ds = groupframe::numtheory::divisors(n - 1);
        let m = ds[pick.index(ds.len())];
        let sub = subgroup_of_order(&find_generator(n).unwrap(), m).unwrap();
        prop_assert_eq!(sub.elements().len() as u64, m);
        for &a in sub.elements() {
            for &b in sub.elements() {
                prop_assert!(sub.contains(mul_mod(a, b, n)));
            }
        }
    }

    #[test]
    fn pairing_round_trips((n, ks) in (3u64..120).prop_flat_map(|n| (Just(n), distinct_exponents(n)))) {
        let p = fourier_pairing(&CyclicFrameSpec::new(n, ks).unwrap());
        prop_assert!(p.count_error() <= 1e-6);
        prop_assert!(p.alpha_error() <= 1e-9);
    }

    #[test]
    fn cyclic_frames_are_tight_and_obey_welch((n, ks) in (5u64..90).prop_flat_map(|n| (Just(n), distinct_exponents(n)))) {
        let spec = CyclicFrameSpec::new(n, ks).unwrap();
        let f = build_cyclic_frame(&spec);
        let t = tightness(&f);
        prop_assert!(t.is_tight);
        prop_assert!((t.lambda - n as f64 / spec.m() as f64).abs() <= 1e-9);
        let mu = coherence(&f).unwrap();
        prop_assert!((mu - orbit_coherence(&f).unwrap()).abs() <= 1e-12);
        prop_assert!((mu - group_spectrum(&spec).coherence()).abs() <= 1e-12);
        if (spec.m() as u64) < n {
            prop_assert!(mu >= welch_bound(n, spec.m() as u64).unwrap() - 1e-9);
        }
        let nf = n as f64;
        prop_assert!((frame_potential(&f) - nf * nf / spec.m() as f64).abs() <= 1e-6);
    }

    #[test]
    fn abelian_frames_are_tight(
        orders in proptest::collection::vec(2u64..7, 1..=3),
        seed in any::<u64>(),
    ) {
        let m = *orders.iter().min().unwrap() as usize;
        let exps: Vec<Vec<u64>> = orders
            .iter()
            .enumerate()
            .map(|(j, &nj)| (0..m as u64).map(|i| (i + seed.rotate_left(j as u32 * 7)) % nj).collect())
            .collect();
        let spec = AbelianFrameSpec::new(orders.clone(), exps).unwrap();
        let f = build_abelian_frame(&spec);
        let big_n: u64 = orders.iter().product();
        let t = tightness(&f);
        prop_assert!(t.is_tight, "residual {}", t.residual);
        prop_assert!((t.lambda - big_n as f64 / m as f64).abs() <= 1e-9);
    }

    #[test]
    fn dihedral_frames_are_tight(n in (5u64..60).prop_filter("prime", |&n| is_prime(n).unwrap()), t in 2u64..60, m in 1usize..5) {
        let twist = t % n;
        prop_assume!(twist != 0);
        let ks: Vec<u64> = (1..=m as u64).filter(|&k| k < n).collect();
        let spec = DihedralFrameSpec::new(n, twist, ks).unwrap();
        let f = build_dihedral_frame(&spec);
        let tt = tightness(&f);
        prop_assert!(tt.is_tight);
        prop_assert!((tt.lambda - n as f64 / spec.m() as f64).abs() <= 1e-9);
    }

    #[test]
    fn frame_files_round_trip(rows in 1usize..12, cols in 1usize..12, bits in proptest::collection::vec(any::<(f64, f64)>(), 144)) {
        let data: Vec<Complex64> = bits
            .iter()
            .take(rows * cols)
            .map(|&(a, b)| Complex64::new(if a.is_finite() { a } else { 0.5 }, if b.is_finite() { b } else { -0.5 }))
            .collect();
        let f = FrameMatrix::from_columns(rows, cols, data, Metadata::new().with("k", "v")).unwrap();
        let g = parse_frame(&format_frame(&f)).unwrap();
        prop_assert_eq!(f.rows(), g.rows());
        prop_assert_eq!(f.metadata(), g.metadata());
        for (a, b) in f.data().iter().zip(g.data()) {
            prop_assert_eq!(a.re.to_bits(), b.re.to_bits());
            prop_assert_eq!(a.im.to_bits(), b.im.to_bits());
        }
    }
}

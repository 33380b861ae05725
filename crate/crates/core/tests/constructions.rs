use groupframe::analysis::dihedral::dihedral_dominance;
use groupframe::analysis::spectrum::prime_group_spectrum;
use groupframe::analysis::{coherence, distinct_magnitude_count, gram, is_equiangular};
use groupframe::frame::{build_cyclic_frame, build_prime_dihedral_frame, build_prime_group_frame, CyclicFrameSpec};
use groupframe::numtheory::{coset_table, difference_counts, find_generator, subgroup_of_order, translation_degree, CosetRef};

#[test]
fn quadratic_residue_frame_is_equiangular() {
    let f = build_prime_group_frame(7, 3).unwrap();
    assert!(is_equiangular(&f, 1e-12).unwrap());
    let g = gram(&f).unwrap();
    assert!((g.get(0, 1).norm() - 8f64.sqrt() / 6.0).abs() < 1e-12);
}

#[test]
fn full_group_frame_has_one_magnitude() {
    let f = build_prime_group_frame(31, 30).unwrap();
    assert_eq!(distinct_magnitude_count(&f).unwrap(), 1);
    assert!((coherence(&f).unwrap() - 1.0 / 30.0).abs() < 1e-12);
}

#[test]
fn thirteen_cubes_translation_degrees() {
    let sub = subgroup_of_order(&find_generator(13).unwrap(), 4).unwrap();
    let table = coset_table(&sub);
    assert_eq!(table.cosets(), &[vec![1, 5, 8, 12], vec![2, 3, 10, 11], vec![4, 6, 7, 9]]);
    assert_eq!(translation_degree(&table, CosetRef::Coset(0), CosetRef::Coset(0)).unwrap(), 0);
    assert_eq!(translation_degree(&table, CosetRef::Coset(1), CosetRef::Coset(2)).unwrap(), 1);
    assert_eq!(translation_degree(&table, CosetRef::Coset(0), CosetRef::Zero).unwrap(), 1);
    let a = difference_counts(&sub);
    assert_eq!(a.get(0), 4);
}

#[test]
fn dihedral_beats_cyclic_on_thirteen() {
    let cyc = build_prime_group_frame(13, 4).unwrap();
    let dih = build_prime_dihedral_frame(13, 4, 12).unwrap();
    let d = dihedral_dominance(&cyc, &dih).unwrap();
    assert!(d.dominated, "{d:?}");
    assert!(distinct_magnitude_count(&dih).unwrap() <= 6);
}

#[test]
fn spectrum_matches_matrix_for_arbitrary_sets() {
    let spec = CyclicFrameSpec::new(30, vec![0, 4, 9, 11, 25]).unwrap();
    let f = build_cyclic_frame(&spec);
    let s = groupframe::analysis::spectrum::group_spectrum(&spec);
    assert!((coherence(&f).unwrap() - s.coherence()).abs() < 1e-12);
}

#[test]
fn four_ninety_nine_three_values() {
    let s = prime_group_spectrum(499, 166).unwrap();
    assert_eq!(s.clusters.len(), 3);
    assert!(s.clusters.iter().all(|c| c.multiplicity == 166));
}

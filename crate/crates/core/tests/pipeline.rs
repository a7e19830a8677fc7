use atlas_core::branching::{weight_multiplicities, weyl_dimension};
use atlas_core::classify::{
    assemble_tables_2_3, reproduce_thm_ss_c2, ClassificationTable, Provenance, SharedOrbitData,
};
use atlas_core::cohom::SampleConfig;
use atlas_core::flags::{
    diagram_representatives, flag_cohom, kostant_summands, simple_types_up_to,
};
use atlas_core::linalg::{integer_scaled, rank_bareiss, rank_multimodular};
use atlas_core::nilpotent::{
    classical_label, label_representative, orbit_dimension, valid_partitions,
};
use atlas_core::{CartanType, ChevalleyAlgebra, RootSystem};
use num_bigint::BigInt;

fn ty(s: &str) -> CartanType {
    s.parse().unwrap()
}

#[test]
fn multimodular_rank_on_large_adjoint_matrices() {
    for s in ["E6", "B5"] {
        let a = ChevalleyAlgebra::from_type(&ty(s));
        let rs = a.root_system();
        let rho = rs.coweight_element(&vec![1; a.rank()]).unwrap();
        let mut x = integer_scaled(&rho.coroot);
        x.resize(a.dim(), BigInt::from(0));
        let m = a.ad_integer_matrix(&x);
        let r = rank_multimodular(&m);
        assert_eq!(r, rank_bareiss(&m), "{s}");
        assert_eq!(r, a.dim() - a.rank(), "{s}: regular semi-simple element");
    }
}

#[test]
fn representatives_realize_the_partition_formula() {
    for s in ["A4", "B3", "C3", "D4"] {
        let t = ty(s);
        let a = ChevalleyAlgebra::from_type(&t);
        for p in valid_partitions(&t).unwrap() {
            let formula = orbit_dimension(&t, &p).unwrap();
            let l = classical_label(&t, p).unwrap();
            let rep = label_representative(&a, &l, 5).unwrap();
            assert_eq!(a.orbit_dim(&rep.x), formula, "{t} {l}");
        }
    }
}

#[test]
fn flag_cohomogeneity_bounded_by_summands() {
    let cfg = SampleConfig::default();
    for s in simple_types_up_to(4) {
        let t = CartanType::simple(s);
        let a = ChevalleyAlgebra::from_type(&t);
        for pd in diagram_representatives(&t, 1) {
            let n = kostant_summands(a.root_system(), &pd).num_summands;
            let c = flag_cohom(&a, &pd, &cfg).unwrap().cohomogeneity;
            assert!(c >= n, "{pd}: cohom {c} < {n} summands");
        }
    }
}

#[test]
fn weight_tables_sum_to_weyl_dimension() {
    for (s, hw) in [
        ("A2", vec![2, 1]),
        ("B3", vec![0, 0, 1]),
        ("G2", vec![1, 1]),
        ("C3", vec![0, 1, 0]),
        ("D4", vec![1, 0, 1, 0]),
    ] {
        let rs = RootSystem::new(&ty(s));
        let table = weight_multiplicities(&rs, &hw).unwrap();
        assert_eq!(
            BigInt::from(table.dimension()),
            weyl_dimension(&rs, &hw),
            "{s} {hw:?}"
        );
        assert!(table.is_weyl_invariant(&rs), "{s} {hw:?}");
    }
}

#[test]
fn semisimple_scan_is_deterministic() {
    let cfg = SampleConfig::default();
    let a = reproduce_thm_ss_c2(3, &cfg).unwrap();
    let b = reproduce_thm_ss_c2(3, &cfg).unwrap();
    assert_eq!(a, b);
    assert!(a.all_match(), "{a}");
}

#[test]
fn tables_2_and_3_are_tagged_and_round_trip() {
    let (t2, t3) =
        assemble_tables_2_3(&SharedOrbitData::bundled(), &SampleConfig::default()).unwrap();
    assert_eq!(t2.rows.len(), 11);
    assert_eq!(t3.rows.len(), 7);
    for t in [&t2, &t3] {
        assert!(t.all_match(), "{t}");
        assert!(t.rows.iter().all(|r| r.provenance != Provenance::Computed));
        let text = serde_json::to_string(t).unwrap();
        let back: ClassificationTable = serde_json::from_str(&text).unwrap();
        assert_eq!(&back, t);
    }
    let external = t2
        .rows
        .iter()
        .filter(|r| r.provenance == Provenance::GeometricExternal)
        .count();
    assert_eq!(external, 3);
}

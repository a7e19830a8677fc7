use atlas_core::linalg::{
    kernel_basis, q, rank_bareiss, rank_multimodular, rank_rational, solve_linear,
};
use atlas_core::nilpotent::{dominates, Partition};
use atlas_core::{IntegerMatrix, RationalMatrix};
use proptest::prelude::*;

fn int_matrix(max_rows: usize, max_cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1..=max_rows, 1..=max_cols)
        .prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-4i64..=4, c), r))
}

/// Matrices of low rank: products of thin random factors.
fn low_rank_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..8, 1usize..8, 1usize..4).prop_flat_map(|(r, c, k)| {
        (
            prop::collection::vec(prop::collection::vec(-3i64..=3, k), r),
            prop::collection::vec(prop::collection::vec(-3i64..=3, c), k),
        )
            .prop_map(|(a, b)| {
                a.iter()
                    .map(|row| {
                        (0..b[0].len())
                            .map(|j| row.iter().zip(&b).map(|(x, br)| x * br[j]).sum())
                            .collect()
                    })
                    .collect()
            })
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..6, 1..7).prop_map(Partition::new)
}

fn same_size_pair() -> impl Strategy<Value = (Partition, Partition)> {
    (1usize..12).prop_flat_map(|n| {
        let all = Partition::all(n);
        let k = all.len();
        (0..k, 0..k).prop_map(move |(i, j)| (all[i].clone(), all[j].clone()))
    })
}

proptest! {
    #[test]
    fn bareiss_agrees_with_multimodular(rows in int_matrix(9, 9)) {
        let m = IntegerMatrix::from_i64_rows(&rows).unwrap();
        prop_assert_eq!(rank_bareiss(&m), rank_multimodular(&m));
    }

    #[test]
    fn low_rank_products(rows in low_rank_matrix()) {
        let m = IntegerMatrix::from_i64_rows(&rows).unwrap();
        let r = rank_bareiss(&m);
        prop_assert_eq!(r, rank_multimodular(&m));
        prop_assert_eq!(r, rank_rational(&RationalMatrix::from_i64_rows(&rows).unwrap()));
    }

    #[test]
    fn rank_plus_nullity(rows in int_matrix(7, 9)) {
        let m = RationalMatrix::from_i64_rows(&rows).unwrap();
        let kernel = kernel_basis(&m);
        prop_assert_eq!(m.rank() + kernel.len(), m.cols());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(|x| *x == q(0)));
        }
    }

    #[test]
    fn solutions_satisfy_the_system(rows in int_matrix(6, 6), x in prop::collection::vec(-5i64..=5, 6)) {
        let m = RationalMatrix::from_i64_rows(&rows).unwrap();
        let x: Vec<_> = x[..m.cols()].iter().map(|&v| q(v)).collect();
        let b = m.mul_vec(&x);
        let sol = solve_linear(&m, &b).unwrap().expect("consistent by construction");
        prop_assert_eq!(m.mul_vec(&sol), b);
    }

    #[test]
    fn dual_partition_is_an_involution(p in partition()) {
        prop_assert_eq!(p.dual().dual(), p.clone());
        prop_assert_eq!(p.dual().total(), p.total());
    }

    #[test]
    fn dominance_reverses_under_duality((p, q2) in same_size_pair()) {
        prop_assert!(dominates(&p, &p).unwrap());
        prop_assert_eq!(dominates(&p, &q2).unwrap(), dominates(&q2.dual(), &p.dual()).unwrap());
    }
}

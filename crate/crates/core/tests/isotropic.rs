use kalman_degree::isotropic::{
    isotropic_degree, isotropic_degree_symmetric, partition_codim, partition_tuple_codim, symmetric_tuple_codim,
    NORMALIZED_MATRIX_REFERENCE,
};
use kalman_degree::TensorFormat;
use num_bigint::BigInt;
use proptest::prelude::*;

#[test]
fn general_sum_reduces_to_symmetric_closed_form() {
    for n in 2..=8 {
        for w in 1..=4 {
            let r = isotropic_degree(&TensorFormat::new(vec![n], vec![w]).unwrap()).unwrap();
            assert_eq!(r.degree, isotropic_degree_symmetric(n, w).unwrap(), "n={n} ω={w}");
        }
    }
}

#[test]
fn quadric_factors_split_into_components() {
    for k in 1..=4 {
        let r = isotropic_degree(&TensorFormat::new(vec![2; k], vec![1; k]).unwrap()).unwrap();
        assert_eq!(r.components, BigInt::from(1u32 << k));
        assert_eq!(r.ambient_dim, 0);
    }
    let r = isotropic_degree(&TensorFormat::new(vec![2, 2], vec![1, 1]).unwrap()).unwrap();
    assert_eq!((r.degree, r.components), (4.into(), 4.into()));
}

#[test]
fn codimension_column_for_matrices() {
    let col: Vec<u32> = (2..=6).map(|n| symmetric_tuple_codim(n, 2).unwrap()).collect();
    assert_eq!(col, [1, 2, 3, 4, 5]);
    for (n, codim, _deg) in NORMALIZED_MATRIX_REFERENCE {
        assert_eq!(symmetric_tuple_codim(n, 2).unwrap(), codim);
    }
    assert_eq!(symmetric_tuple_codim(3, 2).unwrap(), 2);
    // binary tensors: k - 1
    for k in 1..=6 {
        assert_eq!(symmetric_tuple_codim(2, k).unwrap(), k - 1);
    }
}

#[test]
fn partition_codimensions() {
    assert_eq!(partition_codim(2, &[2, 1]).unwrap(), 1);
    assert_eq!(partition_codim(2, &[2, 2]).unwrap(), 2);
    assert_eq!(partition_codim(2, &[3, 1]).unwrap(), 2);
    // (2, 1^(k-2)) always gives a hypersurface for n = 2
    for k in 2..=7 {
        let mut p = vec![2];
        p.extend(std::iter::repeat_n(1, k - 2));
        assert_eq!(partition_codim(2, &p).unwrap(), 1);
    }
    assert_eq!(partition_tuple_codim(4, 5, 5).unwrap(), 0);
    assert_eq!(partition_tuple_codim(4, 5, 1).unwrap(), symmetric_tuple_codim(4, 5).unwrap());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn degree_is_symmetric_in_factors(a in (2u32..=4, 1u32..=3), b in (2u32..=4, 1u32..=3)) {
        let f = TensorFormat::new(vec![a.0, b.0], vec![a.1, b.1]).unwrap();
        let g = TensorFormat::new(vec![b.0, a.0], vec![b.1, a.1]).unwrap();
        prop_assert_eq!(isotropic_degree(&f).unwrap(), isotropic_degree(&g).unwrap());
    }

    #[test]
    fn degree_is_positive_and_even(n in prop::collection::vec(2u32..=4, 1..=3), w in 1u32..=3) {
        let k = n.len();
        let r = isotropic_degree(&TensorFormat::new(n, vec![w; k]).unwrap()).unwrap();
        prop_assert!(r.degree > BigInt::from(0));
        prop_assert_eq!(&r.degree % 2, BigInt::from(0));
    }
}

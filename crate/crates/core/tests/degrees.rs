use kalman_degree::{
    binary_degree, check_stabilization, extract_degree, kalman_degree, symmetric_degree, CodimVec, TensorFormat,
};
use num_bigint::BigInt;
use num_integer::binomial;
use proptest::prelude::*;

fn d(n: &[u32], delta: &[u32], omega: &[u32]) -> BigInt {
    let fmt = TensorFormat::new(n.to_vec(), omega.to_vec()).unwrap();
    extract_degree(&fmt, &CodimVec::new(delta.to_vec())).unwrap()
}

#[test]
fn worked_example_with_subvarieties() {
    let fmt = TensorFormat::new(vec![4, 4], vec![1, 1]).unwrap();
    let delta = CodimVec::new(vec![2, 1]);
    assert_eq!(extract_degree(&fmt, &delta).unwrap(), 20.into());
    assert_eq!(kalman_degree(&fmt, &delta, &[3, 2]).unwrap(), 120.into());
}

#[test]
fn matrix_ed_degree_is_the_minimum() {
    for p in 1..=6 {
        for q in 1..=6 {
            assert_eq!(d(&[p, q], &[0, 0], &[1, 1]), p.min(q).into(), "{p}x{q}");
        }
    }
    assert_eq!(d(&[2, 2, 2], &[0, 0, 0], &[1, 1, 1]), 6.into());
}

#[test]
fn single_factor_matches_closed_form() {
    for n in 1..=8 {
        for delta in 0..n {
            for w in 1..=4 {
                assert_eq!(d(&[n], &[delta], &[w]), symmetric_degree(n, delta, w).unwrap(), "n={n} δ={delta} ω={w}");
            }
        }
    }
}

// The binary closed form C(k, δ)·∏ω gives 3 here; extraction gives 6
// (k!/δ! for ω = 1). Extraction is taken as the ground truth.
#[test]
fn binary_closed_form_discrepancy() {
    let delta = CodimVec::new(vec![1, 0, 0]);
    let extracted = binary_degree(&[1, 1, 1], &delta).unwrap();
    assert_eq!(extracted, 6.into());
    let closed = binomial(BigInt::from(3), BigInt::from(delta.total()));
    assert_eq!(closed, 3.into());
    assert_ne!(extracted, closed);
}

#[test]
fn stabilization_at_threshold() {
    // all formats with k ≤ 3, n_j ≤ 4 for the other factors, ω = 1
    let mut checked = 0;
    for k in 1..=3usize {
        let others: Vec<Vec<u32>> = (0..k - 1).fold(vec![vec![]], |acc, _| {
            acc.into_iter()
                .flat_map(|p| {
                    (1..=4).map(move |x| {
                        let mut v = p.clone();
                        v.push(x);
                        v
                    })
                })
                .collect()
        });
        for rest in others {
            for delta_0 in 0..=2u32 {
                let thr = rest.iter().map(|n| n - 1).sum::<u32>() + delta_0 + 1;
                if delta_0 > thr - 1 {
                    continue;
                }
                let mut n = vec![thr];
                n.extend(&rest);
                let fmt = TensorFormat::new(n, vec![1; k]).unwrap();
                let rep = check_stabilization(&fmt, &CodimVec::leading(k, delta_0), 0, 3).unwrap();
                assert_eq!(rep.threshold, thr);
                assert!(rep.stable, "{:?}", rep.values);
                checked += 1;
            }
        }
    }
    assert!(checked > 50);
}

#[test]
fn stabilization_rejects_weighted_factor() {
    let fmt = TensorFormat::new(vec![5, 2], vec![2, 1]).unwrap();
    assert!(check_stabilization(&fmt, &CodimVec::zeros(2), 0, 2).is_err());
    let fmt = TensorFormat::new(vec![1, 3], vec![1, 1]).unwrap();
    assert!(check_stabilization(&fmt, &CodimVec::zeros(2), 0, 2).is_err());
}

fn format_strategy() -> impl Strategy<Value = (Vec<u32>, Vec<u32>, Vec<u32>)> {
    (1usize..=3).prop_flat_map(|k| {
        (prop::collection::vec(1u32..=4, k), prop::collection::vec(1u32..=3, k)).prop_flat_map(|(n, w)| {
            let deltas: Vec<_> = n.iter().map(|&x| 0..x).collect();
            (Just(n), deltas, Just(w))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permuting_factors_leaves_degree_unchanged((n, delta, w) in format_strategy(), shift in 0usize..3) {
        let k = n.len();
        let rot = |v: &[u32]| -> Vec<u32> { (0..k).map(|i| v[(i + shift) % k]).collect() };
        prop_assert_eq!(d(&n, &delta, &w), d(&rot(&n), &rot(&delta), &rot(&w)));
    }

    #[test]
    fn trivial_factor_is_neutral((n, delta, w) in format_strategy(), extra_w in 1u32..=4) {
        let mut n2 = n.clone();
        n2.push(1);
        let mut d2 = delta.clone();
        d2.push(0);
        let mut w2 = w.clone();
        w2.push(extra_w);
        prop_assert_eq!(d(&n, &delta, &w), d(&n2, &d2, &w2));
    }

    #[test]
    fn kalman_degree_scales_by_deg_z((n, delta, w) in format_strategy(), z in 1u64..=5) {
        let fmt = TensorFormat::new(n.clone(), w).unwrap();
        let dv = CodimVec::new(delta);
        let deg_z = vec![z; n.len()];
        let expect = extract_degree(&fmt, &dv).unwrap() * BigInt::from(z).pow(n.len() as u32);
        prop_assert_eq!(kalman_degree(&fmt, &dv, &deg_z).unwrap(), expect);
    }
}

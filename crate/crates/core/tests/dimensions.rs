use commtrace::repdims::{self, hook_content};
use commtrace::{Partition, Staircase};
use num_bigint::BigUint;
use proptest::prelude::*;

#[test]
fn weyl_and_hook_content_agree() {
    for lambda in Partition::all_up_to_size(6) {
        for n in lambda.length().max(1)..=12 {
            let sp = repdims::dim_symplectic(&lambda, n).unwrap();
            assert_eq!(sp, hook_content::dim_symplectic(&lambda, n).unwrap(), "Sp {lambda} n={n}");
            let odd = repdims::dim_so_odd(&lambda, n).unwrap();
            assert_eq!(odd, hook_content::dim_so_odd(&lambda, n).unwrap(), "SO odd {lambda} n={n}");
            if lambda.length() < n {
                let even = repdims::dim_so_even(&lambda, n).unwrap();
                assert_eq!(even, hook_content::dim_so_even(&lambda, n).unwrap(), "SO even {lambda} n={n}");
            }
        }
    }
}

#[test]
fn dimensions_grow_at_least_linearly() {
    let three_halves = |small: &BigUint, large: &BigUint| large * 2u32 >= small * 3u32;
    for lambda in Partition::all_up_to_size(6).into_iter().filter(|l| !l.is_empty()) {
        for n in lambda.size() as usize + 1..=10 {
            let grows = [
                three_halves(
                    &repdims::dim_symplectic(&lambda, n).unwrap(),
                    &repdims::dim_symplectic(&lambda, 2 * n).unwrap(),
                ),
                three_halves(
                    &repdims::dim_so_even(&lambda, n).unwrap(),
                    &repdims::dim_so_even(&lambda, 2 * n).unwrap(),
                ),
                three_halves(
                    &repdims::dim_so_odd(&lambda, n).unwrap(),
                    &repdims::dim_so_odd(&lambda, 2 * n).unwrap(),
                ),
            ];
            assert!(grows.iter().all(|&g| g), "{lambda} n={n}");
        }
    }
}

#[test]
fn unitary_dimensions_of_known_families() {
    for n in 2..=10u64 {
        let mut adj = vec![0i64; n as usize];
        adj[0] = 1;
        adj[n as usize - 1] = -1;
        let d = repdims::dim_unitary(&Staircase::new(adj).unwrap(), n as usize).unwrap();
        assert_eq!(d, BigUint::from(n * n - 1));

        let mut sym2 = vec![0i64; n as usize];
        sym2[0] = 2;
        let d = repdims::dim_unitary(&Staircase::new(sym2).unwrap(), n as usize).unwrap();
        assert_eq!(d, BigUint::from(n * (n + 1) / 2));
    }
}

proptest! {
    #[test]
    fn unitary_dimension_is_shift_invariant(
        mut entries in prop::collection::vec(-4i64..=4, 1..=6),
        shift in -5i64..=5,
    ) {
        entries.sort_unstable_by(|a, b| b.cmp(a));
        let gamma = Staircase::new(entries).unwrap();
        let n = gamma.height();
        let d = repdims::dim_unitary(&gamma, n).unwrap();
        prop_assert!(d >= BigUint::from(1u32));
        prop_assert_eq!(repdims::dim_unitary(&gamma.shifted(shift), n).unwrap(), d);
    }
}

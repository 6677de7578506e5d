use commtrace::moments::{
    clt_report, finite_commutator_average, gaussian_moment, moment_so_even, moment_so_odd, moment_symplectic,
    moment_unitary, FiniteGroup,
};
use commtrace::repdims::{dim_so_even, dim_so_odd, dim_symplectic, dim_unitary};
use commtrace::tableaux::{staircase_counts, updown_counts};
use commtrace::{Error, ExactRational, GroupKind, TypeVector};
use num_bigint::BigUint;

fn q(p: i64, d: i64) -> ExactRational {
    ExactRational::new(p, d).unwrap()
}

fn pow(base: usize, e: usize) -> BigUint {
    BigUint::from(base).pow(e as u32)
}

#[test]
fn tensor_power_dimension_identities() {
    for r in 0..=6 {
        for n in 1..=8 {
            let layer = updown_counts(r, Some(n)).unwrap();
            let sp: BigUint = layer.iter().map(|(l, f)| f * dim_symplectic(l, n).unwrap()).sum();
            assert_eq!(sp, pow(2 * n, r), "Sp r={r} n={n}");
            if n > r {
                let odd: BigUint = layer.iter().map(|(l, f)| f * dim_so_odd(l, n).unwrap()).sum();
                assert_eq!(odd, pow(2 * n + 1, r), "SO odd r={r} n={n}");
                let even: BigUint = layer.iter().map(|(l, f)| f * dim_so_even(l, n).unwrap()).sum();
                assert_eq!(even, pow(2 * n, r), "SO even r={r} n={n}");
            }
        }
    }
    for n in 1..=4 {
        for r in 0..=3 {
            for s in 0..=3 {
                let ty = TypeVector::canonical(r, s);
                let total: BigUint = staircase_counts(n, &ty)
                    .unwrap()
                    .iter()
                    .map(|(g, c)| c * dim_unitary(g, n).unwrap())
                    .sum();
                assert_eq!(total, pow(n, r + s), "U n={n} r={r} s={s}");
            }
        }
    }
}

#[test]
fn closed_forms() {
    for n in 3..=10i64 {
        let expected = q(1, 1) + q(1, n * (2 * n + 1)) + q(1, (n - 1) * (2 * n + 1));
        assert_eq!(moment_symplectic(n as usize, 1, 2).unwrap(), expected, "n={n}");
        assert_eq!(moment_unitary(n as usize, 1, 1, 1).unwrap(), q(1, 1) + q(1, n * n - 1));
        for k in 1..=3u32 {
            assert_eq!(moment_symplectic(n as usize, k as usize, 1).unwrap(), q(1, (2 * n).pow(2 * k - 1)));
            assert_eq!(moment_unitary(n as usize, k as usize, 1, 0).unwrap(), q(1, n.pow(2 * k - 1)));
        }
    }
    assert_eq!(moment_symplectic(3, 1, 2).unwrap(), q(47, 42));
    assert_eq!(moment_so_even(4, 1, 2).unwrap(), q(1, 1) + q(1, 35) + q(1, 28));
    assert_eq!(moment_unitary(5, 1, 1, 1).unwrap(), q(25, 24));
    assert_eq!(moment_unitary(10, 1, 1, 1).unwrap(), q(100, 99));
}

#[test]
fn zeroth_moment_and_regimes() {
    for n in 1..=6 {
        assert_eq!(moment_symplectic(n, 2, 0).unwrap(), q(1, 1));
        assert_eq!(moment_unitary(n, 2, 0, 0).unwrap(), q(1, 1));
    }
    assert!(matches!(moment_so_even(2, 1, 3), Err(Error::Regime(_))));
    assert!(matches!(moment_so_odd(3, 1, 3), Err(Error::Regime(_))));
    assert!(moment_so_odd(4, 1, 3).is_ok());
}

#[test]
fn gaps_shrink_like_one_over_n() {
    let ns: Vec<usize> = (1..=8).map(|i| 5 * i).collect();
    for kind in GroupKind::ALL {
        for k in 1..=2 {
            for r in 1..=4 {
                let s = if kind == GroupKind::Unitary { r } else { 0 };
                let reports = clt_report(kind, k, r, s, &ns).unwrap();
                let scaled: Vec<ExactRational> = reports
                    .iter()
                    .map(|m| m.gap.clone() * ExactRational::from(m.query.group.n as i64))
                    .collect();
                let c = scaled[0].clone() * q(2, 1) + q(1, 1);
                for (m, v) in reports.iter().zip(&scaled) {
                    assert!(v <= &c, "{kind} k={k} r={r} n={}: n*gap = {v}", m.query.group.n);
                }
                let limit = ExactRational::from(&gaussian_moment(r));
                if kind != GroupKind::Unitary {
                    assert_eq!(reports[0].limit, limit);
                }
            }
        }
    }
}

#[test]
fn finite_groups_match_inverse_dimension_powers() {
    for name in ["s3", "q8"] {
        let g = FiniteGroup::builtin(name).unwrap();
        for chi in 0..g.characters.len() {
            let d = g.dimension(chi);
            for k in 1..=2u32 {
                let avg = finite_commutator_average(&g, chi, k as usize).unwrap();
                assert_eq!(avg, q(1, d.pow(2 * k - 1)), "{name} chi={chi} k={k}");
            }
        }
    }
}

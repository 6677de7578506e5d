use commtrace::haar::{estimate_moments, sample, EstimateConfig};
use commtrace::moments::exact_moment;
use commtrace::moments::MomentQuery;
use commtrace::{GroupFamily, GroupKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;

const SEED: u64 = 7;

#[test]
fn a_thousand_samples_are_group_members() {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for kind in GroupKind::ALL {
        for i in 0..1000 {
            let n = 2 + i % 4;
            let family = GroupFamily::new(kind, n).unwrap();
            let g = sample(family, &mut rng).unwrap();
            g.validate().unwrap_or_else(|e| panic!("{family}: {e}"));
        }
    }
}

/// Asymptotic Kolmogorov tail probability.
fn kolmogorov_p(d: f64, n: usize) -> f64 {
    let t = d * (n as f64).sqrt();
    let sum: f64 = (1..=100)
        .map(|j| {
            let j = j as f64;
            let sign = if j as i64 % 2 == 1 { 1.0 } else { -1.0 };
            sign * (-2.0 * j * j * t * t).exp()
        })
        .sum();
    (2.0 * sum).clamp(0.0, 1.0)
}

fn ks_uniform(mut u: Vec<f64>) -> f64 {
    u.sort_by(f64::total_cmp);
    let n = u.len() as f64;
    let d = u
        .iter()
        .enumerate()
        .map(|(i, &x)| (x - i as f64 / n).max((i + 1) as f64 / n - x))
        .fold(0.0, f64::max);
    kolmogorov_p(d, u.len())
}

fn angles(family: GroupFamily, entry: (usize, usize), count: usize) -> Vec<f64> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..count)
        .map(|_| {
            let m = sample(family, &mut rng).unwrap().matrix().clone();
            let z = m[(0, 0)];
            let im = if entry == (0, 0) { z.im } else { m[entry].re };
            (im.atan2(z.re) + PI) / (2.0 * PI)
        })
        .collect()
}

#[test]
fn circle_groups_have_uniform_angles() {
    let p_u1 = ks_uniform(angles(GroupFamily::unitary(1).unwrap(), (0, 0), 20_000));
    assert!(p_u1 > 0.001, "U(1) KS p = {p_u1}");
    let p_so2 = ks_uniform(angles(GroupFamily::so_even(1).unwrap(), (1, 0), 20_000));
    assert!(p_so2 > 0.001, "SO(2) KS p = {p_so2}");
}

#[test]
fn kolmogorov_tail_reference_values() {
    // K(1.36) ≈ 0.049, K(1.63) ≈ 0.0098
    assert!((kolmogorov_p(1.36, 1) - 0.0494).abs() < 1e-3);
    assert!((kolmogorov_p(1.63, 1) - 0.0098).abs() < 1e-3);
}

#[test]
fn empirical_moments_agree_with_exact_values() {
    let families = [
        GroupFamily::symplectic(3).unwrap(),
        GroupFamily::so_even(5).unwrap(),
        GroupFamily::so_odd(5).unwrap(),
        GroupFamily::unitary(4).unwrap(),
    ];
    for group in families {
        for k in 1..=2 {
            let est = estimate_moments(&EstimateConfig {
                group,
                k,
                r_max: 4,
                s_max: 2,
                sample_count: 20_000,
                seed: SEED,
                workers: 2,
            })
            .unwrap();
            for m in &est.moments {
                if m.r + m.s == 0 || m.r + m.s > 4 {
                    continue;
                }
                let exact = exact_moment(&MomentQuery::new(group, k, m.r, m.s).unwrap()).unwrap();
                let z = ((m.mean_re - exact.value.to_f64()).powi(2) + m.mean_im.powi(2)).sqrt() / m.stderr;
                assert!(z < 4.0, "{group} k={k} r={} s={}: {} vs {} (z = {z})", m.r, m.s, m.mean_re, exact.value);
            }
        }
    }
}

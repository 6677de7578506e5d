//! Monte Carlo moment estimates next to the exact values, plus the shape of
//! the trace distribution.

use commtrace::haar::stats::RealSummary;
use commtrace::haar::{estimate_moments, trace_samples, EstimateConfig};
use commtrace::moments::{exact_moment, MomentQuery};
use commtrace::GroupFamily;

fn main() -> commtrace::Result<()> {
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get());
    let group = GroupFamily::unitary(6)?;
    let est = estimate_moments(&EstimateConfig {
        group,
        k: 1,
        r_max: 2,
        s_max: 2,
        sample_count: 20_000,
        seed: 42,
        workers,
    })?;
    println!("{group}, {} samples", est.samples);
    for m in &est.moments {
        let exact = exact_moment(&MomentQuery::new(group, 1, m.r, m.s)?)?.value;
        println!(
            "  r={} s={}: {:+.4} {:+.4}i ± {:.4}   exact {exact}",
            m.r, m.s, m.mean_re, m.mean_im, m.stderr
        );
    }

    let traces = trace_samples(GroupFamily::symplectic(6)?, 1, 20_000, 42, workers)?;
    let s = RealSummary::from_samples(&traces.iter().map(|t| t.re).collect::<Vec<_>>());
    println!(
        "Sp(12) trace: mean {:.4}, variance {:.4}, skewness {:.4} ± {:.4}, kurtosis {:.4} ± {:.4}",
        s.mean, s.variance, s.skewness, s.skewness_se, s.kurtosis, s.kurtosis_se
    );
    Ok(())
}

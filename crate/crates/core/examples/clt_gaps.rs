//! Distance from the exact moments to their Gaussian limits as n grows.

use commtrace::moments::{clt_report, gaps_weakly_decreasing};
use commtrace::GroupKind;

fn main() -> commtrace::Result<()> {
    let ns = [5, 10, 20, 40];
    for (kind, r, s) in [
        (GroupKind::Symplectic, 4, 0),
        (GroupKind::SpecialOrthogonalOdd, 4, 0),
        (GroupKind::Unitary, 2, 2),
    ] {
        let reports = clt_report(kind, 1, r, s, &ns)?;
        println!("{kind} r={r} s={s}, limit {}", reports[0].limit);
        for m in &reports {
            println!("  n={:<3} exact {:.8}  gap {:.3e}", m.query.group.n, m.exact.to_f64(), m.gap.to_f64());
        }
        println!("  gaps decreasing: {}", gaps_weakly_decreasing(&reports));
    }
    Ok(())
}

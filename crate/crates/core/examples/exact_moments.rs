//! Exact moments E[T^r conj(T)^s] of the trace of a product of k Haar
//! commutators.

use commtrace::moments::{exact_moment, MomentQuery};
use commtrace::GroupFamily;

fn main() -> commtrace::Result<()> {
    let queries = [
        (GroupFamily::symplectic(3)?, 1, 2, 0),
        (GroupFamily::symplectic(3)?, 2, 1, 0),
        (GroupFamily::so_even(4)?, 1, 2, 0),
        (GroupFamily::so_odd(5)?, 1, 4, 0),
        (GroupFamily::unitary(5)?, 1, 1, 1),
        (GroupFamily::unitary(3)?, 1, 3, 0),
    ];
    for (group, k, r, s) in queries {
        let sum = exact_moment(&MomentQuery::new(group, k, r, s)?)?;
        println!(
            "{group:<8} k={k} r={r} s={s}: {} ≈ {:.10} ({} labels)",
            sum.value,
            sum.value.to_f64(),
            sum.term_count
        );
    }
    Ok(())
}

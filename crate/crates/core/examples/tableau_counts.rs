//! Up-down tableau counts, with and without a row bound, and up-down
//! staircase counts for a unitary type vector.

use commtrace::tableaux::{count_staircase, count_updown, updown_counts};
use commtrace::{Partition, Staircase, TypeVector};

fn main() -> commtrace::Result<()> {
    let empty = Partition::empty();
    for r in (0..=8).step_by(2) {
        let free = count_updown(&empty, r, None)?;
        let one_row = count_updown(&empty, r, Some(1))?;
        println!("walks ∅ -> ∅ of length {r}: {free} (one row: {one_row})");
    }

    println!("\nlength-4 walks by end shape:");
    for (shape, count) in updown_counts(4, None)? {
        println!("  {shape:<10} {count}");
    }

    let ty: TypeVector = "+1,+1,-1".parse()?;
    let target = Staircase::new(vec![1, 0, 0])?;
    println!("\nstaircase walks of type {ty} to {target}: {}", count_staircase(&target, &ty));
    Ok(())
}

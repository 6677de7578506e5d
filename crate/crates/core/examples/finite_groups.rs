//! Brute-force commutator averages of irreducible characters of S3 and Q8,
//! compared with 1/d^(2k-1).

use commtrace::moments::{finite_commutator_average, FiniteGroup};
use commtrace::ExactRational;

fn main() -> commtrace::Result<()> {
    for name in ["s3", "q8"] {
        let group = FiniteGroup::builtin(name)?;
        println!("{name} (order {})", group.order());
        for (chi, character) in group.characters.iter().enumerate() {
            let d = group.dimension(chi);
            for k in 1..=3 {
                let avg = finite_commutator_average(&group, chi, k)?;
                let expected = ExactRational::new(1, d.pow(2 * k as u32 - 1))?;
                println!("  {:<6} k={k}: {avg} (expected {expected})", character.label);
            }
        }
    }
    Ok(())
}

//! Draw Haar-random elements of each family and report how far they are
//! from exact group membership.

use commtrace::haar::{commutator_product_trace, sample};
use commtrace::{GroupFamily, GroupKind};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn main() -> commtrace::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for kind in GroupKind::ALL {
        let family = GroupFamily::new(kind, 3)?;
        let g = sample(family, &mut rng)?;
        let res = g.residuals();
        println!(
            "{family:<7} trace {:.4}  |U*U - I| {:.1e}  |det - 1| {:.1e}  |Im| {:.1e}  |U^T J U - J| {:.1e}",
            g.trace(),
            res.unitarity,
            res.determinant,
            res.imaginary,
            res.symplectic
        );
        let xs = [sample(family, &mut rng)?, sample(family, &mut rng)?];
        let ys = [sample(family, &mut rng)?, sample(family, &mut rng)?];
        println!("        trace of [x1,y1][x2,y2]: {:.4}", commutator_product_trace(&xs, &ys)?);
    }
    Ok(())
}

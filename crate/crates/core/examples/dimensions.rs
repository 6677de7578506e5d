//! Irreducible dimensions of Sp(2n), SO(2n), SO(2n+1) and U(n), checked
//! against the hook-content formulas.

use commtrace::repdims::{dim_partition, dim_unitary, hook_content};
use commtrace::{GroupFamily, GroupKind, Partition, Staircase};

fn main() -> commtrace::Result<()> {
    let shapes: Vec<Partition> = ["1", "2", "1,1", "2,1", "3,1,1"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let n = 4;
    for kind in [GroupKind::Symplectic, GroupKind::SpecialOrthogonalEven, GroupKind::SpecialOrthogonalOdd] {
        let family = GroupFamily::new(kind, n)?;
        print!("{family:<8}");
        for lambda in &shapes {
            print!("  {lambda}: {}", dim_partition(family, lambda)?);
        }
        println!();
    }
    let lambda: Partition = "3,1,1".parse()?;
    println!(
        "hook-content cross-check for {lambda}: Sp {} / SO(9) {}",
        hook_content::dim_symplectic(&lambda, n)?,
        hook_content::dim_so_odd(&lambda, n)?
    );

    let adjoint = Staircase::new(vec![1, 0, 0, -1])?;
    println!("U(4) {adjoint}: {}", dim_unitary(&adjoint, 4)?);
    println!("U(4) shifted by 3: {}", dim_unitary(&adjoint.shifted(3), 4)?);
    Ok(())
}

//! Explicit auxiliary states when ψ ≺ φ has prefix equalities.

use locc_recovery::general::{check, construct_aux, witness_general, Scheme};
use locc_recovery::vectors::majorize;
use locc_recovery::witness::recovers;
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let p = SchmidtVector::proportional;
    let instances = [
        (p(&[8, 5, 4, 3])?, p(&[8, 6, 4, 2])?),
        (p(&[7, 6, 5, 2])?, p(&[8, 6, 4, 2])?),
        (p(&[8, 5, 5, 2])?, p(&[8, 6, 4, 2])?),
        (p(&[460, 460, 360, 264, 264, 199, 199])?, p(&[520, 400, 360, 288, 240, 200, 198])?),
    ];
    for (psi, phi) in &instances {
        let delta = majorize(psi, phi)?.delta_set;
        let c = construct_aux(psi, phi, Scheme::Auto)?;
        let w = witness_general(psi, phi, &c.chi, &c.partition)?;
        println!("delta={delta:?} scheme={:?} blocks={:?}", c.scheme, c.partition.block_dims);
        println!("  chi={}", c.chi);
        println!("  omega={} transfers={}", w.omega, w.transfers.len());
        println!(
            "  checker={} recovers={}",
            check(psi, phi, &c.chi, &c.partition)?,
            recovers(psi, phi, &c.chi, &w.omega)
        );
    }
    Ok(())
}

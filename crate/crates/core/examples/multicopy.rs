//! Copies of the transformation versus copies of the auxiliary state.

use locc_recovery::applications::{multicopy_k0, multicopy_recover, CopyMode};
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let v = |s: &[&str]| SchmidtVector::parse(s, s.len(), true);
    let chi = v(&["2/3", "1/3"])?;
    let phi = v(&["5/9", "4/9"])?;
    let psi = v(&["1/2", "1/2"])?;
    let k0 = multicopy_k0(&chi, &phi)?;
    println!("copies of the target needed: {k0}");
    for copies in [k0 - 1, k0] {
        let r = multicopy_recover(&psi, &phi, &chi, copies, CopyMode::Target)?;
        println!("  {copies} copies: {:?}", r.case);
    }

    // A repeated two-level target where two copies of χ help but one does not.
    let phi = SchmidtVector::proportional(&[3, 3, 3, 3, 2, 2])?;
    let psi = SchmidtVector::proportional(&[17, 17, 17, 17, 14, 14])?;
    let chi = v(&["3/5", "2/5"])?;
    for copies in 1..=3 {
        let r = multicopy_recover(&psi, &phi, &chi, copies, CopyMode::Auxiliary)?;
        println!("chi^{copies}: {:?} feasible={}", r.case, r.feasible);
    }
    Ok(())
}

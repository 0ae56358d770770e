//! Closed-form verdicts when ψ ⊲ φ, with witnesses.

use locc_recovery::strict::{decide_strict, recover_strict};
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let p = SchmidtVector::proportional;
    let chi = SchmidtVector::parse(&["3/5", "2/5"], 2, true)?;
    for phi in [p(&[3, 3, 2, 2])?, p(&[3, 3, 2])?, p(&[3, 2, 2])?, p(&[5, 3, 2])?] {
        let verdict = decide_strict(&phi, &chi)?;
        println!("phi={phi}: {:?} feasible={} detail={:?}", verdict.case, verdict.feasible, verdict.detail);
    }

    let psi = SchmidtVector::parse(&["0.27", "0.27", "0.23", "0.23"], 4, true)?;
    let phi = p(&[3, 3, 2, 2])?;
    let (_, witness) = recover_strict(&psi, &phi, &chi)?;
    if let Some(w) = witness {
        println!("transfer {}→{} epsilon={} omega={}", w.i, w.j, w.epsilon, w.omega);
    }
    Ok(())
}

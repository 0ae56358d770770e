//! Majorization reports: equality prefixes, first violation, strictness.

use locc_recovery::{majorize, SchmidtVector};

fn main() -> locc_recovery::Result<()> {
    let v = |s: &[&str]| SchmidtVector::parse(s, s.len(), true);
    let psi = v(&["0.4", "0.25", "0.2", "0.15"])?;
    let phi = v(&["0.4", "0.3", "0.2", "0.1"])?;

    for (name, x, y) in [("psi vs phi", &psi, &phi), ("phi vs psi", &phi, &psi), ("phi vs phi", &phi, &phi)] {
        let r = majorize(x, y)?;
        println!(
            "{name}: majorized={} strict={} delta={:?} first_violation={:?}",
            r.majorized, r.strict, r.delta_set, r.first_violation
        );
    }

    // Tensor products preserve majorization.
    let chi = v(&["0.6", "0.4"])?;
    println!("psi⊗chi ≺ phi⊗chi: {}", majorize(&psi.tensor(&chi), &phi.tensor(&chi))?.majorized);
    Ok(())
}

//! The exact single-transfer solver, cross-checked against the grid oracle.

use locc_recovery::order::{algorithm2, oracle, pairs};
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let v = |s: &[&str]| SchmidtVector::parse(s, s.len(), true);
    let psi = v(&["0.33", "0.32", "0.3", "0.05"])?;
    let phi = v(&["0.46", "0.46", "0.08", "0"])?;
    let chi = v(&["0.6", "0.3", "0.1", "0"])?;

    for spec in pairs(&chi) {
        println!("pair ({}, {}) epsilon_max={}", spec.i, spec.j, spec.epsilon_max);
    }
    let verdict = algorithm2(&psi, &phi, &chi)?;
    println!("feasible={} pairs examined={}", verdict.feasible, verdict.pairs_examined);
    if let Some(w) = &verdict.witness {
        println!("witness: ({}, {}) epsilon={} omega={}", w.i, w.j, w.epsilon, w.omega);
    }
    println!("grid oracle (depth 20) agrees: {}", oracle(&psi, &phi, &chi, 20)? == verdict.feasible);
    Ok(())
}

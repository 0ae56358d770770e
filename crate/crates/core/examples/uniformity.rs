//! Uniformity indices and entropies, including the zero-padded case.

use locc_recovery::uniformity::{entropy, indices, strictness_breaking_position};
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let v = |s: &[&str]| SchmidtVector::parse(s, s.len(), true);
    for state in [v(&["0.5", "0.25", "0.25"])?, v(&["0.5", "0.25", "0.25", "0"])?, v(&["0.6", "0.3", "0.1"])?] {
        let idx = indices(&state)?;
        println!("{state}: l_u={} L_u={} g_u={} entropy={:.4}", idx.l_u, idx.big_l_u, idx.g_u, entropy(&state));
    }

    // When l_u(χ) ≤ g_u(φ), some prefix of φ⊗χ is already saturated and strictness is lost.
    let phi = v(&["0.5", "0.3", "0.2"])?;
    for chi in [v(&["0.6", "0.4"])?, v(&["0.9", "0.1"])?] {
        println!("phi={phi} chi={chi}: breaking position {:?}", strictness_breaking_position(&phi, &chi));
    }
    Ok(())
}

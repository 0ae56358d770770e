//! How much a partially entangled χ can stand in for a maximally entangled state.

use locc_recovery::applications::{concentration_bounds, verify_concentration};
use locc_recovery::number::{format, parse, ratio};
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let (a, b) = (ratio(3, 5), ratio(4, 5));
    let bounds = concentration_bounds(&a, &b, 2)?;
    let (lo, hi) = bounds.p_interval.clone().expect("two-level bounds");
    println!("k=2: p in ({}, {}]", format(&lo), format(&hi));

    let psi = SchmidtVector::parse(&["3/5", "2/5"], 2, true)?;
    let phi = SchmidtVector::parse(&["4/5", "1/5"], 2, true)?;
    for p in ["2/3", "0.667", "0.6"] {
        let p = parse(p)?;
        let chi = SchmidtVector::new(vec![p.clone(), ratio(1, 1) - &p])?;
        println!("p={}: verified={}", format(&p), verify_concentration(&psi, &phi, &chi, 2)?);
    }

    for k in 2..=5 {
        let b = concentration_bounds(&a, &ratio(4, 5), k)?;
        println!("k={k}: gamma in [{}, {}] feasible={}", format(&b.gamma_min), format(&b.gamma_max), b.feasible);
    }
    Ok(())
}

//! Splits ψ ≺ φ into Equal and Strict blocks and groups them.

use locc_recovery::decomposition::normal_decompose;
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let psi = SchmidtVector::proportional(&[460, 460, 360, 264, 264, 199, 199])?;
    let phi = SchmidtVector::proportional(&[520, 400, 360, 288, 240, 200, 198])?;
    let nd = normal_decompose(&psi, &phi)?;
    for (i, b) in nd.blocks.iter().enumerate() {
        println!("block {}: {:?} at {} x={} y={}", i + 1, b.tag, b.start + 1, b.x, b.y);
    }
    println!("equal blocks {:?}, strict blocks {:?}", nd.equal_set, nd.strict_set);
    println!("strict runs {:?}", nd.strict_grouped);
    println!("natural order {:?}", nd.natural_order());
    Ok(())
}

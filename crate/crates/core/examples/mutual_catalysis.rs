//! Two impossible transformations that succeed when performed together.

use locc_recovery::applications::mutual_catalysis_check;
use locc_recovery::uniformity::entropy;
use locc_recovery::SchmidtVector;

fn main() -> locc_recovery::Result<()> {
    let v = |s: &[&str]| SchmidtVector::parse(s, s.len(), true);
    let psi = v(&["0.33", "0.32", "0.3", "0.05"])?;
    let phi = v(&["0.6", "0.2", "0.14", "0.06"])?;
    let alpha = v(&["0.6", "0.3", "0.1", "0"])?;
    let beta = v(&["0.46", "0.46", "0.08", "0"])?;
    let r = mutual_catalysis_check(&psi, &phi, &alpha, &beta)?;
    println!("{r:#?}");
    println!("entropy alpha={:.4} beta={:.4}", entropy(&alpha), entropy(&beta));
    Ok(())
}

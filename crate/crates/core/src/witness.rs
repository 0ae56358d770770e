//! The recovery relations every witness must satisfy.

use serde::Serialize;

use crate::number::{self, Rational};
use crate::vectors::{is_majorized, SchmidtVector};

/// `ψ⊗χ ≺ φ⊗ω`, `ω ≺ χ` and `ω↓ ≠ χ↓`: ω is strictly more entangled than χ
/// and the joint transformation is still possible.
pub fn recovers(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, omega: &SchmidtVector) -> bool {
    omega.dim() == chi.dim()
        && omega != chi
        && is_majorized(omega, chi)
        && is_majorized(&psi.tensor(chi), &phi.tensor(omega))
}

/// Moves `epsilon` from position `from` to position `to` of the sorted auxiliary state.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    #[serde(with = "number::serde_rational")]
    pub epsilon: Rational,
}

/// Applies transfers to a sorted vector (positions are 0-based) and re-sorts.
pub fn apply_transfers(chi: &SchmidtVector, transfers: &[Transfer]) -> SchmidtVector {
    let mut coeffs = chi.coeffs().to_vec();
    for t in transfers {
        coeffs[t.from] -= &t.epsilon;
        coeffs[t.to] += &t.epsilon;
    }
    SchmidtVector::new(coeffs).expect("transfers keep coefficients non-negative")
}

//! Uniformity indices and entanglement entropy.

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::{self, Rational};
use crate::vectors::SchmidtVector;

/// Minimal local (`l_u`), maximal local (`L_u`) and global (`g_u`) uniformity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UniformityIndices {
    #[serde(with = "number::serde_rational")]
    pub l_u: Rational,
    #[serde(rename = "L_u", with = "number::serde_rational")]
    pub big_l_u: Rational,
    #[serde(with = "number::serde_rational")]
    pub g_u: Rational,
}

/// Ratios of successive distinct values, `v[i+1] / v[i]`. A trailing zero yields ratio 0.
pub fn successive_ratios(x: &SchmidtVector) -> Vec<Rational> {
    let values = x.compact().values;
    values.windows(2).map(|w| &w[1] / &w[0]).collect()
}

pub fn indices(x: &SchmidtVector) -> Result<UniformityIndices> {
    if x.is_zero() {
        return Err(Error::ZeroState);
    }
    let ratios = successive_ratios(x);
    if ratios.is_empty() {
        return Ok(UniformityIndices { l_u: Rational::one(), big_l_u: Rational::one(), g_u: Rational::one() });
    }
    let l_u = ratios.iter().min().unwrap().clone();
    let big_l_u = ratios.iter().max().unwrap().clone();
    let g_u = x.min() / x.max();
    Ok(UniformityIndices { l_u, big_l_u, g_u })
}

pub fn l_u(x: &SchmidtVector) -> Result<Rational> {
    indices(x).map(|i| i.l_u)
}

#[allow(non_snake_case)]
pub fn L_u(x: &SchmidtVector) -> Result<Rational> {
    indices(x).map(|i| i.big_l_u)
}

pub fn g_u(x: &SchmidtVector) -> Result<Rational> {
    indices(x).map(|i| i.g_u)
}

/// First position `h` (1-based, `h < dim χ`) with `γ_h·β_n ≥ γ_{h+1}·β_1`, where γ = χ↓ and β = φ↓.
///
/// At such an `h` the top `n·h` entries of `φ⊗χ` are exactly `γ_1·φ, …, γ_h·φ`, so for every
/// ψ with the same total, `e_{nh}(ψ⊗χ) ≥ e_{nh}(φ⊗χ)` and `ψ⊗χ ⊲ φ⊗χ` fails.
/// `None` exactly when `l_u(χ) > g_u(φ)` (for a non-uniform φ).
pub fn strictness_breaking_position(phi: &SchmidtVector, chi: &SchmidtVector) -> Option<usize> {
    let (b1, bn) = (phi.max(), phi.min());
    let g = chi.coeffs();
    (1..g.len()).find(|&h| &g[h - 1] * &bn >= &g[h] * &b1)
}

/// `-Σ a log2 a`, with `0 log 0 = 0`.
pub fn entropy(x: &SchmidtVector) -> f64 {
    x.coeffs()
        .iter()
        .filter(|c| !c.is_zero())
        .map(|c| {
            let a = number::to_f64(c);
            -a * a.log2()
        })
        .sum()
}

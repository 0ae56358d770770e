//! Concentration of maximally entangled states, mutual catalysis, and multi-copy recovery.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::number::{self, Rational};
use crate::strict::{decide_strict, StrictVerdict};
use crate::uniformity::indices;
use crate::vectors::{is_majorized, is_strictly_majorized, SchmidtVector};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConcentrationBounds {
    pub k: usize,
    /// Lower bound on the smallest coefficient of χ.
    #[serde(with = "number::serde_rational")]
    pub gamma_min: Rational,
    /// Upper bound on the largest coefficient of χ.
    #[serde(with = "number::serde_rational")]
    pub gamma_max: Rational,
    pub feasible: bool,
    /// For `k = 2`: the admissible range `(low, high]` of the larger coefficient `p` of χ.
    #[serde(skip_serializing_if = "Option::is_none", serialize_with = "ser_interval")]
    pub p_interval: Option<(Rational, Rational)>,
}

fn ser_interval<S: serde::Serializer>(iv: &Option<(Rational, Rational)>, s: S) -> std::result::Result<S::Ok, S::Error> {
    let (lo, hi) = iv.as_ref().expect("skipped when absent");
    s.collect_seq([number::format(lo), number::format(hi)])
}

/// Bounds on a `k`-level χ such that `(a, 1-a) ⊗ χ ≺ (b, 1-b) ⊗ (1/k, ..., 1/k)`.
///
/// Requires `1/2 < a ≤ b ≤ 1` and `k ≥ 2`.
pub fn concentration_bounds(a: &Rational, b: &Rational, k: usize) -> Result<ConcentrationBounds> {
    let half = number::ratio(1, 2);
    let one = Rational::one();
    if !(*a > half && a <= b && *b <= one) || k < 2 {
        return Err(Error::BadParameters("need 1/2 < a <= b <= 1 and k >= 2".into()));
    }
    let kq = number::int(k as i64);
    let gamma_min = if a.is_one() { Rational::zero() } else { (&one - b) / (&kq * (&one - a)) };
    let gamma_max = b / (&kq * a);
    let feasible = &kq * &gamma_min < one && one < &kq * &gamma_max;
    let p_interval = (k == 2).then(|| (half.clone(), gamma_max.clone().min(&one - &gamma_min)));
    Ok(ConcentrationBounds { k, gamma_min, gamma_max, feasible, p_interval })
}

/// Direct check of `ψ⊗χ ≺ φ⊗Φ⁺_k`.
pub fn verify_concentration(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, k: usize) -> Result<bool> {
    if chi.dim() != k {
        return Err(Error::DimensionMismatch { expected: k, found: chi.dim() });
    }
    if psi.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: phi.dim(), found: psi.dim() });
    }
    Ok(crate::vectors::majorize(&psi.tensor(chi), &phi.tensor(&SchmidtVector::uniform(k)))?.majorized)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MutualCatalysisReport {
    pub psi_to_phi: bool,
    pub alpha_to_beta: bool,
    pub joint: bool,
    /// Both ψ → β and α → φ hold, making the joint transformation trivial.
    pub trivial_cross: bool,
    pub is_mutual_catalysis: bool,
}

fn padded_majorized(x: &SchmidtVector, y: &SchmidtVector) -> bool {
    let n = x.dim().max(y.dim());
    is_majorized(&x.pad_zeros(n - x.dim()), &y.pad_zeros(n - y.dim()))
}

/// Two individually impossible transformations that become possible together.
///
/// Cross comparisons between states of different dimension pad the shorter one with zeros.
pub fn mutual_catalysis_check(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    alpha: &SchmidtVector,
    beta: &SchmidtVector,
) -> Result<MutualCatalysisReport> {
    if psi.dim() != phi.dim() {
        return Err(Error::DimensionMismatch { expected: psi.dim(), found: phi.dim() });
    }
    if alpha.dim() != beta.dim() {
        return Err(Error::DimensionMismatch { expected: alpha.dim(), found: beta.dim() });
    }
    let psi_to_phi = crate::vectors::majorize(psi, phi)?.majorized;
    let alpha_to_beta = crate::vectors::majorize(alpha, beta)?.majorized;
    let joint = crate::vectors::majorize(&psi.tensor(alpha), &phi.tensor(beta))?.majorized;
    let trivial_cross = padded_majorized(psi, beta) && padded_majorized(alpha, phi);
    let is_mutual_catalysis = !psi_to_phi && !alpha_to_beta && joint && !trivial_cross;
    Ok(MutualCatalysisReport { psi_to_phi, alpha_to_beta, joint, trivial_cross, is_mutual_catalysis })
}

/// Smallest `k` with `L_u(χ) > g_u(φ)^k`: how many copies of φ make χ useful via the ratio test.
pub fn multicopy_k0(chi: &SchmidtVector, phi: &SchmidtVector) -> Result<usize> {
    let big_l = indices(chi)?.big_l_u;
    if big_l.is_zero() || big_l.is_one() {
        return Err(Error::PreconditionViolated("auxiliary state needs 0 < L_u < 1".into()));
    }
    if phi.is_uniform() {
        return Err(Error::PreconditionViolated("target state is maximally entangled".into()));
    }
    let g = indices(phi)?.g_u;
    let mut power = g.clone();
    let mut k = 1;
    while power >= big_l {
        power *= &g;
        k += 1;
    }
    Ok(k)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum CopyMode {
    /// Copies of the transformation: decide on `φ^⊗c` with a single χ.
    Target,
    /// Copies of the auxiliary state: decide on φ with `χ^⊗c`.
    Auxiliary,
}

/// Applies the strict decider to tensor powers; requires `ψ ⊲ φ`.
pub fn multicopy_recover(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    copies: usize,
    mode: CopyMode,
) -> Result<StrictVerdict> {
    if !is_strictly_majorized(psi, phi) {
        return Err(Error::NotStrict);
    }
    match mode {
        CopyMode::Target => decide_strict(&phi.tensor_power(copies)?, chi),
        CopyMode::Auxiliary => decide_strict(phi, &chi.tensor_power(copies)?),
    }
}

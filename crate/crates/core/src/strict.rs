//! Closed-form decision for sources strictly majorized by the target.
//!
//! When ψ ⊲ φ, whether χ can recover entanglement depends only on φ and χ, through
//! the largest successive-value ratio of χ (`L_u`) and the global uniformity of φ (`g_u`).

use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::{self, Rational};
use crate::order::perturb;
use crate::uniformity::{indices, successive_ratios};
use crate::vectors::{is_strictly_majorized, SchmidtVector};
use crate::witness::recovers;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum StrictCase {
    /// χ is a lower-dimensional maximally entangled state padded with zeros, and it has enough room.
    CaseI,
    /// `g_u(φ) < L_u(χ) < 1`.
    CaseII,
    /// `L_u(χ) = g_u(φ)` and φ has the repeated two-level shape matching a ratio boundary of χ.
    CaseIII,
    MaximallyEntangledAux,
    BelowThreshold,
    NoPatternMatch,
}

impl StrictCase {
    pub fn is_feasible(self) -> bool {
        matches!(self, StrictCase::CaseI | StrictCase::CaseII | StrictCase::CaseIII)
    }
}

/// Result of matching φ against the two-level pattern at a ratio boundary of χ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PatternMatch {
    /// 1-based boundary `i` between distinct values `i` and `i+1` of χ.
    pub boundary: usize,
    /// Multiplicities of φ's larger and smaller value.
    pub phi_multiplicities: (usize, usize),
    /// Multiplicities of χ's values `i` and `i+1`.
    pub chi_multiplicities: (usize, usize),
    /// `(u, v, m_rep)` with φ's multiplicities `= (m_rep·u, m_rep·v)`, `u ≤ k_i`, `v ≤ k_{i+1}`,
    /// choosing the largest `m_rep`, when such a factorization exists.
    pub segment: Option<(usize, usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum StrictDetail {
    None,
    /// `a` = nonzero count of χ, `n_prime` = nonzero count of φ, `n` = dim φ.
    Counts { a: usize, n_prime: usize, n: usize },
    /// 1-based boundary whose ratio attains `L_u(χ)`.
    Boundary { boundary: usize },
    Pattern(PatternMatch),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictVerdict {
    pub feasible: bool,
    pub case: StrictCase,
    pub detail: StrictDetail,
    #[serde(rename = "L_u_chi", with = "number::serde_rational")]
    pub chi_max_ratio: Rational,
    #[serde(rename = "g_u_phi", with = "number::serde_rational")]
    pub phi_global: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StrictWitness {
    /// 1-based distinct-value indices of χ.
    pub i: usize,
    pub j: usize,
    #[serde(with = "number::serde_rational")]
    pub epsilon: Rational,
    #[serde(skip)]
    pub omega: SchmidtVector,
}

pub const MAX_HALVINGS: u32 = 64;

pub fn decide_strict(phi: &SchmidtVector, chi: &SchmidtVector) -> Result<StrictVerdict> {
    if phi.is_zero() {
        return Err(Error::InvalidState("target state has no positive coefficient".into()));
    }
    if chi.is_zero() {
        return Err(Error::InvalidState("auxiliary state has no positive coefficient".into()));
    }
    if phi.is_uniform() {
        return Err(Error::InvalidState("target state is maximally entangled".into()));
    }
    let big_l = indices(chi)?.big_l_u;
    let g = indices(phi)?.g_u;
    let verdict = |case: StrictCase, detail| StrictVerdict {
        feasible: case.is_feasible(),
        case,
        detail,
        chi_max_ratio: big_l.clone(),
        phi_global: g.clone(),
    };

    if chi.is_uniform() {
        return Ok(verdict(StrictCase::MaximallyEntangledAux, StrictDetail::None));
    }
    if big_l.is_zero() {
        let (a, n_prime, n) = (chi.nonzero_count(), phi.nonzero_count(), phi.dim());
        let case = if n * a >= n_prime * (a + 1) { StrictCase::CaseI } else { StrictCase::BelowThreshold };
        return Ok(verdict(case, StrictDetail::Counts { a, n_prime, n }));
    }
    if g < big_l {
        let boundary = successive_ratios(chi).iter().position(|r| *r == big_l).unwrap() + 1;
        return Ok(verdict(StrictCase::CaseII, StrictDetail::Boundary { boundary }));
    }
    if big_l < g {
        return Ok(verdict(StrictCase::BelowThreshold, StrictDetail::None));
    }
    Ok(match match_case_iii(phi, chi)? {
        Some(m) => verdict(StrictCase::CaseIII, StrictDetail::Pattern(m)),
        None => verdict(StrictCase::NoPatternMatch, StrictDetail::None),
    })
}

/// Looks for a ratio boundary `i` of χ attaining `L_u(χ)` such that φ has exactly two
/// distinct values with multiplicities `(m1, m2)` satisfying `m1 ≤ k_i·m2` and `m2 ≤ k_{i+1}·m1`.
pub fn match_case_iii(phi: &SchmidtVector, chi: &SchmidtVector) -> Result<Option<PatternMatch>> {
    let big_l = indices(chi)?.big_l_u;
    let g = indices(phi)?.g_u;
    if big_l != g || big_l.is_zero() || big_l.is_one() {
        return Err(Error::PreconditionViolated("needs L_u(chi) = g_u(phi) strictly between 0 and 1".into()));
    }
    let pc = phi.compact();
    if pc.len() != 2 {
        return Ok(None);
    }
    let (m1, m2) = (pc.multiplicities[0], pc.multiplicities[1]);
    let cc = chi.compact();
    for (idx, ratio) in successive_ratios(chi).iter().enumerate() {
        if *ratio != big_l {
            continue;
        }
        let (ka, kb) = (cc.multiplicities[idx], cc.multiplicities[idx + 1]);
        if m1 <= ka * m2 && m2 <= kb * m1 {
            return Ok(Some(PatternMatch {
                boundary: idx + 1,
                phi_multiplicities: (m1, m2),
                chi_multiplicities: (ka, kb),
                segment: repeated_segment(m1, m2, ka, kb),
            }));
        }
    }
    Ok(None)
}

fn repeated_segment(m1: usize, m2: usize, ka: usize, kb: usize) -> Option<(usize, usize, usize)> {
    let g = m1.gcd(&m2);
    (1..=g).rev().filter(|d| g % d == 0).find_map(|d| {
        let (u, v) = (m1 / d, m2 / d);
        (u <= ka && v <= kb).then_some((u, v, d))
    })
}

/// Builds ω for a feasible verdict by a single transfer, halving ε until all three
/// recovery relations hold.
pub fn witness_strict(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    verdict: &StrictVerdict,
) -> Result<StrictWitness> {
    if !is_strictly_majorized(psi, phi) {
        return Err(Error::NotStrict);
    }
    let (i, j) = match &verdict.detail {
        StrictDetail::Counts { .. } if verdict.case == StrictCase::CaseI => (1, 2),
        StrictDetail::Boundary { boundary } => (*boundary, boundary + 1),
        StrictDetail::Pattern(m) => (m.boundary, m.boundary + 1),
        _ => return Err(Error::PreconditionViolated("verdict is not feasible".into())),
    };
    let mut eps = crate::order::PerturbationSpec::new(chi, i, j)?.epsilon_max;
    let two = number::int(2);
    for _ in 0..=MAX_HALVINGS {
        let omega = perturb(chi, i, j, &eps)?;
        if recovers(psi, phi, chi, &omega) {
            return Ok(StrictWitness { i, j, epsilon: eps, omega });
        }
        eps /= &two;
    }
    Err(Error::WitnessSearchFailed(format!("no epsilon found for transfer ({i}, {j})")))
}

/// Convenience: decide and, when feasible, build a witness.
pub fn recover_strict(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
) -> Result<(StrictVerdict, Option<StrictWitness>)> {
    if !is_strictly_majorized(psi, phi) {
        return Err(Error::NotStrict);
    }
    let verdict = decide_strict(phi, chi)?;
    let witness = if verdict.feasible { Some(witness_strict(psi, phi, chi, &verdict)?) } else { None };
    Ok((verdict, witness))
}

/// Threshold form for a two-level auxiliary state `(p, 1-p)`: the pivot `β1 / (β1 + βn)`.
pub fn two_level_pivot(phi: &SchmidtVector) -> Rational {
    let (b1, bn) = (phi.max(), phi.min());
    &b1 / (&b1 + &bn)
}

//! Single-transfer perturbations of the auxiliary state and the exact decision procedure
//! built on them, plus a brute-force grid oracle for cross-checking.
//!
//! For a pair of distinct values `i < j` of χ, `χ(i,j,ε)` moves ε from one copy of value
//! `i` to one copy of value `j`. Every entry of `φ⊗χ(i,j,ε)` is affine in ε, so on the
//! leftmost interval where their order does not change, each prefix sum is affine too and
//! the recovery condition becomes a handful of linear inequalities in ε.

use std::cmp::Ordering;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::{self, Rational};
use crate::vectors::{majorize, CompactForm, SchmidtVector};
use crate::witness::recovers;

/// Transfer between distinct values `i < j` (1-based indices into χ's compact form).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PerturbationSpec {
    pub i: usize,
    pub j: usize,
    /// Largest ε keeping the perturbed vector sorted in its listed order.
    #[serde(with = "number::serde_rational")]
    pub epsilon_max: Rational,
}

/// `constant + slope·ε`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineEntry {
    pub constant: Rational,
    pub slope: Rational,
}

impl AffineEntry {
    pub fn at(&self, eps: &Rational) -> Rational {
        &self.constant + &self.slope * eps
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderWitness {
    pub i: usize,
    pub j: usize,
    #[serde(with = "number::serde_rational")]
    pub epsilon: Rational,
    #[serde(skip)]
    pub omega: SchmidtVector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Algorithm2Verdict {
    pub feasible: bool,
    pub witness: Option<OrderWitness>,
    pub pairs_examined: usize,
}

impl PerturbationSpec {
    pub fn new(chi: &SchmidtVector, i: usize, j: usize) -> Result<Self> {
        let c = chi.compact();
        if i == 0 || i >= j || j > c.len() {
            return Err(Error::BadPair { i, j, len: c.len() });
        }
        Ok(PerturbationSpec { i, j, epsilon_max: delta(&c, i, j) })
    }
}

fn delta(c: &CompactForm, i: usize, j: usize) -> Rational {
    let v = &c.values;
    let gap_i = &v[i - 1] - &v[i];
    if j == i + 1 {
        gap_i / number::int(2)
    } else {
        gap_i.min(&v[j - 2] - &v[j - 1])
    }
}

/// All distinct-value pairs in lexicographic order.
pub fn pairs(chi: &SchmidtVector) -> Vec<PerturbationSpec> {
    let m = chi.compact().len();
    let mut out = Vec::new();
    for i in 1..=m {
        for j in i + 1..=m {
            out.push(PerturbationSpec::new(chi, i, j).expect("valid pair"));
        }
    }
    out
}

/// Decreases the last copy of value `i` and increases the first copy of value `j` by ε.
pub fn perturb(chi: &SchmidtVector, i: usize, j: usize, eps: &Rational) -> Result<SchmidtVector> {
    let spec = PerturbationSpec::new(chi, i, j)?;
    if eps.is_negative() || *eps > spec.epsilon_max {
        return Err(Error::EpsilonOutOfRange(number::format(eps)));
    }
    let (from, to) = positions(&chi.compact(), i, j);
    let mut coeffs = chi.coeffs().to_vec();
    coeffs[from] -= eps;
    coeffs[to] += eps;
    // Within the admissible range the listed order is already non-increasing.
    Ok(SchmidtVector::from_sorted_unchecked(coeffs))
}

fn positions(c: &CompactForm, i: usize, j: usize) -> (usize, usize) {
    (c.last_position(i - 1), c.first_position(j - 1))
}

/// Entries of `φ⊗χ(i,j,ε)` as affine functions of ε, in row-major order.
pub fn affine_entries(phi: &SchmidtVector, chi: &SchmidtVector, spec: &PerturbationSpec) -> Vec<AffineEntry> {
    let (from, to) = positions(&chi.compact(), spec.i, spec.j);
    let mut out = Vec::with_capacity(phi.dim() * chi.dim());
    for b in phi.coeffs() {
        for (t, g) in chi.coeffs().iter().enumerate() {
            let slope = if t == from {
                -b.clone()
            } else if t == to {
                b.clone()
            } else {
                Rational::zero()
            };
            out.push(AffineEntry { constant: b * g, slope });
        }
    }
    out
}

/// End `c1` of the leftmost interval `(0, c1]` on which the entries keep one order,
/// and that order (indices into [`affine_entries`], descending).
pub fn leftmost_interval(phi: &SchmidtVector, chi: &SchmidtVector, spec: &PerturbationSpec) -> (Rational, Vec<usize>) {
    let entries = affine_entries(phi, chi, spec);
    let c1 = first_crossing(&entries, &spec.epsilon_max);
    let mid = &c1 / number::int(2);
    let values: Vec<Rational> = entries.iter().map(|e| e.at(&mid)).collect();
    let mut order: Vec<usize> = (0..entries.len()).collect();
    order.sort_by(|&a, &b| values[b].cmp(&values[a]));
    (c1, order)
}

fn first_crossing(entries: &[AffineEntry], limit: &Rational) -> Rational {
    let mut best = limit.clone();
    let moving: Vec<usize> = (0..entries.len()).filter(|&k| !entries[k].slope.is_zero()).collect();
    for &a in &moving {
        for b in 0..entries.len() {
            // Pairs of moving entries are visited twice; skipping one orientation halves the work.
            if b == a || (!entries[b].slope.is_zero() && b < a) {
                continue;
            }
            let (ea, eb) = (&entries[a], &entries[b]);
            let ds = &eb.slope - &ea.slope;
            if ds.is_zero() {
                continue;
            }
            let theta = (&ea.constant - &eb.constant) / ds;
            if theta.is_positive() && theta < best {
                best = theta;
            }
        }
    }
    best
}

/// Largest ε on the leftmost interval for which `ψ⊗χ ≺ φ⊗χ(i,j,ε)`, if any ε > 0 works.
pub fn decide_pair(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    spec: &PerturbationSpec,
) -> Result<Option<Rational>> {
    require_majorized(psi, phi)?;
    Ok(decide_pair_unchecked(&psi.tensor(chi).prefix_sums(), phi, chi, spec))
}

fn decide_pair_unchecked(
    source_prefix: &[Rational],
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    spec: &PerturbationSpec,
) -> Option<Rational> {
    if !spec.epsilon_max.is_positive() {
        return None;
    }
    let entries = affine_entries(phi, chi, spec);
    let (c1, order) = leftmost_interval(phi, chi, spec);
    let mut eps = c1;
    let mut a = Rational::zero();
    let mut b = Rational::zero();
    for (l, &k) in order.iter().enumerate().take(order.len().saturating_sub(1)) {
        a += &entries[k].constant;
        b += &entries[k].slope;
        let c = &source_prefix[l];
        match a.cmp(c) {
            Ordering::Less => return None,
            Ordering::Equal if b.is_negative() => return None,
            Ordering::Equal => {}
            Ordering::Greater if b.is_negative() => {
                let bound = (&a - c) / -&b;
                if bound < eps {
                    eps = bound;
                }
            }
            Ordering::Greater => {}
        }
    }
    Some(eps)
}

fn require_majorized(psi: &SchmidtVector, phi: &SchmidtVector) -> Result<()> {
    if !majorize(psi, phi)?.majorized {
        return Err(Error::NotMajorized);
    }
    Ok(())
}

/// Decides whether χ can recover entanglement lost in ψ → φ by trying every distinct-value pair.
///
/// The first feasible pair in lexicographic order is reported, with its witness re-verified
/// by plain majorization checks.
pub fn algorithm2(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector) -> Result<Algorithm2Verdict> {
    require_majorized(psi, phi)?;
    let source_prefix = psi.tensor(chi).prefix_sums();
    let mut examined = 0;
    for spec in pairs(chi) {
        examined += 1;
        if let Some(eps) = decide_pair_unchecked(&source_prefix, phi, chi, &spec) {
            let omega = perturb(chi, spec.i, spec.j, &eps)?;
            if !recovers(psi, phi, chi, &omega) {
                return Err(Error::Invariant(format!(
                    "pair ({}, {}) at epsilon {} failed verification",
                    spec.i,
                    spec.j,
                    number::format(&eps)
                )));
            }
            return Ok(Algorithm2Verdict {
                feasible: true,
                witness: Some(OrderWitness { i: spec.i, j: spec.j, epsilon: eps, omega }),
                pairs_examined: examined,
            });
        }
    }
    Ok(Algorithm2Verdict { feasible: false, witness: None, pairs_examined: examined })
}

/// Brute force: tries `ε = δ_ij / 2^t` for `t = 1..=depth` on every pair.
pub fn oracle(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, depth: u32) -> Result<bool> {
    Ok(oracle_witness(psi, phi, chi, depth)?.is_some())
}

pub fn oracle_witness(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    depth: u32,
) -> Result<Option<OrderWitness>> {
    require_majorized(psi, phi)?;
    for spec in pairs(chi) {
        for t in 1..=depth {
            let eps = &spec.epsilon_max * number::half_pow(t);
            let omega = perturb(chi, spec.i, spec.j, &eps)?;
            if recovers(psi, phi, chi, &omega) {
                return Ok(Some(OrderWitness { i: spec.i, j: spec.j, epsilon: eps, omega }));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::ratio;

    fn v(raw: &[&str]) -> SchmidtVector {
        SchmidtVector::parse(raw, raw.len(), false).unwrap()
    }

    #[test]
    fn perturb_examples() {
        let chi = v(&["3/5", "3/10", "1/10", "0"]);
        assert_eq!(PerturbationSpec::new(&chi, 2, 4).unwrap().epsilon_max, ratio(1, 10));
        assert_eq!(perturb(&chi, 2, 4, &ratio(1, 20)).unwrap(), v(&["3/5", "1/4", "1/10", "1/20"]));
        assert_eq!(perturb(&chi, 2, 4, &ratio(0, 1)).unwrap(), chi);
        let chi = v(&["1/2", "1/4", "1/4"]);
        assert_eq!(perturb(&chi, 1, 2, &ratio(1, 8)).unwrap(), v(&["3/8", "3/8", "1/4"]));
    }

    #[test]
    fn perturb_errors() {
        let chi = v(&["1/2", "1/4", "1/4"]);
        assert!(matches!(perturb(&chi, 2, 1, &ratio(0, 1)), Err(Error::BadPair { .. })));
        assert!(matches!(perturb(&chi, 1, 3, &ratio(0, 1)), Err(Error::BadPair { .. })));
        assert!(matches!(perturb(&chi, 1, 2, &ratio(1, 7)), Err(Error::EpsilonOutOfRange(_))));
    }

    #[test]
    fn leftmost_interval_two_by_two() {
        let phi = v(&["7/10", "3/10"]);
        let chi = v(&["3/5", "2/5"]);
        let spec = PerturbationSpec::new(&chi, 1, 2).unwrap();
        let (c1, order) = leftmost_interval(&phi, &chi, &spec);
        assert_eq!(c1, ratio(1, 10));
        // Row-major entries: β1γ1, β1γ2, β2γ1, β2γ2.
        assert_eq!(order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn single_valued_phi_has_no_crossings() {
        let phi = v(&["1"]);
        let chi = v(&["3/5", "2/5"]);
        let spec = PerturbationSpec::new(&chi, 1, 2).unwrap();
        assert_eq!(leftmost_interval(&phi, &chi, &spec).0, spec.epsilon_max);
    }

    #[test]
    fn decide_pair_examples() {
        let chi = v(&["3/5", "2/5"]);
        let spec = PerturbationSpec::new(&chi, 1, 2).unwrap();
        let eps = decide_pair(&v(&["11/20", "9/20"]), &v(&["7/10", "3/10"]), &chi, &spec).unwrap();
        assert_eq!(eps, Some(ratio(1, 10)));
        let phi = v(&["7/10", "3/10"]);
        assert_eq!(decide_pair(&phi, &phi, &chi, &spec).unwrap(), None);
        let eps = decide_pair(&v(&["7/20", "7/20", "3/10"]), &v(&["3/8", "3/8", "1/4"]), &chi, &spec).unwrap();
        assert_eq!(eps, None);
    }

    #[test]
    fn decide_pair_requires_majorization() {
        let chi = v(&["3/5", "2/5"]);
        let spec = PerturbationSpec::new(&chi, 1, 2).unwrap();
        assert_eq!(decide_pair(&v(&["9/10", "1/10"]), &v(&["7/10", "3/10"]), &chi, &spec), Err(Error::NotMajorized));
    }

    #[test]
    fn algorithm2_examples() {
        let psi = v(&["33/100", "8/25", "3/10", "1/20"]);
        let phi = v(&["23/50", "23/50", "2/25", "0"]);
        let chi = v(&["3/5", "3/10", "1/10", "0"]);
        let verdict = algorithm2(&psi, &phi, &chi).unwrap();
        assert!(verdict.feasible);
        assert!(oracle(&psi, &phi, &chi, 20).unwrap());

        let verdict = algorithm2(&v(&["3/5", "2/5"]), &v(&["7/10", "3/10"]), &v(&["1/2", "1/2"])).unwrap();
        assert!(!verdict.feasible && verdict.witness.is_none());
        assert_eq!(verdict.pairs_examined, 0);

        let (psi, phi, chi) = (v(&["7/20", "7/20", "3/10"]), v(&["3/8", "3/8", "1/4"]), v(&["3/5", "2/5"]));
        assert!(!algorithm2(&psi, &phi, &chi).unwrap().feasible);
        assert!(!oracle(&psi, &phi, &chi, 20).unwrap());
    }
}

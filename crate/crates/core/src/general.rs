//! Sufficient conditions and explicit auxiliary states for transformations whose
//! majorization has equality constraints.
//!
//! The auxiliary state χ is cut into consecutive pieces, one per block of the normal
//! decomposition (per-block layout) or one per entry of `I′ ∪ D′` (grouped layout).
//! Equal-side pieces must dominate their neighbours' ratio ranges, Strict-side pieces
//! must be flatter than the corresponding pieces of φ; a witness then moves a little
//! weight inside each Strict-side piece.
//!
//! Both checkers work on the pair with their shared trailing zeros removed: those
//! positions contribute only zeros to every tensor product involved.

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::decomposition::{normal_decompose, BlockTag, Group, NormalDecomposition};
use crate::error::{Error, Result};
use crate::number::{self, Rational};
use crate::uniformity::indices;
use crate::vectors::{bounded_strictly, majorize, SchmidtVector};
use crate::witness::{apply_transfers, recovers, Transfer};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum PartitionKind {
    /// One piece of χ per block of the normal decomposition.
    PerBlock,
    /// One piece per Equal block and per maximal run of Strict blocks, in natural order.
    Grouped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConformalPartition {
    pub kind: PartitionKind,
    pub block_dims: Vec<usize>,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Scheme {
    #[default]
    Auto,
    /// Equality only at the first prefix: 3-dimensional χ.
    Delta1,
    /// Equality only at the last interior prefix: 3-dimensional χ.
    DeltaN1,
    /// Equalities at the first and last interior prefixes: 4-dimensional χ.
    Delta1N1,
    /// Any equality pattern: one entry per Equal block, two per Strict run.
    General,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Construction {
    #[serde(skip)]
    pub chi: SchmidtVector,
    pub partition: ConformalPartition,
    pub scheme: Scheme,
    /// Slack parameters actually used, by name.
    #[serde(serialize_with = "ser_params")]
    pub parameters: Vec<(String, Rational)>,
}

fn ser_params<S: serde::Serializer>(p: &[(String, Rational)], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_map(p.iter().map(|(k, v)| (k, number::format(v))))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeneralWitness {
    #[serde(skip)]
    pub omega: SchmidtVector,
    pub transfers: Vec<Transfer>,
}

pub const MAX_SLACK_ROUNDS: u32 = 32;
const MAX_HALVINGS: u32 = 64;

/// Removes the trailing positions where both vectors vanish.
pub fn strip_shared_zeros(psi: &SchmidtVector, phi: &SchmidtVector) -> (SchmidtVector, SchmidtVector) {
    let n = psi.dim().min(phi.dim());
    let mut keep = n;
    while keep > 1 && psi.coeffs()[keep - 1].is_zero() && phi.coeffs()[keep - 1].is_zero() {
        keep -= 1;
    }
    (psi.segment(0, keep), phi.segment(0, keep))
}

fn decompose(psi: &SchmidtVector, phi: &SchmidtVector) -> Result<NormalDecomposition> {
    let report = majorize(psi, phi)?;
    if !report.majorized {
        return Err(Error::NotMajorized);
    }
    let (p, f) = strip_shared_zeros(psi, phi);
    normal_decompose(&p, &f)
}

/// Cuts sorted χ into consecutive pieces of the given sizes.
pub fn split(chi: &SchmidtVector, dims: &[usize]) -> Result<Vec<SchmidtVector>> {
    if dims.contains(&0) {
        return Err(Error::BadPartition("block dimensions must be positive".into()));
    }
    let total: usize = dims.iter().sum();
    if total != chi.dim() {
        return Err(Error::BadPartition(format!("dimensions sum to {total}, auxiliary state has {}", chi.dim())));
    }
    let mut start = 0;
    Ok(dims
        .iter()
        .map(|&d| {
            let piece = chi.segment(start, d);
            start += d;
            piece
        })
        .collect())
}

fn lu(x: &SchmidtVector) -> Option<Rational> {
    indices(x).ok().map(|i| i.l_u)
}

fn gu(x: &SchmidtVector) -> Rational {
    indices(x).map(|i| i.g_u).unwrap_or_else(|_| Rational::zero())
}

/// `χ^i/χ^j ⊐ φ^i/φ^j`, evaluated as `χ^j⊗φ^i ⊏ χ^i⊗φ^j`.
pub fn ratio_dominates(chi_i: &SchmidtVector, chi_j: &SchmidtVector, phi_i: &SchmidtVector, phi_j: &SchmidtVector) -> bool {
    bounded_strictly(&chi_j.tensor(phi_i), &chi_i.tensor(phi_j))
}

/// Per-block sufficient condition. Inconclusive (false) does not mean infeasible.
pub fn check_per_block(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, block_dims: &[usize]) -> Result<bool> {
    let nd = decompose(psi, phi)?;
    if block_dims.len() != nd.len() {
        return Err(Error::BadPartition(format!("expected {} blocks, got {}", nd.len(), block_dims.len())));
    }
    let pieces = split(chi, block_dims)?;
    Ok(per_block_holds(&nd, &pieces))
}

fn per_block_holds(nd: &NormalDecomposition, pieces: &[SchmidtVector]) -> bool {
    if nd.strict_set.is_empty() || pieces.iter().any(SchmidtVector::is_zero) {
        return false;
    }
    if nd.strict_set.iter().all(|&j| pieces[j - 1].is_uniform()) {
        return false;
    }
    for &i in &nd.equal_set {
        for &j in &nd.strict_set {
            if !ratio_dominates(&pieces[i - 1], &pieces[j - 1], &nd.block(i).y, &nd.block(j).y) {
                return false;
            }
        }
    }
    let flattest = pieces.iter().map(|p| lu(p).unwrap()).min().unwrap();
    let steepest = nd.strict_set.iter().map(|&j| gu(&nd.block(j).y)).max().unwrap();
    flattest > steepest
}

/// Grouped sufficient condition: one χ piece per entry of `I′ ∪ D′` in natural order.
pub fn check_grouped(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, block_dims: &[usize]) -> Result<bool> {
    let nd = decompose(psi, phi)?;
    let groups = nd.natural_order();
    if block_dims.len() != groups.len() {
        return Err(Error::BadPartition(format!("expected {} groups, got {}", groups.len(), block_dims.len())));
    }
    let pieces = split(chi, block_dims)?;
    Ok(grouped_holds(&nd, &groups, &pieces))
}

/// Member of the run `run` closest to block `i`.
fn nearest(run: &[usize], i: usize) -> usize {
    let (lo, hi) = (run[0], *run.last().unwrap());
    if i < lo {
        lo
    } else {
        hi
    }
}

fn grouped_holds(nd: &NormalDecomposition, groups: &[Group], pieces: &[SchmidtVector]) -> bool {
    if nd.strict_set.is_empty() || pieces.iter().any(SchmidtVector::is_zero) {
        return false;
    }
    let strict: Vec<(usize, &Vec<usize>)> = groups
        .iter()
        .enumerate()
        .filter_map(|(g, grp)| match grp {
            Group::Strict(run) => Some((g, run)),
            _ => None,
        })
        .collect();
    let equal: Vec<(usize, usize)> = groups
        .iter()
        .enumerate()
        .filter_map(|(g, grp)| match grp {
            Group::Equal(i) => Some((g, *i)),
            _ => None,
        })
        .collect();
    if strict.iter().all(|(g, _)| pieces[*g].is_uniform()) {
        return false;
    }
    for &(gi, i) in &equal {
        for &(gj, run) in &strict {
            let s = nearest(run, i);
            if !ratio_dominates(&pieces[gi], &pieces[gj], &nd.block(i).y, &nd.block(s).y) {
                return false;
            }
        }
    }
    let steepest_strict = nd.strict_set.iter().map(|&j| gu(&nd.block(j).y)).max().unwrap();
    let flattest_strict = strict.iter().map(|(g, _)| lu(&pieces[*g]).unwrap()).min().unwrap();
    if flattest_strict <= steepest_strict {
        return false;
    }
    if let Some(flattest_equal) = equal.iter().map(|(g, _)| lu(&pieces[*g]).unwrap()).min() {
        let run_ends = strict
            .iter()
            .flat_map(|(_, run)| [run[0], *run.last().unwrap()])
            .map(|j| gu(&nd.block(j).y))
            .max()
            .unwrap();
        if flattest_equal <= run_ends {
            return false;
        }
    }
    true
}

/// Dispatches on the partition layout.
pub fn check(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, partition: &ConformalPartition) -> Result<bool> {
    match partition.kind {
        PartitionKind::PerBlock => check_per_block(psi, phi, chi, &partition.block_dims),
        PartitionKind::Grouped => check_grouped(psi, phi, chi, &partition.block_dims),
    }
}

/// Builds an auxiliary state from φ and the equality pattern of `ψ ≺ φ`.
pub fn construct_aux(psi: &SchmidtVector, phi: &SchmidtVector, scheme: Scheme) -> Result<Construction> {
    let report = majorize(psi, phi)?;
    if !report.majorized {
        return Err(Error::NotMajorized);
    }
    if psi == phi {
        return Err(Error::NothingLost);
    }
    let (p, f) = strip_shared_zeros(psi, phi);
    let delta = majorize(&p, &f)?.delta_set;
    if delta.is_empty() {
        return Err(Error::NoEqualityStructure);
    }
    let n = f.dim();
    let shape = if delta == [1] {
        Scheme::Delta1
    } else if delta == [n - 1] {
        Scheme::DeltaN1
    } else if delta == [1, n - 1] {
        Scheme::Delta1N1
    } else {
        Scheme::General
    };
    match scheme {
        Scheme::Auto => {
            if shape != Scheme::General {
                if let Ok(c) = closed_form(psi, phi, &f, shape) {
                    return Ok(c);
                }
            }
            general_scheme(psi, phi)
        }
        Scheme::General => general_scheme(psi, phi),
        s if s == shape => closed_form(psi, phi, &f, s),
        s => Err(Error::BadParameters(format!("scheme {s:?} does not fit equality pattern {delta:?}"))),
    }
}

fn closed_form(psi: &SchmidtVector, phi: &SchmidtVector, beta: &SchmidtVector, scheme: Scheme) -> Result<Construction> {
    let b = beta.coeffs();
    let n = b.len();
    let one = Rational::one();
    let three = number::int(3);
    for round in 0..MAX_SLACK_ROUNDS {
        let s = number::half_pow(round);
        let (gammas, dims, params): (Vec<Rational>, Vec<usize>, Vec<(&str, Rational)>) = match scheme {
            Scheme::Delta1 => {
                if b[n - 1].is_zero() {
                    break;
                }
                let r = (&b[1] - &b[n - 1]) / &b[n - 1];
                let lambda = &s * &r / &three;
                let mu = &s * &r * number::int(2) / &three;
                let g1 = (&one + &lambda) * &b[0] / &b[1];
                let g3 = (&one + &mu) * &b[n - 1] / &b[1];
                (vec![g1, one.clone(), g3], vec![1, 2], vec![("lambda", lambda), ("mu", mu)])
            }
            Scheme::DeltaN1 => {
                if b[n - 2].is_zero() {
                    break;
                }
                let r = (&b[0] - &b[n - 2]) / &b[n - 2];
                let lambda = &s * &r / &three;
                let mu = &s * &r * number::int(2) / &three;
                let g2 = (&one + &mu) * &b[n - 2] / &b[0];
                let g3 = (&one + &lambda) * &b[n - 1] / &b[0];
                (vec![one.clone(), g2, g3], vec![2, 1], vec![("lambda", lambda), ("mu", mu)])
            }
            Scheme::Delta1N1 => {
                if b[n - 2].is_zero() {
                    break;
                }
                let ratio = &b[1] / &b[n - 2];
                let p = &one + &s * (&ratio - &one) / number::int(2);
                let one_mu = (&one + &p) / number::int(2);
                let one_eta = &p / &one_mu;
                let lambda = (&p - &one) / number::int(2);
                let g1 = (&one + &lambda) * &b[0] / &b[1];
                let g3 = &p * &b[n - 2] / &b[1];
                let g4 = &one_mu * &b[n - 1] / &b[1];
                (
                    vec![g1, one.clone(), g3, g4],
                    vec![1, 2, 1],
                    vec![("lambda", lambda), ("mu", &one_mu - &one), ("eta", &one_eta - &one)],
                )
            }
            _ => unreachable!("closed forms exist only for the three special patterns"),
        };
        let chi = normalize(gammas)?;
        if check_per_block(psi, phi, &chi, &dims)? {
            return Ok(Construction {
                chi,
                partition: ConformalPartition { kind: PartitionKind::PerBlock, block_dims: dims },
                scheme,
                parameters: params.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            });
        }
    }
    Err(Error::ConstructionFailed(format!("{scheme:?} closed form never satisfied its checker")))
}

fn normalize(gammas: Vec<Rational>) -> Result<SchmidtVector> {
    let v = SchmidtVector::new(gammas)?;
    let total = v.sum();
    if total.is_zero() {
        return Err(Error::ConstructionFailed("degenerate auxiliary state".into()));
    }
    Ok(v.scale(&total.recip()))
}

/// `x[u] ≤ w · x[v]`.
struct Edge {
    u: usize,
    v: usize,
    w: Rational,
}

/// Multiplicative difference constraints solved exactly; `None` on a contracting cycle.
fn solve_ratio_constraints(vars: usize, edges: &[Edge]) -> Option<Vec<Rational>> {
    let mut x = vec![Rational::one(); vars];
    for _ in 0..=vars {
        let mut changed = false;
        for e in edges {
            let cand = &x[e.v] * &e.w;
            if cand < x[e.u] {
                x[e.u] = cand;
                changed = true;
            }
        }
        if !changed {
            return Some(x);
        }
    }
    None
}

fn general_scheme(psi: &SchmidtVector, phi: &SchmidtVector) -> Result<Construction> {
    let nd = decompose(psi, phi)?;
    let groups = nd.natural_order();
    // Variable layout: one per Equal group, two (larger, smaller) per Strict group.
    let mut first_var = Vec::with_capacity(groups.len());
    let mut vars = 0usize;
    for g in &groups {
        first_var.push(vars);
        vars += match g {
            Group::Equal(_) => 1,
            Group::Strict(_) => 2,
        };
    }
    let steepest = nd.strict_set.iter().map(|&j| gu(&nd.block(j).y)).max().unwrap_or_else(Rational::zero);
    let extreme = |i: usize| (nd.block(i).y.max(), nd.block(i).y.min());

    for round in 1..=MAX_SLACK_ROUNDS {
        let theta = Rational::one() - number::half_pow(round);
        let mut edges = Vec::new();
        let mut infeasible = false;
        for t in 0..vars.saturating_sub(1) {
            edges.push(Edge { u: t + 1, v: t, w: theta.clone() });
        }
        for (gj, grp) in groups.iter().enumerate() {
            let Group::Strict(run) = grp else { continue };
            let (a, b) = (first_var[gj], first_var[gj] + 1);
            if !steepest.is_zero() {
                edges.push(Edge { u: a, v: b, w: &theta / &steepest });
            }
            for (gi, other) in groups.iter().enumerate() {
                let Group::Equal(i) = other else { continue };
                let c = first_var[gi];
                let s = nearest(run, *i);
                let ((max_i, min_i), (max_s, min_s)) = (extreme(*i), extreme(s));
                edges.push(Edge { u: a, v: c, w: &theta * &max_s / &max_i });
                if !min_s.is_zero() {
                    if min_i.is_zero() {
                        infeasible = true;
                    } else {
                        edges.push(Edge { u: c, v: b, w: &theta * &min_i / &min_s });
                    }
                }
            }
        }
        if infeasible {
            break;
        }
        let Some(x) = solve_ratio_constraints(vars, &edges) else { continue };
        let chi = normalize(x)?;
        let dims: Vec<usize> = groups
            .iter()
            .map(|g| match g {
                Group::Equal(_) => 1,
                Group::Strict(_) => 2,
            })
            .collect();
        if check_grouped(psi, phi, &chi, &dims)? {
            return Ok(Construction {
                chi,
                partition: ConformalPartition { kind: PartitionKind::Grouped, block_dims: dims },
                scheme: Scheme::General,
                parameters: vec![("theta".to_string(), theta)],
            });
        }
    }
    Err(Error::ConstructionFailed("no slack level satisfied the grouped conditions".into()))
}

/// Moves weight from the largest to the smallest entry of every non-uniform Strict-side
/// piece of χ, halving the amount until the recovery relations hold.
pub fn witness_general(
    psi: &SchmidtVector,
    phi: &SchmidtVector,
    chi: &SchmidtVector,
    partition: &ConformalPartition,
) -> Result<GeneralWitness> {
    if !check(psi, phi, chi, partition)? {
        return Err(Error::PreconditionViolated("partition does not satisfy the sufficient conditions".into()));
    }
    let nd = decompose(psi, phi)?;
    let strict_pieces: Vec<usize> = match partition.kind {
        PartitionKind::PerBlock => nd.strict_set.iter().map(|j| j - 1).collect(),
        PartitionKind::Grouped => nd
            .natural_order()
            .iter()
            .enumerate()
            .filter(|(_, g)| matches!(g, Group::Strict(_)))
            .map(|(g, _)| g)
            .collect(),
    };
    let pieces = split(chi, &partition.block_dims)?;
    let mut offsets = Vec::with_capacity(pieces.len());
    let mut acc = 0;
    for d in &partition.block_dims {
        offsets.push(acc);
        acc += d;
    }
    let moves: Vec<(usize, usize)> = strict_pieces
        .iter()
        .filter(|&&g| !pieces[g].is_uniform())
        .map(|&g| (offsets[g], offsets[g] + partition.block_dims[g] - 1))
        .collect();
    let mut eps = strict_pieces
        .iter()
        .filter(|&&g| !pieces[g].is_uniform())
        .map(|&g| (pieces[g].max() - pieces[g].min()) / number::int(2))
        .min()
        .ok_or_else(|| Error::PreconditionViolated("no non-uniform strict-side piece".into()))?;
    for _ in 0..=MAX_HALVINGS {
        let transfers: Vec<Transfer> =
            moves.iter().map(|&(from, to)| Transfer { from, to, epsilon: eps.clone() }).collect();
        let omega = apply_transfers(chi, &transfers);
        if recovers(psi, phi, chi, &omega) {
            return Ok(GeneralWitness { omega, transfers });
        }
        eps /= number::int(2);
    }
    Err(Error::WitnessSearchFailed("no within-block transfer satisfied the recovery relations".into()))
}

/// All compositions of `total` into `parts` positive integers, lexicographically, up to `limit`.
pub fn compositions(total: usize, parts: usize, limit: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if parts == 0 || parts > total {
        return out;
    }
    let mut cur = vec![1; parts];
    cur[parts - 1] = total - (parts - 1);
    fn rec(idx: usize, remaining: usize, parts: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, limit: usize) {
        if out.len() >= limit {
            return;
        }
        if idx == parts - 1 {
            cur[idx] = remaining;
            out.push(cur.clone());
            return;
        }
        for d in 1..=remaining - (parts - 1 - idx) {
            cur[idx] = d;
            rec(idx + 1, remaining - d, parts, cur, out, limit);
        }
    }
    rec(0, total, parts, &mut cur, &mut out, limit);
    out
}

/// Tries every partition of χ under both layouts; returns the first that passes its checker.
pub fn find_partition(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, limit: usize) -> Result<Option<ConformalPartition>> {
    let nd = decompose(psi, phi)?;
    let layouts = [(PartitionKind::PerBlock, nd.len()), (PartitionKind::Grouped, nd.natural_order().len())];
    for (kind, parts) in layouts {
        for dims in compositions(chi.dim(), parts, limit) {
            let partition = ConformalPartition { kind, block_dims: dims };
            if check(psi, phi, chi, &partition)? {
                return Ok(Some(partition));
            }
        }
    }
    Ok(None)
}

/// Number of Equal and Strict blocks on the zero-stripped pair, for callers that need them.
pub fn block_tags(psi: &SchmidtVector, phi: &SchmidtVector) -> Result<Vec<BlockTag>> {
    Ok(decompose(psi, phi)?.blocks.iter().map(|b| b.tag).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::ratio;

    fn v(raw: &[&str]) -> SchmidtVector {
        SchmidtVector::parse(raw, raw.len(), false).unwrap()
    }

    #[test]
    fn delta1_construction_satisfies_ratio_conditions() {
        let phi = v(&["2/5", "3/10", "1/5", "1/10"]);
        let psi = v(&["2/5", "1/4", "1/5", "3/20"]);
        assert_eq!(majorize(&psi, &phi).unwrap().delta_set, vec![1]);
        let c = construct_aux(&psi, &phi, Scheme::Auto).unwrap();
        assert_eq!(c.scheme, Scheme::Delta1);
        assert_eq!(c.partition.block_dims, vec![1, 2]);
        let g = c.chi.coeffs();
        assert!(&g[0] / &g[1] > ratio(4, 3));
        assert!(&g[0] / &g[2] < ratio(4, 1));
        assert!(&g[2] / &g[1] > ratio(1, 3));
        let w = witness_general(&psi, &phi, &c.chi, &c.partition).unwrap();
        assert_eq!(w.omega.coeffs()[0], g[0]);
        assert!(recovers(&psi, &phi, &c.chi, &w.omega));
    }

    #[test]
    fn per_block_check_by_hand() {
        let phi = v(&["2/5", "3/10", "1/5", "1/10"]);
        let psi = v(&["2/5", "1/4", "1/5", "3/20"]);
        // γ1/γ2 = 5/3 > 4/3, γ1/γ3 = 5/2 < 4, γ3/γ2 = 2/3 > 1/3: every condition holds.
        let chi = v(&["1/2", "3/10", "1/5"]);
        assert!(check_per_block(&psi, &phi, &chi, &[1, 2]).unwrap());
        let partition = ConformalPartition { kind: PartitionKind::PerBlock, block_dims: vec![1, 2] };
        let w = witness_general(&psi, &phi, &chi, &partition).unwrap();
        assert!(recovers(&psi, &phi, &chi, &w.omega));
        // γ1/γ3 = 36 > 4 breaks the lower bound.
        let too_steep = v(&["9/10", "3/40", "1/40"]);
        assert!(!check_per_block(&psi, &phi, &too_steep, &[1, 2]).unwrap());
    }

    #[test]
    fn single_strict_block_needs_only_flatness() {
        let psi = v(&["2/5", "3/10", "1/5", "1/10"]);
        let phi = v(&["1/2", "3/10", "3/20", "1/20"]);
        let chi = v(&["3/5", "2/5"]);
        assert!(check_per_block(&psi, &phi, &chi, &[2]).unwrap());
        assert!(check_grouped(&psi, &phi, &chi, &[2]).unwrap());
        let w = witness_general(&psi, &phi, &chi, &ConformalPartition { kind: PartitionKind::Grouped, block_dims: vec![2] })
            .unwrap();
        assert!(recovers(&psi, &phi, &chi, &w.omega));
        assert!(!check_grouped(&psi, &phi, &v(&["19/20", "1/20"]), &[2]).unwrap());
    }

    #[test]
    fn partition_errors() {
        let psi = v(&["2/5", "1/4", "1/5", "3/20"]);
        let phi = v(&["2/5", "3/10", "1/5", "1/10"]);
        let chi = v(&["1/2", "3/10", "1/5"]);
        assert!(matches!(check_per_block(&psi, &phi, &chi, &[3]), Err(Error::BadPartition(_))));
        assert!(matches!(check_per_block(&psi, &phi, &chi, &[1, 1]), Err(Error::BadPartition(_))));
        assert!(matches!(check_per_block(&phi, &psi, &chi, &[1, 2]), Err(Error::NotMajorized)));
    }

    #[test]
    fn construction_errors() {
        let phi = v(&["1/2", "3/10", "3/20", "1/20"]);
        let psi = v(&["2/5", "3/10", "1/5", "1/10"]);
        assert_eq!(construct_aux(&psi, &phi, Scheme::Auto), Err(Error::NoEqualityStructure));
        assert_eq!(construct_aux(&phi, &phi, Scheme::Auto), Err(Error::NothingLost));
        let psi = v(&["2/5", "1/4", "1/5", "3/20"]);
        let phi = v(&["2/5", "3/10", "1/5", "1/10"]);
        assert!(matches!(construct_aux(&psi, &phi, Scheme::DeltaN1), Err(Error::BadParameters(_))));
    }

    #[test]
    fn compositions_enumerate() {
        assert_eq!(compositions(4, 2, 100), vec![vec![1, 3], vec![2, 2], vec![3, 1]]);
        assert_eq!(compositions(3, 3, 100), vec![vec![1, 1, 1]]);
        assert!(compositions(2, 3, 100).is_empty());
        assert_eq!(compositions(6, 3, 100).len(), 10);
    }
}

//! Bundled worked examples, runnable from the CLI as a quick sanity check.

use serde::Serialize;

use crate::applications::{concentration_bounds, multicopy_recover, mutual_catalysis_check, verify_concentration, CopyMode};
use crate::number::ratio;
use crate::order::algorithm2;
use crate::strict::decide_strict;
use crate::uniformity::{entropy, indices};
use crate::vectors::SchmidtVector;
use crate::witness::recovers;

#[derive(Clone, Debug, Serialize)]
pub struct SelftestResult {
    pub name: &'static str,
    pub passed: bool,
}

fn v(raw: &[&str]) -> SchmidtVector {
    SchmidtVector::parse(raw, raw.len(), false).expect("bundled literal")
}

fn p(w: &[i64]) -> SchmidtVector {
    SchmidtVector::proportional(w).expect("bundled weights")
}

type Check = fn() -> bool;

const CHECKS: &[(&str, Check)] = &[
    ("two-level target (3,3,2,2) is recoverable", || {
        decide_strict(&p(&[3, 3, 2, 2]), &v(&["3/5", "2/5"])).is_ok_and(|r| r.feasible)
    }),
    ("targets (3,3,2) and (3,2,2) are not recoverable", || {
        let chi = v(&["3/5", "2/5"]);
        [p(&[3, 3, 2]), p(&[3, 2, 2])].iter().all(|phi| decide_strict(phi, &chi).is_ok_and(|r| !r.feasible))
    }),
    ("uniformity of (1/2,1/4,1/4) and its zero-padded version", || {
        let a = indices(&v(&["1/2", "1/4", "1/4"])).unwrap();
        let b = indices(&v(&["1/2", "1/4", "1/4", "0"])).unwrap();
        a.l_u == ratio(1, 2) && a.big_l_u == ratio(1, 2) && a.g_u == ratio(1, 2) && b.l_u == ratio(0, 1) && b.g_u == ratio(0, 1)
    }),
    ("mutual catalysis of two incomparable pairs", || {
        let psi = v(&["0.33", "0.32", "0.3", "0.05"]);
        let phi = v(&["0.6", "0.2", "0.14", "0.06"]);
        let alpha = v(&["0.6", "0.3", "0.1", "0"]);
        let beta = v(&["0.46", "0.46", "0.08", "0"]);
        mutual_catalysis_check(&psi, &phi, &alpha, &beta).is_ok_and(|r| r.is_mutual_catalysis)
    }),
    ("relabelled catalysis instance is recoverable with a verified witness", || {
        let psi = v(&["0.33", "0.32", "0.3", "0.05"]);
        let phi = v(&["0.46", "0.46", "0.08", "0"]);
        let chi = v(&["0.6", "0.3", "0.1", "0"]);
        algorithm2(&psi, &phi, &chi)
            .is_ok_and(|r| r.witness.is_some_and(|w| recovers(&psi, &phi, &chi, &w.omega)))
    }),
    ("entropies 1.2955 and 1.5472", || {
        (entropy(&v(&["0.6", "0.3", "0.1", "0"])) - 1.2955).abs() < 1e-3
            && (entropy(&v(&["0.6", "0.2", "0.14", "0.06"])) - 1.5472).abs() < 1e-3
    }),
    ("two-level concentration interval (1/2, 2/3]", || {
        let b = concentration_bounds(&ratio(3, 5), &ratio(4, 5), 2).unwrap();
        let (psi, phi) = (v(&["3/5", "2/5"]), v(&["4/5", "1/5"]));
        b.p_interval == Some((ratio(1, 2), ratio(2, 3)))
            && verify_concentration(&psi, &phi, &v(&["2/3", "1/3"]), 2).unwrap()
            && !verify_concentration(&psi, &phi, &v(&["667/1000", "333/1000"]), 2).unwrap()
    }),
    ("two copies of the auxiliary state recover what one cannot", || {
        let phi = p(&[3, 3, 3, 3, 2, 2]);
        let psi = p(&[17, 17, 17, 17, 14, 14]);
        let chi = v(&["3/5", "2/5"]);
        let one = multicopy_recover(&psi, &phi, &chi, 1, CopyMode::Auxiliary);
        let two = multicopy_recover(&psi, &phi, &chi, 2, CopyMode::Auxiliary);
        one.is_ok_and(|r| !r.feasible) && two.is_ok_and(|r| r.feasible)
    }),
];

pub fn run() -> Vec<SelftestResult> {
    CHECKS.iter().map(|(name, check)| SelftestResult { name, passed: check() }).collect()
}

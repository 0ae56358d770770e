#![allow(dead_code)]

use locc_recovery::number::{int, Rational};
use locc_recovery::SchmidtVector;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

pub use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn v(raw: &[&str]) -> SchmidtVector {
    SchmidtVector::parse(raw, raw.len(), false).unwrap()
}

pub fn p(w: &[i64]) -> SchmidtVector {
    SchmidtVector::proportional(w).unwrap()
}

/// Prefix-sum majorization written independently of the library: sorts its own copies,
/// compares cumulative sums, requires equal totals.
pub fn independent_majorized(x: &SchmidtVector, y: &SchmidtVector) -> bool {
    let sorted = |s: &SchmidtVector| {
        let mut c: Vec<Rational> = s.coeffs().to_vec();
        c.sort_by(|a, b| b.cmp(a));
        c
    };
    let (a, b) = (sorted(x), sorted(y));
    if a.len() != b.len() {
        return false;
    }
    let (mut sa, mut sb) = (Rational::zero(), Rational::zero());
    for (p, q) in a.iter().zip(&b) {
        sa += p;
        sb += q;
        if sa > sb {
            return false;
        }
    }
    sa == sb
}

/// Independent check of the recovery relations for a claimed witness ω.
pub fn independent_recovers(psi: &SchmidtVector, phi: &SchmidtVector, chi: &SchmidtVector, omega: &SchmidtVector) -> bool {
    let (mut a, mut b) = (chi.coeffs().to_vec(), omega.coeffs().to_vec());
    a.sort();
    b.sort();
    a != b && independent_majorized(omega, chi) && independent_majorized(&psi.tensor(chi), &phi.tensor(omega))
}

/// Normalized state from weights drawn in `lo..=hi`; retries until some weight is positive.
pub fn random_state(rng: &mut ChaCha8Rng, n: usize, lo: i64, hi: i64) -> SchmidtVector {
    loop {
        let w: Vec<i64> = (0..n).map(|_| rng.gen_range(lo..=hi)).collect();
        if w.iter().any(|&x| x > 0) {
            return p(&w);
        }
    }
}

/// Auxiliary state with frequent repeats and occasional zeros.
pub fn random_chi(rng: &mut ChaCha8Rng, k: usize) -> SchmidtVector {
    let zeros = rng.gen_bool(0.2);
    random_state(rng, k, if zeros { 0 } else { 1 }, 5)
}

/// A random doubly-stochastic image of φ: a convex mix of permutations, hence ψ ≺ φ.
pub fn birkhoff_mix(rng: &mut ChaCha8Rng, phi: &SchmidtVector) -> SchmidtVector {
    let n = phi.dim();
    let terms = rng.gen_range(1..=3);
    let mut out = vec![Rational::zero(); n];
    let mut total = Rational::zero();
    for _ in 0..terms {
        let w = int(rng.gen_range(1..=4));
        let mut perm: Vec<usize> = (0..n).collect();
        perm.shuffle(rng);
        for (i, &pi) in perm.iter().enumerate() {
            out[i] += &w * &phi.coeffs()[pi];
        }
        total += w;
    }
    SchmidtVector::new(out.into_iter().map(|c| c / &total).collect()).unwrap()
}

/// `(1-t)·x + t·uniform` with the same total as x.
pub fn blend_uniform(x: &SchmidtVector, t: &Rational) -> SchmidtVector {
    let n = x.dim();
    let mean = x.sum() / int(n as i64);
    let one = Rational::one();
    SchmidtVector::new(x.coeffs().iter().map(|c| (&one - t) * c + t * &mean).collect()).unwrap()
}

/// Random ψ ≺ φ; the uniform blend is skipped half the time so equalities stay common.
pub fn random_majorized(rng: &mut ChaCha8Rng, phi: &SchmidtVector) -> SchmidtVector {
    let mixed = birkhoff_mix(rng, phi);
    if rng.gen_bool(0.5) {
        mixed
    } else {
        blend_uniform(&mixed, &Rational::new(rng.gen_range(0..=3).into(), 4.into()))
    }
}

/// Random ψ ⊲ φ for a non-uniform φ.
pub fn random_strict(rng: &mut ChaCha8Rng, phi: &SchmidtVector) -> SchmidtVector {
    let mixed = birkhoff_mix(rng, phi);
    blend_uniform(&mixed, &Rational::new(rng.gen_range(1..=7).into(), 8.into()))
}

/// Non-uniform normalized state with strictly decreasing positive entries.
pub fn random_distinct(rng: &mut ChaCha8Rng, n: usize) -> SchmidtVector {
    let mut w: Vec<i64> = Vec::with_capacity(n);
    let mut cur = rng.gen_range(1..=4);
    for _ in 0..n {
        w.push(cur);
        cur += rng.gen_range(1..=4);
    }
    p(&w)
}

/// `(ψ, φ)` whose equality set Δ is exactly `delta` (1-based prefix lengths, all `< n`).
/// φ has distinct entries; ψ blends each Strict-side block towards its own mean.
pub fn with_equality_pattern(rng: &mut ChaCha8Rng, n: usize, delta: &[usize]) -> (SchmidtVector, SchmidtVector) {
    let phi = random_distinct(rng, n);
    let mut cuts = vec![0];
    cuts.extend_from_slice(delta);
    cuts.push(n);
    let mut psi = Vec::with_capacity(n);
    for w in cuts.windows(2) {
        let block = phi.segment(w[0], w[1] - w[0]);
        if block.dim() == 1 {
            psi.extend(block.into_coeffs());
        } else {
            let t = Rational::new(rng.gen_range(1..=7).into(), 8.into());
            psi.extend(blend_uniform(&block, &t).into_coeffs());
        }
    }
    (SchmidtVector::new(psi).unwrap(), phi)
}

//! Sorted Schmidt-coefficient vectors, their algebra, and majorization.

use std::fmt;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::number::{self, Rational};

/// A non-increasing vector of non-negative exact rationals with a fixed dimension.
///
/// Trailing zeros are part of the vector: `(1/2, 1/2)` and `(1/2, 1/2, 0)` are
/// different states of different dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SchmidtVector {
    coeffs: Vec<Rational>,
}

/// Run-length encoding of a sorted vector: strictly decreasing values with multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompactForm {
    #[serde(serialize_with = "ser_rationals")]
    pub values: Vec<Rational>,
    pub multiplicities: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MajorizationReport {
    pub majorized: bool,
    pub strict: bool,
    /// Prefix lengths `m` in `1..n` where `e_m(x) = e_m(y)`.
    #[serde(rename = "delta")]
    pub delta_set: Vec<usize>,
    /// First prefix length (1-based) where `e_m(x) > e_m(y)`.
    pub first_violation: Option<usize>,
}

fn ser_rationals<S: serde::Serializer>(v: &[Rational], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(number::format))
}

impl SchmidtVector {
    /// Builds a vector from coefficients in any order. Rejects negatives; does not require sum 1.
    pub fn new(mut coeffs: Vec<Rational>) -> Result<Self> {
        if let Some(neg) = coeffs.iter().find(|c| number::is_negative(c)) {
            return Err(Error::NegativeCoefficient(number::format(neg)));
        }
        coeffs.sort_by(|a, b| b.cmp(a));
        Ok(SchmidtVector { coeffs })
    }

    /// Like [`SchmidtVector::new`] but additionally requires the coefficients to sum to 1.
    pub fn normalized(coeffs: Vec<Rational>) -> Result<Self> {
        let v = Self::new(coeffs)?;
        if !v.is_normalized() {
            return Err(Error::NotNormalized(number::format(&v.sum())));
        }
        Ok(v)
    }

    /// Parses decimal or fraction literals; `count` must equal `dim`.
    pub fn parse<S: AsRef<str>>(raw: &[S], dim: usize, normalized: bool) -> Result<Self> {
        if raw.len() != dim {
            return Err(Error::DimensionMismatch { expected: dim, found: raw.len() });
        }
        let coeffs = raw.iter().map(|s| number::parse(s.as_ref())).collect::<Result<Vec<_>>>()?;
        if normalized {
            Self::normalized(coeffs)
        } else {
            Self::new(coeffs)
        }
    }

    /// Normalized vector proportional to the given non-negative weights, e.g. `(3,3,2,2) -> (3,3,2,2)/10`.
    pub fn proportional(weights: &[i64]) -> Result<Self> {
        let v = Self::new(weights.iter().map(|&w| number::int(w)).collect())?;
        let total = v.sum();
        if total.is_zero() {
            return Err(Error::ZeroState);
        }
        Ok(v.scale(&total.recip()))
    }

    /// The maximally entangled state `(1/k, ..., 1/k)`.
    pub fn uniform(k: usize) -> Self {
        assert!(k > 0);
        SchmidtVector { coeffs: vec![number::ratio(1, k as i64); k] }
    }

    pub fn from_sorted_unchecked(coeffs: Vec<Rational>) -> Self {
        debug_assert!(coeffs.windows(2).all(|w| w[0] >= w[1]));
        SchmidtVector { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn sum(&self) -> Rational {
        self.coeffs.iter().sum()
    }

    pub fn is_normalized(&self) -> bool {
        self.sum().is_one()
    }

    pub fn max(&self) -> Rational {
        self.coeffs.first().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min(&self) -> Rational {
        self.coeffs.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn nonzero_count(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Only one distinct value (maximally entangled, or dimension one).
    pub fn is_uniform(&self) -> bool {
        self.coeffs.first() == self.coeffs.last()
    }

    pub fn scale(&self, factor: &Rational) -> Self {
        SchmidtVector::new(self.coeffs.iter().map(|c| c * factor).collect()).expect("non-negative factor")
    }

    /// `e_m`: the sum of the `m` largest coefficients.
    pub fn prefix_sum(&self, m: usize) -> Result<Rational> {
        if m == 0 || m > self.dim() {
            return Err(Error::IndexOutOfRange { index: m, dim: self.dim() });
        }
        Ok(self.coeffs[..m].iter().sum())
    }

    /// All prefix sums `e_1, ..., e_n`.
    pub fn prefix_sums(&self) -> Vec<Rational> {
        let mut acc = Rational::zero();
        self.coeffs
            .iter()
            .map(|c| {
                acc += c;
                acc.clone()
            })
            .collect()
    }

    pub fn compact(&self) -> CompactForm {
        let mut values: Vec<Rational> = Vec::new();
        let mut multiplicities = Vec::new();
        for c in &self.coeffs {
            if values.last() == Some(c) {
                *multiplicities.last_mut().unwrap() += 1;
            } else {
                values.push(c.clone());
                multiplicities.push(1);
            }
        }
        CompactForm { values, multiplicities }
    }

    pub fn tensor(&self, other: &SchmidtVector) -> SchmidtVector {
        let mut out = Vec::with_capacity(self.dim() * other.dim());
        for a in &self.coeffs {
            for b in &other.coeffs {
                out.push(a * b);
            }
        }
        SchmidtVector::new(out).expect("products of non-negatives")
    }

    pub fn tensor_power(&self, m: usize) -> Result<SchmidtVector> {
        if m == 0 {
            return Err(Error::PreconditionViolated("tensor power needs m >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..m {
            acc = acc.tensor(self);
        }
        Ok(acc)
    }

    pub fn direct_sum(&self, other: &SchmidtVector) -> SchmidtVector {
        let mut out = self.coeffs.clone();
        out.extend(other.coeffs.iter().cloned());
        SchmidtVector::new(out).expect("non-negative")
    }

    /// Contiguous slice `[start, start+len)` of the sorted vector, as its own (unnormalized) vector.
    pub fn segment(&self, start: usize, len: usize) -> SchmidtVector {
        SchmidtVector { coeffs: self.coeffs[start..start + len].to_vec() }
    }

    /// Appends `extra` zeros.
    pub fn pad_zeros(&self, extra: usize) -> SchmidtVector {
        let mut coeffs = self.coeffs.clone();
        coeffs.extend(std::iter::repeat_n(Rational::zero(), extra));
        SchmidtVector { coeffs }
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(number::format).collect()
    }
}

impl fmt::Display for SchmidtVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if c.denom().is_one() {
                write!(f, "{}", c.numer())?;
            } else {
                write!(f, "{c}")?;
            }
        }
        write!(f, ")")
    }
}

impl CompactForm {
    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn dim(&self) -> usize {
        self.multiplicities.iter().sum()
    }

    pub fn expand(&self) -> SchmidtVector {
        let mut coeffs = Vec::with_capacity(self.dim());
        for (v, &k) in self.values.iter().zip(&self.multiplicities) {
            coeffs.extend(std::iter::repeat_n(v.clone(), k));
        }
        SchmidtVector::from_sorted_unchecked(coeffs)
    }

    /// Position (0-based, in the expanded vector) of the first copy of value `i` (0-based).
    pub fn first_position(&self, i: usize) -> usize {
        self.multiplicities[..i].iter().sum()
    }

    pub fn last_position(&self, i: usize) -> usize {
        self.first_position(i) + self.multiplicities[i] - 1
    }
}

/// Prefix-sum comparison of `x` against `y` (is `x ≺ y`?).
pub fn majorize(x: &SchmidtVector, y: &SchmidtVector) -> Result<MajorizationReport> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: y.dim(), found: x.dim() });
    }
    let (sx, sy) = (x.sum(), y.sum());
    if sx != sy {
        return Err(Error::SumMismatch(number::format(&sx), number::format(&sy)));
    }
    let n = x.dim();
    let (ex, ey) = (x.prefix_sums(), y.prefix_sums());
    let mut delta_set = Vec::new();
    let mut first_violation = None;
    for m in 1..n {
        match ex[m - 1].cmp(&ey[m - 1]) {
            std::cmp::Ordering::Greater => {
                first_violation.get_or_insert(m);
            }
            std::cmp::Ordering::Equal => delta_set.push(m),
            std::cmp::Ordering::Less => {}
        }
    }
    let majorized = first_violation.is_none();
    // A one-dimensional pair is always identical, so it is never strict.
    let strict = majorized && delta_set.is_empty() && n >= 2;
    Ok(MajorizationReport { majorized, strict, delta_set, first_violation })
}

pub fn is_majorized(x: &SchmidtVector, y: &SchmidtVector) -> bool {
    majorize(x, y).map(|r| r.majorized).unwrap_or(false)
}

pub fn is_strictly_majorized(x: &SchmidtVector, y: &SchmidtVector) -> bool {
    majorize(x, y).map(|r| r.strict).unwrap_or(false)
}

/// `x ⊏ y`: the range of `x` sits strictly inside the range of `y`.
pub fn bounded_strictly(x: &SchmidtVector, y: &SchmidtVector) -> bool {
    if x.dim() == 0 || y.dim() == 0 {
        return false;
    }
    x.max() < y.max() && x.min() > y.min()
}

/// Euclidean distance between the sorted vectors. Diagnostics only.
pub fn distance(x: &SchmidtVector, y: &SchmidtVector) -> Result<f64> {
    if x.dim() != y.dim() {
        return Err(Error::DimensionMismatch { expected: x.dim(), found: y.dim() });
    }
    let sq: Rational = x.coeffs.iter().zip(&y.coeffs).map(|(a, b)| (a - b) * (a - b)).sum();
    Ok(number::to_f64(&sq).sqrt())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::number::ratio;

    fn v(raw: &[&str]) -> SchmidtVector {
        SchmidtVector::parse(raw, raw.len(), false).unwrap()
    }

    #[test]
    fn parse_sorts_and_checks() {
        let x = SchmidtVector::parse(&["0.33", "0.32", "0.3", "0.05"], 4, true).unwrap();
        assert_eq!(x.coeffs(), &[ratio(33, 100), ratio(8, 25), ratio(3, 10), ratio(1, 20)]);
        assert_eq!(SchmidtVector::parse(&["1"], 1, true).unwrap().coeffs(), &[ratio(1, 1)]);
        assert_eq!(SchmidtVector::parse(&["0.3", "0.7"], 2, true).unwrap().coeffs(), &[ratio(7, 10), ratio(3, 10)]);
        assert!(matches!(SchmidtVector::parse(&["-0.1", "1.1"], 2, false), Err(Error::NegativeCoefficient(_))));
        assert!(matches!(SchmidtVector::parse(&["1"], 2, true), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(SchmidtVector::parse(&["0.3", "0.3"], 2, true), Err(Error::NotNormalized(_))));
    }

    #[test]
    fn prefix_sums_by_hand() {
        let x = v(&["1/2", "3/10", "1/5"]);
        assert_eq!(x.prefix_sum(2).unwrap(), ratio(4, 5));
        assert_eq!(x.prefix_sum(3).unwrap(), ratio(1, 1));
        assert_eq!(v(&["1", "0"]).prefix_sum(1).unwrap(), ratio(1, 1));
        assert!(x.prefix_sum(0).is_err());
        assert!(x.prefix_sum(4).is_err());
    }

    #[test]
    fn compact_forms() {
        let c = v(&["1/2", "1/4", "1/4"]).compact();
        assert_eq!(c.values, vec![ratio(1, 2), ratio(1, 4)]);
        assert_eq!(c.multiplicities, vec![1, 2]);
        let c = v(&["1/2", "1/4", "1/4", "0"]).compact();
        assert_eq!(c.values, vec![ratio(1, 2), ratio(1, 4), ratio(0, 1)]);
        assert_eq!(c.multiplicities, vec![1, 2, 1]);
        let c = v(&["1/3", "1/3", "1/3"]).compact();
        assert_eq!(c.values, vec![ratio(1, 3)]);
        assert_eq!(c.multiplicities, vec![3]);
        assert_eq!(c.first_position(0), 0);
        assert_eq!(c.last_position(0), 2);
    }

    #[test]
    fn tensor_and_sums() {
        let t = v(&["1/2", "1/2"]).tensor(&v(&["2/3", "1/3"]));
        assert_eq!(t, v(&["1/3", "1/3", "1/6", "1/6"]));
        let p = v(&["3/5", "2/5"]).tensor_power(2).unwrap();
        assert_eq!(p, v(&["9/25", "6/25", "6/25", "4/25"]));
        assert_eq!(v(&["1/2"]).direct_sum(&v(&["1/4", "1/4"])), v(&["1/2", "1/4", "1/4"]));
    }

    #[test]
    fn majorization_examples() {
        let r = majorize(&v(&["2/5", "3/10", "1/5", "1/10"]), &v(&["1/2", "3/10", "3/20", "1/20"])).unwrap();
        assert!(r.majorized && r.strict && r.delta_set.is_empty());
        let r = majorize(&v(&["2/5", "2/5", "1/10", "1/10"]), &v(&["1/2", "1/4", "1/4", "0"])).unwrap();
        assert!(!r.majorized);
        assert_eq!(r.first_violation, Some(2));
        let r = majorize(&v(&["1/2", "1/2"]), &v(&["1/2", "1/2"])).unwrap();
        assert!(r.majorized && !r.strict);
        assert_eq!(r.delta_set, vec![1]);
        assert!(matches!(majorize(&v(&["1"]), &v(&["1/2", "1/2"])), Err(Error::DimensionMismatch { .. })));
        assert!(matches!(majorize(&v(&["1", "0"]), &v(&["1/2", "1/4"])), Err(Error::SumMismatch(..))));
    }

    #[test]
    fn one_dimensional_pairs_are_not_strict() {
        let r = majorize(&v(&["1"]), &v(&["1"])).unwrap();
        assert!(r.majorized && !r.strict);
    }

    #[test]
    fn bounded_strictly_examples() {
        assert!(bounded_strictly(&v(&["3/10", "1/5"]), &v(&["2/5", "1/10"])));
        assert!(!bounded_strictly(&v(&["2/5", "1/10"]), &v(&["3/10", "1/5"])));
        assert!(!bounded_strictly(&v(&["1/2", "1/2"]), &v(&["1/2", "1/2"])));
    }

    #[test]
    fn distances() {
        let x = v(&["3/5", "2/5"]);
        assert_eq!(distance(&x, &x).unwrap(), 0.0);
        assert!((distance(&v(&["1", "0"]), &v(&["1/2", "1/2"])).unwrap() - 0.5f64.sqrt()).abs() < 1e-12);
        assert!((distance(&x, &v(&["1/2", "1/2"])).unwrap() - (1.0f64 / 50.0).sqrt()).abs() < 1e-12);
    }

    #[test]
    fn proportional_and_uniform() {
        assert_eq!(SchmidtVector::proportional(&[3, 3, 2, 2]).unwrap(), v(&["3/10", "3/10", "1/5", "1/5"]));
        assert_eq!(SchmidtVector::uniform(3), v(&["1/3", "1/3", "1/3"]));
        assert!(SchmidtVector::uniform(3).is_uniform());
    }
}

//! Total irregularity and its Fibonacci-weighted variants.
//!
//! All three metrics are the sum over unordered vertex pairs of the absolute
//! difference of a per-vertex value (degree, `f_d`, or `±f_d`). Each has a
//! quadratic oracle and a sorted-prefix fast path: with values sorted
//! ascending as `w_(1) <= … <= w_(n)`, the pair sum is
//! `Σ_k w_(k) · (2k − 1 − n)`.

use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fibonacci::{FibCache, FibCursor};
use crate::graph::DegreeSequence;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Naive,
    SortedPrefix,
    ClosedForm,
}

/// A metric value tagged with how it was computed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IrrValue {
    pub value: BigUint,
    pub method: Method,
}

impl IrrValue {
    fn new(value: BigInt, method: Method) -> Self {
        IrrValue {
            value: value
                .to_biguint()
                .expect("pair sums of absolute differences are non-negative"),
            method,
        }
    }
}

impl fmt::Display for IrrValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.value.fmt(f)
    }
}

impl PartialEq<u64> for IrrValue {
    fn eq(&self, other: &u64) -> bool {
        self.value == BigUint::from(*other)
    }
}

/// Which per-vertex value a metric sums over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Metric {
    /// irr_t: degrees.
    Total,
    /// firr_t: Fibonacci weights.
    Fibonacci,
    /// firr_t^±: signed Fibonacci weights.
    SignedFibonacci,
}

impl Metric {
    pub fn evaluate(self, degrees: &DegreeSequence) -> IrrValue {
        match self {
            Metric::Total => irr_t(degrees),
            Metric::Fibonacci => firr_t(degrees),
            Metric::SignedFibonacci => firr_pm(degrees),
        }
    }

    pub fn evaluate_naive(self, degrees: &DegreeSequence) -> IrrValue {
        match self {
            Metric::Total => irr_t_naive(degrees),
            Metric::Fibonacci => firr_t_naive(degrees),
            Metric::SignedFibonacci => firr_pm_naive(degrees),
        }
    }

    /// The per-vertex values this metric compares.
    pub fn weights(self, degrees: &DegreeSequence) -> WeightVector {
        let mut cache = FibCache::up_to(degrees.max_degree());
        let values = degrees.iter().map(|d| match self {
            Metric::Total => BigInt::from(d),
            Metric::Fibonacci => BigInt::from(cache.weight(d)),
            Metric::SignedFibonacci => cache.signed_weight(d),
        });
        WeightVector(values.collect())
    }
}

/// Per-vertex weights, indexed from vertex 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightVector(Vec<BigInt>);

impl WeightVector {
    pub fn fibonacci(degrees: &DegreeSequence) -> Self {
        Metric::Fibonacci.weights(degrees)
    }

    pub fn signed_fibonacci(degrees: &DegreeSequence) -> Self {
        Metric::SignedFibonacci.weights(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Weight of vertex `v` (1-based).
    pub fn weight(&self, v: usize) -> &BigInt {
        &self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[BigInt] {
        &self.0
    }

    pub fn all_equal(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, w) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

/// Σ_{i<j} |a_i − a_j| over every unordered pair.
pub fn pair_sum_naive(values: &[BigInt]) -> BigInt {
    let mut total = BigInt::zero();
    for (idx, a) in values.iter().enumerate() {
        for b in &values[idx + 1..] {
            total += (a - b).abs();
        }
    }
    total
}

/// Same sum via sorting: Σ_k w_(k)·(2k − 1 − n).
pub fn pair_sum_sorted(values: &[BigInt]) -> BigInt {
    let mut sorted: Vec<&BigInt> = values.iter().collect();
    sorted.sort_unstable();
    let n = sorted.len() as i64;
    let mut total = BigInt::zero();
    for (pos, w) in sorted.into_iter().enumerate() {
        let coef = 2 * pos as i64 + 1 - n;
        if coef != 0 && !w.is_zero() {
            total += w * coef;
        }
    }
    total
}

fn sorted_degrees(degrees: &DegreeSequence) -> Vec<usize> {
    let mut sorted = degrees.as_slice().to_vec();
    sorted.sort_unstable();
    sorted
}

/// irr_t by the sorted-prefix identity.
pub fn irr_t(degrees: &DegreeSequence) -> IrrValue {
    let sorted = sorted_degrees(degrees);
    let n = sorted.len() as i128;
    let total: i128 = sorted
        .iter()
        .enumerate()
        .map(|(pos, &d)| d as i128 * (2 * pos as i128 + 1 - n))
        .sum();
    IrrValue::new(BigInt::from(total), Method::SortedPrefix)
}

pub fn irr_t_naive(degrees: &DegreeSequence) -> IrrValue {
    let d = degrees.as_slice();
    let mut total: u128 = 0;
    for (idx, &a) in d.iter().enumerate() {
        for &b in &d[idx + 1..] {
            total += a.abs_diff(b) as u128;
        }
    }
    IrrValue::new(BigInt::from(total), Method::Naive)
}

/// firr_t by the sorted-prefix identity.
///
/// `f_d` is non-decreasing in `d`, so sorting degrees sorts weights. Weights
/// come from a forward-walking cursor, so memory stays at one number per
/// distinct coefficient rather than one per degree value.
pub fn firr_t(degrees: &DegreeSequence) -> IrrValue {
    let sorted = sorted_degrees(degrees);
    let n = sorted.len() as i64;
    let mut cursor = FibCursor::new();
    let mut total = BigInt::zero();
    let mut pos = 0usize;
    while pos < sorted.len() {
        let d = sorted[pos];
        let run = sorted[pos..].iter().take_while(|&&x| x == d).count() as i64;
        // Σ over positions p..p+run of (2p + 1 − n)
        let first = 2 * pos as i64 + 1 - n;
        let coef = run * first + run * (run - 1);
        if coef != 0 {
            let w = BigInt::from_biguint(Sign::Plus, cursor.seek(d).clone());
            total += w * coef;
        }
        pos += run as usize;
    }
    IrrValue::new(total, Method::SortedPrefix)
}

pub fn firr_t_naive(degrees: &DegreeSequence) -> IrrValue {
    let weights = WeightVector::fibonacci(degrees);
    IrrValue::new(pair_sum_naive(weights.as_slice()), Method::Naive)
}

/// firr_t^±: signed weights are not monotone in the degree, so they are
/// sorted by value.
pub fn firr_pm(degrees: &DegreeSequence) -> IrrValue {
    let weights = WeightVector::signed_fibonacci(degrees);
    IrrValue::new(pair_sum_sorted(weights.as_slice()), Method::SortedPrefix)
}

pub fn firr_pm_naive(degrees: &DegreeSequence) -> IrrValue {
    let weights = WeightVector::signed_fibonacci(degrees);
    IrrValue::new(pair_sum_naive(weights.as_slice()), Method::Naive)
}

/// firr_t(S_{1,n}) = n·(f_n − 1).
pub fn star_firr_closed(n: usize) -> Result<IrrValue> {
    if n == 0 {
        return Err(Error::InvalidSize {
            family: "star",
            detail: "needs at least one leaf".into(),
        });
    }
    let mut cache = FibCache::new();
    let fn_ = BigInt::from(cache.weight(n));
    Ok(IrrValue::new((fn_ - 1) * n, Method::ClosedForm))
}

/// firr_t(K_{n,m}) = n·m·(f_n − f_m) for n >= m.
pub fn biclique_firr_closed(n: usize, m: usize) -> Result<IrrValue> {
    if m == 0 || n < m {
        return Err(Error::InvalidSize {
            family: "complete bipartite",
            detail: format!("needs n >= m >= 1, got n={n}, m={m}"),
        });
    }
    let mut cache = FibCache::new();
    let gap = BigInt::from(cache.weight(n)) - BigInt::from(cache.weight(m));
    Ok(IrrValue::new(gap * n * m, Method::ClosedForm))
}

/// firr_t^±(P_n) = 4(n − 2) for n >= 3.
pub fn path_firr_pm_closed(n: usize) -> Result<IrrValue> {
    if n < 3 {
        return Err(Error::InvalidSize {
            family: "path",
            detail: format!("closed form needs n >= 3, got {n}"),
        });
    }
    Ok(IrrValue::new(BigInt::from(4 * (n - 2)), Method::ClosedForm))
}

/// All vertices carry the same Fibonacci weight.
pub fn is_f_regular(degrees: &DegreeSequence) -> bool {
    let mut it = degrees.iter().map(|d| if d == 2 { 1 } else { d });
    match it.next() {
        Some(first) => it.all(|d| d == first),
        None => true,
    }
}

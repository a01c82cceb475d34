//! Right-hand-side evaluators for the Jaco irregularity recursions and union
//! identities, each paired with a from-scratch oracle.
//!
//! Every comparison is exact integer arithmetic.

use std::ops::RangeInclusive;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::fibonacci::FibCache;
use crate::graph::{DegreeSequence, SimpleGraph};
use crate::irregularity::{IrrValue, Metric, Method};
use crate::jaco::{build_profile, first_max_degree_index, underlying_degrees, underlying_graph};
use crate::report::{InstanceRecord, Relation, SweepReport, TheoremId, VerifyReport};

/// Names of the two readings of ℓ in the union bound.
pub const READING_MAX_DEGREE: &str = "max-degree";
pub const READING_PRIME_INDEX: &str = "prime-index";

fn big(v: &IrrValue) -> BigInt {
    BigInt::from(v.value.clone())
}

fn rhs_value(total: &BigInt) -> IrrValue {
    IrrValue {
        value: total
            .to_biguint()
            .expect("recursion evaluated to a negative value"),
        method: Method::ClosedForm,
    }
}

/// Degrees of `J*_n` and `J*_{n+1}` plus the prime Jaconian index of `J*_n`.
struct Step {
    n: usize,
    k: usize,
    before: DegreeSequence,
    after: DegreeSequence,
}

impl Step {
    fn new(n: usize) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidSize {
                family: "recursion step",
                detail: format!("needs n >= 2, got {n}"),
            });
        }
        let profile = build_profile(n + 1)?;
        let before = profile.finite_degrees(n);
        let after = profile.finite_degrees(n + 1);
        let k = first_max_degree_index(&before);
        Ok(Step {
            n,
            k,
            before,
            after,
        })
    }
}

/// Terms of the irr_t step from `J*_n` to `J*_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm21Terms {
    pub k: usize,
    pub previous: BigInt,
    /// Per `j` in `1..=n−k`: (#old `i <= k` with `d(v_i) <= d(v_{k+j})`) minus the rest.
    pub counting_parts: Vec<i64>,
    pub counting: BigInt,
    /// Σ_{i=1}^{n} |(n−k) − d*(v_i)|
    pub new_vertex: BigInt,
    pub total: BigInt,
}

pub fn thm21_terms(n: usize) -> Result<Thm21Terms> {
    let Step {
        n,
        k,
        before,
        after,
    } = Step::new(n)?;
    let previous = big(&Metric::Total.evaluate(&before));
    let head = &before.as_slice()[..k];
    let counting_parts: Vec<i64> = (1..=n - k)
        .map(|j| {
            let d = before.degree(k + j);
            let at_most = head.iter().filter(|&&x| x <= d).count() as i64;
            at_most - (k as i64 - at_most)
        })
        .collect();
    let counting = BigInt::from(counting_parts.iter().sum::<i64>());
    let new_degree = (n - k) as i64;
    let new_vertex = BigInt::from(
        (1..=n)
            .map(|i| (new_degree - after.degree(i) as i64).abs())
            .sum::<i64>(),
    );
    let total = &previous + &counting + &new_vertex;
    Ok(Thm21Terms {
        k,
        previous,
        counting_parts,
        counting,
        new_vertex,
        total,
    })
}

/// irr_t(J*_{n+1}) from irr_t(J*_n) by the incremental recursion.
pub fn thm21_rhs(n: usize) -> Result<IrrValue> {
    Ok(rhs_value(&thm21_terms(n)?.total))
}

/// Terms of the firr_t step from `J*_n` to `J*_{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Thm31Terms {
    pub k: usize,
    pub previous: BigInt,
    /// Σ_{i=1}^{n} |f_{n−k} − f_{d*(v_i)}|
    pub new_vertex: BigInt,
    /// Σ_{i=k+1}^{n} (ℓ_{1,i} − ℓ_{2,i})·(f_{d(v_i)+1} − f_{d(v_i)})
    pub cross: BigInt,
    /// Σ_{k<i<j<=n} | |f_{d_i} − f_{d_j}| − |f_{d_i+1} − f_{d_j+1}| |
    pub incremented_pairs: BigInt,
    /// Pairs whose signed step |f_{d_i+1} − f_{d_j+1}| − |f_{d_i} − f_{d_j}| is negative.
    pub negative_pair_steps: usize,
    pub total: BigInt,
}

pub fn thm31_terms(n: usize) -> Result<Thm31Terms> {
    let Step {
        n,
        k,
        before,
        after,
    } = Step::new(n)?;
    let mut fib = FibCache::up_to(after.max_degree().max(n) + 1);
    let mut f = |d: usize| BigInt::from(fib.weight(d));

    let previous = big(&Metric::Fibonacci.evaluate(&before));

    let new_weight = f(n - k);
    let mut new_vertex = BigInt::zero();
    for i in 1..=n {
        new_vertex += (&new_weight - f(after.degree(i))).abs();
    }

    let head = &before.as_slice()[..k];
    let mut cross = BigInt::zero();
    for i in k + 1..=n {
        let raised = after.degree(i);
        let below = head.iter().filter(|&&x| raised > x).count() as i64;
        let not_below = k as i64 - below;
        let d = before.degree(i);
        cross += (f(d + 1) - f(d)) * (below - not_below);
    }

    let mut incremented_pairs = BigInt::zero();
    let mut negative_pair_steps = 0;
    for i in k + 1..n {
        for j in i + 1..=n {
            let (di, dj) = (before.degree(i), before.degree(j));
            let old = (f(di) - f(dj)).abs();
            let new = (f(di + 1) - f(dj + 1)).abs();
            let step = new - old;
            if step.is_negative() {
                negative_pair_steps += 1;
            }
            incremented_pairs += step.abs();
        }
    }

    let total = &previous + &new_vertex + &cross + &incremented_pairs;
    Ok(Thm31Terms {
        k,
        previous,
        new_vertex,
        cross,
        incremented_pairs,
        negative_pair_steps,
        total,
    })
}

/// firr_t(J*_{n+1}) from firr_t(J*_n) by the incremental recursion.
pub fn thm31_rhs(n: usize) -> Result<IrrValue> {
    Ok(rhs_value(&thm31_terms(n)?.total))
}

fn recursion_check(theorem: TheoremId, n: usize) -> Result<InstanceRecord> {
    let (metric, formula) = match theorem {
        TheoremId::Thm21 => (Metric::Total, thm21_terms(n)?.total),
        _ => (Metric::Fibonacci, thm31_terms(n)?.total),
    };
    let oracle = big(&metric.evaluate_naive(&underlying_degrees(n + 1)?));
    Ok(InstanceRecord::new(
        (n, None, None),
        Relation::Equality,
        oracle,
        formula,
    ))
}

/// Union bound `2(μ(J*_n) + μ(J*_m)) + Σ_{i=ℓ+1}^{n} Σ_{j=n+ℓ+1}^{n+m} |w_i − w_j|`
/// where `w` are the per-vertex values of the union's degree sequence.
pub fn union_bound(metric: Metric, n: usize, m: usize, ell: usize) -> Result<BigInt> {
    let dn = underlying_degrees(n)?;
    let dm = underlying_degrees(m)?;
    let weights = metric.weights(&dn.concat(&dm));
    let mut correction = BigInt::zero();
    for i in ell + 1..=n {
        for j in n + ell + 1..=n + m {
            correction += (weights.weight(i) - weights.weight(j)).abs();
        }
    }
    let base = big(&metric.evaluate(&dn)) + big(&metric.evaluate(&dm));
    Ok(base * 2 + correction)
}

fn union_check(theorem: TheoremId, n: usize, m: usize) -> Result<InstanceRecord> {
    if m == 0 || n < m {
        return Err(Error::InvalidSize {
            family: "union check",
            detail: format!("needs n >= m >= 1, got n={n}, m={m} (swap arguments)"),
        });
    }
    let metric = match theorem {
        TheoremId::Thm32 => Metric::Total,
        _ => Metric::Fibonacci,
    };
    let gn = underlying_graph(n)?;
    let gm = underlying_graph(m)?;
    let union = gn.disjoint_union(&gm);
    let oracle = big(&metric.evaluate_naive(&union.degree_sequence()));
    let single_n = big(&metric.evaluate_naive(&gn.degree_sequence()));
    let single_m = big(&metric.evaluate_naive(&gm.degree_sequence()));
    let superadditive = oracle >= &single_n + &single_m;

    let mut record = if n == m {
        InstanceRecord::new(
            (n, Some(m), None),
            Relation::Equality,
            oracle,
            single_n * 4,
        )
    } else {
        let dm = gm.degree_sequence();
        let by_degree = union_bound(metric, n, m, dm.max_degree())?;
        let by_index = union_bound(metric, n, m, first_max_degree_index(&dm))?;
        InstanceRecord::new((n, Some(m), None), Relation::AtMost, oracle, by_degree)
            .with_alternate(READING_MAX_DEGREE, READING_PRIME_INDEX, by_index)
    };
    record.superadditive = Some(superadditive);
    Ok(record)
}

/// irr_t of `J*_n ∪ J*_m` against the union identity (`n = m`) or bound (`n > m`).
pub fn thm32_check(n: usize, m: usize) -> Result<InstanceRecord> {
    union_check(TheoremId::Thm32, n, m)
}

/// firr_t counterpart of [`thm32_check`].
pub fn cor31_check(n: usize, m: usize) -> Result<InstanceRecord> {
    union_check(TheoremId::Cor31, n, m)
}

/// firr_t(J*_n ∪ J*_m) against firr_t(J*_n ⇝_{v_1 u_1} J*_m), both from scratch.
pub fn lemma31_check(n: usize, m: usize) -> Result<InstanceRecord> {
    if n < 2 || m < 2 {
        return Err(Error::InvalidSize {
            family: "edge-joint at first vertices",
            detail: format!("needs n, m >= 2, got n={n}, m={m}"),
        });
    }
    let gn = underlying_graph(n)?;
    let gm = underlying_graph(m)?;
    let union = firr_of(&gn.disjoint_union(&gm));
    let joined = firr_of(&gn.edge_joint(1, &gm, 1)?);
    Ok(InstanceRecord::new(
        (n, Some(m), None),
        Relation::Equality,
        union,
        joined,
    ))
}

fn firr_of(g: &SimpleGraph) -> BigInt {
    big(&Metric::Fibonacci.evaluate_naive(&g.degree_sequence()))
}

fn check_joint_params(n: usize, m: usize, i: usize) -> Result<()> {
    if n < 3 || m < 1 || i < 2 || i > n {
        return Err(Error::InvalidSize {
            family: "edge-joint at v_i",
            detail: format!("needs n >= 3, m >= 1, 2 <= i <= n; got n={n}, m={m}, i={i}"),
        });
    }
    Ok(())
}

/// firr_t(J*_n ⇝_{v_i u_1} J*_m) recomputed on the joined graph.
pub fn thm33_exact(n: usize, m: usize, i: usize) -> Result<IrrValue> {
    check_joint_params(n, m, i)?;
    let joined = underlying_graph(n)?.edge_joint(i, &underlying_graph(m)?, 1)?;
    Ok(Metric::Fibonacci.evaluate_naive(&joined.degree_sequence()))
}

/// The closed edge-joint formula, evaluated with every weight taken at its
/// pre-join degree. `V_1`/`V_2` range over `J*_n` without `v_i`; `V_3`/`V_4`
/// over all of `J*_m`. The result is signed because nothing forces the
/// formula to be non-negative.
pub fn thm33_literal(n: usize, m: usize, i: usize) -> Result<BigInt> {
    check_joint_params(n, m, i)?;
    let dn = underlying_degrees(n)?;
    let dm = underlying_degrees(m)?;
    let wn = Metric::Fibonacci.weights(&dn);
    let wm = Metric::Fibonacci.weights(&dm);
    let pivot = wn.weight(i);

    let mut value = big(&Metric::Fibonacci.evaluate(&dn)) + big(&Metric::Fibonacci.evaluate(&dm));
    for a in wn.as_slice() {
        for b in wm.as_slice() {
            value += (a - b).abs();
        }
    }
    let others = wn
        .as_slice()
        .iter()
        .enumerate()
        .filter(|&(idx, _)| idx + 1 != i)
        .map(|(_, w)| w)
        .chain(wm.as_slice());
    for w in others {
        let gap = (pivot - w).abs();
        if w <= pivot {
            value += gap;
        } else {
            value -= gap;
        }
    }
    Ok(value)
}

pub fn thm33_check(n: usize, m: usize, i: usize) -> Result<InstanceRecord> {
    let exact = big(&thm33_exact(n, m, i)?);
    let literal = thm33_literal(n, m, i)?;
    Ok(InstanceRecord::new(
        (n, Some(m), Some(i)),
        Relation::Equality,
        exact,
        literal,
    ))
}

/// Parameter ranges for [`verify_sweep`]. Bounds are inclusive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepParams {
    pub n: RangeInclusive<usize>,
    /// Defaults to the `n` range.
    pub m: Option<RangeInclusive<usize>>,
    /// Restricts the edge-joint vertex; all of `2..=n` otherwise.
    pub i: Option<usize>,
}

impl SweepParams {
    pub fn new(n: RangeInclusive<usize>) -> Self {
        SweepParams { n, m: None, i: None }
    }

    pub fn with_m(mut self, m: RangeInclusive<usize>) -> Self {
        self.m = Some(m);
        self
    }

    fn m_range(&self) -> RangeInclusive<usize> {
        self.m.clone().unwrap_or_else(|| self.n.clone())
    }
}

fn require(range: &RangeInclusive<usize>, name: &str, min: usize, theorem: TheoremId) -> Result<()> {
    if range.is_empty() {
        return Err(Error::InvalidRange(format!("{name} range {range:?} is empty")));
    }
    if *range.start() < min {
        return Err(Error::InvalidRange(format!(
            "{theorem} needs {name} >= {min}, got {}",
            range.start()
        )));
    }
    Ok(())
}

fn instances(theorem: TheoremId, p: &SweepParams) -> Result<Vec<(usize, usize, usize)>> {
    let ms = p.m_range();
    let list = match theorem {
        TheoremId::Thm21 | TheoremId::Thm31 => {
            require(&p.n, "n", 2, theorem)?;
            p.n.clone().map(|n| (n, 0, 0)).collect()
        }
        TheoremId::Thm32 | TheoremId::Cor31 => {
            require(&p.n, "n", 1, theorem)?;
            require(&ms, "m", 1, theorem)?;
            p.n.clone()
                .flat_map(|n| ms.clone().filter(move |&m| m <= n).map(move |m| (n, m, 0)))
                .collect()
        }
        TheoremId::Lemma31 => {
            require(&p.n, "n", 2, theorem)?;
            require(&ms, "m", 2, theorem)?;
            p.n.clone()
                .flat_map(|n| ms.clone().map(move |m| (n, m, 0)))
                .collect()
        }
        TheoremId::Thm33 => {
            require(&p.n, "n", 3, theorem)?;
            require(&ms, "m", 1, theorem)?;
            if let Some(i) = p.i {
                if i < 2 {
                    return Err(Error::InvalidRange(format!("thm33 needs i >= 2, got {i}")));
                }
            }
            let fixed = p.i;
            p.n.clone()
                .flat_map(|n| {
                    let is: Vec<usize> = match fixed {
                        Some(i) if i <= n => vec![i],
                        Some(_) => Vec::new(),
                        None => (2..=n).collect(),
                    };
                    ms.clone()
                        .flat_map(move |m| is.clone().into_iter().map(move |i| (n, m, i)))
                })
                .collect()
        }
    };
    Ok(list)
}

fn check(theorem: TheoremId, (n, m, i): (usize, usize, usize)) -> Result<InstanceRecord> {
    match theorem {
        TheoremId::Thm21 | TheoremId::Thm31 => recursion_check(theorem, n),
        TheoremId::Thm32 => thm32_check(n, m),
        TheoremId::Cor31 => cor31_check(n, m),
        TheoremId::Lemma31 => lemma31_check(n, m),
        TheoremId::Thm33 => thm33_check(n, m, i),
    }
}

/// Runs one theorem's checks over its parameter grid, in parallel.
pub fn verify_theorem(theorem: TheoremId, params: &SweepParams) -> Result<VerifyReport> {
    let grid = instances(theorem, params)?;
    let records = grid
        .into_par_iter()
        .map(|inst| check(theorem, inst))
        .collect::<Result<Vec<_>>>()?;
    Ok(VerifyReport::from_records(theorem, records))
}

/// Runs every requested theorem; reports come back in the order requested.
pub fn verify_sweep(theorems: &[TheoremId], params: &SweepParams) -> Result<SweepReport> {
    if theorems.is_empty() {
        return Err(Error::InvalidRange("no theorems requested".into()));
    }
    let reports = theorems
        .iter()
        .map(|&t| verify_theorem(t, params))
        .collect::<Result<Vec<_>>>()?;
    Ok(SweepReport::new(reports))
}

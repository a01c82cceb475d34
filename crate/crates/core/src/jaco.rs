//! Linear Jaco graph construction.
//!
//! Arc `(v_i, v_j)`, `i < j`, exists iff `j <= 2i - d⁻(v_i)`. The
//! out-neighbors of `v_i` are therefore the contiguous run `i+1 ..= r_i` with
//! `r_i = 2i - d⁻(v_i)`, and `d⁻(v_i)` only depends on the reaches of earlier
//! vertices. A single left-to-right sweep that counts live intervals builds
//! the whole prefix in O(n) time without touching individual arcs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{DegreeSequence, SimpleGraph};

/// Upper bound on edges materialized by [`underlying_graph`].
pub const MAX_MATERIALIZED_EDGES: u64 = 50_000_000;

/// In-degrees and out-reaches of `v_1 ..= v_{n_max}` in the infinite graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacoProfile {
    in_degree: Vec<u32>,
    out_reach: Vec<u64>,
}

impl JacoProfile {
    /// Number of vertices in the prefix.
    pub fn len(&self) -> usize {
        self.in_degree.len()
    }

    pub fn is_empty(&self) -> bool {
        self.in_degree.is_empty()
    }

    /// d⁻(v_i).
    pub fn in_degree(&self, i: usize) -> usize {
        self.in_degree[i - 1] as usize
    }

    /// r_i = 2i − d⁻(v_i), the last out-neighbor of `v_i`.
    pub fn out_reach(&self, i: usize) -> usize {
        self.out_reach[i - 1] as usize
    }

    /// d⁺(v_i) = i − d⁻(v_i) in a graph large enough to hold every arc.
    pub fn out_degree(&self, i: usize) -> usize {
        i - self.in_degree(i)
    }

    /// Degree of `v_i` in the underlying graph `J*_n`.
    pub fn finite_degree(&self, n: usize, i: usize) -> usize {
        debug_assert!(i <= n);
        self.in_degree(i) + self.out_degree(i).min(n - i)
    }

    /// Degree sequence of `J*_n`; requires `1 <= n <= self.len()`.
    pub fn finite_degrees(&self, n: usize) -> DegreeSequence {
        assert!(n >= 1 && n <= self.len(), "profile too short for order {n}");
        DegreeSequence::new((1..=n).map(|i| self.finite_degree(n, i)).collect())
    }

    /// Indices `i` (1-based, `i + 1 <= len`) where d⁻ does not step by 0 or 1.
    pub fn in_degree_step_violations(&self) -> Vec<usize> {
        self.in_degree
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[1] != w[0] && w[1] != w[0] + 1)
            .map(|(idx, _)| idx + 1)
            .collect()
    }
}

/// Builds the profile of `v_1 ..= v_{n_max}`.
pub fn build_profile(n_max: usize) -> Result<JacoProfile> {
    if n_max == 0 {
        return Err(Error::InvalidSize {
            family: "jaco",
            detail: "order must be at least 1".into(),
        });
    }
    let mut in_degree = Vec::with_capacity(n_max);
    let mut out_reach = Vec::with_capacity(n_max);
    // expiring[x]: intervals [h+1, r_h] with r_h + 1 == x.
    let mut expiring = vec![0u32; n_max + 2];
    let mut live: u32 = 0;
    for i in 1..=n_max {
        if i >= 2 {
            live += 1; // v_{i-1} always reaches v_i
        }
        live -= expiring[i];
        let reach = 2 * i as u64 - live as u64;
        in_degree.push(live);
        out_reach.push(reach);
        if let Some(slot) = expiring.get_mut(reach as usize + 1) {
            *slot += 1;
        }
    }
    Ok(JacoProfile {
        in_degree,
        out_reach,
    })
}

/// The order-`n` Jaco graph: its profile prefix and the degrees of `J*_n`.
#[derive(Debug, Clone)]
pub struct FiniteJaco {
    pub n: usize,
    pub degrees: DegreeSequence,
    pub profile: JacoProfile,
}

impl FiniteJaco {
    pub fn new(n: usize) -> Result<Self> {
        let profile = build_profile(n)?;
        let degrees = profile.finite_degrees(n);
        Ok(FiniteJaco {
            n,
            degrees,
            profile,
        })
    }
}

/// Degree sequence of the underlying graph `J*_n`.
pub fn underlying_degrees(n: usize) -> Result<DegreeSequence> {
    Ok(build_profile(n)?.finite_degrees(n))
}

/// The underlying graph `J*_n` with explicit adjacency lists.
pub fn underlying_graph(n: usize) -> Result<SimpleGraph> {
    let profile = build_profile(n)?;
    let edges = profile.finite_degrees(n).degree_sum() / 2;
    if edges > MAX_MATERIALIZED_EDGES {
        return Err(Error::TooLarge {
            edges,
            limit: MAX_MATERIALIZED_EDGES,
        });
    }
    let mut adjacency: Vec<Vec<usize>> = (1..=n)
        .map(|i| Vec::with_capacity(profile.finite_degree(n, i)))
        .collect();
    // Visiting tails in increasing order keeps every list sorted: each head
    // first receives its lower neighbors, then its own out-run is appended.
    for i in 1..=n {
        let last = profile.out_reach(i).min(n);
        for j in i + 1..=last {
            adjacency[i - 1].push(j);
            adjacency[j - 1].push(i);
        }
    }
    Ok(SimpleGraph::from_adjacency_unchecked(adjacency))
}

/// Smallest index attaining the maximum degree; 1 for an empty-edge graph.
pub fn first_max_degree_index(degrees: &DegreeSequence) -> usize {
    let max = degrees.max_degree();
    degrees.iter().position(|d| d == max).map_or(1, |p| p + 1)
}

/// Index `k` of the prime Jaconian vertex of `J*_n`: the lowest-indexed
/// vertex of maximum degree. Only defined for `n >= 2`.
pub fn prime_jaconian_index(n: usize) -> Result<usize> {
    if n < 2 {
        return Err(Error::InvalidSize {
            family: "prime Jaconian vertex",
            detail: format!("needs n >= 2, got {n}"),
        });
    }
    Ok(first_max_degree_index(&underlying_degrees(n)?))
}

/// Structural facts about `J*_n` that the recursions lean on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub n: usize,
    pub prime_index: usize,
    /// `k == n − d⁻(v_{n+1})`.
    pub index_matches_in_degree: bool,
    /// `d(v_i) == i` for every `i <= k`.
    pub identity_prefix: bool,
}

/// Checks the prime-index identities for every order in `2..=n_max`.
pub fn structure_checks(n_max: usize) -> Result<Vec<StructureCheck>> {
    let profile = build_profile(n_max + 1)?;
    Ok((2..=n_max)
        .map(|n| {
            let degrees = profile.finite_degrees(n);
            let k = first_max_degree_index(&degrees);
            StructureCheck {
                n,
                prime_index: k,
                index_matches_in_degree: k == n - profile.in_degree(n + 1),
                identity_prefix: (1..=k).all(|i| degrees.degree(i) == i),
            }
        })
        .collect())
}

//! Simple undirected graphs with 1-based vertex ids.

use std::fmt;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;

use crate::error::{Error, Result};

/// Degrees of a graph, indexed from vertex 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    pub fn new(degrees: Vec<usize>) -> Self {
        DegreeSequence(degrees)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree of vertex `v` (1-based).
    pub fn degree(&self, v: usize) -> usize {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn max_degree(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    pub fn degree_sum(&self) -> u64 {
        self.0.iter().map(|&d| d as u64).sum()
    }

    /// Handshake parity: the degree sum of any graph is even.
    pub fn has_even_sum(&self) -> bool {
        self.degree_sum().is_multiple_of(2)
    }

    /// Sequence of `self` followed by `other`, as for a disjoint union.
    pub fn concat(&self, other: &DegreeSequence) -> DegreeSequence {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        DegreeSequence(v)
    }
}

impl From<Vec<usize>> for DegreeSequence {
    fn from(v: Vec<usize>) -> Self {
        DegreeSequence(v)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (idx, d) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

/// Simple undirected graph on vertices `1..=n`.
///
/// Neighbor lists are sorted and symmetric; there are no loops or parallel
/// edges. Graphs are immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// `n` isolated vertices.
    pub fn empty(n: usize) -> Self {
        SimpleGraph {
            adjacency: vec![Vec::new(); n],
        }
    }

    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (a, b) in edges {
            for v in [a, b] {
                if v == 0 || v > n {
                    return Err(Error::InvalidVertex {
                        vertex: v,
                        order: n,
                    });
                }
            }
            if a == b {
                return Err(Error::SelfLoop(a, b));
            }
            adjacency[a - 1].push(b);
            adjacency[b - 1].push(a);
        }
        for (idx, list) in adjacency.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                let (a, b) = (idx + 1, w[0]);
                return Err(Error::DuplicateEdge(a.min(b), a.max(b)));
            }
        }
        Ok(SimpleGraph { adjacency })
    }

    /// Builds from already sorted, symmetric, loop-free adjacency lists.
    pub(crate) fn from_adjacency_unchecked(adjacency: Vec<Vec<usize>>) -> Self {
        SimpleGraph { adjacency }
    }

    pub fn path(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize {
                family: "path",
                detail: "needs at least one vertex".into(),
            });
        }
        Self::from_edges(n, (1..n).map(|i| (i, i + 1)))
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidSize {
                family: "cycle",
                detail: format!("needs at least 3 vertices, got {n}"),
            });
        }
        Self::from_edges(n, (1..n).map(|i| (i, i + 1)).chain([(1, n)]))
    }

    /// `S_{1,n}`: center vertex 1 joined to leaves `2..=n+1`.
    pub fn star(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidSize {
                family: "star",
                detail: "needs at least one leaf".into(),
            });
        }
        Self::from_edges(n + 1, (2..=n + 1).map(|leaf| (1, leaf)))
    }

    /// `K_{n,m}` with the `n`-side on ids `1..=n` and the `m`-side after it.
    pub fn complete_bipartite(n: usize, m: usize) -> Result<Self> {
        if m == 0 || n < m {
            return Err(Error::InvalidSize {
                family: "complete bipartite",
                detail: format!("needs n >= m >= 1, got n={n}, m={m}"),
            });
        }
        let edges = (1..=n).flat_map(|a| (n + 1..=n + m).map(move |b| (a, b)));
        Self::from_edges(n + m, edges)
    }

    pub fn order(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v - 1].len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v - 1]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        a >= 1
            && a <= self.order()
            && self.adjacency[a - 1].binary_search(&b).is_ok()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence(self.adjacency.iter().map(Vec::len).collect())
    }

    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().enumerate().flat_map(|(idx, list)| {
            let a = idx + 1;
            list.iter().copied().filter(move |&b| b > a).map(move |b| (a, b))
        })
    }

    /// `G ∪ H` with the vertices of `H` shifted to `n_G + 1 ..= n_G + n_H`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let offset = self.order();
        let mut adjacency = self.adjacency.clone();
        adjacency.extend(
            other
                .adjacency
                .iter()
                .map(|list| list.iter().map(|&b| b + offset).collect()),
        );
        SimpleGraph { adjacency }
    }

    /// The edge-joint `G ⇝_{vu} H`: the disjoint union plus the edge between
    /// `v` of `self` and `u` of `other`.
    pub fn edge_joint(&self, v: usize, other: &SimpleGraph, u: usize) -> Result<SimpleGraph> {
        if v == 0 || v > self.order() {
            return Err(Error::InvalidVertex {
                vertex: v,
                order: self.order(),
            });
        }
        if u == 0 || u > other.order() {
            return Err(Error::InvalidVertex {
                vertex: u,
                order: other.order(),
            });
        }
        let mut joined = self.disjoint_union(other);
        let u_shifted = u + self.order();
        // Neighbors of v are all <= n_G < u_shifted; neighbors of u_shifted
        // are all > n_G >= v. Both lists stay sorted.
        joined.adjacency[v - 1].push(u_shifted);
        joined.adjacency[u_shifted - 1].insert(0, v);
        Ok(joined)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for (a, b) in self.edges() {
            let _ = writeln!(out, "{a} {b}");
        }
        out
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph G {\n");
        for v in 1..=self.order() {
            let _ = writeln!(out, "  {v};");
        }
        for (a, b) in self.edges() {
            let _ = writeln!(out, "  {a} -- {b};");
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc {
            vertices: usize,
            edges: Vec<[usize; 2]>,
        }
        let doc = Doc {
            vertices: self.order(),
            edges: self.edges().map(|(a, b)| [a, b]).collect(),
        };
        serde_json::to_string(&doc).expect("graph json")
    }

    /// Parses the "i j" per line format. Blank lines and `#` comments are
    /// skipped, except `# vertices N` which fixes the order so isolated
    /// trailing vertices survive.
    pub fn parse_edge_list(text: &str) -> Result<SimpleGraph> {
        let mut declared = 0usize;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if let Some(comment) = line.strip_prefix('#') {
                let mut words = comment.split_whitespace();
                if words.next() == Some("vertices") {
                    declared = words
                        .next()
                        .and_then(|w| w.parse().ok())
                        .ok_or_else(|| Error::Parse(format!("line {}: bad vertex count", lineno + 1)))?;
                }
                continue;
            }
            if line.is_empty() {
                continue;
            }
            let mut parts = line.split_whitespace().map(str::parse::<usize>);
            match (parts.next(), parts.next(), parts.next()) {
                (Some(Ok(a)), Some(Ok(b)), None) => edges.push((a, b)),
                _ => return Err(Error::Parse(format!("line {}: expected \"i j\"", lineno + 1))),
            }
        }
        let max_id = edges.iter().map(|&(a, b)| a.max(b)).max().unwrap_or(0);
        SimpleGraph::from_edges(declared.max(max_id), edges)
    }
}

/// A named graph, as accepted on the command line: `jaco:n`, `path:n`,
/// `cycle:n`, `star:n`, `biclique:n:m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFamily {
    Jaco(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Biclique(usize, usize),
}

impl GraphFamily {
    pub fn build(&self) -> Result<SimpleGraph> {
        match *self {
            GraphFamily::Jaco(n) => crate::jaco::underlying_graph(n),
            GraphFamily::Path(n) => SimpleGraph::path(n),
            GraphFamily::Cycle(n) => SimpleGraph::cycle(n),
            GraphFamily::Star(n) => SimpleGraph::star(n),
            GraphFamily::Biclique(n, m) => SimpleGraph::complete_bipartite(n, m),
        }
    }

    /// Degree sequence without materializing edges where possible.
    pub fn degrees(&self) -> Result<DegreeSequence> {
        match *self {
            GraphFamily::Jaco(n) => crate::jaco::underlying_degrees(n),
            _ => Ok(self.build()?.degree_sequence()),
        }
    }
}

impl FromStr for GraphFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts: Vec<&str> = s.split(':').collect();
        let num = |p: &str| {
            p.parse::<usize>()
                .map_err(|_| Error::Parse(format!("bad size {p:?} in graph spec {s:?}")))
        };
        let family = match parts.as_slice() {
            ["jaco", n] => GraphFamily::Jaco(num(n)?),
            ["path", n] => GraphFamily::Path(num(n)?),
            ["cycle", n] => GraphFamily::Cycle(num(n)?),
            ["star", n] => GraphFamily::Star(num(n)?),
            ["biclique", n, m] => GraphFamily::Biclique(num(n)?, num(m)?),
            _ => return Err(Error::Parse(format!("unknown graph spec {s:?}"))),
        };
        Ok(family)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degs(g: &SimpleGraph) -> Vec<usize> {
        g.degree_sequence().into_vec()
    }

    #[test]
    fn named_families() {
        assert_eq!(degs(&SimpleGraph::path(1).unwrap()), vec![0]);
        assert_eq!(degs(&SimpleGraph::path(2).unwrap()), vec![1, 1]);
        assert_eq!(degs(&SimpleGraph::path(5).unwrap()), vec![1, 2, 2, 2, 1]);
        assert_eq!(degs(&SimpleGraph::path(3).unwrap()), vec![1, 2, 1]);
        assert_eq!(degs(&SimpleGraph::star(3).unwrap()), vec![3, 1, 1, 1]);
        assert_eq!(degs(&SimpleGraph::star(4).unwrap()), vec![4, 1, 1, 1, 1]);
        assert_eq!(degs(&SimpleGraph::cycle(4).unwrap()), vec![2, 2, 2, 2]);
        assert_eq!(
            degs(&SimpleGraph::complete_bipartite(3, 2).unwrap()),
            vec![2, 2, 2, 3, 3]
        );
    }

    #[test]
    fn out_of_range_sizes() {
        assert!(SimpleGraph::path(0).is_err());
        assert!(SimpleGraph::cycle(2).is_err());
        assert!(SimpleGraph::star(0).is_err());
        assert!(SimpleGraph::complete_bipartite(2, 3).is_err());
        assert!(SimpleGraph::complete_bipartite(2, 0).is_err());
    }

    #[test]
    fn rejects_malformed_edges() {
        assert_eq!(
            SimpleGraph::from_edges(3, [(1, 1)]),
            Err(Error::SelfLoop(1, 1))
        );
        assert_eq!(
            SimpleGraph::from_edges(3, [(1, 2), (2, 1)]),
            Err(Error::DuplicateEdge(1, 2))
        );
        assert!(matches!(
            SimpleGraph::from_edges(3, [(1, 4)]),
            Err(Error::InvalidVertex { vertex: 4, order: 3 })
        ));
    }

    #[test]
    fn union_relabels_second_graph() {
        let single = SimpleGraph::empty(1);
        let u = single.disjoint_union(&single);
        assert_eq!(u.order(), 2);
        assert_eq!(u.edge_count(), 0);

        let u = SimpleGraph::path(2)
            .unwrap()
            .disjoint_union(&SimpleGraph::path(3).unwrap());
        assert_eq!(degs(&u), vec![1, 1, 1, 2, 1]);
        assert!(u.has_edge(3, 4) && u.has_edge(4, 5) && !u.has_edge(2, 3));
    }

    #[test]
    fn edge_joint_examples() {
        let single = SimpleGraph::empty(1);
        assert_eq!(
            single.edge_joint(1, &single, 1).unwrap(),
            SimpleGraph::path(2).unwrap()
        );
        let p2 = SimpleGraph::path(2).unwrap();
        let joined = p2.edge_joint(1, &p2, 1).unwrap();
        assert_eq!(degs(&joined), vec![2, 1, 2, 1]);
        assert_eq!(joined.edge_count(), 3);
        // Same shape as path(4): 2-1-3-4.
        let mut relabeled: Vec<_> = joined.edges().collect();
        relabeled.sort();
        assert_eq!(relabeled, vec![(1, 2), (1, 3), (3, 4)]);

        let joined = p2.edge_joint(2, &p2, 1).unwrap();
        assert_eq!(joined, SimpleGraph::path(4).unwrap());

        assert!(p2.edge_joint(3, &p2, 1).is_err());
        assert!(p2.edge_joint(1, &p2, 0).is_err());
    }

    #[test]
    fn edge_list_round_trip_and_formats() {
        let g = SimpleGraph::cycle(4).unwrap();
        assert_eq!(g.to_edge_list(), "1 2\n1 4\n2 3\n3 4\n");
        assert_eq!(SimpleGraph::parse_edge_list(&g.to_edge_list()).unwrap(), g);

        let isolated = SimpleGraph::parse_edge_list("# vertices 3\n1 2\n").unwrap();
        assert_eq!(degs(&isolated), vec![1, 1, 0]);
        assert!(SimpleGraph::parse_edge_list("1 2 3\n").is_err());
        assert!(SimpleGraph::parse_edge_list("1 x\n").is_err());

        let dot = SimpleGraph::path(2).unwrap().to_dot();
        assert_eq!(dot, "graph G {\n  1;\n  2;\n  1 -- 2;\n}\n");
        assert_eq!(
            SimpleGraph::path(3).unwrap().to_json(),
            r#"{"vertices":3,"edges":[[1,2],[2,3]]}"#
        );
    }

    #[test]
    fn family_specs() {
        assert_eq!("jaco:9".parse::<GraphFamily>().unwrap(), GraphFamily::Jaco(9));
        assert_eq!(
            "biclique:4:2".parse::<GraphFamily>().unwrap(),
            GraphFamily::Biclique(4, 2)
        );
        assert!("path".parse::<GraphFamily>().is_err());
        assert!("wheel:5".parse::<GraphFamily>().is_err());
        assert!("star:-1".parse::<GraphFamily>().is_err());
    }
}

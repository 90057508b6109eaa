//! Undirected multigraphs with sorted neighbour lists, plus the plain-text edge-list format.
//!
//! Adjacency follows the usual multigraph convention: `A_ij` is the number of
//! edges between `i != j`, and `A_ii` is twice the number of self-loops at `i`,
//! so that `degree(i) = sum_j A_ij`.

use std::fmt::Write as _;

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Multigraph {
    /// Per vertex, `(neighbour, multiplicity)` sorted by neighbour, never containing the vertex itself.
    neighbors: Vec<Vec<(usize, u64)>>,
    /// Number of self-loops per vertex.
    loops: Vec<u64>,
}

impl Multigraph {
    pub fn empty(n: usize) -> Self {
        Multigraph {
            neighbors: vec![Vec::new(); n],
            loops: vec![0; n],
        }
    }

    /// Builds a graph from unit-multiplicity edges; repeated pairs accumulate.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::from_weighted_edges(n, edges.into_iter().map(|(u, v)| (u, v, 1)))
    }

    /// Builds a graph from `(u, v, multiplicity)` triples. `(u, u, m)` adds `m` self-loops.
    pub fn from_weighted_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize, u64)>,
    {
        let mut raw: Vec<Vec<(usize, u64)>> = vec![Vec::new(); n];
        let mut loops = vec![0u64; n];
        for (u, v, m) in edges {
            if u >= n || v >= n {
                return Err(Error::Input(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            if m == 0 {
                continue;
            }
            if u == v {
                loops[u] += m;
            } else {
                raw[u].push((v, m));
                raw[v].push((u, m));
            }
        }
        let neighbors = raw.into_iter().map(merge_sorted).collect();
        Ok(Multigraph { neighbors, loops })
    }

    pub fn n(&self) -> usize {
        self.neighbors.len()
    }

    /// `(neighbour, multiplicity)` pairs of `i`, excluding `i` itself, sorted by neighbour.
    pub fn neighbors(&self, i: usize) -> &[(usize, u64)] {
        &self.neighbors[i]
    }

    pub fn self_loops(&self, i: usize) -> u64 {
        self.loops[i]
    }

    /// The adjacency entry `A_ij` (diagonal entries are twice the loop count).
    pub fn adjacency(&self, i: usize, j: usize) -> u64 {
        if i == j {
            return 2 * self.loops[i];
        }
        match self.neighbors[i].binary_search_by_key(&j, |&(k, _)| k) {
            Ok(pos) => self.neighbors[i][pos].1,
            Err(_) => 0,
        }
    }

    pub fn degree(&self, i: usize) -> u64 {
        2 * self.loops[i] + self.neighbors[i].iter().map(|&(_, m)| m).sum::<u64>()
    }

    pub fn degrees(&self) -> Vec<u64> {
        (0..self.n()).map(|i| self.degree(i)).collect()
    }

    /// Total number of edges, counted with multiplicity (self-loops count once).
    pub fn edge_count(&self) -> u64 {
        self.degrees().iter().sum::<u64>() / 2
    }

    /// True when there are no self-loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        self.loops.iter().all(|&l| l == 0)
            && self.neighbors.iter().flatten().all(|&(_, m)| m == 1)
    }

    /// Each undirected edge once as `(u, v, multiplicity)` with `u <= v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize, u64)> + '_ {
        (0..self.n()).flat_map(move |u| {
            let loops = (self.loops[u] > 0).then_some((u, u, self.loops[u]));
            loops.into_iter().chain(
                self.neighbors[u]
                    .iter()
                    .filter(move |&&(v, _)| v > u)
                    .map(move |&(v, m)| (u, v, m)),
            )
        })
    }

    /// Connected components as vertex lists, each sorted.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n()];
        let mut out = Vec::new();
        for s in 0..self.n() {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut stack = vec![s];
            let mut comp = Vec::new();
            while let Some(u) = stack.pop() {
                comp.push(u);
                for &(v, _) in &self.neighbors[u] {
                    if !seen[v] {
                        seen[v] = true;
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Identifies vertex `v1` of `self` with vertex `v2` of `other`; the edge set is the union.
    ///
    /// Vertices of `self` keep their ids. Vertices of `other` other than `v2` are
    /// appended in order after `self.n()`.
    pub fn glue(&self, v1: usize, other: &Multigraph, v2: usize) -> Result<Multigraph> {
        if v1 >= self.n() || v2 >= other.n() {
            return Err(Error::Input(format!(
                "gluing vertex out of range: {v1} of {} / {v2} of {}",
                self.n(),
                other.n()
            )));
        }
        let base = self.n();
        let map = |w: usize| match w.cmp(&v2) {
            std::cmp::Ordering::Equal => v1,
            std::cmp::Ordering::Less => base + w,
            std::cmp::Ordering::Greater => base + w - 1,
        };
        let edges = self
            .edges()
            .chain(other.edges().map(|(u, v, m)| (map(u), map(v), m)))
            .collect::<Vec<_>>();
        Multigraph::from_weighted_edges(base + other.n() - 1, edges)
    }

    /// Renders the graph in edge-list format with an explicit `n` header.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v, m) in self.edges() {
            if m == 1 {
                writeln!(out, "{u} {v}").unwrap();
            } else {
                writeln!(out, "{u} {v} {m}").unwrap();
            }
        }
        out
    }

    /// Parses the edge-list format: `u v [multiplicity]` per line, 0-based ids,
    /// `#` comments, optional `n <count>` header (otherwise `n = max id + 1`).
    pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
        let mut declared_n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut max_id: Option<usize> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            if fields[0] == "n" {
                if declared_n.is_some() || !edges.is_empty() {
                    return Err(parse_err("`n` header must come first and only once".into()));
                }
                if fields.len() != 2 {
                    return Err(parse_err("expected `n <count>`".into()));
                }
                let n = fields[1]
                    .parse()
                    .map_err(|_| parse_err(format!("bad vertex count {:?}", fields[1])))?;
                declared_n = Some(n);
                continue;
            }
            if !(2..=3).contains(&fields.len()) {
                return Err(parse_err(format!("expected `u v [multiplicity]`, got {line:?}")));
            }
            let id = |s: &str| -> Result<usize> {
                s.parse()
                    .map_err(|_| parse_err(format!("bad vertex id {s:?}")))
            };
            let u = id(fields[0])?;
            let v = id(fields[1])?;
            let m: u64 = match fields.get(2) {
                Some(s) => s
                    .parse()
                    .map_err(|_| parse_err(format!("bad multiplicity {s:?}")))?,
                None => 1,
            };
            if let Some(n) = declared_n {
                if u >= n || v >= n {
                    return Err(parse_err(format!("vertex id out of range for n = {n}")));
                }
            }
            max_id = Some(max_id.map_or(u.max(v), |x: usize| x.max(u).max(v)));
            edges.push((u, v, m));
        }
        let n = declared_n.unwrap_or_else(|| max_id.map_or(0, |x| x + 1));
        Multigraph::from_weighted_edges(n, edges)
    }
}

fn merge_sorted(mut list: Vec<(usize, u64)>) -> Vec<(usize, u64)> {
    list.sort_unstable_by_key(|&(v, _)| v);
    let mut out: Vec<(usize, u64)> = Vec::with_capacity(list.len());
    for (v, m) in list {
        match out.last_mut() {
            Some(last) if last.0 == v => last.1 += m,
            _ => out.push((v, m)),
        }
    }
    out
}

/// Complete graph on `n` vertices.
pub fn complete(n: usize) -> Multigraph {
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Multigraph::from_edges(n, edges).expect("ids in range")
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (1..n).map(|v| (v - 1, v))).expect("ids in range")
}

/// Cycle on `n >= 3` vertices.
pub fn cycle(n: usize) -> Multigraph {
    Multigraph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).expect("ids in range")
}

/// Star `K_{1,leaves}` with centre 0.
pub fn star(leaves: usize) -> Multigraph {
    Multigraph::from_edges(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("ids in range")
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn self_loop_counts_twice() {
        let g = Multigraph::from_edges(2, [(0, 0), (0, 1)]).unwrap();
        assert_eq!(g.adjacency(0, 0), 2);
        assert_eq!(g.degree(0), 3);
        assert_eq!(g.degree(1), 1);
        assert_eq!(g.edge_count(), 2);
        assert!(!g.is_simple());
    }

    #[test]
    fn parallel_edges_merge() {
        let g = Multigraph::from_edges(2, [(0, 1), (1, 0)]).unwrap();
        assert_eq!(g.adjacency(0, 1), 2);
        assert_eq!(g.neighbors(0), &[(1, 2)]);
    }

    #[test]
    fn out_of_range_rejected() {
        assert!(Multigraph::from_edges(2, [(0, 2)]).is_err());
    }

    #[test]
    fn parse_header_comments_and_multiplicity() {
        let text = "# a comment\nn 4\n0 1\n1 2 3   # triple edge\n2 2\n";
        let g = Multigraph::parse_edge_list(text).unwrap();
        assert_eq!(g.n(), 4);
        assert_eq!(g.adjacency(1, 2), 3);
        assert_eq!(g.adjacency(2, 2), 2);
        assert_eq!(g.degree(3), 0);
    }

    #[test]
    fn parse_without_header_uses_max_id() {
        let g = Multigraph::parse_edge_list("0 5\n").unwrap();
        assert_eq!(g.n(), 6);
        assert_eq!(Multigraph::parse_edge_list("").unwrap().n(), 0);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let err = Multigraph::parse_edge_list("0 1\n\n1 x\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "bad vertex id \"x\"".into()
            }
        );
        let err = Multigraph::parse_edge_list("n 2\n0 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = Multigraph::parse_edge_list("0 1 2 3\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
    }

    #[test]
    fn glue_merges_vertices() {
        let tri = complete(3);
        let g = tri.glue(1, &tri, 2).unwrap();
        assert_eq!(g.n(), 5);
        assert_eq!(g.degree(1), 4);
        assert_eq!(g.edge_count(), 6);
        assert!(tri.glue(3, &tri, 0).is_err());
    }

    #[test]
    fn components_of_disjoint_graph() {
        let g = Multigraph::from_edges(5, [(0, 1), (3, 4)]).unwrap();
        assert_eq!(g.components(), vec![vec![0, 1], vec![2], vec![3, 4]]);
    }

    fn arb_multigraph() -> impl Strategy<Value = Multigraph> {
        (1usize..12).prop_flat_map(|n| {
            prop::collection::vec((0..n, 0..n, 1u64..4), 0..30)
                .prop_map(move |edges| Multigraph::from_weighted_edges(n, edges).unwrap())
        })
    }

    proptest! {
        #[test]
        fn edge_list_round_trip(g in arb_multigraph()) {
            let back = Multigraph::parse_edge_list(&g.to_edge_list()).unwrap();
            prop_assert_eq!(back, g);
        }

        #[test]
        fn adjacency_is_symmetric_with_even_diagonal(g in arb_multigraph()) {
            for i in 0..g.n() {
                prop_assert_eq!(g.adjacency(i, i) % 2, 0);
                let row: u64 = (0..g.n()).map(|j| g.adjacency(i, j)).sum();
                prop_assert_eq!(row, g.degree(i));
                for j in 0..g.n() {
                    prop_assert_eq!(g.adjacency(i, j), g.adjacency(j, i));
                }
            }
        }
    }
}

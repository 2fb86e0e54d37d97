//! Immutable simple undirected graphs over the vertices `0..n`.

use std::fmt;

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// A finite simple graph with one adjacency bitset per vertex.
///
/// Rows are symmetric and irreflexive, and no bit at or beyond `n` is ever
/// set. Graphs are never mutated after construction.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from an edge list; duplicate edges are merged.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut builder = GraphBuilder::new(n)?;
        for (u, v) in edges {
            builder.add_edge(u, v)?;
        }
        Ok(builder.build())
    }

    /// Builds a graph from adjacency rows, checking symmetry and loops.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        let full = VertexSet::full(n);
        for (v, row) in rows.iter().enumerate() {
            if !row.is_subset(full) {
                return Err(Error::InvalidParameter(format!(
                    "row {v} has bits beyond vertex {}",
                    n.saturating_sub(1)
                )));
            }
            if row.contains(v) {
                return Err(Error::InvalidParameter(format!("loop at vertex {v}")));
            }
            if let Some(u) = row.iter().find(|&u| !rows[u].contains(v)) {
                return Err(Error::InvalidParameter(format!(
                    "asymmetric adjacency between {v} and {u}"
                )));
            }
        }
        Ok(Graph { n, adj: rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    /// Open neighbourhood `N(v)`. Panics if `v` is out of range; see
    /// [`Graph::neighborhood`] for the checked variant.
    #[inline]
    pub fn adj(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> Result<VertexSet> {
        self.check_vertex(v)?;
        Ok(self.adj[v].with(v))
    }

    /// `N(S)`: vertices outside `S` with a neighbour in `S`.
    pub fn set_neighborhood(&self, s: VertexSet) -> Result<VertexSet> {
        self.check_set(s)?;
        Ok(self.neighbors_of_set(s))
    }

    /// Unchecked form of [`Graph::set_neighborhood`].
    #[inline]
    pub fn neighbors_of_set(&self, s: VertexSet) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for v in s {
            out = out.union(self.adj[v]);
        }
        out.difference(s)
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| self.adj[v].intersection(s).len())
            .sum::<usize>()
            / 2
    }

    /// `e(A, B)` for disjoint `a`, `b`.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> usize {
        a.iter().map(|v| self.adj[v].intersection(b).len()).sum()
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    pub fn is_complete(&self) -> bool {
        (0..self.n).all(|v| self.adj[v].len() + 1 == self.n)
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.reachable(0, self.vertices()) == self.vertices()
    }

    /// Vertices of `within` reachable from `start` inside `G[within]`.
    pub fn reachable(&self, start: usize, within: VertexSet) -> VertexSet {
        if !within.contains(start) {
            return VertexSet::EMPTY;
        }
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.adj[v]);
            }
            frontier = next.intersection(within).difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(v) = rest.min() {
            let comp = self.reachable(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    /// `ω(G[within])` without materialising the components.
    pub fn count_components_within(&self, within: VertexSet) -> usize {
        let mut rest = within.intersection(self.vertices());
        let mut count = 0;
        while let Some(v) = rest.min() {
            rest = rest.difference(self.reachable(v, rest));
            count += 1;
        }
        count
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.vertices())
    }

    /// `G[S]`, with the map from new labels to old labels.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        let map = s.to_vec();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in map.iter().enumerate() {
            index[v] = i;
        }
        let adj = map
            .iter()
            .map(|&v| {
                self.adj[v]
                    .intersection(s)
                    .iter()
                    .map(|u| index[u])
                    .collect()
            })
            .collect();
        Ok((Graph { n: map.len(), adj }, map))
    }

    /// `G - S`.
    pub fn remove_vertices(&self, s: VertexSet) -> Result<(Graph, Vec<usize>)> {
        self.check_set(s)?;
        self.induced_subgraph(self.vertices().difference(s))
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Graph> {
        if perm.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "permutation has length {}, expected {}",
                perm.len(),
                self.n
            )));
        }
        let image: VertexSet = perm.iter().collect();
        if perm.iter().any(|&p| p >= self.n) || image.len() != self.n {
            return Err(Error::InvalidParameter("not a permutation".into()));
        }
        Graph::from_edges(self.n, self.edges().map(|(u, v)| (perm[u], perm[v])))
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        (0..self.n).map(|v| self.degree(v)).max()
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices();
        let adj = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Disjoint union, with `other` relabelled to follow `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::from_edges(
            self.n + other.n,
            self.edges()
                .chain(other.edges().map(|(u, v)| (u + shift, v + shift))),
        )
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        Ok(())
    }

    fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.difference(self.vertices()).min() {
            Some(v) => Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            }),
            None => Ok(()),
        }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.n)?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Incremental construction helper; the only mutable view of a graph.
#[derive(Debug, Clone)]
pub struct GraphBuilder {
    n: usize,
    adj: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooLarge {
                n,
                max: MAX_VERTICES,
            });
        }
        Ok(GraphBuilder {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self> {
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::VertexOutOfRange {
                    vertex: w,
                    n: self.n,
                });
            }
        }
        if u == v {
            return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(self)
    }

    pub fn build(self) -> Graph {
        Graph {
            n: self.n,
            adj: self.adj,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{complete, cycle_graph, petersen};

    fn set(vs: &[usize]) -> VertexSet {
        vs.iter().collect()
    }

    #[test]
    fn c5_neighborhoods() {
        let c5 = cycle_graph(5).unwrap();
        assert_eq!(c5.neighborhood(0).unwrap(), set(&[1, 4]));
        assert_eq!(c5.closed_neighborhood(0).unwrap(), set(&[0, 1, 4]));
        assert_eq!(c5.set_neighborhood(set(&[0])).unwrap(), set(&[1, 4]));
        assert_eq!(c5.set_neighborhood(set(&[0, 1])).unwrap(), set(&[2, 4]));
        assert!(matches!(
            c5.neighborhood(5),
            Err(Error::VertexOutOfRange { vertex: 5, n: 5 })
        ));
    }

    #[test]
    fn induced_subgraphs() {
        let c5 = cycle_graph(5).unwrap();
        let (p3, map) = c5.induced_subgraph(set(&[0, 1, 2])).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);

        let k4 = complete(4).unwrap();
        assert_eq!(k4.induced_subgraph(k4.vertices()).unwrap().0, k4);

        let p = petersen();
        let dominated = p
            .closed_neighborhood(0)
            .unwrap()
            .union(p.closed_neighborhood(1).unwrap());
        let (rest, map) = p
            .induced_subgraph(p.vertices().difference(dominated))
            .unwrap();
        assert_eq!(map, vec![3, 7, 8, 9]);
        assert_eq!(rest.size(), 2);
        assert!(rest.degrees().iter().all(|&d| d == 1));

        let (empty, map) = p.induced_subgraph(VertexSet::EMPTY).unwrap();
        assert_eq!(empty.order(), 0);
        assert!(map.is_empty());
    }

    #[test]
    fn components_partition() {
        let k3 = complete(3).unwrap();
        let two = k3.disjoint_union(&k3).unwrap();
        assert_eq!(two.components(), vec![set(&[0, 1, 2]), set(&[3, 4, 5])]);
        assert_eq!(petersen().components().len(), 1);
        assert_eq!(Graph::empty(5).unwrap().components().len(), 5);
        assert_eq!(Graph::empty(0).unwrap().components().len(), 0);
    }

    #[test]
    fn rejects_bad_rows() {
        let asym = vec![set(&[1]), VertexSet::EMPTY];
        assert!(Graph::from_rows(asym).is_err());
        assert!(Graph::from_rows(vec![set(&[0])]).is_err());
        assert!(Graph::from_rows(vec![set(&[3])]).is_err());
        assert!(Graph::from_edges(2, [(0, 0)]).is_err());
        assert!(Graph::empty(65).is_err());
        assert!(Graph::empty(64).is_ok());
    }

    #[test]
    fn complement_and_permute() {
        let c5 = cycle_graph(5).unwrap();
        // C5 is self-complementary via 0,2,4,1,3.
        let comp = c5.complement();
        assert_eq!(comp.size(), 5);
        let relabeled = comp.permute(&[0, 3, 1, 4, 2]).unwrap();
        assert_eq!(relabeled, c5);
    }
}

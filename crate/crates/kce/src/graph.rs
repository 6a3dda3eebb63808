//! Simple undirected graphs with per-vertex bitset adjacency.
//!
//! Graphs are immutable after construction; operations that change the vertex
//! set return a new graph together with an id-map, so provenance can be
//! tracked through reductions.

use crate::bits::Bits;
use crate::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Bits>,
    m: usize,
}

impl Graph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: vec![Bits::new(n); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; self-loops
    /// and out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, Error> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge_unchecked(u, v);
            }
        }
        g
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::empty(n);
        for u in 1..n {
            g.add_edge_unchecked(u - 1, u);
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        let mut g = Graph::path(n);
        if n >= 3 {
            g.add_edge_unchecked(n - 1, 0);
        }
        g
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), Error> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::SelfLoop { vertex: u });
        }
        self.add_edge_unchecked(u, v);
        Ok(())
    }

    fn add_edge_unchecked(&mut self, u: usize, v: usize) {
        if !self.adj[u].test(v) {
            self.adj[u].set(v);
            self.adj[v].set(u);
            self.m += 1;
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<(), Error> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].test(v)
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].count()
    }

    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[u].iter_ones()
    }

    /// Edge list with `u < v`, sorted ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for v in self.adj[u].iter_ones() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> Vec<usize> {
        self.adj[u].and(&self.adj[v]).iter_ones().collect()
    }

    pub(crate) fn row(&self, u: usize) -> &Bits {
        &self.adj[u]
    }

    pub(crate) fn full_mask(&self) -> Bits {
        Bits::from_indices(self.n, 0..self.n)
    }

    /// Induced subgraph on the distinct vertices of `s`. New ids are assigned
    /// in ascending order of old id; the returned map converts both ways.
    pub fn induced_subgraph(&self, s: &[usize]) -> Result<(Graph, SubgraphMap), Error> {
        let map = SubgraphMap::new(self.n, s)?;
        let mut g = Graph::empty(map.len());
        for (new_u, &old_u) in map.old_of_new.iter().enumerate() {
            for old_v in self.adj[old_u].iter_ones() {
                if let Some(new_v) = map.to_new(old_v) {
                    if new_v > new_u {
                        g.add_edge_unchecked(new_u, new_v);
                    }
                }
            }
        }
        Ok((g, map))
    }

    /// Merges `drop` into `keep`: the new vertex inherits the union of both
    /// neighbourhoods. Requires the two vertices to be distinct and
    /// non-adjacent, so the result stays simple. Ids above `drop` shift down
    /// by one; the returned map sends every old id (including `drop`) to its
    /// new id.
    pub fn identify_vertices(&self, keep: usize, drop: usize) -> Result<(Graph, Vec<usize>), Error> {
        self.check_vertex(keep)?;
        self.check_vertex(drop)?;
        if keep == drop {
            return Err(Error::IdentifySelf { vertex: keep });
        }
        if self.has_edge(keep, drop) {
            return Err(Error::IdentifyAdjacent { keep, drop });
        }
        let relabel = |v: usize| if v > drop { v - 1 } else { v };
        let mut map = Vec::with_capacity(self.n);
        for v in 0..self.n {
            map.push(if v == drop { relabel(keep) } else { relabel(v) });
        }
        let mut g = Graph::empty(self.n - 1);
        for (u, v) in self.edges() {
            let (nu, nv) = (map[u], map[v]);
            if nu != nv {
                g.add_edge_unchecked(nu, nv);
            }
        }
        Ok((g, map))
    }

    /// Does `s` separate `a` from `b`? True when no path joins a vertex of
    /// `a` to a vertex of `b` in the graph with `s` removed. A vertex lying
    /// in both `a` and `b` (outside `s`) is a trivial connecting path.
    pub fn is_separator(&self, s: &[usize], a: &[usize], b: &[usize]) -> bool {
        let smask = Bits::from_indices(self.n, s.iter().copied());
        let bmask = Bits::from_indices(self.n, b.iter().copied().filter(|&v| !smask.test(v)));
        let mut reached = Bits::new(self.n);
        let mut queue: Vec<usize> = Vec::new();
        for &v in a {
            if !smask.test(v) && !reached.test(v) {
                reached.set(v);
                queue.push(v);
            }
        }
        while let Some(u) = queue.pop() {
            if bmask.test(u) {
                return false;
            }
            for w in self.adj[u].iter_ones() {
                if !smask.test(w) && !reached.test(w) {
                    reached.set(w);
                    queue.push(w);
                }
            }
        }
        true
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> (Graph, usize) {
        let offset = self.n;
        let mut g = Graph::empty(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge_unchecked(u, v);
        }
        for (u, v) in other.edges() {
            g.add_edge_unchecked(u + offset, v + offset);
        }
        (g, offset)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={}, edges={:?})", self.n, self.m, self.edges())
    }
}

/// Two-way id-map produced by [`Graph::induced_subgraph`].
#[derive(Clone, Debug)]
pub struct SubgraphMap {
    old_of_new: Vec<usize>,
    new_of_old: Vec<Option<usize>>,
}

impl SubgraphMap {
    pub(crate) fn new(n: usize, s: &[usize]) -> Result<Self, Error> {
        let mut seen = Bits::new(n);
        for &v in s {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if seen.test(v) {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            seen.set(v);
        }
        let old_of_new: Vec<usize> = seen.iter_ones().collect();
        let mut new_of_old = vec![None; n];
        for (new, &old) in old_of_new.iter().enumerate() {
            new_of_old[old] = Some(new);
        }
        Ok(SubgraphMap { old_of_new, new_of_old })
    }

    pub fn len(&self) -> usize {
        self.old_of_new.len()
    }

    pub fn is_empty(&self) -> bool {
        self.old_of_new.is_empty()
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.new_of_old.get(old).copied().flatten()
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.old_of_new[new]
    }

    pub fn old_ids(&self) -> &[usize] {
        &self.old_of_new
    }
}

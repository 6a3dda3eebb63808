//! Vertex orderings, proper colourings, and the ordered K-minus witness.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::Bits;
use crate::graph::{Graph, SubgraphMap};
use crate::Error;

/// A permutation of `0..n` together with its inverse, so both "which vertex
/// sits at position i" and "where does vertex v sit" are O(1).
#[derive(Clone, PartialEq, Eq)]
pub struct VertexOrdering {
    seq: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    pub fn from_sequence(seq: Vec<usize>) -> Result<Self, Error> {
        let n = seq.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in seq.iter().enumerate() {
            if v >= n || pos[v] != usize::MAX {
                return Err(Error::NotAPermutation { n });
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { seq, pos })
    }

    pub fn identity(n: usize) -> Self {
        VertexOrdering {
            seq: (0..n).collect(),
            pos: (0..n).collect(),
        }
    }

    /// Uniformly random ordering drawn from `rng`.
    pub fn random<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Self {
        let mut seq: Vec<usize> = (0..n).collect();
        seq.shuffle(rng);
        Self::from_sequence(seq).expect("shuffled identity is a permutation")
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    #[inline]
    pub fn vertex_at(&self, i: usize) -> usize {
        self.seq[i]
    }

    #[inline]
    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn sequence(&self) -> &[usize] {
        &self.seq
    }

    pub fn comes_before(&self, a: usize, b: usize) -> bool {
        self.pos[a] < self.pos[b]
    }

    pub fn reversed(&self) -> VertexOrdering {
        let mut seq = self.seq.clone();
        seq.reverse();
        Self::from_sequence(seq).expect("reversal preserves permutations")
    }

    /// Subsequence of the ordering induced by the distinct vertices of `s`,
    /// reported in original ids.
    pub fn restricted_sequence(&self, s: &[usize]) -> Result<Vec<usize>, Error> {
        let n = self.len();
        let mut mask = Bits::new(n);
        for &v in s {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if mask.test(v) {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            mask.set(v);
        }
        Ok(self.seq.iter().copied().filter(|&v| mask.test(v)).collect())
    }

    /// Restriction to `s` as a dense ordering over `0..s.len()`, relabelled
    /// the same way as [`Graph::induced_subgraph`] (ascending old id).
    pub fn restrict(&self, s: &[usize]) -> Result<(VertexOrdering, SubgraphMap), Error> {
        let map = SubgraphMap::new(self.len(), s)?;
        let seq: Vec<usize> = self
            .seq
            .iter()
            .filter_map(|&v| map.to_new(v))
            .collect();
        Ok((Self::from_sequence(seq)?, map))
    }
}

impl std::fmt::Debug for VertexOrdering {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "VertexOrdering({:?})", self.seq)
    }
}

/// Assignment of a colour class to every vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    class_of: Vec<usize>,
}

impl Coloring {
    pub fn from_classes(class_of: Vec<usize>) -> Self {
        Coloring { class_of }
    }

    pub fn len(&self) -> usize {
        self.class_of.len()
    }

    pub fn is_empty(&self) -> bool {
        self.class_of.is_empty()
    }

    pub fn class(&self, v: usize) -> usize {
        self.class_of[v]
    }

    pub fn class_indices(&self) -> &[usize] {
        &self.class_of
    }

    /// Number of classes, counted as one past the largest index in use.
    pub fn num_classes(&self) -> usize {
        self.class_of.iter().copied().max().map_or(0, |c| c + 1)
    }

    /// Vertices grouped by class, ascending ids inside each class.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_classes()];
        for (v, &c) in self.class_of.iter().enumerate() {
            out[c].push(v);
        }
        out
    }

    /// Proper means: covers every vertex of `g` and no edge is monochromatic.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.class_of.len() == g.n()
            && g.edges()
                .iter()
                .all(|&(u, v)| self.class_of[u] != self.class_of[v])
    }
}

/// Certificate that an ordering is not k-clique-extendible: k+1 vertices,
/// listed in increasing position, inducing a complete graph minus exactly
/// the edge between the first and last listed vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KMinusWitness {
    pub k: usize,
    pub vertices: Vec<usize>,
}

impl KMinusWitness {
    /// Checks every invariant against a concrete graph and ordering.
    pub fn validate(&self, g: &Graph, phi: &VertexOrdering) -> bool {
        let t = self.vertices.len();
        if t != self.k + 1 || t < 3 || phi.len() != g.n() {
            return false;
        }
        if self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        for w in self.vertices.windows(2) {
            if phi.position(w[0]) >= phi.position(w[1]) {
                return false;
            }
        }
        for i in 0..t {
            for j in i + 1..t {
                let adjacent = g.has_edge(self.vertices[i], self.vertices[j]);
                let endpoints = i == 0 && j == t - 1;
                if adjacent == endpoints {
                    return false;
                }
            }
        }
        true
    }
}

//! Obstruction gadgets and composition rules.
//!
//! The forbidden gadget F_k pairs a clique K on 2k-1 vertices with one
//! independent vertex u_{i,j} for every pair {v_i, v_j} of clique vertices,
//! adjacent to all of K except v_i and v_j. No ordering of F_k is k-C-E: the
//! clique's first and last vertices under any ordering name a pair vertex
//! that closes an ordered K-minus on one side of the clique median.
//!
//! Dropping u_{1,2} yields the gamma gadget, which does admit k-C-E
//! orderings, but only ones whose clique endpoints are exactly v_1 and v_2.
//! That rigidity is what [`attach_gamma_gadget`] exploits: glueing the gadget
//! onto a triangle (x, y, z) of a host graph forces x and z to the outside
//! of the triangle in any k-C-E ordering of the union.
//!
//! [`compose_separated`] interleaves k-C-E orderings of two overlapping
//! subgraphs into one of the union, checking the separator-side conditions
//! that make the interleaving safe.

use std::collections::BTreeMap;

use crate::graph::Graph;
use crate::ordering::{Coloring, KMinusWitness, VertexOrdering};
use crate::Error;

/// Vertex names for a gadget: `clique[i]` is the id of v_{i+1}, and the pair
/// map sends 1-based `(i, j)` with i < j to the id of u_{i,j}. After
/// [`attach_gamma_gadget`] the ids live in the combined graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLabels {
    clique: Vec<usize>,
    pairs: BTreeMap<(usize, usize), usize>,
}

impl GadgetLabels {
    pub fn k(&self) -> usize {
        (self.clique.len() + 1) / 2
    }

    pub fn clique_vertices(&self) -> &[usize] {
        &self.clique
    }

    /// Id of v_i (1-based).
    pub fn clique_vertex(&self, i: usize) -> Option<usize> {
        self.clique.get(i.checked_sub(1)?).copied()
    }

    /// Id of u_{i,j} (1-based, unordered).
    pub fn pair_vertex(&self, i: usize, j: usize) -> Option<usize> {
        self.pairs.get(&(i.min(j), i.max(j))).copied()
    }

    pub fn pairs(&self) -> &BTreeMap<(usize, usize), usize> {
        &self.pairs
    }

    /// Every gadget vertex id, ascending.
    pub fn all_vertices(&self) -> Vec<usize> {
        let mut all: Vec<usize> = self.clique.iter().copied().collect();
        all.extend(self.pairs.values().copied());
        all.sort_unstable();
        all
    }

    /// Human-readable name ("v3", "u1,5") if the id belongs to the gadget.
    pub fn name(&self, v: usize) -> Option<String> {
        if let Some(i) = self.clique.iter().position(|&c| c == v) {
            return Some(format!("v{}", i + 1));
        }
        self.pairs
            .iter()
            .find(|&(_, &id)| id == v)
            .map(|(&(i, j), _)| format!("u{i},{j}"))
    }
}

fn build_gadget(k: usize, skip_first_pair: bool) -> (Graph, GadgetLabels) {
    let kn = 2 * k - 1;
    let clique: Vec<usize> = (0..kn).collect();
    let mut pairs = BTreeMap::new();
    let mut next = kn;
    for i in 1..=kn {
        for j in i + 1..=kn {
            if skip_first_pair && (i, j) == (1, 2) {
                continue;
            }
            pairs.insert((i, j), next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for a in 0..kn {
        for b in a + 1..kn {
            edges.push((a, b));
        }
    }
    for (&(i, j), &u) in &pairs {
        for v in 1..=kn {
            if v != i && v != j {
                edges.push((clique[v - 1], u));
            }
        }
    }
    let g = Graph::from_edges(next, &edges).expect("gadget edges are well formed");
    (g, GadgetLabels { clique, pairs })
}

/// The forbidden gadget F_k. Requires k >= 2.
pub fn forbidden_gadget(k: usize) -> Result<(Graph, GadgetLabels), Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    Ok(build_gadget(k, false))
}

/// The gamma gadget: F_k without u_{1,2}. Requires k >= 3.
pub fn gamma_gadget(k: usize) -> Result<(Graph, GadgetLabels), Error> {
    if k < 3 {
        return Err(Error::KTooSmall { min: 3, got: k });
    }
    Ok(build_gadget(k, true))
}

/// Shared witness extraction: sort the clique by position, look up the pair
/// vertex u* named by its first and last elements, and take whichever side of
/// the clique median u* falls on. Returns None only when that pair vertex is
/// absent (the gamma gadget with endpoints {v_1, v_2}).
fn clique_endpoint_witness(
    labels: &GadgetLabels,
    sigma: &VertexOrdering,
) -> Option<KMinusWitness> {
    let k = labels.k();
    let mut ks = labels.clique.clone();
    ks.sort_unstable_by_key(|&v| sigma.position(v));
    let rank = |v: usize| labels.clique.iter().position(|&c| c == v).unwrap() + 1;
    let (i, j) = (rank(ks[0]), rank(ks[ks.len() - 1]));
    let ustar = labels.pair_vertex(i, j)?;
    let median = ks[k - 1];
    let vertices = if sigma.position(ustar) > sigma.position(median) {
        let mut w = ks[..k].to_vec();
        w.push(ustar);
        w
    } else {
        let mut w = vec![ustar];
        w.extend_from_slice(&ks[k - 1..]);
        w
    };
    Some(KMinusWitness { k, vertices })
}

/// An ordered K-minus of F_k under `sigma`, for any `sigma`.
pub fn forbidden_witness(
    labels: &GadgetLabels,
    sigma: &VertexOrdering,
) -> Result<KMinusWitness, Error> {
    clique_endpoint_witness(labels, sigma)
        .ok_or_else(|| Error::MalformedGadget("missing pair vertex u1,2".into()))
}

/// An ordered K-minus of the gamma gadget under `sigma`, unless the clique's
/// outermost vertices under `sigma` are exactly v_1 and v_2. Every k-C-E
/// ordering of the gadget therefore has clique endpoints {v_1, v_2}.
pub fn gamma_endpoint_witness(
    labels: &GadgetLabels,
    sigma: &VertexOrdering,
) -> Option<KMinusWitness> {
    clique_endpoint_witness(labels, sigma)
}

/// The canonical k-C-E sequence of the gamma gadget, in the ids recorded by
/// `labels`: (v_1, v_3, .., v_k), all u_{1,*}, v_{k+1}, every other pair
/// vertex, (v_{k+2}, .., v_{2k-1}), v_2. Pair blocks are ascending by index
/// pair.
pub fn gamma_canonical_sequence(labels: &GadgetLabels) -> Result<Vec<usize>, Error> {
    if labels.pair_vertex(1, 2).is_some() {
        return Err(Error::MalformedGadget(
            "pair vertex u1,2 present; not a gamma gadget".into(),
        ));
    }
    let k = labels.k();
    let kn = 2 * k - 1;
    if labels.clique.len() != kn || k < 3 {
        return Err(Error::MalformedGadget("clique block has wrong size".into()));
    }
    let v = |i: usize| {
        labels
            .clique_vertex(i)
            .ok_or_else(|| Error::MalformedGadget(format!("missing clique vertex v{i}")))
    };
    let mut seq = Vec::with_capacity(kn + labels.pairs.len());
    seq.push(v(1)?);
    for i in 3..=k {
        seq.push(v(i)?);
    }
    for (&(i, _), &u) in &labels.pairs {
        if i == 1 {
            seq.push(u);
        }
    }
    seq.push(v(k + 1)?);
    for (&(i, _), &u) in &labels.pairs {
        if i != 1 {
            seq.push(u);
        }
    }
    for i in k + 2..=kn {
        seq.push(v(i)?);
    }
    seq.push(v(2)?);
    Ok(seq)
}

/// A gamma gadget glued onto a triangle of a host graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetAttachment {
    /// Host graph plus the gadget, sharing the triangle.
    pub graph: Graph,
    /// Gadget names resolved to combined-graph ids.
    pub labels: GadgetLabels,
    /// The gadget-private ids, appended after the host's.
    pub new_vertices: Vec<usize>,
    /// The identified triangle (v_1, v_3, v_2).
    pub anchors: (usize, usize, usize),
}

/// Glues a gamma gadget onto the triangle (x, y, z), identifying v_1 with x,
/// v_3 with y, and v_2 with z. In any k-C-E ordering of the result, y lies
/// between x and z. Requires k >= 4: with the shared triangle as separator,
/// the canonical gadget ordering satisfies the side condition of
/// [`compose_separated`] only from k = 4 up, so unions built at k = 3 could
/// not be re-ordered compositionally.
pub fn attach_gamma_gadget(
    g: &Graph,
    k: usize,
    x: usize,
    y: usize,
    z: usize,
) -> Result<GadgetAttachment, Error> {
    if k < 4 {
        return Err(Error::KTooSmall { min: 4, got: k });
    }
    for &v in &[x, y, z] {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
    }
    if x == y || y == z || x == z {
        return Err(Error::DuplicateVertex {
            vertex: if x == y { x } else { z },
        });
    }
    if !(g.has_edge(x, y) && g.has_edge(y, z) && g.has_edge(x, z)) {
        return Err(Error::NotATriangle { x, y, z });
    }
    let (gg, gl) = gamma_gadget(k)?;
    let n = g.n();
    let map = |t: usize| match t {
        0 => x,
        1 => z,
        2 => y,
        _ => n + t - 3,
    };
    let mut edges: Vec<(usize, usize)> = g.edges();
    edges.extend(gg.edges().into_iter().map(|(a, b)| (map(a), map(b))));
    let combined = Graph::from_edges(n + gg.n() - 3, &edges)?;
    let labels = GadgetLabels {
        clique: gl.clique.iter().map(|&t| map(t)).collect(),
        pairs: gl.pairs.iter().map(|(&ij, &t)| (ij, map(t))).collect(),
    };
    Ok(GadgetAttachment {
        graph: combined,
        labels,
        new_vertices: (n..n + gg.n() - 3).collect(),
        anchors: (x, y, z),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ComposeViolation {
    #[error("vertex {0} is on neither side")]
    UncoveredVertex(usize),
    #[error("edge ({0}, {1}) joins the two private sides")]
    CrossEdge(usize, usize),
    #[error("the sides order shared vertex {0} differently")]
    SharedOrderMismatch(usize),
    #[error("vertex {apex} sits outside the span of shared clique {clique:?}")]
    Sidedness { apex: usize, clique: Vec<usize> },
}

/// Interleaves k-C-E orderings of two subgraphs covering `g` into an
/// ordering of `g`, checking four conditions first:
///
/// 1. every vertex is in `v1` or `v2`;
/// 2. the intersection separates the private sides (no private cross edge);
/// 3. `sigma1` and `sigma2` agree on the intersection;
/// 4. for every (k-1)-clique C inside the intersection, each `v1`-private
///    vertex adjacent to all of C lies strictly between C's outermost
///    elements in `sigma1`.
///
/// The result keeps each side's internal order and places, between
/// consecutive shared vertices, the `v1`-private segment before the
/// `v2`-private one. When both inputs are k-C-E the result is too; this
/// function does not verify the inputs.
pub fn compose_separated(
    g: &Graph,
    k: usize,
    sigma1: &[usize],
    sigma2: &[usize],
) -> Result<VertexOrdering, Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    let side = |sigma: &[usize]| -> Result<Vec<bool>, Error> {
        let mut inside = vec![false; g.n()];
        for &v in sigma {
            if v >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
            }
            if inside[v] {
                return Err(Error::DuplicateVertex { vertex: v });
            }
            inside[v] = true;
        }
        Ok(inside)
    };
    let in1 = side(sigma1)?;
    let in2 = side(sigma2)?;
    if let Some(v) = (0..g.n()).find(|&v| !in1[v] && !in2[v]) {
        return Err(Error::Compose(ComposeViolation::UncoveredVertex(v)));
    }
    for (u, v) in g.edges() {
        let private1 = |w: usize| in1[w] && !in2[w];
        let private2 = |w: usize| in2[w] && !in1[w];
        if (private1(u) && private2(v)) || (private2(u) && private1(v)) {
            return Err(Error::Compose(ComposeViolation::CrossEdge(u, v)));
        }
    }
    let shared1: Vec<usize> = sigma1.iter().copied().filter(|&v| in2[v]).collect();
    let shared2: Vec<usize> = sigma2.iter().copied().filter(|&v| in1[v]).collect();
    if let Some(i) = (0..shared1.len()).find(|&i| shared1[i] != shared2[i]) {
        return Err(Error::Compose(ComposeViolation::SharedOrderMismatch(
            shared1[i],
        )));
    }
    let pos1: BTreeMap<usize, usize> =
        sigma1.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    check_sidedness(g, k, sigma1, &pos1, &in1, &in2)?;
    // Interleave: between consecutive shared vertices, side-1 privates first.
    let mut seq = Vec::with_capacity(g.n());
    let mut it1 = sigma1.iter().copied().peekable();
    let mut it2 = sigma2.iter().copied().peekable();
    loop {
        while let Some(&v) = it1.peek() {
            if in2[v] {
                break;
            }
            seq.push(v);
            it1.next();
        }
        while let Some(&v) = it2.peek() {
            if in1[v] {
                break;
            }
            seq.push(v);
            it2.next();
        }
        match (it1.next(), it2.next()) {
            (Some(s), Some(_)) => seq.push(s),
            (None, None) => break,
            // Shared streams have equal content; both end together.
            _ => unreachable!("shared vertices agree on both sides"),
        }
    }
    VertexOrdering::from_sequence(seq)
}

/// Condition 4: (k-1)-cliques inside the intersection must span every
/// side-1 private vertex adjacent to all of them.
fn check_sidedness(
    g: &Graph,
    k: usize,
    sigma1: &[usize],
    pos1: &BTreeMap<usize, usize>,
    in1: &[bool],
    in2: &[bool],
) -> Result<(), Error> {
    let shared: Vec<usize> = (0..g.n()).filter(|&v| in1[v] && in2[v]).collect();
    let shared_mask = crate::bits::Bits::from_indices(g.n(), shared.iter().copied());
    let mut violation = None;
    crate::cliques::for_each_clique(g, &shared_mask, k - 1, &mut |c| {
        if violation.is_some() {
            return;
        }
        let lo = c.iter().map(|v| pos1[v]).min().unwrap();
        let hi = c.iter().map(|v| pos1[v]).max().unwrap();
        for &a in sigma1 {
            if in2[a] || !c.iter().all(|&w| g.has_edge(a, w)) {
                continue;
            }
            let p = pos1[&a];
            if p <= lo || p >= hi {
                violation = Some(ComposeViolation::Sidedness {
                    apex: a,
                    clique: c.to_vec(),
                });
                return;
            }
        }
    });
    match violation {
        Some(v) => Err(Error::Compose(v)),
        None => Ok(()),
    }
}

/// Concatenates the classes of a proper colouring, ascending class index and
/// ascending id inside each class. With at most k classes the result is
/// k-C-E: the clique of an ordered K-minus would need all k classes on each
/// side of one class, which block order forbids.
pub fn coloring_ordering(
    g: &Graph,
    coloring: &Coloring,
    k: usize,
) -> Result<VertexOrdering, Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    if !coloring.is_proper(g) {
        return Err(Error::ImproperColoring);
    }
    let c = coloring.num_classes();
    if c > k {
        return Err(Error::TooManyColors { max: k, got: c });
    }
    let mut seq = Vec::with_capacity(g.n());
    for class in coloring.classes() {
        seq.extend(class);
    }
    VertexOrdering::from_sequence(seq)
}

//! Instance translations between clique, ordering-verification,
//! ordering-existence, betweenness, 3-colouring, and multicoloured-clique
//! problems, with the certificate directions implemented constructively.
//!
//! Each builder returns a typed output carrying the constructed graph plus
//! trace maps from source entities to output vertices, so certificates can be
//! lifted forward (source certificate to verified ordering) and extracted
//! backward (ordering to source certificate).

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::gadgets::{
    attach_gamma_gadget, compose_separated, gamma_canonical_sequence, GadgetLabels,
};
use crate::graph::Graph;
use crate::ordering::{Coloring, VertexOrdering};
use crate::solvers::coloring_from_triple_free;
use crate::verify::verify_pairwise;
use crate::Error;

/// A betweenness instance: elements 0..universe and constraints (a, b, c)
/// requiring b strictly between a and c in the chosen total order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BetweennessInstance {
    pub universe: usize,
    pub triples: Vec<(usize, usize, usize)>,
}

impl BetweennessInstance {
    /// Triples must name three distinct elements below `universe`.
    pub fn validate(&self) -> Result<(), Error> {
        for (index, &(a, b, c)) in self.triples.iter().enumerate() {
            let in_range = a < self.universe && b < self.universe && c < self.universe;
            let distinct = a != b && b != c && a != c;
            if !in_range || !distinct {
                return Err(Error::BadTriple { index });
            }
        }
        Ok(())
    }

    /// Checks a total order (as a sequence of elements) against every triple.
    pub fn check_order(&self, seq: &[usize]) -> Result<(), Error> {
        if seq.len() != self.universe {
            return Err(Error::OrderingLengthMismatch {
                expected: self.universe,
                got: seq.len(),
            });
        }
        let mut pos = vec![usize::MAX; self.universe];
        for (p, &v) in seq.iter().enumerate() {
            if v >= self.universe || pos[v] != usize::MAX {
                return Err(Error::NotAPermutation { n: self.universe });
            }
            pos[v] = p;
        }
        self.validate()?;
        for (index, &(a, b, c)) in self.triples.iter().enumerate() {
            let fwd = pos[a] < pos[b] && pos[b] < pos[c];
            let rev = pos[c] < pos[b] && pos[b] < pos[a];
            if !fwd && !rev {
                return Err(Error::TripleUnsatisfied { index });
            }
        }
        Ok(())
    }
}

/// Clique decision to ordering verification: adds two universal, mutually
/// non-adjacent vertices a and b and brackets the identity ordering with
/// them. `g` has a k-clique exactly when the returned ordering is not
/// (k+1)-C-E in the returned graph: a k-clique between a and b closes an
/// ordered K-minus on k+2 vertices, and conversely any witness must use both
/// a and b as its endpoints and a k-clique of `g` as its middle.
pub fn clique_to_verify(g: &Graph, k: usize) -> Result<(Graph, VertexOrdering, usize), Error> {
    if k < 1 {
        return Err(Error::KTooSmall { min: 1, got: k });
    }
    let n = g.n();
    let (a, b) = (n, n + 1);
    let mut edges = g.edges();
    for v in 0..n {
        edges.push((v, a));
        edges.push((v, b));
    }
    let g2 = Graph::from_edges(n + 2, &edges)?;
    let mut seq = Vec::with_capacity(n + 2);
    seq.push(a);
    seq.extend(0..n);
    seq.push(b);
    Ok((g2, VertexOrdering::from_sequence(seq)?, k + 1))
}

/// Ordering verification to clique: one subgraph per non-adjacent pair
/// (u, v), induced on the common neighbours that lie strictly between them,
/// all disjointly unioned. The union has a (k-1)-clique exactly when `sigma`
/// is not a k-C-E ordering of `g`.
pub fn verify_to_clique(g: &Graph, sigma: &VertexOrdering, k: usize) -> Result<Graph, Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    if sigma.len() != g.n() {
        return Err(Error::OrderingLengthMismatch {
            expected: g.n(),
            got: sigma.len(),
        });
    }
    let mut out = Graph::empty(0);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            if g.has_edge(u, v) {
                continue;
            }
            let (lo, hi) = {
                let (pu, pv) = (sigma.position(u), sigma.position(v));
                (pu.min(pv), pu.max(pv))
            };
            let mut between = g.row(u).and(g.row(v));
            for w in 0..g.n() {
                let p = sigma.position(w);
                if p <= lo || p >= hi {
                    between.clear(w);
                }
            }
            let members: Vec<usize> = between.iter_ones().collect();
            let (part, _) = g.induced_subgraph(&members)?;
            let (merged, _) = out.disjoint_union(&part);
            out = merged;
        }
    }
    Ok(out)
}

/// Clique decision to ordering existence. The output adds a (k-1)-clique K
/// joined to every source vertex, plus one pair vertex u_{i,j} for each pair
/// of the n+k-1 base vertices, adjacent to all base vertices except its two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueFindReduction {
    pub graph: Graph,
    pub k: usize,
    /// Output ids of the source vertices (0..n, identity).
    pub source_vertices: Vec<usize>,
    /// Output ids of the k-1 clique vertices K.
    pub clique_vertices: Vec<usize>,
    /// 1-based base-index pairs (i, j) to the output id of u_{i,j}.
    pub pair_vertices: BTreeMap<(usize, usize), usize>,
}

/// Builds the ordering-existence instance. Any k-clique of `g` together with
/// K spans 2k-1 base vertices whose pair vertices complete an induced copy
/// of the forbidden gadget, so the output has a k-C-E ordering exactly when
/// `g` has no k-clique.
pub fn clique_to_find(g: &Graph, k: usize) -> Result<CliqueFindReduction, Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    let n = g.n();
    let base = n + k - 1;
    let mut edges = g.edges();
    for t in n..base {
        for s in 0..t {
            edges.push((s, t));
        }
    }
    let mut pair_vertices = BTreeMap::new();
    let mut next = base;
    for i in 1..=base {
        for j in i + 1..=base {
            pair_vertices.insert((i, j), next);
            for t in 1..=base {
                if t != i && t != j {
                    edges.push((t - 1, next));
                }
            }
            next += 1;
        }
    }
    Ok(CliqueFindReduction {
        graph: Graph::from_edges(next, &edges)?,
        k,
        source_vertices: (0..n).collect(),
        clique_vertices: (n..base).collect(),
        pair_vertices,
    })
}

/// The block ordering V(G) + I + K, ascending by id inside each block. It is
/// k-C-E in the reduced graph exactly when the source had no k-clique.
pub fn noclique_ordering(out: &CliqueFindReduction) -> VertexOrdering {
    let mut seq: Vec<usize> = out.source_vertices.clone();
    seq.extend(out.pair_vertices.values().copied());
    seq.extend(out.clique_vertices.iter().copied());
    VertexOrdering::from_sequence(seq).expect("blocks partition the reduced graph")
}

/// Betweenness to ordering existence: a complete graph on the universe with
/// one gamma gadget glued per triple.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BetweennessReduction {
    pub graph: Graph,
    pub k: usize,
    pub universe: usize,
    pub triples: Vec<(usize, usize, usize)>,
    /// Per-triple gadget labels in output ids, in triple order.
    pub gadgets: Vec<GadgetLabels>,
}

/// Builds the chain G_0 = K_universe, G_i = G_{i-1} plus a gamma gadget on
/// the triangle (a_i, b_i, c_i). The instance is satisfiable exactly when
/// the final graph has a k-C-E ordering; k >= 4 is required for the gadget
/// attachment (see [`attach_gamma_gadget`]).
pub fn betweenness_to_find(
    inst: &BetweennessInstance,
    k: usize,
) -> Result<BetweennessReduction, Error> {
    if k < 4 {
        return Err(Error::KTooSmall { min: 4, got: k });
    }
    inst.validate()?;
    let mut g = Graph::complete(inst.universe);
    let mut gadgets = Vec::with_capacity(inst.triples.len());
    for &(a, b, c) in &inst.triples {
        let att = attach_gamma_gadget(&g, k, a, b, c)?;
        gadgets.push(att.labels);
        g = att.graph;
    }
    Ok(BetweennessReduction {
        graph: g,
        k,
        universe: inst.universe,
        triples: inst.triples.clone(),
        gadgets,
    })
}

/// Lifts a satisfying betweenness order to a k-C-E ordering of the reduced
/// graph with the universe in exactly the given order. Each gadget's
/// canonical ordering (reversed when the current order visits its triangle
/// backwards) is interleaved in by [`compose_separated`], iterating over the
/// gadgets in construction order.
pub fn betweenness_ordering_lift(
    out: &BetweennessReduction,
    psi: &[usize],
) -> Result<VertexOrdering, Error> {
    let inst = BetweennessInstance {
        universe: out.universe,
        triples: out.triples.clone(),
    };
    inst.check_order(psi)?;
    let mut g = Graph::complete(out.universe);
    let mut phi: Vec<usize> = psi.to_vec();
    for (i, &(a, b, c)) in out.triples.iter().enumerate() {
        let att = attach_gamma_gadget(&g, out.k, a, b, c)?;
        debug_assert_eq!(att.labels, out.gadgets[i]);
        let mut s1 = gamma_canonical_sequence(&att.labels)?;
        let before = |x: usize, y: usize| {
            phi.iter().position(|&v| v == x) < phi.iter().position(|&v| v == y)
        };
        if before(c, a) {
            s1.reverse();
        }
        phi = compose_separated(&att.graph, out.k, &s1, &phi)?
            .sequence()
            .to_vec();
        g = att.graph;
    }
    debug_assert_eq!(g, out.graph);
    VertexOrdering::from_sequence(phi)
}

/// 3-colouring to ordering existence, with every added vertex recorded by
/// role. Blocks A..D are 4-cliques (a with a_1..a_3, and so on); each source
/// edge e gets six f vertices paired into three triangles with three t
/// vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeColReduction {
    pub graph: Graph,
    pub k: usize,
    pub source: Graph,
    /// [a, a_1, a_2, a_3] and likewise for the other three blocks.
    pub a: [usize; 4],
    pub b: [usize; 4],
    pub c: [usize; 4],
    pub d: [usize; 4],
    /// Per source edge, ascending by (u, v).
    pub edge_items: Vec<ThreeColEdgeItem>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeColEdgeItem {
    pub edge: (usize, usize),
    /// f^e_1 .. f^e_6.
    pub f: [usize; 6],
    /// t^e_1 .. t^e_3.
    pub t: [usize; 3],
}

/// Builds the supergraph whose 3-C-E orderings correspond to proper
/// 3-colourings of `g`. Sizes: n + 16 + 9m vertices.
///
/// Edge construction, on top of the source edges:
/// cliques on A, B, C, D; per edge e and i in 1..=3 a triangle
/// (t^e_i, f^e_{2i-1}, f^e_{2i}); complete joins a*-b*, b*-c*, c*-d*, d*-a*
/// between the subscripted triples; a*, b* joined to V; c*, d* joined to
/// V and all f vertices; each f^e joined to e's endpoints; all t^e_2, t^e_3
/// into one clique, joined to every t^e_1.
pub fn threecol_to_find(g: &Graph) -> Result<ThreeColReduction, Error> {
    let n = g.n();
    let block = |start: usize| [start, start + 1, start + 2, start + 3];
    let (a, b, c, d) = (block(n), block(n + 4), block(n + 8), block(n + 12));
    let mut edges = g.edges();
    for blk in [&a, &b, &c, &d] {
        for i in 0..4 {
            for j in i + 1..4 {
                edges.push((blk[i], blk[j]));
            }
        }
    }
    let join = |edges: &mut Vec<(usize, usize)>, xs: &[usize], ys: &[usize]| {
        for &x in xs {
            for &y in ys {
                edges.push((x, y));
            }
        }
    };
    let verts: Vec<usize> = (0..n).collect();
    join(&mut edges, &a[1..], &b[1..]);
    join(&mut edges, &b[1..], &c[1..]);
    join(&mut edges, &c[1..], &d[1..]);
    join(&mut edges, &d[1..], &a[1..]);
    join(&mut edges, &a[1..], &verts);
    join(&mut edges, &b[1..], &verts);
    join(&mut edges, &c[1..], &verts);
    join(&mut edges, &d[1..], &verts);
    let mut edge_items = Vec::with_capacity(g.edge_count());
    let mut next = n + 16;
    for (u, v) in g.edges() {
        let f = [next, next + 1, next + 2, next + 3, next + 4, next + 5];
        let t = [next + 6, next + 7, next + 8];
        next += 9;
        for i in 0..3 {
            edges.push((t[i], f[2 * i]));
            edges.push((t[i], f[2 * i + 1]));
            edges.push((f[2 * i], f[2 * i + 1]));
        }
        for &fv in &f {
            edges.push((fv, u));
            edges.push((fv, v));
            join(&mut edges, &c[1..], &[fv]);
            join(&mut edges, &d[1..], &[fv]);
        }
        edge_items.push(ThreeColEdgeItem { edge: (u, v), f, t });
    }
    let t23: Vec<usize> = edge_items
        .iter()
        .flat_map(|it| [it.t[1], it.t[2]])
        .collect();
    for i in 0..t23.len() {
        for j in i + 1..t23.len() {
            edges.push((t23[i], t23[j]));
        }
    }
    for it in &edge_items {
        join(&mut edges, &[it.t[0]], &t23);
    }
    let graph = Graph::from_edges(next, &edges)?;
    debug_assert_eq!(graph.n(), n + 16 + 9 * g.edge_count());
    Ok(ThreeColReduction {
        graph,
        k: 3,
        source: g.clone(),
        a,
        b,
        c,
        d,
        edge_items,
    })
}

/// Lifts a proper 3-colouring of the source to a 3-C-E ordering of the
/// reduced graph.
///
/// The side containing the source runs
/// (a_1, a_2, a_3, a, c_1, c_2, c_3, c) + sigma + (d, d_1..d_3, b, b_1..b_3)
/// where sigma lays out colour class 1, then the f pairs of edges touching
/// class 1 (descending pair index, each pair high-first), class 2, the f
/// pairs of the class-2/class-3 edges (ascending pair index, low-first),
/// and class 3. The t side repeats the f layout with each t^e_i between its
/// pair. Both sides meet only in the f vertices and are interleaved by
/// [`compose_separated`].
pub fn threecol_ordering_lift(
    out: &ThreeColReduction,
    col: &Coloring,
) -> Result<VertexOrdering, Error> {
    if !col.is_proper(&out.source) {
        return Err(Error::ImproperColoring);
    }
    if col.num_classes() > 3 {
        return Err(Error::TooManyColors {
            max: 3,
            got: col.num_classes(),
        });
    }
    let class = |v: usize| col.class(v);
    let in_e1 = |it: &&ThreeColEdgeItem| class(it.edge.0) == 0 || class(it.edge.1) == 0;
    let e1: Vec<&ThreeColEdgeItem> = out.edge_items.iter().filter(in_e1).collect();
    let e2: Vec<&ThreeColEdgeItem> = out.edge_items.iter().filter(|it| !in_e1(it)).collect();
    let members = |cls: usize| -> Vec<usize> {
        (0..out.source.n()).filter(|&v| class(v) == cls).collect()
    };
    let mut sigma: Vec<usize> = members(0);
    for i in (0..3).rev() {
        for it in &e1 {
            sigma.push(it.f[2 * i + 1]);
            sigma.push(it.f[2 * i]);
        }
    }
    sigma.extend(members(1));
    for i in 0..3 {
        for it in &e2 {
            sigma.push(it.f[2 * i]);
            sigma.push(it.f[2 * i + 1]);
        }
    }
    sigma.extend(members(2));
    let mut side_l: Vec<usize> = vec![
        out.a[1], out.a[2], out.a[3], out.a[0],
        out.c[1], out.c[2], out.c[3], out.c[0],
    ];
    side_l.extend(sigma);
    side_l.extend([
        out.d[0], out.d[1], out.d[2], out.d[3],
        out.b[0], out.b[1], out.b[2], out.b[3],
    ]);
    let mut side_u = Vec::new();
    for i in (0..3).rev() {
        for it in &e1 {
            side_u.push(it.f[2 * i + 1]);
            side_u.push(it.t[i]);
            side_u.push(it.f[2 * i]);
        }
    }
    for i in 0..3 {
        for it in &e2 {
            side_u.push(it.f[2 * i]);
            side_u.push(it.t[i]);
            side_u.push(it.f[2 * i + 1]);
        }
    }
    compose_separated(&out.graph, 3, &side_u, &side_l)
}

/// Recovers a proper 3-colouring of the source from any 3-C-E ordering of
/// the reduced graph: the ordering restricted to the source vertices has no
/// disjoint triple, so layering by longest ascending edge path 3-colours it.
pub fn threecol_extract_coloring(
    out: &ThreeColReduction,
    phi: &VertexOrdering,
) -> Result<Coloring, Error> {
    if verify_pairwise(&out.graph, 3, phi)?.is_some() {
        return Err(Error::NotKceOrdering { k: 3 });
    }
    let source_ids: Vec<usize> = (0..out.source.n()).collect();
    let restricted = phi.restricted_sequence(&source_ids)?;
    let order = VertexOrdering::from_sequence(restricted)?;
    coloring_from_triple_free(&out.source, &order)
}

/// Removes the edges inside each class and returns the layered ordering
/// (classes in the given order, ascending ids inside). The ordering is
/// |classes|-C-E for the stripped graph, whose maximum clique is |classes|
/// exactly when `g` has a clique using one vertex from every class.
pub fn multicolored_strip(
    g: &Graph,
    classes: &[Vec<usize>],
) -> Result<(Graph, VertexOrdering), Error> {
    let mut class_of = vec![usize::MAX; g.n()];
    for (c, members) in classes.iter().enumerate() {
        for &v in members {
            if v >= g.n() {
                return Err(Error::BadPartition(format!(
                    "vertex {v} out of range for a graph on {} vertices",
                    g.n()
                )));
            }
            if class_of[v] != usize::MAX {
                return Err(Error::BadPartition(format!(
                    "vertex {v} appears in classes {} and {c}",
                    class_of[v]
                )));
            }
            class_of[v] = c;
        }
    }
    if let Some(v) = class_of.iter().position(|&c| c == usize::MAX) {
        return Err(Error::BadPartition(format!("vertex {v} is in no class")));
    }
    let edges: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| class_of[u] != class_of[v])
        .collect();
    let stripped = Graph::from_edges(g.n(), &edges)?;
    let mut seq = Vec::with_capacity(g.n());
    for members in classes {
        let mut sorted = members.clone();
        sorted.sort_unstable();
        seq.extend(sorted);
    }
    Ok((stripped, VertexOrdering::from_sequence(seq)?))
}

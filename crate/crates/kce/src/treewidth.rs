//! Tree decompositions and a decomposition-driven verifier.
//!
//! Any ordered K-minus on k+1 vertices contains a (k-1)-clique of "middle"
//! vertices, and every clique of a graph is contained in some bag of any
//! valid tree decomposition. The verifier here therefore only enumerates
//! candidate middle cliques inside bags, which is fast when the width is
//! small compared to k.

use std::collections::{BTreeSet, HashMap};

use crate::bits::Bits;
use crate::cliques;
use crate::graph::Graph;
use crate::ordering::{KMinusWitness, VertexOrdering};
use crate::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

/// Largest instance [`exact_treewidth`] accepts; the memoised search keyed on
/// vertex subsets needs one entry per reachable subset.
pub const EXACT_TREEWIDTH_LIMIT: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    bags: Vec<Vec<usize>>,
    tree_edges: Vec<(usize, usize)>,
}

impl TreeDecomposition {
    /// Bag contents are sorted and deduplicated; structural soundness is
    /// checked separately by [`validate_decomposition`].
    pub fn new(bags: Vec<Vec<usize>>, tree_edges: Vec<(usize, usize)>) -> Self {
        let bags = bags
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b.dedup();
                b
            })
            .collect();
        TreeDecomposition { bags, tree_edges }
    }

    pub fn n_bags(&self) -> usize {
        self.bags.len()
    }

    pub fn bags(&self) -> &[Vec<usize>] {
        &self.bags
    }

    pub fn tree_edges(&self) -> &[(usize, usize)] {
        &self.tree_edges
    }

    pub fn max_bag_size(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0)
    }

    /// Largest bag size minus one; -1 for a decomposition of the empty graph.
    pub fn width(&self) -> isize {
        self.max_bag_size() as isize - 1
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecompositionViolation {
    #[error("bag edges do not form a tree")]
    NotATree,
    #[error("bag id {0} out of range")]
    BagOutOfRange(usize),
    #[error("bag lists vertex {0} outside the graph")]
    ForeignVertex(usize),
    #[error("vertex {0} appears in no bag")]
    VertexUncovered(usize),
    #[error("edge ({0}, {1}) is inside no bag")]
    EdgeUncovered(usize, usize),
    #[error("bags containing vertex {0} are disconnected in the tree")]
    DisconnectedTrace(usize),
}

/// Checks the three decomposition conditions, reporting the first violated
/// one: the bag graph is a tree, bags cover all vertices and edges, and each
/// vertex's bags form a subtree.
pub fn validate_decomposition(
    g: &Graph,
    td: &TreeDecomposition,
) -> Result<(), DecompositionViolation> {
    let b = td.bags.len();
    for &(x, y) in &td.tree_edges {
        if x >= b {
            return Err(DecompositionViolation::BagOutOfRange(x));
        }
        if y >= b {
            return Err(DecompositionViolation::BagOutOfRange(y));
        }
        if x == y {
            return Err(DecompositionViolation::NotATree);
        }
    }
    if b == 0 {
        return if g.n() == 0 {
            Ok(())
        } else {
            Err(DecompositionViolation::VertexUncovered(0))
        };
    }
    if td.tree_edges.len() != b - 1 || !bag_graph_connected(b, &td.tree_edges) {
        return Err(DecompositionViolation::NotATree);
    }
    let mut bags_of: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, bag) in td.bags.iter().enumerate() {
        for &v in bag {
            if v >= g.n() {
                return Err(DecompositionViolation::ForeignVertex(v));
            }
            bags_of[v].push(i);
        }
    }
    if let Some(v) = bags_of.iter().position(|l| l.is_empty()) {
        return Err(DecompositionViolation::VertexUncovered(v));
    }
    for (u, v) in g.edges() {
        let covered = td.bags.iter().any(|bag| {
            bag.binary_search(&u).is_ok() && bag.binary_search(&v).is_ok()
        });
        if !covered {
            return Err(DecompositionViolation::EdgeUncovered(u, v));
        }
    }
    // Subtree condition: bags holding v must be connected in the tree.
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); b];
    for &(x, y) in &td.tree_edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    for (v, holders) in bags_of.iter().enumerate() {
        let inside = Bits::from_indices(b, holders.iter().copied());
        let mut seen = Bits::new(b);
        let mut stack = vec![holders[0]];
        seen.set(holders[0]);
        let mut reached = 0;
        while let Some(i) = stack.pop() {
            reached += 1;
            for &j in &adj[i] {
                if inside.test(j) && !seen.test(j) {
                    seen.set(j);
                    stack.push(j);
                }
            }
        }
        if reached != holders.len() {
            return Err(DecompositionViolation::DisconnectedTrace(v));
        }
    }
    Ok(())
}

fn bag_graph_connected(b: usize, edges: &[(usize, usize)]) -> bool {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); b];
    for &(x, y) in edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut seen = Bits::new(b);
    seen.set(0);
    let mut stack = vec![0];
    let mut count = 0;
    while let Some(i) = stack.pop() {
        count += 1;
        for &j in &adj[i] {
            if !seen.test(j) {
                seen.set(j);
                stack.push(j);
            }
        }
    }
    count == b
}

/// Exact treewidth with a witnessing decomposition.
///
/// Searches elimination orders depth-first, memoising the best achievable
/// maximum elimination degree per already-eliminated subset. The degree of a
/// vertex at elimination time equals its neighbours reachable through the
/// eliminated set, so states collapse to subsets. Simplicial vertices are
/// eliminated greedily, which is always optimal.
pub fn exact_treewidth(g: &Graph) -> Result<(isize, TreeDecomposition), Error> {
    let n = g.n();
    if n > EXACT_TREEWIDTH_LIMIT {
        return Err(Error::TooLarge {
            limit: EXACT_TREEWIDTH_LIMIT,
            got: n,
        });
    }
    if n == 0 {
        return Ok((-1, TreeDecomposition::new(vec![Vec::new()], Vec::new())));
    }
    let adj: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |m, v| m | 1 << v))
        .collect();
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut memo: HashMap<u32, (u8, u8)> = HashMap::new();
    let width = elim_rec(&adj, 0, full, &mut memo) as isize;
    let mut order = Vec::with_capacity(n);
    let mut s = 0u32;
    while s != full {
        let (_, v) = memo[&s];
        order.push(v as usize);
        s |= 1 << v;
    }
    let td = decomposition_from_elimination(g, &order);
    debug_assert_eq!(td.width(), width);
    Ok((width, td))
}

/// Neighbours of `v` reachable through the eliminated set `s`: exactly the
/// clique `v` would be completed into if eliminated now.
fn q_set(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut reach = 1u32 << v;
    let mut nb = adj[v];
    loop {
        let grow = nb & s & !reach;
        if grow == 0 {
            break;
        }
        reach |= grow;
        let mut m = grow;
        while m != 0 {
            let w = m.trailing_zeros() as usize;
            m &= m - 1;
            nb |= adj[w];
        }
    }
    nb & !s & !(1u32 << v)
}

fn is_simplicial(adj: &[u32], s: u32, q: u32) -> bool {
    let mut m = q;
    while m != 0 {
        let a = m.trailing_zeros() as usize;
        m &= m - 1;
        if q & !q_set(adj, s, a) & !(1u32 << a) != 0 {
            return false;
        }
    }
    true
}

fn elim_rec(adj: &[u32], s: u32, full: u32, memo: &mut HashMap<u32, (u8, u8)>) -> u8 {
    if s == full {
        return 0;
    }
    if let Some(&(val, _)) = memo.get(&s) {
        return val;
    }
    let mut cands: Vec<(u8, u32, u8)> = Vec::new();
    let mut m = full & !s;
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        let q = q_set(adj, s, v);
        cands.push((q.count_ones() as u8, q, v as u8));
    }
    cands.sort_unstable_by_key(|&(qs, _, v)| (qs, v));
    // A simplicial vertex can always be eliminated first.
    for &(qs, q, v) in &cands {
        if is_simplicial(adj, s, q) {
            let val = qs.max(elim_rec(adj, s | 1 << v, full, memo));
            memo.insert(s, (val, v));
            return val;
        }
    }
    let mut best = u8::MAX;
    let mut choice = cands[0].2;
    for &(qs, _, v) in &cands {
        if qs >= best {
            continue;
        }
        let val = qs.max(elim_rec(adj, s | 1 << v, full, memo));
        if val < best {
            best = val;
            choice = v;
        }
    }
    memo.insert(s, (best, choice));
    best
}

/// Bags from a concrete elimination order: each vertex is bagged with its
/// fill-graph neighbours at elimination time; each bag hangs off the bag of
/// the earliest-eliminated vertex it still shares.
fn decomposition_from_elimination(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    let mut fill: Vec<u32> = (0..n)
        .map(|u| g.neighbors(u).fold(0u32, |m, v| m | 1 << v))
        .collect();
    let mut elim_index = vec![0usize; n];
    for (i, &v) in order.iter().enumerate() {
        elim_index[v] = i;
    }
    let mut eliminated = 0u32;
    let mut bags = Vec::with_capacity(n);
    for &v in order {
        let nb = fill[v] & !eliminated & !(1u32 << v);
        let mut bag: Vec<usize> = (0..n).filter(|&w| nb >> w & 1 == 1).collect();
        bag.push(v);
        bags.push(bag);
        let mut m = nb;
        while m != 0 {
            let a = m.trailing_zeros() as usize;
            m &= m - 1;
            fill[a] |= nb & !(1u32 << a);
        }
        eliminated |= 1 << v;
    }
    let mut edges = Vec::new();
    for i in 0..n {
        let parent = bags[i]
            .iter()
            .filter(|&&w| w != order[i])
            .map(|&w| elim_index[w])
            .min();
        match parent {
            Some(j) => edges.push((i, j)),
            None if i + 1 < n => edges.push((i, i + 1)),
            None => {}
        }
    }
    TreeDecomposition::new(bags, edges)
}

/// Decides k-clique-extendibility through a tree decomposition: enumerates
/// (k-1)-cliques bag by bag (deduplicated), then tests each against every
/// non-adjacent pair that brackets it in the ordering. Agrees with
/// [`crate::verify::verify_naive`] whenever the decomposition is valid.
///
/// If k-1 exceeds the largest bag, no middle clique exists and the ordering
/// is trivially k-C-E.
pub fn verify_via_decomposition(
    g: &Graph,
    k: usize,
    phi: &VertexOrdering,
    td: &TreeDecomposition,
) -> Result<Option<KMinusWitness>, Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    if phi.len() != g.n() {
        return Err(Error::OrderingLengthMismatch {
            expected: g.n(),
            got: phi.len(),
        });
    }
    validate_decomposition(g, td).map_err(Error::InvalidDecomposition)?;
    if k as isize - 1 > td.width() + 1 {
        return Ok(None);
    }
    let collect_bag = |bag: &Vec<usize>| -> Vec<Vec<usize>> {
        let mask = Bits::from_indices(g.n(), bag.iter().copied());
        let mut found = Vec::new();
        cliques::for_each_clique(g, &mask, k - 1, &mut |c| found.push(c.to_vec()));
        found
    };
    #[cfg(feature = "parallel")]
    let per_bag: Vec<Vec<Vec<usize>>> = td.bags.par_iter().map(collect_bag).collect();
    #[cfg(not(feature = "parallel"))]
    let per_bag: Vec<Vec<Vec<usize>>> = td.bags.iter().map(collect_bag).collect();
    let mut middles: BTreeSet<Vec<usize>> = BTreeSet::new();
    for list in per_bag {
        middles.extend(list);
    }
    for clique in &middles {
        let mut common = g.row(clique[0]).clone();
        for &w in &clique[1..] {
            common.and_assign(g.row(w));
        }
        let lo = clique.iter().map(|&w| phi.position(w)).min().unwrap();
        let hi = clique.iter().map(|&w| phi.position(w)).max().unwrap();
        let mut left: Vec<usize> = common.iter_ones().filter(|&u| phi.position(u) < lo).collect();
        let mut right: Vec<usize> = common.iter_ones().filter(|&u| phi.position(u) > hi).collect();
        left.sort_unstable_by_key(|&u| phi.position(u));
        right.sort_unstable_by_key(|&u| phi.position(u));
        for &u in &left {
            for &v in &right {
                if !g.has_edge(u, v) {
                    let mut vertices = Vec::with_capacity(k + 1);
                    vertices.push(u);
                    let mut mid = clique.clone();
                    mid.sort_unstable_by_key(|&w| phi.position(w));
                    vertices.extend_from_slice(&mid);
                    vertices.push(v);
                    return Ok(Some(KMinusWitness { k, vertices }));
                }
            }
        }
    }
    Ok(None)
}

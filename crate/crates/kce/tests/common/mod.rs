//! Shared brute-force oracles for the integration suites. Everything here
//! recomputes from first principles: subset scans and permutation sweeps
//! with none of the library's pruning, so agreement is meaningful.
#![allow(dead_code)]

use itertools::Itertools;
use rand::Rng;

use kce::{Graph, VertexOrdering};

/// Blind ordered K-minus test: scans every (k+1)-subset, position-sorted,
/// for "all pairs adjacent except first and last".
pub fn subset_scan_rejects(g: &Graph, k: usize, phi: &VertexOrdering) -> bool {
    (0..g.n()).combinations(k + 1).any(|mut c| {
        c.sort_unstable_by_key(|&v| phi.position(v));
        let ordered = |i: usize, j: usize| g.has_edge(c[i], c[j]);
        !ordered(0, k)
            && (0..=k)
                .tuple_combinations()
                .all(|(i, j)| (i, j) == (0, k) || ordered(i, j))
    })
}

/// Maximum clique size by scanning all vertex subsets. Keep n small.
pub fn max_clique_by_subsets(g: &Graph) -> usize {
    let mut best = 0;
    for mask in 0u32..1 << g.n() {
        let verts: Vec<usize> = (0..g.n()).filter(|&v| mask >> v & 1 == 1).collect();
        if verts.len() > best
            && verts
                .iter()
                .tuple_combinations()
                .all(|(&u, &v)| g.has_edge(u, v))
        {
            best = verts.len();
        }
    }
    best
}

/// Treewidth as the best width over every elimination order: eliminating a
/// vertex records its remaining degree and completes its neighbourhood.
pub fn treewidth_by_eliminations(g: &Graph) -> isize {
    let n = g.n();
    if n == 0 {
        return -1;
    }
    let base: Vec<Vec<bool>> = (0..n)
        .map(|u| (0..n).map(|v| g.has_edge(u, v)).collect())
        .collect();
    let mut best = n as isize - 1;
    for order in (0..n).permutations(n) {
        let mut adj = base.clone();
        let mut gone = vec![false; n];
        let mut width = 0;
        for &v in &order {
            let nb: Vec<usize> = (0..n).filter(|&u| !gone[u] && adj[v][u]).collect();
            width = width.max(nb.len() as isize);
            for (&a, &b) in nb.iter().tuple_combinations() {
                adj[a][b] = true;
                adj[b][a] = true;
            }
            gone[v] = true;
        }
        best = best.min(width);
    }
    best
}

/// Whether three edges sit at positions u < v <= w < x <= y < z, by trying
/// every edge triple in every slot assignment.
pub fn edge_triple_scan(g: &Graph, phi: &VertexOrdering) -> bool {
    let spans: Vec<(usize, usize)> = g
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let (pa, pb) = (phi.position(a), phi.position(b));
            (pa.min(pb), pa.max(pb))
        })
        .collect();
    spans.iter().permutations(3).any(|t| {
        let [(_, r1), (l2, r2), (l3, _)] = [*t[0], *t[1], *t[2]];
        r1 <= l2 && r2 <= l3
    })
}

/// First proper colouring with at most k classes, counting assignments in
/// base k. None when the graph needs more colours.
pub fn colouring_by_counting(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let n = g.n();
    if n == 0 {
        return Some(Vec::new());
    }
    if k == 0 {
        return None;
    }
    let edges = g.edges();
    let mut class = vec![0usize; n];
    loop {
        if edges.iter().all(|&(u, v)| class[u] != class[v]) {
            return Some(class);
        }
        let mut i = 0;
        loop {
            if i == n {
                return None;
            }
            class[i] += 1;
            if class[i] < k {
                break;
            }
            class[i] = 0;
            i += 1;
        }
    }
}

/// All permutations of 0..universe placing, for every triple (a, b, c), the
/// middle element strictly between the outer two.
pub fn satisfying_betweenness_orders(
    universe: usize,
    triples: &[(usize, usize, usize)],
) -> Vec<Vec<usize>> {
    (0..universe)
        .permutations(universe)
        .filter(|perm| {
            let pos = |v: usize| perm.iter().position(|&x| x == v).unwrap();
            triples.iter().all(|&(a, b, c)| {
                let (pa, pb, pc) = (pos(a), pos(b), pos(c));
                (pa < pb && pb < pc) || (pc < pb && pb < pa)
            })
        })
        .collect()
}

/// Whether some choice of one vertex per class is pairwise adjacent.
pub fn multicolored_clique_exists(g: &Graph, classes: &[Vec<usize>]) -> bool {
    fn pick(g: &Graph, classes: &[Vec<usize>], chosen: &mut Vec<usize>) -> bool {
        match classes.split_first() {
            None => true,
            Some((head, rest)) => head.iter().any(|&v| {
                if chosen.iter().all(|&u| g.has_edge(u, v)) {
                    chosen.push(v);
                    let ok = pick(g, rest, chosen);
                    chosen.pop();
                    ok
                } else {
                    false
                }
            }),
        }
    }
    pick(g, classes, &mut Vec::new())
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Every labelled graph on n vertices, one per edge-subset bitmask.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// Outer 5-cycle, inner pentagram, spokes between them.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, 5 + i));
    }
    Graph::from_edges(10, &edges).unwrap()
}

//! Internal clique search on bitset neighbourhoods. Branching is always by
//! ascending vertex id, so the first clique found is deterministic.

use crate::bits::Bits;
use crate::graph::Graph;

/// Upper bound on the largest clique inside `cand` via greedy colouring:
/// a clique needs one vertex per colour class.
fn color_bound(g: &Graph, cand: &Bits) -> usize {
    let mut classes: Vec<Bits> = Vec::new();
    for v in cand.iter_ones() {
        match classes.iter_mut().find(|c| !c.intersects(g.row(v))) {
            Some(c) => c.set(v),
            None => {
                let mut c = Bits::new(g.n());
                c.set(v);
                classes.push(c);
            }
        }
    }
    classes.len()
}

/// First clique of exactly `size` vertices inside `cand`, in ascending-id
/// depth-first order. Pruning only skips subtrees that cannot contain a
/// clique of the requested size, so which clique is found first does not
/// depend on the pruning.
pub(crate) fn find_clique(g: &Graph, cand: &Bits, size: usize) -> Option<Vec<usize>> {
    let mut acc = Vec::with_capacity(size);
    if rec_find(g, cand, size, &mut acc) {
        Some(acc)
    } else {
        None
    }
}

/// Decision-only variant of [`find_clique`]; avoids building the clique.
pub(crate) fn has_clique(g: &Graph, cand: &Bits, size: usize) -> bool {
    let mut acc = Vec::with_capacity(size);
    rec_find(g, cand, size, &mut acc)
}

fn rec_find(g: &Graph, cand: &Bits, need: usize, acc: &mut Vec<usize>) -> bool {
    if need == 0 {
        return true;
    }
    if cand.count() < need {
        return false;
    }
    if need >= 3 && color_bound(g, cand) < need {
        return false;
    }
    for v in cand.iter_ones() {
        acc.push(v);
        let mut rest = cand.and(g.row(v));
        // Only ids above v, so each clique is visited once, in lex order.
        rest.clear_upto(v);
        if rec_find(g, &rest, need - 1, acc) {
            return true;
        }
        acc.pop();
    }
    false
}

/// Calls `f` for every clique of exactly `size` vertices inside `cand`,
/// each reported as an ascending id list, in lexicographic order.
pub(crate) fn for_each_clique<F: FnMut(&[usize])>(g: &Graph, cand: &Bits, size: usize, f: &mut F) {
    let mut acc = Vec::with_capacity(size);
    rec_each(g, cand, size, &mut acc, f);
}

fn rec_each<F: FnMut(&[usize])>(g: &Graph, cand: &Bits, need: usize, acc: &mut Vec<usize>, f: &mut F) {
    if need == 0 {
        f(acc);
        return;
    }
    if cand.count() < need {
        return;
    }
    for v in cand.iter_ones() {
        acc.push(v);
        let mut rest = cand.and(g.row(v));
        rest.clear_upto(v);
        rec_each(g, &rest, need - 1, acc, f);
        acc.pop();
    }
}

/// Maximum clique by branch and bound with the greedy colouring bound.
/// Returns the first maximum clique encountered in ascending-id order.
pub(crate) fn max_clique(g: &Graph) -> (usize, Vec<usize>) {
    let mut best: Vec<usize> = Vec::new();
    let mut acc: Vec<usize> = Vec::new();
    rec_max(g, &g.full_mask(), &mut acc, &mut best);
    (best.len(), best)
}

fn rec_max(g: &Graph, cand: &Bits, acc: &mut Vec<usize>, best: &mut Vec<usize>) {
    if acc.len() > best.len() {
        *best = acc.clone();
    }
    let remaining = cand.count();
    if remaining == 0 || acc.len() + remaining <= best.len() {
        return;
    }
    if acc.len() + color_bound(g, cand) <= best.len() {
        return;
    }
    for v in cand.iter_ones() {
        acc.push(v);
        let mut rest = cand.and(g.row(v));
        rest.clear_upto(v);
        rec_max(g, &rest, acc, best);
        acc.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn finds_cliques_in_lex_order() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap();
        let all = g.full_mask();
        assert_eq!(find_clique(&g, &all, 3), Some(vec![0, 1, 2]));
        assert_eq!(find_clique(&g, &all, 4), None);
        let mut seen = Vec::new();
        for_each_clique(&g, &all, 3, &mut |c| seen.push(c.to_vec()));
        assert_eq!(seen, vec![vec![0, 1, 2], vec![2, 3, 4]]);
        assert!(has_clique(&g, &all, 2));
    }

    #[test]
    fn max_clique_small() {
        assert_eq!(max_clique(&Graph::complete(6)).0, 6);
        assert_eq!(max_clique(&Graph::cycle(5)).0, 2);
        assert_eq!(max_clique(&Graph::empty(4)).0, 1);
        assert_eq!(max_clique(&Graph::empty(0)).0, 0);
    }
}

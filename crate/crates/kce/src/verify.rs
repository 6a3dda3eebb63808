//! Verifiers for k-clique-extendibility.
//!
//! Both verifiers decide the same question: does the ordering contain an
//! ordered K-minus on k+1 vertices? [`verify_naive`] scans subsets directly;
//! [`verify_pairwise`] intersects bitset neighbourhoods and prunes. Both
//! follow the same selection rule: non-adjacent pairs by position of the
//! left endpoint then the right, the middle clique lexicographically first
//! by id. Their outputs are identical, witness included.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::bits::Bits;
use crate::cliques;
use crate::graph::Graph;
use crate::ordering::{KMinusWitness, VertexOrdering};
use crate::Error;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

fn check_inputs(g: &Graph, k: usize, phi: &VertexOrdering) -> Result<(), Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    if phi.len() != g.n() {
        return Err(Error::OrderingLengthMismatch {
            expected: g.n(),
            got: phi.len(),
        });
    }
    Ok(())
}

/// Direct enumeration: every non-adjacent position pair, then every
/// (k-1)-subset of the common neighbours strictly between it, checked for
/// being a clique. No pruning beyond the definition itself.
pub fn verify_naive(
    g: &Graph,
    k: usize,
    phi: &VertexOrdering,
) -> Result<Option<KMinusWitness>, Error> {
    check_inputs(g, k, phi)?;
    let n = g.n();
    if n < k + 1 {
        return Ok(None);
    }
    for i in 0..n {
        // A witness needs k-1 vertices strictly between the endpoints.
        for j in i + k..n {
            let (u, v) = (phi.vertex_at(i), phi.vertex_at(j));
            if g.has_edge(u, v) {
                continue;
            }
            // Ascending id, so subsets come out in lexicographic order.
            let cand: Vec<usize> = (0..n)
                .filter(|&w| {
                    let p = phi.position(w);
                    i < p && p < j && g.has_edge(u, w) && g.has_edge(v, w)
                })
                .collect();
            if let Some(mut mids) = first_clique_subset(g, &cand, k - 1) {
                mids.sort_unstable_by_key(|&w| phi.position(w));
                let mut vertices = Vec::with_capacity(k + 1);
                vertices.push(u);
                vertices.append(&mut mids);
                vertices.push(v);
                return Ok(Some(KMinusWitness { k, vertices }));
            }
        }
    }
    Ok(None)
}

/// Lexicographically first size-subset of `cand` (which must be ascending)
/// that is pairwise adjacent, by plain subset recursion.
fn first_clique_subset(g: &Graph, cand: &[usize], size: usize) -> Option<Vec<usize>> {
    fn rec(g: &Graph, cand: &[usize], size: usize, acc: &mut Vec<usize>) -> bool {
        if size == 0 {
            return true;
        }
        for (i, &w) in cand.iter().enumerate() {
            if acc.iter().all(|&a| g.has_edge(a, w)) {
                acc.push(w);
                if rec(g, &cand[i + 1..], size - 1, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::with_capacity(size);
    rec(g, cand, size, &mut acc).then_some(acc)
}

/// Non-edge pair scan. Pairs are ordered by the position of the left
/// endpoint, then the right; inside a pair the (k-1)-clique search branches
/// by ascending id. With the `parallel` feature pairs are checked on a rayon
/// pool, reduced to the first match in pair order, so the witness is
/// schedule-independent.
pub fn verify_pairwise(
    g: &Graph,
    k: usize,
    phi: &VertexOrdering,
) -> Result<Option<KMinusWitness>, Error> {
    check_inputs(g, k, phi)?;
    let n = g.n();
    if n < k + 1 {
        return Ok(None);
    }
    // prefix[i] = vertices at positions < i.
    let mut prefix = Vec::with_capacity(n + 1);
    let mut cur = Bits::new(n);
    prefix.push(cur.clone());
    for i in 0..n {
        cur.set(phi.vertex_at(i));
        prefix.push(cur.clone());
    }
    let mut pairs = Vec::new();
    for i in 0..n {
        // A witness needs k-1 vertices strictly between the endpoints.
        for j in i + k..n {
            let (u, v) = (phi.vertex_at(i), phi.vertex_at(j));
            if !g.has_edge(u, v) {
                pairs.push((i, j));
            }
        }
    }
    let check = |&(i, j): &(usize, usize)| -> Option<KMinusWitness> {
        let (u, v) = (phi.vertex_at(i), phi.vertex_at(j));
        let mut between = prefix[j].clone();
        between.andnot_assign(&prefix[i + 1]);
        between.and_assign(g.row(u));
        between.and_assign(g.row(v));
        let mut clique = cliques::find_clique(g, &between, k - 1)?;
        clique.sort_unstable_by_key(|&w| phi.position(w));
        let mut vertices = Vec::with_capacity(k + 1);
        vertices.push(u);
        vertices.extend_from_slice(&clique);
        vertices.push(v);
        Some(KMinusWitness { k, vertices })
    };
    #[cfg(feature = "parallel")]
    let found = pairs.par_iter().find_map_first(check);
    #[cfg(not(feature = "parallel"))]
    let found = pairs.iter().find_map(check);
    Ok(found)
}

/// Convenience wrapper over [`KMinusWitness::validate`].
pub fn validate_witness(g: &Graph, phi: &VertexOrdering, w: &KMinusWitness) -> bool {
    w.validate(g, phi)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OrderedFractionEstimate {
    pub mean_fraction: f64,
    /// Number of induced K-minus subgraphs found in the graph.
    pub subgraph_count: usize,
    pub trials: usize,
}

/// Estimates the probability that an induced K-minus on k+1 vertices is
/// *ordered* under a uniformly random ordering. Enumerates every induced
/// K-minus once (each has a unique non-adjacent pair), then averages the
/// ordered fraction over `trials` random orderings.
///
/// Trial t draws from stream t of a ChaCha generator seeded with `seed`, so
/// results are reproducible bit for bit regardless of thread count.
pub fn estimate_ordered_fraction(
    g: &Graph,
    k: usize,
    trials: usize,
    seed: u64,
) -> Result<OrderedFractionEstimate, Error> {
    if k < 2 {
        return Err(Error::KTooSmall { min: 2, got: k });
    }
    if trials == 0 {
        return Err(Error::ZeroTrials);
    }
    let n = g.n();
    let mut subs: Vec<(usize, usize, Vec<usize>)> = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                let common = g.row(u).and(g.row(v));
                cliques::for_each_clique(g, &common, k - 1, &mut |c| {
                    subs.push((u, v, c.to_vec()));
                });
            }
        }
    }
    if subs.is_empty() {
        return Err(Error::NoInducedKMinus(k + 1));
    }
    let run_trial = |t: usize| -> f64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        rng.set_stream(t as u64 + 1);
        let phi = VertexOrdering::random(n, &mut rng);
        let ordered = subs
            .iter()
            .filter(|(u, v, c)| {
                let (lo, hi) = {
                    let (a, b) = (phi.position(*u), phi.position(*v));
                    (a.min(b), a.max(b))
                };
                c.iter().all(|&w| {
                    let p = phi.position(w);
                    lo < p && p < hi
                })
            })
            .count();
        ordered as f64 / subs.len() as f64
    };
    #[cfg(feature = "parallel")]
    let fractions: Vec<f64> = (0..trials).into_par_iter().map(run_trial).collect();
    #[cfg(not(feature = "parallel"))]
    let fractions: Vec<f64> = (0..trials).map(run_trial).collect();
    let mean_fraction = fractions.iter().sum::<f64>() / trials as f64;
    Ok(OrderedFractionEstimate {
        mean_fraction,
        subgraph_count: subs.len(),
        trials,
    })
}

//! Exact maximum clique by branch and bound over bitset candidate sets,
//! with a greedy coloring bound on each candidate set.

use crate::bits::Bits;

pub const DEFAULT_CLIQUE_CAP: usize = 64;

pub(super) fn clique_number(adj: &[Bits]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let mut best = 1;
    expand(adj, Bits::ones(n), 0, &mut best);
    best
}

fn expand(adj: &[Bits], mut cand: Bits, size: usize, best: &mut usize) {
    if !cand.any() {
        *best = (*best).max(size);
        return;
    }
    let order = color_order(adj, &cand);
    for &(v, color) in order.iter().rev() {
        if size + color <= *best {
            return;
        }
        let mut next = cand.clone();
        next.and_assign(&adj[v]);
        expand(adj, next, size + 1, best);
        cand.set(v, false);
    }
}

// Greedy sequential coloring; returns (vertex, color) with colors
// non-decreasing, so any suffix ending at color c contains at most a c-clique.
fn color_order(adj: &[Bits], cand: &Bits) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(cand.count_ones());
    let mut uncolored = cand.clone();
    let mut color = 0;
    while uncolored.any() {
        color += 1;
        let mut q = uncolored.clone();
        while let Some(v) = q.first_one() {
            q.set(v, false);
            q.and_not_assign(&adj[v]);
            uncolored.set(v, false);
            out.push((v, color));
        }
    }
    out
}

//! Maximum bipartite matching by augmenting paths, with Hall violators.

/// Result of a maximum matching between left vertices `0..adj.len()` and right vertices `0..64`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matching {
    /// `left[i]` is the right vertex matched to `i`.
    pub left: Vec<Option<usize>>,
    pub size: usize,
}

/// A set of left vertices with fewer neighbours than members.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HallViolator {
    /// Left vertices as a bitmask.
    pub left: u64,
    /// Their joint neighbourhood.
    pub neighbours: u64,
}

/// Kuhn's augmenting-path algorithm; `adj[i]` is the neighbour mask of left vertex `i`.
pub fn maximum_matching(adj: &[u64]) -> Matching {
    let mut right_to_left = [usize::MAX; 64];
    let mut left = vec![None; adj.len()];
    let mut size = 0;
    for i in 0..adj.len() {
        let mut seen = 0u64;
        if augment(i, adj, &mut seen, &mut right_to_left, &mut left) {
            size += 1;
        }
    }
    Matching { left, size }
}

fn augment(i: usize, adj: &[u64], seen: &mut u64, r2l: &mut [usize; 64], left: &mut [Option<usize>]) -> bool {
    let mut cand = adj[i] & !*seen;
    while cand != 0 {
        let j = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        *seen |= 1 << j;
        if r2l[j] == usize::MAX || augment(r2l[j], adj, seen, r2l, left) {
            r2l[j] = i;
            left[i] = Some(j);
            return true;
        }
    }
    false
}

/// Left vertices reachable by alternating paths from an unmatched left vertex,
/// and their neighbourhood; `None` when the matching covers the left side.
///
/// For a maximum matching the neighbourhood has exactly one element fewer.
pub fn hall_violator(adj: &[u64], m: &Matching) -> Option<HallViolator> {
    let start = m.left.iter().position(|x| x.is_none())?;
    let mut right_to_left = [usize::MAX; 64];
    for (i, r) in m.left.iter().enumerate() {
        if let Some(j) = r {
            right_to_left[*j] = i;
        }
    }
    let mut xs = 1u64 << start;
    let mut ns = 0u64;
    let mut stack = vec![start];
    while let Some(i) = stack.pop() {
        let mut fresh = adj[i] & !ns;
        ns |= fresh;
        while fresh != 0 {
            let j = fresh.trailing_zeros() as usize;
            fresh &= fresh - 1;
            let k = right_to_left[j];
            debug_assert!(k != usize::MAX, "a maximum matching leaves no augmenting path");
            if k != usize::MAX && xs >> k & 1 == 0 {
                xs |= 1 << k;
                stack.push(k);
            }
        }
    }
    Some(HallViolator { left: xs, neighbours: ns })
}

//! Brute-force oracles. Each one works from the raw cyclic flats or the raw
//! orientation matrix, without the library's rank, matching or canonical-form code.

#![allow(dead_code)]

use bo_core::{ElementSet, GroundSet, Matroid};
use rand::rngs::StdRng;
use rand::Rng;
use std::collections::{BTreeSet, HashSet};

/// Bases from the cyclic-flat inequalities `|B ∩ F| ≤ r(F)`.
pub fn oracle_bases(m: &Matroid) -> HashSet<u64> {
    let r = m.r();
    let flats: Vec<(u64, usize)> = m.cyclic_flats().iter().map(|f| (f.set.0, f.rank)).collect();
    let n = m.n();
    (0u64..1 << n)
        .filter(|b| b.count_ones() as usize == r)
        .filter(|b| flats.iter().all(|&(f, rk)| (b & f).count_ones() as usize <= rk))
        .collect()
}

/// `max |X ∩ B|` over bases.
pub fn oracle_rank(bases: &HashSet<u64>, x: u64) -> usize {
    bases.iter().map(|b| (b & x).count_ones() as usize).max().unwrap_or(0)
}

fn bits(x: u64) -> Vec<u64> {
    (0..64).filter(|i| x >> i & 1 == 1).map(|i| 1u64 << i).collect()
}

fn permutations(items: &mut Vec<u64>, k: usize, visit: &mut dyn FnMut(&[u64]) -> bool) -> bool {
    if k == items.len() {
        return visit(items);
    }
    for i in k..items.len() {
        items.swap(k, i);
        if permutations(items, k + 1, visit) {
            return true;
        }
        items.swap(k, i);
    }
    false
}

/// Some bijection `A − B → B − A` makes every swap of at most `k` elements a basis on both sides.
pub fn oracle_pair_orderable(bases: &HashSet<u64>, a: u64, b: u64, k: usize) -> bool {
    let xs = bits(a & !b);
    let mut ys = bits(b & !a);
    let m = xs.len();
    permutations(&mut ys, 0, &mut |sigma| {
        (1u32..1 << m).filter(|s| s.count_ones() as usize <= k).all(|s| {
            let (mut xb, mut yb) = (0, 0);
            for i in 0..m {
                if s >> i & 1 == 1 {
                    xb |= xs[i];
                    yb |= sigma[i];
                }
            }
            bases.contains(&((a & !xb) | yb)) && bases.contains(&((b & !yb) | xb))
        })
    })
}

pub fn oracle_k_bo(m: &Matroid, k: usize) -> bool {
    let bases: Vec<u64> = oracle_bases(m).into_iter().collect();
    let set: HashSet<u64> = bases.iter().copied().collect();
    bases
        .iter()
        .all(|&a| bases.iter().filter(|&&b| a < b).all(|&b| oracle_pair_orderable(&set, a, b, k)))
}

/// Integer determinant by fraction-free elimination.
pub fn determinant(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if a[k][k] == 0 {
            let Some(p) = (k + 1..n).find(|&i| a[i][k] != 0) else {
                return 0;
            };
            a.swap(k, p);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Spanning trees of `K_n` by the matrix-tree theorem.
pub fn complete_graph_trees(n: usize) -> i128 {
    let lap: Vec<Vec<i128>> = (0..n - 1)
        .map(|i| (0..n - 1).map(|j| if i == j { n as i128 - 1 } else { -1 }).collect())
        .collect();
    determinant(lap)
}

fn critical(o: &[Vec<bool>]) -> bool {
    let (s, t) = (o.len(), o[0].len());
    let rows = o.iter().all(|r| r.iter().any(|&v| v) && r.iter().any(|&v| !v));
    let cols = (0..t).all(|j| (0..s).any(|i| o[i][j]) && (0..s).any(|i| !o[i][j]));
    rows && cols
}

fn encode(o: &[Vec<bool>], rp: &[usize], cp: &[usize]) -> u64 {
    let mut code = 0u64;
    for &i in rp {
        for &j in cp {
            code = code << 1 | o[i][j] as u64;
        }
    }
    code
}

fn all_perms(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut items: Vec<u64> = (0..n as u64).collect();
    permutations(&mut items, 0, &mut |p| {
        out.push(p.iter().map(|&x| x as usize).collect());
        false
    });
    out
}

/// Least code over every relabelling of `X`, of `Y`, and (for `s = t`) the side swap.
fn brute_canonical(o: &[Vec<bool>], rps: &[Vec<usize>], cps: &[Vec<usize>]) -> u64 {
    let (s, t) = (o.len(), o[0].len());
    let mut views = vec![o.to_vec()];
    if s == t {
        views.push((0..t).map(|j| (0..s).map(|i| !o[i][j]).collect()).collect());
    }
    let mut best = u64::MAX;
    for v in &views {
        for rp in rps {
            for cp in cps {
                best = best.min(encode(v, rp, cp));
            }
        }
    }
    best
}

/// `(K, L)` proper and non-empty, `K → Y − L` and `L → X − K`.
pub fn oracle_has_obstruction(o: &[Vec<bool>]) -> bool {
    let (s, t) = (o.len(), o[0].len());
    (1u32..(1 << s) - 1).any(|k| {
        (1u32..(1 << t) - 1).any(|l| {
            (0..s).all(|i| {
                (0..t).all(|j| {
                    let (ik, jl) = (k >> i & 1 == 1, l >> j & 1 == 1);
                    match (ik, jl) {
                        (true, false) => o[i][j],
                        (false, true) => !o[i][j],
                        _ => true,
                    }
                })
            })
        })
    })
}

/// `(no obstruction, with obstruction)` classes of critical orientations of `K_{s,t}`.
pub fn oracle_table_row(s: usize, t: usize) -> (usize, usize) {
    let rps = all_perms(s);
    let cps = all_perms(t);
    let mut classes: BTreeSet<(u64, bool)> = BTreeSet::new();
    for code in 0u64..1 << (s * t) {
        let o: Vec<Vec<bool>> = (0..s).map(|i| (0..t).map(|j| code >> (i * t + j) & 1 == 1).collect()).collect();
        if !critical(&o) {
            continue;
        }
        classes.insert((brute_canonical(&o, &rps, &cps), oracle_has_obstruction(&o)));
    }
    let with = classes.iter().filter(|c| c.1).count();
    (classes.len() - with, with)
}

/// Random sparse paving matroid: greedily accepted `r`-sets meeting pairwise in at most `r − 2`.
/// Needs `n ≥ r + 2`, otherwise a circuit-hyperplane leaves a coloop.
pub fn random_sparse_paving(rng: &mut StdRng, r: usize, n: usize, tries: usize) -> Matroid {
    let mut chosen: Vec<ElementSet> = Vec::new();
    for _ in 0..tries {
        let mut s = ElementSet::EMPTY;
        while s.len() < r {
            s = s.with(rng.random_range(0..n));
        }
        if chosen.iter().all(|c| c.intersection(s).len() + 2 <= r) && !chosen.contains(&s) {
            chosen.push(s);
        }
    }
    let mut flats = vec![(ElementSet::EMPTY, 0), (ElementSet::full(n), r)];
    flats.extend(chosen.into_iter().map(|c| (c, r - 1)));
    Matroid::from_flats(GroundSet::indexed(n), flats).expect("sparse paving presentation")
}

/// Give `m` labels `prefix0, prefix1, ..` so it can be summed with another matroid.
pub fn relabel(m: &Matroid, prefix: &str) -> Matroid {
    let g = GroundSet::new((0..m.n()).map(|i| format!("{prefix}{i}")).collect()).unwrap();
    m.relabeled(g).unwrap()
}

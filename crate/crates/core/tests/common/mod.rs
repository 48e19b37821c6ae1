#![allow(dead_code)]

//! Random generators and brute-force oracles shared by the integration tests.

use std::collections::BTreeSet;

use derange_core::{DerangementSet, Permutation, SimpleDigraph};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn perm(n: usize, cycles: &[&[usize]]) -> Permutation {
    Permutation::from_cycles(n, cycles).unwrap()
}

pub fn set(n: usize, elems: &[&[&[usize]]]) -> DerangementSet {
    DerangementSet::new(elems.iter().map(|c| perm(n, c)).collect()).unwrap()
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::new(images).unwrap()
}

/// Uniform derangement by rejection; `n >= 2`.
pub fn random_derangement<R: Rng>(rng: &mut R, n: usize) -> Permutation {
    loop {
        let p = random_perm(rng, n);
        if (0..n).all(|x| p.apply(x) != x) {
            return p;
        }
    }
}

/// Up to `k` distinct random derangements.
pub fn random_set<R: Rng>(rng: &mut R, n: usize, k: usize) -> DerangementSet {
    DerangementSet::new_dedup((0..k).map(|_| random_derangement(rng, n)).collect()).unwrap()
}

/// Random `k`-regular simple graph on `n` vertices: a circulant scrambled by
/// double-edge swaps. `None` when no circulant of that valency exists.
pub fn random_regular_graph<R: Rng>(rng: &mut R, n: usize, k: usize) -> Option<SimpleDigraph> {
    if k >= n || (k % 2 == 1 && n % 2 == 1) {
        return None;
    }
    let mut edges = BTreeSet::new();
    let mut offsets: Vec<usize> = (1..=k / 2).collect();
    if k % 2 == 1 {
        offsets.push(n / 2);
    }
    for v in 0..n {
        for &o in &offsets {
            let w = (v + o) % n;
            edges.insert((v.min(w), v.max(w)));
        }
    }
    for _ in 0..(4 * n * k) {
        let list: Vec<(usize, usize)> = edges.iter().copied().collect();
        let (a, b) = list[rng.random_range(0..list.len())];
        let (mut c, mut d) = list[rng.random_range(0..list.len())];
        if rng.random_bool(0.5) {
            std::mem::swap(&mut c, &mut d);
        }
        let e1 = (a.min(d), a.max(d));
        let e2 = (c.min(b), c.max(b));
        if a == d || c == b || a == c || b == d || edges.contains(&e1) || edges.contains(&e2) {
            continue;
        }
        edges.remove(&(a, b));
        edges.remove(&(c.min(d), c.max(d)));
        edges.insert(e1);
        edges.insert(e2);
    }
    let g = SimpleDigraph::from_edges(n, edges).unwrap();
    assert_eq!(g.is_regular(), Some(k));
    Some(g)
}

/// Random `k`-regular simple digraph: the union of `k` derangements whose
/// graphs are pairwise arc-disjoint.
pub fn random_regular_digraph<R: Rng>(rng: &mut R, n: usize, k: usize) -> SimpleDigraph {
    'retry: loop {
        let mut arcs = BTreeSet::new();
        for _ in 0..k {
            let mut tries = 0;
            loop {
                tries += 1;
                if tries > 1000 {
                    continue 'retry;
                }
                let p = random_derangement(rng, n);
                if (0..n).all(|x| !arcs.contains(&(x, p.apply(x)))) {
                    arcs.extend((0..n).map(|x| (x, p.apply(x))));
                    break;
                }
            }
        }
        return SimpleDigraph::new(n, arcs).unwrap();
    }
}

/// Random simple graph with edge probability `p`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SimpleDigraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleDigraph::from_edges(n, edges).unwrap()
}

pub fn complete(n: usize) -> SimpleDigraph {
    SimpleDigraph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap()
}

pub fn cycle(n: usize) -> SimpleDigraph {
    SimpleDigraph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
}

pub fn petersen() -> SimpleDigraph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    SimpleDigraph::from_edges(10, edges).unwrap()
}

/// Exhaustive perfect-matching existence: match the smallest free vertex in
/// every possible way.
pub fn brute_has_perfect_matching(g: &SimpleDigraph) -> bool {
    fn go(g: &SimpleDigraph, used: &mut Vec<bool>) -> bool {
        let Some(u) = used.iter().position(|&b| !b) else {
            return true;
        };
        used[u] = true;
        for v in 0..used.len() {
            if !used[v] && g.has_arc(u, v) {
                used[v] = true;
                if go(g, used) {
                    return true;
                }
                used[v] = false;
            }
        }
        used[u] = false;
        false
    }
    go(g, &mut vec![false; g.vertex_count()])
}

/// Arcs `(x, x^s)` computed directly, deduplicated and sorted.
pub fn arcs_of(s: &DerangementSet) -> Vec<(usize, usize)> {
    let n = s.domain_size();
    let set: BTreeSet<(usize, usize)> = s
        .iter()
        .flat_map(|p| (0..n).map(move |x| (x, p.images()[x])))
        .collect();
    set.into_iter().collect()
}

/// `g^-1 s g` computed point by point from image arrays.
pub fn conjugate_by(s: &Permutation, g: &Permutation) -> Permutation {
    let n = s.len();
    let mut g_inv = vec![0; n];
    for x in 0..n {
        g_inv[g.images()[x]] = x;
    }
    Permutation::new((0..n).map(|x| g.images()[s.images()[g_inv[x]]]).collect()).unwrap()
}

/// Every permutation of `{0, .., n-1}`, lexicographic.
pub fn all_perms(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::new(prefix.clone()).unwrap());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Exhaustive maximum matching size: the smallest free vertex is either left
/// unmatched or matched to each free neighbour in turn.
pub fn brute_max_matching(g: &SimpleDigraph) -> usize {
    fn go(g: &SimpleDigraph, used: &mut Vec<bool>) -> usize {
        let Some(u) = used.iter().position(|&b| !b) else {
            return 0;
        };
        used[u] = true;
        let mut best = go(g, used);
        for v in 0..used.len() {
            if !used[v] && g.has_arc(u, v) {
                used[v] = true;
                best = best.max(1 + go(g, used));
                used[v] = false;
            }
        }
        used[u] = false;
        best
    }
    go(g, &mut vec![false; g.vertex_count()])
}

/// A regular subgroup of degree `m`: the rotations conjugated by a random
/// relabelling.
pub fn random_regular_subgroup<R: Rng>(rng: &mut R, m: usize) -> derange_core::RegularSubgroup {
    let h = random_perm(rng, m);
    let elements = derange_core::RegularSubgroup::cyclic(m)
        .elements()
        .iter()
        .map(|u| conjugate_by(u, &h))
        .collect();
    derange_core::RegularSubgroup::new(elements).unwrap()
}

/// Non-empty random subset of the non-identity elements of a regular subgroup.
pub fn random_regular_subset<R: Rng>(rng: &mut R, m: usize, k: usize) -> DerangementSet {
    let u = random_regular_subgroup(rng, m);
    let mut pool: Vec<Permutation> = u
        .elements()
        .iter()
        .filter(|p| !p.is_identity())
        .cloned()
        .collect();
    pool.shuffle(rng);
    pool.truncate(k.clamp(1, m - 1));
    DerangementSet::new(pool).unwrap()
}

/// Product digraph on `X × Y` from the four definitions, vertex `(x, y)` as `x·|Y| + y`.
pub fn brute_product(
    g: &SimpleDigraph,
    h: &SimpleDigraph,
    kind: derange_core::ProductKind,
) -> SimpleDigraph {
    use derange_core::ProductKind::*;
    let (nx, ny) = (g.vertex_count(), h.vertex_count());
    let mut arcs = Vec::new();
    for x1 in 0..nx {
        for y1 in 0..ny {
            for x2 in 0..nx {
                for y2 in 0..ny {
                    let a = g.has_arc(x1, x2);
                    let b = h.has_arc(y1, y2);
                    let cart = (a && y1 == y2) || (b && x1 == x2);
                    let arc = match kind {
                        Cartesian => cart,
                        Tensor => a && b,
                        Strong => cart || (a && b),
                        Lexicographic => a || (x1 == x2 && b),
                    };
                    if arc {
                        arcs.push((x1 * ny + y1, x2 * ny + y2));
                    }
                }
            }
        }
    }
    SimpleDigraph::new(nx * ny, arcs).unwrap()
}

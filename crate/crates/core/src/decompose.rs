//! Recovering derangement sets from regular digraphs and graphs.
//!
//! * [`digraph_to_derangements`] splits a `k`-regular simple digraph into `k`
//!   derangements with pairwise disjoint graphs, peeling one perfect matching of
//!   the bipartite double cover at a time.
//! * [`graph_to_closed_set`] realizes a `k`-regular simple graph as `DA(X, S)` with
//!   `S` closed and self-inverse: a perfect matching when `k` is odd, a
//!   2-factorization of the rest, and an orientation of every 2-factor cycle.
//!
//! All searches scan vertices and neighbours in ascending order, so outputs are
//! deterministic.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::dad::{self, DerangementSet};
use crate::digraph::SimpleDigraph;
use crate::perm::Permutation;
use crate::{Error, Result};

/// A set of pairwise disjoint edges `{u, v}`, stored as `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

impl Matching {
    /// Builds a matching, normalizing pair order; fails if a vertex repeats.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        pairs.sort_unstable();
        let mut seen: Vec<usize> = pairs.iter().flat_map(|&(u, v)| [u, v]).collect();
        seen.sort_unstable();
        if let Some(w) = seen.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::InvalidPair(w[0], w[0]));
        }
        if let Some(&(u, v)) = pairs.iter().find(|(u, v)| u == v) {
            return Err(Error::InvalidPair(u, v));
        }
        Ok(Matching { pairs })
    }

    fn from_mates(mate: &[usize]) -> Self {
        let pairs = mate
            .iter()
            .enumerate()
            .filter(|&(u, &v)| v != NONE && u < v)
            .map(|(u, &v)| (u, v))
            .collect();
        Matching { pairs }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn is_perfect(&self, n: usize) -> bool {
        2 * self.pairs.len() == n
    }

    /// Every pair is an edge of `graph`.
    pub fn is_valid_in(&self, graph: &SimpleDigraph) -> bool {
        self.pairs
            .iter()
            .all(|&(u, v)| graph.has_arc(u, v) && graph.has_arc(v, u))
    }

    /// The fixed-point-free involution swapping matched vertices; only for
    /// perfect matchings.
    pub fn involution(&self, n: usize) -> Option<Permutation> {
        if !self.is_perfect(n) || n == 0 {
            return None;
        }
        Permutation::from_cycles(
            n,
            &self.pairs.iter().map(|&(u, v)| [u, v]).collect::<Vec<_>>(),
        )
        .ok()
    }
}

/// Outcome of [`perfect_matching`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PerfectMatching {
    Found(Matching),
    /// No perfect matching exists; `maximum` is a maximum matching.
    Deficient {
        maximum: Matching,
    },
}

/// A 2-regular spanning subgraph, as undirected edges `(u, v)` with `u < v`, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoFactor {
    n: usize,
    edges: Vec<(usize, usize)>,
}

impl TwoFactor {
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn to_digraph(&self) -> SimpleDigraph {
        SimpleDigraph::from_edges(self.n, self.edges.iter().copied()).expect("simple edges")
    }

    /// Vertex cycles, each starting at its minimum vertex and stepping first to
    /// the smaller of its two neighbours; cycles sorted by minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut nbrs = vec![Vec::with_capacity(2); self.n];
        for &(u, v) in &self.edges {
            nbrs[u].push(v);
            nbrs[v].push(u);
        }
        for list in &mut nbrs {
            list.sort_unstable();
        }
        let mut seen = vec![false; self.n];
        let mut cycles = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut prev = start;
            let mut cur = nbrs[start][0];
            while cur != start {
                seen[cur] = true;
                cycle.push(cur);
                let next = if nbrs[cur][0] == prev {
                    nbrs[cur][1]
                } else {
                    nbrs[cur][0]
                };
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// The permutation traversing every cycle in the orientation of [`TwoFactor::cycles`].
    pub fn orientation(&self) -> Permutation {
        let mut images = vec![0; self.n];
        for cycle in self.cycles() {
            for (i, &x) in cycle.iter().enumerate() {
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Permutation::from_images_unchecked(images)
    }
}

const NONE: usize = usize::MAX;

/// Kuhn's augmenting-path matching on a bipartite graph given by left-side
/// adjacency lists (ascending). Returns `left -> right`, `NONE` where unmatched.
fn bipartite_matching(adj: &[Vec<usize>], right_size: usize) -> Vec<usize> {
    fn augment(
        u: usize,
        adj: &[Vec<usize>],
        visited: &mut [bool],
        match_right: &mut [usize],
        match_left: &mut [usize],
    ) -> bool {
        for &v in &adj[u] {
            if visited[v] {
                continue;
            }
            visited[v] = true;
            if match_right[v] == NONE
                || augment(match_right[v], adj, visited, match_right, match_left)
            {
                match_right[v] = u;
                match_left[u] = v;
                return true;
            }
        }
        false
    }

    let mut match_left = vec![NONE; adj.len()];
    let mut match_right = vec![NONE; right_size];
    let mut visited = vec![false; right_size];
    for u in 0..adj.len() {
        visited.iter_mut().for_each(|v| *v = false);
        augment(u, adj, &mut visited, &mut match_right, &mut match_left);
    }
    match_left
}

fn regular_valency(g: &SimpleDigraph) -> Result<usize> {
    match g.is_regular() {
        None => Err(Error::NotRegular),
        Some(0) => Err(Error::ZeroValency),
        Some(k) => Ok(k),
    }
}

/// A derangement whose graph `{(x, x^g)}` lies inside the arcs of the regular
/// digraph `g`, read off a perfect matching of its bipartite double cover.
pub fn one_regular_subdigraph(graph: &SimpleDigraph) -> Result<Permutation> {
    regular_valency(graph)?;
    let n = graph.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| graph.out_neighbours(v).to_vec()).collect();
    let mate = bipartite_matching(&adj, n);
    if mate.contains(&NONE) {
        return Err(Error::Internal(
            "regular bipartite double cover without perfect matching",
        ));
    }
    let g = Permutation::new(mate).map_err(|_| Error::Internal("matching is not a bijection"))?;
    debug_assert!(g.is_derangement());
    Ok(g)
}

/// Splits a `k`-regular simple digraph into `k` derangements whose graphs
/// partition its arcs, so that `build_da` of the result is the input.
pub fn digraph_to_derangements(graph: &SimpleDigraph) -> Result<DerangementSet> {
    let k = regular_valency(graph)?;
    let n = graph.vertex_count();
    let mut rest = graph.clone();
    let mut elements = Vec::with_capacity(k);
    for remaining in (0..k).rev() {
        let g = one_regular_subdigraph(&rest)?;
        let taken = SimpleDigraph::new(n, (0..n).map(|x| (x, g.apply(x))))?;
        rest = rest.without_arcs(&taken);
        let ok = if remaining == 0 {
            rest.arc_count() == 0
        } else {
            rest.is_regular() == Some(remaining)
        };
        if !ok {
            return Err(Error::Internal("peeled digraph lost regularity"));
        }
        elements.push(g);
    }
    let set = DerangementSet::new(elements)?;
    if dad::build_da(&set) != *graph {
        return Err(Error::Internal(
            "derangement set does not rebuild the digraph",
        ));
    }
    Ok(set)
}

fn require_symmetric(graph: &SimpleDigraph) -> Result<()> {
    if graph.is_symmetric() {
        Ok(())
    } else {
        Err(Error::NotSymmetric)
    }
}

/// Edmonds' blossom algorithm for maximum matching in a general graph.
fn blossom_mates(graph: &SimpleDigraph) -> Vec<usize> {
    let n = graph.vertex_count();
    let mut mate = vec![NONE; n];
    let mut parent = vec![NONE; n];
    let mut base: Vec<usize> = (0..n).collect();
    let mut used = vec![false; n];
    let mut blossom = vec![false; n];
    let mut queue = VecDeque::new();

    fn lca(mut a: usize, mut b: usize, mate: &[usize], base: &[usize], parent: &[usize]) -> usize {
        let mut on_path = vec![false; mate.len()];
        loop {
            a = base[a];
            on_path[a] = true;
            if mate[a] == NONE {
                break;
            }
            a = parent[mate[a]];
        }
        loop {
            b = base[b];
            if on_path[b] {
                return b;
            }
            b = parent[mate[b]];
        }
    }

    fn mark_path(
        mut v: usize,
        b: usize,
        mut child: usize,
        mate: &[usize],
        base: &[usize],
        parent: &mut [usize],
        blossom: &mut [bool],
    ) {
        while base[v] != b {
            blossom[base[v]] = true;
            blossom[base[mate[v]]] = true;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    }

    for root in 0..n {
        if mate[root] != NONE {
            continue;
        }
        parent.iter_mut().for_each(|p| *p = NONE);
        used.iter_mut().for_each(|u| *u = false);
        for (i, b) in base.iter_mut().enumerate() {
            *b = i;
        }
        queue.clear();
        used[root] = true;
        queue.push_back(root);
        let mut endpoint = NONE;
        'search: while let Some(v) = queue.pop_front() {
            for &to in graph.out_neighbours(v) {
                if base[v] == base[to] || mate[v] == to {
                    continue;
                }
                if to == root || (mate[to] != NONE && parent[mate[to]] != NONE) {
                    let cur = lca(v, to, &mate, &base, &parent);
                    blossom.iter_mut().for_each(|b| *b = false);
                    mark_path(v, cur, to, &mate, &base, &mut parent, &mut blossom);
                    mark_path(to, cur, v, &mate, &base, &mut parent, &mut blossom);
                    for i in 0..n {
                        if blossom[base[i]] {
                            base[i] = cur;
                            if !used[i] {
                                used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if parent[to] == NONE {
                    parent[to] = v;
                    if mate[to] == NONE {
                        endpoint = to;
                        break 'search;
                    }
                    used[mate[to]] = true;
                    queue.push_back(mate[to]);
                }
            }
        }
        let mut v = endpoint;
        while v != NONE {
            let pv = parent[v];
            let next = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = next;
        }
    }
    mate
}

/// A maximum matching of a simple graph (symmetric digraph).
pub fn maximum_matching(graph: &SimpleDigraph) -> Result<Matching> {
    require_symmetric(graph)?;
    Ok(Matching::from_mates(&blossom_mates(graph)))
}

/// A perfect matching when one exists, otherwise a maximum matching as certificate.
pub fn perfect_matching(graph: &SimpleDigraph) -> Result<PerfectMatching> {
    let matching = maximum_matching(graph)?;
    Ok(if matching.is_perfect(graph.vertex_count()) {
        PerfectMatching::Found(matching)
    } else {
        PerfectMatching::Deficient { maximum: matching }
    })
}

/// Eulerian orientation: walks an Euler circuit (Hierholzer, neighbours
/// ascending) in every component and orients each edge along it.
fn euler_orientation(graph: &SimpleDigraph) -> Vec<(usize, usize)> {
    let n = graph.vertex_count();
    let edges = graph.edges();
    let mut incident: Vec<Vec<(usize, usize)>> = vec![Vec::new(); n];
    for (id, &(u, v)) in edges.iter().enumerate() {
        incident[u].push((v, id));
        incident[v].push((u, id));
    }
    for list in &mut incident {
        list.sort_unstable();
    }
    let mut used = vec![false; edges.len()];
    let mut next = vec![0usize; n];
    let mut oriented = Vec::with_capacity(edges.len());
    for start in 0..n {
        if next[start] >= incident[start].len() {
            continue;
        }
        let mut stack = vec![start];
        let mut circuit = Vec::new();
        while let Some(&v) = stack.last() {
            while next[v] < incident[v].len() && used[incident[v][next[v]].1] {
                next[v] += 1;
            }
            if next[v] == incident[v].len() {
                circuit.push(v);
                stack.pop();
            } else {
                let (w, id) = incident[v][next[v]];
                used[id] = true;
                stack.push(w);
            }
        }
        circuit.reverse();
        oriented.extend(circuit.windows(2).map(|w| (w[0], w[1])));
    }
    debug_assert_eq!(oriented.len(), edges.len());
    oriented
}

/// Splits a `2m`-regular simple graph into `m` edge-disjoint 2-factors.
pub fn two_factorization(graph: &SimpleDigraph) -> Result<Vec<TwoFactor>> {
    require_symmetric(graph)?;
    let k = regular_valency(graph)?;
    if k % 2 == 1 {
        return Err(Error::OddValency { valency: k });
    }
    let n = graph.vertex_count();
    let mut out: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (u, v) in euler_orientation(graph) {
        out[u].push(v);
    }
    for list in &mut out {
        list.sort_unstable();
        if list.len() != k / 2 {
            return Err(Error::Internal("Euler orientation is unbalanced"));
        }
    }
    let mut factors = Vec::with_capacity(k / 2);
    for remaining in (0..k / 2).rev() {
        let mate = bipartite_matching(&out, n);
        if mate.contains(&NONE) {
            return Err(Error::Internal(
                "regular bipartite graph without perfect matching",
            ));
        }
        let mut edges: Vec<(usize, usize)> = mate
            .iter()
            .enumerate()
            .map(|(u, &v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        edges.sort_unstable();
        for (u, &v) in mate.iter().enumerate() {
            out[u].retain(|&w| w != v);
        }
        if out.iter().any(|l| l.len() != remaining) {
            return Err(Error::Internal("peeled bipartite graph lost regularity"));
        }
        factors.push(TwoFactor { n, edges });
    }
    Ok(factors)
}

/// Realizes a regular simple graph as `DA(X, S)` with `S` closed and self-inverse.
///
/// For valency `2m + 1` the graph must have a perfect matching; otherwise the
/// error carries a maximum matching.
pub fn graph_to_closed_set(graph: &SimpleDigraph) -> Result<DerangementSet> {
    require_symmetric(graph)?;
    let k = regular_valency(graph)?;
    let n = graph.vertex_count();
    let mut even_part = graph.clone();
    let mut involution = None;
    if k % 2 == 1 {
        match perfect_matching(graph)? {
            PerfectMatching::Found(m) => {
                let inv = m.involution(n).expect("perfect matching");
                let arcs = SimpleDigraph::from_edges(n, m.pairs().iter().copied())?;
                even_part = graph.without_arcs(&arcs);
                involution = Some(inv);
            }
            PerfectMatching::Deficient { maximum } => {
                return Err(Error::NoPerfectMatching { maximum })
            }
        }
    }
    let mut elements = Vec::with_capacity(k);
    if k >= 2 {
        for factor in two_factorization(&even_part)? {
            let g = factor.orientation();
            let g_inv = g.inverse();
            elements.push(g);
            elements.push(g_inv);
        }
    }
    elements.extend(involution);
    let set = DerangementSet::new(elements)?;
    if !(dad::is_closed(&set) && dad::is_self_inverse(&set)) {
        return Err(Error::Internal(
            "realized set is not closed and self-inverse",
        ));
    }
    if dad::build_da(&set) != *graph {
        return Err(Error::Internal("realized set does not rebuild the graph"));
    }
    Ok(set)
}

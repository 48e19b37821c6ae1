//! Simple digraphs: vertex count plus a sorted, duplicate-free, loop-free arc set.
//!
//! A simple graph is the symmetric special case, where every arc `(u, v)`
//! comes with its reverse `(v, u)`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::perm::Permutation;
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleDigraph {
    n: usize,
    arcs: Vec<(usize, usize)>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

/// Out- and in-valency of every vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValencyProfile {
    pub out_valencies: Vec<usize>,
    pub in_valencies: Vec<usize>,
}

impl ValencyProfile {
    pub fn is_constant_out(&self) -> Option<usize> {
        constant(&self.out_valencies)
    }

    pub fn is_constant_in(&self) -> Option<usize> {
        constant(&self.in_valencies)
    }
}

fn constant(values: &[usize]) -> Option<usize> {
    let first = *values.first()?;
    values.iter().all(|&v| v == first).then_some(first)
}

/// Outcome of [`SimpleDigraph::connectivity_classes`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Connectivity {
    /// Reachability is an equivalence relation with these classes.
    Classes(Vec<Vec<usize>>),
    /// `from` reaches `to`, but `to` does not reach `from`.
    NotEquivalence { from: usize, to: usize },
}

impl SimpleDigraph {
    /// Builds a digraph from arbitrary-order arcs; loops, duplicates and
    /// out-of-range endpoints are rejected.
    pub fn new(n: usize, arcs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut arcs: Vec<(usize, usize)> = arcs.into_iter().collect();
        for &(u, v) in &arcs {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, n });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
        }
        arcs.sort_unstable();
        if let Some(w) = arcs.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateArc(w[0].0, w[0].1));
        }
        Ok(Self::from_sorted(n, arcs))
    }

    /// Builds a symmetric digraph from undirected edges, each given once.
    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let arcs: Vec<(usize, usize)> = edges
            .into_iter()
            .flat_map(|(u, v)| [(u, v), (v, u)])
            .collect();
        Self::new(n, arcs)
    }

    /// Like [`SimpleDigraph::new`] but silently drops duplicate arcs.
    pub(crate) fn from_arcs_dedup(n: usize, mut arcs: Vec<(usize, usize)>) -> Self {
        arcs.sort_unstable();
        arcs.dedup();
        debug_assert!(arcs.iter().all(|&(u, v)| u != v && u < n && v < n));
        Self::from_sorted(n, arcs)
    }

    fn from_sorted(n: usize, arcs: Vec<(usize, usize)>) -> Self {
        let mut out_adj = vec![Vec::new(); n];
        let mut in_adj = vec![Vec::new(); n];
        for &(u, v) in &arcs {
            out_adj[u].push(v);
            in_adj[v].push(u);
        }
        for list in &mut in_adj {
            list.sort_unstable();
        }
        SimpleDigraph {
            n,
            arcs,
            out_adj,
            in_adj,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arcs(&self) -> &[(usize, usize)] {
        &self.arcs
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    /// Edges `{u, v}` with `u < v` whose arcs are present in both directions.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.arcs
            .iter()
            .copied()
            .filter(|&(u, v)| u < v && self.has_arc(v, u))
            .collect()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && self.out_adj[u].binary_search(&v).is_ok()
    }

    /// Out-neighbours of `v`, ascending.
    pub fn out_neighbours(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// In-neighbours of `v`, ascending.
    pub fn in_neighbours(&self, v: usize) -> &[usize] {
        &self.in_adj[v]
    }

    pub fn is_symmetric(&self) -> bool {
        self.arcs.iter().all(|&(u, v)| self.has_arc(v, u))
    }

    pub fn valency_profile(&self) -> ValencyProfile {
        ValencyProfile {
            out_valencies: self.out_adj.iter().map(Vec::len).collect(),
            in_valencies: self.in_adj.iter().map(Vec::len).collect(),
        }
    }

    /// The common valency when every out- and in-valency equals the same `k`.
    pub fn is_regular(&self) -> Option<usize> {
        let profile = self.valency_profile();
        let k = profile.is_constant_out()?;
        (profile.is_constant_in()? == k).then_some(k)
    }

    /// Sub-digraph induced on `part`, relabelled order-preservingly.
    pub fn induced(&self, part: &[usize]) -> Result<SimpleDigraph> {
        let mut sorted = part.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut label = vec![usize::MAX; self.n];
        for (i, &x) in sorted.iter().enumerate() {
            if x >= self.n {
                return Err(Error::PointOutOfRange {
                    point: x,
                    n: self.n,
                });
            }
            label[x] = i;
        }
        let arcs = self
            .arcs
            .iter()
            .filter(|&&(u, v)| label[u] != usize::MAX && label[v] != usize::MAX)
            .map(|&(u, v)| (label[u], label[v]))
            .collect();
        Ok(Self::from_arcs_dedup(sorted.len(), arcs))
    }

    /// Image of the digraph under a vertex permutation: arcs `(u^g, v^g)`.
    pub fn relabel(&self, g: &Permutation) -> Result<SimpleDigraph> {
        if g.len() != self.n {
            return Err(Error::DomainMismatch {
                left: self.n,
                right: g.len(),
            });
        }
        let arcs = self
            .arcs
            .iter()
            .map(|&(u, v)| (g.apply(u), g.apply(v)))
            .collect();
        Ok(Self::from_arcs_dedup(self.n, arcs))
    }

    /// Arc-set difference `self \ other` on the same vertex set.
    pub fn without_arcs(&self, other: &SimpleDigraph) -> SimpleDigraph {
        let arcs = self
            .arcs
            .iter()
            .copied()
            .filter(|&(u, v)| !other.has_arc(u, v))
            .collect();
        Self::from_sorted(self.n, arcs)
    }

    fn reachable_from(&self, start: usize) -> Vec<bool> {
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.out_adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        seen
    }

    /// Classes of the directed reachability relation when it is symmetric,
    /// otherwise a witness pair.
    pub fn connectivity_classes(&self) -> Connectivity {
        let reach: Vec<Vec<bool>> = (0..self.n).map(|x| self.reachable_from(x)).collect();
        for (x, row) in reach.iter().enumerate() {
            if let Some(y) = (0..self.n).find(|&y| row[y] && !reach[y][x]) {
                return Connectivity::NotEquivalence { from: x, to: y };
            }
        }
        let mut assigned = vec![false; self.n];
        let mut classes = Vec::new();
        for x in 0..self.n {
            if assigned[x] {
                continue;
            }
            let class: Vec<usize> = (0..self.n).filter(|&y| reach[x][y]).collect();
            for &y in &class {
                assigned[y] = true;
            }
            classes.push(class);
        }
        Connectivity::Classes(classes)
    }

    /// Connected components of the underlying undirected graph.
    pub fn weak_components(&self) -> Vec<Vec<usize>> {
        let mut comp = vec![usize::MAX; self.n];
        let mut result = Vec::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = result.len();
            comp[start] = id;
            let mut members = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &y in self.out_adj[x].iter().chain(&self.in_adj[x]) {
                    if comp[y] == usize::MAX {
                        comp[y] = id;
                        members.push(y);
                        queue.push_back(y);
                    }
                }
            }
            members.sort_unstable();
            result.push(members);
        }
        result
    }
}

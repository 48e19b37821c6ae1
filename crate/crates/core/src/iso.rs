//! Isomorphisms and automorphisms of derangement action digraphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::dad::{build_da, DerangementSet};
use crate::digraph::SimpleDigraph;
use crate::error::guard;
use crate::perm::{check_same_domain, Permutation};
use crate::{Error, Result};

/// Largest vertex count accepted by the brute-force automorphism search.
pub const AUT_MAX_VERTICES: usize = 10;

/// The automorphism group of a digraph, elements in lexicographic order of
/// their image arrays.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AutGroup {
    elements: Vec<Permutation>,
}

impl AutGroup {
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Orbit of `v` under the group, ascending.
    pub fn orbit(&self, v: usize) -> Vec<usize> {
        let mut orbit: Vec<usize> = self.elements.iter().map(|g| g.apply(v)).collect();
        orbit.sort_unstable();
        orbit.dedup();
        orbit
    }

    pub fn is_transitive(&self) -> bool {
        let n = self.elements[0].len();
        self.orbit(0).len() == n
    }

    /// Identity present, closed under composition and inverses.
    pub fn satisfies_group_axioms(&self) -> bool {
        let n = self.elements[0].len();
        self.contains(&Permutation::identity(n))
            && self.elements.iter().all(|a| {
                self.contains(&a.inverse())
                    && self
                        .elements
                        .iter()
                        .all(|b| a.compose(b).is_ok_and(|c| self.contains(&c)))
            })
    }
}

/// Whether `g` maps `DA(X, S)` onto `DA(X, T)`.
///
/// Decided pointwise (`x^{S^g} = x^T` for every `x`) and by comparing arc
/// sets; the two must agree, and a disagreement panics.
pub fn is_isomorphism(g: &Permutation, s: &DerangementSet, t: &DerangementSet) -> Result<bool> {
    if s.domain_size() != t.domain_size() {
        return Err(Error::DomainMismatch {
            left: s.domain_size(),
            right: t.domain_size(),
        });
    }
    check_same_domain(g, &s.elements()[0])?;
    let conj = s.conjugate(g)?;
    let pointwise = (0..s.domain_size()).all(|x| conj.out_images(x) == t.out_images(x));
    let arcwise = build_da(s).relabel(g)? == build_da(t);
    assert_eq!(pointwise, arcwise, "isomorphism tests disagree");
    Ok(pointwise)
}

/// All automorphisms of a digraph by backtracking over vertex images, pruned
/// by valency and by adjacency with already-placed vertices.
pub fn automorphisms(graph: &SimpleDigraph) -> Result<AutGroup> {
    let n = graph.vertex_count();
    guard("vertex count", n, AUT_MAX_VERTICES)?;
    if n == 0 {
        return Err(Error::Empty);
    }
    let profile = graph.valency_profile();
    let signature: Vec<(usize, usize)> = (0..n)
        .map(|v| (profile.out_valencies[v], profile.in_valencies[v]))
        .collect();

    struct Search<'a> {
        graph: &'a SimpleDigraph,
        signature: Vec<(usize, usize)>,
        image: Vec<usize>,
        used: Vec<bool>,
        found: Vec<Permutation>,
    }

    impl Search<'_> {
        fn fits(&self, v: usize, w: usize) -> bool {
            if self.used[w] || self.signature[v] != self.signature[w] {
                return false;
            }
            (0..v).all(|u| {
                let gu = self.image[u];
                self.graph.has_arc(u, v) == self.graph.has_arc(gu, w)
                    && self.graph.has_arc(v, u) == self.graph.has_arc(w, gu)
            })
        }

        fn extend(&mut self, v: usize) {
            let n = self.image.len();
            if v == n {
                self.found
                    .push(Permutation::from_images_unchecked(self.image.clone()));
                return;
            }
            for w in 0..n {
                if self.fits(v, w) {
                    self.image[v] = w;
                    self.used[w] = true;
                    self.extend(v + 1);
                    self.used[w] = false;
                }
            }
        }
    }

    let mut search = Search {
        graph,
        signature,
        image: vec![0; n],
        used: vec![false; n],
        found: Vec::new(),
    };
    search.extend(0);
    Ok(AutGroup {
        elements: search.found,
    })
}

/// `Aut(DA(X, S))`, for at most [`AUT_MAX_VERTICES`] points.
pub fn automorphism_group(s: &DerangementSet) -> Result<AutGroup> {
    guard("vertex count", s.domain_size(), AUT_MAX_VERTICES)?;
    automorphisms(&build_da(s))
}

/// Whether `g` normalizes `S`, i.e. `S^g = S` as sets.
pub fn normalizer_in_aut_check(s: &DerangementSet, g: &Permutation) -> Result<bool> {
    Ok(s.conjugate(g)?.same_set(s))
}

pub fn is_vertex_transitive(s: &DerangementSet) -> Result<bool> {
    Ok(automorphism_group(s)?.is_transitive())
}

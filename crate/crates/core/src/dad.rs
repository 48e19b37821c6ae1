//! Derangement sets and their action digraphs.
//!
//! [`build_da`] turns a [`DerangementSet`] `S` on `{0, .., n-1}` into the simple
//! digraph with arcs `(x, x^s)`. The remaining functions decide when that digraph
//! is multiplicity-free, a graph, or regular of valency `|S|`, and split it into
//! connected components that are themselves derangement action digraphs.

use alloc::vec;
use alloc::vec::Vec;

use crate::digraph::{Connectivity, SimpleDigraph, ValencyProfile};
use crate::error::guard;
use crate::perm::{self, Permutation};
use crate::{Error, Result};

/// A non-empty, duplicate-free, ordered list of derangements on a common domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DerangementSet {
    n: usize,
    elements: Vec<Permutation>,
}

impl DerangementSet {
    /// Rejects empty input, mixed domains, permutations with fixed points and
    /// repeated elements.
    pub fn new(elements: Vec<Permutation>) -> Result<Self> {
        let n = elements.first().ok_or(Error::Empty)?.len();
        for (index, p) in elements.iter().enumerate() {
            if p.len() != n {
                return Err(Error::DomainMismatch {
                    left: n,
                    right: p.len(),
                });
            }
            if let Some(point) = p.fixed_point() {
                return Err(Error::NotDerangement { index, point });
            }
        }
        let mut order: Vec<usize> = (0..elements.len()).collect();
        order.sort_by(|&a, &b| elements[a].cmp(&elements[b]).then(a.cmp(&b)));
        for w in order.windows(2) {
            if elements[w[0]] == elements[w[1]] {
                return Err(Error::DuplicateElement {
                    first: w[0],
                    second: w[1],
                });
            }
        }
        Ok(DerangementSet { n, elements })
    }

    /// Like [`DerangementSet::new`], but keeps only the first copy of repeated
    /// elements.
    pub fn new_dedup(elements: Vec<Permutation>) -> Result<Self> {
        let mut kept: Vec<Permutation> = Vec::with_capacity(elements.len());
        for p in elements {
            if !kept.contains(&p) {
                kept.push(p);
            }
        }
        Self::new(kept)
    }

    pub fn domain_size(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn iter(&self) -> core::slice::Iter<'_, Permutation> {
        self.elements.iter()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.elements.contains(p)
    }

    /// Equality as sets, ignoring order.
    pub fn same_set(&self, other: &DerangementSet) -> bool {
        self.n == other.n && self.sorted_elements() == other.sorted_elements()
    }

    fn sorted_elements(&self) -> Vec<&Permutation> {
        let mut v: Vec<&Permutation> = self.elements.iter().collect();
        v.sort();
        v
    }

    /// `S^-1`, element by element in the same order.
    pub fn inverses(&self) -> DerangementSet {
        DerangementSet {
            n: self.n,
            elements: self.elements.iter().map(Permutation::inverse).collect(),
        }
    }

    /// `S^g = g^-1 S g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<DerangementSet> {
        let elements = self
            .elements
            .iter()
            .map(|s| s.conjugate(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(DerangementSet {
            n: self.n,
            elements,
        })
    }

    /// `x^S`, sorted and without repeats.
    pub fn out_images(&self, x: usize) -> Vec<usize> {
        let mut images: Vec<usize> = self.elements.iter().map(|s| s.apply(x)).collect();
        images.sort_unstable();
        images.dedup();
        images
    }
}

impl<'a> IntoIterator for &'a DerangementSet {
    type Item = &'a Permutation;
    type IntoIter = core::slice::Iter<'a, Permutation>;

    fn into_iter(self) -> Self::IntoIter {
        self.elements.iter()
    }
}

/// The derangement action digraph: arcs `(x, x^s)` for all `x` and `s`, deduplicated.
pub fn build_da(set: &DerangementSet) -> SimpleDigraph {
    let n = set.domain_size();
    let mut arcs = Vec::with_capacity(n * set.len());
    for s in set {
        arcs.extend((0..n).map(|x| (x, s.apply(x))));
    }
    SimpleDigraph::from_arcs_dedup(n, arcs)
}

/// Number of `s` in `S` with `u^s = v`.
pub fn multiplicity(set: &DerangementSet, u: usize, v: usize) -> Result<usize> {
    let n = set.domain_size();
    if u >= n || v >= n || u == v {
        return Err(Error::InvalidPair(u, v));
    }
    Ok(set.iter().filter(|s| s.apply(u) == v).count())
}

/// Largest multiplicity over all ordered pairs that carry an arc.
pub fn max_multiplicity(set: &DerangementSet) -> usize {
    let mut best = 0;
    let mut images = Vec::with_capacity(set.len());
    for x in 0..set.domain_size() {
        images.clear();
        images.extend(set.iter().map(|s| s.apply(x)));
        images.sort_unstable();
        let mut run = 0;
        for (i, &y) in images.iter().enumerate() {
            run = if i > 0 && images[i - 1] == y {
                run + 1
            } else {
                1
            };
            best = best.max(run);
        }
    }
    best
}

/// `SS^-1 ⊆ Der(X) ∪ {1}`, by composing every pair.
fn products_with_inverses_are_derangements(set: &DerangementSet) -> bool {
    let inverses = set.inverses();
    set.iter().all(|s| {
        inverses.iter().all(|t_inv| {
            let p = s.compose(t_inv).expect("common domain");
            p.is_identity() || p.is_derangement()
        })
    })
}

/// `x^S = x^{S^-1}` for every point.
fn neighbourhoods_self_paired(set: &DerangementSet) -> bool {
    let inverses = set.inverses();
    (0..set.domain_size()).all(|x| set.out_images(x) == inverses.out_images(x))
}

/// Whether every ordered pair has multiplicity at most one.
///
/// Decided both by the algebraic test `SS^-1 ⊆ Der(X) ∪ {1}` and by counting
/// multiplicities; the two must agree, and a disagreement panics.
pub fn is_multiplicity_free(set: &DerangementSet) -> bool {
    let algebraic = products_with_inverses_are_derangements(set);
    let counted = max_multiplicity(set) <= 1;
    assert_eq!(
        algebraic, counted,
        "multiplicity-free tests disagree for {set:?}"
    );
    algebraic
}

/// `x^S = x^{S^-1}` for all `x`, and `SS^-1 ⊆ Der(X) ∪ {1}`.
pub fn is_closed(set: &DerangementSet) -> bool {
    neighbourhoods_self_paired(set) && products_with_inverses_are_derangements(set)
}

pub fn is_self_inverse(set: &DerangementSet) -> bool {
    set.same_set(&set.inverses())
}

/// Combined structural report for `DA(X, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AnalysisReport {
    pub domain_size: usize,
    pub set_size: usize,
    pub arc_count: usize,
    pub multiplicity_free: bool,
    pub closed: bool,
    pub self_inverse: bool,
    pub symmetric: bool,
    pub regular_valency: Option<usize>,
    pub valency_profile: ValencyProfile,
    pub max_multiplicity: usize,
    pub component_count: usize,
}

pub fn analyze(set: &DerangementSet) -> AnalysisReport {
    let da = build_da(set);
    let multiplicity_free = is_multiplicity_free(set);
    let closed = is_closed(set);
    let symmetric = da.is_symmetric();
    let regular_valency = da.is_regular();
    let full = regular_valency == Some(set.len());
    assert_eq!(closed, symmetric && full, "closed-set criterion violated");
    assert_eq!(
        multiplicity_free, full,
        "multiplicity-free criterion violated"
    );
    let component_count = perm::orbits(set.elements(), set.domain_size())
        .expect("non-empty set")
        .len();
    AnalysisReport {
        domain_size: set.domain_size(),
        set_size: set.len(),
        arc_count: da.arc_count(),
        multiplicity_free,
        closed,
        self_inverse: is_self_inverse(set),
        symmetric,
        regular_valency,
        valency_profile: da.valency_profile(),
        max_multiplicity: max_multiplicity(set),
        component_count,
    }
}

/// One connected component of `DA(X, S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// Vertices of the component in the original labelling, ascending.
    pub vertices: Vec<usize>,
    /// `S` restricted to the component and relabelled to `{0, .., m-1}`.
    pub set: DerangementSet,
    /// The induced sub-digraph, relabelled the same way.
    pub digraph: SimpleDigraph,
}

/// Components of `DA(X, S)`: one per orbit of `<S>`.
pub fn components(set: &DerangementSet) -> Vec<Component> {
    let da = build_da(set);
    let orbits = perm::orbits(set.elements(), set.domain_size()).expect("non-empty set");
    match da.connectivity_classes() {
        Connectivity::Classes(classes) => assert_eq!(classes, orbits),
        Connectivity::NotEquivalence { .. } => {
            panic!("reachability on a finite derangement action digraph must be symmetric")
        }
    }
    orbits
        .into_iter()
        .map(|vertices| {
            let restricted = set
                .iter()
                .map(|s| s.restrict(&vertices).expect("orbits are invariant"))
                .collect();
            let sub = DerangementSet::new_dedup(restricted).expect("restrictions are derangements");
            let digraph = da.induced(&vertices).expect("vertices in range");
            assert_eq!(
                digraph,
                build_da(&sub),
                "component is not DA of the restriction"
            );
            Component {
                vertices,
                set: sub,
                digraph,
            }
        })
        .collect()
}

/// All derangements of `{0, .., n-1}` in lexicographic order of image arrays.
pub fn all_derangements(n: usize) -> Vec<Permutation> {
    fn extend(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        let n = used.len();
        let x = prefix.len();
        if x == n {
            out.push(Permutation::from_images_unchecked(prefix.clone()));
            return;
        }
        for y in 0..n {
            if y != x && !used[y] {
                used[y] = true;
                prefix.push(y);
                extend(prefix, used, out);
                prefix.pop();
                used[y] = false;
            }
        }
    }
    let mut out = Vec::new();
    if n >= 1 {
        extend(&mut Vec::with_capacity(n), &mut vec![false; n], &mut out);
    }
    out
}

pub const SEARCH_MAX_DOMAIN: usize = 6;
pub const SEARCH_MAX_SET_SIZE: usize = 3;

/// Exhaustive search for derangement sets whose action digraph is a regular
/// graph of valency strictly below `|S|`.
///
/// Domains `2..=n_max`, set sizes `1..=s_max`; within a domain, subsets are
/// visited in lexicographic order of their (lexicographically sorted) elements.
pub fn search_valency_gap(n_max: usize, s_max: usize) -> Result<Vec<DerangementSet>> {
    guard("n_max", n_max, SEARCH_MAX_DOMAIN)?;
    guard("s_max", s_max, SEARCH_MAX_SET_SIZE)?;
    let mut witnesses = Vec::new();
    for n in 2..=n_max {
        let ders = all_derangements(n);
        for size in 1..=s_max.min(ders.len()) {
            let mut idx: Vec<usize> = (0..size).collect();
            loop {
                let set = DerangementSet {
                    n,
                    elements: idx.iter().map(|&i| ders[i].clone()).collect(),
                };
                let da = build_da(&set);
                if da.is_symmetric() && da.is_regular().is_some_and(|k| k < size) {
                    assert!(!is_multiplicity_free(&set));
                    witnesses.push(set);
                }
                if !next_combination(&mut idx, ders.len()) {
                    break;
                }
            }
        }
    }
    Ok(witnesses)
}

fn next_combination(idx: &mut [usize], total: usize) -> bool {
    let k = idx.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if idx[i] < total - k + i {
            idx[i] += 1;
            for j in i + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

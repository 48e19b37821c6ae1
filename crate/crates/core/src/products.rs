//! Cartesian, tensor, strong and lexicographic products.
//!
//! The vertex `(x, y)` of `X × Y` is encoded as `x * |Y| + y`. Product
//! permutations act coordinatewise: `(x, y)^(g, h) = (x^g, y^h)`.

use alloc::vec::Vec;

use crate::dad::DerangementSet;
use crate::digraph::SimpleDigraph;
use crate::perm::Permutation;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Strong,
    Lexicographic,
}

impl ProductKind {
    pub const ALL: [ProductKind; 4] = [
        ProductKind::Cartesian,
        ProductKind::Tensor,
        ProductKind::Strong,
        ProductKind::Lexicographic,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Cartesian => "cartesian",
            ProductKind::Tensor => "tensor",
            ProductKind::Strong => "strong",
            ProductKind::Lexicographic => "lex",
        }
    }
}

/// A permutation group acting regularly: transitive, and only the identity
/// fixes a point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularSubgroup {
    elements: Vec<Permutation>,
}

impl RegularSubgroup {
    pub fn new(elements: Vec<Permutation>) -> Result<Self> {
        let m = elements.first().ok_or(Error::Empty)?.len();
        if elements.len() != m {
            return Err(Error::NotRegularSubgroup("order differs from degree"));
        }
        if elements.iter().any(|p| p.len() != m) {
            return Err(Error::NotRegularSubgroup("mixed domains"));
        }
        if !elements.iter().any(Permutation::is_identity) {
            return Err(Error::NotRegularSubgroup("missing identity"));
        }
        // exactly one element maps y to y' for every ordered pair
        for y in 0..m {
            let mut hit = alloc::vec![false; m];
            for p in &elements {
                let z = p.apply(y);
                if hit[z] {
                    return Err(Error::NotRegularSubgroup("two elements agree on a point"));
                }
                hit[z] = true;
            }
        }
        for a in &elements {
            if !elements.contains(&a.inverse()) {
                return Err(Error::NotRegularSubgroup("not closed under inverses"));
            }
            for b in &elements {
                if !elements.contains(&a.compose(b)?) {
                    return Err(Error::NotRegularSubgroup("not closed under composition"));
                }
            }
        }
        Ok(RegularSubgroup { elements })
    }

    /// The rotations `y -> y + i mod m`, identity first.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1, "cyclic group needs at least one point");
        let elements = (0..m)
            .map(|i| Permutation::from_images_unchecked((0..m).map(|y| (y + i) % m).collect()))
            .collect();
        RegularSubgroup { elements }
    }

    pub fn degree(&self) -> usize {
        self.elements[0].len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }
}

/// Product digraph on `X × Y` straight from the definitions.
pub fn product_digraph(g: &SimpleDigraph, h: &SimpleDigraph, kind: ProductKind) -> SimpleDigraph {
    let nx = g.vertex_count();
    let ny = h.vertex_count();
    let code = |x: usize, y: usize| x * ny + y;
    let mut arcs = Vec::new();
    let cartesian = |arcs: &mut Vec<(usize, usize)>| {
        for &(x1, x2) in g.arcs() {
            arcs.extend((0..ny).map(|y| (code(x1, y), code(x2, y))));
        }
        for &(y1, y2) in h.arcs() {
            arcs.extend((0..nx).map(|x| (code(x, y1), code(x, y2))));
        }
    };
    let tensor = |arcs: &mut Vec<(usize, usize)>| {
        for &(x1, x2) in g.arcs() {
            arcs.extend(
                h.arcs()
                    .iter()
                    .map(|&(y1, y2)| (code(x1, y1), code(x2, y2))),
            );
        }
    };
    match kind {
        ProductKind::Cartesian => cartesian(&mut arcs),
        ProductKind::Tensor => tensor(&mut arcs),
        ProductKind::Strong => {
            cartesian(&mut arcs);
            tensor(&mut arcs);
        }
        ProductKind::Lexicographic => {
            for &(x1, x2) in g.arcs() {
                for y1 in 0..ny {
                    arcs.extend((0..ny).map(|y2| (code(x1, y1), code(x2, y2))));
                }
            }
            for &(y1, y2) in h.arcs() {
                arcs.extend((0..nx).map(|x| (code(x, y1), code(x, y2))));
            }
        }
    }
    SimpleDigraph::from_arcs_dedup(nx * ny, arcs)
}

/// `(g, h)` acting on `X × Y`.
pub fn pair_permutation(g: &Permutation, h: &Permutation) -> Permutation {
    let ny = h.len();
    let mut images = Vec::with_capacity(g.len() * ny);
    for x in 0..g.len() {
        images.extend((0..ny).map(|y| g.apply(x) * ny + h.apply(y)));
    }
    Permutation::from_images_unchecked(images)
}

/// The derangement set whose action digraph is the product of `DA(X, S)` and
/// `DA(Y, T)`. Lexicographic products need a regular subgroup `U` on `Y`;
/// the other kinds must not be given one.
pub fn product_set(
    s: &DerangementSet,
    t: &DerangementSet,
    kind: ProductKind,
    u: Option<&RegularSubgroup>,
) -> Result<DerangementSet> {
    let id_x = Permutation::identity(s.domain_size());
    let id_y = Permutation::identity(t.domain_size());
    let mut elements = Vec::new();
    let box_part = |elements: &mut Vec<Permutation>| {
        elements.extend(s.iter().map(|g| pair_permutation(g, &id_y)));
        elements.extend(t.iter().map(|h| pair_permutation(&id_x, h)));
    };
    let cross = |elements: &mut Vec<Permutation>, right: &[Permutation]| {
        for g in s {
            elements.extend(right.iter().map(|h| pair_permutation(g, h)));
        }
    };
    match (kind, u) {
        (ProductKind::Lexicographic, None) => return Err(Error::MissingSubgroup),
        (ProductKind::Lexicographic, Some(u)) => {
            if u.degree() != t.domain_size() {
                return Err(Error::DomainMismatch {
                    left: t.domain_size(),
                    right: u.degree(),
                });
            }
            cross(&mut elements, u.elements());
            elements.extend(t.iter().map(|h| pair_permutation(&id_x, h)));
        }
        (_, Some(_)) => return Err(Error::UnexpectedSubgroup),
        (ProductKind::Cartesian, None) => box_part(&mut elements),
        (ProductKind::Tensor, None) => cross(&mut elements, t.elements()),
        (ProductKind::Strong, None) => {
            box_part(&mut elements);
            cross(&mut elements, t.elements());
        }
    }
    DerangementSet::new_dedup(elements)
}

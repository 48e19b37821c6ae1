//! Finite groups by multiplication table, Cayley digraphs and two-sided
//! group digraphs.
//!
//! Element `0` is always the identity. For a group `G` and subsets `L`, `R`, the
//! two-sided digraph has an arc `x -> l^-1 x r` for every `l` in `L` and `r` in `R`;
//! it equals `DA(G, S(L, R))` with `S(L, R) = {g -> l^-1 g r}` whenever no `l` is
//! conjugate to an `r`.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::dad::{build_da, DerangementSet};
use crate::digraph::SimpleDigraph;
use crate::error::guard;
use crate::perm::Permutation;
use crate::{Error, Result};

pub const MAX_GROUP_ORDER: usize = 10_000;
const EXHAUSTIVE_ASSOCIATIVITY: usize = 24;
const ASSOCIATIVITY_SAMPLES: usize = 20_000;

/// A finite group given by its multiplication table; `mul(a, b)` is `a·b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroup {
    order: usize,
    table: Vec<usize>,
    inverses: Vec<usize>,
}

impl FiniteGroup {
    /// Validates a table whose row `g` lists the products `g·h`.
    pub fn from_table(rows: Vec<Vec<usize>>) -> Result<Self> {
        let m = rows.len();
        if m == 0 {
            return Err(Error::Empty);
        }
        let bad = |reason, row, col| Err(Error::InvalidGroupTable { reason, row, col });
        let mut table = Vec::with_capacity(m * m);
        for (g, row) in rows.iter().enumerate() {
            if row.len() != m {
                return bad("row length differs from order", g, row.len());
            }
            let mut seen = vec![false; m];
            for (h, &p) in row.iter().enumerate() {
                if p >= m {
                    return bad("entry out of range", g, h);
                }
                if seen[p] {
                    return bad("repeated entry in row", g, h);
                }
                seen[p] = true;
            }
            table.extend_from_slice(row);
        }
        for h in 0..m {
            let mut seen = vec![false; m];
            for g in 0..m {
                let p = table[g * m + h];
                if seen[p] {
                    return bad("repeated entry in column", g, h);
                }
                seen[p] = true;
            }
        }
        for g in 0..m {
            if table[g] != g {
                return bad("element 0 is not a left identity", 0, g);
            }
            if table[g * m] != g {
                return bad("element 0 is not a right identity", g, 0);
            }
        }
        let mut inverses = vec![usize::MAX; m];
        for g in 0..m {
            let Some(h) = (0..m).find(|&h| table[g * m + h] == 0) else {
                return bad("element has no inverse", g, 0);
            };
            if table[h * m + g] != 0 {
                return bad("right inverse is not a left inverse", g, h);
            }
            inverses[g] = h;
        }
        let group = FiniteGroup {
            order: m,
            table,
            inverses,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<()> {
        let m = self.order;
        let check = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::InvalidGroupTable {
                    reason: "not associative",
                    row: a,
                    col: b,
                })
            } else {
                Ok(())
            }
        };
        if m <= EXHAUSTIVE_ASSOCIATIVITY {
            for a in 0..m {
                for b in 0..m {
                    for c in 0..m {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            let mut rng = ChaCha8Rng::seed_from_u64(m as u64);
            for _ in 0..ASSOCIATIVITY_SAMPLES {
                check(
                    rng.random_range(0..m),
                    rng.random_range(0..m),
                    rng.random_range(0..m),
                )?;
            }
        }
        Ok(())
    }

    /// The cyclic group `Z_m` with `a·b = a + b mod m`.
    pub fn cyclic(m: usize) -> Self {
        assert!(m >= 1);
        FiniteGroup {
            order: m,
            table: (0..m)
                .flat_map(|a| (0..m).map(move |b| (a + b) % m))
                .collect(),
            inverses: (0..m).map(|a| (m - a) % m).collect(),
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b]
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// Row `g` of the table.
    pub fn row(&self, g: usize) -> &[usize] {
        &self.table[g * self.order..(g + 1) * self.order]
    }

    fn check_element(&self, g: usize) -> Result<()> {
        if g < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange(g))
        }
    }

    /// Conjugacy class index of every element; classes numbered by their
    /// smallest member.
    pub fn conjugacy_classes(&self) -> Vec<usize> {
        let m = self.order;
        let mut class = vec![usize::MAX; m];
        let mut next = 0;
        for x in 0..m {
            if class[x] != usize::MAX {
                continue;
            }
            for g in 0..m {
                let y = self.mul(self.mul(self.inv(g), x), g);
                class[y] = next;
            }
            next += 1;
        }
        class
    }
}

/// A group generated by permutations, with the permutation of every element.
#[derive(Debug, Clone)]
pub struct GeneratedGroup {
    pub group: FiniteGroup,
    /// `elements[i]` is the permutation realizing element `i`.
    pub elements: Vec<Permutation>,
    index: BTreeMap<Permutation, usize>,
}

impl GeneratedGroup {
    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }
}

/// Closure of `gens` under composition. Elements are numbered breadth-first
/// from the identity, extending by the generators in order.
///
/// The table multiplies as functions: `a·b` applies `b` first, then `a`.
pub fn group_from_generators(gens: &[Permutation]) -> Result<GeneratedGroup> {
    let first = gens.first().ok_or(Error::Empty)?;
    let n = first.len();
    for g in gens {
        if g.len() != n {
            return Err(Error::DomainMismatch {
                left: n,
                right: g.len(),
            });
        }
    }
    let identity = Permutation::identity(n);
    let mut elements = vec![identity.clone()];
    let mut index = BTreeMap::from([(identity, 0)]);
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for g in gens {
            let p = elements[i].compose(g)?;
            if !index.contains_key(&p) {
                guard("group order", elements.len() + 1, MAX_GROUP_ORDER)?;
                index.insert(p.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(p);
            }
        }
    }
    let m = elements.len();
    let mut table = Vec::with_capacity(m * m);
    for a in &elements {
        for b in &elements {
            table.push(index[&b.compose(a)?]);
        }
    }
    let inverses = elements.iter().map(|a| index[&a.inverse()]).collect();
    Ok(GeneratedGroup {
        group: FiniteGroup {
            order: m,
            table,
            inverses,
        },
        elements,
        index,
    })
}

/// The permutation `g -> l^-1 g r` of the group's elements.
pub fn lambda_map(group: &FiniteGroup, l: usize, r: usize) -> Result<Permutation> {
    group.check_element(l)?;
    group.check_element(r)?;
    let l_inv = group.inv(l);
    let images = (0..group.order())
        .map(|g| group.mul(group.mul(l_inv, g), r))
        .collect();
    Ok(Permutation::from_images_unchecked(images))
}

fn check_subset(group: &FiniteGroup, set: &[usize]) -> Result<()> {
    if set.is_empty() {
        return Err(Error::Empty);
    }
    set.iter().try_for_each(|&g| group.check_element(g))
}

fn first_conjugate_pair(
    group: &FiniteGroup,
    left: &[usize],
    right: &[usize],
) -> Option<(usize, usize)> {
    let class = group.conjugacy_classes();
    left.iter()
        .flat_map(|&l| right.iter().map(move |&r| (l, r)))
        .find(|&(l, r)| class[l] == class[r])
}

/// Whether every `λ_{l,r}` is a derangement.
///
/// Decided by conjugacy classes and by evaluating every map; the two must
/// agree, and a disagreement panics.
pub fn is_loopless(group: &FiniteGroup, left: &[usize], right: &[usize]) -> Result<bool> {
    check_subset(group, left)?;
    check_subset(group, right)?;
    let by_classes = first_conjugate_pair(group, left, right).is_none();
    let mut by_maps = true;
    for &l in left {
        for &r in right {
            by_maps &= lambda_map(group, l, r)?.is_derangement();
        }
    }
    assert_eq!(by_classes, by_maps, "looplessness tests disagree");
    Ok(by_classes)
}

/// A two-sided group digraph together with its derangement set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoSided {
    pub set: DerangementSet,
    pub digraph: SimpleDigraph,
    /// `|L|·|R|` before coincident maps were merged.
    pub raw_count: usize,
}

fn dedup_sorted(set: &[usize]) -> Vec<usize> {
    let mut v = set.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

pub fn two_sided_digraph(group: &FiniteGroup, left: &[usize], right: &[usize]) -> Result<TwoSided> {
    let left = dedup_sorted(left);
    let right = dedup_sorted(right);
    if !is_loopless(group, &left, &right)? {
        let (l, r) = first_conjugate_pair(group, &left, &right).expect("a conjugate pair");
        return Err(Error::NotLoopless { left: l, right: r });
    }
    let mut maps = Vec::with_capacity(left.len() * right.len());
    for &l in &left {
        for &r in &right {
            maps.push(lambda_map(group, l, r)?);
        }
    }
    let set = DerangementSet::new_dedup(maps)?;
    let digraph = build_da(&set);
    let m = group.order();
    let mut arcs = Vec::new();
    for x in 0..m {
        for &l in &left {
            for &r in &right {
                arcs.push((x, group.mul(group.mul(group.inv(l), x), r)));
            }
        }
    }
    let direct = SimpleDigraph::from_arcs_dedup(m, arcs);
    if direct != digraph {
        return Err(Error::Internal(
            "two-sided digraph differs from its action digraph",
        ));
    }
    debug_assert!(set.len() <= left.len() * right.len());
    Ok(TwoSided {
        set,
        digraph,
        raw_count: left.len() * right.len(),
    })
}

/// The Cayley digraph with arcs `(g, s·g)` for `s` in `conn`, and its set of
/// left translations.
pub fn cayley_digraph(
    group: &FiniteGroup,
    conn: &[usize],
) -> Result<(SimpleDigraph, DerangementSet)> {
    check_subset(group, conn)?;
    if conn.contains(&0) {
        return Err(Error::IdentityInConnectionSet);
    }
    let conn = dedup_sorted(conn);
    let m = group.order();
    let translations = conn
        .iter()
        .map(|&s| Permutation::from_images_unchecked((0..m).map(|g| group.mul(s, g)).collect()))
        .collect();
    let set = DerangementSet::new(translations)?;
    let digraph = build_da(&set);
    let inverses: Vec<usize> = conn.iter().map(|&s| group.inv(s)).collect();
    if two_sided_digraph(group, &inverses, &[0])?.digraph != digraph {
        return Err(Error::Internal(
            "Cayley digraph differs from its two-sided form",
        ));
    }
    Ok((digraph, set))
}

/// The right translation `g -> g·h` as a permutation of the elements.
pub fn right_translation(group: &FiniteGroup, h: usize) -> Result<Permutation> {
    group.check_element(h)?;
    Ok(Permutation::from_images_unchecked(
        (0..group.order()).map(|g| group.mul(g, h)).collect(),
    ))
}

//! Permutations of `{0, .., n-1}` stored as image arrays.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::{Error, Result};

/// A bijection on `{0, .., n-1}`; `images[x]` is `x^p`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    /// Builds a permutation from its image array, checking that it is a bijection.
    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n == 0 {
            return Err(Error::InvalidPermutation("empty domain"));
        }
        let mut seen = vec![false; n];
        for &y in &images {
            if y >= n {
                return Err(Error::PointOutOfRange { point: y, n });
            }
            if seen[y] {
                return Err(Error::InvalidPermutation("repeated image"));
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Permutation::new(images.clone()).is_ok());
        Permutation { images }
    }

    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "permutations need a non-empty domain");
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation on `n` points from disjoint cycles; points not
    /// mentioned are fixed.
    pub fn from_cycles<C: AsRef<[usize]>>(n: usize, cycles: &[C]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidPermutation("empty domain"));
        }
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            let cycle = cycle.as_ref();
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n {
                    return Err(Error::PointOutOfRange { point: x, n });
                }
                if used[x] {
                    return Err(Error::InvalidPermutation("cycles are not disjoint"));
                }
                used[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Domain size.
    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `x^p`.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` then `other`: the result sends `x` to `(x^self)^other`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        check_same_domain(self, other)?;
        Ok(Permutation {
            images: self.images.iter().map(|&y| other.images[y]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x == y)
    }

    pub fn is_derangement(&self) -> bool {
        self.images.iter().enumerate().all(|(x, &y)| x != y)
    }

    /// First fixed point, if any.
    pub fn fixed_point(&self) -> Option<usize> {
        self.images.iter().enumerate().position(|(x, &y)| x == y)
    }

    /// `g^-1 p g`.
    pub fn conjugate(&self, g: &Permutation) -> Result<Permutation> {
        check_same_domain(self, g)?;
        // x^(g^-1 p g) = ((x^g^-1)^p)^g, i.e. g(x) -> g(p(x)).
        let mut images = vec![0; self.len()];
        for x in 0..self.len() {
            images[g.images[x]] = g.images[self.images[x]];
        }
        Ok(Permutation { images })
    }

    pub fn cycle_structure(&self) -> CycleStructure {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut cycles = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            cycles.push(cycle);
        }
        CycleStructure { cycles }
    }

    /// Cycle lengths in non-increasing order.
    pub fn cycle_type(&self) -> Vec<usize> {
        self.cycle_structure().cycle_type()
    }

    /// Order of the permutation as a group element.
    pub fn order(&self) -> usize {
        self.cycle_structure()
            .cycles()
            .iter()
            .fold(1, |acc, c| lcm(acc, c.len()))
    }

    /// Restriction to an invariant subset, relabelled so that the `i`-th
    /// smallest point of `part` becomes `i`.
    pub fn restrict(&self, part: &[usize]) -> Result<Permutation> {
        let n = self.len();
        if part.is_empty() {
            return Err(Error::InvalidPermutation("empty domain"));
        }
        let mut sorted = part.to_vec();
        sorted.sort_unstable();
        sorted.dedup();
        let mut label = vec![usize::MAX; n];
        for (i, &x) in sorted.iter().enumerate() {
            if x >= n {
                return Err(Error::PointOutOfRange { point: x, n });
            }
            label[x] = i;
        }
        let mut images = Vec::with_capacity(sorted.len());
        for &x in &sorted {
            let y = label[self.images[x]];
            if y == usize::MAX {
                return Err(Error::NotInvariant { point: x });
            }
            images.push(y);
        }
        Ok(Permutation { images })
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: usize, b: usize) -> usize {
    a / gcd(a, b) * b
}

pub(crate) fn check_same_domain(p: &Permutation, q: &Permutation) -> Result<()> {
    if p.len() != q.len() {
        Err(Error::DomainMismatch {
            left: p.len(),
            right: q.len(),
        })
    } else {
        Ok(())
    }
}

/// Cycle notation with fixed points omitted; the identity prints as `id`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return f.write_str("id");
        }
        for cycle in self.cycle_structure().cycles() {
            if cycle.len() < 2 {
                continue;
            }
            f.write_str("(")?;
            for (i, x) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.len(), self)
    }
}

/// Disjoint cycle decomposition in canonical form: every cycle starts at its
/// minimum point, cycles are sorted by that minimum, fixed points included.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleStructure {
    cycles: Vec<Vec<usize>>,
}

impl CycleStructure {
    pub fn cycles(&self) -> &[Vec<usize>] {
        &self.cycles
    }

    pub fn cycle_type(&self) -> Vec<usize> {
        let mut t: Vec<usize> = self.cycles.iter().map(Vec::len).collect();
        t.sort_unstable_by(|a, b| b.cmp(a));
        t
    }

    pub fn has_fixed_point(&self) -> bool {
        self.cycles.iter().any(|c| c.len() == 1)
    }

    pub fn into_cycles(self) -> Vec<Vec<usize>> {
        self.cycles
    }
}

/// Orbits of the group generated by `gens` on `{0, .., n-1}`, each sorted,
/// listed by minimum element.
pub fn orbits(gens: &[Permutation], n: usize) -> Result<Vec<Vec<usize>>> {
    if gens.is_empty() {
        return Err(Error::Empty);
    }
    for g in gens {
        if g.len() != n {
            return Err(Error::DomainMismatch {
                left: g.len(),
                right: n,
            });
        }
    }
    let inverses: Vec<Permutation> = gens.iter().map(Permutation::inverse).collect();
    let mut orbit_of = vec![usize::MAX; n];
    let mut result = Vec::new();
    let mut queue = VecDeque::new();
    for start in 0..n {
        if orbit_of[start] != usize::MAX {
            continue;
        }
        let id = result.len();
        let mut orbit = vec![start];
        orbit_of[start] = id;
        queue.push_back(start);
        while let Some(x) = queue.pop_front() {
            for g in gens.iter().chain(inverses.iter()) {
                let y = g.apply(x);
                if orbit_of[y] == usize::MAX {
                    orbit_of[y] = id;
                    orbit.push(y);
                    queue.push_back(y);
                }
            }
        }
        orbit.sort_unstable();
        result.push(orbit);
    }
    Ok(result)
}

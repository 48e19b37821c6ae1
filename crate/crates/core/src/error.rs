use crate::decompose::Matching;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(&'static str),
    #[error("domain size mismatch: {left} vs {right}")]
    DomainMismatch { left: usize, right: usize },
    #[error("point {point} out of range for domain of size {n}")]
    PointOutOfRange { point: usize, n: usize },
    #[error("vertex subset is not invariant under the permutation (point {point} leaves it)")]
    NotInvariant { point: usize },
    #[error("empty generator or derangement list")]
    Empty,
    #[error("element {index} is not a derangement (fixes point {point})")]
    NotDerangement { index: usize, point: usize },
    #[error("elements {first} and {second} are the same permutation")]
    DuplicateElement { first: usize, second: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("invalid vertex pair ({0}, {1})")]
    InvalidPair(usize, usize),
    #[error("digraph is not regular")]
    NotRegular,
    #[error("digraph has valency 0")]
    ZeroValency,
    #[error("digraph is not symmetric")]
    NotSymmetric,
    #[error("graph has odd valency {valency}")]
    OddValency { valency: usize },
    #[error("graph has no perfect matching (maximum matching has {} edges)", maximum.len())]
    NoPerfectMatching { maximum: Matching },
    #[error("guard exceeded: {guard} is {value}, limit {limit}")]
    GuardExceeded {
        guard: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("lexicographic products need a regular subgroup on the second factor")]
    MissingSubgroup,
    #[error("only lexicographic products take a regular subgroup")]
    UnexpectedSubgroup,
    #[error("not a regular subgroup: {0}")]
    NotRegularSubgroup(&'static str),
    #[error("invalid group table: {reason} at ({row}, {col})")]
    InvalidGroupTable {
        reason: &'static str,
        row: usize,
        col: usize,
    },
    #[error("group element {0} out of range")]
    ElementOutOfRange(usize),
    #[error("identity element in connection set")]
    IdentityInConnectionSet,
    #[error("elements {left} and {right} are conjugate, so the two-sided digraph has loops")]
    NotLoopless { left: usize, right: usize },
    #[error("permutation is not an element of the group")]
    NotInGroup,
    #[error("internal consistency check failed: {0}")]
    Internal(&'static str),
}

impl Error {
    /// Short stable reason code, suitable for machine parsing.
    pub fn code(&self) -> &'static str {
        match self {
            Error::InvalidPermutation(_) => "invalid_permutation",
            Error::DomainMismatch { .. } => "domain_mismatch",
            Error::PointOutOfRange { .. } => "point_out_of_range",
            Error::NotInvariant { .. } => "not_invariant",
            Error::Empty => "empty",
            Error::NotDerangement { .. } => "not_derangement",
            Error::DuplicateElement { .. } => "duplicate_element",
            Error::Loop(_) => "loop",
            Error::DuplicateArc(..) => "duplicate_arc",
            Error::InvalidPair(..) => "invalid_pair",
            Error::NotRegular => "not_regular",
            Error::ZeroValency => "zero_valency",
            Error::NotSymmetric => "not_symmetric",
            Error::OddValency { .. } => "odd_valency",
            Error::NoPerfectMatching { .. } => "no_perfect_matching",
            Error::GuardExceeded { .. } => "guard_exceeded",
            Error::MissingSubgroup => "missing_subgroup",
            Error::UnexpectedSubgroup => "unexpected_subgroup",
            Error::NotRegularSubgroup(_) => "not_regular_subgroup",
            Error::InvalidGroupTable { .. } => "invalid_group_table",
            Error::ElementOutOfRange(_) => "element_out_of_range",
            Error::IdentityInConnectionSet => "identity_in_connection_set",
            Error::NotLoopless { .. } => "not_loopless",
            Error::NotInGroup => "not_in_group",
            Error::Internal(_) => "internal",
        }
    }
}

pub(crate) fn guard(guard: &'static str, value: usize, limit: usize) -> crate::Result<()> {
    if value > limit {
        Err(Error::GuardExceeded {
            guard,
            value,
            limit,
        })
    } else {
        Ok(())
    }
}

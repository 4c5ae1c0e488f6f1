use thiserror::Error;

/// Errors raised by constructors and operations whose preconditions fail.
///
/// Law *violations* are not errors: they are recorded in a
/// [`LawReport`](crate::report::LawReport). An `Error` means the requested
/// construction does not exist for the given input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid symbol {0:?}: symbols are nonempty and contain no whitespace")]
    InvalidSymbol(String),
    #[error("duplicate element {0}")]
    Duplicate(String),
    #[error("unknown symbol {0}")]
    UnknownSymbol(String),
    #[error("{0} does not belong to the expected carrier")]
    CarrierMismatch(String),
    #[error("table is not total: missing entry for {0}")]
    NotTotal(String),
    #[error("cannot compose: codomain {0} differs from domain {1}")]
    CompositionMismatch(String, String),
    #[error("map is not monic: {0}")]
    NotMonic(String),
    #[error("map is not onto: {0} has an empty fiber")]
    NotOnto(String),
    #[error("map is not bijective")]
    NotBijective,
    #[error("cannot fold an empty sequence")]
    EmptyFold,
    #[error("member {0} is empty")]
    EmptyMember(String),
    #[error("subset must be nonempty")]
    EmptySubset,
    #[error("relation is not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("chain {0} has no upper bound")]
    UnboundedChain(String),
    #[error("not a chain: {0}")]
    NotAChain(String),
    #[error("not a lattice: pair {0} lacks a supremum or infimum")]
    NotALattice(String),
    #[error("not a semilattice: {0}")]
    NotSemilattice(String),
    #[error("tables do not form a dual pair: {0}")]
    NotDualPair(String),
    #[error("instance too large: {what} is {size}, bound is {bound}")]
    TooLarge {
        what: &'static str,
        size: usize,
        bound: usize,
    },
    #[error("map is not order preserving: {0}")]
    NotMonotone(String),
    #[error("not a category: {0}")]
    NotACategory(String),
    #[error("not a functor: {0}")]
    NotAFunctor(String),
    #[error("assignment is neither covariant nor contravariant: {0}")]
    VarianceError(String),
    #[error("target category is not a product")]
    NotProduct,
    #[error("component has wrong endpoints: {0}")]
    EndpointError(String),
    #[error("shapes do not match: {0}")]
    Mismatch(String),
    #[error("families are incompatible at {0}")]
    IncompatibleFamilies(String),
    #[error("not a natural isomorphism: {0}")]
    NotARepresentation(String),
    #[error("no isomorphism connects the two representations")]
    NotIsomorphicRepresentations,
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("subgroup is not normal: {0}")]
    NotNormal(String),
    #[error("quotient operation is ill defined at representatives {0}")]
    IllDefinedQuotient(String),
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("not an action: {0}")]
    NotAction(String),
    #[error("action is not transitive: {0}")]
    NotTransitive(String),
    #[error("value {0} leaves the integer window of radius {1}")]
    WindowOverflow(String, u64),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("a filter base cannot contain the empty set")]
    EmptyMemberInBase,
    #[error("member {0} does not meet the image of the map")]
    MeetingConditionFailed(String),
    #[error("degenerate on a finite carrier: {0}")]
    Degenerate(String),
    #[error("family is not closed: {0}")]
    NotClosedFamily(String),
    #[error("family does not cover the carrier: {0} is missing")]
    NotCovering(String),
    #[error("not a valid closure table: {0}")]
    NotClosureTable(String),
    #[error("not a valid topology: {0}")]
    NotATopology(String),
    #[error("invalid structure: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid Cayley table: {0}")]
    InvalidTable(String),
    #[error("group of order {order} exceeds the limit {limit}")]
    SizeGuard { order: usize, limit: usize },
    #[error("not a homomorphism: {0}")]
    NotHomomorphism(String),
    #[error("invalid amalgam: {0}")]
    InvalidAmalgam(String),
    #[error("invalid pc presentation: {0}")]
    InvalidPresentation(String),
    #[error("subgroups belong to different parent groups")]
    ParentMismatch,
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("subgroup is not central")]
    NotCentral,
    #[error("not a subgroup: {0}")]
    NotSubgroup(String),
    #[error("group is not solvable")]
    NotSolvable,
    #[error("abelian group has positive free rank")]
    InfiniteGroup,
    #[error("exponent {exponent} does not divide modulus {modulus}")]
    ExponentMismatch { exponent: u64, modulus: u64 },
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u64, u64),
    #[error("ill-defined map: {0}")]
    IllDefinedMap(String),
    #[error("not a cocycle: {0}")]
    NotCocycle(String),
    #[error("invalid group spec: {0}")]
    InvalidSpec(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("parameter set is empty")]
    NoParameters,
    #[error("expected {expected} sections, found {found}")]
    SectionCount { expected: usize, found: usize },
    #[error("element index {index} outside a carrier of size {size}")]
    OutOfCarrier { index: usize, size: usize },
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("section at parameter #{0} is empty, so the soft set has no soft elements")]
    EmptySection(usize),
    #[error("{what} cap exceeded: {size} > {cap}")]
    CapExceeded {
        what: &'static str,
        size: usize,
        cap: usize,
    },
    #[error("index {index} out of range for {size} items")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("not a soft subset of the ambient soft set")]
    NotSoftSubset,
    #[error("invalid group table: {0}")]
    InvalidGroup(String),
    #[error("section at parameter #{0} is not a subgroup")]
    NotSoftGroup(usize),
    #[error("invalid soft topology: {0}")]
    InvalidTopology(String),
    #[error("map is not well formed: {0}")]
    InvalidMap(String),
    #[error("cover member #{index} is not open in its declared topology")]
    NotMember { index: usize },
    #[error("soft topology is not canonical")]
    NotCanonical,
}

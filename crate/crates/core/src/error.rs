use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("map does not descend to the quotient: {0}")]
    NotWellDefined(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("group of order {order} exceeds the enumeration bound {bound}")]
    TooLarge { order: u64, bound: u64 },
    #[error("circle-valued homomorphism with zero delta1 coefficient has infinite kernel")]
    InfiniteKernel,
    #[error("kernel is not a 3-group (delta1 coefficient {0} is not a signed power of 3)")]
    NotThreeGroup(i64),
    #[error("inconsistent pc-presentation: {0}")]
    Inconsistent(String),
    #[error("group has no abelian subgroup of index 3")]
    NoAbelianIndex3,
    #[error("virtual character is not genuine: {0}")]
    NotGenuine(String),
    #[error("no assignment of table rows satisfies the generator constraints: {0}")]
    GeneratorMatchFailed(String),
    #[error("degree {degree} exceeds the configured bound {bound}")]
    DegreeBoundExceeded { degree: u32, bound: u32 },
    #[error("element is not homogeneous")]
    NotHomogeneous,
    #[error("map is not an order-3 action: {0}")]
    NotAnAction(String),
    #[error("syntax error at {line}:{col}: {msg}")]
    Syntax { line: usize, col: usize, msg: String },
    #[error("unknown identifier `{name}` at {line}:{col}")]
    UnknownIdentifier { name: String, line: usize, col: usize },
    #[error("inhomogeneous relation at {line}:{col}: degrees {degrees:?}")]
    InhomogeneousRelation { line: usize, col: usize, degrees: Vec<u32> },
    #[error("unknown builtin `{0}`")]
    UnknownBuiltin(String),
}

pub type Result<T> = std::result::Result<T, Error>;

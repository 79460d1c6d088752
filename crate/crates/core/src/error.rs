use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("incompatible groups: {0}")]
    IncompatibleGroups(String),
    #[error("word {0} is not fully commutative")]
    NotFullyCommutative(String),
    #[error("letter {letter} out of range for period {n}")]
    LetterOutOfRange { letter: usize, n: usize },
    #[error("collision: two balls land at time {time}")]
    Collision { time: i64 },
    #[error("negative throw {throw} at position {pos}")]
    NegativeThrow { pos: usize, throw: i64 },
    #[error("unsatisfiable rank condition: {0}")]
    Unsatisfiable(String),
    #[error("matrix has rank {rank}, expected {expected}")]
    RankDeficient { rank: usize, expected: usize },
    #[error("illegal move: {0}")]
    IllegalMove(String),
    #[error("malformed lambda: {0}")]
    MalformedLambda(String),
    #[error("complex is not pure")]
    NotPure,
    #[error("complex has no facets")]
    EmptyComplex,
    #[error("matrix is {rows}x{cols}, expected square")]
    NonSquare { rows: usize, cols: usize },
    #[error("the zero polynomial has no initial term")]
    ZeroPolynomial,
    #[error("resource limit hit while reducing the S-pair ({0}, {1})")]
    ResourceLimit(usize, usize),
    #[error("empty patch: {0}")]
    EmptyPatch(String),
    #[error("monomial {0} is not squarefree")]
    NotSquarefree(String),
    #[error("lattice has symbolic coefficients; specialize it first")]
    Symbolic,
    #[error("no rotation of the strip order satisfies the init-product check for lambda {0:?}")]
    NoTermOrder(Vec<usize>),
    #[error("gave up after {0} degenerate specializations")]
    RetriesExhausted(usize),
    #[error("shape {0:?} is not a rectangle")]
    NotRectangle(Vec<usize>),
    #[error("not a bottom pipe dream: {0}")]
    NotBottom(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("not a Cauchon diagram: black square {0:?} has white squares both left and above")]
    NotCauchon((usize, usize)),
    #[error("not a Le-diagram: {0}")]
    NotLe(String),
    #[error("invalid lattice: {0}")]
    InvalidLattice(String),
}

pub type Result<T> = std::result::Result<T, Error>;

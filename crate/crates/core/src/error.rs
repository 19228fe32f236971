use thiserror::Error;

/// Errors across the plane, census, design, checker and automorphism APIs.
#[derive(Debug, Error)]
pub enum Error {
    #[error("no inverse of zero")]
    ZeroInverse,

    #[error("the zero triple has no projective representative")]
    ZeroTriple,

    #[error("unsupported plane order {0}: expected a prime q <= 7")]
    UnsupportedOrder(u8),

    #[error("line undefined for equal points")]
    EqualPoints,

    #[error("meet undefined for equal lines")]
    EqualLines,

    #[error("{what} requires a plane of order 3 (got q={q})")]
    OrderThreeOnly { what: &'static str, q: u8 },

    #[error("expected {expected} distinct points, got {got}")]
    WrongSetSize { expected: usize, got: usize },

    #[error("point {0} is not a point of the design")]
    NotDesignPoint(u8),

    #[error("triangle roles require a six-set of type 3")]
    NotType3,

    #[error("no valid quadrangle: the four points include three collinear ones")]
    DegenerateQuadrangle,

    #[error("not a block of this design")]
    NotABlock,

    #[error("design parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("malformed design: {0}")]
    MalformedDesign(String),

    #[error("C(v,t) = {tsets} t-sets exceed the verification guard of {bound}")]
    GuardExceeded { tsets: u64, bound: u64 },

    #[error("derived parameter lambda_{s} = {num}/{den} is not an integer")]
    NonIntegralLambda { s: usize, num: u64, den: u64 },

    #[error("derived lambda_{s} = {derived} but {counted} blocks contain the sample {s}-set; design is not Steiner")]
    LambdaMismatch { s: usize, derived: u64, counted: u64 },

    #[error("automorphism search requires a design with v=12, k=6 (got v={v}, k={k})")]
    WrongShape { v: usize, k: usize },

    #[error("automorphism search requires a Steiner system S(5,6,12): {0}")]
    NotSteiner(String),

    #[error("base and image must each list 5 distinct points of the design")]
    BadTuple,

    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

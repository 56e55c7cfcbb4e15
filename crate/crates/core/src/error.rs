use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("a scroll needs at least two summands, got {0}")]
    ScrollRank(usize),

    #[error("scroll degrees must be non-increasing, nonnegative and end in 0: {0:?}")]
    UnnormalizedScroll(Vec<i64>),

    #[error("subscroll index {j} out of range 2..={rank}")]
    SubscrollIndex { j: usize, rank: usize },

    #[error("the linear system |{a}M + {b}L| is empty")]
    EmptySystem { a: i64, b: i64 },

    #[error("expected {expected} divisor classes, got {got}")]
    Arity { expected: usize, got: usize },

    #[error("Hirzebruch invariant must be nonnegative, got {0}")]
    NegativeHirzebruch(i64),

    #[error("family must satisfy d1 >= d2 >= d3 >= 0, got ({d1}, {d2}, {d3})")]
    UnsortedFamily { d1: i64, d2: i64, d3: i64 },

    #[error("family parameter {0} exceeds the supported magnitude")]
    FamilyOutOfRange(i64),

    #[error("family ({d1}, {d2}, {d3}, {n}) is not a smooth member with Picard rank 2")]
    NotSmoothPic2 { d1: i64, d2: i64, d3: i64, n: i64 },

    #[error("invalid enumeration range: max_d1 = {max_d1}, n in [{n_min}, {n_max}]")]
    InvalidRange { max_d1: i64, n_min: i64, n_max: i64 },

    #[error("forms of degrees ({a}, {b}, {c}) do not give a homogeneous b^2 - 4ac")]
    InhomogeneousDiscriminant { a: usize, b: usize, c: usize },

    #[error("coefficient list of length {len} does not match degree {degree}")]
    FormLength { degree: usize, len: usize },

    #[error("the zero form has no root count")]
    ZeroForm,

    #[error("seed {0} produced an identically zero discriminant")]
    DegenerateSeed(u64),

    #[error("K^2 = {0} exceeds 8")]
    KSquaredOutOfRange(i64),

    #[error("curve system: {0}")]
    CurveSystem(String),
}

pub type Result<T> = std::result::Result<T, Error>;

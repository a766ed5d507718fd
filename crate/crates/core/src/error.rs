use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Errors shared by every module of the crate.
///
/// All arithmetic is checked; none of the operations silently wrap, truncate
/// or fall back to floating point.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: left operand has {left} variables, right has {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("monomial division fails at variable x_{}: {num} < {den}", coordinate + 1)]
    NotDivisible {
        coordinate: usize,
        num: u32,
        den: u32,
    },

    #[error("exponent overflow at variable x_{}", coordinate + 1)]
    ExponentOverflow { coordinate: usize },

    #[error("ray {ray} is not primitive (coordinate gcd is {gcd})")]
    NonPrimitiveRay { ray: usize, gcd: u64 },

    #[error("cone {cone} refers to ray index {index}, but the fan has {count} rays")]
    ConeIndexOutOfRange {
        cone: usize,
        index: usize,
        count: usize,
    },

    #[error("the rays do not span the ambient lattice (torus factor); class group is undefined here")]
    TorusFactor,

    #[error("divisor has {got} coefficients but the fan has {expected} rays")]
    DivisorLength { got: usize, expected: usize },

    #[error("unsupported spoke count m = {m}: the wheel order needs m >= 3")]
    UnsupportedSpokeCount { m: usize },

    #[error("step index k = {k} out of range 1..={n}")]
    StepOutOfRange { k: usize, n: usize },

    #[error("vertex {vertex} out of range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("invalid circuit: {reason}")]
    InvalidCircuit { reason: String },

    #[error("({a},{b}) is not a chord of the circuit: {reason}")]
    NotAChord { a: usize, b: usize, reason: String },

    #[error("wheel data is not a complex: rhombus relation ({relation}) fails at j = {j}")]
    NotAComplex { relation: u8, j: usize },

    #[error("wheel field {field} has {got} entries, expected m = {expected}")]
    WheelShape {
        field: &'static str,
        got: usize,
        expected: usize,
    },

    #[error("window bound is smaller than lcm(f^1..f^m) at variable x_{}", coordinate + 1)]
    WindowTooSmall { coordinate: usize },

    #[error("exact integer elimination exceeded 128-bit capacity; shrink the window or the instance")]
    ArithmeticOverflow,

    #[error("class group presentation does not fit machine integers")]
    ClassGroupOverflow,

    #[error("internal consistency check failed: {0}")]
    Inconsistency(String),
}

use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Malformed PD text; carries the offending token or a short reason.
    Parse(String),
    /// An edge label does not occur exactly twice.
    EdgeCount { label: u32, count: usize },
    /// The strand structure does not close up or orientations disagree.
    Orientation(String),
    /// `V - E + F` does not match a sphere embedding.
    Euler { expected: i64, found: i64 },
    IndexOutOfRange { index: usize, len: usize },
    /// The operation needs a connected diagram.
    Disconnected,
    /// The outer face designation names an edge that does not exist.
    OuterFace(u32),
    /// Odd cycle in the Seifert graph; the input cannot come from a diagram.
    NotBipartite,
    /// Internal consistency check failed on a structure derived from input.
    Corrupt(String),
    /// The graph has no cut vertex.
    NoCutVertex,
    /// A block carrying edges of both signs where a single sign is required.
    MixedBlock { block: usize },
    /// The diagram is not homogeneous; carries the sign of every block.
    Inhomogeneous(alloc::vec::Vec<crate::graph::BlockSign>),
    /// Brute-force computation refused above the configured crossing cap.
    CapExceeded { crossings: usize, cap: usize },
    NotSquare { rows: usize, cols: usize },
    ZeroPolynomial,
    /// Zero parameter passed to a pretzel generator, or too few parameters.
    BadParameters(String),
    /// The diagram is outside the domain of a classification or check.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse(s) => write!(f, "parse error: {s}"),
            Error::EdgeCount { label, count } => {
                write!(f, "edge label {label} occurs {count} times (expected 2)")
            }
            Error::Orientation(s) => write!(f, "orientation error: {s}"),
            Error::Euler { expected, found } => {
                write!(f, "Euler check failed: V - E + F = {found}, expected {expected}")
            }
            Error::IndexOutOfRange { index, len } => {
                write!(f, "index {index} out of range (len {len})")
            }
            Error::Disconnected => f.write_str("diagram is not connected"),
            Error::OuterFace(l) => write!(f, "outer face refers to unknown edge {l}"),
            Error::NotBipartite => f.write_str("Seifert graph has an odd cycle"),
            Error::Corrupt(s) => write!(f, "corrupt input: {s}"),
            Error::NoCutVertex => f.write_str("graph has no cut vertex"),
            Error::MixedBlock { block } => write!(f, "block {block} has edges of both signs"),
            Error::Inhomogeneous(signs) => write!(f, "diagram is not homogeneous: block signs {signs:?}"),
            Error::CapExceeded { crossings, cap } => {
                write!(f, "{crossings} crossings exceeds the cap of {cap}")
            }
            Error::NotSquare { rows, cols } => write!(f, "matrix is {rows}x{cols}, not square"),
            Error::ZeroPolynomial => f.write_str("zero polynomial"),
            Error::BadParameters(s) => write!(f, "bad parameters: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
        }
    }
}

impl core::error::Error for Error {}

use core::fmt;

/// Errors reported by polygon construction and the covering computations.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Fewer than three vertices were supplied.
    TooFewVertices { got: usize },
    /// A vertex coordinate is NaN or infinite.
    NonFiniteCoordinate,
    /// Two consecutive vertices coincide (within tolerance).
    DuplicateVertex { index: usize },
    /// The chain is not strictly convex and counterclockwise at this vertex.
    NotConvex { index: usize },
    /// The operation needs the origin strictly inside the body.
    OriginNotInterior,
    /// The operation needs a body with `K = -K`.
    NotOriginSymmetric,
    /// The operation needs a body symmetric about both coordinate axes.
    NotDoublySymmetric,
    /// The body collapsed to (near) zero area.
    DegenerateBody,
    /// An angle argument lies outside the admissible interval.
    ThetaOutOfRange { theta: f64, lo: f64, hi: f64 },
    /// A scalar argument failed validation; the message names the constraint.
    InvalidParameter(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TooFewVertices { got } => {
                write!(f, "need at least 3 vertices, got {got}")
            }
            Error::NonFiniteCoordinate => write!(f, "vertex coordinate is not finite"),
            Error::DuplicateVertex { index } => {
                write!(f, "vertices {index} and its successor coincide")
            }
            Error::NotConvex { index } => {
                write!(
                    f,
                    "vertex chain is not strictly convex counterclockwise at vertex {index}"
                )
            }
            Error::OriginNotInterior => write!(f, "origin is not interior to the body"),
            Error::NotOriginSymmetric => write!(f, "body is not symmetric about the origin"),
            Error::NotDoublySymmetric => {
                write!(f, "body is not symmetric about both coordinate axes")
            }
            Error::DegenerateBody => write!(f, "body is degenerate (no area)"),
            Error::ThetaOutOfRange { theta, lo, hi } => {
                write!(f, "angle {theta} outside admissible range [{lo}, {hi}]")
            }
            Error::InvalidParameter(msg) => write!(f, "{msg}"),
        }
    }
}

impl core::error::Error for Error {}

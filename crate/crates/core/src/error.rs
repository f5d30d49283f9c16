use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A parameter that must be prime is not.
    NotPrime(u64),
    /// Family parameter outside the supported range.
    Parameter { family: &'static str, detail: String },
    /// Field order p^n exceeds the configured cap.
    FieldTooLarge { order: u64, cap: u64 },
    /// Group order exceeds the configured cap.
    OrderOverCap { order: u64, cap: u64 },
    /// Graph too large for the characteristic polynomial path.
    SpectralCap { vertices: usize, cap: usize },
    /// Inversion of the zero field element.
    ZeroInverse,
    /// An operand does not belong to the field it was used with.
    ForeignElement,
    /// A subset handed to `quotient_by_central` is not a subgroup.
    NotSubgroup,
    /// A subgroup handed to `quotient_by_central` is not central.
    NotCentral,
    /// The operation is only defined for non-abelian groups.
    AbelianGroup,
    /// Characteristic polynomial input must be monic.
    NonMonic,
    /// Spectrum of an empty clique decomposition requested.
    EmptyDecomposition,
    /// A closed form whose multiplicities do not add up to |G| - |Z(G)|.
    VertexCountMismatch { formula: &'static str, total: u64, vertices: u64 },
    /// Reconstructed characteristic polynomial disagrees with the determinant check.
    ReconstructionMismatch,
    /// Group table failed an axiom check.
    Axiom(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::NotPrime(p) => write!(f, "{p} is not prime"),
            Error::Parameter { family, detail } => write!(f, "{family}: {detail}"),
            Error::FieldTooLarge { order, cap } => {
                write!(f, "field order {order} exceeds cap {cap}")
            }
            Error::OrderOverCap { order, cap } => {
                write!(f, "group order {order} exceeds cap {cap}")
            }
            Error::SpectralCap { vertices, cap } => {
                write!(f, "{vertices} vertices exceeds spectral cap {cap}")
            }
            Error::ZeroInverse => f.write_str("zero has no multiplicative inverse"),
            Error::ForeignElement => f.write_str("element does not belong to this field"),
            Error::NotSubgroup => f.write_str("subset is not a subgroup"),
            Error::NotCentral => f.write_str("subgroup is not contained in the center"),
            Error::AbelianGroup => f.write_str("group is abelian; commuting graph is undefined"),
            Error::NonMonic => f.write_str("polynomial is not monic"),
            Error::EmptyDecomposition => f.write_str("empty clique decomposition"),
            Error::VertexCountMismatch { formula, total, vertices } => write!(
                f,
                "{formula}: multiplicities sum to {total}, expected {vertices} vertices"
            ),
            Error::ReconstructionMismatch => {
                f.write_str("characteristic polynomial failed the determinant check")
            }
            Error::Axiom(msg) => write!(f, "group axiom violated: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub(crate) fn param(family: &'static str, detail: impl Into<String>) -> Error {
    Error::Parameter { family, detail: detail.into() }
}

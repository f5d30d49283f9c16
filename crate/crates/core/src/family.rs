use alloc::boxed::Box;
use core::fmt;

/// Which group family to construct, with its parameters.
///
/// `Display` renders the textual group-spec grammar understood by the CLI,
/// e.g. `D:12`, `HB:2:1`, `F20 x Z:2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilySpec {
    Cyclic(u32),
    /// Dihedral group given by its order `2m`.
    Dihedral(u32),
    /// Generalized quaternion group given by its order `4n`.
    GenQuaternion(u32),
    /// Quasidihedral group given by the exponent `n` of its order `2^n`.
    Quasidihedral(u32),
    M16,
    Z4rtimesZ4,
    D8centralZ4,
    SG16_3,
    Alternating(u32),
    Symmetric(u32),
    SL2(u32),
    GL2(u32),
    PSL2(u32),
    F20,
    /// A(n, ϑ) over GF(2^n).
    HanakiA(u32),
    /// A(n, p) over GF(p^n); stored as `(p, n)`.
    HanakiB(u32, u32),
    /// Non-abelian Z_q ⋊ Z_p; stored as `(p, q)`.
    SemidirectPQ(u32, u32),
    Product(Box<FamilySpec>, Box<FamilySpec>),
}

impl FamilySpec {
    pub fn product(a: FamilySpec, b: FamilySpec) -> Self {
        FamilySpec::Product(Box::new(a), Box::new(b))
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use FamilySpec::*;
        match self {
            Cyclic(n) => write!(f, "Z:{n}"),
            Dihedral(o) => write!(f, "D:{o}"),
            GenQuaternion(o) => write!(f, "Q:{o}"),
            Quasidihedral(n) => write!(f, "QD:{}", 1u64 << n),
            M16 => f.write_str("M16"),
            Z4rtimesZ4 => f.write_str("Z4sZ4"),
            D8centralZ4 => f.write_str("D8cZ4"),
            SG16_3 => f.write_str("SG16_3"),
            Alternating(n) => write!(f, "A:{n}"),
            Symmetric(n) => write!(f, "S:{n}"),
            SL2(q) => write!(f, "SL2:{q}"),
            GL2(q) => write!(f, "GL2:{q}"),
            PSL2(q) => write!(f, "PSL2:{q}"),
            F20 => f.write_str("F20"),
            HanakiA(n) => write!(f, "HA:{n}"),
            HanakiB(p, n) => write!(f, "HB:{p}:{n}"),
            SemidirectPQ(p, q) => write!(f, "PQ:{p}:{q}"),
            // The grammar is left-associative, so a nested right operand
            // re-parses as a differently bracketed (isomorphic) product.
            Product(a, b) => write!(f, "{a} x {b}"),
        }
    }
}

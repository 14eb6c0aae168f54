use std::fmt;

/// Everything that can be rejected up front by this crate.
///
/// Verification *failures* are not errors: operations like
/// [`crate::diffsets::verify_sds`] report a verdict instead. An `Error` means
/// the input violated a structural precondition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Modulus must be at least 1.
    ZeroModulus,
    /// A residue fell outside `0..n`.
    ResidueOutOfRange { residue: usize, modulus: usize },
    /// Multiplier is not a unit of `Z_n`, so the map is not a bijection.
    NotAUnit { value: usize, modulus: usize },
    /// Operation requires a prime modulus.
    NotPrime { n: usize },
    /// Paley sets are skew only for primes congruent to 3 mod 4.
    PaleyCongruence { n: usize },
    /// Blocks of a family must share one modulus.
    MixedModuli { expected: usize, got: usize },
    /// A family needs at least one block.
    EmptyFamily,
    /// The subgroup generated by `h` contains -1, so cosets cannot be
    /// arranged in plus/minus pairs.
    SubgroupContainsMinusOne { generator: usize, modulus: usize },
    /// Coset index outside `0..coset_count`.
    IndexOutOfRange { index: usize, coset_count: usize },
    /// Operation is defined for exactly four blocks.
    FourBlocksRequired { got: usize },
    /// Goethals-Seidel blocks must share one order.
    BlockSizeMismatch { expected: usize, got: usize },
    /// The counting identity `sum n_k(n_k-1) = lambda(v-1)` fails, so no
    /// family with these parameters exists.
    InfeasibleParameters { lhs: u64, rhs: u64 },
    /// A skew-type block must have cardinal `(v-1)/2` (odd `v`).
    SkewCardinalMismatch { cardinal: usize, required_twice: usize },
    /// Skew block index outside the family.
    SkewBlockOutOfRange { index: usize, blocks: usize },
    /// Search restricted to cosets of a system over a different modulus.
    CosetModulusMismatch { spec: usize, system: usize },
    /// A coset-restricted block cardinal must be a multiple of the subgroup
    /// order.
    CardinalNotCosetMultiple { cardinal: usize, subgroup_order: usize },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Error::ZeroModulus => write!(f, "modulus must be >= 1"),
            Error::ResidueOutOfRange { residue, modulus } => {
                write!(f, "residue {residue} out of range for Z_{modulus}")
            }
            Error::NotAUnit { value, modulus } => {
                write!(f, "{value} is not a unit of Z_{modulus} (gcd != 1)")
            }
            Error::NotPrime { n } => write!(f, "{n} is not prime"),
            Error::PaleyCongruence { n } => {
                write!(f, "Paley set needs a prime congruent to 3 mod 4, got {n}")
            }
            Error::MixedModuli { expected, got } => {
                write!(f, "blocks mix moduli {expected} and {got}")
            }
            Error::EmptyFamily => write!(f, "family has no blocks"),
            Error::SubgroupContainsMinusOne { generator, modulus } => {
                write!(
                    f,
                    "subgroup <{generator}> of Z_{modulus}* contains -1; \
                     cosets cannot be paired by negation"
                )
            }
            Error::IndexOutOfRange { index, coset_count } => {
                write!(f, "coset index {index} out of range 0..{coset_count}")
            }
            Error::FourBlocksRequired { got } => {
                write!(f, "operation needs exactly 4 blocks, got {got}")
            }
            Error::BlockSizeMismatch { expected, got } => {
                write!(f, "block orders differ: expected {expected}, got {got}")
            }
            Error::InfeasibleParameters { lhs, rhs } => {
                write!(
                    f,
                    "counting identity violated: sum n_k(n_k-1) = {lhs} \
                     but lambda(v-1) = {rhs}"
                )
            }
            Error::SkewCardinalMismatch { cardinal, required_twice } => {
                write!(
                    f,
                    "skew block cardinal {cardinal} does not satisfy \
                     2*cardinal = v-1 = {required_twice}"
                )
            }
            Error::SkewBlockOutOfRange { index, blocks } => {
                write!(f, "skew block index {index} out of range for {blocks} blocks")
            }
            Error::CosetModulusMismatch { spec, system } => {
                write!(f, "search modulus {spec} differs from coset system modulus {system}")
            }
            Error::CardinalNotCosetMultiple { cardinal, subgroup_order } => {
                write!(
                    f,
                    "cardinal {cardinal} is not a multiple of the subgroup order {subgroup_order}"
                )
            }
        }
    }
}

impl std::error::Error for Error {}

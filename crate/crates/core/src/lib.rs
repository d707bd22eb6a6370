//! Symmetric functions over `Q`, Littlewood–Richardson combinatorics, and
//! symmetric functions attached to wreath products `Γ ≀ S_n` with the
//! character tables they produce.

pub mod cyclotomic;
pub mod error;
pub mod group;
pub mod lr;
pub mod partition;
pub mod poly;
pub mod skew;
pub mod symfunc;
pub mod tableau;
pub mod transition;
pub mod wreath;

/// Exact rational numbers used for every coefficient over `Q`.
pub type Rational = num_rational::BigRational;
pub use num_bigint::BigInt;

pub use cyclotomic::Cyclotomic;
pub use error::{Error, Result};
pub use group::{builtin, load_group, GroupData, RawGroup, ValidationReport};
pub use lr::{colored_lr, lr_coeff, lr_coeff_oracle, pieri, PieriMode};
pub use partition::{colored_partitions_of, partitions_of, ColoredPartition, Partition};
pub use poly::SymPolynomial;
pub use skew::{ColoredSkewShape, SkewShape, StripType};
pub use symfunc::{Basis, SymAlgebra, SymFunc};
pub use tableau::{kostka, lattice_count, Content, Tableau, Word};
pub use transition::TransitionMatrix;
pub use wreath::{CharacterTable, ClassFunction, WreathBasis, WreathRing, WreathSymFunc};

//! Flag enumeration for hyperplane arrangements in Euclidean space and on
//! the torus: intersection posets, characteristic polynomials, region
//! counts, and ab/cd-indices of the induced face posets.
//!
//! The algebra is generic over the coefficient ring (see [`scalar`]); the
//! aliases below fix the usual choices.

pub mod error;
pub mod euclid;
pub mod graph;
pub mod hyperplane;
pub mod io;
pub mod latbase;
pub mod ncpoly;
pub mod poset;
pub mod scalar;
pub mod torus;
pub mod unipoly;

pub use error::{Error, Result};
pub use poset::RankedPoset;

/// Machine integers; every desk-scale example fits.
pub type Int = i64;
pub type BigInteger = num_bigint::BigInt;
pub type Rational = num_rational::Ratio<Int>;
pub type BigRational = num_rational::Ratio<BigInteger>;

pub type AbPoly = ncpoly::AbPolynomial<Int>;
pub type CdPoly = ncpoly::CdPolynomial<Int>;
pub type BigAbPoly = ncpoly::AbPolynomial<BigInteger>;
pub type BigCdPoly = ncpoly::CdPolynomial<BigInteger>;
pub type UniPoly = unipoly::UniPolynomial<Int>;

pub type IntMatrix = latbase::Matrix<Int>;
pub type TorusFlat = latbase::ToricFlat<Int>;
pub type AffineSubspace = latbase::AffineFlat<Int>;
pub type Hyperplane = hyperplane::Hyperplane<Int>;
pub type EuclidArrangement = euclid::EuclidArrangement<Int>;
pub type TorusArrangement = torus::TorusArrangement<Int>;
pub type IntersectionLattice = euclid::IntersectionLattice<Int>;
pub type ToricPoset = torus::ToricPoset<Int>;
pub type Arrangement = io::Arrangement<Int>;

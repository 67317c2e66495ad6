//! Exact multiplicity arithmetic for the group Γ = ℓ^× ⋊ {1, ι}.
//!
//! Here ℓ = 𝔽_{q²} is the quadratic extension of k = 𝔽_q (q an odd prime
//! power) and ι acts by the q-power Frobenius. This crate computes, with no
//! floating point anywhere:
//!
//! * the irreducible 𝔽̄_p-representations of Γ and their Grothendieck ring
//!   (tensor products, ξ-twists, restriction to ℓ^×), together with an
//!   independent character-theoretic oracle over the exact cyclotomic field
//!   ℚ(ζ_{q²−1}) that re-derives every decomposition from Brauer characters;
//! * reductions mod p of the tame and depth-bounded ramified inertial types
//!   attached to discrete-series representations, as classes in that ring;
//! * reductions of the symmetric-power weights Sym^{n} ⊗ det^{m} for K = ℚ_p;
//! * multiplicity functionals μ attached to local mod-p Galois classes, the
//!   symmetrized functional i(γ) = μ(γ) + μ(ξγ), and the resulting
//!   Hilbert-Samuel multiplicities of framed deformation rings with extended
//!   or discrete-series type conditions;
//! * sign predictions for congruences between newforms of even weight on
//!   Γ₀(p) with a_p = ±p^{k/2−1}.
//!
//! All exponents are residues and all constructors normalize to least
//! nonnegative representatives, so equality of classes is structural
//! equality. Heavy batch checks (the all-pairs tensor-versus-oracle grids in
//! [`selftest`]) run data-parallel under the default `parallel` feature and
//! sequentially without it.

pub mod chars;
pub mod congruence;
pub mod cyclo;
pub mod error;
pub mod groth;
pub mod irrep;
pub mod mult;
pub mod params;
pub mod selftest;
pub mod sym;
pub mod types;
pub mod wire;

mod batch;

pub use error::{Error, Result};
pub use groth::{EllClassElem, GrothElem};
pub use irrep::GammaIrrep;
pub use params::FieldParams;
pub use types::Sign;

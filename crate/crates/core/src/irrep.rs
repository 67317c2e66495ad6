//! The irreducible 𝔽̄_p-representations of Γ = ℓ^× ⋊ {1, ι}.
//!
//! Because |Γ| = 2(q²−1) is prime to p, the irreducibles over 𝔽̄_p match the
//! complex ones. They come in two shapes. Writing N: ℓ^× → k^× for the norm
//! and χ_a: ℓ^× → 𝔽̄^× for the a-th power of a fixed generator's character:
//!
//! * ξ^ε δ_a, one-dimensional: x ↦ N(x)^a on ℓ^×, ι ↦ (−1)^ε;
//! * r_a = Ind_{ℓ^×}^Γ χ_a, two-dimensional, defined when (q+1) ∤ a.
//!
//! The label of r_a only matters up to the Frobenius orbit {a, qa}, and
//! r_a ≅ ξ r_a. Labels are stored canonically so that structural equality is
//! isomorphism: one-dimensional indices are reduced mod q−1, two-dimensional
//! ones mod q²−1 and then replaced by min(a, qa mod q²−1).

use crate::error::{Error, Result};
use crate::params::{residue, FieldParams};
use std::fmt;

/// An irreducible representation of Γ, labeled canonically. Plain data: the
/// ambient q is carried by the containers ([`crate::GrothElem`],
/// [`crate::mult::MuFunctional`]) rather than by every label.
///
/// The derived order is the enumeration order everywhere: one-dimensionals
/// first, sorted by (a, ξ), then two-dimensionals by canonical index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GammaIrrep {
    /// ξ^ε δ_a with ε recorded as `xi`.
    OneDim { a: u32, xi: bool },
    /// r_a for the canonical orbit representative a.
    TwoDim { a: u32 },
}

/// Canonical representative min(a, qa) of the Frobenius orbit of a mod q²−1.
pub(crate) fn canonical_two_dim_index(params: &FieldParams, a: i64) -> u32 {
    let m = params.qsq_m1();
    let a = residue(a, m);
    let qa = residue(i64::from(a) * i64::from(params.q()), m);
    a.min(qa)
}

impl GammaIrrep {
    /// The character ξ^ε δ_a; any integer index is reduced mod q−1.
    pub fn one_dim(params: &FieldParams, a: i64, xi: bool) -> GammaIrrep {
        GammaIrrep::OneDim { a: residue(a, params.q_m1()), xi }
    }

    /// The induced representation r_a; fails when (q+1) | a, in which case
    /// the induction is not irreducible (see [`crate::groth::induced_from_ell`]).
    pub fn two_dim(params: &FieldParams, a: i64) -> Result<GammaIrrep> {
        let m = params.qsq_m1();
        let a = residue(a, m);
        if a % (params.q() + 1) == 0 {
            return Err(Error::NotIrreducible { a, q: params.q() });
        }
        Ok(GammaIrrep::TwoDim { a: canonical_two_dim_index(params, i64::from(a)) })
    }

    pub fn dim(&self) -> i64 {
        match self {
            GammaIrrep::OneDim { .. } => 1,
            GammaIrrep::TwoDim { .. } => 2,
        }
    }

    /// The exponent in ℤ/(q−1) by which the center k^× acts. For x ∈ k^× the
    /// norm is x², so ξ^ε δ_a has central exponent 2a; r_a restricts to
    /// χ_a ⊕ χ_{qa}, both acting by x^a on k^×.
    pub fn central_character(&self, params: &FieldParams) -> u32 {
        match self {
            GammaIrrep::OneDim { a, .. } => residue(2 * i64::from(*a), params.q_m1()),
            GammaIrrep::TwoDim { a } => residue(i64::from(*a), params.q_m1()),
        }
    }

    /// Tensoring with the order-two character ξ, which fixes every r_a.
    pub fn xi_twist(&self) -> GammaIrrep {
        match *self {
            GammaIrrep::OneDim { a, xi } => GammaIrrep::OneDim { a, xi: !xi },
            two_dim @ GammaIrrep::TwoDim { .. } => two_dim,
        }
    }

    /// Whether this label is canonical for the given parameters. Containers
    /// check this on insertion so that foreign labels cannot sneak in.
    pub fn is_valid_for(&self, params: &FieldParams) -> bool {
        match *self {
            GammaIrrep::OneDim { a, .. } => a < params.q_m1(),
            GammaIrrep::TwoDim { a } => {
                a < params.qsq_m1()
                    && a % (params.q() + 1) != 0
                    && canonical_two_dim_index(params, i64::from(a)) == a
            }
        }
    }
}

impl fmt::Display for GammaIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GammaIrrep::OneDim { a, xi: false } => write!(f, "delta_{a}"),
            GammaIrrep::OneDim { a, xi: true } => write!(f, "xi*delta_{a}"),
            GammaIrrep::TwoDim { a } => write!(f, "r_{a}"),
        }
    }
}

/// Every irreducible of Γ, in the canonical order: 2(q−1) one-dimensionals
/// followed by (q²−q)/2 two-dimensionals.
pub fn list_irreps(params: &FieldParams) -> Vec<GammaIrrep> {
    let mut out = Vec::with_capacity((2 * params.q_m1() + (params.q() * params.q() - params.q()) / 2) as usize);
    for a in 0..params.q_m1() {
        out.push(GammaIrrep::OneDim { a, xi: false });
        out.push(GammaIrrep::OneDim { a, xi: true });
    }
    for a in 0..params.qsq_m1() {
        let irrep = GammaIrrep::TwoDim { a };
        if irrep.is_valid_for(params) {
            out.push(irrep);
        }
    }
    out
}

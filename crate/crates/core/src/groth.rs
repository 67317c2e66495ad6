//! The Grothendieck group of Γ and its ring structure.
//!
//! Elements are finite ℤ-linear combinations of canonical irreducible
//! labels. Virtual (negative) coefficients are allowed; operations that
//! produce reductions of actual representations only ever return effective
//! combinations. The tensor rules are the Mackey identities for the index-two
//! subgroup ℓ^× ⊂ Γ; the character oracle in [`crate::chars`] re-derives all
//! of them independently, and the test suites compare the two on every pair
//! of irreducibles.

use crate::error::{Error, Result};
use crate::irrep::{canonical_two_dim_index, GammaIrrep};
use crate::params::{residue, FieldParams};
use std::collections::BTreeMap;
use std::fmt;

/// An element of the Grothendieck group of Γ over parameters q = p^f.
/// Zero coefficients are never stored, so equality is structural.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrothElem {
    params: FieldParams,
    coeffs: BTreeMap<GammaIrrep, i64>,
}

impl GrothElem {
    pub fn zero(params: FieldParams) -> GrothElem {
        GrothElem { params, coeffs: BTreeMap::new() }
    }

    pub fn from_irrep(params: FieldParams, irrep: GammaIrrep) -> Result<GrothElem> {
        let mut elem = GrothElem::zero(params);
        elem.add_irrep(irrep, 1)?;
        Ok(elem)
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    /// Adds c copies of an irreducible, dropping the entry if it cancels.
    pub fn add_irrep(&mut self, irrep: GammaIrrep, c: i64) -> Result<()> {
        if !irrep.is_valid_for(&self.params) {
            return Err(Error::Internal(format!(
                "label {irrep} is not canonical for q = {}",
                self.params.q()
            )));
        }
        let entry = self.coeffs.entry(irrep).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&irrep);
        }
        Ok(())
    }

    pub fn coeff(&self, irrep: &GammaIrrep) -> i64 {
        self.coeffs.get(irrep).copied().unwrap_or(0)
    }

    /// Terms in canonical order, zero coefficients omitted.
    pub fn terms(&self) -> impl Iterator<Item = (&GammaIrrep, i64)> {
        self.coeffs.iter().map(|(k, &v)| (k, v))
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.coeffs.values().all(|&c| c >= 0)
    }

    pub fn add(&self, other: &GrothElem) -> Result<GrothElem> {
        self.params.ensure_same(&other.params)?;
        let mut out = self.clone();
        for (irrep, c) in other.terms() {
            out.add_irrep(*irrep, c)?;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &GrothElem) -> Result<GrothElem> {
        self.add(&other.scale(-1))
    }

    pub fn scale(&self, c: i64) -> GrothElem {
        if c == 0 {
            return GrothElem::zero(self.params);
        }
        GrothElem {
            params: self.params,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, v * c)).collect(),
        }
    }

    /// Total dimension, a ring homomorphism to ℤ.
    pub fn dim(&self) -> i64 {
        self.terms().map(|(irrep, c)| c * irrep.dim()).sum()
    }

    /// ξ ⊗ −, a ring automorphism of order two.
    pub fn twist_xi(&self) -> GrothElem {
        GrothElem {
            params: self.params,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.xi_twist(), *v)).collect(),
        }
    }

    /// Tensor product, extended bilinearly from the irreducible pairs.
    pub fn tensor(&self, other: &GrothElem) -> Result<GrothElem> {
        self.params.ensure_same(&other.params)?;
        let mut out = GrothElem::zero(self.params);
        for (left, c1) in self.terms() {
            for (right, c2) in other.terms() {
                let prod = tensor_irreps(&self.params, left, right);
                for (irrep, c) in prod.terms() {
                    out.add_irrep(*irrep, c * c1 * c2)?;
                }
            }
        }
        Ok(out)
    }

    /// Restriction to ℓ^×, a ring homomorphism. ξ^ε δ_a restricts to the
    /// norm power χ_{a(q+1)} and r_a to χ_a + χ_{qa}.
    pub fn restrict_to_ell(&self) -> EllClassElem {
        let mut out = EllClassElem::zero(self.params);
        let q = i64::from(self.params.q());
        for (irrep, c) in self.terms() {
            match *irrep {
                GammaIrrep::OneDim { a, .. } => out.add_char(i64::from(a) * (q + 1), c),
                GammaIrrep::TwoDim { a } => {
                    out.add_char(i64::from(a), c);
                    out.add_char(i64::from(a) * q, c);
                }
            }
        }
        out
    }
}

impl fmt::Display for GrothElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (irrep, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " {} ", if c < 0 { "-" } else { "+" })?;
            } else if c < 0 {
                write!(f, "-")?;
            }
            if c.abs() != 1 {
                write!(f, "{}*", c.abs())?;
            }
            write!(f, "{irrep}")?;
        }
        Ok(())
    }
}

/// The class of Ind_{ℓ^×}^Γ χ_a for any integer a. This is where reducible
/// inductions split: (q+1) | a gives δ_b + ξ δ_b with b = a/(q+1), and
/// everything else gives the irreducible r_a.
pub fn induced_from_ell(params: FieldParams, a: i64) -> GrothElem {
    let m = params.qsq_m1();
    let a = residue(a, m);
    let mut out = GrothElem::zero(params);
    if a % (params.q() + 1) == 0 {
        // every multiple of q+1 in [0, q²−1) is (q+1)·b with b < q−1
        let b = a / (params.q() + 1);
        out.add_irrep(GammaIrrep::OneDim { a: b, xi: false }, 1).expect("canonical");
        out.add_irrep(GammaIrrep::OneDim { a: b, xi: true }, 1).expect("canonical");
    } else {
        let a = canonical_two_dim_index(&params, i64::from(a));
        out.add_irrep(GammaIrrep::TwoDim { a }, 1).expect("canonical");
    }
    out
}

/// Product of two irreducibles. One-dimensionals multiply through their
/// labels; a one-dimensional against an induction follows the projection
/// formula; two inductions follow the Mackey double-coset formula.
pub fn tensor_irreps(params: &FieldParams, left: &GammaIrrep, right: &GammaIrrep) -> GrothElem {
    let q = i64::from(params.q());
    match (*left, *right) {
        (GammaIrrep::OneDim { a: a1, xi: x1 }, GammaIrrep::OneDim { a: a2, xi: x2 }) => {
            let irrep = GammaIrrep::one_dim(params, i64::from(a1) + i64::from(a2), x1 != x2);
            GrothElem::from_irrep(*params, irrep).expect("canonical")
        }
        (GammaIrrep::OneDim { a: b, .. }, GammaIrrep::TwoDim { a })
        | (GammaIrrep::TwoDim { a }, GammaIrrep::OneDim { a: b, .. }) => {
            induced_from_ell(*params, i64::from(a) + i64::from(b) * (q + 1))
        }
        (GammaIrrep::TwoDim { a }, GammaIrrep::TwoDim { a: b }) => {
            let first = induced_from_ell(*params, i64::from(a) + i64::from(b));
            let second = induced_from_ell(*params, i64::from(a) + q * i64::from(b));
            first.add(&second).expect("same params")
        }
    }
}

/// An element of the Grothendieck group of ℓ^×: a ℤ-combination of the
/// characters χ_a, a mod q²−1. Multiplication is χ_a χ_b = χ_{a+b}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EllClassElem {
    params: FieldParams,
    coeffs: BTreeMap<u32, i64>,
}

impl EllClassElem {
    pub fn zero(params: FieldParams) -> EllClassElem {
        EllClassElem { params, coeffs: BTreeMap::new() }
    }

    pub fn from_char(params: FieldParams, a: i64) -> EllClassElem {
        let mut out = EllClassElem::zero(params);
        out.add_char(a, 1);
        out
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn add_char(&mut self, a: i64, c: i64) {
        let a = residue(a, self.params.qsq_m1());
        let entry = self.coeffs.entry(a).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.coeffs.remove(&a);
        }
    }

    pub fn coeff(&self, a: i64) -> i64 {
        self.coeffs.get(&residue(a, self.params.qsq_m1())).copied().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.coeffs.iter().map(|(&k, &v)| (k, v))
    }

    pub fn add(&self, other: &EllClassElem) -> Result<EllClassElem> {
        self.params.ensure_same(&other.params)?;
        let mut out = self.clone();
        for (a, c) in other.terms() {
            out.add_char(i64::from(a), c);
        }
        Ok(out)
    }

    pub fn mul(&self, other: &EllClassElem) -> Result<EllClassElem> {
        self.params.ensure_same(&other.params)?;
        let mut out = EllClassElem::zero(self.params);
        for (a, c1) in self.terms() {
            for (b, c2) in other.terms() {
                out.add_char(i64::from(a) + i64::from(b), c1 * c2);
            }
        }
        Ok(out)
    }

    pub fn dim(&self) -> i64 {
        self.coeffs.values().sum()
    }
}

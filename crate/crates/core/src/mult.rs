//! Multiplicity functionals and Hilbert-Samuel multiplicities.
//!
//! To a semisimple mod-p local Galois class ρ̄ this module attaches the
//! functional μ on irreducibles of Γ for which the framed deformation ring
//! with extended type (τ, ±) and weight w has Hilbert-Samuel multiplicity
//!
//! e(τ^±, w) = μ(σ̄_Γ(τ, ±) ⊗ σ̄_w),
//!
//! μ being evaluated term by term on effective classes. The symmetrized
//! functional i(γ) = μ(γ) + μ(ξγ) computes the discrete-series rings
//! instead: d_τ · e(τ^ds, w) = i(σ̄_Γ(τ) ⊗ σ̄_w). Both routes are computed
//! and compared on every discrete-series call; by linearity and the sign
//! swap identity they must agree, so a mismatch is a bug, never bad input.
//!
//! The built-in classes are the unramified-up-to-twist shapes over ℚ_p with
//! the uniformizer normalized to p: très ramifié and peu ramifié nonsplit
//! extensions, and the split class. Everything else enters as a custom
//! table, subject to the one-dimensional support law: only a twist of an
//! extension of the trivial character by the cyclotomic one can charge a
//! one-dimensional weight, and at most one.

use crate::error::{Error, Result};
use crate::groth::GrothElem;
use crate::irrep::GammaIrrep;
use crate::params::{residue, FieldParams};
use crate::sym::{sigma_w_bar, HodgeTateType};
use crate::types::{d_tau, sigma_gamma_reduction, InertialTypeDesc, Sign};
use std::collections::BTreeMap;
use std::fmt;

/// A finitely supported functional on irreducibles with values in ℕ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MuFunctional {
    params: FieldParams,
    entries: BTreeMap<GammaIrrep, u64>,
}

impl MuFunctional {
    pub fn empty(params: FieldParams) -> MuFunctional {
        MuFunctional { params, entries: BTreeMap::new() }
    }

    pub fn from_entries(
        params: FieldParams,
        entries: impl IntoIterator<Item = (GammaIrrep, u64)>,
    ) -> Result<MuFunctional> {
        let mut out = MuFunctional::empty(params);
        for (irrep, value) in entries {
            out.set(irrep, value)?;
        }
        Ok(out)
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn set(&mut self, irrep: GammaIrrep, value: u64) -> Result<()> {
        if !irrep.is_valid_for(&self.params) {
            return Err(Error::Internal(format!(
                "label {irrep} is not canonical for q = {}",
                self.params.q()
            )));
        }
        if value == 0 {
            self.entries.remove(&irrep);
        } else {
            self.entries.insert(irrep, value);
        }
        Ok(())
    }

    pub fn value(&self, irrep: &GammaIrrep) -> u64 {
        self.entries.get(irrep).copied().unwrap_or(0)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&GammaIrrep, u64)> {
        self.entries.iter().map(|(k, &v)| (k, v))
    }

    pub fn support(&self) -> impl Iterator<Item = &GammaIrrep> {
        self.entries.keys()
    }

    pub fn one_dim_support(&self) -> usize {
        self.entries.keys().filter(|i| i.dim() == 1).count()
    }
}

impl fmt::Display for MuFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (irrep, v)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{irrep}: {v}")?;
        }
        write!(f, "}}")
    }
}

/// A semisimplified-up-to-conventions local Galois class, as much of it as
/// the multiplicity formulas consume.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RhoBarClass {
    /// The très ramifié extensions of the trivial character by the
    /// cyclotomic one, twisted by ω^n.
    TresRamifie { n: u32 },
    /// The peu ramifié extensions with nonzero class, twisted by ω^n.
    PeuRamifieNonzero { n: u32 },
    /// The split class (ω ⊕ 1) ⊗ ω^n.
    Split { n: u32 },
    /// Any other class, provided through its μ table directly. The flag
    /// states whether the class is a twist of an extension of the trivial
    /// character by the cyclotomic one; only such classes may charge
    /// one-dimensional weights.
    Custom { table: MuFunctional, twist_of_cyclotomic_extension: bool },
}

impl RhoBarClass {
    pub fn is_builtin(&self) -> bool {
        !matches!(self, RhoBarClass::Custom { .. })
    }

    pub fn builtin_twist_exponent(&self) -> Option<u32> {
        match *self {
            RhoBarClass::TresRamifie { n }
            | RhoBarClass::PeuRamifieNonzero { n }
            | RhoBarClass::Split { n } => Some(n),
            RhoBarClass::Custom { .. } => None,
        }
    }
}

/// The one-dimensional weight ξ^n δ_n charged by every built-in class.
fn builtin_one_dim(params: &FieldParams, n: u32) -> GammaIrrep {
    let n = residue(i64::from(n), params.q_m1());
    GammaIrrep::OneDim { a: n, xi: n % 2 == 1 }
}

/// The two-dimensional weight r_{n(p+1)+p−1} charged by the peu ramifié and
/// split classes. Its index is never a multiple of p+1.
fn builtin_two_dim(params: &FieldParams, n: u32) -> GammaIrrep {
    let p = i64::from(params.p());
    GammaIrrep::two_dim(params, i64::from(n) * (p + 1) + p - 1)
        .expect("n(p+1)+p-1 is -2 mod p+1, never 0")
}

/// The multiplicity functional of a class. Built-ins exist only over ℚ_p;
/// custom tables are validated against the one-dimensional support law.
pub fn mu_for(params: &FieldParams, rho: &RhoBarClass) -> Result<MuFunctional> {
    match rho {
        RhoBarClass::Custom { table, twist_of_cyclotomic_extension } => {
            params.ensure_same(table.params())?;
            let one_dims = table.one_dim_support();
            if *twist_of_cyclotomic_extension {
                if one_dims > 1 {
                    return Err(Error::InvalidMuTable(format!(
                        "a twist of a cyclotomic extension charges at most one one-dimensional weight, found {one_dims}"
                    )));
                }
            } else if one_dims > 0 {
                return Err(Error::InvalidMuTable(
                    "only a twist of a cyclotomic extension can charge one-dimensional weights"
                        .into(),
                ));
            }
            Ok(table.clone())
        }
        builtin => {
            if !params.is_prime_field() {
                return Err(Error::RequiresPrimeField("the built-in Galois classes".into()));
            }
            let n = builtin.builtin_twist_exponent().expect("built-in");
            let mut table = MuFunctional::empty(*params);
            table.set(builtin_one_dim(params, n), 1)?;
            match builtin {
                RhoBarClass::TresRamifie { .. } => {}
                RhoBarClass::PeuRamifieNonzero { .. } => {
                    table.set(builtin_two_dim(params, n), 2)?;
                }
                RhoBarClass::Split { .. } => {
                    table.set(builtin_two_dim(params, n), 4)?;
                }
                RhoBarClass::Custom { .. } => unreachable!(),
            }
            Ok(table)
        }
    }
}

/// Evaluate a functional on an effective class, term by term. Virtual
/// classes with a negative coefficient are rejected: they are not
/// reductions of anything.
pub fn eval_mu(mu: &MuFunctional, elem: &GrothElem) -> Result<u64> {
    mu.params().ensure_same(elem.params())?;
    let mut total: u64 = 0;
    for (irrep, c) in elem.terms() {
        if c < 0 {
            return Err(Error::NegativeCoefficient { irrep: irrep.to_string(), coeff: c });
        }
        total = (c as u64)
            .checked_mul(mu.value(irrep))
            .and_then(|v| total.checked_add(v))
            .ok_or_else(|| Error::Internal("multiplicity overflow".into()))?;
    }
    Ok(total)
}

/// The ξ-symmetrization i(γ) = μ(γ) + μ(ξγ). On two-dimensionals, which ξ
/// fixes, this doubles μ.
pub fn i_from_mu(mu: &MuFunctional) -> MuFunctional {
    let mut out = MuFunctional::empty(*mu.params());
    for (irrep, _) in mu.entries() {
        for key in [*irrep, irrep.xi_twist()] {
            let value = mu.value(&key) + mu.value(&key.xi_twist());
            out.set(key, value).expect("twist preserves validity");
        }
    }
    out
}

/// The weight set of a class: the support of its symmetrized functional,
/// in canonical order.
pub fn weight_set(params: &FieldParams, rho: &RhoBarClass) -> Result<Vec<GammaIrrep>> {
    Ok(i_from_mu(&mu_for(params, rho)?).support().copied().collect())
}

/// A deformation condition: the Galois class, a discrete-series inertial
/// type, and an algebraic weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeformationProblem {
    pub rho: RhoBarClass,
    pub tau: InertialTypeDesc,
    pub w: HodgeTateType,
}

fn validate_problem(params: &FieldParams, pb: &DeformationProblem) -> Result<()> {
    if !params.is_prime_field() {
        if pb.rho.is_builtin() {
            return Err(Error::RequiresPrimeField("the built-in Galois classes".into()));
        }
        if !pb.w.is_trivial() {
            return Err(Error::RequiresPrimeField("nontrivial algebraic weights".into()));
        }
    }
    Ok(())
}

/// Hilbert-Samuel multiplicity of the deformation ring with the extended
/// type condition (τ, sign) and weight w.
pub fn multiplicity_extended(
    params: &FieldParams,
    pb: &DeformationProblem,
    sign: Sign,
) -> Result<u64> {
    validate_problem(params, pb)?;
    let mu = mu_for(params, &pb.rho)?;
    let sigma = sigma_gamma_reduction(params, &pb.tau, sign)?;
    let weight = sigma_w_bar(params, &pb.w)?;
    eval_mu(&mu, &sigma.tensor(&weight)?)
}

/// Hilbert-Samuel multiplicity of the deformation ring with the
/// discrete-series type condition, computed along both routes:
/// i(σ̄_Γ ⊗ σ̄_w) / d_τ and (e(+1) + e(−1)) / d_τ. The two always agree
/// and divide exactly; a failure of either is reported as an internal
/// error because it would falsify the underlying linear identities.
pub fn multiplicity_ds(params: &FieldParams, pb: &DeformationProblem) -> Result<u64> {
    validate_problem(params, pb)?;
    let d = u64::from(d_tau(&pb.tau)?);
    let mu = mu_for(params, &pb.rho)?;
    let weight = sigma_w_bar(params, &pb.w)?;
    let sigma_plus = sigma_gamma_reduction(params, &pb.tau, Sign::Plus)?;
    let tensored = sigma_plus.tensor(&weight)?;

    let via_i = eval_mu(&i_from_mu(&mu), &tensored)?;
    let e_plus = eval_mu(&mu, &tensored)?;
    let e_minus = eval_mu(&mu, &tensored.twist_xi())?;
    if via_i != e_plus + e_minus {
        return Err(Error::Internal(format!(
            "symmetrized functional gives {via_i} but the sign sum gives {}",
            e_plus + e_minus
        )));
    }
    if via_i % d != 0 {
        return Err(Error::Internal(format!(
            "discrete-series multiplicity {via_i} is not divisible by d_tau = {d}"
        )));
    }
    Ok(via_i / d)
}

//! Inertial types for the quaternion algebra over K and their reductions.
//!
//! A smooth irreducible representation of the units of the quaternion
//! division algebra with trivial central uniformizer action restricts to
//! inertia in one of four shapes: scalar tame (scal), an irreducibly
//! induced tame pair (red), a ramified induction (irr), or a split tame
//! pair (char). The first three are the discrete-series shapes; each of
//! those admits exactly two extensions to the full type, differing by the
//! unramified quadratic twist, and the two extensions coincide as
//! representations exactly in the (red) case.
//!
//! [`sigma_gamma_reduction`] computes the semisimplified mod-p reduction of
//! a stable lattice in the type as a class in the Grothendieck group of Γ.
//! The sign convention for the two extensions is fixed once and for all
//! here: +1 names the branch whose one-dimensional constituents carry no
//! ξ-twist, and −1 names its ξ-twist.

use crate::error::{Error, Result};
use crate::groth::GrothElem;
use crate::irrep::{canonical_two_dim_index, list_irreps, GammaIrrep};
use crate::params::{residue, FieldParams};
use std::fmt;

/// Choice of one of the two extensions of a discrete-series inertial type,
/// or equivalently of one branch of its reduction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_i64(v: i64) -> Result<Sign> {
        match v {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            _ => Err(Error::DataInconsistency(format!("sign must be 1 or -1, got {v}"))),
        }
    }

    /// (−1)^e.
    pub fn from_parity(e: i64) -> Sign {
        if e.rem_euclid(2) == 0 {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn times(self, other: Sign) -> Sign {
        if self == other {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", if *self == Sign::Plus { "+1" } else { "-1" })
    }
}

/// The four restriction-to-inertia shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Form {
    Scal,
    Char,
    Red,
    Irr,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Form::Scal => "scal",
            Form::Char => "char",
            Form::Red => "red",
            Form::Irr => "irr",
        };
        write!(f, "{name}")
    }
}

/// Combinatorial description of an inertial type.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InertialTypeDesc {
    /// Inertia acts through the scalar tame character of exponent n, taken
    /// mod q−1.
    ScalTame { n: u32 },
    /// Induced from a tame character of the unramified quadratic extension
    /// with exponent a mod q²−1, irreducible, so (q+1) ∤ a. Stored by the
    /// canonical Frobenius-orbit representative, like the labels r_a.
    RedTame { a: u32 },
    /// Induced from a ramified quadratic extension: central tame exponent n
    /// mod q−1, a choice α ∈ {0, 1} of extension of the central character
    /// to the ι-part, and a depth parameter level ≥ 1 (level 1 is the
    /// least ramified case).
    IrrRamified { n: u32, alpha: u8, level: u32 },
    /// A split tame pair, not discrete series. Carried only so that the
    /// classification is total; every reduction or multiplicity question
    /// rejects it.
    Char,
}

impl InertialTypeDesc {
    pub fn scal_tame(params: &FieldParams, n: i64) -> InertialTypeDesc {
        InertialTypeDesc::ScalTame { n: residue(n, params.q_m1()) }
    }

    pub fn red_tame(params: &FieldParams, a: i64) -> Result<InertialTypeDesc> {
        let a = residue(a, params.qsq_m1());
        if a % (params.q() + 1) == 0 {
            return Err(Error::UnsupportedDescriptor(format!(
                "a tame pair with exponent {a} divisible by q+1 is not irreducibly induced"
            )));
        }
        Ok(InertialTypeDesc::RedTame { a: canonical_two_dim_index(params, i64::from(a)) })
    }

    pub fn irr_ramified(params: &FieldParams, n: i64, alpha: u8, level: u32) -> Result<InertialTypeDesc> {
        if alpha > 1 {
            return Err(Error::UnsupportedDescriptor(format!(
                "alpha selects one of two extensions and must be 0 or 1, got {alpha}"
            )));
        }
        if level == 0 {
            return Err(Error::UnsupportedDescriptor("level must be at least 1".into()));
        }
        Ok(InertialTypeDesc::IrrRamified { n: residue(n, params.q_m1()), alpha, level })
    }

    pub fn form(&self) -> Form {
        match self {
            InertialTypeDesc::ScalTame { .. } => Form::Scal,
            InertialTypeDesc::RedTame { .. } => Form::Red,
            InertialTypeDesc::IrrRamified { .. } => Form::Irr,
            InertialTypeDesc::Char => Form::Char,
        }
    }
}

/// Classification of the descriptor. Total, unlike everything below.
pub fn classify_form(desc: &InertialTypeDesc) -> Form {
    desc.form()
}

fn ensure_discrete_series(desc: &InertialTypeDesc) -> Result<()> {
    if desc.form() == Form::Char {
        Err(Error::NotDiscreteSeries(
            "a split tame pair has no extension to the quaternionic side".into(),
        ))
    } else {
        Ok(())
    }
}

/// The defect d_τ: the number of extended types sharing each reduction
/// branch. It is 2 exactly for (red), where the two extensions coincide.
pub fn d_tau(desc: &InertialTypeDesc) -> Result<u32> {
    ensure_discrete_series(desc)?;
    Ok(match desc.form() {
        Form::Red => 2,
        _ => 1,
    })
}

/// Whether the two extensions of the type are non-isomorphic, that is
/// whether twisting by the unramified quadratic character changes it.
pub fn conjugates_distinct(desc: &InertialTypeDesc) -> Result<bool> {
    Ok(d_tau(desc)? == 1)
}

/// All irreducibles of Γ on which the center k^× acts by the exponent c, in
/// canonical order. For odd c these are (q+1)/2 two-dimensionals; for even
/// c, four one-dimensionals and (q−1)/2 two-dimensionals.
pub fn irreps_with_central_character(params: &FieldParams, c: i64) -> Vec<GammaIrrep> {
    let c = residue(c, params.q_m1());
    list_irreps(params)
        .into_iter()
        .filter(|irrep| irrep.central_character(params) == c)
        .collect()
}

/// Semisimplified mod-p reduction of a stable lattice in the chosen
/// extension of the type, as an effective class in the Grothendieck group.
///
/// Tame cases are a single irreducible. The ramified induction of level a
/// spreads over the full central-character fiber: q^{a−1} copies of each
/// two-dimensional, and, when n is even, one-dimensionals δ_{n/2} and
/// δ_{(n+q−1)/2} with ξ-parities split (q^{a−1}+1)/2 against (q^{a−1}−1)/2.
/// The total dimension is q^{a−1}(q+1) in every case.
pub fn sigma_gamma_reduction(
    params: &FieldParams,
    desc: &InertialTypeDesc,
    sign: Sign,
) -> Result<GrothElem> {
    ensure_discrete_series(desc)?;
    let plus_branch = match *desc {
        InertialTypeDesc::ScalTame { n } => {
            GrothElem::from_irrep(*params, GammaIrrep::OneDim { a: n, xi: false })?
        }
        InertialTypeDesc::RedTame { a } => {
            GrothElem::from_irrep(*params, GammaIrrep::two_dim(params, i64::from(a))?)?
        }
        InertialTypeDesc::IrrRamified { n, alpha, level } => {
            let q_pow = i64::from(params.q())
                .checked_pow(level - 1)
                .filter(|&v| v < i64::MAX / i64::from(params.q() + 1))
                .ok_or_else(|| {
                    Error::UnsupportedDescriptor(format!("level {level} overflows the coefficient range"))
                })?;
            let mut out = GrothElem::zero(*params);
            for irrep in irreps_with_central_character(params, i64::from(n)) {
                match irrep {
                    GammaIrrep::TwoDim { .. } => out.add_irrep(irrep, q_pow)?,
                    GammaIrrep::OneDim { xi, .. } => {
                        // n is even here; the fiber's one-dimensionals are
                        // ξ^ε δ_{n/2} and ξ^ε δ_{(n+q−1)/2} for both ε, and
                        // the branch puts the larger share on ξ^α.
                        let weight = if u8::from(xi) == alpha % 2 {
                            (q_pow + 1) / 2
                        } else {
                            (q_pow - 1) / 2
                        };
                        out.add_irrep(irrep, weight)?;
                    }
                }
            }
            out
        }
        InertialTypeDesc::Char => unreachable!("rejected above"),
    };
    Ok(match sign {
        Sign::Plus => plus_branch,
        Sign::Minus => plus_branch.twist_xi(),
    })
}

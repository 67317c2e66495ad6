//! JSON wire formats for every domain object, and the conversions between
//! wire and domain values.
//!
//! Wire structs are plain serde records. Deserialization is total on the
//! structural level; semantic validation (canonical labels, supported
//! descriptors, sign values) happens in the `to_*` conversions so that a
//! malformed document and an unsupported-but-well-formed one can be told
//! apart by callers. Serialization of domain values goes through `From`
//! impls and is deterministic: terms and table entries come out in the
//! canonical label order.

use crate::congruence::{
    NewformLocalData, Prediction, PredictOutcome, UnramifiedTwist,
};
use crate::error::{Error, Result};
use crate::groth::{EllClassElem, GrothElem};
use crate::irrep::GammaIrrep;
use crate::mult::{DeformationProblem, MuFunctional, RhoBarClass};
use crate::params::FieldParams;
use crate::sym::HodgeTateType;
use crate::types::{InertialTypeDesc, Sign};
use serde::{Deserialize, Serialize};

/// Label kind of an irreducible: a one-dimensional δ (possibly ξ-twisted)
/// or a two-dimensional r.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TermKind {
    Delta,
    R,
}

/// An irreducible label. For "delta" the optional `xi` flag picks the
/// twisted character (absent means untwisted); for "r" the flag is
/// accepted and ignored, since the twist fixes the two-dimensionals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IrrepWire {
    pub kind: TermKind,
    pub a: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<bool>,
}

impl IrrepWire {
    pub fn to_irrep(&self, params: &FieldParams) -> Result<GammaIrrep> {
        match self.kind {
            TermKind::Delta => {
                Ok(GammaIrrep::one_dim(params, self.a, self.xi.unwrap_or(false)))
            }
            TermKind::R => GammaIrrep::two_dim(params, self.a),
        }
    }
}

impl From<&GammaIrrep> for IrrepWire {
    fn from(irrep: &GammaIrrep) -> IrrepWire {
        match *irrep {
            GammaIrrep::OneDim { a, xi } => {
                IrrepWire { kind: TermKind::Delta, a: i64::from(a), xi: Some(xi) }
            }
            GammaIrrep::TwoDim { a } => {
                IrrepWire { kind: TermKind::R, a: i64::from(a), xi: None }
            }
        }
    }
}

/// One term of a Grothendieck group element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermWire {
    pub kind: TermKind,
    pub a: i64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<bool>,
    pub coeff: i64,
}

/// A Grothendieck group element: `{"q": ..., "terms": [...]}` with terms
/// in canonical label order on output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrothWire {
    pub q: u32,
    pub terms: Vec<TermWire>,
}

impl GrothWire {
    pub fn to_elem(&self, params: &FieldParams) -> Result<GrothElem> {
        if self.q != params.q() {
            return Err(Error::MismatchedParams { left: self.q, right: params.q() });
        }
        let mut elem = GrothElem::zero(*params);
        for term in &self.terms {
            let irrep =
                IrrepWire { kind: term.kind, a: term.a, xi: term.xi }.to_irrep(params)?;
            elem.add_irrep(irrep, term.coeff)?;
        }
        Ok(elem)
    }
}

impl From<&GrothElem> for GrothWire {
    fn from(elem: &GrothElem) -> GrothWire {
        let terms = elem
            .terms()
            .map(|(irrep, coeff)| {
                let IrrepWire { kind, a, xi } = IrrepWire::from(irrep);
                TermWire { kind, a, xi, coeff }
            })
            .collect();
        GrothWire { q: elem.params().q(), terms }
    }
}

/// One term of a virtual character of ℓ^×.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllTermWire {
    pub a: i64,
    pub coeff: i64,
}

/// A virtual character of ℓ^×, exponents mod q²−1 in increasing order on
/// output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EllElemWire {
    pub q: u32,
    pub terms: Vec<EllTermWire>,
}

impl From<&EllClassElem> for EllElemWire {
    fn from(elem: &EllClassElem) -> EllElemWire {
        let terms = elem
            .terms()
            .map(|(a, coeff)| EllTermWire { a: i64::from(a), coeff })
            .collect();
        EllElemWire { q: elem.params().q(), terms }
    }
}

/// Tag for the four inertial shapes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FormTag {
    Scal,
    Red,
    Irr,
    Char,
}

/// An inertial type descriptor. Which fields are required depends on the
/// form: scal needs n, red needs a, irr needs n and optionally alpha
/// (default 0) and level (default 1), char needs nothing. A level other
/// than 1 is meaningful only for irr; deeper versions of the tame forms
/// exist but are outside what this crate computes, so they are rejected
/// as unsupported rather than silently truncated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TypeDescWire {
    pub form: FormTag,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alpha: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub level: Option<u32>,
}

impl TypeDescWire {
    fn require(field: Option<i64>, form: &str, name: &str) -> Result<i64> {
        field.ok_or_else(|| {
            Error::DataInconsistency(format!("form \"{form}\" requires the field \"{name}\""))
        })
    }

    fn reject_depth(&self, form: &str) -> Result<()> {
        match self.level {
            None | Some(1) => Ok(()),
            Some(l) => Err(Error::UnsupportedDescriptor(format!(
                "form \"{form}\" at level {l}; only level 1 tame forms are computed"
            ))),
        }
    }

    pub fn to_desc(&self, params: &FieldParams) -> Result<InertialTypeDesc> {
        match self.form {
            FormTag::Scal => {
                self.reject_depth("scal")?;
                Ok(InertialTypeDesc::scal_tame(params, Self::require(self.n, "scal", "n")?))
            }
            FormTag::Red => {
                self.reject_depth("red")?;
                InertialTypeDesc::red_tame(params, Self::require(self.a, "red", "a")?)
            }
            FormTag::Irr => InertialTypeDesc::irr_ramified(
                params,
                Self::require(self.n, "irr", "n")?,
                self.alpha.unwrap_or(0),
                self.level.unwrap_or(1),
            ),
            FormTag::Char => Ok(InertialTypeDesc::Char),
        }
    }
}

impl From<&InertialTypeDesc> for TypeDescWire {
    fn from(desc: &InertialTypeDesc) -> TypeDescWire {
        let blank = TypeDescWire {
            form: FormTag::Char,
            n: None,
            a: None,
            alpha: None,
            level: None,
        };
        match *desc {
            InertialTypeDesc::ScalTame { n } => {
                TypeDescWire { form: FormTag::Scal, n: Some(i64::from(n)), ..blank }
            }
            InertialTypeDesc::RedTame { a } => {
                TypeDescWire { form: FormTag::Red, a: Some(i64::from(a)), ..blank }
            }
            InertialTypeDesc::IrrRamified { n, alpha, level } => TypeDescWire {
                form: FormTag::Irr,
                n: Some(i64::from(n)),
                alpha: Some(alpha),
                level: Some(level),
                ..blank
            },
            InertialTypeDesc::Char => blank,
        }
    }
}

/// Extension choice for a multiplicity request: one of the two signs, or
/// the string "ds" for the discrete-series (sign-summed) ring.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SignOrDs {
    Num(i64),
    Text(String),
}

/// What a sign payload resolved to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SignChoice {
    Extension(Sign),
    DiscreteSeries,
}

impl SignOrDs {
    pub fn interpret(&self) -> Result<SignChoice> {
        match self {
            SignOrDs::Num(v) => Sign::from_i64(*v).map(SignChoice::Extension),
            SignOrDs::Text(s) if s == "ds" => Ok(SignChoice::DiscreteSeries),
            SignOrDs::Text(s) => Err(Error::DataInconsistency(format!(
                "sign must be 1, -1 or \"ds\", got \"{s}\""
            ))),
        }
    }
}

/// An algebraic weight (n, m) for Sym^n ⊗ det^m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HodgeWire {
    pub n: u32,
    pub m: i64,
}

impl HodgeWire {
    pub fn to_weight(&self) -> HodgeTateType {
        HodgeTateType::new(self.n, self.m)
    }
}

impl From<&HodgeTateType> for HodgeWire {
    fn from(w: &HodgeTateType) -> HodgeWire {
        HodgeWire { n: w.n, m: w.m }
    }
}

/// One entry of a multiplicity functional table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuEntryWire {
    pub irrep: IrrepWire,
    pub value: u64,
}

/// A multiplicity functional, `{"entries": [...]}` in canonical label
/// order on output. Entries that name the same irreducible after
/// canonicalization are rejected rather than merged.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MuWire {
    pub entries: Vec<MuEntryWire>,
}

impl MuWire {
    pub fn to_mu(&self, params: &FieldParams) -> Result<MuFunctional> {
        let mut mu = MuFunctional::empty(*params);
        for entry in &self.entries {
            let irrep = entry.irrep.to_irrep(params)?;
            if mu.value(&irrep) != 0 {
                return Err(Error::DataInconsistency(format!(
                    "duplicate table entry for {irrep}"
                )));
            }
            mu.set(irrep, entry.value)?;
        }
        Ok(mu)
    }
}

impl From<&MuFunctional> for MuWire {
    fn from(mu: &MuFunctional) -> MuWire {
        let entries = mu
            .entries()
            .map(|(irrep, value)| MuEntryWire { irrep: IrrepWire::from(irrep), value })
            .collect();
        MuWire { entries }
    }
}

/// A residual Galois class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "class", rename_all = "snake_case")]
pub enum RhoWire {
    TresRamifie { n: u32 },
    PeuRamifieNonzero { n: u32 },
    Split { n: u32 },
    Custom { table: MuWire, twist_of_cyclotomic_extension: bool },
}

impl RhoWire {
    pub fn to_class(&self, params: &FieldParams) -> Result<RhoBarClass> {
        Ok(match self {
            RhoWire::TresRamifie { n } => RhoBarClass::TresRamifie { n: *n },
            RhoWire::PeuRamifieNonzero { n } => RhoBarClass::PeuRamifieNonzero { n: *n },
            RhoWire::Split { n } => RhoBarClass::Split { n: *n },
            RhoWire::Custom { table, twist_of_cyclotomic_extension } => RhoBarClass::Custom {
                table: table.to_mu(params)?,
                twist_of_cyclotomic_extension: *twist_of_cyclotomic_extension,
            },
        })
    }
}

impl From<&RhoBarClass> for RhoWire {
    fn from(rho: &RhoBarClass) -> RhoWire {
        match rho {
            RhoBarClass::TresRamifie { n } => RhoWire::TresRamifie { n: *n },
            RhoBarClass::PeuRamifieNonzero { n } => RhoWire::PeuRamifieNonzero { n: *n },
            RhoBarClass::Split { n } => RhoWire::Split { n: *n },
            RhoBarClass::Custom { table, twist_of_cyclotomic_extension } => RhoWire::Custom {
                table: MuWire::from(table),
                twist_of_cyclotomic_extension: *twist_of_cyclotomic_extension,
            },
        }
    }
}

/// A deformation condition (class, type, weight).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemWire {
    pub rho: RhoWire,
    pub tau: TypeDescWire,
    pub w: HodgeWire,
}

impl ProblemWire {
    pub fn to_problem(&self, params: &FieldParams) -> Result<DeformationProblem> {
        Ok(DeformationProblem {
            rho: self.rho.to_class(params)?,
            tau: self.tau.to_desc(params)?,
            w: self.w.to_weight(),
        })
    }
}

impl From<&DeformationProblem> for ProblemWire {
    fn from(pb: &DeformationProblem) -> ProblemWire {
        ProblemWire {
            rho: RhoWire::from(&pb.rho),
            tau: TypeDescWire::from(&pb.tau),
            w: HodgeWire::from(&pb.w),
        }
    }
}

/// Local newform data for the sign oracle. The `x` field carries the
/// unramified twist as a raw integer so any residue descriptor can be
/// represented; values other than ±1 are rejected at prediction time, not
/// at parse time.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NewformWire {
    pub p: u32,
    pub k: u32,
    pub rho: RhoWire,
    pub x: i64,
    pub globally_irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ap_sign: Option<i64>,
}

impl NewformWire {
    pub fn to_data(&self) -> Result<NewformLocalData> {
        let params = FieldParams::new(self.p, 1)?;
        let ap_sign = match self.ap_sign {
            None => None,
            Some(v) => Some(Sign::from_i64(v)?),
        };
        Ok(NewformLocalData {
            p: self.p,
            k: self.k,
            rho: self.rho.to_class(&params)?,
            x: UnramifiedTwist::from_i64(self.x),
            globally_irreducible: self.globally_irreducible,
            ap_sign,
        })
    }
}

/// A prediction, tagged by kind. The forced branch always reports
/// `no_opposite: true`; the field is part of the statement, not a choice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PredictionWire {
    ForcedSign { sign: i8, no_opposite: bool },
    OppositeExists,
    Inconclusive { reason: String },
}

/// Prediction plus the attestations it relied on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutcomeWire {
    pub prediction: PredictionWire,
    pub relied_on: Vec<String>,
}

impl From<&PredictOutcome> for OutcomeWire {
    fn from(out: &PredictOutcome) -> OutcomeWire {
        let prediction = match &out.prediction {
            Prediction::ForcedSign { sign } => {
                PredictionWire::ForcedSign { sign: sign.as_i8(), no_opposite: true }
            }
            Prediction::OppositeExists => PredictionWire::OppositeExists,
            Prediction::Inconclusive { reason } => {
                PredictionWire::Inconclusive { reason: reason.clone() }
            }
        };
        OutcomeWire { prediction, relied_on: out.relied_on.clone() }
    }
}

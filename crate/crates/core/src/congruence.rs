//! Sign predictions for newforms of level Γ₀(p) at the ramified prime.
//!
//! A newform f of even weight k > 2 and level exactly divisible by p has
//! a_p(f) = ±p^{k/2−1}, so the normalized unit u_p(f) = a_p(f)·p^{1−k/2}
//! is a sign. This module decides, from the local-at-p residual data of f,
//! which of two mutually exclusive situations holds:
//!
//! 1. the residual class is a twisted très ramifié extension and k ≤ 2p+2.
//!    Then u_p(f) is forced to equal (−1)^{k/2−1}·x, where x is the
//!    unramified twist of the residual class, and no newform congruent to
//!    f with the opposite sign exists;
//! 2. otherwise, if the residual class is attested to stay absolutely
//!    irreducible over ℚ(ζ_p), some newform of the same weight and level
//!    congruent to f carries the opposite sign.
//!
//! Both branches are corroborated against the multiplicity engine: the
//! forced branch requires the rejected extension of the Steinberg type to
//! have multiplicity zero and the kept one positive, and the companion
//! branch requires both extensions to have positive multiplicity. A
//! corroboration failure is an internal error, never a property of the
//! input. When neither hypothesis set applies the oracle says so rather
//! than guess.

use crate::error::{Error, Result};
use crate::mult::{multiplicity_extended, DeformationProblem, RhoBarClass};
use crate::params::{residue, FieldParams};
use crate::sym::HodgeTateType;
use crate::types::{InertialTypeDesc, Sign};

/// Value of the unramified twist of the residual class at Frobenius.
/// Predictions require a genuine sign; `Other` is representable so that
/// arbitrary residue descriptors can be carried to the validation step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UnramifiedTwist {
    PlusOne,
    MinusOne,
    Other,
}

impl UnramifiedTwist {
    pub fn from_i64(v: i64) -> UnramifiedTwist {
        match v {
            1 => UnramifiedTwist::PlusOne,
            -1 => UnramifiedTwist::MinusOne,
            _ => UnramifiedTwist::Other,
        }
    }

    pub fn as_sign(self) -> Option<Sign> {
        match self {
            UnramifiedTwist::PlusOne => Some(Sign::Plus),
            UnramifiedTwist::MinusOne => Some(Sign::Minus),
            UnramifiedTwist::Other => None,
        }
    }
}

/// Local-at-p data of a newform in S_k(Γ₀(p)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewformLocalData {
    pub p: u32,
    pub k: u32,
    /// Semisimplified residual class at p, up to the conventions of
    /// [`RhoBarClass`].
    pub rho: RhoBarClass,
    /// Unramified twist of the residual class.
    pub x: UnramifiedTwist,
    /// User attestation that the residual representation restricted to the
    /// absolute Galois group of ℚ(ζ_p) stays absolutely irreducible.
    pub globally_irreducible: bool,
    /// The sign of a_p(f), when known. Used only to cross-check a forced
    /// sign against the claimed one.
    pub ap_sign: Option<Sign>,
}

/// What the oracle concluded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Prediction {
    /// u_p(f) can only be this sign, and no congruent newform of the same
    /// weight and level has the other one.
    ForcedSign { sign: Sign },
    /// A congruent newform of the same weight and level with the opposite
    /// sign exists.
    OppositeExists,
    /// Neither hypothesis set applies to the given data.
    Inconclusive { reason: String },
}

/// A prediction together with the user attestations it relied on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PredictOutcome {
    pub prediction: Prediction,
    pub relied_on: Vec<String>,
}

/// Normalized Hecke unit u_p(f) = a_p(f)·p^{1−k/2}. Since a_p(f) is
/// ±p^{k/2−1} and the power of p is positive, u_p carries exactly the sign
/// of a_p.
pub fn up_of(k: u32, ap_sign: Sign) -> Result<Sign> {
    if k % 2 != 0 {
        return Err(Error::DataInconsistency(format!(
            "u_p is defined for even weights only, got k = {k}"
        )));
    }
    Ok(ap_sign)
}

/// The two extended-type multiplicities governing the prediction: the
/// Steinberg-at-p condition is the scalar tame type of exponent 0, and
/// weight k corresponds to the algebraic weight (k−2, 0).
fn steinberg_multiplicities(
    params: &FieldParams,
    rho: &RhoBarClass,
    k: u32,
) -> Result<(u64, u64)> {
    let pb = DeformationProblem {
        rho: rho.clone(),
        tau: InertialTypeDesc::scal_tame(params, 0),
        w: HodgeTateType::new(k - 2, 0),
    };
    Ok((
        multiplicity_extended(params, &pb, Sign::Plus)?,
        multiplicity_extended(params, &pb, Sign::Minus)?,
    ))
}

fn validate(data: &NewformLocalData) -> Result<FieldParams> {
    let params = FieldParams::new(data.p, 1)?;
    if data.p < 5 {
        return Err(Error::DataInconsistency(format!(
            "newform sign predictions need p >= 5, got p = {}",
            data.p
        )));
    }
    if data.k % 2 != 0 || data.k <= 2 {
        return Err(Error::DataInconsistency(format!(
            "newform weight must be even and greater than 2, got k = {}",
            data.k
        )));
    }
    if data.x.as_sign().is_none() {
        return Err(Error::DataInconsistency(
            "the unramified twist of the residual class of a level Γ₀(p) newform must be 1 or -1"
                .into(),
        ));
    }
    // Local-global compatibility at p pins the twist exponent of every
    // unramified-up-to-twist class to k/2 - 1 mod p - 1.
    if let Some(n) = data.rho.builtin_twist_exponent() {
        let expected = residue(i64::from(data.k) / 2 - 1, params.q_m1());
        if residue(i64::from(n), params.q_m1()) != expected {
            return Err(Error::DataInconsistency(format!(
                "a weight {} form has twist exponent {} mod {}, the class claims {}",
                data.k,
                expected,
                params.q_m1(),
                n
            )));
        }
    }
    Ok(params)
}

/// Decide which situation the data fall into. See the module docs for the
/// two hypothesis regions; they are exclusive, and the first is checked
/// first, so a très ramifié class in the small-weight range gets its
/// forced sign whether or not global irreducibility is attested.
pub fn predict(data: &NewformLocalData) -> Result<PredictOutcome> {
    let params = validate(data)?;
    let small_weight = data.k <= 2 * data.p + 2;

    if matches!(data.rho, RhoBarClass::TresRamifie { .. }) && small_weight {
        let forced_branch = Sign::from_parity(i64::from(data.k) / 2 - 1);
        let (e_plus, e_minus) = steinberg_multiplicities(&params, &data.rho, data.k)?;
        let (kept, rejected) = match forced_branch {
            Sign::Plus => (e_plus, e_minus),
            Sign::Minus => (e_minus, e_plus),
        };
        if kept == 0 || rejected != 0 {
            return Err(Error::Internal(format!(
                "forced branch {forced_branch} disagrees with the engine: kept {kept}, rejected {rejected}"
            )));
        }
        let x = data.x.as_sign().expect("validated");
        let up = forced_branch.times(x);
        if let Some(claimed) = data.ap_sign {
            if claimed != up {
                return Err(Error::DataInconsistency(format!(
                    "a_p sign {claimed} contradicts the forced sign {up}"
                )));
            }
        }
        return Ok(PredictOutcome {
            prediction: Prediction::ForcedSign { sign: up },
            relied_on: Vec::new(),
        });
    }

    // The companion branch needs the class to be outside the très ramifié
    // region. Built-ins state their shape; a custom table is known to be
    // outside only when it is not a twist of a cyclotomic extension at all.
    let outside_tres_region = match &data.rho {
        RhoBarClass::TresRamifie { .. } => !small_weight,
        RhoBarClass::PeuRamifieNonzero { .. } | RhoBarClass::Split { .. } => true,
        RhoBarClass::Custom { twist_of_cyclotomic_extension, .. } => {
            if *twist_of_cyclotomic_extension {
                return Ok(PredictOutcome {
                    prediction: Prediction::Inconclusive {
                        reason: "a custom class that is a twist of a cyclotomic extension cannot be placed in either hypothesis region".into(),
                    },
                    relied_on: Vec::new(),
                });
            }
            true
        }
    };

    if outside_tres_region && data.globally_irreducible {
        if data.rho.is_builtin() {
            let (e_plus, e_minus) = steinberg_multiplicities(&params, &data.rho, data.k)?;
            if e_plus == 0 || e_minus == 0 {
                return Err(Error::Internal(format!(
                    "companion branch disagrees with the engine: multiplicities {e_plus} and {e_minus}"
                )));
            }
        }
        return Ok(PredictOutcome {
            prediction: Prediction::OppositeExists,
            relied_on: vec!["globally_irreducible".into()],
        });
    }

    Ok(PredictOutcome {
        prediction: Prediction::Inconclusive {
            reason: "global irreducibility over ℚ(ζ_p) is not attested".into(),
        },
        relied_on: Vec::new(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mult::MuFunctional;
    use crate::irrep::GammaIrrep;

    fn data(p: u32, k: u32, rho: RhoBarClass) -> NewformLocalData {
        NewformLocalData {
            p,
            k,
            rho,
            x: UnramifiedTwist::PlusOne,
            globally_irreducible: false,
            ap_sign: None,
        }
    }

    fn matching_n(p: u32, k: u32) -> u32 {
        (k / 2 - 1) % (p - 1)
    }

    #[test]
    fn up_is_the_sign_of_ap() {
        assert_eq!(up_of(6, Sign::Minus).unwrap(), Sign::Minus);
        assert_eq!(up_of(12, Sign::Plus).unwrap(), Sign::Plus);
        assert!(matches!(up_of(7, Sign::Plus), Err(Error::DataInconsistency(_))));
    }

    #[test]
    fn forced_signs_at_p5() {
        for (k, want) in [
            (4, Sign::Minus),
            (6, Sign::Plus),
            (8, Sign::Minus),
            (10, Sign::Plus),
            (12, Sign::Minus),
        ] {
            let d = data(5, k, RhoBarClass::TresRamifie { n: matching_n(5, k) });
            let out = predict(&d).unwrap();
            assert_eq!(out.prediction, Prediction::ForcedSign { sign: want }, "k = {k}");
            assert!(out.relied_on.is_empty());

            let flipped = NewformLocalData { x: UnramifiedTwist::MinusOne, ..d };
            assert_eq!(
                predict(&flipped).unwrap().prediction,
                Prediction::ForcedSign { sign: want.flip() },
                "k = {k}, x = -1"
            );
        }
    }

    #[test]
    fn forcing_ignores_the_global_flag() {
        let d = NewformLocalData {
            globally_irreducible: true,
            ..data(5, 6, RhoBarClass::TresRamifie { n: 2 })
        };
        assert_eq!(predict(&d).unwrap().prediction, Prediction::ForcedSign { sign: Sign::Plus });
    }

    #[test]
    fn ap_sign_cross_check() {
        let ok = NewformLocalData {
            ap_sign: Some(Sign::Plus),
            ..data(5, 6, RhoBarClass::TresRamifie { n: 2 })
        };
        assert!(predict(&ok).is_ok());
        let bad = NewformLocalData { ap_sign: Some(Sign::Minus), ..ok };
        assert!(matches!(predict(&bad), Err(Error::DataInconsistency(_))));
    }

    #[test]
    fn companion_cases() {
        for rho in [
            RhoBarClass::TresRamifie { n: 2 },
            RhoBarClass::PeuRamifieNonzero { n: 2 },
            RhoBarClass::Split { n: 2 },
        ] {
            let k = if matches!(rho, RhoBarClass::TresRamifie { .. }) { 14 } else { 6 };
            let d = NewformLocalData { globally_irreducible: true, ..data(5, k, rho.clone()) };
            let out = predict(&d).unwrap();
            assert_eq!(out.prediction, Prediction::OppositeExists, "{rho:?}");
            assert_eq!(out.relied_on, vec!["globally_irreducible".to_string()]);
        }
    }

    #[test]
    fn inconclusive_without_the_flag() {
        let split = data(5, 6, RhoBarClass::Split { n: 2 });
        assert!(matches!(
            predict(&split).unwrap().prediction,
            Prediction::Inconclusive { .. }
        ));
        let big_tres = data(5, 14, RhoBarClass::TresRamifie { n: 2 });
        assert!(matches!(
            predict(&big_tres).unwrap().prediction,
            Prediction::Inconclusive { .. }
        ));
    }

    #[test]
    fn custom_classes() {
        let p5 = FieldParams::new(5, 1).unwrap();
        let table = MuFunctional::from_entries(
            p5,
            [(GammaIrrep::two_dim(&p5, 1).unwrap(), 2)],
        )
        .unwrap();
        let not_cyclo = RhoBarClass::Custom {
            table: table.clone(),
            twist_of_cyclotomic_extension: false,
        };
        let d = NewformLocalData { globally_irreducible: true, ..data(5, 6, not_cyclo.clone()) };
        assert_eq!(predict(&d).unwrap().prediction, Prediction::OppositeExists);

        let no_flag = NewformLocalData { globally_irreducible: false, ..d.clone() };
        assert!(matches!(
            predict(&no_flag).unwrap().prediction,
            Prediction::Inconclusive { .. }
        ));

        let maybe_tres = RhoBarClass::Custom { table, twist_of_cyclotomic_extension: true };
        let d = NewformLocalData { rho: maybe_tres, ..d };
        assert!(matches!(
            predict(&d).unwrap().prediction,
            Prediction::Inconclusive { .. }
        ));
    }

    #[test]
    fn data_validation() {
        let good = data(5, 6, RhoBarClass::TresRamifie { n: 2 });
        assert!(matches!(
            predict(&NewformLocalData { k: 7, ..good.clone() }),
            Err(Error::DataInconsistency(_))
        ));
        assert!(matches!(
            predict(&NewformLocalData { k: 2, ..good.clone() }),
            Err(Error::DataInconsistency(_))
        ));
        assert!(matches!(
            predict(&NewformLocalData { p: 3, k: 6, ..good.clone() }),
            Err(Error::DataInconsistency(_))
        ));
        assert!(matches!(
            predict(&NewformLocalData { p: 6, ..good.clone() }),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            predict(&NewformLocalData { x: UnramifiedTwist::Other, ..good.clone() }),
            Err(Error::DataInconsistency(_))
        ));
        // twist exponent must match the weight
        assert!(matches!(
            predict(&data(5, 6, RhoBarClass::TresRamifie { n: 1 })),
            Err(Error::DataInconsistency(_))
        ));
        assert!(matches!(
            predict(&data(5, 6, RhoBarClass::Split { n: 0 })),
            Err(Error::DataInconsistency(_))
        ));
    }

    #[test]
    fn exponent_check_wraps_modulo_p_minus_1() {
        // k = 14 gives exponent 6 ≡ 2 mod 4
        let d = NewformLocalData {
            globally_irreducible: true,
            ..data(5, 14, RhoBarClass::TresRamifie { n: 6 })
        };
        assert_eq!(predict(&d).unwrap().prediction, Prediction::OppositeExists);
    }

    #[test]
    fn regions_are_exhaustive_and_exclusive_with_the_flag() {
        for p in [5u32, 7] {
            for k in (4..=4 * p).step_by(2) {
                let n = matching_n(p, k);
                for rho in [
                    RhoBarClass::TresRamifie { n },
                    RhoBarClass::PeuRamifieNonzero { n },
                    RhoBarClass::Split { n },
                ] {
                    let d = NewformLocalData {
                        globally_irreducible: true,
                        ..data(p, k, rho.clone())
                    };
                    let out = predict(&d).unwrap();
                    let in_forced_region =
                        matches!(rho, RhoBarClass::TresRamifie { .. }) && k <= 2 * p + 2;
                    match out.prediction {
                        Prediction::ForcedSign { .. } => {
                            assert!(in_forced_region, "p={p} k={k} {rho:?}")
                        }
                        Prediction::OppositeExists => {
                            assert!(!in_forced_region, "p={p} k={k} {rho:?}")
                        }
                        Prediction::Inconclusive { ref reason } => {
                            panic!("inconclusive at p={p} k={k} {rho:?}: {reason}")
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn predictions_match_the_engine_externally() {
        for p in [5u32, 7] {
            let params = FieldParams::new(p, 1).unwrap();
            for k in (4..=4 * p).step_by(2) {
                let n = matching_n(p, k);
                for rho in [
                    RhoBarClass::TresRamifie { n },
                    RhoBarClass::PeuRamifieNonzero { n },
                    RhoBarClass::Split { n },
                ] {
                    let d = NewformLocalData {
                        globally_irreducible: true,
                        ..data(p, k, rho.clone())
                    };
                    let out = predict(&d).unwrap();
                    let (e_plus, e_minus) =
                        steinberg_multiplicities(&params, &rho, k).unwrap();
                    match out.prediction {
                        Prediction::ForcedSign { sign } => {
                            // x = +1 here, so the engine branch is the sign itself
                            let (kept, rejected) = match sign {
                                Sign::Plus => (e_plus, e_minus),
                                Sign::Minus => (e_minus, e_plus),
                            };
                            assert!(kept >= 1, "p={p} k={k} {rho:?}");
                            assert_eq!(rejected, 0, "p={p} k={k} {rho:?}");
                        }
                        Prediction::OppositeExists => {
                            assert!(e_plus >= 1 && e_minus >= 1, "p={p} k={k} {rho:?}");
                        }
                        Prediction::Inconclusive { .. } => unreachable!(),
                    }
                }
            }
        }
    }
}

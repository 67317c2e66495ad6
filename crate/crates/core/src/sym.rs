//! Reductions of the algebraic weights Sym^n ⊗ det^m for K = ℚ_p.
//!
//! Over ℚ_p the group Γ is 𝔽_{p²}^× ⋊ {1, ι} and the standard
//! two-dimensional lift restricts ℓ^× to χ_1 ⊕ χ_p. The semisimplified
//! reduction of its n-th symmetric power decomposes in closed form:
//!
//! * Sym^{2t}   ↦ δ_t + Σ_{i=1}^{t} Ind χ_{t(p+1) + i(p−1)}
//! * Sym^{2t+1} ↦ Σ_{i=0}^{t} Ind χ_{t(p+1) + p + i(p−1)}
//! * det^m      ↦ ξ^m δ_m
//!
//! The inductions are taken through [`induced_from_ell`], so the indices
//! that happen to be multiples of p+1 split into their two characters
//! instead of pretending to be irreducible. Every formula here is checked
//! against the eigenvalue-power-sum characters of the actual lifts by the
//! oracle in [`crate::chars`].

use crate::error::{Error, Result};
use crate::groth::{induced_from_ell, GrothElem};
use crate::irrep::GammaIrrep;
use crate::params::FieldParams;

/// A pair (n, m) standing for the weight Sym^n ⊗ det^m.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HodgeTateType {
    pub n: u32,
    pub m: i64,
}

impl HodgeTateType {
    pub fn new(n: u32, m: i64) -> HodgeTateType {
        HodgeTateType { n, m }
    }

    pub fn trivial() -> HodgeTateType {
        HodgeTateType { n: 0, m: 0 }
    }

    pub fn is_trivial(&self) -> bool {
        *self == HodgeTateType::trivial()
    }
}

fn ensure_prime_field(params: &FieldParams, what: &str) -> Result<()> {
    if params.is_prime_field() {
        Ok(())
    } else {
        Err(Error::RequiresPrimeField(what.into()))
    }
}

/// Reduction of det^m: the one-dimensional ξ^m δ_m.
pub fn det_power(params: &FieldParams, m: i64) -> Result<GrothElem> {
    ensure_prime_field(params, "the determinant weight det^m")?;
    GrothElem::from_irrep(*params, GammaIrrep::one_dim(params, m, m.rem_euclid(2) == 1))
}

/// Reduction of Sym^n of the standard lift, an effective class of total
/// dimension n+1.
pub fn sym_power(params: &FieldParams, n: u32) -> Result<GrothElem> {
    ensure_prime_field(params, "the symmetric power Sym^n")?;
    let p = i64::from(params.p());
    let mut out = GrothElem::zero(*params);
    if n % 2 == 0 {
        let t = i64::from(n / 2);
        out.add_irrep(GammaIrrep::one_dim(params, t, false), 1)?;
        for i in 1..=t {
            out = out.add(&induced_from_ell(*params, t * (p + 1) + i * (p - 1)))?;
        }
    } else {
        let t = i64::from(n / 2);
        for i in 0..=t {
            out = out.add(&induced_from_ell(*params, t * (p + 1) + p + i * (p - 1)))?;
        }
    }
    Ok(out)
}

/// Reduction of the weight Sym^n ⊗ det^m attached to w = (n, m).
///
/// The trivial weight is defined over every K and reduces to the trivial
/// character; nontrivial weights exist only for K = ℚ_p.
pub fn sigma_w_bar(params: &FieldParams, w: &HodgeTateType) -> Result<GrothElem> {
    if w.is_trivial() {
        return GrothElem::from_irrep(*params, GammaIrrep::one_dim(params, 0, false));
    }
    sym_power(params, w.n)?.tensor(&det_power(params, w.m)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chars::BrauerTable;

    fn params(p: u32) -> FieldParams {
        FieldParams::new(p, 1).unwrap()
    }

    fn irrep_elem(params: &FieldParams, irrep: GammaIrrep) -> GrothElem {
        GrothElem::from_irrep(*params, irrep).unwrap()
    }

    #[test]
    fn determinant_powers() {
        let p5 = params(5);
        assert_eq!(
            det_power(&p5, 0).unwrap(),
            irrep_elem(&p5, GammaIrrep::one_dim(&p5, 0, false))
        );
        assert_eq!(
            det_power(&p5, 3).unwrap(),
            irrep_elem(&p5, GammaIrrep::one_dim(&p5, 3, true))
        );
        assert_eq!(
            det_power(&p5, 4).unwrap(),
            irrep_elem(&p5, GammaIrrep::one_dim(&p5, 0, false))
        );
        assert_eq!(det_power(&p5, -1).unwrap(), det_power(&p5, 3).unwrap());
    }

    #[test]
    fn determinant_is_a_homomorphism() {
        let p7 = params(7);
        for m1 in -3..8 {
            for m2 in -3..8 {
                let prod = det_power(&p7, m1).unwrap().tensor(&det_power(&p7, m2).unwrap()).unwrap();
                assert_eq!(prod, det_power(&p7, m1 + m2).unwrap());
            }
        }
    }

    #[test]
    fn small_symmetric_powers() {
        let p5 = params(5);
        assert_eq!(
            sym_power(&p5, 0).unwrap(),
            irrep_elem(&p5, GammaIrrep::one_dim(&p5, 0, false))
        );
        assert_eq!(sym_power(&p5, 1).unwrap(), induced_from_ell(p5, 1));
        let sym2 = sym_power(&p5, 2).unwrap();
        assert_eq!(
            sym2,
            irrep_elem(&p5, GammaIrrep::one_dim(&p5, 1, false))
                .add(&induced_from_ell(p5, 10))
                .unwrap()
        );
        assert_eq!(sym2.coeff(&GammaIrrep::two_dim(&p5, 2).unwrap()), 1);
        let sym3 = sym_power(&p5, 3).unwrap();
        assert_eq!(
            sym3,
            induced_from_ell(p5, 11).add(&induced_from_ell(p5, 15)).unwrap()
        );
        let sym4 = sym_power(&p5, 4).unwrap();
        let expected = irrep_elem(&p5, GammaIrrep::one_dim(&p5, 2, false))
            .add(&induced_from_ell(p5, 16))
            .unwrap()
            .add(&induced_from_ell(p5, 20))
            .unwrap();
        assert_eq!(sym4, expected);
    }

    #[test]
    fn degenerate_indices_split() {
        let p5 = params(5);
        // Sym^6 hits the index 3·6 + 3·4 = 30 ≡ 6, a multiple of p+1
        let sym6 = sym_power(&p5, 6).unwrap();
        assert_eq!(sym6.coeff(&GammaIrrep::one_dim(&p5, 1, false)), 1);
        assert_eq!(sym6.coeff(&GammaIrrep::one_dim(&p5, 1, true)), 1);
        assert!(sym6.is_effective());
        // Sym^12 wraps all the way around to 6·6 ≡ 12 = 6·2 and 0
        let sym12 = sym_power(&p5, 12).unwrap();
        assert_eq!(sym12.coeff(&GammaIrrep::one_dim(&p5, 0, true)), 1);
        assert_eq!(sym12.coeff(&GammaIrrep::one_dim(&p5, 2, true)), 1);
        assert_eq!(sym12.coeff(&GammaIrrep::one_dim(&p5, 2, false)), 2);
    }

    #[test]
    fn dimensions_count_monomials() {
        for p in [5, 7, 13] {
            let params = params(p);
            for n in 0..=40 {
                let sym = sym_power(&params, n).unwrap();
                assert!(sym.is_effective());
                assert_eq!(sym.dim(), i64::from(n) + 1, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn symmetric_powers_match_the_lift_characters() {
        for p in [5, 7] {
            let table = BrauerTable::new(params(p));
            for n in 0..=8 {
                let from_lift = table.decompose(&table.sym_lift_character(n)).unwrap();
                assert_eq!(from_lift, sym_power(table.params(), n).unwrap(), "p={p} n={n}");
            }
            for m in 0..2 * (p as i64 - 1) {
                let from_lift = table.decompose(&table.det_lift_character(m)).unwrap();
                assert_eq!(from_lift, det_power(table.params(), m).unwrap(), "p={p} m={m}");
            }
        }
    }

    #[test]
    fn clebsch_gordan_identity() {
        for p in [5, 7] {
            let params = params(p);
            let std = sym_power(&params, 1).unwrap();
            let det = det_power(&params, 1).unwrap();
            for n in 1..=10 {
                let lhs = std.tensor(&sym_power(&params, n).unwrap()).unwrap();
                let rhs = sym_power(&params, n + 1)
                    .unwrap()
                    .add(&det.tensor(&sym_power(&params, n - 1).unwrap()).unwrap())
                    .unwrap();
                assert_eq!(lhs, rhs, "p={p} n={n}");
            }
        }
    }

    #[test]
    fn weights_compose() {
        let p5 = params(5);
        let w = HodgeTateType::new(2, 1);
        let direct = sigma_w_bar(&p5, &w).unwrap();
        let by_hand = sym_power(&p5, 2).unwrap().tensor(&det_power(&p5, 1).unwrap()).unwrap();
        assert_eq!(direct, by_hand);
        assert_eq!(direct.dim(), 3);
        assert_eq!(
            sigma_w_bar(&p5, &HodgeTateType::trivial()).unwrap(),
            irrep_elem(&p5, GammaIrrep::one_dim(&p5, 0, false))
        );
    }

    #[test]
    fn extension_fields_are_rejected_except_trivially() {
        let p9 = FieldParams::new(3, 2).unwrap();
        assert!(matches!(sym_power(&p9, 2), Err(Error::RequiresPrimeField(_))));
        assert!(matches!(det_power(&p9, 1), Err(Error::RequiresPrimeField(_))));
        assert!(matches!(
            sigma_w_bar(&p9, &HodgeTateType::new(2, 0)),
            Err(Error::RequiresPrimeField(_))
        ));
        // the trivial weight exists over every field
        let trivial = sigma_w_bar(&p9, &HodgeTateType::trivial()).unwrap();
        assert_eq!(trivial.dim(), 1);
    }
}

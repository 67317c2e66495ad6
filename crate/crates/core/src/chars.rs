//! Brauer characters of Γ and the decomposition oracle.
//!
//! |Γ| is prime to p, so Brauer characters are the ordinary characters of
//! the unique characteristic-zero lifts, valued in ℤ[ζ] for ζ a primitive
//! (q²−1)-th root of unity. The oracle recovers the multiplicity of each
//! irreducible in any class function by the exact inner product
//!
//! ⟨χ, χ_γ⟩ = (1/|Γ|) Σ_C |C| χ(C) conj(χ_γ(C))
//!
//! over the conjugacy classes C, rejecting the input if any inner product is
//! not a rational integer. Nothing here touches the Mackey tensor rules in
//! [`crate::groth`]; that independence is what makes this a useful check.

use crate::cyclo::{CycloCtx, CycloValue};
use crate::error::{Error, Result};
use crate::groth::GrothElem;
use crate::irrep::{list_irreps, GammaIrrep};
use crate::params::FieldParams;
use num_bigint::BigInt;
use num_rational::BigRational;

/// A conjugacy class of Γ = ℓ^× ⋊ {1, ι}, with ℓ^× written as powers of a
/// fixed generator g.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum ConjClass {
    /// {g^j, g^{qj}} inside ℓ^×; a singleton exactly when g^j ∈ k^×, that
    /// is when (q+1) | j. Canonically j = min(j, qj mod q²−1).
    Ell { j: u32 },
    /// The class of (g^j, ι) for all j ≡ m mod q−1. Conjugation by y ∈ ℓ^×
    /// multiplies the ℓ^× part by y^{1−q}, which sweeps out the norm-one
    /// subgroup, so these classes are indexed by the norm, have size q+1,
    /// and there are q−1 of them.
    Iota { m: u32 },
}

/// All conjugacy classes in a fixed order: ℓ^×-classes by canonical
/// exponent, then ι-coset classes by norm index. Their number equals the
/// number of irreducibles.
pub fn conj_classes(params: &FieldParams) -> Vec<ConjClass> {
    let q = params.q();
    let m = params.qsq_m1();
    let mut out = Vec::new();
    for j in 0..m {
        if (u64::from(j) * u64::from(q)) % u64::from(m) >= u64::from(j) {
            out.push(ConjClass::Ell { j });
        }
    }
    for mm in 0..q - 1 {
        out.push(ConjClass::Iota { m: mm });
    }
    out
}

pub fn class_size(params: &FieldParams, class: &ConjClass) -> u32 {
    match class {
        ConjClass::Ell { j } => {
            if j % (params.q() + 1) == 0 {
                1
            } else {
                2
            }
        }
        ConjClass::Iota { .. } => params.q() + 1,
    }
}

/// The character table of Γ over ℚ(ζ_{q²−1}), with the conjugated and
/// class-size-weighted dual table precomputed for inner products. Building
/// one of these is cheap next to the decompositions it enables, but reuse
/// it across a batch rather than rebuilding per call.
pub struct BrauerTable {
    params: FieldParams,
    ctx: CycloCtx,
    classes: Vec<ConjClass>,
    irreps: Vec<GammaIrrep>,
    /// chars[i][c] = χ_{irreps[i]}(classes[c])
    chars: Vec<Vec<CycloValue>>,
    /// dual[i][c] = |classes[c]| · conj(χ_{irreps[i]}(classes[c]))
    dual: Vec<Vec<CycloValue>>,
}

impl BrauerTable {
    pub fn new(params: FieldParams) -> BrauerTable {
        let ctx = CycloCtx::new(params.qsq_m1());
        let classes = conj_classes(&params);
        let irreps = list_irreps(&params);
        let chars: Vec<Vec<CycloValue>> = irreps
            .iter()
            .map(|irrep| classes.iter().map(|c| irrep_char_value(&params, &ctx, irrep, c)).collect())
            .collect();
        let dual = chars
            .iter()
            .map(|row| {
                row.iter()
                    .zip(&classes)
                    .map(|(v, c)| ctx.scale_int(&ctx.conj(v), i64::from(class_size(&params, c))))
                    .collect()
            })
            .collect();
        BrauerTable { params, ctx, classes, irreps, chars, dual }
    }

    pub fn params(&self) -> &FieldParams {
        &self.params
    }

    pub fn ctx(&self) -> &CycloCtx {
        &self.ctx
    }

    pub fn classes(&self) -> &[ConjClass] {
        &self.classes
    }

    pub fn irreps(&self) -> &[GammaIrrep] {
        &self.irreps
    }

    /// χ_γ as a row of values over [`Self::classes`].
    pub fn char_of_irrep(&self, irrep: &GammaIrrep) -> Result<&[CycloValue]> {
        self.irreps
            .iter()
            .position(|i| i == irrep)
            .map(|i| self.chars[i].as_slice())
            .ok_or_else(|| Error::Internal(format!("{irrep} is not an irreducible here")))
    }

    /// The Brauer character of a virtual class, by linearity.
    pub fn character_of(&self, elem: &GrothElem) -> Result<Vec<CycloValue>> {
        self.params.ensure_same(elem.params())?;
        let mut out = vec![self.ctx.zero(); self.classes.len()];
        for (irrep, c) in elem.terms() {
            let row = self.char_of_irrep(irrep)?;
            for (acc, v) in out.iter_mut().zip(row) {
                self.ctx.add_assign(acc, &self.ctx.scale_int(v, c));
            }
        }
        Ok(out)
    }

    /// Pointwise product of two characters, the character of the tensor
    /// product.
    pub fn product(&self, left: &[CycloValue], right: &[CycloValue]) -> Vec<CycloValue> {
        left.iter().zip(right).map(|(a, b)| self.ctx.mul(a, b)).collect()
    }

    /// Decompose a class function into irreducibles by exact inner
    /// products. Errors unless every multiplicity is a rational integer.
    pub fn decompose(&self, values: &[CycloValue]) -> Result<GrothElem> {
        if values.len() != self.classes.len() {
            return Err(Error::Internal(format!(
                "class function has {} values but there are {} classes",
                values.len(),
                self.classes.len()
            )));
        }
        let order = BigRational::from_integer(BigInt::from(self.params.group_order()));
        let mut out = GrothElem::zero(self.params);
        for (i, irrep) in self.irreps.iter().enumerate() {
            let mut acc = self.ctx.zero();
            for (v, d) in values.iter().zip(&self.dual[i]) {
                if !v.is_zero() && !d.is_zero() {
                    self.ctx.add_assign(&mut acc, &self.ctx.mul(v, d));
                }
            }
            let scaled = self.ctx.scale(&acc, &order.recip());
            let mult = self.ctx.as_i64(&scaled).ok_or_else(|| {
                Error::NonIntegralDecomposition(format!(
                    "inner product with {irrep} is {}",
                    self.ctx.describe(&scaled)
                ))
            })?;
            if mult != 0 {
                out.add_irrep(*irrep, mult)?;
            }
        }
        Ok(out)
    }

    /// Character of the N-th symmetric power of the lift of the standard
    /// two-dimensional representation r_1. On (g^j, 1) the lift has
    /// eigenvalues ζ^j and ζ^{qj}; on (g^j, ι) it has eigenvalues
    /// ±ζ^{j(q+1)/2}, so odd powers vanish there and even powers contribute
    /// a single norm power.
    pub fn sym_lift_character(&self, n: u32) -> Vec<CycloValue> {
        let q = i64::from(self.params.q());
        let n_i = i64::from(n);
        self.classes
            .iter()
            .map(|class| match *class {
                ConjClass::Ell { j } => {
                    let j = i64::from(j);
                    let mut acc = self.ctx.zero();
                    for i in 0..=n_i {
                        let term = self.ctx.zeta_pow(j * (i + (n_i - i) * q));
                        self.ctx.add_assign(&mut acc, &term);
                    }
                    acc
                }
                ConjClass::Iota { m } => {
                    if n % 2 == 1 {
                        self.ctx.zero()
                    } else {
                        self.ctx.zeta_pow(i64::from(m) * (q + 1) * (n_i / 2))
                    }
                }
            })
            .collect()
    }

    /// Character of det^m of that same lift: the norm power N(x)^m on ℓ^×
    /// and (−N(x))^m on the ι-coset, the determinant of an anti-diagonal
    /// matrix being minus the product of its entries.
    pub fn det_lift_character(&self, m: i64) -> Vec<CycloValue> {
        let q = i64::from(self.params.q());
        let sign = if m.rem_euclid(2) == 0 { 1 } else { -1 };
        self.classes
            .iter()
            .map(|class| match *class {
                ConjClass::Ell { j } => self.ctx.zeta_pow(i64::from(j) * (q + 1) * m),
                ConjClass::Iota { m: mm } => {
                    self.ctx.scale_int(&self.ctx.zeta_pow(i64::from(mm) * (q + 1) * m), sign)
                }
            })
            .collect()
    }
}

fn irrep_char_value(
    params: &FieldParams,
    ctx: &CycloCtx,
    irrep: &GammaIrrep,
    class: &ConjClass,
) -> CycloValue {
    let q = i64::from(params.q());
    match (*irrep, *class) {
        (GammaIrrep::OneDim { a, .. }, ConjClass::Ell { j }) => {
            ctx.zeta_pow(i64::from(a) * (q + 1) * i64::from(j))
        }
        (GammaIrrep::OneDim { a, xi }, ConjClass::Iota { m }) => {
            let v = ctx.zeta_pow(i64::from(a) * (q + 1) * i64::from(m));
            if xi {
                ctx.neg(&v)
            } else {
                v
            }
        }
        (GammaIrrep::TwoDim { a }, ConjClass::Ell { j }) => {
            let a = i64::from(a);
            let j = i64::from(j);
            ctx.add(&ctx.zeta_pow(a * j), &ctx.zeta_pow(a * q * j))
        }
        (GammaIrrep::TwoDim { .. }, ConjClass::Iota { .. }) => ctx.zero(),
    }
}

/// One-shot decomposition against a freshly built table. Prefer holding a
/// [`BrauerTable`] when decomposing in a loop.
pub fn oracle_decompose(params: FieldParams, values: &[CycloValue]) -> Result<GrothElem> {
    BrauerTable::new(params).decompose(values)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groth::induced_from_ell;

    fn table(p: u32, f: u32) -> BrauerTable {
        BrauerTable::new(FieldParams::new(p, f).unwrap())
    }

    #[test]
    fn classes_partition_the_group() {
        for (p, f) in [(3, 1), (5, 1), (7, 1), (3, 2)] {
            let params = FieldParams::new(p, f).unwrap();
            let classes = conj_classes(&params);
            assert_eq!(classes.len(), list_irreps(&params).len());
            let total: u32 = classes.iter().map(|c| class_size(&params, c)).sum();
            assert_eq!(total, params.group_order());
            let singletons =
                classes.iter().filter(|c| class_size(&params, c) == 1).count() as u32;
            assert_eq!(singletons, params.q() - 1);
        }
    }

    #[test]
    fn irreducible_characters_are_orthonormal() {
        for (p, f) in [(3, 1), (5, 1), (3, 2)] {
            let table = table(p, f);
            for irrep in table.irreps() {
                let elem = GrothElem::from_irrep(*table.params(), *irrep).unwrap();
                let values = table.character_of(&elem).unwrap();
                assert_eq!(table.decompose(&values).unwrap(), elem, "q = {}", table.params().q());
            }
        }
    }

    #[test]
    fn regular_character_decomposes_by_dimension() {
        let table = table(5, 1);
        let order = i64::from(table.params().group_order());
        let values: Vec<CycloValue> = table
            .classes()
            .iter()
            .map(|c| match c {
                ConjClass::Ell { j: 0 } => table.ctx().integer(order),
                _ => table.ctx().zero(),
            })
            .collect();
        let reg = table.decompose(&values).unwrap();
        for irrep in table.irreps() {
            assert_eq!(reg.coeff(irrep), irrep.dim());
        }
    }

    #[test]
    fn trivial_and_determinant_characters() {
        let table = table(5, 1);
        let params = *table.params();
        let trivial: Vec<CycloValue> =
            table.classes().iter().map(|_| table.ctx().one()).collect();
        assert_eq!(
            table.decompose(&trivial).unwrap(),
            GrothElem::from_irrep(params, GammaIrrep::one_dim(&params, 0, false)).unwrap()
        );
        // det of the standard lift reduces to ξδ_1
        let det = table.det_lift_character(1);
        assert_eq!(
            table.decompose(&det).unwrap(),
            GrothElem::from_irrep(params, GammaIrrep::one_dim(&params, 1, true)).unwrap()
        );
    }

    #[test]
    fn small_symmetric_powers_against_the_lift() {
        let table = table(5, 1);
        let params = *table.params();
        let sym0 = table.decompose(&table.sym_lift_character(0)).unwrap();
        assert_eq!(sym0, GrothElem::from_irrep(params, GammaIrrep::one_dim(&params, 0, false)).unwrap());
        let sym1 = table.decompose(&table.sym_lift_character(1)).unwrap();
        assert_eq!(sym1, induced_from_ell(params, 1));
        let sym2 = table.decompose(&table.sym_lift_character(2)).unwrap();
        let expected = induced_from_ell(params, 10)
            .add(&GrothElem::from_irrep(params, GammaIrrep::one_dim(&params, 1, false)).unwrap())
            .unwrap();
        assert_eq!(sym2, expected);
        assert_eq!(sym2.dim(), 3);
    }

    #[test]
    fn tensor_rules_match_characters_for_small_q() {
        let table = table(3, 1);
        let irreps = table.irreps().to_vec();
        for left in &irreps {
            for right in &irreps {
                let expected = crate::groth::tensor_irreps(table.params(), left, right);
                let prod = table.product(
                    table.char_of_irrep(left).unwrap(),
                    table.char_of_irrep(right).unwrap(),
                );
                assert_eq!(table.decompose(&prod).unwrap(), expected, "{left} x {right}");
            }
        }
    }

    #[test]
    fn non_virtual_class_functions_are_rejected() {
        let table = table(5, 1);
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let values: Vec<CycloValue> =
            table.classes().iter().map(|_| table.ctx().rational(half.clone())).collect();
        assert!(matches!(
            table.decompose(&values),
            Err(Error::NonIntegralDecomposition(_))
        ));
    }

    #[test]
    fn virtual_characters_round_trip() {
        let table = table(5, 1);
        let params = *table.params();
        let mut elem = GrothElem::zero(params);
        elem.add_irrep(GammaIrrep::one_dim(&params, 2, true), -3).unwrap();
        elem.add_irrep(GammaIrrep::two_dim(&params, 7).unwrap(), 5).unwrap();
        elem.add_irrep(GammaIrrep::two_dim(&params, 1).unwrap(), -1).unwrap();
        let values = table.character_of(&elem).unwrap();
        assert_eq!(table.decompose(&values).unwrap(), elem);
    }
}

//! Ground-field parameters q = p^f and residue bookkeeping.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The field data every object in this crate is built over: an odd prime p,
/// an exponent f ≥ 1, and q = p^f. Carried by value; operations across two
/// different parameter sets are errors, never coercions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct FieldParams {
    p: u32,
    f: u32,
    q: u32,
}

/// Practical ceiling on q. The oracle works in ℚ[X]/Φ_{q²−1}(X), whose degree
/// φ(q²−1) makes exact decompositions impractical far below this anyway.
const MAX_Q: u32 = 46_340; // floor(sqrt(i32::MAX)), keeps q² − 1 in u32 range

fn is_odd_prime(n: u32) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl FieldParams {
    pub fn new(p: u32, f: u32) -> Result<Self> {
        if !is_odd_prime(p) {
            return Err(Error::InvalidParams(format!("p = {p} is not an odd prime")));
        }
        if f == 0 {
            return Err(Error::InvalidParams("f must be at least 1".into()));
        }
        let mut q: u32 = 1;
        for _ in 0..f {
            q = q
                .checked_mul(p)
                .filter(|&q| q <= MAX_Q)
                .ok_or_else(|| Error::InvalidParams(format!("q = {p}^{f} is too large")))?;
        }
        Ok(FieldParams { p, f, q })
    }

    /// Recover (p, f) from q alone, for deserializing payloads that carry
    /// only q. Fails unless q is an odd prime power.
    pub fn from_q(q: u32) -> Result<Self> {
        if q < 3 {
            return Err(Error::InvalidParams(format!("q = {q} is not an odd prime power")));
        }
        let mut p = 3;
        while p * p <= q {
            if q % p == 0 {
                break;
            }
            p += 2;
        }
        if q % 2 == 0 {
            return Err(Error::InvalidParams(format!("q = {q} is even")));
        }
        let p = if p * p > q { q } else { p };
        let mut f = 0;
        let mut rest = q;
        while rest % p == 0 {
            rest /= p;
            f += 1;
        }
        if rest != 1 {
            return Err(Error::InvalidParams(format!("q = {q} is not a prime power")));
        }
        FieldParams::new(p, f)
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn f(&self) -> u32 {
        self.f
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    /// |ℓ^×| = q² − 1, the modulus for two-dimensional labels.
    pub fn qsq_m1(&self) -> u32 {
        self.q * self.q - 1
    }

    /// |k^×| = q − 1, the modulus for one-dimensional labels and central
    /// characters.
    pub fn q_m1(&self) -> u32 {
        self.q - 1
    }

    /// |Γ| = 2(q² − 1).
    pub fn group_order(&self) -> u32 {
        2 * self.qsq_m1()
    }

    /// Whether q = p, the only case the symmetric-power weight and built-in
    /// Galois-class tables are defined for.
    pub fn is_prime_field(&self) -> bool {
        self.f == 1
    }

    pub fn ensure_same(&self, other: &FieldParams) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::MismatchedParams { left: self.q, right: other.q })
        }
    }
}

/// Least nonnegative residue of a modulo m.
pub(crate) fn residue(a: i64, m: u32) -> u32 {
    a.rem_euclid(i64::from(m)) as u32
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn accepts_odd_prime_powers() {
        for (p, f, q) in [(3, 1, 3), (5, 1, 5), (7, 1, 7), (3, 2, 9), (13, 1, 13), (3, 4, 81)] {
            let params = FieldParams::new(p, f).unwrap();
            assert_eq!(params.q(), q);
            assert_eq!(FieldParams::from_q(q).unwrap(), params);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(FieldParams::new(2, 1).is_err());
        assert!(FieldParams::new(4, 1).is_err());
        assert!(FieldParams::new(9, 1).is_err());
        assert!(FieldParams::new(1, 1).is_err());
        assert!(FieldParams::new(5, 0).is_err());
        assert!(FieldParams::from_q(15).is_err());
        assert!(FieldParams::from_q(8).is_err());
        assert!(FieldParams::from_q(1).is_err());
    }

    #[test]
    fn moduli_and_order() {
        let params = FieldParams::new(5, 1).unwrap();
        assert_eq!(params.qsq_m1(), 24);
        assert_eq!(params.q_m1(), 4);
        assert_eq!(params.group_order(), 48);
        assert!(params.is_prime_field());
        assert!(!FieldParams::new(3, 2).unwrap().is_prime_field());
    }

    #[test]
    fn residues_are_least_nonnegative() {
        assert_eq!(residue(-1, 24), 23);
        assert_eq!(residue(25, 24), 1);
        assert_eq!(residue(0, 4), 0);
    }
}

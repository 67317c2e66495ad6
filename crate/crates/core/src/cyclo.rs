//! Exact arithmetic in the cyclotomic field ℚ(ζ_n) = ℚ[X]/Φ_n(X).
//!
//! Character values of Γ live in ℤ[ζ_{q²−1}], and the oracle's inner
//! products divide by the group order, so everything here is a polynomial
//! with rational coefficients reduced modulo the n-th cyclotomic polynomial.
//! No floating point, ever. Values do not carry their context; all
//! operations go through [`CycloCtx`], which owns Φ_n and a table of reduced
//! powers of ζ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

/// An element of ℚ(ζ_n), stored as its coefficients on 1, ζ, …, ζ^{φ(n)−1}.
/// Equality of reduced representatives is equality in the field, because
/// Φ_n is irreducible over ℚ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycloValue {
    coeffs: Vec<BigRational>,
}

impl CycloValue {
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
}

/// Arithmetic context for a fixed n: the modulus Φ_n and the reduced powers
/// ζ^0, …, ζ^{n−1}.
#[derive(Debug, Clone)]
pub struct CycloCtx {
    n: u32,
    degree: usize,
    /// Monic Φ_n as coefficients of 1, X, …, X^{φ(n)}.
    modulus: Vec<BigRational>,
    /// powers[t] is ζ^t reduced, for 0 ≤ t < n.
    powers: Vec<CycloValue>,
}

fn rat(i: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(i))
}

fn divisors(n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = (1..=n).filter(|d| n % d == 0).collect();
    out.sort_unstable();
    out
}

/// X^n − 1 as a coefficient vector.
fn x_pow_minus_one(n: u32) -> Vec<BigRational> {
    let mut poly = vec![BigRational::zero(); n as usize + 1];
    poly[0] = -BigRational::one();
    poly[n as usize] = BigRational::one();
    poly
}

/// Exact quotient of a polynomial by a monic polynomial. Panics if the
/// division leaves a remainder, which cannot happen for the cyclotomic
/// factorizations this file performs.
fn div_exact_monic(mut num: Vec<BigRational>, den: &[BigRational]) -> Vec<BigRational> {
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    assert!(num.len() >= den.len());
    let mut quot = vec![BigRational::zero(); num.len() - dd];
    for i in (dd..num.len()).rev() {
        let c = num[i].clone();
        if c.is_zero() {
            continue;
        }
        quot[i - dd] = c.clone();
        for (j, d) in den.iter().enumerate() {
            num[i - dd + j] -= &c * d;
        }
    }
    assert!(num.iter().all(Zero::is_zero), "non-exact polynomial division");
    quot
}

/// Φ_n via Φ_n = (X^n − 1) / Π_{d | n, d < n} Φ_d, computed bottom-up over
/// the divisors of n.
fn cyclotomic_polynomial(n: u32) -> Vec<BigRational> {
    let mut memo: Vec<(u32, Vec<BigRational>)> = Vec::new();
    for d in divisors(n) {
        let mut poly = x_pow_minus_one(d);
        for (e, phi_e) in &memo {
            if d % e == 0 {
                poly = div_exact_monic(poly, phi_e);
            }
        }
        memo.push((d, poly));
    }
    memo.pop().expect("n has at least the divisor n").1
}

impl CycloCtx {
    pub fn new(n: u32) -> Self {
        assert!(n >= 2, "cyclotomic context needs n >= 2");
        let modulus = cyclotomic_polynomial(n);
        let degree = modulus.len() - 1;
        let mut ctx = CycloCtx { n, degree, modulus, powers: Vec::new() };
        let mut powers = Vec::with_capacity(n as usize);
        powers.push(ctx.one());
        for t in 1..n as usize {
            // ζ^t = ζ · ζ^{t−1}, one shift plus one reduction step
            let mut shifted = vec![BigRational::zero(); degree + 1];
            for (i, c) in powers[t - 1].coeffs.iter().enumerate() {
                shifted[i + 1] = c.clone();
            }
            powers.push(ctx.reduce(shifted));
        }
        ctx.powers = powers;
        ctx
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Reduce an arbitrary-degree coefficient vector modulo Φ_n.
    fn reduce(&self, mut poly: Vec<BigRational>) -> CycloValue {
        if poly.len() > self.degree {
            for i in (self.degree..poly.len()).rev() {
                let c = std::mem::replace(&mut poly[i], BigRational::zero());
                if c.is_zero() {
                    continue;
                }
                for j in 0..self.degree {
                    let m = &self.modulus[j];
                    if !m.is_zero() {
                        poly[i - self.degree + j] -= &c * m;
                    }
                }
            }
        }
        poly.truncate(self.degree);
        poly.resize(self.degree, BigRational::zero());
        CycloValue { coeffs: poly }
    }

    pub fn zero(&self) -> CycloValue {
        CycloValue { coeffs: vec![BigRational::zero(); self.degree] }
    }

    pub fn one(&self) -> CycloValue {
        self.integer(1)
    }

    pub fn integer(&self, c: i64) -> CycloValue {
        self.rational(rat(c))
    }

    pub fn rational(&self, c: BigRational) -> CycloValue {
        let mut v = self.zero();
        v.coeffs[0] = c;
        v
    }

    /// ζ^t for any integer t, reduced.
    pub fn zeta_pow(&self, t: i64) -> CycloValue {
        self.powers[t.rem_euclid(i64::from(self.n)) as usize].clone()
    }

    pub fn add(&self, a: &CycloValue, b: &CycloValue) -> CycloValue {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x + y).collect();
        CycloValue { coeffs }
    }

    pub fn add_assign(&self, a: &mut CycloValue, b: &CycloValue) {
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
    }

    pub fn sub(&self, a: &CycloValue, b: &CycloValue) -> CycloValue {
        let coeffs = a.coeffs.iter().zip(&b.coeffs).map(|(x, y)| x - y).collect();
        CycloValue { coeffs }
    }

    pub fn neg(&self, a: &CycloValue) -> CycloValue {
        CycloValue { coeffs: a.coeffs.iter().map(|x| -x).collect() }
    }

    pub fn scale(&self, a: &CycloValue, c: &BigRational) -> CycloValue {
        CycloValue { coeffs: a.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn scale_int(&self, a: &CycloValue, c: i64) -> CycloValue {
        self.scale(a, &rat(c))
    }

    pub fn mul(&self, a: &CycloValue, b: &CycloValue) -> CycloValue {
        let mut prod = vec![BigRational::zero(); 2 * self.degree];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if !y.is_zero() {
                    prod[i + j] += x * y;
                }
            }
        }
        self.reduce(prod)
    }

    /// The automorphism ζ ↦ ζ^{−1}, which is complex conjugation under any
    /// complex embedding.
    pub fn conj(&self, a: &CycloValue) -> CycloValue {
        let mut acc = self.zero();
        for (i, c) in a.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let p = &self.powers[(self.n as usize - i) % self.n as usize];
            for (dst, src) in acc.coeffs.iter_mut().zip(&p.coeffs) {
                *dst += c * src;
            }
        }
        acc
    }

    /// The rational number this value equals, if it lies in ℚ.
    pub fn as_rational(&self, a: &CycloValue) -> Option<BigRational> {
        if a.coeffs[1..].iter().all(Zero::is_zero) {
            Some(a.coeffs[0].clone())
        } else {
            None
        }
    }

    /// The rational integer this value equals, if it is one.
    pub fn as_i64(&self, a: &CycloValue) -> Option<i64> {
        let r = self.as_rational(a)?;
        if r.denom().is_one() {
            r.numer().to_i64()
        } else {
            None
        }
    }

    /// Render as a human-readable polynomial in ζ, for error messages.
    pub fn describe(&self, a: &CycloValue) -> String {
        let terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| match i {
                0 => format!("{c}"),
                1 => format!("{c}*z"),
                _ => format!("{c}*z^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

//! Finite fields GF(p^e) with elements stored as canonical integers.
//!
//! An element of GF(p^e) is the residue class of a polynomial
//! `c_0 + c_1 x + ... + c_{e-1} x^{e-1}` modulo a fixed monic irreducible;
//! it is stored as the integer `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`. For
//! prime fields this is just the residue in `[0, p)`. The encoding gives
//! zero and one the indices 0 and 1 in every field.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Poly;
use crate::error::{Error, Result};

/// Field orders must stay strictly below this bound.
pub const MAX_ORDER: u64 = 1 << 31;

/// An element of some [`Field`], identified by its canonical index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Fe(pub(crate) u32);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn value(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite field GF(p^e).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    p: u32,
    e: u32,
    order: u32,
    /// Monic modulus, ascending coefficients, length `e + 1`. Empty when `e == 1`.
    modulus: Vec<u32>,
}

pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while (d as u64) * (d as u64) <= n as u64 {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl Field {
    /// Builds GF(p^e). For `e > 1` the modulus is the monic irreducible of
    /// degree `e` whose lower coefficients, read as the base-`p` integer
    /// `c_0 + c_1 p + ... + c_{e-1} p^{e-1}`, are smallest. The choice is
    /// fully deterministic, so packed encodings agree across machines.
    pub fn new(p: u32, e: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::ZeroDegree);
        }
        let order = (p as u64)
            .checked_pow(e)
            .filter(|&q| q < MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, e })? as u32;
        if e == 1 {
            return Ok(Field {
                p,
                e,
                order,
                modulus: Vec::new(),
            });
        }
        let base = Field::prime(p)?;
        let modulus = smallest_irreducible(&base, e as usize).ok_or(Error::NoIrreducible { p, e })?;
        Ok(Field { p, e, order, modulus })
    }

    pub fn prime(p: u32) -> Result<Self> {
        Field::new(p, 1)
    }

    #[inline]
    pub fn characteristic(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.e
    }

    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    #[inline]
    pub fn is_prime_field(&self) -> bool {
        self.e == 1
    }

    /// Ascending coefficients of the monic modulus; empty for prime fields.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    #[inline]
    pub fn zero(&self) -> Fe {
        Fe::ZERO
    }

    #[inline]
    pub fn one(&self) -> Fe {
        Fe::ONE
    }

    /// The element with canonical index `value`.
    pub fn element(&self, value: u64) -> Result<Fe> {
        if value < self.order as u64 {
            Ok(Fe(value as u32))
        } else {
            Err(Error::ElementOutOfRange {
                value,
                order: self.order,
            })
        }
    }

    pub fn vector(&self, values: &[u64]) -> Result<Vec<Fe>> {
        values.iter().map(|&v| self.element(v)).collect()
    }

    /// Image of an integer under the ring map Z -> GF(p^e).
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn contains(&self, a: Fe) -> bool {
        a.0 < self.order
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> {
        (0..self.order).map(Fe)
    }

    pub fn nonzero_elements(&self) -> impl Iterator<Item = Fe> {
        (1..self.order).map(Fe)
    }

    /// Little-endian coordinates of `a` in the monomial basis, length `e`.
    pub fn digits(&self, a: Fe) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.e as usize);
        let mut v = a.0;
        for _ in 0..self.e {
            out.push(v % self.p);
            v /= self.p;
        }
        out
    }

    pub fn from_digits(&self, digits: &[u32]) -> Result<Fe> {
        if digits.len() != self.e as usize {
            return Err(Error::LengthMismatch {
                expected: self.e as usize,
                got: digits.len(),
            });
        }
        let mut v: u64 = 0;
        for &d in digits.iter().rev() {
            if d >= self.p {
                return Err(Error::BadElementEncoding {
                    p: self.p,
                    e: self.e,
                    reason: format!("coordinate {d} is not below {}", self.p),
                });
            }
            v = v * self.p as u64 + d as u64;
        }
        Ok(Fe(v as u32))
    }

    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.e == 1 {
            let s = a.0 as u64 + b.0 as u64;
            return Fe((s % self.p as u64) as u32);
        }
        self.digitwise(a, b, |x, y, p| (x + y) % p)
    }

    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        if self.e == 1 {
            let s = a.0 as u64 + self.p as u64 - b.0 as u64;
            return Fe((s % self.p as u64) as u32);
        }
        self.digitwise(a, b, |x, y, p| (x + p - y) % p)
    }

    pub fn neg(&self, a: Fe) -> Fe {
        self.sub(Fe::ZERO, a)
    }

    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if self.e == 1 {
            return Fe(((a.0 as u64 * b.0 as u64) % self.p as u64) as u32);
        }
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        let p = self.p as u64;
        let e = self.e as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * e - 1];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u64 * y as u64) % p;
            }
        }
        // Reduce with the monic modulus, top degree first.
        for top in (e..prod.len()).rev() {
            let c = prod[top];
            if c == 0 {
                continue;
            }
            prod[top] = 0;
            for (i, &m) in self.modulus[..e].iter().enumerate() {
                let idx = top - e + i;
                prod[idx] = (prod[idx] + (p - c) * m as u64) % p;
            }
        }
        let digits: Vec<u32> = prod[..e].iter().map(|&d| d as u32).collect();
        self.from_digits(&digits).expect("reduced digits are canonical")
    }

    pub fn pow(&self, a: Fe, mut exp: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Fe) -> Result<Fe> {
        if a.is_zero() {
            return Err(Error::InverseOfZero);
        }
        if self.e == 1 {
            // Extended Euclid on integers.
            let (mut r0, mut r1) = (self.p as i64, a.0 as i64);
            let (mut t0, mut t1) = (0i64, 1i64);
            while r1 != 0 {
                let q = r0 / r1;
                (r0, r1) = (r1, r0 - q * r1);
                (t0, t1) = (t1, t0 - q * t1);
            }
            return Ok(self.from_int(t0));
        }
        Ok(self.pow(a, self.order as u64 - 2))
    }

    pub fn div(&self, a: Fe, b: Fe) -> Result<Fe> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Sum of `a` with itself `n` times.
    pub fn scale_int(&self, a: Fe, n: u64) -> Fe {
        self.mul(a, self.from_int((n % self.p as u64) as i64))
    }

    fn digitwise(&self, a: Fe, b: Fe, op: impl Fn(u32, u32, u32) -> u32) -> Fe {
        let p = self.p;
        let (mut x, mut y) = (a.0, b.0);
        let mut out: u64 = 0;
        let mut place: u64 = 1;
        for _ in 0..self.e {
            out += op(x % p, y % p, p) as u64 * place;
            x /= p;
            y /= p;
            place *= p as u64;
        }
        Fe(out as u32)
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.e == 1 {
            write!(f, "GF({})", self.p)
        } else {
            write!(f, "GF({}^{})", self.p, self.e)
        }
    }
}

/// Ben-Or test: monic `f` of degree `e` is irreducible iff
/// `gcd(x^(p^i) - x, f) = 1` for every `1 <= i <= e/2`.
fn is_irreducible(base: &Field, f: &Poly) -> bool {
    let e = match f.degree() {
        Some(d) if d >= 1 => d,
        _ => return false,
    };
    let x = Poly::monomial(Fe::ONE, 1);
    let mut frob = x.clone();
    for _ in 0..e / 2 {
        frob = frob.pow_mod(base.order() as u64, f, base).expect("nonzero modulus");
        let g = frob.sub(&x, base).gcd(f, base);
        if g.degree() != Some(0) {
            return false;
        }
    }
    true
}

fn smallest_irreducible(base: &Field, e: usize) -> Option<Vec<u32>> {
    let p = base.characteristic() as u64;
    let count = p.checked_pow(e as u32)?;
    for idx in 0..count {
        let mut coeffs = Vec::with_capacity(e + 1);
        let mut v = idx;
        for _ in 0..e {
            coeffs.push((v % p) as u32);
            v /= p;
        }
        // x divides anything with zero constant term.
        if coeffs[0] == 0 {
            continue;
        }
        coeffs.push(1);
        let f = Poly::new(coeffs.iter().map(|&c| Fe(c)).collect());
        if is_irreducible(base, &f) {
            return Some(coeffs);
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent irreducibility oracle: no monic factor of degree 1..=e/2.
    fn has_no_small_factor(p: u32, coeffs: &[u32]) -> bool {
        let base = Field::prime(p).unwrap();
        let f = Poly::new(coeffs.iter().map(|&c| Fe(c)).collect());
        let e = coeffs.len() - 1;
        for d in 1..=e / 2 {
            let total = (p as u64).pow(d as u32);
            for idx in 0..total {
                let mut g: Vec<Fe> = Vec::new();
                let mut v = idx;
                for _ in 0..d {
                    g.push(Fe((v % p as u64) as u32));
                    v /= p as u64;
                }
                g.push(Fe::ONE);
                let (_, r) = f.div_rem(&Poly::new(g), &base).unwrap();
                if r.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    #[test]
    fn prime_field_has_no_modulus() {
        let f = Field::new(23, 1).unwrap();
        assert_eq!(f.order(), 23);
        assert!(f.modulus().is_empty());
    }

    #[test]
    fn gf8_modulus_is_x3_x_1() {
        // Exhaustive scan: among the 8 monic cubics only x^3+x+1 and x^3+x^2+1
        // are irreducible, and x^3+x+1 has the smaller lower-coefficient index.
        let irreducible: Vec<Vec<u32>> = (0..8u32)
            .map(|i| vec![i & 1, (i >> 1) & 1, (i >> 2) & 1, 1])
            .filter(|c| has_no_small_factor(2, c))
            .collect();
        assert_eq!(irreducible, vec![vec![1, 1, 0, 1], vec![1, 0, 1, 1]]);
        let f = Field::new(2, 3).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1]);
    }

    #[test]
    fn gf256_modulus_matches_trial_division() {
        let f = Field::new(2, 8).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 1, 1, 0, 0, 0, 1]);
        assert!(has_no_small_factor(2, f.modulus()));
    }

    #[test]
    fn moduli_agree_with_trial_division() {
        for &(p, e) in &[(3u32, 2u32), (3, 3), (5, 2), (7, 3), (23, 2), (2, 5)] {
            let f = Field::new(p, e).unwrap();
            assert!(has_no_small_factor(p, f.modulus()), "GF({p}^{e})");
        }
    }

    #[test]
    fn rejects_non_prime() {
        assert_eq!(Field::new(4, 1), Err(Error::NotPrime(4)));
        assert_eq!(Field::new(1, 1), Err(Error::NotPrime(1)));
        assert_eq!(Field::new(5, 0), Err(Error::ZeroDegree));
        assert!(matches!(Field::new(2, 31), Err(Error::FieldTooLarge { .. })));
    }

    #[test]
    fn inverse_in_gf23() {
        let f = Field::prime(23).unwrap();
        // Exhaustive oracle.
        let b = (1..23u32).find(|b| 11 * b % 23 == 1).unwrap();
        assert_eq!(b, 21);
        assert_eq!(f.inv(Fe(11)).unwrap(), Fe(21));
        assert_eq!(f.inv(Fe::ZERO), Err(Error::InverseOfZero));
    }

    #[test]
    fn pow_matches_product_chain() {
        let f = Field::prime(23).unwrap();
        let naive = (0..5).fold(1u64, |acc, _| acc * 11 % 23);
        assert_eq!(naive, 5);
        assert_eq!(f.pow(Fe(11), 5), Fe(5));
        assert_eq!(f.pow(Fe::ZERO, 0), Fe::ONE);
    }

    #[test]
    fn additive_inverse() {
        for f in [Field::prime(23).unwrap(), Field::new(3, 4).unwrap()] {
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
            }
        }
    }

    #[test]
    fn every_nonzero_element_inverts() {
        for f in [
            Field::new(2, 8).unwrap(),
            Field::new(23, 2).unwrap(),
            Field::prime(101).unwrap(),
        ] {
            for a in f.nonzero_elements() {
                assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE, "{f} {a}");
            }
        }
    }

    #[test]
    fn multiplicative_group_order() {
        // a^(q-1) = 1 for every nonzero a.
        let f = Field::new(5, 3).unwrap();
        for a in f.nonzero_elements() {
            assert_eq!(f.pow(a, f.order() as u64 - 1), Fe::ONE);
        }
    }

    #[test]
    fn digits_round_trip() {
        let f = Field::new(2, 3).unwrap();
        let a = f.from_digits(&[1, 1, 0]).unwrap();
        assert_eq!(a.value(), 3);
        assert_eq!(f.digits(a), vec![1, 1, 0]);
        assert!(f.from_digits(&[2, 0, 0]).is_err());
        assert!(f.from_digits(&[1, 0]).is_err());
    }

    #[test]
    fn element_range_checked() {
        let f = Field::prime(7).unwrap();
        assert!(f.element(6).is_ok());
        assert!(f.element(7).is_err());
        assert_eq!(f.from_int(-1), Fe(6));
    }
}

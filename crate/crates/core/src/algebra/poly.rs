use std::fmt;

use crate::algebra::{Fe, Field};
use crate::error::{Error, Result};

/// Largest field order for which [`Poly::roots`] scans exhaustively.
pub const DEFAULT_SCAN_CAP: u32 = 1 << 16;

/// Univariate polynomial with ascending coefficients.
///
/// Always normalized: the highest stored coefficient is nonzero and the zero
/// polynomial is the empty vector, so `degree()` is `None` exactly for zero.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Fe>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn constant(c: Fe) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^degree`.
    pub fn monomial(c: Fe, degree: usize) -> Self {
        let mut coeffs = vec![Fe::ZERO; degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Fe> {
        self.coeffs
    }

    /// `None` is the degree of the zero polynomial (minus infinity).
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, i: usize) -> Fe {
        self.coeffs.get(i).copied().unwrap_or(Fe::ZERO)
    }

    pub fn leading(&self) -> Option<Fe> {
        self.coeffs.last().copied()
    }

    /// The first `len` coefficients, zero-padded.
    pub fn padded(&self, len: usize) -> Vec<Fe> {
        (0..len).map(|i| self.coeff(i)).collect()
    }

    pub fn add(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.add(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn sub(&self, other: &Poly, f: &Field) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        Poly::new((0..n).map(|i| f.sub(self.coeff(i), other.coeff(i))).collect())
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&c| f.neg(c)).collect())
    }

    pub fn scale(&self, c: Fe, f: &Field) -> Poly {
        Poly::new(self.coeffs.iter().map(|&a| f.mul(a, c)).collect())
    }

    /// Schoolbook product.
    pub fn mul(&self, other: &Poly, f: &Field) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::new(out)
    }

    /// Euclidean division: `self = q * divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly, f: &Field) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = f.inv(divisor.coeffs[dd])?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = rem[top];
            if c.is_zero() {
                continue;
            }
            let factor = f.mul(c, lead_inv);
            quot[top - dd] = factor;
            for (i, &d) in divisor.coeffs.iter().enumerate() {
                let idx = top - dd + i;
                rem[idx] = f.sub(rem[idx], f.mul(factor, d));
            }
        }
        rem.truncate(dd);
        Ok((Poly::new(quot), Poly::new(rem)))
    }

    pub fn rem(&self, divisor: &Poly, f: &Field) -> Result<Poly> {
        Ok(self.div_rem(divisor, f)?.1)
    }

    /// Monic greatest common divisor; zero only when both inputs are zero.
    pub fn gcd(&self, other: &Poly, f: &Field) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b, f).expect("b is nonzero");
            a = b;
            b = r;
        }
        a.monic(f)
    }

    pub fn monic(&self, f: &Field) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(l) => self.scale(f.inv(l).expect("leading coefficient is nonzero"), f),
        }
    }

    /// `self^exp mod modulus`.
    pub fn pow_mod(&self, mut exp: u64, modulus: &Poly, f: &Field) -> Result<Poly> {
        let mut base = self.rem(modulus, f)?;
        let mut acc = Poly::constant(Fe::ONE).rem(modulus, f)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base, f).rem(modulus, f)?;
            }
            base = base.mul(&base, f).rem(modulus, f)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Horner evaluation.
    pub fn eval(&self, x: Fe, f: &Field) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn eval_many(&self, points: &[Fe], f: &Field) -> Vec<Fe> {
        points.iter().map(|&x| self.eval(x, f)).collect()
    }

    /// All roots in `f`, found by evaluating at every field element.
    pub fn roots(&self, f: &Field) -> Result<Vec<Fe>> {
        self.roots_with_cap(f, DEFAULT_SCAN_CAP)
    }

    pub fn roots_with_cap(&self, f: &Field, cap: u32) -> Result<Vec<Fe>> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if f.order() > cap {
            return Err(Error::ScanCapExceeded { order: f.order(), cap });
        }
        if self.degree() == Some(0) {
            return Ok(Vec::new());
        }
        Ok(f.elements().filter(|&a| self.eval(a, f).is_zero()).collect())
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            match (i, c.value()) {
                (0, v) => write!(out, "{v}")?,
                (1, 1) => write!(out, "x")?,
                (1, v) => write!(out, "{v}x")?,
                (_, 1) => write!(out, "x^{i}")?,
                (_, v) => write!(out, "{v}x^{i}")?,
            }
        }
        Ok(())
    }
}

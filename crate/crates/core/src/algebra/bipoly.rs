use std::collections::BTreeMap;

use crate::algebra::{Fe, Field, Poly};
use crate::error::{Error, Result};

/// Binomial coefficients reduced into a field's prime subfield.
pub(crate) struct Binomials {
    rows: Vec<Vec<Fe>>,
}

impl Binomials {
    pub(crate) fn new(max_n: usize, f: &Field) -> Self {
        let mut rows: Vec<Vec<Fe>> = Vec::with_capacity(max_n + 1);
        rows.push(vec![Fe::ONE]);
        for n in 1..=max_n {
            let prev = &rows[n - 1];
            let mut row = vec![Fe::ONE; n + 1];
            for k in 1..n {
                row[k] = f.add(prev[k - 1], prev[k]);
            }
            rows.push(row);
        }
        Binomials { rows }
    }

    /// `C(n, k)`; zero when `k > n`.
    pub(crate) fn get(&self, n: usize, k: usize) -> Fe {
        if k > n {
            Fe::ZERO
        } else {
            self.rows[n][k]
        }
    }
}

/// Bivariate polynomial `Q(x, y) = sum q_ij x^i y^j`, keyed by `(i, j)`.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Fe>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), Fe)>, f: &Field) -> Self {
        let mut q = BiPoly::zero();
        for ((i, j), c) in terms {
            q.add_term(i, j, c, f);
        }
        q
    }

    /// `y - g(x)`, the bivariate polynomial whose only y-root is `g`.
    pub fn y_minus(g: &Poly, f: &Field) -> Self {
        let mut q = BiPoly::zero();
        q.add_term(0, 1, Fe::ONE, f);
        for (i, &c) in g.coeffs().iter().enumerate() {
            q.add_term(i, 0, f.neg(c), f);
        }
        q
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: Fe, f: &Field) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry((i, j)).or_insert(Fe::ZERO);
        *slot = f.add(*slot, c);
        if slot.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, i: usize, j: usize) -> Fe {
        self.terms.get(&(i, j)).copied().unwrap_or(Fe::ZERO)
    }

    /// Terms in ascending `(i, j)` order.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), Fe)> + '_ {
        self.terms.iter().map(|(&k, &v)| (k, v))
    }

    /// `max i + w*j` over stored terms.
    pub fn wdeg(&self, w: usize) -> Result<usize> {
        self.terms
            .keys()
            .map(|&(i, j)| i + w * j)
            .max()
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn deg_y(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    /// Smallest `i + j` over stored terms.
    pub fn min_total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).min()
    }

    pub fn mul(&self, other: &BiPoly, f: &Field) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(i1, j1), &a) in &self.terms {
            for (&(i2, j2), &b) in &other.terms {
                out.add_term(i1 + i2, j1 + j2, f.mul(a, b), f);
            }
        }
        out
    }

    pub fn eval(&self, x: Fe, y: Fe, f: &Field) -> Fe {
        self.terms.iter().fold(Fe::ZERO, |acc, (&(i, j), &c)| {
            let t = f.mul(c, f.mul(f.pow(x, i as u64), f.pow(y, j as u64)));
            f.add(acc, t)
        })
    }

    /// Coefficient of `y^j`, as a polynomial in `x`.
    pub fn y_coeff(&self, j: usize) -> Poly {
        let deg = self.terms.keys().filter(|&&(_, jj)| jj == j).map(|&(i, _)| i).max();
        match deg {
            None => Poly::zero(),
            Some(d) => Poly::new((0..=d).map(|i| self.coeff(i, j)).collect()),
        }
    }

    /// `Q(x, g(x))`, by Horner's rule in `y`.
    pub fn compose(&self, g: &Poly, f: &Field) -> Poly {
        let Some(dy) = self.deg_y() else {
            return Poly::zero();
        };
        let mut acc = self.y_coeff(dy);
        for j in (0..dy).rev() {
            acc = acc.mul(g, f).add(&self.y_coeff(j), f);
        }
        acc
    }

    /// `Q(x + a, y + r)`, expanded with binomial coefficients.
    pub fn translate(&self, a: Fe, r: Fe, f: &Field) -> BiPoly {
        let max = self.terms.keys().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
        let binom = Binomials::new(max, f);
        let mut out = BiPoly::zero();
        for (&(i, j), &c) in &self.terms {
            for u in 0..=i {
                let cx = f.mul(binom.get(i, u), f.pow(a, (i - u) as u64));
                if cx.is_zero() {
                    continue;
                }
                let cxc = f.mul(c, cx);
                for v in 0..=j {
                    let cy = f.mul(binom.get(j, v), f.pow(r, (j - v) as u64));
                    out.add_term(u, v, f.mul(cxc, cy), f);
                }
            }
        }
        out
    }

    /// Multiplicity of `Q` at `(a, r)`: the lowest total degree in `Q(x + a, y + r)`.
    pub fn multiplicity_at(&self, a: Fe, r: Fe, f: &Field) -> Option<usize> {
        self.translate(a, r, f).min_total_degree()
    }

    /// Hasse derivative of order `(da, db)` evaluated at `(x, y)`.
    pub fn hasse(&self, da: usize, db: usize, x: Fe, y: Fe, f: &Field) -> Fe {
        let max = self.terms.keys().map(|&(i, j)| i.max(j)).max().unwrap_or(0);
        let binom = Binomials::new(max, f);
        self.terms.iter().fold(Fe::ZERO, |acc, (&(i, j), &c)| {
            if i < da || j < db {
                return acc;
            }
            let t = f.mul(
                f.mul(c, f.mul(binom.get(i, da), binom.get(j, db))),
                f.mul(f.pow(x, (i - da) as u64), f.pow(y, (j - db) as u64)),
            );
            f.add(acc, t)
        })
    }

    /// Divides out the largest power of `x` that divides `Q`.
    pub fn strip_x(&self) -> BiPoly {
        let Some(m) = self.terms.keys().map(|&(i, _)| i).min() else {
            return BiPoly::zero();
        };
        BiPoly {
            terms: self.terms.iter().map(|(&(i, j), &c)| ((i - m, j), c)).collect(),
        }
    }

    /// `Q(0, y)` as a polynomial in `y`.
    pub fn at_x_zero(&self) -> Poly {
        let deg = self.terms.keys().filter(|&&(i, _)| i == 0).map(|&(_, j)| j).max();
        match deg {
            None => Poly::zero(),
            Some(d) => Poly::new((0..=d).map(|j| self.coeff(0, j)).collect()),
        }
    }

    /// `Q(x, x*y + gamma)`.
    pub fn substitute_shift(&self, gamma: Fe, f: &Field) -> BiPoly {
        let max = self.deg_y().unwrap_or(0);
        let binom = Binomials::new(max, f);
        let mut out = BiPoly::zero();
        for (&(i, j), &c) in &self.terms {
            // x^i (x y + gamma)^j = sum_v C(j, v) gamma^(j-v) x^(i+v) y^v
            for v in 0..=j {
                let coef = f.mul(c, f.mul(binom.get(j, v), f.pow(gamma, (j - v) as u64)));
                out.add_term(i + v, v, coef, f);
            }
        }
        out
    }
}

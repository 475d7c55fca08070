use serde::Serialize;

use crate::error::{Error, Result};

/// Largest multiplicity tried by [`select_multiplicity`].
pub const DEFAULT_MAX_MULTIPLICITY: usize = 64;

/// Interpolation parameters for one decoding call.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GsParams {
    pub n: usize,
    pub k: usize,
    pub tau: usize,
    /// Multiplicity imposed at every interpolation point.
    pub s: usize,
    /// y-weight of the weighted degree, `max(k - 1, 1)`.
    pub weight: usize,
    /// Strict bound on the weighted degree: `s * (n - tau)`.
    pub degree_bound: usize,
    /// Unknown exponent pairs `(i, j)` with `i + weight * j < degree_bound`,
    /// ordered by `j`, then `i`.
    pub monomials: Vec<(usize, usize)>,
}

/// y-weight used for codes of dimension `k`. For `k = 1` the zero weight would
/// admit infinitely many monomials, so weight 1 is used instead; it is still a
/// valid bound because `deg f <= 0 <= 1`.
pub fn weight_for(k: usize) -> usize {
    k.saturating_sub(1).max(1)
}

/// Number of pairs `(i, j)` with `i + w*j < d`.
pub fn monomial_count(d: usize, w: usize) -> usize {
    (0..).map(|j| w * j).take_while(|&wj| wj < d).map(|wj| d - wj).sum()
}

/// `tau < n - sqrt(n k)`, decided exactly on integers.
pub fn within_johnson_radius(n: usize, k: usize, tau: usize) -> bool {
    tau < n && ((n - tau) as u128).pow(2) > (n as u128) * (k as u128)
}

fn solvable(n: usize, k: usize, tau: usize, s: usize) -> bool {
    let d = s * (n - tau);
    monomial_count(d, weight_for(k)) > n * s * (s + 1) / 2
}

/// Smallest feasible multiplicity at or below `s_max`, if any.
pub fn try_multiplicity(n: usize, k: usize, tau: usize, s_max: usize) -> Option<usize> {
    if k == 0 || k > n || tau >= n {
        return None;
    }
    // Error-free decoding is always possible; this matters only for k = n.
    if tau > 0 && !within_johnson_radius(n, k, tau) {
        return None;
    }
    (1..=s_max).find(|&s| solvable(n, k, tau, s))
}

/// Largest radius for which some multiplicity `<= s_max` is feasible.
pub fn max_feasible_tau(n: usize, k: usize, s_max: usize) -> Option<usize> {
    (0..n).rev().find(|&tau| try_multiplicity(n, k, tau, s_max).is_some())
}

/// Chooses the multiplicity for decoding `n`-symbol words of a dimension-`k`
/// code at radius `tau`.
///
/// The radius must satisfy `tau < n - sqrt(n k)` (or be zero), and the multiplicity is the
/// smallest `s` for which the number of monomials of weighted degree below
/// `s (n - tau)` exceeds the number of linear constraints `n s (s + 1) / 2`.
pub fn select_multiplicity(n: usize, k: usize, tau: usize) -> Result<usize> {
    select_multiplicity_capped(n, k, tau, DEFAULT_MAX_MULTIPLICITY)
}

pub fn select_multiplicity_capped(n: usize, k: usize, tau: usize, s_max: usize) -> Result<usize> {
    if k == 0 || k > n {
        return Err(Error::InvalidSpec(format!(
            "dimension {k} must satisfy 1 <= k <= n = {n}"
        )));
    }
    try_multiplicity(n, k, tau, s_max).ok_or(Error::Infeasible {
        n,
        k,
        tau,
        max_tau: max_feasible_tau(n, k, s_max),
    })
}

impl GsParams {
    pub fn new(n: usize, k: usize, tau: usize) -> Result<Self> {
        let s = select_multiplicity(n, k, tau)?;
        Ok(Self::with_multiplicity(n, k, tau, s))
    }

    /// Parameters for an explicit multiplicity. The caller is responsible for
    /// solvability; [`GsParams::is_solvable`] reports it.
    pub fn with_multiplicity(n: usize, k: usize, tau: usize, s: usize) -> Self {
        let weight = weight_for(k);
        let degree_bound = s * (n - tau);
        let mut monomials = Vec::new();
        let mut j = 0;
        while weight * j < degree_bound {
            for i in 0..degree_bound - weight * j {
                monomials.push((i, j));
            }
            j += 1;
        }
        GsParams {
            n,
            k,
            tau,
            s,
            weight,
            degree_bound,
            monomials,
        }
    }

    pub fn constraint_count(&self) -> usize {
        self.n * self.s * (self.s + 1) / 2
    }

    pub fn is_solvable(&self) -> bool {
        self.monomials.len() > self.constraint_count()
    }

    /// The list-size bound `s * sqrt(n / k)`.
    pub fn list_bound(&self) -> f64 {
        self.s as f64 * (self.n as f64 / self.k as f64).sqrt()
    }
}

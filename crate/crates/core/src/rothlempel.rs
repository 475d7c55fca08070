//! Roth-Lempel codes: a GRS code of length `n - 1` extended by one column
//! `(0, ..., 0, 1, delta)` of the generator matrix.
//!
//! Dropping that column leaves `GRS(alpha, v', k)`, so decoding punctures the
//! last coordinate, list decodes the GRS code and re-checks the full word.

use crate::algebra::{Fe, Field};
use crate::code::{hamming_distance, LinearCode};
use crate::error::{Error, Result};
use crate::gscore::{gs_list_decode, Candidate, DecodeList, GrsSpec};
use crate::twisted::UniqueOutcome;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RlSpec {
    punctured: GrsSpec,
    v_last: Fe,
    delta: Fe,
}

impl RlSpec {
    /// `alphas` has `n - 1` entries and `vs` has `n`.
    pub fn new(field: Field, alphas: Vec<Fe>, mut vs: Vec<Fe>, k: usize, delta: Fe) -> Result<Self> {
        let n = vs.len();
        if alphas.len() + 1 != n {
            return Err(Error::InvalidSpec(format!(
                "a length-{n} Roth-Lempel code needs {} evaluation points, got {}",
                n.saturating_sub(1),
                alphas.len()
            )));
        }
        if k < 3 {
            return Err(Error::InvalidSpec(format!("Roth-Lempel codes need k >= 3, got {k}")));
        }
        if n < k + 3 || n as u64 > field.order() as u64 + 1 {
            return Err(Error::InvalidSpec(format!(
                "length {n} must satisfy k + 3 = {} <= n <= q + 1 = {}",
                k + 3,
                field.order() as u64 + 1
            )));
        }
        if !field.contains(delta) {
            return Err(Error::InvalidSpec(format!(
                "delta {delta} is not an element of {field}"
            )));
        }
        let v_last = vs.pop().expect("n >= 6");
        if v_last.is_zero() || !field.contains(v_last) {
            return Err(Error::InvalidSpec("column multipliers must be nonzero".into()));
        }
        let punctured = GrsSpec::new(field, alphas, vs, k)?;
        Ok(RlSpec {
            punctured,
            v_last,
            delta,
        })
    }

    /// Points `0, 1, ..., n-2` by index, unit multipliers.
    pub fn standard(field: Field, n: usize, k: usize, delta: Fe) -> Result<Self> {
        let alphas = (0..n.saturating_sub(1) as u64)
            .map(|i| field.element(i))
            .collect::<Result<Vec<_>>>()?;
        RlSpec::new(field, alphas, vec![Fe::ONE; n], k, delta)
    }

    pub fn field(&self) -> &Field {
        self.punctured.field()
    }

    pub fn n(&self) -> usize {
        self.punctured.n() + 1
    }

    pub fn k(&self) -> usize {
        self.punctured.k()
    }

    pub fn delta(&self) -> Fe {
        self.delta
    }

    pub fn alphas(&self) -> &[Fe] {
        self.punctured.alphas()
    }

    /// All `n` multipliers.
    pub fn vs(&self) -> Vec<Fe> {
        let mut v = self.punctured.vs().to_vec();
        v.push(self.v_last);
        v
    }

    pub fn puncture_spec(&self) -> &GrsSpec {
        &self.punctured
    }

    pub fn list_decode(&self, r: &[Fe], tau: usize) -> Result<DecodeList> {
        rl_list_decode(self, r, tau)
    }

    pub fn unique_decode(&self, r: &[Fe]) -> Result<UniqueOutcome> {
        rl_unique_decode(self, r)
    }
}

impl LinearCode for RlSpec {
    fn field(&self) -> &Field {
        self.punctured.field()
    }

    fn length(&self) -> usize {
        self.n()
    }

    fn dimension(&self) -> usize {
        self.k()
    }

    fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        rl_encode(self, message)
    }
}

pub fn rl_encode(spec: &RlSpec, message: &[Fe]) -> Result<Vec<Fe>> {
    let f = spec.field();
    let k = spec.k();
    let mut cw = spec.punctured.encode(message)?;
    let tail = f.add(message[k - 2], f.mul(spec.delta, message[k - 1]));
    cw.push(f.mul(spec.v_last, tail));
    Ok(cw)
}

pub fn puncture_spec(spec: &RlSpec) -> GrsSpec {
    spec.punctured.clone()
}

/// Drops the last coordinate.
pub fn puncture_word(w: &[Fe]) -> &[Fe] {
    &w[..w.len().saturating_sub(1)]
}

pub fn rl_list_decode(spec: &RlSpec, r: &[Fe], tau: usize) -> Result<DecodeList> {
    spec.check_received(r)?;
    let inner = gs_list_decode(&spec.punctured, puncture_word(r), tau)?;
    let mut candidates = Vec::new();
    for c in inner.candidates {
        let distance = hamming_distance(&rl_encode(spec, &c.message)?, r);
        if distance <= tau {
            candidates.push(Candidate { distance, ..c });
        }
    }
    let mut list = DecodeList {
        candidates,
        gs: inner.gs,
    };
    list.sort();
    Ok(list)
}

/// `sqrt(n - 1) - sqrt(k) > 1`, decided on integers.
pub fn rl_unique_feasible(n: usize, k: usize) -> bool {
    // Equivalent to n - 2 - k > 2 sqrt(k).
    n >= k + 3 && (n - 2 - k) * (n - 2 - k) > 4 * k
}

pub fn rl_unique_decode(spec: &RlSpec, r: &[Fe]) -> Result<UniqueOutcome> {
    let (n, k) = (spec.n(), spec.k());
    if !rl_unique_feasible(n, k) {
        return Err(Error::UniquePrecondition(format!(
            "sqrt(n - 1) - sqrt(k) = {:.3} is not above 1",
            ((n - 1) as f64).sqrt() - (k as f64).sqrt()
        )));
    }
    Ok(UniqueOutcome::from_list(rl_list_decode(spec, r, (n - k) / 2)?))
}

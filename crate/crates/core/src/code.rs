//! Behaviour shared by every code family.

use crate::algebra::{Fe, Field};
use crate::error::{Error, Result};
use crate::gscore::{DecodeList, GrsSpec};
use crate::rothlempel::RlSpec;
use crate::twisted::{TgrsSpec, UniqueOutcome};

pub fn hamming_distance(a: &[Fe], b: &[Fe]) -> usize {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).filter(|(x, y)| x != y).count()
}

pub fn hamming_weight(a: &[Fe]) -> usize {
    a.iter().filter(|x| !x.is_zero()).count()
}

/// A linear code given by an explicit encoder of `k`-symbol messages.
pub trait LinearCode {
    fn field(&self) -> &Field;
    /// Code length `n`.
    fn length(&self) -> usize;
    /// Message length `k`.
    fn dimension(&self) -> usize;
    fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>>;

    fn check_received(&self, r: &[Fe]) -> Result<()> {
        if r.len() != self.length() {
            return Err(Error::LengthMismatch {
                expected: self.length(),
                got: r.len(),
            });
        }
        if let Some(bad) = r.iter().find(|&&x| !self.field().contains(x)) {
            return Err(Error::ElementOutOfRange {
                value: bad.value() as u64,
                order: self.field().order(),
            });
        }
        Ok(())
    }
}

pub(crate) fn check_points(field: &Field, alphas: &[Fe], vs: &[Fe]) -> Result<()> {
    if let Some(bad) = alphas.iter().chain(vs).find(|&&x| !field.contains(x)) {
        return Err(Error::InvalidSpec(format!("symbol {bad} is not an element of {field}")));
    }
    let mut sorted = alphas.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSpec("evaluation points must be pairwise distinct".into()));
    }
    if vs.iter().any(|v| v.is_zero()) {
        return Err(Error::InvalidSpec("column multipliers must be nonzero".into()));
    }
    Ok(())
}

/// Any of the supported code families.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CodeSpec {
    Grs(GrsSpec),
    Tgrs(TgrsSpec),
    Rl(RlSpec),
}

impl CodeSpec {
    pub fn family(&self) -> &'static str {
        match self {
            CodeSpec::Grs(_) => "grs",
            CodeSpec::Tgrs(_) => "tgrs",
            CodeSpec::Rl(_) => "rl",
        }
    }

    pub fn list_decode(&self, r: &[Fe], tau: usize) -> Result<DecodeList> {
        match self {
            CodeSpec::Grs(c) => c.list_decode(r, tau),
            CodeSpec::Tgrs(c) => c.list_decode(r, tau),
            CodeSpec::Rl(c) => c.list_decode(r, tau),
        }
    }

    /// Decoding up to `floor((n - k) / 2)` errors.
    pub fn unique_decode(&self, r: &[Fe]) -> Result<UniqueOutcome> {
        match self {
            CodeSpec::Grs(c) => {
                let list = c.list_decode(r, (c.n() - c.k()) / 2)?;
                Ok(UniqueOutcome::from_list(list))
            }
            CodeSpec::Tgrs(c) => c.unique_decode(r),
            CodeSpec::Rl(c) => c.unique_decode(r),
        }
    }

    /// `(n, k)` of the Guruswami-Sudan call behind list decoding.
    pub fn decoder_shape(&self) -> (usize, usize) {
        match self {
            CodeSpec::Grs(c) => (c.n(), c.k()),
            CodeSpec::Tgrs(c) => (c.n(), c.pseudo_dimension()),
            CodeSpec::Rl(c) => (c.n() - 1, c.k()),
        }
    }

    /// Largest radius the list decoder accepts.
    pub fn max_tau(&self) -> Option<usize> {
        let (n, k) = self.decoder_shape();
        crate::gscore::max_feasible_tau(n, k, crate::gscore::DEFAULT_MAX_MULTIPLICITY)
    }

    fn inner(&self) -> &dyn LinearCode {
        match self {
            CodeSpec::Grs(c) => c,
            CodeSpec::Tgrs(c) => c,
            CodeSpec::Rl(c) => c,
        }
    }
}

impl LinearCode for CodeSpec {
    fn field(&self) -> &Field {
        self.inner().field()
    }

    fn length(&self) -> usize {
        self.inner().length()
    }

    fn dimension(&self) -> usize {
        self.inner().dimension()
    }

    fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        self.inner().encode(message)
    }
}

impl From<GrsSpec> for CodeSpec {
    fn from(c: GrsSpec) -> Self {
        CodeSpec::Grs(c)
    }
}

impl From<TgrsSpec> for CodeSpec {
    fn from(c: TgrsSpec) -> Self {
        CodeSpec::Tgrs(c)
    }
}

impl From<RlSpec> for CodeSpec {
    fn from(c: RlSpec) -> Self {
        CodeSpec::Rl(c)
    }
}

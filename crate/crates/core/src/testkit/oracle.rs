use serde::Serialize;

use crate::algebra::Fe;
use crate::code::{hamming_distance, hamming_weight, LinearCode};
use crate::error::{Error, Result};

/// Largest number of codewords an exhaustive oracle will touch.
pub const DEFAULT_ENUM_CAP: u64 = 1 << 20;

/// `q^k`, saturating.
pub fn message_count<C: LinearCode + ?Sized>(code: &C) -> u128 {
    (code.field().order() as u128).saturating_pow(code.dimension() as u32)
}

fn check_cap(count: u128, cap: u64) -> Result<()> {
    if count > cap as u128 {
        return Err(Error::EnumerationCap { count, cap });
    }
    Ok(())
}

/// Message number `idx` in lexicographic order (first symbol most significant).
fn message_at(idx: u64, q: u64, k: usize) -> Vec<Fe> {
    let mut m = vec![Fe::ZERO; k];
    let mut v = idx;
    for slot in m.iter_mut().rev() {
        *slot = Fe((v % q) as u32);
        v /= q;
    }
    m
}

/// Every `(message, codeword)` pair, messages in lexicographic order.
pub fn enumerate_codewords<C: LinearCode + ?Sized>(
    code: &C,
    cap: u64,
) -> Result<impl Iterator<Item = (Vec<Fe>, Vec<Fe>)> + '_> {
    let count = message_count(code);
    check_cap(count, cap)?;
    let q = code.field().order() as u64;
    let k = code.dimension();
    Ok((0..count as u64).map(move |idx| {
        let m = message_at(idx, q, k);
        let c = code.encode(&m).expect("enumerated messages have length k");
        (m, c)
    }))
}

/// All codewords held in memory for repeated nearest-list queries.
#[derive(Clone, Debug)]
pub struct Codebook {
    entries: Vec<(Vec<Fe>, Vec<Fe>)>,
}

impl Codebook {
    pub fn new<C: LinearCode + ?Sized>(code: &C, cap: u64) -> Result<Self> {
        Ok(Codebook {
            entries: enumerate_codewords(code, cap)?.collect(),
        })
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[(Vec<Fe>, Vec<Fe>)] {
        &self.entries
    }

    /// Messages whose codewords lie within distance `tau` of `r`, sorted.
    pub fn nearest_list(&self, r: &[Fe], tau: usize) -> Vec<Vec<Fe>> {
        self.entries
            .iter()
            .filter(|(_, c)| hamming_distance(c, r) <= tau)
            .map(|(m, _)| m.clone())
            .collect()
    }
}

pub fn nearest_list<C: LinearCode + ?Sized>(code: &C, r: &[Fe], tau: usize, cap: u64) -> Result<Vec<Vec<Fe>>> {
    code.check_received(r)?;
    Ok(enumerate_codewords(code, cap)?
        .filter(|(_, c)| hamming_distance(c, r) <= tau)
        .map(|(m, _)| m)
        .collect())
}

/// Minimum Hamming weight of a nonzero codeword.
///
/// Only messages whose first nonzero symbol is one are encoded: scaling by
/// a nonzero constant keeps the weight, so this covers every direction with
/// `(q^k - 1) / (q - 1)` encodings, and the cap applies to that count.
pub fn min_distance<C: LinearCode + Sync + ?Sized>(code: &C, cap: u64) -> Result<usize> {
    let q = code.field().order() as u64;
    let k = code.dimension();
    let count = (message_count(code) - 1) / (q as u128 - 1);
    check_cap(count, cap)?;
    let n = code.length();
    let mut best = n;
    for lead in 0..k {
        let tail = k - lead - 1;
        let weight_of = |idx: u64| {
            let mut m = vec![Fe::ZERO; k];
            m[lead] = Fe::ONE;
            m[lead + 1..].copy_from_slice(&message_at(idx, q, tail));
            hamming_weight(&code.encode(&m).expect("length k"))
        };
        let range = 0..q.pow(tail as u32);
        #[cfg(feature = "parallel")]
        let d = {
            use rayon::prelude::*;
            range.into_par_iter().map(weight_of).min()
        };
        #[cfg(not(feature = "parallel"))]
        let d = range.map(weight_of).min();
        best = best.min(d.unwrap_or(n));
    }
    Ok(best)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "class", rename_all = "lowercase")]
pub enum CodeClass {
    /// `d = n - k + 1`.
    Mds {
        d: usize,
    },
    /// `d = n - k`.
    Nmds {
        d: usize,
    },
    Other {
        d: usize,
    },
}

impl CodeClass {
    pub fn d(self) -> usize {
        match self {
            CodeClass::Mds { d } | CodeClass::Nmds { d } | CodeClass::Other { d } => d,
        }
    }

    pub fn is_mds(self) -> bool {
        matches!(self, CodeClass::Mds { .. })
    }
}

impl std::fmt::Display for CodeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CodeClass::Mds { d } => write!(f, "MDS (d = {d})"),
            CodeClass::Nmds { d } => write!(f, "NMDS (d = {d})"),
            CodeClass::Other { d } => write!(f, "neither MDS nor NMDS (d = {d})"),
        }
    }
}

pub fn classify<C: LinearCode + Sync + ?Sized>(code: &C, cap: u64) -> Result<CodeClass> {
    let d = min_distance(code, cap)?;
    let (n, k) = (code.length(), code.dimension());
    Ok(if d == n - k + 1 {
        CodeClass::Mds { d }
    } else if d + k == n {
        CodeClass::Nmds { d }
    } else {
        CodeClass::Other { d }
    })
}

//! AMD-assisted encoding and decoding: the message is AMD-tagged, the
//! augmented vector is sent through a TGRS or Roth-Lempel code, and the list
//! decoder's output is thinned by tag verification.

use rand::Rng;
use serde::Serialize;

use crate::algebra::Fe;
use crate::amd::{amd_encode, amd_encode_with_seed, amd_error_bound, amd_verify, AmdErrorBound, AmdParams};
use crate::code::{CodeSpec, LinearCode};
use crate::error::{Error, Result};
use crate::gscore::DecodeList;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmdCodec {
    outer: CodeSpec,
    amd: AmdParams,
}

impl AmdCodec {
    /// `outer` must be a TGRS or Roth-Lempel code of dimension `k + 2b`.
    pub fn new(outer: CodeSpec, b: usize) -> Result<Self> {
        if matches!(outer, CodeSpec::Grs(_)) {
            return Err(Error::InvalidSpec(
                "the outer code of an AMD codec must be TGRS or Roth-Lempel".into(),
            ));
        }
        let dim = outer.dimension();
        if dim <= 2 * b {
            return Err(Error::InvalidSpec(format!(
                "outer dimension {dim} leaves no room for a message with b = {b}"
            )));
        }
        let amd = AmdParams::new(outer.field().clone(), b, dim - 2 * b)?;
        Ok(AmdCodec { outer, amd })
    }

    pub fn outer(&self) -> &CodeSpec {
        &self.outer
    }

    pub fn amd(&self) -> &AmdParams {
        &self.amd
    }

    /// Message length in base symbols.
    pub fn k(&self) -> usize {
        self.amd.k()
    }

    pub fn n(&self) -> usize {
        self.outer.length()
    }

    pub fn max_tau(&self) -> Option<usize> {
        self.outer.max_tau()
    }

    /// Failure bound for decoding at radius `tau`.
    pub fn error_bound(&self, tau: usize) -> Result<AmdErrorBound> {
        let (n, k) = self.outer.decoder_shape();
        let s = crate::gscore::select_multiplicity(n, k, tau)?;
        Ok(amd_error_bound(&self.amd, n, k, s))
    }
}

pub fn amd_assisted_encode_with_seed(codec: &AmdCodec, m: &[Fe], seed: Fe) -> Result<Vec<Fe>> {
    let g = amd_encode_with_seed(m, &codec.amd, seed)?;
    codec.outer.encode(&g.to_vec())
}

pub fn amd_assisted_encode<R: Rng + ?Sized>(codec: &AmdCodec, m: &[Fe], rng: &mut R) -> Result<Vec<Fe>> {
    let g = amd_encode(m, &codec.amd, rng)?;
    codec.outer.encode(&g.to_vec())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum PipelineOutcome {
    Decoded {
        message: Vec<Fe>,
    },
    /// No list member passed verification.
    NoValidCandidate,
    /// Several list members passed; the decoder refuses to guess.
    Ambiguous {
        messages: Vec<Vec<Fe>>,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateVerdict {
    /// The augmented vector `(m || x || t)`.
    pub augmented: Vec<Fe>,
    pub distance: usize,
    pub accepted: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeReport {
    pub list: DecodeList,
    pub verdicts: Vec<CandidateVerdict>,
    pub outcome: PipelineOutcome,
}

impl DecodeReport {
    pub fn message(&self) -> Option<&[Fe]> {
        match &self.outcome {
            PipelineOutcome::Decoded { message } => Some(message),
            _ => None,
        }
    }

    /// Candidates that failed verification.
    pub fn rejected(&self) -> usize {
        self.verdicts.iter().filter(|v| !v.accepted).count()
    }
}

pub fn amd_assisted_decode(codec: &AmdCodec, r: &[Fe], tau: usize) -> Result<DecodeReport> {
    let list = codec.outer.list_decode(r, tau)?;
    let mut verdicts = Vec::with_capacity(list.len());
    let mut passed = Vec::new();
    for c in &list.candidates {
        let verdict = amd_verify(&c.message, &codec.amd)?;
        verdicts.push(CandidateVerdict {
            augmented: c.message.clone(),
            distance: c.distance,
            accepted: verdict.is_some(),
        });
        passed.extend(verdict);
    }
    let outcome = match passed.len() {
        0 => PipelineOutcome::NoValidCandidate,
        1 => PipelineOutcome::Decoded {
            message: passed.pop().unwrap(),
        },
        _ => PipelineOutcome::Ambiguous { messages: passed },
    };
    Ok(DecodeReport {
        list,
        verdicts,
        outcome,
    })
}

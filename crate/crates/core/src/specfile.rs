//! JSON descriptions of codes and AMD codecs.
//!
//! ```json
//! {"field": {"p": 23, "e": 1},
//!  "code": {"type": "tgrs", "k": 5, "n": 23, "twists": [{"t": 1, "h": 1, "eta": 1}]},
//!  "amd": {"b": 1}}
//! ```
//!
//! `alphas` defaults to the first `n` field elements (`n - 1` for Roth-Lempel)
//! and `vs` to all ones. Elements of GF(p^e) are written either as their
//! integer index or as a little-endian array of `e` base digits.

use serde::{Deserialize, Serialize};

use crate::algebra::{Fe, Field};
use crate::code::CodeSpec;
use crate::error::{Error, Result};
use crate::gscore::GrsSpec;
use crate::pipeline::AmdCodec;
use crate::rothlempel::RlSpec;
use crate::twisted::{TgrsSpec, TwistTriple};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WireElem {
    Index(u64),
    Digits(Vec<u32>),
}

impl WireElem {
    pub fn resolve(&self, f: &Field) -> Result<Fe> {
        match self {
            WireElem::Index(v) => f.element(*v),
            WireElem::Digits(d) => {
                if d.len() != f.degree() as usize {
                    return Err(Error::BadElementEncoding {
                        p: f.characteristic(),
                        e: f.degree(),
                        reason: format!("expected {} digits, got {}", f.degree(), d.len()),
                    });
                }
                f.from_digits(d)
            }
        }
    }
}

impl From<Fe> for WireElem {
    fn from(x: Fe) -> Self {
        WireElem::Index(x.value() as u64)
    }
}

fn resolve_all(v: &[WireElem], f: &Field) -> Result<Vec<Fe>> {
    v.iter().map(|x| x.resolve(f)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FieldDesc {
    pub p: u32,
    #[serde(default = "one")]
    pub e: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwistDesc {
    pub t: usize,
    pub h: usize,
    pub eta: WireElem,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum CodeDesc {
    Grs {
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alphas: Option<Vec<WireElem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vs: Option<Vec<WireElem>>,
    },
    Tgrs {
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alphas: Option<Vec<WireElem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vs: Option<Vec<WireElem>>,
        twists: Vec<TwistDesc>,
    },
    Rl {
        k: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        n: Option<usize>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        alphas: Option<Vec<WireElem>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        vs: Option<Vec<WireElem>>,
        delta: WireElem,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AmdDesc {
    pub b: usize,
}

/// `{"field", "code", "amd"?}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodeSpecFile {
    pub field: FieldDesc,
    pub code: CodeDesc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub amd: Option<AmdDesc>,
}

/// `{"field", "outer", "amd", "k"}`, where `k` is the message length.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CodecFile {
    pub field: FieldDesc,
    pub outer: CodeDesc,
    pub amd: AmdDesc,
    pub k: usize,
}

/// A parsed document: either a bare code or an AMD codec.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Loaded {
    Code(CodeSpec),
    Codec(AmdCodec),
}

impl Loaded {
    pub fn code(&self) -> &CodeSpec {
        match self {
            Loaded::Code(c) => c,
            Loaded::Codec(c) => c.outer(),
        }
    }

    pub fn field(&self) -> &Field {
        crate::code::LinearCode::field(self.code())
    }
}

fn points(
    f: &Field,
    n: Option<usize>,
    alphas: &Option<Vec<WireElem>>,
    vs: &Option<Vec<WireElem>>,
    extra: usize,
) -> Result<(Vec<Fe>, Vec<Fe>)> {
    let alphas = match (alphas, n) {
        (Some(a), _) => resolve_all(a, f)?,
        (None, Some(n)) => {
            let count = n
                .checked_sub(extra)
                .ok_or_else(|| Error::InvalidSpec(format!("length {n} is too short")))?;
            if count as u64 > f.order() as u64 {
                return Err(Error::InvalidSpec(format!("length {n} exceeds what {f} supports")));
            }
            (0..count as u64).map(|i| f.element(i)).collect::<Result<_>>()?
        }
        (None, None) => return Err(Error::InvalidSpec("either \"n\" or \"alphas\" is required".into())),
    };
    let len = alphas.len() + extra;
    if let Some(n) = n {
        if n != len {
            return Err(Error::InvalidSpec(format!(
                "\"n\" = {n} disagrees with {} evaluation points",
                alphas.len()
            )));
        }
    }
    let vs = match vs {
        Some(v) => resolve_all(v, f)?,
        None => vec![Fe::ONE; len],
    };
    Ok((alphas, vs))
}

impl CodeDesc {
    pub fn build(&self, f: &Field) -> Result<CodeSpec> {
        Ok(match self {
            CodeDesc::Grs { k, n, alphas, vs } => {
                let (a, v) = points(f, *n, alphas, vs, 0)?;
                GrsSpec::new(f.clone(), a, v, *k)?.into()
            }
            CodeDesc::Tgrs {
                k,
                n,
                alphas,
                vs,
                twists,
            } => {
                let (a, v) = points(f, *n, alphas, vs, 0)?;
                let tw = twists
                    .iter()
                    .map(|t| Ok(TwistTriple::new(t.t, t.h, t.eta.resolve(f)?)))
                    .collect::<Result<Vec<_>>>()?;
                TgrsSpec::new(f.clone(), a, v, *k, tw)?.into()
            }
            CodeDesc::Rl {
                k,
                n,
                alphas,
                vs,
                delta,
            } => {
                let (a, v) = points(f, *n, alphas, vs, 1)?;
                RlSpec::new(f.clone(), a, v, *k, delta.resolve(f)?)?.into()
            }
        })
    }

    /// Describes an existing code with explicit points.
    pub fn describe(code: &CodeSpec) -> CodeDesc {
        let wire = |v: &[Fe]| Some(v.iter().map(|&x| x.into()).collect::<Vec<WireElem>>());
        match code {
            CodeSpec::Grs(c) => CodeDesc::Grs {
                k: c.k(),
                n: None,
                alphas: wire(c.alphas()),
                vs: wire(c.vs()),
            },
            CodeSpec::Tgrs(c) => CodeDesc::Tgrs {
                k: c.k(),
                n: None,
                alphas: wire(c.base().alphas()),
                vs: wire(c.base().vs()),
                twists: c
                    .twists()
                    .iter()
                    .map(|t| TwistDesc {
                        t: t.t,
                        h: t.h,
                        eta: t.eta.into(),
                    })
                    .collect(),
            },
            CodeSpec::Rl(c) => CodeDesc::Rl {
                k: c.k(),
                n: None,
                alphas: wire(c.alphas()),
                vs: wire(&c.vs()),
                delta: c.delta().into(),
            },
        }
    }
}

impl FieldDesc {
    pub fn build(&self) -> Result<Field> {
        Field::new(self.p, self.e)
    }
}

impl CodeSpecFile {
    pub fn build(&self) -> Result<Loaded> {
        let f = self.field.build()?;
        let code = self.code.build(&f)?;
        Ok(match self.amd {
            Some(AmdDesc { b }) => Loaded::Codec(AmdCodec::new(code, b)?),
            None => Loaded::Code(code),
        })
    }
}

impl CodecFile {
    pub fn build(&self) -> Result<AmdCodec> {
        let f = self.field.build()?;
        let codec = AmdCodec::new(self.outer.build(&f)?, self.amd.b)?;
        if codec.k() != self.k {
            return Err(Error::InvalidSpec(format!(
                "message length {} does not match outer dimension minus 2b = {}",
                self.k,
                codec.k()
            )));
        }
        Ok(codec)
    }
}

/// Parses either document shape, told apart by the `outer` key.
pub fn parse_spec(json: &str) -> Result<Loaded> {
    let value: serde_json::Value = serde_json::from_str(json).map_err(|e| Error::Parse(e.to_string()))?;
    if value.get("outer").is_some() {
        let doc: CodecFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        Ok(Loaded::Codec(doc.build()?))
    } else {
        let doc: CodeSpecFile = serde_json::from_value(value).map_err(|e| Error::Parse(e.to_string()))?;
        doc.build()
    }
}

/// Parses comma- or whitespace-separated decimal symbols.
pub fn parse_symbols(text: &str, f: &Field) -> Result<Vec<Fe>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| {
            let v: u64 = s
                .parse()
                .map_err(|_| Error::Parse(format!("{s:?} is not a decimal symbol")))?;
            f.element(v)
        })
        .collect()
}

pub fn format_symbols(v: &[Fe]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

//! The two worked examples over GF(23), and a printable walk-through of each.

use std::fmt::Write as _;

use crate::algebra::{Fe, Field};
use crate::amd::{amd_encode_with_seed, amd_verify};
use crate::code::{hamming_distance, hamming_weight, LinearCode};
use crate::error::Result;
use crate::gscore::GrsSpec;
use crate::pipeline::{amd_assisted_decode, AmdCodec, PipelineOutcome};
use crate::rothlempel::RlSpec;
use crate::specfile::format_symbols;
use crate::twisted::{TgrsSpec, TwistTriple};

pub const EXAMPLE1_MESSAGE: [u32; 3] = [4, 2, 10];
pub const EXAMPLE1_SEED: u32 = 11;
pub const EXAMPLE1_CODEWORD: [u32; 23] = [
    4, 14, 6, 13, 4, 9, 14, 17, 15, 14, 16, 6, 8, 3, 8, 17, 11, 14, 11, 4, 22, 16, 7,
];
pub const EXAMPLE1_ERROR: [u32; 23] = [0, 0, 7, 0, 1, 0, 0, 0, 8, 8, 5, 0, 0, 0, 0, 8, 0, 9, 17, 4, 11, 11, 0];
pub const EXAMPLE1_TAU: usize = 11;
pub const EXAMPLE1_CANDIDATES: [[u32; 5]; 2] = [[22, 1, 9, 15, 12], [4, 2, 10, 11, 8]];

pub const EXAMPLE2_MESSAGE: [u32; 4] = [18, 13, 14, 21];
pub const EXAMPLE2_SEED: u32 = 22;
/// The codeword as printed alongside the example. It is not the encoding of
/// the augmented message below; see [`transcript`].
pub const EXAMPLE2_PRINTED_CODEWORD: [u32; 24] = [
    19, 7, 13, 13, 2, 8, 14, 18, 1, 10, 11, 18, 15, 16, 10, 21, 7, 12, 19, 10, 3, 20, 9, 16,
];
pub const EXAMPLE2_ERROR: [u32; 24] = [
    0, 0, 8, 0, 6, 0, 6, 10, 3, 0, 22, 19, 0, 0, 0, 0, 0, 20, 0, 0, 8, 22, 8, 0,
];
pub const EXAMPLE2_TAU: usize = 11;
pub const EXAMPLE2_CANDIDATES: [[u32; 6]; 2] = [[22, 9, 7, 12, 0, 6], [18, 13, 14, 21, 22, 3]];

pub fn gf23() -> Field {
    Field::prime(23).expect("23 is prime")
}

pub fn elems(v: &[u32]) -> Vec<Fe> {
    v.iter().map(|&x| Fe(x)).collect()
}

/// TGRS over GF(23), points 0..22, unit multipliers, dimension 5, twist (1, 1, 1), b = 1.
pub fn example1_codec() -> AmdCodec {
    let base = GrsSpec::standard(gf23(), 23, 5).expect("valid");
    let tgrs = TgrsSpec::from_grs(base, vec![TwistTriple::new(1, 1, Fe::ONE)]).expect("valid");
    AmdCodec::new(tgrs.into(), 1).expect("valid")
}

/// Roth-Lempel over GF(23), points 0..22, unit multipliers, dimension 6, delta 4, b = 1.
pub fn example2_codec() -> AmdCodec {
    let f = gf23();
    let rl = RlSpec::standard(f.clone(), 24, 6, f.from_int(4)).expect("valid");
    AmdCodec::new(rl.into(), 1).expect("valid")
}

pub fn example1_received() -> Vec<Fe> {
    let f = gf23();
    EXAMPLE1_CODEWORD
        .iter()
        .zip(EXAMPLE1_ERROR)
        .map(|(&c, e)| f.add(Fe(c), Fe(e)))
        .collect()
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "accept"
    } else {
        "reject"
    }
}

/// Runs example `which` (1 or 2) end to end and describes every stage.
pub fn transcript(which: u8) -> Result<String> {
    match which {
        1 => transcript1(),
        2 => transcript2(),
        _ => Err(crate::Error::InvalidSpec(format!(
            "there is no example {which}; choose 1 or 2"
        ))),
    }
}

fn run(out: &mut String, codec: &AmdCodec, m: &[Fe], seed: Fe, e: &[Fe], tau: usize) -> Result<PipelineOutcome> {
    let f = codec.outer().field().clone();
    let g = amd_encode_with_seed(m, codec.amd(), seed)?;
    writeln!(out, "augmented: {}", format_symbols(&g.to_vec())).unwrap();
    let cw = codec.outer().encode(&g.to_vec())?;
    writeln!(out, "codeword:  {}", format_symbols(&cw)).unwrap();
    writeln!(out, "error:     {} (weight {})", format_symbols(e), hamming_weight(e)).unwrap();
    let r: Vec<Fe> = cw.iter().zip(e).map(|(&a, &b)| f.add(a, b)).collect();
    writeln!(out, "received:  {}", format_symbols(&r)).unwrap();
    let report = amd_assisted_decode(codec, &r, tau)?;
    writeln!(
        out,
        "list decoding at tau = {tau} (s = {}): {} candidate(s)",
        report.list.multiplicity(),
        report.list.len()
    )
    .unwrap();
    for v in &report.verdicts {
        writeln!(
            out,
            "  {}  distance {}  AMD {}",
            format_symbols(&v.augmented),
            v.distance,
            verdict(v.accepted)
        )
        .unwrap();
    }
    Ok(report.outcome)
}

fn finish(out: &mut String, outcome: &PipelineOutcome) {
    match outcome {
        PipelineOutcome::Decoded { message } => writeln!(out, "recovered: {}", format_symbols(message)),
        PipelineOutcome::NoValidCandidate => writeln!(out, "recovered: FAIL (no candidate passed)"),
        PipelineOutcome::Ambiguous { .. } => writeln!(out, "recovered: FAIL (several candidates passed)"),
    }
    .unwrap();
}

fn transcript1() -> Result<String> {
    let codec = example1_codec();
    let mut out = String::new();
    writeln!(
        out,
        "Example 1: TGRS over GF(23), n = 23, dimension 5, twist (t, h, eta) = (1, 1, 1), b = 1"
    )
    .unwrap();
    writeln!(
        out,
        "message:   {}  seed: {EXAMPLE1_SEED}",
        format_symbols(&elems(&EXAMPLE1_MESSAGE))
    )
    .unwrap();
    let outcome = run(
        &mut out,
        &codec,
        &elems(&EXAMPLE1_MESSAGE),
        Fe(EXAMPLE1_SEED),
        &elems(&EXAMPLE1_ERROR),
        EXAMPLE1_TAU,
    )?;
    finish(&mut out, &outcome);
    Ok(out)
}

fn transcript2() -> Result<String> {
    let codec = example2_codec();
    let f = gf23();
    let m = elems(&EXAMPLE2_MESSAGE);
    let mut out = String::new();
    writeln!(
        out,
        "Example 2: Roth-Lempel over GF(23), n = 24, dimension 6, delta = 4, b = 1"
    )
    .unwrap();
    writeln!(out, "message:   {}  seed: {EXAMPLE2_SEED}", format_symbols(&m)).unwrap();
    writeln!(out, "AMD checks on the two published candidates:").unwrap();
    for c in EXAMPLE2_CANDIDATES {
        let ok = amd_verify(&elems(&c), codec.amd())?.is_some();
        writeln!(out, "  {}  AMD {}", format_symbols(&elems(&c)), verdict(ok)).unwrap();
    }

    let g = amd_encode_with_seed(&m, codec.amd(), Fe(EXAMPLE2_SEED))?.to_vec();
    let ours = codec.outer().encode(&g)?;
    let printed = elems(&EXAMPLE2_PRINTED_CODEWORD);
    let printed_r: Vec<Fe> = printed
        .iter()
        .zip(elems(&EXAMPLE2_ERROR))
        .map(|(&a, b)| f.add(a, b))
        .collect();
    writeln!(
        out,
        "note: the published codeword is not the encoding of the augmented message."
    )
    .unwrap();
    writeln!(out, "  published codeword:        {}", format_symbols(&printed)).unwrap();
    writeln!(out, "  encoding of {}: {}", format_symbols(&g), format_symbols(&ours)).unwrap();
    writeln!(out, "  they differ in {} positions", hamming_distance(&ours, &printed)).unwrap();
    let pre = codec.outer().encode(&elems(&[19, 7, 21, 3, 14, 12]))?;
    if pre == printed {
        writeln!(out, "  the published codeword equals the encoding of 19,7,21,3,14,12").unwrap();
    }
    for c in EXAMPLE2_CANDIDATES {
        let d = hamming_distance(&codec.outer().encode(&elems(&c))?, &printed_r);
        writeln!(
            out,
            "  published received word is at distance {d} from the encoding of {}",
            format_symbols(&elems(&c))
        )
        .unwrap();
    }
    writeln!(
        out,
        "the run below uses the encoding computed here and the published error vector"
    )
    .unwrap();
    let outcome = run(
        &mut out,
        &codec,
        &m,
        Fe(EXAMPLE2_SEED),
        &elems(&EXAMPLE2_ERROR),
        EXAMPLE2_TAU,
    )?;
    finish(&mut out, &outcome);
    Ok(out)
}

/// List decoding of (computed codeword + published error) for example 2.
pub fn example2_list() -> Result<Vec<Vec<Fe>>> {
    let codec = example2_codec();
    let f = gf23();
    let g = amd_encode_with_seed(&elems(&EXAMPLE2_MESSAGE), codec.amd(), Fe(EXAMPLE2_SEED))?.to_vec();
    let cw = codec.outer().encode(&g)?;
    let r: Vec<Fe> = cw
        .iter()
        .zip(elems(&EXAMPLE2_ERROR))
        .map(|(&a, b)| f.add(a, b))
        .collect();
    Ok(codec
        .outer()
        .list_decode(&r, EXAMPLE2_TAU)?
        .candidates
        .into_iter()
        .map(|c| c.message)
        .collect())
}

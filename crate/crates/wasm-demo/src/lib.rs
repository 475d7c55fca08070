//! Browser bindings: the first worked example with an editable error vector,
//! a radius explorer, and an AMD tamper counter.
//!
//! Every function returns plain text for the page to show; errors become
//! JavaScript exceptions carrying the message.

use std::fmt::Write as _;

use gsdecode::algebra::{Fe, Field};
use gsdecode::amd::{amd_encode_with_seed, amd_verify, AmdParams};
use gsdecode::code::{hamming_weight, LinearCode};
use gsdecode::fixtures;
use gsdecode::gscore::{max_feasible_tau, try_multiplicity, GrsSpec, GsParams};
use gsdecode::pipeline::{amd_assisted_decode, amd_assisted_encode_with_seed, PipelineOutcome};
use gsdecode::specfile::{format_symbols, parse_symbols};
use gsdecode::testkit::random_error;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use wasm_bindgen::prelude::*;

const S_MAX: usize = 64;

fn js(e: gsdecode::Error) -> JsError {
    JsError::new(&e.to_string())
}

fn add(f: &Field, a: &[Fe], b: &[Fe]) -> Vec<Fe> {
    a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect()
}

/// The fixed first example's error vector, as the page's starting value.
#[wasm_bindgen]
pub fn example_error() -> String {
    format_symbols(&fixtures::elems(&fixtures::EXAMPLE1_ERROR))
}

/// Encodes the first example's message, adds `error` (23 symbols of GF(23)),
/// decodes at radius `tau` and reports every candidate and the AMD verdicts.
#[wasm_bindgen]
pub fn run_example(error: &str, tau: usize) -> Result<String, JsError> {
    let codec = fixtures::example1_codec();
    let f = fixtures::gf23();
    let e = parse_symbols(error, &f).map_err(js)?;
    let m = fixtures::elems(&fixtures::EXAMPLE1_MESSAGE);
    let cw = amd_assisted_encode_with_seed(&codec, &m, f.element(fixtures::EXAMPLE1_SEED as u64).map_err(js)?)
        .map_err(js)?;
    if e.len() != cw.len() {
        return Err(JsError::new(&format!(
            "the error vector needs {} symbols, got {}",
            cw.len(),
            e.len()
        )));
    }
    let r = add(&f, &cw, &e);
    let report = amd_assisted_decode(&codec, &r, tau).map_err(js)?;
    let mut out = String::new();
    writeln!(out, "codeword: {}", format_symbols(&cw)).unwrap();
    writeln!(
        out,
        "received: {}  (error weight {})",
        format_symbols(&r),
        hamming_weight(&e)
    )
    .unwrap();
    writeln!(
        out,
        "radius {tau}, multiplicity {}, {} candidate(s)",
        report.list.multiplicity(),
        report.list.len()
    )
    .unwrap();
    for v in &report.verdicts {
        let verdict = if v.accepted { "accept" } else { "reject" };
        writeln!(
            out,
            "  {}  distance {}  AMD {verdict}",
            format_symbols(&v.augmented),
            v.distance
        )
        .unwrap();
    }
    match report.outcome {
        PipelineOutcome::Decoded { message } => writeln!(out, "recovered: {}", format_symbols(&message)),
        PipelineOutcome::NoValidCandidate => writeln!(out, "no candidate passed the AMD check"),
        PipelineOutcome::Ambiguous { messages } => writeln!(out, "{} candidates passed the AMD check", messages.len()),
    }
    .unwrap();
    Ok(out)
}

/// For GRS over GF(q) with points 0..n-1: the multiplicity and interpolation
/// size at every feasible radius, then one decode of a random codeword hit
/// by exactly `tau` errors.
#[wasm_bindgen]
pub fn explore(q: u32, n: usize, k: usize, tau: usize, seed: u64) -> Result<String, JsError> {
    let f = Field::prime(q).map_err(js)?;
    let code = GrsSpec::standard(f.clone(), n, k).map_err(js)?;
    let max = max_feasible_tau(n, k, S_MAX);
    let mut out = String::new();
    writeln!(out, "GRS over GF({q}), n = {n}, k = {k}; unique radius {}", (n - k) / 2).unwrap();
    writeln!(out, "tau   s   unknowns   constraints   s*sqrt(n/k)").unwrap();
    for t in 0..=max.unwrap_or(0) {
        if let Some(s) = try_multiplicity(n, k, t, S_MAX) {
            let p = GsParams::with_multiplicity(n, k, t, s);
            writeln!(
                out,
                "{t:>3} {s:>3} {:>10} {:>13} {:>13.2}",
                p.monomials.len(),
                p.constraint_count(),
                p.list_bound()
            )
            .unwrap();
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let m: Vec<Fe> = (0..k)
        .map(|_| f.element(rng.gen_range(0..q as u64)).expect("in range"))
        .collect();
    let e = random_error(&f, n, tau.min(n), &mut rng).map_err(js)?;
    let r = add(&f, &code.encode(&m).map_err(js)?, &e);
    let list = code.list_decode(&r, tau).map_err(js)?;
    writeln!(out, "\nsent {}  with {} errors", format_symbols(&m), hamming_weight(&e)).unwrap();
    writeln!(out, "list at radius {tau}:").unwrap();
    for c in &list.candidates {
        let mark = if c.message == m { "  (sent)" } else { "" };
        writeln!(out, "  {}  distance {}{mark}", format_symbols(&c.message), c.distance).unwrap();
    }
    if list.is_empty() {
        writeln!(out, "  (empty)").unwrap();
    }
    Ok(out)
}

/// Adds `offset` to the tagged form of `message` for every seed in GF(p^b)
/// and counts how many tampered words still verify.
#[wasm_bindgen]
pub fn amd_tamper(p: u32, b: usize, message: &str, offset: &str) -> Result<String, JsError> {
    let f = Field::prime(p).map_err(js)?;
    let m = parse_symbols(message, &f).map_err(js)?;
    let params = AmdParams::new(f.clone(), b, m.len()).map_err(js)?;
    let delta = parse_symbols(offset, &f).map_err(js)?;
    if delta.len() != params.augmented_len() {
        return Err(JsError::new(&format!(
            "the offset needs {} symbols (message, seed, tag), got {}",
            params.augmented_len(),
            delta.len()
        )));
    }
    let mut accepted = 0usize;
    for seed in params.ext().elements() {
        let g = amd_encode_with_seed(&m, &params, seed).map_err(js)?.to_vec();
        if amd_verify(&add(&f, &g, &delta), &params).map_err(js)?.is_some() {
            accepted += 1;
        }
    }
    let seeds = params.ext().order();
    let mut out = String::new();
    writeln!(out, "{accepted} of {seeds} seeds let the tampered word through").unwrap();
    writeln!(
        out,
        "rate {:.4}, guarantee (r+1)/q^b = {}/{seeds} = {:.4}",
        accepted as f64 / seeds as f64,
        params.r() + 1,
        params.soundness()
    )
    .unwrap();
    if hamming_weight(&delta) == 0 {
        writeln!(out, "(a zero offset is no tampering; every seed verifies)").unwrap();
    }
    Ok(out)
}

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::Fe;
use crate::amd::amd_encode;
use crate::amd::amd_verify;
use crate::code::{CodeSpec, LinearCode};
use crate::error::{Error, Result};
use crate::pipeline::AmdCodec;
use crate::specfile::Loaded;
use crate::twisted::UniqueOutcome;

use super::random_error;

pub const CSV_HEADER: &str = "weight,trials,successes,failures,ambiguous,mean_list,max_list,amd_false_accepts,seconds";

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialTarget {
    /// Bare code: unique decoding, or list decoding when a radius is given.
    Code(CodeSpec),
    /// AMD-assisted decoding.
    Codec(AmdCodec),
}

impl From<Loaded> for TrialTarget {
    fn from(l: Loaded) -> Self {
        match l {
            Loaded::Code(c) => TrialTarget::Code(c),
            Loaded::Codec(c) => TrialTarget::Codec(c),
        }
    }
}

impl TrialTarget {
    fn code(&self) -> &CodeSpec {
        match self {
            TrialTarget::Code(c) => c,
            TrialTarget::Codec(c) => c.outer(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialConfig {
    pub target: TrialTarget,
    pub weights: Vec<usize>,
    /// Trials per weight.
    pub trials: usize,
    /// Trial `i` (counted across all weights) draws from `ChaCha8(seed ^ i)`.
    pub seed: u64,
    /// Decoding radius. For AMD codecs it defaults to the largest feasible one.
    pub tau: Option<usize>,
    /// Record wall-clock time; off by default so output is reproducible.
    pub timing: bool,
}

/// On-disk form of [`TrialConfig`]; `spec` is an inline spec document or a
/// path to one, resolved by the caller.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TrialConfigFile {
    pub spec: serde_json::Value,
    pub weights: Vec<usize>,
    pub trials: usize,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tau: Option<usize>,
    #[serde(default)]
    pub timing: bool,
}

/// Counts for one error weight. `successes + failures + ambiguous = trials`;
/// decoder errors count as failures and are also tallied in `errors`.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct WeightStats {
    pub weight: usize,
    pub trials: usize,
    pub successes: usize,
    pub failures: usize,
    pub ambiguous: usize,
    pub errors: usize,
    pub list_total: usize,
    pub max_list: usize,
    /// Trials in which a vector other than the transmitted one passed AMD verification.
    pub amd_false_accepts: usize,
    pub seconds: f64,
}

impl WeightStats {
    pub fn mean_list(&self) -> f64 {
        if self.trials == 0 {
            0.0
        } else {
            self.list_total as f64 / self.trials as f64
        }
    }

    fn absorb(&mut self, o: &Outcome) {
        self.trials += 1;
        match o.verdict {
            Verdict::Success => self.successes += 1,
            Verdict::Failure => self.failures += 1,
            Verdict::Ambiguous => self.ambiguous += 1,
            Verdict::Error => {
                self.failures += 1;
                self.errors += 1;
            }
        }
        self.list_total += o.list;
        self.max_list = self.max_list.max(o.list);
        self.amd_false_accepts += o.false_accept as usize;
    }
}

#[derive(Serialize)]
struct CsvRow {
    weight: usize,
    trials: usize,
    successes: usize,
    failures: usize,
    ambiguous: usize,
    mean_list: f64,
    max_list: usize,
    amd_false_accepts: usize,
    seconds: f64,
}

#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct TrialStats {
    pub rows: Vec<WeightStats>,
}

impl TrialStats {
    pub fn write_csv<W: std::io::Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for r in &self.rows {
            w.serialize(CsvRow {
                weight: r.weight,
                trials: r.trials,
                successes: r.successes,
                failures: r.failures,
                ambiguous: r.ambiguous,
                mean_list: r.mean_list(),
                max_list: r.max_list,
                amd_false_accepts: r.amd_false_accepts,
                seconds: r.seconds,
            })
            .map_err(|e| Error::Parse(e.to_string()))?;
        }
        w.flush().map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to memory");
        String::from_utf8(buf).expect("csv is utf-8")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Success,
    Failure,
    Ambiguous,
    Error,
}

struct Outcome {
    verdict: Verdict,
    list: usize,
    false_accept: bool,
}

impl Outcome {
    fn error() -> Self {
        Outcome {
            verdict: Verdict::Error,
            list: 0,
            false_accept: false,
        }
    }
}

fn random_message<R: Rng>(q: u32, k: usize, rng: &mut R) -> Vec<Fe> {
    (0..k).map(|_| Fe(rng.gen_range(0..q))).collect()
}

fn add(code: &CodeSpec, c: &[Fe], e: &[Fe]) -> Vec<Fe> {
    let f = code.field();
    c.iter().zip(e).map(|(&a, &b)| f.add(a, b)).collect()
}

fn one_trial(cfg: &TrialConfig, weight: usize, index: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed ^ index);
    let code = cfg.target.code();
    let f = code.field();
    let Ok(e) = random_error(f, code.length(), weight, &mut rng) else {
        return Outcome::error();
    };
    match &cfg.target {
        TrialTarget::Code(code) => {
            let m = random_message(f.order(), code.dimension(), &mut rng);
            let Ok(c) = code.encode(&m) else {
                return Outcome::error();
            };
            let r = add(code, &c, &e);
            match cfg.tau {
                Some(tau) => match code.list_decode(&r, tau) {
                    Ok(list) => {
                        let verdict = match list.len() {
                            0 => Verdict::Failure,
                            1 if list.candidates[0].message == m => Verdict::Success,
                            1 => Verdict::Failure,
                            _ => Verdict::Ambiguous,
                        };
                        Outcome {
                            verdict,
                            list: list.len(),
                            false_accept: false,
                        }
                    }
                    Err(_) => Outcome::error(),
                },
                None => match code.unique_decode(&r) {
                    Ok(UniqueOutcome::Decoded(got)) => Outcome {
                        verdict: if got == m { Verdict::Success } else { Verdict::Failure },
                        list: 1,
                        false_accept: false,
                    },
                    Ok(UniqueOutcome::Failure) => Outcome {
                        verdict: Verdict::Failure,
                        list: 0,
                        false_accept: false,
                    },
                    Ok(UniqueOutcome::NotMdsEvidence(c)) => Outcome {
                        verdict: Verdict::Ambiguous,
                        list: c.len(),
                        false_accept: false,
                    },
                    Err(_) => Outcome::error(),
                },
            }
        }
        TrialTarget::Codec(codec) => {
            let Some(tau) = cfg.tau.or_else(|| codec.max_tau()) else {
                return Outcome::error();
            };
            let m = random_message(f.order(), codec.k(), &mut rng);
            let Ok(g) = amd_encode(&m, codec.amd(), &mut rng) else {
                return Outcome::error();
            };
            let sent = g.to_vec();
            let Ok(c) = codec.outer().encode(&sent) else {
                return Outcome::error();
            };
            let r = add(code, &c, &e);
            let Ok(list) = codec.outer().list_decode(&r, tau) else {
                return Outcome::error();
            };
            let mut passed = Vec::new();
            let mut false_accept = false;
            for cand in &list.candidates {
                if let Ok(Some(msg)) = amd_verify(&cand.message, codec.amd()) {
                    false_accept |= cand.message != sent;
                    passed.push(msg);
                }
            }
            let verdict = match passed.as_slice() {
                [only] if *only == m => Verdict::Success,
                [_] | [] => Verdict::Failure,
                _ => Verdict::Ambiguous,
            };
            Outcome {
                verdict,
                list: list.len(),
                false_accept,
            }
        }
    }
}

fn run_weight(cfg: &TrialConfig, weight: usize, first_index: u64) -> WeightStats {
    let indices = first_index..first_index + cfg.trials as u64;
    #[cfg(feature = "parallel")]
    let outcomes: Vec<Outcome> = {
        use rayon::prelude::*;
        indices.into_par_iter().map(|i| one_trial(cfg, weight, i)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let outcomes: Vec<Outcome> = indices.map(|i| one_trial(cfg, weight, i)).collect();
    let mut stats = WeightStats {
        weight,
        ..WeightStats::default()
    };
    for o in &outcomes {
        stats.absorb(o);
    }
    stats
}

/// Runs `trials` encode/corrupt/decode rounds for every weight.
pub fn run_trials(cfg: &TrialConfig) -> Result<TrialStats> {
    if cfg.weights.is_empty() {
        return Err(Error::InvalidSpec("the weights list is empty".into()));
    }
    if cfg.trials == 0 {
        return Err(Error::InvalidSpec("the trial count must be positive".into()));
    }
    let n = cfg.target.code().length();
    if let Some(&w) = cfg.weights.iter().find(|&&w| w > n) {
        return Err(Error::InvalidSpec(format!("error weight {w} exceeds length {n}")));
    }
    let mut stats = TrialStats::default();
    for (j, &w) in cfg.weights.iter().enumerate() {
        let start = cfg.timing.then(std::time::Instant::now);
        let mut row = run_weight(cfg, w, (j * cfg.trials) as u64);
        if let Some(t0) = start {
            row.seconds = t0.elapsed().as_secs_f64();
        }
        stats.rows.push(row);
    }
    Ok(stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Field;
    use crate::gscore::GrsSpec;
    use crate::twisted::{TgrsSpec, TwistTriple};

    fn tgrs13() -> CodeSpec {
        let f = Field::prime(13).unwrap();
        let base = GrsSpec::standard(f, 13, 3).unwrap();
        TgrsSpec::from_grs(base, vec![TwistTriple::new(1, 0, Fe::ONE)])
            .unwrap()
            .into()
    }

    #[test]
    fn reproducible_and_consistent() {
        let cfg = TrialConfig {
            target: TrialTarget::Code(tgrs13()),
            weights: vec![0, 3, 5],
            trials: 40,
            seed: 7,
            tau: None,
            timing: false,
        };
        let a = run_trials(&cfg).unwrap();
        let b = run_trials(&cfg).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.to_csv(), b.to_csv());
        assert!(a.to_csv().starts_with(CSV_HEADER));
        for r in &a.rows {
            assert_eq!(r.successes + r.failures + r.ambiguous, r.trials);
        }
        assert_eq!(a.rows[0].successes, 40);
    }

    #[test]
    fn infeasible_radius_is_counted() {
        let cfg = TrialConfig {
            target: TrialTarget::Code(tgrs13()),
            weights: vec![2],
            trials: 5,
            seed: 1,
            tau: Some(12),
            timing: false,
        };
        let s = run_trials(&cfg).unwrap();
        assert_eq!(s.rows[0].errors, 5);
        assert_eq!(s.rows[0].failures, 5);
    }

    #[test]
    fn rejects_bad_configs() {
        let mut cfg = TrialConfig {
            target: TrialTarget::Code(tgrs13()),
            weights: vec![],
            trials: 5,
            seed: 1,
            tau: None,
            timing: false,
        };
        assert!(run_trials(&cfg).is_err());
        cfg.weights = vec![14];
        assert!(run_trials(&cfg).is_err());
    }

    #[test]
    fn codec_trials() {
        let codec = AmdCodec::new(tgrs13(), 1).unwrap();
        let cfg = TrialConfig {
            target: TrialTarget::Codec(codec),
            weights: vec![0, 4],
            trials: 30,
            seed: 3,
            tau: None,
            timing: false,
        };
        let s = run_trials(&cfg).unwrap();
        assert_eq!(s.rows[0].successes, 30);
        assert_eq!(s.rows[0].amd_false_accepts, 0);
    }
}

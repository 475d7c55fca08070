//! Systematic algebraic manipulation detection over GF(q^b).
//!
//! A message of `k` base symbols is cut into `r` blocks of `b` symbols, each
//! block read as an element `m'_i` of GF(q^b). With a uniform seed `x'` the
//! tag is `x'^(r+2) + sum_i m'_(i-1) x'^i`; an adversary who adds a fixed
//! offset to `(m, x, t)` is caught unless `x'` hits one of at most `r + 1`
//! roots of a nonzero polynomial.

use rand::Rng;
use serde::Serialize;

use crate::algebra::{pack, unpack, Fe, Field};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AmdParams {
    base: Field,
    ext: Field,
    b: usize,
    k: usize,
    r: usize,
}

impl AmdParams {
    pub fn new(base: Field, b: usize, k: usize) -> Result<Self> {
        if b == 0 {
            return Err(Error::InvalidSpec("AMD block size b must be at least 1".into()));
        }
        if k == 0 {
            return Err(Error::InvalidSpec("AMD message length must be at least 1".into()));
        }
        if !base.is_prime_field() {
            return Err(Error::Unsupported(format!("AMD over the non-prime base field {base}")));
        }
        let ext = Field::new(base.characteristic(), b as u32)?;
        let r0 = k.div_ceil(b);
        let p = base.characteristic() as usize;
        let r = if (r0 + 2).is_multiple_of(p) { r0 + 1 } else { r0 };
        Ok(AmdParams { base, ext, b, k, r })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    /// GF(q^b).
    pub fn ext(&self) -> &Field {
        &self.ext
    }

    pub fn b(&self) -> usize {
        self.b
    }

    /// Message length in base symbols.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of message blocks after the divisibility fix.
    pub fn r(&self) -> usize {
        self.r
    }

    /// `k + 2b`.
    pub fn augmented_len(&self) -> usize {
        self.k + 2 * self.b
    }

    /// `(r + 1) / q^b`: the chance that a fixed manipulation survives.
    pub fn soundness(&self) -> f64 {
        (self.r + 1) as f64 / self.ext.order() as f64
    }

    fn blocks(&self, m: &[Fe]) -> Result<Vec<Fe>> {
        let mut padded = m.to_vec();
        padded.resize(self.r * self.b, Fe::ZERO);
        padded
            .chunks(self.b)
            .map(|block| pack(&self.base, &self.ext, block))
            .collect()
    }
}

/// `(m || x || t)` in base-field symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AmdAugmented {
    pub m: Vec<Fe>,
    pub x: Vec<Fe>,
    pub t: Vec<Fe>,
}

impl AmdAugmented {
    pub fn to_vec(&self) -> Vec<Fe> {
        [self.m.as_slice(), &self.x, &self.t].concat()
    }

    /// Splits a flat vector using the lengths in `params`.
    pub fn split(v: &[Fe], params: &AmdParams) -> Result<Self> {
        if v.len() != params.augmented_len() {
            return Err(Error::LengthMismatch {
                expected: params.augmented_len(),
                got: v.len(),
            });
        }
        let (k, b) = (params.k, params.b);
        Ok(AmdAugmented {
            m: v[..k].to_vec(),
            x: v[k..k + b].to_vec(),
            t: v[k + b..].to_vec(),
        })
    }
}

pub fn amd_tag(m: &[Fe], params: &AmdParams, seed: Fe) -> Result<Fe> {
    if m.len() != params.k {
        return Err(Error::LengthMismatch {
            expected: params.k,
            got: m.len(),
        });
    }
    let ext = &params.ext;
    if !ext.contains(seed) {
        return Err(Error::ElementOutOfRange {
            value: seed.value() as u64,
            order: ext.order(),
        });
    }
    let mut acc = Fe::ZERO;
    let mut power = seed;
    for block in params.blocks(m)? {
        acc = ext.add(acc, ext.mul(block, power));
        power = ext.mul(power, seed);
    }
    // `power` is now seed^(r+1).
    Ok(ext.add(acc, ext.mul(power, seed)))
}

/// Encodes with a caller-chosen seed; used to replay fixed examples.
pub fn amd_encode_with_seed(m: &[Fe], params: &AmdParams, seed: Fe) -> Result<AmdAugmented> {
    let t = amd_tag(m, params, seed)?;
    Ok(AmdAugmented {
        m: m.to_vec(),
        x: unpack(&params.base, &params.ext, seed)?,
        t: unpack(&params.base, &params.ext, t)?,
    })
}

/// Encodes with a seed drawn uniformly from GF(q^b).
pub fn amd_encode<R: Rng + ?Sized>(m: &[Fe], params: &AmdParams, rng: &mut R) -> Result<AmdAugmented> {
    let seed = Fe(rng.gen_range(0..params.ext.order()));
    amd_encode_with_seed(m, params, seed)
}

/// Returns the message if the tag matches.
pub fn amd_verify(candidate: &[Fe], params: &AmdParams) -> Result<Option<Vec<Fe>>> {
    let g = AmdAugmented::split(candidate, params)?;
    let seed = pack(&params.base, &params.ext, &g.x)?;
    let tag = pack(&params.base, &params.ext, &g.t)?;
    Ok((amd_tag(&g.m, params, seed)? == tag).then_some(g.m))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct AmdErrorBound {
    /// `((ceil(k/b) + 2) / q^b) * (s sqrt(n/k') - 1)`, floored at zero.
    pub failure: f64,
    /// `4 s / q^(b-1)`.
    pub coarse: f64,
}

/// Bound on the probability that AMD-assisted decoding fails, where `n` and
/// `k_outer` describe the list decoder and `s` is its multiplicity.
pub fn amd_error_bound(params: &AmdParams, n: usize, k_outer: usize, s: usize) -> AmdErrorBound {
    let q = params.base.order() as f64;
    let qb = q.powi(params.b as i32);
    let blocks = params.k.div_ceil(params.b) as f64;
    let list = s as f64 * (n as f64 / k_outer as f64).sqrt();
    AmdErrorBound {
        failure: ((blocks + 2.0) / qb * (list - 1.0)).max(0.0),
        coarse: 4.0 * s as f64 / q.powi(params.b as i32 - 1),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn gf23() -> Field {
        Field::prime(23).unwrap()
    }

    fn v(f: &Field, xs: &[u64]) -> Vec<Fe> {
        f.vector(xs).unwrap()
    }

    #[test]
    fn example_tags() {
        let f = gf23();
        let p3 = AmdParams::new(f.clone(), 1, 3).unwrap();
        assert_eq!(p3.r(), 3);
        assert_eq!(amd_tag(&v(&f, &[4, 2, 10]), &p3, Fe(11)).unwrap(), Fe(8));
        assert_eq!(amd_tag(&[Fe::ZERO; 3], &p3, Fe::ZERO).unwrap(), Fe::ZERO);
        let p4 = AmdParams::new(f.clone(), 1, 4).unwrap();
        assert_eq!(amd_tag(&v(&f, &[18, 13, 14, 21]), &p4, Fe(22)).unwrap(), Fe(3));
    }

    #[test]
    fn tag_by_hand() {
        // 11^5 + 4*11 + 2*11^2 + 10*11^3 over GF(23).
        let f = gf23();
        let x = Fe(11);
        let mut want = f.pow(x, 5);
        for (i, c) in [4, 2, 10].into_iter().enumerate() {
            want = f.add(want, f.mul(f.from_int(c), f.pow(x, i as u64 + 1)));
        }
        assert_eq!(want, Fe(8));
    }

    #[test]
    fn example_augmented_messages() {
        let f = gf23();
        let p3 = AmdParams::new(f.clone(), 1, 3).unwrap();
        let g = amd_encode_with_seed(&v(&f, &[4, 2, 10]), &p3, Fe(11)).unwrap();
        assert_eq!(g.to_vec(), v(&f, &[4, 2, 10, 11, 8]));
        let p4 = AmdParams::new(f.clone(), 1, 4).unwrap();
        let g = amd_encode_with_seed(&v(&f, &[18, 13, 14, 21]), &p4, Fe(22)).unwrap();
        assert_eq!(g.to_vec(), v(&f, &[18, 13, 14, 21, 22, 3]));
    }

    #[test]
    fn example_rejections() {
        let f = gf23();
        let p3 = AmdParams::new(f.clone(), 1, 3).unwrap();
        assert_eq!(amd_verify(&v(&f, &[22, 1, 9, 15, 12]), &p3).unwrap(), None);
        assert_eq!(
            amd_verify(&v(&f, &[4, 2, 10, 11, 8]), &p3).unwrap(),
            Some(v(&f, &[4, 2, 10]))
        );
        let p4 = AmdParams::new(f.clone(), 1, 4).unwrap();
        assert_eq!(amd_verify(&v(&f, &[22, 9, 7, 12, 0, 6]), &p4).unwrap(), None);
        assert!(matches!(
            amd_verify(&v(&f, &[1, 2]), &p4),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn divisibility_fix() {
        // p = 5, k = 3, b = 1: r0 + 2 = 5.
        let p = AmdParams::new(Field::prime(5).unwrap(), 1, 3).unwrap();
        assert_eq!(p.r(), 4);
        for q in [2u32, 3, 5, 7] {
            let f = Field::prime(q).unwrap();
            for b in 1..4 {
                for k in 1..20 {
                    let a = AmdParams::new(f.clone(), b, k).unwrap();
                    let r0 = k.div_ceil(b);
                    assert!(a.r() == r0 || a.r() == r0 + 1);
                    assert_eq!(a.r() == r0 + 1, (r0 + 2) % q as usize == 0);
                    assert_ne!((a.r() + 2) % q as usize, 0);
                }
            }
        }
    }

    #[test]
    fn round_trip_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for (q, b, k) in [(23u32, 1usize, 3usize), (23, 2, 5), (2, 8, 13), (5, 3, 7)] {
            let f = Field::prime(q).unwrap();
            let params = AmdParams::new(f.clone(), b, k).unwrap();
            for _ in 0..250 {
                let m: Vec<Fe> = (0..k).map(|_| Fe(rng.gen_range(0..q))).collect();
                let g = amd_encode(&m, &params, &mut rng).unwrap();
                assert_eq!(g.to_vec().len(), k + 2 * b);
                assert_eq!(amd_verify(&g.to_vec(), &params).unwrap(), Some(m));
            }
        }
    }

    #[test]
    fn manipulation_detected_exhaustively() {
        let f = Field::prime(7).unwrap();
        let params = AmdParams::new(f.clone(), 2, 3).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let m: Vec<Fe> = (0..3).map(|_| Fe(rng.gen_range(0..7))).collect();
        for _ in 0..20 {
            let delta: Vec<Fe> = loop {
                let d: Vec<Fe> = (0..7).map(|_| Fe(rng.gen_range(0..7))).collect();
                if d.iter().any(|x| !x.is_zero()) {
                    break d;
                }
            };
            let mut accepted = 0;
            for seed in params.ext().elements() {
                let g = amd_encode_with_seed(&m, &params, seed).unwrap().to_vec();
                let bad: Vec<Fe> = g.iter().zip(&delta).map(|(&a, &d)| f.add(a, d)).collect();
                if amd_verify(&bad, &params).unwrap().is_some() {
                    accepted += 1;
                }
            }
            assert!(accepted <= params.r() + 1, "accepted {accepted} of 49");
        }
    }

    #[test]
    fn error_bounds() {
        let params = AmdParams::new(gf23(), 1, 3).unwrap();
        let s = crate::gscore::select_multiplicity(23, 6, 11).unwrap();
        let bound = amd_error_bound(&params, 23, 6, s);
        let want = 5.0 / 23.0 * (s as f64 * (23.0f64 / 6.0).sqrt() - 1.0);
        assert!((bound.failure - want).abs() < 1e-12);
        assert_eq!(amd_error_bound(&params, 6, 6, 1).failure, 0.0);
        let two = AmdParams::new(gf23(), 2, 3).unwrap();
        assert!((amd_error_bound(&two, 23, 6, 2).coarse - 8.0 / 23.0).abs() < 1e-12);
        let mut last = f64::INFINITY;
        for b in 1..6 {
            let p = AmdParams::new(gf23(), b, 12).unwrap();
            let e = amd_error_bound(&p, 23, 6, 2).failure;
            assert!(e < last);
            last = e;
        }
    }
}

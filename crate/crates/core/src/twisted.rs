//! Twisted generalized Reed-Solomon codes.
//!
//! A twist `(t, h, eta)` adds `eta * f_h * x^(k-1+t)` to the message
//! polynomial `f_0 + ... + f_{k-1} x^(k-1)`. Every such polynomial has degree
//! below the pseudo-dimension `k' = k + max t`, so a TGRS code sits inside
//! `GRS(alpha, v, k')` and can be list decoded there.

use serde::{Deserialize, Serialize};

use crate::algebra::{Fe, Field, Poly};
use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::gscore::{gs_roots, Candidate, DecodeList, GrsSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TwistTriple {
    /// Hook: the twist lands on `x^(k-1+t)`.
    pub t: usize,
    /// Index of the message coefficient that drives the twist.
    pub h: usize,
    pub eta: Fe,
}

impl TwistTriple {
    pub fn new(t: usize, h: usize, eta: Fe) -> Self {
        TwistTriple { t, h, eta }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TgrsSpec {
    base: GrsSpec,
    twists: Vec<TwistTriple>,
    k_prime: usize,
}

/// `k * (k' - k)`: the number of distinct `(t, h)` pairs available.
pub fn max_twists(_n: usize, k: usize, k_prime_excess: usize) -> usize {
    k * k_prime_excess
}

impl TgrsSpec {
    pub fn new(field: Field, alphas: Vec<Fe>, vs: Vec<Fe>, k: usize, twists: Vec<TwistTriple>) -> Result<Self> {
        let base = GrsSpec::new(field, alphas, vs, k)?;
        Self::from_grs(base, twists)
    }

    pub fn from_grs(base: GrsSpec, twists: Vec<TwistTriple>) -> Result<Self> {
        let (n, k) = (base.n(), base.k());
        if twists.is_empty() {
            return Err(Error::InvalidSpec("a TGRS code needs at least one twist".into()));
        }
        for tw in &twists {
            if tw.t == 0 || tw.t > n - k {
                return Err(Error::InvalidSpec(format!(
                    "twist hook t = {} must satisfy 1 <= t <= n - k = {}",
                    tw.t,
                    n - k
                )));
            }
            if tw.h >= k {
                return Err(Error::InvalidSpec(format!(
                    "twist position h = {} must be below k = {k}",
                    tw.h
                )));
            }
            if !base.field().contains(tw.eta) || tw.eta.is_zero() {
                return Err(Error::InvalidSpec(format!(
                    "twist coefficient {} must be a nonzero field element",
                    tw.eta
                )));
            }
        }
        let mut pairs: Vec<(usize, usize)> = twists.iter().map(|tw| (tw.t, tw.h)).collect();
        pairs.sort();
        if pairs.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidSpec(
                "twist pairs (t, h) must be pairwise distinct".into(),
            ));
        }
        let k_prime = k + twists.iter().map(|tw| tw.t).max().unwrap_or(0);
        if twists.len() > max_twists(n, k, k_prime - k) {
            return Err(Error::InvalidSpec(format!(
                "{} twists exceed k (k' - k) = {}",
                twists.len(),
                k * (k_prime - k)
            )));
        }
        Ok(TgrsSpec { base, twists, k_prime })
    }

    pub fn base(&self) -> &GrsSpec {
        &self.base
    }

    pub fn twists(&self) -> &[TwistTriple] {
        &self.twists
    }

    pub fn field(&self) -> &Field {
        self.base.field()
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    pub fn k(&self) -> usize {
        self.base.k()
    }

    pub fn pseudo_dimension(&self) -> usize {
        self.k_prime
    }

    /// `GRS(alpha, v, k')`, which contains this code.
    pub fn super_code(&self) -> GrsSpec {
        self.base.with_dimension(self.k_prime).expect("k' <= n by construction")
    }

    pub fn twist_poly(&self, message: &[Fe]) -> Result<Poly> {
        let k = self.k();
        if message.len() != k {
            return Err(Error::LengthMismatch {
                expected: k,
                got: message.len(),
            });
        }
        let f = self.field();
        let mut coeffs = message.to_vec();
        coeffs.resize(self.k_prime, Fe::ZERO);
        for tw in &self.twists {
            let slot = &mut coeffs[k - 1 + tw.t];
            *slot = f.add(*slot, f.mul(tw.eta, message[tw.h]));
        }
        Ok(Poly::new(coeffs))
    }

    /// Whether `g` is the twist polynomial of its own low `k` coefficients.
    pub fn is_twist_polynomial(&self, g: &Poly) -> Result<bool> {
        if let Some(d) = g.degree() {
            if d >= self.k_prime {
                return Err(Error::DegreeTooLarge {
                    degree: d,
                    bound: self.k_prime,
                });
            }
        }
        Ok(self.twist_poly(&g.padded(self.k_prime)[..self.k()])? == *g)
    }

    pub fn list_decode(&self, r: &[Fe], tau: usize) -> Result<DecodeList> {
        tgrs_list_decode(self, r, tau)
    }

    pub fn unique_decode(&self, r: &[Fe]) -> Result<UniqueOutcome> {
        tgrs_unique_decode(self, r)
    }
}

impl LinearCode for TgrsSpec {
    fn field(&self) -> &Field {
        self.base.field()
    }

    fn length(&self) -> usize {
        self.n()
    }

    fn dimension(&self) -> usize {
        self.k()
    }

    fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        tgrs_encode(self, message)
    }
}

pub fn tgrs_encode(spec: &TgrsSpec, message: &[Fe]) -> Result<Vec<Fe>> {
    Ok(spec.base.evaluate(&spec.twist_poly(message)?))
}

/// List decoding in the dimension-`k'` super code, keeping only twist polynomials.
pub fn tgrs_list_decode(spec: &TgrsSpec, r: &[Fe], tau: usize) -> Result<DecodeList> {
    let sup = spec.super_code();
    let (roots, gs) = gs_roots(&sup, r, tau)?;
    let mut candidates = Vec::new();
    for g in roots {
        if !spec.is_twist_polynomial(&g)? {
            continue;
        }
        let distance = crate::code::hamming_distance(&sup.evaluate(&g), r);
        if distance <= tau {
            candidates.push(Candidate {
                message: g.padded(spec.k_prime)[..spec.k()].to_vec(),
                poly: g,
                distance,
            });
        }
    }
    let mut list = DecodeList { candidates, gs };
    list.sort();
    Ok(list)
}

/// Result of a unique-decoding attempt whose preconditions held.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum UniqueOutcome {
    Decoded(Vec<Fe>),
    /// No codeword within the unique-decoding radius.
    Failure,
    /// Two or more codewords within `(n - k) / 2`: the code cannot be MDS.
    NotMdsEvidence(Vec<Candidate>),
}

impl UniqueOutcome {
    pub fn message(&self) -> Option<&[Fe]> {
        match self {
            UniqueOutcome::Decoded(m) => Some(m),
            _ => None,
        }
    }

    pub(crate) fn from_list(list: DecodeList) -> Self {
        match list.candidates.len() {
            0 => UniqueOutcome::Failure,
            1 => UniqueOutcome::Decoded(list.candidates.into_iter().next().unwrap().message),
            _ => UniqueOutcome::NotMdsEvidence(list.candidates),
        }
    }
}

/// `k' < (n + k)^2 / 4n`, decided on integers.
pub fn unique_radius_feasible(n: usize, k: usize, k_prime: usize) -> bool {
    4 * n * k_prime < (n + k) * (n + k)
}

/// Decodes up to `floor((n - k) / 2)` errors, assuming the code is MDS.
pub fn tgrs_unique_decode(spec: &TgrsSpec, r: &[Fe]) -> Result<UniqueOutcome> {
    let (n, k, kp) = (spec.n(), spec.k(), spec.k_prime);
    if !unique_radius_feasible(n, k, kp) {
        return Err(Error::UniquePrecondition(format!(
            "pseudo-dimension {kp} is not below (n + k)^2 / 4n = {:.3}",
            ((n + k) * (n + k)) as f64 / (4 * n) as f64
        )));
    }
    Ok(UniqueOutcome::from_list(tgrs_list_decode(spec, r, (n - k) / 2)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::code::hamming_distance;
    use crate::gscore::gs_list_decode;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    pub(crate) fn example1() -> TgrsSpec {
        let f = Field::prime(23).unwrap();
        let base = GrsSpec::standard(f, 23, 5).unwrap();
        TgrsSpec::from_grs(base, vec![TwistTriple::new(1, 1, Fe::ONE)]).unwrap()
    }

    fn vals(v: &[Fe]) -> Vec<u32> {
        v.iter().map(|c| c.value()).collect()
    }

    #[test]
    fn pseudo_dimension_takes_max_hook() {
        assert_eq!(example1().pseudo_dimension(), 6);
        let f = Field::prime(23).unwrap();
        let base = GrsSpec::standard(f.clone(), 23, 5).unwrap();
        let two = TgrsSpec::from_grs(
            base.clone(),
            vec![
                TwistTriple::new(1, 0, f.from_int(3)),
                TwistTriple::new(3, 2, f.from_int(7)),
            ],
        )
        .unwrap();
        assert_eq!(two.pseudo_dimension(), 8);
        let edge = TgrsSpec::from_grs(base, vec![TwistTriple::new(18, 0, Fe::ONE)]).unwrap();
        assert_eq!(edge.pseudo_dimension(), 23);
    }

    #[test]
    fn example_twist_polynomial_and_codeword() {
        let spec = example1();
        let f = spec.field().clone();
        let m = f.vector(&[4, 2, 10, 11, 8]).unwrap();
        assert_eq!(vals(spec.twist_poly(&m).unwrap().coeffs()), [4, 2, 10, 11, 8, 2]);
        let cw = tgrs_encode(&spec, &m).unwrap();
        let want = [
            4, 14, 6, 13, 4, 9, 14, 17, 15, 14, 16, 6, 8, 3, 8, 17, 11, 14, 11, 4, 22, 16, 7,
        ];
        assert_eq!(vals(&cw), want);
        assert!(tgrs_encode(&spec, &[Fe::ZERO; 5]).unwrap().iter().all(|c| c.is_zero()));
    }

    #[test]
    fn cancelling_twists_still_members() {
        let f = Field::prime(7).unwrap();
        let base = GrsSpec::standard(f.clone(), 7, 3).unwrap();
        // Both twists land on x^3; with f_0 = f_1 they cancel.
        let spec = TgrsSpec::from_grs(
            base,
            vec![TwistTriple::new(1, 0, Fe::ONE), TwistTriple::new(1, 1, f.from_int(-1))],
        )
        .unwrap();
        let g = spec.twist_poly(&f.vector(&[2, 2, 5]).unwrap()).unwrap();
        assert_eq!(g.degree(), Some(2));
        assert!(spec.is_twist_polynomial(&g).unwrap());
    }

    #[test]
    fn twist_membership_examples() {
        let spec = example1();
        let f = spec.field().clone();
        assert!(spec.is_twist_polynomial(&Poly::monomial(Fe::ONE, 4)).unwrap());
        assert!(!spec.is_twist_polynomial(&Poly::monomial(Fe::ONE, 1)).unwrap());
        assert!(spec
            .is_twist_polynomial(&Poly::new(f.vector(&[0, 1, 0, 0, 0, 1]).unwrap()))
            .unwrap());
        assert!(matches!(
            spec.is_twist_polynomial(&Poly::monomial(Fe::ONE, 6)),
            Err(Error::DegreeTooLarge { .. })
        ));
    }

    #[test]
    fn validation() {
        let f = Field::prime(11).unwrap();
        let base = GrsSpec::standard(f.clone(), 10, 4).unwrap();
        let bad = |tw: Vec<TwistTriple>| TgrsSpec::from_grs(base.clone(), tw).is_err();
        assert!(bad(vec![]));
        assert!(bad(vec![TwistTriple::new(0, 0, Fe::ONE)]));
        assert!(bad(vec![TwistTriple::new(7, 0, Fe::ONE)]));
        assert!(bad(vec![TwistTriple::new(1, 4, Fe::ONE)]));
        assert!(bad(vec![TwistTriple::new(1, 0, Fe::ZERO)]));
        assert!(bad(vec![
            TwistTriple::new(1, 0, Fe::ONE),
            TwistTriple::new(1, 0, f.from_int(2))
        ]));
        assert!(!bad(vec![TwistTriple::new(6, 3, Fe::ONE)]));
    }

    #[test]
    fn max_twist_formula() {
        let excess = ((23 - 5) * (23 - 5) as usize).div_ceil(4 * 23) - 1;
        assert_eq!(excess, 3);
        assert_eq!(max_twists(23, 5, excess), 15);
        assert_eq!(max_twists(23, 5, 1), 5);
        assert_eq!(max_twists(23, 5, 0), 0);
    }

    #[test]
    fn encodings_lie_in_super_code() {
        let spec = example1();
        let f = spec.field().clone();
        let sup = spec.super_code();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..1000 {
            let m: Vec<Fe> = (0..5).map(|_| f.element(rng.gen_range(0..23)).unwrap()).collect();
            let cw = tgrs_encode(&spec, &m).unwrap();
            let list = gs_list_decode(&sup, &cw, 0).unwrap();
            assert_eq!(list.len(), 1);
            assert_eq!(list.candidates[0].poly, spec.twist_poly(&m).unwrap());
        }
    }

    #[test]
    fn example_one_list() {
        let spec = example1();
        let f = spec.field().clone();
        let cw = tgrs_encode(&spec, &f.vector(&[4, 2, 10, 11, 8]).unwrap()).unwrap();
        let err = f
            .vector(&[0, 0, 7, 0, 1, 0, 0, 0, 8, 8, 5, 0, 0, 0, 0, 8, 0, 9, 17, 4, 11, 11, 0])
            .unwrap();
        let r: Vec<Fe> = cw.iter().zip(&err).map(|(&a, &b)| f.add(a, b)).collect();
        let list = tgrs_list_decode(&spec, &r, 11).unwrap();
        let got: Vec<Vec<u32>> = list.messages().map(vals).collect();
        assert_eq!(got, vec![vec![22, 1, 9, 15, 12], vec![4, 2, 10, 11, 8]]);
        assert_eq!(list.candidates[0].distance, 10);
        assert_eq!(list.candidates[1].distance, 11);
        list.gs.verify(&f).unwrap();
    }

    #[test]
    fn filter_matches_enumeration() {
        // All q^(k') polynomials of degree < k' over GF(5), k = 2.
        let f = Field::prime(5).unwrap();
        let base = GrsSpec::standard(f.clone(), 5, 2).unwrap();
        let spec = TgrsSpec::from_grs(
            base,
            vec![TwistTriple::new(1, 0, f.from_int(2)), TwistTriple::new(2, 1, Fe::ONE)],
        )
        .unwrap();
        let kp = spec.pseudo_dimension();
        let mut members = Vec::new();
        for idx in 0..5usize.pow(kp as u32) {
            let c: Vec<Fe> = (0..kp)
                .map(|i| f.element((idx / 5usize.pow(i as u32) % 5) as u64).unwrap())
                .collect();
            let g = Poly::new(c);
            if spec.is_twist_polynomial(&g).unwrap() {
                members.push(g);
            }
        }
        let mut want: Vec<Poly> = Vec::new();
        for a in f.elements() {
            for b in f.elements() {
                want.push(spec.twist_poly(&[a, b]).unwrap());
            }
        }
        members.sort();
        want.sort();
        assert_eq!(members, want);
    }

    #[test]
    fn unique_decoding() {
        let spec = example1();
        let f = spec.field().clone();
        let m = f.vector(&[1, 2, 3, 4, 5]).unwrap();
        let cw = tgrs_encode(&spec, &m).unwrap();
        assert_eq!(
            tgrs_unique_decode(&spec, &cw).unwrap(),
            UniqueOutcome::Decoded(m.clone())
        );
        let mut r = cw.clone();
        for i in [0, 3, 5, 8, 13, 21] {
            r[i] = f.add(r[i], Fe::ONE);
        }
        let out = tgrs_unique_decode(&spec, &r).unwrap();
        assert_eq!(out.message(), Some(m.as_slice()));
        assert!(hamming_distance(&tgrs_encode(&spec, out.message().unwrap()).unwrap(), &r) <= 9);
    }

    #[test]
    fn unique_decoding_rejects_full_pseudo_dimension() {
        let f = Field::prime(13).unwrap();
        let base = GrsSpec::standard(f, 13, 3).unwrap();
        let spec = TgrsSpec::from_grs(base, vec![TwistTriple::new(10, 0, Fe::ONE)]).unwrap();
        assert_eq!(spec.pseudo_dimension(), 13);
        assert!(matches!(
            tgrs_unique_decode(&spec, &[Fe::ZERO; 13]),
            Err(Error::UniquePrecondition(_))
        ));
    }
}

//! Generalized Reed-Solomon codes and the Guruswami-Sudan list decoder:
//! multiplicity selection, interpolation with multiplicities,
//! Roth-Ruckenstein root finding, and the final distance filter.

mod interpolate;
mod params;
mod rr;

pub use interpolate::{interpolate, verify_interpolation};
pub use params::{
    max_feasible_tau, monomial_count, select_multiplicity, select_multiplicity_capped, try_multiplicity, weight_for,
    within_johnson_radius, GsParams, DEFAULT_MAX_MULTIPLICITY,
};
pub use rr::rr_roots;

use crate::algebra::{BiPoly, Fe, Field, Poly};
use crate::code::{check_points, hamming_distance, LinearCode};
use crate::error::{Error, Result};

/// `GRS(alpha, v, k)`: codewords `(v_1 f(alpha_1), ..., v_n f(alpha_n))` for `deg f < k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrsSpec {
    field: Field,
    alphas: Vec<Fe>,
    vs: Vec<Fe>,
    k: usize,
}

impl GrsSpec {
    pub fn new(field: Field, alphas: Vec<Fe>, vs: Vec<Fe>, k: usize) -> Result<Self> {
        if alphas.len() != vs.len() {
            return Err(Error::InvalidSpec(format!(
                "{} evaluation points but {} column multipliers",
                alphas.len(),
                vs.len()
            )));
        }
        let n = alphas.len();
        if n < 2 {
            return Err(Error::InvalidSpec(format!("length {n} is too short to decode")));
        }
        if k == 0 || k > n {
            return Err(Error::InvalidSpec(format!(
                "dimension {k} must satisfy 1 <= k <= n = {n}"
            )));
        }
        if n as u64 > field.order() as u64 {
            return Err(Error::InvalidSpec(format!(
                "length {n} exceeds the field order {}",
                field.order()
            )));
        }
        check_points(&field, &alphas, &vs)?;
        Ok(GrsSpec { field, alphas, vs, k })
    }

    /// Evaluation points `0, 1, ..., n-1` (by index) with unit multipliers.
    pub fn standard(field: Field, n: usize, k: usize) -> Result<Self> {
        let alphas = (0..n as u64).map(|i| field.element(i)).collect::<Result<Vec<_>>>()?;
        GrsSpec::new(field, alphas, vec![Fe::ONE; n], k)
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    pub fn alphas(&self) -> &[Fe] {
        &self.alphas
    }

    pub fn vs(&self) -> &[Fe] {
        &self.vs
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Same points and multipliers, different dimension.
    pub fn with_dimension(&self, k: usize) -> Result<Self> {
        GrsSpec::new(self.field.clone(), self.alphas.clone(), self.vs.clone(), k)
    }

    /// `ev_{alpha,v}(g)` for any polynomial, regardless of degree.
    pub fn evaluate(&self, g: &Poly) -> Vec<Fe> {
        self.alphas
            .iter()
            .zip(&self.vs)
            .map(|(&a, &v)| self.field.mul(v, g.eval(a, &self.field)))
            .collect()
    }

    pub fn list_decode(&self, r: &[Fe], tau: usize) -> Result<DecodeList> {
        gs_list_decode(self, r, tau)
    }
}

impl LinearCode for GrsSpec {
    fn field(&self) -> &Field {
        &self.field
    }

    fn length(&self) -> usize {
        self.n()
    }

    fn dimension(&self) -> usize {
        self.k
    }

    fn encode(&self, message: &[Fe]) -> Result<Vec<Fe>> {
        grs_encode(self, message)
    }
}

pub fn grs_encode(spec: &GrsSpec, coeffs: &[Fe]) -> Result<Vec<Fe>> {
    if coeffs.len() != spec.k {
        return Err(Error::LengthMismatch {
            expected: spec.k,
            got: coeffs.len(),
        });
    }
    Ok(spec.evaluate(&Poly::new(coeffs.to_vec())))
}

/// One decoded candidate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    /// Message symbols (the code's `k` information coefficients).
    pub message: Vec<Fe>,
    /// The full message polynomial that was evaluated.
    pub poly: Poly,
    /// Hamming distance from its codeword to the received word.
    pub distance: usize,
}

/// Record of the interpolation step of one Guruswami-Sudan call.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GsRun {
    pub params: GsParams,
    /// `(alpha_i, r_i / v_i)`.
    pub points: Vec<(Fe, Fe)>,
    pub interpolant: BiPoly,
}

impl GsRun {
    pub fn verify(&self, f: &Field) -> std::result::Result<(), String> {
        verify_interpolation(&self.interpolant, &self.points, &self.params, f)
    }
}

/// Candidates sorted by ascending distance, ties broken by coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeList {
    pub candidates: Vec<Candidate>,
    pub gs: GsRun,
}

impl DecodeList {
    pub fn len(&self) -> usize {
        self.candidates.len()
    }

    pub fn is_empty(&self) -> bool {
        self.candidates.is_empty()
    }

    pub fn messages(&self) -> impl Iterator<Item = &[Fe]> {
        self.candidates.iter().map(|c| c.message.as_slice())
    }

    pub fn multiplicity(&self) -> usize {
        self.gs.params.s
    }

    /// `s * sqrt(n / k)` for the underlying Guruswami-Sudan call.
    pub fn list_bound(&self) -> f64 {
        self.gs.params.list_bound()
    }

    pub(crate) fn sort(&mut self) {
        self.candidates
            .sort_by(|a, b| a.distance.cmp(&b.distance).then_with(|| a.message.cmp(&b.message)));
    }
}

/// Interpolates and root-finds without the distance filter; returns every
/// `f` with `deg f < k` and `Q(x, f(x)) = 0`, together with the run record.
pub(crate) fn gs_roots(spec: &GrsSpec, r: &[Fe], tau: usize) -> Result<(Vec<Poly>, GsRun)> {
    spec.check_received(r)?;
    let f = &spec.field;
    let params = GsParams::new(spec.n(), spec.k, tau)?;
    let points = spec
        .alphas
        .iter()
        .zip(&spec.vs)
        .zip(r)
        .map(|((&a, &v), &ri)| Ok((a, f.div(ri, v)?)))
        .collect::<Result<Vec<_>>>()?;
    let interpolant = interpolate(&points, &params, f)?;
    let roots = rr_roots(&interpolant, spec.k, f)?;
    Ok((
        roots,
        GsRun {
            params,
            points,
            interpolant,
        },
    ))
}

/// Every `f` with `deg f < k` whose codeword lies within distance `tau` of `r`.
pub fn gs_list_decode(spec: &GrsSpec, r: &[Fe], tau: usize) -> Result<DecodeList> {
    let (roots, gs) = gs_roots(spec, r, tau)?;
    let candidates = roots
        .into_iter()
        .filter_map(|g| {
            let distance = hamming_distance(&spec.evaluate(&g), r);
            (distance <= tau).then(|| Candidate {
                message: g.padded(spec.k),
                poly: g,
                distance,
            })
        })
        .collect();
    let mut list = DecodeList { candidates, gs };
    list.sort();
    Ok(list)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn example_grs() -> GrsSpec {
        GrsSpec::standard(Field::prime(23).unwrap(), 23, 6).unwrap()
    }

    #[test]
    fn encodes_example_codeword() {
        let spec = example_grs();
        let f = spec.field().clone();
        let cw = grs_encode(&spec, &f.vector(&[4, 2, 10, 11, 8, 2]).unwrap()).unwrap();
        let want = [
            4, 14, 6, 13, 4, 9, 14, 17, 15, 14, 16, 6, 8, 3, 8, 17, 11, 14, 11, 4, 22, 16, 7,
        ];
        assert_eq!(cw.iter().map(|c| c.value()).collect::<Vec<_>>(), want);
    }

    #[test]
    fn zero_message_encodes_to_zero() {
        let spec = example_grs();
        assert!(grs_encode(&spec, &[Fe::ZERO; 6]).unwrap().iter().all(|c| c.is_zero()));
        assert!(matches!(
            grs_encode(&spec, &[Fe::ZERO; 5]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn multipliers_scale_coordinates() {
        let f = Field::prime(13).unwrap();
        let alphas: Vec<Fe> = f.elements().take(10).collect();
        let vs: Vec<Fe> = (1..=10).map(|i| f.from_int(i)).collect();
        let plain = GrsSpec::new(f.clone(), alphas.clone(), vec![Fe::ONE; 10], 4).unwrap();
        let scaled = GrsSpec::new(f.clone(), alphas, vs.clone(), 4).unwrap();
        let m = f.vector(&[1, 5, 0, 9]).unwrap();
        let a = grs_encode(&plain, &m).unwrap();
        let b = grs_encode(&scaled, &m).unwrap();
        for i in 0..10 {
            assert_eq!(b[i], f.mul(a[i], vs[i]));
        }
    }

    #[test]
    fn rejects_bad_specs() {
        let f = Field::prime(7).unwrap();
        let e = |v: &[u64]| f.vector(v).unwrap();
        assert!(GrsSpec::new(f.clone(), e(&[0, 1, 1]), e(&[1, 1, 1]), 2).is_err());
        assert!(GrsSpec::new(f.clone(), e(&[0, 1, 2]), e(&[1, 0, 1]), 2).is_err());
        assert!(GrsSpec::new(f.clone(), e(&[0, 1, 2]), e(&[1, 1, 1]), 0).is_err());
        assert!(GrsSpec::new(f.clone(), e(&[0, 1, 2]), e(&[1, 1, 1]), 4).is_err());
        assert!(GrsSpec::new(f.clone(), e(&[0, 1, 2]), e(&[1, 1]), 2).is_err());
    }

    #[test]
    fn codeword_decodes_to_itself() {
        let spec = example_grs();
        let f = spec.field().clone();
        let m = f.vector(&[4, 2, 10, 11, 8, 2]).unwrap();
        let cw = grs_encode(&spec, &m).unwrap();
        for tau in [0, 5, 11] {
            let list = gs_list_decode(&spec, &cw, tau).unwrap();
            assert_eq!(list.candidates[0].message, m);
            assert_eq!(list.candidates[0].distance, 0);
            list.gs.verify(&f).unwrap();
        }
    }

    #[test]
    fn infeasible_radius_is_reported() {
        let spec = example_grs();
        let r = vec![Fe::ZERO; 23];
        assert!(matches!(
            gs_list_decode(&spec, &r, 12),
            Err(Error::Infeasible { max_tau: Some(11), .. })
        ));
    }

    /// Definitional oracle: every message within distance `tau`.
    fn brute_force(spec: &GrsSpec, r: &[Fe], tau: usize) -> Vec<Vec<Fe>> {
        let f = spec.field();
        let q = f.order() as usize;
        let mut out = Vec::new();
        for idx in 0..q.pow(spec.k() as u32) {
            let mut v = idx;
            let m: Vec<Fe> = (0..spec.k())
                .map(|_| {
                    let d = v % q;
                    v /= q;
                    f.element(d as u64).unwrap()
                })
                .collect();
            if hamming_distance(&grs_encode(spec, &m).unwrap(), r) <= tau {
                out.push(m);
            }
        }
        out.sort();
        out
    }

    #[test]
    fn matches_brute_force_on_gf7() {
        let f = Field::prime(7).unwrap();
        let spec = GrsSpec::standard(f.clone(), 7, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2024);
        for _ in 0..200 {
            let m: Vec<Fe> = (0..2).map(|_| f.element(rng.gen_range(0..7)).unwrap()).collect();
            let mut r = grs_encode(&spec, &m).unwrap();
            let mut positions: Vec<usize> = (0..7).collect();
            for i in 0..3 {
                let j = rng.gen_range(i..7);
                positions.swap(i, j);
                let p = positions[i];
                r[p] = f.add(r[p], f.element(rng.gen_range(1..7)).unwrap());
            }
            let list = gs_list_decode(&spec, &r, 3).unwrap();
            let mut got: Vec<Vec<Fe>> = list.messages().map(|m| m.to_vec()).collect();
            got.sort();
            assert_eq!(got, brute_force(&spec, &r, 3));
            assert!(list.len() <= list.gs.interpolant.deg_y().unwrap());
            list.gs.verify(&f).unwrap();
        }
    }
}

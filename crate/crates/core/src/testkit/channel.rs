use rand::seq::index;
use rand::Rng;

use crate::algebra::{Fe, Field};
use crate::error::{Error, Result};

/// An error vector of exactly `weight` nonzero symbols on a uniformly random
/// support, each value uniform over the nonzero elements.
pub fn random_error<R: Rng + ?Sized>(f: &Field, n: usize, weight: usize, rng: &mut R) -> Result<Vec<Fe>> {
    if weight > n {
        return Err(Error::InvalidSpec(format!("error weight {weight} exceeds length {n}")));
    }
    let mut e = vec![Fe::ZERO; n];
    for i in index::sample(rng, n, weight) {
        e[i] = Fe(rng.gen_range(1..f.order()));
    }
    Ok(e)
}

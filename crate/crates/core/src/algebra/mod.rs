//! Exact arithmetic over GF(p^e): field elements, univariate and bivariate
//! polynomials, and the base/extension identification used by the AMD layer.

mod bipoly;
mod field;
mod poly;

pub use bipoly::BiPoly;
pub(crate) use bipoly::Binomials;
pub use field::{is_prime, Fe, Field, MAX_ORDER};
pub use poly::{Poly, DEFAULT_SCAN_CAP};

use crate::error::{Error, Result};

fn check_tower(base: &Field, ext: &Field) -> Result<()> {
    if !base.is_prime_field() {
        return Err(Error::Unsupported(format!(
            "packing over the non-prime base field {base}"
        )));
    }
    if ext.characteristic() != base.characteristic() {
        return Err(Error::FieldMismatch);
    }
    Ok(())
}

/// Identifies a block of `b` base-field symbols with one element of
/// GF(q^b); symbol `i` is the coefficient of the basis monomial `x^i`.
pub fn pack(base: &Field, ext: &Field, block: &[Fe]) -> Result<Fe> {
    check_tower(base, ext)?;
    if block.len() != ext.degree() as usize {
        return Err(Error::LengthMismatch {
            expected: ext.degree() as usize,
            got: block.len(),
        });
    }
    let digits: Vec<u32> = block.iter().map(|d| d.value()).collect();
    ext.from_digits(&digits)
}

/// Inverse of [`pack`].
pub fn unpack(base: &Field, ext: &Field, x: Fe) -> Result<Vec<Fe>> {
    check_tower(base, ext)?;
    if !ext.contains(x) {
        return Err(Error::ElementOutOfRange {
            value: x.value() as u64,
            order: ext.order(),
        });
    }
    ext.digits(x).into_iter().map(|d| base.element(d as u64)).collect()
}

use crate::algebra::{BiPoly, Fe, Field, Poly};
use crate::error::Result;

/// All `f` with `deg f < k` and `Q(x, f(x)) = 0`, in ascending coefficient order.
///
/// Roth-Ruckenstein recursion: after dividing out the largest power of `x`,
/// every root's constant term is a root of `Q(0, y)`; substituting
/// `y -> x*y + gamma` peels that coefficient off and the search continues on
/// the shifted polynomial. Paths are cut at depth `k` and every survivor is
/// confirmed by direct composition.
pub fn rr_roots(q: &BiPoly, k: usize, f: &Field) -> Result<Vec<Poly>> {
    let mut found = Vec::new();
    if q.is_zero() {
        return Ok(found);
    }
    let mut prefix = Vec::with_capacity(k);
    descend(q, k, &mut prefix, &mut found, f)?;
    let mut roots: Vec<Poly> = found.into_iter().filter(|g| q.compose(g, f).is_zero()).collect();
    roots.sort();
    roots.dedup();
    Ok(roots)
}

fn descend(q: &BiPoly, k: usize, prefix: &mut Vec<Fe>, out: &mut Vec<Poly>, f: &Field) -> Result<()> {
    if prefix.len() == k {
        out.push(Poly::new(prefix.clone()));
        return Ok(());
    }
    let q = q.strip_x();
    for gamma in q.at_x_zero().roots(f)? {
        prefix.push(gamma);
        descend(&q.substitute_shift(gamma, f), k, prefix, out, f)?;
        prefix.pop();
    }
    Ok(())
}

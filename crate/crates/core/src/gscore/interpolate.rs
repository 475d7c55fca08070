use crate::algebra::{BiPoly, Binomials, Fe, Field};
use crate::error::{Error, Result};
use crate::gscore::GsParams;

/// Finds a nonzero `Q` with weighted degree below `params.degree_bound` that
/// vanishes with multiplicity at least `params.s` at every point.
///
/// The unknowns are the coefficients of `params.monomials`; each point
/// contributes one linear equation per Hasse derivative of order `(a, b)`
/// with `a + b < s`. The system is brought to reduced row echelon form and
/// the kernel vector with the lowest-index free unknown set to one (all other
/// free unknowns zero) is returned, so the output is deterministic.
pub fn interpolate(points: &[(Fe, Fe)], params: &GsParams, f: &Field) -> Result<BiPoly> {
    if points.len() != params.n {
        return Err(Error::LengthMismatch {
            expected: params.n,
            got: points.len(),
        });
    }
    let mut xs: Vec<Fe> = points.iter().map(|p| p.0).collect();
    xs.sort();
    if xs.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidSpec("interpolation points must have distinct x".into()));
    }
    if !params.is_solvable() {
        return Err(Error::Infeasible {
            n: params.n,
            k: params.k,
            tau: params.tau,
            max_tau: None,
        });
    }

    let cols = params.monomials.len();
    let max_i = params.monomials.iter().map(|m| m.0).max().unwrap_or(0);
    let max_j = params.monomials.iter().map(|m| m.1).max().unwrap_or(0);
    let binom = Binomials::new(max_i.max(max_j), f);

    let mut matrix: Vec<Vec<Fe>> = Vec::with_capacity(params.constraint_count());
    for &(x, y) in points {
        let xpow = powers(x, max_i, f);
        let ypow = powers(y, max_j, f);
        for a in 0..params.s {
            for b in 0..params.s - a {
                let row = params
                    .monomials
                    .iter()
                    .map(|&(i, j)| {
                        if i < a || j < b {
                            return Fe::ZERO;
                        }
                        let c = f.mul(binom.get(i, a), binom.get(j, b));
                        f.mul(c, f.mul(xpow[i - a], ypow[j - b]))
                    })
                    .collect();
                matrix.push(row);
            }
        }
    }

    let kernel = kernel_vector(matrix, cols, f)?;
    let q = BiPoly::from_terms(params.monomials.iter().copied().zip(kernel), f);
    debug_assert!(!q.is_zero());
    Ok(q)
}

fn powers(x: Fe, max: usize, f: &Field) -> Vec<Fe> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = Fe::ONE;
    for _ in 0..=max {
        out.push(acc);
        acc = f.mul(acc, x);
    }
    out
}

/// Gauss-Jordan elimination, pivoting on the first nonzero column.
fn kernel_vector(mut m: Vec<Vec<Fe>>, cols: usize, f: &Field) -> Result<Vec<Fe>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    for col in 0..cols {
        if row == m.len() {
            break;
        }
        let Some(found) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, found);
        let inv = f.inv(m[row][col])?;
        for x in &mut m[row][col..cols] {
            *x = f.mul(*x, inv);
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let factor = other[col];
            for c in col..cols {
                if !pivot_row[c].is_zero() {
                    other[c] = f.sub(other[c], f.mul(factor, pivot_row[c]));
                }
            }
        }
        pivots.push(col);
        row += 1;
    }

    let free = (0..cols)
        .find(|c| !pivots.contains(c))
        .ok_or_else(|| Error::InvalidSpec("interpolation system has a trivial kernel".into()))?;
    let mut v = vec![Fe::ZERO; cols];
    v[free] = Fe::ONE;
    for (r, &pc) in pivots.iter().enumerate() {
        v[pc] = f.neg(m[r][free]);
    }
    Ok(v)
}

/// Checks the interpolation contract: `Q` is nonzero, its weighted degree is
/// below the bound, and it vanishes to order `s` at every point.
pub fn verify_interpolation(
    q: &BiPoly,
    points: &[(Fe, Fe)],
    params: &GsParams,
    f: &Field,
) -> std::result::Result<(), String> {
    let wdeg = q.wdeg(params.weight).map_err(|_| "interpolant is zero".to_string())?;
    if wdeg >= params.degree_bound {
        return Err(format!("weighted degree {wdeg} is not below {}", params.degree_bound));
    }
    for &(x, y) in points {
        let m = q.multiplicity_at(x, y, f).unwrap_or(0);
        if m < params.s {
            return Err(format!("multiplicity {m} < {} at ({x}, {y})", params.s));
        }
    }
    Ok(())
}

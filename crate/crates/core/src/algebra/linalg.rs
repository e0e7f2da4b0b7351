//! Exact Gaussian elimination over any coefficient field.

use super::Coeff;
use crate::error::{Error, Result};

/// Solves `A x = b` for a system with at least as many rows as columns.
/// Fails unless the columns are independent and the system is consistent.
pub fn solve_overdetermined<F: Coeff>(mut rows: Vec<Vec<F>>, mut rhs: Vec<F>) -> Result<Vec<F>> {
    let m = rows.len();
    if rhs.len() != m {
        return Err(Error::NvarsMismatch(m, rhs.len()));
    }
    let ncols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != ncols) {
        return Err(Error::InvalidArgument("ragged matrix".into()));
    }
    let mut pivot_rows = Vec::with_capacity(ncols);
    let mut used = vec![false; m];
    for col in 0..ncols {
        let pick = (0..m)
            .filter(|&r| !used[r] && !rows[r][col].is_zero())
            .min_by_key(|&r| (rows[r][col].size_hint(), rows[r][col..].iter().filter(|x| !x.is_zero()).count()));
        let Some(p) = pick else {
            return Err(Error::Singular(format!("column {col} has no pivot")));
        };
        used[p] = true;
        let inv = rows[p][col].try_inv()?;
        for c in col..ncols {
            rows[p][c] = rows[p][c].clone() * &inv;
        }
        rhs[p] = rhs[p].clone() * &inv;
        let prow = rows[p].clone();
        let prhs = rhs[p].clone();
        for r in 0..m {
            if r == p || rows[r][col].is_zero() {
                continue;
            }
            let f = rows[r][col].clone();
            for c in col..ncols {
                if !prow[c].is_zero() {
                    rows[r][c] = rows[r][c].clone() - &(f.clone() * &prow[c]);
                }
            }
            rhs[r] = rhs[r].clone() - &(f * &prhs);
        }
        pivot_rows.push(p);
    }
    if (0..m).any(|r| !used[r] && !rhs[r].is_zero()) {
        return Err(Error::Singular("inconsistent system".into()));
    }
    Ok(pivot_rows.into_iter().map(|p| rhs[p].clone()).collect())
}

/// Rank of a matrix by elimination.
pub fn rank<F: Coeff>(mut rows: Vec<Vec<F>>) -> Result<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let inv = rows[rank][col].try_inv()?;
        let prow: Vec<F> = rows[rank].iter().map(|x| x.clone() * &inv).collect();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                row[c] = row[c].clone() - &(f.clone() * &prow[c]);
            }
        }
        rank += 1;
    }
    Ok(rank)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rat;

    fn r(a: i64) -> Rat {
        Rat::from_int(a)
    }

    #[test]
    fn solves_and_checks() {
        let a = vec![vec![r(1), r(1)], vec![r(1), r(-1)], vec![r(2), r(0)]];
        assert_eq!(solve_overdetermined(a.clone(), vec![r(3), r(1), r(4)]).unwrap(), vec![r(2), r(1)]);
        assert!(solve_overdetermined(a.clone(), vec![r(3), r(1), r(5)]).is_err());
        let sing = vec![vec![r(1), r(2)], vec![r(2), r(4)]];
        assert!(solve_overdetermined(sing.clone(), vec![r(1), r(2)]).is_err());
        assert_eq!(rank(sing).unwrap(), 1);
        assert_eq!(rank(a).unwrap(), 2);
    }
}

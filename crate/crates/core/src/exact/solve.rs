use super::scalar::{Ring, Scalar};
use super::span::{Span, SparseVec};
use crate::error::{Error, Result};

/// Solution set `particular + span(nullspace)` of a linear system.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    /// Echelonized basis of the homogeneous solutions.
    pub nullspace: Vec<Vec<Scalar>>,
}

/// Solves `system · x = rhs` exactly by Gauss–Jordan elimination.
///
/// Free variables are set to zero in the particular solution; the nullspace
/// has one vector per free column, with a 1 in that column.
pub fn solve_linear(system: &[Vec<Scalar>], rhs: &[Scalar]) -> Result<AffineSolution> {
    let rows = system.len();
    if rhs.len() != rows {
        return Err(Error::DimensionMismatch(rows, rhs.len()));
    }
    let cols = system.first().map_or(0, Vec::len);
    if let Some(bad) = system.iter().find(|r| r.len() != cols) {
        return Err(Error::DimensionMismatch(cols, bad.len()));
    }
    let mut a: Vec<Vec<Scalar>> =
        system.iter().zip(rhs).map(|(r, b)| r.iter().cloned().chain(std::iter::once(b.clone())).collect()).collect();

    let mut pivot_cols = Vec::new();
    let mut prow = 0;
    for col in 0..cols {
        let Some(found) = (prow..rows).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(found, prow);
        let inv = <Scalar as Ring>::one() / &a[prow][col];
        for x in a[prow].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[prow].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == prow || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x -= &f * p;
                }
            }
        }
        pivot_cols.push(col);
        prow += 1;
        if prow == rows {
            break;
        }
    }
    if a[prow..].iter().any(|row| !row[cols].is_zero()) {
        return Err(Error::Inconsistent);
    }

    let mut particular = vec![<Scalar as Ring>::zero(); cols];
    for (r, &c) in pivot_cols.iter().enumerate() {
        particular[c] = a[r][cols].clone();
    }
    let mut nullspace = Vec::new();
    for free in (0..cols).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![<Scalar as Ring>::zero(); cols];
        v[free] = <Scalar as Ring>::one();
        for (r, &c) in pivot_cols.iter().enumerate() {
            v[c] = -a[r][free].clone();
        }
        nullspace.push(v);
    }
    Ok(AffineSolution { particular, nullspace })
}

/// Rank of the matrix whose rows are `rows`.
pub fn rank(rows: &[SparseVec]) -> usize {
    Span::from_vectors(rows).dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::q;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter().map(|r| r.iter().map(|&x| q(x, 1)).collect()).collect()
    }

    #[test]
    fn identity_system() {
        let b = vec![q(1, 2), q(-3, 1)];
        let s = solve_linear(&m(&[&[1, 0], &[0, 1]]), &b).unwrap();
        assert_eq!(s.particular, b);
        assert!(s.nullspace.is_empty());
    }

    #[test]
    fn zero_system_one_unknown() {
        let s = solve_linear(&m(&[&[0]]), &[q(0, 1)]).unwrap();
        assert_eq!(s.particular, vec![q(0, 1)]);
        assert_eq!(s.nullspace, vec![vec![q(1, 1)]]);
    }

    #[test]
    fn inconsistent_is_reported() {
        assert_eq!(solve_linear(&m(&[&[1, 1], &[2, 2]]), &[q(1, 1), q(3, 1)]), Err(Error::Inconsistent));
        assert_eq!(solve_linear(&m(&[&[0]]), &[q(1, 1)]), Err(Error::Inconsistent));
    }

    #[test]
    fn particular_satisfies_system() {
        let a = m(&[&[2, 1, -1], &[1, 3, 2]]);
        let b = vec![q(3, 1), q(1, 5)];
        let s = solve_linear(&a, &b).unwrap();
        assert_eq!(s.nullspace.len(), 1);
        for (row, bi) in a.iter().zip(&b) {
            let lhs: Scalar = row.iter().zip(&s.particular).map(|(x, y)| x * y).sum();
            assert_eq!(&lhs, bi);
            let hom: Scalar = row.iter().zip(&s.nullspace[0]).map(|(x, y)| x * y).sum();
            assert!(hom.is_zero());
        }
    }

    #[test]
    fn rank_of_sparse_rows() {
        let rows: Vec<SparseVec> =
            m(&[&[1, 2, 3], &[2, 4, 6], &[0, 0, 1]]).iter().map(|r| SparseVec::from_dense(r)).collect();
        assert_eq!(rank(&rows), 2);
    }
}

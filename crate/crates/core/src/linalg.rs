//! Exact linear algebra over ℚ(√2).

use crate::scalar::Scalar;

/// Rank of a matrix given as rows, by Gaussian elimination.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut m: Vec<Vec<Scalar>> = rows
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip().expect("pivot is nonzero");
        let pivot_row: Vec<Scalar> = m[rank].iter().map(|v| v * &inv).collect();
        for row in m[rank + 1..].iter_mut().filter(|row| !row[col].is_zero()) {
            let factor = row[col].clone();
            for (c, p) in pivot_row.iter().enumerate().skip(col) {
                if !p.is_zero() {
                    row[c] -= &(&factor * p);
                }
            }
        }
        m[rank] = pivot_row;
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mat(rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| Scalar::from_int(v)).collect())
            .collect()
    }

    #[test]
    fn small_ranks() {
        assert_eq!(rank(&mat(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&mat(&[&[1, 2], &[3, 4]])), 2);
        assert_eq!(rank(&mat(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(&[]), 0);
        let irr = vec![
            vec![Scalar::one(), Scalar::sqrt2()],
            vec![Scalar::sqrt2(), Scalar::from_int(2)],
        ];
        assert_eq!(rank(&irr), 1);
    }
}

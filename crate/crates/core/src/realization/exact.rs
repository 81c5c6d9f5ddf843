//! Dense integer matrices with exact rank by fraction-free elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

#[derive(Clone, PartialEq, Eq)]
pub struct ExactMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl ExactMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ExactMatrix { rows, cols, entries: vec![BigInt::zero(); rows * cols] }
    }

    /// Panics if the rows have different lengths.
    pub fn from_rows<T: Into<BigInt> + Clone>(rows: &[Vec<T>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == cols), "ragged rows");
        ExactMatrix {
            rows: rows.len(),
            cols,
            entries: rows.iter().flat_map(|r| r.iter().cloned().map(Into::into)).collect(),
        }
    }

    /// The matrix whose columns are `vectors`.
    pub fn from_columns(vectors: &[Vec<BigInt>]) -> Self {
        let rows = vectors.first().map_or(0, Vec::len);
        let mut m = ExactMatrix::zeros(rows, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            assert_eq!(v.len(), rows, "column lengths differ");
            for (i, x) in v.iter().enumerate() {
                m.set(i, j, x.clone());
            }
        }
        m
    }

    pub fn identity(n: usize) -> Self {
        let mut m = ExactMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, BigInt::one());
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: BigInt) {
        self.entries[i * self.cols + j] = value;
    }

    /// Column `j` as a vector (0-based).
    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    /// The submatrix on the given 0-based columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> ExactMatrix {
        let mut m = ExactMatrix::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (k, &j) in cols.iter().enumerate() {
                m.set(i, k, self.get(i, j).clone());
            }
        }
        m
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        bareiss_rank(self.rows, self.cols, self.entries.clone())
    }

    pub fn to_i64_rows(&self) -> Option<Vec<Vec<i64>>> {
        (0..self.rows).map(|i| (0..self.cols).map(|j| i64::try_from(self.get(i, j)).ok()).collect()).collect()
    }
}

/// Bareiss elimination: after each pivot step every live entry is a minor of
/// the input, and dividing by the previous pivot is exact.
fn bareiss_rank(rows: usize, cols: usize, mut a: Vec<BigInt>) -> usize {
    let at = |i: usize, j: usize| i * cols + j;
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        if rank == rows {
            break;
        }
        let Some(p) = (rank..rows).find(|&i| !a[at(i, c)].is_zero()) else {
            continue;
        };
        if p != rank {
            for j in 0..cols {
                a.swap(at(p, j), at(rank, j));
            }
        }
        let pivot = a[at(rank, c)].clone();
        for i in rank + 1..rows {
            let factor = a[at(i, c)].clone();
            for j in c + 1..cols {
                let v = (&pivot * &a[at(i, j)] - &factor * &a[at(rank, j)]) / &prev;
                a[at(i, j)] = v;
            }
            a[at(i, c)] = BigInt::zero();
        }
        prev = pivot;
        rank += 1;
    }
    rank
}

/// Rank of a list of vectors of equal length.
pub fn rank_of_vectors(vectors: &[&[BigInt]]) -> usize {
    if vectors.is_empty() {
        return 0;
    }
    let dim = vectors[0].len();
    // vectors as rows: rank is the same and rows are contiguous
    let entries = vectors.iter().flat_map(|v| v.iter().cloned()).collect();
    bareiss_rank(vectors.len(), dim, entries)
}

impl fmt::Debug for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ExactMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// Cofactor-expansion determinant, independent of the elimination path.
    fn det(m: &[Vec<i64>]) -> BigInt {
        match m.len() {
            0 => BigInt::one(),
            1 => BigInt::from(m[0][0]),
            n => (0..n)
                .map(|j| {
                    let minor: Vec<Vec<i64>> = m[1..]
                        .iter()
                        .map(|r| r.iter().enumerate().filter(|&(k, _)| k != j).map(|(_, &x)| x).collect())
                        .collect();
                    let term = BigInt::from(m[0][j]) * det(&minor);
                    if j % 2 == 0 {
                        term
                    } else {
                        -term
                    }
                })
                .sum(),
        }
    }

    /// Largest k with a non-zero k×k minor.
    fn rank_by_minors(m: &[Vec<i64>]) -> usize {
        let rows = m.len();
        let cols = m.first().map_or(0, Vec::len);
        let pick = |n: usize, k: usize| -> Vec<Vec<usize>> {
            crate::subset::k_subsets(n, k).map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect()).collect()
        };
        (1..=rows.min(cols))
            .rev()
            .find(|&k| {
                pick(rows, k).iter().any(|rs| {
                    pick(cols, k).iter().any(|cs| {
                        let sub: Vec<Vec<i64>> = rs.iter().map(|&i| cs.iter().map(|&j| m[i][j]).collect()).collect();
                        !det(&sub).is_zero()
                    })
                })
            })
            .unwrap_or(0)
    }

    #[test]
    fn identity_and_zero() {
        assert_eq!(ExactMatrix::identity(2).rank(), 2);
        assert_eq!(ExactMatrix::zeros(3, 4).rank(), 0);
        assert_eq!(ExactMatrix::zeros(0, 0).rank(), 0);
    }

    #[test]
    fn rank_deficient_with_skipped_columns() {
        let m = ExactMatrix::from_rows(&[vec![0i64, 2, 4, 1], vec![0, 1, 2, 3], vec![0, 3, 6, 4]]);
        assert_eq!(m.rank(), 2);
        let m = ExactMatrix::from_rows(&[vec![1i64, 2], vec![2, 4]]);
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn large_entries_stay_exact() {
        let big = 1i64 << 40;
        let m = ExactMatrix::from_rows(&[vec![big, big + 1], vec![big - 1, big]]);
        // det = big^2 - (big^2 - 1) = 1
        assert_eq!(m.rank(), 2);
        let m = ExactMatrix::from_rows(&[vec![big, big * 3], vec![big * 5, big * 15]]);
        assert_eq!(m.rank(), 1);
    }

    proptest! {
        #[test]
        fn bareiss_matches_minor_rank(
            rows in 1usize..5,
            cols in 1usize..5,
            seed in proptest::collection::vec(-3i64..=3, 16),
            zero_mask in any::<u16>(),
        ) {
            let m: Vec<Vec<i64>> = (0..rows)
                .map(|i| (0..cols).map(|j| {
                    let k = i * 4 + j;
                    if zero_mask >> k & 1 == 1 { 0 } else { seed[k] }
                }).collect())
                .collect();
            prop_assert_eq!(ExactMatrix::from_rows(&m).rank(), rank_by_minors(&m));
        }
    }
}

//! Exact Gaussian elimination over the rationals.
//!
//! Two shapes, both fraction-free in spirit but happy to divide (every entry
//! is a `BigRational`):
//!
//! - [`SparseMatrix`]: rows held as ordered column-to-entry maps. Built for
//!   the tall, very sparse matrices whose ranks measure graded ideal pieces;
//!   elimination keeps one reduced row per pivot column.
//! - Dense helpers ([`rank_dense`], [`kernel_basis`]) for the small systems
//!   describing line arrangements.
//!
//! Invariant: rows never store explicit zeros.

use crate::poly::Rat;
use num::Zero;
use std::collections::BTreeMap;

/// A growable sparse matrix with a fixed column count.
#[derive(Debug, Clone, Default)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<BTreeMap<usize, Rat>>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    /// Append a row given as (column, entry) pairs; zeros are dropped,
    /// duplicate columns are accumulated.
    pub fn add_row<I: IntoIterator<Item = (usize, Rat)>>(&mut self, entries: I) {
        let mut row = BTreeMap::new();
        for (c, v) in entries {
            debug_assert!(c < self.ncols, "column {c} out of {}", self.ncols);
            if v.is_zero() {
                continue;
            }
            let sum = match row.get(&c) {
                Some(old) => old + &v,
                None => v,
            };
            if sum.is_zero() {
                row.remove(&c);
            } else {
                row.insert(c, sum);
            }
        }
        self.rows.push(row);
    }

    /// Rank by left-to-right elimination. Consumes the matrix.
    pub fn rank(self) -> usize {
        let mut pivots: BTreeMap<usize, BTreeMap<usize, Rat>> = BTreeMap::new();
        for mut row in self.rows {
            while let Some((&lead, lead_val)) = row.first_key_value() {
                match pivots.get(&lead) {
                    None => {
                        // Normalize so future eliminations skip a division.
                        let inv = lead_val.recip();
                        let normalized: BTreeMap<usize, Rat> =
                            row.iter().map(|(c, v)| (*c, v * &inv)).collect();
                        pivots.insert(lead, normalized);
                        break;
                    }
                    Some(pivot_row) => {
                        let factor = lead_val.clone();
                        for (c, v) in pivot_row {
                            let delta = v * &factor;
                            let entry = row.entry(*c).or_insert_with(Rat::zero);
                            *entry -= delta;
                            if entry.is_zero() {
                                row.remove(c);
                            }
                        }
                        debug_assert!(!row.contains_key(&lead));
                    }
                }
            }
            // A row that empties out was dependent on earlier ones.
        }
        pivots.len()
    }
}

/// Rank of a dense matrix.
pub fn rank_dense(rows: &[Vec<Rat>]) -> usize {
    let mut m: Vec<Vec<Rat>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for v in m[rank][col..].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                    let delta = p * &factor;
                    *v = &*v - &delta;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Basis of the right kernel `{x : M x = 0}` of a dense matrix with `ncols`
/// columns, one vector per free column of the reduced echelon form.
pub fn kernel_basis(rows: &[Vec<Rat>], ncols: usize) -> Vec<Vec<Rat>> {
    let mut m: Vec<Vec<Rat>> = rows.iter().map(|r| {
        debug_assert_eq!(r.len(), ncols);
        r.clone()
    }).collect();
    // Reduced row echelon form, tracking pivot columns.
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = m[rank][col].recip();
        for v in m[rank].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[rank].clone();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    let delta = p * &factor;
                    *v = &*v - &delta;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let pivot_set: std::collections::BTreeSet<usize> = pivot_cols.iter().copied().collect();
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivot_set.contains(c)) {
        let mut v = vec![Rat::zero(); ncols];
        v[free] = Rat::from_integer(1.into());
        for (r, &pc) in pivot_cols.iter().enumerate() {
            v[pc] = -&m[r][free];
        }
        basis.push(v);
    }
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat_int;

    fn dense(rows: &[&[i64]]) -> Vec<Vec<Rat>> {
        rows.iter().map(|r| r.iter().map(|&x| rat_int(x)).collect()).collect()
    }

    fn sparse_from_dense(rows: &[Vec<Rat>], ncols: usize) -> SparseMatrix {
        let mut m = SparseMatrix::new(ncols);
        for r in rows {
            m.add_row(r.iter().cloned().enumerate());
        }
        m
    }

    #[test]
    fn rank_examples() {
        let m = dense(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank_dense(&m), 2);
        assert_eq!(sparse_from_dense(&m, 3).rank(), 2);
        let id = dense(&[&[1, 0], &[0, 1]]);
        assert_eq!(rank_dense(&id), 2);
        assert_eq!(rank_dense(&dense(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(SparseMatrix::new(5).rank(), 0);
    }

    #[test]
    fn kernel_examples() {
        // x + y = 0, y + z = 0 -> kernel spanned by (1, -1, 1)
        let m = dense(&[&[1, 1, 0], &[0, 1, 1]]);
        let k = kernel_basis(&m, 3);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let ratio = &v[0];
        assert!(!ratio.is_zero());
        assert_eq!(&v[1] / ratio, rat_int(-1));
        assert_eq!(&v[2] / ratio, rat_int(1));
    }

    #[test]
    fn rank_plus_nullity_is_ncols() {
        let samples: Vec<Vec<Vec<Rat>>> = vec![
            dense(&[&[1, 2, 3, 4], &[0, 0, 1, 1], &[1, 2, 4, 5]]),
            dense(&[&[2, 0], &[0, 0], &[4, 0]]),
            dense(&[&[1, 1, 1], &[1, 2, 3], &[2, 3, 4], &[0, 0, 0]]),
        ];
        for rows in samples {
            let ncols = rows[0].len();
            let r = rank_dense(&rows);
            let k = kernel_basis(&rows, ncols);
            assert_eq!(r + k.len(), ncols);
            assert_eq!(sparse_from_dense(&rows, ncols).rank(), r);
            // every kernel vector really is annihilated
            for v in &k {
                for row in &rows {
                    let dot: Rat = row.iter().zip(v).map(|(a, b)| a * b).sum();
                    assert!(dot.is_zero());
                }
            }
        }
    }

    #[test]
    fn sparse_accumulates_duplicate_columns() {
        let mut m = SparseMatrix::new(2);
        m.add_row(vec![(0, rat_int(1)), (0, rat_int(-1)), (1, rat_int(3))]);
        assert_eq!(m.nrows(), 1);
        assert_eq!(m.rank(), 1);
    }
}

use std::fmt;

use num_traits::Zero;

use crate::algebra::polynomial::Polynomial;
use crate::algebra::ring::{check_same, RingRef};
use crate::error::{Error, Result};

/// Matrix of polynomials, read as a map `O^cols -> O^rows`: column `j` is the
/// image of the `j`-th basis vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    ring: RingRef,
    rows: usize,
    cols: usize,
    entries: Vec<Vec<Polynomial>>,
}

impl PolyMatrix {
    pub fn new(ring: &RingRef, rows: usize, cols: usize, entries: Vec<Vec<Polynomial>>) -> Result<Self> {
        if entries.len() != rows {
            return Err(Error::RankMismatch {
                expected: rows,
                found: entries.len(),
            });
        }
        for row in &entries {
            if row.len() != cols {
                return Err(Error::RankMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            for p in row {
                check_same(ring, p.ring())?;
            }
        }
        Ok(PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: &RingRef, rows: usize, cols: usize) -> Self {
        PolyMatrix {
            ring: ring.clone(),
            rows,
            cols,
            entries: vec![vec![Polynomial::zero(ring); cols]; rows],
        }
    }

    pub fn identity(ring: &RingRef, n: usize) -> Self {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.entries[i][i] = Polynomial::one(ring);
        }
        m
    }

    pub fn from_columns(ring: &RingRef, rows: usize, columns: Vec<Vec<Polynomial>>) -> Result<Self> {
        let cols = columns.len();
        let mut entries = vec![Vec::with_capacity(cols); rows];
        for col in columns {
            if col.len() != rows {
                return Err(Error::RankMismatch {
                    expected: rows,
                    found: col.len(),
                });
            }
            for (i, p) in col.into_iter().enumerate() {
                entries[i].push(p);
            }
        }
        Self::new(ring, rows, cols, entries)
    }

    /// A `1 × k` matrix whose columns are the given ideal generators.
    pub fn row_vector(ring: &RingRef, gens: &[Polynomial]) -> Result<Self> {
        Self::new(ring, 1, gens.len(), vec![gens.to_vec()])
    }

    pub fn ring(&self) -> &RingRef {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Polynomial {
        &self.entries[i][j]
    }

    pub fn set(&mut self, i: usize, j: usize, p: Polynomial) {
        self.entries[i][j] = p;
    }

    pub fn entries(&self) -> &[Vec<Polynomial>] {
        &self.entries
    }

    pub fn column(&self, j: usize) -> Vec<Polynomial> {
        self.entries.iter().map(|r| r[j].clone()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Polynomial>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().flatten().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols).map(|j| self.column(j)).collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same(&self.ring, &other.ring)?;
        if self.cols != other.rows {
            return Err(Error::RankMismatch {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero(&self.ring);
                for k in 0..self.cols {
                    let (a, b) = (&self.entries[i][k], &other.entries[k][j]);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                out.entries[i][j] = acc;
            }
        }
        Ok(out)
    }

    /// First nonzero constant entry in row-major order.
    pub fn find_unit(&self) -> Option<(usize, usize)> {
        for i in 0..self.rows {
            for j in 0..self.cols {
                let p = &self.entries[i][j];
                if !p.is_zero() && p.is_constant() {
                    return Some((i, j));
                }
            }
        }
        None
    }

    pub fn has_unit_entry(&self) -> bool {
        self.find_unit().is_some()
    }

    /// Schur complement at the constant entry `u = self[i][j]`:
    /// `B'_{lm} = B_{lm} - B_{lj} B_{im} / u`, with row `i` and column `j`
    /// removed.
    pub fn eliminate_unit(&self, i: usize, j: usize) -> PolyMatrix {
        let u = self.entries[i][j]
            .constant_value()
            .filter(|c| !c.is_zero())
            .expect("unit entry");
        let inv = u.recip();
        let pivot_row: Vec<Polynomial> = self.entries[i].iter().map(|p| p.scale(&inv)).collect();
        let mut out = self.clone();
        for l in 0..self.rows {
            let a = &self.entries[l][j];
            if l == i || a.is_zero() {
                continue;
            }
            for m in 0..self.cols {
                if m == j || pivot_row[m].is_zero() {
                    continue;
                }
                out.entries[l][m] = &self.entries[l][m] - &(a * &pivot_row[m]);
            }
        }
        out.remove_row(i);
        out.remove_col(j);
        out
    }

    pub fn remove_row(&mut self, i: usize) {
        self.entries.remove(i);
        self.rows -= 1;
    }

    pub fn remove_col(&mut self, j: usize) {
        for row in &mut self.entries {
            row.remove(j);
        }
        self.cols -= 1;
    }

    /// Keeps only the listed columns, in order.
    pub fn select_columns(&self, keep: &[usize]) -> Self {
        let entries = self
            .entries
            .iter()
            .map(|r| keep.iter().map(|&j| r[j].clone()).collect())
            .collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: keep.len(),
            entries,
        }
    }

    pub fn select_rows(&self, keep: &[usize]) -> Self {
        let entries = keep.iter().map(|&i| self.entries[i].clone()).collect();
        PolyMatrix {
            ring: self.ring.clone(),
            rows: keep.len(),
            cols: self.cols,
            entries,
        }
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hconcat(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        check_same(&self.ring, &other.ring)?;
        if self.rows != other.rows {
            return Err(Error::RankMismatch {
                expected: self.rows,
                found: other.rows,
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a.iter().chain(b).cloned().collect())
            .collect();
        Ok(PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols + other.cols,
            entries,
        })
    }

    pub fn map_entries(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        PolyMatrix {
            ring: self.ring.clone(),
            rows: self.rows,
            cols: self.cols,
            entries: self
                .entries
                .iter()
                .map(|r| r.iter().map(&f).collect())
                .collect(),
        }
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.entries
            .iter()
            .map(|r| r.iter().map(|p| p.to_string()).collect())
            .collect()
    }
}

impl fmt::Display for PolyMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .entries
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(|p| p.to_string()).collect();
                format!("[{}]", cells.join(", "))
            })
            .collect();
        write!(f, "[{}]", rows.join(", "))
    }
}

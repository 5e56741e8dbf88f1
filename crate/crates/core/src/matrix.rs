use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An upper-triangular nonnegative integer matrix with no zero row or
/// column. The entry sum is the size `n` of the matchings it describes.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix", into = "RawMatrix")]
pub struct TriangularMatrix {
    rows: Vec<Vec<u32>>,
}

impl TriangularMatrix {
    pub fn new(rows: &[Vec<i64>]) -> Result<Self> {
        let k = rows.len();
        if rows.iter().any(|r| r.len() != k) {
            return Err(Error::NotSquare);
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, &t) in row.iter().enumerate() {
                if t < 0 {
                    return Err(Error::NegativeEntry { row: i + 1, col: j + 1 });
                }
                if i > j && t != 0 {
                    return Err(Error::NotUpperTriangular { row: i + 1, col: j + 1 });
                }
            }
        }
        let rows: Vec<Vec<u32>> =
            rows.iter().map(|r| r.iter().map(|&t| t as u32).collect()).collect();
        let m = TriangularMatrix { rows };
        if let Some(i) = (0..k).find(|&i| m.row_sum(i) == 0) {
            return Err(Error::ZeroRowOrColumn(format!("row {}", i + 1)));
        }
        if let Some(j) = (0..k).find(|&j| m.col_sum(j) == 0) {
            return Err(Error::ZeroRowOrColumn(format!("column {}", j + 1)));
        }
        Ok(m)
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        TriangularMatrix { rows }
    }

    pub fn identity(k: usize) -> Self {
        TriangularMatrix::from_rows_unchecked(
            (0..k).map(|i| (0..k).map(|j| u32::from(i == j)).collect()).collect(),
        )
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Entry `t_{ij}`, 0-based.
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.rows[i][j]
    }

    pub fn row_sum(&self, i: usize) -> u32 {
        self.rows[i].iter().sum()
    }

    pub fn col_sum(&self, j: usize) -> u32 {
        self.rows.iter().map(|r| r[j]).sum()
    }

    pub fn total(&self) -> u32 {
        self.rows.iter().flatten().sum()
    }

    pub fn is_zero_one(&self) -> bool {
        self.rows.iter().flatten().all(|&t| t <= 1)
    }

    pub(crate) fn first_entry_above_one(&self) -> Option<(usize, usize)> {
        let k = self.dim();
        (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .find(|&(i, j)| self.rows[i][j] > 1)
    }

    /// For all `x, y > 0`, at least one of `t_{i,j}` and `t_{i-x,j+y}` is zero.
    pub fn is_nonnesting_image(&self) -> bool {
        let k = self.dim();
        for i in 0..k {
            for j in i..k {
                if self.rows[i][j] == 0 {
                    continue;
                }
                for up in 0..i {
                    for right in j + 1..k {
                        if self.rows[up][right] != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// For all `i < i+x <= j < j+y`, at least one of `t_{i,j}` and
    /// `t_{i+x,j+y}` is zero.
    pub fn is_noncrossing_image(&self) -> bool {
        let k = self.dim();
        for i in 0..k {
            for j in i..k {
                if self.rows[i][j] == 0 {
                    continue;
                }
                for down in i + 1..=j {
                    for right in j + 1..k {
                        if self.rows[down][right] != 0 {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
pub(crate) enum RawMatrix {
    Full { k: usize, rows: Vec<Vec<i64>> },
    Rows(Vec<Vec<i64>>),
}

impl TryFrom<RawMatrix> for TriangularMatrix {
    type Error = Error;
    fn try_from(raw: RawMatrix) -> Result<Self> {
        match raw {
            RawMatrix::Full { k, rows } => {
                if rows.len() != k {
                    return Err(Error::InvalidMatrix(format!(
                        "declared k = {k} but {} rows were given",
                        rows.len()
                    )));
                }
                TriangularMatrix::new(&rows)
            }
            RawMatrix::Rows(rows) => TriangularMatrix::new(&rows),
        }
    }
}

impl From<TriangularMatrix> for RawMatrix {
    fn from(m: TriangularMatrix) -> Self {
        RawMatrix::Full {
            k: m.dim(),
            rows: m.rows.iter().map(|r| r.iter().map(|&t| t as i64).collect()).collect(),
        }
    }
}

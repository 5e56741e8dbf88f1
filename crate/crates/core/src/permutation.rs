use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation `pi(1) ... pi(n)` of `1..=n` in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<u32>")]
pub struct Permutation(Vec<u32>);

impl Permutation {
    pub fn new(values: &[i64]) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in values {
            if v < 1 || v > n as i64 {
                return Err(Error::InvalidPermutation(format!("value {v} is outside 1..={n}")));
            }
            if seen[v as usize] {
                return Err(Error::InvalidPermutation(format!("value {v} appears twice")));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation(values.iter().map(|&v| v as u32).collect()))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<u32>) -> Self {
        Permutation(values)
    }

    pub fn identity(n: usize) -> Self {
        Permutation((1..=n as u32).collect())
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn values(&self) -> &[u32] {
        &self.0
    }

    /// 1-based position of `value`.
    pub fn position_of(&self, value: u32) -> usize {
        self.0.iter().position(|&v| v == value).expect("value in range") + 1
    }
}

impl TryFrom<Vec<i64>> for Permutation {
    type Error = Error;
    fn try_from(v: Vec<i64>) -> Result<Self> {
        Permutation::new(&v)
    }
}

impl From<Permutation> for Vec<u32> {
    fn from(p: Permutation) -> Self {
        p.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation() {
        assert!(Permutation::new(&[3, 5, 1, 4, 2, 6]).is_ok());
        assert!(Permutation::new(&[]).is_ok());
        assert!(Permutation::new(&[1, 1]).is_err());
        assert!(Permutation::new(&[0, 1]).is_err());
        assert!(Permutation::new(&[1, 3]).is_err());
    }

    #[test]
    fn positions() {
        let p = Permutation::new(&[2, 3, 1]).unwrap();
        assert_eq!(p.position_of(3), 2);
        assert_eq!(Permutation::identity(3).values(), &[1, 2, 3]);
    }
}

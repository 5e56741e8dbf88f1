use crate::inversion::InversionTable;
use crate::permutation::Permutation;

/// Right to left: `a_n = pi^-1(n) - 1`, then repeat on `pi` with `n` deleted.
pub fn perm_to_inv(pi: &Permutation) -> InversionTable {
    let mut rest: Vec<u32> = pi.values().to_vec();
    let mut entries = vec![0u32; rest.len()];
    for largest in (1..=rest.len() as u32).rev() {
        let pos = rest.iter().position(|&v| v == largest).expect("permutation of 1..=n");
        entries[largest as usize - 1] = pos as u32;
        rest.remove(pos);
    }
    InversionTable::from_vec_unchecked(entries)
}

/// Inserts `1, 2, ..., n` in turn, value `k` at 0-based index `a_k`.
pub fn inv_to_perm(w: &InversionTable) -> Permutation {
    let mut values = Vec::with_capacity(w.n());
    for (k, &a) in w.entries().iter().enumerate() {
        values.insert(a as usize, k as u32 + 1);
    }
    Permutation::from_vec_unchecked(values)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[i64]) -> Permutation {
        Permutation::new(v).unwrap()
    }

    #[test]
    fn table_pairs() {
        let cases: [(&[i64], &[u32]); 6] = [
            (&[1, 2, 3], &[0, 1, 2]),
            (&[1, 3, 2], &[0, 1, 1]),
            (&[2, 1, 3], &[0, 0, 2]),
            (&[2, 3, 1], &[0, 0, 1]),
            (&[3, 1, 2], &[0, 1, 0]),
            (&[3, 2, 1], &[0, 0, 0]),
        ];
        for (perm, table) in cases {
            assert_eq!(perm_to_inv(&p(perm)).entries(), table);
            assert_eq!(inv_to_perm(&perm_to_inv(&p(perm))), p(perm));
        }
    }

    #[test]
    fn empty() {
        assert_eq!(perm_to_inv(&p(&[])).n(), 0);
    }
}

use std::cmp::Reverse;

use crate::error::{Error, Result};
use crate::poset::{FactorialPoset, Poset};

/// Relabels a (2+2)-free poset so that it is factorial and satisfies
/// `pre(i) <= pre(i+1) or suc(i) > suc(i+1)`.
///
/// Elements are sorted by `suc` descending, then `pre` ascending; ties are
/// broken by the input label, which is harmless because tied elements have
/// identical predecessor and successor sets.
pub fn canonical_labeling(p: &Poset) -> Result<FactorialPoset> {
    if !p.predecessor_sets_form_chain() {
        return Err(Error::NotTwoPlusTwoFree);
    }
    let mut order: Vec<usize> = (1..=p.n()).collect();
    order.sort_by_key(|&x| (Reverse(p.suc(x)), p.pre(x), x));
    let mut labels = vec![0; p.n()];
    for (rank, &x) in order.iter().enumerate() {
        labels[x - 1] = rank + 1;
    }
    FactorialPoset::try_from(p.relabel(&labels))
}

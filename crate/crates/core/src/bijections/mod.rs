//! The maps between inversion tables, matchings, factorial posets,
//! permutations and triangular matrices.
//!
//! Inversion tables are the hub: `f` and `f_nc` reach matchings, `g` reaches
//! factorial posets, and the permutation translation reaches `S_n`. The map
//! `psi` goes from any matching to a triangular matrix and has three partial
//! inverses, one per restricted class of matchings.

mod insertion;
mod labeling;
mod permutations;
mod posets;
mod psi;

pub use insertion::{f_inv_to_matching, f_matching_to_inv, fnc_inv_to_matching, fnc_matching_to_inv};
pub use labeling::canonical_labeling;
pub use permutations::{inv_to_perm, perm_to_inv};
pub use posets::{g_inv_to_poset, g_poset_to_inv, h_matching_to_poset, h_poset_to_matching};
pub use psi::{
    matrix_is_noncrossing_image, matrix_is_nonnesting_image, psi_inverse_nonneighbor_crossing,
    psi_inverse_nonneighbor_nesting, psi_inverse_zero_one, psi_matching_to_matrix,
};

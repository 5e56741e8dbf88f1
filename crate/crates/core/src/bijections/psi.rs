use crate::error::{Error, Result};
use crate::matching::{Arc, Matching};
use crate::matrix::TriangularMatrix;

/// `psi(M) = (t_ij)` where `t_ij` counts arcs from the `i`-th maximal
/// interval of openers to the `j`-th maximal interval of closers.
pub fn psi_matching_to_matrix(m: &Matching) -> TriangularMatrix {
    let mask = m.opener_mask();
    // interval index (0-based) of every position
    let mut interval = vec![0usize; mask.len()];
    let mut k = 0;
    for (pos, &is_opener) in mask.iter().enumerate() {
        if is_opener && (pos == 0 || !mask[pos - 1]) {
            k += 1;
        }
        interval[pos] = k - 1;
    }
    let mut rows = vec![vec![0u32; k]; k];
    for arc in m.arcs() {
        rows[interval[arc.opener as usize - 1]][interval[arc.closer as usize - 1]] += 1;
    }
    TriangularMatrix::from_rows_unchecked(rows)
}

/// How the arcs of a matrix are laid out over the interval structure.
#[derive(Clone, Copy)]
struct Layout {
    /// Openers of `O_i`, read left to right, serve columns in decreasing order.
    columns_descending: bool,
    /// Closers of `C_j`, read left to right, serve rows in decreasing order.
    rows_descending: bool,
    /// Within one `(O_i, C_j)` block the arcs nest rather than cross.
    nested_blocks: bool,
}

fn build(t: &TriangularMatrix, layout: Layout) -> Matching {
    let k = t.dim();
    let mut opener_start = vec![0u32; k];
    let mut closer_start = vec![0u32; k];
    let mut cursor = 1;
    for i in 0..k {
        opener_start[i] = cursor;
        cursor += t.row_sum(i);
        closer_start[i] = cursor;
        cursor += t.col_sum(i);
    }

    // first opener of block (i, j) within O_i
    let mut block_opener = vec![vec![0u32; k]; k];
    for i in 0..k {
        let mut next = opener_start[i];
        let cols: Vec<usize> =
            if layout.columns_descending { (i..k).rev().collect() } else { (i..k).collect() };
        for j in cols {
            block_opener[i][j] = next;
            next += t.get(i, j);
        }
    }
    let mut block_closer = vec![vec![0u32; k]; k];
    for j in 0..k {
        let mut next = closer_start[j];
        let rows: Vec<usize> =
            if layout.rows_descending { (0..=j).rev().collect() } else { (0..=j).collect() };
        for i in rows {
            block_closer[i][j] = next;
            next += t.get(i, j);
        }
    }

    let mut arcs = Vec::with_capacity(t.total() as usize);
    for i in 0..k {
        for j in i..k {
            let size = t.get(i, j);
            for s in 0..size {
                let closer_offset = if layout.nested_blocks { size - 1 - s } else { s };
                arcs.push(Arc::new(block_opener[i][j] + s, block_closer[i][j] + closer_offset));
            }
        }
    }
    Matching::from_arcs_unchecked(arcs)
}

/// The unique matching without left- or right-nestings that maps to `t`.
/// All arcs leaving one opener interval cross, and so do all arcs entering
/// one closer interval.
pub fn psi_inverse_nonneighbor_nesting(t: &TriangularMatrix) -> Matching {
    build(t, Layout { columns_descending: false, rows_descending: false, nested_blocks: false })
}

/// The unique matching without left- or right-crossings that maps to `t`.
/// Arcs sharing an opener interval or a closer interval nest.
pub fn psi_inverse_nonneighbor_crossing(t: &TriangularMatrix) -> Matching {
    build(t, Layout { columns_descending: true, rows_descending: true, nested_blocks: true })
}

/// The unique matching with no left-nesting and no right-crossing that maps
/// to the zero-one matrix `t`: arcs from one opener interval cross, arcs into
/// one closer interval nest.
pub fn psi_inverse_zero_one(t: &TriangularMatrix) -> Result<Matching> {
    if let Some((row, col)) = t.first_entry_above_one() {
        return Err(Error::NotZeroOne { row: row + 1, col: col + 1 });
    }
    let m = build(t, Layout { columns_descending: false, rows_descending: true, nested_blocks: false });
    let rec = m.arc_statistics();
    if rec.lne != 0 || rec.rcr != 0 || psi_matching_to_matrix(&m) != *t {
        return Err(Error::Inconsistent(format!("zero-one layout of {t:?} produced {m}")));
    }
    Ok(m)
}

pub fn matrix_is_nonnesting_image(t: &TriangularMatrix) -> bool {
    t.is_nonnesting_image()
}

pub fn matrix_is_noncrossing_image(t: &TriangularMatrix) -> bool {
    t.is_noncrossing_image()
}

//! Closed forms and recurrences that the enumerations are compared with.

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Coefficients of `t^0..=t^n_max` in `sum_k prod_{i=1..k} (1 - (1-t)^i)`.
///
/// Each factor has zero constant term, so terms with `k > n_max` do not
/// reach the truncation degree.
pub fn fishburn_numbers(n_max: usize) -> Vec<BigInt> {
    let len = n_max + 1;
    let mul = |a: &[BigInt], b: &[BigInt]| {
        let mut out = vec![BigInt::zero(); len];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().take(len - i) {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut one_minus_t = vec![BigInt::zero(); len];
    one_minus_t[0] = BigInt::one();
    if len > 1 {
        one_minus_t[1] = -BigInt::one();
    }

    let mut sum = vec![BigInt::zero(); len];
    sum[0] = BigInt::one();
    let mut product = sum.clone();
    let mut power = sum.clone(); // (1-t)^i
    for _ in 1..=n_max {
        power = mul(&power, &one_minus_t);
        let mut factor: Vec<BigInt> = power.iter().map(|c| -c).collect();
        factor[0] += 1;
        product = mul(&product, &factor);
        for (s, p) in sum.iter_mut().zip(&product) {
            *s += p;
        }
    }
    sum
}

pub fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}

/// `(2n-1)!!`, the number of matchings on `[2n]`.
pub fn double_factorial_odd(n: usize) -> u128 {
    (1..=n as u128).map(|i| 2 * i - 1).product()
}

pub fn catalan(n: usize) -> u128 {
    // C_{i+1} = C_i * 2(2i+1) / (i+2)
    (0..n as u128).fold(1, |c, i| c * 2 * (2 * i + 1) / (i + 2))
}

/// Row `n` of the second-order Eulerian triangle, `k = 0..n-1`, from
/// `E(n,k) = (k+1) E(n-1,k) + (2n-1-k) E(n-1,k-1)`. Row 0 is `(1)`.
pub fn second_order_eulerian(n: usize) -> Vec<u64> {
    let mut row = vec![1u64];
    for m in 2..=n as u64 {
        let prev = row;
        row = (0..m)
            .map(|k| {
                let stay = prev.get(k as usize).map_or(0, |&e| (k + 1) * e);
                let shift = if k == 0 { 0 } else { (2 * m - 1 - k) * prev[k as usize - 1] };
                stay + shift
            })
            .collect();
    }
    row
}

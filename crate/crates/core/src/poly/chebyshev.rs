//! Chebyshev polynomials of the first kind.

use num_bigint::BigInt;
use num_complex::Complex64;

use super::IntPoly;

/// Integer coefficients of `T_k` from `T_{k+1} = 2x T_k - T_{k-1}`.
pub fn chebyshev_t(k: usize) -> IntPoly {
    chebyshev_table(k).pop().expect("table holds T_0..=T_k")
}

/// `[T_0, T_1, ..., T_k]`.
pub fn chebyshev_table(k: usize) -> Vec<IntPoly> {
    let two_x = IntPoly::from_i64(&[0, 2]);
    let mut table = vec![IntPoly::one()];
    if k >= 1 {
        table.push(IntPoly::from_i64(&[0, 1]));
    }
    for i in 2..=k {
        let next = &(&two_x * &table[i - 1]) - &table[i - 2];
        table.push(next);
    }
    table
}

/// `T_n(w)` at a complex point via the three-term recurrence.
pub fn chebyshev_t_complex(n: u64, w: Complex64) -> Complex64 {
    let (mut prev, mut cur) = (Complex64::new(1.0, 0.0), w);
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = 2.0 * w * cur - prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// `T_n(x)` at an integer point, exactly.
pub fn chebyshev_t_integer(n: u64, x: &BigInt) -> BigInt {
    let (mut prev, mut cur) = (BigInt::from(1), x.clone());
    if n == 0 {
        return prev;
    }
    for _ in 1..n {
        let next = BigInt::from(2) * x * &cur - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

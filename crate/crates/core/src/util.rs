//! Small integer helpers.

/// `C(n, k)`, zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// `C(n, k)` for a possibly negative `n`, with the convention that it is zero
/// whenever `n < k`.
pub fn binomial_signed(n: i64, k: usize) -> u128 {
    if n < 0 {
        0
    } else {
        binomial(n as usize, k)
    }
}

pub fn gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

//! Integer sequences: divisors, Möbius, factorials, binomials, Bernoulli numbers.

use super::coef::BigRat;
use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

pub fn mobius(n: u32) -> i64 {
    assert!(n > 0);
    let mut n = n;
    let mut k = 0;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            k += 1;
        }
        p += 1;
    }
    if n > 1 {
        k += 1;
    }
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, b| a * BigInt::from(b))
}

pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut r = BigInt::one();
    for i in 0..k {
        r = r * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    r
}

/// Sum of the `k`-th powers of the divisors of `n`.
pub fn sigma(k: u32, n: u32) -> BigInt {
    divisors(n).into_iter().map(|d| BigInt::from(d).pow(k)).sum()
}

/// Bernoulli numbers with `B_1 = -1/2`, from `sum_{j<=k} C(k+1, j) B_j = 0`.
pub fn bernoulli(k: usize) -> BigRat {
    bernoulli_table(k)[k].clone()
}

pub fn bernoulli_table(k: usize) -> Vec<BigRat> {
    let mut b: Vec<BigRat> = Vec::with_capacity(k + 1);
    b.push(BigRat::one());
    for m in 1..=k {
        let mut s = BigRat::zero();
        for (j, bj) in b.iter().enumerate() {
            s += BigRat::from_integer(binomial(m as i64 + 1, j as i64)) * bj;
        }
        b.push(-s / BigRat::from_integer(BigInt::from(m as i64 + 1)));
    }
    b
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coef::rat;

    #[test]
    fn mobius_values() {
        let v: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(v, vec![1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn bernoulli_values() {
        assert_eq!(bernoulli(0), rat(1, 1));
        assert_eq!(bernoulli(1), rat(-1, 2));
        assert_eq!(bernoulli(2), rat(1, 6));
        assert_eq!(bernoulli(3), rat(0, 1));
        assert_eq!(bernoulli(4), rat(-1, 30));
        assert_eq!(bernoulli(12), rat(-691, 2730));
    }

    #[test]
    fn bernoulli_matches_generating_function() {
        // x/(e^x - 1) = sum B_k x^k / k!, i.e. (sum_{j>=0} x^j/(j+1)!) * (sum B_k x^k/k!) = 1
        let n = 14;
        let b = bernoulli_table(n);
        for m in 0..=n {
            let mut s = BigRat::zero();
            for k in 0..=m {
                let j = m - k;
                s += &b[k] / BigRat::from_integer(factorial(k as u32) * factorial(j as u32 + 1));
            }
            let expect = if m == 0 { BigRat::one() } else { BigRat::zero() };
            assert_eq!(s, expect, "order {m}");
        }
    }

    #[test]
    fn sigma_values() {
        let s: Vec<i64> = (1..=6).map(|n| i64::try_from(sigma(1, n)).unwrap()).collect();
        assert_eq!(s, vec![1, 3, 4, 7, 6, 12]);
    }
}

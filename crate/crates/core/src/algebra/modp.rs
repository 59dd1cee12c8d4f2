//! Word-size prime field arithmetic used by the modular gcd routines.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use std::sync::OnceLock;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(!a.is_multiple_of(p));
    pow_mod(a, p - 2, p)
}

/// Deterministic Miller-Rabin for 64-bit integers.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &sp in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(sp) {
            return n == sp;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes just below 2^62, largest first.
pub fn big_primes() -> &'static [u64] {
    static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();
    PRIMES.get_or_init(|| {
        let mut out = Vec::with_capacity(256);
        let mut n = (1u64 << 62) - 1;
        while out.len() < 256 {
            if is_prime_u64(n) {
                out.push(n);
            }
            n -= 2;
        }
        out
    })
}

pub fn reduce(x: &BigInt, p: u64) -> u64 {
    let pb = BigInt::from(p);
    x.mod_floor(&pb).to_u64().expect("residue fits in u64")
}

/// Chinese remaindering of `r mod m` with `s mod p`, giving a residue mod `m*p` in `[0, m*p)`.
pub fn crt(r: &BigInt, m: &BigInt, s: u64, p: u64) -> BigInt {
    let rm = reduce(r, p);
    let mm = reduce(m, p);
    let t = mul_mod(sub_mod(s, rm, p), inv_mod(mm, p), p);
    r + m * BigInt::from(t)
}

/// Representative of `x mod m` in the symmetric range `(-m/2, m/2]`.
pub fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    let twice: BigInt = &r * 2;
    if twice > *m {
        r - m
    } else {
        r
    }
}

pub fn is_small_prime(p: u64) -> bool {
    is_prime_u64(p)
}

pub fn bigint_is_zero_mod(x: &BigInt, p: u64) -> bool {
    if x.is_zero() {
        return true;
    }
    reduce(&x.abs(), p) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_are_prime() {
        let ps = big_primes();
        assert!(ps.len() >= 64);
        assert!(ps.windows(2).all(|w| w[0] > w[1]));
        assert!(is_prime_u64(1_000_000_007));
        assert!(!is_prime_u64(1_000_000_007u64 * 3));
    }

    #[test]
    fn crt_roundtrip() {
        let p = big_primes()[0];
        let q = big_primes()[1];
        let x = BigInt::from(-123456789012345678i64) * BigInt::from(97);
        let m = BigInt::from(p);
        let r = crt(&BigInt::from(reduce(&x, p)), &m, reduce(&x, q), q);
        let mq = m * BigInt::from(q);
        assert_eq!(symmetric(&r, &mq), x);
    }
}

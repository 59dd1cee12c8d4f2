//! Graded power series with a monoid of monomials in each degree, and the
//! series `log`/`exp` and plethystic `Log`/`Exp` built on them.
//!
//! A series is a `Vec<Hom<K, C>>` whose `n`-th entry is the homogeneous part
//! of degree `n`; Adams operations send degree `n` to degree `d*n`.

use super::coef::{rat, BigRat, Coef};
use super::numbers::{divisors, mobius};
use crate::error::{Error, Result};
use std::collections::BTreeMap;

pub trait Monomial: Ord + Clone + Send + Sync + std::fmt::Debug {
    fn unit() -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn adams(&self, d: u32) -> Self;
}

/// The trivial monoid, for plain series in one variable.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub struct Unit;

impl Monomial for Unit {
    fn unit() -> Self {
        Unit
    }
    fn mul(&self, _: &Self) -> Self {
        Unit
    }
    fn adams(&self, _: u32) -> Self {
        Unit
    }
}

/// Exponent vectors under addition, for series in several commuting variables.
impl Monomial for Vec<u32> {
    fn unit() -> Self {
        Vec::new()
    }
    fn mul(&self, o: &Self) -> Self {
        let n = self.len().max(o.len());
        let mut v: Vec<u32> = (0..n).map(|i| self.get(i).unwrap_or(&0) + o.get(i).unwrap_or(&0)).collect();
        while v.last() == Some(&0) {
            v.pop();
        }
        v
    }
    fn adams(&self, d: u32) -> Self {
        self.iter().map(|e| e * d).collect()
    }
}

#[derive(Clone, PartialEq, Debug)]
pub struct Hom<K: Monomial, C: Coef> {
    pub terms: BTreeMap<K, C>,
}

impl<K: Monomial, C: Coef> Default for Hom<K, C> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Monomial, C: Coef> Hom<K, C> {
    pub fn zero() -> Self {
        Hom { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::single(K::unit(), C::one())
    }

    pub fn single(k: K, c: C) -> Self {
        let mut h = Self::zero();
        h.add_term(k, c);
        h
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, k: K, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&k) {
            Some(e) => {
                *e = e.add(&c);
                if e.is_zero() {
                    self.terms.remove(&k);
                }
            }
            None => {
                self.terms.insert(k, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (k, c) in &o.terms {
            r.add_term(k.clone(), c.clone());
        }
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Hom { terms: self.terms.iter().map(|(k, c)| (k.clone(), c.neg())).collect() }
    }

    pub fn scale(&self, r: &BigRat) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.scale(r));
        }
        out
    }

    pub fn scale_by(&self, x: &C) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.clone(), c.mul(x));
        }
        out
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut out = Self::zero();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &o.terms {
                out.add_term(k1.mul(k2), c1.mul(c2));
            }
        }
        out
    }

    pub fn adams(&self, d: u32) -> Self {
        let mut out = Self::zero();
        for (k, c) in &self.terms {
            out.add_term(k.adams(d), c.adams(d));
        }
        out
    }
}

pub type Series<K, C> = Vec<Hom<K, C>>;

pub fn zero_series<K: Monomial, C: Coef>(n: usize) -> Series<K, C> {
    vec![Hom::zero(); n + 1]
}

pub fn series_add<K: Monomial, C: Coef>(a: &Series<K, C>, b: &Series<K, C>) -> Series<K, C> {
    a.iter().zip(b.iter()).map(|(x, y)| x.add(y)).collect()
}

pub fn series_mul<K: Monomial, C: Coef>(a: &Series<K, C>, b: &Series<K, C>) -> Series<K, C> {
    let n = a.len().min(b.len());
    let mut out = zero_series(n - 1);
    for i in 0..n {
        if a[i].is_zero() {
            continue;
        }
        for j in 0..n - i {
            if !b[j].is_zero() {
                out[i + j] = out[i + j].add(&a[i].mul(&b[j]));
            }
        }
    }
    out
}

pub fn series_adams<K: Monomial, C: Coef>(a: &Series<K, C>, d: u32) -> Series<K, C> {
    let n = a.len() - 1;
    let mut out = zero_series(n);
    for (i, h) in a.iter().enumerate() {
        let j = i * d as usize;
        if j > n {
            break;
        }
        out[j] = h.adams(d);
    }
    out
}

pub fn series_scale<K: Monomial, C: Coef>(a: &Series<K, C>, r: &BigRat) -> Series<K, C> {
    a.iter().map(|h| h.scale(r)).collect()
}

fn is_unit_piece<K: Monomial, C: Coef>(h: &Hom<K, C>) -> bool {
    h.terms.len() == 1 && h.terms.get(&K::unit()).is_some_and(|c| c.is_one())
}

/// `log f` for `f` with constant term 1.
pub fn series_log<K: Monomial, C: Coef>(f: &Series<K, C>) -> Result<Series<K, C>> {
    if !is_unit_piece(&f[0]) {
        return Err(Error::ConstantTerm("1"));
    }
    let n = f.len() - 1;
    let mut l: Series<K, C> = zero_series(n);
    for m in 1..=n {
        let mut acc = f[m].scale(&rat(m as i64, 1));
        for j in 1..m {
            if l[j].is_zero() || f[m - j].is_zero() {
                continue;
            }
            acc = acc.sub(&l[j].mul(&f[m - j]).scale(&rat(j as i64, 1)));
        }
        l[m] = acc.scale(&rat(1, m as i64));
    }
    Ok(l)
}

/// `exp g` for `g` with zero constant term.
pub fn series_exp<K: Monomial, C: Coef>(g: &Series<K, C>) -> Result<Series<K, C>> {
    if !g[0].is_zero() {
        return Err(Error::ConstantTerm("0"));
    }
    let n = g.len() - 1;
    let mut e: Series<K, C> = zero_series(n);
    e[0] = Hom::one();
    for m in 1..=n {
        let mut acc = Hom::zero();
        for j in 1..=m {
            if g[j].is_zero() || e[m - j].is_zero() {
                continue;
            }
            acc = acc.add(&g[j].mul(&e[m - j]).scale(&rat(j as i64, 1)));
        }
        e[m] = acc.scale(&rat(1, m as i64));
    }
    Ok(e)
}

/// `Log f = sum_d mu(d)/d psi_d(log f)` for `f` with constant term 1.
pub fn pleth_log<K: Monomial, C: Coef>(f: &Series<K, C>) -> Result<Series<K, C>> {
    let l = series_log(f)?;
    let n = f.len() - 1;
    let mut out: Series<K, C> = zero_series(n);
    for r in 1..=n {
        for d in divisors(r as u32) {
            let mu = mobius(d);
            if mu == 0 {
                continue;
            }
            let piece = &l[r / d as usize];
            if piece.is_zero() {
                continue;
            }
            out[r] = out[r].add(&piece.adams(d).scale(&rat(mu, d as i64)));
        }
    }
    Ok(out)
}

/// `Exp g = exp(sum_d psi_d(g)/d)` for `g` with zero constant term.
pub fn pleth_exp<K: Monomial, C: Coef>(g: &Series<K, C>) -> Result<Series<K, C>> {
    if !g[0].is_zero() {
        return Err(Error::ConstantTerm("0"));
    }
    let n = g.len() - 1;
    let mut s: Series<K, C> = zero_series(n);
    for d in 1..=n as u32 {
        let a = series_adams(g, d);
        s = series_add(&s, &series_scale(&a, &rat(1, d as i64)));
    }
    series_exp(&s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn scalar(v: &[i64]) -> Series<Unit, BigRat> {
        v.iter().map(|&c| Hom::single(Unit, rat(c, 1))).collect()
    }

    #[test]
    fn exp_log_roundtrip() {
        let f = scalar(&[1, 3, -2, 5, 7, 0, 1]);
        let l = series_log(&f).unwrap();
        assert_eq!(series_exp(&l).unwrap(), f);
        let g = pleth_log(&f).unwrap();
        assert_eq!(pleth_exp(&g).unwrap(), f);
    }

    #[test]
    fn exp_of_t_is_geometric() {
        let g = scalar(&[0, 1, 0, 0, 0, 0]);
        assert_eq!(pleth_exp(&g).unwrap(), scalar(&[1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn log_of_partition_generating_function() {
        // sum p(n) T^n has Log sum_{n>=1} T^n
        let p = scalar(&[1, 1, 2, 3, 5, 7, 11, 15, 22]);
        assert_eq!(pleth_log(&p).unwrap(), scalar(&[0, 1, 1, 1, 1, 1, 1, 1, 1]));
    }

    #[test]
    fn multivariate_monomials() {
        // Exp(X_1 + X_2) = 1/((1-X_1)(1-X_2)) up to total degree 3
        let mut g: Series<Vec<u32>, BigRat> = zero_series(3);
        g[1].add_term(vec![1], rat(1, 1));
        g[1].add_term(vec![0, 1], rat(1, 1));
        let e = pleth_exp(&g).unwrap();
        for (d, h) in e.iter().enumerate() {
            assert_eq!(h.terms.len(), d + 1);
            assert!(h.terms.values().all(|c| *c == rat(1, 1)));
        }
    }

    #[test]
    fn constant_term_errors() {
        let f = scalar(&[2, 1]);
        assert!(series_log(&f).is_err());
        assert!(series_exp(&f).is_err());
    }
}

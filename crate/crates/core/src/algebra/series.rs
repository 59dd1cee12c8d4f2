//! Truncated power series in one variable `T` with coefficients in a `Coef` field.

use super::coef::{BigRat, Coef};
use super::graded::{self, Hom, Series, Unit};
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Debug)]
pub struct TruncSeries<C: Coef> {
    coeffs: Vec<C>,
}

impl<C: Coef> TruncSeries<C> {
    /// Pads with zeros or truncates to order `n`.
    pub fn new(mut coeffs: Vec<C>, n: usize) -> Self {
        coeffs.resize(n + 1, C::zero());
        TruncSeries { coeffs }
    }

    pub fn zero(n: usize) -> Self {
        Self::new(Vec::new(), n)
    }

    pub fn one(n: usize) -> Self {
        Self::new(vec![C::one()], n)
    }

    /// `c T^k`.
    pub fn monomial(c: C, k: usize, n: usize) -> Self {
        let mut s = Self::zero(n);
        if k <= n {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn set(&mut self, i: usize, c: C) {
        if i <= self.order() {
            self.coeffs[i] = c;
        }
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self::new(self.coeffs.clone(), n)
    }

    fn check(&self, o: &Self) -> Result<()> {
        if self.order() != o.order() {
            return Err(Error::Truncation { need: self.order(), have: o.order() });
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        Self::new((0..=n).map(|i| self.coeffs[i].add(&o.coeffs[i])).collect(), n)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|c| c.neg()).collect() }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect() }
    }

    pub fn scale_rat(&self, r: &BigRat) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|x| x.scale(r)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.order().min(o.order());
        let mut out = vec![C::zero(); n + 1];
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                if !o.coeffs[j].is_zero() {
                    out[i + j] = out[i + j].add(&self.coeffs[i].mul(&o.coeffs[j]));
                }
            }
        }
        TruncSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inv(&self) -> Result<Self> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::ConstantTerm("nonzero"));
        }
        let n = self.order();
        let inv0 = C::one().div(a0);
        let mut b = vec![C::zero(); n + 1];
        b[0] = inv0.clone();
        for m in 1..=n {
            let mut s = C::zero();
            for j in 1..=m {
                if !self.coeffs[j].is_zero() {
                    s = s.add(&self.coeffs[j].mul(&b[m - j]));
                }
            }
            b[m] = s.mul(&inv0).neg();
        }
        Ok(TruncSeries { coeffs: b })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    fn to_graded(&self) -> Series<Unit, C> {
        self.coeffs.iter().map(|c| Hom::single(Unit, c.clone())).collect()
    }

    fn from_graded(s: &Series<Unit, C>) -> Self {
        TruncSeries { coeffs: s.iter().map(|h| h.terms.get(&Unit).cloned().unwrap_or_else(C::zero)).collect() }
    }

    /// `log f`; requires `f(0) = 1`.
    pub fn log(&self) -> Result<Self> {
        Ok(Self::from_graded(&graded::series_log(&self.to_graded())?))
    }

    /// `exp g`; requires `g(0) = 0`.
    pub fn exp(&self) -> Result<Self> {
        Ok(Self::from_graded(&graded::series_exp(&self.to_graded())?))
    }

    /// `f^e = exp(e log f)`; requires `f(0) = 1`.
    pub fn pow(&self, e: &C) -> Result<Self> {
        self.log()?.scale(e).exp()
    }

    /// Plethystic logarithm; requires `f(0) = 1`.
    pub fn pleth_log(&self) -> Result<Self> {
        Ok(Self::from_graded(&graded::pleth_log(&self.to_graded())?))
    }

    /// Plethystic exponential; requires `g(0) = 0`.
    pub fn pleth_exp(&self) -> Result<Self> {
        Ok(Self::from_graded(&graded::pleth_exp(&self.to_graded())?))
    }

    /// `psi_d`: `T -> T^d` together with the Adams operation on coefficients.
    pub fn adams(&self, d: u32) -> Self {
        Self::from_graded(&graded::series_adams(&self.to_graded(), d))
    }

    /// `f(T^k)` without touching coefficients.
    pub fn inflate(&self, k: usize) -> Self {
        let n = self.order();
        let mut out = vec![C::zero(); n + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i * k > n {
                break;
            }
            out[i * k] = c.clone();
        }
        TruncSeries { coeffs: out }
    }

    pub fn map<D: Coef>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<D: Coef>(&self, f: impl Fn(&C) -> Result<D>) -> Result<TruncSeries<D>> {
        Ok(TruncSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    /// Index and values of the first coefficient where the two series differ.
    pub fn first_difference(&self, o: &Self) -> Option<(usize, C, C)> {
        let n = self.order().min(o.order());
        (0..=n).find(|&i| self.coeffs[i] != o.coeffs[i]).map(|i| (i, self.coeffs[i].clone(), o.coeffs[i].clone()))
    }

    pub fn same_order(&self, o: &Self) -> Result<()> {
        self.check(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coef::rat;
    use crate::algebra::laurent::{LaurentPoly2, Vars};
    use crate::algebra::ratfunc::RatFunc2;

    fn q() -> RatFunc2 {
        RatFunc2::x()
    }

    fn one_minus_t(n: usize) -> TruncSeries<RatFunc2> {
        TruncSeries::new(vec![RatFunc2::one(), RatFunc2::int(-1)], n)
    }

    #[test]
    fn generalized_binomial() {
        let f = one_minus_t(4).pow(&q().neg()).unwrap();
        let expect = LaurentPoly2::from_int_terms(Vars::QT, &[((2, 0), 1), ((1, 0), 1)]);
        let expect = RatFunc2::from_poly(&expect).scale(&rat(1, 2));
        assert_eq!(f.coeff(2), &expect);
    }

    #[test]
    fn zero_exponent_and_inverse_powers() {
        let f = one_minus_t(5);
        assert_eq!(f.pow(&RatFunc2::zero()).unwrap(), TruncSeries::one(5));
        let a = f.pow(&q().neg()).unwrap();
        let b = f.pow(&q()).unwrap();
        assert_eq!(a.mul(&b), TruncSeries::one(5));
    }

    #[test]
    fn pow_rejects_bad_constant() {
        let f: TruncSeries<BigRat> = TruncSeries::new(vec![rat(2, 1), rat(1, 1)], 3);
        assert!(f.pow(&rat(1, 2)).is_err());
    }

    #[test]
    fn inverse_of_geometric() {
        let f: TruncSeries<BigRat> = TruncSeries::new(vec![rat(1, 1), rat(-1, 1)], 6);
        assert_eq!(f.inv().unwrap(), TruncSeries::new(vec![rat(1, 1); 7], 6));
    }

    #[test]
    fn adams_on_coefficients() {
        let f = TruncSeries::new(vec![RatFunc2::zero(), q()], 4);
        let g = f.adams(2);
        assert_eq!(g.coeff(2), &q().pow(2));
        assert!(g.coeff(1).is_zero());
    }
}

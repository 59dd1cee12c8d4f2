//! Exact rational functions in two variables, kept in canonical form.
//!
//! A value is `c * x^a * y^b * N / D` where `N` and `D` are coprime primitive
//! integer polynomials, neither divisible by `x` or `y`, each with positive
//! lex-leading coefficient. Monomials are units of the Laurent ring, so this
//! representation is unique.

use super::coef::{self, BigRat};
use super::laurent::{LaurentPoly2, Vars};
use super::zpoly::ZPoly2;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct RatFunc2 {
    c: BigRat,
    sh: (i32, i32),
    num: ZPoly2,
    den: ZPoly2,
}

fn r2b(r: &BigRat) -> BigRat {
    r.clone()
}

impl RatFunc2 {
    pub fn zero() -> Self {
        RatFunc2 { c: BigRat::zero(), sh: (0, 0), num: ZPoly2::zero(), den: ZPoly2::one() }
    }

    pub fn one() -> Self {
        Self::constant(BigRat::one())
    }

    pub fn constant(c: BigRat) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc2 { c, sh: (0, 0), num: ZPoly2::one(), den: ZPoly2::one() }
    }

    pub fn int(n: i64) -> Self {
        Self::constant(BigRat::from_integer(BigInt::from(n)))
    }

    /// `c x^a y^b`.
    pub fn monomial(c: BigRat, a: i32, b: i32) -> Self {
        let mut r = Self::constant(c);
        if !r.is_zero() {
            r.sh = (a, b);
        }
        r
    }

    /// The first variable.
    pub fn x() -> Self {
        Self::monomial(BigRat::one(), 1, 0)
    }

    /// The second variable.
    pub fn y() -> Self {
        Self::monomial(BigRat::one(), 0, 1)
    }

    pub fn from_poly(p: &LaurentPoly2) -> Self {
        let (c, sh, num) = p.to_primitive();
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc2 { c, sh, num, den: ZPoly2::one() }
    }

    pub fn from_frac(num: &LaurentPoly2, den: &LaurentPoly2) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (cn, shn, n) = num.to_primitive();
        if cn.is_zero() {
            return Ok(Self::zero());
        }
        let (cd, shd, d) = den.to_primitive();
        Ok(Self::normalize(cn / cd, (shn.0 - shd.0, shn.1 - shd.1), n, d))
    }

    /// Canonical form from arbitrary integer numerator and nonzero denominator.
    fn normalize(c: BigRat, sh: (i32, i32), num: ZPoly2, den: ZPoly2) -> Self {
        if num.is_zero() || c.is_zero() {
            return Self::zero();
        }
        let (nz, nw) = num.valuations();
        let (dz, dw) = den.valuations();
        let num = if nz > 0 || nw > 0 { num.shift_down(nz, nw) } else { num };
        let den = if dz > 0 || dw > 0 { den.shift_down(dz, dw) } else { den };
        let sh = (sh.0 + nz as i32 - dz as i32, sh.1 + nw as i32 - dw as i32);
        let (num, den) = if den.is_constant() || num.is_constant() {
            (num, den)
        } else {
            let g = ZPoly2::gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
            }
        };
        let (cn, num) = num.primitive();
        let (cd, den) = den.primitive();
        RatFunc2 { c: c * BigRat::new(cn, cd), sh, num, den }
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one() && self.sh.0 >= 0 && self.sh.1 >= 0
    }

    /// Laurent polynomial when the denominator is a monomial.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn num(&self, vars: Vars) -> LaurentPoly2 {
        LaurentPoly2::from_zpoly2(vars, &self.c, self.sh, &self.num)
    }

    pub fn den(&self, vars: Vars) -> LaurentPoly2 {
        LaurentPoly2::from_zpoly2(vars, &BigRat::one(), (0, 0), &self.den)
    }

    pub fn to_laurent(&self, vars: Vars) -> Option<LaurentPoly2> {
        if self.is_laurent() {
            Some(self.num(vars))
        } else {
            None
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let sh = (self.sh.0.min(o.sh.0), self.sh.1.min(o.sh.1));
        let n1 = self.num.shift_up((self.sh.0 - sh.0) as usize, (self.sh.1 - sh.1) as usize);
        let n2 = o.num.shift_up((o.sh.0 - sh.0) as usize, (o.sh.1 - sh.1) as usize);
        let (a1, b1) = (self.c.numer(), self.c.denom());
        let (a2, b2) = (o.c.numer(), o.c.denom());
        let k1 = a1 * b2;
        let k2 = a2 * b1;
        let scale = BigRat::new(BigInt::one(), b1 * b2);
        if self.den == o.den {
            let t = n1.scale(&k1).add(&n2.scale(&k2));
            return Self::normalize(scale, sh, t, self.den.clone());
        }
        if self.den.is_one() {
            let t = n1.scale(&k1).mul(&o.den).add(&n2.scale(&k2));
            return Self::normalize_coprime_den(scale, sh, t, o.den.clone());
        }
        if o.den.is_one() {
            let t = n1.scale(&k1).add(&n2.scale(&k2).mul(&self.den));
            return Self::normalize_coprime_den(scale, sh, t, self.den.clone());
        }
        let g = ZPoly2::gcd(&self.den, &o.den);
        let d1 = self.den.div_exact(&g).expect("gcd divides");
        let d2 = o.den.div_exact(&g).expect("gcd divides");
        let t = n1.scale(&k1).mul(&d2).add(&n2.scale(&k2).mul(&d1));
        Self::normalize(scale, sh, t, d1.mul(&o.den))
    }

    /// Normalization when the numerator is known coprime to the denominator
    /// (sum `a/1 + b/d` with `gcd(b, d) = 1`).
    fn normalize_coprime_den(c: BigRat, sh: (i32, i32), num: ZPoly2, den: ZPoly2) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (nz, nw) = num.valuations();
        let num = if nz > 0 || nw > 0 { num.shift_down(nz, nw) } else { num };
        let sh = (sh.0 + nz as i32, sh.1 + nw as i32);
        let (cn, num) = num.primitive();
        RatFunc2 { c: c * BigRat::from_integer(cn), sh, num, den }
    }

    pub fn neg(&self) -> Self {
        let mut r = self.clone();
        r.c = -r.c;
        r
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let c = &self.c * &o.c;
        let sh = (self.sh.0 + o.sh.0, self.sh.1 + o.sh.1);
        let (n1, d2) = cancel(&self.num, &o.den);
        let (n2, d1) = cancel(&o.num, &self.den);
        let num = n1.mul(&n2);
        let den = d1.mul(&d2);
        let (cn, num) = num.primitive();
        let (cd, den) = den.primitive();
        RatFunc2 { c: c * BigRat::new(cn, cd), sh, num, den }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        let (cn, num) = self.den.primitive();
        let (cd, den) = self.num.primitive();
        Ok(RatFunc2 { c: BigRat::new(cn, cd) / &self.c, sh: (-self.sh.0, -self.sh.1), num, den })
    }

    pub fn div(&self, o: &Self) -> Result<Self> {
        Ok(self.mul(&o.inv()?))
    }

    pub fn scale(&self, r: &BigRat) -> Self {
        if r.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let mut out = self.clone();
        out.c = &out.c * r;
        out
    }

    pub fn pow(&self, e: u32) -> Self {
        <Self as coef::Coef>::pow(self, e)
    }

    /// `x -> x^d, y -> y^d`.
    pub fn inflate(&self, d: u32) -> Self {
        if d == 1 || self.is_zero() {
            return self.clone();
        }
        let di = d as i32;
        let num = self.num.inflate(d as usize);
        let den = self.den.inflate(d as usize);
        Self::normalize(r2b(&self.c), (self.sh.0 * di, self.sh.1 * di), num, den)
    }

    /// Exchange the two variables.
    pub fn swap(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::normalize(self.c.clone(), (self.sh.1, self.sh.0), self.num.swap_vars(), self.den.swap_vars())
    }

    /// Substitute `x -> sx*x`, `y -> sy*y` with `sx, sy` in {+1,-1}.
    pub fn sign_flip(&self, sx: bool, sy: bool) -> Self {
        let v = Vars::ZW;
        let n = self.num(v).sign_flip(sx, sy);
        let d = self.den(v).sign_flip(sx, sy);
        Self::from_frac(&n, &d).expect("nonzero denominator")
    }

    /// Evaluate numerator and denominator at field elements `x`, `y` of `C`.
    pub fn eval<C: coef::Coef>(&self, x: &C, y: &C) -> Result<C> {
        if self.is_zero() {
            return Ok(C::zero());
        }
        let d = eval_zpoly2(&self.den, x, y);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        let mono = |v: &C, e: i32| -> Result<C> {
            if e < 0 && v.is_zero() {
                return Err(Error::Pole);
            }
            Ok(v.powi(e))
        };
        let n = eval_zpoly2(&self.num, x, y).mul(&mono(x, self.sh.0)?).mul(&mono(y, self.sh.1)?).scale(&self.c);
        Ok(n.div(&d))
    }

    /// Substitute rational functions for the two variables.
    pub fn substitute(&self, x: &RatFunc2, y: &RatFunc2) -> Result<RatFunc2> {
        self.eval(x, y)
    }

    pub fn to_json(&self, vars: Vars) -> Value {
        json!({"num": self.num(vars).to_json(), "den": self.den(vars).to_json()})
    }

    pub fn from_json(v: &Value) -> Result<(Self, Vars)> {
        let n = LaurentPoly2::from_json(v.get("num").ok_or_else(|| Error::Parse("missing num".into()))?)?;
        let d = LaurentPoly2::from_json(v.get("den").ok_or_else(|| Error::Parse("missing den".into()))?)?;
        Ok((Self::from_frac(&n, &d)?, n.vars))
    }

    pub fn display(&self, vars: Vars) -> String {
        let n = self.num(vars);
        if self.den.is_one() {
            return n.to_string();
        }
        format!("({})/({})", n, self.den(vars))
    }

    /// Numerator and denominator sizes, useful for diagnostics.
    pub fn size(&self) -> (usize, usize) {
        (self.num.nterms(), self.den.nterms())
    }

    /// Scalar factor `c` of the canonical form.
    pub fn scalar(&self) -> &BigRat {
        &self.c
    }

    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.is_one() && self.sh == (0, 0)
    }

    /// Value as a rational number when constant.
    pub fn as_rational(&self) -> Option<BigRat> {
        if self.is_zero() {
            return Some(BigRat::zero());
        }
        if self.is_constant() {
            Some(self.c.clone())
        } else {
            None
        }
    }

    pub fn is_negative_scalar(&self) -> bool {
        self.c.is_negative()
    }
}

fn cancel(n: &ZPoly2, d: &ZPoly2) -> (ZPoly2, ZPoly2) {
    if n.is_constant() || d.is_constant() {
        return (n.clone(), d.clone());
    }
    let g = ZPoly2::gcd(n, d);
    if g.is_constant() {
        (n.clone(), d.clone())
    } else {
        (n.div_exact(&g).expect("gcd divides"), d.div_exact(&g).expect("gcd divides"))
    }
}

fn eval_zpoly2<C: coef::Coef>(p: &ZPoly2, x: &C, y: &C) -> C {
    let mut acc = C::zero();
    for row in p.rows.iter().rev() {
        let mut r = C::zero();
        for c in row.0.iter().rev() {
            r = r.mul(y).add(&C::from_rat(&BigRat::from_integer(c.clone())));
        }
        acc = acc.mul(x).add(&r);
    }
    acc
}

impl coef::Coef for RatFunc2 {
    fn zero() -> Self {
        RatFunc2::zero()
    }
    fn one() -> Self {
        RatFunc2::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc2::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        RatFunc2::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        RatFunc2::sub(self, o)
    }
    fn mul(&self, o: &Self) -> Self {
        RatFunc2::mul(self, o)
    }
    fn neg(&self) -> Self {
        RatFunc2::neg(self)
    }
    fn div(&self, o: &Self) -> Self {
        RatFunc2::div(self, o).expect("division by zero")
    }
    fn from_rat(r: &BigRat) -> Self {
        RatFunc2::constant(r.clone())
    }
    fn adams(&self, d: u32) -> Self {
        self.inflate(d)
    }
    fn scale(&self, r: &BigRat) -> Self {
        RatFunc2::scale(self, r)
    }
}

impl fmt::Display for RatFunc2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(Vars::ZW))
    }
}

/// Rewrite a Laurent polynomial in `s` with only even exponents as one in `q = s^2`.
/// Both are stored in the first variable slot.
pub fn halve_exponents(p: &LaurentPoly2, vars: Vars) -> Result<LaurentPoly2> {
    let mut out = LaurentPoly2::zero(vars);
    for (&(a, b), c) in p.terms() {
        if a % 2 != 0 || b % 2 != 0 {
            return Err(Error::OddHalfPower);
        }
        out.add_term(a / 2, b / 2, c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::coef::rat;

    fn p(t: &[((i32, i32), i64)]) -> LaurentPoly2 {
        LaurentPoly2::from_int_terms(Vars::ZW, t)
    }

    fn rf(n: &[((i32, i32), i64)], d: &[((i32, i32), i64)]) -> RatFunc2 {
        RatFunc2::from_frac(&p(n), &p(d)).unwrap()
    }

    #[test]
    fn cancels_common_factor() {
        // (z^2-1)/(z-1) = z+1
        let f = rf(&[((2, 0), 1), ((0, 0), -1)], &[((1, 0), 1), ((0, 0), -1)]);
        assert_eq!(f, RatFunc2::from_poly(&p(&[((1, 0), 1), ((0, 0), 1)])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn zero_numerator() {
        let f = rf(&[], &[((0, 3), 1), ((0, 0), 2)]);
        assert!(f.is_zero());
        assert_eq!(f.den(Vars::ZW), LaurentPoly2::one(Vars::ZW));
        assert!(RatFunc2::from_frac(&p(&[((0, 0), 1)]), &p(&[])).is_err());
    }

    #[test]
    fn cross_multiplication_example() {
        let zmw2 = p(&[((2, 0), 1), ((1, 1), -2), ((0, 2), 1)]);
        let z21 = p(&[((2, 0), 1), ((0, 0), -1)]);
        let w21 = p(&[((0, 0), 1), ((0, 2), -1)]);
        let f = RatFunc2::from_frac(&zmw2.mul(&z21), &z21.mul(&w21)).unwrap();
        let g = RatFunc2::from_frac(&zmw2, &w21).unwrap();
        assert_eq!(f, g);
        // num1*den2 == num2*den1
        let v = Vars::ZW;
        assert_eq!(f.num(v).mul(&g.den(v)), g.num(v).mul(&f.den(v)));
    }

    #[test]
    fn sign_convention_and_scaling() {
        // 1/(2 - 2w) -> den content 1, leading positive
        let f = rf(&[((0, 0), 1)], &[((0, 0), 2), ((0, 1), -2)]);
        let d = f.den(Vars::ZW);
        assert_eq!(d, p(&[((0, 1), 1), ((0, 0), -1)]));
        assert_eq!(f.num(Vars::ZW), LaurentPoly2::constant(Vars::ZW, rat(-1, 2)));
    }

    #[test]
    fn substitution_examples() {
        let zmw2 = RatFunc2::from_poly(&p(&[((2, 0), 1), ((1, 1), -2), ((0, 2), 1)]));
        // z -> s, w -> 1/s
        let s = RatFunc2::x();
        let sinv = RatFunc2::monomial(BigRat::one(), -1, 0);
        let r = zmw2.substitute(&s, &sinv).unwrap();
        assert_eq!(r.to_laurent(Vars::ZW).unwrap(), p(&[((2, 0), 1), ((0, 0), -2), ((-2, 0), 1)]));
        // z -> 0, w -> sqrt q as s, then q = s^2
        let r = zmw2.substitute(&RatFunc2::zero(), &s).unwrap();
        let q = halve_exponents(&r.to_laurent(Vars('s', 't')).unwrap(), Vars::QT).unwrap();
        assert_eq!(q.to_string(), "q");
        // 1/(1-w^2), w -> s gives 1/(1-q)
        let f = rf(&[((0, 0), 1)], &[((0, 0), 1), ((0, 2), -1)]);
        let r = f.substitute(&RatFunc2::zero(), &s).unwrap();
        assert_eq!(r, rf(&[((0, 0), 1)], &[((0, 0), 1), ((2, 0), -1)]));
        // pole: 1/z at z -> 0
        let g = RatFunc2::monomial(BigRat::one(), -1, 0);
        assert_eq!(g.substitute(&RatFunc2::zero(), &s), Err(Error::Pole));
        let h = rf(&[((0, 0), 1)], &[((1, 0), 1), ((0, 1), -1)]);
        assert_eq!(h.substitute(&s, &s), Err(Error::Pole));
    }

    #[test]
    fn odd_half_power_rejected() {
        let f = p(&[((1, 0), 1)]);
        assert_eq!(halve_exponents(&f, Vars::QT), Err(Error::OddHalfPower));
    }

    #[test]
    fn swap_and_inflate() {
        let f = rf(&[((1, 0), 1)], &[((0, 1), 1), ((0, 0), 1)]);
        let g = f.swap();
        assert_eq!(g, rf(&[((0, 1), 1)], &[((1, 0), 1), ((0, 0), 1)]));
        let h = f.inflate(2);
        assert_eq!(h, rf(&[((2, 0), 1)], &[((0, 2), 1), ((0, 0), 1)]));
    }
}

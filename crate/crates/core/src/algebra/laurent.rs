//! Sparse Laurent polynomials in two named variables over the rationals.

use super::coef::{self, BigRat};
use super::zpoly::ZPoly2;
use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// Names of the two variables, single characters (`z,w`, `q,t`, ...).
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Vars(pub char, pub char);

impl Vars {
    pub const ZW: Vars = Vars('z', 'w');
    pub const QT: Vars = Vars('q', 't');
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly2 {
    pub vars: Vars,
    terms: BTreeMap<(i32, i32), BigRat>,
}

impl LaurentPoly2 {
    pub fn zero(vars: Vars) -> Self {
        LaurentPoly2 { vars, terms: BTreeMap::new() }
    }

    pub fn one(vars: Vars) -> Self {
        Self::monomial(vars, BigRat::one(), 0, 0)
    }

    pub fn constant(vars: Vars, c: BigRat) -> Self {
        Self::monomial(vars, c, 0, 0)
    }

    pub fn monomial(vars: Vars, c: BigRat, a: i32, b: i32) -> Self {
        let mut p = Self::zero(vars);
        p.add_term(a, b, c);
        p
    }

    /// First variable (index 0) or second (index 1).
    pub fn var(vars: Vars, idx: usize) -> Self {
        match idx {
            0 => Self::monomial(vars, BigRat::one(), 1, 0),
            _ => Self::monomial(vars, BigRat::one(), 0, 1),
        }
    }

    pub fn from_terms(vars: Vars, terms: impl IntoIterator<Item = ((i32, i32), BigRat)>) -> Self {
        let mut p = Self::zero(vars);
        for ((a, b), c) in terms {
            p.add_term(a, b, c);
        }
        p
    }

    pub fn from_int_terms(vars: Vars, terms: &[((i32, i32), i64)]) -> Self {
        Self::from_terms(vars, terms.iter().map(|(e, c)| (*e, BigRat::from_integer(BigInt::from(*c)))))
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: BigRat) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry((a, b)).or_insert_with(BigRat::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&(i32, i32), &BigRat)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, a: i32, b: i32) -> BigRat {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(BigRat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn with_vars(mut self, vars: Vars) -> Self {
        self.vars = vars;
        self
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (&(a, b), c) in &o.terms {
            r.add_term(a, b, c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        LaurentPoly2 { vars: self.vars, terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn scale(&self, c: &BigRat) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        LaurentPoly2 { vars: self.vars, terms: self.terms.iter().map(|(e, x)| (*e, x * c)).collect() }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let mut acc: BTreeMap<(i32, i32), BigRat> = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            for (&(a2, b2), c2) in &o.terms {
                *acc.entry((a + a2, b + b2)).or_insert_with(BigRat::zero) += c * c2;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        LaurentPoly2 { vars: self.vars, terms: acc }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.vars);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiply by the monomial `x^a y^b`.
    pub fn shift(&self, a: i32, b: i32) -> Self {
        LaurentPoly2 { vars: self.vars, terms: self.terms.iter().map(|(&(x, y), c)| ((x + a, y + b), c.clone())).collect() }
    }

    /// Substitute `x -> x^d, y -> y^d`.
    pub fn inflate(&self, d: i32) -> Self {
        LaurentPoly2 { vars: self.vars, terms: self.terms.iter().map(|(&(x, y), c)| ((x * d, y * d), c.clone())).collect() }
    }

    /// Exchange the roles of the two variables (names stay put).
    pub fn swap(&self) -> Self {
        LaurentPoly2 { vars: self.vars, terms: self.terms.iter().map(|(&(x, y), c)| ((y, x), c.clone())).collect() }
    }

    /// Substitute `x -> sx*x, y -> sy*y` for signs `sx, sy` in {1,-1}.
    pub fn sign_flip(&self, sx: bool, sy: bool) -> Self {
        LaurentPoly2 {
            vars: self.vars,
            terms: self
                .terms
                .iter()
                .map(|(&(x, y), c)| {
                    let odd = (sx && x.rem_euclid(2) == 1) ^ (sy && y.rem_euclid(2) == 1);
                    ((x, y), if odd { -c } else { c.clone() })
                })
                .collect(),
        }
    }

    /// `(min, max)` exponent of the given variable over all terms.
    pub fn degree_range(&self, idx: usize) -> Option<(i32, i32)> {
        let it = self.terms.keys().map(|&(a, b)| if idx == 0 { a } else { b });
        let v: Vec<i32> = it.collect();
        Some((*v.iter().min()?, *v.iter().max()?))
    }

    pub fn is_polynomial(&self) -> bool {
        self.terms.keys().all(|&(a, b)| a >= 0 && b >= 0)
    }

    pub fn has_integer_coefficients(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    /// Univariate view in the first variable; `None` if the second variable occurs.
    pub fn univariate(&self) -> Option<BTreeMap<i32, BigRat>> {
        let mut out = BTreeMap::new();
        for (&(a, b), c) in &self.terms {
            if b != 0 {
                return None;
            }
            out.insert(a, c.clone());
        }
        Some(out)
    }

    pub fn eval<C: coef::Coef>(&self, x: &C, y: &C) -> C {
        let mut acc = C::zero();
        for (&(a, b), c) in &self.terms {
            acc = acc.add(&x.powi(a).mul(&y.powi(b)).scale(c));
        }
        acc
    }

    /// `self = scale * x^sh.0 * y^sh.1 * z` with `z` a primitive integer polynomial
    /// not divisible by either variable and with positive lex-leading coefficient.
    pub fn to_primitive(&self) -> (BigRat, (i32, i32), ZPoly2) {
        if self.is_zero() {
            return (BigRat::zero(), (0, 0), ZPoly2::zero());
        }
        let mut l = BigInt::one();
        for c in self.terms.values() {
            l = l.lcm(c.denom());
        }
        let a0 = self.terms.keys().map(|e| e.0).min().unwrap();
        let b0 = self.terms.keys().map(|e| e.1).min().unwrap();
        let terms: Vec<((usize, usize), BigInt)> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| (((a - a0) as usize, (b - b0) as usize), (c * BigRat::from_integer(l.clone())).to_integer()))
            .collect();
        let z = ZPoly2::from_terms(&terms);
        let (cont, pp) = z.primitive();
        (BigRat::new(cont, l), (a0, b0), pp)
    }

    pub fn from_zpoly2(vars: Vars, scale: &BigRat, sh: (i32, i32), z: &ZPoly2) -> Self {
        let mut p = Self::zero(vars);
        for ((i, j), c) in z.terms() {
            p.add_term(i as i32 + sh.0, j as i32 + sh.1, BigRat::from_integer(c.clone()) * scale);
        }
        p
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .terms
            .iter()
            .map(|(&(a, b), c)| json!({"exp": [a, b], "coef": rat_json(c)}))
            .collect();
        json!({"vars": [self.vars.0.to_string(), self.vars.1.to_string()], "terms": terms})
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let vars = v.get("vars").and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("missing vars".into()))?;
        if vars.len() != 2 {
            return Err(Error::Parse("expected two variable names".into()));
        }
        let name = |i: usize| -> Result<char> {
            vars[i]
                .as_str()
                .and_then(|s| s.chars().next())
                .ok_or_else(|| Error::Parse("bad variable name".into()))
        };
        let mut p = Self::zero(Vars(name(0)?, name(1)?));
        let terms = v.get("terms").and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("missing terms".into()))?;
        for t in terms {
            let e = t.get("exp").and_then(|x| x.as_array()).ok_or_else(|| Error::Parse("missing exp".into()))?;
            if e.len() != 2 {
                return Err(Error::Parse("exponent must have two entries".into()));
            }
            let ea = e[0].as_i64().ok_or_else(|| Error::Parse("bad exponent".into()))? as i32;
            let eb = e[1].as_i64().ok_or_else(|| Error::Parse("bad exponent".into()))? as i32;
            let c = rat_from_json(t.get("coef").ok_or_else(|| Error::Parse("missing coef".into()))?)?;
            p.add_term(ea, eb, c);
        }
        Ok(p)
    }
}

pub fn rat_json(c: &BigRat) -> Value {
    json!({"num": c.numer().to_string(), "den": c.denom().to_string()})
}

pub fn rat_from_json(v: &Value) -> Result<BigRat> {
    let get = |k: &str| -> Result<BigInt> {
        let s = v.get(k).ok_or_else(|| Error::Parse(format!("missing {k}")))?;
        let s = match s {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            _ => return Err(Error::Parse(format!("bad {k}"))),
        };
        s.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad integer {s}")))
    };
    let d = get("den")?;
    if d.is_zero() {
        return Err(Error::Parse("zero denominator".into()));
    }
    Ok(BigRat::new(get("num")?, d))
}

fn fmt_monomial(vars: Vars, a: i32, b: i32) -> String {
    let mut parts = Vec::new();
    for (v, e) in [(vars.0, a), (vars.1, b)] {
        match e {
            0 => {}
            1 => parts.push(v.to_string()),
            _ => parts.push(format!("{v}^{e}")),
        }
    }
    parts.join("*")
}

impl fmt::Display for LaurentPoly2 {
    /// Terms in decreasing lex order, e.g. `q^2+q`, `z^2-2*z*w+w^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (&(a, b), c) in self.terms.iter().rev() {
            let mono = fmt_monomial(self.vars, a, b);
            let neg = c.is_negative();
            let abs = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            first = false;
            if mono.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display_and_json_roundtrip() {
        let q = LaurentPoly2::from_int_terms(Vars::QT, &[((2, 0), 1), ((1, 0), 1)]);
        assert_eq!(q.to_string(), "q^2+q");
        let zw = LaurentPoly2::from_int_terms(Vars::ZW, &[((2, 0), 1), ((1, 1), -2), ((0, 2), 1), ((-1, 0), 3)]);
        assert_eq!(zw.to_string(), "z^2-2*z*w+w^2+3*z^-1");
        let back = LaurentPoly2::from_json(&zw.to_json()).unwrap();
        assert_eq!(back, zw);
    }

    #[test]
    fn primitive_decomposition() {
        let p = LaurentPoly2::from_terms(
            Vars::ZW,
            [((1, -1), BigRat::new(3.into(), 2.into())), ((3, 0), BigRat::new((-9).into(), 4.into()))],
        );
        let (c, sh, z) = p.to_primitive();
        assert_eq!(LaurentPoly2::from_zpoly2(Vars::ZW, &c, sh, &z), p);
        assert!(z.lead_lex().is_positive());
        assert_eq!(z.content(), BigInt::one());
    }
}

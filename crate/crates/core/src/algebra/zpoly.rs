//! Dense integer polynomials in one and two variables with modular gcd.
//!
//! `ZPoly` is univariate over `BigInt` (coefficient of `x^i` at index `i`).
//! `ZPoly2` is bivariate, stored as rows indexed by the degree of the first
//! variable, each row a `ZPoly` in the second variable.

use super::modp::{self, add_mod, inv_mod, mul_mod, sub_mod};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZPoly(pub Vec<BigInt>);

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly(Vec::new())
    }

    pub fn one() -> Self {
        ZPoly(vec![BigInt::one()])
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly(vec![c]);
        p.trim();
        p
    }

    pub fn monomial(c: BigInt, e: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); e + 1];
        v[e] = c;
        ZPoly(v)
    }

    pub fn from_i64(c: &[i64]) -> Self {
        let mut p = ZPoly(c.iter().map(|&x| BigInt::from(x)).collect());
        p.trim();
        p
    }

    pub fn trim(&mut self) {
        while matches!(self.0.last(), Some(c) if c.is_zero()) {
            self.0.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }

    /// Degree; the zero polynomial reports `None`.
    pub fn deg(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lc(&self) -> &BigInt {
        self.0.last().expect("leading coefficient of zero polynomial")
    }

    /// Index of the lowest nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.0.iter().position(|c| !c.is_zero())
    }

    pub fn shift_down(&self, k: usize) -> Self {
        ZPoly(self.0[k.min(self.0.len())..].to_vec())
    }

    pub fn shift_up(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); k];
        v.extend(self.0.iter().cloned());
        ZPoly(v)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let mut v = Vec::with_capacity(n);
        for i in 0..n {
            let c = match (self.0.get(i), o.0.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            };
            v.push(c);
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    pub fn neg(&self) -> Self {
        ZPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut v = vec![BigInt::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        let mut p = ZPoly(v);
        p.trim();
        p
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly(self.0.iter().map(|x| x * c).collect())
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        ZPoly(
            self.0
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        )
    }

    /// Nonnegative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Primitive part with positive leading coefficient, and the signed content removed.
    pub fn primitive(&self) -> (BigInt, ZPoly) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.lc().is_negative() {
            c = -c;
        }
        (c.clone(), self.div_scalar_exact(&c))
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn to_modp(&self, p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self.0.iter().map(|c| modp::reduce(c, p)).collect();
        trim_p(&mut v);
        v
    }

    pub fn eval_mod(&self, x: u64, p: u64) -> u64 {
        let mut acc = 0u64;
        for c in self.0.iter().rev() {
            acc = add_mod(mul_mod(acc, x, p), modp::reduce(c, p), p);
        }
        acc
    }

    /// x -> x^d.
    pub fn inflate(&self, d: usize) -> Self {
        if d == 1 || self.0.len() <= 1 {
            return self.clone();
        }
        let mut v = vec![BigInt::zero(); (self.0.len() - 1) * d + 1];
        for (i, c) in self.0.iter().enumerate() {
            v[i * d] = c.clone();
        }
        ZPoly(v)
    }

    /// Exact division over the integers; `None` when `d` does not divide `self` in `Z[x]`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let dd = d.0.len() - 1;
        if self.0.len() - 1 < dd {
            return None;
        }
        if dd == 0 {
            let c = &d.0[0];
            let mut v = Vec::with_capacity(self.0.len());
            for x in &self.0 {
                let (q, r) = x.div_rem(c);
                if !r.is_zero() {
                    return None;
                }
                v.push(q);
            }
            return Some(ZPoly(v));
        }
        let mut r = self.0.clone();
        let lc = d.lc();
        let nq = r.len() - dd;
        let mut q = vec![BigInt::zero(); nq];
        for i in (0..nq).rev() {
            let top = &r[i + dd];
            if top.is_zero() {
                continue;
            }
            let (qc, rem) = top.div_rem(lc);
            if !rem.is_zero() {
                return None;
            }
            for (j, dc) in d.0.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] -= &qc * dc;
                }
            }
            q[i] = qc;
        }
        if r[..dd].iter().any(|c| !c.is_zero()) {
            return None;
        }
        let mut qp = ZPoly(q);
        qp.trim();
        Some(qp)
    }

    /// gcd in `Z[x]`, normalised to positive leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_signed_content();
        }
        if b.is_zero() {
            return a.primitive_signed_content();
        }
        let (ca, pa) = a.primitive();
        let (cb, pb) = b.primitive();
        let c = ca.gcd(&cb);
        if pa.0.len() == 1 || pb.0.len() == 1 {
            return ZPoly::constant(c);
        }
        if pa == pb {
            return pa.scale(&c);
        }
        let g = gcd_primitive(&pa, &pb);
        g.scale(&c)
    }

    fn primitive_signed_content(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.lc().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

    pub fn is_constant(&self) -> bool {
        self.0.len() <= 1
    }
}

pub fn trim_p(v: &mut Vec<u64>) {
    while matches!(v.last(), Some(0)) {
        v.pop();
    }
}

/// Monic gcd over `F_p`.
pub fn gcd_modp(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    trim_p(&mut a);
    trim_p(&mut b);
    while !b.is_empty() {
        rem_modp(&mut a, &b, p);
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(&l) = a.last() {
        let inv = inv_mod(l, p);
        for c in a.iter_mut() {
            *c = mul_mod(*c, inv, p);
        }
    }
    a
}

fn rem_modp(a: &mut Vec<u64>, b: &[u64], p: u64) {
    let db = b.len() - 1;
    let inv = inv_mod(b[db], p);
    while a.len() > db {
        let top = *a.last().unwrap();
        if top != 0 {
            let f = mul_mod(top, inv, p);
            let off = a.len() - 1 - db;
            for (j, &bc) in b.iter().enumerate() {
                a[off + j] = sub_mod(a[off + j], mul_mod(f, bc, p), p);
            }
        }
        a.pop();
        trim_p(a);
    }
}

/// gcd of two primitive polynomials of positive degree with positive leading coefficients.
fn gcd_primitive(a: &ZPoly, b: &ZPoly) -> ZPoly {
    let gamma = a.lc().gcd(b.lc());
    let primes = modp::big_primes();
    let mut acc: Option<(Vec<BigInt>, BigInt)> = None;
    let mut best_deg = usize::MAX;
    let mut last_candidate: Option<ZPoly> = None;
    for &p in primes.iter() {
        if modp::bigint_is_zero_mod(a.lc(), p) || modp::bigint_is_zero_mod(b.lc(), p) {
            continue;
        }
        let g = gcd_modp(&a.to_modp(p), &b.to_modp(p), p);
        let d = g.len() - 1;
        if d == 0 {
            return ZPoly::one();
        }
        let gm = modp::reduce(&gamma, p);
        let g: Vec<u64> = g.iter().map(|&c| mul_mod(c, gm, p)).collect();
        if d < best_deg {
            best_deg = d;
            acc = Some((g.iter().map(|&c| BigInt::from(c)).collect(), BigInt::from(p)));
            last_candidate = None;
        } else if d > best_deg {
            continue;
        } else {
            let (coeffs, m) = acc.take().unwrap();
            let nc: Vec<BigInt> = coeffs
                .iter()
                .zip(g.iter())
                .map(|(r, &s)| modp::crt(r, &m, s, p))
                .collect();
            acc = Some((nc, m * BigInt::from(p)));
        }
        let (coeffs, m) = acc.as_ref().unwrap();
        let mut cand = ZPoly(coeffs.iter().map(|c| modp::symmetric(c, m)).collect());
        cand.trim();
        if last_candidate.as_ref() == Some(&cand) {
            let (_, pp) = cand.primitive();
            if a.div_exact(&pp).is_some() && b.div_exact(&pp).is_some() {
                return pp;
            }
        }
        last_candidate = Some(cand);
    }
    panic!("modular gcd did not converge");
}

/// Bivariate integer polynomial; `rows[i]` is the coefficient of `z^i` as a polynomial in `w`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct ZPoly2 {
    pub rows: Vec<ZPoly>,
}

impl ZPoly2 {
    pub fn zero() -> Self {
        ZPoly2 { rows: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly2 { rows: vec![ZPoly::one()] }
    }

    pub fn constant(c: BigInt) -> Self {
        let mut p = ZPoly2 { rows: vec![ZPoly::constant(c)] };
        p.trim();
        p
    }

    pub fn from_rows(rows: Vec<ZPoly>) -> Self {
        let mut p = ZPoly2 { rows };
        p.trim();
        p
    }

    /// Polynomial in the second variable only.
    pub fn from_w(p: ZPoly) -> Self {
        Self::from_rows(vec![p])
    }

    /// Polynomial in the first variable only.
    pub fn from_z(p: &ZPoly) -> Self {
        Self::from_rows(p.0.iter().map(|c| ZPoly::constant(c.clone())).collect())
    }

    pub fn from_terms(terms: &[((usize, usize), BigInt)]) -> Self {
        let mut rows: Vec<ZPoly> = Vec::new();
        for ((i, j), c) in terms {
            if rows.len() <= *i {
                rows.resize(i + 1, ZPoly::zero());
            }
            let r = &mut rows[*i].0;
            if r.len() <= *j {
                r.resize(j + 1, BigInt::zero());
            }
            r[*j] += c;
        }
        for r in rows.iter_mut() {
            r.trim();
        }
        Self::from_rows(rows)
    }

    pub fn trim(&mut self) {
        while matches!(self.rows.last(), Some(r) if r.is_zero()) {
            self.rows.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.rows.len() == 1 && self.rows[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.rows.len() <= 1 && self.rows.first().is_none_or(|r| r.0.len() <= 1)
    }

    pub fn deg_z(&self) -> Option<usize> {
        self.rows.len().checked_sub(1)
    }

    pub fn deg_w(&self) -> Option<usize> {
        self.rows.iter().filter_map(|r| r.deg()).max()
    }

    /// Leading coefficient in lex order (highest z power, then highest w power).
    pub fn lead_lex(&self) -> &BigInt {
        self.rows.last().expect("zero polynomial").lc()
    }

    pub fn lc_z(&self) -> &ZPoly {
        self.rows.last().expect("zero polynomial")
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &BigInt)> {
        self.rows.iter().enumerate().flat_map(|(i, r)| {
            r.0.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(move |(j, c)| ((i, j), c))
        })
    }

    pub fn nterms(&self) -> usize {
        self.rows.iter().map(|r| r.0.iter().filter(|c| !c.is_zero()).count()).sum()
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.rows.len().max(o.rows.len());
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            rows.push(match (self.rows.get(i), o.rows.get(i)) {
                (Some(a), Some(b)) => a.add(b),
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        Self::from_rows(rows)
    }

    pub fn neg(&self) -> Self {
        ZPoly2 { rows: self.rows.iter().map(|r| r.neg()).collect() }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn is_column(&self) -> bool {
        self.rows.iter().all(|r| r.0.len() <= 1)
    }

    fn column(&self) -> ZPoly {
        let mut p = ZPoly(
            self.rows
                .iter()
                .map(|r| r.0.first().cloned().unwrap_or_default())
                .collect(),
        );
        p.trim();
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.is_column() && o.is_column() {
            return Self::from_z(&self.column().mul(&o.column()));
        }
        let mut rows = vec![ZPoly::zero(); self.rows.len() + o.rows.len() - 1];
        let wlen = self.deg_w().unwrap_or(0) + o.deg_w().unwrap_or(0) + 1;
        let mut acc: Vec<Vec<BigInt>> = vec![vec![BigInt::zero(); wlen]; rows.len()];
        for (i, a) in self.rows.iter().enumerate() {
            for (ja, ca) in a.0.iter().enumerate() {
                if ca.is_zero() {
                    continue;
                }
                for (k, b) in o.rows.iter().enumerate() {
                    let row = &mut acc[i + k];
                    for (jb, cb) in b.0.iter().enumerate() {
                        if !cb.is_zero() {
                            row[ja + jb] += ca * cb;
                        }
                    }
                }
            }
        }
        for (r, v) in rows.iter_mut().zip(acc) {
            *r = ZPoly(v);
            r.trim();
        }
        Self::from_rows(rows)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        ZPoly2 { rows: self.rows.iter().map(|r| r.scale(c)).collect() }
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        ZPoly2 { rows: self.rows.iter().map(|r| r.div_scalar_exact(c)).collect() }
    }

    pub fn mul_w(&self, p: &ZPoly) -> Self {
        Self::from_rows(self.rows.iter().map(|r| r.mul(p)).collect())
    }

    /// Integer content (nonnegative).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for r in &self.rows {
            for c in &r.0 {
                g = g.gcd(c);
                if g.is_one() {
                    return g;
                }
            }
        }
        g
    }

    /// Signed integer content making the lex-leading coefficient positive, and the primitive part.
    pub fn primitive(&self) -> (BigInt, Self) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.lead_lex().is_negative() {
            c = -c;
        }
        if c.is_one() {
            return (c, self.clone());
        }
        (c.clone(), self.div_scalar_exact(&c))
    }

    /// Content with respect to the first variable: gcd of the rows in `Z[w]`.
    pub fn content_z(&self) -> ZPoly {
        let mut g = ZPoly::zero();
        let mut rows: Vec<&ZPoly> = self.rows.iter().filter(|r| !r.is_zero()).collect();
        rows.sort_by_key(|r| r.0.len());
        for r in rows {
            g = ZPoly::gcd(&g, r);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn div_w_exact(&self, d: &ZPoly) -> Option<Self> {
        let mut rows = Vec::with_capacity(self.rows.len());
        for r in &self.rows {
            rows.push(r.div_exact(d)?);
        }
        Some(Self::from_rows(rows))
    }

    /// Lowest exponents present in each variable.
    pub fn valuations(&self) -> (usize, usize) {
        let vz = self.rows.iter().position(|r| !r.is_zero()).unwrap_or(0);
        let vw = self.rows.iter().filter_map(|r| r.valuation()).min().unwrap_or(0);
        (vz, vw)
    }

    pub fn shift_down(&self, a: usize, b: usize) -> Self {
        Self::from_rows(self.rows[a.min(self.rows.len())..].iter().map(|r| r.shift_down(b)).collect())
    }

    pub fn shift_up(&self, a: usize, b: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut rows = vec![ZPoly::zero(); a];
        rows.extend(self.rows.iter().map(|r| r.shift_up(b)));
        Self::from_rows(rows)
    }

    /// z -> z^d, w -> w^d.
    pub fn inflate(&self, d: usize) -> Self {
        if d == 1 || self.is_zero() {
            return self.clone();
        }
        let mut rows = vec![ZPoly::zero(); (self.rows.len() - 1) * d + 1];
        for (i, r) in self.rows.iter().enumerate() {
            rows[i * d] = r.inflate(d);
        }
        Self::from_rows(rows)
    }

    pub fn swap_vars(&self) -> Self {
        let mut terms = Vec::new();
        for ((i, j), c) in self.terms() {
            terms.push(((j, i), c.clone()));
        }
        Self::from_terms(&terms)
    }

    fn eval_w_mod(&self, x: u64, p: u64) -> Vec<u64> {
        let mut v: Vec<u64> = self.rows.iter().map(|r| r.eval_mod(x, p)).collect();
        trim_p(&mut v);
        v
    }

    /// Exact division in `Z[z,w]`; `None` when not divisible.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_column() && self.is_column() {
            return self.column().div_exact(&d.column()).map(|q| Self::from_z(&q));
        }
        let dz = d.rows.len() - 1;
        if self.rows.len() - 1 < dz {
            return None;
        }
        if dz == 0 {
            return self.div_w_exact(&d.rows[0]);
        }
        if let (Some(sw), Some(dw)) = (self.deg_w(), d.deg_w()) {
            if dw > sw {
                return None;
            }
        }
        let mut r = self.rows.clone();
        let lc = d.lc_z();
        let nq = r.len() - dz;
        let mut q = vec![ZPoly::zero(); nq];
        for i in (0..nq).rev() {
            if r[i + dz].is_zero() {
                continue;
            }
            let qc = r[i + dz].div_exact(lc)?;
            for (j, dc) in d.rows.iter().enumerate() {
                if !dc.is_zero() {
                    r[i + j] = r[i + j].sub(&qc.mul(dc));
                }
            }
            q[i] = qc;
        }
        if r[..dz].iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Self::from_rows(q))
    }

    /// gcd in `Z[z,w]` with positive lex-leading coefficient.
    pub fn gcd(a: &Self, b: &Self) -> Self {
        if a.is_zero() {
            return b.primitive_sign();
        }
        if b.is_zero() {
            return a.primitive_sign();
        }
        if a == b {
            return a.primitive_sign();
        }
        if a.is_column() && b.is_column() {
            return Self::from_z(&ZPoly::gcd(&a.column(), &b.column()));
        }
        if a.rows.len() == 1 && b.rows.len() == 1 {
            return Self::from_w(ZPoly::gcd(&a.rows[0], &b.rows[0]));
        }
        let ca = a.content_z();
        let cb = b.content_z();
        let c = ZPoly::gcd(&ca, &cb);
        let pa = a.div_w_exact(&ca).expect("content divides");
        let pb = b.div_w_exact(&cb).expect("content divides");
        if pa.rows.len() == 1 || pb.rows.len() == 1 {
            return Self::from_w(c);
        }
        let g = if pb.div_exact(&pa).is_some() {
            pa.primitive_sign()
        } else if pa.div_exact(&pb).is_some() {
            pb.primitive_sign()
        } else {
            brown_gcd(&pa, &pb)
        };
        g.mul_w(&c).primitive_sign()
    }

    fn primitive_sign(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        if self.lead_lex().is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }

}

/// Modular gcd of two polynomials primitive over `Z[w]` in the variable `z`,
/// by evaluation in `w` and interpolation, combined across primes.
fn brown_gcd(a: &ZPoly2, b: &ZPoly2) -> ZPoly2 {
    let gamma = ZPoly::gcd(a.lc_z(), b.lc_z());
    let bound = gamma.deg().unwrap_or(0) + a.deg_w().unwrap_or(0).min(b.deg_w().unwrap_or(0));
    let primes = modp::big_primes();
    let mut best_deg = usize::MAX;
    let mut acc: Option<(Vec<Vec<BigInt>>, BigInt)> = None;
    let mut last: Option<ZPoly2> = None;
    for &p in primes.iter() {
        let gp = gamma.to_modp(p);
        if gp.len() != gamma.0.len() {
            continue;
        }
        let lca = a.lc_z().to_modp(p);
        let lcb = b.lc_z().to_modp(p);
        let mut pts: Vec<(u64, Vec<u64>)> = Vec::new();
        let mut deg_here = usize::MAX;
        // pseudo-random points so that an unlucky point does not recur for every prime
        let mut alpha = p / 3;
        while pts.len() < bound + 1 {
            alpha = ((alpha as u128 * 6364136223846793005u128 + 1442695040888963407u128) % p as u128) as u64;
            if pts.iter().any(|(x, _)| *x == alpha) || eval_p(&gp, alpha, p) == 0 || eval_p(&lca, alpha, p) == 0 || eval_p(&lcb, alpha, p) == 0 {
                continue;
            }
            let ga = a.eval_w_mod(alpha, p);
            let gb = b.eval_w_mod(alpha, p);
            let g = gcd_modp(&ga, &gb, p);
            let d = g.len() - 1;
            if d == 0 {
                return ZPoly2::one();
            }
            if d < deg_here {
                deg_here = d;
                pts.clear();
            } else if d > deg_here {
                continue;
            }
            let s = eval_p(&gp, alpha, p);
            pts.push((alpha, g.iter().map(|&c| mul_mod(c, s, p)).collect()));
        }
        // interpolate each z-coefficient in w
        let xs: Vec<u64> = pts.iter().map(|(x, _)| *x).collect();
        let mut rows_p: Vec<Vec<u64>> = Vec::with_capacity(deg_here + 1);
        for i in 0..=deg_here {
            let ys: Vec<u64> = pts.iter().map(|(_, g)| g[i]).collect();
            rows_p.push(interpolate(&xs, &ys, p));
        }
        let width = bound + 1;
        if deg_here < best_deg {
            best_deg = deg_here;
            acc = Some((
                rows_p
                    .iter()
                    .map(|r| (0..width).map(|j| BigInt::from(*r.get(j).unwrap_or(&0))).collect())
                    .collect(),
                BigInt::from(p),
            ));
            last = None;
        } else if deg_here > best_deg {
            continue;
        } else {
            let (rows, m) = acc.take().unwrap();
            let nrows: Vec<Vec<BigInt>> = rows
                .iter()
                .zip(rows_p.iter())
                .map(|(r, rp)| {
                    r.iter()
                        .enumerate()
                        .map(|(j, x)| modp::crt(x, &m, *rp.get(j).unwrap_or(&0), p))
                        .collect()
                })
                .collect();
            acc = Some((nrows, m * BigInt::from(p)));
        }
        let (rows, m) = acc.as_ref().unwrap();
        let cand = ZPoly2::from_rows(
            rows.iter()
                .map(|r| {
                    let mut zp = ZPoly(r.iter().map(|x| modp::symmetric(x, m)).collect());
                    zp.trim();
                    zp
                })
                .collect(),
        );
        if last.as_ref() == Some(&cand) {
            let cz = cand.content_z();
            let pp = cand.div_w_exact(&cz).expect("content divides").primitive().1;
            if a.div_exact(&pp).is_some() && b.div_exact(&pp).is_some() {
                return pp;
            }
        }
        last = Some(cand);
    }
    panic!("bivariate modular gcd did not converge");
}

fn eval_p(c: &[u64], x: u64, p: u64) -> u64 {
    let mut acc = 0;
    for &v in c.iter().rev() {
        acc = add_mod(mul_mod(acc, x, p), v, p);
    }
    acc
}

/// Newton interpolation over `F_p`; returns coefficients low to high.
fn interpolate(xs: &[u64], ys: &[u64], p: u64) -> Vec<u64> {
    let n = xs.len();
    let mut coef = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = sub_mod(coef[i], coef[i - 1], p);
            let den = sub_mod(xs[i], xs[i - j], p);
            coef[i] = mul_mod(num, inv_mod(den, p), p);
        }
    }
    let mut poly = vec![0u64; n];
    for i in (0..n).rev() {
        // poly = poly * (x - xs[i]) + coef[i]
        let mut next = vec![0u64; n];
        for k in 0..n {
            if poly[k] == 0 {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = add_mod(next[k + 1], poly[k], p);
            }
            next[k] = sub_mod(next[k], mul_mod(poly[k], xs[i], p), p);
        }
        next[0] = add_mod(next[0], coef[i], p);
        poly = next;
    }
    trim_p(&mut poly);
    poly
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zp(c: &[i64]) -> ZPoly {
        ZPoly::from_i64(c)
    }

    fn zp2(t: &[((usize, usize), i64)]) -> ZPoly2 {
        let v: Vec<_> = t.iter().map(|(e, c)| (*e, BigInt::from(*c))).collect();
        ZPoly2::from_terms(&v)
    }

    #[test]
    fn univariate_gcd() {
        // (x-1)(x+2) and (x-1)(x-3)
        let a = zp(&[-1, 1]).mul(&zp(&[2, 1]));
        let b = zp(&[-1, 1]).mul(&zp(&[-3, 1]));
        assert_eq!(ZPoly::gcd(&a, &b), zp(&[-1, 1]));
        assert_eq!(ZPoly::gcd(&a.scale(&BigInt::from(6)), &b.scale(&BigInt::from(4))), zp(&[-2, 2]));
        assert_eq!(ZPoly::gcd(&zp(&[1, 1]), &zp(&[-1, 1])), ZPoly::one());
    }

    #[test]
    fn univariate_gcd_high_degree() {
        // x^12 - 1 and x^18 - 1 share x^6 - 1
        let mut a = vec![0i64; 13];
        a[0] = -1;
        a[12] = 1;
        let mut b = vec![0i64; 19];
        b[0] = -1;
        b[18] = 1;
        let mut g = vec![0i64; 7];
        g[0] = -1;
        g[6] = 1;
        assert_eq!(ZPoly::gcd(&zp(&a), &zp(&b)), zp(&g));
    }

    #[test]
    fn exact_division() {
        let a = zp(&[1, 2, 1]);
        assert_eq!(a.div_exact(&zp(&[1, 1])), Some(zp(&[1, 1])));
        assert_eq!(a.div_exact(&zp(&[1, 2])), None);
    }

    #[test]
    fn bivariate_gcd() {
        // z - w
        let f = zp2(&[((1, 0), 1), ((0, 1), -1)]);
        // z^2 - 1
        let g = zp2(&[((2, 0), 1), ((0, 0), -1)]);
        // 1 - w^2
        let h = zp2(&[((0, 0), 1), ((0, 2), -1)]);
        let a = f.mul(&f).mul(&g);
        let b = g.mul(&h);
        assert_eq!(ZPoly2::gcd(&a, &b), g);
        let c = f.mul(&h).mul(&zp2(&[((3, 1), 2), ((0, 0), 5)]));
        let d = f.mul(&f).mul(&zp2(&[((1, 3), 1), ((2, 0), -7)]));
        assert_eq!(ZPoly2::gcd(&c, &d), f);
        assert_eq!(ZPoly2::gcd(&g, &h), ZPoly2::one());
    }

    #[test]
    fn bivariate_division() {
        let f = zp2(&[((1, 0), 1), ((0, 1), -1)]);
        let g = zp2(&[((3, 2), 4), ((0, 0), -1), ((1, 1), 3)]);
        let p = f.mul(&g);
        assert_eq!(p.div_exact(&f), Some(g.clone()));
        assert_eq!(p.div_exact(&g), Some(f.clone()));
        assert_eq!(g.div_exact(&f), None);
    }
}

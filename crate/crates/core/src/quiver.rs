//! Quivers and comet-shaped quivers: Cartan data, root reduction, the affine
//! classification, Hua's formula for `M_{Γ,v}(q)` and the Kac polynomials
//! `A_{Γ,v}(q)`, the series `Σ G_𝛍 m_𝛍` and `Σ A_𝛍 m_𝛍`, and the inequalities
//! behind the connectedness argument.

use crate::algebra::coef::{rat, BigRat};
use crate::algebra::graded::{zero_series, Hom, Series};
use crate::algebra::laurent::{LaurentPoly2, Vars};
use crate::algebra::numbers::{divisors, factorial, mobius};
use crate::algebra::ratfunc::RatFunc2;
use crate::charvar::{big_delta, log_omega, omega_spec, small_delta, Specialization};
use crate::error::{Error, Result};
use crate::glnchar::type_hall_littlewood;
use crate::macdonald::{a_lambda, hook_pure};
use crate::partitions::{partition_tuples, partitions, types, MultiPartition, Partition, TypeSeq};
use crate::symfunc::SymSeries;
use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

/// A finite quiver; arrows are `(tail, head)` vertex indices and may be loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "QuiverJson", into = "QuiverJson")]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<(usize, usize)>,
}

#[derive(Clone, Serialize, Deserialize)]
struct QuiverJson {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
}

impl TryFrom<QuiverJson> for Quiver {
    type Error = Error;
    fn try_from(j: QuiverJson) -> Result<Self> {
        let index: HashMap<&str, usize> = j.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        if index.len() != j.vertices.len() {
            return Err(Error::Invalid("duplicate vertex names".into()));
        }
        let find = |v: &str| index.get(v).copied().ok_or_else(|| Error::Invalid(format!("unknown vertex '{v}'")));
        let arrows = j.arrows.iter().map(|(t, h)| Ok((find(t)?, find(h)?))).collect::<Result<_>>()?;
        Ok(Quiver { vertices: j.vertices, arrows })
    }
}

impl From<Quiver> for QuiverJson {
    fn from(q: Quiver) -> Self {
        let arrows = q.arrows.iter().map(|&(t, h)| (q.vertices[t].clone(), q.vertices[h].clone())).collect();
        QuiverJson { vertices: q.vertices, arrows }
    }
}

pub type DimVector = Vec<u32>;

/// Parses `"2,1"`.
pub fn parse_dim(s: &str) -> Result<DimVector> {
    s.split(',')
        .map(|t| t.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad dimension '{t}'"))))
        .collect()
}

impl Quiver {
    pub fn new(vertices: Vec<String>, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        if arrows.iter().any(|&(t, h)| t >= n || h >= n) {
            return Err(Error::Invalid("arrow endpoint out of range".into()));
        }
        Ok(Quiver { vertices, arrows })
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }

    /// One vertex with `g` loops; `g = 1` is the Jordan quiver.
    pub fn loops(g: usize) -> Self {
        Quiver { vertices: vec!["0".into()], arrows: vec![(0, 0); g] }
    }

    pub fn jordan() -> Self {
        Self::loops(1)
    }

    /// The path `1 -> 2 -> ... -> m`.
    pub fn path(m: usize) -> Self {
        Quiver { vertices: (1..=m).map(|i| i.to_string()).collect(), arrows: (1..m).map(|i| (i - 1, i)).collect() }
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn loop_count(&self, i: usize) -> usize {
        self.arrows.iter().filter(|&&(t, h)| t == i && h == i).count()
    }

    pub fn reversed(&self) -> Self {
        Quiver { vertices: self.vertices.clone(), arrows: self.arrows.iter().map(|&(t, h)| (h, t)).collect() }
    }

    /// `c_ii = 2 - 2(loops at i)`, `c_ij = -(edges joining i and j)`.
    pub fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.len();
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        for &(t, h) in &self.arrows {
            if t == h {
                c[t][t] -= 2;
            } else {
                c[t][h] -= 1;
                c[h][t] -= 1;
            }
        }
        c
    }

    /// `(u, v) = -uᵗ C v`, the negative of the symmetrized Tits form.
    pub fn pairing(&self, u: &[i64], v: &[i64]) -> i64 {
        let c = self.cartan();
        let mut s = 0;
        for (i, row) in c.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                s += u[i] * x * v[j];
            }
        }
        -s
    }

    /// `(e_i, v)`.
    pub fn pairing_simple(&self, i: usize, v: &[i64]) -> i64 {
        let mut e = vec![0i64; self.len()];
        e[i] = 1;
        self.pairing(&e, v)
    }

    fn support_connected(&self, v: &[i64]) -> bool {
        let supp: Vec<usize> = (0..self.len()).filter(|&i| v[i] != 0).collect();
        let Some(&start) = supp.first() else { return false };
        let mut seen = BTreeSet::from([start]);
        let mut stack = vec![start];
        while let Some(i) = stack.pop() {
            for &(t, h) in &self.arrows {
                for (a, b) in [(t, h), (h, t)] {
                    if a == i && v[b] != 0 && seen.insert(b) {
                        stack.push(b);
                    }
                }
            }
        }
        seen.len() == supp.len()
    }
}

fn as_i64(v: &[u32]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "fundamental")]
    Fundamental,
    #[serde(rename = "real-root")]
    Real,
    #[serde(rename = "non-root")]
    NonRoot,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Fundamental => "fundamental",
            Verdict::Real => "real-root",
            Verdict::NonRoot => "non-root",
        })
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Reduction {
    pub v: Vec<i64>,
    pub word: Vec<usize>,
    pub verdict: Verdict,
}

/// Reflects at loop-free vertices with `(e_i, v) < 0` via `v -> v + (e_i, v) e_i`
/// until `v` is fundamental, a simple root, or leaves the positive cone.
pub fn reduce_to_fundamental(q: &Quiver, v: &[u32]) -> Reduction {
    let mut v = as_i64(v);
    let mut word = Vec::new();
    let verdict = loop {
        if v.iter().any(|&x| x < 0) || !q.support_connected(&v) {
            break Verdict::NonRoot;
        }
        let supp: Vec<usize> = (0..q.len()).filter(|&i| v[i] != 0).collect();
        if supp.len() == 1 && v[supp[0]] == 1 && q.loop_count(supp[0]) == 0 {
            break Verdict::Real;
        }
        let neg = (0..q.len()).find(|&i| q.loop_count(i) == 0 && q.pairing_simple(i, &v) < 0);
        match neg {
            Some(i) => {
                v[i] += q.pairing_simple(i, &v);
                word.push(i);
            }
            None => {
                let fundamental = (0..q.len()).all(|i| q.pairing_simple(i, &v) >= 0);
                break if fundamental { Verdict::Fundamental } else { Verdict::NonRoot };
            }
        }
    };
    Reduction { v, word, verdict }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum AffineKind {
    J,
    D4,
    E6,
    E7,
    E8,
}

impl AffineKind {
    /// Leg lengths `l_i`, the size `n` and `𝛍*` of the primitive imaginary root.
    fn table(self) -> (Vec<u32>, u32, &'static str) {
        match self {
            AffineKind::J => (vec![1], 1, "1"),
            AffineKind::D4 => (vec![2, 2, 2, 2], 2, "1,1|1,1|1,1|1,1"),
            AffineKind::E6 => (vec![3, 3, 3], 3, "1,1,1|1,1,1|1,1,1"),
            AffineKind::E7 => (vec![2, 4, 4], 4, "2,2|1,1,1,1|1,1,1,1"),
            AffineKind::E8 => (vec![2, 3, 6], 6, "3,3|2,2,2|1,1,1,1,1,1"),
        }
    }

    pub fn mu_star(self) -> MultiPartition {
        MultiPartition::parse(self.table().2).expect("table entry parses")
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CometData {
    pub mu: MultiPartition,
    pub g: u32,
    pub quiver: Quiver,
    pub dim: DimVector,
    pub big_delta: i64,
    pub delta: i64,
    pub sigma: i64,
    /// `None` stands for finite or other (non-affine) type.
    pub affine: Option<AffineKind>,
    /// `t` with `v_𝛍 = t v*` when the quiver is affine and `v_𝛍` is imaginary.
    pub imaginary_multiple: Option<u32>,
}

impl CometData {
    pub fn classification(&self) -> String {
        match self.affine {
            None => "finite/other".into(),
            Some(k) => format!("affine({k:?})"),
        }
    }
}

/// `σ(μ) = n μ_1 - Σ μ_j^2`.
pub fn sigma_partition(mu: &Partition) -> i64 {
    mu.size() as i64 * mu.largest() as i64 - mu.norm2() as i64
}

fn comet_shape(mu: &MultiPartition, g: u32) -> Quiver {
    let mut vertices = vec!["0".to_string()];
    let mut arrows = vec![(0, 0); g as usize];
    for (i, l) in mu.components().iter().enumerate() {
        for j in 1..l.len() {
            let idx = vertices.len();
            vertices.push(format!("[{},{}]", i + 1, j));
            arrows.push((idx, if j == 1 { 0 } else { idx - 1 }));
        }
    }
    Quiver { vertices, arrows }
}

/// Coordinates `(n, n - ν^i_1, n - ν^i_1 - ν^i_2, ...)` of `ν` on the legs of `Γ_𝛍`.
pub fn comet_dim_on(mu: &MultiPartition, nu: &MultiPartition) -> Result<Vec<i64>> {
    let n = nu.n()? as i64;
    let mut v = vec![n];
    for (m, l) in mu.components().iter().zip(nu.components()) {
        if l.len() > m.len() {
            return Err(Error::SizeMismatch(format!("{l} does not fit a leg of length {}", m.len())));
        }
        let mut acc = n;
        for j in 0..m.len().saturating_sub(1) {
            acc -= l.part(j + 1) as i64;
            v.push(acc);
        }
    }
    Ok(v)
}

fn affine_kind(mu: &MultiPartition, g: u32) -> Option<AffineKind> {
    let mut legs: Vec<u32> = mu.components().iter().map(|l| l.len() as u32).filter(|&l| l > 1).collect();
    legs.sort_unstable();
    match g {
        1 if legs.is_empty() => Some(AffineKind::J),
        0 => [AffineKind::D4, AffineKind::E6, AffineKind::E7, AffineKind::E8].into_iter().find(|k| k.table().0 == legs),
        _ => None,
    }
}

/// Comet-shaped quiver `Γ_𝛍` with dimension vector `v_𝛍` and its statistics.
pub fn comet_quiver(mu: &MultiPartition, g: u32) -> Result<CometData> {
    let n = mu.n()?;
    let quiver = comet_shape(mu, g);
    let dim: DimVector = comet_dim_on(mu, mu)?.into_iter().map(|x| x as u32).collect();
    let affine = affine_kind(mu, g);
    let v = as_i64(&dim);
    let imaginary_multiple = match affine {
        Some(kind) if n > 0 && (0..quiver.len()).all(|i| quiver.pairing_simple(i, &v) == 0) => {
            let (_, nstar, _) = kind.table();
            Some(n / nstar)
        }
        _ => None,
    };
    Ok(CometData {
        mu: mu.clone(),
        g,
        quiver,
        dim,
        big_delta: big_delta(mu, g)?,
        delta: small_delta(mu, g)?,
        sigma: mu.components().iter().map(sigma_partition).sum(),
        affine,
        imaginary_multiple,
    })
}

/// Parses `"g=1;mu=2,1|1,1,1"`.
pub fn parse_comet(s: &str) -> Result<(MultiPartition, u32)> {
    let mut g = None;
    let mut mu = None;
    for part in s.split(';') {
        match part.trim().split_once('=') {
            Some(("g", x)) => g = Some(x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad genus '{x}'")))?),
            Some(("mu", x)) => mu = Some(MultiPartition::parse(x.trim())?),
            _ => return Err(Error::Parse(format!("expected g=..;mu=.., got '{part}'"))),
        }
    }
    match (mu, g) {
        (Some(mu), Some(g)) => Ok((mu, g)),
        _ => Err(Error::Parse("comet needs both g and mu".into())),
    }
}

/// Which dimension vectors a Hua computation covers.
#[derive(Clone, Debug)]
pub enum Bound {
    /// All `v` with `|v| ≤ S`.
    Total(u32),
    /// All `v ≤ b` coordinatewise.
    Box(DimVector),
}

impl Bound {
    fn contains(&self, key: &[u32]) -> bool {
        match self {
            Bound::Total(s) => key.iter().sum::<u32>() <= *s,
            Bound::Box(b) => key.len() <= b.len() && key.iter().zip(b).all(|(x, y)| x <= y),
        }
    }

    fn max_degree(&self) -> usize {
        match self {
            Bound::Total(s) => *s as usize,
            Bound::Box(b) => b.iter().sum::<u32>() as usize,
        }
    }

    fn vectors(&self, m: usize) -> Vec<DimVector> {
        let mut out = vec![Vec::new()];
        for i in 0..m {
            let mut next = Vec::new();
            for v in &out {
                let used: u32 = v.iter().sum();
                let hi = match self {
                    Bound::Total(s) => s - used,
                    Bound::Box(b) => b[i],
                };
                for x in 0..=hi {
                    let mut w = v.clone();
                    w.push(x);
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }
}

/// Upper limit on the number of partition tuples a Hua computation may visit.
pub const HUA_TERM_CAP: usize = 200_000;

type QSeries = Series<Vec<u32>, RatFunc2>;

fn partition_count(n: u32) -> usize {
    let n = n as usize;
    let mut p = vec![0usize; n + 1];
    p[0] = 1;
    for part in 1..=n {
        for m in part..=n {
            p[m] = p[m].saturating_add(p[m - part]);
        }
    }
    p[n]
}

fn trim(v: &[u32]) -> Vec<u32> {
    let mut v = v.to_vec();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn restrict(h: Hom<Vec<u32>, RatFunc2>, b: &Bound) -> Hom<Vec<u32>, RatFunc2> {
    Hom { terms: h.terms.into_iter().filter(|(k, _)| b.contains(k)).collect() }
}

fn box_log(f: &QSeries, b: &Bound) -> QSeries {
    let n = f.len() - 1;
    let mut l: QSeries = zero_series(n);
    for m in 1..=n {
        let mut acc = f[m].scale(&rat(m as i64, 1));
        for j in 1..m {
            if !l[j].is_zero() && !f[m - j].is_zero() {
                acc = acc.sub(&restrict(l[j].mul(&f[m - j]), b).scale(&rat(j as i64, 1)));
            }
        }
        l[m] = acc.scale(&rat(1, m as i64));
    }
    l
}

fn box_exp(g: &QSeries, b: &Bound) -> QSeries {
    let n = g.len() - 1;
    let mut e: QSeries = zero_series(n);
    e[0] = Hom::one();
    for m in 1..=n {
        let mut acc = Hom::zero();
        for j in 1..=m {
            if !g[j].is_zero() && !e[m - j].is_zero() {
                acc = acc.add(&restrict(g[j].mul(&e[m - j]), b).scale(&rat(j as i64, 1)));
            }
        }
        e[m] = acc.scale(&rat(1, m as i64));
    }
    e
}

fn box_adams(a: &QSeries, d: u32, b: &Bound) -> QSeries {
    let n = a.len() - 1;
    let mut out = zero_series(n);
    for (i, h) in a.iter().enumerate() {
        let j = i * d as usize;
        if j > n {
            break;
        }
        out[j] = restrict(h.adams(d), b);
    }
    out
}

fn box_pleth_log(f: &QSeries, b: &Bound) -> QSeries {
    let l = box_log(f, b);
    let n = f.len() - 1;
    let mut out: QSeries = zero_series(n);
    for d in 1..=n as u32 {
        let mu = mobius(d);
        if mu != 0 {
            let a = box_adams(&l, d, b);
            for (o, x) in out.iter_mut().zip(a.iter()) {
                *o = o.add(&x.scale(&rat(mu, d as i64)));
            }
        }
    }
    out
}

/// `φ_d(q) = (1/d) Σ_{e|d} μ(d/e)(q^e - 1)`, the number of degree-`d` Frobenius orbits on `F̄_q^×`.
pub fn phi_orbits(d: u32) -> RatFunc2 {
    let q = RatFunc2::x();
    let mut acc = RatFunc2::zero();
    for e in divisors(d) {
        acc = acc.add(&q.pow(e).sub(&RatFunc2::one()).scale(&rat(mobius(d / e), 1)));
    }
    acc.scale(&rat(1, d as i64))
}

/// `ϕ_d(q) = (1/d) Σ_{e|d} μ(d/e) q^e`, the number of degree-`d` Frobenius orbits on `F̄_q`.
pub fn phi_full(d: u32) -> RatFunc2 {
    let q = RatFunc2::x();
    let mut acc = RatFunc2::zero();
    for e in divisors(d) {
        acc = acc.add(&q.pow(e).scale(&rat(mobius(d / e), 1)));
    }
    acc.scale(&rat(1, d as i64))
}

/// Counts `M_{Γ,v}` and Kac polynomials `A_{Γ,v}` over a range of dimension vectors.
#[derive(Clone, Debug)]
pub struct HuaTable {
    pub quiver: Quiver,
    pub m: BTreeMap<DimVector, RatFunc2>,
    /// `Log` of the `M`-series.
    pub a: BTreeMap<DimVector, RatFunc2>,
    /// `(q - 1) Log` of the unipotent series, the second route to `A`.
    pub a_dual: BTreeMap<DimVector, RatFunc2>,
}

/// Hua's formula: the unipotent series
/// `P = Σ_π Π_{arrows a} q^{⟨π(ta),π(ha)⟩} / Π_i a_{π(i)}(q) X^{|π|}` gives
/// `Σ M_v X^v = exp(Σ_d φ_d(q) ψ_d log P)` and `A = Log M`.
pub fn hua_table(q: &Quiver, bound: &Bound) -> Result<HuaTable> {
    let m = q.len();
    if let Bound::Box(b) = bound {
        if b.len() != m {
            return Err(Error::SizeMismatch(format!("dimension vector has {} entries, quiver has {m} vertices", b.len())));
        }
    }
    let vecs = bound.vectors(m);
    let work: usize = vecs.iter().map(|v| v.iter().map(|&x| partition_count(x)).product::<usize>()).sum();
    if work > HUA_TERM_CAP {
        return Err(Error::CapExceeded(format!("{work} partition tuples exceed the cap {HUA_TERM_CAP}")));
    }
    let top = bound.max_degree();
    let mut inv_a: HashMap<Partition, RatFunc2> = HashMap::new();
    for s in 0..=vecs.iter().flatten().copied().max().unwrap_or(0) {
        for l in partitions(s) {
            inv_a.insert(l.clone(), a_lambda(&l).inv()?);
        }
    }
    let qv = RatFunc2::x();
    let terms: Vec<(Vec<u32>, RatFunc2)> = vecs
        .par_iter()
        .map(|v| {
            let mut acc = RatFunc2::zero();
            for pi in partition_tuples(v) {
                let e: u64 = q.arrows.iter().map(|&(t, h)| pi[t].pairing(&pi[h])).sum();
                let mut c = qv.pow(e as u32);
                for l in &pi {
                    c = c.mul(&inv_a[l]);
                }
                acc = acc.add(&c);
            }
            (trim(v), acc)
        })
        .collect();
    let mut p: QSeries = zero_series(top);
    for (key, c) in terms {
        let d = key.iter().sum::<u32>() as usize;
        p[d].add_term(key, c);
    }
    let logp = box_log(&p, bound);
    let mut s: QSeries = zero_series(top);
    for d in 1..=top as u32 {
        let a = box_adams(&logp, d, bound);
        let f = phi_orbits(d);
        for (o, x) in s.iter_mut().zip(a.iter()) {
            *o = o.add(&x.scale_by(&f));
        }
    }
    let mseries = box_exp(&s, bound);
    let aseries = box_pleth_log(&mseries, bound);
    let dual = box_pleth_log(&p, bound);
    let qm1 = qv.sub(&RatFunc2::one());
    let collect = |ser: &QSeries, f: &dyn Fn(&RatFunc2) -> RatFunc2| -> BTreeMap<DimVector, RatFunc2> {
        vecs.iter()
            .map(|v| {
                let key = trim(v);
                let d = key.iter().sum::<u32>() as usize;
                (v.clone(), ser[d].terms.get(&key).map(f).unwrap_or_else(RatFunc2::zero))
            })
            .collect()
    };
    Ok(HuaTable {
        quiver: q.clone(),
        m: collect(&mseries, &|c| c.clone()),
        a: collect(&aseries, &|c| c.clone()),
        a_dual: collect(&dual, &|c| c.mul(&qm1)),
    })
}

fn to_poly(r: &RatFunc2, what: &str) -> Result<LaurentPoly2> {
    match r.to_laurent(Vars::QT) {
        Some(p) if p.is_polynomial() && p.has_integer_coefficients() => Ok(p),
        _ => Err(Error::NotPolynomial(format!("{what} = {}", r.display(Vars::QT)))),
    }
}

/// `M_{Γ,v}(q)` for every `v` with `|v| ≤ S`.
pub fn hua_m_series(q: &Quiver, cap: u32) -> Result<BTreeMap<DimVector, LaurentPoly2>> {
    let t = hua_table(q, &Bound::Total(cap))?;
    t.m.iter().map(|(v, c)| Ok((v.clone(), to_poly(c, &format!("M_{v:?}"))?))).collect()
}

/// `A_{Γ,v}(q)`.
pub fn kac_a(q: &Quiver, v: &[u32]) -> Result<LaurentPoly2> {
    let t = hua_table(q, &Bound::Box(v.to_vec()))?;
    to_poly(&t.a[v], &format!("A_{v:?}"))
}

/// `1 - ½ vᵗCv`.
pub fn kac_degree(q: &Quiver, v: &[u32]) -> i64 {
    let v = as_i64(v);
    1 + q.pairing(&v, &v) / 2
}

/// Degree, monicity and root-type checks on every nonzero `v` of a table.
pub fn kac_violations(t: &HuaTable) -> Vec<String> {
    let mut out = Vec::new();
    for (v, a) in &t.a {
        if v.iter().all(|&x| x == 0) {
            continue;
        }
        if t.a_dual[v] != *a {
            out.push(format!("{v:?}: Log M and (q-1) Log P differ"));
        }
        let p = match to_poly(a, "A") {
            Ok(p) => p,
            Err(e) => {
                out.push(format!("{v:?}: {e}"));
                continue;
            }
        };
        let verdict = reduce_to_fundamental(&t.quiver, v).verdict;
        if p.is_zero() != (verdict == Verdict::NonRoot) {
            out.push(format!("{v:?}: A = {p} but verdict {verdict}"));
        }
        if (p == LaurentPoly2::one(Vars::QT)) != (verdict == Verdict::Real) {
            out.push(format!("{v:?}: A = {p} but verdict {verdict}"));
        }
        if let Some((_, hi)) = p.degree_range(0) {
            if hi as i64 != kac_degree(&t.quiver, v) || p.coeff(hi, 0) != rat(1, 1) {
                out.push(format!("{v:?}: A = {p} is not monic of degree {}", kac_degree(&t.quiver, v)));
            }
        }
    }
    out
}

/// Number of conjugacy classes of a type: `Π_d [φ_d]_{r_d} / Π m_{(d,λ)}!`.
pub fn class_count(omega: &TypeSeq) -> RatFunc2 {
    let mut acc = RatFunc2::one();
    let mut per_degree: BTreeMap<u32, u32> = BTreeMap::new();
    for (d, _) in omega.entries() {
        *per_degree.entry(*d).or_insert(0) += 1;
    }
    for (d, r) in per_degree {
        let f = phi_orbits(d);
        for j in 0..r {
            acc = acc.mul(&f.sub(&RatFunc2::int(j as i64)));
        }
    }
    for m in omega.multiplicities().values() {
        acc = acc.scale(&BigRat::from_integer(factorial(*m)).recip());
    }
    acc
}

type SeriesKey = (u32, usize, usize);
type SeriesCache = OnceLock<RwLock<HashMap<SeriesKey, Arc<SymSeries<RatFunc2>>>>>;

static G_CACHE: SeriesCache = OnceLock::new();
static A_CACHE: SeriesCache = OnceLock::new();

fn cached(
    cache: &'static SeriesCache,
    key: SeriesKey,
    f: impl FnOnce() -> Result<SymSeries<RatFunc2>>,
) -> Result<Arc<SymSeries<RatFunc2>>> {
    let c = cache.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = c.read().expect("cache poisoned").get(&key) {
        return Ok(v.clone());
    }
    let v = Arc::new(f()?);
    Ok(c.write().expect("cache poisoned").entry(key).or_insert(v).clone())
}

/// `Σ_𝛍 G_𝛍(q) m_𝛍` by Burnside over conjugacy-class types of `GL_n(F_q)`:
/// `Σ_ω (number of classes of type ω) ℋ_ω(0,√q) Π_i H̃_ω(x_i;q)`.
pub fn g_series_burnside(g: u32, k: usize, big_n: usize) -> Result<Arc<SymSeries<RatFunc2>>> {
    cached(&G_CACHE, (g, k, big_n), || {
        let mut p: Series<MultiPartition, RatFunc2> = zero_series(big_n);
        p[0] = Hom::one();
        for n in 1..=big_n as u32 {
            let pieces: Vec<Hom<MultiPartition, RatFunc2>> = types(n)
                .par_iter()
                .map(|om| -> Result<Hom<MultiPartition, RatFunc2>> {
                    let mut w = class_count(om);
                    for (d, l) in om.entries() {
                        w = w.mul(&hook_pure(l, g).inflate(*d));
                    }
                    let h = type_hall_littlewood(om)?;
                    let row: Vec<(Partition, RatFunc2)> =
                        h.p_piece(n as usize).terms.iter().map(|(key, c)| (key.0[0].clone(), c.clone())).collect();
                    let mut cur: Vec<(Vec<Partition>, RatFunc2)> = vec![(Vec::new(), w)];
                    for _ in 0..k {
                        let mut next = Vec::with_capacity(cur.len() * row.len());
                        for (key, c) in &cur {
                            for (rho, x) in &row {
                                let mut nk = key.clone();
                                nk.push(rho.clone());
                                next.push((nk, c.mul(x)));
                            }
                        }
                        cur = next;
                    }
                    let mut out = Hom::zero();
                    for (key, c) in cur {
                        out.add_term(MultiPartition(key), c);
                    }
                    Ok(out)
                })
                .collect::<Result<_>>()?;
            for piece in pieces {
                p[n as usize] = p[n as usize].add(&piece);
            }
        }
        Ok(SymSeries::from_p_series(k, p))
    })
}

/// `Σ G_𝛍 m_𝛍 = exp(Σ_d φ_d(q) ψ_d log Ω(x; 0, √q))`.
pub fn g_series_product(g: u32, k: usize, big_n: usize) -> Result<SymSeries<RatFunc2>> {
    let l = omega_spec(g, k, big_n, Specialization::Pure)?.log()?;
    let mut s = SymSeries::zero(k, big_n);
    for d in 1..=big_n as u32 {
        s = s.add(&l.adams_truncated(d).scale_by(&phi_orbits(d)))?;
    }
    s.exp()
}

/// `Σ A_𝛍 m_𝛍 = Log Σ G_𝛍 m_𝛍`, with `G` from the Burnside route.
pub fn a_series(g: u32, k: usize, big_n: usize) -> Result<Arc<SymSeries<RatFunc2>>> {
    cached(&A_CACHE, (g, k, big_n), || g_series_burnside(g, k, big_n)?.pleth_log())
}

/// `G_𝛍(q)`.
pub fn g_mu(mu: &MultiPartition, g: u32) -> Result<LaurentPoly2> {
    let s = g_series_burnside(g, mu.k(), mu.n()? as usize)?;
    to_poly(&s.extract_h(mu)?, &format!("G_{mu}"))
}

/// `G_𝛍(q)` from the product formula.
pub fn g_mu_via_product(mu: &MultiPartition, g: u32) -> Result<LaurentPoly2> {
    let s = g_series_product(g, mu.k(), mu.n()? as usize)?;
    to_poly(&s.extract_h(mu)?, &format!("G_{mu}"))
}

/// `A_𝛍(q)`, the Kac polynomial of `(Γ_𝛍, v_𝛍)`.
pub fn a_mu(mu: &MultiPartition, g: u32) -> Result<LaurentPoly2> {
    let s = a_series(g, mu.k(), mu.n()? as usize)?;
    to_poly(&s.extract_h(mu)?, &format!("A_{mu}"))
}

pub use crate::report::IdentityReport;

/// First `p`-basis coefficient where two series differ.
pub fn first_discrepancy(a: &SymSeries<RatFunc2>, b: &SymSeries<RatFunc2>) -> Option<String> {
    let d = a.sub(b).ok()?;
    for n in 0..=d.order() {
        if let Some((key, c)) = d.p_piece(n).terms.iter().next() {
            return Some(format!("p-coefficient of {key} differs by {}", c.display(Vars::QT)));
        }
    }
    None
}

fn count_terms(a: &SymSeries<RatFunc2>) -> usize {
    (0..=a.order()).map(|n| a.p_piece(n).terms.len()).sum()
}

/// The Burnside and product routes to `Σ G_𝛍 m_𝛍` agree.
pub fn g_routes_check(g: u32, k: usize, big_n: usize) -> Result<IdentityReport> {
    let a = g_series_burnside(g, k, big_n)?;
    let b = g_series_product(g, k, big_n)?;
    let witness = first_discrepancy(&a, &b);
    Ok(IdentityReport { identity: format!("G routes g={g} k={k} N={big_n}"), pass: witness.is_none(), checked: count_terms(&a), witness })
}

/// `Log(Σ q^{-(d_𝛍-2)/2} V_𝛍 m_𝛍) = q/(q-1) Σ A_𝛍 m_𝛍`, the left side from
/// `exp(Σ_d ϕ_d(q) ψ_d log Ω(x; 0, √q))`.
pub fn v_mu_identity_check(g: u32, k: usize, big_n: usize) -> Result<IdentityReport> {
    let l = omega_spec(g, k, big_n, Specialization::Pure)?.log()?;
    let mut s = SymSeries::zero(k, big_n);
    for d in 1..=big_n as u32 {
        s = s.add(&l.adams_truncated(d).scale_by(&phi_full(d)))?;
    }
    let lhs = s.exp()?.pleth_log()?;
    let q = RatFunc2::x();
    let factor = q.div(&q.sub(&RatFunc2::one()))?;
    let rhs = a_series(g, k, big_n)?.scale_by(&factor);
    let witness = first_discrepancy(&lhs, &rhs);
    Ok(IdentityReport { identity: format!("V-series g={g} k={k} N={big_n}"), pass: witness.is_none(), checked: count_terms(&lhs), witness })
}

/// Purity: `A_𝛍(q) = ℍ_𝛍(0, √q)` for every `𝛍` of size `n ≤ N` in `k` parts.
pub fn purity_check(g: u32, k: usize, big_n: usize) -> Result<IdentityReport> {
    let a = a_series(g, k, big_n)?;
    let h = log_omega(g, k, big_n, Specialization::Pure)?;
    let norm = Specialization::Pure.normalizer();
    let mut checked = 0;
    for n in 1..=big_n as u32 {
        for mu in crate::partitions::multipartitions(n, k) {
            let lhs = to_poly(&a.extract_h(&mu)?, &format!("A_{mu}"))?;
            let rhs = h.extract_h(&mu)?.mul(&norm);
            checked += 1;
            if RatFunc2::from_poly(&lhs) != rhs {
                return Ok(IdentityReport {
                    identity: format!("purity g={g} k={k} N={big_n}"),
                    pass: false,
                    checked,
                    witness: Some(format!("{mu}: A = {lhs}, ℍ(0,√q) = {}", rhs.display(Vars::QT))),
                });
            }
        }
    }
    Ok(IdentityReport { identity: format!("purity g={g} k={k} N={big_n}"), pass: true, checked, witness: None })
}

/// Strictly restricted `M*`: `Exp` of the strict part of the comet `A`-series
/// must reproduce `G_𝛍` at `v_𝛍`.
pub fn hua_strict_check(mu: &MultiPartition, g: u32) -> Result<IdentityReport> {
    let c = comet_quiver(mu, g)?;
    let bound = Bound::Box(c.dim.clone());
    let t = hua_table(&c.quiver, &bound)?;
    let top = bound.max_degree();
    let legs: Vec<Vec<usize>> = {
        let mut out = Vec::new();
        let mut idx = 1;
        for l in mu.components() {
            let s = l.len().saturating_sub(1);
            out.push((idx..idx + s).collect());
            idx += s;
        }
        out
    };
    let strict = |v: &[u32]| {
        legs.iter().all(|leg| {
            let mut prev = v[0];
            leg.iter().all(|&i| {
                let ok = v[i] <= prev;
                prev = v[i];
                ok
            })
        })
    };
    let mut a: QSeries = zero_series(top);
    for (v, c) in &t.a {
        if v.iter().any(|&x| x > 0) && strict(v) && !c.is_zero() {
            a[v.iter().sum::<u32>() as usize].add_term(trim(v), c.clone());
        }
    }
    let mut s: QSeries = zero_series(top);
    for d in 1..=top as u32 {
        let ad = box_adams(&a, d, &bound);
        for (o, x) in s.iter_mut().zip(ad.iter()) {
            *o = o.add(&x.scale(&rat(1, d as i64)));
        }
    }
    let mstar = box_exp(&s, &bound);
    let key = trim(&c.dim);
    let lhs = mstar[top].terms.get(&key).cloned().unwrap_or_else(RatFunc2::zero);
    let rhs = RatFunc2::from_poly(&g_mu(mu, g)?);
    let pass = lhs == rhs;
    Ok(IdentityReport {
        identity: format!("strict M* = G for {mu}, g={g}"),
        pass,
        checked: 1,
        witness: (!pass).then(|| format!("M* = {}, G = {}", lhs.display(Vars::QT), rhs.display(Vars::QT))),
    })
}

/// `σ_μ(ν) = μ_1 |ν|^2 - |μ| Σ ν_i^2`.
pub fn sigma_mu_nu(mu: &Partition, nu: &Partition) -> i64 {
    let s = nu.size() as i64;
    mu.largest() as i64 * s * s - mu.size() as i64 * nu.norm2() as i64
}

fn is_rectangular(l: &Partition) -> bool {
    l.parts().iter().all(|&p| p == l.largest())
}

/// Matrices with row sums `rows` and `s` nonzero columns, optionally with fixed
/// column sums, returned as the column partitions.
fn splittings(rows: &[u32], s: usize, cols: Option<&[u32]>) -> Vec<Vec<Partition>> {
    let mut out = BTreeSet::new();
    fn rec(
        rows: &[u32],
        i: usize,
        s: usize,
        cols: Option<&[u32]>,
        acc: &mut Vec<Vec<u32>>,
        out: &mut BTreeSet<Vec<Partition>>,
    ) {
        if i == rows.len() {
            let sums: Vec<u32> = acc.iter().map(|c| c.iter().sum()).collect();
            let ok = match cols {
                Some(c) => sums == c,
                None => sums.iter().all(|&x| x > 0),
            };
            if ok {
                let mut parts: Vec<Partition> = acc.iter().map(|c| Partition::from_unsorted(c.clone())).collect();
                if cols.is_none() {
                    parts.sort();
                }
                out.insert(parts);
            }
            return;
        }
        fn distribute(
            left: u32,
            j: usize,
            rows: &[u32],
            i: usize,
            s: usize,
            cols: Option<&[u32]>,
            acc: &mut Vec<Vec<u32>>,
            out: &mut BTreeSet<Vec<Partition>>,
        ) {
            if j + 1 == s {
                let cap = cols.map(|c| c[j] - acc[j].iter().sum::<u32>()).unwrap_or(u32::MAX);
                if left <= cap {
                    acc[j].push(left);
                    rec(rows, i + 1, s, cols, acc, out);
                    acc[j].pop();
                }
                return;
            }
            let cap = cols.map(|c| c[j] - acc[j].iter().sum::<u32>()).unwrap_or(u32::MAX);
            for x in 0..=left.min(cap) {
                acc[j].push(x);
                distribute(left - x, j + 1, rows, i, s, cols, acc, out);
                acc[j].pop();
            }
        }
        distribute(rows[i], 0, rows, i, s, cols, acc, out);
    }
    let mut acc = vec![Vec::new(); s];
    rec(rows, 0, s, cols, &mut acc, &mut out);
    out.into_iter().collect()
}

/// `Σ_p σ_μ(ν^p) ≤ σ_μ(μ)` over all splittings `μ = Σ_p ν^p`, with equality exactly
/// when `s = 1` or all of `μ, ν^p` are rectangular of the same length.
pub fn nrm_ineq_violations(n: u32) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut out = Vec::new();
    for mu in partitions(n) {
        let rhs = sigma_mu_nu(&mu, &mu);
        for s in 1..=n as usize {
            for nus in splittings(mu.parts(), s, None) {
                checked += 1;
                let lhs: i64 = nus.iter().map(|nu| sigma_mu_nu(&mu, nu)).sum();
                let rect = is_rectangular(&mu) && nus.iter().all(|nu| is_rectangular(nu) && nu.len() == mu.len());
                let expected = s == 1 || rect;
                if lhs > rhs || (lhs == rhs) != expected {
                    out.push(format!("μ={mu}, ν={nus:?}: {lhs} vs {rhs}"));
                }
            }
        }
    }
    (checked, out)
}

/// `Σ_p Δ(ν^p) ≤ Δ(𝛍)` for `δ(𝛍) ≥ 0` over all decompositions `μ^i = Σ_p ν^{i,p}`, with
/// equality exactly when `s = 1` or `Γ_𝛍` is affine and every `v` involved is imaginary.
///
/// The sum splits over `i`, so each component is enumerated separately and the
/// equality set is the product of the per-component maximizers.
pub fn delta_ineq_violations(n: u32, k: usize, g: u32) -> Result<(u128, Vec<String>)> {
    let mut checked: u128 = 0;
    let mut out = Vec::new();
    let kk = 2 * g as i64 - 2 + k as i64;
    for mu in crate::partitions::multipartitions(n, k) {
        if small_delta(&mu, g)? < 0 {
            continue;
        }
        let comet = comet_quiver(&mu, g)?;
        let radical = |nu: &MultiPartition| -> Result<bool> {
            let v = comet_dim_on(&mu, nu)?;
            Ok(comet.affine.is_some() && (0..comet.quiver.len()).all(|i| comet.quiver.pairing_simple(i, &v) == 0))
        };
        let mu_imag = comet.imaginary_multiple.is_some();
        let rhs2 = 2 * comet.big_delta;
        for sizes in partitions(n) {
            let s = sizes.len();
            let per: Vec<Vec<Vec<Partition>>> =
                mu.components().iter().map(|m| splittings(m.parts(), s, Some(sizes.parts()))).collect();
            checked += per.iter().map(|x| x.len() as u128).product::<u128>();
            // 2 Σ_p Δ(ν^p) = kk Σ n_p^2 - Σ_i Σ_p ‖ν^{i,p}‖^2
            let base: i64 = kk * sizes.norm2() as i64;
            let best: Vec<(u64, Vec<&Vec<Partition>>)> = per
                .iter()
                .map(|opts| {
                    let min = opts.iter().map(|t| t.iter().map(|p| p.norm2()).sum::<u64>()).min().expect("nonempty");
                    (min, opts.iter().filter(|t| t.iter().map(|p| p.norm2()).sum::<u64>() == min).collect())
                })
                .collect();
            let max_lhs2 = base - best.iter().map(|(m, _)| *m as i64).sum::<i64>();
            if max_lhs2 > rhs2 {
                out.push(format!("𝛍={mu}, sizes {sizes}: 2ΣΔ = {max_lhs2} > {rhs2}"));
                continue;
            }
            if max_lhs2 < rhs2 {
                continue;
            }
            let mut combos: Vec<Vec<Vec<Partition>>> = vec![Vec::new()];
            for (_, opts) in &best {
                combos = combos
                    .into_iter()
                    .flat_map(|c| {
                        opts.iter().map(move |o| {
                            let mut c = c.clone();
                            c.push((*o).clone());
                            c
                        })
                    })
                    .collect();
            }
            for combo in combos {
                let nus: Vec<MultiPartition> =
                    (0..s).map(|p| MultiPartition(combo.iter().map(|t| t[p].clone()).collect())).collect();
                let all_imag = mu_imag && nus.iter().map(&radical).collect::<Result<Vec<bool>>>()?.iter().all(|&b| b);
                if !(s == 1 || all_imag) {
                    out.push(format!("𝛍={mu}: equality at {nus:?} outside the stated cases"));
                }
            }
        }
        // converse: splitting an imaginary root into imaginary roots gives equality
        if let (Some(t), Some(kind)) = (comet.imaginary_multiple, comet.affine) {
            let star = if kind == AffineKind::J { MultiPartition(vec![Partition::row(1); k]) } else { mu.divide(t).expect("v = t v*") };
            for parts in partitions(t) {
                let total: i64 = parts.parts().iter().map(|&tp| big_delta(&star.scale(tp), g)).sum::<Result<i64>>()?;
                if total != comet.big_delta {
                    out.push(format!("𝛍={mu}: imaginary splitting {parts} gives ΣΔ = {total}"));
                }
            }
        }
    }
    Ok((checked, out))
}

/// `μ_1‖Σ ν^p‖^2 - n Σ‖ν^p‖^2 ≤ μ_1 n^2 - n‖μ‖^2` for `ν^p ⊢ μ_p`, with equality
/// exactly when `μ` is rectangular and all `ν^p` agree, or every `ν^p = (μ_p)`.
pub fn ineq1_violations(n: u32) -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut out = Vec::new();
    for mu in partitions(n) {
        let m1 = mu.largest() as i64;
        let nn = n as i64;
        let rhs = m1 * nn * nn - nn * mu.norm2() as i64;
        for nus in partition_tuples(mu.parts()) {
            checked += 1;
            let sum = nus.iter().fold(Partition::empty(), |a, b| a.sum(b));
            let lhs = m1 * sum.norm2() as i64 - nn * nus.iter().map(|p| p.norm2() as i64).sum::<i64>();
            let case1 = is_rectangular(&mu) && nus.windows(2).all(|w| w[0] == w[1]);
            let case2 = nus.iter().zip(mu.parts()).all(|(nu, &m)| *nu == Partition::row(m));
            if lhs > rhs || (lhs == rhs) != (case1 || case2) {
                out.push(format!("μ={mu}, ν={nus:?}: {lhs} vs {rhs}"));
            }
        }
    }
    (checked, out)
}

/// `gcd` of the parts of every component, the `t` with all `μ^i` divisible by `t`.
pub fn common_divisor(mu: &MultiPartition) -> u32 {
    mu.components().iter().flat_map(|l| l.parts().iter().copied()).fold(0u32, |a, b| a.gcd(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::charvar::hlv_spec;
    use crate::macdonald::qpoly;
    use crate::partitions::multipartitions;

    fn mp(s: &str) -> MultiPartition {
        MultiPartition::parse(s).unwrap()
    }

    #[test]
    fn json_roundtrip() {
        let s = r#"{"vertices":["0","[1,1]"],"arrows":[["[1,1]","0"],["0","0"]]}"#;
        let q = Quiver::from_json(s).unwrap();
        assert_eq!(q.arrows, vec![(1, 0), (0, 0)]);
        assert_eq!(serde_json::to_string(&q).unwrap(), s);
        assert!(Quiver::from_json(r#"{"vertices":["0"],"arrows":[["0","1"]]}"#).is_err());
    }

    #[test]
    fn cartan_and_pairing() {
        assert_eq!(Quiver::jordan().cartan(), vec![vec![0]]);
        let c = comet_quiver(&mp("2,1"), 1).unwrap();
        let v = as_i64(&c.dim);
        assert_eq!(c.dim, vec![3, 1]);
        assert_eq!(c.quiver.pairing_simple(1, &v), 1);
        assert_eq!(c.quiver.pairing(&[1, 0], &[1, 0]), 0);
        let c = comet_quiver(&mp("1,1,1"), 2).unwrap();
        assert_eq!(c.quiver.pairing(&[1, 0, 0], &[1, 0, 0]), 2);
        assert_eq!(c.quiver.pairing(&[0, 1, 0], &[0, 1, 0]), -2);
        assert_eq!(c.quiver.pairing(&[0, 1, 0], &[0, 0, 1]), 1);
        for n in 1..=4 {
            for g in 0..=2 {
                for mu in multipartitions(n, 2) {
                    let c = comet_quiver(&mu, g).unwrap();
                    let v = as_i64(&c.dim);
                    assert_eq!(c.quiver.pairing(&v, &v), 2 * c.big_delta);
                    assert_eq!(c.quiver.pairing_simple(0, &v), c.delta);
                    let mut idx = 1;
                    for l in mu.components() {
                        for j in 0..l.len().saturating_sub(1) {
                            assert_eq!(c.quiver.pairing_simple(idx, &v), l.part(j + 1) as i64 - l.part(j + 2) as i64);
                            idx += 1;
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn comet_statistics() {
        let c = comet_quiver(&mp("1,1|1,1|1,1|1,1"), 0).unwrap();
        assert_eq!(c.affine, Some(AffineKind::D4));
        assert_eq!(c.imaginary_multiple, Some(1));
        assert_eq!(c.classification(), "affine(D4)");
        assert_eq!(AffineKind::D4.mu_star(), mp("1,1|1,1|1,1|1,1"));
        for n in 1..=3 {
            let c = comet_quiver(&MultiPartition(vec![Partition::row(n)]), 1).unwrap();
            assert_eq!((c.affine, c.delta, c.imaginary_multiple), (Some(AffineKind::J), 0, Some(n)));
        }
        let c = comet_quiver(&mp("1,1"), 1).unwrap();
        assert_eq!((c.big_delta, crate::charvar::d_mu(&c.mu, 1).unwrap()), (1, 4));
        assert_eq!(comet_quiver(&mp("2,2|2,2|2,2|2,2"), 0).unwrap().imaginary_multiple, Some(2));
        assert_eq!(comet_quiver(&mp("3,3|2,2,2|1,1,1,1,1,1"), 0).unwrap().affine, Some(AffineKind::E8));
        assert_eq!(comet_quiver(&mp("2,2|1,1,1,1|1,1,1,1|4"), 0).unwrap().affine, Some(AffineKind::E7));
        assert_eq!(comet_quiver(&mp("2,1,1|2,1,1|2,1,1"), 0).unwrap().affine, Some(AffineKind::E6));
        assert_eq!(comet_quiver(&mp("2,1,1|2,1,1|2,1,1"), 0).unwrap().imaginary_multiple, None);
        assert_eq!(comet_quiver(&mp("2,1|2,1|1,1,1"), 0).unwrap().affine, None);
        for n in 1..=5 {
            for g in 0..=2 {
                for mu in multipartitions(n, 3) {
                    let c = comet_quiver(&mu, g).unwrap();
                    assert_eq!(2 * c.big_delta, n as i64 * c.delta + c.sigma);
                    assert!(c.sigma >= 0);
                    assert_eq!(c.sigma == 0, mu.components().iter().all(is_rectangular));
                }
            }
        }
        assert_eq!(parse_comet("g=1;mu=2,1|1,1,1").unwrap(), (mp("2,1|1,1,1"), 1));
    }

    #[test]
    fn reflections() {
        let c = comet_quiver(&mp("1,1"), 1).unwrap();
        assert_eq!(reduce_to_fundamental(&c.quiver, &c.dim).verdict, Verdict::Fundamental);
        let a2 = Quiver::path(2);
        assert_eq!(reduce_to_fundamental(&a2, &[1, 0]).verdict, Verdict::Real);
        assert_eq!(reduce_to_fundamental(&a2, &[2, 0]).verdict, Verdict::NonRoot);
        let r = reduce_to_fundamental(&a2, &[1, 1]);
        assert_eq!(r.verdict, Verdict::Real);
        assert_eq!(r.word.len(), 1);
        assert_eq!(reduce_to_fundamental(&Quiver::path(3), &[1, 0, 1]).verdict, Verdict::NonRoot);
    }

    fn m_of(q: &Quiver, cap: u32, v: &[u32]) -> LaurentPoly2 {
        hua_m_series(q, cap).unwrap()[v].clone()
    }

    #[test]
    fn hua_counts() {
        let j = Quiver::jordan();
        assert_eq!(m_of(&j, 2, &[1]), qpoly([(1, 1)]));
        assert_eq!(m_of(&j, 2, &[2]), qpoly([(2, 1), (1, 1)]));
        assert_eq!(m_of(&Quiver::path(2), 2, &[1, 1]), qpoly([(0, 2)]));
        assert_eq!(kac_a(&j, &[1]).unwrap(), qpoly([(1, 1)]));
        assert_eq!(kac_a(&j, &[2]).unwrap(), qpoly([(1, 1)]));
        assert_eq!(kac_a(&j, &[3]).unwrap(), qpoly([(1, 1)]));
        assert_eq!(kac_a(&Quiver::path(3), &[1, 1, 1]).unwrap(), qpoly([(0, 1)]));
        assert!(matches!(hua_m_series(&Quiver::loops(2), 40), Err(Error::CapExceeded(_))));
    }

    #[test]
    fn kac_theorem_on_tables() {
        let quivers = [Quiver::jordan(), Quiver::loops(2), Quiver::path(2), Quiver::path(3), comet_shape(&mp("2,1|2,1"), 0), comet_shape(&mp("2,1"), 1)];
        for q in &quivers {
            let t = hua_table(q, &Bound::Total(4)).unwrap();
            let v = kac_violations(&t);
            assert!(v.is_empty(), "{v:?}");
        }
        let d4 = comet_shape(&mp("1,1|1,1|1,1|1,1"), 0);
        let t = hua_table(&d4, &Bound::Box(vec![2, 1, 1, 1, 1])).unwrap();
        assert!(kac_violations(&t).is_empty());
        assert_eq!(to_poly(&t.a[&vec![2, 1, 1, 1, 1]], "").unwrap(), qpoly([(1, 1), (0, 4)]));
    }

    #[test]
    fn orientation_does_not_matter() {
        let q = Quiver::new(vec!["a".into(), "b".into(), "c".into()], vec![(0, 1), (2, 1), (1, 1)]).unwrap();
        let a = hua_table(&q, &Bound::Total(4)).unwrap();
        let b = hua_table(&q.reversed(), &Bound::Total(4)).unwrap();
        assert_eq!(a.m, b.m);
        assert_eq!(a.a, b.a);
    }

    #[test]
    fn orbit_functions() {
        assert_eq!(phi_orbits(1), RatFunc2::from_poly(&qpoly([(1, 1), (0, -1)])));
        assert_eq!(phi_orbits(2), RatFunc2::from_poly(&qpoly([(2, 1), (1, -1)])).scale(&rat(1, 2)));
        assert_eq!(phi_full(2), phi_orbits(2));
        assert_eq!(phi_full(1), RatFunc2::x());
    }

    #[test]
    fn g_and_a_values() {
        assert_eq!(g_mu(&mp("1"), 1).unwrap(), qpoly([(1, 1)]));
        for n in 1..=3 {
            assert_eq!(a_mu(&MultiPartition(vec![Partition::row(n)]), 1).unwrap(), qpoly([(1, 1)]));
        }
        assert_eq!(a_mu(&mp("1,1"), 1).unwrap(), qpoly([(2, 1), (1, 1)]));
        for g in 0..=2 {
            for mu in multipartitions(2, 2).into_iter().chain(multipartitions(3, 1)) {
                let a = a_mu(&mu, g).unwrap();
                if !a.is_zero() {
                    let d = crate::charvar::d_mu(&mu, g).unwrap();
                    assert_eq!(a.degree_range(0).unwrap().1 as i64, d / 2, "{mu} g={g}");
                }
            }
        }
    }

    #[test]
    fn g_routes_agree() {
        for (g, k, n) in [(1, 1, 3), (0, 3, 2), (1, 2, 2), (2, 1, 3)] {
            let r = g_routes_check(g, k, n).unwrap();
            assert!(r.pass, "{r:?}");
        }
        for mu in multipartitions(2, 2) {
            assert!(g_mu(&mu, 1).unwrap().has_integer_coefficients());
            assert_eq!(g_mu(&mu, 1).unwrap(), g_mu_via_product(&mu, 1).unwrap());
        }
    }

    #[test]
    fn v_series_identity() {
        for (g, k, n) in [(1, 1, 1), (1, 1, 2), (0, 3, 2)] {
            let r = v_mu_identity_check(g, k, n).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn purity_small() {
        for (g, k, n) in [(0, 3, 2), (1, 1, 3), (1, 2, 2), (2, 1, 2)] {
            let r = purity_check(g, k, n).unwrap();
            assert!(r.pass, "{r:?}");
        }
        let h = hlv_spec(&mp("1,1"), 1, Specialization::Pure).unwrap();
        assert_eq!(h, RatFunc2::from_poly(&qpoly([(2, 1), (1, 1)])));
    }

    #[test]
    fn comet_kac_polynomial_matches_a_mu() {
        for (s, g) in [("1", 1), ("2", 1), ("1,1", 1), ("2,1", 1), ("1,1|1,1|1,1", 0), ("1,1|1,1", 1), ("1,1|1,1|1,1|1,1", 0)] {
            let mu = mp(s);
            let c = comet_quiver(&mu, g).unwrap();
            assert_eq!(kac_a(&c.quiver, &c.dim).unwrap(), a_mu(&mu, g).unwrap(), "{mu} g={g}");
            let r = hua_strict_check(&mu, g).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn inequalities() {
        for n in 1..=5 {
            let (c, v) = nrm_ineq_violations(n);
            assert!(c > 0 && v.is_empty(), "{v:?}");
            let (_, v) = ineq1_violations(n);
            assert!(v.is_empty(), "{v:?}");
            for (k, g) in [(1, 1), (2, 1), (3, 0), (4, 0)] {
                let (_, v) = delta_ineq_violations(n, k, g).unwrap();
                assert!(v.is_empty(), "{v:?}");
            }
        }
    }

    #[test]
    fn splitting_enumeration() {
        let s = splittings(&[2, 1], 2, None);
        // columns {2},{1}; {1},{1,1}; {2,1}... with both nonzero
        assert!(s.contains(&vec![Partition::parse("1").unwrap(), Partition::parse("2").unwrap()]));
        assert!(s.contains(&vec![Partition::parse("1").unwrap(), Partition::parse("1,1").unwrap()]));
        assert!(s.iter().all(|t| t.iter().map(|p| p.size()).sum::<u32>() == 3));
        assert_eq!(common_divisor(&mp("2,2|4")), 2);
    }
}

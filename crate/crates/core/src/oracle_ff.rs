//! Brute-force counts over prime fields: quiver orbit counts, points of
//! character varieties with generic eigenvalues, and the row-sum inequality.

use crate::algebra::modp::{inv_mod, is_prime_u64, mul_mod, sub_mod};
use crate::algebra::{rat_int, BigRat};
use crate::charvar::hlv_h;
use crate::error::{Error, Result};
use crate::partitions::MultiPartition;
use crate::quiver::{hua_m_series, Quiver};
use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

/// Largest number of group elements or tuples enumerated by one count.
pub const FF_ENUMERATION_CAP: u128 = 100_000_000;

/// A square matrix over `F_p`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FFMatrix {
    pub n: usize,
    pub p: u64,
    pub entries: Vec<u64>,
}

impl FFMatrix {
    pub fn new(n: usize, p: u64, entries: Vec<u64>) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        if entries.len() != n * n {
            return Err(Error::SizeMismatch(format!("{} entries for a {n}x{n} matrix", entries.len())));
        }
        Ok(FFMatrix { n, p, entries: entries.into_iter().map(|e| e % p).collect() })
    }

    pub fn identity(n: usize, p: u64) -> Self {
        let mut e = vec![0; n * n];
        for i in 0..n {
            e[i * n + i] = 1 % p;
        }
        FFMatrix { n, p, entries: e }
    }

    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries[i * self.n + j]
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.n;
        let mut e = vec![0; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    e[i * n + j] = (e[i * n + j] + mul_mod(a, o.get(k, j), self.p)) % self.p;
                }
            }
        }
        FFMatrix { n, p: self.p, entries: e }
    }

    pub fn rank(&self) -> usize {
        rank_mod(self.entries.clone(), self.n, self.n, self.p)
    }

    /// Inverse by Gauss-Jordan; `None` when singular.
    pub fn inverse(&self) -> Option<Self> {
        let n = self.n;
        let p = self.p;
        let w = 2 * n;
        let mut a = vec![0u64; n * w];
        for i in 0..n {
            for j in 0..n {
                a[i * w + j] = self.get(i, j);
            }
            a[i * w + n + i] = 1 % p;
        }
        for c in 0..n {
            let piv = (c..n).find(|&r| a[r * w + c] != 0)?;
            for j in 0..w {
                a.swap(c * w + j, piv * w + j);
            }
            let inv = inv_mod(a[c * w + c], p);
            for j in 0..w {
                a[c * w + j] = mul_mod(a[c * w + j], inv, p);
            }
            for r in 0..n {
                let f = a[r * w + c];
                if r != c && f != 0 {
                    for j in 0..w {
                        a[r * w + j] = sub_mod(a[r * w + j], mul_mod(f, a[c * w + j], p), p);
                    }
                }
            }
        }
        let entries = (0..n).flat_map(|i| a[i * w + n..(i + 1) * w].to_vec()).collect();
        Some(FFMatrix { n, p, entries })
    }

    /// `self - λ I`.
    fn minus_scalar(&self, l: u64) -> Self {
        let mut m = self.clone();
        for i in 0..self.n {
            m.entries[i * self.n + i] = sub_mod(m.entries[i * self.n + i], l % self.p, self.p);
        }
        m
    }
}

/// Rank of a `rows x cols` row-major matrix over `F_p`.
pub fn rank_mod(mut a: Vec<u64>, rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| a[i * cols + c] != 0) else { continue };
        for j in 0..cols {
            a.swap(r * cols + j, piv * cols + j);
        }
        let inv = inv_mod(a[r * cols + c], p);
        for i in r + 1..rows {
            let f = mul_mod(a[i * cols + c], inv, p);
            if f != 0 {
                for j in c..cols {
                    a[i * cols + j] = sub_mod(a[i * cols + j], mul_mod(f, a[r * cols + j], p), p);
                }
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// `|GL_n(F_p)|`.
pub fn gl_order(n: usize, p: u64) -> u128 {
    let pn = (p as u128).pow(n as u32);
    (0..n).map(|i| pn - (p as u128).pow(i as u32)).product()
}

/// All of `GL_n(F_p)` by exhaustive search.
pub fn general_linear(n: usize, p: u64) -> Result<Vec<FFMatrix>> {
    let total = (p as u128).checked_pow((n * n) as u32).filter(|&t| t <= FF_ENUMERATION_CAP);
    let Some(total) = total else {
        return Err(Error::CapExceeded(format!("enumerating {n}x{n} matrices over F_{p}")));
    };
    let out: Vec<FFMatrix> = (0..total as u64)
        .into_par_iter()
        .filter_map(|mut code| {
            let mut e = vec![0; n * n];
            for x in e.iter_mut() {
                *x = code % p;
                code /= p;
            }
            let m = FFMatrix { n, p, entries: e };
            (m.rank() == n).then_some(m)
        })
        .collect();
    Ok(out)
}

/// `dim ker(X -> A X - X B)` on `m_A x m_B` matrices.
fn twisted_commutant_dim(a: &FFMatrix, b: &FFMatrix) -> usize {
    let (n, m, p) = (a.n, b.n, a.p);
    let d = n * m;
    if d == 0 {
        return 0;
    }
    let mut l = vec![0u64; d * d];
    for r in 0..n {
        for c in 0..m {
            let row = r * m + c;
            for s in 0..n {
                l[row * d + s * m + c] = (l[row * d + s * m + c] + a.get(r, s)) % p;
            }
            for t in 0..m {
                l[row * d + r * m + t] = sub_mod(l[row * d + r * m + t], b.get(t, c), p);
            }
        }
    }
    d - rank_mod(l, d, d, p)
}

/// Number of isomorphism classes of representations of `q` of dimension `v` over `F_p`,
/// by Burnside over `∏ GL_{v_i}(F_p)` with fixed-point counts `p^{dim ker}`.
pub fn ff_orbit_count(q: &Quiver, v: &[u32], p: u64) -> Result<BigInt> {
    if v.len() != q.len() {
        return Err(Error::SizeMismatch(format!("dimension vector of length {} for {} vertices", v.len(), q.len())));
    }
    if !is_prime_u64(p) {
        return Err(Error::Invalid(format!("{p} is not prime")));
    }
    let order: u128 = v.iter().map(|&d| gl_order(d as usize, p)).product();
    if order > FF_ENUMERATION_CAP {
        return Err(Error::CapExceeded(format!("group of order {order}")));
    }
    let groups: Vec<Vec<FFMatrix>> = v.iter().map(|&d| general_linear(d as usize, p)).collect::<Result<_>>()?;
    let sizes: Vec<usize> = groups.iter().map(|g| g.len()).collect();
    let total: usize = sizes.iter().product();
    let sum: BigInt = (0..total)
        .into_par_iter()
        .map(|mut code| {
            let elt: Vec<&FFMatrix> = groups
                .iter()
                .zip(&sizes)
                .map(|(g, &s)| {
                    let x = &g[code % s];
                    code /= s;
                    x
                })
                .collect();
            let dim: usize = q.arrows.iter().map(|&(t, h)| twisted_commutant_dim(elt[h], elt[t])).sum();
            BigInt::from(p).pow(dim as u32)
        })
        .sum();
    let order = BigInt::from(order);
    if !(&sum % &order).is_zero() {
        return Err(Error::Inconsistent(format!("Burnside sum {sum} not divisible by {order}")));
    }
    Ok(sum / order)
}

/// Orbit count against `M_{Γ,v}(p)` from the Hua series.
#[derive(Clone, Debug, Serialize)]
pub struct OrbitComparison {
    pub dim: Vec<u32>,
    pub p: u64,
    pub orbits: String,
    pub m_polynomial: String,
    pub m_at_p: String,
    pub agree: bool,
}

pub fn compare_orbit_count(q: &Quiver, v: &[u32], p: u64) -> Result<OrbitComparison> {
    let orbits = ff_orbit_count(q, v, p)?;
    let total: u32 = v.iter().sum();
    let m = hua_m_series(q, total)?;
    let poly = m.get(v).ok_or_else(|| Error::Inconsistent(format!("no Hua coefficient for {v:?}")))?;
    let at = poly.eval(&rat_int(p as i64), &BigRat::one());
    Ok(OrbitComparison {
        dim: v.to_vec(),
        p,
        orbits: orbits.to_string(),
        m_polynomial: poly.to_string(),
        m_at_p: at.to_string(),
        agree: at == BigRat::from_integer(orbits),
    })
}

/// The condition enforced on eigenvalue data.
pub const GENERICITY_CONDITION: &str =
    "all eigenvalues multiply to 1, and no selection of the same number n' of eigenvalues (with multiplicity) from every class, 0 < n' < n, multiplies to 1";

/// Semisimple classes in `GL_n(F_p)`: eigenvalues per class with multiplicities from `𝛍`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GenericClassTuple {
    pub n: usize,
    pub p: u64,
    pub classes: Vec<Vec<(u64, u32)>>,
}

impl GenericClassTuple {
    /// `eigs[i][j]` is the eigenvalue on the `j`-th part of `μ^i`.
    pub fn new(mu: &MultiPartition, eigs: &[Vec<u64>], p: u64) -> Result<Self> {
        if !is_prime_u64(p) {
            return Err(Error::Invalid(format!("{p} is not prime")));
        }
        let n = mu.n()? as usize;
        if eigs.len() != mu.k() {
            return Err(Error::SizeMismatch(format!("{} eigenvalue lists for {} classes", eigs.len(), mu.k())));
        }
        let mut classes = Vec::new();
        for (part, e) in mu.components().iter().zip(eigs) {
            if e.len() != part.parts().len() {
                return Err(Error::SizeMismatch(format!("{} eigenvalues for type {part}", e.len())));
            }
            let mut c: Vec<(u64, u32)> = Vec::new();
            for (&x, &m) in e.iter().zip(part.parts()) {
                let x = x % p;
                if x == 0 {
                    return Err(Error::Invalid("eigenvalue 0 is not invertible".into()));
                }
                if c.iter().any(|&(y, _)| y == x) {
                    return Err(Error::Genericity(format!("repeated eigenvalue {x} contradicts type {part}")));
                }
                c.push((x, m));
            }
            classes.push(c);
        }
        let t = GenericClassTuple { n, p, classes };
        t.check_generic()?;
        Ok(t)
    }

    /// Products mod `p` of selections of `m` eigenvalues from one class.
    fn selection_products(class: &[(u64, u32)], m: u32, p: u64) -> Vec<u64> {
        let mut sets: Vec<Vec<bool>> = vec![vec![false; p as usize]; m as usize + 1];
        sets[0][1 % p as usize] = true;
        for &(x, mult) in class {
            let mut next = vec![vec![false; p as usize]; m as usize + 1];
            for used in 0..=m {
                for v in 0..p as usize {
                    if !sets[used as usize][v] {
                        continue;
                    }
                    let mut val = v as u64;
                    for c in 0..=mult.min(m - used) {
                        next[(used + c) as usize][val as usize] = true;
                        val = mul_mod(val, x, p);
                    }
                }
            }
            sets = next;
        }
        (0..p).filter(|&v| sets[m as usize][v as usize]).collect()
    }

    fn check_generic(&self) -> Result<()> {
        let p = self.p;
        for m in 1..=self.n as u32 {
            let mut reach = vec![false; p as usize];
            reach[1 % p as usize] = true;
            for c in &self.classes {
                let prods = Self::selection_products(c, m, p);
                let mut next = vec![false; p as usize];
                for (v, _) in reach.iter().enumerate().filter(|(_, r)| **r) {
                    for &x in &prods {
                        next[mul_mod(v as u64, x, p) as usize] = true;
                    }
                }
                reach = next;
            }
            let hits_one = reach[1 % p as usize];
            if m == self.n as u32 && !hits_one {
                return Err(Error::Genericity("eigenvalues do not multiply to 1".into()));
            }
            if (m as usize) < self.n && hits_one {
                return Err(Error::Genericity(format!("a selection of {m} eigenvalues per class multiplies to 1")));
            }
        }
        Ok(())
    }

    /// Membership in class `i`: eigenspace dimensions add up to `n` with the right sizes.
    fn contains(&self, i: usize, y: &FFMatrix) -> bool {
        self.classes[i].iter().all(|&(x, m)| self.n - y.minus_scalar(x).rank() == m as usize)
    }
}

/// Point count of the character variety against the E-polynomial at `q = p`.
#[derive(Clone, Debug, Serialize)]
pub struct CharvarCount {
    pub n: usize,
    pub g: u32,
    pub p: u64,
    pub mu: String,
    pub classes: Vec<Vec<(u64, u32)>>,
    pub condition: &'static str,
    pub solutions: String,
    pub pgl_order: String,
    pub count: String,
    pub e_polynomial: String,
    pub e_at_p: String,
    pub agree: bool,
}

/// Counts `(a_1,b_1,...,a_g,b_g,x_1,...,x_k)` with `∏(a_i,b_i) ∏x_j = 1`, `x_j ∈ C_j`,
/// divided by `|PGL_n(F_p)|`.
pub fn charvar_point_count(mu: &MultiPartition, g: u32, classes: &GenericClassTuple) -> Result<CharvarCount> {
    let n = classes.n;
    let p = classes.p;
    let k = classes.classes.len();
    if k == 0 {
        return Err(Error::Invalid("at least one class is required".into()));
    }
    let gl = general_linear(n, p)?;
    let members: Vec<Vec<FFMatrix>> = (0..k - 1).map(|i| gl.iter().filter(|y| classes.contains(i, y)).cloned().collect()).collect();
    let work = (gl.len() as u128).pow(2 * g) * members.iter().map(|m| m.len() as u128).product::<u128>();
    if work > FF_ENUMERATION_CAP {
        return Err(Error::CapExceeded(format!("{work} tuples")));
    }
    let inverses: Vec<FFMatrix> = gl.iter().map(|a| a.inverse().expect("invertible")).collect();
    let one = FFMatrix::identity(n, p);
    let mut prefixes = vec![one];
    for _ in 0..g {
        prefixes = prefixes
            .par_iter()
            .flat_map(|pre| {
                let gl = &gl;
                let inverses = &inverses;
                (0..gl.len()).into_par_iter().flat_map_iter(move |ia| {
                    let pa = pre.mul(&gl[ia]);
                    (0..gl.len()).map(move |ib| pa.mul(&gl[ib]).mul(&inverses[ia]).mul(&inverses[ib]))
                })
            })
            .collect();
    }
    for m in &members {
        prefixes = prefixes.par_iter().flat_map_iter(|pre| m.iter().map(move |x| pre.mul(x))).collect();
    }
    let solutions = prefixes.par_iter().filter(|pre| pre.inverse().is_some_and(|y| classes.contains(k - 1, &y))).count();
    let pgl = gl_order(n, p) / (p as u128 - 1);
    let count = BigRat::new(BigInt::from(solutions), BigInt::from(pgl));
    let e = hlv_h(mu, g)?.e_polynomial()?.0;
    let at = e.eval(&rat_int(p as i64), &BigRat::one());
    Ok(CharvarCount {
        n,
        g,
        p,
        mu: mu.to_string(),
        classes: classes.classes.clone(),
        condition: GENERICITY_CONDITION,
        solutions: solutions.to_string(),
        pgl_order: pgl.to_string(),
        count: count.to_string(),
        e_polynomial: e.to_string(),
        e_at_p: at.to_string(),
        agree: count == at,
    })
}

/// Both sides of `c Σ_k (Σ_i x_ik)^2 - (Σ c_i)(Σ x_ik^2) ≤ c (Σ c_i)^2 - (Σ c_i)(Σ c_i^2)`
/// with `c_i = Σ_k x_ik`, `c = max c_i`, and the equality case reached.
#[derive(Clone, Debug, Serialize)]
pub struct HarcosRecord {
    pub lhs: String,
    pub rhs: String,
    pub holds: bool,
    pub equality: bool,
    /// `"i"`: all rows equal; `"ii"`: a single nonzero column; `"i+ii"`: both.
    pub equality_case: Option<String>,
    #[serde(skip)]
    pub exact: (BigRat, BigRat),
}

/// Which of the two equality patterns the rows with `c_i > 0` satisfy.
pub fn harcos_cases(x: &[Vec<BigRat>]) -> (bool, bool) {
    let rows: Vec<&Vec<BigRat>> = x.iter().filter(|r| r.iter().any(|v| !v.is_zero())).collect();
    let equal_rows = rows.windows(2).all(|w| w[0] == w[1]);
    let r = x.first().map_or(0, |row| row.len());
    let cols = (0..r).filter(|&k| rows.iter().any(|row| !row[k].is_zero())).count();
    (equal_rows, cols <= 1)
}

pub fn harcos_check(x: &[Vec<BigRat>]) -> Result<HarcosRecord> {
    let r = x.first().map_or(0, |row| row.len());
    if x.iter().any(|row| row.len() != r) {
        return Err(Error::SizeMismatch("ragged matrix".into()));
    }
    if x.iter().flatten().any(|v| v.is_negative()) {
        return Err(Error::Invalid("entries must be nonnegative".into()));
    }
    let c: Vec<BigRat> = x.iter().map(|row| row.iter().sum()).collect();
    let cmax = c.iter().max().cloned().unwrap_or_else(BigRat::zero);
    let sc: BigRat = c.iter().sum();
    let sq: BigRat = x.iter().flatten().map(|v| v * v).sum();
    let col2: BigRat = (0..r).map(|k| x.iter().map(|row| row[k].clone()).sum::<BigRat>()).map(|s| &s * &s).sum();
    let c2: BigRat = c.iter().map(|v| v * v).sum();
    let lhs = &cmax * col2 - &sc * sq;
    let rhs = &cmax * &sc * &sc - &sc * c2;
    let equality = lhs == rhs;
    let equality_case = equality.then(|| match harcos_cases(x) {
        (true, true) => "i+ii".to_string(),
        (true, false) => "i".to_string(),
        (false, true) => "ii".to_string(),
        (false, false) => "none".to_string(),
    });
    Ok(HarcosRecord { lhs: lhs.to_string(), rhs: rhs.to_string(), holds: lhs <= rhs, equality, equality_case, exact: (lhs, rhs) })
}

/// Outcome of the randomized inequality suite.
#[derive(Clone, Debug, Default, Serialize)]
pub struct HarcosSuite {
    pub seed: u64,
    pub instances: usize,
    pub violations: usize,
    pub equalities: usize,
    pub unclassified_equalities: usize,
    pub pattern_without_equality: usize,
    pub constructed: usize,
    pub constructed_failures: usize,
    pub first_failure: Option<String>,
}

impl HarcosSuite {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.unclassified_equalities == 0 && self.pattern_without_equality == 0 && self.constructed_failures == 0
    }

    fn note(&mut self, x: &[Vec<BigRat>]) {
        if self.first_failure.is_none() {
            self.first_failure = Some(format!("{x:?}"));
        }
    }
}

fn random_matrix(rng: &mut ChaCha8Rng, rational: bool) -> Vec<Vec<BigRat>> {
    let n = rng.random_range(1..=5);
    let r = rng.random_range(1..=5);
    (0..n)
        .map(|_| {
            (0..r)
                .map(|_| {
                    let a = rng.random_range(0..=9i64);
                    let d = if rational { rng.random_range(1..=7i64) } else { 1 };
                    BigRat::new(a.into(), d.into())
                })
                .collect()
        })
        .collect()
}

/// `count` random integer matrices with `n, r ≤ 5` and entries `0..=9`, a tenth as many with
/// rational entries, and for each a constructed instance of patterns (i) and (ii).
pub fn harcos_random_suite(count: usize, seed: u64) -> Result<HarcosSuite> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut s = HarcosSuite { seed, ..Default::default() };
    for t in 0..count + count / 10 {
        let x = random_matrix(&mut rng, t >= count);
        s.instances += 1;
        let rec = harcos_check(&x)?;
        let (ci, cii) = harcos_cases(&x);
        if !rec.holds {
            s.violations += 1;
            s.note(&x);
        }
        if rec.equality {
            s.equalities += 1;
            if !(ci || cii) {
                s.unclassified_equalities += 1;
                s.note(&x);
            }
        } else if ci || cii {
            s.pattern_without_equality += 1;
            s.note(&x);
        }
        let mut same = x.clone();
        for i in 1..same.len() {
            same[i] = x[0].clone();
        }
        let l = rng.random_range(0..x[0].len());
        let single: Vec<Vec<BigRat>> =
            x.iter().map(|row| row.iter().enumerate().map(|(k, v)| if k == l { v.clone() } else { BigRat::zero() }).collect()).collect();
        for y in [same, single] {
            s.constructed += 1;
            if !harcos_check(&y)?.equality {
                s.constructed_failures += 1;
                s.note(&y);
            }
        }
    }
    Ok(s)
}

/// Integer entries as rationals.
pub fn int_matrix(rows: &[&[i64]]) -> Vec<Vec<BigRat>> {
    rows.iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect()
}

/// `x` evaluated as a nonnegative integer when it is one.
pub fn as_u128(x: &BigRat) -> Option<u128> {
    x.is_integer().then(|| x.to_integer().to_u128()).flatten()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::MultiPartition;
    use crate::quiver::parse_dim;

    fn a2() -> Quiver {
        Quiver::path(2)
    }

    #[test]
    fn groups_and_ranks() {
        assert_eq!(gl_order(2, 2), 6);
        assert_eq!(general_linear(2, 3).unwrap().len(), 48);
        let m = FFMatrix::new(2, 5, vec![1, 2, 3, 4]).unwrap();
        assert_eq!(m.mul(&m.inverse().unwrap()), FFMatrix::identity(2, 5));
        assert_eq!(FFMatrix::new(2, 5, vec![1, 2, 2, 4]).unwrap().rank(), 1);
        assert!(FFMatrix::new(1, 4, vec![1]).is_err());
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(ff_orbit_count(&Quiver::jordan(), &[1], 2).unwrap(), BigInt::from(2));
        assert_eq!(ff_orbit_count(&Quiver::jordan(), &[2], 2).unwrap(), BigInt::from(6));
        assert_eq!(ff_orbit_count(&a2(), &[1, 1], 3).unwrap(), BigInt::from(2));
        assert!(ff_orbit_count(&Quiver::jordan(), &[2], 4).is_err());
    }

    #[test]
    fn orbits_match_hua() {
        for (q, v) in [(Quiver::jordan(), "2"), (a2(), "1,1"), (a2(), "2,1"), (Quiver::path(3), "1,1,1")] {
            for p in [2, 3] {
                let c = compare_orbit_count(&q, &parse_dim(v).unwrap(), p).unwrap();
                assert!(c.agree, "{c:?}");
            }
        }
    }

    #[test]
    fn genericity() {
        let mu = MultiPartition::parse("1,1").unwrap();
        assert!(GenericClassTuple::new(&mu, &[vec![2, 3]], 5).is_ok());
        assert!(matches!(GenericClassTuple::new(&mu, &[vec![2, 2]], 3), Err(Error::Genericity(_))));
        assert!(matches!(GenericClassTuple::new(&mu, &[vec![2, 4]], 5), Err(Error::Genericity(_))));
        assert!(matches!(GenericClassTuple::new(&mu, &[vec![1, 1]], 5), Err(Error::Genericity(_))));
        let two = MultiPartition::parse("1,1|1,1").unwrap();
        // 2*3 * 4*4 = 96 = 1 mod 5 but the selection 4*4 = 1.
        assert!(GenericClassTuple::new(&two, &[vec![2, 3], vec![4, 4]], 5).is_err());
    }

    #[test]
    fn rank_one_counts() {
        let mu = MultiPartition::parse("1").unwrap();
        for p in [2, 3, 5, 7] {
            let t = GenericClassTuple::new(&mu, &[vec![1]], p).unwrap();
            let c = charvar_point_count(&mu, 1, &t).unwrap();
            assert_eq!(c.count, ((p - 1) * (p - 1)).to_string());
            assert!(c.agree, "{c:?}");
        }
    }

    #[test]
    fn harcos_examples() {
        let r = harcos_check(&int_matrix(&[&[1, 0], &[1, 0]])).unwrap();
        assert!(r.equality && r.equality_case.as_deref().unwrap().contains('i'));
        let r = harcos_check(&int_matrix(&[&[2], &[1]])).unwrap();
        assert!(r.equality && r.equality_case.as_deref() == Some("ii"));
        let r = harcos_check(&int_matrix(&[&[2, 0], &[0, 1]])).unwrap();
        assert_eq!((r.lhs.as_str(), r.rhs.as_str(), r.holds, r.equality), ("-5", "3", true, false));
        assert!(harcos_check(&int_matrix(&[&[-1]])).is_err());
    }

    #[test]
    fn harcos_random_small() {
        let s = harcos_random_suite(500, 7).unwrap();
        assert!(s.passed(), "{s:?}");
        assert!(s.equalities > 0);
    }
}

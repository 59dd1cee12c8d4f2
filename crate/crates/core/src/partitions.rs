//! Partitions, multipartitions, and types (multisets of pairs `(d, partition)`).

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

/// A weakly decreasing sequence of positive integers. The empty sequence is the partition of 0.
/// The derived order is lexicographic on parts, the total order used for types.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition(Vec<u32>);

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;
    fn try_from(v: Vec<u32>) -> Result<Self> {
        Partition::new(v)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionStats {
    pub n_stat: u64,
    pub dual: Partition,
    pub size: u32,
    pub length: usize,
    pub arms_legs: Vec<(u32, u32)>,
    pub hook_lengths: Vec<u32>,
    pub z_order: BigInt,
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Invalid("partition parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Invalid("partition parts must be weakly decreasing".into()));
        }
        Ok(Partition(parts))
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `(1^n)`.
    pub fn column(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    /// `(n)`, or the empty partition for `n = 0`.
    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// Parses `"2,1"`; an empty string or `"0"` gives the empty partition.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() || s == "0" {
            return Ok(Self::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::Parse(format!("bad part '{x}'"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn largest(&self) -> u32 {
        self.0.first().copied().unwrap_or(0)
    }

    pub fn dual(&self) -> Self {
        let m = self.largest() as usize;
        let mut d = vec![0u32; m];
        for &p in &self.0 {
            for x in d.iter_mut().take(p as usize) {
                *x += 1;
            }
        }
        Partition(d)
    }

    /// `n(λ) = Σ (i-1) λ_i`.
    pub fn n_stat(&self) -> u64 {
        self.0.iter().enumerate().map(|(i, &p)| i as u64 * p as u64).sum()
    }

    /// `⟨λ, μ⟩ = Σ λ'_i μ'_i`.
    pub fn pairing(&self, o: &Self) -> u64 {
        let a = self.dual();
        let b = o.dual();
        a.0.iter().zip(b.0.iter()).map(|(&x, &y)| x as u64 * y as u64).sum()
    }

    /// `Σ λ_i^2`.
    pub fn norm2(&self) -> u64 {
        self.0.iter().map(|&p| p as u64 * p as u64).sum()
    }

    /// Part multiplicities `i -> m_i`.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.0 {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Order of the centralizer in the symmetric group, `Π i^{m_i} m_i!`.
    pub fn z_order(&self) -> BigInt {
        let mut z = BigInt::one();
        for (i, m) in self.multiplicities() {
            z *= BigInt::from(i).pow(m) * crate::algebra::numbers::factorial(m);
        }
        z
    }

    /// Cells `(i, j)`, 0-based row and column, in reading order.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut v = Vec::with_capacity(self.size() as usize);
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p as usize {
                v.push((i, j));
            }
        }
        v
    }

    /// Arm and leg of each cell, in the order of `cells`.
    pub fn arms_legs(&self) -> Vec<(u32, u32)> {
        let d = self.dual();
        self.cells()
            .into_iter()
            .map(|(i, j)| (self.0[i] - j as u32 - 1, d.0[j] - i as u32 - 1))
            .collect()
    }

    pub fn stats(&self) -> PartitionStats {
        let al = self.arms_legs();
        PartitionStats {
            n_stat: self.n_stat(),
            dual: self.dual(),
            size: self.size(),
            length: self.len(),
            hook_lengths: al.iter().map(|(a, l)| a + l + 1).collect(),
            arms_legs: al,
            z_order: self.z_order(),
        }
    }

    /// Union of parts, re-sorted.
    pub fn union(&self, o: &Self) -> Self {
        let mut v = self.0.clone();
        v.extend_from_slice(&o.0);
        Self::from_unsorted(v)
    }

    /// Componentwise sum `λ + μ`.
    pub fn sum(&self, o: &Self) -> Self {
        let n = self.len().max(o.len());
        Partition((1..=n).map(|i| self.part(i) + o.part(i)).collect())
    }

    /// Every part multiplied by `d`.
    pub fn scale(&self, d: u32) -> Self {
        Partition(self.0.iter().map(|&p| p * d).collect())
    }

    /// Every part divided by `d`, if all parts are divisible.
    pub fn divide(&self, d: u32) -> Option<Self> {
        if self.0.iter().all(|p| p % d == 0) {
            Some(Partition(self.0.iter().map(|&p| p / d).collect()))
        } else {
            None
        }
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        i < self.len() && (j as u32) < self.0[i]
    }

    /// `true` iff every prefix sum of `self` is at most the corresponding one of `o`.
    pub fn dominated_by(&self, o: &Self) -> bool {
        dominance(self, o)
    }
}

/// `μ ⊴ λ`: all prefix sums of `μ` are at most those of `λ`.
pub fn dominance(mu: &Partition, lambda: &Partition) -> bool {
    let n = mu.len().max(lambda.len());
    let (mut a, mut b) = (0u64, 0u64);
    for i in 1..=n {
        a += mu.part(i) as u64;
        b += lambda.part(i) as u64;
        if a > b {
            return false;
        }
    }
    true
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions(n: u32) -> Vec<Partition> {
    partitions_bounded(n, n)
}

/// Partitions of `n` with all parts at most `max`, decreasing lexicographic order.
pub fn partitions_bounded(n: u32, max: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(n)).rev() {
            cur.push(p);
            rec(n - p, p, cur, out);
            cur.pop();
        }
    }
    rec(n, max, &mut cur, &mut out);
    out
}

/// A tuple of partitions, one per alphabet.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiPartition(pub Vec<Partition>);

impl MultiPartition {
    pub fn new(parts: Vec<Partition>) -> Self {
        MultiPartition(parts)
    }

    pub fn empty(k: usize) -> Self {
        MultiPartition(vec![Partition::empty(); k])
    }

    /// Parses `"2,1|1,1,1"`.
    pub fn parse(s: &str) -> Result<Self> {
        let comps = s.split('|').map(Partition::parse).collect::<Result<Vec<_>>>()?;
        Ok(MultiPartition(comps))
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.0
    }

    pub fn sizes(&self) -> Vec<u32> {
        self.0.iter().map(|p| p.size()).collect()
    }

    pub fn is_balanced(&self) -> bool {
        self.0.windows(2).all(|w| w[0].size() == w[1].size())
    }

    /// Common size of the components; errors when they differ.
    pub fn n(&self) -> Result<u32> {
        if !self.is_balanced() {
            return Err(Error::SizeMismatch(format!("components of {self} have different sizes")));
        }
        Ok(self.0.first().map(|p| p.size()).unwrap_or(0))
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|p| p.is_empty())
    }

    pub fn scale(&self, d: u32) -> Self {
        MultiPartition(self.0.iter().map(|p| p.scale(d)).collect())
    }

    pub fn divide(&self, d: u32) -> Option<Self> {
        self.0.iter().map(|p| p.divide(d)).collect::<Option<Vec<_>>>().map(MultiPartition)
    }

    pub fn union(&self, o: &Self) -> Self {
        MultiPartition(self.0.iter().zip(o.0.iter()).map(|(a, b)| a.union(b)).collect())
    }

    pub fn sum(&self, o: &Self) -> Self {
        MultiPartition(self.0.iter().zip(o.0.iter()).map(|(a, b)| a.sum(b)).collect())
    }

    pub fn dual(&self) -> Self {
        MultiPartition(self.0.iter().map(|p| p.dual()).collect())
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self
            .0
            .iter()
            .map(|p| p.parts().iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", s.join("|"))
    }
}

/// `(P_n)^k` in lexicographic order of the component lists.
pub fn multipartitions(n: u32, k: usize) -> Vec<MultiPartition> {
    let ps = partitions(n);
    let mut out = vec![MultiPartition(Vec::new())];
    for _ in 0..k {
        let mut next = Vec::with_capacity(out.len() * ps.len());
        for m in &out {
            for p in &ps {
                let mut v = m.0.clone();
                v.push(p.clone());
                next.push(MultiPartition(v));
            }
        }
        out = next;
    }
    out
}

/// A non-increasing sequence of pairs `(d, λ)`; pairs compare by `λ` first, then by `d`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default, Serialize, Deserialize)]
pub struct TypeSeq {
    entries: Vec<(u32, Partition)>,
}

fn pair_cmp<T: Ord>(a: &(u32, T), b: &(u32, T)) -> Ordering {
    a.1.cmp(&b.1).then(a.0.cmp(&b.0))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TypeStats {
    pub size: u32,
    pub bracket: Partition,
    pub n_stat: u64,
    pub multiplicities: BTreeMap<(u32, Partition), u32>,
}

impl TypeSeq {
    pub fn new(mut entries: Vec<(u32, Partition)>) -> Result<Self> {
        if entries.iter().any(|(d, l)| *d == 0 || l.is_empty()) {
            return Err(Error::Invalid("type entries need d > 0 and a nonzero partition".into()));
        }
        entries.sort_by(|a, b| pair_cmp(b, a));
        Ok(TypeSeq { entries })
    }

    /// Parses `"2:(1) 1:(1)"` or `"1:(2)"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for tok in s.split_whitespace() {
            let (d, l) = tok.split_once(':').ok_or_else(|| Error::Parse(format!("expected d:(parts), got '{tok}'")))?;
            let d = d.parse::<u32>().map_err(|_| Error::Parse(format!("bad degree '{d}'")))?;
            entries.push((d, Partition::parse(l)?));
        }
        Self::new(entries)
    }

    pub fn entries(&self) -> &[(u32, Partition)] {
        &self.entries
    }

    pub fn size(&self) -> u32 {
        self.entries.iter().map(|(d, l)| d * l.size()).sum()
    }

    /// `[ω] = ∪ d_i · ω^i`.
    pub fn bracket(&self) -> Partition {
        self.entries.iter().fold(Partition::empty(), |acc, (d, l)| acc.union(&l.scale(*d)))
    }

    /// `n(ω) = Σ d_i n(ω^i)`.
    pub fn n_stat(&self) -> u64 {
        self.entries.iter().map(|(d, l)| *d as u64 * l.n_stat()).sum()
    }

    pub fn multiplicities(&self) -> BTreeMap<(u32, Partition), u32> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            *m.entry(e.clone()).or_insert(0) += 1;
        }
        m
    }

    pub fn stats(&self) -> TypeStats {
        TypeStats { size: self.size(), bracket: self.bracket(), n_stat: self.n_stat(), multiplicities: self.multiplicities() }
    }

    /// Number of entries of degree `d`.
    pub fn count_degree(&self, d: u32) -> u32 {
        self.entries.iter().filter(|(e, _)| *e == d).count() as u32
    }
}

impl fmt::Display for TypeSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.entries.iter().map(|(d, l)| format!("{d}:{l}")).collect();
        write!(f, "{}", s.join(" "))
    }
}

/// Multisets of atoms of total weight `n`, as non-decreasing index sequences into `weights`.
pub fn weighted_multisets(weights: &[u32], n: u32) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(weights: &[u32], start: usize, n: u32, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for i in start..weights.len() {
            let w = weights[i];
            if w == 0 || w > n {
                continue;
            }
            cur.push(i);
            rec(weights, i, n - w, cur, out);
            cur.pop();
        }
    }
    rec(weights, 0, n, &mut cur, &mut out);
    out
}

/// All types of size `n`.
pub fn types(n: u32) -> Vec<TypeSeq> {
    let mut atoms: Vec<(u32, Partition)> = Vec::new();
    for d in 1..=n {
        for m in 1..=n / d {
            for l in partitions(m) {
                atoms.push((d, l));
            }
        }
    }
    atoms.sort_by(|a, b| pair_cmp(b, a));
    let weights: Vec<u32> = atoms.iter().map(|(d, l)| d * l.size()).collect();
    weighted_multisets(&weights, n)
        .into_iter()
        .map(|idx| TypeSeq { entries: idx.into_iter().map(|i| atoms[i].clone()).collect() })
        .collect()
}

/// A multiset of pairs `(d, 𝛍)` with `𝛍` a nonzero balanced multipartition.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiType {
    pub entries: Vec<(u32, MultiPartition)>,
}

impl MultiType {
    pub fn size(&self) -> u32 {
        self.entries.iter().map(|(d, m)| d * m.0.first().map(|p| p.size()).unwrap_or(0)).sum()
    }

    /// The common degree when all entries share it.
    pub fn common_degree(&self) -> Option<u32> {
        let d = self.entries.first()?.0;
        self.entries.iter().all(|(e, _)| *e == d).then_some(d)
    }

    pub fn multiplicities(&self) -> BTreeMap<(u32, MultiPartition), u32> {
        let mut m = BTreeMap::new();
        for e in &self.entries {
            *m.entry(e.clone()).or_insert(0) += 1;
        }
        m
    }
}

/// All multi-types of size `n` over `k` alphabets.
pub fn multitypes(n: u32, k: usize) -> Vec<MultiType> {
    let mut atoms: Vec<(u32, MultiPartition)> = Vec::new();
    for d in 1..=n {
        for m in 1..=n / d {
            for mp in multipartitions(m, k) {
                atoms.push((d, mp));
            }
        }
    }
    atoms.sort_by(|a, b| pair_cmp(b, a));
    let weights: Vec<u32> = atoms.iter().map(|(d, m)| d * m.0.first().map(|p| p.size()).unwrap_or(0)).collect();
    weighted_multisets(&weights, n)
        .into_iter()
        .map(|idx| MultiType { entries: idx.into_iter().map(|i| atoms[i].clone()).collect() })
        .collect()
}

/// Every tuple `(ρ^1, ..., ρ^r)` with `|ρ^p| = sizes[p]`.
pub fn partition_tuples(sizes: &[u32]) -> Vec<Vec<Partition>> {
    let mut out: Vec<Vec<Partition>> = vec![Vec::new()];
    for &s in sizes {
        let ps = partitions(s);
        let mut next = Vec::with_capacity(out.len() * ps.len());
        for t in &out {
            for p in &ps {
                let mut v = t.clone();
                v.push(p.clone());
                next.push(v);
            }
        }
        out = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn stats_of_two_one() {
        let l = p(&[2, 1]);
        assert_eq!(l.n_stat(), 1);
        assert_eq!(l.dual(), p(&[2, 1]));
        let mut al = l.arms_legs();
        al.sort();
        assert_eq!(al, vec![(0, 0), (0, 0), (1, 1)]);
        assert_eq!(l.pairing(&l), 5);
        assert_eq!(p(&[1, 1, 1]).n_stat(), 3);
        assert_eq!(p(&[2, 2, 1]).z_order(), BigInt::from(8));
    }

    #[test]
    fn dominance_examples() {
        assert!(dominance(&p(&[2, 1]), &p(&[3])));
        assert!(!dominance(&p(&[3]), &p(&[2, 1])));
        assert!(dominance(&p(&[2, 2]), &p(&[3, 1])));
        assert!(!dominance(&p(&[3, 1]), &p(&[2, 2])));
    }

    #[test]
    fn type_examples() {
        let w = TypeSeq::new(vec![(2, p(&[1])), (1, p(&[1]))]).unwrap();
        assert_eq!(w.bracket(), p(&[2, 1]));
        assert_eq!(w.size(), 3);
        assert_eq!(TypeSeq::new(vec![(1, p(&[2, 1]))]).unwrap().n_stat(), 1);
        let w = TypeSeq::new(vec![(3, p(&[1]))]).unwrap();
        assert_eq!((w.bracket(), w.size()), (p(&[3]), 3));
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(partitions(5).len(), 7);
        assert_eq!(partitions(4).len(), 5);
        assert_eq!(partitions(0), vec![Partition::empty()]);
        let t2 = types(2);
        assert_eq!(t2.len(), 4);
        assert_eq!(types(3).len(), 8);
        assert_eq!(multipartitions(2, 3).len(), 8);
    }

    #[test]
    fn parsing() {
        assert_eq!(MultiPartition::parse("2,1|1,1,1").unwrap().0, vec![p(&[2, 1]), p(&[1, 1, 1])]);
        assert!(Partition::parse("1,2").is_err());
        assert_eq!(TypeSeq::parse("1:(1) 2:(1)").unwrap().to_string(), "2:(1) 1:(1)");
    }
}

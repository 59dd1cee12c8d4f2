//! Per-degree tables: symmetric-group characters, Kostka numbers, and the
//! change-of-basis matrices between `p` and the bases `m, h, e, s`.

use crate::algebra::coef::BigRat;
use crate::partitions::{partitions, Partition};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Basis {
    M,
    H,
    E,
    S,
    P,
}

impl Basis {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "m" => Some(Basis::M),
            "h" => Some(Basis::H),
            "e" => Some(Basis::E),
            "s" => Some(Basis::S),
            "p" => Some(Basis::P),
            _ => None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Basis::M => "m",
            Basis::H => "h",
            Basis::E => "e",
            Basis::S => "s",
            Basis::P => "p",
        }
    }

    pub const ALL: [Basis; 5] = [Basis::M, Basis::H, Basis::E, Basis::S, Basis::P];
}

pub type Matrix = Vec<Vec<BigRat>>;

/// Sparse row: nonzero entries of one basis element's expansion.
pub type SparseRow = Vec<(usize, BigRat)>;

#[derive(Debug)]
pub struct Tables {
    pub n: u32,
    pub parts: Vec<Partition>,
    pub index: HashMap<Partition, usize>,
    /// `chi[λ][ρ] = χ^λ_ρ`.
    pub chi: Vec<Vec<i64>>,
    /// `kostka[λ][μ] = K_{λμ}`.
    pub kostka: Vec<Vec<i64>>,
    /// Inverse of the Kostka matrix.
    pub kinv: Vec<Vec<i64>>,
    pub z: Vec<BigInt>,
    to_p: HashMap<Basis, Vec<SparseRow>>,
    from_p: HashMap<Basis, Vec<SparseRow>>,
}

impl Tables {
    fn build(n: u32) -> Self {
        let parts = partitions(n);
        let index: HashMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let np = parts.len();
        let chi: Vec<Vec<i64>> = parts.iter().map(|l| parts.iter().map(|r| mn_character(l, r)).collect()).collect();
        let kostka: Vec<Vec<i64>> = parts.iter().map(|l| parts.iter().map(|m| kostka_number(l, m)).collect()).collect();
        let kinv = invert_unitriangular(&kostka);
        let z: Vec<BigInt> = parts.iter().map(|p| p.z_order()).collect();
        let dual_idx: Vec<usize> = parts.iter().map(|p| index[&p.dual()]).collect();
        let int = |x: i64| BigRat::from_integer(BigInt::from(x));

        // expansions into s
        let s_from_p: Matrix = (0..np).map(|r| (0..np).map(|l| int(chi[l][r])).collect()).collect();
        let p_from_s: Matrix =
            (0..np).map(|l| (0..np).map(|r| int(chi[l][r]) / BigRat::from_integer(z[r].clone())).collect()).collect();
        let ident: Matrix = (0..np).map(|i| (0..np).map(|j| if i == j { BigRat::one() } else { BigRat::zero() }).collect()).collect();
        let b_to_s = |b: Basis| -> Matrix {
            match b {
                Basis::S => ident.clone(),
                Basis::P => s_from_p.clone(),
                Basis::M => (0..np).map(|m| (0..np).map(|l| int(kinv[m][l])).collect()).collect(),
                Basis::H => (0..np).map(|m| (0..np).map(|l| int(kostka[l][m])).collect()).collect(),
                Basis::E => (0..np).map(|m| (0..np).map(|l| int(kostka[dual_idx[l]][m])).collect()).collect(),
            }
        };
        let s_to_b = |b: Basis| -> Matrix {
            match b {
                Basis::S => ident.clone(),
                Basis::P => p_from_s.clone(),
                Basis::M => (0..np).map(|l| (0..np).map(|m| int(kostka[l][m])).collect()).collect(),
                Basis::H => (0..np).map(|l| (0..np).map(|m| int(kinv[m][l])).collect()).collect(),
                Basis::E => (0..np).map(|l| (0..np).map(|m| int(kinv[m][dual_idx[l]])).collect()).collect(),
            }
        };
        let mut to_p = HashMap::new();
        let mut from_p = HashMap::new();
        for b in Basis::ALL {
            to_p.insert(b, sparse(&matmul(&b_to_s(b), &p_from_s)));
            from_p.insert(b, sparse(&matmul(&s_from_p, &s_to_b(b))));
        }
        Tables { n, parts, index, chi, kostka, kinv, z, to_p, from_p }
    }

    pub fn idx(&self, p: &Partition) -> usize {
        self.index[p]
    }

    /// Expansion of the basis element `b_λ` in the power sums.
    pub fn to_p(&self, b: Basis, i: usize) -> &SparseRow {
        &self.to_p[&b][i]
    }

    /// Expansion of `p_ρ` in the basis `b`.
    pub fn from_p(&self, b: Basis, i: usize) -> &SparseRow {
        &self.from_p[&b][i]
    }
}

fn matmul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b.first().map(|r| r.len()).unwrap_or(0);
    let mut out = vec![vec![BigRat::zero(); m]; n];
    for i in 0..n {
        for (k, aik) in a[i].iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for j in 0..m {
                if !b[k][j].is_zero() {
                    out[i][j] += aik * &b[k][j];
                }
            }
        }
    }
    out
}

fn sparse(m: &Matrix) -> Vec<SparseRow> {
    m.iter()
        .map(|r| r.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(j, x)| (j, x.clone())).collect())
        .collect()
}

/// Inverse of an integer matrix that is unitriangular up to row and column order
/// (here upper unitriangular, parts ordered by decreasing lex).
fn invert_unitriangular(a: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = a.len();
    let mut inv = vec![vec![0i64; n]; n];
    for j in 0..n {
        // solve a x = e_j by back substitution
        for i in (0..n).rev() {
            let mut s = if i == j { 1 } else { 0 };
            for k in i + 1..n {
                s -= a[i][k] * inv[k][j];
            }
            assert_eq!(a[i][i], 1, "Kostka matrix is not unitriangular");
            inv[i][j] = s;
        }
    }
    inv
}

static CACHE: OnceLock<RwLock<HashMap<u32, Arc<Tables>>>> = OnceLock::new();

/// Tables for degree `n`, built once and shared.
pub fn tables(n: u32) -> Arc<Tables> {
    let cache = CACHE.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(t) = cache.read().expect("table cache poisoned").get(&n) {
        return t.clone();
    }
    let t = Arc::new(Tables::build(n));
    cache.write().expect("table cache poisoned").entry(n).or_insert(t).clone()
}

/// `χ^λ_ρ` by the Murnaghan–Nakayama rule on beta-sets.
pub fn mn_character(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.size() != rho.size() {
        return 0;
    }
    let l = lambda.len();
    let beta: Vec<u32> = (0..l).map(|i| lambda.parts()[i] + (l - 1 - i) as u32).collect();
    let mut memo = HashMap::new();
    mn_rec(beta, rho.parts(), &mut memo)
}

fn mn_rec(beta: Vec<u32>, rho: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    if rho.is_empty() {
        return 1;
    }
    let key = (beta.clone(), rho.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = rho[0];
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < r {
            continue;
        }
        let nb = b - r;
        if beta.contains(&nb) {
            continue;
        }
        let between = beta.iter().filter(|&&x| x > nb && x < b).count();
        let sign = if between % 2 == 0 { 1 } else { -1 };
        let mut next = beta.clone();
        next[idx] = nb;
        next.sort_unstable_by(|a, b| b.cmp(a));
        total += sign * mn_rec(next, &rho[1..], memo);
    }
    memo.insert(key, total);
    total
}

/// `K_{λμ}`: semistandard tableaux of shape `λ` and content `μ`, by stripping horizontal strips.
pub fn kostka_number(lambda: &Partition, mu: &Partition) -> i64 {
    if lambda.size() != mu.size() {
        return 0;
    }
    let mut memo = HashMap::new();
    kostka_rec(lambda.parts().to_vec(), mu.parts(), &mut memo)
}

fn kostka_rec(shape: Vec<u32>, content: &[u32], memo: &mut HashMap<(Vec<u32>, usize), i64>) -> i64 {
    if content.is_empty() {
        return if shape.iter().all(|&x| x == 0) { 1 } else { 0 };
    }
    let key = (shape.clone(), content.len());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let r = content[content.len() - 1];
    let rest = &content[..content.len() - 1];
    // remove a horizontal strip of size r: new row i in [shape[i+1], shape[i]]
    let mut total = 0;
    let l = shape.len();
    let mut cur = vec![0u32; l];
    fn strips(
        shape: &[u32],
        i: usize,
        left: u32,
        cur: &mut Vec<u32>,
        rest: &[u32],
        memo: &mut HashMap<(Vec<u32>, usize), i64>,
        total: &mut i64,
    ) {
        if i == shape.len() {
            if left == 0 {
                let mut s = cur.clone();
                while s.last() == Some(&0) {
                    s.pop();
                }
                *total += kostka_rec(s, rest, memo);
            }
            return;
        }
        let lower = shape.get(i + 1).copied().unwrap_or(0);
        for new in lower..=shape[i] {
            let take = shape[i] - new;
            if take > left {
                continue;
            }
            cur[i] = new;
            strips(shape, i + 1, left - take, cur, rest, memo, total);
        }
    }
    strips(&shape, 0, r, &mut cur, rest, memo, &mut total);
    memo.insert(key, total);
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::numbers::factorial;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn character_orthogonality() {
        for n in 1..=7 {
            let t = tables(n);
            let np = t.parts.len();
            let nf = factorial(n);
            for a in 0..np {
                for b in 0..np {
                    let mut s = BigInt::zero();
                    for r in 0..np {
                        s += &nf / &t.z[r] * BigInt::from(t.chi[a][r] * t.chi[b][r]);
                    }
                    let expect = if a == b { nf.clone() } else { BigInt::zero() };
                    assert_eq!(s, expect);
                }
            }
        }
    }

    #[test]
    fn sign_character_and_kostka() {
        assert_eq!(mn_character(&p(&[1, 1, 1]), &p(&[2, 1])), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka_number(&p(&[2]), &p(&[1, 1])), 1);
        assert_eq!(kostka_number(&p(&[2, 1]), &p(&[1, 1, 1])), 2);
        assert_eq!(kostka_number(&p(&[3, 2]), &p(&[2, 2, 1])), 2);
        assert_eq!(kostka_number(&p(&[2, 2]), &p(&[3, 1])), 0);
    }

    #[test]
    fn kostka_triangular_with_dominance() {
        for n in 1..=7 {
            let t = tables(n);
            for (i, l) in t.parts.iter().enumerate() {
                for (j, m) in t.parts.iter().enumerate() {
                    if t.kostka[i][j] != 0 {
                        assert!(crate::partitions::dominance(m, l));
                    }
                }
                assert_eq!(t.kostka[i][i], 1);
            }
        }
    }

    #[test]
    fn basis_roundtrip() {
        let t = tables(5);
        let np = t.parts.len();
        for b in Basis::ALL {
            for i in 0..np {
                let mut acc = vec![BigRat::zero(); np];
                for (r, c) in t.to_p(b, i) {
                    for (j, d) in t.from_p(b, *r) {
                        acc[*j] += c * d;
                    }
                }
                for (j, x) in acc.iter().enumerate() {
                    assert_eq!(*x, if i == j { BigRat::one() } else { BigRat::zero() });
                }
            }
        }
    }
}

//! Character values of `GL_n(F_q)` computed through symmetric functions:
//! Harish-Chandra induced values by class type, flag fixed points, and the
//! multiplicities `⟨Λ ⊗ R_𝛍, 1⟩` and `⟨Λ ⊗ 𝒰_{μ^1} ⊗ ... ⊗ 𝒰_{μ^k}, 1⟩`.

use crate::algebra::coef::rat;
use crate::algebra::laurent::{LaurentPoly2, Vars};
use crate::algebra::ratfunc::RatFunc2;
use crate::charvar::{hlv_spec, Specialization};
use crate::error::{Error, Result};
use crate::macdonald::kostka_foulkes_modified_by_charge;
use crate::partitions::{multipartitions, MultiPartition, Partition, TypeSeq};
use crate::quiver::{a_mu, comet_quiver, g_mu, reduce_to_fundamental, Verdict};
use crate::symfunc::{tables, Basis, SymSeries};
use serde::Serialize;
use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

fn to_qpoly(r: &RatFunc2, what: &str) -> Result<LaurentPoly2> {
    match r.to_laurent(Vars::QT) {
        Some(p) => Ok(p),
        None => Err(Error::NotPolynomial(format!("{what} = {}", r.display(Vars::QT)))),
    }
}

/// `H̃_λ(x;q)` in one alphabet to order `n ≥ |λ|`, from the charge statistic.
fn hl_charge(lambda: &Partition, n: usize) -> SymSeries<RatFunc2> {
    let t = tables(lambda.size());
    let terms = t.parts.iter().map(|nu| {
        (MultiPartition(vec![nu.clone()]), RatFunc2::from_poly(&kostka_foulkes_modified_by_charge(nu, lambda)))
    });
    SymSeries::from_terms(1, n, Basis::S, terms).expect("degree fits")
}

static TYPE_HL: OnceLock<RwLock<HashMap<TypeSeq, Arc<SymSeries<RatFunc2>>>>> = OnceLock::new();

/// `H̃_ω(x;q) = Π_i ψ_{d_i} H̃_{ω^i}(x;q)`, cached per type.
pub fn type_hall_littlewood(omega: &TypeSeq) -> Result<Arc<SymSeries<RatFunc2>>> {
    let cache = TYPE_HL.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(v) = cache.read().expect("cache poisoned").get(omega) {
        return Ok(v.clone());
    }
    let n = omega.size() as usize;
    let mut acc = SymSeries::one(1, n);
    for (d, l) in omega.entries() {
        acc = acc.mul(&hl_charge(l, n).adams(*d)?)?;
    }
    let acc = Arc::new(acc);
    Ok(cache.write().expect("cache poisoned").entry(omega.clone()).or_insert(acc).clone())
}

/// Product `Π_i s_{τ^i}` in one alphabet.
fn schur_product(tau: &[Partition], n: usize) -> Result<SymSeries<RatFunc2>> {
    let mut acc = SymSeries::one(1, n);
    for t in tau {
        let s = SymSeries::single(1, n, Basis::S, MultiPartition(vec![t.clone()]), RatFunc2::one())?;
        acc = acc.mul(&s)?;
    }
    Ok(acc)
}

/// Value of `R^G_{L_λ}(𝒰_τ)` on a class of type `ω`, i.e. `⟨H̃_ω(x;q), Π s_{τ^i}(x)⟩`.
pub fn unipotent_value(lambda: &Partition, tau: &[Partition], omega: &TypeSeq) -> Result<LaurentPoly2> {
    if tau.len() != lambda.len() || tau.iter().zip(lambda.parts()).any(|(t, &l)| t.size() != l) {
        return Err(Error::SizeMismatch(format!("τ does not match the blocks of {lambda}")));
    }
    if omega.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("|ω| = {} but |λ| = {}", omega.size(), lambda.size())));
    }
    let n = lambda.size() as usize;
    let h = type_hall_littlewood(omega)?;
    to_qpoly(&h.hall_pair(&schur_product(tau, n)?)?, "unipotent value")
}

/// Parses `"(2)(1,1)"` into the blocks of a unipotent label.
pub fn parse_unipotent_label(s: &str) -> Result<Vec<Partition>> {
    let s = s.trim();
    if !s.starts_with('(') || !s.ends_with(')') {
        return Err(Error::Parse(format!("expected (parts)(parts)..., got '{s}'")));
    }
    s[1..s.len() - 1].split(")(").map(Partition::parse).collect()
}

/// `ℱ^#_{λ,ω}(q)`, the coefficient of `m_λ` in `H̃_ω(x;q)`: the number of
/// `F_q`-points of the partial flag variety of type `λ` fixed by a class of type `ω`.
pub fn flag_fixed_points(lambda: &Partition, omega: &TypeSeq) -> Result<LaurentPoly2> {
    if omega.size() != lambda.size() {
        return Err(Error::SizeMismatch(format!("|ω| = {} but |λ| = {}", omega.size(), lambda.size())));
    }
    let h = type_hall_littlewood(omega)?;
    to_qpoly(&h.extract_h(&MultiPartition(vec![lambda.clone()]))?, "flag fixed points")
}

#[derive(Clone, Debug, Serialize)]
pub struct GenericMultiplicity {
    pub mu: MultiPartition,
    pub g: u32,
    /// `ℍ_𝛍(0, √q)`.
    pub value: String,
    /// `A_𝛍(q)` through the quiver side.
    pub a_mu: String,
    pub agree: bool,
    pub verdict: Verdict,
}

/// `⟨Λ ⊗ R_𝛍, 1⟩ = ℍ_𝛍(0,√q)`, compared with `A_𝛍(q)` and the root verdict for `v_𝛍`.
pub fn generic_multiplicity(mu: &MultiPartition, g: u32) -> Result<(LaurentPoly2, GenericMultiplicity)> {
    let value = to_qpoly(&hlv_spec(mu, g, Specialization::Pure)?, "ℍ_𝛍(0,√q)")?;
    let a = a_mu(mu, g)?;
    let comet = comet_quiver(mu, g)?;
    let red = reduce_to_fundamental(&comet.quiver, &comet.dim);
    let report = GenericMultiplicity {
        mu: mu.clone(),
        g,
        value: value.to_string(),
        a_mu: a.to_string(),
        agree: value == a,
        verdict: red.verdict,
    };
    Ok((value, report))
}

/// Coefficient `a_{μλ}` of `h_λ` in `s_μ`.
pub fn s_in_h(mu: &Partition, lambda: &Partition) -> Result<i64> {
    let n = mu.size() as usize;
    let s = SymSeries::single(1, n, Basis::S, MultiPartition(vec![mu.clone()]), rat(1, 1))?;
    let c = s.coeff(Basis::H, &MultiPartition(vec![lambda.clone()]))?;
    if !c.is_integer() {
        return Err(Error::Inconsistent(format!("non-integral a_({mu}),({lambda}) = {c}")));
    }
    Ok(c.to_integer().try_into().expect("small"))
}

/// `U_𝛍(q) = Σ_𝛌 a_{μ^1λ^1} ... a_{μ^kλ^k} G_𝛌(q)`.
pub fn unipotent_multiplicity(mu: &MultiPartition, g: u32) -> Result<LaurentPoly2> {
    let n = mu.n()?;
    let k = mu.k();
    let mut acc = RatFunc2::zero();
    for lam in multipartitions(n, k) {
        let mut c = 1i64;
        for (m, l) in mu.components().iter().zip(lam.components()) {
            c *= s_in_h(m, l)?;
            if c == 0 {
                break;
            }
        }
        if c != 0 {
            acc = acc.add(&RatFunc2::from_poly(&g_mu(&lam, g)?).scale(&rat(c, 1)));
        }
    }
    let p = to_qpoly(&acc, "U_𝛍")?;
    if !p.has_integer_coefficients() || !p.is_polynomial() {
        return Err(Error::NotPolynomial(format!("U_{mu} = {p} is not in Z[q]")));
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::macdonald::qpoly;
    use crate::partitions::{partitions, types};

    fn p(s: &str) -> Partition {
        Partition::parse(s).unwrap()
    }
    fn ty(s: &str) -> TypeSeq {
        TypeSeq::parse(s).unwrap()
    }

    #[test]
    fn type_functions() {
        let h = type_hall_littlewood(&ty("1:(1,1,1)")).unwrap();
        let direct = hl_charge(&p("1,1,1"), 3);
        assert!(h.sub(&direct).unwrap().is_zero());
        let h = type_hall_littlewood(&ty("2:(1)")).unwrap();
        let p2 = SymSeries::single(1, 2, Basis::P, MultiPartition(vec![p("2")]), RatFunc2::one()).unwrap();
        assert!(h.sub(&p2).unwrap().is_zero());
        let h = type_hall_littlewood(&ty("1:(1) 1:(1)")).unwrap();
        let p11 = SymSeries::single(1, 2, Basis::P, MultiPartition(vec![p("1,1")]), RatFunc2::one()).unwrap();
        assert!(h.sub(&p11).unwrap().is_zero());
    }

    #[test]
    fn unipotent_values() {
        let triv = parse_unipotent_label("(1)(1)").unwrap();
        assert_eq!(unipotent_value(&p("1,1"), &triv, &ty("1:(1,1)")).unwrap(), qpoly([(0, 1), (1, 1)]));
        assert_eq!(unipotent_value(&p("1,1"), &triv, &ty("1:(2)")).unwrap(), qpoly([(0, 1)]));
        for om in types(2) {
            assert_eq!(unipotent_value(&p("2"), &[p("2")], &om).unwrap(), qpoly([(0, 1)]));
        }
        assert!(unipotent_value(&p("2"), &[p("1")], &ty("1:(2)")).is_err());
        assert!(unipotent_value(&p("2"), &[p("2")], &ty("1:(3)")).is_err());
    }

    #[test]
    fn flag_points() {
        assert_eq!(flag_fixed_points(&p("1,1"), &ty("1:(2)")).unwrap(), qpoly([(0, 1)]));
        assert_eq!(flag_fixed_points(&p("1,1"), &ty("1:(1,1)")).unwrap(), qpoly([(0, 1), (1, 1)]));
        for n in 1..=4 {
            for om in types(n) {
                assert_eq!(flag_fixed_points(&Partition::row(n), &om).unwrap(), qpoly([(0, 1)]));
            }
        }
    }

    #[test]
    fn flag_points_match_induced_values_and_are_nonnegative() {
        for n in 1..=4 {
            for om in types(n) {
                for lam in partitions(n) {
                    let f = flag_fixed_points(&lam, &om).unwrap();
                    assert!(f.is_polynomial() && f.terms().all(|(_, c)| c.is_integer() && *c >= rat(0, 1)));
                    let triv: Vec<Partition> = lam.parts().iter().map(|&l| Partition::row(l)).collect();
                    assert_eq!(unipotent_value(&lam, &triv, &om).unwrap(), f);
                    // h_λ = Σ_μ K_{μλ} s_μ
                    let mut acc = LaurentPoly2::zero(Vars::QT);
                    for m in partitions(n) {
                        let k = crate::symfunc::tables::kostka_number(&m, &lam);
                        if k != 0 {
                            let v = unipotent_value(&Partition::row(n), std::slice::from_ref(&m), &om).unwrap();
                            acc = acc.add(&v.scale(&rat(k, 1)));
                        }
                    }
                    assert_eq!(acc, f);
                }
            }
        }
    }

    #[test]
    fn a_matrix_inverts_kostka() {
        for n in 1..=4 {
            let ps = partitions(n);
            for mu in &ps {
                for nu in &ps {
                    let s: i64 = ps
                        .iter()
                        .map(|l| s_in_h(mu, l).unwrap() * crate::symfunc::tables::kostka_number(nu, l))
                        .sum();
                    assert_eq!(s, i64::from(mu == nu));
                }
            }
        }
    }

    #[test]
    fn multiplicities() {
        let mu = MultiPartition::parse("1").unwrap();
        let (v, rep) = generic_multiplicity(&mu, 1).unwrap();
        assert_eq!(v, qpoly([(1, 1)]));
        assert!(rep.agree);
        assert_eq!(unipotent_multiplicity(&mu, 1).unwrap(), qpoly([(1, 1)]));
        let mu = MultiPartition::parse("1,1|1,1|1,1").unwrap();
        let (v, rep) = generic_multiplicity(&mu, 0).unwrap();
        assert!(rep.agree);
        assert_eq!(v.is_zero(), rep.verdict == Verdict::NonRoot);
    }

    #[test]
    fn unipotent_multiplicities_are_integral() {
        for n in 1..=3 {
            for k in 1..=2 {
                for g in 0..=1 {
                    for mu in multipartitions(n, k) {
                        let u = unipotent_multiplicity(&mu, g).unwrap();
                        assert!(u.has_integer_coefficients());
                    }
                }
            }
        }
    }

    #[test]
    fn multiplicity_one_iff_real_root_in_genus_zero() {
        for n in 1..=3 {
            for mu in multipartitions(n, 3) {
                let (v, rep) = generic_multiplicity(&mu, 0).unwrap();
                assert!(rep.agree, "{mu}");
                assert_eq!(v == qpoly([(0, 1)]), rep.verdict == Verdict::Real, "{mu}");
                assert_eq!(v.is_zero(), rep.verdict == Verdict::NonRoot, "{mu}");
            }
        }
    }
}

//! Verification suites, one per acceptance row, with machine-readable reports.

use crate::algebra::{LaurentPoly2, RatFunc2, Vars};
use crate::charvar::{connectedness_violations, curious_duality_holds, hlv_all, root_reduction_violations, valuation_violations};
use crate::error::{Error, Result};
use crate::hilbmod;
use crate::oracle_ff::{charvar_point_count, compare_orbit_count, harcos_random_suite, GenericClassTuple};
use crate::partitions::{multipartitions, MultiPartition, Partition};
use crate::quiver::{
    a_mu, comet_quiver, delta_ineq_violations, g_routes_check, ineq1_violations, nrm_ineq_violations, parse_dim, purity_check,
    v_mu_identity_check, Quiver,
};
use crate::report::IdentityReport;
use crate::symfunc::{log_via_types, Basis, SymSeries};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::time::Instant;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    /// A conjectural statement held on every computed case.
    ConjectureObserved,
    /// A conjectural statement failed; flagged without failing the suite.
    ConjectureViolated,
}

#[derive(Clone, Debug, Serialize)]
pub struct Entry {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    pub checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub criterion: u32,
    pub entries: Vec<Entry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_ms: Option<u64>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn to_csv(&self) -> String {
        let mut s = String::from("suite,id,status,checked,witness\n");
        for e in &self.entries {
            let st = serde_json::to_value(e.status).expect("status serializes");
            let w = e.witness.clone().unwrap_or_default().replace('"', "\"\"");
            s.push_str(&format!("{},{},{},{},\"{}\"\n", self.suite, e.id, st.as_str().unwrap_or(""), e.checked, w));
        }
        s
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("suite {} (criterion {}): {}\n", self.suite, self.criterion, if self.passed() { "PASS" } else { "FAIL" });
        for e in &self.entries {
            let st = serde_json::to_value(e.status).expect("status serializes");
            s.push_str(&format!("  [{}] {} ({} checked): {}\n", st.as_str().unwrap_or(""), e.id, e.checked, e.anchor));
            if let Some(w) = &e.witness {
                s.push_str(&format!("      witness: {w}\n"));
            }
        }
        if let Some(ms) = self.wall_ms {
            s.push_str(&format!("  wall time: {ms} ms\n"));
        }
        s
    }
}

/// Optional overrides for suite sizes; unset fields take the acceptance defaults.
#[derive(Clone, Debug, Default)]
pub struct SuiteParams {
    pub max_n: Option<u32>,
    pub g: Option<u32>,
    pub k: Option<usize>,
    pub u: Option<usize>,
    pub t: Option<usize>,
    pub nw: Option<i32>,
    pub random: Option<usize>,
    pub seed: Option<u64>,
}

impl SuiteParams {
    fn gs(&self, default: std::ops::RangeInclusive<u32>) -> Vec<u32> {
        self.g.map_or_else(|| default.collect(), |g| vec![g])
    }

    fn ks(&self, default: std::ops::RangeInclusive<usize>) -> Vec<usize> {
        self.k.map_or_else(|| default.collect(), |k| vec![k])
    }
}

pub const SUITES: [(&str, u32); 14] = [
    ("purity", 1),
    ("hua-oracle", 2),
    ("jordan-hilbert", 3),
    ("euler", 4),
    ("pure", 5),
    ("quasimodular", 6),
    ("theta", 7),
    ("connectedness", 8),
    ("valuation", 9),
    ("inequalities", 10),
    ("structure", 11),
    ("charvar-count", 12),
    ("exp-log", 13),
    ("theohua", 14),
];

fn entry(id: impl Into<String>, anchor: impl Into<String>, ok: bool, checked: usize, witness: Option<String>) -> Entry {
    Entry { id: id.into(), anchor: anchor.into(), status: if ok { Status::Pass } else { Status::Fail }, checked, witness }
}

fn from_report(id: impl Into<String>, r: IdentityReport) -> Entry {
    entry(id, r.identity, r.pass, r.checked, r.witness)
}

fn from_violations(id: impl Into<String>, anchor: impl Into<String>, checked: usize, v: &[String]) -> Entry {
    let w = v.first().map(|s| if v.len() > 1 { format!("{s} (and {} more)", v.len() - 1) } else { s.clone() });
    entry(id, anchor, v.is_empty(), checked, w)
}

fn conjecture(mut e: Entry, fatal: bool) -> Entry {
    e.status = match (e.status, fatal) {
        (Status::Pass, _) => Status::ConjectureObserved,
        (_, true) => Status::Fail,
        (_, false) => Status::ConjectureViolated,
    };
    e
}

/// Runs a suite by name or criterion number.
pub fn run_suite(name: &str, params: &SuiteParams) -> Result<VerificationReport> {
    let (suite, criterion) = SUITES
        .iter()
        .find(|(s, c)| *s == name || c.to_string() == name)
        .copied()
        .ok_or_else(|| Error::Invalid(format!("unknown suite '{name}'")))?;
    let start = Instant::now();
    let entries = match criterion {
        1 => purity(params)?,
        2 => hua_oracle()?,
        3 => jordan_hilbert(params)?,
        4 => euler(params)?,
        5 => pure(params)?,
        6 => quasimodular(params)?,
        7 => theta(params)?,
        8 => connectedness(params)?,
        9 => valuation(params)?,
        10 => inequalities(params)?,
        11 => structure(params)?,
        12 => charvar_count()?,
        13 => exp_log(params)?,
        _ => theohua()?,
    };
    Ok(VerificationReport { suite: suite.into(), criterion, entries, wall_ms: Some(start.elapsed().as_millis() as u64) })
}

fn purity(p: &SuiteParams) -> Result<Vec<Entry>> {
    let n = p.max_n.unwrap_or(4) as usize;
    let mut out = Vec::new();
    for g in p.gs(0..=2) {
        for k in p.ks(1..=3) {
            out.push(from_report(format!("purity-g{g}-k{k}"), purity_check(g, k, n)?));
        }
    }
    Ok(out)
}

fn hua_oracle() -> Result<Vec<Entry>> {
    let comet = comet_quiver(&MultiPartition::parse("1,1")?, 1)?;
    let cases: Vec<(String, Quiver, Vec<u32>)> = vec![
        ("jordan".into(), Quiver::jordan(), vec![1]),
        ("jordan".into(), Quiver::jordan(), vec![2]),
        ("jordan".into(), Quiver::jordan(), vec![3]),
        ("A2".into(), Quiver::path(2), parse_dim("1,1")?),
        ("A2".into(), Quiver::path(2), parse_dim("2,1")?),
        ("A3".into(), Quiver::path(3), parse_dim("1,1,1")?),
        ("comet-g1-k1".into(), comet.quiver.clone(), comet.dim.clone()),
    ];
    let mut out = Vec::new();
    for (name, q, v) in cases {
        for p in [2, 3] {
            let c = compare_orbit_count(&q, &v, p)?;
            let w = (!c.agree).then(|| format!("orbits {} vs M({p}) = {}", c.orbits, c.m_at_p));
            out.push(entry(
                format!("{name}-{v:?}-p{p}"),
                format!("orbit count over F_{p} = M(q) = {} at q = {p}", c.m_polynomial),
                c.agree,
                1,
                w,
            ));
        }
    }
    Ok(out)
}

fn hook(n: u32) -> Result<MultiPartition> {
    Ok(MultiPartition::new(vec![Partition::new(vec![n - 1, 1])?]))
}

fn jordan_hilbert(p: &SuiteParams) -> Result<Vec<Entry>> {
    let q = LaurentPoly2::var(Vars::QT, 0);
    let mut w = None;
    for n in 1..=3 {
        let a = a_mu(&MultiPartition::new(vec![Partition::row(n)]), 1)?;
        if a != q {
            w = Some(format!("A_({n}) = {a}"));
            break;
        }
    }
    let mut out = vec![entry("jordan-A", "A_(n)(q) = q for n ≤ 3, g = 1", w.is_none(), 3, w)];
    let nmax = p.max_n.unwrap_or(5) as usize;
    let y = hilbmod::hilb_poincare_y(nmax)?;
    let mut w = None;
    for n in 2..=nmax {
        let a = a_mu(&hook(n as u32)?, 1)?;
        let r = y[n].shift(-(n as i32), 0);
        if a != r {
            w = Some(format!("n={n}: A = {a}, q^-n P_c = {r}"));
            break;
        }
    }
    out.push(entry("hilbert-A", format!("A_(n-1,1)(q) = q^-n P_c(Y^[n]; q) for 2 ≤ n ≤ {nmax}"), w.is_none(), nmax - 1, w));
    out.push(from_report("Y-log", hilbmod::ynbis_check(nmax)?));
    Ok(out)
}

fn euler(p: &SuiteParams) -> Result<Vec<Entry>> {
    let n = p.max_n.unwrap_or(6) as usize;
    let mut out: Vec<Entry> =
        hilbmod::euler_identity_check(n)?.into_iter().enumerate().map(|(i, r)| from_report(format!("euler-{i}"), r)).collect();
    out.push(from_report("hilb-log", hilbmod::gs2_check(n)?));
    out.push(conjecture(from_report("hilb-vs-hook", hilbmod::conj_hs_report(n.min(4))?), false));
    Ok(out)
}

fn pure(p: &SuiteParams) -> Result<Vec<Entry>> {
    Ok(vec![from_report("pure-three-way", hilbmod::pure_identity_check(p.max_n.unwrap_or(5) as usize)?)])
}

fn quasimodular(p: &SuiteParams) -> Result<Vec<Entry>> {
    let (u, t) = (p.u.unwrap_or(6), p.t.unwrap_or(8));
    let mut out: Vec<Entry> =
        hilbmod::quasimodular_check(u, t)?.into_iter().enumerate().map(|(i, r)| from_report(format!("quasimodular-{i}"), r)).collect();
    let g2 = hilbmod::eisenstein(2, 4)?;
    let want = ["-1/24", "1", "3", "4", "7"];
    let ok = g2.coeffs == want;
    out.push(entry("G2", "G_2(T) = -1/24 + T + 3T^2 + 4T^3 + 7T^4 + ...", ok, 5, (!ok).then(|| format!("{:?}", g2.coeffs))));
    Ok(out)
}

fn theta(p: &SuiteParams) -> Result<Vec<Entry>> {
    let nq = p.max_n.unwrap_or(8) as i32;
    let nw = p.nw.unwrap_or(8);
    Ok(hilbmod::theta_checks(nq, nw, 4)?.into_iter().enumerate().map(|(i, r)| from_report(format!("theta-{i}"), r)).collect())
}

fn connectedness(p: &SuiteParams) -> Result<Vec<Entry>> {
    let nmax = p.max_n.unwrap_or(4);
    let mut out = Vec::new();
    for g in p.gs(0..=2) {
        for k in p.ks(1..=3) {
            let mut checked = 0;
            let mut v = Vec::new();
            for n in 1..=nmax {
                let (c, mut x) = connectedness_violations(n, k, g)?;
                checked += c;
                v.append(&mut x);
            }
            out.push(from_violations(format!("E0-g{g}-k{k}"), format!("E(M_μ; 0) = 1 for nonempty M_μ with δ ≥ 0, n ≤ {nmax}"), checked, &v));
        }
    }
    let mut checked = 0;
    let mut v = Vec::new();
    for k in 1..=4 {
        for n in 1..=3 {
            let (c, mut x) = root_reduction_violations(n, k, 0)?;
            checked += c;
            v.append(&mut x);
        }
    }
    out.push(from_violations("roots-g0", "g = 0, n ≤ 3, k ≤ 4: E = 0 for non-roots, E = 1 for real roots, E(0) = 1 otherwise", checked, &v));
    Ok(out)
}

fn valuation(p: &SuiteParams) -> Result<Vec<Entry>> {
    let nmax = p.max_n.unwrap_or(6);
    let mut out = Vec::new();
    for g in p.gs(0..=2) {
        for k in p.ks(1..=3) {
            let mut checked = 0;
            let mut v = Vec::new();
            for n in 1..=nmax {
                let (c, mut x) = valuation_violations(n, k, g, 4)?;
                checked += c;
                v.append(&mut x);
            }
            out.push(from_violations(
                format!("argmin-g{g}-k{k}"),
                format!("min v(λ) = -Δ, argmin by affine/imaginary case, lowest coefficient 1, n ≤ {nmax}"),
                checked,
                &v,
            ));
        }
    }
    Ok(out)
}

fn inequalities(p: &SuiteParams) -> Result<Vec<Entry>> {
    let count = p.random.unwrap_or(10_000);
    let seed = p.seed.unwrap_or(42);
    let nmax = p.max_n.unwrap_or(6);
    let s = harcos_random_suite(count, seed)?;
    let mut out = vec![entry(
        "row-sum-inequality",
        format!("c Σ_k(Σ_i x_ik)^2 - (Σc_i)(Σx_ik^2) ≤ c(Σc_i)^2 - (Σc_i)(Σc_i^2) with equality iff equal rows or one column; {} instances, seed {seed}", s.instances),
        s.passed(),
        s.instances + s.constructed,
        (!s.passed()).then(|| format!("{s:?}")),
    )];
    let mut checked = 0u128;
    let mut v = Vec::new();
    for n in 1..=nmax {
        for k in 1..=3 {
            for g in 0..=2 {
                let (c, mut x) = delta_ineq_violations(n, k, g)?;
                checked += c;
                v.append(&mut x);
            }
        }
    }
    out.push(from_violations("delta-inequality", format!("Δ(𝛍) > Σ Δ(𝛍_p) over splittings, n ≤ {nmax}, k ≤ 3, g ≤ 2"), checked as usize, &v));
    let mut checked = 0;
    let mut v = Vec::new();
    let mut c1 = 0;
    let mut v1 = Vec::new();
    for n in 1..=nmax {
        let (c, mut x) = nrm_ineq_violations(n);
        checked += c;
        v.append(&mut x);
        let (c, mut x) = ineq1_violations(n);
        c1 += c;
        v1.append(&mut x);
    }
    out.push(from_violations("norm-inequality", format!("norm inequality on partition splittings with its equality cases, n ≤ {nmax}"), checked, &v));
    out.push(from_violations("cauchy-inequality", format!("μ_1‖Σν^p‖^2 - nΣ‖ν^p‖^2 ≤ μ_1n^2 - n‖μ‖^2 with equality cases, n ≤ {nmax}"), c1, &v1));
    Ok(out)
}

fn structure(p: &SuiteParams) -> Result<Vec<Entry>> {
    let nmax = p.max_n.unwrap_or(4);
    let mut out = Vec::new();
    for g in p.gs(0..=2) {
        for k in p.ks(1..=3) {
            let mut checked = 0;
            let mut v = Vec::new();
            for n in 1..=nmax {
                for h in hlv_all(g, k, n)? {
                    checked += 1;
                    for s in h.structure_violations() {
                        v.push(format!("{} g={g}: {s}", h.mu));
                    }
                    let (e, _) = h.e_polynomial()?;
                    if !curious_duality_holds(&e, h.d_mu) {
                        v.push(format!("{} g={g}: curious duality fails for E = {e}", h.mu));
                    }
                }
            }
            let e = from_violations(
                format!("structure-g{g}-k{k}"),
                format!("ℍ_𝛍 polynomial, degree d_𝛍, symmetric, ℍ(-z,w) ≥ 0, E(q) = q^d E(1/q); n ≤ {nmax}"),
                checked,
                &v,
            );
            out.push(conjecture(e, true));
        }
    }
    Ok(out)
}

fn charvar_count() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    let one = MultiPartition::parse("1")?;
    for g in 0..=2u32 {
        let mut v = Vec::new();
        let primes = [2u64, 3, 5, 7, 11, 13];
        for &p in primes.iter().filter(|&&p| g < 2 || p <= 7) {
            let t = GenericClassTuple::new(&one, &[vec![1]], p)?;
            let c = charvar_point_count(&one, g, &t)?;
            if !c.agree {
                v.push(format!("p={p}: count {} vs E(p) = {}", c.count, c.e_at_p));
            }
        }
        out.push(from_violations(format!("rank1-g{g}"), format!("n = 1, g = {g}: point count = E(p) for primes p ≤ 13"), primes.len(), &v));
    }
    let mu = MultiPartition::parse("1,1")?;
    let t = GenericClassTuple::new(&mu, &[vec![2, 3]], 5)?;
    let c = charvar_point_count(&mu, 1, &t)?;
    let ok = c.agree && c.count == "496";
    out.push(entry(
        "rank2-p5",
        "n = 2, g = 1, eigenvalues {2,3} over F_5: count/|PGL_2(F_5)| = E(5) = 496",
        ok,
        1,
        (!ok).then(|| format!("count {} vs E(5) = {}", c.count, c.e_at_p)),
    ));
    let rejected = matches!(GenericClassTuple::new(&mu, &[vec![2, 2]], 3), Err(Error::Genericity(_)));
    out.push(entry("genericity-rejection", "repeated eigenvalue for type (1,1) is rejected", rejected, 1, None));
    Ok(out)
}

fn random_coeff(rng: &mut ChaCha8Rng) -> RatFunc2 {
    let mut p = LaurentPoly2::zero(Vars::QT);
    for (a, b) in [(0, 0), (1, 0), (0, 1), (1, 1)] {
        let c: i64 = rng.random_range(-2..=2);
        if c != 0 {
            p.add_term(a, b, crate::algebra::rat_int(c));
        }
    }
    RatFunc2::from_poly(&p)
}

fn random_series(rng: &mut ChaCha8Rng, k: usize, n: usize, constant: bool) -> Result<SymSeries<RatFunc2>> {
    let mut terms = Vec::new();
    if constant {
        terms.push((MultiPartition::new(vec![Partition::row(0); k]), RatFunc2::one()));
    }
    for d in 1..=n as u32 {
        for mu in multipartitions(d, k) {
            if rng.random_bool(0.5) {
                terms.push((mu, random_coeff(rng)));
            }
        }
    }
    SymSeries::from_terms(k, n, Basis::M, terms)
}

fn integral(s: &SymSeries<RatFunc2>) -> Option<String> {
    s.coeffs(Basis::M).into_iter().find_map(|(mu, c)| match c.to_laurent(Vars::QT) {
        Some(p) if p.is_polynomial() && p.has_integer_coefficients() => None,
        _ => Some(format!("m-coefficient of {mu} is {}", c.display(Vars::QT))),
    })
}

fn exp_log(p: &SuiteParams) -> Result<Vec<Entry>> {
    let samples = p.random.unwrap_or(12);
    let seed = p.seed.unwrap_or(42);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut w_log = None;
    let mut w_int = None;
    for i in 0..samples {
        let k = 1 + i % 2;
        let n = if k == 1 { 5 } else { 4 };
        let f = random_series(&mut rng, k, n, true)?;
        let a = f.pleth_log()?;
        let b = log_via_types(&f)?;
        if a != b && w_log.is_none() {
            w_log = Some(format!("sample {i}: {}", crate::quiver::first_discrepancy(&a, &b).unwrap_or_default()));
        }
        let g = random_series(&mut rng, k, if k == 1 { 6 } else { 4 }, false)?;
        if let Some(w) = integral(&g.pleth_exp()?) {
            w_int.get_or_insert(format!("sample {i}: {w}"));
        }
        if let Some(w) = integral(&a) {
            w_int.get_or_insert(format!("sample {i}, Log: {w}"));
        }
    }
    Ok(vec![
        entry("log-routes", format!("Möbius-inverted Log = type-sum Log on {samples} random integral series, seed {seed}"), w_log.is_none(), samples, w_log),
        entry("exp-integrality", "Exp and Log of m-integral series over Z[q,t] are m-integral", w_int.is_none(), samples, w_int),
    ])
}

fn theohua() -> Result<Vec<Entry>> {
    let mut out = Vec::new();
    for (g, k, n) in [(1u32, 1usize, 3usize), (0, 3, 2)] {
        out.push(from_report(format!("g-routes-{g}-{k}-{n}"), g_routes_check(g, k, n)?));
        out.push(from_report(format!("v-series-{g}-{k}-{n}"), v_mu_identity_check(g, k, n)?));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_lookup() {
        assert!(run_suite("nope", &SuiteParams::default()).is_err());
        let r = run_suite("5", &SuiteParams { max_n: Some(3), ..Default::default() }).unwrap();
        assert_eq!(r.suite, "pure");
        assert!(r.passed());
        assert!(r.to_csv().starts_with("suite,id,status"));
    }

    #[test]
    fn conjecture_status() {
        let e = entry("x", "y", false, 1, Some("w".into()));
        assert_eq!(conjecture(e.clone(), false).status, Status::ConjectureViolated);
        assert_eq!(conjecture(e, true).status, Status::Fail);
        let r = VerificationReport {
            suite: "s".into(),
            criterion: 0,
            entries: vec![conjecture(entry("x", "y", false, 1, None), false)],
            wall_ms: None,
        };
        assert!(r.passed());
    }

    #[test]
    fn small_exp_log() {
        let r = exp_log(&SuiteParams { random: Some(2), ..Default::default() }).unwrap();
        assert!(r.iter().all(|e| e.status == Status::Pass), "{r:?}");
    }
}

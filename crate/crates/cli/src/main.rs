use clap::{Args, Parser, Subcommand};
use comet_core::algebra::Vars;
use comet_core::charvar::{hlv_h, small_delta};
use comet_core::glnchar::{flag_fixed_points, generic_multiplicity, parse_unipotent_label, unipotent_multiplicity, unipotent_value};
use comet_core::hilbmod::hilb_series;
use comet_core::macdonald::{green_polynomial, hall_littlewood, macdonald_ht};
use comet_core::oracle_ff::{charvar_point_count, compare_orbit_count, harcos_random_suite, GenericClassTuple};
use comet_core::partitions::{multipartitions, MultiPartition, Partition, TypeSeq};
use comet_core::quiver::{
    a_mu, comet_quiver, g_mu, g_mu_via_product, kac_a, parse_comet, parse_dim, reduce_to_fundamental, Quiver,
};
use comet_core::symfunc::Basis;
use comet_core::verify::{run_suite, SuiteParams, VerificationReport, SUITES};
use comet_core::Error;
use serde_json::{json, Value};
use std::io::Write;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "comet", version, about = "Exact E-series, Kac polynomials and Hilbert-scheme series")]
struct Cli {
    /// Emit JSON (default for compute commands).
    #[arg(long, global = true)]
    json: bool,
    /// Emit CSV for verification reports.
    #[arg(long, global = true)]
    csv: bool,
    /// Omit wall-time so output is byte-stable.
    #[arg(long, global = true)]
    stable: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct MuArgs {
    #[arg(long, default_value_t = 0)]
    g: u32,
    /// Multipartition, e.g. "2,1|1,1,1" (";" also separates components).
    #[arg(long)]
    mu: String,
}

impl MuArgs {
    fn parse(&self) -> Result<MultiPartition, Error> {
        parse_mu(&self.mu)
    }
}

#[derive(Args)]
struct QuiverArgs {
    /// Quiver JSON file: {"vertices":[..],"arrows":[[tail,head],..]}.
    #[arg(long, conflicts_with = "comet")]
    quiver: Option<String>,
    /// Comet shorthand "g=1;mu=2,1|1,1,1"; its dimension vector is used unless --dim is given.
    #[arg(long)]
    comet: Option<String>,
    #[arg(long)]
    dim: Option<String>,
}

impl QuiverArgs {
    fn resolve(&self) -> Result<(Quiver, Vec<u32>), Error> {
        let (q, d) = match (&self.quiver, &self.comet) {
            (Some(path), _) => {
                let s = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("{path}: {e}")))?;
                (Quiver::from_json(&s)?, None)
            }
            (None, Some(c)) => {
                let (mu, g) = parse_comet(c)?;
                let data = comet_quiver(&mu, g)?;
                (data.quiver, Some(data.dim))
            }
            (None, None) => return Err(Error::Invalid("need --quiver or --comet".into())),
        };
        let dim = match (&self.dim, d) {
            (Some(s), _) => parse_dim(s)?,
            (None, Some(d)) => d,
            (None, None) => return Err(Error::Invalid("need --dim".into())),
        };
        if dim.len() != q.len() {
            return Err(Error::SizeMismatch(format!("dimension vector has {} entries, quiver has {} vertices", dim.len(), q.len())));
        }
        Ok((q, dim))
    }
}

#[derive(Subcommand)]
enum Cmd {
    /// Modified Macdonald (or Hall-Littlewood) polynomial in a chosen basis.
    Macdonald {
        #[arg(long)]
        lambda: String,
        #[arg(long, default_value = "s")]
        basis: String,
        /// Use the transformed Hall-Littlewood polynomial H̃_λ(x;q) instead.
        #[arg(long)]
        hall_littlewood: bool,
    },
    /// Green polynomial Q^τ_λ(q).
    Green {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        tau: String,
    },
    /// ℍ_𝛍(z,w).
    Hlv(MuArgs),
    /// E-polynomial of the character variety.
    Epoly(MuArgs),
    /// Kac polynomial of the comet quiver of 𝛍.
    Apoly(MuArgs),
    /// Kac polynomial of a quiver at a dimension vector.
    Kac(QuiverArgs),
    /// G_𝛍(q) through both routes.
    Gmu(MuArgs),
    /// Mixed Hodge series of Hilbert schemes of points on C×C^×.
    Hilb {
        #[arg(long, default_value_t = 4)]
        n: usize,
    },
    /// Characters of GL_n(F_q).
    Glchar {
        #[command(subcommand)]
        cmd: GlCmd,
    },
    /// Finite-field brute-force oracles.
    Oracle {
        #[command(subcommand)]
        cmd: OracleCmd,
    },
    /// Run a verification suite by name or number, or "all".
    Verify(VerifyArgs),
    /// Constant term of E(ℳ_𝛍; q) and the root verdict of v_𝛍.
    Connectedness {
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, conflicts_with_all = ["n", "k"])]
        mu: Option<String>,
        /// Include multipartitions with δ < 0.
        #[arg(long)]
        all: bool,
    },
}

#[derive(Subcommand)]
enum GlCmd {
    /// Unipotent character value on a class of type ω.
    Unipval {
        #[arg(long)]
        lambda: String,
        /// Blocks such as "(2)" or "(1)(1)".
        #[arg(long)]
        tau: String,
        /// Type such as "1:(2)" or "2:(1) 1:(1)".
        #[arg(long)]
        omega: String,
    },
    /// Multiplicity of the trivial character in the unipotent tensor product.
    Umult(MuArgs),
    /// Multiplicity for generic characters, with the Kac comparison.
    Generic(MuArgs),
    /// Fixed points of a class of type ω on the flag variety of type λ.
    Flag {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        omega: String,
    },
}

#[derive(Subcommand)]
enum OracleCmd {
    /// Orbit count of representations over F_p against Hua.
    Quiver {
        #[command(flatten)]
        q: QuiverArgs,
        #[arg(long)]
        p: u64,
    },
    /// Point count of a character variety over F_p against E(p).
    Charvar {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 0)]
        g: u32,
        #[arg(long)]
        p: u64,
        /// Eigenvalues per class, e.g. "2,3" or "2,3|4,1".
        #[arg(long)]
        eigs: String,
        /// Multiplicities; defaults to (1^n) for every class.
        #[arg(long)]
        mu: Option<String>,
    },
    /// Randomized row-sum inequality with equality-case classification.
    Harcos {
        #[arg(long, default_value_t = 10_000)]
        random: usize,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name, criterion number, or "all".
    suite: String,
    #[arg(long, visible_alias = "n")]
    max_n: Option<u32>,
    #[arg(long)]
    g: Option<u32>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    u: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    nw: Option<i32>,
    #[arg(long)]
    random: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
}

enum Out {
    Value(Value),
    Reports(Vec<VerificationReport>),
}

fn parse_mu(s: &str) -> Result<MultiPartition, Error> {
    MultiPartition::parse(&s.replace(';', "|"))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(s: &str) {
    let _ = std::io::stdout().lock().write_all(s.as_bytes());
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(&cli.cmd) {
        Ok(Out::Value(v)) => {
            emit(&format!("{v}\n"));
            ExitCode::SUCCESS
        }
        Ok(Out::Reports(mut rs)) => {
            if cli.stable {
                rs.iter_mut().for_each(|r| r.wall_ms = None);
            }
            for r in &rs {
                if cli.json {
                    emit(&format!("{}\n", serde_json::to_string(r).expect("report serializes")));
                } else if cli.csv {
                    emit(&r.to_csv());
                } else {
                    emit(&r.to_text());
                }
            }
            if rs.iter().all(|r| r.passed()) {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: &Cmd) -> Result<Out, Error> {
    let v = match cmd {
        Cmd::Macdonald { lambda, basis, hall_littlewood: hl } => {
            let l = Partition::parse(lambda)?;
            let b = Basis::parse(basis).ok_or_else(|| Error::Invalid(format!("unknown basis '{basis}' (m, h, e, s, p)")))?;
            let f = if *hl { hall_littlewood(&l) } else { macdonald_ht(&l) };
            let coeffs: Vec<Value> =
                f.coeffs(b).into_iter().map(|(mu, c)| json!({"mu": mu.to_string(), "value": c.display(Vars::QT)})).collect();
            json!({"lambda": l, "kind": if *hl { "hall-littlewood" } else { "macdonald" }, "basis": basis, "coeffs": coeffs})
        }
        Cmd::Green { lambda, tau } => {
            let q = green_polynomial(&Partition::parse(lambda)?, &Partition::parse(tau)?);
            json!({"Q": q.to_string()})
        }
        Cmd::Hlv(m) => {
            let h = hlv_h(&m.parse()?, m.g)?;
            json!({"mu": h.mu, "g": h.g, "d_mu": h.d_mu, "H": h.value.to_string(), "poly": h.value.to_json()})
        }
        Cmd::Epoly(m) => {
            let h = hlv_h(&m.parse()?, m.g)?;
            let (e, c0) = h.e_polynomial()?;
            json!({"mu": h.mu, "g": h.g, "E": e.to_string(), "constant_term": c0.to_string(), "dimension": 2 * h.d_mu})
        }
        Cmd::Apoly(m) => json!({"A": a_mu(&m.parse()?, m.g)?.to_string()}),
        Cmd::Kac(q) => {
            let (quiver, dim) = q.resolve()?;
            let a = kac_a(&quiver, &dim)?;
            let red = reduce_to_fundamental(&quiver, &dim);
            json!({"dim": dim, "A": a.to_string(), "reduction": red})
        }
        Cmd::Gmu(m) => {
            let mu = m.parse()?;
            let a = g_mu(&mu, m.g)?;
            let b = g_mu_via_product(&mu, m.g)?;
            if a != b {
                return Err(Error::Inconsistent(format!("G routes differ: {a} vs {b}")));
            }
            json!({"G": a.to_string()})
        }
        Cmd::Hilb { n } => hilb_series(*n)?.to_json(),
        Cmd::Glchar { cmd } => match cmd {
            GlCmd::Unipval { lambda, tau, omega } => {
                let v = unipotent_value(&Partition::parse(lambda)?, &parse_unipotent_label(tau)?, &TypeSeq::parse(omega)?)?;
                json!({"value": v.to_string()})
            }
            GlCmd::Umult(m) => json!({"U": unipotent_multiplicity(&m.parse()?, m.g)?.to_string()}),
            GlCmd::Generic(m) => serde_json::to_value(generic_multiplicity(&m.parse()?, m.g)?.1).expect("serializes"),
            GlCmd::Flag { lambda, omega } => {
                json!({"value": flag_fixed_points(&Partition::parse(lambda)?, &TypeSeq::parse(omega)?)?.to_string()})
            }
        },
        Cmd::Oracle { cmd } => match cmd {
            OracleCmd::Quiver { q, p } => {
                let (quiver, dim) = q.resolve()?;
                serde_json::to_value(compare_orbit_count(&quiver, &dim, *p)?).expect("serializes")
            }
            OracleCmd::Charvar { n, g, p, eigs, mu } => {
                let eigs = eigs
                    .split('|')
                    .map(|c| parse_dim(c).map(|v| v.into_iter().map(u64::from).collect::<Vec<_>>()))
                    .collect::<Result<Vec<_>, _>>()?;
                let mu = match mu {
                    Some(s) => parse_mu(s)?,
                    None => MultiPartition::new(vec![Partition::column(*n); eigs.len()]),
                };
                if mu.n()? != *n {
                    return Err(Error::SizeMismatch(format!("multipartition has size {}, --n is {n}", mu.n()?)));
                }
                let t = GenericClassTuple::new(&mu, &eigs, *p)?;
                serde_json::to_value(charvar_point_count(&mu, *g, &t)?).expect("serializes")
            }
            OracleCmd::Harcos { random, seed } => serde_json::to_value(harcos_random_suite(*random, *seed)?).expect("serializes"),
        },
        Cmd::Verify(a) => {
            let params = SuiteParams {
                max_n: a.max_n,
                g: a.g,
                k: a.k,
                u: a.u,
                t: a.t,
                nw: a.nw,
                random: a.random,
                seed: a.seed,
            };
            let names: Vec<&str> = if a.suite == "all" { SUITES.iter().map(|s| s.0).collect() } else { vec![a.suite.as_str()] };
            let reports = names.iter().map(|s| run_suite(s, &params)).collect::<Result<Vec<_>, _>>()?;
            return Ok(Out::Reports(reports));
        }
        Cmd::Connectedness { g, n, k, mu, all } => {
            let mus = match (mu, n, k) {
                (Some(s), _, _) => vec![parse_mu(s)?],
                (None, Some(n), Some(k)) => multipartitions(*n, *k),
                _ => return Err(Error::Invalid("need --mu, or both --n and --k".into())),
            };
            let mut rows = Vec::new();
            for m in mus {
                let delta = small_delta(&m, *g)?;
                if delta < 0 && !all {
                    continue;
                }
                let c = comet_quiver(&m, *g)?;
                let red = reduce_to_fundamental(&c.quiver, &c.dim);
                let (e, c0) = hlv_h(&m, *g)?.e_polynomial()?;
                rows.push(json!({
                    "mu": m,
                    "delta": delta,
                    "verdict": red.verdict,
                    "E": e.to_string(),
                    "constant_term": c0.to_string(),
                }));
            }
            json!({"g": g, "cases": rows})
        }
    };
    Ok(Out::Value(v))
}

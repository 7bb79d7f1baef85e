//! `fibra` command line: census, estimate sweeps, trinomial counts, twisting
//! problems, local residue plans and progressions.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 a guaranteed statement
//! failed (or, under `--strict`, an estimate failed), 3 only inconclusive
//! results under `--strict`.

pub mod expr;
pub mod files;
pub mod report;

use std::io::Write;
use std::path::PathBuf;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use fibra_core::arith::{prime_power, primes_in};
use fibra_core::localglobal::DEFAULT_CERT_CAP;
use fibra_core::perm::cycle_type;
use fibra_core::twist::twisted_centralizer_order;
use fibra_core::{
    beta_plans, build_progression, census, chowla_sweep, count_ii2, cyclic_situation_c,
    enumerate_isoms, find_residue, nontrivial_class_types, plan_at, tcheb_check,
    twisted_fixed_points, verify_progression, CensusOptions, Cover, DegreeDivisor, Field,
    GroupHom, LocalError, TchebError, TwistError,
};
use serde::Serialize;
use serde_json::json;

pub use expr::{parse_poly, ParseError, PolyExpr};
use report::{emit, Format, Outcome, Table};

pub const TAG_TCHEBOTAREV: &str = "function-field-tchebotarev";
pub const TAG_TRINOMIAL: &str = "trinomial-count";
pub const TAG_TWIST: &str = "twisting-lemma";
pub const TAG_LOCAL: &str = "local-specialization";
pub const TAG_PROGRESSION: &str = "local-global-progression";

#[derive(Parser, Debug)]
#[command(name = "fibra", version, about = "Specializations of covers of the projective line")]
pub struct Cli {
    /// Report format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    /// Exit nonzero when an estimate fails (2) or a result is inconclusive (3).
    #[arg(long, global = true)]
    pub strict: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Count specializations of P(T, Y) over F_q by degree divisor.
    Census(CensusArgs),
    /// Check the point-count estimate over a range of primes.
    Tcheb(TchebArgs),
    /// Count irreducible trinomials Y^n + Y + a over F_p.
    Chowla(ChowlaArgs),
    /// Analyse a twisting problem given as a TOML file.
    Twist(TwistArgs),
    /// Find a residue mod p realizing a degree divisor.
    Local(LocalArgs),
    /// Assemble and verify an arithmetic progression of specializations.
    Progression(ProgressionArgs),
}

fn poly_arg(s: &str) -> Result<PolyExpr, String> {
    s.parse::<PolyExpr>().map_err(|e| e.to_string())
}

fn divisor_arg(s: &str) -> Result<DegreeDivisor, String> {
    s.parse::<DegreeDivisor>().map_err(|e| e.to_string())
}

#[derive(Args, Debug)]
pub struct CensusArgs {
    /// Polynomial in T and Y, e.g. "Y^3+Y-T".
    #[arg(long, value_parser = poly_arg)]
    pub poly: PolyExpr,
    /// Field cardinality (a prime power).
    #[arg(long)]
    pub q: u64,
    /// Also factor every fiber completely and cross-check.
    #[arg(long, requires = "seed")]
    pub full_factor: bool,
    #[arg(long)]
    pub seed: Option<u64>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Geometric monodromy group the user asserts, echoed in the report.
    #[arg(long)]
    pub assume_monodromy: Option<String>,
}

#[derive(Args, Debug)]
pub struct TchebArgs {
    #[arg(long, value_parser = poly_arg)]
    pub poly: PolyExpr,
    #[arg(long)]
    pub qmin: u64,
    #[arg(long)]
    pub qmax: u64,
    /// Cycle types to check (repeatable); all partitions of n by default.
    #[arg(long = "type", value_parser = divisor_arg)]
    pub types: Vec<DegreeDivisor>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    #[arg(long)]
    pub assume_monodromy: Option<String>,
}

#[derive(Args, Debug)]
pub struct ChowlaArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub pmin: u64,
    #[arg(long)]
    pub pmax: u64,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
}

#[derive(Args, Debug)]
pub struct TwistArgs {
    #[arg(long)]
    pub problem: PathBuf,
    #[arg(long)]
    pub datum: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct LocalArgs {
    #[arg(long, value_parser = poly_arg)]
    pub poly: PolyExpr,
    #[arg(long)]
    pub prime: u64,
    #[arg(long = "type", value_parser = divisor_arg)]
    pub target: DegreeDivisor,
}

#[derive(Args, Debug)]
pub struct ProgressionArgs {
    #[arg(long, value_parser = poly_arg)]
    pub poly: PolyExpr,
    #[arg(long)]
    pub plan: PathBuf,
    #[arg(long, default_value_t = 50)]
    pub samples: u64,
    /// Largest certificate prime; overrides the plan file.
    #[arg(long)]
    pub cert_cap: Option<u64>,
}

/// Runs the tool on `argv` (program name first) and returns the exit code.
pub fn run(argv: &[String], out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let rendered = e.render().to_string();
            let sink: &mut dyn Write = if code == 0 { out } else { err };
            let _ = write!(sink, "{rendered}");
            return code;
        }
    };
    let mut recorded = vec![report::TOOL.to_string()];
    recorded.extend(argv.iter().skip(1).cloned());
    match dispatch(&cli.command) {
        Ok(outcome) => {
            if let Err(e) = emit(&outcome, &recorded, cli.format, out) {
                let _ = writeln!(err, "error: cannot write report: {e}");
                return 1;
            }
            outcome.exit_code(cli.strict)
        }
        Err(e) => {
            let _ = writeln!(err, "error: {e:#}");
            1
        }
    }
}

fn dispatch(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Census(a) => cmd_census(a),
        Command::Tcheb(a) => cmd_tcheb(a),
        Command::Chowla(a) => cmd_chowla(a),
        Command::Twist(a) => cmd_twist(a),
        Command::Local(a) => cmd_local(a),
        Command::Progression(a) => cmd_progression(a),
    }
}

fn field_of_order(q: u64) -> Result<Field> {
    let (p, m) = prime_power(q).ok_or_else(|| anyhow!("q = {q} is not a prime power"))?;
    Ok(Field::new(p, m)?)
}

fn cmd_census(a: &CensusArgs) -> Result<Outcome> {
    let field = field_of_order(a.q)?;
    let opts = CensusOptions {
        threads: a.threads,
        full_factor_seed: if a.full_factor { a.seed } else { None },
        assumed_geometric_monodromy: a.assume_monodromy.clone(),
        cap: None,
    };
    let rep = census(&a.poly.poly, &field, &opts)?;
    let mut table = Table::new(&["divisor", "count", "class_size", "main_term", "error_bound", "pass"]);
    for v in &rep.verdicts {
        table.push(vec![
            v.divisor.to_string(),
            v.observed.to_string(),
            v.class_size.to_string(),
            format!("{:.6}", v.main_term),
            format!("{:.6}", v.error_bound),
            v.pass.to_string(),
        ]);
    }
    table.push(vec![
        "ramified".into(),
        rep.ramified.to_string(),
        String::new(),
        String::new(),
        String::new(),
        String::new(),
    ]);
    let partition_ok = rep.total() == rep.q;
    let estimate_failed = rep.verdicts.iter().any(|v| !v.pass);
    let seed = rep.seed;
    let mut o = Outcome::new(TAG_TCHEBOTAREV, &rep, table);
    o.seed = seed;
    o.falsified = !partition_ok;
    o.estimate_failed = estimate_failed;
    Ok(o)
}

#[derive(Serialize)]
struct SweepEntry {
    q: u64,
    r: usize,
    ramified: u64,
    total: u64,
    verdicts: Vec<fibra_core::Verdict>,
}

fn cmd_tcheb(a: &TchebArgs) -> Result<Outcome> {
    if a.qmin > a.qmax {
        bail!("qmin {} exceeds qmax {}", a.qmin, a.qmax);
    }
    let mut entries = Vec::new();
    let mut skipped = Vec::new();
    let mut table = Table::new(&["q", "r", "divisor", "count", "main_term", "error_bound", "pass"]);
    let mut failures = 0usize;
    let mut partition_ok = true;
    for q in primes_in(a.qmin, a.qmax) {
        let field = Field::prime(q)?;
        let opts = CensusOptions {
            threads: a.threads,
            assumed_geometric_monodromy: a.assume_monodromy.clone(),
            ..Default::default()
        };
        let rep = match census(&a.poly.poly, &field, &opts) {
            Ok(r) => r,
            Err(e @ (TchebError::InseparableCover | TchebError::DegreeTooSmall(_))) => {
                skipped.push(json!({ "q": q, "reason": e.to_string() }));
                continue;
            }
            Err(e) => return Err(e.into()),
        };
        partition_ok &= rep.total() == q;
        let types: Vec<DegreeDivisor> = if a.types.is_empty() {
            DegreeDivisor::partitions(rep.n)
        } else {
            a.types.clone()
        };
        let verdicts = types
            .iter()
            .map(|t| tcheb_check(&rep, t))
            .collect::<Result<Vec<_>, _>>()?;
        for v in &verdicts {
            failures += usize::from(!v.pass);
            table.push(vec![
                q.to_string(),
                rep.r.to_string(),
                v.divisor.to_string(),
                v.observed.to_string(),
                format!("{:.6}", v.main_term),
                format!("{:.6}", v.error_bound),
                v.pass.to_string(),
            ]);
        }
        entries.push(SweepEntry {
            q,
            r: rep.r,
            ramified: rep.ramified,
            total: rep.total(),
            verdicts,
        });
    }
    let body = json!({
        "poly": a.poly.poly.to_string(),
        "qmin": a.qmin,
        "qmax": a.qmax,
        "branch_bound_method": fibra_core::tchebotarev::BRANCH_BOUND_METHOD,
        "assumed_geometric_monodromy": a.assume_monodromy,
        "sweep": entries,
        "skipped": skipped,
        "failures": failures,
    });
    let mut o = Outcome::new(TAG_TCHEBOTAREV, body, table);
    o.falsified = !partition_ok;
    o.estimate_failed = failures > 0;
    Ok(o)
}

fn cmd_chowla(a: &ChowlaArgs) -> Result<Outcome> {
    if a.n < 2 {
        bail!("n must be at least 2");
    }
    let primes: Vec<u64> = primes_in(a.pmin, a.pmax).collect();
    let rows = chowla_sweep(a.n, &primes, a.threads)?;
    let mut table = Table::new(&["p", "count", "p_over_n", "main_term", "error_bound", "pass", "hypothesis_fails"]);
    let mut failures = 0usize;
    for v in &rows {
        if !v.count.hypothesis_fails && !v.pass {
            failures += 1;
        }
        table.push(vec![
            v.count.p.to_string(),
            v.count.count.to_string(),
            format!("{:.6}", v.count.expected),
            format!("{:.6}", v.main_term),
            format!("{:.6}", v.error_bound),
            v.pass.to_string(),
            v.count.hypothesis_fails.to_string(),
        ]);
    }
    let body = json!({
        "n": a.n,
        "pmin": a.pmin,
        "pmax": a.pmax,
        "poly": fibra_core::trinomial(a.n).to_string(),
        "rows": rows,
        "failures": failures,
    });
    let mut o = Outcome::new(TAG_TRINOMIAL, body, table);
    o.estimate_failed = failures > 0;
    Ok(o)
}

fn images(h: &GroupHom) -> Vec<String> {
    h.generator_images().iter().map(ToString::to_string).collect()
}

fn cmd_twist(a: &TwistArgs) -> Result<Outcome> {
    let pf: files::ProblemFile = files::read_toml(&a.problem)?;
    let prob = pf.build()?;
    let mut body = serde_json::Map::new();
    body.insert("degree".into(), json!(prob.degree()));
    body.insert(
        "orders".into(),
        json!({ "g": prob.g().order(), "gbar": prob.gbar().order(), "h": prob.h().order() }),
    );
    body.insert("const_comp".into(), serde_json::to_value(prob.const_comp())?);
    let mut table = Table::new(&["gamma", "representative", "members", "ii2_witness", "fixed_points", "centralizer_order"]);
    if !prob.const_comp().holds {
        let mut o = Outcome::new(TAG_TWIST, body, table);
        o.inconclusive = true;
        return Ok(o);
    }
    let isoms = enumerate_isoms(&prob)?;
    body.insert("isoms".into(), json!(isoms.iter().map(images).collect::<Vec<_>>()));
    let count = count_ii2(&prob)?;

    let datum = match &a.datum {
        Some(path) => {
            let df: files::DatumFile = files::read_toml(path)?;
            Some(df.build(&prob)?)
        }
        None => None,
    };
    let mut falsified = false;
    let mut classes = Vec::new();
    let mut nonempty = Vec::new();
    for (cl, w) in count.classes.iter().zip(&count.witnesses) {
        let cen = twisted_centralizer_order(&prob, &cl.chi)?;
        let fixed = match &datum {
            Some(d) => match twisted_fixed_points(&prob, &cl.chi, d) {
                Ok(fp) => Some(fp),
                Err(TwistError::ModelInvariantViolated(m)) => bail!("datum rejected: {m}"),
                Err(e) => return Err(e.into()),
            },
            None => None,
        };
        if let Some(fp) = &fixed {
            if !fp.is_empty() {
                nonempty.push(cl.gamma);
                falsified |= fp.len() != cen;
            }
        }
        table.push(vec![
            cl.gamma.to_string(),
            images(&cl.chi).join(" "),
            cl.size().to_string(),
            w.as_ref().map_or("none".into(), ToString::to_string),
            fixed.as_ref().map_or(String::new(), |f| f.len().to_string()),
            cen.to_string(),
        ]);
        classes.push(json!({
            "gamma": cl.gamma,
            "representative": images(&cl.chi),
            "members": cl.members.iter().map(images).collect::<Vec<_>>(),
            "ii2_witness": w.as_ref().map(ToString::to_string),
            "centralizer_order": cen,
            "fixed_points": fixed.as_ref().map(|f| f.iter().map(ToString::to_string).collect::<Vec<_>>()),
        }));
    }
    falsified |= nonempty.len() > 1;
    body.insert("classes".into(), json!(classes));
    body.insert("ii2_count".into(), json!(count.count));
    body.insert("unique_gamma".into(), json!(count.unique_gamma));
    if datum.is_some() {
        body.insert(
            "datum".into(),
            json!({ "nonempty_gammas": nonempty, "unique": nonempty.len() <= 1 }),
        );
    }
    if prob.h().cyclic_generator().is_some() {
        let cyc = match cyclic_situation_c(&prob) {
            Ok(c) => json!({
                "generator": c.generator.to_string(),
                "generator_type": cycle_type(&c.generator).to_string(),
                "b": c.b,
                "a": c.a,
                "gamma": c.gamma,
                "witness": c.witness.to_string(),
            }),
            Err(TwistError::HypothesisFails(m)) => json!({ "hypothesis_fails": m }),
            Err(e) => {
                falsified = true;
                json!({ "error": e.to_string() })
            }
        };
        body.insert("cyclic".into(), cyc);
    }
    let mut o = Outcome::new(TAG_TWIST, body, table);
    o.falsified = falsified;
    Ok(o)
}

fn cmd_local(a: &LocalArgs) -> Result<Outcome> {
    let cover = Cover::new(a.poly.poly.clone())?;
    let mut table = Table::new(&["p", "type", "residue", "above_bound", "m0"]);
    let m0 = cover.bound_m0();
    let mut body = json!({
        "poly": a.poly.poly.to_string(),
        "n": cover.degree(),
        "r": cover.branch_bound(),
        "m0": m0.to_string(),
        "prime": a.prime,
        "type": a.target,
    });
    let (mut falsified, mut inconclusive) = (false, false);
    match find_residue(&cover, a.prime, &a.target) {
        Ok(plan) => {
            table.push(vec![
                plan.p.to_string(),
                plan.target.to_string(),
                plan.b.to_string(),
                plan.above_bound.to_string(),
                m0.to_string(),
            ]);
            body["plan"] = serde_json::to_value(&plan)?;
        }
        Err(e @ LocalError::NoResidue { theory_violated, .. }) => {
            falsified = theory_violated;
            inconclusive = !theory_violated;
            table.push(vec![
                a.prime.to_string(),
                a.target.to_string(),
                "none".into(),
                theory_violated.to_string(),
                m0.to_string(),
            ]);
            body["no_residue"] = json!({
                "theory_violated": theory_violated,
                "message": e.to_string(),
            });
        }
        Err(e) => return Err(e.into()),
    }
    let mut o = Outcome::new(TAG_LOCAL, body, table);
    o.falsified = falsified;
    o.inconclusive = inconclusive;
    Ok(o)
}

fn cmd_progression(a: &ProgressionArgs) -> Result<Outcome> {
    let pf: files::PlanFile = files::read_toml(&a.plan)?;
    let cover = Cover::new(a.poly.poly.clone())?;
    let header = json!({
        "poly": a.poly.poly.to_string(),
        "n": cover.degree(),
        "r": cover.branch_bound(),
        "m0": cover.bound_m0().to_string(),
    });
    let no_residue = |e: LocalError| -> Result<Outcome> {
        match e {
            LocalError::NoResidue { theory_violated, .. } => {
                let mut body = header.clone();
                body["no_residue"] = json!({ "theory_violated": theory_violated, "message": e.to_string() });
                let mut o = Outcome::new(TAG_PROGRESSION, body, Table::new(&["m", "t0"]));
                o.falsified = theory_violated;
                o.inconclusive = !theory_violated;
                Ok(o)
            }
            other => Err(other.into()),
        }
    };
    let mut plans = Vec::new();
    for entry in &pf.plan {
        let target = files::parse_divisor(&entry.target)?;
        let plan = match entry.residue {
            Some(b) => plan_at(&cover, entry.prime, b, &target),
            None => find_residue(&cover, entry.prime, &target),
        };
        match plan {
            Ok(p) => plans.push(p),
            Err(e) => return no_residue(e),
        }
    }
    let betas = match &pf.beta {
        None => Vec::new(),
        Some(spec) => {
            let types = match (&spec.classes, &spec.gbar) {
                (Some(cs), None) => cs.iter().map(|c| files::parse_divisor(c)).collect::<Result<Vec<_>>>()?,
                (None, Some(gens)) => {
                    let g = files::parse_group(gens, cover.degree()).context("beta.gbar")?;
                    nontrivial_class_types(&g)
                }
                _ => bail!("[beta] needs exactly one of `classes` or `gbar`"),
            };
            match beta_plans(&cover, &types, spec.floor.unwrap_or(0)) {
                Ok(b) => b,
                Err(e) => return no_residue(e),
            }
        }
    };
    let prog = build_progression(&plans, &betas)?;
    let cap = a.cert_cap.or(pf.cert_cap).unwrap_or(DEFAULT_CERT_CAP);
    let ver = verify_progression(&cover, &prog, a.samples, cap)?;
    let mut table = Table::new(&["m", "t0", "unramified", "local_divisors", "local_ok", "certificate"]);
    for (m, s) in ver.samples.iter().enumerate() {
        table.push(vec![
            m.to_string(),
            s.t0.to_string(),
            s.unramified.to_string(),
            s.locals
                .iter()
                .map(|l| format!("{}:{}", l.p, l.observed.as_ref().map_or("ramified".into(), ToString::to_string)))
                .collect::<Vec<_>>()
                .join(","),
            s.locals.iter().all(|l| l.ok).to_string(),
            s.certificate.map_or("inconclusive".into(), |p| p.to_string()),
        ]);
    }
    let mut body = header;
    body["cert_cap"] = json!(cap);
    body["progression"] = serde_json::to_value(&prog)?;
    body["verification"] = serde_json::to_value(&ver)?;
    let mut o = Outcome::new(TAG_PROGRESSION, body, table);
    o.falsified = ver.hard_failures > 0;
    o.inconclusive = ver.inconclusive > 0;
    Ok(o)
}

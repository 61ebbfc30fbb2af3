//! The statement registry and the runner that puts the character
//! prediction next to an independent linear-algebra witness.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use minorel_core::bott::{
    filtration_layer, lemma_4_3_character, subspace_generator_character, tor_geometric, verify_lemma_4_4,
};
use minorel_core::equivariant::{character_a, predicted_character, PredictParams};
use minorel_core::koszul::koszul_h1;
use minorel_core::linalg::{RankCertificate, RankConfig, RankMethod};
use minorel_core::partition::binomial;
use minorel_core::rees::{fiber_type_check, ReesMethod};
use minorel_core::relations::relation_dims;
use minorel_core::subspace::subspace_variety_gens;
use minorel_core::symfunc::DEFAULT_DEGREE_CAP;
use minorel_core::veronese::veronese_presentation_dims;
use minorel_core::{BiRep, Error, TheoremId, Variant};
use serde::Serialize;
use serde_json::{json, Value};

use crate::config::Config;
use crate::report::{Check, Report, Task, Timings, Verdict};
use crate::VerifierError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Statement {
    Theorem(TheoremId),
    Lem44,
    Thm41,
    Thm51,
    Que71,
}

impl Statement {
    pub fn all() -> Vec<Statement> {
        let mut v: Vec<Statement> = TheoremId::ALL.iter().map(|&t| Statement::Theorem(t)).collect();
        v.extend([Statement::Lem44, Statement::Thm41, Statement::Thm51, Statement::Que71]);
        v
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Statement::Theorem(t) => t.as_str(),
            Statement::Lem44 => "lem-4.4",
            Statement::Thm41 => "thm-4.1",
            Statement::Thm51 => "thm-5.1",
            Statement::Que71 => "que-7.1",
        }
    }

    pub fn summary(self) -> &'static str {
        match self {
            Statement::Theorem(TheoremId::Thm11) => "minimal relations among 2x2 minors",
            Statement::Theorem(TheoremId::Thm12) => "minimal relations among 2x2 permanents",
            Statement::Theorem(TheoremId::Thm31) => "first Koszul homology on the minors",
            Statement::Theorem(TheoremId::Thm32) => "first Koszul homology on the permanents",
            Statement::Theorem(TheoremId::Lem43) => "layers of the Veronese filtration",
            Statement::Theorem(TheoremId::Sec6Tbar) => "relations functor on the permanents side",
            Statement::Theorem(TheoremId::Sec6U) => "generators of the subspace variety (character)",
            Statement::Theorem(TheoremId::EqTor1Nr) => "first relations of a filtration layer inside the bound",
            Statement::Lem44 => "vanishing cohomology of exterior powers of the syzygy bundle",
            Statement::Thm41 => "filtration quotient presentation is linear",
            Statement::Thm51 => "subspace variety equations sit in degree m",
            Statement::Que71 => "Rees ideal of the minors is of fiber type",
        }
    }

    fn natural_variant(self) -> Variant {
        match self {
            Statement::Theorem(t) => t.natural_variant(),
            _ => Variant::Minors,
        }
    }
}

impl fmt::Display for Statement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Statement {
    type Err = VerifierError;
    fn from_str(s: &str) -> Result<Self, VerifierError> {
        Statement::all()
            .into_iter()
            .find(|st| st.as_str() == s)
            .ok_or_else(|| VerifierError::Usage(format!("unknown statement id `{s}`")))
    }
}

/// Parameter ranges a statement accepts.
#[derive(Clone, Copy, Debug)]
pub struct Envelope {
    pub m: (usize, usize),
    pub n: (usize, usize),
    pub dmax: (usize, usize),
    pub r: (usize, usize),
    pub default_dmax: usize,
    pub default_r: usize,
    /// Cap on `m·n`, if any.
    pub area: Option<usize>,
    pub variant_selectable: bool,
}

impl Statement {
    pub fn envelope(self) -> Envelope {
        let base = Envelope {
            m: (2, 6),
            n: (2, 6),
            dmax: (2, 5),
            r: (0, 0),
            default_dmax: 4,
            default_r: 0,
            area: None,
            variant_selectable: false,
        };
        match self {
            Statement::Theorem(TheoremId::Thm11) => Envelope { variant_selectable: true, ..base },
            Statement::Theorem(TheoremId::Thm12) | Statement::Theorem(TheoremId::Sec6Tbar) => {
                Envelope { default_dmax: 3, variant_selectable: true, ..base }
            }
            Statement::Theorem(TheoremId::Thm31) | Statement::Theorem(TheoremId::Thm32) => {
                Envelope { m: (2, 4), n: (2, 4), dmax: (2, 8), default_dmax: 6, variant_selectable: true, ..base }
            }
            Statement::Theorem(TheoremId::Lem43) => {
                Envelope { m: (1, 6), n: (1, 6), dmax: (0, 6), r: (1, 4), default_r: 3, ..base }
            }
            Statement::Lem44 => Envelope { m: (1, 6), n: (1, 6), dmax: (1, 5), r: (1, 2), default_r: 2, ..base },
            Statement::Thm41 | Statement::Theorem(TheoremId::EqTor1Nr) => {
                Envelope { m: (2, 3), n: (2, 3), dmax: (1, 4), r: (1, 2), default_dmax: 3, default_r: 1, ..base }
            }
            Statement::Thm51 | Statement::Theorem(TheoremId::Sec6U) => {
                Envelope { m: (1, 2), n: (1, 4), dmax: (0, 0), default_dmax: 0, ..base }
            }
            Statement::Que71 => Envelope { m: (2, 5), n: (2, 5), dmax: (0, 0), default_dmax: 0, area: Some(15), ..base },
        }
    }
}

/// A task as requested on the command line; `None` means the default.
#[derive(Clone, Debug, Default)]
pub struct Request {
    pub statement: String,
    pub m: usize,
    pub n: usize,
    pub dmax: Option<usize>,
    pub r: Option<usize>,
    pub variant: Option<Variant>,
    pub rank: Option<RankMethod>,
    pub seed: Option<u64>,
}

impl Request {
    pub fn new(statement: &str, m: usize, n: usize) -> Self {
        Request { statement: statement.to_string(), m, n, ..Default::default() }
    }

    pub fn dmax(mut self, d: usize) -> Self {
        self.dmax = Some(d);
        self
    }

    pub fn r(mut self, r: usize) -> Self {
        self.r = Some(r);
        self
    }

    pub fn rank(mut self, rank: RankMethod) -> Self {
        self.rank = Some(rank);
        self
    }
}

fn within(what: &str, v: usize, (lo, hi): (usize, usize)) -> Result<(), VerifierError> {
    if v < lo || v > hi {
        Err(VerifierError::Usage(format!("{what} = {v} is outside the supported range {lo}..={hi}")))
    } else {
        Ok(())
    }
}

/// Fill in defaults and check the envelope.
pub fn resolve(req: &Request, cfg: &Config) -> Result<Task, VerifierError> {
    let st: Statement = req.statement.parse()?;
    let env = st.envelope();
    within("m", req.m, env.m)?;
    within("n", req.n, env.n)?;
    if let Some(a) = env.area {
        if req.m * req.n > a {
            return Err(VerifierError::Usage(format!("m·n = {} exceeds {a} for {st}", req.m * req.n)));
        }
    }
    let r = req.r.unwrap_or(env.default_r);
    within("r", r, env.r)?;
    let dmax = match st {
        Statement::Thm41 | Statement::Theorem(TheoremId::EqTor1Nr) => req.dmax.unwrap_or(r + 2),
        _ => req.dmax.unwrap_or(env.default_dmax),
    };
    within("dmax", dmax, env.dmax)?;
    let variant = match req.variant {
        Some(v) if env.variant_selectable => v,
        Some(v) if v != st.natural_variant() => {
            return Err(VerifierError::Usage(format!("{st} does not take --variant {v}")));
        }
        _ => st.natural_variant(),
    };
    Ok(Task {
        statement: st.as_str().to_string(),
        m: req.m,
        n: req.n,
        dmax,
        r,
        variant,
        rank: req.rank.unwrap_or(cfg.rank),
        seed: req.seed.unwrap_or(cfg.seed),
    })
}

const STANDARD_GRADING: &str = "standard: W (or its permanent analogue) in degree 1 of R, degree d of R lands in S_{2d}";
const REES_GRADING: &str = "bidegree (d, e): d in x, e = 2·(degree in T); R regraded so its generators have degree 2";

#[derive(Default)]
struct Outcome {
    grading: &'static str,
    predicted: BTreeMap<String, Value>,
    witnessed: BTreeMap<String, Value>,
    checks: Vec<Check>,
    certificates: Vec<RankCertificate>,
    predict: Duration,
    witness: Duration,
}

fn val<T: Serialize>(v: T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

impl Outcome {
    fn predict<T>(&mut self, f: impl FnOnce() -> minorel_core::Result<T>) -> minorel_core::Result<T> {
        let t = Instant::now();
        let r = f();
        self.predict += t.elapsed();
        r
    }

    fn witness<T>(&mut self, f: impl FnOnce() -> minorel_core::Result<T>) -> minorel_core::Result<T> {
        let t = Instant::now();
        let r = f();
        self.witness += t.elapsed();
        r
    }

    fn check(&mut self, name: impl Into<String>, relation: &str, predicted: Value, witnessed: Value, pass: bool) {
        self.checks.push(Check { name: name.into(), relation: relation.to_string(), predicted, witnessed, pass });
    }

    fn equal<T: Serialize + PartialEq>(&mut self, name: impl Into<String>, predicted: T, witnessed: T) {
        let pass = predicted == witnessed;
        self.check(name, "equal", val(&predicted), val(&witnessed), pass);
    }

    fn equal_rep(&mut self, name: impl Into<String>, predicted: &BiRep, witnessed: &BiRep) {
        self.check(name, "equal", val(predicted.to_string()), val(witnessed.to_string()), predicted == witnessed);
    }
}

/// Run a resolved task. Only invalid tasks produce an error; failures of
/// the witness show up in the verdict.
pub fn run(task: &Task, cfg: &Config) -> Report {
    let rc = cfg.rank_config(task.rank, task.seed);
    let st: Statement = task.statement.parse().expect("resolved tasks carry valid ids");
    let mut out = Outcome { grading: STANDARD_GRADING, ..Default::default() };
    let result = match st {
        Statement::Theorem(TheoremId::Thm11) | Statement::Theorem(TheoremId::Thm12) | Statement::Theorem(TheoremId::Sec6Tbar) => {
            run_relations(st, task, &rc, &mut out)
        }
        Statement::Theorem(TheoremId::Thm31) | Statement::Theorem(TheoremId::Thm32) => run_koszul(st, task, &rc, &mut out),
        Statement::Theorem(TheoremId::Lem43) => run_lemma_4_3(task, &mut out),
        Statement::Lem44 => run_lemma_4_4(task, &mut out),
        Statement::Thm41 | Statement::Theorem(TheoremId::EqTor1Nr) => run_veronese(st, task, &rc, &mut out),
        Statement::Thm51 | Statement::Theorem(TheoremId::Sec6U) => run_subspace(st, task, &rc, &mut out),
        Statement::Que71 => run_rees(task, &rc, &mut out),
    };
    let (verdict, error) = match result {
        Ok(()) if !out.checks.is_empty() && out.checks.iter().all(|c| c.pass) => (Verdict::Pass, None),
        Ok(()) => (Verdict::Fail, None),
        Err(e @ Error::Capacity { .. }) => (Verdict::SkippedCapacity, Some(e.to_string())),
        Err(e) => (Verdict::Fail, Some(e.to_string())),
    };
    let timings = if cfg.timings {
        Timings { predict_ms: out.predict.as_millis() as u64, witness_ms: out.witness.as_millis() as u64 }
    } else {
        Timings::default()
    };
    Report {
        task: task.clone(),
        grading: out.grading.to_string(),
        predicted: out.predicted,
        witnessed: out.witnessed,
        checks: out.checks,
        certificates: out.certificates,
        verdict,
        timings,
        error,
    }
}

fn run_relations(st: Statement, task: &Task, rc: &RankConfig, out: &mut Outcome) -> minorel_core::Result<()> {
    let Statement::Theorem(id) = st else { unreachable!() };
    let (m, n) = (task.m, task.n);
    let params = PredictParams::variant(task.variant);
    let predicted = out.predict(|| {
        (2..=task.dmax)
            .map(|d| Ok((d, predicted_character(id, d, &params)?)))
            .collect::<minorel_core::Result<BTreeMap<_, _>>>()
    })?;
    let algebra: BTreeMap<usize, u64> = out.predict(|| Ok((2..=task.dmax).map(|d| (d, character_a(d, task.variant).dim_at(m, n))).collect()))?;
    let table = out.witness(|| relation_dims(m, n, task.variant, task.dmax, rc))?;
    let gens = match task.variant {
        Variant::Minors => binomial(m as u64, 2) * binomial(n as u64, 2),
        Variant::Permanents => binomial(m as u64 + 1, 2) * binomial(n as u64 + 1, 2),
    };
    for d in 2..=task.dmax {
        let p = &predicted[&d].truncate(m, n);
        let w = &table.degrees[&d];
        out.predicted.insert(
            format!("degree {d}"),
            json!({ "statement": predicted[&d].to_string(), "character": p.to_string(), "dim": p.dim_at(m, n) }),
        );
        out.witnessed.insert(
            format!("degree {d}"),
            json!({ "character": w.character.to_string(), "minimal": w.minimal, "kernel": w.kernel }),
        );
        out.equal(format!("degree {d} minimal relations"), p.dim_at(m, n), w.minimal);
        out.equal_rep(format!("degree {d} character"), p, &w.character);
        let sym = binomial(gens + d as u64 - 1, d as u64);
        out.equal(format!("degree {d} dim of the algebra"), algebra[&d], sym - w.kernel);
    }
    out.certificates.push(table.certificate);
    Ok(())
}

fn run_koszul(st: Statement, task: &Task, rc: &RankConfig, out: &mut Outcome) -> minorel_core::Result<()> {
    let Statement::Theorem(id) = st else { unreachable!() };
    let (m, n) = (task.m, task.n);
    let params = PredictParams::variant(task.variant);
    let degrees: Vec<usize> = (2..=task.dmax).collect();
    let predicted = out.predict(|| {
        degrees.iter().map(|&d| Ok((d, predicted_character(id, d, &params)?.truncate(m, n)))).collect::<minorel_core::Result<BTreeMap<_, _>>>()
    })?;
    let table = out.witness(|| koszul_h1(m, n, task.variant, &degrees, rc))?;
    for &d in &degrees {
        let p = &predicted[&d];
        let w = &table.degrees[&d];
        out.predicted.insert(format!("K_{d}"), json!({ "character": p.to_string(), "dim": p.dim_at(m, n) }));
        out.witnessed.insert(format!("K_{d}"), json!({ "character": w.character.to_string(), "dim": w.dim }));
        out.equal(format!("K_{d} dimension"), p.dim_at(m, n), w.dim);
        out.equal_rep(format!("K_{d} character"), p, &w.character);
    }
    out.certificates.push(table.certificate);
    Ok(())
}

fn run_lemma_4_3(task: &Task, out: &mut Outcome) -> minorel_core::Result<()> {
    let mut layers = 0u64;
    let mut mismatches: Vec<String> = Vec::new();
    for m in 1..=task.m {
        for n in 1..=task.n {
            for r in 1..=task.r {
                for d in 0..=task.dmax {
                    let p = out.predict(|| lemma_4_3_character(r, d, m, n))?;
                    let w = out.witness(|| Ok(filtration_layer(r, d, m, n)))?;
                    let stored = out.predict(|| {
                        predicted_character(TheoremId::Lem43, r + d, &PredictParams { r, ..Default::default() })
                    })?;
                    layers += 1;
                    if p != w || stored.truncate(m, n) != w {
                        mismatches.push(format!("(r,d,m,n)=({r},{d},{m},{n}): {p} vs {w}"));
                    }
                }
            }
        }
    }
    out.predicted.insert("layers".into(), val(layers));
    out.witnessed.insert("mismatches".into(), val(&mismatches));
    out.equal("layers matching the enumeration", layers, layers - mismatches.len() as u64);
    Ok(())
}

fn run_lemma_4_4(task: &Task, out: &mut Outcome) -> minorel_core::Result<()> {
    let mut cases = 0u64;
    let mut nonzero: Vec<String> = Vec::new();
    for m in 1..=task.m {
        for n in 1..=task.n {
            for j in 1..=task.dmax {
                for r in 1..=task.r {
                    for u in 0..=j + 2 {
                        for v in 0..=j + 2 - u {
                            let ok = out.witness(|| verify_lemma_4_4(u, v, j, r, m, n))?;
                            cases += 1;
                            if !ok {
                                nonzero.push(format!("(u,v,j,r,m,n)=({u},{v},{j},{r},{m},{n})"));
                            }
                        }
                    }
                }
            }
        }
    }
    out.predicted.insert("nonvanishing cases".into(), val(0));
    out.witnessed.insert("cases".into(), val(cases));
    out.witnessed.insert("nonvanishing".into(), val(&nonzero));
    out.equal("nonvanishing cohomology groups", 0u64, nonzero.len() as u64);
    Ok(())
}

fn run_veronese(st: Statement, task: &Task, rc: &RankConfig, out: &mut Outcome) -> minorel_core::Result<()> {
    let (m, n, r) = (task.m, task.n, task.r);
    let bound = out.predict(|| predicted_character(TheoremId::EqTor1Nr, r, &PredictParams::default()))?.truncate(m, n);
    let geometric = out.predict(|| tor_geometric(1, r, m, n))?;
    let table = out.witness(|| veronese_presentation_dims(m, n, task.variant, r, task.dmax, rc))?;
    out.witnessed.insert(
        "generators".into(),
        val(table.degrees.iter().map(|(d, p)| (d.to_string(), p.generators)).collect::<BTreeMap<_, _>>()),
    );
    out.witnessed.insert(
        "relations".into(),
        val(table.degrees.iter().map(|(d, p)| (d.to_string(), p.relations)).collect::<BTreeMap<_, _>>()),
    );
    let rel_char = table.relation_character();
    out.witnessed.insert("relation character".into(), val(rel_char.to_string()));
    match st {
        Statement::Thm41 => {
            out.predicted.insert("generator degrees".into(), val([r]));
            out.predicted.insert("relation degrees".into(), val([r + 1]));
            out.equal("generator degrees", vec![r], table.generator_degrees());
            out.equal("relation degrees", vec![r + 1], table.relation_degrees());
        }
        _ => {
            let geo = geometric.get(&(r + 1)).cloned().unwrap_or_default().truncate(m, n);
            out.predicted.insert("bound".into(), val(bound.to_string()));
            out.predicted.insert("geometric bound".into(), val(geo.to_string()));
            out.check("Tor_1 inside the stated bound", "contained-in", val(bound.to_string()), val(rel_char.to_string()), rel_char.is_subrep_of(&bound));
            out.check(
                "Tor_1 inside the geometric bound",
                "contained-in",
                val(geo.to_string()),
                val(rel_char.to_string()),
                rel_char.is_subrep_of(&geo),
            );
            out.equal("relation degrees", vec![r + 1], table.relation_degrees());
        }
    }
    out.certificates.push(table.certificate);
    Ok(())
}

fn run_subspace(st: Statement, task: &Task, rc: &RankConfig, out: &mut Outcome) -> minorel_core::Result<()> {
    let (m, n) = (task.m, task.n);
    let predicted = out.predict(|| predicted_character(TheoremId::Sec6U, m, &PredictParams::default()))?.truncate(m, n);
    let (gdeg, geometric) = out.predict(|| subspace_generator_character(m, DEFAULT_DEGREE_CAP))?;
    let report = out.witness(|| subspace_variety_gens(m, n, rc))?;
    let count = binomial((m * n * (n + 1) / 2) as u64, m as u64);
    out.predicted.insert("character".into(), val(predicted.to_string()));
    out.predicted.insert("degree".into(), val(m));
    out.predicted.insert("count".into(), val(count));
    out.witnessed.insert("generators".into(), val(report.generators.iter().map(|(d, c)| (d.to_string(), *c)).collect::<BTreeMap<_, _>>()));
    out.witnessed.insert("groebner degree bound".into(), val(report.degree_bound));
    out.equal("generator degrees", vec![m], report.generators.keys().copied().collect::<Vec<_>>());
    out.equal("generators in degree m", predicted.dim_at(m, n), report.generators.get(&m).copied().unwrap_or(0));
    if st == Statement::Thm51 {
        out.equal("count against the exterior power", count, report.total());
    } else {
        out.equal("geometric degree", m, gdeg);
        out.equal_rep("geometric character", &predicted, &geometric.truncate(m, n));
    }
    out.certificates.push(report.certificate);
    Ok(())
}

fn run_rees(task: &Task, rc: &RankConfig, out: &mut Outcome) -> minorel_core::Result<()> {
    out.grading = REES_GRADING;
    let (m, n) = (task.m, task.n);
    let params = PredictParams::default();
    let fiber_pred: BTreeMap<usize, u64> = out.predict(|| {
        (2..=3)
            .map(|d| Ok((2 * d, predicted_character(TheoremId::Thm11, d, &params)?.dim_at(m, n))))
            .filter(|r| r.as_ref().map(|(_, c)| *c > 0).unwrap_or(true))
            .collect()
    })?;
    let (fiber, report) = out.witness(|| fiber_type_check(m, n, ReesMethod::Groebner, rc))?;
    let minimal: BTreeMap<String, u64> = report.minimal.iter().map(|((d, e), c)| (format!("({d},{e})"), *c)).collect();
    out.predicted.insert("fiber type".into(), val(true));
    out.predicted.insert("fiber relations".into(), val(fiber_pred.iter().map(|(e, c)| (format!("(0,{e})"), *c)).collect::<BTreeMap<_, _>>()));
    out.witnessed.insert("minimal generators".into(), val(&minimal));
    out.witnessed.insert(
        "groebner bidegrees".into(),
        val(report.groebner_bidegrees.iter().map(|(d, e)| format!("({d},{e})")).collect::<Vec<_>>()),
    );
    out.check("fiber type", "holds", val(true), val(fiber), fiber);
    out.equal("fiber relations agree with the relations among minors", fiber_pred, report.fiber_relations());
    out.certificates.push(report.certificate);
    Ok(())
}

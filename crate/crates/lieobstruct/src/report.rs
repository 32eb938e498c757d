//! Machine- and human-readable result envelopes. Every command wraps its
//! payload in a ReportDocument stamped with the crate version, the
//! canonicalized command line, and a digest of the input algebra, so a
//! rerun on equal input is byte-identical in both formats.

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::complex::{tuples, Coefficients, CohomologyReport};
use crate::document::AlgebraDocument;

/// A coordinate vector together with its rendered basis expansion.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormPayload {
    pub degree: usize,
    pub coords: Vec<u64>,
    pub display: String,
}

impl FormPayload {
    pub fn new(n: usize, kind: Coefficients, degree: usize, coords: Vec<u64>) -> Self {
        let display = form_display(n, kind, degree, &coords);
        FormPayload {
            degree,
            coords,
            display,
        }
    }
}

/// Renders a form as a sum of wedge terms, "(e0^e1)⊗e2" style for
/// adjoint values, "(e0^e1)" for scalars. The zero form prints "0".
pub fn form_display(n: usize, kind: Coefficients, degree: usize, coords: &[u64]) -> String {
    let fiber = match kind {
        Coefficients::Adjoint => n,
        Coefficients::Trivial => 1,
    };
    let mut terms = Vec::new();
    for (row, tuple) in tuples(n, degree).iter().enumerate() {
        let wedge = tuple
            .iter()
            .map(|t| format!("e{t}"))
            .collect::<Vec<_>>()
            .join("^");
        for m in 0..fiber {
            let c = coords[row * fiber + m];
            if c == 0 {
                continue;
            }
            let scale = if c == 1 { String::new() } else { format!("{c}·") };
            let term = match kind {
                Coefficients::Adjoint => format!("{scale}({wedge})⊗e{m}"),
                Coefficients::Trivial => format!("{scale}({wedge})"),
            };
            terms.push(term);
        }
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionPayload {
    pub ring: String,
    pub target_ring: String,
    pub verdict: String,
    pub class_is_zero: bool,
    pub jacobi_failure: FormPayload,
    pub witness: Option<FormPayload>,
    pub lifted: Option<AlgebraDocument>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftMemberPayload {
    pub coordinates: Vec<u64>,
    pub algebra: AlgebraDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftsPayload {
    pub verdict: String,
    pub dim_h2: Option<usize>,
    pub member_count: Option<u64>,
    pub materialized: bool,
    pub members: Vec<LiftMemberPayload>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerStepPayload {
    pub from_level: u32,
    pub witness: FormPayload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerBlockPayload {
    pub at_level: u32,
    pub class: FormPayload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerPayload {
    pub target_level: u32,
    pub reached_level: u32,
    pub reached: bool,
    pub steps: Vec<TowerStepPayload>,
    pub obstruction: Option<TowerBlockPayload>,
    pub top: AlgebraDocument,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructurePayload {
    pub ring: String,
    pub rank: usize,
    pub center_dim: usize,
    pub perfect: bool,
    pub simple: bool,
    pub killing_rank: usize,
    pub killing_zero: bool,
    pub unimodular: bool,
    pub invariant_symmetric_3form_dim: usize,
    pub invariant_alternating_3form_dim: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckPayload {
    pub name: String,
    pub expected: String,
    pub computed: String,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyPayload {
    pub checks: Vec<CheckPayload>,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    Cohomology(CohomologyReport),
    Obstruction(ObstructionPayload),
    Lifts(LiftsPayload),
    Tower(TowerPayload),
    Structure(StructurePayload),
    VerifyPaper(VerifyPayload),
}

/// The envelope every command returns.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub version: String,
    pub command: String,
    pub input_digest: String,
    pub notices: Vec<String>,
    pub payload: Payload,
}

impl ReportDocument {
    pub fn new(command: String, input_digest: String, notices: Vec<String>, payload: Payload) -> Self {
        ReportDocument {
            version: env!("CARGO_PKG_VERSION").into(),
            command,
            input_digest,
            notices,
            payload,
        }
    }
}

/// sha256 hex of the canonical input rendering.
pub fn digest_text(text: &str) -> String {
    let mut hasher = Sha256::new();
    hasher.update(text.as_bytes());
    let out = hasher.finalize();
    let mut hex = String::with_capacity(64);
    for byte in out {
        hex.push_str(&format!("{byte:02x}"));
    }
    hex
}

/// Pretty JSON plus trailing newline; field order is declaration order,
/// so equal reports render to equal bytes.
pub fn render_json(report: &ReportDocument) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports are plain data");
    out.push('\n');
    out
}

/// Fixed-layout text rendering of the same envelope.
pub fn render_text(report: &ReportDocument) -> String {
    let mut out = String::new();
    out.push_str(&format!("lieobstruct {}\n", report.version));
    out.push_str(&format!("command: {}\n", report.command));
    out.push_str(&format!("input: sha256:{}\n", report.input_digest));
    for notice in &report.notices {
        out.push_str(&format!("notice: {notice}\n"));
    }
    out.push('\n');
    match &report.payload {
        Payload::Cohomology(c) => render_cohomology(&mut out, c),
        Payload::Obstruction(o) => render_obstruction(&mut out, o),
        Payload::Lifts(l) => render_lifts(&mut out, l),
        Payload::Tower(t) => render_tower(&mut out, t),
        Payload::Structure(s) => render_structure(&mut out, s),
        Payload::VerifyPaper(v) => render_verify(&mut out, v),
    }
    out
}

fn render_cohomology(out: &mut String, c: &CohomologyReport) {
    out.push_str(&format!(
        "cohomology over F_{}, rank {}, {} coefficients\n",
        c.p, c.rank, c.coefficients
    ));
    out.push_str("degree  space  cocycles  coboundaries  H\n");
    for d in &c.degrees {
        out.push_str(&format!(
            "{:<7} {:<6} {:<9} {:<13} {}\n",
            d.degree, d.dim_space, d.dim_cocycles, d.dim_coboundaries, d.dim_cohomology
        ));
    }
    let kind = c.coefficients;
    for d in &c.degrees {
        if d.representatives.is_empty() {
            continue;
        }
        out.push_str(&format!("representatives of H^{}:\n", d.degree));
        for r in &d.representatives {
            out.push_str(&format!(
                "  {}\n",
                form_display(c.rank, kind, d.degree, r)
            ));
        }
    }
}

fn render_obstruction(out: &mut String, o: &ObstructionPayload) {
    out.push_str(&format!(
        "lifting {} -> {}\n",
        o.ring, o.target_ring
    ));
    out.push_str(&format!("jacobi failure: {}\n", o.jacobi_failure.display));
    out.push_str(&format!(
        "obstruction class: {}\n",
        if o.class_is_zero { "zero" } else { "nonzero" }
    ));
    match &o.witness {
        Some(w) => out.push_str(&format!("witness 2-form: {}\n", w.display)),
        None => out.push_str("witness 2-form: none exists\n"),
    }
    out.push_str(&format!("verdict: {}\n", o.verdict));
    if let Some(doc) = &o.lifted {
        out.push_str("lifted algebra:\n");
        push_document(out, doc);
    }
}

fn render_lifts(out: &mut String, l: &LiftsPayload) {
    out.push_str(&format!("verdict: {}\n", l.verdict));
    if let Some(d) = l.dim_h2 {
        out.push_str(&format!("dim H^2: {d}\n"));
    }
    if let Some(count) = l.member_count {
        out.push_str(&format!("equivalence classes of lifts: {count}\n"));
    }
    if l.materialized {
        for m in &l.members {
            out.push_str(&format!("member {:?}:\n", m.coordinates));
            push_document(out, &m.algebra);
        }
    } else if l.member_count.is_some() {
        out.push_str("members not materialized (enumeration bound)\n");
    }
}

fn render_tower(out: &mut String, t: &TowerPayload) {
    out.push_str(&format!(
        "tower target level {}, reached level {}\n",
        t.target_level, t.reached_level
    ));
    for s in &t.steps {
        out.push_str(&format!(
            "level {} -> {}: witness {}\n",
            s.from_level,
            s.from_level + 1,
            s.witness.display
        ));
    }
    if let Some(block) = &t.obstruction {
        out.push_str(&format!(
            "blocked at level {} -> {}: class {}\n",
            block.at_level,
            block.at_level + 1,
            block.class.display
        ));
    }
    out.push_str(&format!(
        "verdict: {}\n",
        if t.reached { "reached" } else { "obstructed" }
    ));
    out.push_str("top algebra:\n");
    push_document(out, &t.top);
}

fn render_structure(out: &mut String, s: &StructurePayload) {
    out.push_str(&format!("structure of a rank-{} algebra over {}\n", s.rank, s.ring));
    out.push_str(&format!("center dimension: {}\n", s.center_dim));
    out.push_str(&format!("perfect: {}\n", s.perfect));
    out.push_str(&format!("simple: {}\n", s.simple));
    out.push_str(&format!(
        "killing form: rank {}{}\n",
        s.killing_rank,
        if s.killing_zero { " (identically zero)" } else { "" }
    ));
    out.push_str(&format!("unimodular: {}\n", s.unimodular));
    out.push_str(&format!(
        "invariant symmetric 3-forms: dim {}\n",
        s.invariant_symmetric_3form_dim
    ));
    out.push_str(&format!(
        "invariant alternating 3-forms: dim {}\n",
        s.invariant_alternating_3form_dim
    ));
}

fn render_verify(out: &mut String, v: &VerifyPayload) {
    let width = v
        .checks
        .iter()
        .map(|c| c.name.len())
        .max()
        .unwrap_or(0);
    for c in &v.checks {
        out.push_str(&format!(
            "{} {:<width$}  expected {} / computed {}\n",
            if c.pass { "pass" } else { "FAIL" },
            c.name,
            c.expected,
            c.computed,
        ));
    }
    out.push_str(&format!("{} passed, {} failed\n", v.passed, v.failed));
}

fn push_document(out: &mut String, doc: &AlgebraDocument) {
    for line in crate::document::render_document(doc).lines() {
        out.push_str("  ");
        out.push_str(line);
        out.push('\n');
    }
}

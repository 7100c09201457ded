use std::fmt::Write as _;
use std::time::Duration;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::Serialize;
use serde_json::{json, Map, Value};

use assocgr::LaurentPoly;

use crate::error::{CliError, EXIT_OK, EXIT_VERIFY_FAILED};
use crate::request::Kind;

/// The result that justifies a verdict. Each verdict carries exactly one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tag {
    /// `G(A)` is CM iff the Artinian reduction has the same h-vector.
    ValabregaValla,
    /// `e_1 ≤ e_0·r`.
    E1Bound,
    /// `a(G)` read from the h-polynomial when `G` is CM.
    AInvariant,
    /// `A` is regular iff `a(G) = −d`.
    RegularLocal,
    /// Borderline `a(G) = 1 − d`: minimal multiplicity.
    MinimalMultiplicity,
    /// The canonical-module h-vector criterion for `G(A)` Gorenstein.
    CanonicalModule,
    /// Type of a reduction-number-two ring from its h-vector.
    ReductionTwoType,
    /// In dimension two `a(G) < 0` iff `e_2 = 0` for integrally closed
    /// monomial ideals.
    HoaDim2,
    /// Ulrich modules over the hypersurface.
    BabyUlrich,
    /// `*Hom(G(M), G(A))` equals the graded dual filtration.
    DualFiltration,
    /// Dual filtration is an adic shift iff the h-vector is `ℓ(1 + … + z^{s−1})`.
    AdicShift,
    /// `h_{i(M)}(M) < μ(M)`.
    InitialSummand,
    /// `α(M) ≤ red(A)`.
    AlphaBound,
    /// `a(G(M)) ≥ red(A) − α(M)`.
    AInvariantBound,
    /// Graded duality over the Gorenstein ring `G(A)`.
    GorensteinDual,
    /// `ℓ(*Hom(G(M), G(A))) ≥ ℓ(M)` with equality for Gorenstein `A`.
    LengthInequality,
    /// Hilbert-series bookkeeping: lengths, multiplicities, stability.
    HilbertSeries,
}

impl Tag {
    pub fn as_str(self) -> &'static str {
        match self {
            Tag::ValabregaValla => "valabrega-valla",
            Tag::E1Bound => "e1-bound",
            Tag::AInvariant => "a-invariant",
            Tag::RegularLocal => "regular-local",
            Tag::MinimalMultiplicity => "minimal-multiplicity",
            Tag::CanonicalModule => "canonical-module",
            Tag::ReductionTwoType => "reduction-two-type",
            Tag::HoaDim2 => "hoa-dim2",
            Tag::BabyUlrich => "baby-ulrich",
            Tag::DualFiltration => "dual-filtration",
            Tag::AdicShift => "adic-shift",
            Tag::InitialSummand => "initial-summand",
            Tag::AlphaBound => "alpha-bound",
            Tag::AInvariantBound => "a-invariant-bound",
            Tag::GorensteinDual => "gorenstein-dual",
            Tag::LengthInequality => "length-inequality",
            Tag::HilbertSeries => "hilbert-series",
        }
    }

    /// Tag for a named corpus check.
    pub fn for_check(name: &str) -> Option<Tag> {
        Some(match name {
            "oracle_equivalence" | "hom_injectivity_bound" => Tag::DualFiltration,
            "length_inequality" | "length_equality" => Tag::LengthInequality,
            "dual_length" | "hom_ring_self" | "artinian_hom_self" => Tag::GorensteinDual,
            "alpha_is_initial_degree" | "alpha_bound" => Tag::AlphaBound,
            "a_invariant_bound" | "a_invariant_equality" => Tag::AInvariantBound,
            "baby_ulrich" => Tag::BabyUlrich,
            "adic_shift_shape" | "adic_shift_some_shape" => Tag::AdicShift,
            "initial_summand_bound" => Tag::InitialSummand,
            "min_mult_type_link" => Tag::MinimalMultiplicity,
            "e1_bound" => Tag::E1Bound,
            "valabrega_valla" => Tag::ValabregaValla,
            "symmetric_canonical" | "gorenstein_symmetric" => Tag::CanonicalModule,
            "reduction_is_degree" => Tag::AInvariant,
            "reduction_two_type" => Tag::ReductionTwoType,
            "series_at_one" | "multiplicity" | "artin_length" | "canonical_length" | "stable_modules"
            | "monotone_filtration" | "artinian_dims" => Tag::HilbertSeries,
            _ => return None,
        })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict {
    pub name: String,
    pub result: Value,
    pub text: String,
    pub tag: Tag,
}

#[derive(Clone, Debug, PartialEq)]
struct Invariant {
    key: String,
    json: Value,
    text: String,
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    kind: Kind,
    subject: String,
    request: Value,
    invariants: Vec<Invariant>,
    verdicts: Vec<Verdict>,
    failed: bool,
    pub elapsed: Duration,
}

pub(crate) fn big_json(b: &BigInt) -> Value {
    match b.to_i64() {
        Some(v) => json!(v),
        None => json!(b.to_string()),
    }
}

pub(crate) fn poly_json(p: &LaurentPoly) -> Value {
    let terms: Vec<Value> = p.terms().map(|(d, c)| json!([d, big_json(c)])).collect();
    Value::Array(terms)
}

impl AnalysisReport {
    pub(crate) fn new(kind: Kind, subject: String, request: Value) -> Self {
        Self {
            kind,
            subject,
            request,
            invariants: Vec::new(),
            verdicts: Vec::new(),
            failed: false,
            elapsed: Duration::ZERO,
        }
    }

    pub(crate) fn int(&mut self, key: &str, v: impl Into<BigInt>) {
        let v = v.into();
        self.push_invariant(key, big_json(&v), v.to_string());
    }

    pub(crate) fn poly(&mut self, key: &str, p: &LaurentPoly) {
        self.push_invariant(key, poly_json(p), p.to_string());
    }

    pub(crate) fn flag(&mut self, key: &str, b: bool) {
        self.push_invariant(key, json!(b), b.to_string());
    }

    pub(crate) fn push_invariant(&mut self, key: &str, json: Value, text: String) {
        self.invariants.push(Invariant { key: key.to_string(), json, text });
    }

    pub(crate) fn verdict(&mut self, name: &str, result: bool, tag: Tag) {
        self.verdict_value(name, json!(result), result.to_string(), tag);
    }

    pub(crate) fn verdict_value(&mut self, name: &str, result: Value, text: String, tag: Tag) {
        self.verdicts.push(Verdict { name: name.to_string(), result, text, tag });
    }

    pub(crate) fn mark_failed(&mut self) {
        self.failed = true;
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn verdicts(&self) -> &[Verdict] {
        &self.verdicts
    }

    pub fn find_verdict(&self, name: &str) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.name == name)
    }

    pub fn invariant(&self, key: &str) -> Option<&Value> {
        self.invariants.iter().find(|i| i.key == key).map(|i| &i.json)
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn exit_code(&self) -> i32 {
        if self.failed {
            EXIT_VERIFY_FAILED
        } else {
            EXIT_OK
        }
    }

    /// JSON form. Objects are backed by sorted maps, so keys come out sorted.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut invariants = Map::new();
        for inv in &self.invariants {
            invariants.insert(inv.key.clone(), inv.json.clone());
        }
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|v| json!({ "name": v.name, "result": v.result, "tag": v.tag.as_str() }))
            .collect();
        let mut out = json!({
            "engine": { "name": "assocgr", "version": env!("CARGO_PKG_VERSION") },
            "kind": self.kind.as_str(),
            "request": self.request,
            "invariants": invariants,
            "verdicts": verdicts,
            "status": if self.failed { "failed" } else { "ok" },
        });
        if timing {
            out["timing_ms"] = json!(self.elapsed.as_millis() as u64);
        }
        out
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "assocgr {} | {} {}", env!("CARGO_PKG_VERSION"), self.kind.as_str(), self.subject);
        let width = self.invariants.iter().map(|i| i.key.len()).max().unwrap_or(0);
        s.push_str("invariants:\n");
        for inv in &self.invariants {
            let _ = writeln!(s, "  {:width$}  {}", inv.key, inv.text);
        }
        s.push_str("verdicts:\n");
        for v in &self.verdicts {
            let _ = writeln!(s, "  [{}] {}: {}", v.tag.as_str(), v.name, v.text);
        }
        let _ = writeln!(s, "status: {}", if self.failed { "FAILED" } else { "ok" });
        let _ = writeln!(s, "time: {} ms", self.elapsed.as_millis());
        s
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    #[default]
    Json,
    Text,
}

fn error_json(e: &CliError) -> Value {
    json!({ "error": { "exit_code": e.exit_code(), "message": e.to_string() } })
}

/// Renders one report. JSON output is pretty-printed with a trailing newline.
pub fn emit(report: &AnalysisReport, format: Format, timing: bool) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&report.to_json(timing)).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => report.to_text(),
    }
}

/// Renders a batch in input order; failed entries become error objects.
pub fn emit_batch(results: &[Result<AnalysisReport, CliError>], format: Format, timing: bool) -> String {
    match format {
        Format::Json => {
            let items: Vec<Value> = results
                .iter()
                .map(|r| match r {
                    Ok(rep) => rep.to_json(timing),
                    Err(e) => error_json(e),
                })
                .collect();
            let mut s = serde_json::to_string_pretty(&Value::Array(items)).expect("value serializes");
            s.push('\n');
            s
        }
        Format::Text => results
            .iter()
            .map(|r| match r {
                Ok(rep) => rep.to_text(),
                Err(e) => format!("error (exit {}): {e}\n", e.exit_code()),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    }
}

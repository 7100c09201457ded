//! Batch front end for `assocgr`: JSON requests in, deterministic reports out.

pub mod error;
pub mod report;
pub mod request;

use std::time::Instant;

use num_bigint::BigInt;
use serde_json::json;

use assocgr::verify::{hypersurface_corpus, random_semigroups, semigroup_corpus, CorpusReport};
use assocgr::gradedhom::{from_hypersurface, hom_dims, verify_app5};
use assocgr::{AInvariant, Execution, HypersurfaceModule, MonomialIdeal, NumericalSemigroup};

pub use error::CliError;
pub use report::{emit, emit_batch, AnalysisReport, Format, Tag, Verdict};
pub use request::{parse_batch, parse_request, AnalysisRequest, Kind, Options, Payload, VerifyParams};

fn a_invariant_value(a: AInvariant) -> serde_json::Value {
    serde_json::to_value(a).expect("plain enum")
}

/// Runs one validated request.
pub fn run(req: &AnalysisRequest, exec: Execution) -> Result<AnalysisReport, CliError> {
    let start = Instant::now();
    let mut report = match &req.payload {
        Payload::Semigroup(s) => semigroup_report(req, s)?,
        Payload::Monomial(i) => monomial_report(req, i, exec)?,
        Payload::Hypersurface(m) => hypersurface_report(req, m, exec)?,
        Payload::Verify(v) => verify_report(req, v, exec)?,
    };
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Runs every request, in parallel when `exec` allows; output keeps input
/// order. Entries that failed to parse are passed through unchanged.
pub fn run_batch(
    requests: Vec<Result<AnalysisRequest, CliError>>,
    exec: Execution,
) -> Vec<Result<AnalysisReport, CliError>> {
    let valid: Vec<&AnalysisRequest> = requests.iter().filter_map(|r| r.as_ref().ok()).collect();
    // one level of parallelism is enough once there are several requests
    let inner = if valid.len() > 1 { Execution::Sequential } else { exec };
    let mut reports = exec.map(&valid, |r| run(r, inner)).into_iter();
    requests
        .into_iter()
        .map(|r| match r {
            Ok(_) => reports.next().expect("one report per valid request"),
            Err(e) => Err(e),
        })
        .collect()
}

fn semigroup_report(req: &AnalysisRequest, s: &NumericalSemigroup) -> Result<AnalysisReport, CliError> {
    let w = req.options.window;
    let mut rep = AnalysisReport::new(Kind::Semigroup, s.to_string(), req.echo());
    let h_ring = s.h_ring(w)?;
    let h_artin = s.h_artin(w)?;
    let h_canonical = s.h_canonical_artin(w)?;
    let delta = s.delta_invariant();
    let r = s.reduction_number();
    let e0 = h_ring.multiplicity();
    let e1 = h_ring.hilbert_coefficient(1)?;
    let cm_type = s.cm_type();

    rep.int("multiplicity", s.multiplicity());
    rep.int("frobenius", s.frobenius());
    rep.int("conductor", s.conductor());
    rep.int("delta", delta as u64);
    rep.int("reduction_number", r as u64);
    rep.int("cm_type", cm_type as u64);
    rep.int("e0", e0.clone());
    rep.int("e1", e1.clone());
    rep.poly("h_ring", &h_ring);
    rep.poly("h_artin", &h_artin);
    rep.poly("h_canonical", &h_canonical);
    rep.flag("symmetric", s.is_symmetric());

    rep.verdict("assoc_graded_cm", delta == 0, Tag::ValabregaValla);
    rep.verdict("e1_bound", e1 <= &e0 * BigInt::from(r), Tag::E1Bound);
    let a = match s.classify_dim1(w) {
        Ok(c) => AInvariant::Exact(c.a_invariant),
        Err(assocgr::Error::Precondition(_)) => AInvariant::Unknown,
        Err(e) => return Err(e.into()),
    };
    rep.verdict_value("a_invariant", a_invariant_value(a), a.to_string(), Tag::AInvariant);
    rep.verdict("regular", s.is_natural_numbers(), Tag::RegularLocal);
    rep.verdict("minimal_multiplicity", r <= 1, Tag::MinimalMultiplicity);
    rep.verdict("canonical_criterion", s.canonical_criterion(w)?, Tag::CanonicalModule);
    if r == 2 {
        let predicted = &e0 - h_ring.coeff(1) - 1;
        rep.verdict(
            "reduction_two_type",
            s.canonical_criterion(w)? == (BigInt::from(cm_type) == predicted),
            Tag::ReductionTwoType,
        );
    }
    Ok(rep)
}

fn monomial_report(req: &AnalysisRequest, ideal: &MonomialIdeal, exec: Execution) -> Result<AnalysisReport, CliError> {
    let Options { window, max_n } = req.options;
    let mut rep = AnalysisReport::new(Kind::Monomial, ideal.to_string(), req.echo());
    let d = ideal.nvars();
    rep.int("nvars", d as u64);
    rep.int("num_generators", ideal.gens().len() as u64);
    if d == 2 {
        let c = ideal.classify_dim2(window, max_n, exec)?;
        rep.poly("h", &c.h);
        rep.int("e0", c.e0.clone());
        rep.int("e1", c.e1.clone());
        rep.int("e2", c.e2.clone());
        rep.verdict("parameter_ideal", c.parameter, Tag::AInvariant);
        let tag = if c.parameter { Tag::AInvariant } else { Tag::HoaDim2 };
        rep.verdict_value("a_invariant", a_invariant_value(c.a_invariant), c.a_invariant.to_string(), tag);
        rep.verdict("minimal_multiplicity", c.minimal_multiplicity, Tag::MinimalMultiplicity);
    } else {
        let h = ideal.h_polynomial(window, max_n, exec)?;
        rep.poly("h", &h);
        for i in 0..=d as u32 {
            rep.int(&format!("e{i}"), h.hilbert_coefficient(i)?);
        }
        let parameter = ideal.is_parameter_ideal();
        rep.verdict("parameter_ideal", parameter, Tag::AInvariant);
        let a = if parameter { AInvariant::Exact(-(d as i64)) } else { AInvariant::Unknown };
        rep.verdict_value("a_invariant", a_invariant_value(a), a.to_string(), Tag::AInvariant);
        rep.verdict(
            "minimal_multiplicity",
            h.max_degree().is_some_and(|k| k <= 1),
            Tag::MinimalMultiplicity,
        );
    }
    Ok(rep)
}

fn hypersurface_report(
    req: &AnalysisRequest,
    m: &HypersurfaceModule,
    exec: Execution,
) -> Result<AnalysisReport, CliError> {
    let mut rep = AnalysisReport::new(Kind::Hypersurface, m.to_string(), req.echo());
    let (ring, module) = from_hypersurface(m);
    let hom = hom_dims(&module, &ring, exec)?;
    let dual = m.dual_filtration_dims();
    let red = m.ring_reduction_number();

    rep.int("e", m.e());
    rep.int("mu", m.mu() as u64);
    rep.int("e0", m.e0());
    rep.int("i_invariant", m.i_invariant());
    rep.int("alpha", m.alpha());
    rep.int("ring_reduction_number", red);
    rep.int("a_invariant", m.a_invariant());
    rep.poly("hilbert_series", &m.hilbert_series());
    rep.poly("dual_filtration_dims", &dual);
    rep.poly("hom_dims", &hom);

    rep.verdict("ulrich", m.is_ulrich(), Tag::BabyUlrich);
    rep.verdict("baby_ulrich_consistent", m.baby_ulrich_check().consistent(), Tag::BabyUlrich);
    rep.verdict("hom_equals_dual_filtration", hom == dual, Tag::DualFiltration);
    rep.verdict("dual_is_adic_shift", m.dual_is_adic_shift(), Tag::AdicShift);
    rep.verdict("initial_summand_bound", m.lemma_halpha_check(), Tag::InitialSummand);
    rep.verdict("alpha_bound", m.alpha() <= red, Tag::AlphaBound);
    rep.verdict("a_invariant_formula", m.a_invariant() == red - m.alpha(), Tag::AInvariantBound);
    rep.verdict("dual_length", dual.eval_at_one() == BigInt::from(m.e0()), Tag::GorensteinDual);
    rep.verdict("length_inequality", verify_app5(&module, &ring, exec)?, Tag::LengthInequality);
    Ok(rep)
}

fn corpus_json(c: &CorpusReport) -> serde_json::Value {
    serde_json::to_value(c).expect("plain struct")
}

fn verify_report(req: &AnalysisRequest, v: &VerifyParams, exec: Execution) -> Result<AnalysisReport, CliError> {
    let subject = format!("e <= {}, mu <= {}, {} semigroups (seed {})", v.max_e, v.max_mu, v.semigroups, v.seed);
    let mut rep = AnalysisReport::new(Kind::Verify, subject, req.echo());
    let hyper = hypersurface_corpus(v.max_e, v.max_mu, exec)?;
    let corpus = random_semigroups(v.semigroups, v.max_generator, v.seed);
    let semi = semigroup_corpus(&corpus, req.options.window, exec)?;

    rep.int("seed", v.seed);
    rep.int("hypersurface_instances", hyper.instances as u64);
    rep.int("semigroup_instances", semi.instances as u64);
    for (label, c) in [("hypersurface", &hyper), ("semigroup", &semi)] {
        let text = format!("{} instances, {} failing", c.instances, c.failures.len());
        rep.push_invariant(&format!("{label}_corpus"), corpus_json(c), text);
    }

    for (label, c) in [("hypersurface", &hyper), ("semigroup", &semi)] {
        for (name, tally) in &c.checks {
            let tag = Tag::for_check(name).unwrap_or(Tag::HilbertSeries);
            rep.verdict_value(
                &format!("{label}.{name}"),
                json!(tally.failed == 0),
                format!("{} ({} passed, {} failed)", tally.failed == 0, tally.passed, tally.failed),
                tag,
            );
        }
    }
    if !(hyper.all_passed() && semi.all_passed()) {
        rep.mark_failed();
    }
    Ok(rep)
}

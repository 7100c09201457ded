//! Request documents: one JSON object naming exactly one analysis kind,
//! plus optional per-request options.
//!
//! ```json
//! {"semigroup": {"generators": [13, 18, 23, 28, 33]}}
//! {"monomial": {"nvars": 2, "gens": [[7, 0], [6, 1], [1, 6], [0, 7]]}, "options": {"window": 6}}
//! {"hypersurface": {"e": 4, "a": [1, 2]}}
//! {"verify": {"max_e": 5, "max_mu": 3}}
//! ```

use assocgr::verify::{DEFAULT_MAX_GENERATOR, DEFAULT_SEED, DEFAULT_SEMIGROUP_COUNT};
use assocgr::{HypersurfaceModule, MonomialIdeal, NumericalSemigroup, DEFAULT_MAX_N, DEFAULT_WINDOW};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::CliError;

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawRequest {
    #[serde(skip_serializing_if = "Option::is_none")]
    semigroup: Option<SemigroupPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    monomial: Option<MonomialPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    hypersurface: Option<HypersurfacePayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verify: Option<VerifyPayload>,
    #[serde(skip_serializing_if = "Option::is_none")]
    options: Option<RawOptions>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct SemigroupPayload {
    generators: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct MonomialPayload {
    nvars: usize,
    gens: Vec<Vec<u32>>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct HypersurfacePayload {
    e: i64,
    a: Vec<i64>,
}

#[derive(Clone, Debug, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct VerifyPayload {
    max_e: i64,
    max_mu: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    semigroups: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_generator: Option<i64>,
}

#[derive(Clone, Debug, Default, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    window: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    max_n: Option<usize>,
}

/// Effective engine options. Per-request `options` override these.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Options {
    pub window: usize,
    pub max_n: usize,
}

impl Default for Options {
    fn default() -> Self {
        Self { window: DEFAULT_WINDOW, max_n: DEFAULT_MAX_N }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyParams {
    pub max_e: i64,
    pub max_mu: usize,
    pub seed: u64,
    pub semigroups: usize,
    pub max_generator: i64,
}

impl VerifyParams {
    pub fn new(max_e: i64, max_mu: usize) -> Self {
        Self {
            max_e,
            max_mu,
            seed: DEFAULT_SEED,
            semigroups: DEFAULT_SEMIGROUP_COUNT,
            max_generator: DEFAULT_MAX_GENERATOR,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Kind {
    Semigroup,
    Monomial,
    Hypersurface,
    Verify,
}

impl Kind {
    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Semigroup => "semigroup",
            Kind::Monomial => "monomial",
            Kind::Hypersurface => "hypersurface",
            Kind::Verify => "verify",
        }
    }
}

/// Validated payload, already converted to engine types.
#[derive(Clone, Debug)]
pub enum Payload {
    Semigroup(NumericalSemigroup),
    Monomial(MonomialIdeal),
    Hypersurface(HypersurfaceModule),
    Verify(VerifyParams),
}

#[derive(Clone, Debug)]
pub struct AnalysisRequest {
    pub payload: Payload,
    pub options: Options,
}

impl AnalysisRequest {
    pub fn kind(&self) -> Kind {
        match self.payload {
            Payload::Semigroup(_) => Kind::Semigroup,
            Payload::Monomial(_) => Kind::Monomial,
            Payload::Hypersurface(_) => Kind::Hypersurface,
            Payload::Verify(_) => Kind::Verify,
        }
    }

    /// Normalized echo: minimal generators, sorted exponents, effective
    /// options and verify defaults filled in.
    pub fn echo(&self) -> Value {
        let body = match &self.payload {
            Payload::Semigroup(s) => serde_json::json!({ "generators": s.generators() }),
            Payload::Monomial(i) => serde_json::json!({ "nvars": i.nvars(), "gens": i.gens() }),
            Payload::Hypersurface(m) => serde_json::json!({ "e": m.e(), "a": m.a() }),
            Payload::Verify(v) => serde_json::to_value(v).expect("plain struct"),
        };
        serde_json::json!({
            self.kind().as_str(): body,
            "options": self.options,
        })
    }
}

impl From<Payload> for AnalysisRequest {
    fn from(payload: Payload) -> Self {
        Self { payload, options: Options::default() }
    }
}

fn invalid(path: &str, e: impl ToString) -> CliError {
    CliError::Invalid { path: path.to_string(), message: e.to_string() }
}

fn validate(raw: RawRequest, defaults: Options) -> Result<AnalysisRequest, CliError> {
    let present = [
        raw.semigroup.is_some(),
        raw.monomial.is_some(),
        raw.hypersurface.is_some(),
        raw.verify.is_some(),
    ]
    .iter()
    .filter(|&&b| b)
    .count();
    if present != 1 {
        return Err(invalid(
            ".",
            format!("expected exactly one of semigroup, monomial, hypersurface, verify; found {present}"),
        ));
    }
    let opts = raw.options.unwrap_or_default();
    let options = Options {
        window: opts.window.unwrap_or(defaults.window),
        max_n: opts.max_n.unwrap_or(defaults.max_n),
    };
    if options.window == 0 {
        return Err(invalid("options.window", "window must be at least 1"));
    }
    if options.max_n == 0 {
        return Err(invalid("options.max_n", "max_n must be at least 1"));
    }

    let payload = if let Some(s) = raw.semigroup {
        Payload::Semigroup(
            NumericalSemigroup::new(&s.generators).map_err(|e| invalid("semigroup.generators", e))?,
        )
    } else if let Some(m) = raw.monomial {
        Payload::Monomial(MonomialIdeal::new(m.nvars, m.gens).map_err(|e| invalid("monomial", e))?)
    } else if let Some(h) = raw.hypersurface {
        Payload::Hypersurface(HypersurfaceModule::new(h.e, h.a).map_err(|e| invalid("hypersurface", e))?)
    } else if let Some(v) = raw.verify {
        if v.max_e < 1 {
            return Err(invalid("verify.max_e", "max_e must be at least 1"));
        }
        let defaults = VerifyParams::new(v.max_e, v.max_mu);
        Payload::Verify(VerifyParams {
            seed: v.seed.unwrap_or(defaults.seed),
            semigroups: v.semigroups.unwrap_or(defaults.semigroups),
            max_generator: v.max_generator.unwrap_or(defaults.max_generator),
            ..defaults
        })
    } else {
        unreachable!("exactly one payload is present")
    };
    Ok(AnalysisRequest { payload, options })
}

fn parse_value<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, CliError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    let parsed: Result<T, _> = serde_path_to_error::deserialize(de);
    parsed.map_err(|e| {
        let path = e.path().to_string();
        let inner = e.into_inner();
        CliError::Parse {
            path,
            line: inner.line(),
            column: inner.column(),
            message: inner.to_string(),
        }
    })
}

/// Parses and validates one request object.
pub fn parse_request(text: &str, defaults: Options) -> Result<AnalysisRequest, CliError> {
    validate(parse_value(text)?, defaults)
}

/// Accepts either one request object or an array of them. Array entries
/// are validated independently so one bad entry does not sink the batch.
pub fn parse_batch(text: &str, defaults: Options) -> Result<Vec<Result<AnalysisRequest, CliError>>, CliError> {
    let value: Value = parse_value(text)?;
    match value {
        Value::Array(items) => Ok(items
            .into_iter()
            .enumerate()
            .map(|(k, item)| {
                let raw: RawRequest = serde_path_to_error::deserialize(item).map_err(|e| CliError::Parse {
                    path: format!("[{k}].{}", e.path()),
                    line: 0,
                    column: 0,
                    message: e.into_inner().to_string(),
                })?;
                validate(raw, defaults)
            })
            .collect()),
        _ => Ok(vec![parse_request(text, defaults)]),
    }
}

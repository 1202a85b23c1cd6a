//! Job documents: the JSON input format, validation, and twist
//! construction.

use serde::{Deserialize, Serialize};

use orebit_core::algebra::{DeltaMap, Domain, Quaternion, Scalar, SigmaMap, Twist};
use orebit_core::dynamics::{DEFAULT_MAX_COEFFS, DEFAULT_STABILITY_BOUND};

use crate::error::CliError;
use crate::parse::parse_scalar;

pub const DEFAULT_STEPS: u32 = 8;
pub const DEFAULT_TRIALS: u32 = 100;

#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct JobSpec {
    pub domain: DomainSpec,
    pub command: Command,
    #[serde(default)]
    pub poly: Option<Vec<String>>,
    #[serde(default)]
    pub poly2: Option<Vec<String>>,
    #[serde(default)]
    pub point: Option<String>,
    #[serde(default)]
    pub params: Params,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Eval,
    Compose,
    Power,
    Genpow,
    Orbit,
    CertifyPeriodic,
    Lawcheck,
}

impl Command {
    pub fn name(self) -> &'static str {
        match self {
            Command::Eval => "eval",
            Command::Compose => "compose",
            Command::Power => "power",
            Command::Genpow => "genpow",
            Command::Orbit => "orbit",
            Command::CertifyPeriodic => "certify-periodic",
            Command::Lawcheck => "lawcheck",
        }
    }
}

#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
pub struct DomainSpec {
    pub kind: DomainKind,
    #[serde(default)]
    pub sigma: SigmaSpec,
    #[serde(default)]
    pub delta: DeltaSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Deserialize, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum DomainKind {
    Rational,
    Ratfunc,
    Quaternion,
}

impl From<DomainKind> for Domain {
    fn from(kind: DomainKind) -> Domain {
        match kind {
            DomainKind::Rational => Domain::Rational,
            DomainKind::Ratfunc => Domain::RatFunc,
            DomainKind::Quaternion => Domain::Quaternion,
        }
    }
}

/// `"identity"`, `"shift"`, or `{"inner": "<quaternion literal>"}`.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum SigmaSpec {
    Named(String),
    Inner { inner: String },
}

impl Default for SigmaSpec {
    fn default() -> Self {
        SigmaSpec::Named("identity".into())
    }
}

/// `"zero"`, `"difference"`, `"derivative"`, or
/// `{"inner": "<quaternion literal>"}`.
#[derive(Debug, Clone, Deserialize, Serialize)]
#[serde(untagged)]
pub enum DeltaSpec {
    Named(String),
    Inner { inner: String },
}

impl Default for DeltaSpec {
    fn default() -> Self {
        DeltaSpec::Named("zero".into())
    }
}

#[derive(Debug, Clone, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Params {
    pub r: Option<u32>,
    pub steps: Option<u32>,
    pub stability_bound: Option<u32>,
    pub seed: Option<u64>,
    pub trials: Option<u32>,
    pub max_coeffs: Option<usize>,
    pub laws: Option<Vec<String>>,
}

/// Params with defaults applied; echoed verbatim into every report.
#[derive(Debug, Clone, Serialize)]
pub struct ResolvedParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub r: Option<u32>,
    pub steps: u32,
    pub stability_bound: u32,
    pub seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<u32>,
    pub max_coeffs: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub laws: Option<Vec<String>>,
}

fn parse_quaternion_literal(text: &str, role: &str) -> Result<Quaternion, CliError> {
    match parse_scalar(Domain::Quaternion, text) {
        Ok(Scalar::Quaternion(q)) => Ok(q),
        Ok(_) => unreachable!("quaternion parse yields a quaternion"),
        Err(e) => Err(CliError::input(format!("invalid {role} literal: {e}"))),
    }
}

impl DomainSpec {
    /// Builds and validates the twist this job runs under.
    pub fn build_twist(&self, seed: u64) -> Result<Twist, CliError> {
        let domain: Domain = self.kind.into();
        let sigma = match &self.sigma {
            SigmaSpec::Named(name) => match name.as_str() {
                "identity" => SigmaMap::Identity,
                "shift" => SigmaMap::Shift,
                other => {
                    return Err(CliError::input(format!(
                        "unknown sigma descriptor '{other}' (expected \"identity\", \"shift\", or {{\"inner\": ...}})"
                    )))
                }
            },
            SigmaSpec::Inner { inner } => {
                SigmaMap::Inner(parse_quaternion_literal(inner, "sigma unit")?)
            }
        };
        let delta = match &self.delta {
            DeltaSpec::Named(name) => match name.as_str() {
                "zero" => DeltaMap::Zero,
                "difference" => DeltaMap::Difference,
                "derivative" => DeltaMap::Derivative,
                other => {
                    return Err(CliError::input(format!(
                        "unknown delta descriptor '{other}' (expected \"zero\", \"difference\", \"derivative\", or {{\"inner\": ...}})"
                    )))
                }
            },
            DeltaSpec::Inner { inner } => {
                DeltaMap::Inner(parse_quaternion_literal(inner, "delta element")?)
            }
        };
        Twist::new(domain, sigma, delta, seed).map_err(CliError::from)
    }
}

/// A fully validated job, ready to dispatch.
pub struct PreparedJob {
    pub command: Command,
    pub domain_spec: DomainSpec,
    pub twist: Twist,
    pub poly: Option<orebit_core::skewpoly::SkewPoly>,
    pub poly2: Option<orebit_core::skewpoly::SkewPoly>,
    pub point: Option<Scalar>,
    pub params: ResolvedParams,
}

impl JobSpec {
    /// Applies CLI overrides, checks required fields, parses literals, and
    /// constructs the twist.
    pub fn prepare(
        self,
        seed_override: Option<u64>,
        max_coeffs_override: Option<usize>,
    ) -> Result<PreparedJob, CliError> {
        let seed = seed_override.or(self.params.seed).ok_or_else(|| {
            CliError::input(
                "missing seed: every job requires params.seed (or --seed) so that \
                 randomized validation and reports are reproducible",
            )
        })?;
        let params = ResolvedParams {
            r: self.params.r,
            steps: self.params.steps.unwrap_or(DEFAULT_STEPS),
            stability_bound: self
                .params
                .stability_bound
                .unwrap_or(DEFAULT_STABILITY_BOUND),
            seed,
            trials: self.params.trials,
            max_coeffs: max_coeffs_override
                .or(self.params.max_coeffs)
                .unwrap_or(DEFAULT_MAX_COEFFS),
            laws: self.params.laws.clone(),
        };

        let command = self.command;
        let needs_poly = matches!(
            command,
            Command::Eval
                | Command::Compose
                | Command::Power
                | Command::Orbit
                | Command::CertifyPeriodic
        );
        let needs_point = matches!(
            command,
            Command::Eval | Command::Genpow | Command::Orbit | Command::CertifyPeriodic
        );
        if needs_poly && self.poly.is_none() {
            return Err(CliError::input(format!(
                "command '{}' requires the poly field",
                command.name()
            )));
        }
        if command == Command::Compose && self.poly2.is_none() {
            return Err(CliError::input("command 'compose' requires the poly2 field"));
        }
        if needs_point && self.point.is_none() {
            return Err(CliError::input(format!(
                "command '{}' requires the point field",
                command.name()
            )));
        }
        if command == Command::CertifyPeriodic {
            match params.r {
                None => {
                    return Err(CliError::input(
                        "command 'certify-periodic' requires params.r",
                    ))
                }
                Some(0) => return Err(CliError::input("params.r must be positive")),
                Some(_) => {}
            }
        }

        let twist = self.domain_spec_twist(seed)?;
        let domain = twist.domain();
        let parse_poly = |literals: &[String]| -> Result<_, CliError> {
            let coeffs = crate::parse::parse_poly_literals(domain, literals)
                .map_err(|e| CliError::input(format!("invalid poly coefficient: {e}")))?;
            orebit_core::skewpoly::SkewPoly::new(twist.clone(), coeffs).map_err(CliError::from)
        };
        let poly = self.poly.as_deref().map(parse_poly).transpose()?;
        let poly2 = self.poly2.as_deref().map(parse_poly).transpose()?;
        let point = self
            .point
            .as_deref()
            .map(|text| {
                parse_scalar(domain, text)
                    .map_err(|e| CliError::input(format!("invalid point literal: {e}")))
            })
            .transpose()?;

        Ok(PreparedJob {
            command,
            domain_spec: self.domain,
            twist,
            poly,
            poly2,
            point,
            params,
        })
    }

    fn domain_spec_twist(&self, seed: u64) -> Result<Twist, CliError> {
        self.domain.build_twist(seed)
    }
}

//! Report structs. Field order is fixed by declaration, so identical jobs
//! serialize to byte-identical JSON.

use serde::Serialize;

use orebit_core::algebra::{CommutingProvenance, Twist};
use orebit_core::dynamics::{OrbitReport, PeriodicityCertificate};

use crate::job::{DomainSpec, ResolvedParams};

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub domain: DomainSpec,
    pub twist: TwistInfo,
    pub params: ResolvedParams,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly_degree: Option<DegreeEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly2: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub poly2_degree: Option<DegreeEcho>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub point: Option<String>,
    pub result: Payload,
}

/// Degree of a polynomial; `null` is the zero polynomial.
pub type DegreeEcho = Option<usize>;

#[derive(Debug, Serialize)]
pub struct TwistInfo {
    pub commuting: bool,
    pub commuting_provenance: CommutingProvenance,
}

impl From<&Twist> for TwistInfo {
    fn from(tw: &Twist) -> Self {
        TwistInfo {
            commuting: tw.commuting(),
            commuting_provenance: tw.commuting_provenance(),
        }
    }
}

#[derive(Debug, Serialize)]
#[serde(untagged)]
pub enum Payload {
    Scalar {
        value: String,
    },
    Poly {
        coefficients: Vec<String>,
        degree: DegreeEcho,
    },
    Orbit(OrbitReport),
    Certificate(PeriodicityCertificate),
    Laws(LawSuiteSummary),
}

#[derive(Debug, Serialize)]
pub struct LawSuiteSummary {
    pub trials: u32,
    pub laws: Vec<LawResult>,
    pub all_passed: bool,
}

#[derive(Debug, Serialize)]
pub struct LawResult {
    pub law: &'static str,
    pub trials: u32,
    pub passed: u32,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

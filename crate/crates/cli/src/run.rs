//! Job dispatch: one prepared job in, one report out.

use orebit_core::dynamics::{formal_orbit, formal_powers, verify_periodicity};

use crate::error::CliError;
use crate::job::{Command, PreparedJob, DEFAULT_TRIALS};
use crate::laws::run_lawcheck;
use crate::report::{Payload, Report, TwistInfo};

pub fn run_job(job: PreparedJob) -> Result<Report, CliError> {
    let PreparedJob {
        command,
        domain_spec,
        twist,
        poly,
        poly2,
        point,
        params,
    } = job;

    let result = match command {
        Command::Eval => {
            let f = poly.as_ref().expect("validated");
            let a = point.as_ref().expect("validated");
            let value = f.eval(a)?;
            Payload::Scalar {
                value: value.to_string(),
            }
        }
        Command::Compose => {
            let f = poly.as_ref().expect("validated");
            let g = poly2.as_ref().expect("validated");
            let composed = f.compose_capped(g, params.max_coeffs)?;
            Payload::Poly {
                coefficients: composed.coefficient_literals(),
                degree: composed.degree(),
            }
        }
        Command::Power => {
            let f = poly.as_ref().expect("validated");
            let powers = formal_powers(f, params.steps, params.max_coeffs)?;
            let p = powers.last().expect("nonempty");
            Payload::Poly {
                coefficients: p.coefficient_literals(),
                degree: p.degree(),
            }
        }
        Command::Genpow => {
            let a = point.as_ref().expect("validated");
            let value = orebit_core::algebra::genpow(&twist, a, params.steps)?;
            Payload::Scalar {
                value: value.to_string(),
            }
        }
        Command::Orbit => {
            let f = poly.as_ref().expect("validated");
            let a = point.as_ref().expect("validated");
            Payload::Orbit(formal_orbit(
                f,
                a,
                params.steps,
                params.stability_bound,
                params.max_coeffs,
            )?)
        }
        Command::CertifyPeriodic => {
            let f = poly.as_ref().expect("validated");
            let a = point.as_ref().expect("validated");
            Payload::Certificate(verify_periodicity(
                f,
                a,
                params.r.expect("validated"),
                params.steps,
                params.stability_bound,
                params.max_coeffs,
            )?)
        }
        Command::Lawcheck => {
            let trials = params.trials.unwrap_or(DEFAULT_TRIALS);
            Payload::Laws(run_lawcheck(
                &twist,
                params.seed,
                trials,
                params.laws.as_deref(),
            )?)
        }
    };

    Ok(Report {
        command: command.name(),
        domain: domain_spec,
        twist: TwistInfo::from(&twist),
        params,
        poly: poly.as_ref().map(|f| f.coefficient_literals()),
        poly_degree: poly.as_ref().map(|f| f.degree()),
        poly2: poly2.as_ref().map(|g| g.coefficient_literals()),
        poly2_degree: poly2.as_ref().map(|g| g.degree()),
        point: point.as_ref().map(ToString::to_string),
        result,
    })
}

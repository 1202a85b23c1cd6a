//! The seeded law suite behind the `lawcheck` command.

use orebit_core::algebra::{
    check_leibniz, check_power_commute, random_scalar, rng_from_seed, Twist,
};
use orebit_core::skewpoly::{check_extend_deriv, check_extend_endo, random_poly};

use crate::error::CliError;
use crate::report::{LawResult, LawSuiteSummary};

const LAW_NAMES: [&str; 5] = [
    "leibniz",
    "endomorphism",
    "extend-endo",
    "extend-deriv",
    "power-commute",
];

fn requires_commuting(law: &str) -> bool {
    matches!(law, "extend-endo" | "extend-deriv" | "power-commute")
}

/// Runs the selected laws (or the default suite for the twist) over
/// `trials` seeded draws each.
///
/// The default suite runs the unconditional laws plus, when the twist
/// commutes, the lifted-structure laws. Explicitly selecting a
/// commuting-gated law on a non-commuting twist is a hypothesis error.
pub fn run_lawcheck(
    tw: &Twist,
    seed: u64,
    trials: u32,
    selection: Option<&[String]>,
) -> Result<LawSuiteSummary, CliError> {
    let laws: Vec<&'static str> = match selection {
        Some(names) => {
            let mut out = Vec::with_capacity(names.len());
            for name in names {
                let canonical = LAW_NAMES
                    .iter()
                    .find(|&&l| l == name)
                    .ok_or_else(|| {
                        CliError::input(format!(
                            "unknown law '{name}' (expected one of {})",
                            LAW_NAMES.join(", ")
                        ))
                    })?;
                out.push(*canonical);
            }
            out
        }
        None => LAW_NAMES
            .iter()
            .copied()
            .filter(|law| tw.commuting() || !requires_commuting(law))
            .collect(),
    };

    let mut results = Vec::with_capacity(laws.len());
    for (idx, law) in laws.iter().enumerate() {
        results.push(run_law(tw, law, seed.wrapping_add(idx as u64), trials)?);
    }
    let all_passed = results.iter().all(|r| r.passed == r.trials);
    Ok(LawSuiteSummary {
        trials,
        laws: results,
        all_passed,
    })
}

fn run_law(tw: &Twist, law: &'static str, seed: u64, trials: u32) -> Result<LawResult, CliError> {
    let mut rng = rng_from_seed(seed);
    let mut passed = 0;
    let mut counterexample = None;
    for _ in 0..trials {
        let ok = match law {
            "leibniz" => {
                let a = random_scalar(&mut rng, tw.domain());
                let b = random_scalar(&mut rng, tw.domain());
                let ok = check_leibniz(tw, &a, &b)?;
                if !ok && counterexample.is_none() {
                    counterexample = Some(format!("a = {a}, b = {b}"));
                }
                ok
            }
            "endomorphism" => {
                let a = random_scalar(&mut rng, tw.domain());
                let b = random_scalar(&mut rng, tw.domain());
                let mult = tw.sigma(&(&a * &b))? == &tw.sigma(&a)? * &tw.sigma(&b)?;
                let add = tw.sigma(&(&a + &b))? == &tw.sigma(&a)? + &tw.sigma(&b)?;
                let ok = mult && add;
                if !ok && counterexample.is_none() {
                    counterexample = Some(format!("a = {a}, b = {b}"));
                }
                ok
            }
            "extend-endo" => {
                let f = random_poly(&mut rng, tw, 2);
                let g = random_poly(&mut rng, tw, 2);
                let ok = check_extend_endo(tw, &f, &g)?;
                if !ok && counterexample.is_none() {
                    counterexample = Some(format!(
                        "f = {:?}, g = {:?}",
                        f.coefficient_literals(),
                        g.coefficient_literals()
                    ));
                }
                ok
            }
            "extend-deriv" => {
                let f = random_poly(&mut rng, tw, 2);
                let g = random_poly(&mut rng, tw, 2);
                let ok = check_extend_deriv(tw, &f, &g)?;
                if !ok && counterexample.is_none() {
                    counterexample = Some(format!(
                        "f = {:?}, g = {:?}",
                        f.coefficient_literals(),
                        g.coefficient_literals()
                    ));
                }
                ok
            }
            "power-commute" => {
                let a = random_scalar(&mut rng, tw.domain());
                let ok = check_power_commute(tw, &a, 8)?;
                if !ok && counterexample.is_none() {
                    counterexample = Some(format!("a = {a}"));
                }
                ok
            }
            _ => unreachable!("law names validated by the caller"),
        };
        if ok {
            passed += 1;
        }
    }
    Ok(LawResult {
        law,
        trials,
        passed,
        counterexample,
    })
}

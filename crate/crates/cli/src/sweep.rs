//! Grid sweep over dominant (μ, λ): both section routes must agree, be
//! nonnegative, and vanish outside conv(μ).

use exotic::rootdata::{in_conv, Weight};
use exotic::sections::{dominant_shell, h0_mult, h0_mult_subsets};
use num_bigint::BigUint;
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::io;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    RouteMismatch { a: BigUint, b: BigUint },
    Negative(String),
    OutsideConv(BigUint),
    Error(String),
}

#[derive(Debug, Clone)]
pub struct Cell {
    pub mu: Weight,
    pub lambda: Weight,
    pub value: Option<BigUint>,
    pub violation: Option<Violation>,
}

pub fn grid(n: usize, bound: usize) -> Vec<Weight> {
    (0..=bound as i64).flat_map(|s| dominant_shell(n, s)).collect()
}

pub fn check_cell(mu: &Weight, lambda: &Weight) -> Cell {
    let cell = |value, violation| Cell { mu: mu.clone(), lambda: lambda.clone(), value, violation };
    let a = match h0_mult(mu, lambda) {
        Ok(m) => m.value,
        Err(exotic::Error::NegativeMultiplicity(s)) => return cell(None, Some(Violation::Negative(s))),
        Err(e) => return cell(None, Some(Violation::Error(e.to_string()))),
    };
    let b = match h0_mult_subsets(mu, lambda) {
        Ok(b) => b,
        Err(e) => return cell(Some(a), Some(Violation::Error(e.to_string()))),
    };
    if a != b {
        return cell(Some(a.clone()), Some(Violation::RouteMismatch { a, b }));
    }
    match in_conv(lambda, mu) {
        Ok(false) if !a.is_zero() => cell(Some(a.clone()), Some(Violation::OutsideConv(a))),
        Ok(_) => cell(Some(a), None),
        Err(e) => cell(Some(a), Some(Violation::Error(e.to_string()))),
    }
}

pub fn run(n: usize, bound: usize, threads: usize) -> Result<Vec<Cell>, rayon::ThreadPoolBuildError> {
    let weights = grid(n, bound);
    let pairs: Vec<(&Weight, &Weight)> = weights.iter().flat_map(|m| weights.iter().map(move |l| (m, l))).collect();
    let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build()?;
    Ok(pool.install(|| pairs.par_iter().map(|(m, l)| check_cell(m, l)).collect()))
}

fn describe(v: &Violation) -> Value {
    match v {
        Violation::RouteMismatch { a, b } => json!({"kind": "route-mismatch", "a": io::count(a), "b": io::count(b)}),
        Violation::Negative(s) => json!({"kind": "negative", "detail": s}),
        Violation::OutsideConv(a) => json!({"kind": "outside-conv", "a": io::count(a)}),
        Violation::Error(s) => json!({"kind": "error", "detail": s}),
    }
}

pub fn report(n: usize, bound: usize, cells: &[Cell]) -> Value {
    let violations: Vec<Value> = cells
        .iter()
        .filter_map(|c| {
            c.violation.as_ref().map(|v| {
                let mut d = describe(v);
                d["mu"] = io::weight(&c.mu);
                d["lambda"] = io::weight(&c.lambda);
                d
            })
        })
        .collect();
    let nonzero = cells.iter().filter(|c| c.value.as_ref().is_some_and(|v| !v.is_zero())).count();
    json!({
        "n": n,
        "bound": bound,
        "cells": cells.len(),
        "nonzero": nonzero,
        "ok": violations.is_empty(),
        "violations": violations,
    })
}

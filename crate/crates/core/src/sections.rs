//! Global sections of dominant line bundles on the exotic Springer resolution.
//!
//! For dominant λ the higher cohomology of O(λ) vanishes and
//!
//! ```text
//! dim Hom_G(V_μ, H⁰(O(λ))) = Σ_{w∈W} sgn(w) p′(w(μ+ρ) − (λ+ρ))
//!                          = Σ_{S⊆{1..n}} m_μ^{λ+ε_S}
//! ```
//!
//! The first line is route A ([`h0_mult`]), the second route B
//! ([`h0_mult_subsets`], evaluated with the Freudenthal oracle). Both are
//! public so callers can diff them.
//!
//! H⁰ is an infinite direct sum over μ. [`h0_decompose`] lists a finite
//! window of it by |μ|₁; every multiplicity it reports is exact.
//!
//! Derived-category statements shift the pushforwards by d = dim 𝔑 / 2 = n²;
//! that shift never changes a multiplicity and is not modelled here.

use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use crate::characters::{dominant_candidates, to_nonneg, weight_mult_oracle};
use crate::error::{Error, Result};
use crate::kostant::kostant_p_exotic;
use crate::rootdata::{in_conv, is_dominant, pruned_alternating_sum, rho, Weight};

/// Multiplicity of V_μ in H⁰(O(λ)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SectionMultiplicity {
    pub mu: Weight,
    pub lambda: Weight,
    pub value: BigUint,
}

fn check(mu: &Weight, lambda: &Weight) -> Result<()> {
    for x in [mu, lambda] {
        if !is_dominant(x) {
            return Err(Error::NotDominant(x.0.clone()));
        }
    }
    if mu.rank() != lambda.rank() {
        return Err(Error::RankMismatch { expected: mu.rank(), got: lambda.rank() });
    }
    Ok(())
}

/// Route A: alternating Weyl sum of the exotic partition function.
pub fn h0_mult(mu: &Weight, lambda: &Weight) -> Result<SectionMultiplicity> {
    check(mu, lambda)?;
    let r = rho(mu.rank());
    let sum = pruned_alternating_sum(&mu.add(&r).0, &lambda.add(&r).0, |arg| {
        BigInt::from(kostant_p_exotic(&Weight(arg.to_vec())).0)
    });
    let value = to_nonneg(sum, || format!("h0 multiplicity of V_{mu} in O({lambda})"))?;
    if !value.is_zero() && !in_conv(lambda, mu)? {
        return Err(Error::Internal(format!("nonzero h0 multiplicity for {lambda} outside conv({mu})")));
    }
    Ok(SectionMultiplicity { mu: mu.clone(), lambda: lambda.clone(), value })
}

/// Route B: Σ_S m_μ^{λ+ε_S} with Freudenthal multiplicities.
pub fn h0_mult_subsets(mu: &Weight, lambda: &Weight) -> Result<BigUint> {
    check(mu, lambda)?;
    let n = mu.rank();
    let mut total = BigUint::zero();
    for mask in 0u64..(1u64 << n) {
        let shifted = Weight(lambda.0.iter().enumerate().map(|(i, &c)| c + ((mask >> i) & 1) as i64).collect());
        total += weight_mult_oracle(mu, &shifted)?;
    }
    Ok(total)
}

/// Dominant μ with |μ|₁ ≤ `degree_bound` and nonzero multiplicity in H⁰(O(λ)).
pub fn h0_decompose(lambda: &Weight, degree_bound: usize) -> Result<BTreeMap<Weight, BigUint>> {
    if !is_dominant(lambda) {
        return Err(Error::NotDominant(lambda.0.clone()));
    }
    let n = lambda.rank();
    let mut out = BTreeMap::new();
    for shell in 0..=degree_bound as i64 {
        for mu in dominant_shell(n, shell) {
            let m = h0_mult(&mu, lambda)?;
            if !m.value.is_zero() {
                out.insert(mu, m.value);
            }
        }
    }
    Ok(out)
}

/// Dominant weights of rank n with |μ|₁ exactly `size`.
pub fn dominant_shell(n: usize, size: i64) -> Vec<Weight> {
    let mut top = vec![0; n];
    if n == 0 {
        return if size == 0 { vec![Weight(vec![])] } else { vec![] };
    }
    top[0] = size;
    dominant_candidates(&Weight(top)).into_iter().filter(|w| w.l1() == size).collect()
}

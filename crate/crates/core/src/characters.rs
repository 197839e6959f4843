//! Weight multiplicities of irreducible Sp(2n)-modules.
//!
//! Two independent routes:
//! * [`weight_mult`]: the alternating Weyl sum of Kostant partition
//!   functions, `m_μ^λ = Σ_w sgn(w) p(w(μ+ρ) − (λ+ρ))`;
//! * [`weight_mult_oracle`]: Freudenthal's recursion, which only uses inner
//!   products and never touches a partition function.
//!
//! The ε-basis is orthonormal throughout.

use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use parking_lot::Mutex;

use crate::error::{Error, Result};
use crate::kostant::kostant_p;
use crate::rootdata::{dominant_rep, in_conv, is_dominant, pruned_alternating_sum, rho, weyl_orbit, RootDataC, Weight};

fn require_dominant(mu: &Weight) -> Result<()> {
    if is_dominant(mu) {
        Ok(())
    } else {
        Err(Error::NotDominant(mu.0.clone()))
    }
}

pub(crate) fn to_nonneg(v: BigInt, what: impl FnOnce() -> String) -> Result<BigUint> {
    match v.sign() {
        Sign::Minus => Err(Error::NegativeMultiplicity(format!("{} = {v}", what()))),
        _ => Ok(v.magnitude().clone()),
    }
}

/// Multiplicity of λ in V_μ by the Kostant alternating sum.
pub fn weight_mult(mu: &Weight, lambda: &Weight) -> Result<BigUint> {
    require_dominant(mu)?;
    if mu.rank() != lambda.rank() {
        return Err(Error::RankMismatch { expected: mu.rank(), got: lambda.rank() });
    }
    let r = rho(mu.rank());
    let a = mu.add(&r);
    let b = lambda.add(&r);
    let sum = pruned_alternating_sum(&a.0, &b.0, |arg| BigInt::from(kostant_p(&Weight(arg.to_vec())).0));
    to_nonneg(sum, || format!("m_{mu}^{lambda}"))
}

fn freudenthal_memo() -> &'static Mutex<HashMap<(Vec<i64>, Vec<i64>), BigInt>> {
    static MEMO: OnceLock<Mutex<HashMap<(Vec<i64>, Vec<i64>), BigInt>>> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Dominant ν is a weight of V_μ iff μ−ν is in the root lattice (even
/// coordinate sum) and dominated by μ in every partial sum.
fn below(mu: &[i64], nu: &[i64]) -> bool {
    let diff_sum: i64 = mu.iter().zip(nu).map(|(a, b)| a - b).sum();
    if diff_sum.rem_euclid(2) != 0 {
        return false;
    }
    let mut s = 0;
    mu.iter().zip(nu).all(|(a, b)| {
        s += a - b;
        s >= 0
    })
}

fn norm2(v: &[i64]) -> i64 {
    v.iter().map(|c| c * c).sum()
}

fn freudenthal(mu: &[i64], lambda: &[i64], roots: &[Weight]) -> BigInt {
    let (dom, _) = dominant_rep(&Weight(lambda.to_vec()));
    let d = dom.0;
    if d == mu {
        return BigInt::from(1);
    }
    if !below(mu, &d) {
        return BigInt::zero();
    }
    let key = (mu.to_vec(), d.clone());
    if let Some(v) = freudenthal_memo().lock().get(&key) {
        return v.clone();
    }

    let n = mu.len();
    let r = rho(n).0;
    let mu_rho: Vec<i64> = mu.iter().zip(&r).map(|(a, b)| a + b).collect();
    let d_rho: Vec<i64> = d.iter().zip(&r).map(|(a, b)| a + b).collect();
    let bound = norm2(mu);
    let mut numer = BigInt::zero();
    for alpha in roots {
        let mut k = 1;
        loop {
            let shifted: Vec<i64> = d.iter().zip(&alpha.0).map(|(a, b)| a + k * b).collect();
            if norm2(&shifted) > bound {
                break;
            }
            let ip: i64 = shifted.iter().zip(&alpha.0).map(|(a, b)| a * b).sum();
            let m = freudenthal(mu, &shifted, roots);
            numer += m * BigInt::from(ip);
            k += 1;
        }
    }
    numer *= 2;
    let denom = BigInt::from(norm2(&mu_rho) - norm2(&d_rho));
    let (q, rem) = numer.div_rem(&denom);
    assert!(rem.is_zero() && denom.is_positive(), "Freudenthal recursion produced a non-integer at {d:?}");
    freudenthal_memo().lock().insert(key, q.clone());
    q
}

/// Multiplicity of λ in V_μ by Freudenthal's recursion.
pub fn weight_mult_oracle(mu: &Weight, lambda: &Weight) -> Result<BigUint> {
    require_dominant(mu)?;
    if mu.rank() != lambda.rank() {
        return Err(Error::RankMismatch { expected: mu.rank(), got: lambda.rank() });
    }
    let roots = RootDataC::new(mu.rank()).positive_roots;
    let v = freudenthal(&mu.0, &lambda.0, &roots);
    to_nonneg(v, || format!("Freudenthal m_{mu}^{lambda}"))
}

/// dim V_μ = Π_{α>0} (μ+ρ, α)/(ρ, α).
pub fn weyl_dim(mu: &Weight) -> Result<BigUint> {
    require_dominant(mu)?;
    let n = mu.rank();
    let r = rho(n);
    let shifted = mu.add(&r);
    let mut num = BigInt::from(1);
    let mut den = BigInt::from(1);
    for alpha in RootDataC::new(n).positive_roots {
        num *= shifted.dot(&alpha);
        den *= r.dot(&alpha);
    }
    let (q, rem) = num.div_rem(&den);
    if !rem.is_zero() {
        return Err(Error::Internal(format!("Weyl dimension of {mu} is not an integer")));
    }
    to_nonneg(q, || format!("dim V_{mu}"))
}

/// Nonzero weight multiplicities of V_μ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    pub highest: Weight,
    pub entries: BTreeMap<Weight, BigUint>,
}

impl WeightMultiplicityTable {
    pub fn get(&self, lambda: &Weight) -> BigUint {
        self.entries.get(lambda).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigUint {
        self.entries.values().sum()
    }
}

/// Dominant weights with the same rank as μ, entries bounded by μ₁ and ℓ¹
/// norm bounded by |μ|₁. Every dominant weight in conv(μ) is among them.
pub fn dominant_candidates(mu: &Weight) -> Vec<Weight> {
    let n = mu.rank();
    let top = mu.0.first().copied().unwrap_or(0).max(0);
    let budget = mu.l1();
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(n);
    dom_rec(n, top, budget, &mut cur, &mut out);
    out
}

fn dom_rec(n: usize, cap: i64, budget: i64, cur: &mut Vec<i64>, out: &mut Vec<Weight>) {
    if cur.len() == n {
        out.push(Weight(cur.clone()));
        return;
    }
    for v in 0..=cap.min(budget) {
        cur.push(v);
        dom_rec(n, v, budget - v, cur, out);
        cur.pop();
    }
}

/// Full weight table of V_μ, computed with the Kostant route over conv(μ).
pub fn all_weights(mu: &Weight) -> Result<WeightMultiplicityTable> {
    require_dominant(mu)?;
    let mut entries = BTreeMap::new();
    for nu in dominant_candidates(mu) {
        if !in_conv(&nu, mu)? {
            continue;
        }
        let m = weight_mult(mu, &nu)?;
        if m.is_zero() {
            continue;
        }
        for lam in weyl_orbit(&nu) {
            entries.insert(lam, m.clone());
        }
    }
    Ok(WeightMultiplicityTable { highest: mu.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> Weight {
        Weight(v.to_vec())
    }

    fn u(v: u32) -> BigUint {
        BigUint::from(v)
    }

    #[test]
    fn kostant_route_examples() {
        assert_eq!(weight_mult(&w(&[1, 0]), &w(&[1, 0])).unwrap(), u(1));
        assert_eq!(weight_mult(&w(&[1, 0]), &w(&[0, 0])).unwrap(), u(0));
        assert_eq!(weight_mult(&w(&[1, 1]), &w(&[0, 0])).unwrap(), u(1));
        assert!(weight_mult(&w(&[0, 1]), &w(&[0, 0])).is_err());
    }

    #[test]
    fn oracle_examples() {
        assert_eq!(weight_mult_oracle(&w(&[0, 0]), &w(&[0, 0])).unwrap(), u(1));
        assert_eq!(weight_mult_oracle(&w(&[1, 0]), &w(&[0, -1])).unwrap(), u(1));
        assert_eq!(weight_mult_oracle(&w(&[1, 1]), &w(&[1, -1])).unwrap(), u(1));
        assert_eq!(weight_mult_oracle(&w(&[1, 1]), &w(&[0, 0])).unwrap(), u(1));
        assert_eq!(weight_mult_oracle(&w(&[1, 0]), &w(&[0, 0])).unwrap(), u(0));
    }

    #[test]
    fn dims() {
        assert_eq!(weyl_dim(&w(&[0, 0])).unwrap(), u(1));
        assert_eq!(weyl_dim(&w(&[1, 0])).unwrap(), u(4));
        assert_eq!(weyl_dim(&w(&[1, 1])).unwrap(), u(5));
        // Adjoint of sp(4) and sp(6).
        assert_eq!(weyl_dim(&w(&[2, 0])).unwrap(), u(10));
        assert_eq!(weyl_dim(&w(&[2, 0, 0])).unwrap(), u(21));
        // Λ²₀ of the 6-dimensional module.
        assert_eq!(weyl_dim(&w(&[1, 1, 0])).unwrap(), u(14));
    }

    #[test]
    fn tables() {
        let t = all_weights(&w(&[0, 0])).unwrap();
        assert_eq!(t.entries.len(), 1);
        assert_eq!(t.get(&w(&[0, 0])), u(1));

        let t = all_weights(&w(&[1, 0])).unwrap();
        assert_eq!(t.entries.len(), 4);
        assert!(t.entries.values().all(|m| *m == u(1)));

        let t = all_weights(&w(&[1, 1])).unwrap();
        assert_eq!(t.entries.len(), 5);
        assert_eq!(t.get(&w(&[0, 0])), u(1));
        assert_eq!(t.get(&w(&[-1, 1])), u(1));
        assert_eq!(t.total(), weyl_dim(&w(&[1, 1])).unwrap());
    }

    #[test]
    fn adjoint_zero_weight_is_rank() {
        // The zero weight of the adjoint representation has multiplicity n.
        for n in 1..=4 {
            let mut mu = vec![0; n];
            mu[0] = 2;
            let zero = Weight::zero(n);
            assert_eq!(weight_mult(&Weight(mu.clone()), &zero).unwrap(), u(n as u32));
            assert_eq!(weight_mult_oracle(&Weight(mu), &zero).unwrap(), u(n as u32));
        }
    }
}

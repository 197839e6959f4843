//! Kostant partition functions for C_n.
//!
//! `p` counts expressions of a weight as a nonnegative integer combination
//! of the positive roots {ε_i−ε_j, ε_i+ε_j, 2ε_i}. `p′` does the same for
//! the exotic weights {ε_i−ε_j, ε_i+ε_j, ε_i}. They are linked by
//! `p′(μ) = Σ_{S⊆{1..n}} p(μ − Σ_{i∈S} ε_i)`.
//!
//! Both are evaluated by a memoized recursion over the summand list keyed on
//! (summand index, residual). A residual with a negative partial sum lies
//! outside the cone of every summand and is pruned immediately.

use std::collections::HashMap;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, OnceLock};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use parking_lot::Mutex;

use crate::rootdata::{RootDataC, Weight};

/// Nonnegative partition count.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartitionCount(pub BigUint);

impl PartitionCount {
    pub fn value(&self) -> &BigUint {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl std::fmt::Display for PartitionCount {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.0.fmt(f)
    }
}

/// Which summand multiset to count against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Kind {
    /// Positive roots, long roots 2ε_i.
    Roots,
    /// Exotic weights, ε_i in place of 2ε_i.
    Exotic,
}

type Key = (usize, Box<[i64]>);

struct Table {
    summands: Vec<Vec<i64>>,
    memo: Mutex<HashMap<Key, BigUint>>,
}

/// Default cache budget: roughly 64 MiB.
pub const DEFAULT_CACHE_BYTES: usize = 64 << 20;

static CACHE_BYTES: AtomicUsize = AtomicUsize::new(DEFAULT_CACHE_BYTES);

fn tables() -> &'static Mutex<HashMap<(Kind, usize), Arc<Table>>> {
    static TABLES: OnceLock<Mutex<HashMap<(Kind, usize), Arc<Table>>>> = OnceLock::new();
    TABLES.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Sets the approximate memory budget of each memo table. A table that
/// outgrows it is cleared.
pub fn set_cache_bytes(bytes: usize) {
    CACHE_BYTES.store(bytes.max(1), Ordering::Relaxed);
}

/// Drops every memo table.
pub fn clear_caches() {
    tables().lock().clear();
}

fn table(kind: Kind, n: usize) -> Arc<Table> {
    let mut guard = tables().lock();
    guard
        .entry((kind, n))
        .or_insert_with(|| {
            let rd = RootDataC::new(n);
            let list = match kind {
                Kind::Roots => rd.positive_roots,
                Kind::Exotic => rd.exotic_weights,
            };
            Arc::new(Table { summands: list.into_iter().map(|w| w.0).collect(), memo: Mutex::new(HashMap::new()) })
        })
        .clone()
}

fn in_cone(r: &[i64]) -> bool {
    let mut s = 0;
    r.iter().all(|&c| {
        s += c;
        s >= 0
    })
}

impl Table {
    fn entry_cap(&self) -> usize {
        let n = self.summands.first().map_or(1, |s| s.len());
        let per_entry = 96 + 8 * n;
        (CACHE_BYTES.load(Ordering::Relaxed) / per_entry).max(1024)
    }

    fn count(&self, idx: usize, residual: &[i64]) -> BigUint {
        if !in_cone(residual) {
            return BigUint::zero();
        }
        if idx == self.summands.len() {
            return if residual.iter().all(|&c| c == 0) { BigUint::one() } else { BigUint::zero() };
        }
        if residual.iter().all(|&c| c == 0) {
            return BigUint::one();
        }
        let key: Key = (idx, residual.into());
        if let Some(v) = self.memo.lock().get(&key) {
            return v.clone();
        }

        let step = &self.summands[idx];
        let mut total = BigUint::zero();
        let mut r = residual.to_vec();
        while in_cone(&r) {
            total += self.count(idx + 1, &r);
            for (x, s) in r.iter_mut().zip(step) {
                *x -= s;
            }
        }

        let mut memo = self.memo.lock();
        if memo.len() >= self.entry_cap() {
            memo.clear();
        }
        memo.insert(key, total.clone());
        total
    }
}

fn evaluate(kind: Kind, mu: &Weight) -> PartitionCount {
    let n = mu.rank();
    if !in_cone(&mu.0) {
        return PartitionCount(BigUint::zero());
    }
    if kind == Kind::Roots && mu.0.iter().sum::<i64>().rem_euclid(2) == 1 {
        return PartitionCount(BigUint::zero());
    }
    PartitionCount(table(kind, n).count(0, &mu.0))
}

/// Partition function over the positive roots of C_n.
pub fn kostant_p(mu: &Weight) -> PartitionCount {
    evaluate(Kind::Roots, mu)
}

/// Partition function over the exotic weights (ε_i in place of 2ε_i).
pub fn kostant_p_exotic(mu: &Weight) -> PartitionCount {
    evaluate(Kind::Exotic, mu)
}

pub fn kostant(kind: Kind, mu: &Weight) -> PartitionCount {
    evaluate(kind, mu)
}

/// Right-hand side Σ_S p(μ − ε_S).
pub fn subset_sum_of_p(mu: &Weight) -> BigUint {
    let n = mu.rank();
    let mut total = BigUint::zero();
    for mask in 0u64..(1u64 << n) {
        let shifted: Vec<i64> =
            mu.0.iter().enumerate().map(|(i, &c)| c - ((mask >> i) & 1) as i64).collect();
        total += kostant_p(&Weight(shifted)).0;
    }
    total
}

/// Checks `p′(μ) = Σ_S p(μ − ε_S)` exactly.
pub fn subset_identity_check(mu: &Weight) -> bool {
    kostant_p_exotic(mu).0 == subset_sum_of_p(mu)
}

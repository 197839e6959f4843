//! Bipartitions of n and the combinatorics of exotic orbit closures.
//!
//! Orbits of Sp(2n) on the exotic nilpotent cone are indexed by
//! bipartitions (μ, ν) with |μ|+|ν| = n. This module holds the closure
//! order, the C-distinguished subposet, the maps Φ^C: Q_n → P^C_{2n} and
//! Φ̂^C: P^C_{2n} → Q^C_n, the dimension profile of (μ,ν)-filtrations, and
//! the Hasse diagram.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// Weakly decreasing positive parts; trailing zeros are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, dropping zeros. Rejects increasing input.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1] && w[0] != 0) || has_inner_zero(&parts) {
            return Err(Error::NotAPartition(parts.iter().map(|&p| p as i64).collect()));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition(parts))
    }

    /// Sorts the parts first.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// i-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn max_part(&self) -> usize {
        self.part(0)
    }

    /// λ∪λ.
    pub fn doubled(&self) -> Partition {
        Partition(self.0.iter().flat_map(|&p| [p, p]).collect())
    }

    /// Every odd part occurs with even multiplicity.
    pub fn is_type_c(&self) -> bool {
        let mut counts: BTreeMap<usize, usize> = BTreeMap::new();
        for &p in &self.0 {
            *counts.entry(p).or_default() += 1;
        }
        counts.iter().all(|(&p, &c)| p % 2 == 0 || c % 2 == 0)
    }

    /// Dominance order: every partial sum of `self` is at most that of `other`.
    pub fn dominated_by(&self, other: &Partition) -> bool {
        let len = self.len().max(other.len());
        let (mut a, mut b) = (0, 0);
        (0..len).all(|i| {
            a += self.part(i);
            b += other.part(i);
            a <= b
        })
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        part_rec(n, n, &mut cur, &mut out);
        out
    }
}

fn has_inner_zero(parts: &[usize]) -> bool {
    let first_zero = parts.iter().position(|&p| p == 0);
    first_zero.is_some_and(|z| parts[z..].iter().any(|&p| p != 0))
}

fn part_rec(rest: usize, cap: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=cap.min(rest)).rev() {
        cur.push(p);
        part_rec(rest - p, p, cur, out);
        cur.pop();
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// (μ, ν) with |μ| + |ν| = n.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub mu: Partition,
    pub nu: Partition,
}

impl Bipartition {
    pub fn new(mu: Partition, nu: Partition) -> Self {
        Bipartition { mu, nu }
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts(mu: &[usize], nu: &[usize]) -> Result<Self> {
        Ok(Bipartition { mu: Partition::new(mu.to_vec())?, nu: Partition::new(nu.to_vec())? })
    }

    pub fn size(&self) -> usize {
        self.mu.size() + self.nu.size()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}|{}", self.mu, self.nu)
    }
}

/// All bipartitions of n: for k = n down to 0, μ ⊢ k and ν ⊢ n−k.
pub fn enumerate_q(n: usize) -> Vec<Bipartition> {
    let mut out = Vec::new();
    for k in (0..=n).rev() {
        let mus = Partition::all(k);
        let nus = Partition::all(n - k);
        for mu in &mus {
            for nu in &nus {
                out.push(Bipartition::new(mu.clone(), nu.clone()));
            }
        }
    }
    out
}

/// `lower ≤ upper` in the closure order on Q_n.
pub fn closure_leq(lower: &Bipartition, upper: &Bipartition) -> Result<bool> {
    if lower.size() != upper.size() {
        return Err(Error::SizeMismatch { left: lower.size(), right: upper.size() });
    }
    let n = upper.size();
    let (mut su, mut sl) = (0usize, 0usize);
    for j in 0..=n {
        if j > 0 {
            su += upper.mu.part(j - 1) + upper.nu.part(j - 1);
            sl += lower.mu.part(j - 1) + lower.nu.part(j - 1);
        }
        if su < sl || upper.mu.part(j) + su < lower.mu.part(j) + sl {
            return Ok(false);
        }
    }
    Ok(true)
}

/// μ_i ≥ ν_i − 1 and ν_i ≥ μ_{i+1} − 1 for all i.
pub fn is_c_distinguished(b: &Bipartition) -> bool {
    let len = b.mu.len().max(b.nu.len()) + 1;
    (0..len).all(|i| {
        b.mu.part(i) + 1 >= b.nu.part(i) && b.nu.part(i) + 1 >= b.mu.part(i + 1)
    })
}

fn interleave(b: &Bipartition) -> Vec<usize> {
    let len = b.mu.len().max(b.nu.len());
    (0..len).flat_map(|i| [2 * b.mu.part(i), 2 * b.nu.part(i)]).collect()
}

/// Repeatedly replaces the first strictly increasing adjacent pair (2s, 2t)
/// by (s+t, s+t) until the sequence is weakly decreasing.
fn collapse_pairs(seq: &mut [usize], mut pick: impl FnMut(&[usize]) -> usize) -> Result<()> {
    loop {
        let ascents: Vec<usize> = (0..seq.len().saturating_sub(1)).filter(|&i| seq[i] < seq[i + 1]).collect();
        if ascents.is_empty() {
            return Ok(());
        }
        let i = ascents[pick(&ascents) % ascents.len()];
        let (a, b) = (seq[i], seq[i + 1]);
        if a % 2 == 1 || b % 2 == 1 {
            return Err(Error::Internal(format!("Φ^C met an increasing pair ({a},{b}) with an odd entry")));
        }
        let m = (a + b) / 2;
        seq[i] = m;
        seq[i + 1] = m;
    }
}

/// Φ^C(μ, ν) ∈ P^C_{2n}.
pub fn phi_c(b: &Bipartition) -> Result<Partition> {
    phi_c_with_order(b, |_| 0)
}

/// Φ^C with a caller-chosen ascent at every step. `pick` receives the
/// current ascent positions and returns an index into them. Used to check
/// that the result does not depend on the order of replacements.
pub fn phi_c_with_order(b: &Bipartition, pick: impl FnMut(&[usize]) -> usize) -> Result<Partition> {
    let mut seq = interleave(b);
    collapse_pairs(&mut seq, pick)?;
    let lambda = Partition::new(seq)?;
    if !lambda.is_type_c() {
        return Err(Error::Internal(format!("Φ^C{b} = {lambda} is not in P^C")));
    }
    Ok(lambda)
}

/// Φ̂^C(λ) ∈ Q^C_n. λ must have |λ| even and odd parts in even multiplicity.
pub fn phi_c_hat(lambda: &Partition) -> Result<Bipartition> {
    if !lambda.is_type_c() || lambda.size() % 2 == 1 {
        return Err(Error::NotTypeC(lambda.parts().to_vec()));
    }
    let parts = lambda.parts();
    let mut comp = Vec::with_capacity(parts.len() + 1);
    let mut i = 0;
    while i < parts.len() {
        let p = parts[i];
        if p % 2 == 0 {
            comp.push(p / 2);
            i += 1;
            continue;
        }
        let run = parts[i..].iter().take_while(|&&q| q == p).count();
        let k = p / 2;
        for j in 0..run {
            comp.push(if j % 2 == 0 { k } else { k + 1 });
        }
        i += run;
    }
    if comp.len() % 2 == 1 {
        comp.push(0);
    }
    let mu: Vec<usize> = comp.iter().step_by(2).copied().collect();
    let nu: Vec<usize> = comp.iter().skip(1).step_by(2).copied().collect();
    let b = Bipartition::new(Partition::new(mu)?, Partition::new(nu)?);
    if !is_c_distinguished(&b) {
        return Err(Error::Internal(format!("Φ̂^C{lambda} = {b} is not C-distinguished")));
    }
    Ok(b)
}

/// (μ, ν)^C = Φ̂^C(Φ^C(μ, ν)).
pub fn collapse(b: &Bipartition) -> Result<Bipartition> {
    phi_c_hat(&phi_c(b)?)
}

/// Partitions of 2n in P^C.
pub fn enumerate_pc(n: usize) -> Vec<Partition> {
    Partition::all(2 * n).into_iter().filter(Partition::is_type_c).collect()
}

/// dim V_{≥a} of a (μ,ν)-filtration, keyed by a.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiltrationProfile {
    pub total: usize,
    pub dims: BTreeMap<i64, usize>,
}

impl FiltrationProfile {
    /// Dimension at any a, saturating outside the stored range.
    pub fn dim(&self, a: i64) -> usize {
        match (self.dims.first_key_value(), self.dims.last_key_value()) {
            (Some((&lo, _)), Some((&hi, _))) if a < lo || a > hi => {
                if a < lo {
                    self.total
                } else {
                    0
                }
            }
            _ => self.dims.get(&a).copied().unwrap_or(0),
        }
    }

    pub fn range(&self) -> (i64, i64) {
        let lo = self.dims.keys().next().copied().unwrap_or(0);
        let hi = self.dims.keys().next_back().copied().unwrap_or(0);
        (lo, hi)
    }
}

/// dim V_{≥a} = Σ_i max(⌈(λ_i − a)/2⌉, 0) for a ≥ 1 with λ = Φ^C(μ,ν), and
/// dim V_{≥a} = 2n − dim V_{≥1−a} for a ≤ 0. Stored for 1−M ≤ a ≤ M where
/// M is the largest part of λ; the two ends are saturated (2n and 0).
pub fn filtration_dims(b: &Bipartition) -> Result<FiltrationProfile> {
    let lambda = phi_c(b)?;
    Ok(profile_of(&lambda, 2 * b.size()))
}

pub(crate) fn profile_of(lambda: &Partition, total: usize) -> FiltrationProfile {
    let positive = |a: i64| -> usize {
        lambda
            .parts()
            .iter()
            .map(|&p| {
                let d = p as i64 - a;
                if d > 0 {
                    ((d + 1) / 2) as usize
                } else {
                    0
                }
            })
            .sum()
    };
    let top = lambda.max_part() as i64;
    let mut dims = BTreeMap::new();
    for a in (1 - top)..=top.max(1) {
        let d = if a >= 1 { positive(a) } else { total - positive(1 - a) };
        dims.insert(a, d);
    }
    FiltrationProfile { total, dims }
}

/// Cover relations of the closure order on Q_n, as (lower, upper) index
/// pairs into [`enumerate_q`].
pub fn hasse(n: usize) -> Result<(Vec<Bipartition>, Vec<(usize, usize)>)> {
    let nodes = enumerate_q(n);
    let m = nodes.len();
    let mut leq = vec![vec![false; m]; m];
    for i in 0..m {
        for j in 0..m {
            leq[i][j] = closure_leq(&nodes[i], &nodes[j])?;
        }
    }
    let mut edges = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i == j || !leq[i][j] {
                continue;
            }
            let covered = (0..m).any(|k| k != i && k != j && leq[i][k] && leq[k][j]);
            if !covered {
                edges.push((i, j));
            }
        }
    }
    Ok((nodes, edges))
}

/// Graphviz rendering of [`hasse`]; C-distinguished nodes get a double border.
pub fn emit_dot(n: usize) -> Result<String> {
    let (nodes, edges) = hasse(n)?;
    let mut s = format!("digraph Q{n} {{\n  rankdir=BT;\n  node [shape=box];\n");
    for (i, b) in nodes.iter().enumerate() {
        let peripheries = if is_c_distinguished(b) { 2 } else { 1 };
        s.push_str(&format!("  n{i} [label=\"{b}\", peripheries={peripheries}];\n"));
    }
    for (a, b) in edges {
        s.push_str(&format!("  n{a} -> n{b};\n"));
    }
    s.push_str("}\n");
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bp(mu: &[usize], nu: &[usize]) -> Bipartition {
        Bipartition::from_parts(mu, nu).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn partition_normalization() {
        assert_eq!(p(&[2, 1, 0, 0]), p(&[2, 1]));
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0, 1]).is_err());
        assert_eq!(Partition::all(4).len(), 5);
        assert_eq!(Partition::all(0), vec![Partition::empty()]);
    }

    #[test]
    fn enumerate_counts() {
        assert_eq!(enumerate_q(0), vec![bp(&[], &[])]);
        assert_eq!(enumerate_q(1), vec![bp(&[1], &[]), bp(&[], &[1])]);
        assert_eq!(enumerate_q(2).len(), 5);
        assert_eq!(enumerate_q(5).len(), 36);
    }

    #[test]
    fn closure_examples() {
        assert!(closure_leq(&bp(&[], &[2]), &bp(&[1], &[1])).unwrap());
        assert!(!closure_leq(&bp(&[1], &[1]), &bp(&[], &[2])).unwrap());
        let a = bp(&[1, 1], &[]);
        let b = bp(&[], &[2]);
        assert!(!closure_leq(&a, &b).unwrap());
        assert!(!closure_leq(&b, &a).unwrap());
        assert!(closure_leq(&a, &a).unwrap());
        assert!(matches!(closure_leq(&a, &bp(&[1], &[])), Err(Error::SizeMismatch { .. })));
    }

    #[test]
    fn distinguished_examples() {
        assert!(is_c_distinguished(&bp(&[1], &[])));
        assert!(is_c_distinguished(&bp(&[], &[1])));
        assert!(!is_c_distinguished(&bp(&[1, 1, 1], &[3])));
        assert!(is_c_distinguished(&bp(&[2, 1, 1], &[2])));
    }

    #[test]
    fn phi_examples() {
        assert_eq!(phi_c(&bp(&[1, 1, 1], &[3])).unwrap(), p(&[4, 4, 2, 1, 1]));
        assert_eq!(phi_c(&bp(&[1], &[])).unwrap(), p(&[2]));
        assert_eq!(phi_c(&bp(&[], &[1])).unwrap(), p(&[1, 1]));
    }

    #[test]
    fn phi_hat_examples() {
        assert_eq!(phi_c_hat(&p(&[4, 4, 2, 1, 1])).unwrap(), bp(&[2, 1, 1], &[2]));
        assert_eq!(phi_c_hat(&p(&[2])).unwrap(), bp(&[1], &[]));
        assert_eq!(phi_c_hat(&p(&[1, 1])).unwrap(), bp(&[], &[1]));
        assert!(matches!(phi_c_hat(&p(&[3, 1])), Err(Error::NotTypeC(_))));
        assert!(matches!(phi_c_hat(&p(&[1])), Err(Error::NotTypeC(_))));
    }

    #[test]
    fn collapse_examples() {
        assert_eq!(collapse(&bp(&[1, 1, 1], &[3])).unwrap(), bp(&[2, 1, 1], &[2]));
        assert_eq!(collapse(&bp(&[1], &[])).unwrap(), bp(&[1], &[]));
        assert_eq!(collapse(&bp(&[], &[1])).unwrap(), bp(&[], &[1]));
    }

    #[test]
    fn filtration_examples() {
        let f = filtration_dims(&bp(&[1, 1, 1], &[3])).unwrap();
        assert_eq!(f.dim(4), 0);
        assert_eq!(f.dim(3), 2);
        assert_eq!(f.dim(2), 2);
        assert_eq!(f.dim(1), 5);
        assert_eq!(f.dim(0), 7);
        assert_eq!(f.dim(-1), 10);
        assert_eq!(f.dim(-2), 10);
        assert_eq!(f.dim(-3), 12);
        assert_eq!(f.dim(-40), 12);

        let f = filtration_dims(&bp(&[1], &[])).unwrap();
        assert_eq!((f.dim(1), f.dim(0), f.dim(-1)), (1, 1, 2));

        let f = filtration_dims(&bp(&[], &[1])).unwrap();
        assert_eq!((f.dim(1), f.dim(0)), (0, 2));
    }

    #[test]
    fn hasse_small() {
        let (nodes, edges) = hasse(1).unwrap();
        assert_eq!(edges.len(), 1);
        let (lo, hi) = edges[0];
        assert_eq!((&nodes[lo], &nodes[hi]), (&bp(&[], &[1]), &bp(&[1], &[])));

        let (nodes, edges) = hasse(0).unwrap();
        assert_eq!(nodes.len(), 1);
        assert!(edges.is_empty());

        let (nodes, edges) = hasse(2).unwrap();
        let idx = |b: &Bipartition| nodes.iter().position(|x| x == b).unwrap();
        let mut expected = vec![
            (idx(&bp(&[1], &[1])), idx(&bp(&[2], &[]))),
            (idx(&bp(&[1, 1], &[])), idx(&bp(&[1], &[1]))),
            (idx(&bp(&[], &[2])), idx(&bp(&[1], &[1]))),
            (idx(&bp(&[], &[1, 1])), idx(&bp(&[1, 1], &[]))),
            (idx(&bp(&[], &[1, 1])), idx(&bp(&[], &[2]))),
        ];
        let mut got = edges.clone();
        expected.sort();
        got.sort();
        assert_eq!(got, expected);
    }

    #[test]
    fn dot_output() {
        let dot = emit_dot(1).unwrap();
        assert!(dot.starts_with("digraph"));
        assert_eq!(dot.matches("->").count(), 1);
        assert_eq!(dot.matches("label=").count(), 2);
        assert!(dot.contains("label=\"(1)|()\", peripheries=2"));
    }
}

//! Type C_n root data in the ε-basis.
//!
//! Weights are integer vectors. Vectors shifted by θ = ½(ε₁+⋯+ε_n) are
//! kept in doubled coordinates ([`DoubledWeight`]) so every computation
//! stays in the integers. The Weyl group is the hyperoctahedral group of
//! signed permutations, acting by `(w·x)_{perm(i)} = signs(i)·x_i`.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

use crate::error::{Error, Result};
use crate::lp;

/// Integer weight in the ε-basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(pub Vec<i64>);

/// Twice a weight; entries share a parity (odd means the weight is shifted by θ).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DoubledWeight(pub Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Self {
        Weight(coords)
    }

    pub fn zero(n: usize) -> Self {
        Weight(vec![0; n])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Basis vector ε_i (0-based).
    pub fn epsilon(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        Weight(v)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, k: i64) -> Weight {
        Weight(self.0.iter().map(|a| k * a).collect())
    }

    /// ℓ¹ norm, the size used to bound grids.
    pub fn l1(&self) -> i64 {
        self.0.iter().map(|a| a.abs()).sum()
    }

    pub fn dot(&self, other: &Weight) -> i64 {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn doubled(&self) -> DoubledWeight {
        DoubledWeight(self.0.iter().map(|a| 2 * a).collect())
    }

    /// 2(λ+θ).
    pub fn shifted_by_theta(&self) -> DoubledWeight {
        DoubledWeight(self.0.iter().map(|a| 2 * a + 1).collect())
    }

    fn check_rank(&self, n: usize) -> Result<()> {
        if self.rank() != n {
            return Err(Error::RankMismatch { expected: n, got: self.rank() });
        }
        Ok(())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl DoubledWeight {
    pub fn rank(&self) -> usize {
        self.0.len()
    }

    /// All entries even or all odd.
    pub fn has_uniform_parity(&self) -> bool {
        match self.0.first() {
            None => true,
            Some(first) => self.0.iter().all(|c| (c - first).rem_euclid(2) == 0),
        }
    }

    /// Halves the coordinates, if every entry is even.
    pub fn halve(&self) -> Option<Weight> {
        if self.0.iter().all(|c| c % 2 == 0) {
            Some(Weight(self.0.iter().map(|c| c / 2).collect()))
        } else {
            None
        }
    }

    /// Squared norm of the doubled vector (four times the weight's norm).
    pub fn norm2(&self) -> i64 {
        self.0.iter().map(|c| c * c).sum()
    }
}

/// Element of the hyperoctahedral group: slot `i` goes to slot `perm[i]`
/// with sign `signs[i]`. Indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPermutation {
    perm: Vec<usize>,
    signs: Vec<i8>,
}

impl SignedPermutation {
    pub fn new(perm: Vec<usize>, signs: Vec<i8>) -> Result<Self> {
        let n = perm.len();
        if signs.len() != n {
            return Err(Error::RankMismatch { expected: n, got: signs.len() });
        }
        let mut seen = vec![false; n];
        for &p in &perm {
            if p >= n || seen[p] {
                return Err(Error::Dimension(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        if signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(Error::Dimension(format!("signs {signs:?} must be ±1")));
        }
        Ok(SignedPermutation { perm, signs })
    }

    pub fn identity(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![1; n] }
    }

    /// Negates slot `i` only.
    pub fn flip(n: usize, i: usize) -> Self {
        let mut w = Self::identity(n);
        w.signs[i] = -1;
        w
    }

    /// Swaps slots `i` and `j`.
    pub fn transposition(n: usize, i: usize, j: usize) -> Self {
        let mut w = Self::identity(n);
        w.perm.swap(i, j);
        w
    }

    /// The longest element, −1.
    pub fn longest(n: usize) -> Self {
        SignedPermutation { perm: (0..n).collect(), signs: vec![-1; n] }
    }

    pub fn rank(&self) -> usize {
        self.perm.len()
    }

    pub fn perm(&self) -> &[usize] {
        &self.perm
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// Determinant of the signed permutation matrix.
    pub fn sgn(&self) -> i64 {
        let n = self.perm.len();
        let mut inversions = 0usize;
        for i in 0..n {
            for j in i + 1..n {
                if self.perm[i] > self.perm[j] {
                    inversions += 1;
                }
            }
        }
        let neg = self.signs.iter().filter(|&&s| s < 0).count();
        if (inversions + neg) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SignedPermutation) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            let mid = other.perm[i];
            perm[i] = self.perm[mid];
            signs[i] = other.signs[i] * self.signs[mid];
        }
        SignedPermutation { perm, signs }
    }

    pub fn inverse(&self) -> SignedPermutation {
        let n = self.rank();
        let mut perm = vec![0; n];
        let mut signs = vec![1; n];
        for i in 0..n {
            perm[self.perm[i]] = i;
            signs[self.perm[i]] = self.signs[i];
        }
        SignedPermutation { perm, signs }
    }

    fn apply_raw(&self, x: &[i64]) -> Vec<i64> {
        let mut out = vec![0; x.len()];
        for (i, &xi) in x.iter().enumerate() {
            out[self.perm[i]] = self.signs[i] as i64 * xi;
        }
        out
    }

    /// Every element of the group, in lexicographic order of (perm, signs).
    /// There are 2ⁿ·n! of them; keep n small.
    pub fn all(n: usize) -> Vec<SignedPermutation> {
        let mut perms = Vec::new();
        permutations(&mut (0..n).collect::<Vec<_>>(), 0, &mut perms);
        perms.sort();
        let mut out = Vec::with_capacity(perms.len() << n);
        for p in perms {
            for mask in 0..(1u32 << n) {
                // Most significant bit is slot 0 so that + sorts before −.
                let signs = (0..n)
                    .map(|i| if mask >> (n - 1 - i) & 1 == 1 { -1 } else { 1 })
                    .collect();
                out.push(SignedPermutation { perm: p.clone(), signs });
            }
        }
        out
    }
}

fn permutations(items: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
    if k == items.len() {
        out.push(items.clone());
        return;
    }
    for i in k..items.len() {
        items.swap(k, i);
        permutations(items, k + 1, out);
        items.swap(k, i);
    }
}

/// Something the Weyl group acts on by signed permutation of coordinates.
pub trait WeylAction: Sized {
    fn acted(&self, w: &SignedPermutation) -> Result<Self>;
}

impl WeylAction for Weight {
    fn acted(&self, w: &SignedPermutation) -> Result<Self> {
        self.check_rank(w.rank())?;
        Ok(Weight(w.apply_raw(&self.0)))
    }
}

impl WeylAction for DoubledWeight {
    fn acted(&self, w: &SignedPermutation) -> Result<Self> {
        if self.rank() != w.rank() {
            return Err(Error::RankMismatch { expected: w.rank(), got: self.rank() });
        }
        Ok(DoubledWeight(w.apply_raw(&self.0)))
    }
}

/// Standard action `w(x)`.
pub fn act<T: WeylAction>(w: &SignedPermutation, x: &T) -> Result<T> {
    x.acted(w)
}

/// Type C_n root data together with the weights of the exotic representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootDataC {
    pub rank: usize,
    /// ε_i−ε_j, ε_i+ε_j (i<j), 2ε_i.
    pub positive_roots: Vec<Weight>,
    /// ε_i−ε_j, ε_i+ε_j (i<j), ε_i.
    pub exotic_weights: Vec<Weight>,
    /// Weights of the nilradical 𝔲; the same multiset as the positive roots.
    pub u_weights: Vec<Weight>,
    pub rho: DoubledWeight,
    pub theta: DoubledWeight,
    /// The canonical bundle of the exotic Springer resolution is O(−ε₁−⋯−ε_n).
    pub canonical_weight: Weight,
}

impl RootDataC {
    pub fn new(n: usize) -> Self {
        let mut short = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let mut minus = vec![0; n];
                minus[i] = 1;
                minus[j] = -1;
                short.push(Weight(minus));
                let mut plus = vec![0; n];
                plus[i] = 1;
                plus[j] = 1;
                short.push(Weight(plus));
            }
        }
        let mut positive_roots = short.clone();
        let mut exotic_weights = short;
        for i in 0..n {
            positive_roots.push(Weight::epsilon(n, i).scale(2));
            exotic_weights.push(Weight::epsilon(n, i));
        }
        RootDataC {
            rank: n,
            u_weights: positive_roots.clone(),
            positive_roots,
            exotic_weights,
            rho: rho(n).doubled(),
            theta: DoubledWeight(vec![1; n]),
            canonical_weight: Weight(vec![-1; n]),
        }
    }
}

/// ρ = (n, n−1, …, 1); integral in type C.
pub fn rho(n: usize) -> Weight {
    Weight((1..=n as i64).rev().collect())
}

/// λ₁ ≥ λ₂ ≥ ⋯ ≥ λ_n ≥ 0.
pub fn is_dominant(lambda: &Weight) -> bool {
    is_dominant_raw(&lambda.0)
}

fn is_dominant_raw(c: &[i64]) -> bool {
    c.windows(2).all(|w| w[0] >= w[1]) && c.last().map_or(true, |&l| l >= 0)
}

fn require_dominant(lambda: &Weight) -> Result<()> {
    if is_dominant(lambda) {
        Ok(())
    } else {
        Err(Error::NotDominant(lambda.0.clone()))
    }
}

pub(crate) fn dominant_rep_raw(x: &[i64]) -> (Vec<i64>, SignedPermutation) {
    let n = x.len();
    let mut order: Vec<usize> = (0..n).collect();
    // Stable sort keeps equal absolute values in source order, which gives
    // the lexicographically smallest permutation.
    order.sort_by(|&a, &b| x[b].abs().cmp(&x[a].abs()));
    let mut perm = vec![0; n];
    for (target, &src) in order.iter().enumerate() {
        perm[src] = target;
    }
    let signs = x.iter().map(|&c| if c < 0 { -1 } else { 1 }).collect();
    let w = SignedPermutation { perm, signs };
    (w.apply_raw(x), w)
}

/// The dominant element λ⁺ of the orbit of λ and the lexicographically
/// smallest `w` with `w(λ) = λ⁺`.
pub fn dominant_rep(lambda: &Weight) -> (Weight, SignedPermutation) {
    let (d, w) = dominant_rep_raw(&lambda.0);
    (Weight(d), w)
}

pub fn sgn(w: &SignedPermutation) -> i64 {
    w.sgn()
}

/// w·λ = w(λ+θ) − θ.
pub fn twisted_act(w: &SignedPermutation, lambda: &Weight) -> Result<Weight> {
    let moved = lambda.shifted_by_theta().acted(w)?;
    let back = DoubledWeight(moved.0.iter().map(|c| c - 1).collect());
    back.halve()
        .ok_or_else(|| Error::Internal("twisted action left the weight lattice".into()))
}

/// w₀·λ = −λ − 2θ.
pub fn twisted_w0(lambda: &Weight) -> Weight {
    Weight(lambda.0.iter().map(|c| -c - 1).collect())
}

/// Outcome of Borel–Weil–Bott regularization.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bwb {
    /// λ+ρ lies on a wall; all cohomology vanishes.
    Zero,
    /// Cohomology is `sign · χ_weight`.
    Regular { sign: i64, weight: Weight },
}

/// Moves λ+ρ into the strictly dominant chamber, if possible.
pub fn bwb(lambda: &Weight) -> Bwb {
    let n = lambda.rank();
    let shifted = lambda.add(&rho(n));
    let mut abs: Vec<i64> = shifted.0.iter().map(|c| c.abs()).collect();
    abs.sort_unstable();
    if abs.first() == Some(&0) || abs.windows(2).any(|w| w[0] == w[1]) {
        return Bwb::Zero;
    }
    let (dom, w) = dominant_rep(&shifted);
    Bwb::Regular { sign: w.sgn(), weight: dom.sub(&rho(n)) }
}

fn to_q(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

/// Is `target` a nonnegative real combination of the positive roots of C_n?
/// Decided by exact phase-one simplex.
pub fn in_positive_cone(target: &[i64]) -> bool {
    let rd = RootDataC::new(target.len());
    let cols: Vec<Vec<BigRational>> = rd
        .positive_roots
        .iter()
        .map(|r| r.0.iter().map(|&c| to_q(c)).collect())
        .collect();
    let t: Vec<BigRational> = target.iter().map(|&c| to_q(c)).collect();
    lp::nonneg_combination(&cols, &t).is_some()
}

/// λ lies in the convex hull of the W-orbit of the dominant weight μ.
pub fn in_conv(lambda: &Weight, mu: &Weight) -> Result<bool> {
    require_dominant(mu)?;
    lambda.check_rank(mu.rank())?;
    let (dom, _) = dominant_rep(lambda);
    Ok(in_positive_cone(&mu.sub(&dom).0))
}

/// In the hull but not on the orbit of μ itself.
pub fn in_conv0(lambda: &Weight, mu: &Weight) -> Result<bool> {
    Ok(in_conv(lambda, mu)? && dominant_rep(lambda).0 != *mu)
}

fn tconv_parts(lambda: &Weight, mu: &Weight) -> Result<(Vec<i64>, Vec<i64>)> {
    lambda.check_rank(mu.rank())?;
    let (l, _) = dominant_rep_raw(&lambda.shifted_by_theta().0);
    let (m, _) = dominant_rep_raw(&mu.shifted_by_theta().0);
    Ok((l, m))
}

/// λ lies in the hull of the twisted orbit {w·μ}, i.e. λ+θ ∈ conv(W(μ+θ)).
pub fn in_tconv(lambda: &Weight, mu: &Weight) -> Result<bool> {
    let (l, m) = tconv_parts(lambda, mu)?;
    let diff: Vec<i64> = m.iter().zip(&l).map(|(a, b)| a - b).collect();
    Ok(in_positive_cone(&diff))
}

pub fn in_tconv0(lambda: &Weight, mu: &Weight) -> Result<bool> {
    let (l, m) = tconv_parts(lambda, mu)?;
    Ok(l != m && in_tconv(lambda, mu)?)
}

/// The set {w(μ)} in sorted order.
pub fn weyl_orbit(mu: &Weight) -> BTreeSet<Weight> {
    let mut abs: Vec<i64> = mu.0.iter().map(|c| c.abs()).collect();
    abs.sort_unstable();
    let mut out = BTreeSet::new();
    let mut used = vec![false; abs.len()];
    let mut cur = Vec::with_capacity(abs.len());
    orbit_rec(&abs, &mut used, &mut cur, &mut out);
    out
}

fn orbit_rec(abs: &[i64], used: &mut [bool], cur: &mut Vec<i64>, out: &mut BTreeSet<Weight>) {
    if cur.len() == abs.len() {
        out.insert(Weight(cur.clone()));
        return;
    }
    for i in 0..abs.len() {
        if used[i] || (i > 0 && abs[i] == abs[i - 1] && !used[i - 1]) {
            continue;
        }
        used[i] = true;
        cur.push(abs[i]);
        orbit_rec(abs, used, cur, out);
        if abs[i] != 0 {
            *cur.last_mut().unwrap() = -abs[i];
            orbit_rec(abs, used, cur, out);
        }
        cur.pop();
        used[i] = false;
    }
}

/// ⟨λ, α̌⟩ = 2(λ,α)/(α,α).
pub fn coroot_pairing(lambda: &Weight, alpha: &Weight) -> Result<Rational64> {
    lambda.check_rank(alpha.rank())?;
    let aa = alpha.dot(alpha);
    if aa == 0 {
        return Err(Error::ZeroRoot);
    }
    Ok(Rational64::new(2 * lambda.dot(alpha), aa))
}

/// Linearizes dominant weights compatibly with twisted hull inclusion:
/// sorted by ‖λ+θ‖², then lexicographically.
pub fn quasi_order(weights: &[Weight]) -> Result<Vec<Weight>> {
    for w in weights {
        require_dominant(w)?;
    }
    let mut out = weights.to_vec();
    out.sort_by(|a, b| {
        a.shifted_by_theta()
            .norm2()
            .cmp(&b.shifted_by_theta().norm2())
            .then_with(|| a.cmp(b))
    });
    Ok(out)
}

/// Σ_w sgn(w)·f(w(a) − b), skipping every w whose argument leaves the cone
/// of vectors with nonnegative partial sums (where `f` must vanish).
///
/// Elements are built one target slot at a time, so whole subtrees are
/// pruned as soon as a partial sum goes negative.
pub fn pruned_alternating_sum<F>(a: &[i64], b: &[i64], mut f: F) -> BigInt
where
    F: FnMut(&[i64]) -> BigInt,
{
    let n = a.len();
    assert_eq!(n, b.len(), "rank mismatch in alternating sum");
    let mut total = BigInt::from(0);
    if a.contains(&0) {
        // w and w∘flip(i) give the same argument with opposite signs.
        return total;
    }
    let mut used = vec![false; n];
    let mut arg = Vec::with_capacity(n);
    alt_rec(a, b, &mut used, &mut arg, 0, 1, &mut f, &mut total);
    total
}

#[allow(clippy::too_many_arguments)]
fn alt_rec<F>(
    a: &[i64],
    b: &[i64],
    used: &mut [bool],
    arg: &mut Vec<i64>,
    partial: i64,
    sign: i64,
    f: &mut F,
    total: &mut BigInt,
) where
    F: FnMut(&[i64]) -> BigInt,
{
    let k = arg.len();
    if k == a.len() {
        let v = f(arg);
        if sign > 0 {
            *total += v;
        } else {
            *total -= v;
        }
        return;
    }
    for src in 0..a.len() {
        if used[src] {
            continue;
        }
        // Sources already placed at earlier targets that exceed `src` are inversions.
        let inv = used[src + 1..].iter().filter(|&&u| u).count();
        let perm_sign = if inv % 2 == 0 { sign } else { -sign };
        for s in [1i64, -1] {
            let d = s * a[src] - b[k];
            if partial + d < 0 {
                continue;
            }
            used[src] = true;
            arg.push(d);
            alt_rec(a, b, used, arg, partial + d, perm_sign * s, f, total);
            arg.pop();
            used[src] = false;
        }
    }
}

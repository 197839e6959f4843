//! Points (v, x) of the exotic nilpotent cone and their orbits.
//!
//! A point is a vector v of the 2n-dimensional symplectic space 𝕍 and a
//! nilpotent x with ⟨xu, u⟩ = 0 for all u (equivalently xᵀΩ = Ωx for the
//! Gram matrix Ω). Its orbit is the bipartition (μ, ν) read off from the
//! Jordan types of x on E^x v (= μ∪μ) and on 𝕍/E^x v (= ν∪ν), where E^x is
//! the centralizer of x in End(𝕍). Classification only uses Jordan data,
//! never Ω.

use std::collections::{BTreeMap, HashSet};

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipartitions::{filtration_dims, Bipartition, FiltrationProfile, Partition};
use crate::error::{Error, Result};
use crate::linalg::{q, qr, Matrix, Subspace, Q};

/// 𝕍 with its symplectic Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymplecticSpace {
    n: usize,
    omega: Matrix,
}

impl SymplecticSpace {
    /// Validates that `omega` is 2n×2n, antisymmetric and invertible.
    pub fn new(omega: Matrix) -> Result<Self> {
        if !omega.is_square() || omega.rows() % 2 == 1 {
            return Err(Error::InvalidForm(format!("{}x{} is not even square", omega.rows(), omega.cols())));
        }
        if omega.transpose() != -&omega {
            return Err(Error::InvalidForm("not antisymmetric".into()));
        }
        if omega.determinant().is_zero() {
            return Err(Error::InvalidForm("degenerate".into()));
        }
        Ok(SymplecticSpace { n: omega.rows() / 2, omega })
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    pub fn omega(&self) -> &Matrix {
        &self.omega
    }

    /// ⟨u, w⟩ = uᵀΩw.
    pub fn pairing(&self, u: &[Q], w: &[Q]) -> Q {
        let ow = self.omega.mul_vec(w);
        u.iter().zip(&ow).map(|(a, b)| a * b).sum()
    }

    /// gᵀΩg = Ω.
    pub fn preserves(&self, g: &Matrix) -> bool {
        &(&g.transpose() * &self.omega) * g == self.omega
    }

    /// x is self-adjoint for the form, i.e. ⟨xu, u⟩ = 0 for all u.
    pub fn is_exotic_endomorphism(&self, x: &Matrix) -> bool {
        &x.transpose() * &self.omega == &self.omega * x
    }
}

/// The antidiagonal form Ω[i, 2n+1−i] = 1 for i ≤ n and −1 for i > n (1-based).
pub fn standard_form(n: usize) -> SymplecticSpace {
    let m = 2 * n;
    let mut omega = Matrix::zeros(m, m);
    for i in 0..m {
        omega[(i, m - 1 - i)] = if i < n { q(1) } else { q(-1) };
    }
    SymplecticSpace { n, omega }
}

/// A candidate point (v, x). The form is optional because classification
/// does not need it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExoticPair {
    pub space: Option<SymplecticSpace>,
    pub v: Vec<Q>,
    pub x: Matrix,
}

impl ExoticPair {
    pub fn new(space: Option<SymplecticSpace>, v: Vec<Q>, x: Matrix) -> Result<Self> {
        if !x.is_square() || x.rows() % 2 == 1 {
            return Err(Error::Dimension(format!("x is {}x{}, expected 2n×2n", x.rows(), x.cols())));
        }
        if v.len() != x.rows() {
            return Err(Error::Dimension(format!("v has length {}, x is {}x{}", v.len(), x.rows(), x.cols())));
        }
        if let Some(s) = &space {
            if s.dim() != x.rows() {
                return Err(Error::Dimension(format!("form has dimension {}, x is {}x{}", s.dim(), x.rows(), x.cols())));
            }
        }
        Ok(ExoticPair { space, v, x })
    }

    pub fn dim(&self) -> usize {
        self.x.rows()
    }

    pub fn rank(&self) -> usize {
        self.dim() / 2
    }

    /// The pair with its form, solving for one when none was given.
    pub fn with_form(&self) -> Result<ExoticPair> {
        if self.space.is_some() {
            return Ok(self.clone());
        }
        let space = solve_form(&self.x)
            .ok_or_else(|| Error::InvalidForm("no invertible form makes x self-adjoint".into()))?;
        Ok(ExoticPair { space: Some(space), ..self.clone() })
    }

    /// (g v, g x g⁻¹).
    pub fn conjugate(&self, g: &Matrix, g_inv: &Matrix) -> ExoticPair {
        ExoticPair { space: self.space.clone(), v: g.mul_vec(&self.v), x: &(g * &self.x) * g_inv }
    }
}

pub fn is_nilpotent(x: &Matrix) -> bool {
    let mut p = x.clone();
    for _ in 0..x.rows() {
        if p.is_zero() {
            return true;
        }
        p = &p * x;
    }
    p.is_zero()
}

/// Finds an invertible antisymmetric Ω with xᵀΩ = Ωx, if the solution
/// space contains one. Candidates are small-integer combinations of a
/// nullspace basis drawn from a fixed seed, so the answer is deterministic.
pub fn solve_form(x: &Matrix) -> Option<SymplecticSpace> {
    let m = x.rows();
    if m % 2 == 1 {
        return None;
    }
    // Unknowns: Ω[i][j] for i < j.
    let mut index = vec![vec![None; m]; m];
    let mut count = 0;
    for i in 0..m {
        for j in i + 1..m {
            index[i][j] = Some(count);
            count += 1;
        }
    }
    let coeff = |i: usize, j: usize| -> Option<(usize, i64)> {
        if i < j {
            index[i][j].map(|k| (k, 1))
        } else if i > j {
            index[j][i].map(|k| (k, -1))
        } else {
            None
        }
    };
    // (xᵀΩ − Ωx)[i][j] = Σ_k x[k][i]Ω[k][j] − Ω[i][k]x[k][j].
    let mut rows = Vec::new();
    for i in 0..m {
        for j in 0..m {
            let mut row = vec![Q::zero(); count];
            for k in 0..m {
                if let Some((idx, s)) = coeff(k, j) {
                    row[idx] += &x[(k, i)] * q(s);
                }
                if let Some((idx, s)) = coeff(i, k) {
                    row[idx] -= &x[(k, j)] * q(s);
                }
            }
            if row.iter().any(|c| !c.is_zero()) {
                rows.push(row);
            }
        }
    }
    let basis = if rows.is_empty() {
        Matrix::identity(count).to_rows()
    } else {
        Matrix::from_rows(rows).nullspace()
    };
    if basis.is_empty() {
        return None;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for attempt in 0..64 {
        let mut vals = vec![Q::zero(); count];
        for (t, b) in basis.iter().enumerate() {
            let c = if attempt == 0 { q(t as i64 + 1) } else { q(rng.gen_range(-3..=3)) };
            if c.is_zero() {
                continue;
            }
            for (v, e) in vals.iter_mut().zip(b) {
                if !e.is_zero() {
                    *v += &c * e;
                }
            }
        }
        let mut omega = Matrix::zeros(m, m);
        for i in 0..m {
            for j in i + 1..m {
                let k = index[i][j].unwrap();
                omega[(i, j)] = vals[k].clone();
                omega[(j, i)] = -vals[k].clone();
            }
        }
        if !omega.determinant().is_zero() {
            return SymplecticSpace::new(omega).ok();
        }
    }
    None
}

/// x nilpotent and, with the pair's form (solved for if absent), self-adjoint.
pub fn in_exotic_cone(pair: &ExoticPair) -> bool {
    if !is_nilpotent(&pair.x) {
        return false;
    }
    match &pair.space {
        Some(s) => s.is_exotic_endomorphism(&pair.x),
        None => solve_form(&pair.x).is_some(),
    }
}

/// Basis of the centralizer {y : xy = yx}.
pub fn centralizer_basis(x: &Matrix) -> Vec<Matrix> {
    let m = x.rows();
    let var = |i: usize, j: usize| i * m + j;
    let mut commutator = Matrix::zeros(m * m, m * m);
    // (xy − yx)[i][j] = Σ_k x[i][k] y[k][j] − y[i][k] x[k][j].
    for i in 0..m {
        for j in 0..m {
            let row = var(i, j);
            for k in 0..m {
                if !x[(i, k)].is_zero() {
                    commutator[(row, var(k, j))] += &x[(i, k)];
                }
                if !x[(k, j)].is_zero() {
                    commutator[(row, var(i, k))] -= &x[(k, j)];
                }
            }
        }
    }
    commutator
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(m).map(|c| c.to_vec()).collect()))
        .collect()
}

/// E^x v = span{y v : y ∈ centralizer of x}.
pub fn exv_module(pair: &ExoticPair) -> Subspace {
    let images: Vec<Vec<Q>> = centralizer_basis(&pair.x).iter().map(|y| y.mul_vec(&pair.v)).collect();
    Subspace::span(pair.dim(), &images)
}

/// Where to read a Jordan type.
#[derive(Debug, Clone, Copy)]
pub enum Domain<'a> {
    Full,
    Sub(&'a Subspace),
    Quotient(&'a Subspace),
}

/// Jordan type of nilpotent x on 𝕍, on an x-stable subspace, or on the
/// quotient by one. Uses `#parts ≥ k = rank(x^{k−1}) − rank(x^k)`.
pub fn jordan_type(x: &Matrix, domain: Domain<'_>) -> Result<Partition> {
    let m = x.rows();
    if let Domain::Sub(w) | Domain::Quotient(w) = domain {
        if w.ambient() != m {
            return Err(Error::Dimension(format!("subspace of {} in a {m}-dimensional space", w.ambient())));
        }
        if !w.is_stable_under(x) {
            return Err(Error::NotStable);
        }
    }
    let rank_of = |power: &Matrix| -> usize {
        match domain {
            Domain::Full => power.rank(),
            Domain::Sub(w) => w.image(power).dim(),
            Domain::Quotient(w) => Subspace::column_space(power).sum(w).dim() - w.dim(),
        }
    };
    let mut ranks = vec![rank_of(&Matrix::identity(m))];
    let mut p = Matrix::identity(m);
    while *ranks.last().unwrap() > 0 {
        if ranks.len() > m + 1 {
            return Err(Error::NotNilpotent);
        }
        p = &p * x;
        let r = rank_of(&p);
        if r == *ranks.last().unwrap() {
            return Err(Error::NotNilpotent);
        }
        ranks.push(r);
    }
    // at_least[k] = number of blocks of size ≥ k+1.
    let at_least: Vec<usize> = ranks.windows(2).map(|w| w[0] - w[1]).collect();
    let mut parts = Vec::new();
    for (k, &c) in at_least.iter().enumerate() {
        let next = at_least.get(k + 1).copied().unwrap_or(0);
        for _ in 0..c - next {
            parts.push(k + 1);
        }
    }
    Ok(Partition::from_unsorted(parts))
}

/// Inverse of λ ↦ λ∪λ.
pub fn de_double(lambda: &Partition) -> Result<Partition> {
    let parts = lambda.parts();
    if parts.len() % 2 == 1 || parts.chunks(2).any(|c| c[0] != c[1]) {
        return Err(Error::NotDoubled(parts.to_vec()));
    }
    Ok(Partition::from_unsorted(parts.iter().step_by(2).copied().collect()))
}

/// The bipartition indexing the orbit of (v, x).
pub fn orbit_of(pair: &ExoticPair) -> Result<Bipartition> {
    if !is_nilpotent(&pair.x) {
        return Err(Error::NotNilpotent);
    }
    if let Some(s) = &pair.space {
        if !s.is_exotic_endomorphism(&pair.x) {
            return Err(Error::InvalidForm("x is not self-adjoint for the supplied form".into()));
        }
    }
    let w = exv_module(pair);
    let sub = jordan_type(&pair.x, Domain::Sub(&w))?;
    let quot = jordan_type(&pair.x, Domain::Quotient(&w))?;
    Ok(Bipartition::new(de_double(&sub)?, de_double(&quot)?))
}

/// A point of the orbit (μ, ν).
///
/// For each i there are two Jordan blocks a, b of size m = μ_i+ν_i paired
/// by ⟨a_k, b_{m+1−k}⟩ = 1, and v picks up a_{μ_i} (a vector of x-height
/// μ_i in block a). The result is classified again before it is returned.
pub fn representative(b: &Bipartition) -> Result<ExoticPair> {
    let n = b.size();
    let dim = 2 * n;
    let mut x = Matrix::zeros(dim, dim);
    let mut omega = Matrix::zeros(dim, dim);
    let mut v = vec![Q::zero(); dim];
    let mut offset = 0;
    let rows = b.mu.len().max(b.nu.len());
    for i in 0..rows {
        let (mu_i, nu_i) = (b.mu.part(i), b.nu.part(i));
        let m = mu_i + nu_i;
        if m == 0 {
            continue;
        }
        // a_k at offset + k − 1, b_k at offset + m + k − 1 (k = 1..m).
        let a = |k: usize| offset + k - 1;
        let bb = |k: usize| offset + m + k - 1;
        for k in 1..m {
            x[(a(k), a(k + 1))] = q(1);
            x[(bb(k), bb(k + 1))] = q(1);
        }
        for k in 1..=m {
            omega[(a(k), bb(m + 1 - k))] = q(1);
            omega[(bb(m + 1 - k), a(k))] = q(-1);
        }
        if mu_i > 0 {
            v[a(mu_i)] = q(1);
        }
        offset += 2 * m;
    }
    let space = SymplecticSpace::new(omega).map_err(|e| Error::SelfCheckFailed(e.to_string()))?;
    let pair = ExoticPair { space: Some(space), v, x };
    if !in_exotic_cone(&pair) {
        return Err(Error::SelfCheckFailed(format!("representative of {b} is not in the exotic cone")));
    }
    match orbit_of(&pair) {
        Ok(got) if got == *b => Ok(pair),
        Ok(got) => Err(Error::SelfCheckFailed(format!("built {b}, classified as {got}"))),
        Err(e) => Err(Error::SelfCheckFailed(format!("built {b}, classifier failed: {e}"))),
    }
}

/// Symplectic complement of a subspace.
pub fn perp(subspace: &Subspace, space: &SymplecticSpace) -> Subspace {
    subspace.orthogonal(space.omega())
}

/// Subspaces V_{≥a}, stored over a finite range of a. Below the range the
/// filtration is 𝕍, above it 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsotropicFiltration {
    pub space: SymplecticSpace,
    pub subspaces: BTreeMap<i64, Subspace>,
}

impl IsotropicFiltration {
    pub fn get(&self, a: i64) -> Subspace {
        let dim = self.space.dim();
        if let Some(s) = self.subspaces.get(&a) {
            return s.clone();
        }
        match self.subspaces.keys().next() {
            Some(&lo) if a < lo => Subspace::full(dim),
            None if a <= 0 => Subspace::full(dim),
            _ => Subspace::zero(dim),
        }
    }

    fn range(&self) -> (i64, i64) {
        let lo = self.subspaces.keys().next().copied().unwrap_or(0);
        let hi = self.subspaces.keys().next_back().copied().unwrap_or(0);
        (lo, hi)
    }

    /// Builds V_{≥a} for all a in the profile range from the positive part,
    /// filling a ≤ 0 by V_{≥a} = (V_{≥1−a})^⊥.
    pub fn from_positive(space: &SymplecticSpace, profile: &FiltrationProfile, positive: &BTreeMap<i64, Subspace>) -> Self {
        let dim = space.dim();
        let (lo, hi) = profile.range();
        let pos = |a: i64| -> Subspace {
            positive.get(&a).cloned().unwrap_or_else(|| if a <= 0 { Subspace::full(dim) } else { Subspace::zero(dim) })
        };
        let mut subspaces = BTreeMap::new();
        for a in lo..=hi {
            let s = if a >= 1 { pos(a) } else { perp(&pos(1 - a), space) };
            subspaces.insert(a, s);
        }
        IsotropicFiltration { space: space.clone(), subspaces }
    }
}

/// Checks that `filt` is a (μ,ν)-filtration C-adapted to the pair:
/// nested, perp-dual, with the dimensions of `filtration_dims(b)`,
/// v ∈ V_{≥1} and x V_{≥a} ⊆ V_{≥a+2}.
pub fn verify_adapted(filt: &IsotropicFiltration, pair: &ExoticPair, b: &Bipartition) -> Result<bool> {
    let space = &filt.space;
    if space.dim() != pair.dim() || b.size() != pair.rank() {
        return Ok(false);
    }
    let profile = filtration_dims(b)?;
    let (plo, phi) = profile.range();
    let (flo, fhi) = filt.range();
    let lo = plo.min(flo) - 2;
    let hi = phi.max(fhi) + 2;
    let spaces: BTreeMap<i64, Subspace> = (lo..=hi + 2).map(|a| (a, filt.get(a))).collect();
    for a in lo..=hi {
        let cur = &spaces[&a];
        if cur.dim() != profile.dim(a) {
            return Ok(false);
        }
        if a > lo && !cur.is_subspace_of(&spaces[&(a - 1)]) {
            return Ok(false);
        }
        if perp(&filt.get(1 - a), space) != *cur {
            return Ok(false);
        }
        if !cur.image(&pair.x).is_subspace_of(&spaces[&(a + 2)]) {
            return Ok(false);
        }
    }
    Ok(spaces[&1].contains(&pair.v))
}

/// Default closure depth for [`adapted_filtration`].
pub const DEFAULT_CLOSURE_DEPTH: usize = 4;

/// Pool size at which the closure stops growing.
const POOL_CAP: usize = 3000;

/// Searches for the unique C-adapted filtration of the pair.
///
/// Candidate subspaces start from 0, 𝕍, ℂv, ℂ[x]v, Im x^k, Ker x^k and
/// E^x v and are closed under sum, intersection, perp, image and preimage
/// under x, one generation per unit of depth. After each generation every
/// assembly of candidates with the right dimensions is checked with
/// [`verify_adapted`].
pub fn adapted_filtration(pair: &ExoticPair, depth: usize) -> Result<IsotropicFiltration> {
    let pair = pair.with_form()?;
    let space = pair.space.clone().expect("form attached");
    let b = orbit_of(&pair)?;
    let profile = filtration_dims(&b)?;
    let dim = pair.dim();
    let x = &pair.x;

    // Positive indices that need a proper nonzero subspace.
    let needed: Vec<i64> = (1..=profile.range().1).filter(|&a| profile.dim(a) > 0).collect();
    if needed.is_empty() {
        let filt = IsotropicFiltration::from_positive(&space, &profile, &BTreeMap::new());
        return if verify_adapted(&filt, &pair, &b)? { Ok(filt) } else { Err(Error::NotFound { depth: 0 }) };
    }

    let mut pool: Vec<Subspace> = Vec::new();
    let mut seen: HashSet<Subspace> = HashSet::new();
    let mut push = |s: Subspace, pool: &mut Vec<Subspace>| {
        if pool.len() < POOL_CAP && seen.insert(s.clone()) {
            pool.push(s);
        }
    };
    push(Subspace::zero(dim), &mut pool);
    push(Subspace::full(dim), &mut pool);
    push(Subspace::span(dim, std::slice::from_ref(&pair.v)), &mut pool);
    let mut krylov = vec![pair.v.clone()];
    for _ in 1..dim {
        let next = x.mul_vec(krylov.last().unwrap());
        krylov.push(next);
    }
    push(Subspace::span(dim, &krylov), &mut pool);
    let mut power = Matrix::identity(dim);
    for _ in 1..=dim {
        power = &power * x;
        push(Subspace::column_space(&power), &mut pool);
        push(Subspace::zero(dim).preimage(&power), &mut pool);
        if power.is_zero() {
            break;
        }
    }
    push(exv_module(&pair), &mut pool);

    let mut frontier_start = 0;
    for level in 0..=depth {
        let found = assemble(&pool, &needed, &profile, &space, &pair, &b)?;
        match found.len() {
            0 => {}
            1 => return Ok(found.into_iter().next().unwrap()),
            k => return Err(Error::NotUnique(k)),
        }
        if level == depth || pool.len() >= POOL_CAP {
            break;
        }
        let old_len = pool.len();
        let mut fresh = Vec::new();
        for i in frontier_start..old_len {
            let s = pool[i].clone();
            fresh.push(perp(&s, &space));
            fresh.push(s.image(x));
            fresh.push(s.preimage(x));
            for t in &pool[..old_len] {
                fresh.push(s.sum(t));
                fresh.push(s.intersection(t));
            }
        }
        for s in fresh {
            push(s, &mut pool);
        }
        frontier_start = old_len;
        if pool.len() == old_len {
            break;
        }
    }
    Err(Error::NotFound { depth })
}

fn assemble(
    pool: &[Subspace],
    needed: &[i64],
    profile: &FiltrationProfile,
    space: &SymplecticSpace,
    pair: &ExoticPair,
    b: &Bipartition,
) -> Result<Vec<IsotropicFiltration>> {
    // Candidates per index: right dimension, x-stable, isotropic.
    let candidates: Vec<Vec<&Subspace>> = needed
        .iter()
        .map(|&a| {
            pool.iter()
                .filter(|s| s.dim() == profile.dim(a) && s.is_stable_under(&pair.x) && s.is_subspace_of(&perp(s, space)))
                .collect()
        })
        .collect();
    if candidates.iter().any(Vec::is_empty) {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut chosen: BTreeMap<i64, Subspace> = BTreeMap::new();
    assemble_rec(needed.len(), needed, &candidates, &mut chosen, profile, space, pair, b, &mut out)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn assemble_rec(
    k: usize,
    needed: &[i64],
    candidates: &[Vec<&Subspace>],
    chosen: &mut BTreeMap<i64, Subspace>,
    profile: &FiltrationProfile,
    space: &SymplecticSpace,
    pair: &ExoticPair,
    b: &Bipartition,
    out: &mut Vec<IsotropicFiltration>,
) -> Result<()> {
    // Fill from the largest index down so nesting can be checked eagerly.
    if k == 0 {
        let filt = IsotropicFiltration::from_positive(space, profile, chosen);
        if verify_adapted(&filt, pair, b)? && !out.contains(&filt) {
            out.push(filt);
        }
        return Ok(());
    }
    let a = needed[k - 1];
    let dim = pair.dim();
    let above = |c: i64| chosen.get(&c).cloned().unwrap_or_else(|| Subspace::zero(dim));
    let (next, next2) = (above(a + 1), above(a + 2));
    for cand in &candidates[k - 1] {
        if !next.is_subspace_of(cand) || !cand.image(&pair.x).is_subspace_of(&next2) {
            continue;
        }
        if a == 1 && !cand.contains(&pair.v) {
            continue;
        }
        chosen.insert(a, (*cand).clone());
        assemble_rec(k - 1, needed, candidates, chosen, profile, space, pair, b, out)?;
        chosen.remove(&a);
    }
    Ok(())
}

/// Transvection w ↦ w + ⟨w,u⟩u as a matrix: I + u(Ωu)ᵀ.
pub fn transvection(space: &SymplecticSpace, u: &[Q]) -> Matrix {
    let m = space.dim();
    // ⟨w, u⟩ = wᵀΩu = (Ωu)·w.
    let ou = space.omega().mul_vec(u);
    let mut t = Matrix::identity(m);
    for i in 0..m {
        for j in 0..m {
            if !u[i].is_zero() && !ou[j].is_zero() {
                t[(i, j)] += &u[i] * &ou[j];
            }
        }
    }
    t
}

/// A symplectic g and its inverse, built from `factors` random transvections
/// with small rational vectors. Deterministic in the seed.
pub fn random_symplectic_with(space: &SymplecticSpace, seed: u64, factors: usize) -> (Matrix, Matrix) {
    let m = space.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = Matrix::identity(m);
    let mut g_inv = Matrix::identity(m);
    for _ in 0..factors {
        let u: Vec<Q> = (0..m)
            .map(|_| {
                let num = rng.gen_range(-2i64..=2);
                let den = if rng.gen_bool(0.25) { 2 } else { 1 };
                qr(num, den)
            })
            .collect();
        let t = transvection(space, &u);
        // w ↦ w − ⟨w,u⟩u.
        let t_inv = &(&Matrix::identity(m) + &Matrix::identity(m)) - &t;
        g = &t * &g;
        g_inv = &g_inv * &t_inv;
    }
    debug_assert_eq!(&g * &g_inv, Matrix::identity(m));
    (g, g_inv)
}

/// [`random_symplectic_with`] using five transvections; returns g only.
pub fn random_symplectic(space: &SymplecticSpace, seed: u64) -> Matrix {
    random_symplectic_with(space, seed, 5).0
}

/// The 12×12 point of the orbit ((1,1,1),(3)): x has Jordan blocks on
/// e1..e4 and e9..e12 and is zero on e5..e8, v = e1 + e5 + e6.
pub fn worked_example() -> ExoticPair {
    let m = 12;
    let mut x = Matrix::zeros(m, m);
    for (r, c) in [(0, 1), (1, 2), (2, 3), (8, 9), (9, 10), (10, 11)] {
        x[(r, c)] = Q::one();
    }
    let mut v = vec![Q::zero(); m];
    for i in [0, 4, 5] {
        v[i] = Q::one();
    }
    ExoticPair { space: None, v, x }
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

    fn jordan_block(m: usize) -> Matrix {
        let mut x = Matrix::zeros(m, m);
        for i in 0..m.saturating_sub(1) {
            x[(i, i + 1)] = q(1);
        }
        x
    }

    #[test]
    fn standard_form_is_symplectic() {
        let s = standard_form(1);
        assert_eq!(s.omega()[(0, 1)], q(1));
        assert_eq!(s.omega()[(1, 0)], q(-1));
        for n in 1..5 {
            let s = standard_form(n);
            assert_eq!(s.omega().transpose(), -s.omega());
            assert_eq!(s.omega().determinant(), q(1));
            assert!(SymplecticSpace::new(s.omega().clone()).is_ok());
        }
    }

    #[test]
    fn cone_membership() {
        let s = standard_form(1);
        let zero = ExoticPair::new(Some(s.clone()), vec![q(3), q(1)], Matrix::zeros(2, 2)).unwrap();
        assert!(in_exotic_cone(&zero));
        let nonnil = ExoticPair::new(Some(s), vec![q(0), q(0)], Matrix::identity(2)).unwrap();
        assert!(!in_exotic_cone(&nonnil));
    }

    #[test]
    fn centralizer_dimensions() {
        assert_eq!(centralizer_basis(&Matrix::zeros(2, 2)).len(), 4);
        for m in 1..6 {
            assert_eq!(centralizer_basis(&jordan_block(m)).len(), m);
        }
    }

    #[test]
    fn exv_edge_cases() {
        let x = Matrix::zeros(2, 2);
        let pair = ExoticPair::new(None, vec![q(0), q(0)], x.clone()).unwrap();
        assert_eq!(exv_module(&pair).dim(), 0);
        let pair = ExoticPair::new(None, vec![q(1), q(0)], x).unwrap();
        assert_eq!(exv_module(&pair).dim(), 2);
    }

    #[test]
    fn jordan_types() {
        assert_eq!(jordan_type(&jordan_block(2), Domain::Full).unwrap(), p(&[2]));
        let x = jordan_block(3);
        let line = Subspace::span(3, &[vec![q(0), q(1), q(0)]]);
        assert_eq!(jordan_type(&x, Domain::Sub(&line)), Err(Error::NotStable));
        assert_eq!(jordan_type(&Matrix::identity(2), Domain::Full), Err(Error::NotNilpotent));
    }

    #[test]
    fn de_doubling() {
        assert_eq!(de_double(&p(&[4, 4, 1, 1])).unwrap(), p(&[4, 1]));
        assert_eq!(de_double(&p(&[1, 1, 1, 1, 1, 1])).unwrap(), p(&[1, 1, 1]));
        assert_eq!(de_double(&p(&[3, 2])), Err(Error::NotDoubled(vec![3, 2])));
        assert_eq!(de_double(&p(&[2, 2, 2])), Err(Error::NotDoubled(vec![2, 2, 2])));
    }

    #[test]
    fn rank_one_orbits() {
        let x = Matrix::zeros(2, 2);
        let pair = ExoticPair::new(None, vec![q(0), q(1)], x.clone()).unwrap();
        assert_eq!(orbit_of(&pair).unwrap(), bp(&[1], &[]));
        let pair = ExoticPair::new(None, vec![q(0), q(0)], x).unwrap();
        assert_eq!(orbit_of(&pair).unwrap(), bp(&[], &[1]));
    }

    #[test]
    fn representatives_small() {
        let r = representative(&bp(&[1], &[])).unwrap();
        assert!(r.x.is_zero());
        assert!(r.v.iter().any(|c| !c.is_zero()));
        let r = representative(&bp(&[], &[1])).unwrap();
        assert!(r.x.is_zero());
        assert!(r.v.iter().all(Zero::is_zero));
        let r = representative(&bp(&[1, 1, 1], &[3])).unwrap();
        assert_eq!(r.dim(), 12);
    }

    #[test]
    fn perp_examples() {
        let s = standard_form(1);
        assert_eq!(perp(&Subspace::zero(2), &s), Subspace::full(2));
        assert_eq!(perp(&Subspace::full(2), &s), Subspace::zero(2));
        let e1 = Subspace::span(2, &[vec![q(1), q(0)]]);
        assert_eq!(perp(&e1, &s), e1);
    }

    #[test]
    fn transvections_preserve_the_form() {
        for n in 1..4 {
            let s = standard_form(n);
            for seed in 0..5 {
                let (g, g_inv) = random_symplectic_with(&s, seed, 5);
                assert!(s.preserves(&g));
                assert_eq!(&g * &g_inv, Matrix::identity(2 * n));
            }
            let (g, _) = random_symplectic_with(&s, 1, 0);
            assert_eq!(g, Matrix::identity(2 * n));
        }
    }

    #[test]
    fn adapted_small_cases() {
        // (1)|(): V≥1 = ℂv and V≥0 = perp(ℂv) = ℂv.
        let r = representative(&bp(&[1], &[])).unwrap();
        let f = adapted_filtration(&r, DEFAULT_CLOSURE_DEPTH).unwrap();
        let line = Subspace::span(2, std::slice::from_ref(&r.v));
        assert_eq!(f.get(1), line);
        assert_eq!(f.get(0), line);
        assert_eq!(f.get(-1), Subspace::full(2));
        // ()|(1): λ = (1,1), V≥1 = 0 and V≥0 = 𝕍.
        let r = representative(&bp(&[], &[1])).unwrap();
        let f = adapted_filtration(&r, DEFAULT_CLOSURE_DEPTH).unwrap();
        assert_eq!(f.get(1).dim(), 0);
        assert_eq!(f.get(0).dim(), 2);
    }
}

//! Composition combinatorics: spectral vectors, hook statistics, the
//! dominance orders, the successor order and its minimal elements `c_I(η)`.
//!
//! Public indices (positions, index sets, permutation images) are 1-based.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::algebra::{Coeff, ParamScalar, Params, Symbolic};
use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<u32>,
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Composition> {
        if parts.is_empty() {
            return invalid("a composition needs at least one part");
        }
        Ok(Composition { parts })
    }

    pub fn zeros(n: usize) -> Composition {
        Composition { parts: vec![0; n] }
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.len()
    }

    pub fn modulus(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Part at 1-based position `i`.
    pub fn part(&self, i: usize) -> u32 {
        self.parts[i - 1]
    }

    pub fn is_partition(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] >= w[1])
    }

    /// `η⁺`, the parts sorted in decreasing order.
    pub fn sorted(&self) -> Composition {
        let mut p = self.parts.clone();
        p.sort_unstable_by(|a, b| b.cmp(a));
        Composition { parts: p }
    }

    /// `s_i η` for 1-based `i`.
    pub fn swapped(&self, i: usize) -> Composition {
        let mut p = self.parts.clone();
        p.swap(i - 1, i);
        Composition { parts: p }
    }

    /// `Φη = (η_2, …, η_n, η_1 + 1)`.
    pub fn raised(&self) -> Composition {
        let mut p: Vec<u32> = self.parts[1..].to_vec();
        p.push(self.parts[0] + 1);
        Composition { parts: p }
    }

    /// `η + (1^n)`.
    pub fn plus_ones(&self) -> Composition {
        Composition { parts: self.parts.iter().map(|x| x + 1).collect() }
    }

    pub(crate) fn to_exponents(&self) -> crate::algebra::Monomial {
        self.parts.iter().map(|&x| x as i32).collect()
    }

    pub(crate) fn from_exponents(m: &[i32]) -> Option<Composition> {
        if m.iter().any(|&e| e < 0) {
            return None;
        }
        Some(Composition { parts: m.iter().map(|&e| e as u32).collect() })
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Composition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Composition> {
        let parts: std::result::Result<Vec<u32>, _> = s.split(',').map(|x| x.trim().parse::<u32>()).collect();
        match parts {
            Ok(p) => Composition::new(p),
            Err(_) => Err(Error::Parse(format!("not a composition: {s:?} (expected e.g. 1,0,2)"))),
        }
    }
}

/// All compositions with `n` parts and modulus `m`, in lexicographic order.
pub fn compositions(n: usize, m: u32) -> Vec<Composition> {
    fn rec(n: usize, m: u32, cur: &mut Vec<u32>, out: &mut Vec<Composition>) {
        if cur.len() + 1 == n {
            cur.push(m);
            out.push(Composition { parts: cur.clone() });
            cur.pop();
            return;
        }
        for x in 0..=m {
            cur.push(x);
            rec(n, m - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, m, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All compositions with `n` parts and modulus at most `m`.
pub fn compositions_up_to(n: usize, m: u32) -> Vec<Composition> {
    (0..=m).flat_map(|k| compositions(n, k)).collect()
}

/// All partitions with at most `n` parts (padded with zeros) of modulus `m`.
pub fn partitions(n: usize, m: u32) -> Vec<Composition> {
    compositions(n, m).into_iter().filter(|c| c.is_partition()).collect()
}

/// `l′_η(i) = #{j<i: η_j ≥ η_i} + #{j>i: η_j > η_i}`.
pub fn leg_colength_vector(eta: &Composition) -> Vec<u32> {
    let p = &eta.parts;
    (0..p.len())
        .map(|i| {
            let left = p[..i].iter().filter(|&&x| x >= p[i]).count();
            let right = p[i + 1..].iter().filter(|&&x| x > p[i]).count();
            (left + right) as u32
        })
        .collect()
}

/// The point `η̄`, stored as exponent pairs: entry i is `q^a t^b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectralVector {
    exps: Vec<(i64, i64)>,
}

impl SpectralVector {
    pub fn exponents(&self) -> &[(i64, i64)] {
        &self.exps
    }

    /// Exponent pair of the 1-based entry `i`.
    pub fn exp(&self, i: usize) -> (i64, i64) {
        self.exps[i - 1]
    }

    pub fn values<P: Params>(&self, params: &P) -> Result<Vec<P::F>> {
        self.exps.iter().map(|&(a, b)| params.monomial(a, b)).collect()
    }

    pub fn symbolic(&self) -> Vec<ParamScalar> {
        self.values(&Symbolic::generic()).expect("symbolic monomials never fail")
    }

    /// `Σ_{|S|=r} ∏_{i∈S} η̄_i`.
    pub fn elementary<P: Params>(&self, params: &P, r: usize) -> Result<P::F> {
        let vals = self.values(params)?;
        // e_0..e_r by the usual one-variable-at-a-time recurrence
        let mut e = vec![P::F::zero(); r + 1];
        e[0] = P::F::one();
        for v in &vals {
            for k in (1..=r).rev() {
                let add = e[k - 1].clone() * v;
                e[k] = e[k].clone() + &add;
            }
        }
        Ok(e.swap_remove(r))
    }
}

pub fn spectral_vector(eta: &Composition) -> SpectralVector {
    let lc = leg_colength_vector(eta);
    SpectralVector { exps: eta.parts.iter().zip(lc).map(|(&p, l)| (p as i64, -(l as i64))).collect() }
}

/// Arm, arm colength, leg and leg colength of the node (i, j), 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HookNode {
    pub i: usize,
    pub j: u32,
    pub arm: u32,
    pub arm_co: u32,
    pub leg: u32,
    pub leg_co: u32,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HookTable {
    pub n: usize,
    pub nodes: Vec<HookNode>,
    pub d: ParamScalar,
    pub d_prime: ParamScalar,
    pub e: ParamScalar,
    pub e_prime: ParamScalar,
}

/// Which of the four hook products.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum HookProduct {
    D,
    DPrime,
    E,
    EPrime,
}

impl HookTable {
    fn factor_exps(&self, node: &HookNode, which: HookProduct) -> (i64, i64) {
        let n = self.n as i64;
        match which {
            HookProduct::D => (node.arm as i64 + 1, node.leg as i64 + 1),
            HookProduct::DPrime => (node.arm as i64 + 1, node.leg as i64),
            HookProduct::E => (node.arm_co as i64 + 1, n - node.leg_co as i64),
            HookProduct::EPrime => (node.arm_co as i64 + 1, n - 1 - node.leg_co as i64),
        }
    }

    /// `∏ (1 - q^a t^b)` over the nodes, in the field of `params`.
    pub fn product<P: Params>(&self, params: &P, which: HookProduct) -> Result<P::F> {
        let mut acc = P::F::one();
        for node in &self.nodes {
            let (a, b) = self.factor_exps(node, which);
            acc = acc * &(P::F::one() - params.monomial(a, b)?);
        }
        Ok(acc)
    }
}

pub fn hook_products(eta: &Composition) -> HookTable {
    let p = &eta.parts;
    let lc = leg_colength_vector(eta);
    let mut nodes = Vec::new();
    for i in 0..p.len() {
        for j in 1..=p[i] {
            let left = p[..i].iter().filter(|&&x| j <= x + 1 && x < p[i]).count();
            let right = p[i + 1..].iter().filter(|&&x| j <= x && x <= p[i]).count();
            nodes.push(HookNode {
                i: i + 1,
                j,
                arm: p[i] - j,
                arm_co: j - 1,
                leg: (left + right) as u32,
                leg_co: lc[i],
            });
        }
    }
    let mut t = HookTable {
        n: p.len(),
        nodes,
        d: ParamScalar::one(),
        d_prime: ParamScalar::one(),
        e: ParamScalar::one(),
        e_prime: ParamScalar::one(),
    };
    let s = Symbolic::generic();
    t.d = t.product(&s, HookProduct::D).expect("symbolic");
    t.d_prime = t.product(&s, HookProduct::DPrime).expect("symbolic");
    t.e = t.product(&s, HookProduct::E).expect("symbolic");
    t.e_prime = t.product(&s, HookProduct::EPrime).expect("symbolic");
    t
}

/// A permutation of {1..n} stored by images: `perm[i-1] = σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Permutation {
        Permutation((1..=n).collect())
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i - 1]
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.0.len()];
        for (i, &s) in self.0.iter().enumerate() {
            inv[s - 1] = i + 1;
        }
        Permutation(inv)
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation(other.0.iter().map(|&j| self.0[j - 1]).collect())
    }

    /// Number of inversions, the Coxeter length.
    pub fn length(&self) -> usize {
        let p = &self.0;
        (0..p.len()).map(|i| (i + 1..p.len()).filter(|&j| p[i] > p[j]).count()).sum()
    }

    /// `ση = (η_{σ^{-1}(1)}, …, η_{σ^{-1}(n)})`.
    pub fn act(&self, eta: &Composition) -> Composition {
        let inv = self.inverse();
        Composition { parts: (1..=eta.n()).map(|i| eta.part(inv.apply(i))).collect() }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

/// `ω_η`: the shortest permutation with `ω_η^{-1}(η) = η⁺`; `ω_η(i)` is the
/// position of the i-th largest part, equal parts taken left to right.
pub fn sorting_permutation(eta: &Composition) -> Permutation {
    let mut idx: Vec<usize> = (1..=eta.n()).collect();
    idx.sort_by(|&a, &b| eta.part(b).cmp(&eta.part(a)));
    Permutation(idx)
}

/// Certificate for `η ⪯′ λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuccessorWitness {
    pub sigma: Permutation,
}

/// Whether `σ` satisfies the defining inequalities of `η ⪯′ λ`.
pub fn is_defining_permutation(eta: &Composition, lam: &Composition, sigma: &Permutation) -> bool {
    (1..=eta.n()).all(|i| allowed(eta, lam, i, sigma.apply(i)))
}

fn allowed(eta: &Composition, lam: &Composition, i: usize, j: usize) -> bool {
    if i < j {
        eta.part(i) < lam.part(j)
    } else {
        eta.part(i) <= lam.part(j)
    }
}

fn check_len(eta: &Composition, lam: &Composition) -> Result<()> {
    if eta.n() != lam.n() {
        return Err(Error::NvarsMismatch(eta.n(), lam.n()));
    }
    Ok(())
}

/// Decides `η ⪯′ λ`. The candidate `ω_λ ω_η^{-1}` is tried first; if it
/// fails, a bipartite matching on the allowed pairs (i, σ(i)) decides exactly.
pub fn successor_test(eta: &Composition, lam: &Composition) -> Result<Option<SuccessorWitness>> {
    check_len(eta, lam)?;
    if lam.modulus() < eta.modulus() {
        return Ok(None);
    }
    let fast = sorting_permutation(lam).compose(&sorting_permutation(eta).inverse());
    if is_defining_permutation(eta, lam, &fast) {
        return Ok(Some(SuccessorWitness { sigma: fast }));
    }
    Ok(matching_witness(eta, lam).map(|sigma| SuccessorWitness { sigma }))
}

pub fn is_successor(eta: &Composition, lam: &Composition) -> bool {
    matches!(successor_test(eta, lam), Ok(Some(_)))
}

/// Only the `ω_λ ω_η^{-1}` candidate, without fallback.
pub fn successor_fast_path(eta: &Composition, lam: &Composition) -> Option<Permutation> {
    let sigma = sorting_permutation(lam).compose(&sorting_permutation(eta).inverse());
    is_defining_permutation(eta, lam, &sigma).then_some(sigma)
}

fn matching_witness(eta: &Composition, lam: &Composition) -> Option<Permutation> {
    let n = eta.n();
    // match_of[j] = i such that σ(i) = j, 0-based
    let mut match_of: Vec<Option<usize>> = vec![None; n];
    fn augment(
        i: usize,
        eta: &Composition,
        lam: &Composition,
        seen: &mut [bool],
        match_of: &mut [Option<usize>],
    ) -> bool {
        for j in 0..eta.n() {
            if seen[j] || !allowed(eta, lam, i + 1, j + 1) {
                continue;
            }
            seen[j] = true;
            if match_of[j].is_none_or(|k| augment(k, eta, lam, seen, match_of)) {
                match_of[j] = Some(i);
                return true;
            }
        }
        false
    }
    for i in 0..n {
        let mut seen = vec![false; n];
        if !augment(i, eta, lam, &mut seen, &mut match_of) {
            return None;
        }
    }
    let mut sigma = vec![0; n];
    for (j, i) in match_of.iter().enumerate() {
        sigma[i.expect("perfect matching")] = j + 1;
    }
    Some(Permutation(sigma))
}

/// All permutations of {1..n} in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    fn rec(cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
        if cur.len() == used.len() {
            out.push(Permutation(cur.clone()));
            return;
        }
        for k in 0..used.len() {
            if !used[k] {
                used[k] = true;
                cur.push(k + 1);
                rec(cur, used, out);
                cur.pop();
                used[k] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Every defining permutation of `η ⪯′ λ`, by exhaustive search.
pub fn successor_exhaustive(eta: &Composition, lam: &Composition) -> Result<Vec<Permutation>> {
    check_len(eta, lam)?;
    Ok(all_permutations(eta.n()).into_iter().filter(|s| is_defining_permutation(eta, lam, s)).collect())
}

fn validate_index_set(n: usize, set: &[usize]) -> Result<()> {
    if set.is_empty() {
        return invalid("index set must be nonempty");
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return invalid(format!("index set {set:?} must be strictly increasing"));
    }
    if set[0] < 1 || *set.last().unwrap() > n {
        return invalid(format!("index set {set:?} must lie in 1..={n}"));
    }
    Ok(())
}

/// `c_I(η)`: position `t_k` receives `η_{t_{k+1}}`, position `t_s` receives
/// `η_{t_1} + 1`, all other parts are unchanged.
pub fn c_i_apply(eta: &Composition, set: &[usize]) -> Result<Composition> {
    validate_index_set(eta.n(), set)?;
    let mut p = eta.parts.clone();
    for k in 0..set.len() - 1 {
        p[set[k] - 1] = eta.part(set[k + 1]);
    }
    p[set[set.len() - 1] - 1] = eta.part(set[0]) + 1;
    Ok(Composition { parts: p })
}

/// One factor of an operator word acting on compositions or polynomials.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum WordOp {
    /// `s_i`, 1-based.
    Swap(usize),
    Raise,
}

impl fmt::Display for WordOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WordOp::Swap(i) => write!(f, "s{i}"),
            WordOp::Raise => write!(f, "Φ"),
        }
    }
}

/// The word `σ_{t1+1} … σ_n Φ s_1 … s_{t1-1}` in application order
/// (first element acts first), with the identity factors `σ_i = 1` omitted.
pub fn c_i_word(n: usize, set: &[usize]) -> Result<Vec<WordOp>> {
    validate_index_set(n, set)?;
    let t1 = set[0];
    let mut w: Vec<WordOp> = (1..t1).rev().map(WordOp::Swap).collect();
    w.push(WordOp::Raise);
    for i in (t1 + 1..=n).rev() {
        if !set.contains(&i) {
            w.push(WordOp::Swap(i - 1));
        }
    }
    Ok(w)
}

/// Applies a word to a composition, returning every intermediate value with
/// the cumulative word that produced it (leftmost factor acts last).
pub fn apply_word_traced(eta: &Composition, word: &[WordOp]) -> Vec<(String, Composition)> {
    let mut cur = eta.clone();
    let mut label = String::from("η");
    let mut out = Vec::with_capacity(word.len());
    for op in word {
        cur = match op {
            WordOp::Swap(i) => cur.swapped(*i),
            WordOp::Raise => cur.raised(),
        };
        label = format!("{op}{label}");
        out.push((label.clone(), cur.clone()));
    }
    out
}

/// Applies the word of [`c_i_word`]; equals `c_I(η)`.
pub fn c_i_operator(eta: &Composition, set: &[usize]) -> Result<Composition> {
    let word = c_i_word(eta.n(), set)?;
    Ok(apply_word_traced(eta, &word).pop().map(|x| x.1).unwrap_or_else(|| eta.clone()))
}

/// Whether `I` is maximal with respect to `η`.
pub fn is_maximal_set(eta: &Composition, set: &[usize]) -> bool {
    if validate_index_set(eta.n(), set).is_err() {
        return false;
    }
    let mut prev = 0;
    for &tu in set {
        if (prev + 1..tu).any(|j| eta.part(j) == eta.part(tu)) {
            return false;
        }
        prev = tu;
    }
    let top = eta.part(set[0]) + 1;
    !(prev + 1..=eta.n()).any(|j| eta.part(j) == top)
}

fn nonempty_subsets(n: usize) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> =
        (1u32..(1 << n)).map(|mask| (1..=n).filter(|&i| mask & (1 << (i - 1)) != 0).collect()).collect();
    out.sort();
    out
}

/// All maximal index sets, in lexicographic order of the sets.
pub fn maximal_sets(eta: &Composition) -> Vec<Vec<usize>> {
    nonempty_subsets(eta.n()).into_iter().filter(|s| is_maximal_set(eta, s)).collect()
}

/// All `λ` with `|λ| = |η| + k` and `η ⪯′ λ`, as the k-fold image of the
/// maximal-set step; sorted.
pub fn successors_layered(eta: &Composition, k: u32) -> Result<Vec<Composition>> {
    if k < 1 {
        return invalid("successors_layered needs k >= 1");
    }
    let mut layer: BTreeSet<Composition> = BTreeSet::from([eta.clone()]);
    for _ in 0..k {
        let mut next = BTreeSet::new();
        for c in &layer {
            for set in maximal_sets(c) {
                next.insert(c_i_apply(c, &set)?);
            }
        }
        layer = next;
    }
    Ok(layer.into_iter().collect())
}

/// `η + χ_r`: adds 1 exactly where `l′_η(i) < r`.
pub fn chi_r(eta: &Composition, r: usize) -> Result<Composition> {
    if r < 1 || r > eta.n() {
        return invalid(format!("r = {r} must lie in 1..={}", eta.n()));
    }
    let lc = leg_colength_vector(eta);
    let parts = eta.parts.iter().zip(lc).map(|(&p, l)| if (l as usize) < r { p + 1 } else { p }).collect();
    Ok(Composition { parts })
}

/// `n(λ) = Σ (i-1) λ_i`.
pub fn n_stat(lam: &Composition) -> u64 {
    lam.parts.iter().enumerate().map(|(i, &x)| i as u64 * x as u64).sum()
}

/// `μ ≤ η` in dominance: equal modulus and every prefix sum of `η` is at
/// least the matching prefix sum of `μ`.
pub fn dominance_le(mu: &Composition, eta: &Composition) -> bool {
    if mu.n() != eta.n() || mu.modulus() != eta.modulus() {
        return false;
    }
    let (mut a, mut b) = (0u32, 0u32);
    for i in 0..mu.n() {
        a += mu.parts[i];
        b += eta.parts[i];
        if a > b {
            return false;
        }
    }
    true
}

/// `μ ≺ η`: `μ⁺ < η⁺`, or `μ⁺ = η⁺` and `μ < η` (strict dominance).
pub fn prec(mu: &Composition, eta: &Composition) -> bool {
    if mu == eta {
        return false;
    }
    let (ms, es) = (mu.sorted(), eta.sorted());
    if ms == es {
        dominance_le(mu, eta)
    } else {
        dominance_le(&ms, &es)
    }
}

/// Sort key refining `≺`: `μ ≺ η` implies `order_key(μ) < order_key(η)`.
pub fn order_key(eta: &Composition) -> (Vec<u32>, Vec<u32>) {
    (eta.sorted().parts, eta.parts.clone())
}

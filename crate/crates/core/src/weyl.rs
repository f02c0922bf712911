//! Weyl group elements stored by their action on the simple roots.
//!
//! An element `w` keeps the images `w(α_1), …, w(α_n)` and the images under
//! `w^{-1}`, both as coefficient vectors over the simple roots. Equality and
//! hashing use the forward images only.

use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use crate::error::{Error, Result};
use crate::roots::{Family, Root, RootSystem};

/// Default cap on the number of elements any enumeration may produce.
pub const DEFAULT_BOUND: u128 = 1_000_000;

#[derive(Debug, Clone)]
pub struct WeylElement {
    rank: usize,
    images: Vec<i32>,
    inverse: Vec<i32>,
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank && self.images == other.images
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.images.hash(state);
    }
}

fn apply(images: &[i32], rank: usize, gamma: &[i32]) -> Vec<i32> {
    let mut out = vec![0; rank];
    for (i, &c) in gamma.iter().enumerate() {
        if c == 0 {
            continue;
        }
        let row = &images[i * rank..(i + 1) * rank];
        for (o, r) in out.iter_mut().zip(row) {
            *o += c * r;
        }
    }
    out
}

fn is_negative(v: &[i32]) -> bool {
    v.iter().any(|&c| c < 0)
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        let mut images = vec![0; rank * rank];
        for i in 0..rank {
            images[i * rank + i] = 1;
        }
        WeylElement {
            rank,
            inverse: images.clone(),
            images,
        }
    }

    pub fn simple_reflection(rs: &RootSystem, i: usize) -> Result<Self> {
        Self::from_word(rs, &[i])
    }

    /// Product `s_{i_1} s_{i_2} ⋯ s_{i_k}` of 0-based simple indices.
    pub fn from_word(rs: &RootSystem, word: &[usize]) -> Result<Self> {
        let mut w = Self::identity(rs.rank());
        for &i in word {
            if i >= rs.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: rs.rank(),
                });
            }
            w = w.right_mul_simple(rs, i);
        }
        Ok(w)
    }

    /// Builds an element from the images of the simple roots, checking that
    /// they define an automorphism of the root system.
    pub fn from_images(rs: &RootSystem, images: &[Root]) -> Result<Self> {
        let n = rs.rank();
        if images.len() != n {
            return Err(Error::RankMismatch {
                expected: n,
                got: images.len(),
            });
        }
        let mut flat = Vec::with_capacity(n * n);
        for r in images {
            rs.check_root(r)?;
            flat.extend_from_slice(&r.0);
        }
        // w maps into Φ; a bijection of Φ is determined by where it sends
        // the simple roots, so reduce w to the identity by descents
        let mut u = WeylElement {
            rank: n,
            images: flat.clone(),
            inverse: vec![0; n * n],
        };
        let mut word = Vec::new();
        for _ in 0..=rs.num_positive() {
            match (0..n).find(|&i| is_negative(u.image_slice(i))) {
                Some(i) => {
                    u = u.right_mul_simple_forward(rs, i);
                    word.push(i);
                }
                None => break,
            }
        }
        if u.images != Self::identity(n).images {
            return Err(Error::InvalidWord(format!(
                "images {images:?} do not define a Weyl group element"
            )));
        }
        word.reverse();
        Self::from_word(rs, &word)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    fn image_slice(&self, i: usize) -> &[i32] {
        &self.images[i * self.rank..(i + 1) * self.rank]
    }

    fn inverse_slice(&self, i: usize) -> &[i32] {
        &self.inverse[i * self.rank..(i + 1) * self.rank]
    }

    /// `w(α_i)`.
    pub fn image(&self, i: usize) -> Root {
        Root(self.image_slice(i).to_vec())
    }

    /// `w^{-1}(α_i)`.
    pub fn inverse_image(&self, i: usize) -> Root {
        Root(self.inverse_slice(i).to_vec())
    }

    pub fn images(&self) -> Vec<Root> {
        (0..self.rank).map(|i| self.image(i)).collect()
    }

    /// `w(γ)` for any integer vector γ.
    pub fn act_vec(&self, gamma: &[i32]) -> Vec<i32> {
        apply(&self.images, self.rank, gamma)
    }

    /// `w^{-1}(γ)`.
    pub fn act_inverse_vec(&self, gamma: &[i32]) -> Vec<i32> {
        apply(&self.inverse, self.rank, gamma)
    }

    /// `w(γ)` for a root γ of `rs`.
    pub fn act(&self, rs: &RootSystem, gamma: &Root) -> Result<Root> {
        rs.check_root(gamma)?;
        Ok(Root(self.act_vec(&gamma.0)))
    }

    pub fn act_root(&self, gamma: &Root) -> Root {
        Root(self.act_vec(&gamma.0))
    }

    pub fn act_inverse_root(&self, gamma: &Root) -> Root {
        Root(self.act_inverse_vec(&gamma.0))
    }

    pub fn inverse(&self) -> Self {
        WeylElement {
            rank: self.rank,
            images: self.inverse.clone(),
            inverse: self.images.clone(),
        }
    }

    /// The product `self · other`.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.rank;
        let mut images = Vec::with_capacity(n * n);
        let mut inverse = Vec::with_capacity(n * n);
        for i in 0..n {
            images.extend(self.act_vec(other.image_slice(i)));
            inverse.extend(other.act_inverse_vec(self.inverse_slice(i)));
        }
        WeylElement {
            rank: n,
            images,
            inverse,
        }
    }

    fn right_mul_simple_forward(&self, rs: &RootSystem, j: usize) -> Self {
        let n = self.rank;
        let mut images = self.images.clone();
        for i in 0..n {
            let a = rs.cartan().entry(i, j);
            if a != 0 {
                for k in 0..n {
                    images[i * n + k] -= a * self.images[j * n + k];
                }
            }
        }
        WeylElement {
            rank: n,
            images,
            inverse: self.inverse.clone(),
        }
    }

    /// `w · s_j`.
    pub fn right_mul_simple(&self, rs: &RootSystem, j: usize) -> Self {
        let mut out = self.right_mul_simple_forward(rs, j);
        let n = self.rank;
        for i in 0..n {
            rs.reflect_in_place(&mut out.inverse[i * n..(i + 1) * n], j);
        }
        out
    }

    /// `s_j · w`.
    pub fn left_mul_simple(&self, rs: &RootSystem, j: usize) -> Self {
        let mut swapped = self.inverse().right_mul_simple(rs, j);
        std::mem::swap(&mut swapped.images, &mut swapped.inverse);
        swapped
    }

    pub fn is_identity(&self) -> bool {
        self.images == Self::identity(self.rank).images
    }

    /// Whether `α_i` is a right descent, i.e. `w(α_i) < 0`.
    pub fn is_descent(&self, i: usize) -> bool {
        is_negative(self.image_slice(i))
    }

    /// Whether `α_i` is a left descent, i.e. `w^{-1}(α_i) < 0`.
    pub fn is_left_descent(&self, i: usize) -> bool {
        is_negative(self.inverse_slice(i))
    }

    /// Right descent set `des(w) = inv(w) ∩ Δ`, as sorted 0-based indices.
    pub fn descents(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.is_descent(i)).collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        (0..self.rank).filter(|&i| self.is_left_descent(i)).collect()
    }

    /// `inv(w) = {γ ∈ Φ^+ : w(γ) ∈ Φ^-}` in root order.
    pub fn inversions(&self, rs: &RootSystem) -> Vec<Root> {
        rs.positive_roots()
            .iter()
            .filter(|g| is_negative(&self.act_vec(&g.0)))
            .cloned()
            .collect()
    }

    /// `ℓ(w) = |inv(w)|`.
    pub fn length(&self, rs: &RootSystem) -> usize {
        rs.positive_roots()
            .iter()
            .filter(|g| is_negative(&self.act_vec(&g.0)))
            .count()
    }

    /// Canonical reduced word: repeatedly strip the smallest right descent.
    /// The word is returned left to right, so it ends with the smallest
    /// descent of `w`.
    pub fn word(&self, rs: &RootSystem) -> Vec<usize> {
        let mut u = self.clone();
        let mut word = Vec::new();
        while let Some(i) = (0..self.rank).find(|&i| u.is_descent(i)) {
            u = u.right_mul_simple_forward(rs, i);
            word.push(i);
        }
        word.reverse();
        word
    }

    /// Canonical word formatted as `s1s3s4`, or `e` for the identity.
    pub fn word_string(&self, rs: &RootSystem) -> String {
        format_word(&self.word(rs))
    }

    /// Longest element `y_K` of the parabolic subgroup `W_K`.
    pub fn longest(rs: &RootSystem, k: &[usize]) -> Result<Self> {
        rs.check_indices(k)?;
        let mut y = Self::identity(rs.rank());
        while let Some(&i) = k.iter().find(|&&i| !y.is_descent(i)) {
            y = y.right_mul_simple(rs, i);
        }
        Ok(y)
    }

    /// Whether `w ∈ W_I`.
    pub fn in_parabolic(&self, rs: &RootSystem, set: &[usize]) -> bool {
        let mut u = self.clone();
        while let Some(&i) = set.iter().find(|&&i| u.is_descent(i)) {
            u = u.right_mul_simple_forward(rs, i);
        }
        u.is_identity()
    }

    /// Whether `w ∈ ^J W`: shortest in its right coset `W_J w`, i.e.
    /// `w^{-1}(α) > 0` for every `α ∈ J`.
    pub fn is_min_right_rep(&self, j: &[usize]) -> bool {
        j.iter().all(|&i| !self.is_left_descent(i))
    }

    /// Whether `w ∈ W^J`: shortest in its left coset `w W_J`.
    pub fn is_min_left_rep(&self, j: &[usize]) -> bool {
        j.iter().all(|&i| !self.is_descent(i))
    }

    /// Factorization `w = y · v` with `y ∈ W_J` and `v ∈ ^J W`.
    pub fn min_right_coset_rep(&self, rs: &RootSystem, j: &[usize]) -> Result<(Self, Self)> {
        rs.check_indices(j)?;
        let mut v = self.clone();
        while let Some(&i) = j.iter().find(|&&i| v.is_left_descent(i)) {
            v = v.left_mul_simple(rs, i);
        }
        let y = self.mul(&v.inverse());
        Ok((y, v))
    }

    /// Factorization `w = v · y` with `v ∈ W^J` and `y ∈ W_J`.
    pub fn min_left_coset_rep(&self, rs: &RootSystem, j: &[usize]) -> Result<(Self, Self)> {
        rs.check_indices(j)?;
        let mut v = self.clone();
        while let Some(&i) = j.iter().find(|&&i| v.is_descent(i)) {
            v = v.right_mul_simple(rs, i);
        }
        let y = v.inverse().mul(self);
        Ok((v, y))
    }

    /// `w = τ_w · y_{des(w)}` with `τ_w ∈ W^{des(w)}`; returns `(τ_w, y_{des(w)})`.
    pub fn descent_decomposition(&self, rs: &RootSystem) -> (Self, Self) {
        let des = self.descents();
        let y = Self::longest(rs, &des).expect("descents are in range");
        (self.mul(&y), y)
    }

    /// One-line notation of a type-A element: `w(ε_i) = ε_{w(i)}`.
    pub fn to_one_line(&self, rs: &RootSystem) -> Result<Vec<usize>> {
        if rs.family() != Family::A {
            return Err(Error::NotTypeA);
        }
        let n = self.rank;
        // w(α_i) = ε_{w(i)} - ε_{w(i+1)}
        let mut perm = vec![0usize; n + 1];
        let endpoints = |i: usize| -> (usize, usize) {
            let v = self.image_slice(i);
            let lo = v.iter().position(|&c| c != 0).expect("nonzero root");
            let hi = v.iter().rposition(|&c| c != 0).expect("nonzero root");
            if v[lo] > 0 {
                (lo + 1, hi + 2)
            } else {
                (hi + 2, lo + 1)
            }
        };
        if n == 0 {
            return Ok(vec![1]);
        }
        let (a, b) = endpoints(0);
        perm[0] = a;
        perm[1] = b;
        for i in 1..n {
            perm[i + 1] = endpoints(i).1;
        }
        Ok(perm)
    }

    /// Inverse of [`WeylElement::to_one_line`]; values are `1..=rank+1`.
    pub fn from_one_line(rs: &RootSystem, perm: &[usize]) -> Result<Self> {
        if rs.family() != Family::A {
            return Err(Error::NotTypeA);
        }
        crate::perm::check_permutation(perm)?;
        let n = rs.rank();
        if perm.len() != n + 1 {
            return Err(Error::RankMismatch {
                expected: n + 1,
                got: perm.len(),
            });
        }
        let eps_diff = |a: usize, b: usize| -> Vec<i32> {
            let mut v = vec![0; n];
            let (lo, hi, s) = if a < b { (a, b, 1) } else { (b, a, -1) };
            for c in &mut v[lo - 1..hi - 1] {
                *c = s;
            }
            v
        };
        let mut inv = vec![0usize; n + 1];
        for (i, &p) in perm.iter().enumerate() {
            inv[p - 1] = i + 1;
        }
        let mut images = Vec::with_capacity(n * n);
        let mut inverse = Vec::with_capacity(n * n);
        for i in 0..n {
            images.extend(eps_diff(perm[i], perm[i + 1]));
            inverse.extend(eps_diff(inv[i], inv[i + 1]));
        }
        Ok(WeylElement {
            rank: n,
            images,
            inverse,
        })
    }
}

/// Formats a 0-based word as `s1s2…`, with `e` for the empty word.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|i| format!("s{}", i + 1)).collect()
}

/// Parses `e`, `s1s3s4`, `s1 s3`, or `1,3,4` into a 0-based word.
pub fn parse_word(s: &str) -> Result<Vec<usize>> {
    let t = s.trim();
    if t.is_empty() || t == "e" {
        return Ok(Vec::new());
    }
    let bad = || Error::InvalidWord(s.to_string());
    let parts: Vec<&str> = if t.contains('s') {
        t.split('s').map(str::trim).filter(|p| !p.is_empty()).collect()
    } else {
        t.split([',', ' ']).map(str::trim).filter(|p| !p.is_empty()).collect()
    };
    parts
        .into_iter()
        .map(|p| {
            let i: usize = p.trim_end_matches(',').parse().map_err(|_| bad())?;
            if i == 0 {
                return Err(bad());
            }
            Ok(i - 1)
        })
        .collect()
}

/// A strong composition `μ = (μ_1, …, μ_ℓ)` of `n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidComposition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!("{parts:?} has a zero part")));
        }
        Ok(Composition { parts })
    }

    /// All strong compositions of `n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Composition> {
        fn rec(rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Composition>) {
            if rest == 0 {
                out.push(Composition { parts: cur.clone() });
                return;
            }
            for p in 1..=rest {
                cur.push(p);
                rec(rest - p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, &mut Vec::new(), &mut out);
        }
        out
    }

    /// The composition with `J_μ = j` in `S_n` (0-based simple indices).
    pub fn from_subset(n: usize, j: &[usize]) -> Result<Self> {
        let mut parts = Vec::new();
        let mut cur = 1;
        for i in 0..n.saturating_sub(1) {
            if j.contains(&i) {
                cur += 1;
            } else {
                parts.push(cur);
                cur = 1;
            }
        }
        parts.push(cur);
        Composition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `J_μ = Δ \ {α_{μ_1}, α_{μ_1+μ_2}, …}` as 0-based indices.
    pub fn subset(&self) -> Vec<usize> {
        let n = self.n();
        let mut cuts = HashSet::new();
        let mut acc = 0;
        for &p in &self.parts {
            acc += p;
            cuts.insert(acc);
        }
        (1..n).filter(|i| !cuts.contains(i)).map(|i| i - 1).collect()
    }

    /// Block of each value `1..=n` (index 0 unused).
    pub fn block_of(&self) -> Vec<usize> {
        let mut out = vec![0];
        for (b, &p) in self.parts.iter().enumerate() {
            out.extend(std::iter::repeat_n(b, p));
        }
        out
    }

    /// The blocks as value ranges `start..=end`.
    pub fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        let mut start = 1;
        for &p in &self.parts {
            out.push((start, start + p - 1));
            start += p;
        }
        out
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", s.join(","))
    }
}

impl std::str::FromStr for Composition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = t
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidComposition(s.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }
}

fn check_bound(what: String, size: u128, bound: u128) -> Result<()> {
    if size > bound {
        Err(Error::BoundExceeded { what, size, bound })
    } else {
        Ok(())
    }
}

/// Breadth-first closure of `{e}` under right multiplication by `gens`,
/// keeping only elements accepted by `keep`. Each level is sorted by
/// canonical word, so the output is in length-lexicographic order.
fn bfs(rs: &RootSystem, gens: &[usize], keep: impl Fn(&WeylElement) -> bool) -> Vec<WeylElement> {
    let e = WeylElement::identity(rs.rank());
    let mut seen: HashSet<WeylElement> = HashSet::from([e.clone()]);
    let mut out = vec![e.clone()];
    let mut level = vec![e];
    while !level.is_empty() {
        let mut next = Vec::new();
        for w in &level {
            for &j in gens {
                if w.is_descent(j) {
                    continue;
                }
                let u = w.right_mul_simple(rs, j);
                if keep(&u) && seen.insert(u.clone()) {
                    next.push(u);
                }
            }
        }
        let mut keyed: Vec<(Vec<usize>, WeylElement)> = next.into_iter().map(|u| (u.word(rs), u)).collect();
        keyed.sort_by(|a, b| a.0.cmp(&b.0));
        level = keyed.into_iter().map(|(_, u)| u).collect();
        out.extend(level.iter().cloned());
    }
    out
}

/// Every element of `W`, in length-lexicographic canonical-word order.
pub fn enumerate_group(rs: &RootSystem, bound: u128) -> Result<Vec<WeylElement>> {
    check_bound(format!("the Weyl group of {}", rs.name()), rs.weyl_order(), bound)?;
    let gens: Vec<usize> = (0..rs.rank()).collect();
    Ok(bfs(rs, &gens, |_| true))
}

/// Every element of `W_I`.
pub fn enumerate_parabolic(rs: &RootSystem, set: &[usize], bound: u128) -> Result<Vec<WeylElement>> {
    let sub = rs.parabolic(set)?;
    check_bound(format!("W_I for I = {}", format_set(set)), sub.weyl_order(), bound)?;
    Ok(bfs(rs, sub.simple(), |_| true))
}

/// Every element of `^J W`, the shortest representatives of `W_J \ W`.
pub fn enumerate_min_reps(rs: &RootSystem, j: &[usize], bound: u128) -> Result<Vec<WeylElement>> {
    let sub = rs.parabolic(j)?;
    let size = rs.weyl_order() / sub.weyl_order();
    check_bound(format!("^J W for J = {}", format_set(j)), size, bound)?;
    let gens: Vec<usize> = (0..rs.rank()).collect();
    let jj = sub.simple().to_vec();
    Ok(bfs(rs, &gens, |u| u.is_min_right_rep(&jj)))
}

/// Formats 0-based simple indices as `{1,3}` (1-based).
pub fn format_set(set: &[usize]) -> String {
    let s: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", s.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> RootSystem {
        RootSystem::new(Family::A, n).unwrap()
    }

    fn perm(rs: &RootSystem, p: &[usize]) -> WeylElement {
        WeylElement::from_one_line(rs, p).unwrap()
    }

    #[test]
    fn one_line_round_trip() {
        let rs = a(7);
        let p = vec![2, 3, 5, 8, 6, 7, 4, 1];
        let w = perm(&rs, &p);
        assert_eq!(w.to_one_line(&rs).unwrap(), p);
        assert_eq!(crate::perm::format_one_line(&p), "23586741");
        let s2 = WeylElement::from_word(&a(3), &[1]).unwrap();
        assert_eq!(s2.to_one_line(&a(3)).unwrap(), vec![1, 3, 2, 4]);
    }

    #[test]
    fn product_is_composition() {
        let rs = a(3);
        let w = WeylElement::from_word(&rs, &[1, 0]).unwrap();
        assert_eq!(w.to_one_line(&rs).unwrap(), vec![3, 1, 2, 4]);
        let x = perm(&rs, &[3, 4, 2, 1]);
        let y = perm(&rs, &[2, 1, 4, 3]);
        let xy = x.mul(&y).to_one_line(&rs).unwrap();
        assert_eq!(xy, vec![4, 3, 1, 2]);
    }

    #[test]
    fn descents_and_length() {
        let rs = a(3);
        let w = perm(&rs, &[3, 4, 2, 1]);
        assert_eq!(w.descents(), vec![1, 2]);
        assert_eq!(w.length(&rs), 5);
        let w0 = WeylElement::longest(&rs, &[0, 1, 2]).unwrap();
        assert_eq!(w0.length(&rs), 6);
        assert_eq!(w0.act_root(rs.highest_root()), rs.highest_root().neg());
        assert_eq!(WeylElement::identity(3).length(&rs), 0);
    }

    #[test]
    fn longest_elements() {
        let rs = a(3);
        let y = WeylElement::longest(&rs, &[0, 1]).unwrap();
        assert_eq!(y.to_one_line(&rs).unwrap(), vec![3, 2, 1, 4]);
        let b4 = RootSystem::new(Family::B, 4).unwrap();
        let w0 = WeylElement::longest(&b4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(w0.length(&b4), 16);
        assert!(w0.mul(&w0).is_identity());
    }

    #[test]
    fn descent_decomposition_examples() {
        let rs = a(3);
        let w = perm(&rs, &[3, 4, 2, 1]);
        let (tau, y) = w.descent_decomposition(&rs);
        assert_eq!(tau.to_one_line(&rs).unwrap(), vec![3, 1, 2, 4]);
        assert_eq!(y.to_one_line(&rs).unwrap(), vec![1, 4, 3, 2]);
        let b4 = RootSystem::new(Family::B, 4).unwrap();
        let w = WeylElement::from_word(&b4, &[0, 2, 3]).unwrap();
        let (tau, y) = w.descent_decomposition(&b4);
        assert_eq!(tau, WeylElement::from_word(&b4, &[2]).unwrap());
        assert_eq!(y, WeylElement::from_word(&b4, &[0, 3]).unwrap());
    }

    #[test]
    fn enumeration_sizes() {
        assert_eq!(enumerate_group(&a(2), DEFAULT_BOUND).unwrap().len(), 6);
        let b4 = RootSystem::new(Family::B, 4).unwrap();
        assert_eq!(enumerate_min_reps(&b4, &[0, 1, 3], DEFAULT_BOUND).unwrap().len(), 32);
        let g2 = RootSystem::new(Family::G, 2).unwrap();
        assert_eq!(enumerate_group(&g2, DEFAULT_BOUND).unwrap().len(), 12);
        let e7 = RootSystem::new(Family::E, 7).unwrap();
        match enumerate_group(&e7, DEFAULT_BOUND) {
            Err(Error::BoundExceeded { size, .. }) => assert_eq!(size, 2_903_040),
            other => panic!("expected refusal, got {other:?}"),
        }
    }

    #[test]
    fn min_reps_type_a_22() {
        let rs = a(3);
        let reps = enumerate_min_reps(&rs, &[0, 2], DEFAULT_BOUND).unwrap();
        let lines: Vec<Vec<usize>> = reps.iter().map(|v| v.to_one_line(&rs).unwrap()).collect();
        let mut expect = vec![
            vec![1, 2, 3, 4],
            vec![1, 3, 2, 4],
            vec![3, 1, 2, 4],
            vec![1, 3, 4, 2],
            vec![3, 1, 4, 2],
            vec![3, 4, 1, 2],
        ];
        let mut got = lines.clone();
        got.sort();
        expect.sort();
        assert_eq!(got, expect);
    }

    #[test]
    fn coset_factorizations_are_reduced() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let all = enumerate_group(&rs, DEFAULT_BOUND).unwrap();
        for w in &all {
            let (y, v) = w.min_right_coset_rep(&rs, &[0, 2]).unwrap();
            assert_eq!(y.mul(&v), *w);
            assert!(y.in_parabolic(&rs, &[0, 2]));
            assert!(v.is_min_right_rep(&[0, 2]));
            assert_eq!(w.length(&rs), y.length(&rs) + v.length(&rs));
        }
    }

    #[test]
    fn words_reproduce_elements() {
        let rs = RootSystem::new(Family::F, 4).unwrap();
        let w = WeylElement::from_word(&rs, &[0, 1, 2, 1, 3, 2]).unwrap();
        let word = w.word(&rs);
        assert_eq!(word.len(), w.length(&rs));
        assert_eq!(WeylElement::from_word(&rs, &word).unwrap(), w);
        assert_eq!(WeylElement::from_images(&rs, &w.images()).unwrap(), w);
    }

    #[test]
    fn parse_words() {
        assert_eq!(parse_word("s1s3s4").unwrap(), vec![0, 2, 3]);
        assert_eq!(parse_word("1,3,4").unwrap(), vec![0, 2, 3]);
        assert_eq!(parse_word("e").unwrap(), Vec::<usize>::new());
        assert!(parse_word("s0").is_err());
    }

    #[test]
    fn compositions() {
        let mu: Composition = "4,3,1".parse().unwrap();
        assert_eq!(mu.subset(), vec![0, 1, 2, 4, 5]);
        assert_eq!(Composition::from_subset(8, &mu.subset()).unwrap(), mu);
        assert_eq!(Composition::all(4).len(), 8);
        assert!(Composition::new(vec![2, 0]).is_err());
    }
}

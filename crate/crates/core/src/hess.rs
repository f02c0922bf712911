//! Admissibility, cell decompositions, closure relations and Poincaré
//! polynomials for `Hess(X_J)` with the minimal indecomposable Hessenberg
//! space `H_Δ`.
//!
//! A configuration is the pair `(Φ, J)`: the regular element `X_J` is never
//! built outside the type-A oracle, since every quantity here depends only on
//! `J` and the root data.

use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::roots::{Family, Root, RootSystem};
use crate::weyl::{enumerate_group, enumerate_min_reps, enumerate_parabolic, format_set, Composition, WeylElement};

/// A root system together with the subset `J ⊆ Δ` naming `X_J`.
#[derive(Debug, Clone)]
pub struct HessConfig {
    rs: RootSystem,
    j: Vec<usize>,
    mu: Option<Composition>,
}

impl HessConfig {
    pub fn new(rs: RootSystem, j: &[usize]) -> Result<Self> {
        rs.check_indices(j)?;
        let mut j = j.to_vec();
        j.sort_unstable();
        j.dedup();
        let mu = if rs.family() == Family::A {
            Some(Composition::from_subset(rs.rank() + 1, &j)?)
        } else {
            None
        };
        Ok(HessConfig { rs, j, mu })
    }

    /// Type `A_{n-1}` with `J = J_μ`.
    pub fn type_a(mu: &Composition) -> Result<Self> {
        let rs = RootSystem::new(Family::A, mu.n() - 1)?;
        Ok(HessConfig {
            rs,
            j: mu.subset(),
            mu: Some(mu.clone()),
        })
    }

    pub fn rs(&self) -> &RootSystem {
        &self.rs
    }

    pub fn j(&self) -> &[usize] {
        &self.j
    }

    pub fn mu(&self) -> Option<&Composition> {
        self.mu.as_ref()
    }

    pub fn j_string(&self) -> String {
        format_set(&self.j)
    }

    fn not_admissible(&self, w: &WeylElement) -> Error {
        Error::NotAdmissible {
            word: w.word_string(&self.rs),
            j: self.j_string(),
        }
    }

    fn require_admissible(&self, w: &WeylElement) -> Result<()> {
        if w.rank() != self.rs.rank() {
            return Err(Error::RankMismatch {
                expected: self.rs.rank(),
                got: w.rank(),
            });
        }
        if is_admissible(w, self) {
            Ok(())
        } else {
            Err(self.not_admissible(w))
        }
    }
}

/// `w` is `J`-admissible: `w^{-1}(α) ∈ Δ^- ∪ Φ^+` for every `α ∈ J`.
pub fn is_admissible(w: &WeylElement, cfg: &HessConfig) -> bool {
    cfg.j.iter().all(|&j| {
        let r = w.inverse_image(j);
        r.is_positive() || matches!(r.as_simple(), Some((_, -1)))
    })
}

/// `Δ(v) = v(Δ) ∩ Φ_J^+` for `v ∈ ^J W`, as simple indices in `J`.
pub fn delta_v(v: &WeylElement, cfg: &HessConfig) -> Result<Vec<usize>> {
    if !v.is_min_right_rep(&cfg.j) {
        return Err(Error::NotMinimalRepresentative(v.word_string(&cfg.rs)));
    }
    let mut out = Vec::new();
    for i in 0..cfg.rs.rank() {
        let img = v.image(i);
        if img.is_positive() && cfg.rs.in_span(&img, &cfg.j) {
            match img.as_simple() {
                Some((k, 1)) => out.push(k),
                _ => {
                    return Err(Error::Invariant(format!(
                        "v({}) = {img} lies in Φ_J^+ but is not simple",
                        Root::simple(cfg.rs.rank(), i)
                    )))
                }
            }
        }
    }
    out.sort_unstable();
    Ok(out)
}

/// All data attached to a `J`-admissible element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdmissibleDecomposition {
    pub w: WeylElement,
    /// `K ⊆ Δ(v)` with `w = y_K v`.
    pub k: Vec<usize>,
    pub y: WeylElement,
    pub v: WeylElement,
    pub delta_v: Vec<usize>,
    /// `w = τ_w y_{des(w)}`.
    pub tau: WeylElement,
    pub y_des: WeylElement,
    pub des: Vec<usize>,
    /// `J_w = τ_w^{-1}(J) ∩ Φ_{des(w)}`, as simple indices.
    pub jw: Vec<usize>,
    /// Types of the connected components of `Φ_{des(w)}`.
    pub levi_components: Vec<String>,
}

fn sorted_roots(mut v: Vec<Root>) -> Vec<Root> {
    v.sort();
    v
}

/// Computes both factorizations of an admissible element and checks the
/// identities relating them.
pub fn decompose_admissible(w: &WeylElement, cfg: &HessConfig) -> Result<AdmissibleDecomposition> {
    cfg.require_admissible(w)?;
    let rs = &cfg.rs;
    let (y, v) = w.min_right_coset_rep(rs, &cfg.j)?;
    let k = y.descents();
    let y_k = WeylElement::longest(rs, &k)?;
    if y != y_k {
        return Err(Error::Invariant(format!(
            "W_J factor {} of an admissible element is not y_des",
            y.word_string(rs)
        )));
    }
    let dv = delta_v(&v, cfg)?;
    if !k.iter().all(|i| dv.contains(i)) {
        return Err(Error::Invariant(format!(
            "K = {} is not contained in Δ(v) = {}",
            format_set(&k),
            format_set(&dv)
        )));
    }
    let des = w.descents();
    let (tau, y_des) = w.descent_decomposition(rs);

    let mut jw = Vec::new();
    for &j in &cfg.j {
        let r = tau.inverse_image(j);
        if rs.in_span(&r, &des) {
            match r.as_simple() {
                Some((i, 1)) => jw.push(i),
                _ => {
                    return Err(Error::Invariant(format!(
                        "τ_w^{{-1}}(α_{}) = {r} lies in Φ_des(w) but is not a simple root",
                        j + 1
                    )))
                }
            }
        }
    }
    jw.sort_unstable();

    let check = |ok: bool, what: &str| -> Result<()> {
        if ok {
            Ok(())
        } else {
            Err(Error::Invariant(format!("{what} fails for w = {}", w.word_string(rs))))
        }
    };
    check(
        w.length(rs) == y.length(rs) + v.length(rs),
        "ℓ(w) = ℓ(y_K) + ℓ(v)",
    )?;
    check(
        w.length(rs) == tau.length(rs) + y_des.length(rs),
        "ℓ(w) = ℓ(τ_w) + ℓ(y_des(w))",
    )?;
    check(tau.is_min_left_rep(&des), "τ_w ∈ W^des(w)")?;
    check(tau.is_min_right_rep(&cfg.j), "τ_w ∈ ^J W")?;
    check(jw.iter().all(|i| des.contains(i)), "J_w ⊆ des(w)")?;
    let lhs = sorted_roots(jw.iter().map(|&i| y_des.image(i)).collect());
    let rhs = sorted_roots(k.iter().map(|&i| v.inverse_image(i).neg()).collect());
    check(lhs == rhs, "y_des(w)(J_w) = v^{-1}(K^-)")?;
    let mut split: Vec<usize> = v.descents();
    for &i in &k {
        match v.inverse_image(i).as_simple() {
            Some((s, 1)) if !split.contains(&s) => split.push(s),
            _ => check(false, "v^{-1}(K) ⊆ Δ disjoint from des(v)")?,
        }
    }
    split.sort_unstable();
    check(split == des, "des(w) = des(v) ⊔ v^{-1}(K)")?;

    let levi_components = rs
        .parabolic(&des)?
        .components()
        .iter()
        .map(|c| c.datum.name())
        .collect();
    Ok(AdmissibleDecomposition {
        w: w.clone(),
        k,
        y,
        v,
        delta_v: dv,
        tau,
        y_des,
        des,
        jw,
        levi_components,
    })
}

/// Dimension `|des(w)|` of the cell `C_w ∩ Hess(X_J)`.
pub fn cell_dimension(w: &WeylElement, cfg: &HessConfig) -> Result<usize> {
    cfg.require_admissible(w)?;
    Ok(w.descents().len())
}

/// A cell meeting the closure of `C_w ∩ Hess(X_J)`: `v = τ_w x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureCell {
    pub v: WeylElement,
    pub x: WeylElement,
    /// `dim(C_v ∩ closure) = |des(x)|`.
    pub dim: usize,
}

/// Cells `C_v ∩ Hess(X_J)` meeting the closure of `C_w ∩ Hess(X_J)`, sorted
/// by `(dim, canonical word of v)`.
pub fn closure_intersecting_cells(w: &WeylElement, cfg: &HessConfig, bound: u128) -> Result<Vec<ClosureCell>> {
    cfg.require_admissible(w)?;
    let rs = &cfg.rs;
    let (tau, _) = w.descent_decomposition(rs);
    let mut cells: Vec<(usize, Vec<usize>, ClosureCell)> = enumerate_parabolic(rs, &w.descents(), bound)?
        .into_iter()
        .filter_map(|x| {
            let v = tau.mul(&x);
            is_admissible(&v, cfg).then(|| {
                let dim = x.descents().len();
                (dim, v.word(rs), ClosureCell { v, x, dim })
            })
        })
        .collect();
    cells.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
    Ok(cells.into_iter().map(|c| c.2).collect())
}

/// `C_v ∩ Hess(X_J)` lies in the closure of `C_w ∩ Hess(X_J)`: `v` is
/// admissible, `v ∈ w W_{des(w)}` and `des(v) ⊆ des(w)`.
pub fn cell_contained_in_closure(v: &WeylElement, w: &WeylElement, cfg: &HessConfig) -> Result<bool> {
    cfg.require_admissible(w)?;
    if !is_admissible(v, cfg) {
        return Ok(false);
    }
    let des = w.descents();
    let same_coset = w.inverse().mul(v).in_parabolic(&cfg.rs, &des);
    Ok(same_coset && v.descents().iter().all(|i| des.contains(i)))
}

/// Covering relations `(lower, upper)` of the containment order on `cells`.
pub fn containment_hasse(cells: &[ClosureCell], cfg: &HessConfig) -> Result<Vec<(usize, usize)>> {
    let m = cells.len();
    let mut le = vec![vec![false; m]; m];
    for a in 0..m {
        for b in 0..m {
            le[a][b] = a != b && cell_contained_in_closure(&cells[a].v, &cells[b].v, cfg)?;
        }
    }
    let mut edges = Vec::new();
    for a in 0..m {
        for b in 0..m {
            if le[a][b] && !(0..m).any(|c| le[a][c] && le[c][b]) {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

/// Admissible elements found by testing every element of `W`.
pub fn admissible_elements(cfg: &HessConfig, bound: u128, exec: Exec) -> Result<Vec<WeylElement>> {
    let all = enumerate_group(&cfg.rs, bound)?;
    let keep = exec.map(&all, |w| is_admissible(w, cfg));
    Ok(all.into_iter().zip(keep).filter(|(_, k)| *k).map(|(w, _)| w).collect())
}

/// Admissible elements built as `y_K v` with `v ∈ ^J W` and `K ⊆ Δ(v)`.
pub fn admissible_from_cells(cfg: &HessConfig, bound: u128, exec: Exec) -> Result<Vec<WeylElement>> {
    let reps = enumerate_min_reps(&cfg.rs, &cfg.j, bound)?;
    admissible_from_reps(cfg, &reps, exec)
}

/// As [`admissible_from_cells`], starting from precomputed `^J W`.
pub fn admissible_from_reps(cfg: &HessConfig, reps: &[WeylElement], exec: Exec) -> Result<Vec<WeylElement>> {
    let per_rep = exec.map(reps, |v| -> Result<Vec<WeylElement>> {
        let dv = delta_v(v, cfg)?;
        let mut out = Vec::with_capacity(1 << dv.len());
        for mask in 0u64..(1u64 << dv.len()) {
            let k: Vec<usize> = dv
                .iter()
                .enumerate()
                .filter(|(b, _)| mask >> b & 1 == 1)
                .map(|(_, &i)| i)
                .collect();
            out.push(WeylElement::longest(&cfg.rs, &k)?.mul(v));
        }
        Ok(out)
    });
    let mut all = Vec::new();
    for r in per_rep {
        all.extend(r?);
    }
    Ok(all)
}

fn histogram(dims: impl Iterator<Item = usize>, rank: usize) -> Vec<u64> {
    let mut coeffs = vec![0u64; rank + 1];
    for d in dims {
        coeffs[d] += 1;
    }
    while coeffs.len() > 1 && coeffs.last() == Some(&0) {
        coeffs.pop();
    }
    coeffs
}

/// Poincaré polynomial coefficients `c_k = #{admissible w : |des(w)| = k}`,
/// scanning all of `W`.
pub fn poincare_polynomial(cfg: &HessConfig, bound: u128) -> Result<Vec<u64>> {
    poincare_polynomial_with(cfg, bound, Exec::default())
}

pub fn poincare_polynomial_with(cfg: &HessConfig, bound: u128, exec: Exec) -> Result<Vec<u64>> {
    let all = enumerate_group(&cfg.rs, bound)?;
    let dims = exec.map(&all, |w| is_admissible(w, cfg).then(|| w.descents().len()));
    Ok(histogram(dims.into_iter().flatten(), cfg.rs.rank()))
}

/// Same polynomial from the cell description: `y_K v` has
/// `|des| = |des(v)| + |K|`.
pub fn poincare_polynomial_from_cells(cfg: &HessConfig, bound: u128) -> Result<Vec<u64>> {
    let reps = enumerate_min_reps(&cfg.rs, &cfg.j, bound)?;
    let mut dims = Vec::new();
    for v in &reps {
        let base = v.descents().len();
        let dv = delta_v(v, cfg)?.len();
        for size in 0..=dv {
            let ways = binomial(dv, size);
            dims.extend(std::iter::repeat_n(base + size, ways as usize));
        }
    }
    Ok(histogram(dims.into_iter(), cfg.rs.rank()))
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

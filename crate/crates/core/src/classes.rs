//! K-theory and cohomology classes of Hessenberg–Schubert varieties,
//! Levi flag varieties and Peterson cells.
//!
//! A class is kept factored as `scalar · ∏ f(α)` over a multiset of negative
//! roots, where `f(α) = 1 − [L_α]` in K-theory and `ch(L_α)` in cohomology.
//! In type A the cohomology form expands to a polynomial in the Chern roots
//! `x_1, …, x_n` via `ch(L_{−(ε_i − ε_j)}) ↦ x_i − x_j`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hess::{is_admissible, HessConfig};
use crate::roots::{Family, Root, RootSystem};
use crate::weyl::WeylElement;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Form {
    KTheory,
    Cohomology,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassExpression {
    pub scalar: BigRational,
    /// Negative roots, in root order.
    pub factor_roots: Vec<Root>,
    pub form: Form,
}

impl ClassExpression {
    pub fn degree(&self) -> usize {
        self.factor_roots.len()
    }
}

impl fmt::Display for ClassExpression {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.scalar)?;
        for r in &self.factor_roots {
            match self.form {
                Form::KTheory => write!(f, "·(1-[L({r})])")?,
                Form::Cohomology => write!(f, "·ch(L({r}))")?,
            }
        }
        Ok(())
    }
}

fn ratio(num: u128, den: u128) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// Negative roots outside `Φ_I^-`.
fn negatives_outside(rs: &RootSystem, set: &[usize]) -> Vec<Root> {
    rs.negative_roots()
        .into_iter()
        .filter(|r| !rs.in_span(r, set))
        .collect()
}

/// `|W_I|/|W| · ∏_{α ∈ Φ^- \ Φ_I^-} f(α)`, the class of the flag variety of
/// the standard Levi `L_I`.
pub fn levi_flag_class(rs: &RootSystem, set: &[usize], form: Form) -> Result<ClassExpression> {
    let sub = rs.parabolic(set)?;
    Ok(ClassExpression {
        scalar: ratio(sub.weyl_order(), rs.weyl_order()),
        factor_roots: negatives_outside(rs, sub.simple()),
        form,
    })
}

/// `|W_{des(w)}|/|W| · ∏_{α ∈ Φ^- \ des(w)^-} f(α)`.
pub fn hess_schubert_class(w: &WeylElement, cfg: &HessConfig, form: Form) -> Result<ClassExpression> {
    let rs = cfg.rs();
    if !is_admissible(w, cfg) {
        return Err(Error::NotAdmissible {
            word: w.word_string(rs),
            j: cfg.j_string(),
        });
    }
    let des = w.descents();
    let sub = rs.parabolic(&des)?;
    let factor_roots = rs
        .negative_roots()
        .into_iter()
        .filter(|r| !matches!(r.as_simple(), Some((i, -1)) if des.contains(&i)))
        .collect();
    Ok(ClassExpression {
        scalar: ratio(sub.weyl_order(), rs.weyl_order()),
        factor_roots,
        form,
    })
}

/// The same class assembled as `[B_L] · ∏_{α ∈ Φ_w^- \ des(w)^-} f(α)` with
/// `L = L_{des(w)}`; equal to [`hess_schubert_class`] as a factored product.
pub fn hess_schubert_class_via_levi(w: &WeylElement, cfg: &HessConfig, form: Form) -> Result<ClassExpression> {
    let rs = cfg.rs();
    if !is_admissible(w, cfg) {
        return Err(Error::NotAdmissible {
            word: w.word_string(rs),
            j: cfg.j_string(),
        });
    }
    let des = w.descents();
    let mut class = levi_flag_class(rs, &des, form)?;
    class.factor_roots.extend(
        rs.negative_roots()
            .into_iter()
            .filter(|r| rs.in_span(r, &des) && r.as_simple().is_none()),
    );
    Ok(class)
}

/// `|W_K|/|W| · ∏_{α ∈ Δ^- \ K^-} f(α)` for the Peterson cell of `y_K`.
pub fn peterson_dual_class(rs: &RootSystem, k: &[usize], form: Form) -> Result<ClassExpression> {
    let sub = rs.parabolic(k)?;
    let factor_roots = (0..rs.rank())
        .filter(|i| !sub.simple().contains(i))
        .map(|i| rs.simple_root(i).neg())
        .collect();
    Ok(ClassExpression {
        scalar: ratio(sub.weyl_order(), rs.weyl_order()),
        factor_roots,
        form,
    })
}

/// Polynomial with rational coefficients in `x_1, …, x_n`, keyed by
/// exponent vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChernPolynomial {
    n: usize,
    terms: BTreeMap<Vec<u32>, BigRational>,
}

impl ChernPolynomial {
    pub fn constant(n: usize, c: BigRational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(vec![0; n], c);
        }
        ChernPolynomial { n, terms }
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigRational> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Common total degree, or `None` when the polynomial is zero or not
    /// homogeneous.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        let d = degs.next()?;
        degs.all(|e| e == d).then_some(d)
    }

    /// Multiplies by `x_i − x_j` (0-based indices).
    pub fn mul_difference(&self, i: usize, j: usize) -> Self {
        let mut terms: BTreeMap<Vec<u32>, BigRational> = BTreeMap::new();
        for (e, c) in &self.terms {
            for (k, sign) in [(i, 1), (j, -1)] {
                let mut e2 = e.clone();
                e2[k] += 1;
                let entry = terms.entry(e2).or_insert_with(BigRational::zero);
                if sign > 0 {
                    *entry += c;
                } else {
                    *entry -= c;
                }
            }
        }
        terms.retain(|_, c| !c.is_zero());
        ChernPolynomial { n: self.n, terms }
    }

    pub fn evaluate(&self, x: &[BigRational]) -> BigRational {
        assert_eq!(x.len(), self.n, "wrong number of variables");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter()
                    .zip(x)
                    .fold(c.clone(), |acc, (&k, xi)| acc * num_traits::pow(xi.clone(), k as usize))
            })
            .sum()
    }

    /// Substitutes `x_k ↦ Σ_l m[k][l] x_l` for a signed permutation `m`
    /// given as `(target, sign)` per variable.
    pub fn substitute_signed(&self, map: &[(usize, i32)]) -> Self {
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut e2 = vec![0; self.n];
            let mut c2 = c.clone();
            for (k, &p) in e.iter().enumerate() {
                let (t, s) = map[k];
                e2[t] += p;
                if s < 0 && p % 2 == 1 {
                    c2 = -c2;
                }
            }
            terms.insert(e2, c2);
        }
        ChernPolynomial { n: self.n, terms }
    }
}

impl fmt::Display for ChernPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // highest monomials first in lexicographic order
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(k, &p)| if p == 1 { format!("x{}", k + 1) } else { format!("x{}^{}", k + 1, p) })
                .collect();
            let sign = if c.is_negative() { "-" } else { "+" };
            let abs = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            match (mono.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => write!(f, "{}", mono.join("*"))?,
                (false, false) => write!(f, "{abs}*{}", mono.join("*"))?,
            }
        }
        Ok(())
    }
}

/// The pair `(i, j)` (0-based) with `r = −(ε_i − ε_j)`, for a negative root
/// of type `A`.
fn type_a_pair(r: &Root) -> Result<(usize, usize)> {
    let support: Vec<usize> = r.support().collect();
    let (lo, hi) = (support[0], *support.last().expect("nonempty"));
    if !r.is_negative() || r.coeffs()[lo..=hi].iter().any(|&c| c != -1) {
        return Err(Error::NotARoot(r.0.clone()));
    }
    Ok((lo, hi + 1))
}

/// Expands a cohomology class of type `A_{n−1}` into `x_1, …, x_n`.
pub fn expand_type_a(expr: &ClassExpression, rs: &RootSystem) -> Result<ChernPolynomial> {
    if expr.form != Form::Cohomology {
        return Err(Error::ExpansionNeedsCohomology);
    }
    if rs.family() != Family::A {
        return Err(Error::NotTypeA);
    }
    let mut p = ChernPolynomial::constant(rs.rank() + 1, expr.scalar.clone());
    for r in &expr.factor_roots {
        let (i, j) = type_a_pair(r)?;
        p = p.mul_difference(i, j);
    }
    Ok(p)
}

/// Human-readable factored form `1/4·(x1-x2)(x1-x3)…` of a type-A class.
pub fn factored_type_a(expr: &ClassExpression, rs: &RootSystem) -> Result<String> {
    if rs.family() != Family::A {
        return Err(Error::NotTypeA);
    }
    let mut s = expr.scalar.to_string();
    for r in &expr.factor_roots {
        let (i, j) = type_a_pair(r)?;
        s.push_str(&format!("(x{}-x{})", i + 1, j + 1));
    }
    Ok(s)
}

/// Sorted multiset comparison of factor roots.
pub fn same_factors(a: &ClassExpression, b: &ClassExpression) -> bool {
    let mut x = a.factor_roots.clone();
    let mut y = b.factor_roots.clone();
    x.sort_by(|p, q| p.0.cmp(&q.0));
    y.sort_by(|p, q| p.0.cmp(&q.0));
    x == y
}

//! JSON encodings shared by every subcommand. Simple-root indices are
//! 1-based, roots are coefficient vectors, rationals are `{"num","den"}`
//! string pairs.

use hessvar_core::classes::{ChernPolynomial, ClassExpression, Form};
use hessvar_core::oracle::{self, Jacobian};
use hessvar_core::singular::{Reason, SmoothnessVerdict, Verdict};
use hessvar_core::{Error, Family, HessConfig, Root, RootSystem, WeylElement};
use num_rational::BigRational;
use serde_json::{json, Value};

pub fn one_based(set: &[usize]) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

pub fn rational(q: &BigRational) -> Value {
    json!({ "num": q.numer().to_string(), "den": q.denom().to_string() })
}

pub fn root(r: &Root) -> Value {
    json!(r.coeffs())
}

pub fn verdict(v: Verdict) -> Value {
    json!(match v {
        Verdict::Smooth => "smooth",
        Verdict::Singular => "singular",
    })
}

pub fn config(cfg: &HessConfig) -> Value {
    let mut out = json!({
        "family": cfg.rs().family().to_string(),
        "rank": cfg.rs().rank(),
        "j": one_based(cfg.j()),
    });
    if let Some(mu) = cfg.mu() {
        out["mu"] = json!(mu.parts());
    }
    out
}

pub fn element(rs: &RootSystem, w: &WeylElement) -> Value {
    let mut out = json!({
        "word": w.word_string(rs),
        "word_indices": one_based(&w.word(rs)),
        "length": w.length(rs),
    });
    if rs.family() == Family::A {
        if let Ok(p) = w.to_one_line(rs) {
            out["one_line"] = json!(hessvar_core::perm::format_one_line(&p));
        }
    }
    out
}

pub fn reason(r: &Reason) -> Value {
    match r {
        Reason::DeltaVMismatch { delta_v, j } => json!({
            "kind": "delta_v_mismatch",
            "delta_v": one_based(delta_v),
            "j": one_based(j),
        }),
        Reason::PetersonWStar { component, labels, k } => json!({
            "kind": "peterson_w_star",
            "component": component,
            "labels": one_based(labels),
            "k": one_based(k),
        }),
        Reason::PatternHit {
            block,
            pattern,
            positions,
        } => json!({
            "kind": "pattern_hit",
            "block": block + 1,
            "pattern": pattern,
            "positions": one_based(positions),
        }),
        Reason::BlockSplit { block } => json!({ "kind": "block_split", "block": block + 1 }),
        Reason::BracketNonempty { witness, alpha, beta } => json!({
            "kind": "bracket_nonempty",
            "witness": root(witness),
            "alpha": root(alpha),
            "beta": root(beta),
        }),
        Reason::AdjacencyViolation { i, a, b } => json!({
            "kind": "adjacency_violation",
            "i": i + 1,
            "a": a,
            "b": b,
        }),
        Reason::SmoothByTheorem => json!({ "kind": "smooth_by_theorem" }),
    }
}

/// Payload fields of a verdict; `criteria` goes into the envelope.
pub fn smoothness(v: &SmoothnessVerdict) -> Value {
    json!({ "verdict": verdict(v.verdict), "reason": reason(&v.reason) })
}

pub fn class(c: &ClassExpression) -> Value {
    json!({
        "form": match c.form {
            Form::KTheory => "k_theory",
            Form::Cohomology => "cohomology",
        },
        "scalar": rational(&c.scalar),
        "factor_roots": c.factor_roots.iter().map(root).collect::<Vec<_>>(),
        "degree": c.degree(),
        "display": c.to_string(),
    })
}

pub fn polynomial(p: &ChernPolynomial) -> Value {
    let terms: Vec<Value> = p
        .terms()
        .iter()
        .rev()
        .map(|(e, c)| json!({ "exponents": e, "coeff": rational(c) }))
        .collect();
    json!({ "num_vars": p.num_vars(), "terms": terms, "display": p.to_string() })
}

pub fn jacobian(n: usize, j: &Jacobian) -> Value {
    let label = |p: &(usize, usize)| {
        json!({ "root": oracle::pair_to_coeffs(n, *p), "label": oracle::format_pair(n, *p) })
    };
    json!({
        "rows": j.rows.iter().map(label).collect::<Vec<_>>(),
        "cols": j.cols.iter().map(label).collect::<Vec<_>>(),
        "entries": j.entries.iter().map(|r| r.iter().map(rational).collect::<Vec<_>>()).collect::<Vec<_>>(),
        "rank": j.rank,
        "verdict": verdict(j.verdict),
    })
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::InvalidType { .. } => "invalid_type",
        Error::NotARoot(_) => "not_a_root",
        Error::IndexOutOfRange { .. } => "index_out_of_range",
        Error::BoundExceeded { .. } => "bound_exceeded",
        Error::NotAdmissible { .. } => "not_admissible",
        Error::NotMinimalRepresentative(_) => "not_minimal_representative",
        Error::NotTypeA => "not_type_a",
        Error::InvalidPermutation(_) => "invalid_permutation",
        Error::InvalidComposition(_) => "invalid_composition",
        Error::InvalidWord(_) => "invalid_word",
        Error::NonCanonicalLabelling(_) => "non_canonical_labelling",
        Error::RankMismatch { .. } => "rank_mismatch",
        Error::PointNotInVariety => "point_not_in_variety",
        Error::InvalidMatrix(_) => "invalid_matrix",
        Error::OracleBound { .. } => "oracle_bound",
        Error::ExpansionNeedsCohomology => "expansion_needs_cohomology",
        Error::NoTableRow(_) => "no_table_row",
        Error::Invariant(_) => "invariant",
    }
}

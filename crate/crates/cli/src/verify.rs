//! Verification suites behind `hessvar verify`.

use hessvar_core::hess::{
    admissible_elements, admissible_from_cells, decompose_admissible, delta_v, is_admissible, poincare_polynomial_with,
    poincare_polynomial_from_cells,
};
use hessvar_core::oracle::{self, OracleOptions};
use hessvar_core::perm::all_permutations;
use hessvar_core::singular::{self, Verdict};
use hessvar_core::weyl::enumerate_min_reps;
use hessvar_core::{CartanDatum, Composition, Exec, Family, HessConfig, Result, RootSystem, WeylElement};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Δ(v), decomposition and Hessenberg–Schubert reference tables.
    ReferenceTables,
    /// Independent routes agree on admissibility, smoothness and Jacobians.
    CrossValidate,
    /// Three characterizations of cominuscule maximal parabolics agree.
    Cominuscule,
    /// Rows of the shared-linear-term table satisfy conditions (1) and (2).
    SharedLinear,
}

#[derive(Debug, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub suite: &'static str,
    pub max_rank: usize,
    pub passed: bool,
    pub checks: Vec<Check>,
}

struct Collector(Vec<Check>);

impl Collector {
    fn push(&mut self, name: impl Into<String>, passed: bool, detail: impl Into<String>) {
        self.0.push(Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        });
    }

    /// Records a check whose evaluation may itself fail.
    fn try_push(&mut self, name: impl Into<String>, f: impl FnOnce() -> Result<(bool, String)>) {
        match f() {
            Ok((ok, detail)) => self.push(name, ok, detail),
            Err(e) => self.push(name, false, format!("error: {e}")),
        }
    }
}

pub fn default_max_rank(suite: Suite) -> usize {
    match suite {
        Suite::ReferenceTables => 7,
        Suite::CrossValidate => 4,
        Suite::Cominuscule => 8,
        Suite::SharedLinear => 7,
    }
}

pub fn run(suite: Suite, max_rank: usize, exec: Exec) -> Report {
    let mut c = Collector(Vec::new());
    let name = match suite {
        Suite::ReferenceTables => {
            reference_tables(&mut c, max_rank);
            "reference-tables"
        }
        Suite::CrossValidate => {
            cross_validate(&mut c, max_rank, exec);
            "cross-validate"
        }
        Suite::Cominuscule => {
            cominuscule(&mut c, max_rank);
            "cominuscule"
        }
        Suite::SharedLinear => {
            shared_linear(&mut c, max_rank);
            "shared-linear"
        }
    };
    Report {
        suite: name,
        max_rank,
        passed: c.0.iter().all(|x| x.passed),
        checks: c.0,
    }
}

fn word(rs: &RootSystem, w: &[usize]) -> Result<WeylElement> {
    let w0: Vec<usize> = w.iter().map(|i| i - 1).collect();
    WeylElement::from_word(rs, &w0)
}

fn minus_one(s: &[usize]) -> Vec<usize> {
    s.iter().map(|i| i - 1).collect()
}

fn digits(s: &str) -> Vec<usize> {
    s.bytes().map(|b| (b - b'0') as usize).collect()
}

fn reference_tables(c: &mut Collector, max_rank: usize) {
    if max_rank >= 3 {
        c.try_push("A3 mu=(2,2): Δ(v) for every v in ^J W", || {
            let rs = RootSystem::new(Family::A, 3)?;
            let cfg = HessConfig::new(rs.clone(), &[0, 2])?;
            let table: [(&str, &[usize]); 6] = [
                ("1234", &[1, 3]),
                ("1324", &[]),
                ("3124", &[1]),
                ("1342", &[3]),
                ("3142", &[]),
                ("3412", &[1, 3]),
            ];
            let reps = enumerate_min_reps(&rs, cfg.j(), u128::MAX)?;
            let mut ok = reps.len() == table.len();
            for (line, d) in table {
                let v = WeylElement::from_one_line(&rs, &digits(line))?;
                ok &= reps.contains(&v) && delta_v(&v, &cfg)? == minus_one(d);
            }
            Ok((ok, format!("{} representatives", reps.len())))
        });
    }
    if max_rank >= 4 {
        c.try_push("B4 J={1,2,4}: Δ(v) for listed v and 32 cosets", || {
            let rs = RootSystem::new(Family::B, 4)?;
            let cfg = HessConfig::new(rs.clone(), &[0, 1, 3])?;
            let reps = enumerate_min_reps(&rs, cfg.j(), u128::MAX)?;
            let table: [(&[usize], &[usize]); 6] = [
                (&[], &[1, 2, 4]),
                (&[3], &[1]),
                (&[3, 4], &[1]),
                (&[3, 2], &[2]),
                (&[3, 4, 3], &[1, 4]),
                (&[3, 2, 1], &[1, 2]),
            ];
            let mut ok = reps.len() == 32;
            for (w, d) in table {
                ok &= delta_v(&word(&rs, w)?, &cfg)? == minus_one(d);
            }
            let v0 = reps.iter().max_by_key(|v| v.length(&rs)).expect("nonempty");
            ok &= delta_v(v0, &cfg)? == vec![0, 1, 3];
            Ok((ok, format!("{} representatives", reps.len())))
        });
        c.try_push("B4 J={1,2,4}: decompositions and Hessenberg–Schubert smoothness", || {
            let rs = RootSystem::new(Family::B, 4)?;
            let cfg = HessConfig::new(rs.clone(), &[0, 1, 3])?;
            let mut ok = true;
            let w = word(&rs, &[1, 3, 4])?;
            let d = decompose_admissible(&w, &cfg)?;
            ok &= d.y == word(&rs, &[1])? && d.v == word(&rs, &[3, 4])? && d.des == vec![0, 3];
            ok &= d.y_des == word(&rs, &[1, 4])? && d.tau == word(&rs, &[3])? && d.jw == vec![0];
            ok &= singular::hess_schubert_smooth(&w, &cfg)?.is_smooth();
            let w = word(&rs, &[1, 2, 1, 3, 2, 1])?;
            let d = decompose_admissible(&w, &cfg)?;
            ok &= d.y == word(&rs, &[1, 2, 1])? && d.v == word(&rs, &[3, 2, 1])? && d.des == vec![0, 1, 2];
            ok &= d.y_des == w && d.tau.is_identity() && d.jw == vec![0, 1];
            ok &= !singular::hess_schubert_smooth(&w, &cfg)?.is_smooth();
            Ok((ok, "2 rows".into()))
        });
    }
    if max_rank >= 3 {
        c.try_push("A3 mu=(2,2): closure of the cell of 3421", || {
            let rs = RootSystem::new(Family::A, 3)?;
            let cfg = HessConfig::type_a(&Composition::new(vec![2, 2])?)?;
            let w = WeylElement::from_one_line(&rs, &digits("3421"))?;
            let d = decompose_admissible(&w, &cfg)?;
            let cells = hessvar_core::hess::closure_intersecting_cells(&w, &cfg, u128::MAX)?;
            let mut got: Vec<String> = cells
                .iter()
                .map(|c| hessvar_core::perm::format_one_line(&c.v.to_one_line(&rs).expect("type A")))
                .collect();
            got.sort();
            let ok = d.tau == WeylElement::from_one_line(&rs, &digits("3124"))?
                && d.y_des == WeylElement::from_one_line(&rs, &digits("1432"))?
                && got == ["3124", "3142", "3214", "3412", "3421"];
            Ok((ok, got.join(" ")))
        });
    }
    if max_rank >= 7 {
        c.try_push("A7 mu=(4,3,1): Hessenberg–Schubert smoothness over v=81235674", || {
            let rs = RootSystem::new(Family::A, 7)?;
            let mu = Composition::new(vec![4, 3, 1])?;
            let cfg = HessConfig::type_a(&mu)?;
            let v = WeylElement::from_one_line(&rs, &digits("81235674"))?;
            let rows: [(&[usize], &str, bool); 5] = [
                (&[], "81235674", true),
                (&[1], "82135674", false),
                (&[2], "81325674", true),
                (&[1, 2], "83215674", false),
                (&[2, 5], "81326574", true),
            ];
            let mut ok = delta_v(&v, &cfg)? == vec![0, 1, 4, 5];
            for (k, line, smooth) in rows {
                let w = WeylElement::longest(&rs, &minus_one(k))?.mul(&v);
                let p = w.to_one_line(&rs)?;
                ok &= p == digits(line);
                ok &= singular::typea_hess_schubert_smooth(&p, &mu)?.is_smooth() == smooth;
                ok &= singular::hess_schubert_smooth(&w, &cfg)?.is_smooth() == smooth;
            }
            Ok((ok, "5 rows".into()))
        });
    }
}

fn simple_types(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push((Family::A, r));
        if r >= 2 {
            out.push((Family::B, r));
            out.push((Family::C, r));
        }
        if r >= 4 {
            out.push((Family::D, r));
        }
        if (6..=8).contains(&r) {
            out.push((Family::E, r));
        }
        if r == 4 {
            out.push((Family::F, 4));
        }
        if r == 2 {
            out.push((Family::G, 2));
        }
    }
    out
}

fn subsets(rank: usize) -> impl Iterator<Item = Vec<usize>> {
    (0u32..1 << rank).map(move |m| (0..rank).filter(|i| m >> i & 1 == 1).collect())
}

fn cross_validate(c: &mut Collector, max_rank: usize, exec: Exec) {
    let max_n = (max_rank + 1).min(oracle::DEFAULT_ORACLE_BOUND);
    let opts = OracleOptions::default();
    for n in 1..=max_n {
        let perms = all_permutations(n);
        let comps = Composition::all(n);
        let results = exec.map(&comps, |mu| -> Result<(usize, Vec<String>)> {
            let cfg = HessConfig::type_a(mu)?;
            let mut count = 0;
            let mut bad = Vec::new();
            for p in &perms {
                let w = WeylElement::from_one_line(cfg.rs(), p)?;
                let adm = is_admissible(&w, &cfg);
                if adm != singular::typea_is_admissible(p, mu)? || adm != oracle::admissibility_matrix_check(p, mu)? {
                    bad.push(format!("admissibility of {p:?}"));
                    continue;
                }
                if !adm {
                    continue;
                }
                count += 1;
                let general = singular::hess_fixed_point_smooth(&w, &cfg)?.verdict;
                let pattern = singular::typea_fixed_point_smooth(p, mu)?.verdict;
                let jet = oracle::jacobian_at_fixed_point(p, mu, &opts)?;
                if general != pattern || general != jet.verdict {
                    bad.push(format!("fixed point {p:?}"));
                }
                if jet != oracle::linear_terms_closed_form(p, mu, &opts)? {
                    bad.push(format!("jet vs closed form {p:?}"));
                }
                let hs = singular::hess_schubert_smooth(&w, &cfg)?.verdict;
                if hs != singular::typea_hess_schubert_smooth(p, mu)?.verdict {
                    bad.push(format!("Hessenberg–Schubert {p:?}"));
                }
            }
            Ok((count, bad))
        });
        let mut count = 0;
        let mut bad = Vec::new();
        let mut err = None;
        for (mu, r) in comps.iter().zip(results) {
            match r {
                Ok((k, b)) => {
                    count += k;
                    bad.extend(b.into_iter().map(|x| format!("mu={mu}: {x}")));
                }
                Err(e) => err = Some(format!("mu={mu}: {e}")),
            }
        }
        let detail = match (&err, bad.first()) {
            (Some(e), _) => format!("error: {e}"),
            (None, Some(b)) => format!("{} disagreements, first: {b}", bad.len()),
            (None, None) => format!("{count} admissible pairs"),
        };
        c.push(format!("type A n={n}: all routes agree"), err.is_none() && bad.is_empty(), detail);
    }

    for (family, rank) in simple_types(max_rank) {
        let name = format!("{family}{rank}");
        c.try_push(format!("{name}: admissible sets, Poincaré polynomials, W** ⊆ W*"), || {
            let datum = CartanDatum::new(family, rank)?;
            let rs = RootSystem::from_cartan(datum.clone());
            let mut ok = true;
            let mut singular_somewhere = Vec::new();
            for j in subsets(rank) {
                let cfg = HessConfig::new(rs.clone(), &j)?;
                let mut a = admissible_elements(&cfg, u128::MAX, exec)?;
                let mut b = admissible_from_cells(&cfg, u128::MAX, exec)?;
                a.sort_by_key(|w| w.word(&rs));
                b.sort_by_key(|w| w.word(&rs));
                ok &= a == b;
                ok &= poincare_polynomial_with(&cfg, u128::MAX, exec)? == poincare_polynomial_from_cells(&cfg, u128::MAX)?;
                if j.len() < rank {
                    ok &= !singular::w_star_star_member(&datum, &j)? || singular::w_star_member(&datum, &j)?;
                }
                let verdicts = exec.map(&a, |w| singular::hess_fixed_point_smooth(w, &cfg).map(|v| v.verdict));
                let mut any_singular = false;
                for v in verdicts {
                    any_singular |= v? == Verdict::Singular;
                }
                if rank >= 2 {
                    ok &= any_singular == !j.is_empty();
                }
                singular_somewhere.push(any_singular);
            }
            Ok((ok, format!("{} subsets J", singular_somewhere.len())))
        });
    }
}

fn cominuscule(c: &mut Collector, max_rank: usize) {
    for (family, rank) in simple_types(max_rank) {
        c.try_push(format!("{family}{rank}: cominuscule characterizations agree"), || {
            let datum = CartanDatum::new(family, rank)?;
            let rs = RootSystem::from_cartan(datum.clone());
            let theta = rs.highest_root().clone();
            let mut ok = true;
            let mut count = 0;
            for k in subsets(rank).filter(|k| k.len() < rank) {
                let a = singular::cominuscule_check(&datum, &k)?;
                let b = singular::is_cominuscule_complement(&datum, &k)?;
                let d = !singular::w_star_star_member(&datum, &k)?;
                let y = WeylElement::longest(&rs, &k)?;
                let e = matches!(y.act_root(&theta.neg()).as_simple(), Some((_, -1)));
                ok &= a == b && b == d && d == e;
                count += 1;
            }
            Ok((ok, format!("{count} proper subsets")))
        });
    }
}

fn shared_linear(c: &mut Collector, max_rank: usize) {
    let mut types: Vec<(Family, usize)> = Vec::new();
    types.extend((3..=6).map(|r| (Family::A, r)));
    types.extend((3..=5).map(|r| (Family::C, r)));
    types.extend((4..=6).map(|r| (Family::D, r)));
    types.extend([(Family::E, 6), (Family::E, 7)]);
    for (family, rank) in types.into_iter().filter(|t| t.1 <= max_rank) {
        c.try_push(format!("{family}{rank}: table rows satisfy conditions (1) and (2)"), || {
            let rows = singular::verify_shared_linear_table(family, rank)?;
            let ok = rows.iter().all(|r| r.conditions_hold());
            let setting: Vec<String> = rows
                .iter()
                .filter(|r| !r.passed())
                .map(|r| format!("β=a{}: {}", r.beta + 1, r.failed().join(", ")))
                .collect();
            let detail = if setting.is_empty() {
                format!("{} rows", rows.len())
            } else {
                format!("{} rows; setting checks failing: {}", rows.len(), setting.join("; "))
            };
            Ok((ok, detail))
        });
    }
}

use hessvar_core::classes::{self, Form};
use hessvar_core::hess::is_admissible;
use hessvar_core::oracle::{self, JetMatrix, OracleOptions, SemisimpleChoice};
use hessvar_core::perm::all_permutations;
use hessvar_core::singular;
use hessvar_core::{CartanDatum, Composition, Family, HessConfig, RootSystem, WeylElement};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const TYPES: [(Family, usize); 14] = [
    (Family::A, 1),
    (Family::A, 4),
    (Family::A, 7),
    (Family::B, 2),
    (Family::B, 5),
    (Family::C, 2),
    (Family::C, 3),
    (Family::C, 6),
    (Family::D, 4),
    (Family::D, 7),
    (Family::E, 6),
    (Family::E, 8),
    (Family::F, 4),
    (Family::G, 2),
];

fn q(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// A composition of `n` and an admissible permutation, picked by index.
fn admissible_pick(n: usize, mu_idx: usize, w_idx: usize) -> Option<(Composition, Vec<usize>)> {
    let comps = Composition::all(n);
    let m = comps[mu_idx % comps.len()].clone();
    let adm: Vec<Vec<usize>> = all_permutations(n)
        .into_iter()
        .filter(|p| singular::typea_is_admissible(p, &m).unwrap())
        .collect();
    if adm.is_empty() {
        return None;
    }
    let w = adm[w_idx % adm.len()].clone();
    Some((m, w))
}

fn conjugate_by_w0(w: &[usize]) -> Vec<usize> {
    let n = w.len();
    (0..n).map(|i| n + 1 - w[n - 1 - i]).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn w_star_star_inside_w_star(t in 0usize..TYPES.len(), mask in any::<u32>()) {
        let (family, rank) = TYPES[t];
        let datum = CartanDatum::new(family, rank).unwrap();
        let k: Vec<usize> = (0..rank).filter(|i| mask >> i & 1 == 1).collect();
        if singular::w_star_star_member(&datum, &k).unwrap() {
            prop_assert!(singular::w_star_member(&datum, &k).unwrap());
        }
    }

    #[test]
    fn general_route_matches_oracle(n in 1usize..=6, mu_idx in 0usize..64, w_idx in 0usize..1000) {
        let Some((m, w)) = admissible_pick(n, mu_idx, w_idx) else { return Ok(()) };
        let cfg = HessConfig::type_a(&m).unwrap();
        let we = WeylElement::from_one_line(cfg.rs(), &w).unwrap();
        let general = singular::hess_fixed_point_smooth(&we, &cfg).unwrap().verdict;
        let oracle = oracle::oracle_verdict(&w, &m, &OracleOptions::default()).unwrap();
        prop_assert_eq!(general, oracle);
    }

    #[test]
    fn verdict_independent_of_semisimple_choice(n in 1usize..=5, mu_idx in 0usize..32, w_idx in 0usize..200) {
        let Some((m, w)) = admissible_pick(n, mu_idx, w_idx) else { return Ok(()) };
        let centered = oracle::jacobian_at_fixed_point(&w, &m, &OracleOptions::default()).unwrap();
        let opts = OracleOptions { semisimple: SemisimpleChoice::BlockIndex, ..OracleOptions::default() };
        let block = oracle::jacobian_at_fixed_point(&w, &m, &opts).unwrap();
        prop_assert_eq!(centered.rank, block.rank);
        prop_assert_eq!(centered.verdict, block.verdict);
    }

    #[test]
    fn linear_terms_independent_of_factor_order(n in 2usize..=4, mu_idx in 0usize..8, w_idx in 0usize..24, seed in any::<u64>()) {
        let Some((m, w)) = admissible_pick(n, mu_idx, w_idx) else { return Ok(()) };
        let opts = OracleOptions::default();
        let mut order: Vec<usize> = (0..n * (n - 1) / 2).collect();
        order.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
        let default = oracle::jacobian_at_fixed_point(&w, &m, &opts).unwrap();
        let shuffled = oracle::jacobian_with_factor_order(&w, &m, &opts, Some(&order)).unwrap();
        prop_assert_eq!(default, shuffled);
    }

    #[test]
    fn class_symmetry_under_diagram_flip(n in 2usize..=5, mu_idx in 0usize..16, w_idx in 0usize..120) {
        let Some((m, w)) = admissible_pick(n, mu_idx, w_idx) else { return Ok(()) };
        let flipped_mu = Composition::new(m.parts().iter().rev().copied().collect()).unwrap();
        let flipped_w = conjugate_by_w0(&w);
        prop_assert!(singular::typea_is_admissible(&flipped_w, &flipped_mu).unwrap());
        let rs = RootSystem::new(Family::A, n - 1).unwrap();
        let expand = |p: &[usize], mu: &Composition| {
            let cfg = HessConfig::type_a(mu).unwrap();
            let we = WeylElement::from_one_line(cfg.rs(), p).unwrap();
            let c = classes::hess_schubert_class(&we, &cfg, Form::Cohomology).unwrap();
            classes::expand_type_a(&c, &rs).unwrap()
        };
        let map: Vec<(usize, i32)> = (0..n).map(|k| (n - 1 - k, -1)).collect();
        prop_assert_eq!(expand(&w, &m).substitute_signed(&map), expand(&flipped_w, &flipped_mu));
    }

    #[test]
    fn jet_products_associate(
        factors in proptest::collection::vec((0usize..4, 0usize..4, 0usize..3, -3i64..=3), 3),
        base in proptest::collection::vec(-2i64..=2, 16),
    ) {
        let n = 4;
        let nvars = 3;
        let m: Vec<Vec<BigRational>> = base.chunks(n).map(|r| r.iter().map(|&x| q(x)).collect()).collect();
        let a = JetMatrix::from_constant(&m, nvars);
        let mats: Vec<JetMatrix> = factors
            .iter()
            .map(|&(i, j, k, c)| {
                let j = if i == j { (j + 1) % n } else { j };
                JetMatrix::elementary(n, nvars, i, j, k, q(c))
            })
            .collect();
        let left = a.mul(&mats[0]).mul(&mats[1]).mul(&mats[2]);
        let right = a.mul(&mats[0].mul(&mats[1].mul(&mats[2])));
        prop_assert_eq!(left, right);
    }
}

#[test]
fn admissibility_routes_agree_exhaustively() {
    for n in 1..=5 {
        let perms = all_permutations(n);
        for m in Composition::all(n) {
            let cfg = HessConfig::type_a(&m).unwrap();
            for p in &perms {
                let we = WeylElement::from_one_line(cfg.rs(), p).unwrap();
                let a = is_admissible(&we, &cfg);
                assert_eq!(a, singular::typea_is_admissible(p, &m).unwrap(), "{p:?} {:?}", m.parts());
                assert_eq!(a, oracle::admissibility_matrix_check(p, &m).unwrap(), "{p:?} {:?}", m.parts());
            }
        }
    }
}

#[test]
fn peterson_locus_matches_oracle_in_type_a() {
    // In the Peterson case every admissible w is some y_K.
    for n in 2..=6 {
        let datum = CartanDatum::new(Family::A, n - 1).unwrap();
        let rs = RootSystem::from_cartan(datum.clone());
        let locus = singular::peterson_singular_locus(&datum, 1 << 10).unwrap();
        let m = Composition::new(vec![n]).unwrap();
        for mask in 0u32..1 << (n - 1) {
            let k: Vec<usize> = (0..n - 1).filter(|i| mask >> i & 1 == 1).collect();
            let y = WeylElement::longest(&rs, &k).unwrap();
            let p = y.to_one_line(&rs).unwrap();
            let verdict = oracle::oracle_verdict(&p, &m, &OracleOptions::default()).unwrap();
            assert_eq!(locus.contains(&k), verdict == singular::Verdict::Singular, "n={n} K={k:?}");
        }
    }
}

//! Type-A Jacobian oracle on explicit matrices.
//!
//! Works in `gl_n` with one-line permutations only; it never consults the
//! Weyl-group or coset machinery of the other modules. The root `ε_i − ε_j`
//! is the matrix entry `(i, j)`. Patch generators are the root-space entries
//! `π_η(Ad(u^{-1})(Y))` for `η ∈ w(Φ^- \ Δ^-)`, where `Y` is `X_μ` (or its
//! conjugate by `u_1^{-1}` at a cell point) and `u = ∏ (I + z_γ E_γ)` over
//! `γ ∈ w(Φ^-)`. Their linear parts are extracted with degree-1 jets, so the
//! Jacobian at the origin is exact.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::perm::{check_permutation, format_one_line};
use crate::singular::Verdict;
use crate::weyl::Composition;

pub const DEFAULT_ORACLE_BOUND: usize = 6;

pub type Matrix = Vec<Vec<BigRational>>;

/// Diagonal values of the semisimple part `S`, one per block.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SemisimpleChoice {
    /// `s_p = ℓ + 1 − 2p`, so `(2,2)` gives `diag(1,1,−1,−1)`.
    #[default]
    Centered,
    /// `s_p = p`.
    BlockIndex,
}

#[derive(Debug, Clone, Copy)]
pub struct OracleOptions {
    pub bound: usize,
    pub semisimple: SemisimpleChoice,
}

impl Default for OracleOptions {
    fn default() -> Self {
        OracleOptions {
            bound: DEFAULT_ORACLE_BOUND,
            semisimple: SemisimpleChoice::Centered,
        }
    }
}

fn int(k: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// `X_μ = S + N` with `N = Σ_{α_i ∈ J_μ} E_{i,i+1}`.
#[derive(Debug, Clone)]
pub struct RegularMatrix {
    mu: Composition,
    block_of: Vec<usize>,
    block_values: Vec<BigRational>,
}

impl RegularMatrix {
    pub fn new(mu: &Composition, choice: SemisimpleChoice) -> Self {
        let l = mu.len() as i64;
        let block_values = (1..=l)
            .map(|p| match choice {
                SemisimpleChoice::Centered => int(l + 1 - 2 * p),
                SemisimpleChoice::BlockIndex => int(p),
            })
            .collect();
        RegularMatrix {
            mu: mu.clone(),
            block_of: mu.block_of()[1..].to_vec(),
            block_values,
        }
    }

    pub fn n(&self) -> usize {
        self.mu.n()
    }

    /// Diagonal entry `S_ii` (0-based `i`).
    pub fn s(&self, i: usize) -> &BigRational {
        &self.block_values[self.block_of[i]]
    }

    /// `(ε_i − ε_j)(S) = S_ii − S_jj`.
    pub fn root_value(&self, i: usize, j: usize) -> BigRational {
        self.s(i) - self.s(j)
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.block_of[i] == self.block_of[j]
    }

    pub fn nilpotent(&self) -> Matrix {
        let n = self.n();
        let mut m = zero_matrix(n);
        for i in 0..n.saturating_sub(1) {
            if self.same_block(i, i + 1) {
                m[i][i + 1] = BigRational::one();
            }
        }
        m
    }

    pub fn matrix(&self) -> Matrix {
        let mut m = self.nilpotent();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = self.s(i).clone();
        }
        m
    }
}

pub fn zero_matrix(n: usize) -> Matrix {
    vec![vec![BigRational::zero(); n]; n]
}

pub fn identity_matrix(n: usize) -> Matrix {
    let mut m = zero_matrix(n);
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = BigRational::one();
    }
    m
}

pub fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![BigRational::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !bk[j].is_zero() {
                    out[i][j] += &a[i][k] * &bk[j];
                }
            }
        }
    }
    out
}

/// Permutation matrix with `P e_j = e_{w(j)}`.
pub fn permutation_matrix(w: &[usize]) -> Matrix {
    let n = w.len();
    let mut p = zero_matrix(n);
    for (j, &wj) in w.iter().enumerate() {
        p[wj - 1][j] = BigRational::one();
    }
    p
}

fn transpose(a: &Matrix) -> Matrix {
    let n = a.len();
    let m = a[0].len();
    (0..m).map(|j| (0..n).map(|i| a[i][j].clone()).collect()).collect()
}

/// Membership in `H_Δ`: upper triangular plus the first subdiagonal.
pub fn in_h_delta(m: &Matrix) -> bool {
    m.iter()
        .enumerate()
        .all(|(i, row)| row.iter().take(i.saturating_sub(1)).all(Zero::is_zero))
}

/// Inverse of a unipotent upper triangular matrix by back substitution.
pub fn unipotent_inverse(u: &Matrix) -> Result<Matrix> {
    let n = u.len();
    if u.iter().any(|r| r.len() != n) {
        return Err(Error::InvalidMatrix("matrix is not square".into()));
    }
    for (i, row) in u.iter().enumerate() {
        if !row[i].is_one() || row[..i].iter().any(|x| !x.is_zero()) {
            return Err(Error::InvalidMatrix("matrix is not unipotent upper triangular".into()));
        }
    }
    let mut inv = identity_matrix(n);
    #[allow(clippy::needless_range_loop)]
    for j in 0..n {
        for i in (0..j).rev() {
            let mut s = BigRational::zero();
            for k in i + 1..=j {
                s += &u[i][k] * &inv[k][j];
            }
            inv[i][j] = -s;
        }
    }
    Ok(inv)
}

/// Rank over the rationals by Gaussian elimination.
pub fn rational_rank(m: &Matrix) -> usize {
    let mut a = m.clone();
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let (top, below) = a.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            if row[c].is_zero() {
                continue;
            }
            let f = &row[c] / &pivot_row[c];
            for (x, p) in row[c..].iter_mut().zip(&pivot_row[c..]) {
                *x -= &f * p;
            }
        }
        rank += 1;
    }
    rank
}

/// Degree-≤1 polynomial: `coeffs[0]` is the constant, `coeffs[1 + k]` the
/// coefficient of variable `k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jet {
    coeffs: Vec<BigRational>,
}

impl Jet {
    pub fn constant(nvars: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); nvars + 1];
        coeffs[0] = c;
        Jet { coeffs }
    }

    pub fn variable(nvars: usize, k: usize, c: BigRational) -> Self {
        let mut coeffs = vec![BigRational::zero(); nvars + 1];
        coeffs[1 + k] = c;
        Jet { coeffs }
    }

    pub fn constant_term(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn linear(&self) -> &[BigRational] {
        &self.coeffs[1..]
    }

    pub fn add(&self, other: &Jet) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    /// Product modulo degree ≥ 2.
    pub fn mul(&self, other: &Jet) -> Jet {
        let (a0, b0) = (&self.coeffs[0], &other.coeffs[0]);
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        coeffs.push(a0 * b0);
        for (a, b) in self.coeffs[1..].iter().zip(&other.coeffs[1..]) {
            coeffs.push(a0 * b + a * b0);
        }
        Jet { coeffs }
    }
}

/// `n × n` matrix of jets in a fixed number of variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JetMatrix {
    n: usize,
    nvars: usize,
    entries: Vec<Jet>,
}

impl JetMatrix {
    pub fn from_constant(m: &Matrix, nvars: usize) -> Self {
        let n = m.len();
        JetMatrix {
            n,
            nvars,
            entries: m.iter().flatten().map(|c| Jet::constant(nvars, c.clone())).collect(),
        }
    }

    /// `I + c·z_k·E_{ij}`.
    pub fn elementary(n: usize, nvars: usize, i: usize, j: usize, k: usize, c: BigRational) -> Self {
        let mut m = JetMatrix::from_constant(&identity_matrix(n), nvars);
        m.entries[i * n + j] = m.entries[i * n + j].add(&Jet::variable(nvars, k, c));
        m
    }

    pub fn get(&self, i: usize, j: usize) -> &Jet {
        &self.entries[i * self.n + j]
    }

    pub fn mul(&self, other: &JetMatrix) -> JetMatrix {
        let n = self.n;
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let mut acc = Jet::constant(self.nvars, BigRational::zero());
                for k in 0..n {
                    acc = acc.add(&self.get(i, k).mul(other.get(k, j)));
                }
                entries.push(acc);
            }
        }
        JetMatrix {
            n,
            nvars: self.nvars,
            entries,
        }
    }

    /// `self · (I + c·z_k·E_{ij})`: column `j` gains `c·z_k` times column `i`.
    pub fn mul_elementary_right(&mut self, i: usize, j: usize, k: usize, c: &BigRational) {
        for r in 0..self.n {
            let add = self.get(r, i).constant_term() * c;
            self.entries[r * self.n + j].coeffs[1 + k] += add;
        }
    }

    /// `(I + c·z_k·E_{ij}) · self`: row `i` gains `c·z_k` times row `j`.
    pub fn mul_elementary_left(&mut self, i: usize, j: usize, k: usize, c: &BigRational) {
        for col in 0..self.n {
            let add = self.get(j, col).constant_term() * c;
            self.entries[i * self.n + col].coeffs[1 + k] += add;
        }
    }
}

/// A root `ε_i − ε_j` as the 0-based pair `(i, j)`.
pub type RootPair = (usize, usize);

/// `ε_i − ε_j` written in simple-root coordinates of `A_{n−1}`.
pub fn pair_to_coeffs(n: usize, (i, j): RootPair) -> Vec<i32> {
    let mut v = vec![0; n - 1];
    let (lo, hi, s) = if i < j { (i, j, 1) } else { (j, i, -1) };
    for x in &mut v[lo..hi] {
        *x = s;
    }
    v
}

/// Roots in the order used for factors of `u` and for Jacobian columns:
/// positive roots before negative ones, each by height then by the
/// coefficient vector.
fn root_order_key(n: usize, p: RootPair) -> (bool, usize, Vec<i32>) {
    let c = pair_to_coeffs(n, p);
    let neg = p.0 > p.1;
    let abs: Vec<i32> = c.iter().map(|x| x.abs()).collect();
    (neg, p.0.abs_diff(p.1), abs)
}

/// `w(Φ^-)` in root order.
pub fn w_negative_roots(w: &[usize]) -> Vec<RootPair> {
    let n = w.len();
    let mut out: Vec<RootPair> = (0..n)
        .flat_map(|b| (b + 1..n).map(move |a| (w[a] - 1, w[b] - 1)))
        .collect();
    out.sort_by_key(|&p| root_order_key(n, p));
    out
}

/// `w(Φ^- \ Δ^-)` in root order.
pub fn generator_roots(w: &[usize]) -> Vec<RootPair> {
    let n = w.len();
    let mut out: Vec<RootPair> = (0..n)
        .flat_map(|b| (b + 2..n).map(move |a| (w[a] - 1, w[b] - 1)))
        .collect();
    out.sort_by_key(|&p| root_order_key(n, p));
    out
}

/// `Ad(ẇ^{-1})(N_μ) ∈ H_Δ`, computed as `P_w^T N_μ P_w`.
pub fn admissibility_matrix_check(w: &[usize], mu: &Composition) -> Result<bool> {
    check_input(w, mu, usize::MAX)?;
    let x = RegularMatrix::new(mu, SemisimpleChoice::Centered);
    let p = permutation_matrix(w);
    let conj = mat_mul(&mat_mul(&transpose(&p), &x.nilpotent()), &p);
    Ok(in_h_delta(&conj))
}

fn check_input(w: &[usize], mu: &Composition, bound: usize) -> Result<()> {
    check_permutation(w)?;
    if w.len() != mu.n() {
        return Err(Error::RankMismatch {
            expected: mu.n(),
            got: w.len(),
        });
    }
    if w.len() > bound {
        return Err(Error::OracleBound { n: w.len(), bound });
    }
    Ok(())
}

fn require_admissible(w: &[usize], mu: &Composition) -> Result<()> {
    if !admissibility_matrix_check(w, mu)? {
        return Err(Error::NotAdmissible {
            word: format_one_line(w),
            j: crate::weyl::format_set(&mu.subset()),
        });
    }
    Ok(())
}

/// Linear parts of the patch generators, rows and columns labelled by roots.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Jacobian {
    pub rows: Vec<RootPair>,
    pub cols: Vec<RootPair>,
    pub entries: Matrix,
    pub rank: usize,
    pub verdict: Verdict,
}

impl Jacobian {
    fn build(rows: Vec<RootPair>, cols: Vec<RootPair>, entries: Matrix) -> Self {
        let rank = rational_rank(&entries);
        let verdict = if rank == rows.len() {
            Verdict::Smooth
        } else {
            Verdict::Singular
        };
        Jacobian {
            rows,
            cols,
            entries,
            rank,
            verdict,
        }
    }

    pub fn entry(&self, row: RootPair, col: RootPair) -> Option<&BigRational> {
        let r = self.rows.iter().position(|&x| x == row)?;
        let c = self.cols.iter().position(|&x| x == col)?;
        Some(&self.entries[r][c])
    }
}

/// Output order: roots outside `Φ_J` first, then those inside, each group
/// in root order.
fn display_order(x: &RegularMatrix, roots: &[RootPair]) -> Vec<RootPair> {
    let mut out: Vec<RootPair> = roots.iter().copied().filter(|&(i, j)| !x.same_block(i, j)).collect();
    out.extend(roots.iter().copied().filter(|&(i, j)| x.same_block(i, j)));
    out
}

/// Jet pipeline: `Ad(u^{-1})(y)` with the factors of `u` taken in
/// `factor_order` (a permutation of `0..N`, root order when `None`).
fn jet_jacobian(w: &[usize], x: &RegularMatrix, y: &Matrix, factor_order: Option<&[usize]>) -> Result<Jacobian> {
    let vars = w_negative_roots(w);
    let nvars = vars.len();
    let order: Vec<usize> = match factor_order {
        Some(o) => {
            let mut check = o.to_vec();
            check.sort_unstable();
            if check != (0..nvars).collect::<Vec<_>>() {
                return Err(Error::InvalidPermutation(format!("{o:?}")));
            }
            o.to_vec()
        }
        None => (0..nvars).collect(),
    };
    // u = F_1 ⋯ F_N, so Ad(u^{-1})(y) = F_N^{-1} ⋯ F_1^{-1} y F_1 ⋯ F_N
    let mut m = JetMatrix::from_constant(y, nvars);
    let minus_one = -BigRational::one();
    let one = BigRational::one();
    for &k in &order {
        let (i, j) = vars[k];
        m.mul_elementary_left(i, j, k, &minus_one);
        m.mul_elementary_right(i, j, k, &one);
    }
    let rows = display_order(x, &generator_roots(w));
    let cols = display_order(x, &vars);
    let col_var: Vec<usize> = cols.iter().map(|c| vars.iter().position(|v| v == c).expect("present")).collect();
    let entries = rows
        .iter()
        .map(|&(i, j)| {
            let lin = m.get(i, j).linear();
            col_var.iter().map(|&k| lin[k].clone()).collect()
        })
        .collect();
    Ok(Jacobian::build(rows, cols, entries))
}

/// Jacobian of the patch ideal at `ẇB` in `Hess(X_μ)` via jet conjugation.
pub fn jacobian_at_fixed_point(w: &[usize], mu: &Composition, opts: &OracleOptions) -> Result<Jacobian> {
    jacobian_with_factor_order(w, mu, opts, None)
}

/// As [`jacobian_at_fixed_point`] with an explicit order of the factors of
/// `u`, indexing `w(Φ^-)` in root order.
pub fn jacobian_with_factor_order(
    w: &[usize],
    mu: &Composition,
    opts: &OracleOptions,
    factor_order: Option<&[usize]>,
) -> Result<Jacobian> {
    check_input(w, mu, opts.bound)?;
    require_admissible(w, mu)?;
    let x = RegularMatrix::new(mu, opts.semisimple);
    jet_jacobian(w, &x, &x.matrix(), factor_order)
}

/// `[E_{ij}, E_{kl}] = δ_{jk} E_{il} − δ_{li} E_{kj}`; returns the
/// coefficient `c` with `[E_a, E_b] = c·E_{a+b}`.
fn structure_constant(a: RootPair, b: RootPair) -> i64 {
    let (i, j) = a;
    let (k, l) = b;
    let mut c = 0;
    if j == k && i != l {
        c += 1;
    }
    if l == i && k != j {
        c -= 1;
    }
    c
}

/// The same Jacobian from `η(S) z_η − Σ c_{γ,α} z_γ` over `α ∈ J`,
/// `γ ∈ w(Φ^-)`, `η = γ + α`, without any matrix conjugation.
pub fn linear_terms_closed_form(w: &[usize], mu: &Composition, opts: &OracleOptions) -> Result<Jacobian> {
    check_input(w, mu, opts.bound)?;
    require_admissible(w, mu)?;
    let x = RegularMatrix::new(mu, opts.semisimple);
    let n = w.len();
    let j_roots: Vec<RootPair> = (0..n.saturating_sub(1)).filter(|&i| x.same_block(i, i + 1)).map(|i| (i, i + 1)).collect();
    let rows = display_order(&x, &generator_roots(w));
    let cols = display_order(&x, &w_negative_roots(w));
    let entries = rows
        .iter()
        .map(|&eta| {
            cols.iter()
                .map(|&gamma| {
                    let mut v = if gamma == eta {
                        x.root_value(eta.0, eta.1)
                    } else {
                        BigRational::zero()
                    };
                    for &alpha in &j_roots {
                        // η = γ + α means the pairs chain: (i,k) + (k,j) or (k,j) + (i,k)
                        let sums_to_eta = (gamma.1 == alpha.0 && (gamma.0, alpha.1) == eta)
                            || (alpha.1 == gamma.0 && (alpha.0, gamma.1) == eta);
                        if sums_to_eta {
                            v -= int(structure_constant(gamma, alpha));
                        }
                    }
                    v
                })
                .collect()
        })
        .collect();
    Ok(Jacobian::build(rows, cols, entries))
}

#[derive(Debug, Clone)]
pub struct CellPointJacobian {
    pub jacobian: Jacobian,
    pub note: &'static str,
}

pub const CELL_POINT_NOTE: &str =
    "full rank certifies smoothness at u1*w*B; rank deficiency certifies a singular point of the patch";

/// Jacobian of the patch at `u_1 ẇB`: the jet pipeline applied to
/// `Ad(u^{-1} u_1^{-1})(X_μ)`.
pub fn jacobian_at_cell_point(w: &[usize], mu: &Composition, u1: &Matrix, opts: &OracleOptions) -> Result<CellPointJacobian> {
    check_input(w, mu, opts.bound)?;
    require_admissible(w, mu)?;
    if u1.len() != w.len() {
        return Err(Error::RankMismatch {
            expected: w.len(),
            got: u1.len(),
        });
    }
    let x = RegularMatrix::new(mu, opts.semisimple);
    let u1_inv = unipotent_inverse(u1)?;
    let y = mat_mul(&mat_mul(&u1_inv, &x.matrix()), u1);
    let p = permutation_matrix(w);
    if !in_h_delta(&mat_mul(&mat_mul(&transpose(&p), &y), &p)) {
        return Err(Error::PointNotInVariety);
    }
    Ok(CellPointJacobian {
        jacobian: jet_jacobian(w, &x, &y, None)?,
        note: CELL_POINT_NOTE,
    })
}

/// Verdict at `ẇB` from the Jacobian rank.
pub fn oracle_verdict(w: &[usize], mu: &Composition, opts: &OracleOptions) -> Result<Verdict> {
    Ok(jacobian_at_fixed_point(w, mu, opts)?.verdict)
}

/// `ε_i − ε_j` formatted as a root, e.g. `-a1-a2`.
pub fn format_pair(n: usize, p: RootPair) -> String {
    crate::roots::Root(pair_to_coeffs(n, p)).to_string()
}

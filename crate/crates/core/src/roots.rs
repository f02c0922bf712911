//! Root systems of the simple types A through G, realized as integer
//! coefficient vectors over the simple roots, together with parabolic
//! subsystems and the classification of their Dynkin sub-diagrams.
//!
//! Numbering follows the Bourbaki/Humphreys conventions: in `B_n` the short
//! simple root is `α_n`, in `C_n` the long one is `α_n`, in `G_2` the short
//! simple root is `α_1`, and the `E_n` diagrams hang `α_2` off `α_4`.
//!
//! The Cartan matrix is stored as `a[i][j] = <α_i, α_j^∨>`, so the simple
//! reflection `s_j` acts by `s_j(β) = β - <β, α_j^∨> α_j`.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Lie type family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::E => "E",
            Family::F => "F",
            Family::G => "G",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            other => Err(format!("unknown Lie type family `{other}`")),
        }
    }
}

/// A simple Cartan type together with its Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    family: Family,
    rank: usize,
    matrix: Vec<Vec<i32>>,
}

impl CartanDatum {
    /// Validates `(family, rank)` and builds the Cartan matrix.
    ///
    /// `A_0` is accepted as the trivial root system (the Weyl group of
    /// `GL_1`). `B` and `C` need rank at least 2 and `D` at least 4; lower
    /// ranks coincide with other types and are rejected here.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let invalid = |reason| Err(Error::InvalidType { family, rank, reason });
        match family {
            Family::A => {}
            Family::B | Family::C if rank < 2 => return invalid("rank must be at least 2"),
            Family::D if rank < 4 => return invalid("rank must be at least 4"),
            Family::E if !(6..=8).contains(&rank) => return invalid("rank must be 6, 7 or 8"),
            Family::F if rank != 4 => return invalid("rank must be 4"),
            Family::G if rank != 2 => return invalid("rank must be 2"),
            _ => {}
        }

        let n = rank;
        let mut m = vec![vec![0i32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize| {
            m[i][j] = -1;
            m[j][i] = -1;
        };
        match family {
            Family::A | Family::B | Family::C => {
                for i in 1..n {
                    link(i - 1, i);
                }
            }
            Family::D => {
                for i in 1..n - 1 {
                    link(i - 1, i);
                }
                link(n - 3, n - 1);
            }
            Family::E => {
                link(0, 2);
                link(1, 3);
                for i in 3..n {
                    link(i - 1, i);
                }
            }
            Family::F => {
                link(0, 1);
                link(1, 2);
                link(2, 3);
            }
            Family::G => link(0, 1),
        }
        // a[i][j] = 2(α_i, α_j)/(α_j, α_j): -2 when α_i is long and α_j short.
        match family {
            Family::B => m[n - 2][n - 1] = -2,
            Family::C => m[n - 1][n - 2] = -2,
            Family::F => m[1][2] = -2,
            Family::G => m[1][0] = -3,
            _ => {}
        }
        Ok(CartanDatum {
            family,
            rank,
            matrix: m,
        })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// `a[i][j] = <α_i, α_j^∨>`.
    pub fn matrix(&self) -> &[Vec<i32>] {
        &self.matrix
    }

    pub fn entry(&self, i: usize, j: usize) -> i32 {
        self.matrix[i][j]
    }

    /// Name such as `B4`.
    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    /// Order of the Weyl group, from the closed-form formula for the type.
    pub fn weyl_order(&self) -> u128 {
        let n = self.rank as u128;
        let fact = |k: u128| (1..=k).product::<u128>();
        match self.family {
            Family::A => fact(n + 1),
            Family::B | Family::C => (1u128 << n) * fact(n),
            Family::D => (1u128 << (n - 1)) * fact(n),
            Family::E => match n {
                6 => 51_840,
                7 => 2_903_040,
                _ => 696_729_600,
            },
            Family::F => 1_152,
            Family::G => 12,
        }
    }

    /// Number of positive roots, from the closed form for the type.
    pub fn positive_root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }
}

impl fmt::Display for CartanDatum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// A root written in the basis of simple roots.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(pub Vec<i32>);

impl Root {
    pub fn simple(rank: usize, i: usize) -> Root {
        let mut v = vec![0; rank];
        v[i] = 1;
        Root(v)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().any(|&c| c > 0)
    }

    pub fn is_negative(&self) -> bool {
        self.0.iter().any(|&c| c < 0)
    }

    /// Index `i` if this is `±α_i`, with its sign.
    pub fn as_simple(&self) -> Option<(usize, i32)> {
        let mut found = None;
        for (i, &c) in self.0.iter().enumerate() {
            match c {
                0 => {}
                1 | -1 if found.is_none() => found = Some((i, c)),
                _ => return None,
            }
        }
        found
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }

    pub fn add(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Root) -> Root {
        Root(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Simple indices in the support.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(i, _)| i)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.unsigned_abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// A simple root system with its positive roots enumerated.
///
/// Roots are indexed as follows: positive roots occupy `0..P` in
/// `(height, coefficients)` order, and the negative of positive root `k`
/// has index `P + k`.
#[derive(Debug, Clone)]
pub struct RootSystem {
    cartan: CartanDatum,
    positive: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
    highest: Root,
    // pairing[k][j] = <γ_k, α_j^∨> for positive root γ_k
    pairing: Vec<Vec<i32>>,
}

impl RootSystem {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        Ok(Self::from_cartan(CartanDatum::new(family, rank)?))
    }

    /// Builds the positive roots by breadth-first reflection closure from the
    /// simple roots.
    pub fn from_cartan(cartan: CartanDatum) -> Self {
        let n = cartan.rank();
        let a = cartan.matrix();
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::new();
        let mut queue: VecDeque<Vec<i32>> = VecDeque::new();
        for i in 0..n {
            let r = Root::simple(n, i).0;
            seen.insert(r.clone());
            queue.push_back(r);
        }
        while let Some(beta) = queue.pop_front() {
            for j in 0..n {
                let p: i32 = (0..n).map(|i| beta[i] * a[i][j]).sum();
                if p == 0 {
                    continue;
                }
                let mut img = beta.clone();
                img[j] -= p;
                if img.iter().all(|&c| c >= 0) && img.iter().any(|&c| c > 0) && seen.insert(img.clone()) {
                    queue.push_back(img);
                }
            }
        }
        let mut positive: Vec<Root> = seen.into_iter().map(Root).collect();
        positive.sort_by(|x, y| x.height().cmp(&y.height()).then_with(|| x.0.cmp(&y.0)));

        let count = positive.len();
        let mut index = HashMap::with_capacity(2 * count);
        for (k, r) in positive.iter().enumerate() {
            index.insert(r.0.clone(), k);
            index.insert(r.neg().0, count + k);
        }
        let highest = positive
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .unwrap_or_else(|| Root(vec![0; n]));
        let pairing = positive
            .iter()
            .map(|r| (0..n).map(|j| (0..n).map(|i| r.0[i] * a[i][j]).sum()).collect())
            .collect();
        RootSystem {
            cartan,
            positive,
            index,
            highest,
            pairing,
        }
    }

    pub fn cartan(&self) -> &CartanDatum {
        &self.cartan
    }

    pub fn family(&self) -> Family {
        self.cartan.family()
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn name(&self) -> String {
        self.cartan.name()
    }

    pub fn weyl_order(&self) -> u128 {
        self.cartan.weyl_order()
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn num_positive(&self) -> usize {
        self.positive.len()
    }

    /// Negative roots, in the order of their positive counterparts.
    pub fn negative_roots(&self) -> Vec<Root> {
        self.positive.iter().map(Root::neg).collect()
    }

    /// All roots in index order.
    pub fn all_roots(&self) -> Vec<Root> {
        let mut v = self.positive.clone();
        v.extend(self.negative_roots());
        v
    }

    /// Root with the given index.
    pub fn root(&self, idx: usize) -> Root {
        let p = self.positive.len();
        if idx < p {
            self.positive[idx].clone()
        } else {
            self.positive[idx - p].neg()
        }
    }

    pub fn index_of(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_root(&self, coeffs: &[i32]) -> bool {
        self.index.contains_key(coeffs)
    }

    pub fn check_root(&self, r: &Root) -> Result<()> {
        if r.0.len() == self.rank() && self.is_root(&r.0) {
            Ok(())
        } else {
            Err(Error::NotARoot(r.0.clone()))
        }
    }

    /// The highest root θ.
    pub fn highest_root(&self) -> &Root {
        &self.highest
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    /// `<γ, α_j^∨>` for any integer vector γ.
    pub fn pairing(&self, gamma: &[i32], j: usize) -> i32 {
        let a = self.cartan.matrix();
        gamma.iter().enumerate().map(|(i, c)| c * a[i][j]).sum()
    }

    /// Precomputed `<γ_k, α_j^∨>` for positive root `k`.
    pub fn positive_pairing(&self, k: usize, j: usize) -> i32 {
        self.pairing[k][j]
    }

    /// Applies the simple reflection `s_j` to an integer vector in place.
    pub fn reflect_in_place(&self, gamma: &mut [i32], j: usize) {
        let p = self.pairing(gamma, j);
        gamma[j] -= p;
    }

    pub fn reflect(&self, gamma: &Root, j: usize) -> Root {
        let mut v = gamma.0.clone();
        self.reflect_in_place(&mut v, j);
        Root(v)
    }

    /// `β ≺ α`: `α - β` is a (nonempty) sum of positive roots.
    ///
    /// Computed by saturating the moves `d -> d - γ` for positive roots γ,
    /// starting from `d = α - β` and keeping every coordinate nonnegative,
    /// until `d = 0` is reached or no move is left.
    pub fn precedes(&self, beta: &Root, alpha: &Root) -> Result<bool> {
        self.check_root(beta)?;
        self.check_root(alpha)?;
        if beta == alpha {
            return Ok(false);
        }
        let start = alpha.sub(beta).0;
        let mut seen: BTreeSet<Vec<i32>> = BTreeSet::from([start.clone()]);
        let mut queue = VecDeque::from([start]);
        while let Some(d) = queue.pop_front() {
            if d.iter().all(|&c| c == 0) {
                return Ok(true);
            }
            for g in &self.positive {
                let next: Vec<i32> = d.iter().zip(&g.0).map(|(a, b)| a - b).collect();
                if next.iter().all(|&c| c >= 0) && seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        Ok(false)
    }

    /// `{α + β ∈ Φ : α ∈ I, β ∈ J}`, sorted by root index.
    pub fn bracket_set(&self, left: &[Root], right: &[Root]) -> Vec<Root> {
        let mut out = BTreeSet::new();
        for a in left {
            for b in right {
                if let Some(k) = self.index_of(&a.add(b).0) {
                    out.insert(k);
                }
            }
        }
        out.into_iter().map(|k| self.root(k)).collect()
    }

    /// Whether the root lies in the span of the simple roots in `set`.
    pub fn in_span(&self, r: &Root, set: &[usize]) -> bool {
        r.support().all(|i| set.contains(&i))
    }

    /// Positive roots of `Φ_J`.
    pub fn positive_roots_in(&self, set: &[usize]) -> Vec<Root> {
        self.positive
            .iter()
            .filter(|r| self.in_span(r, set))
            .cloned()
            .collect()
    }

    pub fn parabolic(&self, set: &[usize]) -> Result<ParabolicSubsystem> {
        ParabolicSubsystem::new(self, set)
    }

    pub fn check_indices(&self, set: &[usize]) -> Result<()> {
        for &i in set {
            if i >= self.rank() {
                return Err(Error::IndexOutOfRange {
                    index: i,
                    rank: self.rank(),
                });
            }
        }
        Ok(())
    }
}

/// One connected component of a parabolic subsystem, with the relabelling
/// that puts it into standard numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    /// `labels[k]` is the ambient simple index playing the role of `α_{k+1}`.
    pub labels: Vec<usize>,
    pub datum: CartanDatum,
}

impl Component {
    /// Canonical (0-based) labels of the ambient indices of `set` lying in
    /// this component.
    pub fn relabel(&self, set: &[usize]) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .labels
            .iter()
            .enumerate()
            .filter(|(_, amb)| set.contains(amb))
            .map(|(k, _)| k)
            .collect();
        out.sort_unstable();
        out
    }

    pub fn contains(&self, ambient: usize) -> bool {
        self.labels.contains(&ambient)
    }
}

/// The subsystem `Φ_J` spanned by a set of simple roots.
#[derive(Debug, Clone)]
pub struct ParabolicSubsystem {
    simple: Vec<usize>,
    positive: Vec<Root>,
    components: Vec<Component>,
}

impl ParabolicSubsystem {
    pub fn new(rs: &RootSystem, set: &[usize]) -> Result<Self> {
        rs.check_indices(set)?;
        let mut simple: Vec<usize> = set.to_vec();
        simple.sort_unstable();
        simple.dedup();
        let positive = rs.positive_roots_in(&simple);
        let components = connected_components(rs.cartan().matrix(), &simple)
            .into_iter()
            .map(|comp| classify_component(rs.cartan().matrix(), &comp))
            .collect::<Result<Vec<_>>>()?;
        Ok(ParabolicSubsystem {
            simple,
            positive,
            components,
        })
    }

    pub fn simple(&self) -> &[usize] {
        &self.simple
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// `Φ_J = Φ_J^+ ⊔ Φ_J^-`.
    pub fn roots(&self) -> Vec<Root> {
        let mut v = self.positive.clone();
        v.extend(self.positive.iter().map(Root::neg));
        v
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    /// `|W_J|` as the product of the component orders.
    pub fn weyl_order(&self) -> u128 {
        self.components.iter().map(|c| c.datum.weyl_order()).product()
    }

    /// Type string such as `A2xA1` (empty subsystem gives `""`).
    pub fn type_name(&self) -> String {
        self.components
            .iter()
            .map(|c| c.datum.name())
            .collect::<Vec<_>>()
            .join("x")
    }
}

fn connected_components(a: &[Vec<i32>], set: &[usize]) -> Vec<Vec<usize>> {
    let mut comps = Vec::new();
    let mut done = vec![false; a.len()];
    for &start in set {
        if done[start] {
            continue;
        }
        let mut comp = vec![start];
        done[start] = true;
        let mut k = 0;
        while k < comp.len() {
            let i = comp[k];
            for &j in set {
                if !done[j] && a[i][j] != 0 {
                    done[j] = true;
                    comp.push(j);
                }
            }
            k += 1;
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps.sort();
    comps
}

/// Walks a path from `start` through `nodes` (a tree), never revisiting.
fn walk_chain(a: &[Vec<i32>], nodes: &[usize], start: usize, avoid: Option<usize>) -> Vec<usize> {
    let mut path = vec![start];
    let mut prev = avoid;
    let mut cur = start;
    loop {
        let next = nodes
            .iter()
            .copied()
            .find(|&j| j != cur && Some(j) != prev && a[cur][j] != 0 && !path.contains(&j));
        match next {
            Some(j) => {
                prev = Some(cur);
                cur = j;
                path.push(j);
            }
            None => return path,
        }
    }
}

/// Identifies the simple type of a connected Dynkin sub-diagram and the
/// relabelling into standard numbering.
pub(crate) fn classify_component(a: &[Vec<i32>], nodes: &[usize]) -> Result<Component> {
    let n = nodes.len();
    let neighbours = |i: usize| -> Vec<usize> {
        nodes
            .iter()
            .copied()
            .filter(|&j| j != i && a[i][j] != 0)
            .collect()
    };
    let unknown = || Error::Invariant(format!("sub-diagram on {nodes:?} is not of finite type"));

    let (family, labels) = if n == 1 {
        (Family::A, vec![nodes[0]])
    } else {
        // (long, short) for the multiple bond, if any
        let mut multi = None;
        for &i in nodes {
            for &j in nodes {
                if a[i][j] <= -2 {
                    multi = Some((i, j, a[i][j]));
                }
            }
        }
        let degrees: Vec<usize> = nodes.iter().map(|&i| neighbours(i).len()).collect();
        let is_chain = degrees.iter().all(|&d| d <= 2);
        let ends: Vec<usize> = nodes
            .iter()
            .zip(&degrees)
            .filter(|(_, d)| **d == 1)
            .map(|(i, _)| *i)
            .collect();

        match multi {
            Some((long, short, -3)) => {
                if n != 2 {
                    return Err(unknown());
                }
                (Family::G, vec![short, long])
            }
            Some((long, short, _)) => {
                if !is_chain {
                    return Err(unknown());
                }
                if n == 2 {
                    // C_2 is normalized to B_2: long root first.
                    (Family::B, vec![long, short])
                } else if ends.contains(&short) {
                    let mut path = walk_chain(a, nodes, short, None);
                    path.reverse();
                    (Family::B, path)
                } else if ends.contains(&long) {
                    let mut path = walk_chain(a, nodes, long, None);
                    path.reverse();
                    (Family::C, path)
                } else {
                    if n != 4 {
                        return Err(unknown());
                    }
                    let first = neighbours(long).into_iter().find(|&j| j != short).ok_or_else(unknown)?;
                    let last = neighbours(short).into_iter().find(|&j| j != long).ok_or_else(unknown)?;
                    (Family::F, vec![first, long, short, last])
                }
            }
            None if is_chain => {
                let start = *ends.iter().min().ok_or_else(unknown)?;
                (Family::A, walk_chain(a, nodes, start, None))
            }
            None => {
                let branch: Vec<usize> = nodes
                    .iter()
                    .zip(&degrees)
                    .filter(|(_, d)| **d >= 3)
                    .map(|(i, _)| *i)
                    .collect();
                if branch.len() != 1 || degrees.iter().any(|&d| d > 3) {
                    return Err(unknown());
                }
                let c = branch[0];
                let mut arms: Vec<Vec<usize>> = neighbours(c)
                    .into_iter()
                    .map(|s| walk_chain(a, nodes, s, Some(c)))
                    .collect();
                arms.sort_by(|x, y| x.len().cmp(&y.len()).then_with(|| x[0].cmp(&y[0])));
                let lens: Vec<usize> = arms.iter().map(Vec::len).collect();
                match lens.as_slice() {
                    [1, 1, k] => {
                        // D_{k+3}: α_1 at the end of the long arm; for D_4 the
                        // arm with the smallest index plays that role.
                        let (long_arm, a1, a2) = if *k == 1 {
                            (arms[0].clone(), arms[1][0], arms[2][0])
                        } else {
                            (arms[2].clone(), arms[0][0], arms[1][0])
                        };
                        let mut labels: Vec<usize> = long_arm.into_iter().rev().collect();
                        labels.push(c);
                        labels.push(a1);
                        labels.push(a2);
                        (Family::D, labels)
                    }
                    [1, 2, k] if (2..=4).contains(k) => {
                        let short = arms[0][0];
                        let left = &arms[1];
                        let right = &arms[2];
                        let mut labels = vec![left[1], short, left[0], c];
                        labels.extend(right.iter().copied());
                        (Family::E, labels)
                    }
                    _ => return Err(unknown()),
                }
            }
        }
    };

    let datum = CartanDatum::new(family, labels.len())?;
    // the relabelled induced submatrix must equal the reference matrix
    for (p, &i) in labels.iter().enumerate() {
        for (q, &j) in labels.iter().enumerate() {
            if a[i][j] != datum.entry(p, q) {
                return Err(Error::Invariant(format!(
                    "classification of {nodes:?} as {} does not match the Cartan submatrix",
                    datum.name()
                )));
            }
        }
    }
    Ok(Component { labels, datum })
}

//! Permutations in one-line notation and classical pattern containment.

use crate::error::{Error, Result};

/// Checks that `p` is a permutation of `1..=p.len()`.
pub fn check_permutation(p: &[usize]) -> Result<()> {
    let mut seen = vec![false; p.len() + 1];
    for &x in p {
        if x == 0 || x > p.len() || seen[x] {
            return Err(Error::InvalidPermutation(format!("{p:?}")));
        }
        seen[x] = true;
    }
    Ok(())
}

/// `23586741` for single-digit entries, comma separated otherwise.
pub fn format_one_line(p: &[usize]) -> String {
    if p.len() <= 9 {
        p.iter().map(|x| x.to_string()).collect()
    } else {
        p.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// Parses `3421`, `[3,4,2,1]` or `3,4,2,1`.
pub fn parse_one_line(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']');
    let bad = || Error::InvalidPermutation(s.to_string());
    let p: Vec<usize> = if t.contains(',') || t.contains(' ') {
        t.split([',', ' '])
            .filter(|x| !x.is_empty())
            .map(|x| x.trim().parse().map_err(|_| bad()))
            .collect::<Result<_>>()?
    } else {
        t.chars()
            .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
            .collect::<Result<_>>()?
    };
    check_permutation(&p)?;
    Ok(p)
}

pub fn inverse(p: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; p.len()];
    for (i, &x) in p.iter().enumerate() {
        inv[x - 1] = i + 1;
    }
    inv
}

/// Replaces the entries of a sequence of distinct values by their ranks.
pub fn standardize(seq: &[usize]) -> Vec<usize> {
    let mut sorted = seq.to_vec();
    sorted.sort_unstable();
    seq.iter()
        .map(|x| sorted.binary_search(x).expect("present") + 1)
        .collect()
}

/// Positions (0-based) of an occurrence of `pattern` in `seq`, if any.
///
/// Generic backtracking search over increasing position tuples.
pub fn find_pattern(seq: &[usize], pattern: &[usize]) -> Option<Vec<usize>> {
    fn rec(seq: &[usize], pattern: &[usize], start: usize, chosen: &mut Vec<usize>) -> bool {
        let k = chosen.len();
        if k == pattern.len() {
            return true;
        }
        for pos in start..seq.len() {
            if seq.len() - pos < pattern.len() - k {
                break;
            }
            let ok = chosen.iter().enumerate().all(|(m, &q)| {
                (pattern[m] < pattern[k]) == (seq[q] < seq[pos])
            });
            if ok {
                chosen.push(pos);
                if rec(seq, pattern, pos + 1, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    rec(seq, pattern, 0, &mut chosen).then_some(chosen)
}

pub fn contains_pattern(seq: &[usize], pattern: &[usize]) -> bool {
    find_pattern(seq, pattern).is_some()
}

/// Occurrence of `123` by a direct triple scan.
pub fn find_123(seq: &[usize]) -> Option<[usize; 3]> {
    let n = seq.len();
    for i in 0..n {
        for j in i + 1..n {
            if seq[j] <= seq[i] {
                continue;
            }
            for k in j + 1..n {
                if seq[k] > seq[j] {
                    return Some([i, j, k]);
                }
            }
        }
    }
    None
}

/// Occurrence of `2143` by a direct quadruple scan.
pub fn find_2143(seq: &[usize]) -> Option<[usize; 4]> {
    let n = seq.len();
    for a in 0..n {
        for b in a + 1..n {
            if seq[b] >= seq[a] {
                continue;
            }
            for c in b + 1..n {
                if seq[c] <= seq[a] {
                    continue;
                }
                for d in c + 1..n {
                    if seq[d] > seq[a] && seq[d] < seq[c] {
                        return Some([a, b, c, d]);
                    }
                }
            }
        }
    }
    None
}

/// All permutations of `1..=n` in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    let mut p: Vec<usize> = (1..=n).collect();
    let mut out = vec![p.clone()];
    loop {
        let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
            return out;
        };
        let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("exists");
        p.swap(i - 1, j);
        p[i..].reverse();
        out.push(p.clone());
    }
}

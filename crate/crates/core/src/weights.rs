//! Torus weights of `GL(V1) × GL(V2)` and the bookkeeping that turns
//! weight-space dimensions back into characters.
//!
//! A weight is stored as one vector: the first `m` entries are the `V1`
//! side, the remaining `n` the `V2` side.

use std::collections::BTreeMap;

use crate::birep::BiRep;
use crate::error::{Error, Result};
use crate::partition::{kostka, Partition};

pub type Weight = Vec<u16>;

pub fn is_dominant(w: &[u16], m: usize) -> bool {
    w[..m].windows(2).all(|p| p[0] >= p[1]) && w[m..].windows(2).all(|p| p[0] >= p[1])
}

/// The dominant representative of the `S_m × S_n` orbit of `w`.
pub fn dominant(w: &[u16], m: usize) -> Weight {
    let mut a = w[..m].to_vec();
    let mut b = w[m..].to_vec();
    a.sort_unstable_by(|x, y| y.cmp(x));
    b.sort_unstable_by(|x, y| y.cmp(x));
    a.extend(b);
    a
}

fn distinct_permutations(v: &[u16]) -> u64 {
    let mut counts: BTreeMap<u16, u64> = BTreeMap::new();
    for &x in v {
        *counts.entry(x).or_default() += 1;
    }
    let mut out: u64 = 1;
    let mut seen: u64 = 0;
    for c in counts.values() {
        for k in 1..=*c {
            seen += 1;
            out = out * seen / k;
        }
    }
    out
}

/// Size of the `S_m × S_n` orbit of `w`.
pub fn orbit_size(w: &[u16], m: usize) -> u64 {
    distinct_permutations(&w[..m]) * distinct_permutations(&w[m..])
}

fn pad(p: &Partition, len: usize) -> Vec<u16> {
    (0..len).map(|i| if i < p.len() { p.parts()[i] as u16 } else { 0 }).collect()
}

/// Dominant weights whose `V1` side sums to `a` and `V2` side to `b`.
pub fn dominant_weights(m: usize, n: usize, a: usize, b: usize) -> Vec<Weight> {
    let left = Partition::all_of_size_with_len(a, m);
    let right = Partition::all_of_size_with_len(b, n);
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in &left {
        for r in &right {
            let mut w = pad(l, m);
            w.extend(pad(r, n));
            out.push(w);
        }
    }
    out
}

/// All `m × n` nonnegative integer matrices (row-major) with the given
/// row and column sums.
pub fn contingency_tables(rows: &[u16], cols: &[u16]) -> Vec<Vec<u16>> {
    let m = rows.len();
    let n = cols.len();
    let mut out = Vec::new();
    if rows.iter().map(|&x| x as u32).sum::<u32>() != cols.iter().map(|&x| x as u32).sum::<u32>() {
        return out;
    }
    let mut cur = vec![0u16; m * n];
    let mut colrem = cols.to_vec();
    fn fill_row(
        i: usize,
        j: usize,
        left: u16,
        m: usize,
        n: usize,
        rows: &[u16],
        cur: &mut Vec<u16>,
        colrem: &mut Vec<u16>,
        out: &mut Vec<Vec<u16>>,
    ) {
        if i == m {
            if colrem.iter().all(|&c| c == 0) {
                out.push(cur.clone());
            }
            return;
        }
        if j == n - 1 {
            if left > colrem[j] {
                return;
            }
            cur[i * n + j] = left;
            colrem[j] -= left;
            let next = if i + 1 < m { rows[i + 1] } else { 0 };
            fill_row(i + 1, 0, next, m, n, rows, cur, colrem, out);
            colrem[j] += left;
            cur[i * n + j] = 0;
            return;
        }
        let hi = left.min(colrem[j]);
        for v in 0..=hi {
            cur[i * n + j] = v;
            colrem[j] -= v;
            fill_row(i, j + 1, left - v, m, n, rows, cur, colrem, out);
            colrem[j] += v;
        }
        cur[i * n + j] = 0;
    }
    if m == 0 || n == 0 {
        return out;
    }
    fill_row(0, 0, rows[0], m, n, rows, &mut cur, &mut colrem, &mut out);
    out
}

/// Row and column sums of an `m × n` exponent block.
pub fn margins(e: &[u16], m: usize, n: usize) -> Weight {
    let mut w = vec![0u16; m + n];
    for i in 0..m {
        for j in 0..n {
            let v = e[i * n + j];
            w[i] += v;
            w[m + j] += v;
        }
    }
    w
}

/// A peeled summand with its content vectors and multiplicity.
type Peeled = (Partition, Partition, Vec<usize>, Vec<usize>, u64);

/// Recover a `GL(V1) × GL(V2)` character from the dimensions of its
/// dominant weight spaces. Weights missing from `dims` count as zero.
pub fn peel_character(m: usize, dims: &BTreeMap<Weight, u64>) -> Result<BiRep> {
    let mut found: Vec<Peeled> = Vec::new();
    let mut out = BiRep::new();
    for (w, &f) in dims.iter().rev() {
        debug_assert!(is_dominant(w, m));
        let alpha: Vec<usize> = w[..m].iter().map(|&x| x as usize).collect();
        let beta: Vec<usize> = w[m..].iter().map(|&x| x as usize).collect();
        let mut c = f as i128;
        for (l, r, la, ra, mult) in &found {
            if la.iter().sum::<usize>() != alpha.iter().sum::<usize>()
                || ra.iter().sum::<usize>() != beta.iter().sum::<usize>()
            {
                continue;
            }
            c -= (*mult as i128) * (kostka(l, &alpha) as i128) * (kostka(r, &beta) as i128);
        }
        if c < 0 {
            return Err(Error::Precondition(format!("weight multiplicities are not a character at weight {w:?}")));
        }
        if c > 0 {
            let l = Partition::from_unsorted(alpha.clone());
            let r = Partition::from_unsorted(beta.clone());
            out.add(l.clone(), r.clone(), c as u64);
            found.push((l, r, alpha, beta, c as u64));
        }
    }
    Ok(out)
}

/// Dominant weight-space dimensions of a character, the inverse of
/// [`peel_character`].
pub fn weight_dims(rep: &BiRep, m: usize, n: usize) -> BTreeMap<Weight, u64> {
    let mut out = BTreeMap::new();
    for (l, r, mult) in rep.iter() {
        if l.len() > m || r.len() > n {
            continue;
        }
        for w in dominant_weights(m, n, l.size(), r.size()) {
            let a: Vec<usize> = w[..m].iter().map(|&x| x as usize).collect();
            let b: Vec<usize> = w[m..].iter().map(|&x| x as usize).collect();
            let k = kostka(l, &a) * kostka(r, &b);
            if k > 0 {
                *out.entry(w).or_insert(0) += mult * k;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::dim_schur;

    #[test]
    fn orbit_sizes() {
        assert_eq!(orbit_size(&[2, 1, 1, 3, 0], 3), 3 * 2);
        assert_eq!(orbit_size(&[1, 1, 1, 1], 2), 1);
    }

    #[test]
    fn contingency_counts() {
        // 2×2 tables with margins (1,1),(1,1): two permutation matrices
        assert_eq!(contingency_tables(&[1, 1], &[1, 1]).len(), 2);
        // margins (2,1),(2,1): [[2,0],[0,1]], [[1,1],[1,0]]
        assert_eq!(contingency_tables(&[2, 1], &[2, 1]).len(), 2);
        assert!(contingency_tables(&[2], &[1]).is_empty());
    }

    #[test]
    fn orbit_sum_recovers_dimension() {
        let rep = BiRep::single(part![2, 1], part![1, 1]);
        let dims = weight_dims(&rep, 3, 3);
        let total: u64 = dims.iter().map(|(w, d)| d * orbit_size(w, 3)).sum();
        assert_eq!(total, dim_schur(&part![2, 1], 3) * dim_schur(&part![1, 1], 3));
    }

    #[test]
    fn peel_round_trip() {
        let mut rep = BiRep::single(part![2, 2], part![1, 1, 1, 1]);
        rep.add(part![3, 1], part![2, 2], 2);
        rep.add(part![4], part![2, 1, 1], 1);
        let dims = weight_dims(&rep, 4, 4);
        assert_eq!(peel_character(4, &dims).unwrap(), rep);
    }
}

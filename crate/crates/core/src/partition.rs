//! Integer partitions and the combinatorial predicates built on them.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// A weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Builds a partition, stripping trailing zeros. Fails on increasing input.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The one-row partition `(d)`.
    pub fn row(d: usize) -> Self {
        Self::from_sorted(vec![d])
    }

    /// The one-column partition `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition(vec![1; k])
    }

    /// The rectangle `(b^a)`.
    pub fn rectangle(b: usize, a: usize) -> Self {
        Self::from_sorted(vec![b; a])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// `λ_i` with 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return usize::MAX;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn first(&self) -> usize {
        self.0.first().copied().unwrap_or(0)
    }

    /// The transposed Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.first();
        let parts = (1..=rows).map(|c| self.0.iter().take_while(|&&p| p >= c).count()).collect();
        Partition(parts)
    }

    /// `μ ⊇ λ` as Young diagrams.
    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Partition with `d` added to the first row.
    pub fn shift_first(&self, d: usize) -> Partition {
        let mut parts = self.0.clone();
        if parts.is_empty() {
            parts.push(d);
        } else {
            parts[0] += d;
        }
        Self::from_sorted(parts)
    }

    /// Sum of all parts except the first.
    pub fn tail_size(&self) -> usize {
        self.size() - self.first()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        gen_partitions(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions of `n` with at most `max_len` parts.
    pub fn all_of_size_with_len(n: usize, max_len: usize) -> Vec<Partition> {
        Self::all_of_size(n).into_iter().filter(|p| p.len() <= max_len).collect()
    }

    /// Hook length of the box in row `i`, column `j` (0-based).
    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0[i + 1..].iter().take_while(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Iterator over `(row, col)` of all boxes, 0-based.
    pub fn boxes(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }
}

fn gen_partitions(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if n == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(n)).rev() {
        cur.push(p);
        gen_partitions(n - p, p, cur, out);
        cur.pop();
    }
}

impl Ord for Partition {
    /// Graded, then lexicographic on parts.
    fn cmp(&self, other: &Self) -> Ordering {
        self.size().cmp(&other.size()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3,1,1"`; `"0"` and `""` give the empty partition.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidPartition(format!("{s}: {e}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Shorthand for building partitions in code: `part![3, 1, 1]`.
#[macro_export]
macro_rules! part {
    () => { $crate::partition::Partition::empty() };
    ($($x:expr),+ $(,)?) => { $crate::partition::Partition::new(vec![$($x),+]).expect("valid partition") };
}

/// `μ/λ` is a horizontal strip: `μ_i ≥ λ_i ≥ μ_{i+1}` for all `i ≥ 1`.
pub fn is_horizontal_strip(mu: &Partition, lambda: &Partition) -> bool {
    let len = mu.len().max(lambda.len());
    (1..=len).all(|i| mu.part(i) >= lambda.part(i) && lambda.part(i) >= mu.part(i + 1))
}

/// All `μ ⊇ λ` with `μ/λ` a horizontal strip of size `k`.
pub fn horizontal_strips(lambda: &Partition, k: usize) -> Vec<Partition> {
    let base = lambda.parts();
    let rows = base.len() + 1;
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(rows);
    fn rec(base: &[usize], rows: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        let i = cur.len();
        if i == rows {
            if left == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        let lo = base.get(i).copied().unwrap_or(0);
        let hi = if i == 0 { lo + left } else { base[i - 1].min(lo + left) };
        for v in (lo..=hi).rev() {
            cur.push(v);
            rec(base, rows, left - (v - lo), cur, out);
            cur.pop();
        }
    }
    rec(base, rows, k, &mut cur, &mut out);
    out
}

/// `dim S_λ(C^n)` by the hook-content formula.
pub fn dim_schur(lambda: &Partition, n: usize) -> u64 {
    if lambda.len() > n {
        return 0;
    }
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (i, j) in lambda.boxes() {
        num *= BigUint::from(n + j - i);
        den *= BigUint::from(lambda.hook(i, j));
    }
    (num / den).to_u64().expect("dimension fits in 64 bits")
}

/// `λ ∈ M_r`: `|λ|` even and `2λ_1 − |λ| ≤ 2r`.
pub fn in_m_r(lambda: &Partition, r: usize) -> bool {
    let size = lambda.size();
    size.is_multiple_of(2) && 2 * lambda.first() <= size + 2 * r
}

/// Binomial coefficient as `u64`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Kostka number `K_{λ,w}`: semistandard tableaux of shape `λ` and content `w`.
pub fn kostka(lambda: &Partition, content: &[usize]) -> u64 {
    fn rec(target: &Partition, cur: &Partition, content: &[usize]) -> u64 {
        match content.split_first() {
            None => u64::from(cur == target),
            Some((&c, rest)) => horizontal_strips(cur, c)
                .into_iter()
                .filter(|nu| target.contains(nu))
                .map(|nu| rec(target, &nu, rest))
                .sum(),
        }
    }
    if content.iter().sum::<usize>() != lambda.size() {
        return 0;
    }
    rec(lambda, &Partition::empty(), content)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn conjugate_examples() {
        assert_eq!(part![3, 1].conjugate(), part![2, 1, 1]);
        assert_eq!(part![].conjugate(), part![]);
        assert_eq!(part![2, 2].conjugate(), part![2, 2]);
    }

    #[test]
    fn conjugate_is_involution_up_to_12() {
        for n in 0..=12 {
            for p in Partition::all_of_size(n) {
                assert_eq!(p.conjugate().conjugate(), p);
                assert_eq!(p.conjugate().size(), n);
            }
        }
    }

    #[test]
    fn canonical_form_strips_zeros() {
        assert_eq!(Partition::new(vec![2, 1, 0, 0]).unwrap(), part![2, 1]);
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn horizontal_strip_examples() {
        assert!(is_horizontal_strip(&part![3, 1], &part![2, 1]));
        assert!(!is_horizontal_strip(&part![2, 2], &part![1]));
        assert!(is_horizontal_strip(&part![4, 2], &part![4, 2]));
    }

    #[test]
    fn horizontal_strip_matches_column_characterization() {
        for n in 0..=10 {
            for mu in Partition::all_of_size(n) {
                for k in 0..=n {
                    for lambda in Partition::all_of_size(k) {
                        let strip = is_horizontal_strip(&mu, &lambda);
                        let (mc, lc) = (mu.conjugate(), lambda.conjugate());
                        let alt = mu.contains(&lambda)
                            && (1..=mc.len().max(1)).all(|i| mc.part(i) <= lc.part(i) + 1);
                        assert_eq!(strip, alt, "{mu:?}/{lambda:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn strip_enumeration_agrees_with_predicate() {
        for k in 0..=6 {
            for lambda in Partition::all_of_size(k) {
                for d in 0..=4 {
                    let mut got = horizontal_strips(&lambda, d);
                    got.sort();
                    let mut want: Vec<_> = Partition::all_of_size(k + d)
                        .into_iter()
                        .filter(|mu| is_horizontal_strip(mu, &lambda))
                        .collect();
                    want.sort();
                    assert_eq!(got, want);
                }
            }
        }
    }

    #[test]
    fn dim_schur_examples() {
        assert_eq!(dim_schur(&part![1, 1, 1, 1], 4), 1);
        assert_eq!(dim_schur(&part![2, 2], 4), 20);
        assert_eq!(dim_schur(&part![2, 1], 3), 8);
        assert_eq!(dim_schur(&part![1, 1, 1], 2), 0);
        assert_eq!(dim_schur(&part![], 3), 1);
    }

    #[test]
    fn dim_schur_rows_and_columns() {
        for n in 1..=6u64 {
            for d in 0..=8u64 {
                assert_eq!(dim_schur(&Partition::row(d as usize), n as usize), binomial(n + d - 1, d));
                assert_eq!(dim_schur(&Partition::column(d as usize), n as usize), binomial(n, d));
            }
        }
    }

    #[test]
    fn m_r_examples() {
        assert!(in_m_r(&part![1, 1], 0));
        assert!(!in_m_r(&part![2], 0));
        assert!(in_m_r(&part![2], 1));
        assert!(!in_m_r(&part![3, 1], 0));
        assert!(in_m_r(&part![2, 1, 1], 0));
        assert!(!in_m_r(&part![2, 1], 5));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!("3,1,1".parse::<Partition>().unwrap(), part![3, 1, 1]);
        assert_eq!("0".parse::<Partition>().unwrap(), part![]);
        assert_eq!(part![].to_string(), "0");
        assert_eq!(part![2, 2].to_string(), "2,2");
        assert!("1,3".parse::<Partition>().is_err());
    }

    #[test]
    fn kostka_small() {
        assert_eq!(kostka(&part![2, 1], &[1, 1, 1]), 2);
        assert_eq!(kostka(&part![2, 1], &[2, 1]), 1);
        assert_eq!(kostka(&part![2, 1], &[1, 2]), 1);
        assert_eq!(kostka(&part![3], &[0, 3]), 1);
    }
}

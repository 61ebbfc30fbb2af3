//! Sparse row echelon forms over a [`Scalar`] field, with optional
//! bookkeeping of input combinations so dependent inputs yield kernel
//! vectors, and the rank-method plumbing shared by all witnesses.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{run_exact, run_mod_prime, FieldTask, Scalar, PRIMES};

/// Sparse vector as `(column, value)` pairs with increasing columns.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Incrementally built row echelon form.
///
/// Rows inserted with [`Echelon::insert_tracked`] carry an identifier; when
/// such a row reduces to zero the combination of identifiers that killed it
/// is returned. Untracked rows span a subspace the tracked rows are
/// reduced modulo, without appearing in combinations.
#[derive(Clone, Debug)]
pub struct Echelon<F: Scalar> {
    rows: Vec<SparseVec<F>>,
    combos: Vec<SparseVec<F>>,
    pivot_row: HashMap<usize, usize>,
    nonzeros: usize,
}

impl<F: Scalar> Default for Echelon<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: Scalar> Echelon<F> {
    pub fn new() -> Self {
        Echelon { rows: Vec::new(), combos: Vec::new(), pivot_row: HashMap::new(), nonzeros: 0 }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Stored nonzero entries, for capacity accounting.
    pub fn nonzeros(&self) -> usize {
        self.nonzeros
    }

    pub fn pivots(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows.iter().map(|r| r[0].0)
    }

    fn reduce(&self, v: SparseVec<F>, mut combo: HashMap<usize, F>) -> (SparseVec<F>, HashMap<usize, F>) {
        let mut acc: BTreeMap<usize, F> = BTreeMap::new();
        for (c, x) in v {
            if !x.is_zero() {
                add_into(&mut acc, c, x);
            }
        }
        while let Some((c, val)) = acc.pop_first() {
            match self.pivot_row.get(&c) {
                Some(&r) => {
                    for (cc, x) in &self.rows[r][1..] {
                        add_into(&mut acc, *cc, -(val.clone() * x.clone()));
                    }
                    for (id, x) in &self.combos[r] {
                        let e = combo.entry(*id).or_insert_with(F::zero);
                        *e = e.clone() - val.clone() * x.clone();
                    }
                }
                None => {
                    let mut out = Vec::with_capacity(acc.len() + 1);
                    out.push((c, val));
                    out.extend(acc);
                    return (out, combo);
                }
            }
        }
        (Vec::new(), combo)
    }

    fn push(&mut self, row: SparseVec<F>, combo: HashMap<usize, F>) {
        let inv = row[0].1.inv();
        let row: SparseVec<F> = row.into_iter().map(|(c, x)| (c, x * inv.clone())).collect();
        let mut combo: SparseVec<F> =
            combo.into_iter().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x * inv.clone())).collect();
        combo.sort_by_key(|(i, _)| *i);
        self.nonzeros += row.len() + combo.len();
        self.pivot_row.insert(row[0].0, self.rows.len());
        self.rows.push(row);
        self.combos.push(combo);
    }

    /// Insert a row; returns whether it increased the rank.
    pub fn insert(&mut self, v: SparseVec<F>) -> bool {
        let (r, combo) = self.reduce(v, HashMap::new());
        if r.is_empty() {
            return false;
        }
        self.push(r, combo);
        true
    }

    /// Insert a row labelled `id`. If it is dependent (modulo everything
    /// inserted so far) the returned vector `k` satisfies
    /// `Σ k_i · row_i ∈ span(untracked rows)` and has `k_id = 1`.
    pub fn insert_tracked(&mut self, v: SparseVec<F>, id: usize) -> Option<SparseVec<F>> {
        let mut start = HashMap::new();
        start.insert(id, F::one());
        let (r, combo) = self.reduce(v, start);
        if r.is_empty() {
            let mut k: SparseVec<F> = combo.into_iter().filter(|(_, x)| !x.is_zero()).collect();
            k.sort_by_key(|(i, _)| *i);
            return Some(k);
        }
        self.push(r, combo);
        None
    }

    /// Whether `v` lies in the row span.
    pub fn contains(&self, v: &SparseVec<F>) -> bool {
        self.reduce(v.clone(), HashMap::new()).0.is_empty()
    }
}

fn add_into<F: Scalar>(acc: &mut BTreeMap<usize, F>, c: usize, x: F) {
    match acc.get_mut(&c) {
        Some(v) => {
            *v = v.clone() + x;
            if v.is_zero() {
                acc.remove(&c);
            }
        }
        None => {
            if !x.is_zero() {
                acc.insert(c, x);
            }
        }
    }
}

/// Rank of a list of sparse rows.
pub fn rank<F: Scalar>(rows: impl IntoIterator<Item = SparseVec<F>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Basis of `{k : Σ k_i row_i = 0}`.
pub fn left_kernel<F: Scalar>(rows: impl IntoIterator<Item = SparseVec<F>>) -> Vec<SparseVec<F>> {
    let mut e = Echelon::new();
    rows.into_iter().enumerate().filter_map(|(i, r)| e.insert_tracked(r, i)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum RankMethod {
    /// Exact rational elimination.
    Exact,
    /// Elimination modulo two word-size primes that must agree.
    #[default]
    Modular,
}

impl std::str::FromStr for RankMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "exact" => Ok(RankMethod::Exact),
            "modular" => Ok(RankMethod::Modular),
            _ => Err(Error::Precondition(format!("unknown rank method `{s}`"))),
        }
    }
}

/// Default cap on the stored nonzeros of a single elimination.
pub const DEFAULT_MAX_NONZEROS: usize = 2_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankConfig {
    pub method: RankMethod,
    pub seed: u64,
    pub max_nonzeros: usize,
    /// Primes available to modular runs.
    pub primes: Vec<u64>,
}

impl Default for RankConfig {
    fn default() -> Self {
        RankConfig { method: RankMethod::Modular, seed: 0, max_nonzeros: DEFAULT_MAX_NONZEROS, primes: PRIMES.to_vec() }
    }
}

impl RankConfig {
    pub fn exact() -> Self {
        RankConfig { method: RankMethod::Exact, ..Self::default() }
    }

    /// Two distinct indices into [`PRIMES`] determined by the seed,
    /// restricted to the configured primes.
    pub fn prime_indices(&self) -> Result<(usize, usize)> {
        let allowed: Vec<usize> = (0..PRIMES.len()).filter(|&i| self.primes.contains(&PRIMES[i])).collect();
        if allowed.len() < 2 {
            return Err(Error::Precondition("modular ranks need at least two configured primes".into()));
        }
        let k = allowed.len() as u64;
        let a = (self.seed % k) as usize;
        let b = (a + 1 + ((self.seed / k) % (k - 1)) as usize) % allowed.len();
        Ok((allowed[a], allowed[b]))
    }
}

/// Counters every witness reports alongside its result.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankStats {
    pub eliminations: u64,
    pub rank_sum: u64,
    pub max_nonzeros: u64,
}

impl RankStats {
    pub fn record<F: Scalar>(&mut self, e: &Echelon<F>) {
        self.eliminations += 1;
        self.rank_sum += e.rank() as u64;
        self.max_nonzeros = self.max_nonzeros.max(e.nonzeros() as u64);
    }

    pub fn merge(&mut self, other: &RankStats) {
        self.eliminations += other.eliminations;
        self.rank_sum += other.rank_sum;
        self.max_nonzeros = self.max_nonzeros.max(other.max_nonzeros);
    }
}

/// Audit record of how the ranks behind a result were obtained.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RankCertificate {
    pub method: RankMethod,
    /// Primes used, empty for exact runs.
    pub primes: Vec<u64>,
    pub seed: u64,
    /// Whether the second prime reproduced the first.
    pub confirmed: bool,
    pub stats: RankStats,
}

/// Run a field-generic witness according to `cfg`. Modular runs use two
/// primes (concurrently) and fail unless both give the same result.
pub fn certified<T, X>(task: &T, cfg: &RankConfig) -> Result<(X, RankCertificate)>
where
    T: FieldTask<Output = Result<(X, RankStats)>> + Sync,
    X: PartialEq + std::fmt::Debug + Send,
{
    match cfg.method {
        RankMethod::Exact => {
            let (x, stats) = run_exact(task)?;
            let cert = RankCertificate { method: RankMethod::Exact, primes: vec![], seed: cfg.seed, confirmed: true, stats };
            Ok((x, cert))
        }
        RankMethod::Modular => {
            let (i, j) = cfg.prime_indices()?;
            let (a, b) = std::thread::scope(|s| {
                let h = s.spawn(|| run_mod_prime(task, j));
                let a = run_mod_prime(task, i);
                (a, h.join().expect("modular worker panicked"))
            });
            let (xa, stats) = a?;
            let (xb, _) = b?;
            if xa != xb {
                return Err(Error::RankDisagreement(format!(
                    "p = {} and p = {} give different results: {xa:?} vs {xb:?}",
                    PRIMES[i], PRIMES[j]
                )));
            }
            let cert = RankCertificate {
                method: RankMethod::Modular,
                primes: vec![PRIMES[i], PRIMES[j]],
                seed: cfg.seed,
                confirmed: true,
                stats,
            };
            Ok((xa, cert))
        }
    }
}

/// Capacity check for an elimination about to be performed.
pub fn check_capacity(what: &str, estimate: usize, cap: usize) -> Result<()> {
    if estimate > cap {
        Err(Error::capacity(what, estimate as u64, cap as u64))
    } else {
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{Fp, Rational};

    type Q = Rational;
    type F = Fp<{ PRIMES[0] }>;

    fn row<S: Scalar>(vals: &[i64]) -> SparseVec<S> {
        vals.iter().enumerate().filter(|(_, &v)| v != 0).map(|(i, &v)| (i, S::from_i64(v))).collect()
    }

    #[test]
    fn rank_small() {
        let rows = vec![row::<Q>(&[1, 2, 3]), row(&[2, 4, 6]), row(&[0, 1, 1])];
        assert_eq!(rank(rows), 2);
        let rows = vec![row::<F>(&[1, 0]), row(&[0, 1]), row(&[1, 1])];
        assert_eq!(rank(rows), 2);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        let rows = vec![row::<Q>(&[1, 2, 3]), row(&[0, 1, 1]), row(&[1, 3, 4]), row(&[2, 4, 6])];
        let ker = left_kernel(rows.clone());
        assert_eq!(ker.len(), 2);
        for k in &ker {
            let mut sum = vec![Q::from_i64(0); 3];
            for (i, c) in k {
                for (col, v) in &rows[*i] {
                    sum[*col] += c.clone() * v.clone();
                }
            }
            assert!(sum.iter().all(|x| *x == Q::from_i64(0)));
        }
    }

    #[test]
    fn quotient_kernel() {
        let mut e = Echelon::<Q>::new();
        e.insert(row(&[1, 1, 0]));
        assert!(e.insert_tracked(row(&[2, 2, 0]), 7).is_some());
        assert!(e.insert_tracked(row(&[0, 0, 1]), 8).is_none());
        assert!(e.contains(&row(&[1, 1, 5])));
    }

    #[test]
    fn prime_indices_are_distinct() {
        for seed in 0..100 {
            let (a, b) = RankConfig { seed, ..RankConfig::default() }.prime_indices().unwrap();
            assert_ne!(a, b);
        }
    }
}

//! Characters of bivariate polynomial functors: finite sums of
//! `S_λ ⊠ S_μ` with positive multiplicities.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::{dim_schur, Partition};
use crate::symfunc::lr_coefficients;

/// A bivariate GL-character `⊕ (S_λ ⊠ S_μ)^{⊕ m}`.
#[derive(Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(from = "Vec<BiTerm>", into = "Vec<BiTerm>")]
pub struct BiRep {
    terms: BTreeMap<(Partition, Partition), u64>,
}

/// Serialized form of one summand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BiTerm {
    pub left: Partition,
    pub right: Partition,
    pub mult: u64,
}

impl From<Vec<BiTerm>> for BiRep {
    fn from(v: Vec<BiTerm>) -> Self {
        let mut r = BiRep::new();
        for t in v {
            r.add(t.left, t.right, t.mult);
        }
        r
    }
}

impl From<BiRep> for Vec<BiTerm> {
    fn from(r: BiRep) -> Self {
        r.terms.into_iter().map(|((left, right), mult)| BiTerm { left, right, mult }).collect()
    }
}

impl BiRep {
    pub fn new() -> Self {
        Self::default()
    }

    /// The trivial character `S_() ⊠ S_()`.
    pub fn trivial() -> Self {
        Self::single(Partition::empty(), Partition::empty())
    }

    pub fn single(left: Partition, right: Partition) -> Self {
        let mut r = Self::new();
        r.add(left, right, 1);
        r
    }

    pub fn from_pairs<I: IntoIterator<Item = (Partition, Partition)>>(pairs: I) -> Self {
        let mut r = Self::new();
        for (a, b) in pairs {
            r.add(a, b, 1);
        }
        r
    }

    pub fn add(&mut self, left: Partition, right: Partition, mult: u64) {
        if mult > 0 {
            *self.terms.entry((left, right)).or_insert(0) += mult;
        }
    }

    pub fn add_all(&mut self, other: &BiRep) {
        for ((a, b), &m) in &other.terms {
            self.add(a.clone(), b.clone(), m);
        }
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn multiplicity(&self, left: &Partition, right: &Partition) -> u64 {
        self.terms.get(&(left.clone(), right.clone())).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Partition, u64)> {
        self.terms.iter().map(|((a, b), &m)| (a, b, m))
    }

    /// `τ_1 τ_2`: conjugate both partitions of every summand.
    pub fn transpose_duality(&self) -> BiRep {
        let mut r = BiRep::new();
        for (a, b, m) in self.iter() {
            r.add(a.conjugate(), b.conjugate(), m);
        }
        r
    }

    /// Swap the two tensor factors.
    pub fn swap(&self) -> BiRep {
        let mut r = BiRep::new();
        for (a, b, m) in self.iter() {
            r.add(b.clone(), a.clone(), m);
        }
        r
    }

    /// Dimension after evaluating at `(C^m, C^n)`.
    pub fn dim_at(&self, m: usize, n: usize) -> u64 {
        self.iter().map(|(a, b, mult)| mult * dim_schur(a, m) * dim_schur(b, n)).sum()
    }

    /// Drop summands that vanish at `(C^m, C^n)`.
    pub fn truncate(&self, m: usize, n: usize) -> BiRep {
        let mut r = BiRep::new();
        for (a, b, mult) in self.iter() {
            if a.len() <= m && b.len() <= n {
                r.add(a.clone(), b.clone(), mult);
            }
        }
        r
    }

    /// Summands of bi-degree `(d, e)`.
    pub fn bidegree_slice(&self, d: usize, e: usize) -> BiRep {
        let mut r = BiRep::new();
        for (a, b, m) in self.iter() {
            if a.size() == d && b.size() == e {
                r.add(a.clone(), b.clone(), m);
            }
        }
        r
    }

    /// Tensor product, decomposed factorwise by Littlewood–Richardson.
    pub fn tensor(&self, other: &BiRep) -> BiRep {
        let mut r = BiRep::new();
        for (a1, b1, m1) in self.iter() {
            for (a2, b2, m2) in other.iter() {
                let left = lr_coefficients(a1, a2);
                let right = lr_coefficients(b1, b2);
                for (l, cl) in &left {
                    for (rr, cr) in &right {
                        r.add(l.clone(), rr.clone(), m1 * m2 * cl * cr);
                    }
                }
            }
        }
        r
    }

    /// `true` when every multiplicity of `self` is at most that of `other`.
    pub fn is_subrep_of(&self, other: &BiRep) -> bool {
        self.iter().all(|(a, b, m)| m <= other.multiplicity(a, b))
    }
}

impl fmt::Display for BiRep {
    /// `S[1,1,1,1]⊠S[2,2] + S[2,2]⊠S[1,1,1,1]`; the empty character is `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (a, b, m) in self.iter() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if m > 1 {
                write!(f, "{m}·")?;
            }
            write!(f, "S[{a}]⊠S[{b}]")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiRep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiRep({self})")
    }
}

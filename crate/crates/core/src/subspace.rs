//! Equations of the subspace variety `Y ⊂ Sym²V1 ⊗ Sym²V2`: tensors lying in
//! `Sym²H ⊗ Sym²V2` for some hyperplane `H ⊂ V1`.
//!
//! `Y` is parameterized by a map `B : C^{m−1} → V1` and a tensor
//! `q ∈ Sym²C^{m−1} ⊗ Sym²V2`, via `y = (Sym²B)(q)`. Eliminating `B, q`
//! bounds the generator degrees; the counts come from the kernel of
//! `Sym^d(y) → C[B, q]`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, MonomialOrder};
use crate::kernel::{graded_piece, AlgebraMap, Generator, IPoly, KernelEngine};
use crate::linalg::{certified, RankCertificate, RankConfig, RankStats};
use crate::poly::Poly;
use crate::scalar::{FieldTask, Scalar};

fn sym_pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|a| (a..k).map(move |b| (a, b))).collect()
}

/// Variable layout of the parameter ring: `B_{i,a}` then `q_{(a,b),J}`.
struct Layout {
    m: usize,
    hpairs: Vec<(usize, usize)>,
    jpairs: Vec<(usize, usize)>,
}

impl Layout {
    fn new(m: usize, n: usize) -> Self {
        Layout { m, hpairs: sym_pairs(m - 1), jpairs: sym_pairs(n) }
    }

    fn nb(&self) -> usize {
        self.m * (self.m - 1)
    }

    fn b(&self, i: usize, a: usize) -> usize {
        i * (self.m - 1) + a
    }

    fn q(&self, ab: usize, j: usize) -> usize {
        self.nb() + ab * self.jpairs.len() + j
    }

    fn nparams(&self) -> usize {
        self.nb() + self.hpairs.len() * self.jpairs.len()
    }

    /// `(i-pair, J-pair)` labels of the coordinates `y`.
    fn ys(&self) -> Vec<((usize, usize), (usize, usize))> {
        let mut out = Vec::new();
        for ip in sym_pairs(self.m) {
            for &jp in &self.jpairs {
                out.push((ip, jp));
            }
        }
        out
    }

    /// The parameterization of one coordinate as an integer polynomial.
    fn image(&self, (i1, i2): (usize, usize), j: usize) -> IPoly {
        let mut acc: BTreeMap<Vec<u16>, i64> = BTreeMap::new();
        for (ab, &(a, b)) in self.hpairs.iter().enumerate() {
            for (x, y) in [(a, b), (b, a)] {
                let mut e = vec![0u16; self.nparams()];
                e[self.b(i1, x)] += 1;
                e[self.b(i2, y)] += 1;
                e[self.q(ab, j)] += 1;
                *acc.entry(e).or_insert(0) += 1;
            }
        }
        acc.into_iter().filter(|(_, c)| *c != 0).collect()
    }
}

fn subspace_map(m: usize, n: usize) -> AlgebraMap {
    let l = Layout::new(m, n);
    let gens = l
        .ys()
        .into_iter()
        .map(|((i1, i2), (j1, j2))| {
            let j = l.jpairs.iter().position(|&p| p == (j1, j2)).expect("label");
            let mut weight = vec![0u16; m + n];
            weight[i1] += 1;
            weight[i2] += 1;
            weight[m + j1] += 1;
            weight[m + j2] += 1;
            Generator { class: vec![1], weight, image: l.image((i1, i2), j) }
        })
        .collect();
    AlgebraMap { m, n, target_vars: l.nparams(), gens }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubspaceReport {
    pub m: usize,
    pub n: usize,
    /// Largest degree of an element of the reduced Gröbner basis of `I(Y)`.
    pub degree_bound: usize,
    /// Minimal generator counts by degree, nonzero entries only.
    pub generators: BTreeMap<usize, u64>,
    pub certificate: RankCertificate,
}

impl SubspaceReport {
    pub fn total(&self) -> u64 {
        self.generators.values().sum()
    }
}

struct SubspaceTask {
    m: usize,
    n: usize,
    cap: usize,
}

impl SubspaceTask {
    fn degree_bound<F: Scalar>(&self) -> usize {
        let l = Layout::new(self.m, self.n);
        let ys = l.ys();
        let np = l.nparams();
        let nv = ys.len() + np;
        let gens: Vec<Poly<F>> = ys
            .iter()
            .enumerate()
            .map(|(k, &(ip, jp))| {
                let j = l.jpairs.iter().position(|&p| p == jp).expect("label");
                let mut p = Poly::var(nv, k);
                for (e, c) in l.image(ip, j) {
                    let mut full = vec![0u16; ys.len()];
                    full.extend(e);
                    p.add_term(full, -F::from_i64(c));
                }
                p
            })
            .collect();
        let params: Vec<usize> = (ys.len()..nv).collect();
        let weights: Vec<u32> = (0..nv).map(|v| if v < ys.len() { 3 } else { 1 }).collect();
        let gb = buchberger(&gens, &MonomialOrder::elimination(nv, &params, weights));
        gb.eliminate(&params).iter().filter_map(|p| p.degree()).max().unwrap_or(0)
    }
}

impl FieldTask for SubspaceTask {
    type Output = Result<((usize, BTreeMap<usize, u64>), RankStats)>;

    fn run<F: Scalar>(&self) -> Self::Output {
        let bound = self.degree_bound::<F>();
        let map = subspace_map(self.m, self.n);
        let mut engine = KernelEngine::<F>::new(&map, self.cap);
        let mut out = BTreeMap::new();
        for d in 1..=bound {
            let piece = graded_piece(&mut engine, &[d as u16], 2 * d, 2 * d)?;
            if piece.minimal > 0 {
                out.insert(d, piece.minimal);
            }
        }
        Ok(((bound, out), engine.stats))
    }
}

/// Minimal generators of `I(Y)` by degree.
pub fn subspace_variety_gens(m: usize, n: usize, cfg: &RankConfig) -> Result<SubspaceReport> {
    if m == 0 || n == 0 {
        return Err(Error::Precondition("subspace variety needs m, n ≥ 1".into()));
    }
    let task = SubspaceTask { m, n, cap: cfg.max_nonzeros };
    let ((degree_bound, generators), certificate) = certified(&task, cfg)?;
    Ok(SubspaceReport { m, n, degree_bound, generators, certificate })
}

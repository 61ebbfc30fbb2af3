//! The defining ideal `J` of the Rees algebra `S[I t]` of the ideal of
//! 2×2 minors, and the fiber-type test.
//!
//! `J` is bigraded: `x` has bidegree `(1, 0)` and each `T_w` has `(0, 2)`,
//! the minors' algebra being regraded so that its generators sit in degree
//! two. Under the standard grading of `R` the second entry halves.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, MonomialOrder};
use crate::kernel::{graded_piece, AlgebraMap, Generator, KernelEngine};
use crate::linalg::{certified, RankCertificate, RankConfig, RankStats};
use crate::poly::{minors_basis, MatrixRingContext, Poly};
use crate::scalar::{FieldTask, Scalar};
use crate::equivariant::Variant;
use crate::relations::quadric_map;

/// A bidegree `(d, e)`: `d` in the `x`-variables, `e = 2·(T-degree)`.
pub type Bidegree = (usize, usize);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReesMethod {
    /// Bidegrees from a Gröbner basis of `⟨T_w − w t⟩ ∩ C[x, T]`, so the
    /// list of minimal generators is complete.
    Groebner,
    /// Linear algebra in every bidegree of a window; complete only inside it.
    Window { d_max: usize, k_max: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReesReport {
    pub m: usize,
    pub n: usize,
    pub method: ReesMethod,
    /// Bidegrees of the reduced Gröbner basis of `J` (Gröbner method only).
    pub groebner_bidegrees: Vec<Bidegree>,
    /// Minimal generator counts, nonzero entries only.
    pub minimal: BTreeMap<Bidegree, u64>,
    pub certificate: RankCertificate,
}

impl ReesReport {
    /// Every minimal generator has bidegree `(0, 2d)` or `(d, 2)`.
    pub fn is_fiber_type(&self) -> bool {
        self.minimal.keys().all(|&(d, e)| d == 0 || e == 2)
    }

    /// Minimal generators of fiber type `(0, e)`.
    pub fn fiber_relations(&self) -> BTreeMap<usize, u64> {
        self.minimal.iter().filter(|((d, _), _)| *d == 0).map(|((_, e), c)| (*e, *c)).collect()
    }
}

fn rees_map(m: usize, n: usize) -> Result<AlgebraMap> {
    let quad = quadric_map(m, n, Variant::Minors)?;
    let mut gens = Vec::new();
    for i in 0..m {
        for j in 0..n {
            let mut e = vec![0u16; m * n];
            e[i * n + j] = 1;
            let mut weight = vec![0u16; m + n];
            weight[i] = 1;
            weight[m + j] = 1;
            gens.push(Generator { class: vec![1, 0], weight, image: vec![(e, 1)] });
        }
    }
    for mut g in quad.gens {
        g.class = vec![0, 1];
        gens.push(g);
    }
    Ok(AlgebraMap { m, n, target_vars: m * n, gens })
}

/// The generators `T_w − w·t` in variables `x, T, t`.
pub fn rees_presentation<F: Scalar>(m: usize, n: usize) -> Result<(MatrixRingContext, Vec<Poly<F>>)> {
    let base = MatrixRingContext::new(m, n)?;
    let minors = minors_basis::<F>(&base);
    let ctx = base.with_aux("T", minors.len()).with_aux("t", 1);
    let nv = ctx.nvars();
    let t = ctx.var::<F>(ctx.aux_var(1, 0));
    let gens = minors
        .iter()
        .enumerate()
        .map(|(k, w)| {
            let mut lifted = Poly::zero(nv);
            for (e, c) in w.terms() {
                let mut e2 = e.clone();
                e2.resize(nv, 0);
                lifted.add_term(e2, c.clone());
            }
            &ctx.var::<F>(ctx.aux_var(0, k)) - &(&lifted * &t)
        })
        .collect();
    Ok((ctx, gens))
}

struct ReesTask {
    m: usize,
    n: usize,
    method: ReesMethod,
    cap: usize,
}

impl ReesTask {
    fn groebner_bidegrees<F: Scalar>(&self) -> Result<Vec<Bidegree>> {
        let (ctx, gens) = rees_presentation::<F>(self.m, self.n)?;
        let nv = ctx.nvars();
        let t = ctx.aux_var(1, 0);
        let nx = ctx.n_x();
        let weights: Vec<u32> = (0..nv).map(|v| if v < nx || v == t { 1 } else { 3 }).collect();
        let order = MonomialOrder::elimination(nv, &[t], weights);
        let gb = buchberger(&gens, &order);
        let mut out = BTreeSet::new();
        for p in gb.eliminate(&[t]) {
            let (e, _) = p.terms().next().expect("nonzero");
            let d: usize = e[..nx].iter().map(|&x| x as usize).sum();
            let k: usize = e[nx..t].iter().map(|&x| x as usize).sum();
            out.insert((d, 2 * k));
        }
        Ok(out.into_iter().collect())
    }
}

impl FieldTask for ReesTask {
    type Output = Result<((Vec<Bidegree>, BTreeMap<Bidegree, u64>), RankStats)>;

    fn run<F: Scalar>(&self) -> Self::Output {
        let (m, n) = (self.m, self.n);
        let (gb, candidates): (Vec<Bidegree>, Vec<(usize, usize)>) = match self.method {
            ReesMethod::Groebner => {
                let gb = self.groebner_bidegrees::<F>()?;
                let c = gb.iter().map(|&(d, e)| (d, e / 2)).collect();
                (gb, c)
            }
            ReesMethod::Window { d_max, k_max } => {
                let c = (0..=d_max).flat_map(|d| (1..=k_max).map(move |k| (d, k))).collect();
                (Vec::new(), c)
            }
        };
        let map = rees_map(m, n)?;
        let mut engine = KernelEngine::<F>::new(&map, self.cap);
        let mut minimal = BTreeMap::new();
        for (d, k) in candidates {
            let piece = graded_piece(&mut engine, &[d as u16, k as u16], d + 2 * k, d + 2 * k)?;
            if piece.minimal > 0 {
                minimal.insert((d, 2 * k), piece.minimal);
            }
        }
        Ok(((gb, minimal), engine.stats))
    }
}

/// Minimal generators of the Rees ideal by bidegree.
pub fn rees_ideal(m: usize, n: usize, method: ReesMethod, cfg: &RankConfig) -> Result<ReesReport> {
    if m < 2 || n < 2 {
        return Err(Error::Precondition("the Rees ideal needs m, n ≥ 2".into()));
    }
    let task = ReesTask { m, n, method, cap: cfg.max_nonzeros };
    let ((groebner_bidegrees, minimal), certificate) = certified(&task, cfg)?;
    Ok(ReesReport { m, n, method, groebner_bidegrees, minimal, certificate })
}

/// Fiber-type decision; the report carries the evidence.
pub fn fiber_type_check(m: usize, n: usize, method: ReesMethod, cfg: &RankConfig) -> Result<(bool, ReesReport)> {
    let r = rees_ideal(m, n, method, cfg)?;
    Ok((r.is_fiber_type(), r))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn principal_case_is_trivial() {
        let r = rees_ideal(2, 2, ReesMethod::Groebner, &RankConfig::exact()).unwrap();
        assert!(r.minimal.is_empty());
        assert!(r.is_fiber_type());
    }

    #[test]
    fn plucker_fiber_relation() {
        let r = rees_ideal(2, 4, ReesMethod::Groebner, &RankConfig::default()).unwrap();
        assert_eq!(r.fiber_relations(), BTreeMap::from([(4, 1)]));
        assert!(r.is_fiber_type());
    }
}

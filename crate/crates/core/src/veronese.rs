//! The filtration `M_0 ⊂ M_1 ⊂ …` of the even Veronese subring of `S`:
//! `M_r` is the `R`-submodule generated by the copies of
//! `Sym^{2k}V1 ⊗ Sym^{2k}V2` in `S_{2k}` for `k ≤ r`. We compute generator and
//! first-relation dimensions of `M_r / M_{r−1}` degree by degree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::birep::BiRep;
use crate::equivariant::Variant;
use crate::error::{Error, Result};
use crate::kernel::{AlgebraMap, Generator, KernelEngine};
use crate::linalg::{certified, Echelon, RankCertificate, RankConfig, RankStats, SparseVec};
use crate::relations::quadric_map;
use crate::scalar::{FieldTask, Scalar};
use crate::weights::{contingency_tables, dominant_weights, orbit_size, peel_character};

fn compositions(total: u16, parts: usize) -> Vec<Vec<u16>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn factorial(k: u16) -> i64 {
    (1..=k as i64).product()
}

/// `P_{α,β} = Σ_E (2k)!/∏E! · x^E` over matrices `E` with margins `(α, β)`:
/// the coefficient of `a^α b^β` in `(Σ a_i b_j x_ij)^{2k}`.
fn veronese_generators(m: usize, n: usize, k: u16) -> Vec<Generator> {
    let mut out = Vec::new();
    for alpha in compositions(2 * k, m) {
        for beta in compositions(2 * k, n) {
            let mut image: Vec<_> = contingency_tables(&alpha, &beta)
                .into_iter()
                .map(|e| {
                    let c = factorial(2 * k) / e.iter().map(|&x| factorial(x)).product::<i64>();
                    (e, c)
                })
                .collect();
            image.sort();
            let mut weight = alpha.clone();
            weight.extend(&beta);
            out.push(Generator { class: Vec::new(), weight, image });
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PresentationDegree {
    pub generators: u64,
    pub relations: u64,
    pub relation_character: BiRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VeroneseTable {
    pub m: usize,
    pub n: usize,
    pub variant: Variant,
    pub r: usize,
    pub degrees: BTreeMap<usize, PresentationDegree>,
    pub certificate: RankCertificate,
}

impl VeroneseTable {
    pub fn generator_degrees(&self) -> Vec<usize> {
        self.degrees.iter().filter(|(_, p)| p.generators > 0).map(|(d, _)| *d).collect()
    }

    pub fn relation_degrees(&self) -> Vec<usize> {
        self.degrees.iter().filter(|(_, p)| p.relations > 0).map(|(d, _)| *d).collect()
    }

    /// Character of all first relations in the window.
    pub fn relation_character(&self) -> BiRep {
        let mut out = BiRep::new();
        for p in self.degrees.values() {
            out.add_all(&p.relation_character);
        }
        out
    }
}

/// Class layout: entry `k − 1` counts `P`-generators of level `k`
/// (`1 ≤ k ≤ r`), the last entry counts quadrics.
fn build_map(m: usize, n: usize, variant: Variant, r: usize) -> Result<AlgebraMap> {
    let quad = quadric_map(m, n, variant)?;
    let len = r + 1;
    let mut gens = Vec::new();
    for mut g in quad.gens {
        g.class = vec![0; len];
        g.class[r] = 1;
        gens.push(g);
    }
    for k in 1..=r {
        for mut g in veronese_generators(m, n, k as u16) {
            g.class = vec![0; len];
            g.class[k - 1] = 1;
            gens.push(g);
        }
    }
    Ok(AlgebraMap { m, n, target_vars: m * n, gens })
}

/// Class of `G_k · W^{D−k}` (with `G_0 = C`).
fn level_class(r: usize, k: usize, d: usize) -> Vec<u16> {
    let mut c = vec![0; r + 1];
    if k > 0 {
        c[k - 1] = 1;
    }
    c[r] = (d - k) as u16;
    c
}

struct VeroneseTask {
    map: AlgebraMap,
    r: usize,
    d_max: usize,
    cap: usize,
}

impl VeroneseTask {
    fn span_rank<F: Scalar>(&self, classes: &[Vec<u16>], w: &[u16], stats: &mut RankStats) -> Result<u64> {
        let mut ech = Echelon::<F>::new();
        let mut cols = std::collections::HashMap::new();
        for c in classes {
            for s in self.map.sources(c, w) {
                let mut row: SparseVec<F> = self
                    .map
                    .image(&s)
                    .into_iter()
                    .map(|(e, x)| {
                        let k = cols.len();
                        (*cols.entry(e).or_insert(k), F::from_i64(x))
                    })
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                ech.insert(row);
                if ech.nonzeros() > self.cap {
                    return Err(Error::capacity("veronese span nonzeros", ech.nonzeros() as u64, self.cap as u64));
                }
            }
        }
        stats.record(&ech);
        Ok(ech.rank() as u64)
    }
}

impl FieldTask for VeroneseTask {
    type Output = Result<(BTreeMap<usize, PresentationDegree>, RankStats)>;

    fn run<F: Scalar>(&self) -> Self::Output {
        let (m, n, r) = (self.map.m, self.map.n, self.r);
        let acting: Vec<bool> = self.map.gens.iter().map(|g| g.class[r] == 1).collect();
        let mut engine = KernelEngine::<F>::new(&self.map, self.cap)
            .with_acting(acting)
            .with_quotient(Box::new(move |class: &[u16]| {
                let d = class[r] as usize + r;
                (0..r).map(|k| level_class(r, k, d)).collect()
            }));
        let mut stats = RankStats::default();
        let mut out = BTreeMap::new();
        for d in 0..=self.d_max {
            let full: Vec<_> = (0..=r.min(d)).map(|k| level_class(r, k, d)).collect();
            let mut lower: Vec<_> = (0..=(r - 1).min(d)).map(|k| level_class(r, k, d)).collect();
            if d >= 1 {
                for k in 0..=r.min(d - 1) {
                    let c = level_class(r, k, d);
                    if !lower.contains(&c) {
                        lower.push(c);
                    }
                }
            }
            let mut generators = 0;
            let mut relations = 0;
            let mut rel_dims = BTreeMap::new();
            for w in dominant_weights(m, n, 2 * d, 2 * d) {
                let o = orbit_size(&w, m);
                let g = self.span_rank::<F>(&full, &w, &mut stats)? - self.span_rank::<F>(&lower, &w, &mut stats)?;
                generators += g * o;
                if d >= r {
                    let (_, rel) = engine.minimal_dim(&level_class(r, r, d), &w)?;
                    relations += rel as u64 * o;
                    if rel > 0 {
                        rel_dims.insert(w, rel as u64);
                    }
                }
            }
            let relation_character = peel_character(m, &rel_dims)?;
            out.insert(d, PresentationDegree { generators, relations, relation_character });
        }
        stats.merge(&engine.stats);
        Ok((out, stats))
    }
}

/// Generators and first relations of `M_r / M_{r−1}` in degrees `0..=d_max`
/// (degree `D` living in `S_{2D}`). Relations are counted for the
/// presentation by the level-`r` generators.
pub fn veronese_presentation_dims(
    m: usize,
    n: usize,
    variant: Variant,
    r: usize,
    d_max: usize,
    cfg: &RankConfig,
) -> Result<VeroneseTable> {
    if r == 0 {
        return Err(Error::Precondition("filtration index r must be at least 1".into()));
    }
    let map = build_map(m, n, variant, r)?;
    let task = VeroneseTask { map, r, d_max, cap: cfg.max_nonzeros };
    let (degrees, certificate) = certified(&task, cfg)?;
    Ok(VeroneseTable { m, n, variant, r, degrees, certificate })
}

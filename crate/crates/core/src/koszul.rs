//! First Koszul homology of the quadrics spanning `W` (or `W̄`) over `S`:
//! `ker(∂_1) / im(∂_2)` for `Λ²W ⊗ S → W ⊗ S → S`, by total degree.

use std::collections::{BTreeMap, HashMap};

use serde::{Deserialize, Serialize};

use crate::birep::BiRep;
use crate::equivariant::Variant;
use crate::error::{Error, Result};
use crate::kernel::{ipoly_mul, AlgebraMap, IPoly};
use crate::linalg::{certified, Echelon, RankCertificate, RankConfig, RankStats, SparseVec};
use crate::poly::Exponents;
use crate::relations::quadric_map;
use crate::scalar::{FieldTask, Scalar};
use crate::weights::{contingency_tables, dominant_weights, orbit_size, peel_character};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulDegree {
    pub dim: u64,
    pub character: BiRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KoszulTable {
    pub m: usize,
    pub n: usize,
    pub variant: Variant,
    pub degrees: BTreeMap<usize, KoszulDegree>,
    pub certificate: RankCertificate,
}

fn sub(a: &[u16], b: &[u16]) -> Option<Vec<u16>> {
    a.iter().zip(b).map(|(x, y)| x.checked_sub(*y)).collect()
}

fn monomials(map: &AlgebraMap, w: &[u16]) -> Vec<Exponents> {
    contingency_tables(&w[..map.m], &w[map.m..])
}

fn times_monomial(p: &IPoly, e: &Exponents) -> IPoly {
    ipoly_mul(p, &vec![(e.clone(), 1)])
}

struct KoszulTask {
    map: AlgebraMap,
    degrees: Vec<usize>,
    cap: usize,
}

impl KoszulTask {
    /// `dim H_1` at one weight of total degree `d`.
    fn weight_dim<F: Scalar>(&self, w: &[u16], stats: &mut RankStats) -> Result<u64> {
        let map = &self.map;
        // W ⊗ S basis
        let mut mid: Vec<(usize, Exponents)> = Vec::new();
        for (g, gen) in map.gens.iter().enumerate() {
            if let Some(rest) = sub(w, &gen.weight) {
                for e in monomials(map, &rest) {
                    mid.push((g, e));
                }
            }
        }
        if mid.is_empty() {
            return Ok(0);
        }
        let index: HashMap<(usize, Exponents), usize> = mid.iter().cloned().enumerate().map(|(i, k)| (k, i)).collect();

        let mut d1 = Echelon::<F>::new();
        let mut cols: HashMap<Exponents, usize> = HashMap::new();
        for (g, e) in &mid {
            let img = times_monomial(&map.gens[*g].image, e);
            let mut row: SparseVec<F> = img
                .into_iter()
                .map(|(e, c)| {
                    let k = cols.len();
                    (*cols.entry(e).or_insert(k), F::from_i64(c))
                })
                .collect();
            row.sort_by_key(|(c, _)| *c);
            d1.insert(row);
        }
        stats.record(&d1);

        let mut d2 = Echelon::<F>::new();
        let ngens = map.gens.len();
        for g in 0..ngens {
            for h in g + 1..ngens {
                let Some(r1) = sub(w, &map.gens[g].weight) else { continue };
                let Some(rest) = sub(&r1, &map.gens[h].weight) else { continue };
                for e in monomials(map, &rest) {
                    // e_g ⊗ h·e − e_h ⊗ g·e
                    let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
                    for (mono, c) in times_monomial(&map.gens[h].image, &e) {
                        *acc.entry(index[&(g, mono)]).or_insert(0) += c;
                    }
                    for (mono, c) in times_monomial(&map.gens[g].image, &e) {
                        *acc.entry(index[&(h, mono)]).or_insert(0) -= c;
                    }
                    let row: SparseVec<F> =
                        acc.into_iter().filter(|(_, c)| *c != 0).map(|(i, c)| (i, F::from_i64(c))).collect();
                    d2.insert(row);
                    if d2.nonzeros() > self.cap {
                        return Err(Error::capacity("koszul ∂2 nonzeros", d2.nonzeros() as u64, self.cap as u64));
                    }
                }
            }
        }
        stats.record(&d2);
        Ok((mid.len() - d1.rank() - d2.rank()) as u64)
    }
}

impl FieldTask for KoszulTask {
    type Output = Result<(BTreeMap<usize, KoszulDegree>, RankStats)>;

    fn run<F: Scalar>(&self) -> Self::Output {
        let mut stats = RankStats::default();
        let mut out = BTreeMap::new();
        for &d in &self.degrees {
            let mut dim = 0;
            let mut dims = BTreeMap::new();
            for w in dominant_weights(self.map.m, self.map.n, d, d) {
                let k = self.weight_dim::<F>(&w, &mut stats)?;
                dim += k * orbit_size(&w, self.map.m);
                if k > 0 {
                    dims.insert(w, k);
                }
            }
            out.insert(d, KoszulDegree { dim, character: peel_character(self.map.m, &dims)? });
        }
        Ok((out, stats))
    }
}

/// `dim H_1(K(W; S))_d` with its character, for each requested degree.
pub fn koszul_h1(m: usize, n: usize, variant: Variant, degrees: &[usize], cfg: &RankConfig) -> Result<KoszulTable> {
    if degrees.iter().any(|&d| d < 2) {
        return Err(Error::Precondition("koszul degrees start at 2".into()));
    }
    let map = quadric_map(m, n, variant)?;
    let task = KoszulTask { map, degrees: degrees.to_vec(), cap: cfg.max_nonzeros };
    let (degrees, certificate) = certified(&task, cfg)?;
    Ok(KoszulTable { m, n, variant, degrees, certificate })
}

/// Single-degree convenience wrapper.
pub fn koszul_h1_dim(m: usize, n: usize, variant: Variant, d: usize, cfg: &RankConfig) -> Result<u64> {
    Ok(koszul_h1(m, n, variant, &[d], cfg)?.degrees[&d].dim)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn low_degrees_at_three_by_three() {
        let t = koszul_h1(3, 3, Variant::Minors, &[2, 3], &RankConfig::exact()).unwrap();
        assert_eq!(t.degrees[&2].dim, 0);
        assert_eq!(t.degrees[&3].dim, 16);
    }

    #[test]
    fn principal_ideal_has_no_h1() {
        for d in 2..6 {
            assert_eq!(koszul_h1_dim(2, 2, Variant::Minors, d, &RankConfig::default()).unwrap(), 0);
        }
    }
}

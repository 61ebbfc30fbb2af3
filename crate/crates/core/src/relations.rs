//! Relations among the 2×2 minors (or generalized permanents): the kernel
//! of `Sym^d(W) → S_{2d}` and its minimal generators, degree by degree.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::birep::BiRep;
use crate::equivariant::Variant;
use crate::error::{Error, Result};
use crate::kernel::{graded_piece, ipoly_from, AlgebraMap, Generator, KernelEngine};
use crate::linalg::{certified, RankCertificate, RankConfig, RankStats};
use crate::poly::{minors_basis, permanents_basis, MatrixRingContext};
use crate::scalar::{FieldTask, Rational, Scalar};
use crate::weights::margins;

/// The quadrics of `variant` as generators of an [`AlgebraMap`] in class `[1]`.
pub fn quadric_map(m: usize, n: usize, variant: Variant) -> Result<AlgebraMap> {
    let ctx = MatrixRingContext::new(m, n)?;
    let polys = match variant {
        Variant::Minors => minors_basis::<Rational>(&ctx),
        Variant::Permanents => permanents_basis::<Rational>(&ctx),
    };
    let gens = polys
        .iter()
        .map(|p| {
            let image = ipoly_from(p)?;
            let weight = margins(&image[0].0, m, n);
            Ok(Generator { class: vec![1], weight, image })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(AlgebraMap { m, n, target_vars: m * n, gens })
}

/// Per-degree relation counts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationDegree {
    /// Dimension of all degree-`d` relations.
    pub kernel: u64,
    /// Dimension of the minimal relations in degree `d`.
    pub minimal: u64,
    /// Their `GL(V1) × GL(V2)` character, read off the weight spaces.
    pub character: BiRep,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RelationTable {
    pub m: usize,
    pub n: usize,
    pub variant: Variant,
    pub degrees: BTreeMap<usize, RelationDegree>,
    pub certificate: RankCertificate,
}

struct RelationTask {
    map: AlgebraMap,
    d_max: usize,
    cap: usize,
}

impl FieldTask for RelationTask {
    type Output = Result<(BTreeMap<usize, RelationDegree>, RankStats)>;

    fn run<F: Scalar>(&self) -> Self::Output {
        let mut engine = KernelEngine::<F>::new(&self.map, self.cap);
        let mut out = BTreeMap::new();
        for d in 2..=self.d_max {
            let piece = graded_piece(&mut engine, &[d as u16], 2 * d, 2 * d)?;
            out.insert(d, RelationDegree { kernel: piece.kernel, minimal: piece.minimal, character: piece.minimal_character });
        }
        Ok((out, engine.stats))
    }
}

/// Kernel and minimal-generator dimensions of `Sym^d(W) → S_{2d}` for
/// `2 ≤ d ≤ d_max`.
pub fn relation_dims(m: usize, n: usize, variant: Variant, d_max: usize, cfg: &RankConfig) -> Result<RelationTable> {
    if d_max < 2 {
        return Err(Error::Precondition("relation_dims needs d_max ≥ 2".into()));
    }
    let map = quadric_map(m, n, variant)?;
    let task = RelationTask { map, d_max, cap: cfg.max_nonzeros };
    let (degrees, certificate) = certified(&task, cfg)?;
    Ok(RelationTable { m, n, variant, degrees, certificate })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn plucker_quadric() {
        let t = relation_dims(2, 4, Variant::Minors, 3, &RankConfig::exact()).unwrap();
        assert_eq!(t.degrees[&2].minimal, 1);
        assert_eq!(t.degrees[&2].character, BiRep::single(part![2, 2], part![1, 1, 1, 1]));
        assert_eq!(t.degrees[&3].minimal, 0);
        assert_eq!(t.degrees[&3].kernel, 6);
    }

    #[test]
    fn two_by_two_has_no_relations() {
        let t = relation_dims(2, 2, Variant::Minors, 3, &RankConfig::default()).unwrap();
        assert!(t.degrees.values().all(|d| d.kernel == 0));
    }
}

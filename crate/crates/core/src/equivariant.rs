//! Named bivariate characters: the algebra generated by the minors, the
//! relation and Koszul-homology characters, the Veronese filtration layers,
//! and the associated-graded combinatorics of free `Sym`-modules.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::birep::BiRep;
use crate::error::{Error, Result};
use crate::partition::{horizontal_strips, in_m_r, Partition};
use crate::symfunc::{bivariate_wedge_power, DEFAULT_DEGREE_CAP};

/// Which quadrics generate the algebra: the `2×2` minors or the generalized
/// permanents. The two are exchanged by transpose duality.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize, Default)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    #[default]
    Minors,
    Permanents,
}

impl Variant {
    /// Apply transpose duality when the variant is `Permanents`.
    pub fn apply(self, rep: BiRep) -> BiRep {
        match self {
            Variant::Minors => rep,
            Variant::Permanents => rep.transpose_duality(),
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::Minors => "minors",
            Variant::Permanents => "permanents",
        })
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "minors" => Ok(Variant::Minors),
            "permanents" => Ok(Variant::Permanents),
            _ => Err(Error::Precondition(format!("unknown variant `{s}`"))),
        }
    }
}

/// Statements whose characters are stored as data.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    /// Minimal relations among minors.
    Thm11,
    /// Minimal relations among permanents.
    Thm12,
    /// First Koszul homology on the minors.
    Thm31,
    /// First Koszul homology on the permanents.
    Thm32,
    /// Layers of the Veronese filtration.
    Lem43,
    /// The functor of relations used in the induction.
    Sec6Tbar,
    /// Generators of the subspace-variety ideal.
    Sec6U,
    /// The bound for Tor_1 of a filtration layer.
    EqTor1Nr,
}

impl TheoremId {
    pub const ALL: [TheoremId; 8] = [
        TheoremId::Thm11,
        TheoremId::Thm12,
        TheoremId::Thm31,
        TheoremId::Thm32,
        TheoremId::Lem43,
        TheoremId::Sec6Tbar,
        TheoremId::Sec6U,
        TheoremId::EqTor1Nr,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TheoremId::Thm11 => "thm-1.1",
            TheoremId::Thm12 => "thm-1.2",
            TheoremId::Thm31 => "thm-3.1",
            TheoremId::Thm32 => "thm-3.2",
            TheoremId::Lem43 => "lem-4.3",
            TheoremId::Sec6Tbar => "sec-6-Tbar",
            TheoremId::Sec6U => "sec-6-U",
            TheoremId::EqTor1Nr => "eq-tor1-Nr",
        }
    }

    /// The variant the statement is phrased in.
    pub fn natural_variant(self) -> Variant {
        match self {
            TheoremId::Thm12 | TheoremId::Thm32 | TheoremId::Sec6Tbar | TheoremId::Sec6U => Variant::Permanents,
            _ => Variant::Minors,
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownStatement(s.to_string()))
    }
}

/// Extra parameters some statements need.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PredictParams {
    pub variant: Variant,
    /// Filtration index for `lem-4.3`.
    pub r: usize,
}

impl Default for PredictParams {
    fn default() -> Self {
        PredictParams { variant: Variant::Minors, r: 1 }
    }
}

impl PredictParams {
    pub fn variant(variant: Variant) -> Self {
        PredictParams { variant, ..Self::default() }
    }
}

fn pair(a: Partition, b: Partition) -> BiRep {
    let mut r = BiRep::single(a.clone(), b.clone());
    r.add(b, a, 1);
    r
}

fn hook(first: usize, ones: usize) -> Partition {
    let mut parts = vec![first];
    parts.extend(std::iter::repeat_n(1, ones));
    Partition::from_unsorted(parts)
}

fn relations_minors(j: usize) -> BiRep {
    match j {
        2 => pair(Partition::column(4), Partition::rectangle(2, 2)),
        3 => pair(hook(3, 3), Partition::rectangle(2, 3)),
        _ => BiRep::new(),
    }
}

/// `K_d` for the minors in the stable range `d ≥ 5`, also defined for
/// smaller `d` so that the low-degree displays can be compared with it.
pub fn koszul_stable_form(d: usize) -> BiRep {
    if d < 3 {
        return BiRep::new();
    }
    let a = hook(d - 2, 2);
    let b = hook(d - 1, 1);
    let mut r = BiRep::single(a.clone(), a.clone());
    r.add_all(&pair(a, b));
    r
}

fn koszul_minors(d: usize) -> BiRep {
    match d {
        0..=2 => BiRep::new(),
        3 => pair(hook(2, 1), Partition::column(3)),
        4 => {
            let mut r = pair(Partition::rectangle(2, 2), Partition::column(4));
            r.add_all(&koszul_stable_form(4));
            r
        }
        _ => koszul_stable_form(d),
    }
}

/// Characters of the statements, indexed by the degree `j` the statement
/// uses: relation degree for `thm-1.*` and `sec-6-Tbar`, polynomial degree
/// for `thm-3.*`, the degree of `S^(2)` for `lem-4.3`, `m` for `sec-6-U`
/// and `r` for `eq-tor1-Nr`.
///
/// `thm-1.1`/`thm-1.2` (and `thm-3.1`/`thm-3.2`) name the same family; the
/// variant in `params` selects minors or permanents.
pub fn predicted_character(id: TheoremId, j: usize, params: &PredictParams) -> Result<BiRep> {
    Ok(match id {
        TheoremId::Thm11 | TheoremId::Thm12 => params.variant.apply(relations_minors(j)),
        TheoremId::Thm31 | TheoremId::Thm32 => params.variant.apply(koszul_minors(j)),
        TheoremId::Sec6Tbar => relations_minors(j).transpose_duality(),
        TheoremId::Lem43 => {
            let r = params.r;
            BiRep::from_pairs(
                Partition::all_of_size(2 * j)
                    .into_iter()
                    .filter(|l| in_m_r(l, r) && (r == 0 || !in_m_r(l, r - 1)))
                    .map(|l| (l.clone(), l)),
            )
        }
        TheoremId::Sec6U => {
            if j == 0 {
                return Ok(BiRep::trivial());
            }
            let y = BiRep::single(Partition::row(1), Partition::row(2));
            let wedge = bivariate_wedge_power(&y, j, DEFAULT_DEGREE_CAP.max(2 * j))?;
            BiRep::single(Partition::column(j), Partition::empty()).tensor(&wedge)
        }
        TheoremId::EqTor1Nr => {
            if j == 0 {
                return Err(Error::Precondition("r must be at least 1".into()));
            }
            let a = hook(2 * j, 2);
            let b = hook(2 * j + 1, 1);
            let mut r = BiRep::single(a.clone(), a.clone());
            r.add_all(&pair(a, b));
            r
        }
    })
}

/// `A_d = ⊕ S_λ ⊠ S_λ` over `λ ⊢ 2d` with `λ_1 ≤ λ_2 + λ_3 + ⋯`; for
/// permanents the transpose dual.
pub fn character_a(d: usize, variant: Variant) -> BiRep {
    let rep = BiRep::from_pairs(
        Partition::all_of_size(2 * d).into_iter().filter(|l| in_m_r(l, 0)).map(|l| (l.clone(), l)),
    );
    variant.apply(rep)
}

/// Components `M_μ` of `gr^t(F_λ)`: `μ/λ` a horizontal strip with
/// `μ_1 = λ_1` and `t = μ_2 + μ_3 + ⋯`, for `t ≤ cap`.
pub fn gr_components_univariate(lambda: &Partition, cap: usize) -> BTreeMap<usize, Vec<Partition>> {
    let mut out: BTreeMap<usize, Vec<Partition>> = (0..=cap).map(|t| (t, Vec::new())).collect();
    // with μ_1 fixed, μ_i ≤ λ_{i-1} bounds the strip
    let max_extra: usize = lambda.size() - lambda.tail_size();
    for k in 0..=max_extra {
        for mu in horizontal_strips(lambda, k) {
            if mu.first() == lambda.first() {
                let t = mu.tail_size();
                if t <= cap {
                    out.get_mut(&t).unwrap().push(mu);
                }
            }
        }
    }
    for v in out.values_mut() {
        v.sort();
    }
    out
}

/// Labels of `gr(F_{λ,μ})` grouped by filtration index `(s, t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrComponentTable {
    pub lambda: Partition,
    pub mu: Partition,
    pub entries: BTreeMap<(usize, usize), Vec<(Partition, Partition)>>,
}

impl GrComponentTable {
    pub fn labels(&self) -> Vec<(Partition, Partition)> {
        let mut all: Vec<_> = self.entries.values().flatten().cloned().collect();
        all.sort();
        all
    }
}

/// The index set `N_{λ,μ}`: pairs `(α, β)` of equal size with `α/λ` and
/// `β/μ` horizontal strips and `α_1 = λ_1` or `β_1 = μ_1`, up to `|α| ≤ cap`.
pub fn gr_components_bivariate(lambda: &Partition, mu: &Partition, cap: usize) -> Result<GrComponentTable> {
    if lambda.size() != mu.size() {
        return Err(Error::Precondition(format!("|{lambda}| ≠ |{mu}|")));
    }
    let extend = |base: &Partition| -> Vec<Partition> {
        (0..=cap.saturating_sub(base.size())).flat_map(|k| horizontal_strips(base, k)).collect()
    };
    let alphas = extend(lambda);
    let betas = extend(mu);
    let mut entries: BTreeMap<(usize, usize), Vec<(Partition, Partition)>> = BTreeMap::new();
    for a in &alphas {
        for b in &betas {
            if a.size() == b.size() && (a.first() == lambda.first() || b.first() == mu.first()) {
                entries.entry((a.tail_size(), b.tail_size())).or_default().push((a.clone(), b.clone()));
            }
        }
    }
    Ok(GrComponentTable { lambda: lambda.clone(), mu: mu.clone(), entries })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn p() -> PredictParams {
        PredictParams::default()
    }

    #[test]
    fn algebra_low_degrees() {
        assert_eq!(character_a(0, Variant::Minors), BiRep::trivial());
        assert_eq!(character_a(1, Variant::Minors), BiRep::single(part![1, 1], part![1, 1]));
        assert_eq!(
            character_a(2, Variant::Minors),
            BiRep::from_pairs([
                (part![2, 2], part![2, 2]),
                (part![2, 1, 1], part![2, 1, 1]),
                (part![1, 1, 1, 1], part![1, 1, 1, 1])
            ])
        );
        assert_eq!(character_a(2, Variant::Permanents).dim_at(3, 3), 486);
    }

    #[test]
    fn relation_characters() {
        let t3 = predicted_character(TheoremId::Thm11, 3, &p()).unwrap();
        assert_eq!(t3, BiRep::from_pairs([(part![3, 1, 1, 1], part![2, 2, 2]), (part![2, 2, 2], part![3, 1, 1, 1])]));
        assert!(predicted_character(TheoremId::Thm11, 5, &p()).unwrap().is_empty());
        let t2 = predicted_character(TheoremId::Thm11, 2, &p()).unwrap();
        assert_eq!(t2.dim_at(2, 4), 1);
        let bar2 = predicted_character(TheoremId::Thm12, 2, &PredictParams::variant(Variant::Permanents)).unwrap();
        assert_eq!(bar2, t2.transpose_duality());
        assert_eq!(bar2.dim_at(3, 3), 180);
        assert_eq!(bar2, predicted_character(TheoremId::Sec6Tbar, 2, &p()).unwrap());
    }

    #[test]
    fn koszul_characters() {
        let k5 = predicted_character(TheoremId::Thm31, 5, &p()).unwrap();
        assert_eq!(
            k5,
            BiRep::from_pairs([
                (part![3, 1, 1], part![3, 1, 1]),
                (part![3, 1, 1], part![4, 1]),
                (part![4, 1], part![3, 1, 1])
            ])
        );
        assert_eq!(predicted_character(TheoremId::Thm31, 3, &p()).unwrap().dim_at(3, 3), 16);
        assert_eq!(predicted_character(TheoremId::Thm31, 4, &p()).unwrap().dim_at(3, 3), 99);
        let perm = PredictParams::variant(Variant::Permanents);
        let kb = predicted_character(TheoremId::Thm32, 6, &perm).unwrap();
        assert!(kb.iter().any(|(a, _, _)| a == &part![3, 1, 1, 1]));
        assert_eq!(kb.dim_at(3, 3), 0);
    }

    #[test]
    fn u_dimension() {
        let u = predicted_character(TheoremId::Sec6U, 2, &p()).unwrap();
        assert_eq!(u.dim_at(2, 2), 15);
        assert_eq!(u.dim_at(2, 3), 66);
    }

    #[test]
    fn example_gr_tables() {
        let g = gr_components_univariate(&part![3, 1], 6);
        assert_eq!(g[&1], vec![part![3, 1]]);
        assert_eq!(g[&2], vec![part![3, 1, 1], part![3, 2]]);
        assert_eq!(g[&3], vec![part![3, 2, 1], part![3, 3]]);
        assert_eq!(g[&4], vec![part![3, 3, 1]]);
        let g = gr_components_univariate(&part![1, 1], 4);
        assert_eq!(g[&2], vec![part![1, 1, 1]]);
        assert!(g[&3].is_empty());
        let g = gr_components_univariate(&part![], 3);
        assert_eq!(g[&0], vec![part![]]);
        assert!(g[&1].is_empty());
    }

    #[test]
    fn eight_labels() {
        let t = gr_components_bivariate(&part![1, 1, 1], &part![2, 1], 8).unwrap();
        let mut expected = vec![
            (part![1, 1, 1], part![2, 1]),
            (part![1, 1, 1, 1], part![2, 1, 1]),
            (part![1, 1, 1, 1], part![2, 2]),
            (part![1, 1, 1, 1], part![3, 1]),
            (part![2, 1, 1], part![2, 1, 1]),
            (part![2, 1, 1], part![2, 2]),
            (part![2, 1, 1, 1], part![2, 2, 1]),
            (part![3, 1, 1], part![2, 2, 1]),
        ];
        expected.sort();
        assert_eq!(t.labels(), expected);
        assert!(gr_components_bivariate(&part![1], &part![2], 4).is_err());
    }
}

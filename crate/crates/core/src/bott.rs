//! Bott's algorithm on projective spaces and Grassmannians of quotients,
//! with the Künneth products used for the Veronese filtration and the
//! subspace variety.
//!
//! Weights are plain integer sequences here; only results are turned back
//! into partitions.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::birep::BiRep;
use crate::error::{Error, Result};
use crate::partition::{in_m_r, Partition};
use crate::symfunc::{bivariate_wedge_power, lr_coefficients, schur_plethysm, DEFAULT_DEGREE_CAP};

/// The single nonzero cohomology group produced by Bott's algorithm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BottResult {
    pub degree: usize,
    /// Dominant weight of `H^degree`; may have negative entries.
    pub weight: Vec<i64>,
}

impl BottResult {
    /// The weight as a partition, when it is polynomial.
    pub fn partition(&self) -> Option<Partition> {
        if self.weight.iter().all(|&w| w >= 0) {
            Some(Partition::from_unsorted(self.weight.iter().map(|&w| w as usize).collect()))
        } else {
            None
        }
    }
}

/// Dotted action on an arbitrary weight: add ρ, detect repeats, sort and
/// count inversions, subtract ρ. `None` means all cohomology vanishes.
pub fn bott_weight(weight: &[i64]) -> Option<BottResult> {
    let n = weight.len() as i64;
    let mut shifted: Vec<i64> = weight.iter().enumerate().map(|(i, &w)| w + n - 1 - i as i64).collect();
    let mut inversions = 0;
    for i in 0..shifted.len() {
        for j in i + 1..shifted.len() {
            match shifted[i].cmp(&shifted[j]) {
                std::cmp::Ordering::Equal => return None,
                std::cmp::Ordering::Less => inversions += 1,
                std::cmp::Ordering::Greater => {}
            }
        }
    }
    shifted.sort_unstable_by(|a, b| b.cmp(a));
    let weight = shifted.iter().enumerate().map(|(i, &w)| w - (n - 1 - i as i64)).collect();
    Some(BottResult { degree: inversions, weight })
}

/// Cohomology of `S_α Q ⊗ S_β R` on the Grassmannian of quotients, where
/// `α` has length `rank Q` and `β` has length `rank R` (pad with zeros).
pub fn bott_grassmannian(q_weight: &[i64], r_weight: &[i64]) -> Option<BottResult> {
    let mut w = q_weight.to_vec();
    w.extend_from_slice(r_weight);
    bott_weight(&w)
}

/// Cohomology of `Q^a ⊗ S_λ R` on the projective space of one-dimensional
/// quotients of `C^n`.
pub fn bott_projective(n: usize, a: i64, lambda: &Partition) -> Result<Option<BottResult>> {
    if n == 0 || lambda.len() > n - 1 {
        return Err(Error::Precondition(format!(
            "S_{lambda:?} R needs at most {} parts on P(C^{n})",
            n.saturating_sub(1)
        )));
    }
    let mut r: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
    r.resize(n - 1, 0);
    Ok(bott_grassmannian(&[a], &r))
}

/// Weyl dimension formula evaluated at any integer weight. On a
/// non-dominant weight this is the Euler characteristic of the
/// corresponding line bundle on the flag variety.
pub fn weyl_dimension(weight: &[i64]) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..weight.len() {
        for j in i + 1..weight.len() {
            num *= BigInt::from(weight[i] - weight[j] + (j - i) as i64);
            den *= BigInt::from((j - i) as i64);
        }
    }
    let q = BigRational::new(num, den);
    debug_assert!(q.is_integer());
    q.to_integer()
}

/// Cohomology degree ↦ character.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CohomologyTable {
    pub entries: BTreeMap<usize, BiRep>,
}

impl CohomologyTable {
    pub fn get(&self, j: usize) -> BiRep {
        self.entries.get(&j).cloned().unwrap_or_default()
    }

    pub fn add(&mut self, j: usize, rep: &BiRep) {
        if !rep.is_empty() {
            self.entries.entry(j).or_default().add_all(rep);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.values().all(BiRep::is_empty)
    }
}

/// `H^*(P(C^m), Q^a ⊗ F(R))` for a character `F` of `R`, as degree ↦ list
/// of polynomial `GL_m`-characters. Non-polynomial outcomes are errors.
fn projective_cohomology(m: usize, a: i64, f: &[(Partition, u64)]) -> Result<BTreeMap<usize, Vec<(Partition, u64)>>> {
    let mut out: BTreeMap<usize, Vec<(Partition, u64)>> = BTreeMap::new();
    for (lambda, mult) in f {
        if lambda.len() > m.saturating_sub(1) {
            continue;
        }
        if let Some(res) = bott_projective(m, a, lambda)? {
            let p = res
                .partition()
                .ok_or_else(|| Error::Precondition(format!("non-polynomial cohomology {:?}", res.weight)))?;
            out.entry(res.degree).or_default().push((p, *mult));
        }
    }
    Ok(out)
}

fn multiply_terms(a: &[(Partition, u64)], b: &[(Partition, u64)]) -> Vec<(Partition, u64)> {
    let mut acc: BTreeMap<Partition, u64> = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            for (z, c) in lr_coefficients(x, y) {
                *acc.entry(z).or_default() += cx * cy * c;
            }
        }
    }
    acc.into_iter().collect()
}

fn truncate_terms(terms: Vec<(Partition, u64)>, dim: usize) -> Vec<(Partition, u64)> {
    terms.into_iter().filter(|(p, _)| p.len() <= dim).collect()
}

/// `H^*(X, L^{2r} ⊗ Λ^u ξ_1 ⊗ Λ^v ξ_2)` on `X = P(C^m) × P(C^n)`, computed
/// summand by summand through Cauchy, plethysm, Bott and Künneth.
pub fn xi_cohomology(u: usize, v: usize, r: usize, m: usize, n: usize, cap: usize) -> Result<CohomologyTable> {
    let wedge2 = Partition::column(2);
    let mut table = CohomologyTable::default();
    for alpha in Partition::all_of_size(u) {
        // trivial-bundle factor S_α(Λ² V_1)
        let v1_factor = truncate_terms(schur_plethysm(&alpha, &wedge2, cap)?, m);
        if v1_factor.is_empty() {
            continue;
        }
        let alpha_t = alpha.conjugate();
        let on_r2_from_xi1 = schur_plethysm(&alpha_t, &wedge2, cap)?;
        for beta in Partition::all_of_size(v) {
            let on_r1 = schur_plethysm(&beta, &wedge2, cap)?;
            let on_r2 = multiply_terms(&on_r2_from_xi1, &[(beta.conjugate(), 1)]);
            let h1 = projective_cohomology(m, 2 * r as i64, &on_r1)?;
            let h2 = projective_cohomology(n, (2 * r + v) as i64, &on_r2)?;
            for (a, left) in &h1 {
                let left = truncate_terms(multiply_terms(&v1_factor, left), m);
                for (b, right) in &h2 {
                    let right = truncate_terms(right.clone(), n);
                    let mut rep = BiRep::new();
                    for (x, cx) in &left {
                        for (y, cy) in &right {
                            rep.add(x.clone(), y.clone(), cx * cy);
                        }
                    }
                    table.add(a + b, &rep);
                }
            }
        }
    }
    Ok(table)
}

/// The vanishing statement for one `(u, v, j, r)` at dimensions `(m, n)`:
/// true iff `H^j(X, L^{2r} ⊗ Λ^u ξ_1 ⊗ Λ^v ξ_2) = 0`.
pub fn verify_lemma_4_4(u: usize, v: usize, j: usize, r: usize, m: usize, n: usize) -> Result<bool> {
    if j == 0 || r == 0 {
        return Err(Error::Precondition("j and r must be at least 1".into()));
    }
    Ok(xi_cohomology(u, v, r, m, n, DEFAULT_DEGREE_CAP)?.get(j).is_empty())
}

/// Graded Tor of `N_r` through the geometric technique:
/// `Tor_i(N_r)_{r+i+j} = H^j(X, Λ^{i+j} ξ ⊗ L^{2r})`, with `Λ^k ξ` replaced by
/// its composition factors `Λ^u ξ_1 ⊗ Λ^v ξ_2`, `u + v = k`. The result is
/// the character of the associated graded, an upper bound for Tor.
pub fn tor_geometric(i: usize, r: usize, m: usize, n: usize) -> Result<BTreeMap<usize, BiRep>> {
    if i > 2 {
        return Err(Error::Precondition(format!("homological index {i} is not supported")));
    }
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let dim_x = (m - 1) + (n - 1);
    let mut out: BTreeMap<usize, BiRep> = BTreeMap::new();
    for j in 0..=dim_x {
        let k = i + j;
        let mut rep = BiRep::new();
        for u in 0..=k {
            let t = xi_cohomology(u, k - u, r, m, n, DEFAULT_DEGREE_CAP)?;
            rep.add_all(&t.get(j));
        }
        if !rep.is_empty() {
            out.entry(r + i + j).or_default().add_all(&rep);
        }
    }
    Ok(out)
}

/// `H^0(X, L^{2r} ⊗ Sym^d η)`: by Cauchy a sum over `μ ⊢ d` of
/// `H^0(Q_1^{d+2r} ⊗ S_μ R_1) ⊠ H^0(Q_2^{d+2r} ⊗ S_μ R_2)`.
/// Only `r ≥ 1`: for `r = 0` the layer is `A` itself, which is not of this form.
pub fn lemma_4_3_character(r: usize, d: usize, m: usize, n: usize) -> Result<BiRep> {
    if r == 0 {
        return Err(Error::Precondition("r must be at least 1".into()));
    }
    let a = (d + 2 * r) as i64;
    let mut out = BiRep::new();
    for mu in Partition::all_of_size(d) {
        if mu.len() + 1 > m || mu.len() + 1 > n {
            continue;
        }
        let (Some(h1), Some(h2)) = (bott_projective(m, a, &mu)?, bott_projective(n, a, &mu)?) else {
            continue;
        };
        if h1.degree != 0 || h2.degree != 0 {
            return Err(Error::Precondition(format!("higher cohomology for μ = {mu:?}")));
        }
        if let (Some(p1), Some(p2)) = (h1.partition(), h2.partition()) {
            out.add(p1, p2, 1);
        }
    }
    Ok(out)
}

/// The enumeration side of the same identity:
/// `{(λ, λ) : λ ∈ M_r \ M_{r-1}, |λ| = 2(r + d), λ'_1 ≤ min(m, n)}`.
pub fn filtration_layer(r: usize, d: usize, m: usize, n: usize) -> BiRep {
    let size = 2 * (r + d);
    BiRep::from_pairs(
        Partition::all_of_size_with_len(size, m.min(n))
            .into_iter()
            .filter(|l| in_m_r(l, r) && (r == 0 || !in_m_r(l, r - 1)))
            .map(|l| (l.clone(), l)),
    )
}

/// Minimal generators of the ideal of the subspace variety through the
/// geometric technique: `H^{m-1}(P, R^m) ⊗ Λ^m(V_1 ⊗ Sym² V_2)` where `P`
/// parametrizes rank `m - 1` quotients of `V_1` and `R = O(-1)`.
/// Returns the generator degree and the character.
pub fn subspace_generator_character(m: usize, cap: usize) -> Result<(usize, BiRep)> {
    if m == 0 {
        return Err(Error::Precondition("m must be positive".into()));
    }
    let res = bott_grassmannian(&vec![0; m - 1], &[m as i64])
        .ok_or_else(|| Error::Precondition("H(P, R^m) vanishes".into()))?;
    if res.degree != m - 1 {
        return Err(Error::Precondition(format!("unexpected cohomological degree {}", res.degree)));
    }
    let h = res.partition().expect("polynomial weight");
    let y = BiRep::single(Partition::row(1), Partition::row(2));
    let wedge = bivariate_wedge_power(&y, m, cap)?;
    Ok((m, BiRep::single(h, Partition::empty()).tensor(&wedge)))
}

/// Euler characteristic check: `(-1)^ℓ dim H^ℓ` against the Weyl formula
/// on the unshifted weight.
pub fn euler_characteristic_matches(weight: &[i64]) -> bool {
    let expected = weyl_dimension(weight);
    match bott_weight(weight) {
        None => expected.is_zero(),
        Some(res) => {
            let d = weyl_dimension(&res.weight);
            if res.degree % 2 == 0 {
                d == expected
            } else {
                -d == expected
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    #[test]
    fn sections_of_o_d_on_p1() {
        for d in 0..6 {
            let r = bott_projective(2, d, &part![]).unwrap().unwrap();
            assert_eq!(r.degree, 0);
            assert_eq!(r.partition().unwrap(), Partition::row(d as usize));
        }
        assert_eq!(bott_projective(2, -1, &part![]).unwrap(), None);
        let r = bott_projective(2, -2, &part![]).unwrap().unwrap();
        assert_eq!(r.degree, 1);
    }

    #[test]
    fn top_cohomology_of_r_power() {
        for m in 1..6 {
            let r = bott_grassmannian(&vec![0; m - 1], &[m as i64]).unwrap();
            assert_eq!(r.degree, m - 1);
            assert_eq!(r.partition().unwrap(), Partition::column(m));
        }
    }

    #[test]
    fn twisted_wedge_two() {
        let r = bott_projective(3, 2, &part![1, 1]).unwrap().unwrap();
        assert_eq!((r.degree, r.partition().unwrap()), (0, part![2, 1, 1]));
    }

    #[test]
    fn precondition_on_parts() {
        assert!(bott_projective(2, 0, &part![1, 1]).is_err());
    }

    #[test]
    fn structure_sheaf_case() {
        for (m, n) in [(2, 2), (3, 4), (5, 5)] {
            assert!(verify_lemma_4_4(0, 0, 1, 1, m, n).unwrap());
        }
        assert!(verify_lemma_4_4(1, 1, 1, 1, 4, 4).unwrap());
    }

    #[test]
    fn tor_zero_and_one() {
        let t0 = tor_geometric(0, 1, 3, 3).unwrap();
        assert_eq!(t0.keys().copied().collect::<Vec<_>>(), vec![1]);
        assert_eq!(t0[&1], BiRep::single(part![2], part![2]));
        let t1 = tor_geometric(1, 1, 4, 4).unwrap();
        assert_eq!(t1.keys().copied().collect::<Vec<_>>(), vec![2]);
        let bound = BiRep::from_pairs([
            (part![2, 1, 1], part![2, 1, 1]),
            (part![2, 1, 1], part![3, 1]),
            (part![3, 1], part![2, 1, 1]),
        ]);
        assert_eq!(t1[&2], bound);
        let t2 = tor_geometric(2, 1, 3, 3).unwrap();
        assert!(t2.keys().all(|&k| k == 3));
    }

    #[test]
    fn layer_examples() {
        assert_eq!(lemma_4_3_character(1, 0, 3, 3).unwrap(), BiRep::single(part![2], part![2]));
        assert_eq!(lemma_4_3_character(1, 1, 3, 3).unwrap(), BiRep::single(part![3, 1], part![3, 1]));
        assert_eq!(lemma_4_3_character(2, 2, 3, 3).unwrap(), filtration_layer(2, 2, 3, 3));
    }

    #[test]
    fn subspace_character_dims() {
        let (deg, ch) = subspace_generator_character(2, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!(deg, 2);
        assert_eq!(ch.dim_at(2, 2), 15);
        assert_eq!(ch.dim_at(2, 3), 66);
        let (deg, ch) = subspace_generator_character(1, DEFAULT_DEGREE_CAP).unwrap();
        assert_eq!((deg, ch.dim_at(1, 3)), (1, 6));
    }

    #[test]
    fn weyl_formula_small() {
        assert_eq!(weyl_dimension(&[2, 1, 0]), BigInt::from(8));
        assert_eq!(weyl_dimension(&[1, 1]), BigInt::from(1));
        assert!(euler_characteristic_matches(&[-3, 0]));
    }
}

//! Symmetric functions in the Schur, power-sum and monomial bases.
//!
//! Products in the Schur basis use Littlewood–Richardson tableaux. Plethysm
//! goes through the power-sum basis, where `p_k ∘ g` is `g` with every
//! `p_m` replaced by `p_{km}`; symmetric-group characters for the basis
//! change come from the Murnaghan–Nakayama rule on β-sets.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use num_traits::One;

use crate::birep::BiRep;
use crate::error::{Error, Result};
use crate::partition::{horizontal_strips, kostka, Partition};
use crate::scalar::{Rational, Scalar};

/// Default cap on the degree of plethysm and exterior-power outputs.
pub const DEFAULT_DEGREE_CAP: usize = 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Schur,
    PowerSum,
    Monomial,
}

/// A finite linear combination of basis functions indexed by partitions.
#[derive(Clone, Debug, PartialEq)]
pub struct SymFunc<T: Scalar = Rational> {
    basis: Basis,
    terms: BTreeMap<Partition, T>,
}

impl<T: Scalar> SymFunc<T> {
    pub fn zero(basis: Basis) -> Self {
        SymFunc { basis, terms: BTreeMap::new() }
    }

    pub fn basis_element(basis: Basis, index: Partition) -> Self {
        let mut f = Self::zero(basis);
        f.add_term(index, T::one());
        f
    }

    pub fn schur(index: Partition) -> Self {
        Self::basis_element(Basis::Schur, index)
    }

    pub fn power(index: Partition) -> Self {
        Self::basis_element(Basis::PowerSum, index)
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, index: &Partition) -> T {
        self.terms.get(index).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &T)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, index: Partition, c: T) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(index.clone()).or_insert_with(T::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&index);
        }
    }

    pub fn add(&mut self, other: &SymFunc<T>) {
        assert_eq!(self.basis, other.basis, "adding functions in different bases");
        for (p, c) in &other.terms {
            self.add_term(p.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &T) -> SymFunc<T> {
        let mut out = SymFunc::zero(self.basis);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v.clone() * c.clone());
        }
        out
    }

    /// Largest degree of a term, 0 for the zero function.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(Partition::size).max().unwrap_or(0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut sizes = self.terms.keys().map(Partition::size);
        match sizes.next() {
            None => true,
            Some(d) => sizes.all(|s| s == d),
        }
    }

    /// All coefficients are nonnegative integers.
    pub fn is_positive_integral(&self) -> bool {
        self.terms.values().all(|c| c.to_integer().is_some_and(|v| v >= 0))
    }

    /// Integer coefficients, failing on anything non-integral or negative.
    pub fn positive_integer_terms(&self) -> Result<Vec<(Partition, u64)>> {
        self.terms
            .iter()
            .map(|(p, c)| match c.to_integer() {
                Some(v) if v >= 0 => Ok((p.clone(), v as u64)),
                _ => Err(Error::NonIntegral(format!("coefficient {c} of {p:?}"))),
            })
            .collect()
    }

    /// Convert a Schur-basis function into the power-sum basis.
    pub fn to_power_basis(&self) -> Result<SymFunc<T>> {
        match self.basis {
            Basis::PowerSum => Ok(self.clone()),
            Basis::Schur => {
                let mut out = SymFunc::zero(Basis::PowerSum);
                for (lambda, c) in &self.terms {
                    for rho in Partition::all_of_size(lambda.size()) {
                        let chi = character(lambda, &rho);
                        if chi != 0 {
                            let z = T::from_rational(&z_rho(&rho)).expect("z_ρ invertible");
                            out.add_term(rho, c.clone() * T::from_i64(chi) / z);
                        }
                    }
                }
                Ok(out)
            }
            Basis::Monomial => self.to_schur_basis()?.to_power_basis(),
        }
    }

    /// Convert back into the Schur basis: `p_ρ = Σ_λ χ^λ(ρ) s_λ`.
    pub fn from_power_basis(&self) -> Result<SymFunc<T>> {
        if self.basis != Basis::PowerSum {
            return Err(Error::Precondition("from_power_basis expects power-sum input".into()));
        }
        let mut out = SymFunc::zero(Basis::Schur);
        for (rho, c) in &self.terms {
            for lambda in Partition::all_of_size(rho.size()) {
                let chi = character(&lambda, rho);
                if chi != 0 {
                    out.add_term(lambda, c.clone() * T::from_i64(chi));
                }
            }
        }
        Ok(out)
    }

    /// Schur basis from any basis.
    pub fn to_schur_basis(&self) -> Result<SymFunc<T>> {
        match self.basis {
            Basis::Schur => Ok(self.clone()),
            Basis::PowerSum => self.from_power_basis(),
            Basis::Monomial => {
                // Triangular inversion of s_λ = Σ_μ K_{λμ} m_μ, peeling the
                // dominance-largest monomial each time.
                let mut rest = self.clone();
                let mut out = SymFunc::zero(Basis::Schur);
                while let Some((lead, c)) = rest.terms.iter().next_back().map(|(p, c)| (p.clone(), c.clone())) {
                    let s = SymFunc::<T>::schur(lead.clone()).to_monomial_basis()?;
                    rest.add(&s.scale(&-c.clone()));
                    out.add_term(lead, c);
                }
                Ok(out)
            }
        }
    }

    /// Monomial basis via Kostka numbers.
    pub fn to_monomial_basis(&self) -> Result<SymFunc<T>> {
        let schur = self.to_schur_basis()?;
        let mut out = SymFunc::zero(Basis::Monomial);
        for (lambda, c) in &schur.terms {
            for mu in Partition::all_of_size(lambda.size()) {
                let k = kostka(lambda, mu.parts());
                if k > 0 {
                    out.add_term(mu, c.clone() * T::from_i64(k as i64));
                }
            }
        }
        Ok(out)
    }
}

/// `z_ρ = Π_i i^{m_i} m_i!`.
pub fn z_rho(rho: &Partition) -> Rational {
    let mut counts: BTreeMap<usize, u64> = BTreeMap::new();
    for &p in rho.parts() {
        *counts.entry(p).or_default() += 1;
    }
    let mut z = Rational::one();
    for (i, m) in counts {
        for k in 1..=m {
            z *= Rational::from_integer((i as u64 * k).into());
        }
    }
    z
}

type CharCache = Mutex<HashMap<(Partition, Partition), i64>>;

fn char_cache() -> &'static CharCache {
    static CACHE: OnceLock<CharCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Symmetric-group character `χ^λ(ρ)` by Murnaghan–Nakayama.
pub fn character(lambda: &Partition, rho: &Partition) -> i64 {
    if lambda.size() != rho.size() {
        return 0;
    }
    if rho.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), rho.clone());
    if let Some(&v) = char_cache().lock().unwrap().get(&key) {
        return v;
    }
    let k = rho.first();
    let rest = Partition::from_sorted(rho.parts()[1..].to_vec());
    let len = lambda.len();
    let beta: Vec<usize> = lambda.parts().iter().enumerate().map(|(i, &p)| p + len - 1 - i).collect();
    let mut total = 0i64;
    for (idx, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let height = beta.iter().filter(|&&c| c > b - k && c < b).count();
        let mut nb = beta.clone();
        nb[idx] = b - k;
        nb.sort_unstable_by(|x, y| y.cmp(x));
        let parts: Vec<usize> = nb.iter().enumerate().map(|(i, &c)| c - (len - 1 - i)).collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * character(&Partition::from_sorted(parts), &rest);
    }
    char_cache().lock().unwrap().insert(key, total);
    total
}

/// Littlewood–Richardson expansion `s_λ s_μ = Σ c^ν_{λμ} s_ν`, by
/// enumerating LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coefficients(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    // counts[r][i]: number of label i placed in row r so far
    let mut counts: Vec<Vec<usize>> = Vec::new();
    lr_rec(lambda.clone(), mu.parts(), 0, &mut counts, &mut out);
    out
}

fn lr_rec(
    shape: Partition,
    content: &[usize],
    label: usize,
    counts: &mut Vec<Vec<usize>>,
    out: &mut BTreeMap<Partition, u64>,
) {
    if label == content.len() {
        *out.entry(shape).or_insert(0) += 1;
        return;
    }
    for next in horizontal_strips(&shape, content[label]) {
        let rows = next.len();
        let added: Vec<usize> = (0..rows).map(|r| next.part(r + 1) - shape.part(r + 1)).collect();
        if label > 0 {
            // Reverse reading word must stay a lattice word: for every row r,
            // #(label) in rows ≤ r ≤ #(label-1) in rows < r.
            let mut cum_new = 0;
            let mut cum_prev = 0;
            let mut ok = true;
            for (r, &a) in added.iter().enumerate() {
                cum_new += a;
                if cum_new > cum_prev {
                    ok = false;
                    break;
                }
                cum_prev += counts.get(r).map_or(0, |c| c[label - 1]);
            }
            if !ok {
                continue;
            }
        }
        while counts.len() < rows {
            counts.push(vec![0; content.len()]);
        }
        for (r, &a) in added.iter().enumerate() {
            counts[r][label] += a;
        }
        lr_rec(next, content, label + 1, counts, out);
        for (r, &a) in added.iter().enumerate() {
            counts[r][label] -= a;
        }
    }
}

/// `s_λ · s_μ` in the Schur basis.
pub fn schur_multiply<T: Scalar>(lambda: &Partition, mu: &Partition) -> SymFunc<T> {
    let mut f = SymFunc::zero(Basis::Schur);
    for (nu, c) in lr_coefficients(lambda, mu) {
        f.add_term(nu, T::from_i64(c as i64));
    }
    f
}

/// Product of two Schur-basis functions.
pub fn multiply<T: Scalar>(f: &SymFunc<T>, g: &SymFunc<T>) -> Result<SymFunc<T>> {
    let (f, g) = (f.to_schur_basis()?, g.to_schur_basis()?);
    let mut out = SymFunc::zero(Basis::Schur);
    for (a, ca) in f.terms() {
        for (b, cb) in g.terms() {
            for (nu, c) in lr_coefficients(a, b) {
                out.add_term(nu, ca.clone() * cb.clone() * T::from_i64(c as i64));
            }
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PieriKind {
    /// Multiplication by `h_d = s_(d)`.
    Row,
    /// Multiplication by `e_d = s_(1^d)`.
    Column,
}

/// Pieri's rule: sum of `s_μ` over horizontal (or vertical) strips `μ/λ` of size `d`.
pub fn pieri<T: Scalar>(lambda: &Partition, d: usize, kind: PieriKind) -> SymFunc<T> {
    let mut f = SymFunc::zero(Basis::Schur);
    match kind {
        PieriKind::Row => {
            for mu in horizontal_strips(lambda, d) {
                f.add_term(mu, T::one());
            }
        }
        PieriKind::Column => {
            for mu in horizontal_strips(&lambda.conjugate(), d) {
                f.add_term(mu.conjugate(), T::one());
            }
        }
    }
    f
}

/// `p_k ∘ g` for `g` in the power-sum basis.
fn power_plethysm<T: Scalar>(k: usize, g: &SymFunc<T>) -> SymFunc<T> {
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (rho, c) in g.terms() {
        let scaled = Partition::from_sorted(rho.parts().iter().map(|&p| p * k).collect());
        out.add_term(scaled, c.clone());
    }
    out
}

fn power_product<T: Scalar>(a: &SymFunc<T>, b: &SymFunc<T>) -> SymFunc<T> {
    let mut out = SymFunc::zero(Basis::PowerSum);
    for (ra, ca) in a.terms() {
        for (rb, cb) in b.terms() {
            let mut parts = ra.parts().to_vec();
            parts.extend_from_slice(rb.parts());
            out.add_term(Partition::from_unsorted(parts), ca.clone() * cb.clone());
        }
    }
    out
}

/// Plethysm `f ∘ g`, returned in the Schur basis.
///
/// When both inputs are Schur-positive the result must have nonnegative
/// integer coefficients; anything else is reported as an error.
pub fn plethysm<T: Scalar>(f: &SymFunc<T>, g: &SymFunc<T>, degree_cap: usize) -> Result<SymFunc<T>> {
    let out_degree = f.degree() * g.degree();
    if out_degree > degree_cap {
        return Err(Error::capacity("plethysm degree", out_degree as u64, degree_cap as u64));
    }
    let fp = f.to_power_basis()?;
    let gp = g.to_power_basis()?;
    let mut cache: HashMap<usize, SymFunc<T>> = HashMap::new();
    let mut total = SymFunc::zero(Basis::PowerSum);
    for (rho, c) in fp.terms() {
        let mut acc = SymFunc::basis_element(Basis::PowerSum, Partition::empty());
        for &k in rho.parts() {
            let pk = cache.entry(k).or_insert_with(|| power_plethysm(k, &gp)).clone();
            acc = power_product(&acc, &pk);
        }
        total.add(&acc.scale(c));
    }
    let result = total.from_power_basis()?;
    let schur_positive = |h: &SymFunc<T>| h.to_schur_basis().map(|s| s.is_positive_integral()).unwrap_or(false);
    if schur_positive(f) && schur_positive(g) && !result.is_positive_integral() {
        return Err(Error::NonIntegral(format!("plethysm result {result:?}")));
    }
    Ok(result)
}

/// `s_ν ∘ s_λ` with integer coefficients.
pub fn schur_plethysm(nu: &Partition, lambda: &Partition, degree_cap: usize) -> Result<Vec<(Partition, u64)>> {
    let key = (nu.clone(), lambda.clone());
    if let Some(v) = plethysm_cache().lock().unwrap().get(&key) {
        return Ok(v.clone());
    }
    let f = SymFunc::<Rational>::schur(nu.clone());
    let g = SymFunc::<Rational>::schur(lambda.clone());
    let terms = plethysm(&f, &g, degree_cap)?.positive_integer_terms()?;
    plethysm_cache().lock().unwrap().insert(key, terms.clone());
    Ok(terms)
}

type PlethysmCache = Mutex<HashMap<(Partition, Partition), Vec<(Partition, u64)>>>;

fn plethysm_cache() -> &'static PlethysmCache {
    static CACHE: OnceLock<PlethysmCache> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Cauchy: `Sym^d(V_1 ⊗ V_2) = ⊕_{λ ⊢ d} S_λ ⊠ S_λ`.
pub fn cauchy_sym(d: usize) -> BiRep {
    BiRep::from_pairs(Partition::all_of_size(d).into_iter().map(|l| (l.clone(), l)))
}

/// Dual Cauchy: `Λ^d(V_1 ⊗ V_2) = ⊕_{λ ⊢ d} S_λ ⊠ S_{λ'}`.
pub fn cauchy_wedge(d: usize) -> BiRep {
    BiRep::from_pairs(Partition::all_of_size(d).into_iter().map(|l| {
        let c = l.conjugate();
        (l, c)
    }))
}

/// `Λ^k(S_λ ⊠ S_μ) = ⊕_{ν ⊢ k} (S_ν ∘ S_λ) ⊠ (S_{ν'} ∘ S_μ)`.
fn wedge_power_irreducible(lambda: &Partition, mu: &Partition, k: usize, cap: usize) -> Result<BiRep> {
    let mut out = BiRep::new();
    for nu in Partition::all_of_size(k) {
        let left = schur_plethysm(&nu, lambda, cap)?;
        let right = schur_plethysm(&nu.conjugate(), mu, cap)?;
        for (a, ca) in &left {
            for (b, cb) in &right {
                out.add(a.clone(), b.clone(), ca * cb);
            }
        }
    }
    Ok(out)
}

/// `Λ^k U` for a bivariate character `U`, expanding direct sums binomially.
pub fn bivariate_wedge_power(u: &BiRep, k: usize, degree_cap: usize) -> Result<BiRep> {
    // acc[j] = Λ^j of the summands processed so far
    let mut acc: Vec<BiRep> = vec![BiRep::new(); k + 1];
    acc[0] = BiRep::trivial();
    for (lambda, mu, mult) in u.iter() {
        for _ in 0..mult {
            let max_deg = lambda.size().max(mu.size());
            let mut powers = Vec::with_capacity(k + 1);
            for j in 0..=k {
                if j * max_deg > degree_cap {
                    // only a zero power may be skipped; capacity otherwise
                    return Err(Error::capacity("exterior power degree", (j * max_deg) as u64, degree_cap as u64));
                }
                powers.push(wedge_power_irreducible(lambda, mu, j, degree_cap)?);
            }
            let mut next = vec![BiRep::new(); k + 1];
            for (total, slot) in next.iter_mut().enumerate() {
                for j in 0..=total {
                    if acc[total - j].is_empty() || powers[j].is_empty() {
                        continue;
                    }
                    slot.add_all(&powers[j].tensor(&acc[total - j]));
                }
            }
            acc = next;
        }
    }
    Ok(acc.swap_remove(k))
}

//! Buchberger's algorithm with the Gebauer–Möller criteria, for lex,
//! graded reverse lex and weighted block (elimination) orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::poly::{Exponents, Poly};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum MonomialOrder {
    Lex,
    GRevLex,
    /// Blocks of variables compared one after another, each by weighted
    /// degree and then reverse lex. The first block is eliminated.
    Block { blocks: Vec<Vec<usize>>, weights: Vec<u32> },
}

impl MonomialOrder {
    /// Elimination order with `first` ≻ the remaining variables.
    pub fn elimination(nvars: usize, first: &[usize], weights: Vec<u32>) -> Self {
        let rest: Vec<usize> = (0..nvars).filter(|v| !first.contains(v)).collect();
        MonomialOrder::Block { blocks: vec![first.to_vec(), rest], weights }
    }

    fn key(&self, e: &[u16]) -> Vec<i32> {
        match self {
            MonomialOrder::Lex => e.iter().map(|&x| x as i32).collect(),
            MonomialOrder::GRevLex => {
                let mut k = Vec::with_capacity(e.len() + 1);
                k.push(e.iter().map(|&x| x as i32).sum());
                k.extend(e.iter().rev().map(|&x| -(x as i32)));
                k
            }
            MonomialOrder::Block { blocks, weights } => {
                let mut k = Vec::with_capacity(e.len() + blocks.len());
                for b in blocks {
                    k.push(b.iter().map(|&v| weights[v] as i32 * e[v] as i32).sum());
                    k.extend(b.iter().rev().map(|&v| -(e[v] as i32)));
                }
                k
            }
        }
    }

    fn weighted_degree(&self, e: &[u16]) -> u32 {
        match self {
            MonomialOrder::Block { weights, .. } => e.iter().zip(weights).map(|(&x, &w)| x as u32 * w).sum(),
            _ => e.iter().map(|&x| x as u32).sum(),
        }
    }

    pub fn cmp(&self, a: &[u16], b: &[u16]) -> Ordering {
        self.key(a).cmp(&self.key(b))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
struct Mono {
    key: Vec<i32>,
    exps: Exponents,
}

#[derive(Clone, Debug)]
struct GPoly<F: Scalar> {
    /// Terms in decreasing order; the first is the leading term.
    terms: Vec<(Mono, F)>,
    mask: u64,
}

fn mask_of(e: &[u16]) -> u64 {
    e.iter().enumerate().filter(|(_, &x)| x > 0).fold(0, |m, (i, _)| m | (1u64 << (i % 64)))
}

fn divides(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

fn lcm(a: &[u16], b: &[u16]) -> Exponents {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

fn coprime(a: &[u16], b: &[u16]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

impl<F: Scalar> GPoly<F> {
    fn lm(&self) -> &Exponents {
        &self.terms[0].0.exps
    }

    fn monic(mut self) -> Self {
        let inv = self.terms[0].1.inv();
        for t in &mut self.terms {
            t.1 = t.1.clone() * inv.clone();
        }
        self
    }
}

/// A (reduced) Gröbner basis together with its order.
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Scalar> {
    pub order: MonomialOrder,
    pub reduced: bool,
    nvars: usize,
    polys: Vec<GPoly<F>>,
}

struct Reducer<'a> {
    order: &'a MonomialOrder,
}

impl Reducer<'_> {
    fn mono(&self, exps: Exponents) -> Mono {
        Mono { key: self.order.key(&exps), exps }
    }

    fn from_poly<F: Scalar>(&self, p: &Poly<F>) -> Option<GPoly<F>> {
        let mut terms: Vec<(Mono, F)> = p.terms().map(|(e, c)| (self.mono(e.clone()), c.clone())).collect();
        if terms.is_empty() {
            return None;
        }
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        let mask = mask_of(&terms[0].0.exps);
        Some(GPoly { terms, mask })
    }

    /// Full reduction of `f` modulo the polynomials in `basis` (by index).
    fn reduce<F: Scalar>(&self, f: Vec<(Mono, F)>, basis: &[&GPoly<F>]) -> Option<GPoly<F>> {
        let mut acc: BTreeMap<Mono, F> = f.into_iter().collect();
        let mut out: Vec<(Mono, F)> = Vec::new();
        while let Some((m, c)) = acc.pop_last() {
            let em = mask_of(&m.exps);
            let div = basis.iter().find(|g| g.mask & !em == 0 && divides(g.lm(), &m.exps));
            match div {
                Some(g) => {
                    let factor = c * g.terms[0].1.inv();
                    let shift: Exponents = m.exps.iter().zip(g.lm()).map(|(a, b)| a - b).collect();
                    for (gm, gc) in &g.terms[1..] {
                        let e: Exponents = gm.exps.iter().zip(&shift).map(|(a, b)| a + b).collect();
                        let key = self.mono(e);
                        let v = -(factor.clone() * gc.clone());
                        match acc.get_mut(&key) {
                            Some(x) => {
                                *x = x.clone() + v;
                                if x.is_zero() {
                                    acc.remove(&key);
                                }
                            }
                            None => {
                                acc.insert(key, v);
                            }
                        }
                    }
                }
                None => out.push((m, c)),
            }
        }
        if out.is_empty() {
            return None;
        }
        let mask = mask_of(&out[0].0.exps);
        Some(GPoly { terms: out, mask })
    }

    fn spoly<F: Scalar>(&self, f: &GPoly<F>, g: &GPoly<F>) -> Vec<(Mono, F)> {
        let l = lcm(f.lm(), g.lm());
        let mut acc: BTreeMap<Mono, F> = BTreeMap::new();
        for (p, sign) in [(f, F::one()), (g, -F::one())] {
            let factor = sign * p.terms[0].1.inv();
            let shift: Exponents = l.iter().zip(p.lm()).map(|(a, b)| a - b).collect();
            for (m, c) in &p.terms {
                let e: Exponents = m.exps.iter().zip(&shift).map(|(a, b)| a + b).collect();
                let e = self.mono(e);
                let v = factor.clone() * c.clone();
                let x = acc.entry(e).or_insert_with(F::zero);
                *x = x.clone() + v;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponents,
    degree: u32,
    key: Vec<i32>,
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger<F: Scalar>(gens: &[Poly<F>], order: &MonomialOrder) -> GroebnerBasis<F> {
    let nvars = gens.first().map(|g| g.nvars()).unwrap_or(0);
    let red = Reducer { order };
    let mut polys: Vec<GPoly<F>> = Vec::new();
    let mut active: Vec<bool> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<GPoly<F>> = gens.iter().filter_map(|g| red.from_poly(g)).collect();
    inputs.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));

    let add = |h: GPoly<F>, polys: &mut Vec<GPoly<F>>, active: &mut Vec<bool>, pairs: &mut Vec<Pair>| {
        let hi = polys.len();
        let hlm = h.lm().clone();
        polys.push(h);
        active.push(true);
        // Gebauer–Möller update
        let cands: Vec<(usize, Exponents)> =
            (0..hi).filter(|&g| active[g]).map(|g| (g, lcm(&hlm, polys[g].lm()))).collect();
        // criterion M: drop lcms properly divisible by another new lcm
        let survivors: Vec<&(usize, Exponents)> =
            cands.iter().filter(|(_, l)| !cands.iter().any(|(_, l2)| l2 != l && divides(l2, l))).collect();
        // criterion F and the product criterion: one pair per lcm, none if
        // any pair with that lcm is coprime
        let mut by_lcm: BTreeMap<&Exponents, (usize, bool)> = BTreeMap::new();
        for (g, l) in survivors {
            let cp = coprime(&hlm, polys[*g].lm());
            let e = by_lcm.entry(l).or_insert((*g, false));
            e.1 |= cp;
        }
        let keep: Vec<(usize, Exponents)> =
            by_lcm.into_iter().filter(|(_, (_, cp))| !cp).map(|(l, (g, _))| (g, l.clone())).collect();
        pairs.retain(|p| {
            !(divides(&hlm, &p.lcm)
                && lcm(polys[p.i].lm(), &hlm) != p.lcm
                && lcm(polys[p.j].lm(), &hlm) != p.lcm)
        });
        for (g, l) in keep {
            let degree = order.weighted_degree(&l);
            let key = order.key(&l);
            pairs.push(Pair { i: g, j: hi, lcm: l, degree, key });
        }
        for g in 0..hi {
            if active[g] && divides(&hlm, polys[g].lm()) {
                active[g] = false;
            }
        }
    };

    for f in inputs {
        let basis: Vec<&GPoly<F>> = (0..polys.len()).filter(|&k| active[k]).map(|k| &polys[k]).collect();
        if let Some(h) = red.reduce(f.terms, &basis) {
            add(h.monic(), &mut polys, &mut active, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| pairs[a].degree.cmp(&pairs[b].degree).then_with(|| pairs[a].key.cmp(&pairs[b].key)))
            .expect("nonempty");
        let p = pairs.swap_remove(best);
        let s = red.spoly(&polys[p.i], &polys[p.j]);
        let basis: Vec<&GPoly<F>> = (0..polys.len()).filter(|&k| active[k]).map(|k| &polys[k]).collect();
        if let Some(h) = red.reduce(s, &basis) {
            add(h.monic(), &mut polys, &mut active, &mut pairs);
        }
    }

    // minimal, then reduced
    let mut min: Vec<GPoly<F>> = (0..polys.len()).filter(|&k| active[k]).map(|k| polys[k].clone()).collect();
    min.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    let mut reduced = Vec::with_capacity(min.len());
    for k in 0..min.len() {
        let others: Vec<&GPoly<F>> = (0..min.len()).filter(|&o| o != k).map(|o| &min[o]).collect();
        let lead = min[k].terms[0].clone();
        let tail = min[k].terms[1..].to_vec();
        let mut terms = vec![lead];
        if let Some(t) = red.reduce(tail, &others) {
            terms.extend(t.terms);
        }
        let mask = mask_of(&terms[0].0.exps);
        reduced.push(GPoly { terms, mask }.monic());
    }
    GroebnerBasis { order: order.clone(), reduced: true, nvars, polys: reduced }
}

impl<F: Scalar> GroebnerBasis<F> {
    pub fn len(&self) -> usize {
        self.polys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polys.is_empty()
    }

    pub fn polys(&self) -> Vec<Poly<F>> {
        self.polys
            .iter()
            .map(|g| {
                let mut p = Poly::zero(self.nvars);
                for (m, c) in &g.terms {
                    p.add_term(m.exps.clone(), c.clone());
                }
                p
            })
            .collect()
    }

    pub fn leading_monomials(&self) -> Vec<Exponents> {
        self.polys.iter().map(|g| g.lm().clone()).collect()
    }

    pub fn normal_form(&self, f: &Poly<F>) -> Poly<F> {
        let red = Reducer { order: &self.order };
        let Some(g) = red.from_poly(f) else { return Poly::zero(self.nvars) };
        let basis: Vec<&GPoly<F>> = self.polys.iter().collect();
        let mut p = Poly::zero(self.nvars);
        if let Some(r) = red.reduce(g.terms, &basis) {
            for (m, c) in r.terms {
                p.add_term(m.exps, c);
            }
        }
        p
    }

    pub fn contains(&self, f: &Poly<F>) -> bool {
        self.normal_form(f).is_zero()
    }

    /// Basis elements not involving any variable in `vars`.
    pub fn eliminate(&self, vars: &[usize]) -> Vec<Poly<F>> {
        self.polys().into_iter().filter(|p| p.terms().all(|(e, _)| vars.iter().all(|&v| e[v] == 0))).collect()
    }

    /// Whether every S-polynomial of the basis reduces to zero.
    pub fn is_groebner(&self) -> bool {
        let red = Reducer { order: &self.order };
        let basis: Vec<&GPoly<F>> = self.polys.iter().collect();
        for i in 0..self.polys.len() {
            for j in i + 1..self.polys.len() {
                if coprime(self.polys[i].lm(), self.polys[j].lm()) {
                    continue;
                }
                let s = red.spoly(&self.polys[i], &self.polys[j]);
                if red.reduce(s, &basis).is_some() {
                    return false;
                }
            }
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::MatrixRingContext;
    use crate::scalar::Rational;

    type P = Poly<Rational>;

    fn ctx(m: usize, n: usize) -> MatrixRingContext {
        MatrixRingContext::new(m, n).unwrap()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        // x = x[1,1], y = x[1,2]
        let c = ctx(1, 2);
        let gens = vec![P::parse(&c, "x[1,1]^2").unwrap(), P::parse(&c, "x[1,1]*x[1,2]").unwrap()];
        let gb = buchberger(&gens, &MonomialOrder::Lex);
        assert_eq!(gb.len(), 2);
        assert!(gb.is_groebner());
    }

    #[test]
    fn principal_ideal() {
        let c = ctx(2, 2);
        let det = P::parse(&c, "x[1,1]*x[2,2] - x[1,2]*x[2,1]").unwrap();
        let gb = buchberger(std::slice::from_ref(&det), &MonomialOrder::GRevLex);
        assert_eq!(gb.len(), 1);
        assert!(gb.contains(&(&det * &c.xvar(0, 0))));
        assert!(!gb.contains(&c.xvar(0, 0)));
    }

    #[test]
    fn twisted_cubic() {
        // 2×3 minors of [[a,b,c],[b,c,d]] in variables x[1,1..4]
        let c = ctx(1, 4);
        let gens: Vec<P> = ["x[1,1]*x[1,3] - x[1,2]^2", "x[1,1]*x[1,4] - x[1,2]*x[1,3]", "x[1,2]*x[1,4] - x[1,3]^2"]
            .iter()
            .map(|t| P::parse(&c, t).unwrap())
            .collect();
        for order in [MonomialOrder::GRevLex, MonomialOrder::Lex] {
            let gb = buchberger(&gens, &order);
            assert!(gb.is_groebner());
            for g in &gens {
                assert!(gb.contains(g));
            }
        }
    }

    #[test]
    fn elimination_recovers_implicit_equation() {
        // x = s^2, y = s*t, z = t^2 with variables (x, y, z, s, t)
        let c = ctx(1, 5);
        let gens: Vec<P> = ["x[1,1] - x[1,4]^2", "x[1,2] - x[1,4]*x[1,5]", "x[1,3] - x[1,5]^2"]
            .iter()
            .map(|t| P::parse(&c, t).unwrap())
            .collect();
        let order = MonomialOrder::elimination(5, &[3, 4], vec![2, 2, 2, 1, 1]);
        let gb = buchberger(&gens, &order);
        let elim = gb.eliminate(&[3, 4]);
        assert_eq!(elim.len(), 1);
        assert_eq!(elim[0], P::parse(&c, "x[1,2]^2 - x[1,1]*x[1,3]").unwrap());
    }
}

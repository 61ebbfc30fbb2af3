//! Polynomials in the entries of a generic `m × n` matrix, optionally with
//! auxiliary variable blocks, and the named quadrics and highest weight
//! vectors built from them.

use std::collections::BTreeMap;
use std::fmt::{self, Write as _};
use std::ops::{Add, Mul, Neg, Sub};


use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partition::Partition;
use crate::scalar::{Rational, Scalar};

/// Exponent vector over the variables of a ring context.
pub type Exponents = Vec<u16>;

/// A named block of extra variables, rendered as `name[k]` (1-based).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxBlock {
    pub name: String,
    pub len: usize,
}

/// Variables `x[1,1], …, x[m,n]` in row-major order followed by the
/// auxiliary blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixRingContext {
    pub m: usize,
    pub n: usize,
    pub aux: Vec<AuxBlock>,
}

impl MatrixRingContext {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::Precondition(format!("matrix size {m}×{n}")));
        }
        Ok(MatrixRingContext { m, n, aux: Vec::new() })
    }

    pub fn with_aux(mut self, name: &str, len: usize) -> Self {
        self.aux.push(AuxBlock { name: name.to_string(), len });
        self
    }

    pub fn n_x(&self) -> usize {
        self.m * self.n
    }

    pub fn nvars(&self) -> usize {
        self.n_x() + self.aux.iter().map(|b| b.len).sum::<usize>()
    }

    /// Index of `x[i,j]`, 0-based arguments.
    pub fn x(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.m && j < self.n);
        i * self.n + j
    }

    /// Index of the `k`-th variable (0-based) of auxiliary block `block`.
    pub fn aux_var(&self, block: usize, k: usize) -> usize {
        self.n_x() + self.aux[..block].iter().map(|b| b.len).sum::<usize>() + k
    }

    pub fn var_name(&self, v: usize) -> String {
        if v < self.n_x() {
            return format!("x[{},{}]", v / self.n + 1, v % self.n + 1);
        }
        let mut k = v - self.n_x();
        for b in &self.aux {
            if k < b.len {
                return format!("{}[{}]", b.name, k + 1);
            }
            k -= b.len;
        }
        panic!("variable {v} out of range")
    }

    fn parse_var(&self, s: &str) -> Option<usize> {
        let (name, rest) = s.split_once('[')?;
        let inner = rest.strip_suffix(']')?;
        if name == "x" {
            let (i, j) = inner.split_once(',')?;
            let (i, j): (usize, usize) = (i.trim().parse().ok()?, j.trim().parse().ok()?);
            if (1..=self.m).contains(&i) && (1..=self.n).contains(&j) {
                return Some(self.x(i - 1, j - 1));
            }
            return None;
        }
        let k: usize = inner.trim().parse().ok()?;
        let block = self.aux.iter().position(|b| b.name == name)?;
        (1..=self.aux[block].len).contains(&k).then(|| self.aux_var(block, k - 1))
    }

    pub fn var<F: Scalar>(&self, v: usize) -> Poly<F> {
        Poly::var(self.nvars(), v)
    }

    pub fn xvar<F: Scalar>(&self, i: usize, j: usize) -> Poly<F> {
        self.var(self.x(i, j))
    }
}

/// A polynomial with coefficients in `F`, stored as a map from exponent
/// vectors (compared lexicographically) to nonzero coefficients.
#[derive(Clone, PartialEq)]
pub struct Poly<F: Scalar = Rational> {
    nvars: usize,
    terms: BTreeMap<Exponents, F>,
}

impl<F: Scalar> Poly<F> {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: F) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(vec![0; nvars], c);
        p
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, F::one())
    }

    pub fn var(nvars: usize, v: usize) -> Self {
        let mut e = vec![0; nvars];
        e[v] = 1;
        Self::monomial(e, F::one())
    }

    pub fn monomial(exps: Exponents, c: F) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, c);
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Exponents, &F)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &Exponents) -> F {
        self.terms.get(e).cloned().unwrap_or_else(F::zero)
    }

    pub fn add_term(&mut self, e: Exponents, c: F) {
        debug_assert_eq!(e.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = v.clone() + c;
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().map(|&x| x as usize).sum::<usize>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v.clone() * c.clone());
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.nvars);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Reinterpret coefficients in another field; `None` if some
    /// denominator is not invertible there.
    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> Option<G>) -> Option<Poly<G>> {
        let mut out = Poly::zero(self.nvars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), f(c)?);
        }
        Some(out)
    }

    /// Text form `c*x[i,j]^e*…` with terms joined by ` + ` and ` - `.
    pub fn to_text(&self, ctx: &MatrixRingContext) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            let text = c.to_string();
            let (neg, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            s.push_str(&mag);
            for (v, &x) in e.iter().enumerate() {
                if x == 1 {
                    let _ = write!(s, "*{}", ctx.var_name(v));
                } else if x > 1 {
                    let _ = write!(s, "*{}^{x}", ctx.var_name(v));
                }
            }
        }
        s
    }
}

impl Poly<Rational> {
    /// Parse the text form produced by [`Poly::to_text`].
    pub fn parse(ctx: &MatrixRingContext, text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Precondition(format!("cannot parse polynomial `{text}`: {why}"));
        let nv = ctx.nvars();
        let mut out = Poly::zero(nv);
        let t = text.trim();
        if t == "0" {
            return Ok(out);
        }
        // split on top-level + and - separators
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        let mut depth = 0;
        for ch in t.chars() {
            match ch {
                '[' => {
                    depth += 1;
                    cur.push(ch);
                }
                ']' => {
                    depth -= 1;
                    cur.push(ch);
                }
                '+' | '-' if depth == 0 && !cur.trim().is_empty() && !cur.trim_end().ends_with('/') => {
                    pieces.push((neg, std::mem::take(&mut cur)));
                    neg = ch == '-';
                }
                '-' if depth == 0 && cur.trim().is_empty() => neg = !neg,
                _ => cur.push(ch),
            }
        }
        pieces.push((neg, cur));
        for (neg, piece) in pieces {
            let mut factors: Vec<&str> = piece.trim().split('*').collect();
            if factors[0].trim().is_empty() {
                return Err(bad("empty term"));
            }
            // the coefficient may be omitted
            let mut c = match factors[0].trim().parse::<Rational>() {
                Ok(c) => {
                    factors.remove(0);
                    c
                }
                Err(_) if factors[0].contains('[') => Rational::from_i64(1),
                Err(_) => return Err(bad("coefficient")),
            };
            if neg {
                c = -c;
            }
            let mut e = vec![0u16; nv];
            for f in factors {
                let (v, pow) = match f.split_once('^') {
                    Some((v, p)) => (v.trim(), p.trim().parse::<u16>().map_err(|_| bad("exponent"))?),
                    None => (f.trim(), 1),
                };
                let idx = ctx.parse_var(v).ok_or_else(|| bad("variable"))?;
                e[idx] += pow;
            }
            out.add_term(e, c);
        }
        Ok(out)
    }
}

impl<F: Scalar> fmt::Debug for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

impl<F: Scalar> Add for &Poly<F> {
    type Output = Poly<F>;
    fn add(self, rhs: &Poly<F>) -> Poly<F> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl<F: Scalar> Sub for &Poly<F> {
    type Output = Poly<F>;
    fn sub(self, rhs: &Poly<F>) -> Poly<F> {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), -c.clone());
        }
        out
    }
}

impl<F: Scalar> Neg for &Poly<F> {
    type Output = Poly<F>;
    fn neg(self) -> Poly<F> {
        self.scale(&-F::one())
    }
}

impl<F: Scalar> Mul for &Poly<F> {
    type Output = Poly<F>;
    fn mul(self, rhs: &Poly<F>) -> Poly<F> {
        let mut out = Poly::zero(self.nvars);
        for (a, ca) in &self.terms {
            for (b, cb) in &rhs.terms {
                let e: Exponents = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, ca.clone() * cb.clone());
            }
        }
        out
    }
}

/// The `binomial(m,2)·binomial(n,2)` minors `x[i1,j1]x[i2,j2] - x[i1,j2]x[i2,j1]`,
/// `i1 < i2`, `j1 < j2`, in lexicographic order of `(i1, i2, j1, j2)`.
pub fn minors_basis<F: Scalar>(ctx: &MatrixRingContext) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    for i1 in 0..ctx.m {
        for i2 in i1 + 1..ctx.m {
            for j1 in 0..ctx.n {
                for j2 in j1 + 1..ctx.n {
                    let a = &ctx.xvar::<F>(i1, j1) * &ctx.xvar(i2, j2);
                    let b = &ctx.xvar::<F>(i1, j2) * &ctx.xvar(i2, j1);
                    out.push(&a - &b);
                }
            }
        }
    }
    out
}

/// The generalized permanents `x[i1,j1]x[i2,j2] + x[i1,j2]x[i2,j1]` for
/// `i1 ≤ i2`, `j1 ≤ j2`, taken verbatim from the formula: a repeated row
/// or column index doubles the monomial (`2x[i,j]^2`, `2x[i,j1]x[i,j2]`).
pub fn permanents_basis<F: Scalar>(ctx: &MatrixRingContext) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    for i1 in 0..ctx.m {
        for i2 in i1..ctx.m {
            for j1 in 0..ctx.n {
                for j2 in j1..ctx.n {
                    let a = &ctx.xvar::<F>(i1, j1) * &ctx.xvar(i2, j2);
                    let b = &ctx.xvar::<F>(i1, j2) * &ctx.xvar(i2, j1);
                    out.push(&a + &b);
                }
            }
        }
    }
    out
}

/// Index pairs `((i1,i2),(j1,j2))` matching [`minors_basis`] or
/// [`permanents_basis`] order.
pub fn quadric_labels(ctx: &MatrixRingContext, strict: bool) -> Vec<((usize, usize), (usize, usize))> {
    let off = usize::from(strict);
    let mut out = Vec::new();
    for i1 in 0..ctx.m {
        for i2 in i1 + off..ctx.m {
            for j1 in 0..ctx.n {
                for j2 in j1 + off..ctx.n {
                    out.push(((i1, i2), (j1, j2)));
                }
            }
        }
    }
    out
}

/// Principal `r × r` minor of the upper-left corner; zero when
/// `r > min(m, n)`.
pub fn det_principal<F: Scalar>(ctx: &MatrixRingContext, r: usize) -> Poly<F> {
    let nv = ctx.nvars();
    if r > ctx.m.min(ctx.n) {
        return Poly::zero(nv);
    }
    let mut out = Poly::zero(nv);
    let mut perm: Vec<usize> = (0..r).collect();
    loop {
        let mut e = vec![0u16; nv];
        for (i, &j) in perm.iter().enumerate() {
            e[ctx.x(i, j)] += 1;
        }
        let inversions = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
        out.add_term(e, if inversions % 2 == 0 { F::one() } else { -F::one() });
        if !next_permutation(&mut perm) {
            break;
        }
    }
    out
}

fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let mut i = p.len() - 1;
    while i > 0 && p[i - 1] >= p[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = p.len() - 1;
    while p[j] <= p[i - 1] {
        j -= 1;
    }
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// The highest weight vector `det_λ = ∏_{i ≤ λ_1} det_{λ'_i}`.
pub fn det_lambda<F: Scalar>(ctx: &MatrixRingContext, lambda: &Partition) -> Poly<F> {
    let mut acc = Poly::one(ctx.nvars());
    for &c in lambda.conjugate().parts() {
        acc = &acc * &det_principal(ctx, c);
        if acc.is_zero() {
            break;
        }
    }
    acc
}

/// Dimension of the span of homogeneous polynomials of degree `d`, with
/// ranks taken over `G`.
pub fn span_dimension<G: Scalar>(polys: &[Poly<Rational>], d: usize) -> Result<usize> {
    let mapped: Option<Vec<Poly<G>>> = polys.iter().map(|p| p.map_coeffs(G::from_rational)).collect();
    let mapped = mapped.ok_or_else(|| Error::Precondition("denominator vanishes modulo p".into()))?;
    let mut columns: BTreeMap<Exponents, usize> = BTreeMap::new();
    let mut ech = Echelon::<G>::new();
    for p in &mapped {
        if p.is_zero() {
            continue;
        }
        let deg = p.degree().unwrap_or(0);
        if !p.is_homogeneous() || deg != d {
            return Err(Error::MixedDegrees { expected: d, found: deg });
        }
        let mut row = Vec::with_capacity(p.len());
        for (e, c) in p.terms() {
            let next = columns.len();
            let col = *columns.entry(e.clone()).or_insert(next);
            row.push((col, c.clone()));
        }
        row.sort_by_key(|(c, _)| *c);
        ech.insert(row);
    }
    Ok(ech.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    type P = Poly<Rational>;

    fn ctx(m: usize, n: usize) -> MatrixRingContext {
        MatrixRingContext::new(m, n).unwrap()
    }

    #[test]
    fn single_minor() {
        let c = ctx(2, 2);
        let ms = minors_basis::<Rational>(&c);
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].to_text(&c), "1*x[1,1]*x[2,2] - 1*x[1,2]*x[2,1]");
    }

    #[test]
    fn permanents_2x2_span_the_listed_quadrics() {
        let c = ctx(2, 2);
        let perms = permanents_basis::<Rational>(&c);
        assert_eq!(perms.len(), 9);
        assert!(perms.iter().any(|p| p.to_text(&c) == "1*x[1,1]*x[2,2] + 1*x[1,2]*x[2,1]"));
        assert_eq!(perms.last().unwrap().to_text(&c), "2*x[2,2]^2");
        let listed = [
            "1*x[1,1]^2",
            "1*x[1,2]^2",
            "1*x[2,1]^2",
            "1*x[2,2]^2",
            "1*x[1,1]*x[1,2]",
            "1*x[1,1]*x[2,1]",
            "1*x[1,2]*x[2,2]",
            "1*x[2,1]*x[2,2]",
            "1*x[1,1]*x[2,2] + 1*x[1,2]*x[2,1]",
        ];
        let listed: Vec<P> = listed.iter().map(|t| P::parse(&c, t).unwrap()).collect();
        assert_eq!(span_dimension::<Rational>(&perms, 2).unwrap(), 9);
        let mut both = perms.clone();
        both.extend(listed);
        assert_eq!(span_dimension::<Rational>(&both, 2).unwrap(), 9);
    }

    #[test]
    fn three_by_three_minors_have_distinct_leads() {
        let ms = minors_basis::<Rational>(&ctx(3, 3));
        assert_eq!(ms.len(), 9);
        let mut leads: Vec<_> = ms.iter().map(|p| p.terms().next_back().unwrap().0.clone()).collect();
        leads.sort();
        leads.dedup();
        assert_eq!(leads.len(), 9);
    }

    #[test]
    fn det_lambda_examples() {
        let c = ctx(2, 2);
        assert_eq!(det_lambda::<Rational>(&c, &part![1]), c.xvar(0, 0));
        let m = minors_basis::<Rational>(&c).remove(0);
        assert_eq!(det_lambda::<Rational>(&c, &part![2, 2]), m.pow(2));
        assert!(det_lambda::<Rational>(&ctx(2, 4), &part![1, 1, 1]).is_zero());
        assert_eq!(det_lambda::<Rational>(&ctx(3, 3), &part![2, 1, 1]).degree(), Some(4));
    }

    #[test]
    fn span_checks() {
        let c = ctx(2, 2);
        let x = c.xvar::<Rational>(0, 0);
        let two_x = x.scale(&Rational::from_i64(2));
        assert_eq!(span_dimension::<Rational>(&[x.clone(), two_x], 1).unwrap(), 1);
        let x2 = &x * &x;
        assert!(matches!(span_dimension::<Rational>(&[x, x2], 1), Err(Error::MixedDegrees { .. })));
    }

    #[test]
    fn products_of_minors_degree_two() {
        let c = ctx(3, 3);
        let ms = minors_basis::<Rational>(&c);
        let mut prods = Vec::new();
        for i in 0..ms.len() {
            for j in i..ms.len() {
                prods.push(&ms[i] * &ms[j]);
            }
        }
        assert_eq!(span_dimension::<Rational>(&prods, 4).unwrap(), 45);
    }

    #[test]
    fn text_round_trip() {
        let c = ctx(2, 3).with_aux("T", 3);
        let p = P::parse(&c, "3/2*x[1,1]^2*T[2] - 1*x[2,3] + 5").unwrap();
        assert_eq!(P::parse(&c, &p.to_text(&c)).unwrap(), p);
    }
}

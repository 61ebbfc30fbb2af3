//! Kernels of multigraded, torus-equivariant algebra maps
//! `C[g_1, …, g_N] → S`, computed one weight space at a time.
//!
//! Every generator carries a multidegree ("class") and a torus weight, and
//! its image is an integer polynomial of that weight. All maps handled here
//! are also invariant under permuting rows and columns, so only dominant
//! weight blocks are ever needed for dimensions; other blocks are built
//! lazily when multiplying lower-degree kernels up.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::birep::BiRep;
use crate::error::{Error, Result};
use crate::linalg::{Echelon, RankStats, SparseVec};
use crate::poly::{Exponents, Poly};
use crate::scalar::{Rational, Scalar};
use crate::weights::{dominant_weights, orbit_size, peel_character, Weight};

/// Integer polynomial, terms sorted by exponent vector.
pub type IPoly = Vec<(Exponents, i64)>;

pub fn ipoly_from(p: &Poly<Rational>) -> Result<IPoly> {
    p.terms()
        .map(|(e, c)| {
            Scalar::to_integer(c)
                .map(|c| (e.clone(), c))
                .ok_or_else(|| Error::Precondition(format!("non-integral coefficient {c}")))
        })
        .collect()
}

pub fn ipoly_mul(a: &IPoly, b: &IPoly) -> IPoly {
    let mut acc: BTreeMap<Exponents, i64> = BTreeMap::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *acc.entry(e).or_insert(0) += ca * cb;
        }
    }
    acc.into_iter().filter(|(_, c)| *c != 0).collect()
}

pub fn ipoly_one(nvars: usize) -> IPoly {
    vec![(vec![0; nvars], 1)]
}

#[derive(Clone, Debug)]
pub struct Generator {
    pub class: Vec<u16>,
    pub weight: Weight,
    pub image: IPoly,
}

/// Generators and their images. `m` splits weights into the two sides.
#[derive(Clone, Debug)]
pub struct AlgebraMap {
    pub m: usize,
    pub n: usize,
    pub target_vars: usize,
    pub gens: Vec<Generator>,
}

impl AlgebraMap {
    /// Nondecreasing generator index sequences of the given class and weight.
    pub fn sources(&self, class: &[u16], weight: &[u16]) -> Vec<Vec<u16>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut cls = class.to_vec();
        let mut w = weight.to_vec();
        self.sources_rec(0, &mut cls, &mut w, &mut cur, &mut out);
        out
    }

    fn sources_rec(&self, start: usize, cls: &mut [u16], w: &mut [u16], cur: &mut Vec<u16>, out: &mut Vec<Vec<u16>>) {
        if cls.iter().all(|&c| c == 0) {
            if w.iter().all(|&x| x == 0) {
                out.push(cur.clone());
            }
            return;
        }
        for g in start..self.gens.len() {
            let gen = &self.gens[g];
            if gen.class.iter().zip(cls.iter()).any(|(a, b)| a > b) || gen.weight.iter().zip(w.iter()).any(|(a, b)| a > b) {
                continue;
            }
            for (c, a) in cls.iter_mut().zip(&gen.class) {
                *c -= a;
            }
            for (x, a) in w.iter_mut().zip(&gen.weight) {
                *x -= a;
            }
            cur.push(g as u16);
            self.sources_rec(g, cls, w, cur, out);
            cur.pop();
            for (c, a) in cls.iter_mut().zip(&gen.class) {
                *c += a;
            }
            for (x, a) in w.iter_mut().zip(&gen.weight) {
                *x += a;
            }
        }
    }

    pub fn image(&self, source: &[u16]) -> IPoly {
        let mut acc = ipoly_one(self.target_vars);
        for &g in source {
            acc = ipoly_mul(&acc, &self.gens[g as usize].image);
        }
        acc
    }
}

struct Block<F: Scalar> {
    sources: Vec<Vec<u16>>,
    index: HashMap<Vec<u16>, usize>,
    kernel: Vec<SparseVec<F>>,
}

/// Classes whose images span the subspace a block is taken modulo.
pub type QuotientClasses<'a> = Box<dyn Fn(&[u16]) -> Vec<Vec<u16>> + 'a>;

/// Lazily computed kernel blocks of one [`AlgebraMap`] over the field `F`.
///
/// Optionally each block is a kernel modulo the span of the images of
/// other classes, and only some generators act when forming products.
pub struct KernelEngine<'a, F: Scalar> {
    map: &'a AlgebraMap,
    blocks: HashMap<(Vec<u16>, Weight), Rc<Block<F>>>,
    pub stats: RankStats,
    cap: usize,
    acting: Option<Vec<bool>>,
    quotient: Option<QuotientClasses<'a>>,
}

impl<'a, F: Scalar> KernelEngine<'a, F> {
    pub fn new(map: &'a AlgebraMap, cap: usize) -> Self {
        KernelEngine { map, blocks: HashMap::new(), stats: RankStats::default(), cap, acting: None, quotient: None }
    }

    /// Restrict the generators that multiply lower kernels.
    pub fn with_acting(mut self, acting: Vec<bool>) -> Self {
        self.acting = Some(acting);
        self
    }

    pub fn with_quotient(mut self, quotient: QuotientClasses<'a>) -> Self {
        self.quotient = Some(quotient);
        self
    }

    fn row(&self, source: &[u16], cols: &mut HashMap<Exponents, usize>) -> SparseVec<F> {
        let mut row: SparseVec<F> = self
            .map
            .image(source)
            .into_iter()
            .map(|(e, c)| {
                let k = cols.len();
                (*cols.entry(e).or_insert(k), F::from_i64(c))
            })
            .collect();
        row.sort_by_key(|(c, _)| *c);
        row
    }

    fn block(&mut self, class: &[u16], weight: &[u16]) -> Result<Rc<Block<F>>> {
        let key = (class.to_vec(), weight.to_vec());
        if let Some(b) = self.blocks.get(&key) {
            return Ok(b.clone());
        }
        let sources = self.map.sources(class, weight);
        let mut cols: HashMap<Exponents, usize> = HashMap::new();
        let mut ech = Echelon::<F>::new();
        let mut kernel = Vec::new();
        if let Some(q) = &self.quotient {
            for qc in q(class) {
                for s in self.map.sources(&qc, weight) {
                    let row = self.row(&s, &mut cols);
                    ech.insert(row);
                }
            }
        }
        for (id, s) in sources.iter().enumerate() {
            let row = self.row(s, &mut cols);
            if let Some(k) = ech.insert_tracked(row, id) {
                kernel.push(k);
            }
            if ech.nonzeros() > self.cap {
                return Err(Error::capacity("kernel block nonzeros", ech.nonzeros() as u64, self.cap as u64));
            }
        }
        self.stats.record(&ech);
        let index = sources.iter().cloned().enumerate().map(|(i, s)| (s, i)).collect();
        let b = Rc::new(Block { sources, index, kernel });
        self.blocks.insert(key, b.clone());
        Ok(b)
    }

    pub fn kernel_dim(&mut self, class: &[u16], weight: &[u16]) -> Result<usize> {
        Ok(self.block(class, weight)?.kernel.len())
    }

    /// `(kernel, minimal)` at one weight: minimal is the kernel modulo the
    /// products of generators with lower kernel elements.
    pub fn minimal_dim(&mut self, class: &[u16], weight: &[u16]) -> Result<(usize, usize)> {
        let top = self.block(class, weight)?;
        if top.kernel.is_empty() {
            return Ok((0, 0));
        }
        let mut ech = Echelon::<F>::new();
        for g in 0..self.map.gens.len() {
            let gen = &self.map.gens[g];
            if self.acting.as_ref().is_some_and(|a| !a[g]) {
                continue;
            }
            if gen.class.iter().zip(class).any(|(a, b)| a > b) || gen.weight.iter().zip(weight).any(|(a, b)| a > b) {
                continue;
            }
            let c: Vec<u16> = class.iter().zip(&gen.class).map(|(a, b)| a - b).collect();
            if c.iter().all(|&x| x == 0) {
                continue;
            }
            let w: Vec<u16> = weight.iter().zip(&gen.weight).map(|(a, b)| a - b).collect();
            let lower = self.block(&c, &w)?;
            if lower.kernel.is_empty() {
                continue;
            }
            for k in &lower.kernel {
                let mut row: SparseVec<F> = k
                    .iter()
                    .map(|(i, x)| {
                        let mut s = lower.sources[*i].clone();
                        let pos = s.partition_point(|&h| h <= g as u16);
                        s.insert(pos, g as u16);
                        (top.index[&s], x.clone())
                    })
                    .collect();
                row.sort_by_key(|(c, _)| *c);
                ech.insert(row);
                if ech.rank() == top.kernel.len() {
                    break;
                }
            }
            if ech.rank() == top.kernel.len() {
                break;
            }
        }
        self.stats.record(&ech);
        Ok((top.kernel.len(), top.kernel.len() - ech.rank()))
    }
}

/// Kernel and minimal-generator data of one multidegree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedPiece {
    pub kernel: u64,
    pub minimal: u64,
    pub minimal_character: BiRep,
}

/// Sum the dominant blocks of one class whose weights have side sums
/// `(a, b)`, weighting by orbit size.
pub fn graded_piece<F: Scalar>(engine: &mut KernelEngine<'_, F>, class: &[u16], a: usize, b: usize) -> Result<GradedPiece> {
    let (m, n) = (engine.map.m, engine.map.n);
    let mut kernel = 0u64;
    let mut minimal = 0u64;
    let mut dims = BTreeMap::new();
    for w in dominant_weights(m, n, a, b) {
        let (k, mi) = engine.minimal_dim(class, &w)?;
        let o = orbit_size(&w, m);
        kernel += k as u64 * o;
        minimal += mi as u64 * o;
        if mi > 0 {
            dims.insert(w, mi as u64);
        }
    }
    Ok(GradedPiece { kernel, minimal, minimal_character: peel_character(m, &dims)? })
}

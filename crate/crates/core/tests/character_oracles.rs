//! Character computations checked against brute-force polynomial oracles.

use std::collections::BTreeMap;

use minorel_core::bott::weyl_dimension;
use minorel_core::partition::{dim_schur, kostka};
use minorel_core::symfunc::{bivariate_wedge_power, lr_coefficients, schur_plethysm};
use minorel_core::{part, BiRep, Partition};
use num_bigint::BigInt;

type Mono = Vec<usize>;

/// All semistandard tableaux of shape `lambda` with entries `< n`, as content vectors.
fn ssyt_contents(lambda: &Partition, n: usize) -> Vec<Mono> {
    let cells: Vec<(usize, usize)> = lambda.boxes().collect();
    let mut fill: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut out = Vec::new();
    fn go(k: usize, cells: &[(usize, usize)], n: usize, fill: &mut BTreeMap<(usize, usize), usize>, out: &mut Vec<Mono>) {
        if k == cells.len() {
            let mut c = vec![0; n];
            for v in fill.values() {
                c[*v] += 1;
            }
            out.push(c);
            return;
        }
        let (i, j) = cells[k];
        let lo_left = if j > 0 { fill[&(i, j - 1)] } else { 0 };
        let lo_up = if i > 0 { fill[&(i - 1, j)] + 1 } else { 0 };
        for v in lo_left.max(lo_up)..n {
            fill.insert((i, j), v);
            go(k + 1, cells, n, fill, out);
        }
        fill.remove(&(i, j));
    }
    go(0, &cells, n, &mut fill, &mut out);
    out
}

fn schur_poly(lambda: &Partition, n: usize) -> BTreeMap<Mono, i64> {
    let mut p = BTreeMap::new();
    for c in ssyt_contents(lambda, n) {
        *p.entry(c).or_insert(0) += 1;
    }
    p
}

fn mul(a: &BTreeMap<Mono, i64>, b: &BTreeMap<Mono, i64>) -> BTreeMap<Mono, i64> {
    let mut out = BTreeMap::new();
    for (x, cx) in a {
        for (y, cy) in b {
            let z: Mono = x.iter().zip(y).map(|(s, t)| s + t).collect();
            *out.entry(z).or_insert(0) += cx * cy;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Decompose a symmetric polynomial into Schur polynomials by repeatedly
/// removing the lex-leading monomial.
fn schur_decompose(mut f: BTreeMap<Mono, i64>, n: usize) -> BTreeMap<Partition, u64> {
    let mut out = BTreeMap::new();
    while let Some((lead, &c)) = f.iter().next_back() {
        let lambda = Partition::from_unsorted(lead.clone());
        assert!(c > 0, "negative Schur coefficient for {lambda}");
        out.insert(lambda.clone(), c as u64);
        for (m, d) in schur_poly(&lambda, n) {
            let e = f.entry(m).or_insert(0);
            *e -= c * d;
        }
        f.retain(|_, v| *v != 0);
    }
    out
}

#[test]
fn dim_schur_counts_tableaux() {
    for size in 0..=6 {
        for lambda in Partition::all_of_size(size) {
            for n in 1..=4 {
                assert_eq!(dim_schur(&lambda, n), ssyt_contents(&lambda, n).len() as u64, "{lambda} n={n}");
            }
        }
    }
}

#[test]
fn kostka_counts_tableaux_by_content() {
    for lambda in Partition::all_of_size(5) {
        let by_content = schur_poly(&lambda, 3);
        for (content, c) in by_content {
            assert_eq!(kostka(&lambda, &content), c as u64, "{lambda} {content:?}");
        }
    }
}

#[test]
fn weyl_formula_matches_tableau_count() {
    for size in 0..=6 {
        for lambda in Partition::all_of_size_with_len(size, 4) {
            let mut w: Vec<i64> = lambda.parts().iter().map(|&p| p as i64).collect();
            w.resize(4, 0);
            assert_eq!(weyl_dimension(&w), BigInt::from(ssyt_contents(&lambda, 4).len()));
        }
    }
}

#[test]
fn littlewood_richardson_against_polynomial_products() {
    for s in 1..=6 {
        for a in 0..=s {
            for lambda in Partition::all_of_size(a) {
                for mu in Partition::all_of_size(s - a) {
                    let prod = mul(&schur_poly(&lambda, s), &schur_poly(&mu, s));
                    assert_eq!(lr_coefficients(&lambda, &mu), schur_decompose(prod, s), "{lambda} * {mu}");
                }
            }
        }
    }
}

#[test]
fn plethysm_dimensions() {
    // dim (S_ν ∘ S_λ)(C^n) = dim S_ν(S_λ C^n)
    for (nu, lambda) in [
        (part![2], part![2]),
        (part![1, 1], part![2]),
        (part![3], part![2]),
        (part![2, 1], part![2]),
        (part![1, 1, 1], part![2]),
        (part![2], part![1, 1]),
        (part![2], part![2, 1]),
        (part![2, 2], part![2]),
        (part![4], part![2]),
        (part![2], part![3]),
    ] {
        let terms = schur_plethysm(&nu, &lambda, 16).unwrap();
        for n in 1..=4 {
            let inner = dim_schur(&lambda, n) as usize;
            let lhs: u64 = terms.iter().map(|(k, c)| c * dim_schur(k, n)).sum();
            assert_eq!(lhs, dim_schur(&nu, inner), "s_{nu} ∘ s_{lambda} at n={n}");
        }
    }
    assert_eq!(
        schur_plethysm(&part![2], &part![2], 16).unwrap(),
        vec![(part![2, 2], 1), (part![4], 1)]
    );
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn wedge_powers_have_binomial_dimension() {
    let w = BiRep::single(part![1, 1], part![1, 1]);
    let y = BiRep::single(part![1], part![2]);
    for (rep, label) in [(w, "W"), (y, "V1⊗Sym²V2")] {
        for k in 0..=4 {
            let wedge = bivariate_wedge_power(&rep, k, 16).unwrap();
            for (m, n) in [(2, 2), (2, 3), (3, 3), (3, 4)] {
                assert_eq!(wedge.dim_at(m, n), binom(rep.dim_at(m, n), k as u64), "Λ^{k} {label} at ({m},{n})");
            }
        }
    }
}

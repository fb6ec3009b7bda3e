//! Brute-force Weyl character formula for rank at most 2.

#![allow(dead_code)]

pub mod props;

use std::collections::{BTreeMap, HashSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use weylchar::charlib::CharacterCache;
use weylchar::repth::tensor_decompose;
use weylchar::{Algebra, Weight, ZPolynomial};

pub type Laurent = BTreeMap<Vec<i64>, i64>;

pub struct Oracle {
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Vec<i64>>,
    /// Strictly positive on every positive root.
    height: Vec<i64>,
    /// `(reflection word, sign)` for every Weyl group element.
    pub group: Vec<(Vec<usize>, i64)>,
}

impl Oracle {
    fn new(cartan: Vec<Vec<i64>>, positive_roots: Vec<Vec<i64>>, height: Vec<i64>) -> Self {
        let n = cartan.len();
        let mut o = Oracle {
            cartan,
            positive_roots,
            height,
            group: Vec::new(),
        };
        // Breadth-first over words; rho is regular, so w rho identifies w.
        let rho = vec![1; n];
        let mut seen = HashSet::from([rho.clone()]);
        let mut frontier = vec![Vec::<usize>::new()];
        o.group.push((Vec::new(), 1));
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for word in frontier {
                for i in 0..n {
                    let mut w = word.clone();
                    w.push(i);
                    if seen.insert(o.act(&w, &rho)) {
                        o.group.push((w.clone(), if w.len() % 2 == 0 { 1 } else { -1 }));
                        next.push(w);
                    }
                }
            }
            frontier = next;
        }
        o
    }

    fn reflect(&self, i: usize, w: &[i64]) -> Vec<i64> {
        (0..w.len()).map(|j| w[j] - w[i] * self.cartan[i][j]).collect()
    }

    fn act(&self, word: &[usize], w: &[i64]) -> Vec<i64> {
        word.iter().rev().fold(w.to_vec(), |acc, &i| self.reflect(i, &acc))
    }

    fn f(&self, w: &[i64]) -> i64 {
        w.iter().zip(&self.height).map(|(a, b)| a * b).sum()
    }

    /// `χ_λ = e^ρ A_{λ+ρ} / Π_{α>0} (e^α − 1)`.
    pub fn character(&self, lambda: &[i64]) -> Laurent {
        let shifted: Vec<i64> = lambda.iter().map(|l| l + 1).collect();
        let mut num = Laurent::new();
        for (word, sign) in &self.group {
            let w: Vec<i64> = self.act(word, &shifted).iter().map(|x| x + 1).collect();
            *num.entry(w).or_insert(0) += sign;
        }
        for alpha in &self.positive_roots {
            num = self.divide(num, alpha);
        }
        num
    }

    /// Exact division by `e^α − 1`, peeling the top terms under `f`.
    fn divide(&self, mut num: Laurent, alpha: &[i64]) -> Laurent {
        let mut q = Laurent::new();
        while let Some((top, c)) = num.iter().filter(|(_, c)| **c != 0).max_by_key(|(w, _)| self.f(w)).map(|(w, c)| (w.clone(), *c)) {
            let lower: Vec<i64> = top.iter().zip(alpha).map(|(a, b)| a - b).collect();
            *q.entry(lower.clone()).or_insert(0) += c;
            *num.entry(top).or_insert(0) -= c;
            *num.entry(lower).or_insert(0) += c;
            num.retain(|_, c| *c != 0);
        }
        q
    }

    pub fn mul(a: &Laurent, b: &Laurent) -> Laurent {
        let mut out = Laurent::new();
        for (x, c) in a {
            for (y, d) in b {
                let s: Vec<i64> = x.iter().zip(y).map(|(p, q)| p + q).collect();
                *out.entry(s).or_insert(0) += c * d;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// Peels highest weights off a character sum.
    pub fn decompose(&self, mut chi: Laurent) -> BTreeMap<Vec<i64>, i64> {
        let mut out = BTreeMap::new();
        while let Some((top, c)) = chi.iter().max_by_key(|(w, _)| self.f(w)).map(|(w, c)| (w.clone(), *c)) {
            assert!(top.iter().all(|&x| x >= 0) && c > 0);
            out.insert(top.clone(), c);
            for (w, m) in self.character(&top) {
                *chi.entry(w).or_insert(0) -= c * m;
            }
            chi.retain(|_, c| *c != 0);
        }
        out
    }

    /// Substitutes the fundamental characters into a polynomial.
    pub fn substitute(&self, p: &ZPolynomial) -> Laurent {
        let n = self.cartan.len();
        let fundamentals: Vec<Laurent> = (0..n)
            .map(|i| {
                let mut l = vec![0; n];
                l[i] = 1;
                self.character(&l)
            })
            .collect();
        let mut out = Laurent::new();
        for (mono, c) in p.terms() {
            let mut term = Laurent::from([(vec![0; n], c.to_i64().unwrap())]);
            for (i, &e) in mono.exponents().iter().enumerate() {
                for _ in 0..e {
                    term = Self::mul(&term, &fundamentals[i]);
                }
            }
            for (w, x) in term {
                *out.entry(w).or_insert(0) += x;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }
}

pub fn a1() -> Oracle {
    Oracle::new(vec![vec![2]], vec![vec![2]], vec![1])
}

pub fn a2() -> Oracle {
    Oracle::new(vec![vec![2, -1], vec![-1, 2]], vec![vec![2, -1], vec![-1, 2], vec![1, 1]], vec![1, 1])
}

pub fn weights(rank: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                (0..=max).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out
}

pub fn check_tensor(ty: &str, oracle: &Oracle, max: i64) -> Result<(), String> {
    let alg = Algebra::from_type(ty).unwrap();
    let rank = alg.rank();
    for l in weights(rank, max) {
        for r in weights(rank, max) {
            let expected = oracle.decompose(Oracle::mul(&oracle.character(&l), &oracle.character(&r)));
            let got = tensor_decompose(&alg, &Weight::new(l.clone()), &Weight::new(r.clone())).unwrap();
            let got: BTreeMap<Vec<i64>, i64> = got
                .entries()
                .iter()
                .map(|(w, m)| (w.labels().to_vec(), m.to_i64().unwrap()))
                .collect();
            if got != expected {
                return Err(format!("{ty} {l:?} x {r:?}: {got:?} != {expected:?}"));
            }
        }
    }
    Ok(())
}

pub fn check_characters(ty: &str, oracle: &Oracle, max: i64) -> Result<(), String> {
    let alg = Algebra::from_type(ty).unwrap();
    let cache = CharacterCache::new(alg.clone());
    for m in weights(alg.rank(), max) {
        let chi = cache.character_poly(&Weight::new(m.clone())).unwrap();
        if oracle.substitute(&chi) != oracle.character(&m) {
            return Err(format!("{ty} chi{m:?} disagrees with the character formula"));
        }
        let dim: i64 = oracle.character(&m).values().sum();
        let value = chi
            .evaluate(&cache.fundamental_dims().iter().map(|d| BigInt::from(d.clone())).collect::<Vec<_>>())
            .unwrap();
        if value != BigInt::from(dim) {
            return Err(format!("{ty} chi{m:?} evaluates to {value}, expected {dim}"));
        }
    }
    Ok(())
}

pub fn data_file(name: &str) -> std::path::PathBuf {
    std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data/e8").join(name)
}

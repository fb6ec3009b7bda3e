use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::Value;

use super::{freudenthal, weyl_dim, Reflector};
use crate::error::{Error, Result};
use crate::rootsys::{Algebra, Weight};

/// Default cap on the number of weight instances (the dimension of the
/// smaller factor) a single decomposition may traverse.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

/// Orbit elements handed to one worker at a time.
const SPLIT_TARGET: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TensorOptions {
    pub budget: u64,
}

impl Default for TensorOptions {
    fn default() -> Self {
        TensorOptions { budget: DEFAULT_BUDGET }
    }
}

/// Irreducible constituents of a tensor product with their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Decomposition {
    entries: BTreeMap<Weight, BigUint>,
}

impl Decomposition {
    pub fn entries(&self) -> &BTreeMap<Weight, BigUint> {
        &self.entries
    }

    pub fn mult(&self, w: &Weight) -> BigUint {
        self.entries.get(w).cloned().unwrap_or_default()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Entries in canonical order: highest level first.
    pub fn sorted(&self, alg: &Algebra) -> Vec<(Weight, BigUint)> {
        alg.sort_weights(self.entries.keys())
            .into_iter()
            .map(|w| {
                let m = self.entries[&w].clone();
                (w, m)
            })
            .collect()
    }

    pub fn to_json(&self, alg: &Algebra) -> Value {
        let sorted = self.sorted(alg);
        super::weight_mult_json(sorted.iter().map(|(w, m)| (w, m)))
    }
}

pub fn tensor_decompose(alg: &Algebra, lambda: &Weight, nu: &Weight) -> Result<Decomposition> {
    tensor_decompose_with(alg, lambda, nu, TensorOptions::default())
}

/// Klimyk's formula: for every weight `mu` of the smaller factor, reflect
/// `lambda + mu + rho` into the dominant chamber and accumulate the signed
/// multiplicity at `result - rho`; singular terms cancel.
pub fn tensor_decompose_with(alg: &Algebra, lambda: &Weight, nu: &Weight, opts: TensorOptions) -> Result<Decomposition> {
    for w in [lambda, nu] {
        alg.check_rank(w)?;
        if !w.is_dominant() {
            return Err(Error::NotDominant(w.clone()));
        }
    }
    let dim_l = weyl_dim(alg, lambda)?;
    let dim_n = weyl_dim(alg, nu)?;
    let (big, small, small_dim) = if dim_n <= dim_l { (lambda, nu, dim_n) } else { (nu, lambda, dim_l) };
    if small_dim > BigUint::from(opts.budget) {
        return Err(Error::BudgetExceeded {
            left: lambda.clone(),
            right: nu.clone(),
            weights: small_dim.to_u128().unwrap_or(u128::MAX),
            budget: opts.budget,
        });
    }

    let table = freudenthal(alg, small)?;
    let reflector = Reflector::new(alg);
    let n = alg.rank();
    let base: Vec<i64> = big.labels().iter().map(|m| m + 1).collect();

    // Split every orbit into subtrees of manageable size; each subtree is a
    // unit of parallel work carrying the multiplicity of its orbit.
    let mut units: Vec<(Vec<i64>, i64)> = Vec::new();
    let mut scratch = Vec::with_capacity(n);
    for (mu, m) in table.entries() {
        let m = m.to_i64().expect("weight multiplicity fits in i64 under the budget");
        let mut frontier = vec![mu.labels().to_vec()];
        let mut settled: Vec<Vec<i64>> = Vec::new();
        // Breadth-first expansion until the frontier is wide enough; the
        // expanded interior nodes are processed as single-node units.
        while !frontier.is_empty() && frontier.len() < SPLIT_TARGET {
            let mut next = Vec::new();
            for x in frontier.drain(..) {
                reflector.for_each_child(&x, &mut scratch, |c| next.push(c.to_vec()));
                settled.push(x);
            }
            frontier = next;
        }
        units.extend(settled.into_iter().map(|x| (x, -m)));
        units.extend(frontier.into_iter().map(|x| (x, m)));
    }

    let merged = units
        .par_iter()
        .fold(HashMap::<Vec<i64>, i64>::new, |mut acc, (root, m)| {
            // Negative multiplicity marks a single node whose children are
            // already scheduled elsewhere.
            let (single, m) = if *m < 0 { (true, -*m) } else { (false, *m) };
            let mut stack: Vec<i64> = root.clone();
            let mut scratch = Vec::with_capacity(n);
            let mut probe = vec![0i64; n];
            while !stack.is_empty() {
                let top = stack.len() - n;
                let x: Vec<i64> = stack[top..].to_vec();
                stack.truncate(top);
                for i in 0..n {
                    probe[i] = base[i] + x[i];
                }
                let sign = reflector.reflect(&mut probe);
                if probe.iter().all(|&p| p > 0) {
                    for p in probe.iter_mut() {
                        *p -= 1;
                    }
                    *acc.entry(probe.clone()).or_insert(0) += i64::from(sign) * m;
                }
                if !single {
                    reflector.for_each_child(&x, &mut scratch, |c| stack.extend_from_slice(c));
                }
            }
            acc
        })
        .reduce(HashMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_insert(0) += v;
            }
            a
        });

    let entries = merged
        .into_iter()
        .filter(|&(_, v)| v != 0)
        .map(|(k, v)| {
            debug_assert!(v > 0, "tensor multiplicities are positive");
            (Weight::new(k), BigUint::from(v as u64))
        })
        .collect();
    Ok(Decomposition { entries })
}

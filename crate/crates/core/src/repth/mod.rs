//! Weight multiplicities, dimensions and tensor-product decompositions of
//! irreducible representations.

mod freudenthal;
mod tensor;

pub use freudenthal::{freudenthal, WeightMultiplicityTable};
pub use tensor::{tensor_decompose, tensor_decompose_with, Decomposition, TensorOptions, DEFAULT_BUDGET};

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::rootsys::{Algebra, Weight};

/// Outcome of moving a weight into the dominant chamber.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Reflected {
    pub dominant: Weight,
    /// `(-1)^(number of simple reflections applied)`.
    pub sign: i8,
    /// The dominant representative lies on a wall (some label is zero), so the
    /// weight has a nontrivial stabilizer.
    pub singular: bool,
}

pub fn dominant_reflect(alg: &Algebra, w: &Weight) -> Result<Reflected> {
    alg.check_rank(w)?;
    let mut labels = w.labels().to_vec();
    let sign = Reflector::new(alg).reflect(&mut labels);
    let singular = labels.contains(&0);
    Ok(Reflected {
        dominant: Weight::new(labels),
        sign,
        singular,
    })
}

/// Simple reflections on raw label slices, with the sparse Cartan rows
/// precomputed.
#[derive(Debug, Clone)]
pub(crate) struct Reflector {
    /// For each node `i`: `(j, A_ij)` over the neighbours `j != i`.
    links: Vec<Vec<(usize, i64)>>,
}

impl Reflector {
    pub(crate) fn new(alg: &Algebra) -> Self {
        let n = alg.rank();
        let links = (0..n)
            .map(|i| {
                (0..n)
                    .filter(|&j| j != i && alg.cartan().get(i, j) != 0)
                    .map(|j| (j, alg.cartan().get(i, j)))
                    .collect()
            })
            .collect();
        Reflector { links }
    }

    /// `w <- s_i(w) = w - w_i alpha_i`.
    #[inline]
    pub(crate) fn apply(&self, w: &mut [i64], i: usize) {
        let c = w[i];
        w[i] = -c;
        for &(j, a) in &self.links[i] {
            w[j] -= c * a;
        }
    }

    /// Reflects `w` into the dominant chamber in place and returns the sign.
    #[inline]
    pub(crate) fn reflect(&self, w: &mut [i64]) -> i8 {
        let mut sign = 1i8;
        while let Some(i) = w.iter().position(|&m| m < 0) {
            self.apply(w, i);
            sign = -sign;
        }
        sign
    }

    /// Children of `w` in the orbit tree whose parent map sends a
    /// non-dominant weight `v` to `s_j v` with `j` the first negative label.
    /// Each orbit element is visited exactly once from the dominant root.
    #[inline]
    pub(crate) fn for_each_child(&self, w: &[i64], scratch: &mut Vec<i64>, mut f: impl FnMut(&[i64])) {
        for i in 0..w.len() {
            if w[i] <= 0 {
                continue;
            }
            scratch.clear();
            scratch.extend_from_slice(w);
            self.apply(scratch, i);
            if scratch[..i].iter().all(|&m| m >= 0) {
                f(scratch);
            }
        }
    }
}

pub fn weyl_dim(alg: &Algebra, lambda: &Weight) -> Result<BigUint> {
    alg.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let shifted = lambda.add(&alg.weyl_vector());
    let rho = alg.weyl_vector();
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for root in alg.positive_roots() {
        num *= BigUint::from(root.pair_coroot(shifted.labels()) as u64);
        den *= BigUint::from(root.pair_coroot(rho.labels()) as u64);
        let g = num.gcd(&den);
        num /= &g;
        den /= &g;
    }
    debug_assert!(den.is_one());
    Ok(num)
}

/// `|W| / |Stab(lambda)|`, with the stabilizer the parabolic subgroup on the
/// zero labels.
pub fn orbit_size(alg: &Algebra, lambda: &Weight) -> Result<BigUint> {
    alg.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let zeros: Vec<usize> = (0..alg.rank()).filter(|&i| lambda.labels()[i] == 0).collect();
    Ok(alg.weyl_order() / alg.parabolic_order(&zeros))
}

pub(crate) fn weight_mult_json<'a, I>(entries: I) -> Value
where
    I: IntoIterator<Item = (&'a Weight, &'a BigUint)>,
{
    Value::Array(
        entries
            .into_iter()
            .map(|(w, m)| json!({ "labels": w.labels(), "mult": m.to_string() }))
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(labels: &[i64]) -> Weight {
        Weight::new(labels.to_vec())
    }

    #[test]
    fn reflect_dominant_is_identity() {
        let a2 = Algebra::from_type("A2").unwrap();
        let r = dominant_reflect(&a2, &w(&[2, 1])).unwrap();
        assert_eq!(r, Reflected { dominant: w(&[2, 1]), sign: 1, singular: false });
        let r = dominant_reflect(&a2, &w(&[2, 0])).unwrap();
        assert_eq!(r.sign, 1);
        assert!(r.singular);
    }

    #[test]
    fn reflect_single_step_a2() {
        let a2 = Algebra::from_type("A2").unwrap();
        let r = dominant_reflect(&a2, &w(&[-1, 1])).unwrap();
        assert_eq!(r, Reflected { dominant: w(&[1, 0]), sign: -1, singular: true });
        // (1,0) lies on a wall; the step itself is (m1,m2) -> (-m1, m2+m1)
        let r = dominant_reflect(&a2, &w(&[-1, 2])).unwrap();
        assert_eq!(r, Reflected { dominant: w(&[1, 1]), sign: -1, singular: false });
    }

    #[test]
    fn zero_label_means_singular() {
        let d4 = Algebra::from_type("D4").unwrap();
        for labels in [[0, -3, 2, 5], [4, 0, -1, -1], [-2, 1, 0, 3]] {
            assert!(dominant_reflect(&d4, &w(&labels)).unwrap().singular, "{labels:?}");
        }
    }

    #[test]
    fn dimensions() {
        let e8 = Algebra::from_type("E8").unwrap();
        assert_eq!(weyl_dim(&e8, &Weight::zero(8)).unwrap(), BigUint::one());
        let dims = [3875u64, 147_250, 6_696_000, 6_899_079_264, 146_325_270, 2_450_240, 30_380, 248];
        for (i, d) in dims.iter().enumerate() {
            assert_eq!(weyl_dim(&e8, &Weight::fundamental(8, i)).unwrap(), BigUint::from(*d));
        }
        let a1 = Algebra::from_type("A1").unwrap();
        for n in 0..10 {
            assert_eq!(weyl_dim(&a1, &w(&[n])).unwrap(), BigUint::from(n as u64 + 1));
        }
        let g2 = Algebra::from_type("G2").unwrap();
        assert_eq!(weyl_dim(&g2, &w(&[1, 0])).unwrap(), BigUint::from(7u32));
        assert_eq!(weyl_dim(&g2, &w(&[0, 1])).unwrap(), BigUint::from(14u32));
        let b3 = Algebra::from_type("B3").unwrap();
        assert_eq!(weyl_dim(&b3, &w(&[0, 0, 1])).unwrap(), BigUint::from(8u32));
        assert!(matches!(weyl_dim(&a1, &w(&[-1])), Err(Error::NotDominant(_))));
    }

    #[test]
    fn orbit_sizes() {
        let a2 = Algebra::from_type("A2").unwrap();
        assert_eq!(orbit_size(&a2, &w(&[0, 0])).unwrap(), BigUint::one());
        assert_eq!(orbit_size(&a2, &w(&[1, 1])).unwrap(), BigUint::from(6u32));
        assert_eq!(orbit_size(&a2, &w(&[1, 0])).unwrap(), BigUint::from(3u32));
        let e8 = Algebra::from_type("E8").unwrap();
        assert_eq!(orbit_size(&e8, &Weight::fundamental(8, 7)).unwrap(), BigUint::from(240u32));
    }

    #[test]
    fn orbit_tree_visits_each_element_once() {
        let e6 = Algebra::from_type("E6").unwrap();
        let r = Reflector::new(&e6);
        let start = Weight::fundamental(6, 0);
        let mut stack = vec![start.labels().to_vec()];
        let mut seen = std::collections::HashSet::new();
        let mut scratch = Vec::new();
        while let Some(x) = stack.pop() {
            assert!(seen.insert(x.clone()), "duplicate {x:?}");
            r.for_each_child(&x, &mut scratch, |c| stack.push(c.to_vec()));
        }
        assert_eq!(seen.len(), 27);
    }
}

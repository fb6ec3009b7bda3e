use std::collections::{BTreeMap, HashMap};

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde_json::Value;

use super::Reflector;
use crate::error::{Error, Result};
use crate::rootsys::{Algebra, Weight};

/// Multiplicities of the dominant weights of one irreducible representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiplicityTable {
    highest: Weight,
    entries: BTreeMap<Weight, BigUint>,
}

impl WeightMultiplicityTable {
    pub fn highest(&self) -> &Weight {
        &self.highest
    }

    pub fn entries(&self) -> &BTreeMap<Weight, BigUint> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Multiplicity of an arbitrary weight, via its dominant representative.
    pub fn mult(&self, alg: &Algebra, w: &Weight) -> BigUint {
        let mut labels = w.labels().to_vec();
        Reflector::new(alg).reflect(&mut labels);
        self.entries.get(&Weight::new(labels)).cloned().unwrap_or_default()
    }

    pub fn to_json(&self, alg: &Algebra) -> Value {
        let order = alg.sort_weights(self.entries.keys());
        super::weight_mult_json(order.iter().map(|w| (w, &self.entries[w])))
    }
}

/// Freudenthal's recursion over the dominant weights of `V_lambda`, from the
/// top down.
pub fn freudenthal(alg: &Algebra, lambda: &Weight) -> Result<WeightMultiplicityTable> {
    alg.check_rank(lambda)?;
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.clone()));
    }
    let n = alg.rank();
    let roots = alg.positive_roots();
    let reflector = Reflector::new(alg);

    // Dominant weights below lambda: every dominant mu < lambda is reachable
    // by repeatedly subtracting positive roots without leaving the dominant
    // cone. Track lambda - mu in simple-root coordinates alongside.
    let mut depth_of: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    let mut order: Vec<Vec<i64>> = vec![lambda.labels().to_vec()];
    depth_of.insert(lambda.labels().to_vec(), vec![0; n]);
    let mut k = 0;
    while k < order.len() {
        let mu = order[k].clone();
        let delta = depth_of[&mu].clone();
        for root in roots {
            let next: Vec<i64> = mu.iter().zip(root.labels()).map(|(m, a)| m - a).collect();
            if next.iter().any(|&m| m < 0) || depth_of.contains_key(&next) {
                continue;
            }
            let d: Vec<i64> = delta.iter().zip(root.coeffs()).map(|(x, c)| x + c).collect();
            depth_of.insert(next.clone(), d);
            order.push(next);
        }
        k += 1;
    }
    order.sort_by_key(|mu| depth_of[mu].iter().sum::<i64>());

    // All pairings are scaled by `norm_scale` so they stay integral.
    let sd = alg.scaled_norms();
    let pair_root = |x: &[i64], coeffs: &[i64]| -> i64 { (0..n).map(|i| coeffs[i] * sd[i] * x[i]).sum() };

    let mut mult: HashMap<Vec<i64>, BigInt> = HashMap::with_capacity(order.len());
    mult.insert(lambda.labels().to_vec(), BigInt::from(1));
    let mut shifted = vec![0i64; n];
    let mut probe = vec![0i64; n];
    for mu in order.iter().skip(1) {
        let delta = &depth_of[mu];
        // (lambda+rho)^2 - (mu+rho)^2 = (lambda - mu, lambda + mu + 2 rho)
        for i in 0..n {
            shifted[i] = lambda.labels()[i] + mu[i] + 2;
        }
        let denom = pair_root(&shifted, delta);
        let mut numer = BigInt::zero();
        for root in roots {
            let mut step = 1;
            loop {
                for i in 0..n {
                    probe[i] = mu[i] + step * root.labels()[i];
                }
                let pairing = pair_root(&probe, root.coeffs());
                reflector.reflect(&mut probe);
                match mult.get(&probe) {
                    Some(m) if !m.is_zero() => numer += m * BigInt::from(pairing),
                    _ => break,
                }
                step += 1;
            }
        }
        numer *= 2;
        let (q, r) = numer.div_rem(&BigInt::from(denom));
        debug_assert!(r.is_zero(), "Freudenthal quotient must be integral");
        debug_assert!(q.is_positive());
        mult.insert(mu.clone(), q);
    }

    let entries = mult
        .into_iter()
        .map(|(w, m)| (Weight::new(w), m.to_biguint().expect("positive multiplicity")))
        .collect();
    Ok(WeightMultiplicityTable {
        highest: lambda.clone(),
        entries,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repth::{orbit_size, weyl_dim};

    fn w(labels: &[i64]) -> Weight {
        Weight::new(labels.to_vec())
    }

    fn total(alg: &Algebra, t: &WeightMultiplicityTable) -> BigUint {
        t.entries().iter().map(|(mu, m)| m * orbit_size(alg, mu).unwrap()).sum()
    }

    #[test]
    fn a1_spin_one() {
        let a1 = Algebra::from_type("A1").unwrap();
        let t = freudenthal(&a1, &w(&[2])).unwrap();
        let expected: BTreeMap<Weight, BigUint> = [(w(&[2]), 1u32), (w(&[0]), 1)]
            .into_iter()
            .map(|(k, v)| (k, BigUint::from(v)))
            .collect();
        assert_eq!(t.entries(), &expected);
    }

    #[test]
    fn a2_adjoint_zero_weight() {
        let a2 = Algebra::from_type("A2").unwrap();
        let t = freudenthal(&a2, &w(&[1, 1])).unwrap();
        assert_eq!(t.entries()[&w(&[0, 0])], BigUint::from(2u32));
        assert_eq!(t.mult(&a2, &w(&[-1, 2])), BigUint::from(1u32));
        assert_eq!(t.mult(&a2, &w(&[3, 0])), BigUint::zero());
    }

    #[test]
    fn e8_adjoint() {
        let e8 = Algebra::from_type("E8").unwrap();
        let t = freudenthal(&e8, &Weight::fundamental(8, 7)).unwrap();
        assert_eq!(t.entries()[&Weight::zero(8)], BigUint::from(8u32));
        assert_eq!(total(&e8, &t), BigUint::from(248u32));
    }

    #[test]
    fn totals_match_dimension() {
        for (t, hw) in [
            ("B3", vec![1, 0, 1]),
            ("C3", vec![0, 2, 1]),
            ("G2", vec![2, 1]),
            ("F4", vec![0, 0, 0, 1]),
            ("E6", vec![1, 0, 0, 0, 0, 1]),
            ("E8", vec![1, 0, 0, 0, 0, 0, 0, 0]),
            ("E8", vec![0, 0, 1, 0, 0, 0, 0, 0]),
        ] {
            let alg = Algebra::from_type(t).unwrap();
            let table = freudenthal(&alg, &w(&hw)).unwrap();
            assert_eq!(total(&alg, &table), weyl_dim(&alg, &w(&hw)).unwrap(), "{t} {hw:?}");
            assert_eq!(table.entries()[&w(&hw)], BigUint::from(1u32));
            for mu in table.entries().keys() {
                assert!(mu.is_dominant() && alg.dominates(&w(&hw), mu));
            }
        }
    }

    #[test]
    fn rejects_non_dominant() {
        let a2 = Algebra::from_type("A2").unwrap();
        assert!(matches!(freudenthal(&a2, &w(&[1, -1])), Err(Error::NotDominant(_))));
    }
}

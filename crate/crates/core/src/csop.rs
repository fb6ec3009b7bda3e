//! Spectrum of the trigonometric Calogero-Sutherland model and the
//! second-order operator `Δ¹` acting on polynomials in the fundamental
//! characters.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fixture::{format_record, Record, RecordKey};
use crate::repth::Decomposition;
use crate::rootsys::{Algebra, Weight};
use crate::zpoly::{Monomial, ZPolynomial};

/// An exact energy; integral whenever the coupling and the inverse Cartan
/// matrix are.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnergyValue(pub BigRational);

impl EnergyValue {
    pub fn value(&self) -> &BigRational {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn to_integer(&self) -> Option<BigInt> {
        self.0.is_integer().then(|| self.0.to_integer())
    }
}

impl fmt::Display for EnergyValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn check_dominant(alg: &Algebra, m: &Weight) -> Result<()> {
    alg.check_rank(m)?;
    if !m.is_dominant() {
        return Err(Error::NotDominant(m.clone()));
    }
    Ok(())
}

/// `ε_m(κ) = 2(m, m) + 4κ(m, ρ)`.
pub fn epsilon(alg: &Algebra, m: &Weight, kappa: &BigRational) -> Result<EnergyValue> {
    check_dominant(alg, m)?;
    let two = BigRational::from_integer(2.into());
    let mm = alg.form(m, m)?;
    let mr = alg.form(m, &alg.weyl_vector())?;
    Ok(EnergyValue(&two * mm + &two * &two * kappa * mr))
}

/// `E₀(κ) = 2(ρ, ρ)κ²`.
pub fn ground_energy(alg: &Algebra, kappa: &BigRational) -> Result<EnergyValue> {
    let rho = alg.weyl_vector();
    let rr = alg.form(&rho, &rho)?;
    Ok(EnergyValue(BigRational::from_integer(2.into()) * rr * kappa * kappa))
}

/// `E_m(κ) = 2(m + κρ, m + κρ)`.
pub fn level_energy(alg: &Algebra, m: &Weight, kappa: &BigRational) -> Result<EnergyValue> {
    check_dominant(alg, m)?;
    let rho = alg.weyl_vector();
    let mm = alg.form(m, m)?;
    let mr = alg.form(m, &rho)?;
    let rr = alg.form(&rho, &rho)?;
    let two = BigRational::from_integer(2.into());
    let shifted = mm + &two * kappa * mr + kappa * kappa * rr;
    Ok(EnergyValue(two * shifted))
}

fn require_simply_laced(alg: &Algebra) -> Result<()> {
    if alg.is_simply_laced() {
        Ok(())
    } else {
        Err(Error::NotSimplyLaced)
    }
}

/// `b_j = ε_{λ_j}(1)`.
pub fn b_coeffs(alg: &Algebra) -> Result<Vec<BigInt>> {
    require_simply_laced(alg)?;
    let one = BigRational::one();
    (0..alg.rank())
        .map(|j| {
            let e = epsilon(alg, &Weight::fundamental(alg.rank(), j), &one)?;
            e.to_integer().ok_or_else(|| Error::NonIntegralOperator {
                algebra: alg.name().to_string(),
            })
        })
        .collect()
}

/// Supplies characters and tensor-product decompositions to the operator
/// assembly.
pub trait CharacterProvider {
    fn character(&self, m: &Weight) -> Result<ZPolynomial>;
    fn decompose(&self, left: &Weight, right: &Weight) -> Result<Decomposition>;
}

/// `a_jk` from the Clebsch-Gordan series of `λ_j ⊗ λ_k` (zero-based indices):
///
/// `(1 + δ_jk) a_jk = Σ_μ N_μ ε_μ(1) χ_μ − (b_j + b_k) z_j z_k`.
///
/// The top constituent `χ_{λ_j+λ_k} = z_j z_k − Σ_{μ<} N_μ χ_μ` is eliminated,
/// so only strictly lower characters are requested.
pub fn a_coeff<P: CharacterProvider + ?Sized>(alg: &Algebra, j: usize, k: usize, provider: &P) -> Result<ZPolynomial> {
    require_simply_laced(alg)?;
    let n = alg.rank();
    for i in [j, k] {
        if i >= n {
            return Err(Error::VariableOutOfRange { index: i + 1, rank: n });
        }
    }
    let (j, k) = (j.min(k), j.max(k));
    let lj = Weight::fundamental(n, j);
    let lk = Weight::fundamental(n, k);
    let top = lj.add(&lk);
    let one = BigRational::one();
    let eps = |m: &Weight| epsilon(alg, m, &one).map(|e| e.0);

    let decomp = provider.decompose(&lj, &lk)?;
    let e_top = eps(&top)?;
    let b_sum = eps(&lj)? + eps(&lk)?;

    // Scale every energy by a common denominator so the sum stays integral.
    let mut terms: Vec<(BigRational, Weight)> = Vec::new();
    for (mu, mult) in decomp.entries() {
        if *mu == top {
            continue;
        }
        let coeff = (eps(mu)? - &e_top) * BigRational::from_integer(BigInt::from(mult.clone()));
        terms.push((coeff, mu.clone()));
    }
    let zz_coeff = &e_top - &b_sum;
    let denom = terms
        .iter()
        .map(|(c, _)| c.denom().clone())
        .fold(zz_coeff.denom().clone(), |acc, d| acc.lcm(&d));
    let scaled = |c: &BigRational| (c * BigRational::from_integer(denom.clone())).to_integer();

    let mut sum = ZPolynomial::zero(n);
    for (c, mu) in &terms {
        let chi = provider.character(mu)?;
        sum.add_scaled_unchecked(&chi, &scaled(c));
    }
    let mut exps = vec![0u32; n];
    exps[j] += 1;
    exps[k] += 1;
    sum.add_scaled_unchecked(&ZPolynomial::monomial(Monomial::new(exps), BigInt::one()), &scaled(&zz_coeff));

    let halve = if j == k { 2 } else { 1 };
    sum.div_exact(&(denom * halve)).ok_or(Error::NonIntegral { j: j + 1, k: k + 1 })
}

/// Where an operator entry came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    Computed,
    LoadedFromFixture,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Computed => "computed",
            Provenance::LoadedFromFixture => "fixture",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
struct Entry {
    poly: ZPolynomial,
    provenance: Provenance,
}

/// `Δ¹ = Σ_{j≤k} a_jk ∂_j ∂_k + Σ_j b_j z_j ∂_j`, one entry per unordered
/// pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Delta1Operator {
    rank: usize,
    b: Vec<BigInt>,
    a: Vec<Option<Entry>>,
}

impl Delta1Operator {
    /// An operator with the `b_j` filled in and no `a_jk` yet.
    pub fn new(alg: &Algebra) -> Result<Self> {
        let b = b_coeffs(alg)?;
        let rank = alg.rank();
        Ok(Delta1Operator {
            rank,
            b,
            a: vec![None; rank * (rank + 1) / 2],
        })
    }

    fn index(&self, j: usize, k: usize) -> Result<usize> {
        let (j, k) = (j.min(k), j.max(k));
        if k >= self.rank {
            return Err(Error::VariableOutOfRange {
                index: k + 1,
                rank: self.rank,
            });
        }
        Ok(j * self.rank - j * j.saturating_sub(1) / 2 + (k - j))
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn b(&self) -> &[BigInt] {
        &self.b
    }

    /// The entry `a_jk` (zero-based, either order), if populated.
    pub fn a(&self, j: usize, k: usize) -> Option<&ZPolynomial> {
        let i = self.index(j, k).ok()?;
        self.a[i].as_ref().map(|e| &e.poly)
    }

    pub fn provenance(&self, j: usize, k: usize) -> Option<Provenance> {
        let i = self.index(j, k).ok()?;
        self.a[i].as_ref().map(|e| e.provenance)
    }

    pub fn set_a(&mut self, j: usize, k: usize, poly: ZPolynomial, provenance: Provenance) -> Result<()> {
        if poly.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: poly.rank(),
            });
        }
        let i = self.index(j, k)?;
        self.a[i] = Some(Entry { poly, provenance });
        Ok(())
    }

    /// All unordered pairs `(j, k)`, `j <= k`, with their provenance.
    pub fn completeness(&self) -> Vec<((usize, usize), Option<Provenance>)> {
        let mut out = Vec::with_capacity(self.a.len());
        for j in 0..self.rank {
            for k in j..self.rank {
                out.push(((j, k), self.provenance(j, k)));
            }
        }
        out
    }

    pub fn missing(&self) -> Vec<(usize, usize)> {
        self.completeness()
            .into_iter()
            .filter(|(_, p)| p.is_none())
            .map(|(jk, _)| jk)
            .collect()
    }

    pub fn is_complete(&self) -> bool {
        self.a.iter().all(Option::is_some)
    }

    /// Registers `a[j,k]` records and checks `b[j]` records against the
    /// computed values. Character records are ignored.
    pub fn load_records(&mut self, records: &[Record]) -> Result<()> {
        for r in records {
            match &r.key {
                RecordKey::A(j, k) => self.set_a(*j, *k, r.poly.clone(), Provenance::LoadedFromFixture)?,
                RecordKey::B(j) => {
                    let given = r.b_scalar().expect("validated by the fixture parser");
                    if given != self.b[*j] {
                        return Err(Error::Fixture(format!(
                            "line {}: b[{}] = {} disagrees with the computed {}",
                            r.line,
                            j + 1,
                            given,
                            self.b[*j]
                        )));
                    }
                }
                RecordKey::Chi(_) => {}
            }
        }
        Ok(())
    }

    /// Computes every missing entry accepted by `filter`, cheapest
    /// smaller factor first.
    pub fn compute_missing<P, F>(&mut self, alg: &Algebra, provider: &P, mut filter: F) -> Result<()>
    where
        P: CharacterProvider + ?Sized,
        F: FnMut(usize, usize) -> bool,
    {
        for (j, k) in schedule(alg, &self.missing()) {
            if filter(j, k) {
                let poly = a_coeff(alg, j, k, provider)?;
                self.set_a(j, k, poly, Provenance::Computed)?;
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Value {
        let a: Vec<Value> = self
            .completeness()
            .into_iter()
            .filter_map(|((j, k), p)| {
                let p = p?;
                Some(json!({
                    "j": j + 1,
                    "k": k + 1,
                    "provenance": p.to_string(),
                    "poly": self.a(j, k).expect("populated").to_json(),
                }))
            })
            .collect();
        json!({
            "rank": self.rank,
            "b": self.b.iter().map(|b| b.to_string()).collect::<Vec<_>>(),
            "a": a,
        })
    }

    /// The operator in fixture syntax.
    pub fn to_fixture(&self) -> String {
        let mut out = String::new();
        for (j, b) in self.b.iter().enumerate() {
            let mut e = vec![0u32; self.rank];
            e[j] = 1;
            out += &format_record(&RecordKey::B(j), &ZPolynomial::monomial(Monomial::new(e), b.clone()));
        }
        for ((j, k), p) in self.completeness() {
            if p.is_some() {
                out += &format_record(&RecordKey::A(j, k), self.a(j, k).expect("populated"));
            }
        }
        out
    }
}

/// Orders pairs by the dimension of the smaller factor, then by indices.
pub fn schedule(alg: &Algebra, pairs: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let n = alg.rank();
    let dim = |i: usize| crate::repth::weyl_dim(alg, &Weight::fundamental(n, i)).expect("fundamental weight");
    let mut keyed: Vec<_> = pairs.iter().map(|&(j, k)| (dim(j).min(dim(k)), dim(j).max(dim(k)), j, k)).collect();
    keyed.sort();
    keyed.into_iter().map(|(_, _, j, k)| (j, k)).collect()
}

/// Pairs `(j, k)` with `j <= k` such that `∂_j ∂_k p` is nonzero.
pub fn required_pairs(p: &ZPolynomial) -> Vec<(usize, usize)> {
    let n = p.rank();
    let mut out = Vec::new();
    for j in 0..n {
        for k in j..n {
            let hit = p.terms().any(|(m, _)| {
                let e = m.exponents();
                if j == k {
                    e[j] >= 2
                } else {
                    e[j] >= 1 && e[k] >= 1
                }
            });
            if hit {
                out.push((j, k));
            }
        }
    }
    out
}

/// `Δ¹ p`. Fails if `p` has a second derivative `∂_j ∂_k` whose coefficient
/// `a_jk` is not populated.
pub fn apply_delta1(op: &Delta1Operator, p: &ZPolynomial) -> Result<ZPolynomial> {
    if p.rank() != op.rank {
        return Err(Error::RankMismatch {
            expected: op.rank,
            got: p.rank(),
        });
    }
    let n = op.rank;
    let pairs = required_pairs(p);
    for &(j, k) in &pairs {
        if op.a(j, k).is_none() {
            return Err(Error::MissingOperatorEntry { j: j + 1, k: k + 1 });
        }
    }

    // First-order part: z_j ∂_j multiplies each term by its exponent.
    let mut out = ZPolynomial::from_terms(
        n,
        p.terms().map(|(m, c)| {
            let weight: BigInt = m.exponents().iter().zip(&op.b).map(|(&e, b)| b * e).sum();
            (m.clone(), c * weight)
        }),
    );

    for (j, k) in pairs {
        let dj = p.partial_derivative(j)?;
        let djk = dj.partial_derivative(k)?;
        let a = op.a(j, k).expect("checked above");
        out.add_assign_unchecked(&a.mul_unchecked(&djk));
    }
    Ok(out)
}

/// `Σ_i n_i λ_i` for a monomial `z^n`.
pub fn monomial_weight(m: &Monomial) -> Weight {
    Weight::new(m.exponents().iter().map(|&e| i64::from(e)).collect())
}

/// Every monomial of `a_jk` has weight below `λ_j + λ_k` in dominance order.
pub fn degree_bound_holds(alg: &Algebra, j: usize, k: usize, a: &ZPolynomial) -> bool {
    let n = alg.rank();
    let top = Weight::fundamental(n, j).add(&Weight::fundamental(n, k));
    a.terms().all(|(m, _)| alg.dominates(&top, &monomial_weight(m)))
}

/// Residual `Δ¹ χ − ε_m(1) χ`.
pub fn eigen_residual(alg: &Algebra, op: &Delta1Operator, m: &Weight, chi: &ZPolynomial) -> Result<ZPolynomial> {
    let e = epsilon(alg, m, &BigRational::one())?;
    let Some(e) = e.to_integer() else {
        return Err(Error::NonIntegralOperator {
            algebra: alg.name().to_string(),
        });
    };
    let lhs = apply_delta1(op, chi)?;
    let mut res = lhs;
    res.add_scaled_unchecked(chi, &-e);
    Ok(res)
}

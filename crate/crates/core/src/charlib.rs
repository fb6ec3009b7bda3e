//! Irreducible characters as polynomials in the fundamental characters
//! `z_i = χ_{λ_i}`, computed by peeling one fundamental weight at a time off
//! the highest weight:
//!
//! `χ_m = z_i χ_ν − Σ_{μ ≠ m} N_{μ; λ_i, ν} χ_μ`, with `ν = m − λ_i`.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::path::{Path, PathBuf};
use std::sync::{Arc, Mutex, RwLock};

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::csop::{eigen_residual, monomial_weight, CharacterProvider, Delta1Operator};
use crate::error::{Error, Result};
use crate::fixture::{format_record, load_fixture, parse_fixture, Record, RecordKey};
use crate::repth::{tensor_decompose_with, weyl_dim, Decomposition, TensorOptions};
use crate::rootsys::{Algebra, Weight};
use crate::zpoly::{Monomial, ZPolynomial};

/// Environment variable naming the root of the on-disk character cache.
pub const CACHE_ENV: &str = "WEYLCHAR_CACHE_DIR";

type Slot = Arc<Mutex<Option<ZPolynomial>>>;

/// Memoized characters of one algebra, optionally persisted as one fixture
/// file per weight under `<root>/<algebra>/<labels>.chi`.
///
/// Each weight has its own lock, so concurrent requests for the same weight
/// compute it once. A computation only ever waits on strictly lower weights,
/// which rules out lock cycles.
pub struct CharacterCache {
    alg: Algebra,
    opts: TensorOptions,
    slots: Mutex<HashMap<Weight, Slot>>,
    decomps: Mutex<HashMap<(Weight, Weight), Arc<Decomposition>>>,
    fallback: RwLock<HashMap<Weight, ZPolynomial>>,
    used_fallback: Mutex<BTreeSet<Weight>>,
    dir: Option<PathBuf>,
    fund_dims: Vec<BigUint>,
}

impl CharacterCache {
    pub fn new(alg: Algebra) -> Self {
        Self::with_options(alg, TensorOptions::default())
    }

    pub fn with_options(alg: Algebra, opts: TensorOptions) -> Self {
        let n = alg.rank();
        let fund_dims = (0..n)
            .map(|i| weyl_dim(&alg, &Weight::fundamental(n, i)).expect("fundamental weight"))
            .collect();
        CharacterCache {
            alg,
            opts,
            slots: Mutex::new(HashMap::new()),
            decomps: Mutex::new(HashMap::new()),
            fallback: RwLock::new(HashMap::new()),
            used_fallback: Mutex::new(BTreeSet::new()),
            dir: None,
            fund_dims,
        }
    }

    /// Persists characters under `root`.
    pub fn persist_to(mut self, root: &Path) -> Self {
        self.dir = Some(root.join(self.alg.name()));
        self
    }

    /// Persists characters under the directory named by [`CACHE_ENV`], if set.
    pub fn persist_from_env(self) -> Self {
        match std::env::var_os(CACHE_ENV) {
            Some(root) if !root.is_empty() => self.persist_to(Path::new(&root)),
            _ => self,
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn options(&self) -> TensorOptions {
        self.opts
    }

    pub fn fundamental_dims(&self) -> &[BigUint] {
        &self.fund_dims
    }

    /// Registers a known character to use when its own recursion would need
    /// an over-budget tensor product. The polynomial is validated first.
    pub fn add_fallback(&self, m: &Weight, poly: ZPolynomial) -> Result<()> {
        self.alg.check_rank(m)?;
        if !leading_term_ok(&self.alg, m, &poly) {
            return Err(Error::Fixture(format!("chi[{}] is not normalized at its leading term", m.to_csv())));
        }
        if !dim_identity(&self.alg, m, &poly)?.holds {
            return Err(Error::Fixture(format!("chi[{}] fails the dimension identity", m.to_csv())));
        }
        self.fallback.write().expect("fallback lock").insert(m.clone(), poly);
        Ok(())
    }

    /// Registers every character record as a fallback.
    pub fn add_fallbacks(&self, records: &[Record]) -> Result<()> {
        for r in records {
            if let RecordKey::Chi(m) = &r.key {
                self.add_fallback(m, r.poly.clone())?;
            }
        }
        Ok(())
    }

    /// Weights whose cached character came from a fallback.
    pub fn fallback_used(&self) -> Vec<Weight> {
        self.used_fallback.lock().expect("fallback lock").iter().cloned().collect()
    }

    /// Weights currently held in memory.
    pub fn cached(&self) -> Vec<Weight> {
        let slots: Vec<(Weight, Slot)> = self
            .slots
            .lock()
            .expect("slot map lock")
            .iter()
            .map(|(w, s)| (w.clone(), s.clone()))
            .collect();
        let mut out: Vec<Weight> = slots
            .into_iter()
            .filter(|(_, s)| s.try_lock().map(|g| g.is_some()).unwrap_or(false))
            .map(|(w, _)| w)
            .collect();
        out.sort();
        out
    }

    pub fn decompose(&self, left: &Weight, right: &Weight) -> Result<Arc<Decomposition>> {
        let key = if left <= right {
            (left.clone(), right.clone())
        } else {
            (right.clone(), left.clone())
        };
        if let Some(d) = self.decomps.lock().expect("decomposition lock").get(&key) {
            return Ok(d.clone());
        }
        let d = Arc::new(tensor_decompose_with(&self.alg, &key.0, &key.1, self.opts)?);
        self.decomps.lock().expect("decomposition lock").insert(key, d.clone());
        Ok(d)
    }

    fn slot(&self, m: &Weight) -> Slot {
        self.slots
            .lock()
            .expect("slot map lock")
            .entry(m.clone())
            .or_insert_with(|| Arc::new(Mutex::new(None)))
            .clone()
    }

    /// `χ_m`, computed at most once per cache.
    pub fn character_poly(&self, m: &Weight) -> Result<ZPolynomial> {
        self.alg.check_rank(m)?;
        if !m.is_dominant() {
            return Err(Error::NotDominant(m.clone()));
        }
        let n = self.alg.rank();
        if m.is_zero() {
            return Ok(ZPolynomial::one(n));
        }
        if let Some(i) = single_fundamental(m) {
            return Ok(ZPolynomial::var(n, i));
        }
        let slot = self.slot(m);
        let mut guard = slot.lock().expect("character slot lock");
        if let Some(p) = guard.as_ref() {
            return Ok(p.clone());
        }
        if let Some(p) = self.load(m) {
            *guard = Some(p.clone());
            return Ok(p);
        }
        let poly = match self.character_via(m, self.strip_index(m)) {
            Err(err @ Error::BudgetExceeded { .. }) => {
                let Some(p) = self.fallback.read().expect("fallback lock").get(m).cloned() else {
                    return Err(err);
                };
                self.used_fallback.lock().expect("fallback lock").insert(m.clone());
                p
            }
            other => other?,
        };
        self.store(m, &poly);
        *guard = Some(poly.clone());
        Ok(poly)
    }

    /// The fundamental weight to peel off: the cheapest pending tensor
    /// product, ties to the smallest index.
    pub fn strip_index(&self, m: &Weight) -> usize {
        let n = self.alg.rank();
        (0..n)
            .filter(|&i| m.labels()[i] > 0)
            .min_by_key(|&i| {
                let nu = m.sub(&Weight::fundamental(n, i));
                let d = weyl_dim(&self.alg, &nu).expect("dominant remainder");
                (d.min(self.fund_dims[i].clone()), i)
            })
            .expect("nonzero weight")
    }

    /// `χ_m` through the product `λ_i ⊗ (m − λ_i)`, without storing `χ_m`.
    /// Lower characters are taken from the cache.
    pub fn character_via(&self, m: &Weight, i: usize) -> Result<ZPolynomial> {
        let n = self.alg.rank();
        if i >= n || m.labels().get(i).copied().unwrap_or(0) <= 0 {
            return Err(Error::VariableOutOfRange { index: i + 1, rank: n });
        }
        let li = Weight::fundamental(n, i);
        let nu = m.sub(&li);
        let decomp = self.decompose(&li, &nu)?;
        debug_assert_eq!(decomp.mult(m), BigUint::one());
        let mut out = self.character_poly(&nu)?.mul_var(i);
        for mu in self.alg.sort_weights(decomp.entries().keys()) {
            if mu == *m {
                continue;
            }
            let chi = self.character_poly(&mu)?;
            let mult = BigInt::from(decomp.mult(&mu));
            out.add_scaled_unchecked(&chi, &-mult);
        }
        Ok(out)
    }

    fn path(&self, m: &Weight) -> Option<PathBuf> {
        let name: Vec<String> = m.labels().iter().map(|l| l.to_string()).collect();
        self.dir.as_ref().map(|d| d.join(format!("{}.chi", name.join("-"))))
    }

    /// A persisted character, if present and valid.
    fn load(&self, m: &Weight) -> Option<ZPolynomial> {
        let text = std::fs::read_to_string(self.path(m)?).ok()?;
        let records = parse_fixture(&text, self.alg.rank()).ok()?;
        let [record] = records.as_slice() else { return None };
        if record.key != RecordKey::Chi(m.clone()) || !leading_term_ok(&self.alg, m, &record.poly) {
            return None;
        }
        dim_identity(&self.alg, m, &record.poly).ok()?.holds.then(|| record.poly.clone())
    }

    /// Best effort: a failed write only costs a recomputation later.
    fn store(&self, m: &Weight, poly: &ZPolynomial) {
        let Some(path) = self.path(m) else { return };
        let Some(dir) = path.parent() else { return };
        if std::fs::create_dir_all(dir).is_err() {
            return;
        }
        let tmp = path.with_extension(format!("chi.{}.tmp", std::process::id()));
        if std::fs::write(&tmp, format_record(&RecordKey::Chi(m.clone()), poly)).is_ok() {
            let _ = std::fs::rename(&tmp, &path);
        }
    }

    /// Checks `χ_m` against an expected polynomial.
    pub fn compare_fixture(&self, m: &Weight, expected: &ZPolynomial) -> Result<FixtureDiff> {
        Ok(compare_fixture(expected, &self.character_poly(m)?))
    }

    pub fn verify_eigen(&self, m: &Weight, op: &Delta1Operator) -> Result<EigenReport> {
        verify_eigen(&self.alg, m, &self.character_poly(m)?, op)
    }

    pub fn dim_identity(&self, m: &Weight) -> Result<DimReport> {
        dim_identity(&self.alg, m, &self.character_poly(m)?)
    }
}

impl CharacterProvider for CharacterCache {
    fn character(&self, m: &Weight) -> Result<ZPolynomial> {
        self.character_poly(m)
    }

    fn decompose(&self, left: &Weight, right: &Weight) -> Result<Decomposition> {
        CharacterCache::decompose(self, left, right).map(|d| (*d).clone())
    }
}

fn single_fundamental(m: &Weight) -> Option<usize> {
    let mut nonzero = m.labels().iter().enumerate().filter(|(_, &l)| l != 0);
    match (nonzero.next(), nonzero.next()) {
        (Some((i, 1)), None) => Some(i),
        _ => None,
    }
}

/// The coefficient of `z^m` is 1 and every other monomial lies strictly
/// below `m` in dominance order.
pub fn leading_term_ok(alg: &Algebra, m: &Weight, poly: &ZPolynomial) -> bool {
    let Ok(exps) = m.labels().iter().map(|&l| u32::try_from(l)).collect::<std::result::Result<Vec<_>, _>>() else {
        return false;
    };
    let lead = Monomial::new(exps);
    if poly.coeff(&lead) != BigInt::one() {
        return false;
    }
    poly.terms()
        .all(|(mono, _)| *mono == lead || alg.dominates(m, &monomial_weight(mono)))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenReport {
    pub holds: bool,
    /// `Δ¹ χ − ε χ`; zero exactly when the report holds.
    pub residual: ZPolynomial,
}

pub fn verify_eigen(alg: &Algebra, m: &Weight, poly: &ZPolynomial, op: &Delta1Operator) -> Result<EigenReport> {
    let residual = eigen_residual(alg, op, m, poly)?;
    Ok(EigenReport {
        holds: residual.is_zero(),
        residual,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimReport {
    pub holds: bool,
    pub value: BigInt,
    pub expected: BigUint,
}

/// Evaluates `χ_m` at the fundamental dimensions and compares with
/// `dim V_m`.
pub fn dim_identity(alg: &Algebra, m: &Weight, poly: &ZPolynomial) -> Result<DimReport> {
    let n = alg.rank();
    let point: Vec<BigInt> = (0..n)
        .map(|i| weyl_dim(alg, &Weight::fundamental(n, i)).map(BigInt::from))
        .collect::<Result<_>>()?;
    let value = poly.evaluate(&point)?;
    let expected = weyl_dim(alg, m)?;
    Ok(DimReport {
        holds: value == BigInt::from(expected.clone()),
        value,
        expected,
    })
}

/// Character records of a fixture file, keyed by highest weight.
pub fn load_fixtures(path: &Path, rank: usize) -> Result<BTreeMap<Weight, ZPolynomial>> {
    let mut out = BTreeMap::new();
    for r in load_fixture(path, rank)? {
        if let RecordKey::Chi(m) = r.key {
            if out.insert(m.clone(), r.poly).is_some() {
                return Err(Error::Fixture(format!("{}: duplicate record chi[{}]", path.display(), m.to_csv())));
            }
        }
    }
    Ok(out)
}

/// Symmetric difference of two term maps.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct FixtureDiff {
    pub only_expected: Vec<(Monomial, BigInt)>,
    pub only_actual: Vec<(Monomial, BigInt)>,
    /// `(monomial, expected, actual)`.
    pub differing: Vec<(Monomial, BigInt, BigInt)>,
}

impl FixtureDiff {
    pub fn is_match(&self) -> bool {
        self.only_expected.is_empty() && self.only_actual.is_empty() && self.differing.is_empty()
    }
}

pub fn compare_fixture(expected: &ZPolynomial, actual: &ZPolynomial) -> FixtureDiff {
    let mut diff = FixtureDiff::default();
    for (m, c) in expected.terms() {
        let a = actual.coeff(m);
        if a == BigInt::from(0) {
            diff.only_expected.push((m.clone(), c.clone()));
        } else if a != *c {
            diff.differing.push((m.clone(), c.clone(), a));
        }
    }
    for (m, c) in actual.terms() {
        if expected.coeff(m) == BigInt::from(0) {
            diff.only_actual.push((m.clone(), c.clone()));
        }
    }
    diff
}

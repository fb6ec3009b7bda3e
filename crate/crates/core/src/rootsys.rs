//! Cartan data, fundamental-weight pairings and positive roots of the finite
//! simple Lie algebras.
//!
//! Weights are always written in Dynkin labels (the fundamental-weight
//! basis). Roots are stored in the simple-root basis with their Dynkin labels
//! cached. The Cartan convention is `A[i][j] = <alpha_i, alpha_j^vee>`, so the
//! Dynkin labels of the simple root `alpha_i` are row `i` of `A`.
//!
//! Node numbering is Bourbaki's. For `E8` this means the branch node is
//! `alpha_2`, attached to `alpha_4`, and the chain runs
//! `alpha_1 - alpha_3 - alpha_4 - alpha_5 - alpha_6 - alpha_7 - alpha_8`; the
//! adjoint representation is the last fundamental weight.

use std::collections::{BTreeMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};

use crate::error::{Error, Result};

/// Integer vector of Dynkin labels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(labels: Vec<i64>) -> Self {
        Weight(labels)
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight `lambda_i`, with `i` zero-based.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut labels = vec![0; rank];
        labels[i] = 1;
        Weight(labels)
    }

    pub fn labels(&self) -> &[i64] {
        &self.0
    }

    pub fn into_labels(self) -> Vec<i64> {
        self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&m| m >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&m| m == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    /// Comma-joined labels, the form used on the command line and in fixtures.
    pub fn to_csv(&self) -> String {
        self.0
            .iter()
            .map(|m| m.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl FromStr for Weight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches(['(', '[']).trim_end_matches([')', ']']);
        let mut labels = Vec::new();
        let mut offset = 0;
        for part in s.split(',') {
            let label = part.trim().parse::<i64>().map_err(|_| Error::Syntax {
                offset,
                message: format!("bad weight label `{}`", part.trim()),
            })?;
            labels.push(label);
            offset += part.len() + 1;
        }
        Ok(Weight(labels))
    }
}

/// Integer Cartan matrix of a finite-type simple Lie algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CartanMatrix {
    entries: Vec<Vec<i64>>,
}

impl CartanMatrix {
    /// Validates a raw matrix: diagonal 2, non-positive off-diagonal entries
    /// with symmetric zero pattern, symmetrizable, connected and positive
    /// definite.
    pub fn new(entries: Vec<Vec<i64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::InvalidCartan("empty matrix".into()));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!("row {} has length {}", i + 1, row.len())));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("diagonal entry {} is not 2", i + 1)));
            }
            for (j, &a) in row.iter().enumerate() {
                if i == j {
                    continue;
                }
                if a > 0 {
                    return Err(Error::InvalidCartan(format!("entry ({},{}) is positive", i + 1, j + 1)));
                }
                if (a == 0) != (entries[j][i] == 0) {
                    return Err(Error::InvalidCartan(format!(
                        "zero pattern not symmetric at ({},{})",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let cartan = CartanMatrix { entries };
        let d = cartan.symmetrizer()?;
        // Positive definiteness of the symmetrized form: leading minors > 0.
        let sym: Vec<Vec<BigRational>> = (0..n)
            .map(|i| (0..n).map(|j| BigRational::from_integer(cartan.entries[i][j].into()) * &d[j]).collect())
            .collect();
        for k in 1..=n {
            let minor: Vec<Vec<BigRational>> = sym[..k].iter().map(|r| r[..k].to_vec()).collect();
            if !determinant(minor).is_positive() {
                return Err(Error::InvalidCartan("matrix is not of finite type".into()));
            }
        }
        Ok(cartan)
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<i64>] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[i][j]
    }

    pub fn determinant(&self) -> BigInt {
        let m = self
            .entries
            .iter()
            .map(|r| r.iter().map(|&a| BigRational::from_integer(a.into())).collect())
            .collect();
        determinant(m).to_integer()
    }

    /// Half squared lengths `d_i = (alpha_i, alpha_i)/2`, normalised so that
    /// long roots have squared length 2.
    fn symmetrizer(&self) -> Result<Vec<BigRational>> {
        let n = self.rank();
        let mut d: Vec<Option<BigRational>> = vec![None; n];
        d[0] = Some(BigRational::one());
        let mut stack = vec![0];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || self.entries[i][j] == 0 {
                    continue;
                }
                // A_ij d_j = A_ji d_i
                let dj = d[i].clone().unwrap() * BigRational::new(self.entries[j][i].into(), self.entries[i][j].into());
                match &d[j] {
                    Some(existing) if *existing != dj => {
                        return Err(Error::InvalidCartan("matrix is not symmetrizable".into()));
                    }
                    Some(_) => {}
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                    }
                }
            }
        }
        let d: Vec<BigRational> = d
            .into_iter()
            .map(|x| x.ok_or_else(|| Error::InvalidCartan("Dynkin diagram is not connected".into())))
            .collect::<Result<_>>()?;
        let max = d.iter().max().cloned().unwrap();
        Ok(d.into_iter().map(|x| x / &max).collect())
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .entries
            .iter()
            .map(|r| r.iter().map(|a| a.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for CartanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|a| format!("{a:>2}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn determinant(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return BigRational::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let p = m[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &p;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    det
}

/// Square matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    entries: Vec<Vec<BigRational>>,
}

impl RationalMatrix {
    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> &[Vec<BigRational>] {
        &self.entries
    }

    /// Product with an integer matrix on the right.
    pub fn mul_int(&self, other: &CartanMatrix) -> RationalMatrix {
        let n = self.rank();
        let entries = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(BigRational::zero(), |acc, k| {
                            acc + &self.entries[i][k] * BigRational::from_integer(other.get(k, j).into())
                        })
                    })
                    .collect()
            })
            .collect();
        RationalMatrix { entries }
    }

    pub fn is_identity(&self) -> bool {
        self.entries
            .iter()
            .enumerate()
            .all(|(i, r)| r.iter().enumerate().all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() }))
    }

    pub fn to_json(&self) -> Value {
        json!(self
            .entries
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>())
            .collect::<Vec<_>>())
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>5}")).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// A root in the simple-root basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    coeffs: Vec<i64>,
    labels: Vec<i64>,
    /// Coefficients of the coroot in the simple-coroot basis.
    co_coeffs: Vec<i64>,
}

impl Root {
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Dynkin labels of the root.
    pub fn labels(&self) -> &[i64] {
        &self.labels
    }

    pub fn coroot_coeffs(&self) -> &[i64] {
        &self.co_coeffs
    }

    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// `<mu, alpha^vee>` for a weight given in Dynkin labels.
    pub fn pair_coroot(&self, mu: &[i64]) -> i64 {
        self.co_coeffs.iter().zip(mu).map(|(c, m)| c * m).sum()
    }
}

/// Build the Cartan matrix for a type string such as `E8`, `a2` or `D4`.
pub fn build_cartan(type_spec: &str) -> Result<CartanMatrix> {
    let spec = type_spec.trim();
    let mut chars = spec.chars();
    let family = chars
        .next()
        .map(|c| c.to_ascii_uppercase())
        .ok_or_else(|| Error::UnknownType(spec.to_string()))?;
    let rank: usize = chars
        .as_str()
        .parse()
        .map_err(|_| Error::UnknownType(spec.to_string()))?;
    let out_of_range = || Error::RankOutOfRange { family, rank };
    let mut a = vec![vec![0i64; rank]; rank];
    let chain = |a: &mut Vec<Vec<i64>>, n: usize| {
        for i in 0..n {
            a[i][i] = 2;
            if i + 1 < n {
                a[i][i + 1] = -1;
                a[i + 1][i] = -1;
            }
        }
    };
    match family {
        'A' => {
            if rank < 1 {
                return Err(out_of_range());
            }
            chain(&mut a, rank);
        }
        'B' | 'C' => {
            if rank < 2 {
                return Err(out_of_range());
            }
            chain(&mut a, rank);
            // B: alpha_n short; C: alpha_n long.
            if family == 'B' {
                a[rank - 2][rank - 1] = -2;
            } else {
                a[rank - 1][rank - 2] = -2;
            }
        }
        'D' => {
            if rank < 4 {
                return Err(out_of_range());
            }
            chain(&mut a, rank - 1);
            a[rank - 1][rank - 1] = 2;
            a[rank - 3][rank - 1] = -1;
            a[rank - 1][rank - 3] = -1;
        }
        'E' => {
            if !(6..=8).contains(&rank) {
                return Err(out_of_range());
            }
            for i in 0..rank {
                a[i][i] = 2;
            }
            let mut link = |i: usize, j: usize| {
                a[i - 1][j - 1] = -1;
                a[j - 1][i - 1] = -1;
            };
            link(1, 3);
            link(2, 4);
            for i in 3..rank {
                link(i, i + 1);
            }
        }
        'F' => {
            if rank != 4 {
                return Err(out_of_range());
            }
            chain(&mut a, 4);
            // alpha_1, alpha_2 long; alpha_3, alpha_4 short.
            a[1][2] = -2;
        }
        'G' => {
            if rank != 2 {
                return Err(out_of_range());
            }
            // alpha_1 short, alpha_2 long.
            a = vec![vec![2, -1], vec![-3, 2]];
        }
        _ => return Err(Error::UnknownType(spec.to_string())),
    }
    CartanMatrix::new(a)
}

/// Exact inverse by Gauss-Jordan elimination over the rationals.
pub fn inverse_cartan(cartan: &CartanMatrix) -> RationalMatrix {
    let n = cartan.rank();
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            (0..2 * n)
                .map(|j| {
                    if j < n {
                        BigRational::from_integer(cartan.get(i, j).into())
                    } else if j - n == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !m[r][col].is_zero())
            .expect("finite-type Cartan matrices are invertible");
        m.swap(pivot, col);
        let p = m[col][col].clone();
        for x in m[col].iter_mut() {
            *x /= &p;
        }
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = m[r][col].clone();
            for c in 0..2 * n {
                let delta = &factor * &m[col][c];
                m[r][c] -= delta;
            }
        }
    }
    RationalMatrix {
        entries: m.into_iter().map(|r| r[n..].to_vec()).collect(),
    }
}

/// `sum_jk x_j y_k Ainv_jk`.
pub fn inner_product(x: &Weight, y: &Weight, ainv: &RationalMatrix) -> Result<BigRational> {
    let n = ainv.rank();
    for w in [x, y] {
        if w.rank() != n {
            return Err(Error::RankMismatch { expected: n, got: w.rank() });
        }
    }
    let mut acc = BigRational::zero();
    for (j, &xj) in x.labels().iter().enumerate() {
        if xj == 0 {
            continue;
        }
        for (k, &yk) in y.labels().iter().enumerate() {
            if yk == 0 {
                continue;
            }
            acc += ainv.get(j, k) * BigRational::from_integer((xj * yk).into());
        }
    }
    Ok(acc)
}

pub fn weyl_vector(rank: usize) -> Weight {
    Weight(vec![1; rank])
}

/// Positive roots by root-string closure from the simple roots, ordered by
/// height and then lexicographically on simple-root coefficients.
pub fn positive_roots(cartan: &CartanMatrix) -> Vec<Root> {
    let n = cartan.rank();
    let d = cartan.symmetrizer().expect("validated Cartan matrix");
    let labels_of = |coeffs: &[i64]| -> Vec<i64> {
        (0..n).map(|j| (0..n).map(|i| coeffs[i] * cartan.get(i, j)).sum()).collect()
    };
    let unit = |i: usize| {
        let mut v = vec![0; n];
        v[i] = 1;
        v
    };
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut by_height: Vec<Vec<Vec<i64>>> = vec![(0..n).map(unit).collect()];
    for r in &by_height[0] {
        seen.insert(r.clone());
    }
    loop {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for beta in by_height.last().unwrap() {
            let labels = labels_of(beta);
            for i in 0..n {
                if *beta == unit(i) {
                    continue;
                }
                // p = length of the alpha_i string below beta
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if down.iter().any(|&c| c < 0) || !seen.contains(&down) {
                        break;
                    }
                    p += 1;
                }
                let q = p - labels[i];
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        if next.is_empty() {
            break;
        }
        by_height.push(next);
    }
    let mut roots: Vec<Vec<i64>> = by_height.into_iter().flatten().collect();
    roots.sort_by(|a, b| a.iter().sum::<i64>().cmp(&b.iter().sum::<i64>()).then_with(|| a.cmp(b)));
    roots
        .into_iter()
        .map(|coeffs| {
            // (alpha, alpha)/2 = sum_ij c_i c_j A_ij d_j / 2
            let mut half_norm = BigRational::zero();
            for i in 0..n {
                for j in 0..n {
                    half_norm += BigRational::from_integer((coeffs[i] * coeffs[j] * cartan.get(i, j)).into()) * &d[j];
                }
            }
            half_norm /= BigRational::from_integer(2.into());
            let co_coeffs = coeffs
                .iter()
                .zip(&d)
                .map(|(&c, di)| {
                    let x = BigRational::from_integer(c.into()) * di / &half_norm;
                    debug_assert!(x.is_integer());
                    i64::try_from(x.to_integer()).unwrap()
                })
                .collect();
            Root {
                labels: labels_of(&coeffs),
                coeffs,
                co_coeffs,
            }
        })
        .collect()
}

/// Everything derived from a Cartan matrix, computed once.
#[derive(Debug, Clone)]
pub struct Algebra {
    name: String,
    cartan: CartanMatrix,
    inverse: RationalMatrix,
    half_norms: Vec<BigRational>,
    /// `scale * d_i`, all integral.
    scaled_norms: Vec<i64>,
    roots: Vec<Root>,
    weyl_order: BigUint,
}

impl Algebra {
    pub fn from_type(type_spec: &str) -> Result<Self> {
        let cartan = build_cartan(type_spec)?;
        Ok(Self::with_name(type_spec.trim().to_ascii_uppercase(), cartan))
    }

    /// An algebra given by a raw Cartan matrix, named `cartan-<sha256 prefix>`
    /// of its entries.
    pub fn from_cartan(cartan: CartanMatrix) -> Self {
        use sha2::{Digest, Sha256};
        let mut hasher = Sha256::new();
        for row in cartan.entries() {
            for a in row {
                hasher.update(a.to_le_bytes());
            }
        }
        let digest = hasher.finalize();
        let hex: String = digest.iter().take(8).map(|b| format!("{b:02x}")).collect();
        Self::with_name(format!("cartan-{hex}"), cartan)
    }

    fn with_name(name: String, cartan: CartanMatrix) -> Self {
        let inverse = inverse_cartan(&cartan);
        let half_norms = cartan.symmetrizer().expect("validated Cartan matrix");
        let scale = half_norms
            .iter()
            .fold(BigInt::one(), |acc, d| num_integer::Integer::lcm(&acc, d.denom()));
        let scale = i64::try_from(scale).unwrap();
        let scaled_norms = half_norms
            .iter()
            .map(|d| i64::try_from((d * BigRational::from_integer(scale.into())).to_integer()).unwrap())
            .collect();
        let roots = positive_roots(&cartan);
        let all: Vec<usize> = (0..cartan.rank()).collect();
        let mut algebra = Algebra {
            name,
            cartan,
            inverse,
            half_norms,
            scaled_norms,
            roots,
            weyl_order: BigUint::one(),
        };
        algebra.weyl_order = algebra.parabolic_order(&all);
        algebra
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn rank(&self) -> usize {
        self.cartan.rank()
    }

    pub fn cartan(&self) -> &CartanMatrix {
        &self.cartan
    }

    pub fn inverse(&self) -> &RationalMatrix {
        &self.inverse
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn is_simply_laced(&self) -> bool {
        self.half_norms.iter().all(|d| d.is_one())
    }

    pub fn weyl_order(&self) -> &BigUint {
        &self.weyl_order
    }

    /// Dynkin labels of the simple root `alpha_i`.
    pub fn simple_root_labels(&self, i: usize) -> &[i64] {
        &self.cartan.entries[i]
    }

    pub fn weyl_vector(&self) -> Weight {
        weyl_vector(self.rank())
    }

    pub fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() != self.rank() {
            return Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            });
        }
        Ok(())
    }

    pub(crate) fn scaled_norms(&self) -> &[i64] {
        &self.scaled_norms
    }

    /// The invariant form `(x, y)` with long roots of squared length 2.
    pub fn form(&self, x: &Weight, y: &Weight) -> Result<BigRational> {
        self.check_rank(x)?;
        self.check_rank(y)?;
        let mut acc = BigRational::zero();
        for (i, &xi) in x.labels().iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (k, &yk) in y.labels().iter().enumerate() {
                if yk == 0 {
                    continue;
                }
                acc += self.inverse.get(i, k) * &self.half_norms[k] * BigRational::from_integer((xi * yk).into());
            }
        }
        Ok(acc)
    }

    /// Coordinates of a weight in the simple-root basis.
    pub fn root_coordinates(&self, w: &Weight) -> Vec<BigRational> {
        let n = self.rank();
        (0..n)
            .map(|j| {
                w.labels()
                    .iter()
                    .enumerate()
                    .fold(BigRational::zero(), |acc, (i, &m)| acc + self.inverse.get(i, j) * BigRational::from_integer(m.into()))
            })
            .collect()
    }

    /// Sum of the simple-root coordinates; increases along dominance order.
    pub fn level(&self, w: &Weight) -> BigRational {
        self.root_coordinates(w).into_iter().sum()
    }

    /// Whether `hi - lo` is a non-negative integer combination of simple roots.
    pub fn dominates(&self, hi: &Weight, lo: &Weight) -> bool {
        self.root_coordinates(&hi.sub(lo))
            .iter()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    /// Canonical emission order for weights: higher level first, then
    /// lexicographically larger labels first.
    pub fn sort_weights<'a, I>(&self, weights: I) -> Vec<Weight>
    where
        I: IntoIterator<Item = &'a Weight>,
    {
        let mut keyed: Vec<(BigRational, Weight)> = weights.into_iter().map(|w| (self.level(w), w.clone())).collect();
        keyed.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
        keyed.into_iter().map(|(_, w)| w).collect()
    }

    /// Order of the Weyl group generated by the simple reflections in `nodes`.
    pub(crate) fn parabolic_order(&self, nodes: &[usize]) -> BigUint {
        // Split into connected components and identify each by
        // (rank, number of positive roots), which determines |W|.
        let mut remaining: BTreeMap<usize, ()> = nodes.iter().map(|&i| (i, ())).collect();
        let mut order = BigUint::one();
        while let Some((&start, _)) = remaining.iter().next() {
            let mut component = vec![start];
            remaining.remove(&start);
            let mut k = 0;
            while k < component.len() {
                let i = component[k];
                let linked: Vec<usize> = remaining
                    .keys()
                    .copied()
                    .filter(|&j| self.cartan.get(i, j) != 0)
                    .collect();
                for j in linked {
                    remaining.remove(&j);
                    component.push(j);
                }
                k += 1;
            }
            let roots = self
                .roots
                .iter()
                .filter(|r| r.coeffs.iter().enumerate().all(|(i, &c)| c == 0 || component.contains(&i)))
                .count();
            order *= component_weyl_order(component.len(), roots);
        }
        order
    }

    pub fn roots_json(&self) -> Value {
        Value::Array(
            self.roots
                .iter()
                .map(|r| {
                    json!({
                        "coeffs": r.coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                        "labels": r.labels.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
                    })
                })
                .collect(),
        )
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

fn component_weyl_order(rank: usize, positive_roots: usize) -> BigUint {
    let n = rank;
    match (n, positive_roots) {
        (6, 36) => BigUint::from(51_840u32),
        (7, 63) => BigUint::from(2_903_040u32),
        (8, 120) => BigUint::from(696_729_600u32),
        (4, 24) => BigUint::from(1_152u32),
        (2, 6) => BigUint::from(12u32),
        (n, r) if r == n * (n + 1) / 2 => factorial(n + 1),
        (n, r) if r == n * n => (BigUint::one() << n) * factorial(n),
        (n, r) if r == n * (n - 1) => (BigUint::one() << (n - 1)) * factorial(n),
        _ => unreachable!("finite root systems are classified"),
    }
}

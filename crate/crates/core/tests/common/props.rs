//! Property checks shared by the proptest suites and the acceptance run.

use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use proptest::prelude::*;
use weylchar::charlib::{dim_identity, leading_term_ok, CharacterCache};
use weylchar::csop::Delta1Operator;
use weylchar::repth::{freudenthal, orbit_size, tensor_decompose, weyl_dim};
use weylchar::zpoly::{parse_poly, Monomial};
use weylchar::{Algebra, Weight, ZPolynomial};

pub const CASES: u32 = 200;

pub fn cache(ty: &str) -> &'static CharacterCache {
    static A2: OnceLock<CharacterCache> = OnceLock::new();
    static A3: OnceLock<CharacterCache> = OnceLock::new();
    static D4: OnceLock<CharacterCache> = OnceLock::new();
    let cell = match ty {
        "A2" => &A2,
        "A3" => &A3,
        "D4" => &D4,
        _ => unreachable!(),
    };
    cell.get_or_init(|| CharacterCache::new(Algebra::from_type(ty).unwrap()))
}

pub fn d4_operator() -> &'static Delta1Operator {
    static OP: OnceLock<Delta1Operator> = OnceLock::new();
    OP.get_or_init(|| {
        let c = cache("D4");
        let mut op = Delta1Operator::new(c.algebra()).unwrap();
        op.compute_missing(c.algebra(), c, |_, _| true).unwrap();
        op
    })
}

pub fn weight(rank: usize, max: i64) -> impl Strategy<Value = Weight> {
    prop::collection::vec(0..=max, rank).prop_map(Weight::new)
}

pub fn poly(rank: usize) -> impl Strategy<Value = ZPolynomial> {
    prop::collection::vec((prop::collection::vec(0u32..5, rank), -1000i64..1000), 0..30).prop_map(move |terms| {
        ZPolynomial::from_terms(rank, terms.into_iter().map(|(e, c)| (Monomial::new(e), BigInt::from(c))))
    })
}

pub fn path_independent(ty: &str, m: &Weight) -> Result<(), TestCaseError> {
    let c = cache(ty);
    let chi = c.character_poly(m).unwrap();
    let positive: Vec<usize> = (0..m.rank()).filter(|&i| m.labels()[i] > 0).collect();
    prop_assume!(positive.len() >= 2);
    for i in positive {
        prop_assert_eq!(c.character_via(m, i).unwrap(), chi.clone(), "{} {} via {}", ty, m, i + 1);
    }
    Ok(())
}

pub fn normalized(ty: &str, m: &Weight) -> Result<(), TestCaseError> {
    let c = cache(ty);
    let chi = c.character_poly(m).unwrap();
    prop_assert!(leading_term_ok(c.algebra(), m, &chi), "{} {}", ty, m);
    prop_assert!(dim_identity(c.algebra(), m, &chi).unwrap().holds, "{} {}", ty, m);
    Ok(())
}

pub fn freudenthal_sum(ty: &str, m: &Weight) -> Result<(), TestCaseError> {
    let alg = cache(ty).algebra();
    let table = freudenthal(alg, m).unwrap();
    let total: BigUint = table.entries().iter().map(|(mu, k)| k * orbit_size(alg, mu).unwrap()).sum();
    prop_assert_eq!(total, weyl_dim(alg, m).unwrap());
    Ok(())
}

pub fn tensor_sum(ty: &str, l: &Weight, r: &Weight) -> Result<(), TestCaseError> {
    let alg = cache(ty).algebra();
    let d = tensor_decompose(alg, l, r).unwrap();
    let total: BigUint = d.entries().iter().map(|(mu, k)| k * weyl_dim(alg, mu).unwrap()).sum();
    prop_assert_eq!(total, weyl_dim(alg, l).unwrap() * weyl_dim(alg, r).unwrap());
    Ok(())
}

pub fn round_trip(p: &ZPolynomial) -> Result<(), TestCaseError> {
    let text = p.to_string();
    prop_assert_eq!(&parse_poly(&text, p.rank()).unwrap(), p);
    prop_assert_eq!(&ZPolynomial::from_json(p.rank(), &p.to_json()).unwrap(), p);
    Ok(())
}

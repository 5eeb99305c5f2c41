use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::{rat, Poly};
use crate::{Error, Result};

/// One-sided irreducibility verdict for a monic integer polynomial.
///
/// `Irreducible` and `Reducible` are always correct; `Inconclusive` only
/// means no certificate was found.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum IrreducibilityCertificate {
    /// The polynomial is irreducible modulo `prime`, hence over the rationals.
    Irreducible { prime: u64 },
    /// `factor` is a nontrivial exact divisor.
    Reducible {
        #[serde(serialize_with = "display")]
        factor: Poly,
    },
    Inconclusive { primes_tried: Vec<u64> },
}

fn display<S: serde::Serializer>(p: &Poly, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&p.to_string())
}

impl IrreducibilityCertificate {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Self::Irreducible { .. })
    }
}

/// Primes strictly below `bound`.
pub fn primes_below(bound: u64) -> Vec<u64> {
    (2..bound).filter(|&p| is_prime(p)).collect()
}

fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| p % d != 0)
}

/// Candidate integer roots are tried up to this magnitude.
const ROOT_SEARCH_LIMIT: u64 = 1_000_000;

/// Looks for a certificate of (ir)reducibility over the rationals.
///
/// Integer roots (the only possible rational roots of a monic integer
/// polynomial) are searched first. Then, for each prime `q`, irreducibility
/// modulo `q` is tested by checking `gcd(x^(q^i) - x, p mod q) = 1` for all
/// `i <= deg/2`; a monic polynomial irreducible modulo some prime is
/// irreducible over the rationals.
pub fn irreducibility_certificate(
    p: &Poly,
    primes: &[u64],
) -> Result<IrreducibilityCertificate> {
    let coeffs = p
        .integer_coeffs()
        .filter(|_| p.is_monic())
        .ok_or_else(|| Error::Precondition("expected a monic integer polynomial".into()))?;
    let deg = coeffs.len() - 1;
    if deg == 0 {
        return Err(Error::Precondition("degree must be at least 1".into()));
    }
    if let Some(root) = integer_root(&coeffs, p) {
        return Ok(IrreducibilityCertificate::Reducible {
            factor: Poly::from_coeffs(vec![-rat(root), rat(1)]),
        });
    }
    let mut tried = Vec::new();
    for &q in primes {
        if !is_prime(q) || q >= 1 << 32 {
            return Err(Error::InvalidArgument(format!("{q} is not a prime below 2^32")));
        }
        tried.push(q);
        let reduced: Vec<u64> = coeffs
            .iter()
            .map(|c| c.mod_floor(&BigInt::from(q)).to_u64().expect("reduced residue"))
            .collect();
        if irreducible_mod(&reduced, q) {
            return Ok(IrreducibilityCertificate::Irreducible { prime: q });
        }
    }
    Ok(IrreducibilityCertificate::Inconclusive { primes_tried: tried })
}

fn integer_root(coeffs: &[BigInt], p: &Poly) -> Option<BigInt> {
    let c0 = &coeffs[0];
    if c0.is_zero() {
        return Some(BigInt::zero());
    }
    // Cauchy bound for a monic polynomial.
    let bound: BigInt = coeffs.iter().map(|c| c.abs()).max().unwrap_or_default() + 1u32;
    let limit = bound
        .min(c0.abs())
        .to_u64()
        .unwrap_or(u64::MAX)
        .min(ROOT_SEARCH_LIMIT);
    (1..=limit).map(BigInt::from).find_map(|d| {
        if !(c0 % &d).is_zero() {
            return None;
        }
        [d.clone(), -d]
            .into_iter()
            .find(|r| p.eval(&rat(r.clone())).is_zero())
    })
}

/// Polynomials over GF(q), lowest degree first, no trailing zeros.
type ModPoly = Vec<u64>;

fn trim(mut a: ModPoly) -> ModPoly {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn inv_mod(a: u64, q: u64) -> u64 {
    pow_mod(a, q - 2, q)
}

fn pow_mod(mut b: u64, mut e: u64, q: u64) -> u64 {
    let mut acc = 1u64;
    b %= q;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % q;
        }
        b = b * b % q;
        e >>= 1;
    }
    acc
}

fn rem(a: &[u64], m: &[u64], q: u64) -> ModPoly {
    let mut r = trim(a.to_vec());
    let dm = m.len() - 1;
    let inv = inv_mod(m[dm], q);
    while r.len() > dm {
        let lead = r[r.len() - 1] * inv % q;
        let shift = r.len() - 1 - dm;
        for (j, &c) in m.iter().enumerate() {
            r[shift + j] = (r[shift + j] + q - lead * c % q) % q;
        }
        r = trim(r);
    }
    r
}

fn mul_rem(a: &[u64], b: &[u64], m: &[u64], q: u64) -> ModPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % q;
        }
    }
    rem(&out, m, q)
}

fn pow_rem(base: &[u64], mut e: u64, m: &[u64], q: u64) -> ModPoly {
    let mut acc = vec![1u64];
    let mut b = rem(base, m, q);
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_rem(&acc, &b, m, q);
        }
        b = mul_rem(&b, &b, m, q);
        e >>= 1;
    }
    acc
}

fn gcd(a: &[u64], b: &[u64], q: u64) -> ModPoly {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while !b.is_empty() {
        let r = rem(&a, &b, q);
        a = b;
        b = r;
    }
    a
}

/// Distinct-degree test: no irreducible factor of degree `<= deg/2`.
fn irreducible_mod(p: &[u64], q: u64) -> bool {
    let p = trim(p.to_vec());
    let deg = p.len() - 1;
    let x: ModPoly = vec![0, 1];
    let mut h = rem(&x, &p, q);
    for _ in 1..=deg / 2 {
        h = pow_rem(&h, q, &p, q);
        // h - x
        let mut diff = h.clone();
        diff.resize(diff.len().max(2), 0);
        diff[1] = (diff[1] + q - 1) % q;
        let g = gcd(&p, &trim(diff), q);
        if g.len() != 1 {
            return false;
        }
    }
    true
}

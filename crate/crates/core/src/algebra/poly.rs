use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{rat, Rational};
use crate::{Error, Result};

/// Dense univariate polynomial over the rationals, lowest degree first.
///
/// Trailing zero coefficients are always stripped, so the zero polynomial
/// has an empty coefficient list and every other polynomial has a nonzero
/// leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `c * z^degree`.
    pub fn monomial(c: Rational, degree: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[BigInt]) -> Self {
        Self::from_coeffs(coeffs.iter().cloned().map(Rational::from_integer).collect())
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Builds `prod (z - r)` over the given roots.
    pub fn from_roots(roots: &[Rational]) -> Self {
        roots.iter().fold(Self::one(), |acc, r| {
            &acc * &Self::from_coeffs(vec![-r.clone(), Rational::one()])
        })
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `z^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lead) => {
                let lead = lead.clone();
                Self::from_coeffs(self.coeffs.iter().map(|c| c / &lead).collect())
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x * c).collect())
    }

    /// Euclidean division: returns `(q, r)` with `self = q * divisor + r` and
    /// `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Poly) -> Result<(Poly, Poly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let q = &rem[i] / &lead;
            for (j, d) in divisor.coeffs.iter().enumerate() {
                let idx = i - dd + j;
                rem[idx] = &rem[idx] - &q * d;
            }
            quot[i - dd] = q;
        }
        rem.truncate(dd);
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// True iff `self` divides `other` exactly.
    pub fn divides(&self, other: &Poly) -> Result<bool> {
        Ok(other.div_rem(self)?.1.is_zero())
    }

    /// Power sums `p_1..p_k` of the roots (with multiplicity) of a monic
    /// polynomial, via Newton's identities.
    pub fn root_power_sums(&self, k: usize) -> Result<Vec<Rational>> {
        let n = self
            .degree()
            .filter(|_| self.is_monic())
            .ok_or_else(|| Error::Precondition("power sums need a monic polynomial".into()))?;
        // e_j appear as (-1)^j times the coefficient of z^{n-j}.
        let e = |j: usize| -> Rational {
            if j > n {
                return Rational::zero();
            }
            let c = self.coeff(n - j);
            if j % 2 == 0 {
                c
            } else {
                -c
            }
        };
        let mut p: Vec<Rational> = Vec::with_capacity(k + 1);
        p.push(rat(n as i64));
        for m in 1..=k {
            let mut acc = Rational::zero();
            for i in 1..m {
                let term = e(i) * &p[m - i];
                if i % 2 == 1 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            let last = e(m) * rat(m as i64);
            if m % 2 == 1 {
                acc += last;
            } else {
                acc -= last;
            }
            p.push(acc);
        }
        p.remove(0);
        Ok(p)
    }
}

/// True iff `a` divides `b`; dividing by the zero polynomial is an error.
pub fn poly_divides(a: &Poly, b: &Poly) -> Result<bool> {
    a.divides(b)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        Poly::from_coeffs((0..len).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Poly {
    /// Renders in the variable `z`, highest degree first, e.g.
    /// `z^4 - z^3 - 4z^2 + 4z`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (deg, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let abs = c.abs();
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = deg == 0 || !abs.is_one();
            if show_coeff {
                if abs.is_integer() {
                    write!(f, "{}", abs.to_integer())?;
                } else {
                    write!(f, "({}/{})", abs.numer(), abs.denom())?;
                }
            }
            match deg {
                0 => {}
                1 => write!(f, "z")?,
                _ => write!(f, "z^{deg}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Poly {
        Poly::from_i64(c)
    }

    #[test]
    fn normalizes_trailing_zeros() {
        assert_eq!(p(&[1, 2, 0, 0]).degree(), Some(1));
        assert!(p(&[0, 0]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn divisibility_examples() {
        // (z - 1) | z^2 - 1
        assert!(poly_divides(&p(&[-1, 1]), &p(&[-1, 0, 1])).unwrap());
        // z^3 - 4z | z^4 - z^3 - 4z^2 + 4z
        assert!(poly_divides(&p(&[0, -4, 0, 1]), &p(&[0, 4, -4, -1, 1])).unwrap());
        // z^2 + 1 does not divide z^3
        assert!(!poly_divides(&p(&[1, 0, 1]), &p(&[0, 0, 0, 1])).unwrap());
    }

    #[test]
    fn divide_by_zero_poly_is_an_error() {
        assert!(matches!(
            poly_divides(&Poly::zero(), &p(&[1])),
            Err(Error::DivisionByZeroPoly)
        ));
    }

    #[test]
    fn long_division_reconstructs() {
        let a = p(&[3, -1, 4, 1, -5, 9]);
        let b = p(&[2, 0, 7]);
        let (q, r) = a.div_rem(&b).unwrap();
        assert!(r.degree().unwrap_or(0) < 2);
        assert_eq!(&(&q * &b) + &r, a);
    }

    #[test]
    fn display_matches_conventional_form() {
        assert_eq!(p(&[0, 4, -4, -1, 1]).to_string(), "z^4 - z^3 - 4z^2 + 4z");
        assert_eq!(p(&[0, 8, 0, -6, 0, 1]).to_string(), "z^5 - 6z^3 + 8z");
        assert_eq!(p(&[-1, 1]).to_string(), "z - 1");
        assert_eq!(p(&[1]).to_string(), "1");
        assert_eq!(Poly::zero().to_string(), "0");
    }

    #[test]
    fn newton_power_sums_of_known_roots() {
        // roots 2, -2, 0, 1
        let poly = Poly::from_roots(&[rat(2), rat(-2), rat(0), rat(1)]);
        let sums = poly.root_power_sums(4).unwrap();
        let expect: Vec<Rational> = (1..=4u32)
            .map(|k| rat(2i64.pow(k) + (-2i64).pow(k) + 1))
            .collect();
        assert_eq!(sums, expect);
    }
}

use num_traits::{One, Zero};

use super::{hankel, rank_exact, solve, ExactMatrix, Poly, Rational};
use crate::{Error, Result};

/// A homogeneous linear recurrence `y_t = c_1 y_{t-1} + ... + c_r y_{t-r}`
/// together with its characteristic polynomial
/// `z^r - c_1 z^{r-1} - ... - c_r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecurrenceSpec {
    coeffs: Vec<Rational>,
    charpoly: Poly,
}

impl RecurrenceSpec {
    /// `coeffs[i]` is `c_{i+1}`.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let r = coeffs.len();
        let mut cp = vec![Rational::zero(); r + 1];
        cp[r] = Rational::one();
        for (i, c) in coeffs.iter().enumerate() {
            cp[r - 1 - i] = -c.clone();
        }
        Self {
            coeffs,
            charpoly: Poly::from_coeffs(cp),
        }
    }

    /// Recovers the recurrence from a monic characteristic polynomial.
    pub fn from_charpoly(p: &Poly) -> Result<Self> {
        let r = p
            .degree()
            .filter(|_| p.is_monic())
            .ok_or_else(|| Error::Precondition("characteristic polynomial must be monic".into()))?;
        Ok(Self::new((0..r).map(|i| -p.coeff(r - 1 - i)).collect()))
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn charpoly(&self) -> &Poly {
        &self.charpoly
    }

    /// True iff every window of the sequence satisfies the recurrence.
    pub fn satisfied_by(&self, seq: &[Rational]) -> bool {
        let r = self.order();
        (r..seq.len()).all(|t| self.next_term(&seq[t - r..t]) == seq[t])
    }

    /// Next term given the `order` most recent terms (oldest first).
    fn next_term(&self, window: &[Rational]) -> Rational {
        let r = self.order();
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| c * &window[r - 1 - i])
            .sum()
    }
}

/// Outcome of a minimal-recurrence search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RecurrenceFit {
    Found(RecurrenceSpec),
    /// No recurrence of order at most `max_order` fits the prefix.
    NotDetermined,
}

impl RecurrenceFit {
    pub fn spec(&self) -> Option<&RecurrenceSpec> {
        match self {
            Self::Found(s) => Some(s),
            Self::NotDetermined => None,
        }
    }
}

/// Minimal-order linear recurrence satisfied by `prefix`, searching orders
/// `0..=max_order`.
///
/// At order `r` every available window `t = r..len` contributes one equation
/// in `c_1..c_r`; the first consistent order wins. Requiring
/// `len >= 2 * max_order` makes the answer unique whenever the true order is
/// at most `max_order`, and then the order equals the Hankel rank.
pub fn min_recurrence(prefix: &[Rational], max_order: usize) -> Result<RecurrenceFit> {
    if prefix.len() < 2 * max_order {
        return Err(Error::InsufficientData(format!(
            "deciding order <= {max_order} needs {} terms, got {}",
            2 * max_order,
            prefix.len()
        )));
    }
    for r in 0..=max_order {
        if r == 0 {
            if prefix.iter().all(Zero::is_zero) {
                return Ok(RecurrenceFit::Found(RecurrenceSpec::new(Vec::new())));
            }
            continue;
        }
        let eqs = prefix.len() - r;
        let rows: Vec<Vec<Rational>> = (r..prefix.len())
            .map(|t| (1..=r).map(|i| prefix[t - i].clone()).collect())
            .collect();
        let m = if eqs == 0 {
            ExactMatrix::zeros(0, r)
        } else {
            ExactMatrix::from_rows(rows)?
        };
        if let Some(c) = solve(&m, &prefix[r..])? {
            return Ok(RecurrenceFit::Found(RecurrenceSpec::new(c)));
        }
    }
    Ok(RecurrenceFit::NotDetermined)
}

/// Iterates the recurrence forward from `seed`, returning terms `0..=upto`.
pub fn extend_recurrence(
    spec: &RecurrenceSpec,
    seed: &[Rational],
    upto: usize,
) -> Result<Vec<Rational>> {
    let r = spec.order();
    if seed.len() < r {
        return Err(Error::InsufficientData(format!(
            "order-{r} recurrence needs {r} seed terms, got {}",
            seed.len()
        )));
    }
    let mut out: Vec<Rational> = seed.iter().take(upto + 1).cloned().collect();
    while out.len() <= upto {
        let t = out.len();
        let next = if r == 0 {
            Rational::zero()
        } else {
            spec.next_term(&out[t - r..t])
        };
        out.push(next);
    }
    Ok(out)
}

/// Rank of the largest square Hankel matrix the sequence fills.
pub fn hankel_rank(seq: &[Rational]) -> usize {
    let k = seq.len().div_ceil(2);
    if k == 0 {
        return 0;
    }
    let cols = seq.len() + 1 - k;
    hankel(seq, k, cols).map(|h| rank_exact(&h)).unwrap_or(0)
}

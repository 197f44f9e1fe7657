//! Pauli strings as pairs of exponent polynomials.

use std::fmt;

use crate::error::{Error, Result};

use super::LaurentPoly;

/// A product of generalized Paulis, one `Q^i P^j` factor per site, encoded up
/// to phase as two Laurent polynomials: the coefficient of `q^a` in `qpart`
/// (resp. `ppart`) is the Q (resp. P) exponent at site `a`.
///
/// Both parts share the modulus N; the pair of zero polynomials is the
/// identity operator.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OperatorString {
    qpart: LaurentPoly,
    ppart: LaurentPoly,
}

impl OperatorString {
    pub fn new(qpart: LaurentPoly, ppart: LaurentPoly) -> Result<Self> {
        if qpart.modulus() != ppart.modulus() {
            return Err(Error::ModulusMismatch {
                left: qpart.modulus(),
                right: ppart.modulus(),
            });
        }
        Ok(Self { qpart, ppart })
    }

    /// The identity operator (empty string).
    pub fn identity(modulus: u64) -> Result<Self> {
        Ok(Self {
            qpart: LaurentPoly::zero(modulus)?,
            ppart: LaurentPoly::zero(modulus)?,
        })
    }

    /// `Q^q_exp P^p_exp` inserted at one site.
    pub fn single_site(site: i64, q_exp: i64, p_exp: i64, modulus: u64) -> Result<Self> {
        Ok(Self {
            qpart: LaurentPoly::monomial(site, q_exp, modulus)?,
            ppart: LaurentPoly::monomial(site, p_exp, modulus)?,
        })
    }

    pub fn modulus(&self) -> u64 {
        self.qpart.modulus()
    }

    pub fn qpart(&self) -> &LaurentPoly {
        &self.qpart
    }

    pub fn ppart(&self) -> &LaurentPoly {
        &self.ppart
    }

    pub fn is_identity(&self) -> bool {
        self.qpart.is_zero() && self.ppart.is_zero()
    }

    /// Q and P exponents at one site.
    pub fn exponents_at(&self, site: i64) -> (u64, u64) {
        (self.qpart.coeff(site), self.ppart.coeff(site))
    }

    /// Smallest interval containing the supports of both parts.
    pub fn support(&self) -> Option<(i64, i64)> {
        match (self.qpart.support(), self.ppart.support()) {
            (None, s) | (s, None) => s,
            (Some((a, b)), Some((c, d))) => Some((a.min(c), b.max(d))),
        }
    }
}

impl fmt::Display for OperatorString {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        let (lo, hi) = self.support().expect("non-identity has support");
        let mut first = true;
        for site in lo..=hi {
            let (i, j) = self.exponents_at(site);
            if i == 0 && j == 0 {
                continue;
            }
            if !first {
                write!(f, " ")?;
            }
            first = false;
            if i > 0 {
                write!(f, "Q[{site}]")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
            if j > 0 {
                write!(f, "P[{site}]")?;
                if j > 1 {
                    write!(f, "^{j}")?;
                }
            }
        }
        Ok(())
    }
}

//! Laurent polynomials over `Z_N`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

use super::check_modulus;

/// A finitely supported function from lattice offset to `Z_N`, i.e. an element
/// of `Z_N[q, 1/q]`.
///
/// Stored as a dense coefficient window starting at `min_exp`; the window is
/// trimmed so that, unless the polynomial is zero, its first and last entries
/// are nonzero. All coefficients lie in `[0, N)`. Interior zeros are allowed
/// in storage; the sparse view [`LaurentPoly::terms`] skips them.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    modulus: u64,
    min_exp: i64,
    coeffs: Vec<u64>,
}

impl LaurentPoly {
    /// The zero polynomial (identity operator when used as an exponent part).
    pub fn zero(modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        Ok(Self { modulus, min_exp: 0, coeffs: Vec::new() })
    }

    /// The constant polynomial `c`.
    pub fn constant(c: i64, modulus: u64) -> Result<Self> {
        Self::monomial(0, c, modulus)
    }

    /// The monomial `c * q^exp`.
    pub fn monomial(exp: i64, c: i64, modulus: u64) -> Result<Self> {
        check_modulus(modulus)?;
        let c = c.rem_euclid(modulus as i64) as u64;
        if c == 0 {
            return Self::zero(modulus);
        }
        Ok(Self { modulus, min_exp: exp, coeffs: vec![c] })
    }

    /// Widest dense window [`LaurentPoly::from_pairs`] will allocate. User
    /// polynomials are tiny; anything near this is a typo'd exponent.
    pub const MAX_SPAN: i64 = 1 << 24;

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents accumulate; coefficients may be any integers and are reduced
    /// into `[0, N)`.
    pub fn from_pairs<I>(modulus: u64, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, i64)>,
    {
        check_modulus(modulus)?;
        let mut map: BTreeMap<i64, u64> = BTreeMap::new();
        let m = modulus as i64;
        for (exp, c) in pairs {
            let c = c.rem_euclid(m) as u64;
            let entry = map.entry(exp).or_insert(0);
            *entry = (*entry + c) % modulus;
        }
        map.retain(|_, c| *c != 0);
        let Some((&lo, _)) = map.iter().next() else {
            return Self::zero(modulus);
        };
        let (&hi, _) = map.iter().next_back().expect("nonempty");
        let span = hi.checked_sub(lo).filter(|s| *s < Self::MAX_SPAN).ok_or_else(|| {
            Error::Config(format!(
                "polynomial exponent span [{lo}, {hi}] exceeds the dense window limit {}",
                Self::MAX_SPAN
            ))
        })?;
        let mut coeffs = vec![0; span as usize + 1];
        for (exp, c) in map {
            coeffs[(exp - lo) as usize] = c;
        }
        Ok(Self { modulus, min_exp: lo, coeffs })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(min exponent, max exponent)` of the support, or `None` for zero.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some((self.min_exp, self.min_exp + self.coeffs.len() as i64 - 1))
        }
    }

    /// Largest absolute exponent in the support (0 for the zero polynomial).
    pub fn degree(&self) -> i64 {
        self.support().map_or(0, |(lo, hi)| lo.abs().max(hi.abs()))
    }

    /// Coefficient of `q^exp`, zero outside the stored window.
    pub fn coeff(&self, exp: i64) -> u64 {
        if self.coeffs.is_empty() || exp < self.min_exp {
            return 0;
        }
        let idx = (exp - self.min_exp) as usize;
        self.coeffs.get(idx).copied().unwrap_or(0)
    }

    /// Sparse view: `(exponent, coefficient)` pairs with nonzero coefficients,
    /// in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(move |(i, &c)| (self.min_exp + i as i64, c))
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.coeffs.iter().filter(|&&c| c != 0).count()
    }

    fn check_same_modulus(&self, other: &Self) -> Result<()> {
        if self.modulus != other.modulus {
            Err(Error::ModulusMismatch { left: self.modulus, right: other.modulus })
        } else {
            Ok(())
        }
    }

    fn trimmed(modulus: u64, mut min_exp: i64, mut coeffs: Vec<u64>) -> Self {
        let first = coeffs.iter().position(|&c| c != 0);
        match first {
            None => Self { modulus, min_exp: 0, coeffs: Vec::new() },
            Some(lo) => {
                let hi = coeffs.iter().rposition(|&c| c != 0).expect("nonempty");
                coeffs.truncate(hi + 1);
                coeffs.drain(..lo);
                min_exp += lo as i64;
                Self { modulus, min_exp, coeffs }
            }
        }
    }

    /// Coefficient-wise sum mod N.
    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let lo = self.min_exp.min(other.min_exp);
        let hi = (self.min_exp + self.coeffs.len() as i64)
            .max(other.min_exp + other.coeffs.len() as i64);
        let mut out = vec![0u64; (hi - lo) as usize];
        for (i, &c) in self.coeffs.iter().enumerate() {
            out[(self.min_exp - lo) as usize + i] = c;
        }
        for (i, &c) in other.coeffs.iter().enumerate() {
            let slot = &mut out[(other.min_exp - lo) as usize + i];
            *slot = (*slot + c) % self.modulus;
        }
        Ok(Self::trimmed(self.modulus, lo, out))
    }

    /// Additive inverse mod N.
    pub fn neg(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|&c| if c == 0 { 0 } else { self.modulus - c })
            .collect();
        Self { modulus: self.modulus, min_exp: self.min_exp, coeffs }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    /// Convolution of coefficient sequences, all arithmetic mod N.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_modulus(other)?;
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.modulus);
        }
        let n = self.modulus;
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                // a, b < 2^31 so a * b < 2^62 and the running sum stays < 2^63.
                let slot = &mut out[i + j];
                *slot = (*slot + a * b) % n;
            }
        }
        Ok(Self::trimmed(n, self.min_exp + other.min_exp, out))
    }

    /// Multiplies by the scalar `c` mod N.
    pub fn scale(&self, c: i64) -> Self {
        let c = c.rem_euclid(self.modulus as i64) as u64;
        let coeffs = self.coeffs.iter().map(|&a| a * c % self.modulus).collect();
        Self::trimmed(self.modulus, self.min_exp, coeffs)
    }

    /// The image under `q -> 1/q` (exponent negation).
    pub fn reflect(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let hi = self.min_exp + self.coeffs.len() as i64 - 1;
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { modulus: self.modulus, min_exp: -hi, coeffs }
    }

    /// True when the polynomial is invariant under `q -> 1/q`.
    pub fn is_palindromic(&self) -> bool {
        *self == self.reflect()
    }

    /// `Some((exponent, coefficient))` when the polynomial has exactly one
    /// nonzero term.
    pub fn as_monomial(&self) -> Option<(i64, u64)> {
        let mut terms = self.terms();
        let first = terms.next()?;
        if terms.next().is_none() {
            Some(first)
        } else {
            None
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, c)) in self.terms().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            match (exp, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "q")?,
                (1, c) => write!(f, "{c}*q")?,
                (e, 1) => write!(f, "q^{e}")?,
                (e, c) => write!(f, "{c}*q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({} mod {})", self, self.modulus)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(modulus: u64, pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_pairs(modulus, pairs.iter().copied()).unwrap()
    }

    #[test]
    fn add_cancels_to_identity_mod_2() {
        let one = LaurentPoly::constant(1, 2).unwrap();
        let sum = one.add(&one).unwrap();
        assert!(sum.is_zero());
        assert_eq!(sum.support(), None);
    }

    #[test]
    fn add_zero_is_identity() {
        let s = poly(5, &[(-1, 1), (0, 1), (1, 1)]);
        let z = LaurentPoly::zero(5).unwrap();
        assert_eq!(s.add(&z).unwrap(), s);
        assert_eq!(z.add(&s).unwrap(), s);
    }

    #[test]
    fn add_reduces_mod_5() {
        let a = poly(5, &[(1, 3)]);
        let b = poly(5, &[(1, 4)]);
        assert_eq!(a.add(&b).unwrap(), poly(5, &[(1, 2)]));
    }

    #[test]
    fn mul_by_one_is_identity() {
        let s = poly(3, &[(-1, 1), (0, 1), (1, 1)]);
        let one = LaurentPoly::constant(1, 3).unwrap();
        assert_eq!(s.mul(&one).unwrap(), s);
    }

    #[test]
    fn mul_convolves_mod_5() {
        let s = poly(5, &[(-1, 1), (0, 1), (1, 1)]);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, poly(5, &[(-2, 1), (-1, 2), (0, 3), (1, 2), (2, 1)]));
    }

    #[test]
    fn mul_convolves_mod_2() {
        let s = poly(2, &[(-1, 1), (0, 1), (1, 1)]);
        let sq = s.mul(&s).unwrap();
        assert_eq!(sq, poly(2, &[(-2, 1), (0, 1), (2, 1)]));
        assert_eq!(sq.weight(), 3);
    }

    #[test]
    fn modulus_mismatch_is_an_error() {
        let a = LaurentPoly::constant(1, 2).unwrap();
        let b = LaurentPoly::constant(1, 3).unwrap();
        assert!(matches!(a.add(&b), Err(crate::Error::ModulusMismatch { .. })));
        assert!(matches!(a.mul(&b), Err(crate::Error::ModulusMismatch { .. })));
    }

    #[test]
    fn bad_modulus_rejected() {
        assert!(LaurentPoly::zero(1).is_err());
        assert!(LaurentPoly::zero(1 << 31).is_err());
        assert!(LaurentPoly::zero((1 << 31) - 1).is_ok());
    }

    #[test]
    fn negative_coefficients_reduce() {
        let p = poly(7, &[(0, -1)]);
        assert_eq!(p.coeff(0), 6);
    }

    #[test]
    fn repeated_exponents_accumulate() {
        let p = poly(5, &[(2, 3), (2, 4), (0, 5)]);
        assert_eq!(p.coeff(2), 2);
        assert_eq!(p.coeff(0), 0);
        assert_eq!(p.support(), Some((2, 2)));
    }

    #[test]
    fn absurd_exponent_span_rejected() {
        let wide = LaurentPoly::from_pairs(5, [(0, 1), (i64::MAX, 1)]);
        assert!(matches!(wide, Err(crate::Error::Config(_))));
        let wide = LaurentPoly::from_pairs(5, [(i64::MIN, 1), (i64::MAX, 1)]);
        assert!(wide.is_err());
    }

    #[test]
    fn reflect_flips_support() {
        let p = poly(5, &[(-2, 1), (1, 3)]);
        let r = p.reflect();
        assert_eq!(r.support(), Some((-1, 2)));
        assert_eq!(r.coeff(-1), 3);
        assert_eq!(r.coeff(2), 1);
        assert!(!p.is_palindromic());
        assert!(poly(5, &[(-1, 2), (0, 1), (1, 2)]).is_palindromic());
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = poly(4, &[(0, 2), (3, 2)]);
        let q = poly(4, &[(0, 2), (3, 2)]);
        let sum = p.add(&q).unwrap();
        assert!(sum.is_zero());
        let partial = p.add(&poly(4, &[(0, 2)])).unwrap();
        assert_eq!(partial.support(), Some((3, 3)));
        assert_eq!(partial.weight(), 1);
    }

    #[test]
    fn as_monomial_detects_single_terms() {
        assert_eq!(poly(5, &[(2, 3)]).as_monomial(), Some((2, 3)));
        assert_eq!(poly(5, &[(0, 1), (1, 1)]).as_monomial(), None);
        assert_eq!(LaurentPoly::zero(5).unwrap().as_monomial(), None);
    }

    #[test]
    fn display_is_readable() {
        let s = poly(5, &[(-1, 1), (0, 1), (1, 2)]);
        assert_eq!(s.to_string(), "q^-1 + 1 + 2*q");
        assert_eq!(LaurentPoly::zero(5).unwrap().to_string(), "0");
    }
}

//! Exact mod-N Laurent-polynomial arithmetic, operator strings, and rule
//! matrices: the substrate everything else computes on.
//!
//! Multiplication of Pauli strings maps to addition of exponent vectors, so a
//! string `... Q_a^i P_a^j ...` is a pair of Laurent polynomials in the site
//! variable `q` with coefficients in `Z_N`. One time step of a CQCA is a 2x2
//! matrix of such polynomials acting on the pair.

mod operator;
mod poly;
mod rule;

pub use operator::OperatorString;
pub use poly::LaurentPoly;
pub use rule::{paper_rule, RuleFamily, RuleMatrix, RuleValidation};

pub(crate) const MAX_MODULUS: u64 = 1 << 31;

/// Checks `2 <= n < 2^31`, the range for which multiply-before-reduce fits in
/// 64-bit intermediates.
pub(crate) fn check_modulus(n: u64) -> crate::error::Result<()> {
    if !(2..MAX_MODULUS).contains(&n) {
        Err(crate::error::Error::BadModulus(n))
    } else {
        Ok(())
    }
}

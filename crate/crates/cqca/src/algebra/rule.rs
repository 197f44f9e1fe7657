//! Rule matrices: one discrete time step of a CQCA.

use std::fmt;
use std::path::Path;

use serde::Deserialize;

use crate::error::{Error, Result};

use super::{check_modulus, LaurentPoly, OperatorString};

/// Validation report for a candidate 2x2 rule.
///
/// `reversible` means the determinant is a unit: a single monomial whose
/// coefficient is coprime to N. `palindromic` means every entry is invariant
/// under `q -> 1/q`, which grants the spatial reflection symmetry the
/// dynamics module relies on. The two are independent properties.
#[derive(Clone, Debug)]
pub struct RuleValidation {
    pub reversible: bool,
    pub palindromic: bool,
    pub determinant: LaurentPoly,
}

impl RuleValidation {
    /// Reports on raw entries, which need not form a usable rule.
    pub fn of_entries(entries: &[[LaurentPoly; 2]; 2]) -> Result<Self> {
        let n = entries[0][0].modulus();
        for row in entries {
            for e in row {
                if e.modulus() != n {
                    return Err(Error::ModulusMismatch { left: n, right: e.modulus() });
                }
            }
        }
        let determinant = entries[0][0]
            .mul(&entries[1][1])?
            .sub(&entries[0][1].mul(&entries[1][0])?)?;
        let reversible = match determinant.as_monomial() {
            Some((_, c)) => gcd(c, n) == 1,
            None => false,
        };
        let palindromic = entries.iter().flatten().all(LaurentPoly::is_palindromic);
        Ok(Self { reversible, palindromic, determinant })
    }
}

/// A reversible, translation-invariant update rule: a 2x2 matrix of Laurent
/// polynomials over `Z_N` acting on (Q-exponent, P-exponent) pairs.
///
/// Construction requires reversibility (unit-monomial determinant); a
/// non-reversible matrix is rejected here rather than at application time.
/// Palindromicity is reported but not required; only the squared-commutator
/// machinery insists on it.
#[derive(Clone, Debug)]
pub struct RuleMatrix {
    name: String,
    entries: [[LaurentPoly; 2]; 2],
    validation: RuleValidation,
}

impl RuleMatrix {
    pub fn new(name: impl Into<String>, entries: [[LaurentPoly; 2]; 2]) -> Result<Self> {
        let name = name.into();
        let validation = RuleValidation::of_entries(&entries)?;
        if !validation.reversible {
            return Err(Error::NotReversible {
                name,
                det: validation.determinant.to_string(),
                modulus: entries[0][0].modulus(),
            });
        }
        Ok(Self { name, entries, validation })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn modulus(&self) -> u64 {
        self.entries[0][0].modulus()
    }

    pub fn entries(&self) -> &[[LaurentPoly; 2]; 2] {
        &self.entries
    }

    pub fn validate(&self) -> &RuleValidation {
        &self.validation
    }

    pub fn is_palindromic(&self) -> bool {
        self.validation.palindromic
    }

    /// Maximal absolute exponent over all entries: the interaction radius,
    /// hence the per-step growth rate of operator support.
    pub fn radius(&self) -> i64 {
        self.entries.iter().flatten().map(LaurentPoly::degree).max().unwrap_or(0)
    }

    /// One time step of Heisenberg evolution: the matrix-vector product over
    /// the Laurent ring (the overall phase is dropped; it cancels in every
    /// squared commutator).
    pub fn apply(&self, op: &OperatorString) -> Result<OperatorString> {
        if op.modulus() != self.modulus() {
            return Err(Error::ModulusMismatch { left: self.modulus(), right: op.modulus() });
        }
        let q = self.entries[0][0]
            .mul(op.qpart())?
            .add(&self.entries[0][1].mul(op.ppart())?)?;
        let p = self.entries[1][0]
            .mul(op.qpart())?
            .add(&self.entries[1][1].mul(op.ppart())?)?;
        OperatorString::new(q, p)
    }

    /// `t`-fold application of [`RuleMatrix::apply`].
    pub fn evolve(&self, op: &OperatorString, t: u32) -> Result<OperatorString> {
        let mut out = op.clone();
        for _ in 0..t {
            out = self.apply(&out)?;
        }
        Ok(out)
    }

    /// The inverse rule: adjugate times the inverted unit determinant.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.modulus();
        let (exp, c) = self
            .validation
            .determinant
            .as_monomial()
            .expect("constructed rules have unit determinants");
        let c_inv = mod_inverse(c, n).expect("unit coefficient is invertible");
        let det_inv = LaurentPoly::monomial(-exp, c_inv as i64, n)?;
        let adj = [
            [self.entries[1][1].clone(), self.entries[0][1].neg()],
            [self.entries[1][0].neg(), self.entries[0][0].clone()],
        ];
        let mut rows = Vec::with_capacity(2);
        for row in &adj {
            let mut cells = Vec::with_capacity(2);
            for e in row {
                cells.push(det_inv.mul(e)?);
            }
            rows.push(cells);
        }
        let entries = [
            [rows[0][0].clone(), rows[0][1].clone()],
            [rows[1][0].clone(), rows[1][1].clone()],
        ];
        Self::new(format!("{}^-1", self.name), entries)
    }
}

impl fmt::Display for RuleMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]] mod {}",
            self.entries[0][0],
            self.entries[0][1],
            self.entries[1][0],
            self.entries[1][1],
            self.modulus()
        )
    }
}

/// The built-in nearest-neighbor rule
/// `Q_a -> Q_{a-1} Q_a P_a Q_{a+1}`, `P_a -> Q_a^{N-1}`,
/// whose matrix is `[[1/q + 1 + q, N-1], [1, 0]]`.
pub fn paper_rule(modulus: u64) -> Result<RuleMatrix> {
    check_modulus(modulus)?;
    let s = LaurentPoly::from_pairs(modulus, [(-1, 1), (0, 1), (1, 1)])?;
    let entries = [
        [s, LaurentPoly::constant(-1, modulus)?],
        [LaurentPoly::constant(1, modulus)?, LaurentPoly::zero(modulus)?],
    ];
    RuleMatrix::new("paper", entries)
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Inverse of `a` mod `n` by the extended Euclidean algorithm.
fn mod_inverse(a: u64, n: u64) -> Option<u64> {
    let (mut r0, mut r1) = (n as i128, (a % n) as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    if r0 != 1 {
        return None;
    }
    Some(s0.rem_euclid(n as i128) as u64)
}

/// A rule source that can be instantiated at any modulus, so a single
/// definition drives scans over N. Coefficients in a custom definition are
/// reduced mod N at instantiation (write `-1` rather than a literal `N-1`
/// to keep a definition modulus-generic).
#[derive(Clone, Debug)]
pub enum RuleFamily {
    Paper,
    Custom {
        name: String,
        entries: [[Vec<(i64, i64)>; 2]; 2],
        default_modulus: u64,
    },
}

#[derive(Deserialize)]
struct RuleFileRepr {
    #[serde(rename = "N")]
    n: u64,
    entries: [[Vec<(i64, i64)>; 2]; 2],
    #[serde(default)]
    name: Option<String>,
}

impl RuleFamily {
    /// Parses a CLI rule source: the string `paper` selects the built-in
    /// rule, anything else is read as a JSON rule file path.
    pub fn from_source(source: &str) -> Result<Self> {
        if source == "paper" {
            Ok(Self::Paper)
        } else {
            Self::load(Path::new(source))
        }
    }

    /// Loads a JSON rule definition:
    /// `{"N": int, "entries": [[poly, poly], [poly, poly]]}`
    /// where each poly is a list of `[exponent, coefficient]` pairs.
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        let name = path
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("custom")
            .to_string();
        Self::from_json(&text, &name)
    }

    pub fn from_json(text: &str, fallback_name: &str) -> Result<Self> {
        let repr: RuleFileRepr =
            serde_json::from_str(text).map_err(|e| Error::RuleFile(e.to_string()))?;
        check_modulus(repr.n)?;
        Ok(Self::Custom {
            name: repr.name.unwrap_or_else(|| fallback_name.to_string()),
            entries: repr.entries,
            default_modulus: repr.n,
        })
    }

    pub fn name(&self) -> &str {
        match self {
            Self::Paper => "paper",
            Self::Custom { name, .. } => name,
        }
    }

    /// The modulus the definition itself carries (`None` for the built-in
    /// rule, which is modulus-generic).
    pub fn default_modulus(&self) -> Option<u64> {
        match self {
            Self::Paper => None,
            Self::Custom { default_modulus, .. } => Some(*default_modulus),
        }
    }

    /// Builds the rule at the given modulus.
    pub fn instantiate(&self, modulus: u64) -> Result<RuleMatrix> {
        match self {
            Self::Paper => paper_rule(modulus),
            Self::Custom { name, entries, .. } => {
                let mut cells = Vec::with_capacity(4);
                for row in entries {
                    for poly in row {
                        cells.push(LaurentPoly::from_pairs(modulus, poly.iter().copied())?);
                    }
                }
                let entries = [
                    [cells[0].clone(), cells[1].clone()],
                    [cells[2].clone(), cells[3].clone()],
                ];
                RuleMatrix::new(name.clone(), entries)
            }
        }
    }
}

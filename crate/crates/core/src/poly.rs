//! Polynomials in `q` with nonnegative integer coefficients (graded dimensions).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// `coeffs[k]` is the coefficient of `q^k`; no trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<u64>,
}

impl QPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_coeffs(mut coeffs: Vec<u64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn monomial(k: usize) -> Self {
        let mut c = vec![0; k + 1];
        c[k] = 1;
        Self { coeffs: c }
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn add_monomial(&mut self, k: usize) {
        if self.coeffs.len() <= k {
            self.coeffs.resize(k + 1, 0);
        }
        self.coeffs[k] += 1;
    }

    pub fn at_one(&self) -> u64 {
        self.coeffs.iter().sum()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// `q^n · p(1/q)`; `None` if `p` has a term above `q^n`.
    pub fn mirror(&self, n: usize) -> Option<Self> {
        if self.coeffs.len() > n + 1 {
            return None;
        }
        let mut c = vec![0; n + 1];
        for (k, &x) in self.coeffs.iter().enumerate() {
            c[n - k] = x;
        }
        Some(Self::from_coeffs(c))
    }
}

impl fmt::Display for QPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("q")?,
                (1, c) => write!(f, "{c}q")?,
                (k, 1) => write!(f, "q^{k}")?,
                (k, c) => write!(f, "{c}q^{k}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for QPoly {
    type Err = Error;

    /// Parses sums like `1+2q^2+q^4`.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = QPoly::zero();
        if s == "0" {
            return Ok(p);
        }
        let bad = || Error::Parse(format!("bad polynomial `{s}`"));
        for term in s.split('+') {
            let (coef, exp) = match term.find('q') {
                None => (term, 0),
                Some(i) => {
                    let rest = &term[i + 1..];
                    let exp = if rest.is_empty() {
                        1
                    } else {
                        rest.strip_prefix('^')
                            .ok_or_else(bad)?
                            .parse()
                            .map_err(|_| bad())?
                    };
                    (&term[..i], exp)
                }
            };
            let c: u64 = if coef.is_empty() {
                1
            } else {
                coef.parse().map_err(|_| bad())?
            };
            for _ in 0..c {
                p.add_monomial(exp);
            }
        }
        Ok(QPoly::from_coeffs(p.coeffs))
    }
}

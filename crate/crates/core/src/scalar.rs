//! Scalars and the ground field description.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational scalar.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn q_frac(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `7`, `-3`, `2/5`.
pub fn parse_q(s: &str) -> Result<Q> {
    let s = s.trim();
    let parse_int = |t: &str| {
        t.trim()
            .parse::<BigInt>()
            .map_err(|_| Error::Parse(format!("bad scalar `{s}`")))
    };
    match s.split_once('/') {
        Some((n, d)) => {
            let d = parse_int(d)?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Q::new(parse_int(n)?, d))
        }
        None => Ok(Q::from_integer(parse_int(s)?)),
    }
}

pub fn fmt_q(x: &Q) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Whether `x` is `1` or `-1`.
pub fn is_unit_sign(x: &Q) -> bool {
    x.abs().is_one()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldKind {
    Rational,
    PrimeField,
}

/// Ground field of a presentation. Characteristic two is never allowed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    kind: FieldKind,
    characteristic: u64,
}

impl FieldSpec {
    pub const RATIONAL: FieldSpec = FieldSpec {
        kind: FieldKind::Rational,
        characteristic: 0,
    };

    pub fn prime(p: u64) -> Result<Self> {
        if p == 2 {
            return Err(Error::InvalidField("characteristic two is excluded".into()));
        }
        if p < 3
            || (2..)
                .take_while(|d| d * d <= p)
                .any(|d| p.is_multiple_of(d))
        {
            return Err(Error::InvalidField(format!("{p} is not an odd prime")));
        }
        Ok(Self {
            kind: FieldKind::PrimeField,
            characteristic: p,
        })
    }

    pub fn kind(&self) -> FieldKind {
        self.kind
    }

    pub fn characteristic(&self) -> u64 {
        self.characteristic
    }

    /// Only the rationals are implemented as a computation backend.
    pub fn ensure_supported(&self) -> Result<()> {
        match self.kind {
            FieldKind::Rational => Ok(()),
            FieldKind::PrimeField => Err(Error::UnsupportedField(self.characteristic)),
        }
    }
}

impl Default for FieldSpec {
    fn default() -> Self {
        Self::RATIONAL
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            FieldKind::Rational => write!(f, "Q"),
            FieldKind::PrimeField => write!(f, "F{}", self.characteristic),
        }
    }
}

impl std::str::FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "Q" | "rational" => Ok(Self::RATIONAL),
            t => {
                let p = t
                    .strip_prefix('F')
                    .and_then(|p| p.parse().ok())
                    .ok_or_else(|| Error::Parse(format!("unknown field `{t}`")))?;
                Self::prime(p)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scalar_parsing() {
        assert_eq!(parse_q("-3/6").unwrap(), q_frac(-1, 2));
        assert_eq!(fmt_q(&q_frac(4, 2)), "2");
        assert!(parse_q("1/0").is_err());
    }

    #[test]
    fn field_spec_rejects_two() {
        assert!(FieldSpec::prime(2).is_err());
        assert!(FieldSpec::prime(9).is_err());
        assert_eq!(FieldSpec::prime(7).unwrap().characteristic(), 7);
        assert!("F3".parse::<FieldSpec>().is_ok());
        assert!(FieldSpec::RATIONAL.ensure_supported().is_ok());
    }
}

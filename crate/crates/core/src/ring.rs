use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Coefficient representative. Values over `Z/n` are kept in `0..n`.
pub type Coeff = i64;

/// The coefficient ring: the integers or the integers modulo `n >= 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Integers,
    IntegersMod(u32),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RingError {
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(i64),
    #[error("unknown ring `{0}` (expected `Z` or `Zmod:<n>`)")]
    Unknown(String),
}

impl RingSpec {
    pub fn modulo(n: u32) -> Result<RingSpec, RingError> {
        if n < 2 {
            return Err(RingError::BadModulus(n as i64));
        }
        Ok(RingSpec::IntegersMod(n))
    }

    /// Canonical representative of `c`.
    pub fn reduce(self, c: i128) -> Coeff {
        match self {
            RingSpec::Integers => Coeff::try_from(c).expect("integer coefficient overflow"),
            RingSpec::IntegersMod(n) => c.rem_euclid(n as i128) as Coeff,
        }
    }

    pub fn add(self, a: Coeff, b: Coeff) -> Coeff {
        self.reduce(a as i128 + b as i128)
    }

    pub fn mul(self, a: Coeff, b: Coeff) -> Coeff {
        self.reduce(a as i128 * b as i128)
    }

    pub fn neg(self, a: Coeff) -> Coeff {
        self.reduce(-(a as i128))
    }

    pub fn one(self) -> Coeff {
        1
    }

    pub fn is_zero(self, a: Coeff) -> bool {
        self.reduce(a as i128) == 0
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Integers => f.write_str("Z"),
            RingSpec::IntegersMod(n) => write!(f, "Zmod:{n}"),
        }
    }
}

impl FromStr for RingSpec {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "Z" {
            return Ok(RingSpec::Integers);
        }
        let n = s
            .strip_prefix("Zmod:")
            .and_then(|n| n.parse::<i64>().ok())
            .ok_or_else(|| RingError::Unknown(s.to_string()))?;
        if !(2..=u32::MAX as i64).contains(&n) {
            return Err(RingError::BadModulus(n));
        }
        Ok(RingSpec::IntegersMod(n as u32))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let z4 = RingSpec::modulo(4).unwrap();
        assert_eq!(z4.add(3, 3), 2);
        assert_eq!(z4.neg(1), 3);
        assert_eq!(z4.mul(2, 2), 0);
        assert!(z4.is_zero(8));
        assert_eq!(RingSpec::Integers.neg(5), -5);
        let z2 = RingSpec::modulo(2).unwrap();
        assert_eq!(z2.add(1, 1), 0);
    }

    #[test]
    fn parsing() {
        assert_eq!("Z".parse::<RingSpec>().unwrap(), RingSpec::Integers);
        assert_eq!("Zmod:4".parse::<RingSpec>().unwrap(), RingSpec::IntegersMod(4));
        assert_eq!("Zmod:1".parse::<RingSpec>(), Err(RingError::BadModulus(1)));
        assert!("Q".parse::<RingSpec>().is_err());
        assert!(RingSpec::modulo(0).is_err());
    }
}

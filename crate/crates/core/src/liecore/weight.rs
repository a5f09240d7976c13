use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactalg::json::{rational_from_str, rational_to_string};
use crate::{q, Rational};

/// A weight in fundamental-weight coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight(Vec<Rational>);

impl Weight {
    pub fn new(coords: Vec<Rational>) -> Self {
        Weight(coords)
    }

    pub fn from_ints(coords: &[i64]) -> Self {
        Weight(coords.iter().map(|&c| q(c)).collect())
    }

    pub fn zero(rank: usize) -> Self {
        Weight(vec![Rational::zero(); rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_integral(&self) -> bool {
        self.0.iter().all(|c| c.is_integer())
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_dominant_integral(&self) -> bool {
        self.is_integral() && self.is_dominant()
    }

    /// Integer coordinates, if integral and in `i64` range.
    pub fn to_ints(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| if c.is_integer() { c.to_integer().to_i64() } else { None }).collect()
    }

    pub fn scale(&self, s: &Rational) -> Weight {
        Weight(self.0.iter().map(|c| c * s).collect())
    }

    pub fn check_rank(&self, rank: usize) -> Result<()> {
        if self.rank() != rank {
            return Err(Error::RankMismatch { expected: rank, found: self.rank() });
        }
        Ok(())
    }

    /// Parses comma-separated rationals, e.g. `"1,1"` or `"1/3"`.
    pub fn parse(text: &str) -> Result<Weight> {
        let coords = text
            .split(',')
            .map(|s| rational_from_str(s.trim()))
            .collect::<Result<Vec<_>>>()?;
        if coords.is_empty() {
            return Err(Error::Parse("empty weight".into()));
        }
        Ok(Weight(coords))
    }

    pub fn to_strings(&self) -> Vec<String> {
        self.0.iter().map(rational_to_string).collect()
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.len() == 1 {
            return write!(f, "{}", self.0[0]);
        }
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        assert_eq!(self.rank(), rhs.rank(), "weight rank mismatch");
        Weight(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// Serialized as an array of rational strings.
impl Serialize for Weight {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_strings().serialize(s)
    }
}

impl<'de> Deserialize<'de> for Weight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v: Vec<String> = Vec::deserialize(d)?;
        v.iter()
            .map(|s| rational_from_str(s))
            .collect::<Result<Vec<_>>>()
            .map(Weight)
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qf;

    #[test]
    fn predicates() {
        let w = Weight::new(vec![q(1), qf(-1, 2)]);
        assert!(!w.is_integral());
        assert!(!w.is_dominant());
        assert!(Weight::from_ints(&[0, 3]).is_dominant_integral());
        assert_eq!(Weight::from_ints(&[2, -1]).to_ints(), Some(vec![2, -1]));
    }

    #[test]
    fn parse_and_display() {
        let w = Weight::parse("1, -2/4").unwrap();
        assert_eq!(w.to_string(), "(1,-1/2)");
        assert_eq!(Weight::parse("5").unwrap().to_string(), "5");
        assert!(Weight::parse("a").is_err());
    }
}

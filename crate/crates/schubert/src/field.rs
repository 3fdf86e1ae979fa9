//! Ground fields for every computation in this crate: arbitrary-precision
//! rationals kept in lowest terms, and prime fields with a runtime modulus.
//! All arithmetic is exact; there is no floating point anywhere.

use std::fmt;
use std::str::FromStr;

use num::{BigInt, BigRational, One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Modulus used by the command line and the sweeps when none is given.
pub const DEFAULT_PRIME: u64 = 1009;

/// The active ground field.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(u64),
}

impl FieldSpec {
    pub fn zero(&self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(&self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match *self {
            FieldSpec::Rational => Scalar::Rational(BigRational::from(BigInt::from(n))),
            FieldSpec::Prime(p) => {
                let m = n.rem_euclid(p as i64);
                Scalar::Prime {
                    value: m as u64,
                    modulus: p,
                }
            }
        }
    }

    /// Parses one entry of a matrix file: `a/b` over the rationals, an
    /// integer over either field.
    pub fn parse_scalar(&self, s: &str) -> Result<Scalar> {
        match *self {
            FieldSpec::Rational => BigRational::from_str(s)
                .map(Scalar::Rational)
                .map_err(|e| Error::Parse(format!("bad rational {s:?}: {e}"))),
            FieldSpec::Prime(p) => {
                let n: i128 = s
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad residue {s:?}: {e}")))?;
                let m = n.rem_euclid(p as i128);
                Ok(Scalar::Prime {
                    value: m as u64,
                    modulus: p,
                })
            }
        }
    }

    /// Small random element. Over the rationals these are small integers so
    /// that randomized sweeps stay fast; over a prime field they are uniform.
    pub fn random(&self, rng: &mut impl rand::Rng) -> Scalar {
        match *self {
            FieldSpec::Rational => self.from_i64(rng.gen_range(-9..=9)),
            FieldSpec::Prime(p) => Scalar::Prime {
                value: rng.gen_range(0..p),
                modulus: p,
            },
        }
    }

    pub fn name(&self) -> String {
        match self {
            FieldSpec::Rational => "Q".to_string(),
            FieldSpec::Prime(p) => format!("Fp {p}"),
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// Accepts the command-line spellings `q` and `fp:<p>`.
impl FromStr for FieldSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("q") {
            return Ok(FieldSpec::Rational);
        }
        if let Some(rest) = t
            .strip_prefix("fp:")
            .or_else(|| t.strip_prefix("Fp:"))
            .or_else(|| t.strip_prefix("FP:"))
        {
            let p: u64 = rest
                .parse()
                .map_err(|e| Error::Parse(format!("bad modulus {rest:?}: {e}")))?;
            if !is_prime(p) {
                return Err(Error::Config(format!("{p} is not prime")));
            }
            return Ok(FieldSpec::Prime(p));
        }
        Err(Error::Parse(format!(
            "unknown field {t:?}, expected `q` or `fp:<prime>`"
        )))
    }
}

impl Serialize for FieldSpec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            FieldSpec::Rational => s.serialize_str("q"),
            FieldSpec::Prime(p) => s.serialize_str(&format!("fp:{p}")),
        }
    }
}

impl<'de> Deserialize<'de> for FieldSpec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// One field element. Every scalar knows which field it lives in; mixing
/// fields is a programming error and panics.
#[derive(Clone, PartialEq, Eq, Debug, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Prime { value: u64, modulus: u64 },
}

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match self {
            Scalar::Rational(_) => FieldSpec::Rational,
            Scalar::Prime { modulus, .. } => FieldSpec::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Prime { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::Prime { value, .. } => *value == 1,
        }
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Prime {
                    value: ((*a as u128 + *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        match (self, other) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Prime { value: a, modulus: p }, Scalar::Prime { value: b, modulus: q }) => {
                assert_eq!(p, q, "mixed moduli");
                Scalar::Prime {
                    value: ((*a as u128 * *b as u128) % *p as u128) as u64,
                    modulus: *p,
                }
            }
            _ => panic!("mixed fields"),
        }
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            },
        }
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match self {
            Scalar::Rational(a) => Scalar::Rational(a.recip()),
            Scalar::Prime { value, modulus } => Scalar::Prime {
                value: mod_pow(*value, modulus - 2, *modulus),
                modulus: *modulus,
            },
        })
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv().expect("division by zero"))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::Prime { value, .. } => write!(f, "{value}"),
        }
    }
}

fn mod_pow(base: u64, mut exp: u64, modulus: u64) -> u64 {
    let m = modulus as u128;
    let mut acc: u128 = 1;
    let mut b = base as u128 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_stay_in_lowest_terms() {
        let f = FieldSpec::Rational;
        let x = f.parse_scalar("2/4").unwrap();
        assert_eq!(x.to_string(), "1/2");
        let y = f.parse_scalar("-3/-6").unwrap();
        assert_eq!(y.to_string(), "1/2");
        assert_eq!(x, y);
        let z = f.parse_scalar("7/1").unwrap();
        assert_eq!(z.to_string(), "7");
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = FieldSpec::Prime(1009);
        let a = f.from_i64(-1);
        assert_eq!(a.to_string(), "1008");
        let b = f.from_i64(2);
        assert!(a.add(&b).is_one());
        let inv = b.inv().unwrap();
        assert!(b.mul(&inv).is_one());
        assert!(f.zero().inv().is_none());
    }

    #[test]
    fn inverses_over_both_fields() {
        for f in [FieldSpec::Rational, FieldSpec::Prime(7)] {
            for n in 1..6 {
                let x = f.from_i64(n);
                assert!(x.mul(&x.inv().unwrap()).is_one(), "field {f}, n {n}");
            }
        }
    }

    #[test]
    fn field_spec_parsing() {
        assert_eq!("q".parse::<FieldSpec>().unwrap(), FieldSpec::Rational);
        assert_eq!(
            "fp:1009".parse::<FieldSpec>().unwrap(),
            FieldSpec::Prime(1009)
        );
        assert!("fp:1000".parse::<FieldSpec>().is_err());
        assert!("r".parse::<FieldSpec>().is_err());
    }

    #[test]
    fn primality() {
        assert!(is_prime(2));
        assert!(is_prime(1009));
        assert!(is_prime(65537));
        assert!(!is_prime(1));
        assert!(!is_prime(1001));
    }
}

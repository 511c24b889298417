//! Arbitrary-precision rational scalars and their string-based wire form.
//!
//! Every coefficient in the crate is a [`Rat`]: always reduced, denominator
//! positive. Serialization keeps numerator and denominator as decimal strings
//! so that values survive JSON round-trips without precision loss.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::str::FromStr;

pub type Rat = num_rational::BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat_int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

/// Shorthand for `num/den`; panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Wire form of a rational: `{"num": "-3", "den": "7"}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatRepr {
    pub num: String,
    pub den: String,
}

impl From<&Rat> for RatRepr {
    fn from(r: &Rat) -> Self {
        RatRepr {
            num: r.numer().to_string(),
            den: r.denom().to_string(),
        }
    }
}

impl TryFrom<&RatRepr> for Rat {
    type Error = String;

    fn try_from(repr: &RatRepr) -> Result<Self, String> {
        let num = BigInt::from_str(&repr.num).map_err(|e| format!("bad numerator: {e}"))?;
        let den = BigInt::from_str(&repr.den).map_err(|e| format!("bad denominator: {e}"))?;
        if den.is_zero() {
            return Err("zero denominator".into());
        }
        Ok(Rat::new(num, den))
    }
}

/// Parse "p", "p/q", or a plain decimal integer.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let num = BigInt::from_str(p.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))?;
        let den = BigInt::from_str(q.trim()).map_err(|e| format!("bad rational {s:?}: {e}"))?;
        if den.is_zero() {
            return Err(format!("bad rational {s:?}: zero denominator"));
        }
        Ok(Rat::new(num, den))
    } else {
        let num = BigInt::from_str(s).map_err(|e| format!("bad rational {s:?}: {e}"))?;
        Ok(Rat::from_integer(num))
    }
}

/// Render without a denominator when integral: "5", "-2/3".
pub fn format_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// True when `r` is a (possibly negative) integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sign as -1, 0, 1.
pub fn sign(r: &Rat) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_and_positive_denominator() {
        let r = rat(4, -6);
        assert_eq!(r.numer().to_string(), "-2");
        assert_eq!(r.denom().to_string(), "3");
    }

    #[test]
    fn parse_and_format_round_trip() {
        for s in ["0", "-7", "3/4", "-22/7"] {
            let r = parse_rat(s).unwrap();
            assert_eq!(format_rat(&r), s);
        }
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn repr_round_trip() {
        let r = rat(-35, 14);
        let repr = RatRepr::from(&r);
        assert_eq!(Rat::try_from(&repr).unwrap(), r);
    }
}

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational, always reduced with a positive denominator.
pub type Rat = BigRational;

/// `num/den` from small integers. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"7"`, `"-3/2"` or a finite decimal such as `"1.185"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = match int {
            "" | "-" | "+" => BigInt::zero(),
            _ => int.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac_part: BigInt = frac.parse().map_err(|_| bad())?;
        let mag =
            Rat::from_integer(int_part.magnitude().clone().into()) + Rat::new(frac_part, scale);
        return Ok(if negative { -mag } else { mag });
    }
    s.parse::<BigInt>()
        .map(Rat::from_integer)
        .map_err(|_| bad())
}

/// `"a"` for integers, `"a/b"` otherwise.
pub fn format_rat(x: &Rat) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!(parse_rat("7").unwrap(), rat(7, 1));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(parse_rat("1.185").unwrap(), rat(237, 200));
        assert_eq!(parse_rat("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat(".25").unwrap(), rat(1, 4));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.").is_err());
    }

    #[test]
    fn formats() {
        assert_eq!(format_rat(&rat(32, 27)), "32/27");
        assert_eq!(format_rat(&rat(-4, 2)), "-2");
    }
}

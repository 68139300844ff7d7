//! Exact rational numbers used for every worth, gauge and imputation.
//!
//! Values are `num_rational::BigRational`, which keeps numerator and
//! denominator reduced with a positive denominator, so structural equality
//! is numeric equality.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `numer / denom`, reduced. Panics on a zero denominator.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn from_usize(value: usize) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

pub fn sum<'a, I: IntoIterator<Item = &'a Rational>>(values: I) -> Rational {
    values.into_iter().fold(Rational::zero(), |acc, x| acc + x)
}

/// Decimal rendering for display only, rounded half away from zero.
pub fn to_decimal(value: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10u32).pow(digits as u32);
    let scaled = value * Rational::from_integer(scale.clone());
    let rounded = scaled.round().to_integer();
    let negative = rounded.is_negative();
    let magnitude = rounded.abs();
    let whole = &magnitude / &scale;
    let frac = &magnitude % &scale;
    let sign = if negative { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{whole}")
    } else {
        format!(
            "{sign}{whole}.{:0>width$}",
            frac.to_string(),
            width = digits
        )
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    value.to_f64().unwrap_or(f64::NAN)
}

/// Space-separated `p/q` rendering of a vector.
pub fn format_vector(values: &[Rational]) -> String {
    values
        .iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        assert_eq!(ratio(6, -8), ratio(-3, 4));
        assert_eq!(ratio(0, 5), int(0));
        assert_eq!(ratio(0, 5).denom(), &BigInt::from(1));
        assert_eq!(ratio(3, 8).to_string(), "3/8");
        assert_eq!(int(4).to_string(), "4");
    }

    #[test]
    fn parses_its_own_rendering() {
        for r in [ratio(17, 6), ratio(-2, 5), int(0), int(12)] {
            let back: Rational = r.to_string().parse().unwrap();
            assert_eq!(back, r);
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(3, 8), 4), "0.3750");
        assert_eq!(to_decimal(&ratio(2, 3), 3), "0.667");
        assert_eq!(to_decimal(&ratio(-17, 6), 2), "-2.83");
        assert_eq!(to_decimal(&int(4), 0), "4");
    }
}

//! Closed-form magic constants.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::FamilySpec;

/// An exact rational `num / den` with `den > 0`, in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Ratio {
    pub num: i64,
    pub den: i64,
}

impl Ratio {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num.unsigned_abs(), den.unsigned_abs()).max(1) as i64;
        let sign = if den < 0 { -1 } else { 1 };
        Ratio { num: sign * num / g, den: sign * den / g }
    }

    pub fn integer(&self) -> Option<i64> {
        (self.den == 1).then_some(self.num)
    }
}

impl fmt::Display for Ratio {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// The closed-form constant for `spec`, as an exact rational.
///
/// Every family yields an integer on its parameter range except the fan
/// union, whose `(s+k)17n/2` term is a half-integer when `n` and `s+k` are
/// both odd.
pub fn closed_form_constant(spec: &FamilySpec) -> Result<Ratio> {
    spec.validate()?;
    let r = match *spec {
        FamilySpec::Fans { m, n } => {
            let (m, n) = (i64::from(m), i64::from(n));
            Ratio::new(m * (34 * n + 5 + alt_sign(n)) + 12, 4)
        }
        FamilySpec::Ladders { m, n } => {
            let (m, n) = (i64::from(m), i64::from(n));
            Ratio::new(m * (17 * n - 2) + 4, 1)
        }
        FamilySpec::TriangularLadders { m, n } => {
            let (m, n) = (i64::from(m), i64::from(n));
            Ratio::new(14 * m * n - 3 * m + 3, 1)
        }
        FamilySpec::Wheels { m, n } => {
            let (m, n) = (i64::from(m), i64::from(n));
            if n % 2 == 1 {
                Ratio::new(m * (13 * n + 11) + 6, 2)
            } else if n % 4 == 0 {
                // m⌈(n-1)/2⌉ with n even is mn/2
                Ratio::new(4 * m * (n / 2) + m * (27 * n + 16) + 12, 4)
            } else {
                Ratio::new(m * (29 * n + 18) + 12, 4)
            }
        }
        FamilySpec::Books { m, n } => {
            let (m, n) = (i64::from(m), i64::from(n));
            if n % 2 == 0 {
                Ratio::new(15 * m * n + 17 * m + 4, 1)
            } else {
                Ratio::new(m * (29 * n + 35) + 8, 2)
            }
        }
        FamilySpec::Antiprism { l, m, n } => {
            let (l, m, n) = (i64::from(l), i64::from(m), i64::from(n));
            Ratio::new(l * m * (9 * n - 4) + 3, 1)
        }
        FamilySpec::FanUnion { s, k, n } => {
            let (s, k, n) = (i64::from(s), i64::from(k), i64::from(n));
            Ratio::new((s + k) * 17 * n + 2 * (s - 7 * k + 3), 2)
        }
        FamilySpec::LadderUnion { s, k, n } => {
            let (s, k, n) = (i64::from(s), i64::from(k), i64::from(n));
            Ratio::new(4 + 17 * n * (s + k) - 19 * k - 2 * s, 1)
        }
    };
    Ok(r)
}

/// The closed-form constant as an integer; `Indivisible` when it is not one.
pub fn predicted_constant(spec: &FamilySpec) -> Result<u64> {
    let r = closed_form_constant(spec)?;
    match r.integer() {
        Some(c) if c > 0 => Ok(c as u64),
        Some(c) => Err(Error::InvalidArgument(format!("non-positive constant {c} for {spec}"))),
        None => Err(Error::Indivisible { what: "closed-form constant", numerator: r.num, denominator: r.den }),
    }
}

/// The constant actually attained by the shipped construction. Equal to
/// [`predicted_constant`] everywhere except the fan union with odd `n` and
/// `s != k`, where the corrected even-position offset shifts it by
/// `(s - k)/2` from the closed-form value.
pub fn construction_constant(spec: &FamilySpec) -> Result<u64> {
    match *spec {
        FamilySpec::FanUnion { s, k, n } if n % 2 == 1 && s != k => {
            spec.validate()?;
            let (s, k, n) = (i64::from(s), i64::from(k), i64::from(n));
            let offset = s * ((n + 1) / 2) + k * (n / 2);
            Ok((8 * n * (s + k) + s - 7 * k + 3 + offset) as u64)
        }
        _ => predicted_constant(spec),
    }
}

fn alt_sign(n: i64) -> i64 {
    if n % 2 == 1 {
        1
    } else {
        -1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spot_constants() {
        assert_eq!(predicted_constant(&FamilySpec::Fans { m: 2, n: 3 }), Ok(57));
        assert_eq!(predicted_constant(&FamilySpec::Fans { m: 2, n: 4 }), Ok(73));
        assert_eq!(predicted_constant(&FamilySpec::Wheels { m: 2, n: 6 }), Ok(99));
        assert_eq!(predicted_constant(&FamilySpec::Wheels { m: 2, n: 3 }), Ok(53));
        assert_eq!(predicted_constant(&FamilySpec::Antiprism { l: 2, m: 3, n: 3 }), Ok(141));
        assert_eq!(predicted_constant(&FamilySpec::Ladders { m: 3, n: 5 }), Ok(253));
    }

    #[test]
    fn half_integer_fan_union() {
        let spec = FamilySpec::FanUnion { s: 1, k: 2, n: 3 };
        assert_eq!(closed_form_constant(&spec).unwrap(), Ratio::new(133, 2));
        assert!(matches!(predicted_constant(&spec), Err(Error::Indivisible { .. })));
        assert_eq!(closed_form_constant(&spec).unwrap().to_string(), "133/2");
    }

    #[test]
    fn construction_matches_closed_form_when_balanced() {
        for n in 3..=12 {
            for s in 1..=4 {
                for k in 1..=4 {
                    let spec = FamilySpec::FanUnion { s, k, n };
                    let built = construction_constant(&spec).unwrap() as i64;
                    let closed = closed_form_constant(&spec).unwrap();
                    if n % 2 == 0 || s == k {
                        assert_eq!(Ratio::new(built, 1), closed);
                    } else {
                        // off by (s - k)/2
                        assert_eq!(Ratio::new(2 * built - (i64::from(s) - i64::from(k)), 2), closed);
                    }
                }
            }
        }
    }

    #[test]
    fn ladder_union_degenerates_to_ladders() {
        // 4 + 17n(s+k) - 19k - 2s at k = 0 is m(17n - 2) + 4 with m = s
        for s in 2..=5i64 {
            for n in 2..=12i64 {
                assert_eq!(4 + 17 * n * s - 2 * s, s * (17 * n - 2) + 4);
            }
        }
    }

    #[test]
    fn out_of_range() {
        assert!(matches!(predicted_constant(&FamilySpec::Fans { m: 1, n: 3 }), Err(Error::ParameterOutOfRange { .. })));
    }
}

//! The graph families covered by the constructions, with their integer
//! parameters and closed-form sizes.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Which family a [`FamilySpec`] describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Fans,
    Ladders,
    TriangularLadders,
    Wheels,
    Books,
    Antiprism,
    FanUnion,
    LadderUnion,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Fans,
        Family::Ladders,
        Family::TriangularLadders,
        Family::Wheels,
        Family::Books,
        Family::Antiprism,
        Family::FanUnion,
        Family::LadderUnion,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Fans => "fans",
            Family::Ladders => "ladders",
            Family::TriangularLadders => "triangular-ladders",
            Family::Wheels => "wheels",
            Family::Books => "books",
            Family::Antiprism => "antiprism",
            Family::FanUnion => "fan-union",
            Family::LadderUnion => "ladder-union",
        }
    }

    /// Parameter names in the order they are printed.
    pub fn param_names(self) -> &'static [&'static str] {
        match self {
            Family::Antiprism => &["l", "m", "n"],
            Family::FanUnion | Family::LadderUnion => &["s", "k", "n"],
            _ => &["m", "n"],
        }
    }

    /// Length of the cycles the family's labeling is magic over.
    pub fn cycle_length(self) -> usize {
        match self {
            Family::Ladders | Family::Books | Family::LadderUnion => 4,
            _ => 3,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        // accepts `fan-union`, `fan_union` and `FanUnion`
        let norm: String = s.trim().to_ascii_lowercase().chars().filter(|c| !matches!(c, '-' | '_')).collect();
        Family::ALL
            .into_iter()
            .find(|f| f.name().replace('-', "") == norm)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// A family together with its parameters.
///
/// `m` is a copy count, `n` a size index, `l` the copy count for antiprisms,
/// and `s`/`k` the numbers of larger/smaller copies in the mixed unions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    Fans { m: u32, n: u32 },
    Ladders { m: u32, n: u32 },
    TriangularLadders { m: u32, n: u32 },
    Wheels { m: u32, n: u32 },
    Books { m: u32, n: u32 },
    Antiprism { l: u32, m: u32, n: u32 },
    FanUnion { s: u32, k: u32, n: u32 },
    LadderUnion { s: u32, k: u32, n: u32 },
}

fn at_least(param: &'static str, value: u32, min: u32, allowed: &'static str) -> Result<()> {
    if value < min {
        return Err(Error::ParameterOutOfRange { param, value: value.into(), allowed });
    }
    Ok(())
}

impl FamilySpec {
    /// Builds a spec from named parameters, e.g. `[("m", 2), ("n", 3)]`.
    ///
    /// Every parameter of the family must be present and no other name may
    /// appear. Ranges are not checked here; see [`FamilySpec::validate`].
    pub fn from_params<'a, I>(family: Family, params: I) -> Result<Self>
    where
        I: IntoIterator<Item = (&'a str, u32)>,
    {
        let mut values = [None; 3];
        let names = family.param_names();
        for (name, value) in params {
            let slot =
                names.iter().position(|p| *p == name).ok_or_else(|| Error::UnexpectedParameter(name.to_string()))?;
            values[slot] = Some(value);
        }
        let get = |i: usize| values[i].ok_or(Error::MissingParameter(names[i]));
        Ok(match family {
            Family::Fans => FamilySpec::Fans { m: get(0)?, n: get(1)? },
            Family::Ladders => FamilySpec::Ladders { m: get(0)?, n: get(1)? },
            Family::TriangularLadders => FamilySpec::TriangularLadders { m: get(0)?, n: get(1)? },
            Family::Wheels => FamilySpec::Wheels { m: get(0)?, n: get(1)? },
            Family::Books => FamilySpec::Books { m: get(0)?, n: get(1)? },
            Family::Antiprism => FamilySpec::Antiprism { l: get(0)?, m: get(1)?, n: get(2)? },
            Family::FanUnion => FamilySpec::FanUnion { s: get(0)?, k: get(1)?, n: get(2)? },
            Family::LadderUnion => FamilySpec::LadderUnion { s: get(0)?, k: get(1)?, n: get(2)? },
        })
    }

    pub fn family(&self) -> Family {
        match self {
            FamilySpec::Fans { .. } => Family::Fans,
            FamilySpec::Ladders { .. } => Family::Ladders,
            FamilySpec::TriangularLadders { .. } => Family::TriangularLadders,
            FamilySpec::Wheels { .. } => Family::Wheels,
            FamilySpec::Books { .. } => Family::Books,
            FamilySpec::Antiprism { .. } => Family::Antiprism,
            FamilySpec::FanUnion { .. } => Family::FanUnion,
            FamilySpec::LadderUnion { .. } => Family::LadderUnion,
        }
    }

    /// Parameters as `(name, value)` pairs, in [`Family::param_names`] order.
    pub fn params(&self) -> Vec<(&'static str, u32)> {
        match *self {
            FamilySpec::Fans { m, n }
            | FamilySpec::Ladders { m, n }
            | FamilySpec::TriangularLadders { m, n }
            | FamilySpec::Wheels { m, n }
            | FamilySpec::Books { m, n } => vec![("m", m), ("n", n)],
            FamilySpec::Antiprism { l, m, n } => vec![("l", l), ("m", m), ("n", n)],
            FamilySpec::FanUnion { s, k, n } | FamilySpec::LadderUnion { s, k, n } => {
                vec![("s", s), ("k", k), ("n", n)]
            }
        }
    }

    pub fn cycle_length(&self) -> usize {
        self.family().cycle_length()
    }

    /// Checks the parameter ranges under which the constructive labelings
    /// are claimed.
    pub fn validate(&self) -> Result<()> {
        match *self {
            FamilySpec::Fans { m, n } | FamilySpec::TriangularLadders { m, n } | FamilySpec::Wheels { m, n } => {
                at_least("m", m, 2, "m >= 2")?;
                at_least("n", n, 3, "n >= 3")
            }
            FamilySpec::Ladders { m, n } | FamilySpec::Books { m, n } => {
                at_least("m", m, 2, "m >= 2")?;
                at_least("n", n, 2, "n >= 2")
            }
            FamilySpec::Antiprism { l, m, n } => {
                at_least("l", l, 2, "l >= 2")?;
                at_least("m", m, 3, "m >= 3")?;
                at_least("n", n, 3, "n >= 3")
            }
            FamilySpec::FanUnion { s, k, n } => {
                at_least("s", s, 1, "s >= 1")?;
                at_least("k", k, 1, "k >= 1")?;
                at_least("n", n, 3, "n >= 3")
            }
            FamilySpec::LadderUnion { s, k, n } => {
                at_least("s", s, 1, "s >= 1")?;
                at_least("k", k, 1, "k >= 1")?;
                at_least("n", n, 2, "n >= 2")
            }
        }
    }

    /// Checks only that the parameters describe a simple graph, e.g. a single
    /// fan (`m = 1`) is allowed here.
    pub fn validate_structure(&self) -> Result<()> {
        match *self {
            FamilySpec::Fans { m, n } | FamilySpec::Ladders { m, n } | FamilySpec::TriangularLadders { m, n } => {
                at_least("m", m, 1, "m >= 1")?;
                at_least("n", n, 2, "n >= 2")
            }
            FamilySpec::Wheels { m, n } => {
                at_least("m", m, 1, "m >= 1")?;
                at_least("n", n, 3, "n >= 3")
            }
            FamilySpec::Books { m, n } => {
                at_least("m", m, 1, "m >= 1")?;
                at_least("n", n, 1, "n >= 1")
            }
            FamilySpec::Antiprism { l, m, n } => {
                at_least("l", l, 1, "l >= 1")?;
                at_least("m", m, 3, "m >= 3")?;
                at_least("n", n, 2, "n >= 2")
            }
            FamilySpec::FanUnion { s, k, n } => {
                at_least("s + k", s + k, 1, "s + k >= 1")?;
                at_least("n", n, 3, "n >= 3")
            }
            FamilySpec::LadderUnion { s, k, n } => {
                at_least("s + k", s + k, 1, "s + k >= 1")?;
                at_least("n", n, 2, "n >= 2")
            }
        }
    }

    /// Number of vertices `v`, from the closed form.
    pub fn order(&self) -> u64 {
        match *self {
            FamilySpec::Fans { m, n } | FamilySpec::Wheels { m, n } => u64::from(m) * (u64::from(n) + 1),
            FamilySpec::Ladders { m, n } | FamilySpec::TriangularLadders { m, n } => 2 * u64::from(m) * u64::from(n),
            FamilySpec::Books { m, n } => 2 * u64::from(m) * (u64::from(n) + 1),
            FamilySpec::Antiprism { l, m, n } => u64::from(l) * u64::from(m) * u64::from(n),
            FamilySpec::FanUnion { s, k, n } => {
                let (s, k, n) = (u64::from(s), u64::from(k), u64::from(n));
                s * (n + 1) + n * k
            }
            FamilySpec::LadderUnion { s, k, n } => {
                let (s, k, n) = (u64::from(s), u64::from(k), u64::from(n));
                2 * (s * n + k * (n - 1))
            }
        }
    }

    /// Number of edges `e`, from the closed form.
    pub fn size(&self) -> u64 {
        match *self {
            FamilySpec::Fans { m, n } => u64::from(m) * (2 * u64::from(n) - 1),
            FamilySpec::Ladders { m, n } => 3 * u64::from(m) * u64::from(n) - 2 * u64::from(m),
            FamilySpec::TriangularLadders { m, n } => u64::from(m) * (4 * u64::from(n) - 3),
            FamilySpec::Wheels { m, n } => 2 * u64::from(m) * u64::from(n),
            FamilySpec::Books { m, n } => u64::from(m) * (3 * u64::from(n) + 1),
            FamilySpec::Antiprism { l, m, n } => u64::from(l) * u64::from(m) * (3 * u64::from(n) - 2),
            FamilySpec::FanUnion { s, k, n } => {
                let (s, k, n) = (u64::from(s), u64::from(k), u64::from(n));
                s * (2 * n - 1) + k * (2 * n - 3)
            }
            FamilySpec::LadderUnion { s, k, n } => {
                let (s, k, n) = (u64::from(s), u64::from(k), u64::from(n));
                s * (3 * n - 2) + k * (3 * n - 5)
            }
        }
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.family())?;
        for (i, (name, value)) in self.params().into_iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{name}={value}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_family_names() {
        assert_eq!("fans".parse::<Family>().unwrap(), Family::Fans);
        assert_eq!("Fan_Union".parse::<Family>().unwrap(), Family::FanUnion);
        assert_eq!("TriangularLadders".parse::<Family>().unwrap(), Family::TriangularLadders);
        assert!("prisms".parse::<Family>().is_err());
    }

    #[test]
    fn from_params_requires_exact_names() {
        let spec = FamilySpec::from_params(Family::Antiprism, [("l", 2), ("m", 3), ("n", 3)]).unwrap();
        assert_eq!(spec, FamilySpec::Antiprism { l: 2, m: 3, n: 3 });
        assert_eq!(FamilySpec::from_params(Family::Fans, [("m", 2)]), Err(Error::MissingParameter("n")));
        assert!(matches!(
            FamilySpec::from_params(Family::Fans, [("m", 2), ("n", 3), ("l", 1)]),
            Err(Error::UnexpectedParameter(_))
        ));
    }

    #[test]
    fn ranges() {
        assert!(FamilySpec::Fans { m: 1, n: 3 }.validate().is_err());
        assert!(FamilySpec::Fans { m: 1, n: 3 }.validate_structure().is_ok());
        assert!(FamilySpec::Ladders { m: 2, n: 1 }.validate().is_err());
        assert!(FamilySpec::Antiprism { l: 2, m: 2, n: 3 }.validate().is_err());
        assert!(FamilySpec::LadderUnion { s: 2, k: 0, n: 3 }.validate().is_err());
        assert!(FamilySpec::LadderUnion { s: 1, k: 1, n: 2 }.validate().is_ok());
    }

    #[test]
    fn structural_range_contains_claimed_range() {
        for family in Family::ALL {
            for a in 0..=4 {
                for b in 0..=4 {
                    for c in 0..=4 {
                        let values = [a, b, c];
                        let names = family.param_names();
                        let spec = FamilySpec::from_params(family, names.iter().copied().zip(values)).unwrap();
                        if spec.validate().is_ok() {
                            assert!(spec.validate_structure().is_ok(), "{spec}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(FamilySpec::FanUnion { s: 1, k: 2, n: 3 }.to_string(), "fan-union{s=1,k=2,n=3}");
    }
}

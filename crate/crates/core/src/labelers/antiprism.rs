use super::{div_exact, LabelBuilder};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::p;
use crate::labeling::TotalLabeling;

/// Which way a label runs across the `l` copies: `base + k - l` climbs with
/// `k`, `base - k + 1` descends.
#[derive(Clone, Copy)]
enum Dir {
    Up,
    Down,
}

struct Antiprism {
    l: i64,
    m: i64,
    n: i64,
}

impl Antiprism {
    fn at(&self, dir: Dir, base: i64, k: i64) -> i64 {
        match dir {
            Dir::Up => self.l * base + k - self.l,
            Dir::Down => self.l * base - k + 1,
        }
    }

    fn half(x: i64) -> Result<i64> {
        div_exact("antiprism half", x, 2)
    }

    fn vertex(&self, i: i64, j: i64, k: i64) -> Result<i64> {
        let (m, row) = (self.m, self.m * (j - 1));
        let (io, jo) = (i % 2 == 1, j % 2 == 1);
        Ok(if m % 2 == 1 {
            match (io, jo) {
                (true, true) => self.at(Dir::Up, row + Self::half(m - i + 2)?, k),
                (false, true) => self.at(Dir::Up, row + Self::half(2 * m - i + 2)?, k),
                (true, false) => self.at(Dir::Down, row + Self::half(i + 1)?, k),
                (false, false) => self.at(Dir::Down, row + Self::half(m + i + 1)?, k),
            }
        } else if jo {
            self.at(Dir::Up, row + i, k)
        } else {
            self.at(Dir::Down, m * j - i + 1, k)
        })
    }

    /// Level edge `v_{i,j} v_{i+1,j}`.
    fn level(&self, i: i64, j: i64, k: i64) -> Result<i64> {
        let (m, n) = (self.m, self.n);
        let row = m * (4 * n - j - 2);
        let (io, jo) = (i % 2 == 1, j % 2 == 1);
        Ok(if m % 2 == 1 {
            if jo && io {
                self.at(Dir::Down, row + Self::half(i + 1)?, k)
            } else if jo {
                self.at(Dir::Down, row + Self::half(m + i + 1)?, k)
            } else if i == m {
                self.at(Dir::Up, m * (4 * n - j - 1), k)
            } else if io {
                self.at(Dir::Up, row + Self::half(m - i)?, k)
            } else {
                self.at(Dir::Up, row + Self::half(2 * m - i)?, k)
            }
        } else if jo {
            let base = if i != m { m * (4 * n - j - 1) - i } else { m * (4 * n - j - 1) };
            self.at(Dir::Down, base, k)
        } else {
            let base = if i != m { row + i + 1 } else { row + 1 };
            self.at(Dir::Up, base, k)
        })
    }

    /// Vertical edge `v_{i,j} v_{i,j+1}`.
    fn vertical(&self, i: i64, j: i64, k: i64) -> Result<i64> {
        let (m, n) = (self.m, self.n);
        let (io, jo) = (i % 2 == 1, j % 2 == 1);
        let n_even = n % 2 == 0;
        if m % 2 == 1 {
            let row = m * (2 * n - j - 1);
            let base = row
                + match (io, jo) {
                    (true, true) => Self::half(m + i)?,
                    (false, true) => Self::half(i)?,
                    (true, false) => Self::half(2 * m - i + 1)?,
                    (false, false) => Self::half(m - i + 1)?,
                };
            let dir = if n_even { Dir::Up } else { Dir::Down };
            Ok(self.at(dir, base, k))
        } else if jo {
            let dir = if n_even { Dir::Up } else { Dir::Down };
            Ok(self.at(dir, m * (2 * n - j) - i + 1, k))
        } else {
            let dir = if n_even { Dir::Up } else { Dir::Down };
            Ok(self.at(dir, m * (2 * n - j - 1) + i, k))
        }
    }

    /// Diagonal edge `v_{i,j+1} v_{i+1,j}`.
    fn diagonal(&self, i: i64, j: i64, k: i64) -> Result<i64> {
        let (m, n) = (self.m, self.n);
        let (io, jo) = (i % 2 == 1, j % 2 == 1);
        let dir = if n % 2 == 0 { Dir::Down } else { Dir::Up };
        if m % 2 == 1 {
            let row = m * (3 * n - j - 2);
            let base = row
                + match (io, jo) {
                    (true, true) => Self::half(2 * m - i + 1)?,
                    (false, true) => Self::half(m - i + 1)?,
                    (true, false) => Self::half(m + i)?,
                    (false, false) => Self::half(i)?,
                };
            Ok(self.at(dir, base, k))
        } else if jo {
            Ok(self.at(dir, m * (3 * n - j - 2) + i, k))
        } else {
            Ok(self.at(dir, m * (3 * n - j - 1) - i + 1, k))
        }
    }
}

/// `C3`-supermagic labeling of `l` disjoint antiprisms `A^n_m` (`n` levels of
/// `m`-cycles joined by zigzag triangles), magic over every zigzag triangle
/// with constant `lm(9n - 4) + 3`.
///
/// Four case combinations on the parities of `m` and `n`.
pub fn label_antiprism(l: u32, m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Antiprism { l, m, n };
    spec.validate()?;
    let a = Antiprism { l: l.into(), m: m.into(), n: n.into() };
    let mut out = LabelBuilder::for_spec(&spec);
    for ku in 1..=l {
        let k = i64::from(ku);
        for iu in 1..=m {
            let i = i64::from(iu);
            for ju in 1..=n {
                let j = i64::from(ju);
                out.vertex(p(iu, ju, ku, m), a.vertex(i, j, k)?)?;
                out.edge(p(iu, ju, ku, m), p(iu + 1, ju, ku, m), a.level(i, j, k)?)?;
                if ju < n {
                    out.edge(p(iu, ju, ku, m), p(iu, ju + 1, ku, m), a.vertical(i, j, k)?)?;
                    out.edge(p(iu, ju + 1, ku, m), p(iu + 1, ju, ku, m), a.diagonal(i, j, k)?)?;
                }
            }
        }
    }
    Ok(out.finish())
}

use super::{div_exact, LabelBuilder};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::{c, v};
use crate::labeling::TotalLabeling;

/// `C3`-supermagic labeling of `m` disjoint wheels `W_n`, magic over the `n`
/// hub triangles of every copy.
///
/// Three cases by `n`: odd, `n ≡ 0 (mod 4)` and `n ≡ 2 (mod 4)`. The odd case
/// uses the corrected rim edge `v_{n-1} v_n` (see
/// [`crate::typos::WHEELS_ODD_RIM`]).
pub fn label_wheels(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Wheels { m, n };
    spec.validate()?;
    if n % 2 == 1 {
        odd(&spec, m, n, false)
    } else if n.is_multiple_of(4) {
        even_case_1(&spec, m, n)
    } else {
        even_case_2(&spec, m, n)
    }
}

/// The odd-`n` wheel formulas as printed, rim edge `v_{n-1} v_n` included.
/// For every odd `n` this runs out of range (`LabelOutOfRange`).
pub fn label_wheels_printed(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Wheels { m, n };
    spec.validate()?;
    if n.is_multiple_of(2) {
        return label_wheels(m, n);
    }
    odd(&spec, m, n, true)
}

fn odd(spec: &FamilySpec, m: u32, n: u32, printed_rim: bool) -> Result<TotalLabeling> {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let mut out = LabelBuilder::for_spec(spec);
    for ju in 1..=m {
        let j = i64::from(ju);
        out.vertex(c(ju), j)?;
        for iu in 1..=n {
            let i = i64::from(iu);
            let label = if i % 2 == 1 {
                mi * div_exact("wheel odd vertex", i + 1, 2)? + j
            } else {
                mi * div_exact("wheel even vertex", ni + i + 1, 2)? + j
            };
            out.vertex(v(iu, ju), label)?;
            let hub = if iu < n { mi * (2 * ni - i + 1) - j + 1 } else { mi * (2 * ni + 1) - j + 1 };
            out.edge(c(ju), v(iu, ju), hub)?;
            if iu < n {
                let rim =
                    if iu + 1 < n || printed_rim { mi * (2 * ni + i + 3) - j + 1 } else { mi * (2 * ni + 2) - j + 1 };
                out.edge(v(iu, ju), v(iu + 1, ju), rim)?;
            }
        }
        out.edge(v(n, ju), v(1, ju), mi * (2 * ni + 3) - j + 1)?;
    }
    Ok(out.finish())
}

fn even_case_1(spec: &FamilySpec, m: u32, n: u32) -> Result<TotalLabeling> {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let half = ni / 2;
    // ⌈(n-1)/2⌉ for even n
    let ceil_half = half;
    let mut out = LabelBuilder::for_spec(spec);
    for ju in 1..=m {
        let j = i64::from(ju);
        out.vertex(c(ju), mi * (div_exact("wheel hub n/4", ni, 4)? + ceil_half + 1) + j - mi)?;
        for iu in 1..=n {
            let i = i64::from(iu);
            let label = if i % 2 == 1 {
                mi * (i / 2) + j
            } else if i <= half {
                div_exact("wheel even vertex", mi * (i + ni), 2)? + j - mi
            } else {
                div_exact("wheel even vertex", mi * (i + ni), 2)? + j
            };
            out.vertex(v(iu, ju), label)?;
            let hub = if i <= half {
                mi * (2 * ni + 2 - i) - (j - 1)
            } else if i < ni {
                mi * (2 * ni + 1 - i) - (j - 1)
            } else {
                mi * (div_exact("wheel 3n/2", 3 * ni, 2)? + 1) - (j - 1)
            };
            out.edge(c(ju), v(iu, ju), hub)?;
            if iu < n {
                let rim = if i < half {
                    mi * (2 * ni + 2 + i) - (j - 1)
                } else if i <= ni - 2 {
                    mi * (2 * ni + 3 + i) - (j - 1)
                } else {
                    mi * (div_exact("wheel 5n/2", 5 * ni, 2)? + 2) - (j - 1)
                };
                out.edge(v(iu, ju), v(iu + 1, ju), rim)?;
            }
        }
        out.edge(v(n, ju), v(1, ju), 2 * mi * (ni + 1) - (j - 1))?;
    }
    Ok(out.finish())
}

fn even_case_2(spec: &FamilySpec, m: u32, n: u32) -> Result<TotalLabeling> {
    let (mi, ni) = (i64::from(m), i64::from(n));
    let half = ni / 2;
    let mut out = LabelBuilder::for_spec(spec);
    for ju in 1..=m {
        let j = i64::from(ju);
        out.vertex(c(ju), div_exact("wheel hub 3m(n+2)/4", 3 * mi * (ni + 2), 4)? + j - mi)?;
        for iu in 1..=n {
            let i = i64::from(iu);
            let label = if i == ni || i % 2 == 1 {
                mi * (i / 2) + j
            } else if i <= half {
                mi * ((i + ni) / 2 + 1) + j - mi
            } else {
                mi * ((i + ni) / 2 + 2) + j - mi
            };
            out.vertex(v(iu, ju), label)?;
            let hub = if i == 1 {
                2 * mi * (ni + 1) - (j - 1)
            } else if i == ni {
                mi * (div_exact("wheel 3n/2", 3 * ni, 2)? + 1) - (j - 1)
            } else if i <= half {
                mi * (2 * ni + 2 - i) - (j - 1)
            } else if i % 2 == 0 {
                mi * (2 * ni - i) - (j - 1)
            } else {
                mi * (2 * ni + 2 - i) - (j - 1)
            };
            out.edge(c(ju), v(iu, ju), hub)?;
            if iu < n {
                let rim = if i == 1 {
                    mi * (2 * ni + 1) - (j - 1)
                } else if i < half {
                    mi * (2 * ni + 1 + i) - (j - 1)
                } else {
                    mi * (2 * ni + 2 + i) - (j - 1)
                };
                out.edge(v(iu, ju), v(iu + 1, ju), rim)?;
            }
        }
        out.edge(v(n, ju), v(1, ju), mi * (div_exact("wheel 5n/2", 5 * ni, 2)? + 1) - (j - 1))?;
    }
    Ok(out.finish())
}

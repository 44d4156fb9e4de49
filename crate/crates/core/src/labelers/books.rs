use super::{div_exact, LabelBuilder};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::{u, v, w};
use crate::labeling::TotalLabeling;

/// `C4`-supermagic labeling of `m` disjoint books `B_n` (spine `u_1 u_2`,
/// pages `u_1 w_i v_i u_2`), magic over the `n` pages of every copy.
///
/// The constant is `15mn + 17m + 4` for even `n` and `m(29n + 35)/2 + 4` for
/// odd `n`.
pub fn label_books(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Books { m, n };
    spec.validate()?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let even = n.is_multiple_of(2);
    let half = (ni + 1) / 2;

    let mut out = LabelBuilder::for_spec(&spec);
    for ju in 1..=m {
        let j = i64::from(ju);
        out.vertex(u(1, ju), j)?;
        out.vertex(u(2, ju), mi + j)?;
        let spine =
            if even { mi * (div_exact("book spine", 5 * ni, 2)? + 3) - j + 1 } else { mi * (2 * ni + 3) - j + 1 };
        out.edge(u(1, ju), u(2, ju), spine)?;
        for iu in 1..=n {
            let i = i64::from(iu);
            out.vertex(v(iu, ju), mi * (i + 1) + j)?;
            out.vertex(w(iu, ju), mi * (2 * ni + 2 - i) + j)?;
            let low = i <= half;
            let (to_v, to_w, page) = if even {
                (
                    if low { mi * (2 * ni + 2 + i) } else { mi * (2 * ni + 3 + i) },
                    if low { mi * (5 * ni + 5 - 2 * i) } else { mi * (6 * ni + 4 - 2 * i) },
                    div_exact("book page edge", mi * if low { 7 * ni + 6 + 2 * i } else { 5 * ni + 6 + 2 * i }, 2)?,
                )
            } else {
                (
                    mi * (2 * ni + 3 + i),
                    if low { mi * (5 * ni + 5 - 2 * i) } else { mi * (6 * ni + 5 - 2 * i) },
                    div_exact("book page edge", mi * if low { 7 * ni + 5 + 2 * i } else { 5 * ni + 5 + 2 * i }, 2)?,
                )
            };
            out.edge(u(2, ju), v(iu, ju), to_v - j + 1)?;
            out.edge(u(1, ju), w(iu, ju), to_w - j + 1)?;
            out.edge(v(iu, ju), w(iu, ju), page - j + 1)?;
        }
    }
    Ok(out.finish())
}

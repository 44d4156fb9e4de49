use super::LabelBuilder;
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::{a, b, u, v};
use crate::labeling::TotalLabeling;

/// `C4`-supermagic labeling of `m` disjoint ladders `P_n × P_2`, magic over
/// the rung squares with constant `m(17n - 2) + 4`.
///
/// Top rails get `j + m(i-1)`, bottom rails the mirror image from `v`
/// downward, and rungs follow the edge-antimagic path labeling shifted by
/// `v`; the rail edges then take the remaining top block.
pub fn label_ladders(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Ladders { m, n };
    spec.validate()?;
    let (mi, ni) = (i64::from(m), i64::from(n));
    let order = spec.order() as i64;
    let size = spec.size() as i64;

    let mut out = LabelBuilder::for_spec(&spec);
    for ju in 1..=m {
        let j = i64::from(ju);
        for iu in 1..=n {
            let i = i64::from(iu);
            out.vertex(u(iu, ju), j + mi * (i - 1))?;
            out.vertex(v(iu, ju), order - mi * (i - 1) - j + 1)?;
            out.edge(u(iu, ju), v(iu, ju), order + mi * (i - 1) + j)?;
            if iu < n {
                out.edge(u(iu, ju), u(iu + 1, ju), order + size - mi * (ni - 1) - mi * (i - 1) - j + 1)?;
                out.edge(v(iu, ju), v(iu + 1, ju), order + size - mi * (i - 1) - j + 1)?;
            }
        }
    }
    Ok(out.finish())
}

/// `C3`-supermagic labeling of `m` disjoint triangular ladders, magic over
/// both triangles of every rung gap with constant `14mn - 3m + 3`.
pub fn label_triangular_ladders(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::TriangularLadders { m, n };
    spec.validate()?;
    let (mi, ni) = (i64::from(m), i64::from(n));

    let mut out = LabelBuilder::for_spec(&spec);
    for ju in 1..=m {
        let j = i64::from(ju);
        for iu in 1..=n {
            let i = i64::from(iu);
            out.vertex(u(iu, ju), j + 2 * mi * (i - 1))?;
            out.vertex(v(iu, ju), j + mi * (2 * i - 1))?;
            out.edge(u(iu, ju), v(iu, ju), mi * (4 * ni + 1 - 2 * i) - j + 1)?;
            if iu < n {
                out.edge(u(iu, ju), u(iu + 1, ju), mi * (6 * ni - 3) - 2 * mi * (i - 1) - j + 1)?;
                out.edge(v(iu, ju), v(iu + 1, ju), 2 * mi * (3 * ni - i - 1) - j + 1)?;
                out.edge(u(iu + 1, ju), v(iu, ju), 2 * mi * (2 * ni - i) - j + 1)?;
            }
        }
    }
    Ok(out.finish())
}

/// `C4`-supermagic labeling of `s` ladders on `n` rungs together with `k`
/// ladders on `n - 1` rungs (`u`/`v` and `a`/`b` rails respectively), with
/// constant `4 + 17n(s+k) - 19k - 2s`.
pub fn label_ladder_union(s: u32, k: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::LadderUnion { s, k, n };
    spec.validate()?;
    let (si, ki, ni) = (i64::from(s), i64::from(k), i64::from(n));
    let t = si + ki;
    // 2sn + 2k(n-1) is v, and twice it again bounds the bottom-rail edges.
    let order = 2 * si * ni + 2 * ki * (ni - 1);

    let mut out = LabelBuilder::for_spec(&spec);
    for ju in 1..=s {
        let j = i64::from(ju);
        for iu in 1..=n {
            let i = i64::from(iu);
            out.vertex(u(iu, ju), i + ni * (j - 1))?;
            out.vertex(v(iu, ju), order - ni * (j - 1) - i + 1)?;
            out.edge(u(iu, ju), v(iu, ju), order + (ni - i) * t + j)?;
            if iu < n {
                out.edge(u(iu, ju), u(iu + 1, ju), si * (5 * ni - 2) + ki * (5 * ni - 7) - t * (ni - i - 1) - j + 1)?;
                out.edge(v(iu, ju), v(iu + 1, ju), 2 * order - t * (ni - i) - j + 1)?;
            }
        }
    }
    for tu in 1..=k {
        let tt = i64::from(tu);
        for iu in 1..n {
            let i = i64::from(iu);
            out.vertex(a(iu, tu), si * ni + i + (ni - 1) * (tt - 1))?;
            out.vertex(b(iu, tu), order + ni * (1 - si) + tt * (1 - ni) - i)?;
            out.edge(a(iu, tu), b(iu, tu), order + (ni - i - 1) * t + si + tt)?;
            if iu + 1 < n {
                out.edge(
                    a(iu, tu),
                    a(iu + 1, tu),
                    si * (5 * ni - 2) + ki * (5 * ni - 7) - t * (ni - i - 2) - si - tt + 1,
                )?;
                out.edge(b(iu, tu), b(iu + 1, tu), 2 * order - t * (ni - i - 1) - si - tt + 1)?;
            }
        }
    }
    Ok(out.finish())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ladder_square_values() {
        let lab = label_ladders(2, 2).unwrap();
        let vertices = ["u[1][1]", "u[2][1]", "v[1][1]", "v[2][1]"].map(|x| lab.vertex(x).unwrap());
        assert_eq!(vertices, [1, 3, 8, 6]);
        assert_eq!(lab.edge("u[1][1]", "v[1][1]"), Some(9));
        assert_eq!(lab.edge("u[2][1]", "v[2][1]"), Some(11));
        assert_eq!(lab.edge("u[1][1]", "u[2][1]"), Some(14));
        assert_eq!(lab.edge("v[1][1]", "v[2][1]"), Some(16));
    }

    #[test]
    fn range_errors() {
        assert!(label_ladders(2, 1).is_err());
        assert!(label_triangular_ladders(2, 2).is_err());
        assert!(label_ladder_union(2, 0, 3).is_err());
    }
}

use super::{alt_sign, div_exact, LabelBuilder};
use crate::error::Result;
use crate::family::FamilySpec;
use crate::graph::{c, union_path_len, v};
use crate::labeling::TotalLabeling;

#[derive(Clone, Copy, PartialEq, Eq)]
enum EvenVertex {
    Printed,
    Corrected,
}

struct FanFormulas {
    m: i64,
    n: i64,
    even: EvenVertex,
}

impl FanFormulas {
    fn hub(&self, j: i64) -> i64 {
        self.m * (self.n + 1) - j + 1
    }

    fn vertex(&self, i: i64, j: i64) -> Result<i64> {
        let (m, n) = (self.m, self.n);
        if i % 2 == 1 {
            return Ok(j + div_exact("fan odd vertex", m * (i - 1), 2)?);
        }
        match self.even {
            EvenVertex::Corrected => Ok(div_exact("fan even vertex", m * (2 * n + 2 * i - 3 + alt_sign(n)), 4)? + j),
            EvenVertex::Printed => {
                div_exact("fan even vertex (printed)", (2 * n + 2 * i + 3 + alt_sign(n)) * m + 4 * j, 4)
            }
        }
    }

    fn hub_edge(&self, i: i64, j: i64) -> i64 {
        3 * self.m * self.n - self.m * (i - 1) - j + 1
    }

    fn path_edge(&self, i: i64, j: i64) -> i64 {
        self.m * (self.n + i) + j
    }

    fn build(&self, spec: &FamilySpec) -> Result<TotalLabeling> {
        let mut out = LabelBuilder::for_spec(spec);
        for j in 1..=self.m {
            let ju = j as u32;
            out.vertex(c(ju), self.hub(j))?;
            for i in 1..=self.n {
                let iu = i as u32;
                out.vertex(v(iu, ju), self.vertex(i, j)?)?;
                out.edge(c(ju), v(iu, ju), self.hub_edge(i, j))?;
                if i < self.n {
                    out.edge(v(iu, ju), v(iu + 1, ju), self.path_edge(i, j))?;
                }
            }
        }
        Ok(out.finish())
    }
}

/// `C3`-supermagic labeling of `m` disjoint fans `F_n` (hub joined to a path
/// on `n` vertices), magic over the hub triangles with constant
/// `m[34n + 5 + (-1)^(n+1)]/4 + 3`.
pub fn label_fans(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Fans { m, n };
    spec.validate()?;
    FanFormulas { m: m.into(), n: n.into(), even: EvenVertex::Corrected }.build(&spec)
}

/// The fan labeling with the even-position vertex formula exactly as printed.
/// Kept to document why the correction exists; it is not a valid labeling.
pub fn label_fans_printed(m: u32, n: u32) -> Result<TotalLabeling> {
    let spec = FamilySpec::Fans { m, n };
    spec.validate()?;
    FanFormulas { m: m.into(), n: n.into(), even: EvenVertex::Printed }.build(&spec)
}

/// Sorted hub-triangle weights of the fan construction after its first two
/// phases (vertices only, then vertices plus hub edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FanPhases {
    pub after_vertices: Vec<i64>,
    pub after_hub_edges: Vec<i64>,
}

pub fn fan_phase_weights(m: u32, n: u32) -> Result<FanPhases> {
    FamilySpec::Fans { m, n }.validate()?;
    let f = FanFormulas { m: m.into(), n: n.into(), even: EvenVertex::Corrected };
    let mut after_vertices = Vec::new();
    let mut after_hub_edges = Vec::new();
    for j in 1..=f.m {
        for i in 1..f.n {
            let w = f.hub(j) + f.vertex(i, j)? + f.vertex(i + 1, j)?;
            after_vertices.push(w);
            after_hub_edges.push(w + f.hub_edge(i, j) + f.hub_edge(i + 1, j));
        }
    }
    after_vertices.sort_unstable();
    after_hub_edges.sort_unstable();
    Ok(FanPhases { after_vertices, after_hub_edges })
}

fn fan_union(s: u32, k: u32, n: u32, printed_offset: bool) -> Result<TotalLabeling> {
    let spec = FamilySpec::FanUnion { s, k, n };
    spec.validate()?;
    let (si, ki, ni) = (i64::from(s), i64::from(k), i64::from(n));
    let t = si + ki;
    // Label of the first even-position vertex, minus one.
    let offset = if printed_offset { (t * ni).div_euclid(2) } else { si * ((ni + 1) / 2) + ki * (ni / 2) };

    let mut out = LabelBuilder::for_spec(&spec);
    for ju in 1..=s + k {
        let j = i64::from(ju);
        let b = union_path_len(s, n, ju);
        out.vertex(c(ju), si * (ni + 1) + ni * ki - j + 1)?;
        for iu in 1..=b {
            let i = i64::from(iu);
            let label = if i % 2 == 1 {
                j + div_exact("fan-union odd vertex", t * (i - 1), 2)?
            } else {
                j + div_exact("fan-union even vertex", t * (i - 2), 2)? + offset
            };
            out.vertex(v(iu, ju), label)?;
            out.edge(c(ju), v(iu, ju), si * (3 * ni - i + 1) + ki * (3 * ni - i - 2) - j + 1)?;
            if iu < b {
                out.edge(v(iu, ju), v(iu + 1, ju), si * (ni + i) + ki * (ni + i - 1) + j)?;
            }
        }
    }
    Ok(out.finish())
}

/// `C3`-supermagic labeling of `s` fans on `n` path vertices together with
/// `k` fans on `n - 1` path vertices.
///
/// For even `n`, or `s = k`, the constant is `(s+k)17n/2 + s - 7k + 3`. For
/// odd `n` and `s != k` the even-position offset is corrected and the
/// constant becomes `8n(s+k) + s - 7k + 3 + s⌈n/2⌉ + k⌊n/2⌋`.
pub fn label_fan_union(s: u32, k: u32, n: u32) -> Result<TotalLabeling> {
    fan_union(s, k, n, false)
}

/// The fan-union labeling with the printed even-position offset.
pub fn label_fan_union_printed(s: u32, k: u32, n: u32) -> Result<TotalLabeling> {
    fan_union(s, k, n, true)
}

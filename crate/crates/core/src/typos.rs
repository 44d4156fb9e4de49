//! Ledger of printed construction formulas that do not verify, and the
//! corrections the labelers ship instead.
//!
//! Every entry is exercised by a test that applies the printed form and shows
//! it failing, next to the corrected form passing.

/// One corrected formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TypoEntry {
    pub key: &'static str,
    pub construction: &'static str,
    pub printed: &'static str,
    pub corrected: &'static str,
    pub evidence: &'static str,
}

pub const FANS_EVEN_VERTEX: &str = "fans-even-vertex";
pub const WHEELS_ODD_RIM: &str = "wheels-odd-rim";
pub const WHEELS_ODD_HUB_RANGE: &str = "wheels-odd-hub-range";
pub const UNION_COPY_SIZES: &str = "union-copy-sizes";
pub const FAN_UNION_OFFSET: &str = "fan-union-offset";

pub const TYPOS: &[TypoEntry] = &[
    TypoEntry {
        key: FANS_EVEN_VERTEX,
        construction: "mF_n, C3",
        printed: "λ(v_i^j) = ([2n+2i+3+(-1)^(n+1)]m + 4j)/4 for even i",
        corrected: "λ(v_i^j) = m[2n+2i-3+(-1)^(n+1)]/4 + j for even i",
        evidence:
            "at m=2, n=3 the printed form labels v_2^1, v_2^2 with 8 and 9: 8 collides with c_1 and 9 exceeds v=8",
    },
    TypoEntry {
        key: WHEELS_ODD_RIM,
        construction: "mW_n, n odd, C3",
        printed: "λ(v_i^j v_{i+1}^j) = m(2n+i+3) - j + 1 for all 1 <= i <= n-1",
        corrected: "printed form for 1 <= i <= n-2; λ(v_{n-1}^j v_n^j) = m(2n+2) - j + 1",
        evidence: "at m=2, n=3 the printed form gives 21, 22 > v+e = 20; the rim labels forced by c = 53 are {15..20}",
    },
    TypoEntry {
        key: WHEELS_ODD_HUB_RANGE,
        construction: "mW_n, n odd, C3",
        printed: "λ(c_j v_i^j) = m(2n-i+1) - j + 1 for 1 <= i <= n, and λ(c_j v_n) = m(2n+1) - j + 1",
        corrected: "general hub-edge form for 1 <= i <= n-1 only; λ(c_j v_n^j) and λ(v_n^j v_1^j) taken per copy",
        evidence: "the two printed forms both define c_j v_n^j",
    },
    TypoEntry {
        key: UNION_COPY_SIZES,
        construction: "sF ∪ kF (C3) and sL ∪ kL (C4)",
        printed: "sF_{n+1} ∪ kF_n with path edges for 1 <= i <= b; sL_{n+1} ∪ kL_n with a_i, b_i for 1 <= i <= n",
        corrected:
            "s copies of size n and k copies of size n-1 (matching the printed v and e); path edges for 1 <= i <= b-1",
        evidence:
            "only this reading reproduces v = s(n+1)+nk, e = s(2n-1)+k(2n-3) and v = 2[sn+k(n-1)], e = s(3n-2)+k(3n-5)",
    },
    TypoEntry {
        key: FAN_UNION_OFFSET,
        construction: "sF ∪ kF, n odd, C3",
        printed: "λ(v_i^j) = j + (s+k)(i-2)/2 + ⌊(s+k)n/2⌋ for even i",
        corrected: "offset ⌊(s+k)n/2⌋ replaced by s⌈n/2⌉ + k⌊n/2⌋ (the number of odd-position path vertices)",
        evidence: "for odd n and s != k the printed vertex labels are not a bijection onto 1..v (e.g. s=1, k=3, n=3); \
                   the corrected labeling is C3-supermagic with c = 8n(s+k) + s - 7k + 3 + s⌈n/2⌉ + k⌊n/2⌋, \
                   which equals the printed constant only when n is even or s = k",
    },
];

pub fn lookup(key: &str) -> Option<&'static TypoEntry> {
    TYPOS.iter().find(|t| t.key == key)
}

//! Shared inputs for the benchmarks.

use supermagic_core::FamilySpec;

/// One mid-sized instance per family.
pub fn representative_specs() -> Vec<FamilySpec> {
    vec![
        FamilySpec::Fans { m: 5, n: 12 },
        FamilySpec::Ladders { m: 5, n: 12 },
        FamilySpec::TriangularLadders { m: 5, n: 12 },
        FamilySpec::Wheels { m: 5, n: 11 },
        FamilySpec::Wheels { m: 5, n: 12 },
        FamilySpec::Books { m: 5, n: 12 },
        FamilySpec::Antiprism { l: 5, m: 5, n: 12 },
        FamilySpec::FanUnion { s: 4, k: 4, n: 12 },
        FamilySpec::LadderUnion { s: 4, k: 4, n: 12 },
    ]
}

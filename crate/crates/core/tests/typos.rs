//! Each corrected formula against its printed form.

use supermagic_core::typos::{self, TYPOS};
use supermagic_core::{
    build_graph, construct, covering_cycles_in, label_fan_union, label_fan_union_printed, label_fans,
    label_fans_printed, label_wheels, label_wheels_printed, verify, Error, FamilySpec, Mode, TotalLabeling,
};

fn check(spec: &FamilySpec, lab: &TotalLabeling) -> supermagic_core::VerificationReport {
    let g = build_graph(spec).unwrap();
    let cycles = covering_cycles_in(spec, &g).unwrap();
    verify(&g, lab, spec.cycle_length(), Mode::Covering, Some(&cycles)).unwrap()
}

#[test]
fn fans_even_vertex() {
    let spec = FamilySpec::Fans { m: 2, n: 3 };
    let printed = check(&spec, &label_fans_printed(2, 3).unwrap());
    assert!(!printed.bijective && !printed.super_);
    assert!(printed.duplicate_labels.contains(&8));
    assert!(check(&spec, &label_fans(2, 3).unwrap()).valid);
    for m in 2..=5 {
        for n in 3..=12 {
            let spec = FamilySpec::Fans { m, n };
            // the printed form is either fractional or not a valid labeling
            match label_fans_printed(m, n) {
                Ok(lab) => assert!(!check(&spec, &lab).valid, "{spec}"),
                Err(e) => assert!(matches!(e, Error::Indivisible { .. } | Error::LabelOutOfRange { .. }), "{spec}"),
            }
        }
    }
}

#[test]
fn wheels_odd_rim() {
    for m in 2..=5 {
        for n in (3..=11).step_by(2) {
            assert!(matches!(label_wheels_printed(m, n), Err(Error::LabelOutOfRange { .. })));
            assert!(check(&FamilySpec::Wheels { m, n }, &label_wheels(m, n).unwrap()).valid);
        }
    }
}

#[test]
fn fan_union_offset() {
    let spec = FamilySpec::FanUnion { s: 1, k: 3, n: 3 };
    let printed = check(&spec, &label_fan_union_printed(1, 3, 3).unwrap());
    assert!(!printed.super_ && !printed.valid);
    assert!(check(&spec, &label_fan_union(1, 3, 3).unwrap()).valid);
    // the offsets agree whenever n is even or s = k
    for s in 1..=4 {
        for k in 1..=4 {
            for n in 3..=12 {
                if n % 2 == 0 || s == k {
                    assert_eq!(label_fan_union_printed(s, k, n).unwrap(), label_fan_union(s, k, n).unwrap());
                }
            }
        }
    }
}

#[test]
fn constructions_report_their_corrections() {
    let keys = |spec| construct(&spec).unwrap().corrections;
    assert_eq!(keys(FamilySpec::Fans { m: 2, n: 4 }), [typos::FANS_EVEN_VERTEX]);
    assert_eq!(keys(FamilySpec::Wheels { m: 2, n: 5 }), [typos::WHEELS_ODD_RIM, typos::WHEELS_ODD_HUB_RANGE]);
    assert!(keys(FamilySpec::Wheels { m: 2, n: 8 }).is_empty());
    assert_eq!(keys(FamilySpec::FanUnion { s: 1, k: 2, n: 3 }), [typos::UNION_COPY_SIZES, typos::FAN_UNION_OFFSET]);
    assert_eq!(keys(FamilySpec::FanUnion { s: 2, k: 2, n: 3 }), [typos::UNION_COPY_SIZES]);
    for key in [typos::FANS_EVEN_VERTEX, typos::WHEELS_ODD_RIM, typos::UNION_COPY_SIZES, typos::FAN_UNION_OFFSET] {
        assert!(TYPOS.iter().any(|t| t.key == key));
    }
}

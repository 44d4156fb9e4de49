//! Cycle-supermagic total labelings of graph families: graph generators,
//! constructive labelings, an independent verifier and an exhaustive search
//! oracle.
//!
//! ```
//! use supermagic_core::{build_graph, covering_cycles_in, label_fans, verify, FamilySpec, Mode};
//!
//! let spec = FamilySpec::Fans { m: 2, n: 3 };
//! let g = build_graph(&spec).unwrap();
//! let cycles = covering_cycles_in(&spec, &g).unwrap();
//! let lab = label_fans(2, 3).unwrap();
//! let report = verify(&g, &lab, 3, Mode::Covering, Some(&cycles)).unwrap();
//! assert_eq!(report.magic_constant, Some(57));
//! ```

pub mod constants;
pub mod cycles;
pub mod error;
pub mod family;
pub mod graph;
pub mod labelers;
pub mod labeling;
pub mod search;
pub mod typos;
pub mod verify;

pub use constants::{closed_form_constant, construction_constant, predicted_constant, Ratio};
pub use cycles::{
    check_covering, covering_cycles, covering_cycles_in, enumerate_cycles, enumerate_cycles_with, Covering, Cycle,
    EnumerateOptions,
};
pub use error::{Error, Result};
pub use family::{Family, FamilySpec};
pub use graph::{build_graph, build_graph_structural, Graph, VertexId};
pub use labelers::{
    construct, fan_phase_weights, label_antiprism, label_books, label_fan_union, label_fan_union_printed, label_fans,
    label_fans_printed, label_ladder_union, label_ladders, label_triangular_ladders, label_wheels,
    label_wheels_printed, Construction, FanPhases,
};
pub use labeling::{eav_path_forest, sem_extend, EdgeMagicExtension, Label, PartialVertexLabeling, TotalLabeling};
pub use search::{find_labelings, fit_check, SearchConfig, SearchOutcome};
pub use verify::{verify, verify_indexed, CycleWeight, Mode, VerificationReport};

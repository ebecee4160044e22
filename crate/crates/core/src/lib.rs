//! Planar d-targets and the finite objects around their edge-colourings:
//! rotation-system embeddings, exact colouring by perfect matchings, the
//! reducible configuration scanner, discharging, and switching with cocycle
//! certificates.

pub mod colouring;
pub mod discharging;
pub mod fixtures;
pub mod format;
pub mod generate;
pub mod planar;
pub mod structure;
pub mod switching;
pub mod target;

pub use colouring::{solve_colouring, verify_colouring, Colouring, SolveOptions, SolveOutcome};
pub use discharging::{discharge, DischargeReport};
pub use format::{emit_target, load_target, parse_ptg, ParseError, PtgDocument};
pub use planar::{EdgeId, Embedding, EmbeddingError, Graph, Region, RegionId, VertexId, VertexSet};
pub use structure::{detect_conf, is_prime, ConfMatch, PrimeVerdict};
pub use switching::{find_guenin_cut, verify_guenin_cut, GueninCut, SwitchSpec};
pub use target::{ScoreSequence, Target, TargetError, ValidationReport, DEFAULT_ODD_SET_CAP};

//! Exact-arithmetic workbench for Gilbert-Varshamov-type existence
//! bounds for entanglement-assisted asymmetric quantum error-correcting
//! codes.
//!
//! The crate evaluates two existence inequalities over arbitrary
//! precision integers, enumerates the achievable-distance Pareto
//! frontiers they induce, and backs the bound with concrete symplectic
//! linear algebra: entanglement degrees, symplectic duals, detection
//! checks, and desk-scale witness searches over GF(p^m).

pub mod asymptotic;
pub mod bound;
pub mod gf;
pub mod pareto;
pub mod symplectic;
pub mod witness;

pub use bound::{ball_sum, binomial, check_new, check_old, BoundParamsNew, BoundParamsOld};
pub use gf::{make_field, FieldElement, FieldSpec};
pub use pareto::{improves, pareto_new, pareto_old, reproduce_table1, ParetoFrontier};
pub use symplectic::{analyze_code, detection_check, symp_product, CodeSpace};
pub use witness::{search_witness, SearchConfig, SearchMode, WitnessReport};

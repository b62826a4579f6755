//! Semantics over specifications: decision procedures, the grounded
//! construction, finitary checks, bounded semi-decisions and a finite oracle.

mod checks;
mod finitary;
mod grounded;
mod oracle;
pub mod sat;
mod semidecide;

pub use checks::{characteristic, is_acceptable, is_admissible, is_complete, is_conflict_free, is_stable};
pub use finitary::{attackers_of_word, finitary_syntactic, FinitaryStatus, WordAttackers, DEFAULT_ATTACKER_CAP};
pub use grounded::{grounded, GroundedResult, GroundedStatus};
pub use oracle::{finite_oracle, OracleResult, ORACLE_MAX_ARGS};
pub use sat::{sat_solve, ClauseSet, SatResult};
pub use semidecide::{no_credulous_admissible, stable_empty_semidecide, SemiDecisionResult, SemiStatus};

//! Scenario file I/O, seeded random-instance generation, the theorem
//! verification suite, the hypothesis-necessity probe, and the CLI driver.

pub mod cli;
pub mod gen;
pub mod probe;
pub mod scenario;
pub mod suite;

pub use gen::GenConfig;
pub use scenario::{load_scenario, Scenario};
pub use suite::{run_suite, SuiteReport};

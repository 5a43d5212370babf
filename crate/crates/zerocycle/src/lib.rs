//! File formats, bundled fixtures, reports and the command-line front end of
//! the zerocycle verifier. The algebra lives in [`zerocycle_core`].

pub mod catalog;
pub mod cli;
pub mod report;
pub mod schema;

pub use catalog::{all_fixtures, get_fixture, list_fixtures, Fixture};
pub use schema::{parse_configuration, serialize_configuration, ParseError};

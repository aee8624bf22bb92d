//! Front end for `seifert-core`: input formats, JSON reports, check
//! batteries and the `verify` suites.

pub mod checks;
pub mod corpus;
pub mod input;
pub mod random;
pub mod report;
pub mod suites;
pub mod verdict;

//! Checks that do not go through the class algebra: literal tuple counting,
//! embedded character tables and the bijection behind `s(2) = |G|·k_r`.

pub mod bijection;
pub mod cyclotomic;
pub mod fixture;
pub mod naive;
pub mod report;
pub mod suite;

pub use bijection::{bijection_sets, verify_bijection, BIJECTION_LIMIT};
pub use cyclotomic::Cyclotomic;
pub use fixture::{
    fixture, fixture_for_preset, fixture_indicator_multiset, fixture_names, fixture_preset,
    CharacterTableFixture,
};
pub use naive::{literal_tuple_count, naive_tuple_count, LITERAL_LIMIT};
pub use report::{Check, VerificationReport};
pub use suite::{run_verification_suite, verify_group};

//! Seeded instance generation and the check suite.

pub mod generator;
pub mod suite;

pub use generator::{
    random_flag_sphere, random_simplex_subdivision, Generated, GeneratorSpec, Move, TrailStep, EDGE_CHOICE, RNG_NAME,
};
pub use suite::{
    report_header, run_plan, run_suite, summarize, Check, CheckOutcome, CheckRecord, ConjectureReport, Family,
    Instance, ReportHeader, SuiteOptions, SuitePlan, SuiteReport, Tally, Tier, FACE_GUARD,
};

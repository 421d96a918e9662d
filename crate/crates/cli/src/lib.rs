pub mod builder;
pub mod config;
pub mod error;
pub mod report;
pub mod suite;

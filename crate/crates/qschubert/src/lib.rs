//! Verification harness, output records, diagram rendering and the
//! command-line front end built on [`qschubert_core`].

pub mod cli;
pub mod harness;
pub mod record;
pub mod render;

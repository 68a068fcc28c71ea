//! Exact structure constants for the compact simple Lie algebras, with root
//! systems, Kostant multiplets and sphere-structure reports.
//!
//! All arithmetic is exact. A table is accepted only after a full Jacobi
//! sweep over every basis triple finds no violation.

pub mod builder;
pub mod cli;
pub mod kostant;
pub mod linalg;
pub mod rootsys;
pub mod topol;

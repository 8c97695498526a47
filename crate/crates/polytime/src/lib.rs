//! Concrete syntax and command-line front end for `polytime-core`.

pub mod commands;
pub mod sexpr;
pub mod syntax;

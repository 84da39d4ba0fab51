//! Command implementations and the fact suite behind the `so5` binary.

pub mod commands;
pub mod facts;
mod predicates;
pub mod presentations;

use so5_core::Error;

pub const EXIT_FACT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Process exit code for a library error.
pub fn exit_code(e: &Error) -> i32 {
    match e {
        _ if e.is_budget() => EXIT_BUDGET,
        Error::Parse { .. }
        | Error::Semantic { .. }
        | Error::InvalidArgument(_)
        | Error::DegreeMismatch { .. }
        | Error::InvalidPermutation(_) => EXIT_USAGE,
        _ => EXIT_FACT_FAILURE,
    }
}

/// Budgets shared by every command.
#[derive(Clone, Copy, Debug)]
pub struct Settings {
    /// Overrides the per-group order bound for element-materializing algorithms.
    pub max_order: Option<u64>,
    pub tc_budget: usize,
}

impl Default for Settings {
    fn default() -> Self {
        Settings {
            max_order: None,
            tc_budget: so5_core::construct::DEFAULT_TC_BUDGET,
        }
    }
}

impl Settings {
    pub fn build(&self, expr: &str) -> so5_core::Result<so5_core::PermGroup> {
        let g = so5_core::build(expr)?;
        Ok(match self.max_order {
            None => g,
            Some(m) => g.with_limits(so5_core::Limits {
                enumeration: m.max(so5_core::Limits::default().enumeration),
                materialize: m,
            }),
        })
    }
}

/// Rendered result of a command.
#[derive(Clone, Debug)]
pub struct Output {
    pub text: String,
    pub json: serde_json::Value,
    pub exit: i32,
}

impl Output {
    pub fn ok(text: String, json: serde_json::Value) -> Self {
        Output { text, json, exit: 0 }
    }
}

//! The structured sign-description language.
//!
//! A description is one sentence: a subject (`this lane` / `this road`)
//! followed by comma-separated clauses and a terminating period. The clause
//! templates are normative and frozen; [`GRAMMAR_VERSION`](crate::GRAMMAR_VERSION)
//! is bumped whenever one changes:
//!
//! | kind            | template                                                         |
//! |-----------------|------------------------------------------------------------------|
//! | DIRECTION       | `allows driving [k1, k2]`                                        |
//! | DESTINATION     | `heading to [k1, k2]`                                            |
//! | VEHICLE_CLASS   | `restricted to [..]` / `prohibited for [..]`                     |
//! | SPEED_RANGE     | `with speed limited from {lo} to {hi} km/h` / `... to {hi} km/h` |
//! | DIMENSION_LIMIT | `with {height\|width\|weight} limited to {v} {m\|t}`             |
//! | DISTANCE_KEEP   | `keeping distance over {v} m`                                    |
//! | FREE_TEXT       | raw text                                                         |
//!
//! Numbers render without trailing zeros and with a decimal point only when
//! fractional, so serialize/parse round-trips are bit-exact. Keywords may not
//! contain `,`, `[` or `]`; free text additionally may not contain `.` or
//! start with one of the clause heads above. Those restrictions keep the
//! grammar unambiguous while letting free text hold anything else.

mod ast;
mod canonical;
mod parse;
mod render;
mod validate;

pub use ast::{
    Clause, ClauseKind, Dimension, DirectionKeyword, Polarity, StructuredDescription, Subject,
};
pub use canonical::canonicalize;
pub use parse::{parse_description, ParseError};
pub use render::{format_number, render_clause, render_description, serialize};
pub use validate::{validate, Violation, ViolationCode, RESERVED_HEADS};

/// Returned by [`serialize`] when the description violates an invariant.
#[derive(Debug, Clone, thiserror::Error)]
#[error("invalid description: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct InvalidDescription {
    pub violations: Vec<Violation>,
}

/// Lane- or road-level scope of a description.
pub fn scope_of(desc: &StructuredDescription) -> Subject {
    desc.subject
}

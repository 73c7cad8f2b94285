//! Concrete syntax and command implementations for the `sortsubst` tool.

pub mod commands;
pub mod parse;
pub mod roundtrip;

pub use parse::{parse_con, parse_expr, parse_isub, parse_itm, parse_ty, ErrorKind, ParseError, SourceSpan};
pub use roundtrip::{check_round_trip, RoundTrip};

//! An exact symbolic engine for bracketed words and operated
//! polynomials. Words over a set of generators may be wrapped in a
//! unary bracket operator; adjacent bracket pairs [u][v] rewrite to
//! [B(u,v)] for a configurable kernel B. The crate decides whether a
//! kernel generates a convergent system, checks the Gröbner-Shirshov
//! composition conditions, and multiplies elements of the resulting
//! free algebra on the normal-form word basis.

pub mod coeff;
pub mod freealg;
pub mod gsbasis;
pub mod order;
pub mod parse;
pub mod poly;
pub mod rbtype;
pub mod rewrite;
pub mod sample;
pub mod words;

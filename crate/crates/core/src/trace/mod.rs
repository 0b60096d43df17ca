//! The character algebra in its multicurve basis.

pub mod evaluate;
pub mod expand;
pub mod expression;
pub mod multicurve;

pub use evaluate::{evaluate_expression, evaluate_multicurve, RankReport};
pub use expression::{parse_rational, rational, TraceExpression};
pub use multicurve::Multicurve;

//! Two generic 2×2 matrices `x`, `y`: invariants, the trace algebra, bracket
//! normal forms and the balanced swap polynomials built from them.
//!
//! Throughout, `x` is the letter `x1` and `y` is `y1`.

pub mod bracket;
pub mod gram;
pub mod poincare;
pub mod selement;
pub mod series;
pub mod swap;
pub mod tpoly;

pub use bracket::{absorb_generator, absorb_invariant, absorb_invariant_form, BracketForm, ABSORB_ORDER};
pub use gram::{gram_matrix, trace_gram, GramReport};
pub use poincare::{poincare_check, PoincareReport, DEFAULT_MAXDEG};
pub use selement::{nc_to_s, s_multiply, SElement};
pub use series::BiSeries;
pub use swap::{
    balanced_q_prime, balanced_split, esss_family, esss_invariant, literal_teo_split, p_xy, q_variant,
    q_xy, TracedBracket, TracedTensor,
};
pub use tpoly::{bracket_square, Generator, TPoly};

pub mod alternate;
pub mod pit;
pub mod poly;
pub mod split;
pub mod stream;
pub mod tensor;
pub mod text;
pub mod word;

pub use alternate::{alternate, alternate_tensor, capelli_poly, standard_poly, DEFAULT_TERM_CAP};
pub use pit::{is_tpi, random_assignment, random_matrix, random_traceless, seeded_rng, TpiVerdict};
pub use poly::{Assignment, NcPoly};
pub use split::{contract, split_alt_eval, Contraction, Operand};
pub use stream::{alt_eval_matrix, alt_eval_stream, alt_eval_stream_with_budget, estimate_work, MonomialPattern};
pub use tensor::TensorPoly2;
pub use word::{Family, Letter, Word};

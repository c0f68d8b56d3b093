pub mod algebra;
pub mod character;
pub mod partition;
pub mod permutation;
pub mod weingarten;

pub use algebra::{
    acts_as_scalar, algebra_to_operator, class_to_algebra, phi_of_identity, phi_transform,
    ClassFunction, GroupAlgebraElement,
};
pub use character::{character, character_table};
pub use partition::{gl_dimension, partitions, Partition};
pub use permutation::Permutation;
pub use weingarten::{full_cycle_closed_form, weingarten, weingarten_scaled};

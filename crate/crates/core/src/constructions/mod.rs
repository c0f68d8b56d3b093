//! Swap polynomials for general `d`: the alternating invariant `𝒯_d`, Regev's
//! central polynomial and the even/odd constructions built from it.

pub mod capelli;
pub mod certificate;
pub mod dual;
pub mod even;
pub mod odd;
pub mod profiles;
pub mod regev;
pub mod tcal;

pub use capelli::{capelli_check, capelli_swap, CapelliReport, CapelliSwap};
pub use certificate::{PointSample, SwapCertificate};
pub use dual::{dual_basis_default, dual_basis_from_matrices, dual_basis_swap, DualCertificate};
pub use even::{compare_printed, even_analysis, even_measure, even_swap_pair, EvenAnalysis, EvenSwapPair};
pub use odd::{odd_coefficient, odd_d3_report, OddCoefficient, OddReport};
pub use profiles::{is_admissible, profile_check, weingarten_cross};
pub use regev::{regev_f_symbolic, regev_f_value, regev_multiplier, RegevPattern};
pub use tcal::{alternating_trace_product, c_d, primitive_t, t_cal, vec_det};

/// Sign `ε_d` with `𝒯_d = ε_d·C_d·det(vec(x_1),…,vec(x_{d²}))`, measured once.
pub fn t_cal_sign(d: usize) -> Option<i32> {
    match d {
        1 => Some(1),
        2 => Some(-1),
        3 => Some(1),
        _ => None,
    }
}

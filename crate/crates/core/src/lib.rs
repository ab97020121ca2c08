//! Exact computation with symmetrizers of Schur superalgebras `S(m|n,r)`.
//!
//! The crate expands symmetrizers `T[i:j]` and their modified (integral)
//! versions into normal-form monomials of the supercommutative coordinate
//! algebra `A(m|n)`, straightens them to the semistandard basis over ℚ and ℤ,
//! applies Capelli operators and superderivations, and checks ranks over ℚ
//! and `𝔽_p`.

pub mod capelli;
pub mod cli;
pub mod combinatorics;
pub mod derivations;
pub mod error;
pub mod exact_linalg;
pub mod schur_action;
pub mod straightening;
pub mod superalgebra;
pub mod symmetrizer;
pub mod verify;

pub use capelli::{
    capelli_apply, capelli_left, capelli_right, ell_bar, ell_under, polarize, polarize_all,
    CapelliEvaluator, CapelliMatrix, PolarizationSpec,
};
pub use combinatorics::{
    dominance_leq, enumerate_semistandard, garnir_transversal, is_semistandard, Axis, BasicTableau,
    DominanceStats, MultiIndex, Partition, Perm, StatKind,
};
pub use derivations::{
    diag_binomial, divided_power, divided_power_integral, standard_generators, superderive,
    zform_closure_check, DerivationSpec, ZFormReport,
};
pub use error::{Error, Result};
pub use exact_linalg::{
    express_in_basis, rank_exact, rank_integer_matrix, reduce_mod_p, BasisSolver, MonomialMatrix,
    RankExact,
};
pub use schur_action::{act_left, act_right, xi_evaluate, XiElement};
pub use straightening::{straighten_modified, straighten_pair, Straightener, StraighteningResult};
pub use superalgebra::{
    normalize_monomial, star_action, Coeff, FormalSum, Fp, Monomial, Side, Signature,
    SignedMultiIndex, Symbol,
};
pub use symmetrizer::{
    canonical_ell, modified_symmetrizer, symmetrizer, symmetry_factors, Expander, SymmetrizerKey,
    SymmetryFactors, Variant,
};
pub use verify::{run_suite, Scope, Suite, SuiteReport};

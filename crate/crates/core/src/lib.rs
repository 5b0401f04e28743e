//! Stanley-Reisner rings of finite simplicial complexes, antidiagonal Gröbner
//! bases on infinitely many variables, and Schubert determinantal ideals of
//! infinite permutations checked level by level at finite truncation.

pub mod cm;
pub mod complex;
pub mod error;
pub mod field;
pub mod groebner;
pub mod linalg;
pub mod monomial;
pub mod order;
pub mod poly;
pub mod schubert;
pub mod sop;

pub use cm::{certify_cm, reisner_cm, sop_quotient_check, verify_theorem_a_hypotheses, ChainReport, CmReport};
pub use complex::{
    complex_from_ideal, f_vector, h_vector, ideal_from_complex, is_full_subcomplex, link, one_skeleton_dot,
    reduced_homology_ranks, FVector, HVector, SimplicialComplex,
};
pub use error::{Error, Result};
pub use field::{Field, FieldChoice, PrimeField, Rationals, DEFAULT_PRIME};
pub use groebner::{buchberger_criterion, divide, is_groebner_basis, leading_term, s_polynomial, BuchbergerOptions};
pub use monomial::{divides, minimal_generators, Monomial, MonomialIdeal, VarIndex};
pub use order::TermOrder;
pub use poly::{parse_polynomial, Polynomial};
pub use schubert::{
    antidiagonal_initial_ideal, determinantal_ideal, initial_complex, rank_matrix, theorem_d_pipeline,
    verify_inclusions, InfinitePermutation, PartialPermutation, PipelineConfig, PipelineReport, RankMatrix,
};
pub use sop::{compatible_chain, extend_good_sop, find_good_sop, is_good, stanley_check, SopMatrix};

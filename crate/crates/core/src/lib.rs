//! Finite fields, polynomials over them and over `Z[T]`, small permutation
//! groups, and the computations built on top: specialization censuses of
//! covers of the line over finite fields, the group-theoretic twisting
//! model, and local-to-global progressions over `Q`.

pub mod arith;
pub mod bipoly;
pub mod divisor;
pub mod ff;
pub mod localglobal;
pub mod perm;
pub mod poly;
pub mod tchebotarev;
pub mod twist;

pub use bipoly::{disc_y, disc_y_mod, specialize, BiPoly, BiPolyError, IntPoly, Specialization};
pub use divisor::{DegreeDivisor, DivisorError};
pub use ff::{arith as field_arith, ArithOp, Field, FieldElem, FieldError, FieldInfo};
pub use localglobal::{
    beta_plans, build_progression, find_residue, good_primes, hilbert_certificate,
    nontrivial_class_types, observed_types, plan_at, verify_progression, Cover, LocalError, PrimePlan,
    Progression, ProgressionReport,
};
pub use perm::{
    centralizer_order, class_size_sn, conjugacy_classes, cycle_type, generate, hom_from_images,
    is_normal, simultaneous_conjugacy, GroupError, GroupHom, Perm, PermGroup,
};
pub use poly::{
    degree_divisor, distinct_degree, equal_degree_split, factor, is_irreducible, poly_gcd,
    squarefree_decomposition, Poly, PolyError,
};
pub use tchebotarev::{
    branch_bound, branch_bound_int, census, chowla_count, chowla_sweep, tcheb_check, trinomial,
    CensusOptions, CensusReport, ChowlaCount, ChowlaVerdict, TchebError, Verdict,
};
pub use twist::{
    check_const_comp, check_ii2, count_ii2, cyclic_chi_a, cyclic_situation_c, enumerate_isoms,
    gamma_representatives, twisted_fixed_points, ChiBar, ChiClass, SpecializationDatum,
    TwistError, TwistProblem,
};

//! Exact-arithmetic toolkit for projection mixed areas of four-dimensional
//! polytopes and realizability of surface classes in products of projective
//! spaces.
//!
//! The crate decides membership in the regions Δ(T₂) and Δ(T₁) of
//! nonnegative sextuples, tests symmetric rational matrices for the
//! Lorentzian property (entrywise nonnegative, at most one positive
//! eigenvalue), computes the six projection mixed areas `A ∧ B` of pairs of
//! rational polytopes in ℚ⁴, and constructs explicit polytope witnesses and
//! algebraic certificates for any admissible target vector. All decision
//! paths run in arbitrary-precision rational arithmetic; approximate paths
//! (the self-realization constructions) emit dyadic-vertex polytopes whose
//! wedge vectors are then recomputed exactly, so every reported residual is
//! unconditionally trustworthy.
//!
//! Index convention (used everywhere, see [`wedge`]): the entry `p_ij` is
//! the mixed area of the projections that delete coordinates `i` and `j`.
//! Wedge vectors are written in the fixed order
//! `(p12, p13, p14, p23, p24, p34)`.
//!
//! Entry points:
//! - [`exact`]: rational scalars, exact surd comparison, matrix inertia.
//! - [`polygon`]: exact planar hulls, normalized areas, mixed areas.
//! - [`wedge`]: polytopes in ℚ⁴, projections, `A ∧ B`, the group action.
//! - [`membership`]: Δ(T₂)/Δ(T₁) verdicts, zero-orbit classification,
//!   the integral obstruction, seeded samplers.
//! - [`realize`]: certificate-producing realization of admissible targets.
//! - [`homology`]: surface classes in (ℙ¹)⁴ and ℙ^m, complete-intersection
//!   factorizations, Grassmannian realizability.
//!
//! The `examples/` directory contains one runnable example per capability;
//! a thin `projwedge` binary exposes the same operations as subcommands.

pub mod error;
pub mod exact;
pub mod homology;
pub mod membership;
pub mod polygon;
pub mod realize;
pub mod wedge;

pub use error::{Error, Result};
pub use exact::{cmp_sqrt_sum, is_rational_square, Inertia, Rational, SymMatrix};
pub use membership::{
    classify_zero_orbit, lorentz_matrix, sample_t2, t1_membership, t2_membership, z_obstruction,
    MembershipVerdict, Region, Status, Stratum, ZeroOrbitClass,
};
pub use polygon::{ConvexPolygon, Point2};
pub use realize::{
    realize_boundary_positive, realize_interior, realize_pair, realize_self_boundary,
    realize_self_interior, realize_zero_entry, PairCertificate, SelfCertificate,
};
pub use wedge::{
    act_on_pair, equivalent_over_q, equivalent_over_r, wedge, Perm, PermutedScaling, Polytope4,
    SymmetricTriple, WedgeVector,
};
pub use homology::{
    ci_certificate, coho_mul, eta_of_wedge, grass_realizable, grass_witness_check,
    q_realizable_p14, q_realizable_pm, CIFactorization, CohoClass, GrassQuery, PmClass,
    RealizabilityVerdict,
};

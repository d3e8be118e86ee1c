#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "symconn/connection.hpp"
#include "symconn/frame_algebra.hpp"
#include "symconn/linear_algebra.hpp"
#include "symconn/symplectic.hpp"

namespace symconn {

/// Invariant torsion-free connections with ∇Ω = 0, as an affine space
/// particular + span(homogeneous_basis). Unknowns are ordered
/// lexicographically in (i, j, k) for Γ_ij^k; the basis is the reduced
/// echelon basis of the solution directions in that order.
struct AffineSolutionSpace {
  Connection particular;
  std::vector<Tensor> homogeneous_basis;

  std::size_t dimension() const noexcept { return homogeneous_basis.size(); }
  /// particular + Σ t_a basis_a.
  Connection point(std::span<const Rational> coordinates) const;
  /// Membership of a rational connection.
  bool contains(const Connection& conn) const;
  /// Membership of a direction (a difference of two connections).
  bool contains_direction(const Tensor& direction) const;
};

/// Linear system {Γ_ij^k − Γ_ji^k = c_ij^k (i < j), ∇_i Ω_jk = 0 (j < k)} in
/// the dim^3 unknowns Γ_ij^k, as a coefficient matrix and right-hand side.
struct ConnectionSystem {
  RationalMatrix matrix;
  RationalVector rhs;
};
ConnectionSystem symplectic_connection_system(const FrameAlgebra& alg,
                                              const SymplecticForm& omega);

/// Solves the system above exactly. Throws PreconditionError when it is
/// inconsistent, which happens exactly when Ω is not closed.
AffineSolutionSpace symplectic_connection_space(const FrameAlgebra& alg,
                                                const SymplecticForm& omega);

/// Curvature vanishes identically as polynomials in the parameter.
bool is_flat_family(const FrameAlgebra& alg, const Connection& family);

/// Invariant X with L_X∇ = 0. Needs a torsion-free rational connection.
Subspace automorphism_space(const FrameAlgebra& alg, const Connection& conn);

/// Invariant X with d(ι_X Ω) = 0.
Subspace symplectic_field_space(const FrameAlgebra& alg,
                                const SymplecticForm& omega);

struct NonSymplecticReport {
  std::size_t automorphism_dim = 0;
  std::size_t symplectic_automorphism_dim = 0;
  /// An affine automorphism that is not symplectic, present iff the two
  /// dimensions differ.
  std::optional<Tensor> witness;
};

NonSymplecticReport find_non_symplectic_automorphisms(
    const FrameAlgebra& alg, const SymplecticForm& omega, const Connection& conn);

}  // namespace symconn

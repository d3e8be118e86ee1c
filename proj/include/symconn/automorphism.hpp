#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symconn/connection.hpp"
#include "symconn/frame_algebra.hpp"
#include "symconn/linear_algebra.hpp"
#include "symconn/symplectic.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

// Endomorphisms of the tangent space are (down, up) tensors A_i^j acting on
// vectors by (A v)^j = v^i A_i^j. compose(A, B) applies A first, then B:
// (A∘B)_i^j = A_i^p B_p^j, which is the order used for A^{∘k}.

Tensor compose(const Tensor& a, const Tensor& b);
Tensor endomorphism_power(const Tensor& a, std::size_t k);
Tensor apply(const Tensor& a, const Tensor& v);
Tensor commutator(const Tensor& a, const Tensor& b);

/// A_i^j = (dX♭)_i^j, the raised exterior derivative of X♭. Computed both by
/// raising the last slot of dX♭ and as ∇_i X^j − ∇^j X_i; a mismatch throws
/// ConventionFault. Throws PreconditionError unless the connection is
/// torsion-free with ∇Ω = 0.
Tensor musical_endomorphism(const FrameAlgebra& alg, const SymplecticForm& omega,
                            const Connection& conn, const Tensor& x);

/// tr A^{∘k}, k >= 1.
Scalar trace_power(const Tensor& a, std::size_t k);

/// Least k with A^{∘k} = 0, or nullopt if A^{∘dim} != 0.
std::optional<std::size_t> nilpotency_index(const Tensor& a);

/// Kernel and image of a rational endomorphism.
Subspace kernel(const Tensor& a);
Subspace image(const Tensor& a);

struct NullFiltration {
  /// kernel_chain[k-1] = ker A^{∘k}, image_chain[k-1] = im A^{∘k}, for
  /// k = 1 .. nilpotency index (or dim when A is not nilpotent).
  std::vector<Subspace> kernel_chain;
  std::vector<Subspace> image_chain;
};

/// Throws ParameterError when A depends on the parameter.
NullFiltration null_filtration(const Tensor& a);

struct Isotropy {
  bool isotropic;
  bool lagrangian;
};
Isotropy is_isotropic(const SymplecticForm& omega, const Subspace& s);

/// True iff the endomorphism maps s into itself.
bool maps_into(const Tensor& endo, const Subspace& s);

/// Canonical echelon basis of the infinitesimal holonomy algebra: the
/// smallest commutator-closed span containing the curvature endomorphisms
/// R(E_i, E_j) and closed under the derivations M ↦ [M, Γ_l] that produce
/// the components of the iterated covariant derivatives ∇^m R. Each round
/// raises the derivative order by one; throws PreconditionError when the
/// span still grows after max_order rounds (default dim^2).
std::vector<Tensor> infinitesimal_holonomy(
    const FrameAlgebra& alg, const Connection& conn,
    std::optional<std::size_t> max_order = std::nullopt);

bool commutes_with_holonomy(const Tensor& a, const std::vector<Tensor>& generators);

/// Basis of the endomorphisms A with ∇A = 0 (rational connection).
std::vector<Tensor> parallel_endomorphisms(const Connection& conn);

struct AutomorphismReport {
  Tensor vector;
  bool is_affine_automorphism = false;
  bool is_symplectic = false;
  Tensor d_flat;
  Scalar divergence;

  // The fields below are only computed for affine automorphisms.
  bool d_flat_parallel = false;
  /// dX♭ ∧ Ω_{n−1} = (div X) Ω_n.
  bool wedge_identity = false;
  std::optional<Tensor> endomorphism;
  std::vector<Scalar> trace_powers;  // k = 1 .. dim
  std::optional<std::size_t> nilpotency_index;
  std::vector<Subspace> kernel_chain;
  std::vector<Subspace> image_chain;
  /// Isotropy of im A^{∘(N−1)}, N the nilpotency index; unset when A is
  /// not nilpotent.
  std::optional<bool> image_isotropic;
  std::optional<bool> image_lagrangian;
  std::optional<bool> holonomy_commutes;
  std::size_t holonomy_dimension = 0;

  /// Parameter value used for the rank computations, if any.
  std::optional<Rational> substituted;
};

/// Runs the automorphism chain for one invariant vector field. Symbolic
/// identities are evaluated over the parameter; echelon and holonomy steps
/// use `parameter_value` when the data depend on the parameter (throwing
/// ParameterError if it is needed but absent).
AutomorphismReport verify_automorphism(
    const FrameAlgebra& alg, const SymplecticForm& omega, const Connection& conn,
    const Tensor& x, std::optional<Rational> parameter_value = std::nullopt);

}  // namespace symconn

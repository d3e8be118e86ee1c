#pragma once

#include <cstddef>
#include <vector>

#include "symconn/connection.hpp"
#include "symconn/frame_algebra.hpp"
#include "symconn/symplectic.hpp"

// Reference computations written directly from the definitions with plain
// loops over rationals. They share no code with the library beyond the data
// containers, so agreement is a real cross-check.
namespace symconn::oracle {

using Rows = std::vector<std::vector<Rational>>;

/// Textbook Gaussian elimination with rational pivots.
std::size_t rank(Rows rows);

/// Number of free parameters of {torsion = 0, ∇Ω = 0}, assembled from all
/// index pairs (including the redundant ones). Returns -1 when the system
/// is inconsistent.
long moduli_dimension(const FrameAlgebra& alg, const SymplecticForm& omega);

/// (L_X∇)(E_i, E_j) = [X, ∇_{E_i}E_j] − ∇_{[X,E_i]}E_j − ∇_{E_i}[X, E_j].
Tensor lie_derivative(const FrameAlgebra& alg, const Connection& conn,
                      const Tensor& x);

/// R(E_i,E_j)E_q = ∇_i∇_j E_q − ∇_j∇_i E_q − ∇_{[E_i,E_j]}E_q, stored
/// as R_ijq^k.
Tensor curvature(const FrameAlgebra& alg, const Connection& conn);

/// (dα)_ij = −c_ij^p α_p for a one-form.
Tensor d_one_form(const FrameAlgebra& alg, const Tensor& alpha);

/// X♭_i = X^p Ω_pi.
Tensor flat(const Tensor& x, const SymplecticForm& omega);

/// Rank of the span of a list of tensors.
std::size_t span_rank(const std::vector<Tensor>& tensors);

}  // namespace symconn::oracle

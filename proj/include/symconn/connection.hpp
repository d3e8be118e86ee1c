#pragma once

#include <cstddef>

#include "symconn/frame_algebra.hpp"
#include "symconn/symplectic.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

/// Invariant affine connection: ∇_{E_i} E_j = Γ_ij^k E_k, stored as a
/// (down, down, up) tensor. Torsion-freeness and ∇Ω = 0 are checked
/// predicates, not construction invariants.
class Connection {
 public:
  explicit Connection(Tensor gamma);
  static Connection zero(std::size_t dim);

  std::size_t dim() const noexcept { return gamma_.dim(); }
  const Tensor& christoffel() const noexcept { return gamma_; }
  const Scalar& gamma(std::size_t i, std::size_t j, std::size_t k) const {
    return gamma_.at({i, j, k});
  }
  bool is_rational() const { return gamma_.is_rational(); }
  Connection substitute(const Rational& value) const {
    return Connection(gamma_.substitute(value));
  }

  friend bool operator==(const Connection&, const Connection&) = default;

 private:
  Tensor gamma_;
};

/// (∇_X Y)^k = X^i Y^j Γ_ij^k. Frame derivatives of invariant components
/// vanish, so there is no directional term.
Tensor covariant_derivative_vector(const Connection& conn, const Tensor& x,
                                   const Tensor& y);

/// T_ij^k = Γ_ij^k − Γ_ji^k − c_ij^k.
Tensor torsion(const FrameAlgebra& alg, const Connection& conn);

/// ∇T with the new derivative slot in front:
/// (∇_i T)_{j..}^{k..} = −Σ_down Γ_{i j_s}^p T[..p..] + Σ_up Γ_{i p}^{k_s} T[..p..].
Tensor covariant_derivative(const Connection& conn, const Tensor& t);

/// R_ijq^k = Γ_ip^k Γ_jq^p − Γ_jp^k Γ_iq^p − c_ij^p Γ_pq^k, so that
/// 2∇_[i ∇_j] X^k = R_ijp^k X^p for a torsion-free connection.
Tensor curvature(const FrameAlgebra& alg, const Connection& conn);

/// (L_X ∇)_ij^k. Evaluated twice, via ∇_i∇_j X^k + X^p R_pij^k and via
/// ∇_{E_i}∇_{E_j}X − ∇_{∇_{E_i}E_j}X + R(X, E_i)E_j with R applied as an
/// operator on vector fields; the results must agree.
/// Throws PreconditionError for a connection with torsion.
Tensor lie_derivative_connection(const FrameAlgebra& alg,
                                 const Connection& conn, const Tensor& x);

/// Lowers the last slot of L_X∇ with Ω: (L_X∇)_ijk.
Tensor lower_lie_derivative(const Tensor& lie_derivative,
                            const SymplecticForm& omega);

/// ∇_p X^p = Γ_pq^p X^q.
Scalar divergence(const Connection& conn, const Tensor& x);

/// Identity checks used as preconditions elsewhere. The returned string is
/// empty on success and otherwise names the first failing component, e.g.
/// "torsion nonzero at (2,4): T_24^1 = 1".
std::string describe_torsion(const FrameAlgebra& alg, const Connection& conn);
std::string describe_nonparallel_omega(const Connection& conn,
                                       const SymplecticForm& omega);

/// Throws PreconditionError unless torsion vanishes and ∇Ω = 0.
void require_symplectic_connection(const FrameAlgebra& alg,
                                   const SymplecticForm& omega,
                                   const Connection& conn);

}  // namespace symconn

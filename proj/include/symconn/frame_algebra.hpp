#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "symconn/scalar.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

/// One failed identity found while validating structure constants.
/// Indices are 1-based; `l` is unused for antisymmetry violations.
struct AlgebraViolation {
  enum class Kind { antisymmetry, jacobi };
  Kind kind;
  std::size_t i, j, k, l;
  Scalar residual;

  std::string describe() const;
};

class AlgebraValidationError : public std::domain_error {
 public:
  explicit AlgebraValidationError(std::vector<AlgebraViolation> violations);
  const std::vector<AlgebraViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<AlgebraViolation> violations_;
};

/// Lie algebra of invariant vector fields given by structure constants
/// c_ij^k, stored as a (down, down, up) tensor: [E_i, E_j] = c_ij^k E_k.
class FrameAlgebra {
 public:
  /// Validates antisymmetry and the Jacobi identity; throws
  /// AlgebraValidationError listing every violated tuple.
  static FrameAlgebra validate(Tensor structure_constants);
  /// Skips validation. Only for diagnosing invalid input (e.g. showing
  /// that d∘d fails when Jacobi does).
  static FrameAlgebra unchecked(Tensor structure_constants);
  static FrameAlgebra abelian(std::size_t dim);

  std::size_t dim() const noexcept { return c_.dim(); }
  const Tensor& structure_constants() const noexcept { return c_; }
  const Scalar& c(std::size_t i, std::size_t j, std::size_t k) const {
    return c_.at({i, j, k});
  }

  friend bool operator==(const FrameAlgebra&, const FrameAlgebra&) = default;

 private:
  explicit FrameAlgebra(Tensor c) : c_(std::move(c)) {}
  Tensor c_;
};

/// All antisymmetry and Jacobi failures of a raw constant table.
std::vector<AlgebraViolation> check_algebra(const Tensor& structure_constants);

/// [X, Y]^k = X^i Y^j c_ij^k.
Tensor bracket(const FrameAlgebra& alg, const Tensor& x, const Tensor& y);

// ---------------------------------------------------------------------------
// Exterior calculus on invariant forms.
//
// A p-form is a fully antisymmetric all-down tensor whose components are the
// values on frame vectors, α_{i1..ip} = α(E_i1, ..., E_ip). The wedge
// product uses the matching determinant normalization, so
// (α∧β)_ij = α_i β_j − α_j β_i for one-forms.
// ---------------------------------------------------------------------------

bool is_form(const Tensor& t);
/// Alternation with the 1/p! weight; a projection onto forms.
Tensor antisymmetrize(const Tensor& t);
Tensor wedge(const Tensor& alpha, const Tensor& beta);
/// ι_X α, contracting X into the first slot.
Tensor interior_product(const Tensor& x, const Tensor& alpha);

/// Chevalley–Eilenberg differential: the exterior derivative of an invariant
/// form, dα(E_0..E_p) = Σ_{a<b} (−1)^{a+b} α([E_a, E_b], E_0..^a..^b..E_p).
/// The differential of a top-degree form is the zero (p+1)-tensor.
Tensor ce_differential(const FrameAlgebra& alg, const Tensor& alpha);

/// Cartan formula L_X α = ι_X dα + d ι_X α.
Tensor lie_derivative_form(const FrameAlgebra& alg, const Tensor& x,
                           const Tensor& alpha);

}  // namespace symconn

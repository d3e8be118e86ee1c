#pragma once

#include <cstddef>

#include "symconn/linear_algebra.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

/// Invariant symplectic form with rational components.
///
/// Index conventions: X_i = X^p Ω_pi lowers, X^i = Ω^ip X_p raises, and the
/// bivector is fixed by Ω^ip Ω_pj = −δ_j^i, so that raising after lowering
/// (and vice versa) is the identity.
class SymplecticForm {
 public:
  /// Throws ShapeError for a non-antisymmetric or wrongly typed tensor,
  /// ParameterError for parameter-dependent entries and PreconditionError
  /// when the Pfaffian vanishes.
  explicit SymplecticForm(Tensor lower);

  /// Ω = e^1∧e^2 + e^3∧e^4 + ... in dimension 2n.
  static SymplecticForm darboux(std::size_t n);

  std::size_t dim() const noexcept { return lower_.dim(); }
  const Tensor& lower() const noexcept { return lower_; }
  const Tensor& upper() const noexcept { return upper_; }
  const Rational& pfaffian() const noexcept { return pfaffian_; }

  const Scalar& operator()(std::size_t i, std::size_t j) const {
    return lower_.at({i, j});
  }
  /// Ω(u, v) for two vectors.
  Scalar evaluate(const Tensor& u, const Tensor& v) const;

  friend bool operator==(const SymplecticForm& a, const SymplecticForm& b) {
    return a.lower_ == b.lower_;
  }

 private:
  Tensor lower_;
  Tensor upper_;
  Rational pfaffian_;
};

/// Pfaffian of an antisymmetric rational matrix (zero for odd size).
Rational pfaffian(const RationalMatrix& m);

/// Lowers an up slot in place: T_..i.. = T^..p.. Ω_pi.
Tensor lower_index(const Tensor& t, std::size_t slot, const SymplecticForm& omega);
/// Raises a down slot in place: T^..i.. = Ω^ip T_..p...
Tensor raise_index(const Tensor& t, std::size_t slot, const SymplecticForm& omega);

/// X♭ = Ω(X, ·).
Tensor flat(const Tensor& x, const SymplecticForm& omega);

/// Ω_k = Ω^k / k!; Ω_0 is the constant 1.
Tensor omega_power(const SymplecticForm& omega, std::size_t k);

}  // namespace symconn

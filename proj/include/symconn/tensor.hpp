#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <vector>

#include "symconn/scalar.hpp"

namespace symconn {

enum class Variance : std::uint8_t { up, down };

using Valence = std::vector<Variance>;

inline constexpr std::size_t kMaxDimension = 8;

/// Dense tensor with constant components in the invariant frame E_1..E_dim.
///
/// Components are stored row-major over the slots in their horizontal order.
/// Multi-indices in the C++ API are 0-based (component (i, j) here is the
/// frame component with indices i+1, j+1); factories that name a frame
/// element such as frame_vector(dim, 2) = E_2 use 1-based labels.
class Tensor {
 public:
  Tensor() = default;
  Tensor(std::size_t dim, Valence valence);

  static Tensor from_components(std::size_t dim, Valence valence,
                                std::vector<Scalar> components);
  static Tensor vector(std::vector<Scalar> components);
  static Tensor covector(std::vector<Scalar> components);
  static Tensor scalar(std::size_t dim, const Scalar& value);
  /// E_label, 1-based.
  static Tensor frame_vector(std::size_t dim, std::size_t label);
  /// e^label, 1-based.
  static Tensor coframe(std::size_t dim, std::size_t label);
  /// Kronecker delta with valence (down, up).
  static Tensor identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t rank() const noexcept { return valence_.size(); }
  const Valence& valence() const noexcept { return valence_; }
  Variance variance(std::size_t slot) const { return valence_.at(slot); }
  bool has_valence(std::initializer_list<Variance> expected) const;
  std::size_t size() const noexcept { return components_.size(); }

  std::span<const Scalar> components() const noexcept { return components_; }
  const Scalar& operator[](std::size_t flat) const { return components_[flat]; }
  Scalar& operator[](std::size_t flat) { return components_[flat]; }

  std::size_t offset(std::span<const std::size_t> index) const;
  const Scalar& at(std::initializer_list<std::size_t> index) const;
  Scalar& at(std::initializer_list<std::size_t> index);
  const Scalar& at(std::span<const std::size_t> index) const;
  Scalar& at(std::span<const std::size_t> index);

  bool is_zero() const;
  bool is_rational() const;
  Tensor substitute(const Rational& value) const;

  Tensor& operator+=(const Tensor& rhs);
  Tensor& operator-=(const Tensor& rhs);
  Tensor& operator*=(const Scalar& factor);

  friend Tensor operator+(Tensor lhs, const Tensor& rhs) { return lhs += rhs; }
  friend Tensor operator-(Tensor lhs, const Tensor& rhs) { return lhs -= rhs; }
  friend Tensor operator-(Tensor value) { return value *= Scalar(-1); }
  friend Tensor operator*(Tensor lhs, const Scalar& rhs) { return lhs *= rhs; }
  friend Tensor operator*(const Scalar& lhs, Tensor rhs) { return rhs *= lhs; }
  friend bool operator==(const Tensor& lhs, const Tensor& rhs) = default;

 private:
  void require_same_shape(const Tensor& rhs, const char* op) const;

  std::size_t dim_ = 0;
  Valence valence_;
  std::vector<Scalar> components_;
};

/// Odometer over all multi-indices of a given rank, last slot fastest,
/// matching the flat component order.
class IndexCounter {
 public:
  IndexCounter(std::size_t dim, std::size_t rank)
      : dim_(dim), index_(rank, 0), done_(dim == 0 && rank > 0) {}

  bool done() const noexcept { return done_; }
  std::span<const std::size_t> index() const noexcept { return index_; }
  std::size_t operator[](std::size_t slot) const { return index_[slot]; }
  void next();

 private:
  std::size_t dim_;
  std::vector<std::size_t> index_;
  bool done_;
};

std::size_t power(std::size_t base, std::size_t exponent);

Tensor tensor_product(const Tensor& lhs, const Tensor& rhs);

/// Trace over one up slot and one down slot (in either order); rank drops
/// by two and the remaining slots keep their relative order.
Tensor contract(const Tensor& t, std::size_t slot_a, std::size_t slot_b);

/// Slot permutation: slot s of the result is slot order[s] of the input.
Tensor permute(const Tensor& t, std::span<const std::size_t> order);

std::ostream& operator<<(std::ostream& os, const Tensor& t);

}  // namespace symconn

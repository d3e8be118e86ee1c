#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "symconn/scalar.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

using RationalVector = std::vector<Rational>;

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  RationalVector row(std::size_t r) const;
  void append_row(const RationalVector& values);

  static RationalMatrix from_rows(const std::vector<RationalVector>& rows,
                                  std::size_t cols);
  static RationalMatrix identity(std::size_t n);

  friend RationalMatrix operator*(const RationalMatrix& a,
                                  const RationalMatrix& b);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  /// Reduced row echelon form; zero rows removed.
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination done fraction-free on integer rows (each row is
/// kept primitive), pivoting on the first nonzero entry scanning columns
/// left to right and rows top to bottom. The result is then normalized to
/// the unique reduced row echelon form over Q.
EchelonForm row_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Canonical (reduced echelon) basis of {x : m x = 0}.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Solutions of m x = rhs as particular + span(nullspace(m)); the
/// particular solution has every free variable set to zero. Empty when the
/// system is inconsistent.
struct AffineSolution {
  RationalVector particular;
  std::vector<RationalVector> directions;
};
std::optional<AffineSolution> solve_affine(const RationalMatrix& m,
                                           const RationalVector& rhs);

std::optional<RationalMatrix> inverse(const RationalMatrix& m);

/// Linear subspace of Q^n stored by its reduced row echelon basis, which is
/// the canonical representative: equal subspaces compare equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<RationalVector>& vectors);
  static Subspace span(std::size_t ambient_dim,
                       const std::vector<Tensor>& vectors);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  const std::vector<RationalVector>& basis() const noexcept { return basis_; }
  /// Basis as valence-(up) tensors.
  std::vector<Tensor> basis_tensors() const;

  bool contains(const RationalVector& v) const;
  bool contains(const Tensor& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace operator+(const Subspace& a, const Subspace& b);
  friend Subspace intersection(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  std::vector<RationalVector> basis_;
};

Subspace intersection(const Subspace& a, const Subspace& b);

/// Rational components of a tensor, flat order; throws ParameterError when
/// any component depends on the parameter.
RationalVector rational_components(const Tensor& t);
Tensor tensor_from_rational(std::size_t dim, Valence valence,
                            const RationalVector& values);

}  // namespace symconn

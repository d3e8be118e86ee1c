#include "symconn/linear_algebra.hpp"

#include <string>

#include "symconn/error.hpp"

namespace symconn {

RationalVector RationalMatrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void RationalMatrix::append_row(const RationalVector& values) {
  if (rows_ == 0 && cols_ == 0) {
    cols_ = values.size();
  }
  if (values.size() != cols_) {
    throw ShapeError("row length " + std::to_string(values.size()) +
                     " differs from column count " + std::to_string(cols_));
  }
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RationalMatrix RationalMatrix::from_rows(const std::vector<RationalVector>& rows,
                                         std::size_t cols) {
  RationalMatrix m(0, cols);
  for (const auto& r : rows) {
    m.append_row(r);
  }
  return m;
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) {
    throw ShapeError("matrix product shape mismatch");
  }
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t p = 0; p < a.cols_; ++p) {
      const Rational& x = a(i, p);
      if (x == 0) {
        continue;
      }
      for (std::size_t j = 0; j < b.cols_; ++j) {
        out(i, j) += x * b(p, j);
      }
    }
  }
  return out;
}

namespace {

using IntegerRow = std::vector<mpz_class>;

IntegerRow to_primitive_integers(const RationalMatrix& m, std::size_t r) {
  mpz_class lcm(1);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& v = m(r, c);
    if (v != 0) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
    }
  }
  IntegerRow row(m.cols());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Rational& v = m(r, c);
    if (v != 0) {
      row[c] = v.get_num() * (lcm / v.get_den());
    }
  }
  return row;
}

void make_primitive(IntegerRow& row) {
  mpz_class g(0);
  for (const auto& v : row) {
    if (v != 0) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
      if (g == 1) {
        return;
      }
    }
  }
  if (g > 1) {
    for (auto& v : row) {
      if (v != 0) {
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
      }
    }
  }
}

}  // namespace

EchelonForm row_echelon(const RationalMatrix& m) {
  const std::size_t cols = m.cols();
  std::vector<IntegerRow> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    IntegerRow row = to_primitive_integers(m, r);
    make_primitive(row);
    rows.push_back(std::move(row));
  }

  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < cols && lead < rows.size(); ++c) {
    std::size_t pivot = lead;
    while (pivot < rows.size() && rows[pivot][c] == 0) {
      ++pivot;
    }
    if (pivot == rows.size()) {
      continue;
    }
    std::swap(rows[lead], rows[pivot]);
    const IntegerRow& prow = rows[lead];
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][c] == 0) {
        continue;
      }
      // row_r <- p * row_r - e * row_lead, scaled down by gcd(p, e) first.
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), prow[c].get_mpz_t(), rows[r][c].get_mpz_t());
      mpz_class p = prow[c] / g;
      mpz_class e = rows[r][c] / g;
      IntegerRow& target = rows[r];
      for (std::size_t k = 0; k < cols; ++k) {
        if (target[k] != 0) {
          target[k] *= p;
        }
        if (prow[k] != 0) {
          target[k] -= e * prow[k];
        }
      }
      make_primitive(target);
    }
    pivots.push_back(c);
    ++lead;
  }

  EchelonForm out;
  out.reduced = RationalMatrix(pivots.size(), cols);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    const mpz_class& p = rows[r][pivots[r]];
    for (std::size_t k = 0; k < cols; ++k) {
      if (rows[r][k] != 0) {
        Rational v(rows[r][k], p);
        v.canonicalize();
        out.reduced(r, k) = v;
      }
    }
  }
  out.pivot_columns = std::move(pivots);
  return out;
}

std::size_t rank(const RationalMatrix& m) { return row_echelon(m).rank(); }

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  EchelonForm ef = row_echelon(m);
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ef.pivot_columns) {
    is_pivot[c] = true;
  }
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) {
      continue;
    }
    RationalVector v(cols);
    v[free] = 1;
    for (std::size_t r = 0; r < ef.rank(); ++r) {
      v[ef.pivot_columns[r]] = -ef.reduced(r, free);
    }
    basis.push_back(std::move(v));
  }
  // The free-variable basis is already echelon-like; normalize anyway so
  // the stored representative is the reduced row echelon form.
  if (basis.empty()) {
    return basis;
  }
  EchelonForm canon = row_echelon(RationalMatrix::from_rows(basis, cols));
  std::vector<RationalVector> out;
  for (std::size_t r = 0; r < canon.rank(); ++r) {
    out.push_back(canon.reduced.row(r));
  }
  return out;
}

std::optional<AffineSolution> solve_affine(const RationalMatrix& m,
                                           const RationalVector& rhs) {
  if (rhs.size() != m.rows()) {
    throw ShapeError("right-hand side length differs from row count");
  }
  const std::size_t cols = m.cols();
  RationalMatrix augmented(m.rows(), cols + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      augmented(r, c) = m(r, c);
    }
    augmented(r, cols) = rhs[r];
  }
  EchelonForm ef = row_echelon(augmented);
  if (!ef.pivot_columns.empty() && ef.pivot_columns.back() == cols) {
    return std::nullopt;
  }
  AffineSolution out;
  out.particular.assign(cols, Rational(0));
  for (std::size_t r = 0; r < ef.rank(); ++r) {
    out.particular[ef.pivot_columns[r]] = ef.reduced(r, cols);
  }
  out.directions = nullspace(m);
  return out;
}

std::optional<RationalMatrix> inverse(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("inverse of a non-square matrix");
  }
  const std::size_t n = m.rows();
  RationalMatrix augmented(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      augmented(r, c) = m(r, c);
    }
    augmented(r, n + r) = 1;
  }
  EchelonForm ef = row_echelon(augmented);
  if (ef.rank() < n || ef.pivot_columns[n - 1] != n - 1) {
    return std::nullopt;
  }
  RationalMatrix out(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      out(r, c) = ef.reduced(r, n + c);
    }
  }
  return out;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<RationalVector>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) {
    return s;
  }
  EchelonForm ef = row_echelon(RationalMatrix::from_rows(vectors, ambient_dim));
  for (std::size_t r = 0; r < ef.rank(); ++r) {
    s.basis_.push_back(ef.reduced.row(r));
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim,
                        const std::vector<Tensor>& vectors) {
  std::vector<RationalVector> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    if (v.size() != ambient_dim) {
      throw ShapeError("vector size differs from ambient dimension");
    }
    rows.push_back(rational_components(v));
  }
  return span(ambient_dim, rows);
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    RationalVector v(ambient_dim);
    v[i] = 1;
    s.basis_.push_back(std::move(v));
  }
  return s;
}

std::vector<Tensor> Subspace::basis_tensors() const {
  std::vector<Tensor> out;
  for (const auto& v : basis_) {
    out.push_back(tensor_from_rational(ambient_, {Variance::up}, v));
  }
  return out;
}

bool Subspace::contains(const RationalVector& v) const {
  if (v.size() != ambient_) {
    throw ShapeError("vector size differs from ambient dimension");
  }
  // Reduce v against the echelon basis; membership iff it reduces to zero.
  RationalVector rest = v;
  for (const auto& b : basis_) {
    std::size_t pivot = 0;
    while (b[pivot] == 0) {
      ++pivot;
    }
    if (rest[pivot] != 0) {
      Rational f = rest[pivot];
      for (std::size_t k = 0; k < ambient_; ++k) {
        if (b[k] != 0) {
          rest[k] -= f * b[k];
        }
      }
    }
  }
  for (const auto& x : rest) {
    if (x != 0) {
      return false;
    }
  }
  return true;
}

bool Subspace::contains(const Tensor& v) const {
  return contains(rational_components(v));
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& v : other.basis_) {
    if (!contains(v)) {
      return false;
    }
  }
  return true;
}

Subspace operator+(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) {
    throw ShapeError("subspaces of different ambient spaces");
  }
  std::vector<RationalVector> all = a.basis_;
  all.insert(all.end(), b.basis_.begin(), b.basis_.end());
  return Subspace::span(a.ambient_, all);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) {
    throw ShapeError("subspaces of different ambient spaces");
  }
  const std::size_t n = a.ambient_;
  if (a.is_zero() || b.is_zero()) {
    return Subspace(n);
  }
  // Columns are the basis vectors of a then b; a kernel vector (x, y) gives
  // the common element sum x_i a_i.
  const std::size_t k = a.dim() + b.dim();
  RationalMatrix m(n, k);
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      m(r, i) = a.basis_[i][r];
    }
  }
  for (std::size_t i = 0; i < b.dim(); ++i) {
    for (std::size_t r = 0; r < n; ++r) {
      m(r, a.dim() + i) = -b.basis_[i][r];
    }
  }
  std::vector<RationalVector> common;
  for (const auto& coeffs : nullspace(m)) {
    RationalVector v(n);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (coeffs[i] == 0) {
        continue;
      }
      for (std::size_t r = 0; r < n; ++r) {
        v[r] += coeffs[i] * a.basis_[i][r];
      }
    }
    common.push_back(std::move(v));
  }
  return Subspace::span(n, common);
}

RationalVector rational_components(const Tensor& t) {
  RationalVector out;
  out.reserve(t.size());
  for (const auto& s : t.components()) {
    out.push_back(s.rational());
  }
  return out;
}

Tensor tensor_from_rational(std::size_t dim, Valence valence,
                            const RationalVector& values) {
  std::vector<Scalar> comps;
  comps.reserve(values.size());
  for (const auto& v : values) {
    comps.emplace_back(v);
  }
  return Tensor::from_components(dim, std::move(valence), std::move(comps));
}

}  // namespace symconn

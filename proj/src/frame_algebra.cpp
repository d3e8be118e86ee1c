#include "symconn/frame_algebra.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symconn/error.hpp"

namespace symconn {

namespace {

std::string violation_summary(const std::vector<AlgebraViolation>& v) {
  std::ostringstream os;
  os << "structure constants invalid (" << v.size() << " violation"
     << (v.size() == 1 ? "" : "s") << ")";
  for (std::size_t n = 0; n < v.size() && n < 8; ++n) {
    os << "; " << v[n].describe();
  }
  if (v.size() > 8) {
    os << "; ...";
  }
  return os.str();
}

void require_constants_shape(const Tensor& c) {
  if (!c.has_valence({Variance::down, Variance::down, Variance::up})) {
    throw ShapeError("structure constants need valence (down, down, up)");
  }
}

void require_vector(const Tensor& t, std::size_t dim, const char* what) {
  if (!t.has_valence({Variance::up}) || t.dim() != dim) {
    throw ShapeError(std::string(what) + " must be a vector of dimension " +
                     std::to_string(dim));
  }
}

// Sign of a permutation given as an index array.
int permutation_sign(std::vector<std::size_t> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != i) {
      std::swap(p[i], p[p[i]]);
      sign = -sign;
    }
  }
  return sign;
}

// Sorts a multi-index, returning the permutation sign and whether an index
// repeats (in which case a form component must vanish).
std::pair<int, bool> sort_with_sign(std::span<const std::size_t> index,
                                    std::vector<std::size_t>& sorted) {
  sorted.assign(index.begin(), index.end());
  int sign = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    for (std::size_t j = i; j > 0 && sorted[j - 1] >= sorted[j]; --j) {
      if (sorted[j - 1] == sorted[j]) {
        return {0, true};
      }
      std::swap(sorted[j - 1], sorted[j]);
      sign = -sign;
    }
  }
  return {sign, false};
}

Rational factorial(std::size_t n) {
  Rational f(1);
  for (std::size_t i = 2; i <= n; ++i) {
    f *= static_cast<long>(i);
  }
  return f;
}

}  // namespace

std::string AlgebraViolation::describe() const {
  std::ostringstream os;
  if (kind == Kind::antisymmetry) {
    os << "antisymmetry fails at (" << i << "," << j << "," << k
       << "): c_ij^k + c_ji^k = " << residual;
  } else {
    os << "Jacobi fails at (" << i << "," << j << "," << k << "," << l
       << "): cyclic sum = " << residual;
  }
  return os.str();
}

AlgebraValidationError::AlgebraValidationError(
    std::vector<AlgebraViolation> violations)
    : std::domain_error(violation_summary(violations)),
      violations_(std::move(violations)) {}

std::vector<AlgebraViolation> check_algebra(const Tensor& c) {
  require_constants_shape(c);
  const std::size_t n = c.dim();
  std::vector<AlgebraViolation> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar r = c.at({i, j, k}) + c.at({j, i, k});
        if (!r.is_zero()) {
          out.push_back({AlgebraViolation::Kind::antisymmetry, i + 1, j + 1,
                         k + 1, 0, r});
        }
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Scalar sum;
          for (std::size_t p = 0; p < n; ++p) {
            sum += c.at({i, j, p}) * c.at({p, k, l});
            sum += c.at({j, k, p}) * c.at({p, i, l});
            sum += c.at({k, i, p}) * c.at({p, j, l});
          }
          if (!sum.is_zero()) {
            out.push_back({AlgebraViolation::Kind::jacobi, i + 1, j + 1,
                           k + 1, l + 1, sum});
          }
        }
      }
    }
  }
  return out;
}

FrameAlgebra FrameAlgebra::validate(Tensor structure_constants) {
  auto violations = check_algebra(structure_constants);
  if (!violations.empty()) {
    throw AlgebraValidationError(std::move(violations));
  }
  return FrameAlgebra(std::move(structure_constants));
}

FrameAlgebra FrameAlgebra::unchecked(Tensor structure_constants) {
  require_constants_shape(structure_constants);
  return FrameAlgebra(std::move(structure_constants));
}

FrameAlgebra FrameAlgebra::abelian(std::size_t dim) {
  return FrameAlgebra(
      Tensor(dim, {Variance::down, Variance::down, Variance::up}));
}

Tensor bracket(const FrameAlgebra& alg, const Tensor& x, const Tensor& y) {
  const std::size_t n = alg.dim();
  require_vector(x, n, "bracket argument");
  require_vector(y, n, "bracket argument");
  Tensor out(n, {Variance::up});
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (y[j].is_zero()) {
        continue;
      }
      Scalar xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& c = alg.c(i, j, k);
        if (!c.is_zero()) {
          out[k] += xy * c;
        }
      }
    }
  }
  return out;
}

bool is_form(const Tensor& t) {
  if (!std::all_of(t.valence().begin(), t.valence().end(),
                   [](Variance v) { return v == Variance::down; })) {
    return false;
  }
  std::vector<std::size_t> sorted;
  for (IndexCounter it(t.dim(), t.rank()); !it.done(); it.next()) {
    const Scalar& value = t.at(it.index());
    auto [sign, repeated] = sort_with_sign(it.index(), sorted);
    if (repeated) {
      if (!value.is_zero()) {
        return false;
      }
      continue;
    }
    const Scalar& base = t.at(std::span<const std::size_t>(sorted));
    if (sign > 0 ? !(value == base) : !(value == -base)) {
      return false;
    }
  }
  return true;
}

Tensor antisymmetrize(const Tensor& t) {
  const std::size_t p = t.rank();
  if (p <= 1) {
    return t;
  }
  for (std::size_t s = 1; s < p; ++s) {
    if (t.variance(s) != t.variance(0)) {
      throw ShapeError("antisymmetrization needs slots of equal variance");
    }
  }
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  Tensor out(t.dim(), t.valence());
  do {
    Tensor term = permute(t, perm);
    if (permutation_sign(perm) > 0) {
      out += term;
    } else {
      out -= term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  out *= Scalar(Rational(1) / factorial(p));
  return out;
}

namespace {

void require_form(const Tensor& t, const char* what) {
  if (!is_form(t)) {
    throw ShapeError(std::string(what) +
                     " must be a fully antisymmetric all-down tensor");
  }
}

}  // namespace

Tensor wedge(const Tensor& alpha, const Tensor& beta) {
  require_form(alpha, "wedge operand");
  require_form(beta, "wedge operand");
  if (alpha.dim() != beta.dim()) {
    throw ShapeError("wedge of forms of different dimensions");
  }
  const std::size_t p = alpha.rank();
  const std::size_t q = beta.rank();
  const std::size_t n = alpha.dim();
  if (p + q > n) {
    throw ShapeError("wedge degree " + std::to_string(p + q) +
                     " exceeds dimension " + std::to_string(n));
  }
  // Increasing multi-indices get the shuffle sum; the remaining components
  // follow by antisymmetry.
  Tensor out(n, Valence(p + q, Variance::down));
  std::vector<std::size_t> sorted;
  std::vector<std::size_t> left(p);
  std::vector<std::size_t> right(q);
  std::vector<std::size_t> mask(p + q);
  for (IndexCounter it(n, p + q); !it.done(); it.next()) {
    auto [sign, repeated] = sort_with_sign(it.index(), sorted);
    if (repeated) {
      continue;
    }
    if (sign < 0) {
      out.at(it.index()) = -out.at(std::span<const std::size_t>(sorted));
      continue;
    }
    // it.index() is increasing here; it is always visited before any of
    // its permutations because the odometer is lexicographic.
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(p), 1);
    std::fill(mask.begin() + static_cast<std::ptrdiff_t>(p), mask.end(), 0);
    Scalar sum;
    do {
      std::size_t a = 0;
      std::size_t b = 0;
      std::size_t inversions = 0;
      for (std::size_t s = 0; s < p + q; ++s) {
        if (mask[s]) {
          left[a++] = it[s];
          inversions += b;
        } else {
          right[b++] = it[s];
        }
      }
      const Scalar& x = alpha.at(std::span<const std::size_t>(left));
      const Scalar& y = beta.at(std::span<const std::size_t>(right));
      if (x.is_zero() || y.is_zero()) {
        continue;
      }
      if (inversions % 2 == 0) {
        sum += x * y;
      } else {
        sum -= x * y;
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    out.at(it.index()) = std::move(sum);
  }
  return out;
}

Tensor interior_product(const Tensor& x, const Tensor& alpha) {
  require_vector(x, alpha.dim(), "interior product vector");
  require_form(alpha, "interior product form");
  if (alpha.rank() == 0) {
    throw ShapeError("interior product of a 0-form");
  }
  return contract(tensor_product(x, alpha), 0, 1);
}

Tensor ce_differential(const FrameAlgebra& alg, const Tensor& alpha) {
  require_form(alpha, "differential argument");
  const std::size_t n = alg.dim();
  if (alpha.dim() != n) {
    throw ShapeError("form dimension differs from algebra dimension");
  }
  const std::size_t p = alpha.rank();
  Valence valence(p + 1, Variance::down);
  Tensor out(n, valence);
  if (p + 1 > n) {
    return out;
  }
  std::vector<std::size_t> rest(p);
  for (IndexCounter it(n, p + 1); !it.done(); it.next()) {
    Scalar sum;
    for (std::size_t a = 0; a < p + 1; ++a) {
      for (std::size_t b = a + 1; b < p + 1; ++b) {
        std::size_t r = 1;
        for (std::size_t s = 0; s < p + 1; ++s) {
          if (s != a && s != b) {
            rest[r++] = it[s];
          }
        }
        Scalar inner;
        for (std::size_t q = 0; q < n; ++q) {
          const Scalar& c = alg.c(it[a], it[b], q);
          if (c.is_zero()) {
            continue;
          }
          if (p > 0) {
            rest[0] = q;
          }
          const Scalar& value =
              alpha.at(std::span<const std::size_t>(rest.data(), p));
          if (!value.is_zero()) {
            inner += c * value;
          }
        }
        if ((a + b) % 2 == 0) {
          sum += inner;
        } else {
          sum -= inner;
        }
      }
    }
    out.at(it.index()) = std::move(sum);
  }
  return out;
}

Tensor lie_derivative_form(const FrameAlgebra& alg, const Tensor& x,
                           const Tensor& alpha) {
  require_vector(x, alg.dim(), "Lie derivative direction");
  require_form(alpha, "Lie derivative argument");
  // Invariant functions are constant, so L_X of a 0-form vanishes.
  if (alpha.rank() == 0) {
    return Tensor(alpha.dim(), {});
  }
  Tensor result = ce_differential(alg, interior_product(x, alpha));
  if (alpha.rank() < alg.dim()) {
    result += interior_product(x, ce_differential(alg, alpha));
  }
  return result;
}

}  // namespace symconn

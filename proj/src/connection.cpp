#include "symconn/connection.hpp"

#include <sstream>
#include <string>
#include <vector>

#include "symconn/error.hpp"

namespace symconn {

namespace {

void require_vector(const Tensor& t, std::size_t dim, const char* what) {
  if (!t.has_valence({Variance::up}) || t.dim() != dim) {
    throw ShapeError(std::string(what) + " must be a vector of dimension " +
                     std::to_string(dim));
  }
}

void require_dims(const FrameAlgebra& alg, const Connection& conn) {
  if (alg.dim() != conn.dim()) {
    throw ShapeError("connection and algebra dimensions differ");
  }
}

}  // namespace

Connection::Connection(Tensor gamma) : gamma_(std::move(gamma)) {
  if (!gamma_.has_valence({Variance::down, Variance::down, Variance::up})) {
    throw ShapeError("Christoffel array needs valence (down, down, up)");
  }
}

Connection Connection::zero(std::size_t dim) {
  return Connection(Tensor(dim, {Variance::down, Variance::down, Variance::up}));
}

Tensor covariant_derivative_vector(const Connection& conn, const Tensor& x,
                                   const Tensor& y) {
  const std::size_t n = conn.dim();
  require_vector(x, n, "direction");
  require_vector(y, n, "vector field");
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
        const Scalar& g = conn.gamma(i, j, k);
        if (!g.is_zero()) {
          out[k] += xy * g;
        }
      }
    }
  }
  return out;
}

Tensor torsion(const FrameAlgebra& alg, const Connection& conn) {
  require_dims(alg, conn);
  const std::size_t n = conn.dim();
  Tensor out(n, {Variance::down, Variance::down, Variance::up});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        out.at({i, j, k}) =
            conn.gamma(i, j, k) - conn.gamma(j, i, k) - alg.c(i, j, k);
      }
    }
  }
  return out;
}

Tensor covariant_derivative(const Connection& conn, const Tensor& t) {
  const std::size_t n = conn.dim();
  if (t.dim() != n) {
    throw ShapeError("tensor and connection dimensions differ");
  }
  const std::size_t r = t.rank();
  Valence valence;
  valence.reserve(r + 1);
  valence.push_back(Variance::down);
  valence.insert(valence.end(), t.valence().begin(), t.valence().end());
  Tensor out(n, std::move(valence));

  std::vector<std::size_t> src(r);
  for (IndexCounter it(n, r + 1); !it.done(); it.next()) {
    const std::size_t i = it[0];
    Scalar sum;
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t q = 0; q < r; ++q) {
        src[q] = it[q + 1];
      }
      const std::size_t own = it[s + 1];
      for (std::size_t p = 0; p < n; ++p) {
        const Scalar& g = t.variance(s) == Variance::down ? conn.gamma(i, own, p)
                                                          : conn.gamma(i, p, own);
        if (g.is_zero()) {
          continue;
        }
        src[s] = p;
        const Scalar& v = t.at(std::span<const std::size_t>(src));
        if (v.is_zero()) {
          continue;
        }
        if (t.variance(s) == Variance::down) {
          sum -= g * v;
        } else {
          sum += g * v;
        }
      }
    }
    out.at(it.index()) = std::move(sum);
  }
  return out;
}

Tensor curvature(const FrameAlgebra& alg, const Connection& conn) {
  require_dims(alg, conn);
  const std::size_t n = conn.dim();
  Tensor out(n, {Variance::down, Variance::down, Variance::down, Variance::up});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) {
        continue;
      }
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t k = 0; k < n; ++k) {
          Scalar sum;
          for (std::size_t p = 0; p < n; ++p) {
            const Scalar& a = conn.gamma(i, p, k);
            const Scalar& b = conn.gamma(j, q, p);
            if (!a.is_zero() && !b.is_zero()) {
              sum += a * b;
            }
            const Scalar& c = conn.gamma(j, p, k);
            const Scalar& d = conn.gamma(i, q, p);
            if (!c.is_zero() && !d.is_zero()) {
              sum -= c * d;
            }
            const Scalar& s = alg.c(i, j, p);
            const Scalar& g = conn.gamma(p, q, k);
            if (!s.is_zero() && !g.is_zero()) {
              sum -= s * g;
            }
          }
          out.at({i, j, q, k}) = std::move(sum);
        }
      }
    }
  }
  return out;
}

Tensor lie_derivative_connection(const FrameAlgebra& alg,
                                 const Connection& conn, const Tensor& x) {
  require_dims(alg, conn);
  const std::size_t n = conn.dim();
  require_vector(x, n, "Lie derivative direction");
  if (std::string why = describe_torsion(alg, conn); !why.empty()) {
    throw PreconditionError("Lie derivative of a connection requires zero "
                            "torsion: " + why);
  }

  // Index form: ∇_i ∇_j X^k + X^p R_pij^k.
  Tensor index_form = covariant_derivative(conn, covariant_derivative(conn, x));
  const Tensor r = curvature(alg, conn);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        Scalar sum;
        for (std::size_t p = 0; p < n; ++p) {
          const Scalar& rv = r.at({p, i, j, k});
          if (!x[p].is_zero() && !rv.is_zero()) {
            sum += x[p] * rv;
          }
        }
        index_form.at({i, j, k}) += sum;
      }
    }
  }

  // Frame-pair form, using only vector-field operations:
  // ∇_{E_i}∇_{E_j}X − ∇_{∇_{E_i}E_j}X + R(X, E_i)E_j with
  // R(X, Y)Z = ∇_X∇_Y Z − ∇_Y∇_X Z − ∇_{[X,Y]} Z.
  for (std::size_t i = 0; i < n; ++i) {
    const Tensor ei = Tensor::frame_vector(n, i + 1);
    const Tensor x_ei = bracket(alg, x, ei);
    for (std::size_t j = 0; j < n; ++j) {
      const Tensor ej = Tensor::frame_vector(n, j + 1);
      const Tensor nabla_ei_ej = covariant_derivative_vector(conn, ei, ej);
      Tensor value = covariant_derivative_vector(
          conn, ei, covariant_derivative_vector(conn, ej, x));
      value -= covariant_derivative_vector(conn, nabla_ei_ej, x);
      value += covariant_derivative_vector(conn, x, nabla_ei_ej);
      value -= covariant_derivative_vector(
          conn, ei, covariant_derivative_vector(conn, x, ej));
      value -= covariant_derivative_vector(conn, x_ei, ej);
      for (std::size_t k = 0; k < n; ++k) {
        if (!(value[k] == index_form.at({i, j, k}))) {
          std::ostringstream os;
          os << "L_X∇ disagreement at (" << i + 1 << "," << j + 1 << ","
             << k + 1 << "): index form " << index_form.at({i, j, k})
             << ", frame form " << value[k];
          throw ConventionFault(os.str());
        }
      }
    }
  }
  return index_form;
}

Tensor lower_lie_derivative(const Tensor& lie_derivative,
                            const SymplecticForm& omega) {
  if (!lie_derivative.has_valence(
          {Variance::down, Variance::down, Variance::up})) {
    throw ShapeError("L_X∇ needs valence (down, down, up)");
  }
  return lower_index(lie_derivative, 2, omega);
}

Scalar divergence(const Connection& conn, const Tensor& x) {
  const std::size_t n = conn.dim();
  require_vector(x, n, "divergence argument");
  Scalar sum;
  for (std::size_t q = 0; q < n; ++q) {
    if (x[q].is_zero()) {
      continue;
    }
    for (std::size_t p = 0; p < n; ++p) {
      const Scalar& g = conn.gamma(p, q, p);
      if (!g.is_zero()) {
        sum += g * x[q];
      }
    }
  }
  return sum;
}

std::string describe_torsion(const FrameAlgebra& alg, const Connection& conn) {
  const Tensor t = torsion(alg, conn);
  const std::size_t n = conn.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& v = t.at({i, j, k});
        if (!v.is_zero()) {
          std::ostringstream os;
          os << "torsion nonzero at (" << i + 1 << "," << j + 1 << "): T_"
             << i + 1 << j + 1 << "^" << k + 1 << " = " << v;
          return os.str();
        }
      }
    }
  }
  return {};
}

std::string describe_nonparallel_omega(const Connection& conn,
                                       const SymplecticForm& omega) {
  if (conn.dim() != omega.dim()) {
    throw ShapeError("connection and symplectic form dimensions differ");
  }
  const Tensor d = covariant_derivative(conn, omega.lower());
  for (IndexCounter it(d.dim(), 3); !it.done(); it.next()) {
    const Scalar& v = d.at(it.index());
    if (!v.is_zero()) {
      std::ostringstream os;
      os << "∇Ω nonzero at (" << it[0] + 1 << "," << it[1] + 1 << ","
         << it[2] + 1 << "): " << v;
      return os.str();
    }
  }
  return {};
}

void require_symplectic_connection(const FrameAlgebra& alg,
                                   const SymplecticForm& omega,
                                   const Connection& conn) {
  if (std::string why = describe_torsion(alg, conn); !why.empty()) {
    throw PreconditionError(why);
  }
  if (std::string why = describe_nonparallel_omega(conn, omega); !why.empty()) {
    throw PreconditionError(why);
  }
}

}  // namespace symconn

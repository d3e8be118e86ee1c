#include "symconn/moduli.hpp"

#include <string>

#include "symconn/error.hpp"

namespace symconn {

namespace {

Valence gamma_valence() {
  return {Variance::down, Variance::down, Variance::up};
}

std::size_t unknown(std::size_t n, std::size_t i, std::size_t j, std::size_t k) {
  return (i * n + j) * n + k;
}

}  // namespace

Connection AffineSolutionSpace::point(std::span<const Rational> coordinates) const {
  if (coordinates.size() != homogeneous_basis.size()) {
    throw ShapeError("expected " + std::to_string(homogeneous_basis.size()) +
                     " coordinates, got " + std::to_string(coordinates.size()));
  }
  Tensor gamma = particular.christoffel();
  for (std::size_t a = 0; a < coordinates.size(); ++a) {
    if (coordinates[a] != 0) {
      gamma += homogeneous_basis[a] * Scalar(coordinates[a]);
    }
  }
  return Connection(std::move(gamma));
}

bool AffineSolutionSpace::contains_direction(const Tensor& direction) const {
  const std::size_t size = particular.christoffel().size();
  return Subspace::span(size, homogeneous_basis).contains(
      rational_components(direction));
}

bool AffineSolutionSpace::contains(const Connection& conn) const {
  return contains_direction(conn.christoffel() - particular.christoffel());
}

ConnectionSystem symplectic_connection_system(const FrameAlgebra& alg,
                                              const SymplecticForm& omega) {
  const std::size_t n = alg.dim();
  if (omega.dim() != n) {
    throw ShapeError("algebra and symplectic form dimensions differ");
  }
  const std::size_t unknowns = n * n * n;
  ConnectionSystem sys;
  sys.matrix = RationalMatrix(0, unknowns);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        RationalVector row(unknowns);
        row[unknown(n, i, j, k)] += 1;
        row[unknown(n, j, i, k)] -= 1;
        sys.matrix.append_row(row);
        sys.rhs.push_back(alg.c(i, j, k).rational());
      }
    }
  }
  // (∇_i Ω)_jk = −Γ_ij^p Ω_pk − Γ_ik^p Ω_jp.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        RationalVector row(unknowns);
        for (std::size_t p = 0; p < n; ++p) {
          row[unknown(n, i, j, p)] -= omega(p, k).rational();
          row[unknown(n, i, k, p)] -= omega(j, p).rational();
        }
        sys.matrix.append_row(row);
        sys.rhs.emplace_back(0);
      }
    }
  }
  return sys;
}

AffineSolutionSpace symplectic_connection_space(const FrameAlgebra& alg,
                                                const SymplecticForm& omega) {
  const std::size_t n = alg.dim();
  const ConnectionSystem sys = symplectic_connection_system(alg, omega);
  auto solution = solve_affine(sys.matrix, sys.rhs);
  if (!solution) {
    throw PreconditionError(
        "no torsion-free connection preserves Ω (is Ω closed?)");
  }
  AffineSolutionSpace space{
      Connection(tensor_from_rational(n, gamma_valence(), solution->particular)),
      {}};
  for (const auto& d : solution->directions) {
    space.homogeneous_basis.push_back(tensor_from_rational(n, gamma_valence(), d));
  }
  return space;
}

bool is_flat_family(const FrameAlgebra& alg, const Connection& family) {
  return curvature(alg, family).is_zero();
}

Subspace automorphism_space(const FrameAlgebra& alg, const Connection& conn) {
  const std::size_t n = alg.dim();
  if (!conn.is_rational()) {
    throw ParameterError(
        "automorphism space of a parameter-dependent connection; substitute "
        "a parameter value first");
  }
  // L_X∇ is linear in X: column a is L_{E_a}∇.
  RationalMatrix m(n * n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Tensor l =
        lie_derivative_connection(alg, conn, Tensor::frame_vector(n, a + 1));
    for (std::size_t row = 0; row < l.size(); ++row) {
      m(row, a) = l[row].rational();
    }
  }
  return Subspace::span(n, nullspace(m));
}

Subspace symplectic_field_space(const FrameAlgebra& alg,
                                const SymplecticForm& omega) {
  const std::size_t n = alg.dim();
  RationalMatrix m(n * n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const Tensor d =
        ce_differential(alg, flat(Tensor::frame_vector(n, a + 1), omega));
    for (std::size_t row = 0; row < d.size(); ++row) {
      m(row, a) = d[row].rational();
    }
  }
  return Subspace::span(n, nullspace(m));
}

NonSymplecticReport find_non_symplectic_automorphisms(
    const FrameAlgebra& alg, const SymplecticForm& omega, const Connection& conn) {
  const Subspace aut = automorphism_space(alg, conn);
  const Subspace symp = symplectic_field_space(alg, omega);
  NonSymplecticReport report;
  report.automorphism_dim = aut.dim();
  report.symplectic_automorphism_dim = intersection(aut, symp).dim();
  if (report.automorphism_dim != report.symplectic_automorphism_dim) {
    for (const auto& v : aut.basis_tensors()) {
      if (!symp.contains(v)) {
        report.witness = v;
        break;
      }
    }
  }
  return report;
}

}  // namespace symconn

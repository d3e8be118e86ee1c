#include "symconn/automorphism.hpp"

#include <string>

#include "symconn/error.hpp"

namespace symconn {

namespace {

void require_endomorphism(const Tensor& a) {
  if (!a.has_valence({Variance::down, Variance::up})) {
    throw ShapeError("endomorphism needs valence (down, up)");
  }
}

RationalMatrix rows_of(const Tensor& a) {
  const std::size_t n = a.dim();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = a.at({i, j}).rational();
    }
  }
  return m;
}

Tensor frame_endomorphism(std::size_t n, std::size_t i, std::size_t j) {
  Tensor e(n, {Variance::down, Variance::up});
  e.at({i, j}) = Scalar(1);
  return e;
}

Tensor christoffel_endomorphism(const Connection& conn, std::size_t l) {
  // (G_l)_q^p = Γ_lq^p, i.e. the endomorphism Y ↦ ∇_{E_l} Y.
  const std::size_t n = conn.dim();
  Tensor g(n, {Variance::down, Variance::up});
  for (std::size_t q = 0; q < n; ++q) {
    for (std::size_t p = 0; p < n; ++p) {
      g.at({q, p}) = conn.gamma(l, q, p);
    }
  }
  return g;
}

}  // namespace

Tensor compose(const Tensor& a, const Tensor& b) {
  require_endomorphism(a);
  require_endomorphism(b);
  if (a.dim() != b.dim()) {
    throw ShapeError("composition of endomorphisms of different dimensions");
  }
  const std::size_t n = a.dim();
  Tensor out(n, {Variance::down, Variance::up});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 0; p < n; ++p) {
      const Scalar& x = a.at({i, p});
      if (x.is_zero()) {
        continue;
      }
      for (std::size_t j = 0; j < n; ++j) {
        const Scalar& y = b.at({p, j});
        if (!y.is_zero()) {
          out.at({i, j}) += x * y;
        }
      }
    }
  }
  return out;
}

Tensor endomorphism_power(const Tensor& a, std::size_t k) {
  require_endomorphism(a);
  Tensor out = Tensor::identity(a.dim());
  for (std::size_t i = 0; i < k; ++i) {
    out = compose(out, a);
  }
  return out;
}

Tensor apply(const Tensor& a, const Tensor& v) {
  require_endomorphism(a);
  if (!v.has_valence({Variance::up}) || v.dim() != a.dim()) {
    throw ShapeError("endomorphism applied to a non-vector");
  }
  return contract(tensor_product(v, a), 0, 1);
}

Tensor commutator(const Tensor& a, const Tensor& b) {
  return compose(a, b) - compose(b, a);
}

Tensor musical_endomorphism(const FrameAlgebra& alg, const SymplecticForm& omega,
                            const Connection& conn, const Tensor& x) {
  require_symplectic_connection(alg, omega, conn);
  const Tensor x_flat = flat(x, omega);
  const Tensor d_flat = ce_differential(alg, x_flat);

  const Tensor nabla_x_flat = covariant_derivative(conn, x_flat);
  const std::size_t swap[] = {1, 0};
  if (!(nabla_x_flat - permute(nabla_x_flat, swap) == d_flat)) {
    throw ConventionFault("dX♭ differs from 2∇_[i X♭_j]");
  }

  Tensor raised = raise_index(d_flat, 1, omega);
  // ∇_i X^j − ∇^j X_i, where ∇^j X_i = Ω^{jk} ∇_k X_i.
  Tensor direct = covariant_derivative(conn, x) -
                  permute(raise_index(nabla_x_flat, 0, omega), swap);
  if (!(raised == direct)) {
    throw ConventionFault("raised dX♭ differs from ∇_i X^j − ∇^j X_i");
  }
  return raised;
}

Scalar trace_power(const Tensor& a, std::size_t k) {
  require_endomorphism(a);
  if (k == 0) {
    throw ShapeError("trace_power needs k >= 1");
  }
  const Tensor p = endomorphism_power(a, k);
  Scalar sum;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    sum += p.at({i, i});
  }
  return sum;
}

std::optional<std::size_t> nilpotency_index(const Tensor& a) {
  require_endomorphism(a);
  Tensor p = Tensor::identity(a.dim());
  for (std::size_t k = 1; k <= a.dim(); ++k) {
    p = compose(p, a);
    if (p.is_zero()) {
      return k;
    }
  }
  return std::nullopt;
}

Subspace kernel(const Tensor& a) {
  require_endomorphism(a);
  const std::size_t n = a.dim();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(j, i) = a.at({i, j}).rational();
    }
  }
  return Subspace::span(n, nullspace(m));
}

Subspace image(const Tensor& a) {
  require_endomorphism(a);
  const RationalMatrix m = rows_of(a);
  std::vector<RationalVector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    rows.push_back(m.row(i));
  }
  return Subspace::span(a.dim(), rows);
}

NullFiltration null_filtration(const Tensor& a) {
  require_endomorphism(a);
  if (!a.is_rational()) {
    throw ParameterError(
        "null filtration needs a parameter-free endomorphism; substitute a "
        "parameter value first");
  }
  const std::size_t bound = nilpotency_index(a).value_or(a.dim());
  NullFiltration out;
  Tensor p = Tensor::identity(a.dim());
  for (std::size_t k = 1; k <= bound; ++k) {
    p = compose(p, a);
    out.kernel_chain.push_back(kernel(p));
    out.image_chain.push_back(image(p));
  }
  return out;
}

Isotropy is_isotropic(const SymplecticForm& omega, const Subspace& s) {
  if (s.ambient_dim() != omega.dim()) {
    throw ShapeError("subspace and symplectic form dimensions differ");
  }
  const auto basis = s.basis_tensors();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = a + 1; b < basis.size(); ++b) {
      if (!omega.evaluate(basis[a], basis[b]).is_zero()) {
        return {false, false};
      }
    }
  }
  return {true, 2 * s.dim() == omega.dim()};
}

bool maps_into(const Tensor& endo, const Subspace& s) {
  require_endomorphism(endo);
  for (const auto& v : s.basis_tensors()) {
    if (!s.contains(apply(endo, v))) {
      return false;
    }
  }
  return true;
}

std::vector<Tensor> infinitesimal_holonomy(const FrameAlgebra& alg,
                                           const Connection& conn,
                                           std::optional<std::size_t> max_order) {
  const std::size_t n = conn.dim();
  const std::size_t cap = max_order.value_or(n * n);
  const Tensor r = curvature(alg, conn);

  std::vector<Tensor> seeds;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Tensor e(n, {Variance::down, Variance::up});
      for (std::size_t q = 0; q < n; ++q) {
        for (std::size_t k = 0; k < n; ++k) {
          e.at({q, k}) = r.at({i, j, q, k});
        }
      }
      if (!e.is_zero()) {
        seeds.push_back(std::move(e));
      }
    }
  }
  if (seeds.empty()) {
    return {};
  }
  if (!conn.is_rational()) {
    throw ParameterError(
        "holonomy of a non-flat parameter-dependent connection; substitute a "
        "parameter value first");
  }

  const std::size_t flat_dim = n * n;
  std::vector<Tensor> derivations;
  for (std::size_t l = 0; l < n; ++l) {
    derivations.push_back(christoffel_endomorphism(conn, l));
  }

  Subspace span = Subspace::span(flat_dim, seeds);
  for (std::size_t round = 0;; ++round) {
    std::vector<RationalVector> candidates = span.basis();
    const auto basis = span.basis();
    for (std::size_t a = 0; a < basis.size(); ++a) {
      Tensor m = tensor_from_rational(n, {Variance::down, Variance::up}, basis[a]);
      for (const auto& g : derivations) {
        candidates.push_back(rational_components(commutator(m, g)));
      }
      for (std::size_t b = a + 1; b < basis.size(); ++b) {
        Tensor other =
            tensor_from_rational(n, {Variance::down, Variance::up}, basis[b]);
        candidates.push_back(rational_components(commutator(m, other)));
      }
    }
    Subspace grown = Subspace::span(flat_dim, candidates);
    if (grown.dim() == span.dim()) {
      break;
    }
    if (round + 1 >= cap) {
      throw PreconditionError("infinitesimal holonomy did not stabilize within " +
                              std::to_string(cap) + " orders");
    }
    span = std::move(grown);
  }

  std::vector<Tensor> out;
  for (const auto& v : span.basis()) {
    out.push_back(tensor_from_rational(n, {Variance::down, Variance::up}, v));
  }
  return out;
}

bool commutes_with_holonomy(const Tensor& a,
                            const std::vector<Tensor>& generators) {
  for (const auto& g : generators) {
    if (g.dim() != a.dim()) {
      throw ShapeError("holonomy generator dimension differs");
    }
    if (!commutator(a, g).is_zero()) {
      return false;
    }
  }
  return true;
}

std::vector<Tensor> parallel_endomorphisms(const Connection& conn) {
  const std::size_t n = conn.dim();
  // Column (a, b) holds ∇ applied to the elementary endomorphism e_a ⊗ E_b.
  RationalMatrix m(n * n * n, n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      const Tensor d = covariant_derivative(conn, frame_endomorphism(n, a, b));
      for (std::size_t row = 0; row < d.size(); ++row) {
        m(row, a * n + b) = d[row].rational();
      }
    }
  }
  std::vector<Tensor> out;
  for (const auto& v : nullspace(m)) {
    out.push_back(tensor_from_rational(n, {Variance::down, Variance::up}, v));
  }
  return out;
}

AutomorphismReport verify_automorphism(const FrameAlgebra& alg,
                                       const SymplecticForm& omega,
                                       const Connection& conn, const Tensor& x,
                                       std::optional<Rational> parameter_value) {
  require_symplectic_connection(alg, omega, conn);

  AutomorphismReport report;
  report.vector = x;
  report.is_affine_automorphism =
      lie_derivative_connection(alg, conn, x).is_zero();
  report.d_flat = ce_differential(alg, flat(x, omega));
  report.is_symplectic = report.d_flat.is_zero();
  report.divergence = divergence(conn, x);
  if (!report.is_affine_automorphism) {
    return report;
  }

  report.d_flat_parallel = covariant_derivative(conn, report.d_flat).is_zero();
  const std::size_t half = alg.dim() / 2;
  report.wedge_identity =
      wedge(report.d_flat, omega_power(omega, half - 1)) ==
      report.divergence * omega_power(omega, half);

  Tensor a = musical_endomorphism(alg, omega, conn, x);
  report.endomorphism = a;

  Connection rank_conn = conn;
  if (!a.is_rational() || !conn.is_rational()) {
    if (parameter_value) {
      a = a.substitute(*parameter_value);
      rank_conn = conn.substitute(*parameter_value);
      report.substituted = parameter_value;
    }
  }

  for (std::size_t k = 1; k <= alg.dim(); ++k) {
    report.trace_powers.push_back(trace_power(*report.endomorphism, k));
  }
  report.nilpotency_index = nilpotency_index(*report.endomorphism);

  NullFiltration filtration = null_filtration(a);
  report.kernel_chain = std::move(filtration.kernel_chain);
  report.image_chain = std::move(filtration.image_chain);
  if (report.nilpotency_index) {
    const std::size_t index = *report.nilpotency_index;
    const Subspace top =
        index >= 2 ? report.image_chain[index - 2] : Subspace::whole(alg.dim());
    const Isotropy iso = is_isotropic(omega, top);
    report.image_isotropic = iso.isotropic;
    report.image_lagrangian = iso.lagrangian;
  }

  const auto holonomy = infinitesimal_holonomy(alg, rank_conn);
  report.holonomy_dimension = holonomy.size();
  report.holonomy_commutes = commutes_with_holonomy(a, holonomy);
  return report;
}

}  // namespace symconn

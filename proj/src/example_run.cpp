#include "symconn/example_run.hpp"

#include <algorithm>

#include "symconn/automorphism.hpp"
#include "symconn/catalog.hpp"
#include "symconn/moduli.hpp"
#include "symconn/report.hpp"

namespace symconn {

namespace {

constexpr std::size_t kDim = 4;

std::string residual_of(const Tensor& t) {
  for (IndexCounter idx(t.dim(), t.rank()); !idx.done(); idx.next()) {
    const Scalar& v = t.at(idx.index());
    if (!v.is_zero()) {
      std::string where;
      for (std::size_t s = 0; s < t.rank(); ++s) {
        where += (s ? "," : "") + std::to_string(idx[s] + 1);
      }
      return "[" + where + "] = " + v.to_string();
    }
  }
  return "0";
}

Tensor e(std::size_t label) { return Tensor::frame_vector(kDim, label); }
Tensor co(std::size_t label) { return Tensor::coframe(kDim, label); }

// The explicit formula for ∇_{X^a} X^b, written out independently of the
// Christoffel table:
//   ((2/3 − β) a4 b2 − (β + 1/3) a2 b4) E1 − (β + 1/3) a2 b2 E3.
Tensor christoffel_formula(const Scalar& beta, const Tensor& a, const Tensor& b) {
  const Scalar two_thirds(Rational(2, 3));
  const Scalar third(Rational(1, 3));
  Tensor out(kDim, {Variance::up});
  out[0] = (two_thirds - beta) * a[3] * b[1] - (beta + third) * a[1] * b[3];
  out[2] = -(beta + third) * a[1] * b[1];
  return out;
}

// Second line of the same formula, expanded in β.
Tensor christoffel_formula_expanded(const Scalar& beta, const Tensor& a,
                                   const Tensor& b) {
  const Scalar two_thirds(Rational(2, 3));
  const Scalar third(Rational(1, 3));
  Tensor out(kDim, {Variance::up});
  out[0] = two_thirds * a[3] * b[1] - third * a[1] * b[3] -
           beta * (a[1] * b[3] + a[3] * b[1]);
  out[2] = -(beta + third) * a[1] * b[1];
  return out;
}

// Frame vectors plus a few fixed combinations; all identities below are
// multilinear, so this set is more than enough.
std::vector<Tensor> probe_vectors() {
  std::vector<Tensor> out;
  for (std::size_t i = 1; i <= kDim; ++i) {
    out.push_back(e(i));
  }
  out.push_back(Tensor::vector({Scalar(1), Scalar(2), Scalar(-3), Scalar(5)}));
  out.push_back(Tensor::vector(
      {Scalar(Rational(-1, 2)), Scalar(3), Scalar(Rational(2, 7)), Scalar(-1)}));
  return out;
}

class Recorder {
 public:
  void expect_zero(const std::string& name, const Tensor& difference) {
    const std::string r = residual_of(difference);
    checks.push_back({name, r, r == "0"});
  }
  void expect(const std::string& name, bool ok, const std::string& detail) {
    checks.push_back({name, ok ? "0" : detail, ok});
  }

  std::vector<IdentityCheck> checks;
};

}  // namespace

bool ExampleRun::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const IdentityCheck& c) { return c.passed; });
}

ExampleRun run_kodaira_thurston_example(std::optional<Rational> beta_value) {
  const Scalar beta = beta_value ? Scalar(*beta_value)
                                 : Scalar::parameter(kCatalogParameter);
  const NamedModel model = kodaira_thurston(beta);
  const FrameAlgebra& alg = model.algebra;
  const SymplecticForm& omega = model.omega;
  const Connection& conn = *model.connection;
  Recorder rec;

  {
    Tensor expected(kDim, {Variance::down, Variance::down, Variance::up});
    expected.at({1, 3, 0}) = Scalar(-1);
    expected.at({3, 1, 0}) = Scalar(1);
    rec.expect_zero("[E2,E4] = -E1, all other brackets zero",
                    alg.structure_constants() - expected);
  }
  rec.expect_zero("d e1 = e2^e4",
                  ce_differential(alg, co(1)) - wedge(co(2), co(4)));
  for (std::size_t i = 2; i <= kDim; ++i) {
    rec.expect_zero("d e" + std::to_string(i) + " = 0", ce_differential(alg, co(i)));
  }
  rec.expect_zero("Omega = e1^e2 + e3^e4",
                  omega.lower() - wedge(co(1), co(2)) - wedge(co(3), co(4)));
  rec.expect_zero("d Omega = 0", ce_differential(alg, omega.lower()));

  const auto probes = probe_vectors();
  // Each slot keeps the first nonzero difference it sees.
  auto keep = [](Tensor& slot, const Tensor& diff) {
    if (slot.is_zero() && !diff.is_zero()) {
      slot = diff;
    }
  };
  Tensor formula_residual(kDim, {Variance::up});
  Tensor expanded_residual(kDim, {Variance::up});
  Tensor torsion_residual(kDim, {Variance::up});
  Tensor symmetry_residual = Tensor::scalar(kDim, Scalar(0));
  Tensor flat_residual(kDim, {Variance::up});
  for (const auto& a : probes) {
    for (const auto& b : probes) {
      const Tensor nab = covariant_derivative_vector(conn, a, b);
      keep(formula_residual, nab - christoffel_formula(beta, a, b));
      keep(expanded_residual, nab - christoffel_formula_expanded(beta, a, b));
      // ∇_a b − ∇_b a = −(a2 b4 − a4 b2) E1 = [a, b]
      Tensor display(kDim, {Variance::up});
      display[0] = -(a[1] * b[3] - a[3] * b[1]);
      keep(torsion_residual, nab - covariant_derivative_vector(conn, b, a) - display);
      keep(torsion_residual, display - bracket(alg, a, b));
      for (const auto& c : probes) {
        keep(symmetry_residual,
             Tensor::scalar(kDim, omega.evaluate(nab, c) -
                                      omega.evaluate(
                                          covariant_derivative_vector(conn, a, c), b)));
        // Components are constant, so ∇_a(∇_b c) only sees the Christoffel
        // term.
        keep(flat_residual, covariant_derivative_vector(
                                conn, a, covariant_derivative_vector(conn, b, c)));
        keep(flat_residual, covariant_derivative_vector(conn, nab, c));
      }
    }
  }
  rec.expect_zero("nabla_a b matches the explicit formula", formula_residual);
  rec.expect_zero("nabla_a b matches the expanded formula", expanded_residual);
  rec.expect_zero("nabla_a b - nabla_b a = -(a2b4 - a4b2)E1 = [a,b]",
                  torsion_residual);
  rec.expect_zero("Omega(nabla_a b, c) symmetric in b, c", symmetry_residual);
  rec.expect_zero("nabla_a nabla_b c = 0 and nabla_(nabla_a b) c = 0",
                  flat_residual);

  rec.expect_zero("torsion = 0", torsion(alg, conn));
  rec.expect_zero("nabla Omega = 0", covariant_derivative(conn, omega.lower()));
  rec.expect_zero("curvature = 0", curvature(alg, conn));

  for (std::size_t i = 1; i <= kDim; ++i) {
    rec.expect_zero("L_E" + std::to_string(i) + " nabla = 0",
                    lie_derivative_connection(alg, conn, e(i)));
  }
  for (const auto& a : probes) {
    // L_{X^a} Ω = d ι_{X^a} Ω = −a2 e2^e4
    const Tensor lie = lie_derivative_form(alg, a, omega.lower());
    rec.expect_zero("L_X Omega = -a2 e2^e4 for X = " + render_vector(a),
                    lie + a[1] * wedge(co(2), co(4)));
  }
  {
    const Tensor lie = lie_derivative_form(alg, e(2), omega.lower());
    rec.expect("L_E2 Omega != 0", !lie.is_zero(), "L_E2 Omega vanishes");
  }

  const AutomorphismReport r =
      verify_automorphism(alg, omega, conn, e(2), beta_value);
  rec.expect("E2 is an affine automorphism", r.is_affine_automorphism,
             "L_E2 nabla != 0");
  rec.expect("E2 is not symplectic", !r.is_symplectic, "dE2_flat = 0");
  rec.expect_zero("d(E2_flat) = -e2^e4", r.d_flat + wedge(co(2), co(4)));
  rec.expect("d(E2_flat) is parallel", r.d_flat_parallel, "nabla dX_flat != 0");
  rec.expect("dX_flat ^ Omega_1 = (div X) Omega_2", r.wedge_identity,
             "wedge identity fails");
  if (r.endomorphism) {
    Tensor expected(kDim, {Variance::down, Variance::up});
    expected.at({1, 2}) = Scalar(-1);
    expected.at({3, 0}) = Scalar(1);
    rec.expect_zero("A: E2 -> -E3, E4 -> E1", *r.endomorphism - expected);
  } else {
    rec.expect("A: E2 -> -E3, E4 -> E1", false, "no endomorphism computed");
  }
  rec.expect("A has nilpotency index 2", r.nilpotency_index == 2u,
             r.nilpotency_index ? std::to_string(*r.nilpotency_index) : "none");
  {
    std::string nonzero;
    for (std::size_t k = 0; k < r.trace_powers.size(); ++k) {
      if (!r.trace_powers[k].is_zero()) {
        nonzero = "tr A^" + std::to_string(k + 1) + " = " +
                  r.trace_powers[k].to_string();
        break;
      }
    }
    rec.expect("tr A^k = 0 for k = 1..4",
               nonzero.empty() && r.trace_powers.size() == kDim, nonzero);
  }
  {
    const Subspace expected = Subspace::span(kDim, std::vector<Tensor>{e(1), e(3)});
    const bool ok = !r.image_chain.empty() && r.image_chain[0] == expected;
    rec.expect("image of A = span{E1,E3}", ok,
               r.image_chain.empty() ? "no image" : render_subspace(r.image_chain[0]));
    rec.expect("image of A is Lagrangian", r.image_lagrangian.value_or(false),
               "not Lagrangian");
  }
  rec.expect("A commutes with the holonomy", r.holonomy_commutes.value_or(false),
             "commutator nonzero");
  rec.expect("holonomy is trivial", r.holonomy_dimension == 0,
             std::to_string(r.holonomy_dimension) + " generators");

  const Subspace symp = symplectic_field_space(alg, omega);
  rec.expect("symplectic invariant fields = span{E1,E3,E4}",
             symp == Subspace::span(kDim, std::vector<Tensor>{e(1), e(3), e(4)}),
             render_subspace(symp));
  if (beta_value) {
    const NonSymplecticReport ns = find_non_symplectic_automorphisms(alg, omega, conn);
    rec.expect("automorphisms: dimension 4, symplectic ones: dimension 3",
               ns.automorphism_dim == 4 && ns.symplectic_automorphism_dim == 3,
               std::to_string(ns.automorphism_dim) + ", " +
                   std::to_string(ns.symplectic_automorphism_dim));
  }

  return ExampleRun{beta_value, std::move(rec.checks)};
}

}  // namespace symconn

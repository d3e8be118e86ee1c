#include "doctest.h"

#include "support/model_gen.hpp"
#include "symconn/automorphism.hpp"
#include "symconn/catalog.hpp"
#include "symconn/error.hpp"
#include "symconn/moduli.hpp"

using namespace symconn;

namespace {

Tensor e(std::size_t i) { return Tensor::frame_vector(4, i); }

Tensor kt_endomorphism() {
  const NamedModel kt = kodaira_thurston(Scalar(0));
  return musical_endomorphism(kt.algebra, kt.omega, *kt.connection, e(2));
}

// Σ A^{ij} (A^{∘k−1})_{ij}, indices moved with the library conventions
// spelled out by hand: A^{ij} = Ω^{ip} A_p^j, B_{ij} = B_i^p Ω_pj.
Scalar raised_lowered_pairing(const SymplecticForm& omega, const Tensor& a, const Tensor& b) {
  const std::size_t n = omega.dim();
  Scalar sum;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar up, down;
      for (std::size_t p = 0; p < n; ++p) {
        up += omega.upper().at({i, p}) * a.at({p, j});
        down += b.at({i, p}) * omega(p, j);
      }
      sum += up * down;
    }
  return sum;
}

}  // namespace

TEST_SUITE("automorphism") {

TEST_CASE("musical endomorphism of E2 on the Kodaira-Thurston model") {
  const Tensor a = kt_endomorphism();
  CHECK(apply(a, e(2)) == -e(3));
  CHECK(apply(a, e(4)) == e(1));
  CHECK(apply(a, e(1)).is_zero());
  CHECK(apply(a, e(3)).is_zero());
  for (std::size_t k = 1; k <= 4; ++k) CHECK(trace_power(a, k).is_zero());
  CHECK(nilpotency_index(a) == 2u);
  const NullFiltration f = null_filtration(a);
  const Subspace e13 = Subspace::span(4, std::vector<Tensor>{e(1), e(3)});
  REQUIRE(f.kernel_chain.size() == 2);
  CHECK(f.kernel_chain[0] == e13);
  CHECK(f.image_chain[0] == e13);
  CHECK(f.kernel_chain[1] == Subspace::whole(4));
  CHECK(f.image_chain[1].is_zero());
}

TEST_CASE("symbolic family gives the same endomorphism") {
  const NamedModel kt = kodaira_thurston_symbolic();
  CHECK(musical_endomorphism(kt.algebra, kt.omega, *kt.connection, e(2)) == kt_endomorphism());
}

TEST_CASE("elementary endomorphisms") {
  const Tensor id = Tensor::identity(4);
  CHECK(trace_power(id, 3) == Scalar(4));
  CHECK_FALSE(nilpotency_index(id).has_value());
  const Tensor zero(4, {Variance::down, Variance::up});
  CHECK(nilpotency_index(zero) == 1u);
  const NullFiltration f = null_filtration(zero);
  CHECK(f.kernel_chain.front() == Subspace::whole(4));
  CHECK(f.image_chain.front().is_zero());
  Tensor symbolic(4, {Variance::down, Variance::up});
  symbolic.at({0, 1}) = Scalar::parameter("b");
  CHECK_THROWS_AS(null_filtration(symbolic), ParameterError);
  // compose applies the left factor first
  Tensor a(4, {Variance::down, Variance::up}), b(4, {Variance::down, Variance::up});
  a.at({0, 1}) = Scalar(1);  // E1 -> E2
  b.at({1, 2}) = Scalar(1);  // E2 -> E3
  CHECK(apply(compose(a, b), e(1)) == e(3));
  CHECK(apply(compose(b, a), e(1)).is_zero());
}

TEST_CASE("isotropy") {
  const SymplecticForm omega = kodaira_thurston(Scalar(0)).omega;
  const Isotropy e13 = is_isotropic(omega, Subspace::span(4, std::vector<Tensor>{e(1), e(3)}));
  CHECK(e13.isotropic);
  CHECK(e13.lagrangian);
  CHECK_FALSE(is_isotropic(omega, Subspace::span(4, std::vector<Tensor>{e(1), e(2)})).isotropic);
  const Isotropy zero = is_isotropic(omega, Subspace(4));
  CHECK(zero.isotropic);
  CHECK_FALSE(zero.lagrangian);
}

TEST_CASE("holonomy") {
  const NamedModel kt = kodaira_thurston_symbolic();
  CHECK(infinitesimal_holonomy(kt.algebra, *kt.connection).empty());
  CHECK(infinitesimal_holonomy(FrameAlgebra::abelian(4), Connection::zero(4)).empty());

  Tensor g(4, {Variance::down, Variance::down, Variance::up});
  g.at({1, 1, 3}) = Scalar(1);
  g.at({3, 3, 1}) = Scalar(1);
  const Connection curved(g);
  const auto hol = infinitesimal_holonomy(FrameAlgebra::abelian(4), curved);
  REQUIRE_FALSE(hol.empty());
  // R(E4, E2) as an endomorphism: entry (row 2, column 2) = 1
  Tensor r42(4, {Variance::down, Variance::up});
  const Tensor r = curvature(FrameAlgebra::abelian(4), curved);
  for (std::size_t q = 0; q < 4; ++q)
    for (std::size_t k = 0; k < 4; ++k) r42.at({q, k}) = r.at({3, 1, q, k});
  CHECK(r42.at({1, 1}) == Scalar(1));
  const std::size_t size = 16;
  CHECK(Subspace::span(size, hol).contains(rational_components(r42)));

  CHECK(commutes_with_holonomy(kt_endomorphism(), {}));
  CHECK(commutes_with_holonomy(Tensor::identity(4), hol));
}

TEST_CASE("verify_automorphism reports") {
  const NamedModel kt = kodaira_thurston(Scalar(0));
  const AutomorphismReport r2 = verify_automorphism(kt.algebra, kt.omega, *kt.connection, e(2));
  CHECK(r2.is_affine_automorphism);
  CHECK_FALSE(r2.is_symplectic);
  CHECK(r2.d_flat == -wedge(Tensor::coframe(4, 2), Tensor::coframe(4, 4)));
  CHECK(r2.nilpotency_index == 2u);
  CHECK(r2.image_lagrangian == true);
  CHECK(r2.image_isotropic == true);
  CHECK(r2.holonomy_commutes == true);
  CHECK(r2.d_flat_parallel);

  const AutomorphismReport r1 = verify_automorphism(kt.algebra, kt.omega, *kt.connection, e(1));
  CHECK(r1.is_affine_automorphism);
  CHECK(r1.is_symplectic);

  const NamedModel d1 = darboux_flat(1);
  testgen::Engine rng(51);
  for (int trial = 0; trial < 10; ++trial) {
    const AutomorphismReport r =
        verify_automorphism(d1.algebra, d1.omega, *d1.connection, testgen::random_vector(2, rng));
    CHECK(r.is_affine_automorphism);
    CHECK(r.is_symplectic);
  }
}

TEST_CASE("trace identities on sampled automorphisms") {
  // Σ A^{ij} A^{∘k−1}_{ij} = +tr A^{∘k} with Ω^{ip}Ω_pj = −δ, and tr A = 2 div X.
  testgen::Engine rng(52);
  std::size_t pairs = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const auto model = testgen::random_symplectic_model(4, rng);
    const auto space = symplectic_connection_space(model.algebra, model.omega);
    const Connection conn = testgen::random_point(space, rng, 2 + trial % 3);
    const Tensor x = testgen::random_vector(4, rng);
    const Tensor a = musical_endomorphism(model.algebra, model.omega, conn, x);
    for (std::size_t k = 2; k <= 4; ++k) {
      CHECK(raised_lowered_pairing(model.omega, a, endomorphism_power(a, k - 1)) ==
            trace_power(a, k));
    }
    for (const auto& v : automorphism_space(model.algebra, conn).basis_tensors()) {
      const Tensor av = musical_endomorphism(model.algebra, model.omega, conn, v);
      CHECK(trace_power(av, 1) == divergence(conn, v) * Scalar(2));
      ++pairs;
    }
  }
  CHECK(pairs > 0);
}

TEST_CASE("preconditions") {
  const NamedModel kt = kodaira_thurston(Scalar(0));
  CHECK_THROWS_AS(musical_endomorphism(kt.algebra, kt.omega, Connection::zero(4), e(2)),
                  PreconditionError);
  CHECK_THROWS_AS(verify_automorphism(kt.algebra, kt.omega, Connection::zero(4), e(2)),
                  PreconditionError);
}

}  // TEST_SUITE

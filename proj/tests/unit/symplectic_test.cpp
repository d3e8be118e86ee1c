#include "doctest.h"

#include "support/model_gen.hpp"
#include "support/oracles.hpp"
#include "symconn/catalog.hpp"
#include "symconn/error.hpp"
#include "symconn/frame_algebra.hpp"
#include "symconn/symplectic.hpp"

using namespace symconn;

TEST_SUITE("symplectic") {

TEST_CASE("Kodaira-Thurston form") {
  const SymplecticForm omega = kodaira_thurston(Scalar(0)).omega;
  CHECK(omega.pfaffian() == 1);
  CHECK(omega.upper().at({0, 1}) == Scalar(1));
  CHECK(omega.upper().at({2, 3}) == Scalar(1));
  CHECK(flat(Tensor::frame_vector(4, 2), omega) ==
        Tensor::covector({Scalar(-1), Scalar(0), Scalar(0), Scalar(0)}));
}

TEST_CASE("rejected forms") {
  Tensor degenerate(4, {Variance::down, Variance::down});
  degenerate.at({0, 1}) = Scalar(1);
  degenerate.at({1, 0}) = Scalar(-1);
  CHECK_THROWS_AS(SymplecticForm{degenerate}, PreconditionError);
  Tensor odd(3, {Variance::down, Variance::down});
  odd.at({0, 1}) = Scalar(1);
  odd.at({1, 0}) = Scalar(-1);
  CHECK_THROWS_AS(SymplecticForm{odd}, PreconditionError);
  Tensor lopsided(2, {Variance::down, Variance::down});
  lopsided.at({0, 1}) = Scalar(1);
  CHECK_THROWS_AS(SymplecticForm{lopsided}, ShapeError);
  Tensor symbolic(2, {Variance::down, Variance::down});
  symbolic.at({0, 1}) = Scalar::parameter("b");
  symbolic.at({1, 0}) = -Scalar::parameter("b");
  CHECK_THROWS_AS(SymplecticForm{symbolic}, ParameterError);
}

TEST_CASE("musical round trips and the -δ convention on random forms") {
  testgen::Engine rng(31);
  for (int trial = 0; trial < 40; ++trial) {
    const auto model = testgen::random_symplectic_model(trial % 2 ? 4 : 6, rng);
    const SymplecticForm& omega = model.omega;
    const std::size_t n = omega.dim();
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        Scalar s;
        for (std::size_t p = 0; p < n; ++p) s += omega.upper().at({i, p}) * omega(p, j);
        CHECK(s == Scalar(i == j ? -1 : 0));
      }
    }
    const Tensor x = testgen::random_vector(n, rng);
    const Tensor alpha = testgen::random_tensor(n, {Variance::down}, rng);
    CHECK(raise_index(lower_index(x, 0, omega), 0, omega) == x);
    CHECK(lower_index(raise_index(alpha, 0, omega), 0, omega) == alpha);
    CHECK(flat(x, omega) == oracle::flat(x, omega));
    CHECK(interior_product(x, omega.lower()) == flat(x, omega));
    const Tensor t = testgen::random_tensor(n, {Variance::down, Variance::up}, rng);
    CHECK(lower_index(raise_index(t, 0, omega), 0, omega) == t);
  }
}

TEST_CASE("Darboux top power is the unit volume form") {
  for (std::size_t k = 1; k <= 3; ++k) {
    const SymplecticForm omega = SymplecticForm::darboux(k);
    const Tensor top = omega_power(omega, k);
    std::vector<std::size_t> idx(2 * k);
    for (std::size_t s = 0; s < idx.size(); ++s) idx[s] = s;
    CHECK(top.at(idx) == Scalar(1));
    CHECK_THROWS_AS(omega_power(omega, k + 1), ShapeError);
  }
}

}  // TEST_SUITE

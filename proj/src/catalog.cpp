#include "symconn/catalog.hpp"

#include <string>

#include "symconn/error.hpp"

namespace symconn {

void validate_model(const NamedModel& model) {
  if (auto violations = check_algebra(model.algebra.structure_constants());
      !violations.empty()) {
    throw AlgebraValidationError(std::move(violations));
  }
  if (model.omega.dim() != model.algebra.dim()) {
    throw ShapeError("model '" + model.name +
                     "': symplectic form dimension differs from algebra");
  }
  if (model.algebra.dim() > 2 &&
      !ce_differential(model.algebra, model.omega.lower()).is_zero()) {
    throw PreconditionError("model '" + model.name + "': Ω is not closed");
  }
  if (model.connection) {
    require_symplectic_connection(model.algebra, model.omega, *model.connection);
  }
}

NamedModel kodaira_thurston(const Scalar& beta) {
  constexpr std::size_t n = 4;
  // 0-based storage: E_1 -> 0, ..., E_4 -> 3.
  Tensor c(n, {Variance::down, Variance::down, Variance::up});
  c.at({1, 3, 0}) = Scalar(-1);
  c.at({3, 1, 0}) = Scalar(1);

  Tensor w(n, {Variance::down, Variance::down});
  w.at({0, 1}) = Scalar(1);
  w.at({1, 0}) = Scalar(-1);
  w.at({2, 3}) = Scalar(1);
  w.at({3, 2}) = Scalar(-1);

  const Scalar third(Rational(1, 3));
  Tensor gamma(n, {Variance::down, Variance::down, Variance::up});
  gamma.at({3, 1, 0}) = -(beta - Scalar(Rational(2, 3)));
  gamma.at({1, 3, 0}) = -(beta + third);
  gamma.at({1, 1, 2}) = -(beta + third);

  NamedModel model{
      "kodaira_thurston",
      FrameAlgebra::validate(std::move(c)),
      SymplecticForm(std::move(w)),
      Connection(std::move(gamma)),
      "Kodaira-Thurston nilmanifold (Heisenberg x R), invariant coframe "
      "e1 = dt1 - t4 dt2, e2 = dt2, e3 = dt3, e4 = dt4; flat symplectic "
      "beta-family"};
  validate_model(model);
  return model;
}

NamedModel kodaira_thurston_symbolic() {
  return kodaira_thurston(Scalar::parameter(kCatalogParameter));
}

NamedModel darboux_flat(std::size_t n) {
  if (n == 0) {
    throw ShapeError("darboux_flat needs n >= 1");
  }
  NamedModel model{"darboux_flat_" + std::to_string(n),
                   FrameAlgebra::abelian(2 * n), SymplecticForm::darboux(n),
                   Connection::zero(2 * n),
                   "standard flat affine space with a parallel Darboux form"};
  validate_model(model);
  return model;
}

}  // namespace symconn

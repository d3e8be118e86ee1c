#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "symconn/connection.hpp"
#include "symconn/frame_algebra.hpp"
#include "symconn/scalar.hpp"
#include "symconn/symplectic.hpp"

namespace symconn {

/// A validated model: algebra, symplectic form and optionally a
/// torsion-free symplectic connection (possibly parameter-dependent).
struct NamedModel {
  std::string name;
  FrameAlgebra algebra;
  SymplecticForm omega;
  std::optional<Connection> connection;
  std::string description;
};

/// Checks a model's data; throws AlgebraValidationError or
/// PreconditionError naming the failed identity.
void validate_model(const NamedModel& model);

/// Name of the formal parameter used by the symbolic catalog entries.
inline constexpr const char* kCatalogParameter = "b";

/// Kodaira–Thurston nilmanifold in its invariant frame: [E_2, E_4] = −E_1,
/// Ω = e^1∧e^2 + e^3∧e^4, and the flat symplectic family
///   ∇_{E_4}E_2 = −(β − 2/3)E_1, ∇_{E_2}E_4 = −(β + 1/3)E_1,
///   ∇_{E_2}E_2 = −(β + 1/3)E_3,
/// with all other frame derivatives zero. `beta` may be a rational or the
/// formal parameter (Scalar::parameter(kCatalogParameter)).
NamedModel kodaira_thurston(const Scalar& beta);
NamedModel kodaira_thurston_symbolic();

/// Abelian algebra of dimension 2n with the Darboux form and the zero
/// connection.
NamedModel darboux_flat(std::size_t n);

}  // namespace symconn

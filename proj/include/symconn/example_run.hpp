#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symconn/scalar.hpp"

namespace symconn {

/// One identity of the Kodaira–Thurston example. `residual` is "0" when the
/// identity holds, otherwise the first nonzero component of the difference
/// (a polynomial in β for the symbolic run).
struct IdentityCheck {
  std::string name;
  std::string residual;
  bool passed = false;
};

struct ExampleRun {
  /// nullopt: β kept as the formal parameter.
  std::optional<Rational> beta;
  std::vector<IdentityCheck> checks;

  bool all_passed() const;
};

/// Verifies the Kodaira–Thurston data end to end: brackets, dΩ = 0,
/// torsion, ∇Ω, flatness, the explicit Christoffel formula, the
/// automorphism property of every frame field, L_{E_2}Ω = −e²∧e⁴ and the
/// automorphism report of E_2.
ExampleRun run_kodaira_thurston_example(std::optional<Rational> beta);

}  // namespace symconn

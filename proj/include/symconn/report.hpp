#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symconn/automorphism.hpp"
#include "symconn/linear_algebra.hpp"
#include "symconn/scalar.hpp"
#include "symconn/tensor.hpp"

namespace symconn {

/// "E1-2*E3", "0".
std::string render_vector(const Tensor& v);
/// Forms in the coframe, increasing index order: "-e2^e4", "e1^e2+e3^e4".
std::string render_form(const Tensor& form);
/// Nonzero images of the frame: "E2 -> -E3, E4 -> E1", or "0".
std::string render_endomorphism(const Tensor& a);
/// "span{E1,E3}", or "0" for the zero subspace.
std::string render_subspace(const Subspace& s);

struct LabelledReport {
  std::string model;
  std::string vector_name;
  std::optional<Rational> beta;
  AutomorphismReport report;
};

// Machine format: a JSON array with one object per vector. Keys:
//   model, vector, components, beta, is_affine_automorphism, is_symplectic,
//   d_flat, divergence, d_flat_parallel, wedge_identity, endomorphism,
//   nilpotency_index, trace_powers, kernel_chain, image_chain,
//   image_isotropic, image_lagrangian, holonomy_dimension, holonomy_commutes.
// Scalars are literal strings; forms and endomorphisms are lists of sparse
// 1-based entries {"i", "j", "v"}; subspaces are lists of basis vectors.
// Fields that only make sense for affine automorphisms are null otherwise.
std::string render_machine(const std::vector<LabelledReport>& reports);

/// Line-oriented summary of one report.
std::string render_human(const LabelledReport& report);

}  // namespace symconn

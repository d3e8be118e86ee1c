#include "symconn/report.hpp"

#include <sstream>

#include "json.hpp"

namespace symconn {

namespace {

using ordered_json = nlohmann::ordered_json;

// Appends coeff*basis to a sum, with unit coefficients elided.
void append_term(std::string& out, const Scalar& coeff, const std::string& basis) {
  std::string c;
  if (coeff == Scalar(1)) {
    c = "";
  } else if (coeff == Scalar(-1)) {
    c = "-";
  } else if (coeff.is_rational()) {
    c = coeff.to_string() + "*";
  } else {
    c = "(" + coeff.to_string() + ")*";
  }
  if (!out.empty() && (c.empty() || c[0] != '-')) {
    out += "+";
  }
  out += c + basis;
}

bool increasing(std::span<const std::size_t> idx) {
  for (std::size_t s = 1; s < idx.size(); ++s) {
    if (idx[s - 1] >= idx[s]) {
      return false;
    }
  }
  return true;
}

ordered_json scalar_list(const Tensor& v) {
  auto arr = ordered_json::array();
  for (const auto& s : v.components()) {
    arr.push_back(s.to_string());
  }
  return arr;
}

ordered_json sparse_entries(const Tensor& t, bool increasing_only) {
  auto arr = ordered_json::array();
  for (IndexCounter idx(t.dim(), t.rank()); !idx.done(); idx.next()) {
    if (increasing_only && !increasing(idx.index())) {
      continue;
    }
    const Scalar& v = t.at(idx.index());
    if (v.is_zero()) {
      continue;
    }
    ordered_json e;
    const char* names[] = {"i", "j", "k", "l", "m", "n", "p", "q"};
    for (std::size_t s = 0; s < t.rank(); ++s) {
      e[names[s]] = idx[s] + 1;
    }
    e["v"] = v.to_string();
    arr.push_back(std::move(e));
  }
  return arr;
}

ordered_json subspace_json(const Subspace& s) {
  auto arr = ordered_json::array();
  for (const auto& b : s.basis_tensors()) {
    arr.push_back(scalar_list(b));
  }
  return arr;
}

template <typename T>
ordered_json optional_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

std::string render_vector(const Tensor& v) {
  std::string out;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (!v[i].is_zero()) {
      append_term(out, v[i], "E" + std::to_string(i + 1));
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_form(const Tensor& form) {
  if (form.rank() == 0) {
    return form[0].to_string();
  }
  std::string out;
  for (IndexCounter idx(form.dim(), form.rank()); !idx.done(); idx.next()) {
    const Scalar& v = form.at(idx.index());
    if (v.is_zero() || !increasing(idx.index())) {
      continue;
    }
    std::string basis;
    for (std::size_t s = 0; s < form.rank(); ++s) {
      basis += (s ? "^e" : "e") + std::to_string(idx[s] + 1);
    }
    append_term(out, v, basis);
  }
  return out.empty() ? "0" : out;
}

std::string render_endomorphism(const Tensor& a) {
  const std::size_t n = a.dim();
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    std::string image;
    for (std::size_t j = 0; j < n; ++j) {
      if (!a.at({i, j}).is_zero()) {
        append_term(image, a.at({i, j}), "E" + std::to_string(j + 1));
      }
    }
    if (!image.empty()) {
      out += (out.empty() ? "" : ", ") + ("E" + std::to_string(i + 1)) + " -> " +
             image;
    }
  }
  return out.empty() ? "0" : out;
}

std::string render_subspace(const Subspace& s) {
  if (s.is_zero()) {
    return "0";
  }
  std::string out = "span{";
  bool first = true;
  for (const auto& b : s.basis_tensors()) {
    out += (first ? "" : ",") + render_vector(b);
    first = false;
  }
  return out + "}";
}

std::string render_machine(const std::vector<LabelledReport>& reports) {
  auto arr = ordered_json::array();
  for (const auto& lr : reports) {
    const AutomorphismReport& r = lr.report;
    const bool aut = r.is_affine_automorphism;
    ordered_json o;
    o["model"] = lr.model;
    o["vector"] = lr.vector_name;
    o["components"] = scalar_list(r.vector);
    o["beta"] = lr.beta ? ordered_json(to_string(*lr.beta)) : ordered_json(nullptr);
    o["is_affine_automorphism"] = aut;
    o["is_symplectic"] = r.is_symplectic;
    o["d_flat"] = sparse_entries(r.d_flat, true);
    o["divergence"] = r.divergence.to_string();
    o["d_flat_parallel"] = aut ? ordered_json(r.d_flat_parallel) : nullptr;
    o["wedge_identity"] = aut ? ordered_json(r.wedge_identity) : nullptr;
    o["endomorphism"] =
        r.endomorphism ? sparse_entries(*r.endomorphism, false) : nullptr;
    o["nilpotency_index"] = optional_json(r.nilpotency_index);
    auto traces = ordered_json::array();
    for (const auto& t : r.trace_powers) {
      traces.push_back(t.to_string());
    }
    o["trace_powers"] = aut ? traces : nullptr;
    auto kernels = ordered_json::array();
    for (const auto& s : r.kernel_chain) {
      kernels.push_back(subspace_json(s));
    }
    auto images = ordered_json::array();
    for (const auto& s : r.image_chain) {
      images.push_back(subspace_json(s));
    }
    o["kernel_chain"] = aut ? kernels : nullptr;
    o["image_chain"] = aut ? images : nullptr;
    o["image_isotropic"] = optional_json(r.image_isotropic);
    o["image_lagrangian"] = optional_json(r.image_lagrangian);
    o["holonomy_dimension"] = aut ? ordered_json(r.holonomy_dimension) : nullptr;
    o["holonomy_commutes"] = optional_json(r.holonomy_commutes);
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string render_human(const LabelledReport& lr) {
  const AutomorphismReport& r = lr.report;
  std::ostringstream os;
  os << "model: " << lr.model << "\n";
  os << "vector: " << lr.vector_name << " = " << render_vector(r.vector) << "\n";
  if (lr.beta) {
    os << "beta: " << to_string(*lr.beta) << "\n";
  }
  os << "affine automorphism: " << yes_no(r.is_affine_automorphism) << "\n";
  os << "symplectic: " << yes_no(r.is_symplectic) << "\n";
  os << "dX_flat = " << render_form(r.d_flat) << "\n";
  os << "div X = " << r.divergence << "\n";
  if (!r.is_affine_automorphism) {
    return os.str();
  }
  os << "dX_flat parallel: " << yes_no(r.d_flat_parallel) << "\n";
  os << "dX_flat ^ Omega_(n-1) = (div X) Omega_n: " << yes_no(r.wedge_identity)
     << "\n";
  if (r.endomorphism) {
    os << "A: " << render_endomorphism(*r.endomorphism) << "\n";
  }
  os << "nilpotency index: "
     << (r.nilpotency_index ? std::to_string(*r.nilpotency_index) : "none") << "\n";
  os << "tr A^k (k = 1.." << r.trace_powers.size() << "):";
  for (const auto& t : r.trace_powers) {
    os << " " << t;
  }
  os << "\n";
  os << "kernel chain:";
  for (const auto& s : r.kernel_chain) {
    os << " " << render_subspace(s);
  }
  os << "\nimage chain:";
  for (const auto& s : r.image_chain) {
    os << " " << render_subspace(s);
  }
  os << "\n";
  if (r.image_isotropic) {
    os << "top image isotropic: " << yes_no(*r.image_isotropic)
       << ", Lagrangian: " << yes_no(r.image_lagrangian.value_or(false)) << "\n";
  }
  os << "holonomy dimension: " << r.holonomy_dimension << "\n";
  if (r.holonomy_commutes) {
    os << "A commutes with holonomy: " << yes_no(*r.holonomy_commutes) << "\n";
  }
  return os.str();
}

}  // namespace symconn

#include "symconn/symplectic.hpp"

#include <string>
#include <vector>

#include "symconn/error.hpp"
#include "symconn/frame_algebra.hpp"

namespace symconn {

namespace {

// Expansion along the first row: Pf(A) = Σ_j (−1)^{j+1} a_{0j} Pf(A_{0j}),
// with the remaining index set carried explicitly. Fine for dim <= 8.
Rational pfaffian_of(const RationalMatrix& m, std::vector<std::size_t>& idx) {
  if (idx.empty()) {
    return Rational(1);
  }
  const std::size_t first = idx[0];
  Rational total(0);
  for (std::size_t pos = 1; pos < idx.size(); ++pos) {
    const Rational& a = m(first, idx[pos]);
    if (a == 0) {
      continue;
    }
    std::vector<std::size_t> rest;
    rest.reserve(idx.size() - 2);
    for (std::size_t q = 1; q < idx.size(); ++q) {
      if (q != pos) {
        rest.push_back(idx[q]);
      }
    }
    Rational sub = a * pfaffian_of(m, rest);
    if (pos % 2 == 1) {
      total += sub;
    } else {
      total -= sub;
    }
  }
  return total;
}

Tensor contract_slot_with(const Tensor& t, std::size_t slot, const Tensor& form,
                          bool form_first_slot, Variance result_variance) {
  // result[..i..] = Σ_p t[..p..] * form(p, i)   (form_first_slot)
  //              = Σ_p form(i, p) * t[..p..]   (otherwise)
  Valence valence = t.valence();
  valence[slot] = result_variance;
  Tensor out(t.dim(), valence);
  const std::size_t n = t.dim();
  std::vector<std::size_t> src(t.rank());
  for (IndexCounter it(n, t.rank()); !it.done(); it.next()) {
    std::copy(it.index().begin(), it.index().end(), src.begin());
    const std::size_t i = it[slot];
    Scalar sum;
    for (std::size_t p = 0; p < n; ++p) {
      const Scalar& w = form_first_slot ? form.at({p, i}) : form.at({i, p});
      if (w.is_zero()) {
        continue;
      }
      src[slot] = p;
      const Scalar& v = t.at(std::span<const std::size_t>(src));
      if (!v.is_zero()) {
        sum += v * w;
      }
    }
    out.at(it.index()) = std::move(sum);
  }
  return out;
}

}  // namespace

Rational pfaffian(const RationalMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ShapeError("Pfaffian of a non-square matrix");
  }
  if (m.rows() % 2 == 1) {
    return Rational(0);
  }
  std::vector<std::size_t> idx(m.rows());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    idx[i] = i;
  }
  return pfaffian_of(m, idx);
}

SymplecticForm::SymplecticForm(Tensor lower) : lower_(std::move(lower)) {
  if (!lower_.has_valence({Variance::down, Variance::down})) {
    throw ShapeError("symplectic form needs valence (down, down)");
  }
  if (!is_form(lower_)) {
    throw ShapeError("symplectic form must be antisymmetric");
  }
  if (!lower_.is_rational()) {
    throw ParameterError("symplectic form entries must be rational");
  }
  const std::size_t n = lower_.dim();
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      m(i, j) = lower_.at({i, j}).rational();
    }
  }
  pfaffian_ = symconn::pfaffian(m);
  if (pfaffian_ == 0) {
    throw PreconditionError("symplectic form is degenerate (Pfaffian = 0)");
  }
  auto inv = inverse(m);
  if (!inv) {
    throw ConventionFault("nonzero Pfaffian but singular matrix");
  }
  // Ω^ip Ω_pj = −δ_j^i  ⇒  [Ω^ij] = −[Ω_ij]^{-1}.
  upper_ = Tensor(n, {Variance::up, Variance::up});
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      upper_.at({i, j}) = Scalar(Rational(-(*inv)(i, j)));
    }
  }
}

SymplecticForm SymplecticForm::darboux(std::size_t n) {
  Tensor w(2 * n, {Variance::down, Variance::down});
  for (std::size_t k = 0; k < n; ++k) {
    w.at({2 * k, 2 * k + 1}) = Scalar(1);
    w.at({2 * k + 1, 2 * k}) = Scalar(-1);
  }
  return SymplecticForm(std::move(w));
}

Scalar SymplecticForm::evaluate(const Tensor& u, const Tensor& v) const {
  if (!u.has_valence({Variance::up}) || !v.has_valence({Variance::up}) ||
      u.dim() != dim() || v.dim() != dim()) {
    throw ShapeError("Ω evaluates on two vectors of matching dimension");
  }
  Scalar sum;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < dim(); ++j) {
      const Scalar& w = lower_.at({i, j});
      if (!w.is_zero() && !v[j].is_zero()) {
        sum += u[i] * v[j] * w;
      }
    }
  }
  return sum;
}

Tensor lower_index(const Tensor& t, std::size_t slot,
                   const SymplecticForm& omega) {
  if (slot >= t.rank() || t.variance(slot) != Variance::up) {
    throw ShapeError("lower_index needs an up slot");
  }
  if (t.dim() != omega.dim()) {
    throw ShapeError("dimension mismatch with symplectic form");
  }
  return contract_slot_with(t, slot, omega.lower(), /*form_first_slot=*/true,
                            Variance::down);
}

Tensor raise_index(const Tensor& t, std::size_t slot,
                   const SymplecticForm& omega) {
  if (slot >= t.rank() || t.variance(slot) != Variance::down) {
    throw ShapeError("raise_index needs a down slot");
  }
  if (t.dim() != omega.dim()) {
    throw ShapeError("dimension mismatch with symplectic form");
  }
  return contract_slot_with(t, slot, omega.upper(), /*form_first_slot=*/false,
                            Variance::up);
}

Tensor flat(const Tensor& x, const SymplecticForm& omega) {
  if (!x.has_valence({Variance::up})) {
    throw ShapeError("flat needs a vector");
  }
  return lower_index(x, 0, omega);
}

Tensor omega_power(const SymplecticForm& omega, std::size_t k) {
  if (2 * k > omega.dim()) {
    throw ShapeError("Ω_" + std::to_string(k) + " exceeds dimension " +
                     std::to_string(omega.dim()));
  }
  Tensor power = Tensor::scalar(omega.dim(), Scalar(1));
  for (std::size_t i = 1; i <= k; ++i) {
    power = wedge(power, omega.lower());
    power *= Scalar(Rational(1, static_cast<unsigned long>(i)));
  }
  return power;
}

}  // namespace symconn

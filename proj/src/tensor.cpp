#include "symconn/tensor.hpp"

#include <algorithm>
#include <ostream>
#include <string>

#include "symconn/error.hpp"

namespace symconn {

std::size_t power(std::size_t base, std::size_t exponent) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    out *= base;
  }
  return out;
}

void IndexCounter::next() {
  for (std::size_t s = index_.size(); s-- > 0;) {
    if (++index_[s] < dim_) {
      return;
    }
    index_[s] = 0;
  }
  done_ = true;
}

Tensor::Tensor(std::size_t dim, Valence valence)
    : dim_(dim), valence_(std::move(valence)) {
  if (dim == 0 || dim > kMaxDimension) {
    throw ShapeError("tensor dimension must be in 1.." +
                     std::to_string(kMaxDimension) + ", got " +
                     std::to_string(dim));
  }
  components_.resize(power(dim_, valence_.size()));
}

Tensor Tensor::from_components(std::size_t dim, Valence valence,
                               std::vector<Scalar> components) {
  Tensor t(dim, std::move(valence));
  if (components.size() != t.components_.size()) {
    throw ShapeError("expected " + std::to_string(t.components_.size()) +
                     " components, got " + std::to_string(components.size()));
  }
  t.components_ = std::move(components);
  return t;
}

Tensor Tensor::vector(std::vector<Scalar> components) {
  std::size_t dim = components.size();
  return from_components(dim, {Variance::up}, std::move(components));
}

Tensor Tensor::covector(std::vector<Scalar> components) {
  std::size_t dim = components.size();
  return from_components(dim, {Variance::down}, std::move(components));
}

Tensor Tensor::scalar(std::size_t dim, const Scalar& value) {
  Tensor t(dim, {});
  t.components_[0] = value;
  return t;
}

Tensor Tensor::frame_vector(std::size_t dim, std::size_t label) {
  if (label < 1 || label > dim) {
    throw ShapeError("frame label " + std::to_string(label) + " outside 1.." +
                     std::to_string(dim));
  }
  Tensor t(dim, {Variance::up});
  t.components_[label - 1] = Scalar(1);
  return t;
}

Tensor Tensor::coframe(std::size_t dim, std::size_t label) {
  Tensor t = frame_vector(dim, label);
  t.valence_ = {Variance::down};
  return t;
}

Tensor Tensor::identity(std::size_t dim) {
  Tensor t(dim, {Variance::down, Variance::up});
  for (std::size_t i = 0; i < dim; ++i) {
    t.at({i, i}) = Scalar(1);
  }
  return t;
}

bool Tensor::has_valence(std::initializer_list<Variance> expected) const {
  return std::equal(valence_.begin(), valence_.end(), expected.begin(),
                    expected.end());
}

std::size_t Tensor::offset(std::span<const std::size_t> index) const {
  if (index.size() != valence_.size()) {
    throw ShapeError("multi-index of length " + std::to_string(index.size()) +
                     " for rank " + std::to_string(valence_.size()));
  }
  std::size_t flat = 0;
  for (std::size_t i : index) {
    if (i >= dim_) {
      throw ShapeError("index " + std::to_string(i) + " out of range");
    }
    flat = flat * dim_ + i;
  }
  return flat;
}

const Scalar& Tensor::at(std::initializer_list<std::size_t> index) const {
  return components_[offset(std::span(index.begin(), index.size()))];
}

Scalar& Tensor::at(std::initializer_list<std::size_t> index) {
  return components_[offset(std::span(index.begin(), index.size()))];
}

const Scalar& Tensor::at(std::span<const std::size_t> index) const {
  return components_[offset(index)];
}

Scalar& Tensor::at(std::span<const std::size_t> index) {
  return components_[offset(index)];
}

bool Tensor::is_zero() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Scalar& s) { return s.is_zero(); });
}

bool Tensor::is_rational() const {
  return std::all_of(components_.begin(), components_.end(),
                     [](const Scalar& s) { return s.is_rational(); });
}

Tensor Tensor::substitute(const Rational& value) const {
  Tensor out = *this;
  for (auto& s : out.components_) {
    if (!s.is_rational()) {
      s = s.substitute(value);
    }
  }
  return out;
}

void Tensor::require_same_shape(const Tensor& rhs, const char* op) const {
  if (dim_ != rhs.dim_ || valence_ != rhs.valence_) {
    throw ShapeError(std::string("tensor shapes differ in ") + op);
  }
}

Tensor& Tensor::operator+=(const Tensor& rhs) {
  require_same_shape(rhs, "+");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i] += rhs.components_[i];
  }
  return *this;
}

Tensor& Tensor::operator-=(const Tensor& rhs) {
  require_same_shape(rhs, "-");
  for (std::size_t i = 0; i < components_.size(); ++i) {
    components_[i] -= rhs.components_[i];
  }
  return *this;
}

Tensor& Tensor::operator*=(const Scalar& factor) {
  for (auto& s : components_) {
    if (!s.is_zero()) {
      s *= factor;
    }
  }
  return *this;
}

Tensor tensor_product(const Tensor& lhs, const Tensor& rhs) {
  if (lhs.dim() != rhs.dim()) {
    throw ShapeError("tensor product of different dimensions");
  }
  Valence valence = lhs.valence();
  valence.insert(valence.end(), rhs.valence().begin(), rhs.valence().end());
  Tensor out(lhs.dim(), std::move(valence));
  const std::size_t n = rhs.size();
  for (std::size_t a = 0; a < lhs.size(); ++a) {
    if (lhs[a].is_zero()) {
      continue;
    }
    for (std::size_t b = 0; b < n; ++b) {
      if (!rhs[b].is_zero()) {
        out[a * n + b] = lhs[a] * rhs[b];
      }
    }
  }
  return out;
}

Tensor contract(const Tensor& t, std::size_t slot_a, std::size_t slot_b) {
  if (slot_a >= t.rank() || slot_b >= t.rank() || slot_a == slot_b) {
    throw ShapeError("invalid contraction slots");
  }
  if (t.variance(slot_a) == t.variance(slot_b)) {
    throw ShapeError("contraction needs one up slot and one down slot");
  }
  Valence valence;
  for (std::size_t s = 0; s < t.rank(); ++s) {
    if (s != slot_a && s != slot_b) {
      valence.push_back(t.variance(s));
    }
  }
  Tensor out(t.dim(), valence);
  std::vector<std::size_t> full(t.rank());
  for (IndexCounter it(t.dim(), out.rank()); !it.done(); it.next()) {
    std::size_t r = 0;
    for (std::size_t s = 0; s < t.rank(); ++s) {
      if (s != slot_a && s != slot_b) {
        full[s] = it[r++];
      }
    }
    Scalar sum;
    for (std::size_t p = 0; p < t.dim(); ++p) {
      full[slot_a] = p;
      full[slot_b] = p;
      const Scalar& v = t.at(std::span<const std::size_t>(full));
      if (!v.is_zero()) {
        sum += v;
      }
    }
    out.at(it.index()) = std::move(sum);
  }
  return out;
}

Tensor permute(const Tensor& t, std::span<const std::size_t> order) {
  if (order.size() != t.rank()) {
    throw ShapeError("permutation length differs from rank");
  }
  std::vector<bool> seen(t.rank(), false);
  Valence valence(t.rank());
  for (std::size_t s = 0; s < order.size(); ++s) {
    if (order[s] >= t.rank() || seen[order[s]]) {
      throw ShapeError("not a permutation of the slots");
    }
    seen[order[s]] = true;
    valence[s] = t.variance(order[s]);
  }
  Tensor out(t.dim(), valence);
  std::vector<std::size_t> source(t.rank());
  for (IndexCounter it(t.dim(), t.rank()); !it.done(); it.next()) {
    for (std::size_t s = 0; s < order.size(); ++s) {
      source[order[s]] = it[s];
    }
    out.at(it.index()) = t.at(std::span<const std::size_t>(source));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Tensor& t) {
  os << "Tensor[dim=" << t.dim() << ", valence=";
  for (Variance v : t.valence()) {
    os << (v == Variance::up ? 'u' : 'd');
  }
  os << "]{";
  bool first = true;
  for (IndexCounter it(t.dim(), t.rank()); !it.done(); it.next()) {
    const Scalar& v = t.at(it.index());
    if (v.is_zero()) {
      continue;
    }
    os << (first ? "" : ", ") << '(';
    for (std::size_t s = 0; s < t.rank(); ++s) {
      os << (s ? "," : "") << it[s] + 1;
    }
    os << ")=" << v;
    first = false;
  }
  return os << '}';
}

}  // namespace symconn

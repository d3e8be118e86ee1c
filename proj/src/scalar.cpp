#include "symconn/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "symconn/error.hpp"

namespace symconn {

Scalar::Scalar(long value) {
  if (value != 0) {
    terms_.push_back({0, Rational(value)});
  }
}

Scalar::Scalar(const Rational& value) {
  if (value != 0) {
    terms_.push_back({0, value});
  }
}

Scalar Scalar::monomial(const Rational& coeff, unsigned degree,
                        const std::string& parameter) {
  Scalar s;
  if (coeff != 0) {
    s.terms_.push_back({degree, coeff});
    s.parameter_ = parameter;
  }
  s.normalize();
  return s;
}

Scalar Scalar::parameter(const std::string& name) {
  return monomial(Rational(1), 1, name);
}

Rational Scalar::rational() const {
  if (!is_rational()) {
    throw ParameterError("scalar '" + to_string() +
                         "' depends on a parameter; substitute a value first");
  }
  return terms_.empty() ? Rational(0) : terms_[0].coeff;
}

Rational Scalar::coefficient(unsigned degree) const {
  for (const auto& t : terms_) {
    if (t.degree == degree) {
      return t.coeff;
    }
  }
  return Rational(0);
}

Scalar Scalar::substitute(const Rational& value) const {
  // Horner from the top degree down.
  Rational acc(0);
  unsigned current = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    while (current > it->degree) {
      acc *= value;
      --current;
    }
    acc += it->coeff;
  }
  while (current > 0) {
    acc *= value;
    --current;
  }
  return Scalar(acc);
}

void Scalar::normalize() {
  std::erase_if(terms_, [](const Term& t) { return t.coeff == 0; });
  if (is_rational()) {
    parameter_.clear();
  }
}

std::string Scalar::merge_parameter(const Scalar& a, const Scalar& b) {
  if (a.parameter_.empty()) {
    return b.parameter_;
  }
  if (!b.parameter_.empty() && a.parameter_ != b.parameter_) {
    throw ParameterError("scalars use distinct parameters '" + a.parameter_ +
                         "' and '" + b.parameter_ + "'");
  }
  return a.parameter_;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  if (rhs.terms_.empty()) {
    return *this;
  }
  std::string name = merge_parameter(*this, rhs);
  std::vector<Term> merged;
  merged.reserve(terms_.size() + rhs.terms_.size());
  auto a = terms_.begin();
  auto b = rhs.terms_.begin();
  while (a != terms_.end() || b != rhs.terms_.end()) {
    if (b == rhs.terms_.end() || (a != terms_.end() && a->degree < b->degree)) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->degree < a->degree) {
      merged.push_back(*b++);
    } else {
      Rational sum = a->coeff + b->coeff;
      if (sum != 0) {
        merged.push_back({a->degree, std::move(sum)});
      }
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  parameter_ = std::move(name);
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) { return *this += -rhs; }

Scalar operator*(const Scalar& lhs, const Scalar& rhs) {
  Scalar out;
  if (lhs.terms_.empty() || rhs.terms_.empty()) {
    return out;
  }
  if (lhs.is_rational() && rhs.is_rational()) {
    out.terms_.push_back({0, lhs.terms_[0].coeff * rhs.terms_[0].coeff});
    return out;
  }
  out.parameter_ = Scalar::merge_parameter(lhs, rhs);
  std::vector<Rational> dense(lhs.degree() + rhs.degree() + 1);
  for (const auto& a : lhs.terms_) {
    for (const auto& b : rhs.terms_) {
      dense[a.degree + b.degree] += a.coeff * b.coeff;
    }
  }
  for (unsigned d = 0; d < dense.size(); ++d) {
    if (dense[d] != 0) {
      out.terms_.push_back({d, std::move(dense[d])});
    }
  }
  out.normalize();
  return out;
}

Scalar& Scalar::operator*=(const Scalar& rhs) { return *this = *this * rhs; }

Scalar& Scalar::operator/=(const Scalar& rhs) {
  if (!rhs.is_rational() || rhs.is_zero()) {
    throw ParameterError("division by '" + rhs.to_string() +
                         "': only nonzero rationals are invertible");
  }
  const Rational& d = rhs.terms_[0].coeff;
  for (auto& t : terms_) {
    t.coeff /= d;
  }
  return *this;
}

Scalar operator-(Scalar value) {
  for (auto& t : value.terms_) {
    t.coeff = -t.coeff;
  }
  return value;
}

bool operator==(const Scalar& lhs, const Scalar& rhs) {
  if (lhs.terms_.size() != rhs.terms_.size() ||
      lhs.parameter_ != rhs.parameter_) {
    return false;
  }
  for (std::size_t i = 0; i < lhs.terms_.size(); ++i) {
    if (lhs.terms_[i].degree != rhs.terms_[i].degree ||
        lhs.terms_[i].coeff != rhs.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string Scalar::to_string() const {
  if (terms_.empty()) {
    return "0";
  }
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Rational c = it->coeff;
    if (c < 0) {
      out += '-';
      c = -c;
    } else if (!out.empty()) {
      out += '+';
    }
    if (it->degree == 0) {
      out += c.get_str();
      continue;
    }
    if (c != 1) {
      out += c.get_str();
      out += '*';
    }
    out += parameter_;
    if (it->degree > 1) {
      out += '^';
      out += std::to_string(it->degree);
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const Scalar& value) {
  return os << value.to_string();
}

namespace {

class LiteralParser {
 public:
  explicit LiteralParser(std::string_view text) : text_(text) {}

  Scalar parse_poly() {
    if (text_.empty()) {
      fail("empty scalar literal");
    }
    Scalar sum = parse_term(/*negate=*/false, /*leading=*/true);
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c != '+' && c != '-') {
        fail(std::string("unexpected character '") + c + "'");
      }
      ++pos_;
      sum += parse_term(c == '-', /*leading=*/false);
    }
    return sum;
  }

  Rational parse_plain_rational() {
    Rational r = parse_rational_token();
    if (pos_ != text_.size()) {
      fail("trailing characters after rational");
    }
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(message, pos_);
  }

  bool at_digit() const {
    return pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  bool at_lower() const {
    return pos_ < text_.size() && text_[pos_] >= 'a' && text_[pos_] <= 'z';
  }

  std::string parse_uint() {
    if (!at_digit()) {
      fail("expected digit");
    }
    std::size_t start = pos_;
    while (at_digit()) {
      ++pos_;
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational parse_rational_token() {
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    mpz_class num(parse_uint());
    mpz_class den(1);
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den_pos = pos_;
      den = mpz_class(parse_uint());
      if (den == 0) {
        throw ParseError("zero denominator", den_pos);
      }
    }
    Rational r(num, den);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  std::string parse_param() {
    std::size_t start = pos_;
    if (!at_lower()) {
      fail("expected parameter name");
    }
    while (pos_ < text_.size() &&
           ((text_[pos_] >= 'a' && text_[pos_] <= 'z') ||
            std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    if (!parameter_.empty() && name != parameter_) {
      throw ParseError("second parameter name '" + name + "' (already using '" +
                           parameter_ + "')",
                       start);
    }
    parameter_ = name;
    return name;
  }

  unsigned parse_exponent() {
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      std::size_t start = pos_;
      std::string digits = parse_uint();
      if (digits.size() > 6) {
        throw ParseError("exponent too large", start);
      }
      return static_cast<unsigned>(std::stoul(digits));
    }
    return 1;
  }

  // term := rational ('*' param ('^' uint)?)? | param ('^' uint)?
  // A leading '-' is accepted before a bare parameter in first position so
  // that literals such as "-b+2/3" parse.
  Scalar parse_term(bool negate, bool leading) {
    Rational coeff(1);
    bool has_coeff = false;
    if (at_digit() ||
        (pos_ < text_.size() && text_[pos_] == '-' && pos_ + 1 < text_.size() &&
         std::isdigit(static_cast<unsigned char>(text_[pos_ + 1])))) {
      coeff = parse_rational_token();
      has_coeff = true;
    } else if (leading && pos_ < text_.size() && text_[pos_] == '-') {
      ++pos_;
      coeff = -1;
    }
    if (negate) {
      coeff = -coeff;
    }
    if (has_coeff) {
      if (pos_ < text_.size() && text_[pos_] == '*') {
        ++pos_;
      } else {
        return Scalar(coeff);
      }
    }
    std::string name = parse_param();
    unsigned degree = parse_exponent();
    if (degree == 0) {
      return Scalar(coeff);
    }
    return Scalar::monomial(coeff, degree, name);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::string parameter_;
};

}  // namespace

Scalar parse_scalar(std::string_view text) {
  return LiteralParser(text).parse_poly();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) {
    throw ParseError("empty rational literal", 0);
  }
  return LiteralParser(text).parse_plain_rational();
}

}  // namespace symconn

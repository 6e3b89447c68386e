#include "liederiv/rational.hpp"

#include <cstddef>

#include "liederiv/errors.hpp"

namespace liederiv {

namespace {

// The gmp backend accepts "" (as 0), so integer literals are validated here.
bool is_integer_literal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (start == text.size()) {
    return false;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      return false;
    }
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  const std::string num_text =
      slash == std::string::npos ? text : text.substr(0, slash);
  const std::string den_text =
      slash == std::string::npos ? std::string("1") : text.substr(slash + 1);
  if (!is_integer_literal(num_text) || !is_integer_literal(den_text)) {
    throw InputError("malformed rational literal: " + text);
  }
  const Integer den(den_text);
  if (den == 0) {
    throw InputError("rational literal with zero denominator: " + text);
  }
  // Dividing canonicalizes; the mpq string constructor would not.
  return Rational(Integer(num_text)) / Rational(den);
}

std::string format_rational(const Rational& value) {
  if (denominator(value) == 1) {
    return numerator(value).str();
  }
  return value.str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Rational(0)); }

Vec unit_vec(std::size_t n, std::size_t index) {
  Vec v = zero_vec(n);
  v[index] = 1;
  return v;
}

bool is_zero_vec(const Vec& v) {
  for (const auto& entry : v) {
    if (entry != 0) {
      return false;
    }
  }
  return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] += b[i];
  }
  return out;
}

Vec sub_vec(const Vec& a, const Vec& b) {
  Vec out(a);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] -= b[i];
  }
  return out;
}

Vec scale_vec(const Rational& c, const Vec& v) {
  Vec out(v);
  for (auto& entry : out) {
    entry *= c;
  }
  return out;
}

void axpy(Vec& y, const Rational& c, const Vec& x) {
  if (c == 0) {
    return;
  }
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] += c * x[i];
  }
}

}  // namespace liederiv

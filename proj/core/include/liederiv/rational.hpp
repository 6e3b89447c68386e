#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace liederiv {

/// Exact rational scalar, the ground field of every computation here.
/// Arithmetic results are always in lowest terms with positive denominator.
using Rational = boost::multiprecision::mpq_rational;
using Integer = boost::multiprecision::mpz_int;

/// Dense coordinate vector over Rational.
using Vec = std::vector<Rational>;

/// Parses "p/q" or "p" into a canonical rational. The result is reduced and
/// sign-normalized even when the literal is not ("-7/21" gives -1/3).
/// Throws InputError on malformed text or a zero denominator.
Rational parse_rational(const std::string& text);

/// Formats as "p/q", or just "p" when the denominator is 1. Inverse of
/// parse_rational on canonical output.
std::string format_rational(const Rational& value);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t index);
bool is_zero_vec(const Vec& v);

Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Rational& c, const Vec& v);

/// y += c * x
void axpy(Vec& y, const Rational& c, const Vec& x);

}  // namespace liederiv

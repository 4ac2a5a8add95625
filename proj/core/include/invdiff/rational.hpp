#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace invdiff {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Parses "p", "-p" or "p/q" (q != 0) into a canonical rational.
Rational parse_rational(std::string_view text);

/// Canonical "p" or "p/q" text.
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);

// Component-wise helpers; sizes must agree.
Vector add(const Vector& a, const Vector& b);
Vector sub(const Vector& a, const Vector& b);
Vector scale(const Rational& c, const Vector& v);
void axpy(const Rational& c, const Vector& x, Vector& y);  // y += c*x

}  // namespace invdiff

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace mcluster::algebra {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// "p/q" for non-integers, "p" otherwise.
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed input
/// or a zero denominator.
Rational parse_rational(std::string_view text);

bool is_zero(const Vector& v);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);

}  // namespace mcluster::algebra

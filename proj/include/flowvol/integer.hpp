#pragma once

// Exact integer and rational arithmetic used across the library.

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

namespace flowvol {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when a quotient that a closed formula promises to be integral is not.
class NonIntegralDivision : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// C(n, k) for integer n (possibly negative) and k >= 0; zero when k < 0.
Integer binomial(std::int64_t n, std::int64_t k);

/// ((n multichoose m)) = C(n+m-1, m); ((0,0)) = 1 and ((0,m)) = 0 for m > 0.
Integer multiset_coeff(std::int64_t n, std::int64_t m);

/// Multinomial coefficient total! / prod(parts!); total is the sum of parts.
Integer multinomial(std::span<const std::int64_t> parts);

/// base^exp for exp >= 0 (0^0 = 1).
Integer ipow(const Integer &base, std::int64_t exp);

Integer factorial(std::int64_t n);

/// numerator / denominator, throwing NonIntegralDivision unless exact.
Integer exact_div(const Integer &numerator, const Integer &denominator,
                  const std::string &what = "exact division");

inline std::string to_string(const Integer &x) { return x.get_str(); }

Integer parse_integer(const std::string &text);

/// Narrow to int64, throwing std::overflow_error when out of range.
std::int64_t to_int64(const Integer &x);

} // namespace flowvol

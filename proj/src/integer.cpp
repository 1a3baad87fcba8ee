#include "flowvol/integer.hpp"

#include <limits>

namespace flowvol {

Integer binomial(std::int64_t n, std::int64_t k) {
  if (k < 0) {
    return 0;
  }
  Integer result;
  if (n >= 0) {
    mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
  } else {
    Integer top = n;
    mpz_bin_ui(result.get_mpz_t(), top.get_mpz_t(),
               static_cast<unsigned long>(k));
  }
  return result;
}

Integer multiset_coeff(std::int64_t n, std::int64_t m) {
  if (n < 0 || m < 0) {
    throw std::invalid_argument("multiset_coeff: negative argument");
  }
  if (n == 0) {
    return m == 0 ? 1 : 0;
  }
  return binomial(n + m - 1, m);
}

Integer multinomial(std::span<const std::int64_t> parts) {
  Integer result = 1;
  std::int64_t running = 0;
  for (std::int64_t part : parts) {
    if (part < 0) {
      throw std::invalid_argument("multinomial: negative part");
    }
    running += part;
    result *= binomial(running, part);
  }
  return result;
}

Integer ipow(const Integer &base, std::int64_t exp) {
  if (exp < 0) {
    throw std::domain_error("ipow: negative exponent");
  }
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(),
             static_cast<unsigned long>(exp));
  return result;
}

Integer factorial(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("factorial: negative argument");
  }
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), static_cast<unsigned long>(n));
  return result;
}

Integer exact_div(const Integer &numerator, const Integer &denominator,
                  const std::string &what) {
  if (denominator == 0) {
    throw NonIntegralDivision(what + ": division by zero");
  }
  if (!mpz_divisible_p(numerator.get_mpz_t(), denominator.get_mpz_t())) {
    throw NonIntegralDivision(what + ": " + numerator.get_str() +
                              " is not divisible by " + denominator.get_str());
  }
  Integer quotient;
  mpz_divexact(quotient.get_mpz_t(), numerator.get_mpz_t(),
               denominator.get_mpz_t());
  return quotient;
}

Integer parse_integer(const std::string &text) {
  Integer value;
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) {
    throw std::invalid_argument("not an integer: '" + text + "'");
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("not an integer: '" + text + "'");
    }
  }
  value.set_str(text[0] == '+' ? text.substr(1) : text, 10);
  return value;
}

std::int64_t to_int64(const Integer &x) {
  if (!x.fits_slong_p()) {
    throw std::overflow_error("integer " + x.get_str() +
                              " does not fit in 64 bits");
  }
  return static_cast<std::int64_t>(x.get_si());
}

} // namespace flowvol

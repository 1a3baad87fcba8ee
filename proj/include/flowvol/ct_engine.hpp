#pragma once

// Iterated constant terms CT_{x_n} ... CT_{x_1} of products of a monomial,
// factors (1 - x_i)^{-k} and factors (x_j - x_i)^{-1} with i < j, where
// (x_j - x_i)^{-1} expands as x_j^{-1} * sum_{l>=0} (x_i / x_j)^l.

#include "flowvol/integer.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flowvol {

struct PowFactor {
  int var = 0;          // (1 - x_var)^{-multiplicity}
  int multiplicity = 1;

  friend bool operator==(const PowFactor &, const PowFactor &) = default;
};

struct DiffFactor {
  int low = 0;  // (x_high - x_low)^{-1}
  int high = 0;

  friend bool operator==(const DiffFactor &, const DiffFactor &) = default;
};

struct CTExpression {
  int nvars = 0;
  std::vector<std::int64_t> monomial;  // exponent of x_1..x_nvars
  std::vector<PowFactor> pow_factors;
  std::vector<DiffFactor> diff_factors;

  /// Throws std::invalid_argument on out-of-range indices, low >= high, or
  /// nonpositive multiplicities.
  void validate() const;

  /// Text form `m:<e1,...,en>; p:<i>^<k>,...; d:<i>-<j>,...`.
  std::string to_string() const;
  static CTExpression parse(std::string_view text);

  friend bool operator==(const CTExpression &, const CTExpression &) = default;
};

/// Constraint-propagation evaluator. Each pow factor contributes an
/// exponent a_i >= 0 weighted by a multiset count, each diff factor an
/// exponent l_f >= 0; a term survives iff the exponent of every variable
/// cancels. Variables are fixed in increasing order and states are memoised
/// on the pending exponents of later variables.
Integer evaluate(const CTExpression &e);

class SeriesInstability : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Truncated Laurent expansion with exponents of not-yet-eliminated
/// variables capped at degree_cap in absolute value. Runs at degree_cap and
/// degree_cap + 1 and throws SeriesInstability if the results differ.
Integer evaluate_series_oracle(const CTExpression &e, int degree_cap);

/// Starting cap used by evaluate_series_auto.
int default_degree_cap(const CTExpression &e);

/// evaluate_series_oracle from default_degree_cap, doubling on instability.
Integer evaluate_series_auto(const CTExpression &e, int max_doublings = 8);

/// prod_{i<=n} (1-x_i)^{-k} prod_{i<n} (x_{i+1}-x_i)^{-1}.
CTExpression ps_ct_expression(int n, int k);

/// x_1^{-1} prod_{i<=n} (1-x_i)^{-k} prod_{i<n} (x_n-x_i)^{-1}
/// prod_{i<=n-2} (x_{i+1}-x_i)^{-1}.
CTExpression car_ct_expression(int n, int k);

} // namespace flowvol

#pragma once

// Normalized flow-polytope volumes through the Lidskii formula.

#include "flowvol/graph.hpp"

#include <cstdint>
#include <vector>

namespace flowvol {

/// Weak composition: nonnegative parts with a cached total.
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<std::int64_t> parts);

  const std::vector<std::int64_t> &parts() const { return parts_; }
  std::int64_t total() const { return total_; }
  std::size_t size() const { return parts_.size(); }
  std::int64_t operator[](std::size_t i) const { return parts_[i]; }

  friend bool operator==(const Composition &, const Composition &) = default;

private:
  std::vector<std::int64_t> parts_;
  std::int64_t total_ = 0;
};

/// Dominance order: every prefix sum of s is at least that of t.
bool dominates(const Composition &s, const Composition &t);

/// Compositions of `total` into `length` parts dominating t, in
/// lexicographically decreasing order.
std::vector<Composition> dominant_compositions(std::int64_t total,
                                               std::size_t length,
                                               const Composition &t);

/// One term of the Lidskii sum: coefficient * prod a_i^{exponents_i}, with
/// coefficient = multinomial(m-n; s) * K_{G|n}(s - t).
struct LidskiiTerm {
  Composition exponents;
  Integer coefficient;
};

/// The volume of F_G(a) as a polynomial in a_1..a_n (n = vertex_count - 1);
/// only terms with a nonzero Kostant factor are kept.
std::vector<LidskiiTerm> lidskii_expansion(const DirectedStepGraph &g);

Integer evaluate_expansion(const std::vector<LidskiiTerm> &terms,
                           const NetFlow &a);

/// Normalized volume of F_G(a). The sink entry of a is ignored.
Integer volume(const DirectedStepGraph &g, const NetFlow &a);

/// vol F_G(1, 0, ..., 0) as the single Kostant value
/// K_G(p, 1-outdeg(2), ..., 1-outdeg(n), 0).
Integer volume_unit_flow(const DirectedStepGraph &g);

/// E_G(k) = vol F_{G~(k)}(1, 0, ..., 0).
Integer ehrhart_like(const DirectedStepGraph &g, int k);

struct RationalPolynomial {
  /// Ascending powers of the variable.
  std::vector<Rational> coefficients;

  Rational operator()(const Rational &x) const;
  int degree() const;
};

/// Raised by ehrhart_fit when the interpolant fails to predict E_G(k_max+1).
class ExtrapolationMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Interpolates E_G(k) at k = 1..k_max and checks the prediction at k_max+1.
/// Requires k_max >= vertex_count + 1.
RationalPolynomial ehrhart_fit(const DirectedStepGraph &g, int k_max);

/// Interpolating polynomial through (x_i, y_i), exact.
RationalPolynomial interpolate(const std::vector<Rational> &xs,
                               const std::vector<Rational> &ys);

} // namespace flowvol

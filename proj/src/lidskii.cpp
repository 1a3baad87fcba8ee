#include "flowvol/lidskii.hpp"

#include "flowvol/kostant.hpp"

#include <numeric>

namespace flowvol {

Composition::Composition(std::vector<std::int64_t> parts)
    : parts_(std::move(parts)) {
  for (std::int64_t p : parts_) {
    if (p < 0) {
      throw std::invalid_argument("composition parts must be nonnegative");
    }
    total_ += p;
  }
}

bool dominates(const Composition &s, const Composition &t) {
  if (s.size() != t.size()) {
    throw std::invalid_argument("dominates: length mismatch");
  }
  std::int64_t ps = 0;
  std::int64_t pt = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    ps += s[i];
    pt += t[i];
    if (ps < pt) {
      return false;
    }
  }
  return true;
}

namespace {

void extend_dominant(std::int64_t remaining, std::size_t pos,
                     std::int64_t prefix, const std::vector<std::int64_t> &t_prefix,
                     std::vector<std::int64_t> &parts,
                     std::vector<Composition> &out) {
  const std::size_t length = parts.size();
  if (pos + 1 == length) {
    parts[pos] = remaining;
    if (prefix + remaining >= t_prefix[pos]) {
      out.emplace_back(parts);
    }
    return;
  }
  for (std::int64_t x = remaining; x >= 0; --x) {
    if (prefix + x < t_prefix[pos]) {
      break;
    }
    parts[pos] = x;
    extend_dominant(remaining - x, pos + 1, prefix + x, t_prefix, parts, out);
  }
}

} // namespace

std::vector<Composition> dominant_compositions(std::int64_t total,
                                               std::size_t length,
                                               const Composition &t) {
  if (t.size() != length) {
    throw std::invalid_argument("dominant_compositions: t has wrong length");
  }
  if (total < 0) {
    throw std::invalid_argument("dominant_compositions: negative total");
  }
  std::vector<Composition> out;
  if (length == 0) {
    if (total == 0) {
      out.emplace_back();
    }
    return out;
  }
  std::vector<std::int64_t> t_prefix(length);
  std::partial_sum(t.parts().begin(), t.parts().end(), t_prefix.begin());
  std::vector<std::int64_t> parts(length, 0);
  extend_dominant(total, 0, 0, t_prefix, parts, out);
  return out;
}

std::vector<LidskiiTerm> lidskii_expansion(const DirectedStepGraph &g) {
  const int n = g.vertex_count() - 1;
  if (n < 1) {
    throw std::invalid_argument("lidskii_expansion: graph needs two vertices");
  }
  const auto m = static_cast<std::int64_t>(g.edge_count());
  std::vector<std::int64_t> shift;
  for (int v = 1; v <= n; ++v) {
    shift.push_back(g.outdeg(v) - 1);
  }
  if (shift.front() < 0) {
    throw std::invalid_argument("lidskii_expansion: vertex 1 has no out-edges");
  }
  std::vector<LidskiiTerm> terms;
  if (m - n < 0) {
    return terms;
  }
  const DirectedStepGraph restricted = g.restrict_to(n);
  std::vector<std::int64_t> t_parts(shift.begin(), shift.end());
  std::vector<std::int64_t> t_prefix(t_parts.size());
  std::partial_sum(t_parts.begin(), t_parts.end(), t_prefix.begin());

  // t may hold -1 where outdeg is zero, so it cannot be a Composition; the
  // generator only needs its prefix sums.
  std::vector<Composition> candidates;
  std::vector<std::int64_t> parts(static_cast<std::size_t>(n), 0);
  extend_dominant(m - n, 0, 0, t_prefix, parts, candidates);

  for (const Composition &s : candidates) {
    std::vector<Integer> diff;
    diff.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      diff.emplace_back(s[i] - t_parts[i]);
    }
    Integer k = kpf(restricted, NetFlow(std::move(diff)));
    if (k == 0) {
      continue;
    }
    terms.push_back({s, multinomial(s.parts()) * k});
  }
  return terms;
}

Integer evaluate_expansion(const std::vector<LidskiiTerm> &terms,
                           const NetFlow &a) {
  Integer total = 0;
  for (const LidskiiTerm &term : terms) {
    Integer product = term.coefficient;
    for (std::size_t i = 0; i < term.exponents.size(); ++i) {
      if (i >= a.size()) {
        throw std::invalid_argument("net flow shorter than the expansion");
      }
      product *= ipow(a[i], term.exponents[i]);
    }
    total += product;
  }
  return total;
}

Integer volume(const DirectedStepGraph &g, const NetFlow &a) {
  check_net_flow(g, a);
  return evaluate_expansion(lidskii_expansion(g), a);
}

Integer volume_unit_flow(const DirectedStepGraph &g) {
  const int n = g.vertex_count() - 1;
  if (n < 1) {
    throw std::invalid_argument("volume_unit_flow: graph needs two vertices");
  }
  std::vector<Integer> values(static_cast<std::size_t>(n) + 1, 0);
  std::int64_t p = 1 - n;
  for (int v = 2; v <= n; ++v) {
    const int d = g.outdeg(v);
    p += d;
    values[static_cast<std::size_t>(v - 1)] = 1 - d;
  }
  values[0] = p;
  return kpf(g, NetFlow(std::move(values)));
}

Integer ehrhart_like(const DirectedStepGraph &g, int k) {
  if (k < 1) {
    throw std::invalid_argument("ehrhart_like: k must be at least 1");
  }
  return volume_unit_flow(augment(g, k));
}

Rational RationalPolynomial::operator()(const Rational &x) const {
  Rational value = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    value = value * x + *it;
  }
  return value;
}

int RationalPolynomial::degree() const {
  for (std::size_t i = coefficients.size(); i-- > 0;) {
    if (coefficients[i] != 0) {
      return static_cast<int>(i);
    }
  }
  return -1;
}

RationalPolynomial interpolate(const std::vector<Rational> &xs,
                               const std::vector<Rational> &ys) {
  if (xs.size() != ys.size() || xs.empty()) {
    throw std::invalid_argument("interpolate: need matching nonempty samples");
  }
  const std::size_t count = xs.size();
  // Newton divided differences, then expand the Newton form.
  std::vector<Rational> dd = ys;
  for (std::size_t level = 1; level < count; ++level) {
    for (std::size_t i = count - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
    }
  }
  std::vector<Rational> coeffs(count, 0);
  std::vector<Rational> basis{1};
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      coeffs[j] += dd[i] * basis[j];
    }
    std::vector<Rational> next(basis.size() + 1, 0);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      next[j + 1] += basis[j];
      next[j] -= basis[j] * xs[i];
    }
    basis = std::move(next);
  }
  for (Rational &c : coeffs) {
    c.canonicalize();
  }
  return RationalPolynomial{std::move(coeffs)};
}

RationalPolynomial ehrhart_fit(const DirectedStepGraph &g, int k_max) {
  if (k_max < g.vertex_count() + 1) {
    throw std::invalid_argument("ehrhart_fit: k_max must be at least " +
                                std::to_string(g.vertex_count() + 1));
  }
  std::vector<Rational> xs;
  std::vector<Rational> ys;
  for (int k = 1; k <= k_max; ++k) {
    xs.emplace_back(k);
    ys.emplace_back(ehrhart_like(g, k));
  }
  RationalPolynomial poly = interpolate(xs, ys);
  const Integer next = ehrhart_like(g, k_max + 1);
  if (poly(Rational(k_max + 1)) != Rational(next)) {
    throw ExtrapolationMismatch(
        "ehrhart_fit: interpolant through k=1.." + std::to_string(k_max) +
        " predicts " + poly(Rational(k_max + 1)).get_str() + " at k=" +
        std::to_string(k_max + 1) + " but E_G gives " + next.get_str());
  }
  return poly;
}

} // namespace flowvol

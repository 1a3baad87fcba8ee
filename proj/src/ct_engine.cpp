#include "flowvol/ct_engine.hpp"

#include "flowvol/graph.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace flowvol {

void CTExpression::validate() const {
  if (nvars < 1) {
    throw std::invalid_argument("CT expression needs at least one variable");
  }
  if (monomial.size() != static_cast<std::size_t>(nvars)) {
    throw std::invalid_argument("monomial has " +
                                std::to_string(monomial.size()) +
                                " exponents for " + std::to_string(nvars) +
                                " variables");
  }
  for (const PowFactor &p : pow_factors) {
    if (p.var < 1 || p.var > nvars || p.multiplicity < 1) {
      throw std::invalid_argument("invalid pow factor " +
                                  std::to_string(p.var) + "^" +
                                  std::to_string(p.multiplicity));
    }
  }
  for (const DiffFactor &d : diff_factors) {
    if (d.low < 1 || d.high > nvars || d.low >= d.high) {
      throw std::invalid_argument("invalid diff factor " +
                                  std::to_string(d.low) + "-" +
                                  std::to_string(d.high));
    }
  }
}

std::string CTExpression::to_string() const {
  std::ostringstream out;
  out << "m:";
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    out << (i ? "," : "") << monomial[i];
  }
  out << "; p:";
  for (std::size_t i = 0; i < pow_factors.size(); ++i) {
    out << (i ? "," : "") << pow_factors[i].var << '^'
        << pow_factors[i].multiplicity;
  }
  out << "; d:";
  for (std::size_t i = 0; i < diff_factors.size(); ++i) {
    out << (i ? "," : "") << diff_factors[i].low << '-' << diff_factors[i].high;
  }
  return out.str();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') {
    s.remove_prefix(1);
  }
  while (!s.empty() && s.back() == ' ') {
    s.remove_suffix(1);
  }
  return s;
}

std::pair<int, int> parse_pair(std::string_view item, char sep,
                               std::string_view what) {
  std::size_t pos = item.find(sep);
  if (pos == std::string_view::npos) {
    throw ParseError("invalid " + std::string(what) + " '" + std::string(item) +
                     "'");
  }
  return {parse_int(item.substr(0, pos), what),
          parse_int(item.substr(pos + 1), what)};
}

} // namespace

CTExpression CTExpression::parse(std::string_view text) {
  CTExpression e;
  bool seen_m = false;
  bool seen_p = false;
  bool seen_d = false;
  for (const std::string &raw : split(text, ';')) {
    std::string_view section = trim(raw);
    if (section.size() < 2 || section[1] != ':') {
      throw ParseError("invalid CT expression section '" + std::string(section) +
                       "'");
    }
    std::string_view body = section.substr(2);
    std::vector<std::string> items;
    if (!body.empty()) {
      items = split(body, ',');
    }
    switch (section[0]) {
    case 'm':
      if (seen_m) {
        throw ParseError("duplicate m: section");
      }
      seen_m = true;
      for (const std::string &item : items) {
        e.monomial.push_back(parse_int(item, "monomial exponent"));
      }
      break;
    case 'p':
      if (seen_p) {
        throw ParseError("duplicate p: section");
      }
      seen_p = true;
      for (const std::string &item : items) {
        auto [var, mult] = parse_pair(item, '^', "pow factor");
        e.pow_factors.push_back({var, mult});
      }
      break;
    case 'd':
      if (seen_d) {
        throw ParseError("duplicate d: section");
      }
      seen_d = true;
      for (const std::string &item : items) {
        auto [low, high] = parse_pair(item, '-', "diff factor");
        e.diff_factors.push_back({low, high});
      }
      break;
    default:
      throw ParseError("unknown CT expression section '" +
                       std::string(section) + "'");
    }
  }
  if (!seen_m) {
    throw ParseError("CT expression is missing the m: section");
  }
  e.nvars = static_cast<int>(e.monomial.size());
  try {
    e.validate();
  } catch (const std::invalid_argument &err) {
    throw ParseError(err.what());
  }
  return e;
}

namespace {

class ConstraintCounter {
public:
  explicit ConstraintCounter(const CTExpression &e)
      : n_(e.nvars), monomial_(e.monomial),
        pow_total_(static_cast<std::size_t>(n_) + 1, 0),
        lows_(static_cast<std::size_t>(n_) + 1),
        memo_(static_cast<std::size_t>(n_) + 1) {
    for (const PowFactor &p : e.pow_factors) {
      pow_total_[static_cast<std::size_t>(p.var)] += p.multiplicity;
    }
    for (const DiffFactor &d : e.diff_factors) {
      lows_[static_cast<std::size_t>(d.low)].push_back(d.high);
    }
  }

  Integer run() {
    std::vector<std::int64_t> pending(static_cast<std::size_t>(n_) + 1, 0);
    return count(1, pending);
  }

private:
  // pending[j] = sum of (l_f + 1) over fixed diff factors with high(f) = j.
  Integer count(int i, std::vector<std::int64_t> &pending) {
    if (i > n_) {
      return 1;
    }
    const std::int64_t budget = pending[static_cast<std::size_t>(i)] -
                                monomial_[static_cast<std::size_t>(i - 1)];
    if (budget < 0) {
      return 0;
    }
    std::vector<std::int64_t> key(pending.begin() + i, pending.end());
    auto &table = memo_[static_cast<std::size_t>(i)];
    if (auto it = table.find(key); it != table.end()) {
      return it->second;
    }
    Integer total = 0;
    choose_diffs(i, 0, budget, pending, total);
    table.emplace(std::move(key), total);
    return total;
  }

  // Splits the budget of variable i between the diff factors with low = i
  // and the pow exponent a_i, which takes whatever is left.
  void choose_diffs(int i, std::size_t idx, std::int64_t remaining,
                    std::vector<std::int64_t> &pending, Integer &total) {
    const auto &highs = lows_[static_cast<std::size_t>(i)];
    if (idx == highs.size()) {
      Integer weight =
          multiset_coeff(pow_total_[static_cast<std::size_t>(i)], remaining);
      if (weight != 0) {
        total += weight * count(i + 1, pending);
      }
      return;
    }
    auto &slot = pending[static_cast<std::size_t>(highs[idx])];
    for (std::int64_t l = 0; l <= remaining; ++l) {
      slot += l + 1;
      choose_diffs(i, idx + 1, remaining - l, pending, total);
      slot -= l + 1;
    }
  }

  int n_;
  std::vector<std::int64_t> monomial_;
  std::vector<std::int64_t> pow_total_;
  std::vector<std::vector<int>> lows_;
  std::vector<std::map<std::vector<std::int64_t>, Integer>> memo_;
};

using Exponents = std::vector<std::int64_t>;
using Laurent = std::map<Exponents, Integer>;

// Multiplies by a series in x_var given as (exponent shift, coefficient)
// pairs, then drops terms that can no longer reach x_var^0 or that exceed
// the cap in a later variable.
Laurent multiply(const Laurent &poly,
                 const std::vector<std::pair<Exponents, Integer>> &series,
                 std::size_t var, int cap) {
  Laurent out;
  for (const auto &[exps, coeff] : poly) {
    for (const auto &[shift, c] : series) {
      Exponents next = exps;
      for (std::size_t j = 0; j < next.size(); ++j) {
        next[j] += shift[j];
      }
      if (next[var] > 0) {
        continue;
      }
      bool keep = true;
      for (std::size_t j = var + 1; j < next.size(); ++j) {
        if (next[j] > cap || next[j] < -cap) {
          keep = false;
          break;
        }
      }
      if (keep) {
        out[next] += coeff * c;
      }
    }
  }
  std::erase_if(out, [](const auto &kv) { return kv.second == 0; });
  return out;
}

Integer series_once(const CTExpression &e, int cap) {
  const auto n = static_cast<std::size_t>(e.nvars);
  Laurent poly;
  {
    Exponents start(e.monomial.begin(), e.monomial.end());
    bool in_range = std::all_of(start.begin(), start.end(), [cap](auto x) {
      return x <= cap && x >= -cap;
    });
    if (in_range) {
      poly[start] = 1;
    }
  }
  for (std::size_t var = 0; var < n && !poly.empty(); ++var) {
    std::int64_t depth = 0;
    for (const auto &[exps, coeff] : poly) {
      depth = std::max(depth, -exps[var]);
    }
    int pow_mult = 0;
    for (const PowFactor &p : e.pow_factors) {
      if (static_cast<std::size_t>(p.var - 1) == var) {
        pow_mult += p.multiplicity;
      }
    }
    if (pow_mult > 0) {
      std::vector<std::pair<Exponents, Integer>> series;
      for (std::int64_t a = 0; a <= depth; ++a) {
        Exponents shift(n, 0);
        shift[var] = a;
        series.emplace_back(std::move(shift), multiset_coeff(pow_mult, a));
      }
      poly = multiply(poly, series, var, cap);
    }
    for (const DiffFactor &d : e.diff_factors) {
      if (static_cast<std::size_t>(d.low - 1) != var) {
        continue;
      }
      std::vector<std::pair<Exponents, Integer>> series;
      for (std::int64_t l = 0; l <= depth; ++l) {
        Exponents shift(n, 0);
        shift[var] = l;
        shift[static_cast<std::size_t>(d.high - 1)] = -l - 1;
        series.emplace_back(std::move(shift), Integer(1));
      }
      poly = multiply(poly, series, var, cap);
    }
    Laurent reduced;
    for (auto &[exps, coeff] : poly) {
      if (exps[var] == 0) {
        reduced.emplace(exps, coeff);
      }
    }
    poly = std::move(reduced);
  }
  auto it = poly.find(Exponents(n, 0));
  return it == poly.end() ? Integer(0) : it->second;
}

} // namespace

Integer evaluate(const CTExpression &e) {
  e.validate();
  return ConstraintCounter(e).run();
}

Integer evaluate_series_oracle(const CTExpression &e, int degree_cap) {
  e.validate();
  if (degree_cap < 1) {
    throw std::invalid_argument("degree_cap must be at least 1");
  }
  Integer low = series_once(e, degree_cap);
  Integer high = series_once(e, degree_cap + 1);
  if (low != high) {
    throw SeriesInstability("series oracle unstable at cap " +
                            std::to_string(degree_cap) + ": " + low.get_str() +
                            " vs " + high.get_str());
  }
  return low;
}

int default_degree_cap(const CTExpression &e) {
  int total = e.nvars;
  for (const PowFactor &p : e.pow_factors) {
    total += p.multiplicity;
  }
  std::int64_t widest = 0;
  for (std::int64_t x : e.monomial) {
    widest = std::max(widest, x < 0 ? -x : x);
  }
  return 2 * (total + static_cast<int>(widest));
}

Integer evaluate_series_auto(const CTExpression &e, int max_doublings) {
  int cap = default_degree_cap(e);
  for (int attempt = 0;; ++attempt) {
    try {
      return evaluate_series_oracle(e, cap);
    } catch (const SeriesInstability &) {
      if (attempt >= max_doublings) {
        throw;
      }
      cap *= 2;
    }
  }
}

CTExpression ps_ct_expression(int n, int k) {
  if (n < 2 || k < 1) {
    throw std::invalid_argument("ps_ct_expression needs n >= 2 and k >= 1");
  }
  CTExpression e;
  e.nvars = n;
  e.monomial.assign(static_cast<std::size_t>(n), 0);
  for (int i = 1; i <= n; ++i) {
    e.pow_factors.push_back({i, k});
  }
  for (int i = 1; i <= n - 1; ++i) {
    e.diff_factors.push_back({i, i + 1});
  }
  return e;
}

CTExpression car_ct_expression(int n, int k) {
  if (n < 2 || k < 1) {
    throw std::invalid_argument("car_ct_expression needs n >= 2 and k >= 1");
  }
  CTExpression e;
  e.nvars = n;
  e.monomial.assign(static_cast<std::size_t>(n), 0);
  e.monomial[0] = -1;
  for (int i = 1; i <= n; ++i) {
    e.pow_factors.push_back({i, k});
  }
  for (int i = 1; i <= n - 1; ++i) {
    e.diff_factors.push_back({i, n});
  }
  for (int i = 1; i <= n - 2; ++i) {
    e.diff_factors.push_back({i, i + 1});
  }
  return e;
}

} // namespace flowvol

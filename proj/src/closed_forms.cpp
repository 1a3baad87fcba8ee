#include "flowvol/closed_forms.hpp"

#include "flowvol/dyck.hpp"
#include "flowvol/kostant.hpp"
#include "flowvol/lidskii.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flowvol {
namespace {

void require(bool ok, const std::string &message) {
  if (!ok) {
    throw std::invalid_argument(message);
  }
}

Integer multiset_product(int n, const std::vector<int> &composition) {
  Integer product = 1;
  for (int part : composition) {
    require(part >= 0, "composition parts must be nonnegative");
    product *= multiset_coeff(n, part);
  }
  return product;
}

int total(const std::vector<int> &parts) {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

Composition ones(std::size_t length, std::int64_t first = 1) {
  std::vector<std::int64_t> parts(length, 1);
  if (length > 0) {
    parts[0] = first;
  }
  return Composition(std::move(parts));
}

std::vector<Integer> leading(std::initializer_list<std::pair<Integer, int>> runs) {
  std::vector<Integer> out;
  for (const auto &[value, count] : runs) {
    require(count >= 0, "negative run length in net flow shape");
    out.insert(out.end(), static_cast<std::size_t>(count), value);
  }
  return out;
}

bool is_ps_id(std::string_view id) {
  const auto &ids = ps_volume_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

bool is_car_id(std::string_view id) {
  const auto &ids = car_volume_ids();
  return std::find(ids.begin(), ids.end(), id) != ids.end();
}

void check_range(std::string_view id, const VolumeParams &p) {
  require(p.n >= volume_min_n(id),
          std::string(id) + " needs n >= " + std::to_string(volume_min_n(id)));
  if (id == "EQ3" || id == "EQ3-ALT") {
    require(p.m >= 1 && p.n >= p.m + 2, "EQ3 needs 1 <= m <= n-2");
  }
}

Integer eq3(const VolumeParams &p, int upper_shift) {
  const Integer &a = p.a, &b = p.b, &c = p.c;
  Integer sum = 0;
  for (int j = 0; j <= p.m; ++j) {
    sum += binomial(p.n - upper_shift, j) * ipow(c - (p.m + 1 - j) * b, j) *
           ipow(a + (p.n - 1 - j) * b, p.n - j - 2);
  }
  return a * sum;
}

} // namespace

Integer catalan(std::int64_t j) {
  require(j >= 0, "catalan index must be nonnegative");
  return exact_div(binomial(2 * j, j), Integer(j + 1), "Catalan number");
}

Integer ehrhart_ps_closed(int n, int k) {
  require(n >= 2 && k >= 1, "ehrhart_ps_closed needs n >= 2, k >= 1");
  return exact_div(binomial(static_cast<std::int64_t>(k + 1) * n - 2, n),
                   Integer(static_cast<long>(k) * n - 1), "E_PS closed form");
}

Integer ehrhart_car_closed(int n, int k) {
  require(n >= 3 && k >= 1, "ehrhart_car_closed needs n >= 3, k >= 1");
  const std::int64_t kn = static_cast<std::int64_t>(k) * n;
  return exact_div(binomial(kn + 2 * n - 5, n - 1) * binomial(n + k - 3, k - 1),
                   Integer(static_cast<long>(kn + n - 3)), "E_Car closed form");
}

Integer ld_count_closed(int n, int k, const std::vector<int> &composition) {
  require(n >= 0 && k >= 1, "ld_count_closed needs n >= 0, k >= 1");
  require(composition.size() == static_cast<std::size_t>(k) + 1,
          "composition must have k+1 parts");
  require(total(composition) == n, "composition must sum to n");
  return exact_div(multiset_product(n + 1, composition), Integer(n + 1),
                   "labeled Dyck count");
}

Integer ld_count_by_zeros(int n, int k, int d) {
  require(n >= 0 && k >= 1 && d >= 0 && d <= n,
          "ld_count_by_zeros needs 0 <= d <= n, k >= 1");
  return exact_div(multiset_coeff(n + 1, d) *
                       multiset_coeff(static_cast<std::int64_t>(k) * (n + 1), n - d),
                   Integer(n + 1), "labeled Dyck count by zeros");
}

Integer dld_count_closed(int n, int k) {
  require(n >= 1 && k >= 1, "dld_count_closed needs n >= 1, k >= 1");
  const std::int64_t kk = k;
  return exact_div(binomial(kk * n + kk + 2 * n - 3, n) * binomial(n + kk - 2, kk - 1),
                   Integer(static_cast<long>(kk * (n + 1) + n - 2)),
                   "doubly labeled Dyck count");
}

Integer dld_count_via_sum(int n, int k) {
  require(n >= 0 && k >= 1, "dld_count_via_sum needs n >= 0, k >= 1");
  Integer sum = 0;
  for (int d = 0; d <= n; ++d) {
    sum += ld_count_by_zeros(n, k, d) * multiset_coeff(k, n + d);
  }
  return sum;
}

Integer prefix_count_closed(int n, int i, int k,
                            const std::vector<int> &composition) {
  require(n >= 0 && i >= 0 && i <= n && k >= 1,
          "prefix_count_closed needs 0 <= i <= n, k >= 1");
  require(composition.size() == static_cast<std::size_t>(k) + 1,
          "composition must have k+1 parts");
  require(total(composition) == n - i, "composition must sum to n - i");
  return exact_div((i + 1) * multiset_product(n + 1, composition),
                   Integer(n + 1), "Dyck prefix count");
}

Integer coeff_B(int n, int k, int m) {
  require(1 <= k && k <= m && m <= n, "coeff_B needs 1 <= k <= m <= n");
  if (m == n) {
    return 1;
  }
  return (m - k + 1) * ipow(Integer(n - k + 1), n - m - 1);
}

Integer coeff_B_sum(int n, int k, int m) {
  require(1 <= k && k <= m && m <= n, "coeff_B_sum needs 1 <= k <= m <= n");
  const auto length = static_cast<std::size_t>(n - k + 1);
  Integer sum = 0;
  for (const Composition &s : dominant_compositions(n, length, ones(length, k))) {
    if (s[0] != m) {
      continue;
    }
    sum += multinomial(std::span(s.parts()).subspan(1));
  }
  return sum;
}

Integer coeff_A_km(int k, int m, const std::vector<Integer> &values) {
  require(k >= 1 && m >= 0, "coeff_A_km needs k >= 1, m >= 0");
  require(values.size() == static_cast<std::size_t>(k),
          "coeff_A_km needs k values");
  Integer sum = 0;
  const auto length = static_cast<std::size_t>(k);
  for (const Composition &s : dominant_compositions(m, length, ones(length))) {
    Integer term = multinomial(s.parts());
    for (std::size_t i = 0; i < length; ++i) {
      term *= ipow(values[i], s[i]);
    }
    sum += term;
  }
  return sum;
}

Integer coeff_A2_closed(int m, const Integer &a, const Integer &b) {
  require(m >= 0, "m must be nonnegative");
  if (m < 2) {
    return 0;
  }
  return ipow(a + b, m) - ipow(b, m);
}

Integer coeff_A3_printed(int m, const Integer &a, const Integer &b,
                         const Integer &c) {
  require(m >= 1, "printed A_{3,m} needs m >= 1");
  return ipow(a + b + c, m) - ipow(b + c, m) - a * ipow(c, m - 1);
}

Integer coeff_A3_corrected(int m, const Integer &a, const Integer &b,
                           const Integer &c) {
  require(m >= 0, "m must be nonnegative");
  if (m < 3) {
    return 0;
  }
  return ipow(a + b + c, m) - ipow(b + c, m) - m * a * ipow(c, m - 1);
}

Integer coeff_A_pqr(int n, int p, int q, int r) {
  require(p >= 1 && q >= 1 && r >= 1 && p + q + r == n,
          "coeff_A_pqr needs p, q, r >= 1 and p+q+r = n");
  const Integer base(n - 1);
  return (p + q - 1) * binomial(n + p - 2, n - 1) * ipow(base, r - 1) -
         binomial(n + p - 2, n) * ipow(base, r);
}

namespace {

// Calls visit(s_3..s_n) for every composition with (p, q, s) >= (1^n).
template <typename Visit>
void for_each_tail(int n, int p, int q, int r, Visit visit) {
  require(p >= 0 && q >= 0 && r >= 0 && p + q + r == n && n >= 2,
          "A(p,q,r) needs p+q+r = n >= 2");
  const auto length = static_cast<std::size_t>(n);
  for (const Composition &s : dominant_compositions(n, length, ones(length))) {
    if (s[0] == p && s[1] == q) {
      visit(std::vector<std::int64_t>(s.parts().begin() + 2, s.parts().end()));
    }
  }
}

} // namespace

Integer coeff_A_pqr_kostant(int n, int p, int q, int r) {
  const DirectedStepGraph restricted = build_car(n + 1).restrict_to(n + 1);
  Integer sum = 0;
  for_each_tail(n, p, q, r, [&](const std::vector<std::int64_t> &tail) {
    std::vector<Integer> flow{Integer(p - 1), Integer(q - 1)};
    for (std::int64_t s : tail) {
      flow.emplace_back(static_cast<long>(s - 1));
    }
    flow.emplace_back(0);
    sum += multinomial(tail) * kpf(restricted, NetFlow(std::move(flow)));
  });
  return sum;
}

Integer coeff_A_pqr_dyck(int n, int p, int q, int r) {
  Integer sum = 0;
  for_each_tail(n, p, q, r, [&](const std::vector<std::int64_t> &tail) {
    std::vector<int> mins{q};
    for (std::int64_t s : tail) {
      mins.push_back(static_cast<int>(s));
    }
    sum += multinomial(tail) * enumerate_min_constrained(n - 1, mins);
  });
  return sum;
}

const std::vector<std::string> &ps_volume_ids() {
  static const std::vector<std::string> ids{"EQ1", "EQ2", "EQ3", "EQ3-ALT",
                                            "EQ7", "EQ8", "P53", "P55"};
  return ids;
}

const std::vector<std::string> &car_volume_ids() {
  static const std::vector<std::string> ids{"EQ5",    "EQ5-CORR",    "EQ6",
                                            "EQCONJ", "EQCONJ-CORR", "P58"};
  return ids;
}

int volume_min_n(std::string_view id) {
  if (id == "P53") return 1;
  if (id == "EQ1" || id == "EQ7" || id == "P55" || id == "P58") return 2;
  if (id == "EQ3" || id == "EQ3-ALT") return 3;
  if (is_ps_id(id) || is_car_id(id)) return 3;
  throw std::invalid_argument("unknown identity id: " + std::string(id));
}

Integer ps_volume_closed(std::string_view id, const VolumeParams &p) {
  require(is_ps_id(id), "unknown Pitman-Stanley identity: " + std::string(id));
  check_range(id, p);
  const int n = p.n;
  const Integer &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  if (id == "EQ1") {
    return a * ipow(a + (n - 1) * b, n - 2);
  }
  if (id == "EQ2") {
    return a * ipow(a + (n - 1) * b, n - 2) +
           (n - 1) * a * (c - b) * ipow(a + (n - 2) * b, n - 3);
  }
  if (id == "EQ3") {
    return eq3(p, 0);
  }
  if (id == "EQ3-ALT") {
    return eq3(p, 1);
  }
  if (id == "EQ7") {
    return (a + b - c) * ipow(a + b + (n - 2) * c, n - 2) +
           (c - b) * ipow(b + (n - 2) * c, n - 2);
  }
  if (id == "EQ8") {
    return (a + b + c - 2 * d) * ipow(a + b + c + (n - 3) * d, n - 2) -
           (b + c - 2 * d) * ipow(b + c + (n - 3) * d, n - 2) -
           (n - 1) * a * (c - d) * ipow(c + (n - 3) * d, n - 3);
  }
  if (id == "P53") {
    return (a + b - c) * ipow(a + b + (n - 1) * c, n - 1) -
           (b - c) * ipow(b + (n - 1) * c, n - 1);
  }
  // P55
  return (a + b + c - 2 * d) * ipow(a + b + c + (n - 2) * d, n - 1) -
         (b + c - 2 * d) * ipow(b + c + (n - 2) * d, n - 1) -
         n * a * (c - d) * ipow(c + (n - 2) * d, n - 2);
}

Integer car_volume_closed(std::string_view id, const VolumeParams &p) {
  require(is_car_id(id), "unknown caracol identity: " + std::string(id));
  check_range(id, p);
  const int n = p.n;
  const Integer &a = p.a, &b = p.b, &c = p.c;
  if (id == "EQ5") {
    return catalan(n - 2) * ipow(a, n) * ipow(Integer(n), n - 2);
  }
  if (id == "EQ5-CORR") {
    return catalan(n - 2) * ipow(a, 2 * n - 4) * ipow(Integer(n), n - 2);
  }
  if (id == "EQ6") {
    return catalan(n - 2) * ipow(a, n - 2) * ipow(a + (n - 1) * b, n - 2);
  }
  if (id == "EQCONJ" || id == "EQCONJ-CORR") {
    const int lead = id == "EQCONJ" ? n - 1 : n - 2;
    return catalan(n - 2) * ipow(a, lead) * (a + b * (n - 1)) *
           ipow(a + b + c * (n - 2), n - 3);
  }
  // P58
  return catalan(n - 1) * ipow(a, n - 1) * (a + n * b) *
         ipow(a + b + (n - 1) * c, n - 2);
}

VolumeInstance ps_volume_instance(std::string_view id, const VolumeParams &p) {
  require(is_ps_id(id), "unknown Pitman-Stanley identity: " + std::string(id));
  check_range(id, p);
  const int n = p.n;
  const Integer &a = p.a, &b = p.b, &c = p.c, &d = p.d;
  if (id == "P53") {
    return {build_ps(n + 1), NetFlow::with_implied_sink(leading({{a, 1}, {b, 1}, {c, n - 1}}))};
  }
  if (id == "P55") {
    return {build_ps(n + 1),
            NetFlow::with_implied_sink(leading({{a, 1}, {b, 1}, {c, 1}, {d, n - 2}}))};
  }
  std::vector<Integer> values;
  if (id == "EQ1") {
    values = leading({{a, 1}, {b, n - 2}, {d, 1}});
  } else if (id == "EQ2") {
    values = leading({{a, 1}, {b, n - 3}, {c, 1}, {d, 1}});
  } else if (id == "EQ3" || id == "EQ3-ALT") {
    values = leading({{a, 1}, {b, n - p.m - 2}, {c, 1}, {Integer(0), p.m - 1}, {d, 1}});
  } else if (id == "EQ7") {
    values = leading({{a, 1}, {b, 1}, {c, n - 2}});
  } else {
    values = leading({{a, 1}, {b, 1}, {c, 1}, {d, n - 3}});
  }
  return {build_ps(n), NetFlow::with_implied_sink(std::move(values))};
}

VolumeInstance car_volume_instance(std::string_view id, const VolumeParams &p) {
  require(is_car_id(id), "unknown caracol identity: " + std::string(id));
  check_range(id, p);
  const int n = p.n;
  const Integer &a = p.a, &b = p.b, &c = p.c;
  if (id == "P58") {
    return {build_car(n + 1),
            NetFlow::with_implied_sink(leading({{a, 1}, {b, 1}, {c, n - 1}}))};
  }
  std::vector<Integer> values;
  if (id == "EQ5" || id == "EQ5-CORR") {
    values = leading({{a, n}});
  } else if (id == "EQ6") {
    values = leading({{a, 1}, {b, n - 1}});
  } else {
    values = leading({{a, 1}, {b, 1}, {c, n - 2}});
  }
  return {build_car(n), NetFlow::with_implied_sink(std::move(values))};
}

} // namespace flowvol

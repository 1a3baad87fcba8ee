#include "flowvol/verify.hpp"

#include "flowvol/closed_forms.hpp"
#include "flowvol/ct_engine.hpp"
#include "flowvol/cyclic.hpp"
#include "flowvol/dyck.hpp"
#include "flowvol/lidskii.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace flowvol {
namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;
using Task = std::function<CaseRecord()>;

CaseRecord compare(std::string id, Params params, const Integer &expected,
                   const Integer &actual, bool known_discrepancy = false) {
  CaseStatus status = CaseStatus::pass;
  if (expected != actual) {
    status = known_discrepancy ? CaseStatus::reported : CaseStatus::fail;
  }
  return {std::move(id), std::move(params), expected.get_str(), actual.get_str(),
          status};
}

// Runs body; any exception becomes a FAIL carrying the message.
Task guarded(std::string id, Params params, std::function<CaseRecord()> body) {
  return [id = std::move(id), params = std::move(params), body = std::move(body)] {
    try {
      return body();
    } catch (const std::exception &e) {
      return CaseRecord{id, params, "", std::string("error: ") + e.what(),
                        CaseStatus::fail};
    }
  };
}

// Agreement of several named paths; actual is the common value, or every
// path's value when they differ.
CaseRecord agreement(std::string id, Params params, const Integer &expected,
                     const std::vector<std::pair<std::string, Integer>> &paths) {
  const bool agree = std::all_of(paths.begin(), paths.end(), [&](const auto &p) {
    return p.second == expected;
  });
  std::string actual;
  if (agree) {
    actual = expected.get_str();
  } else {
    for (const auto &[name, value] : paths) {
      actual += (actual.empty() ? "" : " ") + name + "=" + value.get_str();
    }
  }
  return {std::move(id), std::move(params), expected.get_str(), actual,
          agree ? CaseStatus::pass : CaseStatus::fail};
}

void check_bound(int value, int low, const char *name) {
  if (value < low) {
    throw std::invalid_argument(std::string(name) + " must be at least " +
                                std::to_string(low));
  }
}

std::vector<Task> ps_ehrhart_tasks(const VerifyOptions &o) {
  const int max_n = o.max_n.value_or(6);
  const int max_k = o.max_k.value_or(4);
  check_bound(max_n, 2, "--max-n");
  check_bound(max_k, 1, "--max-k");
  std::vector<Task> tasks;
  for (int n = 2; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      Params params{{"n", n}, {"k", k}};
      tasks.push_back(guarded("E-PS", params, [=] {
        return agreement(
            "E-PS", params, ehrhart_ps_closed(n, k),
            {{"kpf", ehrhart_like(build_ps(n), k)},
             {"ct", evaluate(ps_ct_expression(n, k))},
             {"enum", count_ld(n - 1, k, LabelFilter::zeros(0))}});
      }));
    }
  }
  return tasks;
}

std::vector<Task> car_ehrhart_tasks(const VerifyOptions &o) {
  const int max_n = o.max_n.value_or(6);
  const int max_k = o.max_k.value_or(3);
  check_bound(max_n, 3, "--max-n");
  check_bound(max_k, 1, "--max-k");
  std::vector<Task> tasks;
  for (int n = 3; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      Params params{{"n", n}, {"k", k}};
      tasks.push_back(guarded("E-CAR", params, [=] {
        return agreement(
            "E-CAR", params, ehrhart_car_closed(n, k),
            {{"kpf", ehrhart_like(build_car(n), k)},
             {"ct", evaluate(car_ct_expression(n - 1, k))},
             {"enum", count_dld(n - 2, k)},
             {"dld-closed", dld_count_closed(n - 1, k)}});
      }));
      // The stated n-variable constant term; known not to match.
      tasks.push_back(guarded("CT2-PRINTED", params, [=] {
        return compare("CT2-PRINTED", params, ehrhart_car_closed(n, k),
                       evaluate(car_ct_expression(n, k)), true);
      }));
    }
  }
  return tasks;
}

std::vector<Task> dyck_tasks(const VerifyOptions &o) {
  const int max_n = o.max_n.value_or(6);
  const int max_k = o.max_k.value_or(3);
  check_bound(max_n, 0, "--max-n");
  check_bound(max_k, 1, "--max-k");
  std::vector<Task> tasks;
  for (int n = 0; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      for (const auto &comp : weak_compositions(n, k + 1)) {
        Params params{{"n", n}, {"k", k}};
        for (std::size_t j = 0; j < comp.size(); ++j) {
          params.emplace_back("a" + std::to_string(j), comp[j]);
        }
        tasks.push_back(guarded("LD-COMP", params, [=] {
          return compare("LD-COMP", params, ld_count_closed(n, k, comp),
                         count_ld(n, k, LabelFilter::composition(comp)));
        }));
      }
      for (int d = 0; d <= n; ++d) {
        Params params{{"n", n}, {"k", k}, {"d", d}};
        tasks.push_back(guarded("LD-ZEROS", params, [=] {
          return compare("LD-ZEROS", params, ld_count_by_zeros(n, k, d),
                         count_ld(n, k, LabelFilter::zeros(d)));
        }));
      }
      Params params{{"n", n}, {"k", k}};
      tasks.push_back(guarded("DLD", params, [=] {
        return compare("DLD", params, dld_count_closed(n + 1, k), count_dld(n, k));
      }));
      tasks.push_back(guarded("DLD-SUM", params, [=] {
        return compare("DLD-SUM", params, dld_count_closed(n + 1, k),
                       dld_count_via_sum(n, k));
      }));
      for (int i = 0; i <= n; ++i) {
        for (const auto &comp : weak_compositions(n - i, k + 1)) {
          Params pp{{"n", n}, {"i", i}, {"k", k}};
          for (std::size_t j = 0; j < comp.size(); ++j) {
            pp.emplace_back("a" + std::to_string(j), comp[j]);
          }
          tasks.push_back(guarded("PREFIX", pp, [=] {
            return compare("PREFIX", pp, prefix_count_closed(n, i, k, comp),
                           count_prefixes(n, i, k, comp));
          }));
        }
      }
    }
  }
  for (int n = 1; n <= std::min(max_n, 5); ++n) {
    Params params{{"n", n}};
    tasks.push_back(guarded("PARKING", params, [=] {
      std::vector<int> comp(static_cast<std::size_t>(n) + 1, 1);
      comp[0] = 0;
      return compare("PARKING", params, ipow(Integer(n + 1), n - 1),
                     count_ld(n, n, LabelFilter::composition(comp)));
    }));
  }
  return tasks;
}

CaseRecord ew_shift_case(int n, int k) {
  Integer total = 0;
  Integer good = 0;
  for_each_extended_word(n, k, [&](const Steps &letters) {
    const ExtendedWord w(letters, n, k);
    ++total;
    if ((ind(shift(w)) - ind(w) - 1) % (n + 1) == 0) {
      ++good;
    }
  });
  return compare("IND-SHIFT", {{"n", n}, {"k", k}}, total, good);
}

CaseRecord ew_order_case(int n, int k) {
  Integer total = 0;
  Integer good = 0;
  for_each_extended_word(n, k, [&](const Steps &letters) {
    const ExtendedWord w(letters, n, k);
    ++total;
    const int left = ind(w, DeletionOrder::leftmost);
    const std::set<int> all = ind_all_orders(w);
    const bool dyck_prefix = left == n + 1;
    const bool is_dyck = [&] {
      int height = 0;
      for (std::size_t i = 0; i + 1 < letters.size(); ++i) {
        height += letters[i].is_up() ? 1 : -1;
        if (height < 0) return false;
      }
      return height == 0;
    }();
    if (all == std::set<int>{left} &&
        ind(w, DeletionOrder::rightmost) == left && dyck_prefix == is_dyck) {
      ++good;
    }
  });
  return compare("IND-ORDER", {{"n", n}, {"k", k}}, total, good);
}

CaseRecord fiber_case(int n, int k) {
  std::map<std::string, int> fiber;
  bool labels_kept = true;
  for_each_extended_word(n, k, [&](const Steps &letters) {
    const ExtendedWord w(letters, n, k);
    const Projection p = project(w);
    labels_kept = labels_kept && label_counts(p.word.steps(), k) == label_counts(letters, k);
    ++fiber[p.word.to_string()];
  });
  Integer good = 0;
  for_each_ld(n, k, LabelFilter::none(), [&](const Steps &steps) {
    auto it = fiber.find(format_steps(steps));
    if (labels_kept && it != fiber.end() && it->second == n + 1) {
      ++good;
    }
  });
  // Every projected word is a labeled Dyck word, so the fiber map cannot have
  // keys outside LD_n(k); a count mismatch shows up through `good`.
  return compare("PROJECTION-FIBER", {{"n", n}, {"k", k}}, count_ld(n, k), good);
}

CaseRecord candidates_case(int n, int i, int k) {
  Integer total = 0;
  Integer good = 0;
  for_each_prefix_extended_word(n, i, k, [&](const Steps &letters) {
    ++total;
    if (index_candidates(PrefixExtendedWord(letters, n, i, k)).size() ==
        static_cast<std::size_t>(i) + 1) {
      ++good;
    }
  });
  return compare("INDEX-CANDIDATES", {{"n", n}, {"i", i}, {"k", k}}, total, good);
}

CaseRecord prefix_fiber_case(int n, int i, int k) {
  std::map<std::string, int> fiber;
  bool labels_kept = true;
  for_each_prefix_extended_word(n, i, k, [&](const Steps &letters) {
    const PrefixExtendedWord w(letters, n, i, k);
    for (int j : index_candidates(w)) {
      const DyckPrefixWord prefix = prefix_of_lift(w, j);
      labels_kept = labels_kept &&
                    label_counts(prefix.steps(), k) == label_counts(letters, k);
      ++fiber[prefix.to_string()];
    }
  });
  Integer expected = 0;
  Integer good = 0;
  for (const auto &comp : weak_compositions(n - i, k + 1)) {
    for_each_prefix(n, i, k, comp, [&](const Steps &steps) {
      ++expected;
      auto it = fiber.find(format_steps(steps));
      if (labels_kept && it != fiber.end() && it->second == n + 1) {
        ++good;
      }
    });
  }
  return compare("PREFIX-FIBER", {{"n", n}, {"i", i}, {"k", k}}, expected, good);
}

std::vector<Task> cyclic_tasks(const VerifyOptions &o) {
  const int max_n = o.max_n.value_or(4);
  const int max_k = o.max_k.value_or(2);
  check_bound(max_n, 1, "--max-n");
  check_bound(max_k, 1, "--max-k");
  if (max_n > 8) {
    throw std::invalid_argument("cyclic suite supports --max-n up to 8");
  }
  std::vector<Task> tasks;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= max_k; ++k) {
      Params params{{"n", n}, {"k", k}};
      tasks.push_back(guarded("IND-SHIFT", params, [=] { return ew_shift_case(n, k); }));
      tasks.push_back(guarded("IND-ORDER", params, [=] { return ew_order_case(n, k); }));
      tasks.push_back(guarded("PROJECTION-FIBER", params, [=] { return fiber_case(n, k); }));
      for (int i = 0; i <= n; ++i) {
        Params pp{{"n", n}, {"i", i}, {"k", k}};
        tasks.push_back(guarded("INDEX-CANDIDATES", pp,
                                [=] { return candidates_case(n, i, k); }));
        tasks.push_back(guarded("PREFIX-FIBER", pp,
                                [=] { return prefix_fiber_case(n, i, k); }));
      }
    }
  }
  return tasks;
}

// Letters each identity actually reads; the others stay fixed at 1.
std::string letters_of(const std::string &id) {
  static const std::map<std::string, std::string> used{
      {"EQ1", "abd"},  {"EQ2", "abcd"},    {"EQ3", "abcd"},  {"EQ3-ALT", "abcd"},
      {"EQ7", "abc"},  {"EQ8", "abcd"},    {"P53", "abc"},   {"P55", "abcd"},
      {"EQ5", "a"},    {"EQ5-CORR", "a"},  {"EQ6", "ab"},    {"EQCONJ", "abc"},
      {"EQCONJ-CORR", "abc"}, {"P58", "abc"}};
  return used.at(id);
}

// Visits every assignment of {1,2,3} to the given letters.
void for_each_grid_point(const std::string &letters,
                         const std::function<void(const VolumeParams &, Params)> &visit,
                         VolumeParams base, Params prefix) {
  std::function<void(std::size_t, VolumeParams, Params)> rec =
      [&](std::size_t pos, VolumeParams p, Params params) {
        if (pos == letters.size()) {
          visit(p, params);
          return;
        }
        for (int v = 1; v <= 3; ++v) {
          VolumeParams q = p;
          switch (letters[pos]) {
          case 'a': q.a = v; break;
          case 'b': q.b = v; break;
          case 'c': q.c = v; break;
          default: q.d = v; break;
          }
          Params next = params;
          next.emplace_back(std::string(1, letters[pos]), v);
          rec(pos + 1, q, std::move(next));
        }
      };
  rec(0, std::move(base), std::move(prefix));
}

bool printed_discrepancy_known(const std::string &id) {
  return id == "EQ3" || id == "EQ5" || id == "EQCONJ";
}

void add_volume_tasks(std::vector<Task> &tasks, const std::string &id, bool ps,
                      int cap) {
  const bool eq3 = id == "EQ3" || id == "EQ3-ALT";
  for (int n = volume_min_n(id); n <= cap; ++n) {
    for (int m = 1; m <= (eq3 ? 3 : 1); ++m) {
      if (eq3 && n < m + 2) {
        continue;
      }
      VolumeParams base;
      base.n = n;
      base.m = m;
      Params prefix{{"n", n}};
      if (eq3) {
        prefix.emplace_back("m", m);
      }
      for_each_grid_point(
          letters_of(id),
          [&](const VolumeParams &p, Params params) {
            tasks.push_back(guarded(id, params, [=] {
              const VolumeInstance inst =
                  ps ? ps_volume_instance(id, p) : car_volume_instance(id, p);
              const Integer closed =
                  ps ? ps_volume_closed(id, p) : car_volume_closed(id, p);
              return compare(id, params, volume(inst.graph, inst.flow), closed,
                             printed_discrepancy_known(id));
            }));
          },
          base, prefix);
    }
  }
}

// Identity `id` at n against `shifted` at n-1, evaluated on the same grid.
void add_shift_tasks(std::vector<Task> &tasks, const std::string &id,
                     const std::string &shifted, bool ps, int cap) {
  const std::string case_id = id + "~" + shifted;
  for (int n = std::max(volume_min_n(id), volume_min_n(shifted) + 1); n <= cap; ++n) {
    VolumeParams base;
    base.n = n;
    for_each_grid_point(
        letters_of(id),
        [&](const VolumeParams &p, Params params) {
          tasks.push_back(guarded(case_id, params, [=] {
            VolumeParams q = p;
            q.n = n - 1;
            const Integer lhs = ps ? ps_volume_closed(id, p) : car_volume_closed(id, p);
            const Integer rhs =
                ps ? ps_volume_closed(shifted, q) : car_volume_closed(shifted, q);
            return compare(case_id, params, rhs, lhs);
          }));
        },
        base, {{"n", n}});
  }
}

std::vector<Task> volume_tasks(const VerifyOptions &o) {
  if (o.max_n) {
    check_bound(*o.max_n, 1, "--max-n");
  }
  const int eq_cap = o.max_n.value_or(7);
  const int prop_cap = o.max_n.value_or(6);
  std::vector<Task> tasks;
  for (const std::string &id : ps_volume_ids()) {
    const bool prop = id == "P53" || id == "P55";
    add_volume_tasks(tasks, id, true, prop ? prop_cap : eq_cap);
  }
  for (const std::string &id : car_volume_ids()) {
    add_volume_tasks(tasks, id, false, prop_cap);
  }
  add_shift_tasks(tasks, "EQ7", "P53", true, eq_cap);
  add_shift_tasks(tasks, "EQ8", "P55", true, eq_cap);
  add_shift_tasks(tasks, "EQCONJ-CORR", "P58", false, prop_cap);

  const int b_cap = o.max_n.value_or(7);
  for (int n = 1; n <= b_cap; ++n) {
    for (int k = 1; k <= n; ++k) {
      for (int m = k; m <= n; ++m) {
        Params params{{"n", n}, {"k", k}, {"m", m}};
        tasks.push_back(guarded("B", params, [=] {
          return compare("B", params, coeff_B_sum(n, k, m), coeff_B(n, k, m));
        }));
      }
    }
  }
  for (int m = 0; m <= 8; ++m) {
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        Params params{{"m", m}, {"a", a}, {"b", b}};
        tasks.push_back(guarded("A2", params, [=] {
          return compare("A2", params, coeff_A_km(2, m, {a, b}),
                         coeff_A2_closed(m, a, b));
        }));
        for (int c = 1; c <= 3; ++c) {
          Params p3{{"m", m}, {"a", a}, {"b", b}, {"c", c}};
          if (m >= 3) {
            tasks.push_back(guarded("A3", p3, [=] {
              return compare("A3", p3, coeff_A_km(3, m, {a, b, c}),
                             coeff_A3_printed(m, a, b, c), true);
            }));
          }
          tasks.push_back(guarded("A3-CORR", p3, [=] {
            return compare("A3-CORR", p3, coeff_A_km(3, m, {a, b, c}),
                           coeff_A3_corrected(m, a, b, c));
          }));
        }
      }
    }
  }
  for (int n = 3; n <= prop_cap; ++n) {
    for (int p = 1; p <= n - 2; ++p) {
      for (int q = 1; p + q <= n - 1; ++q) {
        const int r = n - p - q;
        Params params{{"n", n}, {"p", p}, {"q", q}, {"r", r}};
        tasks.push_back(guarded("APQR-KOSTANT", params, [=] {
          return compare("APQR-KOSTANT", params, coeff_A_pqr_kostant(n, p, q, r),
                         coeff_A_pqr(n, p, q, r));
        }));
        tasks.push_back(guarded("APQR-DYCK", params, [=] {
          return compare("APQR-DYCK", params, coeff_A_pqr_dyck(n, p, q, r),
                         coeff_A_pqr(n, p, q, r));
        }));
      }
    }
  }
  return tasks;
}

std::vector<Task> tasks_for(std::string_view suite, const VerifyOptions &o) {
  if (suite == "ps-ehrhart") return ps_ehrhart_tasks(o);
  if (suite == "car-ehrhart") return car_ehrhart_tasks(o);
  if (suite == "dyck-counts") return dyck_tasks(o);
  if (suite == "cyclic") return cyclic_tasks(o);
  if (suite == "volumes") return volume_tasks(o);
  if (suite == "all") {
    std::vector<Task> all;
    for (std::string_view s : {"ps-ehrhart", "car-ehrhart", "dyck-counts", "cyclic", "volumes"}) {
      std::vector<Task> part = tasks_for(s, o);
      all.insert(all.end(), std::make_move_iterator(part.begin()),
                 std::make_move_iterator(part.end()));
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + std::string(suite));
}

std::vector<CaseRecord> run_tasks(const std::vector<Task> &tasks, unsigned workers) {
  std::vector<CaseRecord> results(tasks.size());
  if (workers <= 1 || tasks.size() <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      results[i] = tasks[i]();
    }
    return results;
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = tasks[i]();
    }
  };
  std::vector<std::jthread> pool;
  const unsigned count = std::min<std::size_t>(workers, tasks.size());
  for (unsigned w = 0; w < count; ++w) {
    pool.emplace_back(worker);
  }
  pool.clear();
  return results;
}

std::string params_text(const Params &params, char sep) {
  std::string out;
  for (const auto &[key, value] : params) {
    if (!out.empty()) {
      out += sep;
    }
    out += key + "=" + std::to_string(value);
  }
  return out;
}

std::string csv_field(const std::string &s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char ch : s) {
    out += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  }
  return out + "\"";
}

} // namespace

std::string_view status_name(CaseStatus status) {
  switch (status) {
  case CaseStatus::pass: return "PASS";
  case CaseStatus::fail: return "FAIL";
  case CaseStatus::reported: return "REPORTED-DISCREPANCY";
  }
  return "FAIL";
}

ReportSummary VerificationReport::summary() const {
  ReportSummary s;
  for (const CaseRecord &c : cases) {
    switch (c.status) {
    case CaseStatus::pass: ++s.pass; break;
    case CaseStatus::fail: ++s.fail; break;
    case CaseStatus::reported: ++s.reported; break;
    }
  }
  return s;
}

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names{
      "ps-ehrhart", "car-ehrhart", "dyck-counts", "cyclic", "volumes", "all"};
  return names;
}

VerificationReport run_verification(std::string_view suite,
                                    const VerifyOptions &options) {
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = tasks_for(suite, options);
  VerificationReport report;
  report.suite = std::string(suite);
  report.cases = run_tasks(tasks, options.workers);
  report.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  return report;
}

std::string render_text(const VerificationReport &report) {
  std::ostringstream out;
  for (const CaseRecord &c : report.cases) {
    out << status_name(c.status) << ' ' << c.id << ' ' << params_text(c.params, ' ')
        << " expected=" << c.expected << " actual=" << c.actual << '\n';
  }
  const ReportSummary s = report.summary();
  out << "suite " << report.suite << ": " << s.pass << " pass, " << s.fail
      << " fail, " << s.reported << " reported\n";
  return out.str();
}

std::string render_json(const VerificationReport &report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["suite"] = report.suite;
  ordered_json cases = ordered_json::array();
  for (const CaseRecord &c : report.cases) {
    ordered_json params = ordered_json::object();
    for (const auto &[key, value] : c.params) {
      params[key] = value;
    }
    cases.push_back({{"id", c.id},
                     {"params", params},
                     {"expected", c.expected},
                     {"actual", c.actual},
                     {"status", status_name(c.status)}});
  }
  doc["cases"] = std::move(cases);
  const ReportSummary s = report.summary();
  doc["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"reported", s.reported}};
  doc["duration_ms"] = report.duration_ms;
  return doc.dump(2) + "\n";
}

std::string render_csv(const VerificationReport &report) {
  std::string out = "id,params,expected,actual,status\n";
  for (const CaseRecord &c : report.cases) {
    out += csv_field(c.id) + ',' + csv_field(params_text(c.params, ';')) + ',' +
           csv_field(c.expected) + ',' + csv_field(c.actual) + ',' +
           std::string(status_name(c.status)) + '\n';
  }
  return out;
}

unsigned workers_from_environment() {
  const char *raw = std::getenv("FLOWVOL_WORKERS");
  if (raw == nullptr || *raw == '\0') {
    return 1;
  }
  const std::string text(raw);
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(text, &used);
  } catch (const std::exception &) {
    used = 0;
  }
  if (used != text.size() || value < 1 || value > 1024) {
    throw std::invalid_argument("FLOWVOL_WORKERS must be a positive integer");
  }
  return static_cast<unsigned>(value);
}

} // namespace flowvol

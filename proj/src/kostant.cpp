#include "flowvol/kostant.hpp"

#include <map>

namespace flowvol {
namespace {

std::vector<std::int64_t> narrow_flow(const DirectedStepGraph &g,
                                      const NetFlow &a) {
  check_net_flow(g, a);
  std::vector<std::int64_t> supply;
  supply.reserve(a.size());
  for (const Integer &v : a.values()) {
    supply.push_back(to_int64(v));
  }
  return supply;
}

struct Target {
  int head;
  int multiplicity;
};

class KostantCounter {
public:
  KostantCounter(const DirectedStepGraph &g, std::vector<std::int64_t> supply)
      : n_(g.vertex_count()), supply_(std::move(supply)),
        targets_(static_cast<std::size_t>(n_) + 1),
        memo_(static_cast<std::size_t>(n_) + 1) {
    for (const Edge &e : g.edges()) {
      auto &list = targets_[static_cast<std::size_t>(e.tail)];
      if (!list.empty() && list.back().head == e.head) {
        ++list.back().multiplicity;
      } else {
        list.push_back({e.head, 1});
      }
    }
  }

  Integer run() {
    std::vector<std::int64_t> pending(static_cast<std::size_t>(n_) + 2, 0);
    return count(1, pending);
  }

private:
  // pending[w] is the in-flow already routed into vertex w.
  Integer count(int v, std::vector<std::int64_t> &pending) {
    if (v > n_) {
      return 1;
    }
    const std::int64_t surplus =
        supply_[static_cast<std::size_t>(v - 1)] +
        pending[static_cast<std::size_t>(v)];
    if (surplus < 0) {
      return 0;
    }
    const auto &out = targets_[static_cast<std::size_t>(v)];
    if (out.empty()) {
      return surplus == 0 ? count(v + 1, pending) : Integer(0);
    }

    std::vector<std::int64_t> key(pending.begin() + v, pending.end());
    auto &table = memo_[static_cast<std::size_t>(v)];
    if (auto it = table.find(key); it != table.end()) {
      return it->second;
    }
    Integer total = 0;
    distribute(v, out, 0, surplus, Integer(1), pending, total);
    table.emplace(std::move(key), total);
    return total;
  }

  void distribute(int v, const std::vector<Target> &out, std::size_t idx,
                  std::int64_t remaining, const Integer &weight,
                  std::vector<std::int64_t> &pending, Integer &total) {
    const Target &t = out[idx];
    auto &slot = pending[static_cast<std::size_t>(t.head)];
    if (idx + 1 == out.size()) {
      slot += remaining;
      total += weight * multiset_coeff(t.multiplicity, remaining) *
               count(v + 1, pending);
      slot -= remaining;
      return;
    }
    for (std::int64_t x = 0; x <= remaining; ++x) {
      slot += x;
      distribute(v, out, idx + 1, remaining - x,
                 weight * multiset_coeff(t.multiplicity, x), pending, total);
      slot -= x;
    }
  }

  int n_;
  std::vector<std::int64_t> supply_;
  std::vector<std::vector<Target>> targets_;
  std::vector<std::map<std::vector<std::int64_t>, Integer>> memo_;
};

class FlowLister {
public:
  FlowLister(const DirectedStepGraph &g, std::vector<std::int64_t> supply,
             std::size_t cap)
      : g_(g), supply_(std::move(supply)), cap_(cap),
        inflow_(static_cast<std::size_t>(g.vertex_count()) + 1, 0),
        current_(g.edge_count(), 0),
        begin_(static_cast<std::size_t>(g.vertex_count()) + 1, 0),
        end_(static_cast<std::size_t>(g.vertex_count()) + 1, 0) {
    // Edges are sorted by tail, so each vertex owns a contiguous range.
    std::size_t e = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) {
      begin_[static_cast<std::size_t>(v)] = e;
      while (e < g.edge_count() && g.edges()[e].tail == v) {
        ++e;
      }
      end_[static_cast<std::size_t>(v)] = e;
    }
  }

  std::vector<FlowAssignment> run() {
    if (cap_ > 0) {
      visit_vertex(1);
    }
    return std::move(out_);
  }

private:
  bool full() const { return out_.size() >= cap_; }

  void visit_vertex(int v) {
    if (full()) {
      return;
    }
    if (v > g_.vertex_count()) {
      out_.push_back(current_);
      return;
    }
    const std::int64_t surplus = supply_[static_cast<std::size_t>(v - 1)] +
                                 inflow_[static_cast<std::size_t>(v)];
    if (surplus < 0) {
      return;
    }
    const std::size_t begin = begin_[static_cast<std::size_t>(v)];
    const std::size_t end = end_[static_cast<std::size_t>(v)];
    if (begin == end) {
      if (surplus == 0) {
        visit_vertex(v + 1);
      }
      return;
    }
    assign(v, begin, end, surplus);
  }

  void assign(int v, std::size_t e, std::size_t end, std::int64_t remaining) {
    auto &head_in = inflow_[static_cast<std::size_t>(g_.edges()[e].head)];
    if (e + 1 == end) {
      current_[e] = remaining;
      head_in += remaining;
      visit_vertex(v + 1);
      head_in -= remaining;
      current_[e] = 0;
      return;
    }
    for (std::int64_t x = 0; x <= remaining && !full(); ++x) {
      current_[e] = x;
      head_in += x;
      assign(v, e + 1, end, remaining - x);
      head_in -= x;
    }
    current_[e] = 0;
  }

  const DirectedStepGraph &g_;
  std::vector<std::int64_t> supply_;
  std::size_t cap_;
  std::vector<std::int64_t> inflow_;
  FlowAssignment current_;
  std::vector<std::size_t> begin_;
  std::vector<std::size_t> end_;
  std::vector<FlowAssignment> out_;
};

} // namespace

Integer kpf(const DirectedStepGraph &g, const NetFlow &a) {
  return KostantCounter(g, narrow_flow(g, a)).run();
}

std::vector<FlowAssignment> list_flows(const DirectedStepGraph &g,
                                       const NetFlow &a, std::size_t cap) {
  return FlowLister(g, narrow_flow(g, a), cap).run();
}

} // namespace flowvol

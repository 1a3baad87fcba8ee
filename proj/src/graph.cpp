#include "flowvol/graph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

namespace flowvol {

DirectedStepGraph::DirectedStepGraph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  if (vertex_count_ < 1) {
    throw std::invalid_argument("graph needs at least one vertex");
  }
  for (const Edge &e : edges_) {
    if (e.tail < 1 || e.head > vertex_count_ || e.tail >= e.head) {
      throw std::invalid_argument("edge (" + std::to_string(e.tail) + "," +
                                  std::to_string(e.head) +
                                  ") is not of the form (i,j) with 1<=i<j<=" +
                                  std::to_string(vertex_count_));
    }
  }
  std::sort(edges_.begin(), edges_.end());
}

int DirectedStepGraph::outdeg(int v) const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge &e) { return e.tail == v; }));
}

int DirectedStepGraph::indeg(int v) const {
  return static_cast<int>(std::count_if(
      edges_.begin(), edges_.end(), [v](const Edge &e) { return e.head == v; }));
}

std::vector<int> DirectedStepGraph::outdegrees() const {
  std::vector<int> deg(static_cast<std::size_t>(vertex_count_), 0);
  for (const Edge &e : edges_) {
    ++deg[static_cast<std::size_t>(e.tail - 1)];
  }
  return deg;
}

bool DirectedStepGraph::is_connected() const {
  std::vector<int> parent(static_cast<std::size_t>(vertex_count_ + 1));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    }
    return x;
  };
  int components = vertex_count_;
  for (const Edge &e : edges_) {
    int a = find(e.tail);
    int b = find(e.head);
    if (a != b) {
      parent[static_cast<std::size_t>(a)] = b;
      --components;
    }
  }
  return components == 1;
}

DirectedStepGraph DirectedStepGraph::restrict_to(int count) const {
  if (count < 1 || count > vertex_count_) {
    throw std::invalid_argument("restriction size out of range");
  }
  std::vector<Edge> kept;
  for (const Edge &e : edges_) {
    if (e.head <= count) {
      kept.push_back(e);
    }
  }
  return DirectedStepGraph(count, std::move(kept));
}

std::string DirectedStepGraph::to_string() const {
  std::ostringstream out;
  out << vertex_count_ << ':';
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    out << (i ? "," : "") << edges_[i].tail << '-' << edges_[i].head;
  }
  return out.str();
}

NetFlow::NetFlow(std::vector<Integer> values) : values_(std::move(values)) {
  Integer total = 0;
  for (const Integer &v : values_) {
    total += v;
  }
  if (total != 0) {
    throw std::invalid_argument("net flow entries sum to " + total.get_str() +
                                ", expected 0");
  }
}

NetFlow NetFlow::with_implied_sink(std::vector<Integer> leading) {
  Integer total = 0;
  for (const Integer &v : leading) {
    total += v;
  }
  leading.push_back(-total);
  return NetFlow(std::move(leading));
}

std::string NetFlow::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    out += (i ? "," : "") + values_[i].get_str();
  }
  return out;
}

void check_net_flow(const DirectedStepGraph &g, const NetFlow &a) {
  if (a.size() != static_cast<std::size_t>(g.vertex_count())) {
    throw std::invalid_argument(
        "net flow has " + std::to_string(a.size()) + " entries, graph has " +
        std::to_string(g.vertex_count()) + " vertices");
  }
}

bool is_flow(const DirectedStepGraph &g, const NetFlow &a,
             const FlowAssignment &b) {
  if (b.size() != g.edge_count() ||
      a.size() != static_cast<std::size_t>(g.vertex_count())) {
    return false;
  }
  std::vector<Integer> net(a.size(), 0);
  for (std::size_t e = 0; e < b.size(); ++e) {
    if (b[e] < 0) {
      return false;
    }
    net[static_cast<std::size_t>(g.edges()[e].tail - 1)] += b[e];
    net[static_cast<std::size_t>(g.edges()[e].head - 1)] -= b[e];
  }
  return net == a.values();
}

DirectedStepGraph build_ps(int n) {
  if (n < 2) {
    throw std::invalid_argument("build_ps: n must be at least 2");
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({i, i + 1});
  }
  for (int i = 1; i <= n - 1; ++i) {
    edges.push_back({i, n + 1});
  }
  return DirectedStepGraph(n + 1, std::move(edges));
}

DirectedStepGraph build_car(int n) {
  if (n < 3) {
    throw std::invalid_argument("build_car: n must be at least 3");
  }
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back({i, i + 1});
  }
  for (int i = 3; i <= n; ++i) {
    edges.push_back({1, i});
  }
  for (int i = 2; i <= n - 1; ++i) {
    edges.push_back({i, n + 1});
  }
  return DirectedStepGraph(n + 1, std::move(edges));
}

DirectedStepGraph augment(const DirectedStepGraph &g, int k) {
  if (k < 1) {
    throw std::invalid_argument("augment: k must be at least 1");
  }
  std::vector<Edge> edges;
  edges.reserve(g.edge_count() +
                static_cast<std::size_t>(k) *
                    static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    for (int c = 0; c < k; ++c) {
      edges.push_back({1, v + 1});
    }
  }
  for (const Edge &e : g.edges()) {
    edges.push_back({e.tail + 1, e.head + 1});
  }
  return DirectedStepGraph(g.vertex_count() + 1, std::move(edges));
}

NetFlow unit_flow(const DirectedStepGraph &g) {
  std::vector<Integer> values(static_cast<std::size_t>(g.vertex_count()), 0);
  if (values.size() < 2) {
    throw std::invalid_argument("unit flow needs at least two vertices");
  }
  values.front() = 1;
  values.back() = -1;
  return NetFlow(std::move(values));
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = text.find(sep, start);
    parts.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) {
      break;
    }
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+') {
    ++first;
  }
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError("invalid " + std::string(what) + ": '" +
                     std::string(text) + "'");
  }
  return value;
}

namespace {

DirectedStepGraph parse_explicit(std::string_view text) {
  std::size_t colon = text.find(':');
  int n = parse_int(text.substr(0, colon), "vertex count");
  if (n < 1) {
    throw ParseError("vertex count must be positive");
  }
  std::vector<Edge> edges;
  std::string_view body = text.substr(colon + 1);
  if (!body.empty()) {
    for (const std::string &item : split(body, ',')) {
      std::size_t dash = item.find('-');
      if (dash == std::string::npos || dash == 0) {
        throw ParseError("invalid edge '" + item + "', expected <i>-<j>");
      }
      int i = parse_int(std::string_view(item).substr(0, dash), "edge tail");
      int j = parse_int(std::string_view(item).substr(dash + 1), "edge head");
      if (i < 1 || j > n || i >= j) {
        throw ParseError("edge '" + item + "' must satisfy 1<=i<j<=" +
                         std::to_string(n));
      }
      edges.push_back({i, j});
    }
  }
  return DirectedStepGraph(n, std::move(edges));
}

DirectedStepGraph parse_graph_rec(std::string_view text) {
  if (text.starts_with("ps:")) {
    int vertices = parse_int(text.substr(3), "PS vertex count");
    if (vertices < 3) {
      throw ParseError("ps:<N> needs N >= 3");
    }
    return build_ps(vertices - 1);
  }
  if (text.starts_with("car:")) {
    int vertices = parse_int(text.substr(4), "caracol vertex count");
    if (vertices < 4) {
      throw ParseError("car:<N> needs N >= 4");
    }
    return build_car(vertices - 1);
  }
  if (text.starts_with("aug:")) {
    std::string_view rest = text.substr(4);
    std::size_t colon = rest.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("aug:<k>:<graph> is missing the inner graph");
    }
    int k = parse_int(rest.substr(0, colon), "augmentation multiplicity");
    if (k < 1) {
      throw ParseError("augmentation multiplicity must be at least 1");
    }
    return augment(parse_graph_rec(rest.substr(colon + 1)), k);
  }
  if (text.find(':') == std::string_view::npos) {
    throw ParseError("unrecognised graph spec '" + std::string(text) + "'");
  }
  return parse_explicit(text);
}

} // namespace

DirectedStepGraph parse_graph_spec(std::string_view text) {
  DirectedStepGraph g = parse_graph_rec(text);
  if (!g.is_connected()) {
    throw ParseError("graph '" + std::string(text) + "' is not connected");
  }
  return g;
}

NetFlow parse_flow(std::string_view text, const DirectedStepGraph &g) {
  std::vector<Integer> values;
  for (const std::string &item : split(text, ',')) {
    try {
      values.push_back(parse_integer(item));
    } catch (const std::invalid_argument &) {
      throw ParseError("invalid flow entry '" + item + "'");
    }
  }
  const auto n = static_cast<std::size_t>(g.vertex_count());
  try {
    if (values.size() == n) {
      return NetFlow(std::move(values));
    }
    if (values.size() + 1 == n) {
      return NetFlow::with_implied_sink(std::move(values));
    }
  } catch (const std::invalid_argument &e) {
    throw ParseError(e.what());
  }
  throw ParseError("flow has " + std::to_string(values.size()) +
                   " entries; graph with " + std::to_string(n) +
                   " vertices needs " + std::to_string(n) + " or " +
                   std::to_string(n - 1));
}

} // namespace flowvol

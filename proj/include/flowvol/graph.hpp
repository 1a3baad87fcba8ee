#pragma once

// Directed graphs whose edges all point from a lower to a higher vertex,
// net-flow vectors on them, and the graph families used throughout.

#include "flowvol/integer.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace flowvol {

struct Edge {
  int tail = 0;
  int head = 0;

  friend auto operator<=>(const Edge &, const Edge &) = default;
};

/// Loopless multigraph on vertices 1..vertex_count with every edge (i, j)
/// satisfying i < j. Edges are kept sorted; parallel edges are repeated.
///
/// Connectivity is not a constructor invariant: restrictions used by the
/// volume formula may disconnect the graph. Family constructors and the
/// text parser check it through is_connected().
class DirectedStepGraph {
public:
  DirectedStepGraph() = default;
  DirectedStepGraph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Edge> &edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  /// Out-degree of vertex v (1-based).
  int outdeg(int v) const;
  /// Out-degrees of vertices 1..vertex_count, index 0 is vertex 1.
  std::vector<int> outdegrees() const;
  int indeg(int v) const;

  bool is_connected() const;

  /// Induced subgraph on vertices 1..count.
  DirectedStepGraph restrict_to(int count) const;

  std::string to_string() const;

  friend bool operator==(const DirectedStepGraph &,
                         const DirectedStepGraph &) = default;

private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
};

/// Per-vertex net supply; entries sum to zero, sink entry included.
class NetFlow {
public:
  NetFlow() = default;
  explicit NetFlow(std::vector<Integer> values);

  /// Builds (a_1, ..., a_n, -sum a_i) from the first n entries.
  static NetFlow with_implied_sink(std::vector<Integer> leading);

  const std::vector<Integer> &values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  const Integer &operator[](std::size_t i) const { return values_[i]; }

  std::string to_string() const;

  friend bool operator==(const NetFlow &, const NetFlow &) = default;

private:
  std::vector<Integer> values_;
};

/// Nonnegative integer flow on each edge, aligned with the canonical edge list.
using FlowAssignment = std::vector<std::int64_t>;

/// True iff the assignment is nonnegative and realises the net flow.
bool is_flow(const DirectedStepGraph &g, const NetFlow &a,
             const FlowAssignment &b);

/// Throws std::invalid_argument unless a is a valid net flow for g.
void check_net_flow(const DirectedStepGraph &g, const NetFlow &a);

/// Pitman-Stanley graph PS_{n+1}.
DirectedStepGraph build_ps(int n);
/// Caracol graph Car_{n+1}.
DirectedStepGraph build_car(int n);
/// G~(k): a new source joined to every vertex by k parallel edges; all
/// original labels shift up by one.
DirectedStepGraph augment(const DirectedStepGraph &g, int k);

/// Unit flow (1, 0, ..., 0, -1) on g.
NetFlow unit_flow(const DirectedStepGraph &g);

// Text grammars shared with the command line.
//
//   graph:  ps:<N> | car:<N> | aug:<k>:<graph> | <N>:<i>-<j>,<i>-<j>,...
//   flow:   comma-separated integers, length N or N-1 (sink implied)
//
// In ps:<N> and car:<N>, N is the vertex count (PS_N, Car_N).

class ParseError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

DirectedStepGraph parse_graph_spec(std::string_view text);
NetFlow parse_flow(std::string_view text, const DirectedStepGraph &g);

std::vector<std::string> split(std::string_view text, char sep);
int parse_int(std::string_view text, std::string_view what);

} // namespace flowvol

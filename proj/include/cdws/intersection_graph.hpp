#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cdws/diagram.hpp"
#include "cdws/rational.hpp"

namespace cdws {

/// Labelled intersection graph of a chord diagram with one directed edge per
/// crossing pair. Vertex labels are the chord labels of the diagram.
class OrientedIntersectionGraph {
 public:
  OrientedIntersectionGraph() = default;
  explicit OrientedIntersectionGraph(int vertices);

  int vertices() const { return vertices_; }

  /// +1 if the edge goes a -> b, -1 if b -> a, 0 if a and b are not adjacent.
  int direction(int a, int b) const { return dir_[index(a, b)]; }
  bool adjacent(int a, int b) const { return direction(a, b) != 0; }
  void set_edge(int from, int to);

  std::vector<std::pair<int, int>> edges() const;
  std::vector<int> neighbours(int v) const;

  friend bool operator==(const OrientedIntersectionGraph&, const OrientedIntersectionGraph&) = default;

 private:
  std::size_t index(int a, int b) const {
    return static_cast<std::size_t>((a - 1) * vertices_ + (b - 1));
  }

  int vertices_ = 0;
  std::vector<std::int8_t> dir_;
};

/// Orients each crossing pair by the arc rule: a -> b when the tail of b lies
/// on the counter-clockwise arc from the tail of a to the head of a.
OrientedIntersectionGraph build_graph(const ChordDiagram& d);
OrientedIntersectionGraph build_graph(const ChordDiagram& d, const ChordOrientation& o);

/// How arcs between two tails are compared by the smaller-arc rule.
enum class ArcMeasure {
  /// Count only endpoints of the two chords being compared.
  kPairEndpoints,
  /// Count every endpoint of the diagram lying strictly inside the arc.
  kAllEndpoints,
};

/// Result of the smaller-arc rule: a graph over the decided pairs plus the
/// crossing pairs (a < b) whose two arcs had equal size.
struct SmallerArcResult {
  OrientedIntersectionGraph graph;
  std::vector<std::pair<int, int>> ties;
};

/// Orients a -> b when the strictly smaller arc between the tails runs
/// counter-clockwise from tail(a) to tail(b).
SmallerArcResult orientation_rule_smaller_arc(const ChordDiagram& d, const ChordOrientation& o,
                                              ArcMeasure measure = ArcMeasure::kPairEndpoints);

/// Skew-symmetric matrix with entry sign(i - j) where chords i and j cross.
class IntersectionMatrix {
 public:
  explicit IntersectionMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n), 0) {}

  int size() const { return n_; }
  int operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  int& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }

  /// Exact determinant (fraction-free elimination).
  BigInt determinant() const;

  friend bool operator==(const IntersectionMatrix&, const IntersectionMatrix&) = default;

 private:
  int n_;
  std::vector<int> entries_;
};

IntersectionMatrix intersection_matrix(const ChordDiagram& d);

/// A closed path v1 -> ... -> vL -> v1 without repeated vertices.
struct OrientedCircuit {
  std::vector<int> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend auto operator<=>(const OrientedCircuit&, const OrientedCircuit&) = default;
};

/// All oriented simple cycles of the given length. Each starts at its minimum
/// label; a cycle and its reversal are both listed except for length 2.
std::vector<OrientedCircuit> circuits(const OrientedIntersectionGraph& g, int length);

/// Cyclic label decreases along the circuit, wrap-around included.
int descent_count(const OrientedCircuit& h);

/// Product of +1/-1 edge agreements. Throws std::invalid_argument on odd length.
int circuit_sign(const OrientedCircuit& h, const OrientedIntersectionGraph& g);

/// Sum over oriented circuits of length 2k of (-1)^descents, canonical labels.
BigInt descent_sum(const ChordDiagram& d, int k);

/// Sum of signs over unoriented circuits of length 2k in the graph built with
/// orientation `o` (each undirected cycle counted once).
BigInt signed_circuit_sum(const ChordDiagram& d, int k, const ChordOrientation& o);
BigInt signed_circuit_sum(const ChordDiagram& d, int k);

/// R_k(D) as half the oriented descent sum. Half-integral at k = 1.
Rational r_k(const ChordDiagram& d, int k);

}  // namespace cdws

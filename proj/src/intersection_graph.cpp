#include "cdws/intersection_graph.hpp"

#include <stdexcept>
#include <string>

namespace cdws {

OrientedIntersectionGraph::OrientedIntersectionGraph(int vertices)
    : vertices_(vertices), dir_(static_cast<std::size_t>(vertices * vertices), 0) {}

void OrientedIntersectionGraph::set_edge(int from, int to) {
  dir_[index(from, to)] = 1;
  dir_[index(to, from)] = -1;
}

std::vector<std::pair<int, int>> OrientedIntersectionGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int a = 1; a <= vertices_; ++a) {
    for (int b = 1; b <= vertices_; ++b) {
      if (direction(a, b) > 0) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

std::vector<int> OrientedIntersectionGraph::neighbours(int v) const {
  std::vector<int> out;
  for (int u = 1; u <= vertices_; ++u) {
    if (adjacent(v, u)) {
      out.push_back(u);
    }
  }
  return out;
}

namespace {

// Whether x lies strictly inside the counter-clockwise arc from p to q.
bool on_open_arc(int p, int q, int x, int points) {
  const int span = ((q - p) % points + points) % points;
  const int offset = ((x - p) % points + points) % points;
  return offset > 0 && offset < span;
}

}  // namespace

OrientedIntersectionGraph build_graph(const ChordDiagram& d) {
  return build_graph(d, ChordOrientation::canonical(d));
}

OrientedIntersectionGraph build_graph(const ChordDiagram& d, const ChordOrientation& o) {
  o.validate(d);
  const int n = d.degree();
  OrientedIntersectionGraph g(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!d.crosses(a, b)) {
        continue;
      }
      if (on_open_arc(o.tail(a), o.head(d, a), o.tail(b), d.points())) {
        g.set_edge(a, b);
      } else {
        g.set_edge(b, a);
      }
    }
  }
  return g;
}

SmallerArcResult orientation_rule_smaller_arc(const ChordDiagram& d, const ChordOrientation& o,
                                              ArcMeasure measure) {
  o.validate(d);
  const int n = d.degree();
  const int points = d.points();
  SmallerArcResult result{OrientedIntersectionGraph(n), {}};
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!d.crosses(a, b)) {
        continue;
      }
      const int ta = o.tail(a);
      const int tb = o.tail(b);
      int forward = 0;   // inside arc ta -> tb
      int backward = 0;  // inside arc tb -> ta
      if (measure == ArcMeasure::kAllEndpoints) {
        forward = ((tb - ta) % points + points) % points - 1;
        backward = points - 2 - forward;
      } else {
        for (int x : {o.head(d, a), o.head(d, b)}) {
          (on_open_arc(ta, tb, x, points) ? forward : backward) += 1;
        }
      }
      if (forward < backward) {
        result.graph.set_edge(a, b);
      } else if (backward < forward) {
        result.graph.set_edge(b, a);
      } else {
        result.ties.emplace_back(a, b);
      }
    }
  }
  return result;
}

BigInt IntersectionMatrix::determinant() const {
  if (n_ == 0) {
    return 1;
  }
  std::vector<BigInt> m(entries_.begin(), entries_.end());
  auto at = [&](int i, int j) -> BigInt& { return m[static_cast<std::size_t>(i * n_ + j)]; };
  BigInt sign = 1;
  BigInt previous = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int pivot = k + 1;
      while (pivot < n_ && at(pivot, k) == 0) {
        ++pivot;
      }
      if (pivot == n_) {
        return 0;
      }
      for (int j = 0; j < n_; ++j) {
        std::swap(at(k, j), at(pivot, j));
      }
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i) {
      for (int j = k + 1; j < n_; ++j) {
        // Bareiss: the division is exact.
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / previous;
      }
    }
    previous = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

IntersectionMatrix intersection_matrix(const ChordDiagram& d) {
  const int n = d.degree();
  IntersectionMatrix im(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (d.crosses(i, j)) {
        im(i - 1, j - 1) = (i < j) ? -1 : 1;
      }
    }
  }
  return im;
}

namespace {

void extend_circuit(const OrientedIntersectionGraph& g, int length, std::vector<int>& path,
                    std::vector<bool>& used, std::vector<OrientedCircuit>& out) {
  const int start = path.front();
  const int last = path.back();
  if (static_cast<int>(path.size()) == length) {
    if (g.adjacent(last, start)) {
      out.push_back({path});
    }
    return;
  }
  for (int next = start + 1; next <= g.vertices(); ++next) {
    if (used[static_cast<std::size_t>(next)] || !g.adjacent(last, next)) {
      continue;
    }
    used[static_cast<std::size_t>(next)] = true;
    path.push_back(next);
    extend_circuit(g, length, path, used, out);
    path.pop_back();
    used[static_cast<std::size_t>(next)] = false;
  }
}

}  // namespace

std::vector<OrientedCircuit> circuits(const OrientedIntersectionGraph& g, int length) {
  if (length < 2) {
    throw std::invalid_argument("circuit length must be >= 2");
  }
  std::vector<OrientedCircuit> out;
  if (length > g.vertices()) {
    return out;
  }
  std::vector<bool> used(static_cast<std::size_t>(g.vertices() + 1), false);
  std::vector<int> path;
  for (int start = 1; start <= g.vertices(); ++start) {
    path.assign(1, start);
    used[static_cast<std::size_t>(start)] = true;
    extend_circuit(g, length, path, used, out);
    used[static_cast<std::size_t>(start)] = false;
  }
  return out;
}

int descent_count(const OrientedCircuit& h) {
  int descents = 0;
  const auto& v = h.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > v[(i + 1) % v.size()]) {
      ++descents;
    }
  }
  return descents;
}

int circuit_sign(const OrientedCircuit& h, const OrientedIntersectionGraph& g) {
  if (h.length() % 2 != 0) {
    throw std::invalid_argument("circuit sign is undefined for odd length " +
                                std::to_string(h.length()));
  }
  int sign = 1;
  const auto& v = h.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int dir = g.direction(v[i], v[(i + 1) % v.size()]);
    if (dir == 0) {
      throw std::invalid_argument("circuit uses a non-edge");
    }
    sign *= dir;
  }
  return sign;
}

BigInt descent_sum(const ChordDiagram& d, int k) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1");
  }
  BigInt sum = 0;
  for (const auto& h : circuits(build_graph(d), 2 * k)) {
    sum += (descent_count(h) % 2 == 0) ? 1 : -1;
  }
  return sum;
}

BigInt signed_circuit_sum(const ChordDiagram& d, int k, const ChordOrientation& o) {
  if (k < 1) {
    throw std::invalid_argument("k must be >= 1");
  }
  const auto g = build_graph(d, o);
  BigInt sum = 0;
  for (const auto& h : circuits(g, 2 * k)) {
    // Keep one traversal direction per undirected cycle.
    if (h.length() > 2 && h.vertices[1] > h.vertices.back()) {
      continue;
    }
    sum += circuit_sign(h, g);
  }
  return sum;
}

BigInt signed_circuit_sum(const ChordDiagram& d, int k) {
  return signed_circuit_sum(d, k, ChordOrientation::canonical(d));
}

Rational r_k(const ChordDiagram& d, int k) {
  return Rational(descent_sum(d, k), BigInt(2));
}

}  // namespace cdws

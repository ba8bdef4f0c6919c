#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "cdws/diagram.hpp"
#include "cdws/intersection_graph.hpp"

using namespace cdws;

namespace {

ChordDiagram D(const char* code) { return parse_gauss_code(code); }

ChordOrientation random_orientation(const ChordDiagram& d, std::mt19937_64& rng) {
  ChordOrientation o;
  for (int label = 1; label <= d.degree(); ++label) {
    const auto [p, q] = d.endpoints(label);
    o.tails.push_back((rng() & 1) ? p : q);
  }
  return o;
}

// Independent circuit oracle: every ordered choice of distinct vertices
// starting at its minimum, closed by an edge.
std::vector<OrientedCircuit> brute_force_circuits(const OrientedIntersectionGraph& g, int length) {
  std::vector<OrientedCircuit> out;
  const int n = g.vertices();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (std::popcount(mask) != length) {
      continue;
    }
    std::vector<int> verts = ChordSet(mask).labels();
    do {
      if (verts.front() != ChordSet(mask).min_label()) {
        continue;
      }
      bool closed = true;
      for (std::size_t i = 0; i < verts.size() && closed; ++i) {
        closed = g.adjacent(verts[i], verts[(i + 1) % verts.size()]);
      }
      if (closed && (length > 2 || verts[0] < verts[1])) {
        out.push_back({verts});
      }
    } while (std::next_permutation(verts.begin(), verts.end()));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("build_graph follows the arc rule") {
  const auto g = build_graph(D("1212"));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 2}});

  ChordOrientation flipped{{2, 1}};  // chord 1 tail at position 2
  CHECK(build_graph(D("1212"), flipped).edges() == std::vector<std::pair<int, int>>{{2, 1}});

  CHECK(build_graph(D("1122")).edges().empty());
  CHECK_THROWS_AS(build_graph(D("1212"), ChordOrientation{{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(build_graph(D("1212"), ChordOrientation{{0}}), std::invalid_argument);
}

TEST_CASE("smaller-arc rule examples") {
  const auto d = D("1212");
  const auto r = orientation_rule_smaller_arc(d, ChordOrientation::canonical(d));
  CHECK(r.graph.edges() == std::vector<std::pair<int, int>>{{1, 2}});
  CHECK(r.ties.empty());
  CHECK(orientation_rule_smaller_arc(D("1122"), ChordOrientation::canonical(D("1122"))).graph.edges().empty());
}

TEST_CASE("rule equivalence on all diagrams n <= 6 with random orientations") {
  std::mt19937_64 rng(11);
  std::size_t compared = 0;
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      for (int trial = 0; trial < 3; ++trial) {
        const auto o = trial == 0 ? ChordOrientation::canonical(d) : random_orientation(d, rng);
        const auto rule1 = build_graph(d, o);
        const auto rule2 = orientation_rule_smaller_arc(d, o);
        for (int a = 1; a <= n; ++a) {
          for (int b = a + 1; b <= n; ++b) {
            const bool tie = std::find(rule2.ties.begin(), rule2.ties.end(), std::pair{a, b}) != rule2.ties.end();
            if (!tie) {
              REQUIRE(rule1.direction(a, b) == rule2.graph.direction(a, b));
              ++compared;
            }
          }
        }
      }
    }
  }
  CHECK(compared > 0);
}

TEST_CASE("counting every endpoint on the circle breaks the rule equivalence") {
  // Chords a = 1, b = 4 cross; two other chords sit between the tails.
  const auto d = D("12233414");
  const auto o = ChordOrientation::canonical(d);
  const auto all = orientation_rule_smaller_arc(d, o, ArcMeasure::kAllEndpoints);
  REQUIRE(d.crosses(1, 4));
  CHECK(build_graph(d, o).direction(1, 4) == 1);
  CHECK(all.graph.direction(1, 4) == -1);
  CHECK(orientation_rule_smaller_arc(d, o).graph.direction(1, 4) == 1);
}

TEST_CASE("canonical orientation gives label-increasing edges, n <= 6") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      for (const auto& [from, to] : build_graph(d).edges()) {
        REQUIRE(from < to);
      }
    }
  }
}

TEST_CASE("intersection matrix") {
  const auto im = intersection_matrix(D("1212"));
  CHECK(im(0, 1) == -1);
  CHECK(im(1, 0) == 1);
  CHECK(im(0, 0) == 0);
  CHECK(intersection_matrix(D("11"))(0, 0) == 0);
  CHECK(intersection_matrix(D("11")).determinant() == 0);
  CHECK(im.determinant() == 1);
  const auto full = intersection_matrix(D("123123"));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      CHECK(full(i, j) == (i == j ? 0 : (i < j ? -1 : 1)));
    }
  }
  CHECK(intersection_matrix(D("12341234")).determinant() == 1);
  CHECK(intersection_matrix(ChordDiagram()).determinant() == 1);
}

TEST_CASE("IM is skew-symmetric, depends on crossings only, odd determinants vanish") {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      const auto im = intersection_matrix(d);
      const auto g = build_graph(d);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          REQUIRE(im(i, j) + im(j, i) == 0);
          REQUIRE((im(i, j) != 0) == g.adjacent(i + 1, j + 1));
        }
      }
      if (n % 2 == 1) {
        REQUIRE(im.determinant() == 0);
      }
    }
  }
}

TEST_CASE("circuit enumeration examples") {
  const auto two = circuits(build_graph(D("1212")), 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].vertices == std::vector<int>{1, 2});

  const auto four = circuits(build_graph(D("12341234")), 4);
  CHECK(four.size() == 6);
  CHECK(circuits(build_graph(D("1122")), 2).empty());
  CHECK(circuits(build_graph(D("1122")), 4).empty());
  CHECK_THROWS_AS(circuits(build_graph(D("1212")), 1), std::invalid_argument);
}

TEST_CASE("backtracking circuits agree with brute force, n <= 6") {
  std::mt19937_64 rng(3);
  for (int n = 2; n <= 6; ++n) {
    const auto all = enumerate_matchings(n);
    for (int trial = 0; trial < 60; ++trial) {
      const auto& d = all[rng() % all.size()];
      const auto g = build_graph(d);
      for (int length = 2; length <= n; ++length) {
        auto fast = circuits(g, length);
        std::sort(fast.begin(), fast.end());
        REQUIRE(fast == brute_force_circuits(g, length));
      }
    }
  }
}

TEST_CASE("descent counts") {
  CHECK(descent_count({{1, 2}}) == 1);
  CHECK(descent_count({{1, 2, 3, 4}}) == 1);
  CHECK(descent_count({{1, 3, 2, 4}}) == 2);
  CHECK(descent_count({{1, 4, 3, 2}}) == 3);
}

TEST_CASE("circuit signs") {
  const auto g2 = build_graph(D("1212"));
  CHECK(circuit_sign({{1, 2}}, g2) == -1);
  const auto g4 = build_graph(D("12341234"));
  CHECK(circuit_sign({{1, 2, 3, 4}}, g4) == -1);
  CHECK(circuit_sign({{1, 2, 4, 3}}, g4) == 1);
  CHECK_THROWS_AS(circuit_sign({{1, 2, 3}}, g4), std::invalid_argument);
}

TEST_CASE("R_k values") {
  CHECK(r_k(D("1212"), 1) == make_rational(-1, 2));
  CHECK(r_k(D("12341234"), 2) == 1);
  CHECK(r_k(D("1122"), 1) == 0);
  CHECK(signed_circuit_sum(D("12341234"), 2) == 1);
  CHECK(descent_sum(D("12341234"), 2) == 2);
  CHECK(signed_circuit_sum(D("1212"), 1) == -1);
}

TEST_CASE("sign-descent law, orientation invariance and the circuit-sum routes, n <= 6") {
  std::mt19937_64 rng(5);
  for (int n = 2; n <= 6; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      const auto g = build_graph(d);
      const auto flipped = build_graph(d, random_orientation(d, rng));
      for (int k = 1; 2 * k <= n; ++k) {
        for (const auto& h : circuits(g, 2 * k)) {
          const int sign = circuit_sign(h, g);
          REQUIRE(sign == ((descent_count(h) % 2 == 0) ? 1 : -1));
          REQUIRE(circuit_sign(h, flipped) == sign);
          OrientedCircuit reversed{{h.vertices.rbegin(), h.vertices.rend()}};
          REQUIRE(circuit_sign(reversed, g) == sign);
        }
        const BigInt signs = signed_circuit_sum(d, k);
        REQUIRE(signed_circuit_sum(d, k, random_orientation(d, rng)) == signs);
        const BigInt descents = descent_sum(d, k);
        REQUIRE(Rational(descents) == 2 * r_k(d, k));
        if (k >= 2) {
          REQUIRE(r_k(d, k) == Rational(signs));
          REQUIRE(descents == 2 * signs);
        } else {
          REQUIRE(descents == signs);
        }
      }
    }
  }
}

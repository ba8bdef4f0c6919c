#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "cdws/hopf.hpp"

using namespace cdws;

namespace {

ChordDiagram D(const char* code) { return parse_gauss_code(code); }

// log via explicit ordered set partitions: every non-empty first block,
// then the ordered partitions of what is left.
void ordered_partitions(const ChordDiagram& d, const WeightValuation& w, std::uint32_t left, int blocks,
                        const Polynomial& running, std::vector<Polynomial>& by_blocks) {
  if (left == 0) {
    by_blocks[static_cast<std::size_t>(blocks)] += running;
    return;
  }
  for (std::uint32_t t = left; t != 0; t = (t - 1) & left) {
    const Polynomial value = w(restrict(d, ChordSet(t)));
    if (!value.is_zero()) {
      ordered_partitions(d, w, left & ~t, blocks + 1, running * value, by_blocks);
    }
  }
}

Polynomial brute_force_log(const ChordDiagram& d, const WeightValuation& w) {
  std::vector<Polynomial> by_blocks(static_cast<std::size_t>(d.degree() + 1));
  ordered_partitions(d, w, d.chords().bits(), 0, Polynomial(1), by_blocks);
  Polynomial total;
  for (int j = 1; j <= d.degree(); ++j) {
    total += by_blocks[static_cast<std::size_t>(j)] * make_rational(j % 2 == 1 ? 1 : -1, j);
  }
  return total;
}

}  // namespace

TEST_CASE("coproduct splits") {
  CHECK(coproduct_splits(D("11")).size() == 2);
  CHECK(coproduct_splits(D("1212")).size() == 4);
  CHECK(coproduct_splits(ChordDiagram()).size() == 1);
  for (const auto& [first, second] : coproduct_splits(D("123123"))) {
    CHECK((first | second) == ChordSet::full(3));
    CHECK((first & second).empty());
  }
}

TEST_CASE("set partitions are counted by the Bell numbers") {
  const std::size_t bell[] = {1, 1, 2, 5, 15, 52, 203, 877};
  for (int n = 0; n <= 7; ++n) {
    const auto parts = set_partitions(ChordSet::full(n));
    CHECK(parts.size() == bell[n]);
    std::set<SetPartition> distinct(parts.begin(), parts.end());
    CHECK(distinct.size() == parts.size());
    for (const auto& p : parts) {
      ChordSet covered;
      int total = 0;
      for (std::size_t b = 0; b < p.size(); ++b) {
        REQUIRE_FALSE(p[b].empty());
        if (b > 0) {
          REQUIRE(p[b - 1].min_label() < p[b].min_label());
        }
        covered = covered | p[b];
        total += p[b].size();
      }
      REQUIRE(covered == ChordSet::full(n));
      REQUIRE(total == n);
    }
  }
}

TEST_CASE("primitive projection examples") {
  const auto pi = primitive_projection(D("1212"));
  REQUIRE(pi.terms.size() == 2);
  CHECK(pi.terms[0].partition == SetPartition{ChordSet{1, 2}});
  CHECK(pi.terms[0].coefficient == 1);
  CHECK(pi.terms[1].partition == SetPartition{ChordSet{1}, ChordSet{2}});
  CHECK(pi.terms[1].coefficient == -1);

  const auto three = primitive_projection(D("123123"));
  CHECK(three.terms.size() == 5);
  for (const auto& term : three.terms) {
    const std::size_t k = term.partition.size();
    CHECK(term.coefficient == (k == 1 ? 1 : k == 2 ? -1 : 2));
  }
  CHECK(primitive_projection(D("11")).terms.size() == 1);
  CHECK_THROWS_AS(primitive_projection(ChordDiagram()), std::invalid_argument);
}

TEST_CASE("multiplicative evaluation on the projection") {
  WeightSystems systems;
  const auto c = Polynomial::variable();
  CHECK(evaluate_multiplicative(systems.sl2_valuation(), primitive_projection(D("1212"))) == Rational(-2) * c);
  CHECK(evaluate_multiplicative(systems.conway_valuation(), primitive_projection(D("1212"))) == Polynomial(1));
  CHECK(evaluate_multiplicative(systems.sl2_valuation(), primitive_projection(D("1122"))).is_zero());
  CHECK(evaluate_multiplicative(systems.sl2_valuation(), primitive_projection(D("11"))) == c);
  const WeightValuation plain{"plain", [](const ChordDiagram&) { return Polynomial(1); }, false};
  CHECK_THROWS_AS(evaluate_multiplicative(plain, primitive_projection(D("11"))), std::invalid_argument);
}

TEST_CASE("logarithm examples") {
  WeightSystems systems;
  const auto wc = systems.conway_valuation();
  CHECK(log_weight_system(wc, D("11")).is_zero());
  CHECK(log_weight_system(wc, D("1212")) == Polynomial(1));
  CHECK(log_weight_system(wc, D("12341234")) == Polynomial(-2));
  CHECK(log_weight_system(systems.sl2_valuation(), D("11")) == Polynomial::variable());
  const WeightValuation shifted{"shifted", [](const ChordDiagram&) { return Polynomial(2); }, true};
  CHECK_THROWS_AS(log_weight_system(shifted, D("11")), std::invalid_argument);
}

TEST_CASE("log agrees with the explicit ordered-partition expansion, n <= 5") {
  WeightSystems systems;
  const auto sl2 = systems.sl2_valuation();
  const auto wc = systems.conway_valuation();
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : enumerate_matchings(n, true)) {
      REQUIRE(log_weight_system(sl2, d) == brute_force_log(d, sl2));
      REQUIRE(log_weight_system(wc, d) == brute_force_log(d, wc));
    }
  }
}

TEST_CASE("log of a multiplicative weight system is its value on the projection, n <= 6") {
  WeightSystems systems;
  const auto sl2 = systems.sl2_valuation();
  const auto wc = systems.conway_valuation();
  for (int n = 1; n <= 5; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      const auto pi = primitive_projection(d);
      REQUIRE(log_weight_system(sl2, d) == evaluate_multiplicative(sl2, pi));
      REQUIRE(log_weight_system(wc, d) == evaluate_multiplicative(wc, pi));
    }
  }
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = random_diagram(6, rng);
    const auto pi = primitive_projection(d);
    REQUIRE(log_weight_system(sl2, d) == evaluate_multiplicative(sl2, pi));
    REQUIRE(log_weight_system(wc, d) == evaluate_multiplicative(wc, pi));
  }
}

TEST_CASE("the projection kills products, total degree <= 5") {
  WeightSystems systems;
  const auto sl2 = systems.sl2_valuation();
  const auto wc = systems.conway_valuation();
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; a + b <= 5; ++b) {
      for (const auto& x : enumerate_matchings(a, true)) {
        for (const auto& y : enumerate_matchings(b, true)) {
          const auto pi = primitive_projection(product(x, y));
          REQUIRE(evaluate_multiplicative(sl2, pi).is_zero());
          REQUIRE(evaluate_multiplicative(wc, pi).is_zero());
        }
      }
    }
  }
}

TEST_CASE("deframing does not change values on the projection, 2 <= n <= 5") {
  WeightSystems systems;
  const auto sl2 = systems.sl2_valuation();
  const auto deframed = systems.deframed_valuation();
  for (int n = 2; n <= 5; ++n) {
    for (const auto& d : enumerate_matchings(n, true)) {
      const auto pi = primitive_projection(d);
      REQUIRE(evaluate_multiplicative(deframed, pi) == evaluate_multiplicative(sl2, pi));
    }
  }
  // Degree one is the exception: the deframed value of a single chord is 0.
  const auto pi = primitive_projection(D("11"));
  CHECK(evaluate_multiplicative(deframed, pi).is_zero());
  CHECK_FALSE(evaluate_multiplicative(sl2, pi).is_zero());
}

TEST_CASE("W_JJ on the projection is minus Conway on the projection, even n <= 6") {
  WeightSystems systems;
  const auto wc = systems.conway_valuation();
  for (int n = 2; n <= 6; n += 2) {
    for (const auto& d : enumerate_matchings(n, true)) {
      const auto pi = primitive_projection(d);
      REQUIRE(jj_on_combination(systems, pi) == -evaluate_multiplicative(wc, pi).coefficient(0));
    }
  }
}

TEST_CASE("block products agree with explicit product diagrams, n <= 4") {
  WeightSystems systems(Sl2Algorithm::kTrace, CacheKey::kExactCode);
  const auto sl2 = systems.sl2_valuation();
  for (int n = 1; n <= 4; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      const auto pi = primitive_projection(d);
      Polynomial explicit_sum;
      for (const auto& term : pi.terms) {
        ChordDiagram glued;
        for (ChordSet block : term.partition) {
          glued = product(glued, restrict(d, block));
        }
        REQUIRE(glued.degree() == n);
        explicit_sum += Polynomial(term.coefficient) * systems.sl2(glued);
      }
      REQUIRE(explicit_sum == evaluate_multiplicative(sl2, pi));
    }
  }
}

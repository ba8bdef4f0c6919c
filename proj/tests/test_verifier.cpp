#include <doctest.h>

#include <stdexcept>

#include "cdws/intersection_graph.hpp"
#include "cdws/verifier.hpp"

using namespace cdws;

namespace {

ChordDiagram D(const char* code) { return parse_gauss_code(code); }

bool same_values(const ChainReport& a, const ChainReport& b) {
  return a.diagram == b.diagram && a.r_m == b.r_m && a.descent_sum == b.descent_sum &&
         a.log_wc == b.log_wc && a.wc_on_pi == b.wc_on_pi && a.wjj_on_pi == b.wjj_on_pi &&
         a.sl2_on_pi == b.sl2_on_pi && a.sl2_2_on_pi == b.sl2_2_on_pi && a.pass == b.pass;
}

}  // namespace

TEST_CASE("chain on 1212") {
  WeightSystems systems;
  const auto r = verify_chain(D("1212"), systems);
  CHECK(r.m == 1);
  CHECK(r.r_m == make_rational(-1, 2));
  CHECK(r.descent_sum == -1);
  CHECK(r.signed_circuit_sum == -1);
  CHECK(r.log_wc == 1);
  CHECK(r.wc_on_pi == 1);
  CHECK(r.wjj_on_pi == -1);
  CHECK(r.sl2_on_pi == Rational(-2) * Polynomial::variable());
  CHECK(r.deframed_on_pi == r.sl2_on_pi);
  CHECK(r.sl2_2_on_pi == -Polynomial::variable());
  CHECK(r.lhs == -1);
  CHECK(r.rhs == -1);
  CHECK(r.r1_half_integer_convention);
  CHECK(r.pass);
}

TEST_CASE("chain on 1122 is identically zero") {
  WeightSystems systems;
  const auto r = verify_chain(D("1122"), systems);
  CHECK(r.r_m == 0);
  CHECK(r.log_wc == 0);
  CHECK(r.wjj_on_pi == 0);
  CHECK(r.sl2_on_pi.is_zero());
  CHECK(r.pass);
}

TEST_CASE("chain on 12341234") {
  WeightSystems systems;
  const auto r = verify_chain(D("12341234"), systems);
  CHECK(r.m == 2);
  CHECK(r.r_m == 1);
  CHECK(r.descent_sum == 2);
  CHECK(r.signed_circuit_sum == 1);
  CHECK(r.log_wc == -2);
  CHECK(r.wc_on_pi == -2);
  CHECK(r.wjj_on_pi == 2);
  CHECK(r.sl2_on_pi.degree() <= 2);
  CHECK(r.sl2_on_pi.coefficient(2) == 8);
  CHECK(r.lhs == 2);
  CHECK_FALSE(r.r1_half_integer_convention);
  CHECK(r.pass);
}

TEST_CASE("chain rejects odd and zero degree") {
  WeightSystems systems;
  CHECK_THROWS_AS(verify_chain(D("11"), systems), std::invalid_argument);
  CHECK_THROWS_AS(verify_chain(D("123123"), systems), std::invalid_argument);
  CHECK_THROWS_AS(verify_chain(ChordDiagram(), systems), std::invalid_argument);
  CHECK_THROWS_AS(verify_conjecture(0), std::invalid_argument);
}

TEST_CASE("conjecture sweeps for m = 1, 2") {
  const auto one = verify_conjecture(1);
  CHECK(one.processed == 3);
  CHECK(one.passed == 3);
  CHECK(one.all_passed());
  CHECK_FALSE(one.first_failure.has_value());

  const auto two = verify_conjecture(2);
  CHECK(two.processed == 105);
  CHECK(two.failed == 0);
  REQUIRE(two.reports.size() == 105);
  const auto all = enumerate_matchings(4);
  for (std::size_t i = 0; i < all.size(); ++i) {
    REQUIRE(two.reports[i].diagram == all[i]);
    REQUIRE(two.reports[i].r_m == r_k(all[i], 2));
  }
}

TEST_CASE("distinct rotations keep one report per class") {
  const auto reps = verify_conjecture(2, {.distinct_rotations = true});
  CHECK(reps.processed == enumerate_matchings(4, true).size());
  CHECK(reps.all_passed());
  for (const auto& r : reps.reports) {
    CHECK(canonical_form(r.diagram) == r.diagram);
  }
}

TEST_CASE("threads and the transfer evaluator leave reports unchanged") {
  const auto serial = verify_conjecture(2);
  const auto threaded = verify_conjecture(2, {.threads = 3});
  const auto fast = verify_conjecture(2, {.algorithm = Sl2Algorithm::kTransfer, .threads = 2});
  REQUIRE(threaded.reports.size() == serial.reports.size());
  REQUIRE(fast.reports.size() == serial.reports.size());
  for (std::size_t i = 0; i < serial.reports.size(); ++i) {
    REQUIRE(same_values(threaded.reports[i], serial.reports[i]));
    REQUIRE(same_values(fast.reports[i], serial.reports[i]));
  }
}

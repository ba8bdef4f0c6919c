#include "cdws/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "cdws/hopf.hpp"
#include "cdws/intersection_graph.hpp"

namespace cdws {

ChainReport verify_chain(const ChordDiagram& d, WeightSystems& systems) {
  if (d.degree() == 0 || d.degree() % 2 != 0) {
    throw std::invalid_argument("verify_chain needs a diagram of positive even degree, got " +
                                std::to_string(d.degree()));
  }
  ChainReport r;
  r.diagram = d;
  r.m = d.degree() / 2;
  r.r1_half_integer_convention = r.m == 1;

  r.descent_sum = descent_sum(d, r.m);
  r.signed_circuit_sum = signed_circuit_sum(d, r.m);
  r.r_m = Rational(r.descent_sum, BigInt(2));
  const Rational two_r = 2 * r.r_m;

  // A 2-cycle has one traversal, longer cycles have two with equal parity.
  const BigInt oriented_from_signs = r.m == 1 ? r.signed_circuit_sum : BigInt(2 * r.signed_circuit_sum);
  r.descent_link = two_r == Rational(r.descent_sum) && oriented_from_signs == r.descent_sum;

  const auto conway = systems.conway_valuation();
  r.log_wc = log_weight_system(conway, d).coefficient(0);
  r.log_link = two_r == -r.log_wc;

  const auto pi = primitive_projection(d);
  r.wc_on_pi = evaluate_multiplicative(conway, pi).coefficient(0);
  r.projection_link = two_r == -r.wc_on_pi && r.log_wc == r.wc_on_pi;

  r.wjj_on_pi = jj_on_combination(systems, pi);
  r.jj_link = two_r == r.wjj_on_pi;

  r.sl2_on_pi = evaluate_multiplicative(systems.sl2_valuation(), pi);
  r.deframed_on_pi = evaluate_multiplicative(systems.deframed_valuation(), pi);
  Rational expected_sl2 = r.r_m;
  for (int i = 0; i <= r.m; ++i) {
    expected_sl2 *= 2;
  }
  r.sl2_link = r.sl2_on_pi == r.deframed_on_pi && r.sl2_on_pi.degree() <= r.m &&
               r.sl2_on_pi.coefficient(r.m) == expected_sl2;

  r.sl2_2_on_pi = rescale_lambda(r.sl2_on_pi, Rational(2), d.degree());
  r.lhs = r.sl2_2_on_pi.coefficient(r.m);
  r.rhs = two_r;
  r.rescaled_link = r.sl2_2_on_pi.degree() <= r.m && r.lhs == r.rhs;

  r.pass = r.descent_link && r.log_link && r.projection_link && r.jj_link && r.sl2_link &&
           r.rescaled_link;
  return r;
}

ConjectureSummary verify_conjecture(int m, const VerifyOptions& options) {
  if (m < 1) {
    throw std::invalid_argument("m must be >= 1");
  }
  const auto diagrams = enumerate_matchings(2 * m, options.distinct_rotations);
  WeightSystems systems(options.algorithm);

  ConjectureSummary summary;
  summary.m = m;
  summary.reports.resize(diagrams.size());

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < diagrams.size(); i = next++) {
      summary.reports[i] = verify_chain(diagrams[i], systems);
    }
  };
  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back(worker);
    }
  }

  summary.processed = summary.reports.size();
  for (const auto& report : summary.reports) {
    if (report.pass) {
      ++summary.passed;
    } else {
      ++summary.failed;
      if (!summary.first_failure) {
        summary.first_failure = report;
      }
    }
  }
  return summary;
}

}  // namespace cdws

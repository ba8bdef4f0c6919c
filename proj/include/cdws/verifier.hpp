#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cdws/diagram.hpp"
#include "cdws/polynomial.hpp"
#include "cdws/rational.hpp"
#include "cdws/weight_systems.hpp"

namespace cdws {

/// Every quantity in the chain
///   2 R_m = sum_H (-1)^{d(H)} = -log W_C(D) = -W_C(pi(D)) = W_JJ(pi(D))
/// for one diagram of degree 2m, plus the resulting leading coefficients of
/// sl2 and sl2 at lambda = 2 on pi(D).
struct ChainReport {
  ChordDiagram diagram;
  int m = 0;

  Rational r_m;                // half the oriented descent sum
  BigInt descent_sum;          // sum over oriented circuits of (-1)^d(H)
  BigInt signed_circuit_sum;   // sum of signs over unoriented circuits
  Rational log_wc;
  Rational wc_on_pi;
  Rational wjj_on_pi;
  Polynomial sl2_on_pi;        // in c
  Polynomial deframed_on_pi;   // in c
  Polynomial sl2_2_on_pi;      // in c_2
  Rational lhs;                // coefficient of c_2^m in sl2_2_on_pi
  Rational rhs;                // 2 R_m

  bool descent_link = false;     // (a) 2R_m = descent sum = signed circuit route
  bool log_link = false;         // (b) 2R_m = -log W_C(D)
  bool projection_link = false;  // (c) 2R_m = -W_C(pi(D)), log W_C(D) = W_C(pi(D))
  bool jj_link = false;          // (d) 2R_m = W_JJ(pi(D))
  bool sl2_link = false;         // (e) sl2(pi) = deframed(pi), degree <= m, c^m coeff 2^{m+1} R_m
  bool rescaled_link = false;    // (f) sl2_2(pi) degree <= m, c_2^m coeff 2 R_m
  bool r1_half_integer_convention = false;
  bool pass = false;
};

/// Throws std::invalid_argument for odd or zero degree.
ChainReport verify_chain(const ChordDiagram& d, WeightSystems& systems);

struct VerifyOptions {
  bool distinct_rotations = false;
  Sl2Algorithm algorithm = Sl2Algorithm::kTrace;
  int threads = 1;
};

struct ConjectureSummary {
  int m = 0;
  std::size_t processed = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::optional<ChainReport> first_failure;
  std::vector<ChainReport> reports;  // in enumeration (code) order

  bool all_passed() const { return failed == 0; }
};

/// Runs verify_chain over every matching of degree 2m.
ConjectureSummary verify_conjecture(int m, const VerifyOptions& options = {});

}  // namespace cdws

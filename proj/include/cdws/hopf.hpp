#pragma once

#include <utility>
#include <vector>

#include "cdws/diagram.hpp"
#include "cdws/polynomial.hpp"
#include "cdws/rational.hpp"
#include "cdws/weight_systems.hpp"

namespace cdws {

/// An ordered split V(D) = first | second; either side may be empty.
struct CoproductSplit {
  ChordSet first;
  ChordSet second;
};

/// All 2^n ordered splits of the chord set.
std::vector<CoproductSplit> coproduct_splits(const ChordDiagram& d);

/// Unordered partition of a chord set into non-empty blocks. Blocks are kept
/// sorted by their smallest label.
using SetPartition = std::vector<ChordSet>;

/// All set partitions of `chords`, generated from restricted growth strings.
std::vector<SetPartition> set_partitions(ChordSet chords);

/// Formal rational combination of set partitions of V(D); each partition
/// stands for the product of the restrictions of D to its blocks.
struct PartitionCombination {
  struct Term {
    SetPartition partition;
    Rational coefficient;
  };

  ChordDiagram base;
  std::vector<Term> terms;
};

/// Projection onto primitives: coefficient (-1)^{k-1} (k-1)! on every
/// partition into k blocks. Throws std::invalid_argument for the empty diagram.
PartitionCombination primitive_projection(const ChordDiagram& d);

/// Sum over terms of coefficient * product over blocks of w(D|block).
/// Throws std::invalid_argument if `w` is not multiplicative.
Polynomial evaluate_multiplicative(const WeightValuation& w, const PartitionCombination& p);

/// log(1 + w0) with w0 = w - 1, expanded through ordered partitions:
/// sum over k of (-1)^{k-1}/k times the k-fold convolution power of w0.
/// Throws std::invalid_argument if w(empty) != 1.
Polynomial log_weight_system(const WeightValuation& w, const ChordDiagram& d);

/// W_JJ on a combination: the coefficient of k^n in
/// sum coefficient * product over blocks of the k-polynomials of the blocks.
Rational jj_on_combination(WeightSystems& systems, const PartitionCombination& p);

}  // namespace cdws

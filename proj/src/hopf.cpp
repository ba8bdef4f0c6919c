#include "cdws/hopf.hpp"

#include <stdexcept>

namespace cdws {

std::vector<CoproductSplit> coproduct_splits(const ChordDiagram& d) {
  const std::uint32_t full = d.chords().bits();
  std::vector<CoproductSplit> out;
  out.reserve(std::size_t{1} << d.degree());
  for (std::uint32_t s = 0;; ++s) {
    if ((s & ~full) == 0) {
      out.push_back({ChordSet(s), ChordSet(full & ~s)});
    }
    if (s == full) {
      break;
    }
  }
  return out;
}

namespace {

void grow(const std::vector<int>& labels, std::size_t next, SetPartition& blocks,
          std::vector<SetPartition>& out) {
  if (next == labels.size()) {
    out.push_back(blocks);
    return;
  }
  const ChordSet single(1u << (labels[next] - 1));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const ChordSet saved = blocks[b];
    blocks[b] = saved | single;
    grow(labels, next + 1, blocks, out);
    blocks[b] = saved;
  }
  blocks.push_back(single);
  grow(labels, next + 1, blocks, out);
  blocks.pop_back();
}

}  // namespace

std::vector<SetPartition> set_partitions(ChordSet chords) {
  std::vector<SetPartition> out;
  SetPartition blocks;
  const auto labels = chords.labels();
  grow(labels, 0, blocks, out);
  return out;
}

PartitionCombination primitive_projection(const ChordDiagram& d) {
  if (d.empty()) {
    throw std::invalid_argument("primitive projection is undefined on the empty diagram");
  }
  PartitionCombination combo{d, {}};
  for (auto& partition : set_partitions(d.chords())) {
    const int blocks = static_cast<int>(partition.size());
    Rational coeff = (blocks % 2 == 1) ? 1 : -1;
    for (int f = 2; f < blocks; ++f) {
      coeff *= f;
    }
    combo.terms.push_back({std::move(partition), coeff});
  }
  return combo;
}

Polynomial evaluate_multiplicative(const WeightValuation& w, const PartitionCombination& p) {
  if (!w.multiplicative) {
    throw std::invalid_argument("weight system '" + w.name + "' is not multiplicative");
  }
  Polynomial total;
  for (const auto& term : p.terms) {
    Polynomial product(term.coefficient);
    for (ChordSet block : term.partition) {
      if (product.is_zero()) {
        break;
      }
      product *= w(restrict(p.base, block));
    }
    total += product;
  }
  return total;
}

Polynomial log_weight_system(const WeightValuation& w, const ChordDiagram& d) {
  if (w(ChordDiagram()) != Polynomial(1)) {
    throw std::invalid_argument("logarithm needs w(empty) = 1; '" + w.name + "' differs");
  }
  const int n = d.degree();
  const std::uint32_t full = d.chords().bits();
  const std::size_t subsets = std::size_t{1} << n;
  // w0 on every sub-diagram; w0(empty) = 0.
  std::vector<Polynomial> w0(subsets);
  for (std::uint32_t s = 1; s <= full; ++s) {
    w0[s] = w(restrict(d, ChordSet(s)));
  }
  Polynomial result;
  // power[s] = (w0^j)(D|s): ordered partitions of s into j non-empty blocks.
  std::vector<Polynomial> power = w0;
  for (int j = 1; j <= n; ++j) {
    if (j > 1) {
      std::vector<Polynomial> next(subsets);
      for (std::uint32_t s = 1; s <= full; ++s) {
        // First block t is a non-empty proper subset of s.
        for (std::uint32_t t = (s - 1) & s; t != 0; t = (t - 1) & s) {
          if (!w0[t].is_zero() && !power[s & ~t].is_zero()) {
            next[s] += w0[t] * power[s & ~t];
          }
        }
      }
      power = std::move(next);
    }
    const Rational weight = make_rational((j % 2 == 1) ? 1 : -1, j);
    result += power[full] * weight;
  }
  return result;
}

Rational jj_on_combination(WeightSystems& systems, const PartitionCombination& p) {
  Polynomial total;
  for (const auto& term : p.terms) {
    Polynomial product(term.coefficient);
    for (ChordSet block : term.partition) {
      if (product.is_zero()) {
        break;
      }
      product *= systems.jj_polynomial(restrict(p.base, block));
    }
    total += product;
  }
  return total.coefficient(p.base.degree());
}

}  // namespace cdws

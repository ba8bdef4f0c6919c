#include "cdws/weight_systems.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "cdws/intersection_graph.hpp"

namespace cdws {

namespace {

// Overflow in a ladder word throws instead of wrapping.
using WordInt = boost::multiprecision::checked_int128_t;

enum Generator : int { kH = 0, kE = 1, kF = 2 };

// Dual pairs (x, x') with respect to the trace form of the standard
// representation: (H, H/2), (E, F), (F, E). The factor 1/2 of the first pair
// is tracked separately so that all word arithmetic stays integral.
constexpr Generator kPairFirst[3] = {kH, kE, kF};
constexpr Generator kPairSecond[3] = {kH, kF, kE};

BigInt to_big(const WordInt& v) { return BigInt(v.str()); }

}  // namespace

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = 1;
  }
  return m;
}

Rational RationalMatrix::trace() const {
  Rational t = 0;
  for (int i = 0; i < n_; ++i) {
    t += (*this)(i, i);
  }
  return t;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int l = 0; l < a.size(); ++l) {
      if (a(i, l) == 0) {
        continue;
      }
      for (int j = 0; j < a.size(); ++j) {
        out(i, j) += a(i, l) * b(l, j);
      }
    }
  }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      out(i, j) = a(i, j) + b(i, j);
    }
  }
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  return a + Rational(-1) * b;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a) {
  RationalMatrix out(a.size());
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      out(i, j) = s * a(i, j);
    }
  }
  return out;
}

RationalMatrix IrrepMatrices::casimir() const {
  return make_rational(1, 2) * (h * h) + e * f + f * e;
}

IrrepMatrices irrep_matrices(int k) {
  if (k < 1) {
    throw std::invalid_argument("irrep dimension must be >= 1, got " + std::to_string(k));
  }
  IrrepMatrices m{k, RationalMatrix(k), RationalMatrix(k), RationalMatrix(k)};
  for (int j = 0; j < k; ++j) {
    m.h(j, j) = k - 1 - 2 * j;
    if (j + 1 < k) {
      m.f(j + 1, j) = 1;
    }
    if (j >= 1) {
      m.e(j - 1, j) = j * (k - j);
    }
  }
  return m;
}

Rational casimir_value(int k) { return make_rational(static_cast<long long>(k) * k - 1, 2); }

Polynomial casimir_in_k() {
  return Polynomial(std::vector<Rational>{make_rational(-1, 2), Rational(0), make_rational(1, 2)});
}

namespace {

// A product of ladder operators is a monomial matrix: column j is either zero
// or a single entry at row `row[j]`.
struct MonomialWord {
  std::vector<int> row;
  std::vector<WordInt> value;
};

// Right-multiplies `in` by generator g of the k-dimensional irrep.
void right_multiply(const MonomialWord& in, Generator g, int k, MonomialWord& out) {
  for (int j = 0; j < k; ++j) {
    const auto uj = static_cast<std::size_t>(j);
    switch (g) {
      case kH:
        out.row[uj] = in.row[uj];
        out.value[uj] = in.value[uj] * (k - 1 - 2 * j);
        break;
      case kF:
        // F v_j = v_{j+1}: column j of the product is column j+1 of `in`.
        if (j + 1 < k) {
          out.row[uj] = in.row[uj + 1];
          out.value[uj] = in.value[uj + 1];
        } else {
          out.value[uj] = 0;
        }
        break;
      case kE:
        // E v_j = j(k-j) v_{j-1}.
        if (j >= 1) {
          out.row[uj] = in.row[uj - 1];
          out.value[uj] = in.value[uj - 1] * (j * (k - j));
        } else {
          out.value[uj] = 0;
        }
        break;
    }
  }
}

class TraceSum {
 public:
  TraceSum(const ChordDiagram& d, int k, bool dual_first)
      : d_(d), k_(k), dual_first_(dual_first), assignment_(static_cast<std::size_t>(d.degree()), 0) {
    const auto depth = static_cast<std::size_t>(d.points() + 1);
    words_.resize(depth);
    for (auto& w : words_) {
      w.row.assign(static_cast<std::size_t>(k), 0);
      w.value.assign(static_cast<std::size_t>(k), 0);
    }
    for (int j = 0; j < k; ++j) {
      words_[0].row[static_cast<std::size_t>(j)] = j;
      words_[0].value[static_cast<std::size_t>(j)] = 1;
    }
  }

  // Returns the sum over assignments of 2^{n - #H pairs} * trace.
  BigInt run() {
    total_ = 0;
    descend(0, 0);
    return total_;
  }

 private:
  void descend(int position, int h_pairs) {
    const auto& word = words_[static_cast<std::size_t>(position)];
    if (position == d_.points()) {
      WordInt trace = 0;
      for (int j = 0; j < k_; ++j) {
        if (word.row[static_cast<std::size_t>(j)] == j) {
          trace += word.value[static_cast<std::size_t>(j)];
        }
      }
      total_ += to_big(trace) * (BigInt(1) << (d_.degree() - h_pairs));
      return;
    }
    if (std::all_of(word.value.begin(), word.value.end(), [](const WordInt& v) { return v == 0; })) {
      return;
    }
    const int label = d_.at(position);
    auto& next = words_[static_cast<std::size_t>(position + 1)];
    auto& slot = assignment_[static_cast<std::size_t>(label - 1)];
    const bool first = d_.endpoints(label).first == position;
    if (first) {
      for (int pair = 0; pair < 3; ++pair) {
        slot = pair;
        right_multiply(word, dual_first_ ? kPairSecond[pair] : kPairFirst[pair], k_, next);
        descend(position + 1, h_pairs + (pair == 0 ? 1 : 0));
      }
    } else {
      right_multiply(word, dual_first_ ? kPairFirst[slot] : kPairSecond[slot], k_, next);
      descend(position + 1, h_pairs);
    }
  }

  const ChordDiagram& d_;
  int k_;
  bool dual_first_;
  std::vector<int> assignment_;
  std::vector<MonomialWord> words_;
  BigInt total_;
};

}  // namespace

Rational sl2_trace_value(const ChordDiagram& d, int k, bool dual_first) {
  if (k < 1) {
    throw std::invalid_argument("irrep dimension must be >= 1, got " + std::to_string(k));
  }
  TraceSum sum(d, k, dual_first);
  const BigInt scaled = sum.run();
  return Rational(scaled, (BigInt(1) << d.degree()) * k);
}

Rational sl2_transfer_value(const ChordDiagram& d, int k) {
  if (k < 1) {
    throw std::invalid_argument("irrep dimension must be >= 1, got " + std::to_string(k));
  }
  // A row covector e_i^T times a ladder operator is again a basis covector:
  // H keeps i with factor k-1-2i, F moves i -> i-1, E moves i -> i+1 with
  // factor (i+1)(k-i-1). Every chord contributes one E and one F or two H, so
  // a word returns to its starting index and the trace is the total weight.
  // State key: index in the low byte, 2 bits per open chord above it.
  using StateMap = std::unordered_map<std::uint64_t, BigInt>;
  StateMap states;
  for (int i = 0; i < k; ++i) {
    states.emplace(static_cast<std::uint64_t>(i), BigInt(1));
  }
  auto apply = [k](Generator g, int i, BigInt& weight) -> int {
    switch (g) {
      case kH:
        weight *= (k - 1 - 2 * i);
        return i;
      case kF:
        return i - 1;
      case kE:
        weight *= (i + 1) * (k - i - 1);
        return i + 1;
    }
    return -1;
  };
  for (int position = 0; position < d.points(); ++position) {
    const int label = d.at(position);
    const int shift = 8 + 2 * (label - 1);
    const bool first = d.endpoints(label).first == position;
    StateMap next;
    for (const auto& [key, weight] : states) {
      const int index = static_cast<int>(key & 0xffu);
      if (first) {
        for (int pair = 0; pair < 3; ++pair) {
          BigInt w = weight;
          const int to = apply(kPairFirst[pair], index, w);
          if (to < 0 || to >= k || w == 0) {
            continue;
          }
          const std::uint64_t open = (key >> 8) | (static_cast<std::uint64_t>(pair + 1) << (shift - 8));
          next[(open << 8) | static_cast<std::uint64_t>(to)] += w;
        }
      } else {
        const int pair = static_cast<int>((key >> shift) & 3u) - 1;
        BigInt w = weight;
        const int to = apply(kPairSecond[pair], index, w);
        if (to < 0 || to >= k || w == 0) {
          continue;
        }
        // Non-H pairs count twice to absorb the 1/2 of the (H, H/2) pair.
        if (pair != 0) {
          w *= 2;
        }
        const std::uint64_t cleared = key & ~(std::uint64_t{3} << shift);
        next[(cleared & ~std::uint64_t{0xff}) | static_cast<std::uint64_t>(to)] += w;
      }
    }
    states = std::move(next);
  }
  BigInt total = 0;
  for (const auto& [key, weight] : states) {
    total += weight;
  }
  return Rational(total, (BigInt(1) << d.degree()) * k);
}

namespace {

Polynomial interpolate_sl2(const ChordDiagram& d, Sl2Algorithm algorithm) {
  const int n = d.degree();
  std::vector<std::pair<Rational, Rational>> points;
  for (int k = 1; k <= n + 1; ++k) {
    const Rational value =
        algorithm == Sl2Algorithm::kTrace ? sl2_trace_value(d, k) : sl2_transfer_value(d, k);
    points.emplace_back(casimir_value(k), value);
  }
  Polynomial p = lagrange_interpolate(points);
  const bool shape_ok = n == 0 ? p == Polynomial(1)
                               : (p.degree() == n && p.leading_coefficient() == 1 &&
                                  p.coefficient(0) == 0);
  if (!shape_ok) {
    throw std::logic_error("sl2 interpolation for " + d.to_string() +
                           " is not monic of full degree with zero constant term: " +
                           p.to_string());
  }
  return p;
}

template <typename Sl2>
Polynomial deframe_with(const ChordDiagram& d, Sl2&& sl2) {
  const int n = d.degree();
  const std::uint32_t full = ChordSet::full(n).bits();
  Polynomial total;
  for (std::uint32_t removed = 0; removed <= full; ++removed) {
    if ((removed & ~full) != 0) {
      continue;
    }
    const ChordSet kept(full & ~removed);
    const int j = std::popcount(removed);
    const Polynomial factor = Polynomial::monomial(j, (j % 2 == 0) ? Rational(1) : Rational(-1));
    total += factor * sl2(restrict(d, kept));
    if (removed == full) {
      break;
    }
  }
  return total;
}

}  // namespace

Polynomial sl2_weight(const ChordDiagram& d, Sl2Algorithm algorithm) {
  return interpolate_sl2(d, algorithm);
}

Rational conway_weight(const ChordDiagram& d) {
  return Rational(intersection_matrix(d).determinant());
}

Polynomial deframe_sl2(const ChordDiagram& d) {
  return deframe_with(d, [](const ChordDiagram& r) { return sl2_weight(r); });
}

Polynomial jj_k_polynomial(const ChordDiagram& d) { return deframe_sl2(d).compose(casimir_in_k()); }

Rational jj_weight(const ChordDiagram& d) { return jj_k_polynomial(d).coefficient(d.degree()); }

Polynomial sl2_lambda_weight(const ChordDiagram& d, const Rational& lambda) {
  if (lambda == 0) {
    throw std::invalid_argument("lambda must be nonzero");
  }
  return rescale_lambda(sl2_weight(d), lambda, d.degree());
}

std::string WeightSystems::key_of(const ChordDiagram& d) const {
  const ChordDiagram keyed = key_ == CacheKey::kRotationClass ? canonical_form(d) : d;
  std::string key;
  key.reserve(static_cast<std::size_t>(keyed.points()));
  for (int label : keyed.code()) {
    key.push_back(static_cast<char>(label));
  }
  return key;
}

Polynomial WeightSystems::sl2(const ChordDiagram& d) {
  return sl2_.get_or_compute(key_of(d), [&] { return interpolate_sl2(d, algorithm_); });
}

Rational WeightSystems::conway(const ChordDiagram& d) {
  return conway_.get_or_compute(key_of(d), [&] { return conway_weight(d); });
}

Polynomial WeightSystems::deframed(const ChordDiagram& d) {
  return deframed_.get_or_compute(key_of(d), [&] {
    return deframe_with(d, [this](const ChordDiagram& r) { return sl2(r); });
  });
}

Polynomial WeightSystems::jj_polynomial(const ChordDiagram& d) {
  return deframed(d).compose(casimir_in_k());
}

Rational WeightSystems::jj(const ChordDiagram& d) { return jj_polynomial(d).coefficient(d.degree()); }

Polynomial WeightSystems::sl2_lambda(const ChordDiagram& d, const Rational& lambda) {
  if (lambda == 0) {
    throw std::invalid_argument("lambda must be nonzero");
  }
  return rescale_lambda(sl2(d), lambda, d.degree());
}

WeightValuation WeightSystems::sl2_valuation() {
  return {"sl2", [this](const ChordDiagram& d) { return sl2(d); }, true};
}

WeightValuation WeightSystems::sl2_lambda_valuation(const Rational& lambda) {
  if (lambda == 0) {
    throw std::invalid_argument("lambda must be nonzero");
  }
  return {"sl2-lambda", [this, lambda](const ChordDiagram& d) { return sl2_lambda(d, lambda); },
          true};
}

WeightValuation WeightSystems::conway_valuation() {
  return {"conway", [this](const ChordDiagram& d) { return Polynomial(conway(d)); }, true};
}

WeightValuation WeightSystems::deframed_valuation() {
  return {"deframed-sl2", [this](const ChordDiagram& d) { return deframed(d); }, true};
}

WeightValuation WeightSystems::jj_valuation() {
  return {"jj", [this](const ChordDiagram& d) { return Polynomial(jj(d)); }, true};
}

WeightValuation unit_valuation() {
  return {"unit", [](const ChordDiagram& d) { return Polynomial(d.empty() ? 1 : 0); }, true};
}

ChordDiagram random_diagram(int n, std::mt19937_64& rng) {
  std::vector<int> code;
  for (int label = 1; label <= n; ++label) {
    code.push_back(label);
    code.push_back(label);
  }
  std::shuffle(code.begin(), code.end(), rng);
  return ChordDiagram(std::move(code));
}

OracleGateResult transfer_oracle_gate(int random_samples, std::uint64_t seed) {
  OracleGateResult result;
  auto check = [&](const ChordDiagram& d) {
    ++result.diagrams_checked;
    if (result.passed && sl2_weight(d, Sl2Algorithm::kTrace) != sl2_weight(d, Sl2Algorithm::kTransfer)) {
      result.passed = false;
      result.first_mismatch = d;
    }
  };
  for (int n = 0; n <= 4; ++n) {
    for (const auto& d : enumerate_matchings(n)) {
      check(d);
    }
  }
  std::mt19937_64 rng(seed);
  for (int i = 0; i < random_samples; ++i) {
    check(random_diagram(6, rng));
  }
  return result;
}

}  // namespace cdws

#pragma once

#include <functional>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "cdws/diagram.hpp"
#include "cdws/polynomial.hpp"
#include "cdws/rational.hpp"

namespace cdws {

/// Square matrix with exact rational entries, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(int n) : n_(n), entries_(static_cast<std::size_t>(n * n)) {}

  static RationalMatrix identity(int n);

  int size() const { return n_; }
  const Rational& operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  Rational& operator()(int i, int j) { return entries_[static_cast<std::size_t>(i * n_ + j)]; }

  Rational trace() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  int n_;
  std::vector<Rational> entries_;
};

/// The k-dimensional irreducible representation of sl2 in the basis
/// v_0..v_{k-1}: H v_j = (k-1-2j) v_j, F v_j = v_{j+1}, E v_j = j(k-j) v_{j-1}.
struct IrrepMatrices {
  int k = 0;
  RationalMatrix e{0};
  RationalMatrix f{0};
  RationalMatrix h{0};

  /// H^2/2 + EF + FE; equals (k^2-1)/2 times the identity.
  RationalMatrix casimir() const;
};

IrrepMatrices irrep_matrices(int k);

/// Value of the Casimir element on the k-dimensional irrep, (k^2-1)/2.
Rational casimir_value(int k);

/// (k^2 - 1)/2 as a polynomial in k.
Polynomial casimir_in_k();

enum class Sl2Algorithm {
  /// Sum over dual-basis assignments of traces of ladder-operator words.
  kTrace,
  /// Transfer-matrix sweep over weight vectors and open-chord states.
  kTransfer,
};

/// Trace evaluation in the k-dimensional irrep divided by k. With
/// `dual_first` the dual element goes on the first endpoint of each chord.
Rational sl2_trace_value(const ChordDiagram& d, int k, bool dual_first = false);

/// Same quantity as sl2_trace_value, computed by the transfer sweep.
Rational sl2_transfer_value(const ChordDiagram& d, int k);

/// sl2 weight system as a polynomial in the Casimir c, interpolated from the
/// irreps of dimension 1..n+1. Throws std::logic_error if the result is not
/// monic of degree n with zero constant term.
Polynomial sl2_weight(const ChordDiagram& d, Sl2Algorithm algorithm = Sl2Algorithm::kTrace);

/// det IM(D).
Rational conway_weight(const ChordDiagram& d);

/// sum over J subset V(D) of (-c)^{|J|} w_sl2(D restricted to V \ J).
Polynomial deframe_sl2(const ChordDiagram& d);

/// The deframed value with c = (k^2-1)/2 substituted, as a polynomial in k.
/// Its coefficients are the weight-system-level b_{n,j}.
Polynomial jj_k_polynomial(const ChordDiagram& d);

/// Coefficient of k^n in jj_k_polynomial.
Rational jj_weight(const ChordDiagram& d);

/// sl2 value in the normalization scaled by lambda, as a polynomial in c_lambda.
Polynomial sl2_lambda_weight(const ChordDiagram& d, const Rational& lambda);

/// A weight system viewed as a map from diagrams to polynomials (rational
/// valued systems return constants).
struct WeightValuation {
  std::string name;
  std::function<Polynomial(const ChordDiagram&)> evaluate;
  bool multiplicative = false;

  Polynomial operator()(const ChordDiagram& d) const { return evaluate(d); }
};

/// Thread-safe memo table keyed by a diagram code string. Inserts are
/// idempotent: a racing second insert keeps the first value.
template <typename Value>
class MemoTable {
 public:
  template <typename Compute>
  Value get_or_compute(const std::string& key, Compute&& compute) {
    {
      std::shared_lock lock(mutex_);
      auto it = table_.find(key);
      if (it != table_.end()) {
        return it->second;
      }
    }
    Value value = compute();
    std::unique_lock lock(mutex_);
    return table_.emplace(key, std::move(value)).first->second;
  }

  std::size_t size() const {
    std::shared_lock lock(mutex_);
    return table_.size();
  }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<std::string, Value> table_;
};

/// How WeightSystems keys its memo tables.
enum class CacheKey {
  /// Canonical rotation-class representative; shares values across rotations.
  kRotationClass,
  /// The exact code as given; no rotation invariance is assumed.
  kExactCode,
};

/// Memoizing evaluator for all weight systems.
class WeightSystems {
 public:
  explicit WeightSystems(Sl2Algorithm algorithm = Sl2Algorithm::kTrace,
                         CacheKey key = CacheKey::kRotationClass)
      : algorithm_(algorithm), key_(key) {}

  WeightSystems(const WeightSystems&) = delete;
  WeightSystems& operator=(const WeightSystems&) = delete;

  Sl2Algorithm algorithm() const { return algorithm_; }

  Polynomial sl2(const ChordDiagram& d);
  Rational conway(const ChordDiagram& d);
  Polynomial deframed(const ChordDiagram& d);
  Polynomial jj_polynomial(const ChordDiagram& d);
  Rational jj(const ChordDiagram& d);
  Polynomial sl2_lambda(const ChordDiagram& d, const Rational& lambda);

  WeightValuation sl2_valuation();
  WeightValuation sl2_lambda_valuation(const Rational& lambda);
  WeightValuation conway_valuation();
  WeightValuation deframed_valuation();
  WeightValuation jj_valuation();

  std::size_t cached_sl2_values() const { return sl2_.size(); }

 private:
  std::string key_of(const ChordDiagram& d) const;

  Sl2Algorithm algorithm_;
  CacheKey key_;
  MemoTable<Polynomial> sl2_;
  MemoTable<Rational> conway_;
  MemoTable<Polynomial> deframed_;
};

/// The unit weight system: 1 on the empty diagram, 0 elsewhere.
WeightValuation unit_valuation();

/// Uniformly random perfect matching on 2n points.
ChordDiagram random_diagram(int n, std::mt19937_64& rng);

/// Agreement check between the trace and transfer sl2 evaluators: every
/// diagram of degree <= 4 plus `random_samples` random degree-6 diagrams.
struct OracleGateResult {
  bool passed = true;
  int diagrams_checked = 0;
  std::optional<ChordDiagram> first_mismatch;
};

OracleGateResult transfer_oracle_gate(int random_samples = 500, std::uint64_t seed = 20240611);

}  // namespace cdws

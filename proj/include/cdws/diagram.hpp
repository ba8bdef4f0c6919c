#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cdws {

/// Largest degree the bitmask-based machinery supports.
inline constexpr int kMaxDegree = 16;

/// A set of chord labels (1-based), stored as a bitmask where bit i is label i+1.
class ChordSet {
 public:
  constexpr ChordSet() = default;
  constexpr explicit ChordSet(std::uint32_t bits) : bits_(bits) {}
  ChordSet(std::initializer_list<int> labels);

  static constexpr ChordSet full(int n) {
    return ChordSet(n >= 32 ? ~0u : ((1u << n) - 1u));
  }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int label) const {
    return label >= 1 && label <= 32 && ((bits_ >> (label - 1)) & 1u) != 0;
  }
  /// Smallest label in the set; 0 when empty.
  constexpr int min_label() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }

  std::vector<int> labels() const;

  constexpr ChordSet operator|(ChordSet o) const { return ChordSet(bits_ | o.bits_); }
  constexpr ChordSet operator&(ChordSet o) const { return ChordSet(bits_ & o.bits_); }
  /// Set difference.
  constexpr ChordSet operator-(ChordSet o) const { return ChordSet(bits_ & ~o.bits_); }

  constexpr auto operator<=>(const ChordSet&) const = default;

 private:
  std::uint32_t bits_ = 0;
};

/// A chord diagram stored as its Gauss code: a double-occurrence word read
/// counter-clockwise from the cut point at position 0. Labels are always
/// normalized so that they appear in increasing order of first occurrence.
class ChordDiagram {
 public:
  ChordDiagram() = default;

  /// Accepts any labels that each occur exactly twice and relabels them by
  /// first occurrence. Throws std::invalid_argument otherwise.
  explicit ChordDiagram(std::vector<int> code);

  int degree() const { return static_cast<int>(code_.size() / 2); }
  bool empty() const { return code_.empty(); }
  std::span<const int> code() const { return code_; }
  int at(int position) const { return code_[static_cast<std::size_t>(position)]; }
  int points() const { return static_cast<int>(code_.size()); }

  /// Positions of the two endpoints of `label`, first < second.
  std::pair<int, int> endpoints(int label) const {
    return endpoints_[static_cast<std::size_t>(label - 1)];
  }

  ChordSet chords() const { return ChordSet::full(degree()); }

  /// True when the endpoints of chords a and b alternate around the circle.
  bool crosses(int a, int b) const;

  /// Compact form ("1212") for degree <= 9, space separated otherwise.
  std::string to_string() const;

  friend bool operator==(const ChordDiagram& a, const ChordDiagram& b) { return a.code_ == b.code_; }
  friend auto operator<=>(const ChordDiagram& a, const ChordDiagram& b) { return a.code_ <=> b.code_; }

 private:
  std::vector<int> code_;
  std::vector<std::pair<int, int>> endpoints_;
};

/// The arbitrary orientation of chords: for each chord (index label-1), the
/// position of its tail. The head is the other endpoint.
struct ChordOrientation {
  std::vector<int> tails;

  /// Tail at the first endpoint after the cut, for every chord.
  static ChordOrientation canonical(const ChordDiagram& d);

  /// Throws std::invalid_argument if a tail is not an endpoint of its chord.
  void validate(const ChordDiagram& d) const;

  int tail(int label) const { return tails[static_cast<std::size_t>(label - 1)]; }
  int head(const ChordDiagram& d, int label) const;
};

ChordDiagram parse_gauss_code(std::string_view text);

/// Rotation by `shift` positions: position `shift` becomes the new cut.
ChordDiagram rotate(const ChordDiagram& d, int shift);

/// Lexicographically least relabeled rotation.
ChordDiagram canonical_form(const ChordDiagram& d);

/// Keeps only the chords in `subset`; circle order is preserved.
ChordDiagram restrict(const ChordDiagram& d, ChordSet subset);
ChordDiagram restrict(const ChordDiagram& d, const std::vector<int>& labels);

/// Connected sum at the cut: concatenation of the codes.
ChordDiagram product(const ChordDiagram& lhs, const ChordDiagram& rhs);

/// All perfect matchings on 2n points, sorted by code. With
/// `distinct_rotations` only canonical rotation-class representatives remain.
std::vector<ChordDiagram> enumerate_matchings(int n, bool distinct_rotations = false);

/// (2n-1)!!
std::uint64_t matching_count(int n);

bool has_isolated_chord(const ChordDiagram& d);

/// One instance of the four-term relation. The moving endpoint of chord `a`
/// is placed immediately before / after each endpoint of chord `b`.
struct FourTermQuadruple {
  ChordDiagram before_first;   // D1
  ChordDiagram after_first;    // D2
  ChordDiagram before_second;  // D3
  ChordDiagram after_second;   // D4

  std::array<const ChordDiagram*, 4> members() const {
    return {&before_first, &after_first, &before_second, &after_second};
  }
};

/// Signs s with s1*w(D1) + s2*w(D2) + s3*w(D3) + s4*w(D4) = 0 for Lie-algebra
/// weight systems. Fixed by exhaustive search against the sl2 trace evaluator.
inline constexpr std::array<int, 4> kFourTermSigns = {+1, -1, +1, -1};

std::vector<FourTermQuadruple> four_term_quadruples(int n);

/// Quadruples generated from a single diagram.
std::vector<FourTermQuadruple> four_term_quadruples(const ChordDiagram& d);

}  // namespace cdws

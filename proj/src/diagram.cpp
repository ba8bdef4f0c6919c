#include "cdws/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cdws {

ChordSet::ChordSet(std::initializer_list<int> labels) {
  for (int label : labels) {
    if (label < 1 || label > 32) {
      throw std::invalid_argument("chord label out of range: " + std::to_string(label));
    }
    bits_ |= 1u << (label - 1);
  }
}

std::vector<int> ChordSet::labels() const {
  std::vector<int> out;
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

ChordDiagram::ChordDiagram(std::vector<int> code) {
  if (code.size() % 2 != 0) {
    throw std::invalid_argument("Gauss code has an odd number of entries (" +
                                std::to_string(code.size()) + ")");
  }
  // (original label, new label, occurrences); codes are short, a linear scan is fine.
  struct Seen {
    int original;
    int relabeled;
    int count;
  };
  std::vector<Seen> seen;
  seen.reserve(code.size() / 2);
  for (int& label : code) {
    auto it = std::find_if(seen.begin(), seen.end(), [&](const Seen& s) { return s.original == label; });
    if (it == seen.end()) {
      seen.push_back({label, static_cast<int>(seen.size()) + 1, 1});
      label = seen.back().relabeled;
    } else {
      ++it->count;
      label = it->relabeled;
    }
  }
  for (const auto& s : seen) {
    if (s.count != 2) {
      throw std::invalid_argument("label " + std::to_string(s.original) + " occurs " +
                                  std::to_string(s.count) + " times, expected 2");
    }
  }
  if (seen.size() > static_cast<std::size_t>(kMaxDegree)) {
    throw std::invalid_argument("diagram degree exceeds " + std::to_string(kMaxDegree));
  }
  endpoints_.assign(seen.size(), {-1, -1});
  for (std::size_t i = 0; i < code.size(); ++i) {
    auto& ends = endpoints_[static_cast<std::size_t>(code[i] - 1)];
    (ends.first < 0 ? ends.first : ends.second) = static_cast<int>(i);
  }
  code_ = std::move(code);
}

bool ChordDiagram::crosses(int a, int b) const {
  if (a == b) {
    return false;
  }
  const auto [a1, a2] = endpoints(a);
  const auto [b1, b2] = endpoints(b);
  const bool b1_inside = a1 < b1 && b1 < a2;
  const bool b2_inside = a1 < b2 && b2 < a2;
  return b1_inside != b2_inside;
}

std::string ChordDiagram::to_string() const {
  std::string out;
  const bool compact = degree() <= 9;
  for (std::size_t i = 0; i < code_.size(); ++i) {
    if (!compact && i > 0) {
      out += ' ';
    }
    out += std::to_string(code_[i]);
  }
  return out;
}

ChordOrientation ChordOrientation::canonical(const ChordDiagram& d) {
  ChordOrientation o;
  for (int label = 1; label <= d.degree(); ++label) {
    o.tails.push_back(d.endpoints(label).first);
  }
  return o;
}

void ChordOrientation::validate(const ChordDiagram& d) const {
  if (tails.size() != static_cast<std::size_t>(d.degree())) {
    throw std::invalid_argument("orientation has " + std::to_string(tails.size()) +
                                " tails for a diagram of degree " + std::to_string(d.degree()));
  }
  for (int label = 1; label <= d.degree(); ++label) {
    const auto [p, q] = d.endpoints(label);
    const int t = tail(label);
    if (t != p && t != q) {
      throw std::invalid_argument("tail position " + std::to_string(t) +
                                  " is not an endpoint of chord " + std::to_string(label));
    }
  }
}

int ChordOrientation::head(const ChordDiagram& d, int label) const {
  const auto [p, q] = d.endpoints(label);
  return tail(label) == p ? q : p;
}

ChordDiagram parse_gauss_code(std::string_view text) {
  std::vector<int> code;
  const bool tokenized = std::any_of(text.begin(), text.end(), [](char ch) {
    return ch == ',' || std::isspace(static_cast<unsigned char>(ch));
  });
  if (tokenized) {
    std::string token;
    auto flush = [&] {
      if (token.empty()) {
        return;
      }
      std::size_t used = 0;
      int value = 0;
      try {
        value = std::stoi(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw std::invalid_argument("bad Gauss code token '" + token + "'");
      }
      code.push_back(value);
      token.clear();
    };
    for (char ch : text) {
      if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else {
        token += ch;
      }
    }
    flush();
  } else {
    for (char ch : text) {
      if (!std::isalnum(static_cast<unsigned char>(ch))) {
        throw std::invalid_argument(std::string("bad Gauss code character '") + ch + "'");
      }
      code.push_back(static_cast<unsigned char>(ch));
    }
  }
  return ChordDiagram(std::move(code));
}

ChordDiagram rotate(const ChordDiagram& d, int shift) {
  const int len = d.points();
  if (len == 0) {
    return d;
  }
  shift = ((shift % len) + len) % len;
  std::vector<int> code(d.code().begin(), d.code().end());
  std::rotate(code.begin(), code.begin() + shift, code.end());
  return ChordDiagram(std::move(code));
}

ChordDiagram canonical_form(const ChordDiagram& d) {
  ChordDiagram best = d;
  for (int shift = 1; shift < d.points(); ++shift) {
    ChordDiagram candidate = rotate(d, shift);
    if (candidate < best) {
      best = std::move(candidate);
    }
  }
  return best;
}

ChordDiagram restrict(const ChordDiagram& d, ChordSet subset) {
  if ((subset - d.chords()).bits() != 0) {
    throw std::invalid_argument("restriction set contains labels outside 1.." +
                                std::to_string(d.degree()));
  }
  std::vector<int> code;
  code.reserve(static_cast<std::size_t>(2 * subset.size()));
  for (int label : d.code()) {
    if (subset.contains(label)) {
      code.push_back(label);
    }
  }
  return ChordDiagram(std::move(code));
}

ChordDiagram restrict(const ChordDiagram& d, const std::vector<int>& labels) {
  ChordSet subset;
  for (int label : labels) {
    if (label < 1 || label > d.degree()) {
      throw std::invalid_argument("chord label " + std::to_string(label) + " outside 1.." +
                                  std::to_string(d.degree()));
    }
    subset = subset | ChordSet(1u << (label - 1));
  }
  return restrict(d, subset);
}

ChordDiagram product(const ChordDiagram& lhs, const ChordDiagram& rhs) {
  std::vector<int> code(lhs.code().begin(), lhs.code().end());
  for (int label : rhs.code()) {
    code.push_back(label + lhs.degree());
  }
  return ChordDiagram(std::move(code));
}

namespace {

void match_from(std::vector<int>& code, int next_label, std::vector<ChordDiagram>& out) {
  const auto first_free = std::find(code.begin(), code.end(), 0);
  if (first_free == code.end()) {
    out.emplace_back(code);
    return;
  }
  const auto start = static_cast<std::size_t>(first_free - code.begin());
  code[start] = next_label;
  for (std::size_t partner = start + 1; partner < code.size(); ++partner) {
    if (code[partner] == 0) {
      code[partner] = next_label;
      match_from(code, next_label + 1, out);
      code[partner] = 0;
    }
  }
  code[start] = 0;
}

}  // namespace

std::vector<ChordDiagram> enumerate_matchings(int n, bool distinct_rotations) {
  if (n < 0 || n > kMaxDegree) {
    throw std::invalid_argument("degree out of range: " + std::to_string(n));
  }
  std::vector<ChordDiagram> out;
  std::vector<int> code(static_cast<std::size_t>(2 * n), 0);
  match_from(code, 1, out);
  if (distinct_rotations) {
    std::erase_if(out, [](const ChordDiagram& d) { return canonical_form(d) != d; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t matching_count(int n) {
  std::uint64_t count = 1;
  for (int odd = 2 * n - 1; odd > 1; odd -= 2) {
    count *= static_cast<std::uint64_t>(odd);
  }
  return count;
}

bool has_isolated_chord(const ChordDiagram& d) {
  for (int a = 1; a <= d.degree(); ++a) {
    bool isolated = true;
    for (int b = 1; b <= d.degree() && isolated; ++b) {
      isolated = !d.crosses(a, b);
    }
    if (isolated) {
      return true;
    }
  }
  return false;
}

std::vector<FourTermQuadruple> four_term_quadruples(const ChordDiagram& d) {
  std::vector<FourTermQuadruple> out;
  const std::vector<int> code(d.code().begin(), d.code().end());
  for (int moving = 0; moving < d.points(); ++moving) {
    const int a = code[static_cast<std::size_t>(moving)];
    std::vector<int> rest = code;
    rest.erase(rest.begin() + moving);
    auto insert_at = [&](std::size_t index) {
      std::vector<int> placed = rest;
      placed.insert(placed.begin() + static_cast<std::ptrdiff_t>(index), a);
      return ChordDiagram(std::move(placed));
    };
    for (int b = 1; b <= d.degree(); ++b) {
      if (b == a) {
        continue;
      }
      std::size_t first = rest.size();
      std::size_t second = rest.size();
      for (std::size_t i = 0; i < rest.size(); ++i) {
        if (rest[i] == b) {
          (first == rest.size() ? first : second) = i;
        }
      }
      out.push_back({insert_at(first), insert_at(first + 1), insert_at(second),
                     insert_at(second + 1)});
    }
  }
  return out;
}

std::vector<FourTermQuadruple> four_term_quadruples(int n) {
  if (n < 2) {
    throw std::invalid_argument("four-term quadruples need degree >= 2");
  }
  std::vector<FourTermQuadruple> out;
  for (const auto& d : enumerate_matchings(n)) {
    auto part = four_term_quadruples(d);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace cdws

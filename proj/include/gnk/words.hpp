#pragma once

// Alphabets and involutive word machinery shared by every group in the
// toolkit. All generators are involutions, so a word's inverse is its
// reversal and free reduction only ever deletes adjacent equal letters.

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace gnk {

/// Raised when an argument violates an operation's precondition.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A strand index i in {1, ..., n}. Kept as a plain integer; range checks
/// happen where a group context n is known.
using Strand = int;

/// Ordered pair label (i, j), i != j. (i, j) and (j, i) are distinct labels.
struct OrderedPair {
  Strand first = 0;
  Strand second = 0;

  static OrderedPair make(Strand i, Strand j) {
    if (i < 1 || j < 1) throw ParameterError("strand index must be >= 1");
    if (i == j) throw ParameterError("ordered pair label needs distinct strands");
    return OrderedPair{i, j};
  }

  bool within(int n) const { return first <= n && second <= n; }

  auto operator<=>(const OrderedPair&) const = default;
};

/// Two ordered-pair labels name the same underlying 2-element set.
inline bool same_underlying(const OrderedPair& a, const OrderedPair& b) {
  return (a.first == b.first && a.second == b.second) ||
         (a.first == b.second && a.second == b.first);
}

/// Opaque labels (anything ordered) have no structure beyond equality.
template <class Label>
bool same_underlying(const Label& a, const Label& b) {
  return a == b;
}

/// Generator a'_{ijk} of the backtick group: a triple of distinct strands
/// taken up to reversal. The middle strand is semantic and never moves;
/// the stored form keeps min(left, right) in the left slot.
struct Triple {
  Strand left = 0;
  Strand middle = 0;
  Strand right = 0;

  static Triple make(Strand i, Strand j, Strand k) {
    if (i < 1 || j < 1 || k < 1) throw ParameterError("strand index must be >= 1");
    if (i == j || j == k || i == k)
      throw ParameterError("triple generator needs three distinct strands");
    if (k < i) std::swap(i, k);
    return Triple{i, j, k};
  }

  bool within(int n) const { return left <= n && middle <= n && right <= n; }

  std::array<Strand, 3> sorted_strands() const {
    std::array<Strand, 3> s{left, middle, right};
    std::sort(s.begin(), s.end());
    return s;
  }

  auto operator<=>(const Triple&) const = default;
};

/// Generator a_{ijk} of the plain group: an unordered triple.
struct PlainTriple {
  std::array<Strand, 3> strands{};

  static PlainTriple make(Strand i, Strand j, Strand k) {
    // Validation is shared with the backtick generator.
    return PlainTriple{Triple::make(i, j, k).sorted_strands()};
  }

  bool within(int n) const { return strands[2] <= n; }

  auto operator<=>(const PlainTriple&) const = default;
};

/// Generator a_{p,q} of a G^2-type group: an unordered pair of distinct
/// labels, stored with p < q.
template <class Label>
struct PairGenerator {
  Label p{};
  Label q{};

  static PairGenerator make(Label a, Label b) {
    if (a == b) throw ParameterError("pair generator needs two distinct labels");
    if (b < a) std::swap(a, b);
    return PairGenerator{a, b};
  }

  bool has(const Label& x) const { return p == x || q == x; }

  auto operator<=>(const PairGenerator&) const = default;
};

/// Generator of G_{n(n-1)}^2 with ordered-pair labels.
using PairPairGenerator = PairGenerator<OrderedPair>;

/// A word over one alphabet. The empty word is the identity. Different
/// generator kinds are different word types and never mix.
template <class G>
using Word = std::vector<G>;

/// Odd-multiplicity support of a word: the generators that occur an odd
/// number of times. Every relator of the groups here uses each generator
/// an even number of times, so this is a group invariant.
template <class G>
using ParityVector = std::set<G>;

template <class G>
Word<G> concat(const Word<G>& u, const Word<G>& v) {
  Word<G> out;
  out.reserve(u.size() + v.size());
  out.insert(out.end(), u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

/// Deletes adjacent equal pairs until none remain. Free reduction of
/// involutions is confluent, so one left-to-right stack pass suffices.
template <class G>
Word<G> free_reduce_involutive(const Word<G>& w) {
  Word<G> out;
  out.reserve(w.size());
  for (const auto& x : w) {
    if (!out.empty() && out.back() == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

/// Inverse of a word of involutions.
template <class G>
Word<G> reverse_word(const Word<G>& w) {
  return Word<G>(w.rbegin(), w.rend());
}

template <class G>
bool has_adjacent_equal(const Word<G>& w) {
  return std::adjacent_find(w.begin(), w.end()) != w.end();
}

template <class G>
ParityVector<G> parity_vector(const Word<G>& w) {
  ParityVector<G> odd;
  for (const auto& x : w) {
    auto [it, inserted] = odd.insert(x);
    if (!inserted) odd.erase(it);
  }
  return odd;
}

template <class G>
ParityVector<G> parity_xor(const ParityVector<G>& a, const ParityVector<G>& b) {
  ParityVector<G> out;
  std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                std::inserter(out, out.end()));
  return out;
}

// Text rendering. Labels of strands >= 10 would be ambiguous when
// juxtaposed, so the dotted form is used throughout.

inline std::string to_string(const OrderedPair& x) {
  return std::to_string(x.first) + "." + std::to_string(x.second);
}

inline std::string to_string(const Triple& t) {
  return "a'(" + std::to_string(t.left) + "," + std::to_string(t.middle) + "," +
         std::to_string(t.right) + ")";
}

inline std::string to_string(const PlainTriple& t) {
  return "a{" + std::to_string(t.strands[0]) + "," + std::to_string(t.strands[1]) +
         "," + std::to_string(t.strands[2]) + "}";
}

inline std::string to_string(int x) { return std::to_string(x); }

template <class Label>
std::string to_string(const PairGenerator<Label>& g) {
  using gnk::to_string;
  return "a(" + to_string(g.p) + "|" + to_string(g.q) + ")";
}

template <class G>
std::string to_string(const Word<G>& w) {
  using gnk::to_string;
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_string(w[i]);
  }
  return s;
}

inline std::ostream& operator<<(std::ostream& os, const OrderedPair& x) {
  return os << to_string(x);
}
inline std::ostream& operator<<(std::ostream& os, const Triple& x) {
  return os << to_string(x);
}
inline std::ostream& operator<<(std::ostream& os, const PlainTriple& x) {
  return os << to_string(x);
}
template <class Label>
std::ostream& operator<<(std::ostream& os, const PairGenerator<Label>& x) {
  return os << to_string(x);
}

}  // namespace gnk

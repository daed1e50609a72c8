#pragma once

// Endomorphisms of the free product of n(n-1) copies of Z_2 with generators
// a_{ij} (ordered pairs), and the action g of G'_n^3 on it:
//
//   g(a'_{ijk}):  a_{ij} -> a_{ik} a_{ij} a_{ik},
//                 a_{kj} -> a_{ki} a_{kj} a_{ki},
//                 every other generator fixed.
//
// Freely reduced words are a normal form in a free product of Z_2's, so
// equality of automorphisms is equality of reduced images.

#include <map>

#include "gnk/g3_groups.hpp"
#include "gnk/words.hpp"

namespace gnk {

/// A freely reduced word in the generators a_{ij}.
using Z2FreeWord = Word<OrderedPair>;

class FreeAutomorphism {
 public:
  FreeAutomorphism() = default;
  explicit FreeAutomorphism(int n) : n_(n) {
    if (n < 2) throw ParameterError("free product needs n >= 2");
  }

  static FreeAutomorphism identity(int n) { return FreeAutomorphism(n); }

  int rank() const { return n_; }

  /// Sets the image of x. Stored reduced; identity images are dropped.
  void set_image(const OrderedPair& x, const Z2FreeWord& w) {
    check_label(x);
    for (const auto& y : w) check_label(y);
    auto reduced = free_reduce_involutive(w);
    if (reduced.size() == 1 && reduced.front() == x)
      images_.erase(x);
    else
      images_[x] = std::move(reduced);
  }

  Z2FreeWord image(const OrderedPair& x) const {
    auto it = images_.find(x);
    return it == images_.end() ? Z2FreeWord{x} : it->second;
  }

  /// Generators not mapped to themselves, with their images.
  const std::map<OrderedPair, Z2FreeWord>& moved() const { return images_; }

  bool is_identity() const { return images_.empty(); }

  bool operator==(const FreeAutomorphism& o) const {
    return n_ == o.n_ && images_ == o.images_;
  }

 private:
  void check_label(const OrderedPair& x) const {
    if (x.first == x.second || x.first < 1 || x.second < 1 || !x.within(n_))
      throw ParameterError("label " + to_string(x) + " outside rank " + std::to_string(n_));
  }

  int n_ = 0;
  std::map<OrderedPair, Z2FreeWord> images_;
};

/// Letterwise substitution followed by free reduction.
inline Z2FreeWord apply(const FreeAutomorphism& aut, const Z2FreeWord& w) {
  Z2FreeWord out;
  for (const auto& x : w) {
    for (const auto& y : aut.image(x)) {
      if (!out.empty() && out.back() == y)
        out.pop_back();
      else
        out.push_back(y);
    }
  }
  return out;
}

/// (a o b)(x) = a(b(x)).
inline FreeAutomorphism compose(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw ParameterError("composing automorphisms of different rank");
  FreeAutomorphism out(a.rank());
  for (const auto& x : ordered_pair_labels(a.rank())) out.set_image(x, gnk::apply(a, b.image(x)));
  return out;
}

inline bool aut_equal(const FreeAutomorphism& a, const FreeAutomorphism& b) {
  if (a.rank() != b.rank()) throw ParameterError("comparing automorphisms of different rank");
  return a == b;
}

inline FreeAutomorphism g_of_generator(const Triple& t, int n) {
  if (!t.within(n)) throw ParameterError("generator " + to_string(t) + " outside rank " + std::to_string(n));
  const Strand i = t.left, j = t.middle, k = t.right;
  const OrderedPair ij{i, j}, ik{i, k}, kj{k, j}, ki{k, i};
  FreeAutomorphism g(n);
  g.set_image(ij, {ik, ij, ik});
  g.set_image(kj, {ki, kj, ki});
  return g;
}

/// g(w_1 ... w_m) = g(w_1) o ... o g(w_m).
inline FreeAutomorphism g_of_word(const Word<Triple>& w, int n) {
  FreeAutomorphism out = FreeAutomorphism::identity(n);
  for (const auto& t : w) out = compose(out, g_of_generator(t, n));
  return out;
}

struct GRelatorCheck {
  RelatorTag tag;
  Word<Triple> relator;
  bool identity = false;
};

struct GVerification {
  int n = 0;
  std::vector<GRelatorCheck> checks;
  bool involutions = true;
  CheckSummary summary = CheckSummary::pass;
};

/// Evaluates g on every relator of G'_n^3 and checks each generator image
/// is an involution.
inline GVerification verify_g_well_defined(int n) {
  if (n < 3 || n > kMaxVerifyRank)
    throw ParameterError("verification supports 3 <= n <= " + std::to_string(kMaxVerifyRank));
  GVerification report;
  report.n = n;
  const auto relators = enumerate_relators<Triple>(n);
  report.checks = detail::parallel_map<GRelatorCheck>(relators.size(), [&](std::size_t i) {
    return GRelatorCheck{relators[i].tag, relators[i].word,
                         g_of_word(relators[i].word, n).is_identity()};
  });
  for (const auto& t : backtick_generators(n)) {
    const auto g = g_of_generator(t, n);
    if (!compose(g, g).is_identity()) report.involutions = false;
  }
  const bool all = std::all_of(report.checks.begin(), report.checks.end(),
                               [](const auto& c) { return c.identity; });
  report.summary = (all && report.involutions) ? CheckSummary::pass : CheckSummary::fail;
  return report;
}

}  // namespace gnk

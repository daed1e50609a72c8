#pragma once

// The group G_N^2 over pair generators a_{p,q}:
//
//   a_{p,q}^2 = 1
//   a_{p,q} a_{r,s} = a_{r,s} a_{p,q}      p, q, r, s pairwise distinct
//   (a_{p,q} a_{p,r} a_{q,r})^2 = 1        p, q, r pairwise distinct
//
// Length-preserving moves are adjacent commutations and exchange moves
// a_{p,q} a_{p,r} a_{q,r} -> a_{q,r} a_{p,r} a_{p,q}. A word is minimal iff
// nothing in its length-preserving class has two adjacent equal letters.
//
// The class search works on commutation classes: each state is the
// lexicographically least word of its class under commutations (its
// lexicographic normal form), so a word with k mutually commuting letters
// costs one state rather than k! of them.

#include <cstdint>
#include <cstdlib>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "gnk/words.hpp"

namespace gnk {

enum class CommutationMode {
  /// p, q, r, s pairwise distinct as ordered-pair labels.
  ordered,
  /// p, q, r, s pairwise distinct as underlying 2-element sets.
  unordered_sets,
};

inline std::string to_string(CommutationMode m) {
  return m == CommutationMode::ordered ? "ordered" : "unordered-sets";
}

inline CommutationMode parse_mode(const std::string& s) {
  if (s == "ordered") return CommutationMode::ordered;
  if (s == "unordered-sets" || s == "unordered_sets") return CommutationMode::unordered_sets;
  throw ParameterError("unknown commutation mode '" + s + "'");
}

inline constexpr std::size_t kDefaultBudget = 1'000'000;

/// Default search budget, overridable through GNK_BUDGET.
inline std::size_t default_budget() {
  if (const char* env = std::getenv("GNK_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return kDefaultBudget;
}

template <class Label>
bool labels_distinct(const Label& a, const Label& b, CommutationMode mode) {
  if (mode == CommutationMode::ordered) return !(a == b);
  return !same_underlying(a, b);
}

template <class Label>
bool commutes(const PairGenerator<Label>& x, const PairGenerator<Label>& y,
              CommutationMode mode) {
  const Label l[4] = {x.p, x.q, y.p, y.q};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (!labels_distinct(l[i], l[j], mode)) return false;
  return true;
}

/// Labels (p, q, r) with x = a_{p,q}, y = a_{p,r}, z = a_{q,r}, if the three
/// letters match the exchange pattern under `mode`. Any ordering of the three
/// sides of a label triangle matches.
template <class Label>
std::optional<std::array<Label, 3>> exchange_pattern(const PairGenerator<Label>& x,
                                                     const PairGenerator<Label>& y,
                                                     const PairGenerator<Label>& z,
                                                     CommutationMode mode) {
  if (x == y) return std::nullopt;
  Label p, q, r;
  if (y.has(x.p)) {
    p = x.p;
    q = x.q;
  } else if (y.has(x.q)) {
    p = x.q;
    q = x.p;
  } else {
    return std::nullopt;
  }
  r = (y.p == p) ? y.q : y.p;
  if (r == q) return std::nullopt;
  if (!(z == PairGenerator<Label>::make(q, r))) return std::nullopt;
  if (!labels_distinct(p, q, mode) || !labels_distinct(p, r, mode) ||
      !labels_distinct(q, r, mode))
    return std::nullopt;
  return std::array<Label, 3>{p, q, r};
}

/// Applies the exchange move to w[pos..pos+2] if the letters match.
template <class Label>
std::optional<Word<PairGenerator<Label>>> exchange_applicable(
    const Word<PairGenerator<Label>>& w, std::size_t pos, CommutationMode mode) {
  if (pos + 2 >= w.size()) throw ParameterError("exchange position out of range");
  if (!exchange_pattern(w[pos], w[pos + 1], w[pos + 2], mode)) return std::nullopt;
  auto out = w;
  std::swap(out[pos], out[pos + 2]);
  return out;
}

/// Every word one commutation swap or one exchange move away from w.
template <class Label>
std::set<Word<PairGenerator<Label>>> neighbors(const Word<PairGenerator<Label>>& w,
                                               CommutationMode mode) {
  std::set<Word<PairGenerator<Label>>> out;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != w[i + 1] && commutes(w[i], w[i + 1], mode)) {
      auto v = w;
      std::swap(v[i], v[i + 1]);
      out.insert(std::move(v));
    }
  }
  for (std::size_t i = 0; i + 2 < w.size(); ++i)
    if (auto v = exchange_applicable(w, i, mode)) out.insert(std::move(*v));
  return out;
}

enum class ReductionStatus { minimal_certified, budget_exhausted };

inline std::string to_string(ReductionStatus s) {
  return s == ReductionStatus::minimal_certified ? "MINIMAL_CERTIFIED" : "BUDGET_EXHAUSTED";
}

enum class MoveKind { free_cancel, exchange, cancel };

inline std::string to_string(MoveKind k) {
  switch (k) {
    case MoveKind::free_cancel: return "free-cancel";
    case MoveKind::exchange: return "exchange";
    case MoveKind::cancel: return "cancel";
  }
  return "?";
}

/// One recorded step of a reduction. Commutations are implicit: `result` is
/// the lexicographic normal form after the step, and `positions` index the
/// rearranged word the step acted on.
template <class G>
struct MoveRecord {
  MoveKind kind;
  std::vector<std::size_t> positions;
  Word<G> result;
};

template <class Label>
struct ReductionCertificate {
  using G = PairGenerator<Label>;
  Word<G> input;
  Word<G> output;
  ReductionStatus status = ReductionStatus::minimal_certified;
  CommutationMode mode = CommutationMode::ordered;
  std::size_t states_explored = 0;
  std::optional<std::vector<MoveRecord<G>>> move_trace;
};

enum class MinimalityStatus { minimal_certified, not_minimal, budget_exhausted };

inline std::string to_string(MinimalityStatus s) {
  switch (s) {
    case MinimalityStatus::minimal_certified: return "MINIMAL_CERTIFIED";
    case MinimalityStatus::not_minimal: return "NOT_MINIMAL";
    case MinimalityStatus::budget_exhausted: return "BUDGET_EXHAUSTED";
  }
  return "?";
}

template <class Label>
struct MinimalityCertificate {
  using G = PairGenerator<Label>;
  Word<G> word;
  MinimalityStatus status = MinimalityStatus::minimal_certified;
  CommutationMode mode = CommutationMode::ordered;
  std::size_t states_explored = 0;
  /// For NOT_MINIMAL: a class member in which a cancellable pair is visible.
  std::optional<Word<G>> witness;
};

enum class Verdict { equal, distinct, unknown };
enum class Evidence { reduction_to_empty, parity_certificate, exhausted_minimal_search, budget_exhausted };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::equal: return "EQUAL";
    case Verdict::distinct: return "DISTINCT";
    case Verdict::unknown: return "UNKNOWN";
  }
  return "?";
}

inline std::string to_string(Evidence e) {
  switch (e) {
    case Evidence::reduction_to_empty: return "reduction-to-empty";
    case Evidence::parity_certificate: return "parity-certificate";
    case Evidence::exhausted_minimal_search: return "exhausted-minimal-search";
    case Evidence::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

template <class Label>
struct EqualityVerdict {
  Verdict verdict = Verdict::unknown;
  Evidence evidence = Evidence::budget_exhausted;
  /// Reduction of u * reverse(v); absent when parity alone decided.
  std::optional<ReductionCertificate<Label>> certificate;
};

namespace detail {

using Code = std::u16string;

/// Dense letter ids for the letters of one search. Ids follow generator
/// order, so comparing codes compares words lexicographically.
template <class Label>
class Alphabet {
 public:
  using G = PairGenerator<Label>;

  Alphabet(const Word<G>& w, CommutationMode mode) : mode_(mode) {
    letters_ = w;
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (letters_.size() >= 0xFFFF) throw ParameterError("alphabet too large for search");
    const std::size_t k = letters_.size();
    commute_.assign(k * k, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        commute_[i * k + j] = (i != j && commutes(letters_[i], letters_[j], mode)) ? 1 : 0;
  }

  Code encode(const Word<G>& w) const {
    Code c;
    c.reserve(w.size());
    for (const auto& x : w) {
      auto it = std::lower_bound(letters_.begin(), letters_.end(), x);
      c.push_back(static_cast<char16_t>(it - letters_.begin()));
    }
    return c;
  }

  Word<G> decode(const Code& c) const {
    Word<G> w;
    w.reserve(c.size());
    for (char16_t x : c) w.push_back(letters_[x]);
    return w;
  }

  bool commute(char16_t a, char16_t b) const {
    return commute_[static_cast<std::size_t>(a) * letters_.size() + b] != 0;
  }

  bool exchange(char16_t a, char16_t b, char16_t c) const {
    return exchange_pattern(letters_[a], letters_[b], letters_[c], mode_).has_value();
  }

 private:
  CommutationMode mode_;
  Word<G> letters_;
  std::vector<std::uint8_t> commute_;
};

/// Rows of bits, one row per word position.
class BitRows {
 public:
  BitRows(std::size_t rows, std::size_t bits)
      : words_((bits + 63) / 64), data_(rows * words_, 0) {}

  void set(std::size_t r, std::size_t b) { data_[r * words_ + b / 64] |= (1ULL << (b % 64)); }
  bool test(std::size_t r, std::size_t b) const {
    return (data_[r * words_ + b / 64] >> (b % 64)) & 1ULL;
  }
  void or_into(std::size_t dst, std::size_t src) {
    for (std::size_t i = 0; i < words_; ++i) data_[dst * words_ + i] |= data_[src * words_ + i];
  }
  /// Popcount of (row r1 of this) & (row r2 of other).
  std::size_t and_count(std::size_t r1, const BitRows& other, std::size_t r2) const {
    std::size_t n = 0;
    for (std::size_t i = 0; i < words_; ++i)
      n += static_cast<std::size_t>(
          __builtin_popcountll(data_[r1 * words_ + i] & other.data_[r2 * words_ + i]));
    return n;
  }

 private:
  std::size_t words_;
  std::vector<std::uint64_t> data_;
};

/// Dependence order of the positions of a word: a precedes b when a < b and
/// they are joined by a chain of non-commuting letters.
struct Poset {
  BitRows pred;
  BitRows succ;

  template <class Label>
  Poset(const Code& w, const Alphabet<Label>& alpha)
      : pred(w.size(), w.size()), succ(w.size(), w.size()) {
    const std::size_t n = w.size();
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t a = 0; a < b; ++a) {
        if (pred.test(b, a)) continue;
        if (w[a] == w[b] || !alpha.commute(w[a], w[b])) {
          pred.or_into(b, a);
          pred.set(b, a);
        }
      }
    }
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t a = 0; a < b; ++a)
        if (pred.test(b, a)) succ.set(a, b);
  }

  /// b covers a: a < b with nothing in between.
  bool covers(std::size_t a, std::size_t b) const {
    return pred.test(b, a) && succ.and_count(a, pred, b) == 0;
  }
};

/// Lexicographically least word in the commutation class of w.
template <class Label>
Code normal_form(const Code& w, const Alphabet<Label>& alpha) {
  const std::size_t n = w.size();
  std::vector<std::size_t> blockers(n, 0);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < b; ++a)
      if (w[a] == w[b] || !alpha.commute(w[a], w[b])) ++blockers[b];
  std::vector<bool> taken(n, false);
  Code out;
  out.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t i = 0; i < n; ++i)
      if (!taken[i] && blockers[i] == 0 && (pick == n || w[i] < w[pick])) pick = i;
    taken[pick] = true;
    out.push_back(w[pick]);
    for (std::size_t b = pick + 1; b < n; ++b)
      if (!taken[b] && (w[pick] == w[b] || !alpha.commute(w[pick], w[b]))) --blockers[b];
  }
  return out;
}

/// First pair of equal letters that some commutation-equivalent word
/// places side by side.
inline std::optional<std::pair<std::size_t, std::size_t>> find_cancellable(const Code& w,
                                                                          const Poset& po) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] == w[b]) {
        if (po.covers(a, b)) return std::make_pair(a, b);
        break;  // a later equal letter sits above this one
      }
  return std::nullopt;
}

struct ExchangeSite {
  std::size_t a, b, c;
};

/// Triples of positions that some commutation-equivalent word makes
/// consecutive and that match the exchange pattern.
template <class Label>
std::vector<ExchangeSite> exchange_sites(const Code& w, const Poset& po,
                                         const Alphabet<Label>& alpha) {
  std::vector<ExchangeSite> out;
  const std::size_t n = w.size();
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!po.covers(a, b)) continue;
      for (std::size_t c = b + 1; c < n; ++c) {
        if (!po.covers(b, c)) continue;
        if (!alpha.exchange(w[a], w[b], w[c])) continue;
        // Only b may lie between a and c.
        if (po.succ.and_count(a, po.pred, c) != 1) continue;
        out.push_back({a, b, c});
      }
    }
  return out;
}

/// A linearization of w with a, b, c consecutive, exchanged in place.
/// Returns the new word and the position of the exchanged segment.
inline std::pair<Code, std::size_t> apply_exchange(const Code& w, const Poset& po,
                                                   const ExchangeSite& s) {
  Code out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(s.a));
  Code after;
  for (std::size_t d = s.a + 1; d < s.c; ++d) {
    if (d == s.b) continue;
    if (po.pred.test(d, s.a))
      after.push_back(w[d]);
    else
      out.push_back(w[d]);
  }
  const std::size_t at = out.size();
  out.push_back(w[s.c]);
  out.push_back(w[s.b]);
  out.push_back(w[s.a]);
  out += after;
  out.append(w.begin() + static_cast<std::ptrdiff_t>(s.c) + 1, w.end());
  return {out, at};
}

template <class Label>
class ClassSearch {
 public:
  using G = PairGenerator<Label>;

  ClassSearch(const Alphabet<Label>& alpha, std::size_t budget, bool tracing)
      : alpha_(alpha), budget_(budget), tracing_(tracing) {}

  std::size_t states() const { return states_; }
  bool over_budget() const { return states_ > budget_; }
  std::vector<MoveRecord<G>>& trace() { return trace_; }

  /// Cancels visible pairs until the class representative has none.
  Code cancel_all(Code w) {
    w = normal_form(w, alpha_);
    for (;;) {
      Poset po(w, alpha_);
      auto pair = find_cancellable(w, po);
      if (!pair) return w;
      w.erase(pair->second, 1);
      w.erase(pair->first, 1);
      w = normal_form(w, alpha_);
      if (tracing_)
        trace_.push_back({MoveKind::cancel, {pair->first, pair->second}, alpha_.decode(w)});
    }
  }

  enum class Outcome { square_free, reducible, budget };

  struct Result {
    Outcome outcome;
    Code word;  // reducible member, or least member seen
  };

  /// Breadth-first walk of the length-preserving class of `start` (a normal
  /// form). Stops at the first member with a cancellable pair.
  Result explore(const Code& start) {
    std::unordered_set<Code> visited{start};
    std::unordered_map<Code, std::pair<Code, std::size_t>> parent;
    std::deque<Code> queue{start};
    Code best = start;
    ++states_;
    if (over_budget()) return {Outcome::budget, best};
    while (!queue.empty()) {
      Code cur = std::move(queue.front());
      queue.pop_front();
      Poset po(cur, alpha_);
      for (const auto& site : exchange_sites(cur, po, alpha_)) {
        auto [moved, at] = apply_exchange(cur, po, site);
        Code next = normal_form(moved, alpha_);
        if (!visited.insert(next).second) continue;
        ++states_;
        if (tracing_) parent.emplace(next, std::make_pair(cur, at));
        Poset next_po(next, alpha_);
        if (find_cancellable(next, next_po)) {
          if (tracing_) record_path(parent, start, next);
          return {Outcome::reducible, next};
        }
        if (next < best) best = next;
        if (over_budget()) return {Outcome::budget, best};
        queue.push_back(std::move(next));
      }
    }
    return {Outcome::square_free, best};
  }

 private:
  void record_path(const std::unordered_map<Code, std::pair<Code, std::size_t>>& parent,
                   const Code& start, Code end) {
    std::vector<MoveRecord<G>> path;
    while (end != start) {
      const auto& [prev, at] = parent.at(end);
      path.push_back({MoveKind::exchange, {at, at + 1, at + 2}, alpha_.decode(end)});
      end = prev;
    }
    trace_.insert(trace_.end(), path.rbegin(), path.rend());
  }

  const Alphabet<Label>& alpha_;
  std::size_t budget_;
  bool tracing_;
  std::size_t states_ = 0;
  std::vector<MoveRecord<G>> trace_;
};

}  // namespace detail

/// Searches for a minimal-length word equal to w. Whenever a class member
/// exposes two adjacent equal letters they are cancelled and the search
/// restarts from the shorter word; length strictly drops, so this ends.
template <class Label>
ReductionCertificate<Label> reduce_to_minimal(const Word<PairGenerator<Label>>& w,
                                              CommutationMode mode = CommutationMode::ordered,
                                              std::size_t budget = kDefaultBudget,
                                              bool with_trace = false) {
  using G = PairGenerator<Label>;
  if (budget < 1) throw ParameterError("search budget must be at least 1");
  ReductionCertificate<Label> cert;
  cert.input = w;
  cert.mode = mode;

  detail::Alphabet<Label> alpha(w, mode);
  detail::ClassSearch<Label> search(alpha, budget, with_trace);

  const Word<G> freed = free_reduce_involutive(w);
  if (with_trace && freed.size() != w.size())
    search.trace().push_back({MoveKind::free_cancel, {}, freed});
  detail::Code cur = search.cancel_all(alpha.encode(freed));

  for (;;) {
    auto result = search.explore(cur);
    if (result.outcome == detail::ClassSearch<Label>::Outcome::reducible) {
      cur = search.cancel_all(result.word);
      continue;
    }
    cert.output = alpha.decode(result.word);
    cert.status = result.outcome == detail::ClassSearch<Label>::Outcome::square_free
                      ? ReductionStatus::minimal_certified
                      : ReductionStatus::budget_exhausted;
    break;
  }
  cert.states_explored = search.states();
  if (with_trace) cert.move_trace = std::move(search.trace());
  return cert;
}

template <class Label>
MinimalityCertificate<Label> is_minimal(const Word<PairGenerator<Label>>& w,
                                        CommutationMode mode = CommutationMode::ordered,
                                        std::size_t budget = kDefaultBudget) {
  if (budget < 1) throw ParameterError("search budget must be at least 1");
  MinimalityCertificate<Label> cert;
  cert.word = w;
  cert.mode = mode;
  detail::Alphabet<Label> alpha(w, mode);
  detail::ClassSearch<Label> search(alpha, budget, false);

  const detail::Code start = detail::normal_form(alpha.encode(w), alpha);
  detail::Poset po(start, alpha);
  if (detail::find_cancellable(start, po)) {
    cert.status = MinimalityStatus::not_minimal;
    cert.witness = alpha.decode(start);
    return cert;
  }
  auto result = search.explore(start);
  cert.states_explored = search.states();
  using Outcome = typename detail::ClassSearch<Label>::Outcome;
  switch (result.outcome) {
    case Outcome::square_free: cert.status = MinimalityStatus::minimal_certified; break;
    case Outcome::reducible:
      cert.status = MinimalityStatus::not_minimal;
      cert.witness = alpha.decode(result.word);
      break;
    case Outcome::budget: cert.status = MinimalityStatus::budget_exhausted; break;
  }
  return cert;
}

/// Decides u = v by reducing u * v^-1 (v^-1 is the reversal of v).
template <class Label>
EqualityVerdict<Label> words_equal(const Word<PairGenerator<Label>>& u,
                                   const Word<PairGenerator<Label>>& v,
                                   CommutationMode mode = CommutationMode::ordered,
                                   std::size_t budget = kDefaultBudget) {
  EqualityVerdict<Label> out;
  if (parity_vector(u) != parity_vector(v)) {
    out.verdict = Verdict::distinct;
    out.evidence = Evidence::parity_certificate;
    return out;
  }
  auto cert = reduce_to_minimal(concat(u, reverse_word(v)), mode, budget);
  if (cert.output.empty()) {
    out.verdict = Verdict::equal;
    out.evidence = Evidence::reduction_to_empty;
  } else if (cert.status == ReductionStatus::minimal_certified) {
    out.verdict = Verdict::distinct;
    out.evidence = Evidence::exhausted_minimal_search;
  } else {
    out.verdict = Verdict::unknown;
    out.evidence = Evidence::budget_exhausted;
  }
  out.certificate = std::move(cert);
  return out;
}

// Presentations of G^2-type groups.

enum class G2RelatorTag { square, commute, exchange };

inline std::string to_string(G2RelatorTag t) {
  switch (t) {
    case G2RelatorTag::square: return "SQUARE";
    case G2RelatorTag::commute: return "COMMUTE";
    case G2RelatorTag::exchange: return "EXCHANGE";
  }
  return "?";
}

template <class Label>
struct G2Relator {
  G2RelatorTag tag;
  Word<PairGenerator<Label>> word;
};

/// All generators a_{p,q} over the given labels.
template <class Label>
std::vector<PairGenerator<Label>> pair_generators(std::vector<Label> labels) {
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  std::vector<PairGenerator<Label>> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = i + 1; j < labels.size(); ++j)
      out.push_back(PairGenerator<Label>::make(labels[i], labels[j]));
  return out;
}

/// The n(n-1) ordered-pair labels on strands 1..n.
inline std::vector<OrderedPair> ordered_pair_labels(int n) {
  std::vector<OrderedPair> out;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (i != j) out.push_back(OrderedPair{i, j});
  return out;
}

/// Relators of the presentation over `labels` as read under `mode`: squares,
/// commutators of commuting pairs, and one squared exchange word per label
/// triangle and choice of apex p.
template <class Label>
std::vector<G2Relator<Label>> enumerate_g2_relators(const std::vector<Label>& labels,
                                                    CommutationMode mode) {
  using G = PairGenerator<Label>;
  const auto gens = pair_generators(labels);
  std::vector<G2Relator<Label>> out;
  for (const auto& g : gens) out.push_back({G2RelatorTag::square, {g, g}});
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (commutes(gens[i], gens[j], mode))
        out.push_back({G2RelatorTag::commute, {gens[i], gens[j], gens[i], gens[j]}});
  std::vector<Label> ls = labels;
  std::sort(ls.begin(), ls.end());
  ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
  // (a_{pq} a_{pr} a_{qr})^2 for q < r: the other orderings of a triangle are
  // rotations or reversals of these.
  for (const auto& p : ls)
    for (const auto& q : ls)
      for (const auto& r : ls) {
        if (p == q || p == r || !(q < r)) continue;
        if (!labels_distinct(p, q, mode) || !labels_distinct(p, r, mode) ||
            !labels_distinct(q, r, mode))
          continue;
        const G x = G::make(p, q), y = G::make(p, r), z = G::make(q, r);
        out.push_back({G2RelatorTag::exchange, {x, y, z, x, y, z}});
      }
  return out;
}

}  // namespace gnk

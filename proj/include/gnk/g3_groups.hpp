#pragma once

// The groups G'_n^3 (generators a'_{ijk}: triples up to reversal, middle
// strand significant) and G_n^3 (generators a_{ijk}: unordered triples):
//
//   (1) a_t^2 = 1
//   (2) a_s a_t = a_t a_s            when the strand sets share < 2 strands
//   (3) (a'_{ijk} a'_{ijl} a'_{ikl} a'_{jkl})^2 = 1   for distinct i, j, k, l
//
// plus the homomorphism phi: G'_n^3 -> G_{n(n-1)}^2,
// a'_{ijk} -> a_{ij,ik} a_{kj,ki}.

#include <algorithm>
#include <future>
#include <set>
#include <thread>

#include "gnk/g2_engine.hpp"
#include "gnk/words.hpp"

namespace gnk {

enum class G3Variant { backtick, plain };

struct G3Context {
  int n = 3;
  G3Variant variant = G3Variant::backtick;
};

enum class RelatorTag { r1_square, r2_commute, r3_quad };

inline std::string to_string(RelatorTag t) {
  switch (t) {
    case RelatorTag::r1_square: return "R1_SQUARE";
    case RelatorTag::r2_commute: return "R2_COMMUTE";
    case RelatorTag::r3_quad: return "R3_QUAD";
  }
  return "?";
}

template <class G>
struct Relator {
  RelatorTag tag;
  Word<G> word;
};

template <class G>
using RelatorList = std::vector<Relator<G>>;

inline std::array<Strand, 3> strand_set(const Triple& t) { return t.sorted_strands(); }
inline std::array<Strand, 3> strand_set(const PlainTriple& t) { return t.strands; }

inline int shared_strands(const std::array<Strand, 3>& a, const std::array<Strand, 3>& b) {
  int n = 0;
  for (Strand x : a)
    for (Strand y : b) n += (x == y);
  return n;
}

namespace detail {

template <class G>
G triple_letter(Strand i, Strand j, Strand k) {
  if constexpr (std::is_same_v<G, Triple>)
    return Triple::make(i, j, k);
  else
    return PlainTriple::make(i, j, k);
}

inline void check_rank(int n) {
  if (n < 3) throw ParameterError("G^3 groups need n >= 3");
}

}  // namespace detail

/// Least word among all rotations of w and of its reversal.
template <class G>
Word<G> cyclic_canonical(const Word<G>& w) {
  Word<G> best = w;
  for (const Word<G>& base : {w, reverse_word(w)}) {
    Word<G> r = base;
    for (std::size_t i = 0; i < r.size(); ++i) {
      std::rotate(r.begin(), r.begin() + 1, r.end());
      if (r < best) best = r;
    }
    if (base < best) best = base;
  }
  return best;
}

inline std::vector<Triple> backtick_generators(int n) {
  detail::check_rank(n);
  std::vector<Triple> out;
  for (Strand i = 1; i <= n; ++i)
    for (Strand j = 1; j <= n; ++j)
      for (Strand k = i + 1; k <= n; ++k)
        if (j != i && j != k) out.push_back(Triple{i, j, k});
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<PlainTriple> plain_generators(int n) {
  detail::check_rank(n);
  std::vector<PlainTriple> out;
  for (Strand i = 1; i <= n; ++i)
    for (Strand j = i + 1; j <= n; ++j)
      for (Strand k = j + 1; k <= n; ++k) out.push_back(PlainTriple{{i, j, k}});
  return out;
}

template <class G>
std::vector<G> generators(int n) {
  if constexpr (std::is_same_v<G, Triple>)
    return backtick_generators(n);
  else
    return plain_generators(n);
}

/// Relators (1), (2), (3) for G = Triple (G'_n^3) or G = PlainTriple
/// (G_n^3). Relation (3) is generated for every ordered quadruple and
/// deduplicated up to rotation and reversal.
template <class G>
RelatorList<G> enumerate_relators(int n) {
  const auto gens = generators<G>(n);
  RelatorList<G> out;
  for (const auto& g : gens) out.push_back({RelatorTag::r1_square, {g, g}});
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (shared_strands(strand_set(gens[a]), strand_set(gens[b])) < 2)
        out.push_back({RelatorTag::r2_commute, {gens[a], gens[b], gens[a], gens[b]}});

  std::set<Word<G>> seen;
  for (Strand i = 1; i <= n; ++i)
    for (Strand j = 1; j <= n; ++j)
      for (Strand k = 1; k <= n; ++k)
        for (Strand l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          using detail::triple_letter;
          const Word<G> half{triple_letter<G>(i, j, k), triple_letter<G>(i, j, l),
                             triple_letter<G>(i, k, l), triple_letter<G>(j, k, l)};
          Word<G> w = concat(half, half);
          if (seen.insert(cyclic_canonical(w)).second)
            out.push_back({RelatorTag::r3_quad, std::move(w)});
        }
  return out;
}

inline RelatorList<Triple> enumerate_relators(const G3Context& ctx) {
  if (ctx.variant != G3Variant::backtick)
    throw ParameterError("use enumerate_relators<PlainTriple> for the plain variant");
  return enumerate_relators<Triple>(ctx.n);
}

/// phi(a'_{ijk}) = a_{ij,ik} a_{kj,ki}, read off the stored orientation.
inline Word<PairPairGenerator> phi_generator(const Triple& t) {
  const Strand i = t.left, j = t.middle, k = t.right;
  return {PairPairGenerator::make(OrderedPair{i, j}, OrderedPair{i, k}),
          PairPairGenerator::make(OrderedPair{k, j}, OrderedPair{k, i})};
}

inline Word<PairPairGenerator> phi_word(const Word<Triple>& w) {
  Word<PairPairGenerator> out;
  out.reserve(2 * w.size());
  for (const auto& t : w) {
    const auto img = phi_generator(t);
    out.insert(out.end(), img.begin(), img.end());
  }
  return out;
}

inline Word<PlainTriple> project_to_plain(const Word<Triple>& w) {
  Word<PlainTriple> out;
  out.reserve(w.size());
  for (const auto& t : w) out.push_back(PlainTriple{t.sorted_strands()});
  return out;
}

enum class ViaPhiVerdict { minimal, inconclusive };

inline std::string to_string(ViaPhiVerdict v) {
  return v == ViaPhiVerdict::minimal ? "MINIMAL" : "INCONCLUSIVE";
}

struct ViaPhiCertificate {
  Word<Triple> word;
  ViaPhiVerdict verdict = ViaPhiVerdict::inconclusive;
  MinimalityCertificate<OrderedPair> image;
};

/// A word whose phi-image is minimal is itself minimal. The converse is not
/// claimed, so a non-minimal image only yields INCONCLUSIVE.
inline ViaPhiCertificate certify_minimal_via_phi(const Word<Triple>& w,
                                                 CommutationMode mode = CommutationMode::ordered,
                                                 std::size_t budget = kDefaultBudget) {
  ViaPhiCertificate out;
  out.word = w;
  out.image = is_minimal(phi_word(w), mode, budget);
  out.verdict = out.image.status == MinimalityStatus::minimal_certified
                    ? ViaPhiVerdict::minimal
                    : ViaPhiVerdict::inconclusive;
  return out;
}

enum class CheckSummary { pass, fail, unknown };

inline std::string to_string(CheckSummary s) {
  switch (s) {
    case CheckSummary::pass: return "PASS";
    case CheckSummary::fail: return "FAIL";
    case CheckSummary::unknown: return "UNKNOWN";
  }
  return "?";
}

struct PhiRelatorCheck {
  RelatorTag tag;
  Word<Triple> relator;
  Word<PairPairGenerator> image;
  Verdict verdict = Verdict::unknown;
  std::size_t states = 0;
};

struct PhiVerification {
  int n = 0;
  CommutationMode mode = CommutationMode::ordered;
  std::vector<PhiRelatorCheck> checks;
  CheckSummary summary = CheckSummary::pass;

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [v](const auto& c) { return c.verdict == v; }));
  }
};

inline constexpr int kMaxVerifyRank = 8;

namespace detail {

/// Applies f to every index in [0, count) on a few worker threads. Results
/// land by index, so the output order never depends on scheduling.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, F f) {
  std::vector<T> out(count);
  const std::size_t workers =
      std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), 8));
  if (workers == 1 || count < 2 * workers) {
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::future<void>> jobs;
  for (std::size_t w = 0; w < workers; ++w)
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t i = w; i < count; i += workers) out[i] = f(i);
    }));
  for (auto& j : jobs) j.get();
  return out;
}

}  // namespace detail

/// Checks that every relator of G'_n^3 maps under phi to the identity.
inline PhiVerification verify_phi_well_defined(int n, CommutationMode mode = CommutationMode::ordered,
                                               std::size_t budget = kDefaultBudget) {
  if (n < 3 || n > kMaxVerifyRank)
    throw ParameterError("verification supports 3 <= n <= " + std::to_string(kMaxVerifyRank));
  const auto relators = enumerate_relators<Triple>(n);
  PhiVerification report;
  report.n = n;
  report.mode = mode;
  report.checks = detail::parallel_map<PhiRelatorCheck>(relators.size(), [&](std::size_t i) {
    PhiRelatorCheck c;
    c.tag = relators[i].tag;
    c.relator = relators[i].word;
    c.image = phi_word(c.relator);
    const auto verdict = words_equal(c.image, Word<PairPairGenerator>{}, mode, budget);
    c.verdict = verdict.verdict;
    c.states = verdict.certificate ? verdict.certificate->states_explored : 0;
    return c;
  });
  if (report.count(Verdict::distinct) > 0)
    report.summary = CheckSummary::fail;
  else if (report.count(Verdict::unknown) > 0)
    report.summary = CheckSummary::unknown;
  return report;
}

}  // namespace gnk

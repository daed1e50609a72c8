#pragma once

// Pure braids as motions of n points in the plane, collinearity events, and
// the invariant f: PB_n -> G'_n^3 with Phi = phi o f.
//
// Slot j sits at exp(2 pi i j / n), shifted by a small seeded jitter. The
// Artin letter s_k^{+-1} rotates the points in slots k and k+1 by pi about
// the midpoint of the two slots (counterclockwise for +1); everything else
// stays put. Each letter takes one equal slice of t in [0, 1].
//
// A critical moment is a time at which three points are collinear. Each one
// contributes a'_{ijk}, j being the point in the middle of the line.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <string_view>
#include <variant>

#include "gnk/g2_engine.hpp"
#include "gnk/g3_groups.hpp"
#include "gnk/words.hpp"

namespace gnk {

struct BraidLetter {
  int index = 1;  // k in s_k, 1 <= k <= n - 1
  int sign = 1;   // +1 or -1
  auto operator<=>(const BraidLetter&) const = default;
};

struct BraidWord {
  int n = 3;
  std::vector<BraidLetter> letters;
  bool operator==(const BraidWord&) const = default;
};

class BraidParseError : public ParameterError {
 public:
  BraidParseError(const std::string& what, std::size_t position)
      : ParameterError(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses whitespace-separated tokens `s<k>` and `s<k>^-1`.
inline BraidWord parse_braid(std::string_view text, int n) {
  if (n < 2) throw ParameterError("braids need n >= 2");
  BraidWord b;
  b.n = n;
  std::size_t i = 0;
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  const auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  while (i < text.size()) {
    if (is_space(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (text[i] != 's') throw BraidParseError("expected 's'", i);
    ++i;
    if (i >= text.size() || !is_digit(text[i])) throw BraidParseError("expected generator index", i);
    long index = 0;
    while (i < text.size() && is_digit(text[i])) {
      index = index * 10 + (text[i] - '0');
      if (index > 1'000'000) throw BraidParseError("generator index too large", start);
      ++i;
    }
    int sign = 1;
    if (i < text.size() && text[i] == '^') {
      if (text.substr(i, 3) != "^-1") throw BraidParseError("expected '^-1'", i);
      sign = -1;
      i += 3;
    }
    if (i < text.size() && !is_space(text[i])) throw BraidParseError("unexpected character", i);
    if (index < 1 || index > n - 1)
      throw BraidParseError("generator index " + std::to_string(index) + " out of range 1.." +
                                std::to_string(n - 1),
                            start);
    b.letters.push_back({static_cast<int>(index), sign});
  }
  return b;
}

inline std::string format_braid(const BraidWord& b) {
  std::string s;
  for (std::size_t i = 0; i < b.letters.size(); ++i) {
    if (i) s += ' ';
    s += "s" + std::to_string(b.letters[i].index);
    if (b.letters[i].sign < 0) s += "^-1";
  }
  return s;
}

inline BraidWord inverse(const BraidWord& b) {
  BraidWord out{b.n, {}};
  for (auto it = b.letters.rbegin(); it != b.letters.rend(); ++it)
    out.letters.push_back({it->index, -it->sign});
  return out;
}

inline BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw ParameterError("concatenating braids on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

/// Final slot of each point (index p - 1 holds the slot of point p).
inline std::vector<int> permutation(const BraidWord& b) {
  std::vector<int> at_slot(b.n);
  for (int s = 0; s < b.n; ++s) at_slot[s] = s + 1;
  for (const auto& l : b.letters) std::swap(at_slot[l.index - 1], at_slot[l.index]);
  std::vector<int> slot_of(b.n);
  for (int s = 0; s < b.n; ++s) slot_of[at_slot[s] - 1] = s + 1;
  return slot_of;
}

inline bool is_pure(const BraidWord& b) {
  const auto p = permutation(b);
  for (int i = 0; i < b.n; ++i)
    if (p[i] != i + 1) return false;
  return true;
}

using Point = std::complex<double>;

/// z_1 cross z_2 (twice the signed triangle area with the origin).
inline double cross(Point a, Point b) { return a.real() * b.imag() - a.imag() * b.real(); }

inline constexpr double kDefaultEpsilon = 1e-3;
inline constexpr std::uint64_t kDefaultSeed = 1;
inline constexpr int kDefaultRetries = 8;

/// Slot positions exp(2 pi i j / n), each moved by epsilon in a seeded
/// random direction.
inline std::vector<Point> base_configuration(int n, double epsilon, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Point> out;
  for (int j = 1; j <= n; ++j) {
    const double unit = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    const double dir = 2.0 * std::numbers::pi * unit;
    out.push_back(std::polar(1.0, 2.0 * std::numbers::pi * j / n) + std::polar(epsilon, dir));
  }
  return out;
}

struct FixedSegment {
  Point position;
};

struct ArcSegment {
  Point center;
  double radius = 0;
  double start_angle = 0;
  double sweep = 0;
};

using Segment = std::variant<FixedSegment, ArcSegment>;

/// Position on a segment at local time u in [0, 1].
inline Point position_on(const Segment& s, double u) {
  if (const auto* f = std::get_if<FixedSegment>(&s)) return f->position;
  const auto& a = std::get<ArcSegment>(s);
  return a.center + std::polar(a.radius, a.start_angle + a.sweep * u);
}

struct Trajectory {
  int n = 3;
  double epsilon = 0;
  std::uint64_t seed = 0;
  std::vector<Point> base;                    // slot positions
  std::vector<std::vector<Segment>> slices;   // slices[s][p - 1]

  std::size_t slice_count() const { return slices.size(); }

  /// Position of point p (1-based) at global time t in [0, 1].
  Point position(int p, double t) const {
    if (slices.empty()) return base[p - 1];
    const double m = static_cast<double>(slices.size());
    const double x = std::clamp(t, 0.0, 1.0) * m;
    const std::size_t s = std::min(static_cast<std::size_t>(x), slices.size() - 1);
    return position_on(slices[s][p - 1], x - static_cast<double>(s));
  }

  bool moving(std::size_t slice, int p) const {
    return std::holds_alternative<ArcSegment>(slices[slice][p - 1]);
  }
};

inline Trajectory realize(const BraidWord& b, double epsilon = kDefaultEpsilon,
                          std::uint64_t seed = kDefaultSeed) {
  if (!is_pure(b)) throw ParameterError("braid '" + format_braid(b) + "' is not pure");
  if (epsilon < 0) throw ParameterError("perturbation magnitude must be >= 0");
  Trajectory tr;
  tr.n = b.n;
  tr.epsilon = epsilon;
  tr.seed = seed;
  tr.base = base_configuration(b.n, epsilon, seed);
  std::vector<int> at_slot(b.n);
  for (int s = 0; s < b.n; ++s) at_slot[s] = s + 1;
  for (const auto& l : b.letters) {
    std::vector<Segment> slice(b.n);
    for (int s = 0; s < b.n; ++s) slice[at_slot[s] - 1] = FixedSegment{tr.base[s]};
    const Point lo = tr.base[l.index - 1], hi = tr.base[l.index];
    const Point mid = 0.5 * (lo + hi);
    const double radius = 0.5 * std::abs(hi - lo);
    const double sweep = l.sign * std::numbers::pi;
    slice[at_slot[l.index - 1] - 1] = ArcSegment{mid, radius, std::arg(lo - mid), sweep};
    slice[at_slot[l.index] - 1] = ArcSegment{mid, radius, std::arg(hi - mid), sweep};
    std::swap(at_slot[l.index - 1], at_slot[l.index]);
    tr.slices.push_back(std::move(slice));
  }
  return tr;
}

struct CollinearityEvent {
  double t = 0;
  Triple triple;           // middle strand in the middle slot
  int orientation_flip = 0;  // sign of d/dt of the signed area at t
  double slope = 0;

  Strand middle() const { return triple.middle; }
};

struct Tolerances {
  int samples_per_segment = 512;
  double time_tol = 1e-12;
  double min_gap = 1e-6;
  double min_slope = 1e-9;      // relative to scale
  double collinear_tol = 1e-9;  // relative to sqrt(scale)
  double min_separation = 1e-6;
};

struct StabilityReport {
  std::size_t event_count = 0;
  double min_gap = std::numeric_limits<double>::infinity();
  double min_slope = std::numeric_limits<double>::infinity();
  bool simultaneous = false;
  bool four_point = false;
  bool tangency = false;
  bool middle_tie = false;
  bool collision = false;
  int retries_used = 0;

  bool pass() const { return !(simultaneous || four_point || tangency || middle_tie || collision); }

  /// Comma-separated names of the failed conditions.
  std::string degeneracy() const {
    std::string s;
    const auto add = [&](bool flag, const char* name) {
      if (!flag) return;
      if (!s.empty()) s += ", ";
      s += name;
    };
    add(simultaneous, "simultaneous events");
    add(four_point, "four collinear points");
    add(tangency, "tangential collinearity");
    add(middle_tie, "ambiguous middle point");
    add(collision, "colliding points");
    return s;
  }
};

struct EventScan {
  std::vector<CollinearityEvent> events;
  StabilityReport report;
};

namespace detail {

inline double signed_area(const Trajectory& tr, int i, int j, int k, double t) {
  const Point zi = tr.position(i, t);
  return cross(tr.position(j, t) - zi, tr.position(k, t) - zi);
}

/// Bisects a sign change of the area of (i, j, k) on [lo, hi].
inline double refine_root(const Trajectory& tr, int i, int j, int k, double lo, double hi,
                          double tol) {
  const bool lo_positive = signed_area(tr, i, j, k, lo) > 0;
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    if ((signed_area(tr, i, j, k, mid) > 0) == lo_positive)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

/// Minimizes sign * area on [lo, hi] by golden-section search.
inline std::pair<double, double> dip(const Trajectory& tr, int i, int j, int k, double lo,
                                     double hi, double sign) {
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double c = b - g * (b - a), d = a + g * (b - a);
  double fc = sign * signed_area(tr, i, j, k, c), fd = sign * signed_area(tr, i, j, k, d);
  for (int it = 0; it < 80 && b - a > 1e-14; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - g * (b - a);
      fc = sign * signed_area(tr, i, j, k, c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + g * (b - a);
      fd = sign * signed_area(tr, i, j, k, d);
    }
  }
  const double t = 0.5 * (a + b);
  return {t, sign * signed_area(tr, i, j, k, t)};
}

}  // namespace detail

/// Finds every collinearity event of the trajectory and checks the good and
/// stable conditions at the given tolerances.
inline EventScan detect_events(const Trajectory& tr, const Tolerances& tol = {}) {
  EventScan scan;
  auto& rep = scan.report;
  double scale = 0;
  for (const auto& z : tr.base) scale = std::max(scale, std::norm(z));
  const double length = std::sqrt(scale);
  const double m = static_cast<double>(tr.slice_count());
  const int samples = std::max(8, tol.samples_per_segment);

  for (std::size_t s = 0; s < tr.slice_count(); ++s) {
    const double t0 = static_cast<double>(s) / m, t1 = static_cast<double>(s + 1) / m;
    const auto time_at = [&](int q) { return t0 + (t1 - t0) * q / samples; };

    for (int q = 0; q <= samples; ++q)
      for (int a = 1; a <= tr.n; ++a)
        for (int b = a + 1; b <= tr.n; ++b)
          if (std::abs(tr.position(a, time_at(q)) - tr.position(b, time_at(q))) <
              tol.min_separation * length)
            rep.collision = true;

    for (int i = 1; i <= tr.n; ++i)
      for (int j = i + 1; j <= tr.n; ++j)
        for (int k = j + 1; k <= tr.n; ++k) {
          if (!tr.moving(s, i) && !tr.moving(s, j) && !tr.moving(s, k)) continue;
          std::vector<double> f(samples + 1);
          for (int q = 0; q <= samples; ++q) f[q] = detail::signed_area(tr, i, j, k, time_at(q));

          std::vector<std::pair<double, double>> brackets;
          for (int q = 0; q < samples; ++q)
            if ((f[q] > 0) != (f[q + 1] > 0)) brackets.emplace_back(time_at(q), time_at(q + 1));
          // A dip towards zero between samples may hide a pair of roots or
          // a tangency.
          for (int q = 1; q < samples; ++q) {
            if ((f[q - 1] > 0) != (f[q] > 0) || (f[q] > 0) != (f[q + 1] > 0)) continue;
            if (std::abs(f[q]) > std::abs(f[q - 1]) || std::abs(f[q]) > std::abs(f[q + 1])) continue;
            const double sign = f[q] > 0 ? 1.0 : -1.0;
            const auto [tm, fm] = detail::dip(tr, i, j, k, time_at(q - 1), time_at(q + 1), sign);
            if (fm <= 0) {
              brackets.emplace_back(time_at(q - 1), tm);
              brackets.emplace_back(tm, time_at(q + 1));
            } else if (fm < tol.collinear_tol * scale) {
              rep.tangency = true;
            }
          }

          for (const auto& [lo, hi] : brackets) {
            CollinearityEvent ev;
            ev.t = detail::refine_root(tr, i, j, k, lo, hi, tol.time_tol);
            const double h = std::min({1e-7, (ev.t - t0) / 2, (t1 - ev.t) / 2});
            ev.slope = (detail::signed_area(tr, i, j, k, ev.t + h) -
                        detail::signed_area(tr, i, j, k, ev.t - h)) /
                       (2 * h);
            ev.orientation_flip = ev.slope > 0 ? 1 : -1;
            rep.min_slope = std::min(rep.min_slope, std::abs(ev.slope));
            if (std::abs(ev.slope) < tol.min_slope * scale) rep.tangency = true;

            // Order the three points along their common line.
            const int idx[3] = {i, j, k};
            Point z[3];
            for (int r = 0; r < 3; ++r) z[r] = tr.position(idx[r], ev.t);
            int far_a = 0, far_b = 1;
            for (int r = 0; r < 3; ++r)
              for (int u = r + 1; u < 3; ++u)
                if (std::abs(z[r] - z[u]) > std::abs(z[far_a] - z[far_b])) far_a = r, far_b = u;
            const Point dir = (z[far_b] - z[far_a]) / std::abs(z[far_b] - z[far_a]);
            const int mid = 3 - far_a - far_b;
            const double along = std::real((z[mid] - z[far_a]) * std::conj(dir));
            const double span = std::abs(z[far_b] - z[far_a]);
            if (std::min(along, span - along) < tol.collinear_tol * length) rep.middle_tie = true;
            ev.triple = Triple::make(idx[far_a], idx[mid], idx[far_b]);

            for (int l = 1; l <= tr.n; ++l) {
              if (l == i || l == j || l == k) continue;
              const double off = std::abs(cross(dir, tr.position(l, ev.t) - z[far_a]));
              if (off < tol.collinear_tol * length) rep.four_point = true;
            }
            scan.events.push_back(ev);
          }
        }
  }

  std::sort(scan.events.begin(), scan.events.end(), [](const auto& a, const auto& b) {
    return a.t != b.t ? a.t < b.t : a.triple < b.triple;
  });
  for (std::size_t e = 1; e < scan.events.size(); ++e)
    rep.min_gap = std::min(rep.min_gap, scan.events[e].t - scan.events[e - 1].t);
  if (rep.min_gap < tol.min_gap) rep.simultaneous = true;
  rep.event_count = scan.events.size();
  return scan;
}

inline Word<Triple> event_word(const std::vector<CollinearityEvent>& events) {
  Word<Triple> w;
  w.reserve(events.size());
  for (const auto& e : events) w.push_back(e.triple);
  return w;
}

class DegenerateBraidError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InvariantResult {
  BraidWord braid;
  Word<Triple> word;
  std::vector<CollinearityEvent> events;
  StabilityReport report;
  std::uint64_t seed_used = 0;
  double epsilon = 0;
};

/// f(b): one generator per critical moment, in increasing time. Degenerate
/// realizations are retried with the following seeds.
inline InvariantResult f_invariant(const BraidWord& b, double epsilon = kDefaultEpsilon,
                                   std::uint64_t seed = kDefaultSeed, int retries = kDefaultRetries,
                                   const Tolerances& tol = {}) {
  if (b.n < 3) throw ParameterError("the invariant needs n >= 3");
  if (retries < 0) throw ParameterError("retries must be >= 0");
  std::string last;
  for (int attempt = 0; attempt <= retries; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    auto scan = detect_events(realize(b, epsilon, s), tol);
    scan.report.retries_used = attempt;
    if (scan.report.pass()) {
      InvariantResult out;
      out.braid = b;
      out.word = event_word(scan.events);
      out.events = std::move(scan.events);
      out.report = scan.report;
      out.seed_used = s;
      out.epsilon = epsilon;
      return out;
    }
    last = scan.report.degeneracy();
  }
  throw DegenerateBraidError("braid '" + format_braid(b) + "' stayed degenerate after " +
                             std::to_string(retries + 1) + " realizations: " + last);
}

struct BraidPhiResult {
  InvariantResult f;
  Word<PairPairGenerator> image;
  ReductionCertificate<OrderedPair> certificate;
};

/// Phi(b) = phi(f(b)) reduced in G_{n(n-1)}^2. A nonempty certified output
/// shows b is a nontrivial pure braid.
inline BraidPhiResult Phi(const BraidWord& b, CommutationMode mode = CommutationMode::ordered,
                          std::size_t budget = kDefaultBudget, double epsilon = kDefaultEpsilon,
                          std::uint64_t seed = kDefaultSeed, int retries = kDefaultRetries) {
  BraidPhiResult out;
  out.f = f_invariant(b, epsilon, seed, retries);
  out.image = phi_word(out.f.word);
  out.certificate = reduce_to_minimal(out.image, mode, budget);
  return out;
}

}  // namespace gnk

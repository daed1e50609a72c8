#pragma once

// Command-line front end. Every command prints JSON by default (--pretty
// gives a short human-readable summary) and exits with
//   0  success / EQUAL / PASS / MINIMAL
//   1  verified negative (DISTINCT, FAIL, NOT_MINIMAL)
//   2  inconclusive (search budget exhausted, INCONCLUSIVE, degenerate braid)
//   3  input error

#include <CLI11.hpp>

#include <iomanip>
#include <optional>
#include <ostream>

#include "gnk/json_io.hpp"

namespace gnk::cli {

enum Status : int { kOk = 0, kNegative = 1, kInconclusive = 2, kInputError = 3 };

namespace detail {

struct Common {
  int n = 0;
  std::string mode = "ordered";
  std::optional<std::size_t> budget;
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = kDefaultSeed;
  int retries = kDefaultRetries;
  bool pretty = false;
  bool json_out = false;
  bool verbose = false;

  std::size_t search_budget() const { return budget ? *budget : default_budget(); }
  CommutationMode commutation() const { return parse_mode(mode); }
};

inline json parse_json_arg(const std::string& text, const char* flag) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParameterError(std::string("--") + flag + " is not valid JSON: " + e.what());
  }
}

/// True for a nonempty array whose first element looks like [i, j, k].
inline bool is_triple_word(const json& j) {
  return j.is_array() && !j.empty() && j[0].is_array() && j[0].size() == 3 &&
         j[0][0].is_number_integer();
}

template <class T>
T get_as(const json& j, const char* flag) {
  try {
    return j.get<T>();
  } catch (const json::exception& e) {
    throw ParameterError(std::string("--") + flag + ": " + e.what());
  }
}

/// A G^2 word given directly or as a G'^3 word to be mapped through phi.
inline Word<PairPairGenerator> pair_word_arg(const std::string& text, const char* flag,
                                             bool& via_phi) {
  const json j = parse_json_arg(text, flag);
  via_phi = is_triple_word(j);
  if (via_phi) return phi_word(get_as<Word<Triple>>(j, flag));
  return get_as<Word<PairPairGenerator>>(j, flag);
}

inline void check_within(const Word<Triple>& w, int n) {
  for (const auto& t : w)
    if (!t.within(n)) throw ParameterError("generator " + to_string(t) + " outside n = " + std::to_string(n));
}

inline void emit(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

inline std::string parity_text(const ParityVector<PairPairGenerator>& p) {
  if (p.empty()) return "0";
  std::string s;
  for (const auto& g : p) s += (s.empty() ? "" : " ") + to_string(g);
  return s;
}

inline int run_invariant(const Common& c, const std::string& braid_text, std::ostream& out) {
  const BraidWord b = parse_braid(braid_text, c.n);
  const auto mode = c.commutation();
  const auto r = Phi(b, mode, c.search_budget(), c.epsilon, c.seed, c.retries);
  const auto parity = parity_vector(r.image);
  const auto g = g_of_word(r.f.word, c.n);
  const int status =
      r.certificate.status == ReductionStatus::minimal_certified ? kOk : kInconclusive;
  if (c.pretty) {
    out << "braid      " << format_braid(b) << "  (n = " << c.n << ", seed " << r.f.seed_used
        << ", epsilon " << c.epsilon << ")\n"
        << "f          " << to_string(r.f.word) << "  [" << r.f.word.size() << " events]\n"
        << "phi(f)     " << to_string(r.image) << '\n'
        << "reduced    " << to_string(r.certificate.output) << "  ["
        << to_string(r.certificate.status) << ", " << to_string(mode) << ", "
        << r.certificate.states_explored << " states]\n"
        << "parity     " << parity_text(parity) << '\n'
        << "nontrivial " << (r.certificate.output.empty() ? "not certified" : "yes") << '\n'
        << "g-action   " << (g.is_identity() ? "identity" : "nontrivial") << " ("
        << g.moved().size() << " generators moved)\n";
    return status;
  }
  emit(out, json{{"command", "invariant"},
                 {"n", c.n},
                 {"braid", format_braid(b)},
                 {"seed", r.f.seed_used},
                 {"epsilon", c.epsilon},
                 {"f", r.f.word},
                 {"events", events_json(r.f.events)},
                 {"stability", stability_json(r.f.report)},
                 {"phi_image", r.image},
                 {"phi", certificate_json(r.certificate, c.verbose)},
                 {"parity", parity_json(parity)},
                 {"nontrivial", !r.certificate.output.empty()},
                 {"g_action", automorphism_json(g)}});
  return status;
}

inline int run_reduce(const Common& c, const std::string& word_text, std::ostream& out) {
  bool via_phi = false;
  const auto w = pair_word_arg(word_text, "word", via_phi);
  const auto cert = reduce_to_minimal(w, c.commutation(), c.search_budget(), c.verbose);
  const int status = cert.status == ReductionStatus::minimal_certified ? kOk : kInconclusive;
  if (c.pretty) {
    out << "input   " << to_string(cert.input) << (via_phi ? "  (phi image)" : "") << '\n'
        << "output  " << to_string(cert.output) << '\n'
        << "status  " << to_string(cert.status) << " (" << to_string(cert.mode) << ", "
        << cert.states_explored << " states)\n";
    return status;
  }
  json j = certificate_json(cert, c.verbose);
  j["command"] = "reduce";
  j["phi_image"] = via_phi;
  emit(out, j);
  return status;
}

inline int run_equal(const Common& c, const std::string& lhs, const std::string& rhs,
                     std::ostream& out) {
  bool phi_l = false, phi_r = false;
  const auto u = pair_word_arg(lhs, "lhs", phi_l);
  const auto v = pair_word_arg(rhs, "rhs", phi_r);
  const auto verdict = words_equal(u, v, c.commutation(), c.search_budget());
  const int status = verdict.verdict == Verdict::equal      ? kOk
                     : verdict.verdict == Verdict::distinct ? kNegative
                                                            : kInconclusive;
  if (c.pretty) {
    out << to_string(verdict.verdict) << " (" << to_string(verdict.evidence) << ", "
        << c.mode << ")\n";
    return status;
  }
  json j = verdict_json(verdict, c.verbose);
  j["command"] = "equal";
  j["mode"] = to_string(c.commutation());
  emit(out, j);
  return status;
}

inline int run_verify(const Common& c, const std::string& group, std::ostream& out) {
  if (group == "phi") {
    const auto r = verify_phi_well_defined(c.n, c.commutation(), c.search_budget());
    const int status = r.summary == CheckSummary::pass   ? kOk
                       : r.summary == CheckSummary::fail ? kNegative
                                                         : kInconclusive;
    if (c.pretty) {
      out << "phi relator check, n = " << r.n << ", " << to_string(r.mode) << ": "
          << to_string(r.summary) << "  (" << r.checks.size() << " relators: "
          << r.count(Verdict::equal) << " equal, " << r.count(Verdict::distinct) << " distinct, "
          << r.count(Verdict::unknown) << " unknown)\n";
      return status;
    }
    json j = phi_verification_json(r);
    j["command"] = "verify-relations";
    emit(out, j);
    return status;
  }
  if (group == "g") {
    const auto r = verify_g_well_defined(c.n);
    const int status = r.summary == CheckSummary::pass ? kOk : kNegative;
    if (c.pretty) {
      const auto ok = std::count_if(r.checks.begin(), r.checks.end(),
                                    [](const auto& x) { return x.identity; });
      out << "g relator check, n = " << r.n << ": " << to_string(r.summary) << "  (" << ok << "/"
          << r.checks.size() << " relators act trivially; involutions "
          << (r.involutions ? "ok" : "FAIL") << ")\n";
      return status;
    }
    json j = g_verification_json(r);
    j["command"] = "verify-relations";
    emit(out, j);
    return status;
  }
  throw ParameterError("--group must be 'phi' or 'g'");
}

inline int run_act(const Common& c, const std::string& word_text,
                   const std::optional<std::string>& target_text, std::ostream& out) {
  const auto w = get_as<Word<Triple>>(parse_json_arg(word_text, "word"), "word");
  check_within(w, c.n);
  const auto g = g_of_word(w, c.n);
  std::optional<Z2FreeWord> target, image;
  if (target_text) {
    target = get_as<Z2FreeWord>(parse_json_arg(*target_text, "target"), "target");
    for (const auto& x : *target)
      if (!x.within(c.n)) throw ParameterError("target label " + to_string(x) + " outside n");
    image = gnk::apply(g, *target);
  }
  if (c.pretty) {
    out << "g(" << to_string(w) << ")\n";
    if (g.is_identity()) out << "  identity\n";
    for (const auto& [x, img] : g.moved()) out << "  " << to_string(x) << " -> " << to_string(img) << '\n';
    if (target) out << "image of " << to_string(*target) << ": " << to_string(*image) << '\n';
    return kOk;
  }
  json j{{"command", "act"}, {"n", c.n}, {"word", w}, {"automorphism", automorphism_json(g)},
         {"identity", g.is_identity()}};
  if (target) {
    j["target"] = *target;
    j["image"] = *image;
  }
  emit(out, j);
  return kOk;
}

inline int run_certify(const Common& c, const std::string& word_text, std::ostream& out) {
  const json j = parse_json_arg(word_text, "word");
  const auto mode = c.commutation();
  if (is_triple_word(j) || (j.is_array() && j.empty())) {
    const auto cert = certify_minimal_via_phi(get_as<Word<Triple>>(j, "word"), mode, c.search_budget());
    const int status = cert.verdict == ViaPhiVerdict::minimal ? kOk : kInconclusive;
    if (c.pretty) {
      out << to_string(cert.verdict) << "  (phi image " << to_string(cert.image.status) << ", "
          << to_string(mode) << ", " << cert.image.states_explored << " states)\n";
      return status;
    }
    json r = via_phi_json(cert);
    r["command"] = "certify-minimal";
    emit(out, r);
    return status;
  }
  const auto cert = is_minimal(get_as<Word<PairPairGenerator>>(j, "word"), mode, c.search_budget());
  const int status = cert.status == MinimalityStatus::minimal_certified ? kOk
                     : cert.status == MinimalityStatus::not_minimal     ? kNegative
                                                                        : kInconclusive;
  if (c.pretty) {
    out << to_string(cert.status) << "  (" << to_string(mode) << ", " << cert.states_explored
        << " states)\n";
    return status;
  }
  json r = minimality_json(cert);
  r["command"] = "certify-minimal";
  emit(out, r);
  return status;
}

inline int run_events(const Common& c, const std::string& braid_text, bool csv, std::ostream& out,
                      std::ostream& err) {
  const BraidWord b = parse_braid(braid_text, c.n);
  const auto scan = detect_events(realize(b, c.epsilon, c.seed));
  const int status = scan.report.pass() ? kOk : kInconclusive;
  if (!scan.report.pass()) err << "warning: degenerate realization (" << scan.report.degeneracy() << ")\n";
  if (csv) {
    out << "t,i,j,k,middle\n" << std::setprecision(17);
    for (const auto& e : scan.events)
      out << e.t << ',' << e.triple.left << ',' << e.triple.middle << ',' << e.triple.right << ','
          << e.middle() << '\n';
    return status;
  }
  if (c.pretty) {
    out << std::setprecision(12);
    for (const auto& e : scan.events) out << std::setw(16) << e.t << "  " << to_string(e.triple) << '\n';
    out << scan.events.size() << " events, " << (scan.report.pass() ? "stable" : "degenerate") << '\n';
    return status;
  }
  emit(out, events_json(scan.events));
  return status;
}

}  // namespace detail

/// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Invariants of pure braids in G'_n^3 and G_{n(n-1)}^2", "gnk"};
  app.require_subcommand(1);
  detail::Common c;

  const auto add_common = [&](CLI::App* sub, bool needs_n, bool search) {
    auto* n_opt = sub->add_option("--n", c.n, "number of strands")->check(CLI::Range(2, 64));
    if (needs_n) n_opt->required();
    if (search) {
      sub->add_option("--mode", c.mode, "commutation reading: ordered | unordered-sets");
      sub->add_option("--budget", c.budget, "search budget in states (env GNK_BUDGET)")
          ->check(CLI::PositiveNumber);
    }
    sub->add_flag("--pretty", c.pretty, "human-readable output");
    sub->add_flag("--json", c.json_out, "JSON output (default)");
    sub->add_flag("--verbose", c.verbose, "include move traces");
  };
  const auto add_motion = [&](CLI::App* sub) {
    sub->add_option("--epsilon", c.epsilon, "base point jitter")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", c.seed, "jitter seed");
    sub->add_option("--retries", c.retries, "fresh-seed retries on degeneracy")
        ->check(CLI::NonNegativeNumber);
  };

  std::string braid, word, lhs, rhs, group = "phi";
  std::optional<std::string> target;
  bool csv = false;

  auto* invariant = app.add_subcommand("invariant", "f, Phi, parity and g-action of a pure braid");
  add_common(invariant, true, true);
  add_motion(invariant);
  invariant->add_option("--braid", braid, "braid word, e.g. \"s2 s2\"")->required();

  auto* reduce = app.add_subcommand("reduce", "reduce a G^2 word (or the phi image of a G'^3 word)");
  add_common(reduce, false, true);
  reduce->add_option("--word", word, "JSON word")->required();

  auto* equal = app.add_subcommand("equal", "decide equality of two G^2 words");
  add_common(equal, false, true);
  equal->add_option("--lhs", lhs, "JSON word")->required();
  equal->add_option("--rhs", rhs, "JSON word")->required();

  auto* verify = app.add_subcommand("verify-relations", "check phi or g on every relator of G'_n^3");
  add_common(verify, true, true);
  verify->add_option("--group", group, "phi | g");

  auto* act = app.add_subcommand("act", "apply g of a G'^3 word to a free-product word");
  add_common(act, true, false);
  act->add_option("--word", word, "JSON G'^3 word")->required();
  act->add_option("--target", target, "JSON word in the a_{ij}");

  auto* certify = app.add_subcommand("certify-minimal", "minimality certificate (via phi for G'^3 words)");
  add_common(certify, false, true);
  certify->add_option("--word", word, "JSON word")->required();

  auto* events = app.add_subcommand("events", "dump the collinearity events of a pure braid");
  add_common(events, true, false);
  add_motion(events);
  events->add_option("--braid", braid, "braid word")->required();
  events->add_flag("--csv", csv, "CSV instead of JSON");

  std::vector<std::string> storage{"gnk"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (invariant->parsed()) return detail::run_invariant(c, braid, out);
    if (reduce->parsed()) return detail::run_reduce(c, word, out);
    if (equal->parsed()) return detail::run_equal(c, lhs, rhs, out);
    if (verify->parsed()) return detail::run_verify(c, group, out);
    if (act->parsed()) return detail::run_act(c, word, target, out);
    if (certify->parsed()) return detail::run_certify(c, word, out);
    if (events->parsed()) return detail::run_events(c, braid, csv, out, err);
  } catch (const DegenerateBraidError& e) {
    err << "error: " << e.what() << '\n';
    return kInconclusive;
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

inline int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

}  // namespace gnk::cli

#pragma once

// JSON encodings:
//   OrderedPair        [i, j]
//   Triple             [i, j, k]            (canonicalized on read)
//   PlainTriple        [i, j, k]            (sorted on read)
//   PairPairGenerator  [[i, j], [k, l]]     (canonicalized on read)
//   Word               array of generators
//   FreeAutomorphism   {"i.j": [[a, b], ...], ...}  moved generators only
//   events             [{t, triple: [i, j, k], middle: j}, ...]

#include <json.hpp>

#include "gnk/braid_dynamics.hpp"
#include "gnk/free_z2_aut.hpp"
#include "gnk/g2_engine.hpp"
#include "gnk/g3_groups.hpp"
#include "gnk/words.hpp"

namespace gnk {

using json = nlohmann::json;

namespace detail {

inline void expect_array(const json& j, std::size_t size, const char* what) {
  if (!j.is_array() || j.size() != size)
    throw ParameterError(std::string("expected ") + what + ", got " + j.dump());
}

inline Strand strand_from(const json& j) {
  if (!j.is_number_integer()) throw ParameterError("strand index must be an integer, got " + j.dump());
  return j.get<Strand>();
}

}  // namespace detail

inline void to_json(json& j, const OrderedPair& x) { j = json::array({x.first, x.second}); }
inline void from_json(const json& j, OrderedPair& x) {
  detail::expect_array(j, 2, "ordered pair [i, j]");
  x = OrderedPair::make(detail::strand_from(j[0]), detail::strand_from(j[1]));
}

inline void to_json(json& j, const Triple& t) { j = json::array({t.left, t.middle, t.right}); }
inline void from_json(const json& j, Triple& t) {
  detail::expect_array(j, 3, "triple [i, j, k]");
  t = Triple::make(detail::strand_from(j[0]), detail::strand_from(j[1]), detail::strand_from(j[2]));
}

inline void to_json(json& j, const PlainTriple& t) { j = t.strands; }
inline void from_json(const json& j, PlainTriple& t) {
  detail::expect_array(j, 3, "triple [i, j, k]");
  t = PlainTriple::make(detail::strand_from(j[0]), detail::strand_from(j[1]),
                        detail::strand_from(j[2]));
}

template <class Label>
void to_json(json& j, const PairGenerator<Label>& g) {
  j = json::array({json(g.p), json(g.q)});
}
template <class Label>
void from_json(const json& j, PairGenerator<Label>& g) {
  detail::expect_array(j, 2, "pair generator [p, q]");
  g = PairGenerator<Label>::make(j[0].get<Label>(), j[1].get<Label>());
}

/// "i.j" key of an automorphism object.
inline std::string label_key(const OrderedPair& x) { return to_string(x); }

inline OrderedPair parse_label_key(const std::string& key) {
  const auto dot = key.find('.');
  if (dot == std::string::npos) throw ParameterError("label key '" + key + "' is not of the form i.j");
  try {
    std::size_t used = 0;
    const int i = std::stoi(key.substr(0, dot), &used);
    if (used != dot) throw ParameterError("bad label key '" + key + "'");
    const std::string rest = key.substr(dot + 1);
    const int j = std::stoi(rest, &used);
    if (used != rest.size()) throw ParameterError("bad label key '" + key + "'");
    return OrderedPair::make(i, j);
  } catch (const std::logic_error&) {
    throw ParameterError("bad label key '" + key + "'");
  }
}

inline json automorphism_json(const FreeAutomorphism& a) {
  json j = json::object();
  for (const auto& [x, w] : a.moved()) j[label_key(x)] = w;
  return j;
}

inline FreeAutomorphism automorphism_from_json(const json& j, int n) {
  if (!j.is_object()) throw ParameterError("automorphism must be a JSON object");
  FreeAutomorphism a(n);
  for (const auto& [key, value] : j.items())
    a.set_image(parse_label_key(key), value.get<Z2FreeWord>());
  return a;
}

template <class Label>
json certificate_json(const ReductionCertificate<Label>& c, bool verbose = false) {
  json j{{"input", c.input},
         {"output", c.output},
         {"status", to_string(c.status)},
         {"mode", to_string(c.mode)},
         {"states", c.states_explored}};
  if (verbose && c.move_trace) {
    json trace = json::array();
    for (const auto& m : *c.move_trace)
      trace.push_back({{"move", to_string(m.kind)}, {"positions", m.positions}, {"result", m.result}});
    j["move_trace"] = std::move(trace);
  }
  return j;
}

template <class Label>
ReductionCertificate<Label> certificate_from_json(const json& j) {
  ReductionCertificate<Label> c;
  c.input = j.at("input").get<Word<PairGenerator<Label>>>();
  c.output = j.at("output").get<Word<PairGenerator<Label>>>();
  const auto status = j.at("status").get<std::string>();
  if (status == "MINIMAL_CERTIFIED")
    c.status = ReductionStatus::minimal_certified;
  else if (status == "BUDGET_EXHAUSTED")
    c.status = ReductionStatus::budget_exhausted;
  else
    throw ParameterError("unknown certificate status '" + status + "'");
  c.mode = parse_mode(j.at("mode").get<std::string>());
  c.states_explored = j.at("states").get<std::size_t>();
  if (j.contains("move_trace")) {
    std::vector<MoveRecord<PairGenerator<Label>>> trace;
    for (const auto& m : j.at("move_trace")) {
      const auto kind = m.at("move").get<std::string>();
      MoveRecord<PairGenerator<Label>> r;
      if (kind == to_string(MoveKind::free_cancel))
        r.kind = MoveKind::free_cancel;
      else if (kind == to_string(MoveKind::exchange))
        r.kind = MoveKind::exchange;
      else if (kind == to_string(MoveKind::cancel))
        r.kind = MoveKind::cancel;
      else
        throw ParameterError("unknown move '" + kind + "'");
      r.positions = m.at("positions").get<std::vector<std::size_t>>();
      r.result = m.at("result").get<Word<PairGenerator<Label>>>();
      trace.push_back(std::move(r));
    }
    c.move_trace = std::move(trace);
  }
  return c;
}

template <class Label>
json minimality_json(const MinimalityCertificate<Label>& c) {
  json j{{"word", c.word},
         {"status", to_string(c.status)},
         {"mode", to_string(c.mode)},
         {"states", c.states_explored}};
  if (c.witness) j["witness"] = *c.witness;
  return j;
}

template <class Label>
json verdict_json(const EqualityVerdict<Label>& v, bool verbose = false) {
  json j{{"verdict", to_string(v.verdict)}, {"evidence", to_string(v.evidence)}};
  if (v.certificate) j["certificate"] = certificate_json(*v.certificate, verbose);
  return j;
}

inline json via_phi_json(const ViaPhiCertificate& c) {
  return {{"word", c.word}, {"verdict", to_string(c.verdict)}, {"image", minimality_json(c.image)}};
}

inline json phi_verification_json(const PhiVerification& r) {
  json rows = json::array();
  for (const auto& c : r.checks)
    rows.push_back({{"n", r.n},
                    {"mode", to_string(r.mode)},
                    {"relator_tag", to_string(c.tag)},
                    {"relator", c.relator},
                    {"image", c.image},
                    {"verdict", to_string(c.verdict)},
                    {"states", c.states}});
  return {{"group", "phi"},
          {"n", r.n},
          {"mode", to_string(r.mode)},
          {"summary", to_string(r.summary)},
          {"equal", r.count(Verdict::equal)},
          {"distinct", r.count(Verdict::distinct)},
          {"unknown", r.count(Verdict::unknown)},
          {"relators", std::move(rows)}};
}

inline json g_verification_json(const GVerification& r) {
  json rows = json::array();
  for (const auto& c : r.checks)
    rows.push_back({{"n", r.n},
                    {"relator_tag", to_string(c.tag)},
                    {"relator", c.relator},
                    {"verdict", c.identity ? "IDENTITY" : "NOT_IDENTITY"}});
  return {{"group", "g"},
          {"n", r.n},
          {"summary", to_string(r.summary)},
          {"involutions", r.involutions},
          {"relators", std::move(rows)}};
}

inline json events_json(const std::vector<CollinearityEvent>& events) {
  json j = json::array();
  for (const auto& e : events) j.push_back({{"t", e.t}, {"triple", e.triple}, {"middle", e.middle()}});
  return j;
}

inline std::vector<CollinearityEvent> events_from_json(const json& j) {
  if (!j.is_array()) throw ParameterError("event dump must be a JSON array");
  std::vector<CollinearityEvent> out;
  for (const auto& e : j) {
    CollinearityEvent ev;
    ev.t = e.at("t").get<double>();
    ev.triple = e.at("triple").get<Triple>();
    if (e.at("middle").get<Strand>() != ev.triple.middle)
      throw ParameterError("event middle does not match its triple");
    out.push_back(ev);
  }
  return out;
}

inline json stability_json(const StabilityReport& r) {
  const auto finite = [](double x) { return std::isfinite(x) ? json(x) : json(nullptr); };
  return {{"pass", r.pass()},
          {"event_count", r.event_count},
          {"min_gap", finite(r.min_gap)},
          {"min_slope", finite(r.min_slope)},
          {"simultaneous", r.simultaneous},
          {"four_point", r.four_point},
          {"tangency", r.tangency},
          {"middle_tie", r.middle_tie},
          {"collision", r.collision},
          {"retries_used", r.retries_used}};
}

template <class G>
json parity_json(const ParityVector<G>& p) {
  json j = json::array();
  for (const auto& g : p) j.push_back(g);
  return j;
}

}  // namespace gnk

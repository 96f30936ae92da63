#include "hh/json_io.hpp"

#include <sstream>

#include "json.hpp"

namespace hh {

namespace {

using json = nlohmann::ordered_json;

json to_json(const Counterexample& c) {
  return json{{"x", c.x}, {"y", c.y}, {"t", c.t}, {"violation", c.violation}};
}

json class_spec_json(const ClassSpec& s) {
  json j{{"kind", to_string(s.kind)}};
  if (s.kind == ClassKind::m_convex || s.kind == ClassKind::alpha_m_convex) j["m"] = s.m;
  if (s.kind == ClassKind::alpha_m_convex) j["alpha"] = s.alpha;
  return j;
}

json cert_summary_json(const CertificateSummary& c) {
  return json{{"role", c.role},
              {"class", c.class_name},
              {"verdict", to_string(c.verdict)},
              {"worst_violation", c.worst_violation}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string serialize(const ConvexityCertificate& c) {
  json j{{"type", "certificate"},
         {"class", class_spec_json(c.spec)},
         {"domain", {{"a", c.domain.a}, {"b", c.domain.b}}},
         {"grid", {{"n_xy", c.grid.n_xy}, {"n_t", c.grid.n_t}}},
         {"certify_tol", c.certify_tol},
         {"worst_violation", c.worst_violation},
         {"verdict", to_string(c.verdict)},
         {"checked_range", {{"lo", c.checked_lo}, {"hi", c.checked_hi}}}};
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  if (c.in_k_class) j["in_k_class"] = *c.in_k_class;
  if (c.fault_note) j["fault_note"] = *c.fault_note;
  return dump(j);
}

std::string serialize(const MonotonicityCertificate& c) {
  json j{{"type", "certificate"},
         {"class", {{"kind", "non_increasing"}}},
         {"domain", {{"a", c.domain.a}, {"b", c.domain.b}}},
         {"grid", {{"n", c.n}}},
         {"certify_tol", c.certify_tol},
         {"worst_violation", c.worst_violation},
         {"verdict", to_string(c.verdict)}};
  if (c.counterexample) j["counterexample"] = to_json(*c.counterexample);
  if (c.fault_note) j["fault_note"] = *c.fault_note;
  return dump(j);
}

std::string serialize(const BoundReport& r) {
  json j{{"type", "bound_report"},
         {"theorem_id", r.theorem_id},
         {"expressions", r.expressions},
         {"interval", {{"a", r.interval.a}, {"b", r.interval.b}}},
         {"params", r.params},
         {"quantities", r.quantities},
         {"quad_error", r.quad_error},
         {"certificates", json::array()},
         {"verdict", to_string(r.verdict)},
         {"margin", r.margin},
         {"notes", r.notes}};
  for (const auto& c : r.certificates) j["certificates"].push_back(cert_summary_json(c));
  return dump(j);
}

std::string serialize(const FuzzSummary& s) {
  json j{{"type", "fuzz_summary"},
         {"theorem_id", s.theorem_id},
         {"trials", s.trials},
         {"holds", s.holds},
         {"hypotheses_unmet", s.hypotheses_unmet},
         {"violations", s.violations},
         {"min_margin", s.min_margin},
         {"margin_histogram",
          {{"edges", s.margin_histogram.edges}, {"counts", s.margin_histogram.counts}}},
         {"discarded_draws", s.discarded_draws},
         {"seed", s.seed},
         {"rng_algorithm", s.rng_algorithm},
         {"violation_records", json::array()}};
  for (const auto& v : s.violation_records) {
    j["violation_records"].push_back(json{{"expressions", v.expressions},
                                          {"a", v.a},
                                          {"b", v.b},
                                          {"params", v.params},
                                          {"margin", v.margin}});
  }
  return dump(j);
}

std::string margins_csv(const FuzzSummary& s) {
  std::ostringstream out;
  out << "theorem_id,seed,bin_lo,count\n";
  for (std::size_t i = 0; i < s.margin_histogram.counts.size(); ++i) {
    out << s.theorem_id << "," << s.seed << "," << s.margin_histogram.edges[i] << ","
        << s.margin_histogram.counts[i] << "\n";
  }
  return out.str();
}

}  // namespace hh

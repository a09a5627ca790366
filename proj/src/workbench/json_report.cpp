#include "ccs/workbench/json_report.hpp"

namespace ccs {

using nlohmann::json;

namespace {

json big(const BigInt& v) { return to_decimal(v); }

json versioned(json body) {
  json out = {{"schema_version", kJsonSchemaVersion}};
  out.update(body);
  return out;
}

json certificate_body(const ConvexCertificate& cert) {
  return {{"size", cert.size()}, {"members", cert.members}, {"hull_cycle", cert.hull_cycle}};
}

json stats_body(const ChainStats& s) {
  return {{"spike", s.spike + 1},
          {"size", s.size},
          {"v", s.v},
          {"h", s.h},
          {"a", s.a},
          {"b", s.b},
          {"c", s.c},
          {"d", s.d},
          {"witnesses",
           {{"vertical", s.vertical_chain},
            {"horizontal", s.horizontal_chain},
            {"left", s.left_chain},
            {"right", s.right_chain},
            {"inner", s.inner_chain},
            {"outer", s.outer_chain}}}};
}

json optional_bool(const std::optional<bool>& b) { return b ? json(*b) : json(nullptr); }

json trace_body(const CertificateTrace& t) {
  json spikes = json::array();
  for (const SpikeTrace& s : t.spikes) {
    json entry = stats_body(s.stats);
    entry["vh"] = big(s.vh);
    entry["vertical_binomial"] = big(s.vertical_binom);
    entry["horizontal_binomial"] = big(s.horizontal_binom);
    entry["relaxed"] = big(s.relaxed);
    entry["size_le_vh"] = s.size_le_vh;
    entry["v_le_vertical_binomial"] = s.v_le_binom;
    entry["h_le_horizontal_binomial"] = s.h_le_binom;
    spikes.push_back(std::move(entry));
  }
  json candidates = json::array();
  for (const CandidateTrace& c : t.candidates) {
    candidates.push_back({{"source", to_string(c.source)},
                          {"spike", c.spike < 0 ? json(nullptr) : json(c.spike + 1)},
                          {"joined", c.joined},
                          {"extended", c.extended}});
  }
  return {{"points", t.points},
          {"k", t.k},
          {"strategy", to_string(t.strategy)},
          {"x", certificate_body(t.x)},
          {"spike_sizes",
           [&] {
             json sizes = json::array();
             for (const SpikeTrace& s : t.spikes) sizes.push_back(s.stats.size);
             return sizes;
           }()},
          {"product", big(t.product)},
          {"product_vh", big(t.product_vh)},
          {"product_binomials", big(t.product_binomials)},
          {"product_relaxed", big(t.product_relaxed)},
          {"inequalities",
           {{"clustering_bound", t.clustering_bound},
            {"product_le_vh", t.product_le_vh},
            {"vh_le_binomials", t.vh_le_binomials},
            {"binomials_le_relaxed", t.binomials_le_relaxed},
            {"target", t.target ? json(*t.target) : json(nullptr)},
            {"outer_below_target", optional_bool(t.outer_below_target)},
            {"right_left_below_target", optional_bool(t.right_left_below_target)},
            {"inner_sum_below_twice_target", optional_bool(t.inner_sum_below_twice)},
            {"relaxed_below_power", optional_bool(t.relaxed_below_power)},
            {"size_below_bound", optional_bool(t.size_below_bound)}}},
          {"spikes", spikes},
          {"candidates", candidates},
          {"chosen", t.chosen}};
}

}  // namespace

json to_json(const ValidationReport& report) {
  json violations = json::array();
  for (const AxiomInstance& v : report.violations) violations.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return versioned({{"status", report.status()}, {"violations", violations}, {"truncated", report.truncated}});
}

json to_json(const ConvexCertificate& cert) { return versioned(certificate_body(cert)); }

json to_json(const ChainStats& stats) { return versioned(stats_body(stats)); }

json to_json(const PseudoConfiguration& cfg, const SpikeDecomposition& dec) {
  json spikes = json::array();
  for (int i = 0; i < dec.k(); ++i) {
    json entry = stats_body(chain_stats(cfg, dec, i));
    entry["edge"] = {dec.vertex(i), dec.vertex(i + 1)};
    entry["members"] = dec.spike(i);
    spikes.push_back(std::move(entry));
  }
  json outside = json::array();
  for (Label p = 0; p < cfg.size(); ++p)
    if (!dec.assignment[p] && !std::binary_search(dec.x.members.begin(), dec.x.members.end(), p)) outside.push_back(p);
  return versioned({{"x", certificate_body(dec.x)}, {"spikes", spikes}, {"in_no_spike", outside}});
}

json to_json(const CertificateTrace& trace) { return versioned(trace_body(trace)); }

json to_json(const PipelineResult& result) {
  return versioned({{"certificate", certificate_body(result.certificate)}, {"trace", trace_body(result.trace)}});
}

json to_json(const BoundReport& r) {
  return versioned({{"n", r.n},
                    {"k_prescribed", r.k_prescribed},
                    {"exponent_prescribed", r.exponent_prescribed},
                    {"k_star", r.k_star},
                    {"exponent", r.exponent},
                    {"bound_log2_b", r.bound_log2_b},
                    {"implied",
                     {{"log2_c", r.bound_log2_c}, {"log2_c_prime", r.bound_log2_c_prime}, {"log2_e", r.bound_log2_e}}},
                    {"natural_log", {{"k_star", r.k_star_natural_log}, {"exponent", r.exponent_natural_log}}},
                    {"asymptotic_term", r.asymptotic_term}});
}

json to_json(const RealizabilityHint& hint) {
  json witness = nullptr;
  if (hint.witness) {
    witness = json::array();
    for (const Point& p : *hint.witness) witness.push_back({p.x.to_string(), p.y.to_string()});
  }
  return versioned(
      {{"status", to_string(hint.status)}, {"witness", witness}, {"attempts", hint.attempts}, {"budget", hint.budget}});
}

}  // namespace ccs

#pragma once
// JSON serialization for property reports and search results, plus the JSON
// search-config reader used by the command-line tool.
//
// Reports are emitted with a fixed key order and, by default, without any
// timing data, so repeated runs over the same inputs produce byte-identical
// output.  Timings can be appended as a trailing non-comparable section.

#include <string>
#include <vector>

#include <json.hpp>

#include <ringlab/dsl.hpp>
#include <ringlab/props.hpp>
#include <ringlab/search.hpp>
#include <ringlab/suite.hpp>

namespace ringlab::report {

using ordered_json = nlohmann::ordered_json;

inline const char* verdict_text(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

inline ordered_json witness_json(const FiniteAlgebra& a, const Witness& w) {
  ordered_json j;
  j["kind"] = w.kind;
  ordered_json elems = ordered_json::array();
  for (const Vec& v : w.tuple) elems.push_back(a.show(v));
  j["elements"] = std::move(elems);
  j["text"] = w.text;
  return j;
}

// {name, order, dim, field, local, chain, filtration_dims, nilpotency_index,
//  properties: {<name>: {verdict, witness?}}, unit_order_max, timings?}
inline ordered_json report_json(const FiniteAlgebra& a, const PropertyReport& r,
                                bool include_timings = false) {
  ordered_json j;
  j["name"] = r.name;
  j["order"] = r.order;
  j["dim"] = r.dim;
  j["field"] = a.F().name();
  j["local"] = r.filt.local;
  j["chain"] = r.chain;
  j["filtration_dims"] = r.filt.dims;
  j["nilpotency_index"] = r.filt.nilpotency_index;
  ordered_json props;
  for (const auto& [name, res] : r.properties) {
    ordered_json p;
    p["verdict"] = verdict_text(res.verdict);
    if (res.witness) p["witness"] = witness_json(a, *res.witness);
    props[name] = std::move(p);
  }
  j["properties"] = std::move(props);
  j["unit_order_max"] = r.unit_order_max;
  if (include_timings) {
    ordered_json t;
    t["total_seconds"] = r.total_seconds;
    for (const auto& [name, res] : r.properties)
      t[name + "_seconds"] = res.seconds;
    j["timings"] = std::move(t);
  }
  return j;
}

// One JSONL line per search hit: presentation text (or seed name), order,
// property vector, fingerprint.
inline std::string hit_json_line(const std::string& family,
                                 const search::Hit& hit) {
  ordered_json j;
  j["family"] = family;
  j["index"] = hit.index;
  j["label"] = hit.label;
  j["order"] = hit.report.order;
  if (hit.pres) {
    Presentation p = *hit.pres;
    j["presentation"] = dsl::render(dsl::spec_from_presentation(p));
  } else {
    j["seed"] = hit.seed;
  }
  ordered_json props;
  for (const auto& [name, res] : hit.report.properties)
    props[name] = verdict_text(res.verdict);
  j["properties"] = std::move(props);
  j["fingerprint"] = hit.fp.text();
  return j.dump();
}

inline ordered_json outcome_json(const search::SearchOutcome& out) {
  ordered_json j;
  j["family"] = out.config.family;
  if (out.min_order)
    j["min_order"] = *out.min_order;
  else
    j["min_order"] = nullptr;
  j["hits"] = out.hits.size();
  j["raw_hits"] = out.raw_hits;
  j["evaluated"] = out.evaluated;
  j["enumerated"] = out.stats.enumerated;
  j["built"] = out.stats.built;
  j["skipped_infinite"] = out.stats.skipped_infinite;
  j["skipped_large"] = out.stats.skipped_large;
  ordered_json census = ordered_json::object();
  for (const auto& [dim, count] : out.stats.dim_census)
    census[std::to_string(dim)] = count;
  j["dim_census"] = std::move(census);
  j["complete"] = out.complete;
  if (!out.note.empty()) j["note"] = out.note;
  return j;
}

// Human-readable text report.
inline std::string text_report(const FiniteAlgebra& a, const PropertyReport& r,
                               bool include_timings = false) {
  std::string s = r.name + ": order " + std::to_string(r.order) + ", dim " +
                  std::to_string(r.dim) + " over " + a.F().name() + "\n";
  s += std::string("  local: ") + (r.filt.local ? "yes" : "no") +
       "   chain: " + (r.chain ? "yes" : "no") + "\n";
  if (r.filt.dims.empty()) {
    s += "  radical: zero\n";
  } else {
    s += "  radical layer dims: ";
    for (size_t i = 0; i < r.filt.dims.size(); ++i)
      s += (i ? "," : "") + std::to_string(r.filt.dims[i]);
    s += " (nilpotency index " + std::to_string(r.filt.nilpotency_index) +
         ")\n";
  }
  for (const auto& [name, res] : r.properties) {
    s += "  " + name + ": " + verdict_text(res.verdict);
    if (!res.algorithm.empty()) s += "   [" + res.algorithm + "]";
    s += "\n";
    if (res.witness) s += "    witness: " + res.witness->text + "\n";
  }
  s += "  max unit order: " + std::to_string(r.unit_order_max) + "\n";
  if (include_timings)
    s += "  total seconds: " + std::to_string(r.total_seconds) + "\n";
  return s;
}

// Machine-readable suite summary; stable across runs unless timings are on.
inline ordered_json suite_json(const std::vector<suite::CriterionResult>& rs,
                               bool include_timings = false) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : rs) {
    ordered_json j;
    j["id"] = r.id;
    j["title"] = r.title;
    j["status"] = suite::status_text(r.status);
    j["detail"] = r.detail;
    if (include_timings) j["seconds"] = r.seconds;
    arr.push_back(std::move(j));
  }
  ordered_json top;
  top["suite"] = std::move(arr);
  bool all_pass = true, any_fail = false;
  for (const auto& r : rs) {
    all_pass &= r.status == suite::Status::Pass;
    any_fail |= r.status == suite::Status::Fail;
  }
  top["all_pass"] = all_pass;
  top["any_fail"] = any_fail;
  return top;
}

// ---------------------------------------------------------------------------
// Search config files
// ---------------------------------------------------------------------------
//
// {
//   "family": "minimality",
//   "generators": 3,
//   "sqzero": true,
//   "deg1_monomials": false, "deg2_monomials": true, "deg3_monomials": false,
//   "max_binomials": 2,
//   "maxdeg": 8,
//   "seeds": ["m2-f2"],
//   "max_order": 256,
//   "predicate": [{"property": "abelian", "value": true}, ...],
//   "result_cap": 64,
//   "time_budget_secs": 1500
// }

inline search::SearchConfig search_config_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(Errc::SyntaxError, std::string("search config: ") + e.what());
  }
  search::SearchConfig cfg;
  try {
    if (j.contains("family")) cfg.family = j["family"].get<std::string>();
    if (j.contains("generators")) cfg.generators = j["generators"].get<int>();
    if (j.contains("sqzero")) cfg.sqzero_all = j["sqzero"].get<bool>();
    if (j.contains("deg1_monomials"))
      cfg.deg1_monomials = j["deg1_monomials"].get<bool>();
    if (j.contains("deg2_monomials"))
      cfg.deg2_monomials = j["deg2_monomials"].get<bool>();
    if (j.contains("deg3_monomials"))
      cfg.deg3_monomials = j["deg3_monomials"].get<bool>();
    if (j.contains("max_binomials"))
      cfg.max_binomials = j["max_binomials"].get<int>();
    if (j.contains("maxdeg")) cfg.maxdeg = j["maxdeg"].get<int>();
    if (j.contains("seeds"))
      cfg.seeds = j["seeds"].get<std::vector<std::string>>();
    if (j.contains("max_order"))
      cfg.max_order = j["max_order"].get<std::uint64_t>();
    if (j.contains("predicate"))
      for (const auto& w : j["predicate"])
        cfg.predicate.push_back({w.at("property").get<std::string>(),
                                 w.at("value").get<bool>()});
    if (j.contains("result_cap"))
      cfg.result_cap = j["result_cap"].get<std::size_t>();
    if (j.contains("time_budget_secs"))
      cfg.time_budget_secs = j["time_budget_secs"].get<double>();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::SyntaxError, std::string("search config: ") + e.what());
  }
  return cfg;
}

}  // namespace ringlab::report

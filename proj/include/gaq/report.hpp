#pragma once

// Report rendering: one JSON document per invocation (schema_version 1) and a
// human rendering generated from the same document, so that every number in
// the text also appears in the machine output. Timing fields are advisory and
// excluded from any equality used in tests.

#include <json.hpp>

#include <iostream>
#include <string>

#include "gaq/resolution.hpp"
#include "gaq/weights.hpp"

namespace gaq {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline Json pi_report_json(const PiReport& rep) {
  Json j;
  j["functor"] = rep.functor;
  if (!rep.weight.empty()) j["weight"] = rep.weight;
  j["field"] = rep.field;
  j["absolute"] = rep.absolute;
  j["include_empty_partition"] = rep.include_empty;
  j["N"] = rep.N;
  j["B"] = rep.B;
  j["degree"] = rep.d;
  j["dims"] = rep.dims;
  j["approximate_at_truncation"] = rep.approximate;
  j["certificates_ok"] = rep.certificates_ok;
  j["stability"] = rep.stability;
  if (!rep.previous_dims.empty()) j["previous_dims"] = rep.previous_dims;
  Json stages = Json::array();
  for (const auto& st : rep.stages) {
    Json s;
    Json shape = Json::array();
    for (const auto& [lam, mult] : st.shape) shape.push_back({{"lambda", lam}, {"multiplicity", mult}});
    s["shape"] = shape;
    s["level_dims"] = st.level_dims;
    s["rank_delta"] = st.rank_delta;
    s["t_rank"] = st.t_rank;
    s["s_rank"] = st.s_rank;
    s["rank_bd2"] = st.rank_bd2;
    Json certs = Json::array();
    for (const auto& c : st.certs)
      certs.push_back({{"lambda", c.lambda}, {"rank", c.rank}, {"expected", c.expected}, {"ok", c.ok()}});
    s["certificates"] = certs;
    stages.push_back(std::move(s));
  }
  j["stages"] = stages;
  if (!rep.notes.empty()) j["notes"] = rep.notes;
  return j;
}

inline std::string render_dims(const Json& dims) {
  std::string s = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ", ";
    s += dims[i].dump();
  }
  return s + "]";
}

inline std::string render_pi_report(const Json& j) {
  std::ostringstream os;
  std::string what = j["functor"] == "tor" ? ("Tor^Y(" + j.value("weight", std::string()) + ", -)")
                                           : (j["absolute"].get<bool>() ? "pi_* (absolute)" : "pi_*^Y");
  os << what << " over " << j["field"].get<std::string>() << " at truncation (N=" << j["N"] << ", B=" << j["B"]
     << "), degree " << j["degree"] << "\n";
  os << "  dims " << render_dims(j["dims"]);
  if (j["approximate_at_truncation"].get<bool>()) os << "   (approximate at this truncation)";
  os << "\n";
  os << "  certificates " << (j["certificates_ok"].get<bool>() ? "all true" : "FAILED") << ", stability "
     << j["stability"].get<std::string>();
  if (j.contains("previous_dims")) os << " against previous dims " << render_dims(j["previous_dims"]);
  os << "\n";
  for (const auto& s : j["stages"]) {
    os << "  stage: ";
    bool first = true;
    for (const auto& sh : s["shape"]) {
      if (sh["multiplicity"].get<long>() == 0) continue;
      if (!first) os << " + ";
      os << "Gamma" << sh["lambda"].get<std::string>() << "^" << sh["multiplicity"];
      first = false;
    }
    if (first) os << "0";
    os << "\n         level dims " << render_dims(s["level_dims"]) << ", rank_delta " << s["rank_delta"]
       << ", t " << s["t_rank"] << ", s " << s["s_rank"] << ", rank_bd2 " << s["rank_bd2"] << "\n";
  }
  return os.str();
}

struct Report {
  Json doc;           // the machine document
  std::string human;  // rendered from doc
  int exit_code = 0;

  static Report make(const std::string& command, Json params, Json results, const std::string& human,
                     int exit_code = 0) {
    Report r;
    r.doc["schema_version"] = kSchemaVersion;
    r.doc["command"] = command;
    r.doc["parameters"] = std::move(params);
    r.doc["results"] = std::move(results);
    r.human = human;
    r.exit_code = exit_code;
    return r;
  }
};

// strip advisory fields (timings, cache provenance) before any equality
// comparison
inline Json strip_timings(Json j) {
  j.erase("timings_ms");
  j.erase("cache");
  if (j.contains("results") && j["results"].is_object()) {
    j["results"].erase("timings_ms");
    j["results"].erase("cache");
  }
  return j;
}

}  // namespace gaq

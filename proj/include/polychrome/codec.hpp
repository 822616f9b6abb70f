#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polychrome/bounds.hpp"
#include "polychrome/certificate.hpp"
#include "polychrome/colorings.hpp"
#include "polychrome/errors.hpp"
#include "polychrome/search.hpp"
#include "polychrome/verifier.hpp"

namespace polychrome {

using Json = nlohmann::ordered_json;

inline constexpr int kColoringFormatVersion = 1;

// Canonical coloring file: fixed key order, residues already reduced.
inline Json coloring_to_json(const LinearColoring& c) {
  Json j;
  j["format_version"] = kColoringFormatVersion;
  j["ell"] = c.ell;
  j["moduli"] = c.group.moduli();
  Json weights = Json::array();
  for (const auto& w : c.weights) weights.push_back(w.residues);
  j["weights"] = std::move(weights);
  j["label"] = c.label;
  return j;
}

inline std::string encode_coloring(const LinearColoring& c) {
  return coloring_to_json(c).dump(2) + "\n";
}

inline LinearColoring coloring_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("coloring file: expected a JSON object");
  for (const char* key : {"format_version", "ell", "moduli", "weights"})
    if (!j.contains(key)) throw ParseError(std::string("coloring file: missing field '") + key + "'");
  if (j["format_version"].get<int>() != kColoringFormatVersion)
    throw ParseError("coloring file: unsupported format_version");
  int ell = j["ell"].get<int>();
  if (ell < 0) throw ParseError("coloring file: field 'ell' must be >= 0");
  std::vector<int64_t> moduli;
  try {
    moduli = j["moduli"].get<std::vector<int64_t>>();
  } catch (const Json::exception&) {
    throw ParseError("coloring file: field 'moduli' must be an integer array");
  }
  Group g{moduli};
  if (!j["weights"].is_array() || j["weights"].size() != size_t(ell) + 1)
    throw ParseError("coloring file: field 'weights' must list ell+1 weight vectors");
  std::vector<GroupElement> weights;
  for (size_t i = 0; i < j["weights"].size(); ++i) {
    std::vector<int64_t> r;
    try {
      r = j["weights"][i].get<std::vector<int64_t>>();
    } catch (const Json::exception&) {
      throw ParseError("coloring file: weights[" + std::to_string(i) + "] must be an integer array");
    }
    if (r.size() != moduli.size())
      throw ParseError("coloring file: weights[" + std::to_string(i) + "] has " +
                       std::to_string(r.size()) + " residues, group has " +
                       std::to_string(moduli.size()) + " factors");
    GroupElement e{std::move(r)};
    if (!g.valid(e))
      throw ParseError("coloring file: weights[" + std::to_string(i) + "] outside canonical range");
    weights.push_back(std::move(e));
  }
  std::string label = j.contains("label") ? j["label"].get<std::string>() : "";
  // surjectivity is re-checked here; throws NotSurjective
  return make_linear(std::move(g), std::move(weights), ell, std::move(label));
}

inline LinearColoring decode_coloring(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("coloring file: ") + e.what());
  }
  return coloring_from_json(j);
}

inline void save_coloring(const LinearColoring& c, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open " + path + " for writing");
  out << encode_coloring(c);
}

inline LinearColoring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return decode_coloring(ss.str());
}

// ---- report serialization ----

inline Json verdict_to_json(const Verdict& v) {
  Json j;
  j["mode"] = to_string(v.mode);
  j["polychromatic"] = v.polychromatic;
  if (v.mode == VerifyMode::sampled && v.polychromatic) j["note"] = "no counterexample found";
  j["states_enumerated"] = v.states_enumerated;
  if (v.witness) {
    Json w;
    w["embedding_class"] = {{"d", v.witness->embedding_class.d},
                            {"residues", v.witness->embedding_class.residues}};
    w["missing_color"] = v.witness->missing_color.residues;
    if (!v.witness->embedding.empty()) w["embedding"] = v.witness->embedding;
    j["witness"] = std::move(w);
  } else {
    j["witness"] = nullptr;
  }
  return j;
}

inline Json certificate_to_json(const CertificateReport& r) {
  Json j;
  j["t"] = r.params.t;
  j["n"] = r.params.modulus_n;
  j["variant"] = r.params.variant == CruxParams::Variant::A ? "A" : "B";
  j["m"] = r.params.m();
  j["d"] = r.params.target_d();
  j["colors"] = r.params.m() * r.params.modulus_n;
  Json obs = Json::array();
  for (const auto& ob : r.obligations) {
    Json o;
    o["name"] = ob.name;
    o["universe"] = ob.universe;
    o["pass"] = ob.pass;
    if (!ob.counterexample.empty()) o["counterexample"] = ob.counterexample;
    obs.push_back(std::move(o));
  }
  j["obligations"] = std::move(obs);
  j["pass"] = r.pass;
  return j;
}

inline Json lattice_to_json(const LatticeCertificate& c) {
  Json j;
  j["N"] = c.N;
  Json basis = Json::array();
  for (const auto& row : c.kernel_basis) basis.push_back(std::vector<int64_t>{row[0], row[1], row[2]});
  j["kernel_basis"] = std::move(basis);
  j["shortest_vec"] = std::vector<int64_t>{c.shortest_vec[0], c.shortest_vec[1], c.shortest_vec[2]};
  j["c_squared_times_2"] = c.c_squared_times_2;
  j["s"] = c.s;
  j["frustum_bound"] = c.frustum_bound;
  j["sphere_ok"] = c.sphere_ok;
  j["frustum_ok"] = c.frustum_ok;
  return j;
}

inline Json asymptotic_to_json(const AsymptoticReport& r) {
  Json j;
  j["c_over_d_max"] = r.c_over_d_max;
  j["s_over_d"] = r.s_over_d;
  j["n_ratio_bound"] = r.n_ratio_bound;
  return j;
}

inline Json search_to_json(const SearchResult& r) {
  Json j;
  j["d"] = r.d;
  j["ell"] = r.ell;
  j["max_order_searched"] = r.max_order_searched;
  j["best_count"] = r.best_count;
  Json best = Json::array();
  for (const auto& c : r.best) best.push_back(coloring_to_json(c));
  j["best"] = std::move(best);
  j["counters"] = {{"candidates", r.candidates},
                   {"not_surjective", r.not_surjective},
                   {"pruned_by_bound", r.pruned_by_bound},
                   {"refuted", r.refuted},
                   {"verified", r.verified},
                   {"budget_skipped", r.budget_skipped},
                   {"groups_examined", r.groups_examined},
                   {"groups_skipped_by_binom", r.groups_skipped_by_binom}};
  j["complete"] = r.complete;
  return j;
}

}  // namespace polychrome

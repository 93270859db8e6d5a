#pragma once

// JSON payloads: elimination job files and parametric matrices.

#include <json.hpp>

#include <regex>
#include <set>
#include <string>
#include <vector>

#include "disclab/copositive.hpp"
#include "disclab/groebner.hpp"

namespace disclab {

using json = nlohmann::json;

struct EliminationJob {
  VarSetPtr vars;  ///< x variables followed by parameters
  FamilySpec family;
  OrderKind order = OrderKind::Block;
};

namespace detail {

inline std::vector<std::string> string_list(const json& j, const char* key, bool required) {
  if (!j.contains(key)) {
    if (required) throw Error(ErrorKind::InputParse, std::string("missing field '") + key + "'");
    return {};
  }
  const auto& v = j.at(key);
  if (!v.is_array()) throw Error(ErrorKind::InputParse, std::string("field '") + key + "' must be an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw Error(ErrorKind::InputParse, std::string("field '") + key + "' must hold strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace detail

/// {"vars": [...], "params": [...], "f": "...", "equalities": [...],
///  "inequalities": [...], "mode": "critical|kkt|active_subset",
///  "dehomog_var": "x1", "order": "block|lex"}
inline EliminationJob parse_elimination_job(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InputParse, "job must be a JSON object");
  static const std::set<std::string> known{"vars", "params", "f", "equalities", "inequalities",
                                           "mode", "dehomog_var", "order", "name"};
  for (const auto& [k, v] : j.items())
    if (!known.count(k)) throw Error(ErrorKind::InputParse, "unknown job field '" + k + "'");
  auto xs = detail::string_list(j, "vars", true);
  auto ps = detail::string_list(j, "params", false);
  if (xs.empty()) throw Error(ErrorKind::InputParse, "'vars' is empty");
  std::vector<std::string> names = xs;
  names.insert(names.end(), ps.begin(), ps.end());
  EliminationJob job;
  job.vars = VarSet::make(names);
  if (!j.contains("f") || !j.at("f").is_string()) throw Error(ErrorKind::InputParse, "missing string field 'f'");
  job.family.f = parse_expression(j.at("f").get<std::string>(), job.vars);
  for (const auto& s : detail::string_list(j, "equalities", false))
    job.family.constraints.equalities.push_back(parse_expression(s, job.vars));
  for (const auto& s : detail::string_list(j, "inequalities", false))
    job.family.constraints.inequalities.push_back(parse_expression(s, job.vars));
  for (std::size_t i = 0; i < xs.size(); ++i) job.family.x_vars.push_back(i);
  for (std::size_t i = 0; i < ps.size(); ++i) job.family.params.push_back(xs.size() + i);

  std::string mode = j.value("mode", std::string("critical"));
  if (mode == "critical") job.family.mode = LocusMode::Critical;
  else if (mode == "kkt") job.family.mode = LocusMode::Kkt;
  else if (mode == "active_subset") job.family.mode = LocusMode::ActiveSubset;
  else throw Error(ErrorKind::InputParse, "unknown mode '" + mode + "'");

  if (j.contains("dehomog_var") && !j.at("dehomog_var").is_null()) {
    auto dv = j.at("dehomog_var").get<std::string>();
    auto idx = job.vars->index(dv);
    if (idx >= xs.size()) throw Error(ErrorKind::InputParse, "dehomog_var must be one of 'vars'");
    job.family.dehomog_var = idx;
  }
  std::string order = j.value("order", std::string("block"));
  if (order == "block") job.order = OrderKind::Block;
  else if (order == "lex") job.order = OrderKind::Lex;
  else if (order == "grevlex")
    throw Error(ErrorKind::InputParse, "order 'grevlex' does not eliminate; use 'block' or 'lex'");
  else throw Error(ErrorKind::InputParse, "unknown order '" + order + "'");
  return job;
}

inline json locus_to_json(const std::vector<LocusResult>& rs, const EliminationJob& job) {
  json systems = json::array();
  const auto& vs = *job.vars;
  for (const auto& r : rs) {
    json active = json::array();
    for (auto a : r.active) active.push_back(a);
    json gens = json::array();
    for (const auto& g : r.generators) gens.push_back(to_string(g));
    systems.push_back({{"active", active},
                       {"generators", gens},
                       {"zero_ideal", r.zero_ideal},
                       {"unit_ideal", r.unit_ideal},
                       {"pairs_processed", r.stats.pairs_processed}});
  }
  json params = json::array();
  for (auto p : job.family.params) params.push_back(vs.name(p));
  return {{"params", params}, {"systems", systems}};
}

/// {"n": k, "entries": {"i,j": "<poly>"}, "params": [...]} with 1-based
/// upper-triangle indices. Missing entries are zero. When "params" is
/// absent the parameter names are collected from the entry strings.
inline SymMatrixParam parse_matrix_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer())
    throw Error(ErrorKind::InputParse, "matrix needs an integer field 'n'");
  const long n = j.at("n").get<long>();
  if (n <= 0) throw Error(ErrorKind::InputParse, "matrix dimension must be positive");
  if (!j.contains("entries") || !j.at("entries").is_object())
    throw Error(ErrorKind::InputParse, "matrix needs an object field 'entries'");
  std::vector<std::string> params;
  if (j.contains("params")) {
    params = detail::string_list(j, "params", true);
  } else {
    std::set<std::string> seen;
    static const std::regex ident("[A-Za-z_][A-Za-z0-9_]*");
    for (const auto& [k, v] : j.at("entries").items()) {
      if (!v.is_string()) throw Error(ErrorKind::InputParse, "entry '" + k + "' must be a string");
      auto s = v.get<std::string>();
      for (auto it = std::sregex_iterator(s.begin(), s.end(), ident); it != std::sregex_iterator(); ++it)
        if (seen.insert(it->str()).second) params.push_back(it->str());
    }
  }
  auto vars = VarSet::make(params);
  SymMatrixParam A(static_cast<std::size_t>(n), vars);
  static const std::regex key("\\s*(\\d+)\\s*,\\s*(\\d+)\\s*");
  for (const auto& [k, v] : j.at("entries").items()) {
    std::smatch m;
    if (!std::regex_match(k, m, key)) throw Error(ErrorKind::InputParse, "entry key '" + k + "' is not 'i,j'");
    long i = std::stol(m[1]), jj = std::stol(m[2]);
    if (i < 1 || jj < 1 || i > n || jj > n) throw Error(ErrorKind::InputParse, "entry key '" + k + "' out of range");
    if (!v.is_string()) throw Error(ErrorKind::InputParse, "entry '" + k + "' must be a string");
    A.set(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(jj - 1), parse_expression(v.get<std::string>(), vars));
  }
  return A;
}

}  // namespace disclab

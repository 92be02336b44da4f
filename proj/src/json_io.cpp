#include "koszul/json_io.hpp"

#include <fstream>

#include "koszul/errors.hpp"

namespace koszul {

using nlohmann::json;

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw file_error("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw schema_error(path + ": " + e.what());
  }
  return j;
}

namespace {

std::uint64_t require_uint(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned())
    throw schema_error(std::string("expected non-negative integer field '") + key + "'");
  return j[key].get<std::uint64_t>();
}

std::int64_t require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw schema_error(std::string("expected integer field '") + key + "'");
  return j[key].get<std::int64_t>();
}

const json& require_array(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw schema_error(std::string("expected array field '") + key + "'");
  return j[key];
}

}  // namespace

QuadraticPresentation presentation_from_json(const json& j) {
  if (!j.is_object()) throw schema_error("presentation must be an object");
  std::size_t d = static_cast<std::size_t>(require_uint(j, "dim"));
  std::vector<std::string> names;
  if (j.contains("generators")) {
    if (!j["generators"].is_array()) throw schema_error("'generators' must be an array");
    for (const auto& g : j["generators"]) {
      if (!g.is_string()) throw schema_error("generator names must be strings");
      names.push_back(g.get<std::string>());
    }
    if (names.size() != d) throw schema_error("'generators' must list exactly dim names");
  }
  const json& rels = require_array(j, "relations");
  BitMatrix rows(rels.size(), d * d);
  for (std::size_t r = 0; r < rels.size(); ++r) {
    if (!rels[r].is_array()) throw schema_error("each relation must be an array of index pairs");
    for (const auto& pair : rels[r]) {
      if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number_unsigned() ||
          !pair[1].is_number_unsigned())
        throw schema_error("each relation term must be a pair [i, j]");
      std::uint64_t a = pair[0].get<std::uint64_t>(), b = pair[1].get<std::uint64_t>();
      if (a >= d || b >= d) throw schema_error("relation index out of range");
      std::size_t col = static_cast<std::size_t>(a * d + b);
      rows.set(r, col, !rows.get(r, col));
    }
  }
  return make_presentation(d, rows, std::move(names));
}

nlohmann::json to_json(const QuadraticPresentation& q) {
  json j;
  j["dim"] = q.dim_v;
  j["generators"] = q.generator_names;
  json rels = json::array();
  for (std::size_t r = 0; r < q.relations.dim(); ++r) {
    json rel = json::array();
    for_each_set_bit(q.relations.basis().row(r), [&](std::size_t b) {
      rel.push_back({b / q.dim_v, b % q.dim_v});
    });
    rels.push_back(std::move(rel));
  }
  j["relations"] = std::move(rels);
  return j;
}

nlohmann::json to_json(const TorTable& t) {
  json entries = json::array();
  std::vector<std::pair<std::size_t, std::size_t>> keys;  // (j, i)
  for (const auto& [key, dim] : t.entries)
    if (dim) keys.emplace_back(key.second, key.first);
  std::sort(keys.begin(), keys.end());
  for (auto [jj, ii] : keys) {
    json e;
    e["i"] = ii;
    e["j"] = jj;
    e["dim"] = t.at(ii, jj);
    entries.push_back(std::move(e));
  }
  json out;
  out["max_internal"] = t.max_internal;
  out["entries"] = std::move(entries);
  return out;
}

TorTable tor_table_from_json(const nlohmann::json& j) {
  TorTable t;
  if (!j.is_object()) throw schema_error("tor table must be an object");
  t.max_internal = static_cast<std::size_t>(require_uint(j, "max_internal"));
  for (const auto& e : require_array(j, "entries")) {
    std::size_t ii = static_cast<std::size_t>(require_uint(e, "i"));
    std::size_t jj = static_cast<std::size_t>(require_uint(e, "j"));
    std::uint64_t dim = require_uint(e, "dim");
    if (t.entries.count({ii, jj})) throw schema_error("duplicate tor entry");
    if (dim) t.entries[{ii, jj}] = dim;
  }
  return t;
}

HomTable hom_table_from_json(const json& j) {
  HomTable t;
  if (!j.is_object()) throw schema_error("hom table must be an object");
  if (j.contains("d")) {
    std::int64_t d = require_int(j, "d");
    if (d < 0) throw schema_error("'d' must be non-negative");
    t.variety_dim = static_cast<int>(d);
  }
  if (j.contains("source")) {
    if (!j["source"].is_string()) throw schema_error("'source' must be a string");
    t.source = j["source"].get<std::string>();
  }
  for (const auto& e : require_array(j, "entries")) {
    int l = static_cast<int>(require_int(e, "l"));
    int w = static_cast<int>(require_int(e, "w"));
    std::uint64_t dim = require_uint(e, "dim");
    if (t.entries.count({l, w})) throw schema_error("duplicate hom table entry");
    t.entries[{l, w}] = dim;
  }
  if (!t.entries.count({0, 0})) throw schema_error("hom table must carry an entry at (0,0)");
  return t;
}

nlohmann::json to_json(const HomTable& t) {
  json out;
  if (t.variety_dim) out["d"] = *t.variety_dim;
  if (t.source) out["source"] = *t.source;
  json entries = json::array();
  for (const auto& [key, dim] : t.entries) {
    json e;
    e["l"] = key.first;
    e["w"] = key.second;
    e["dim"] = dim;
    entries.push_back(std::move(e));
  }
  out["entries"] = std::move(entries);
  return out;
}

GradedComodule comodule_from_json(const json& j) {
  if (!j.is_object()) throw schema_error("comodule must be an object");
  if (!j.contains("coalgebra") || !j["coalgebra"].is_object())
    throw schema_error("expected object field 'coalgebra'");
  const json& cj = j["coalgebra"];
  if (!cj.contains("kind") || !cj["kind"].is_string())
    throw schema_error("coalgebra needs a string 'kind'");
  std::string kind = cj["kind"].get<std::string>();
  CoalgebraRef coalgebra;
  if (kind == "tensor")
    coalgebra = TensorCoalgebra{static_cast<std::size_t>(require_uint(cj, "dim"))};
  else if (kind == "divided")
    coalgebra = DividedPowerCoalgebra{static_cast<std::size_t>(require_uint(cj, "dim"))};
  else if (kind == "quadratic") {
    if (!cj.contains("presentation")) throw schema_error("quadratic coalgebra needs a presentation");
    coalgebra = QuadraticCoalgebra{presentation_from_json(cj["presentation"])};
  } else {
    throw schema_error("unknown coalgebra kind '" + kind + "'");
  }

  std::vector<ComoduleBasisElement> basis;
  for (const auto& b : require_array(j, "basis")) {
    if (!b.is_object() || !b.contains("label") || !b["label"].is_string())
      throw schema_error("basis elements need a string 'label'");
    basis.push_back({b["label"].get<std::string>(), static_cast<int>(require_int(b, "weight"))});
  }

  std::vector<ComoduleTransition> transitions;
  for (const auto& t : require_array(j, "coaction")) {
    ComoduleTransition tr;
    tr.from = static_cast<std::size_t>(require_uint(t, "from"));
    tr.to = static_cast<std::size_t>(require_uint(t, "to"));
    for (const auto& letter : require_array(t, "word")) {
      if (!letter.is_number_unsigned()) throw schema_error("word entries must be non-negative integers");
      tr.word.push_back(letter.get<std::uint32_t>());
    }
    transitions.push_back(std::move(tr));
  }
  return make_comodule(std::move(coalgebra), std::move(basis), std::move(transitions));
}

nlohmann::json to_json(const GradedComodule& m) {
  json out;
  json cj;
  if (const auto* t = std::get_if<TensorCoalgebra>(&m.coalgebra)) {
    cj["kind"] = "tensor";
    cj["dim"] = t->dim_v;
  } else if (const auto* g = std::get_if<DividedPowerCoalgebra>(&m.coalgebra)) {
    cj["kind"] = "divided";
    cj["dim"] = g->dim_w;
  } else {
    cj["kind"] = "quadratic";
    cj["presentation"] = to_json(std::get<QuadraticCoalgebra>(m.coalgebra).presentation);
  }
  out["coalgebra"] = std::move(cj);
  json basis = json::array();
  for (const auto& b : m.basis) {
    json e;
    e["label"] = b.label;
    e["weight"] = b.weight;
    basis.push_back(std::move(e));
  }
  out["basis"] = std::move(basis);
  json coaction = json::array();
  for (const auto& t : m.transitions) {
    json e;
    e["from"] = t.from;
    e["to"] = t.to;
    e["word"] = t.word;
    coaction.push_back(std::move(e));
  }
  out["coaction"] = std::move(coaction);
  return out;
}

ExplicitFieldSpec explicit_field_from_json(const json& j) {
  if (!j.is_object()) throw schema_error("field spec must be an object");
  ExplicitFieldSpec f;
  for (const auto& c : require_array(j, "classes")) {
    if (!c.is_string()) throw schema_error("class labels must be strings");
    f.classes.push_back(c.get<std::string>());
  }
  for (const auto& p : require_array(j, "steinberg")) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw schema_error("steinberg pairs must be index pairs");
    f.steinberg_pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  }
  return f;
}

}  // namespace koszul

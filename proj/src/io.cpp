#include "thinbase/io.hpp"

#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace thinbase::io {

namespace {

template <class T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("labelling: missing field '") + key + "'");
  }
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::invalid_argument(std::string("labelling: field '") + key + "' has the wrong type");
  }
}

json params_json(const ConstructionReport& r) {
  json out = json::object();
  for (const auto& [key, value] : r.params) {
    std::visit([&](auto v) { out[key] = v; }, value);
  }
  return out;
}

}  // namespace

json to_json(const IntSet& s) { return json(std::vector<std::int64_t>(s.begin(), s.end())); }

IntSet intset_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("set: expected a JSON array");
  std::vector<std::int64_t> out;
  out.reserve(j.size());
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw std::invalid_argument("set: expected integers");
    out.push_back(v.get<std::int64_t>());
  }
  return IntSet(std::move(out));
}

json to_json(const std::vector<Check>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    out.push_back({{"property", c.property}, {"pass", c.pass}, {"witness", c.witness}});
  }
  return out;
}

json to_json(const magic::MagicLabelling& l) {
  json edges = json::array();
  for (auto [u, v] : l.edges) edges.push_back({u, v});
  return {{"mode", std::string(magic::mode_name(l.mode))},
          {"n", l.n},
          {"magic_sum", l.magic_sum},
          {"vertex_labels", l.vertex_labels},
          {"edges", std::move(edges)},
          {"edge_labels", l.edge_labels}};
}

magic::MagicLabelling labelling_from_json(const json& j) {
  magic::MagicLabelling l;
  l.mode = magic::parse_mode(field<std::string>(j, "mode"));
  l.n = field<std::int64_t>(j, "n");
  l.magic_sum = field<std::int64_t>(j, "magic_sum");
  l.vertex_labels = field<std::vector<std::int64_t>>(j, "vertex_labels");
  l.edge_labels = field<std::vector<std::int64_t>>(j, "edge_labels");
  for (const auto& e : field<std::vector<std::vector<std::int64_t>>>(j, "edges")) {
    if (e.size() != 2) throw std::invalid_argument("labelling: each edge needs two endpoints");
    l.edges.emplace_back(e[0], e[1]);
  }
  return l;
}

json to_json(const ConstructionReport& r) {
  json out = {{"name", r.name},
              {"params", params_json(r)},
              {"set", to_json(r.set)},
              {"cardinality", r.set.size()}};
  if (r.sumset_size) out["sumset_size"] = *r.sumset_size;
  if (r.diffset_size) out["diffset_size"] = *r.diffset_size;
  if (r.predicted_density) out["predicted_density"] = *r.predicted_density;
  out["checks"] = to_json(r.checks);
  return out;
}

json to_json(const magic::InjectionResult& r) {
  json out = to_json(r.labelling);
  out["sidon_size"] = r.sidon_size;
  out["window"] = {r.window_lo, r.window_hi};
  out["multiplicity"] = r.multiplicity;
  out["removed"] = r.removed;
  return out;
}

json to_json(const SearchResult<magic::MagicLabelling>& r) {
  return {{"value", r.value},
          {"witness", to_json(r.witness)},
          {"nodes_explored", r.nodes_explored},
          {"exhaustive", r.exhaustive}};
}

json to_json(const extremal::Discrepancy& d) {
  return {{"n", d.n},
          {"modulus", d.modulus},
          {"worst_interval", {d.interval_lo, d.interval_hi}},
          {"worst_residue", d.residue},
          {"observed", d.observed},
          {"expected", d.expected},
          {"normalized_error", d.normalized_error}};
}

json to_json(const bounds::BoundConstants& c) {
  json values = json::object();
  for (const auto& v : c.values) values[v.name] = v.decimal;
  return {{"constants", std::move(values)}, {"lambda_discrepancy", c.lambda_discrepancy}};
}

std::string join_semicolon(const IntSet& s) {
  std::string out;
  for (auto v : s) {
    if (!out.empty()) out += ';';
    out += std::to_string(v);
  }
  return out;
}

void write_cells_csv(std::ostream& os, const std::vector<extremal::Cell>& cells,
                     const char* function, bool header) {
  if (header) os << (function ? "function," : "") << "k,n,value,witness,nodes_explored\n";
  for (const auto& c : cells) {
    if (function) os << function << ',';
    os << c.k << ',' << c.n << ',' << c.result.value << ',' << join_semicolon(c.result.witness)
       << ',' << c.result.nodes_explored << '\n';
  }
}

void write_curve_csv(std::ostream& os, const bounds::CurveTable& table) {
  os << "c,y,formula_id\n";
  for (const auto& row : table.rows) {
    // Sample points accumulate step error; ten digits is plenty for c.
    char c_text[32];
    std::snprintf(c_text, sizeof c_text, "%.10g", row.c);
    os << c_text << ',' << format_double(row.y) << ',' << row.formula_id << '\n';
  }
}

std::string format_double(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

}  // namespace thinbase::io

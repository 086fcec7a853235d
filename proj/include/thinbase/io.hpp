#pragma once

// JSON for structured objects, CSV for tables.

#include <json.hpp>
#include <ostream>
#include <string>
#include <vector>

#include "thinbase/bounds.hpp"
#include "thinbase/constructions.hpp"
#include "thinbase/extremal.hpp"
#include "thinbase/magic.hpp"

namespace thinbase::io {

using nlohmann::json;

json to_json(const IntSet& s);
// Throws std::invalid_argument unless j is an array of integers.
IntSet intset_from_json(const json& j);

json to_json(const std::vector<Check>& checks);

// {"mode","n","magic_sum","vertex_labels","edges":[[u,v]],"edge_labels"}
json to_json(const magic::MagicLabelling& l);
// Throws std::invalid_argument on missing or mistyped fields. Structural
// invariants are left to magic::verify.
magic::MagicLabelling labelling_from_json(const json& j);

json to_json(const ConstructionReport& r);
json to_json(const magic::InjectionResult& r);
json to_json(const SearchResult<magic::MagicLabelling>& r);
json to_json(const extremal::Discrepancy& d);
json to_json(const bounds::BoundConstants& c);

// "1;2;5"
std::string join_semicolon(const IntSet& s);

// k,n,value,witness,nodes_explored; a non-null `function` adds a leading
// function column holding that name.
void write_cells_csv(std::ostream& os, const std::vector<extremal::Cell>& cells,
                     const char* function = nullptr, bool header = true);
// c,y,formula_id
void write_curve_csv(std::ostream& os, const bounds::CurveTable& table);

// Shortest round-trip text for a double.
std::string format_double(double x);

}  // namespace thinbase::io

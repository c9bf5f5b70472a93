#pragma once

#include <filesystem>
#include <string>

#include "json.hpp"
#include "loewy/cellular.hpp"
#include "loewy/highest_weight.hpp"
#include "loewy/symbolic.hpp"

namespace loewy {

using json = nlohmann::json;

/// Reads and parses a JSON file. Throws ParseError with line and column.
json read_json_file(const std::filesystem::path& path);
/// Canonical text: sorted keys, two-space indent, arrays of scalars on one line,
/// trailing newline.
std::string dump_json(const json& j);
void write_text_file(const std::filesystem::path& path, const std::string& text);

json field_to_json(const Field& f);
Field field_from_json(const json& j);

/// Integers for prime fields, coefficient arrays of length k otherwise.
json elem_to_json(const Field& f, Elem a);
Elem elem_from_json(const Field& f, const json& j);

json algebra_to_json(const Algebra& a);
Algebra algebra_from_json(const json& j);

/// {"labels": [...], "less_than": [[a, b], ...]}
json poset_to_json(const Poset& p);
/// Accepts the bare form or {"poset": {...}}.
Poset poset_from_json(const json& j);

/// `algebra_ref` is stored verbatim as the "algebra" entry (a path).
json cell_datum_to_json(const CellDatum& d, const std::string& algebra_ref);
/// A string "algebra" entry is resolved relative to base_dir; an object is read inline.
CellDatum cell_datum_from_json(const json& j, const std::filesystem::path& base_dir);

json rep_to_json(const Rep& m, const json& algebra_ref);
Rep rep_from_json(const json& j, const std::filesystem::path& base_dir);

json decomposition_to_json(const DecompositionData& d);
DecompositionData decomposition_from_json(const json& j);

/// Layers as bytewise sorted label lists, repeated by multiplicity.
json diagram_to_json(const LoewyDiagram& d);
LoewyDiagram diagram_from_json(const json& j);
json predicted_to_json(const PredictedDiagram& d);
PredictedDiagram predicted_from_json(const json& j);

json report_to_json(const ReciprocityReport& r);
json check_report_to_json(const std::string& statement, const CheckReport& r);
json cell_report_to_json(const CellReport& r);
json filtration_to_json(const Field& f, const Filtration& filt);

/// Kind of a JSON document by its keys: "algebra", "cells", "poset", "decomposition", "predicted" or "".
std::string classify_document(const json& j);

}  // namespace loewy

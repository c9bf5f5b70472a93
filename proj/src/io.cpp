#include "loewy/io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace loewy {

namespace {

const json& need(const json& j, const std::string& key, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(ctx + ": missing key '" + key + "'");
  return *it;
}

std::string need_string(const json& j, const std::string& ctx) {
  if (!j.is_string()) throw ParseError(ctx + ": expected a string");
  return j.get<std::string>();
}

std::int64_t need_int(const json& j, const std::string& ctx) {
  if (!j.is_number_integer()) throw ParseError(ctx + ": expected an integer");
  return j.get<std::int64_t>();
}

std::size_t need_size(const json& j, const std::string& ctx) {
  const auto v = need_int(j, ctx);
  if (v < 0) throw ParseError(ctx + ": expected a non-negative integer");
  return static_cast<std::size_t>(v);
}

const json& need_array(const json& j, const std::string& ctx) {
  if (!j.is_array()) throw ParseError(ctx + ": expected an array");
  return j;
}

std::vector<std::string> string_list(const json& j, const std::string& ctx) {
  std::vector<std::string> out;
  for (const auto& x : need_array(j, ctx)) out.push_back(need_string(x, ctx));
  return out;
}

json vec_to_json(const Field& f, const Vec& v) {
  json out = json::array();
  for (Elem a : v) out.push_back(elem_to_json(f, a));
  return out;
}

Vec vec_from_json(const Field& f, const json& j, std::size_t n, const std::string& ctx) {
  need_array(j, ctx);
  if (j.size() != n) throw ParseError(ctx + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
  Vec v;
  for (const auto& x : j) v.push_back(elem_from_json(f, x));
  return v;
}

json mat_to_json(const Mat& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vec_to_json(m.field(), m.row_vec(r)));
  return out;
}

Mat mat_from_json(const Field& f, const json& j, std::size_t rows, std::size_t cols, const std::string& ctx) {
  need_array(j, ctx);
  if (j.size() != rows) throw ParseError(ctx + ": expected " + std::to_string(rows) + " rows");
  std::vector<Vec> r;
  for (const auto& row : j) r.push_back(vec_from_json(f, row, cols, ctx));
  return Mat::from_rows(f, cols, r);
}

bool scalar_array(const json& j) {
  return std::all_of(j.begin(), j.end(), [](const json& x) { return x.is_primitive(); });
}

void dump_into(const json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent, ' ');
  const std::string inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t k = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++k) {
      out += inner + json(it.key()).dump() + ": ";
      dump_into(it.value(), out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "}";
  } else if (j.is_array()) {
    if (j.empty() || scalar_array(j)) {
      out += j.dump(-1, ' ', false);
      return;
    }
    out += "[\n";
    for (std::size_t k = 0; k < j.size(); ++k) {
      out += inner;
      dump_into(j[k], out, indent + 2);
      out += k + 1 < j.size() ? ",\n" : "\n";
    }
    out += pad + "]";
  } else {
    out += j.dump(-1, ' ', false);
  }
}

json layer_to_json(const Layer& layer) {
  json out = json::array();
  for (const auto& [label, m] : layer) {
    for (std::size_t i = 0; i < m; ++i) out.push_back(label);
  }
  return out;
}

Layer layer_from_json(const json& j, const std::string& ctx) {
  Layer layer;
  for (const auto& x : need_array(j, ctx)) ++layer[need_string(x, ctx)];
  return layer;
}

json layer_map_to_json(const std::map<std::string, LoewyDiagram>& m) {
  json out = json::object();
  for (const auto& [label, d] : m) out[label] = diagram_to_json(d);
  return out;
}

std::map<std::string, LoewyDiagram> layer_map_from_json(const json& j, const std::string& ctx) {
  if (!j.is_object()) throw ParseError(ctx + ": expected an object");
  std::map<std::string, LoewyDiagram> out;
  for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = diagram_from_json(it.value());
  return out;
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1, col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) + ": " + e.what());
  }
}

std::string dump_json(const json& j) {
  std::string out;
  dump_into(j, out, 0);
  std::string spaced;
  spaced.reserve(out.size());
  // Compact arrays get a space after each comma outside strings.
  bool in_string = false;
  bool escaped = false;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const char c = out[i];
    spaced += c;
    if (in_string) {
      if (escaped) {
        escaped = false;
      } else if (c == '\\') {
        escaped = true;
      } else if (c == '"') {
        in_string = false;
      }
      continue;
    }
    if (c == '"') in_string = true;
    if (c == ',' && !in_string && i + 1 < out.size() && out[i + 1] != '\n') spaced += ' ';
  }
  return spaced + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path.string());
  out << text;
  if (!out) throw ParseError("write failed for " + path.string());
}

json field_to_json(const Field& f) {
  json out = {{"p", f.characteristic()}, {"k", f.degree()}};
  if (f.degree() > 1) out["modulus"] = f.modulus();
  return out;
}

Field field_from_json(const json& j) {
  const std::string ctx = "field";
  const auto p = need_int(need(j, "p", ctx), ctx + ".p");
  const auto k = j.contains("k") ? need_int(j["k"], ctx + ".k") : 1;
  if (p < 2 || p > static_cast<std::int64_t>(Field::kMaxPrime)) throw ParseError(ctx + ": p out of range");
  try {
    if (k == 1) return Field::prime(static_cast<std::uint32_t>(p));
    std::vector<std::uint32_t> modulus;
    for (const auto& c : need_array(need(j, "modulus", ctx), ctx + ".modulus")) {
      modulus.push_back(static_cast<std::uint32_t>(need_size(c, ctx + ".modulus")));
    }
    if (modulus.size() != static_cast<std::size_t>(k) + 1) throw ParseError(ctx + ": modulus must have k+1 coefficients");
    return Field::extension(static_cast<std::uint32_t>(p), modulus);
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(ctx + ": " + e.what());
  }
}

json elem_to_json(const Field& f, Elem a) {
  if (f.degree() == 1) return a;
  return f.coefficients(a);
}

Elem elem_from_json(const Field& f, const json& j) {
  if (f.degree() == 1) return f.from_int(need_int(j, "field element"));
  std::vector<std::int64_t> coeffs;
  if (j.is_number_integer()) return f.from_int(j.get<std::int64_t>());
  for (const auto& c : need_array(j, "field element")) coeffs.push_back(need_int(c, "field element"));
  if (coeffs.size() > f.degree()) throw ParseError("field element: too many coefficients");
  return f.from_coefficients(coeffs);
}

json algebra_to_json(const Algebra& a) {
  const Field& f = a.field();
  json mult = json::array();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) row.push_back(vec_to_json(f, a.mult(i, j)));
    mult.push_back(row);
  }
  json out = {{"field", field_to_json(f)}, {"dim", a.dim()}, {"labels", a.labels()},
              {"unit", vec_to_json(f, a.unit())}, {"mult", mult}};
  if (a.has_involution()) {
    json cols = json::array();
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(vec_to_json(f, a.involution().column(j)));
    out["involution"] = cols;
  }
  if (!a.witnesses().empty()) {
    json w = json::array();
    for (const auto& s : a.witnesses()) w.push_back({{"name", s.name}, {"witness", vec_to_json(f, s.element)}});
    out["simple_labels"] = w;
  }
  return out;
}

Algebra algebra_from_json(const json& j) {
  const std::string ctx = "algebra";
  const Field f = field_from_json(need(j, "field", ctx));
  const std::size_t n = need_size(need(j, "dim", ctx), ctx + ".dim");
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels = string_list(j["labels"], ctx + ".labels");
    if (labels.size() != n) throw ParseError(ctx + ".labels: expected " + std::to_string(n) + " labels");
  } else {
    for (std::size_t i = 0; i < n; ++i) labels.push_back("b" + std::to_string(i));
  }
  const Vec unit = vec_from_json(f, need(j, "unit", ctx), n, ctx + ".unit");
  const json& mj = need_array(need(j, "mult", ctx), ctx + ".mult");
  if (mj.size() != n) throw ParseError(ctx + ".mult: expected " + std::to_string(n) + " rows");
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string rc = ctx + ".mult[" + std::to_string(i) + "]";
    if (!mj[i].is_array() || mj[i].size() != n) throw ParseError(rc + ": expected " + std::to_string(n) + " products");
    for (std::size_t k = 0; k < n; ++k) mult.push_back(vec_from_json(f, mj[i][k], n, rc));
  }
  std::optional<Mat> inv;
  if (j.contains("involution") && !j["involution"].is_null()) {
    const json& ij = need_array(j["involution"], ctx + ".involution");
    if (ij.size() != n) throw ParseError(ctx + ".involution: expected " + std::to_string(n) + " columns");
    std::vector<Vec> cols;
    for (const auto& c : ij) cols.push_back(vec_from_json(f, c, n, ctx + ".involution"));
    inv = Mat::from_columns(f, n, cols);
  }
  std::vector<SimpleWitness> witnesses;
  if (j.contains("simple_labels")) {
    for (const auto& w : need_array(j["simple_labels"], ctx + ".simple_labels")) {
      witnesses.push_back({need_string(need(w, "name", ctx + ".simple_labels"), ctx + ".simple_labels"),
                           vec_from_json(f, need(w, "witness", ctx + ".simple_labels"), n, ctx + ".simple_labels")});
    }
  }
  return Algebra(f, labels, mult, unit, inv, witnesses);
}

json poset_to_json(const Poset& p) {
  json pairs = json::array();
  for (const auto& [a, b] : p.generating_pairs()) pairs.push_back({a, b});
  return {{"labels", p.labels()}, {"less_than", pairs}};
}

Poset poset_from_json(const json& j) {
  if (j.is_object() && j.contains("poset") && !j.contains("labels")) return poset_from_json(j["poset"]);
  const std::string ctx = "poset";
  const auto labels = string_list(need(j, "labels", ctx), ctx + ".labels");
  std::vector<std::pair<std::string, std::string>> pairs;
  if (j.contains("less_than")) {
    for (const auto& pr : need_array(j["less_than"], ctx + ".less_than")) {
      if (!pr.is_array() || pr.size() != 2) throw ParseError(ctx + ".less_than: expected [a, b] pairs");
      pairs.emplace_back(need_string(pr[0], ctx), need_string(pr[1], ctx));
    }
  }
  return Poset(labels, pairs);
}

json cell_datum_to_json(const CellDatum& d, const std::string& algebra_ref) {
  json idx = json::array();
  for (const auto& c : d.basis_index) idx.push_back({{"lambda", c.lambda}, {"S", c.s}, {"T", c.t}, {"basis", c.basis}});
  json m = json::object();
  for (const auto& [label, set] : d.m_sets) m[label] = set;
  return {{"algebra", algebra_ref}, {"poset", poset_to_json(d.poset)}, {"m_sets", m}, {"basis_index", idx}};
}

CellDatum cell_datum_from_json(const json& j, const std::filesystem::path& base_dir) {
  const std::string ctx = "cell datum";
  CellDatum d;
  const json& a = need(j, "algebra", ctx);
  if (a.is_string()) {
    d.algebra = std::make_shared<const Algebra>(algebra_from_json(read_json_file(base_dir / a.get<std::string>())));
  } else {
    d.algebra = std::make_shared<const Algebra>(algebra_from_json(a));
  }
  d.poset = poset_from_json(need(j, "poset", ctx));
  const json& m = need(j, "m_sets", ctx);
  if (!m.is_object()) throw ParseError(ctx + ".m_sets: expected an object");
  for (auto it = m.begin(); it != m.end(); ++it) d.m_sets[it.key()] = string_list(it.value(), ctx + ".m_sets");
  for (const auto& c : need_array(need(j, "basis_index", ctx), ctx + ".basis_index")) {
    const std::string cc = ctx + ".basis_index";
    d.basis_index.push_back({need_string(need(c, "lambda", cc), cc), need_string(need(c, "S", cc), cc),
                             need_string(need(c, "T", cc), cc), need_size(need(c, "basis", cc), cc)});
  }
  return d;
}

json rep_to_json(const Rep& m, const json& algebra_ref) {
  json actions = json::array();
  for (const auto& a : m.actions()) actions.push_back(mat_to_json(a));
  return {{"algebra", algebra_ref}, {"dim", m.dim()}, {"action", actions}};
}

Rep rep_from_json(const json& j, const std::filesystem::path& base_dir) {
  const std::string ctx = "module";
  const json& a = need(j, "algebra", ctx);
  AlgebraPtr alg = std::make_shared<const Algebra>(
      algebra_from_json(a.is_string() ? read_json_file(base_dir / a.get<std::string>()) : a));
  const std::size_t n = need_size(need(j, "dim", ctx), ctx + ".dim");
  const json& acts = need_array(need(j, "action", ctx), ctx + ".action");
  if (acts.size() != alg->dim()) throw ParseError(ctx + ".action: expected one matrix per basis element");
  std::vector<Mat> mats;
  for (const auto& x : acts) mats.push_back(mat_from_json(alg->field(), x, n, n, ctx + ".action"));
  return Rep(alg, mats);
}

json diagram_to_json(const LoewyDiagram& d) {
  json out = json::array();
  for (const auto& layer : d) out.push_back(layer_to_json(layer));
  return out;
}

LoewyDiagram diagram_from_json(const json& j) {
  LoewyDiagram d;
  for (const auto& layer : need_array(j, "layers")) d.push_back(layer_from_json(layer, "layer"));
  return d;
}

json decomposition_to_json(const DecompositionData& d) {
  json out = {{"poset", poset_to_json(d.poset)},
              {"delta_layers", layer_map_to_json(d.delta_layers)},
              {"projective_weights", d.projective_weights}};
  if (d.nabla_layers) out["nabla_layers"] = layer_map_to_json(*d.nabla_layers);
  if (!d.comment.empty()) out["comment"] = d.comment;
  return out;
}

DecompositionData decomposition_from_json(const json& j) {
  const std::string ctx = "decomposition";
  DecompositionData d;
  d.poset = poset_from_json(need(j, "poset", ctx));
  d.delta_layers = layer_map_from_json(need(j, "delta_layers", ctx), ctx + ".delta_layers");
  if (j.contains("nabla_layers")) d.nabla_layers = layer_map_from_json(j["nabla_layers"], ctx + ".nabla_layers");
  if (j.contains("projective_weights")) d.projective_weights = string_list(j["projective_weights"], ctx);
  if (j.contains("comment")) d.comment = need_string(j["comment"], ctx + ".comment");
  return d;
}

json predicted_to_json(const PredictedDiagram& d) {
  json sections = json::array();
  for (const auto& s : d.sections) {
    sections.push_back(
        {{"lambda", s.lambda}, {"offset", s.offset}, {"copy", s.copy}, {"layers", diagram_to_json(s.layers)}});
  }
  return {{"target", d.target}, {"socle_side", d.socle_side}, {"layers", diagram_to_json(d.layers)},
          {"sections", sections}};
}

PredictedDiagram predicted_from_json(const json& j) {
  const std::string ctx = "predicted diagram";
  PredictedDiagram d;
  d.target = need_string(need(j, "target", ctx), ctx);
  const json& side = need(j, "socle_side", ctx);
  if (!side.is_boolean()) throw ParseError(ctx + ".socle_side: expected a boolean");
  d.socle_side = side.get<bool>();
  d.layers = diagram_from_json(need(j, "layers", ctx));
  for (const auto& s : need_array(need(j, "sections", ctx), ctx + ".sections")) {
    d.sections.push_back({need_string(need(s, "lambda", ctx), ctx), need_size(need(s, "offset", ctx), ctx),
                          need_size(need(s, "copy", ctx), ctx), diagram_from_json(need(s, "layers", ctx))});
  }
  return d;
}

json report_to_json(const ReciprocityReport& r) {
  json rows = json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"lambda", row.lambda}, {"mu", row.mu}, {"s", row.s}, {"left", row.left}, {"right", row.right}});
  }
  return {{"statement", r.statement}, {"hypothesis", r.hypothesis}, {"holds", r.holds}, {"rows", rows},
          {"notes", r.notes}};
}

json check_report_to_json(const std::string& statement, const CheckReport& r) {
  return {{"statement", statement}, {"holds", r.holds}, {"failures", r.failures}};
}

json cell_report_to_json(const CellReport& r) {
  return {{"statement", "cellular"}, {"holds", r.valid}, {"violations", r.violations}};
}

json filtration_to_json(const Field& f, const Filtration& filt) {
  json out = json::array();
  for (const auto& s : filt) {
    out.push_back({{"lambda", s.lambda}, {"depth", s.depth}, {"generator", vec_to_json(f, s.generator)}});
  }
  return out;
}

std::string classify_document(const json& j) {
  if (!j.is_object()) return "";
  if (j.contains("mult")) return "algebra";
  if (j.contains("m_sets")) return "cells";
  if (j.contains("delta_layers")) return "decomposition";
  if (j.contains("sections") && j.contains("target")) return "predicted";
  if (j.contains("radical_side")) return "predicted";
  if (j.contains("action")) return "module";
  if (j.contains("labels") && !j.contains("dim")) return "poset";
  if (j.contains("poset")) return "poset";
  return "";
}

}  // namespace loewy

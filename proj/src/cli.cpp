#include "loewy/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "loewy/constructions.hpp"
#include "loewy/io.hpp"
#include "loewy/oracle.hpp"

#ifndef LOEWY_DATA_DIR
#define LOEWY_DATA_DIR "data"
#endif

namespace loewy {

namespace fs = std::filesystem;

namespace {

constexpr std::size_t kOracleMaxDim = 40;

struct Options {
  std::string out_path;
  std::string format = "ascii";
  bool require_hypotheses = false;
  bool oracle = false;
  std::size_t jobs = 1;
};

/// Domain failure that has already been explained to the user.
struct Failed {
  int code;
};

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      throw ParseError("expected a comma-separated list of non-negative integers, got '" + text + "'");
    }
  }
  return out;
}

Field make_field(std::uint32_t p, const std::string& modulus) {
  if (!is_prime(p)) throw Error("p = " + std::to_string(p) + " is not prime");
  if (modulus.empty()) return Field::prime(p);
  std::vector<std::uint32_t> m;
  for (auto c : parse_sizes(modulus)) m.push_back(static_cast<std::uint32_t>(c));
  return Field::extension(p, m);
}

struct Document {
  fs::path path;
  json doc;
  std::string kind;
};

Document load(const std::string& path) {
  Document d{path, read_json_file(path), ""};
  d.kind = classify_document(d.doc);
  if (d.kind.empty()) throw ParseError(path + ": not an algebra, cell datum, poset or decomposition file");
  return d;
}

fs::path base_of(const fs::path& p) { return p.has_parent_path() ? p.parent_path() : fs::path("."); }

/// Algebra plus optional certificates gathered from the input files.
struct Inputs {
  AlgebraPtr algebra;
  std::optional<CellDatum> cells;
  std::optional<Poset> poset;
  bool cells_match = false;
  std::vector<std::string> notes;
};

Inputs gather(const std::vector<Document>& docs) {
  Inputs in;
  std::optional<Algebra> plain;
  for (const auto& d : docs) {
    if (d.kind == "algebra") {
      if (plain) throw ParseError("more than one algebra file given");
      plain = algebra_from_json(d.doc);
    } else if (d.kind == "cells") {
      if (in.cells) throw ParseError("more than one cell datum given");
      in.cells = cell_datum_from_json(d.doc, base_of(d.path));
    } else if (d.kind == "poset") {
      if (in.poset) throw ParseError("more than one poset given");
      in.poset = poset_from_json(d.doc);
    } else {
      throw ParseError(d.path.string() + ": a " + d.kind + " file is not accepted here");
    }
  }
  if (plain) {
    in.algebra = std::make_shared<const Algebra>(*plain);
    if (in.cells) {
      in.cells_match = same_structure(*plain, *in.cells->algebra);
      if (in.cells_match) {
        in.algebra = cell_labelled_algebra(*in.cells);
      } else {
        in.notes.push_back("the cell datum describes a different algebra and certifies nothing here");
      }
    }
  } else if (in.cells) {
    in.algebra = cell_labelled_algebra(*in.cells);
    in.cells_match = true;
  } else {
    throw ParseError("no algebra given");
  }
  return in;
}

struct Certification {
  bool cellular = false;
  bool bgg = false;
  std::vector<std::string> notes;
};

Certification certify(const Inputs& in, const AlgebraStructure& st) {
  Certification c;
  if (in.cells && in.cells_match) {
    const auto r = check_axioms(*in.cells);
    c.cellular = r.valid;
    if (!r.valid) c.notes.push_back("cell datum fails the axioms: " + r.violations.front());
  }
  if (in.poset) {
    try {
      const auto r = check_bgg(st, *in.poset);
      c.bgg = r.holds;
      if (!r.holds) c.notes.push_back("not certified BGG: " + r.failures.front());
    } catch (const NoInvolution&) {
      c.notes.push_back("not certified BGG: no involution");
    }
  }
  return c;
}

void emit(const Options& opt, const json& j, const std::string& text, std::ostream& out) {
  if (!opt.out_path.empty()) write_text_file(opt.out_path, dump_json(j));
  if (opt.format == "json") {
    out << dump_json(j);
  } else {
    out << text;
  }
}

std::string diagram_line(const Layer& layer) {
  std::string s;
  for (const auto& [label, m] : layer) {
    for (std::size_t i = 0; i < m; ++i) s += (s.empty() ? "" : " ") + label;
  }
  return s;
}

std::string report_text(const ReciprocityReport& r) {
  std::ostringstream os;
  os << r.statement << ": " << (r.holds ? "holds" : "FAILS") << " (hypothesis: " << r.hypothesis << ", "
     << r.rows.size() << " rows)\n";
  for (const auto& row : r.rows) {
    if (row.left != row.right) {
      os << "  lambda=" << row.lambda << " mu=" << row.mu << " s=" << row.s << ": " << row.left << " != " << row.right
         << "\n";
    }
  }
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  return os.str();
}

int reciprocity_exit(const Options& opt, const ReciprocityReport& r) {
  if (!r.holds) return kExitFailed;
  if (opt.require_hypotheses && r.hypothesis == "unverified") return kExitHypothesis;
  return kExitOk;
}

// ---------------------------------------------------------------- analyze

json analysis_json(const AlgebraStructure& st) {
  const Algebra& a = *st.algebra();
  json simples = json::array();
  json pims = json::array();
  for (std::size_t i = 0; i < st.count(); ++i) {
    simples.push_back({{"label", st.labels()[i]}, {"dim", st.simple(i).dim()}});
    const auto layers = loewy_diagram(st, st.pim(i));
    pims.push_back({{"label", st.labels()[i]},
                    {"dim", st.pim(i).dim()},
                    {"layers", diagram_to_json(layers)},
                    {"socle_layers", diagram_to_json(socle_diagram(st, st.pim(i)))},
                    {"loewy_length", layers.size()},
                    {"rigid", is_rigid(st, st.pim(i))}});
  }
  const auto c = cartan_matrix(st);
  return {{"field", field_to_json(a.field())},
          {"dim", a.dim()},
          {"radical_dim", st.radical().dim()},
          {"simples", simples},
          {"pims", pims},
          {"cartan", {{"labels", c.labels}, {"entries", c.entries}}}};
}

std::string analysis_text(const AlgebraStructure& st) {
  std::ostringstream os;
  const Algebra& a = *st.algebra();
  os << "algebra over " << a.field().name() << ", dim " << a.dim() << ", radical dim " << st.radical().dim() << "\n";
  for (std::size_t i = 0; i < st.count(); ++i) {
    const auto layers = loewy_diagram(st, st.pim(i));
    os << "P(" << st.labels()[i] << "): dim " << st.pim(i).dim() << ", simple dim " << st.simple(i).dim()
       << ", Loewy length " << layers.size() << (is_rigid(st, st.pim(i)) ? ", rigid" : ", not rigid") << "\n";
    for (std::size_t s = 0; s < layers.size(); ++s) os << "  " << s + 1 << ": " << diagram_line(layers[s]) << "\n";
  }
  const auto c = cartan_matrix(st);
  os << "Cartan matrix (rows P(mu), columns L(lambda)):";
  for (const auto& l : c.labels) os << " " << l;
  os << "\n";
  for (std::size_t i = 0; i < c.labels.size(); ++i) {
    os << "  " << c.labels[i] << ":";
    for (auto v : c.entries[i]) os << " " << v;
    os << "\n";
  }
  return os.str();
}

std::unique_ptr<AlgebraStructure> structure_or_fail(const AlgebraPtr& a, std::ostream& err) {
  const auto v = validate_algebra(*a);
  if (!v.valid) {
    err << "invalid algebra:\n";
    for (const auto& x : v.violations) err << "  " << x << "\n";
    throw Failed{kExitFailed};
  }
  try {
    return std::make_unique<AlgebraStructure>(a);
  } catch (const NotSplit& e) {
    err << "error: " << e.what() << "\n"
        << "hint: the algebra is not split over " << a->field().name()
        << "; rerun with --modulus to work over a larger field GF(p^k)\n";
    throw Failed{kExitFailed};
  }
}

int cmd_analyze(const Options& opt, const std::string& path, const std::string& modulus, std::ostream& out,
                std::ostream& err) {
  const Document d = load(path);
  if (d.kind != "cells" && d.kind != "algebra") throw ParseError(path + ": not an algebra file");
  Algebra alg = d.kind == "cells" ? *cell_labelled_algebra(cell_datum_from_json(d.doc, base_of(d.path)))
                                  : algebra_from_json(d.doc);
  if (!modulus.empty()) alg = extend_scalars(alg, make_field(alg.field().characteristic(), modulus));
  const auto st = structure_or_fail(std::make_shared<const Algebra>(alg), err);
  json j = analysis_json(*st);
  std::string text = analysis_text(*st);
  bool ok = true;
  if (opt.oracle) {
    if (alg.dim() > kOracleMaxDim) {
      j["oracle"] = {{"agrees", nullptr}, {"mismatches", json::array({"skipped: dimension above 40"})}};
      text += "oracle: skipped (dimension above " + std::to_string(kOracleMaxDim) + ")\n";
    } else {
      const auto c = oracle_crosscheck(*st);
      j["oracle"] = {{"agrees", c.agrees}, {"mismatches", c.mismatches}};
      text += std::string("oracle: ") + (c.agrees ? "agrees" : "DISAGREES") + "\n";
      for (const auto& m : c.mismatches) text += "  " + m + "\n";
      ok = c.agrees;
    }
  }
  emit(opt, j, text, out);
  return ok ? kExitOk : kExitFailed;
}

// ---------------------------------------------------------------- check

int cmd_check(const Options& opt, const std::string& kind, const std::vector<std::string>& files, bool socle_side,
              std::ostream& out, std::ostream& err) {
  std::vector<Document> docs;
  for (const auto& f : files) docs.push_back(load(f));

  if (kind == "cellular") {
    if (docs.size() != 1 || docs[0].kind != "cells") throw ParseError("check cellular takes one cell datum file");
    const CellDatum d = cell_datum_from_json(docs[0].doc, base_of(docs[0].path));
    CellReport r = check_axioms(d);
    json j = cell_report_to_json(r);
    std::string text = std::string("cellular: ") + (r.valid ? "holds" : "FAILS") + "\n";
    if (r.valid) {
      try {
        json dims = json::array();
        for (const auto& s : cell_chain(d)) dims.push_back(s.dim());
        j["chain_dims"] = dims;
        j["simple_labels"] = simple_labels(d);
        const AlgebraStructure st(cell_labelled_algebra(d));
        check_cell_simple_count(d, st);
      } catch (const Error& e) {
        r.valid = false;
        r.violations.push_back(e.what());
        j["holds"] = false;
        j["violations"] = r.violations;
      }
    }
    for (const auto& v : r.violations) text += "  " + v + "\n";
    emit(opt, j, text, out);
    return r.valid ? kExitOk : kExitFailed;
  }

  const Inputs in = gather(docs);
  const auto st = structure_or_fail(in.algebra, err);

  if (kind == "qh" || kind == "bgg") {
    if (!in.poset) throw ParseError("check " + kind + " needs a poset file");
    CheckReport r;
    try {
      r = kind == "qh" ? check_quasi_hereditary(*st, *in.poset) : check_bgg(*st, *in.poset);
    } catch (const NoInvolution& e) {
      r.holds = false;
      r.failures.push_back(e.what());
    }
    std::string text = kind + ": " + (r.holds ? "holds" : "FAILS") + "\n";
    for (const auto& f : r.failures) text += "  " + f + "\n";
    emit(opt, check_report_to_json(kind, r), text, out);
    return r.holds ? kExitOk : kExitFailed;
  }

  const Certification cert = certify(in, *st);
  ReciprocityReport r;
  if (kind == "dagger") {
    r = socle_side ? check_dagger_dual(*st, opt.jobs) : check_dagger(*st, opt.jobs);
  } else if (kind == "cartan") {
    r = check_cartan_truncations(*st);
  } else if (kind == "lemma9") {
    if (!in.algebra->has_involution()) throw NoInvolution();
    r = lemma9_all(*st, opt.jobs);
  } else if (kind == "ddagger" || kind == "numerical") {
    if (!in.poset) throw ParseError("check " + kind + " needs a weight poset file");
    require_matching_poset(*st, *in.poset);
    if (kind == "numerical") {
      r = check_numerical_bgg(*st, *in.poset);
    } else {
      r = socle_side ? check_ddagger_dual(*st, *in.poset, opt.jobs) : check_ddagger(*st, *in.poset, opt.jobs);
    }
  } else {
    throw ParseError("unknown check kind '" + kind + "'");
  }
  const bool theorem_level = kind == "dagger" || kind == "cartan" || kind == "lemma9";
  r.hypothesis = hypothesis_label(theorem_level && cert.cellular, cert.bgg);
  for (const auto& n : in.notes) r.notes.push_back(n);
  for (const auto& n : cert.notes) r.notes.push_back(n);
  emit(opt, report_to_json(r), report_text(r), out);
  return reciprocity_exit(opt, r);
}

// ---------------------------------------------------------------- predict / render

json predict_json(const DecompositionData& data, const std::string& weight, bool socle_side, RenderFormat fmt,
                  std::string& text) {
  const PredictedDiagram rad = predict(data, weight);
  const PredictedDiagram soc = predict_socle_side(data, weight);
  const bool rigid = rigidity_verdict(rad, soc);
  json j = {{"weight", weight}, {"radical_side", predicted_to_json(rad)}, {"rigid", rigid}};
  text = render(rad, fmt);
  if (socle_side) {
    j["socle_side"] = predicted_to_json(soc);
    text += (fmt == RenderFormat::Ascii ? "socle side:\n" : "") + render(soc, fmt);
  }
  if (fmt == RenderFormat::Ascii) text += std::string("rigid: ") + (rigid ? "true" : "false") + "\n";
  j["rendered"] = text;
  return j;
}

int cmd_predict(const Options& opt, const std::string& path, const std::string& weight, bool socle_side,
                const std::string& render_name, std::ostream& out, std::ostream& err) {
  const Document d = load(path);
  if (d.kind != "decomposition") throw ParseError(path + ": not a decomposition data file");
  const DecompositionData data = decomposition_from_json(d.doc);
  const auto problems = validate_decomposition(data);
  if (!problems.empty()) {
    err << "invalid decomposition data:\n";
    for (const auto& p : problems) err << "  " << p << "\n";
    return kExitFailed;
  }
  std::string fmt_name = render_name;
  if (opt.format == "dot") fmt_name = "dot";
  std::string text;
  const json j = predict_json(data, weight, socle_side, parse_render_format(fmt_name), text);
  emit(opt, j, text, out);
  return kExitOk;
}

int cmd_render(const Options& opt, const std::string& path, std::ostream& out) {
  const Document d = load(path);
  const RenderFormat fmt = parse_render_format(opt.format == "json" ? "ascii" : opt.format);
  std::vector<PredictedDiagram> diagrams;
  if (d.doc.contains("radical_side")) {
    diagrams.push_back(predicted_from_json(d.doc["radical_side"]));
    if (d.doc.contains("socle_side")) diagrams.push_back(predicted_from_json(d.doc["socle_side"]));
  } else if (d.kind == "predicted") {
    diagrams.push_back(predicted_from_json(d.doc));
  } else {
    throw ParseError(path + ": not a predicted diagram");
  }
  for (const auto& p : diagrams) out << render(p, fmt);
  return kExitOk;
}

// ---------------------------------------------------------------- make-example

struct Written {
  std::vector<fs::path> files;
};

void write_json(const fs::path& p, const json& j, Written& w) {
  write_text_file(p, dump_json(j));
  w.files.push_back(p);
}

void check_round_trip(const fs::path& p, const json& original) {
  if (!(read_json_file(p) == original)) throw Error(p.string() + ": file does not reload to the written value");
}

int cmd_make_example(const std::string& name, std::size_t n, std::uint32_t p, const std::string& modulus, long delta,
                     const std::string& blocks, bool murphy, const std::string& out_dir, std::ostream& out) {
  const Field f = make_field(p, modulus);
  const std::string suffix = "_p" + std::to_string(p) + (modulus.empty() ? "" : "k" + std::to_string(f.degree()));
  const fs::path dir = out_dir.empty() ? fs::path(".") : fs::path(out_dir);
  fs::create_directories(dir);
  Written w;
  auto algebra_file = [&](const std::string& stem, const Algebra& a) {
    const json j = algebra_to_json(a);
    const auto v = validate_algebra(algebra_from_json(j));
    if (!v.valid) throw Error(stem + ": constructed algebra fails validation: " + v.violations.front());
    write_json(dir / (stem + ".json"), j, w);
    check_round_trip(dir / (stem + ".json"), j);
  };
  auto cells_file = [&](const std::string& stem, const CellDatum& d) {
    algebra_file(stem, *cell_labelled_algebra(d));
    const json j = cell_datum_to_json(d, stem + ".json");
    write_json(dir / (stem + "_cells.json"), j, w);
    const CellDatum back = cell_datum_from_json(read_json_file(dir / (stem + "_cells.json")), dir);
    if (!check_axioms(back).valid) throw Error(stem + ": cell datum fails the axioms after reload");
  };
  auto poset_file = [&](const std::string& stem, const Poset& poset) {
    const json j = poset_to_json(poset);
    write_json(dir / (stem + "_poset.json"), j, w);
    check_round_trip(dir / (stem + "_poset.json"), j);
  };

  if (name == "symgroup") {
    if (n < 1 || n > 4) throw Error("symgroup needs 1 <= n <= 4");
    const std::string stem = "sym" + std::to_string(n) + suffix;
    algebra_file(stem, group_algebra_sym(n, f));
    if (murphy) cells_file(stem + "_murphy", murphy_sym(n, f));
  } else if (name == "tl") {
    if (n < 1 || n > 6) throw Error("tl needs 1 <= n <= 6");
    const std::string stem = "tl" + std::to_string(n) + "_d" + std::to_string(delta) + suffix;
    const CellDatum d = temperley_lieb(n, f.from_int(delta), f);
    cells_file(stem, d);
    poset_file(stem, d.poset.opposite());
  } else if (name == "schur2") {
    if (n < 1 || n > 4) throw Error("schur2 needs 1 <= r <= 4");
    const std::string stem = "schur2" + std::to_string(n) + suffix;
    const auto wa = schur_algebra_2r(n, f);
    algebra_file(stem, *wa.algebra);
    poset_file(stem, wa.poset);
  } else if (name == "semisimple") {
    const auto b = parse_sizes(blocks);
    if (b.empty() || std::find(b.begin(), b.end(), 0u) != b.end()) throw Error("blocks must be positive");
    std::string stem = "semisimple";
    for (auto x : b) stem += "_" + std::to_string(x);
    stem += suffix;
    const auto wa = semisimple(b, f);
    algebra_file(stem, *wa.algebra);
    poset_file(stem, wa.poset);
  } else if (name == "truncated") {
    algebra_file("truncated" + suffix, truncated_polynomial(f));
  } else if (name == "upper-triangular") {
    if (n < 1 || n > 6) throw Error("upper-triangular needs 1 <= n <= 6");
    algebra_file("upper_triangular" + std::to_string(n) + suffix, upper_triangular(n, f));
  } else {
    throw Error("unknown example '" + name + "'");
  }
  for (const auto& p : w.files) out << "wrote " << p.string() << "\n";
  return kExitOk;
}

// ---------------------------------------------------------------- verify-all

struct Outcome {
  std::string example;
  std::string check;
  bool holds = false;
  bool expected = true;
  std::string detail;
};

struct ExampleRunner {
  const Options& opt;
  std::vector<Outcome>& outcomes;
  std::string name;
  std::map<std::string, bool> expect;
  std::vector<std::string> only;

  bool wanted(const std::string& check) const {
    return only.empty() || std::find(only.begin(), only.end(), check) != only.end();
  }

  void record(const std::string& check, bool holds, std::string detail = {}) {
    const auto it = expect.find(check);
    outcomes.push_back({name, check, holds, it == expect.end() ? true : it->second, std::move(detail)});
  }

  template <typename F>
  void run(const std::string& check, F&& f) {
    if (!wanted(check)) return;
    try {
      f();
    } catch (const Error& e) {
      record(check, false, e.what());
    }
  }

  void reciprocity(const std::string& check, const ReciprocityReport& r) {
    std::string detail = "hypothesis " + r.hypothesis;
    for (const auto& row : r.rows) {
      if (row.left != row.right) {
        detail += "; first failing row lambda=" + row.lambda + " mu=" + row.mu + " s=" + std::to_string(row.s);
        break;
      }
    }
    if (!r.notes.empty()) detail += "; " + r.notes.front();
    record(check, r.holds, detail);
  }
};

void verify_example(const Options& opt, const fs::path& dir, const json& entry, std::vector<Outcome>& outcomes) {
  ExampleRunner run{opt, outcomes, entry.at("name").get<std::string>(), {}, {}};
  if (entry.contains("expect")) {
    for (auto it = entry["expect"].begin(); it != entry["expect"].end(); ++it) run.expect[it.key()] = it.value();
  }
  if (entry.contains("only")) run.only = entry["only"].get<std::vector<std::string>>();

  if (entry.contains("decomposition")) {
    const DecompositionData data = decomposition_from_json(read_json_file(dir / entry["decomposition"].get<std::string>()));
    const auto problems = validate_decomposition(data);
    run.record("data_valid", problems.empty(), problems.empty() ? "" : problems.front());
    for (const auto& w : entry.value("weights", std::vector<std::string>{})) {
      run.run("predict:" + w, [&] {
        const auto rad = predict(data, w);
        const bool head = !rad.layers.empty() && rad.layers.front() == Layer{{w, 1}};
        std::string sizes;
        for (const auto& l : rad.layers) sizes += (sizes.empty() ? "" : ",") + std::to_string(layer_size(l));
        run.record("predict:" + w, head, "layer sizes [" + sizes + "]");
      });
      run.run("rigid:" + w, [&] { run.record("rigid:" + w, rigidity_verdict(predict(data, w), predict_socle_side(data, w))); });
    }
    return;
  }

  std::vector<Document> docs;
  for (const char* key : {"algebra", "cells", "poset"}) {
    if (entry.contains(key)) {
      const fs::path p = dir / entry[key].get<std::string>();
      docs.push_back({p, read_json_file(p), key == std::string("cells") ? "cells" : key});
    }
  }
  std::optional<CellDatum> raw_cells;
  for (const auto& d : docs) {
    if (d.kind == "cells") raw_cells = cell_datum_from_json(d.doc, base_of(d.path));
  }
  if (raw_cells) {
    run.run("cellular", [&] {
      const auto r = check_axioms(*raw_cells);
      run.record("cellular", r.valid, r.valid ? "" : r.violations.front());
    });
  }
  if (!run.only.empty() && run.only == std::vector<std::string>{"cellular"}) return;

  const Inputs in = gather(docs);
  run.run("valid", [&] {
    const auto v = validate_algebra(*in.algebra);
    run.record("valid", v.valid, v.valid ? "" : v.violations.front());
  });
  std::unique_ptr<AlgebraStructure> st;
  try {
    st = std::make_unique<AlgebraStructure>(in.algebra);
  } catch (const Error& e) {
    run.record("structure", false, e.what());
    return;
  }
  const Certification cert = certify(in, *st);
  const std::string hyp_theorem = hypothesis_label(cert.cellular, cert.bgg);
  const std::string hyp_bgg = hypothesis_label(false, cert.bgg);

  if (opt.oracle && in.algebra->dim() <= kOracleMaxDim) {
    run.run("oracle", [&] {
      const auto c = oracle_crosscheck(*st);
      run.record("oracle", c.agrees, c.agrees ? "" : c.mismatches.front());
    });
  }
  ReciprocityReport dagger, dagger_dual;
  run.run("dagger", [&] {
    dagger = check_dagger(*st, opt.jobs);
    dagger.hypothesis = hyp_theorem;
    run.reciprocity("dagger", dagger);
  });
  if (in.algebra->has_involution()) {
    run.run("dagger_dual", [&] {
      dagger_dual = check_dagger_dual(*st, opt.jobs);
      dagger_dual.hypothesis = hyp_theorem;
      run.reciprocity("dagger_dual", dagger_dual);
    });
    run.run("dagger_sides_agree", [&] {
      run.record("dagger_sides_agree", tables_agree(check_dagger(*st, opt.jobs), check_dagger_dual(*st, opt.jobs)));
    });
    run.run("lemma9", [&] {
      auto r = lemma9_all(*st, opt.jobs);
      r.hypothesis = hyp_theorem;
      run.reciprocity("lemma9", r);
    });
  }
  run.run("cartan", [&] {
    auto r = check_cartan_truncations(*st);
    r.hypothesis = hyp_theorem;
    run.reciprocity("cartan", r);
  });
  if (in.poset) {
    run.run("qh", [&] {
      const auto r = check_quasi_hereditary(*st, *in.poset);
      run.record("qh", r.holds, r.holds ? "" : r.failures.front());
    });
    run.run("bgg", [&] {
      const auto r = check_bgg(*st, *in.poset);
      run.record("bgg", r.holds, r.holds ? "" : r.failures.front());
    });
    ReciprocityReport dd, dd_dual;
    run.run("ddagger", [&] {
      dd = check_ddagger(*st, *in.poset, opt.jobs);
      dd.hypothesis = hyp_bgg;
      run.reciprocity("ddagger", dd);
    });
    run.run("ddagger_dual", [&] {
      dd_dual = check_ddagger_dual(*st, *in.poset, opt.jobs);
      dd_dual.hypothesis = hyp_bgg;
      run.reciprocity("ddagger_dual", dd_dual);
    });
    run.run("ddagger_sides_agree", [&] {
      run.record("ddagger_sides_agree", tables_agree(check_ddagger(*st, *in.poset, opt.jobs),
                                                      check_ddagger_dual(*st, *in.poset, opt.jobs)));
    });
    run.run("numerical", [&] {
      auto r = check_numerical_bgg(*st, *in.poset);
      r.hypothesis = hyp_bgg;
      run.reciprocity("numerical", r);
    });
  }
}

int cmd_verify_all(const Options& opt, const std::string& data_dir, std::ostream& out) {
  const fs::path dir = data_dir.empty() ? fs::path(LOEWY_DATA_DIR) : fs::path(data_dir);
  const json manifest = read_json_file(dir / "manifest.json");
  std::vector<Outcome> outcomes;
  for (const auto& entry : manifest.at("examples")) verify_example(opt, dir, entry, outcomes);

  std::size_t unexpected = 0;
  json results = json::array();
  std::ostringstream os;
  os << std::left << std::setw(10) << "status" << std::setw(34) << "example" << std::setw(22) << "check"
     << std::setw(8) << "result" << "expected\n";
  for (const auto& o : outcomes) {
    const bool as_expected = o.holds == o.expected;
    if (!as_expected) ++unexpected;
    os << std::left << std::setw(10) << (as_expected ? "ok" : "UNEXPECTED") << std::setw(34) << o.example
       << std::setw(22) << o.check << std::setw(8) << (o.holds ? "holds" : "fails")
       << (o.expected ? "holds" : "fails");
    if (!o.detail.empty() && (!o.holds || !as_expected)) os << "  (" << o.detail << ")";
    os << "\n";
    results.push_back({{"example", o.example},
                       {"check", o.check},
                       {"holds", o.holds},
                       {"expected", o.expected},
                       {"detail", o.detail}});
  }
  os << outcomes.size() - unexpected << " of " << outcomes.size() << " outcomes as expected\n";
  const json j = {{"results", results}, {"all_as_expected", unexpected == 0}};
  emit(opt, j, os.str(), out);
  return unexpected == 0 ? kExitOk : kExitFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Loewy structure of projective modules over finite-dimensional algebras"};
  app.name("loewy");
  app.require_subcommand(1);
  Options opt;
  auto common = [&](CLI::App* sub, bool formats) {
    sub->add_option("--out", opt.out_path, "Write the JSON result to this file");
    if (formats) {
      sub->add_option("--format", opt.format, "Output on stdout: json, ascii or dot")
          ->check(CLI::IsMember({"json", "ascii", "dot"}));
    }
  };

  std::string path, modulus, kind, weight, render_name = "ascii", example, blocks = "1", data_dir;
  std::vector<std::string> files;
  bool socle_side = false, murphy = false;
  std::size_t n = 3;
  std::uint32_t p = 2;
  long delta = 1;

  auto* analyze = app.add_subcommand("analyze", "Radical, simples, PIM Loewy diagrams and Cartan matrix");
  analyze->add_option("algebra", path, "Algebra or cell datum file")->required();
  analyze->add_option("--modulus", modulus, "Extend scalars to GF(p^k) given by this monic modulus, low to high");
  analyze->add_flag("--oracle", opt.oracle, "Cross-check against the brute-force oracle");
  common(analyze, true);

  auto* check = app.add_subcommand("check", "Run one checker");
  check->add_option("kind", kind, "cellular, qh, bgg, dagger, ddagger, cartan, lemma9 or numerical")
      ->required()
      ->check(CLI::IsMember({"cellular", "qh", "bgg", "dagger", "ddagger", "cartan", "lemma9", "numerical"}));
  check->add_option("files", files, "Algebra, cell datum and poset files")->required();
  check->add_flag("--socle-side", socle_side, "Check the socle form (dagger, ddagger)");
  check->add_flag("--require-hypotheses", opt.require_hypotheses, "Exit 3 when no hypothesis is certified");
  check->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  common(check, true);

  auto* pred = app.add_subcommand("predict", "Predict a PIM's Loewy diagram from decomposition data");
  pred->add_option("decomposition", path, "Decomposition data file")->required();
  pred->add_option("--weight", weight, "Weight mu of P(mu)")->required();
  pred->add_flag("--socle-side", socle_side, "Also stack the costandard socle layers");
  pred->add_option("--render", render_name, "ascii or dot")->check(CLI::IsMember({"ascii", "dot"}));
  common(pred, true);

  auto* make = app.add_subcommand("make-example", "Write example algebra, cell datum and poset files");
  make->add_option("name", example, "symgroup, tl, schur2, semisimple, truncated or upper-triangular")
      ->required()
      ->check(CLI::IsMember({"symgroup", "tl", "schur2", "semisimple", "truncated", "upper-triangular"}));
  make->add_option("--n,--r", n, "n for symgroup, tl and upper-triangular, r for schur2");
  make->add_option("--p", p, "Characteristic");
  make->add_option("--modulus", modulus, "Monic modulus of GF(p^k), low to high");
  make->add_option("--delta", delta, "Loop value for tl");
  make->add_option("--blocks", blocks, "Matrix block sizes for semisimple, comma separated");
  make->add_flag("--murphy", murphy, "symgroup: also write the Murphy basis cell datum");
  make->add_option("--out", opt.out_path, "Output directory");

  auto* verify = app.add_subcommand("verify-all", "Run every checker on every bundled example");
  verify->add_option("--data", data_dir, "Directory holding manifest.json");
  verify->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--oracle", opt.oracle, "Include the brute-force oracle comparison");
  common(verify, true);

  auto* rend = app.add_subcommand("render", "Render a predicted diagram file");
  rend->add_option("diagram", path, "Output of predict --out")->required();
  rend->add_option("--format", opt.format, "ascii or dot")->check(CLI::IsMember({"ascii", "dot"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParse;
  }

  try {
    if (*analyze) return cmd_analyze(opt, path, modulus, out, err);
    if (*check) return cmd_check(opt, kind, files, socle_side, out, err);
    if (*pred) return cmd_predict(opt, path, weight, socle_side, render_name, out, err);
    if (*make) return cmd_make_example(example, n, p, modulus, delta, blocks, murphy, opt.out_path, out);
    if (*verify) return cmd_verify_all(opt, data_dir, out);
    if (*rend) return cmd_render(opt, path, out);
  } catch (const Failed& f) {
    return f.code;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const fs::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailed;
  } catch (const json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitParse;
  }
  return kExitFailed;
}

}  // namespace loewy

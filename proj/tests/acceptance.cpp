// Acceptance suite: one PASS/FAIL line per criterion. Exit status 0 iff all pass.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "loewy/cli.hpp"
#include "loewy/constructions.hpp"
#include "loewy/io.hpp"
#include "loewy/oracle.hpp"

using namespace loewy;
namespace fs = std::filesystem;

namespace {

const fs::path kData = LOEWY_DATA_DIR;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct CliResult {
  int code = 0;
  json doc;
  std::string err;
};

CliResult cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.err = err.str();
  try {
    r.doc = json::parse(out.str());
  } catch (const json::exception&) {
    r.doc = json();
  }
  return r;
}

std::string path(const std::string& name) { return (kData / name).string(); }

struct Example {
  std::string name;
  std::vector<std::string> files;
};

const std::vector<Example> kReciprocity = {
    {"GF(3)[S3] Murphy", {"sym3_p3_murphy_cells.json"}},
    {"GF(2)[S3] Murphy", {"sym3_p2_murphy_cells.json"}},
    {"TL3(1)/GF(5)", {"tl3_d1_p5_cells.json"}},
    {"TL4(1)/GF(5)", {"tl4_d1_p5_cells.json"}},
    {"S(2,2)/GF(2)", {"schur22_p2.json", "schur22_p2_poset.json"}},
    {"S(2,3)/GF(3)", {"schur23_p3.json", "schur23_p3_poset.json"}},
};

const std::vector<Example> kBgg = {
    {"S(2,2)/GF(2)", {"schur22_p2.json", "schur22_p2_poset.json"}},
    {"S(2,3)/GF(3)", {"schur23_p3.json", "schur23_p3_poset.json"}},
    {"semisimple 1,1 /GF(2)", {"semisimple_1_1_p2.json", "semisimple_1_1_p2_poset.json"}},
    {"semisimple 1,2 /GF(3)", {"semisimple_1_2_p3.json", "semisimple_1_2_p3_poset.json"}},
};

/// Runs `check kind` on an example with --require-hypotheses; records failures.
void require_check(Outcome& o, const std::string& kind, const Example& ex, bool socle_side = false) {
  std::vector<std::string> args = {"check", kind};
  for (const auto& f : ex.files) args.push_back(path(f));
  args.insert(args.end(), {"--require-hypotheses", "--format", "json"});
  if (socle_side) args.push_back("--socle-side");
  const auto r = cli(args);
  if (r.code != kExitOk || !r.doc.is_object() || r.doc.value("holds", false) != true) {
    o.fail(kind + (socle_side ? " (socle side)" : "") + " on " + ex.name + ": exit " + std::to_string(r.code) + " " +
           r.err);
    return;
  }
  if (r.doc.contains("rows") && r.doc["rows"].empty()) o.fail(kind + " on " + ex.name + ": no rows");
}

struct Loaded {
  std::string name;
  AlgebraPtr algebra;
};

/// Every algebra in the data directory: algebra files and cell data.
std::vector<Loaded> all_algebras() {
  std::vector<Loaded> out;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(kData)) files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const std::string name = p.filename().string();
    if (name == "manifest.json" || name.rfind("corrupt_", 0) == 0) continue;
    const json j = read_json_file(p);
    const std::string kind = classify_document(j);
    if (kind == "algebra") {
      out.push_back({name, std::make_shared<const Algebra>(algebra_from_json(j))});
    } else if (kind == "cells") {
      out.push_back({name, cell_labelled_algebra(cell_datum_from_json(j, kData))});
    }
  }
  return out;
}

// ---------------------------------------------------------------- criteria

Outcome criterion1() {
  Outcome o;
  for (const auto& ex : kReciprocity) require_check(o, "dagger", ex);
  if (o.pass) o.detail = std::to_string(kReciprocity.size()) + " algebras, hypotheses certified";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (const auto& ex : kBgg) {
    require_check(o, "bgg", ex);
    require_check(o, "ddagger", ex);
    require_check(o, "numerical", ex);
  }
  if (o.pass) o.detail = std::to_string(kBgg.size()) + " BGG algebras";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& l : all_algebras()) {
    if (!l.algebra->has_involution() || !validate_algebra(*l.algebra).valid) continue;
    const AlgebraStructure st(l.algebra);
    const auto r = check_cartan_truncations(st);
    if (!r.holds) o.fail(l.name + ": truncated Cartan matrix not symmetric");
    ++n;
  }
  for (const auto& ex : kReciprocity) require_check(o, "cartan", ex);
  if (o.pass) o.detail = std::to_string(n) + " algebras with involution, every s";
  return o;
}

Outcome criterion4() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& l : all_algebras()) {
    if (!l.algebra->has_involution() || !validate_algebra(*l.algebra).valid) continue;
    const AlgebraStructure st(l.algebra);
    const auto r = lemma9_all(st, 4);
    if (!r.holds || r.rows.empty()) o.fail(l.name + ": Hom-dimension multiplicities differ from layers");
    ++n;
  }
  if (o.pass) o.detail = std::to_string(n) + " algebras with involution";
  return o;
}

Outcome criterion5() {
  Outcome o;
  std::vector<Example> bgg = kBgg;
  bgg.push_back({"TL3(1)/GF(5)", {"tl3_d1_p5.json", "tl3_d1_p5_poset.json"}});
  bgg.push_back({"TL4(1)/GF(5)", {"tl4_d1_p5.json", "tl4_d1_p5_poset.json"}});
  bgg.push_back({"S(2,2)/GF(3)", {"schur22_p3.json", "schur22_p3_poset.json"}});
  bgg.push_back({"S(2,4)/GF(2)", {"schur24_p2.json", "schur24_p2_poset.json"}});
  for (const auto& ex : bgg) {
    const AlgebraStructure st(std::make_shared<const Algebra>(algebra_from_json(read_json_file(kData / ex.files[0]))));
    const Poset poset = poset_from_json(read_json_file(kData / ex.files[1]));
    if (!check_bgg(st, poset).holds) {
      o.fail(ex.name + " is not certified BGG");
      continue;
    }
    if (!tables_agree(check_dagger(st), check_dagger_dual(st))) o.fail(ex.name + ": dagger tables differ");
    const auto rad = check_ddagger(st, poset);
    const auto soc = check_ddagger_dual(st, poset);
    if (!rad.holds || !soc.holds || !tables_agree(rad, soc)) o.fail(ex.name + ": filtration tables differ");
  }
  if (o.pass) o.detail = std::to_string(bgg.size()) + " BGG algebras";
  return o;
}

/// Offsets, layer sizes, palindrome and rigidity of the T(5) prediction.
std::string sl3_mismatch(const json& radical_side, bool rigid) {
  const std::vector<std::pair<std::string, std::size_t>> offsets = {
      {"2", 1}, {"3", 2}, {"3′", 2}, {"4", 3}, {"4′", 3}, {"5", 4}};
  const std::vector<std::size_t> sizes = {1, 3, 4, 7, 4, 3, 1};
  std::vector<std::pair<std::string, std::size_t>> got;
  for (const auto& s : radical_side.at("sections")) {
    got.push_back({s.at("lambda").get<std::string>(), s.at("offset").get<std::size_t>()});
  }
  if (got != offsets) return "section offsets differ";
  const auto& layers = radical_side.at("layers");
  std::vector<std::size_t> got_sizes;
  for (const auto& l : layers) got_sizes.push_back(l.size());
  if (got_sizes != sizes) return "layer sizes differ";
  for (std::size_t s = 0; s < layers.size(); ++s) {
    if (layers[s] != layers[layers.size() - 1 - s]) return "not palindromic";
  }
  if (!rigid) return "not rigid";
  return "";
}

Outcome criterion6() {
  Outcome o;
  const auto r = cli({"predict", path("sl3_p5.json"), "--weight", "2", "--format", "json"});
  if (r.code != kExitOk || !r.doc.is_object()) {
    o.fail("predict exit " + std::to_string(r.code) + " " + r.err);
    return o;
  }
  const std::string why = sl3_mismatch(r.doc.at("radical_side"), r.doc.value("rigid", false));
  if (!why.empty()) o.fail(why);
  if (o.pass) o.detail = "7 layers [1,3,4,7,4,3,1], rigid";
  return o;
}

Outcome criterion7() {
  Outcome o;
  std::size_t n = 0;
  for (const auto& l : all_algebras()) {
    if (l.algebra->dim() > 40) continue;
    const AlgebraStructure st(l.algebra);
    const auto cmp = oracle_crosscheck(st);
    if (!cmp.agrees) o.fail(l.name + ": " + (cmp.mismatches.empty() ? "" : cmp.mismatches.front()));
    ++n;
  }
  const auto r = cli({"analyze", path("sym3_p3.json"), "--oracle", "--format", "json"});
  if (r.code != kExitOk) o.fail("analyze --oracle exit " + std::to_string(r.code));
  if (o.pass) o.detail = std::to_string(n) + " algebras of dim <= 40";
  return o;
}

Outcome criterion8() {
  Outcome o;
  // Every single structure-constant perturbation of GF(3)[S3].
  const json base = read_json_file(kData / "sym3_p3.json");
  const std::size_t d = base.at("dim");
  std::size_t tried = 0, caught = 0;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        json bad = base;
        auto& c = bad["mult"][i][j][k];
        c = (c.get<int>() + 1) % 3;
        ++tried;
        try {
          const Algebra a = algebra_from_json(bad);
          if (!validate_algebra(a).valid) {
            ++caught;
            continue;
          }
          const AlgebraStructure st(std::make_shared<const Algebra>(a));
          if (!check_dagger(st).holds || !lemma9_all(st).holds) ++caught;
        } catch (const Error&) {
          ++caught;
        }
      }
    }
  }
  if (caught != tried) o.fail(std::to_string(tried - caught) + " structure-constant perturbations pass every checker");

  // Every single Delta-layer entry of sl3_p5, removed or duplicated.
  const json sl3 = read_json_file(kData / "sl3_p5.json");
  std::size_t ltried = 0, lcaught = 0;
  for (const auto& [lambda, layers] : sl3.at("delta_layers").items()) {
    for (std::size_t s = 0; s < layers.size(); ++s) {
      for (std::size_t e = 0; e < layers[s].size(); ++e) {
        for (int mode = 0; mode < 2; ++mode) {
          json bad = sl3;
          auto& layer = bad["delta_layers"][lambda][s];
          if (mode == 0) {
            layer.erase(e);
          } else {
            layer.push_back(layer[e]);
          }
          ++ltried;
          try {
            const auto data = decomposition_from_json(bad);
            if (!validate_decomposition(data).empty()) {
              ++lcaught;
              continue;
            }
            const auto rad = predict(data, "2");
            const bool rigid = rigidity_verdict(rad, predict_socle_side(data, "2"));
            if (!sl3_mismatch(predicted_to_json(rad), rigid).empty()) ++lcaught;
          } catch (const Error&) {
            ++lcaught;
          }
        }
      }
    }
  }
  if (lcaught != ltried) o.fail(std::to_string(ltried - lcaught) + " layer perturbations leave every check passing");
  if (o.pass) {
    o.detail = std::to_string(tried) + " structure-constant and " + std::to_string(ltried) +
               " layer perturbations all detected";
  }
  return o;
}

Outcome criterion9() {
  Outcome o;
  std::size_t good = 0;
  for (const auto& e : fs::directory_iterator(kData)) {
    const std::string name = e.path().filename().string();
    if (name.size() < 11 || name.substr(name.size() - 11) != "_cells.json" || name.rfind("corrupt_", 0) == 0) {
      continue;
    }
    const auto r = check_axioms(cell_datum_from_json(read_json_file(e.path()), kData));
    if (!r.valid) o.fail(name + ": " + r.violations.front());
    ++good;
  }
  const std::vector<std::pair<std::string, std::string>> corrupt = {
      {"corrupt_tl3_duplicate_index_cells.json", "(C1)"},
      {"corrupt_tl3_involution_cells.json", "(C2)"},
      {"corrupt_sym3_p3_reversed_poset_cells.json", "(C3)"},
  };
  for (const auto& [name, axiom] : corrupt) {
    const auto r = check_axioms(cell_datum_from_json(read_json_file(kData / name), kData));
    if (r.valid) {
      o.fail(name + " passes");
      continue;
    }
    bool named = false;
    for (const auto& v : r.violations) named |= v.rfind(axiom, 0) == 0;
    if (!named) o.fail(name + ": no " + axiom + " violation");
  }
  if (good < 4) o.fail("only " + std::to_string(good) + " cell data files");
  if (o.pass) o.detail = std::to_string(good) + " cell data pass, C1/C2/C3 corruptions named";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"layered reciprocity for PIMs", criterion1},
      {"Delta-section reciprocity and numerical BGG reciprocity", criterion2},
      {"truncated Cartan matrices symmetric", criterion3},
      {"Hom-dimension multiplicities equal layer multiplicities", criterion4},
      {"socle-side tables equal radical-side tables", criterion5},
      {"SL3 tilting module T(5) prediction", criterion6},
      {"brute-force oracle agreement", criterion7},
      {"injected faults detected", criterion8},
      {"cell datum certification", criterion9},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " (" << o.detail
         << ", " << std::fixed << secs << " s)";
    std::cout << line.str() << std::endl;
    all = all && o.pass;
  }
  return all ? 0 : 1;
}

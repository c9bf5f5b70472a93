#include <map>
#include <set>

#include "doctest.h"
#include "loewy/constructions.hpp"
#include "loewy/highest_weight.hpp"
#include "loewy/symbolic.hpp"

using namespace loewy;

namespace {

const std::string p3 = "3′", p4 = "4′";

using Rows = std::vector<std::vector<std::string>>;

LoewyDiagram diagram(const Rows& rows) {
  LoewyDiagram d;
  for (const auto& r : rows) {
    Layer l;
    for (const auto& x : r) ++l[x];
    d.push_back(l);
  }
  return d;
}

DecompositionData sl3() {
  DecompositionData d;
  d.poset = Poset({"1", "2", "3", p3, "4", p4, "5"}, {{"1", "2"},
                                                       {"2", "3"},
                                                       {"2", p3},
                                                       {"3", "4"},
                                                       {p3, "4"},
                                                       {"3", p4},
                                                       {p3, p4},
                                                       {"4", "5"},
                                                       {p4, "5"}});
  d.delta_layers = {{"1", diagram({{"1"}})},
                    {"2", diagram({{"2"}, {"1"}})},
                    {"3", diagram({{"3"}, {"2"}})},
                    {p3, diagram({{p3}, {"2"}})},
                    {"4", diagram({{"4"}, {"3", "1", p3}, {"2"}})},
                    {p4, diagram({{p4}, {"3", "1", p3}, {"2"}})},
                    {"5", diagram({{"5"}, {"4", p4}, {"3", "1", p3}, {"2"}})}};
  d.projective_weights = {"2"};
  return d;
}

// Independent stacking: a flat table of (label, layer) counts.
std::map<std::pair<std::size_t, std::string>, std::size_t> hand_stack(const DecompositionData& d,
                                                                       const std::string& mu) {
  std::map<std::pair<std::size_t, std::string>, std::size_t> out;
  for (const auto& [lambda, layers] : d.delta_layers) {
    for (std::size_t s = 0; s < layers.size(); ++s) {
      auto it = layers[s].find(mu);
      if (it == layers[s].end()) continue;
      for (std::size_t copy = 0; copy < it->second; ++copy) {
        for (std::size_t t = 0; t < layers.size(); ++t) {
          for (const auto& [x, m] : layers[t]) out[{s + t, x}] += m;
        }
      }
    }
  }
  return out;
}

}  // namespace

TEST_CASE("T(5) from the SL3 Weyl modules") {
  const auto d = sl3();
  CHECK(validate_decomposition(d).empty());
  const auto p = predict(d, "2");
  std::vector<std::pair<std::string, std::size_t>> sections;
  for (const auto& s : p.sections) sections.push_back({s.lambda, s.offset});
  CHECK(sections == std::vector<std::pair<std::string, std::size_t>>{
                        {"2", 1}, {"3", 2}, {p3, 2}, {"4", 3}, {p4, 3}, {"5", 4}});
  std::vector<std::size_t> sizes;
  for (const auto& l : p.layers) sizes.push_back(layer_size(l));
  CHECK(sizes == std::vector<std::size_t>{1, 3, 4, 7, 4, 3, 1});
  CHECK(p.layers.front() == Layer{{"2", 1}});
  // Palindromic.
  for (std::size_t s = 0; s < p.layers.size(); ++s) CHECK(p.layers[s] == p.layers[p.layers.size() - 1 - s]);

  std::map<std::pair<std::size_t, std::string>, std::size_t> flat;
  for (std::size_t s = 0; s < p.layers.size(); ++s) {
    for (const auto& [x, m] : p.layers[s]) flat[{s, x}] = m;
  }
  CHECK(flat == hand_stack(d, "2"));

  const auto soc = predict_socle_side(d, "2");
  CHECK(soc.socle_side);
  CHECK(rigidity_verdict(p, soc));
}

TEST_CASE("rigidity fails for a lopsided dataset") {
  DecompositionData d;
  d.poset = Poset({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
  d.delta_layers = {{"a", diagram({{"a"}})}, {"b", diagram({{"b"}, {"a"}})}, {"c", diagram({{"c"}, {"a"}})}};
  d.nabla_layers = std::map<std::string, LoewyDiagram>{
      {"a", diagram({{"a"}})}, {"b", diagram({{"b"}, {"a"}})}, {"c", diagram({{"c"}, {"b"}})}};
  const auto rad = predict(d, "a");
  const auto soc = predict_socle_side(d, "a");
  CHECK(rad.layers.size() == 3);
  CHECK_FALSE(rigidity_verdict(rad, soc));
}

TEST_CASE("degenerate and invalid data") {
  DecompositionData single;
  single.poset = Poset::discrete({"x"});
  single.delta_layers = {{"x", diagram({{"x"}})}};
  const auto p = predict(single, "x");
  CHECK(p.layers.size() == 1);
  CHECK(p.layers[0] == Layer{{"x", 1}});
  CHECK(rigidity_verdict(p, predict_socle_side(single, "x")));
  CHECK_THROWS_AS(predict(single, "y"), UnknownLabel);

  auto bad = sl3();
  bad.delta_layers["4"][1]["9"] = 1;
  CHECK_FALSE(validate_decomposition(bad).empty());
  bad = sl3();
  bad.delta_layers["3"][0] = Layer{{"3", 1}, {"2", 1}};
  CHECK_FALSE(validate_decomposition(bad).empty());
  bad = sl3();
  bad.delta_layers["2"][1] = Layer{{"3", 1}};  // 3 is not below 2
  CHECK_FALSE(validate_decomposition(bad).empty());
  bad = sl3();
  bad.delta_layers.erase("5");
  CHECK_FALSE(validate_decomposition(bad).empty());
  bad = sl3();
  bad.projective_weights = {"7"};
  CHECK_FALSE(validate_decomposition(bad).empty());
}

TEST_CASE("ASCII and DOT rendering") {
  const auto d = sl3();
  const auto p = predict(d, "2");
  const std::string ascii = render(p, RenderFormat::Ascii);
  CHECK(ascii ==
        "1: [2]\n"
        "2: 1 [3] [" + p3 + "]\n"
        "3: 2 2 [4] [" + p4 + "]\n"
        "4: 1 1 3 3 " + p3 + " " + p3 + " [5]\n"
        "5: 2 2 4 " + p4 + "\n"
        "6: 1 3 " + p3 + "\n"
        "7: 2\n");
  const std::string dot = render(p, RenderFormat::Dot);
  CHECK(dot.rfind("digraph loewy {", 0) == 0);
  CHECK(dot.find("[label=\"[5]\"]") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
  CHECK(parse_render_format("dot") == RenderFormat::Dot);
  CHECK_THROWS_AS(parse_render_format("svg"), Error);
}

TEST_CASE("section counts and additivity") {
  const auto d = sl3();
  for (const auto& mu : d.poset.labels()) {
    const auto p = predict(d, mu);
    CHECK(p.layers.front() == Layer{{mu, 1}});
    for (const auto& [lambda, layers] : d.delta_layers) {
      std::size_t occurrences = 0, sections = 0;
      for (const auto& l : layers) {
        auto it = l.find(mu);
        if (it != l.end()) occurrences += it->second;
      }
      for (const auto& s : p.sections) sections += s.lambda == lambda;
      CHECK(sections == occurrences);
    }
  }
  auto doubled = d;
  doubled.delta_layers["4"][1]["1"] = 2;
  const auto base = predict(d, "1");
  const auto twice = predict(doubled, "1");
  CHECK(twice.sections.size() == base.sections.size() + 1);
  std::size_t extra = 0;
  for (std::size_t s = 0; s < twice.layers.size(); ++s) extra += layer_size(twice.layers[s]);
  for (std::size_t s = 0; s < base.layers.size(); ++s) extra -= layer_size(base.layers[s]);
  CHECK(extra == 7);  // one more copy of Delta(4)
}

TEST_CASE("predictions from computed standard modules match the algebra") {
  std::vector<WeightedAlgebra> cases = {schur_algebra_2r(2, Field::prime(2)), schur_algebra_2r(3, Field::prime(3)),
                                        schur_algebra_2r(4, Field::prime(2))};
  const CellDatum tl = temperley_lieb(4, 1, Field::prime(5));
  cases.push_back({cell_labelled_algebra(tl), tl.poset.opposite()});
  for (const auto& wa : cases) {
    const AlgebraStructure st(wa.algebra);
    DecompositionData data;
    data.poset = wa.poset;
    for (std::size_t l = 0; l < st.count(); ++l) {
      data.delta_layers[st.labels()[l]] = loewy_diagram(st, standard_module(st, wa.poset, l));
    }
    REQUIRE(validate_decomposition(data).empty());
    for (std::size_t mu = 0; mu < st.count(); ++mu) {
      const auto p = predict(data, st.labels()[mu]);
      std::multiset<std::pair<std::string, std::size_t>> predicted, exact;
      for (const auto& s : p.sections) predicted.insert({s.lambda, s.offset});
      for (const auto& s : delta_filtration(st, st.pim(mu), wa.poset)) exact.insert({s.lambda, s.depth});
      CHECK(predicted == exact);
      CHECK(p.layers == loewy_diagram(st, st.pim(mu)));
    }
  }
}

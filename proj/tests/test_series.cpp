#include "doctest.h"
#include "loewy/constructions.hpp"
#include "loewy/series.hpp"
#include "support.hpp"

using namespace loewy;

namespace {

AlgebraPtr ptr(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

Layer layer(std::initializer_list<std::pair<const std::string, std::size_t>> l) { return Layer(l); }

}  // namespace

TEST_CASE("radical series of GF(3)[S3] against products with the brute-force radical") {
  const auto a = ptr(group_algebra_sym(3, Field::prime(3)));
  const AlgebraStructure st(a);
  const Rep reg = Rep::regular(a);
  const auto rad = testing::radical_by_maximal_submodules(reg);
  // rad^s A = R * rad^{s-1} A as sets.
  std::vector<std::size_t> dims;
  testing::VecSet cur;
  for (const auto& v : testing::all_vectors(3, 6)) cur.insert(v);
  while (true) {
    std::size_t d = 0;
    for (std::size_t n = cur.size(); n > 1; n /= 3) ++d;
    dims.push_back(d);
    if (cur.size() == 1) break;
    testing::VecSet prods;
    for (const auto& r : rad) {
      for (const auto& m : cur) prods.insert(a->multiply(r, m));
    }
    cur = testing::additive_closure(prods, 6, 3);
  }
  const auto series = radical_series(st, reg);
  std::vector<std::size_t> got;
  for (const auto& s : series) got.push_back(s.dim());
  CHECK(got == dims);
  CHECK(got == std::vector<std::size_t>{6, 4, 2, 0});
  std::vector<std::size_t> soc;
  for (const auto& s : socle_series(st, reg)) soc.push_back(s.dim());
  CHECK(soc == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK(loewy_length(st, reg) == 3);
}

TEST_CASE("PIM diagrams of GF(3)[S3]") {
  const AlgebraStructure st(ptr(group_algebra_sym(3, Field::prime(3))));
  const auto t = st.index_of("triv"), s = st.index_of("sign");
  CHECK(loewy_diagram(st, st.pim(t)) == LoewyDiagram{layer({{"triv", 1}}), layer({{"sign", 1}}), layer({{"triv", 1}})});
  CHECK(loewy_diagram(st, st.pim(s)) == LoewyDiagram{layer({{"sign", 1}}), layer({{"triv", 1}}), layer({{"sign", 1}})});
  CHECK(socle_diagram(st, st.pim(t)) == LoewyDiagram{layer({{"triv", 1}}), layer({{"sign", 1}}), layer({{"triv", 1}})});
  CHECK(is_rigid(st, st.pim(t)));
  CHECK(diagram_consistent(st, st.pim(t), loewy_diagram(st, st.pim(t))));
  const auto c = cartan_matrix(st);
  CHECK(c.entries == std::vector<std::vector<std::size_t>>{{2, 1}, {1, 2}});
}

TEST_CASE("GF(2)[S3]: projective simple and a non-trivial block") {
  const AlgebraStructure st(ptr(group_algebra_sym(3, Field::prime(2))));
  CHECK(st.radical().dim() == 1);
  const auto t = st.index_of("triv"), s = st.index_of("std");
  CHECK(loewy_diagram(st, st.pim(t)) == LoewyDiagram{layer({{"triv", 1}}), layer({{"triv", 1}})});
  CHECK(loewy_diagram(st, st.pim(s)) == LoewyDiagram{layer({{"std", 1}})});
}

TEST_CASE("non-rigid module") {
  const auto a = ptr(upper_triangular(3, Field::prime(3)));
  const AlgebraStructure st(a);
  std::size_t longest = 0;
  for (std::size_t i = 0; i < st.count(); ++i) {
    if (st.pim(i).dim() > st.pim(longest).dim()) longest = i;
  }
  CHECK(loewy_length(st, st.pim(longest)) == 3);
  CHECK(is_rigid(st, st.pim(longest)));
  // A length-3 uniserial plus its head: radical and socle series differ.
  const Rep m = direct_sum(st.pim(longest), st.simple(longest));
  CHECK(loewy_length(st, m) == 3);
  CHECK_FALSE(is_rigid(st, m));
  CHECK(layer_size(loewy_diagram(st, m)[0]) == 2);
  CHECK(layer_size(socle_diagram(st, m)[0]) == 2);
}

TEST_CASE("standard and costandard modules of S(2,2) over GF(2)") {
  const auto wa = schur_algebra_2r(2, Field::prime(2));
  const AlgebraStructure st(wa.algebra);
  const auto top = st.index_of("2,0"), bottom = st.index_of("1,1");
  CHECK(wa.poset.less("1,1", "2,0"));
  CHECK(loewy_diagram(st, standard_module(st, wa.poset, top)) ==
        LoewyDiagram{layer({{"2,0", 1}}), layer({{"1,1", 1}})});
  CHECK(loewy_diagram(st, standard_module(st, wa.poset, bottom)) == LoewyDiagram{layer({{"1,1", 1}})});
  CHECK(socle_diagram(st, costandard_module(st, wa.poset, top)) ==
        LoewyDiagram{layer({{"2,0", 1}}), layer({{"1,1", 1}})});
  CHECK(loewy_diagram(st, st.pim(bottom)) ==
        LoewyDiagram{layer({{"1,1", 1}}), layer({{"2,0", 1}}), layer({{"1,1", 1}})});
  CHECK(composition_multiplicity(st, st.pim(bottom), bottom) == 2);
  // A maximal weight has P = Delta.
  CHECK(standard_module(st, wa.poset, top).dim() == st.pim(top).dim());
}

TEST_CASE("trace and avoiding submodules") {
  const AlgebraStructure st(ptr(group_algebra_sym(3, Field::prime(3))));
  const auto t = st.index_of("triv"), s = st.index_of("sign");
  const Rep& p = st.pim(t);
  // Trace of P(sign) in P(triv) is the radical; the largest submodule avoiding triv is zero.
  CHECK(trace_submodule(st, p, {s}) == radical_series(st, p)[1]);
  CHECK(largest_submodule_avoiding(st, p, {t}).dim() == 0);
  CHECK(largest_submodule_avoiding(st, p, {s}).dim() == 1);
}

#include <set>

#include "doctest.h"
#include "loewy/constructions.hpp"
#include "loewy/highest_weight.hpp"

using namespace loewy;

namespace {

AlgebraPtr ptr(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

long row_left(const ReciprocityReport& r, const std::string& lambda, const std::string& mu, std::size_t s) {
  for (const auto& row : r.rows) {
    if (row.lambda == lambda && row.mu == mu && row.s == s) return row.left;
  }
  return -1;
}

}  // namespace

TEST_CASE("dagger on symmetric group algebras and a failure off hypothesis") {
  const AlgebraStructure p3(ptr(group_algebra_sym(3, Field::prime(3))));
  const auto r = check_dagger(p3);
  CHECK(r.holds);
  CHECK(r.rows.size() == 2 * 2 * 3);
  CHECK(row_left(r, "triv", "sign", 2) == 1);
  CHECK(row_left(r, "triv", "sign", 1) == 0);

  // Upper triangular matrices are neither cellular nor BGG: P(S1) = S1/S0 but P(S0) = S0.
  const AlgebraStructure ut(ptr(upper_triangular(2, Field::prime(3))));
  const auto bad = check_dagger(ut);
  CHECK_FALSE(bad.holds);
  bool found = false;
  for (const auto& row : bad.rows) found |= row.left != row.right && row.s == 2;
  CHECK(found);
}

TEST_CASE("truncated Cartan matrices of GF(3)[S3]") {
  const AlgebraStructure st(ptr(group_algebra_sym(3, Field::prime(3))));
  using M = std::vector<std::vector<std::size_t>>;
  CHECK(truncated_cartan(st, 1) == M{{1, 0}, {0, 1}});
  CHECK(truncated_cartan(st, 2) == M{{1, 1}, {1, 1}});
  CHECK(truncated_cartan(st, 3) == M{{2, 1}, {1, 2}});
  CHECK(check_cartan_truncations(st).holds);
}

TEST_CASE("Delta-filtration of S(2,2) over GF(2)") {
  const auto wa = schur_algebra_2r(2, Field::prime(2));
  const AlgebraStructure st(wa.algebra);
  const auto bottom = st.index_of("1,1");
  const Filtration f = delta_filtration(st, st.pim(bottom), wa.poset);
  REQUIRE(f.size() == 2);
  std::map<std::string, std::size_t> depth;
  for (const auto& s : f) depth[s.lambda] = s.depth;
  CHECK(depth["1,1"] == 1);
  CHECK(depth["2,0"] == 2);
  const auto series = radical_series(st, st.pim(bottom));
  for (const auto& s : f) {
    CHECK(series[s.depth - 1].contains(s.generator));
    CHECK_FALSE(series[s.depth].contains(s.generator));
  }
  const Filtration n = nabla_filtration(st, injective_hull(st, bottom), wa.poset);
  CHECK(n.size() == 2);

  const auto dd = check_ddagger(st, wa.poset);
  CHECK(dd.holds);
  CHECK(dd.notes.empty());
  CHECK(row_left(dd, "2,0", "1,1", 2) == 1);
  CHECK(row_left(dd, "2,0", "1,1", 1) == 0);
  const auto num = check_numerical_bgg(st, wa.poset);
  CHECK(num.holds);
  CHECK(row_left(num, "2,0", "1,1", 0) == 1);
  CHECK(tables_agree(dd, check_ddagger_dual(st, wa.poset)));
  CHECK(tables_agree(check_dagger(st), check_dagger_dual(st)));
}

TEST_CASE("quasi-hereditary and BGG certification") {
  const auto wa = schur_algebra_2r(3, Field::prime(3));
  const AlgebraStructure st(wa.algebra);
  CHECK(check_quasi_hereditary(st, wa.poset).holds);
  CHECK(check_bgg(st, wa.poset).holds);

  // Self-injective non-semisimple algebras are not quasi-hereditary.
  const AlgebraStructure g(ptr(group_algebra_sym(3, Field::prime(3))));
  const auto trivial = Poset::discrete({"sign", "triv"});
  const auto qh = check_quasi_hereditary(g, trivial);
  CHECK_FALSE(qh.holds);
  CHECK_FALSE(qh.failures.empty());
  const auto chain = Poset({"sign", "triv"}, {{"sign", "triv"}});
  CHECK_FALSE(check_quasi_hereditary(g, chain).holds);
  CHECK_THROWS_AS(delta_filtration(g, g.pim(0), trivial), NotDeltaFiltered);

  // Semisimple algebras are quasi-hereditary for any order.
  const auto ss = semisimple({1, 2, 1}, Field::prime(3));
  const AlgebraStructure sst(ss.algebra);
  CHECK(check_bgg(sst, ss.poset).holds);
  CHECK(check_quasi_hereditary(sst, Poset(ss.poset.labels(), {{"L0", "L1"}, {"L1", "L2"}})).holds);

  const AlgebraStructure ut(ptr(upper_triangular(2, Field::prime(3))));
  CHECK_THROWS_AS(check_bgg(ut, Poset({"S0", "S1"}, {{"S0", "S1"}})), NoInvolution);
  CHECK_THROWS_AS(require_matching_poset(ut, Poset::discrete({"a", "b"})), LabelError);
}

TEST_CASE("Temperley-Lieb is BGG for the opposite of its cell order") {
  const CellDatum d = temperley_lieb(4, 1, Field::prime(5));
  const AlgebraStructure st(cell_labelled_algebra(d));
  CHECK_FALSE(check_quasi_hereditary(st, d.poset).holds);
  const Poset hw = d.poset.opposite();
  CHECK(check_bgg(st, hw).holds);
  CHECK(check_ddagger(st, hw).holds);
  const auto wrong = check_ddagger(st, d.poset);
  CHECK_FALSE(wrong.holds);
  CHECK_FALSE(wrong.notes.empty());
}

TEST_CASE("Hom-dimension multiplicities equal radical layer multiplicities") {
  for (const auto& a : {ptr(group_algebra_sym(3, Field::prime(2))), schur_algebra_2r(2, Field::prime(2)).algebra,
                        cell_labelled_algebra(temperley_lieb(3, 1, Field::prime(5)))}) {
    const AlgebraStructure st(a);
    const auto r = lemma9_all(st, 2);
    CHECK(r.holds);
    CHECK_FALSE(r.rows.empty());
  }
}

TEST_CASE("reversed tie-break gives the same section depths on S(2,4)") {
  const auto wa = schur_algebra_2r(4, Field::prime(2));
  const AlgebraStructure st(wa.algebra);
  for (std::size_t mu = 0; mu < st.count(); ++mu) {
    const auto a = delta_filtration(st, st.pim(mu), wa.poset, TieBreak::LabelOrder);
    const auto b = delta_filtration(st, st.pim(mu), wa.poset, TieBreak::Reversed);
    std::multiset<std::pair<std::string, std::size_t>> sa, sb;
    for (const auto& s : a) sa.insert({s.lambda, s.depth});
    for (const auto& s : b) sb.insert({s.lambda, s.depth});
    CHECK(sa == sb);
  }
}

TEST_CASE("parallel and sequential reports are identical") {
  const auto wa = schur_algebra_2r(3, Field::prime(3));
  const AlgebraStructure st(wa.algebra);
  CHECK(tables_agree(check_dagger(st, 1), check_dagger(st, 4)));
  CHECK(tables_agree(check_ddagger(st, wa.poset, 1), check_ddagger(st, wa.poset, 3)));
  CHECK(tables_agree(lemma9_all(st, 1), lemma9_all(st, 4)));
}

TEST_CASE("hypothesis labels") {
  CHECK(hypothesis_label(true, false) == "cellular");
  CHECK(hypothesis_label(false, true) == "bgg");
  CHECK(hypothesis_label(false, false) == "unverified");
}

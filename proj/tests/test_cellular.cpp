#include "doctest.h"
#include "loewy/constructions.hpp"
#include "support.hpp"

using namespace loewy;

namespace {

const Field f5 = Field::prime(5);

std::vector<std::size_t> chain_dims(const CellDatum& d) {
  std::vector<std::size_t> out;
  for (const auto& s : cell_chain(d)) out.push_back(s.dim());
  return out;
}

bool mentions(const CellReport& r, const std::string& tag) {
  for (const auto& v : r.violations) {
    if (v.rfind(tag, 0) == 0) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("Temperley-Lieb dimensions are Catalan numbers and the axioms hold") {
  const std::size_t catalan[] = {1, 1, 2, 5, 14, 42, 132};
  for (std::size_t n = 1; n <= 6; ++n) {
    for (long delta : {0L, 1L, 2L}) {
      const CellDatum d = temperley_lieb(n, f5.from_int(delta), f5);
      CHECK(d.algebra->dim() == catalan[n]);
      const auto r = check_axioms(d);
      CHECK_MESSAGE(r.valid, "n=" << n << " delta=" << delta << (r.violations.empty() ? "" : " " + r.violations[0]));
      if (n <= 4) CHECK(validate_algebra(*d.algebra).valid);
    }
  }
}

TEST_CASE("cell chains") {
  CHECK(chain_dims(temperley_lieb(2, 1, f5)) == std::vector<std::size_t>{0, 1, 2});
  CHECK(chain_dims(temperley_lieb(3, 1, f5)) == std::vector<std::size_t>{0, 4, 5});
  const CellDatum tl3 = temperley_lieb(3, 1, f5);
  CHECK(tl3.m_sets.at("1").size() == 2);
  CHECK(tl3.m_sets.at("3").size() == 1);
}

TEST_CASE("cell modules and Gram forms of Temperley-Lieb") {
  for (long delta : {0L, 1L, 2L, 3L}) {
    const Elem dl = f5.from_int(delta);
    const CellDatum tl2 = temperley_lieb(2, dl, f5);
    const Mat g0 = gram_form(tl2, "0");
    CHECK(g0.rows() == 1);
    CHECK(g0(0, 0) == dl);
    const CellDatum tl3 = temperley_lieb(3, dl, f5);
    CHECK(cell_module(tl3, "3").dim() == 1);
    CHECK(cell_module(tl3, "1").dim() == 2);
    CHECK(validate_rep(cell_module(tl3, "1")).empty());
    const Mat g1 = gram_form(tl3, "1");
    CHECK(g1 == Mat::from_rows(f5, 2, {{dl, 1}, {1, dl}}));
    // det = delta^2 - 1 vanishes exactly at delta = +-1.
    const bool singular = delta == 1 || delta == 4;
    CHECK((rank(g1) == 1) == singular);
  }
}

TEST_CASE("simple labels from Gram forms agree with the algebra") {
  const CellDatum nonss = temperley_lieb(3, 1, f5);
  CHECK(simple_labels(nonss) == std::vector<std::string>{"1", "3"});
  CHECK(cell_simple(nonss, "1").dim() == 1);
  const AlgebraStructure st(cell_labelled_algebra(nonss));
  CHECK_NOTHROW(check_cell_simple_count(nonss, st));
  CHECK(st.radical().dim() > 0);

  const CellDatum ss = temperley_lieb(3, 2, f5);
  CHECK(simple_labels(ss) == std::vector<std::string>{"1", "3"});
  CHECK(cell_simple(ss, "1").dim() == 2);
  const AlgebraStructure sst(cell_labelled_algebra(ss));
  CHECK(sst.radical().dim() == 0);
  for (std::size_t i = 0; i < sst.count(); ++i) {
    CHECK(sst.simple(i).dim() == cell_module(ss, sst.labels()[i]).dim());
    CHECK(is_absolutely_simple(cell_module(ss, sst.labels()[i])));
  }
  // delta = 0: TL2 has a zero form on its only lower cell.
  CHECK(simple_labels(temperley_lieb(2, 0, f5)) == std::vector<std::string>{"2"});
  CHECK(rank(gram_form(temperley_lieb(3, 0, f5), "1")) == 2);
}

TEST_CASE("Murphy bases of symmetric group algebras") {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (std::size_t n : {3u, 4u}) {
      const CellDatum d = murphy_sym(n, Field::prime(p));
      const auto r = check_axioms(d);
      CHECK_MESSAGE(r.valid, "n=" << n << " p=" << p);
      const AlgebraStructure st(cell_labelled_algebra(d));
      CHECK_NOTHROW(check_cell_simple_count(d, st));
      // Same algebra as the group basis: equal radical dimension.
      const AlgebraStructure g(std::make_shared<const Algebra>(group_algebra_sym(n, Field::prime(p))));
      CHECK(st.radical().dim() == g.radical().dim());
    }
  }
  const CellDatum d = murphy_sym(3, Field::prime(3));
  CHECK(simple_labels(d) == std::vector<std::string>{"21", "111"});
  CHECK(d.poset.less("3", "21"));
  CHECK(d.poset.less("21", "111"));
}

TEST_CASE("corrupted cell data are named") {
  const CellDatum good = temperley_lieb(3, 1, f5);

  CellDatum c1 = good;
  c1.basis_index[4].basis = 3;
  const auto r1 = check_axioms(c1);
  CHECK_FALSE(r1.valid);
  CHECK(mentions(r1, "(C1)"));

  CellDatum c2 = good;
  c2.algebra = std::make_shared<const Algebra>(good.algebra->with_involution(Mat::identity(f5, 5)));
  const auto r2 = check_axioms(c2);
  CHECK_FALSE(r2.valid);
  CHECK(mentions(r2, "(C2)"));

  CellDatum c3 = murphy_sym(3, Field::prime(3));
  c3.poset = c3.poset.opposite();
  const auto r3 = check_axioms(c3);
  CHECK_FALSE(r3.valid);
  CHECK(mentions(r3, "(C3)"));
  CHECK_THROWS_AS(cell_chain(c3), ChainFailure);

  CellDatum c4 = good;
  c4.m_sets["1"].push_back("|||");
  CHECK(mentions(check_axioms(c4), "(C1)"));
}

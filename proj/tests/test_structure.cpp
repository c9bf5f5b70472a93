#include <algorithm>
#include <map>
#include <numeric>

#include "doctest.h"
#include "loewy/constructions.hpp"
#include "loewy/series.hpp"
#include "support.hpp"

using namespace loewy;

namespace {

AlgebraPtr ptr(Algebra a) { return std::make_shared<const Algebra>(std::move(a)); }

// Permutations of {0,..,n-1} in lexicographic order, composed as (gh)(i) = g(h(i)).
std::vector<std::vector<std::size_t>> perms(std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<std::size_t>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

TEST_CASE("symmetric group algebra multiplication table") {
  const Field f = Field::prime(3);
  const Algebra a = group_algebra_sym(3, f);
  const auto g = perms(3);
  REQUIRE(a.dim() == 6);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) {
      std::vector<std::size_t> prod(3);
      for (std::size_t x = 0; x < 3; ++x) prod[x] = g[i][g[j][x]];
      const std::size_t k = std::find(g.begin(), g.end(), prod) - g.begin();
      CHECK(a.mult(i, j) == unit_vector(6, k));
    }
  }
  CHECK(validate_algebra(a).valid);
  CHECK(group_algebra_sym(2, f).dim() == 2);
}

TEST_CASE("radical of GF(3)[S3] equals the intersection of maximal submodules") {
  const AlgebraStructure st(ptr(group_algebra_sym(3, Field::prime(3))));
  const auto oracle = testing::radical_by_maximal_submodules(Rep::regular(st.algebra()));
  CHECK(st.radical().dim() == 4);
  CHECK(testing::elements_of(st.radical()) == oracle);
}

TEST_CASE("radical of GF(2)[S3] and of small algebras by exhaustive search") {
  for (const auto& a : {ptr(group_algebra_sym(3, Field::prime(2))), ptr(truncated_polynomial(Field::prime(3))),
                        ptr(upper_triangular(3, Field::prime(2))), ptr(upper_triangular(2, Field::prime(3)))}) {
    const AlgebraStructure st(a);
    CHECK(testing::elements_of(st.radical()) == testing::radical_by_maximal_submodules(Rep::regular(a)));
  }
}

TEST_CASE("Maschke: semisimple group algebra in coprime characteristic") {
  const AlgebraStructure st(ptr(group_algebra_sym(3, Field::prime(5))));
  CHECK(st.radical().dim() == 0);
  CHECK(st.count() == 3);
  std::size_t sum = 0;
  for (std::size_t i = 0; i < st.count(); ++i) sum += st.simple(i).dim() * st.simple(i).dim();
  CHECK(sum == 6);
}

TEST_CASE("idempotents are orthogonal, primitive and sum to one") {
  for (const auto& a : {ptr(group_algebra_sym(3, Field::prime(3))), ptr(group_algebra_sym(4, Field::prime(2))),
                        schur_algebra_2r(3, Field::prime(3)).algebra, ptr(upper_triangular(3, Field::prime(5)))}) {
    const AlgebraStructure st(a);
    const Field& f = a->field();
    Vec total(a->dim(), 0);
    const auto& es = st.all_idempotents();
    for (std::size_t i = 0; i < es.size(); ++i) {
      CHECK(a->multiply(es[i], es[i]) == es[i]);
      for (std::size_t j = 0; j < es.size(); ++j) {
        if (i != j) CHECK(vec_is_zero(a->multiply(es[i], es[j])));
      }
      total = vec_add(f, total, es[i]);
    }
    CHECK(total == a->unit());
    std::size_t dims = 0;
    for (std::size_t i = 0; i < st.count(); ++i) {
      dims += st.pim(i).dim() * st.simple(i).dim();
      CHECK(is_absolutely_simple(st.simple(i)));
    }
    CHECK(dims == a->dim());
  }
}

TEST_CASE("simple names come from witnesses") {
  const AlgebraStructure p3(ptr(group_algebra_sym(3, Field::prime(3))));
  CHECK(p3.labels() == std::vector<std::string>{"sign", "triv"});
  const AlgebraStructure p2(ptr(group_algebra_sym(3, Field::prime(2))));
  CHECK(p2.labels() == std::vector<std::string>{"std", "triv"});
  CHECK(p2.simple(p2.index_of("std")).dim() == 2);
  CHECK_THROWS_AS(p2.index_of("sign"), UnknownLabel);
  const AlgebraStructure ut(ptr(upper_triangular(2, Field::prime(3))));
  CHECK(ut.labels() == std::vector<std::string>{"S0", "S1"});
}

TEST_CASE("non-split algebra is reported") {
  // GF(2)[C3] = GF(2)[x]/(x^3 - 1) has a simple factor GF(4).
  const Field f = Field::prime(2);
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) mult.push_back(unit_vector(3, (i + j) % 3));
  }
  const Algebra c3(f, {"1", "g", "g2"}, mult, unit_vector(3, 0));
  CHECK_THROWS_AS(AlgebraStructure(ptr(c3)), NotSplit);
  const AlgebraStructure split(ptr(extend_scalars(c3, Field::extension(2, {1, 1, 1}))));
  CHECK(split.count() == 3);
}

TEST_CASE("validate_algebra catches a perturbed structure constant") {
  const Algebra good = group_algebra_sym(3, Field::prime(3));
  CHECK(validate_algebra(good).valid);
  std::vector<Vec> mult;
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 6; ++j) mult.push_back(good.mult(i, j));
  }
  mult[3 * 6 + 4][2] = 1;
  const Algebra bad(good.field(), good.labels(), mult, good.unit(), good.involution());
  CHECK_FALSE(validate_algebra(bad).valid);
  const Algebra no_anti = good.with_involution(Mat::identity(good.field(), 6));
  CHECK_FALSE(validate_algebra(no_anti).valid);
}

TEST_CASE("rep operations") {
  const auto a = ptr(group_algebra_sym(3, Field::prime(3)));
  const AlgebraStructure st(a);
  const Rep reg = Rep::regular(a);
  CHECK(validate_rep(reg).empty());
  const Rep d = dual_sharp(reg);
  CHECK(validate_rep(d).empty());
  CHECK(is_isomorphic(dual_sharp(d), reg));
  // Group algebras are self-injective: P(triv)^# = I(triv) = P(triv).
  const std::size_t t = st.index_of("triv");
  CHECK(is_isomorphic(dual_sharp(st.pim(t)), st.pim(t)));
  for (const auto& h : hom_space(st.pim(t), reg)) CHECK(is_intertwiner(st.pim(t), reg, h));
  CHECK(hom_space(st.pim(t), reg).size() == 3);
  const Rep sum = direct_sum(st.simple(0), st.simple(1));
  CHECK(sum.dim() == 2);
  CHECK_FALSE(is_isomorphic(st.simple(0), st.simple(1)));
}

#include "loewy/rep.hpp"

#include <random>

namespace loewy {

Rep::Rep(AlgebraPtr algebra, std::vector<Mat> action) : algebra_(std::move(algebra)), action_(std::move(action)) {
  if (!algebra_) throw Error("Rep: null algebra");
  if (action_.size() != algebra_->dim()) throw DimensionMismatch("Rep: need one action matrix per basis element");
  dim_ = action_.empty() ? 0 : action_.front().rows();
  for (const auto& m : action_) {
    if (m.rows() != dim_ || m.cols() != dim_) throw DimensionMismatch("Rep: action matrices must be square of equal size");
    if (m.field() != algebra_->field()) throw DimensionMismatch("Rep: action over the wrong field");
  }
}

Rep Rep::regular(AlgebraPtr algebra) {
  std::vector<Mat> action;
  for (std::size_t i = 0; i < algebra->dim(); ++i) action.push_back(algebra->left_mult(i));
  return Rep(std::move(algebra), std::move(action));
}

Rep Rep::zero(AlgebraPtr algebra) {
  std::vector<Mat> action(algebra->dim(), Mat(algebra->field(), 0, 0));
  return Rep(std::move(algebra), std::move(action));
}

std::vector<Mat> Rep::generator_actions() const {
  std::vector<Mat> out;
  for (auto g : algebra_->generators()) out.push_back(action_[g]);
  return out;
}

Mat Rep::act(const Vec& element) const {
  Mat out(field(), dim_, dim_);
  for (std::size_t i = 0; i < element.size(); ++i) out.axpy(element[i], action_[i]);
  return out;
}

bool Rep::operator==(const Rep& other) const {
  return (algebra_ == other.algebra_ || *algebra_ == *other.algebra_) && action_ == other.action_;
}

std::vector<std::string> validate_rep(const Rep& m) {
  std::vector<std::string> problems;
  const Algebra& a = *m.algebra();
  if (m.act(a.unit()) != Mat::identity(a.field(), m.dim())) problems.push_back("unit does not act as identity");
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      if (m.action(i) * m.action(j) != m.act(a.mult(i, j))) {
        problems.push_back("action not multiplicative at (" + a.labels()[i] + ", " + a.labels()[j] + ")");
      }
    }
  }
  return problems;
}

Subspace generate_submodule(const Rep& m, const std::vector<Vec>& vectors) {
  const auto gens = m.generator_actions();
  return spin(m.field(), m.dim(), vectors, gens);
}

bool is_submodule(const Rep& m, const Subspace& u) {
  for (const auto& g : m.generator_actions()) {
    for (std::size_t i = 0; i < u.dim(); ++i) {
      if (!u.contains(g * u.vector(i))) return false;
    }
  }
  return true;
}

Rep submodule(const Rep& m, const Subspace& u) {
  return subquotient(m, u, Subspace(m.field(), m.dim()));
}

Rep quotient(const Rep& m, const Subspace& u) { return subquotient(m, Subspace::full(m.field(), m.dim()), u); }

Rep subquotient(const Rep& m, const Subspace& w, const Subspace& u) {
  if (w.ambient() != m.dim() || u.ambient() != m.dim()) throw DimensionMismatch("subquotient: ambient mismatch");
  std::vector<Vec> reduced;
  for (std::size_t i = 0; i < w.dim(); ++i) reduced.push_back(u.reduce(w.vector(i)));
  const Subspace top = Subspace::span(m.field(), m.dim(), reduced);
  std::vector<Mat> action;
  action.reserve(m.actions().size());
  for (const auto& a : m.actions()) {
    Mat x(m.field(), top.dim(), top.dim());
    for (std::size_t j = 0; j < top.dim(); ++j) {
      const Vec image = u.reduce(a * top.vector(j));
      if (!top.contains(image)) throw DimensionMismatch("subquotient: subspace is not a submodule");
      const Vec c = top.coordinates(image);
      for (std::size_t i = 0; i < top.dim(); ++i) x(i, j) = c[i];
    }
    action.push_back(std::move(x));
  }
  return Rep(m.algebra(), std::move(action));
}

Vec quotient_coordinates(const Subspace& u, const Vec& v) {
  const Vec r = u.reduce(v);
  std::vector<bool> pivot(u.ambient(), false);
  for (auto p : u.pivots()) pivot[p] = true;
  Vec out;
  out.reserve(u.ambient() - u.dim());
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (!pivot[j]) out.push_back(r[j]);
  }
  return out;
}

Subspace quotient_preimage(const Subspace& u, const Subspace& image) {
  std::vector<bool> pivot(u.ambient(), false);
  for (auto p : u.pivots()) pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < u.ambient(); ++j) {
    if (!pivot[j]) free.push_back(j);
  }
  if (image.ambient() != free.size()) throw DimensionMismatch("quotient_preimage: ambient mismatch");
  auto rows = u.vectors();
  for (std::size_t i = 0; i < image.dim(); ++i) {
    Vec lift(u.ambient(), 0);
    for (std::size_t t = 0; t < free.size(); ++t) lift[free[t]] = image.basis()(i, t);
    rows.push_back(std::move(lift));
  }
  return Subspace::span(u.field(), u.ambient(), rows);
}

Rep direct_sum(const Rep& a, const Rep& b) {
  if (*a.algebra() != *b.algebra()) throw DimensionMismatch("direct_sum: different algebras");
  std::vector<Mat> action;
  const std::size_t n = a.dim() + b.dim();
  for (std::size_t i = 0; i < a.actions().size(); ++i) {
    Mat x(a.field(), n, n);
    for (std::size_t r = 0; r < a.dim(); ++r) {
      for (std::size_t c = 0; c < a.dim(); ++c) x(r, c) = a.action(i)(r, c);
    }
    for (std::size_t r = 0; r < b.dim(); ++r) {
      for (std::size_t c = 0; c < b.dim(); ++c) x(a.dim() + r, a.dim() + c) = b.action(i)(r, c);
    }
    action.push_back(std::move(x));
  }
  return Rep(a.algebra(), std::move(action));
}

Rep dual_sharp(const Rep& m) {
  const Algebra& a = *m.algebra();
  const Mat& inv = a.involution();
  std::vector<Mat> action;
  action.reserve(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) action.push_back(m.act(inv.column(j)).transpose());
  return Rep(m.algebra(), std::move(action));
}

std::vector<Mat> hom_space(const Rep& m, const Rep& n) {
  if (*m.algebra() != *n.algebra()) throw DimensionMismatch("hom_space: modules over different algebras");
  const Field& f = m.field();
  const std::size_t dm = m.dim(), dn = n.dim();
  const auto gens = m.algebra()->generators();
  // X is dn x dm; unknown X_{ab} sits at column a*dm + b.
  Mat system(f, gens.size() * dn * dm, dn * dm);
  std::size_t row = 0;
  for (auto g : gens) {
    const Mat& pm = m.action(g);
    const Mat& pn = n.action(g);
    for (std::size_t i = 0; i < dn; ++i) {
      for (std::size_t j = 0; j < dm; ++j, ++row) {
        for (std::size_t b = 0; b < dm; ++b) {
          if (pm(b, j) != 0) system(row, i * dm + b) = f.add(system(row, i * dm + b), pm(b, j));
        }
        for (std::size_t a = 0; a < dn; ++a) {
          if (pn(i, a) != 0) system(row, a * dm + j) = f.sub(system(row, a * dm + j), pn(i, a));
        }
      }
    }
  }
  const Subspace sol = nullspace(system);
  std::vector<Mat> out;
  for (std::size_t i = 0; i < sol.dim(); ++i) out.push_back(unflatten(f, dn, dm, sol.vector(i)));
  return out;
}

bool is_intertwiner(const Rep& m, const Rep& n, const Mat& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (std::size_t i = 0; i < m.actions().size(); ++i) {
    if (f * m.action(i) != n.action(i) * f) return false;
  }
  return true;
}

std::optional<Mat> find_isomorphism(const Rep& m, const Rep& n) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Mat(m.field(), 0, 0);
  const auto forward = hom_space(m, n);
  if (forward.empty()) return std::nullopt;
  if (hom_space(n, m).size() != forward.size()) return std::nullopt;
  const Field& f = m.field();
  auto invertible = [&](const Mat& x) { return rank(x) == m.dim(); };
  const std::size_t r = forward.size();
  double combos = 1;
  for (std::size_t i = 0; i < r; ++i) combos *= f.order();
  if (combos <= 20000) {
    // Enumerate every combination of the Hom basis.
    std::vector<Elem> coeff(r, 0);
    for (;;) {
      std::size_t pos = 0;
      while (pos < r && coeff[pos] == f.order() - 1) coeff[pos++] = 0;
      if (pos == r) break;
      ++coeff[pos];
      Mat x(f, n.dim(), m.dim());
      for (std::size_t i = 0; i < r; ++i) x.axpy(coeff[i], forward[i]);
      if (invertible(x)) return x;
    }
    return std::nullopt;
  }
  std::mt19937 rng(0x5eed);
  std::uniform_int_distribution<Elem> pick(0, f.order() - 1);
  for (int attempt = 0; attempt < 4000; ++attempt) {
    Mat x(f, n.dim(), m.dim());
    for (std::size_t i = 0; i < r; ++i) x.axpy(pick(rng), forward[i]);
    if (invertible(x)) return x;
  }
  return std::nullopt;
}

bool is_isomorphic(const Rep& m, const Rep& n) { return find_isomorphism(m, n).has_value(); }

bool is_absolutely_simple(const Rep& m) {
  if (m.dim() == 0) return false;
  std::vector<Vec> flat;
  for (const auto& a : m.actions()) flat.push_back(flatten(a));
  return Subspace::span(m.field(), m.dim() * m.dim(), flat).dim() == m.dim() * m.dim();
}

}  // namespace loewy
